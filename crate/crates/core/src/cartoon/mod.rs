//! Cartoon-like images: `f = f0 + f1 · 1_B` with smooth parts `f0, f1` and a
//! star-shaped discontinuity set `B`.

mod holder;
mod raster;
mod smooth;
mod star;

pub use holder::{holder_seminorm, holder_seminorm_2d};
pub use raster::rasterize;
pub use smooth::{SmoothField, TrigTerm};
pub use star::{random_star_domain, StarDomain, CHECK_SAMPLES};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CartoonSpec {
    pub domain: StarDomain,
    pub f0: SmoothField,
    pub f1: SmoothField,
    /// Binary cartoon `1_B`; overrides `f0` and `f1`.
    pub binary: bool,
    /// Seed the spec was drawn from, if random.
    #[serde(default)]
    pub seed: Option<u64>,
}

impl CartoonSpec {
    pub fn binary(domain: StarDomain) -> Self {
        let beta = domain.gamma;
        let nu = domain.nu;
        CartoonSpec {
            domain,
            f0: SmoothField::constant(0.0, beta, nu),
            f1: SmoothField::constant(1.0, beta, nu),
            binary: true,
            seed: None,
        }
    }

    /// Binary disk `1_{|x - c| <= r}` with `γ = β = 2`.
    pub fn binary_disk(center: [f64; 2], radius: f64) -> Self {
        Self::binary(StarDomain::disk(center, radius, 2.0, 1.0))
    }

    /// Random member of the cartoon class from one seed: the domain uses
    /// `seed`, the smooth parts use `seed + 1` and `seed + 2`.
    pub fn random(beta: f64, gamma: f64, nu: f64, seed: u64, binary: bool) -> Result<Self> {
        let domain = random_star_domain(gamma, nu, seed)?;
        let mut spec = if binary {
            Self::binary(domain)
        } else {
            CartoonSpec {
                domain,
                f0: SmoothField::random(beta, nu, seed.wrapping_add(1), 6, 3)?,
                f1: SmoothField::random(beta, nu, seed.wrapping_add(2), 6, 3)?,
                binary: false,
                seed: None,
            }
        };
        spec.seed = Some(seed);
        if binary {
            spec.f0.beta = beta;
            spec.f1.beta = beta;
        }
        spec.validate()?;
        Ok(spec)
    }

    pub fn value(&self, x: [f64; 2]) -> f64 {
        let inside = self.domain.contains(x);
        if self.binary {
            return if inside { 1.0 } else { 0.0 };
        }
        let base = self.f0.eval(x);
        if inside {
            base + self.f1.eval(x)
        } else {
            base
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.domain.validate()?;
        if self.f0.beta != self.f1.beta {
            return Err(Error::InvalidInput(format!(
                "smooth parts disagree on beta: {} vs {}",
                self.f0.beta, self.f1.beta
            )));
        }
        if !self.binary {
            self.f0.validate()?;
            self.f1.validate()?;
        }
        Ok(())
    }
}

pub fn boundary_points(domain: &StarDomain, n: usize) -> Result<Vec<[f64; 2]>> {
    if n < 3 {
        return Err(Error::InvalidInput(format!("need at least 3 boundary points, got {n}")));
    }
    Ok(domain.boundary_points(n))
}
