use std::f64::consts::PI;
use std::sync::OnceLock;

use alpha_curvelets::analysis::{hypercube_family, radial_slice_energy, wedge_energy_table};
use alpha_curvelets::approx::{
    decreasing_moduli, weak_tail_constant, nterm_error_curve, tail_energies, threshold_top_n,
    weak_lp_norm,
};
use alpha_curvelets::cartoon::{rasterize, CartoonSpec};
use alpha_curvelets::io::{grid_from_bytes, grid_to_bytes, read_coefficients, write_coefficients};
use alpha_curvelets::{Frame, FrameParams, Grid};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::sample::subsequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

const ALPHAS: [f64; 4] = [0.5, 0.6, 0.75, 0.9];

fn cached_frame(alpha_idx: usize, size: usize) -> &'static Frame {
    static FRAMES: OnceLock<Vec<Frame>> = OnceLock::new();
    let frames = FRAMES.get_or_init(|| {
        [32, 64]
            .iter()
            .flat_map(|&m| ALPHAS.iter().map(move |&a| Frame::new(FrameParams::new(a, m).unwrap()).unwrap()))
            .collect()
    });
    &frames[alpha_idx + if size == 32 { 0 } else { 4 }]
}

fn grid(size: usize, seed: u64, complex: bool) -> Grid {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let values = (0..size * size)
        .map(|_| {
            let im = if complex { rng.gen_range(-1.0..1.0) } else { 0.0 };
            Complex64::new(rng.gen_range(-1.0..1.0), im)
        })
        .collect();
    Grid::from_complex(size, values).unwrap()
}

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig { cases, ..ProptestConfig::default() }
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn weak_lp_is_permutation_invariant_and_homogeneous(
        seq in prop::collection::vec(-10.0f64..10.0, 1..200),
        perm_seed in any::<u64>(),
        t in 0.01f64..100.0,
        p in 0.3f64..2.0,
    ) {
        let base = weak_lp_norm(&seq, p).unwrap();
        let mut shuffled = seq.clone();
        let mut rng = ChaCha20Rng::seed_from_u64(perm_seed);
        for i in (1..shuffled.len()).rev() {
            shuffled.swap(i, rng.gen_range(0..=i));
        }
        prop_assert_eq!(weak_lp_norm(&shuffled, p).unwrap(), base);
        let scaled: Vec<f64> = seq.iter().map(|v| t * v).collect();
        prop_assert!((weak_lp_norm(&scaled, p).unwrap() - t * base).abs() <= 1e-12 * t * base.max(1e-300));
    }

    #[test]
    fn weak_tail_bound_holds(
        seq in prop::collection::vec(0.0f64..1.0, 1..400),
        k in prop::sample::select(vec![0.5, 1.0, 1.5, 2.0]),
    ) {
        let p = 2.0 / (2.0 * k + 1.0);
        let a = weak_lp_norm(&seq, p).unwrap();
        let sorted = decreasing_moduli(&seq);
        let tail = tail_energies(&sorted);
        let c = weak_tail_constant(a, k);
        for n in 1..=sorted.len() {
            prop_assert!(tail[n] <= c * (n as f64).powf(-2.0 * k) * (1.0 + 1e-12) + 1e-300);
        }
    }

    #[test]
    fn refinement_consistency(seed in any::<u64>(), binary in any::<bool>()) {
        let spec = CartoonSpec::random(2.0, 2.0, 1.0, seed, binary).unwrap();
        spec.validate().unwrap();
        let fine = rasterize(&spec, 64, 1).unwrap();
        let coarse = rasterize(&spec, 32, 2).unwrap();
        if binary {
            prop_assert!(fine.values().iter().all(|v| v.re == 0.0 || v.re == 1.0));
        }
        for n1 in 0..32 {
            for n2 in 0..32 {
                let avg = (fine.get(2 * n1, 2 * n2) + fine.get(2 * n1 + 1, 2 * n2)
                    + fine.get(2 * n1, 2 * n2 + 1) + fine.get(2 * n1 + 1, 2 * n2 + 1)) / 4.0;
                prop_assert!((avg - coarse.get(n1, n2)).norm() <= 1e-15);
            }
        }
        prop_assert_eq!(rasterize(&spec, 32, 2).unwrap(), coarse);
    }

    #[test]
    fn grid_files_round_trip(seed in any::<u64>(), complex in any::<bool>(), log_m in 0u32..6) {
        let g = grid(1 << log_m, seed, complex);
        let bytes = grid_to_bytes(&g).unwrap();
        let back = grid_from_bytes(&bytes).unwrap();
        prop_assert_eq!(&back, &g);
        prop_assert_eq!(grid_to_bytes(&back).unwrap(), bytes);
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn parseval_reconstruction_adjointness(
        a in 0usize..4,
        big in any::<bool>(),
        seed in any::<u64>(),
        complex in any::<bool>(),
    ) {
        let m = if big { 64 } else { 32 };
        let frame = cached_frame(a, m);
        let f = grid(m, seed, complex);
        let c = frame.analyze(&f).unwrap();
        let n2 = f.norm_sqr();
        prop_assert!((c.energy() - n2).abs() <= 1e-10 * n2);
        prop_assert!(f.distance(&frame.synthesize(&c).unwrap()) <= 1e-10 * n2.sqrt());

        // ⟨Tf, c'⟩ = ⟨f, T*c'⟩ for coefficients c' of another grid, perturbed off the range.
        let mut other = frame.analyze(&grid(m, seed ^ 0xABCD, true)).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        for b in &mut other.blocks {
            for v in &mut b.data {
                *v += Complex64::new(rng.gen_range(-0.1..0.1), rng.gen_range(-0.1..0.1));
            }
        }
        let lhs = c.inner(&other).unwrap();
        let rhs = f.inner(&frame.synthesize(&other).unwrap());
        prop_assert!((lhs - rhs).norm() <= 1e-10 * (n2 * other.energy()).sqrt());

        if !complex {
            let worst = c.blocks.iter().flat_map(|b| &b.data).map(|v| v.im.abs()).fold(0.0, f64::max);
            prop_assert!(worst <= 1e-12 * n2.sqrt());
        }
    }

    #[test]
    fn thresholding_beats_random_subsets(seed in any::<u64>(), n in 1usize..400, a in 0usize..4) {
        let frame = cached_frame(a, 32);
        let c = frame.analyze(&grid(32, seed, false)).unwrap();
        let kept = threshold_top_n(&c, n).energy();
        let moduli: Vec<f64> = c.blocks.iter().flat_map(|b| &b.data).map(|v| v.norm_sqr()).collect();
        let mut rng = ChaCha20Rng::seed_from_u64(seed.rotate_left(17));
        for _ in 0..8 {
            let picked = rand::seq::index::sample(&mut rng, moduli.len(), n);
            let other: f64 = picked.iter().map(|i| moduli[i]).sum();
            prop_assert!(c.energy() - kept <= c.energy() - other + 1e-12);
        }
    }

    #[test]
    fn wedge_energies_are_translation_invariant(
        seed in any::<u64>(),
        s1 in 0usize..64,
        s2 in 0usize..64,
        j in 1u32..=4,
    ) {
        let frame = cached_frame(0, 64);
        let f = grid(64, seed, false);
        let a = wedge_energy_table(&f, frame, j).unwrap();
        let b = wedge_energy_table(&f.shifted(s1, s2), frame, j).unwrap();
        for (x, y) in a.wedges.iter().zip(&b.wedges) {
            prop_assert!((x.energy - y.energy).abs() <= 1e-10 * a.band_energy.max(1e-300));
        }
        prop_assert!(a.total() <= a.band_energy + 1e-10);
    }

    #[test]
    fn slices_follow_quarter_rotations(seed in any::<u64>(), eta in -PI / 2.0..PI / 2.0, j in 1u32..=3) {
        let f = grid(16, seed, false);
        let mut g = f.clone();
        let mut shift = 0.0;
        for _ in 0..4 {
            let a = radial_slice_energy(&f, eta, j).unwrap();
            let b = radial_slice_energy(&g, eta + shift, j).unwrap();
            prop_assert!((a - b).abs() <= 1e-10 * a);
            g = g.rotated_quarter();
            shift += PI / 2.0;
        }
    }

    #[test]
    fn coefficient_files_round_trip(seed in any::<u64>(), a in 0usize..4) {
        let frame = cached_frame(a, 32);
        let c = frame.analyze(&grid(32, seed, seed % 2 == 0)).unwrap();
        let mut bytes = Vec::new();
        write_coefficients(&mut bytes, &c).unwrap();
        let back = read_coefficients(bytes.as_slice(), frame).unwrap();
        prop_assert_eq!(&back, &c);
        let mut again = Vec::new();
        write_coefficients(&mut again, &back).unwrap();
        prop_assert_eq!(&again, &bytes);
        // A file written for one frame is rejected by another.
        prop_assert!(read_coefficients(bytes.as_slice(), cached_frame((a + 1) % 4, 32)).is_err());
    }

    #[test]
    fn error_curve_starts_at_image_energy(seed in any::<u64>(), keep in subsequence((1usize..=2000).collect::<Vec<_>>(), 1..6)) {
        let frame = cached_frame(1, 32);
        let f = grid(32, seed, false);
        let mut ns = vec![0];
        ns.extend(keep);
        let curve = nterm_error_curve(&f, frame, &ns).unwrap();
        prop_assert!((curve.points[0].err2 - f.norm_sqr() / 1024.0).abs() <= 1e-12 * f.norm_sqr());
        for p in &curve.points {
            prop_assert!(p.err2 <= p.tail * (1.0 + 1e-9) + 1e-15);
        }
    }

    #[test]
    fn hypercube_atoms_are_orthogonal(beta in 1.1f64..=2.0, log_k in 1u32..5, i in any::<(u16, u16, u16, u16)>()) {
        let fam = hypercube_family(beta, 1 << log_k, 1.0).unwrap();
        let k = fam.k;
        let a = (i.0 as usize % k, i.1 as usize % k);
        let b = (i.2 as usize % k, i.3 as usize % k);
        if a != b {
            prop_assert_eq!(fam.inner(a, b, 1 << 10), 0.0);
        }
        let want = (k as f64).powf(-beta - 1.0) * fam.base_norm;
        prop_assert!((fam.norm(a, 1 << 12) - want).abs() <= 1e-8 * want);
    }
}

#[test]
fn analysis_is_independent_of_thread_count() {
    let frame = cached_frame(0, 64);
    let f = grid(64, 5, false);
    let single = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let many = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let a = single.install(|| frame.analyze(&f).unwrap());
    let b = many.install(|| frame.analyze(&f).unwrap());
    assert_eq!(a, b);
    let ga = single.install(|| frame.synthesize(&a).unwrap());
    let gb = many.install(|| frame.synthesize(&b).unwrap());
    assert_eq!(ga, gb);
}
