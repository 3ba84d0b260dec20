//! Numerical checks of the decay laws behind the approximation rates:
//! wedge and radial-slice energies of edge images, the a-priori ℓ¹ bound of
//! the atoms and the hypercube families that cap any achievable rate.

mod apriori;
mod hypercube;
mod images;
mod slice;
mod wedge;

pub use apriori::{apriori_bound_check, atom_l1_norm, AprioriBound};
pub use hypercube::{
    bump, copy_of_lp_check, hypercube_csv, hypercube_family, CopyVerdict, FamilySize,
    HypercubeFamily,
};
pub use images::{gaussian_bump, straight_edge_image, unit_window};
pub use slice::{
    ndft, radial_slice_energy, slice_directions, slice_table, slices_to_csv, SliceEnergy,
    SLICE_DENSITY,
};
pub use wedge::{wedge_energy_table, WedgeEnergy, WedgeEnergyTable};
