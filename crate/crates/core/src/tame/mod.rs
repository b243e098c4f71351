//! Structure theory of Kronecker modules: the catalog, τ, torsion, tubes and towers.

pub mod almost_split;
pub mod catalog;
pub mod symbolic;
pub mod tau;
pub mod torsion;
pub mod tower;
pub mod tube;

pub use catalog::{kron_preinjective, kron_preprojective, kron_regular, CatalogLabel, TubePoint};
pub use tau::{
    classify, classify_by_tau, projective_presentation, tau_minus, tau_minus_nilpotence, tau_nilpotence,
    transpose_dual_tau, Class,
};
pub use torsion::{preinjective_filtration, preinjective_part, torsion_split, SplitPart, TorsionSplit};
pub use tower::{adic_tower, prufer_tower, AdicTower, PrueferTower};
pub use tube::{catalog_label_of, tube_group, tube_point};
pub use almost_split::{ar_sequence, factors_through_middle, is_brick, ArSequence};
pub use symbolic::{probe_hom, symbolic_decompose, Block, Multiplicity, Probe, SymbolicModule, SymbolicReport};
