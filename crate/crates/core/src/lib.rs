//! Computational toolkit for GT-shadows with dihedral targets: reduced words
//! in a free group of rank 2, the groups `G_n <= D_n^3` and their commutator
//! subgroups, enumeration and composition of shadows, the poset of dihedral
//! targets, structure decompositions, Lochak–Schneps witnesses, and 2-adic
//! truncations of the limit over the dihedral tower.

pub mod dihedral;
pub mod error;
pub mod lochak_schneps;
pub mod poset;
pub mod profinite;
pub mod shadow;
pub mod structure;
pub mod word;

pub use dihedral::{
    bfs_closure, comm_membership, comm_word, gn_decompose, gn_membership, gn_order, gn_tau,
    gn_theta, lemma_witness, psi_eval, CommTriple, DihElt, DihTriple, Eps,
};
pub use error::{GroupError, ParseWordError, ProfiniteError, ShadowError};
pub use lochak_schneps::{ls_exists_brute, ls_verify, ls_witness, LsCase};
pub use poset::{canonicalize, fiber_report, poset_leq, reduce_shadow};
pub use profinite::{
    aff_inv, aff_mul, ftilde_membership, generator_closure, project, psi_map, shadow_to_trunc,
    tower_build, tower_check, unit_decompose, AffTrunc, Tower,
};
pub use shadow::{
    compose, enumerate_brute, enumerate_closed, hexagon_check, inverse, kappa, Shadow,
    DEFAULT_BOUND,
};
pub use structure::{
    arith_lower_bound, hn_membership, index_pb3, nu, rho, rho_inv, structure_of, AffCoord,
    StructureDescriptor,
};
pub use word::{Gen, Word};
