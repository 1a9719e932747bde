//! The dual action on polynomials: the space of polynomials vanishing at
//! shifted triples, its basis built from the maximally crossed state, and
//! the identities tying it to the tangle module.

mod basis;
mod duality;
mod ops;
mod pfaffian;
mod property;
mod special;
mod yang_baxter;

pub use basis::{basis_checks, generate_basis, reference_n4, rho_bar, untwist, DualityVector};
pub use duality::{dual_images, dual_rows, verify_duality, DualImages};
pub use ops::{
    brauer_ebar, default_route, divided_difference, e_prime, exchange, fbar1, is_symmetric, sigma_bar, split_pair, tbar_inverse,
    tbar_route, AffineHecke, BEigen, Flavor, MinusP, PlusInverseP, TbarRoute, TBAR_ROUTES,
};
pub use property::{
    check_property_p, describe_failures, expected_highest, highest_monomial, highest_monomial_check, matched_divisibility,
    independence_check, numeric_rank, property_failures, property_failures_with, TripleConstraint,
};

pub use pfaffian::{pfaffian_checks, pfaffian_state};
pub use special::{
    at_cyclic_point, cyclic_sum_check, cyclic_v_block_check, decompose, decomposition_check, ebar_apply, reassembled_pieces, sn_components,
    sn_factorization_check, sn_factorized, tl_collapse_check,
};

pub(crate) use yang_baxter::specialize_matrix;
pub use yang_baxter::{
    braid_check, contraction_factor, exchange_check, normalization, unitarity_symbolic, yang_baxter_matrix, ExchangeOutcome,
};

#[cfg(test)]
mod tests;
