//! The rational limit: link patterns with crossings ignored, additive
//! spectral variables `u_i` and the forms `b_ij = u_i - u_j + b` with
//! `u_{i+n} = u_i + c + 2b`. Polynomial operators are shared with the
//! multiplicative case through [`Flavor::brauer`](crate::polyrep::Flavor::brauer).

mod checks;
mod link;
mod yang_baxter;

pub use checks::{
    brauer_highest_monomial_check, brauer_property_p, brauer_rho_bar, degenerate_affine_check, ebar_projector_check,
    expected_brauer_top, rho4_reference, top_form,
};
pub use link::{brauer_relation_suite, link_generators};
pub use yang_baxter::{brauer_braid_check, brauer_exchange_check, brauer_unitarity_symbolic, brauer_yang_baxter_matrix};

#[cfg(test)]
mod tests;
