//! Coloured Fock spaces over a graded Frobenius algebra.
//!
//! Sign convention: `𝔮_n` with `n > 0` creates, `𝔮_{−n}` annihilates, and
//! `[𝔮_{−n}(α), 𝔮_n(β)] = −n ∫αβ`, so `[𝔮_n(α), 𝔮_m(β)] = n δ_{n+m} ∫αβ`.

mod algebra;
mod classes;
mod operator;
mod space;
mod verify;

pub use algebra::{
    abelian_surface_model, affine_plane_model, builtin_model, p1p1_model, p2_model, point_model, Element,
    FrobeniusAlgebra, ModelJson,
};
pub use classes::{b_class, chern_series, exp_creation};
pub use operator::{
    affine_boundary, boundary_operator, coords, fock_form, normal_order, normal_order_word, q_mode,
    supercommutator_apply, virasoro, w_operator, BoundaryModel, FockOperator, ModeOp,
};
pub use space::{FockSpace, FockVector, Monomial};
pub use verify::{verify_fock_heisenberg, verify_virasoro};
