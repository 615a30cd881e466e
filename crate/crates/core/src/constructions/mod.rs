//! Algebra constructions: the coinduced functor on module algebras, adjoint
//! and coregular actions, smash products with the `φ`-transport, dual
//! pairings, Heisenberg and Drinfeld doubles.

mod double;
mod rb;
mod smash;

pub use double::{double_iso_uqsl2, uqsl2, Bosonization, DoubleModule, DrinfeldDouble, IsoReport};
pub use rb::{adjoint_algebra, h_module_tensor, rb_algebra, rb_module, tau, unit_module_algebra, HModule};
pub use smash::{
    braided_opposite, coregular_module, heisenberg_double, heisenberg_product_formula, phi_maps, smash_kmodule,
    smash_product, transported_yd, transported_yd_closed_form, DualPairing,
};
