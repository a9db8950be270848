//! Finite-dimensional duality with the co-opposite twist.
//!
//! For a Hom-algebra `A`, the dual space with basis `e^i` carries a
//! Hom-coalgebra structure: counit `f ↦ f(1)`, comultiplication
//! `Δ(f)(x ⊗ y) = f(α^{-2}(yx))` (note the reversed product), and
//! automorphism `f ↦ f ∘ α^{-1}`. For a Hom-bialgebra the dual gains the
//! convolution product `(f * g)(y) = f(α^{-2}(y1)) g(α^{-2}(y2))` with unit
//! ε, making it a Hom-bialgebra again.

use super::{HomAlgebra, HomBialgebra, HomCoalgebra, ObjectWithAut};
use crate::error::Result;
use crate::linmap::flip;

/// The dual Hom-coalgebra of a Hom-algebra (co-opposite convention).
pub fn dual_coalgebra(a: &HomAlgebra) -> Result<HomCoalgebra> {
    let d = a.dim();
    let carrier = ObjectWithAut::new(a.carrier.alpha_inv().transpose())?;
    let alpha_m2 = a.carrier.alpha_pow(-2);
    // Δ(e^k) entries: coefficient of e^i ⊗ e^j is e^k(α^{-2}(e_j e_i)).
    let comult = alpha_m2.compose(&a.mult)?.compose(&flip(d, d))?.transpose();
    let counit = a.unit.transpose();
    HomCoalgebra::new(carrier, comult, counit)
}

/// The dual Hom-bialgebra of a Hom-bialgebra (co-opposite convention).
pub fn dual_bialgebra(b: &HomBialgebra) -> Result<HomBialgebra> {
    let coalgebra = dual_coalgebra(&b.algebra)?;
    let alpha_m2 = b.carrier().alpha_pow(-2);
    // (e^i * e^j)(e_k) = (α^{-2} ⊗ α^{-2})(Δ(e_k)) paired with (i, j).
    let mult = alpha_m2.kron(&alpha_m2).compose(b.comult())?.transpose();
    let unit = b.counit().transpose();
    let algebra = HomAlgebra::new(coalgebra.carrier.clone(), mult, unit)?;
    HomBialgebra::new(algebra, coalgebra)
}
