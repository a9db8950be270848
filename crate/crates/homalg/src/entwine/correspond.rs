//! The dual-basis bijection between entwining maps and cotwistors.
//!
//! With `B = (A*)^cop`, an entwining `Φ : H ⊗ A -> A ⊗ H` and a cotwistor
//! `φ : B ⊗ H -> H ⊗ B` determine each other through the dual bases:
//!
//! ```text
//! Φ(h ⊗ a) = Σ_i (e^i)^φ(a) e_i ⊗ h^φ
//! φ(f ⊗ h) = Σ_i f((e_i)_Φ) h^Φ ⊗ e^i
//! ```
//!
//! On matrices these are mutually inverse index permutations, so the round
//! trips are exact. The bijection pairs the axioms index by index:
//! `E_k` holds iff `M_k` holds, and likewise for the automorphism
//! compatibilities.

use super::{BialgebraEntwining, EntwiningMap};
use crate::error::{Error, Result};
use crate::hom::{dual_bialgebra, dual_coalgebra, HomAlgebra};
use crate::linmap::LinearMap;
use crate::smash::{BialgebraCotwistor, Cotwistor};

fn phi_from_entwining_matrix(big_phi: &LinearMap, dh: usize, da: usize) -> LinearMap {
    // φ[(h_out, i)][(k, h_in)] = Φ[(k, h_out)][(h_in, i)]
    LinearMap::from_fn(dh * da, da * dh, |row, col| {
        let (h_out, i) = (row / da, row % da);
        let (k, h_in) = (col / dh, col % dh);
        big_phi.entry(k * dh + h_out, h_in * da + i).clone()
    })
}

fn entwining_matrix_from_phi(phi: &LinearMap, dh: usize, da: usize) -> LinearMap {
    // Φ[(a_out, h_out)][(h_in, a_in)] = φ[(h_out, a_in)][(a_out, h_in)]
    LinearMap::from_fn(da * dh, dh * da, |row, col| {
        let (a_out, h_out) = (row / dh, row % dh);
        let (h_in, a_in) = (col / da, col % da);
        phi.entry(h_out * da + a_in, a_out * dh + h_in).clone()
    })
}

/// The cotwistor on `(A*)^cop ⊗ H` induced by an entwining map.
pub fn cotwistor_from_entwining(e: &EntwiningMap) -> Result<Cotwistor> {
    let b = dual_coalgebra(&e.a)?;
    let phi = phi_from_entwining_matrix(&e.phi, e.h.dim(), e.a.dim());
    Cotwistor::new(b, e.h.clone(), phi)
}

/// Bialgebra version, with `B = (A*)^cop` as a Hom-bialgebra.
pub fn cotwistor_from_entwining_monoidal(e: &BialgebraEntwining) -> Result<BialgebraCotwistor> {
    let b = dual_bialgebra(&e.a)?;
    let phi = phi_from_entwining_matrix(&e.phi, e.h.dim(), e.a.dim());
    BialgebraCotwistor::new(b, e.h.clone(), phi)
}

/// The entwining map recovered from a cotwistor whose `B` is presented as
/// the dual of `a`. Errors when `B` does not equal `(a*)^cop` exactly.
pub fn entwining_from_cotwistor(c: &Cotwistor, a: &HomAlgebra) -> Result<EntwiningMap> {
    let expected = dual_coalgebra(a)?;
    if c.b != expected {
        return Err(Error::pre(
            "cotwistor source is not the dual coalgebra of the given algebra",
        ));
    }
    let phi = entwining_matrix_from_phi(&c.phi, c.h.dim(), a.dim());
    EntwiningMap::new(c.h.clone(), a.clone(), phi)
}

/// Bialgebra version of [`entwining_from_cotwistor`].
pub fn entwining_from_cotwistor_monoidal(
    c: &BialgebraCotwistor,
    a: &crate::hom::HomBialgebra,
) -> Result<BialgebraEntwining> {
    let expected = dual_bialgebra(a)?;
    if c.b != expected {
        return Err(Error::pre(
            "cotwistor source is not the dual bialgebra of the given bialgebra",
        ));
    }
    let phi = entwining_matrix_from_phi(&c.phi, c.h.dim(), a.dim());
    BialgebraEntwining::new(c.h.clone(), a.clone(), phi)
}
