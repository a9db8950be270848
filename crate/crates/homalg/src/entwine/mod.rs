//! Entwining structures between a Hom-coalgebra and a Hom-algebra.
//!
//! An entwining map `Φ : H ⊗ A -> A ⊗ H` (written `Φ(h ⊗ a) = Σ a_Φ ⊗ h^Φ`)
//! commutes with the automorphisms and satisfies
//!
//! ```text
//! E1: Σ a_Φ b_Ψ ⊗ α_H(h^{ΦΨ}) = Σ (ab)_Φ ⊗ (α_H h)^Φ
//! E2: Σ (α_A a)_{ΨΦ} ⊗ h1^Φ ⊗ h2^Ψ = Σ α_A(a_Φ) ⊗ (h^Φ)1 ⊗ (h^Φ)2
//! E3: Σ ε_H(h^Φ) a_Φ = ε_H(h) a
//! E4: Σ (1_A)_Φ ⊗ h^Φ = 1_A ⊗ h
//! ```
//!
//! For Hom-bialgebra inputs the monoidal pair E5-E6 makes the datum a
//! monoidal entwining datum, which is exactly when tensor products of
//! entwined modules stay entwined.
//!
//! Entwining maps are in bijection with cotwistors on `(A*)^cop ⊗ H`
//! through the dual bases ([`correspond`]); the smash coproduct on that
//! carrier is the codouble of the entwining ([`codouble()`]).

pub mod codouble;
pub mod correspond;
pub mod modules;

pub use codouble::{
    codouble, codouble_bialgebra, module_to_smash_comodule, smash_comodule_to_module,
};
pub use correspond::{
    cotwistor_from_entwining, cotwistor_from_entwining_monoidal, entwining_from_cotwistor,
    entwining_from_cotwistor_monoidal,
};
pub use modules::{
    canonical_module_ah, canonical_module_ha, check_entwined_module, hopf_module_entwining,
    tensor_entwined, tensor_entwined_unchecked, EntwinedModule,
};

use crate::chain::{compare_chains, Chain};
use crate::error::{Error, Result};
use crate::hom::{HomAlgebra, HomBialgebra, HomCoalgebra};
use crate::linmap::{flip, LinearMap};
use crate::report::CheckReport;

/// An entwining-map candidate between a Hom-coalgebra and a Hom-algebra.
#[derive(Clone, Debug)]
pub struct EntwiningMap {
    pub h: HomCoalgebra,
    pub a: HomAlgebra,
    /// `Φ : H ⊗ A -> A ⊗ H`, a `(dA·dH) x (dH·dA)` matrix.
    pub phi: LinearMap,
}

impl EntwiningMap {
    pub fn new(h: HomCoalgebra, a: HomAlgebra, phi: LinearMap) -> Result<Self> {
        let (dh, da) = (h.dim(), a.dim());
        if phi.rows() != da * dh || phi.cols() != dh * da {
            return Err(Error::dims(
                "entwining map",
                phi.shape(),
                format!("{}x{}", da * dh, dh * da),
            ));
        }
        Ok(EntwiningMap { h, a, phi })
    }

    /// The flip `h ⊗ a ↦ a ⊗ h`.
    pub fn flip(h: HomCoalgebra, a: HomAlgebra) -> Self {
        let phi = flip(h.dim(), a.dim());
        EntwiningMap { h, a, phi }
    }
}

/// An entwining candidate between two Hom-bialgebras (for E5-E6).
#[derive(Clone, Debug)]
pub struct BialgebraEntwining {
    pub h: HomBialgebra,
    pub a: HomBialgebra,
    pub phi: LinearMap,
}

impl BialgebraEntwining {
    pub fn new(h: HomBialgebra, a: HomBialgebra, phi: LinearMap) -> Result<Self> {
        let (dh, da) = (h.dim(), a.dim());
        if phi.rows() != da * dh || phi.cols() != dh * da {
            return Err(Error::dims(
                "entwining map",
                phi.shape(),
                format!("{}x{}", da * dh, dh * da),
            ));
        }
        Ok(BialgebraEntwining { h, a, phi })
    }

    pub fn flip(h: HomBialgebra, a: HomBialgebra) -> Self {
        let phi = flip(h.dim(), a.dim());
        BialgebraEntwining { h, a, phi }
    }

    /// Forget the bialgebra structure down to the entwining datum.
    pub fn plain(&self) -> EntwiningMap {
        EntwiningMap {
            h: self.h.coalgebra.clone(),
            a: self.a.algebra.clone(),
            phi: self.phi.clone(),
        }
    }
}

/// Automorphism compatibility and E1-E4, on all basis pairs.
pub fn check_entwining(e: &EntwiningMap) -> CheckReport {
    let (dh, da) = (e.h.dim(), e.a.dim());
    let (id_h, id_a) = (LinearMap::identity(dh), LinearMap::identity(da));
    let (alpha_h, alpha_a) = (e.h.alpha(), e.a.alpha());
    let phi = &e.phi;
    let mut report = CheckReport::new(format!("entwining ({dh}x{da})"));

    let lhs = Chain::start(dh * da)
        .then_factors(&[alpha_h, alpha_a])
        .then(phi);
    let rhs = Chain::start(dh * da)
        .then(phi)
        .then_factors(&[alpha_a, alpha_h]);
    report.push(compare_chains("alpha_compat", &lhs, &rhs, &[dh, da]));

    // E1: (μ_A ⊗ α_H)∘(id ⊗ Φ)∘(Φ ⊗ id) = Φ∘(α_H ⊗ μ_A)
    let lhs = Chain::start(dh * da * da)
        .then_factors(&[phi, &id_a])
        .then_factors(&[&id_a, phi])
        .then_factors(&[&e.a.mult, alpha_h]);
    let rhs = Chain::start(dh * da * da)
        .then_factors(&[alpha_h, &e.a.mult])
        .then(phi);
    report.push(compare_chains("E1", &lhs, &rhs, &[dh, da, da]));

    // E2: (Φ ⊗ id)∘(id ⊗ Φ)∘(Δ_H ⊗ α_A) = (α_A ⊗ Δ_H)∘Φ
    let lhs = Chain::start(dh * da)
        .then_factors(&[&e.h.comult, alpha_a])
        .then_factors(&[&id_h, phi])
        .then_factors(&[phi, &id_h]);
    let rhs = Chain::start(dh * da)
        .then(phi)
        .then_factors(&[alpha_a, &e.h.comult]);
    report.push(compare_chains("E2", &lhs, &rhs, &[dh, da]));

    // E3: (id ⊗ ε_H)∘Φ = ε_H ⊗ id
    let lhs = Chain::start(dh * da)
        .then(phi)
        .then_factors(&[&id_a, &e.h.counit]);
    let rhs = Chain::start(dh * da).then_factors(&[&e.h.counit, &id_a]);
    report.push(compare_chains("E3", &lhs, &rhs, &[dh, da]));

    // E4: Φ∘(id ⊗ η_A) = η_A ⊗ id
    let lhs = Chain::start(dh).then_factors(&[&id_h, &e.a.unit]).then(phi);
    let rhs = Chain::start(dh).then_factors(&[&e.a.unit, &id_h]);
    report.push(compare_chains("E4", &lhs, &rhs, &[dh]));

    report
}

/// All six entwining axioms for Hom-bialgebra inputs:
///
/// ```text
/// E5: Σ (a1)_Φ ⊗ (a2)_Ψ ⊗ (α_H² h)^Φ (α_H² g)^Ψ = Σ (a_Φ)1 ⊗ (a_Φ)2 ⊗ α_H²((hg)^Φ)
/// E6: Σ ε_A(a_Φ) (1_H)^Φ = ε_A(a) 1_H
/// ```
pub fn check_entwining_monoidal(e: &BialgebraEntwining) -> CheckReport {
    let (dh, da) = (e.h.dim(), e.a.dim());
    let id_a = LinearMap::identity(da);
    let alpha_h2 = e.h.carrier().alpha_pow(2);
    let phi = &e.phi;
    let mut report = check_entwining(&e.plain());
    report.subject = format!("monoidal entwining ({dh}x{da})");

    let lhs = Chain::start(dh * dh * da)
        .then_factors(&[&alpha_h2, &alpha_h2, e.a.comult()])
        .then_permute(&[dh, dh, da, da], &[0, 2, 1, 3])
        .then_factors(&[phi, phi])
        .then_permute(&[da, dh, da, dh], &[0, 2, 1, 3])
        .then_factors(&[&id_a, &id_a, e.h.mult()]);
    let rhs = Chain::start(dh * dh * da)
        .then_factors(&[e.h.mult(), &id_a])
        .then(phi)
        .then_factors(&[e.a.comult(), &alpha_h2]);
    report.push(compare_chains("E5", &lhs, &rhs, &[dh, dh, da]));

    let lhs = Chain::start(da)
        .then_factors(&[e.h.unit(), &id_a])
        .then(phi)
        .then_factors(&[e.a.counit(), &LinearMap::identity(dh)]);
    let rhs = Chain::start(da).then(e.a.counit()).then(e.h.unit());
    report.push(compare_chains("E6", &lhs, &rhs, &[da]));

    report
}
