//! Cotwistors and the smash coproduct.
//!
//! A cotwistor is a map `φ : B ⊗ H -> H ⊗ B` between two Hom-coalgebras,
//! compatible with the structure automorphisms and satisfying the four
//! distributive-law axioms M1-M4. It makes `B ⊗ H` a Hom-coalgebra, the
//! *smash coproduct*, with comultiplication interleaved through `φ`:
//!
//! ```text
//! Δ(b ⊗ h) = Σ (b1 ⊗ h1^φ) ⊗ (b2^φ ⊗ h2)
//! ```
//!
//! When `B` and `H` are Hom-bialgebras and `φ` additionally satisfies the
//! multiplicative axioms M5-M6 (a *monoidal* cotwistor), the smash
//! coproduct carries a Hom-bialgebra structure; the order in which the
//! `H`-components multiply is genuinely ambiguous in the sources, so the
//! builder takes it as an explicit [`SmashOrder`] argument.
//!
//! Comodules over the smash coproduct are equivalent to pairs of
//! comodules over `B` and `H` tied together by a degree-`n` compatibility
//! ([`Bicomodule`]); [`p_functor`] and [`q_functor`] realize the two
//! directions of that equivalence and are exact mutual inverses.

use crate::chain::{compare_chains, Chain};
use crate::error::{Error, Result};
use crate::hom::{
    check_right_comodule, HomBialgebra, HomCoalgebra, ObjectWithAut, RightHomComodule,
};
use crate::linmap::{flip, LinearMap};
use crate::report::CheckReport;

/// A candidate cotwistor between two Hom-coalgebras.
#[derive(Clone, Debug)]
pub struct Cotwistor {
    pub b: HomCoalgebra,
    pub h: HomCoalgebra,
    /// `φ : B ⊗ H -> H ⊗ B`, a `(dH·dB) x (dB·dH)` matrix.
    pub phi: LinearMap,
}

impl Cotwistor {
    pub fn new(b: HomCoalgebra, h: HomCoalgebra, phi: LinearMap) -> Result<Self> {
        let (db, dh) = (b.dim(), h.dim());
        if phi.rows() != dh * db || phi.cols() != db * dh {
            return Err(Error::dims(
                "cotwistor map",
                phi.shape(),
                format!("{}x{}", dh * db, db * dh),
            ));
        }
        Ok(Cotwistor { b, h, phi })
    }

    /// The flip `b ⊗ h ↦ h ⊗ b` as a cotwistor candidate.
    pub fn flip(b: HomCoalgebra, h: HomCoalgebra) -> Self {
        let phi = flip(b.dim(), h.dim());
        Cotwistor { b, h, phi }
    }
}

/// A cotwistor candidate between two Hom-bialgebras (needed for the
/// multiplicative axioms M5-M6 and the smash bialgebra).
#[derive(Clone, Debug)]
pub struct BialgebraCotwistor {
    pub b: HomBialgebra,
    pub h: HomBialgebra,
    pub phi: LinearMap,
}

impl BialgebraCotwistor {
    pub fn new(b: HomBialgebra, h: HomBialgebra, phi: LinearMap) -> Result<Self> {
        let (db, dh) = (b.dim(), h.dim());
        if phi.rows() != dh * db || phi.cols() != db * dh {
            return Err(Error::dims(
                "cotwistor map",
                phi.shape(),
                format!("{}x{}", dh * db, db * dh),
            ));
        }
        Ok(BialgebraCotwistor { b, h, phi })
    }

    pub fn flip(b: HomBialgebra, h: HomBialgebra) -> Self {
        let phi = flip(b.dim(), h.dim());
        BialgebraCotwistor { b, h, phi }
    }

    /// Forget the algebra structures.
    pub fn coalgebra_part(&self) -> Cotwistor {
        Cotwistor {
            b: self.b.coalgebra.clone(),
            h: self.h.coalgebra.clone(),
            phi: self.phi.clone(),
        }
    }
}

/// The comultiplication-side cotwistor axioms: automorphism compatibility
/// and M1-M4, each as an exact matrix identity on all basis pairs.
pub fn check_cotwistor(c: &Cotwistor) -> CheckReport {
    let (db, dh) = (c.b.dim(), c.h.dim());
    let (id_b, id_h) = (LinearMap::identity(db), LinearMap::identity(dh));
    let (alpha_b, alpha_h) = (c.b.alpha(), c.h.alpha());
    let phi = &c.phi;
    let mut report = CheckReport::new(format!("cotwistor ({db}x{dh})"));

    let lhs = Chain::start(db * dh)
        .then_factors(&[alpha_b, alpha_h])
        .then(phi);
    let rhs = Chain::start(db * dh)
        .then(phi)
        .then_factors(&[alpha_h, alpha_b]);
    report.push(compare_chains("alpha_compat", &lhs, &rhs, &[db, dh]));

    // M1: (φ ⊗ id)∘(id ⊗ φ)∘(Δ_B ⊗ α_H) = (α_H ⊗ Δ_B)∘φ
    let lhs = Chain::start(db * dh)
        .then_factors(&[&c.b.comult, alpha_h])
        .then_factors(&[&id_b, phi])
        .then_factors(&[phi, &id_b]);
    let rhs = Chain::start(db * dh)
        .then(phi)
        .then_factors(&[alpha_h, &c.b.comult]);
    report.push(compare_chains("M1", &lhs, &rhs, &[db, dh]));

    // M2: (id ⊗ φ)∘(φ ⊗ id)∘(α_B ⊗ Δ_H) = (Δ_H ⊗ α_B)∘φ
    let lhs = Chain::start(db * dh)
        .then_factors(&[alpha_b, &c.h.comult])
        .then_factors(&[phi, &id_h])
        .then_factors(&[&id_h, phi]);
    let rhs = Chain::start(db * dh)
        .then(phi)
        .then_factors(&[&c.h.comult, alpha_b]);
    report.push(compare_chains("M2", &lhs, &rhs, &[db, dh]));

    // M3: (ε_H ⊗ id)∘φ = id ⊗ ε_H
    let lhs = Chain::start(db * dh)
        .then(phi)
        .then_factors(&[&c.h.counit, &id_b]);
    let rhs = Chain::start(db * dh).then_factors(&[&id_b, &c.h.counit]);
    report.push(compare_chains("M3", &lhs, &rhs, &[db, dh]));

    // M4: (id ⊗ ε_B)∘φ = ε_B ⊗ id
    let lhs = Chain::start(db * dh)
        .then(phi)
        .then_factors(&[&id_h, &c.b.counit]);
    let rhs = Chain::start(db * dh).then_factors(&[&c.b.counit, &id_h]);
    report.push(compare_chains("M4", &lhs, &rhs, &[db, dh]));

    report
}

/// All six cotwistor axioms for Hom-bialgebra inputs: M1-M4 plus the
/// multiplicative pair
///
/// ```text
/// M5: Σ h^φ g^ψ ⊗ a^φ b^ψ = Σ (hg)^φ ⊗ (ab)^φ
/// M6: φ(1_B ⊗ 1_H) = 1_H ⊗ 1_B
/// ```
pub fn check_cotwistor_monoidal(c: &BialgebraCotwistor) -> CheckReport {
    let (db, dh) = (c.b.dim(), c.h.dim());
    let phi = &c.phi;
    let mut report = check_cotwistor(&c.coalgebra_part());
    report.subject = format!("monoidal cotwistor ({db}x{dh})");

    let lhs = Chain::start(db * dh * db * dh)
        .then_factors(&[phi, phi])
        .then_permute(&[dh, db, dh, db], &[0, 2, 1, 3])
        .then_factors(&[c.h.mult(), c.b.mult()]);
    let rhs = Chain::start(db * dh * db * dh)
        .then_permute(&[db, dh, db, dh], &[0, 2, 1, 3])
        .then_factors(&[c.b.mult(), c.h.mult()])
        .then(phi);
    report.push(compare_chains("M5", &lhs, &rhs, &[db, dh, db, dh]));

    let lhs = Chain::start(1)
        .then_factors(&[c.b.unit(), c.h.unit()])
        .then(phi);
    let rhs = Chain::start(1).then_factors(&[c.h.unit(), c.b.unit()]);
    report.push(compare_chains("M6", &lhs, &rhs, &[1]));

    report
}

/// Carrier of the smash coproduct: `B ⊗ H` with `α = α_B ⊗ α_H`.
pub fn smash_carrier(b: &ObjectWithAut, h: &ObjectWithAut) -> ObjectWithAut {
    ObjectWithAut::new(b.alpha().kron(h.alpha())).expect("kron of invertibles is invertible")
}

fn first_failing_axiom(report: &CheckReport) -> Option<String> {
    report.failures().next().map(|c| c.axiom.clone())
}

/// The smash coproduct Hom-coalgebra on `B ⊗ H`. Refuses inputs whose
/// cotwistor check fails, naming the failing axiom.
pub fn build_smash_coproduct(c: &Cotwistor) -> Result<HomCoalgebra> {
    let report = check_cotwistor(c);
    if let Some(axiom) = first_failing_axiom(&report) {
        return Err(Error::pre(format!("cotwistor axiom {axiom} fails")));
    }
    smash_coproduct_unchecked(c)
}

/// The smash coproduct structure maps without the axiom gate. Used by the
/// equivalence tests, which deliberately feed perturbed cotwistors.
pub fn smash_coproduct_unchecked(c: &Cotwistor) -> Result<HomCoalgebra> {
    let (db, dh) = (c.b.dim(), c.h.dim());
    let (id_b, id_h) = (LinearMap::identity(db), LinearMap::identity(dh));
    let carrier = smash_carrier(&c.b.carrier, &c.h.carrier);
    // Δ = (id_B ⊗ φ ⊗ id_H) ∘ (Δ_B ⊗ Δ_H): the middle pair (b2, h1) feeds φ.
    let comult = Chain::start(db * dh)
        .then_factors(&[&c.b.comult, &c.h.comult])
        .then_factors(&[&id_b, &c.phi, &id_h])
        .materialize();
    let counit = c.b.counit.kron(&c.h.counit);
    HomCoalgebra::new(carrier, comult, counit)
}

/// Order of the `H`-side product in the smash bialgebra
/// `m((a ⊗ h) ⊗ (b ⊗ g))`; the `B`-side is always `ab`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmashOrder {
    /// `ab ⊗ hg`: factors multiplied in the order they arrive.
    Hg,
    /// `ab ⊗ gh`: `H`-factors reversed.
    Gh,
}

/// The smash coproduct equipped with the componentwise product (in the
/// chosen `H`-order) and unit `1_B ⊗ 1_H`. Refuses non-monoidal cotwistors.
pub fn build_smash_bialgebra(c: &BialgebraCotwistor, order: SmashOrder) -> Result<HomBialgebra> {
    let report = check_cotwistor_monoidal(c);
    if let Some(axiom) = first_failing_axiom(&report) {
        return Err(Error::pre(format!(
            "monoidal cotwistor axiom {axiom} fails"
        )));
    }
    smash_bialgebra_unchecked(c, order)
}

/// Structure maps of the smash bialgebra without the axiom gate.
pub fn smash_bialgebra_unchecked(
    c: &BialgebraCotwistor,
    order: SmashOrder,
) -> Result<HomBialgebra> {
    let (db, dh) = (c.b.dim(), c.h.dim());
    let coalgebra = smash_coproduct_unchecked(&c.coalgebra_part())?;
    let h_mult = match order {
        SmashOrder::Hg => c.h.mult().clone(),
        SmashOrder::Gh => c.h.mult().compose(&flip(dh, dh))?,
    };
    let mult = Chain::start(db * dh * db * dh)
        .then_permute(&[db, dh, db, dh], &[0, 2, 1, 3])
        .then_factors(&[c.b.mult(), &h_mult])
        .materialize();
    let unit = c.b.unit().kron(c.h.unit());
    let algebra = crate::hom::HomAlgebra::new(coalgebra.carrier.clone(), mult, unit)?;
    HomBialgebra::new(algebra, coalgebra)
}

/// A pair of comodule structures over `B` and `H` on one carrier, tied by
/// the degree-`n` cotwistor compatibility.
#[derive(Clone, Debug)]
pub struct Bicomodule {
    pub carrier: ObjectWithAut,
    /// `θ : U -> U ⊗ H`.
    pub h_coaction: LinearMap,
    /// `ρ : U -> U ⊗ B`.
    pub b_coaction: LinearMap,
    pub n: i64,
}

impl Bicomodule {
    pub fn new(
        carrier: ObjectWithAut,
        h_coaction: LinearMap,
        b_coaction: LinearMap,
        n: i64,
        db: usize,
        dh: usize,
    ) -> Result<Self> {
        let du = carrier.dim();
        if h_coaction.rows() != du * dh || h_coaction.cols() != du {
            return Err(Error::dims(
                "H-coaction",
                h_coaction.shape(),
                format!("{}x{du}", du * dh),
            ));
        }
        if b_coaction.rows() != du * db || b_coaction.cols() != du {
            return Err(Error::dims(
                "B-coaction",
                b_coaction.shape(),
                format!("{}x{du}", du * db),
            ));
        }
        Ok(Bicomodule {
            carrier,
            h_coaction,
            b_coaction,
            n,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

/// Comodule axioms for both coactions plus the degree-`n` compatibility
///
/// ```text
/// u[0](0) ⊗ u[0](1) ⊗ u[1]
///   = u(0)[0] ⊗ (α_H(u(1)))^φ ⊗ α_B^n((α_B^{-n-1}(u(0)[1]))^φ)
/// ```
pub fn check_bicomodule(m: &Bicomodule, c: &Cotwistor) -> Result<CheckReport> {
    let (db, dh, du) = (c.b.dim(), c.h.dim(), m.dim());
    let mut report = CheckReport::new(format!("bicomodule (dim {du}, n = {})", m.n));

    let h_com = RightHomComodule::new(m.carrier.clone(), m.h_coaction.clone(), dh)?;
    report.absorb("h_comodule", check_right_comodule(&h_com, &c.h)?);
    let b_com = RightHomComodule::new(m.carrier.clone(), m.b_coaction.clone(), db)?;
    report.absorb("b_comodule", check_right_comodule(&b_com, &c.b)?);

    let id_u = LinearMap::identity(du);
    let id_h = LinearMap::identity(dh);
    let lhs = Chain::start(du)
        .then(&m.b_coaction)
        .then_factors(&[&m.h_coaction, &LinearMap::identity(db)]);
    let rhs = Chain::start(du)
        .then(&m.h_coaction)
        .then_factors(&[&m.b_coaction, &id_h])
        .then_factors(&[&id_u, &c.b.carrier.alpha_pow(-m.n - 1), c.h.alpha()])
        .then_factors(&[&id_u, &c.phi])
        .then_factors(&[&id_u, &id_h, &c.b.carrier.alpha_pow(m.n)]);
    report.push(compare_chains("compat", &lhs, &rhs, &[du]));

    Ok(report)
}

/// Split a comodule over the smash coproduct `B ⊗ H` into a degree-`n`
/// bicomodule:
///
/// ```text
/// θ(u) = Σ u<0> ⊗ ε_B(u<1>B) α_H^{-1}(u<1>H)
/// ρ(u) = Σ u<0> ⊗ α_B^n(u<1>B) ε_H(u<1>H)
/// ```
pub fn p_functor(c: &Cotwistor, n: i64, u: &RightHomComodule) -> Result<Bicomodule> {
    let (db, dh, du) = (c.b.dim(), c.h.dim(), u.dim());
    if u.coaction.rows() != du * db * dh {
        return Err(Error::dims(
            "smash comodule",
            u.coaction.shape(),
            format!("{}x{du}", du * db * dh),
        ));
    }
    let id_u = LinearMap::identity(du);
    let h_coaction = Chain::start(du)
        .then(&u.coaction)
        .then_factors(&[&id_u, &c.b.counit, &c.h.carrier.alpha_pow(-1)])
        .materialize();
    let b_coaction = Chain::start(du)
        .then(&u.coaction)
        .then_factors(&[&id_u, &c.b.carrier.alpha_pow(n), &c.h.counit])
        .materialize();
    Bicomodule::new(u.carrier.clone(), h_coaction, b_coaction, n, db, dh)
}

/// Reassemble a comodule over the smash coproduct from a bicomodule:
///
/// ```text
/// ς(u) = Σ α_U^{-1}(u(0)[0]) ⊗ (α_B^{-n-1}(u(0)[1]) ⊗ α_H^{-1}(u(1)))
/// ```
pub fn q_functor(c: &Cotwistor, m: &Bicomodule) -> Result<RightHomComodule> {
    let (db, dh, du) = (c.b.dim(), c.h.dim(), m.dim());
    let coaction = Chain::start(du)
        .then(&m.h_coaction)
        .then_factors(&[&m.b_coaction, &LinearMap::identity(dh)])
        .then_factors(&[
            &m.carrier.alpha_pow(-1),
            &c.b.carrier.alpha_pow(-m.n - 1),
            &c.h.carrier.alpha_pow(-1),
        ])
        .materialize();
    RightHomComodule::new(m.carrier.clone(), coaction, db * dh)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hom::{check_hom_bialgebra, check_hom_coalgebra, regular_comodule, samples};
    use crate::scalar::{s_int, s_one};

    fn kc2_pair() -> (HomBialgebra, HomBialgebra) {
        let b = samples::cyclic_group_hopf(2).unwrap().bialgebra;
        (b.clone(), b)
    }

    fn twisted_pair() -> (HomBialgebra, HomBialgebra) {
        let b = samples::twisted_kc4().unwrap().bialgebra;
        (b.clone(), b)
    }

    #[test]
    fn flip_on_classical_coalgebras_is_a_cotwistor() {
        let (b, h) = kc2_pair();
        let c = Cotwistor::flip(b.coalgebra, h.coalgebra);
        let report = check_cotwistor(&c);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn flip_on_twisted_bialgebras_is_a_monoidal_cotwistor() {
        let (b, h) = twisted_pair();
        let c = BialgebraCotwistor::flip(b, h);
        let report = check_cotwistor_monoidal(&c);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn scaled_flip_fails_the_counit_axioms() {
        let (b, h) = kc2_pair();
        let phi = flip(2, 2).scale(&s_int(2));
        let c = Cotwistor::new(b.coalgebra, h.coalgebra, phi).unwrap();
        let report = check_cotwistor(&c);
        assert!(!report.axiom_passed("M3"));
        assert!(!report.axiom_passed("M4"));
        assert!(report.axiom_passed("alpha_compat"), "{report}");
    }

    #[test]
    fn smash_over_flip_is_the_tensor_coalgebra() {
        let (b, h) = kc2_pair();
        let smash =
            build_smash_coproduct(&Cotwistor::flip(b.coalgebra.clone(), h.coalgebra.clone()))
                .unwrap();
        assert!(check_hom_coalgebra(&smash).passed());
        // ordinary tensor coalgebra: Δ then middle swap
        let expected = Chain::start(4)
            .then_factors(&[&b.coalgebra.comult, &h.coalgebra.comult])
            .then_permute(&[2, 2, 2, 2], &[0, 2, 1, 3])
            .materialize();
        assert_eq!(smash.comult, expected);
        // g⊗g is grouplike: Δ(e_3) = e_3 ⊗ e_3
        let col = smash.comult.column(3);
        for (i, v) in col.iter().enumerate() {
            let expect = if i == 3 * 4 + 3 {
                s_one()
            } else {
                crate::scalar::s_zero()
            };
            assert_eq!(v, &expect);
        }
    }

    #[test]
    fn smash_over_twisted_flip_passes_coalgebra_check() {
        let (b, h) = twisted_pair();
        let smash = build_smash_coproduct(&Cotwistor::flip(b.coalgebra, h.coalgebra)).unwrap();
        let report = check_hom_coalgebra(&smash);
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn smash_bialgebra_over_flip_passes_in_both_orders_on_commutative_input() {
        let (b, h) = kc2_pair();
        let c = BialgebraCotwistor::flip(b, h);
        for order in [SmashOrder::Hg, SmashOrder::Gh] {
            let smash = build_smash_bialgebra(&c, order).unwrap();
            let report = check_hom_bialgebra(&smash);
            assert!(report.passed(), "{order:?}: {report}");
            // unit is 1_B ⊗ 1_H = e_0 and ε(1 ⊗ 1) = 1
            assert_eq!(smash.unit(), &LinearMap::basis_col(4, 0));
            assert_eq!(
                smash.counit().compose(smash.unit()).unwrap(),
                LinearMap::identity(1)
            );
        }
    }

    #[test]
    fn rejects_broken_cotwistor_naming_the_axiom() {
        let (b, h) = kc2_pair();
        let phi = flip(2, 2).scale(&s_int(2));
        let c = Cotwistor::new(b.coalgebra, h.coalgebra, phi).unwrap();
        let err = build_smash_coproduct(&c).unwrap_err();
        assert!(err.to_string().contains("axiom M"), "{err}");
    }

    #[test]
    fn trivial_comodule_round_trips() {
        let k = samples::trivial_bialgebra();
        let c = Cotwistor::flip(k.coalgebra.clone(), k.coalgebra.clone());
        let smash = build_smash_coproduct(&c).unwrap();
        let trivial = regular_comodule(&smash);
        assert_eq!(trivial.dim(), 1);
        for n in -2..=2 {
            let bi = p_functor(&c, n, &trivial).unwrap();
            assert!(check_bicomodule(&bi, &c).unwrap().passed());
            assert_eq!(q_functor(&c, &bi).unwrap().coaction, trivial.coaction);
        }
    }

    #[test]
    fn trivial_bicomodule_passes() {
        let k = samples::trivial_bialgebra();
        let c = Cotwistor::flip(k.coalgebra.clone(), k.coalgebra.clone());
        let m = Bicomodule::new(
            ObjectWithAut::trivial(1),
            LinearMap::identity(1),
            LinearMap::identity(1),
            0,
            1,
            1,
        )
        .unwrap();
        assert!(check_bicomodule(&m, &c).unwrap().passed());
    }

    #[test]
    fn regular_comodule_splits_and_round_trips_for_all_degrees() {
        for (b, h) in [kc2_pair(), twisted_pair()] {
            let c = Cotwistor::flip(b.coalgebra, h.coalgebra);
            let smash = build_smash_coproduct(&c).unwrap();
            let regular = regular_comodule(&smash);
            for n in -2..=2 {
                let bi = p_functor(&c, n, &regular).unwrap();
                let report = check_bicomodule(&bi, &c).unwrap();
                assert!(report.passed(), "n = {n}: {report}");
                let back = q_functor(&c, &bi).unwrap();
                assert_eq!(back.coaction, regular.coaction, "q∘p at n = {n}");
                // and the other direction
                let bi2 = p_functor(&c, n, &back).unwrap();
                assert_eq!(bi2.h_coaction, bi.h_coaction);
                assert_eq!(bi2.b_coaction, bi.b_coaction);
            }
        }
    }

    #[test]
    fn perturbed_b_coaction_fails_with_witness() {
        let (b, h) = kc2_pair();
        let c = Cotwistor::flip(b.coalgebra, h.coalgebra);
        let smash = build_smash_coproduct(&c).unwrap();
        let bi = p_functor(&c, 0, &regular_comodule(&smash)).unwrap();
        let broken = Bicomodule {
            b_coaction: bi.b_coaction.perturbed(0, 1, &s_one()),
            ..bi
        };
        let report = check_bicomodule(&broken, &c).unwrap();
        assert!(!report.passed());
        assert!(report.failures().all(|f| f.witness.is_some()));
    }

    // Two-sided equivalence at the bialgebra level: a perturbed map is a
    // monoidal cotwistor exactly when its smash carries a Hom-bialgebra
    // structure (in-order product).
    #[test]
    fn monoidal_verdict_matches_smash_bialgebra_verdict_under_mutation() {
        for (b, _) in [kc2_pair(), twisted_pair()] {
            let base = BialgebraCotwistor::flip(b.clone(), b.clone());
            let mut state = 0xabba_u64;
            for _ in 0..16 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let r = (state >> 33) as usize % base.phi.rows();
                let c = (state >> 13) as usize % base.phi.cols();
                let cand = BialgebraCotwistor::new(
                    b.clone(),
                    b.clone(),
                    base.phi.perturbed(r, c, &s_one()),
                )
                .unwrap();
                let monoidal = check_cotwistor_monoidal(&cand).passed();
                let smash = crate::hom::check_hom_bialgebra(
                    &smash_bialgebra_unchecked(&cand, SmashOrder::Hg).unwrap(),
                )
                .passed();
                assert_eq!(monoidal, smash, "at ({r},{c})");
            }
        }
    }

    // A comodule transported along an arbitrary invertible intertwiner is
    // still valid and still round-trips through the split/reassemble pair.
    #[test]
    fn twisted_comodules_round_trip() {
        let (b, h) = twisted_pair();
        let c = Cotwistor::flip(b.coalgebra, h.coalgebra);
        let smash = build_smash_coproduct(&c).unwrap();
        let regular = regular_comodule(&smash);
        let du = regular.dim();
        // a sparse invertible intertwiner: permutation, shear, diagonal
        let mut t = LinearMap::zeros(du, du);
        for idx in 0..du {
            t.set_entry(
                (idx * 5 + 3) % du,
                idx,
                s_int(if idx % 3 == 0 { 2 } else { 1 }),
            );
        }
        t.set_entry(1, 0, s_int(1));
        let t_inv = t.invert().unwrap();
        let carrier = ObjectWithAut::new(
            t_inv
                .compose(regular.carrier.alpha())
                .unwrap()
                .compose(&t)
                .unwrap(),
        )
        .unwrap();
        let coaction = t_inv
            .kron(&LinearMap::identity(smash.dim()))
            .compose(&regular.coaction)
            .unwrap()
            .compose(&t)
            .unwrap();
        let twisted = crate::hom::RightHomComodule::new(carrier, coaction, smash.dim()).unwrap();
        assert!(crate::hom::check_right_comodule(&twisted, &smash)
            .unwrap()
            .passed());
        for n in [-2i64, 0, 2] {
            let bi = p_functor(&c, n, &twisted).unwrap();
            assert!(check_bicomodule(&bi, &c).unwrap().passed());
            let back = q_functor(&c, &bi).unwrap();
            assert_eq!(back.coaction, twisted.coaction, "n = {n}");
        }
    }

    // Transport of a valid degree-0 bicomodule to degree n by twisting the
    // B-coaction with α_B^n.
    #[test]
    fn degree_transport_by_alpha_power() {
        let (b, h) = twisted_pair();
        let c = Cotwistor::flip(b.coalgebra, h.coalgebra);
        let smash = build_smash_coproduct(&c).unwrap();
        let bi0 = p_functor(&c, 0, &regular_comodule(&smash)).unwrap();
        assert!(check_bicomodule(&bi0, &c).unwrap().passed());
        for n in [-2i64, -1, 1, 2] {
            let du = bi0.dim();
            let transported = Bicomodule {
                carrier: bi0.carrier.clone(),
                h_coaction: bi0.h_coaction.clone(),
                b_coaction: LinearMap::identity(du)
                    .kron(&c.b.carrier.alpha_pow(n))
                    .compose(&bi0.b_coaction)
                    .unwrap(),
                n,
            };
            let report = check_bicomodule(&transported, &c).unwrap();
            assert!(report.passed(), "transport to n = {n}: {report}");
        }
    }
}
