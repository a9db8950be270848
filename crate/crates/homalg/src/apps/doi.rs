//! Doi-Hopf data: a comodule algebra and a module coalgebra over one
//! Hom-bialgebra, the entwining map they induce, and the Doi-codouble.

use crate::chain::{compare_chains, Chain};
use crate::entwine::{codouble, EntwinedModule, EntwiningMap};
use crate::error::{Error, Result};
use crate::hom::{
    check_right_comodule, check_right_module, dual_coalgebra, HomAlgebra, HomBialgebra,
    HomCoalgebra, RightHomComodule, RightHomModule,
};
use crate::linmap::LinearMap;
use crate::report::CheckReport;
use crate::smash::{build_smash_coproduct, Cotwistor};
use num_traits::Zero;

/// A Hom-algebra that is also a comodule over `H`, multiplicatively.
#[derive(Clone, Debug)]
pub struct ComoduleAlgebra {
    pub algebra: HomAlgebra,
    /// `ρ : A -> A ⊗ H`.
    pub coaction: LinearMap,
}

impl ComoduleAlgebra {
    pub fn new(algebra: HomAlgebra, coaction: LinearMap, dh: usize) -> Result<Self> {
        let da = algebra.dim();
        if coaction.rows() != da * dh || coaction.cols() != da {
            return Err(Error::dims(
                "algebra coaction",
                coaction.shape(),
                format!("{}x{da}", da * dh),
            ));
        }
        Ok(ComoduleAlgebra { algebra, coaction })
    }

    /// A Hom-bialgebra coacting on itself by its comultiplication.
    pub fn regular(h: &HomBialgebra) -> Self {
        ComoduleAlgebra {
            algebra: h.algebra.clone(),
            coaction: h.comult().clone(),
        }
    }

    pub fn as_comodule(&self) -> RightHomComodule {
        RightHomComodule {
            carrier: self.algebra.carrier.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

/// A Hom-coalgebra that is also a module over `H`, comultiplicatively.
#[derive(Clone, Debug)]
pub struct ModuleCoalgebra {
    pub coalgebra: HomCoalgebra,
    /// `C ⊗ H -> C`.
    pub action: LinearMap,
}

impl ModuleCoalgebra {
    pub fn new(coalgebra: HomCoalgebra, action: LinearMap, dh: usize) -> Result<Self> {
        let dc = coalgebra.dim();
        if action.rows() != dc || action.cols() != dc * dh {
            return Err(Error::dims(
                "coalgebra action",
                action.shape(),
                format!("{dc}x{}", dc * dh),
            ));
        }
        Ok(ModuleCoalgebra { coalgebra, action })
    }

    /// A Hom-bialgebra acting on itself by its multiplication.
    pub fn regular(h: &HomBialgebra) -> Self {
        ModuleCoalgebra {
            coalgebra: h.coalgebra.clone(),
            action: h.mult().clone(),
        }
    }

    pub fn as_module(&self) -> RightHomModule {
        RightHomModule {
            carrier: self.coalgebra.carrier.clone(),
            action: self.action.clone(),
        }
    }
}

/// `(ab)(0) ⊗ (ab)(1) = a(0)b(0) ⊗ a(1)b(1)` and `ρ(1) = 1 ⊗ 1`, on top of
/// the comodule axioms.
pub fn check_comodule_algebra(ca: &ComoduleAlgebra, h: &HomBialgebra) -> Result<CheckReport> {
    let (da, dh) = (ca.algebra.dim(), h.dim());
    let mut report = CheckReport::new(format!("comodule algebra (dim {da})"));
    report.absorb(
        "comodule",
        check_right_comodule(&ca.as_comodule(), &h.coalgebra)?,
    );

    let lhs = Chain::start(da * da)
        .then(&ca.algebra.mult)
        .then(&ca.coaction);
    let rhs = Chain::start(da * da)
        .then_factors(&[&ca.coaction, &ca.coaction])
        .then_permute(&[da, dh, da, dh], &[0, 2, 1, 3])
        .then_factors(&[&ca.algebra.mult, h.mult()]);
    report.push(compare_chains("mult", &lhs, &rhs, &[da, da]));

    let lhs = Chain::start(1).then(&ca.algebra.unit).then(&ca.coaction);
    let rhs = Chain::start(1).then_factors(&[&ca.algebra.unit, h.unit()]);
    report.push(compare_chains("unit", &lhs, &rhs, &[1]));

    Ok(report)
}

/// `Δ(c·h) = c1·h1 ⊗ c2·h2` and `ε(c·h) = ε(c)ε(h)`, on top of the module
/// axioms.
pub fn check_module_coalgebra(mc: &ModuleCoalgebra, h: &HomBialgebra) -> Result<CheckReport> {
    let (dc, dh) = (mc.coalgebra.dim(), h.dim());
    let mut report = CheckReport::new(format!("module coalgebra (dim {dc})"));
    report.absorb("module", check_right_module(&mc.as_module(), &h.algebra)?);

    let lhs = Chain::start(dc * dh)
        .then(&mc.action)
        .then(&mc.coalgebra.comult);
    let rhs = Chain::start(dc * dh)
        .then_factors(&[&mc.coalgebra.comult, h.comult()])
        .then_permute(&[dc, dc, dh, dh], &[0, 2, 1, 3])
        .then_factors(&[&mc.action, &mc.action]);
    report.push(compare_chains("comult", &lhs, &rhs, &[dc, dh]));

    let lhs = Chain::start(dc * dh)
        .then(&mc.action)
        .then(&mc.coalgebra.counit);
    let rhs = Chain::start(dc * dh).then_factors(&[&mc.coalgebra.counit, h.counit()]);
    report.push(compare_chains("counit", &lhs, &rhs, &[dc, dh]));

    Ok(report)
}

/// A Doi-Hopf datum: comodule algebra and module coalgebra over one
/// Hom-bialgebra, with the module degree `k` and entwining degree `m`.
#[derive(Clone, Debug)]
pub struct DoiHopfDatum {
    pub h: HomBialgebra,
    pub a: ComoduleAlgebra,
    pub c: ModuleCoalgebra,
    pub k_deg: i64,
    pub m_deg: i64,
}

impl DoiHopfDatum {
    pub fn new(
        h: HomBialgebra,
        a: ComoduleAlgebra,
        c: ModuleCoalgebra,
        k_deg: i64,
        m_deg: i64,
    ) -> Result<Self> {
        let dh = h.dim();
        if a.coaction.rows() != a.algebra.dim() * dh {
            return Err(Error::dims(
                "datum coaction",
                a.coaction.shape(),
                format!("{}x{}", a.algebra.dim() * dh, a.algebra.dim()),
            ));
        }
        if c.action.cols() != c.coalgebra.dim() * dh {
            return Err(Error::dims(
                "datum action",
                c.action.shape(),
                format!("{}x{}", c.coalgebra.dim(), c.coalgebra.dim() * dh),
            ));
        }
        Ok(DoiHopfDatum {
            h,
            a,
            c,
            k_deg,
            m_deg,
        })
    }

    /// Both components on `H` itself: coaction `Δ`, action `μ`.
    pub fn self_datum(h: &HomBialgebra, k_deg: i64, m_deg: i64) -> Self {
        DoiHopfDatum {
            h: h.clone(),
            a: ComoduleAlgebra::regular(h),
            c: ModuleCoalgebra::regular(h),
            k_deg,
            m_deg,
        }
    }
}

/// The degree-`k` Doi-Hopf compatibility
/// `(u·a)[0] ⊗ (u·a)[1] = u[0]·a(0) ⊗ u[1]·α_H^k(a(1))`
/// for a module-over-`A` / comodule-over-`C` pair (`u.n` is read as `k`).
pub fn check_doi_hopf_module(u: &EntwinedModule, datum: &DoiHopfDatum) -> Result<CheckReport> {
    let (da, dc, du) = (datum.a.algebra.dim(), datum.c.coalgebra.dim(), u.dim());
    let mut report = CheckReport::new(format!("doi-hopf module (dim {du}, k = {})", u.n));
    report.absorb(
        "module",
        check_right_module(&u.as_module(), &datum.a.algebra)?,
    );
    report.absorb(
        "comodule",
        check_right_comodule(&u.as_comodule(), &datum.c.coalgebra)?,
    );

    let (id_u, id_a, id_c) = (
        LinearMap::identity(du),
        LinearMap::identity(da),
        LinearMap::identity(dc),
    );
    let lhs = Chain::start(du * da).then(&u.action).then(&u.coaction);
    let rhs = Chain::start(du * da)
        .then_factors(&[&u.coaction, &datum.a.coaction])
        .then_permute(&[du, dc, da, datum.h.dim()], &[0, 2, 1, 3])
        .then_factors(&[&id_u, &id_a, &id_c, &datum.h.carrier().alpha_pow(u.n)])
        .then_factors(&[&u.action, &datum.c.action]);
    report.push(compare_chains("compat", &lhs, &rhs, &[du, da]));

    Ok(report)
}

/// The entwining map of a Doi-Hopf datum:
/// `Φ(c ⊗ a) = α_A^{-1}(a(0)) ⊗ α_C^{-1}(c)·α_H^m(a(1))`.
pub fn doi_hopf_entwining(datum: &DoiHopfDatum) -> Result<EntwiningMap> {
    let (da, dc, dh) = (
        datum.a.algebra.dim(),
        datum.c.coalgebra.dim(),
        datum.h.dim(),
    );
    let id_a = LinearMap::identity(da);
    let phi = Chain::start(dc * da)
        .then_factors(&[&LinearMap::identity(dc), &datum.a.coaction])
        .then_permute(&[dc, da, dh], &[1, 0, 2])
        .then_factors(&[
            &datum.a.algebra.carrier.alpha_pow(-1),
            &datum.c.coalgebra.carrier.alpha_pow(-1),
            &datum.h.carrier().alpha_pow(datum.m_deg),
        ])
        .then_factors(&[&id_a, &datum.c.action])
        .materialize();
    EntwiningMap::new(datum.c.coalgebra.clone(), datum.a.algebra.clone(), phi)
}

/// The Doi-codouble: the smash coproduct on `(A*)^cop ⊗ C` whose
/// cotwistor is written out directly through the dual bases,
///
/// ```text
/// φ(f ⊗ c) = Σ_i f(α_A^{-1}((e_i)(0))) α_C^{-1}(c)·α_H^m((e_i)(1)) ⊗ e^i
/// ```
///
/// It coincides matrix-exactly with the generic codouble of
/// [`doi_hopf_entwining`].
pub fn doi_codouble(datum: &DoiHopfDatum) -> Result<HomCoalgebra> {
    let (da, dc, dh) = (
        datum.a.algebra.dim(),
        datum.c.coalgebra.dim(),
        datum.h.dim(),
    );
    let b = dual_coalgebra(&datum.a.algebra)?;
    let a_inv = datum.a.algebra.carrier.alpha_pow(-1);
    let act = datum.c.action.compose(
        &datum
            .c
            .coalgebra
            .carrier
            .alpha_pow(-1)
            .kron(&datum.h.carrier().alpha_pow(datum.m_deg)),
    )?;
    let mut phi = LinearMap::zeros(dc * da, da * dc);
    for j in 0..da {
        // ρ_A(e_j) expanded over (a_idx, h_idx)
        for a_idx in 0..da {
            for h_idx in 0..dh {
                let rho = datum.a.coaction.entry(a_idx * dh + h_idx, j);
                if rho.is_zero() {
                    continue;
                }
                for i_f in 0..da {
                    let dual_part = a_inv.entry(i_f, a_idx);
                    if dual_part.is_zero() {
                        continue;
                    }
                    for c_in in 0..dc {
                        for c_out in 0..dc {
                            let act_part = act.entry(c_out, c_in * dh + h_idx);
                            if act_part.is_zero() {
                                continue;
                            }
                            let v = phi.entry(c_out * da + j, i_f * dc + c_in)
                                + rho * dual_part * act_part;
                            phi.set_entry(c_out * da + j, i_f * dc + c_in, v);
                        }
                    }
                }
            }
        }
    }
    let cotwistor = Cotwistor::new(b, datum.c.coalgebra.clone(), phi)?;
    build_smash_coproduct(&cotwistor)
}

/// The generic codouble of the datum's entwining map, for cross-checking
/// against [`doi_codouble`].
pub fn doi_codouble_via_entwining(datum: &DoiHopfDatum) -> Result<HomCoalgebra> {
    codouble(&doi_hopf_entwining(datum)?)
}

/// The monoidality conditions of a Doi-Hopf datum whose components carry
/// full Hom-bialgebra structure:
///
/// ```text
/// (a1)(0) ⊗ (a2)(0) ⊗ (c·(a1)(1))(d·(a2)(1)) = (a(0))1 ⊗ (a(0))2 ⊗ (cd)·α_H²(a(1))
/// ε_A(a) 1_C = 1_C · a(1) ε_A(a(0))
/// ```
pub fn check_doi_monoidal(
    datum: &DoiHopfDatum,
    a_full: &HomBialgebra,
    c_full: &HomBialgebra,
) -> Result<CheckReport> {
    if a_full.algebra != datum.a.algebra {
        return Err(Error::pre(
            "algebra side of the datum does not match the given bialgebra",
        ));
    }
    if c_full.coalgebra != datum.c.coalgebra {
        return Err(Error::pre(
            "coalgebra side of the datum does not match the given bialgebra",
        ));
    }
    let (da, dc, dh) = (
        datum.a.algebra.dim(),
        datum.c.coalgebra.dim(),
        datum.h.dim(),
    );
    let (id_a, id_c, id_h) = (
        LinearMap::identity(da),
        LinearMap::identity(dc),
        LinearMap::identity(dh),
    );
    let mut report = CheckReport::new("doi-hopf monoidality".to_string());

    let lhs = Chain::start(dc * dc * da)
        .then_factors(&[&id_c, &id_c, a_full.comult()])
        .then_factors(&[&id_c, &id_c, &datum.a.coaction, &datum.a.coaction])
        .then_permute(&[dc, dc, da, dh, da, dh], &[2, 4, 0, 3, 1, 5])
        .then_factors(&[&id_a, &id_a, &datum.c.action, &datum.c.action])
        .then_factors(&[&id_a, &id_a, c_full.mult()]);
    let rhs = Chain::start(dc * dc * da)
        .then_factors(&[c_full.mult(), &datum.a.coaction])
        .then_factors(&[&id_c, a_full.comult(), &datum.h.carrier().alpha_pow(2)])
        .then_permute(&[dc, da, da, dh], &[1, 2, 0, 3])
        .then_factors(&[&id_a, &id_a, &datum.c.action]);
    report.push(compare_chains("mult_compat", &lhs, &rhs, &[dc, dc, da]));

    let lhs = Chain::start(da).then(a_full.counit()).then(c_full.unit());
    let rhs = Chain::start(da)
        .then(&datum.a.coaction)
        .then_factors(&[a_full.counit(), &id_h])
        .then_factors(&[c_full.unit(), &id_h])
        .then(&datum.c.action);
    report.push(compare_chains("unit_compat", &lhs, &rhs, &[da]));

    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::entwine::{canonical_module_ha, check_entwined_module, check_entwining};
    use crate::hom::samples;
    use crate::scalar::s_one;

    fn hopfs() -> Vec<HomBialgebra> {
        vec![
            samples::cyclic_group_hopf(2).unwrap().bialgebra,
            samples::twisted_kc4().unwrap().bialgebra,
        ]
    }

    #[test]
    fn regular_self_datum_components_pass() {
        for b in hopfs() {
            let datum = DoiHopfDatum::self_datum(&b, 0, 0);
            assert!(check_comodule_algebra(&datum.a, &b).unwrap().passed());
            assert!(check_module_coalgebra(&datum.c, &b).unwrap().passed());
        }
    }

    #[test]
    fn self_datum_entwining_satisfies_e1_to_e4() {
        for b in hopfs() {
            for m in [-1, 0, 1] {
                let datum = DoiHopfDatum::self_datum(&b, 0, m);
                let e = doi_hopf_entwining(&datum).unwrap();
                let report = check_entwining(&e);
                assert!(report.passed(), "m = {m}: {report}");
            }
        }
    }

    // Degree bookkeeping: an n-th entwined module over the degree-m datum
    // satisfies the (m-n)-th Doi-Hopf identity.
    #[test]
    fn entwined_modules_are_doi_modules_of_shifted_degree() {
        for b in hopfs() {
            for m in [-1i64, 0, 1] {
                let datum = DoiHopfDatum::self_datum(&b, 0, m);
                let e = doi_hopf_entwining(&datum).unwrap();
                for n in [-1i64, 0, 1] {
                    let u = canonical_module_ha(&e, n).unwrap();
                    assert!(check_entwined_module(&u, &e).unwrap().passed());
                    let doi_u = EntwinedModule::new(
                        u.carrier.clone(),
                        u.action.clone(),
                        u.coaction.clone(),
                        m - n,
                        b.dim(),
                        b.dim(),
                    )
                    .unwrap();
                    let report = check_doi_hopf_module(&doi_u, &datum).unwrap();
                    assert!(report.passed(), "m = {m}, n = {n}: {report}");
                    // the wrong degree fails (the identity genuinely sees k)
                    if !b.alpha().is_identity() {
                        let wrong = EntwinedModule::new(
                            u.carrier.clone(),
                            u.action.clone(),
                            u.coaction.clone(),
                            m - n + 1,
                            b.dim(),
                            b.dim(),
                        )
                        .unwrap();
                        assert!(!check_doi_hopf_module(&wrong, &datum).unwrap().passed());
                    }
                }
            }
        }
    }

    #[test]
    fn doi_codouble_matches_generic_codouble_exactly() {
        for b in hopfs() {
            for m in [-1, 0, 1] {
                let datum = DoiHopfDatum::self_datum(&b, 0, m);
                let direct = doi_codouble(&datum).unwrap();
                let generic = doi_codouble_via_entwining(&datum).unwrap();
                assert_eq!(direct.comult, generic.comult);
                assert_eq!(direct.counit, generic.counit);
                assert!(crate::hom::check_hom_coalgebra(&direct).passed());
            }
        }
    }

    #[test]
    fn trivial_h_collapses_to_plain_tensor() {
        // with H = k the datum coaction and action are forced trivial and
        // the entwining is the bare flip
        let k = samples::trivial_bialgebra();
        let a = samples::cyclic_group_hopf(2).unwrap().bialgebra;
        let ca = ComoduleAlgebra::new(
            a.algebra.clone(),
            a.alpha().kron(&LinearMap::identity(1)),
            1,
        )
        .unwrap();
        let c4 = samples::cyclic_group_hopf(4).unwrap().bialgebra;
        let mc = ModuleCoalgebra::new(
            c4.coalgebra.clone(),
            c4.alpha().kron(&LinearMap::identity(1)),
            1,
        )
        .unwrap();
        let datum = DoiHopfDatum::new(k, ca, mc, 0, 0).unwrap();
        let e = doi_hopf_entwining(&datum).unwrap();
        assert!(check_entwining(&e).passed());
        assert_eq!(e.phi, crate::linmap::flip(4, 2));
        let dc = doi_codouble(&datum).unwrap();
        assert!(crate::hom::check_hom_coalgebra(&dc).passed());
    }

    // The monoidality conditions are a genuine restriction: self-data fail
    // them, data with a trivial side satisfy them.
    #[test]
    fn monoidality_holds_for_trivial_coaction_data() {
        for b in hopfs() {
            let trivial_coaction = b.alpha().kron(b.unit());
            let a = ComoduleAlgebra::new(b.algebra.clone(), trivial_coaction, b.dim()).unwrap();
            let c = ModuleCoalgebra::regular(&b);
            let datum = DoiHopfDatum::new(b.clone(), a, c, 0, 0).unwrap();
            assert!(check_comodule_algebra(&datum.a, &b).unwrap().passed());
            let report = check_doi_monoidal(&datum, &b, &b).unwrap();
            assert!(report.passed(), "{report}");
            // and its entwining is fully monoidal
            let e = doi_hopf_entwining(&datum).unwrap();
            let be = crate::entwine::BialgebraEntwining::new(b.clone(), b.clone(), e.phi).unwrap();
            assert!(crate::entwine::check_entwining_monoidal(&be).passed());
        }
    }

    #[test]
    fn monoidality_fails_for_the_regular_self_datum() {
        for b in hopfs() {
            let datum = DoiHopfDatum::self_datum(&b, 0, 0);
            let report = check_doi_monoidal(&datum, &b, &b).unwrap();
            assert!(!report.passed());
        }
    }

    // Mutation protocol: perturbing the C-action flips the monoidality
    // verdict together with E5/E6 of the induced entwining.
    #[test]
    fn monoidality_and_e5_break_together_under_mutation() {
        let b = samples::cyclic_group_hopf(2).unwrap().bialgebra;
        let trivial_coaction = b.alpha().kron(b.unit());
        let a = ComoduleAlgebra::new(b.algebra.clone(), trivial_coaction, b.dim()).unwrap();
        let mut state = 0x5eed_u64;
        let mut disagreements = 0;
        for _ in 0..12 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let base = ModuleCoalgebra::regular(&b);
            let r = (state >> 33) as usize % base.action.rows();
            let c = (state >> 13) as usize % base.action.cols();
            let action = base.action.perturbed(r, c, &s_one());
            let mc = ModuleCoalgebra::new(b.coalgebra.clone(), action, b.dim()).unwrap();
            let datum = DoiHopfDatum::new(b.clone(), a.clone(), mc, 0, 0).unwrap();
            let monoidal = check_doi_monoidal(&datum, &b, &b).unwrap();
            let e = doi_hopf_entwining(&datum).unwrap();
            let be = crate::entwine::BialgebraEntwining::new(b.clone(), b.clone(), e.phi).unwrap();
            let er = crate::entwine::check_entwining_monoidal(&be);
            let e56 = er.axiom_passed("E5") && er.axiom_passed("E6");
            if monoidal.passed() != e56 {
                disagreements += 1;
            }
        }
        assert_eq!(disagreements, 0);
    }
}
