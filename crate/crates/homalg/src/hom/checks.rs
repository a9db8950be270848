//! Axiom checkers. Every universal identity is multilinear, so checking it
//! on all basis tuples is sound and complete; the checkers do exactly that
//! and report a failing basis tuple with both evaluated sides.

use super::{
    HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, RightHomComodule, RightHomModule,
};
use crate::chain::{compare_chains, Chain};
use crate::error::{Error, Result};
use crate::linmap::{flip, LinearMap};
use crate::report::CheckReport;

/// Full Hom-algebra axiom sweep. The multiplicativity of the structure
/// automorphism (`α∘μ = μ∘(α⊗α)`) is required here, and reported under
/// its own axiom id `alpha_mult` so consumers that want the weaker
/// axiom set can filter that group out of the report.
pub fn check_hom_algebra(a: &HomAlgebra) -> CheckReport {
    let d = a.dim();
    let id = LinearMap::identity(d);
    let alpha = a.alpha();
    let mut report = CheckReport::new(format!("hom-algebra (dim {d})"));

    // α(a)(bc) = (ab)α(c)
    let lhs = Chain::start(d * d * d)
        .then_factors(&[alpha, &a.mult])
        .then(&a.mult);
    let rhs = Chain::start(d * d * d)
        .then_factors(&[&a.mult, alpha])
        .then(&a.mult);
    report.push(compare_chains("assoc", &lhs, &rhs, &[d, d, d]));

    // 1a = α(a) = a1
    let left_unit = Chain::start(d).then_factors(&[&a.unit, &id]).then(&a.mult);
    let right_unit = Chain::start(d).then_factors(&[&id, &a.unit]).then(&a.mult);
    let alpha_chain = Chain::start(d).then(alpha);
    report.push(compare_chains("unit_left", &left_unit, &alpha_chain, &[d]));
    report.push(compare_chains(
        "unit_right",
        &right_unit,
        &alpha_chain,
        &[d],
    ));

    // α(1) = 1
    let unit_fixed = Chain::start(1).then(&a.unit).then(alpha);
    report.push(compare_chains(
        "unit_fixed",
        &unit_fixed,
        &Chain::start(1).then(&a.unit),
        &[1],
    ));

    // α is multiplicative (μ is a morphism for α)
    let lhs = Chain::start(d * d).then(&a.mult).then(alpha);
    let rhs = Chain::start(d * d)
        .then_factors(&[alpha, alpha])
        .then(&a.mult);
    report.push(compare_chains("alpha_mult", &lhs, &rhs, &[d, d]));

    report
}

/// Dual axiom sweep; the comultiplicativity of the automorphism is the
/// separately-named `alpha_comult` group, mirroring [`check_hom_algebra`].
pub fn check_hom_coalgebra(c: &HomCoalgebra) -> CheckReport {
    let d = c.dim();
    let id = LinearMap::identity(d);
    let alpha = c.alpha();
    let mut report = CheckReport::new(format!("hom-coalgebra (dim {d})"));

    // α(c1) ⊗ Δ(c2) = Δ(c1) ⊗ α(c2)
    let lhs = Chain::start(d)
        .then(&c.comult)
        .then_factors(&[alpha, &c.comult]);
    let rhs = Chain::start(d)
        .then(&c.comult)
        .then_factors(&[&c.comult, alpha]);
    report.push(compare_chains("coassoc", &lhs, &rhs, &[d]));

    // ε(c1)c2 = α(c) = c1 ε(c2)
    let alpha_chain = Chain::start(d).then(alpha);
    let left = Chain::start(d)
        .then(&c.comult)
        .then_factors(&[&c.counit, &id]);
    let right = Chain::start(d)
        .then(&c.comult)
        .then_factors(&[&id, &c.counit]);
    report.push(compare_chains("counit_left", &left, &alpha_chain, &[d]));
    report.push(compare_chains("counit_right", &right, &alpha_chain, &[d]));

    // ε ∘ α = ε
    let lhs = Chain::start(d).then(alpha).then(&c.counit);
    report.push(compare_chains(
        "counit_alpha",
        &lhs,
        &Chain::start(d).then(&c.counit),
        &[d],
    ));

    // α is comultiplicative (Δ is a morphism for α)
    let lhs = Chain::start(d).then(alpha).then(&c.comult);
    let rhs = Chain::start(d)
        .then(&c.comult)
        .then_factors(&[alpha, alpha]);
    report.push(compare_chains("alpha_comult", &lhs, &rhs, &[d]));

    report
}

pub fn check_hom_bialgebra(b: &HomBialgebra) -> CheckReport {
    let d = b.dim();
    let mut report = CheckReport::new(format!("hom-bialgebra (dim {d})"));
    report.absorb("algebra", check_hom_algebra(&b.algebra));
    report.absorb("coalgebra", check_hom_coalgebra(&b.coalgebra));

    // Δ(ab) = Δ(a)Δ(b) componentwise
    let lhs = Chain::start(d * d).then(b.mult()).then(b.comult());
    let rhs = Chain::start(d * d)
        .then_factors(&[b.comult(), b.comult()])
        .then_permute(&[d, d, d, d], &[0, 2, 1, 3])
        .then_factors(&[b.mult(), b.mult()]);
    report.push(compare_chains("comult_mult", &lhs, &rhs, &[d, d]));

    // Δ(1) = 1 ⊗ 1
    let lhs = Chain::start(1).then(b.unit()).then(b.comult());
    let rhs = Chain::start(1).then_factors(&[b.unit(), b.unit()]);
    report.push(compare_chains("comult_unit", &lhs, &rhs, &[1]));

    // ε(ab) = ε(a)ε(b)
    let lhs = Chain::start(d * d).then(b.mult()).then(b.counit());
    let rhs = Chain::start(d * d).then_factors(&[b.counit(), b.counit()]);
    report.push(compare_chains("counit_mult", &lhs, &rhs, &[d, d]));

    // ε(1) = 1
    let lhs = Chain::start(1).then(b.unit()).then(b.counit());
    let rhs = Chain::start(1);
    report.push(compare_chains("counit_unit", &lhs, &rhs, &[1]));

    report
}

pub fn check_hom_hopf(h: &HomHopfAlgebra) -> CheckReport {
    let d = h.dim();
    let b = &h.bialgebra;
    let s = &h.antipode;
    let id = LinearMap::identity(d);
    let mut report = CheckReport::new(format!("hom-hopf (dim {d})"));
    report.absorb("bialgebra", check_hom_bialgebra(b));

    // S * id = id * S = η ∘ ε  (convolution through Δ then μ)
    let eta_eps = Chain::start(d).then(b.counit()).then(b.unit());
    let left = Chain::start(d)
        .then(b.comult())
        .then_factors(&[s, &id])
        .then(b.mult());
    let right = Chain::start(d)
        .then(b.comult())
        .then_factors(&[&id, s])
        .then(b.mult());
    report.push(compare_chains("antipode_left", &left, &eta_eps, &[d]));
    report.push(compare_chains("antipode_right", &right, &eta_eps, &[d]));

    // S ∘ α = α ∘ S
    let lhs = Chain::start(d).then(b.alpha()).then(s);
    let rhs = Chain::start(d).then(s).then(b.alpha());
    report.push(compare_chains("antipode_alpha", &lhs, &rhs, &[d]));

    // Derived identities, valid whenever α is invertible (always here):
    // S(ab) = S(b)S(a), S(1) = 1, Δ(S(a)) = S(a2) ⊗ S(a1), ε∘S = ε.
    let lhs = Chain::start(d * d).then(b.mult()).then(s);
    let rhs = Chain::start(d * d)
        .then_factors(&[s, s])
        .then(&flip(d, d))
        .then(b.mult());
    report.push(compare_chains("antipode_antihom", &lhs, &rhs, &[d, d]));

    let lhs = Chain::start(1).then(b.unit()).then(s);
    report.push(compare_chains(
        "antipode_unit",
        &lhs,
        &Chain::start(1).then(b.unit()),
        &[1],
    ));

    let lhs = Chain::start(d).then(s).then(b.comult());
    let rhs = Chain::start(d)
        .then(b.comult())
        .then_factors(&[s, s])
        .then(&flip(d, d));
    report.push(compare_chains("antipode_anticohom", &lhs, &rhs, &[d]));

    let lhs = Chain::start(d).then(s).then(b.counit());
    report.push(compare_chains(
        "antipode_counit",
        &lhs,
        &Chain::start(d).then(b.counit()),
        &[d],
    ));

    report
}

pub fn check_right_module(m: &RightHomModule, a: &HomAlgebra) -> Result<CheckReport> {
    let du = m.dim();
    let da = a.dim();
    if m.action.cols() != du * da {
        return Err(Error::dims(
            "module over algebra",
            m.action.shape(),
            format!("{du}x{}", du * da),
        ));
    }
    let id_u = LinearMap::identity(du);
    let alpha_u = m.carrier.alpha();
    let mut report = CheckReport::new(format!("right module (dim {du} over dim {da})"));

    // α_U(u)·(ab) = (u·a)·α_A(b)
    let lhs = Chain::start(du * da * da)
        .then_factors(&[alpha_u, &a.mult])
        .then(&m.action);
    let rhs = Chain::start(du * da * da)
        .then_factors(&[&m.action, a.alpha()])
        .then(&m.action);
    report.push(compare_chains("assoc", &lhs, &rhs, &[du, da, da]));

    // u·1 = α_U(u)
    let lhs = Chain::start(du)
        .then_factors(&[&id_u, &a.unit])
        .then(&m.action);
    report.push(compare_chains(
        "unit",
        &lhs,
        &Chain::start(du).then(alpha_u),
        &[du],
    ));

    // α_U(u·a) = α_U(u)·α_A(a)
    let lhs = Chain::start(du * da).then(&m.action).then(alpha_u);
    let rhs = Chain::start(du * da)
        .then_factors(&[alpha_u, a.alpha()])
        .then(&m.action);
    report.push(compare_chains("alpha_nat", &lhs, &rhs, &[du, da]));

    Ok(report)
}

pub fn check_right_comodule(m: &RightHomComodule, c: &HomCoalgebra) -> Result<CheckReport> {
    let du = m.dim();
    let dc = c.dim();
    if m.coaction.rows() != du * dc {
        return Err(Error::dims(
            "comodule over coalgebra",
            m.coaction.shape(),
            format!("{}x{du}", du * dc),
        ));
    }
    let id_u = LinearMap::identity(du);
    let alpha_u = m.carrier.alpha();
    let mut report = CheckReport::new(format!("right comodule (dim {du} over dim {dc})"));

    // α_U(u0) ⊗ Δ(u1) = ρ(u0) ⊗ α(u1)
    let lhs = Chain::start(du)
        .then(&m.coaction)
        .then_factors(&[alpha_u, &c.comult]);
    let rhs = Chain::start(du)
        .then(&m.coaction)
        .then_factors(&[&m.coaction, c.alpha()]);
    report.push(compare_chains("coassoc", &lhs, &rhs, &[du]));

    // u0 ε(u1) = α_U(u)
    let lhs = Chain::start(du)
        .then(&m.coaction)
        .then_factors(&[&id_u, &c.counit]);
    report.push(compare_chains(
        "counit",
        &lhs,
        &Chain::start(du).then(alpha_u),
        &[du],
    ));

    // ρ ∘ α_U = (α_U ⊗ α_C) ∘ ρ
    let lhs = Chain::start(du).then(alpha_u).then(&m.coaction);
    let rhs = Chain::start(du)
        .then(&m.coaction)
        .then_factors(&[alpha_u, c.alpha()]);
    report.push(compare_chains("alpha_nat", &lhs, &rhs, &[du]));

    Ok(report)
}

/// The regular module: an algebra acting on itself by multiplication.
pub fn regular_module(a: &HomAlgebra) -> RightHomModule {
    RightHomModule {
        carrier: a.carrier.clone(),
        action: a.mult.clone(),
    }
}

/// The regular comodule: a coalgebra coacting on itself by Δ.
pub fn regular_comodule(c: &HomCoalgebra) -> RightHomComodule {
    RightHomComodule {
        carrier: c.carrier.clone(),
        coaction: c.comult.clone(),
    }
}
