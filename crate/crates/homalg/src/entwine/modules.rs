//! Entwined modules: simultaneous modules and comodules whose action and
//! coaction are compatible through the entwining map, with an integer
//! degree `n` controlling the automorphism powers in the compatibility:
//!
//! ```text
//! ρ(u·a) = Σ u(0) · α_A(a_Φ) ⊗ α_H^{-n}((α_H^{n+1}(u(1)))^Φ)
//! ```

use super::{check_entwining_monoidal, BialgebraEntwining, EntwiningMap};
use crate::chain::{compare_chains, Chain};
use crate::error::{Error, Result};
use crate::hom::{
    check_right_comodule, check_right_module, HomBialgebra, MonoidalContext, ObjectWithAut,
    RightHomComodule, RightHomModule,
};
use crate::linmap::LinearMap;
use crate::report::CheckReport;

/// A right module over `A` and right comodule over `H` on one carrier,
/// with the degree-`n` entwined compatibility.
#[derive(Clone, Debug)]
pub struct EntwinedModule {
    pub carrier: ObjectWithAut,
    /// `U ⊗ A -> U`.
    pub action: LinearMap,
    /// `U -> U ⊗ H`.
    pub coaction: LinearMap,
    pub n: i64,
}

impl EntwinedModule {
    pub fn new(
        carrier: ObjectWithAut,
        action: LinearMap,
        coaction: LinearMap,
        n: i64,
        da: usize,
        dh: usize,
    ) -> Result<Self> {
        let du = carrier.dim();
        if action.rows() != du || action.cols() != du * da {
            return Err(Error::dims(
                "module action",
                action.shape(),
                format!("{du}x{}", du * da),
            ));
        }
        if coaction.rows() != du * dh || coaction.cols() != du {
            return Err(Error::dims(
                "comodule coaction",
                coaction.shape(),
                format!("{}x{du}", du * dh),
            ));
        }
        Ok(EntwinedModule {
            carrier,
            action,
            coaction,
            n,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn as_module(&self) -> RightHomModule {
        RightHomModule {
            carrier: self.carrier.clone(),
            action: self.action.clone(),
        }
    }

    pub fn as_comodule(&self) -> RightHomComodule {
        RightHomComodule {
            carrier: self.carrier.clone(),
            coaction: self.coaction.clone(),
        }
    }
}

/// Module and comodule axioms plus the degree-`n` compatibility, on all
/// basis pairs of `U ⊗ A`.
pub fn check_entwined_module(u: &EntwinedModule, e: &EntwiningMap) -> Result<CheckReport> {
    let (dh, da, du) = (e.h.dim(), e.a.dim(), u.dim());
    let mut report = CheckReport::new(format!("entwined module (dim {du}, n = {})", u.n));
    report.absorb("module", check_right_module(&u.as_module(), &e.a)?);
    report.absorb("comodule", check_right_comodule(&u.as_comodule(), &e.h)?);

    let id_u = LinearMap::identity(du);
    let id_a = LinearMap::identity(da);
    let lhs = Chain::start(du * da).then(&u.action).then(&u.coaction);
    let rhs = Chain::start(du * da)
        .then_factors(&[&u.coaction, &id_a])
        .then_factors(&[&id_u, &e.h.carrier.alpha_pow(u.n + 1), &id_a])
        .then_factors(&[&id_u, &e.phi])
        .then_factors(&[&id_u, e.a.alpha(), &e.h.carrier.alpha_pow(-u.n)])
        .then_factors(&[&u.action, &LinearMap::identity(dh)]);
    report.push(compare_chains("compat", &lhs, &rhs, &[du, da]));

    Ok(report)
}

/// The canonical entwined module on `H ⊗ A`:
///
/// ```text
/// (h ⊗ a) · x = α_H(h) ⊗ a α_A^{-1}(x)
/// ρ(h ⊗ a) = Σ (h1 ⊗ α_A^{n+1}((α_A^{-n} a)_Φ)) ⊗ h2^Φ
/// ```
pub fn canonical_module_ha(e: &EntwiningMap, n: i64) -> Result<EntwinedModule> {
    let (dh, da) = (e.h.dim(), e.a.dim());
    let (id_h, id_a) = (LinearMap::identity(dh), LinearMap::identity(da));
    let carrier = ObjectWithAut::new(e.h.alpha().kron(e.a.alpha()))?;
    let action = Chain::start(dh * da * da)
        .then_factors(&[&id_h, &id_a, &e.a.carrier.alpha_pow(-1)])
        .then_factors(&[e.h.alpha(), &e.a.mult])
        .materialize();
    let coaction = Chain::start(dh * da)
        .then_factors(&[&e.h.comult, &e.a.carrier.alpha_pow(-n)])
        .then_factors(&[&id_h, &e.phi])
        .then_factors(&[&id_h, &e.a.carrier.alpha_pow(n + 1), &id_h])
        .materialize();
    EntwinedModule::new(carrier, action, coaction, n, da, dh)
}

/// The canonical entwined module on `A ⊗ H`:
///
/// ```text
/// (a ⊗ h) · x = Σ a (α_A(x))_Φ ⊗ (α_H(h))^Φ
/// ρ(a ⊗ h) = (α_A(a) ⊗ h1) ⊗ α_H^{-n}(h2)
/// ```
pub fn canonical_module_ah(e: &EntwiningMap, n: i64) -> Result<EntwinedModule> {
    let (dh, da) = (e.h.dim(), e.a.dim());
    let (id_h, id_a) = (LinearMap::identity(dh), LinearMap::identity(da));
    let carrier = ObjectWithAut::new(e.a.alpha().kron(e.h.alpha()))?;
    let action = Chain::start(da * dh * da)
        .then_factors(&[&id_a, e.h.alpha(), e.a.alpha()])
        .then_factors(&[&id_a, &e.phi])
        .then_factors(&[&e.a.mult, &id_h])
        .materialize();
    let coaction = Chain::start(da * dh)
        .then_factors(&[e.a.alpha(), &e.h.comult])
        .then_factors(&[&id_a, &id_h, &e.h.carrier.alpha_pow(-n)])
        .materialize();
    EntwinedModule::new(carrier, action, coaction, n, da, dh)
}

/// The entwining whose degree-`n` modules are exactly the Hopf modules of
/// a Hom-bialgebra: `Φ(h ⊗ g) = α^{-1}(g1) ⊗ α^{-1}(h) α^n(g2)`.
pub fn hopf_module_entwining(h: &HomBialgebra, n: i64) -> Result<EntwiningMap> {
    let d = h.dim();
    let id = LinearMap::identity(d);
    let am1 = h.carrier().alpha_pow(-1);
    let phi = Chain::start(d * d)
        .then_factors(&[&id, h.comult()])
        .then_permute(&[d, d, d], &[1, 0, 2])
        .then_factors(&[&am1, &am1, &h.carrier().alpha_pow(n)])
        .then_factors(&[&id, h.mult()])
        .materialize();
    EntwiningMap::new(h.coalgebra.clone(), h.algebra.clone(), phi)
}

/// Tensor product of two entwined modules of the same degree in the
/// monoidal context `(i, j)`:
///
/// ```text
/// (u ⊗ v) · a = u · α_A^{-i-2}(a1) ⊗ v · α_A^{-j-2}(a2)
/// ρ(u ⊗ v) = (u(0) ⊗ v(0)) ⊗ α_H^i(u(1)) α_H^j(v(1))
/// ```
///
/// Refuses entwinings that are not monoidal (E5 or E6 failing), since the
/// tensor is only guaranteed entwined in that case.
pub fn tensor_entwined(
    ctx: MonoidalContext,
    u: &EntwinedModule,
    v: &EntwinedModule,
    e: &BialgebraEntwining,
) -> Result<EntwinedModule> {
    let report = check_entwining_monoidal(e);
    if !report.passed() {
        let axiom = report
            .failures()
            .next()
            .map(|c| c.axiom.clone())
            .unwrap_or_default();
        return Err(Error::pre(format!(
            "entwining is not monoidal: axiom {axiom} fails"
        )));
    }
    if u.n != v.n {
        return Err(Error::pre("tensor factors must have the same degree"));
    }
    tensor_entwined_unchecked(ctx, u, v, &e.a, &e.h)
}

/// The tensor structure maps themselves; they reference only the bialgebra
/// structures, never the entwining map, so they can also be formed over a
/// non-monoidal datum to watch the compatibility fail.
pub fn tensor_entwined_unchecked(
    ctx: MonoidalContext,
    u: &EntwinedModule,
    v: &EntwinedModule,
    a: &HomBialgebra,
    h: &HomBialgebra,
) -> Result<EntwinedModule> {
    let (da, dh) = (a.dim(), h.dim());
    let (du, dv) = (u.dim(), v.dim());
    let carrier = ObjectWithAut::new(u.carrier.alpha().kron(v.carrier.alpha()))?;
    let (id_u, id_v) = (LinearMap::identity(du), LinearMap::identity(dv));
    let action = Chain::start(du * dv * da)
        .then_factors(&[&id_u, &id_v, a.comult()])
        .then_factors(&[
            &id_u,
            &id_v,
            &a.carrier().alpha_pow(-ctx.i - 2),
            &a.carrier().alpha_pow(-ctx.j - 2),
        ])
        .then_permute(&[du, dv, da, da], &[0, 2, 1, 3])
        .then_factors(&[&u.action, &v.action])
        .materialize();
    let h_mult_twisted = h.mult().compose(
        &h.carrier()
            .alpha_pow(ctx.i)
            .kron(&h.carrier().alpha_pow(ctx.j)),
    )?;
    let coaction = Chain::start(du * dv)
        .then_factors(&[&u.coaction, &v.coaction])
        .then_permute(&[du, dh, dv, dh], &[0, 2, 1, 3])
        .then_factors(&[&id_u, &id_v, &h_mult_twisted])
        .materialize();
    EntwinedModule::new(carrier, action, coaction, u.n, da, dh)
}
