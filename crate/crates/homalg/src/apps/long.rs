//! Long dimodules and the D-equation.
//!
//! A Long dimodule over a Hom-bialgebra `H` is a module-and-comodule
//! whose structures interact only through automorphisms:
//! `ρ(u·h) = u(0)·α(h) ⊗ α(u(1))`. They are the entwined modules of the
//! plain flip entwining, their pair maps `ξ` solve a twisted D-equation,
//! and the associated codouble carries a bilinear form `ζ` solving the
//! convolution D-equation.

use crate::chain::{compare_chains, Chain};
use crate::entwine::{codouble_bialgebra, BialgebraEntwining};
use crate::error::{Error, Result};
use crate::hom::{
    associator, check_right_comodule, check_right_module, HomBialgebra, MonoidalContext,
    ObjectWithAut,
};
use crate::linmap::LinearMap;
use crate::report::CheckReport;
use num_traits::Zero;

/// A module-and-comodule over one Hom-bialgebra with the Long
/// compatibility.
#[derive(Clone, Debug)]
pub struct LongDimodule {
    pub carrier: ObjectWithAut,
    /// `U ⊗ H -> U`.
    pub action: LinearMap,
    /// `U -> U ⊗ H`.
    pub coaction: LinearMap,
}

impl LongDimodule {
    pub fn new(
        carrier: ObjectWithAut,
        action: LinearMap,
        coaction: LinearMap,
        dh: usize,
    ) -> Result<Self> {
        let du = carrier.dim();
        if action.rows() != du || action.cols() != du * dh {
            return Err(Error::dims(
                "dimodule action",
                action.shape(),
                format!("{du}x{}", du * dh),
            ));
        }
        if coaction.rows() != du * dh || coaction.cols() != du {
            return Err(Error::dims(
                "dimodule coaction",
                coaction.shape(),
                format!("{}x{du}", du * dh),
            ));
        }
        Ok(LongDimodule {
            carrier,
            action,
            coaction,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    /// `H` acting on itself by multiplication, coacting trivially
    /// (`u ↦ α(u) ⊗ 1`).
    pub fn with_regular_action(h: &HomBialgebra) -> Self {
        LongDimodule {
            carrier: h.carrier().clone(),
            action: h.mult().clone(),
            coaction: h.alpha().kron(h.unit()),
        }
    }

    /// `H` coacting on itself by comultiplication, acted on trivially
    /// (`u·x = ε(x) α(u)`).
    pub fn with_regular_coaction(h: &HomBialgebra) -> Self {
        LongDimodule {
            carrier: h.carrier().clone(),
            action: h.alpha().kron(h.counit()),
            coaction: h.comult().clone(),
        }
    }

    /// Both structures trivial.
    pub fn trivial(h: &HomBialgebra) -> Self {
        LongDimodule {
            carrier: h.carrier().clone(),
            action: h.alpha().kron(h.counit()),
            coaction: h.alpha().kron(h.unit()),
        }
    }
}

/// The flip entwining on `(H, H)`; it satisfies all six entwining axioms
/// for any Hom-bialgebra, and its entwined modules are exactly the Long
/// dimodules (for every degree).
pub fn long_entwining(h: &HomBialgebra) -> BialgebraEntwining {
    BialgebraEntwining::flip(h.clone(), h.clone())
}

/// The Long codouble `(H*)^cop ⊗ H`, a Hom-bialgebra.
pub fn long_codouble(h: &HomBialgebra) -> Result<HomBialgebra> {
    codouble_bialgebra(&long_entwining(h))
}

/// Module and comodule axioms plus the Long compatibility
/// `ρ(u·h) = u(0)·α(h) ⊗ α(u(1))` on all basis pairs.
pub fn check_long_dimodule(u: &LongDimodule, h: &HomBialgebra) -> Result<CheckReport> {
    let (dh, du) = (h.dim(), u.dim());
    let mut report = CheckReport::new(format!("long dimodule (dim {du})"));
    let module = crate::hom::RightHomModule::new(u.carrier.clone(), u.action.clone(), dh)?;
    report.absorb("module", check_right_module(&module, &h.algebra)?);
    let comodule = crate::hom::RightHomComodule::new(u.carrier.clone(), u.coaction.clone(), dh)?;
    report.absorb("comodule", check_right_comodule(&comodule, &h.coalgebra)?);

    let id_h = LinearMap::identity(dh);
    let lhs = Chain::start(du * dh).then(&u.action).then(&u.coaction);
    let rhs = Chain::start(du * dh)
        .then_factors(&[&u.coaction, &id_h])
        .then_permute(&[du, dh, dh], &[0, 2, 1])
        .then_factors(&[&LinearMap::identity(du), h.alpha(), h.alpha()])
        .then_factors(&[&u.action, &id_h]);
    report.push(compare_chains("compat", &lhs, &rhs, &[du, dh]));

    Ok(report)
}

/// The degree-`m` pair map of two Long dimodules:
/// `ξ(u ⊗ v) = α_U^{-1}(u)·α_H^m(v(1)) ⊗ α_V^{-1}(v(0))`.
pub fn d_map_xi(m_deg: i64, u: &LongDimodule, v: &LongDimodule, h: &HomBialgebra) -> LinearMap {
    let (du, dv) = (u.dim(), v.dim());
    Chain::start(du * dv)
        .then_factors(&[&LinearMap::identity(du), &v.coaction])
        .then_permute(&[du, dv, h.dim()], &[0, 2, 1])
        .then_factors(&[
            &u.carrier.alpha_pow(-1),
            &h.carrier().alpha_pow(m_deg),
            &v.carrier.alpha_pow(-1),
        ])
        .then_factors(&[&u.action, &LinearMap::identity(dv)])
        .materialize()
}

/// The twisted D-equation for `ξ` on `(U ⊗ V) ⊗ W`: with
/// `κ = a^{-1} ∘ (id_U ⊗ ξ_{V,W}) ∘ a` (both vertical arrows of the
/// defining diagram are `ξ_{U,V} ⊗ id_W`), assert
/// `(ξ_{U,V} ⊗ id_W) ∘ κ = κ ∘ (ξ_{U,V} ⊗ id_W)` exactly.
pub fn check_d_equation(
    ctx: MonoidalContext,
    m_deg: i64,
    u: &LongDimodule,
    v: &LongDimodule,
    w: &LongDimodule,
    h: &HomBialgebra,
) -> Result<CheckReport> {
    let mut report = CheckReport::new(format!(
        "d-equation (dims {}x{}x{}, m = {m_deg}, ctx = ({}, {}))",
        u.dim(),
        v.dim(),
        w.dim(),
        ctx.i,
        ctx.j
    ));
    let a = associator(ctx, &u.carrier, &v.carrier, &w.carrier);
    let a_inv = a.invert()?;
    let xi_uv = d_map_xi(m_deg, u, v, h).kron(&LinearMap::identity(w.dim()));
    let kappa = a_inv
        .compose(&LinearMap::identity(u.dim()).kron(&d_map_xi(m_deg, v, w, h)))?
        .compose(&a)?;
    let lhs = xi_uv.compose(&kappa)?;
    let rhs = kappa.compose(&xi_uv)?;
    report.push(compare_chains(
        "d_equation",
        &Chain::start(lhs.cols()).then(&lhs),
        &Chain::start(rhs.cols()).then(&rhs),
        &[u.dim(), v.dim(), w.dim()],
    ));
    Ok(report)
}

/// The degree-`q` bilinear form on the Long codouble `D = (H*)^cop ⊗ H`:
/// `ζ(f ⊗ x, f' ⊗ y) = f(α_H^q(y)) ε_H(x) f'(1_H)`, as a covector on
/// `D ⊗ D`.
fn zeta_form(q_deg: i64, h: &HomBialgebra) -> LinearMap {
    let dh = h.dim();
    let dd = dh * dh;
    let alpha_q = h.carrier().alpha_pow(q_deg);
    LinearMap::from_fn(1, dd * dd, |_, col| {
        let (left, right) = (col / dd, col % dd);
        let (a, x) = (left / dh, left % dh);
        let (b, y) = (right / dh, right % dh);
        alpha_q.entry(a, y) * h.counit().entry(0, x) * h.unit().entry(b, 0)
    })
}

/// Convolution of two covectors on `D ⊗ D ⊗ D` in the slotwise coalgebra
/// structure twisted by `α_D^{-2}` (the same twist as the dual
/// convolution product):
///
/// ```text
/// (θ * θ')(t1 ⊗ t2 ⊗ t3) = Σ θ(ᾱ(t1.1), ᾱ(t2.1), ᾱ(t3.1)) θ'(ᾱ(t1.2), ᾱ(t2.2), ᾱ(t3.2))
/// ```
///
/// with `ᾱ = α_D^{-2}` and `t.1 ⊗ t.2` the codouble comultiplication.
fn convolve_on_cube(
    theta: &LinearMap,
    theta_p: &LinearMap,
    m2: &LinearMap,
    dd: usize,
) -> LinearMap {
    Chain::start(dd * dd * dd)
        .then_factors(&[m2, m2, m2])
        .then_permute(&[dd, dd, dd, dd, dd, dd], &[0, 2, 4, 1, 3, 5])
        .then_factors(&[theta, theta_p])
        .materialize()
}

/// The convolution D-equation `ζ¹² * ζ²³ = ζ²³ * ζ¹²` on the Long
/// codouble, plus the two closed-form identities
/// `(ζ¹² * ζ²³)(f⊗x, f'⊗y, f''⊗z) = f(α^q(y)) ε(x) f'(α^q(z)) f''(1)` that
/// pin the convolution structure itself.
pub fn check_zeta_d_type(q_deg: i64, h: &HomBialgebra) -> Result<CheckReport> {
    let dh = h.dim();
    let dd = dh * dh;
    let codouble = long_codouble(h)?;
    let mut report = CheckReport::new(format!("zeta d-type (q = {q_deg}, codouble dim {dd})"));

    let zeta = zeta_form(q_deg, h);
    let eps_d = codouble.counit().clone();
    let zeta12 = zeta.kron(&eps_d);
    let zeta23 = eps_d.kron(&zeta);
    let m2 = {
        let a2 = codouble.carrier().alpha_pow(-2);
        a2.kron(&a2).compose(codouble.comult())?
    };

    let conv_12_23 = convolve_on_cube(&zeta12, &zeta23, &m2, dd);
    let conv_23_12 = convolve_on_cube(&zeta23, &zeta12, &m2, dd);
    report.push(compare_chains(
        "d_type",
        &Chain::start(dd * dd * dd).then(&conv_12_23),
        &Chain::start(dd * dd * dd).then(&conv_23_12),
        &[dd, dd, dd],
    ));

    // closed form: f(α^q(y)) ε(x) f'(α^q(z)) f''(1)
    let alpha_q = h.carrier().alpha_pow(q_deg);
    let closed = LinearMap::from_fn(1, dd * dd * dd, |_, col| {
        let t3 = col % dd;
        let t2 = (col / dd) % dd;
        let t1 = col / (dd * dd);
        let (a, x) = (t1 / dh, t1 % dh);
        let (b, y) = (t2 / dh, t2 % dh);
        let (c, z) = (t3 / dh, t3 % dh);
        let v = alpha_q.entry(a, y) * h.counit().entry(0, x) * alpha_q.entry(b, z);
        if v.is_zero() {
            v
        } else {
            v * h.unit().entry(c, 0)
        }
    });
    report.push(compare_chains(
        "closed_form_12_23",
        &Chain::start(dd * dd * dd).then(&conv_12_23),
        &Chain::start(dd * dd * dd).then(&closed),
        &[dd, dd, dd],
    ));
    report.push(compare_chains(
        "closed_form_23_12",
        &Chain::start(dd * dd * dd).then(&conv_23_12),
        &Chain::start(dd * dd * dd).then(&closed),
        &[dd, dd, dd],
    ));

    Ok(report)
}
