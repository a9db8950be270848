//! Twisting a classical bialgebra along one of its automorphisms.
//!
//! Given a classical bialgebra `B` (structure automorphism = identity) and
//! a bialgebra automorphism `α`, the twist `(B, α∘μ, 1, Δ∘α, ε, α)` is a
//! Hom-bialgebra. This is the crate's generator of genuinely twisted test
//! structures. For Hopf inputs the antipode is kept as-is; the checker,
//! not this constructor, is the source of truth for the twisted axioms.

use super::{
    check_hom_bialgebra, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, ObjectWithAut,
};
use crate::error::{Error, Result};
use crate::linmap::LinearMap;

fn automorphism_violation(b: &HomBialgebra, alpha: &LinearMap) -> Result<Option<&'static str>> {
    let aa = alpha.kron(alpha);
    if alpha.compose(b.mult())? != b.mult().compose(&aa)? {
        return Ok(Some("α∘μ = μ∘(α⊗α)"));
    }
    if b.comult().compose(alpha)? != aa.compose(b.comult())? {
        return Ok(Some("Δ∘α = (α⊗α)∘Δ"));
    }
    if &alpha.compose(b.unit())? != b.unit() {
        return Ok(Some("α(1) = 1"));
    }
    if &b.counit().compose(alpha)? != b.counit() {
        return Ok(Some("ε∘α = ε"));
    }
    Ok(None)
}

/// Twist a classical bialgebra by one of its automorphisms.
pub fn yau_twist(classical: &HomBialgebra, alpha: &LinearMap) -> Result<HomBialgebra> {
    if !classical.alpha().is_identity() {
        return Err(Error::pre(
            "twist input must be classical (identity structure map)",
        ));
    }
    if !check_hom_bialgebra(classical).passed() {
        return Err(Error::pre(
            "twist input does not satisfy the classical bialgebra axioms",
        ));
    }
    if let Some(identity) = automorphism_violation(classical, alpha)? {
        return Err(Error::pre(format!(
            "twist map is not a bialgebra automorphism: violates {identity}"
        )));
    }
    let carrier = ObjectWithAut::new(alpha.clone())?;
    let algebra = HomAlgebra::new(
        carrier.clone(),
        alpha.compose(classical.mult())?,
        classical.unit().clone(),
    )?;
    let coalgebra = HomCoalgebra::new(
        carrier,
        classical.comult().compose(alpha)?,
        classical.counit().clone(),
    )?;
    HomBialgebra::new(algebra, coalgebra)
}

/// Twist a classical Hopf algebra; the antipode is carried over unchanged.
pub fn yau_twist_hopf(classical: &HomHopfAlgebra, alpha: &LinearMap) -> Result<HomHopfAlgebra> {
    let bialgebra = yau_twist(&classical.bialgebra, alpha)?;
    HomHopfAlgebra::new(bialgebra, classical.antipode.clone())
}

#[cfg(test)]
mod tests {
    #![allow(clippy::needless_range_loop)]
    use super::*;
    use crate::hom::samples;
    use crate::hom::{check_hom_algebra, check_hom_hopf};
    use crate::scalar::s_int;

    #[test]
    fn identity_twist_is_a_no_op() {
        let b = samples::cyclic_group_hopf(2).unwrap().bialgebra;
        let t = yau_twist(&b, &LinearMap::identity(2)).unwrap();
        assert_eq!(t, b);
    }

    #[test]
    fn non_automorphism_is_rejected_with_identity_name() {
        let b = samples::cyclic_group_hopf(2).unwrap().bialgebra;
        let bad = LinearMap::new(2, 2, [1, 0, 0, 2].iter().map(|&v| s_int(v)).collect()).unwrap();
        let err = yau_twist(&b, &bad).unwrap_err();
        assert!(err.to_string().contains("α∘μ"), "got: {err}");
    }

    #[test]
    fn twisted_kc4_passes_all_checks() {
        let t = samples::twisted_kc4().unwrap();
        assert!(check_hom_hopf(&t).passed());
        assert!(!t.alpha().is_identity());
    }

    // Oracle: exhaustive evaluation of the twisted associativity on every
    // basis triple, computed from raw structure constants.
    #[test]
    fn twisted_kc4_associativity_by_direct_evaluation() {
        let t = samples::twisted_kc4().unwrap().bialgebra;
        assert!(check_hom_algebra(&t.algebra).passed());
        let d = t.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    // α(e_a)(e_b e_c) vs (e_a e_b)α(e_c), fully expanded
                    let alpha = t.alpha();
                    let mult = t.mult();
                    let mut lhs = vec![crate::scalar::s_zero(); d];
                    for (p, ap) in alpha.column(a).iter().enumerate() {
                        for q in 0..d {
                            let bc = mult.entry(q, b * d + c);
                            if bc.is_zero() || ap.is_zero() {
                                continue;
                            }
                            for r in 0..d {
                                let m = mult.entry(r, p * d + q);
                                if !m.is_zero() {
                                    lhs[r] += m * ap * bc;
                                }
                            }
                        }
                    }
                    let mut rhs = vec![crate::scalar::s_zero(); d];
                    for p in 0..d {
                        let ab = mult.entry(p, a * d + b);
                        if ab.is_zero() {
                            continue;
                        }
                        for (q, cq) in alpha.column(c).iter().enumerate() {
                            if cq.is_zero() {
                                continue;
                            }
                            for r in 0..d {
                                let m = mult.entry(r, p * d + q);
                                if !m.is_zero() {
                                    rhs[r] += m * ab * cq;
                                }
                            }
                        }
                    }
                    assert_eq!(lhs, rhs, "associativity at ({a},{b},{c})");
                }
            }
        }
    }

    #[test]
    fn twisted_sweedler_passes_hopf_check() {
        let t = samples::twisted_sweedler().unwrap();
        assert!(check_hom_hopf(&t).passed());
        assert!(!t.alpha().is_identity());
    }

    use num_traits::Zero;
}
