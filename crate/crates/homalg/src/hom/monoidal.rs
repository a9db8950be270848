//! The ambient twisted monoidal context.
//!
//! Spaces-with-automorphism form a monoidal category whose associativity
//! and unit constraints are twisted by integer powers of the structure
//! automorphisms, parameterized by a pair of integers `(i, j)`:
//!
//! * associator: `(x ⊗ y) ⊗ z ↦ α_X^{i+1}(x) ⊗ (y ⊗ α_Z^{-j-1}(z))`
//! * left unit: `λ ⊗ x ↦ λ α_X^{j+1}(x)`
//! * right unit: `x ⊗ λ ↦ λ α_X^{i+1}(x)`
//!
//! The pentagon and triangle identities hold for every `(i, j)`; the
//! module tests pin this down as exact matrix identities.

use super::ObjectWithAut;
use crate::linmap::LinearMap;

/// The integer pair `(i, j)` selecting the twisted monoidal structure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MonoidalContext {
    pub i: i64,
    pub j: i64,
}

impl MonoidalContext {
    pub fn new(i: i64, j: i64) -> Self {
        MonoidalContext { i, j }
    }
}

/// Associativity constraint `a_{X,Y,Z}` as a matrix on `X ⊗ Y ⊗ Z`.
pub fn associator(
    ctx: MonoidalContext,
    x: &ObjectWithAut,
    y: &ObjectWithAut,
    z: &ObjectWithAut,
) -> LinearMap {
    x.alpha_pow(ctx.i + 1)
        .kron(&LinearMap::identity(y.dim()))
        .kron(&z.alpha_pow(-ctx.j - 1))
}

/// Left unit constraint `l_X : k ⊗ X -> X`.
pub fn unit_left(ctx: MonoidalContext, x: &ObjectWithAut) -> LinearMap {
    x.alpha_pow(ctx.j + 1)
}

/// Right unit constraint `r_X : X ⊗ k -> X`.
pub fn unit_right(ctx: MonoidalContext, x: &ObjectWithAut) -> LinearMap {
    x.alpha_pow(ctx.i + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Result;
    use crate::scalar::s_int;

    fn twisted_2d_objects() -> Result<Vec<ObjectWithAut>> {
        let diag = LinearMap::new(2, 2, [2, 0, 0, 3].iter().map(|&v| s_int(v)).collect())?;
        let shear = LinearMap::new(2, 2, [1, 1, 0, 1].iter().map(|&v| s_int(v)).collect())?;
        let mix = LinearMap::new(2, 2, [1, 2, 1, 3].iter().map(|&v| s_int(v)).collect())?;
        Ok(vec![
            ObjectWithAut::new(diag)?,
            ObjectWithAut::new(shear)?,
            ObjectWithAut::new(mix)?,
        ])
    }

    #[test]
    fn associator_is_identity_when_exponents_vanish() {
        let objs = twisted_2d_objects().unwrap();
        let ctx = MonoidalContext::new(-1, -1);
        let a = associator(ctx, &objs[0], &objs[1], &objs[2]);
        assert!(a.is_identity());
    }

    #[test]
    fn associator_is_identity_for_trivial_automorphisms() {
        for (i, j) in [(0, 0), (2, -2), (-1, 3)] {
            let ctx = MonoidalContext::new(i, j);
            let x = ObjectWithAut::trivial(2);
            let y = ObjectWithAut::trivial(3);
            let z = ObjectWithAut::trivial(2);
            assert!(associator(ctx, &x, &y, &z).is_identity());
        }
    }

    // Oracle: both pentagon paths composed directly as matrices.
    #[test]
    fn pentagon_identity_on_twisted_objects() {
        let objs = twisted_2d_objects().unwrap();
        let w = &objs[0];
        let (x, y, z) = (&objs[0], &objs[1], &objs[2]);
        for i in -2i64..=2 {
            for j in -2i64..=2 {
                let ctx = MonoidalContext::new(i, j);
                let id = |o: &ObjectWithAut| LinearMap::identity(o.dim());
                // ((X⊗Y)⊗Z)⊗W -> X⊗(Y⊗(Z⊗W)) one way...
                let tensor_xy = ObjectWithAut::new(x.alpha().kron(y.alpha())).unwrap();
                let tensor_zw = ObjectWithAut::new(z.alpha().kron(w.alpha())).unwrap();
                let tensor_yz = ObjectWithAut::new(y.alpha().kron(z.alpha())).unwrap();
                let path1 = associator(ctx, x, y, &tensor_zw)
                    .compose(&associator(ctx, &tensor_xy, z, w))
                    .unwrap();
                // ...and the other way around.
                let path2 = id(x)
                    .kron(&associator(ctx, y, z, w))
                    .compose(&associator(ctx, x, &tensor_yz, w))
                    .unwrap()
                    .compose(&associator(ctx, x, y, z).kron(&id(w)))
                    .unwrap();
                assert_eq!(path1, path2, "pentagon at ({i},{j})");
            }
        }
    }

    #[test]
    fn triangle_identity_on_twisted_objects() {
        let objs = twisted_2d_objects().unwrap();
        let (x, y) = (&objs[1], &objs[2]);
        let unit = ObjectWithAut::trivial(1);
        for i in -2i64..=2 {
            for j in -2i64..=2 {
                let ctx = MonoidalContext::new(i, j);
                let lhs = LinearMap::identity(x.dim())
                    .kron(&unit_left(ctx, y))
                    .compose(&associator(ctx, x, &unit, y))
                    .unwrap();
                let rhs = unit_right(ctx, x).kron(&LinearMap::identity(y.dim()));
                assert_eq!(lhs, rhs, "triangle at ({i},{j})");
            }
        }
    }

    #[test]
    fn unit_constraints_have_exact_inverses() {
        let objs = twisted_2d_objects().unwrap();
        let ctx = MonoidalContext::new(1, -2);
        for o in &objs {
            assert!(unit_left(ctx, o)
                .compose(&unit_left(ctx, o).invert().unwrap())
                .unwrap()
                .is_identity());
            assert!(unit_right(ctx, o)
                .compose(&unit_right(ctx, o).invert().unwrap())
                .unwrap()
                .is_identity());
        }
    }
}
