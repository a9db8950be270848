//! Generators for the standard small structures used across the test
//! suites and the runnable examples: cyclic group algebras, the
//! 4-dimensional Sweedler Hopf algebra, and their twists.

use super::{
    yau_twist_hopf, HomAlgebra, HomBialgebra, HomCoalgebra, HomHopfAlgebra, ObjectWithAut,
};
use crate::error::Result;
use crate::linmap::LinearMap;
use crate::scalar::{s_int, s_one, Scalar};
use num_traits::Zero;

/// The one-dimensional bialgebra on the ground field.
pub fn trivial_bialgebra() -> HomBialgebra {
    let carrier = ObjectWithAut::trivial(1);
    let algebra = HomAlgebra::new(
        carrier.clone(),
        LinearMap::identity(1),
        LinearMap::identity(1),
    )
    .unwrap();
    let coalgebra =
        HomCoalgebra::new(carrier, LinearMap::identity(1), LinearMap::identity(1)).unwrap();
    HomBialgebra::new(algebra, coalgebra).unwrap()
}

pub fn trivial_hopf() -> HomHopfAlgebra {
    HomHopfAlgebra::new(trivial_bialgebra(), LinearMap::identity(1)).unwrap()
}

/// Group algebra of the cyclic group of order `n`, as a classical Hopf
/// algebra: basis `g^0 .. g^{n-1}`, grouplike comultiplication, antipode
/// `g ↦ g^{-1}`.
pub fn cyclic_group_hopf(n: usize) -> Result<HomHopfAlgebra> {
    assert!(n >= 1);
    let carrier = ObjectWithAut::trivial(n);
    let mut mult = LinearMap::zeros(n, n * n);
    for i in 0..n {
        for j in 0..n {
            mult.set_entry((i + j) % n, i * n + j, s_one());
        }
    }
    let mut comult = LinearMap::zeros(n * n, n);
    for k in 0..n {
        comult.set_entry(k * n + k, k, s_one());
    }
    let counit = LinearMap::from_fn(1, n, |_, _| s_one());
    let unit = LinearMap::basis_col(n, 0);
    let mut antipode = LinearMap::zeros(n, n);
    for k in 0..n {
        antipode.set_entry((n - k) % n, k, s_one());
    }
    let algebra = HomAlgebra::new(carrier.clone(), mult, unit)?;
    let coalgebra = HomCoalgebra::new(carrier, comult, counit)?;
    HomHopfAlgebra::new(HomBialgebra::new(algebra, coalgebra)?, antipode)
}

/// The automorphism `g ↦ g^{-1}` of a cyclic group algebra.
pub fn cyclic_inversion(n: usize) -> LinearMap {
    let mut a = LinearMap::zeros(n, n);
    for k in 0..n {
        a.set_entry((n - k) % n, k, s_one());
    }
    a
}

/// The 4-dimensional Sweedler Hopf algebra: basis `{1, g, x, gx}` with
/// `g² = 1`, `x² = 0`, `xg = -gx`, `Δ(g) = g⊗g`, `Δ(x) = 1⊗x + x⊗g`,
/// `S(g) = g`, `S(x) = -xg`.
pub fn sweedler_hopf() -> Result<HomHopfAlgebra> {
    let d = 4;
    let carrier = ObjectWithAut::trivial(d);
    // basis indices: 0 = 1, 1 = g, 2 = x, 3 = gx
    let mut mult = LinearMap::zeros(d, d * d);
    let mut set = |i: usize, j: usize, k: usize, v: i64| {
        let old = mult.entry(k, i * d + j) + s_int(v);
        mult.set_entry(k, i * d + j, old);
    };
    for j in 0..d {
        set(0, j, j, 1); // 1·y = y
    }
    for i in 1..d {
        set(i, 0, i, 1); // y·1 = y
    }
    set(1, 1, 0, 1); // g·g = 1
    set(1, 2, 3, 1); // g·x = gx
    set(1, 3, 2, 1); // g·gx = x
    set(2, 1, 3, -1); // x·g = -gx
    set(3, 1, 2, -1); // gx·g = -x
                      // x·x = x·gx = gx·x = gx·gx = 0

    let mut comult = LinearMap::zeros(d * d, d);
    comult.set_entry(0, 0, s_one()); // Δ(1) = 1⊗1
    comult.set_entry(d + 1, 1, s_one()); // Δ(g) = g⊗g
    comult.set_entry(2, 2, s_one()); // Δ(x) = 1⊗x + x⊗g
    comult.set_entry(2 * d + 1, 2, s_one());
    comult.set_entry(d + 3, 3, s_one()); // Δ(gx) = g⊗gx + gx⊗1
    comult.set_entry(3 * d, 3, s_one());

    let counit = LinearMap::new(1, d, vec![s_one(), s_one(), Scalar::zero(), Scalar::zero()])?;
    let unit = LinearMap::basis_col(d, 0);

    let mut antipode = LinearMap::zeros(d, d);
    antipode.set_entry(0, 0, s_one()); // S(1) = 1
    antipode.set_entry(1, 1, s_one()); // S(g) = g
    antipode.set_entry(3, 2, s_one()); // S(x) = -xg = gx
    antipode.set_entry(2, 3, -s_one()); // S(gx) = -x

    let algebra = HomAlgebra::new(carrier.clone(), mult, unit)?;
    let coalgebra = HomCoalgebra::new(carrier, comult, counit)?;
    HomHopfAlgebra::new(HomBialgebra::new(algebra, coalgebra)?, antipode)
}

/// The diagonal automorphism of the Sweedler algebra fixing `1, g` and
/// negating `x, gx`.
pub fn sweedler_sign_automorphism() -> LinearMap {
    LinearMap::new(
        4,
        4,
        vec![
            s_one(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            s_one(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            -s_one(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            Scalar::zero(),
            -s_one(),
        ],
    )
    .unwrap()
}

/// kC4 twisted by the inversion automorphism `g ↦ g³`: a Hom-Hopf algebra
/// with a genuinely non-identity structure map.
pub fn twisted_kc4() -> Result<HomHopfAlgebra> {
    let classical = cyclic_group_hopf(4)?;
    yau_twist_hopf(&classical, &cyclic_inversion(4))
}

/// The Sweedler algebra twisted by the sign automorphism.
pub fn twisted_sweedler() -> Result<HomHopfAlgebra> {
    let classical = sweedler_hopf()?;
    yau_twist_hopf(&classical, &sweedler_sign_automorphism())
}
