//! Hom-algebraic structures presented by structure constants, together
//! with their axiom checkers, duals, the ambient twisted monoidal context,
//! and generators for standard examples.
//!
//! A *Hom-algebra* twists associativity by an automorphism `α`:
//! `α(a)(bc) = (ab)α(c)`, with `1a = a1 = α(a)`. The dual twist gives
//! Hom-coalgebras, and the compatible pair a Hom-bialgebra. With `α = id`
//! every checker in this module reduces exactly to the classical axioms.

mod checks;
mod dual;
mod monoidal;
pub mod samples;
mod twist;

pub use checks::*;
pub use dual::{dual_bialgebra, dual_coalgebra};
pub use monoidal::{associator, unit_left, unit_right, MonoidalContext};
pub use twist::{yau_twist, yau_twist_hopf};

use crate::error::{Error, Result};
use crate::linmap::LinearMap;

/// A finite-dimensional space together with an invertible structure
/// automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ObjectWithAut {
    dim: usize,
    alpha: LinearMap,
    alpha_inv: LinearMap,
}

impl ObjectWithAut {
    pub fn new(alpha: LinearMap) -> Result<Self> {
        if alpha.rows() != alpha.cols() {
            return Err(Error::dims(
                "structure automorphism",
                alpha.shape(),
                "square",
            ));
        }
        let alpha_inv = alpha.invert()?;
        Ok(ObjectWithAut {
            dim: alpha.rows(),
            alpha,
            alpha_inv,
        })
    }

    pub fn trivial(dim: usize) -> Self {
        ObjectWithAut {
            dim,
            alpha: LinearMap::identity(dim),
            alpha_inv: LinearMap::identity(dim),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn alpha(&self) -> &LinearMap {
        &self.alpha
    }

    pub fn alpha_inv(&self) -> &LinearMap {
        &self.alpha_inv
    }

    /// `α^k` for any integer `k`, through the cached exact inverse.
    pub fn alpha_pow(&self, k: i64) -> LinearMap {
        let base = if k < 0 { &self.alpha_inv } else { &self.alpha };
        let mut out = LinearMap::identity(self.dim);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(base).expect("alpha power");
        }
        out
    }
}

/// Hom-algebra `(A, μ, 1, α)`: `mult` is the `d x d²` matrix of μ and
/// `unit` the `d x 1` column of the unit element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomAlgebra {
    pub carrier: ObjectWithAut,
    pub mult: LinearMap,
    pub unit: LinearMap,
}

impl HomAlgebra {
    pub fn new(carrier: ObjectWithAut, mult: LinearMap, unit: LinearMap) -> Result<Self> {
        let d = carrier.dim();
        if mult.rows() != d || mult.cols() != d * d {
            return Err(Error::dims(
                "multiplication",
                mult.shape(),
                format!("{d}x{}", d * d),
            ));
        }
        if unit.rows() != d || unit.cols() != 1 {
            return Err(Error::dims("unit", unit.shape(), format!("{d}x1")));
        }
        Ok(HomAlgebra {
            carrier,
            mult,
            unit,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn alpha(&self) -> &LinearMap {
        self.carrier.alpha()
    }
}

/// Hom-coalgebra `(C, Δ, ε, α)`: `comult` is `d² x d`, `counit` is `1 x d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomCoalgebra {
    pub carrier: ObjectWithAut,
    pub comult: LinearMap,
    pub counit: LinearMap,
}

impl HomCoalgebra {
    pub fn new(carrier: ObjectWithAut, comult: LinearMap, counit: LinearMap) -> Result<Self> {
        let d = carrier.dim();
        if comult.rows() != d * d || comult.cols() != d {
            return Err(Error::dims(
                "comultiplication",
                comult.shape(),
                format!("{}x{d}", d * d),
            ));
        }
        if counit.rows() != 1 || counit.cols() != d {
            return Err(Error::dims("counit", counit.shape(), format!("1x{d}")));
        }
        Ok(HomCoalgebra {
            carrier,
            comult,
            counit,
        })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }

    pub fn alpha(&self) -> &LinearMap {
        self.carrier.alpha()
    }
}

/// Hom-bialgebra: a Hom-algebra and Hom-coalgebra on the same carrier
/// (same dimension and the same α).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomBialgebra {
    pub algebra: HomAlgebra,
    pub coalgebra: HomCoalgebra,
}

impl HomBialgebra {
    pub fn new(algebra: HomAlgebra, coalgebra: HomCoalgebra) -> Result<Self> {
        if algebra.carrier != coalgebra.carrier {
            return Err(Error::pre(
                "bialgebra parts must share one carrier and one structure automorphism",
            ));
        }
        Ok(HomBialgebra { algebra, coalgebra })
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn carrier(&self) -> &ObjectWithAut {
        &self.algebra.carrier
    }

    pub fn alpha(&self) -> &LinearMap {
        self.algebra.alpha()
    }

    pub fn mult(&self) -> &LinearMap {
        &self.algebra.mult
    }

    pub fn unit(&self) -> &LinearMap {
        &self.algebra.unit
    }

    pub fn comult(&self) -> &LinearMap {
        &self.coalgebra.comult
    }

    pub fn counit(&self) -> &LinearMap {
        &self.coalgebra.counit
    }
}

/// Hom-Hopf algebra: a Hom-bialgebra with an antipode.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomHopfAlgebra {
    pub bialgebra: HomBialgebra,
    pub antipode: LinearMap,
}

impl HomHopfAlgebra {
    pub fn new(bialgebra: HomBialgebra, antipode: LinearMap) -> Result<Self> {
        let d = bialgebra.dim();
        if antipode.rows() != d || antipode.cols() != d {
            return Err(Error::dims(
                "antipode",
                antipode.shape(),
                format!("{d}x{d}"),
            ));
        }
        Ok(HomHopfAlgebra {
            bialgebra,
            antipode,
        })
    }

    pub fn dim(&self) -> usize {
        self.bialgebra.dim()
    }

    pub fn alpha(&self) -> &LinearMap {
        self.bialgebra.alpha()
    }
}

/// Right Hom-module over a Hom-algebra: action `U ⊗ A -> U`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightHomModule {
    pub carrier: ObjectWithAut,
    pub action: LinearMap,
}

impl RightHomModule {
    pub fn new(carrier: ObjectWithAut, action: LinearMap, algebra_dim: usize) -> Result<Self> {
        let d = carrier.dim();
        if action.rows() != d || action.cols() != d * algebra_dim {
            return Err(Error::dims(
                "module action",
                action.shape(),
                format!("{d}x{}", d * algebra_dim),
            ));
        }
        Ok(RightHomModule { carrier, action })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}

/// Right Hom-comodule over a Hom-coalgebra: coaction `U -> U ⊗ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightHomComodule {
    pub carrier: ObjectWithAut,
    pub coaction: LinearMap,
}

impl RightHomComodule {
    pub fn new(carrier: ObjectWithAut, coaction: LinearMap, coalgebra_dim: usize) -> Result<Self> {
        let d = carrier.dim();
        if coaction.rows() != d * coalgebra_dim || coaction.cols() != d {
            return Err(Error::dims(
                "comodule coaction",
                coaction.shape(),
                format!("{}x{d}", d * coalgebra_dim),
            ));
        }
        Ok(RightHomComodule { carrier, coaction })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim()
    }
}
