//! Lazy composition pipelines for axiom checking.
//!
//! Axiom identities compare two composites of structure maps on every basis
//! tuple of the domain. Some composites pass through tensor cubes whose
//! Kronecker factors would be enormous if materialized; a [`Chain`] applies
//! each stage to a sparse vector instead, so only genuinely nonzero
//! coefficients are ever touched.

use crate::linmap::{flatten, unflatten, LinearMap};
use crate::report::{AxiomCheck, Witness};
use crate::scalar::Scalar;
use num_traits::Zero;
use std::collections::HashMap;

/// Sparse vector: sorted `(index, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, Scalar)>;

/// Column-sparse copy of a matrix: per column, its nonzero (row, value)
/// pairs. Chains convert every stage to this form once, so applying a
/// stage costs only the genuinely nonzero work.
struct ColSparse {
    rows: usize,
    identity: bool,
    cols: Vec<Vec<(usize, Scalar)>>,
}

impl ColSparse {
    fn from_map(m: &LinearMap) -> Self {
        let cols = (0..m.cols())
            .map(|c| {
                (0..m.rows())
                    .filter_map(|r| {
                        let e = m.entry(r, c);
                        (!e.is_zero()).then(|| (r, e.clone()))
                    })
                    .collect()
            })
            .collect();
        ColSparse {
            rows: m.rows(),
            identity: m.is_identity(),
            cols,
        }
    }
}

enum Step {
    /// A materialized matrix.
    Map(ColSparse),
    /// `f_1 ⊗ f_2 ⊗ ... ⊗ f_m` applied factor by factor, never materialized.
    Factors(Vec<ColSparse>),
    /// Permutation of tensor factors (output slot k = input factor perm[k]).
    Permute { dims: Vec<usize>, perm: Vec<usize> },
}

pub struct Chain {
    dom: usize,
    cod: usize,
    steps: Vec<Step>,
}

impl Chain {
    pub fn start(dom: usize) -> Self {
        Chain {
            dom,
            cod: dom,
            steps: Vec::new(),
        }
    }

    pub fn dom(&self) -> usize {
        self.dom
    }

    pub fn cod(&self) -> usize {
        self.cod
    }

    /// Append a matrix stage.
    pub fn then(mut self, m: &LinearMap) -> Self {
        assert_eq!(
            m.cols(),
            self.cod,
            "chain stage mismatch: {} after cod {}",
            m.shape(),
            self.cod
        );
        self.cod = m.rows();
        self.steps.push(Step::Map(ColSparse::from_map(m)));
        self
    }

    /// Append a Kronecker stage `factors[0] ⊗ factors[1] ⊗ ...`.
    pub fn then_factors(mut self, factors: &[&LinearMap]) -> Self {
        let dom: usize = factors.iter().map(|f| f.cols()).product();
        assert_eq!(dom, self.cod, "chain factor stage mismatch");
        self.cod = factors.iter().map(|f| f.rows()).product();
        self.steps.push(Step::Factors(
            factors.iter().map(|&f| ColSparse::from_map(f)).collect(),
        ));
        self
    }

    /// Append a tensor-factor permutation stage.
    pub fn then_permute(mut self, dims: &[usize], perm: &[usize]) -> Self {
        let total: usize = dims.iter().product();
        assert_eq!(total, self.cod, "chain permute stage mismatch");
        self.steps.push(Step::Permute {
            dims: dims.to_vec(),
            perm: perm.to_vec(),
        });
        self
    }

    /// Image of the `col`-th basis vector, as a sparse vector.
    pub fn apply_basis(&self, col: usize) -> SparseVec {
        let mut v: SparseVec = vec![(col, crate::scalar::s_one())];
        for step in &self.steps {
            v = match step {
                Step::Map(m) => apply_map(m, &v),
                Step::Factors(fs) => apply_factors(fs, &v),
                Step::Permute { dims, perm } => apply_permute(dims, perm, &v),
            };
        }
        v
    }

    /// Materialize the full composite (for small codomains).
    pub fn materialize(&self) -> LinearMap {
        let mut out = LinearMap::zeros(self.cod, self.dom);
        for col in 0..self.dom {
            for (r, x) in self.apply_basis(col) {
                out.set_entry(r, col, x);
            }
        }
        out
    }
}

fn normalize(acc: HashMap<usize, Scalar>) -> SparseVec {
    let mut out: SparseVec = acc.into_iter().filter(|(_, x)| !x.is_zero()).collect();
    out.sort_unstable_by_key(|(i, _)| *i);
    out
}

fn apply_map(m: &ColSparse, v: &SparseVec) -> SparseVec {
    if m.identity {
        return v.clone();
    }
    let mut acc: HashMap<usize, Scalar> = HashMap::new();
    for (c, x) in v {
        for (r, e) in &m.cols[*c] {
            let slot = acc.entry(*r).or_insert_with(Scalar::zero);
            *slot += e * x;
        }
    }
    normalize(acc)
}

fn apply_factors(factors: &[ColSparse], v: &SparseVec) -> SparseVec {
    // Apply one factor at a time; after factor k the index layout is
    // (rows of factors <= k) x (cols of factors > k).
    let mut current = v.clone();
    for (k, f) in factors.iter().enumerate() {
        if f.identity {
            continue;
        }
        let ncols = f.cols.len();
        let right: usize = factors[k + 1..].iter().map(|g| g.cols.len()).product();
        let mut acc: HashMap<usize, Scalar> = HashMap::new();
        for (idx, x) in &current {
            let rt = idx % right;
            let j = (idx / right) % ncols;
            let l = idx / (right * ncols);
            for (r, e) in &f.cols[j] {
                let out_idx = (l * f.rows + r) * right + rt;
                let slot = acc.entry(out_idx).or_insert_with(Scalar::zero);
                *slot += e * x;
            }
        }
        current = normalize(acc);
    }
    current
}

fn apply_permute(dims: &[usize], perm: &[usize], v: &SparseVec) -> SparseVec {
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out: SparseVec = v
        .iter()
        .map(|(idx, x)| {
            let factors = unflatten(*idx, dims);
            let moved: Vec<usize> = perm.iter().map(|&p| factors[p]).collect();
            (flatten(&moved, &out_dims), x.clone())
        })
        .collect();
    out.sort_by_key(|(i, _)| *i);
    out
}

/// Compare two composites on every basis tuple of the shared domain.
/// `dom_dims` factor the domain so a failing column can be reported as a
/// basis tuple.
pub fn compare_chains(axiom: &str, lhs: &Chain, rhs: &Chain, dom_dims: &[usize]) -> AxiomCheck {
    assert_eq!(lhs.dom(), rhs.dom(), "compare_chains: domain mismatch");
    assert_eq!(lhs.cod(), rhs.cod(), "compare_chains: codomain mismatch");
    let total: usize = dom_dims.iter().product();
    assert_eq!(
        total,
        lhs.dom(),
        "compare_chains: dims do not factor domain"
    );
    for col in 0..total {
        let a = lhs.apply_basis(col);
        let b = rhs.apply_basis(col);
        if a != b {
            return AxiomCheck::failed(
                axiom,
                Witness {
                    basis_tuple: unflatten(col, dom_dims),
                    lhs: a,
                    rhs: b,
                },
            );
        }
    }
    AxiomCheck::passed(axiom)
}

/// Equality of two already-materialized maps, reported in the same shape.
pub fn compare_maps(
    axiom: &str,
    lhs: &LinearMap,
    rhs: &LinearMap,
    dom_dims: &[usize],
) -> AxiomCheck {
    compare_chains(
        axiom,
        &Chain::start(lhs.cols()).then(lhs),
        &Chain::start(rhs.cols()).then(rhs),
        dom_dims,
    )
}
