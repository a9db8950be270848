//! Dense exact linear maps between tensor powers of finite-dimensional
//! spaces.
//!
//! # Tensor convention
//!
//! The basis vector `e_i ⊗ e_j` of `X ⊗ Y` has flat index `i * dim(Y) + j`
//! (row-major). Every Kronecker product, permutation and partial
//! application in the crate follows this convention; it is decided here
//! once and never re-decided per module.
#![allow(clippy::needless_range_loop)]

use crate::error::{Error, Result};
use crate::scalar::{format_scalar, s_one, Scalar};
use num_traits::Zero;

/// A linear map `k^cols -> k^rows` stored as a dense row-major matrix of
/// exact rationals. Equality is entrywise exact; all operations are pure.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    rows: usize,
    cols: usize,
    entries: Vec<Scalar>,
}

impl std::fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "LinearMap {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| format_scalar(self.entry(r, c)))
                .collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

impl LinearMap {
    pub fn new(rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::dims(
                "matrix entries",
                format!("{rows}x{cols}"),
                format!("{} entries", entries.len()),
            ));
        }
        Ok(LinearMap {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        LinearMap {
            rows,
            cols,
            entries,
        }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        LinearMap {
            rows,
            cols,
            entries: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_fn(
            dim,
            dim,
            |r, c| if r == c { s_one() } else { Scalar::zero() },
        )
    }

    /// Standard basis column vector `e_i` as a `dim x 1` map.
    pub fn basis_col(dim: usize, i: usize) -> Self {
        Self::from_fn(dim, 1, |r, _| if r == i { s_one() } else { Scalar::zero() })
    }

    /// Coordinate functional `e^i` as a `1 x dim` map.
    pub fn basis_row(dim: usize, i: usize) -> Self {
        Self::from_fn(1, dim, |_, c| if c == i { s_one() } else { Scalar::zero() })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Scalar {
        &self.entries[r * self.cols + c]
    }

    pub fn set_entry(&mut self, r: usize, c: usize, v: Scalar) {
        self.entries[r * self.cols + c] = v;
    }

    /// Copy with `delta` added at one entry. Used by mutation protocols.
    pub fn perturbed(&self, r: usize, c: usize, delta: &Scalar) -> Self {
        let mut out = self.clone();
        let v = out.entry(r, c) + delta;
        out.set_entry(r, c, v);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Self::identity(self.rows)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.entry(c, r).clone())
    }

    pub fn scale(&self, k: &Scalar) -> Self {
        Self::from_fn(self.rows, self.cols, |r, c| self.entry(r, c) * k)
    }

    pub fn add(&self, other: &LinearMap) -> Result<Self> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::dims("matrix sum", self.shape(), other.shape()));
        }
        Ok(Self::from_fn(self.rows, self.cols, |r, c| {
            self.entry(r, c) + other.entry(r, c)
        }))
    }

    pub fn shape(&self) -> String {
        format!("{}x{}", self.rows, self.cols)
    }

    /// `self ∘ rhs`: acts first by `rhs`. Exact matrix product.
    pub fn compose(&self, rhs: &LinearMap) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::dims("composition", self.shape(), rhs.shape()));
        }
        let mut out = LinearMap::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.entry(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.entry(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = out.entry(r, c) + a * b;
                    out.set_entry(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Kronecker product in the crate's tensor convention:
    /// `(f ⊗ g)(e_i ⊗ e_j) = f(e_i) ⊗ g(e_j)`.
    pub fn kron(&self, other: &LinearMap) -> Self {
        let mut out = LinearMap::zeros(self.rows * other.rows, self.cols * other.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.entry(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..other.rows {
                    for c2 in 0..other.cols {
                        let b = other.entry(r2, c2);
                        if b.is_zero() {
                            continue;
                        }
                        out.set_entry(r1 * other.rows + r2, c1 * other.cols + c2, a * b);
                    }
                }
            }
        }
        out
    }

    /// Exact inverse by Gauss-Jordan elimination over the rationals.
    /// A singular input reports its rank as the witness.
    pub fn invert(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::dims("inversion", self.shape(), "square"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = LinearMap::identity(n);
        let mut rank = 0;
        for col in 0..n {
            let pivot = (rank..n).find(|&r| !a.entry(r, col).is_zero());
            let Some(p) = pivot else { continue };
            if p != rank {
                for c in 0..n {
                    let (x, y) = (a.entry(p, c).clone(), a.entry(rank, c).clone());
                    a.set_entry(p, c, y);
                    a.set_entry(rank, c, x);
                    let (x, y) = (inv.entry(p, c).clone(), inv.entry(rank, c).clone());
                    inv.set_entry(p, c, y);
                    inv.set_entry(rank, c, x);
                }
            }
            let piv = a.entry(rank, col).clone();
            for c in 0..n {
                let v = a.entry(rank, c) / &piv;
                a.set_entry(rank, c, v);
                let v = inv.entry(rank, c) / &piv;
                inv.set_entry(rank, c, v);
            }
            for r in 0..n {
                if r == rank || a.entry(r, col).is_zero() {
                    continue;
                }
                let factor = a.entry(r, col).clone();
                for c in 0..n {
                    let v = a.entry(r, c) - &factor * a.entry(rank, c);
                    a.set_entry(r, c, v);
                    let v = inv.entry(r, c) - &factor * inv.entry(rank, c);
                    inv.set_entry(r, c, v);
                }
            }
            rank += 1;
        }
        if rank < n {
            return Err(Error::Singular { rank, dim: n });
        }
        Ok(inv)
    }

    /// Integer power of a square map; negative exponents go through the
    /// exact inverse.
    pub fn pow_signed(&self, k: i64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::dims("power", self.shape(), "square"));
        }
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut out = LinearMap::identity(self.rows);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base)?;
        }
        Ok(out)
    }

    /// Apply to a dense vector (length = `cols`), skipping zeros.
    pub fn apply_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply_vec: length mismatch");
        let mut out = vec![Scalar::zero(); self.rows];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for r in 0..self.rows {
                let e = self.entry(r, c);
                if !e.is_zero() {
                    out[r] += e * x;
                }
            }
        }
        out
    }

    pub fn column(&self, c: usize) -> Vec<Scalar> {
        (0..self.rows).map(|r| self.entry(r, c).clone()).collect()
    }
}

/// The flip `X ⊗ Y -> Y ⊗ X`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`, as a permutation
/// matrix.
pub fn flip(dim_x: usize, dim_y: usize) -> LinearMap {
    let n = dim_x * dim_y;
    let mut out = LinearMap::zeros(n, n);
    for i in 0..dim_x {
        for j in 0..dim_y {
            out.set_entry(j * dim_x + i, i * dim_y + j, s_one());
        }
    }
    out
}

/// Permutation of tensor factors: output slot `k` carries input factor
/// `perm[k]`. `dims` are the input factor dimensions.
pub fn tensor_permutation(dims: &[usize], perm: &[usize]) -> LinearMap {
    assert_eq!(dims.len(), perm.len(), "permutation length mismatch");
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        assert!(p < dims.len() && !seen[p], "not a permutation: {perm:?}");
        seen[p] = true;
    }
    let total: usize = dims.iter().product();
    let out_dims: Vec<usize> = perm.iter().map(|&p| dims[p]).collect();
    let mut out = LinearMap::zeros(total, total);
    for col in 0..total {
        let idx = unflatten(col, dims);
        let out_idx: Vec<usize> = perm.iter().map(|&p| idx[p]).collect();
        out.set_entry(flatten(&out_idx, &out_dims), col, s_one());
    }
    out
}

/// Decompose a flat row-major index into per-factor indices.
pub fn unflatten(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut idx = vec![0; dims.len()];
    for k in (0..dims.len()).rev() {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    idx
}

/// Flatten per-factor indices into a row-major flat index.
pub fn flatten(idx: &[usize], dims: &[usize]) -> usize {
    let mut flat = 0;
    for (i, d) in idx.iter().zip(dims) {
        flat = flat * d + i;
    }
    flat
}

/// Standard dual bases: basis columns `e_i` and coordinate rows `e^i`
/// with `e^i(e_j) = δ_ij`.
pub fn dual_bases(dim: usize) -> (Vec<LinearMap>, Vec<LinearMap>) {
    let vectors = (0..dim).map(|i| LinearMap::basis_col(dim, i)).collect();
    let covectors = (0..dim).map(|i| LinearMap::basis_row(dim, i)).collect();
    (vectors, covectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{s_int, s_ratio};
    use proptest::prelude::*;

    fn lm(rows: usize, cols: usize, vals: &[i64]) -> LinearMap {
        LinearMap::new(rows, cols, vals.iter().map(|&v| s_int(v)).collect()).unwrap()
    }

    #[test]
    fn compose_identity() {
        let id3 = LinearMap::identity(3);
        assert_eq!(id3.compose(&id3).unwrap(), id3);
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let f = lm(3, 3, &[2, 1, 0, 1, 1, 0, 0, 3, 1]);
        let finv = f.invert().unwrap();
        assert!(f.compose(&finv).unwrap().is_identity());
        assert!(finv.compose(&f).unwrap().is_identity());
    }

    // Oracle: independent naive triple-loop product.
    fn naive_product(a: &LinearMap, b: &LinearMap) -> LinearMap {
        let mut out = LinearMap::zeros(a.rows(), b.cols());
        for r in 0..a.rows() {
            for c in 0..b.cols() {
                let mut acc = Scalar::zero();
                for k in 0..a.cols() {
                    acc += a.entry(r, k) * b.entry(k, c);
                }
                out.set_entry(r, c, acc);
            }
        }
        out
    }

    #[test]
    fn compose_matches_naive_product() {
        let a = lm(3, 3, &[1, -2, 3, 0, 5, 1, 7, 0, -1]);
        let b = lm(3, 3, &[2, 0, 1, 1, 1, 0, -3, 4, 2]);
        assert_eq!(a.compose(&b).unwrap(), naive_product(&a, &b));
    }

    #[test]
    fn kron_of_identities() {
        assert_eq!(
            LinearMap::identity(2).kron(&LinearMap::identity(3)),
            LinearMap::identity(6)
        );
    }

    #[test]
    fn kron_on_basis_pairs() {
        let f = lm(2, 2, &[1, 2, 3, 4]);
        let g = lm(3, 3, &[0, 1, 0, 2, 0, 0, 0, 0, 5]);
        let k = f.kron(&g);
        for i in 0..2 {
            for j in 0..3 {
                let lhs = k.apply_vec(&LinearMap::basis_col(6, i * 3 + j).column(0));
                let fi = f.column(i);
                let gj = g.column(j);
                // four-index direct formula
                let mut rhs = vec![Scalar::zero(); 6];
                for (a, fa) in fi.iter().enumerate() {
                    for (b, gb) in gj.iter().enumerate() {
                        rhs[a * 3 + b] = fa * gb;
                    }
                }
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn flip_degenerate_and_involution() {
        assert!(flip(1, 5).is_identity());
        assert!(flip(5, 1).is_identity());
        assert!(flip(2, 2).compose(&flip(2, 2)).unwrap().is_identity());
        assert!(flip(3, 2).compose(&flip(2, 3)).unwrap().is_identity());
    }

    #[test]
    fn invert_diagonal() {
        let two = LinearMap::new(1, 1, vec![s_int(2)]).unwrap();
        assert_eq!(
            two.invert().unwrap(),
            LinearMap::new(1, 1, vec![s_ratio(1, 2)]).unwrap()
        );
        assert!(LinearMap::identity(4).invert().unwrap().is_identity());
    }

    #[test]
    fn singular_matrix_reports_rank() {
        let s = lm(3, 3, &[1, 2, 3, 2, 4, 6, 0, 0, 1]);
        match s.invert() {
            Err(crate::error::Error::Singular { rank, dim }) => {
                assert_eq!((rank, dim), (2, 3));
            }
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    // Oracle: adjugate/determinant inverse for a fixed 4x4.
    #[test]
    fn invert_matches_adjugate_formula() {
        let f = lm(4, 4, &[2, 0, 1, 0, 1, 1, 0, 3, 0, 2, 1, 0, 1, 0, 0, 1]);
        fn det(m: &LinearMap) -> Scalar {
            let n = m.rows();
            if n == 1 {
                return m.entry(0, 0).clone();
            }
            let mut acc = Scalar::zero();
            for c in 0..n {
                let sub = LinearMap::from_fn(n - 1, n - 1, |r2, c2| {
                    m.entry(r2 + 1, if c2 < c { c2 } else { c2 + 1 }).clone()
                });
                let term = m.entry(0, c) * det(&sub);
                if c % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
        let d = det(&f);
        assert!(!d.is_zero());
        let adj = LinearMap::from_fn(4, 4, |r, c| {
            let sub = LinearMap::from_fn(3, 3, |r2, c2| {
                f.entry(
                    if r2 < c { r2 } else { r2 + 1 },
                    if c2 < r { c2 } else { c2 + 1 },
                )
                .clone()
            });
            let cof = det(&sub);
            if (r + c) % 2 == 0 {
                cof
            } else {
                -cof
            }
        });
        assert_eq!(f.invert().unwrap(), adj.scale(&(s_one() / d)));
    }

    #[test]
    fn dual_bases_pairing() {
        let (e1, f1) = dual_bases(1);
        assert_eq!(e1.len(), 1);
        assert_eq!(f1[0].compose(&e1[0]).unwrap(), LinearMap::identity(1));
        let (es, fs) = dual_bases(4);
        for (i, f) in fs.iter().enumerate() {
            for (j, e) in es.iter().enumerate() {
                let p = f.compose(e).unwrap();
                let expect = if i == j { s_one() } else { Scalar::zero() };
                assert_eq!(p.entry(0, 0), &expect);
            }
        }
        // resolution of identity on a fixed vector
        let v: Vec<Scalar> = [3, -1, 7, 2].iter().map(|&x| s_int(x)).collect();
        let mut rebuilt = vec![Scalar::zero(); 4];
        for (i, e) in es.iter().enumerate() {
            let coeff = fs[i].apply_vec(&v)[0].clone();
            for (r, out) in rebuilt.iter_mut().enumerate() {
                *out += e.entry(r, 0) * &coeff;
            }
        }
        assert_eq!(rebuilt, v);
    }

    #[test]
    fn tensor_permutation_matches_flip() {
        assert_eq!(tensor_permutation(&[2, 3], &[1, 0]), flip(2, 3));
        assert!(tensor_permutation(&[2, 3, 4], &[0, 1, 2]).is_identity());
    }

    prop_compose! {
        fn small_scalar()(n in -6i64..=6, d in 1i64..=4) -> Scalar { s_ratio(n, d) }
    }

    prop_compose! {
        fn small_map(rows: usize, cols: usize)
            (v in prop::collection::vec(small_scalar(), rows * cols)) -> LinearMap {
            LinearMap::new(rows, cols, v).unwrap()
        }
    }

    proptest! {
        #[test]
        fn kron_is_associative(a in small_map(2, 2), b in small_map(2, 3), c in small_map(3, 2)) {
            prop_assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
        }

        #[test]
        fn kron_compose_interchange(
            f1 in small_map(2, 3), g1 in small_map(2, 2),
            f2 in small_map(3, 2), g2 in small_map(2, 3),
        ) {
            let lhs = f1.kron(&g1).compose(&f2.kron(&g2)).unwrap();
            let rhs = f1.compose(&f2).unwrap().kron(&g1.compose(&g2).unwrap());
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn inverse_is_two_sided(v in prop::collection::vec(small_scalar(), 9)) {
            let m = LinearMap::new(3, 3, v).unwrap();
            if let Ok(inv) = m.invert() {
                prop_assert!(m.compose(&inv).unwrap().is_identity());
                prop_assert!(inv.compose(&m).unwrap().is_identity());
            }
        }
    }
}
