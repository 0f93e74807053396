//! Exact rational sparse linear algebra.
//!
//! Everything downstream — normal forms, socle kernels, syzygy constraints,
//! tangent-space dimensions — reduces to the operations in this module:
//! reduced row echelon form with a pinned pivot policy, kernel bases,
//! subspace membership, and quotient dimensions. All arithmetic is over
//! arbitrary-precision rationals; there is no floating point and no modular
//! shortcut, so every reported dimension is exact over the prime field.
//!
//! The pivot policy (lowest-index column first, then the candidate entry of
//! smallest bit size, ties broken by row index) is part of the public
//! contract: it makes echelon bases, and therefore every golden file and
//! report built on them, reproducible byte for byte.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Exact rational scalar: arbitrary-precision numerator and positive
/// denominator, always in lowest terms (zero is `0/1`). These invariants are
/// maintained by the underlying `num_rational` implementation on every
/// arithmetic operation.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Canonical `"p/q"` rendering (always includes the denominator, so `3` is
/// `"3/1"`); used by every serializer in the crate.
pub fn rat_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"p/q"` or a bare integer `"p"`. Returns `None` on malformed input
/// or a zero denominator.
pub fn rat_parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (s.parse::<BigInt>().ok()?, BigInt::one()),
    };
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Total bit size of a rational (numerator plus denominator magnitude bits);
/// the pivot policy prefers small entries to control coefficient growth.
fn bit_size(r: &Rational) -> u64 {
    r.numer().abs().bits() + r.denom().bits()
}

/// A sparse vector: strictly increasing column indices, no stored zeros.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct SparseVec {
    entries: Vec<(usize, Rational)>,
}

impl SparseVec {
    pub fn new() -> Self {
        SparseVec { entries: Vec::new() }
    }

    /// Builds from possibly unsorted, possibly duplicated terms; duplicates
    /// are summed and zeros dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut entries: Vec<(usize, Rational)> = terms.into_iter().collect();
        entries.sort_by_key(|(c, _)| *c);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some((lc, lv)) if *lc == c => *lv += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|(_, v)| !v.is_zero());
        SparseVec { entries: out }
    }

    pub fn from_dense(dense: &[Rational]) -> Self {
        SparseVec {
            entries: dense
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    /// Single-term vector `coeff * e_col`.
    pub fn unit(col: usize, coeff: Rational) -> Self {
        if coeff.is_zero() {
            SparseVec::new()
        } else {
            SparseVec { entries: vec![(col, coeff)] }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.entries.iter().map(|(c, v)| (*c, v))
    }

    pub fn get(&self, col: usize) -> Option<&Rational> {
        self.entries
            .binary_search_by_key(&col, |(c, _)| *c)
            .ok()
            .map(|i| &self.entries[i].1)
    }

    /// Leading (lowest-index) entry.
    pub fn leading(&self) -> Option<(usize, &Rational)> {
        self.entries.first().map(|(c, v)| (*c, v))
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|(c, _)| *c)
    }

    /// `self += coeff * other`, merging sorted entry lists.
    pub fn add_scaled(&mut self, other: &SparseVec, coeff: &Rational) {
        if coeff.is_zero() || other.is_zero() {
            return;
        }
        let mut out: Vec<(usize, Rational)> =
            Vec::with_capacity(self.entries.len() + other.entries.len());
        let mut a = self.entries.iter();
        let mut b = other.entries.iter();
        let (mut na, mut nb) = (a.next(), b.next());
        loop {
            match (na, nb) {
                (Some((ca, va)), Some((cb, vb))) => {
                    if ca < cb {
                        out.push((*ca, va.clone()));
                        na = a.next();
                    } else if cb < ca {
                        out.push((*cb, vb * coeff));
                        nb = b.next();
                    } else {
                        let v = va + vb * coeff;
                        if !v.is_zero() {
                            out.push((*ca, v));
                        }
                        na = a.next();
                        nb = b.next();
                    }
                }
                (Some((ca, va)), None) => {
                    out.push((*ca, va.clone()));
                    na = a.next();
                }
                (None, Some((cb, vb))) => {
                    out.push((*cb, vb * coeff));
                    nb = b.next();
                }
                (None, None) => break,
            }
        }
        self.entries = out;
    }

    pub fn scale(&mut self, coeff: &Rational) {
        if coeff.is_zero() {
            self.entries.clear();
        } else {
            for (_, v) in &mut self.entries {
                *v *= coeff;
            }
        }
    }

    /// Remaps every index through `f` (must be strictly increasing on the
    /// support); used to embed block coordinates into concatenated layouts.
    pub fn remap(&self, f: impl Fn(usize) -> usize) -> SparseVec {
        SparseVec { entries: self.entries.iter().map(|(c, v)| (f(*c), v.clone())).collect() }
    }

    /// Human-readable `c0:v0 c1:v1 ...` form for error witnesses.
    pub fn describe(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.entries
            .iter()
            .map(|(c, v)| format!("{}:{}", c, v))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// Row-major sparse matrix. Transposition is an explicit operation
/// ([`SparseMatrix::transpose`]), never an implicit view, so the cost of
/// column-heavy algorithms stays visible at call sites.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<SparseVec>,
}

impl SparseMatrix {
    pub fn new(n_cols: usize) -> Self {
        SparseMatrix { n_rows: 0, n_cols, rows: Vec::new() }
    }

    pub fn from_rows(n_cols: usize, rows: Vec<SparseVec>) -> Self {
        for r in &rows {
            if let Some(m) = r.max_index() {
                assert!(m < n_cols, "row index {m} out of bounds for {n_cols} columns");
            }
        }
        SparseMatrix { n_rows: rows.len(), n_cols, rows }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let n_cols = rows.first().map_or(0, |r| r.len());
        let mut m = SparseMatrix::new(n_cols);
        for r in rows {
            assert_eq!(r.len(), n_cols, "ragged dense input");
            let dense: Vec<Rational> = r.iter().map(|&v| rat(v)).collect();
            m.push_row(SparseVec::from_dense(&dense));
        }
        m
    }

    pub fn push_row(&mut self, row: SparseVec) {
        if let Some(m) = row.max_index() {
            assert!(m < self.n_cols, "row index {m} out of bounds for {} columns", self.n_cols);
        }
        self.rows.push(row);
        self.n_rows += 1;
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn transpose(&self) -> SparseMatrix {
        let mut cols: Vec<SparseVec> = vec![SparseVec::new(); self.n_cols];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, v) in row.iter() {
                cols[c].entries.push((r, v.clone()));
            }
        }
        SparseMatrix { n_rows: self.n_cols, n_cols: self.n_rows, rows: cols }
    }

    /// Matrix-vector product `self * v` (v indexed by columns).
    pub fn apply(&self, v: &SparseVec) -> SparseVec {
        let mut terms = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc = Rational::zero();
            // Intersect the two sorted supports.
            let (mut i, mut j) = (0, 0);
            while i < row.entries.len() && j < v.entries.len() {
                match row.entries[i].0.cmp(&v.entries[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        acc += &row.entries[i].1 * &v.entries[j].1;
                        i += 1;
                        j += 1;
                    }
                }
            }
            if !acc.is_zero() {
                terms.push((r, acc));
            }
        }
        SparseVec { entries: terms }
    }
}

/// A linear subspace held as a reduced-row-echelon basis: each basis vector
/// has a unit pivot, pivot columns strictly increase, and every pivot column
/// is zero in the other basis vectors. The RREF basis of a subspace is
/// unique, which makes equality of subspaces equality of this struct.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
    pivot_cols: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivot_cols: Vec::new() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivot_cols(&self) -> &[usize] {
        &self.pivot_cols
    }

    /// Fully reduces `v` against the basis: returns the (unique) residual
    /// with zero entries in every pivot column, together with the
    /// coefficients used. `v` lies in the span iff the residual is zero.
    pub fn reduce(&self, v: &SparseVec) -> (SparseVec, Vec<Rational>) {
        let mut r = v.clone();
        let mut coeffs = Vec::with_capacity(self.basis.len());
        for (b, p) in self.basis.iter().zip(&self.pivot_cols) {
            let c = r.get(*p).cloned().unwrap_or_else(Rational::zero);
            if !c.is_zero() {
                let neg = -c.clone();
                r.add_scaled(b, &neg);
            }
            coeffs.push(c);
        }
        (r, coeffs)
    }
}

/// Reduced row echelon form of `m` under the pinned pivot policy.
///
/// Returns the row-space [`Subspace`] and the rank. Policy: pivot on the
/// lowest-index column that is nonzero in some unfinished row; among the
/// candidate rows take the one whose entry in that column has the smallest
/// bit size; break ties by original row index.
pub fn rref(m: &SparseMatrix) -> (Subspace, usize) {
    let mut sub = rref_from_rows(m.n_cols(), m.rows().to_vec());
    sub.ambient_dim = m.n_cols();
    let rank = sub.dim();
    (sub, rank)
}

fn rref_from_rows(n_cols: usize, rows: Vec<SparseVec>) -> Subspace {
    // Unfinished rows keep their original index for deterministic
    // tie-breaking. Invariant: after each elimination round every unfinished
    // row is zero in all pivot columns chosen so far, so its leading column
    // is always a fresh candidate.
    let mut pending: Vec<(usize, SparseVec)> =
        rows.into_iter().enumerate().filter(|(_, r)| !r.is_zero()).collect();
    let mut done: Vec<(usize, SparseVec)> = Vec::new(); // (pivot col, row)

    while !pending.is_empty() {
        let col = pending.iter().map(|(_, r)| r.leading().unwrap().0).min().unwrap();
        let mut best: Option<(u64, usize, usize)> = None; // (bit size, orig idx, pos)
        for (pos, (idx, r)) in pending.iter().enumerate() {
            let (lc, lv) = r.leading().unwrap();
            if lc == col {
                let key = (bit_size(lv), *idx, pos);
                if best.is_none_or(|b| (key.0, key.1) < (b.0, b.1)) {
                    best = Some(key);
                }
            }
        }
        let (_, _, pos) = best.expect("some pending row attains the minimal column");
        let (_, mut pivot) = pending.swap_remove(pos);
        let inv = {
            let (_, lv) = pivot.leading().unwrap();
            lv.recip()
        };
        pivot.scale(&inv);

        for (_, r) in pending.iter_mut() {
            if let Some(c) = r.get(col).cloned() {
                let neg = -c;
                r.add_scaled(&pivot, &neg);
            }
        }
        pending.retain(|(_, r)| !r.is_zero());
        for (_, r) in done.iter_mut() {
            if let Some(c) = r.get(col).cloned() {
                let neg = -c;
                r.add_scaled(&pivot, &neg);
            }
        }
        done.push((col, pivot));
    }

    done.sort_by_key(|(c, _)| *c);
    Subspace {
        ambient_dim: n_cols,
        pivot_cols: done.iter().map(|(c, _)| *c).collect(),
        basis: done.into_iter().map(|(_, r)| r).collect(),
    }
}

/// Basis of the right kernel `{v : m v = 0}` as a [`Subspace`] of the column
/// space; its dimension is `n_cols - rank(m)` and every basis vector
/// satisfies `m v = 0` exactly.
pub fn kernel_basis(m: &SparseMatrix) -> Subspace {
    let (row_space, rank) = rref(m);
    let pivot_set: std::collections::HashSet<usize> =
        row_space.pivot_cols.iter().copied().collect();
    let free_cols: Vec<usize> =
        (0..m.n_cols()).filter(|c| !pivot_set.contains(c)).collect();

    let mut kernel_rows = Vec::with_capacity(free_cols.len());
    for &f in &free_cols {
        // v[f] = 1, v[p_i] = -row_i[f] for each pivot row.
        let mut terms = vec![(f, rat(1))];
        for (row, &p) in row_space.basis.iter().zip(&row_space.pivot_cols) {
            if let Some(c) = row.get(f) {
                terms.push((p, -c.clone()));
            }
        }
        kernel_rows.push(SparseVec::from_terms(terms));
    }
    let sub = rref_from_rows(m.n_cols(), kernel_rows);
    assert_eq!(sub.dim(), m.n_cols() - rank, "rank-nullity must hold exactly");
    sub
}

/// Tests membership of `v` in `s`; on success returns the unique coefficient
/// vector of `v` against the RREF basis of `s`.
pub fn is_in_span(v: &SparseVec, s: &Subspace) -> crate::Result<Option<Vec<Rational>>> {
    if let Some(m) = v.max_index() {
        if m >= s.ambient_dim {
            return Err(crate::Error::SizeMismatch {
                expected: s.ambient_dim,
                found: m + 1,
                context: "is_in_span vector vs subspace ambient dimension",
            });
        }
    }
    let (residual, coeffs) = s.reduce(v);
    Ok(if residual.is_zero() { Some(coeffs) } else { None })
}

/// `dim(big) - dim(small)` after verifying `small ⊆ big`; containment
/// failure is reported with a witness basis vector of `small` outside `big`.
pub fn quotient_dim(big: &Subspace, small: &Subspace) -> crate::Result<usize> {
    if big.ambient_dim != small.ambient_dim {
        return Err(crate::Error::SizeMismatch {
            expected: big.ambient_dim,
            found: small.ambient_dim,
            context: "quotient_dim ambient dimensions",
        });
    }
    for b in small.basis() {
        if is_in_span(b, big)?.is_none() {
            return Err(crate::Error::NotContained { witness: b.describe() });
        }
    }
    Ok(big.dim() - small.dim())
}

/// Incremental echelon accumulator: rows are inserted one at a time, each
/// reduced at its leading coordinate against the pivots installed so far.
/// Useful when relation/constraint rows are produced on the fly and the full
/// matrix would be wasteful to materialize. Not reduced (pivots may appear
/// in the tails of other rows); call [`Echelon::into_subspace`] for the
/// canonical RREF basis.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    ambient: usize,
    rows: std::collections::HashMap<usize, SparseVec>,
}

impl Echelon {
    pub fn new(ambient: usize) -> Self {
        Echelon { ambient, rows: std::collections::HashMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Forward-reduces `v`: repeatedly cancels its leading coordinate with
    /// the installed pivot there, until the leading coordinate is fresh or
    /// the vector dies. Pivot tails only contain higher coordinates, so this
    /// terminates.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((c, lv)) = v.leading() {
            match self.rows.get(&c) {
                Some(pivot) => {
                    let coeff = -lv.clone();
                    v.add_scaled(pivot, &coeff);
                }
                None => break,
            }
        }
        v
    }

    /// Reduces and, if nonzero, installs `v` as a new unit-pivot row at its
    /// leading coordinate. Returns the pivot column when a row was added.
    pub fn insert(&mut self, v: SparseVec) -> Option<usize> {
        let mut v = self.reduce(v);
        match v.leading() {
            None => None,
            Some((c, lv)) => {
                let inv = lv.recip();
                v.scale(&inv);
                if let Some(m) = v.max_index() {
                    assert!(m < self.ambient, "echelon row out of ambient bounds");
                }
                self.rows.insert(c, v);
                Some(c)
            }
        }
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// The installed pivot rows, sorted by pivot column. Rows are forward-
    /// reduced only (no back-substitution), each with a unit leading entry.
    pub fn pivot_rows(&self) -> Vec<(usize, &SparseVec)> {
        let mut out: Vec<(usize, &SparseVec)> = self.rows.iter().map(|(c, r)| (*c, r)).collect();
        out.sort_by_key(|(c, _)| *c);
        out
    }

    /// Back-substitutes to the canonical RREF basis.
    pub fn into_subspace(self) -> Subspace {
        let ambient = self.ambient;
        let mut rows: Vec<(usize, SparseVec)> = self.rows.into_iter().collect();
        rows.sort_by_key(|(c, _)| *c);
        // Eliminate tail entries at later pivot columns, working upward.
        let pivot_cols: Vec<usize> = rows.iter().map(|(c, _)| *c).collect();
        for i in (0..rows.len()).rev() {
            for j in (i + 1)..rows.len() {
                let c = pivot_cols[j];
                if let Some(coef) = rows[i].1.get(c).cloned() {
                    let (head, tail) = rows.split_at_mut(j);
                    let neg = -coef;
                    head[i].1.add_scaled(&tail[0].1, &neg);
                }
            }
        }
        Subspace {
            ambient_dim: ambient,
            basis: rows.into_iter().map(|(_, r)| r).collect(),
            pivot_cols,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(dense: &[i64]) -> SparseVec {
        let d: Vec<Rational> = dense.iter().map(|&v| rat(v)).collect();
        SparseVec::from_dense(&d)
    }

    #[test]
    fn rref_identity_has_full_rank() {
        let m = SparseMatrix::from_dense(&[vec![1, 0], vec![0, 1]]);
        let (sub, rank) = rref(&m);
        assert_eq!(rank, 2);
        assert_eq!(sub.pivot_cols(), &[0, 1]);
    }

    #[test]
    fn rref_zero_matrix_has_rank_zero() {
        let m = SparseMatrix::from_rows(5, vec![SparseVec::new(); 3]);
        let (sub, rank) = rref(&m);
        assert_eq!(rank, 0);
        assert!(sub.basis().is_empty());
    }

    #[test]
    fn rref_collinear_rows_leave_one_basis_vector() {
        let m = SparseMatrix::from_dense(&[vec![1, 2], vec![2, 4]]);
        let (sub, rank) = rref(&m);
        assert_eq!(rank, 1);
        assert_eq!(sub.basis(), &[sv(&[1, 2])]);
    }

    #[test]
    fn rref_is_idempotent() {
        let m = SparseMatrix::from_dense(&[vec![2, 4, 1], vec![1, 1, 1], vec![3, 5, 2]]);
        let (sub, _) = rref(&m);
        let again = SparseMatrix::from_rows(3, sub.basis().to_vec());
        let (sub2, _) = rref(&again);
        assert_eq!(sub, sub2);
    }

    #[test]
    fn kernel_of_identity_is_trivial() {
        let m = SparseMatrix::from_dense(&[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]);
        assert_eq!(kernel_basis(&m).dim(), 0);
    }

    #[test]
    fn kernel_of_sum_row_is_the_difference_line() {
        let m = SparseMatrix::from_dense(&[vec![1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 1);
        assert_eq!(k.basis(), &[sv(&[1, -1])]);
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let m = SparseMatrix::from_rows(4, vec![SparseVec::new(); 2]);
        assert_eq!(kernel_basis(&m).dim(), 4);
    }

    #[test]
    fn kernel_vectors_are_annihilated_exactly() {
        let m = SparseMatrix::from_dense(&[vec![2, -3, 1, 0], vec![1, 1, 0, -2]]);
        let k = kernel_basis(&m);
        assert_eq!(k.dim(), 2);
        for v in k.basis() {
            assert!(m.apply(v).is_zero());
        }
    }

    #[test]
    fn zero_vector_is_in_every_span() {
        let (sub, _) = rref(&SparseMatrix::from_dense(&[vec![1, 7]]));
        let coeffs = is_in_span(&SparseVec::new(), &sub).unwrap().unwrap();
        assert!(coeffs.iter().all(|c| c.is_zero()));
    }

    #[test]
    fn span_membership_rejects_transverse_vector() {
        let (sub, _) = rref(&SparseMatrix::from_dense(&[vec![0, 1]]));
        assert!(is_in_span(&sv(&[1, 0]), &sub).unwrap().is_none());
    }

    #[test]
    fn span_membership_returns_coefficients() {
        let (sub, _) = rref(&SparseMatrix::from_dense(&[vec![1, 1]]));
        let coeffs = is_in_span(&sv(&[3, 3]), &sub).unwrap().unwrap();
        assert_eq!(coeffs, vec![rat(3)]);
    }

    #[test]
    fn quotient_dim_of_equal_spaces_is_zero() {
        let (sub, _) = rref(&SparseMatrix::from_dense(&[vec![1, 2], vec![0, 1]]));
        assert_eq!(quotient_dim(&sub, &sub).unwrap(), 0);
    }

    #[test]
    fn quotient_dim_counts_codimension() {
        let (big, _) = rref(&SparseMatrix::from_dense(&[
            vec![1, 0, 0],
            vec![0, 1, 0],
            vec![0, 0, 1],
        ]));
        let (small, _) = rref(&SparseMatrix::from_dense(&[vec![1, 1, 1]]));
        assert_eq!(quotient_dim(&big, &small).unwrap(), 2);
    }

    #[test]
    fn quotient_dim_reports_containment_witness() {
        let (big, _) = rref(&SparseMatrix::from_dense(&[vec![1, 0]]));
        let (small, _) = rref(&SparseMatrix::from_dense(&[vec![0, 1]]));
        match quotient_dim(&big, &small) {
            Err(crate::Error::NotContained { witness }) => assert_eq!(witness, "1:1"),
            other => panic!("expected containment failure, got {other:?}"),
        }
    }

    #[test]
    fn echelon_matches_batch_rref() {
        let rows =
            vec![sv(&[1, 2, 3]), sv(&[2, 4, 6]), sv(&[0, 1, 1]), sv(&[1, 3, 4]), sv(&[5, 0, 1])];
        let mut ech = Echelon::new(3);
        for r in &rows {
            ech.insert(r.clone());
        }
        let (batch, _) = rref(&SparseMatrix::from_rows(3, rows));
        assert_eq!(ech.into_subspace(), batch);
    }

    #[test]
    fn rational_strings_round_trip() {
        let r = Rational::new(BigInt::from(-4), BigInt::from(6));
        assert_eq!(rat_string(&r), "-2/3");
        assert_eq!(rat_parse("-2/3").unwrap(), r);
        assert_eq!(rat_parse("5").unwrap(), rat(5));
        assert!(rat_parse("1/0").is_none());
        assert!(rat_parse("x").is_none());
    }
}
