//! The multigraded ring engine for `G(A_n)`.
//!
//! `G(A_n)` is presented as `k[x_{i,j} | 1 <= i < n, 1 <= j <= n]` modulo
//! the ideal generated by the row sums `e_1(x_i) = x_{i,1} + ... + x_{i,n}`
//! and all same-column quadrics `x_{i,j} x_{k,j}`. The variable `x_{i,j}`
//! has multidegree `e_i` in `Z^{n-1}`, so each multidegree component is a
//! finite-dimensional vector space spanned by *column monomials* (at most
//! one variable per column: anything else dies on a quadric).
//!
//! Per multidegree the engine materializes the spanning column monomials,
//! row-reduces the row-sum relations, and keeps a normal-form map onto the
//! surviving basis monomials. Multiplication, Hilbert functions, socle and
//! annihilator kernels, and ideal membership are all built from that data.
//! Components are immutable once built and cached per multidegree (with an
//! optional on-disk layer), since tangent computations revisit them heavily.

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use dashmap::DashMap;
use num_traits::Zero;
use rayon::prelude::*;

use crate::combinatorics::{compositions, Multidegree};
use crate::exact_linalg::{rat, rat_parse, rat_string, Echelon, Rational, SparseVec, Subspace};

/// A variable `x_{i,j}` named by 1-based (row, column).
pub type Var = (usize, usize);

// ---------------------------------------------------------------------------
// Free-ring monomials and polynomials
// ---------------------------------------------------------------------------

/// A monomial of the ambient free polynomial ring on the `x_{i,j}` grid:
/// variables with repetition, stored sorted by (row, column).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeMonomial {
    vars: Vec<Var>,
}

impl FreeMonomial {
    pub fn one() -> Self {
        FreeMonomial { vars: Vec::new() }
    }

    pub fn from_vars(mut vars: Vec<Var>) -> Self {
        vars.sort_unstable();
        FreeMonomial { vars }
    }

    pub fn var(v: Var) -> Self {
        FreeMonomial { vars: vec![v] }
    }

    pub fn vars(&self) -> &[Var] {
        &self.vars
    }

    pub fn degree(&self) -> usize {
        self.vars.len()
    }

    pub fn is_one(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn multidegree(&self, n: usize) -> Multidegree {
        let mut d = vec![0i64; n - 1];
        for &(i, _) in &self.vars {
            d[i - 1] += 1;
        }
        Multidegree::new(d)
    }

    pub fn mul(&self, other: &FreeMonomial) -> FreeMonomial {
        let mut vars = Vec::with_capacity(self.vars.len() + other.vars.len());
        vars.extend_from_slice(&self.vars);
        vars.extend_from_slice(&other.vars);
        FreeMonomial::from_vars(vars)
    }

    pub fn mul_var(&self, v: Var) -> FreeMonomial {
        let mut vars = self.vars.clone();
        let pos = vars.partition_point(|w| *w <= v);
        vars.insert(pos, v);
        FreeMonomial { vars }
    }

    /// True when two variables share a column — such a monomial is zero in
    /// `G(A_n)` because it is divisible by a same-column quadric.
    pub fn has_column_collision(&self) -> bool {
        let mut cols: Vec<usize> = self.vars.iter().map(|&(_, j)| j).collect();
        cols.sort_unstable();
        cols.windows(2).any(|w| w[0] == w[1])
    }

    /// The column-monomial form, if collision-free.
    pub fn to_column_monomial(&self) -> Option<ColumnMonomial> {
        if self.has_column_collision() {
            None
        } else {
            Some(ColumnMonomial::from_pairs(
                self.vars.iter().map(|&(i, j)| (j, i)).collect(),
            ))
        }
    }

    /// `d/dx_v` of this monomial: the multiplicity of `v` and the monomial
    /// with one copy of `v` removed; `None` when `v` does not divide.
    pub fn derivative(&self, v: Var) -> Option<(u32, FreeMonomial)> {
        let mult = self.vars.iter().filter(|&&w| w == v).count() as u32;
        if mult == 0 {
            return None;
        }
        let mut vars = self.vars.clone();
        let pos = vars.iter().position(|&w| w == v).unwrap();
        vars.remove(pos);
        Some((mult, FreeMonomial { vars }))
    }

    /// Renders as `x_1_2*x_3_4` (or `1` for the empty monomial), with
    /// repeated variables written as repeated factors.
    pub fn render(&self) -> String {
        if self.vars.is_empty() {
            return "1".to_string();
        }
        self.vars
            .iter()
            .map(|&(i, j)| format!("x_{i}_{j}"))
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Applies a column permutation (`perm[j-1]` is the image of column `j`).
    pub fn permute_columns(&self, perm: &[usize]) -> FreeMonomial {
        FreeMonomial::from_vars(self.vars.iter().map(|&(i, j)| (i, perm[j - 1])).collect())
    }
}

/// A polynomial of the free ring: monomial-to-coefficient map with no zero
/// coefficients stored; the `BTreeMap` keeps term order canonical.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FreePoly {
    terms: std::collections::BTreeMap<FreeMonomial, Rational>,
}

impl FreePoly {
    pub fn zero() -> Self {
        FreePoly::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(FreeMonomial::one(), c);
        p
    }

    pub fn monomial(m: FreeMonomial) -> Self {
        let mut p = FreePoly::zero();
        p.add_term(m, rat(1));
        p
    }

    pub fn add_term(&mut self, m: FreeMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            // Re-borrow to remove: find the key again (cheap; terms are few).
            let dead: Vec<FreeMonomial> =
                self.terms.iter().filter(|(_, v)| v.is_zero()).map(|(k, _)| k.clone()).collect();
            for k in dead {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&mut self, other: &FreePoly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.terms.clear();
        } else {
            for v in self.terms.values_mut() {
                *v *= c;
            }
        }
    }

    pub fn mul(&self, other: &FreePoly) -> FreePoly {
        let mut out = FreePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Formal partial derivative with respect to `v`.
    pub fn derivative(&self, v: Var) -> FreePoly {
        let mut out = FreePoly::zero();
        for (m, c) in &self.terms {
            if let Some((mult, dm)) = m.derivative(v) {
                out.add_term(dm, c * rat(mult as i64));
            }
        }
        out
    }

    /// The common multidegree of all terms, when the polynomial is
    /// homogeneous; `None` for zero or inhomogeneous polynomials.
    pub fn homogeneous_multidegree(&self, n: usize) -> Option<Multidegree> {
        let mut it = self.terms.keys();
        let first = it.next()?.multidegree(n);
        for m in it {
            if m.multidegree(n) != first {
                return None;
            }
        }
        Some(first)
    }

    /// Deterministic text rendering: terms in descending total degree, then
    /// the canonical monomial order; coefficients as `p/q` where not `±1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&FreeMonomial, &Rational)> = self.terms.iter().collect();
        terms.sort_by(|(ma, _), (mb, _)| {
            mb.degree().cmp(&ma.degree()).then_with(|| ma.cmp(mb))
        });
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c < &Rational::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push_str("- ");
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let coeff_is_one = abs == rat(1);
            if m.is_one() {
                out.push_str(&if coeff_is_one { "1".to_string() } else { rat_string(&abs) });
            } else {
                if !coeff_is_one {
                    out.push_str(&rat_string(&abs));
                    out.push('*');
                }
                out.push_str(&m.render());
            }
        }
        out
    }
}

// ---------------------------------------------------------------------------
// Column monomials
// ---------------------------------------------------------------------------

/// A monomial of `G(A_n)` that survives the quadric relations: a partial
/// assignment of rows to columns, at most one variable per column. Stored
/// as (column, row) pairs in increasing column order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColumnMonomial {
    assignments: Vec<(usize, usize)>, // (column j, row i), sorted by column
}

impl ColumnMonomial {
    pub fn one() -> Self {
        ColumnMonomial { assignments: Vec::new() }
    }

    /// Builds from (column, row) pairs; panics on a repeated column.
    pub fn from_pairs(mut pairs: Vec<(usize, usize)>) -> Self {
        pairs.sort_unstable();
        assert!(
            pairs.windows(2).all(|w| w[0].0 != w[1].0),
            "column monomial with a repeated column: {pairs:?}"
        );
        ColumnMonomial { assignments: pairs }
    }

    /// Builds from variables `x_{i,j}`; `None` on a column collision.
    pub fn from_vars(vars: &[Var]) -> Option<Self> {
        let mut pairs: Vec<(usize, usize)> = vars.iter().map(|&(i, j)| (j, i)).collect();
        pairs.sort_unstable();
        if pairs.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        Some(ColumnMonomial { assignments: pairs })
    }

    /// (column, row) pairs in increasing column order.
    pub fn assignments(&self) -> &[(usize, usize)] {
        &self.assignments
    }

    pub fn degree(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_one(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn uses_column(&self, j: usize) -> bool {
        self.assignments.binary_search_by_key(&j, |&(c, _)| c).is_ok()
    }

    pub fn multidegree(&self, n: usize) -> Multidegree {
        let mut d = vec![0i64; n - 1];
        for &(_, i) in &self.assignments {
            d[i - 1] += 1;
        }
        Multidegree::new(d)
    }

    /// Multiplies by `x_{i,j}`; `None` when column `j` is already used.
    pub fn mul_var(&self, (i, j): Var) -> Option<ColumnMonomial> {
        match self.assignments.binary_search_by_key(&j, |&(c, _)| c) {
            Ok(_) => None,
            Err(pos) => {
                let mut a = self.assignments.clone();
                a.insert(pos, (j, i));
                Some(ColumnMonomial { assignments: a })
            }
        }
    }

    /// Product of two column monomials; `None` on a column collision.
    pub fn mul(&self, other: &ColumnMonomial) -> Option<ColumnMonomial> {
        let mut a = Vec::with_capacity(self.assignments.len() + other.assignments.len());
        a.extend_from_slice(&self.assignments);
        a.extend_from_slice(&other.assignments);
        a.sort_unstable();
        if a.windows(2).any(|w| w[0].0 == w[1].0) {
            return None;
        }
        Some(ColumnMonomial { assignments: a })
    }

    pub fn to_free(&self) -> FreeMonomial {
        FreeMonomial::from_vars(self.assignments.iter().map(|&(j, i)| (i, j)).collect())
    }

    /// The ordering key used to list spanning monomials: the sorted column
    /// list first, then the row assignment in column order.
    pub fn sort_key(&self) -> (Vec<usize>, Vec<usize>) {
        (
            self.assignments.iter().map(|&(j, _)| j).collect(),
            self.assignments.iter().map(|&(_, i)| i).collect(),
        )
    }

    /// Applies a column permutation (`perm[j-1]` is the image of column `j`).
    pub fn permute_columns(&self, perm: &[usize]) -> ColumnMonomial {
        ColumnMonomial::from_pairs(
            self.assignments.iter().map(|&(j, i)| (perm[j - 1], i)).collect(),
        )
    }

    /// Applies a row permutation (`perm[i-1]` is the image of row `i`).
    pub fn permute_rows(&self, perm: &[usize]) -> ColumnMonomial {
        ColumnMonomial::from_pairs(
            self.assignments.iter().map(|&(j, i)| (j, perm[i - 1])).collect(),
        )
    }

    pub fn render(&self) -> String {
        self.to_free().render()
    }
}

/// All column monomials of multidegree `d` (which must be componentwise
/// nonnegative with total at most `n`), in the canonical order.
pub fn column_monomials(n: usize, d: &Multidegree) -> Vec<ColumnMonomial> {
    assert_eq!(d.n(), n, "multidegree rank mismatch");
    if !d.is_nonneg() || d.total() > n as i64 {
        return Vec::new();
    }
    // Assign each row its columns, rows in increasing order, tracking used
    // columns; then sort into the canonical (columns, rows) order.
    fn go(
        n: usize,
        d: &[i64],
        row: usize,
        used: &mut Vec<bool>,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<ColumnMonomial>,
    ) {
        if row == d.len() + 1 {
            out.push(ColumnMonomial::from_pairs(cur.clone()));
            return;
        }
        let need = d[row - 1] as usize;
        // Choose `need` unused columns for this row (increasing combinations).
        #[allow(clippy::too_many_arguments)]
        fn choose(
            n: usize,
            d: &[i64],
            row: usize,
            need: usize,
            start: usize,
            used: &mut Vec<bool>,
            cur: &mut Vec<(usize, usize)>,
            out: &mut Vec<ColumnMonomial>,
        ) {
            if need == 0 {
                go(n, d, row + 1, used, cur, out);
                return;
            }
            for j in start..=n {
                if used[j] {
                    continue;
                }
                used[j] = true;
                cur.push((j, row));
                choose(n, d, row, need - 1, j + 1, used, cur, out);
                cur.pop();
                used[j] = false;
            }
        }
        choose(n, d, row, need, 1, used, cur, out);
    }
    let mut out = Vec::new();
    go(n, d.entries(), 1, &mut vec![false; n + 1], &mut Vec::new(), &mut out);
    out.sort_by_cached_key(|m| m.sort_key());
    out
}

/// All multidegrees of the given total degree whose component can be
/// nonzero, in ascending lexicographic order.
pub fn valid_multidegrees(n: usize, total: usize) -> Vec<Multidegree> {
    if total + 1 > n {
        return Vec::new();
    }
    compositions(total, n - 1, n - total)
        .into_iter()
        .map(|c| Multidegree::new(c.into_iter().map(|v| v as i64).collect()))
        .collect()
}

/// All multidegrees with a possibly-nonzero component, all total degrees.
pub fn all_valid_multidegrees(n: usize) -> Vec<Multidegree> {
    (0..n).flat_map(|t| valid_multidegrees(n, t)).collect()
}

// ---------------------------------------------------------------------------
// The defining presentation
// ---------------------------------------------------------------------------

/// The defining generators of `G(A_n)` inside the free ring: `n - 1` row
/// sums `e_1(x_i)` and `n * (n-1) * n / 2` same-column quadrics
/// `x_{i,j} x_{k,j}` with `i <= k`.
#[derive(Clone, Debug)]
pub struct GcPresentation {
    n: usize,
    generators: Vec<(String, Multidegree, FreePoly)>,
    n_linear: usize,
}

impl GcPresentation {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut generators = Vec::new();
        for i in 1..n {
            let mut p = FreePoly::zero();
            for j in 1..=n {
                p.add_term(FreeMonomial::var((i, j)), rat(1));
            }
            let mut d = vec![0i64; n - 1];
            d[i - 1] = 1;
            generators.push((format!("e1(x{i})"), Multidegree::new(d), p));
        }
        let n_linear = generators.len();
        for j in 1..=n {
            for i in 1..n {
                for k in i..n {
                    let m = FreeMonomial::from_vars(vec![(i, j), (k, j)]);
                    let mut d = vec![0i64; n - 1];
                    d[i - 1] += 1;
                    d[k - 1] += 1;
                    generators.push((
                        format!("x{i}_{j}*x{k}_{j}"),
                        Multidegree::new(d),
                        FreePoly::monomial(m),
                    ));
                }
            }
        }
        GcPresentation { n, generators, n_linear }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// All generators: linear row sums first, then the quadrics.
    pub fn generators(&self) -> &[(String, Multidegree, FreePoly)] {
        &self.generators
    }

    pub fn linear_generators(&self) -> &[(String, Multidegree, FreePoly)] {
        &self.generators[..self.n_linear]
    }

    pub fn quadric_generators(&self) -> &[(String, Multidegree, FreePoly)] {
        &self.generators[self.n_linear..]
    }
}

// ---------------------------------------------------------------------------
// Component bases
// ---------------------------------------------------------------------------

/// The multidegree-`d` component of `G(A_n)`: spanning column monomials,
/// the reduced relation space, and the normal-form map onto the surviving
/// basis monomials (the lexicographically latest ones — relation pivots
/// eliminate the earliest).
#[derive(Clone, Debug)]
pub struct ComponentBasis {
    n: usize,
    multidegree: Multidegree,
    spanning: Vec<ColumnMonomial>,
    index: HashMap<ColumnMonomial, usize>,
    relation_space: Subspace,
    basis_positions: Vec<usize>,
    /// Normal form of each spanning monomial in basis coordinates.
    nf_rows: Vec<SparseVec>,
}

impl ComponentBasis {
    fn build(n: usize, d: &Multidegree) -> ComponentBasis {
        if !d.component_can_be_nonzero() {
            return ComponentBasis {
                n,
                multidegree: d.clone(),
                spanning: Vec::new(),
                index: HashMap::new(),
                relation_space: Subspace::zero(0),
                basis_positions: Vec::new(),
                nf_rows: Vec::new(),
            };
        }
        Self::build_unchecked(n, d)
    }

    /// Builds the component from the relations alone, without the vanishing
    /// shortcut — the shortcut is validated against this in tests.
    pub fn build_unchecked(n: usize, d: &Multidegree) -> ComponentBasis {
        let spanning = column_monomials(n, d);
        let index: HashMap<ColumnMonomial, usize> =
            spanning.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();

        // Relations: m' * e_1(x_i) for every i and every column monomial m'
        // of multidegree d - e_i; terms with column collisions vanish.
        let mut ech = Echelon::new(spanning.len());
        for i in 1..n {
            if d.get(i) < 1 {
                continue;
            }
            let lower = d.minus_row(i);
            for mp in column_monomials(n, &lower) {
                let mut terms = Vec::new();
                for j in 1..=n {
                    if let Some(m) = mp.mul_var((i, j)) {
                        terms.push((index[&m], rat(1)));
                    }
                }
                ech.insert(SparseVec::from_terms(terms));
            }
        }
        let relation_space = ech.into_subspace();

        let pivot_set: std::collections::HashSet<usize> =
            relation_space.pivot_cols().iter().copied().collect();
        let basis_positions: Vec<usize> =
            (0..spanning.len()).filter(|p| !pivot_set.contains(p)).collect();
        let mut basis_coord = vec![None; spanning.len()];
        for (b, &p) in basis_positions.iter().enumerate() {
            basis_coord[p] = Some(b);
        }

        // Normal forms: a free position is itself; a pivot position `p`
        // rewrites as minus the free tail of its RREF relation row.
        let mut nf_rows = vec![SparseVec::new(); spanning.len()];
        for (b, &p) in basis_positions.iter().enumerate() {
            nf_rows[p] = SparseVec::unit(b, rat(1));
        }
        for (row, &p) in
            relation_space.basis().iter().zip(relation_space.pivot_cols())
        {
            let mut terms = Vec::new();
            for (c, v) in row.iter() {
                if c == p {
                    continue;
                }
                let b = basis_coord[c].expect("RREF tails live on free columns");
                terms.push((b, -v.clone()));
            }
            nf_rows[p] = SparseVec::from_terms(terms);
        }

        ComponentBasis {
            n,
            multidegree: d.clone(),
            spanning,
            index,
            relation_space,
            basis_positions,
            nf_rows,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn dim(&self) -> usize {
        self.basis_positions.len()
    }

    pub fn spanning(&self) -> &[ColumnMonomial] {
        &self.spanning
    }

    pub fn relation_space(&self) -> &Subspace {
        &self.relation_space
    }

    /// The basis monomials (classes of the lex-latest spanning monomials).
    pub fn basis_monomials(&self) -> impl Iterator<Item = &ColumnMonomial> {
        self.basis_positions.iter().map(|&p| &self.spanning[p])
    }

    pub fn basis_monomial(&self, coord: usize) -> &ColumnMonomial {
        &self.spanning[self.basis_positions[coord]]
    }

    /// Position of a monomial in the spanning list.
    pub fn spanning_position(&self, m: &ColumnMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Normal form of a spanning monomial, in basis coordinates.
    pub fn nf_of_spanning(&self, pos: usize) -> &SparseVec {
        &self.nf_rows[pos]
    }

    /// Normal form of a column monomial (zero if the component is zero).
    pub fn nf_monomial(&self, m: &ColumnMonomial) -> SparseVec {
        match self.index.get(m) {
            Some(&pos) => self.nf_rows[pos].clone(),
            None => {
                assert!(
                    self.spanning.is_empty(),
                    "monomial {} is not in the spanning set of {}",
                    m.render(),
                    self.multidegree
                );
                SparseVec::new()
            }
        }
    }

    /// Normal form of a linear combination of column monomials.
    pub fn nf_terms(&self, terms: &[(ColumnMonomial, Rational)]) -> SparseVec {
        let mut out = SparseVec::new();
        for (m, c) in terms {
            if let Some(&pos) = self.index.get(m) {
                out.add_scaled(&self.nf_rows[pos], c);
            } else {
                assert!(self.spanning.is_empty(), "unknown monomial {}", m.render());
            }
        }
        out
    }

    /// Canonical JSON form: monomials as `[[row, col], ...]` pairs in
    /// increasing column order, rationals as `"p/q"` strings. Alphabetical
    /// key order (serde_json's default map) keeps output byte-stable.
    pub fn to_json(&self) -> serde_json::Value {
        let monomial_json = |m: &ColumnMonomial| {
            serde_json::Value::Array(
                m.assignments()
                    .iter()
                    .map(|&(j, i)| serde_json::json!([i, j]))
                    .collect(),
            )
        };
        let vec_json = |v: &SparseVec| {
            serde_json::Value::Array(
                v.iter().map(|(c, r)| serde_json::json!([c, rat_string(r)])).collect(),
            )
        };
        serde_json::json!({
            "n": self.n,
            "multidegree": self.multidegree.entries(),
            "spanning": self.spanning.iter().map(monomial_json).collect::<Vec<_>>(),
            "relation_pivots": self.relation_space.pivot_cols(),
            "relation_rows": self.relation_space.basis().iter().map(vec_json).collect::<Vec<_>>(),
            "basis_positions": self.basis_positions,
        })
    }

    /// Rebuilds from [`ComponentBasis::to_json`] output; used by the on-disk
    /// cache. Returns `None` on any shape mismatch.
    pub fn from_json(v: &serde_json::Value) -> Option<ComponentBasis> {
        let n = v.get("n")?.as_u64()? as usize;
        let d = Multidegree::new(
            v.get("multidegree")?.as_array()?.iter().map(|e| e.as_i64().unwrap_or(i64::MIN)).collect(),
        );
        if d.entries().contains(&i64::MIN) {
            return None;
        }
        let spanning: Vec<ColumnMonomial> = v
            .get("spanning")?
            .as_array()?
            .iter()
            .map(|m| {
                let pairs = m
                    .as_array()?
                    .iter()
                    .map(|p| {
                        let p = p.as_array()?;
                        Some((p.get(1)?.as_u64()? as usize, p.first()?.as_u64()? as usize))
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(ColumnMonomial::from_pairs(pairs))
            })
            .collect::<Option<Vec<_>>>()?;
        let pivots: Vec<usize> = v
            .get("relation_pivots")?
            .as_array()?
            .iter()
            .map(|p| p.as_u64().map(|u| u as usize))
            .collect::<Option<Vec<_>>>()?;
        let rows: Vec<SparseVec> = v
            .get("relation_rows")?
            .as_array()?
            .iter()
            .map(|r| {
                let terms = r
                    .as_array()?
                    .iter()
                    .map(|e| {
                        let e = e.as_array()?;
                        Some((e.first()?.as_u64()? as usize, rat_parse(e.get(1)?.as_str()?)?))
                    })
                    .collect::<Option<Vec<_>>>()?;
                Some(SparseVec::from_terms(terms))
            })
            .collect::<Option<Vec<_>>>()?;

        // Reassemble the echelon structure and derive the rest as in build.
        let mut ech = Echelon::new(spanning.len());
        for r in &rows {
            ech.insert(r.clone());
        }
        let relation_space = ech.into_subspace();
        if relation_space.pivot_cols() != pivots {
            return None;
        }
        let index: HashMap<ColumnMonomial, usize> =
            spanning.iter().cloned().enumerate().map(|(k, m)| (m, k)).collect();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let basis_positions: Vec<usize> =
            (0..spanning.len()).filter(|p| !pivot_set.contains(p)).collect();
        let mut basis_coord = vec![None; spanning.len()];
        for (b, &p) in basis_positions.iter().enumerate() {
            basis_coord[p] = Some(b);
        }
        let mut nf_rows = vec![SparseVec::new(); spanning.len()];
        for (b, &p) in basis_positions.iter().enumerate() {
            nf_rows[p] = SparseVec::unit(b, rat(1));
        }
        for (row, &p) in relation_space.basis().iter().zip(relation_space.pivot_cols()) {
            let mut terms = Vec::new();
            for (c, v) in row.iter() {
                if c != p {
                    terms.push((basis_coord[c]?, -v.clone()));
                }
            }
            nf_rows[p] = SparseVec::from_terms(terms);
        }
        Some(ComponentBasis {
            n,
            multidegree: d,
            spanning,
            index,
            relation_space,
            basis_positions,
            nf_rows,
        })
    }
}

// ---------------------------------------------------------------------------
// Ring elements
// ---------------------------------------------------------------------------

/// A homogeneous element of `G(A_n)`: sparse coordinates against the
/// normal-form basis of its multidegree component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingVector {
    multidegree: Multidegree,
    coords: SparseVec,
}

impl RingVector {
    pub fn new(multidegree: Multidegree, coords: SparseVec) -> Self {
        RingVector { multidegree, coords }
    }

    pub fn zero(multidegree: Multidegree) -> Self {
        RingVector { multidegree, coords: SparseVec::new() }
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn coords(&self) -> &SparseVec {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn add_scaled(&mut self, other: &RingVector, c: &Rational) {
        assert_eq!(self.multidegree, other.multidegree, "multidegree mismatch");
        self.coords.add_scaled(&other.coords, c);
    }

    /// Expansion in basis monomials, via the owning component.
    pub fn terms(&self, component: &ComponentBasis) -> Vec<(ColumnMonomial, Rational)> {
        self.coords
            .iter()
            .map(|(c, v)| (component.basis_monomial(c).clone(), v.clone()))
            .collect()
    }

    /// Canonical JSON: `{"multidegree": [...], "terms": [[monomial, "p/q"], ...]}`
    /// with terms in increasing basis-coordinate order.
    pub fn to_json(&self, component: &ComponentBasis) -> serde_json::Value {
        serde_json::json!({
            "multidegree": self.multidegree.entries(),
            "terms": self
                .coords
                .iter()
                .map(|(c, v)| {
                    let m = component.basis_monomial(c);
                    serde_json::json!([
                        m.assignments().iter().map(|&(j, i)| serde_json::json!([i, j])).collect::<Vec<_>>(),
                        rat_string(v),
                    ])
                })
                .collect::<Vec<_>>(),
        })
    }

    /// Human-readable rendering via basis monomials.
    pub fn render(&self, component: &ComponentBasis) -> String {
        let mut p = FreePoly::zero();
        for (c, v) in self.coords.iter() {
            p.add_term(component.basis_monomial(c).to_free(), v.clone());
        }
        p.render()
    }
}

// ---------------------------------------------------------------------------
// The ring engine
// ---------------------------------------------------------------------------

/// Component engine for a fixed `n`: builds and caches [`ComponentBasis`]
/// values per multidegree. Construction is at-most-once per key (concurrent
/// readers share the built component); an optional directory persists
/// components as canonical JSON between runs.
pub struct GcRing {
    n: usize,
    cache: DashMap<Multidegree, Arc<ComponentBasis>>,
    disk_dir: Option<PathBuf>,
}

impl GcRing {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "rank must be at least 2");
        GcRing { n, cache: DashMap::new(), disk_dir: None }
    }

    /// Engine with an on-disk component cache rooted at `dir`.
    pub fn with_cache_dir(n: usize, dir: PathBuf) -> Self {
        let mut ring = GcRing::new(n);
        ring.disk_dir = Some(dir);
        ring
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn cache_path(&self, d: &Multidegree) -> Option<PathBuf> {
        let dir = self.disk_dir.as_ref()?;
        let name: Vec<String> = d.entries().iter().map(|e| e.to_string()).collect();
        Some(dir.join(format!("component-n{}-d{}.json", self.n, name.join("_"))))
    }

    /// The component of multidegree `d`, built (or loaded) on first use.
    pub fn component(&self, d: &Multidegree) -> Arc<ComponentBasis> {
        assert_eq!(d.n(), self.n, "multidegree rank mismatch");
        self.cache
            .entry(d.clone())
            .or_insert_with(|| {
                if let Some(path) = self.cache_path(d) {
                    if let Ok(text) = std::fs::read_to_string(&path) {
                        if let Some(cb) = serde_json::from_str::<serde_json::Value>(&text)
                            .ok()
                            .as_ref()
                            .and_then(ComponentBasis::from_json)
                        {
                            if cb.n == self.n && cb.multidegree == *d {
                                return Arc::new(cb);
                            }
                        }
                    }
                    let cb = ComponentBasis::build(self.n, d);
                    if let Some(parent) = path.parent() {
                        let _ = std::fs::create_dir_all(parent);
                    }
                    let _ = std::fs::write(&path, cb.to_json().to_string());
                    Arc::new(cb)
                } else {
                    Arc::new(ComponentBasis::build(self.n, d))
                }
            })
            .clone()
    }

    pub fn dim(&self, d: &Multidegree) -> usize {
        if !d.component_can_be_nonzero() {
            return 0;
        }
        self.component(d).dim()
    }

    /// The class of `x_{i,j}` as a ring element.
    pub fn variable(&self, v: Var) -> RingVector {
        let m = ColumnMonomial::from_pairs(vec![(v.1, v.0)]);
        self.class_of_monomial(&m)
    }

    /// The class of a column monomial.
    pub fn class_of_monomial(&self, m: &ColumnMonomial) -> RingVector {
        let d = m.multidegree(self.n);
        let comp = self.component(&d);
        RingVector::new(d, comp.nf_monomial(m))
    }

    /// The class of a linear combination of column monomials, which must all
    /// share the multidegree `d`.
    pub fn class_of_terms(&self, d: &Multidegree, terms: &[(ColumnMonomial, Rational)]) -> RingVector {
        for (m, _) in terms {
            assert_eq!(m.multidegree(self.n), *d, "inhomogeneous combination");
        }
        let comp = self.component(d);
        RingVector::new(d.clone(), comp.nf_terms(terms))
    }

    /// Multiplication by the variable `x_{i,j}`: lands in `d + e_i`, fully
    /// normal-formed; monomials acquiring a column collision vanish.
    pub fn multiply(&self, v: &RingVector, var: Var) -> RingVector {
        let target_d = v.multidegree().plus_row(var.0);
        if !target_d.component_can_be_nonzero() {
            return RingVector::zero(target_d);
        }
        let source = self.component(v.multidegree());
        let target = self.component(&target_d);
        let mut out = SparseVec::new();
        for (c, coeff) in v.coords().iter() {
            if let Some(m) = source.basis_monomial(c).mul_var(var) {
                let pos = target
                    .spanning_position(&m)
                    .expect("product monomial must be in the target spanning set");
                out.add_scaled(target.nf_of_spanning(pos), coeff);
            }
        }
        RingVector::new(target_d, out)
    }

    /// Multiplication by a column monomial (single normal-form pass).
    pub fn multiply_monomial(&self, v: &RingVector, m: &ColumnMonomial) -> RingVector {
        let target_d = v.multidegree().add(&m.multidegree(self.n));
        if !target_d.component_can_be_nonzero() {
            return RingVector::zero(target_d);
        }
        let source = self.component(v.multidegree());
        let target = self.component(&target_d);
        let mut out = SparseVec::new();
        for (c, coeff) in v.coords().iter() {
            if let Some(prod) = source.basis_monomial(c).mul(m) {
                let pos = target
                    .spanning_position(&prod)
                    .expect("product monomial must be in the target spanning set");
                out.add_scaled(target.nf_of_spanning(pos), coeff);
            }
        }
        RingVector::new(target_d, out)
    }

    /// Hilbert function `h(0), ..., h(n-1)` by summing component dimensions
    /// per total degree.
    pub fn hilbert_function(&self) -> Vec<u64> {
        (0..self.n)
            .map(|t| {
                let degrees = valid_multidegrees(self.n, t);
                degrees
                    .par_iter()
                    .map(|d| self.dim(d) as u64)
                    .sum()
            })
            .collect()
    }

    pub fn total_dimension(&self) -> u64 {
        self.hilbert_function().iter().sum()
    }

    /// The socle of the component: the kernel of the stacked multiplication
    /// maps by all `n(n-1)` variables.
    pub fn socle_component(&self, d: &Multidegree) -> Subspace {
        self.annihilator_component(d, &degree_one_monomials(self.n))
    }

    /// The annihilator of the degree-2 monomials inside the component: the
    /// kernel of the stacked multiplications by every degree-2 column
    /// monomial.
    pub fn ann_m2_component(&self, d: &Multidegree) -> Subspace {
        self.annihilator_component(d, &degree_two_monomials(self.n))
    }

    /// Kernel of multiplication by each of the given monomials, stacked.
    pub fn annihilator_component(&self, d: &Multidegree, monomials: &[ColumnMonomial]) -> Subspace {
        let comp = self.component(d);
        let dim = comp.dim();
        if dim == 0 {
            return Subspace::zero(0);
        }
        // Stack one row per (monomial, target coordinate); columns are the
        // component coordinates. Kernel vectors are the annihilator.
        let mut rows: Vec<SparseVec> = Vec::new();
        let mut offsets: Vec<(ColumnMonomial, usize)> = Vec::new();
        for m in monomials {
            let target_d = d.add(&m.multidegree(self.n));
            if !target_d.component_can_be_nonzero() {
                continue;
            }
            let target = self.component(&target_d);
            if target.dim() == 0 {
                continue;
            }
            offsets.push((m.clone(), rows.len()));
            rows.extend(std::iter::repeat_with(SparseVec::new).take(target.dim()));
        }
        for (m, off) in &offsets {
            let target_d = d.add(&m.multidegree(self.n));
            let target = self.component(&target_d);
            for c in 0..dim {
                if let Some(prod) = comp.basis_monomial(c).mul(m) {
                    let pos = target.spanning_position(&prod).expect("product in spanning set");
                    for (r, v) in target.nf_of_spanning(pos).iter() {
                        // Build column c of the stacked matrix row by row.
                        rows[off + r].add_scaled(&SparseVec::unit(c, v.clone()), &rat(1));
                    }
                }
            }
        }
        let matrix = crate::exact_linalg::SparseMatrix::from_rows(dim, rows);
        crate::exact_linalg::kernel_basis(&matrix)
    }

    /// The smallest total degree (at least 1) carrying a nonzero socle
    /// vector.
    pub fn min_socle_degree(&self) -> usize {
        for t in 1..self.n {
            for d in valid_multidegrees(self.n, t) {
                if self.dim(&d) > 0 && self.socle_component(&d).dim() > 0 {
                    return t;
                }
            }
        }
        unreachable!("the top degree of an Artinian graded ring is socle")
    }

    /// Total socle dimension over all components of total degree `t`.
    pub fn socle_dim_in_degree(&self, t: usize) -> usize {
        valid_multidegrees(self.n, t).iter().map(|d| self.socle_component(d).dim()).sum()
    }

    /// Decides membership of `v` in the ideal generated by `gens`, by
    /// spanning `g * (basis monomials of the complementary multidegree)`
    /// degree by degree.
    pub fn ideal_membership(&self, v: &RingVector, gens: &[IdealGen]) -> bool {
        if v.is_zero() {
            return true;
        }
        let comp = self.component(v.multidegree());
        let mut ech = Echelon::new(comp.dim());
        for gen in gens {
            let g = match gen {
                IdealGen::Variable(var) => self.variable(*var),
                IdealGen::Element(e) => e.clone(),
            };
            if g.is_zero() {
                continue;
            }
            let complement = v.multidegree().sub(g.multidegree());
            if !complement.is_nonneg() || !complement.component_can_be_nonzero() {
                continue;
            }
            let comp_c = self.component(&complement);
            for b in 0..comp_c.dim() {
                let product = self.multiply_monomial(&g, comp_c.basis_monomial(b));
                ech.insert(product.coords().clone());
            }
        }
        ech.contains(v.coords())
    }
}

/// A generator for [`GcRing::ideal_membership`]: a plain variable or a
/// homogeneous ring element.
#[derive(Clone, Debug)]
pub enum IdealGen {
    Variable(Var),
    Element(RingVector),
}

/// All degree-1 column monomials (the variables), in (row, column) order.
pub fn degree_one_monomials(n: usize) -> Vec<ColumnMonomial> {
    let mut out = Vec::new();
    for i in 1..n {
        for j in 1..=n {
            out.push(ColumnMonomial::from_pairs(vec![(j, i)]));
        }
    }
    out
}

/// All degree-2 column monomials (distinct columns), deterministic order.
pub fn degree_two_monomials(n: usize) -> Vec<ColumnMonomial> {
    let mut out = Vec::new();
    for i in 1..n {
        for k in i..n {
            for j1 in 1..=n {
                for j2 in (j1 + 1)..=n {
                    out.push(ColumnMonomial::from_pairs(vec![(j1, i), (j2, k)]));
                    if i != k {
                        out.push(ColumnMonomial::from_pairs(vec![(j1, k), (j2, i)]));
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}
