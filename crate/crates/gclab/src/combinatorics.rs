//! Partitions, dominance, tableaux, Kostka numbers, Specht dimensions, and
//! the closed-form counting formulas for `G(A_n)`: the total dimension
//! `d(n)`, the Hilbert function, the multiplicity weights `m_lambda`, and
//! the socle-budget bound `R(n)`.
//!
//! Everything here is pure integer combinatorics over immutable values; the
//! linear-algebra engine in [`crate::gc_ring`] computes the same numbers
//! independently, and the two are cross-checked component by component.

use crate::{Error, Result};

/// An integer partition: weakly decreasing positive parts. The zero-padded
/// length-`n` view used by the counting formulas is computed on demand via
/// [`Partition::padded`], not stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition; `parts` must be weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]) && parts.iter().all(|&p| p > 0),
            "partition parts must be weakly decreasing and positive: {parts:?}"
        );
        Partition { parts }
    }

    /// Builds from an arbitrary multiset of nonnegative entries by sorting
    /// descending and dropping zeros.
    pub fn from_multiset(mut entries: Vec<usize>) -> Self {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        entries.retain(|&e| e > 0);
        Partition { parts: entries }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (positive) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Zero-padded view of length `len` (must be >= the number of parts).
    pub fn padded(&self, len: usize) -> Vec<usize> {
        assert!(len >= self.parts.len(), "padding shorter than the partition");
        let mut v = self.parts.clone();
        v.resize(len, 0);
        v
    }

    /// Conjugate (transposed) partition.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        Partition { parts: (1..=cols).map(|c| self.parts.iter().filter(|&&p| p >= c).count()).collect() }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A `Z^{n-1}` multidegree `d = (d_1, ..., d_{n-1})` for ambient rank `n`.
/// Entries are signed because tangent computations shift multidegrees below
/// zero; ring components only exist for nonnegative entries.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree {
    entries: Vec<i64>,
}

impl Multidegree {
    pub fn new(entries: Vec<i64>) -> Self {
        Multidegree { entries }
    }

    pub fn zero(n: usize) -> Self {
        assert!(n >= 1);
        Multidegree { entries: vec![0; n - 1] }
    }

    /// Ambient rank `n` (one more than the number of entries).
    pub fn n(&self) -> usize {
        self.entries.len() + 1
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    /// `d_i` for the 1-based row index `i` in `1..n`.
    pub fn get(&self, i: usize) -> i64 {
        self.entries[i - 1]
    }

    pub fn total(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn is_nonneg(&self) -> bool {
        self.entries.iter().all(|&d| d >= 0)
    }

    /// The vanishing rule for components of `G(A_n)`: the component can be
    /// nonzero only when `n - total(d) >= d_j` for every `j` (in particular
    /// `total(d) <= n`) and all entries are nonnegative.
    pub fn component_can_be_nonzero(&self) -> bool {
        let slack = self.n() as i64 - self.total();
        self.is_nonneg() && self.entries.iter().all(|&d| d <= slack)
    }

    /// `self + e_i` for the 1-based row index `i`.
    pub fn plus_row(&self, i: usize) -> Multidegree {
        let mut e = self.entries.clone();
        e[i - 1] += 1;
        Multidegree { entries: e }
    }

    /// `self - e_i` for the 1-based row index `i`.
    pub fn minus_row(&self, i: usize) -> Multidegree {
        let mut e = self.entries.clone();
        e[i - 1] -= 1;
        Multidegree { entries: e }
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.entries.len(), other.entries.len());
        Multidegree {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.entries.len(), other.entries.len());
        Multidegree {
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::fmt::Display for Multidegree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// The partition associated to a multidegree: the descending sort of the
/// multiset `{n - total(d), d_1, ..., d_{n-1}}`, zeros dropped. Errors when
/// the multiset would contain a negative entry.
pub fn partition_of_multidegree(d: &Multidegree) -> Result<Partition> {
    let slack = d.n() as i64 - d.total();
    if !d.is_nonneg() || slack < 0 {
        return Err(Error::InvalidMultidegree {
            detail: format!("{d} has no associated partition for rank {}", d.n()),
        });
    }
    let mut entries: Vec<usize> = d.entries().iter().map(|&v| v as usize).collect();
    entries.push(slack as usize);
    Ok(Partition::from_multiset(entries))
}

/// Dominance order: `mu` dominates `la` iff every prefix sum of `mu` is at
/// least the corresponding prefix sum of `la`. Requires `|mu| = |la|`.
pub fn dominates(mu: &Partition, la: &Partition) -> Result<bool> {
    if mu.n() != la.n() {
        return Err(Error::SizeMismatch {
            expected: la.n(),
            found: mu.n(),
            context: "dominance order requires partitions of the same integer",
        });
    }
    let len = mu.len().max(la.len());
    let (mp, lp) = (mu.padded(len), la.padded(len));
    let (mut sm, mut sl) = (0usize, 0usize);
    for i in 0..len {
        sm += mp[i];
        sl += lp[i];
        if sm < sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A filled Young diagram of the given shape; labels are stored in reading
/// order (left to right within a row, rows top down), matching the box
/// numbering used by the monomial map in [`crate::rep_theory`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tableau {
    shape: Partition,
    labels: Vec<usize>,
}

impl Tableau {
    pub fn new(shape: Partition, labels: Vec<usize>) -> Self {
        assert_eq!(labels.len(), shape.n(), "label count must equal the box count");
        assert!(labels.iter().all(|&l| l >= 1), "labels are positive integers");
        Tableau { shape, labels }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Labels in reading order.
    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    /// The label of box `k` in 1-based reading order.
    pub fn label(&self, k: usize) -> usize {
        self.labels[k - 1]
    }

    /// Rows as label slices.
    pub fn rows(&self) -> Vec<&[usize]> {
        let mut out = Vec::with_capacity(self.shape.len());
        let mut start = 0;
        for &p in self.shape.parts() {
            out.push(&self.labels[start..start + p]);
            start += p;
        }
        out
    }

    /// Multiplicity of each label `1..=max`, i.e. the content composition.
    pub fn content(&self) -> Vec<usize> {
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let mut c = vec![0; max];
        for &l in &self.labels {
            c[l - 1] += 1;
        }
        c
    }

    /// Rows weakly increase and columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows = self.rows();
        for r in &rows {
            if r.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        for r in 1..rows.len() {
            for c in 0..rows[r].len() {
                if rows[r][c] <= rows[r - 1][c] {
                    return false;
                }
            }
        }
        true
    }

    /// Semistandard with every label used exactly once.
    pub fn is_standard(&self) -> bool {
        let n = self.shape.n();
        let mut seen = vec![false; n + 1];
        for &l in &self.labels {
            if l > n || seen[l] {
                return false;
            }
            seen[l] = true;
        }
        self.is_semistandard()
    }

    /// Applies a permutation to the labels: label `l` becomes `perm[l-1]`.
    pub fn relabel(&self, perm: &[usize]) -> Tableau {
        Tableau {
            shape: self.shape.clone(),
            labels: self.labels.iter().map(|&l| perm[l - 1]).collect(),
        }
    }

    /// Label sets of the columns of the diagram.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        let rows = self.rows();
        let width = self.shape.parts().first().copied().unwrap_or(0);
        (0..width)
            .map(|c| rows.iter().filter_map(|r| r.get(c).copied()).collect())
            .collect()
    }
}

/// A tabloid: a tableau up to reordering within rows, stored canonically
/// with each row sorted ascending. Rows partition `{1..n}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tabloid {
    pub fn new(shape: Partition, mut rows: Vec<Vec<usize>>) -> Self {
        assert_eq!(rows.len(), shape.len(), "row count must match the shape");
        for (r, p) in rows.iter().zip(shape.parts()) {
            assert_eq!(r.len(), *p, "row sizes must match the shape");
        }
        for r in &mut rows {
            r.sort_unstable();
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        all.sort_unstable();
        assert!(
            all.iter().enumerate().all(|(i, &l)| l == i + 1),
            "tabloid rows must partition 1..=n"
        );
        Tabloid { shape, rows }
    }

    pub fn of_tableau(t: &Tableau) -> Self {
        Tabloid::new(t.shape().clone(), t.rows().iter().map(|r| r.to_vec()).collect())
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }
}

/// All partitions of `n`, in descending lexicographic order (so `(n)` first
/// and `(1,...,1)` last). Deterministic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rem: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=rem.min(max)).rev() {
            cur.push(p);
            go(rem - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All length-`len` nonnegative integer vectors with the given sum, each
/// entry at most `max`, in ascending lexicographic order. Deterministic.
pub fn compositions(total: usize, len: usize, max: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, len: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if len == 0 {
            if total == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for v in 0..=total.min(max) {
            cur.push(v);
            go(total - v, len - 1, max, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, len, max, &mut Vec::new(), &mut out);
    out
}

/// All semistandard tableaux of shape `mu` and content `la` (label `l` used
/// `la_l` times), enumerated by depth-first search over boxes in reading
/// order with labels tried in increasing order — so the output order is
/// deterministic (lexicographic in the reading word).
pub fn ssyt_enumerate(mu: &Partition, la: &Partition) -> Result<Vec<Tableau>> {
    if mu.n() != la.n() {
        return Err(Error::SizeMismatch {
            expected: la.n(),
            found: mu.n(),
            context: "semistandard enumeration requires |shape| = |content|",
        });
    }
    let shape = mu.parts().to_vec();
    let n_labels = la.len();
    let mut remaining = la.parts().to_vec();
    let mut rows: Vec<Vec<usize>> = shape.iter().map(|&p| Vec::with_capacity(p)).collect();
    let mut out = Vec::new();

    fn place(
        r: usize,
        c: usize,
        shape: &[usize],
        n_labels: usize,
        remaining: &mut [usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Vec<Tableau>,
    ) {
        if r == shape.len() {
            let labels: Vec<usize> = rows.iter().flatten().copied().collect();
            out.push(Tableau::new(
                Partition::new(shape.to_vec()),
                labels,
            ));
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] { (r, c + 1) } else { (r + 1, 0) };
        let lo = if c > 0 { rows[r][c - 1] } else { 1 };
        let strict_above = if r > 0 { rows[r - 1][c] } else { 0 };
        for v in lo.max(strict_above + 1)..=n_labels {
            if remaining[v - 1] == 0 {
                continue;
            }
            remaining[v - 1] -= 1;
            rows[r].push(v);
            place(nr, nc, shape, n_labels, remaining, rows, out);
            rows[r].pop();
            remaining[v - 1] += 1;
        }
    }

    if mu.n() == 0 {
        out.push(Tableau::new(mu.clone(), Vec::new()));
    } else {
        place(0, 0, &shape, n_labels, &mut remaining, &mut rows, &mut out);
    }
    Ok(out)
}

/// Kostka number `K_{mu,la}`: the number of semistandard tableaux of shape
/// `mu` and content `la`. Zero unless `mu` dominates `la`.
pub fn kostka(mu: &Partition, la: &Partition) -> Result<usize> {
    Ok(ssyt_enumerate(mu, la)?.len())
}

/// All standard tableaux of shape `mu` (content `(1,...,1)`).
pub fn standard_tableaux(mu: &Partition) -> Vec<Tableau> {
    let ones = Partition::new(vec![1; mu.n()]);
    ssyt_enumerate(mu, &ones).expect("matching sizes by construction")
}

/// Dimension of the irreducible representation indexed by `mu`, by the hook
/// length formula `n! / prod(hooks)`.
pub fn specht_dim(mu: &Partition) -> u64 {
    let n = mu.n();
    let conj = mu.conjugate();
    let mut num: u128 = 1;
    for k in 1..=n as u128 {
        num *= k;
    }
    let mut den: u128 = 1;
    for (r, &p) in mu.parts().iter().enumerate() {
        for c in 0..p {
            let hook = (p - c) + (conj.parts()[c] - r) - 1;
            den *= hook as u128;
        }
    }
    assert_eq!(num % den, 0, "hook product must divide n!");
    u64::try_from(num / den).expect("representation dimension fits in u64")
}

/// Catalan number `C_k`.
pub fn catalan(k: usize) -> u64 {
    let mut binom: u128 = 1;
    for i in 0..k as u128 {
        binom = binom * (2 * k as u128 - i) / (i + 1);
    }
    u64::try_from(binom / (k as u128 + 1)).expect("Catalan number fits in u64")
}

/// The multiplicity weight `m_la` for rank `n`: with `k_j` the number of
/// indices `i != 1` (over the length-`n` zero-padded parts) whose part
/// equals `j`, this is `(n-1)! / prod_j k_j!`.
pub fn m_lambda(la: &Partition, n: usize) -> Result<u64> {
    if la.n() != n {
        return Err(Error::SizeMismatch {
            expected: n,
            found: la.n(),
            context: "m_lambda requires a partition of n",
        });
    }
    let padded = la.padded(n);
    let mut counts = std::collections::HashMap::new();
    for &p in &padded[1..] {
        *counts.entry(p).or_insert(0u128) += 1;
    }
    let mut val: u128 = 1;
    for k in 1..n as u128 {
        val *= k;
    }
    for (_, k) in counts {
        for f in 1..=k {
            assert_eq!(val % f, 0);
            val /= f;
        }
    }
    Ok(u64::try_from(val).expect("multiplicity weight fits in u64"))
}

/// The summands of the structure decomposition for associated partition
/// `la`: all `mu` of the same size with `mu` dominating `la` and
/// `mu_1 = la_1`, paired with `K_{mu,la}` and `dim V_mu`; only nonzero
/// Kostka numbers are kept. Deterministic order (descending lex on `mu`).
pub fn structure_summands(la: &Partition) -> Vec<(Partition, usize, u64)> {
    let la1 = la.parts().first().copied().unwrap_or(0);
    partitions_of(la.n())
        .into_iter()
        .filter(|mu| mu.parts().first().copied().unwrap_or(0) == la1)
        .filter(|mu| dominates(mu, la).expect("equal sizes by construction"))
        .filter_map(|mu| {
            let k = kostka(&mu, la).expect("equal sizes by construction");
            if k == 0 {
                None
            } else {
                let dim = specht_dim(&mu);
                Some((mu, k, dim))
            }
        })
        .collect()
}

/// Dimension of the component with associated partition `la` according to
/// the structure decomposition: `sum K_{mu,la} * dim V_mu` over the
/// admissible `mu`.
pub fn structure_dim(la: &Partition) -> u64 {
    structure_summands(la).iter().map(|(_, k, d)| *k as u64 * d).sum()
}

/// Total dimension `d(n)` of `G(A_n)` by the closed formula:
/// `sum_la m_la * sum_{mu dom la, mu_1 = la_1} K_{mu,la} dim V_mu` over all
/// partitions `la` of `n`.
pub fn d_of_n(n: usize) -> u64 {
    assert!(n >= 1, "rank must be positive");
    partitions_of(n)
        .iter()
        .map(|la| m_lambda(la, n).expect("partition of n by construction") * structure_dim(la))
        .sum()
}

/// Hilbert function `h(0), ..., h(n-1)` of `G(A_n)` quotiented by `r`
/// minimal-degree socle elements:
/// `h(i) = -r*delta_{i,ceil(n/2)} + sum_{la: la_1 = n-i} m_la * structure_dim(la)`.
pub fn hilbert_formula(n: usize, r: u64) -> Result<Vec<i64>> {
    if r > 0 {
        let cap = big_r(n)?;
        if r > cap {
            return Err(Error::Unsupported {
                detail: format!("r = {r} exceeds the socle budget R({n}) = {cap}"),
            });
        }
    }
    let mid = n.div_ceil(2);
    let mut h = vec![0i64; n];
    for la in partitions_of(n) {
        let la1 = la.parts()[0];
        // la_1 = n - i picks out degree i; la_1 ranges over 1..=n.
        let i = n - la1;
        h[i] += (m_lambda(&la, n)? * structure_dim(&la)) as i64;
    }
    h[mid] -= r as i64;
    Ok(h)
}

/// The socle budget `R(n)`: the number of independent minimal-degree socle
/// elements available for quotienting while the trivial-negative-tangent
/// conclusion is retained. Defined for `n = 4`, `n = 5`, and even `n >= 6`
/// (where it is `C_{n/2} * sum m_la` over partitions with first part `n/2`
/// and second part at most `n/2 - 2`); undefined for odd `n >= 7`.
pub fn big_r(n: usize) -> Result<u64> {
    match n {
        4 => Ok(12),
        5 => Ok(40),
        _ if n >= 6 && n.is_multiple_of(2) => {
            let half = n / 2;
            let total: u64 = partitions_of(n)
                .iter()
                .filter(|la| la.parts()[0] == half)
                .filter(|la| la.parts().get(1).copied().unwrap_or(0) + 2 <= half)
                .map(|la| m_lambda(la, n).expect("partition of n"))
                .sum();
            Ok(catalan(half) * total)
        }
        _ => Err(Error::Unsupported {
            detail: format!("R({n}) is undefined for odd n >= 7"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn md(entries: &[i64]) -> Multidegree {
        Multidegree::new(entries.to_vec())
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&p(&[2, 1, 1]), &p(&[2, 1, 1])).unwrap());
        assert!(dominates(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap());
        assert!(!dominates(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap());
        assert!(dominates(&p(&[3]), &p(&[2, 2])).is_err());
    }

    #[test]
    fn associated_partition_examples() {
        assert_eq!(partition_of_multidegree(&md(&[1, 1, 0])).unwrap(), p(&[2, 1, 1]));
        assert_eq!(partition_of_multidegree(&md(&[2, 0, 0])).unwrap(), p(&[2, 2]));
        assert_eq!(partition_of_multidegree(&md(&[1, 1, 1, 0, 0])).unwrap(), p(&[3, 1, 1, 1]));
        assert!(partition_of_multidegree(&md(&[3, 2, 0])).is_err());
    }

    #[test]
    fn component_vanishing_rule() {
        assert!(md(&[1, 1, 0]).component_can_be_nonzero());
        // total 3 with slack 1 < entry 2: the component must vanish.
        assert!(!md(&[2, 1, 0]).component_can_be_nonzero());
        assert!(!md(&[-1, 1, 0]).component_can_be_nonzero());
    }

    #[test]
    fn kostka_examples() {
        assert_eq!(kostka(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(kostka(&p(&[2, 1, 1]), &p(&[1, 1, 1, 1])).unwrap(), 3);
        assert_eq!(kostka(&p(&[2, 2, 1]), &p(&[2, 1, 1, 1])).unwrap(), 2);
        assert_eq!(kostka(&p(&[2, 1, 1]), &p(&[2, 2])).unwrap(), 0);
    }

    #[test]
    fn semistandard_fillings_are_semistandard() {
        for t in ssyt_enumerate(&p(&[3, 2]), &p(&[2, 2, 1])).unwrap() {
            assert!(t.is_semistandard());
            assert_eq!(t.content(), vec![2, 2, 1]);
        }
    }

    #[test]
    fn specht_dimensions() {
        assert_eq!(specht_dim(&p(&[5])), 1);
        assert_eq!(specht_dim(&p(&[2, 2])), 2);
        assert_eq!(specht_dim(&p(&[2, 1, 1])), 3);
        assert_eq!(specht_dim(&p(&[2, 2, 1])), 5);
        assert_eq!(specht_dim(&p(&[3, 3])), catalan(3));
    }

    #[test]
    fn specht_dim_counts_standard_tableaux() {
        for n in 1..=6 {
            for mu in partitions_of(n) {
                assert_eq!(
                    specht_dim(&mu) as usize,
                    standard_tableaux(&mu).len(),
                    "hook formula vs direct count at {mu}"
                );
            }
        }
    }

    #[test]
    fn multiplicity_weights() {
        assert_eq!(m_lambda(&p(&[4]), 4).unwrap(), 1);
        assert_eq!(m_lambda(&p(&[3, 1]), 4).unwrap(), 3);
        assert_eq!(m_lambda(&p(&[3, 1, 1, 1]), 6).unwrap(), 10);
    }

    #[test]
    fn total_dimension_formula() {
        assert_eq!(d_of_n(1), 1);
        assert_eq!(d_of_n(2), 2);
        assert_eq!(d_of_n(3), 6);
        assert_eq!(d_of_n(4), 32);
        assert_eq!(d_of_n(5), 220);
    }

    #[test]
    fn hilbert_formula_values() {
        assert_eq!(hilbert_formula(4, 0).unwrap(), vec![1, 9, 21, 1]);
        assert_eq!(hilbert_formula(4, 12).unwrap(), vec![1, 9, 9, 1]);
        assert_eq!(hilbert_formula(5, 0).unwrap(), vec![1, 16, 86, 116, 1]);
        assert_eq!(hilbert_formula(6, 0).unwrap(), vec![1, 25, 235, 915, 680, 1]);
    }

    #[test]
    fn hilbert_sums_match_the_dimension_formula() {
        for n in 2..=7 {
            let h = hilbert_formula(n, 0).unwrap();
            assert_eq!(h.iter().sum::<i64>() as u64, d_of_n(n));
        }
    }

    #[test]
    fn socle_budget_values() {
        assert_eq!(big_r(4).unwrap(), 12);
        assert_eq!(big_r(5).unwrap(), 40);
        assert_eq!(big_r(6).unwrap(), 50);
        assert!(big_r(7).is_err());
    }

    #[test]
    fn kostka_positive_iff_dominates() {
        for n in 1..=6 {
            let parts = partitions_of(n);
            for mu in &parts {
                for la in &parts {
                    let pos = kostka(mu, la).unwrap() > 0;
                    assert_eq!(pos, dominates(mu, la).unwrap(), "mu={mu} la={la}");
                }
            }
        }
    }

    #[test]
    fn permutation_module_dimension_identity() {
        // sum_mu K_{mu,la} dim V_mu = n! / prod(la_i!) for all la of n <= 6.
        for n in 1..=6u64 {
            let fact = |k: u64| (1..=k).product::<u64>();
            for la in partitions_of(n as usize) {
                let lhs: u64 = partitions_of(n as usize)
                    .iter()
                    .map(|mu| kostka(mu, &la).unwrap() as u64 * specht_dim(mu))
                    .sum();
                let rhs = fact(n) / la.parts().iter().map(|&p| fact(p as u64)).product::<u64>();
                assert_eq!(lhs, rhs, "la={la}");
            }
        }
    }

    #[test]
    fn unique_filling_for_even_rank_budget_shapes() {
        // For even n, the top shape (n/2, n/2) admits exactly one
        // semistandard filling for each budget partition.
        for n in [6usize, 8] {
            let half = n / 2;
            let top = p(&[half, half]);
            for la in partitions_of(n)
                .into_iter()
                .filter(|la| la.parts()[0] == half)
                .filter(|la| la.parts().get(1).copied().unwrap_or(0) + 2 <= half)
            {
                assert_eq!(kostka(&top, &la).unwrap(), 1, "la={la}");
            }
        }
    }

    #[test]
    fn conjugate_is_an_involution() {
        for n in 1..=7 {
            for la in partitions_of(n) {
                assert_eq!(la.conjugate().conjugate(), la);
            }
        }
    }

    #[test]
    fn compositions_enumerate_with_bound() {
        let all = compositions(3, 5, 1);
        assert_eq!(all.len(), 10);
        assert!(all.iter().all(|c| c.iter().sum::<usize>() == 3 && c.iter().all(|&v| v <= 1)));
        // Ascending lexicographic order.
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
    }
}
