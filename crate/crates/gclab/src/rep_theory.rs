//! The symmetric-group layer over the ring engine: structure-theorem
//! decompositions of components, the `alpha` monomial map, the `theta`
//! homomorphisms from permutation modules into `G(A_n)`, polytabloids, and
//! explicit socle vectors in the minimal socle degree.
//!
//! The bridge between combinatorics and the ring works through the *ordered
//! partition* `a = (n - sum(d), d_1, ..., d_{n-1})` of a multidegree `d`:
//! a column monomial of multidegree `d` is the same thing as a tabloid of
//! shape `a` (row 1 lists the unused columns, row `i+1` the columns carrying
//! grid row `i`). Sorting `a` into the partition `lambda` fixes a stable
//! permutation `sigma`, and each semistandard tableau `T` of shape `mu` and
//! content `lambda` induces `theta_{T,sigma}: M_mu -> G(A_n)_d`. Images of
//! polytabloids under these maps realize every irreducible summand of a
//! component, and for the minimal socle degree they realize the socle.

use num_traits::Zero;

use crate::combinatorics::{
    partition_of_multidegree, specht_dim, ssyt_enumerate, standard_tableaux, structure_summands,
    Multidegree, Partition, Tableau, Tabloid,
};
use crate::exact_linalg::{rat, Echelon, Rational};
use crate::gc_ring::{ColumnMonomial, GcRing, RingVector};

// ---------------------------------------------------------------------------
// Structure-theorem decompositions
// ---------------------------------------------------------------------------

/// The irreducible decomposition of one component: every partition `mu`
/// dominating `lambda` with the same first part contributes `K_{mu,lambda}`
/// copies of the Specht module `V_mu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    multidegree: Multidegree,
    lambda: Partition,
    /// (mu, multiplicity `K_{mu,lambda}`, dim `V_mu`) with `K > 0`.
    summands: Vec<(Partition, usize, u64)>,
}

impl Decomposition {
    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn summands(&self) -> &[(Partition, usize, u64)] {
        &self.summands
    }

    pub fn total_dim(&self) -> u64 {
        self.summands.iter().map(|(_, k, v)| *k as u64 * v).sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "multidegree": self.multidegree.entries(),
            "lambda": self.lambda.parts(),
            "summands": self
                .summands
                .iter()
                .map(|(mu, k, v)| {
                    serde_json::json!({
                        "mu": mu.parts(),
                        "multiplicity": k,
                        "dim": v,
                    })
                })
                .collect::<Vec<_>>(),
            "total": self.total_dim(),
        })
    }
}

/// Decomposes the component of multidegree `d` and hard-checks the total
/// against the ring engine's rank — the two independent oracles must agree.
pub fn decompose(ring: &GcRing, d: &Multidegree) -> crate::Result<Decomposition> {
    let lambda = partition_of_multidegree(d)?;
    let summands = if d.component_can_be_nonzero() {
        structure_summands(&lambda)
    } else {
        Vec::new()
    };
    let dec = Decomposition { multidegree: d.clone(), lambda, summands };
    assert_eq!(
        dec.total_dim(),
        ring.dim(d) as u64,
        "structure decomposition of {d} disagrees with the linear-algebra rank"
    );
    Ok(dec)
}

// ---------------------------------------------------------------------------
// alpha and theta
// ---------------------------------------------------------------------------

/// The ordered partition `(n - sum(d), d_1, ..., d_{n-1})` attached to a
/// multidegree; entry `a_1` counts unused columns, `a_{i+1}` the columns
/// assigned grid row `i`.
pub fn ordered_partition(d: &Multidegree) -> crate::Result<Vec<usize>> {
    if !d.is_nonneg() || d.total() > d.n() as i64 {
        return Err(crate::Error::InvalidMultidegree {
            detail: format!("no ordered partition for {d}"),
        });
    }
    let mut a = vec![(d.n() as i64 - d.total()) as usize];
    a.extend(d.entries().iter().map(|&e| e as usize));
    Ok(a)
}

/// Reads a tableau with content `a` as a monomial: the box in position `i`
/// (reading order, equal to the column index) with label `l` contributes
/// the variable in grid row `l - 1`, and boxes labelled 1 contribute
/// nothing. Errors when the content of `s` is not `a`.
pub fn alpha(s: &Tableau, a: &[usize]) -> crate::Result<ColumnMonomial> {
    let mut seen = vec![0usize; a.len()];
    for &l in s.labels() {
        if l > a.len() {
            return Err(crate::Error::BadTableau {
                detail: format!("label {l} exceeds the content length {}", a.len()),
            });
        }
        seen[l - 1] += 1;
    }
    if seen != a {
        return Err(crate::Error::BadTableau {
            detail: format!("content {seen:?} differs from required {a:?}"),
        });
    }
    let mut pairs = Vec::new();
    for (idx, &l) in s.labels().iter().enumerate() {
        if l >= 2 {
            pairs.push((idx + 1, l - 1)); // (column, grid row)
        }
    }
    Ok(ColumnMonomial::from_pairs(pairs))
}

/// A homomorphism `theta_{T,sigma}: M_mu -> G(A_n)_d` given by a
/// semistandard tableau `T` of shape `mu` and content `lambda(d)`, with
/// `sigma` the stable sorting permutation taking the ordered partition to
/// `lambda`.
#[derive(Clone, Debug)]
pub struct ThetaMap {
    n: usize,
    multidegree: Multidegree,
    tableau: Tableau,
    /// `sigma_inv[k-1]` = position in the ordered partition that sorting
    /// moved to rank `k` (stable: by value descending, then index).
    sigma_inv: Vec<usize>,
    /// Per row of `mu`: the sorted label multiset of `sigma^{-1} T`.
    row_labels: Vec<Vec<usize>>,
}

impl ThetaMap {
    /// Builds the map for component `d` from the semistandard tableau `t`.
    pub fn new(n: usize, d: &Multidegree, t: &Tableau) -> crate::Result<ThetaMap> {
        assert_eq!(d.n(), n, "multidegree rank mismatch");
        let lambda = partition_of_multidegree(d)?;
        if !t.is_semistandard() {
            return Err(crate::Error::BadTableau {
                detail: format!("tableau {:?} is not semistandard", t.labels()),
            });
        }
        if t.content() != lambda.parts() {
            return Err(crate::Error::BadTableau {
                detail: format!(
                    "content {:?} differs from the associated partition {lambda}",
                    t.content()
                ),
            });
        }
        let a = ordered_partition(d)?;
        // Stable sort of `a` descending: rank k comes from position p_k.
        let mut order: Vec<usize> = (1..=n).collect();
        order.sort_by_key(|&p| (std::cmp::Reverse(a[p - 1]), p));
        let sigma_inv = order;
        // sigma^{-1} T relabels l -> sigma_inv[l-1]; record row multisets.
        let row_labels: Vec<Vec<usize>> = t
            .rows()
            .iter()
            .map(|r| {
                let mut labels: Vec<usize> = r.iter().map(|&l| sigma_inv[l - 1]).collect();
                labels.sort_unstable();
                labels
            })
            .collect();
        Ok(ThetaMap { n, multidegree: d.clone(), tableau: t.clone(), sigma_inv, row_labels })
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn tableau(&self) -> &Tableau {
        &self.tableau
    }

    pub fn shape(&self) -> &Partition {
        self.tableau.shape()
    }

    /// `sigma^{-1}` as a 1-based lookup table.
    pub fn sigma_inv(&self) -> &[usize] {
        &self.sigma_inv
    }

    /// Applies the map to a formal sum of tabloids of shape `mu`, returning
    /// the normal-formed image in the target component.
    ///
    /// For a tabloid with row sets `U_r`, the image is the sum over all
    /// distinct row-wise assignments of the label multiset of row `r` of
    /// `sigma^{-1} T` to the members of `U_r`; each member `c` with label
    /// `l >= 2` contributes the variable in grid row `l - 1`, column `c`.
    pub fn apply(&self, ring: &GcRing, element: &[(Tabloid, Rational)]) -> crate::Result<RingVector> {
        assert_eq!(ring.n(), self.n, "ring rank differs from the map's rank");
        let mut terms: Vec<(ColumnMonomial, Rational)> = Vec::new();
        for (tabloid, coeff) in element {
            if coeff.is_zero() {
                continue;
            }
            if tabloid.shape() != self.tableau.shape() {
                return Err(crate::Error::BadTableau {
                    detail: format!(
                        "tabloid shape {} differs from the map shape {}",
                        tabloid.shape(),
                        self.tableau.shape()
                    ),
                });
            }
            // Per-row distinct assignments: enumerate multiset permutations
            // of the labels against the sorted member list of the row.
            let rows = tabloid.rows();
            let mut pairs: Vec<(usize, usize)> = Vec::new();
            collect_assignments(&mut pairs, rows, &self.row_labels, 0, coeff, &mut terms);
        }
        Ok(ring.class_of_terms(&self.multidegree, &terms))
    }
}

/// Recursion over rows: extend `pairs` with every distinct assignment of
/// `labels[r]` to the members of `rows[r]`, then recurse to the next row;
/// at the end emit the accumulated column monomial.
fn collect_assignments(
    pairs: &mut Vec<(usize, usize)>,
    rows: &[Vec<usize>],
    labels: &[Vec<usize>],
    r: usize,
    coeff: &Rational,
    out: &mut Vec<(ColumnMonomial, Rational)>,
) {
    if r == rows.len() {
        out.push((ColumnMonomial::from_pairs(pairs.clone()), coeff.clone()));
        return;
    }
    let members = &rows[r];
    let mut multiset = labels[r].clone();
    permute_multiset(&mut multiset, 0, &mut |arrangement| {
        let before = pairs.len();
        for (c, &l) in members.iter().zip(arrangement.iter()) {
            if l >= 2 {
                pairs.push((*c, l - 1));
            }
        }
        collect_assignments(pairs, rows, labels, r + 1, coeff, out);
        pairs.truncate(before);
    });
}

/// Visits every distinct permutation of `items[k..]` in place (classic
/// swap-based enumeration with duplicate skipping on sorted input).
fn permute_multiset(items: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k + 1 >= items.len() {
        visit(items);
        return;
    }
    let mut used = Vec::new();
    for i in k..items.len() {
        if used.contains(&items[i]) {
            continue;
        }
        used.push(items[i]);
        items.swap(k, i);
        permute_multiset(items, k + 1, visit);
        items.swap(k, i);
    }
}

// ---------------------------------------------------------------------------
// Polytabloids
// ---------------------------------------------------------------------------

/// The signed column-stabilizer sum `e_t` attached to a standard tableau:
/// a basis element of the Specht module inside the permutation module.
#[derive(Clone, Debug)]
pub struct Polytabloid {
    t: Tableau,
    expansion: Vec<(Tabloid, Rational)>,
}

impl Polytabloid {
    pub fn tableau(&self) -> &Tableau {
        &self.t
    }

    pub fn expansion(&self) -> &[(Tabloid, Rational)] {
        &self.expansion
    }
}

/// Expands `e_t = sum over the column stabilizer of sgn(pi) * pi{t}`.
pub fn polytabloid(t: &Tableau) -> crate::Result<Polytabloid> {
    if !t.is_standard() {
        return Err(crate::Error::BadTableau {
            detail: format!("polytabloids require a standard tableau, got {:?}", t.labels()),
        });
    }
    let columns = t.columns();
    let n = t.shape().n();
    // Build the identity relabeling and refine it column by column.
    let mut expansion: Vec<(Tabloid, Rational)> = Vec::new();
    let mut perm: Vec<usize> = (1..=n).collect();
    fn go(
        t: &Tableau,
        columns: &[Vec<usize>],
        c: usize,
        sign: i64,
        perm: &mut Vec<usize>,
        out: &mut Vec<(Tabloid, Rational)>,
    ) {
        if c == columns.len() {
            out.push((Tabloid::of_tableau(&t.relabel(perm)), rat(sign)));
            return;
        }
        for (arrangement, s) in signed_permutations(&columns[c]) {
            for (&from, &to) in columns[c].iter().zip(arrangement.iter()) {
                perm[from - 1] = to;
            }
            go(t, columns, c + 1, sign * s, perm, out);
            for &from in &columns[c] {
                perm[from - 1] = from;
            }
        }
    }
    go(t, &columns, 0, 1, &mut perm, &mut expansion);
    // Distinct permutations give distinct tabloids for a standard tableau,
    // but merge defensively so the expansion is canonical.
    expansion.sort_by(|(a, _), (b, _)| a.cmp(b));
    expansion.dedup_by(|(b, cb), (a, ca)| {
        if a == b {
            *ca += std::mem::replace(cb, Rational::zero());
            true
        } else {
            false
        }
    });
    expansion.retain(|(_, c)| !c.is_zero());
    Ok(Polytabloid { t: t.clone(), expansion })
}

/// All orderings of the (distinct) items, each with the sign of the
/// rearrangement relative to the input order.
fn signed_permutations(items: &[usize]) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..items.len()).collect();
    fn go(idx: &mut Vec<usize>, k: usize, items: &[usize], out: &mut Vec<(Vec<usize>, i64)>) {
        if k == idx.len() {
            let inversions = idx
                .iter()
                .enumerate()
                .map(|(i, &a)| idx[i + 1..].iter().filter(|&&b| b < a).count())
                .sum::<usize>();
            let sign = if inversions % 2 == 0 { 1 } else { -1 };
            out.push((idx.iter().map(|&i| items[i]).collect(), sign));
            return;
        }
        for i in k..idx.len() {
            idx.swap(k, i);
            go(idx, k + 1, items, out);
            idx.swap(k, i);
        }
    }
    go(&mut idx, 0, items, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Socle vectors in the minimal degree
// ---------------------------------------------------------------------------

/// The shape carrying the minimal-degree socle: `(D, D)` for even `n` and
/// `(D-1, D-1, 1)` for odd `n`, where `D = ceil(n/2)`.
pub fn min_socle_shape(n: usize) -> Partition {
    assert!(n >= 4, "socle shapes are defined for rank at least 4");
    let d = n.div_ceil(2);
    if n.is_multiple_of(2) {
        Partition::new(vec![d, d])
    } else {
        Partition::new(vec![d - 1, d - 1, 1])
    }
}

/// Images `theta_{T,sigma}(e_t)` for every semistandard `T` of shape `mu`
/// and content `lambda(d)`, and every standard `t` of shape `mu`; returned
/// with their witnesses. No socle or rank assertion is made here.
pub fn theta_vectors(
    ring: &GcRing,
    d: &Multidegree,
    mu: &Partition,
) -> crate::Result<Vec<(Tableau, Tableau, RingVector)>> {
    let lambda = partition_of_multidegree(d)?;
    let mut out = Vec::new();
    for t_map in ssyt_enumerate(mu, &lambda)? {
        let map = ThetaMap::new(ring.n(), d, &t_map)?;
        for t in standard_tableaux(mu) {
            let e = polytabloid(&t)?;
            let v = map.apply(ring, e.expansion())?;
            out.push((t_map.clone(), t, v));
        }
    }
    Ok(out)
}

/// Explicit socle vectors of the component `d` in the minimal socle degree
/// `D = ceil(n/2)`: the polytabloid images under every `theta` map of the
/// minimal socle shape. Each returned vector is verified to be annihilated
/// by all variables, and the combined span is verified to have dimension
/// `K_{mu,lambda} * dim V_mu`.
pub fn socle_basis_min_degree(ring: &GcRing, d: &Multidegree) -> crate::Result<Vec<RingVector>> {
    let n = ring.n();
    if n < 4 {
        return Err(crate::Error::Unsupported {
            detail: format!("minimal-degree socle vectors require rank at least 4, got {n}"),
        });
    }
    let depth = n.div_ceil(2) as i64;
    if d.total() != depth {
        return Err(crate::Error::InvalidMultidegree {
            detail: format!("total degree of {d} is not the minimal socle degree {depth}"),
        });
    }
    let mu = min_socle_shape(n);
    let lambda = partition_of_multidegree(d)?;
    let with_witnesses = theta_vectors(ring, d, &mu)?;
    let kostka = ssyt_enumerate(&mu, &lambda)?.len() as u64;

    let mut vectors = Vec::with_capacity(with_witnesses.len());
    let comp_dim = ring.dim(d);
    let mut span = Echelon::new(comp_dim);
    for (t_map, t, v) in with_witnesses {
        for i in 1..n {
            for j in 1..=n {
                assert!(
                    ring.multiply(&v, (i, j)).is_zero(),
                    "theta image of T={:?}, t={:?} in {d} is not socle (x_{i}_{j} acts nonzero)",
                    t_map.labels(),
                    t.labels(),
                );
            }
        }
        span.insert(v.coords().clone());
        vectors.push(v);
    }
    assert_eq!(
        span.rank() as u64,
        kostka * specht_dim(&mu),
        "socle span in {d} has unexpected dimension"
    );
    Ok(vectors)
}

/// All multidegrees admissible for the socle-quotient construction: total
/// degree `ceil(n/2)` with every entry at most `floor(n/2) - 2`, ascending
/// lexicographic.
pub fn admissible_socle_multidegrees(n: usize) -> Vec<Multidegree> {
    assert!(n >= 4, "socle selections are defined for rank at least 4");
    let total = n.div_ceil(2);
    let bound = (n / 2).saturating_sub(2);
    crate::combinatorics::compositions(total, n - 1, bound)
        .into_iter()
        .map(|c| Multidegree::new(c.into_iter().map(|v| v as i64).collect()))
        .collect()
}

/// JSON rendering of a tableau as its rows of labels.
pub fn tableau_to_json(t: &Tableau) -> serde_json::Value {
    serde_json::Value::Array(
        t.rows().iter().map(|r| serde_json::json!(r.to_vec())).collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::quotient_dim;
    use crate::gc_ring::valid_multidegrees;

    fn md(entries: &[i64]) -> Multidegree {
        Multidegree::new(entries.to_vec())
    }

    fn part(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn decompose_examples_rank_four() {
        let ring = GcRing::new(4);
        let dec = decompose(&ring, &md(&[1, 1, 0])).unwrap();
        assert_eq!(dec.lambda(), &part(&[2, 1, 1]));
        assert_eq!(
            dec.summands(),
            &[(part(&[2, 2]), 1, 2), (part(&[2, 1, 1]), 1, 3)]
        );
        assert_eq!(dec.total_dim(), 5);

        let sign = decompose(&ring, &md(&[1, 1, 1])).unwrap();
        assert_eq!(sign.summands(), &[(part(&[1, 1, 1, 1]), 1, 1)]);

        let two = decompose(&ring, &md(&[2, 0, 0])).unwrap();
        assert_eq!(two.summands(), &[(part(&[2, 2]), 1, 2)]);
    }

    #[test]
    fn decompose_zero_component_is_empty() {
        let ring = GcRing::new(4);
        let dec = decompose(&ring, &md(&[3, 0, 0])).unwrap();
        assert!(dec.summands().is_empty());
        assert_eq!(dec.total_dim(), 0);
    }

    #[test]
    fn decompose_matches_ring_for_all_components() {
        // decompose() hard-asserts internally; this drives it everywhere.
        for n in [4usize, 5] {
            let ring = GcRing::new(n);
            for d in crate::gc_ring::all_valid_multidegrees(n) {
                let dec = decompose(&ring, &d).unwrap();
                assert_eq!(dec.total_dim(), ring.dim(&d) as u64);
            }
        }
    }

    #[test]
    fn alpha_examples() {
        // All labels 1: the unit monomial.
        let s = Tableau::new(part(&[2, 2]), vec![1, 1, 1, 1]);
        assert_eq!(alpha(&s, &[4]).unwrap(), ColumnMonomial::one());

        // Labels (1,1,2,3) positionally: x_{1,3} * x_{2,4}.
        let s = Tableau::new(part(&[2, 2]), vec![1, 1, 2, 3]);
        let m = alpha(&s, &[2, 1, 1]).unwrap();
        assert_eq!(m, ColumnMonomial::from_pairs(vec![(3, 1), (4, 2)]));

        // Content mismatch errors.
        assert!(alpha(&s, &[3, 1]).is_err());
    }

    #[test]
    fn theta_on_generator_single_term() {
        // n=4, d=(2,0,0): lambda=(2,2), sigma=id, T the unique semistandard
        // tableau of shape (2,2) and content (2,2). The generator tabloid
        // maps to the single monomial x_{1,3} x_{1,4}.
        let ring = GcRing::new(4);
        let d = md(&[2, 0, 0]);
        let t = Tableau::new(part(&[2, 2]), vec![1, 1, 2, 2]);
        let map = ThetaMap::new(4, &d, &t).unwrap();
        let gen = Tabloid::new(part(&[2, 2]), vec![vec![1, 2], vec![3, 4]]);
        let v = map.apply(&ring, &[(gen, rat(1))]).unwrap();
        let expected = ring.class_of_monomial(&ColumnMonomial::from_pairs(vec![(3, 1), (4, 1)]));
        assert_eq!(v, expected);
        assert!(!v.is_zero());
    }

    #[test]
    fn theta_of_zero_is_zero() {
        let ring = GcRing::new(4);
        let d = md(&[2, 0, 0]);
        let t = Tableau::new(part(&[2, 2]), vec![1, 1, 2, 2]);
        let map = ThetaMap::new(4, &d, &t).unwrap();
        assert!(map.apply(&ring, &[]).unwrap().is_zero());
    }

    #[test]
    fn theta_rejects_bad_content() {
        let d = md(&[1, 1, 0]);
        // Content (2,2) but lambda(d) = (2,1,1).
        let t = Tableau::new(part(&[2, 2]), vec![1, 1, 2, 2]);
        assert!(ThetaMap::new(4, &d, &t).is_err());
        // Not semistandard.
        let t = Tableau::new(part(&[2, 2]), vec![2, 1, 1, 3]);
        assert!(ThetaMap::new(4, &d, &t).is_err());
    }

    #[test]
    fn polytabloid_examples() {
        // Single row: trivial column stabilizer.
        let t = Tableau::new(part(&[3]), vec![1, 2, 3]);
        assert_eq!(polytabloid(&t).unwrap().expansion().len(), 1);

        // Column shape (1,1): {t} - (swap){t}.
        let t = Tableau::new(part(&[1, 1]), vec![1, 2]);
        let e = polytabloid(&t).unwrap();
        assert_eq!(e.expansion().len(), 2);
        let signs: Vec<Rational> = e.expansion().iter().map(|(_, c)| c.clone()).collect();
        assert!(signs.contains(&rat(1)) && signs.contains(&rat(-1)));

        // Shape (2,2): |C_t| = 2 * 2 = 4 terms.
        let t = Tableau::new(part(&[2, 2]), vec![1, 2, 3, 4]);
        assert_eq!(polytabloid(&t).unwrap().expansion().len(), 4);

        // Non-standard input is rejected.
        let t = Tableau::new(part(&[2, 2]), vec![1, 1, 2, 2]);
        assert!(polytabloid(&t).is_err());
    }

    #[test]
    fn polytabloid_count_matches_specht_dim() {
        for mu in [part(&[2, 2]), part(&[3, 1]), part(&[2, 1, 1])] {
            assert_eq!(standard_tableaux(&mu).len() as u64, specht_dim(&mu));
        }
    }

    #[test]
    fn socle_basis_rank_four() {
        let ring = GcRing::new(4);
        let d = md(&[1, 1, 0]);
        let vectors = socle_basis_min_degree(&ring, &d).unwrap();
        assert_eq!(vectors.len(), 2);
        // They span the full socle: the component's socle has dimension 2.
        let socle = ring.socle_component(&d);
        let mut span = Echelon::new(ring.dim(&d));
        for v in &vectors {
            span.insert(v.coords().clone());
        }
        assert_eq!(span.rank(), socle.dim());
    }

    #[test]
    fn socle_basis_rank_five_has_ten_vectors() {
        let ring = GcRing::new(5);
        let d = md(&[1, 1, 1, 0]);
        // K_{(2,2,1),(2,1,1,1)} = 2 and dim V_{(2,2,1)} = 5.
        let vectors = socle_basis_min_degree(&ring, &d).unwrap();
        assert_eq!(vectors.len(), 10);
    }

    #[test]
    fn socle_basis_rank_six_example() {
        let ring = GcRing::new(6);
        let d = md(&[1, 1, 1, 0, 0]);
        // K = 1 and dim V_{(3,3)} = 5 (third Catalan number).
        let vectors = socle_basis_min_degree(&ring, &d).unwrap();
        assert_eq!(vectors.len(), 5);
    }

    #[test]
    fn socle_basis_wrong_degree_is_rejected() {
        let ring = GcRing::new(4);
        assert!(socle_basis_min_degree(&ring, &md(&[1, 0, 0])).is_err());
    }

    #[test]
    fn even_rank_theta_socle_is_complete() {
        // For even n the theta images exhaust the minimal-degree socle.
        let ring = GcRing::new(4);
        for d in valid_multidegrees(4, 2) {
            let socle = ring.socle_component(&d);
            let mut span = Echelon::new(ring.dim(&d));
            for v in socle_basis_min_degree(&ring, &d).unwrap() {
                span.insert(v.coords().clone());
            }
            assert_eq!(span.rank(), socle.dim(), "gap in component {d}");
        }
    }

    #[test]
    fn odd_rank_theta_socle_is_contained() {
        // For odd n the theta images are socle (containment); whether they
        // exhaust it is reported, not asserted.
        let ring = GcRing::new(5);
        for d in valid_multidegrees(5, 3) {
            let socle = ring.socle_component(&d);
            let mut span = Echelon::new(ring.dim(&d));
            for v in socle_basis_min_degree(&ring, &d).unwrap() {
                span.insert(v.coords().clone());
            }
            let theta_span = span.into_subspace();
            // Containment: quotient_dim errors if theta_span is not inside.
            let gap = quotient_dim(&socle, &theta_span).unwrap();
            assert_eq!(gap, socle.dim() - theta_span.dim());
        }
    }

    #[test]
    fn theta_is_injective_on_specht_summands() {
        // Per semistandard T with mu_1 = lambda_1, the polytabloid images
        // span a space of dimension exactly dim V_mu.
        for n in [4usize, 5] {
            let ring = GcRing::new(n);
            for d in crate::gc_ring::all_valid_multidegrees(n) {
                if ring.dim(&d) == 0 {
                    continue;
                }
                let lambda = partition_of_multidegree(&d).unwrap();
                for (mu, _, dim_v) in structure_summands(&lambda) {
                    for t_map in ssyt_enumerate(&mu, &lambda).unwrap() {
                        let map = ThetaMap::new(n, &d, &t_map).unwrap();
                        let mut span = Echelon::new(ring.dim(&d));
                        for t in standard_tableaux(&mu) {
                            let e = polytabloid(&t).unwrap();
                            span.insert(map.apply(&ring, e.expansion()).unwrap().coords().clone());
                        }
                        assert_eq!(
                            span.rank() as u64,
                            dim_v,
                            "theta not injective: n={n} d={d} mu={mu}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn admissible_multidegrees_examples() {
        assert!(admissible_socle_multidegrees(4).is_empty());
        assert!(admissible_socle_multidegrees(5).is_empty());
        let six = admissible_socle_multidegrees(6);
        assert_eq!(six.len(), 10);
        assert!(six.iter().all(|d| d.total() == 3 && d.entries().iter().all(|&e| e <= 1)));
        let eight = admissible_socle_multidegrees(8);
        assert!(eight.iter().all(|d| d.total() == 4 && d.entries().iter().all(|&e| e <= 2)));
        // Compositions of 4 into 7 parts, each at most 2.
        let expected = crate::combinatorics::compositions(4, 7, 2).len();
        assert_eq!(eight.len(), expected);
    }

    #[test]
    fn min_socle_shapes() {
        assert_eq!(min_socle_shape(4), part(&[2, 2]));
        assert_eq!(min_socle_shape(5), part(&[2, 2, 1]));
        assert_eq!(min_socle_shape(6), part(&[3, 3]));
        assert_eq!(min_socle_shape(7), part(&[3, 3, 1]));
    }

    #[test]
    fn decomposition_json_shape() {
        let ring = GcRing::new(4);
        let dec = decompose(&ring, &md(&[1, 1, 0])).unwrap();
        let json = dec.to_json();
        assert_eq!(json["total"], 5);
        assert_eq!(json["lambda"], serde_json::json!([2, 1, 1]));
        assert_eq!(json["summands"].as_array().unwrap().len(), 2);
    }
}
