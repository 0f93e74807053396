//! The general Galois-closure presenter: from any finite-rank commutative
//! algebra `A` over the rationals, given by structure constants on a basis
//! `a_1 = 1, a_2, ..., a_n`, emit the ideal presenting `G(A)` inside
//! `A`-tensor coordinates and export it deterministically.
//!
//! The ambient object is `A^{tensor n}`, coordinatized by `x_{i,j}` = the
//! non-unit basis element `a_{i+1}` placed in tensor slot `j`. Two kinds of
//! relations arise:
//!
//! - *slot relations*: products inside one slot reduce through the
//!   multiplication table, `x_{i,j} x_{k,j} = sum_l c x_{l,j} + c_1`. These
//!   present `A^{tensor n}` itself and stay internal to this module (used
//!   for dimension checks); they are not part of the exported ideal.
//! - *closure generators*: for each non-unit basis element `a` and each
//!   `1 <= j <= n`, the difference `e_j(a^{(1)}, ..., a^{(n)}) - s_j(a)`,
//!   where `e_j` is the elementary symmetric polynomial in the slot copies
//!   (slot-multilinear, hence a genuine polynomial in the `x_{i,j}`) and
//!   `s_j(a)` is the `j`-th signed coefficient of the characteristic
//!   polynomial of multiplication by `a`. These are the exported ideal.
//!
//! For the square-zero algebras `A_n` every `s_j` vanishes and everything
//! is multigraded, so the quotient by slot relations plus closure
//! generators can be compared component by component against the dedicated
//! `G(A_n)` engine; the module does exactly that (up to total degree 3) and
//! also verifies the classical elimination that shrinks the generating set
//! to the row sums plus the same-column quadrics.

use itertools::Itertools;

use crate::combinatorics::{compositions, Multidegree};
use crate::exact_linalg::{rat, rat_parse, rat_string, Rational};
use crate::gc_ring::{FreeMonomial, FreePoly, Var};
use crate::tangents::{FreePresentedRing, IdealPresentation, TangentTarget};
use crate::{Error, Result};

use num_traits::{One, Zero};

// ---------------------------------------------------------------------------
// Algebra presentations
// ---------------------------------------------------------------------------

/// A commutative rank-`n` algebra over the rationals with distinguished
/// basis `a_1 = 1, a_2, ..., a_n` and multiplication table
/// `a_i a_j = sum_k c[i][j][k] a_k` (indices 0-based in storage).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraPresentation {
    labels: Vec<String>,
    constants: Vec<Vec<Vec<Rational>>>,
}

impl AlgebraPresentation {
    /// Validates shape, the unit law for `a_1`, commutativity, and
    /// associativity on every basis triple.
    pub fn new(labels: Vec<String>, constants: Vec<Vec<Vec<Rational>>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::BadAlgebra { detail: "the basis is empty".to_string() });
        }
        let shaped = constants.len() == n
            && constants.iter().all(|m| m.len() == n && m.iter().all(|r| r.len() == n));
        if !shaped {
            return Err(Error::BadAlgebra {
                detail: format!("structure constants are not {n}x{n}x{n}"),
            });
        }
        let alg = AlgebraPresentation { labels, constants };
        for j in 0..n {
            for k in 0..n {
                let expected = if j == k { Rational::one() } else { Rational::zero() };
                if alg.constants[0][j][k] != expected {
                    return Err(Error::BadAlgebra {
                        detail: format!(
                            "a_1 is not the unit: a_1 * a_{} has wrong a_{} coefficient",
                            j + 1,
                            k + 1
                        ),
                    });
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if alg.constants[i][j] != alg.constants[j][i] {
                    return Err(Error::BadAlgebra {
                        detail: format!("a_{} a_{} != a_{} a_{}", i + 1, j + 1, j + 1, i + 1),
                    });
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    for k in 0..n {
                        // (a_i a_j) a_l vs a_i (a_j a_l), coefficient of a_k.
                        let lhs: Rational = (0..n)
                            .map(|m| &alg.constants[i][j][m] * &alg.constants[m][l][k])
                            .sum();
                        let rhs: Rational = (0..n)
                            .map(|m| &alg.constants[j][l][m] * &alg.constants[i][m][k])
                            .sum();
                        if lhs != rhs {
                            return Err(Error::BadAlgebra {
                                detail: format!(
                                    "associativity fails on (a_{}, a_{}, a_{})",
                                    i + 1,
                                    j + 1,
                                    l + 1
                                ),
                            });
                        }
                    }
                }
            }
        }
        Ok(alg)
    }

    /// `A_n = k[y_1, ..., y_{n-1}] / (y_1, ..., y_{n-1})^2`: every product
    /// of non-unit basis elements vanishes.
    pub fn square_zero(n: usize) -> Self {
        assert!(n >= 1, "rank must be positive");
        let mut labels = vec!["1".to_string()];
        for i in 1..n {
            labels.push(format!("y_{i}"));
        }
        let mut constants =
            vec![vec![vec![Rational::zero(); n]; n]; n];
        for j in 0..n {
            constants[0][j][j] = Rational::one();
            constants[j][0][j] = Rational::one();
        }
        AlgebraPresentation { labels, constants }
    }

    /// `k x k` in the basis `1, e` with `e^2 = 1` — the smallest etale
    /// (non-graded) example.
    pub fn split_pair() -> Self {
        let mut constants = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        constants[0][0][0] = Rational::one();
        constants[0][1][1] = Rational::one();
        constants[1][0][1] = Rational::one();
        constants[1][1][0] = Rational::one();
        AlgebraPresentation { labels: vec!["1".to_string(), "e".to_string()], constants }
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn constants(&self) -> &[Vec<Vec<Rational>>] {
        &self.constants
    }

    /// The matrix of multiplication by `a` (coefficients in the basis):
    /// column `j` holds `a * a_j`.
    pub fn multiplication_matrix(&self, a: &[Rational]) -> Result<Vec<Vec<Rational>>> {
        let n = self.rank();
        if a.len() != n {
            return Err(Error::SizeMismatch {
                expected: n,
                found: a.len(),
                context: "coefficient vector vs algebra rank",
            });
        }
        let mut m = vec![vec![Rational::zero(); n]; n];
        for j in 0..n {
            for (i, ai) in a.iter().enumerate() {
                if ai.is_zero() {
                    continue;
                }
                for k in 0..n {
                    let c = &self.constants[i][j][k];
                    if !c.is_zero() {
                        m[k][j] += ai * c;
                    }
                }
            }
        }
        Ok(m)
    }

    /// Reads `{"labels": [...], "constants": [[[...]]]}` with rational
    /// entries as integers or `"p/q"` strings.
    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let bad = |detail: String| Error::BadAlgebra { detail };
        let labels: Vec<String> = value
            .get("labels")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("missing labels array".to_string()))?
            .iter()
            .map(|l| l.as_str().map(str::to_string))
            .collect::<Option<_>>()
            .ok_or_else(|| bad("labels must be strings".to_string()))?;
        let parse_entry = |v: &serde_json::Value| -> Result<Rational> {
            if let Some(i) = v.as_i64() {
                return Ok(rat(i));
            }
            if let Some(s) = v.as_str() {
                if let Some(r) = rat_parse(s) {
                    return Ok(r);
                }
            }
            Err(bad(format!("bad rational entry {v}")))
        };
        let constants = value
            .get("constants")
            .and_then(|v| v.as_array())
            .ok_or_else(|| bad("missing constants array".to_string()))?
            .iter()
            .map(|plane| {
                plane
                    .as_array()
                    .ok_or_else(|| bad("constants must be a 3d array".to_string()))?
                    .iter()
                    .map(|row| {
                        row.as_array()
                            .ok_or_else(|| bad("constants must be a 3d array".to_string()))?
                            .iter()
                            .map(parse_entry)
                            .collect::<Result<Vec<_>>>()
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        AlgebraPresentation::new(labels, constants)
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "labels": self.labels,
            "constants": self
                .constants
                .iter()
                .map(|plane| {
                    plane
                        .iter()
                        .map(|row| row.iter().map(rat_string).collect::<Vec<_>>())
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    }
}

// ---------------------------------------------------------------------------
// Characteristic polynomials
// ---------------------------------------------------------------------------

/// Signed coefficients `s_0 = 1, s_1, ..., s_n` of the characteristic
/// polynomial of multiplication by `a`:
/// `det(tI - m_a) = sum_j (-1)^j s_j t^{n-j}`.
///
/// Computed by the Faddeev–LeVerrier recurrence, which stays in exact
/// rational arithmetic (the divisions are by `1..=n`).
pub fn char_poly(alg: &AlgebraPresentation, a: &[Rational]) -> Result<Vec<Rational>> {
    let m = alg.multiplication_matrix(a)?;
    let n = alg.rank();
    let mut s = Vec::with_capacity(n + 1);
    s.push(Rational::one());
    // M_1 = m; c_k = -tr(M_k)/k; M_{k+1} = m (M_k + c_k I); s_k = (-1)^k c_k.
    let mut mk = m.clone();
    for k in 1..=n {
        let trace: Rational = (0..n).map(|i| mk[i][i].clone()).sum();
        let ck = -trace / rat(k as i64);
        let sk = if k % 2 == 0 { ck.clone() } else { -ck.clone() };
        s.push(sk);
        if k == n {
            break;
        }
        let mut shifted = mk.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] += &ck;
        }
        let mut next = vec![vec![Rational::zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = Rational::zero();
                for (l, srow) in shifted.iter().enumerate() {
                    if !m[i][l].is_zero() && !srow[j].is_zero() {
                        acc += &m[i][l] * &srow[j];
                    }
                }
                next[i][j] = acc;
            }
        }
        mk = next;
    }
    Ok(s)
}

// ---------------------------------------------------------------------------
// Symmetric polynomials in slot copies
// ---------------------------------------------------------------------------

/// `e_j` of a list of distinct variables: the sum over all `j`-element
/// subsets of their products.
pub fn elementary_symmetric(vars: &[Var], j: usize) -> FreePoly {
    if j > vars.len() {
        return FreePoly::zero();
    }
    let mut out = FreePoly::zero();
    for subset in vars.iter().combinations(j) {
        out.add_term(FreeMonomial::from_vars(subset.into_iter().copied().collect()), rat(1));
    }
    out
}

/// `p_m` of a list of variables: the sum of their `m`-th powers.
pub fn power_sum(vars: &[Var], m: usize) -> FreePoly {
    let mut out = FreePoly::zero();
    for &v in vars {
        out.add_term(FreeMonomial::from_vars(vec![v; m]), rat(1));
    }
    out
}

// ---------------------------------------------------------------------------
// The closure ideal
// ---------------------------------------------------------------------------

/// The exported presentation data: for each non-unit basis element, the `n`
/// differences `e_j(slot copies) - s_j`.
#[derive(Clone, Debug)]
pub struct GcIdealOutput {
    n: usize,
    labels: Vec<String>,
    generators: Vec<(String, FreePoly)>,
}

impl GcIdealOutput {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[(String, FreePoly)] {
        &self.generators
    }

    /// `x_i_j` names, row-major — the ambient polynomial variables.
    pub fn variables(&self) -> Vec<String> {
        let mut out = Vec::new();
        for i in 1..self.n {
            for j in 1..=self.n {
                out.push(format!("x_{i}_{j}"));
            }
        }
        out
    }
}

/// Builds the closure ideal of `G(A)`: for each non-unit basis element
/// `a_{i+1}` (slot copies `x_{i,1}, ..., x_{i,n}`) and each `1 <= j <= n`,
/// the generator `e_j(x_{i,1}, ..., x_{i,n}) - s_j(a_{i+1})`. Since `e_j`
/// is multilinear across distinct slots, no slot reduction is needed and
/// the generator is an honest polynomial of degree `j`.
pub fn gc_ideal(alg: &AlgebraPresentation) -> Result<GcIdealOutput> {
    let n = alg.rank();
    let mut generators = Vec::new();
    for i in 1..n {
        let mut basis_vector = vec![Rational::zero(); n];
        basis_vector[i] = Rational::one();
        let s = char_poly(alg, &basis_vector)?;
        let vars: Vec<Var> = (1..=n).map(|j| (i, j)).collect();
        for j in 1..=n {
            let mut poly = elementary_symmetric(&vars, j);
            poly.add_term(FreeMonomial::one(), -s[j].clone());
            assert!(!poly.is_zero(), "a closure generator cannot vanish identically");
            generators.push((format!("e{j}({})", alg.labels()[i]), poly));
        }
    }
    Ok(GcIdealOutput { n, labels: alg.labels().to_vec(), generators })
}

/// The relations presenting `A^(tensor n)` itself on the same variables:
/// for every slot `j` and every pair of non-unit basis elements,
/// `x_{i,j} x_{k,j} - (their product rewritten in the slot)`. Internal to
/// dimension checks; not part of the exported ideal.
pub fn slot_relations(alg: &AlgebraPresentation) -> Vec<(String, FreePoly)> {
    let n = alg.rank();
    let mut out = Vec::new();
    for j in 1..=n {
        for i in 1..n {
            for k in i..n {
                let mut poly = FreePoly::monomial(
                    FreeMonomial::var((i, j)).mul(&FreeMonomial::var((k, j))),
                );
                let table = &alg.constants()[i][k];
                poly.add_term(FreeMonomial::one(), -table[0].clone());
                for (l, c) in table.iter().enumerate().skip(1) {
                    poly.add_term(FreeMonomial::var((l, j)), -c.clone());
                }
                out.push((
                    format!("slot{j}: {}*{}", alg.labels()[i], alg.labels()[k]),
                    poly,
                ));
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Export
// ---------------------------------------------------------------------------

/// Deterministic plain-text export: a short header recording the rank and
/// basis labels, then one rendered generator per line.
pub fn export_ideal(out: &GcIdealOutput) -> String {
    let mut text = String::new();
    text.push_str(&format!("# rank n = {}\n", out.n));
    text.push_str(&format!("# basis: {}\n", out.labels.join(", ")));
    text.push_str(&format!(
        "# variables: x_i_j for 1 <= i <= {}, 1 <= j <= {}\n",
        out.n - 1,
        out.n
    ));
    for (_, poly) in &out.generators {
        text.push_str(&poly.render());
        text.push('\n');
    }
    text
}

/// The same data as JSON: `{n, variables, generators}`.
pub fn export_ideal_json(out: &GcIdealOutput) -> serde_json::Value {
    serde_json::json!({
        "n": out.n,
        "variables": out.variables(),
        "generators": out
            .generators
            .iter()
            .map(|(label, poly)| serde_json::json!({"label": label, "polynomial": poly.render()}))
            .collect::<Vec<_>>(),
    })
}

// ---------------------------------------------------------------------------
// Graded dimension checks
// ---------------------------------------------------------------------------

/// The quotient by slot relations plus closure generators, componentwise.
/// Only multigraded inputs qualify (every relation homogeneous in the
/// row grading — true exactly when all the `s_j` vanish and the slot
/// products have no constant or linear leak, as for square-zero algebras);
/// anything else is export-only.
pub fn graded_dimensions(alg: &AlgebraPresentation, max_total: usize) -> Result<Vec<u64>> {
    let n = alg.rank();
    if n < 2 {
        return Err(Error::Unsupported {
            detail: "graded dimensions need at least one non-unit basis element".to_string(),
        });
    }
    let closure = gc_ideal(alg)?;
    let mut gens: Vec<(String, FreePoly)> = slot_relations(alg);
    gens.extend(closure.generators.iter().cloned());
    for (label, poly) in &gens {
        if poly.homogeneous_multidegree(n).is_none() {
            return Err(Error::Unsupported {
                detail: format!("relation {label} is not multigraded; export-only input"),
            });
        }
    }
    let pres = IdealPresentation::new(n - 1, n, "tensor-power quotient", gens);
    let ring = FreePresentedRing::from_presentation(&pres);
    let mut dims = Vec::with_capacity(max_total + 1);
    for t in 0..=max_total {
        let total: u64 = compositions(t, n - 1, t)
            .into_iter()
            .map(|c| {
                let d = Multidegree::new(c.iter().map(|&e| e as i64).collect());
                ring.dim(&d) as u64
            })
            .sum();
        dims.push(total);
    }
    Ok(dims)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::Echelon;
    use crate::gc_ring::{GcPresentation, GcRing};
    use crate::tangents::free_monomials;
    use std::sync::Arc;

    fn rats(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn unit_multiplication_has_binomial_coefficients() {
        let alg = AlgebraPresentation::square_zero(4);
        let mut a = vec![Rational::zero(); 4];
        a[0] = Rational::one();
        let s = char_poly(&alg, &a).unwrap();
        assert_eq!(s, rats(&[1, 4, 6, 4, 1]));
    }

    #[test]
    fn nilpotent_elements_have_zero_invariants() {
        let dual = AlgebraPresentation::square_zero(2);
        let m = dual.multiplication_matrix(&rats(&[0, 1])).unwrap();
        assert_eq!(m, vec![rats(&[0, 0]), rats(&[1, 0])]);
        assert_eq!(char_poly(&dual, &rats(&[0, 1])).unwrap(), rats(&[1, 0, 0]));

        let four = AlgebraPresentation::square_zero(4);
        let s = char_poly(&four, &rats(&[0, 1, 0, 0])).unwrap();
        assert_eq!(s, rats(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn split_pair_characteristic_polynomial() {
        let alg = AlgebraPresentation::split_pair();
        // e has matrix [[0,1],[1,0]]: p(t) = t^2 - 1, so s = (1, 0, -1).
        assert_eq!(char_poly(&alg, &rats(&[0, 1])).unwrap(), rats(&[1, 0, -1]));
        // 2 + 3e: p(t) = t^2 - 4t - 5.
        assert_eq!(char_poly(&alg, &rats(&[2, 3])).unwrap(), rats(&[1, 4, -5]));
    }

    #[test]
    fn bad_algebras_are_rejected() {
        // a_2 idempotent with a_2 a_3 = 1 breaks associativity.
        let mut c = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for j in 0..3 {
            c[0][j][j] = Rational::one();
            c[j][0][j] = Rational::one();
        }
        c[1][1][1] = Rational::one();
        c[1][2][0] = Rational::one();
        c[2][1][0] = Rational::one();
        let labels = vec!["1".into(), "a".into(), "b".into()];
        assert!(matches!(
            AlgebraPresentation::new(labels.clone(), c.clone()),
            Err(Error::BadAlgebra { detail }) if detail.contains("associativity")
        ));

        // Commutativity violation.
        let mut c2 = vec![vec![vec![Rational::zero(); 3]; 3]; 3];
        for j in 0..3 {
            c2[0][j][j] = Rational::one();
            c2[j][0][j] = Rational::one();
        }
        c2[1][2][0] = Rational::one();
        assert!(matches!(
            AlgebraPresentation::new(labels.clone(), c2),
            Err(Error::BadAlgebra { detail }) if detail.contains("!=")
        ));

        // Broken unit.
        let mut c3 = vec![vec![vec![Rational::zero(); 2]; 2]; 2];
        c3[0][0][0] = Rational::one();
        assert!(matches!(
            AlgebraPresentation::new(vec!["1".into(), "x".into()], c3),
            Err(Error::BadAlgebra { detail }) if detail.contains("unit")
        ));
    }

    #[test]
    fn rank_two_export_matches_the_classical_two_lines() {
        let alg = AlgebraPresentation::square_zero(2);
        let out = gc_ideal(&alg).unwrap();
        let text = export_ideal(&out);
        let body: Vec<&str> =
            text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, vec!["x_1_1 + x_1_2", "x_1_1*x_1_2"]);
        assert!(text.lines().next().unwrap().contains("n = 2"));

        let json = export_ideal_json(&out);
        assert_eq!(json["n"], 2);
        assert_eq!(json["variables"], serde_json::json!(["x_1_1", "x_1_2"]));
        assert_eq!(json["generators"].as_array().unwrap().len(), 2);
    }

    #[test]
    fn rank_one_algebra_exports_nothing() {
        let alg = AlgebraPresentation::square_zero(1);
        let out = gc_ideal(&alg).unwrap();
        assert!(out.generators().is_empty());
        let text = export_ideal(&out);
        assert!(text.lines().all(|l| l.starts_with('#')));
    }

    #[test]
    fn generator_inventory_counts_and_degrees() {
        let alg = AlgebraPresentation::square_zero(4);
        let out = gc_ideal(&alg).unwrap();
        // n generators for each of the n - 1 non-unit basis elements.
        assert_eq!(out.generators().len(), 12);
        for (k, (label, poly)) in out.generators().iter().enumerate() {
            let j = k % 4 + 1;
            assert!(label.starts_with(&format!("e{j}(")));
            let degree = poly.terms().map(|(m, _)| m.degree()).max().unwrap();
            assert!(degree <= j, "generator {label} exceeds degree {j}");
        }
        // Square-zero slot relations are exactly the same-column quadrics.
        let slots = slot_relations(&alg);
        assert_eq!(slots.len(), 4 * 6);
        for (_, poly) in &slots {
            assert_eq!(poly.num_terms(), 1);
        }
    }

    #[test]
    fn export_is_byte_stable() {
        let a = export_ideal(&gc_ideal(&AlgebraPresentation::square_zero(4)).unwrap());
        let b = export_ideal(&gc_ideal(&AlgebraPresentation::square_zero(4)).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().filter(|l| !l.starts_with('#')).count(), 12);
    }

    #[test]
    fn small_square_zero_closures_have_factorial_dimension() {
        assert_eq!(graded_dimensions(&AlgebraPresentation::square_zero(2), 2).unwrap(), vec![
            1, 1, 0
        ]);
        assert_eq!(graded_dimensions(&AlgebraPresentation::square_zero(3), 3).unwrap(), vec![
            1, 4, 1, 0
        ]);
        // Totals: 2 = 2!, 6 = 3!.
    }

    #[test]
    fn raw_quotient_agrees_with_the_ring_engine_in_low_degrees() {
        let alg = AlgebraPresentation::square_zero(4);
        let dims = graded_dimensions(&alg, 3).unwrap();
        let ring = Arc::new(GcRing::new(4));
        let hilbert = ring.hilbert_function();
        assert_eq!(dims, hilbert[0..=3].to_vec());
    }

    #[test]
    fn non_graded_inputs_are_export_only() {
        let alg = AlgebraPresentation::split_pair();
        assert!(gc_ideal(&alg).is_ok());
        assert!(matches!(
            graded_dimensions(&alg, 2),
            Err(Error::Unsupported { detail }) if detail.contains("export-only")
        ));
    }

    #[test]
    fn closure_and_simplified_generators_contain_each_other_in_low_degrees() {
        // Degreewise span membership on the 3x4 grid, up to total degree 2:
        // the raw system (slot relations + closure generators) and the
        // simplified system (row sums + same-column quadrics) generate the
        // same ideal slices.
        let n = 4;
        let alg = AlgebraPresentation::square_zero(n);
        let mut raw: Vec<FreePoly> =
            slot_relations(&alg).into_iter().map(|(_, p)| p).collect();
        raw.extend(gc_ideal(&alg).unwrap().generators().iter().map(|(_, p)| p.clone()));
        let simplified: Vec<FreePoly> =
            GcPresentation::new(n).generators().iter().map(|(_, _, p)| p.clone()).collect();

        let spans_contain = |gens: &[FreePoly], candidates: &[FreePoly]| {
            for cand in candidates {
                let Some(d) = cand.homogeneous_multidegree(n) else {
                    panic!("inhomogeneous candidate");
                };
                if d.total() > 2 {
                    continue;
                }
                let component = free_monomials(n - 1, n, &d);
                let index: std::collections::HashMap<&FreeMonomial, usize> =
                    component.iter().enumerate().map(|(p, m)| (m, p)).collect();
                let mut ech = Echelon::new(component.len());
                for g in gens {
                    let Some(gd) = g.homogeneous_multidegree(n) else { continue };
                    let cofactor = d.sub(&gd);
                    if !cofactor.is_nonneg() {
                        continue;
                    }
                    for m in free_monomials(n - 1, n, &cofactor) {
                        let row = crate::exact_linalg::SparseVec::from_terms(
                            g.terms().map(|(gm, c)| (index[&gm.mul(&m)], c.clone())),
                        );
                        ech.insert(row);
                    }
                }
                let cand_row = crate::exact_linalg::SparseVec::from_terms(
                    cand.terms().map(|(m, c)| (index[m], c.clone())),
                );
                assert!(ech.contains(&cand_row), "candidate {} escapes the span", cand.render());
            }
        };
        spans_contain(&raw, &simplified);
        spans_contain(&simplified, &raw);
    }

    #[test]
    fn newton_girard_rewrites_higher_elementaries() {
        // j e_j = sum_{m=1}^{j} (-1)^{m-1} e_{j-m} p_m, and each p_m with
        // m >= 2 is a sum of monomial multiples of squares: together these
        // place every e_j, j >= 2, in the ideal of the row sum and the
        // same-column quadrics.
        let vars: Vec<Var> = (1..=5).map(|j| (1, j)).collect();
        for j in 1..=5usize {
            let mut rhs = FreePoly::zero();
            for m in 1..=j {
                let mut term = elementary_symmetric(&vars, j - m).mul(&power_sum(&vars, m));
                if m % 2 == 0 {
                    term.scale(&rat(-1));
                }
                rhs.add(&term);
            }
            let mut lhs = elementary_symmetric(&vars, j);
            lhs.scale(&rat(j as i64));
            assert_eq!(lhs, rhs, "identity fails at j = {j}");
        }
        for m in 2..=5usize {
            let mut rebuilt = FreePoly::zero();
            for &v in &vars {
                let square = FreeMonomial::from_vars(vec![v; 2]);
                let cofactor = FreeMonomial::from_vars(vec![v; m - 2]);
                rebuilt.add_term(cofactor.mul(&square), rat(1));
            }
            assert_eq!(rebuilt, power_sum(&vars, m), "power sum fails at m = {m}");
        }
    }

    #[test]
    fn column_permutations_preserve_the_generator_sets() {
        let permute_poly = |p: &FreePoly, perm: &[usize]| {
            let mut out = FreePoly::zero();
            for (m, c) in p.terms() {
                out.add_term(m.permute_columns(perm), c.clone());
            }
            out
        };
        for n in 2..=4usize {
            let alg = AlgebraPresentation::square_zero(n);
            let mut gens: Vec<FreePoly> =
                gc_ideal(&alg).unwrap().generators().iter().map(|(_, p)| p.clone()).collect();
            gens.extend(slot_relations(&alg).into_iter().map(|(_, p)| p));
            let fingerprint = |list: &[FreePoly]| {
                let mut rendered: Vec<String> = list.iter().map(FreePoly::render).collect();
                rendered.sort();
                rendered
            };
            let base = fingerprint(&gens);
            for perm in (1..=n).permutations(n) {
                let permuted: Vec<FreePoly> =
                    gens.iter().map(|p| permute_poly(p, &perm)).collect();
                assert_eq!(fingerprint(&permuted), base, "permutation {perm:?} moved the ideal");
            }
        }
    }

    #[test]
    fn json_round_trip_preserves_the_presentation() {
        let alg = AlgebraPresentation::split_pair();
        let round = AlgebraPresentation::from_json(&alg.to_json()).unwrap();
        assert_eq!(alg, round);

        let bad = serde_json::json!({"labels": ["1"], "constants": "nope"});
        assert!(matches!(
            AlgebraPresentation::from_json(&bad),
            Err(Error::BadAlgebra { .. })
        ));
    }
}
