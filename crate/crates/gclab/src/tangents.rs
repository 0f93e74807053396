//! Negative-degree tangent spaces of presented multigraded rings.
//!
//! Everything here works with a quotient `B = R/I` of the free polynomial
//! ring `R` on a `rows x cols` variable grid, graded by `Z^rows` with
//! `deg x_{i,j} = eps_i`. The tangent space piece `Hom_R(I, B)_e` in a shift
//! `e` of negative total degree is cut out, degree by degree, by syzygy
//! constraints: an assignment `g_t -> phi_t in B_{deg(g_t)+e}` extends to a
//! well-defined module map exactly when every relation
//! `sum_t r_t g_t = 0` (with `r_t` homogeneous) forces
//! `sum_t r_t phi_t = 0` in `B`. Since `B` vanishes in high total degrees,
//! only finitely many constraint multidegrees matter, so no Groebner
//! machinery is needed — each multidegree contributes one exact linear
//! system.
//!
//! Rather than materializing each syzygy kernel, [`hom_component`] streams
//! the rows `(t, m) -> [coefficients of m*g_t | products m * (basis of
//! B_{deg(g_t)+e})]` through one echelon pass per constraint multidegree.
//! Eliminating the free-ring coordinate block first is a row operation, so
//! every row that survives with a zero free-ring part is precisely a syzygy
//! functional, and all of them arise this way: after elimination the pivot
//! rows have independent free-ring parts, so any left-kernel combination of
//! the original rows is a combination of the surviving zero-part rows. A
//! literal kernel route ([`hom_component_literal`]) is kept as an
//! independent cross-check.
//!
//! The coordinate derivations `d/dx_{i,j}` always restrict to module maps
//! `I -> B` of shift `-eps_i`; [`derivation_span`] computes their span and
//! [`tnt_check`] compares it with the full solution space shift by shift.
//! "Trivial negative tangents" means the two agree everywhere, i.e.
//! `T^1(B)_e = 0` for all `e` of negative total degree.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use dashmap::DashMap;
use rayon::prelude::*;

use crate::combinatorics::{big_r, compositions, hilbert_formula, Multidegree};
use crate::exact_linalg::{
    is_in_span, kernel_basis, rat, Echelon, Rational, SparseMatrix, SparseVec, Subspace,
};
use crate::gc_ring::{
    valid_multidegrees, ColumnMonomial, FreeMonomial, FreePoly, GcPresentation, GcRing, IdealGen,
    RingVector, Var,
};
use crate::rep_theory::{admissible_socle_multidegrees, socle_basis_min_degree};
use crate::{Error, Result};

// ---------------------------------------------------------------------------
// Free-ring components
// ---------------------------------------------------------------------------

/// Nondecreasing multisets of size `k` drawn from `1..=cols`.
fn column_multisets(cols: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(cols: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for j in start..=cols {
            cur.push(j);
            rec(cols, k, j, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(cols, k, 1, &mut Vec::new(), &mut out);
    out
}

/// Every monomial of the free ring on a `rows x cols` grid in multidegree
/// `d`: row `i` contributes an arbitrary degree-`d_i` column multiset,
/// independently across rows, so the count is
/// `prod_i C(d_i + cols - 1, cols - 1)`. Sorted in the canonical monomial
/// order; empty when some entry of `d` is negative.
pub fn free_monomials(rows: usize, cols: usize, d: &Multidegree) -> Vec<FreeMonomial> {
    assert_eq!(d.entries().len(), rows, "multidegree arity differs from the grid");
    if !d.is_nonneg() {
        return Vec::new();
    }
    let mut partial: Vec<Vec<Var>> = vec![Vec::new()];
    for i in 1..=rows {
        let di = d.get(i) as usize;
        if di == 0 {
            continue;
        }
        let multisets = column_multisets(cols, di);
        let mut next = Vec::with_capacity(partial.len() * multisets.len());
        for prefix in &partial {
            for ms in &multisets {
                let mut vars = prefix.clone();
                vars.extend(ms.iter().map(|&j| (i, j)));
                next.push(vars);
            }
        }
        partial = next;
    }
    let mut monomials: Vec<FreeMonomial> =
        partial.into_iter().map(FreeMonomial::from_vars).collect();
    monomials.sort();
    monomials
}

/// One multidegree slice of a free polynomial ring: the full monomial list
/// plus its position index.
pub struct FreeRingComponent {
    multidegree: Multidegree,
    monomials: Vec<FreeMonomial>,
    index: HashMap<FreeMonomial, usize>,
}

impl FreeRingComponent {
    pub fn build(rows: usize, cols: usize, d: &Multidegree) -> Self {
        let monomials = free_monomials(rows, cols, d);
        let index = monomials.iter().enumerate().map(|(p, m)| (m.clone(), p)).collect();
        FreeRingComponent { multidegree: d.clone(), monomials, index }
    }

    pub fn multidegree(&self) -> &Multidegree {
        &self.multidegree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[FreeMonomial] {
        &self.monomials
    }

    pub fn position(&self, m: &FreeMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Coefficient vector of a polynomial all of whose terms lie in this
    /// component.
    pub fn coords_of(&self, p: &FreePoly) -> SparseVec {
        SparseVec::from_terms(p.terms().map(|(m, c)| {
            let pos = self
                .index
                .get(m)
                .unwrap_or_else(|| panic!("monomial {} is not in component {}", m.render(), self.multidegree));
            (*pos, c.clone())
        }))
    }
}

/// Shared per-run cache of free-ring components, keyed by multidegree.
pub struct TangentContext {
    rows: usize,
    cols: usize,
    free: DashMap<Multidegree, Arc<FreeRingComponent>>,
}

impl TangentContext {
    pub fn new(rows: usize, cols: usize) -> Self {
        TangentContext { rows, cols, free: DashMap::new() }
    }

    pub fn free_component(&self, d: &Multidegree) -> Arc<FreeRingComponent> {
        self.free
            .entry(d.clone())
            .or_insert_with(|| Arc::new(FreeRingComponent::build(self.rows, self.cols, d)))
            .clone()
    }
}

// ---------------------------------------------------------------------------
// Ideal presentations
// ---------------------------------------------------------------------------

/// A homogeneous ideal in the free ring on a variable grid, as a list of
/// labeled generators. The labels travel into reports and witnesses.
#[derive(Clone, Debug)]
pub struct IdealPresentation {
    rows: usize,
    cols: usize,
    description: String,
    generators: Vec<(String, Multidegree, FreePoly)>,
}

impl IdealPresentation {
    pub fn new(
        rows: usize,
        cols: usize,
        description: impl Into<String>,
        generators: Vec<(String, FreePoly)>,
    ) -> Self {
        let generators = generators
            .into_iter()
            .map(|(label, poly)| {
                let d = poly
                    .homogeneous_multidegree(rows + 1)
                    .unwrap_or_else(|| panic!("generator {label} is zero or inhomogeneous"));
                assert!(d.total() > 0, "generator {label} must have positive degree");
                (label, d, poly)
            })
            .collect();
        IdealPresentation { rows, cols, description: description.into(), generators }
    }

    /// The defining presentation of `G(A_n)`: the row sums `e1(x_i)` and all
    /// same-column quadrics `x_{i,j} x_{k,j}` on the `(n-1) x n` grid.
    pub fn gc_full(n: usize) -> Self {
        let pres = GcPresentation::new(n);
        IdealPresentation {
            rows: n - 1,
            cols: n,
            description: format!("G(A_{n}) on the full {}x{n} grid", n - 1),
            generators: pres.generators().to_vec(),
        }
    }

    /// The same ring on the smaller `(n-1) x (n-1)` grid, obtained by
    /// substituting `x_{i,n} = -(x_{i,1} + ... + x_{i,n-1})` everywhere. The
    /// row sums become zero and drop out; the column-`n` quadrics become
    /// products of two linear forms.
    pub fn gc_eliminated(n: usize) -> Self {
        let pres = GcPresentation::new(n);
        let mut generators = Vec::new();
        for (label, _, poly) in pres.quadric_generators() {
            let substituted = eliminate_last_column(poly, n);
            assert!(!substituted.is_zero(), "eliminated quadric {label} must survive");
            let d = substituted
                .homogeneous_multidegree(n)
                .expect("substitution preserves multidegree");
            generators.push((label.clone(), d, substituted));
        }
        IdealPresentation {
            rows: n - 1,
            cols: n - 1,
            description: format!("G(A_{n}) on the eliminated {0}x{0} grid", n - 1),
            generators,
        }
    }

    /// The smallest interesting probe: one variable, one generator `x^2`.
    /// Its quotient `k[x]/(x^2)` has a genuine negative tangent direction at
    /// shift `-2` (the deformation `x^2 - t`), so the trivial-negative-
    /// tangents verdict must come out false here.
    pub fn toy_square_zero() -> Self {
        let x = FreeMonomial::var((1, 1));
        let sq = FreePoly::monomial(x.mul(&x));
        IdealPresentation::new(1, 1, "k[x]/(x^2)", vec![("x^2".to_string(), sq)])
    }

    /// Extends the presentation by lifted ring elements (the defining ideal
    /// of the corresponding quotient ring). Each vector is expanded into its
    /// representative combination of basis monomials.
    pub fn with_quotient_generators(&self, ring: &GcRing, extra: &[RingVector]) -> Self {
        let mut out = self.clone();
        for (k, s) in extra.iter().enumerate() {
            let component = ring.component(s.multidegree());
            let mut poly = FreePoly::zero();
            for (m, c) in s.terms(&component) {
                poly.add_term(m.to_free(), c);
            }
            assert!(!poly.is_zero(), "quotient generator {} is zero", k + 1);
            let label = format!("s{}@{}", k + 1, s.multidegree());
            out.generators.push((label, s.multidegree().clone(), poly));
        }
        if !extra.is_empty() {
            out.description = format!("{} modulo {} extra generators", out.description, extra.len());
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn generators(&self) -> &[(String, Multidegree, FreePoly)] {
        &self.generators
    }
}

/// Substitutes `x_{i,n} -> -(x_{i,1} + ... + x_{i,n-1})` into a polynomial
/// of the `(n-1) x n` grid, producing one on the `(n-1) x (n-1)` grid.
fn eliminate_last_column(poly: &FreePoly, n: usize) -> FreePoly {
    let mut out = FreePoly::zero();
    for (m, c) in poly.terms() {
        let mut term = FreePoly::constant(c.clone());
        for &(i, j) in m.vars() {
            let factor = if j == n {
                let mut f = FreePoly::zero();
                for jj in 1..n {
                    f.add_term(FreeMonomial::var((i, jj)), -rat(1));
                }
                f
            } else {
                FreePoly::monomial(FreeMonomial::var((i, j)))
            };
            term = term.mul(&factor);
        }
        out.add(&term);
    }
    out
}

// ---------------------------------------------------------------------------
// Target rings
// ---------------------------------------------------------------------------

/// The operations the syzygy machinery needs from the quotient ring `B`:
/// component dimensions, products of component basis vectors by free-ring
/// monomials (in normal form), and normal forms of free polynomials. All
/// components are finite dimensional and vanish above [`max_total`].
///
/// [`max_total`]: TangentTarget::max_total
pub trait TangentTarget: Sync {
    /// Number of grid rows (= arity of every multidegree passed in).
    fn rows(&self) -> usize;

    /// Largest total degree with a nonzero component.
    fn max_total(&self) -> i64;

    /// All multidegrees with a nonzero component, ascending by
    /// `(total, entries)`.
    fn nonzero_multidegrees(&self) -> Vec<Multidegree>;

    fn dim(&self, d: &Multidegree) -> usize;

    /// Normal form of `m * b` where `b` is basis vector `coord` of the `src`
    /// component; coordinates in the `src + deg(m)` component.
    fn basis_product_nf(&self, src: &Multidegree, coord: usize, m: &FreeMonomial) -> SparseVec;

    /// Normal form of a homogeneous free polynomial of multidegree `d`
    /// (empty when the component vanishes).
    fn poly_nf(&self, d: &Multidegree, p: &FreePoly) -> SparseVec;

    /// Renders a coordinate vector through representative monomials.
    fn render_vector(&self, d: &Multidegree, v: &SparseVec) -> String;

    fn describe(&self) -> String;
}

/// `G(A_n)` modulo the ideal generated by a list of homogeneous ring
/// vectors (empty list = the ring itself). Components are the ring engine's
/// components further reduced by the per-multidegree span of the ideal.
pub struct GcQuotient {
    ring: Arc<GcRing>,
    gens: Vec<RingVector>,
    components: DashMap<Multidegree, Arc<QuotComponent>>,
}

struct QuotComponent {
    /// Span of the ideal inside the ring component, in basis coordinates.
    ideal_span: Subspace,
    /// Ring-component basis coordinates surviving into the quotient.
    basis_positions: Vec<usize>,
    /// Ring coordinate -> quotient coordinate (None for pivot coordinates).
    coord_of: Vec<Option<usize>>,
}

impl GcQuotient {
    pub fn new(ring: Arc<GcRing>, gens: Vec<RingVector>) -> Self {
        for s in &gens {
            assert!(!s.is_zero(), "quotient generators must be nonzero");
            assert!(s.multidegree().total() > 0, "quotient generators must have positive degree");
        }
        GcQuotient { ring, gens, components: DashMap::new() }
    }

    pub fn plain(ring: Arc<GcRing>) -> Self {
        GcQuotient::new(ring, Vec::new())
    }

    pub fn ring(&self) -> &Arc<GcRing> {
        &self.ring
    }

    pub fn generator_vectors(&self) -> &[RingVector] {
        &self.gens
    }

    fn component(&self, d: &Multidegree) -> Arc<QuotComponent> {
        self.components
            .entry(d.clone())
            .or_insert_with(|| Arc::new(self.build_component(d)))
            .clone()
    }

    fn build_component(&self, d: &Multidegree) -> QuotComponent {
        let gdim = self.ring.dim(d);
        let mut ech = Echelon::new(gdim);
        if gdim > 0 {
            for s in &self.gens {
                let c = d.sub(s.multidegree());
                if !c.is_nonneg() {
                    continue;
                }
                let lower = self.ring.component(&c);
                if lower.dim() == 0 {
                    continue;
                }
                for m in lower.basis_monomials() {
                    let product = self.ring.multiply_monomial(s, m);
                    if !product.is_zero() {
                        ech.insert(product.coords().clone());
                    }
                }
            }
        }
        let ideal_span = ech.into_subspace();
        let pivots: std::collections::HashSet<usize> =
            ideal_span.pivot_cols().iter().copied().collect();
        let mut basis_positions = Vec::new();
        let mut coord_of = vec![None; gdim];
        for p in 0..gdim {
            if !pivots.contains(&p) {
                coord_of[p] = Some(basis_positions.len());
                basis_positions.push(p);
            }
        }
        QuotComponent { ideal_span, basis_positions, coord_of }
    }

    pub fn dim(&self, d: &Multidegree) -> usize {
        if !d.is_nonneg() {
            return 0;
        }
        self.component(d).basis_positions.len()
    }

    /// Image of a ring vector in quotient coordinates.
    pub fn project(&self, v: &RingVector) -> SparseVec {
        let qc = self.component(v.multidegree());
        let (residual, _) = qc.ideal_span.reduce(v.coords());
        SparseVec::from_terms(residual.iter().map(|(p, c)| {
            (qc.coord_of[p].expect("residual is supported on surviving coordinates"), c.clone())
        }))
    }

    /// Dimensions by total degree, `0..n-1`.
    pub fn hilbert_function(&self) -> Vec<u64> {
        let n = self.ring.n();
        (0..n)
            .map(|t| valid_multidegrees(n, t).iter().map(|d| self.dim(d) as u64).sum())
            .collect()
    }

    /// Kernel of multiplication by every grid variable, in quotient
    /// coordinates of the `d` component.
    pub fn socle_component(&self, d: &Multidegree) -> Subspace {
        let dim = self.dim(d);
        if dim == 0 {
            return Subspace::zero(0);
        }
        let n = self.ring.n();
        let mut rows: Vec<Vec<(usize, Rational)>> = Vec::new();
        for i in 1..n {
            let target = d.plus_row(i);
            let tdim = self.dim(&target);
            if tdim == 0 {
                continue;
            }
            for j in 1..=n {
                let var = FreeMonomial::var((i, j));
                let mut block: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); tdim];
                for c in 0..dim {
                    let w = self.basis_product_nf(d, c, &var);
                    for (beta, v) in w.iter() {
                        block[beta].push((c, v.clone()));
                    }
                }
                rows.extend(block);
            }
        }
        let mat_rows: Vec<SparseVec> = rows.into_iter().map(SparseVec::from_terms).collect();
        kernel_basis(&SparseMatrix::from_rows(dim, mat_rows))
    }
}

impl TangentTarget for GcQuotient {
    fn rows(&self) -> usize {
        self.ring.n() - 1
    }

    fn max_total(&self) -> i64 {
        self.nonzero_multidegrees().iter().map(|d| d.total()).max().unwrap_or(0)
    }

    fn nonzero_multidegrees(&self) -> Vec<Multidegree> {
        let n = self.ring.n();
        let mut out = Vec::new();
        for t in 0..n {
            for d in valid_multidegrees(n, t) {
                if self.dim(&d) > 0 {
                    out.push(d);
                }
            }
        }
        out
    }

    fn dim(&self, d: &Multidegree) -> usize {
        GcQuotient::dim(self, d)
    }

    fn basis_product_nf(&self, src: &Multidegree, coord: usize, m: &FreeMonomial) -> SparseVec {
        let qc = self.component(src);
        let position = qc.basis_positions[coord];
        let cm = match m.to_column_monomial() {
            Some(cm) => cm,
            None => return SparseVec::new(), // a column collision kills the product
        };
        let v = RingVector::new(src.clone(), SparseVec::unit(position, rat(1)));
        let product = self.ring.multiply_monomial(&v, &cm);
        if product.is_zero() {
            return SparseVec::new();
        }
        self.project(&product)
    }

    fn poly_nf(&self, d: &Multidegree, p: &FreePoly) -> SparseVec {
        if self.dim(d) == 0 {
            return SparseVec::new();
        }
        let component = self.ring.component(d);
        let mut coords = SparseVec::new();
        for (m, c) in p.terms() {
            debug_assert_eq!(&m.multidegree(self.ring.n()), d, "inhomogeneous normal-form input");
            if let Some(cm) = m.to_column_monomial() {
                coords.add_scaled(&component.nf_monomial(&cm), c);
            }
        }
        self.project(&RingVector::new(d.clone(), coords))
    }

    fn render_vector(&self, d: &Multidegree, v: &SparseVec) -> String {
        let qc = self.component(d);
        let component = self.ring.component(d);
        let mut p = FreePoly::zero();
        for (c, coeff) in v.iter() {
            let m = component.basis_monomial(qc.basis_positions[c]);
            p.add_term(m.to_free(), coeff.clone());
        }
        p.render()
    }

    fn describe(&self) -> String {
        let n = self.ring.n();
        if self.gens.is_empty() {
            format!("G(A_{n})")
        } else {
            format!("G(A_{n}) modulo {} generators", self.gens.len())
        }
    }
}

/// A ring presented directly as free ring modulo generators, with every
/// component computed by spanning the relations inside the full free
/// monomial basis. Far less economical than the column-monomial engine, but
/// completely presentation-agnostic — it backs the toy probe and the
/// eliminated-grid cross-check.
pub struct FreePresentedRing {
    rows: usize,
    cols: usize,
    description: String,
    gens: Vec<(Multidegree, FreePoly)>,
    components: DashMap<Multidegree, Arc<FreeQuotComponent>>,
    bound: OnceLock<i64>,
}

struct FreeQuotComponent {
    monomials: Vec<FreeMonomial>,
    index: HashMap<FreeMonomial, usize>,
    basis_positions: Vec<usize>,
    /// Normal form of each monomial, in quotient coordinates.
    nf_rows: Vec<SparseVec>,
}

impl FreePresentedRing {
    pub fn from_presentation(pres: &IdealPresentation) -> Self {
        FreePresentedRing {
            rows: pres.rows(),
            cols: pres.cols(),
            description: pres.description().to_string(),
            gens: pres.generators().iter().map(|(_, d, p)| (d.clone(), p.clone())).collect(),
            components: DashMap::new(),
            bound: OnceLock::new(),
        }
    }

    fn component(&self, d: &Multidegree) -> Arc<FreeQuotComponent> {
        self.components
            .entry(d.clone())
            .or_insert_with(|| Arc::new(self.build_component(d)))
            .clone()
    }

    fn build_component(&self, d: &Multidegree) -> FreeQuotComponent {
        let monomials = free_monomials(self.rows, self.cols, d);
        let index: HashMap<FreeMonomial, usize> =
            monomials.iter().enumerate().map(|(p, m)| (m.clone(), p)).collect();
        let mut ech = Echelon::new(monomials.len());
        for (gamma, g) in &self.gens {
            let src = d.sub(gamma);
            if !src.is_nonneg() {
                continue;
            }
            for m in free_monomials(self.rows, self.cols, &src) {
                let row = SparseVec::from_terms(
                    g.terms().map(|(gm, c)| (index[&gm.mul(&m)], c.clone())),
                );
                ech.insert(row);
            }
        }
        let relation = ech.into_subspace();
        let pivots: std::collections::HashSet<usize> =
            relation.pivot_cols().iter().copied().collect();
        let mut basis_positions = Vec::new();
        let mut coord_of = vec![None; monomials.len()];
        for p in 0..monomials.len() {
            if !pivots.contains(&p) {
                coord_of[p] = Some(basis_positions.len());
                basis_positions.push(p);
            }
        }
        let nf_rows: Vec<SparseVec> = (0..monomials.len())
            .map(|p| match coord_of[p] {
                Some(q) => SparseVec::unit(q, rat(1)),
                None => {
                    let (residual, _) = relation.reduce(&SparseVec::unit(p, rat(1)));
                    SparseVec::from_terms(residual.iter().map(|(r, c)| {
                        (coord_of[r].expect("residual avoids pivot coordinates"), c.clone())
                    }))
                }
            })
            .collect();
        FreeQuotComponent { monomials, index, basis_positions, nf_rows }
    }
}

impl TangentTarget for FreePresentedRing {
    fn rows(&self) -> usize {
        self.rows
    }

    fn max_total(&self) -> i64 {
        *self.bound.get_or_init(|| {
            let mut t: usize = 0;
            loop {
                assert!(t <= 64, "components do not vanish by total degree 64");
                let alive = compositions(t, self.rows, t)
                    .into_iter()
                    .any(|c| self.dim(&Multidegree::new(c.iter().map(|&e| e as i64).collect())) > 0);
                if !alive {
                    // Components of one lower total degree were the last
                    // nonzero ones; a quotient of a ring generated in degree
                    // one cannot come back to life above a dead level.
                    return t as i64 - 1;
                }
                t += 1;
            }
        })
    }

    fn nonzero_multidegrees(&self) -> Vec<Multidegree> {
        let bound = self.max_total();
        let mut out = Vec::new();
        for t in 0..=bound.max(0) as usize {
            for c in compositions(t, self.rows, t) {
                let d = Multidegree::new(c.iter().map(|&e| e as i64).collect());
                if self.dim(&d) > 0 {
                    out.push(d);
                }
            }
        }
        out
    }

    fn dim(&self, d: &Multidegree) -> usize {
        if !d.is_nonneg() {
            return 0;
        }
        self.component(d).basis_positions.len()
    }

    fn basis_product_nf(&self, src: &Multidegree, coord: usize, m: &FreeMonomial) -> SparseVec {
        let sc = self.component(src);
        let product = sc.monomials[sc.basis_positions[coord]].mul(m);
        let target = src.add(&m.multidegree(self.rows + 1));
        let tc = self.component(&target);
        match tc.index.get(&product) {
            Some(&pos) => tc.nf_rows[pos].clone(),
            None => {
                assert!(tc.monomials.is_empty(), "product monomial missing from a live component");
                SparseVec::new()
            }
        }
    }

    fn poly_nf(&self, d: &Multidegree, p: &FreePoly) -> SparseVec {
        let tc = self.component(d);
        let mut out = SparseVec::new();
        for (m, c) in p.terms() {
            debug_assert_eq!(&m.multidegree(self.rows + 1), d, "inhomogeneous normal-form input");
            if let Some(&pos) = tc.index.get(m) {
                out.add_scaled(&tc.nf_rows[pos], c);
            } else {
                assert!(tc.monomials.is_empty(), "term missing from a live component");
            }
        }
        out
    }

    fn render_vector(&self, d: &Multidegree, v: &SparseVec) -> String {
        let tc = self.component(d);
        let mut p = FreePoly::zero();
        for (c, coeff) in v.iter() {
            p.add_term(tc.monomials[tc.basis_positions[c]].clone(), coeff.clone());
        }
        p.render()
    }

    fn describe(&self) -> String {
        self.description.clone()
    }
}

// ---------------------------------------------------------------------------
// Hom components
// ---------------------------------------------------------------------------

/// One generator's block of unknown coordinates inside a Hom solution.
#[derive(Clone, Debug)]
pub struct HomBlock {
    pub label: String,
    /// Target component multidegree `deg(g) + e`.
    pub target: Multidegree,
    pub offset: usize,
    pub dim: usize,
}

/// The solved piece `Hom_R(I, B)_e`: a subspace of the concatenated unknown
/// coordinates (one block per generator, each a coefficient vector in the
/// target component basis).
pub struct HomSolution {
    shift: Multidegree,
    layout: Vec<HomBlock>,
    unknowns: usize,
    constraint_rank: usize,
    solutions: Subspace,
    /// Whether every constraint multidegree was processed (false when the
    /// run stopped early at the proven lower bound).
    exhaustive: bool,
}

impl HomSolution {
    pub fn shift(&self) -> &Multidegree {
        &self.shift
    }

    pub fn layout(&self) -> &[HomBlock] {
        &self.layout
    }

    pub fn unknowns(&self) -> usize {
        self.unknowns
    }

    pub fn constraint_rank(&self) -> usize {
        self.constraint_rank
    }

    pub fn dim(&self) -> usize {
        self.solutions.dim()
    }

    pub fn solutions(&self) -> &Subspace {
        &self.solutions
    }

    pub fn exhaustive(&self) -> bool {
        self.exhaustive
    }
}

/// Knobs for [`hom_component`].
#[derive(Clone, Debug, Default)]
pub struct HomOptions {
    /// Stop once the solution space provably equals this dimension. Sound
    /// when the caller knows a subspace of that dimension inside every
    /// partial solution space (the derivation span): the chain
    /// `partial ⊇ final ⊇ known` pins `partial = final` as soon as the
    /// outer dimensions meet.
    pub stop_at_dim: Option<usize>,
    /// Sweep this many extra total degrees of constraint multidegrees past
    /// the vanishing bound of `B` (their target components are zero, so
    /// they must not change the outcome; exercised as a soundness probe).
    pub extra_degree: usize,
}

fn hom_layout(
    pres: &IdealPresentation,
    target: &dyn TangentTarget,
    shift: &Multidegree,
) -> (Vec<HomBlock>, usize) {
    let mut layout = Vec::with_capacity(pres.generators().len());
    let mut offset = 0;
    for (label, gamma, _) in pres.generators() {
        let td = gamma.add(shift);
        let dim = if td.is_nonneg() { target.dim(&td) } else { 0 };
        layout.push(HomBlock { label: label.clone(), target: td, offset, dim });
        offset += dim;
    }
    (layout, offset)
}

/// The constraint multidegrees for a shift: `d - e` over every nonzero
/// component multidegree `d` of the target (plus, optionally, the vanishing
/// levels just above its bound).
fn constraint_multidegrees(
    target: &dyn TangentTarget,
    shift: &Multidegree,
    extra_degree: usize,
) -> Vec<Multidegree> {
    let rows = target.rows();
    let mut candidates = target.nonzero_multidegrees();
    if extra_degree > 0 {
        let bound = target.max_total().max(0) as usize;
        for t in bound + 1..=bound + extra_degree {
            for c in compositions(t, rows, t) {
                candidates.push(Multidegree::new(c.iter().map(|&e| e as i64).collect()));
            }
        }
    }
    let mut deltas: Vec<Multidegree> =
        candidates.iter().map(|d| d.sub(shift)).filter(|delta| delta.is_nonneg()).collect();
    deltas.sort_by_key(|d| (d.total(), d.entries().to_vec()));
    deltas.dedup();
    deltas
}

/// Computes `Hom_R(I, B)_e` for a shift of negative total degree.
///
/// For each constraint multidegree `Delta`, the rows `(t, m)` with `m` a
/// free monomial of multidegree `Delta - deg(g_t)` are streamed through one
/// echelon whose coordinates are `[monomials of R_Delta | per-target-
/// coordinate copies of the unknowns]`. Pivots land in the monomial block
/// first; rows that reduce to zero there are exactly the syzygy functionals
/// and their unknown-block slices accumulate into one global constraint
/// echelon. Generators with fewer terms are streamed first so that monomial
/// generators hand out cheap single-entry pivots.
pub fn hom_component(
    pres: &IdealPresentation,
    target: &dyn TangentTarget,
    ctx: &TangentContext,
    shift: &Multidegree,
    opts: &HomOptions,
) -> Result<HomSolution> {
    if shift.total() >= 0 {
        return Err(Error::InvalidMultidegree {
            detail: format!("shift {} must have negative total degree", shift),
        });
    }
    assert_eq!(pres.rows(), target.rows(), "presentation and target grids disagree");
    let gens = pres.generators();
    let (layout, unknowns) = hom_layout(pres, target, shift);
    if unknowns == 0 {
        return Ok(HomSolution {
            shift: shift.clone(),
            layout,
            unknowns: 0,
            constraint_rank: 0,
            solutions: Subspace::zero(0),
            exhaustive: true,
        });
    }

    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&t| (gens[t].2.num_terms(), t));

    let mut constraints = Echelon::new(unknowns);
    let mut exhaustive = true;
    for delta in constraint_multidegrees(target, shift, opts.extra_degree) {
        if let Some(stop) = opts.stop_at_dim {
            if unknowns - constraints.rank() == stop {
                exhaustive = false;
                break;
            }
        }
        let target_dim = {
            let td = delta.add(shift);
            if td.is_nonneg() {
                target.dim(&td)
            } else {
                0
            }
        };
        // A zero target component accepts everything: no functionals arise.
        if target_dim == 0 {
            continue;
        }
        let r_comp = ctx.free_component(&delta);
        if r_comp.is_empty() {
            continue;
        }
        let r_len = r_comp.len();
        let mut ech = Echelon::new(r_len + target_dim * unknowns);
        for &t in &order {
            let (_, gamma, g) = &gens[t];
            let src_d = delta.sub(gamma);
            if !src_d.is_nonneg() {
                continue;
            }
            let src = ctx.free_component(&src_d);
            let block = &layout[t];
            for m in src.monomials() {
                let mut terms: Vec<(usize, Rational)> = Vec::new();
                for (gm, c) in g.terms() {
                    let pos = r_comp
                        .position(&gm.mul(m))
                        .expect("a generator-by-monomial product stays in its component");
                    terms.push((pos, c.clone()));
                }
                for coord in 0..block.dim {
                    let w = target.basis_product_nf(&block.target, coord, m);
                    for (beta, v) in w.iter() {
                        terms.push((r_len + beta * unknowns + block.offset + coord, v.clone()));
                    }
                }
                ech.insert(SparseVec::from_terms(terms));
            }
        }
        for (pivot, row) in ech.pivot_rows() {
            if pivot < r_len {
                continue;
            }
            // The leading coordinate sits past the monomial block, so the
            // whole monomial part is exactly zero: a genuine syzygy row.
            let mut per_beta: HashMap<usize, Vec<(usize, Rational)>> = HashMap::new();
            for (idx, v) in row.iter() {
                let rel = idx - r_len;
                per_beta.entry(rel / unknowns).or_default().push((rel % unknowns, v.clone()));
            }
            let mut betas: Vec<(usize, Vec<(usize, Rational)>)> = per_beta.into_iter().collect();
            betas.sort_by_key(|(b, _)| *b);
            for (_, terms) in betas {
                constraints.insert(SparseVec::from_terms(terms));
            }
        }
    }
    if let Some(stop) = opts.stop_at_dim {
        if unknowns - constraints.rank() == stop {
            exhaustive = false;
        }
    }

    let constraint_rank = constraints.rank();
    let rows: Vec<SparseVec> =
        constraints.pivot_rows().into_iter().map(|(_, r)| r.clone()).collect();
    let solutions = kernel_basis(&SparseMatrix::from_rows(unknowns, rows));
    Ok(HomSolution { shift: shift.clone(), layout, unknowns, constraint_rank, solutions, exhaustive })
}

/// The same space computed the pedestrian way: per constraint multidegree,
/// materialize the expansion matrix `(t, m) -> m * g_t`, take its exact
/// kernel, verify every kernel vector multiplies out to the zero polynomial,
/// and only then convert it into functionals. Quadratic and slow — kept as
/// an independent cross-check of [`hom_component`].
pub fn hom_component_literal(
    pres: &IdealPresentation,
    target: &dyn TangentTarget,
    ctx: &TangentContext,
    shift: &Multidegree,
) -> Result<HomSolution> {
    if shift.total() >= 0 {
        return Err(Error::InvalidMultidegree {
            detail: format!("shift {} must have negative total degree", shift),
        });
    }
    assert_eq!(pres.rows(), target.rows(), "presentation and target grids disagree");
    let gens = pres.generators();
    let (layout, unknowns) = hom_layout(pres, target, shift);
    if unknowns == 0 {
        return Ok(HomSolution {
            shift: shift.clone(),
            layout,
            unknowns: 0,
            constraint_rank: 0,
            solutions: Subspace::zero(0),
            exhaustive: true,
        });
    }

    let mut constraints = Echelon::new(unknowns);
    for delta in constraint_multidegrees(target, shift, 0) {
        let target_dim = {
            let td = delta.add(shift);
            if td.is_nonneg() {
                target.dim(&td)
            } else {
                0
            }
        };
        if target_dim == 0 {
            continue;
        }
        let r_comp = ctx.free_component(&delta);
        if r_comp.is_empty() {
            continue;
        }
        // Columns: all (generator, cofactor monomial) pairs.
        let mut columns: Vec<(usize, FreeMonomial)> = Vec::new();
        for (t, (_, gamma, _)) in gens.iter().enumerate() {
            let src_d = delta.sub(gamma);
            if !src_d.is_nonneg() {
                continue;
            }
            for m in ctx.free_component(&src_d).monomials() {
                columns.push((t, m.clone()));
            }
        }
        if columns.is_empty() {
            continue;
        }
        let mut row_terms: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); r_comp.len()];
        for (cidx, (t, m)) in columns.iter().enumerate() {
            for (gm, c) in gens[*t].2.terms() {
                let pos = r_comp
                    .position(&gm.mul(m))
                    .expect("a generator-by-monomial product stays in its component");
                row_terms[pos].push((cidx, c.clone()));
            }
        }
        let matrix = SparseMatrix::from_rows(
            columns.len(),
            row_terms.into_iter().map(SparseVec::from_terms).collect(),
        );
        let syzygies = kernel_basis(&matrix);
        for r in syzygies.basis() {
            // Soundness: the combination must vanish identically in the
            // free ring, not merely in the tracked component.
            let mut expansion = FreePoly::zero();
            for (cidx, coeff) in r.iter() {
                let (t, m) = &columns[cidx];
                let mut scaled = gens[*t].2.mul(&FreePoly::monomial(m.clone()));
                scaled.scale(coeff);
                expansion.add(&scaled);
            }
            assert!(expansion.is_zero(), "syzygy failed to annihilate the generators exactly");

            let mut funcs: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); target_dim];
            for (cidx, coeff) in r.iter() {
                let (t, m) = &columns[cidx];
                let block = &layout[*t];
                for coord in 0..block.dim {
                    let w = target.basis_product_nf(&block.target, coord, m);
                    for (beta, v) in w.iter() {
                        funcs[beta].push((block.offset + coord, coeff * v));
                    }
                }
            }
            for f in funcs {
                constraints.insert(SparseVec::from_terms(f));
            }
        }
    }

    let constraint_rank = constraints.rank();
    let rows: Vec<SparseVec> =
        constraints.pivot_rows().into_iter().map(|(_, r)| r.clone()).collect();
    let solutions = kernel_basis(&SparseMatrix::from_rows(unknowns, rows));
    Ok(HomSolution {
        shift: shift.clone(),
        layout,
        unknowns,
        constraint_rank,
        solutions,
        exhaustive: true,
    })
}

// ---------------------------------------------------------------------------
// Derivations
// ---------------------------------------------------------------------------

/// The span of the coordinate derivations inside the unknown space of
/// [`hom_component`] at the given shift. A derivation `d/dx_{i,j}` drops one
/// row-`i` variable, so its shift is exactly `-eps_i`: at those shifts the
/// `cols` derivations of row `i` send each generator to the class of its
/// partial derivative, and at every other shift the span is zero.
pub fn derivation_span(
    pres: &IdealPresentation,
    target: &dyn TangentTarget,
    shift: &Multidegree,
) -> Subspace {
    let (layout, unknowns) = hom_layout(pres, target, shift);
    let row = {
        let entries = shift.entries();
        let negatives: Vec<usize> = (0..entries.len()).filter(|&k| entries[k] != 0).collect();
        match negatives.as_slice() {
            [k] if entries[*k] == -1 => Some(k + 1),
            _ => None,
        }
    };
    let Some(i) = row else {
        return Subspace::zero(unknowns);
    };
    let mut ech = Echelon::new(unknowns);
    for j in 1..=pres.cols() {
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        for (block, (_, _, g)) in layout.iter().zip(pres.generators()) {
            if block.dim == 0 {
                continue;
            }
            let dg = g.derivative((i, j));
            if dg.is_zero() {
                continue;
            }
            let w = target.poly_nf(&block.target, &dg);
            for (c, v) in w.iter() {
                terms.push((block.offset + c, v.clone()));
            }
        }
        ech.insert(SparseVec::from_terms(terms));
    }
    ech.into_subspace()
}

// ---------------------------------------------------------------------------
// Trivial-negative-tangents analysis
// ---------------------------------------------------------------------------

/// Per-shift dimensions of the Hom space and of the derivation span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShiftRecord {
    pub shift: Multidegree,
    pub dim_hom: usize,
    pub dim_derivations: usize,
}

/// A solution that is not a combination of derivations: the generator
/// images of one RREF basis vector, rendered through representatives.
#[derive(Clone, Debug)]
pub struct TangentWitness {
    pub shift: Multidegree,
    /// `(generator label, image)` for the nonzero images.
    pub images: Vec<(String, String)>,
}

/// Outcome of sweeping every negative shift of one presentation.
#[derive(Clone, Debug)]
pub struct TangentAnalysis {
    pub description: String,
    pub shifts: Vec<ShiftRecord>,
    /// True when the Hom space equals the derivation span at every shift.
    pub trivial: bool,
    /// `sum_e (dim Hom_e - dim derivations_e)`.
    pub dim_t1_negative: usize,
    pub witness: Option<TangentWitness>,
}

/// Tuning for the analysis sweep.
#[derive(Clone, Debug)]
pub struct TangentOptions {
    /// Stop each Hom run as soon as its solution space provably equals the
    /// derivation span (see [`HomOptions::stop_at_dim`]).
    pub early_exit: bool,
    /// Passed through to [`HomOptions::extra_degree`].
    pub extra_degree: usize,
    /// Emit one heartbeat line per solved shift to standard error; standard
    /// output stays machine-clean.
    pub progress: bool,
}

impl Default for TangentOptions {
    fn default() -> Self {
        TangentOptions { early_exit: true, extra_degree: 0, progress: false }
    }
}

/// Every shift of negative total degree in which some generator image can
/// be nonzero: differences `d - deg(g)` over nonzero component multidegrees
/// `d`, ascending by `(total, entries)`.
fn negative_shifts(pres: &IdealPresentation, target: &dyn TangentTarget) -> Vec<Multidegree> {
    let gammas: BTreeSet<Vec<i64>> =
        pres.generators().iter().map(|(_, g, _)| g.entries().to_vec()).collect();
    let mut shifts: BTreeSet<(i64, Vec<i64>)> = BTreeSet::new();
    for d in target.nonzero_multidegrees() {
        for gamma in &gammas {
            let e = d.sub(&Multidegree::new(gamma.clone()));
            if e.total() < 0 {
                shifts.insert((e.total(), e.entries().to_vec()));
            }
        }
    }
    shifts.into_iter().map(|(_, entries)| Multidegree::new(entries)).collect()
}

/// Sweeps every negative shift of a presentation against a target ring,
/// comparing `Hom(I, B)_e` with the derivation span. Panics if a derivation
/// ever escapes the solution space — that would mean the syzygy machinery
/// produced a constraint violated by a genuine module map.
pub fn tnt_analyze(
    pres: &IdealPresentation,
    target: &dyn TangentTarget,
    opts: &TangentOptions,
) -> TangentAnalysis {
    let ctx = TangentContext::new(pres.rows(), pres.cols());
    let shifts = negative_shifts(pres, target);
    let total = shifts.len();
    let done = AtomicUsize::new(0);
    // Shifts are independent, so solve them in parallel; the fold below
    // walks the results back in ascending shift order, which keeps reports
    // (and the choice of witness) identical at every worker-pool width.
    let solved: Vec<(Multidegree, Subspace, HomSolution)> = shifts
        .into_par_iter()
        .map(|shift| {
            let derivations = derivation_span(pres, target, &shift);
            let hom_opts = HomOptions {
                stop_at_dim: if opts.early_exit { Some(derivations.dim()) } else { None },
                extra_degree: opts.extra_degree,
            };
            let hom = hom_component(pres, target, &ctx, &shift, &hom_opts)
                .expect("negative shifts stay in the valid range");
            if opts.progress {
                let k = done.fetch_add(1, Ordering::Relaxed) + 1;
                eprintln!(
                    "tangent sweep: shift {shift} solved, dim {} ({k}/{total})",
                    hom.dim()
                );
            }
            (shift, derivations, hom)
        })
        .collect();

    let mut records = Vec::new();
    let mut witness = None;
    let mut gap = 0usize;
    for (shift, derivations, hom) in solved {
        for b in derivations.basis() {
            let contained = is_in_span(b, hom.solutions())
                .expect("derivation and solution ambients agree")
                .is_some();
            assert!(contained, "a derivation escaped the solution space at shift {shift}");
        }
        let dim_hom = hom.dim();
        let dim_derivations = derivations.dim();
        assert!(dim_hom >= dim_derivations, "containment bounds the dimensions");
        if dim_hom > dim_derivations && witness.is_none() {
            let vector = hom
                .solutions()
                .basis()
                .iter()
                .find(|v| {
                    is_in_span(v, &derivations).expect("matching ambients").is_none()
                })
                .expect("a dimension gap exhibits an escaping vector")
                .clone();
            let mut images = Vec::new();
            for block in hom.layout() {
                if block.dim == 0 {
                    continue;
                }
                let slice = SparseVec::from_terms(
                    vector
                        .iter()
                        .filter(|&(c, _)| c >= block.offset && c < block.offset + block.dim)
                        .map(|(c, v)| (c - block.offset, v.clone())),
                );
                if !slice.is_zero() {
                    images.push((
                        block.label.clone(),
                        target.render_vector(&block.target, &slice),
                    ));
                }
            }
            witness = Some(TangentWitness { shift: shift.clone(), images });
        }
        gap += dim_hom - dim_derivations;
        records.push(ShiftRecord { shift, dim_hom, dim_derivations });
    }
    TangentAnalysis {
        description: format!("{} -> {}", pres.description(), target.describe()),
        trivial: gap == 0,
        dim_t1_negative: gap,
        shifts: records,
        witness,
    }
}

/// The verdict for `G(A_n)` or one of its quotients, plus the data that
/// produced it.
#[derive(Clone, Debug)]
pub struct TangentReport {
    pub n: usize,
    /// Rendered quotient generators (empty for the plain ring).
    pub quotient: Vec<String>,
    pub shifts: Vec<ShiftRecord>,
    pub tnt: bool,
    pub dim_t1_negative: usize,
    pub witness: Option<TangentWitness>,
}

impl TangentReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "quotient": self.quotient,
            "shifts": self.shifts.iter().map(|r| serde_json::json!({
                "shift": r.shift.entries(),
                "dim_hom": r.dim_hom,
                "dim_derivations": r.dim_derivations,
            })).collect::<Vec<_>>(),
            "tnt": self.tnt,
            "dim_t1_negative": self.dim_t1_negative,
            "witness": self.witness.as_ref().map(|w| serde_json::json!({
                "shift": w.shift.entries(),
                "images": w.images,
            })),
        })
    }
}

/// Validates the quotient generators (nonzero, annihilated by every grid
/// variable, linearly independent) and runs the sweep for `G(A_n)` modulo
/// the ideal they generate. An empty list checks the ring itself.
pub fn tnt_check_with_options(
    ring: &Arc<GcRing>,
    quotient: &[RingVector],
    opts: &TangentOptions,
) -> Result<TangentReport> {
    let n = ring.n();
    let mut independence: HashMap<Multidegree, Echelon> = HashMap::new();
    for (k, s) in quotient.iter().enumerate() {
        if s.is_zero() {
            return Err(Error::Unsupported {
                detail: format!("quotient generator {} is zero", k + 1),
            });
        }
        for i in 1..n {
            for j in 1..=n {
                if !ring.multiply(s, (i, j)).is_zero() {
                    return Err(Error::NotContained {
                        witness: format!(
                            "x_{i}_{j} * (generator {}) is nonzero, so the generator is not in the socle",
                            k + 1
                        ),
                    });
                }
            }
        }
        let ech = independence
            .entry(s.multidegree().clone())
            .or_insert_with(|| Echelon::new(ring.dim(s.multidegree())));
        if ech.insert(s.coords().clone()).is_none() {
            return Err(Error::Unsupported {
                detail: format!("quotient generator {} depends linearly on the others", k + 1),
            });
        }
    }

    let rendered = quotient
        .iter()
        .map(|s| {
            let component = ring.component(s.multidegree());
            s.render(&component)
        })
        .collect();
    let pres = IdealPresentation::gc_full(n).with_quotient_generators(ring, quotient);
    let target = GcQuotient::new(Arc::clone(ring), quotient.to_vec());
    let analysis = tnt_analyze(&pres, &target, opts);
    Ok(TangentReport {
        n,
        quotient: rendered,
        shifts: analysis.shifts,
        tnt: analysis.trivial,
        dim_t1_negative: analysis.dim_t1_negative,
        witness: analysis.witness,
    })
}

/// [`tnt_check_with_options`] with the default tuning.
pub fn tnt_check(ring: &Arc<GcRing>, quotient: &[RingVector]) -> Result<TangentReport> {
    tnt_check_with_options(ring, quotient, &TangentOptions::default())
}

// ---------------------------------------------------------------------------
// Quotient workflows
// ---------------------------------------------------------------------------

/// How to pick the socle generators for a quotient run.
#[derive(Clone, Debug)]
pub enum QuotientSelection {
    /// The first `r` vectors of the built-in multidegree family for `n`
    /// (all minimal-degree multidegrees for `n = 4`, the `(1,1,1,0)`
    /// rearrangements for `n = 5`, the admissible multidegrees for even
    /// `n >= 6`).
    Count(usize),
    /// All minimal-degree socle vectors of the listed multidegrees.
    Multidegrees(Vec<Multidegree>),
    /// Every socle element in the minimal socle degree.
    FullMinimalSocle,
}

/// A nonzero socle class of the quotient below the minimal socle degree —
/// the configuration where the socle-only hypotheses of the quotient
/// tangent argument fail, reported instead of a verdict.
#[derive(Clone, Debug)]
pub struct LowSocleWitness {
    pub multidegree: Multidegree,
    pub dim: usize,
    pub representative: String,
}

/// Everything one quotient run produces.
#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub n: usize,
    pub selection: String,
    /// Number of socle generators actually used.
    pub r: usize,
    pub multidegrees: Vec<Multidegree>,
    pub hilbert: Vec<u64>,
    /// Closed-form prediction, when one applies to this `(n, r)`.
    pub expected_hilbert: Option<Vec<i64>>,
    pub hilbert_matches: Option<bool>,
    /// Set when the quotient has socle below the minimal degree; the
    /// tangent sweep is skipped in that case.
    pub low_socle: Option<LowSocleWitness>,
    pub tangent: Option<TangentReport>,
}

impl QuotientReport {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "selection": self.selection,
            "r": self.r,
            "multidegrees": self.multidegrees.iter().map(|d| d.entries().to_vec()).collect::<Vec<_>>(),
            "hilbert": self.hilbert,
            "expected_hilbert": self.expected_hilbert,
            "hilbert_matches": self.hilbert_matches,
            "low_socle": self.low_socle.as_ref().map(|w| serde_json::json!({
                "multidegree": w.multidegree.entries(),
                "dim": w.dim,
                "representative": w.representative,
            })),
            "tangent": self.tangent.as_ref().map(|t| t.to_json()),
        })
    }
}

/// The built-in quotient multidegree family for `n`.
pub fn default_selection_multidegrees(n: usize) -> Result<Vec<Multidegree>> {
    match n {
        0..=3 => Err(Error::Unsupported {
            detail: format!("no socle quotient family for n = {n}"),
        }),
        4 => Ok(valid_multidegrees(4, 2)),
        5 => Ok(compositions(3, 4, 1)
            .into_iter()
            .map(|c| Multidegree::new(c.iter().map(|&e| e as i64).collect()))
            .collect()),
        _ if n.is_multiple_of(2) => Ok(admissible_socle_multidegrees(n)),
        _ => Err(Error::Unsupported {
            detail: format!(
                "no default family for odd n = {n}; pass explicit multidegrees or the full minimal socle"
            ),
        }),
    }
}

/// Materializes a selection into concrete socle vectors: a description of
/// what was chosen, the multidegrees touched, and the vectors themselves.
pub fn selection_vectors(
    ring: &Arc<GcRing>,
    selection: &QuotientSelection,
) -> Result<(String, Vec<Multidegree>, Vec<RingVector>)> {
    let n = ring.n();
    if n < 4 {
        return Err(Error::Unsupported {
            detail: format!("socle quotients need n >= 4, got {n}"),
        });
    }
    let min_degree = n.div_ceil(2);

    let picked = match selection {
        QuotientSelection::Count(r) => {
            let family = default_selection_multidegrees(n)?;
            let mut vectors = Vec::new();
            for d in &family {
                vectors.extend(socle_basis_min_degree(ring, d)?);
            }
            if *r > vectors.len() {
                return Err(Error::Unsupported {
                    detail: format!(
                        "requested {r} socle generators; the family for n = {n} has {}",
                        vectors.len()
                    ),
                });
            }
            vectors.truncate(*r);
            let used: Vec<Multidegree> =
                dedup_multidegrees(vectors.iter().map(|v| v.multidegree().clone()));
            (format!("first {r} of the built-in family"), used, vectors)
        }
        QuotientSelection::Multidegrees(list) => {
            let mut vectors = Vec::new();
            for d in list {
                vectors.extend(socle_basis_min_degree(ring, d)?);
            }
            (
                "all minimal-degree socle vectors of the listed multidegrees".to_string(),
                list.clone(),
                vectors,
            )
        }
        QuotientSelection::FullMinimalSocle => {
            let mut vectors = Vec::new();
            let mut used = Vec::new();
            for d in valid_multidegrees(n, min_degree) {
                let socle = ring.socle_component(&d);
                if socle.dim() == 0 {
                    continue;
                }
                used.push(d.clone());
                for b in socle.basis() {
                    vectors.push(RingVector::new(d.clone(), b.clone()));
                }
            }
            ("every socle element in the minimal socle degree".to_string(), used, vectors)
        }
    };
    Ok(picked)
}

/// Builds the quotient of `G(A_n)` by the selected socle generators, checks
/// it for socle below the minimal degree (reporting a witness instead of a
/// verdict when one exists), runs the tangent sweep otherwise, and compares
/// the quotient's Hilbert function with the closed-form prediction when the
/// pair `(n, r)` has one.
pub fn quotient_workflow_with_options(
    ring: &Arc<GcRing>,
    selection: &QuotientSelection,
    opts: &TangentOptions,
) -> Result<QuotientReport> {
    let n = ring.n();
    let min_degree = n.div_ceil(2);
    let (selection_text, multidegrees, vectors) = selection_vectors(ring, selection)?;

    let r = vectors.len();
    let quotient = GcQuotient::new(Arc::clone(ring), vectors.clone());
    let hilbert = quotient.hilbert_function();
    let expected_hilbert = match big_r(n) {
        Ok(cap) if (r as u64) <= cap => hilbert_formula(n, r as u64).ok(),
        _ => None,
    };
    let hilbert_matches = expected_hilbert
        .as_ref()
        .map(|e| e.iter().map(|&v| v.max(0) as u64).collect::<Vec<u64>>() == hilbert);

    // The tangent argument for the quotient requires its socle to live only
    // in degrees >= the minimal socle degree. Scan the lower degrees and
    // report the first violation instead of a verdict.
    let mut low_socle = None;
    'scan: for t in 1..min_degree {
        for d in valid_multidegrees(n, t) {
            let socle = quotient.socle_component(&d);
            if socle.dim() > 0 {
                low_socle = Some(LowSocleWitness {
                    multidegree: d.clone(),
                    dim: socle.dim(),
                    representative: quotient.render_vector(&d, &socle.basis()[0]),
                });
                break 'scan;
            }
        }
    }

    let tangent = if low_socle.is_none() {
        Some(tnt_check_with_options(ring, &vectors, opts)?)
    } else {
        None
    };

    Ok(QuotientReport {
        n,
        selection: selection_text,
        r,
        multidegrees,
        hilbert,
        expected_hilbert,
        hilbert_matches,
        low_socle,
        tangent,
    })
}

/// [`quotient_workflow_with_options`] with the default tuning.
pub fn quotient_workflow(ring: &Arc<GcRing>, selection: &QuotientSelection) -> Result<QuotientReport> {
    quotient_workflow_with_options(ring, selection, &TangentOptions::default())
}

fn dedup_multidegrees(it: impl IntoIterator<Item = Multidegree>) -> Vec<Multidegree> {
    let mut out: Vec<Multidegree> = Vec::new();
    for d in it {
        if !out.contains(&d) {
            out.push(d);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// The degree-(n-2) obstruction witness
// ---------------------------------------------------------------------------

/// Outcome of the second-order obstruction check.
#[derive(Clone, Debug)]
pub struct T2Report {
    pub n: usize,
    /// `false` for `n = 4`: the point is smooth there and the witness has
    /// nothing to certify.
    pub applicable: bool,
    pub monomial: Option<String>,
    pub multidegree: Option<Multidegree>,
    pub nonzero: bool,
    pub in_socle: bool,
    pub outside_ideal: bool,
    /// All three checks passed (implies the obstruction class survives).
    pub confirmed: bool,
}

impl T2Report {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "applicable": self.applicable,
            "monomial": self.monomial,
            "multidegree": self.multidegree.as_ref().map(|d| d.entries().to_vec()),
            "nonzero": self.nonzero,
            "in_socle": self.in_socle,
            "outside_ideal": self.outside_ideal,
            "confirmed": self.confirmed,
        })
    }
}

/// Checks the explicit total-degree-`n-2` monomial
/// `f = x_{1,2} x_{1,3} x_{2,4} x_{3,5} ... x_{n-3,n-1}`
/// that certifies a nonvanishing second-order obstruction: it must be
/// nonzero, lie in the socle, and avoid the ideal generated by `x_{n-1,1}`
/// and `x_{n-2,1}`. Needs `n >= 5`; for `n = 4` the check is inapplicable
/// (reported as such, with every flag false).
pub fn t2_witness(ring: &GcRing) -> Result<T2Report> {
    let n = ring.n();
    if n < 4 {
        return Err(Error::Unsupported {
            detail: format!("the obstruction witness needs n >= 4, got {n}"),
        });
    }
    if n == 4 {
        return Ok(T2Report {
            n,
            applicable: false,
            monomial: None,
            multidegree: None,
            nonzero: false,
            in_socle: false,
            outside_ideal: false,
            confirmed: false,
        });
    }

    let mut pairs: Vec<(usize, usize)> = vec![(2, 1), (3, 1)];
    for k in 2..=n - 3 {
        pairs.push((k + 2, k));
    }
    let f = ColumnMonomial::from_pairs(pairs);
    let d = f.multidegree(n);
    assert_eq!(d.total(), (n - 2) as i64, "the witness has total degree n - 2");

    let class = ring.class_of_monomial(&f);
    let nonzero = !class.is_zero();
    let mut in_socle = true;
    'socle: for i in 1..n {
        for j in 1..=n {
            if !ring.multiply(&class, (i, j)).is_zero() {
                in_socle = false;
                break 'socle;
            }
        }
    }
    let outside_ideal = !ring.ideal_membership(
        &class,
        &[IdealGen::Variable((n - 1, 1)), IdealGen::Variable((n - 2, 1))],
    );
    Ok(T2Report {
        n,
        applicable: true,
        monomial: Some(f.render()),
        multidegree: Some(d),
        nonzero,
        in_socle,
        outside_ideal,
        confirmed: nonzero && in_socle && outside_ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn md(entries: &[i64]) -> Multidegree {
        Multidegree::new(entries.to_vec())
    }

    fn subspaces_equal(a: &Subspace, b: &Subspace) -> bool {
        // RREF bases are unique per subspace.
        a.dim() == b.dim()
            && a.pivot_cols() == b.pivot_cols()
            && a.basis() == b.basis()
    }

    #[test]
    fn free_monomial_counts_follow_the_product_formula() {
        // Row i contributes C(d_i + cols - 1, cols - 1) multisets.
        assert_eq!(free_monomials(3, 4, &md(&[1, 1, 0])).len(), 16);
        assert_eq!(free_monomials(3, 4, &md(&[2, 0, 0])).len(), 10);
        assert_eq!(free_monomials(2, 3, &md(&[2, 1])).len(), 18);
        assert_eq!(free_monomials(3, 4, &md(&[0, 0, 0])).len(), 1);
        assert!(free_monomials(3, 4, &md(&[-1, 1, 0])).is_empty());
    }

    #[test]
    fn toy_ring_components_vanish_past_degree_one() {
        let pres = IdealPresentation::toy_square_zero();
        let ring = FreePresentedRing::from_presentation(&pres);
        assert_eq!(ring.dim(&md(&[0])), 1);
        assert_eq!(ring.dim(&md(&[1])), 1);
        assert_eq!(ring.dim(&md(&[2])), 0);
        assert_eq!(ring.max_total(), 1);
        assert_eq!(ring.nonzero_multidegrees(), vec![md(&[0]), md(&[1])]);
    }

    #[test]
    fn toy_probe_has_one_genuine_negative_tangent() {
        let pres = IdealPresentation::toy_square_zero();
        let ring = FreePresentedRing::from_presentation(&pres);
        let analysis = tnt_analyze(&pres, &ring, &TangentOptions::default());
        assert!(!analysis.trivial);
        assert_eq!(analysis.dim_t1_negative, 1);
        let by_shift: HashMap<Vec<i64>, (usize, usize)> = analysis
            .shifts
            .iter()
            .map(|r| (r.shift.entries().to_vec(), (r.dim_hom, r.dim_derivations)))
            .collect();
        // d/dx spans the shift -1 piece; the deformation x^2 -> constant
        // survives alone at shift -2.
        assert_eq!(by_shift[&vec![-1]], (1, 1));
        assert_eq!(by_shift[&vec![-2]], (1, 0));
        let witness = analysis.witness.expect("the gap produces a witness");
        assert_eq!(witness.shift, md(&[-2]));
        assert_eq!(witness.images, vec![("x^2".to_string(), "1".to_string())]);
    }

    #[test]
    fn presentation_generator_inventories() {
        let full = IdealPresentation::gc_full(4);
        assert_eq!((full.rows(), full.cols()), (3, 4));
        assert_eq!(full.generators().len(), 3 + 24);

        let elim = IdealPresentation::gc_eliminated(4);
        assert_eq!((elim.rows(), elim.cols()), (3, 3));
        // Row sums substitute to zero; only the quadrics survive.
        assert_eq!(elim.generators().len(), 24);
        // A column-4 quadric expands into a product of two full linear
        // forms: 9 distinct monomials for distinct rows, 6 for a square.
        let term_count = |label: &str| {
            elim.generators()
                .iter()
                .find(|(l, _, _)| l == label)
                .unwrap_or_else(|| panic!("generator {label} exists"))
                .2
                .num_terms()
        };
        assert_eq!(term_count("x1_4*x2_4"), 9);
        assert_eq!(term_count("x1_4*x1_4"), 6);
    }

    #[test]
    fn eliminated_presentation_reproduces_component_dimensions() {
        let ring = Arc::new(GcRing::new(4));
        let elim = FreePresentedRing::from_presentation(&IdealPresentation::gc_eliminated(4));
        for t in 0..4 {
            for d in valid_multidegrees(4, t) {
                assert_eq!(
                    elim.dim(&d),
                    ring.dim(&d),
                    "component {d} must not depend on the presentation"
                );
            }
        }
        // Degrees that the grid supports but the ring kills.
        assert_eq!(elim.dim(&md(&[2, 2, 0])), 0);
        assert_eq!(elim.dim(&md(&[4, 0, 0])), 0);
    }

    #[test]
    fn streaming_and_literal_routes_agree_on_the_toy() {
        let pres = IdealPresentation::toy_square_zero();
        let ring = FreePresentedRing::from_presentation(&pres);
        let ctx = TangentContext::new(1, 1);
        for shift in negative_shifts(&pres, &ring) {
            let fast =
                hom_component(&pres, &ring, &ctx, &shift, &HomOptions::default()).unwrap();
            let slow = hom_component_literal(&pres, &ring, &ctx, &shift).unwrap();
            assert!(subspaces_equal(fast.solutions(), slow.solutions()), "shift {shift}");
        }
    }

    #[test]
    fn streaming_and_literal_routes_agree_on_rank_four_shifts() {
        let ring = Arc::new(GcRing::new(4));
        let pres = IdealPresentation::gc_full(4);
        let target = GcQuotient::plain(Arc::clone(&ring));
        let ctx = TangentContext::new(3, 4);
        for shift in [md(&[-1, 0, 0]), md(&[0, -1, 0]), md(&[-1, -1, 0]), md(&[1, -1, -1])] {
            let fast =
                hom_component(&pres, &target, &ctx, &shift, &HomOptions::default()).unwrap();
            let slow = hom_component_literal(&pres, &target, &ctx, &shift).unwrap();
            assert!(subspaces_equal(fast.solutions(), slow.solutions()), "shift {shift}");
        }
    }

    #[test]
    fn nonnegative_shifts_are_rejected() {
        let pres = IdealPresentation::toy_square_zero();
        let ring = FreePresentedRing::from_presentation(&pres);
        let ctx = TangentContext::new(1, 1);
        assert!(matches!(
            hom_component(&pres, &ring, &ctx, &md(&[0]), &HomOptions::default()),
            Err(Error::InvalidMultidegree { .. })
        ));
        assert!(matches!(
            hom_component_literal(&pres, &ring, &ctx, &md(&[1])),
            Err(Error::InvalidMultidegree { .. })
        ));
    }

    #[test]
    fn early_exit_matches_the_exhaustive_sweep_at_rank_four() {
        let ring = Arc::new(GcRing::new(4));
        let pres = IdealPresentation::gc_full(4);
        let target = GcQuotient::plain(Arc::clone(&ring));
        let ctx = TangentContext::new(3, 4);
        for shift in negative_shifts(&pres, &target) {
            let derivations = derivation_span(&pres, &target, &shift);
            let eager = hom_component(
                &pres,
                &target,
                &ctx,
                &shift,
                &HomOptions { stop_at_dim: Some(derivations.dim()), extra_degree: 0 },
            )
            .unwrap();
            let full =
                hom_component(&pres, &target, &ctx, &shift, &HomOptions::default()).unwrap();
            assert!(full.exhaustive());
            assert!(
                subspaces_equal(eager.solutions(), full.solutions()),
                "early exit changed the solutions at shift {shift}"
            );
        }
    }

    #[test]
    fn extra_constraint_degrees_change_nothing() {
        let ring = Arc::new(GcRing::new(4));
        let pres = IdealPresentation::gc_full(4);
        let target = GcQuotient::plain(Arc::clone(&ring));
        let ctx = TangentContext::new(3, 4);
        for shift in [md(&[-1, 0, 0]), md(&[-1, -1, 0])] {
            let base =
                hom_component(&pres, &target, &ctx, &shift, &HomOptions::default()).unwrap();
            let widened = hom_component(
                &pres,
                &target,
                &ctx,
                &shift,
                &HomOptions { stop_at_dim: None, extra_degree: 1 },
            )
            .unwrap();
            assert!(subspaces_equal(base.solutions(), widened.solutions()));
        }
    }

    #[test]
    fn derivation_span_lives_only_at_single_row_drops() {
        let ring = Arc::new(GcRing::new(4));
        let pres = IdealPresentation::gc_full(4);
        let target = GcQuotient::plain(Arc::clone(&ring));
        let span = derivation_span(&pres, &target, &md(&[-1, 0, 0]));
        assert!(span.dim() > 0);
        assert_eq!(derivation_span(&pres, &target, &md(&[-1, -1, 0])).dim(), 0);
        assert_eq!(derivation_span(&pres, &target, &md(&[1, -1, -1])).dim(), 0);
        assert_eq!(derivation_span(&pres, &target, &md(&[-2, 0, 0])).dim(), 0);
    }

    #[test]
    fn rank_four_ring_has_trivial_negative_tangents() {
        let ring = Arc::new(GcRing::new(4));
        let report = tnt_check(&ring, &[]).unwrap();
        assert!(report.tnt);
        assert_eq!(report.dim_t1_negative, 0);
        assert!(report.witness.is_none());
        assert!(!report.shifts.is_empty());
        for record in &report.shifts {
            assert_eq!(record.dim_hom, record.dim_derivations, "shift {}", record.shift);
        }
        // Derivations genuinely span a positive-dimensional piece somewhere.
        assert!(report.shifts.iter().any(|r| r.dim_derivations > 0));
    }

    #[test]
    fn degree_minus_one_solutions_respect_generator_columns() {
        // In each total-degree -1 shift, the image of a same-column quadric
        // under any solution must be a multiple of the class of a variable
        // from that very column.
        let ring = Arc::new(GcRing::new(4));
        let pres = IdealPresentation::gc_full(4);
        let target = GcQuotient::plain(Arc::clone(&ring));
        let ctx = TangentContext::new(3, 4);
        let mut checked = 0;
        for shift in negative_shifts(&pres, &target) {
            if shift.total() != -1 {
                continue;
            }
            let hom =
                hom_component(&pres, &target, &ctx, &shift, &HomOptions::default()).unwrap();
            for solution in hom.solutions().basis() {
                for (block, (_, _, g)) in hom.layout().iter().zip(pres.generators()) {
                    if block.dim == 0 || g.num_terms() != 1 {
                        continue;
                    }
                    let column = g.terms().next().unwrap().0.vars()[0].1;
                    let slice = SparseVec::from_terms(
                        solution
                            .iter()
                            .filter(|&(c, _)| c >= block.offset && c < block.offset + block.dim)
                            .map(|(c, v)| (c - block.offset, v.clone())),
                    );
                    if slice.is_zero() {
                        continue;
                    }
                    // The target is a single-row component, so the column
                    // pins one candidate variable class.
                    let row = (1..4)
                        .find(|&i| block.target.get(i) == 1)
                        .expect("a degree-one target has one active row");
                    let candidate = target.basis_product_nf(
                        &Multidegree::zero(4),
                        0,
                        &FreeMonomial::var((row, column)),
                    );
                    let mut ech = Echelon::new(block.dim);
                    ech.insert(candidate);
                    assert!(
                        ech.contains(&slice),
                        "image of {} escapes its column at shift {shift}",
                        block.label
                    );
                    checked += 1;
                }
            }
        }
        assert!(checked > 0, "the sweep must actually test some quadric images");
    }

    #[test]
    fn quotient_components_shrink_by_the_ideal_span() {
        let ring = Arc::new(GcRing::new(4));
        let d = md(&[1, 1, 0]);
        let socle = socle_basis_min_degree(&ring, &d).unwrap();
        assert_eq!(socle.len(), 2);
        let quotient = GcQuotient::new(Arc::clone(&ring), socle.clone());
        assert_eq!(quotient.dim(&d), ring.dim(&d) - 2);
        for s in &socle {
            assert!(quotient.project(s).is_zero());
        }
        // Socle generators multiply to zero, so higher components survive.
        assert_eq!(quotient.dim(&md(&[1, 1, 1])), ring.dim(&md(&[1, 1, 1])));
    }

    #[test]
    fn quotient_workflow_rank_four_with_twelve_generators() {
        let ring = Arc::new(GcRing::new(4));
        let report = quotient_workflow(&ring, &QuotientSelection::Count(12)).unwrap();
        assert_eq!(report.r, 12);
        assert_eq!(report.hilbert, vec![1, 9, 9, 1]);
        assert_eq!(report.expected_hilbert, Some(vec![1, 9, 9, 1]));
        assert_eq!(report.hilbert_matches, Some(true));
        assert!(report.low_socle.is_none());
        let tangent = report.tangent.expect("the sweep ran");
        assert!(tangent.tnt);
        assert_eq!(tangent.dim_t1_negative, 0);
        assert_eq!(tangent.quotient.len(), 12);
    }

    #[test]
    fn full_minimal_socle_equals_the_rank_four_family() {
        let ring = Arc::new(GcRing::new(4));
        let full = quotient_workflow(&ring, &QuotientSelection::FullMinimalSocle).unwrap();
        assert_eq!(full.r, 12);
        assert_eq!(full.hilbert, vec![1, 9, 9, 1]);
        assert_eq!(full.hilbert_matches, Some(true));
        assert!(full.tangent.expect("the sweep ran").tnt);
    }

    #[test]
    fn quotient_selection_errors() {
        let ring = Arc::new(GcRing::new(4));
        assert!(matches!(
            quotient_workflow(&ring, &QuotientSelection::Count(100)),
            Err(Error::Unsupported { .. })
        ));
        let seven = Arc::new(GcRing::new(7));
        assert!(matches!(
            quotient_workflow(&seven, &QuotientSelection::Count(1)),
            Err(Error::Unsupported { .. })
        ));
        assert!(matches!(default_selection_multidegrees(3), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn non_socle_quotient_vectors_are_rejected_with_a_witness() {
        let ring = Arc::new(GcRing::new(4));
        let not_socle = ring.variable((1, 2));
        let err = tnt_check(&ring, &[not_socle]).unwrap_err();
        match err {
            Error::NotContained { witness } => assert!(witness.contains("not in the socle")),
            other => panic!("expected a socle rejection, got {other}"),
        }
    }

    #[test]
    fn dependent_quotient_vectors_are_rejected() {
        let ring = Arc::new(GcRing::new(4));
        let socle = socle_basis_min_degree(&ring, &md(&[1, 1, 0])).unwrap();
        let repeat = vec![socle[0].clone(), socle[1].clone(), socle[0].clone()];
        assert!(matches!(
            tnt_check(&ring, &repeat),
            Err(Error::Unsupported { detail }) if detail.contains("depends linearly")
        ));
    }

    #[test]
    fn obstruction_witness_confirmed_at_rank_five() {
        let ring = GcRing::new(5);
        let report = t2_witness(&ring).unwrap();
        assert!(report.applicable);
        assert_eq!(report.multidegree, Some(md(&[2, 1, 0, 0])));
        assert!(report.nonzero);
        assert!(report.in_socle);
        assert!(report.outside_ideal);
        assert!(report.confirmed);
        assert_eq!(report.monomial.as_deref(), Some("x_1_2*x_1_3*x_2_4"));
    }

    #[test]
    fn obstruction_witness_is_inapplicable_at_rank_four() {
        let ring = GcRing::new(4);
        let report = t2_witness(&ring).unwrap();
        assert!(!report.applicable);
        assert!(!report.confirmed);
        assert!(report.monomial.is_none());
        assert!(matches!(t2_witness(&GcRing::new(3)), Err(Error::Unsupported { .. })));
    }

    #[test]
    fn degree_two_socle_quotient_kills_exactly_the_socle() {
        // Quotienting by the full degree-2 socle leaves Ann(m)_2 empty but
        // keeps the rest of the multiplication intact.
        let ring = Arc::new(GcRing::new(4));
        let mut gens = Vec::new();
        for d in valid_multidegrees(4, 2) {
            let socle = ring.socle_component(&d);
            for b in socle.basis() {
                gens.push(RingVector::new(d.clone(), b.clone()));
            }
        }
        assert_eq!(gens.len(), 12);
        let quotient = GcQuotient::new(Arc::clone(&ring), gens);
        for d in valid_multidegrees(4, 1) {
            assert_eq!(quotient.socle_component(&d).dim(), 0, "no socle may appear below");
        }
        let total_two: usize =
            valid_multidegrees(4, 2).iter().map(|d| quotient.dim(d)).sum();
        assert_eq!(total_two, 9);
    }
}
