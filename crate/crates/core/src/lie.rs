//! Lie-algebra arithmetic and the structural checks underlying reductive
//! homogeneous spaces: antisymmetry/Jacobi validation, the `g = h ⊕ m`
//! splitting, natural reductivity, drift admissibility and nilpotency.
//!
//! Conventions: the basis is adapted to the splitting — the first `h_dim`
//! basis vectors span the isotropy subalgebra `h`, the remaining ones span
//! the tangent model `m`. All indices are 0-based internally.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};

/// Tolerance for identities expected to hold exactly (antisymmetry,
/// subalgebra/reductivity residuals, Jacobi on rational input).
pub const STRUCT_TOL: f64 = 1e-12;
/// Tolerance for identities derived through floating-point arithmetic.
pub const DERIVED_TOL: f64 = 1e-10;
/// Singular-value threshold for rank decisions.
pub const RANK_TOL: f64 = 1e-10;

/// A finite-dimensional real Lie algebra given by structure constants
/// `c^k_{ij}` over a labeled basis: `[e_i, e_j] = Σ_k c^k_{ij} e_k`.
#[derive(Debug, Clone, PartialEq)]
pub struct LieAlgebraSpec {
    name: String,
    dim: usize,
    basis_labels: Vec<String>,
    // dense n^3 tensor, index (i, j, k) -> (i*n + j)*n + k
    c: Vec<f64>,
}

/// One structural defect found by [`LieAlgebraSpec::validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// `c^k_{ij} + c^k_{ji}` is not zero.
    Antisymmetry { i: usize, j: usize, k: usize, residual: f64 },
    /// Component `component` of the Jacobi cyclic sum over `(e_i, e_j, e_k)`
    /// is not zero.
    Jacobi { i: usize, j: usize, k: usize, component: usize, residual: f64 },
}

/// Outcome of [`LieAlgebraSpec::validate`]; empty means valid.
#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Result of the lower-central-series computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Nilpotency {
    Class(usize),
    NotNilpotent,
}

impl LieAlgebraSpec {
    /// Builds an algebra from sparse bracket entries `(i, j, k, c)` meaning
    /// `c^k_{ij} = c`, with `i < j` required. Antisymmetric counterparts are
    /// filled in automatically.
    pub fn from_brackets(
        name: impl Into<String>,
        dim: usize,
        entries: &[(usize, usize, usize, f64)],
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input("algebra dimension must be positive".into()));
        }
        let mut c = vec![0.0; dim * dim * dim];
        let mut seen = std::collections::BTreeSet::new();
        for &(i, j, k, v) in entries {
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Input(format!(
                    "structure constant index ({},{},{}) out of range for dim {}",
                    i + 1,
                    j + 1,
                    k + 1,
                    dim
                )));
            }
            if i >= j {
                return Err(Error::Input(format!(
                    "structure constant ({},{},{}) must have i < j",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if !seen.insert((i, j, k)) {
                return Err(Error::Input(format!(
                    "duplicate structure constant ({},{},{})",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            c[(i * dim + j) * dim + k] = v;
            c[(j * dim + i) * dim + k] = -v;
        }
        Ok(Self {
            name: name.into(),
            dim,
            basis_labels: default_labels(dim),
            c,
        })
    }

    /// Builds an algebra from a raw dense `c^k_{ij}` tensor without imposing
    /// antisymmetry. Used to construct deliberately defective algebras for
    /// validation tests.
    pub fn from_dense(name: impl Into<String>, dim: usize, c: Vec<f64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::Input("algebra dimension must be positive".into()));
        }
        if c.len() != dim * dim * dim {
            return Err(Error::Input(format!(
                "dense tensor length {} does not match dim^3 = {}",
                c.len(),
                dim * dim * dim
            )));
        }
        Ok(Self {
            name: name.into(),
            dim,
            basis_labels: default_labels(dim),
            c,
        })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.dim {
            return Err(Error::Input(format!(
                "expected {} basis labels, got {}",
                self.dim,
                labels.len()
            )));
        }
        self.basis_labels = labels;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_labels(&self) -> &[String] {
        &self.basis_labels
    }

    /// Structure constant `c^k_{ij}`.
    pub fn c(&self, i: usize, j: usize, k: usize) -> f64 {
        self.c[(i * self.dim + j) * self.dim + k]
    }

    /// Bracket of basis vectors: `[e_i, e_j]` as a full g-vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> DVector<f64> {
        DVector::from_fn(self.dim, |k, _| self.c(i, j, k))
    }

    /// Bilinear bracket `[u, v] = Σ u_i v_j c^k_{ij} e_k` of full g-vectors.
    pub fn bracket(&self, u: &DVector<f64>, v: &DVector<f64>) -> Result<DVector<f64>> {
        let n = self.dim;
        if u.len() != n || v.len() != n {
            return Err(Error::Input(format!(
                "bracket operands must have length {}, got {} and {}",
                n,
                u.len(),
                v.len()
            )));
        }
        let mut out = DVector::zeros(n);
        for i in 0..n {
            let ui = u[i];
            if ui == 0.0 {
                continue;
            }
            for j in 0..n {
                let w = ui * v[j];
                if w == 0.0 {
                    continue;
                }
                for k in 0..n {
                    out[k] += w * self.c(i, j, k);
                }
            }
        }
        Ok(out)
    }

    /// Lists every antisymmetry and Jacobi violation with indices and
    /// residual magnitudes. Never fails; an empty report means valid.
    pub fn validate(&self) -> ValidationReport {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let r = self.c(i, j, k) + self.c(j, i, k);
                    if r.abs() > STRUCT_TOL {
                        violations.push(Violation::Antisymmetry { i, j, k, residual: r });
                    }
                }
            }
        }
        // Jacobi: [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] = 0
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for m in 0..n {
                        let mut r = 0.0;
                        for l in 0..n {
                            r += self.c(i, j, l) * self.c(l, k, m)
                                + self.c(j, k, l) * self.c(l, i, m)
                                + self.c(k, i, l) * self.c(l, j, m);
                        }
                        if r.abs() > STRUCT_TOL {
                            violations.push(Violation::Jacobi {
                                i,
                                j,
                                k,
                                component: m,
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(|&v| v.abs() <= STRUCT_TOL)
    }

    /// Nilpotency class via the lower central series `g_1 = g`,
    /// `g_{k+1} = [g, g_k]`, with span ranks decided by singular values.
    pub fn nilpotency_class(&self) -> Nilpotency {
        let n = self.dim;
        // columns spanning the current term of the series
        let mut span = DMatrix::<f64>::identity(n, n);
        let mut rank = n;
        for class in 1..=n {
            let mut cols: Vec<DVector<f64>> = Vec::new();
            for i in 0..n {
                let ei = DVector::from_fn(n, |k, _| if k == i { 1.0 } else { 0.0 });
                for j in 0..span.ncols() {
                    let col = DVector::from_column_slice(span.column(j).as_slice());
                    let b = self.bracket(&ei, &col).expect("dimensions fixed");
                    if b.norm() > RANK_TOL {
                        cols.push(b);
                    }
                }
            }
            if cols.is_empty() {
                return Nilpotency::Class(class);
            }
            let next = DMatrix::from_columns(&cols);
            let next_rank = matrix_rank(&next);
            if next_rank == 0 {
                return Nilpotency::Class(class);
            }
            if next_rank >= rank {
                return Nilpotency::NotNilpotent;
            }
            rank = next_rank;
            span = next;
        }
        Nilpotency::NotNilpotent
    }
}

fn default_labels(dim: usize) -> Vec<String> {
    (1..=dim).map(|i| format!("e{i}")).collect()
}

fn matrix_rank(m: &DMatrix<f64>) -> usize {
    m.clone()
        .svd(false, false)
        .singular_values
        .iter()
        .filter(|&&s| s > RANK_TOL)
        .count()
}

/// Which part of the splitting `g = h ⊕ m` to project onto.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    H,
    M,
}

/// Outcome of the naturally-reductive identity check
/// `B(X,[Z,Y]_m) + B([Z,X]_m,Y) = 0` over all basis triples of `m`.
#[derive(Debug, Clone, Copy)]
pub struct NatReductiveCheck {
    pub holds: bool,
    pub max_residual: f64,
}

/// Result of the three drift admissibility checks.
#[derive(Debug, Clone, Copy)]
pub struct AdmissibilityReport {
    /// (i) `g(X,X) < 1`.
    pub norm_bound: bool,
    pub x_norm_sq: f64,
    /// (ii) `[h, X] = 0` (infinitesimal ad(H)-invariance, connected H).
    pub ad_invariant: bool,
    pub max_h_bracket: f64,
    /// (iii) `[U, X]_m = 0` for every `U ∈ m` — the parallel-drift condition
    /// on a naturally reductive space.
    pub parallel: bool,
    pub max_m_bracket: f64,
}

impl AdmissibilityReport {
    /// All three checks pass.
    pub fn all(&self) -> bool {
        self.norm_bound && self.ad_invariant && self.parallel
    }

    /// The checks enforced at Randers-metric construction: norm bound and
    /// ad(H)-invariance. Parallelism is only demanded by operations that
    /// need Berwald type.
    pub fn admissible(&self) -> bool {
        self.norm_bound && self.ad_invariant
    }
}

/// A reductive homogeneous space: algebra, adapted splitting and inner
/// product on `m`. The first `h_dim` basis vectors span `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductiveSpace {
    algebra: LieAlgebraSpec,
    h_dim: usize,
    gram: DMatrix<f64>,
}

impl ReductiveSpace {
    pub fn new(algebra: LieAlgebraSpec, h_dim: usize, gram: DMatrix<f64>) -> Result<Self> {
        let n = algebra.dim();
        if h_dim >= n {
            return Err(Error::Input(format!(
                "h_dim = {h_dim} leaves m empty (dim = {n})"
            )));
        }
        let m_dim = n - h_dim;
        if gram.nrows() != m_dim || gram.ncols() != m_dim {
            return Err(Error::Input(format!(
                "gram must be {m_dim}x{m_dim}, got {}x{}",
                gram.nrows(),
                gram.ncols()
            )));
        }
        let report = algebra.validate();
        if !report.is_valid() {
            return Err(Error::Input(format!(
                "algebra fails structural validation ({} violations)",
                report.violations.len()
            )));
        }
        for i in 0..m_dim {
            for j in (i + 1)..m_dim {
                if (gram[(i, j)] - gram[(j, i)]).abs() > STRUCT_TOL {
                    return Err(Error::Input(format!(
                        "gram is not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let eig = gram.clone().symmetric_eigen();
        if let Some(min) = eig.eigenvalues.iter().cloned().reduce(f64::min) {
            if min <= 0.0 {
                return Err(Error::Input(format!(
                    "gram is not positive definite (min eigenvalue {min:.3e})"
                )));
            }
        }
        // h must be a subalgebra: [h,h] ⊆ h
        for a in 0..h_dim {
            for b in (a + 1)..h_dim {
                for k in h_dim..n {
                    if algebra.c(a, b, k).abs() > STRUCT_TOL {
                        return Err(Error::Input(format!(
                            "[h,h] escapes h: c^{}_{{{},{}}} = {}",
                            k + 1,
                            a + 1,
                            b + 1,
                            algebra.c(a, b, k)
                        )));
                    }
                }
            }
        }
        // reductivity (2'): [h,m] ⊆ m
        for a in 0..h_dim {
            for i in h_dim..n {
                for k in 0..h_dim {
                    if algebra.c(a, i, k).abs() > STRUCT_TOL {
                        return Err(Error::Input(format!(
                            "[h,m] escapes m: c^{}_{{{},{}}} = {}",
                            k + 1,
                            a + 1,
                            i + 1,
                            algebra.c(a, i, k)
                        )));
                    }
                }
            }
        }
        Ok(Self { algebra, h_dim, gram })
    }

    pub fn algebra(&self) -> &LieAlgebraSpec {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn h_dim(&self) -> usize {
        self.h_dim
    }

    pub fn m_dim(&self) -> usize {
        self.dim() - self.h_dim
    }

    pub fn gram(&self) -> &DMatrix<f64> {
        &self.gram
    }

    /// Coordinate projection onto `h` or `m`; the complement is zeroed, so
    /// `project(v, H) + project(v, M) = v` exactly.
    pub fn project(&self, v: &DVector<f64>, part: Part) -> Result<DVector<f64>> {
        let n = self.dim();
        if v.len() != n {
            return Err(Error::Input(format!(
                "projection operand must have length {n}, got {}",
                v.len()
            )));
        }
        let keep = |k: usize| match part {
            Part::H => k < self.h_dim,
            Part::M => k >= self.h_dim,
        };
        Ok(DVector::from_fn(n, |k, _| if keep(k) { v[k] } else { 0.0 }))
    }

    /// Extracts the `m`-coordinates (length `m_dim`) of a full g-vector.
    pub fn m_coords(&self, v: &DVector<f64>) -> DVector<f64> {
        DVector::from_fn(self.m_dim(), |i, _| v[self.h_dim + i])
    }

    /// Lifts `m`-coordinates to a full g-vector with zero `h`-part.
    pub fn embed_m(&self, v: &DVector<f64>) -> DVector<f64> {
        let n = self.dim();
        DVector::from_fn(n, |k, _| {
            if k >= self.h_dim {
                v[k - self.h_dim]
            } else {
                0.0
            }
        })
    }

    /// Inner product of `m`-coordinate vectors via the Gram matrix.
    pub fn inner(&self, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
        (u.transpose() * &self.gram * v)[(0, 0)]
    }

    /// `[u, v]` for `m`-coordinate operands, returned as a full g-vector.
    pub fn bracket_m(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        let uf = self.embed_m(u);
        let vf = self.embed_m(v);
        self.algebra.bracket(&uf, &vf).expect("embedded lengths match")
    }

    /// `[u, v]_m` for `m`-coordinate operands, in `m`-coordinates.
    pub fn bracket_m_proj(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        self.m_coords(&self.bracket_m(u, v))
    }

    /// Evaluates `B(X,[Z,Y]_m) + B([Z,X]_m,Y)` over all ordered basis
    /// triples of `m`.
    pub fn check_naturally_reductive(&self) -> NatReductiveCheck {
        let md = self.m_dim();
        let mut max_residual: f64 = 0.0;
        for x in 0..md {
            let ex = unit(md, x);
            for y in 0..md {
                let ey = unit(md, y);
                for z in 0..md {
                    let ez = unit(md, z);
                    let zy = self.bracket_m_proj(&ez, &ey);
                    let zx = self.bracket_m_proj(&ez, &ex);
                    let r = self.inner(&ex, &zy) + self.inner(&zx, &ey);
                    max_residual = max_residual.max(r.abs());
                }
            }
        }
        NatReductiveCheck {
            holds: max_residual <= DERIVED_TOL,
            max_residual,
        }
    }

    /// Runs the three drift checks: norm bound, ad(H)-invariance, and the
    /// parallel condition `[U, X]_m = 0` for all `U ∈ m`.
    pub fn check_drift_admissible(&self, x: &DriftVector) -> Result<AdmissibilityReport> {
        let md = self.m_dim();
        if x.coords.len() != md {
            return Err(Error::Input(format!(
                "drift vector must have length {md}, got {}",
                x.coords.len()
            )));
        }
        let x_norm_sq = self.inner(&x.coords, &x.coords);
        let xf = self.embed_m(&x.coords);
        let mut max_h_bracket: f64 = 0.0;
        for a in 0..self.h_dim {
            let ea = unit(self.dim(), a);
            let b = self.algebra.bracket(&ea, &xf)?;
            max_h_bracket = max_h_bracket.max(b.amax());
        }
        let mut max_m_bracket: f64 = 0.0;
        for i in 0..md {
            let eu = unit(md, i);
            let b = self.bracket_m_proj(&eu, &x.coords);
            max_m_bracket = max_m_bracket.max(b.amax());
        }
        Ok(AdmissibilityReport {
            norm_bound: x_norm_sq < 1.0,
            x_norm_sq,
            ad_invariant: max_h_bracket <= STRUCT_TOL,
            max_h_bracket,
            parallel: max_m_bracket <= STRUCT_TOL,
            max_m_bracket,
        })
    }
}

/// The drift vector `X ∈ m` of a Randers metric, in `m`-coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct DriftVector {
    pub coords: DVector<f64>,
}

impl DriftVector {
    pub fn new(coords: DVector<f64>) -> Self {
        Self { coords }
    }

    pub fn zero(m_dim: usize) -> Self {
        Self {
            coords: DVector::zeros(m_dim),
        }
    }
}

/// Standard basis vector `e_idx` of the given length.
pub fn unit(len: usize, idx: usize) -> DVector<f64> {
    DVector::from_fn(len, |k, _| if k == idx { 1.0 } else { 0.0 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;
    use approx::assert_relative_eq;

    #[test]
    fn bracket_abelian_vanishes() {
        let rs = spaces::abelian(3).unwrap();
        let e1 = unit(3, 0);
        let e2 = unit(3, 1);
        let b = rs.algebra().bracket(&e1, &e2).unwrap();
        assert_eq!(b.amax(), 0.0);
    }

    #[test]
    fn bracket_heisenberg_and_antisymmetry() {
        let rs = spaces::heisenberg3();
        let e1 = unit(3, 0);
        let e2 = unit(3, 1);
        let b = rs.algebra().bracket(&e1, &e2).unwrap();
        assert_eq!(b, unit(3, 2));
        let b2 = rs.algebra().bracket(&e2, &e1).unwrap();
        assert_eq!(b2, -unit(3, 2));
    }

    #[test]
    fn bracket_dimension_mismatch() {
        let rs = spaces::heisenberg3();
        let err = rs
            .algebra()
            .bracket(&DVector::zeros(2), &DVector::zeros(3))
            .unwrap_err();
        assert!(matches!(err, Error::Input(_)));
    }

    #[test]
    fn validate_standard_algebras() {
        assert!(spaces::heisenberg3().algebra().validate().is_valid());
        assert!(spaces::su2().algebra().validate().is_valid());
    }

    #[test]
    fn validate_flags_broken_antisymmetry() {
        // heisenberg3 with c^3_{21} corrupted so it is no longer -c^3_{12}
        let n = 3;
        let mut c = vec![0.0; 27];
        c[(0 * n + 1) * n + 2] = 1.0;
        c[(1 * n + 0) * n + 2] = 1.0; // should be -1
        let a = LieAlgebraSpec::from_dense("broken", 3, c).unwrap();
        let report = a.validate();
        assert_eq!(report.violations.len(), 1);
        match &report.violations[0] {
            Violation::Antisymmetry { i, j, k, residual } => {
                assert_eq!((*i, *j, *k), (0, 1, 2));
                assert_relative_eq!(*residual, 2.0);
            }
            other => panic!("unexpected violation {other:?}"),
        }
    }

    #[test]
    fn duplicate_bracket_entry_rejected() {
        let err = LieAlgebraSpec::from_brackets(
            "dup",
            3,
            &[(0, 1, 2, 1.0), (0, 1, 2, 2.0)],
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate structure constant (1,2,3)"));
    }

    #[test]
    fn projection_splits_exactly() {
        let rs = spaces::toy_gh4();
        let v = DVector::from_vec(vec![1.0, 2.0, 3.0, 4.0]);
        let h = rs.project(&v, Part::H).unwrap();
        let m = rs.project(&v, Part::M).unwrap();
        assert_eq!(&h + &m, v);
        assert_eq!(h, DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]));
        // idempotence
        assert_eq!(rs.project(&m, Part::M).unwrap(), m);
        assert_eq!(rs.project(&m, Part::H).unwrap().amax(), 0.0);
    }

    #[test]
    fn projection_with_trivial_h() {
        let rs = spaces::heisenberg3();
        let v = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        assert_eq!(rs.project(&v, Part::H).unwrap().amax(), 0.0);
        assert_eq!(rs.project(&v, Part::M).unwrap(), v);
    }

    #[test]
    fn naturally_reductive_checks() {
        let su2 = spaces::su2();
        let check = su2.check_naturally_reductive();
        assert!(check.holds);
        assert_eq!(check.max_residual, 0.0);

        let heis = spaces::heisenberg3();
        let check = heis.check_naturally_reductive();
        assert!(!check.holds);
        // triple (X,Y,Z) = (e3,e2,e1): B(e3,[e1,e2]) = 1
        assert_relative_eq!(check.max_residual, 1.0);

        let ab = spaces::abelian(4).unwrap();
        assert!(ab.check_naturally_reductive().holds);
    }

    #[test]
    fn drift_admissibility() {
        let (rs, x) = spaces::su2_x_r(0.5).unwrap();
        let rep = rs.check_drift_admissible(&x).unwrap();
        assert!(rep.norm_bound && rep.ad_invariant && rep.parallel);
        assert_relative_eq!(rep.x_norm_sq, 0.25);

        let su2 = spaces::su2();
        let x = DriftVector::new(DVector::from_vec(vec![0.5, 0.0, 0.0]));
        let rep = su2.check_drift_admissible(&x).unwrap();
        assert!(rep.norm_bound && rep.ad_invariant);
        assert!(!rep.parallel); // [e2, e1] = -e3 != 0

        let zero = DriftVector::zero(3);
        let rep = su2.check_drift_admissible(&zero).unwrap();
        assert!(rep.all());
    }

    #[test]
    fn nilpotency_classification() {
        assert_eq!(
            spaces::abelian(3).unwrap().algebra().nilpotency_class(),
            Nilpotency::Class(1)
        );
        assert!(spaces::abelian(3).unwrap().algebra().is_abelian());
        assert_eq!(
            spaces::heisenberg3().algebra().nilpotency_class(),
            Nilpotency::Class(2)
        );
        assert!(!spaces::heisenberg3().algebra().is_abelian());
        assert_eq!(
            spaces::su2().algebra().nilpotency_class(),
            Nilpotency::NotNilpotent
        );
    }

    #[test]
    fn degenerate_constructions_rejected() {
        assert!(LieAlgebraSpec::from_brackets("empty", 0, &[]).is_err());
        // p = n leaves m empty
        let a = LieAlgebraSpec::from_brackets("ab", 2, &[]).unwrap();
        assert!(ReductiveSpace::new(a, 2, DMatrix::zeros(0, 0)).is_err());
    }

    #[test]
    fn indefinite_gram_rejected() {
        let a = LieAlgebraSpec::from_brackets("ab", 2, &[]).unwrap();
        let gram = DMatrix::from_row_slice(2, 2, &[1.0, 0.0, 0.0, -1.0]);
        assert!(ReductiveSpace::new(a, 0, gram).is_err());
    }
}
