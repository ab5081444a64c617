//! Riemannian curvature machinery.
//!
//! Two independent routes live here:
//!
//! * the Koszul-formula Levi-Civita connection for left-invariant metrics on
//!   Lie groups (`h_dim = 0`) and the curvature/sectional oracles built from
//!   it — the crate's ground truth;
//! * the closed-form curvature tensor of naturally reductive spaces and the
//!   derived flag-numerator vector `alpha`, valid for any `h_dim`.
//!
//! Sign conventions, fixed once: `R(U,V)W = ∇_U ∇_V W − ∇_V ∇_U W −
//! ∇_{[U,V]} W` and `K(Y,U) = g(R(U,Y)Y, U) / (g(U,U)g(Y,Y) − g(U,Y)²)`,
//! which makes compact bi-invariant groups positively curved.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::lie::{unit, Part, ReductiveSpace};

/// Relative Gram-determinant cutoff below which two vectors are treated as
/// linearly dependent.
pub const DEGENERATE_FLAG_TOL: f64 = 1e-14;

/// Levi-Civita connection coefficients `Γ^k_{ij}` for a left-invariant
/// metric, with `∇_{e_i} e_j = Σ_k Γ^k_{ij} e_k`.
#[derive(Debug, Clone)]
pub struct ConnectionTable {
    dim: usize,
    // coeffs[i * dim + j] = ∇_{e_i} e_j
    coeffs: Vec<DVector<f64>>,
}

impl ConnectionTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `∇_{e_i} e_j` as a coordinate vector.
    pub fn gamma(&self, i: usize, j: usize) -> &DVector<f64> {
        &self.coeffs[i * self.dim + j]
    }

    /// Bilinear extension `∇_u v` for constant-coefficient (left-invariant)
    /// fields.
    pub fn nabla(&self, u: &DVector<f64>, v: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.dim);
        for i in 0..self.dim {
            if u[i] == 0.0 {
                continue;
            }
            for j in 0..self.dim {
                let w = u[i] * v[j];
                if w != 0.0 {
                    out += self.gamma(i, j) * w;
                }
            }
        }
        out
    }
}

fn require_lie_group(rs: &ReductiveSpace, what: &str) -> Result<()> {
    if rs.h_dim() != 0 {
        return Err(Error::Unsupported(format!(
            "{what} is defined only for Lie groups (h_dim = 0), got h_dim = {}",
            rs.h_dim()
        )));
    }
    Ok(())
}

/// Solves the Koszul system `2 g(∇_{e_i} e_j, e_k) = g([e_i,e_j],e_k) −
/// g([e_j,e_k],e_i) + g([e_k,e_i],e_j)` for every pair `(i,j)`.
pub fn levi_civita_table(rs: &ReductiveSpace) -> Result<ConnectionTable> {
    require_lie_group(rs, "the Koszul oracle")?;
    let n = rs.dim();
    let chol = rs
        .gram()
        .clone()
        .cholesky()
        .ok_or_else(|| Error::Input("gram is not positive definite".into()))?;
    let mut coeffs = Vec::with_capacity(n * n);
    for i in 0..n {
        let ei = unit(n, i);
        for j in 0..n {
            let ej = unit(n, j);
            let bij = rs.algebra().bracket(&ei, &ej)?;
            let mut rhs = DVector::zeros(n);
            for k in 0..n {
                let ek = unit(n, k);
                let bjk = rs.algebra().bracket(&ej, &ek)?;
                let bki = rs.algebra().bracket(&ek, &ei)?;
                rhs[k] = 0.5 * (rs.inner(&bij, &ek) - rs.inner(&bjk, &ei) + rs.inner(&bki, &ej));
            }
            coeffs.push(chol.solve(&rhs));
        }
    }
    Ok(ConnectionTable { dim: n, coeffs })
}

/// Curvature tensor of the Koszul connection on left-invariant fields:
/// `R(u,v)w = ∇_u ∇_v w − ∇_v ∇_u w − ∇_{[u,v]} w`.
pub fn curvature_oracle(
    rs: &ReductiveSpace,
    table: &ConnectionTable,
    u: &DVector<f64>,
    v: &DVector<f64>,
    w: &DVector<f64>,
) -> Result<DVector<f64>> {
    require_lie_group(rs, "the curvature oracle")?;
    let uv = rs.algebra().bracket(u, v)?;
    Ok(table.nabla(u, &table.nabla(v, w)) - table.nabla(v, &table.nabla(u, w)) - table.nabla(&uv, w))
}

/// Sectional curvature of the plane spanned by `y` and `u`, via the Koszul
/// oracle, sharing a precomputed connection table.
pub fn sectional_oracle_with(
    rs: &ReductiveSpace,
    table: &ConnectionTable,
    y: &DVector<f64>,
    u: &DVector<f64>,
) -> Result<f64> {
    let gyy = rs.inner(y, y);
    let guu = rs.inner(u, u);
    let gyu = rs.inner(y, u);
    let den = gyy * guu - gyu * gyu;
    if den <= DEGENERATE_FLAG_TOL * gyy * guu {
        return Err(Error::DegenerateFlag(
            "sectional curvature needs linearly independent vectors".into(),
        ));
    }
    let r = curvature_oracle(rs, table, u, y, y)?;
    Ok(rs.inner(&r, u) / den)
}

/// Sectional curvature with a freshly computed connection table.
pub fn sectional_oracle(rs: &ReductiveSpace, y: &DVector<f64>, u: &DVector<f64>) -> Result<f64> {
    let table = levi_civita_table(rs)?;
    sectional_oracle_with(rs, &table, y, u)
}

/// Closed-form curvature tensor of a naturally reductive space on
/// `m`-coordinate inputs:
///
/// `(R(u,v)w)_0 = ¼[u,[v,w]_m]_m − ¼[v,[u,w]_m]_m − ½[[u,v]_m,w]_m −
/// [[u,v]_h,w]`.
///
/// Refuses when the space is not naturally reductive unless `force` is set.
pub fn curvature_nat_reductive(
    rs: &ReductiveSpace,
    u: &DVector<f64>,
    v: &DVector<f64>,
    w: &DVector<f64>,
    force: bool,
) -> Result<DVector<f64>> {
    let check = rs.check_naturally_reductive();
    if !check.holds && !force {
        return Err(Error::HypothesisViolation(format!(
            "space is not naturally reductive (max residual {:.3e}); \
             pass force to evaluate anyway",
            check.max_residual
        )));
    }
    let vw = rs.bracket_m_proj(v, w);
    let uw = rs.bracket_m_proj(u, w);
    let uv_full = rs.bracket_m(u, v);
    let uv_m = rs.m_coords(&uv_full);
    let uv_h = rs.project(&uv_full, Part::H)?;
    let wh_full = rs.embed_m(w);
    let t4 = rs.m_coords(&rs.algebra().bracket(&uv_h, &wh_full)?);
    Ok(rs.bracket_m_proj(u, &vw) * 0.25
        - rs.bracket_m_proj(v, &uw) * 0.25
        - rs.bracket_m_proj(&uv_m, w) * 0.5
        - t4)
}

/// Which version of the flag-numerator vector `alpha` to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlphaVariant {
    /// The published expression, verbatim: `½[[u,y]_m,y]_m + [y,[y,u]_h]`.
    PaperLiteral,
    /// `R(u,y)y` from [`curvature_nat_reductive`], whose sign and
    /// coefficients are pinned by matching the Koszul sectional curvature in
    /// the drift-free case. Expands to `−¼[[u,y]_m,y]_m − [y,[y,u]_h]`.
    OracleConsistent,
}

/// The vector entering the flag-curvature numerator, in `m`-coordinates.
pub fn alpha(
    rs: &ReductiveSpace,
    y: &DVector<f64>,
    u: &DVector<f64>,
    variant: AlphaVariant,
    force: bool,
) -> Result<DVector<f64>> {
    match variant {
        AlphaVariant::OracleConsistent => curvature_nat_reductive(rs, u, y, y, force),
        AlphaVariant::PaperLiteral => {
            let check = rs.check_naturally_reductive();
            if !check.holds && !force {
                return Err(Error::HypothesisViolation(format!(
                    "space is not naturally reductive (max residual {:.3e})",
                    check.max_residual
                )));
            }
            let uy_m = rs.bracket_m_proj(u, y);
            let t1 = rs.bracket_m_proj(&uy_m, y) * 0.5;
            let yu_full = rs.bracket_m(y, u);
            let yu_h = rs.project(&yu_full, Part::H)?;
            let yf = rs.embed_m(y);
            let t2 = rs.m_coords(&rs.algebra().bracket(&yf, &yu_h)?);
            Ok(t1 + t2)
        }
    }
}

/// Curvature of the canonical affine connection of the second kind:
/// `R(u,v)w = −[[u,v]_h, w]` on full g-vectors. Identically zero when
/// `h_dim = 0`.
pub fn curvature_second_kind(
    rs: &ReductiveSpace,
    u: &DVector<f64>,
    v: &DVector<f64>,
    w: &DVector<f64>,
) -> Result<DVector<f64>> {
    let uv = rs.algebra().bracket(u, v)?;
    let uv_h = rs.project(&uv, Part::H)?;
    Ok(-rs.algebra().bracket(&uv_h, w)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces;
    use approx::assert_relative_eq;

    #[test]
    fn abelian_connection_vanishes() {
        let rs = spaces::abelian(3).unwrap();
        let table = levi_civita_table(&rs).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(table.gamma(i, j).amax(), 0.0);
            }
        }
    }

    #[test]
    fn su2_connection_is_half_bracket() {
        let rs = spaces::su2();
        let table = levi_civita_table(&rs).unwrap();
        // ad-invariant metric: ∇_U V = ½[U,V]
        assert_relative_eq!(
            table.gamma(0, 1),
            &(unit(3, 2) * 0.5),
            epsilon = 1e-12
        );
        for i in 0..3 {
            for j in 0..3 {
                let ei = unit(3, i);
                let ej = unit(3, j);
                let half = rs.algebra().bracket(&ei, &ej).unwrap() * 0.5;
                assert_relative_eq!(table.gamma(i, j), &half, epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn heisenberg_connection_table() {
        let rs = spaces::heisenberg3();
        let table = levi_civita_table(&rs).unwrap();
        assert_relative_eq!(table.gamma(0, 1), &(unit(3, 2) * 0.5), epsilon = 1e-12);
        assert_relative_eq!(table.gamma(0, 2), &(unit(3, 1) * -0.5), epsilon = 1e-12);
        assert_relative_eq!(table.gamma(2, 0), &(unit(3, 1) * -0.5), epsilon = 1e-12);
        assert_relative_eq!(table.gamma(1, 2), &(unit(3, 0) * 0.5), epsilon = 1e-12);
        assert_relative_eq!(table.gamma(2, 1), &(unit(3, 0) * 0.5), epsilon = 1e-12);
        assert_relative_eq!(table.gamma(1, 0), &(unit(3, 2) * -0.5), epsilon = 1e-12);
    }

    #[test]
    fn connection_invariants_hold() {
        for rs in [spaces::heisenberg3(), spaces::su2()] {
            let table = levi_civita_table(&rs).unwrap();
            let n = rs.dim();
            for i in 0..n {
                let ei = unit(n, i);
                for j in 0..n {
                    let ej = unit(n, j);
                    // metric compatibility
                    for k in 0..n {
                        let ek = unit(n, k);
                        let r = rs.inner(table.gamma(i, j), &ek) + rs.inner(&ej, table.gamma(i, k));
                        assert!(r.abs() < 1e-10, "metric compatibility failed at ({i},{j},{k})");
                    }
                    // torsion-free
                    let t = table.gamma(i, j) - table.gamma(j, i)
                        - rs.algebra().bracket(&ei, &ej).unwrap();
                    assert!(t.amax() < 1e-10);
                }
            }
        }
    }

    #[test]
    fn oracle_rejects_isotropy() {
        let rs = spaces::toy_gh4();
        assert!(matches!(
            levi_civita_table(&rs),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn su2_curvature_matches_biinvariant_identity() {
        let rs = spaces::su2();
        let table = levi_civita_table(&rs).unwrap();
        let e1 = unit(3, 0);
        let e2 = unit(3, 1);
        // R(e2,e1)e1 = -¼[[e2,e1],e1] = +¼ e2
        let r = curvature_oracle(&rs, &table, &e2, &e1, &e1).unwrap();
        assert_relative_eq!(r, &(unit(3, 1) * 0.25), epsilon = 1e-12);
        // antisymmetry in the first pair
        let r0 = curvature_oracle(&rs, &table, &e1, &e1, &e2).unwrap();
        assert_eq!(r0.amax(), 0.0);
    }

    #[test]
    fn sectional_frozen_values() {
        let su2 = spaces::su2();
        let e = |i| unit(3, i);
        assert_relative_eq!(sectional_oracle(&su2, &e(0), &e(1)).unwrap(), 0.25, epsilon = 1e-12);

        let heis = spaces::heisenberg3();
        assert_relative_eq!(sectional_oracle(&heis, &e(0), &e(1)).unwrap(), -0.75, epsilon = 1e-12);
        assert_relative_eq!(sectional_oracle(&heis, &e(0), &e(2)).unwrap(), 0.25, epsilon = 1e-12);

        let ab = spaces::abelian(3).unwrap();
        assert_eq!(sectional_oracle(&ab, &e(0), &e(1)).unwrap(), 0.0);
    }

    #[test]
    fn sectional_rejects_dependent_vectors() {
        let su2 = spaces::su2();
        let y = unit(3, 0);
        let u = &y * 2.0;
        assert!(matches!(
            sectional_oracle(&su2, &y, &u),
            Err(Error::DegenerateFlag(_))
        ));
    }

    #[test]
    fn nat_reductive_curvature_su2() {
        let rs = spaces::su2();
        let e1 = unit(3, 0);
        let e2 = unit(3, 1);
        // (R(e1,e2)e2)_0 = -¼[[e1,e2],e2] = +¼ e1
        let r = curvature_nat_reductive(&rs, &e1, &e2, &e2, false).unwrap();
        assert_relative_eq!(r, &(unit(3, 0) * 0.25), epsilon = 1e-12);
    }

    #[test]
    fn nat_reductive_refuses_heisenberg() {
        let rs = spaces::heisenberg3();
        let e1 = unit(3, 0);
        let e2 = unit(3, 1);
        let err = curvature_nat_reductive(&rs, &e1, &e2, &e2, false).unwrap_err();
        assert!(matches!(err, Error::HypothesisViolation(_)));
        // forced evaluation goes through
        assert!(curvature_nat_reductive(&rs, &e1, &e2, &e2, true).is_ok());
    }

    #[test]
    fn nat_reductive_matches_oracle_on_biinvariant_groups() {
        // for h = 0 with ad-invariant gram, both routes must agree
        for rs in [spaces::su2(), spaces::su2_x_r(0.0).unwrap().0] {
            let table = levi_civita_table(&rs).unwrap();
            let n = rs.dim();
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        let (u, v, w) = (unit(n, i), unit(n, j), unit(n, k));
                        let a = curvature_oracle(&rs, &table, &u, &v, &w).unwrap();
                        let b = curvature_nat_reductive(&rs, &u, &v, &w, false).unwrap();
                        assert_relative_eq!(a, &b, epsilon = 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn alpha_variants_su2() {
        let rs = spaces::su2();
        let y = unit(3, 0);
        let u = unit(3, 1);
        let pl = alpha(&rs, &y, &u, AlphaVariant::PaperLiteral, false).unwrap();
        // ½[[e2,e1],e1] = ½[-e3,e1] = -½ e2
        assert_relative_eq!(pl, &(unit(3, 1) * -0.5), epsilon = 1e-12);
        let oc = alpha(&rs, &y, &u, AlphaVariant::OracleConsistent, false).unwrap();
        assert_relative_eq!(oc, &(unit(3, 1) * 0.25), epsilon = 1e-12);
    }

    #[test]
    fn alpha_abelian_vanishes() {
        let rs = spaces::abelian(3).unwrap();
        let y = unit(3, 0);
        let u = unit(3, 1);
        for v in [AlphaVariant::PaperLiteral, AlphaVariant::OracleConsistent] {
            assert_eq!(alpha(&rs, &y, &u, v, false).unwrap().amax(), 0.0);
        }
    }

    #[test]
    fn second_kind_curvature() {
        // h = 0 makes it identically zero
        let su2 = spaces::su2();
        let (e1, e2, e3) = (unit(3, 0), unit(3, 1), unit(3, 2));
        assert_eq!(curvature_second_kind(&su2, &e1, &e2, &e3).unwrap().amax(), 0.0);

        // toy 4-dim: h = span{e1}, [e2,e3] = e1; R(e2,e3)e2 = -[e1,e2] = -e3
        let rs = spaces::toy_gh4();
        let e = |i| unit(4, i);
        let r = curvature_second_kind(&rs, &e(1), &e(2), &e(1)).unwrap();
        assert_relative_eq!(r, &(-e(2)), epsilon = 1e-12);
    }
}
