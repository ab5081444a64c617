//! The invariant Randers metric `F(y) = √g(y,y) + g(X,y)` and its flag
//! curvatures.
//!
//! Three flag-curvature routes are exposed:
//!
//! * [`flag_curvature_thm42`] — the closed form for naturally reductive
//!   spaces with parallel drift, in an oracle-consistent variant (pinned
//!   against the Koszul oracle) and a literal published variant kept for
//!   side-by-side comparison;
//! * [`flag_curvature_assembled`] — an independent assembly from the Koszul
//!   curvature tensor and a finite-difference fundamental tensor, for
//!   `h_dim = 0`;
//! * [`flag_curvature_denghou`] — the refuted formula, evaluated verbatim
//!   and labeled known-incorrect.

use nalgebra::DVector;

use crate::error::{Error, Result};
use crate::lie::{DriftVector, ReductiveSpace};
use crate::riemann::{self, AlphaVariant, DEGENERATE_FLAG_TOL};

/// Default central-difference step for the fundamental-tensor oracle.
pub const DEFAULT_FD_STEP: f64 = 1e-5;
/// Step used when assembling flag curvatures from finite differences; a
/// larger step keeps the rounding error in the mixed difference below the
/// 1e-6 cross-check tolerance.
pub const ASSEMBLED_FD_STEP: f64 = 1e-4;

/// Label attached to every report of the refuted formula.
pub const DENGHOU_LABEL: &str =
    "known-incorrect: predicts zero flag curvature on every Lie group";

/// A reductive space equipped with an admissible drift vector.
///
/// Construction enforces `g(X,X) < 1` and ad(H)-invariance of `X`; the
/// parallel-drift condition is recorded and only enforced by the operations
/// that need Berwald type.
#[derive(Debug, Clone)]
pub struct RandersSpec {
    space: ReductiveSpace,
    x: DriftVector,
    naturally_reductive: bool,
    drift_parallel: bool,
}

impl RandersSpec {
    pub fn new(space: ReductiveSpace, x: DriftVector) -> Result<Self> {
        let adm = space.check_drift_admissible(&x)?;
        if !adm.norm_bound {
            return Err(Error::Input(format!(
                "drift norm g(X,X) = {} must be < 1",
                adm.x_norm_sq
            )));
        }
        if !adm.ad_invariant {
            return Err(Error::Input(format!(
                "drift is not ad(h)-invariant (max |[h,X]| = {:.3e})",
                adm.max_h_bracket
            )));
        }
        let naturally_reductive = space.check_naturally_reductive().holds;
        Ok(Self {
            space,
            x,
            naturally_reductive,
            drift_parallel: adm.parallel,
        })
    }

    pub fn space(&self) -> &ReductiveSpace {
        &self.space
    }

    pub fn drift(&self) -> &DriftVector {
        &self.x
    }

    pub fn is_naturally_reductive(&self) -> bool {
        self.naturally_reductive
    }

    pub fn is_drift_parallel(&self) -> bool {
        self.drift_parallel
    }

    fn g(&self, u: &DVector<f64>, v: &DVector<f64>) -> f64 {
        self.space.inner(u, v)
    }
}

/// A flag: flagpole `y` and transverse edge `u`, both in `m`-coordinates.
#[derive(Debug, Clone)]
pub struct Flag {
    pub y: DVector<f64>,
    pub u: DVector<f64>,
}

impl Flag {
    pub fn new(y: DVector<f64>, u: DVector<f64>) -> Self {
        Self { y, u }
    }
}

struct FlagGram {
    gyy: f64,
    guu: f64,
    gyu: f64,
    det: f64,
}

fn check_flag(spec: &RandersSpec, flag: &Flag) -> Result<FlagGram> {
    let md = spec.space.m_dim();
    if flag.y.len() != md || flag.u.len() != md {
        return Err(Error::Input(format!(
            "flag vectors must have length {md}, got {} and {}",
            flag.y.len(),
            flag.u.len()
        )));
    }
    let gyy = spec.g(&flag.y, &flag.y);
    let guu = spec.g(&flag.u, &flag.u);
    let gyu = spec.g(&flag.y, &flag.u);
    if gyy <= 0.0 {
        return Err(Error::DegenerateFlag("flagpole must be nonzero".into()));
    }
    let det = gyy * guu - gyu * gyu;
    if det <= DEGENERATE_FLAG_TOL * gyy * guu {
        return Err(Error::DegenerateFlag(
            "flag vectors are linearly dependent".into(),
        ));
    }
    Ok(FlagGram { gyy, guu, gyu, det })
}

/// The Randers norm `F(y) = √g(y,y) + g(X,y)`; `F(0) = 0`.
pub fn randers_norm(spec: &RandersSpec, y: &DVector<f64>) -> f64 {
    spec.g(y, y).sqrt() + spec.g(&spec.x.coords, y)
}

/// Closed-form fundamental tensor `g_Y(u,v)`:
///
/// `g(u,v) + g(X,u)g(X,v) − g(X,y)g(y,u)g(y,v)/g(y,y)^{3/2}
///  + (g(X,u)g(y,v) + g(X,y)g(u,v) + g(X,v)g(y,u)) / √g(y,y)`.
pub fn fundamental_tensor(
    spec: &RandersSpec,
    y: &DVector<f64>,
    u: &DVector<f64>,
    v: &DVector<f64>,
) -> Result<f64> {
    let gyy = spec.g(y, y);
    if gyy <= 0.0 {
        return Err(Error::UndefinedDirection(
            "fundamental tensor needs a nonzero direction".into(),
        ));
    }
    let x = &spec.x.coords;
    let a = gyy.sqrt();
    let (gxy, gxu, gxv) = (spec.g(x, y), spec.g(x, u), spec.g(x, v));
    let (gyu, gyv, guv) = (spec.g(y, u), spec.g(y, v), spec.g(u, v));
    Ok(guv + gxu * gxv - gxy * gyu * gyv / (a * a * a) + (gxu * gyv + gxy * guv + gxv * gyu) / a)
}

/// Central-difference evaluation of `½ ∂²F²(y + su + tv)/∂s∂t` at
/// `s = t = step`. Independent of the closed form.
pub fn fundamental_tensor_fd(
    spec: &RandersSpec,
    y: &DVector<f64>,
    u: &DVector<f64>,
    v: &DVector<f64>,
    step: f64,
) -> Result<f64> {
    if spec.g(y, y) <= 0.0 {
        return Err(Error::UndefinedDirection(
            "fundamental tensor needs a nonzero direction".into(),
        ));
    }
    if step <= 0.0 {
        return Err(Error::Input("finite-difference step must be positive".into()));
    }
    let f2 = |s: f64, t: f64| {
        let p = y + u * s + v * t;
        let f = randers_norm(spec, &p);
        f * f
    };
    let s = step;
    let t = step;
    Ok((f2(s, t) - f2(s, -t) - f2(-s, t) + f2(-s, -t)) / (8.0 * s * t))
}

/// Finite-difference fundamental tensor with one Richardson halving:
/// returns the extrapolated value and a truncation-error estimate.
pub fn fundamental_tensor_fd_richardson(
    spec: &RandersSpec,
    y: &DVector<f64>,
    u: &DVector<f64>,
    v: &DVector<f64>,
    step: f64,
) -> Result<(f64, f64)> {
    let d_h = fundamental_tensor_fd(spec, y, u, v, step)?;
    let d_h2 = fundamental_tensor_fd(spec, y, u, v, step / 2.0)?;
    let extrapolated = (4.0 * d_h2 - d_h) / 3.0;
    let estimate = (d_h2 - d_h).abs() / 3.0;
    Ok((extrapolated, estimate))
}

fn require_berwald_hypotheses(spec: &RandersSpec, force: bool) -> Result<()> {
    if (spec.naturally_reductive && spec.drift_parallel) || force {
        return Ok(());
    }
    let mut missing = Vec::new();
    if !spec.naturally_reductive {
        missing.push("space is not naturally reductive");
    }
    if !spec.drift_parallel {
        missing.push("drift is not parallel");
    }
    Err(Error::HypothesisViolation(missing.join("; ")))
}

/// Closed-form flag curvature for naturally reductive spaces with parallel
/// drift.
///
/// The oracle-consistent variant evaluates
/// `K = g_Y(α, u) / (g_Y(y,y) g_Y(u,u) − g_Y(y,u)²)` with `α = R(u,y)y`
/// from the naturally reductive curvature tensor. The paper-literal variant
/// evaluates the published `A / (B − C)` verbatim, including its `α`.
pub fn flag_curvature_thm42(
    spec: &RandersSpec,
    flag: &Flag,
    variant: AlphaVariant,
    force: bool,
) -> Result<f64> {
    let fg = check_flag(spec, flag)?;
    require_berwald_hypotheses(spec, force)?;
    let (y, u) = (&flag.y, &flag.u);
    let al = riemann::alpha(spec.space(), y, u, variant, true)?;
    match variant {
        AlphaVariant::OracleConsistent => {
            let num = fundamental_tensor(spec, y, &al, u)?;
            let gy_yy = fundamental_tensor(spec, y, y, y)?;
            let gy_uu = fundamental_tensor(spec, y, u, u)?;
            let gy_yu = fundamental_tensor(spec, y, y, u)?;
            Ok(num / (gy_yy * gy_uu - gy_yu * gy_yu))
        }
        AlphaVariant::PaperLiteral => {
            let x = &spec.x.coords;
            let sq = fg.gyy.sqrt();
            let (gxy, gxu, gxa) = (spec.g(x, y), spec.g(x, u), spec.g(x, &al));
            let (gyu, gya, gau) = (fg.gyu, spec.g(y, &al), spec.g(&al, u));
            let a_term = gau + gxa * gxu - gxy * gyu * gya / (sq * sq * sq)
                + (gxa * gyu + gxy * gau + gxu * gya) / sq;
            // the published B carries a minus in front of the whole brace
            let b_term = (fg.gyy + gxy * gxy + 2.0 * gxy * sq)
                * (fg.guu + gxu * gxu
                    - (gxy * gyu * gyu / fg.gyy + gxy * fg.guu + 2.0 * gxu * gyu) / sq);
            let c_inner = gyu * (1.0 + gxy / sq) + gxu * (gxy + sq);
            let c_term = c_inner * c_inner;
            Ok(a_term / (b_term - c_term))
        }
    }
}

/// Flag curvature assembled from the Koszul curvature tensor and the
/// finite-difference fundamental tensor — fully independent of the closed
/// form. Defined for `h_dim = 0` with parallel drift.
pub fn flag_curvature_assembled(spec: &RandersSpec, flag: &Flag) -> Result<f64> {
    flag_curvature_assembled_detailed(spec, flag).map(|(k, _)| k)
}

/// As [`flag_curvature_assembled`], additionally returning the largest
/// Richardson truncation-error estimate among the fundamental-tensor
/// evaluations.
pub fn flag_curvature_assembled_detailed(spec: &RandersSpec, flag: &Flag) -> Result<(f64, f64)> {
    if spec.space.h_dim() != 0 {
        return Err(Error::Unsupported(
            "the assembled flag curvature needs the Koszul oracle (h_dim = 0)".into(),
        ));
    }
    let fg = check_flag(spec, flag)?;
    if !spec.drift_parallel {
        return Err(Error::HypothesisViolation(
            "drift is not parallel; the Chern and Levi-Civita connections differ".into(),
        ));
    }
    // unit-length representatives keep F² near 1 and the finite differences
    // well conditioned; flag curvature is invariant under this rescaling
    let y = &flag.y / fg.gyy.sqrt();
    let u = &flag.u / fg.guu.sqrt();
    let table = riemann::levi_civita_table(&spec.space)?;
    let r = riemann::curvature_oracle(&spec.space, &table, &u, &y, &y)?;
    let step = ASSEMBLED_FD_STEP;
    let (num, e1) = fundamental_tensor_fd_richardson(spec, &y, &r, &u, step)?;
    let (gy_yy, e2) = fundamental_tensor_fd_richardson(spec, &y, &y, &y, step)?;
    let (gy_uu, e3) = fundamental_tensor_fd_richardson(spec, &y, &u, &u, step)?;
    let (gy_yu, e4) = fundamental_tensor_fd_richardson(spec, &y, &y, &u, step)?;
    let k = num / (gy_yy * gy_uu - gy_yu * gy_yu);
    Ok((k, e1.max(e2).max(e3).max(e4)))
}

/// The refuted flag-curvature formula, evaluated verbatim:
///
/// `K(P,Y) = 2√g(Y,Y) / (2√g(Y,Y) + g(X,Y)) · K(P)` with
/// `K(P) = g([[Y,U]_h,Y],U) / (g(U,U)g(Y,Y) − g²(U,Y))`.
///
/// See [`DENGHOU_LABEL`]; for `h_dim = 0` this is identically zero whatever
/// the true curvature is.
pub fn flag_curvature_denghou(spec: &RandersSpec, flag: &Flag) -> Result<f64> {
    let fg = check_flag(spec, flag)?;
    let rs = &spec.space;
    let (y, u) = (&flag.y, &flag.u);
    let yu_full = rs.bracket_m(y, u);
    let yu_h = rs.project(&yu_full, crate::lie::Part::H)?;
    let yf = rs.embed_m(y);
    let inner_vec = rs.m_coords(&rs.algebra().bracket(&yu_h, &yf)?);
    let k_p = rs.inner(&inner_vec, u) / fg.det;
    let sq = fg.gyy.sqrt();
    let prefactor = 2.0 * sq / (2.0 * sq + spec.g(&spec.x.coords, y));
    Ok(prefactor * k_p)
}

/// Per-flag results from every formula variant, with discrepancy
/// diagnostics and hypothesis flags.
#[derive(Debug, Clone)]
pub struct CurvatureReport {
    pub flag_y: Vec<f64>,
    pub flag_u: Vec<f64>,
    pub norm_y: f64,
    pub g_y_yy: f64,
    pub g_y_uu: f64,
    pub g_y_yu: f64,
    pub naturally_reductive: bool,
    pub drift_parallel: bool,
    pub k_thm42_oracle_consistent: Option<f64>,
    pub k_thm42_paper_literal: Option<f64>,
    pub k_assembled_oracle: Option<f64>,
    pub k_thm22_denghou: f64,
    pub sectional_g: Option<f64>,
    pub diff_thm42_variants_abs: Option<f64>,
    pub diff_thm42_variants_rel: Option<f64>,
    pub diff_thm42_vs_assembled_abs: Option<f64>,
    pub diff_denghou_vs_sectional_abs: Option<f64>,
    pub fd_step: Option<f64>,
    pub fd_error_estimate: Option<f64>,
}

fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}

/// Populates every curvature variant its hypotheses allow, plus
/// diagnostics. With `force`, the closed form is evaluated outside its
/// hypotheses as well; the hypothesis flags still record the violation.
pub fn curvature_report(spec: &RandersSpec, flag: &Flag, force: bool) -> Result<CurvatureReport> {
    check_flag(spec, flag)?;
    let (y, u) = (&flag.y, &flag.u);
    let closed_form_ok = (spec.naturally_reductive && spec.drift_parallel) || force;
    let k_oc = if closed_form_ok {
        Some(flag_curvature_thm42(spec, flag, AlphaVariant::OracleConsistent, force)?)
    } else {
        None
    };
    let k_pl = if closed_form_ok {
        Some(flag_curvature_thm42(spec, flag, AlphaVariant::PaperLiteral, force)?)
    } else {
        None
    };
    let assembled = if spec.space.h_dim() == 0 && spec.drift_parallel {
        Some(flag_curvature_assembled_detailed(spec, flag)?)
    } else {
        None
    };
    let sectional = if spec.space.h_dim() == 0 {
        Some(riemann::sectional_oracle(&spec.space, y, u)?)
    } else {
        None
    };
    let k_denghou = flag_curvature_denghou(spec, flag)?;
    Ok(CurvatureReport {
        flag_y: y.iter().cloned().collect(),
        flag_u: u.iter().cloned().collect(),
        norm_y: randers_norm(spec, y),
        g_y_yy: fundamental_tensor(spec, y, y, y)?,
        g_y_uu: fundamental_tensor(spec, y, u, u)?,
        g_y_yu: fundamental_tensor(spec, y, y, u)?,
        naturally_reductive: spec.naturally_reductive,
        drift_parallel: spec.drift_parallel,
        k_thm42_oracle_consistent: k_oc,
        k_thm42_paper_literal: k_pl,
        k_assembled_oracle: assembled.map(|(k, _)| k),
        k_thm22_denghou: k_denghou,
        sectional_g: sectional,
        diff_thm42_variants_abs: k_oc.zip(k_pl).map(|(a, b)| (a - b).abs()),
        diff_thm42_variants_rel: k_oc.zip(k_pl).map(|(a, b)| rel_diff(a, b)),
        diff_thm42_vs_assembled_abs: k_oc
            .zip(assembled.map(|(k, _)| k))
            .map(|(a, b)| (a - b).abs()),
        diff_denghou_vs_sectional_abs: sectional.map(|s| (k_denghou - s).abs()),
        fd_step: assembled.map(|_| ASSEMBLED_FD_STEP),
        fd_error_estimate: assembled.map(|(_, e)| e),
    })
}
