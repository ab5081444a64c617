//! Canonical test spaces and the counterexample runner.
//!
//! The counterexample: on any Lie group (`h = 0`) with zero drift, the
//! refuted flag-curvature formula predicts zero for every plane, while the
//! Koszul oracle finds nonzero sectional curvature on any noncommutative
//! group — with both signs present on nilpotent ones.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::lie::{DriftVector, LieAlgebraSpec, ReductiveSpace};
use crate::randers::{self, Flag, RandersSpec};
use crate::riemann;

/// 3-dimensional Heisenberg algebra: `[e1,e2] = e3`, gram = I, `h = 0`.
pub fn heisenberg3() -> ReductiveSpace {
    let a = LieAlgebraSpec::from_brackets("heisenberg3", 3, &[(0, 1, 2, 1.0)]).unwrap();
    ReductiveSpace::new(a, 0, DMatrix::identity(3, 3)).unwrap()
}

/// su(2) with the cyclic brackets `[e1,e2]=e3, [e2,e3]=e1, [e3,e1]=e2` and
/// the ad-invariant gram = I, `h = 0`.
pub fn su2() -> ReductiveSpace {
    let a = LieAlgebraSpec::from_brackets(
        "su2",
        3,
        &[(0, 1, 2, 1.0), (1, 2, 0, 1.0), (0, 2, 1, -1.0)],
    )
    .unwrap();
    ReductiveSpace::new(a, 0, DMatrix::identity(3, 3)).unwrap()
}

/// `su(2) ⊕ ℝ` with gram = I and a central drift `X = t·e4`, `0 ≤ t < 1`.
pub fn su2_x_r(t: f64) -> Result<(ReductiveSpace, DriftVector)> {
    if !(0.0..1.0).contains(&t) {
        return Err(Error::Input(format!(
            "drift scale t must satisfy 0 <= t < 1, got {t}"
        )));
    }
    let a = LieAlgebraSpec::from_brackets(
        "su2_x_r",
        4,
        &[(0, 1, 2, 1.0), (1, 2, 0, 1.0), (0, 2, 1, -1.0)],
    )
    .unwrap();
    let rs = ReductiveSpace::new(a, 0, DMatrix::identity(4, 4)).unwrap();
    let x = DriftVector::new(DVector::from_fn(4, |k, _| if k == 3 { t } else { 0.0 }));
    Ok((rs, x))
}

/// Abelian algebra of dimension `n ≥ 1` with gram = I.
pub fn abelian(n: usize) -> Result<ReductiveSpace> {
    if n == 0 {
        return Err(Error::Input("abelian dimension must be at least 1".into()));
    }
    let a = LieAlgebraSpec::from_brackets("abelian", n, &[])?;
    ReductiveSpace::new(a, 0, DMatrix::identity(n, n))
}

/// 4-dimensional fixture with 1-dimensional isotropy: `h = span{e1}` acting
/// on `m = span{e2,e3,e4}` by rotation of the `(e2,e3)`-plane, with
/// `[e2,e3] = e1` closing the algebra (su(2) ⊕ ℝ split along a U(1)).
/// Naturally reductive with gram = I on `m`.
pub fn toy_gh4() -> ReductiveSpace {
    let a = LieAlgebraSpec::from_brackets(
        "toy_gh4",
        4,
        &[(0, 1, 2, 1.0), (0, 2, 1, -1.0), (1, 2, 0, 1.0)],
    )
    .unwrap();
    ReductiveSpace::new(a, 1, DMatrix::identity(3, 3)).unwrap()
}

/// Named builder selector, as exposed on the CLI
/// (`heisenberg3 | su2 | su2_x_r:<t> | abelian:<n> | toy_gh4`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Builtin {
    Heisenberg3,
    Su2,
    Su2XR(f64),
    Abelian(usize),
    ToyGh4,
}

impl Builtin {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "heisenberg3" => Ok(Self::Heisenberg3),
            "su2" => Ok(Self::Su2),
            "toy_gh4" => Ok(Self::ToyGh4),
            _ => {
                if let Some(t) = s.strip_prefix("su2_x_r:") {
                    let t: f64 = t
                        .parse()
                        .map_err(|_| Error::Input(format!("bad drift scale in '{s}'")))?;
                    Ok(Self::Su2XR(t))
                } else if let Some(n) = s.strip_prefix("abelian:") {
                    let n: usize = n
                        .parse()
                        .map_err(|_| Error::Input(format!("bad dimension in '{s}'")))?;
                    Ok(Self::Abelian(n))
                } else {
                    Err(Error::Input(format!("unknown builtin '{s}'")))
                }
            }
        }
    }

    pub fn build(self) -> Result<(ReductiveSpace, DriftVector)> {
        match self {
            Self::Heisenberg3 => {
                let rs = heisenberg3();
                let x = DriftVector::zero(rs.m_dim());
                Ok((rs, x))
            }
            Self::Su2 => {
                let rs = su2();
                let x = DriftVector::zero(rs.m_dim());
                Ok((rs, x))
            }
            Self::Su2XR(t) => su2_x_r(t),
            Self::Abelian(n) => {
                let rs = abelian(n)?;
                let x = DriftVector::zero(rs.m_dim());
                Ok((rs, x))
            }
            Self::ToyGh4 => {
                let rs = toy_gh4();
                let x = DriftVector::zero(rs.m_dim());
                Ok((rs, x))
            }
        }
    }
}

/// Draws `count` seeded nondegenerate flags on `m`, coordinates uniform in
/// `[-1, 1)`, rejecting nearly dependent pairs.
pub fn sample_flags(rs: &ReductiveSpace, count: usize, seed: u64) -> Vec<Flag> {
    let md = rs.m_dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut flags = Vec::with_capacity(count);
    while flags.len() < count {
        let y = DVector::from_fn(md, |_, _| rng.gen_range(-1.0..1.0));
        let u = DVector::from_fn(md, |_, _| rng.gen_range(-1.0..1.0));
        let gyy = rs.inner(&y, &y);
        let guu = rs.inner(&u, &u);
        let gyu = rs.inner(&y, &u);
        if gyy > 1e-2 && gyy * guu - gyu * gyu > 1e-3 * gyy * guu {
            flags.push(Flag::new(y, u));
        }
    }
    flags
}

/// One row of a [`CounterexampleReport`].
#[derive(Debug, Clone)]
pub struct CounterexampleRow {
    /// Human-readable flag description (basis pair or random index).
    pub label: String,
    pub y: DVector<f64>,
    pub u: DVector<f64>,
    /// The refuted formula's prediction.
    pub k_thm22: f64,
    /// Ground truth from the Koszul oracle.
    pub k_oracle: f64,
}

/// Outcome of [`run_counterexample`].
#[derive(Debug, Clone)]
pub struct CounterexampleReport {
    pub algebra: String,
    pub seed: u64,
    pub rows: Vec<CounterexampleRow>,
    /// True iff some flag has a zero prediction against a nonzero oracle
    /// value — the refutation.
    pub verdict: bool,
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

const SIGN_TOL: f64 = 1e-9;

/// Evaluates the refuted formula and the Koszul oracle over all basis-pair
/// flags plus `sample_size` seeded random flags, with zero drift.
pub fn run_counterexample(
    rs: &ReductiveSpace,
    sample_size: usize,
    seed: u64,
) -> Result<CounterexampleReport> {
    if rs.h_dim() != 0 {
        return Err(Error::Unsupported(
            "the counterexample setting requires h_dim = 0".into(),
        ));
    }
    let n = rs.dim();
    let spec = RandersSpec::new(rs.clone(), DriftVector::zero(n))?;
    let table = riemann::levi_civita_table(rs)?;
    let mut rows = Vec::new();

    let mut flags: Vec<(String, DVector<f64>, DVector<f64>)> = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            flags.push((
                format!("basis:{},{}", i + 1, j + 1),
                crate::lie::unit(n, i),
                crate::lie::unit(n, j),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drawn = 0;
    while drawn < sample_size {
        let y = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
        let u = DVector::from_fn(n, |_, _| rng.gen_range(-1.0..1.0));
        let gyy = rs.inner(&y, &y);
        let guu = rs.inner(&u, &u);
        let gyu = rs.inner(&y, &u);
        if gyy * guu - gyu * gyu <= 1e-8 * gyy * guu {
            continue;
        }
        flags.push((format!("random:{drawn}"), y, u));
        drawn += 1;
    }

    let (mut pos, mut neg, mut zer) = (0usize, 0usize, 0usize);
    let mut verdict = false;
    for (label, y, u) in flags {
        let flag = Flag::new(y.clone(), u.clone());
        let k_thm22 = randers::flag_curvature_denghou(&spec, &flag)?;
        let k_oracle = riemann::sectional_oracle_with(rs, &table, &y, &u)?;
        if k_oracle > SIGN_TOL {
            pos += 1;
        } else if k_oracle < -SIGN_TOL {
            neg += 1;
        } else {
            zer += 1;
        }
        if k_thm22 == 0.0 && k_oracle.abs() > SIGN_TOL {
            verdict = true;
        }
        rows.push(CounterexampleRow {
            label,
            y,
            u,
            k_thm22,
            k_oracle,
        });
    }
    Ok(CounterexampleReport {
        algebra: rs.algebra().name().to_string(),
        seed,
        rows,
        verdict,
        positive: pos,
        negative: neg,
        zero: zer,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::Nilpotency;

    #[test]
    fn builders_are_structurally_valid() {
        for (rs, _) in [
            Builtin::Heisenberg3.build().unwrap(),
            Builtin::Su2.build().unwrap(),
            Builtin::Su2XR(0.5).build().unwrap(),
            Builtin::Abelian(4).build().unwrap(),
            Builtin::ToyGh4.build().unwrap(),
        ] {
            assert!(rs.algebra().validate().is_valid());
        }
    }

    #[test]
    fn su2_x_r_drift_is_admissible() {
        let (rs, x) = su2_x_r(0.5).unwrap();
        let rep = rs.check_drift_admissible(&x).unwrap();
        assert!(rep.all());
        assert!(su2_x_r(1.0).is_err());
        assert!(su2_x_r(-0.1).is_err());
    }

    #[test]
    fn toy_gh4_is_naturally_reductive() {
        let rs = toy_gh4();
        assert!(rs.check_naturally_reductive().holds);
        assert_eq!(rs.h_dim(), 1);
        assert_eq!(rs.m_dim(), 3);
    }

    #[test]
    fn heisenberg_is_class_two() {
        assert_eq!(
            heisenberg3().algebra().nilpotency_class(),
            Nilpotency::Class(2)
        );
    }

    #[test]
    fn abelian_everything_flat() {
        let rs = abelian(4).unwrap();
        assert!(rs.check_naturally_reductive().holds);
        let rep = run_counterexample(&rs, 10, 7).unwrap();
        assert!(!rep.verdict);
        assert_eq!(rep.positive + rep.negative, 0);
    }

    #[test]
    fn heisenberg_counterexample() {
        let rep = run_counterexample(&heisenberg3(), 20, 7).unwrap();
        assert!(rep.verdict);
        assert!(rep.rows.iter().all(|r| r.k_thm22 == 0.0));
        assert!(rep.positive > 0 && rep.negative > 0);
        let by_label = |l: &str| rep.rows.iter().find(|r| r.label == l).unwrap().k_oracle;
        assert!((by_label("basis:1,2") + 0.75).abs() < 1e-12);
        assert!((by_label("basis:1,3") - 0.25).abs() < 1e-12);
    }

    #[test]
    fn su2_counterexample() {
        let rep = run_counterexample(&su2(), 0, 0).unwrap();
        assert!(rep.verdict);
        for r in &rep.rows {
            assert_eq!(r.k_thm22, 0.0);
            assert!((r.k_oracle - 0.25).abs() < 1e-12);
        }
    }

    #[test]
    fn counterexample_rejects_isotropy() {
        assert!(run_counterexample(&toy_gh4(), 0, 0).is_err());
    }

    #[test]
    fn builtin_parsing() {
        assert_eq!(Builtin::parse("su2").unwrap(), Builtin::Su2);
        assert_eq!(Builtin::parse("su2_x_r:0.5").unwrap(), Builtin::Su2XR(0.5));
        assert_eq!(Builtin::parse("abelian:3").unwrap(), Builtin::Abelian(3));
        assert!(Builtin::parse("nope").is_err());
    }
}
