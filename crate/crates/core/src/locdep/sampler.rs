//! One-sided Monte Carlo search for independence witnesses at a fixed
//! matrix size. A witness is checked by exact rank, so `Independent` is a
//! certificate; `NoWitnessFound` is only evidence.

use crate::error::{Error, Result};
use crate::freealg::NcPoly;
use crate::linalg;
use crate::locdep::bounds::family_nvars;
use crate::matexact::{
    apply_family, derive_seed, evaluate_family, random_matrix_tuple, random_vector, MatTuple,
};
use crate::scalar::Field;
use crate::verdict::{DependenceVerdict, Witness};

pub const DEFAULT_TRIALS: u64 = 50;
pub const DEFAULT_ENTRY_BOUND: u32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SamplerConfig {
    /// Matrix size `d`.
    pub dim: usize,
    pub trials: u64,
    /// Entries are drawn uniformly from `[-bound, bound]`.
    pub bound: u32,
    pub seed: u64,
}

impl SamplerConfig {
    pub fn new(dim: usize) -> Self {
        SamplerConfig {
            dim,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_ENTRY_BOUND,
            seed: 0,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::NonPositive("matrix size"));
        }
        if self.trials == 0 {
            return Err(Error::NonPositive("trial count"));
        }
        if self.bound == 0 {
            return Err(Error::NonPositive("entry bound"));
        }
        Ok(())
    }
}

fn family_field(fs: &[NcPoly]) -> Result<Field> {
    let field = fs.first().ok_or(Error::EmptyFamily)?.field();
    if let Some(f) = fs.iter().find(|f| f.field() != field) {
        return Err(Error::FieldMismatch(field, f.field()));
    }
    Ok(field)
}

/// The tuple drawn on trial `trial`; samplers and tests that replay their
/// draws go through here.
pub fn trial_tuple(fs: &[NcPoly], config: &SamplerConfig, trial: u64) -> Result<MatTuple> {
    let field = family_field(fs)?;
    random_matrix_tuple(
        field,
        family_nvars(fs) as usize,
        config.dim,
        config.bound,
        derive_seed(config.seed, trial),
    )
}

fn miss_note(kind: &str, config: &SamplerConfig, degree: usize, trials: u64) -> String {
    let points = 2 * config.bound as u64 + 1;
    let mut note = format!(
        "no {kind} witness at d = {} in {trials} trials with entries in [-{b}, {b}]",
        config.dim,
        b = config.bound
    );
    if (degree as u64) < points {
        note.push_str(&format!(
            "; if the family were {kind}ly independent at this size, each trial would miss \
             with probability at most {degree}/{points}"
        ));
    }
    note
}

fn total_degree(fs: &[NcPoly]) -> usize {
    fs.iter().filter_map(|f| f.degree().finite()).sum()
}

/// Looks for `A` in `M_d^n` at which `f_1(A), ..., f_m(A)` are independent.
pub fn local_dependence_sample(fs: &[NcPoly], config: &SamplerConfig) -> Result<DependenceVerdict> {
    config.validate()?;
    let field = family_field(fs)?;
    let m = fs.len();
    if m > config.dim * config.dim {
        return Ok(DependenceVerdict::no_witness(
            0,
            format!(
                "{m} matrices in a space of dimension {} are always dependent",
                config.dim * config.dim
            ),
        ));
    }
    for trial in 0..config.trials {
        let tuple = trial_tuple(fs, config, trial)?;
        let rows: Vec<_> = evaluate_family(fs, &tuple)?
            .iter()
            .map(|v| v.vectorize())
            .collect();
        if linalg::rank(&rows, field) == m {
            return Ok(DependenceVerdict::witnessed(
                Witness {
                    tuple,
                    direction: None,
                },
                trial + 1,
            ));
        }
    }
    Ok(DependenceVerdict::no_witness(
        config.trials,
        miss_note("local", config, total_degree(fs), config.trials),
    ))
}

/// Looks for `(A, v)` at which `f_1(A) v, ..., f_m(A) v` are independent.
pub fn directional_dependence_sample(
    fs: &[NcPoly],
    config: &SamplerConfig,
) -> Result<DependenceVerdict> {
    config.validate()?;
    let field = family_field(fs)?;
    let m = fs.len();
    if m > config.dim {
        return Ok(DependenceVerdict::no_witness(
            0,
            format!(
                "m > d: {m} vectors in dimension {} are always dependent",
                config.dim
            ),
        ));
    }
    for trial in 0..config.trials {
        let tuple = trial_tuple(fs, config, trial)?;
        let v = random_vector(
            field,
            config.dim,
            config.bound,
            derive_seed(derive_seed(config.seed, trial), u64::MAX),
        );
        let cols = apply_family(fs, &tuple, &v)?;
        if linalg::rank(&cols, field) == m {
            return Ok(DependenceVerdict::witnessed(
                Witness {
                    tuple,
                    direction: Some(v),
                },
                trial + 1,
            ));
        }
    }
    Ok(DependenceVerdict::no_witness(
        config.trials,
        miss_note("directional", config, total_degree(fs) + m, config.trials),
    ))
}

/// Re-checks a sampler witness: the stacked evaluations (or directional
/// images) have rank `m`.
pub fn verify_witness(fs: &[NcPoly], witness: &Witness) -> Result<bool> {
    let field = family_field(fs)?;
    let rows: Vec<_> = match &witness.direction {
        None => evaluate_family(fs, &witness.tuple)?
            .iter()
            .map(|v| v.vectorize())
            .collect(),
        Some(v) => apply_family(fs, &witness.tuple, v)?,
    };
    Ok(linalg::rank(&rows, field) == fs.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matexact::MatrixExact;
    use crate::ncparse::parse_poly;
    use crate::specialpoly::central_poly_2x2;
    use crate::verdict::Status;

    const Q: Field = Field::Rational;

    fn fam(src: &[&str]) -> Vec<NcPoly> {
        src.iter().map(|s| parse_poly(s, Q).unwrap()).collect()
    }

    #[test]
    fn proportional_pair_never_separates() {
        let fs = fam(&["X1", "2*X1"]);
        for d in 1..=3 {
            let v = local_dependence_sample(&fs, &SamplerConfig::new(d)).unwrap();
            assert_eq!(v.status, Status::NoWitnessFound);
            let expected = if d == 1 { 0 } else { DEFAULT_TRIALS };
            assert_eq!(v.trials_used, expected);
            let v = directional_dependence_sample(&fs, &SamplerConfig::new(d.max(2))).unwrap();
            assert_eq!(v.status, Status::NoWitnessFound);
        }
    }

    #[test]
    fn two_variables_separate_on_2x2() {
        let fs = fam(&["X1", "X2"]);
        let v = local_dependence_sample(&fs, &SamplerConfig::new(2)).unwrap();
        assert_eq!(v.status, Status::Independent);
        assert!(verify_witness(&fs, v.witness.as_ref().unwrap()).unwrap());

        let hand = Witness {
            tuple: MatTuple::from_matrices(vec![
                MatrixExact::unit(Q, 2, 1, 1),
                MatrixExact::unit(Q, 2, 1, 2),
            ])
            .unwrap(),
            direction: None,
        };
        assert!(verify_witness(&fs, &hand).unwrap());

        let dir = Witness {
            tuple: MatTuple::from_matrices(vec![
                MatrixExact::unit(Q, 2, 1, 1),
                MatrixExact::unit(Q, 2, 2, 1),
            ])
            .unwrap(),
            direction: Some(vec![Q.one(), Q.zero()]),
        };
        assert!(verify_witness(&fs, &dir).unwrap());
        let v = directional_dependence_sample(&fs, &SamplerConfig::new(2)).unwrap();
        assert_eq!(v.status, Status::Independent);
        assert!(verify_witness(&fs, v.witness.as_ref().unwrap()).unwrap());
    }

    #[test]
    fn too_many_members_for_the_dimension() {
        let fs = fam(&["X1", "X2", "X1*X2"]);
        let v = directional_dependence_sample(&fs, &SamplerConfig::new(2)).unwrap();
        assert_eq!(v.status, Status::NoWitnessFound);
        assert_eq!(v.trials_used, 0);
        assert!(v.note.unwrap().contains("m > d"));
        let v = local_dependence_sample(&fam(&["1", "X1"]), &SamplerConfig::new(1)).unwrap();
        assert_eq!(v.trials_used, 0);
    }

    #[test]
    fn central_polynomial_needs_size_three() {
        let fs = vec![NcPoly::one(Q), central_poly_2x2(Q)];
        let v = local_dependence_sample(&fs, &SamplerConfig::new(2)).unwrap();
        assert_eq!(v.status, Status::NoWitnessFound);
        let v = local_dependence_sample(&fs, &SamplerConfig::new(3)).unwrap();
        assert_eq!(v.status, Status::Independent);
    }

    #[test]
    fn same_seed_same_verdict() {
        let fs = fam(&["X1*X2", "X2*X1", "X1^2"]);
        let c = SamplerConfig { seed: 99, ..SamplerConfig::new(2) };
        assert_eq!(
            local_dependence_sample(&fs, &c).unwrap(),
            local_dependence_sample(&fs, &c).unwrap()
        );
    }

    #[test]
    fn config_validation() {
        let fs = fam(&["X1"]);
        assert!(local_dependence_sample(&fs, &SamplerConfig::new(0)).is_err());
        let c = SamplerConfig { trials: 0, ..SamplerConfig::new(2) };
        assert!(directional_dependence_sample(&fs, &c).is_err());
    }
}
