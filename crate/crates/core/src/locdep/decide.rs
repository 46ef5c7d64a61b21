use crate::error::{Error, Result};
use crate::freealg::{global_dependence, NcPoly};
use crate::locdep::bounds::{compute_bounds, family_nvars, BoundReport};
use crate::locdep::fock::{fock_certify_capped, DEFAULT_SIGMA_CAP};
use crate::locdep::sampler::{local_dependence_sample, SamplerConfig, DEFAULT_ENTRY_BOUND, DEFAULT_TRIALS};
use crate::specialpoly::razmyslov_symbolic_dependence;
use crate::verdict::DependenceVerdict;

/// Work limit for the symbolic Capelli route: `m!` times the product of the
/// members' term counts.
pub const DEFAULT_CAPELLI_TERM_CAP: u128 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecideOptions {
    /// Run the local sampler at `d = s_local_min`.
    pub local_sampling: bool,
    pub trials: u64,
    pub bound: u32,
    pub seed: u64,
    pub sigma_cap: usize,
    pub capelli_term_cap: u128,
}

impl Default for DecideOptions {
    fn default() -> Self {
        DecideOptions {
            local_sampling: true,
            trials: DEFAULT_TRIALS,
            bound: DEFAULT_ENTRY_BOUND,
            seed: 0,
            sigma_cap: DEFAULT_SIGMA_CAP,
            capelli_term_cap: DEFAULT_CAPELLI_TERM_CAP,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CrossCheck {
    Agreed { decider: &'static str },
    Skipped { decider: &'static str, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalDemo {
    pub dim: usize,
    pub verdict: DependenceVerdict,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decision {
    pub verdict: DependenceVerdict,
    /// `None` when the family has a zero member.
    pub bounds: Option<BoundReport>,
    pub cross_checks: Vec<CrossCheck>,
    pub local: Option<LocalDemo>,
}

fn capelli_work(fs: &[NcPoly]) -> u128 {
    let fact = (1..=fs.len() as u128).fold(1u128, u128::saturating_mul);
    fs.iter()
        .map(|f| f.len().max(1) as u128)
        .fold(fact, u128::saturating_mul)
}

fn agree(
    decider: &'static str,
    reference: &DependenceVerdict,
    other: &DependenceVerdict,
) -> Result<CrossCheck> {
    if reference.status != other.status {
        return Err(Error::DeciderDisagreement(format!(
            "global says {}, {decider} says {}",
            reference.status, other.status
        )));
    }
    Ok(CrossCheck::Agreed { decider })
}

/// Exact verdict from the coefficient matrix, cross-checked against the
/// Fock certificate and the symbolic Capelli test when their sizes allow,
/// plus an optional local sampling run at the size `s_local_min`.
pub fn decide_dependence(fs: &[NcPoly], options: &DecideOptions) -> Result<Decision> {
    let verdict = global_dependence(fs)?;
    let nvars = family_nvars(fs);
    let bounds = match compute_bounds(fs, nvars) {
        Ok(b) => Some(b),
        Err(Error::ZeroMember { .. }) => None,
        Err(e) => return Err(e),
    };

    let mut cross_checks = Vec::new();
    match fock_certify_capped(fs, options.sigma_cap) {
        Ok(v) => cross_checks.push(agree("fock", &verdict, &v)?),
        Err(Error::SigmaCap { sigma, cap }) => cross_checks.push(CrossCheck::Skipped {
            decider: "fock",
            reason: format!("sigma = {sigma} exceeds cap {cap}"),
        }),
        Err(e) => return Err(e),
    }
    let work = capelli_work(fs);
    if work <= options.capelli_term_cap {
        let v = razmyslov_symbolic_dependence(fs)?;
        cross_checks.push(agree("razmyslov", &verdict, &v)?);
    } else {
        cross_checks.push(CrossCheck::Skipped {
            decider: "razmyslov",
            reason: format!("expansion size {work} exceeds cap {}", options.capelli_term_cap),
        });
    }

    let local = match (&bounds, options.local_sampling) {
        (Some(b), true) => {
            let dim = usize::try_from(b.s_local_min).unwrap_or(usize::MAX);
            let config = SamplerConfig {
                dim,
                trials: options.trials,
                bound: options.bound,
                seed: options.seed,
            };
            let v = local_dependence_sample(fs, &config)?;
            if verdict.is_dependent() && v.witness.is_some() {
                return Err(Error::DeciderDisagreement(
                    "local sampler found a witness for a dependent family".into(),
                ));
            }
            Some(LocalDemo { dim, verdict: v })
        }
        _ => None,
    };

    Ok(Decision {
        verdict,
        bounds,
        cross_checks,
        local,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ncparse::parse_poly;
    use crate::scalar::Field;
    use crate::specialpoly::standard_poly;
    use crate::verdict::Status;

    const Q: Field = Field::Rational;

    fn fam(src: &[&str]) -> Vec<NcPoly> {
        src.iter().map(|s| parse_poly(s, Q).unwrap()).collect()
    }

    #[test]
    fn variable_and_constant() {
        let d = decide_dependence(&fam(&["X1", "1"]), &DecideOptions::default()).unwrap();
        assert_eq!(d.verdict.status, Status::Independent);
        assert_eq!(d.bounds.as_ref().unwrap().beta, 2);
        let local = d.local.unwrap();
        assert_eq!(local.dim, 2);
        assert_eq!(local.verdict.status, Status::Independent);
        assert_eq!(d.cross_checks.len(), 2);
        assert!(d.cross_checks.iter().all(|c| matches!(c, CrossCheck::Agreed { .. })));
    }

    #[test]
    fn commutator_family() {
        let d = decide_dependence(&fam(&["X1*X2", "X2*X1", "X1*X2 - X2*X1"]), &DecideOptions::default())
            .unwrap();
        assert_eq!(
            d.verdict.coefficients,
            Some(vec![Q.one(), Q.from_i64(-1), Q.from_i64(-1)])
        );
        assert_eq!(d.local.unwrap().verdict.status, Status::NoWitnessFound);
    }

    #[test]
    fn standard_four_and_one() {
        let fs = vec![standard_poly(4, Q).unwrap(), NcPoly::one(Q)];
        let d = decide_dependence(&fs, &DecideOptions::default()).unwrap();
        assert_eq!(d.verdict.status, Status::Independent);
        assert_eq!(d.bounds.as_ref().unwrap().s_local_min, 3);
        let local = d.local.unwrap();
        assert_eq!(local.dim, 3);
        assert_eq!(local.verdict.status, Status::Independent);
    }

    #[test]
    fn zero_member_skips_bounds() {
        let d = decide_dependence(&fam(&["X1", "0"]), &DecideOptions::default()).unwrap();
        assert_eq!(d.verdict.status, Status::Dependent);
        assert!(d.bounds.is_none());
        assert!(d.local.is_none());
    }

    #[test]
    fn caps_skip_cross_checks() {
        let opts = DecideOptions {
            sigma_cap: 2,
            capelli_term_cap: 1,
            local_sampling: false,
            ..DecideOptions::default()
        };
        let d = decide_dependence(&fam(&["X1*X2", "X2"]), &opts).unwrap();
        assert!(d.cross_checks.iter().all(|c| matches!(c, CrossCheck::Skipped { .. })));
    }
}
