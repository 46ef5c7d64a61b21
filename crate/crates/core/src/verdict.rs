use std::fmt;

use crate::matexact::MatTuple;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Dependent,
    Independent,
    /// A randomized sampler ran out of trials without a witness. Evidence
    /// of dependence, not a proof.
    NoWitnessFound,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Dependent => "dependent",
            Status::Independent => "independent",
            Status::NoWitnessFound => "no_witness_found",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evaluation point certifying independence: the stacked evaluations (or,
/// with a direction, the vectors `f_j(A) v`) have full rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub tuple: MatTuple,
    pub direction: Option<Vec<Scalar>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceVerdict {
    pub status: Status,
    /// `alpha` with `sum_j alpha_j f_j = 0`; present exactly on `Dependent`.
    pub coefficients: Option<Vec<Scalar>>,
    pub witness: Option<Witness>,
    pub trials_used: u64,
    pub note: Option<String>,
}

impl DependenceVerdict {
    pub fn dependent(coefficients: Vec<Scalar>) -> Self {
        DependenceVerdict {
            status: Status::Dependent,
            coefficients: Some(coefficients),
            witness: None,
            trials_used: 0,
            note: None,
        }
    }

    pub fn independent() -> Self {
        DependenceVerdict {
            status: Status::Independent,
            coefficients: None,
            witness: None,
            trials_used: 0,
            note: None,
        }
    }

    pub fn witnessed(witness: Witness, trials_used: u64) -> Self {
        DependenceVerdict {
            status: Status::Independent,
            coefficients: None,
            witness: Some(witness),
            trials_used,
            note: None,
        }
    }

    pub fn no_witness(trials_used: u64, note: String) -> Self {
        DependenceVerdict {
            status: Status::NoWitnessFound,
            coefficients: None,
            witness: None,
            trials_used,
            note: Some(note),
        }
    }

    pub fn is_dependent(&self) -> bool {
        self.status == Status::Dependent
    }
}
