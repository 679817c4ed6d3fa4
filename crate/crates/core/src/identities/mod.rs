//! Exact machine checks of the finite identities satisfied by `B(m, n)`.
//!
//! Every verifier builds both sides independently and compares them exactly,
//! either as polynomials, as fractions (cross-multiplied), or as power series
//! in `u` truncated at a fixed order.

mod exact;
mod nonneg;
mod series;
mod theta;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use serde::{Serialize, Serializer};

use crate::algebra::MPoly;
use crate::error::{Error, Result};

pub use exact::verify_exact_identity;
pub use nonneg::{nonnegativity_difference, verify_nonnegativity};
pub use series::verify_series_identity;
pub use theta::{fin_theta_rhs, fine_corollary_rhs, truncated_theta, verify_theta};

/// Default truncation order in `u` for the series identities.
pub const DEFAULT_TRUNC: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IdentityId {
    FinQbinom,
    FinQbi,
    FinRogersFine,
    FinLebesgue,
    Prop41,
    Prop42,
    Thm43,
    Phi21Rep,
    FinTheta,
    FineCor,
    MultinomialForm,
    DelannoyAlternating,
    QlogGeneral,
    QlogSquare,
    Cor2,
    ButlerR,
}

impl IdentityId {
    pub const ALL: [IdentityId; 16] = [
        IdentityId::FinQbinom,
        IdentityId::FinQbi,
        IdentityId::FinRogersFine,
        IdentityId::FinLebesgue,
        IdentityId::Prop41,
        IdentityId::Prop42,
        IdentityId::Thm43,
        IdentityId::Phi21Rep,
        IdentityId::FinTheta,
        IdentityId::FineCor,
        IdentityId::MultinomialForm,
        IdentityId::DelannoyAlternating,
        IdentityId::QlogGeneral,
        IdentityId::QlogSquare,
        IdentityId::Cor2,
        IdentityId::ButlerR,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityId::FinQbinom => "fin-qbinom",
            IdentityId::FinQbi => "fin-qbi",
            IdentityId::FinRogersFine => "fin-rogers-fine",
            IdentityId::FinLebesgue => "fin-lebesgue",
            IdentityId::Prop41 => "prop41",
            IdentityId::Prop42 => "prop42",
            IdentityId::Thm43 => "thm43",
            IdentityId::Phi21Rep => "phi21-rep",
            IdentityId::FinTheta => "fin-theta",
            IdentityId::FineCor => "fine-cor",
            IdentityId::MultinomialForm => "multinomial-form",
            IdentityId::DelannoyAlternating => "delannoy-alternating",
            IdentityId::QlogGeneral => "qlog-general",
            IdentityId::QlogSquare => "qlog-square",
            IdentityId::Cor2 => "cor2",
            IdentityId::ButlerR => "butler-r",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityId {
    type Err = Error;
    /// Accepts both `fin-theta` and `fin_theta`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.replace('_', "-");
        IdentityId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown identity {s:?}")))
    }
}

impl Serialize for IdentityId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// Parameters of one identity instance; each verifier reads what it needs.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub h: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trunc: Option<usize>,
}

impl Params {
    pub fn n(n: usize) -> Self {
        Params {
            n: Some(n),
            ..Params::default()
        }
    }

    pub fn with_m(mut self, m: usize) -> Self {
        self.m = Some(m);
        self
    }

    pub fn with_k(mut self, k: usize) -> Self {
        self.k = Some(k);
        self
    }

    pub fn with_l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }

    pub fn with_r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn with_h(mut self, h: usize) -> Self {
        self.h = Some(h);
        self
    }

    pub fn with_trunc(mut self, k: usize) -> Self {
        self.trunc = Some(k);
        self
    }

    pub(crate) fn need(&self, name: &str, v: Option<usize>) -> Result<usize> {
        v.ok_or_else(|| Error::BadIndices(format!("missing parameter --{name}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Verified,
    Failed,
}

#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub parameters: Params,
    pub status: Status,
    /// Both sides, when they agree.
    pub value: Option<String>,
    pub witness: Option<String>,
    pub elapsed_ms: f64,
}

impl IdentityReport {
    pub fn verified(&self) -> bool {
        self.status == Status::Verified
    }
}

/// Result of one comparison before timing is attached.
pub(crate) struct Outcome {
    pub value: Option<String>,
    pub witness: Option<String>,
}

impl Outcome {
    pub fn compare(lhs: &MPoly, rhs: &MPoly) -> Outcome {
        match first_difference(lhs, rhs) {
            None => Outcome {
                value: Some(lhs.to_string()),
                witness: None,
            },
            Some(w) => Outcome {
                value: None,
                witness: Some(w),
            },
        }
    }

    pub fn fail(witness: String) -> Outcome {
        Outcome {
            value: None,
            witness: Some(witness),
        }
    }
}

/// Describes the lowest monomial where two polynomials differ.
pub fn first_difference(lhs: &MPoly, rhs: &MPoly) -> Option<String> {
    let diff = lhs - rhs;
    let (m, _) = diff.terms().next()?;
    let mono = MPoly::monomial(1, m.q, m.t, m.u);
    Some(format!(
        "coefficient of {mono}: lhs {}, rhs {}",
        lhs.coeff(*m),
        rhs.coeff(*m)
    ))
}

pub(crate) fn timed(
    id: IdentityId,
    parameters: Params,
    body: impl FnOnce() -> Result<Outcome>,
) -> Result<IdentityReport> {
    let start = Instant::now();
    let out = body()?;
    Ok(IdentityReport {
        identity_id: id,
        parameters,
        status: if out.witness.is_none() {
            Status::Verified
        } else {
            Status::Failed
        },
        value: out.value,
        witness: out.witness,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Dispatches to the verifier owning `id`.
pub fn verify(id: IdentityId, params: &Params) -> Result<IdentityReport> {
    use IdentityId::*;
    match id {
        FinQbinom | FinQbi | FinRogersFine => {
            let n = params.need("n", params.n)?;
            verify_series_identity(id, n, params.trunc.unwrap_or(DEFAULT_TRUNC))
        }
        FinLebesgue | Prop41 | Prop42 | Thm43 | Phi21Rep => verify_exact_identity(id, params),
        FinTheta | FineCor | MultinomialForm | DelannoyAlternating => {
            verify_theta(id, params.need("n", params.n)?)
        }
        QlogGeneral | QlogSquare | Cor2 | ButlerR => verify_nonnegativity(id, params),
    }
}
