use std::fmt;
use std::str::FromStr;

use dimfox_core::subgroup::{
    jennings_series, lower_central_series, lower_exponent_p_series, stretched_series, validate_nseries,
};
use dimfox_core::{Error, FiniteGroup, NSeries, Result, Subgroup};

/// How to build an N-series for a given group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SeriesSpec {
    /// The lower central series.
    Gamma,
    Jennings(u64),
    ExponentP(u64),
    /// `N_k = γ_{⌈k/2⌉}`.
    Stretched,
    /// Explicit terms, each a comma separated generator list.
    Chain(Vec<String>),
}

impl SeriesSpec {
    /// Builds and validates the series.
    pub fn build(&self, g: &FiniteGroup) -> Result<NSeries> {
        let series = match self {
            SeriesSpec::Gamma => return Ok(lower_central_series(g)),
            SeriesSpec::Jennings(p) => jennings_series(g, *p),
            SeriesSpec::ExponentP(p) => lower_exponent_p_series(g, *p),
            SeriesSpec::Stretched => stretched_series(&lower_central_series(g)),
            SeriesSpec::Chain(terms) => {
                let chain = terms
                    .iter()
                    .map(|t| g.parse_elements(t).map(|gens| Subgroup::generated(g, &gens)))
                    .collect::<Result<Vec<_>>>()?;
                return validate_nseries(g, chain);
            }
        };
        validate_nseries(g, series.terms().to_vec())
    }
}

impl FromStr for SeriesSpec {
    type Err = Error;

    /// `gamma`, `jennings:p`, `exponent-p:p`, `stretched`, or explicit terms separated by
    /// `;` such as `x,y; x^2; 1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let prime = |arg: &str| -> Result<u64> {
            let p: u64 = arg.trim().parse().map_err(|_| Error::Parse(format!("bad prime in {s:?}")))?;
            if !dimfox_core::families::is_prime(p) {
                return Err(Error::Parse(format!("{p} is not prime")));
            }
            Ok(p)
        };
        match s.split_once(':') {
            _ if s.is_empty() || s == "gamma" => Ok(SeriesSpec::Gamma),
            _ if s == "stretched" => Ok(SeriesSpec::Stretched),
            Some(("jennings", p)) => Ok(SeriesSpec::Jennings(prime(p)?)),
            Some(("exponent-p", p)) => Ok(SeriesSpec::ExponentP(prime(p)?)),
            _ => Ok(SeriesSpec::Chain(s.split(';').map(|t| t.trim().to_string()).collect())),
        }
    }
}

impl fmt::Display for SeriesSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesSpec::Gamma => write!(f, "gamma"),
            SeriesSpec::Jennings(p) => write!(f, "jennings:{p}"),
            SeriesSpec::ExponentP(p) => write!(f, "exponent-p:{p}"),
            SeriesSpec::Stretched => write!(f, "stretched"),
            SeriesSpec::Chain(terms) => write!(f, "{}", terms.join("; ")),
        }
    }
}

/// A built series with the label used in reports.
#[derive(Clone, Debug)]
pub struct LabeledSeries {
    pub label: String,
    pub series: NSeries,
}

impl LabeledSeries {
    pub fn build(spec: &SeriesSpec, g: &FiniteGroup) -> Result<Self> {
        Ok(LabeledSeries { label: spec.to_string(), series: spec.build(g)? })
    }

    pub fn gamma(g: &FiniteGroup) -> Self {
        LabeledSeries { label: "gamma".into(), series: lower_central_series(g) }
    }
}
