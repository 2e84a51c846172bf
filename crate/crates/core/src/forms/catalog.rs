//! Orbit representatives of nondegenerate exterior 3-forms in dimensions
//! 3, 5, 6 and 7, the `α^(p)` family and the affine plane through
//! `α^(3)`, `α^(3)′`, `α^(3)′′`.

use std::fmt;

use num_traits::One;

use super::ExteriorThreeForm;
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CatalogName {
    Alpha1,
    Alpha2,
    Alpha3,
    AlphaP(usize),
    Gamma6,
    Omega6,
    Rho7,
    Beta7,
    Alpha3Prime,
    Alpha3DoublePrime,
    AlphaPlane(Rational, Rational, Rational),
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: CatalogName,
    pub form: ExteriorThreeForm,
    /// Classification label `f1`…`f9` of the fixed entries.
    pub f_label: Option<&'static str>,
}

impl CatalogName {
    /// The nine fixed representatives, in `f1`…`f9` order.
    pub const FIXED: [CatalogName; 9] = [
        CatalogName::Alpha1,
        CatalogName::Alpha2,
        CatalogName::Gamma6,
        CatalogName::Omega6,
        CatalogName::Rho7,
        CatalogName::Alpha3Prime,
        CatalogName::Beta7,
        CatalogName::Alpha3,
        CatalogName::Alpha3DoublePrime,
    ];

    /// Parses `name` or `name:params`, e.g. `rho7`, `alpha_p:4`,
    /// `alpha_plane:1/2,1/4,1/4`.
    pub fn parse(s: &str) -> Result<Self> {
        let (name, params) = match s.split_once(':') {
            Some((n, p)) => (n.trim(), Some(p.trim())),
            None => (s.trim(), None),
        };
        let no_params = |c: CatalogName| match params {
            None => Ok(c),
            Some(_) => Err(Error::InvalidCatalogParams {
                name: name.to_string(),
                reason: "takes no parameters".into(),
            }),
        };
        match name {
            "alpha1" => no_params(CatalogName::Alpha1),
            "alpha2" => no_params(CatalogName::Alpha2),
            "alpha3" => no_params(CatalogName::Alpha3),
            "gamma6" => no_params(CatalogName::Gamma6),
            "omega6" => no_params(CatalogName::Omega6),
            "rho7" => no_params(CatalogName::Rho7),
            "beta7" => no_params(CatalogName::Beta7),
            "alpha3_prime" => no_params(CatalogName::Alpha3Prime),
            "alpha3_double_prime" => no_params(CatalogName::Alpha3DoublePrime),
            "alpha_p" => {
                let p = params
                    .and_then(|p| p.parse::<usize>().ok())
                    .filter(|&p| p >= 1)
                    .ok_or_else(|| Error::InvalidCatalogParams {
                        name: name.into(),
                        reason: "expected a positive integer p".into(),
                    })?;
                Ok(CatalogName::AlphaP(p))
            }
            "alpha_plane" => {
                let raw = params.ok_or_else(|| Error::InvalidCatalogParams {
                    name: name.into(),
                    reason: "expected t0,t1,t2".into(),
                })?;
                let ts = raw.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
                let [t0, t1, t2]: [Rational; 3] = ts.try_into().map_err(|_| Error::InvalidCatalogParams {
                    name: name.into(),
                    reason: "expected exactly three parameters".into(),
                })?;
                Ok(CatalogName::AlphaPlane(t0, t1, t2))
            }
            other => Err(Error::UnknownCatalogName(other.to_string())),
        }
    }

    pub fn f_label(&self) -> Option<&'static str> {
        match self {
            CatalogName::Alpha1 | CatalogName::AlphaP(1) => Some("f1"),
            CatalogName::Alpha2 | CatalogName::AlphaP(2) => Some("f2"),
            CatalogName::Gamma6 => Some("f3"),
            CatalogName::Omega6 => Some("f4"),
            CatalogName::Rho7 => Some("f5"),
            CatalogName::Alpha3Prime => Some("f6"),
            CatalogName::Beta7 => Some("f7"),
            CatalogName::Alpha3 | CatalogName::AlphaP(3) => Some("f8"),
            CatalogName::Alpha3DoublePrime => Some("f9"),
            CatalogName::AlphaP(_) | CatalogName::AlphaPlane(..) => None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            CatalogName::Alpha1 => 3,
            CatalogName::Alpha2 => 5,
            CatalogName::AlphaP(p) => 2 * p + 1,
            CatalogName::Gamma6 | CatalogName::Omega6 => 6,
            _ => 7,
        }
    }

    pub fn build(&self) -> Result<CatalogEntry> {
        let form = match self {
            CatalogName::Alpha1 => alpha_p(1)?,
            CatalogName::Alpha2 => alpha_p(2)?,
            CatalogName::Alpha3 => alpha_p(3)?,
            CatalogName::AlphaP(p) => {
                if *p == 0 {
                    return Err(Error::InvalidCatalogParams { name: "alpha_p".into(), reason: "p must be >= 1".into() });
                }
                alpha_p(*p)?
            }
            CatalogName::Gamma6 => ExteriorThreeForm::from_monomials(6, &[[1, 2, 3], [4, 5, 6]])?,
            CatalogName::Omega6 => ExteriorThreeForm::from_monomials(6, &[[1, 2, 6], [3, 1, 5], [2, 3, 4]])?,
            CatalogName::Rho7 => ExteriorThreeForm::from_monomials(7, &[[1, 2, 3], [2, 4, 6], [3, 5, 7]])?,
            CatalogName::Beta7 => {
                ExteriorThreeForm::from_monomials(7, &[[1, 3, 5], [2, 4, 5], [1, 7, 2], [3, 6, 4]])?
            }
            CatalogName::Alpha3Prime => alpha_p(3)?.add(&ExteriorThreeForm::from_monomials(7, &[[1, 2, 3]])?)?,
            CatalogName::Alpha3DoublePrime => {
                alpha_p(3)?.add(&ExteriorThreeForm::from_monomials(7, &[[1, 2, 3], [4, 5, 6]])?)?
            }
            CatalogName::AlphaPlane(t0, t1, t2) => {
                let sum = t0 + t1 + t2;
                if !sum.is_one() {
                    return Err(Error::PlaneParametersNotAffine(format_rational(&sum)));
                }
                let a = alpha_p(3)?;
                let a1 = CatalogName::Alpha3Prime.build()?.form;
                let a2 = CatalogName::Alpha3DoublePrime.build()?.form;
                a.scale(t0).add(&a1.scale(t1))?.add(&a2.scale(t2))?
            }
        };
        Ok(CatalogEntry { name: self.clone(), form, f_label: self.f_label() })
    }
}

impl fmt::Display for CatalogName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CatalogName::Alpha1 => write!(f, "alpha1"),
            CatalogName::Alpha2 => write!(f, "alpha2"),
            CatalogName::Alpha3 => write!(f, "alpha3"),
            CatalogName::AlphaP(p) => write!(f, "alpha_p:{p}"),
            CatalogName::Gamma6 => write!(f, "gamma6"),
            CatalogName::Omega6 => write!(f, "omega6"),
            CatalogName::Rho7 => write!(f, "rho7"),
            CatalogName::Beta7 => write!(f, "beta7"),
            CatalogName::Alpha3Prime => write!(f, "alpha3_prime"),
            CatalogName::Alpha3DoublePrime => write!(f, "alpha3_double_prime"),
            CatalogName::AlphaPlane(a, b, c) => {
                write!(f, "alpha_plane:{},{},{}", format_rational(a), format_rational(b), format_rational(c))
            }
        }
    }
}

/// `α^(p) = Σ_{m=1}^{p} θ^m∧θ^{m+p}∧θ^{2p+1}` on `K^{2p+1}`.
fn alpha_p(p: usize) -> Result<ExteriorThreeForm> {
    let top = 2 * p + 1;
    let monomials: Vec<[usize; 3]> = (1..=p).map(|m| [m, m + p, top]).collect();
    ExteriorThreeForm::from_monomials(top, &monomials)
}

/// All nine fixed catalog entries in `f1`…`f9` order.
pub fn fixed_catalog() -> Vec<CatalogEntry> {
    CatalogName::FIXED.iter().map(|c| c.build().expect("catalog forms are well formed")).collect()
}
