//! Form files (`{"n": 7, "terms": [[1, 2, 3, "1"], ...]}`) and form sources
//! of the shape `catalog:<name>[:params]` or a file path.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::{CatalogName, ExteriorThreeForm};
use crate::error::{Error, Result};
use crate::field::{format_rational, parse_rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormFile {
    pub n: usize,
    pub terms: Vec<(usize, usize, usize, String)>,
}

impl FormFile {
    pub fn from_form(form: &ExteriorThreeForm) -> Self {
        FormFile {
            n: form.dim(),
            terms: form.terms().map(|([i, j, k], c)| (*i, *j, *k, format_rational(c))).collect(),
        }
    }

    /// Validates the file and builds the form. Triples must be strictly
    /// increasing and in range; repeated triples are summed.
    pub fn to_form(&self) -> Result<ExteriorThreeForm> {
        if self.n < 3 {
            return Err(Error::DimensionTooSmall(self.n));
        }
        let mut entries = Vec::with_capacity(self.terms.len());
        for (i, j, k, c) in &self.terms {
            if !(i < j && j < k) {
                return Err(Error::UnorderedTriple(*i, *j, *k));
            }
            entries.push(([*i, *j, *k], parse_rational(c)?));
        }
        ExteriorThreeForm::from_components(self.n, entries)
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Schema(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("form files serialize")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FormSource {
    Catalog(CatalogName),
    File(PathBuf),
}

impl FormSource {
    pub fn parse(s: &str) -> Result<Self> {
        match s.strip_prefix("catalog:") {
            Some(rest) => Ok(FormSource::Catalog(CatalogName::parse(rest)?)),
            None => Ok(FormSource::File(PathBuf::from(s))),
        }
    }

    pub fn load(&self) -> Result<LoadedForm> {
        match self {
            FormSource::Catalog(name) => {
                let entry = name.build()?;
                Ok(LoadedForm {
                    source: format!("catalog:{name}"),
                    name: Some(name.to_string()),
                    f_label: entry.f_label,
                    form: entry.form,
                })
            }
            FormSource::File(path) => load_file(path),
        }
    }
}

fn load_file(path: &Path) -> Result<LoadedForm> {
    let text = std::fs::read_to_string(path)?;
    let form = FormFile::parse(&text)?.to_form()?;
    Ok(LoadedForm { source: path.display().to_string(), name: None, f_label: None, form })
}

/// A form together with where it came from.
#[derive(Clone, Debug)]
pub struct LoadedForm {
    pub source: String,
    pub name: Option<String>,
    pub f_label: Option<&'static str>,
    pub form: ExteriorThreeForm,
}
