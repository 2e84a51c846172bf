use std::fmt::Write;

use x3form_core::algebra::CertificateField;
use x3form_core::report::{AnalysisReport, CatalogListing, ReproduceReport, ReproduceRow};

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn certificate(field: CertificateField, primes: &[u64]) -> String {
    match field {
        CertificateField::Rational => "rational".to_string(),
        CertificateField::DualPrime => format!("dual-prime ({})", join(primes)),
    }
}

pub fn catalog(listing: &CatalogListing) -> String {
    let mut out = String::new();
    let width = listing.entries.iter().map(|e| e.name.len()).max().unwrap_or(4).max(4);
    if !listing.entries.is_empty() {
        writeln!(out, "{:<width$}  {:>2}  {:<5}  monomials", "name", "n", "label").unwrap();
        for e in &listing.entries {
            let label = e.f_label.as_deref().unwrap_or("-");
            writeln!(out, "{:<width$}  {:>2}  {:<5}  {}", e.name, e.n, label, e.monomials).unwrap();
        }
    }
    if !listing.families.is_empty() {
        if !listing.entries.is_empty() {
            out.push('\n');
        }
        writeln!(out, "families:").unwrap();
        for f in &listing.families {
            writeln!(out, "  {}  (n = {})  {}", f.pattern, f.dims, f.description).unwrap();
        }
    }
    if let Some(note) = &listing.note {
        writeln!(out, "note: {note}").unwrap();
    }
    out
}

pub fn analysis(r: &AnalysisReport) -> String {
    let mut out = String::new();
    let label = r.form.f_label.as_deref().map(|l| format!("{l}, ")).unwrap_or_default();
    writeln!(out, "form                   {} ({}n = {})", r.form.source, label, r.form.n).unwrap();
    writeln!(out, "terms                  {}", r.form.display).unwrap();
    let reg = &r.regularity;
    writeln!(out, "nondegenerate          {}", yes_no(reg.nondegenerate)).unwrap();
    if let Some(w) = &reg.witness {
        writeln!(out, "degeneracy witness     ({})", w.join(", ")).unwrap();
    }
    writeln!(out, "intertwiner dimension  {}", reg.intertwiner_dimension).unwrap();
    writeln!(out, "3-regular              {}", yes_no(reg.three_regular)).unwrap();
    if let Some(reason) = &reg.reason {
        writeln!(out, "reason                 {reason}").unwrap();
    }
    if let Some(lie) = &r.lie {
        writeln!(out, "lie closure            {} (so({}) has {})", lie.dimension, r.form.n, lie.so_dimension).unwrap();
        if let Some(s) = lie.stabilizer_dimension {
            writeln!(out, "stabilizer dimension   {s}").unwrap();
        }
    }
    if let Some(h) = &r.hilbert {
        writeln!(out, "hilbert series         {}", join(&h.actual)).unwrap();
        writeln!(out, "predicted              {}", join(&h.predicted)).unwrap();
        match h.first_mismatch {
            Some(d) => writeln!(out, "first mismatch         {d}").unwrap(),
            None => writeln!(out, "first mismatch         none").unwrap(),
        }
    }
    if let Some(k) = &r.koszul {
        writeln!(out, "koszul exact up to     {} (of {})", k.exact_up_to, k.max_degree).unwrap();
        for (d, s) in &k.degrees {
            writeln!(
                out,
                "  slice {d}: ranks {} {} {}{}",
                s.rank_row,
                s.rank_matrix,
                s.rank_column,
                if s.exact { "" } else { "  not exact" }
            )
            .unwrap();
        }
    }
    writeln!(out, "certificate            {}", certificate(r.certificate.field, &r.certificate.primes)).unwrap();
    let central = if r.checks.central_generators.is_empty() { "none".to_string() } else { join(&r.checks.central_generators) };
    writeln!(out, "central generators     {central}").unwrap();
    if let Some(b) = r.checks.matrix_identity {
        writeln!(out, "matrix identity        {}", yes_no(b)).unwrap();
    }
    if let Some(b) = r.checks.bigrading {
        writeln!(out, "bigrading              {}", yes_no(b)).unwrap();
    }
    for w in &r.warnings {
        writeln!(out, "warning: {w}").unwrap();
    }
    out
}

fn opt(v: Option<usize>) -> String {
    v.map_or("-".to_string(), |x| x.to_string())
}

fn hilbert_cell(row: &ReproduceRow) -> String {
    match (row.hilbert_match_depth, row.hilbert_first_mismatch) {
        (Some(d), Some(m)) => format!("{d} (mismatch {m})"),
        (Some(d), None) => d.to_string(),
        _ => "-".to_string(),
    }
}

pub fn reproduce(r: &ReproduceReport) -> String {
    let mut out = String::new();
    let header = ["name", "label", "n", "nondeg", "3-regular", "intertw", "lie", "stab", "hilbert", "koszul"];
    let rows: Vec<[String; 10]> = r
        .rows
        .iter()
        .map(|row| {
            [
                row.name.clone(),
                row.f_label.clone().unwrap_or_else(|| "-".into()),
                row.n.to_string(),
                yes_no(row.nondegenerate).into(),
                yes_no(row.three_regular).into(),
                row.intertwiner_dimension.to_string(),
                opt(row.lie_closure_dimension),
                opt(row.stabilizer_dimension),
                hilbert_cell(row),
                opt(row.koszul_exact_depth),
            ]
        })
        .collect();
    let widths: Vec<usize> =
        (0..header.len()).map(|c| rows.iter().map(|r| r[c].len()).chain([header[c].len()]).max().unwrap_or(0)).collect();
    let line = |cells: &[String]| -> String {
        cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect::<Vec<_>>().join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(&header.map(String::from))).unwrap();
    for row in &rows {
        writeln!(out, "{}", line(row)).unwrap();
    }
    let c = &r.checks;
    out.push('\n');
    writeln!(out, "hilbert degree {}, koszul degree {}, seed {}", r.config.max_degree, r.config.koszul_degree, r.config.seed)
        .unwrap();
    writeln!(out, "matrix identity (beta7)          {}", yes_no(c.matrix_identity)).unwrap();
    writeln!(out, "  with one sign flipped          {}", yes_no(c.matrix_identity_perturbed)).unwrap();
    writeln!(out, "bigrading (beta7)                {}", yes_no(c.bigrading)).unwrap();
    writeln!(out, "top generator central, p=1..3    {}", join(&c.top_generator_central.map_yes())).unwrap();
    writeln!(out, "tensor factorization, p=1..3     {}", join(&c.tensor_factorization.map_yes())).unwrap();
    writeln!(out, "commutator = wedge, p=1..3       {}", join(&c.commutator_wedge.map_yes())).unwrap();
    for d in &c.derivations {
        let name = serde_json::to_value(d.derivation).ok().and_then(|v| v.as_str().map(str::to_string)).unwrap_or_default();
        writeln!(out, "derivation {name:<30} descends {}", yes_no(d.descends)).unwrap();
    }
    out
}

trait MapYes {
    fn map_yes(&self) -> Vec<&'static str>;
}

impl MapYes for Vec<bool> {
    fn map_yes(&self) -> Vec<&'static str> {
        self.iter().map(|&b| yes_no(b)).collect()
    }
}
