//! Analysis reports: the versioned JSON schema and the text rendering.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use kmonoid::index_one::{canonical_numerical_semigroup, enclosing_rays, index_one_form};
use kmonoid::{Element, FgMonoid, IndexCertificate};

use crate::error::{CliError, Result};

pub const SCHEMA_VERSION: u32 = 1;

/// Full analysis of one monoid. Arbitrary-precision values are serialized
/// as decimal strings; structurally small values stay numeric.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub k: usize,
    pub dimension: usize,
    /// Minimal generators, graded-lexicographic order.
    pub beta: Vec<Vec<String>>,
    /// Generator matrix, row-major: k rows (coordinates), `dimension`
    /// columns (minimal generators).
    pub matrix: Vec<Vec<String>>,
    pub index: usize,
    /// Maximal independent coordinate set, 1-based ascending.
    pub coord_set: Vec<usize>,
    pub free_basis: Vec<Vec<String>>,
    pub certificate: CertificateReport,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub index_one: Option<IndexOneReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    /// Indices into `beta` of the free base.
    pub base: Vec<usize>,
    pub witnesses: Vec<WitnessReport>,
}

/// One dependence relation: `lhs . base + multiplier * beta[member] = rhs . base`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub member: usize,
    pub multiplier: String,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexOneReport {
    /// The unique primitive ray enclosing the monoid.
    pub ray: Vec<String>,
    /// Contents of the minimal generators along the ray, ascending.
    pub multipliers: Vec<String>,
    pub multiplier_gcd: String,
    /// Minimal generators of the canonical numerical semigroup.
    pub canonical: Vec<u64>,
    pub frobenius: u64,
    /// True when the canonical form is all of N: the conductor of N is
    /// defined as 1, so `frobenius` degenerates to 0 there (other tools
    /// often report -1 for this case).
    pub frobenius_degenerate: bool,
    pub multiplicity: u64,
    pub gaps: Vec<u64>,
    pub enclosing_rays: Vec<Vec<String>>,
}

/// Standalone certificate document (`certify` output, `verify --certificate`
/// input). Carries the minimal generators so a certificate is checkable
/// against the monoid it was issued for.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub schema: u32,
    pub beta: Vec<Vec<String>>,
    pub base: Vec<usize>,
    pub witnesses: Vec<WitnessReport>,
}

fn element_strings(e: &Element) -> Vec<String> {
    e.coords().iter().map(|c| c.to_string()).collect()
}

pub fn certificate_report(cert: &IndexCertificate) -> CertificateReport {
    CertificateReport {
        base: cert.base.clone(),
        witnesses: cert
            .witnesses
            .iter()
            .map(|w| WitnessReport {
                member: w.member,
                multiplier: w.multiplier.to_string(),
                lhs: w.lhs.iter().map(|c| c.to_string()).collect(),
                rhs: w.rhs.iter().map(|c| c.to_string()).collect(),
            })
            .collect(),
    }
}

pub fn certificate_file(h: &FgMonoid, cert: &IndexCertificate) -> CertificateFile {
    let report = certificate_report(cert);
    CertificateFile {
        schema: SCHEMA_VERSION,
        beta: h.minimal_generators().iter().map(element_strings).collect(),
        base: report.base,
        witnesses: report.witnesses,
    }
}

/// Reconstructs a library certificate from a certificate document,
/// checking that it was issued for the same monoid (same minimal
/// generators in the same canonical order).
pub fn certificate_from_file(h: &FgMonoid, file: &CertificateFile) -> Result<IndexCertificate> {
    let beta: Vec<Vec<String>> = h.minimal_generators().iter().map(element_strings).collect();
    if file.beta != beta {
        return Err(CliError::verification(
            "certificate was issued for a different monoid (minimal generators differ)",
        ));
    }
    // Content problems in a certificate are verification failures, not
    // input parse errors: a corrupted certificate must fail verification.
    let parse_nat = |s: &String| {
        s.parse::<num_bigint::BigUint>().map_err(|_| {
            CliError::verification(format!("invalid natural number {s:?} in certificate"))
        })
    };
    let witnesses = file
        .witnesses
        .iter()
        .map(|w| {
            Ok(kmonoid::Witness {
                member: w.member,
                multiplier: parse_nat(&w.multiplier)?,
                lhs: w.lhs.iter().map(parse_nat).collect::<Result<Vec<_>>>()?,
                rhs: w.rhs.iter().map(parse_nat).collect::<Result<Vec<_>>>()?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IndexCertificate {
        base: file.base.clone(),
        witnesses,
    })
}

/// Builds the full report. The trivial monoid carries no coordinate set or
/// free basis and is rejected as unsupported; the internal consistency gate
/// (index = |coord set| = |free basis| = rank) aborts rather than serialize
/// a contradictory report.
pub fn build_report(h: &FgMonoid) -> Result<AnalysisReport> {
    if h.is_trivial() {
        return Err(CliError::unsupported(
            "the trivial monoid {0} has no analysis report (index 1 by convention, \
             but no nonempty independent coordinate set exists)",
        ));
    }
    let index = h.index();
    let rank = h.generator_matrix().rank();
    let coord_set = h.maximal_independent_coords()?;
    let free_basis = h.free_basis()?;
    if index != rank || index != coord_set.len() || index != free_basis.len() {
        return Err(CliError::verification(format!(
            "internal consistency gate: index {index}, rank {rank}, |coord set| {}, \
             |free basis| {} disagree",
            coord_set.len(),
            free_basis.len()
        )));
    }
    let cert = h.index_certificate()?;

    let matrix = (0..h.k())
        .map(|r| {
            (0..h.dimension())
                .map(|c| h.minimal_generators()[c].coord(r).to_string())
                .collect()
        })
        .collect();

    let index_one = if index == 1 {
        let form = index_one_form(h)?;
        let ns = canonical_numerical_semigroup(h)?;
        let rays = enclosing_rays(h)?;
        Some(IndexOneReport {
            ray: element_strings(&form.ray),
            multipliers: form.multipliers.iter().map(|d| d.to_string()).collect(),
            multiplier_gcd: form.content_gcd.to_string(),
            canonical: ns.minimal_generators().to_vec(),
            frobenius: ns.frobenius(),
            frobenius_degenerate: ns.is_all_of_n(),
            multiplicity: ns.multiplicity(),
            gaps: ns.gaps(),
            enclosing_rays: rays.iter().map(element_strings).collect(),
        })
    } else {
        None
    };

    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        k: h.k(),
        dimension: h.dimension(),
        beta: h.minimal_generators().iter().map(element_strings).collect(),
        matrix,
        index,
        coord_set: coord_set.to_vec(),
        free_basis: free_basis.iter().map(element_strings).collect(),
        certificate: certificate_report(&cert),
        index_one,
    })
}

fn combination_text(coeffs: &[String], base: &[usize], beta: &[Vec<String>]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(base)
        .filter(|(c, _)| c.as_str() != "0")
        .map(|(c, &j)| format!("{c}*({})", beta[j].join(",")))
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join(" + ")
    }
}

pub fn render_text(source: &str, report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "source: {source}");
    let _ = writeln!(out, "k: {}", report.k);
    let _ = writeln!(out, "dimension: {}", report.dimension);
    let _ = writeln!(out, "minimal generators:");
    for b in &report.beta {
        let _ = writeln!(out, "  {}", b.join(","));
    }
    let _ = writeln!(out, "matrix (rows = coordinates, columns = minimal generators):");
    for row in &report.matrix {
        let _ = writeln!(out, "  [{}]", row.join(" "));
    }
    let _ = writeln!(out, "index: {}", report.index);
    let _ = writeln!(
        out,
        "maximal independent coords: {{{}}}",
        report
            .coord_set
            .iter()
            .map(|i| i.to_string())
            .collect::<Vec<_>>()
            .join(",")
    );
    let _ = writeln!(out, "free basis:");
    for b in &report.free_basis {
        let _ = writeln!(out, "  {}", b.join(","));
    }
    let _ = writeln!(
        out,
        "certificate base: {}",
        report
            .certificate
            .base
            .iter()
            .map(|&j| report.beta[j].join(","))
            .map(|s| format!("({s})"))
            .collect::<Vec<_>>()
            .join(" ")
    );
    if report.certificate.witnesses.is_empty() {
        let _ = writeln!(out, "certificate witnesses: none (free monoid)");
    } else {
        let _ = writeln!(out, "certificate witnesses:");
        for w in &report.certificate.witnesses {
            let _ = writeln!(
                out,
                "  {} + {}*({}) = {}",
                combination_text(&w.lhs, &report.certificate.base, &report.beta),
                w.multiplier,
                report.beta[w.member].join(","),
                combination_text(&w.rhs, &report.certificate.base, &report.beta),
            );
        }
    }
    match &report.index_one {
        None => {
            let _ = writeln!(out, "index 1: no");
        }
        Some(d) => {
            let _ = writeln!(out, "index 1: yes");
            let _ = writeln!(out, "  primitive ray: {}", d.ray.join(","));
            let _ = writeln!(out, "  multipliers: {}", d.multipliers.join(","));
            let _ = writeln!(out, "  multiplier gcd: {}", d.multiplier_gcd);
            let _ = writeln!(
                out,
                "  canonical numerical semigroup: <{}>",
                d.canonical
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            );
            if d.frobenius_degenerate {
                let _ = writeln!(
                    out,
                    "  frobenius number: {} (canonical form is all of N; conductor defined as 1)",
                    d.frobenius
                );
            } else {
                let _ = writeln!(out, "  frobenius number: {}", d.frobenius);
            }
            let _ = writeln!(out, "  multiplicity: {}", d.multiplicity);
            let _ = writeln!(
                out,
                "  gaps: {}",
                if d.gaps.is_empty() {
                    "none".to_string()
                } else {
                    d.gaps
                        .iter()
                        .map(|g| g.to_string())
                        .collect::<Vec<_>>()
                        .join(",")
                }
            );
            let _ = writeln!(
                out,
                "  enclosing rays: {}",
                d.enclosing_rays
                    .iter()
                    .map(|r| format!("({})", r.join(",")))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
    }
    out
}
