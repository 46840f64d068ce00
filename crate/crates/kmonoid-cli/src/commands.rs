//! Subcommand implementations. Each returns the process exit code on the
//! success path; hard errors propagate as [`CliError`].

use std::path::Path;

use rayon::prelude::*;

use kmonoid::index_one::{canonical_numerical_semigroup, lift};
use kmonoid::numsgp::{monoids_isomorphic_index1, NumericalSemigroup};
use kmonoid::oracle;
use kmonoid::{CoordSet, Error as KError};

use crate::error::{CliError, Result, EXIT_FALSE, EXIT_OK, EXIT_VERIFY};
use crate::input::{parse_coord_list, parse_generators, parse_input, parse_u64_list};
use crate::report::{
    build_report, certificate_file, certificate_from_file, render_text, AnalysisReport,
    CertificateFile,
};

pub fn analyze(inputs: &[String], json: bool, jobs: usize) -> Result<u8> {
    let run_one = |arg: &String| -> (String, Result<AnalysisReport>) {
        match parse_input(arg) {
            Ok(input) => {
                let label = input.source.clone();
                let result = input.monoid().and_then(|h| build_report(&h));
                (label, result)
            }
            Err(e) => (arg.clone(), Err(e)),
        }
    };

    let results: Vec<(String, Result<AnalysisReport>)> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| CliError::unsupported(format!("thread pool: {e}")))?;
        pool.install(|| inputs.par_iter().map(run_one).collect())
    } else {
        inputs.iter().map(run_one).collect()
    };

    let mut code = EXIT_OK;
    for (label, result) in results {
        match result {
            Ok(report) => {
                if json {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&report)
                            .expect("report serialization cannot fail")
                    );
                } else {
                    print!("{}", render_text(&label, &report));
                }
            }
            Err(e) => {
                eprintln!("error: {label}: {}", e.message);
                code = code.max(e.code);
            }
        }
    }
    Ok(code)
}

pub fn project(input_arg: &str, coords: &str) -> Result<u8> {
    let input = parse_input(input_arg)?;
    let h = input.monoid()?;
    let x = CoordSet::new(input.k, parse_coord_list(coords)?)?;
    if x.is_empty() {
        return Err(CliError::from(KError::EmptyCoordSet));
    }
    if !h.coords_span(&x)? {
        eprintln!(
            "warning: coordinates {x} do not contain a maximal independent set; \
             the projection is not guaranteed to be an isomorphism"
        );
    }
    // Validates the projection; the emitted list below is the verbatim
    // restriction of the input generators, zero rows included.
    h.project(&x)?;
    let indices = x.to_vec();
    for g in &input.generators {
        println!("{}", g.restrict(&indices)?);
    }
    Ok(EXIT_OK)
}

pub fn embed(input_arg: &str, dim: usize) -> Result<u8> {
    let input = parse_input(input_arg)?;
    let h = input.monoid()?;
    let embedded = h.embed(dim)?;
    for g in embedded.generators() {
        println!("{g}");
    }
    Ok(EXIT_OK)
}

pub fn iso(a_arg: &str, b_arg: &str) -> Result<u8> {
    let a = parse_input(a_arg)?.monoid()?;
    let b = parse_input(b_arg)?.monoid()?;
    match monoids_isomorphic_index1(&a, &b) {
        Ok(true) => {
            let canonical = canonical_numerical_semigroup(&a)?;
            println!("ISOMORPHIC (canonical {canonical})");
            Ok(EXIT_OK)
        }
        Ok(false) => {
            let ca = canonical_numerical_semigroup(&a)?;
            let cb = canonical_numerical_semigroup(&b)?;
            println!("NOT-ISOMORPHIC ({ca} vs {cb})");
            Ok(EXIT_FALSE)
        }
        Err(e @ (KError::NotIndexOne | KError::TrivialMonoid)) => Err(CliError::unsupported(
            format!("isomorphism testing is implemented for index-1 monoids only: {e}"),
        )),
        Err(e) => Err(e.into()),
    }
}

pub fn canonical(input_arg: &str) -> Result<u8> {
    let h = parse_input(input_arg)?.monoid()?;
    let ns = canonical_numerical_semigroup(&h)?;
    for g in ns.minimal_generators() {
        println!("{g}");
    }
    Ok(EXIT_OK)
}

pub fn lift_cmd(ray_arg: &str, gens_arg: &str) -> Result<u8> {
    let rays = parse_generators("<ray>", ray_arg)?;
    if rays.len() != 1 {
        return Err(CliError::parse(format!(
            "--ray must describe exactly one element, got {}",
            rays.len()
        )));
    }
    let gens = parse_u64_list(gens_arg)?;
    let (ns, factor) = NumericalSemigroup::from_generators(&gens)?;
    if factor > 1 {
        eprintln!("note: generators normalized by their gcd {factor}");
    }
    let lifted = lift(&ns, &rays[0])?;
    for g in lifted.generators() {
        println!("{g}");
    }
    Ok(EXIT_OK)
}

pub fn certify(input_arg: &str, output: Option<&Path>) -> Result<u8> {
    let h = parse_input(input_arg)?.monoid()?;
    let cert = h.index_certificate()?;
    let doc = certificate_file(&h, &cert);
    let text =
        serde_json::to_string_pretty(&doc).expect("certificate serialization cannot fail");
    match output {
        Some(path) => std::fs::write(path, text + "\n")
            .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?,
        None => println!("{text}"),
    }
    Ok(EXIT_OK)
}

enum Check {
    Ok(String),
    Skipped(String),
    Failed(String),
}

pub fn verify(input_arg: &str, bound: Option<u64>, certificate: Option<&Path>) -> Result<u8> {
    let input = parse_input(input_arg)?;
    let h = input.monoid()?;
    let mut checks: Vec<(&str, Check)> = Vec::new();

    // Minimal generating set against the window sieve.
    let max_sum: u64 = h
        .generators()
        .iter()
        .map(|g| u64::try_from(g.coord_sum()).unwrap_or(u64::MAX))
        .max()
        .unwrap_or(0);
    let sieve_bound = bound.unwrap_or_else(|| max_sum.saturating_mul(3));
    checks.push((
        "minimal generators vs window sieve",
        if sieve_bound < max_sum.saturating_mul(2) {
            Check::Skipped(format!(
                "bound {sieve_bound} below the sieve precondition {}",
                max_sum.saturating_mul(2)
            ))
        } else {
            let sieved = oracle::beta_sieve(&h, sieve_bound);
            let beta: std::collections::BTreeSet<_> =
                h.minimal_generators().iter().cloned().collect();
            if sieved == beta {
                Check::Ok(format!("window bound {sieve_bound}"))
            } else {
                Check::Failed(format!(
                    "sieve found {} minimal generators, library found {}",
                    sieved.len(),
                    beta.len()
                ))
            }
        },
    ));

    // Rank against minor enumeration.
    checks.push((
        "rank vs minor enumeration",
        match oracle::rank_by_minors(h.generator_matrix()) {
            Ok(minor_rank) => {
                let rank = h.generator_matrix().rank();
                if minor_rank == rank {
                    Check::Ok(format!("rank {rank}"))
                } else {
                    Check::Failed(format!("elimination says {rank}, minors say {minor_rank}"))
                }
            }
            Err(e @ KError::MinorGuard { .. }) => Check::Skipped(e.to_string()),
            Err(e) => Check::Failed(e.to_string()),
        },
    ));

    // Certificate: either the round trip, or a provided certificate file.
    checks.push((
        "index certificate",
        if h.is_trivial() {
            Check::Skipped("trivial monoid".to_string())
        } else {
            let cert = match certificate {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .map_err(|e| CliError::parse(format!("{}: {e}", path.display())))?;
                    let doc: CertificateFile = serde_json::from_str(&text).map_err(|e| {
                        CliError::verification(format!(
                            "{}: not a certificate document: {e}",
                            path.display()
                        ))
                    })?;
                    certificate_from_file(&h, &doc)?
                }
                None => h.index_certificate()?,
            };
            if h.verify_certificate(&cert) {
                Check::Ok(format!(
                    "base size {}, {} witnesses",
                    cert.base.len(),
                    cert.witnesses.len()
                ))
            } else {
                Check::Failed("certificate did not verify".to_string())
            }
        },
    ));

    // Injectivity of the projection to a maximal independent coordinate set.
    let injectivity_bound = bound.unwrap_or(200);
    checks.push((
        "projection injectivity",
        if h.is_trivial() {
            Check::Skipped("trivial monoid".to_string())
        } else {
            let x = h.maximal_independent_coords()?;
            if oracle::injectivity_check(&h, &x, injectivity_bound)? {
                Check::Ok(format!("coords {x}, bound {injectivity_bound}"))
            } else {
                Check::Failed(format!("collision when restricting to {x}"))
            }
        },
    ));

    let mut failed = false;
    for (name, check) in &checks {
        match check {
            Check::Ok(detail) => println!("check {name}: ok ({detail})"),
            Check::Skipped(reason) => println!("check {name}: skipped ({reason})"),
            Check::Failed(reason) => {
                println!("check {name}: FAILED ({reason})");
                failed = true;
            }
        }
    }
    Ok(if failed { EXIT_VERIFY } else { EXIT_OK })
}
