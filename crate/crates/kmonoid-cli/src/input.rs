//! Monoid input parsing.
//!
//! Format: one generator per line (or `/`-separated inline), coordinates as
//! comma-separated decimal naturals. Blank lines and `#` comments are
//! ignored. An input argument is read as a file when the path exists, as
//! stdin when it is `-`, and as an inline description otherwise.

use std::io::Read;

use num_bigint::BigUint;

use kmonoid::{Element, FgMonoid};

use crate::error::{CliError, Result};

/// Default cap on the number of generators; override with the
/// `MONOID_MAX_GENERATORS` environment variable.
pub const DEFAULT_MAX_GENERATORS: usize = 512;

/// Hard cap on the ambient dimension.
pub const MAX_AMBIENT_DIMENSION: usize = 64;

pub struct MonoidInput {
    pub source: String,
    pub k: usize,
    pub generators: Vec<Element>,
}

impl MonoidInput {
    pub fn monoid(&self) -> Result<FgMonoid> {
        Ok(FgMonoid::new(self.k, self.generators.clone())?)
    }
}

/// Resolves an input argument to (label, text): an existing path is read,
/// `-` reads stdin, anything else is treated as an inline description.
pub fn read_source(arg: &str) -> Result<(String, String)> {
    if arg == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| CliError::parse(format!("stdin: {e}")))?;
        return Ok(("<stdin>".to_string(), text));
    }
    let path = std::path::Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::parse(format!("{arg}: {e}")))?;
        return Ok((arg.to_string(), text));
    }
    // Inline descriptions start with a coordinate (or comment); anything
    // else that names a missing file is reported as such.
    let inline_like = arg
        .trim_start()
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit() || c == '#');
    if inline_like && (arg.contains(',') || arg.contains('/')) {
        return Ok(("<inline>".to_string(), arg.to_string()));
    }
    Err(CliError::parse(format!("{arg}: no such file")))
}

pub fn parse_input(arg: &str) -> Result<MonoidInput> {
    let (source, text) = read_source(arg)?;
    let generators = parse_generators(&source, &text)?;
    let Some(first) = generators.first() else {
        return Err(CliError::parse(format!("{source}: no generators found")));
    };
    let k = first.len();
    for g in &generators {
        if g.len() != k {
            return Err(CliError::parse(format!(
                "{source}: generators of mixed dimension ({k} and {})",
                g.len()
            )));
        }
    }
    enforce_guardrails(&source, k, &generators)?;
    Ok(MonoidInput {
        source,
        k,
        generators,
    })
}

/// Parses generator text, reporting 1-based line and column on failure.
pub fn parse_generators(source: &str, text: &str) -> Result<Vec<Element>> {
    let mut generators = Vec::new();
    for (line_no, raw_line) in text.lines().enumerate() {
        let line = match raw_line.find('#') {
            Some(pos) => &raw_line[..pos],
            None => raw_line,
        };
        let mut offset = 0;
        for chunk in line.split('/') {
            if !chunk.trim().is_empty() {
                generators.push(parse_element(source, line_no + 1, offset, chunk)?);
            }
            offset += chunk.len() + 1;
        }
    }
    Ok(generators)
}

fn parse_element(source: &str, line: usize, chunk_offset: usize, chunk: &str) -> Result<Element> {
    let mut coords = Vec::new();
    let mut offset = chunk_offset;
    for token in chunk.split(',') {
        let trimmed = token.trim();
        let column = offset + token.len() - token.trim_start().len() + 1;
        let value: BigUint = trimmed.parse().map_err(|_| {
            CliError::parse(format!(
                "{source}: line {line}, column {column}: invalid natural number {trimmed:?}"
            ))
        })?;
        coords.push(value);
        offset += token.len() + 1;
    }
    Ok(Element::new(coords))
}

fn enforce_guardrails(source: &str, k: usize, generators: &[Element]) -> Result<()> {
    if k > MAX_AMBIENT_DIMENSION {
        return Err(CliError::unsupported(format!(
            "{source}: ambient dimension {k} exceeds the limit {MAX_AMBIENT_DIMENSION}"
        )));
    }
    let max_generators = std::env::var("MONOID_MAX_GENERATORS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_GENERATORS);
    if generators.len() > max_generators {
        return Err(CliError::unsupported(format!(
            "{source}: {} generators exceed the limit {max_generators} \
             (override with MONOID_MAX_GENERATORS)",
            generators.len()
        )));
    }
    // Arbitrary precision is supported, but exhaustive membership search on
    // huge coordinates can be very slow; warn once.
    if generators
        .iter()
        .any(|g| g.coords().iter().any(|c| c.bits() >= 64))
    {
        eprintln!("warning: {source}: coordinates of 2^63 or larger; analysis may be slow");
    }
    Ok(())
}

/// Parses a comma-separated list of positive naturals (for `lift --gens`).
pub fn parse_u64_list(arg: &str) -> Result<Vec<u64>> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| CliError::parse(format!("invalid generator {:?}", t.trim())))
        })
        .collect()
}

/// Parses a comma-separated list of 1-based coordinate indices
/// (for `project --coords`).
pub fn parse_coord_list(arg: &str) -> Result<Vec<usize>> {
    arg.split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| CliError::parse(format!("invalid coordinate index {:?}", t.trim())))
        })
        .collect()
}
