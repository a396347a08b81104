//! Command-line front end.

use std::fmt::Write as _;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::arith::Rational;
use crate::catalog::lookup;
use crate::floer::LensSpace;
use crate::lattice::{complement_witness, enumerate_embeddings_with, format_vector, PlumbingLattice, SearchOptions};
use crate::linking::{connected_sum_form, lens_linking_form, linking_form, surgery_linking_form, CyclicLinkingForm};
use crate::screening::{classify_with, d_table, enumerate_candidates, factor_rational, DTableId};
use crate::Error;

#[derive(Debug, Parser)]
#[command(name = "qplane", version, about = "Obstruction pipeline for rational homology projective planes")]
struct Cli {
    /// Worker threads for parallel screening and search.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Candidate-extension budget for the embedding search.
    #[arg(long, global = true, default_value_t = SearchOptions::default().budget)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Md,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Screen every candidate of an index and report survivors.
    Classify {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        index: u32,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Print a table of D values with factorizations.
    Table {
        /// index2-D, index3-case1, index3-case2, index3-case3 or index3-case4.
        #[arg(long)]
        id: String,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// Enumerate embeddings of linear plumbings into -Z^N.
    Embed {
        /// Chains separated by ';', weights by ',', e.g. "-2,-10,-2;-9".
        #[arg(long, allow_hyphen_values = true)]
        graphs: String,
        #[arg(long)]
        ambient: usize,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
    /// d-invariants of a lens space by spin^c label.
    Dinv {
        /// p,q
        #[arg(long)]
        lens: String,
        /// Only the spin structures.
        #[arg(long)]
        spin: bool,
    },
    /// Compose cyclic linking forms and test against (-1/N).
    Linkform {
        /// Comma-separated terms: a singularity token (K1, E6, A2(1,2)),
        /// L(p,q) for a lens space, or S(n) for n-surgery on a knot; a
        /// leading '-' reverses orientation.
        #[arg(long, allow_hyphen_values = true)]
        sum: String,
    },
    /// List the candidates of an index with L, K^2 and D.
    Candidates {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=3))]
        index: u32,
        #[arg(long, value_enum, default_value_t = Format::Md)]
        format: Format,
    },
}

/// Parses `argv` (including the program name), writes the report to
/// `out` and diagnostics to `err`, and returns the exit code: 0 on
/// success, 1 on errors, 2 on usage errors.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let options = SearchOptions { budget: cli.budget, ..SearchOptions::default() };
    let result = match cli.jobs {
        Some(0) => Err(Error::Usage("--jobs must be at least 1".into())),
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command, &options)),
            Err(e) => Err(Error::Usage(e.to_string())),
        },
        None => execute(&cli.command, &options),
    };
    match result {
        Ok(text) => {
            let _ = out.write_all(text.as_bytes());
            0
        }
        Err(Error::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            1
        }
    }
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn execute(command: &Command, options: &SearchOptions) -> Result<String, Error> {
    match command {
        Command::Classify { index, format } => {
            let report = classify_with(*index, options)?;
            Ok(match format {
                Format::Md => report.to_markdown(),
                Format::Json => json(&report),
            })
        }
        Command::Table { id, format } => {
            let table = d_table(id.parse::<DTableId>()?);
            Ok(match format {
                Format::Md => table.to_markdown(),
                Format::Json => json(&table),
            })
        }
        Command::Embed { graphs, ambient, format } => embed(graphs, *ambient, *format, options),
        Command::Dinv { lens, spin } => dinv(lens, *spin),
        Command::Linkform { sum } => linkform(sum),
        Command::Candidates { index, format } => candidates(*index, *format),
    }
}

#[derive(Serialize)]
struct OrbitOut {
    vectors: Vec<Vec<i64>>,
    generator: Option<Vec<i64>>,
    square: Option<i64>,
}

fn embed(graphs: &str, ambient: usize, format: Format, options: &SearchOptions) -> Result<String, Error> {
    let lattices = graphs.split(';').map(|g| g.parse::<PlumbingLattice>()).collect::<Result<Vec<_>, _>>()?;
    let rank: usize = lattices.iter().map(PlumbingLattice::rank).sum();
    if rank > ambient {
        return Err(Error::Usage(format!("total rank {rank} exceeds ambient rank {ambient}")));
    }
    let embeddings = enumerate_embeddings_with(&lattices, ambient, options)?;
    let orbits = embeddings
        .iter()
        .map(|e| {
            let w = if rank + 1 == ambient { Some(complement_witness(e)?) } else { None };
            Ok(OrbitOut {
                vectors: e.vectors.clone(),
                generator: w.as_ref().map(|w| w.generator.clone()),
                square: w.map(|w| w.square),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    if format == Format::Json {
        return Ok(json(&orbits));
    }
    let names: Vec<String> = lattices.iter().map(|l| format!("[{l}]")).collect();
    let mut s = format!("{} into -Z^{ambient}: {} orbit(s)\n", names.join(" + "), orbits.len());
    for (k, o) in orbits.iter().enumerate() {
        let vecs: Vec<String> = o.vectors.iter().map(|v| format_vector(v)).collect();
        let _ = writeln!(s, "orbit {}: {}", k + 1, vecs.join(", "));
        if let (Some(g), Some(sq)) = (&o.generator, o.square) {
            let _ = writeln!(s, "  complement: {}  square {sq}", format_vector(g));
        }
    }
    Ok(s)
}

fn parse_pair(text: &str) -> Result<(i64, i64), Error> {
    let bad = || Error::Usage(format!("expected p,q but got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn dinv(lens: &str, spin: bool) -> Result<String, Error> {
    let (p, q) = parse_pair(lens)?;
    let l = LensSpace::new(p, q)?;
    let labels: Vec<i64> = if spin { l.spin_labels() } else { (0..p).collect() };
    let spin_labels = l.spin_labels();
    let mut s = format!("L({p},{q})\n");
    for i in labels {
        let mark = if spin_labels.contains(&i) { "  spin" } else { "" };
        let _ = writeln!(s, "{i}\t{}{mark}", l.d(i)?);
    }
    Ok(s)
}

/// Splits on commas outside parentheses.
fn split_terms(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in text.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(text[start..i].trim());
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(text[start..].trim());
    out
}

fn term_form(term: &str) -> Result<CyclicLinkingForm, Error> {
    let (negate, body) = match term.strip_prefix('-') {
        Some(rest) => (true, rest.trim()),
        None => (false, term),
    };
    let inner = |prefix: &str| body.strip_prefix(prefix).and_then(|r| r.strip_suffix(')'));
    let form = if let Some(pq) = inner("L(") {
        let (p, q) = parse_pair(pq)?;
        lens_linking_form(p, q)?
    } else if let Some(n) = inner("S(") {
        let n: i64 = n.trim().parse().map_err(|_| Error::Usage(format!("bad surgery term {term:?}")))?;
        surgery_linking_form(n)?
    } else {
        let species = body.parse().map_err(|_| Error::Usage(format!("bad term {term:?}")))?;
        linking_form(&lookup(species)?)?
    };
    Ok(if negate { form.negate() } else { form })
}

fn linkform(sum: &str) -> Result<String, Error> {
    let forms = split_terms(sum).into_iter().map(term_form).collect::<Result<Vec<_>, _>>()?;
    let c = connected_sum_form(&forms)?;
    let n = c.order();
    let mut s = format!("composed: {} on Z{n}\n", c.as_rational());
    if n == 1 {
        s.push_str("trivial group: isomorphic to (-1/1)\n");
        return Ok(s);
    }
    let residue = (-c.value()).rem_euclid(n);
    let unit = crate::arith::is_square_unit_mod(residue, n)?;
    let _ = writeln!(s, "residue: -{} = {residue} mod {n}", c.value());
    let _ = writeln!(
        s,
        "{residue} is {}a square unit mod {n}: {}",
        if unit { "" } else { "not " },
        if unit { "isomorphic to (-1/N)" } else { "not isomorphic to (-1/N)" }
    );
    Ok(s)
}

#[derive(Serialize)]
struct CandidateOut {
    name: String,
    l: u32,
    k2: Rational,
    d: Rational,
    factored: String,
}

fn candidates(index: u32, format: Format) -> Result<String, Error> {
    let rows: Vec<CandidateOut> = enumerate_candidates(index)
        .into_iter()
        .map(|c| CandidateOut { name: c.name(), l: c.l, k2: c.k2, d: c.d, factored: factor_rational(c.d) })
        .collect();
    if format == Format::Json {
        return Ok(json(&rows));
    }
    let mut s = format!("# Index {index} candidates ({})\n\n| Type | L | K² | D |\n|---|---|---|---|\n", rows.len());
    for r in &rows {
        let _ = writeln!(s, "| {} | {} | {} | {} |", r.name, r.l, r.k2, r.factored);
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("qplane").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn dinv_spin() {
        let (code, out, _) = call(&["dinv", "--lens", "4,1", "--spin"]);
        assert_eq!(code, 0);
        assert_eq!(out, "L(4,1)\n0\t-3/4  spin\n2\t1/4  spin\n");
        let (_, out, _) = call(&["dinv", "--lens", "4,3", "--spin"]);
        assert_eq!(out, "L(4,3)\n1\t-1/4  spin\n3\t3/4  spin\n");
        let (_, out, _) = call(&["dinv", "--lens", "3,1"]);
        assert_eq!(out.lines().count(), 4);
    }

    #[test]
    fn embed_a8() {
        let (code, out, _) = call(&["embed", "--graphs", "-9", "--ambient", "2"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("[-9] into -Z^2: 1 orbit(s)\n"));
        assert!(out.contains("orbit 1: 3e1\n  complement: e2  square -1"));
    }

    #[test]
    fn embed_json_lists_squares() {
        let (code, out, _) = call(&["embed", "--graphs", "-2,-10,-2", "--ambient", "4", "--format", "json"]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let mut squares: Vec<i64> = v.as_array().unwrap().iter().map(|o| o["square"].as_i64().unwrap()).collect();
        squares.sort();
        assert_eq!(squares, vec![-4, -1]);
    }

    #[test]
    fn linkform_examples() {
        let (code, out, _) = call(&["linkform", "--sum", "-K1,-E6"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("composed: 5/12 on Z12\n"));
        assert!(out.contains("7 is not a square unit mod 12"));
        let (_, out, _) = call(&["linkform", "--sum", "L(9,4),S(4)"]);
        assert!(out.starts_with("composed: 7/36 on Z36\n"), "{out}");
        assert!(out.contains("29 is not a square unit"));
    }

    #[test]
    fn classify_index2() {
        let (code, out, _) = call(&["classify", "--index", "2"]);
        assert_eq!(code, 0);
        assert!(out.contains("Survivors (4): "), "{out}");
        for s in ["K5", "K2A2", "K1A4", "K1"] {
            assert!(out.lines().any(|l| l.starts_with(&format!("| {s} |")) && l.ends_with("SURVIVED, REALIZABLE |")));
        }
    }

    #[test]
    fn output_is_independent_of_jobs() {
        let (_, one, _) = call(&["--jobs", "1", "classify", "--index", "3", "--format", "json"]);
        let (_, four, _) = call(&["--jobs", "4", "classify", "--index", "3", "--format", "json"]);
        assert_eq!(one, four);
        let (_, again, _) = call(&["classify", "--index", "3", "--format", "json"]);
        assert_eq!(one, again);
    }

    #[test]
    fn tables_and_candidates() {
        let (code, out, _) = call(&["table", "--id", "index2-D"]);
        assert_eq!(code, 0);
        assert!(out.contains("| K6 | 6 | 4 | 2⁵·3 | no |"), "{out}");
        let (code, out, _) = call(&["candidates", "--index", "1"]);
        assert_eq!(code, 0);
        assert!(out.starts_with("# Index 1 candidates (10)"));
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["classify", "--index", "4"]).0, 2);
        assert_eq!(call(&["table", "--id", "nope"]).0, 2);
        assert_eq!(call(&["dinv", "--lens", "4,2"]).0, 1);
        assert_eq!(call(&["embed", "--graphs", "-17", "--ambient", "2"]).0, 1);
        let (code, _, err) = call(&["--budget", "5", "embed", "--graphs", "-2,-2,-3,-2,-2;-10", "--ambient", "7"]);
        assert_eq!(code, 1);
        assert!(err.contains("budget"));
        assert_eq!(call(&["--help"]).0, 0);
    }
}
