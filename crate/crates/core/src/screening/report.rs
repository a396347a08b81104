use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{factorize, Rational};
use crate::catalog::{REALIZABLE_INDEX1, REALIZABLE_INDEX2, REALIZABLE_INDEX3};
use crate::lattice::SearchOptions;
use crate::Error;

use super::{
    arithmetic_filter, enumerate_candidates, enumerate_index3_case, index3_case, screen, Configuration, FilterId,
    ObstructionVerdict, Outcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateReport {
    pub name: String,
    /// Index-3 case number, if any.
    pub case: Option<u8>,
    pub l: u32,
    pub k2: Rational,
    pub d: Rational,
    pub d_factored: String,
    pub e_orb: Rational,
    /// Verdicts in chain order, up to and including the first obstruction.
    pub verdicts: Vec<ObstructionVerdict>,
    pub obstructed_by: Option<FilterId>,
    pub survived: bool,
    /// Listed as realizable in the imported data. Independent of `survived`.
    pub realizable: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrossCheck {
    /// Every imported realizable type survived the chain.
    pub covers_realizable: bool,
    pub missing_realizable: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub index: u32,
    pub candidates: Vec<CandidateReport>,
    pub survivors: Vec<String>,
    /// Survivors without a realizability mark.
    pub unmarked_survivors: Vec<String>,
    pub cross_check: CrossCheck,
}

pub fn classify(index: u32) -> Result<ClassificationReport, Error> {
    classify_with(index, &SearchOptions::default())
}

/// Screens every candidate of the index. Candidates run in parallel on
/// the current rayon pool; the report keeps the canonical candidate order.
pub fn classify_with(index: u32, options: &SearchOptions) -> Result<ClassificationReport, Error> {
    let realizable = match index {
        1 => &*REALIZABLE_INDEX1,
        2 => &*REALIZABLE_INDEX2,
        3 => &*REALIZABLE_INDEX3,
        _ => return Err(Error::Usage(format!("index must be 1, 2 or 3, got {index}"))),
    };
    let configs = enumerate_candidates(index);
    let candidates = configs
        .par_iter()
        .map(|c| {
            let verdicts = screen(c, &FilterId::CHAIN, options)?;
            let obstructed_by = verdicts.iter().find(|v| v.is_obstructed()).map(|v| v.filter);
            Ok(CandidateReport {
                name: c.name(),
                case: c.species().into_iter().find_map(index3_case),
                l: c.l,
                k2: c.k2,
                d: c.d,
                d_factored: factor_rational(c.d),
                e_orb: c.e_orb,
                verdicts,
                obstructed_by,
                survived: obstructed_by.is_none(),
                realizable: realizable.contains(&c.species()),
            })
        })
        .collect::<Result<Vec<_>, Error>>()?;
    let survivors: Vec<String> = candidates.iter().filter(|c| c.survived).map(|c| c.name.clone()).collect();
    let unmarked_survivors =
        candidates.iter().filter(|c| c.survived && !c.realizable).map(|c| c.name.clone()).collect();
    let mut missing_realizable = Vec::new();
    for e in &realizable.entries {
        let name = crate::catalog::format_multiset(e);
        if !survivors.contains(&name) {
            missing_realizable.push(name);
        }
    }
    Ok(ClassificationReport {
        index,
        candidates,
        survivors,
        unmarked_survivors,
        cross_check: CrossCheck { covers_realizable: missing_realizable.is_empty(), missing_realizable },
    })
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# Index {} classification\n", self.index);
        let mut header = String::from("| Type | L | K² | D |");
        let mut rule = String::from("|---|---|---|---|");
        for f in FilterId::CHAIN {
            let _ = write!(header, " {} |", f.label());
            rule.push_str("---|");
        }
        header.push_str(" status |");
        rule.push_str("---|");
        let _ = writeln!(s, "{header}\n{rule}");
        for c in &self.candidates {
            let mut row = format!("| {} | {} | {} | {} |", c.name, c.l, c.k2, c.d_factored);
            for f in FilterId::CHAIN {
                let cell = c.verdicts.iter().find(|v| v.filter == f).map_or("-".to_string(), |v| v.outcome.to_string());
                let _ = write!(row, " {cell} |");
            }
            let status = match (c.survived, c.realizable) {
                (true, true) => "SURVIVED, REALIZABLE",
                (true, false) => "SURVIVED",
                (false, _) => "ELIMINATED",
            };
            let _ = writeln!(s, "{row} {status} |");
        }
        let _ = writeln!(s, "\nSurvivors ({}): {}", self.survivors.len(), self.survivors.join(", "));
        if !self.unmarked_survivors.is_empty() {
            let _ = writeln!(s, "Survivors not known to be realizable: {}", self.unmarked_survivors.join(", "));
        }
        let _ = writeln!(
            s,
            "Realizable types all survive: {}",
            if self.cross_check.covers_realizable { "yes" } else { "no" }
        );
        s
    }
}

fn superscript(n: u32) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

fn factor_natural(n: u64) -> String {
    if n == 1 {
        return "1".into();
    }
    factorize(n)
        .into_iter()
        .map(|(p, e)| if e == 1 { p.to_string() } else { format!("{p}{}", superscript(e)) })
        .collect::<Vec<_>>()
        .join("·")
}

/// Prime factorization such as `2⁵·3`, `-2²` or `5/2·3`.
pub fn factor_rational(r: Rational) -> String {
    if r.is_zero() {
        return "0".into();
    }
    let sign = if r.signum() < 0 { "-" } else { "" };
    let num = factor_natural(r.numer().unsigned_abs());
    if r.is_integer() {
        format!("{sign}{num}")
    } else {
        format!("{sign}{num}/{}", factor_natural(r.denom() as u64))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DTableId {
    Index2D,
    Index3Case1,
    Index3Case2,
    Index3Case3,
    Index3Case4,
}

impl DTableId {
    pub const ALL: [DTableId; 5] =
        [DTableId::Index2D, DTableId::Index3Case1, DTableId::Index3Case2, DTableId::Index3Case3, DTableId::Index3Case4];

    pub fn name(self) -> &'static str {
        match self {
            DTableId::Index2D => "index2-D",
            DTableId::Index3Case1 => "index3-case1",
            DTableId::Index3Case2 => "index3-case2",
            DTableId::Index3Case3 => "index3-case3",
            DTableId::Index3Case4 => "index3-case4",
        }
    }
}

impl std::str::FromStr for DTableId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DTableId::ALL.into_iter().find(|t| t.name() == s).ok_or_else(|| Error::Usage(format!("unknown table {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTableRow {
    pub name: String,
    pub l: u32,
    pub k2: Rational,
    pub d: Rational,
    pub factored: String,
    pub square: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DTable {
    pub id: DTableId,
    pub rows: Vec<DTableRow>,
}

/// Index 2: the candidates whose `D` is not a square. Index 3: every
/// candidate of the case.
pub fn d_table(id: DTableId) -> DTable {
    let configs: Vec<Configuration> = match id {
        DTableId::Index2D => {
            enumerate_candidates(2).into_iter().filter(|c| arithmetic_filter(c).is_obstructed()).collect()
        }
        DTableId::Index3Case1 => enumerate_index3_case(1),
        DTableId::Index3Case2 => enumerate_index3_case(2),
        DTableId::Index3Case3 => enumerate_index3_case(3),
        DTableId::Index3Case4 => enumerate_index3_case(4),
    };
    let rows = configs
        .iter()
        .map(|c| DTableRow {
            name: c.name(),
            l: c.l,
            k2: c.k2,
            d: c.d,
            factored: factor_rational(c.d),
            square: arithmetic_filter(c).outcome == Outcome::Pass,
        })
        .collect();
    DTable { id, rows }
}

impl DTable {
    pub fn to_markdown(&self) -> String {
        let mut s = format!("# {}\n\n| Type | L | K² | D | square |\n|---|---|---|---|---|\n", self.id.name());
        for r in &self.rows {
            let _ = writeln!(
                s,
                "| {} | {} | {} | {} | {} |",
                r.name,
                r.l,
                r.k2,
                r.factored,
                if r.square { "yes" } else { "no" }
            );
        }
        s
    }
}
