//! Graded ranks of the dictionary span against the direct monomial span in
//! `KP(Lambda_{m+1})`.

use std::collections::BTreeMap;

use serde::Serialize;

use super::stage::Stage;
use super::IterateError;
use crate::kgraph::{Grade, KGraph};
use crate::kpalg::KpElement;
use crate::report::{Recorder, VerificationReport};

/// Largest accepted level; the product enumeration grows quickly past it.
pub const MAX_LEVEL: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub grade: Vec<i64>,
    pub dictionary: usize,
    pub direct: usize,
}

impl CensusRow {
    pub fn agrees(&self) -> bool {
        self.dictionary == self.direct
    }
}

/// The dictionary pieces with their lengths: `pi(S)`, `t(e ⊗ S)` and
/// `t(e ⊗ S)^*` for base monomials `S` and edges `e` of the new color.
fn pieces(stage: &Stage, level: u32) -> Result<Vec<(usize, KpElement)>, IterateError> {
    let b = stage.base();
    let g = stage.graph();
    let mut out = Vec::new();
    for m in b.monomials(level, None) {
        let len = m.length();
        out.push((len, stage.pi(&b.monomial_element(m))?));
    }
    for e in g.edges_of_color(stage.new_color()) {
        for m in b.monomials(level.saturating_sub(1), Some(g.source(e))) {
            let len = 1 + m.length();
            let x = stage.space().pure(&[e], &b.monomial_element(m))?;
            let t = stage.t(&x)?;
            out.push((len, t.star()));
            out.push((len, t));
        }
    }
    Ok(out)
}

/// Ranks per grade `|delta| <= level` of the dictionary products of total
/// length `<= level` and of the monomials of length `<= level`.
pub fn census(stage: &Stage, level: u32) -> Result<Vec<CensusRow>, IterateError> {
    if level > MAX_LEVEL {
        return Err(IterateError::LevelTooLarge {
            level,
            max: MAX_LEVEL,
        });
    }
    let tg = stage.target();
    let all = pieces(stage, level)?;
    let mut dictionary: Vec<KpElement> = all
        .iter()
        .filter(|(len, _)| *len == 0)
        .map(|(_, t)| t.clone())
        .collect();
    let positive: Vec<&(usize, KpElement)> = all.iter().filter(|(len, _)| *len > 0).collect();
    let mut frontier: Vec<(usize, KpElement)> = positive.iter().map(|p| (*p).clone()).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for (len, t) in &frontier {
            for (l2, p) in &positive {
                if len + l2 <= level as usize {
                    next.push((len + l2, tg.mul(t, p)?));
                }
            }
        }
        dictionary.extend(frontier.into_iter().map(|(_, t)| t));
        frontier = next;
    }
    let direct: Vec<KpElement> = tg
        .monomials(level, None)
        .into_iter()
        .map(|m| tg.monomial_element(m))
        .collect();

    let mut by_grade: BTreeMap<Grade, (Vec<KpElement>, Vec<KpElement>)> = BTreeMap::new();
    for t in &dictionary {
        for grade in t.grades() {
            by_grade
                .entry(grade.clone())
                .or_default()
                .0
                .push(t.component(&grade));
        }
    }
    for t in &direct {
        for grade in t.grades() {
            by_grade
                .entry(grade.clone())
                .or_default()
                .1
                .push(t.component(&grade));
        }
    }
    let mut rows = Vec::new();
    for (grade, (dict, dir)) in by_grade {
        if grade.norm() > u64::from(level) {
            continue;
        }
        rows.push(CensusRow {
            grade: grade.0,
            dictionary: tg.rank(&dict)?,
            direct: tg.rank(&dir)?,
        });
    }
    Ok(rows)
}

/// Runs the census at the given stages and records one case per grade.
pub fn census_report(
    graph: &KGraph,
    stages: &[usize],
    level: u32,
    timed: bool,
) -> VerificationReport {
    let mut rec = Recorder::new("census");
    for &m in stages {
        let rows = Stage::new(graph, m).and_then(|stage| census(&stage, level));
        match rows {
            Ok(rows) => {
                for row in rows {
                    rec.check(row.agrees(), || {
                        (
                            format!("m={m} level={level} grade {}", Grade(row.grade.clone())),
                            format!("dictionary rank {}", row.dictionary),
                            format!("direct rank {}", row.direct),
                        )
                    });
                }
            }
            Err(e) => rec.fail(
                format!("m={m} level={level}"),
                format!("error: {e}"),
                String::new(),
            ),
        }
    }
    rec.finish(timed)
}
