//! JSON and CSV output. Every JSON document carries a `schema` tag; the
//! field lists are documented in `docs/json-schema.md`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::betti::GradedBettiTable;
use crate::error::{Error, Result};
use crate::field::FieldConfig;
use crate::ideal::MonomialIdeal;
use crate::lab::{BoundCheckResult, ConjectureComparison, PowerResult, StabilizationReport};

pub const TABLE_SCHEMA: &str = "betti-stab/graded-table/v1";
pub const BETTI_SCHEMA: &str = "betti-stab/betti/v1";
pub const REPORT_SCHEMA: &str = "betti-stab/stabilization-report/v1";
pub const BOUND_SCHEMA: &str = "betti-stab/rees-bound/v1";
pub const CONJECTURE_SCHEMA: &str = "betti-stab/conjecture/v1";

/// Entries are always stored for the ideal (`convention = "ideal"`): `i = 0`
/// counts minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableDoc {
    pub schema: String,
    pub convention: String,
    pub characteristic: u32,
    pub ring_dim: usize,
    pub entries: Vec<EntryDoc>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryDoc {
    pub i: usize,
    pub j: u32,
    pub beta: u64,
}

impl From<&GradedBettiTable> for TableDoc {
    fn from(t: &GradedBettiTable) -> Self {
        TableDoc {
            schema: TABLE_SCHEMA.into(),
            convention: "ideal".into(),
            characteristic: t.field().characteristic(),
            ring_dim: t.ring_dim(),
            entries: t.iter().map(|(i, j, beta)| EntryDoc { i, j, beta }).collect(),
        }
    }
}

impl TryFrom<TableDoc> for GradedBettiTable {
    type Error = Error;

    fn try_from(doc: TableDoc) -> Result<Self> {
        if doc.schema != TABLE_SCHEMA {
            return Err(Error::Malformed(format!("unexpected schema '{}'", doc.schema)));
        }
        if doc.convention != "ideal" {
            return Err(Error::Malformed(format!("unsupported convention '{}'", doc.convention)));
        }
        let field = FieldConfig::new(doc.characteristic)?;
        Ok(GradedBettiTable::from_entries(
            doc.ring_dim,
            field,
            doc.entries.into_iter().map(|e| ((e.i, e.j), e.beta)),
        ))
    }
}

pub fn table_json(t: &GradedBettiTable) -> Value {
    serde_json::to_value(TableDoc::from(t)).expect("table documents serialize")
}

pub fn table_from_json(text: &str) -> Result<GradedBettiTable> {
    let doc: TableDoc = serde_json::from_str(text).map_err(|e| Error::Malformed(e.to_string()))?;
    doc.try_into()
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    let names = ideal.var_names();
    json!({
        "ring": names,
        "generators": ideal
            .generators()
            .iter()
            .map(|g| g.display_with(names).to_string())
            .collect::<Vec<_>>(),
    })
}

/// `ideal` is the base ideal; the table belongs to its `power`-th power.
pub fn betti_json(ideal: &MonomialIdeal, power: u32, table: &GradedBettiTable) -> Value {
    json!({
        "schema": BETTI_SCHEMA,
        "ideal": ideal_json(ideal),
        "power": power,
        "regularity": table.regularity().ok(),
        "table": table_json(table),
    })
}

pub fn power_json(p: &PowerResult) -> Value {
    json!({
        "d": p.d,
        "generator_count": p.generator_count,
        "regularity": p.regularity,
        "shape": p.shape.positions(),
        "table": table_json(&p.table),
    })
}

pub fn report_json(ideal: &MonomialIdeal, report: &StabilizationReport) -> Value {
    json!({
        "schema": REPORT_SCHEMA,
        "ideal_id": report.ideal_id,
        "ideal": ideal_json(ideal),
        "r": report.r,
        "horizon": report.horizon,
        "completed": report.completed(),
        "partial": report.partial,
        "characteristic": report.field.characteristic(),
        "empirical_stab": report.empirical_stab,
        "certainty": report.certainty,
        "shape_changes": report.shape_changes(),
        "regularity": report.regularity(),
        "linear_form": report.linear_form,
        "unimodality": report.unimodality,
        "powers": report.powers.iter().map(power_json).collect::<Vec<_>>(),
    })
}

pub fn bound_json(ideal: &MonomialIdeal, result: &BoundCheckResult) -> Value {
    json!({
        "schema": BOUND_SCHEMA,
        "ideal": ideal_json(ideal),
        "d": result.d,
        "holds": result.holds(),
        "violations": result.violations,
        "entries": result.entries,
    })
}

pub fn conjecture_json(
    ideal: &MonomialIdeal,
    cmp: &ConjectureComparison,
    report: &StabilizationReport,
) -> Value {
    json!({
        "schema": CONJECTURE_SCHEMA,
        "ideal": ideal_json(ideal),
        "comparison": cmp,
        "shape_changes": report.shape_changes(),
        "partial": report.partial,
    })
}

/// `i,j,beta` rows in ideal indexing, sorted by `(i, j)`.
pub fn table_csv(t: &GradedBettiTable) -> String {
    let mut s = String::from("i,j,beta\n");
    for (i, j, v) in t.iter() {
        s.push_str(&format!("{i},{j},{v}\n"));
    }
    s
}
