//! The complexity-versus-rank table.
//!
//! Each record's order is pushed through [`real_multiplication_theta`]; the
//! row compares `complexity − 1` with the published rank. Disagreement is
//! reported, never treated as a failure.

use serde::{Deserialize, Serialize};

use crate::functor::real_multiplication_theta;
use crate::harness::dataset::CurveRecord;
use crate::nctorus::NcTorus;
use crate::surd::Number;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjectureRow {
    pub label: String,
    pub theta: String,
    pub generator: String,
    pub complexity: u64,
    pub predicted_rank: u64,
    pub known_rank: u64,
    pub agrees: bool,
}

/// A record that could not be classified, reported in place.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ErrorRow {
    pub label: String,
    pub known_rank: u64,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ReportRow {
    Row(ConjectureRow),
    Error(ErrorRow),
}

pub const TSV_HEADER: &str = "label\ttheta\tgenerator\tcomplexity\tpredicted_rank\tknown_rank\tagrees";

pub fn conjecture_row(record: &CurveRecord) -> ReportRow {
    let rm = match real_multiplication_theta(&record.order) {
        Ok(rm) => rm,
        Err(e) => {
            return ReportRow::Error(ErrorRow {
                label: record.label.clone(),
                known_rank: record.rank,
                error: e.to_string(),
            })
        }
    };
    let torus = NcTorus::new(Number::Surd(rm.theta.clone())).expect("surd theta");
    let complexity = torus.arithmetic_complexity() as u64;
    let predicted_rank = complexity - 1;
    ReportRow::Row(ConjectureRow {
        label: record.label.clone(),
        theta: rm.theta.to_string(),
        generator: rm.generator.to_string(),
        complexity,
        predicted_rank,
        known_rank: record.rank,
        agrees: predicted_rank == record.rank,
    })
}

/// One row per record, in input order.
pub fn conjecture_report(records: &[CurveRecord]) -> Vec<ReportRow> {
    records.iter().map(conjecture_row).collect()
}

pub fn report_to_json(rows: &[ReportRow]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

pub fn report_to_tsv(rows: &[ReportRow]) -> String {
    let mut out = String::from(TSV_HEADER);
    out.push('\n');
    for row in rows {
        let line = match row {
            ReportRow::Row(r) => format!(
                "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                r.label, r.theta, r.generator, r.complexity, r.predicted_rank, r.known_rank, r.agrees
            ),
            ReportRow::Error(e) => format!("{}\tERROR: {}\t\t\t\t{}\t", e.label, e.error, e.known_rank),
        };
        out.push_str(&line);
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::dataset::parse_dataset;

    fn rows(text: &str) -> Vec<ReportRow> {
        conjecture_report(&parse_dataset(text).unwrap())
    }

    #[test]
    fn spec_rows() {
        let rs = rows(
            r#"[{"label":"d2","cm_d":2,"form":"sqrt","rank":0,"rank_source":"s"},
                {"label":"d3","cm_d":3,"form":"half","rank":0,"rank_source":"s"},
                {"label":"d6","cm_d":6,"form":"sqrt","rank":0,"rank_source":"s"}]"#,
        );
        let ReportRow::Row(r) = &rs[0] else { panic!() };
        assert_eq!(
            (r.theta.as_str(), r.complexity, r.predicted_rank, r.agrees),
            ("(0+sqrt(2))/1", 1, 0, true)
        );
        let ReportRow::Row(r) = &rs[1] else { panic!() };
        assert_eq!(
            (r.theta.as_str(), r.complexity, r.predicted_rank),
            ("(-1+sqrt(5))/2", 1, 0)
        );
        let ReportRow::Row(r) = &rs[2] else { panic!() };
        assert_eq!(
            (r.theta.as_str(), r.complexity, r.predicted_rank, r.agrees),
            ("(0+sqrt(6))/1", 2, 1, false)
        );
    }

    #[test]
    fn tsv_layout() {
        let rs = rows(r#"[{"label":"d1","cm_d":1,"form":"sqrt","rank":1,"rank_source":"s"}]"#);
        assert_eq!(
            report_to_tsv(&rs),
            format!("{TSV_HEADER}\nd1\t(-1+sqrt(2))/1\t1+omega\t1\t0\t1\tfalse\n")
        );
    }

    #[test]
    fn json_rows_parse_back() {
        let rs = rows(r#"[{"label":"d7","cm_d":7,"form":"half","rank":0,"rank_source":"s"}]"#);
        let back: Vec<ReportRow> = serde_json::from_str(&report_to_json(&rs)).unwrap();
        assert_eq!(back, rs);
        let err = vec![ReportRow::Error(ErrorRow {
            label: "x".into(),
            known_rank: 0,
            error: "e".into(),
        })];
        let back: Vec<ReportRow> = serde_json::from_str(&report_to_json(&err)).unwrap();
        assert_eq!(back, err);
    }
}
