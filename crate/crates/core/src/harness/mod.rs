//! Dataset ingestion, the conjecture report and the j-invariant helper.

pub mod dataset;
pub mod jinv;
pub mod report;

pub use dataset::{dataset_to_json, load_dataset, parse_dataset, CurveRecord};
pub use jinv::{j_invariant_lambda, JConstant};
pub use report::{conjecture_report, report_to_json, report_to_tsv, ConjectureRow, ErrorRow, ReportRow};
