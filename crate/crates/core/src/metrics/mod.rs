//! Corpus-level reports.
//!
//! Every report renders as an aligned plain-text table through `Display`
//! and flattens into [`MetricRecord`]s for machine-readable output.
//! Percentages are `None` when their denominator is zero and print as
//! `n/a`.

use serde::Serialize;

mod coverage;
pub use self::coverage::*;

mod eval;
pub use self::eval::*;

mod stats;
pub use self::stats::*;

mod table;
pub use self::table::Table;

mod vocab;
pub use self::vocab::*;

/// One named value of a report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MetricRecord {
    pub report: String,
    pub metric: String,
    pub value: Option<f64>,
}

impl MetricRecord {
    pub fn new(report: impl Into<String>, metric: impl Into<String>, value: Option<f64>) -> Self {
        MetricRecord {
            report: report.into(),
            metric: metric.into(),
            value,
        }
    }

    pub(crate) fn count(report: &str, metric: &str, value: usize) -> Self {
        MetricRecord::new(report, metric, Some(value as f64))
    }
}

/// Reports that can be flattened into records.
pub trait Report {
    fn records(&self) -> Vec<MetricRecord>;
}

/// `100 * num / den`, or `None` for an empty denominator.
pub fn percent(num: usize, den: usize) -> Option<f64> {
    (den > 0).then(|| 100.0 * num as f64 / den as f64)
}

/// Two decimals, or `n/a`.
pub fn format_percent(value: Option<f64>) -> String {
    match value {
        Some(v) => format!("{:.2}", v),
        None => "n/a".to_owned(),
    }
}
