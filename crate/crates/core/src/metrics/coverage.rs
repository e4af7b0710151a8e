use std::fmt;
use std::ops::{Add, AddAssign};

use serde::Serialize;

use super::{format_percent, percent, MetricRecord, Report, Table};
use crate::encoding::Codec;
use crate::error::CodecError;
use crate::tree::DepTree;

/// Arc counts of a gold corpus pushed through encode and decode.
#[derive(Clone, Copy, Debug, Default, Eq, PartialEq, Serialize)]
pub struct CoverageCounts {
    pub sentences: usize,
    pub total_arcs: usize,
    /// Gold arcs whose head is the first decoded head of the dependent.
    /// A token left without any decoded head counts as attached to the root.
    pub recovered_raw: usize,
    /// Gold arcs present after postprocessing.
    pub recovered_postprocessed: usize,
    /// Arcs the plane assignment could not place.
    pub unassigned_arcs: usize,
}

impl Add for CoverageCounts {
    type Output = CoverageCounts;

    fn add(self, rhs: CoverageCounts) -> CoverageCounts {
        CoverageCounts {
            sentences: self.sentences + rhs.sentences,
            total_arcs: self.total_arcs + rhs.total_arcs,
            recovered_raw: self.recovered_raw + rhs.recovered_raw,
            recovered_postprocessed: self.recovered_postprocessed + rhs.recovered_postprocessed,
            unassigned_arcs: self.unassigned_arcs + rhs.unassigned_arcs,
        }
    }
}

impl AddAssign for CoverageCounts {
    fn add_assign(&mut self, rhs: CoverageCounts) {
        *self = *self + rhs;
    }
}

impl std::iter::Sum for CoverageCounts {
    fn sum<I: Iterator<Item = CoverageCounts>>(iter: I) -> Self {
        iter.fold(CoverageCounts::default(), Add::add)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CoverageReport {
    pub encoding: String,
    #[serde(flatten)]
    pub counts: CoverageCounts,
}

impl CoverageReport {
    pub fn raw_percent(&self) -> Option<f64> {
        percent(self.counts.recovered_raw, self.counts.total_arcs)
    }

    pub fn postprocessed_percent(&self) -> Option<f64> {
        percent(self.counts.recovered_postprocessed, self.counts.total_arcs)
    }
}

impl Report for CoverageReport {
    fn records(&self) -> Vec<MetricRecord> {
        let name = format!("coverage/{}", self.encoding);
        vec![
            MetricRecord::count(&name, "sentences", self.counts.sentences),
            MetricRecord::count(&name, "arcs", self.counts.total_arcs),
            MetricRecord::count(&name, "unassigned_arcs", self.counts.unassigned_arcs),
            MetricRecord::new(&name, "raw_percent", self.raw_percent()),
            MetricRecord::new(&name, "postprocessed_percent", self.postprocessed_percent()),
        ]
    }
}

/// One row per report.
pub fn coverage_table(reports: &[CoverageReport]) -> Table {
    let mut table = Table::new([
        "encoding",
        "sentences",
        "arcs",
        "unassigned",
        "raw %",
        "postprocessed %",
    ]);
    for report in reports {
        table.row([
            report.encoding.clone(),
            report.counts.sentences.to_string(),
            report.counts.total_arcs.to_string(),
            report.counts.unassigned_arcs.to_string(),
            format_percent(report.raw_percent()),
            format_percent(report.postprocessed_percent()),
        ]);
    }
    table
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", coverage_table(std::slice::from_ref(self)))
    }
}

/// Coverage of a single gold tree.
pub fn sentence_coverage(
    tree: &DepTree,
    tags: &[Option<String>],
    codec: &Codec,
) -> Result<CoverageCounts, CodecError> {
    let encoded = codec.encode(tree, tags)?;
    let decoded = codec.decode(&encoded.tasks, tags)?;
    let raw = decoded.raw_heads();
    let repaired = decoded.postprocess();

    Ok(CoverageCounts {
        sentences: 1,
        total_arcs: tree.len(),
        recovered_raw: tree.arcs().filter(|a| raw[a.dep - 1] == a.head).count(),
        recovered_postprocessed: tree
            .arcs()
            .filter(|a| repaired.head(a.dep) == a.head)
            .count(),
        unassigned_arcs: encoded.unassigned.len(),
    })
}

/// Coverage of a gold corpus of trees with their PoS tags.
pub fn arc_coverage(
    corpus: &[(DepTree, Vec<Option<String>>)],
    codec: &Codec,
) -> Result<CoverageReport, CodecError> {
    let counts = corpus
        .iter()
        .map(|(tree, tags)| sentence_coverage(tree, tags, codec))
        .sum::<Result<CoverageCounts, _>>()?;
    Ok(CoverageReport {
        encoding: codec.encoding.to_string(),
        counts,
    })
}
