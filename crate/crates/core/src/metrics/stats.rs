use std::fmt;
use std::ops::Add;

use serde::Serialize;

use super::{format_percent, percent, MetricRecord, Report, Table};
use crate::tree::{crossings_graph, nonprojective_arcs, DepTree};

/// Non-projectivity and 2-planarity of a treebank.
///
/// An arc is non-projective when another arc crosses it.
#[derive(Clone, Copy, Debug, Default, Eq, PartialEq, Serialize)]
pub struct TreebankStats {
    pub sentences: usize,
    pub arcs: usize,
    pub nonproj_sentences: usize,
    pub nonproj_arcs: usize,
    pub two_planar_sentences: usize,
}

impl TreebankStats {
    pub fn of_tree(tree: &DepTree) -> Self {
        let graph = crossings_graph(tree);
        let nonproj = nonprojective_arcs(graph.arcs()).len();
        TreebankStats {
            sentences: 1,
            arcs: tree.len(),
            nonproj_sentences: (nonproj > 0) as usize,
            nonproj_arcs: nonproj,
            two_planar_sentences: graph.is_bipartite() as usize,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.sentences == 0
    }

    pub fn nonproj_sentence_percent(&self) -> Option<f64> {
        percent(self.nonproj_sentences, self.sentences)
    }

    pub fn nonproj_arc_percent(&self) -> Option<f64> {
        percent(self.nonproj_arcs, self.arcs)
    }

    pub fn two_planar_percent(&self) -> Option<f64> {
        percent(self.two_planar_sentences, self.sentences)
    }
}

impl Add for TreebankStats {
    type Output = TreebankStats;

    fn add(self, rhs: TreebankStats) -> TreebankStats {
        TreebankStats {
            sentences: self.sentences + rhs.sentences,
            arcs: self.arcs + rhs.arcs,
            nonproj_sentences: self.nonproj_sentences + rhs.nonproj_sentences,
            nonproj_arcs: self.nonproj_arcs + rhs.nonproj_arcs,
            two_planar_sentences: self.two_planar_sentences + rhs.two_planar_sentences,
        }
    }
}

pub fn treebank_stats<'a>(trees: impl IntoIterator<Item = &'a DepTree>) -> TreebankStats {
    trees
        .into_iter()
        .map(TreebankStats::of_tree)
        .fold(TreebankStats::default(), Add::add)
}

fn zero_if_empty(value: Option<f64>) -> Option<f64> {
    value.or(Some(0.0))
}

impl Report for TreebankStats {
    fn records(&self) -> Vec<MetricRecord> {
        vec![
            MetricRecord::count("stats", "sentences", self.sentences),
            MetricRecord::count("stats", "arcs", self.arcs),
            MetricRecord::count("stats", "empty", self.is_empty() as usize),
            MetricRecord::new(
                "stats",
                "nonproj_sentence_percent",
                zero_if_empty(self.nonproj_sentence_percent()),
            ),
            MetricRecord::new(
                "stats",
                "nonproj_dep_percent",
                zero_if_empty(self.nonproj_arc_percent()),
            ),
            MetricRecord::new(
                "stats",
                "two_planar_sentence_percent",
                zero_if_empty(self.two_planar_percent()),
            ),
        ]
    }
}

impl fmt::Display for TreebankStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut table = Table::new([
            "sentences",
            "arcs",
            "non-proj sent %",
            "non-proj dep %",
            "2-planar sent %",
        ]);
        table.row([
            self.sentences.to_string(),
            self.arcs.to_string(),
            format_percent(zero_if_empty(self.nonproj_sentence_percent())),
            format_percent(zero_if_empty(self.nonproj_arc_percent())),
            format_percent(zero_if_empty(self.two_planar_percent())),
        ]);
        write!(f, "{}", table)?;
        if self.is_empty() {
            writeln!(f, "(empty corpus)")?;
        }
        writeln!(f, "(non-projective = crossed by another arc)")
    }
}
