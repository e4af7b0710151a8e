use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::Serialize;

use super::{format_percent, percent, MetricRecord, Report, Table};
use crate::bracket::{EMPTY_LABEL, EMPTY_LABEL_SYMBOL};
use crate::error::MetricsError;
use crate::treebank::LabelSentence;

/// Labels every task reserves on top of the observed ones: the empty
/// label and the two sentence-boundary labels.
pub const RESERVED_LABELS: [&str; 3] = [EMPTY_LABEL, "BOS", "EOS"];

fn is_reserved(label: &str) -> bool {
    label == EMPTY_LABEL_SYMBOL || RESERVED_LABELS.contains(&label)
}

/// Number of label columns shared by every sentence, or `None` for a corpus
/// without sentences.
fn corpus_arity(corpus: &[LabelSentence]) -> Result<Option<usize>, MetricsError> {
    let mut arity = None;
    for sentence in corpus {
        if let Some(found) = sentence.task_count() {
            match arity {
                None => arity = Some(found),
                Some(expected) if expected != found => {
                    return Err(MetricsError::TaskArity {
                        left: expected,
                        right: found,
                    })
                }
                _ => {}
            }
        }
    }
    Ok(arity)
}

fn common_arity(corpora: &[&[LabelSentence]]) -> Result<usize, MetricsError> {
    let mut arity: Option<usize> = None;
    for corpus in corpora {
        match (arity, corpus_arity(corpus)?) {
            (None, found) => arity = found,
            (Some(expected), Some(found)) if expected != found => {
                return Err(MetricsError::TaskArity {
                    left: expected,
                    right: found,
                })
            }
            _ => {}
        }
    }
    Ok(arity.unwrap_or(0))
}

fn distinct_labels<'a>(corpora: &[&'a [LabelSentence]], task: usize) -> BTreeSet<&'a str> {
    corpora
        .iter()
        .flat_map(|c| c.iter())
        .flat_map(|s| s.task(task))
        .collect()
}

#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct TaskVocab {
    /// Distinct label strings observed, the empty label included.
    pub distinct: usize,
    /// Distinct labels other than the reserved ones, plus the reserved
    /// labels counted once.
    pub table_size: usize,
}

#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct VocabReport {
    pub tasks: Vec<TaskVocab>,
}

/// Label vocabulary per task over the union of the given corpora.
pub fn label_vocab(corpora: &[&[LabelSentence]]) -> Result<VocabReport, MetricsError> {
    let arity = common_arity(corpora)?;
    let tasks = (0..arity)
        .map(|task| {
            let labels = distinct_labels(corpora, task);
            let observed = labels.iter().filter(|l| !is_reserved(l)).count();
            TaskVocab {
                distinct: labels.len(),
                table_size: observed + RESERVED_LABELS.len(),
            }
        })
        .collect();
    Ok(VocabReport { tasks })
}

impl Report for VocabReport {
    fn records(&self) -> Vec<MetricRecord> {
        self.tasks
            .iter()
            .enumerate()
            .flat_map(|(i, t)| {
                [
                    MetricRecord::count("vocab", &format!("task{}_distinct", i + 1), t.distinct),
                    MetricRecord::count("vocab", &format!("task{}_labels", i + 1), t.table_size),
                ]
            })
            .collect()
    }
}

impl fmt::Display for VocabReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut table = Table::new(["task", "distinct", "labels"]);
        for (i, t) in self.tasks.iter().enumerate() {
            table.row([
                (i + 1).to_string(),
                t.distinct.to_string(),
                t.table_size.to_string(),
            ]);
        }
        write!(f, "{}", table)?;
        writeln!(f, "(labels = distinct + {})", RESERVED_LABELS.join(", "))
    }
}

#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct TaskUnseen {
    pub test_distinct: usize,
    pub unseen: usize,
    pub test_tokens: usize,
    pub unseen_tokens: usize,
}

impl TaskUnseen {
    pub fn unseen_percent(&self) -> Option<f64> {
        percent(self.unseen, self.test_distinct)
    }

    pub fn unseen_token_percent(&self) -> Option<f64> {
        percent(self.unseen_tokens, self.test_tokens)
    }
}

#[derive(Clone, Debug, Default, Eq, PartialEq, Serialize)]
pub struct UnseenReport {
    pub tasks: Vec<TaskUnseen>,
}

/// Test labels that never occur in the seen corpora, per task.
pub fn unseen_labels(
    seen: &[&[LabelSentence]],
    test: &[LabelSentence],
) -> Result<UnseenReport, MetricsError> {
    let mut all = seen.to_vec();
    all.push(test);
    let arity = common_arity(&all)?;

    let tasks = (0..arity)
        .map(|task| {
            let known: HashSet<&str> = distinct_labels(seen, task).into_iter().collect();
            let test_labels = distinct_labels(&[test], task);
            let mut report = TaskUnseen {
                test_distinct: test_labels.len(),
                unseen: test_labels.iter().filter(|l| !known.contains(*l)).count(),
                ..TaskUnseen::default()
            };
            for label in test.iter().flat_map(|s| s.task(task)) {
                report.test_tokens += 1;
                report.unseen_tokens += !known.contains(label) as usize;
            }
            report
        })
        .collect();
    Ok(UnseenReport { tasks })
}

impl Report for UnseenReport {
    fn records(&self) -> Vec<MetricRecord> {
        self.tasks
            .iter()
            .enumerate()
            .flat_map(|(i, t)| {
                let task = format!("task{}", i + 1);
                [
                    MetricRecord::count(
                        "unseen",
                        &format!("{}_test_labels", task),
                        t.test_distinct,
                    ),
                    MetricRecord::count("unseen", &format!("{}_unseen_labels", task), t.unseen),
                    MetricRecord::new(
                        "unseen",
                        format!("{}_unseen_label_percent", task),
                        t.unseen_percent(),
                    ),
                    MetricRecord::new(
                        "unseen",
                        format!("{}_unseen_token_percent", task),
                        t.unseen_token_percent(),
                    ),
                ]
            })
            .collect()
    }
}

impl fmt::Display for UnseenReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut table = Table::new(["task", "test labels", "unseen", "unseen %", "tokens %"]);
        for (i, t) in self.tasks.iter().enumerate() {
            table.row([
                (i + 1).to_string(),
                t.test_distinct.to_string(),
                t.unseen.to_string(),
                format_percent(t.unseen_percent()),
                format_percent(t.unseen_token_percent()),
            ]);
        }
        write!(f, "{}", table)
    }
}
