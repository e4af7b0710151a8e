use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::{format_percent, percent, MetricRecord, Report, Table};
use crate::error::MetricsError;
use crate::tree::{nonprojective_arcs, Arc, DepTree};
use crate::treebank::RawSentence;

/// Anything with a head and a relation per token.
///
/// Predictions are not required to be trees.
pub trait Attachments {
    fn attachments(&self) -> Vec<(usize, &str)>;

    fn arcs(&self) -> Vec<Arc> {
        self.attachments()
            .iter()
            .enumerate()
            .map(|(i, &(head, _))| Arc::new(head, i + 1))
            .collect()
    }
}

impl Attachments for DepTree {
    fn attachments(&self) -> Vec<(usize, &str)> {
        self.heads()
            .iter()
            .copied()
            .zip(self.deprels().iter().map(String::as_str))
            .collect()
    }
}

impl Attachments for RawSentence {
    fn attachments(&self) -> Vec<(usize, &str)> {
        self.tokens
            .iter()
            .map(|t| (t.head, t.deprel.as_str()))
            .collect()
    }
}

fn check_alignment<G: Attachments, P: Attachments>(
    gold: &[G],
    pred: &[P],
) -> Result<(), MetricsError> {
    if gold.len() != pred.len() {
        return Err(MetricsError::CorpusLength {
            gold: gold.len(),
            pred: pred.len(),
        });
    }
    for (i, (g, p)) in gold.iter().zip(pred).enumerate() {
        let (g, p) = (g.attachments().len(), p.attachments().len());
        if g != p {
            return Err(MetricsError::SentenceLength {
                sentence: i + 1,
                gold: g,
                pred: p,
            });
        }
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, Default, Eq, PartialEq, Serialize)]
pub struct AttachmentCounts {
    pub tokens: usize,
    pub correct_heads: usize,
    pub correct_labeled: usize,
}

impl AttachmentCounts {
    pub fn uas(&self) -> Option<f64> {
        percent(self.correct_heads, self.tokens)
    }

    pub fn las(&self) -> Option<f64> {
        percent(self.correct_labeled, self.tokens)
    }
}

/// Unlabeled and labeled attachment over aligned corpora.
pub fn uas_las<G: Attachments, P: Attachments>(
    gold: &[G],
    pred: &[P],
) -> Result<AttachmentCounts, MetricsError> {
    check_alignment(gold, pred)?;
    let mut counts = AttachmentCounts::default();
    for (g, p) in gold.iter().zip(pred) {
        for ((gh, gl), (ph, pl)) in g.attachments().into_iter().zip(p.attachments()) {
            counts.tokens += 1;
            if gh == ph {
                counts.correct_heads += 1;
                if gl == pl {
                    counts.correct_labeled += 1;
                }
            }
        }
    }
    Ok(counts)
}

/// Counts behind a precision/recall pair.
#[derive(Clone, Copy, Debug, Default, Eq, PartialEq, Serialize)]
pub struct PrecisionRecall {
    pub matched: usize,
    pub predicted: usize,
    pub gold: usize,
}

impl PrecisionRecall {
    pub fn precision(&self) -> Option<f64> {
        percent(self.matched, self.predicted)
    }

    pub fn recall(&self) -> Option<f64> {
        percent(self.matched, self.gold)
    }
}

/// Sentences flagged non-projective (some arc is crossed), regardless of
/// which arcs cross.
pub fn nonproj_sentence_pr<G: Attachments, P: Attachments>(
    gold: &[G],
    pred: &[P],
) -> Result<PrecisionRecall, MetricsError> {
    check_alignment(gold, pred)?;
    let mut pr = PrecisionRecall::default();
    for (g, p) in gold.iter().zip(pred) {
        let g = !nonprojective_arcs(&g.arcs()).is_empty();
        let p = !nonprojective_arcs(&p.arcs()).is_empty();
        pr.gold += g as usize;
        pr.predicted += p as usize;
        pr.matched += (g && p) as usize;
    }
    Ok(pr)
}

/// Non-projective arcs. A predicted arc matches when the same unlabeled
/// arc is non-projective in the gold tree as well.
pub fn nonproj_dep_pr<G: Attachments, P: Attachments>(
    gold: &[G],
    pred: &[P],
) -> Result<PrecisionRecall, MetricsError> {
    check_alignment(gold, pred)?;
    let mut pr = PrecisionRecall::default();
    for (g, p) in gold.iter().zip(pred) {
        let g: HashSet<Arc> = nonprojective_arcs(&g.arcs()).into_iter().collect();
        let p: HashSet<Arc> = nonprojective_arcs(&p.arcs()).into_iter().collect();
        pr.gold += g.len();
        pr.predicted += p.len();
        pr.matched += g.intersection(&p).count();
    }
    Ok(pr)
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct EvalReport {
    pub attachment: AttachmentCounts,
    pub nonproj_sentences: Option<PrecisionRecall>,
    pub nonproj_deps: Option<PrecisionRecall>,
}

/// Attachment scores, plus non-projectivity precision and recall when
/// `nonproj` is set.
pub fn evaluate<G: Attachments, P: Attachments>(
    gold: &[G],
    pred: &[P],
    nonproj: bool,
) -> Result<EvalReport, MetricsError> {
    let attachment = uas_las(gold, pred)?;
    let (nonproj_sentences, nonproj_deps) = if nonproj {
        (
            Some(nonproj_sentence_pr(gold, pred)?),
            Some(nonproj_dep_pr(gold, pred)?),
        )
    } else {
        (None, None)
    };
    Ok(EvalReport {
        attachment,
        nonproj_sentences,
        nonproj_deps,
    })
}

impl Report for EvalReport {
    fn records(&self) -> Vec<MetricRecord> {
        let mut records = vec![
            MetricRecord::count("eval", "tokens", self.attachment.tokens),
            MetricRecord::new("eval", "uas", self.attachment.uas()),
            MetricRecord::new("eval", "las", self.attachment.las()),
        ];
        for (name, pr) in [
            ("nonproj_sentence", &self.nonproj_sentences),
            ("nonproj_dep", &self.nonproj_deps),
        ] {
            if let Some(pr) = pr {
                records.push(MetricRecord::new(
                    "eval",
                    format!("{}_precision", name),
                    pr.precision(),
                ));
                records.push(MetricRecord::new(
                    "eval",
                    format!("{}_recall", name),
                    pr.recall(),
                ));
            }
        }
        records
    }
}

impl fmt::Display for EvalReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut table = Table::new(["metric", "value"]);
        table.row(["tokens".to_owned(), self.attachment.tokens.to_string()]);
        table.row(["UAS".to_owned(), format_percent(self.attachment.uas())]);
        table.row(["LAS".to_owned(), format_percent(self.attachment.las())]);
        for (name, pr) in [
            ("non-projective sentences", &self.nonproj_sentences),
            ("non-projective dependencies", &self.nonproj_deps),
        ] {
            if let Some(pr) = pr {
                table.row([format!("{} P", name), format_percent(pr.precision())]);
                table.row([format!("{} R", name), format_percent(pr.recall())]);
            }
        }
        write!(f, "{}", table)?;
        if self.nonproj_deps.is_some() {
            writeln!(
                f,
                "(non-projective = crossed by another arc; dependencies must be \
                 non-projective in both gold and prediction to match)"
            )?;
        }
        Ok(())
    }
}
