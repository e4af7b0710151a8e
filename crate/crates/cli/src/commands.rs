use std::fmt::Display;
use std::io::Write;
use std::ops::Add;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use rayon::prelude::*;
use rayon::ThreadPool;
use serde_json::json;
use twoplanar::metrics::{
    coverage_table, evaluate, label_vocab, sentence_coverage, unseen_labels, CoverageCounts,
    CoverageReport, MetricRecord, Report, TreebankStats,
};
use twoplanar::treebank::{write_conllu, write_labels, LabelSentence, RawSentence, Token};
use twoplanar::{Codec, DepTree, Encoding};

use crate::files;
use crate::{
    CoverageArgs, DecodeArgs, EncodeArgs, EncodingArgs, EvalArgs, Format, Outcome, StatsArgs,
    VocabArgs,
};

fn codec(args: &EncodingArgs) -> Codec {
    Codec::new(args.encoding).switch_averse(args.switch_averse)
}

trait Printable: Report + Display {}
impl<T: Report + Display> Printable for T {}

fn print_reports(format: Format, reports: &[&dyn Printable]) -> anyhow::Result<()> {
    let mut out = std::io::stdout().lock();
    match format {
        Format::Text => {
            for (i, report) in reports.iter().enumerate() {
                if i > 0 {
                    writeln!(out)?;
                }
                write!(out, "{}", report)?;
            }
        }
        Format::Json => {
            let records: Vec<MetricRecord> = reports.iter().flat_map(|r| r.records()).collect();
            serde_json::to_writer_pretty(&mut out, &records)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

/// Report failed sentences on stderr, numbered from 1.
fn report_failures<T>(results: &[Result<T, String>]) -> usize {
    let mut failed = 0;
    for (i, result) in results.iter().enumerate() {
        if let Err(e) = result {
            eprintln!("sentence {}: {}", i + 1, e);
            failed += 1;
        }
    }
    failed
}

type TaggedTrees = Vec<(DepTree, Vec<Option<String>>)>;

/// Gold trees with their UPOS tags. Invalid sentences are reported and
/// left out.
fn gold_corpus(pool: &ThreadPool, path: &Path) -> anyhow::Result<(TaggedTrees, usize)> {
    let sentences = files::conllu(path)?;
    let results: Vec<Result<_, String>> = pool.install(|| {
        sentences
            .par_iter()
            .map(|s| s.tree().map(|t| (t, s.upos())).map_err(|e| e.to_string()))
            .collect()
    });
    let failed = report_failures(&results);
    Ok((results.into_iter().filter_map(Result::ok).collect(), failed))
}

pub fn encode(pool: &ThreadPool, args: EncodeArgs) -> Outcome {
    let sentences = files::conllu(&args.input)?;
    let codec = codec(&args.encoding);

    let results: Vec<Result<(LabelSentence, usize), String>> = pool.install(|| {
        sentences
            .par_iter()
            .map(|s| {
                let tree = s.tree().map_err(|e| e.to_string())?;
                let encoded = codec.encode(&tree, &s.upos()).map_err(|e| e.to_string())?;
                let labels = LabelSentence::from_tasks(&s.forms(), encoded.tasks);
                Ok((labels, encoded.unassigned.len()))
            })
            .collect()
    });
    let failed = report_failures(&results);

    let mut arcs = 0;
    let mut unassigned = 0;
    let mut labels = Vec::with_capacity(results.len());
    for (sentence, missing) in results.into_iter().flatten() {
        arcs += sentence.len();
        unassigned += missing;
        labels.push(sentence);
    }
    write_labels(files::create(args.output.as_ref())?, &labels)?;

    eprintln!("encoding: {}", codec.encoding);
    eprintln!("sentences: {}", labels.len());
    eprintln!("arcs: {}", arcs);
    eprintln!("unassigned arcs: {}", unassigned);
    if failed > 0 {
        eprintln!("failed sentences: {}", failed);
    }
    Ok(failed == 0)
}

fn check_alignment(
    labels: &[LabelSentence],
    other: &[RawSentence],
    what: &str,
) -> anyhow::Result<()> {
    if labels.len() != other.len() {
        bail!(
            "label file has {} sentences, {} file has {}",
            labels.len(),
            what,
            other.len()
        );
    }
    for (i, (l, o)) in labels.iter().zip(other).enumerate() {
        if l.len() != o.len() {
            bail!(
                "sentence {}: label file has {} tokens, {} file has {}",
                i + 1,
                l.len(),
                what,
                o.len()
            );
        }
    }
    Ok(())
}

pub fn decode(pool: &ThreadPool, args: DecodeArgs) -> Outcome {
    let labels = files::labels(&args.input)?;
    let reference = args.reference.as_deref().map(files::conllu).transpose()?;
    let tag_file = match &args.tags {
        Some(path) => Some(files::conllu(path)?),
        None => None,
    };
    if let Some(reference) = &reference {
        check_alignment(&labels, reference, "reference")?;
    }
    if let Some(tags) = &tag_file {
        check_alignment(&labels, tags, "tags")?;
    }
    let tags = tag_file.as_ref().or(reference.as_ref());
    let codec = codec(&args.encoding);
    let postprocess = !args.no_postprocess;

    let results: Vec<Result<(RawSentence, serde_json::Value), String>> = pool.install(|| {
        labels
            .par_iter()
            .enumerate()
            .map(|(i, sentence)| {
                let tags = match tags {
                    Some(t) => t[i].upos(),
                    None => vec![None; sentence.len()],
                };
                let decoded = codec
                    .decode(&sentence.tasks(), &tags)
                    .map_err(|e| e.to_string())?;

                let mut record = json!({
                    "sentence": i + 1,
                    "diagnostics": decoded.diagnostics,
                });
                let (heads, deprels) = if postprocess {
                    let (tree, repairs) = decoded.postprocess_with_repairs();
                    record["repairs"] = json!(repairs);
                    (tree.heads().to_vec(), tree.deprels().to_vec())
                } else {
                    (decoded.raw_heads(), decoded.deprels.clone())
                };

                let mut out = match &reference {
                    Some(r) => r[i].clone(),
                    None => RawSentence::from_tokens(
                        sentence
                            .rows
                            .iter()
                            .map(|row| Token::new(row.id, row.form.clone(), 0, "_"))
                            .collect(),
                    ),
                };
                for (token, (head, deprel)) in
                    out.tokens.iter_mut().zip(heads.into_iter().zip(deprels))
                {
                    token.head = head;
                    token.deprel = deprel;
                }
                Ok((out, record))
            })
            .collect()
    });
    let failed = report_failures(&results);

    let (sentences, records): (Vec<_>, Vec<_>) = results.into_iter().flatten().unzip();
    write_conllu(files::create(args.output.as_ref())?, &sentences)?;

    let sidecar = args.diagnostics.clone().or_else(|| {
        let output = args.output.as_ref().filter(|_| args.no_postprocess)?;
        let mut name = output.clone().into_os_string();
        name.push(".diagnostics.jsonl");
        Some(PathBuf::from(name))
    });
    let mut lines = String::new();
    for record in &records {
        lines.push_str(&record.to_string());
        lines.push('\n');
    }
    match sidecar {
        Some(path) => std::fs::write(&path, lines)
            .with_context(|| format!("cannot write {}", path.display()))?,
        None if args.no_postprocess => eprint!("{}", lines),
        None => {}
    }
    Ok(failed == 0)
}

pub fn coverage(pool: &ThreadPool, args: CoverageArgs) -> Outcome {
    let (corpus, mut failed) = gold_corpus(pool, &args.input)?;
    let encodings = match args.encoding {
        Some(e) => vec![e],
        None => Encoding::ALL.to_vec(),
    };

    let mut reports = Vec::new();
    for encoding in encodings {
        let codec = Codec::new(encoding).switch_averse(args.switch_averse);
        let results: Vec<Result<CoverageCounts, String>> = pool.install(|| {
            corpus
                .par_iter()
                .map(|(tree, tags)| {
                    sentence_coverage(tree, tags, &codec).map_err(|e| e.to_string())
                })
                .collect()
        });
        if report_failures(&results) > 0 {
            eprintln!("(encoding {})", encoding);
            failed += 1;
        }
        reports.push(CoverageReport {
            encoding: encoding.to_string(),
            counts: results.into_iter().flatten().sum(),
        });
    }
    match args.report.format {
        Format::Text => print!("{}", coverage_table(&reports)),
        Format::Json => {
            let printable: Vec<&dyn Printable> =
                reports.iter().map(|r| r as &dyn Printable).collect();
            print_reports(Format::Json, &printable)?;
        }
    }
    Ok(failed == 0)
}

pub fn stats(pool: &ThreadPool, args: StatsArgs) -> Outcome {
    let (corpus, failed) = gold_corpus(pool, &args.input)?;
    let stats = pool.install(|| {
        corpus
            .par_iter()
            .map(|(tree, _)| TreebankStats::of_tree(tree))
            .reduce(TreebankStats::default, Add::add)
    });
    print_reports(args.report.format, &[&stats])?;
    Ok(failed == 0)
}

pub fn eval(args: EvalArgs) -> Outcome {
    let gold = files::conllu(&args.gold)?;
    let pred = files::conllu(&args.pred)?;
    let report = evaluate(&gold, &pred, args.nonproj)?;
    print_reports(args.report.format, &[&report])?;
    Ok(true)
}

pub fn vocab(args: VocabArgs) -> Outcome {
    let corpora = args
        .input
        .iter()
        .map(|p| files::labels(p))
        .collect::<anyhow::Result<Vec<_>>>()?;
    let seen: Vec<&[LabelSentence]> = corpora.iter().map(Vec::as_slice).collect();
    let vocab = label_vocab(&seen)?;
    match &args.test {
        Some(path) => {
            let test = files::labels(path)?;
            let unseen = unseen_labels(&seen, &test)?;
            print_reports(args.report.format, &[&vocab, &unseen])?;
        }
        None => print_reports(args.report.format, &[&vocab])?,
    }
    Ok(true)
}
