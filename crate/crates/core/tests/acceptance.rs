//! Acceptance criteria, one line per criterion.
//!
//! P1-P7 run on generated data. D1 and D2 need the UD v2.4 treebanks: point
//! `UD24_DIR` at the directory holding the `UD_*` treebank folders, otherwise
//! they are reported as SKIP.

mod common;

use std::collections::HashSet;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoplanar::bracket::{decode, encode, parse_labels, BracketKind, PlaneLabel, TokenLabel};
use twoplanar::metrics::{arc_coverage, label_vocab, treebank_stats};
use twoplanar::plane::{assign_greedy, assign_prop};
use twoplanar::relpos::{decode_relpos, encode_relpos};
use twoplanar::tree::enumerate_trees;
use twoplanar::treebank::{read_conllu, LabelSentence, RawSentence};
use twoplanar::{
    assign, postprocess::postprocess, validate_tree, Arc, Codec, DepTree, Encoding, Plane,
    PlanePartition, Strategy,
};

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Check = fn() -> Verdict;

fn verdict(failures: &[String], summary: String) -> Verdict {
    if failures.is_empty() {
        Verdict::Pass(summary)
    } else {
        let shown: Vec<_> = failures.iter().take(5).cloned().collect();
        Verdict::Fail(format!(
            "{}; {} failure(s), first: {}",
            summary,
            failures.len(),
            shown.join(" | ")
        ))
    }
}

fn pairs(arcs: &[Arc]) -> Vec<(usize, usize)> {
    let mut out: Vec<_> = arcs.iter().map(|a| (a.head, a.dep)).collect();
    out.sort();
    out
}

fn trees(n: usize) -> Vec<DepTree> {
    enumerate_trees(n).unwrap().collect()
}

fn p1_figure() -> Verdict {
    let t = labeled(&FIG_HEADS, &["root", "a", "b", "c", "d", "e"]);
    let mut failures = Vec::new();
    let mut expect = |what: &str, found: Vec<String>, wanted: &[&str]| {
        if found != wanted {
            failures.push(format!("{}: {:?} != {:?}", what, found, wanted));
        }
    };

    let one = encode(&t, &PlanePartition::single_plane(&t)).unwrap();
    expect(
        "1p",
        one.display_strings(),
        &["NONE", "///>", "/>", "/>", ">", ">"],
    );

    let greedy = assign(&t, Strategy::Greedy, false);
    let seq = encode(&t, &greedy).unwrap();
    expect(
        "2p-greedy",
        seq.display_strings(),
        &["NONE", "///>", "/*>", ">*", ">", "NONE"],
    );

    let prop = assign(&t, Strategy::Propagation, false);
    let seq = encode(&t, &prop).unwrap();
    expect(
        "2p-prop",
        seq.display_strings(),
        &["NONE", "/*//>", "/*>", "/>*", ">*", ">"],
    );
    expect(
        "2p-prop plane 1",
        seq.plane_strings(Plane::First),
        &["NONE", "//>", ">", "/", "NONE", ">"],
    );
    expect(
        "2p-prop plane 2",
        seq.plane_strings(Plane::Second),
        &["NONE", "/", "/", ">", ">", "NONE"],
    );

    if pairs(&greedy.unassigned()) != [(3, 6)] {
        failures.push(format!(
            "greedy unassigned {:?}",
            pairs(&greedy.unassigned())
        ));
    }
    if !prop.unassigned().is_empty() {
        failures.push(format!("prop unassigned {:?}", pairs(&prop.unassigned())));
    }
    verdict(
        &failures,
        "1p/2p-greedy/2p-prop label rows and plane sets".into(),
    )
}

fn p2_prop_completeness() -> Verdict {
    let mut failures = Vec::new();
    let mut total = 0;
    let mut non_two_planar = 0;
    for n in 1..=6 {
        let all = trees(n);
        let expected = (n + 1).pow(n as u32 - 1);
        let brute: HashSet<Vec<usize>> = brute_force_trees(n).into_iter().collect();
        let found: HashSet<Vec<usize>> = all.iter().map(|t| t.heads().to_vec()).collect();
        if all.len() != expected || found.len() != expected || found != brute {
            failures.push(format!(
                "n={}: enumerated {} trees, expected {}",
                n,
                all.len(),
                expected
            ));
        }
        for t in &all {
            total += 1;
            let bipartite = crossing_graph_bipartite(&arcs_of(t.heads()));
            non_two_planar += !bipartite as usize;
            for averse in [false, true] {
                let unassigned = !assign_prop(t, averse).unassigned().is_empty();
                if unassigned == bipartite {
                    failures.push(format!("{:?} (switch-averse {})", t.heads(), averse));
                }
            }
        }
    }
    verdict(
        &failures,
        format!("{} trees n<=6, {} not 2-planar", total, non_two_planar),
    )
}

fn p3_round_trip() -> Verdict {
    const DEPRELS: [&str; 5] = ["nsubj", "obj", "amod", "det", "root"];
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut failures = Vec::new();
    let (mut checked, mut multi_root) = (0, 0);
    for n in 1..=6 {
        for t in trees(n) {
            if !crossing_graph_bipartite(&arcs_of(t.heads())) {
                continue;
            }
            if !single_root(t.heads()) {
                multi_root += 1;
                continue;
            }
            let deprels = (0..n)
                .map(|_| DEPRELS.choose(&mut rng).unwrap().to_string())
                .collect();
            let t = t.with_deprels(deprels);
            let seq = encode(&t, &assign_prop(&t, false)).unwrap();
            let back = decode(&seq.labels).postprocess(&seq.deprels);
            checked += 1;
            if back != t {
                failures.push(format!("{:?} -> {:?}", t.heads(), back.heads()));
            }
        }
    }
    verdict(
        &failures,
        format!(
            "{} single-root 2-planar trees n<=6 exact; {} multi-root trees not encodable",
            checked, multi_root
        ),
    )
}

fn p4_one_planar_boundary() -> Verdict {
    let mut failures = Vec::new();
    let (mut checked, mut exact) = (0, 0);
    for n in 1..=6 {
        for t in trees(n) {
            if !single_root(t.heads()) {
                continue;
            }
            let seq = encode(&t, &PlanePartition::single_plane(&t)).unwrap();
            let ok = decode(&seq.labels).postprocess(&seq.deprels) == t;
            checked += 1;
            exact += ok as usize;
            if ok == same_direction_crossing(t.heads()) {
                failures.push(format!("{:?}: exact={}", t.heads(), ok));
            }
        }
    }

    let fig = labeled(&FIG_HEADS, &["root", "a", "b", "c", "d", "e"]);
    let corpus = vec![(fig.clone(), vec![None; 6])];
    let report = arc_coverage(&corpus, &Codec::new(Encoding::OnePlanar)).unwrap();
    if (report.counts.recovered_raw, report.counts.total_arcs) != (3, 6) {
        failures.push(format!(
            "figure raw coverage {}/{}",
            report.counts.recovered_raw, report.counts.total_arcs
        ));
    }
    let seq = encode(&fig, &PlanePartition::single_plane(&fig)).unwrap();
    let raw = pairs(&decode(&seq.labels).raw_arcs);
    for (i, &a) in raw.iter().enumerate() {
        for &b in &raw[i + 1..] {
            if cross(a, b) {
                failures.push(format!("decoded arcs {:?} and {:?} cross", a, b));
            }
        }
    }
    verdict(
        &failures,
        format!(
            "{} single-root trees n<=6, {} exact; figure raw 3/6, decoded arcs non-crossing",
            checked, exact
        ),
    )
}

/// A random label of up to six bracket elements over both planes.
fn random_label<R: Rng>(rng: &mut R) -> TokenLabel {
    let mut label = TokenLabel::default();
    for _ in 0..rng.gen_range(0..=6) {
        let plane = if rng.gen_bool(0.5) {
            Plane::First
        } else {
            Plane::Second
        };
        let slot: &mut PlaneLabel = label.plane_mut(plane);
        match BracketKind::ALL[rng.gen_range(0..4)] {
            BracketKind::OpenLeft => slot.open_left = true,
            BracketKind::CloseLeft => slot.close_left += 1,
            BracketKind::OpenRight => slot.open_right += 1,
            BracketKind::CloseRight => slot.close_right = true,
        }
    }
    label
}

fn p5_postprocess_totality() -> Verdict {
    const CASES: usize = 100_000;
    const ALPHABET: [char; 6] = ['<', '\\', '/', '>', '*', 'x'];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = Vec::new();
    let check = |labels: &[TokenLabel], rng: &mut ChaCha8Rng| -> Option<String> {
        let n = labels.len();
        let deprels: Vec<String> = (0..n)
            .map(|_| if rng.gen_bool(0.2) { "root" } else { "dep" }.to_owned())
            .collect();
        let repaired = postprocess(&decode(labels).raw_arcs, &deprels);
        let arcs: Vec<Arc> = repaired.arcs().collect();
        validate_tree(n, &arcs)
            .err()
            .map(|e| format!("{:?}: {}", labels, e))
    };

    for _ in 0..CASES {
        let n = rng.gen_range(1..=12);
        let labels: Vec<TokenLabel> = (0..n).map(|_| random_label(&mut rng)).collect();
        let text: Vec<String> = labels.iter().map(ToString::to_string).collect();
        match parse_labels(&text) {
            Ok(parsed) if parsed == labels => failures.extend(check(&parsed, &mut rng)),
            other => failures.push(format!("{:?} reparsed as {:?}", text, other)),
        }
    }

    let mut parsed_strings = 0;
    for _ in 0..CASES / 10 {
        let n = rng.gen_range(1..=12);
        let text: Vec<String> = (0..n)
            .map(|_| {
                (0..rng.gen_range(1..=6))
                    .map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())])
                    .collect()
            })
            .collect();
        if let Ok(parsed) = parse_labels(&text) {
            parsed_strings += 1;
            failures.extend(check(&parsed, &mut rng));
        }
    }
    verdict(
        &failures,
        format!(
            "{} generated sequences n<=12, plus {} of {} raw strings parsed",
            CASES,
            parsed_strings,
            CASES / 10
        ),
    )
}

fn p6_relpos() -> Verdict {
    const TAGS: [&str; 3] = ["NOUN", "VERB", "ADJ"];
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=5 {
        let all = trees(n);
        for seed in 0..100u64 {
            let mut rng = ChaCha8Rng::seed_from_u64(1000 * n as u64 + seed);
            let tags: Vec<Option<String>> = (0..n)
                .map(|_| Some(TAGS.choose(&mut rng).unwrap().to_string()))
                .collect();
            for t in &all {
                let labels = encode_relpos(t, &tags).unwrap();
                let decoded = decode_relpos(&labels, &tags);
                checked += 1;
                if postprocess(&decoded.raw_arcs, t.deprels()) != *t {
                    failures.push(format!("{:?} with {:?}", t.heads(), tags));
                }
            }
        }
    }
    verdict(&failures, format!("{} tree/tagging pairs n<=5", checked))
}

fn p7_partitions() -> Verdict {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=6 {
        for t in trees(n) {
            for averse in [false, true] {
                for (name, p) in [
                    ("greedy", assign_greedy(&t, averse)),
                    ("prop", assign_prop(&t, averse)),
                ] {
                    checked += 1;
                    for plane in [Plane::First, Plane::Second] {
                        let arcs = pairs(&p.plane(plane));
                        let crossing = arcs
                            .iter()
                            .enumerate()
                            .any(|(i, &a)| arcs[i + 1..].iter().any(|&b| cross(a, b)));
                        if crossing {
                            failures.push(format!("{} averse={} {:?}", name, averse, t.heads()));
                        }
                    }
                }
            }
        }
    }
    verdict(
        &failures,
        format!("{} partitions (4 variants, n<=6)", checked),
    )
}

struct Treebank {
    name: &'static str,
    dir: &'static str,
    /// non-projective sentences and dependencies (%)
    stats: [f64; 2],
    /// arc coverage of 1p, 2p-greedy, 2p-prop (%)
    coverage: Option<[f64; 3]>,
    /// label counts: rel-PoS, 1p, 2p-greedy task 1 and 2, 2p-prop task 1 and 2
    labels: [usize; 6],
}

const TREEBANKS: [Treebank; 12] = [
    Treebank {
        name: "Ancient Greek",
        dir: "UD_Ancient_Greek-Perseus",
        stats: [63.87, 10.14],
        coverage: Some([89.53, 99.27, 99.33]),
        labels: [166, 210, 108, 37, 109, 39],
    },
    Treebank {
        name: "Basque",
        dir: "UD_Basque-BDT",
        stats: [33.17, 4.69],
        coverage: Some([94.85, 99.85, 99.62]),
        labels: [132, 134, 84, 25, 83, 25],
    },
    Treebank {
        name: "Hungarian",
        dir: "UD_Hungarian-Szeged",
        stats: [27.11, 1.97],
        coverage: Some([97.57, 99.96, 99.98]),
        labels: [128, 101, 71, 19, 71, 21],
    },
    Treebank {
        name: "Portuguese",
        dir: "UD_Portuguese-Bosque",
        stats: [23.31, 1.85],
        coverage: Some([98.10, 99.95, 99.88]),
        labels: [192, 110, 88, 25, 88, 27],
    },
    Treebank {
        name: "Urdu",
        dir: "UD_Urdu-UDTB",
        stats: [22.57, 1.32],
        coverage: Some([98.68, 99.95, 99.94]),
        labels: [190, 95, 80, 22, 80, 22],
    },
    Treebank {
        name: "Afrikaans",
        dir: "UD_Afrikaans-AfriBooms",
        stats: [22.34, 1.62],
        coverage: Some([98.65, 99.99, 99.99]),
        labels: [110, 77, 62, 15, 62, 15],
    },
    Treebank {
        name: "Korean",
        dir: "UD_Korean-Kaist",
        stats: [21.70, 2.55],
        coverage: Some([98.42, 100.00, 100.00]),
        labels: [134, 89, 73, 14, 73, 14],
    },
    Treebank {
        name: "Danish",
        dir: "UD_Danish-DDT",
        stats: [21.50, 1.74],
        coverage: Some([98.10, 99.97, 99.96]),
        labels: [150, 128, 97, 23, 96, 25],
    },
    Treebank {
        name: "Gothic",
        dir: "UD_Gothic-PROIEL",
        stats: [17.57, 2.53],
        coverage: Some([97.58, 99.94, 99.98]),
        labels: [121, 114, 78, 18, 78, 19],
    },
    Treebank {
        name: "Lithuanian",
        dir: "UD_Lithuanian-HSE",
        stats: [17.49, 1.27],
        coverage: Some([98.35, 99.97, 100.00]),
        labels: [89, 57, 46, 11, 46, 12],
    },
    Treebank {
        name: "Japanese",
        dir: "UD_Japanese-GSD",
        stats: [0.0, 0.0],
        coverage: None,
        labels: [77, 45, 45, 3, 45, 3],
    },
    Treebank {
        name: "Galician",
        dir: "UD_Galician-CTG",
        stats: [0.0, 0.0],
        coverage: None,
        labels: [132, 82, 82, 3, 82, 3],
    },
];

fn ud_dir() -> Option<PathBuf> {
    std::env::var_os("UD24_DIR")
        .map(PathBuf::from)
        .filter(|p| p.is_dir())
}

fn split_file(dir: &Path, split: &str) -> Option<PathBuf> {
    let suffix = format!("-ud-{}.conllu", split);
    std::fs::read_dir(dir)
        .ok()?
        .filter_map(Result::ok)
        .map(|e| e.path())
        .find(|p| p.to_string_lossy().ends_with(&suffix))
}

type Corpus = Vec<(DepTree, Vec<Option<String>>)>;

fn load(path: &Path) -> Result<Corpus, String> {
    let file = File::open(path).map_err(|e| format!("{}: {}", path.display(), e))?;
    let sentences: Vec<RawSentence> =
        read_conllu(BufReader::new(file)).map_err(|e| format!("{}: {}", path.display(), e))?;
    sentences
        .iter()
        .enumerate()
        .map(|(i, s)| {
            s.tree()
                .map(|t| (t, s.upos()))
                .map_err(|e| format!("{} sentence {}: {}", path.display(), i + 1, e))
        })
        .collect()
}

fn available_treebanks() -> Option<Vec<(&'static Treebank, PathBuf)>> {
    let root = ud_dir()?;
    Some(
        TREEBANKS
            .iter()
            .filter_map(|tb| {
                let dir = root.join(tb.dir);
                dir.is_dir().then_some((tb, dir))
            })
            .collect(),
    )
}

fn close(found: f64, wanted: f64, tolerance: f64) -> bool {
    (found - wanted).abs() <= tolerance + 1e-9
}

fn d1_coverage_and_stats() -> Verdict {
    let Some(treebanks) = available_treebanks() else {
        return Verdict::Skip("UD24_DIR not set".into());
    };
    if treebanks.is_empty() {
        return Verdict::Skip("no selected treebank found under UD24_DIR".into());
    }
    let mut failures = Vec::new();
    let mut rows = Vec::new();
    for (tb, dir) in &treebanks {
        let corpus = match split_file(dir, "train")
            .ok_or("no train file".to_owned())
            .and_then(|p| load(&p))
        {
            Ok(c) => c,
            Err(e) => {
                failures.push(format!("{}: {}", tb.name, e));
                continue;
            }
        };
        let stats = treebank_stats(corpus.iter().map(|(t, _)| t));
        let found = [
            stats.nonproj_sentence_percent().unwrap_or(0.0),
            stats.nonproj_arc_percent().unwrap_or(0.0),
        ];
        for (f, w) in found.iter().zip(tb.stats) {
            if !close(*f, w, 0.10) {
                failures.push(format!("{} stats {:.2} vs {:.2}", tb.name, f, w));
            }
        }
        let mut row = format!("{}: {:.2}/{:.2}", tb.name, found[0], found[1]);
        if let Some(wanted) = tb.coverage {
            for (name, w) in ["1p", "2p-greedy", "2p-prop"].iter().zip(wanted) {
                let codec = Codec::new(name.parse().unwrap());
                let report = arc_coverage(&corpus, &codec).unwrap();
                let f = report.raw_percent().unwrap_or(0.0);
                if !close(f, w, 0.10) {
                    failures.push(format!(
                        "{} {} coverage {:.2} vs {:.2}",
                        tb.name, name, f, w
                    ));
                }
                row.push_str(&format!(" {:.2}", f));
            }
        }
        rows.push(row);
    }
    println!("    D1 rows (non-proj sent/dep %, coverage 1p 2p-greedy 2p-prop):");
    for row in &rows {
        println!("      {}", row);
    }
    verdict(
        &failures,
        format!(
            "{} of {} treebanks (non-projective = crossed arc)",
            treebanks.len(),
            TREEBANKS.len()
        ),
    )
}

fn label_corpus(corpus: &Corpus, codec: &Codec) -> Vec<LabelSentence> {
    corpus
        .iter()
        .map(|(t, tags)| {
            let forms = vec![String::new(); t.len()];
            LabelSentence::from_tasks(&forms, codec.encode(t, tags).unwrap().tasks)
        })
        .collect()
}

fn d2_vocab() -> Verdict {
    let Some(treebanks) = available_treebanks() else {
        return Verdict::Skip("UD24_DIR not set".into());
    };
    if treebanks.is_empty() {
        return Verdict::Skip("no selected treebank found under UD24_DIR".into());
    }
    let mut failures = Vec::new();
    for (tb, dir) in &treebanks {
        let mut corpus = Corpus::new();
        for split in ["train", "dev"] {
            match split_file(dir, split)
                .ok_or(format!("no {} file", split))
                .and_then(|p| load(&p))
            {
                Ok(c) => corpus.extend(c),
                Err(e) => failures.push(format!("{}: {}", tb.name, e)),
            }
        }
        let cells = [
            (Encoding::RelPos, 0, tb.labels[0]),
            (Encoding::OnePlanar, 0, tb.labels[1]),
            (Encoding::TwoPlanar(Strategy::Greedy), 0, tb.labels[2]),
            (Encoding::TwoPlanar(Strategy::Greedy), 1, tb.labels[3]),
            (Encoding::TwoPlanar(Strategy::Propagation), 0, tb.labels[4]),
            (Encoding::TwoPlanar(Strategy::Propagation), 1, tb.labels[5]),
        ];
        let mut row = format!("{}:", tb.name);
        for (encoding, task, wanted) in cells {
            let labels = label_corpus(&corpus, &Codec::new(encoding));
            let report = label_vocab(&[&labels]).unwrap();
            let found = report.tasks.get(task).map_or(3, |t| t.table_size);
            row.push_str(&format!(" {}", found));
            if found.abs_diff(wanted) > 2 {
                failures.push(format!(
                    "{} {} task {}: {} vs {}",
                    tb.name,
                    encoding,
                    task + 1,
                    found,
                    wanted
                ));
            }
        }
        println!("      {}", row);
    }
    verdict(
        &failures,
        format!("{} of {} treebanks", treebanks.len(), TREEBANKS.len()),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Check, Option<Duration>); 9] = [
        (
            "P1",
            "figure golden labels",
            p1_figure,
            Some(Duration::from_secs(1)),
        ),
        (
            "P2",
            "2p-prop completeness",
            p2_prop_completeness,
            Some(Duration::from_secs(120)),
        ),
        (
            "P3",
            "2-planar round trip",
            p3_round_trip,
            Some(Duration::from_secs(300)),
        ),
        ("P4", "1-planar boundary", p4_one_planar_boundary, None),
        (
            "P5",
            "postprocess totality",
            p5_postprocess_totality,
            Some(Duration::from_secs(60)),
        ),
        ("P6", "rel-PoS invertibility", p6_relpos, None),
        ("P7", "plane partition validity", p7_partitions, None),
        (
            "D1",
            "coverage and statistics reproduction",
            d1_coverage_and_stats,
            None,
        ),
        ("D2", "label vocabulary reproduction", d2_vocab, None),
    ];

    let mut failed = 0;
    for (id, title, check, limit) in criteria {
        let start = Instant::now();
        let mut result = check();
        let elapsed = start.elapsed();
        if let (Verdict::Pass(summary), Some(limit)) = (&result, limit) {
            if elapsed > limit {
                result = Verdict::Fail(format!("{}; took longer than {:?}", summary, limit));
            }
        }
        let (status, detail) = match result {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
            Verdict::Skip(d) => ("SKIP", d),
        };
        println!(
            "{} {} {}: {} [{:.2}s]",
            id,
            status,
            title,
            detail,
            elapsed.as_secs_f64()
        );
    }

    if failed > 0 {
        println!("{} criterion/criteria failed", failed);
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
