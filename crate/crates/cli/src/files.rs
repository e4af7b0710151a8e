use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::Context;
use twoplanar::treebank::{read_conllu, read_labels, LabelSentence, RawSentence};

fn open(path: &Path) -> anyhow::Result<Box<dyn BufRead>> {
    if path == Path::new("-") {
        return Ok(Box::new(io::stdin().lock()));
    }
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(Box::new(BufReader::new(file)))
}

pub fn create(path: Option<&PathBuf>) -> anyhow::Result<Box<dyn Write>> {
    Ok(match path {
        Some(path) => {
            let file =
                File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
            Box::new(BufWriter::new(file))
        }
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

pub fn conllu(path: &Path) -> anyhow::Result<Vec<RawSentence>> {
    read_conllu(open(path)?).with_context(|| format!("cannot read {}", path.display()))
}

pub fn labels(path: &Path) -> anyhow::Result<Vec<LabelSentence>> {
    read_labels(open(path)?).with_context(|| format!("cannot read {}", path.display()))
}
