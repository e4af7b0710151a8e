use std::fmt;
use std::io::{BufRead, Lines, Write};

use crate::error::{FormatError, TreeError};
use crate::tree::DepTree;

const EMPTY_FIELD: &str = "_";

/// A basic token line of a CoNLL-U file.
#[derive(Clone, Debug, Eq, PartialEq)]
pub struct Token {
    pub id: usize,
    pub form: String,
    pub lemma: Option<String>,
    pub upos: Option<String>,
    pub xpos: Option<String>,
    pub feats: Option<String>,
    pub head: usize,
    pub deprel: String,
    pub deps: Option<String>,
    pub misc: Option<String>,
}

impl Token {
    pub fn new(id: usize, form: impl Into<String>, head: usize, deprel: impl Into<String>) -> Self {
        Token {
            id,
            form: form.into(),
            lemma: None,
            upos: None,
            xpos: None,
            feats: None,
            head,
            deprel: deprel.into(),
            deps: None,
            misc: None,
        }
    }

    pub fn with_upos(mut self, upos: impl Into<String>) -> Self {
        self.upos = Some(upos.into());
        self
    }
}

fn opt(field: &Option<String>) -> &str {
    field.as_deref().unwrap_or(EMPTY_FIELD)
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            self.id,
            self.form,
            opt(&self.lemma),
            opt(&self.upos),
            opt(&self.xpos),
            opt(&self.feats),
            self.head,
            self.deprel,
            opt(&self.deps),
            opt(&self.misc)
        )
    }
}

/// One sentence of a CoNLL-U file.
///
/// Multiword-token ranges and empty nodes are kept verbatim in
/// `ignored_lines`, each with the number of basic tokens preceding it.
#[derive(Clone, Debug, Default, Eq, PartialEq)]
pub struct RawSentence {
    pub comments: Vec<String>,
    pub tokens: Vec<Token>,
    pub ignored_lines: Vec<(usize, String)>,
}

impl RawSentence {
    pub fn from_tokens(tokens: Vec<Token>) -> Self {
        RawSentence {
            tokens,
            ..Default::default()
        }
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn forms(&self) -> Vec<String> {
        self.tokens.iter().map(|t| t.form.clone()).collect()
    }

    pub fn upos(&self) -> Vec<Option<String>> {
        self.tokens.iter().map(|t| t.upos.clone()).collect()
    }

    pub fn heads(&self) -> Vec<usize> {
        self.tokens.iter().map(|t| t.head).collect()
    }

    pub fn deprels(&self) -> Vec<String> {
        self.tokens.iter().map(|t| t.deprel.clone()).collect()
    }

    /// The dependency tree of the sentence.
    pub fn tree(&self) -> Result<DepTree, TreeError> {
        DepTree::new(self.heads(), self.deprels())
    }

    /// Overwrite heads and relations with those of `tree`.
    pub fn set_tree(&mut self, tree: &DepTree) {
        assert_eq!(tree.len(), self.len());
        for (token, (arc, deprel)) in self.tokens.iter_mut().zip(tree.labeled_arcs()) {
            token.head = arc.head;
            token.deprel = deprel.to_owned();
        }
    }
}

impl fmt::Display for RawSentence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for comment in &self.comments {
            writeln!(f, "{}", comment)?;
        }
        let mut ignored = self.ignored_lines.iter().peekable();
        for i in 0..=self.tokens.len() {
            while let Some((_, line)) = ignored.next_if(|(before, _)| *before == i) {
                writeln!(f, "{}", line)?;
            }
            if let Some(token) = self.tokens.get(i) {
                writeln!(f, "{}", token)?;
            }
        }
        Ok(())
    }
}

/// Streaming CoNLL-U reader.
pub struct ConlluReader<R> {
    lines: Lines<R>,
    line_no: usize,
}

impl<R: BufRead> ConlluReader<R> {
    pub fn new(reader: R) -> Self {
        ConlluReader {
            lines: reader.lines(),
            line_no: 0,
        }
    }

    fn read_sentence(&mut self) -> Result<Option<RawSentence>, FormatError> {
        let mut sentence = RawSentence::default();
        let mut seen_any = false;
        // line numbers of the token lines, for head range errors
        let mut token_lines: Vec<usize> = Vec::new();

        for line in self.lines.by_ref() {
            let line = line?;
            self.line_no += 1;
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() {
                if seen_any {
                    break;
                }
                continue;
            }
            seen_any = true;
            if line.starts_with('#') {
                sentence.comments.push(line.to_owned());
                continue;
            }

            let id = line.split('\t').next().unwrap_or("");
            if id.contains('-') || id.contains('.') {
                sentence
                    .ignored_lines
                    .push((sentence.tokens.len(), line.to_owned()));
                continue;
            }

            let token = parse_token(line, self.line_no)?;
            if token.id != sentence.tokens.len() + 1 {
                return Err(FormatError::malformed(
                    self.line_no,
                    format!(
                        "expected token id {}, found {}",
                        sentence.tokens.len() + 1,
                        token.id
                    ),
                ));
            }
            token_lines.push(self.line_no);
            sentence.tokens.push(token);
        }

        if !seen_any {
            return Ok(None);
        }

        let n = sentence.tokens.len();
        for (token, line_no) in sentence.tokens.iter().zip(token_lines) {
            if token.head > n {
                return Err(FormatError::malformed(
                    line_no,
                    format!("head {} out of range for {} tokens", token.head, n),
                ));
            }
            if token.head == token.id {
                return Err(FormatError::malformed(line_no, "token is its own head"));
            }
        }
        Ok(Some(sentence))
    }
}

impl<R: BufRead> Iterator for ConlluReader<R> {
    type Item = Result<RawSentence, FormatError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.read_sentence().transpose()
    }
}

fn parse_token(line: &str, line_no: usize) -> Result<Token, FormatError> {
    let fields: Vec<&str> = line.split('\t').collect();
    if fields.len() != 10 {
        return Err(FormatError::malformed(
            line_no,
            format!("expected 10 columns, found {}", fields.len()),
        ));
    }
    let id = fields[0]
        .parse()
        .ok()
        .filter(|&id: &usize| id > 0)
        .ok_or_else(|| FormatError::malformed(line_no, format!("invalid ID {:?}", fields[0])))?;
    let head = fields[6]
        .parse()
        .map_err(|_| FormatError::malformed(line_no, format!("invalid HEAD {:?}", fields[6])))?;
    let optional = |s: &str| (s != EMPTY_FIELD).then(|| s.to_owned());

    Ok(Token {
        id,
        form: fields[1].to_owned(),
        lemma: optional(fields[2]),
        upos: optional(fields[3]),
        xpos: optional(fields[4]),
        feats: optional(fields[5]),
        head,
        deprel: fields[7].to_owned(),
        deps: optional(fields[8]),
        misc: optional(fields[9]),
    })
}

/// Read every sentence of a CoNLL-U stream.
pub fn read_conllu<R: BufRead>(reader: R) -> Result<Vec<RawSentence>, FormatError> {
    ConlluReader::new(reader).collect()
}

/// Write sentences, each followed by a blank line.
pub fn write_conllu<'a, W, I>(mut writer: W, sentences: I) -> Result<(), FormatError>
where
    W: Write,
    I: IntoIterator<Item = &'a RawSentence>,
{
    for sentence in sentences {
        writeln!(writer, "{}", sentence)?;
    }
    writer.flush()?;
    Ok(())
}
