//! Label files: `id<TAB>form<TAB>task1<TAB>...`, one token per line and a
//! blank line after each sentence. The empty bracket label is `NONE`.

use std::io::{BufRead, Lines, Write};

use crate::error::FormatError;

#[derive(Clone, Debug, Eq, PartialEq)]
pub struct LabelRow {
    pub id: usize,
    pub form: String,
    pub tasks: Vec<String>,
}

impl LabelRow {
    pub fn new(id: usize, form: impl Into<String>, tasks: Vec<String>) -> Self {
        LabelRow {
            id,
            form: form.into(),
            tasks,
        }
    }
}

#[derive(Clone, Debug, Default, Eq, PartialEq)]
pub struct LabelSentence {
    pub rows: Vec<LabelRow>,
}

impl LabelSentence {
    /// Pair forms with per-token task labels, numbering tokens from 1.
    pub fn from_tasks(forms: &[String], tasks: Vec<Vec<String>>) -> Self {
        assert_eq!(forms.len(), tasks.len());
        LabelSentence {
            rows: forms
                .iter()
                .zip(tasks)
                .enumerate()
                .map(|(i, (form, tasks))| LabelRow::new(i + 1, form.clone(), tasks))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn forms(&self) -> Vec<String> {
        self.rows.iter().map(|r| r.form.clone()).collect()
    }

    /// Number of task columns, if the sentence has any rows.
    pub fn task_count(&self) -> Option<usize> {
        self.rows.first().map(|r| r.tasks.len())
    }

    /// Per-token task labels.
    pub fn tasks(&self) -> Vec<Vec<String>> {
        self.rows.iter().map(|r| r.tasks.clone()).collect()
    }

    /// Labels of one task column.
    pub fn task(&self, task: usize) -> impl Iterator<Item = &str> + '_ {
        self.rows.iter().map(move |r| r.tasks[task].as_str())
    }
}

/// Streaming label-file reader. Every row of a file must have the same
/// number of columns.
pub struct LabelReader<R> {
    lines: Lines<R>,
    line_no: usize,
    columns: Option<usize>,
}

impl<R: BufRead> LabelReader<R> {
    pub fn new(reader: R) -> Self {
        LabelReader {
            lines: reader.lines(),
            line_no: 0,
            columns: None,
        }
    }

    fn read_sentence(&mut self) -> Result<Option<LabelSentence>, FormatError> {
        let mut sentence = LabelSentence::default();
        for line in self.lines.by_ref() {
            let line = line?;
            self.line_no += 1;
            let line = line.trim_end_matches(['\r', '\n']);
            if line.trim().is_empty() {
                if sentence.rows.is_empty() {
                    continue;
                }
                break;
            }

            let fields: Vec<&str> = line.split('\t').collect();
            if fields.len() < 3 {
                return Err(FormatError::malformed(
                    self.line_no,
                    format!("expected at least 3 columns, found {}", fields.len()),
                ));
            }
            match self.columns {
                None => self.columns = Some(fields.len()),
                Some(c) if c != fields.len() => {
                    return Err(FormatError::malformed(
                        self.line_no,
                        format!("expected {} columns, found {}", c, fields.len()),
                    ))
                }
                Some(_) => {}
            }
            let id: usize = fields[0].parse().map_err(|_| {
                FormatError::malformed(self.line_no, format!("invalid id {:?}", fields[0]))
            })?;
            if id != sentence.rows.len() + 1 {
                return Err(FormatError::malformed(
                    self.line_no,
                    format!("expected id {}, found {}", sentence.rows.len() + 1, id),
                ));
            }
            sentence.rows.push(LabelRow::new(
                id,
                fields[1],
                fields[2..].iter().map(|s| s.to_string()).collect(),
            ));
        }

        Ok((!sentence.rows.is_empty()).then_some(sentence))
    }
}

impl<R: BufRead> Iterator for LabelReader<R> {
    type Item = Result<LabelSentence, FormatError>;

    fn next(&mut self) -> Option<Self::Item> {
        self.read_sentence().transpose()
    }
}

pub fn read_labels<R: BufRead>(reader: R) -> Result<Vec<LabelSentence>, FormatError> {
    LabelReader::new(reader).collect()
}

pub fn write_labels<'a, W, I>(mut writer: W, sentences: I) -> Result<(), FormatError>
where
    W: Write,
    I: IntoIterator<Item = &'a LabelSentence>,
{
    for sentence in sentences {
        for row in &sentence.rows {
            write!(writer, "{}\t{}", row.id, row.form)?;
            for task in &row.tasks {
                write!(writer, "\t{}", task)?;
            }
            writeln!(writer)?;
        }
        writeln!(writer)?;
    }
    writer.flush()?;
    Ok(())
}
