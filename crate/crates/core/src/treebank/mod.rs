//! CoNLL-U treebanks and label files.

mod conllu;
pub use self::conllu::*;

mod labels;
pub use self::labels::*;
