//! Dependency parsing as sequence labeling with 2-planar bracketing
//! encodings.
//!
//! A [`DepTree`] is split into two planes with no crossing arcs inside
//! either plane ([`plane`]), each plane is written as per-token bracket
//! labels ([`bracket`]), and decoding plus [`postprocess`]ing turns any label
//! sequence back into a well-formed tree. The relative PoS-based encoding in
//! [`relpos`] serves as a baseline, and [`metrics`] holds the corpus reports.

pub mod bracket;
pub mod encoding;
pub mod error;
pub mod metrics;
pub mod plane;
pub mod postprocess;
pub mod relpos;
pub mod tree;
pub mod treebank;

pub use crate::encoding::{Codec, Decoded, Diagnostics, Encoded, Encoding};
pub use crate::error::{CodecError, FormatError, LabelError, MetricsError, TreeError};
pub use crate::plane::{assign, Plane, PlanePartition, Strategy};
pub use crate::tree::{validate_tree, Arc, DepTree};
