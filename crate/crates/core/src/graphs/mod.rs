//! Graphs: the labeled graph type, extremal constructions, graph6 and
//! canonical forms.

mod canon;
mod construct;
mod export;
mod graph;
mod graph6;
mod recipe;

use thiserror::Error;

pub use canon::{
    canonical_form, canonical_form_with_limit, canonical_labeling, CanonicalForm,
    DEFAULT_CANON_LIMIT, MAX_CANON_LIMIT,
};
pub(crate) use canon::{canonize_masks, from_masks, to_masks};
pub use construct::{
    construct_all_terms, construct_con_path_extremal, construct_forest_extremal,
    construct_path_extremal, term_recipes, Construction, ConstructionSet,
};
pub use export::{to_dot, to_json};
pub(crate) use graph::bits;
pub use graph::SimpleGraph;
pub use graph6::{decode_graph6, encode_graph6, encode_graph6_bytes};
pub use recipe::{path_extremal_recipes, ExtremalDescription};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u},{v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge ({0},{1}) listed twice")]
    DuplicateEdge(usize, usize),
    #[error("graph6: byte {byte:#04x} at offset {pos} is outside 63..=126")]
    MalformedByte { byte: u8, pos: usize },
    #[error("graph6: truncated input")]
    Truncated,
    #[error("graph6: order {n} needs {expected} bytes, found {found}")]
    SizeMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph on {n} vertices exceeds the canonical-form limit of {limit}")]
    Capacity { n: usize, limit: usize },
}
