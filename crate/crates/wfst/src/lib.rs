//! Weighted finite-state transducers over byte labels in the tropical
//! semiring.
//!
//! Machines are built with the combinators in [`construct`] (or by hand with
//! [`FstBuilder`]) and are immutable once built. The algorithms here are the
//! ones a rewrite grammar needs: composition, epsilon removal and trimming,
//! single shortest path, and a small binary archive format.
//!
//! ```
//! use wfst::{accept, cross, union, rewrite};
//!
//! let g = union(&cross("o", "0", 0.0), &accept("1"));
//! assert_eq!(rewrite("o", &g).unwrap(), "0");
//! ```

pub mod archive;
pub mod compose;
pub mod construct;
mod error;
pub mod fst;
pub mod optimize;
pub mod rewrite;
pub mod shortest_path;
mod weight;

pub use archive::{load_archive, read_archive, save_archive, write_archive, Archive};
pub use compose::compose;
pub use construct::{
    accept, accept_bytes, byte_class, closure, concat, concat_all, cross, delete_str, epsilon,
    insert_str, optional, project, read_tsv, string_map, string_map_file, union, union_all,
    Closure, ProjectSide,
};
pub use error::{FstError, Result};
pub use fst::{Arc, Fst, FstBuilder, Label, StateId};
pub use optimize::{arc_sort, connect, optimize, rm_epsilon};
pub use rewrite::{rewrite, Rewriter};
pub use shortest_path::{distance_to_final, read_path, shortest_path, PathInfo};
pub use weight::TropicalWeight;
