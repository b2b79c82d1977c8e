//! Configuration graphs of primitive aperiodic substitutions, and the Zorro
//! algorithm that builds a substitution realizing any undecided bipartite
//! multigraph.
//!
//! The modules follow the pipeline:
//!
//! * [`words`]: alphabets, words, substitutions, languages, primitivity.
//! * [`letter_graphs`]: ll/rl/ls/rs graphs, segregating numbers, subfixing powers.
//! * [`generators`]: generators, extensions, basic generators, completions.
//! * [`config_graph`]: bipartite multigraphs, configuration graphs, isomorphism.
//! * [`zorro`]: case detection, the four construction steps, round-trip verification.
//! * [`format`] and [`cli`]: file formats, DOT/JSON emission, the command line.

use std::fmt;

use serde::Serialize;

pub mod cli;
pub mod config_graph;
pub mod error;
pub mod format;
pub mod generators;
pub mod letter_graphs;
pub mod words;
pub mod zorro;

pub use error::{Error, Result};
pub use words::{Alphabet, LanguageSlice, Letter, Primitivity, Substitution, Word};

/// Left or right, for letter graphs, segregating numbers and graph vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }

    pub fn opposite(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
