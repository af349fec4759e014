//! Root systems of type A, D, E and their compression into small vector
//! spaces over ℤ/p, with exhaustive checks of the resulting combinatorics.

#![allow(clippy::needless_range_loop)]

pub mod compression;
pub mod e6;
pub mod e7;
pub mod error;
pub mod export;
pub mod fp;
pub mod graph;
pub mod ideals;
pub mod linalg;
pub mod render;
pub mod roots;
pub mod verify;

pub use compression::{canonical_compression, check_s, reduce_composite, CompressionMap};
pub use e6::E6Model;
pub use e7::E7Model;
pub use error::{Error, Result};
pub use fp::{FpForm, FpSpace, FpVector, GammaSet, Notation};
pub use graph::{Graph, SrgParameters};
pub use ideals::{enumerate_ideals, find_open_map, E7Symmetries, IdealLattice, OpenMap, OrderIdeal, StratumPoset};
pub use roots::{hasse_diagram, DynkinTwist, Family, Root, RootSystem, Stratum};
