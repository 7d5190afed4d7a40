//! Planar regular and biregular graphs of prescribed girth: constructions,
//! bounds, certification and exhaustive search.

pub mod error;
pub mod graph;
pub mod planarity;
pub mod bounds;
pub mod families;
pub mod search;
pub mod verify;
