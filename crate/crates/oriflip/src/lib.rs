//! Flat-origami crease patterns of five tessellation families, local
//! flat-foldability of mountain-valley assignments, and face-flip
//! reconfiguration: minimum flip sets for square grids, minimum flip
//! sequences for Miura-ori via height functions, a canonical-configuration
//! sweep for triangle-lattice regions, and a brute-force flip-graph oracle.

pub mod exact;
pub mod pattern;
pub mod validity;
pub mod flip;
pub mod flipgraph;
pub mod square_minflip;
pub mod miura_minflip;
pub mod triangle_reconfig;
pub mod document;
pub mod render;

pub use pattern::{CreasePattern, EdgeId, FaceId, Family, Mv, MvAssignment, VertexId};
