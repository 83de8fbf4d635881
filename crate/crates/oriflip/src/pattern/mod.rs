//! Crease-pattern data model and the five tessellation generators.
//!
//! A pattern is a planar straight-line subdivision of a paper polygon.
//! Edges include the paper-boundary segments; an edge bordering two faces
//! is an interior edge (a crease between two faces), an edge bordering one
//! face lies on the paper boundary. Mountain-valley assignments are total
//! over all edges; only edges incident to an interior vertex are
//! constrained by validity, the rest are free bits.

mod build;
pub mod huffman;
pub mod miura;
pub mod square;
pub mod triangle;
pub mod twist;

use crate::exact::{Point, Q3, Rat};
use std::fmt;

pub use build::BuildError;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct EdgeId(pub usize);

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct FaceId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for EdgeId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FaceId {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Mountain (+1) or valley (-1).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Mv {
    Mountain,
    Valley,
}

impl Mv {
    pub fn sign(self) -> i32 {
        match self {
            Mv::Mountain => 1,
            Mv::Valley => -1,
        }
    }

    pub fn flipped(self) -> Mv {
        match self {
            Mv::Mountain => Mv::Valley,
            Mv::Valley => Mv::Mountain,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Mv::Mountain => 'M',
            Mv::Valley => 'V',
        }
    }

    pub fn from_letter(c: char) -> Option<Mv> {
        match c {
            'M' => Some(Mv::Mountain),
            'V' => Some(Mv::Valley),
            _ => None,
        }
    }
}

/// Total MV assignment, dense over the edges of one pattern.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MvAssignment {
    pub values: Vec<Mv>,
}

impl MvAssignment {
    pub fn uniform(pattern: &CreasePattern, mv: Mv) -> Self {
        MvAssignment { values: vec![mv; pattern.edges.len()] }
    }

    pub fn get(&self, e: EdgeId) -> Mv {
        self.values[e.0]
    }

    pub fn set(&mut self, e: EdgeId, mv: Mv) {
        self.values[e.0] = mv;
    }

    pub fn toggle(&mut self, e: EdgeId) {
        self.values[e.0] = self.values[e.0].flipped();
    }

    /// Equality restricted to interior (two-faced) edges; boundary edges
    /// are free bits that flips drag along.
    pub fn eq_on_interior(&self, other: &MvAssignment, pattern: &CreasePattern) -> bool {
        pattern
            .interior_edges()
            .all(|e| self.get(e) == other.get(e))
    }
}

/// Per-family direction class of an edge.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum EdgeKind {
    Horizontal,
    Vertical,
    /// Miura zigzag crease.
    Zig,
    /// Triangle-lattice -30 degree crease.
    Minus30,
    /// Triangle-lattice +30 degree crease.
    Plus30,
    LongHorizontal,
    LongVertical,
    ShortHorizontal,
    ShortVertical,
    /// Side of a central twist square.
    Side,
    /// Diagonal pleat ray of a square twist.
    Ray,
    /// Paper-boundary segment of a square twist.
    Border,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum FaceKind {
    Cell,
    Parallelogram,
    UpTriangle,
    DownTriangle,
    Kite,
    TwistSquare,
    TwistPleat,
    TwistGap,
    TwistMargin,
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Family {
    SquareGrid,
    Miura,
    TriangleRegion,
    HuffmanGrid,
    SquareTwist,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::SquareGrid => "square",
            Family::Miura => "miura",
            Family::TriangleRegion => "triangle",
            Family::HuffmanGrid => "huffman",
            Family::SquareTwist => "twist",
        }
    }
}

/// Generator descriptor; regenerating from it is bit-reproducible.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PatternSpec {
    Square { rows: usize, cols: usize },
    Miura { rows: usize, cols: usize, alpha: Rat },
    Triangle { rows: usize, cols: usize },
    /// All triangle-lattice faces within the given ring radius of a
    /// center vertex; radius 1 is the single-vertex hexagon.
    HexStar { radius: usize },
    Huffman { rows: usize, cols: usize, alpha: Rat },
    Twist { rows: usize, cols: usize },
}

impl PatternSpec {
    pub fn family(&self) -> Family {
        match self {
            PatternSpec::Square { .. } => Family::SquareGrid,
            PatternSpec::Miura { .. } => Family::Miura,
            PatternSpec::Triangle { .. } | PatternSpec::HexStar { .. } => Family::TriangleRegion,
            PatternSpec::Huffman { .. } => Family::HuffmanGrid,
            PatternSpec::Twist { .. } => Family::SquareTwist,
        }
    }

    pub fn build(&self) -> Result<CreasePattern, BuildError> {
        match *self {
            PatternSpec::Square { rows, cols } => square::build_square_grid(rows, cols),
            PatternSpec::Miura { rows, cols, alpha } => miura::build_miura(rows, cols, alpha),
            PatternSpec::Triangle { rows, cols } => triangle::build_triangle_region(rows, cols),
            PatternSpec::HexStar { radius } => triangle::build_hex_star(radius),
            PatternSpec::Huffman { rows, cols, alpha } => huffman::build_huffman(rows, cols, alpha),
            PatternSpec::Twist { rows, cols } => twist::build_square_twist(rows, cols),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Vertex {
    pub pos: Point,
    pub interior: bool,
}

#[derive(Clone, Debug)]
pub struct Edge {
    /// Canonical string id, stable across regeneration.
    pub id: String,
    pub ends: (VertexId, VertexId),
    pub kind: EdgeKind,
    /// Incident faces; the second is None exactly on paper-boundary edges.
    pub faces: (FaceId, Option<FaceId>),
}

#[derive(Clone, Debug)]
pub struct Face {
    /// Counterclockwise simple cycle.
    pub verts: Vec<VertexId>,
    /// edges[i] joins verts[i] and verts[i+1] (cyclic).
    pub edges: Vec<EdgeId>,
    pub kind: FaceKind,
}

/// Cyclic counterclockwise fan of creases around an interior vertex.
#[derive(Clone, Debug)]
pub struct Star {
    /// Incident edges, counterclockwise starting from the smallest angle
    /// measured from east.
    pub edges: Vec<EdgeId>,
    /// sectors[i] is the angle in degrees between edges[i] and edges[i+1]
    /// (cyclic). Exact rationals; they sum to 360.
    pub sectors: Vec<Rat>,
}

impl Star {
    pub fn degree(&self) -> usize {
        self.edges.len()
    }

    /// Position of e in the fan.
    pub fn position(&self, e: EdgeId) -> Option<usize> {
        self.edges.iter().position(|&x| x == e)
    }
}

#[derive(Clone, Debug)]
pub struct DualEdge {
    pub faces: (FaceId, FaceId),
    /// The primal crease the dual edge crosses.
    pub over: EdgeId,
}

/// Internal dual: one node per face, one edge per interior primal edge.
#[derive(Clone, Debug)]
pub struct DualGraph {
    pub face_count: usize,
    pub edges: Vec<DualEdge>,
}

impl DualGraph {
    pub fn adjacency(&self) -> Vec<Vec<(FaceId, EdgeId)>> {
        let mut adj = vec![Vec::new(); self.face_count];
        for de in &self.edges {
            adj[de.faces.0 .0].push((de.faces.1, de.over));
            adj[de.faces.1 .0].push((de.faces.0, de.over));
        }
        adj
    }
}

#[derive(Clone, Debug)]
pub struct CreasePattern {
    pub spec: PatternSpec,
    pub vertices: Vec<Vertex>,
    pub edges: Vec<Edge>,
    pub faces: Vec<Face>,
    /// stars[v] is Some exactly for interior vertices.
    pub stars: Vec<Option<Star>>,
    /// Paper boundary, one counterclockwise cycle.
    pub boundary: Vec<VertexId>,
}

impl CreasePattern {
    pub fn family(&self) -> Family {
        self.spec.family()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn pos(&self, v: VertexId) -> Point {
        self.vertices[v.0].pos
    }

    pub fn interior_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| v.interior)
            .map(|(i, _)| VertexId(i))
    }

    pub fn is_border_edge(&self, e: EdgeId) -> bool {
        self.edges[e.0].faces.1.is_none()
    }

    /// Edges bordering two faces.
    pub fn interior_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.faces.1.is_some())
            .map(|(i, _)| EdgeId(i))
    }

    /// Edges incident to at least one interior vertex; these are the edges
    /// vertex validity can see.
    pub fn constrained_edges(&self) -> Vec<EdgeId> {
        (0..self.edges.len())
            .map(EdgeId)
            .filter(|&e| {
                let (a, b) = self.edges[e.0].ends;
                self.vertices[a.0].interior || self.vertices[b.0].interior
            })
            .collect()
    }

    pub fn star(&self, v: VertexId) -> Option<&Star> {
        self.stars[v.0].as_ref()
    }

    /// Counterclockwise fan of (edge, following sector angle) at an
    /// interior vertex.
    pub fn vertex_star(&self, v: VertexId) -> Result<Vec<(EdgeId, Rat)>, String> {
        match self.star(v) {
            Some(s) => Ok(s
                .edges
                .iter()
                .zip(s.sectors.iter())
                .map(|(&e, &a)| (e, a))
                .collect()),
            None => Err(format!("vertex {v} is not interior")),
        }
    }

    pub fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e.0].ends;
        if a == v {
            b
        } else {
            debug_assert_eq!(b, v);
            a
        }
    }

    pub fn edge_by_id(&self, id: &str) -> Option<EdgeId> {
        // linear scan is fine at desk scale; callers needing bulk lookup
        // build their own map
        self.edges.iter().position(|e| e.id == id).map(EdgeId)
    }

    pub fn dual_graph(&self) -> DualGraph {
        let mut edges = Vec::new();
        for (i, e) in self.edges.iter().enumerate() {
            if let (f, Some(g)) = e.faces {
                edges.push(DualEdge { faces: (f, g), over: EdgeId(i) });
            }
        }
        DualGraph { face_count: self.faces.len(), edges }
    }

    /// Exact centroid of a face (vertex average).
    pub fn face_centroid(&self, f: FaceId) -> Point {
        let face = &self.faces[f.0];
        let mut x = Q3::zero();
        let mut y = Q3::zero();
        for &v in &face.verts {
            x = x + self.pos(v).0;
            y = y + self.pos(v).1;
        }
        let k = Q3::from_rat(Rat::new(1, face.verts.len() as i64));
        (x * k, y * k)
    }
}
