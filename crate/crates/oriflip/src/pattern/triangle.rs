//! Triangle lattice regions: unit equilateral triangles in rhombic cells.
//!
//! Lattice vertex (i, j) sits at x = (j/2)*sqrt(3), y = -(i + j/2), so i
//! counts rows downward and j counts rightward-descending diagonals. Cell
//! (i, j) splits into an upward triangle {(i,j), (i+1,j), (i,j+1)} and a
//! downward one {(i+1,j), (i,j+1), (i+1,j+1)}.
//!
//! Edge classes and ids: `v:{i}:{j}` vertical (i,j)-(i+1,j), `m:{i}:{j}`
//! at -30 degrees (i,j)-(i,j+1), `p:{i}:{j}` at +30 degrees
//! (i+1,j)-(i,j+1).

use super::build::{Builder, BuildError};
use super::{CreasePattern, EdgeKind, FaceKind, Mv, MvAssignment, PatternSpec, VertexId};
use crate::exact::{rat, Point, Q3, Rat};
use std::collections::{BTreeMap, BTreeSet};

pub(crate) fn lattice_point(i: i64, j: i64) -> Point {
    (
        Q3::new(Rat::new(0, 1), Rat::new(j, 2)),
        Q3::from_rat(Rat::new(-(2 * i + j), 2)),
    )
}

/// A face half: cell (i, j), upper or lower triangle.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
struct Half {
    i: usize,
    j: usize,
    lower: bool,
}

impl Half {
    fn verts(self) -> [(usize, usize); 3] {
        let Half { i, j, lower } = self;
        if lower {
            [(i + 1, j), (i + 1, j + 1), (i, j + 1)]
        } else {
            [(i, j), (i + 1, j), (i, j + 1)]
        }
    }

    /// (class, i, j) edge keys; class 0 = vertical, 1 = minus30, 2 = plus30.
    fn edge_keys(self) -> [(u8, usize, usize); 3] {
        let Half { i, j, lower } = self;
        if lower {
            [(0, i, j + 1), (1, i + 1, j), (2, i, j)]
        } else {
            [(0, i, j), (1, i, j), (2, i, j)]
        }
    }
}

fn edge_ends(class: u8, i: usize, j: usize) -> ((usize, usize), (usize, usize)) {
    match class {
        0 => ((i, j), (i + 1, j)),
        1 => ((i, j), (i, j + 1)),
        2 => ((i + 1, j), (i, j + 1)),
        _ => unreachable!(),
    }
}

fn edge_kind(class: u8) -> EdgeKind {
    match class {
        0 => EdgeKind::Vertical,
        1 => EdgeKind::Minus30,
        2 => EdgeKind::Plus30,
        _ => unreachable!(),
    }
}

fn edge_tag(class: u8) -> char {
    match class {
        0 => 'v',
        1 => 'm',
        2 => 'p',
        _ => unreachable!(),
    }
}

fn build_from_halves(spec: PatternSpec, halves: Vec<Half>) -> CreasePattern {
    assert!(!halves.is_empty());
    let mut b = Builder::new(spec);

    let mut vids: BTreeMap<(usize, usize), VertexId> = BTreeMap::new();
    let mut edge_set: BTreeSet<(u8, usize, usize)> = BTreeSet::new();
    for h in &halves {
        for (i, j) in h.verts() {
            vids.entry((i, j))
                .or_insert_with(|| b.vertex(lattice_point(i as i64, j as i64)));
        }
        edge_set.extend(h.edge_keys());
    }
    for &(class, i, j) in &edge_set {
        let (a, z) = edge_ends(class, i, j);
        b.edge(
            format!("{}:{i}:{j}", edge_tag(class)),
            vids[&a],
            vids[&z],
            edge_kind(class),
        );
    }
    for h in &halves {
        let vs: Vec<VertexId> = h.verts().iter().map(|v| vids[v]).collect();
        let kind = if h.lower { FaceKind::DownTriangle } else { FaceKind::UpTriangle };
        b.face(vs, kind);
    }
    b.finish(
        |b, v, other, _| lattice_angle(b.pos(v), b.pos(other)),
        |_, _| unreachable!("triangle faces are declared"),
    )
}

/// Exact direction of a lattice step: one of the six 30-degree-off-axis
/// or vertical directions.
fn lattice_angle(from: Point, to: Point) -> Rat {
    use std::cmp::Ordering::*;
    let dx = (to.0 - from.0).sign();
    let dy = (to.1 - from.1).sign();
    match (dx, dy) {
        (Equal, Greater) => rat(90, 1),
        (Equal, Less) => rat(270, 1),
        (Greater, Greater) => rat(30, 1),
        (Less, Greater) => rat(150, 1),
        (Less, Less) => rat(210, 1),
        (Greater, Less) => rat(330, 1),
        _ => panic!("degenerate lattice step"),
    }
}

/// Full rhombic region: rows x cols cells, each split in two, 2*rows*cols
/// faces row-major with the upward triangle of a cell before the downward.
pub fn build_triangle_region(rows: usize, cols: usize) -> Result<CreasePattern, BuildError> {
    super::square::check_dims(rows, cols)?;
    let mut halves = Vec::with_capacity(2 * rows * cols);
    for i in 0..rows {
        for j in 0..cols {
            halves.push(Half { i, j, lower: false });
            halves.push(Half { i, j, lower: true });
        }
    }
    Ok(build_from_halves(PatternSpec::Triangle { rows, cols }, halves))
}

/// Hexagonal star region: all faces having a vertex within lattice
/// distance radius - 1 of a center vertex. Radius 1 is the plain hexagon
/// of six triangles around one interior vertex.
pub fn build_hex_star(radius: usize) -> Result<CreasePattern, BuildError> {
    if radius < 1 {
        return Err(BuildError::TooSmall { min: 1, got: radius });
    }
    if radius > 50 {
        return Err(BuildError::TooLarge(format!("radius {radius}")));
    }
    let n = 2 * radius;
    let center = (radius as i64, radius as i64);
    let mut halves = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for lower in [false, true] {
                let h = Half { i, j, lower };
                let keep = h
                    .verts()
                    .iter()
                    .any(|&(vi, vj)| {
                        hex_distance((vi as i64, vj as i64), center) + 1 <= radius as i64
                    });
                if keep {
                    halves.push(h);
                }
            }
        }
    }
    Ok(build_from_halves(PatternSpec::HexStar { radius }, halves))
}

/// Graph distance between lattice vertices: axial hex metric, since the
/// six incident edge directions step by (+-1,0), (0,+-1), (+1,-1), (-1,+1).
pub(crate) fn hex_distance(a: (i64, i64), b: (i64, i64)) -> i64 {
    let di = a.0 - b.0;
    let dj = a.1 - b.1;
    (di.abs() + dj.abs() + (di + dj).abs()) / 2
}

/// Mountains exactly on the -30 degree creases: every interior vertex
/// sees two mountains against four valleys.
pub fn canonical_mv(pattern: &CreasePattern) -> MvAssignment {
    assert!(
        pattern.family() == super::Family::TriangleRegion,
        "canonical_mv(triangle) on a non-triangle pattern"
    );
    let mut mv = MvAssignment::uniform(pattern, Mv::Valley);
    for (i, e) in pattern.edges.iter().enumerate() {
        if e.kind == EdgeKind::Minus30 {
            mv.values[i] = Mv::Mountain;
        }
    }
    mv
}
