//! Square grid: rows x cols unit cells, creases on all grid lines.

use super::build::{Builder, BuildError};
use super::{CreasePattern, EdgeKind, FaceKind, Mv, MvAssignment, PatternSpec, VertexId};
use crate::exact::{rat, Point, Q3, Rat};

fn grid_point(r: usize, c: usize) -> Point {
    (Q3::from_int(c as i64), Q3::from_int(-(r as i64)))
}

/// Axis-aligned grid of unit squares. Vertex (r, c) sits at (c, -r);
/// edge ids are `h:{r}:{c}` for (r,c)-(r,c+1) and `v:{r}:{c}` for
/// (r,c)-(r+1,c); faces are row-major cells.
pub fn build_square_grid(rows: usize, cols: usize) -> Result<CreasePattern, BuildError> {
    check_dims(rows, cols)?;
    let mut b = Builder::new(PatternSpec::Square { rows, cols });
    let vid = |r: usize, c: usize| VertexId(r * (cols + 1) + c);
    for r in 0..=rows {
        for c in 0..=cols {
            let v = b.vertex(grid_point(r, c));
            assert_eq!(v, vid(r, c));
        }
    }
    for r in 0..=rows {
        for c in 0..cols {
            b.edge(format!("h:{r}:{c}"), vid(r, c), vid(r, c + 1), EdgeKind::Horizontal);
        }
    }
    for r in 0..rows {
        for c in 0..=cols {
            b.edge(format!("v:{r}:{c}"), vid(r, c), vid(r + 1, c), EdgeKind::Vertical);
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            b.face(
                vec![vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)],
                FaceKind::Cell,
            );
        }
    }
    Ok(b.finish(
        |b, v, other, _| axis_angle(b.pos(v), b.pos(other)),
        |_, _| unreachable!("square faces are declared"),
    ))
}

pub(crate) fn check_dims(rows: usize, cols: usize) -> Result<(), BuildError> {
    if rows < 1 || cols < 1 {
        return Err(BuildError::TooSmall { min: 1, got: rows.min(cols) });
    }
    if rows > 1000 || cols > 1000 {
        return Err(BuildError::TooLarge(format!("{rows}x{cols}")));
    }
    Ok(())
}

/// Direction of an axis-aligned step, in degrees.
pub(crate) fn axis_angle(from: Point, to: Point) -> Rat {
    let dx = (to.0 - from.0).sign();
    let dy = (to.1 - from.1).sign();
    use std::cmp::Ordering::*;
    match (dx, dy) {
        (Greater, Equal) => rat(0, 1),
        (Equal, Greater) => rat(90, 1),
        (Less, Equal) => rat(180, 1),
        (Equal, Less) => rat(270, 1),
        _ => panic!("edge is not axis-aligned"),
    }
}

/// Alternating rows of mountains: horizontal crease h:{r}:{c} is mountain
/// for even r, valley for odd; vertical creases the other way around. Every
/// interior vertex sees three of one letter and one of the other.
pub fn canonical_mv(pattern: &CreasePattern) -> MvAssignment {
    assert!(
        matches!(pattern.spec, PatternSpec::Square { .. }),
        "canonical_mv(square) on a non-square pattern"
    );
    let mut mv = MvAssignment::uniform(pattern, Mv::Valley);
    for (i, e) in pattern.edges.iter().enumerate() {
        let r: usize = e.id.split(':').nth(1).unwrap().parse().unwrap();
        let mountain = match e.kind {
            EdgeKind::Horizontal => r % 2 == 0,
            EdgeKind::Vertical => r % 2 == 1,
            _ => unreachable!(),
        };
        if mountain {
            mv.values[i] = Mv::Mountain;
        }
    }
    mv
}
