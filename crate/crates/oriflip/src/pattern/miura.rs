//! Miura-ori: rows x cols parallelogram cells. Horizontal creases run in
//! straight lines; the columns zigzag, alternating rows shifted half a
//! unit. Sector angles at every interior vertex come in adjacent equal
//! pairs (alpha, 180-alpha, 180-alpha, alpha) up to rotation, carrying the
//! exact parameter alpha while the drawing itself is schematic.

use super::build::{Builder, BuildError};
use super::{CreasePattern, EdgeKind, FaceKind, Mv, MvAssignment, PatternSpec, VertexId};
use crate::exact::{rat, Point, Q3, Rat};

fn shear(r: usize) -> Rat {
    if r % 2 == 0 {
        rat(1, 2)
    } else {
        rat(0, 1)
    }
}

fn miura_point(r: usize, c: usize) -> Point {
    (
        Q3::from_rat(Rat::from_integer(c as i64) + shear(r)),
        Q3::from_int(-(r as i64)),
    )
}

/// Vertex (r, c) sits at (c + shear(r), -r) with even rows shifted right
/// by a half unit. Edge ids are `h:{r}:{c}` for the horizontal
/// (r,c)-(r,c+1) and `z:{r}:{c}` for the zigzag (r,c)-(r+1,c); faces are
/// row-major parallelograms.
pub fn build_miura(rows: usize, cols: usize, alpha: Rat) -> Result<CreasePattern, BuildError> {
    super::square::check_dims(rows, cols)?;
    check_alpha(alpha)?;
    let mut b = Builder::new(PatternSpec::Miura { rows, cols, alpha });
    let vid = |r: usize, c: usize| VertexId(r * (cols + 1) + c);
    for r in 0..=rows {
        for c in 0..=cols {
            let v = b.vertex(miura_point(r, c));
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
            b.edge(format!("z:{r}:{c}"), vid(r, c), vid(r + 1, c), EdgeKind::Zig);
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            b.face(
                vec![vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)],
                FaceKind::Parallelogram,
            );
        }
    }
    Ok(b.finish(
        move |b, v, other, kind| {
            let (p, q) = (b.pos(v), b.pos(other));
            match kind {
                EdgeKind::Horizontal => super::square::axis_angle(p, q),
                EdgeKind::Zig => zig_angle(p, q, alpha),
                _ => unreachable!(),
            }
        },
        |_, _| unreachable!("miura faces are declared"),
    ))
}

pub(crate) fn check_alpha(alpha: Rat) -> Result<(), BuildError> {
    if alpha <= rat(0, 1) || alpha >= rat(90, 1) {
        return Err(BuildError::AlphaRange(alpha));
    }
    Ok(())
}

/// Symbolic direction of a zigzag step: the schematic drawing leans the
/// zigs at a fixed half-unit shear, but the angle they stand for is alpha
/// off the vertical's mirror, i.e. alpha or 180 - alpha off east.
fn zig_angle(from: Point, to: Point, alpha: Rat) -> Rat {
    use std::cmp::Ordering::*;
    let dx = (to.0 - from.0).sign();
    let dy = (to.1 - from.1).sign();
    match (dx, dy) {
        (Greater, Greater) => alpha,
        (Less, Greater) => rat(180, 1) - alpha,
        (Less, Less) => rat(180, 1) + alpha,
        (Greater, Less) => rat(360, 1) - alpha,
        _ => panic!("zig step is axis-aligned"),
    }
}

/// The classical folded state: zig z:{r}:{c} is mountain for even c, and
/// horizontal h:{r}:{c} is mountain when r and c share parity. Each
/// interior vertex then carries three of one letter with the minority
/// letter on the near horizontal (the one flanked by the two acute
/// sectors), which is what the vertex rule asks for.
pub fn canonical_mv(pattern: &CreasePattern) -> MvAssignment {
    assert!(
        matches!(pattern.spec, PatternSpec::Miura { .. }),
        "canonical_mv(miura) on a non-miura pattern"
    );
    let mut mv = MvAssignment::uniform(pattern, Mv::Valley);
    for (i, e) in pattern.edges.iter().enumerate() {
        let mut it = e.id.split(':');
        let tag = it.next().unwrap();
        let r: usize = it.next().unwrap().parse().unwrap();
        let c: usize = it.next().unwrap().parse().unwrap();
        let mountain = match tag {
            "z" => c % 2 == 0,
            "h" => r % 2 == c % 2,
            _ => unreachable!(),
        };
        if mountain {
            mv.values[i] = Mv::Mountain;
        }
    }
    mv
}
