//! Huffman's stretched-grid tessellation: a rows x cols grid of kites in
//! which every vertex carries one right-angle pair and either an alpha /
//! (180 - alpha) pair toward the northeast (even vertices) or its mirror
//! toward the southwest (odd vertices). The drawing is a schematic unit
//! grid; the sector angles carry the exact alpha.
//!
//! Each grid line alternates long and short segments. Horizontal
//! (r,c)-(r,c+1) is long when r + c is even (`lh:{r}:{c}`, else
//! `sh:{r}:{c}`); vertical (r,c)-(r+1,c) is long when r + c is odd
//! (`lv:{r}:{c}`, else `sv:{r}:{c}`).

use super::build::{Builder, BuildError};
use super::{CreasePattern, EdgeId, EdgeKind, FaceKind, Mv, MvAssignment, PatternSpec, VertexId};
use crate::exact::{rat, Point, Q3, Rat};

fn grid_point(r: usize, c: usize) -> Point {
    (Q3::from_int(c as i64), Q3::from_int(-(r as i64)))
}

pub fn build_huffman(rows: usize, cols: usize, alpha: Rat) -> Result<CreasePattern, BuildError> {
    super::square::check_dims(rows, cols)?;
    super::miura::check_alpha(alpha)?;
    let mut b = Builder::new(PatternSpec::Huffman { rows, cols, alpha });
    let vid = |r: usize, c: usize| VertexId(r * (cols + 1) + c);
    for r in 0..=rows {
        for c in 0..=cols {
            let v = b.vertex(grid_point(r, c));
            assert_eq!(v, vid(r, c));
        }
    }
    // class-major edge order: long horizontals, long verticals, then shorts
    for long in [true, false] {
        for r in 0..=rows {
            for c in 0..cols {
                if ((r + c) % 2 == 0) == long {
                    let tag = if long { "lh" } else { "sh" };
                    b.edge(
                        format!("{tag}:{r}:{c}"),
                        vid(r, c),
                        vid(r, c + 1),
                        if long { EdgeKind::LongHorizontal } else { EdgeKind::ShortHorizontal },
                    );
                }
            }
        }
        for r in 0..rows {
            for c in 0..=cols {
                if ((r + c) % 2 == 1) == long {
                    let tag = if long { "lv" } else { "sv" };
                    b.edge(
                        format!("{tag}:{r}:{c}"),
                        vid(r, c),
                        vid(r + 1, c),
                        if long { EdgeKind::LongVertical } else { EdgeKind::ShortVertical },
                    );
                }
            }
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            b.face(
                vec![vid(r, c), vid(r + 1, c), vid(r + 1, c + 1), vid(r, c + 1)],
                FaceKind::Kite,
            );
        }
    }
    Ok(b.finish(
        move |b, v, other, _| huffman_angle(b.pos(v), b.pos(other), alpha),
        |_, _| unreachable!("huffman faces are declared"),
    ))
}

/// Symbolic direction of the edge leaving v toward `other`. Even vertices
/// (r + c even) squeeze the alpha sector between their east and north
/// edges; odd vertices between their west and south edges.
fn huffman_angle(from: Point, to: Point, alpha: Rat) -> Rat {
    let c = from.0.a.numer() / from.0.a.denom();
    let r = -(from.1.a.numer() / from.1.a.denom());
    debug_assert!(from.0.a.is_integer() && from.1.a.is_integer());
    let even = (r + c) % 2 == 0;
    use std::cmp::Ordering::*;
    let dx = (to.0 - from.0).sign();
    let dy = (to.1 - from.1).sign();
    match (dx, dy, even) {
        (Greater, Equal, _) => rat(0, 1),
        (Equal, Greater, true) => alpha,
        (Less, Equal, true) => alpha + rat(90, 1),
        (Equal, Greater, false) => rat(180, 1) - alpha,
        (Less, Equal, false) => rat(270, 1) - alpha,
        (Equal, Less, _) => rat(270, 1),
        _ => panic!("edge is not axis-aligned"),
    }
}

/// Long horizontals mountain, long verticals valley, all shorts mountain.
/// Every vertex then has its smallest sector (the alpha wedge between the
/// two long creases) bordered by opposite letters, with letter sum +2.
pub fn canonical_mv(pattern: &CreasePattern) -> MvAssignment {
    assert!(
        matches!(pattern.spec, PatternSpec::Huffman { .. }),
        "canonical_mv(huffman) on a non-huffman pattern"
    );
    let mut mv = MvAssignment::uniform(pattern, Mv::Mountain);
    for (i, e) in pattern.edges.iter().enumerate() {
        if e.kind == EdgeKind::LongVertical {
            mv.values[i] = Mv::Valley;
        }
    }
    mv
}

/// Maximal runs of short creases chained through interior vertices, where
/// the two shorts at a vertex always belong to its 90-degree sectors and
/// any valid assignment keeps each run monochromatic. Runs are returned
/// with their edges sorted, ordered by first edge.
pub fn short_rows(pattern: &CreasePattern) -> Vec<Vec<EdgeId>> {
    let is_short = |e: EdgeId| {
        matches!(
            pattern.edges[e.0].kind,
            EdgeKind::ShortHorizontal | EdgeKind::ShortVertical
        )
    };
    // union-find over edge ids, linking the short pair at each interior vertex
    let mut parent: Vec<usize> = (0..pattern.edge_count()).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    for v in pattern.interior_vertices() {
        let star = pattern.star(v).unwrap();
        let shorts: Vec<EdgeId> = star.edges.iter().copied().filter(|&e| is_short(e)).collect();
        assert_eq!(shorts.len(), 2, "interior huffman vertex without a short pair");
        let (a, b) = (find(&mut parent, shorts[0].0), find(&mut parent, shorts[1].0));
        parent[a] = b;
    }
    let mut rows: std::collections::BTreeMap<usize, Vec<EdgeId>> = std::collections::BTreeMap::new();
    for e in 0..pattern.edge_count() {
        if is_short(EdgeId(e)) {
            let r = find(&mut parent, e);
            rows.entry(r).or_default().push(EdgeId(e));
        }
    }
    let mut out: Vec<Vec<EdgeId>> = rows.into_values().collect();
    for row in &mut out {
        row.sort();
    }
    out.sort_by_key(|row| row[0]);
    out
}
