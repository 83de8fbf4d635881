//! Tiled square twists: a rows x cols patch of twist units on the lattice
//! spanned by (3, -1) and (1, 3). Each unit is a 2 x 2 central square
//! whose corners emit two 45-degree pleat rays in a pinwheel; rays either
//! land on the matching corner of a neighboring unit (forming the shared
//! pleat) or run to the paper border. The paper is the bounding box of
//! the squares padded by 2 horizontally and 9/4 vertically; the uneven
//! padding keeps every ray clear of the paper corners.
//!
//! Edge ids: `side:{i}:{j}:{b|r|t|l}` for the central square sides,
//! `ray:{x1},{y1}:{x2},{y2}` keyed by sorted exact endpoints, and
//! `border:{n}` counterclockwise from the lower-left paper corner.

use super::build::{Builder, BuildError};
use super::{
    CreasePattern, EdgeId, EdgeKind, FaceKind, Mv, MvAssignment, PatternSpec, VertexId,
};
use crate::exact::{rat, Point, Q3, Rat};
use std::collections::{BTreeMap, BTreeSet};

/// Corner offsets within a unit and the two pinwheel ray directions each
/// corner emits: bottom-left NW+SW, bottom-right SW+SE, top-right SE+NE,
/// top-left NE+NW.
const CORNERS: [((i64, i64), [(i64, i64); 2]); 4] = [
    ((0, 0), [(-1, 1), (-1, -1)]),
    ((2, 0), [(-1, -1), (1, -1)]),
    ((2, 2), [(1, -1), (1, 1)]),
    ((0, 2), [(1, 1), (-1, 1)]),
];

fn ipoint(x: i64, y: i64) -> Point {
    (Q3::from_int(x), Q3::from_int(y))
}

fn rpoint(x: Rat, y: Rat) -> Point {
    (Q3::from_rat(x), Q3::from_rat(y))
}

fn fmt_point(p: Point) -> String {
    assert!(p.0.b == rat(0, 1) && p.1.b == rat(0, 1));
    format!("{},{}", p.0.a, p.1.a)
}

pub fn build_square_twist(rows: usize, cols: usize) -> Result<CreasePattern, BuildError> {
    if rows < 1 || cols < 1 {
        return Err(BuildError::TooSmall { min: 1, got: rows.min(cols) });
    }
    if rows > 60 || cols > 60 {
        return Err(BuildError::TooLarge(format!("{rows}x{cols}")));
    }
    let (k, l) = (rows as i64, cols as i64);
    let mut b = Builder::new(PatternSpec::Twist { rows, cols });

    // central squares, unit-major
    let center = |i: i64, j: i64| (3 * i + j, -i + 3 * j);
    let mut corner_dirs: BTreeMap<(i64, i64), [(i64, i64); 2]> = BTreeMap::new();
    for i in 0..k {
        for j in 0..l {
            let (cx, cy) = center(i, j);
            let mut vs = [VertexId(0); 4];
            for (n, ((ox, oy), dirs)) in CORNERS.iter().enumerate() {
                let p = (cx + ox, cy + oy);
                vs[n] = b.vertex(ipoint(p.0, p.1));
                corner_dirs.insert(p, *dirs);
            }
            let [bl, br, tr, tl] = vs;
            b.edge(format!("side:{i}:{j}:b"), bl, br, EdgeKind::Side);
            b.edge(format!("side:{i}:{j}:r"), br, tr, EdgeKind::Side);
            b.edge(format!("side:{i}:{j}:t"), tl, tr, EdgeKind::Side);
            b.edge(format!("side:{i}:{j}:l"), bl, tl, EdgeKind::Side);
        }
    }

    // paper rectangle
    let xmin = rat(-2, 1);
    let xmax = Rat::from_integer(3 * k + l);
    let ymin = Rat::new(-4 * k - 5, 4);
    let ymax = Rat::new(12 * l + 5, 4);

    // rays: corner-to-corner links where the neighbor exists, otherwise
    // straight to the border
    let mut ray_pairs: BTreeSet<(Point, Point)> = BTreeSet::new();
    let mut hits: BTreeSet<Point> = BTreeSet::new();
    for (&p, dirs) in &corner_dirs {
        for &d in dirs {
            let q = (p.0 + d.0, p.1 + d.1);
            let end = if let Some(qdirs) = corner_dirs.get(&q) {
                assert!(
                    qdirs.contains(&(-d.0, -d.1)),
                    "linked corner does not emit the reverse ray"
                );
                ipoint(q.0, q.1)
            } else {
                let px = Rat::from_integer(p.0);
                let py = Rat::from_integer(p.1);
                let tx = if d.0 > 0 { xmax - px } else { px - xmin };
                let ty = if d.1 > 0 { ymax - py } else { py - ymin };
                let t = tx.min(ty);
                assert!(t > rat(0, 1), "corner on the paper border");
                let hit = rpoint(px + t * Rat::from_integer(d.0), py + t * Rat::from_integer(d.1));
                assert!(hits.insert(hit), "two rays meet on the paper border");
                hit
            };
            let a = ipoint(p.0, p.1);
            let pair = if a < end { (a, end) } else { (end, a) };
            ray_pairs.insert(pair);
        }
    }
    for &(a, z) in &ray_pairs {
        let va = b.vertex(a);
        let vz = b.vertex(z);
        b.edge(
            format!("ray:{}:{}", fmt_point(a), fmt_point(z)),
            va,
            vz,
            EdgeKind::Ray,
        );
    }

    // border cycle, counterclockwise from the lower-left paper corner
    let on_wall = |h: &&Point, coord: Rat, vertical: bool| -> bool {
        if vertical {
            h.0 == Q3::from_rat(coord)
        } else {
            h.1 == Q3::from_rat(coord)
        }
    };
    let mut bottom: Vec<Point> = hits.iter().filter(|h| on_wall(h, ymin, false)).copied().collect();
    let mut rightw: Vec<Point> = hits.iter().filter(|h| on_wall(h, xmax, true)).copied().collect();
    let mut topw: Vec<Point> = hits.iter().filter(|h| on_wall(h, ymax, false)).copied().collect();
    let mut leftw: Vec<Point> = hits.iter().filter(|h| on_wall(h, xmin, true)).copied().collect();
    bottom.sort_by(|a, b| a.0.cmp(&b.0));
    rightw.sort_by(|a, b| a.1.cmp(&b.1));
    topw.sort_by(|a, b| b.0.cmp(&a.0));
    leftw.sort_by(|a, b| b.1.cmp(&a.1));
    let mut cycle = vec![rpoint(xmin, ymin)];
    cycle.extend(bottom);
    cycle.push(rpoint(xmax, ymin));
    cycle.extend(rightw);
    cycle.push(rpoint(xmax, ymax));
    cycle.extend(topw);
    cycle.push(rpoint(xmin, ymax));
    cycle.extend(leftw);
    assert_eq!(cycle.len(), hits.len() + 4, "border hit off every wall");
    for n in 0..cycle.len() {
        let va = b.vertex(cycle[n]);
        let vz = b.vertex(cycle[(n + 1) % cycle.len()]);
        b.edge(format!("border:{n}"), va, vz, EdgeKind::Border);
    }

    Ok(b.finish(
        |b, v, other, _| compass_angle(b.pos(v), b.pos(other)),
        classify_twist_face,
    ))
}

fn classify_twist_face(kinds: &[EdgeKind], _has_border: bool) -> FaceKind {
    let count = |k: EdgeKind| kinds.iter().filter(|&&x| x == k).count();
    let (s, r, bo) = (count(EdgeKind::Side), count(EdgeKind::Ray), count(EdgeKind::Border));
    assert_eq!(s + r + bo, kinds.len());
    match (s, r, bo) {
        (4, 0, 0) => FaceKind::TwistSquare,
        (0, 4, 0) => FaceKind::TwistGap,
        (2, 2, 0) => FaceKind::TwistPleat,
        (1, 2, _) if bo >= 1 => FaceKind::TwistPleat,
        (0, _, _) if r >= 2 && bo >= 1 => FaceKind::TwistMargin,
        _ => panic!("unexpected twist face boundary {kinds:?}"),
    }
}

/// Direction of an axis-aligned or diagonal step, in degrees.
fn compass_angle(from: Point, to: Point) -> Rat {
    let dx = to.0 - from.0;
    let dy = to.1 - from.1;
    use std::cmp::Ordering::*;
    let deg = match (dx.sign(), dy.sign()) {
        (Greater, Equal) => 0,
        (Greater, Greater) => 45,
        (Equal, Greater) => 90,
        (Less, Greater) => 135,
        (Less, Equal) => 180,
        (Less, Less) => 225,
        (Equal, Less) => 270,
        (Greater, Less) => 315,
        _ => panic!("degenerate step"),
    };
    if deg % 90 == 45 {
        assert!((dx - dy).is_zero() || (dx + dy).is_zero(), "step is not diagonal");
    }
    rat(deg, 1)
}

/// Checkerboard twist chirality: sides of unit (i, j) are mountains when
/// i + j is even, valleys otherwise; each ray takes the letter its corner
/// constraint forces (equal to the side across its 135-degree sector,
/// opposite the side across its 45-degree one); border segments fold
/// valley. The two ends of a unit-linking ray force the same letter
/// exactly because adjacent units alternate.
pub fn canonical_mv(pattern: &CreasePattern) -> MvAssignment {
    assert!(
        matches!(pattern.spec, PatternSpec::Twist { .. }),
        "canonical_mv(twist) on a non-twist pattern"
    );
    let mut mv = MvAssignment::uniform(pattern, Mv::Valley);
    for (i, e) in pattern.edges.iter().enumerate() {
        if e.kind == EdgeKind::Side {
            let mut it = e.id.split(':');
            it.next();
            let ui: usize = it.next().unwrap().parse().unwrap();
            let uj: usize = it.next().unwrap().parse().unwrap();
            if (ui + uj) % 2 == 0 {
                mv.values[i] = Mv::Mountain;
            }
        }
    }
    for (i, e) in pattern.edges.iter().enumerate() {
        if e.kind != EdgeKind::Ray {
            continue;
        }
        let mut forced: Option<Mv> = None;
        for v in [e.ends.0, e.ends.1] {
            if !pattern.vertices[v.0].interior {
                continue;
            }
            let want = ray_letter(pattern, &mv, EdgeId(i), v);
            match forced {
                None => forced = Some(want),
                Some(w) => assert_eq!(w, want, "ray letter conflict at {}", e.id),
            }
        }
        mv.values[i] = forced.expect("ray with no corner endpoint");
    }
    mv
}

/// The letter a corner vertex forces on one of its rays, given the sides.
fn ray_letter(pattern: &CreasePattern, mv: &MvAssignment, ray: EdgeId, v: VertexId) -> Mv {
    let star = pattern.star(v).expect("corner vertex must be interior");
    let d = star.degree();
    assert_eq!(d, 4);
    let p = star.position(ray).unwrap();
    let prev = (p + d - 1) % d;
    let next = (p + 1) % d;
    let side_of = |q: usize| pattern.edges[star.edges[q].0].kind == EdgeKind::Side;
    let (side, sector) = if side_of(prev) {
        (star.edges[prev], star.sectors[prev])
    } else {
        assert!(side_of(next), "ray with two ray neighbors at a corner");
        (star.edges[next], star.sectors[p])
    };
    let sv = mv.get(side);
    if sector == rat(45, 1) {
        sv.flipped()
    } else {
        assert_eq!(sector, rat(135, 1), "ray-side sector must be 45 or 135");
        sv
    }
}
