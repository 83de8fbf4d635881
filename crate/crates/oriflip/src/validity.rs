//! Local flat-foldability: per-vertex rules and the family dispatch.
//!
//! Every rule here is exact; angle comparisons use rational arithmetic
//! and strictness is meaningful. A pattern is locally valid when every
//! interior vertex passes its family's rule: plain Maekawa for the
//! equal-angle square and triangle stars, the farthest-edge rule for
//! Miura vertices, Maekawa plus Big-Little-Big for the Huffman and
//! square-twist stars.

use crate::exact::{rat, Rat};
use crate::pattern::{CreasePattern, EdgeKind, Family, MvAssignment, VertexId};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ValidityError {
    #[error("vertex {0} is on the paper boundary")]
    BoundaryVertex(VertexId),
    #[error("sector angles sum to {0} instead of 360")]
    NotClosed(Rat),
    #[error("operation needs a {expected} pattern, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Rule {
    Maekawa,
    BigLittleBig,
    GenMaekawa,
    MiuraFarthestEdge,
    None,
}

impl Rule {
    pub fn name(self) -> &'static str {
        match self {
            Rule::Maekawa => "maekawa",
            Rule::BigLittleBig => "big-little-big",
            Rule::GenMaekawa => "gen-maekawa",
            Rule::MiuraFarthestEdge => "miura-farthest-edge",
            Rule::None => "none",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VertexVerdict {
    pub vertex: VertexId,
    pub valid: bool,
    pub violated_rule: Rule,
    pub maekawa_sum: i32,
}

/// Kawasaki's theorem on a closed fan of sector angles: flat-foldable
/// geometry needs an even count with alternating sum zero.
pub fn kawasaki_check(angles: &[Rat]) -> Result<bool, ValidityError> {
    let sum: Rat = angles.iter().sum();
    if sum != rat(360, 1) {
        return Err(ValidityError::NotClosed(sum));
    }
    if angles.len() % 2 != 0 {
        return Ok(false);
    }
    let alt: Rat = angles
        .iter()
        .enumerate()
        .map(|(i, &a)| if i % 2 == 0 { a } else { -a })
        .sum();
    Ok(alt == rat(0, 1))
}

/// Sum of crease signs at an interior vertex; Maekawa's theorem wants +-2.
pub fn maekawa_sum(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<i32, ValidityError> {
    let star = p.star(v).ok_or(ValidityError::BoundaryVertex(v))?;
    Ok(star.edges.iter().map(|&e| mu.get(e).sign()).sum())
}

/// Big-Little-Big lemma: every sector strictly smaller than both of its
/// neighbors must have bounding creases of opposite letters.
pub fn big_little_big_check(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<bool, ValidityError> {
    let star = p.star(v).ok_or(ValidityError::BoundaryVertex(v))?;
    let d = star.degree();
    for i in 0..d {
        let here = star.sectors[i];
        let left = star.sectors[(i + d - 1) % d];
        let right = star.sectors[(i + 1) % d];
        if here < left && here < right {
            let a = mu.get(star.edges[i]);
            let b = mu.get(star.edges[(i + 1) % d]);
            if a == b {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Generalized Maekawa condition on equal-angle local-minimum runs: a
/// maximal run of k+1 equal sectors with strictly larger neighbors is
/// bounded by k+2 creases whose signs sum to 0 for even k and to +-1 for
/// odd k. Necessary but not sufficient; never used as the deciding rule.
pub fn gen_maekawa_check(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<bool, ValidityError> {
    let star = p.star(v).ok_or(ValidityError::BoundaryVertex(v))?;
    let d = star.degree();
    let s = &star.sectors;
    if s.iter().all(|&a| a == s[0]) {
        return Ok(true);
    }
    // rotate to a run boundary so maximal runs never wrap
    let start = (1..=d)
        .map(|i| i % d)
        .find(|&i| s[i] != s[(i + d - 1) % d])
        .unwrap();
    let mut i = 0;
    while i < d {
        let val = s[(start + i) % d];
        let mut k = 0;
        while i + k + 1 < d && s[(start + i + k + 1) % d] == val {
            k += 1;
        }
        let before = s[(start + i + d - 1) % d];
        let after = s[(start + i + k + 1) % d];
        if before > val && after > val {
            let sum: i32 = (0..=k + 1)
                .map(|t| mu.get(star.edges[(start + i + t) % d]).sign())
                .sum();
            let ok = if k % 2 == 0 { sum == 0 } else { sum.abs() == 1 };
            if !ok {
                return Ok(false);
            }
        }
        i += k + 1;
    }
    Ok(true)
}

/// Miura vertex rule: Maekawa holds, and the crease farthest by angle
/// from the zigzag pair (the far parallel crease, flanked by the two
/// obtuse sectors) carries the majority letter. Equivalently, when both
/// zigzag creases take the majority letter the third majority crease must
/// be that farthest edge.
pub fn miura_vertex_check(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<bool, ValidityError> {
    if p.family() != Family::Miura {
        return Err(ValidityError::WrongFamily {
            expected: "miura",
            got: p.family().name(),
        });
    }
    let sum = maekawa_sum(mu, p, v)?;
    if sum.abs() != 2 {
        return Ok(false);
    }
    let far = farthest_from_zigs(p, v);
    let majority = if sum > 0 { crate::pattern::Mv::Mountain } else { crate::pattern::Mv::Valley };
    Ok(mu.get(far) == majority)
}

/// The non-zigzag crease at v maximizing angular distance to the zigzag
/// pair. Unique for any alpha strictly between 0 and 90.
pub(crate) fn farthest_from_zigs(p: &CreasePattern, v: VertexId) -> crate::pattern::EdgeId {
    let star = p.star(v).expect("interior miura vertex");
    let d = star.degree();
    let zigs: Vec<usize> = (0..d)
        .filter(|&i| p.edges[star.edges[i].0].kind == EdgeKind::Zig)
        .collect();
    assert_eq!(zigs.len(), 2, "miura vertex must meet two zigzag creases");
    // angle walked counterclockwise from edge i to edge j
    let ccw = |i: usize, j: usize| -> Rat {
        let mut a = rat(0, 1);
        let mut t = i;
        while t != j {
            a += star.sectors[t];
            t = (t + 1) % d;
        }
        a
    };
    let dist = |i: usize, j: usize| -> Rat {
        let a = ccw(i, j);
        a.min(rat(360, 1) - a)
    };
    let mut best: Option<(Rat, usize)> = None;
    for i in (0..d).filter(|i| !zigs.contains(i)) {
        let di = dist(i, zigs[0]).min(dist(i, zigs[1]));
        match best {
            Some((bd, _)) if bd >= di => {
                assert_ne!(bd, di, "farthest edge from the zigzag pair is ambiguous");
            }
            _ => best = Some((di, i)),
        }
    }
    star.edges[best.unwrap().1]
}

/// One verdict per interior vertex, ordered by vertex id; the violated
/// rule is the first broken one in the order Maekawa, Big-Little-Big,
/// Miura farthest-edge.
pub fn vertex_verdicts(mu: &MvAssignment, p: &CreasePattern) -> Vec<VertexVerdict> {
    let family = p.family();
    p.interior_vertices()
        .map(|v| {
            let sum = maekawa_sum(mu, p, v).unwrap();
            let violated = if sum.abs() != 2 {
                Rule::Maekawa
            } else {
                match family {
                    Family::SquareGrid | Family::TriangleRegion => Rule::None,
                    Family::Miura => {
                        if miura_vertex_check(mu, p, v).unwrap() {
                            Rule::None
                        } else {
                            Rule::MiuraFarthestEdge
                        }
                    }
                    Family::HuffmanGrid | Family::SquareTwist => {
                        if big_little_big_check(mu, p, v).unwrap() {
                            Rule::None
                        } else {
                            Rule::BigLittleBig
                        }
                    }
                }
            };
            VertexVerdict {
                vertex: v,
                valid: violated == Rule::None,
                violated_rule: violated,
                maekawa_sum: sum,
            }
        })
        .collect()
}

/// Family-dispatched local validity over every interior vertex.
pub fn is_locally_valid(mu: &MvAssignment, p: &CreasePattern) -> bool {
    vertex_verdicts(mu, p).iter().all(|verdict| verdict.valid)
}

/// Validity at a single interior vertex under the family rule; boundary
/// vertices are rejected.
pub fn vertex_valid(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<bool, ValidityError> {
    let sum = maekawa_sum(mu, p, v)?;
    if sum.abs() != 2 {
        return Ok(false);
    }
    match p.family() {
        Family::SquareGrid | Family::TriangleRegion => Ok(true),
        Family::Miura => miura_vertex_check(mu, p, v),
        Family::HuffmanGrid | Family::SquareTwist => big_little_big_check(mu, p, v),
    }
}
