//! Minimum flip sets on the square grid.
//!
//! Two locally valid grid assignments agree on 0, 2, or 4 of the creases
//! at any interior vertex, so weighting each dual edge by agreement and
//! subdividing the agreeing ones leaves every face cycle even: the
//! subdivided dual is 2-colorable. Faces of one color class are exactly
//! the faces to flip, and the smaller class is a minimum flip set.

use crate::flip::FlipSequence;
use crate::pattern::{CreasePattern, DualGraph, FaceId, Family, MvAssignment, VertexId};
use crate::validity::is_locally_valid;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MinFlipError {
    #[error("operation needs a {expected} pattern, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },
    #[error("assignment is not locally valid")]
    InvalidAssignment,
    #[error("weighted dual has an odd cycle; the inputs cannot both be valid")]
    OddCycle,
    #[error("vertex {0} is on the paper boundary")]
    BoundaryVertex(VertexId),
}

/// Dual graph with each dual edge weighted by |mu1(e) + mu2(e)|: 2 where
/// the assignments agree, 0 where they differ.
pub struct WeightedDual {
    pub dual: DualGraph,
    /// Aligned with dual.edges.
    pub weights: Vec<i32>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Color {
    Purple,
    Teal,
}

/// A proper 2-coloring of the subdivided weighted dual, restricted to the
/// face nodes; face 0 is normalized to purple.
pub struct TwoColoring {
    pub colors: Vec<Color>,
}

impl TwoColoring {
    pub fn class(&self, c: Color) -> Vec<FaceId> {
        self.colors
            .iter()
            .enumerate()
            .filter(|(_, &x)| x == c)
            .map(|(i, _)| FaceId(i))
            .collect()
    }
}

pub fn weighted_dual(
    mu1: &MvAssignment,
    mu2: &MvAssignment,
    p: &CreasePattern,
) -> Result<WeightedDual, MinFlipError> {
    if p.family() != Family::SquareGrid {
        return Err(MinFlipError::WrongFamily {
            expected: "square",
            got: p.family().name(),
        });
    }
    if !is_locally_valid(mu1, p) || !is_locally_valid(mu2, p) {
        return Err(MinFlipError::InvalidAssignment);
    }
    let dual = p.dual_graph();
    let weights = dual
        .edges
        .iter()
        .map(|de| (mu1.get(de.over).sign() + mu2.get(de.over).sign()).abs())
        .collect();
    Ok(WeightedDual { dual, weights })
}

/// Number of creases at v on which the two assignments agree. For valid
/// assignments on the grid this is 0, 2 or 4, never odd; an assertion
/// failure means an invalid input.
pub fn parity_lemma_check(
    mu1: &MvAssignment,
    mu2: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<usize, MinFlipError> {
    let star = p.star(v).ok_or(MinFlipError::BoundaryVertex(v))?;
    let agree = star
        .edges
        .iter()
        .filter(|&&e| mu1.get(e) == mu2.get(e))
        .count();
    assert!(
        agree % 2 == 0,
        "assignments agree on an odd number of creases at {v}; an input must be invalid"
    );
    Ok(agree)
}

/// 2-color the subdivided dual: differing faces (weight 0) get opposite
/// colors, agreeing ones (weight 2, where the subdivision vertex absorbs
/// one alternation) the same color. BFS from face 0 = purple.
pub fn two_color(wd: &WeightedDual) -> Result<TwoColoring, MinFlipError> {
    let n = wd.dual.face_count;
    let adj = wd.dual.adjacency();
    let mut want_same = std::collections::BTreeMap::new();
    for (de, &w) in wd.dual.edges.iter().zip(&wd.weights) {
        let key = (de.faces.0.min(de.faces.1), de.faces.0.max(de.faces.1));
        want_same.insert((key, de.over), w == 2);
    }
    let mut colors: Vec<Option<Color>> = vec![None; n];
    for root in 0..n {
        if colors[root].is_some() {
            continue;
        }
        colors[root] = Some(Color::Purple);
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let cu = colors[u].unwrap();
            for &(fv, over) in &adj[u] {
                let key = (FaceId(u).min(fv), FaceId(u).max(fv));
                let same = want_same[&(key, over)];
                let want = match (cu, same) {
                    (c, true) => c,
                    (Color::Purple, false) => Color::Teal,
                    (Color::Teal, false) => Color::Purple,
                };
                match colors[fv.0] {
                    None => {
                        colors[fv.0] = Some(want);
                        queue.push_back(fv.0);
                    }
                    Some(c) if c != want => return Err(MinFlipError::OddCycle),
                    Some(_) => {}
                }
            }
        }
    }
    Ok(TwoColoring { colors: colors.into_iter().map(|c| c.unwrap()).collect() })
}

/// A minimum flip set turning mu1 into mu2 on the grid: the smaller color
/// class (ties toward face 0's class), ascending face ids. Order is
/// irrelevant for validity since every grid face is always flippable.
pub fn min_flip_set(
    mu1: &MvAssignment,
    mu2: &MvAssignment,
    p: &CreasePattern,
) -> Result<FlipSequence, MinFlipError> {
    let wd = weighted_dual(mu1, mu2, p)?;
    let coloring = two_color(&wd)?;
    let purple = coloring.class(Color::Purple);
    let teal = coloring.class(Color::Teal);
    let set = if purple.len() < teal.len() {
        purple
    } else if teal.len() < purple.len() {
        teal
    } else {
        // tie: face 0 is purple by normalization
        purple
    };
    #[cfg(debug_assertions)]
    {
        let end = crate::flip::apply_sequence(mu1, p, &set, false).unwrap();
        debug_assert!(end.eq_on_interior(mu2, p), "flip set must reach the target");
    }
    Ok(set)
}

/// Square-twist counterpart: the flippable faces (the pleats) are
/// pairwise edge-disjoint, so the minimum flip set is simply the pleats
/// on whose constrained edges the assignments differ.
pub fn twist_min_flip_set(
    mu1: &MvAssignment,
    mu2: &MvAssignment,
    p: &CreasePattern,
) -> Result<FlipSequence, MinFlipError> {
    if p.family() != Family::SquareTwist {
        return Err(MinFlipError::WrongFamily {
            expected: "twist",
            got: p.family().name(),
        });
    }
    if !is_locally_valid(mu1, p) || !is_locally_valid(mu2, p) {
        return Err(MinFlipError::InvalidAssignment);
    }
    let constrained = |e: crate::pattern::EdgeId| {
        let (a, b) = p.edges[e.0].ends;
        p.vertices[a.0].interior || p.vertices[b.0].interior
    };
    let set: FlipSequence = (0..p.face_count())
        .map(FaceId)
        .filter(|&f| p.faces[f.0].kind == crate::pattern::FaceKind::TwistPleat)
        .filter(|&f| {
            p.faces[f.0]
                .edges
                .iter()
                .any(|&e| constrained(e) && mu1.get(e) != mu2.get(e))
        })
        .collect();
    #[cfg(debug_assertions)]
    {
        let end = crate::flip::apply_sequence(mu1, p, &set, false).unwrap();
        debug_assert!(end.eq_on_interior(mu2, p), "pleat set must reach the target");
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flip::apply_sequence;
    use crate::flipgraph::{bfs_distance, build_flip_graph, enumerate_valid};
    use crate::pattern::{Mv, PatternSpec};

    fn grid(m: usize, n: usize) -> CreasePattern {
        PatternSpec::Square { rows: m, cols: n }.build().unwrap()
    }

    #[test]
    fn identity_needs_no_flips() {
        let p = grid(3, 4);
        let mu = crate::pattern::square::canonical_mv(&p);
        assert!(min_flip_set(&mu, &mu, &p).unwrap().is_empty());
    }

    #[test]
    fn negation_flips_a_checkerboard() {
        let p = grid(3, 3);
        let mu = crate::pattern::square::canonical_mv(&p);
        let mut neg = mu.clone();
        for v in neg.values.iter_mut() {
            *v = v.flipped();
        }
        let set = min_flip_set(&mu, &neg, &p).unwrap();
        // negating every crease of a 3x3 grid flips the 4-face color class
        assert_eq!(set.len(), 4);
        let end = apply_sequence(&mu, &p, &set, true).unwrap();
        assert!(end.eq_on_interior(&neg, &p));
    }

    #[test]
    fn both_color_classes_reach_the_target() {
        let p = grid(2, 3);
        let en = enumerate_valid(&p).unwrap();
        let mu1 = &en.assignments[0];
        let mu2 = en.assignments.last().unwrap();
        let wd = weighted_dual(mu1, mu2, &p).unwrap();
        let col = two_color(&wd).unwrap();
        for class in [col.class(Color::Purple), col.class(Color::Teal)] {
            let end = apply_sequence(mu1, &p, &class, false).unwrap();
            assert!(end.eq_on_interior(mu2, &p));
        }
    }

    #[test]
    fn matches_flip_graph_distance_exhaustively() {
        for (m, n) in [(2, 2), (2, 3)] {
            let p = grid(m, n);
            let en = enumerate_valid(&p).unwrap();
            let g = build_flip_graph(&p).unwrap();
            for a in &en.assignments {
                for b in &en.assignments {
                    let set = min_flip_set(a, b, &p).unwrap();
                    let d = bfs_distance(&g, a, b).unwrap();
                    assert_eq!(Some(set.len()), d, "{m}x{n} grid");
                }
            }
        }
    }

    #[test]
    fn parity_lemma_on_all_small_pairs() {
        let p = grid(2, 2);
        let en = enumerate_valid(&p).unwrap();
        let v = p.interior_vertices().next().unwrap();
        for a in &en.assignments {
            for b in &en.assignments {
                let agree = parity_lemma_check(a, b, &p, v).unwrap();
                assert!(agree == 0 || agree == 2 || agree == 4);
            }
        }
    }

    #[test]
    fn parity_lemma_rejects_boundary_vertex() {
        let p = grid(2, 2);
        let mu = crate::pattern::square::canonical_mv(&p);
        let v = crate::pattern::VertexId(0);
        assert_eq!(
            parity_lemma_check(&mu, &mu, &p, v),
            Err(MinFlipError::BoundaryVertex(v))
        );
    }

    #[test]
    fn wrong_family_is_rejected() {
        let p = PatternSpec::Triangle { rows: 2, cols: 2 }.build().unwrap();
        let mu = MvAssignment::uniform(&p, Mv::Mountain);
        assert!(matches!(
            weighted_dual(&mu, &mu, &p),
            Err(MinFlipError::WrongFamily { .. })
        ));
    }

    #[test]
    fn invalid_input_is_rejected() {
        let p = grid(2, 2);
        let mu = MvAssignment::uniform(&p, Mv::Mountain);
        assert_eq!(
            min_flip_set(&mu, &mu, &p),
            Err(MinFlipError::InvalidAssignment)
        );
    }

    #[test]
    fn twist_set_matches_flip_graph_distance() {
        let p = PatternSpec::Twist { rows: 1, cols: 1 }.build().unwrap();
        let en = enumerate_valid(&p).unwrap();
        assert_eq!(en.assignments.len(), 16);
        let g = build_flip_graph(&p).unwrap();
        for a in &en.assignments {
            for b in &en.assignments {
                let set = twist_min_flip_set(a, b, &p).unwrap();
                let d = bfs_distance(&g, a, b).unwrap();
                assert_eq!(Some(set.len()), d);
            }
        }
    }
}
