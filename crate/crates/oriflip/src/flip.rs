//! Face flips: the involution at the heart of reconfiguration, its
//! flippability predicates, and sequence application.
//!
//! Flipping a face negates the letters of exactly the edges on its
//! boundary. Only the stars of that face's own vertices can change, so
//! flippability rechecks are local; debug builds assert the equivalence
//! with a whole-pattern recheck.

use crate::pattern::{CreasePattern, FaceId, Family, Mv, MvAssignment, VertexId};
use crate::validity::{is_locally_valid, vertex_valid};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum FlipError {
    #[error("pattern has no face {0}")]
    UnknownFace(FaceId),
    #[error("assignment is not locally valid")]
    InvalidAssignment,
    #[error("sequence leaves a locally invalid state after {applied} flips")]
    StepFailed { applied: usize },
    #[error("operation needs a {expected} pattern, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },
}

/// A reconfiguration recipe: faces to flip, in order.
pub type FlipSequence = Vec<FaceId>;

/// Negate the letters on the boundary of f. Value semantics; flipping the
/// same face twice is the identity.
pub fn flip_face(
    mu: &MvAssignment,
    p: &CreasePattern,
    f: FaceId,
) -> Result<MvAssignment, FlipError> {
    if f.0 >= p.face_count() {
        return Err(FlipError::UnknownFace(f));
    }
    let mut out = mu.clone();
    for &e in &p.faces[f.0].edges {
        out.toggle(e);
    }
    Ok(out)
}

/// Whether flipping f preserves local validity. Undefined (an error) on
/// invalid input states: the flip graph has only valid nodes.
pub fn is_flippable(mu: &MvAssignment, p: &CreasePattern, f: FaceId) -> Result<bool, FlipError> {
    if f.0 >= p.face_count() {
        return Err(FlipError::UnknownFace(f));
    }
    if !is_locally_valid(mu, p) {
        return Err(FlipError::InvalidAssignment);
    }
    let flipped = flip_face(mu, p, f)?;
    let local = p.faces[f.0]
        .verts
        .iter()
        .filter(|v| p.vertices[v.0].interior)
        .all(|&v| vertex_valid(&flipped, p, v).unwrap());
    debug_assert_eq!(
        local,
        is_locally_valid(&flipped, p),
        "flip validity must be decided by the flipped face's own stars"
    );
    Ok(local)
}

/// Triangle-lattice flippability by the blocking-vertex rule: a face is
/// stuck exactly when, at one of its interior vertices, both of its
/// creases carry the vertex's minority letter (two mountains at a valley
/// vertex or two valleys at a mountain vertex). Returns the lowest-id
/// blocking vertex when blocked.
pub fn triangle_flippable(
    mu: &MvAssignment,
    p: &CreasePattern,
    f: FaceId,
) -> Result<(bool, Option<VertexId>), FlipError> {
    if p.family() != Family::TriangleRegion {
        return Err(FlipError::WrongFamily {
            expected: "triangle",
            got: p.family().name(),
        });
    }
    if f.0 >= p.face_count() {
        return Err(FlipError::UnknownFace(f));
    }
    if !is_locally_valid(mu, p) {
        return Err(FlipError::InvalidAssignment);
    }
    let face = &p.faces[f.0];
    let mut verts: Vec<VertexId> = face.verts.clone();
    verts.sort();
    for v in verts {
        if !p.vertices[v.0].interior {
            continue;
        }
        let creases: Vec<Mv> = face
            .edges
            .iter()
            .filter(|e| {
                let (a, b) = p.edges[e.0].ends;
                a == v || b == v
            })
            .map(|&e| mu.get(e))
            .collect();
        assert_eq!(creases.len(), 2, "triangle face must meet each vertex in 2 creases");
        let minority = if crate::validity::maekawa_sum(mu, p, v).unwrap() > 0 {
            Mv::Valley
        } else {
            Mv::Mountain
        };
        if creases[0] == minority && creases[1] == minority {
            debug_assert_eq!(is_flippable(mu, p, f), Ok(false));
            return Ok((false, Some(v)));
        }
    }
    debug_assert_eq!(is_flippable(mu, p, f), Ok(true));
    Ok((true, None))
}

/// Apply flips left to right. With require_valid, the input state and the
/// state after every flip must pass is_locally_valid; a failure after k
/// flips reports k.
pub fn apply_sequence(
    mu: &MvAssignment,
    p: &CreasePattern,
    seq: &[FaceId],
    require_valid: bool,
) -> Result<MvAssignment, FlipError> {
    if require_valid && !is_locally_valid(mu, p) {
        return Err(FlipError::StepFailed { applied: 0 });
    }
    let mut cur = mu.clone();
    for (k, &f) in seq.iter().enumerate() {
        cur = flip_face(&cur, p, f)?;
        if require_valid && !is_locally_valid(&cur, p) {
            return Err(FlipError::StepFailed { applied: k + 1 });
        }
    }
    Ok(cur)
}
