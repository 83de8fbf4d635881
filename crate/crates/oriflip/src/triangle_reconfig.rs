//! Triangle-lattice reconfiguration: a sweep that carries any valid
//! assignment of a parallelogram region to the canonical configuration
//! (mountains exactly on the -30 degree creases) in at most 2n flips, n
//! the face count; routing through the canonical configuration connects
//! any two valid assignments in at most 4n. An exhaustive BFS gives
//! provably shortest sequences on regions small enough to search.
//!
//! Every interior vertex of a valid assignment is a mountain or a valley
//! vertex: four creases of one letter against two of the other. A face is
//! blocked exactly when both of its creases at some vertex carry that
//! vertex's minority letter. The three faces around a blocking vertex
//! that do not share an edge with the blocked face all have both their
//! creases there in the majority, so flipping any one of them turns the
//! vertex's type over and unblocks the face; at least one of the three is
//! itself flippable.
//!
//! The sweep fixes edges left to right, one strip of cells at a time, and
//! never touches an edge it has fixed: strip 0's diagonals first, then
//! alternately the verticals of the next lattice line and the diagonals
//! of the next strip, top to bottom within each pass. Each wrong edge
//! costs at most one unblocking flip plus one fixing flip.

use crate::flip::{flip_face, is_flippable, triangle_flippable, FlipError, FlipSequence};
use crate::flipgraph::{decode, encode};
use crate::pattern::{
    triangle, CreasePattern, FaceId, Family, Mv, MvAssignment, PatternSpec, VertexId,
};
use crate::validity::{is_locally_valid, maekawa_sum};
use std::collections::{btree_map, BTreeMap, VecDeque};
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ReconfigError {
    #[error("operation needs a {expected} pattern, got {got}")]
    WrongFamily { expected: &'static str, got: &'static str },
    #[error("the canonical sweep needs a parallelogram region")]
    UnsupportedRegion,
    #[error("assignment is not locally valid")]
    InvalidAssignment,
    #[error("pattern has no face {0}")]
    UnknownFace(FaceId),
    #[error("vertex {0} is on the paper boundary")]
    BoundaryVertex(VertexId),
    #[error("vertex {v} does not block face {f}")]
    NotBlocking { f: FaceId, v: VertexId },
    #[error("region has {edges} constrained creases, over the 64-bit search cap")]
    TooLarge { edges: usize },
    #[error("search explored {explored} states without reaching the target")]
    BudgetExceeded { explored: usize },
    #[error("no flip sequence connects the two assignments")]
    Unreachable,
}

fn lift(e: FlipError) -> ReconfigError {
    match e {
        FlipError::UnknownFace(f) => ReconfigError::UnknownFace(f),
        FlipError::WrongFamily { expected, got } => ReconfigError::WrongFamily { expected, got },
        FlipError::InvalidAssignment | FlipError::StepFailed { .. } => {
            ReconfigError::InvalidAssignment
        }
    }
}

fn check_family(p: &CreasePattern) -> Result<(), ReconfigError> {
    if p.family() != Family::TriangleRegion {
        return Err(ReconfigError::WrongFamily {
            expected: "triangle",
            got: p.family().name(),
        });
    }
    Ok(())
}

/// Mountains on the -30 degree creases, valleys elsewhere: every interior
/// vertex is a valley vertex, so the assignment is valid on any region.
pub fn canonical_config(p: &CreasePattern) -> Result<MvAssignment, ReconfigError> {
    check_family(p)?;
    Ok(triangle::canonical_mv(p))
}

/// The type of an interior vertex of a valid assignment: a mountain
/// vertex has four mountains and two valleys, a valley vertex the
/// reverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum VertexClass {
    Mountain,
    Valley,
}

impl VertexClass {
    /// The letter the vertex has only two of.
    pub fn minority(self) -> Mv {
        match self {
            VertexClass::Mountain => Mv::Valley,
            VertexClass::Valley => Mv::Mountain,
        }
    }
}

pub fn vertex_class(
    mu: &MvAssignment,
    p: &CreasePattern,
    v: VertexId,
) -> Result<VertexClass, ReconfigError> {
    check_family(p)?;
    let sum = maekawa_sum(mu, p, v).map_err(|_| ReconfigError::BoundaryVertex(v))?;
    match sum {
        2 => Ok(VertexClass::Mountain),
        -2 => Ok(VertexClass::Valley),
        _ => Err(ReconfigError::InvalidAssignment),
    }
}

/// Whether v pins f: both of f's creases at v carry v's minority letter.
/// Boundary vertices and vertices not on f never block. Assumes a valid
/// state.
fn blocks(mu: &MvAssignment, p: &CreasePattern, f: FaceId, v: VertexId) -> bool {
    if !p.vertices[v.0].interior || !p.faces[f.0].verts.contains(&v) {
        return false;
    }
    let pair: Vec<Mv> = p.faces[f.0]
        .edges
        .iter()
        .filter(|e| {
            let (a, b) = p.edges[e.0].ends;
            a == v || b == v
        })
        .map(|&e| mu.get(e))
        .collect();
    assert_eq!(pair.len(), 2, "a triangle meets each of its vertices in two creases");
    let minority = if maekawa_sum(mu, p, v).unwrap() > 0 { Mv::Valley } else { Mv::Mountain };
    pair[0] == minority && pair[1] == minority
}

#[cfg(debug_assertions)]
fn all_blockers(mu: &MvAssignment, p: &CreasePattern, f: FaceId) -> Vec<VertexId> {
    let mut vs: Vec<VertexId> = p.faces[f.0].verts.clone();
    vs.sort();
    vs.into_iter().filter(|&v| blocks(mu, p, f, v)).collect()
}

/// The six faces around an interior vertex, counterclockwise;  ring[k]
/// sits between star edges k and k+1.
fn face_ring(p: &CreasePattern, v: VertexId) -> Vec<FaceId> {
    let star = p.star(v).expect("face ring needs an interior vertex");
    let d = star.degree();
    assert_eq!(d, 6, "triangle-lattice interior vertices have degree six");
    (0..d)
        .map(|k| {
            let fa = p.edges[star.edges[k].0].faces;
            let fb = p.edges[star.edges[(k + 1) % d].0].faces;
            let in_b = |f: FaceId| fb.0 == f || fb.1 == Some(f);
            if in_b(fa.0) {
                fa.0
            } else {
                let f = fa.1.expect("consecutive star edges share a face");
                assert!(in_b(f), "consecutive star edges share a face");
                f
            }
        })
        .collect()
}

/// The three faces around blocking vertex v that do not share an edge
/// with f, counterclockwise from f; the middle one is opposite f. Both of
/// each candidate's creases at v are in the majority, so flipping any one
/// of them turns v's type over and unblocks f, and at least one candidate
/// is always flippable.
pub fn unblock_candidates(
    mu: &MvAssignment,
    p: &CreasePattern,
    f: FaceId,
    v: VertexId,
) -> Result<[FaceId; 3], ReconfigError> {
    check_family(p)?;
    if f.0 >= p.face_count() {
        return Err(ReconfigError::UnknownFace(f));
    }
    if !is_locally_valid(mu, p) {
        return Err(ReconfigError::InvalidAssignment);
    }
    if !blocks(mu, p, f, v) {
        return Err(ReconfigError::NotBlocking { f, v });
    }
    let ring = face_ring(p, v);
    let pos = ring
        .iter()
        .position(|&g| g == f)
        .expect("a blocked face sits in its blocker's ring");
    Ok([ring[(pos + 2) % 6], ring[(pos + 3) % 6], ring[(pos + 4) % 6]])
}

/// Sweep bookkeeping over a rows x cols parallelogram. Edge ids follow
/// the generator: v:{i}:{j} vertical, m:{i}:{j} at -30 degrees, p:{i}:{j}
/// at +30 degrees; faces are row-major, upward triangle of a cell first.
struct Sweep<'a> {
    p: &'a CreasePattern,
    rows: usize,
    cols: usize,
    cur: MvAssignment,
    seq: FlipSequence,
    /// Edges the sweep has fixed; no later flip may touch them.
    #[cfg(debug_assertions)]
    fixed: std::collections::BTreeSet<crate::pattern::EdgeId>,
}

impl<'a> Sweep<'a> {
    fn get(&self, tag: char, i: usize, j: usize) -> Mv {
        let e = self
            .p
            .edge_by_id(&format!("{tag}:{i}:{j}"))
            .expect("lattice edge id");
        self.cur.get(e)
    }

    fn upper(&self, i: usize, j: usize) -> FaceId {
        FaceId(2 * (i * self.cols + j))
    }

    fn lower(&self, i: usize, j: usize) -> FaceId {
        FaceId(2 * (i * self.cols + j) + 1)
    }

    /// Lattice vertex (i, j), via the vertical edge it tops or bottoms.
    fn vert(&self, i: usize, j: usize) -> VertexId {
        if i < self.rows {
            let e = self.p.edge_by_id(&format!("v:{i}:{j}")).expect("lattice edge id");
            self.p.edges[e.0].ends.0
        } else {
            let k = i - 1;
            let e = self.p.edge_by_id(&format!("v:{k}:{j}")).expect("lattice edge id");
            self.p.edges[e.0].ends.1
        }
    }

    fn mark(&mut self, tag: char, i: usize, j: usize) {
        #[cfg(debug_assertions)]
        {
            let e = self.p.edge_by_id(&format!("{tag}:{i}:{j}")).expect("lattice edge id");
            self.fixed.insert(e);
        }
        #[cfg(not(debug_assertions))]
        let _ = (tag, i, j);
    }

    fn flip(&mut self, f: FaceId) {
        #[cfg(debug_assertions)]
        for e in &self.p.faces[f.0].edges {
            assert!(!self.fixed.contains(e), "sweep flip touches a fixed edge {e}");
        }
        debug_assert_eq!(
            is_flippable(&self.cur, self.p, f),
            Ok(true),
            "sweep only flips flippable faces"
        );
        self.cur = flip_face(&self.cur, self.p, f).unwrap();
        self.seq.push(f);
    }

    /// Flip f, unblocking it first if needed: at most two flips. The
    /// sweep's case analysis guarantees expect_w is the only vertex that
    /// can block f, and that f stays unblocked once its blocker turns.
    fn fix(&mut self, f: FaceId, expect_w: Option<VertexId>) -> Result<(), ReconfigError> {
        let before = self.seq.len();
        let (ok, blocker) = triangle_flippable(&self.cur, self.p, f).map_err(lift)?;
        if !ok {
            let w = blocker.unwrap();
            debug_assert_eq!(
                all_blockers(&self.cur, self.p, f),
                vec![w],
                "a sweep step has a unique possible blocker"
            );
            debug_assert_eq!(Some(w), expect_w, "blocker off the frontier");
            let cands = unblock_candidates(&self.cur, self.p, f, w)?;
            let pick = cands
                .iter()
                .copied()
                .filter(|&g| is_flippable(&self.cur, self.p, g).unwrap())
                .min()
                .expect("one of the three faces opposite a blocker is flippable");
            self.flip(pick);
            debug_assert!(!blocks(&self.cur, self.p, f, w), "unblock flip must turn the blocker");
        }
        self.flip(f);
        assert!(self.seq.len() - before <= 2, "a sweep step costs at most two flips");
        let _ = expect_w;
        Ok(())
    }
}

/// Carry mu to the canonical configuration by a sequence of at most 2n
/// single face flips, n the face count, every intermediate state valid.
/// Parallelogram regions only.
pub fn reconfigure_to_canonical(
    mu: &MvAssignment,
    p: &CreasePattern,
) -> Result<FlipSequence, ReconfigError> {
    check_family(p)?;
    let PatternSpec::Triangle { rows, cols } = p.spec else {
        return Err(ReconfigError::UnsupportedRegion);
    };
    if !is_locally_valid(mu, p) {
        return Err(ReconfigError::InvalidAssignment);
    }
    let mut s = Sweep {
        p,
        rows,
        cols,
        cur: mu.clone(),
        seq: Vec::new(),
        #[cfg(debug_assertions)]
        fixed: Default::default(),
    };

    // strip 0, top to bottom: cell i's diagonals m:i:0 then p:i:0. Both
    // fixing faces have at most one interior vertex, at the right end of
    // the edge being fixed; when p:i:0 is wrong, (i, 1) already carries
    // two mountains of it, so only (i+1, 1) can block the lower face.
    for i in 0..rows {
        if i >= 1 && s.get('m', i, 0) == Mv::Valley {
            s.fix(s.upper(i, 0), interior_vert(&s, i, 1))?;
        }
        if i >= 1 {
            s.mark('m', i, 0);
        }
        if s.get('p', i, 0) == Mv::Mountain {
            if i == 0 {
                s.fix(s.upper(0, 0), None)?;
            } else {
                s.fix(s.lower(i, 0), interior_vert(&s, i + 1, 1))?;
            }
        }
        s.mark('p', i, 0);
    }

    for j in 1..cols {
        // verticals of line j, top to bottom: flip the upward triangle to
        // the right. Its left vertices cannot block: either would need a
        // third mountain at a vertex whose fixed creases already carry
        // one, making it a mountain vertex whose minority is valley.
        for i in 0..rows {
            if s.get('v', i, j) == Mv::Mountain {
                debug_assert!(!blocks(&s.cur, p, s.upper(i, j), s.vert(i, j)));
                debug_assert!(!blocks(&s.cur, p, s.upper(i, j), s.vert(i + 1, j)));
                s.fix(s.upper(i, j), interior_vert(&s, i, j + 1))?;
            }
            s.mark('v', i, j);
        }
        // diagonals of strip j, top to bottom. Frontier vertex (i, j) has
        // four fixed creases, one mountain and three valleys, so validity
        // forces its two open diagonals to split one mountain one valley;
        // when they are swapped, the downward triangle between them mends
        // both at once, and only its right vertex (i, j+1) can block.
        for i in 1..rows {
            debug_assert_eq!(maekawa_sum(&s.cur, p, s.vert(i, j)), Ok(-2));
            match (s.get('p', i - 1, j), s.get('m', i, j)) {
                (Mv::Valley, Mv::Mountain) => {}
                (Mv::Mountain, Mv::Valley) => {
                    debug_assert!(!blocks(&s.cur, p, s.lower(i - 1, j), s.vert(i - 1, j + 1)));
                    s.fix(s.lower(i - 1, j), interior_vert(&s, i, j + 1))?;
                }
                _ => unreachable!("a frontier vertex splits its open diagonals"),
            }
            s.mark('p', i - 1, j);
            s.mark('m', i, j);
        }
        // bottom diagonal of the strip: its only interior vertex would
        // need two mountains of the face plus the fixed mountain m, three
        // at a valley vertex, so the face is never blocked.
        if s.get('p', rows - 1, j) == Mv::Mountain {
            let before = s.seq.len();
            s.fix(s.lower(rows - 1, j), None)?;
            assert_eq!(s.seq.len(), before + 1, "the bottom diagonal is never blocked");
        }
        s.mark('p', rows - 1, j);
    }

    let n = p.face_count();
    assert!(s.seq.len() <= 2 * n, "sweep exceeded its 2n flip bound");
    assert!(
        s.cur.eq_on_interior(&triangle::canonical_mv(p), p),
        "sweep must end canonical"
    );
    Ok(s.seq)
}

/// (i, j) when it is an interior lattice vertex, None on the region
/// boundary, where nothing can block.
fn interior_vert(s: &Sweep, i: usize, j: usize) -> Option<VertexId> {
    if (1..s.rows).contains(&i) && (1..s.cols).contains(&j) {
        Some(s.vert(i, j))
    } else {
        None
    }
}

/// Any valid assignment to any other, through the canonical
/// configuration: at most 4n flips, every intermediate state valid.
pub fn reconfigure(
    mua: &MvAssignment,
    mub: &MvAssignment,
    p: &CreasePattern,
) -> Result<FlipSequence, ReconfigError> {
    let mut seq = reconfigure_to_canonical(mua, p)?;
    let back = reconfigure_to_canonical(mub, p)?;
    seq.extend(back.iter().rev());
    debug_assert!(crate::flip::apply_sequence(mua, p, &seq, true)
        .map(|end| end.eq_on_interior(mub, p))
        .unwrap_or(false));
    Ok(seq)
}

const EXACT_SEARCH_BUDGET: usize = 1_000_000;

/// A provably shortest flip sequence from mua to mub: breadth-first
/// search over the valid states reachable from mua, expanding at most a
/// million of them before giving up. Works on any triangle-lattice
/// region, hexagonal stars included.
pub fn exact_min_flips_triangle(
    mua: &MvAssignment,
    mub: &MvAssignment,
    p: &CreasePattern,
) -> Result<FlipSequence, ReconfigError> {
    exact_min_flips_with_budget(mua, mub, p, EXACT_SEARCH_BUDGET)
}

fn exact_min_flips_with_budget(
    mua: &MvAssignment,
    mub: &MvAssignment,
    p: &CreasePattern,
    budget: usize,
) -> Result<FlipSequence, ReconfigError> {
    check_family(p)?;
    if !is_locally_valid(mua, p) || !is_locally_valid(mub, p) {
        return Err(ReconfigError::InvalidAssignment);
    }
    let constrained = p.constrained_edges();
    if constrained.len() > 64 {
        return Err(ReconfigError::TooLarge { edges: constrained.len() });
    }
    let start = encode(&constrained, mua);
    let goal = encode(&constrained, mub);
    // parent[s] = the state and flip that first reached s
    let mut parent: BTreeMap<u64, Option<(u64, FaceId)>> = BTreeMap::new();
    parent.insert(start, None);
    let mut queue = VecDeque::from([start]);
    let mut explored = 0usize;
    while let Some(state) = queue.pop_front() {
        if state == goal {
            let mut seq = Vec::new();
            let mut at = state;
            while let Some((prev, f)) = parent[&at] {
                seq.push(f);
                at = prev;
            }
            seq.reverse();
            return Ok(seq);
        }
        if explored >= budget {
            return Err(ReconfigError::BudgetExceeded { explored });
        }
        explored += 1;
        let mu = decode(p, &constrained, state);
        for f in (0..p.face_count()).map(FaceId) {
            if is_flippable(&mu, p, f).map_err(lift)? {
                let next = encode(&constrained, &flip_face(&mu, p, f).unwrap());
                if let btree_map::Entry::Vacant(slot) = parent.entry(next) {
                    slot.insert(Some((state, f)));
                    queue.push_back(next);
                }
            }
        }
    }
    Err(ReconfigError::Unreachable)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flip::apply_sequence;
    use crate::flipgraph::{bfs_distance, build_flip_graph, enumerate_valid};
    use crate::pattern::triangle::{build_hex_star, build_triangle_region};

    #[test]
    fn canonical_config_is_valid_and_a_fixed_point() {
        for p in [build_triangle_region(2, 3).unwrap(), build_hex_star(1).unwrap()] {
            let c = canonical_config(&p).unwrap();
            assert!(is_locally_valid(&c, &p));
            for v in p.interior_vertices() {
                assert_eq!(vertex_class(&c, &p, v), Ok(VertexClass::Valley));
            }
        }
        let p = build_triangle_region(2, 3).unwrap();
        let c = canonical_config(&p).unwrap();
        assert!(reconfigure_to_canonical(&c, &p).unwrap().is_empty());
    }

    #[test]
    fn rejects_wrong_family_wrong_region_and_invalid_input() {
        let sq = crate::pattern::square::build_square_grid(2, 2).unwrap();
        let sq_mu = crate::pattern::square::canonical_mv(&sq);
        assert!(matches!(canonical_config(&sq), Err(ReconfigError::WrongFamily { .. })));
        assert!(matches!(
            reconfigure_to_canonical(&sq_mu, &sq),
            Err(ReconfigError::WrongFamily { .. })
        ));
        assert!(matches!(
            exact_min_flips_triangle(&sq_mu, &sq_mu, &sq),
            Err(ReconfigError::WrongFamily { .. })
        ));

        let hex = build_hex_star(1).unwrap();
        let c = canonical_config(&hex).unwrap();
        assert_eq!(reconfigure_to_canonical(&c, &hex), Err(ReconfigError::UnsupportedRegion));

        let p = build_triangle_region(2, 2).unwrap();
        let all_m = MvAssignment::uniform(&p, Mv::Mountain);
        assert_eq!(reconfigure_to_canonical(&all_m, &p), Err(ReconfigError::InvalidAssignment));
        let good = canonical_config(&p).unwrap();
        assert_eq!(
            exact_min_flips_triangle(&all_m, &good, &p),
            Err(ReconfigError::InvalidAssignment)
        );
    }

    #[test]
    fn vertex_class_reads_the_maekawa_sign() {
        let p = build_triangle_region(2, 2).unwrap();
        let c = canonical_config(&p).unwrap();
        let v = p.interior_vertices().next().unwrap();
        assert_eq!(vertex_class(&c, &p, v).unwrap().minority(), Mv::Mountain);
        let mut neg = c.clone();
        for e in (0..p.edge_count()).map(crate::pattern::EdgeId) {
            neg.toggle(e);
        }
        assert_eq!(vertex_class(&neg, &p, v), Ok(VertexClass::Mountain));
        let b = VertexId(
            p.vertices.iter().position(|w| !w.interior).expect("regions have boundary"),
        );
        assert_eq!(vertex_class(&c, &p, b), Err(ReconfigError::BoundaryVertex(b)));
        let all_m = MvAssignment::uniform(&p, Mv::Mountain);
        assert_eq!(vertex_class(&all_m, &p, v), Err(ReconfigError::InvalidAssignment));
    }

    #[test]
    fn sweep_reaches_canonical_within_2n_exhaustively() {
        for (rows, cols) in [(2, 2), (2, 3), (3, 2)] {
            let p = build_triangle_region(rows, cols).unwrap();
            let n = p.face_count();
            let target = canonical_config(&p).unwrap();
            for mu in &enumerate_valid(&p).unwrap().assignments {
                let seq = reconfigure_to_canonical(mu, &p).unwrap();
                assert!(seq.len() <= 2 * n, "{} flips on {rows}x{cols}", seq.len());
                let end = apply_sequence(mu, &p, &seq, true).unwrap();
                assert!(end.eq_on_interior(&target, &p));
            }
        }
    }

    #[test]
    fn sweep_handles_larger_random_states() {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (rows, cols, samples) in [(3, 4, 10), (4, 4, 4), (5, 3, 4)] {
            let p = build_triangle_region(rows, cols).unwrap();
            let n = p.face_count();
            let target = canonical_config(&p).unwrap();
            for _ in 0..samples {
                let mu = crate::flipgraph::sample_valid(&p, &mut rng, 2_000_000)
                    .expect("rejection sampling within tries");
                let seq = reconfigure_to_canonical(&mu, &p).unwrap();
                assert!(seq.len() <= 2 * n);
                let end = apply_sequence(&mu, &p, &seq, true).unwrap();
                assert!(end.eq_on_interior(&target, &p));
            }
        }
    }

    #[test]
    fn unblock_candidates_satisfy_the_lemma_exhaustively() {
        for p in [build_triangle_region(2, 2).unwrap(), build_hex_star(1).unwrap()] {
            let mut blocked_seen = 0;
            for mu in &enumerate_valid(&p).unwrap().assignments {
                for f in (0..p.face_count()).map(FaceId) {
                    for v in p.interior_vertices() {
                        if !blocks(mu, &p, f, v) {
                            assert_eq!(
                                unblock_candidates(mu, &p, f, v),
                                Err(ReconfigError::NotBlocking { f, v })
                            );
                            continue;
                        }
                        blocked_seen += 1;
                        let cands = unblock_candidates(mu, &p, f, v).unwrap();
                        assert!(cands[0] != cands[1] && cands[1] != cands[2] && cands[0] != cands[2]);
                        for g in cands {
                            assert_ne!(g, f);
                            assert!(p.faces[g.0].verts.contains(&v));
                            let f_edges = &p.faces[f.0].edges;
                            assert!(p.faces[g.0].edges.iter().all(|e| !f_edges.contains(e)));
                        }
                        // the middle candidate is the face opposite f at v
                        let shared: Vec<VertexId> = p.faces[cands[1].0]
                            .verts
                            .iter()
                            .copied()
                            .filter(|w| p.faces[f.0].verts.contains(w))
                            .collect();
                        assert_eq!(shared, vec![v]);
                        // flipping any flippable candidate turns v over, and at
                        // least one of the three is flippable
                        let mut usable = 0;
                        for g in cands {
                            if is_flippable(mu, &p, g).unwrap() {
                                usable += 1;
                                let after = flip_face(mu, &p, g).unwrap();
                                assert!(!blocks(&after, &p, f, v));
                            }
                        }
                        assert!(usable >= 1, "one candidate must be flippable");
                    }
                }
            }
            assert!(blocked_seen > 0, "enumeration must include blocked faces");
        }
        let p = build_triangle_region(2, 2).unwrap();
        let c = canonical_config(&p).unwrap();
        let v = p.interior_vertices().next().unwrap();
        assert_eq!(
            unblock_candidates(&c, &p, FaceId(99), v),
            Err(ReconfigError::UnknownFace(FaceId(99)))
        );
    }

    #[test]
    fn reconfigure_connects_all_pairs_within_4n() {
        let p = build_triangle_region(2, 2).unwrap();
        let n = p.face_count();
        let g = build_flip_graph(&p).unwrap();
        let en = enumerate_valid(&p).unwrap();
        let c = canonical_config(&p).unwrap();
        for a in &en.assignments {
            let back = reconfigure_to_canonical(a, &p).unwrap();
            for b in &en.assignments {
                let seq = reconfigure(a, b, &p).unwrap();
                assert!(seq.len() <= 4 * n);
                let end = apply_sequence(a, &p, &seq, true).unwrap();
                assert!(end.eq_on_interior(b, &p));
                let shortest = bfs_distance(&g, a, b).unwrap().expect("one component");
                assert!(seq.len() >= shortest);
            }
            // from the canonical configuration the route is the pure rewind
            let rewind = reconfigure(&c, a, &p).unwrap();
            assert_eq!(rewind, back.iter().rev().copied().collect::<Vec<_>>());
        }
    }

    #[test]
    fn exact_search_matches_the_oracle() {
        for p in [build_hex_star(1).unwrap(), build_triangle_region(2, 2).unwrap()] {
            let g = build_flip_graph(&p).unwrap();
            let en = enumerate_valid(&p).unwrap();
            assert_eq!(en.projected_count(), 30);
            for a in &en.assignments {
                for b in &en.assignments {
                    match bfs_distance(&g, a, b).unwrap() {
                        Some(d) => {
                            let seq = exact_min_flips_triangle(a, b, &p).unwrap();
                            assert_eq!(seq.len(), d);
                            let end = apply_sequence(a, &p, &seq, true).unwrap();
                            assert_eq!(en.encode(&end), en.encode(b));
                        }
                        None => assert_eq!(
                            exact_min_flips_triangle(a, b, &p),
                            Err(ReconfigError::Unreachable)
                        ),
                    }
                }
            }
        }
    }

    #[test]
    fn exact_search_budget_is_enforced() {
        let p = build_triangle_region(2, 2).unwrap();
        let g = build_flip_graph(&p).unwrap();
        let en = enumerate_valid(&p).unwrap();
        let a = &en.assignments[0];
        let b = en
            .assignments
            .iter()
            .find(|b| bfs_distance(&g, a, b).unwrap().map_or(false, |d| d >= 2))
            .expect("some state two flips away");
        assert_eq!(
            exact_min_flips_with_budget(a, b, &p, 0),
            Err(ReconfigError::BudgetExceeded { explored: 0 })
        );
        assert_eq!(
            exact_min_flips_with_budget(a, b, &p, 1),
            Err(ReconfigError::BudgetExceeded { explored: 1 })
        );
        assert!(exact_min_flips_with_budget(a, b, &p, 1_000_000).is_ok());
    }
}
