//! Shared construction pipeline for the generators.
//!
//! Generators add exact vertices and edges, optionally declare the face
//! cycles they know, and provide symbolic direction angles per interior
//! vertex. `finish` then walks the planar subdivision with half-edges,
//! cross-checks declared faces against the walked ones, wires edge-face
//! incidence, finds the boundary, and assembles vertex stars whose exact
//! sector angles must agree with the geometry.

use super::{
    CreasePattern, Edge, EdgeId, EdgeKind, Face, FaceId, FaceKind, PatternSpec, Star, Vertex,
    VertexId,
};
use crate::exact::{cmp_direction, rat, Point, Q3, Rat};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BuildError {
    #[error("pattern dimensions must be at least {min}, got {got}")]
    TooSmall { min: usize, got: usize },
    #[error("pattern dimensions too large: {0}")]
    TooLarge(String),
    #[error("alpha must be strictly between 0 and 90 degrees, got {0}")]
    AlphaRange(Rat),
}

pub(crate) struct Builder {
    spec: PatternSpec,
    verts: Vec<Point>,
    vmap: BTreeMap<Point, VertexId>,
    edges: Vec<(String, VertexId, VertexId, EdgeKind)>,
    emap: BTreeMap<(VertexId, VertexId), EdgeId>,
    declared_faces: Vec<(Vec<VertexId>, FaceKind)>,
}

impl Builder {
    pub fn new(spec: PatternSpec) -> Self {
        Builder {
            spec,
            verts: Vec::new(),
            vmap: BTreeMap::new(),
            edges: Vec::new(),
            emap: BTreeMap::new(),
            declared_faces: Vec::new(),
        }
    }

    pub fn vertex(&mut self, p: Point) -> VertexId {
        if let Some(&v) = self.vmap.get(&p) {
            return v;
        }
        let v = VertexId(self.verts.len());
        self.verts.push(p);
        self.vmap.insert(p, v);
        v
    }

    pub fn pos(&self, v: VertexId) -> Point {
        self.verts[v.0]
    }

    pub fn edge(&mut self, id: String, a: VertexId, b: VertexId, kind: EdgeKind) -> EdgeId {
        assert_ne!(a, b, "degenerate edge {id}");
        let key = if a < b { (a, b) } else { (b, a) };
        assert!(
            !self.emap.contains_key(&key),
            "duplicate edge {id} between {a} and {b}"
        );
        let e = EdgeId(self.edges.len());
        self.edges.push((id, a, b, kind));
        self.emap.insert(key, e);
        e
    }

    /// Declare a known face as a counterclockwise vertex cycle.
    pub fn face(&mut self, verts: Vec<VertexId>, kind: FaceKind) {
        self.declared_faces.push((verts, kind));
    }

    /// Assemble the pattern. `angle_from(v, other, kind)` gives the exact
    /// symbolic direction in degrees of the edge leaving interior vertex v
    /// toward `other`. `classify` names walked faces when no faces were
    /// declared.
    pub fn finish(
        self,
        angle_from: impl Fn(&Builder, VertexId, VertexId, EdgeKind) -> Rat,
        classify: impl Fn(&[EdgeKind], bool) -> FaceKind,
    ) -> CreasePattern {
        let nv = self.verts.len();
        let ne = self.edges.len();
        assert!(nv >= 3 && ne >= 3, "pattern too small to bound a face");

        // Half-edge h = 2e + d; d = 0 runs ends.0 -> ends.1.
        let tail = |h: usize| {
            let (_, a, b, _) = self.edges[h / 2];
            if h % 2 == 0 {
                a
            } else {
                b
            }
        };
        let head = |h: usize| {
            let (_, a, b, _) = self.edges[h / 2];
            if h % 2 == 0 {
                b
            } else {
                a
            }
        };

        // Outgoing half-edges per vertex, counterclockwise from east.
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); nv];
        for h in 0..2 * ne {
            out[tail(h).0].push(h);
        }
        let dir = |h: usize| -> (Q3, Q3) {
            let t = self.verts[tail(h).0];
            let u = self.verts[head(h).0];
            (u.0 - t.0, u.1 - t.1)
        };
        for ring in &mut out {
            assert!(ring.len() >= 2, "isolated or dangling vertex");
            ring.sort_by(|&a, &b| cmp_direction(dir(a), dir(b)));
            for w in ring.windows(2) {
                assert_ne!(
                    cmp_direction(dir(w[0]), dir(w[1])),
                    std::cmp::Ordering::Equal,
                    "two edges leave a vertex in the same direction"
                );
            }
        }
        let mut ring_index = vec![usize::MAX; 2 * ne];
        for ring in &out {
            for (i, &h) in ring.iter().enumerate() {
                ring_index[h] = i;
            }
        }

        // Face-on-left walk: after u->v continue with the clockwise
        // predecessor of v->u in v's ring.
        let next = |h: usize| -> usize {
            let r = h ^ 1;
            let ring = &out[head(h).0];
            let i = ring_index[r];
            ring[(i + ring.len() - 1) % ring.len()]
        };

        let mut seen = vec![false; 2 * ne];
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for h0 in 0..2 * ne {
            if seen[h0] {
                continue;
            }
            let mut cyc = Vec::new();
            let mut h = h0;
            loop {
                assert!(!seen[h], "half-edge revisited; subdivision is inconsistent");
                seen[h] = true;
                cyc.push(h);
                h = next(h);
                if h == h0 {
                    break;
                }
            }
            cycles.push(cyc);
        }

        // Twice the signed area of a cycle's vertex polygon.
        let area2 = |cyc: &[usize]| -> Q3 {
            let mut s = Q3::zero();
            for &h in cyc {
                let p = self.verts[tail(h).0];
                let q = self.verts[head(h).0];
                s = s + (p.0 * q.1 - q.0 * p.1);
            }
            s
        };

        let mut bounded: Vec<Vec<usize>> = Vec::new();
        let mut outer: Option<Vec<usize>> = None;
        let mut inner_area = Q3::zero();
        for cyc in cycles {
            let a = area2(&cyc);
            match a.sign() {
                std::cmp::Ordering::Greater => {
                    inner_area = inner_area + a;
                    bounded.push(cyc);
                }
                std::cmp::Ordering::Less => {
                    assert!(outer.is_none(), "disconnected pattern: two outer cycles");
                    outer = Some(cyc);
                }
                std::cmp::Ordering::Equal => panic!("degenerate zero-area face"),
            }
        }
        let outer = outer.expect("no outer cycle");
        assert_eq!(
            (inner_area + area2(&outer)).sign(),
            std::cmp::Ordering::Equal,
            "face areas do not tile the paper polygon"
        );
        assert_eq!(
            nv as i64 - ne as i64 + bounded.len() as i64,
            1,
            "Euler check failed"
        );
        for cyc in &bounded {
            let mut vs: Vec<VertexId> = cyc.iter().map(|&h| tail(h)).collect();
            vs.sort();
            vs.dedup();
            assert_eq!(vs.len(), cyc.len(), "walked face is not a simple cycle");
        }

        // Rotate a cycle so its smallest vertex comes first.
        let canon = |vs: &[VertexId]| -> Vec<VertexId> {
            let k = vs
                .iter()
                .enumerate()
                .min_by_key(|(_, v)| **v)
                .map(|(i, _)| i)
                .unwrap();
            let mut out = Vec::with_capacity(vs.len());
            out.extend_from_slice(&vs[k..]);
            out.extend_from_slice(&vs[..k]);
            out
        };

        let cycle_verts = |cyc: &[usize]| -> Vec<VertexId> { cyc.iter().map(|&h| tail(h)).collect() };
        let cycle_kinds = |cyc: &[usize]| -> Vec<EdgeKind> {
            cyc.iter().map(|&h| self.edges[h / 2].3).collect()
        };

        // Pair declared faces with walked ones, or classify walked ones.
        let faces_vk: Vec<(Vec<VertexId>, FaceKind)> = if !self.declared_faces.is_empty() {
            assert_eq!(
                self.declared_faces.len(),
                bounded.len(),
                "declared and walked face counts differ"
            );
            let mut walked: BTreeMap<Vec<VertexId>, ()> = BTreeMap::new();
            for cyc in &bounded {
                walked.insert(canon(&cycle_verts(cyc)), ());
            }
            for (vs, _) in &self.declared_faces {
                assert!(
                    walked.contains_key(&canon(vs)),
                    "declared face {vs:?} was not walked; check orientation"
                );
            }
            self.declared_faces.clone()
        } else {
            let mut named: Vec<(usize, Vec<VertexId>, FaceKind)> = bounded
                .iter()
                .map(|cyc| {
                    let vs = cycle_verts(cyc);
                    let kinds = cycle_kinds(cyc);
                    let has_border = kinds.contains(&EdgeKind::Border);
                    let kind = classify(&kinds, has_border);
                    (kind_rank(kind), canon(&vs), kind)
                })
                .collect();
            named.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            named.into_iter().map(|(_, vs, k)| (vs, k)).collect()
        };

        // Edge lookup by unordered endpoint pair.
        let edge_between = |a: VertexId, b: VertexId| -> EdgeId {
            let key = if a < b { (a, b) } else { (b, a) };
            self.emap[&key]
        };

        let mut faces: Vec<Face> = Vec::with_capacity(faces_vk.len());
        for (vs, kind) in &faces_vk {
            let n = vs.len();
            let edges: Vec<EdgeId> =
                (0..n).map(|i| edge_between(vs[i], vs[(i + 1) % n])).collect();
            faces.push(Face { verts: vs.clone(), edges, kind: *kind });
        }

        let mut edge_faces: Vec<(Option<FaceId>, Option<FaceId>)> = vec![(None, None); ne];
        for (fi, face) in faces.iter().enumerate() {
            for &e in &face.edges {
                let slot = &mut edge_faces[e.0];
                if slot.0.is_none() {
                    slot.0 = Some(FaceId(fi));
                } else {
                    assert!(slot.1.is_none(), "edge on three faces");
                    slot.1 = Some(FaceId(fi));
                }
            }
        }

        let edges: Vec<Edge> = self
            .edges
            .iter()
            .zip(edge_faces.iter())
            .map(|((id, a, b, kind), &(f0, f1))| Edge {
                id: id.clone(),
                ends: (*a, *b),
                kind: *kind,
                faces: (f0.expect("edge bounds no face"), f1),
            })
            .collect();

        {
            let mut ids: Vec<&str> = edges.iter().map(|e| e.id.as_str()).collect();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), edges.len(), "duplicate canonical edge id");
        }

        // Interior vertex: incident to no boundary edge.
        let mut interior = vec![true; nv];
        for e in &edges {
            if e.faces.1.is_none() {
                interior[e.ends.0 .0] = false;
                interior[e.ends.1 .0] = false;
            }
        }

        // Boundary cycle, counterclockwise: the outer walk reversed.
        let boundary: Vec<VertexId> = {
            let mut vs = cycle_verts(&outer);
            vs.reverse();
            for &v in &vs {
                assert!(!interior[v.0], "interior vertex on the outer cycle");
            }
            vs
        };

        // Stars for interior vertices, with symbolic sector angles checked
        // against the geometric ring.
        let full = rat(360, 1);
        let mut stars: Vec<Option<Star>> = vec![None; nv];
        for v in 0..nv {
            if !interior[v] {
                continue;
            }
            let ring = &out[v];
            let star_edges: Vec<EdgeId> = ring.iter().map(|&h| EdgeId(h / 2)).collect();
            let angles: Vec<Rat> = ring
                .iter()
                .map(|&h| {
                    let a = angle_from(&self, VertexId(v), head(h), self.edges[h / 2].3);
                    assert!(a >= rat(0, 1) && a < full, "direction angle out of range");
                    a
                })
                .collect();
            let d = ring.len();
            let mut sectors = Vec::with_capacity(d);
            let mut sum = rat(0, 1);
            for i in 0..d {
                let mut s = angles[(i + 1) % d] - angles[i];
                if s <= rat(0, 1) {
                    s += full;
                }
                assert!(s > rat(0, 1), "nonpositive sector at vertex {v}");
                sectors.push(s);
                sum += s;
            }
            // positive sectors summing to exactly 360 pin the symbolic
            // angles to the geometric cyclic order
            assert_eq!(sum, full, "sector angles at vertex {v} do not sum to 360");
            stars[v] = Some(Star { edges: star_edges, sectors });
        }

        let vertices: Vec<Vertex> = self
            .verts
            .iter()
            .zip(interior.iter())
            .map(|(&pos, &i)| Vertex { pos, interior: i })
            .collect();

        CreasePattern { spec: self.spec, vertices, edges, faces, stars, boundary }
    }
}

fn kind_rank(k: FaceKind) -> usize {
    match k {
        FaceKind::TwistSquare => 0,
        FaceKind::TwistPleat => 1,
        FaceKind::TwistGap => 2,
        FaceKind::TwistMargin => 3,
        _ => 4,
    }
}
