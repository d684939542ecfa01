//! Edge orientations and half-orientations of maps.
//!
//! An [`Orientation`] stores, per edge, the dart sitting at the edge's head
//! vertex.  The geodesic orientation (bipartite maps) points every edge toward
//! the endpoint closer to the root vertex; the dual-geodesic orientation
//! (bicolorable maps) is its transport through duality and is the minimum of
//! the face-flip lattice: the unique bicolorable orientation with no clockwise
//! face besides possibly the root face.
//!
//! A [`HalfOrientation`] additionally allows bi-oriented edges, which arise as
//! the geodesic construction of non-bipartite (resp. non-bicolorable) maps.

use crate::map::{Dart, EdgeId, RotationMap};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrientError {
    #[error("map is not bipartite")]
    NotBipartite,
    #[error("map is not bicolorable")]
    NotBicolorable,
    #[error("face is not a flippable (clockwise non-root) face")]
    NotFlippable,
    #[error("vertex is not a pushable (non-root sink) vertex")]
    NotPushable,
    #[error("orientation is not bicolorable")]
    NotBicolorableOrientation,
}

/// Full orientation: one head dart per edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    heads: Vec<Dart>,
}

/// State of one edge in a half-orientation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Toward(Dart),
    Bi,
}

/// Orientation in which some edges may be bi-oriented.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HalfOrientation {
    states: Vec<EdgeState>,
}

impl Orientation {
    pub fn new(m: &RotationMap, heads: Vec<Dart>) -> Self {
        assert_eq!(heads.len(), m.n_edges());
        for (e, &h) in heads.iter().enumerate() {
            assert_eq!(m.edge_of(h), e, "head dart must belong to its edge");
        }
        Orientation { heads }
    }

    pub fn head(&self, e: EdgeId) -> Dart {
        self.heads[e]
    }

    pub fn heads(&self) -> &[Dart] {
        &self.heads
    }

    /// True when the edge of dart `d` points toward the vertex of `d`.
    pub fn points_to_dart(&self, m: &RotationMap, d: Dart) -> bool {
        self.heads[m.edge_of(d)] == d
    }

    /// Reverses every edge.
    pub fn reversed(&self, m: &RotationMap) -> Orientation {
        Orientation {
            heads: self.heads.iter().map(|&h| m.alpha(h)).collect(),
        }
    }

    /// Transport through duality: an orientation of `m` induces one of
    /// `m.dual()` (same darts, same edges) with `head* = alpha(head)`.
    pub fn dual_transport(&self, m: &RotationMap) -> Orientation {
        self.reversed(m)
    }

    /// Indegree and outdegree of every vertex.
    pub fn in_out_degrees(&self, m: &RotationMap) -> Vec<(usize, usize)> {
        let mut deg = vec![(0, 0); m.n_vertices()];
        for e in 0..m.n_edges() {
            let h = self.heads[e];
            deg[m.vertex_of(h)].0 += 1;
            deg[m.vertex_of(m.alpha(h))].1 += 1;
        }
        deg
    }

    pub fn to_half(&self) -> HalfOrientation {
        HalfOrientation {
            states: self.heads.iter().map(|&h| EdgeState::Toward(h)).collect(),
        }
    }

    pub fn to_json_value(&self) -> OrientationJson {
        OrientationJson {
            heads: self.heads.iter().map(|&d| d + 1).collect(),
            bioriented: None,
        }
    }
}

impl HalfOrientation {
    pub fn new(m: &RotationMap, states: Vec<EdgeState>) -> Self {
        assert_eq!(states.len(), m.n_edges());
        HalfOrientation { states }
    }

    pub fn state(&self, e: EdgeId) -> EdgeState {
        self.states[e]
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    pub fn bioriented_edges(&self) -> Vec<EdgeId> {
        (0..self.states.len())
            .filter(|&e| self.states[e] == EdgeState::Bi)
            .collect()
    }

    /// Converts to a full orientation when no edge is bi-oriented.
    pub fn to_full(&self) -> Option<Orientation> {
        let mut heads = Vec::with_capacity(self.states.len());
        for &s in &self.states {
            match s {
                EdgeState::Toward(h) => heads.push(h),
                EdgeState::Bi => return None,
            }
        }
        Some(Orientation { heads })
    }

    pub fn to_json_value(&self, m: &RotationMap) -> OrientationJson {
        let heads = self
            .states
            .iter()
            .enumerate()
            .map(|(e, &s)| match s {
                EdgeState::Toward(h) => h + 1,
                EdgeState::Bi => m.edge_darts(e).0 + 1,
            })
            .collect();
        OrientationJson {
            heads,
            bioriented: Some(self.bioriented_edges().iter().map(|&e| e + 1).collect()),
        }
    }
}

/// JSON form: `{"heads": [dart per edge]}` with edges in min-dart order,
/// 1-indexed; half-orientations add `"bioriented"` (1-indexed edge indices,
/// whose `heads` entries are the placeholder minimum dart).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrientationJson {
    pub heads: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bioriented: Option<Vec<usize>>,
}

/// BFS distances of every vertex to the root vertex.
pub fn vertex_distances(m: &RotationMap) -> Vec<usize> {
    let mut dist = vec![usize::MAX; m.n_vertices()];
    let mut queue = std::collections::VecDeque::new();
    dist[m.root_vertex()] = 0;
    queue.push_back(m.root_vertex());
    let mut incident: Vec<Vec<Dart>> = vec![Vec::new(); m.n_vertices()];
    for d in 0..m.n_darts() {
        incident[m.vertex_of(d)].push(d);
    }
    while let Some(v) = queue.pop_front() {
        for &d in &incident[v] {
            let w = m.vertex_of(m.alpha(d));
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// BFS distances of every face to the root face, through shared edges.
pub fn face_distances(m: &RotationMap) -> Vec<usize> {
    let mut dist = vec![usize::MAX; m.n_faces()];
    let mut queue = std::collections::VecDeque::new();
    dist[m.root_face()] = 0;
    queue.push_back(m.root_face());
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); m.n_faces()];
    for e in 0..m.n_edges() {
        let (d, a) = m.edge_darts(e);
        adj[m.face_right_of(d)].push(m.face_right_of(a));
        adj[m.face_right_of(a)].push(m.face_right_of(d));
    }
    while let Some(f) = queue.pop_front() {
        for &g in &adj[f] {
            if dist[g] == usize::MAX {
                dist[g] = dist[f] + 1;
                queue.push_back(g);
            }
        }
    }
    dist
}

/// Orientation of a bipartite map pointing every edge toward the endpoint
/// closer to the root vertex.  The root vertex is the unique sink.
pub fn geodesic_orientation(m: &RotationMap) -> Result<Orientation, OrientError> {
    if m.is_bipartite().is_none() {
        return Err(OrientError::NotBipartite);
    }
    let dist = vertex_distances(m);
    let heads = (0..m.n_edges())
        .map(|e| {
            let (d, a) = m.edge_darts(e);
            let (dd, da) = (dist[m.vertex_of(d)], dist[m.vertex_of(a)]);
            debug_assert!(dd.abs_diff(da) == 1, "bipartite distances differ by 1");
            if dd < da {
                d
            } else {
                a
            }
        })
        .collect();
    Ok(Orientation { heads })
}

/// Dual-geodesic orientation of a bicolorable map: the transport of the
/// geodesic orientation of the dual.  Each edge is oriented so that the face
/// on the right of the head dart is the *farther* of its two sides from the
/// root face (equivalently, the edge points from its right face toward its
/// left face in the dual geodesic sense).
pub fn dual_geodesic_orientation(m: &RotationMap) -> Result<Orientation, OrientError> {
    if m.is_bicolorable().is_none() {
        return Err(OrientError::NotBicolorable);
    }
    let dist = face_distances(m);
    let heads = (0..m.n_edges())
        .map(|e| {
            let (d, a) = m.edge_darts(e);
            let (fd, fa) = (dist[m.face_right_of(d)], dist[m.face_right_of(a)]);
            debug_assert!(fd.abs_diff(fa) == 1, "bicolorable face distances differ by 1");
            if fd > fa {
                d
            } else {
                a
            }
        })
        .collect();
    Ok(Orientation { heads })
}

/// True when there is a vertex potential dropping by exactly 1 along every
/// edge, head-ward (equivalently: every cycle has as many forward as backward
/// edges).  Checked by spanning-tree propagation plus co-tree verification.
pub fn is_bipartite_orientation(m: &RotationMap, o: &Orientation) -> bool {
    let mut pot = vec![i64::MAX; m.n_vertices()];
    pot[m.root_vertex()] = 0;
    let mut incident: Vec<Vec<Dart>> = vec![Vec::new(); m.n_vertices()];
    for d in 0..m.n_darts() {
        incident[m.vertex_of(d)].push(d);
    }
    let mut stack = vec![m.root_vertex()];
    while let Some(v) = stack.pop() {
        for &d in &incident[v] {
            let w = m.vertex_of(m.alpha(d));
            // Edge of d: head vertex has potential = tail potential - 1.
            let delta = if o.points_to_dart(m, d) { 1 } else { -1 };
            let expected = pot[v] + delta;
            if pot[w] == i64::MAX {
                pot[w] = expected;
                stack.push(w);
            } else if pot[w] != expected {
                return false;
            }
        }
    }
    true
}

/// True when the dual transport of `o` is a bipartite orientation of the dual.
pub fn is_bicolorable_orientation(m: &RotationMap, o: &Orientation) -> bool {
    is_bipartite_orientation(&m.dual(), &o.dual_transport(m))
}

/// True when the clockwise contour of face `f` traverses every edge forward.
pub fn is_clockwise_face(m: &RotationMap, o: &Orientation, f: usize) -> bool {
    (0..m.n_darts())
        .filter(|&x| m.face_right_of(x) == f)
        .all(|x| o.head(m.edge_of(x)) == m.alpha(x))
}

/// All clockwise faces, in index order.
pub fn clockwise_faces(m: &RotationMap, o: &Orientation) -> Vec<usize> {
    (0..m.n_faces())
        .filter(|&f| is_clockwise_face(m, o, f))
        .collect()
}

/// Reverses all edges of a clockwise non-root face.
pub fn face_flip(m: &RotationMap, o: &Orientation, f: usize) -> Result<Orientation, OrientError> {
    if f == m.root_face() || !is_clockwise_face(m, o, f) {
        return Err(OrientError::NotFlippable);
    }
    Ok(reverse_face_edges(m, o, f))
}

/// Inverse flip: reverses all edges of a *counterclockwise* non-root face
/// (one whose contour traverses every edge backward).  Exposed for lattice
/// exploration; not part of the minimizing dynamics.
pub fn face_unflip(m: &RotationMap, o: &Orientation, f: usize) -> Result<Orientation, OrientError> {
    let ccw = (0..m.n_darts())
        .filter(|&x| m.face_right_of(x) == f)
        .all(|x| o.head(m.edge_of(x)) == x);
    if f == m.root_face() || !ccw {
        return Err(OrientError::NotFlippable);
    }
    Ok(reverse_face_edges(m, o, f))
}

fn reverse_face_edges(m: &RotationMap, o: &Orientation, f: usize) -> Orientation {
    let mut heads = o.heads.clone();
    for x in (0..m.n_darts()).filter(|&x| m.face_right_of(x) == f) {
        let e = m.edge_of(x);
        heads[e] = m.alpha(o.heads[e]);
    }
    Orientation { heads }
}

/// Turns a non-root sink into a source by reversing all its incident edges.
pub fn vertex_push(m: &RotationMap, o: &Orientation, v: usize) -> Result<Orientation, OrientError> {
    if v == m.root_vertex() {
        return Err(OrientError::NotPushable);
    }
    let incident: Vec<Dart> = (0..m.n_darts()).filter(|&d| m.vertex_of(d) == v).collect();
    if !incident.iter().all(|&d| o.points_to_dart(m, d)) {
        return Err(OrientError::NotPushable);
    }
    let mut heads = o.heads.clone();
    for &d in &incident {
        heads[m.edge_of(d)] = m.alpha(d);
    }
    Ok(Orientation { heads })
}

/// Repeatedly flips the lowest-index clockwise non-root face until none
/// remains; on a bicolorable orientation this reaches the dual-geodesic
/// orientation (the minimum of the face-flip lattice).
pub fn minimize_by_flips(m: &RotationMap, o: &Orientation) -> Result<Orientation, OrientError> {
    if !is_bicolorable_orientation(m, o) {
        return Err(OrientError::NotBicolorableOrientation);
    }
    let mut cur = o.clone();
    loop {
        let next = (0..m.n_faces())
            .find(|&f| f != m.root_face() && is_clockwise_face(m, &cur, f));
        match next {
            Some(f) => cur = face_flip(m, &cur, f).expect("face is flippable"),
            None => return Ok(cur),
        }
    }
}

/// Replaces each edge by two adjacent parallel copies.  The result is
/// bicolorable, with `e` new digon faces.
pub fn double_faces(m: &RotationMap) -> RotationMap {
    let n = m.n_darts();
    let mut alpha: Vec<Dart> = (0..n).map(|d| m.alpha(d)).collect();
    let mut sigma = vec![0; 2 * n];
    alpha.resize(2 * n, 0);
    for e in 0..m.n_edges() {
        let (_, a) = m.edge_darts(e);
        let _ = a;
        let (d2, a2) = (n + 2 * e, n + 2 * e + 1);
        alpha[d2] = a2;
        alpha[a2] = d2;
    }
    // Around each vertex, replace each old dart x by a block of two darts:
    // the copy of the min-dart side goes counterclockwise after it, the copy
    // of the max-dart side goes before it, so that each doubled edge bounds a
    // digon face (min-side copy, max-side original).
    let block = |x: Dart| -> [Dart; 2] {
        let e = m.edge_of(x);
        let (d, _) = m.edge_darts(e);
        let (d2, a2) = (n + 2 * e, n + 2 * e + 1);
        if x == d {
            [x, d2]
        } else {
            [a2, x]
        }
    };
    for cycle in m.vertices() {
        let expanded: Vec<Dart> = cycle.iter().flat_map(|&x| block(x)).collect();
        for w in 0..expanded.len() {
            sigma[expanded[w]] = expanded[(w + 1) % expanded.len()];
        }
    }
    // The old root corner c(root) now starts at the last dart of the root's
    // block: the copy when the root is the min-dart side of its edge.
    let root_block = block(m.root());
    let root = if root_block[0] == m.root() {
        root_block[1]
    } else {
        m.root()
    };
    RotationMap::new(alpha, sigma, root).expect("doubled map is valid")
}

/// Subdivides each edge by a new degree-2 vertex.  The result is bipartite.
pub fn double_vertices(m: &RotationMap) -> RotationMap {
    let n = m.n_darts();
    let mut alpha: Vec<Dart> = (0..n).map(|d| m.alpha(d)).collect();
    let mut sigma: Vec<Dart> = (0..n).map(|d| m.sigma(d)).collect();
    alpha.resize(2 * n, 0);
    sigma.resize(2 * n, 0);
    for e in 0..m.n_edges() {
        let (d, a) = m.edge_darts(e);
        let (x, y) = (n + 2 * e, n + 2 * e + 1);
        // d pairs with x, y pairs with a; {x, y} is the new vertex.
        alpha[d] = x;
        alpha[x] = d;
        alpha[y] = a;
        alpha[a] = y;
        sigma[x] = y;
        sigma[y] = x;
    }
    RotationMap::new(alpha, sigma, m.root()).expect("subdivided map is valid")
}

/// Geodesic half-orientation: edges between equidistant vertices (odd cycles)
/// become bi-oriented; all others point toward the root.
pub fn geodesic_half_orientation(m: &RotationMap) -> HalfOrientation {
    let dist = vertex_distances(m);
    let states = (0..m.n_edges())
        .map(|e| {
            let (d, a) = m.edge_darts(e);
            let (dd, da) = (dist[m.vertex_of(d)], dist[m.vertex_of(a)]);
            match dd.cmp(&da) {
                std::cmp::Ordering::Less => EdgeState::Toward(d),
                std::cmp::Ordering::Greater => EdgeState::Toward(a),
                std::cmp::Ordering::Equal => EdgeState::Bi,
            }
        })
        .collect();
    HalfOrientation { states }
}

/// Dual-geodesic half-orientation: edges between equidistant faces become
/// bi-oriented; otherwise the head dart is the one whose right face is farther
/// from the root face.
pub fn dual_geodesic_half_orientation(m: &RotationMap) -> HalfOrientation {
    let dist = face_distances(m);
    let states = (0..m.n_edges())
        .map(|e| {
            let (d, a) = m.edge_darts(e);
            let (fd, fa) = (dist[m.face_right_of(d)], dist[m.face_right_of(a)]);
            match fd.cmp(&fa) {
                std::cmp::Ordering::Greater => EdgeState::Toward(d),
                std::cmp::Ordering::Less => EdgeState::Toward(a),
                std::cmp::Ordering::Equal => EdgeState::Bi,
            }
        })
        .collect();
    HalfOrientation { states }
}

/// Clockwise test for half-orientations: a face is clockwise when none of its
/// edges is oriented completely counterclockwise (bi-oriented edges are never
/// completely counterclockwise).
pub fn is_clockwise_face_half(m: &RotationMap, h: &HalfOrientation, f: usize) -> bool {
    (0..m.n_darts())
        .filter(|&x| m.face_right_of(x) == f)
        .all(|x| h.state(m.edge_of(x)) != EdgeState::Toward(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::perm_from_cycles;

    fn triangle() -> RotationMap {
        RotationMap::new(
            perm_from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]]),
            perm_from_cycles(6, &[&[1, 6], &[2, 3], &[4, 5]]),
            0,
        )
        .unwrap()
    }

    fn four_cycle() -> RotationMap {
        RotationMap::new(
            perm_from_cycles(8, &[&[1, 2], &[3, 4], &[5, 6], &[7, 8]]),
            perm_from_cycles(8, &[&[1, 8], &[2, 3], &[4, 5], &[6, 7]]),
            0,
        )
        .unwrap()
    }

    fn two_path() -> RotationMap {
        RotationMap::new(
            perm_from_cycles(4, &[&[1, 2], &[3, 4]]),
            perm_from_cycles(4, &[&[2, 3]]),
            0,
        )
        .unwrap()
    }

    #[test]
    fn geodesic_on_path_points_to_root() {
        let m = two_path();
        let o = geodesic_orientation(&m).unwrap();
        // Both edges oriented toward the root end.
        assert_eq!(o.head(0), 0);
        assert_eq!(o.head(1), 2);
        assert!(is_bipartite_orientation(&m, &o));
        // Unique sink is the root vertex.
        let deg = o.in_out_degrees(&m);
        let sinks: Vec<usize> = (0..m.n_vertices()).filter(|&v| deg[v].1 == 0).collect();
        assert_eq!(sinks, vec![m.root_vertex()]);
    }

    #[test]
    fn geodesic_on_four_cycle() {
        let m = four_cycle();
        let o = geodesic_orientation(&m).unwrap();
        let deg = o.in_out_degrees(&m);
        assert_eq!(deg[m.root_vertex()], (2, 0));
        // Opposite vertex is a double source.
        assert!(deg.contains(&(0, 2)));
        assert!(is_bipartite_orientation(&m, &o));
    }

    #[test]
    fn cyclic_four_cycle_not_bipartite_orientation() {
        let m = four_cycle();
        // Cyclic orientation: heads 0->.. pick alpha sides consistently.
        let heads = vec![1, 3, 5, 7];
        let o = Orientation::new(&m, heads);
        assert!(!is_bipartite_orientation(&m, &o));
        // Alternating orientation (two sources, two sinks) is bipartite.
        let o2 = Orientation::new(&m, vec![0, 2, 5, 7]);
        assert!(is_bipartite_orientation(&m, &o2));
    }

    #[test]
    fn dual_geodesic_triangle() {
        let m = triangle();
        let o = dual_geodesic_orientation(&m).unwrap();
        assert!(is_bicolorable_orientation(&m, &o));
        // The non-root face is counterclockwise (all edges backward along its
        // clockwise contour); only the root face may be clockwise.
        let cw = clockwise_faces(&m, &o);
        assert!(cw.iter().all(|&f| f == m.root_face()));
        // It equals the transport of the geodesic orientation of the dual.
        let od = geodesic_orientation(&m.dual()).unwrap();
        assert_eq!(od.dual_transport(&m.dual()), o);
    }

    #[test]
    fn dual_geodesic_radial_is_eulerian() {
        let edge = RotationMap::new(perm_from_cycles(2, &[&[1, 2]]), vec![0, 1], 0).unwrap();
        let r = edge.radial();
        let o = dual_geodesic_orientation(&r).unwrap();
        assert_eq!(o.in_out_degrees(&r), vec![(2, 2)]);
    }

    #[test]
    fn reversal_preserves_bicolorable() {
        let m = triangle();
        let o = dual_geodesic_orientation(&m).unwrap();
        assert!(is_bicolorable_orientation(&m, &o.reversed(&m)));
    }

    #[test]
    fn flips_reach_dual_geodesic_on_triangle() {
        let m = triangle();
        let min = dual_geodesic_orientation(&m).unwrap();
        // Try all 8 orientations; bicolorable ones minimize to `min`.
        let mut seen_bicolorable = 0;
        for mask in 0..8u32 {
            let heads: Vec<Dart> = (0..3)
                .map(|e| {
                    let (d, a) = m.edge_darts(e);
                    if mask >> e & 1 == 1 {
                        a
                    } else {
                        d
                    }
                })
                .collect();
            let o = Orientation::new(&m, heads);
            if is_bicolorable_orientation(&m, &o) {
                seen_bicolorable += 1;
                assert_eq!(minimize_by_flips(&m, &o).unwrap(), min);
            }
        }
        assert!(seen_bicolorable >= 2);
    }

    #[test]
    fn flip_then_face_becomes_counterclockwise() {
        let m = triangle();
        let min = dual_geodesic_orientation(&m).unwrap();
        // Reverse everything: now the non-root face is clockwise.
        let o = min.reversed(&m);
        let f = (0..m.n_faces()).find(|&f| f != m.root_face()).unwrap();
        assert!(is_clockwise_face(&m, &o, f));
        let flipped = face_flip(&m, &o, f).unwrap();
        assert!(!is_clockwise_face(&m, &flipped, f));
        // Inverse flip undoes it.
        assert_eq!(face_unflip(&m, &flipped, f).unwrap(), o);
    }

    #[test]
    fn vertex_push_on_geodesic_four_cycle() {
        let m = four_cycle();
        let o = geodesic_orientation(&m).unwrap();
        // The unique non-root sink candidate: reverse the two edges at the
        // root's neighbor? Geodesic has only the root as sink, so pushing any
        // other vertex fails.
        for v in 0..m.n_vertices() {
            if v != m.root_vertex() {
                assert_eq!(vertex_push(&m, &o, v), Err(OrientError::NotPushable));
            }
        }
        // Reverse all edges: root becomes a source, the opposite vertex a sink.
        let rev = o.reversed(&m);
        let deg = rev.in_out_degrees(&m);
        let v = (0..m.n_vertices())
            .find(|&v| v != m.root_vertex() && deg[v].1 == 0 && deg[v].0 > 0)
            .unwrap();
        let pushed = vertex_push(&m, &rev, v).unwrap();
        assert!(is_bipartite_orientation(&m, &pushed));
        assert_eq!(pushed.in_out_degrees(&m)[v].0, 0);
    }

    #[test]
    fn doubling_operations() {
        let m = triangle();
        let df = double_faces(&m);
        assert_eq!(df.n_edges(), 2 * m.n_edges());
        assert_eq!(df.n_faces(), m.n_faces() + m.n_edges());
        assert_eq!(df.genus(), m.genus());
        assert!(df.is_bicolorable().is_some());
        let dv = double_vertices(&m);
        assert_eq!(dv.n_edges(), 2 * m.n_edges());
        assert!(dv.is_bipartite().is_some());
        // Duality: dual(m doubled-faces) = (dual m) doubled-vertices.
        assert_eq!(
            df.dual().canonical_encoding(),
            double_vertices(&m.dual()).canonical_encoding()
        );
    }

    #[test]
    fn single_edge_doubles() {
        let edge = RotationMap::new(perm_from_cycles(2, &[&[1, 2]]), vec![0, 1], 0).unwrap();
        let digon = double_faces(&edge);
        assert_eq!((digon.n_vertices(), digon.n_edges(), digon.n_faces()), (2, 2, 2));
        let lp = RotationMap::new(
            perm_from_cycles(2, &[&[1, 2]]),
            perm_from_cycles(2, &[&[1, 2]]),
            0,
        )
        .unwrap();
        let divided = double_vertices(&lp);
        assert_eq!((divided.n_vertices(), divided.n_edges(), divided.n_faces()), (2, 2, 2));
    }

    #[test]
    fn half_orientation_on_triangle() {
        let m = triangle();
        let h = geodesic_half_orientation(&m);
        // Root at distance 0; the two neighbors at distance 1; the edge
        // between them is bi-oriented, the other two point to the root.
        assert_eq!(h.bioriented_edges().len(), 1);
        let dist = vertex_distances(&m);
        for e in 0..m.n_edges() {
            let (d, a) = m.edge_darts(e);
            match h.state(e) {
                EdgeState::Bi => {
                    assert_eq!(dist[m.vertex_of(d)], dist[m.vertex_of(a)]);
                }
                EdgeState::Toward(t) => {
                    assert_eq!(dist[m.vertex_of(t)], 0);
                }
            }
        }
    }

    #[test]
    fn half_orientation_reduces_on_bipartite() {
        let m = four_cycle();
        let h = geodesic_half_orientation(&m);
        assert!(h.bioriented_edges().is_empty());
        assert_eq!(h.to_full().unwrap(), geodesic_orientation(&m).unwrap());
        // Dual statement on the bicolorable triangle.
        let t = triangle();
        let hd = dual_geodesic_half_orientation(&t);
        assert_eq!(hd.to_full().unwrap(), dual_geodesic_orientation(&t).unwrap());
    }

    #[test]
    fn dual_geodesic_half_no_clockwise_face() {
        // Loop with a pendant edge: odd face degrees, not bicolorable.
        let m = RotationMap::new(
            perm_from_cycles(4, &[&[1, 2], &[3, 4]]),
            perm_from_cycles(4, &[&[1, 3, 2]]),
            0,
        )
        .unwrap();
        assert!(m.is_bicolorable().is_none());
        let h = dual_geodesic_half_orientation(&m);
        assert!(!h.bioriented_edges().is_empty());
        for f in 0..m.n_faces() {
            if f != m.root_face() {
                assert!(!is_clockwise_face_half(&m, &h, f));
            }
        }
    }
}
