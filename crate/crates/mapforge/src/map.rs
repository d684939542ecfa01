//! Rotation-system representation of rooted maps on orientable surfaces.
//!
//! A map is a pair of permutations of the darts `0..n`: the fixed-point-free
//! involution `alpha` pairing the two darts of each edge, and `sigma` giving
//! the counterclockwise order of darts around each vertex, together with a
//! root dart.  Vertices are the cycles of `sigma`, faces the cycles of
//! `phi = sigma . alpha`, and Euler's formula `v - e + f = 2 - 2g` recovers
//! the genus of the supporting surface.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Dense dart index, `0..n_darts`.  JSON input and output is 1-indexed.
pub type Dart = usize;

/// Edge index; edges are numbered by increasing minimum dart.
pub type EdgeId = usize;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MapError {
    #[error("alpha or sigma is not a permutation of the darts")]
    NotPermutation,
    #[error("alpha is not an involution")]
    NotInvolution,
    #[error("alpha fixes dart {0}")]
    FixedPointInAlpha(Dart),
    #[error("the darts are not connected under alpha and sigma")]
    Disconnected,
    #[error("root dart out of range")]
    RootOutOfRange,
}

/// A rooted combinatorial map, immutable after validation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RotationMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    alpha: Vec<Dart>,
    root: Dart,
    vertex_of: Vec<usize>,
    face_of: Vec<usize>,
    edge_of: Vec<EdgeId>,
    edge_darts: Vec<(Dart, Dart)>,
    n_vertices: usize,
    n_faces: usize,
}

fn is_permutation(p: &[usize]) -> bool {
    let n = p.len();
    let mut seen = vec![false; n];
    for &x in p {
        if x >= n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    true
}

/// Labels the cycles of a permutation; returns (cycle index per element, cycle count).
fn cycle_labels(p: &[usize]) -> (Vec<usize>, usize) {
    let n = p.len();
    let mut label = vec![usize::MAX; n];
    let mut count = 0;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut d = start;
        while label[d] == usize::MAX {
            label[d] = count;
            d = p[d];
        }
        count += 1;
    }
    (label, count)
}

impl RotationMap {
    /// Validates the rotation system and builds the map.
    pub fn new(alpha: Vec<Dart>, sigma: Vec<Dart>, root: Dart) -> Result<Self, MapError> {
        let n = alpha.len();
        if sigma.len() != n || n == 0 || root >= n {
            // An empty dart set leaves no valid root.
            if sigma.len() != n {
                return Err(MapError::NotPermutation);
            }
            return Err(MapError::RootOutOfRange);
        }
        if !is_permutation(&alpha) || !is_permutation(&sigma) {
            return Err(MapError::NotPermutation);
        }
        for d in 0..n {
            if alpha[d] == d {
                return Err(MapError::FixedPointInAlpha(d));
            }
        }
        for d in 0..n {
            if alpha[alpha[d]] != d {
                return Err(MapError::NotInvolution);
            }
        }
        // Connectivity under the group generated by alpha and sigma.
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(d) = stack.pop() {
            for next in [alpha[d], sigma[d]] {
                if !seen[next] {
                    seen[next] = true;
                    reached += 1;
                    stack.push(next);
                }
            }
        }
        if reached != n {
            return Err(MapError::Disconnected);
        }

        let mut sigma_inv = vec![0; n];
        for d in 0..n {
            sigma_inv[sigma[d]] = d;
        }
        let (vertex_of, n_vertices) = cycle_labels(&sigma);
        let phi: Vec<Dart> = (0..n).map(|d| sigma[alpha[d]]).collect();
        let (face_of, n_faces) = cycle_labels(&phi);

        let mut edge_of = vec![usize::MAX; n];
        let mut edge_darts = Vec::with_capacity(n / 2);
        for d in 0..n {
            if d < alpha[d] {
                edge_of[d] = edge_darts.len();
                edge_of[alpha[d]] = edge_darts.len();
                edge_darts.push((d, alpha[d]));
            }
        }

        Ok(RotationMap {
            sigma,
            sigma_inv,
            alpha,
            root,
            vertex_of,
            face_of,
            edge_of,
            edge_darts,
            n_vertices,
            n_faces,
        })
    }

    pub fn n_darts(&self) -> usize {
        self.alpha.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edge_darts.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn n_faces(&self) -> usize {
        self.n_faces
    }

    pub fn root(&self) -> Dart {
        self.root
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    pub fn alpha(&self, d: Dart) -> Dart {
        self.alpha[d]
    }

    /// Face permutation `phi = sigma . alpha`; its cycle through `d` is the
    /// face on the right of `d`, traversed clockwise.
    pub fn phi(&self, d: Dart) -> Dart {
        self.sigma[self.alpha[d]]
    }

    pub fn phi_inv(&self, d: Dart) -> Dart {
        self.alpha[self.sigma_inv[d]]
    }

    /// Vertex index of the dart's origin.
    pub fn vertex_of(&self, d: Dart) -> usize {
        self.vertex_of[d]
    }

    /// Face on the right of `d` (the `phi`-cycle through `d`).
    pub fn face_right_of(&self, d: Dart) -> usize {
        self.face_of[d]
    }

    /// Face containing the corner `c(d)`, i.e. the face on the left of `d`.
    pub fn face_of_corner(&self, d: Dart) -> usize {
        self.face_of[self.alpha[d]]
    }

    /// The face containing the root corner.
    pub fn root_face(&self) -> usize {
        self.face_of_corner(self.root)
    }

    pub fn root_vertex(&self) -> usize {
        self.vertex_of[self.root]
    }

    pub fn edge_of(&self, d: Dart) -> EdgeId {
        self.edge_of[d]
    }

    /// The two darts of an edge, smaller first.
    pub fn edge_darts(&self, e: EdgeId) -> (Dart, Dart) {
        self.edge_darts[e]
    }

    pub fn genus(&self) -> usize {
        let euler = self.n_vertices as i64 - self.n_edges() as i64 + self.n_faces as i64;
        let g2 = 2 - euler;
        debug_assert!(g2 >= 0 && g2 % 2 == 0);
        (g2 / 2) as usize
    }

    /// Degree of each vertex (number of darts in its sigma cycle).
    pub fn vertex_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_vertices];
        for d in 0..self.n_darts() {
            deg[self.vertex_of[d]] += 1;
        }
        deg
    }

    /// Degree of each face.
    pub fn face_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n_faces];
        for d in 0..self.n_darts() {
            deg[self.face_of[d]] += 1;
        }
        deg
    }

    /// Per-degree vertex and face counts plus edge count and genus.
    pub fn degree_profile(&self) -> DegreeProfile {
        let mut v_k = std::collections::BTreeMap::new();
        for d in self.vertex_degrees() {
            *v_k.entry(d).or_insert(0usize) += 1;
        }
        let mut f_k = std::collections::BTreeMap::new();
        for d in self.face_degrees() {
            *f_k.entry(d).or_insert(0usize) += 1;
        }
        DegreeProfile {
            v_k,
            f_k,
            e: self.n_edges(),
            g: self.genus(),
        }
    }

    /// The darts of each vertex, in sigma order starting from the smallest dart.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        self.cycles_of(&self.sigma, &self.vertex_of, self.n_vertices)
    }

    /// The darts of each face, in phi order starting from the smallest dart.
    pub fn faces(&self) -> Vec<Vec<Dart>> {
        let phi: Vec<Dart> = (0..self.n_darts()).map(|d| self.phi(d)).collect();
        self.cycles_of(&phi, &self.face_of, self.n_faces)
    }

    fn cycles_of(&self, p: &[Dart], label: &[usize], count: usize) -> Vec<Vec<Dart>> {
        let mut out = vec![Vec::new(); count];
        let mut started = vec![false; count];
        for start in 0..self.n_darts() {
            let c = label[start];
            if started[c] {
                continue;
            }
            started[c] = true;
            let mut d = start;
            loop {
                out[c].push(d);
                d = p[d];
                if d == start {
                    break;
                }
            }
        }
        out
    }

    /// Dual map: vertices and faces exchanged.  `sigma* = phi`, `alpha* = alpha`,
    /// and the root corner keeps its vertex/face pair with roles swapped, which
    /// on darts means `root* = alpha(root)`.
    pub fn dual(&self) -> RotationMap {
        let n = self.n_darts();
        let sigma: Vec<Dart> = (0..n).map(|d| self.phi(d)).collect();
        RotationMap::new(self.alpha.clone(), sigma, self.alpha[self.root])
            .expect("dual of a valid map is valid")
    }

    /// Mirror image: exchanges clockwise and counterclockwise.  `sigma` is
    /// inverted and the root corner `c(root)` is re-anchored at `sigma(root)`
    /// so that the same sector stays the root corner.
    pub fn reflect(&self) -> RotationMap {
        RotationMap::new(self.alpha.clone(), self.sigma_inv.clone(), self.sigma[self.root])
            .expect("reflection of a valid map is valid")
    }

    /// Proper 2-coloring of the vertices, if one exists.
    pub fn is_bipartite(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n_vertices];
        color[self.vertex_of[self.root]] = 0;
        let mut stack = vec![self.vertex_of[self.root]];
        let mut incident: Vec<Vec<Dart>> = vec![Vec::new(); self.n_vertices];
        for d in 0..self.n_darts() {
            incident[self.vertex_of[d]].push(d);
        }
        while let Some(v) = stack.pop() {
            for &d in &incident[v] {
                let w = self.vertex_of[self.alpha[d]];
                if color[w] == u8::MAX {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return None;
                }
            }
        }
        Some(color)
    }

    /// Proper 2-coloring of the faces, if one exists.
    pub fn is_bicolorable(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n_faces];
        let start = self.root_face();
        color[start] = 0;
        let mut stack = vec![start];
        let mut sides: Vec<Vec<usize>> = vec![Vec::new(); self.n_faces];
        for e in 0..self.n_edges() {
            let (d, a) = self.edge_darts[e];
            sides[self.face_of[d]].push(self.face_of[a]);
            sides[self.face_of[a]].push(self.face_of[d]);
        }
        while let Some(f) = stack.pop() {
            for &g in &sides[f] {
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    stack.push(g);
                } else if color[g] == color[f] {
                    return None;
                }
            }
        }
        Some(color)
    }

    // --- corner navigation ------------------------------------------------
    //
    // Corners are identified with darts: `c(d)` is the sector between `d`
    // and `sigma(d)` around their common vertex.

    /// Next corner counterclockwise around the vertex of `c(d)`.
    pub fn next_v(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn prev_v(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    /// Next corner around `face_of_corner(d)` in clockwise order.
    pub fn next_f(&self, d: Dart) -> Dart {
        self.alpha[self.sigma[d]]
    }

    pub fn prev_f(&self, d: Dart) -> Dart {
        self.sigma_inv[self.alpha[d]]
    }

    /// Edge separating `c(d)` from the next corner around the face.
    pub fn next_e(&self, d: Dart) -> EdgeId {
        self.edge_of[self.sigma[d]]
    }

    /// Edge separating `c(d)` from the previous corner around the face.
    pub fn prev_e(&self, d: Dart) -> EdgeId {
        self.edge_of[d]
    }

    /// Complement of an edge subset.
    pub fn complement_submap(&self, s: &[EdgeId]) -> Vec<EdgeId> {
        let mut inside = vec![false; self.n_edges()];
        for &e in s {
            inside[e] = true;
        }
        (0..self.n_edges()).filter(|&e| !inside[e]).collect()
    }

    /// Radial map: one vertex per edge of `self`, one edge per corner, 4-valent
    /// and bicolorable, of the same genus.
    ///
    /// The corner `c(x)` of the primal map contributes a radial edge from the
    /// midpoint of edge `x` to the midpoint of edge `sigma(x)`; its two darts
    /// are `P_x = 2x` (at the midpoint of `x`) and `N_x = 2x + 1` (at the
    /// midpoint of `sigma(x)`).  Around the midpoint of the primal edge
    /// `{d, alpha(d)}` the counterclockwise order is
    /// `N_{sigma^-1(alpha(d))}, P_d, N_{sigma^-1(d)}, P_{alpha(d)}`.
    pub fn radial(&self) -> RotationMap {
        let n = self.n_darts();
        let p = |x: Dart| 2 * x;
        let nn = |x: Dart| 2 * x + 1;
        let mut alpha = vec![0; 2 * n];
        let mut sigma = vec![0; 2 * n];
        for x in 0..n {
            alpha[p(x)] = nn(x);
            alpha[nn(x)] = p(x);
        }
        for d in 0..n {
            let a = self.alpha[d];
            // Counterclockwise 4-cycle around the radial vertex of edge {d, a}.
            sigma[nn(self.sigma_inv[a])] = p(d);
            sigma[p(d)] = nn(self.sigma_inv[d]);
            sigma[nn(self.sigma_inv[d])] = p(a);
            sigma[p(a)] = nn(self.sigma_inv[a]);
        }
        // Root inside the primal root corner, at the midpoint of the root edge.
        let root = nn(self.sigma_inv[self.alpha[self.root]]);
        RotationMap::new(alpha, sigma, root).expect("radial of a valid map is valid")
    }

    /// Canonical byte encoding: BFS relabeling from the root dart, following
    /// `sigma` then `alpha` from each discovered dart, then emitting the
    /// relabeled images of `sigma` and `alpha` in discovery order.  Two rooted
    /// maps are isomorphic (by an isomorphism fixing the root corner) exactly
    /// when their encodings are equal.
    pub fn canonical_encoding(&self) -> Vec<u32> {
        let n = self.n_darts();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        let mut head = 0;
        label[self.root] = 0;
        order.push(self.root);
        while head < order.len() {
            let d = order[head];
            head += 1;
            for next in [self.sigma[d], self.alpha[d]] {
                if label[next] == u32::MAX {
                    label[next] = order.len() as u32;
                    order.push(next);
                }
            }
        }
        let mut out = Vec::with_capacity(2 * n);
        for &d in &order {
            out.push(label[self.sigma[d]]);
            out.push(label[self.alpha[d]]);
        }
        out
    }

    // --- JSON -------------------------------------------------------------

    pub fn to_json_value(&self) -> MapJson {
        MapJson {
            n_darts: self.n_darts(),
            alpha: self.alpha.iter().map(|&d| d + 1).collect(),
            sigma: self.sigma.iter().map(|&d| d + 1).collect(),
            root: self.root + 1,
        }
    }

    pub fn from_json_value(j: &MapJson) -> Result<Self, MapError> {
        if j.alpha.len() != j.n_darts || j.sigma.len() != j.n_darts {
            return Err(MapError::NotPermutation);
        }
        let dec = |v: &[usize]| -> Result<Vec<Dart>, MapError> {
            v.iter()
                .map(|&x| {
                    if x == 0 || x > j.n_darts {
                        Err(MapError::NotPermutation)
                    } else {
                        Ok(x - 1)
                    }
                })
                .collect()
        };
        if j.root == 0 || j.root > j.n_darts {
            return Err(MapError::RootOutOfRange);
        }
        RotationMap::new(dec(&j.alpha)?, dec(&j.sigma)?, j.root - 1)
    }
}

/// 1-indexed JSON form of a map: `{"n_darts", "alpha", "sigma", "root"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapJson {
    pub n_darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    pub root: usize,
}

/// Vertex/face degree statistics of a map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegreeProfile {
    /// Number of vertices of each degree.
    pub v_k: std::collections::BTreeMap<usize, usize>,
    /// Number of faces of each degree.
    pub f_k: std::collections::BTreeMap<usize, usize>,
    pub e: usize,
    pub g: usize,
}

/// Builds a map from 1-indexed cycle notation, e.g. `&[&[1, 3], &[2, 4]]`.
pub fn perm_from_cycles(n: usize, cycles: &[&[usize]]) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    for cycle in cycles {
        for w in 0..cycle.len() {
            p[cycle[w] - 1] = cycle[(w + 1) % cycle.len()] - 1;
        }
    }
    p
}
