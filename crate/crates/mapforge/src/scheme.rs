//! Scheme decomposition of unicellular blossoming maps.
//!
//! A unicellular blossoming map of positive genus is a small core — its
//! *scheme* — decorated with treelike parts and chains of interior-degree-2
//! vertices.  Pruning replaces each treelike part by a rootable stem,
//! rerooting moves the root onto a scheme stem, and merging contracts each
//! chain (*branch*) into a single edge while recording it as a weighted
//! Motzkin path.  Offset labels around scheme vertices induce a directed
//! *offset graph* on the scheme which is always acyclic; its linear
//! extensions are what make the per-scheme generating series computable in
//! closed form.

use crate::blossom::{BlossomError, BlossomJson, BlossomingMap, StemDir, TourEvent};
use crate::map::{Dart, RotationMap};
use crate::oracle::{enumerate_blossoming, BlossomFilter, OracleError};
use crate::orient::EdgeState;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SchemeError {
    #[error("planar maps prune to nothing")]
    GenusZero,
    #[error("the map is not pruned (an interior degree falls outside 2..=4)")]
    NotPruned,
    #[error("the map is not scheme-rooted")]
    NotSchemeRooted,
    #[error("a branch is not uniformly oriented")]
    MixedBranch,
    #[error("marked stem is not a rootable scheme stem")]
    MarkNotSchemeStem,
    #[error("offset labels around a vertex are not a scheme pattern")]
    BadOffsets,
    #[error("the offset graph contains a cycle")]
    CycleDetected,
    #[error("the Motzkin paths do not match the scheme edges")]
    PathMismatch,
    #[error(transparent)]
    Blossom(#[from] BlossomError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

fn vertex_of_table(vertices: &[Vec<Dart>], n: usize) -> Vec<usize> {
    let mut vertex_of = vec![0usize; n];
    for (v, cycle) in vertices.iter().enumerate() {
        for &d in cycle {
            vertex_of[d] = v;
        }
    }
    vertex_of
}

/// Marks the interior darts that survive the iterated removal of
/// interior-degree-1 vertices.  Errors with `GenusZero` when nothing is left
/// (the interior map is a tree, or empty).
fn alive_interior(u: &BlossomingMap) -> Result<Vec<bool>, SchemeError> {
    let n = u.n_darts();
    let vertices = u.vertices();
    let vertex_of = vertex_of_table(&vertices, n);
    let mut alive: Vec<bool> = (0..n).map(|d| !u.is_stem(d)).collect();
    let mut deg: Vec<usize> = vertices
        .iter()
        .map(|c| c.iter().filter(|&&d| !u.is_stem(d)).count())
        .collect();
    let mut queue: Vec<usize> = (0..deg.len()).filter(|&v| deg[v] == 1).collect();
    while let Some(v) = queue.pop() {
        if deg[v] != 1 {
            continue; // updated since it was enqueued
        }
        deg[v] = 0;
        let &d = vertices[v].iter().find(|&&d| alive[d]).unwrap();
        let a = u.alpha(d).unwrap();
        alive[d] = false;
        alive[a] = false;
        let w = vertex_of[a];
        if deg[w] > 0 {
            deg[w] -= 1;
            if deg[w] == 1 {
                queue.push(w);
            }
        }
    }
    if alive.iter().any(|&x| x) {
        Ok(alive)
    } else {
        Err(SchemeError::GenusZero)
    }
}

/// The embedded graph obtained by iteratively removing interior-degree-1
/// vertices from the interior map of `u`, together with the old dart id of
/// each new dart.  Rooted at the first surviving dart of the face tour.
pub fn extended_scheme(u: &BlossomingMap) -> Result<(RotationMap, Vec<Dart>), SchemeError> {
    if u.genus() == 0 {
        return Err(SchemeError::GenusZero);
    }
    let alive = alive_interior(u)?;
    let old: Vec<Dart> = (0..u.n_darts()).filter(|&d| alive[d]).collect();
    let mut new_of = vec![usize::MAX; u.n_darts()];
    for (i, &d) in old.iter().enumerate() {
        new_of[d] = i;
    }
    let sigma: Vec<Dart> = old
        .iter()
        .map(|&d| {
            let mut x = u.sigma(d);
            while !alive[x] {
                x = u.sigma(x);
            }
            new_of[x]
        })
        .collect();
    let alpha: Vec<Dart> = old.iter().map(|&d| new_of[u.alpha(d).unwrap()]).collect();
    let root = u
        .tour()?
        .into_iter()
        .find_map(|ev| match ev {
            TourEvent::Cross(s) if alive[s] => Some(new_of[s]),
            _ => None,
        })
        .unwrap();
    let m = RotationMap::new(alpha, sigma, root).expect("core of a unicellular map is a valid map");
    Ok((m, old))
}

/// A root-equivalence key for the extended scheme seen as an unrooted
/// embedded graph: the minimum canonical encoding over all root darts.
pub fn unrooted_graph_key(m: &RotationMap) -> Vec<u32> {
    (0..m.n_darts())
        .map(|r| {
            let alpha = (0..m.n_darts()).map(|d| m.alpha(d)).collect();
            let sigma = (0..m.n_darts()).map(|d| m.sigma(d)).collect();
            RotationMap::new(alpha, sigma, r).unwrap().canonical_encoding()
        })
        .min()
        .unwrap()
}

/// A unicellular blossoming map with no treelike parts: every interior
/// degree is 2, 3 or 4.  Vertices of interior degree at least 3 are the
/// *scheme vertices*; their stems are the *scheme stems*.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrunedMap {
    map: BlossomingMap,
    pub v_s2: usize,
    pub v_s3: usize,
    pub v_s4: usize,
}

impl PrunedMap {
    pub fn new(map: BlossomingMap) -> Result<Self, SchemeError> {
        let g = map.genus();
        if g == 0 {
            return Err(SchemeError::GenusZero);
        }
        let degs = map.interior_degrees();
        if degs.iter().any(|&d| !(2..=4).contains(&d)) {
            return Err(SchemeError::NotPruned);
        }
        let v_s2 = degs.iter().filter(|&&d| d == 2).count();
        let v_s3 = degs.iter().filter(|&&d| d == 3).count();
        let v_s4 = degs.iter().filter(|&&d| d == 4).count();
        if v_s3 + 2 * v_s4 != 4 * g - 2 {
            return Err(SchemeError::NotPruned);
        }
        let p = PrunedMap { map, v_s2, v_s3, v_s4 };
        if p.map.is_well_labeled() && p.rootable_scheme_stems().len() != 2 * g - p.v_s4 {
            return Err(SchemeError::NotPruned);
        }
        Ok(p)
    }

    pub fn map(&self) -> &BlossomingMap {
        &self.map
    }

    pub fn into_map(self) -> BlossomingMap {
        self.map
    }

    pub fn genus(&self) -> usize {
        self.map.genus()
    }

    fn interior_degree_at(&self, d: Dart) -> usize {
        let mut deg = 0;
        let mut x = d;
        loop {
            if !self.map.is_stem(x) {
                deg += 1;
            }
            x = self.map.sigma(x);
            if x == d {
                break;
            }
        }
        deg
    }

    /// Rootable stems (the root bud and every leaf) attached on scheme
    /// vertices.
    pub fn rootable_scheme_stems(&self) -> Vec<Dart> {
        self.map
            .rootable_stems()
            .into_iter()
            .filter(|&s| self.interior_degree_at(s) >= 3)
            .collect()
    }

    /// True when the root bud sits on a scheme vertex.
    pub fn is_scheme_rooted(&self) -> bool {
        self.interior_degree_at(self.map.root()) >= 3
    }
}

/// Replaces each treelike part of `u` by a rootable stem: a root bud when the
/// tree carries the root, a leaf otherwise.
pub fn prune(u: &BlossomingMap) -> Result<PrunedMap, SchemeError> {
    if u.genus() == 0 {
        return Err(SchemeError::GenusZero);
    }
    let alive = alive_interior(u)?;
    let n = u.n_darts();
    let vertices = u.vertices();
    let vertex_of = vertex_of_table(&vertices, n);
    let vertex_alive: Vec<bool> = vertices
        .iter()
        .map(|c| c.iter().any(|&d| alive[d]))
        .collect();
    // The treelike component carrying the root bud, as a set of dead vertices.
    let root_vertex = vertex_of[u.root()];
    let mut in_root_tree = vec![false; vertices.len()];
    if !vertex_alive[root_vertex] {
        in_root_tree[root_vertex] = true;
        let mut stack = vec![root_vertex];
        while let Some(v) = stack.pop() {
            for &d in &vertices[v] {
                if let Some(a) = u.alpha(d) {
                    let w = vertex_of[a];
                    if !vertex_alive[w] && !in_root_tree[w] {
                        in_root_tree[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    // Every dart on a surviving vertex survives; dead interior darts there
    // become the replacement stems.
    let old: Vec<Dart> = (0..n).filter(|&d| vertex_alive[vertex_of[d]]).collect();
    let mut new_of = vec![usize::MAX; n];
    for (i, &d) in old.iter().enumerate() {
        new_of[d] = i;
    }
    let sigma: Vec<Dart> = old.iter().map(|&d| new_of[u.sigma(d)]).collect();
    let mut root_new = None;
    let mut alpha = Vec::with_capacity(old.len());
    let mut stem_dir = Vec::with_capacity(old.len());
    for &d in &old {
        if let Some(dir) = u.stem_dir(d) {
            alpha.push(None);
            stem_dir.push(Some(dir));
            if d == u.root() {
                root_new = Some(new_of[d]);
            }
        } else if alive[d] {
            alpha.push(Some(new_of[u.alpha(d).unwrap()]));
            stem_dir.push(None);
        } else {
            // Attachment of a removed tree.
            let into_root_tree = in_root_tree[vertex_of[u.alpha(d).unwrap()]];
            alpha.push(None);
            stem_dir.push(Some(if into_root_tree {
                StemDir::Bud
            } else {
                StemDir::Leaf
            }));
            if into_root_tree {
                assert!(root_new.is_none(), "a tree attaches by exactly one edge");
                root_new = Some(new_of[d]);
            }
        }
    }
    let root_bud = root_new.expect("the root bud or its tree's stem survives");
    let mut sigma_inv = vec![0usize; old.len()];
    for (d, &s) in sigma.iter().enumerate() {
        sigma_inv[s] = d;
    }
    let b = BlossomingMap::new(sigma, alpha, stem_dir, sigma_inv[root_bud], None)?;
    PrunedMap::new(b)
}

/// Moves the root of a pruned map onto a marked rootable scheme stem,
/// swapping the directions of the old root bud and the mark and re-deriving
/// the well-orientation.  Returns the scheme-rooted map and the old root as
/// the marked stem of the output.
pub fn reroot_on_scheme(p: &PrunedMap, marked: Dart) -> Result<(PrunedMap, Dart), SchemeError> {
    if !p.rootable_scheme_stems().contains(&marked) {
        return Err(SchemeError::MarkNotSchemeStem);
    }
    let (b, old_root) = p.map().reroot(marked)?;
    Ok((PrunedMap::new(b)?, old_root))
}

/// One weighted Motzkin step, encoding a branch vertex of interior degree 2.
///
/// Normative dictionary — reading the vertex counterclockwise from the
/// arrival dart `a` (the head of the branch edge coming from upstream), with
/// `c` the departing tail, `b` the bud and `l` the leaf, and heights taken as
/// the corner labels on the right-hand side of the branch:
///
/// | sigma cycle | step | meaning                         |
/// |-------------|------|---------------------------------|
/// | a b c l     | Up   | bud on the right, label + 1     |
/// | a l c b     | Down | leaf on the right, label - 1    |
/// | a c b l     | H1   | stems on the left, bud first    |
/// | a c l b     | H2   | stems on the left, leaf first   |
/// | a b l c     | H3   | stems on the right, bud first   |
/// | a l b c     | H4   | stems on the right, leaf first  |
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MotzkinStep {
    Up,
    Down,
    H1,
    H2,
    H3,
    H4,
}

impl MotzkinStep {
    pub fn delta(self) -> i64 {
        match self {
            MotzkinStep::Up => 1,
            MotzkinStep::Down => -1,
            _ => 0,
        }
    }

    pub const ALL: [MotzkinStep; 6] = [
        MotzkinStep::Up,
        MotzkinStep::Down,
        MotzkinStep::H1,
        MotzkinStep::H2,
        MotzkinStep::H3,
        MotzkinStep::H4,
    ];
}

/// A weighted Motzkin path with explicit start and end heights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MotzkinPath {
    pub start: i64,
    pub end: i64,
    pub steps: Vec<MotzkinStep>,
}

impl MotzkinPath {
    pub fn height_delta(&self) -> i64 {
        self.steps.iter().map(|s| s.delta()).sum()
    }

    pub fn is_consistent(&self) -> bool {
        self.end - self.start == self.height_delta()
    }
}

/// The merged scheme with its corner labels carried over from the map it was
/// merged from.  Not well-labeled in general — labels may jump along the
/// merged edges — but the stepping rule around each vertex still holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledScheme {
    map: BlossomingMap,
    labels: Vec<i64>,
    vertex_min: Vec<i64>,
    offsets: Vec<u8>,
}

impl LabeledScheme {
    pub fn map(&self) -> &BlossomingMap {
        &self.map
    }

    /// Corner label per dart (for the corner `c(d)`).
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    /// Minimum corner label per vertex, in [`BlossomingMap::vertices`] order.
    pub fn vertex_min(&self) -> &[i64] {
        &self.vertex_min
    }

    /// Offset label per dart: its corner label relative to the vertex
    /// minimum.  Around every vertex the cyclic pattern is 0101 or 0121.
    pub fn offsets(&self) -> &[u8] {
        &self.offsets
    }

    pub fn offset_graph(&self) -> Result<OffsetGraph, SchemeError> {
        offset_graph(&self.map)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DartKind {
    Interior,
    Bud,
    Leaf,
}

fn kind(m: &BlossomingMap, d: Dart) -> DartKind {
    match m.stem_dir(d) {
        None => DartKind::Interior,
        Some(StemDir::Bud) => DartKind::Bud,
        Some(StemDir::Leaf) => DartKind::Leaf,
    }
}

/// Label increment when crossing dart `d` counterclockwise around its vertex.
fn crossing_delta(m: &BlossomingMap, d: Dart) -> i64 {
    match m.stem_dir(d) {
        Some(StemDir::Bud) => 1,
        Some(StemDir::Leaf) => -1,
        None => match m.edge_state(m.edge_of(d).unwrap()) {
            EdgeState::Bi => 0,
            EdgeState::Toward(h) => {
                if h == d {
                    -1
                } else {
                    1
                }
            }
        },
    }
}

/// Contracts every branch of a scheme-rooted pruned map into a single edge
/// with the branch's orientation, returning the labeled scheme together with
/// one Motzkin path per scheme edge (keyed by the edge id in the merged map).
pub fn merge_branches(
    r: &PrunedMap,
) -> Result<(LabeledScheme, Vec<(usize, MotzkinPath)>), SchemeError> {
    if !r.is_scheme_rooted() {
        return Err(SchemeError::NotSchemeRooted);
    }
    let m = r.map();
    let labels = m.compute_labels()?;
    let n = m.n_darts();
    let vertices = m.vertices();
    let vertex_of = vertex_of_table(&vertices, n);
    let ideg: Vec<usize> = vertices
        .iter()
        .map(|c| c.iter().filter(|&&d| !m.is_stem(d)).count())
        .collect();
    let old: Vec<Dart> = (0..n).filter(|&d| ideg[vertex_of[d]] >= 3).collect();
    let mut new_of = vec![usize::MAX; n];
    for (i, &d) in old.iter().enumerate() {
        new_of[d] = i;
    }
    let mut alpha_new: Vec<Option<Dart>> = vec![None; old.len()];
    let mut merged: Vec<(Dart, Dart, MotzkinPath)> = Vec::new(); // (new tail, new head, path)
    for &d in &old {
        if m.is_stem(d) {
            continue;
        }
        match m.edge_state(m.edge_of(d).unwrap()) {
            EdgeState::Toward(h) if h != d => {} // d is the tail: walk the branch
            EdgeState::Toward(_) => continue,
            EdgeState::Bi => return Err(SchemeError::MixedBranch),
        }
        let mut steps = Vec::new();
        let mut a = m.alpha(d).unwrap();
        while ideg[vertex_of[a]] == 2 {
            let s1 = m.sigma(a);
            let s2 = m.sigma(s1);
            let s3 = m.sigma(s2);
            debug_assert_eq!(m.sigma(s3), a, "branch vertices are 4-valent");
            use DartKind::{Bud, Interior, Leaf};
            let (step, c) = match (kind(m, s1), kind(m, s2), kind(m, s3)) {
                (Bud, Interior, Leaf) => (MotzkinStep::Up, s2),
                (Leaf, Interior, Bud) => (MotzkinStep::Down, s2),
                (Interior, Bud, Leaf) => (MotzkinStep::H1, s1),
                (Interior, Leaf, Bud) => (MotzkinStep::H2, s1),
                (Bud, Leaf, Interior) => (MotzkinStep::H3, s3),
                (Leaf, Bud, Interior) => (MotzkinStep::H4, s3),
                _ => return Err(SchemeError::MixedBranch),
            };
            match m.edge_state(m.edge_of(c).unwrap()) {
                EdgeState::Toward(h) if h == m.alpha(c).unwrap() => {}
                _ => return Err(SchemeError::MixedBranch),
            }
            steps.push(step);
            a = m.alpha(c).unwrap();
        }
        let path = MotzkinPath {
            start: labels[m.sigma_inv(d)],
            end: labels[a],
            steps,
        };
        debug_assert!(path.is_consistent());
        alpha_new[new_of[d]] = Some(new_of[a]);
        alpha_new[new_of[a]] = Some(new_of[d]);
        merged.push((new_of[d], new_of[a], path));
    }
    let sigma_new: Vec<Dart> = old.iter().map(|&d| new_of[m.sigma(d)]).collect();
    let stem_new: Vec<Option<StemDir>> = old.iter().map(|&d| m.stem_dir(d)).collect();
    let root_corner = new_of[m.root_corner()];
    let scheme = BlossomingMap::new(sigma_new, alpha_new, stem_new, root_corner, None)?;
    // Orient each merged edge like its branch, toward the head end.
    let mut orient = scheme.edge_states().to_vec();
    for &(_, h, _) in &merged {
        orient[scheme.edge_of(h).unwrap()] = EdgeState::Toward(h);
    }
    let scheme = scheme.with_orientation(orient);
    let labels_new: Vec<i64> = old.iter().map(|&d| labels[d]).collect();
    // The stepping rule around each vertex survives the merge.
    for x in 0..scheme.n_darts() {
        debug_assert_eq!(
            labels_new[x],
            labels_new[scheme.sigma_inv(x)] + crossing_delta(&scheme, x)
        );
    }
    let s_vertices = scheme.vertices();
    let mut vertex_min = Vec::with_capacity(s_vertices.len());
    let mut offsets = vec![0u8; scheme.n_darts()];
    for cycle in &s_vertices {
        let min = cycle.iter().map(|&d| labels_new[d]).min().unwrap();
        vertex_min.push(min);
        for &d in cycle {
            offsets[d] = u8::try_from(labels_new[d] - min).map_err(|_| SchemeError::BadOffsets)?;
        }
        let offs: Vec<u8> = cycle.iter().map(|&d| offsets[d]).collect();
        if !is_scheme_pattern(&offs) {
            return Err(SchemeError::BadOffsets);
        }
    }
    let mut paths: Vec<(usize, MotzkinPath)> = merged
        .into_iter()
        .map(|(_, h, p)| (scheme.edge_of(h).unwrap(), p))
        .collect();
    paths.sort_by_key(|&(e, _)| e);
    let l = LabeledScheme {
        map: scheme,
        labels: labels_new,
        vertex_min,
        offsets,
    };
    Ok((l, paths))
}

/// Re-inserts one branch per scheme edge, inverting [`merge_branches`].
/// `paths` must carry exactly one path per interior edge of the scheme.
pub fn expand_branches(
    l: &LabeledScheme,
    paths: &[(usize, MotzkinPath)],
) -> Result<PrunedMap, SchemeError> {
    let m = l.map();
    let n_edges = m.n_interior_edges();
    let mut by_edge: Vec<Option<&MotzkinPath>> = vec![None; n_edges];
    for &(e, ref p) in paths {
        if e >= n_edges || by_edge[e].is_some() || !p.is_consistent() {
            return Err(SchemeError::PathMismatch);
        }
        by_edge[e] = Some(p);
    }
    if by_edge.iter().any(|p| p.is_none()) {
        return Err(SchemeError::PathMismatch);
    }
    let n0 = m.n_darts();
    let mut sigma: Vec<Dart> = (0..n0).map(|d| m.sigma(d)).collect();
    let mut alpha: Vec<Option<Dart>> = (0..n0).map(|d| m.alpha(d)).collect();
    let mut stem_dir: Vec<Option<StemDir>> = (0..n0).map(|d| m.stem_dir(d)).collect();
    let mut heads: Vec<Dart> = Vec::new();
    for (e, &(d1, d2)) in m.interior_edges().iter().enumerate() {
        let head = match m.edge_state(e) {
            EdgeState::Toward(h) => h,
            EdgeState::Bi => return Err(SchemeError::MixedBranch),
        };
        let tail = if head == d1 { d2 } else { d1 };
        let path = by_edge[e].unwrap();
        let mut prev = tail;
        for &st in &path.steps {
            let base = sigma.len();
            let (a, x, y, z) = (base, base + 1, base + 2, base + 3);
            sigma.extend_from_slice(&[x, y, z, a]);
            use MotzkinStep::{Down, Up, H1, H2, H3, H4};
            use StemDir::{Bud, Leaf};
            // Roles of x, y, z per the step dictionary; `c` departs.
            let (roles, c) = match st {
                Up => ([Some(Bud), None, Some(Leaf)], y),
                Down => ([Some(Leaf), None, Some(Bud)], y),
                H1 => ([None, Some(Bud), Some(Leaf)], x),
                H2 => ([None, Some(Leaf), Some(Bud)], x),
                H3 => ([Some(Bud), Some(Leaf), None], z),
                H4 => ([Some(Leaf), Some(Bud), None], z),
            };
            alpha.extend_from_slice(&[Some(prev), None, None, None]);
            stem_dir.push(None);
            stem_dir.extend_from_slice(&roles);
            alpha[prev] = Some(a);
            heads.push(a);
            prev = c;
        }
        alpha[prev] = Some(head);
        alpha[head] = Some(prev);
        heads.push(head);
    }
    let b = BlossomingMap::new(sigma, alpha, stem_dir, m.root_corner(), None)?;
    let mut orient = b.edge_states().to_vec();
    for h in heads {
        orient[b.edge_of(h).unwrap()] = EdgeState::Toward(h);
    }
    PrunedMap::new(b.with_orientation(orient))
}

fn is_scheme_pattern(offs: &[u8]) -> bool {
    if offs.len() != 4 {
        return false;
    }
    let matches = |pat: [u8; 4]| {
        (0..4).any(|r| (0..4).all(|i| offs[(r + i) % 4] == pat[i]))
    };
    matches([0, 1, 0, 1]) || matches([0, 1, 2, 1])
}

/// Directed graph on scheme vertices retaining only the offset edges, with a
/// linear extension of the partial order it induces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffsetGraph {
    pub n_vertices: usize,
    /// Arcs (from, to, scheme edge id), oriented toward the 12 side.
    pub arcs: Vec<(usize, usize, usize)>,
    /// Vertices in a topological order (smallest index first among ties).
    pub topo_order: Vec<usize>,
}

/// Offset label per dart, derived from the orientation alone: the corner
/// labels around each vertex follow the crossing rule, and the offset is the
/// label made relative to the vertex minimum.
pub fn offset_labels(s: &BlossomingMap) -> Result<Vec<u8>, SchemeError> {
    let mut offsets = vec![0u8; s.n_darts()];
    for cycle in s.vertices() {
        let mut rel = Vec::with_capacity(cycle.len());
        let mut h = 0i64;
        rel.push(0i64);
        for &d in cycle.iter().skip(1) {
            h += crossing_delta(s, d);
            rel.push(h);
        }
        if h + crossing_delta(s, cycle[0]) != 0 {
            return Err(SchemeError::Blossom(BlossomError::InconsistentLabeling));
        }
        let min = *rel.iter().min().unwrap();
        for (&d, &r) in cycle.iter().zip(&rel) {
            offsets[d] = u8::try_from(r - min).map_err(|_| SchemeError::BadOffsets)?;
        }
    }
    Ok(offsets)
}

/// The offset graph of a scheme.  Each interior edge carries an offset pair
/// (01 or 12) at each endpoint; mismatched endpoints yield an arc toward the
/// 12 side.  A topological order is computed; a cycle — which would
/// contradict acyclicity of reachable schemes — is reported as an error.
pub fn offset_graph(s: &BlossomingMap) -> Result<OffsetGraph, SchemeError> {
    let offsets = offset_labels(s)?;
    let vertices = s.vertices();
    for cycle in &vertices {
        let offs: Vec<u8> = cycle.iter().map(|&d| offsets[d]).collect();
        if !is_scheme_pattern(&offs) {
            return Err(SchemeError::BadOffsets);
        }
    }
    let vertex_of = vertex_of_table(&vertices, s.n_darts());
    let mut arcs = Vec::new();
    for (e, &(d, a)) in s.interior_edges().iter().enumerate() {
        let side = |x: Dart| offsets[s.sigma_inv(x)].min(offsets[x]);
        let (sd, sa) = (side(d), side(a));
        if sd == sa {
            continue; // level edge
        }
        let (from, to) = if sd == 0 {
            (vertex_of[d], vertex_of[a])
        } else {
            (vertex_of[a], vertex_of[d])
        };
        if from == to {
            return Err(SchemeError::CycleDetected);
        }
        arcs.push((from, to, e));
    }
    // Kahn's algorithm, smallest vertex first for determinism.
    let n_v = vertices.len();
    let mut indeg = vec![0usize; n_v];
    for &(_, to, _) in &arcs {
        indeg[to] += 1;
    }
    let mut topo_order = Vec::with_capacity(n_v);
    let mut done = vec![false; n_v];
    while topo_order.len() < n_v {
        let Some(v) = (0..n_v).find(|&v| !done[v] && indeg[v] == 0) else {
            return Err(SchemeError::CycleDetected);
        };
        done[v] = true;
        topo_order.push(v);
        for &(from, to, _) in &arcs {
            if from == v {
                indeg[to] -= 1;
            }
        }
    }
    Ok(OffsetGraph {
        n_vertices: n_v,
        arcs,
        topo_order,
    })
}

/// Complete census of unlabeled rooted schemes of the given genus: 4-valent
/// unicellular blossoming maps with every interior degree at least 3, rooted
/// on a scheme bud, well-oriented, and balanced — around every vertex the
/// corner labels close up, which any labeled scheme satisfies.  The degree
/// identity v3 + 2*v4 = 4g - 2 bounds the sizes: with L leaves, v3 = 2L, so
/// L ranges over 1..=2g-1.
pub fn enumerate_rooted_schemes(genus: usize) -> Result<Vec<BlossomingMap>, SchemeError> {
    assert!(genus >= 1, "schemes exist only in positive genus");
    let mut out = Vec::new();
    for leaves in 1..=(2 * genus - 1) {
        let k_interior = leaves + 4 * genus - 2;
        let candidates = enumerate_blossoming(
            k_interior,
            leaves,
            BlossomFilter {
                four_valent: true,
                genus: Some(genus),
                scheme_rooted: true,
                scheme: true,
                ..Default::default()
            },
        )?;
        out.extend(
            candidates
                .into_iter()
                .filter(|s| offset_labels(s).is_ok()),
        );
    }
    Ok(out)
}

/// One census line: the scheme with its canonical and unrooted keys, degree
/// profile and offset arcs.
#[derive(Debug, Serialize)]
pub struct SchemeRecord {
    pub map: BlossomJson,
    pub encoding: Vec<u32>,
    pub unrooted_key: Vec<u32>,
    pub v_s3: usize,
    pub v_s4: usize,
    pub n_edges: usize,
    pub offset_arcs: Vec<(usize, usize)>,
}

pub fn scheme_record(s: &BlossomingMap) -> Result<SchemeRecord, SchemeError> {
    let degs = s.interior_degrees();
    let g = offset_graph(s)?;
    Ok(SchemeRecord {
        map: s.to_json_value(),
        encoding: s.canonical_encoding(),
        unrooted_key: s.unrooted_class_key(),
        v_s3: degs.iter().filter(|&&d| d == 3).count(),
        v_s4: degs.iter().filter(|&&d| d == 4).count(),
        n_edges: s.n_interior_edges(),
        offset_arcs: g.arcs.iter().map(|&(f, t, _)| (f, t)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_p4, enumerate_r4, enumerate_u4, group_by_unrooted};
    use std::collections::{BTreeMap, BTreeSet};

    #[test]
    fn pruning_matches_oracle_families() {
        // prune maps U onto P, and is the identity on P.
        for leaves in 1..=3 {
            let u_maps = enumerate_u4(1, leaves).unwrap();
            let mut pruned_by_leaves: BTreeMap<usize, BTreeSet<Vec<u32>>> = BTreeMap::new();
            for u in &u_maps {
                let p = prune(u).unwrap();
                assert!(p.map().is_well_labeled());
                let l = p.map().leaves().len();
                pruned_by_leaves
                    .entry(l)
                    .or_default()
                    .insert(p.map().canonical_encoding());
            }
            for (&l, keys) in &pruned_by_leaves {
                let p_maps = enumerate_p4(1, l).unwrap();
                let oracle: BTreeSet<Vec<u32>> =
                    p_maps.iter().map(|p| p.canonical_encoding()).collect();
                assert!(keys.is_subset(&oracle));
            }
        }
        for leaves in 1..=3 {
            for p in enumerate_p4(1, leaves).unwrap() {
                let again = prune(&p).unwrap();
                assert_eq!(again.map().canonical_encoding(), p.canonical_encoding());
                assert_eq!(again.v_s3 + 2 * again.v_s4, 4 * again.genus() - 2);
                assert_eq!((again.v_s3, again.v_s4), (2, 0));
                assert_eq!(
                    again.rootable_scheme_stems().len(),
                    2 * again.genus() - again.v_s4
                );
            }
        }
    }

    #[test]
    fn extended_scheme_preserves_genus() {
        for leaves in 1..=3 {
            for u in enumerate_u4(1, leaves).unwrap() {
                let (core, _) = extended_scheme(&u).unwrap();
                assert_eq!(core.genus(), 1);
                assert_eq!(core.n_faces(), 1);
                let degs = core.vertex_degrees();
                assert!(degs.iter().all(|&d| d >= 2));
            }
        }
    }

    #[test]
    fn genus_zero_maps_prune_to_nothing() {
        let u_list = enumerate_u4(0, 2).unwrap();
        assert!(!u_list.is_empty());
        for u in &u_list {
            assert_eq!(prune(u).unwrap_err(), SchemeError::GenusZero);
            assert_eq!(extended_scheme(u).unwrap_err(), SchemeError::GenusZero);
        }
    }

    #[test]
    fn scheme_rooted_split_of_scheme_stems() {
        // Genus 1: scheme-rooted maps carry 1 scheme bud and 1 scheme leaf;
        // branch-rooted maps carry 2 scheme leaves and no scheme bud.
        for leaves in 1..=3 {
            for p in enumerate_p4(1, leaves).unwrap() {
                let p = PrunedMap::new(p).unwrap();
                let stems = p.rootable_scheme_stems();
                assert_eq!(stems.len(), 2);
                let scheme_buds = stems
                    .iter()
                    .filter(|&&s| p.map().stem_dir(s) == Some(StemDir::Bud))
                    .count();
                if p.is_scheme_rooted() {
                    assert_eq!(scheme_buds, 1);
                } else {
                    assert_eq!(scheme_buds, 0);
                }
            }
        }
    }

    #[test]
    fn reroot_on_scheme_law() {
        // Per unrooted extended scheme: (2g - v4) |P_L| = (L + 1) |R_L|, the
        // coefficient form of the scheme-rerooting identity.
        for leaves in 1..=3 {
            let p_maps = enumerate_p4(1, leaves).unwrap();
            let r_maps = enumerate_r4(1, leaves).unwrap();
            let key = |b: &BlossomingMap| {
                let (core, _) = extended_scheme(b).unwrap();
                unrooted_graph_key(&core)
            };
            let mut p_by: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for p in &p_maps {
                *p_by.entry(key(p)).or_default() += 1;
            }
            let mut r_by: BTreeMap<Vec<u32>, usize> = BTreeMap::new();
            for r in &r_maps {
                *r_by.entry(key(r)).or_default() += 1;
            }
            assert_eq!(
                p_by.keys().collect::<Vec<_>>(),
                r_by.keys().collect::<Vec<_>>()
            );
            for (k, &np) in &p_by {
                assert_eq!(2 * np, (leaves + 1) * r_by[k]);
            }
        }
        // Mechanics: rerooting on a scheme stem yields a scheme-rooted map;
        // marking the root is the identity.
        for p in enumerate_p4(1, 2).unwrap() {
            let p = PrunedMap::new(p).unwrap();
            for s in p.rootable_scheme_stems() {
                let (r, old) = reroot_on_scheme(&p, s).unwrap();
                assert!(r.is_scheme_rooted());
                if s == p.map().root() {
                    assert_eq!(r.map().canonical_encoding(), p.map().canonical_encoding());
                } else {
                    // The old root is rootable in the output, but need not be
                    // a scheme stem — hence the (2g - v4) vs (L + 1) count.
                    assert!(r.map().rootable_stems().contains(&old));
                }
            }
        }
    }

    #[test]
    fn merge_expand_round_trip() {
        let mut seen_steps = BTreeSet::new();
        for leaves in 1..=3 {
            for r in enumerate_r4(1, leaves).unwrap() {
                let p = PrunedMap::new(r).unwrap();
                let (l, paths) = merge_branches(&p).unwrap();
                // The merged scheme has no branch vertices left.
                assert!(l.map().interior_degrees().iter().all(|&d| d >= 3));
                assert_eq!(l.map().genus(), 1);
                assert!(l.map().is_well_oriented().unwrap());
                for (_, path) in &paths {
                    assert!(path.is_consistent());
                    for &s in &path.steps {
                        seen_steps.insert(format!("{s:?}"));
                    }
                }
                // Offsets from labels agree with offsets from the orientation.
                assert_eq!(offset_labels(l.map()).unwrap(), l.offsets().to_vec());
                let back = expand_branches(&l, &paths).unwrap();
                assert_eq!(
                    back.map().canonical_encoding(),
                    p.map().canonical_encoding()
                );
            }
        }
        // All 6 branch-vertex types occur across the enumeration.
        assert_eq!(seen_steps.len(), 6);
    }

    #[test]
    fn offset_graphs_are_acyclic() {
        for leaves in 1..=3 {
            for r in enumerate_r4(1, leaves).unwrap() {
                let p = PrunedMap::new(r).unwrap();
                let (l, _) = merge_branches(&p).unwrap();
                let g = l.offset_graph().unwrap();
                assert_eq!(g.topo_order.len(), g.n_vertices);
                // Arcs respect the topological order.
                let pos: BTreeMap<usize, usize> = g
                    .topo_order
                    .iter()
                    .enumerate()
                    .map(|(i, &v)| (v, i))
                    .collect();
                for &(f, t, _) in &g.arcs {
                    assert!(pos[&f] < pos[&t]);
                }
            }
        }
    }

    #[test]
    fn genus_one_census() {
        let census = enumerate_rooted_schemes(1).unwrap();
        assert_eq!(census.len(), 3);
        for s in &census {
            let degs = s.interior_degrees();
            assert_eq!(degs.iter().filter(|&&d| d == 3).count(), 2);
            assert_eq!(degs.iter().filter(|&&d| d == 4).count(), 0);
            assert_eq!(s.n_interior_edges(), 3);
            assert_eq!(s.n_vertices(), 2);
            assert_eq!(s.genus(), 1);
            offset_graph(s).unwrap();
            scheme_record(s).unwrap();
        }
        // Every scheme reached by merging an oracle-enumerated R map is in
        // the census, and the census is reached completely.
        let census_keys: BTreeSet<Vec<u32>> =
            census.iter().map(|s| s.canonical_encoding()).collect();
        assert_eq!(census_keys.len(), census.len());
        let mut reached = BTreeSet::new();
        for leaves in 1..=4 {
            for r in enumerate_r4(1, leaves).unwrap() {
                let p = PrunedMap::new(r).unwrap();
                let (l, _) = merge_branches(&p).unwrap();
                let k = l.map().canonical_encoding();
                assert!(census_keys.contains(&k));
                reached.insert(k);
            }
        }
        assert_eq!(reached, census_keys);
        // Unrooted grouping is consistent: class sizes match the rootable
        // scheme stem counts.
        let classes = group_by_unrooted(&census);
        assert_eq!(classes.len(), 2);
        let total: usize = classes.values().map(|v| v.len()).sum();
        assert_eq!(total, census.len());
    }
}
