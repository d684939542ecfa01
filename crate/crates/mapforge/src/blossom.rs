//! Blossoming maps and the opening/closing bijection.
//!
//! A blossoming map is a map some of whose darts are *stems*: unmatched
//! half-edges carrying a direction — *buds* point out of their vertex,
//! *leaves* point in.  Stems live inside the `sigma` cycles like ordinary
//! darts but have no `alpha` partner.  A blossoming map is rooted on a bud.
//!
//! The opening algorithm cuts a bicolorable map with its dual-geodesic
//! orientation into a unicellular blossoming map (the cut edges become
//! bud/leaf pairs); the closing algorithm re-matches buds to leaves by cyclic
//! parenthesization of the contour word and is its inverse.  The fractional
//! variants extend this to arbitrary maps through half-orientations.

use crate::map::{Dart, RotationMap};
use crate::orient::{EdgeState, HalfOrientation, Orientation};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StemDir {
    Bud,
    Leaf,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BlossomError {
    #[error("sigma is not a permutation")]
    NotPermutation,
    #[error("alpha must be an involution on interior darts and absent on stems")]
    BadStems,
    #[error("the root must be a bud stem")]
    RootNotBud,
    #[error("a blossoming map needs as many buds as leaves")]
    StemCountMismatch,
    #[error("darts are not connected")]
    Disconnected,
    #[error("the map is not unicellular")]
    NotUnicellular,
    #[error("corner labels are inconsistent")]
    InconsistentLabeling,
    #[error("marked stem is not rootable")]
    MarkNotRootable,
    #[error("the opening walk did not visit every corner")]
    OpeningStuck,
}

/// One step of the face tour: the corner `c(d)` the walk sits in, and the
/// dart it meets next (`sigma(d)`), which is either crossed (interior) or
/// passed (stem).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TourEvent {
    Cross(Dart),
    Stem(Dart),
}

/// Unicellular rotation map with stems, rooted at a corner.
///
/// The map is rooted at the corner `c(root_corner)`; the *root bud* is the
/// first stem met in the face tour from that corner and must be a bud.  When
/// the corner just precedes the root bud this is the usual rooting on a bud;
/// the extra generality is needed for the fractional opening, whose walk may
/// cross bi-oriented edges before cutting its first bud.  A map with no stems
/// at all is allowed too: the fractional opening of a map that is already
/// unicellular cuts nothing, and closing such a map is the identity.
///
/// The interior map may be empty: a single vertex whose darts are all stems
/// (genus 0, unicellular) — this arises as the opening of one-vertex maps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlossomingMap {
    sigma: Vec<Dart>,
    sigma_inv: Vec<Dart>,
    alpha: Vec<Option<Dart>>,
    stem_dir: Vec<Option<StemDir>>,
    root_corner: Dart,
    root_bud: Dart,
    /// Interior edges in min-dart order.
    edges: Vec<(Dart, Dart)>,
    edge_of: Vec<Option<usize>>,
    /// Orientation state per interior edge.
    orient: Vec<EdgeState>,
}

impl BlossomingMap {
    /// Validates and builds a blossoming map rooted at the corner
    /// `c(root_corner)`.  The map must be unicellular and the first stem of
    /// its face tour must be a bud.  When `orient` is `None` the map
    /// receives its well-orientation.
    pub fn new(
        sigma: Vec<Dart>,
        alpha: Vec<Option<Dart>>,
        stem_dir: Vec<Option<StemDir>>,
        root_corner: Dart,
        orient: Option<Vec<EdgeState>>,
    ) -> Result<Self, BlossomError> {
        let n = sigma.len();
        if n == 0 || alpha.len() != n || stem_dir.len() != n {
            return Err(BlossomError::NotPermutation);
        }
        {
            let mut seen = vec![false; n];
            for &x in &sigma {
                if x >= n || seen[x] {
                    return Err(BlossomError::NotPermutation);
                }
                seen[x] = true;
            }
        }
        let mut buds = 0;
        let mut leaves = 0;
        for d in 0..n {
            match (alpha[d], stem_dir[d]) {
                (Some(a), None) => {
                    if a >= n || a == d || alpha[a] != Some(d) {
                        return Err(BlossomError::BadStems);
                    }
                }
                (None, Some(StemDir::Bud)) => buds += 1,
                (None, Some(StemDir::Leaf)) => leaves += 1,
                _ => return Err(BlossomError::BadStems),
            }
        }
        if root_corner >= n {
            return Err(BlossomError::RootNotBud);
        }
        if buds != leaves {
            return Err(BlossomError::StemCountMismatch);
        }
        // Connectivity under sigma and (partial) alpha.
        let mut seen = vec![false; n];
        let mut stack = vec![root_corner];
        seen[root_corner] = true;
        let mut reached = 1;
        while let Some(d) = stack.pop() {
            let mut nexts = vec![sigma[d]];
            if let Some(a) = alpha[d] {
                nexts.push(a);
            }
            for x in nexts {
                if !seen[x] {
                    seen[x] = true;
                    reached += 1;
                    stack.push(x);
                }
            }
        }
        if reached != n {
            return Err(BlossomError::Disconnected);
        }

        let mut sigma_inv = vec![0; n];
        for d in 0..n {
            sigma_inv[sigma[d]] = d;
        }
        let mut edges = Vec::new();
        let mut edge_of = vec![None; n];
        for d in 0..n {
            if let Some(a) = alpha[d] {
                if d < a {
                    edge_of[d] = Some(edges.len());
                    edge_of[a] = Some(edges.len());
                    edges.push((d, a));
                }
            }
        }
        let mut b = BlossomingMap {
            sigma,
            sigma_inv,
            alpha,
            stem_dir,
            root_corner,
            root_bud: root_corner, // fixed below from the tour
            orient: vec![EdgeState::Bi; edges.len()],
            edges,
            edge_of,
        };
        let tour = b.tour()?;
        // With no stems the root bud degenerates to the root corner.
        b.root_bud = tour
            .iter()
            .find_map(|ev| match *ev {
                TourEvent::Stem(s) => Some(s),
                TourEvent::Cross(_) => None,
            })
            .unwrap_or(root_corner);
        if buds > 0 && b.stem_dir[b.root_bud] != Some(StemDir::Bud) {
            return Err(BlossomError::RootNotBud);
        }
        match orient {
            Some(o) => {
                if o.len() != b.edges.len() {
                    return Err(BlossomError::BadStems);
                }
                for (e, &s) in o.iter().enumerate() {
                    if let EdgeState::Toward(h) = s {
                        if b.edge_of[h] != Some(e) {
                            return Err(BlossomError::BadStems);
                        }
                    }
                }
                b.orient = o;
            }
            None => {
                b = b.well_orient();
            }
        }
        Ok(b)
    }

    pub fn n_darts(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self, d: Dart) -> Dart {
        self.sigma[d]
    }

    pub fn sigma_inv(&self, d: Dart) -> Dart {
        self.sigma_inv[d]
    }

    pub fn alpha(&self, d: Dart) -> Option<Dart> {
        self.alpha[d]
    }

    pub fn stem_dir(&self, d: Dart) -> Option<StemDir> {
        self.stem_dir[d]
    }

    pub fn is_stem(&self, d: Dart) -> bool {
        self.stem_dir[d].is_some()
    }

    /// The root bud: the first stem met in the face tour from the root corner.
    pub fn root(&self) -> Dart {
        self.root_bud
    }

    /// The dart whose corner `c(d)` is the root corner.
    pub fn root_corner(&self) -> Dart {
        self.root_corner
    }

    /// Interior edges, min-dart order.
    pub fn interior_edges(&self) -> &[(Dart, Dart)] {
        &self.edges
    }

    pub fn n_interior_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edge_of(&self, d: Dart) -> Option<usize> {
        self.edge_of[d]
    }

    pub fn edge_state(&self, e: usize) -> EdgeState {
        self.orient[e]
    }

    pub fn edge_states(&self) -> &[EdgeState] {
        &self.orient
    }

    /// Replaces the interior orientation.
    pub fn with_orientation(&self, orient: Vec<EdgeState>) -> BlossomingMap {
        assert_eq!(orient.len(), self.edges.len());
        let mut b = self.clone();
        b.orient = orient;
        b
    }

    pub fn stems(&self) -> Vec<Dart> {
        (0..self.n_darts()).filter(|&d| self.is_stem(d)).collect()
    }

    pub fn buds(&self) -> Vec<Dart> {
        (0..self.n_darts())
            .filter(|&d| self.stem_dir[d] == Some(StemDir::Bud))
            .collect()
    }

    pub fn leaves(&self) -> Vec<Dart> {
        (0..self.n_darts())
            .filter(|&d| self.stem_dir[d] == Some(StemDir::Leaf))
            .collect()
    }

    /// Vertex cycles of sigma, each starting at its smallest dart.
    pub fn vertices(&self) -> Vec<Vec<Dart>> {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                cycle.push(d);
                d = self.sigma[d];
            }
            out.push(cycle);
        }
        out
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices().len()
    }

    /// Interior degree (non-stem darts) of the vertex containing dart `d`'s cycle,
    /// indexed per vertex as returned by [`Self::vertices`].
    pub fn interior_degrees(&self) -> Vec<usize> {
        self.vertices()
            .iter()
            .map(|c| c.iter().filter(|&&d| !self.is_stem(d)).count())
            .collect()
    }

    /// Face permutation on interior darts: continue around the face skipping
    /// stems.
    fn phi_interior(&self, d: Dart) -> Dart {
        debug_assert!(!self.is_stem(d));
        let mut x = self.sigma[self.alpha[d].unwrap()];
        while self.is_stem(x) {
            x = self.sigma[x];
        }
        x
    }

    pub fn n_faces(&self) -> usize {
        let n = self.n_darts();
        let mut seen = vec![false; n];
        let mut count = 0;
        for start in 0..n {
            if self.is_stem(start) || seen[start] {
                continue;
            }
            let mut d = start;
            while !seen[d] {
                seen[d] = true;
                d = self.phi_interior(d);
            }
            count += 1;
        }
        if self.edges.is_empty() {
            1
        } else {
            count
        }
    }

    pub fn is_unicellular(&self) -> bool {
        self.n_faces() == 1
    }

    pub fn genus(&self) -> usize {
        let v = self.n_vertices() as i64;
        let e = self.edges.len() as i64;
        let f = self.n_faces() as i64;
        let g2 = 2 - (v - e + f);
        debug_assert!(g2 >= 0 && g2 % 2 == 0);
        (g2 / 2) as usize
    }

    /// The interior map together with old-dart ids per new dart, or `None`
    /// when there are no interior edges.
    pub fn interior_map(&self) -> Option<(RotationMap, Vec<Dart>)> {
        if self.edges.is_empty() {
            return None;
        }
        let old: Vec<Dart> = (0..self.n_darts()).filter(|&d| !self.is_stem(d)).collect();
        let mut new_of = vec![usize::MAX; self.n_darts()];
        for (i, &d) in old.iter().enumerate() {
            new_of[d] = i;
        }
        let alpha: Vec<Dart> = old.iter().map(|&d| new_of[self.alpha[d].unwrap()]).collect();
        let sigma: Vec<Dart> = old
            .iter()
            .map(|&d| {
                let mut x = self.sigma[d];
                while self.is_stem(x) {
                    x = self.sigma[x];
                }
                new_of[x]
            })
            .collect();
        // Root at the first interior dart after the root bud (any choice
        // would do; this one is canonical).
        let mut r = self.sigma[self.root_bud];
        while self.is_stem(r) {
            r = self.sigma[r];
        }
        let m = RotationMap::new(alpha, sigma, new_of[r]).expect("interior map is valid");
        Some((m, old))
    }

    /// The full face tour starting at the root corner.  Returns one event
    /// per dart when the map is unicellular.
    pub fn tour(&self) -> Result<Vec<TourEvent>, BlossomError> {
        let n = self.n_darts();
        let start = self.root_corner;
        let mut events = Vec::with_capacity(n);
        let mut c = start;
        loop {
            let s = self.sigma[c];
            if self.is_stem(s) {
                events.push(TourEvent::Stem(s));
                c = s;
            } else {
                events.push(TourEvent::Cross(s));
                c = self.alpha[s].unwrap();
            }
            if c == start {
                break;
            }
            if events.len() > n {
                return Err(BlossomError::NotUnicellular);
            }
        }
        if events.len() != n {
            return Err(BlossomError::NotUnicellular);
        }
        Ok(events)
    }

    /// Stems in tour order, starting with the root bud.
    pub fn stems_in_tour_order(&self) -> Result<Vec<Dart>, BlossomError> {
        Ok(self
            .tour()?
            .into_iter()
            .filter_map(|ev| match ev {
                TourEvent::Stem(s) => Some(s),
                TourEvent::Cross(_) => None,
            })
            .collect())
    }

    /// Contour word: U per bud, D per leaf, in tour order from the root bud.
    pub fn contour_word(&self) -> Result<String, BlossomError> {
        Ok(self
            .stems_in_tour_order()?
            .iter()
            .map(|&s| match self.stem_dir[s].unwrap() {
                StemDir::Bud => 'U',
                StemDir::Leaf => 'D',
            })
            .collect())
    }

    /// True when the contour word is a Dyck word.
    pub fn is_well_rooted(&self) -> Result<bool, BlossomError> {
        let mut h = 0i64;
        for ch in self.contour_word()?.chars() {
            h += if ch == 'U' { 1 } else { -1 };
            if h < 0 {
                return Ok(false);
            }
        }
        Ok(h == 0)
    }

    /// Rootable stems: the root bud and every leaf.
    pub fn rootable_stems(&self) -> Vec<Dart> {
        let mut out = vec![self.root_bud];
        out.extend(self.leaves().into_iter().filter(|&l| l != self.root_bud));
        out.sort_unstable();
        out
    }

    /// The two well-rootable stems: change the root's U into a D, let `-k` be
    /// the minimum height; the first step from `-k+2` to `-k+1` and the first
    /// step from `-k+1` to `-k` mark them.
    pub fn well_rootable_stems(&self) -> Result<[Dart; 2], BlossomError> {
        let stems = self.stems_in_tour_order()?;
        let steps: Vec<i64> = stems
            .iter()
            .enumerate()
            .map(|(i, &s)| {
                if i == 0 {
                    -1 // root bud read as a down-step
                } else if self.stem_dir[s] == Some(StemDir::Bud) {
                    1
                } else {
                    -1
                }
            })
            .collect();
        let mut h = 0i64;
        let heights: Vec<i64> = steps
            .iter()
            .map(|&st| {
                h += st;
                h
            })
            .collect();
        let k = -*heights.iter().min().unwrap();
        let first_to = |target: i64| -> Dart {
            for (i, &hh) in heights.iter().enumerate() {
                let prev = if i == 0 { 0 } else { heights[i - 1] };
                if hh == target && prev == target + 1 {
                    return stems[i];
                }
            }
            unreachable!("well-rootable step must exist");
        };
        Ok([first_to(-k + 1), first_to(-k)])
    }

    /// True when every interior edge is met backward (or bi-oriented) at its
    /// first crossing in the face tour.
    pub fn is_well_oriented(&self) -> Result<bool, BlossomError> {
        let mut seen = vec![false; self.edges.len()];
        for ev in self.tour()? {
            if let TourEvent::Cross(s) = ev {
                let e = self.edge_of[s].unwrap();
                if !seen[e] {
                    seen[e] = true;
                    match self.orient[e] {
                        EdgeState::Toward(h) if h == s => {}
                        EdgeState::Bi => {}
                        _ => return Ok(false),
                    }
                }
            }
        }
        Ok(true)
    }

    /// The unique well-orientation: the first crossing of each edge in the
    /// face tour becomes its head.  Idempotent; bi-oriented edges become
    /// fully oriented.
    pub fn well_orient(&self) -> BlossomingMap {
        let tour = self.tour().expect("well_orient needs a unicellular map");
        let mut orient = self.orient.clone();
        let mut seen = vec![false; self.edges.len()];
        for ev in tour {
            if let TourEvent::Cross(s) = ev {
                let e = self.edge_of[s].unwrap();
                if !seen[e] {
                    seen[e] = true;
                    orient[e] = EdgeState::Toward(s);
                }
            }
        }
        self.with_orientation(orient)
    }

    /// Corner labels (one per dart, for the corner `c(d)`), propagated along
    /// the face tour from 0 at the root corner, then checked around every
    /// vertex: crossing a dart counterclockwise raises the label by 1 when
    /// the dart is outgoing, lowers it by 1 when ingoing, and keeps it equal
    /// when the dart's edge is bi-oriented.  Crossings keep the label along
    /// the tour, so the root bud always reads labels (0, 1).
    pub fn compute_labels(&self) -> Result<Vec<i64>, BlossomError> {
        let n = self.n_darts();
        let start = self.root_corner;
        let mut labels = vec![i64::MAX; n];
        let mut c = start;
        let mut label = 0i64;
        loop {
            labels[c] = label;
            let s = self.sigma[c];
            if self.is_stem(s) {
                label += match self.stem_dir[s].unwrap() {
                    StemDir::Bud => 1,
                    StemDir::Leaf => -1,
                };
                c = s;
            } else {
                c = self.alpha[s].unwrap();
            }
            if c == start {
                break;
            }
            if labels[c] != i64::MAX {
                return Err(BlossomError::NotUnicellular);
            }
        }
        if labels.iter().any(|&l| l == i64::MAX) {
            return Err(BlossomError::NotUnicellular);
        }
        // Around-vertex verification for every dart.
        for x in 0..n {
            let before = labels[self.sigma_inv[x]];
            let after = labels[x];
            let delta = match self.stem_dir[x] {
                Some(StemDir::Bud) => 1,
                Some(StemDir::Leaf) => -1,
                None => match self.orient[self.edge_of[x].unwrap()] {
                    EdgeState::Bi => 0,
                    EdgeState::Toward(h) => {
                        if h == x {
                            -1 // ingoing at x's vertex
                        } else {
                            1
                        }
                    }
                },
            };
            if after != before + delta {
                return Err(BlossomError::InconsistentLabeling);
            }
        }
        Ok(labels)
    }

    pub fn is_well_labeled(&self) -> bool {
        self.compute_labels().is_ok()
    }

    /// Rerooting bijection: moves the root to a marked rootable stem (a leaf
    /// or the root itself), swapping the two stems' directions and
    /// re-deriving the well-orientation.  Returns the rerooted map and the
    /// old root as the marked stem of the output (well-rootable there).
    pub fn reroot(&self, marked: Dart) -> Result<(BlossomingMap, Dart), BlossomError> {
        if marked == self.root_bud {
            return Ok((self.clone(), marked));
        }
        if self.stem_dir.get(marked).copied().flatten() != Some(StemDir::Leaf) {
            return Err(BlossomError::MarkNotRootable);
        }
        let mut b = self.clone();
        b.stem_dir[self.root_bud] = Some(StemDir::Leaf);
        b.stem_dir[marked] = Some(StemDir::Bud);
        b.root_bud = marked;
        b.root_corner = self.sigma_inv[marked];
        let b = b.well_orient();
        Ok((b, self.root_bud))
    }

    /// Canonical encoding of the rooted blossoming map, including stem
    /// directions and the interior orientation.
    pub fn canonical_encoding(&self) -> Vec<u32> {
        self.encode(self.root_corner, true)
    }

    /// Key identifying the root-equivalence class: same undirected map with
    /// the same set of rootable stems, ignoring stem directions and the
    /// orientation.  Computed as the minimum undirected encoding over all
    /// rootable stems as starting points.
    pub fn unrooted_class_key(&self) -> Vec<u32> {
        let rootable: std::collections::HashSet<Dart> =
            self.rootable_stems().into_iter().collect();
        let mut best: Option<Vec<u32>> = None;
        for &s in rootable.iter() {
            let enc = self.encode_undirected(s, &rootable);
            if best.as_ref().map_or(true, |b| enc < *b) {
                best = Some(enc);
            }
        }
        best.unwrap()
    }

    fn bfs_order(&self, start: Dart) -> (Vec<u32>, Vec<Dart>) {
        let n = self.n_darts();
        let mut label = vec![u32::MAX; n];
        let mut order = Vec::with_capacity(n);
        label[start] = 0;
        order.push(start);
        let mut head = 0;
        while head < order.len() {
            let d = order[head];
            head += 1;
            let mut nexts = vec![self.sigma[d]];
            if let Some(a) = self.alpha[d] {
                nexts.push(a);
            }
            for x in nexts {
                if label[x] == u32::MAX {
                    label[x] = order.len() as u32;
                    order.push(x);
                }
            }
        }
        (label, order)
    }

    fn encode(&self, start: Dart, with_extras: bool) -> Vec<u32> {
        let (label, order) = self.bfs_order(start);
        let mut out = Vec::with_capacity(4 * order.len());
        for &d in &order {
            out.push(label[self.sigma[d]]);
            out.push(match self.alpha[d] {
                Some(a) => label[a],
                None => u32::MAX,
            });
            if with_extras {
                out.push(match self.stem_dir[d] {
                    None => 0,
                    Some(StemDir::Bud) => 1,
                    Some(StemDir::Leaf) => 2,
                });
                out.push(match self.edge_of[d] {
                    None => 0,
                    Some(e) => match self.orient[e] {
                        EdgeState::Bi => 1,
                        EdgeState::Toward(h) => {
                            if h == d {
                                2
                            } else {
                                3
                            }
                        }
                    },
                });
            }
        }
        out
    }

    fn encode_undirected(&self, start: Dart, rootable: &std::collections::HashSet<Dart>) -> Vec<u32> {
        let (label, order) = self.bfs_order(start);
        let mut out = Vec::with_capacity(3 * order.len());
        for &d in &order {
            out.push(label[self.sigma[d]]);
            out.push(match self.alpha[d] {
                Some(a) => label[a],
                None => u32::MAX,
            });
            out.push(match (self.is_stem(d), rootable.contains(&d)) {
                (false, _) => 0,
                (true, false) => 1,
                (true, true) => 2,
            });
        }
        out
    }

    // --- closing ----------------------------------------------------------

    /// Closing algorithm: cyclically matches buds to leaves by the
    /// parenthesization of the contour word, merges each matched pair into an
    /// edge oriented bud-to-leaf, and roots the result on the corner just
    /// before the former root bud.  Genus is preserved.
    pub fn close(&self) -> Result<(RotationMap, HalfOrientation), BlossomError> {
        let stems = self.stems_in_tour_order()?;
        let s = stems.len();
        if s == 0 {
            // Nothing to match: the map is already closed.
            let alpha: Vec<Dart> = (0..self.n_darts())
                .map(|d| self.alpha[d].unwrap())
                .collect();
            let m = RotationMap::new(alpha, self.sigma.clone(), self.root_corner)
                .map_err(|_| BlossomError::BadStems)?;
            let mut states = vec![EdgeState::Bi; m.n_edges()];
            for (e, &(d, _)) in self.edges.iter().enumerate() {
                states[m.edge_of(d)] = self.orient[e];
            }
            let h = HalfOrientation::new(&m, states);
            return Ok((m, h));
        }
        let steps: Vec<i64> = stems
            .iter()
            .map(|&d| match self.stem_dir[d].unwrap() {
                StemDir::Bud => 1,
                StemDir::Leaf => -1,
            })
            .collect();
        if steps.iter().sum::<i64>() != 0 {
            return Err(BlossomError::StemCountMismatch);
        }
        // Rotate just after a position of minimum height; the rotated word is
        // a Dyck word and stack matching realizes the cyclic rule.
        let mut h = 0i64;
        let mut min_h = 0i64;
        let mut min_pos = s - 1; // height 0 before the first step
        for (i, &st) in steps.iter().enumerate() {
            h += st;
            if h < min_h {
                min_h = h;
                min_pos = i;
            }
        }
        let mut alpha: Vec<Dart> = (0..self.n_darts())
            .map(|d| self.alpha[d].unwrap_or(usize::MAX))
            .collect();
        let mut new_heads = Vec::new();
        let mut stack = Vec::new();
        for i in 0..s {
            let idx = (min_pos + 1 + i) % s;
            let d = stems[idx];
            match self.stem_dir[d].unwrap() {
                StemDir::Bud => stack.push(d),
                StemDir::Leaf => {
                    let u = stack.pop().expect("Dyck rotation guarantees a match");
                    alpha[u] = d;
                    alpha[d] = u;
                    new_heads.push(d); // edge oriented bud -> leaf
                }
            }
        }
        debug_assert!(stack.is_empty());
        let m = RotationMap::new(alpha, self.sigma.clone(), self.root_corner)
            .map_err(|_| BlossomError::BadStems)?;
        // Assemble the half-orientation over the closed map's edges.
        let mut states = vec![EdgeState::Bi; m.n_edges()];
        for (e, &(d, a)) in self.edges.iter().enumerate() {
            let _ = a;
            states[m.edge_of(d)] = self.orient[e];
        }
        for h in new_heads {
            states[m.edge_of(h)] = EdgeState::Toward(h);
        }
        let h = HalfOrientation::new(&m, states);
        Ok((m, h))
    }

    // --- JSON -------------------------------------------------------------

    pub fn to_json_value(&self) -> BlossomJson {
        let interior: Vec<Dart> = (0..self.n_darts()).filter(|&d| !self.is_stem(d)).collect();
        let mut new_of = vec![0usize; self.n_darts()];
        for (i, &d) in interior.iter().enumerate() {
            new_of[d] = i + 1; // 1-indexed
        }
        let alpha: Vec<usize> = interior
            .iter()
            .map(|&d| new_of[self.alpha[d].unwrap()])
            .collect();
        let sigma: Vec<usize> = interior
            .iter()
            .map(|&d| {
                let mut x = self.sigma[d];
                while self.is_stem(x) {
                    x = self.sigma[x];
                }
                new_of[x]
            })
            .collect();
        // Stems listed by increasing internal dart id; "after_dart" is the
        // nearest interior dart counterclockwise before the stem (0 when the
        // map has no interior darts).
        let stem_list: Vec<Dart> = self.stems();
        let stems: Vec<StemJson> = stem_list
            .iter()
            .map(|&st| {
                let mut x = self.sigma_inv[st];
                while self.is_stem(x) && !interior.is_empty() {
                    x = self.sigma_inv[x];
                }
                StemJson {
                    after_dart: if interior.is_empty() { 0 } else { new_of[x] },
                    dir: self.stem_dir[st].unwrap(),
                }
            })
            .collect();
        let root_stem = stem_list
            .iter()
            .position(|&s| s == self.root_bud)
            .unwrap_or(0);
        let orientation: Vec<usize> = self
            .orient
            .iter()
            .enumerate()
            .map(|(e, &s)| match s {
                EdgeState::Toward(h) => new_of[h],
                EdgeState::Bi => new_of[self.edges[e].0],
            })
            .collect();
        let bi: Vec<usize> = self
            .orient
            .iter()
            .enumerate()
            .filter(|&(_, &s)| s == EdgeState::Bi)
            .map(|(e, _)| e + 1)
            .collect();
        let labels = self.compute_labels().ok().map(|ls| {
            interior
                .iter()
                .chain(stem_list.iter())
                .map(|&d| ls[d])
                .collect()
        });
        // The root corner is either at an interior dart ("root" > 0) or at a
        // stem ("root" = 0 and "root_corner_stem" gives the stem index).
        let (root, root_corner_stem) = if self.is_stem(self.root_corner) {
            (
                0,
                Some(stem_list.iter().position(|&s| s == self.root_corner).unwrap()),
            )
        } else {
            (new_of[self.root_corner], None)
        };
        BlossomJson {
            n_darts: interior.len(),
            alpha,
            sigma,
            root,
            stems,
            root_stem,
            root_corner_stem,
            orientation: Some(orientation),
            bioriented: if bi.is_empty() { None } else { Some(bi) },
            labels,
        }
    }

    /// Rebuilds a blossoming map from JSON.  Interior darts become `0..n`,
    /// stems are appended in list order.
    pub fn from_json_value(j: &BlossomJson) -> Result<Self, BlossomError> {
        let n_int = j.n_darts;
        if j.alpha.len() != n_int || j.sigma.len() != n_int {
            return Err(BlossomError::NotPermutation);
        }
        let n = n_int + j.stems.len();
        let mut alpha: Vec<Option<Dart>> = vec![None; n];
        for d in 0..n_int {
            if j.alpha[d] == 0 || j.alpha[d] > n_int {
                return Err(BlossomError::BadStems);
            }
            alpha[d] = Some(j.alpha[d] - 1);
        }
        // Insert stems into the sigma cycles: collect, per interior dart, the
        // stems that follow it, in list order.
        let mut after: Vec<Vec<usize>> = vec![Vec::new(); n_int.max(1)];
        for (i, st) in j.stems.iter().enumerate() {
            if n_int == 0 {
                after[0].push(i);
            } else {
                if st.after_dart == 0 || st.after_dart > n_int {
                    return Err(BlossomError::BadStems);
                }
                after[st.after_dart - 1].push(i);
            }
        }
        let mut sigma = vec![0usize; n];
        if n_int == 0 {
            // One vertex, all stems, in list order.
            for i in 0..n {
                sigma[i] = (i + 1) % n;
            }
        } else {
            for d in 0..n_int {
                let mut prev = d;
                for &i in &after[d] {
                    sigma[prev] = n_int + i;
                    prev = n_int + i;
                }
                sigma[prev] = j.sigma[d] - 1;
            }
        }
        let mut stem_dir: Vec<Option<StemDir>> = vec![None; n];
        for (i, st) in j.stems.iter().enumerate() {
            stem_dir[n_int + i] = Some(st.dir);
        }
        if !j.stems.is_empty() && j.root_stem >= j.stems.len() {
            return Err(BlossomError::RootNotBud);
        }
        let root_bud = n_int + j.root_stem;
        let root_corner = if j.root > 0 {
            if j.root > n_int {
                return Err(BlossomError::BadStems);
            }
            j.root - 1
        } else {
            match j.root_corner_stem {
                Some(i) if i < j.stems.len() => n_int + i,
                Some(_) => return Err(BlossomError::BadStems),
                None if j.stems.is_empty() => return Err(BlossomError::BadStems),
                // Default: the corner just before the root bud.
                None => (0..n).find(|&d| sigma[d] == root_bud).unwrap(),
            }
        };
        let orient = match &j.orientation {
            None => None,
            Some(heads) => {
                // Heads are 1-indexed interior darts; reconstruct edge order.
                let mut edges = Vec::new();
                for d in 0..n_int {
                    let a = j.alpha[d] - 1;
                    if d < a {
                        edges.push((d, a));
                    }
                }
                if heads.len() != edges.len() {
                    return Err(BlossomError::BadStems);
                }
                let bi: std::collections::HashSet<usize> = j
                    .bioriented
                    .as_deref()
                    .unwrap_or(&[])
                    .iter()
                    .map(|&e| e.wrapping_sub(1))
                    .collect();
                Some(
                    heads
                        .iter()
                        .enumerate()
                        .map(|(e, &h)| {
                            if bi.contains(&e) {
                                EdgeState::Bi
                            } else {
                                EdgeState::Toward(h - 1)
                            }
                        })
                        .collect(),
                )
            }
        };
        let b = BlossomingMap::new(sigma, alpha, stem_dir, root_corner, orient)?;
        if !j.stems.is_empty() && b.root() != root_bud {
            return Err(BlossomError::RootNotBud);
        }
        Ok(b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StemJson {
    pub after_dart: usize,
    pub dir: StemDir,
}

/// JSON form of a blossoming map: the interior map (1-indexed) plus stems
/// inserted in sigma order immediately after their `after_dart`.
///
/// `root` is the interior dart whose corner is the root corner, or 0 when
/// that corner sits at a stem, in which case `root_corner_stem` gives the
/// stem's index (defaulting to the corner just before the root bud).
/// `orientation` lists one 1-indexed head dart per interior edge (min-dart
/// edge order); `bioriented` lists the 1-indexed interior edges whose head
/// entry is a placeholder because the edge is bi-oriented.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlossomJson {
    pub n_darts: usize,
    pub alpha: Vec<usize>,
    pub sigma: Vec<usize>,
    pub root: usize,
    pub stems: Vec<StemJson>,
    pub root_stem: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub root_corner_stem: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub orientation: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bioriented: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub labels: Option<Vec<i64>>,
}

/// Opening algorithm for a full orientation.  With the dual-geodesic
/// orientation of a bicolorable map this produces a well-rooted, well-labeled,
/// well-oriented unicellular blossoming map of the same genus and vertex
/// degrees.
pub fn open(m: &RotationMap, o: &Orientation) -> Result<BlossomingMap, BlossomError> {
    fractional_open(m, &o.to_half())
}

/// Fractional opening: walks the corner map from the root corner, following
/// each edge the first time it is met ingoing or bi-oriented, cutting fully
/// outgoing edges into buds, turning fully ingoing edges into leaves at their
/// second visit, and following bi-oriented or outgoing edges back at their
/// second visit.
pub fn fractional_open(m: &RotationMap, h: &HalfOrientation) -> Result<BlossomingMap, BlossomError> {
    let n = m.n_darts();
    let mut visited = vec![false; m.n_edges()];
    let mut stem_dir: Vec<Option<StemDir>> = vec![None; n];
    let start = m.root();
    let mut c = start;
    let mut steps = 0usize;
    loop {
        let s = m.sigma(c);
        let e = m.edge_of(s);
        let ingoing = h.state(e) == EdgeState::Toward(s);
        let bi = h.state(e) == EdgeState::Bi;
        if !visited[e] {
            visited[e] = true;
            if ingoing || bi {
                c = m.alpha(s); // follow (backward or bi-oriented first)
            } else {
                stem_dir[s] = Some(StemDir::Bud); // cut a fully outgoing edge
                c = s;
            }
        } else if ingoing {
            stem_dir[s] = Some(StemDir::Leaf); // second visit of a fully ingoing edge
            c = s;
        } else {
            c = m.alpha(s); // follow back
        }
        steps += 1;
        if c == start {
            break;
        }
        if steps > n {
            return Err(BlossomError::OpeningStuck);
        }
    }
    if steps != n {
        return Err(BlossomError::OpeningStuck);
    }
    let alpha: Vec<Option<Dart>> = (0..n)
        .map(|d| {
            if stem_dir[d].is_some() {
                None
            } else {
                Some(m.alpha(d))
            }
        })
        .collect();
    let sigma: Vec<Dart> = (0..n).map(|d| m.sigma(d)).collect();
    // Interior edges keep their orientation state; re-index to the new edge
    // numbering (min-dart order among surviving edges).
    let mut interior: Vec<(Dart, EdgeState)> = Vec::new();
    for d in 0..n {
        if stem_dir[d].is_none() && d < m.alpha(d) {
            interior.push((d, h.state(m.edge_of(d))));
        }
    }
    let orient: Vec<EdgeState> = interior.iter().map(|&(_, s)| s).collect();
    // The output keeps the root corner of `m`; the constructor checks that
    // the first stem of the tour from there is a bud.
    BlossomingMap::new(sigma, alpha, stem_dir, m.root(), Some(orient))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::map::perm_from_cycles;
    use crate::orient::{dual_geodesic_half_orientation, dual_geodesic_orientation};

    /// One vertex, stems only, in the given cyclic order of directions,
    /// rooted on the first bud.
    fn star(dirs: &[StemDir]) -> BlossomingMap {
        let n = dirs.len();
        let sigma: Vec<Dart> = (0..n).map(|i| (i + 1) % n).collect();
        let bud = dirs.iter().position(|&d| d == StemDir::Bud).unwrap();
        BlossomingMap::new(
            sigma,
            vec![None; n],
            dirs.iter().map(|&d| Some(d)).collect(),
            (bud + n - 1) % n, // the corner just before the bud
            None,
        )
        .unwrap()
    }

    use StemDir::{Bud, Leaf};

    #[test]
    fn contour_words() {
        assert_eq!(star(&[Bud, Leaf]).contour_word().unwrap(), "UD");
        assert_eq!(star(&[Bud, Bud, Leaf, Leaf]).contour_word().unwrap(), "UUDD");
        assert_eq!(star(&[Bud, Leaf, Bud, Leaf]).contour_word().unwrap(), "UDUD");
    }

    #[test]
    fn close_nested_and_crossing() {
        // UUDD: matching (U2,D3), (U1,D4): nested loops, planar.
        let (m, _) = star(&[Bud, Bud, Leaf, Leaf]).close().unwrap();
        assert_eq!((m.n_vertices(), m.n_edges(), m.n_faces()), (1, 2, 3));
        assert_eq!(m.genus(), 0);
        assert_eq!(m.alpha(1), 2);
        assert_eq!(m.alpha(0), 3);
        // UDUD: matching (U1,D2), (U3,D4).
        let (m2, _) = star(&[Bud, Leaf, Bud, Leaf]).close().unwrap();
        assert_eq!(m2.alpha(0), 1);
        assert_eq!(m2.alpha(2), 3);
        assert_eq!(m2.genus(), 0);
    }

    #[test]
    fn close_preserves_genus() {
        for dirs in [
            vec![Bud, Leaf],
            vec![Bud, Bud, Leaf, Leaf],
            vec![Bud, Leaf, Bud, Leaf],
            vec![Bud, Bud, Bud, Leaf, Leaf, Leaf],
        ] {
            let b = star(&dirs);
            let g = b.genus();
            let (m, _) = b.close().unwrap();
            assert_eq!(m.genus(), g, "closing must preserve genus for {dirs:?}");
        }
    }

    #[test]
    fn well_rooted_and_rootable() {
        let b = star(&[Bud, Bud, Leaf, Leaf]);
        assert!(b.is_well_rooted().unwrap());
        assert_eq!(b.rootable_stems().len(), b.leaves().len() + 1);
        assert_eq!(b.well_rootable_stems().unwrap().len(), 2);
        // UDUD: change root U to D gives heights -1,-2,-1,-2: k=2; the first
        // step reaching -1 is position 1 (stem 1), the first reaching -2 is
        // position 2's... step 2 ends at -2: stems at tour positions 1 and 2.
        let b2 = star(&[Bud, Leaf, Bud, Leaf]);
        let wr = b2.well_rootable_stems().unwrap();
        let stems = b2.stems_in_tour_order().unwrap();
        assert_eq!(wr[0], stems[0]); // first step 0 -> -1 is the re-read root
        assert_eq!(wr[1], stems[1]);
    }

    #[test]
    fn open_triangle_round_trip() {
        let m = RotationMap::new(
            perm_from_cycles(6, &[&[1, 2], &[3, 4], &[5, 6]]),
            perm_from_cycles(6, &[&[1, 6], &[2, 3], &[4, 5]]),
            0,
        )
        .unwrap();
        let o = dual_geodesic_orientation(&m).unwrap();
        let b = open(&m, &o).unwrap();
        assert!(b.is_unicellular());
        assert_eq!(b.genus(), 0);
        assert!(b.is_well_rooted().unwrap());
        assert!(b.is_well_oriented().unwrap());
        assert!(b.is_well_labeled());
        let (m2, o2) = b.close().unwrap();
        assert_eq!(m2, m);
        assert_eq!(o2.to_full().unwrap(), o);
        // Labels realize the dual distances.
        let labels = b.compute_labels().unwrap();
        let dist = crate::orient::face_distances(&m);
        for d in 0..m.n_darts() {
            assert_eq!(labels[d], dist[m.face_of_corner(d)] as i64);
        }
    }

    #[test]
    fn open_torus_radial_round_trip() {
        let torus = RotationMap::new(
            perm_from_cycles(4, &[&[1, 3], &[2, 4]]),
            perm_from_cycles(4, &[&[1, 2, 3, 4]]),
            0,
        )
        .unwrap();
        let m = torus.radial();
        let o = dual_geodesic_orientation(&m).unwrap();
        let b = open(&m, &o).unwrap();
        assert_eq!(b.genus(), 1);
        assert!(b.is_unicellular());
        assert!(b.is_well_rooted().unwrap());
        assert!(b.is_well_labeled());
        // 4-valent genus-1: leaves = vertices - 1.
        assert_eq!(b.leaves().len(), m.n_vertices() - 1);
        let (m2, o2) = b.close().unwrap();
        assert_eq!(m2, m);
        assert_eq!(o2.to_full().unwrap(), o);
    }

    #[test]
    fn open_one_vertex_map_has_empty_interior() {
        let edge = RotationMap::new(perm_from_cycles(2, &[&[1, 2]]), vec![0, 1], 0).unwrap();
        let m = edge.radial();
        let o = dual_geodesic_orientation(&m).unwrap();
        let b = open(&m, &o).unwrap();
        assert_eq!(b.n_interior_edges(), 0);
        assert_eq!(b.buds().len(), 2);
        assert_eq!(b.leaves().len(), 2);
        assert_eq!(b.genus(), 0);
        let (m2, _) = b.close().unwrap();
        assert_eq!(m2, m);
    }

    #[test]
    fn fractional_open_round_trip_pendant_loop() {
        // Loop with a pendant edge: not bicolorable.
        let m = RotationMap::new(
            perm_from_cycles(4, &[&[1, 2], &[3, 4]]),
            perm_from_cycles(4, &[&[1, 3, 2]]),
            0,
        )
        .unwrap();
        assert!(m.is_bicolorable().is_none());
        let h = dual_geodesic_half_orientation(&m);
        let b = fractional_open(&m, &h).unwrap();
        assert!(b.is_unicellular());
        assert!(b.is_well_rooted().unwrap());
        assert!(b.is_well_oriented().unwrap());
        assert!(b.is_well_labeled());
        let (m2, h2) = b.close().unwrap();
        assert_eq!(m2, m);
        assert_eq!(h2, h);
    }

    #[test]
    fn reroot_identity_and_cycle() {
        let b = star(&[Bud, Leaf, Bud, Leaf]);
        let (same, mark) = b.reroot(b.root()).unwrap();
        assert_eq!(same, b);
        assert_eq!(mark, b.root());
        // Reroot the 2-stem map at its leaf: word stays UD (cyclic).
        let b2 = star(&[Bud, Leaf]);
        let leaf = b2.leaves()[0];
        let (r, old) = b2.reroot(leaf).unwrap();
        assert_eq!(r.contour_word().unwrap(), "UD");
        assert_eq!(r.root(), leaf);
        assert_eq!(r.stem_dir(old), Some(Leaf));
        assert!(r.is_well_labeled());
        // The marked stem is well-rootable in the output.
        assert!(r.well_rootable_stems().unwrap().contains(&old));
    }

    #[test]
    fn json_round_trip() {
        let torus = RotationMap::new(
            perm_from_cycles(4, &[&[1, 3], &[2, 4]]),
            perm_from_cycles(4, &[&[1, 2, 3, 4]]),
            0,
        )
        .unwrap();
        let m = torus.radial();
        let o = dual_geodesic_orientation(&m).unwrap();
        let b = open(&m, &o).unwrap();
        let j = b.to_json_value();
        let text = serde_json::to_string(&j).unwrap();
        let back: BlossomJson = serde_json::from_str(&text).unwrap();
        assert_eq!(back, j);
        let b2 = BlossomingMap::from_json_value(&back).unwrap();
        // Same rooted blossoming map up to relabeling.
        assert_eq!(b2.canonical_encoding(), b.canonical_encoding());
        // And the JSON of the rebuilt map is bit-identical.
        assert_eq!(serde_json::to_string(&b2.to_json_value()).unwrap(), text);
    }

    #[test]
    fn well_orient_idempotent() {
        let b = star(&[Bud, Bud, Leaf, Leaf]);
        let w = b.well_orient();
        assert_eq!(w.well_orient(), w);
        assert!(w.is_well_oriented().unwrap());
    }
}
