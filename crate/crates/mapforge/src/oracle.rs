//! Brute-force exhaustive generators, used as ground truth.
//!
//! Everything here trades speed for obvious correctness: rooted maps are
//! enumerated as raw rotation systems over all permutations (deduplicated by
//! canonical encoding), blossoming maps through their face tour (each rooted
//! unicellular blossoming map corresponds to exactly one tour word, so no
//! deduplication is needed), and the series coefficients through direct
//! lattice-path dynamic programming and tree generation.

use crate::blossom::{BlossomingMap, StemDir};
use crate::map::{Dart, RotationMap};
use rayon::prelude::*;
use std::collections::BTreeMap;
use thiserror::Error;

/// Hard cap on darts for the all-maps oracle (factorial blowup beyond).
pub const DART_BOUND: usize = 12;
/// Hard cap on darts for the matching-based 4-valent oracle.
pub const MATCHING_DART_BOUND: usize = 16;
/// Hard cap on tour positions for the blossoming generator.
pub const TOUR_BOUND: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("requested size exceeds the oracle's bound")]
    BoundExceeded,
}

fn connected(sigma: &[Dart], alpha: &[Dart]) -> bool {
    let n = sigma.len();
    let mut seen = vec![false; n];
    let mut stack = vec![0];
    seen[0] = true;
    let mut count = 1;
    while let Some(d) = stack.pop() {
        for x in [sigma[d], alpha[d]] {
            if !seen[x] {
                seen[x] = true;
                count += 1;
                stack.push(x);
            }
        }
    }
    count == n
}

fn merge_maps(
    mut a: BTreeMap<Vec<u32>, RotationMap>,
    b: BTreeMap<Vec<u32>, RotationMap>,
) -> BTreeMap<Vec<u32>, RotationMap> {
    a.extend(b);
    a
}

/// Every rooted map with `n_edges` edges (optionally restricted to one
/// genus), enumerated over all rotation systems with the edge pairing fixed
/// as (1 2)(3 4)… and the root fixed at dart 1, deduplicated by canonical
/// encoding, sorted by it.
pub fn enumerate_rooted_maps(
    n_edges: usize,
    genus: Option<usize>,
) -> Result<Vec<RotationMap>, OracleError> {
    let n = 2 * n_edges;
    if n_edges == 0 || n > DART_BOUND {
        return Err(OracleError::BoundExceeded);
    }
    let alpha: Vec<Dart> = (0..n).map(|d| d ^ 1).collect();
    fn rec(
        pos: usize,
        sigma: &mut Vec<Dart>,
        used: &mut Vec<bool>,
        alpha: &[Dart],
        genus: Option<usize>,
        out: &mut BTreeMap<Vec<u32>, RotationMap>,
    ) {
        let n = sigma.len();
        if pos == n {
            if !connected(sigma, alpha) {
                return;
            }
            let m = RotationMap::new(alpha.to_vec(), sigma.clone(), 0)
                .expect("connected rotation system");
            if genus.map_or(true, |g| m.genus() == g) {
                out.entry(m.canonical_encoding()).or_insert(m);
            }
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                sigma[pos] = v;
                rec(pos + 1, sigma, used, alpha, genus, out);
                used[v] = false;
            }
        }
    }
    let merged = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut out = BTreeMap::new();
            let mut sigma = vec![0; n];
            let mut used = vec![false; n];
            sigma[0] = first;
            used[first] = true;
            rec(1, &mut sigma, &mut used, &alpha, genus, &mut out);
            out
        })
        .reduce(BTreeMap::new, merge_maps);
    Ok(merged.into_values().collect())
}

/// Every rooted bicolorable 4-valent map with `n_vertices` vertices
/// (optionally restricted to one genus), enumerated over all perfect
/// matchings of the darts with the rotation system fixed as 4-cycles
/// (1 2 3 4)(5 6 7 8)… and the root at dart 1.
pub fn enumerate_bc4valent(
    n_vertices: usize,
    genus: Option<usize>,
) -> Result<Vec<RotationMap>, OracleError> {
    let n = 4 * n_vertices;
    if n_vertices == 0 || n > MATCHING_DART_BOUND {
        return Err(OracleError::BoundExceeded);
    }
    let mut sigma = vec![0; n];
    for v in 0..n_vertices {
        for i in 0..4 {
            sigma[4 * v + i] = 4 * v + (i + 1) % 4;
        }
    }
    fn rec(
        alpha: &mut Vec<Dart>,
        sigma: &[Dart],
        genus: Option<usize>,
        out: &mut BTreeMap<Vec<u32>, RotationMap>,
    ) {
        let n = alpha.len();
        let Some(i) = (0..n).find(|&d| alpha[d] == usize::MAX) else {
            if !connected(sigma, alpha) {
                return;
            }
            let m = RotationMap::new(alpha.clone(), sigma.to_vec(), 0)
                .expect("connected rotation system");
            if m.is_bicolorable().is_some() && genus.map_or(true, |g| m.genus() == g) {
                out.entry(m.canonical_encoding()).or_insert(m);
            }
            return;
        };
        for j in i + 1..n {
            if alpha[j] == usize::MAX {
                alpha[i] = j;
                alpha[j] = i;
                rec(alpha, sigma, genus, out);
                alpha[i] = usize::MAX;
                alpha[j] = usize::MAX;
            }
        }
    }
    let merged = (1..n)
        .into_par_iter()
        .map(|j| {
            let mut out = BTreeMap::new();
            let mut alpha = vec![usize::MAX; n];
            alpha[0] = j;
            alpha[j] = 0;
            rec(&mut alpha, &sigma, genus, &mut out);
            out
        })
        .reduce(BTreeMap::new, merge_maps);
    Ok(merged.into_values().collect())
}

/// Class predicates applied on top of the blossoming generator.  All
/// generated maps are unicellular, rooted on a bud, and well-oriented (the
/// constructor derives the well-orientation).
#[derive(Debug, Clone, Copy, Default)]
pub struct BlossomFilter {
    pub four_valent: bool,
    pub genus: Option<usize>,
    pub well_rooted: bool,
    pub well_labeled: bool,
    /// Pruned: every vertex has interior degree at least 2.
    pub pruned: bool,
    /// Scheme-rooted: the root bud sits on a vertex of interior degree >= 3.
    pub scheme_rooted: bool,
    /// Scheme: every vertex has interior degree at least 3 (at most one stem
    /// per vertex in 4-valent mode).
    pub scheme: bool,
}

struct BlossomGen {
    n: usize,
    /// Per tour position: None (undecided), or the chosen role.
    stem: Vec<Option<StemDir>>,
    partner: Vec<usize>,
    opens: Vec<usize>,
    buds_left: usize,
    leaves_left: usize,
    pairs_left: usize,
    /// Partial sigma links for the 4-valency prune.
    nxt: Vec<Option<usize>>,
    prv: Vec<Option<usize>>,
    filter: BlossomFilter,
    out: Vec<BlossomingMap>,
}

impl BlossomGen {
    /// Adds the sigma link a -> b, rejecting it when it closes a vertex cycle
    /// of length != 4 or extends an open chain beyond 4 (4-valent mode).
    fn add_link(&mut self, a: usize, b: usize) -> bool {
        debug_assert!(self.nxt[a].is_none() && self.prv[b].is_none());
        self.nxt[a] = Some(b);
        self.prv[b] = Some(a);
        if !self.filter.four_valent {
            return true;
        }
        // Walk forward from b; either we come back to a (cycle) or we reach
        // the chain's end, in which case we also walk backward from a.
        let mut len = 1;
        let mut x = b;
        loop {
            len += 1;
            if x == a {
                // Cycle of `len - 1` darts closed.
                if len - 1 == 4 && self.chain_stems_ok(a) {
                    return true;
                }
                break;
            }
            match self.nxt[x] {
                Some(y) => x = y,
                None => {
                    let mut back = a;
                    while let Some(y) = self.prv[back] {
                        back = y;
                        len += 1;
                    }
                    if len <= 4 && self.chain_stems_ok(a) {
                        return true;
                    }
                    break;
                }
            }
        }
        self.nxt[a] = None;
        self.prv[b] = None;
        false
    }

    /// In scheme mode, a vertex may carry at most one stem.  Walks the chain
    /// (or cycle) through `a` and counts the stems already decided on it —
    /// two or more can never be separated onto different vertices later.
    fn chain_stems_ok(&self, a: usize) -> bool {
        if !self.filter.scheme {
            return true;
        }
        let mut start = a;
        while let Some(y) = self.prv[start] {
            if y == a {
                break; // closed cycle
            }
            start = y;
        }
        let mut stems = 0;
        let mut x = start;
        loop {
            if self.stem[x].is_some() {
                stems += 1;
            }
            match self.nxt[x] {
                Some(y) if y != start => x = y,
                _ => break,
            }
        }
        stems < 2
    }

    fn remove_link(&mut self, a: usize, b: usize) {
        self.nxt[a] = None;
        self.prv[b] = None;
    }

    fn rec(&mut self, i: usize) {
        let n = self.n;
        if i == n {
            if self.opens.is_empty() {
                self.emit();
            }
            return;
        }
        // Stems.
        let dirs: &[StemDir] = if i == 0 {
            &[StemDir::Bud] // the root bud is always the first tour event
        } else {
            &[StemDir::Bud, StemDir::Leaf]
        };
        for &dir in dirs {
            let left = match dir {
                StemDir::Bud => &mut self.buds_left,
                StemDir::Leaf => &mut self.leaves_left,
            };
            if *left == 0 {
                continue;
            }
            *left -= 1;
            self.stem[i] = Some(dir);
            if self.add_link(i, (i + 1) % n) {
                self.rec(i + 1);
                self.remove_link(i, (i + 1) % n);
            }
            self.stem[i] = None;
            match dir {
                StemDir::Bud => self.buds_left += 1,
                StemDir::Leaf => self.leaves_left += 1,
            }
        }
        if i == 0 {
            return; // position 0 is the root bud, never interior
        }
        // Close an open chord: sigma(q) = i+1 and sigma(i) = q+1.
        for idx in 0..self.opens.len() {
            let q = self.opens[idx];
            self.opens.swap_remove(idx);
            self.partner[i] = q;
            self.partner[q] = i;
            if self.add_link(q, (i + 1) % n) {
                if self.add_link(i, (q + 1) % n) {
                    self.rec(i + 1);
                    self.remove_link(i, (q + 1) % n);
                }
                self.remove_link(q, (i + 1) % n);
            }
            self.partner[i] = usize::MAX;
            self.partner[q] = usize::MAX;
            self.opens.push(q);
            let last = self.opens.len() - 1;
            self.opens.swap(idx.min(last), last);
        }
        // Open a new chord.
        if self.pairs_left > 0 {
            self.pairs_left -= 1;
            self.opens.push(i);
            self.rec(i + 1);
            self.opens.pop();
            self.pairs_left += 1;
        }
    }

    fn emit(&mut self) {
        let n = self.n;
        let sigma: Vec<Dart> = (0..n)
            .map(|x| {
                if self.stem[x].is_some() {
                    (x + 1) % n
                } else {
                    (self.partner[x] + 1) % n
                }
            })
            .collect();
        let alpha: Vec<Option<Dart>> = (0..n)
            .map(|x| {
                if self.stem[x].is_some() {
                    None
                } else {
                    Some(self.partner[x])
                }
            })
            .collect();
        let root_corner = if self.stem[n - 1].is_some() {
            n - 1
        } else {
            self.partner[n - 1]
        };
        let b = BlossomingMap::new(sigma, alpha, self.stem.clone(), root_corner, None)
            .expect("tour construction yields a valid unicellular blossoming map");
        debug_assert_eq!(b.root(), 0);
        let f = &self.filter;
        if let Some(g) = f.genus {
            if b.genus() != g {
                return;
            }
        }
        if f.well_rooted && !b.is_well_rooted().unwrap() {
            return;
        }
        if f.well_labeled && !b.is_well_labeled() {
            return;
        }
        if f.pruned || f.scheme_rooted || f.scheme {
            let degs = b.interior_degrees();
            if f.pruned && degs.iter().any(|&d| d < 2) {
                return;
            }
            if f.scheme && degs.iter().any(|&d| d < 3) {
                return;
            }
            if f.scheme_rooted {
                let mut deg = 0;
                let mut x = b.root();
                loop {
                    if !b.is_stem(x) {
                        deg += 1;
                    }
                    x = b.sigma(x);
                    if x == b.root() {
                        break;
                    }
                }
                if deg < 3 {
                    return;
                }
            }
        }
        self.out.push(b);
    }
}

/// Every rooted unicellular blossoming map with `k_interior` interior edges
/// and `n_leaves` leaves (and as many buds), with the filter's predicates
/// applied.  Complete and duplicate-free: each rooted map corresponds to
/// exactly one tour word.
pub fn enumerate_blossoming(
    k_interior: usize,
    n_leaves: usize,
    filter: BlossomFilter,
) -> Result<Vec<BlossomingMap>, OracleError> {
    if n_leaves == 0 {
        return Ok(Vec::new()); // a blossoming map needs at least one bud
    }
    let n = 2 * k_interior + 2 * n_leaves;
    if n > TOUR_BOUND {
        return Err(OracleError::BoundExceeded);
    }
    let mut gen = BlossomGen {
        n,
        stem: vec![None; n],
        partner: vec![usize::MAX; n],
        opens: Vec::new(),
        buds_left: n_leaves,
        leaves_left: n_leaves,
        pairs_left: k_interior,
        nxt: vec![None; n],
        prv: vec![None; n],
        filter,
        out: Vec::new(),
    };
    gen.rec(0);
    Ok(gen.out)
}

fn four_valent_sizes(genus: usize, n_leaves: usize) -> Option<(usize, usize)> {
    // 4-valency and unicellularity force the interior edge count:
    // v - k + 1 = 2 - 2g and 4v = 2k + 2*(2*n_leaves)/2... concretely
    // k = n_leaves + 4g - 2 and v = n_leaves + 2g - 1.
    let k = (n_leaves + 4 * genus).checked_sub(2)?;
    Some((k, n_leaves))
}

/// O: well-rooted well-labeled well-oriented 4-valent unicellular blossoming
/// maps of the given genus, by leaves.
pub fn enumerate_o4(genus: usize, n_leaves: usize) -> Result<Vec<BlossomingMap>, OracleError> {
    let Some((k, l)) = four_valent_sizes(genus, n_leaves) else {
        return Ok(Vec::new());
    };
    enumerate_blossoming(
        k,
        l,
        BlossomFilter {
            four_valent: true,
            genus: Some(genus),
            well_rooted: true,
            well_labeled: true,
            ..Default::default()
        },
    )
}

/// U: rooted (not necessarily well-rooted) well-labeled well-oriented
/// 4-valent unicellular blossoming maps of the given genus, by leaves.
pub fn enumerate_u4(genus: usize, n_leaves: usize) -> Result<Vec<BlossomingMap>, OracleError> {
    let Some((k, l)) = four_valent_sizes(genus, n_leaves) else {
        return Ok(Vec::new());
    };
    enumerate_blossoming(
        k,
        l,
        BlossomFilter {
            four_valent: true,
            genus: Some(genus),
            well_labeled: true,
            ..Default::default()
        },
    )
}

/// P: pruned maps of U (every vertex has interior degree >= 2).
pub fn enumerate_p4(genus: usize, n_leaves: usize) -> Result<Vec<BlossomingMap>, OracleError> {
    let Some((k, l)) = four_valent_sizes(genus, n_leaves) else {
        return Ok(Vec::new());
    };
    enumerate_blossoming(
        k,
        l,
        BlossomFilter {
            four_valent: true,
            genus: Some(genus),
            well_labeled: true,
            pruned: true,
            ..Default::default()
        },
    )
}

/// R: scheme-rooted maps of P (root bud on a vertex of interior degree >= 3).
pub fn enumerate_r4(genus: usize, n_leaves: usize) -> Result<Vec<BlossomingMap>, OracleError> {
    let Some((k, l)) = four_valent_sizes(genus, n_leaves) else {
        return Ok(Vec::new());
    };
    enumerate_blossoming(
        k,
        l,
        BlossomFilter {
            four_valent: true,
            genus: Some(genus),
            well_labeled: true,
            pruned: true,
            scheme_rooted: true,
            ..Default::default()
        },
    )
}

/// O and U counted by vertices of the 4-valent map instead of leaves.
pub fn leaves_for_vertices(genus: usize, n_vertices: usize) -> Option<usize> {
    (n_vertices + 1).checked_sub(2 * genus).filter(|&l| l > 0)
}

/// Groups blossoming maps into root-equivalence classes (same undirected map
/// and same rootable-stem set).
pub fn group_by_unrooted(maps: &[BlossomingMap]) -> BTreeMap<Vec<u32>, Vec<&BlossomingMap>> {
    let mut classes: BTreeMap<Vec<u32>, Vec<&BlossomingMap>> = BTreeMap::new();
    for b in maps {
        classes.entry(b.unrooted_class_key()).or_default().push(b);
    }
    classes
}

/// Coefficients of D up to `order` by lattice-path counting: the coefficient
/// of z^n is the number of paths of length n-1 from 0 to 0 with steps +1, -1
/// and 4 colored level steps, staying nonnegative.
pub fn d_coefficients_by_paths(order: usize) -> Vec<u128> {
    let mut out = vec![0u128; order + 1];
    for (n, o) in out.iter_mut().enumerate().skip(1) {
        let len = n - 1;
        // dp[h] = paths of given length ending at height h >= 0.
        let mut dp = vec![0u128; len + 2];
        dp[0] = 1;
        for _ in 0..len {
            let mut next = vec![0u128; len + 2];
            for (h, &c) in dp.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                next[h + 1] += c;
                next[h] += 4 * c;
                if h > 0 {
                    next[h - 1] += c;
                }
            }
            dp = next;
        }
        *o = dp[0];
    }
    out
}

/// Coefficients of B up to `order`: the coefficient of z^n is the number of
/// unconstrained paths of length n from 0 to 0 with steps +1, -1 and 4
/// colored level steps.
pub fn b_coefficients_by_paths(order: usize) -> Vec<u128> {
    let mut out = vec![0u128; order + 1];
    for (n, o) in out.iter_mut().enumerate() {
        // dp over height offset by n so heights -n..=n fit.
        let mut dp = vec![0u128; 2 * n + 1];
        dp[n] = 1;
        for _ in 0..n {
            let mut next = vec![0u128; 2 * n + 1];
            for (h, &c) in dp.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                if h + 1 <= 2 * n {
                    next[h + 1] += c;
                }
                next[h] += 4 * c;
                if h > 0 {
                    next[h - 1] += c;
                }
            }
            dp = next;
        }
        *o = dp[n];
    }
    out
}

/// Coefficients of T up to `order` by explicit generation of plane binary
/// trees (every generated tree is materialized as a bracketing), each
/// weighted by 3 per inner vertex.
pub fn t_coefficients_by_trees(order: usize) -> Vec<u128> {
    fn trees(n_leaves: usize) -> Vec<String> {
        if n_leaves == 1 {
            return vec!["*".to_string()];
        }
        let mut out = Vec::new();
        for i in 1..n_leaves {
            for l in trees(i) {
                for r in trees(n_leaves - i) {
                    out.push(format!("({l}{r})"));
                }
            }
        }
        out
    }
    let mut out = vec![0u128; order + 1];
    for (n, o) in out.iter_mut().enumerate().skip(1) {
        *o = trees(n).len() as u128 * 3u128.pow((n - 1) as u32);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rooted_maps_one_edge() {
        let maps = enumerate_rooted_maps(1, None).unwrap();
        assert_eq!(maps.len(), 2); // the edge and the loop
        assert!(maps.iter().all(|m| m.genus() == 0));
    }

    #[test]
    fn planar_rooted_map_counts() {
        // 2, 9, 54 planar rooted maps with 1, 2, 3 edges.
        for (n, want) in [(1, 2), (2, 9), (3, 54)] {
            assert_eq!(enumerate_rooted_maps(n, Some(0)).unwrap().len(), want);
        }
    }

    #[test]
    fn genus_one_rooted_map_counts() {
        assert_eq!(enumerate_rooted_maps(1, Some(1)).unwrap().len(), 0);
        assert_eq!(enumerate_rooted_maps(2, Some(1)).unwrap().len(), 1);
        assert_eq!(enumerate_rooted_maps(3, Some(1)).unwrap().len(), 20);
    }

    #[test]
    fn bc4valent_small_counts() {
        // One 4-valent vertex: two planar rooted bicolorable maps (the two
        // nestings of two loops); the crossed torus map is not bicolorable
        // (its dual has a loop), matching |M_1(1 edge)| = 0.
        assert_eq!(enumerate_bc4valent(1, Some(0)).unwrap().len(), 2);
        assert_eq!(enumerate_bc4valent(1, Some(1)).unwrap().len(), 0);
        // |BC4_g(n vertices)| = |M_g(n edges)|.
        assert_eq!(enumerate_bc4valent(2, Some(0)).unwrap().len(), 9);
        assert_eq!(enumerate_bc4valent(2, Some(1)).unwrap().len(), 1);
    }

    #[test]
    fn blossoming_counts_match_maps() {
        // |O4_g(v vertices)| = |M_g(v edges)| for small sizes.
        for (g, v, want) in [(0, 1, 2), (0, 2, 9), (1, 2, 1), (1, 3, 20)] {
            let l = leaves_for_vertices(g, v).unwrap();
            assert_eq!(enumerate_o4(g, l).unwrap().len(), want, "g={g} v={v}");
        }
        // And g=1, v=1 is impossible.
        assert_eq!(leaves_for_vertices(1, 1), None);
    }

    #[test]
    fn rerooting_law_small() {
        // Per unrooted class with n+1 rootable stems: 2|U| = (n+1)|O|.
        let u = enumerate_u4(1, 2).unwrap();
        let o = enumerate_o4(1, 2).unwrap();
        let uc = group_by_unrooted(&u);
        let oc = group_by_unrooted(&o);
        assert_eq!(uc.len(), oc.len());
        for (key, us) in &uc {
            let os = &oc[key];
            let rootable = us[0].rootable_stems().len();
            assert_eq!(2 * us.len(), rootable * os.len());
        }
    }

    #[test]
    fn generated_maps_satisfy_their_predicates() {
        for b in enumerate_o4(1, 2).unwrap() {
            assert!(b.is_well_rooted().unwrap());
            assert!(b.is_well_oriented().unwrap());
            assert!(b.is_well_labeled());
            assert_eq!(b.genus(), 1);
            assert!(b.vertices().iter().all(|c| c.len() == 4));
        }
    }

    #[test]
    fn path_dp_coefficients() {
        assert_eq!(d_coefficients_by_paths(4), vec![0, 1, 4, 17, 76]);
        assert_eq!(b_coefficients_by_paths(3), vec![1, 4, 18, 88]);
        assert_eq!(t_coefficients_by_trees(4), vec![0, 1, 3, 18, 135]);
    }
}
