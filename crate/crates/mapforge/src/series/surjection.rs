//! Surjections onto initial integer segments and the inversion identities
//! used to symmetrize scheme series.
//!
//! A surjection on `n` elements is stored as `o: Vec<usize>` with values in
//! `1..=k` and every value hit; it encodes the ordered set partition whose
//! i-th block is `o^{-1}(i)`.  To each surjection is attached the monomial
//! `X(o) = prod_{i<j} X_ij^(+1 if o(i) > o(j), else -1)` in pair variables,
//! and the central identity inverts it as an alternating sum over
//! refinements of the reversed surjection:
//!
//! `X(p)^{-1} = sum over o refining reverse(p) of (-1)^(k(o)-n) X(o)`.
//!
//! Specializing `X_ij -> D^(number of arcs between i and j)` for the arcs of
//! an offset graph yields the Laurent-monomial identity that makes each
//! scheme series a symmetric rational function of `D`.

use num::{BigInt, One, Zero};
use std::collections::BTreeMap;

use super::SeriesError;

pub type Surjection = Vec<usize>;

/// All surjections from `n` labeled elements onto `1..=k`, any `k`.
pub fn enumerate_surjections(n: usize) -> Vec<Surjection> {
    let mut out = Vec::new();
    let mut cur = vec![1usize; n];
    loop {
        let k = *cur.iter().max().unwrap();
        if (1..=k).all(|v| cur.contains(&v)) {
            out.push(cur.clone());
        }
        // Odometer over 1..=n in each slot.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                for v in cur.iter_mut().skip(i + 1) {
                    *v = 1;
                }
                break;
            }
        }
    }
}

pub fn image_size(o: &[usize]) -> usize {
    *o.iter().max().unwrap()
}

/// Whether `o` refines `p`: the ordered partition of `p` merges consecutive
/// blocks of `o`.  Equivalently, `p(i) < p(j)` forces `o(i) < o(j)`.
pub fn refines(o: &[usize], p: &[usize]) -> bool {
    debug_assert_eq!(o.len(), p.len());
    (0..o.len()).all(|i| {
        (0..o.len()).all(|j| p[i] >= p[j] || o[i] < o[j])
    })
}

/// The reversed surjection `i -> k + 1 - p(i)`.
pub fn reverse(p: &[usize]) -> Surjection {
    let k = image_size(p);
    p.iter().map(|&v| k + 1 - v).collect()
}

/// The canonical permutation refining `p`: within each block of `p`, later
/// elements come first.  Its monomial inverts the reversed surjection's:
/// `X(canonical(p)) = X(reverse(p))^{-1}`.
pub fn canonical_permutation(p: &[usize]) -> Surjection {
    let n = p.len();
    (0..n)
        .map(|i| {
            let below = p.iter().filter(|&&v| v < p[i]).count();
            let tied_after = (i..n).filter(|&j| p[j] == p[i]).count();
            below + tied_after
        })
        .collect()
}

/// Exponent vector of `X(o)` over the pairs `(i, j)`, `i < j`, in
/// lexicographic order: `+1` on inversions, `-1` otherwise (ties included).
pub fn x_monomial(o: &[usize]) -> Vec<i8> {
    let n = o.len();
    let mut exps = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..n {
        for j in (i + 1)..n {
            exps.push(if o[i] > o[j] { 1 } else { -1 });
        }
    }
    exps
}

/// A formal sum of pair-variable Laurent monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct XPoly {
    terms: BTreeMap<Vec<i8>, BigInt>,
}

impl XPoly {
    pub fn monomial(exps: Vec<i8>, coeff: BigInt) -> Self {
        let mut p = XPoly::default();
        p.add_term(exps, coeff);
        p
    }

    pub fn add_term(&mut self, exps: Vec<i8>, coeff: BigInt) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                if !coeff.is_zero() {
                    v.insert(coeff);
                }
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i8>, BigInt> {
        &self.terms
    }
}

/// The alternating refinement sum `sum_{o refining reverse(p)}
/// (-1)^(k(o) - n) X(o)`.
pub fn refinement_sum(p: &[usize], all: &[Surjection]) -> XPoly {
    let n = p.len();
    let rev = reverse(p);
    let mut acc = XPoly::default();
    for o in all.iter().filter(|o| refines(o, &rev)) {
        let sign = if (image_size(o) + n) % 2 == 0 {
            BigInt::one()
        } else {
            -BigInt::one()
        };
        acc.add_term(x_monomial(o), sign);
    }
    acc
}

/// Counts (ties, inversions, anti-inversions) of a surjection against a set
/// of arcs `(i, j)` with `i < j` on the same ground set.
pub fn arc_counts(o: &[usize], arcs: &[(usize, usize)]) -> (usize, usize, usize) {
    let (mut ties, mut inv, mut anti) = (0, 0, 0);
    for &(i, j) in arcs {
        debug_assert!(i < j);
        match o[i].cmp(&o[j]) {
            std::cmp::Ordering::Equal => ties += 1,
            std::cmp::Ordering::Greater => inv += 1,
            std::cmp::Ordering::Less => anti += 1,
        }
    }
    (ties, inv, anti)
}

/// Checks the symbolic inversion identity for every surjection on `n`
/// elements: the refinement sum over `reverse(p)` collapses to the single
/// monomial `X(p)^{-1}`.
pub fn verify_sum_identity(n: usize) -> Result<(), SeriesError> {
    let all = enumerate_surjections(n);
    for p in &all {
        let lhs = XPoly::monomial(
            x_monomial(p).iter().map(|&e| -e).collect(),
            BigInt::one(),
        );
        let rhs = refinement_sum(p, &all);
        if lhs != rhs {
            return Err(SeriesError::Identity(format!(
                "refinement sum fails for surjection {p:?}"
            )));
        }
    }
    Ok(())
}

/// Checks the `D`-specialization of the inversion identity against a set of
/// arcs: for every surjection `p`,
/// `D^(t(p)+a(p)-i(p)) = sum_{o refining reverse(p)} (-1)^(k(o)-n)
/// D^(i(o)-t(o)-a(o))`.
pub fn verify_d_specialization(n: usize, arcs: &[(usize, usize)]) -> Result<(), SeriesError> {
    let all = enumerate_surjections(n);
    for p in &all {
        let (t, i, a) = arc_counts(p, arcs);
        let lhs_exp = t as i64 + a as i64 - i as i64;
        let mut rhs: BTreeMap<i64, BigInt> = BTreeMap::new();
        for o in all.iter().filter(|o| refines(o, &reverse(p))) {
            let (ot, oi, oa) = arc_counts(o, arcs);
            let exp = oi as i64 - ot as i64 - oa as i64;
            let sign = if (image_size(o) + n) % 2 == 0 {
                BigInt::one()
            } else {
                -BigInt::one()
            };
            let e = rhs.entry(exp).or_default();
            *e += sign;
            if e.is_zero() {
                rhs.remove(&exp);
            }
        }
        let collapsed = rhs.len() == 1
            && rhs
                .get(&lhs_exp)
                .is_some_and(|c| c.is_one());
        if !collapsed {
            return Err(SeriesError::Identity(format!(
                "D-specialization fails for surjection {p:?} with arcs {arcs:?}"
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn surjection_counts_are_fubini_numbers() {
        assert_eq!(enumerate_surjections(1).len(), 1);
        assert_eq!(enumerate_surjections(2).len(), 3);
        assert_eq!(enumerate_surjections(3).len(), 13);
        assert_eq!(enumerate_surjections(4).len(), 75);
    }

    #[test]
    fn reverse_and_refinement_basics() {
        assert_eq!(reverse(&[1, 2, 1]), vec![2, 1, 2]);
        assert_eq!(reverse(&reverse(&[1, 3, 2])), vec![1, 3, 2]);
        // A permutation refines every surjection it is compatible with.
        assert!(refines(&[1, 3, 2], &[1, 2, 2]));
        assert!(!refines(&[3, 1, 2], &[1, 2, 2]));
        // Every surjection refines the all-ones surjection.
        for o in enumerate_surjections(3) {
            assert!(refines(&o, &[1, 1, 1]));
        }
    }

    #[test]
    fn canonical_permutation_inverts_x() {
        for n in 1..=4 {
            for p in enumerate_surjections(n) {
                let r = canonical_permutation(&p);
                // r is a permutation refining p.
                let mut seen = r.clone();
                seen.sort_unstable();
                assert_eq!(seen, (1..=n).collect::<Vec<_>>());
                assert!(refines(&r, &p));
                // X(r(p)) = X(reverse(p))^{-1}: reversing a surjection flips
                // strict comparisons and the canonical refinement resolves
                // ties against the tie-breaking in X.
                let xr = x_monomial(&r);
                let xrev: Vec<i8> = x_monomial(&reverse(&p)).iter().map(|&e| -e).collect();
                assert_eq!(xr, xrev);
            }
        }
    }

    #[test]
    fn symbolic_identity_small() {
        for n in 1..=4 {
            verify_sum_identity(n).unwrap();
        }
    }

    #[test]
    fn alternating_sum_is_parity_of_vertices() {
        // Specializing every variable to 1 in the identity:
        // sum over refinements of (-1)^(k(o)-n) equals 1.
        for n in 1..=4 {
            let all = enumerate_surjections(n);
            for p in &all {
                let s: i64 = all
                    .iter()
                    .filter(|o| refines(o, &reverse(p)))
                    .map(|o| if (image_size(o) + n) % 2 == 0 { 1 } else { -1 })
                    .sum();
                assert_eq!(s, 1);
            }
        }
    }

    #[test]
    fn d_specialization_small() {
        // All arc subsets on 3 ordered vertices.
        let pairs = [(0, 1), (0, 2), (1, 2)];
        for mask in 0..8u32 {
            let arcs: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            verify_d_specialization(3, &arcs).unwrap();
        }
    }
}
