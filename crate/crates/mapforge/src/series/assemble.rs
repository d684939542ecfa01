//! From scheme censuses to the genus-g map series.
//!
//! Each rooted scheme `s` contributes a branch-substituted series
//!
//! `R^b_s = B^{n_e} * sum over surjections o of the scheme vertices of
//!          prod_i Phi(C_i) * D^(t(o) + a(o) - i(o))`
//!
//! where `Phi(c) = D^c / (1 - D^c)`, `C_i` is the number of edges leaving
//! the union of the first `i` blocks of `o`, and `t, i, a` count ties,
//! inversions and anti-inversions of `o` against the offset arcs.  The sum
//! is a rational function of `D`, symmetric under `D -> 1/D`, hence a
//! rational function of `z`; summing over a census and substituting the
//! tree series `T` assembles the generating series of rooted genus-g maps.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigInt, BigRational, One, Zero};
use serde::Serialize;

use super::laurent::{rational_in_z, LaurentRational, Poly};
use super::surjection::{arc_counts, enumerate_surjections, image_size};
use super::truncated::TruncatedSeries;
use super::{integer_coefficients, series_d, series_t, SeriesError};
use crate::blossom::BlossomingMap;
use crate::oracle::group_by_unrooted;
use crate::scheme::{enumerate_rooted_schemes, offset_graph};

/// The combinatorial data of a scheme that its series depends on: vertices
/// relabeled along the topological order of the offset graph (so every
/// offset arc goes forward), the edge multiset, and the offset arcs.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SchemeShape {
    pub n_vertices: usize,
    /// Undirected edges as sorted vertex pairs (loops allowed), sorted.
    pub edges: Vec<(usize, usize)>,
    /// Offset arcs; always forward (`i < j`) after relabeling.
    pub offset_arcs: Vec<(usize, usize)>,
}

pub fn scheme_shape(s: &BlossomingMap) -> Result<SchemeShape, SeriesError> {
    let g = offset_graph(s)?;
    let vertices = s.vertices();
    let mut vertex_of = vec![0usize; s.n_darts()];
    for (v, cycle) in vertices.iter().enumerate() {
        for &d in cycle {
            vertex_of[d] = v;
        }
    }
    let mut pos = vec![0usize; g.n_vertices];
    for (i, &v) in g.topo_order.iter().enumerate() {
        pos[v] = i;
    }
    let mut edges: Vec<(usize, usize)> = s
        .interior_edges()
        .iter()
        .map(|&(d, a)| {
            let (u, w) = (pos[vertex_of[d]], pos[vertex_of[a]]);
            (u.min(w), u.max(w))
        })
        .collect();
    edges.sort_unstable();
    let mut offset_arcs: Vec<(usize, usize)> = g
        .arcs
        .iter()
        .map(|&(f, t, _)| (pos[f], pos[t]))
        .collect();
    offset_arcs.sort_unstable();
    debug_assert!(offset_arcs.iter().all(|&(i, j)| i < j));
    Ok(SchemeShape {
        n_vertices: g.n_vertices,
        edges,
        offset_arcs,
    })
}

/// Cyclotomic polynomials `Phi_1 .. Phi_max`, computed by exact division:
/// `D^d - 1 = prod over divisors e of d of Phi_e`.
fn cyclotomics(max: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(); max + 1];
    for d in 1..=max {
        let mut f = vec![BigInt::zero(); d + 1];
        f[0] = -BigInt::one();
        f[d] = BigInt::one();
        let mut phi = Poly::new(f);
        for e in 1..d {
            if d % e == 0 {
                phi = phi.div_exact(&out[e]);
            }
        }
        out[d] = phi;
    }
    out
}

/// The scheme series as a rational function of `D`.
///
/// Surjections sharing the same multiset of cut sizes share their
/// `Phi`-product, and all denominators are products of `1 - D^c` factors.
/// The sum is therefore accumulated over a common denominator kept in
/// cyclotomic-factored form, with purely integer polynomial arithmetic; the
/// final cancellation is trial division by the irreducible factors, so no
/// polynomial gcd is ever taken.
pub fn r_b_s_shape(shape: &SchemeShape) -> LaurentRational {
    let n = shape.n_vertices;
    let n_e = shape.edges.len();
    let max_d = n_e.max(2);
    let cyclo = cyclotomics(max_d);
    let mut groups: BTreeMap<Vec<usize>, BTreeMap<i64, BigInt>> = BTreeMap::new();
    for o in enumerate_surjections(n) {
        let k = image_size(&o);
        let mut cuts = Vec::with_capacity(k - 1);
        for i in 1..k {
            let c = shape
                .edges
                .iter()
                .filter(|&&(u, w)| (o[u] <= i) != (o[w] <= i))
                .count();
            debug_assert!(c >= 1, "disconnected scheme");
            cuts.push(c);
        }
        let (t, inv, a) = arc_counts(&o, &shape.offset_arcs);
        let off = t as i64 + a as i64 - inv as i64;
        cuts.sort_unstable();
        let entry = groups.entry(cuts).or_default().entry(off).or_default();
        *entry += BigInt::one();
    }
    // Each group is p(D) * D^s / prod_c (1 - D^c) with
    // 1 - D^c = - prod over divisors d of c of Phi_d.
    struct Group {
        p: Poly,
        s: i64,
        mults: Vec<usize>,
    }
    let mut den_mult = vec![0usize; max_d + 1];
    let mut gs = Vec::new();
    for (cuts, offsets) in groups {
        let min = *offsets.keys().next().unwrap();
        let max = *offsets.keys().last().unwrap();
        let mut coeffs = vec![BigInt::zero(); (max - min) as usize + 1];
        for (e, c) in &offsets {
            coeffs[(e - min) as usize] = c.clone();
        }
        let mut p = Poly::new(coeffs);
        if cuts.len() % 2 == 1 {
            p = p.neg();
        }
        let mut mults = vec![0usize; max_d + 1];
        for &c in &cuts {
            for d in 1..=c {
                if c % d == 0 {
                    mults[d] += 1;
                }
            }
        }
        for d in 1..=max_d {
            den_mult[d] = den_mult[d].max(mults[d]);
        }
        let s = min + cuts.iter().map(|&c| c as i64).sum::<i64>();
        gs.push(Group { p, s, mults });
    }
    let m = gs.iter().map(|g| g.s).min().unwrap();
    let mut num = Poly::zero();
    for g in gs {
        let mut t = g.p.shift((g.s - m) as usize);
        for d in 1..=max_d {
            for _ in 0..(den_mult[d] - g.mults[d]) {
                t = t.mul(&cyclo[d]);
            }
        }
        num = num.add(&t);
    }
    // Multiply by B^{n_e} with B = -(1 + 4D + D^2) / (Phi_1 Phi_2).
    num = num.mul(&Poly::from_ints(&[1, 4, 1]).pow(n_e));
    if n_e % 2 == 1 {
        num = num.neg();
    }
    den_mult[1] += n_e;
    den_mult[2] += n_e;
    // Complete cancellation: the denominator factors are irreducible.
    for d in 1..=max_d {
        while den_mult[d] > 0 {
            let Some(q) = num.try_div_exact(&cyclo[d]) else {
                break;
            };
            num = q;
            den_mult[d] -= 1;
        }
    }
    let mut den = Poly::one();
    for d in 1..=max_d {
        for _ in 0..den_mult[d] {
            den = den.mul(&cyclo[d]);
        }
    }
    if m >= 0 {
        num = num.shift(m as usize);
    } else {
        den = den.shift((-m) as usize);
    }
    LaurentRational::from_coprime(num, den)
}

pub fn r_b_s(s: &BlossomingMap) -> Result<LaurentRational, SeriesError> {
    Ok(r_b_s_shape(&scheme_shape(s)?))
}

/// Checks `transpose(R^b_s) = R^b_s` for every rooted scheme in the census
/// of the given genus; returns (rooted schemes, distinct shapes checked).
pub fn verify_census_symmetry(genus: usize) -> Result<(usize, usize), SeriesError> {
    use rayon::prelude::*;
    let census = enumerate_rooted_schemes(genus)?;
    let mut shapes = BTreeSet::new();
    for s in &census {
        shapes.insert(scheme_shape(s)?);
    }
    let shapes: Vec<SchemeShape> = shapes.into_iter().collect();
    let all_symmetric = shapes
        .par_iter()
        .all(|sh| r_b_s_shape(sh).is_symmetric());
    if !all_symmetric {
        return Err(SeriesError::NotSymmetric);
    }
    Ok((census.len(), shapes.len()))
}

/// Evaluates a rational function at a valuation-1 series produced by `base`
/// at any requested order; a power of the variable in the denominator costs
/// extra working precision instead of failing.
fn eval_rational(
    f: &LaurentRational,
    order: usize,
    base: &dyn Fn(usize) -> TruncatedSeries,
) -> TruncatedSeries {
    if f.is_zero() {
        return TruncatedSeries::zero(order);
    }
    let vd = f.den().valuation().unwrap();
    if vd == 0 {
        return f.eval_series(&base(order));
    }
    let x = base(order + vd);
    assert!(x.coeff(0).is_zero() && !x.coeff(1).is_zero());
    let s = f
        .num()
        .eval_series(&x)
        .mul(&f.den().unshift(vd).eval_series(&x).inverse());
    let xp = x.pow(vd);
    for i in 0..vd {
        assert!(s.coeff(i).is_zero(), "pole in series evaluation");
    }
    let a = TruncatedSeries::from_coeffs(s.coeffs()[vd..].to_vec());
    let b = TruncatedSeries::from_coeffs(xp.coeffs()[vd..].to_vec());
    a.mul(&b.inverse())
}

/// Per-class data for the assembly: the class series as a rational function
/// of `z` and the quadrivalent-vertex count fixing the rerooting factor.
struct ClassSeries {
    v_s4: usize,
    scheme_leaves: usize,
    rb_class: LaurentRational,
}

fn census_classes(genus: usize) -> Result<Vec<ClassSeries>, SeriesError> {
    let census = enumerate_rooted_schemes(genus)?;
    let classes = group_by_unrooted(&census);
    let mut cache: BTreeMap<SchemeShape, LaurentRational> = BTreeMap::new();
    let mut out = Vec::new();
    for members in classes.values() {
        let v_s4 = members[0]
            .interior_degrees()
            .iter()
            .filter(|&&d| d == 4)
            .count();
        let mut rb = LaurentRational::zero();
        for m in members {
            let shape = scheme_shape(m)?;
            if !cache.contains_key(&shape) {
                cache.insert(shape.clone(), r_b_s_shape(&shape));
            }
            rb = rb.add(&cache[&shape]);
        }
        if !rb.is_symmetric() {
            return Err(SeriesError::NotSymmetric);
        }
        out.push(ClassSeries {
            v_s4,
            scheme_leaves: 2 * genus - v_s4 - 1,
            rb_class: rb,
        });
    }
    Ok(out)
}

/// The series of unicellular 4-valent well-labeled blossoming maps of the
/// given genus, counted by leaves, computed from the census as
/// `U = T' * P(T)` with `P = sum over classes of
/// d/dz (z R_class(z)) / (2g - v4)`.
pub fn u_series(genus: usize, order: usize) -> Result<TruncatedSeries, SeriesError> {
    let classes = census_classes(genus)?;
    let mut p = TruncatedSeries::zero(order + 1);
    for class in &classes {
        let rb = eval_rational(&class.rb_class, order + 1, &|n| series_d(n));
        let r_class = rb.shift(class.scheme_leaves);
        let factor = BigRational::new(BigInt::one(), BigInt::from((2 * genus - class.v_s4) as i64));
        p = p.add(&r_class.shift(1).derivative().resize(order + 1).scale(&factor));
    }
    let t = series_t(order + 1);
    Ok(t.derivative().mul(&p.compose(&t.resize(order))).resize(order))
}

/// The assembled genus-g series and its closed form.
#[derive(Debug, Serialize)]
pub struct MgReport {
    pub genus: usize,
    pub order: usize,
    pub rooted_schemes: usize,
    pub unrooted_classes: usize,
    /// `[t^0 .. t^order]` — the number of rooted genus-g maps by edges.
    pub coefficients: Vec<BigInt>,
    /// Numerator and denominator of `M_g / t^(2g-2)` as a rational function
    /// of the tree series `T = T(t)`.
    pub num: Poly,
    pub den: Poly,
    pub expression: String,
}

/// Assembles `M_g` from the scheme census:
/// `M_g = sum over unrooted classes of
///  2 t^(2g-2) / (2g - v4) * T * R_class(T)`.
pub fn assemble_mg(genus: usize, order: usize) -> Result<MgReport, SeriesError> {
    let census = enumerate_rooted_schemes(genus)?;
    let n_classes = group_by_unrooted(&census).len();
    let classes = census_classes(genus)?;
    // Rational function of T accumulating 2 T^(p+1) R^b_class(T) / (2g-v4).
    let mut total = LaurentRational::zero();
    for class in &classes {
        let rz = rational_in_z(&class.rb_class)?;
        let term = LaurentRational::new(
            rz.num
                .shift(class.scheme_leaves + 1)
                .mul_scalar(&BigInt::from(2)),
            rz.den
                .mul_scalar(&BigInt::from((2 * genus - class.v_s4) as i64)),
        );
        total = total.add(&term);
    }
    let prefix = 2 * genus - 2;
    let mg = eval_rational(&total, order, &|n| series_t(n)).shift(prefix);
    let coefficients = integer_coefficients(&mg);
    let body = format!(
        "({}) / ({})",
        total.num().display("T"),
        total.den().display("T")
    );
    let expression = if prefix == 0 {
        body
    } else {
        format!("t^{prefix} * {body}")
    };
    Ok(MgReport {
        genus,
        order,
        rooted_schemes: census.len(),
        unrooted_classes: n_classes,
        coefficients,
        num: total.num().clone(),
        den: total.den().clone(),
        expression,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{enumerate_r4, enumerate_u4};
    use crate::scheme::merge_branches;
    use crate::scheme::prune;

    #[test]
    fn phi_transposition() {
        // Phi(c) = D^c / (1 - D^c) satisfies transpose(Phi) = -(1 + Phi).
        for c in 1..=6usize {
            let mut den = vec![BigInt::zero(); c + 1];
            den[0] = BigInt::one();
            den[c] = -BigInt::one();
            let phi = LaurentRational::new(Poly::monomial(c), Poly::new(den));
            let expect = phi.add(&LaurentRational::one()).neg();
            assert_eq!(phi.transpose(), expect);
        }
    }

    #[test]
    fn genus_one_scheme_series_match_the_oracle() {
        let census = enumerate_rooted_schemes(1).unwrap();
        assert_eq!(census.len(), 3);
        // Count oracle R maps by (scheme, leaves) and compare with the
        // coefficients of z^(scheme leaves) * R^b_s(D(z)).
        let mut by_scheme: BTreeMap<Vec<u32>, Vec<usize>> = BTreeMap::new();
        let max_leaves = 4;
        for leaves in 1..=max_leaves {
            for r in enumerate_r4(1, leaves).unwrap() {
                let p = crate::scheme::PrunedMap::new(r).unwrap();
                let (ls, _) = merge_branches(&p).unwrap();
                let counts = by_scheme
                    .entry(ls.map().canonical_encoding())
                    .or_insert_with(|| vec![0; max_leaves + 1]);
                counts[leaves] += 1;
            }
        }
        assert_eq!(by_scheme.len(), 3);
        for s in &census {
            let f = r_b_s(s).unwrap();
            assert!(f.is_symmetric());
            let series = eval_rational(&f, max_leaves, &|n| series_d(n)).shift(1);
            let counts = &by_scheme[&s.canonical_encoding()];
            for l in 0..=max_leaves {
                assert_eq!(
                    series.coeff(l),
                    &BigRational::from_integer(counts[l].clone().into()),
                    "leaves {l}"
                );
            }
        }
    }

    #[test]
    fn u_series_matches_the_oracle() {
        let u = u_series(1, 4).unwrap();
        assert!(u.coeff(0).is_zero());
        for leaves in 1..=4 {
            let count = enumerate_u4(1, leaves).unwrap().len();
            assert_eq!(
                u.coeff(leaves),
                &BigRational::from_integer(count.into()),
                "leaves {leaves}"
            );
        }
    }

    #[test]
    fn genus_one_assembly() {
        let report = assemble_mg(1, 6).unwrap();
        assert_eq!(report.rooted_schemes, 3);
        assert_eq!(report.unrooted_classes, 2);
        let expect: Vec<BigInt> = [0i64, 0, 1, 20, 307, 4280, 56914]
            .iter()
            .map(|&v| BigInt::from(v))
            .collect();
        assert_eq!(report.coefficients, expect);
    }

    #[test]
    fn census_symmetry_genus_one() {
        let (rooted, shapes) = verify_census_symmetry(1).unwrap();
        assert_eq!(rooted, 3);
        assert!(shapes <= rooted);
    }

    #[test]
    fn pruning_then_series_agrees_with_direct_map_counts() {
        // Spot check: the number of genus-1 rooted maps with n edges equals
        // the corresponding coefficient of the assembled series.
        let report = assemble_mg(1, 4).unwrap();
        for n in 1..=4 {
            let direct = crate::oracle::enumerate_rooted_maps(n, Some(1)).unwrap().len();
            assert_eq!(report.coefficients[n], BigInt::from(direct));
        }
        // And pruning really is the bridge used above.
        let u = enumerate_u4(1, 2).unwrap();
        assert!(!u.is_empty());
        for m in &u {
            prune(m).unwrap();
        }
    }
}
