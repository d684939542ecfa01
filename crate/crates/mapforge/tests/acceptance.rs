//! End-to-end acceptance suite: one test per headline property, each
//! printing a PASS line with the scale it was checked at.  Everything is
//! exact — counts, canonical encodings, and symbolic identities.

use mapforge::blossom::{fractional_open, open, BlossomingMap};
use mapforge::oracle::{
    enumerate_bc4valent, enumerate_o4, enumerate_r4, enumerate_rooted_maps, enumerate_u4,
    group_by_unrooted, leaves_for_vertices,
};
use mapforge::orient::{
    clockwise_faces, dual_geodesic_half_orientation, dual_geodesic_orientation,
    is_bicolorable_orientation, minimize_by_flips, Orientation,
};
use mapforge::scheme::{enumerate_rooted_schemes, merge_branches, offset_graph, PrunedMap};
use mapforge::series::assemble::{assemble_mg, u_series, verify_census_symmetry};
use mapforge::series::surjection::{verify_d_specialization, verify_sum_identity};
use mapforge::series::{series_b, series_b_closed, series_d, series_t, TruncatedSeries};
use mapforge::RotationMap;
use num::{BigInt, BigRational, One, Zero};

fn bicolorable_maps(max_edges: usize, max_genus: usize) -> Vec<RotationMap> {
    let mut out = Vec::new();
    for n in 1..=max_edges {
        for m in enumerate_rooted_maps(n, None).unwrap() {
            if m.genus() <= max_genus && m.is_bicolorable().is_some() {
                out.push(m);
            }
        }
    }
    out
}

#[test]
fn a01_bijection_round_trips() {
    let maps = bicolorable_maps(4, 1);
    assert!(!maps.is_empty());
    for m in &maps {
        let o = dual_geodesic_orientation(m).unwrap();
        let b = open(m, &o).unwrap();
        let (m2, h2) = b.close().unwrap();
        assert_eq!(&m2, m);
        assert_eq!(h2.to_full().unwrap(), o);
    }
    let mut opened = 0usize;
    for genus in 0..=1usize {
        for vertices in 1..=4usize {
            let Some(leaves) = leaves_for_vertices(genus, vertices) else {
                continue;
            };
            for b in enumerate_o4(genus, leaves).unwrap() {
                let (m, h) = b.close().unwrap();
                let o = h.to_full().expect("closures of O maps are fully oriented");
                let b2 = open(&m, &o).unwrap();
                assert_eq!(b2.canonical_encoding(), b.canonical_encoding());
                opened += 1;
            }
        }
    }
    println!(
        "PASS 01 bijection round trips: {} bicolorable maps closed back, {} blossoming maps reopened",
        maps.len(),
        opened
    );
}

#[test]
fn a02_cardinality_chain() {
    for genus in 0..=1usize {
        for n in 1..=4usize {
            let maps = enumerate_rooted_maps(n, Some(genus)).unwrap().len();
            let bc = enumerate_bc4valent(n, Some(genus)).unwrap().len();
            let o = match leaves_for_vertices(genus, n) {
                Some(l) => enumerate_o4(genus, l).unwrap().len(),
                None => 0,
            };
            assert_eq!(maps, bc, "g={genus} n={n}");
            assert_eq!(maps, o, "g={genus} n={n}");
        }
    }
    println!("PASS 02 cardinality chain: |maps| = |bicolorable 4-valent| = |O| for g <= 1, n <= 4");
}

#[test]
fn a03_rerooting_law() {
    let mut classes = 0usize;
    for leaves in 1..=2usize {
        let u = enumerate_u4(1, leaves).unwrap();
        let o = enumerate_o4(1, leaves).unwrap();
        for b in &u {
            // Exactly two well-rootable stems per map.
            let wr = b.well_rootable_stems().unwrap();
            assert_eq!(wr.len(), 2);
        }
        let uc = group_by_unrooted(&u);
        let oc = group_by_unrooted(&o);
        assert_eq!(uc.len(), oc.len());
        for (key, us) in &uc {
            let os = &oc[key];
            let rootable = us[0].rootable_stems().len();
            assert_eq!(2 * us.len(), rootable * os.len());
            classes += 1;
        }
    }
    println!("PASS 03 rerooting law: 2|U| = (rootable)|O| over {classes} genus-1 classes");
}

#[test]
fn a04_series_identities() {
    let order = 12;
    let three = BigRational::from_integer(3.into());
    let four = BigRational::from_integer(4.into());
    let two = BigRational::from_integer(2.into());
    let t = series_t(order);
    assert_eq!(t, TruncatedSeries::z(order).add(&t.mul(&t).scale(&three)));
    let d = series_d(order);
    let poly = TruncatedSeries::one(order).add(&d.scale(&four)).add(&d.mul(&d));
    assert_eq!(d, poly.shift(1));
    let b = series_b(order);
    assert_eq!(
        b,
        TruncatedSeries::one(order)
            .add(&b.shift(1).scale(&four))
            .add(&d.mul(&b).shift(1).scale(&two))
    );
    assert_eq!(b, series_b_closed(order));
    let dp_t = mapforge::oracle::t_coefficients_by_trees(10);
    let dp_d = mapforge::oracle::d_coefficients_by_paths(10);
    let dp_b = mapforge::oracle::b_coefficients_by_paths(10);
    for i in 0..=10 {
        assert_eq!(d.coeff(i), &BigRational::from_integer(dp_d[i].into()));
        assert_eq!(b.coeff(i), &BigRational::from_integer(dp_b[i].into()));
        assert_eq!(t.coeff(i), &BigRational::from_integer(dp_t[i].into()));
    }
    println!("PASS 04 series identities: T, D, B defining equations to order 12, path DP match to order 10");
}

#[test]
fn a05_u_series_coefficients() {
    let u = u_series(1, 5).unwrap();
    assert!(u.coeff(0).is_zero());
    for leaves in 1..=5usize {
        let count = enumerate_u4(1, leaves).unwrap().len();
        assert_eq!(
            u.coeff(leaves),
            &BigRational::from_integer(count.into()),
            "leaves {leaves}"
        );
    }
    println!("PASS 05 branch decomposition at coefficient level: U = T' P(T) through order 5");
}

#[test]
fn a06_offset_acyclicity() {
    let mut labeled = 0usize;
    for genus in 1..=2usize {
        let max_leaves = if genus == 1 { 4 } else { 3 };
        for leaves in 1..=max_leaves {
            for r in enumerate_r4(genus, leaves).unwrap() {
                let p = PrunedMap::new(r).unwrap();
                let (ls, _) = merge_branches(&p).unwrap();
                ls.offset_graph().unwrap();
                labeled += 1;
            }
        }
    }
    let mut census = 0usize;
    for genus in 1..=2usize {
        for s in enumerate_rooted_schemes(genus).unwrap() {
            offset_graph(&s).unwrap();
            census += 1;
        }
    }
    println!("PASS 06 offset acyclicity: {labeled} labeled schemes from R maps, {census} census schemes");
}

#[test]
fn a07_scheme_series_symmetry() {
    let (r1, s1) = verify_census_symmetry(1).unwrap();
    assert_eq!(r1, 3);
    let (r2, s2) = verify_census_symmetry(2).unwrap();
    assert_eq!(r2, 21060);
    println!(
        "PASS 07 symmetry under D -> 1/D: all {r1}+{r2} census schemes ({}+{} distinct shapes)",
        s1, s2
    );
}

#[test]
fn a08_surjection_identities() {
    for n in 1..=4usize {
        verify_sum_identity(n).unwrap();
    }
    let mut graphs = 0usize;
    for n in 2..=4usize {
        let pairs: Vec<(usize, usize)> = (0..n)
            .flat_map(|i| ((i + 1)..n).map(move |j| (i, j)))
            .collect();
        for mask in 0u32..(1 << pairs.len()) {
            let arcs: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            verify_d_specialization(n, &arcs).unwrap();
            graphs += 1;
        }
    }
    println!("PASS 08 surjection identities: symbolic for n <= 4, D-specialized over {graphs} acyclic offset graphs");
}

#[test]
fn a09_rationality_pipeline_vs_ground_truth() {
    let report = assemble_mg(1, 5).unwrap();
    for n in 1..=5usize {
        let direct = enumerate_rooted_maps(n, Some(1)).unwrap().len();
        assert_eq!(
            report.coefficients[n],
            BigInt::from(direct),
            "edges {n}"
        );
    }
    println!(
        "PASS 09 rationality pipeline: [t^n] M_1 = oracle genus-1 counts for n <= 5; M_1 = {}",
        report.expression
    );
}

#[test]
fn a10_fractional_extension() {
    let mut total = 0usize;
    let mut coincide = 0usize;
    for n in 1..=3usize {
        for m in enumerate_rooted_maps(n, None).unwrap() {
            if m.genus() > 1 {
                continue;
            }
            let h = dual_geodesic_half_orientation(&m);
            let b = fractional_open(&m, &h).unwrap();
            let (m2, h2) = b.close().unwrap();
            assert_eq!(m2, m);
            assert_eq!(h2, h);
            total += 1;
            if m.is_bicolorable().is_some() {
                let o = dual_geodesic_orientation(&m).unwrap();
                let full: BlossomingMap = open(&m, &o).unwrap();
                assert_eq!(b, full);
                coincide += 1;
            }
        }
    }
    println!("PASS 10 fractional extension: {total} maps round-tripped, {coincide} bicolorable ones match the full opening");
}

#[test]
fn a11_orientation_lattice() {
    let maps = bicolorable_maps(4, usize::MAX);
    let mut checked = 0usize;
    for m in &maps {
        let dual_geo = dual_geodesic_orientation(m).unwrap();
        let root_face = m.root_face();
        let mut minima: Vec<Orientation> = Vec::new();
        let mut starts = 0usize;
        for mask in 0u32..(1 << m.n_edges()) {
            let heads: Vec<usize> = (0..m.n_edges())
                .map(|e| {
                    let (d, a) = m.edge_darts(e);
                    if mask >> e & 1 == 1 {
                        a
                    } else {
                        d
                    }
                })
                .collect();
            let o = Orientation::new(m, heads);
            if !is_bicolorable_orientation(m, &o) {
                continue;
            }
            starts += 1;
            if clockwise_faces(m, &o).iter().all(|&f| f == root_face) {
                minima.push(o.clone());
            }
            // Every bicolorable orientation flips down to the minimum.
            let reached = minimize_by_flips(m, &o).unwrap();
            assert_eq!(reached, dual_geo);
        }
        assert_eq!(minima.len(), 1, "unique minimal orientation");
        assert_eq!(minima[0], dual_geo);
        assert!(starts >= 1);
        checked += 1;
    }
    println!("PASS 11 orientation lattice: unique counterclockwise minimum = dual-geodesic on {checked} bicolorable maps");
}
