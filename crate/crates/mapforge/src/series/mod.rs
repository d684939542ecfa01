//! Exact generating-series arithmetic.
//!
//! The three basic series, all with integer coefficients:
//!
//! * `T`, rooted ternary-flavoured trees: `T = z + 3 T^2`;
//! * `D`, the branch step series: `D = z (1 + 4 D + D^2)`;
//! * `B`, weighted branches: `B = 1 + 4 z B + 2 z D B`, equivalently
//!   `B = (1 + 4 D + D^2) / (1 - D^2)` as a function of `D`.
//!
//! `D` doubles as a formal variable: scheme series are rational functions of
//! `D` ([`laurent`]), and the substitution `z = D / (1 + 4 D + D^2)` — i.e.
//! `1/z = 1/D + 4 + D` — turns transpose-invariant rational functions of `D`
//! into rational functions of `z` ([`laurent::rational_in_z`]).

pub mod assemble;
pub mod laurent;
pub mod surjection;
pub mod truncated;

use num::{BigRational, One};
use thiserror::Error;

use crate::scheme::SchemeError;
pub use assemble::{assemble_mg, r_b_s, scheme_shape, MgReport, SchemeShape};
pub use laurent::{rational_in_z, LaurentRational, Poly, RationalFunction};
pub use truncated::TruncatedSeries;

#[derive(Debug, Error, PartialEq)]
pub enum SeriesError {
    #[error("not symmetric under D -> 1/D")]
    NotSymmetric,
    #[error("identity violated: {0}")]
    Identity(String),
    #[error(transparent)]
    Scheme(#[from] SchemeError),
}

/// The tree series `T = z + 3 T^2`, truncated at the given order.
pub fn series_t(order: usize) -> TruncatedSeries {
    fixed_point(order, |t| {
        TruncatedSeries::z(order).add(&t.mul(t).scale(&BigRational::from_integer(3.into())))
    })
}

/// The branch-step series `D = z (1 + 4 D + D^2)`.
pub fn series_d(order: usize) -> TruncatedSeries {
    fixed_point(order, |d| {
        let poly = TruncatedSeries::one(order)
            .add(&d.scale(&BigRational::from_integer(4.into())))
            .add(&d.mul(d));
        poly.shift(1)
    })
}

/// The branch series from its defining recurrence `B = 1 + 4 z B + 2 z D B`,
/// i.e. `B = 1 / (1 - 4 z - 2 z D)`.
pub fn series_b(order: usize) -> TruncatedSeries {
    let d = series_d(order);
    let den = TruncatedSeries::one(order)
        .sub(&TruncatedSeries::monomial(
            order,
            1,
            BigRational::from_integer(4.into()),
        ))
        .sub(&d.shift(1).scale(&BigRational::from_integer(2.into())));
    den.inverse()
}

/// The branch series in closed form, `B = (1 + 4 D + D^2) / (1 - D^2)`,
/// expanded through `D(z)`.  Agrees with [`series_b`].
pub fn series_b_closed(order: usize) -> TruncatedSeries {
    let d = series_d(order);
    let num = TruncatedSeries::one(order)
        .add(&d.scale(&BigRational::from_integer(4.into())))
        .add(&d.mul(&d));
    let den = TruncatedSeries::one(order).sub(&d.mul(&d));
    num.mul(&den.inverse())
}

/// The branch weight `B` as a rational function of `D`.
pub fn b_rational() -> LaurentRational {
    LaurentRational::new(Poly::from_ints(&[1, 4, 1]), Poly::from_ints(&[1, 0, -1]))
}

fn fixed_point(
    order: usize,
    step: impl Fn(&TruncatedSeries) -> TruncatedSeries,
) -> TruncatedSeries {
    let mut cur = TruncatedSeries::zero(order);
    loop {
        let next = step(&cur);
        if next == cur {
            return cur;
        }
        cur = next;
    }
}

/// Checks that a series has the integer coefficients given (prefix).
#[cfg(test)]
fn assert_prefix(s: &TruncatedSeries, ints: &[i64]) {
    for (i, &v) in ints.iter().enumerate() {
        assert_eq!(
            s.coeff(i),
            &BigRational::from_integer(v.into()),
            "coefficient {i}"
        );
    }
}

/// Exact integer coefficients of a series known to be integral.
pub fn integer_coefficients(s: &TruncatedSeries) -> Vec<num::BigInt> {
    s.coeffs()
        .iter()
        .map(|c| {
            assert!(c.denom().is_one(), "non-integer coefficient");
            c.numer().clone()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{b_coefficients_by_paths, d_coefficients_by_paths, t_coefficients_by_trees};

    #[test]
    fn defining_series_satisfy_their_equations() {
        let order = 12;
        let t = series_t(order);
        assert_prefix(&t, &[0, 1, 3, 18, 135]);
        let rhs = TruncatedSeries::z(order)
            .add(&t.mul(&t).scale(&BigRational::from_integer(3.into())));
        assert_eq!(t, rhs);

        let d = series_d(order);
        assert_prefix(&d, &[0, 1, 4, 17, 76]);
        let poly = TruncatedSeries::one(order)
            .add(&d.scale(&BigRational::from_integer(4.into())))
            .add(&d.mul(&d));
        assert_eq!(d, poly.shift(1));

        let b = series_b(order);
        assert_prefix(&b, &[1, 4, 18, 88]);
        let rhs = TruncatedSeries::one(order)
            .add(&b.shift(1).scale(&BigRational::from_integer(4.into())))
            .add(&d.mul(&b).shift(1).scale(&BigRational::from_integer(2.into())));
        assert_eq!(b, rhs);
        assert_eq!(b, series_b_closed(order));
    }

    #[test]
    fn defining_series_match_lattice_path_counts() {
        let order = 10;
        let t = series_t(order);
        let d = series_d(order);
        let b = series_b(order);
        let tc = t_coefficients_by_trees(order);
        let dc = d_coefficients_by_paths(order);
        let bc = b_coefficients_by_paths(order);
        for i in 0..=order {
            assert_eq!(t.coeff(i), &BigRational::from_integer(tc[i].into()));
            assert_eq!(d.coeff(i), &BigRational::from_integer(dc[i].into()));
            assert_eq!(b.coeff(i), &BigRational::from_integer(bc[i].into()));
        }
    }

    #[test]
    fn substitution_between_z_and_d() {
        // 1/z = 1/D + 4 + D as series: z * (1 + 4D + D^2) = D * ... check
        // via D's defining equation, and via rational_in_z round trip on B.
        let order = 12;
        let d = series_d(order);
        let b_frac = b_rational();
        assert!(b_frac.is_antisymmetric());
        assert_eq!(b_frac.eval_series(&d), series_b(order));
        // B^2 is symmetric, hence rational in z; its z-form re-expands to B^2.
        let b2 = b_frac.mul(&b_frac);
        assert!(b2.is_symmetric());
        let rz = rational_in_z(&b2).unwrap();
        let z = TruncatedSeries::z(order);
        assert_eq!(rz.eval_series(&z), series_b(order).pow(2));
        // transpose(B^n) = (-1)^n B^n.
        for n in 1..=6i64 {
            let bn = b_frac.pow(n);
            let expect = if n % 2 == 0 { bn.clone() } else { bn.neg() };
            assert_eq!(bn.transpose(), expect);
        }
    }
}
