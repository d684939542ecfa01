//! Exact rational functions in the branch variable `D`.
//!
//! A [`LaurentRational`] is a quotient of integer polynomials in `D`, kept
//! reduced; negative powers of `D` live in the denominator.  The key
//! structural operation is [`LaurentRational::transpose`], the substitution
//! `D -> 1/D`, and the key structural fact exploited downstream is that a
//! transpose-invariant rational function of `D` is a rational function of
//! `z = 1/(1/D + 4 + D)` — extracted exactly by [`rational_in_z`].

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::Serialize;

use super::truncated::TruncatedSeries;
use super::SeriesError;

/// Dense integer polynomial; `coeffs[i]` multiplies the i-th power and
/// trailing zeros are trimmed (the zero polynomial has no coefficients).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Poly {
    coeffs: Vec<BigInt>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Poly { coeffs }
    }

    pub fn from_ints(ints: &[i64]) -> Self {
        Poly::new(ints.iter().map(|&v| BigInt::from(v)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new(
            (0..n)
                .map(|i| self.coeff(i) + other.coeff(i))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Poly::new(coeffs)
    }

    pub fn mul_scalar(&self, c: &BigInt) -> Self {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Multiplication by `D^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Division by `D^k`; requires divisibility.
    pub fn unshift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        assert!(self.valuation().unwrap() >= k, "not divisible by D^{k}");
        Poly {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Poly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Reversed coefficients: `D^deg * self(1/D)`.
    pub fn reverse(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Poly::new(coeffs)
    }

    /// Gcd of the coefficients (positive; 0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = num::Integer::gcd(&g, c);
        }
        g
    }

    /// Exact division; panics if the division leaves a remainder.
    pub fn div_exact(&self, d: &Self) -> Self {
        self.try_div_exact(d).expect("inexact polynomial division")
    }

    /// Exact division, or `None` if `d` does not divide `self`.
    pub fn try_div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let (dn, dd) = (self.coeffs.len(), d.coeffs.len());
        if dn < dd {
            return None;
        }
        let lead = d.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); dn - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = std::mem::take(&mut rem[i + dd - 1]);
            if top.is_zero() {
                continue;
            }
            let (q, r) = num::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in d.coeffs.iter().enumerate().take(dd - 1) {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().all(|c| c.is_zero()) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    /// Primitive gcd with positive leading coefficient, via the Euclidean
    /// algorithm over the rationals (degrees here are small).
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.positive_primitive();
        }
        if other.is_zero() {
            return self.positive_primitive();
        }
        let mut a = self.to_rational();
        let mut b = other.to_rational();
        while !b.iter().all(|c| c.is_zero()) {
            let r = rational_rem(&a, &b);
            a = b;
            b = r;
        }
        // Clear denominators and normalize.
        let mut den = BigInt::one();
        for c in &a {
            den = num::Integer::lcm(&den, c.denom());
        }
        let ints: Vec<BigInt> = a.iter().map(|c| (c * &den).to_integer()).collect();
        Poly::new(ints).positive_primitive()
    }

    fn positive_primitive(&self) -> Self {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut c = self.content();
        if self.coeffs.last().unwrap().is_negative() {
            c = -c;
        }
        Poly {
            coeffs: self.coeffs.iter().map(|x| x / &c).collect(),
        }
    }

    fn to_rational(&self) -> Vec<BigRational> {
        self.coeffs
            .iter()
            .map(|c| BigRational::from_integer(c.clone()))
            .collect()
    }

    /// Evaluation at a truncated series.
    pub fn eval_series(&self, x: &TruncatedSeries) -> TruncatedSeries {
        let order = x.order();
        let mut acc = TruncatedSeries::zero(order);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x);
            acc = acc.add(&TruncatedSeries::monomial(
                order,
                0,
                BigRational::from_integer(c.clone()),
            ));
        }
        acc
    }

    /// Human-readable form with the given variable name.
    pub fn display(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            let body = match (i, mag.is_one()) {
                (0, _) => format!("{mag}"),
                (1, true) => var.to_string(),
                (1, false) => format!("{mag}*{var}"),
                (_, true) => format!("{var}^{i}"),
                (_, false) => format!("{mag}*{var}^{i}"),
            };
            if parts.is_empty() {
                parts.push(if c.is_negative() { format!("-{body}") } else { body });
            } else {
                parts.push(format!("{} {body}", if c.is_negative() { "-" } else { "+" }));
            }
        }
        parts.join(" ")
    }
}

fn rational_rem(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let db = b.iter().rposition(|c| !c.is_zero()).unwrap();
    let mut rem = a.to_vec();
    loop {
        let Some(da) = rem.iter().rposition(|c| !c.is_zero()) else {
            return rem;
        };
        if da < db {
            return rem;
        }
        let q = &rem[da] / &b[db];
        for j in 0..=db {
            let t = &q * &b[j];
            rem[da - db + j] -= t;
        }
    }
}

/// A reduced quotient of integer polynomials in `D`.  Invariants: the
/// denominator is nonzero with positive lowest coefficient, numerator and
/// denominator share no polynomial factor, no common power of `D`, and no
/// common integer content.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LaurentRational {
    num: Poly,
    den: Poly,
}

impl LaurentRational {
    pub fn new(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        let mut f = LaurentRational { num, den };
        f.reduce();
        f
    }

    fn reduce(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        let k = self
            .num
            .valuation()
            .unwrap()
            .min(self.den.valuation().unwrap());
        self.num = self.num.unshift(k);
        self.den = self.den.unshift(k);
        let g = self.num.gcd(&self.den);
        if g.degree() != Some(0) || !g.coeff(0).is_one() {
            self.num = self.num.div_exact(&g);
            self.den = self.den.div_exact(&g);
        }
        let mut c = num::Integer::gcd(&self.num.content(), &self.den.content());
        if self.den.coeffs()[self.den.valuation().unwrap()].is_negative() {
            c = -c;
        }
        if !c.is_one() {
            self.num = Poly::new(self.num.coeffs().iter().map(|x| x / &c).collect());
            self.den = Poly::new(self.den.coeffs().iter().map(|x| x / &c).collect());
        }
    }

    /// Constructor for callers that already know numerator and denominator
    /// share no polynomial factor; only powers of `D`, integer content and
    /// the denominator sign are normalized.
    pub(crate) fn from_coprime(num: Poly, den: Poly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        let k = num.valuation().unwrap().min(den.valuation().unwrap());
        let (num, den) = (num.unshift(k), den.unshift(k));
        let mut c = num::Integer::gcd(&num.content(), &den.content());
        if den.coeffs()[den.valuation().unwrap()].is_negative() {
            c = -c;
        }
        if c.is_one() {
            return LaurentRational { num, den };
        }
        LaurentRational {
            num: Poly::new(num.coeffs().iter().map(|x| x / &c).collect()),
            den: Poly::new(den.coeffs().iter().map(|x| x / &c).collect()),
        }
    }

    pub fn zero() -> Self {
        LaurentRational {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn one() -> Self {
        LaurentRational {
            num: Poly::one(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: i64) -> Self {
        LaurentRational {
            num: Poly::constant(BigInt::from(c)),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        LaurentRational {
            num: p,
            den: Poly::one(),
        }
    }

    /// The variable `D` itself.
    pub fn d() -> Self {
        Self::from_poly(Poly::monomial(1))
    }

    /// `D^e` for a possibly negative exponent.
    pub fn d_pow(e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(Poly::monomial(e as usize))
        } else {
            LaurentRational {
                num: Poly::one(),
                den: Poly::monomial((-e) as usize),
            }
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        let g = self.den.gcd(&other.den);
        let (d1, d2) = (self.den.div_exact(&g), other.den.div_exact(&g));
        LaurentRational::new(
            self.num.mul(&d2).add(&other.num.mul(&d1)),
            self.den.mul(&d2),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        LaurentRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Cross-reduce first to keep intermediate degrees down.
        let a = LaurentRational::new(self.num.clone(), other.den.clone());
        let b = LaurentRational::new(other.num.clone(), self.den.clone());
        LaurentRational::new(a.num.mul(&b.num), a.den.mul(&b.den))
    }

    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        LaurentRational::new(self.den.clone(), self.num.clone())
    }

    pub fn div(&self, other: &Self) -> Self {
        self.mul(&other.inverse())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut b = base;
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// The substitution `D -> 1/D`.  Reversal preserves coprimality, so the
    /// result needs no gcd pass.
    pub fn transpose(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let (dn, dd) = (self.num.degree().unwrap(), self.den.degree().unwrap());
        let (rn, rd) = (self.num.reverse(), self.den.reverse());
        if dd >= dn {
            LaurentRational::from_coprime(rn.shift(dd - dn), rd)
        } else {
            LaurentRational::from_coprime(rn, rd.shift(dn - dd))
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.transpose() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.transpose() == self.neg()
    }

    /// Expansion as a power series in the given series for `D`; requires the
    /// denominator not to vanish at 0 (no pole at `D = 0`).
    pub fn eval_series(&self, d: &TruncatedSeries) -> TruncatedSeries {
        assert!(
            !self.den.coeff(0).is_zero(),
            "pole at D = 0: not a power series"
        );
        self.num
            .eval_series(d)
            .mul(&self.den.eval_series(d).inverse())
    }

    pub fn display(&self, var: &str) -> String {
        if self.den == Poly::one() {
            self.num.display(var)
        } else {
            format!("({}) / ({})", self.num.display(var), self.den.display(var))
        }
    }
}

/// A reduced quotient of integer polynomials in `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    pub num: Poly,
    pub den: Poly,
}

impl RationalFunction {
    pub fn eval_series(&self, z: &TruncatedSeries) -> TruncatedSeries {
        assert!(!self.den.coeff(0).is_zero(), "pole at z = 0");
        self.num
            .eval_series(z)
            .mul(&self.den.eval_series(z).inverse())
    }

    pub fn display(&self, var: &str) -> String {
        if self.den == Poly::one() {
            self.num.display(var)
        } else {
            format!("({}) / ({})", self.num.display(var), self.den.display(var))
        }
    }
}

#[derive(PartialEq, Clone, Copy, Debug)]
enum Parity {
    Symmetric,
    Antisymmetric,
}

fn classify(v: &[BigInt]) -> Option<Parity> {
    let n = v.len();
    if (0..n).all(|i| v[i] == v[n - 1 - i]) {
        Some(Parity::Symmetric)
    } else if (0..n).all(|i| v[i] == -&v[n - 1 - i]) {
        Some(Parity::Antisymmetric)
    } else {
        None
    }
}

/// Multiplies two Laurent coefficient vectors (both centered at 0).
fn laurent_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

/// Writes a symmetric Laurent vector as a polynomial in `u = 1/D + 4 + D`.
fn symmetric_to_u(v: &[BigInt]) -> Poly {
    let m = (v.len() - 1) / 2;
    debug_assert_eq!(v.len(), 2 * m + 1);
    let u = vec![BigInt::one(), BigInt::from(4), BigInt::one()]; // 1/D + 4 + D
    // u^k as centered Laurent vectors.
    let mut upow: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for _ in 0..m {
        upow.push(laurent_mul(upow.last().unwrap(), &u));
    }
    let mut rem = v.to_vec();
    let mut coeffs = vec![BigInt::zero(); m + 1];
    for k in (0..=m).rev() {
        let top = rem[m + k].clone();
        if !top.is_zero() {
            let shift = m - k;
            for (j, c) in upow[k].iter().enumerate() {
                rem[shift + j] -= &top * c;
            }
            coeffs[k] = top;
        }
    }
    assert!(
        rem.iter().all(|c| c.is_zero()),
        "symmetric Laurent reduction left a remainder"
    );
    Poly::new(coeffs)
}

/// Rewrites a transpose-invariant rational function of `D` as a rational
/// function of `z`, using `1/z = 1/D + 4 + D`.  Numerator and denominator
/// are first centered; when their common average degree is a half-integer
/// both are multiplied by `1 + D`, and an antisymmetric-over-antisymmetric
/// quotient is cleared by `D - 1/D`.
pub fn rational_in_z(f: &LaurentRational) -> Result<RationalFunction, SeriesError> {
    if f.is_zero() {
        return Ok(RationalFunction {
            num: Poly::zero(),
            den: Poly::one(),
        });
    }
    let mut num = f.num().clone();
    let mut den = f.den().clone();
    let s_num = num.valuation().unwrap() + num.degree().unwrap();
    let s_den = den.valuation().unwrap() + den.degree().unwrap();
    // Transpose-invariance forces the average degrees of numerator and
    // denominator to coincide; their common center then cancels.
    if s_num != s_den {
        return Err(SeriesError::NotSymmetric);
    }
    if s_num % 2 == 1 {
        let one_plus_d = Poly::from_ints(&[1, 1]);
        num = num.mul(&one_plus_d);
        den = den.mul(&one_plus_d);
    }
    let center = |p: &Poly| {
        let (o, d) = (p.valuation().unwrap(), p.degree().unwrap());
        let half = (o + d) / 2;
        let m = (d - half).max(half - o);
        let mut v = vec![BigInt::zero(); 2 * m + 1];
        for (i, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                v[i + m - half] = c.clone();
            }
        }
        v
    };
    let mut vn = center(&num);
    let mut vd = center(&den);
    let (pn, pd) = match (classify(&vn), classify(&vd)) {
        (Some(a), Some(b)) => (a, b),
        _ => return Err(SeriesError::NotSymmetric),
    };
    if pn != pd {
        return Err(SeriesError::NotSymmetric);
    }
    if pn == Parity::Antisymmetric {
        // Multiply both by D - 1/D (antisymmetric), yielding symmetric vectors.
        let t = [-BigInt::one(), BigInt::zero(), BigInt::one()];
        vn = laurent_mul(&vn, &t);
        vd = laurent_mul(&vd, &t);
    }
    let an = symmetric_to_u(&vn);
    let ad = symmetric_to_u(&vd);
    // u = 1/z: A(u) = z^{-deg A} * (polynomial in z read off in reverse).
    let (dn, dd) = (an.degree().unwrap(), ad.degree().unwrap());
    let big = dn.max(dd);
    let in_z = |a: &Poly| {
        let mut coeffs = vec![BigInt::zero(); big + 1];
        for (k, c) in a.coeffs().iter().enumerate() {
            coeffs[big - k] = c.clone();
        }
        Poly::new(coeffs)
    };
    let mut zn = in_z(&an);
    let mut zd = in_z(&ad);
    let g = zn.gcd(&zd);
    if g.degree() != Some(0) || !g.coeff(0).is_one() {
        zn = zn.div_exact(&g);
        zd = zd.div_exact(&g);
    }
    let mut c = num::Integer::gcd(&zn.content(), &zd.content());
    if c.is_zero() {
        c = BigInt::one();
    }
    if zd.coeffs()[zd.valuation().unwrap()].is_negative() {
        c = -c;
    }
    if !c.is_one() {
        zn = Poly::new(zn.coeffs().iter().map(|x| x / &c).collect());
        zd = Poly::new(zd.coeffs().iter().map(|x| x / &c).collect());
    }
    Ok(RationalFunction { num: zn, den: zd })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(ints: &[i64]) -> Poly {
        Poly::from_ints(ints)
    }

    #[test]
    fn poly_arithmetic() {
        let a = p(&[1, 2, 1]); // (1 + D)^2
        let b = p(&[1, 1]);
        assert_eq!(a.div_exact(&b), b);
        assert_eq!(b.pow(2), a);
        assert_eq!(a.gcd(&p(&[2, 2])), b);
        assert_eq!(p(&[0, 0, 3]).valuation(), Some(2));
        assert_eq!(a.reverse(), a);
        assert_eq!(p(&[0, 1, 2]).reverse(), p(&[2, 1]));
    }

    #[test]
    fn rational_reduction_and_transpose() {
        // (D^2 - 1) / (D - 1) reduces to D + 1.
        let f = LaurentRational::new(p(&[-1, 0, 1]), p(&[-1, 1]));
        assert_eq!(f, LaurentRational::from_poly(p(&[1, 1])));
        // transpose(D) = 1/D; transpose is an involution.
        let d = LaurentRational::d();
        assert_eq!(d.transpose(), d.pow(-1));
        let g = LaurentRational::new(p(&[1, 3, 5]), p(&[2, 0, 7]));
        assert_eq!(g.transpose().transpose(), g);
        // 1/D + 4 + D is symmetric, D - 1/D antisymmetric.
        let u = d.pow(-1).add(&LaurentRational::constant(4)).add(&d);
        assert!(u.is_symmetric());
        assert!(d.sub(&d.pow(-1)).is_antisymmetric());
        assert!(!d.add(&LaurentRational::one()).is_symmetric());
    }

    #[test]
    fn rational_in_z_round_trips() {
        let d = LaurentRational::d();
        let u = d.pow(-1).add(&LaurentRational::constant(4)).add(&d);
        // u itself is 1/z.
        let r = rational_in_z(&u).unwrap();
        assert_eq!(r.num, Poly::one());
        assert_eq!(r.den, p(&[0, 1]));
        // 1/D + D = 1/z - 4.
        let r2 = rational_in_z(&d.pow(-1).add(&d)).unwrap();
        assert_eq!(r2.num, p(&[1, -4]));
        assert_eq!(r2.den, p(&[0, 1]));
        // (1 + D)^2 / D = 1/D + 2 + D = 1/z - 2.
        let f = LaurentRational::new(p(&[1, 2, 1]), p(&[0, 1]));
        assert!(f.is_symmetric());
        let r3 = rational_in_z(&f).unwrap();
        assert_eq!(r3.num, p(&[1, -2]));
        assert_eq!(r3.den, p(&[0, 1]));
        // And a genuinely asymmetric function is rejected.
        assert_eq!(
            rational_in_z(&d),
            Err(SeriesError::NotSymmetric)
        );
    }

    #[test]
    fn display_forms() {
        assert_eq!(p(&[1, -4, 0, 2]).display("z"), "1 - 4*z + 2*z^3");
        assert_eq!(Poly::zero().display("z"), "0");
        let f = LaurentRational::new(p(&[0, 1]), p(&[1, -1]));
        assert_eq!(f.display("D"), "(D) / (1 - D)");
    }
}
