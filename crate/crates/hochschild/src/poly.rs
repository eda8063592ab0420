//! Exact polynomial arithmetic: dense integer polynomials, rational
//! polynomials for interpolation and fractional closed forms, bivariate
//! degree polynomials, and cyclotomic polynomials by the division recurrence.
//!
//! No floating point anywhere — cyclotomic detection and fractional
//! closed-form evaluation are exact or nothing.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Dense integer polynomial; `coeffs[i]` is the coefficient of `x^i`. The
/// zero polynomial stores no coefficients, any other stores a nonzero leading
/// coefficient.
#[derive(Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        IntPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.normalize();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^d − 1`.
    pub fn x_pow_minus_one(d: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); d + 1];
        coeffs[0] = BigInt::from(-1);
        coeffs[d] = BigInt::one();
        IntPoly::from_coeffs(coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: usize) -> IntPoly {
        let mut result = IntPoly::one();
        for _ in 0..e {
            result = result.mul(self);
        }
        result
    }

    /// Quotient and remainder by a monic divisor. Panics on a non-monic or
    /// zero divisor — all divisors in this crate (cyclotomics, `x^i − 1`) are
    /// monic by construction.
    pub fn div_rem(&self, divisor: &IntPoly) -> (IntPoly, IntPoly) {
        assert!(divisor.is_monic(), "division requires a monic divisor");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (IntPoly::zero(), self.clone());
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.coeffs.len() - d];
        for i in (d..rem.len()).rev() {
            let factor = std::mem::replace(&mut rem[i], BigInt::zero());
            if factor.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate().take(d) {
                rem[i - d + j] -= &factor * c;
            }
            quot[i - d] = factor;
        }
        rem.truncate(d);
        (IntPoly::from_coeffs(quot), IntPoly::from_coeffs(rem))
    }

    /// Quotient if the division is exact, None otherwise.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// `p(−x)`.
    pub fn compose_neg(&self) -> IntPoly {
        IntPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn to_rational(&self) -> RatPoly {
        RatPoly::from_coeffs(
            self.coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        )
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

/// Dense polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        RatPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = RatPoly { coeffs };
        p.normalize();
        p
    }

    /// Convenience: coefficients as (numerator, denominator) pairs, constant
    /// term first.
    pub fn from_fracs(fracs: &[(i64, i64)]) -> Self {
        RatPoly::from_coeffs(
            fracs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    fn normalize(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len().max(other.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs =
            vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, factor: &BigRational) -> RatPoly {
        RatPoly::from_coeffs(self.coeffs.iter().map(|c| c * factor).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }

    /// Integer polynomial if every coefficient is integral.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<BigInt>>>()
            .map(IntPoly::from_coeffs)
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let shown = if magnitude.is_integer() {
                magnitude.to_integer().to_string()
            } else {
                format!("{}/{}", magnitude.numer(), magnitude.denom())
            };
            match i {
                0 => write!(f, "{shown}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{shown} ")?;
                    }
                    write!(f, "x")?;
                    if i > 1 {
                        write!(f, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatPoly({self})")
    }
}

/// Exact polynomial through the given points (Newton's divided differences).
/// Panics if two points share an abscissa.
pub fn interpolate(points: &[(BigRational, BigRational)]) -> RatPoly {
    if points.is_empty() {
        return RatPoly::zero();
    }
    let xs: Vec<&BigRational> = points.iter().map(|(x, _)| x).collect();
    let mut table: Vec<BigRational> = points.iter().map(|(_, y)| y.clone()).collect();
    let mut coefficients = vec![table[0].clone()];
    for level in 1..points.len() {
        for i in 0..points.len() - level {
            let dx = xs[i + level] - xs[i];
            assert!(!dx.is_zero(), "duplicate interpolation node");
            table[i] = (&table[i + 1] - &table[i]) / dx;
        }
        table.truncate(points.len() - level);
        coefficients.push(table[0].clone());
    }
    // assemble: p = c_m; p = p (x − x_i) + c_i going down
    let mut poly = RatPoly::constant(coefficients.last().unwrap().clone());
    for i in (0..points.len() - 1).rev() {
        let linear = RatPoly::from_coeffs(vec![-xs[i].clone(), BigRational::one()]);
        poly = poly.mul(&linear).add(&RatPoly::constant(coefficients[i].clone()));
    }
    poly
}

/// Same, with integer nodes and values.
pub fn interpolate_int(points: &[(BigInt, BigInt)]) -> RatPoly {
    let rational: Vec<(BigRational, BigRational)> = points
        .iter()
        .map(|(x, y)| {
            (
                BigRational::from_integer(x.clone()),
                BigRational::from_integer(y.clone()),
            )
        })
        .collect();
    interpolate(&rational)
}

/// Cyclotomic polynomials via `Φ_d = (x^d − 1) / ∏_{e|d, e<d} Φ_e`, cached.
pub struct Cyclotomics {
    cache: HashMap<usize, IntPoly>,
}

impl Default for Cyclotomics {
    fn default() -> Self {
        Self::new()
    }
}

impl Cyclotomics {
    pub fn new() -> Self {
        Cyclotomics {
            cache: HashMap::new(),
        }
    }

    pub fn phi(&mut self, d: usize) -> IntPoly {
        assert!(d >= 1, "cyclotomic index starts at 1");
        if let Some(p) = self.cache.get(&d) {
            return p.clone();
        }
        let mut numerator = IntPoly::x_pow_minus_one(d);
        for e in 1..d {
            if d % e == 0 {
                let phi_e = self.phi(e);
                numerator = numerator
                    .div_exact(&phi_e)
                    .expect("cyclotomic recurrence divides exactly");
            }
        }
        self.cache.insert(d, numerator.clone());
        numerator
    }
}

/// Euler's totient for 0..limit (index 0 unused).
pub fn totient_sieve(limit: usize) -> Vec<usize> {
    let mut phi: Vec<usize> = (0..limit).collect();
    for i in 2..limit {
        if phi[i] == i {
            // i prime
            let mut j = i;
            while j < limit {
                phi[j] -= phi[j] / i;
                j += i;
            }
        }
    }
    phi
}

/// Bivariate integer polynomial, keyed by (x-exponent, y-exponent); zero
/// coefficients are never stored.
#[derive(Clone, PartialEq, Eq)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn zero() -> Self {
        BivarPoly {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(xe: u32, ye: u32, coeff: i64) -> Self {
        let mut p = BivarPoly::zero();
        p.add_term(xe, ye, BigInt::from(coeff));
        p
    }

    pub fn add_term(&mut self, xe: u32, ye: u32, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((xe, ye)).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(xe, ye));
        }
    }

    pub fn add(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(xe, ye), c) in &other.terms {
            out.add_term(xe, ye, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::zero();
        for (&(ax, ay), ac) in &self.terms {
            for (&(bx, by), bc) in &other.terms {
                out.add_term(ax + bx, ay + by, ac * bc);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> BivarPoly {
        let mut out = BivarPoly::monomial(0, 0, 1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    /// Substitute x = 1, leaving a univariate polynomial in y.
    pub fn substitute_x_one(&self) -> IntPoly {
        let max_y = self.terms.keys().map(|&(_, ye)| ye).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); max_y as usize + 1];
        for (&(_, ye), c) in &self.terms {
            coeffs[ye as usize] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // print in descending x-degree, the way these expansions are read
        let mut first = true;
        for (&(xe, ye), c) in self.terms.iter().rev() {
            let magnitude = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if !magnitude.is_one() || (xe == 0 && ye == 0) {
                write!(f, "{magnitude}")?;
            }
            if xe > 0 {
                write!(f, "x")?;
                if xe > 1 {
                    write!(f, "^{xe}")?;
                }
            }
            if ye > 0 {
                write!(f, "y")?;
                if ye > 1 {
                    write!(f, "^{ye}")?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BivarPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    #[test]
    fn arithmetic_basics() {
        let p = poly(&[1, 2, 1]); // (x+1)^2
        let q = poly(&[1, 1]);
        assert_eq!(q.mul(&q), p);
        assert_eq!(p.sub(&p), IntPoly::zero());
        assert_eq!(p.degree(), Some(2));
        assert_eq!(IntPoly::zero().degree(), None);
        assert_eq!(p.eval(&BigInt::from(3)), BigInt::from(16));
        assert_eq!(q.pow(2), p);
        assert_eq!(poly(&[0, 1]).compose_neg(), poly(&[0, -1]));
        assert_eq!(p.to_string(), "x^2 + 2x + 1");
        assert_eq!(poly(&[-1, 0, 1]).to_string(), "x^2 - 1");
        assert_eq!(poly(&[5]).to_string(), "5");
    }

    #[test]
    fn division() {
        let p = IntPoly::x_pow_minus_one(8).mul(&poly(&[-1, 1]));
        let (q, r) = p.div_rem(&IntPoly::x_pow_minus_one(4));
        assert!(r.is_zero());
        assert_eq!(q.mul(&IntPoly::x_pow_minus_one(4)), p);
        let (_, r) = poly(&[1, 0, 1]).div_rem(&poly(&[1, 1]));
        assert_eq!(r, poly(&[2]));
        assert!(poly(&[1, 0, 1]).div_exact(&poly(&[1, 1])).is_none());
    }

    #[test]
    fn cyclotomic_table() {
        let mut table = Cyclotomics::new();
        assert_eq!(table.phi(1), poly(&[-1, 1]));
        assert_eq!(table.phi(2), poly(&[1, 1]));
        assert_eq!(table.phi(3), poly(&[1, 1, 1]));
        assert_eq!(table.phi(4), poly(&[1, 0, 1]));
        assert_eq!(table.phi(6), poly(&[1, -1, 1]));
        assert_eq!(table.phi(8), poly(&[1, 0, 0, 0, 1]));
        // ∏_{d|n} Φ_d = x^n − 1
        for n in 1..=200 {
            let mut product = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    product = product.mul(&table.phi(d));
                }
            }
            assert_eq!(product, IntPoly::x_pow_minus_one(n), "n={n}");
        }
    }

    #[test]
    fn totients() {
        let phi = totient_sieve(100);
        assert_eq!(&phi[1..13], &[1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]);
        let mut table = Cyclotomics::new();
        for d in 1..60 {
            assert_eq!(table.phi(d).degree(), Some(phi[d]), "deg Φ_{d}");
        }
    }

    #[test]
    fn interpolation_recovers_polynomials() {
        // x^3 − 7x + 3 through 4 points
        let target = poly(&[3, -7, 0, 1]);
        let points: Vec<(BigInt, BigInt)> = (-1..=2)
            .map(|t| {
                let x = BigInt::from(t);
                let y = target.eval(&x);
                (x, y)
            })
            .collect();
        let recovered = interpolate_int(&points);
        assert_eq!(recovered.to_int_poly().unwrap(), target);

        // fractional coefficients survive exactly
        let half = RatPoly::from_fracs(&[(1, 2), (1, 3)]);
        let pts: Vec<(BigRational, BigRational)> = (0..2)
            .map(|t| {
                let x = BigRational::from_integer(BigInt::from(t));
                (x.clone(), half.eval(&x))
            })
            .collect();
        assert_eq!(interpolate(&pts), half);
        assert!(half.to_int_poly().is_none());
    }

    #[test]
    fn bivariate_displays_and_ops() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let sum = BivarPoly::monomial(1, 0, 1).add(&BivarPoly::monomial(0, 1, 1));
        let square = sum.pow(2);
        let mut expected = BivarPoly::monomial(2, 0, 1);
        expected = expected.add(&BivarPoly::monomial(1, 1, 2));
        expected = expected.add(&BivarPoly::monomial(0, 2, 1));
        assert_eq!(square, expected);
        assert_eq!(square.to_string(), "x^2 + 2xy + y^2");
        assert_eq!(square.substitute_x_one(), poly(&[1, 2, 1]));
    }
}
