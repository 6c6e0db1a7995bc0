//! Integer polynomials: discriminants and factorization shapes modulo primes.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{inv_mod, mul_mod, sub_mod};
use crate::error::{Error, Result};

/// A nonzero polynomial with integer coefficients, ascending degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Degrees of the irreducible factors of `f mod p`, or `Ramified` when
/// `f mod p` is not squarefree or `p` divides the leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorShape {
    Ramified,
    /// Sorted ascending.
    Degrees(Vec<usize>),
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Result<Self> {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::InvalidInput("zero polynomial".into()));
        }
        Ok(IntPolynomial { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n + c`.
    pub fn binomial(n: usize, c: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = c.into();
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn leading(&self) -> &BigInt {
        self.coeffs.last().expect("nonzero polynomial")
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_one()
    }

    pub fn derivative(&self) -> Vec<BigInt> {
        self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * BigInt::from(i)).collect()
    }

    /// Resultant-based discriminant `(-1)^{n(n-1)/2} Res(f, f') / lc(f)`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree();
        if n == 0 {
            return BigInt::zero();
        }
        if n == 1 {
            return BigInt::one();
        }
        let f = to_rational(&self.coeffs);
        let df = to_rational(&self.derivative());
        let res = resultant(&f, &df);
        let sign = if (n * (n - 1) / 2).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
        let disc = sign * res / BigRational::from_integer(self.leading().clone());
        debug_assert!(disc.is_integer());
        disc.to_integer()
    }

    /// Whether `gcd(f, f')` over ℚ is constant.
    pub fn is_squarefree(&self) -> bool {
        if self.degree() == 0 {
            return true;
        }
        let g = gcd_rational(to_rational(&self.coeffs), to_rational(&self.derivative()));
        g.len() == 1
    }

    /// Primes dividing the discriminant (and the leading coefficient), ascending.
    pub fn ramified_primes(&self) -> Vec<u64> {
        let mut n = (self.discriminant() * self.leading()).abs();
        let mut out = Vec::new();
        if n.is_zero() {
            return out;
        }
        let mut d = 2u64;
        while BigInt::from(d) * BigInt::from(d) <= n {
            let bd = BigInt::from(d);
            if (&n % &bd).is_zero() {
                out.push(d);
                while (&n % &bd).is_zero() {
                    n /= &bd;
                }
            }
            d += 1;
        }
        if n > BigInt::one() {
            out.push(n.to_u64().expect("discriminant prime fits in 64 bits"));
        }
        out
    }

    /// Coefficients reduced modulo `p`.
    pub fn reduce_mod(&self, p: u64) -> Vec<u64> {
        let bp = BigInt::from(p);
        self.coeffs.iter().map(|c| c.mod_floor(&bp).to_u64().expect("residue fits")).collect()
    }

    /// Distinct-degree factorization shape of `f mod p`.
    pub fn factor_shape(&self, p: u64) -> FactorShape {
        let mut f = self.reduce_mod(p);
        if *f.last().unwrap() == 0 {
            return FactorShape::Ramified;
        }
        make_monic(&mut f, p);
        let df = trim(self.derivative().iter().map(|c| c.mod_floor(&BigInt::from(p)).to_u64().unwrap()).collect());
        if degree(&gcd_mod(f.clone(), df, p)) > 0 {
            return FactorShape::Ramified;
        }
        let mut degrees = Vec::new();
        let x = vec![0, 1];
        let mut h = rem_mod(x.clone(), &f, p);
        let mut d = 1;
        while degree(&f) >= 2 * d {
            h = pow_poly_mod(&h, p, &f, p);
            let diff = sub_poly(&h, &x, p);
            let g = gcd_mod(f.clone(), diff, p);
            let dg = degree(&g);
            if dg > 0 {
                degrees.extend(core::iter::repeat_n(d, dg / d));
                f = div_exact_mod(&f, &g, p);
                h = rem_mod(h, &f, p);
            }
            d += 1;
        }
        if degree(&f) > 0 {
            degrees.push(degree(&f));
        }
        degrees.sort_unstable();
        FactorShape::Degrees(degrees)
    }

    /// Number of distinct roots of `f` in `F_p`, by evaluation at every residue.
    pub fn count_roots_mod(&self, p: u64) -> usize {
        let f = self.reduce_mod(p);
        (0..p).filter(|&x| f.iter().rev().fold(0u64, |acc, &c| (mul_mod(acc, x, p) + c) % p) == 0).count()
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                _ => {
                    if !a.is_one() {
                        write!(f, "{a}*")?;
                    }
                    if i == 1 {
                        f.write_str("x")?;
                    } else {
                        write!(f, "x^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn to_rational(c: &[BigInt]) -> Vec<BigRational> {
    c.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

fn trim_q(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.len() > 1 && v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn rem_q(a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
    let db = b.len() - 1;
    if db == 0 {
        return vec![BigRational::zero()];
    }
    let mut a = trim_q(a);
    let lb = b[db].clone();
    while a.len() > db && !is_zero_q(&a) {
        let k = a.len() - 1 - db;
        let c = a.last().unwrap() / &lb;
        for (i, bi) in b.iter().enumerate() {
            a[k + i] -= &c * bi;
        }
        a.pop();
        a = trim_q(a);
    }
    a
}

fn is_zero_q(a: &[BigRational]) -> bool {
    a.iter().all(Zero::is_zero)
}

/// Resultant over ℚ by the Euclidean recursion
/// `Res(A, B) = (-1)^{mn} lc(B)^{m-k} Res(B, A mod B)`.
fn resultant(a: &[BigRational], b: &[BigRational]) -> BigRational {
    let a = trim_q(a.to_vec());
    let b = trim_q(b.to_vec());
    if is_zero_q(&a) || is_zero_q(&b) {
        return BigRational::zero();
    }
    let m = a.len() - 1;
    let n = b.len() - 1;
    if n == 0 {
        return num_traits::pow(b[0].clone(), m);
    }
    if m == 0 {
        return num_traits::pow(a[0].clone(), n);
    }
    let r = rem_q(a, &b);
    if is_zero_q(&r) {
        return BigRational::zero();
    }
    let k = r.len() - 1;
    let sign = if (m * n).is_multiple_of(2) { BigRational::one() } else { -BigRational::one() };
    sign * num_traits::pow(b[n].clone(), m - k) * resultant(&b, &r)
}

fn gcd_rational(a: Vec<BigRational>, b: Vec<BigRational>) -> Vec<BigRational> {
    let (mut a, mut b) = (trim_q(a), trim_q(b));
    while !is_zero_q(&b) {
        let r = rem_q(a, &b);
        a = b;
        b = r;
    }
    a
}

// --- polynomials over F_p as ascending residue vectors ---

fn trim(mut v: Vec<u64>) -> Vec<u64> {
    while v.len() > 1 && *v.last().unwrap() == 0 {
        v.pop();
    }
    if v.is_empty() {
        v.push(0);
    }
    v
}

/// Degree, with the zero polynomial reported as degree 0.
fn degree(v: &[u64]) -> usize {
    v.len() - 1
}

fn is_zero_mod(v: &[u64]) -> bool {
    v.iter().all(|&c| c == 0)
}

fn make_monic(f: &mut [u64], p: u64) {
    let inv = inv_mod(*f.last().unwrap(), p);
    for c in f.iter_mut() {
        *c = mul_mod(*c, inv, p);
    }
}

fn rem_mod(a: Vec<u64>, b: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(a);
    let db = degree(b);
    let inv = inv_mod(b[db], p);
    while a.len() > db && !is_zero_mod(&a) {
        let k = a.len() - 1 - db;
        let c = mul_mod(*a.last().unwrap(), inv, p);
        for (i, &bi) in b.iter().enumerate() {
            a[k + i] = sub_mod(a[k + i], mul_mod(c, bi, p), p);
        }
        a.pop();
        a = trim(a);
        if db == 0 {
            return vec![0];
        }
    }
    a
}

fn gcd_mod(a: Vec<u64>, b: Vec<u64>, p: u64) -> Vec<u64> {
    let (mut a, mut b) = (trim(a), trim(b));
    while !is_zero_mod(&b) {
        let r = rem_mod(a, &b, p);
        a = b;
        b = r;
    }
    if !is_zero_mod(&a) {
        make_monic(&mut a, p);
    }
    a
}

fn sub_poly(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| sub_mod(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p)).collect())
}

fn mul_poly_mod(a: &[u64], b: &[u64], f: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + mul_mod(x, y, p)) % p;
        }
    }
    rem_mod(out, f, p)
}

fn pow_poly_mod(base: &[u64], mut e: u64, f: &[u64], p: u64) -> Vec<u64> {
    let mut result = vec![1u64];
    let mut b = base.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            result = mul_poly_mod(&result, &b, f, p);
        }
        b = mul_poly_mod(&b, &b, f, p);
        e >>= 1;
    }
    result
}

fn div_exact_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut rem = a.to_vec();
    let db = degree(b);
    let inv = inv_mod(b[db], p);
    let qd = degree(a) - db;
    let mut q = vec![0u64; qd + 1];
    for k in (0..=qd).rev() {
        let c = mul_mod(rem[k + db], inv, p);
        q[k] = c;
        for (i, &bi) in b.iter().enumerate() {
            rem[k + i] = sub_mod(rem[k + i], mul_mod(c, bi, p), p);
        }
    }
    trim(q)
}
