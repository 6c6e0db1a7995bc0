//! Exact arithmetic in cyclotomic fields `ℚ(ζ_m)`.
//!
//! An element is stored by its rational coordinates in the power basis
//! `1, ζ, .., ζ^(φ(m)-1)`, always reduced modulo the `m`-th cyclotomic
//! polynomial. Elements of different orders are coerced into `ℚ(ζ_lcm)`.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Largest order that mixed-order arithmetic may coerce into.
pub const DEFAULT_COERCION_BOUND: u32 = 120;

/// Reduction data for one cyclotomic field.
#[derive(Debug, PartialEq, Eq)]
pub struct CycloField {
    order: u32,
    /// Coefficients of Φ_m, ascending; monic of degree φ(m).
    modulus: Vec<i64>,
    /// `powers[k]` holds the reduced coordinates of `ζ^k`, `0 <= k < m`.
    powers: Vec<Vec<i64>>,
}

impl CycloField {
    pub fn new(order: u32) -> Arc<CycloField> {
        assert!(order >= 1, "cyclotomic order must be positive");
        let modulus = cyclotomic_polynomial(order);
        let phi = modulus.len() - 1;
        let mut powers = Vec::with_capacity(order as usize);
        let mut current = vec![0i64; phi];
        current[0] = 1;
        for _ in 0..order {
            powers.push(current.clone());
            // multiply by x and reduce
            let top = current[phi - 1];
            for i in (1..phi).rev() {
                current[i] = current[i - 1];
            }
            current[0] = 0;
            if top != 0 {
                for i in 0..phi {
                    current[i] -= top * modulus[i];
                }
            }
        }
        Arc::new(CycloField { order, modulus, powers })
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// φ(m), the dimension over ℚ.
    pub fn dimension(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[i64] {
        &self.modulus
    }
}

/// The `m`-th cyclotomic polynomial, ascending coefficients.
pub fn cyclotomic_polynomial(m: u32) -> Vec<i64> {
    // x^m - 1 divided by Φ_d for every proper divisor d of m
    let mut poly = vec![0i64; m as usize + 1];
    poly[0] = -1;
    poly[m as usize] = 1;
    for d in 1..m {
        if m.is_multiple_of(d) {
            poly = exact_div(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Exact division by a monic integer polynomial.
fn exact_div(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for k in (0..=qd).rev() {
        let c = rem[k + dd];
        q[k] = c;
        for (i, &d) in den.iter().enumerate() {
            rem[k + i] -= c * d;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<CycloField>,
    coords: Vec<BigRational>,
}

impl CycloNumber {
    pub fn zero(field: &Arc<CycloField>) -> Self {
        CycloNumber { field: field.clone(), coords: vec![BigRational::zero(); field.dimension()] }
    }

    pub fn from_rational(field: &Arc<CycloField>, q: BigRational) -> Self {
        let mut x = Self::zero(field);
        x.coords[0] = q;
        x
    }

    pub fn from_integer(field: &Arc<CycloField>, n: i64) -> Self {
        Self::from_rational(field, BigRational::from_integer(BigInt::from(n)))
    }

    /// `ζ_m^k` inside `field` (which must have order `m`).
    pub fn zeta_power(field: &Arc<CycloField>, k: i64) -> Self {
        let m = field.order as i64;
        let k = k.rem_euclid(m) as usize;
        let coords = field.powers[k].iter().map(|&c| BigRational::from_integer(c.into())).collect();
        CycloNumber { field: field.clone(), coords }
    }

    /// Builds an element from coordinates in the power basis; reduces if
    /// more than φ(m) coordinates are given.
    pub fn from_power_coords(field: &Arc<CycloField>, coeffs: &[BigRational]) -> Self {
        let mut x = Self::zero(field);
        let m = field.order as usize;
        for (k, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (i, &p) in field.powers[k % m].iter().enumerate() {
                if p != 0 {
                    x.coords[i] += c * BigRational::from_integer(p.into());
                }
            }
        }
        x
    }

    pub fn field(&self) -> &Arc<CycloField> {
        &self.field
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.coords[1..].iter().all(Zero::is_zero).then(|| self.coords[0].clone())
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|q| q.is_integer()).map(|q| q.to_integer())
    }

    /// Re-expresses `self` in `ℚ(ζ_target)`; `target` must be a multiple of the order.
    pub fn coerce(&self, target: &Arc<CycloField>) -> Self {
        if Arc::ptr_eq(&self.field, target) || self.field.order == target.order {
            return CycloNumber { field: target.clone(), coords: self.coords.clone() };
        }
        assert!(target.order.is_multiple_of(self.field.order), "order does not divide the target order");
        let step = (target.order / self.field.order) as usize;
        let mut x = Self::zero(target);
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, &p) in target.powers[i * step].iter().enumerate() {
                if p != 0 {
                    x.coords[j] += c * BigRational::from_integer(p.into());
                }
            }
        }
        x
    }

    /// Brings two elements into a common field, refusing orders above `bound`.
    pub fn unify(&self, other: &Self, bound: u32) -> Result<(Self, Self)> {
        if self.field.order == other.field.order {
            return Ok((self.clone(), other.clone()));
        }
        let l = self.field.order.lcm(&other.field.order);
        if l > bound {
            return Err(Error::OrderIncompatible { left: self.field.order, right: other.field.order, bound });
        }
        let field = if l == self.field.order {
            self.field.clone()
        } else if l == other.field.order {
            other.field.clone()
        } else {
            CycloField::new(l)
        };
        Ok((self.coerce(&field), other.coerce(&field)))
    }

    pub fn checked_add(&self, other: &Self, bound: u32) -> Result<Self> {
        let (a, b) = self.unify(other, bound)?;
        Ok(a.add_same(&b))
    }

    pub fn checked_mul(&self, other: &Self, bound: u32) -> Result<Self> {
        let (a, b) = self.unify(other, bound)?;
        Ok(a.mul_same(&b))
    }

    pub fn checked_eq(&self, other: &Self, bound: u32) -> Result<bool> {
        let (a, b) = self.unify(other, bound)?;
        Ok(a.coords == b.coords)
    }

    fn add_same(&self, other: &Self) -> Self {
        let coords = self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect();
        CycloNumber { field: self.field.clone(), coords }
    }

    fn mul_same(&self, other: &Self) -> Self {
        if let Some(q) = self.as_rational() {
            return other.scale(&q);
        }
        if let Some(q) = other.as_rational() {
            return self.scale(&q);
        }
        let m = self.field.order as usize;
        let mut acc: Vec<BigRational> = vec![BigRational::zero(); m];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coords.iter().enumerate() {
                if !b.is_zero() {
                    acc[(i + j) % m] += a * b;
                }
            }
        }
        Self::from_power_coords(&self.field, &acc)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CycloNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| c * q).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut r = Self::from_integer(&self.field, 1);
        for _ in 0..k {
            r = r.mul_same(self);
        }
        r
    }

    /// Image under the automorphism `ζ ↦ ζ^k`, `gcd(k, m) = 1`.
    pub fn galois(&self, k: i64) -> Self {
        let m = self.field.order as i64;
        let mut acc = vec![BigRational::zero(); m as usize];
        for (i, c) in self.coords.iter().enumerate() {
            if !c.is_zero() {
                acc[(i as i64 * k).rem_euclid(m) as usize] += c;
            }
        }
        Self::from_power_coords(&self.field, &acc)
    }

    /// Complex conjugate, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1)
    }

    /// Coordinate comparison for deterministic sorting; orders compared first.
    pub fn cmp_coords(&self, other: &Self) -> core::cmp::Ordering {
        self.field.order.cmp(&other.field.order).then_with(|| self.coords.cmp(&other.coords))
    }

    /// Parses `"q0 + q1*z + q2*z^2"` (optionally suffixed with `[m=M]`).
    ///
    /// Exponents may exceed φ(m); the result is reduced. A declared order in
    /// the text must match `field`.
    pub fn parse(field: &Arc<CycloField>, text: &str) -> Result<Self> {
        let mut s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(start) = s.find('[') {
            let tail = &s[start..];
            let declared = tail
                .strip_prefix("[m=")
                .and_then(|t| t.strip_suffix(']'))
                .and_then(|t| t.parse::<u32>().ok())
                .ok_or_else(|| bad_number(text))?;
            if declared != field.order {
                return Err(Error::InvalidInput(alloc::format!(
                    "value {text:?} declares order {declared}, expected {}",
                    field.order
                )));
            }
            s.truncate(start);
        }
        if s.is_empty() {
            return Err(bad_number(text));
        }
        let mut acc = vec![BigRational::zero(); field.order as usize];
        let bytes = s.as_bytes();
        let mut pos = 0;
        while pos < bytes.len() {
            let mut sign = BigRational::one();
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            let end = s[pos..].find(['+', '-']).map_or(s.len(), |e| pos + e);
            let term = &s[pos..end];
            if term.is_empty() {
                return Err(bad_number(text));
            }
            let (coeff, exp) = parse_term(term).ok_or_else(|| bad_number(text))?;
            acc[(exp % field.order as u64) as usize] += sign * coeff;
            pos = end;
        }
        Ok(Self::from_power_coords(field, &acc))
    }
}

fn bad_number(text: &str) -> Error {
    Error::InvalidInput(alloc::format!("cannot parse cyclotomic number {text:?}"))
}

fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((n, d)) => {
            let d: BigInt = d.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(n.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

fn parse_term(term: &str) -> Option<(BigRational, u64)> {
    let (coeff, power) = match term.find('z') {
        None => return Some((parse_rational(term)?, 0)),
        Some(zpos) => {
            let coeff = match &term[..zpos] {
                "" => BigRational::one(),
                c => parse_rational(c.strip_suffix('*')?)?,
            };
            let rest = &term[zpos + 1..];
            let power = if rest.is_empty() { 1 } else { rest.strip_prefix('^')?.parse().ok()? };
            (coeff, power)
        }
    };
    Some((coeff, power))
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &Self) -> bool {
        if self.field.order == other.field.order {
            return self.coords == other.coords;
        }
        let l = self.field.order.lcm(&other.field.order);
        let field = CycloField::new(l);
        self.coerce(&field).coords == other.coerce(&field).coords
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycloNumber({self})")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(q) = self.as_rational() {
            return write!(f, "{q}");
        }
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
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
                        f.write_str("z")?;
                    } else {
                        write!(f, "z^{i}")?;
                    }
                }
            }
        }
        write!(f, " [m={}]", self.field.order)
    }
}

fn common(a: &CycloNumber, b: &CycloNumber) -> (CycloNumber, CycloNumber) {
    a.unify(b, DEFAULT_COERCION_BOUND).unwrap_or_else(|e| panic!("{e}"))
}

impl Add for &CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: &CycloNumber) -> CycloNumber {
        if self.field.order == rhs.field.order {
            return self.add_same(rhs);
        }
        let (a, b) = common(self, rhs);
        a.add_same(&b)
    }
}

impl Sub for &CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: &CycloNumber) -> CycloNumber {
        self + &(-rhs)
    }
}

impl Mul for &CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: &CycloNumber) -> CycloNumber {
        if self.field.order == rhs.field.order {
            return self.mul_same(rhs);
        }
        let (a, b) = common(self, rhs);
        a.mul_same(&b)
    }
}

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber { field: self.field.clone(), coords: self.coords.iter().map(|c| -c).collect() }
    }
}

impl Add for CycloNumber {
    type Output = CycloNumber;
    fn add(self, rhs: CycloNumber) -> CycloNumber {
        &self + &rhs
    }
}

impl Sub for CycloNumber {
    type Output = CycloNumber;
    fn sub(self, rhs: CycloNumber) -> CycloNumber {
        &self - &rhs
    }
}

impl Mul for CycloNumber {
    type Output = CycloNumber;
    fn mul(self, rhs: CycloNumber) -> CycloNumber {
        &self * &rhs
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        -&self
    }
}

/// `ζ_m^k` in a freshly built field of order `m`.
pub fn root_of_unity(m: u32, k: i64) -> CycloNumber {
    CycloNumber::zeta_power(&CycloField::new(m), k)
}
