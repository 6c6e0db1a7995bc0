//! Dixon's method: simultaneous diagonalization of the class multiplication
//! matrices over a prime field, then lifting values to `ℚ(ζ_e)`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{inner_product, ClassFunction};
use crate::arith::{add_mod, inv_mod, is_prime, mul_mod, pow_mod, prime_divisors, sub_mod};
use crate::cyclo::{CycloField, CycloNumber};
use crate::error::{Error, Result};
use crate::group::PermutationGroup;

#[derive(Clone, Debug)]
pub struct CharacterTable {
    irreducibles: Vec<ClassFunction>,
    /// The prime the table was computed modulo.
    pub prime: u64,
}

impl CharacterTable {
    /// Trivial character first, then by degree, then by values.
    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    /// Index of an irreducible equal to `chi`, if any.
    pub fn position(&self, chi: &ClassFunction) -> Option<usize> {
        self.irreducibles.iter().position(|x| x == chi)
    }
}

/// Smallest prime `ℓ ≡ 1 (mod e)` with `ℓ > 2√n`.
fn dixon_prime(exponent: u64, order: u64) -> u64 {
    let mut l = exponent + 1;
    loop {
        if l * l > 4 * order && is_prime(l) {
            return l;
        }
        l += exponent;
    }
}

/// An element of exact multiplicative order `e` modulo `ℓ`.
fn primitive_root_of_unity(e: u64, l: u64) -> u64 {
    let qs = prime_divisors(e.max(1));
    (2..l)
        .map(|a| pow_mod(a, (l - 1) / e, l))
        .find(|&z| e == 1 || qs.iter().all(|&q| pow_mod(z, e / q, l) != 1))
        .expect("a primitive e-th root exists when e divides l - 1")
}

/// Basis (columns) of `{c : A c = 0}` for an `rows × cols` matrix mod `p`.
fn nullspace(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let rows = a.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(pr) = (r..rows).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, pr);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                #[allow(clippy::needless_range_loop)]
                for k in 0..cols {
                    let v = mul_mod(f, a[r][k], p);
                    a[i][k] = sub_mod(a[i][k], v, p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![0u64; cols];
        v[free] = 1;
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = sub_mod(0, a[i][free], p);
        }
        basis.push(v);
    }
    basis
}

/// `class_matrices[j][k][l]` = #{x ∈ C_j : x⁻¹ z_l ∈ C_k}, z_l the representative of C_l.
fn class_matrices(g: &PermutationGroup) -> Vec<Vec<Vec<u64>>> {
    let r = g.classes().len();
    let mut mats = vec![vec![vec![0u64; r]; r]; r];
    for (j, cj) in g.classes().iter().enumerate() {
        for (l, cl) in g.classes().iter().enumerate() {
            for &x in &cj.members {
                let y = g.mul(g.inverse(x), cl.representative);
                mats[j][g.class_of(y)][l] += 1;
            }
        }
    }
    mats
}

pub fn character_table(g: &PermutationGroup) -> Result<CharacterTable> {
    let r = g.classes().len();
    let n = g.order() as u64;
    let e = g.exponent() as u64;
    let p = dixon_prime(e, n);
    let mats = class_matrices(g);

    // Each space is a list of basis vectors (length r).
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
        .map(|i| {
            let mut v = vec![0u64; r];
            v[i] = 1;
            v
        })
        .collect()];
    for mat in mats.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for space in spaces {
            if space.len() == 1 {
                next.push(space);
                continue;
            }
            let d = space.len();
            // image of each basis vector under the matrix
            let images: Vec<Vec<u64>> = space
                .iter()
                .map(|b| {
                    (0..r).map(|k| (0..r).fold(0, |acc, l| add_mod(acc, mul_mod(mat[k][l] % p, b[l], p), p))).collect()
                })
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // solve Σ_i c_i (M b_i - λ b_i) = 0
                let system: Vec<Vec<u64>> = (0..r)
                    .map(|k| (0..d).map(|i| sub_mod(images[i][k], mul_mod(lambda, space[i][k], p), p)).collect())
                    .collect();
                let sol = nullspace(system, d, p);
                if sol.is_empty() {
                    continue;
                }
                found += sol.len();
                let sub: Vec<Vec<u64>> = sol
                    .iter()
                    .map(|c| {
                        (0..r)
                            .map(|k| (0..d).fold(0, |acc, i| add_mod(acc, mul_mod(c[i], space[i][k], p), p)))
                            .collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(Error::TableFailure(format!("class matrix not diagonalizable modulo {p}")));
            }
        }
        spaces = next;
    }
    if spaces.len() != r || spaces.iter().any(|s| s.len() != 1) {
        return Err(Error::TableFailure("eigenspaces did not split into lines".into()));
    }

    let sizes: Vec<u64> = g.classes().iter().map(|c| c.size() as u64).collect();
    let z = primitive_root_of_unity(e, p);
    let field = CycloField::new(e as u32);
    let mut irreducibles = Vec::with_capacity(r);
    for space in &spaces {
        let v = &space[0];
        if v[0] == 0 {
            return Err(Error::TableFailure("eigenvector vanishes at the identity class".into()));
        }
        let norm = inv_mod(v[0], p);
        let omega: Vec<u64> = v.iter().map(|&x| mul_mod(x, norm, p)).collect();
        let mut s = 0;
        for l in 0..r {
            let term = mul_mod(mul_mod(omega[l], omega[g.inverse_class(l)], p), inv_mod(sizes[l] % p, p), p);
            s = add_mod(s, term, p);
        }
        if s == 0 {
            return Err(Error::TableFailure("degenerate central character".into()));
        }
        let d2 = mul_mod(n % p, inv_mod(s, p), p);
        let degree = (1..=n)
            .take_while(|d| d * d <= n)
            .find(|d| mul_mod(*d, *d, p) == d2)
            .ok_or_else(|| Error::TableFailure("no integral degree".into()))?;
        let chi_mod: Vec<u64> =
            (0..r).map(|l| mul_mod(mul_mod(omega[l], degree, p), inv_mod(sizes[l] % p, p), p)).collect();

        let inv_e = inv_mod(e % p, p);
        let mut values = Vec::with_capacity(r);
        for l in 0..r {
            let mut coeffs = vec![BigRational::zero(); e as usize];
            for k in 0..e {
                let mut m = 0;
                for j in 0..e {
                    let val = chi_mod[g.power_class(l, j)];
                    let root = pow_mod(z, (e - (j * k) % e) % e, p);
                    m = add_mod(m, mul_mod(val, root, p), p);
                }
                let m = mul_mod(m, inv_e, p);
                if m > degree {
                    return Err(Error::TableFailure(format!("eigenvalue multiplicity {m} exceeds degree {degree}")));
                }
                coeffs[k as usize] = BigRational::from_integer((m as i64).into());
            }
            values.push(CycloNumber::from_power_coords(&field, &coeffs));
        }
        irreducibles.push(ClassFunction::from_parts(g, field.clone(), values));
    }

    let trivial = ClassFunction::trivial(g);
    irreducibles.sort_by(|a, b| {
        let key = |x: &ClassFunction| (*x != trivial, x.degree().unwrap_or(0));
        key(a).cmp(&key(b)).then_with(|| {
            a.values()
                .iter()
                .zip(b.values())
                .map(|(x, y)| x.cmp_coords(y))
                .find(|o| o.is_ne())
                .unwrap_or(core::cmp::Ordering::Equal)
        })
    });
    let table = CharacterTable { irreducibles, prime: p };
    verify(g, &table)?;
    Ok(table)
}

/// Exact row and column orthogonality plus the degree-square sum.
pub(crate) fn verify(g: &PermutationGroup, table: &CharacterTable) -> Result<()> {
    let irr = table.irreducibles();
    let r = g.classes().len();
    if irr.len() != r {
        return Err(Error::TableFailure("number of irreducibles differs from class count".into()));
    }
    for (i, a) in irr.iter().enumerate() {
        for (j, b) in irr.iter().enumerate() {
            let ip = inner_product(g, a, b)?;
            let expect = if i == j { BigRational::one() } else { BigRational::zero() };
            if ip.as_rational() != Some(expect) {
                return Err(Error::TableFailure(format!("rows {i} and {j} are not orthonormal")));
            }
        }
    }
    let deg_sq: u64 = irr.iter().map(|x| x.degree().map(|d| d * d)).sum::<Result<u64>>()?;
    if deg_sq != g.order() as u64 {
        return Err(Error::TableFailure("sum of squared degrees differs from |G|".into()));
    }
    // Column orthogonality: Σ_χ χ(g) conj χ(h) = δ |C_G(g)|.
    for c1 in 0..r {
        for c2 in 0..r {
            let mut acc = CycloNumber::zero(irr[0].field());
            for chi in irr {
                acc = &acc + &(chi.value(c1) * &chi.value(c2).conj());
            }
            let expect = if c1 == c2 { (g.order() / g.classes()[c1].size()) as i64 } else { 0 };
            if acc.as_rational() != Some(BigRational::from_integer(expect.into())) {
                return Err(Error::TableFailure(format!("columns {c1} and {c2} are not orthogonal")));
            }
        }
    }
    Ok(())
}
