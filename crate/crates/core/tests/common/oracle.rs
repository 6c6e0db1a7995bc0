//! Independent oracles shared by the oracle tests and the acceptance target.

#![allow(dead_code)]

use artin_core::character::{character_table, induce, inner_product, restrict, ClassFunction};
use artin_core::cyclo::{root_of_unity, CycloField, CycloNumber};
use artin_core::group::{PermutationGroup, Subgroup};
use artin_core::lseries::inverse_euler_factor;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Determinant of an integer matrix by fraction-free elimination.
pub fn bareiss_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return BigInt::zero() };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    sign * &m[n - 1][n - 1]
}

/// Coefficients of the polynomial of degree `< xs.len()` through `(xs, ys)`.
pub fn interpolate(xs: &[i64], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut out = vec![BigRational::zero(); n];
    for i in 0..n {
        // basis polynomial Π_{j≠i} (t - x_j) / (x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for j in 0..n {
            if j == i {
                continue;
            }
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * BigRational::from_integer(xs[j].into());
            }
            basis = next;
            denom *= BigRational::from_integer((xs[i] - xs[j]).into());
        }
        let scale = BigRational::from_integer(ys[i].clone()) / denom;
        for (k, c) in basis.iter().enumerate() {
            out[k] += c * &scale;
        }
    }
    out
}

/// `det(I - tP)` for the permutation matrix of `σ` acting on the left cosets of `h`.
pub fn coset_matrix_charpoly(g: &PermutationGroup, h: &Subgroup, sigma: usize) -> Vec<BigRational> {
    let (cosets, coset_of) = g.left_cosets(h);
    let d = cosets.len();
    let image: Vec<usize> = cosets.iter().map(|c| coset_of[g.mul(sigma, c[0])]).collect();
    let xs: Vec<i64> = (0..=d as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&t| {
            let m = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| {
                            let id = BigInt::from(i64::from(i == j));
                            let p = BigInt::from(i64::from(image[j] == i));
                            id - p * t
                        })
                        .collect()
                })
                .collect();
            bareiss_det(m)
        })
        .collect();
    interpolate(&xs, &ys)
}

/// `det(1 - ρ(σ)T)` from eigenvalue multiplicities: restricted to `⟨σ⟩` of
/// order `n`, the eigenvalue `ζ_n^k` occurs `(1/n) Σ_j χ(σ^j) ζ_n^{-jk}` times.
pub fn eigenvalue_charpoly(g: &PermutationGroup, chi: &ClassFunction, sigma: usize) -> Vec<CycloNumber> {
    let n = g.element_order(sigma);
    let field = CycloField::new(num_integer::lcm(chi.field().order(), n as u32));
    let mut poly = vec![CycloNumber::from_integer(&field, 1)];
    for k in 0..n {
        let mut m = CycloNumber::zero(&field);
        for j in 0..n {
            let v = chi.value_at(g, g.pow(sigma, j as u64)).coerce(&field);
            m = &m + &(&v * &root_of_unity(n as u32, -((j * k) as i64)).coerce(&field));
        }
        let m = m.scale(&BigRational::new(1.into(), BigInt::from(n)));
        let mult = m.as_integer().expect("multiplicity is an integer");
        let mult: usize = mult.try_into().expect("multiplicity is non-negative");
        let root = root_of_unity(n as u32, k as i64).coerce(&field);
        for _ in 0..mult {
            // multiply by (1 - root T)
            let mut next = poly.clone();
            next.push(CycloNumber::zero(&field));
            for (i, c) in poly.iter().enumerate() {
                next[i + 1] = &next[i + 1] - &(c * &root);
            }
            poly = next;
        }
    }
    poly
}

/// Newton-identity factors against both matrix oracles for every class of `g`:
/// the regular representation, every coset action, and every irreducible.
/// Returns the number of (character, class) pairs compared.
pub fn newton_matches_matrix_oracles(g: &PermutationGroup, subgroups: &[Subgroup]) -> usize {
    let mut checked = 0;
    for h in subgroups {
        let chi = ClassFunction::permutation_character(g, h);
        for (c, class) in g.classes().iter().enumerate() {
            let newton = inverse_euler_factor(g, &chi, c).unwrap();
            let oracle = coset_matrix_charpoly(g, h, class.representative);
            let newton: Vec<BigRational> = newton.coeffs().iter().map(|x| x.as_rational().unwrap()).collect();
            assert_eq!(newton, oracle, "subgroup of order {} at class {c}", h.order());
            checked += 1;
        }
    }
    let table = character_table(g).unwrap();
    for (i, chi) in table.irreducibles().iter().enumerate() {
        for (c, class) in g.classes().iter().enumerate() {
            let newton = inverse_euler_factor(g, chi, c).unwrap();
            let oracle = eigenvalue_charpoly(g, chi, class.representative);
            assert_eq!(newton.coeffs(), &oracle[..], "irreducible {i} at class {c}");
            checked += 1;
        }
    }
    checked
}

/// Exact row and column orthogonality of the character table.
pub fn orthogonality_holds(g: &PermutationGroup) -> bool {
    let table = character_table(g).unwrap();
    let irr = table.irreducibles();
    if irr.len() != g.classes().len() {
        return false;
    }
    for (i, a) in irr.iter().enumerate() {
        for (j, b) in irr.iter().enumerate() {
            let ip = inner_product(g, a, b).unwrap();
            if ip.as_integer() != Some(BigInt::from(i64::from(i == j))) {
                return false;
            }
        }
    }
    for (c1, k1) in g.classes().iter().enumerate() {
        for c2 in 0..g.classes().len() {
            let mut sum = CycloNumber::zero(irr[0].field());
            for chi in irr {
                sum = &sum + &(chi.value(c1) * &chi.value(c2).conj());
            }
            let expected = if c1 == c2 { g.order() / k1.size() } else { 0 };
            if sum.as_integer() != Some(BigInt::from(expected)) {
                return false;
            }
        }
    }
    true
}

/// `⟨ψ^G, χ⟩_G = ⟨ψ, χ|_H⟩_H`.
pub fn frobenius_reciprocity(g: &PermutationGroup, h: &Subgroup, psi_index: usize, chi_index: usize) -> bool {
    let emb = g.embed(h);
    let psi = character_table(&emb.group).unwrap().irreducibles()[psi_index].clone();
    let chi = character_table(g).unwrap().irreducibles()[chi_index].clone();
    let left = inner_product(g, &induce(g, &emb, &psi).unwrap(), &chi).unwrap();
    let right = inner_product(&emb.group, &psi, &restrict(g, &emb, &chi).unwrap()).unwrap();
    left == right
}

/// `1_H^G(x)` = number of left cosets `yH` with `x y H = y H`, counted directly.
pub fn counted_permutation_character(g: &PermutationGroup, h: &Subgroup) -> Vec<usize> {
    let (cosets, coset_of) = g.left_cosets(h);
    g.classes()
        .iter()
        .map(|c| (0..cosets.len()).filter(|&i| coset_of[g.mul(c.representative, cosets[i][0])] == i).count())
        .collect()
}
