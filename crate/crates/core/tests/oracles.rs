#[path = "common/oracle.rs"]
mod oracle;

use artin_core::builtin;
use artin_core::character::{character_table, ClassFunction};
use artin_core::galois::gassmann_equivalent;
use artin_core::group::{PermutationGroup, DEFAULT_SUBGROUP_CAP};
use num_bigint::BigInt;
use num_rational::BigRational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn test_groups() -> Vec<(&'static str, PermutationGroup)> {
    vec![
        ("order 6", builtin::s3_group()),
        ("cyclic 8", builtin::cyclic_group(8)),
        ("affine 32", builtin::affine_group()),
    ]
}

#[test]
fn bareiss_and_interpolation_on_known_values() {
    let m = |rows: &[&[i64]]| rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    assert_eq!(oracle::bareiss_det(m(&[&[2, 1], &[1, 3]])), BigInt::from(5));
    assert_eq!(oracle::bareiss_det(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
    assert_eq!(oracle::bareiss_det(m(&[&[1, 2, 3], &[4, 5, 6], &[7, 8, 10]])), BigInt::from(-3));
    // 1 - 3t + t^2 through t = 0, 1, 2
    let ys: Vec<BigInt> = [1, -1, -1].iter().map(|&y| BigInt::from(y)).collect();
    let r = |x: i64| BigRational::from_integer(x.into());
    assert_eq!(oracle::interpolate(&[0, 1, 2], &ys), vec![r(1), r(-3), r(1)]);
}

#[test]
fn newton_factors_equal_matrix_characteristic_polynomials() {
    for (name, g) in test_groups() {
        let subgroups = g.subgroups_up_to(DEFAULT_SUBGROUP_CAP).unwrap();
        let checked = oracle::newton_matches_matrix_oracles(&g, &subgroups);
        let per_class = subgroups.len() + g.classes().len();
        assert_eq!(checked, per_class * g.classes().len(), "{name}");
    }
}

#[test]
fn character_tables_are_orthogonal() {
    for (name, g) in test_groups() {
        assert!(oracle::orthogonality_holds(&g), "{name}");
    }
}

#[test]
fn frobenius_reciprocity_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let groups = test_groups();
    let lattices: Vec<_> = groups.iter().map(|(_, g)| g.subgroups_up_to(DEFAULT_SUBGROUP_CAP).unwrap()).collect();
    for _ in 0..20 {
        let k = rng.gen_range(0..groups.len());
        let g = &groups[k].1;
        let h = lattices[k].choose(&mut rng).unwrap();
        let h_classes = g.embed(h).group.classes().len();
        let psi = rng.gen_range(0..h_classes);
        let chi = rng.gen_range(0..g.classes().len());
        assert!(oracle::frobenius_reciprocity(g, h, psi, chi), "{} H of order {}", groups[k].0, h.order());
    }
}

#[test]
fn gassmann_agrees_with_permutation_characters_on_every_pair() {
    for (name, g) in test_groups() {
        let subgroups = g.subgroups_up_to(DEFAULT_SUBGROUP_CAP).unwrap();
        let counted: Vec<Vec<usize>> = subgroups.iter().map(|h| oracle::counted_permutation_character(&g, h)).collect();
        for (h, c) in subgroups.iter().zip(&counted) {
            let lib = ClassFunction::permutation_character(&g, h);
            let lib: Vec<usize> = lib.values().iter().map(|v| v.as_integer().unwrap().try_into().unwrap()).collect();
            assert_eq!(&lib, c, "{name}");
        }
        for i in 0..subgroups.len() {
            for j in i..subgroups.len() {
                let (eq, _) = gassmann_equivalent(&g, &subgroups[i], &subgroups[j]);
                assert_eq!(eq, counted[i] == counted[j], "{name}: pair ({i}, {j})");
            }
        }
    }
}

#[test]
fn power_classes_do_not_depend_on_the_representative() {
    for (name, g) in test_groups() {
        for (c, class) in g.classes().iter().enumerate() {
            for k in 0..=g.exponent() as u64 {
                let expected = g.power_class(c, k);
                for &x in &class.members {
                    assert_eq!(g.class_of(g.pow(x, k)), expected, "{name} class {c} power {k}");
                }
            }
        }
    }
}

#[test]
fn irreducible_degrees_square_sum_to_the_order() {
    for (name, g) in test_groups() {
        let table = character_table(&g).unwrap();
        let sum: u64 = table.irreducibles().iter().map(|c| c.degree().unwrap().pow(2)).sum();
        assert_eq!(sum, g.order() as u64, "{name}");
    }
}
