use std::time::Instant;

use proptest::prelude::*;
use wfk_core::exact::linalg::det;
use wfk_core::groups::*;
use wfk_core::mckay::*;
use wfk_core::wreath::{WreathElement, WreathLaw};
use wfk_core::{Budget, CycNum, Group};

fn check_shape(d: &McKayData) {
    let r = d.cartan.len();
    for i in 0..r {
        assert_eq!(d.cartan[i][i], 2);
        for j in 0..r {
            assert_eq!(d.cartan[i][j], d.cartan[j][i]);
            assert_eq!(d.cartan[i][j], if i == j { 2 } else { 0 } - d.adjacency[i][j]);
            if i != j {
                assert!([0, -1, -2].contains(&d.cartan[i][j]));
            }
        }
    }
    assert!(d.null_check().iter().all(|&x| x == 0));
    assert_eq!(d.corank(), 1);
}

#[test]
fn cyclic_groups_are_type_a() {
    for k in 2..=6u32 {
        let d = mckay_data(&Group::new(cyclic(k).unwrap())).unwrap();
        check_shape(&d);
        assert_eq!(classify_affine_ade(&d.cartan).unwrap(), AffineType::A(k as usize - 1));
    }
}

#[test]
fn binary_dihedral_groups_are_type_d() {
    for m in 2..=5u32 {
        let d = mckay_data(&Group::new(binary_dihedral(m).unwrap())).unwrap();
        check_shape(&d);
        assert_eq!(classify_affine_ade(&d.cartan).unwrap(), AffineType::D(m as usize + 2));
    }
}

#[test]
fn exceptional_groups() {
    let t = Instant::now();
    for (g, want, r) in [
        (binary_tetrahedral().unwrap(), AffineType::E6, 7),
        (binary_octahedral().unwrap(), AffineType::E7, 8),
        (binary_icosahedral().unwrap(), AffineType::E8, 9),
    ] {
        let d = mckay_data(&Group::new(g)).unwrap();
        check_shape(&d);
        assert_eq!(d.cartan.len(), r);
        assert_eq!(classify_affine_ade(&d.cartan).unwrap(), want);
    }
    assert!(t.elapsed().as_secs() < 300);
}

#[test]
fn koszul_thom() {
    for k in [2, 3] {
        let g = Group::new(cyclic(k).unwrap());
        for n in 0..=3 {
            let r = koszul_thom_check(&g, n, Budget::default()).unwrap();
            assert!(r.pass, "{:?}", r.failures().next());
        }
    }
    let r = koszul_thom_check(&Group::new(binary_dihedral(2).unwrap()), 2, Budget::default()).unwrap();
    assert!(r.pass);
}

#[test]
fn koszul_thom_small_values() {
    // ξ(e) = 0 and ξ(τ) = 4 for Z/2 at n = 1
    let g = Group::new(cyclic(2).unwrap());
    let r = koszul_thom_check(&g, 1, Budget::default()).unwrap();
    let vals: Vec<&str> = r.probes.iter().map(|p| p.lhs.as_str()).collect();
    assert_eq!(vals, vec!["0", "4"]);
}

#[test]
fn missing_matrix_model() {
    let g = Group::new(symmetric(3).unwrap());
    assert!(matches!(mckay_data(&g), Err(wfk_core::Error::MissingMatrixModel)));
}

#[test]
fn weighted_gram() {
    let g = Group::new(cyclic(3).unwrap());
    let d = mckay_data(&g).unwrap();
    let gram = weighted_gram_wreath(&g, 1, Budget::default()).unwrap();
    // same multiset of rows up to reordering: compare sorted diagonals and total sums
    let diag: Vec<CycNum> = (0..3).map(|i| gram[i][i].clone()).collect();
    assert!(diag.iter().all(|x| *x == CycNum::from_int(2)));
    let total: i64 = d.cartan.iter().flatten().sum();
    let gram_total = gram.iter().flatten().fold(CycNum::zero(), |a, x| &a + x);
    assert_eq!(gram_total, CycNum::from_int(total));

    let g2 = Group::new(cyclic(2).unwrap());
    let gram = weighted_gram_wreath(&g2, 2, Budget::default()).unwrap();
    for i in 0..gram.len() {
        for j in 0..gram.len() {
            assert_eq!(gram[i][j], gram[j][i]);
            assert!(gram[i][j].to_integer().is_some());
        }
    }
    let triv = Group::new(trivial());
    let gram = weighted_gram_wreath(&triv, 3, Budget::default());
    assert!(matches!(gram, Err(wfk_core::Error::MissingMatrixModel)));
}

#[test]
fn quiver_dimension_null_vectors() {
    for g in [cyclic(3).unwrap(), binary_dihedral(3).unwrap(), binary_tetrahedral().unwrap()] {
        let d = mckay_data(&Group::new(g)).unwrap();
        let q = quiver_dimension(&d, 2);
        assert!(q.cv.iter().all(|&x| x == 0));
        assert_eq!(q.dim, 4);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]
    #[test]
    fn block_determinant_is_conjugation_invariant(x in 0usize..48, y in 0usize..48) {
        let g = Group::new(cyclic(2).unwrap());
        let mats = g.table().matrices().unwrap();
        let law = WreathLaw::new(&g, 3, Budget::default()).unwrap();
        let t = g.table();
        let (a, b) = (law.decode(x), law.decode(y));
        let conj: WreathElement = b.mul(&a, t).mul(&b.inv(t), t);
        let d = |e: &WreathElement| {
            let m = block_matrix(mats, e);
            let im: Vec<Vec<CycNum>> = (0..6).map(|i| (0..6).map(|j| {
                let id = if i == j { CycNum::one() } else { CycNum::zero() };
                &id - &m[i][j]
            }).collect()).collect();
            det(&im)
        };
        prop_assert_eq!(d(&a), d(&conj));
    }
}
