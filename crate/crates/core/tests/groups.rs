use std::sync::Arc;

use wfk_core::exact::rat;
use wfk_core::groups::{
    binary_dihedral, binary_icosahedral, binary_octahedral, binary_tetrahedral, convolution,
    cyclic, direct_product, inner_product, symmetric,
};
use wfk_core::{ClassFunction, CycNum, FiniteGroup, Group};

fn builtins() -> Vec<(&'static str, FiniteGroup)> {
    vec![
        ("Z1", cyclic(1).unwrap()),
        ("Z2", cyclic(2).unwrap()),
        ("Z3", cyclic(3).unwrap()),
        ("Z6", cyclic(6).unwrap()),
        ("BD8", binary_dihedral(2).unwrap()),
        ("BD12", binary_dihedral(3).unwrap()),
        ("BD20", binary_dihedral(5).unwrap()),
        ("BT", binary_tetrahedral().unwrap()),
        ("BO", binary_octahedral().unwrap()),
        ("BI", binary_icosahedral().unwrap()),
        ("S3", symmetric(3).unwrap()),
        ("S4", symmetric(4).unwrap()),
        ("Z2xS3", direct_product(&cyclic(2).unwrap(), &symmetric(3).unwrap()).unwrap()),
    ]
}

#[test]
fn orthogonality_relations() {
    for (name, g) in builtins() {
        let g = Group::new(g);
        let t = g.character_table().unwrap();
        let cls = g.classes();
        assert_eq!(t.len(), cls.len(), "{}", name);
        let sumsq: u64 = t.degrees.iter().map(|d| d * d).sum();
        assert_eq!(sumsq as usize, g.order(), "{}", name);
        assert_eq!(cls.class_sizes.iter().sum::<usize>(), g.order());
        let irr = ClassFunction::irreducibles(&g).unwrap();
        for (i, a) in irr.iter().enumerate() {
            assert_eq!(a.value(0), &CycNum::from_int(t.degrees[i] as i64));
            for (j, b) in irr.iter().enumerate() {
                let want = if i == j { 1 } else { 0 };
                assert_eq!(inner_product(a, b).unwrap(), CycNum::from_int(want), "{} {} {}", name, i, j);
            }
        }
        // columns: Σ_γ γ(c) γ(c'⁻¹) = δ ζ_c
        for c in 0..cls.len() {
            for c2 in 0..cls.len() {
                let s: CycNum = irr
                    .iter()
                    .map(|chi| chi.value(c) * chi.value(cls.inverse_class[c2]))
                    .sum();
                let want = if c == c2 { cls.centralizer_orders[c] as i64 } else { 0 };
                assert_eq!(s, CycNum::from_int(want), "{} column {} {}", name, c, c2);
            }
        }
    }
}

#[test]
fn idempotents_and_commutativity() {
    for (name, g) in builtins() {
        let g: Arc<Group> = Group::new(g);
        let t = g.character_table().unwrap();
        for (i, chi) in ClassFunction::irreducibles(&g).unwrap().iter().enumerate() {
            let lhs = convolution(chi, chi).unwrap();
            let rhs = chi.scale_rational(&(rat(g.order() as i64) / rat(t.degrees[i] as i64)));
            assert_eq!(lhs, rhs, "{} irreducible {}", name, i);
        }
        if g.order() > 48 {
            continue;
        }
        let r = g.num_classes();
        for a in 0..r {
            for b in 0..r {
                let ka = ClassFunction::class_sum(&g, a);
                let kb = ClassFunction::class_sum(&g, b);
                assert_eq!(convolution(&ka, &kb).unwrap(), convolution(&kb, &ka).unwrap());
                for c in 0..r {
                    let kc = ClassFunction::class_sum(&g, c);
                    let l = convolution(&convolution(&ka, &kb).unwrap(), &kc).unwrap();
                    let rr = convolution(&ka, &convolution(&kb, &kc).unwrap()).unwrap();
                    assert_eq!(l, rr, "{} associativity", name);
                }
            }
        }
    }
}

#[test]
fn regular_character_and_natural_rep() {
    for (name, g) in builtins() {
        let g = Group::new(g);
        let reg = ClassFunction::regular(&g);
        let one = ClassFunction::irreducible(&g, 0).unwrap();
        assert_eq!(inner_product(&reg, &one).unwrap(), CycNum::one(), "{}", name);
        if let Ok(q) = ClassFunction::natural(&g) {
            let mults = q.decompose().unwrap();
            let total: CycNum = mults.iter().sum();
            assert!(total == CycNum::one() || total == CycNum::from_int(2), "{}", name);
        }
    }
}
