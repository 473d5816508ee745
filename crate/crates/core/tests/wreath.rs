use num_bigint::BigInt;
use proptest::prelude::*;
use wfk_core::exact::{rat, Rational};
use wfk_core::groups::{cyclic, inner_product, trivial, Mat2};
use wfk_core::wreath::{
    build_wreath, epsilon_n, eta_n, sigma_n, weighted_form, wreath_inner_product, WreathClassFunction,
    WreathElement, WreathFamily,
};
use wfk_core::{Budget, ClassFunction, CycNum, Group};

fn family(g: wfk_core::FiniteGroup) -> WreathFamily {
    WreathFamily::new(&Group::new(g), Budget::default())
}

#[test]
fn classes_match_types() {
    for k in [2, 3] {
        let base = Group::new(cyclic(k).unwrap());
        for n in 0..=3 {
            let w = build_wreath(&base, n, Budget::default()).unwrap();
            let lvl = w.level();
            assert_eq!(w.group().num_classes(), lvl.len());
            let order = w.group().order();
            for c in 0..w.group().num_classes() {
                let t = w.class_type(c);
                let size = Rational::from_integer(BigInt::from(w.group().classes().class_sizes[c]));
                assert_eq!(size, Rational::from_integer(BigInt::from(order)) / lvl.z(t));
            }
        }
    }
}

#[test]
fn induction_of_trivials_in_s2() {
    let fam = family(trivial());
    let one = WreathClassFunction::trivial(&fam.level(1));
    let ind = fam.induce(&one, &one).unwrap();
    // regular character of S_2: 2 on the identity, 0 on the transposition
    let lvl = fam.level(2);
    for (t, v) in ind.iter() {
        let want = if t.num_cycles() == 2 { 2 } else { 0 };
        assert_eq!(v, &CycNum::from_int(want), "{}", t);
    }
    assert_eq!(ind.values().len(), lvl.len());
    let vac = fam.vacuum();
    let f = WreathClassFunction::indicator(&fam.level(2), 1);
    assert_eq!(fam.induce(&f, &vac).unwrap(), f);
}

#[test]
fn heisenberg_relations_z2() {
    let fam = family(cyclic(2).unwrap());
    let irr = ClassFunction::irreducibles(fam.base()).unwrap();
    for m in 0..=2 {
        let lvl = fam.level(m);
        for b in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, b);
            for k in -3i64..=3 {
                for l in -3i64..=3 {
                    if k == 0 || l == 0 {
                        continue;
                    }
                    for g1 in &irr {
                        for g2 in &irr {
                            let lhs = fam.bracket(k, g1, l, g2, &f).unwrap();
                            let want = if k + l == 0 {
                                f.scale(&(inner_product(g1, g2).unwrap() * CycNum::from_int(-k)))
                            } else {
                                WreathClassFunction::zero(&fam.level(lhs.n()))
                            };
                            assert_eq!(lhs, want, "k={} l={} m={} basis {}", k, l, m, b);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn annihilation_paths_agree() {
    for g in [cyclic(2).unwrap(), cyclic(3).unwrap()] {
        let fam = family(g);
        let irr = ClassFunction::irreducibles(fam.base()).unwrap();
        for m in 1..=3 {
            let lvl = fam.level(m);
            for b in 0..lvl.len() {
                let f = WreathClassFunction::indicator(&lvl, b);
                for k in 1..=m {
                    for gamma in &irr {
                        let a = fam.heisenberg_p(-(k as i64), gamma, &f).unwrap();
                        let b2 = fam.annihilation_by_adjoint(k, gamma, &f).unwrap();
                        assert_eq!(a, b2);
                    }
                }
            }
        }
    }
}

#[test]
fn creation_spans() {
    let fam = family(cyclic(2).unwrap());
    let irr = ClassFunction::irreducibles(fam.base()).unwrap();
    for n in 1..=3usize {
        // all p_{λ1}(γ1) ⋯ p_{λk}(γk)|0⟩ with Σλ = n
        let mut vecs: Vec<WreathClassFunction> = Vec::new();
        fn go(fam: &WreathFamily, irr: &[ClassFunction], left: usize, max: usize, cur: WreathClassFunction, out: &mut Vec<WreathClassFunction>) {
            if left == 0 {
                out.push(cur);
                return;
            }
            for r in 1..=left.min(max) {
                for g in irr {
                    let next = fam.heisenberg_p(r as i64, g, &cur).unwrap();
                    go(fam, irr, left - r, r, next, out);
                }
            }
        }
        go(&fam, &irr, n, n, fam.vacuum(), &mut vecs);
        let rank = rank_of(&vecs);
        assert_eq!(rank, fam.level(n).len(), "level {}", n);
    }
}

fn rank_of(vs: &[WreathClassFunction]) -> usize {
    // Gaussian elimination over the rationals (all values are rational here)
    let mut rows: Vec<Vec<Rational>> = vs
        .iter()
        .map(|v| v.values().iter().map(|x| x.to_rational().unwrap()).collect())
        .collect();
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != rat(0)) else { continue };
        rows.swap(r, p);
        for i in 0..rows.len() {
            if i != r && rows[i][c] != rat(0) {
                let f = &rows[i][c] / &rows[r][c];
                let pivot = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

#[test]
fn eta_eps_are_characters() {
    let fam = family(cyclic(2).unwrap());
    let irr = ClassFunction::irreducibles(fam.base()).unwrap();
    for n in 1..=3 {
        let w = fam.group(n).unwrap();
        let irr_n = ClassFunction::irreducibles(w.group()).unwrap();
        for gamma in &irr {
            for f in [eta_n(&fam.level(n), gamma).unwrap(), epsilon_n(&fam.level(n), gamma).unwrap()] {
                let cf = f.to_class_function(&w).unwrap();
                for chi in &irr_n {
                    let m = inner_product(&cf, chi).unwrap().to_integer().expect("integral");
                    assert!(m >= 0);
                }
            }
        }
    }
    let triv = family(trivial());
    let one = ClassFunction::irreducible(triv.base(), 0).unwrap();
    let eps = epsilon_n(&triv.level(4), &one).unwrap();
    for (t, v) in eps.iter() {
        let sign = t.get(0).unwrap().sign();
        assert_eq!(v, &CycNum::from_int(sign));
    }
}

/// Trace of (g,s) on V^{⊗n}: Σ_j ∏_i ρ(g_i)[j_i][j_{s⁻¹(i)}].
fn tensor_trace(mats: &[Mat2], e: &WreathElement) -> CycNum {
    let n = e.n();
    let mut sinv = vec![0; n];
    for (i, &x) in e.s.iter().enumerate() {
        sinv[x] = i;
    }
    let mut total = CycNum::zero();
    for mask in 0..(1usize << n) {
        let j = |i: usize| (mask >> i) & 1;
        let mut prod = CycNum::one();
        for i in 0..n {
            prod *= &mats[e.g[i]][j(i)][j(sinv[i])];
        }
        total += prod;
    }
    total
}

#[test]
fn eta_matches_tensor_power() {
    for k in [2, 4] {
        let fam = family(cyclic(k).unwrap());
        let q = ClassFunction::natural(fam.base()).unwrap();
        let mats = fam.base().table().matrices().unwrap().to_vec();
        for n in 1..=3 {
            let eta = eta_n(&fam.level(n), &q).unwrap();
            let w = fam.group(n).unwrap();
            for c in 0..w.group().num_classes() {
                let rep = w.law().decode(w.group().classes().class_reps[c]);
                assert_eq!(&tensor_trace(&mats, &rep), eta.value(w.class_type(c)));
            }
        }
    }
}

#[test]
fn sigma_and_weighted_form() {
    let fam = family(cyclic(2).unwrap());
    let one = ClassFunction::irreducible(fam.base(), 0).unwrap();
    let s = sigma_n(&fam.level(2), &one).unwrap();
    for (t, v) in s.iter() {
        let want = if t.num_cycles() == 1 { 2 } else { 0 };
        assert_eq!(v, &CycNum::from_int(want));
    }
    let q = ClassFunction::natural(fam.base()).unwrap();
    let xi = one.scale_rational(&rat(2)).sub(&q).unwrap();
    let lvl1 = fam.level(1);
    let g0 = WreathClassFunction::trivial(&lvl1);
    assert_eq!(weighted_form(&g0, &g0, &xi).unwrap(), CycNum::from_int(2));
    for n in 1..=3 {
        let lvl = fam.level(n);
        for a in 0..lvl.len() {
            for b in 0..lvl.len() {
                let f = WreathClassFunction::indicator(&lvl, a);
                let g = WreathClassFunction::indicator(&lvl, b);
                assert_eq!(weighted_form(&f, &g, &xi).unwrap(), weighted_form(&g, &f, &xi).unwrap());
                assert_eq!(weighted_form(&f, &g, &one).unwrap(), wreath_inner_product(&f, &g).unwrap());
            }
        }
    }
}

fn arb_values(len: usize) -> impl Strategy<Value = Vec<i64>> {
    proptest::collection::vec(-3i64..=3, len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn type_is_conjugation_invariant(a in 0usize..384, b in 0usize..384) {
        let base = Group::new(cyclic(2).unwrap());
        let w = build_wreath(&base, 4, Budget::default()).unwrap();
        let law = w.law();
        let t = base.table();
        let x = law.decode(a);
        let y = law.decode(b);
        let conj = y.mul(&x, t).mul(&y.inv(t), t);
        prop_assert_eq!(x.type_of(&base), conj.type_of(&base));
    }

    #[test]
    fn frobenius_reciprocity(fv in arb_values(9), gv in arb_values(3), hv in arb_values(22)) {
        // ⟨Ind(f ⊠ g), h⟩ = ⟨f ⊠ g, Res h⟩ with f on Γ_2, g on Γ_1, Γ = ℤ/3
        let fam = family(cyclic(3).unwrap());
        let mk = |n: usize, v: &[i64]| WreathClassFunction::new(&fam.level(n), v.iter().map(|&x| CycNum::from_int(x)).collect()).unwrap();
        let (f, g, h) = (mk(2, &fv), mk(1, &gv), mk(3, &hv));
        let lhs = wreath_inner_product(&fam.induce(&f, &g).unwrap(), &h).unwrap();
        let rhs = wreath_inner_product(&g, &fam.restrict_pair(&f, &h).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn sigma_is_linear(a in arb_values(2), b in arb_values(2)) {
        let fam = family(cyclic(2).unwrap());
        let g = fam.base();
        let ga = ClassFunction::new(g, a.iter().map(|&x| CycNum::from_int(x)).collect()).unwrap();
        let gb = ClassFunction::new(g, b.iter().map(|&x| CycNum::from_int(x)).collect()).unwrap();
        let lvl = fam.level(3);
        let lhs = sigma_n(&lvl, &ga.add(&gb).unwrap()).unwrap();
        let rhs = sigma_n(&lvl, &ga).unwrap().add(&sigma_n(&lvl, &gb).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
