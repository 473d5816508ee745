use std::collections::BTreeMap;
use std::sync::Arc;

use super::CharMap;
use crate::error::{Budget, Error, Result};
use crate::exact::{rat, CycNum};
use crate::fock::{affine_boundary, FockOperator, ModeOp};
use crate::groups::{convolution, Group};
use crate::report::VerificationReport;
use crate::wreath::{Partition, TypeFunction, WreathClassFunction, WreathFamily, WreathLevel};

/// Sign `s` with `ch(K_{(2,1^{n−2})} ∪ f) = s · 𝔡 ch(f)`, fixed by the n = 2 case.
pub const LEHN_SORGER_SIGN: i64 = -1;

/// Index of the type `K_i(c, n)`: one (i+1)-cycle with cycle-product in c,
/// all other points fixed. `None` when n < i + 1.
pub fn class_k(level: &WreathLevel, i: usize, c: usize) -> Option<usize> {
    let n = level.n();
    if n < i + 1 {
        return None;
    }
    let mut t = TypeFunction::cycle(c, i + 1);
    if n > i + 1 {
        let mut m = BTreeMap::new();
        m.insert(0, Partition::new(vec![1; n - i - 1]));
        t = t.union(&TypeFunction::from_map(m));
    }
    level.index_of(&t)
}

/// Convolution of two class functions on the explicit group Γ_n.
pub fn wreath_convolution(family: &WreathFamily, f: &WreathClassFunction, g: &WreathClassFunction) -> Result<WreathClassFunction> {
    if f.n() != g.n() {
        return Err(Error::InvalidInput("convolution of class functions at different levels".into()));
    }
    let w = family.group(f.n())?;
    let h = convolution(&f.to_class_function(&w)?, &g.to_class_function(&w)?)?;
    WreathClassFunction::from_class_function(f.level(), &w, &h)
}

/// `Δ_i(K_c) f = K_i(c, n) * f`
pub fn delta(family: &WreathFamily, i: usize, c: usize, f: &WreathClassFunction) -> Result<WreathClassFunction> {
    let lvl = f.level();
    match class_k(lvl, i, c) {
        None => Ok(WreathClassFunction::zero(lvl)),
        Some(k) => wreath_convolution(family, &WreathClassFunction::indicator(lvl, k), f),
    }
}

/// `½ Σ_{n,m>0} (p_n p_m p_{−n−m} + p_{n+m} p_{−n} p_{−m})` on the
/// single-colour space, with `p_{−n} = n ∂/∂p_n`; exact below `cutoff`.
pub fn cubic_formula(cutoff: usize) -> FockOperator {
    let mut terms = Vec::new();
    let half = rat(1) / rat(2);
    for n in 1..cutoff as u32 {
        for m in 1..=(cutoff as u32 - n) {
            let s = (n + m) as i64;
            terms.push((
                CycNum::from_rational(&half * rat(s)),
                vec![ModeOp::Mode(n as i64, 0), ModeOp::Mode(m as i64, 0), ModeOp::Partial(n + m, 0)],
            ));
            terms.push((
                CycNum::from_rational(&half * rat(n as i64 * m as i64)),
                vec![ModeOp::Mode(s, 0), ModeOp::Partial(n, 0), ModeOp::Partial(m, 0)],
            ));
        }
    }
    FockOperator::from_terms(terms, false, 0, Some(cutoff))
}

/// `ch(Δ_1 f) = cubic_formula(ch f)` for every class of S_n, n ≤ n_max.
pub fn verify_cubic(n_max: usize, budget: Budget) -> Result<VerificationReport> {
    let cm = CharMap::new(&Group::new(crate::groups::trivial()), budget);
    let op = cubic_formula(n_max);
    let mut report = VerificationReport::new("conv-cubic");
    for n in 0..=n_max {
        let lvl = cm.family().level(n);
        for a in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, a);
            let lhs = cm.ch(&delta(cm.family(), 1, 0, &f)?)?;
            let rhs = op.apply(cm.space(), &cm.ch(&f)?)?;
            report.check(format!("Δ_1 1_{} in S_{n}", lvl.types()[a]), &lhs, &rhs);
        }
    }
    Ok(report)
}

fn require_symmetric(level: &WreathLevel) -> Result<()> {
    if level.base().order() != 1 {
        return Err(Error::InvalidInput(
            "the filtration degree is only defined for symmetric groups".into(),
        ));
    }
    Ok(())
}

/// `n − ℓ(λ)` for the type at index `i`.
pub(crate) fn degree(level: &WreathLevel, i: usize) -> usize {
    level.n() - level.types()[i].num_cycles()
}

/// `f ∪ g`: convolution of class indicators, keeping only the part of
/// filtration degree `deg f + deg g`, extended bilinearly.
pub fn filtered_convolution(family: &WreathFamily, f: &WreathClassFunction, g: &WreathClassFunction) -> Result<WreathClassFunction> {
    let lvl = f.level().clone();
    require_symmetric(&lvl)?;
    if f.n() != g.n() {
        return Err(Error::InvalidInput("filtered product of class functions at different levels".into()));
    }
    let mut acc = WreathClassFunction::zero(&lvl);
    for (a, fa) in f.values().iter().enumerate() {
        if fa.is_zero() {
            continue;
        }
        for (b, gb) in g.values().iter().enumerate() {
            if gb.is_zero() {
                continue;
            }
            let full = wreath_convolution(
                family,
                &WreathClassFunction::indicator(&lvl, a),
                &WreathClassFunction::indicator(&lvl, b),
            )?;
            let top = degree(&lvl, a) + degree(&lvl, b);
            let proj = WreathClassFunction::from_fn(&lvl, |i, _| {
                if degree(&lvl, i) == top {
                    full.value(i).clone()
                } else {
                    CycNum::zero()
                }
            });
            acc = acc.add(&proj.scale(&(fa * gb)))?;
        }
    }
    Ok(acc)
}

fn transposition_product(family: &WreathFamily, lvl: &Arc<WreathLevel>, f: &WreathClassFunction) -> Result<WreathClassFunction> {
    match class_k(lvl, 1, 0) {
        None => Ok(WreathClassFunction::zero(lvl)),
        Some(k) => filtered_convolution(family, &WreathClassFunction::indicator(lvl, k), f),
    }
}

/// Transposition-class ∪ transported by ch against `LEHN_SORGER_SIGN · 𝔡`
/// for every class of S_n, n ≤ n_max; plus graded commutativity and
/// associativity of ∪ on S_{assoc_n}.
pub fn lehn_sorger_check(n_max: usize, assoc_n: usize, budget: Budget) -> Result<VerificationReport> {
    let cm = CharMap::new(&Group::new(crate::groups::trivial()), budget);
    let fam = cm.family();
    let d = affine_boundary(0, n_max.max(2));
    let mut report = VerificationReport::new("lehn-sorger");

    // the sign is read off at n = 2 and must agree with the recorded constant
    let l2 = fam.level(2);
    let id2 = WreathClassFunction::indicator(&l2, class_k(&l2, 0, 0).expect("identity class"));
    let lhs = cm.ch(&transposition_product(fam, &l2, &id2)?)?;
    let rhs = d.apply(cm.space(), &cm.ch(&id2)?)?;
    let fitted = if lhs == rhs {
        1
    } else if lhs == rhs.scale(&CycNum::from_int(-1)) {
        -1
    } else {
        0
    };
    report.check("global sign fixed at n = 2", &fitted, &LEHN_SORGER_SIGN);

    let sign = CycNum::from_int(LEHN_SORGER_SIGN);
    for n in 0..=n_max {
        let lvl = fam.level(n);
        for a in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, a);
            let lhs = cm.ch(&transposition_product(fam, &lvl, &f)?)?;
            let rhs = d.apply(cm.space(), &cm.ch(&f)?)?.scale(&sign);
            report.check(format!("K_(2) ∪ 1_{} in S_{n}", lvl.types()[a]), &lhs, &rhs);
        }
    }

    let lvl = fam.level(assoc_n);
    let ind = |i| WreathClassFunction::indicator(&lvl, i);
    let r = lvl.len();
    for a in 0..r {
        for b in 0..r {
            let ab = filtered_convolution(fam, &ind(a), &ind(b))?;
            let ba = filtered_convolution(fam, &ind(b), &ind(a))?;
            report.check(format!("1_{} ∪ 1_{} commutes", lvl.types()[a], lvl.types()[b]), &ab, &ba);
            for c in 0..r {
                let left = filtered_convolution(fam, &ab, &ind(c))?;
                let right = filtered_convolution(fam, &ind(a), &filtered_convolution(fam, &ind(b), &ind(c))?)?;
                report.check(
                    format!("(1_{} ∪ 1_{}) ∪ 1_{} associates", lvl.types()[a], lvl.types()[b], lvl.types()[c]),
                    &left,
                    &right,
                );
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::FockVector;

    fn s_n(n: usize) -> (WreathFamily, Arc<WreathLevel>) {
        let fam = WreathFamily::new(&Group::new(crate::groups::trivial()), Budget::default());
        let lvl = fam.level(n);
        (fam, lvl)
    }

    fn type_index(lvl: &WreathLevel, parts: Vec<usize>) -> usize {
        let mut m = BTreeMap::new();
        m.insert(0, Partition::new(parts));
        lvl.index_of(&TypeFunction::from_map(m)).unwrap()
    }

    #[test]
    fn delta_on_s2() {
        let (fam, lvl) = s_n(2);
        let t = WreathClassFunction::indicator(&lvl, type_index(&lvl, vec![2]));
        let e = WreathClassFunction::indicator(&lvl, type_index(&lvl, vec![1, 1]));
        assert_eq!(delta(&fam, 1, 0, &t).unwrap(), e);
        // Δ_0 at the identity class is multiplication by the class size 1
        assert_eq!(delta(&fam, 0, 0, &t).unwrap(), t);
        let (fam1, l1) = s_n(1);
        let f = WreathClassFunction::trivial(&l1);
        assert!(delta(&fam1, 1, 0, &f).unwrap().is_zero());
    }

    #[test]
    fn filtered_square_of_transpositions_in_s3() {
        let (fam, lvl) = s_n(3);
        let k = WreathClassFunction::indicator(&lvl, type_index(&lvl, vec![2, 1]));
        let want = WreathClassFunction::indicator(&lvl, type_index(&lvl, vec![3])).scale(&CycNum::from_int(3));
        assert_eq!(filtered_convolution(&fam, &k, &k).unwrap(), want);
        let unit = WreathClassFunction::indicator(&lvl, type_index(&lvl, vec![1, 1, 1]));
        assert_eq!(filtered_convolution(&fam, &k, &unit).unwrap(), k);
    }

    #[test]
    fn cubic_examples() {
        let cm = CharMap::new(&Group::new(crate::groups::trivial()), Budget::default());
        let sp = cm.space();
        let op = cubic_formula(4);
        assert!(op.apply(sp, &FockVector::vacuum()).unwrap().is_zero());
        let p1 = FockVector::monomial(crate::fock::Monomial::from_generators(sp, &[(1, 0)]).unwrap().1);
        assert!(op.apply(sp, &p1).unwrap().is_zero());
        let p2 = FockVector::monomial(crate::fock::Monomial::from_generators(sp, &[(2, 0)]).unwrap().1);
        let p11 = FockVector::monomial(crate::fock::Monomial::from_generators(sp, &[(1, 0), (1, 0)]).unwrap().1);
        let half = rat(1) / rat(2);
        assert_eq!(op.apply(sp, &p2.scale_rational(&half)).unwrap(), p11.scale_rational(&half));
    }

    #[test]
    fn non_symmetric_base_is_refused() {
        let fam = WreathFamily::new(&Group::new(crate::groups::cyclic(2).unwrap()), Budget::default());
        let lvl = fam.level(2);
        let f = WreathClassFunction::trivial(&lvl);
        assert!(filtered_convolution(&fam, &f, &f).is_err());
    }
}
