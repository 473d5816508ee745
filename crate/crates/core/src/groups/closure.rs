use std::collections::HashMap;

use super::table::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact::{lcm, CycNum, Rational};

/// A 2×2 matrix over a cyclotomic field, row-major.
pub type Mat2 = [[CycNum; 2]; 2];

pub const DEFAULT_CLOSURE_BOUND: usize = 1000;

pub fn mat_mul(a: &Mat2, b: &Mat2) -> Mat2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

pub fn det2(a: &Mat2) -> CycNum {
    &a[0][0] * &a[1][1] - &a[0][1] * &a[1][0]
}

fn identity_mat(n: u32) -> Mat2 {
    let one = CycNum::one().embed(n);
    let zero = CycNum::zero().embed(n);
    [[one.clone(), zero.clone()], [zero, one]]
}

fn key(m: &Mat2) -> Vec<Rational> {
    m.iter()
        .flat_map(|r| r.iter())
        .flat_map(|x| x.coeffs().iter().cloned())
        .collect()
}

/// Closes a set of invertible 2×2 matrices under multiplication.
///
/// Elements are numbered in breadth-first order starting from the identity,
/// so element 0 is always the identity. Fails once more than `bound`
/// elements have been produced.
pub fn build_from_generators(gens: &[Mat2], bound: usize) -> Result<FiniteGroup> {
    let n = gens
        .iter()
        .flat_map(|m| m.iter().flat_map(|r| r.iter()))
        .fold(1u64, |acc, x| lcm(acc, x.conductor() as u64)) as u32;
    let gens: Vec<Mat2> = gens
        .iter()
        .map(|m| {
            if det2(m).is_zero() {
                return Err(Error::NonInvertibleMatrix);
            }
            Ok([
                [m[0][0].embed(n), m[0][1].embed(n)],
                [m[1][0].embed(n), m[1][1].embed(n)],
            ])
        })
        .collect::<Result<_>>()?;

    let mut elems = vec![identity_mat(n)];
    let mut index: HashMap<Vec<Rational>, usize> = HashMap::new();
    index.insert(key(&elems[0]), 0);
    // parent[i] = (j, g) with elems[i] = elems[j] * gens[g]
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elems.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let p = mat_mul(&elems[i], g);
            let k = key(&p);
            let idx = match index.get(&k) {
                Some(&j) => j,
                None => {
                    if elems.len() >= bound {
                        return Err(Error::ClosureBoundExceeded(bound));
                    }
                    let j = elems.len();
                    index.insert(k, j);
                    elems.push(p);
                    parent.push(Some((i, gi)));
                    j
                }
            };
            row.push(idx);
        }
        right.push(row);
        i += 1;
    }

    let order = elems.len();
    let mut flat = vec![0u32; order * order];
    for a in 0..order {
        flat[a * order] = a as u32;
    }
    // column b from its BFS parent: a * (b' g) = (a b') g
    for b in 1..order {
        let (bp, g) = parent[b].expect("non-identity has a parent");
        for a in 0..order {
            let ab = flat[a * order + bp] as usize;
            flat[a * order + b] = right[ab][g] as u32;
        }
    }
    FiniteGroup::from_flat(order, flat, None, Some(elems), false)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycNum {
        CycNum::zeta(n, k)
    }

    #[test]
    fn cyclic_closure() {
        let g = [[z(5, 1), CycNum::zero()], [CycNum::zero(), z(5, 4)]];
        let grp = build_from_generators(&[g], 100).unwrap();
        assert_eq!(grp.order(), 5);
        assert_eq!(grp.identity(), 0);
    }

    #[test]
    fn bound_and_singular() {
        let two = CycNum::from_int(2);
        let g = [[two.clone(), CycNum::zero()], [CycNum::zero(), CycNum::one()]];
        assert!(matches!(
            build_from_generators(&[g], 50),
            Err(Error::ClosureBoundExceeded(50))
        ));
        let s = [[CycNum::one(), CycNum::one()], [CycNum::one(), CycNum::one()]];
        assert!(matches!(build_from_generators(&[s], 50), Err(Error::NonInvertibleMatrix)));
    }
}
