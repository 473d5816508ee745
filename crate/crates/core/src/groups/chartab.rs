use num_bigint::BigInt;

use super::modp;
use super::Group;
use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};

/// Exact character table over `Q(ζ_e)`, `e` the group exponent.
///
/// Row 0 is the trivial character; the remaining rows are sorted by degree
/// (stable with respect to the order in which eigenspaces split off).
#[derive(Clone, Debug)]
pub struct CharacterTable {
    /// `irreducibles[γ][c]` is the value of γ on class `c`.
    pub irreducibles: Vec<Vec<CycNum>>,
    pub degrees: Vec<u64>,
    pub exponent: u32,
}

impl CharacterTable {
    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// Central characters are found as common eigenvectors of the class-sum
    /// matrices over F_p (p ≡ 1 mod e), then lifted to `Q(ζ_e)` through the
    /// power maps and checked for orthonormality exactly.
    pub(crate) fn compute(group: &Group) -> Result<Self> {
        let g = group.table();
        let cls = group.classes();
        let n = g.order() as u64;
        let r = cls.len();
        let e = g.exponent() as u64;
        let p = modp::prime_1_mod(e, 2 * n);
        let sc = group.structure_constants();
        let fail = |m: &str| Error::DiagonalizationFailure(m.to_string());

        // A_j[l][k] = n[j][l][k]; central characters ω satisfy A_j ω = ω_j ω.
        let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..r)
            .map(|i| {
                let mut v = vec![0; r];
                v[i] = 1;
                v
            })
            .collect()];
        for j in 1..r {
            if spaces.iter().all(|s| s.len() == 1) {
                break;
            }
            let mut next = Vec::new();
            for space in spaces {
                if space.len() == 1 {
                    next.push(space);
                    continue;
                }
                let (basis, pivots) = modp::rref(space, p);
                let k = basis.len();
                let image: Vec<Vec<u64>> = basis
                    .iter()
                    .map(|v| {
                        (0..r)
                            .map(|l| {
                                (0..r).fold(0, |acc, kk| {
                                    (acc + modp::mul(sc.get(j, l, kk) % p, v[kk], p)) % p
                                })
                            })
                            .collect()
                    })
                    .collect();
                // restricted[t][i] = coordinate t of A_j v_i
                let restricted: Vec<Vec<u64>> = (0..k)
                    .map(|t| (0..k).map(|i| image[i][pivots[t]]).collect())
                    .collect();
                let cp = modp::charpoly(restricted.clone(), p);
                let mut found = 0;
                for lambda in 0..p {
                    if modp::eval(&cp, lambda, p) != 0 {
                        continue;
                    }
                    let mut shifted = restricted.clone();
                    for (t, row) in shifted.iter_mut().enumerate() {
                        row[t] = (row[t] + p - lambda) % p;
                    }
                    let ns = modp::nullspace(shifted, p);
                    found += ns.len();
                    let vecs: Vec<Vec<u64>> = ns
                        .iter()
                        .map(|x| {
                            (0..r)
                                .map(|c| {
                                    (0..k).fold(0, |acc, i| (acc + modp::mul(x[i], basis[i][c], p)) % p)
                                })
                                .collect()
                        })
                        .collect();
                    next.push(vecs);
                    if found == k {
                        break;
                    }
                }
                if found != k {
                    return Err(fail("class-sum matrix does not split over F_p"));
                }
            }
            spaces = next;
        }
        if spaces.len() != r {
            return Err(fail("common eigenspaces are not one-dimensional"));
        }

        let z = modp::pow(modp::primitive_root(p), (p - 1) / e, p);
        let z_inv = modp::inv(z, p);
        let zpow: Vec<u64> = (0..e).map(|k| modp::pow(z_inv, k, p)).collect();
        let e_inv = modp::inv(e % p, p);
        let powers: Vec<Vec<usize>> = (0..r)
            .map(|c| (0..e as usize).map(|l| cls.power_class(g, c, l)).collect())
            .collect();
        let mut rows: Vec<(u64, Vec<CycNum>)> = Vec::with_capacity(r);
        for space in spaces {
            let v = &space[0];
            if v[0] == 0 {
                return Err(fail("eigenvector vanishes on the identity class"));
            }
            let s = modp::inv(v[0], p);
            let omega: Vec<u64> = v.iter().map(|&x| modp::mul(x, s, p)).collect();
            let mut sum = 0;
            for c in 0..r {
                let t = modp::mul(omega[c], omega[cls.inverse_class[c]], p);
                sum = (sum + modp::mul(t, modp::inv(cls.class_sizes[c] as u64 % p, p), p)) % p;
            }
            if sum == 0 {
                return Err(fail("degenerate central character"));
            }
            let d2 = modp::mul(n % p, modp::inv(sum, p), p);
            let d = (1..=n)
                .take_while(|d| d * d <= n)
                .find(|d| d * d % p == d2)
                .ok_or_else(|| fail("no integral degree"))?;
            let chi: Vec<u64> = (0..r)
                .map(|c| modp::mul(modp::mul(d, omega[c], p), modp::inv(cls.class_sizes[c] as u64 % p, p), p))
                .collect();
            let mut values = Vec::with_capacity(r);
            for c in 0..r {
                let mut mult = Vec::with_capacity(e as usize);
                for t in 0..e {
                    let mut acc = 0;
                    for l in 0..e {
                        let w = zpow[((t * l) % e) as usize];
                        acc = (acc + modp::mul(chi[powers[c][l as usize]], w, p)) % p;
                    }
                    let m = modp::mul(acc, e_inv, p);
                    if m > d {
                        return Err(fail("eigenvalue multiplicity out of range"));
                    }
                    mult.push(Rational::from_integer(BigInt::from(m)));
                }
                values.push(CycNum::from_powers(e as u32, mult));
            }
            rows.push((d, values));
        }

        let one = CycNum::one();
        let trivial = rows
            .iter()
            .position(|(_, v)| v.iter().all(|x| *x == one))
            .ok_or_else(|| fail("trivial character missing"))?;
        let t = rows.remove(trivial);
        rows.sort_by_key(|(d, _)| *d);
        rows.insert(0, t);

        let table = CharacterTable {
            degrees: rows.iter().map(|(d, _)| *d).collect(),
            irreducibles: rows.into_iter().map(|(_, v)| v).collect(),
            exponent: e as u32,
        };
        table.check_orthonormal(group)?;
        Ok(table)
    }

    fn check_orthonormal(&self, group: &Group) -> Result<()> {
        let cls = group.classes();
        let n = group.order() as i64;
        let weights: Vec<Rational> = cls
            .class_sizes
            .iter()
            .map(|&s| rat(s as i64) / rat(n))
            .collect();
        for i in 0..self.len() {
            for j in i..self.len() {
                let mut acc = CycNum::zero();
                for c in 0..cls.len() {
                    let t = &self.irreducibles[i][c] * &self.irreducibles[j][cls.inverse_class[c]];
                    acc += t.scale(&weights[c]);
                }
                let want = if i == j { CycNum::one() } else { CycNum::zero() };
                if acc != want {
                    return Err(Error::DiagonalizationFailure(format!(
                        "rows {} and {} are not orthonormal",
                        i, j
                    )));
                }
            }
        }
        Ok(())
    }
}
