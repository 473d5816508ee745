//! Brute-force induction and restriction between the levels Γ_n and the
//! Heisenberg operators p_{±k}(γ) on ⊕_n R(Γ_n).

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;

use super::classfn::{sigma_n, wreath_inner_product, WreathClassFunction};
use super::element::{WreathElement, WreathLaw};
use super::WreathFamily;
use crate::error::{Error, Result};
use crate::exact::{CycNum, Rational};
use crate::groups::{inner_product, ClassFunction};
use crate::report::VerificationReport;

/// For each type τ of Γ_{n+m}: the number of `y ∈ Γ_{n+m}` with
/// `y⁻¹ x_τ y = a ⊕ b ∈ Γ_n × Γ_m`, tallied by the types of `a` and `b`.
#[derive(Debug)]
pub(crate) struct InductionCounts {
    pub(crate) counts: Vec<Vec<(usize, usize, u64)>>,
    pub(crate) normalizer: Rational,
}

/// For each type τ of Γ_{m}: tallies over `x ∈ Γ_k` of the pair
/// (type of x, type of x⁻¹ ⊕ x_τ) in Γ_{k+m}.
#[derive(Debug)]
pub(crate) struct RestrictionCounts {
    pub(crate) counts: Vec<Vec<(usize, usize, u64)>>,
    pub(crate) normalizer: Rational,
}

fn tally(map: HashMap<(usize, usize), u64>) -> Vec<(usize, usize, u64)> {
    let mut v: Vec<(usize, usize, u64)> = map.into_iter().map(|((a, b), c)| (a, b, c)).collect();
    v.sort_unstable();
    v
}

fn order_of(law: &WreathLaw) -> Rational {
    Rational::from_integer(BigInt::from(crate::groups::GroupLaw::order(law)))
}

impl WreathFamily {
    /// Class sizes of Γ_n by type, tallied over all elements.
    pub(crate) fn class_sizes(&self, n: usize) -> Result<Arc<Vec<u64>>> {
        if let Some(s) = self.sizes.lock().unwrap().get(&n) {
            return Ok(s.clone());
        }
        let base = self.base();
        let law = WreathLaw::new(base, n, self.budget())?;
        let lvl = self.level(n);
        let mut sizes = vec![0u64; lvl.len()];
        for x in law.elements() {
            sizes[lvl.index_of(&x.type_of(base)).expect("enumerated type")] += 1;
        }
        let sizes = Arc::new(sizes);
        self.sizes.lock().unwrap().insert(n, sizes.clone());
        Ok(sizes)
    }

    /// Frobenius formula over H = Γ_n × Γ_m: the number of `y ∈ Γ_{n+m}`
    /// conjugating `x_ρ` to an element `a ⊕ b` of H equals
    /// `|C(x_ρ)| · #{h ∈ H ∩ Cl(x_ρ) of type (a, b)}`, so only H is enumerated.
    pub(crate) fn induction_counts(&self, n: usize, m: usize) -> Result<Arc<InductionCounts>> {
        if let Some(c) = self.ind_cache.lock().unwrap().get(&(n, m)) {
            return Ok(c.clone());
        }
        let base = self.base();
        let (sn, sm) = (self.class_sizes(n)?, self.class_sizes(m)?);
        let (ln, lm, lnm) = (self.level(n), self.level(m), self.level(n + m));
        let mut maps: Vec<HashMap<(usize, usize), u64>> = vec![HashMap::new(); lnm.len()];
        for (ia, ta) in ln.types().iter().enumerate() {
            let xa = WreathElement::canonical(base, ta);
            for (ib, tb) in lm.types().iter().enumerate() {
                let x = xa.direct_sum(&WreathElement::canonical(base, tb));
                let r = lnm.index_of(&x.type_of(base)).expect("enumerated type");
                let z: u64 = lnm.z(r).to_integer().try_into().expect("centralizer order fits u64");
                *maps[r].entry((ia, ib)).or_default() += z * sn[ia] * sm[ib];
            }
        }
        let h: u64 = sn.iter().sum::<u64>() * sm.iter().sum::<u64>();
        let c = Arc::new(InductionCounts {
            counts: maps.into_iter().map(tally).collect(),
            normalizer: Rational::from_integer(BigInt::from(h)).recip(),
        });
        self.ind_cache.lock().unwrap().insert((n, m), c.clone());
        Ok(c)
    }

    /// The same tallies by conjugating over every `y ∈ Γ_{n+m}`.
    #[cfg(test)]
    pub(crate) fn induction_counts_by_conjugation(&self, n: usize, m: usize) -> Result<Vec<Vec<(usize, usize, u64)>>> {
        let base = self.base();
        let big = WreathLaw::new(base, n + m, self.budget())?;
        let (ln, lm, lnm) = (self.level(n), self.level(m), self.level(n + m));
        let t = base.table();
        let elems: Vec<WreathElement> = big.elements().collect();
        let inverses: Vec<WreathElement> = elems.iter().map(|y| y.inv(t)).collect();
        Ok(lnm
            .types()
            .iter()
            .map(|tau| {
                let x = WreathElement::canonical(base, tau);
                let mut map: HashMap<(usize, usize), u64> = HashMap::new();
                for (y, yinv) in elems.iter().zip(&inverses) {
                    let z = yinv.mul(&x, t).mul(y, t);
                    if let Some((a, b)) = z.split(n) {
                        let ia = ln.index_of(&a.type_of(base)).expect("enumerated type");
                        let ib = lm.index_of(&b.type_of(base)).expect("enumerated type");
                        *map.entry((ia, ib)).or_default() += 1;
                    }
                }
                tally(map)
            })
            .collect())
    }

    pub(crate) fn restriction_counts(&self, k: usize, m: usize) -> Result<Arc<RestrictionCounts>> {
        if let Some(c) = self.res_cache.lock().unwrap().get(&(k, m)) {
            return Ok(c.clone());
        }
        let base = self.base();
        let small = WreathLaw::new(base, k, self.budget())?;
        let (lk, lm, lkm) = (self.level(k), self.level(m), self.level(k + m));
        let t = base.table();
        let xs: Vec<(usize, WreathElement)> = small
            .elements()
            .map(|x| (lk.index_of(&x.type_of(base)).expect("enumerated type"), x.inv(t)))
            .collect();
        let counts = lm
            .types()
            .iter()
            .map(|tau| {
                let y = WreathElement::canonical(base, tau);
                let mut map: HashMap<(usize, usize), u64> = HashMap::new();
                for (ix, xinv) in &xs {
                    let z = xinv.direct_sum(&y);
                    let iz = lkm.index_of(&z.type_of(base)).expect("enumerated type");
                    *map.entry((*ix, iz)).or_default() += 1;
                }
                tally(map)
            })
            .collect();
        let c = Arc::new(RestrictionCounts {
            counts,
            normalizer: order_of(&small).recip(),
        });
        self.res_cache.lock().unwrap().insert((k, m), c.clone());
        Ok(c)
    }

    /// Induction product `Ind_{Γ_n × Γ_m}^{Γ_{n+m}} (f ⊠ g)`, i.e.
    /// `(1/|H|) Σ_{y : y⁻¹xy ∈ H} (f ⊠ g)(y⁻¹xy)`.
    pub fn induce(&self, f: &WreathClassFunction, g: &WreathClassFunction) -> Result<WreathClassFunction> {
        self.check(f)?;
        self.check(g)?;
        let (n, m) = (f.n(), g.n());
        let counts = self.induction_counts(n, m)?;
        let lvl = self.level(n + m);
        Ok(WreathClassFunction::from_fn(&lvl, |i, _| {
            let mut acc = CycNum::zero();
            for &(a, b, c) in &counts.counts[i] {
                let v = f.value(a) * g.value(b);
                if !v.is_zero() {
                    acc += v.scale(&Rational::from_integer(BigInt::from(c)));
                }
            }
            acc.scale(&counts.normalizer)
        }))
    }

    /// Restricts `f` from Γ_{k+m} to Γ_k × Γ_m and pairs the first factor
    /// with `s`: `y ↦ (1/|Γ_k|) Σ_{x ∈ Γ_k} s(x) f(x⁻¹ ⊕ y)`.
    pub fn restrict_pair(&self, s: &WreathClassFunction, f: &WreathClassFunction) -> Result<WreathClassFunction> {
        self.check(s)?;
        self.check(f)?;
        let k = s.n();
        if f.n() < k {
            return Err(Error::InvalidInput(format!(
                "cannot restrict level {} to a factor of level {}",
                f.n(),
                k
            )));
        }
        let m = f.n() - k;
        let counts = self.restriction_counts(k, m)?;
        let lvl = self.level(m);
        Ok(WreathClassFunction::from_fn(&lvl, |i, _| {
            let mut acc = CycNum::zero();
            for &(a, b, c) in &counts.counts[i] {
                let v = s.value(a) * f.value(b);
                if !v.is_zero() {
                    acc += v.scale(&Rational::from_integer(BigInt::from(c)));
                }
            }
            acc.scale(&counts.normalizer)
        }))
    }

    /// `p_k(γ)` for k > 0 (creation, induction with σ_k(γ)) and k < 0
    /// (annihilation, restriction paired against σ_{−k}(γ)). Annihilation
    /// below level |k| gives 0 at level 0.
    pub fn heisenberg_p(&self, k: i64, gamma: &ClassFunction, f: &WreathClassFunction) -> Result<WreathClassFunction> {
        if k == 0 {
            return Err(Error::InvalidInput("Heisenberg mode must be nonzero".into()));
        }
        let kk = k.unsigned_abs() as usize;
        let sigma = sigma_n(&self.level(kk), gamma)?;
        if k > 0 {
            self.induce(&sigma, f)
        } else if f.n() < kk {
            Ok(WreathClassFunction::zero(&self.level(0)))
        } else {
            self.restrict_pair(&sigma, f)
        }
    }

    /// `p_{−k}(γ)` (k > 0) as the adjoint of `p_k(γ)` under the standard form:
    /// `(p_{−k} f)(τ⁻¹) = Z_τ ⟨p_k(γ) 1_τ, f⟩`.
    pub fn annihilation_by_adjoint(&self, k: usize, gamma: &ClassFunction, f: &WreathClassFunction) -> Result<WreathClassFunction> {
        self.check(f)?;
        if k == 0 {
            return Err(Error::InvalidInput("Heisenberg mode must be nonzero".into()));
        }
        if f.n() < k {
            return Ok(WreathClassFunction::zero(&self.level(0)));
        }
        let lvl = self.level(f.n() - k);
        let mut values = vec![CycNum::zero(); lvl.len()];
        for tau in 0..lvl.len() {
            let ind = self.heisenberg_p(k as i64, gamma, &WreathClassFunction::indicator(&lvl, tau))?;
            values[lvl.inverse(tau)] = wreath_inner_product(&ind, f)?.scale(lvl.z(tau));
        }
        WreathClassFunction::new(&lvl, values)
    }

    /// `[p_k(γ), p_l(γ')] f`
    pub fn bracket(&self, k: i64, gamma: &ClassFunction, l: i64, gamma2: &ClassFunction, f: &WreathClassFunction) -> Result<WreathClassFunction> {
        let ab = self.heisenberg_p(k, gamma, &self.heisenberg_p(l, gamma2, f)?)?;
        let ba = self.heisenberg_p(l, gamma2, &self.heisenberg_p(k, gamma, f)?)?;
        if ab.n() != ba.n() {
            // one side vanished below level 0 and was reported at level 0
            let target = (f.n() as i64 + k + l).max(0) as usize;
            let fix = |x: WreathClassFunction| {
                if x.n() == target { x } else { WreathClassFunction::zero(&self.level(target)) }
            };
            return fix(ab).sub(&fix(ba));
        }
        ab.sub(&ba)
    }
}

/// `[p_k(γ), p_l(γ')] = −k δ_{k,−l} ⟨γ, γ'⟩ Id` on every class indicator of
/// levels `≤ levels`, for `0 < |k|, |l| ≤ modes` and all irreducibles.
pub fn verify_heisenberg(family: &WreathFamily, modes: usize, levels: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("heisenberg");
    let irr = ClassFunction::irreducibles(family.base())?;
    let modes = modes as i64;
    for m in 0..=levels {
        let lvl = family.level(m);
        for b in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, b);
            for k in (-modes..=modes).filter(|&k| k != 0) {
                for l in (-modes..=modes).filter(|&l| l != 0) {
                    for (i, g1) in irr.iter().enumerate() {
                        for (j, g2) in irr.iter().enumerate() {
                            let lhs = family.bracket(k, g1, l, g2, &f)?;
                            let rhs = if k + l == 0 {
                                f.scale(&(inner_product(g1, g2)? * CycNum::from_int(-k)))
                            } else {
                                WreathClassFunction::zero(&family.level(lhs.n()))
                            };
                            report.check(
                                format!("[p_{k}(γ{i}), p_{l}(γ{j})] 1_{} at level {m}", lvl.types()[b]),
                                &lhs,
                                &rhs,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Budget;
    use crate::groups::{cyclic, Group};

    #[test]
    fn induction_counts_match_conjugation_sums() {
        let fam = WreathFamily::new(&Group::new(cyclic(2).unwrap()), Budget::default());
        for (n, m) in [(0, 2), (1, 1), (1, 2), (2, 1), (2, 2), (1, 3)] {
            let fast = fam.induction_counts(n, m).unwrap();
            let slow = fam.induction_counts_by_conjugation(n, m).unwrap();
            assert_eq!(fast.counts, slow, "n={n} m={m}");
        }
    }
}
