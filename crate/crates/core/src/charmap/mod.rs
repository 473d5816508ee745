//! The characteristic map from `⊕_n R(Γ_n)` to the coloured Fock space,
//! and the convolution operators transported through it.
//!
//! Colours are the conjugacy classes of Γ, all even, with pairing
//! `B(c, c') = ζ_c δ_{c', c⁻¹}`. The group-side operator `p_k(γ)` (creation
//! for k > 0) corresponds to `𝔮_k(x_γ)`, and `p_{−k}(γ)` to `−𝔮_{−k}(x_γ)`,
//! where `x_γ = Σ_c γ(c)/ζ_c · e_c`.

mod convolution;
mod delta_virasoro;

pub use convolution::{
    class_k, cubic_formula, delta, filtered_convolution, lehn_sorger_check, verify_cubic,
    wreath_convolution, LEHN_SORGER_SIGN,
};
pub use delta_virasoro::{delta_virasoro_prefactor, delta_virasoro_check, DeltaVirasoroOptions};

use std::sync::Arc;

use crate::error::{Budget, Error, Result};
use crate::exact::{rat, CycNum};
use crate::fock::{exp_creation, fock_form, FockOperator, FockSpace, FockVector, ModeOp, Monomial};
use crate::groups::{ClassFunction, Group};
use crate::report::VerificationReport;
use crate::wreath::{
    epsilon_n, eta_n, wreath_inner_product, WreathClassFunction, WreathFamily, WreathLevel,
};

/// A wreath family together with its coloured Fock space.
#[derive(Debug)]
pub struct CharMap {
    family: WreathFamily,
    space: FockSpace,
}

impl CharMap {
    pub fn new(base: &Arc<Group>, budget: Budget) -> Self {
        let cls = base.classes();
        let r = cls.len();
        let labels = (0..r).map(|c| format!("c{c}")).collect();
        let pairing = (0..r)
            .map(|c| {
                (0..r)
                    .map(|d| {
                        if d == cls.inverse_class[c] {
                            CycNum::from_int(cls.centralizer_orders[c] as i64)
                        } else {
                            CycNum::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let space = FockSpace::new(labels, vec![false; r], pairing).expect("sizes agree");
        CharMap {
            family: WreathFamily::new(base, budget),
            space,
        }
    }

    pub fn family(&self) -> &WreathFamily {
        &self.family
    }

    pub fn space(&self) -> &FockSpace {
        &self.space
    }

    pub fn base(&self) -> &Arc<Group> {
        self.family.base()
    }

    /// `x_γ = Σ_c γ(c)/ζ_c · e_c`
    pub fn color_of(&self, gamma: &ClassFunction) -> Result<Vec<CycNum>> {
        if !Arc::ptr_eq(gamma.group(), self.base()) {
            return Err(Error::GroupMismatch);
        }
        let z = &self.base().classes().centralizer_orders;
        Ok(gamma
            .values()
            .iter()
            .zip(z)
            .map(|(v, &zc)| v.scale(&(rat(1) / rat(zc as i64))))
            .collect())
    }

    /// `p_ρ = ∏_c ∏_{r ∈ ρ(c)} 𝔮_r(e_c) |0⟩`
    pub fn power_sum(&self, level: &WreathLevel, i: usize) -> Monomial {
        let gens: Vec<(u32, usize)> = level.types()[i].cycles().map(|(c, r)| (r as u32, c)).collect();
        Monomial::from_generators(&self.space, &gens).expect("even colours").1
    }

    /// `ch(f) = Σ_ρ Z_ρ⁻¹ f(ρ) p_ρ`
    pub fn ch(&self, f: &WreathClassFunction) -> Result<FockVector> {
        if !Arc::ptr_eq(f.level().base(), self.base()) {
            return Err(Error::GroupMismatch);
        }
        let lvl = f.level();
        let mut out = FockVector::zero();
        for (i, v) in f.values().iter().enumerate() {
            if !v.is_zero() {
                out.add_term(self.power_sum(lvl, i), v.scale(&lvl.z(i).recip()));
            }
        }
        Ok(out)
    }

    /// Inverse of `ch` on the weight-`n` subspace.
    pub fn ch_inverse(&self, v: &FockVector, n: usize) -> Result<WreathClassFunction> {
        let lvl = self.family.level(n);
        let mut values = vec![CycNum::zero(); lvl.len()];
        let mut seen = 0;
        for (i, slot) in values.iter_mut().enumerate() {
            let c = v.coefficient(&self.power_sum(&lvl, i));
            if !c.is_zero() {
                seen += 1;
            }
            *slot = c.scale(lvl.z(i));
        }
        if seen != v.len() {
            return Err(Error::InvalidInput(format!("vector has components outside weight {n}")));
        }
        WreathClassFunction::new(&lvl, values)
    }

    /// Fock-side image of `p_k(γ)`.
    pub fn p_fock(&self, k: i64, gamma: &ClassFunction) -> Result<FockOperator> {
        if k == 0 {
            return Err(Error::InvalidInput("Heisenberg mode must be nonzero".into()));
        }
        let x = self.color_of(gamma)?;
        let sign = if k > 0 { CycNum::one() } else { CycNum::from_int(-1) };
        let terms = x
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(c, v)| (v * &sign, vec![ModeOp::Mode(k, c)]))
            .collect();
        Ok(FockOperator::from_terms(terms, false, k, None))
    }

    /// `⟨u, v⟩` on the Fock side.
    pub fn form(&self, u: &FockVector, v: &FockVector) -> Result<CycNum> {
        fock_form(&self.space, u, v)
    }
}

/// `ch ∘ p_k(γ) = p_k^{Fock}(γ) ∘ ch` on every class indicator of levels
/// `≤ levels`, for `0 < |k| ≤ modes` and every irreducible γ.
pub fn verify_heisenberg_transport(cm: &CharMap, modes: usize, levels: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("heisenberg-transport");
    let irr = ClassFunction::irreducibles(cm.base())?;
    for m in 0..=levels {
        let lvl = cm.family().level(m);
        for b in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, b);
            let chf = cm.ch(&f)?;
            for k in -(modes as i64)..=modes as i64 {
                if k == 0 {
                    continue;
                }
                for (gi, gamma) in irr.iter().enumerate() {
                    let lhs = cm.ch(&cm.family().heisenberg_p(k, gamma, &f)?)?;
                    let rhs = cm.p_fock(k, gamma)?.apply(cm.space(), &chf)?;
                    report.check(
                        format!("ch p_{k}(γ{gi}) 1_{} at level {m}", lvl.types()[b]),
                        &lhs,
                        &rhs,
                    );
                }
            }
        }
    }
    Ok(report)
}

/// `⟨f, g⟩ = ⟨ch f, ch g⟩` and `ch(Ind(f ⊠ g)) = ch f · ch g` on all pairs of
/// class indicators with levels summing to at most `n_max`.
pub fn verify_isometry_and_product(cm: &CharMap, n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("ch-isometry-product");
    for n in 0..=n_max {
        let lvl = cm.family().level(n);
        for a in 0..lvl.len() {
            let f = WreathClassFunction::indicator(&lvl, a);
            for b in 0..lvl.len() {
                let g = WreathClassFunction::indicator(&lvl, b);
                let lhs = wreath_inner_product(&f, &g)?;
                let rhs = cm.form(&cm.ch(&f)?, &cm.ch(&g)?)?;
                report.check(format!("⟨1_{}, 1_{}⟩", lvl.types()[a], lvl.types()[b]), &lhs, &rhs);
            }
        }
        for m in 0..=n_max - n {
            let lm = cm.family().level(m);
            for a in 0..lvl.len() {
                for b in 0..lm.len() {
                    let f = WreathClassFunction::indicator(&lvl, a);
                    let g = WreathClassFunction::indicator(&lm, b);
                    let lhs = cm.ch(&cm.family().induce(&f, &g)?)?;
                    let rhs = cm.ch(&f)?.mul(cm.space(), &cm.ch(&g)?);
                    report.check(format!("ch Ind(1_{} ⊠ 1_{})", lvl.types()[a], lm.types()[b]), &lhs, &rhs);
                }
            }
        }
    }
    Ok(report)
}

/// `ch(ε_n(γ))` and `ch(η_n(γ))` against the weight-n parts of
/// `exp(Σ (−1)^{n−1} p_n(γ) zⁿ/n)` and `exp(Σ p_n(γ) zⁿ/n)` applied to |0⟩.
pub fn verify_exponentials(cm: &CharMap, n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("exponential-formulas");
    let mut gammas = ClassFunction::irreducibles(cm.base())?;
    // one virtual character as well
    if gammas.len() > 1 {
        let v = gammas[0].scale(&CycNum::from_int(2)).sub(&gammas[1])?;
        gammas.push(v);
    }
    for (gi, gamma) in gammas.iter().enumerate() {
        let x = cm.color_of(gamma)?;
        let eps = exp_creation(cm.space(), &x, true, n_max)?;
        let eta = exp_creation(cm.space(), &x, false, n_max)?;
        for n in 0..=n_max {
            let lvl = cm.family().level(n);
            report.check(format!("ch ε_{n}(γ{gi})"), &cm.ch(&epsilon_n(&lvl, gamma)?)?, &eps[n]);
            report.check(format!("ch η_{n}(γ{gi})"), &cm.ch(&eta_n(&lvl, gamma)?)?, &eta[n]);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, trivial};

    #[test]
    fn ch_of_sigma_and_transposition() {
        let cm = CharMap::new(&Group::new(trivial()), Budget::default());
        let lvl = cm.family().level(2);
        let two = lvl
            .types()
            .iter()
            .position(|t| t.num_cycles() == 1)
            .unwrap();
        let v = cm.ch(&WreathClassFunction::indicator(&lvl, two)).unwrap();
        let q2 = Monomial::from_generators(cm.space(), &[(2, 0)]).unwrap().1;
        assert_eq!(v.coefficient(&q2), CycNum::from_rational(rat(1) / rat(2)));
        assert_eq!(v.len(), 1);
        assert_eq!(cm.ch(&cm.family().vacuum()).unwrap(), FockVector::vacuum());
        assert_eq!(cm.ch_inverse(&v, 2).unwrap(), WreathClassFunction::indicator(&lvl, two));
    }

    #[test]
    fn sigma_maps_to_single_creation() {
        let cm = CharMap::new(&Group::new(cyclic(3).unwrap()), Budget::default());
        for gamma in ClassFunction::irreducibles(cm.base()).unwrap() {
            for n in 1..=3 {
                let s = crate::wreath::sigma_n(&cm.family().level(n), &gamma).unwrap();
                let want = cm.p_fock(n as i64, &gamma).unwrap().apply(cm.space(), &FockVector::vacuum()).unwrap();
                assert_eq!(cm.ch(&s).unwrap(), want);
            }
        }
    }
}
