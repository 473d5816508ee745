use std::fmt;
use std::sync::Arc;

use super::element::WreathGroup;
use super::types::{TypeFunction, WreathLevel};
use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};
use crate::groups::ClassFunction;

/// A class function on Γ_n, stored by type (one value per element of
/// [`WreathLevel::types`]).
#[derive(Clone)]
pub struct WreathClassFunction {
    level: Arc<WreathLevel>,
    values: Vec<CycNum>,
}

impl PartialEq for WreathClassFunction {
    fn eq(&self, other: &Self) -> bool {
        self.compatible(other).is_ok() && self.values == other.values
    }
}

impl fmt::Debug for WreathClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for WreathClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .iter()
            .filter(|(_, v)| !v.is_zero())
            .map(|(t, v)| format!("({})·1[{}]", v, t))
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

impl WreathClassFunction {
    pub fn new(level: &Arc<WreathLevel>, values: Vec<CycNum>) -> Result<Self> {
        if values.len() != level.len() {
            return Err(Error::InvalidInput(format!(
                "level {} has {} types, got {} values",
                level.n(),
                level.len(),
                values.len()
            )));
        }
        Ok(WreathClassFunction {
            level: level.clone(),
            values,
        })
    }

    pub fn from_fn(level: &Arc<WreathLevel>, mut f: impl FnMut(usize, &TypeFunction) -> CycNum) -> Self {
        WreathClassFunction {
            level: level.clone(),
            values: level.types().iter().enumerate().map(|(i, t)| f(i, t)).collect(),
        }
    }

    pub fn zero(level: &Arc<WreathLevel>) -> Self {
        Self::from_fn(level, |_, _| CycNum::zero())
    }

    /// Indicator of the class with type index `i`.
    pub fn indicator(level: &Arc<WreathLevel>, i: usize) -> Self {
        Self::from_fn(level, |j, _| if i == j { CycNum::one() } else { CycNum::zero() })
    }

    /// The trivial character; at level 0 this is the vacuum.
    pub fn trivial(level: &Arc<WreathLevel>) -> Self {
        Self::from_fn(level, |_, _| CycNum::one())
    }

    pub fn level(&self) -> &Arc<WreathLevel> {
        &self.level
    }

    pub fn n(&self) -> usize {
        self.level.n()
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, i: usize) -> &CycNum {
        &self.values[i]
    }

    pub fn get(&self, t: &TypeFunction) -> Option<&CycNum> {
        self.level.index_of(t).map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&TypeFunction, &CycNum)> {
        self.level.types().iter().zip(&self.values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    pub(crate) fn compatible(&self, other: &Self) -> Result<()> {
        if !Arc::ptr_eq(self.level.base(), other.level.base()) {
            return Err(Error::GroupMismatch);
        }
        if self.n() != other.n() {
            return Err(Error::InvalidInput(format!(
                "class functions at levels {} and {}",
                self.n(),
                other.n()
            )));
        }
        Ok(())
    }

    fn zip(&self, other: &Self, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Result<Self> {
        self.compatible(other)?;
        Ok(WreathClassFunction {
            level: self.level.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        WreathClassFunction {
            level: self.level.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        WreathClassFunction {
            level: self.level.clone(),
            values: self.values.iter().map(|v| v.scale(s)).collect(),
        }
    }

    /// The same function on the explicit group.
    pub fn to_class_function(&self, w: &WreathGroup) -> Result<ClassFunction> {
        if w.level().n() != self.n() || !Arc::ptr_eq(w.level().base(), self.level.base()) {
            return Err(Error::GroupMismatch);
        }
        Ok(ClassFunction::from_fn(w.group(), |c| self.values[w.class_type(c)].clone()))
    }

    pub fn from_class_function(level: &Arc<WreathLevel>, w: &WreathGroup, f: &ClassFunction) -> Result<Self> {
        if !Arc::ptr_eq(f.group(), w.group()) || w.level().n() != level.n() {
            return Err(Error::GroupMismatch);
        }
        Ok(Self::from_fn(level, |i, _| f.value(w.type_class(i)).clone()))
    }
}

/// `⟨f, g⟩ = Σ_ρ f(ρ) g(ρ⁻¹) / Z_ρ`
pub fn wreath_inner_product(f: &WreathClassFunction, g: &WreathClassFunction) -> Result<CycNum> {
    f.compatible(g)?;
    let lvl = &f.level;
    let mut acc = CycNum::zero();
    for i in 0..lvl.len() {
        let t = &f.values[i] * &g.values[lvl.inverse(i)];
        if !t.is_zero() {
            acc += t.scale(&lvl.z(i).recip());
        }
    }
    Ok(acc)
}

fn check_base(level: &WreathLevel, gamma: &ClassFunction) -> Result<()> {
    if Arc::ptr_eq(level.base(), gamma.group()) {
        Ok(())
    } else {
        Err(Error::GroupMismatch)
    }
}

/// σ_n(γ): value n γ(c) on the n-cycle type with cycle-product in c, 0 elsewhere.
pub fn sigma_n(level: &Arc<WreathLevel>, gamma: &ClassFunction) -> Result<WreathClassFunction> {
    check_base(level, gamma)?;
    let n = level.n() as i64;
    Ok(WreathClassFunction::from_fn(level, |_, t| {
        let mut cyc = t.cycles();
        match (cyc.next(), cyc.next()) {
            (Some((c, r)), None) if r as i64 == n => gamma.value(c).scale(&rat(n)),
            _ => CycNum::zero(),
        }
    }))
}

/// η_n(γ) (`signed = false`) or ε_n(γ) (`signed = true`): the product of
/// γ over cycle-products, times the sign of the permutation part when signed.
/// Extended to virtual γ by the same formula.
pub fn eta_eps(level: &Arc<WreathLevel>, gamma: &ClassFunction, signed: bool) -> Result<WreathClassFunction> {
    check_base(level, gamma)?;
    Ok(WreathClassFunction::from_fn(level, |_, t| {
        let mut v = CycNum::one();
        for (c, r) in t.cycles() {
            v *= gamma.value(c);
            if signed && r % 2 == 0 {
                v = -v;
            }
        }
        v
    }))
}

pub fn eta_n(level: &Arc<WreathLevel>, gamma: &ClassFunction) -> Result<WreathClassFunction> {
    eta_eps(level, gamma, false)
}

pub fn epsilon_n(level: &Arc<WreathLevel>, gamma: &ClassFunction) -> Result<WreathClassFunction> {
    eta_eps(level, gamma, true)
}

/// `⟨f, g⟩_ξ = ⟨η_n(ξ) f, g⟩`
pub fn weighted_form(f: &WreathClassFunction, g: &WreathClassFunction, xi: &ClassFunction) -> Result<CycNum> {
    f.compatible(g)?;
    let eta = eta_n(&f.level, xi)?;
    wreath_inner_product(&eta.pointwise(f)?, g)
}
