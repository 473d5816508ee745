//! Virasoro operators extracted from `[Δ_1(K_c), p_n(γ)]` on the group side.
//!
//! Mode labels match the Fock side: `p_n(γ)` with n > 0 raises the level
//! (`WreathFamily::heisenberg_p(n, γ)`). With these labels
//! `L_n = (−1)^{n+1} [Δ_1(K_c), p_n(γ)] / prefactor` satisfies the Virasoro
//! relations with central term `−(n³−n)/12`. Without the sign twist the
//! relations already fail at |n| = 2; for |n| ≤ 1 the twist is 1.

use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};
use crate::groups::{inner_product, ClassFunction};
use crate::report::VerificationReport;
use crate::wreath::{WreathClassFunction, WreathFamily};

use super::convolution::delta;

#[derive(Clone, Copy, Debug)]
pub struct DeltaVirasoroOptions {
    /// Class of Γ labelling `K_c`.
    pub class: usize,
    /// Probe all `|n|, |m| ≤ modes`.
    pub modes: i64,
    /// Highest level Γ_m ever touched.
    pub levels: usize,
    /// Apply the `(−1)^{n+1}` twist (only matters for even n).
    pub sign_twist: bool,
}

/// `n |Γ|² γ(c⁻¹) / (ζ_c d_γ²)`
pub fn delta_virasoro_prefactor(gamma: &ClassFunction, c: usize, n: i64) -> Result<CycNum> {
    let g = gamma.group();
    let cls = g.classes();
    let d = gamma.value(0).to_rational().ok_or_else(|| Error::InvalidInput("degree is not rational".into()))?;
    let order = rat(g.order() as i64);
    let s = rat(n) * &order * &order / (rat(cls.centralizer_orders[c] as i64) * &d * &d);
    Ok(gamma.value(cls.inverse_class[c]).scale(&s))
}

struct Ctx<'a> {
    family: &'a WreathFamily,
    class: usize,
    levels: usize,
    sign_twist: bool,
}

impl Ctx<'_> {
    fn p(&self, n: i64, gamma: &ClassFunction, f: &WreathClassFunction) -> Result<Option<WreathClassFunction>> {
        if f.n() as i64 + n > self.levels as i64 {
            return Ok(None);
        }
        self.family.heisenberg_p(n, gamma, f).map(Some)
    }

    fn delta(&self, f: &WreathClassFunction) -> Result<WreathClassFunction> {
        delta(self.family, 1, self.class, f)
    }

    /// `L_n(γ) f`, or `None` when a level above the truncation is needed.
    fn l(&self, n: i64, gamma: &ClassFunction, f: &WreathClassFunction) -> Result<Option<WreathClassFunction>> {
        if n == 0 {
            // L_0 = ½ [L_1, L_{−1}]
            let a = match self.l(-1, gamma, f)? {
                Some(x) => self.l(1, gamma, &x)?,
                None => None,
            };
            let b = match self.l(1, gamma, f)? {
                Some(x) => self.l(-1, gamma, &x)?,
                None => None,
            };
            return match (a, b) {
                (Some(a), Some(b)) => Ok(Some(level_sub(self.family, &a, &b, f.n())?.scale_rational(&(rat(1) / rat(2))))),
                _ => Ok(None),
            };
        }
        let mut pre = delta_virasoro_prefactor(gamma, self.class, n)?;
        if self.sign_twist && n % 2 == 0 {
            pre = -pre;
        }
        if pre.is_zero() {
            return Err(Error::ZeroPrefactor(format!("n = {n}, class {}", self.class)));
        }
        let Some(pf) = self.p(n, gamma, f)? else { return Ok(None) };
        let Some(pdf) = self.p(n, gamma, &self.delta(f)?)? else { return Ok(None) };
        let target = (f.n() as i64 + n).max(0) as usize;
        let br = level_sub(self.family, &self.delta(&pf)?, &pdf, target)?;
        Ok(Some(br.scale(&pre.inverse()?)))
    }
}

/// `a − b`, treating a vanished result reported at level 0 as zero at `target`.
fn level_sub(family: &WreathFamily, a: &WreathClassFunction, b: &WreathClassFunction, target: usize) -> Result<WreathClassFunction> {
    let fix = |x: &WreathClassFunction| {
        if x.n() == target {
            x.clone()
        } else {
            WreathClassFunction::zero(&family.level(target))
        }
    };
    fix(a).sub(&fix(b))
}

/// Checks `[L_n(γ), L_m(γ')] = (n−m) δ_{γγ'} L_{n+m}(γ) − (n³−n)/12 δ_{γγ'} δ_{n,−m}`
/// on every class indicator whose computation stays within `levels`.
pub fn delta_virasoro_check(family: &WreathFamily, opts: DeltaVirasoroOptions) -> Result<VerificationReport> {
    let ctx = Ctx {
        family,
        class: opts.class,
        levels: opts.levels,
        sign_twist: opts.sign_twist,
    };
    let irr = ClassFunction::irreducibles(family.base())?;
    let mut report = VerificationReport::new("delta-virasoro");
    let modes = -opts.modes..=opts.modes;
    for (i, g1) in irr.iter().enumerate() {
        for (j, g2) in irr.iter().enumerate() {
            let same = inner_product(g1, g2)?;
            for n in modes.clone() {
                for m in modes.clone() {
                    let skip = [n, m, n + m]
                        .iter()
                        .zip([g1, g2, g1])
                        .any(|(&k, g)| delta_virasoro_prefactor(g, opts.class, k).map(|p| p.is_zero() && k != 0).unwrap_or(true));
                    if skip {
                        report.check(format!("[L_{n}(γ{i}), L_{m}(γ{j})] skipped: zero prefactor"), &0, &0);
                        continue;
                    }
                    for lv in 0..=opts.levels {
                        let lvl = family.level(lv);
                        for b in 0..lvl.len() {
                            let f = WreathClassFunction::indicator(&lvl, b);
                            let Some(res) = bracket_probe(&ctx, n, g1, m, g2, &same, &f)? else { continue };
                            report.check(
                                format!("[L_{n}(γ{i}), L_{m}(γ{j})] 1_{} at level {lv}", lvl.types()[b]),
                                &res.0,
                                &res.1,
                            );
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

fn bracket_probe(
    ctx: &Ctx,
    n: i64,
    g1: &ClassFunction,
    m: i64,
    g2: &ClassFunction,
    same: &CycNum,
    f: &WreathClassFunction,
) -> Result<Option<(WreathClassFunction, WreathClassFunction)>> {
    let target = f.n() as i64 + n + m;
    if target < 0 {
        return Ok(None);
    }
    let target = target as usize;
    let ab = match ctx.l(m, g2, f)? {
        Some(x) => ctx.l(n, g1, &x)?,
        None => None,
    };
    let ba = match ctx.l(n, g1, f)? {
        Some(x) => ctx.l(m, g2, &x)?,
        None => None,
    };
    let (Some(ab), Some(ba)) = (ab, ba) else { return Ok(None) };
    let lhs = level_sub(ctx.family, &ab, &ba, target)?;
    let mut rhs = WreathClassFunction::zero(&ctx.family.level(target));
    if !same.is_zero() {
        let Some(lnm) = ctx.l(n + m, g1, f)? else { return Ok(None) };
        rhs = level_sub(ctx.family, &lnm, &rhs, target)?.scale(&(same * &CycNum::from_int(n - m)));
        if n + m == 0 {
            let central: Rational = rat(n * n * n - n) / rat(12);
            rhs = rhs.sub(&f.scale(&same.scale(&central)))?;
        }
    }
    Ok(Some((lhs, rhs)))
}
