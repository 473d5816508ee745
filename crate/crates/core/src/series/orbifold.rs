use std::sync::Arc;

use crate::error::{Budget, Error, Result};
use crate::groups::Group;
use crate::report::VerificationReport;
use crate::wreath::WreathFamily;

use super::euler_product;

/// A finite group acting on `{0, …, points−1}` from the left, stored as a
/// table `action[g][x] = g·x`.
#[derive(Clone, Debug)]
pub struct GSet {
    group: Arc<Group>,
    action: Vec<Vec<usize>>,
}

impl GSet {
    /// Checks that the identity acts trivially and that `(gs)·x = g·(s·x)`
    /// for every g and every generator s, which gives compatibility for all
    /// pairs by induction on word length.
    pub fn new(group: &Arc<Group>, action: Vec<Vec<usize>>) -> Result<Self> {
        let t = group.table();
        if action.len() != t.order() {
            return Err(Error::InvalidInput(format!(
                "action table has {} rows for a group of order {}",
                action.len(),
                t.order()
            )));
        }
        let points = action.first().map_or(0, Vec::len);
        if action.iter().any(|row| row.len() != points || row.iter().any(|&y| y >= points)) {
            return Err(Error::InvalidInput("ragged or out-of-range action table".into()));
        }
        if action[t.identity()].iter().enumerate().any(|(x, &y)| x != y) {
            return Err(Error::InvalidInput("identity does not act trivially".into()));
        }
        for g in 0..t.order() {
            for &s in t.generators() {
                let gs = t.mul(g, s);
                if (0..points).any(|x| action[gs][x] != action[g][action[s][x]]) {
                    return Err(Error::InvalidInput(format!("action is not compatible at ({g}, {s})")));
                }
            }
        }
        Ok(GSet {
            group: group.clone(),
            action,
        })
    }

    pub fn from_fn(group: &Arc<Group>, points: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let action = (0..group.order()).map(|g| (0..points).map(|x| f(g, x)).collect()).collect();
        Self::new(group, action)
    }

    /// `points` fixed points.
    pub fn trivial(group: &Arc<Group>, points: usize) -> Self {
        Self::from_fn(group, points, |_, x| x).expect("trivial action")
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn points(&self) -> usize {
        self.action.first().map_or(0, Vec::len)
    }

    pub fn act(&self, g: usize, x: usize) -> usize {
        self.action[g][x]
    }
}

/// `(1/|G|) Σ_{gh = hg} |S^{g,h}|`, summed as `Σ_{[g]} |[g]| Σ_{h ∈ C(g)} |S^{g,h}|`.
pub fn orbifold_euler_bruteforce(s: &GSet, budget: Budget) -> Result<i64> {
    let g = s.group();
    let t = g.table();
    budget.check("orbifold Euler pair loop", g.order())?;
    let cls = g.classes();
    let mut total: u128 = 0;
    for (c, &a) in cls.class_reps.iter().enumerate() {
        let fixed_a: Vec<usize> = (0..s.points()).filter(|&x| s.act(a, x) == x).collect();
        let mut sum: u128 = 0;
        for h in 0..t.order() {
            if t.mul(a, h) == t.mul(h, a) {
                sum += fixed_a.iter().filter(|&&x| s.act(h, x) == x).count() as u128;
            }
        }
        total += sum * cls.class_sizes[c] as u128;
    }
    let order = g.order() as u128;
    if total % order != 0 {
        return Err(Error::NonIntegralResult(format!("commuting-pair sum {total} over |G| = {order}")));
    }
    i64::try_from(total / order).map_err(|_| Error::NonIntegralResult("result does not fit in i64".into()))
}

/// The action of Γ_n on Sⁿ, `(g, s)·(x_1, …, x_n) = (g_1 x_{s⁻¹(1)}, …, g_n x_{s⁻¹(n)})`.
/// Points of Sⁿ are encoded as `Σ x_i |S|^i`.
pub fn wreath_gset(family: &WreathFamily, s: &GSet, n: usize) -> Result<GSet> {
    if !Arc::ptr_eq(s.group(), family.base()) {
        return Err(Error::GroupMismatch);
    }
    let k = s.points();
    let npts = (0..n)
        .try_fold(1usize, |acc, _| acc.checked_mul(k))
        .ok_or_else(|| Error::BudgetExceeded {
            what: "points of Sⁿ".into(),
            size: usize::MAX,
            budget: family.budget().0,
        })?;
    let w = family.group(n)?;
    family
        .budget()
        .check("Γ_n action table", w.group().order().saturating_mul(npts))?;
    let law = w.law();
    let action = (0..w.group().order())
        .map(|idx| {
            let e = law.decode(idx);
            let mut sinv = vec![0; n];
            for (i, &si) in e.s.iter().enumerate() {
                sinv[si] = i;
            }
            (0..npts)
                .map(|p| {
                    let x = digits(p, k, n);
                    (0..n).rev().fold(0, |acc, i| acc * k + s.act(e.g[i], x[sinv[i]]))
                })
                .collect()
        })
        .collect();
    GSet::new(w.group(), action)
}

fn digits(mut p: usize, k: usize, n: usize) -> Vec<usize> {
    (0..n)
        .map(|_| {
            let d = p % k;
            p /= k;
            d
        })
        .collect()
}

/// `χ(Sⁿ, Γ_n)` by brute force against the qⁿ coefficient of
/// `∏ (1 − q^m)^{−χ(S, Γ)}`, for n ≤ n_max.
pub fn wreath_orbifold_euler_check(family: &WreathFamily, s: &GSet, n_max: usize) -> Result<VerificationReport> {
    let mut report = VerificationReport::new("orbifold-euler");
    let chi = orbifold_euler_bruteforce(s, family.budget())?;
    let series = euler_product(chi, n_max + 1);
    let want = series.q_coefficients().expect("series in q only");
    for (n, w) in want.iter().enumerate() {
        let sn = wreath_gset(family, s, n)?;
        let got = orbifold_euler_bruteforce(&sn, family.budget())?;
        report.check(format!("χ(S^{n}, Γ_{n})"), &crate::exact::rat(got), w);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{cyclic, symmetric, trivial};

    #[test]
    fn hand_examples() {
        let z2 = Group::new(cyclic(2).unwrap());
        let swap = GSet::from_fn(&z2, 2, |g, x| if g == z2.table().identity() { x } else { 1 - x }).unwrap();
        assert_eq!(orbifold_euler_bruteforce(&swap, Budget::default()).unwrap(), 1);
        let s3 = Group::new(symmetric(3).unwrap());
        assert_eq!(orbifold_euler_bruteforce(&GSet::trivial(&s3, 1), Budget::default()).unwrap(), 3);
        let e = Group::new(trivial());
        assert_eq!(orbifold_euler_bruteforce(&GSet::trivial(&e, 5), Budget::default()).unwrap(), 5);
    }

    #[test]
    fn bad_tables_are_refused() {
        let z2 = Group::new(cyclic(2).unwrap());
        assert!(GSet::new(&z2, vec![vec![1, 0], vec![1, 0]]).is_err());
        assert!(GSet::new(&z2, vec![vec![0, 1]]).is_err());
        let z3 = Group::new(cyclic(3).unwrap());
        // every non-identity element swaps two points: not a homomorphism
        let e = z3.table().identity();
        assert!(GSet::from_fn(&z3, 2, |g, x| if g == e { x } else { 1 - x }).is_err());
    }

    #[test]
    fn wreath_action_on_pairs() {
        let z2 = Group::new(cyclic(2).unwrap());
        let fam = WreathFamily::new(&z2, Budget::default());
        let s = GSet::trivial(&z2, 1);
        let s2 = wreath_gset(&fam, &s, 2).unwrap();
        assert_eq!(s2.points(), 1);
        assert_eq!(orbifold_euler_bruteforce(&s2, Budget::default()).unwrap(), 5);
    }
}
