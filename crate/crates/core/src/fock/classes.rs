use super::algebra::{Element, FrobeniusAlgebra};
use super::operator::{coords, q_mode};
use super::space::{FockSpace, FockVector};
use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};

/// `B_i(γ, n) = (1/(n−i−1)!) 𝔮_{i+1}(γ) 𝔮_1(1)^{n−i−1} |0⟩`.
pub fn b_class(a: &FrobeniusAlgebra, i: usize, gamma: &Element, n: usize) -> Result<FockVector> {
    if i >= n {
        return Err(Error::IndexOutOfRange(format!("B_{i} needs i < n = {n}")));
    }
    let space = FockSpace::from_algebra(a);
    let one = q_mode(&space, 1, &coords(a.unit()))?;
    let mut v = FockVector::vacuum();
    for _ in 0..n - i - 1 {
        v = one.apply(&space, &v)?;
    }
    let v = q_mode(&space, (i + 1) as i64, &coords(gamma))?.apply(&space, &v)?;
    let f: Rational = (1..=(n - i - 1) as i64).fold(rat(1), |acc, x| acc * rat(x));
    Ok(v.scale_rational(&f.recip()))
}

/// Weight components `v_0, …, v_cutoff` of `exp(Σ_{n≥1} (±1)^{n−1} (1/n) 𝔮_n(x) zⁿ) |0⟩`,
/// with the alternating sign when `alternating` is set.
pub fn exp_creation(space: &FockSpace, x: &[CycNum], alternating: bool, cutoff: usize) -> Result<Vec<FockVector>> {
    let ops = (1..=cutoff as i64)
        .map(|n| q_mode(space, n, x))
        .collect::<Result<Vec<_>>>()?;
    // w·v_w = Σ_{n=1}^{w} (±1)^{n−1} 𝔮_n(x) v_{w−n}
    let mut out = vec![FockVector::vacuum()];
    for w in 1..=cutoff {
        let mut acc = FockVector::zero();
        for n in 1..=w {
            let term = ops[n - 1].apply(space, &out[w - n])?;
            acc = if alternating && n % 2 == 0 { acc.sub(&term) } else { acc.add(&term) };
        }
        out.push(acc.scale(&CycNum::from_rational(rat(1) / rat(w as i64))));
    }
    Ok(out)
}

/// Weight components of `exp(Σ_{n≥1} (−1)^{n−1} (1/n) 𝔮_n(γ) zⁿ) |0⟩`.
pub fn chern_series(a: &FrobeniusAlgebra, gamma: &Element, cutoff: usize) -> Result<Vec<FockVector>> {
    exp_creation(&FockSpace::from_algebra(a), &coords(gamma), true, cutoff)
}
