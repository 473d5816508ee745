use super::algebra::{Element, FrobeniusAlgebra};
use super::space::{FockSpace, FockVector, Monomial};
use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};

/// A single mode operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ModeOp {
    /// `𝔮_n(e_c)`, n ≠ 0: creation for n > 0, annihilation for n < 0.
    Mode(i64, usize),
    /// Formal derivative `∂/∂𝔮_n(e_c)` on the polynomial Fock space.
    Partial(u32, usize),
}

impl ModeOp {
    fn shift(&self) -> i64 {
        match self {
            ModeOp::Mode(n, _) => *n,
            ModeOp::Partial(n, _) => -(*n as i64),
        }
    }
}

/// A finite sum of words in mode operators; each word is applied right to
/// left. `valid_below` is the largest input weight for which the (possibly
/// truncated) sum is exact.
#[derive(Clone, Debug)]
pub struct FockOperator {
    terms: Vec<(CycNum, Vec<ModeOp>)>,
    odd: bool,
    shift: i64,
    valid_below: Option<usize>,
}

impl FockOperator {
    pub fn zero(shift: i64) -> Self {
        FockOperator {
            terms: Vec::new(),
            odd: false,
            shift,
            valid_below: None,
        }
    }

    pub fn from_terms(terms: Vec<(CycNum, Vec<ModeOp>)>, odd: bool, shift: i64, valid_below: Option<usize>) -> Self {
        debug_assert!(terms.iter().all(|(_, w)| w.iter().map(ModeOp::shift).sum::<i64>() == shift));
        FockOperator {
            terms: terms.into_iter().filter(|(c, _)| !c.is_zero()).collect(),
            odd,
            shift,
            valid_below,
        }
    }

    pub fn terms(&self) -> &[(CycNum, Vec<ModeOp>)] {
        &self.terms
    }

    pub fn is_odd(&self) -> bool {
        self.odd
    }

    /// Change in weight.
    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn valid_below(&self) -> Option<usize> {
        self.valid_below
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        FockOperator {
            terms: self.terms.iter().map(|(c, w)| (c * s, w.clone())).filter(|(c, _)| !c.is_zero()).collect(),
            ..self.clone()
        }
    }

    /// Sum of two operators of equal shift; validity is the smaller one.
    pub fn add(&self, other: &FockOperator) -> Result<Self> {
        if self.shift != other.shift {
            return Err(Error::InvalidInput("adding operators of different weight shift".into()));
        }
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        Ok(FockOperator {
            terms,
            odd: self.odd,
            shift: self.shift,
            valid_below: min_valid(self.valid_below, other.valid_below),
        })
    }

    /// `self ∘ other`
    pub fn compose(&self, other: &FockOperator) -> Self {
        let mut terms = Vec::new();
        for (a, wa) in &self.terms {
            for (b, wb) in &other.terms {
                let mut w = wa.clone();
                w.extend_from_slice(wb);
                terms.push((a * b, w));
            }
        }
        let after = self
            .valid_below
            .map(|v| (v as i64 - other.shift).max(-1));
        let valid = match after {
            Some(v) if v < 0 => Some(0),
            Some(v) => min_valid(other.valid_below, Some(v as usize)),
            None => other.valid_below,
        };
        FockOperator {
            terms,
            odd: self.odd ^ other.odd,
            shift: self.shift + other.shift,
            valid_below: valid,
        }
    }

    pub fn apply(&self, space: &FockSpace, v: &FockVector) -> Result<FockVector> {
        if let Some(cut) = self.valid_below {
            let w = v.max_weight();
            if w > cut {
                return Err(Error::CutoffTooSmall { weight: w, cutoff: cut });
            }
        }
        let mut out = FockVector::zero();
        for (c, word) in &self.terms {
            let mut cur: Vec<(CycNum, Monomial)> = v.terms().map(|(m, x)| (x * c, m.clone())).collect();
            for op in word.iter().rev() {
                let mut next = Vec::new();
                for (x, m) in &cur {
                    apply_op(space, *op, m, x, &mut next);
                }
                cur = next;
                if cur.is_empty() {
                    break;
                }
            }
            for (x, m) in cur {
                out.add_term(m, x);
            }
        }
        Ok(out)
    }
}

fn min_valid(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, None) => x,
        (None, y) => y,
    }
}

fn apply_op(space: &FockSpace, op: ModeOp, m: &Monomial, x: &CycNum, out: &mut Vec<(CycNum, Monomial)>) {
    match op {
        ModeOp::Mode(n, c) if n > 0 => {
            if let Some((neg, m2)) = space.create(n as u32, c, m) {
                out.push((if neg { -x.clone() } else { x.clone() }, m2));
            }
        }
        ModeOp::Mode(n, c) if n < 0 => {
            let k = (-n) as u32;
            let factor = CycNum::from_int(-(k as i64));
            for (w, m2) in space.derive(k, space.is_odd(c), m, |d| space.pairing(c, d) * &factor) {
                out.push((&w * x, m2));
            }
        }
        ModeOp::Mode(..) => {}
        ModeOp::Partial(n, c) => {
            for (w, m2) in space.derive(n, space.is_odd(c), m, |d| {
                if d == c {
                    CycNum::one()
                } else {
                    CycNum::zero()
                }
            }) {
                out.push((&w * x, m2));
            }
        }
    }
}

fn element_terms(alpha: &[CycNum]) -> impl Iterator<Item = (usize, &CycNum)> {
    alpha.iter().enumerate().filter(|(_, x)| !x.is_zero())
}

/// `𝔮_n(α)` for an element with coordinates `alpha` in the colour basis.
/// Positive modes create; `𝔮_0 = 0`. Exact on all inputs.
pub fn q_mode(space: &FockSpace, n: i64, alpha: &[CycNum]) -> Result<FockOperator> {
    if alpha.len() != space.num_colors() {
        return Err(Error::InvalidInput("element has the wrong number of coordinates".into()));
    }
    let odd = homogeneous_parity(space, alpha)?;
    if n == 0 {
        return Ok(FockOperator::zero(0));
    }
    Ok(FockOperator::from_terms(
        element_terms(alpha).map(|(c, x)| (x.clone(), vec![ModeOp::Mode(n, c)])).collect(),
        odd,
        n,
        None,
    ))
}

fn homogeneous_parity(space: &FockSpace, alpha: &[CycNum]) -> Result<bool> {
    let mut p = None;
    for (c, _) in element_terms(alpha) {
        match p {
            None => p = Some(space.is_odd(c)),
            Some(q) if q != space.is_odd(c) => {
                return Err(Error::InvalidInput("element mixes even and odd parts".into()))
            }
            _ => {}
        }
    }
    Ok(p.unwrap_or(false))
}

/// Rational algebra element as colour coordinates.
pub fn coords(alpha: &Element) -> Vec<CycNum> {
    alpha.iter().cloned().map(CycNum::from_rational).collect()
}

/// Mode tuples `(m_1, …, m_k)`, all nonzero, summing to `n`, whose negative
/// entries total at most `cutoff`.
fn mode_tuples(k: usize, n: i64, cutoff: usize) -> Vec<Vec<i64>> {
    fn go(k: usize, left: i64, neg_budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if k == 1 {
            if left != 0 && (left > 0 || -left <= neg_budget) {
                cur.push(left);
                out.push(cur.clone());
                cur.pop();
            }
            return;
        }
        // remaining k−1 entries can absorb at most neg_budget of negatives,
        // so the positive part of this entry is bounded accordingly
        let lo = -neg_budget;
        let hi = left + neg_budget;
        for m in lo..=hi {
            if m == 0 {
                continue;
            }
            let nb = if m < 0 { neg_budget + m } else { neg_budget };
            cur.push(m);
            go(k - 1, left - m, nb, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k > 0 {
        go(k, n, cutoff as i64, &mut Vec::new(), &mut out);
    }
    out
}

/// Literal right-to-left normal ordering `:x_1 (:x_2 ⋯ x_k:):` of single
/// modes: positive modes stay on the left, the others move to the right,
/// with a sign for each odd-past-odd move.
pub fn normal_order_word(space: &FockSpace, word: &[ModeOp]) -> (bool, Vec<ModeOp>) {
    let parity = |op: &ModeOp| match op {
        ModeOp::Mode(_, c) | ModeOp::Partial(_, c) => space.is_odd(*c),
    };
    if word.len() <= 1 {
        return (false, word.to_vec());
    }
    let (neg, inner) = normal_order_word(space, &word[1..]);
    let x = word[0];
    let creation = matches!(x, ModeOp::Mode(n, _) if n > 0);
    if creation {
        let mut w = vec![x];
        w.extend(inner);
        (neg, w)
    } else {
        let inner_odd = word[1..].iter().filter(|o| parity(o)).count() % 2 == 1;
        let mut w = inner;
        w.push(x);
        (neg ^ (parity(&x) && inner_odd), w)
    }
}

/// Coefficient of `z^{n−k}` in `:a_1(z) ⋯ a_k(z):` for single-colour fields
/// `a_i(z) = Σ_m 𝔮_m(e_{c_i}) z^{m−1}`, truncated to be exact on inputs of
/// weight ≤ `cutoff`.
pub fn normal_order(space: &FockSpace, colors: &[usize], n: i64, cutoff: usize) -> FockOperator {
    let k = colors.len();
    let odd = colors.iter().filter(|&&c| space.is_odd(c)).count() % 2 == 1;
    let mut terms = Vec::new();
    for modes in mode_tuples(k, n, cutoff) {
        let word: Vec<ModeOp> = modes.iter().zip(colors).map(|(&m, &c)| ModeOp::Mode(m, c)).collect();
        let (neg, w) = normal_order_word(space, &word);
        terms.push((CycNum::from_int(if neg { -1 } else { 1 }), w));
    }
    FockOperator::from_terms(terms, odd, n, Some(cutoff))
}

fn factorial(k: usize) -> Rational {
    (1..=k as i64).fold(rat(1), |acc, x| acc * rat(x))
}

/// `W^k_n(α)`: coefficient of `z^{n−k}` in `(1/k!) (δ_{k*}α)(z)`, exact on
/// inputs of weight ≤ `cutoff`.
pub fn w_operator(a: &FrobeniusAlgebra, k: usize, n: i64, alpha: &Element, cutoff: usize) -> Result<FockOperator> {
    let space = FockSpace::from_algebra(a);
    let odd = a.parity_of(alpha).unwrap_or(false);
    let tensor = a.coproduct_power(alpha, k)?;
    let kf = factorial(k).recip();
    let mut terms = Vec::new();
    for (colors, t) in tensor {
        // Koszul sign from pairing a_1⊗⋯⊗a_k against β_1⊗⋯⊗β_k slotwise
        let odd_slots = colors.iter().filter(|&&c| a.is_odd(c)).count();
        let koszul = if (odd_slots * odd_slots.saturating_sub(1) / 2) % 2 == 1 { -1 } else { 1 };
        let coeff = CycNum::from_rational(&t * &kf * rat(koszul));
        for (c, w) in normal_order(&space, &colors, n, cutoff).terms() {
            terms.push((c * &coeff, w.clone()));
        }
    }
    Ok(FockOperator::from_terms(terms, odd, n, Some(cutoff)))
}

/// Lehn's Virasoro operator `𝔏_n(α) = W²_n(α)`.
pub fn virasoro(a: &FrobeniusAlgebra, n: i64, alpha: &Element, cutoff: usize) -> Result<FockOperator> {
    w_operator(a, 2, n, alpha, cutoff)
}

/// Which formula to use for the boundary operator 𝔡.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BoundaryModel {
    /// `𝔡 = −W³₀(1_X)`, for projective models with trivial canonical class.
    Projective,
    /// `𝔡 = −½ Σ_{n,m>0} nm 𝔮_{n+m} ∂_{𝔮_n} ∂_{𝔮_m}` on one even colour.
    AffinePlane,
}

pub fn boundary_operator(a: &FrobeniusAlgebra, model: BoundaryModel, cutoff: usize) -> Result<FockOperator> {
    match model {
        BoundaryModel::Projective => {
            if !a.is_nondegenerate() {
                return Err(Error::ModelMismatch(format!(
                    "model '{}' has a degenerate trace; use the affine-plane formula",
                    a.name()
                )));
            }
            if !a.has_trivial_canonical_class() {
                return Err(Error::ModelMismatch(format!(
                    "model '{}' has nontrivial canonical class",
                    a.name()
                )));
            }
            Ok(w_operator(a, 3, 0, a.unit(), cutoff)?.scale(&CycNum::from_int(-1)))
        }
        BoundaryModel::AffinePlane => {
            if a.dim() != 1 || a.is_odd(0) {
                return Err(Error::ModelMismatch(format!(
                    "affine-plane formula needs a single even colour, model '{}' has {}",
                    a.name(),
                    a.dim()
                )));
            }
            Ok(affine_boundary(0, cutoff))
        }
    }
}

/// `−½ Σ_{n,m>0} nm 𝔮_{n+m}(c) ∂_n ∂_m`, exact on inputs of weight ≤ `cutoff`.
pub fn affine_boundary(c: usize, cutoff: usize) -> FockOperator {
    let mut terms = Vec::new();
    for n in 1..=cutoff as u32 {
        for m in 1..=(cutoff as u32 - n.min(cutoff as u32)) {
            if n + m > cutoff as u32 {
                continue;
            }
            let coeff = CycNum::from_rational(rat(-(n as i64) * m as i64) / rat(2));
            terms.push((
                coeff,
                vec![ModeOp::Mode((n + m) as i64, c), ModeOp::Partial(n, c), ModeOp::Partial(m, c)],
            ));
        }
    }
    FockOperator::from_terms(terms, false, 0, Some(cutoff))
}

/// `A(Bv) − (−1)^{|A||B|} B(Av)`
pub fn supercommutator_apply(space: &FockSpace, a: &FockOperator, b: &FockOperator, v: &FockVector) -> Result<FockVector> {
    let ab = a.apply(space, &b.apply(space, v)?)?;
    let ba = b.apply(space, &a.apply(space, v)?)?;
    Ok(if a.is_odd() && b.is_odd() { ab.add(&ba) } else { ab.sub(&ba) })
}

/// Fock bilinear form, with `𝔮_n(c)† = −𝔮_{−n}(c)`; on monomials of one
/// colour this gives `⟨𝔮_n(a)|0⟩, 𝔮_n(b)|0⟩⟩ = n · pairing(a, b)`.
pub fn fock_form(space: &FockSpace, u: &FockVector, v: &FockVector) -> Result<CycNum> {
    let mut acc = CycNum::zero();
    for (m, x) in u.terms() {
        // ⟨g_1⋯g_k|0⟩, v⟩ = vacuum part of g_k†⋯g_1† v, g_1† applied first
        let word: Vec<ModeOp> = m
            .generators()
            .iter()
            .rev()
            .map(|&(n, c)| ModeOp::Mode(-(n as i64), c))
            .collect();
        let sign = if m.generators().len() % 2 == 0 { 1 } else { -1 };
        let op = FockOperator::from_terms(vec![(CycNum::from_int(sign), word)], false, -(m.weight() as i64), None);
        let image = op.apply(space, v)?;
        acc += &(x * &image.coefficient(&Monomial::vacuum()));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        // k = 2, n = 0, cutoff 2: (−2,2) (−1,1) (1,−1) (2,−2)
        assert_eq!(mode_tuples(2, 0, 2).len(), 4);
        assert!(mode_tuples(3, 1, 3).iter().all(|t| t.iter().sum::<i64>() == 1));
    }
}
