use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{rat, CycNum, Rational};

/// Coordinates of an algebra element in the basis.
pub type Element = Vec<Rational>;

/// A finite-dimensional graded-commutative algebra with a trace, standing in
/// for the cohomology ring of a surface with its Poincaré pairing.
#[derive(Clone, Debug)]
pub struct FrobeniusAlgebra {
    name: String,
    labels: Vec<String>,
    degrees: Vec<i32>,
    /// `mult[i][j]` = coordinates of `e_i e_j`.
    mult: Vec<Vec<Element>>,
    trace: Vec<Rational>,
    unit: Element,
    euler_class: Option<Element>,
    canonical_class: Option<Element>,
}

impl FrobeniusAlgebra {
    /// Checks unit, graded commutativity and associativity.
    pub fn new(
        name: impl Into<String>,
        labels: Vec<String>,
        degrees: Vec<i32>,
        mult: Vec<Vec<Element>>,
        trace: Vec<Rational>,
        unit: Element,
    ) -> Result<Self> {
        let d = labels.len();
        let bad = |m: &str| Error::InvalidInput(m.to_string());
        if degrees.len() != d || trace.len() != d || unit.len() != d || mult.len() != d {
            return Err(bad("algebra data have inconsistent dimensions"));
        }
        if mult.iter().any(|r| r.len() != d || r.iter().any(|e| e.len() != d)) {
            return Err(bad("structure constants have the wrong shape"));
        }
        let a = FrobeniusAlgebra {
            name: name.into(),
            labels,
            degrees,
            mult,
            trace,
            unit,
            euler_class: None,
            canonical_class: None,
        };
        for i in 0..d {
            let ei = a.basis(i);
            if a.mul(&a.unit, &ei) != ei || a.mul(&ei, &a.unit) != ei {
                return Err(bad("unit law fails"));
            }
            for j in 0..d {
                let ej = a.basis(j);
                let sign = if a.is_odd(i) && a.is_odd(j) { rat(-1) } else { rat(1) };
                let ba: Element = a.mul(&ej, &ei).iter().map(|x| x * &sign).collect();
                if a.mul(&ei, &ej) != ba {
                    return Err(bad("multiplication is not graded-commutative"));
                }
                for k in 0..d {
                    let ek = a.basis(k);
                    if a.mul(&a.mul(&ei, &ej), &ek) != a.mul(&ei, &a.mul(&ej, &ek)) {
                        return Err(bad("multiplication is not associative"));
                    }
                }
            }
        }
        Ok(a)
    }

    pub fn with_euler_class(mut self, e: Element) -> Result<Self> {
        self.check_len(&e)?;
        self.euler_class = Some(e);
        Ok(self)
    }

    pub fn with_canonical_class(mut self, k: Element) -> Result<Self> {
        self.check_len(&k)?;
        self.canonical_class = Some(k);
        Ok(self)
    }

    fn check_len(&self, e: &Element) -> Result<()> {
        if e.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::InvalidInput("element has the wrong dimension".into()))
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn degree(&self, i: usize) -> i32 {
        self.degrees[i]
    }

    pub fn is_odd(&self, i: usize) -> bool {
        self.degrees[i].rem_euclid(2) == 1
    }

    pub fn label_index(&self, l: &str) -> Option<usize> {
        self.labels.iter().position(|x| x == l)
    }

    pub fn basis(&self, i: usize) -> Element {
        (0..self.dim()).map(|j| rat((i == j) as i64)).collect()
    }

    pub fn unit(&self) -> &Element {
        &self.unit
    }

    pub fn euler_class(&self) -> Option<&Element> {
        self.euler_class.as_ref()
    }

    pub fn canonical_class(&self) -> Option<&Element> {
        self.canonical_class.as_ref()
    }

    /// Whether the canonical class is absent or zero.
    pub fn has_trivial_canonical_class(&self) -> bool {
        self.canonical_class
            .as_ref()
            .map_or(true, |k| k.iter().all(|x| *x == rat(0)))
    }

    pub fn zero(&self) -> Element {
        vec![rat(0); self.dim()]
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let d = self.dim();
        let mut out = self.zero();
        for i in 0..d {
            if a[i] == rat(0) {
                continue;
            }
            for j in 0..d {
                if b[j] == rat(0) {
                    continue;
                }
                let s = &a[i] * &b[j];
                for (k, c) in self.mult[i][j].iter().enumerate() {
                    if *c != rat(0) {
                        out[k] += &s * c;
                    }
                }
            }
        }
        out
    }

    pub fn integral(&self, a: &Element) -> Rational {
        a.iter().zip(&self.trace).map(|(x, t)| x * t).sum()
    }

    /// `G[i][j] = ∫ e_i e_j`
    pub fn gram(&self) -> Vec<Vec<Rational>> {
        (0..self.dim())
            .map(|i| {
                (0..self.dim())
                    .map(|j| self.integral(&self.mul(&self.basis(i), &self.basis(j))))
                    .collect()
            })
            .collect()
    }

    pub fn gram_inverse(&self) -> Result<Vec<Vec<Rational>>> {
        let g: linalg::Matrix = self
            .gram()
            .into_iter()
            .map(|r| r.into_iter().map(CycNum::from_rational).collect())
            .collect();
        let inv = linalg::inverse(&g).map_err(|_| Error::DegeneratePairing)?;
        Ok(inv
            .into_iter()
            .map(|r| r.into_iter().map(|x| x.to_rational().expect("rational")).collect())
            .collect())
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram_inverse().is_ok()
    }

    /// Parity of a homogeneous element (`None` for zero or mixed parity).
    pub fn parity_of(&self, a: &Element) -> Option<bool> {
        let mut p = None;
        for (i, x) in a.iter().enumerate() {
            if *x != rat(0) {
                match p {
                    None => p = Some(self.is_odd(i)),
                    Some(q) if q != self.is_odd(i) => return None,
                    _ => {}
                }
            }
        }
        p
    }

    /// `δ_{k*}α` as a sparse tensor: entries `(indices, coefficient)` with
    /// `⟨δ_{k*}α, β₁⊗⋯⊗β_k⟩ = ∫ α β₁⋯β_k` against the slotwise trace pairing.
    pub fn coproduct_power(&self, alpha: &Element, k: usize) -> Result<Vec<(Vec<usize>, Rational)>> {
        if k == 0 {
            return Err(Error::InvalidInput("coproduct power needs k ≥ 1".into()));
        }
        if k == 1 {
            return Ok(alpha
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != rat(0))
                .map(|(i, x)| (vec![i], x.clone()))
                .collect());
        }
        let ginv = self.gram_inverse()?;
        let d = self.dim();
        // R[b] = ∫ α e_{b1} ⋯ e_{bk}, stored densely in base d
        let total = d.pow(k as u32);
        let mut prods: Vec<Element> = vec![alpha.clone()];
        for _ in 0..k {
            prods = prods
                .iter()
                .flat_map(|p| (0..d).map(move |b| (p, b)))
                .map(|(p, b)| self.mul(p, &self.basis(b)))
                .collect();
        }
        let mut t: Vec<Rational> = prods.iter().map(|p| self.integral(p)).collect();
        // contract each slot with G⁻¹: T[.., a_s, ..] = Σ_b R[.., b, ..] Ginv[b][a_s]
        for slot in 0..k {
            let stride = d.pow((k - 1 - slot) as u32);
            let mut next = vec![rat(0); total];
            for (idx, v) in t.iter().enumerate() {
                if *v == rat(0) {
                    continue;
                }
                let b = (idx / stride) % d;
                let rest = idx - b * stride;
                for (a, gi) in ginv[b].iter().enumerate() {
                    if *gi != rat(0) {
                        next[rest + a * stride] += v * gi;
                    }
                }
            }
            t = next;
        }
        Ok(t
            .into_iter()
            .enumerate()
            .filter(|(_, v)| *v != rat(0))
            .map(|(mut idx, v)| {
                let mut ix = vec![0; k];
                for s in (0..k).rev() {
                    ix[s] = idx % d;
                    idx /= d;
                }
                (ix, v)
            })
            .collect())
    }

    pub fn to_json(&self) -> ModelJson {
        let name_of = |i: usize| self.labels[i].clone();
        let sparse = |e: &Element| -> BTreeMap<String, String> {
            e.iter()
                .enumerate()
                .filter(|(_, x)| **x != rat(0))
                .map(|(i, x)| (name_of(i), x.to_string()))
                .collect()
        };
        let mut products = Vec::new();
        for i in 0..self.dim() {
            for j in i..self.dim() {
                let p = &self.mult[i][j];
                if self.unit[i] != rat(0) && self.unit.iter().filter(|x| **x != rat(0)).count() == 1 {
                    continue;
                }
                if p.iter().any(|x| *x != rat(0)) {
                    products.push(ProductJson {
                        left: name_of(i),
                        right: name_of(j),
                        result: sparse(p),
                    });
                }
            }
        }
        ModelJson {
            name: self.name.clone(),
            basis: (0..self.dim())
                .map(|i| BasisJson {
                    label: name_of(i),
                    degree: self.degrees[i],
                })
                .collect(),
            products,
            trace: sparse(&self.trace),
            unit: sparse(&self.unit),
            euler_class: self.euler_class.as_ref().map(sparse),
            canonical_class: self.canonical_class.as_ref().map(sparse),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisJson {
    pub label: String,
    /// Cohomological degree; odd degree means odd parity.
    pub degree: i32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductJson {
    pub left: String,
    pub right: String,
    pub result: BTreeMap<String, String>,
}

/// Model file format. Products with the unit are implied, products not
/// listed are zero, and `b·a` follows from `a·b` by graded commutativity.
/// Scalars are decimal rationals such as `"-3"` or `"1/2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModelJson {
    #[serde(default)]
    pub name: String,
    pub basis: Vec<BasisJson>,
    #[serde(default)]
    pub products: Vec<ProductJson>,
    pub trace: BTreeMap<String, String>,
    pub unit: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub euler_class: Option<BTreeMap<String, String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub canonical_class: Option<BTreeMap<String, String>>,
}

fn parse_rational(s: &str) -> Result<Rational> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| Error::InvalidInput(format!("bad rational '{}': {}", s, e)))
}

impl ModelJson {
    pub fn into_algebra(self) -> Result<FrobeniusAlgebra> {
        let labels: Vec<String> = self.basis.iter().map(|b| b.label.clone()).collect();
        let degrees: Vec<i32> = self.basis.iter().map(|b| b.degree).collect();
        let d = labels.len();
        let idx = |l: &str| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| Error::InvalidInput(format!("unknown basis label '{}'", l)))
        };
        let dense = |m: &BTreeMap<String, String>| -> Result<Element> {
            let mut e = vec![rat(0); d];
            for (k, v) in m {
                e[idx(k)?] = parse_rational(v)?;
            }
            Ok(e)
        };
        let unit = dense(&self.unit)?;
        let trace = dense(&self.trace)?;
        let odd = |i: usize| degrees[i].rem_euclid(2) == 1;
        let mut mult = vec![vec![vec![rat(0); d]; d]; d];
        let unit_index = {
            let nz: Vec<usize> = (0..d).filter(|&i| unit[i] != rat(0)).collect();
            match nz.as_slice() {
                [u] if unit[*u] == rat(1) => Some(*u),
                _ => None,
            }
        };
        if let Some(u) = unit_index {
            for i in 0..d {
                mult[u][i][i] = rat(1);
                mult[i][u][i] = rat(1);
            }
        }
        for p in &self.products {
            let (i, j) = (idx(&p.left)?, idx(&p.right)?);
            let r = dense(&p.result)?;
            let sign = if odd(i) && odd(j) { rat(-1) } else { rat(1) };
            mult[j][i] = r.iter().map(|x| x * &sign).collect();
            mult[i][j] = r;
        }
        let euler = self.euler_class.as_ref().map(&dense).transpose()?;
        let canonical = self.canonical_class.as_ref().map(&dense).transpose()?;
        let mut a = FrobeniusAlgebra::new(self.name, labels, degrees, mult, trace, unit)?;
        if let Some(e) = euler {
            a = a.with_euler_class(e)?;
        }
        if let Some(k) = canonical {
            a = a.with_canonical_class(k)?;
        }
        Ok(a)
    }
}

fn el(v: &[i64]) -> Element {
    v.iter().map(|&x| rat(x)).collect()
}

/// Builds an algebra from a multiplication rule on basis indices.
fn from_rule(
    name: &str,
    labels: &[&str],
    degrees: &[i32],
    rule: impl Fn(usize, usize) -> Element,
    trace: &[i64],
) -> FrobeniusAlgebra {
    let d = labels.len();
    let mult = (0..d).map(|i| (0..d).map(|j| rule(i, j)).collect()).collect();
    let mut unit = vec![rat(0); d];
    unit[0] = rat(1);
    FrobeniusAlgebra::new(
        name,
        labels.iter().map(|s| s.to_string()).collect(),
        degrees.to_vec(),
        mult,
        el(trace),
        unit,
    )
    .expect("built-in model is a Frobenius algebra")
}

/// One-dimensional algebra spanned by the unit, with ∫1 = 1.
pub fn point_model() -> FrobeniusAlgebra {
    from_rule("point", &["1"], &[0], |_, _| el(&[1]), &[1])
}

/// H*(ℙ²): basis 1, h, h², ∫h² = 1, c₂ = 3h², K = −3h.
pub fn p2_model() -> FrobeniusAlgebra {
    let a = from_rule(
        "P2",
        &["1", "h", "h2"],
        &[0, 2, 4],
        |i, j| {
            let mut e = el(&[0, 0, 0]);
            if i + j <= 2 {
                e[i + j] = rat(1);
            }
            e
        },
        &[0, 0, 1],
    );
    a.with_euler_class(el(&[0, 0, 3]))
        .and_then(|a| a.with_canonical_class(el(&[0, -3, 0])))
        .expect("dimensions match")
}

/// H*(ℙ¹×ℙ¹): basis 1, a, b, ab with a² = b² = 0, c₂ = 4ab, K = −2a − 2b.
pub fn p1p1_model() -> FrobeniusAlgebra {
    // basis index as a bitmask over {a, b}
    let a = from_rule(
        "P1xP1",
        &["1", "a", "b", "ab"],
        &[0, 2, 2, 4],
        |i, j| {
            let mut e = el(&[0, 0, 0, 0]);
            if i & j == 0 {
                e[i | j] = rat(1);
            }
            e
        },
        &[0, 0, 0, 1],
    );
    a.with_euler_class(el(&[0, 0, 0, 4]))
        .and_then(|a| a.with_canonical_class(el(&[0, -2, -2, 0])))
        .expect("dimensions match")
}

/// H*(abelian surface) = Λ*(ℂ⁴) with odd generators in degree 1,
/// ∫ e₁e₂e₃e₄ = 1, K = 0, c₂ = 0.
pub fn abelian_surface_model() -> FrobeniusAlgebra {
    // basis: subsets of {0,1,2,3} as bitmasks, ordered by size then value
    let mut masks: Vec<usize> = (0..16).collect();
    masks.sort_by_key(|m| (m.count_ones(), *m));
    let pos = |m: usize| masks.iter().position(|&x| x == m).unwrap();
    let labels: Vec<String> = masks
        .iter()
        .map(|&m| {
            if m == 0 {
                "1".to_string()
            } else {
                (0..4).filter(|b| m >> b & 1 == 1).map(|b| format!("e{}", b + 1)).collect()
            }
        })
        .collect();
    let degrees: Vec<i32> = masks.iter().map(|m| m.count_ones() as i32).collect();
    let mult = (0..16)
        .map(|i| {
            (0..16)
                .map(|j| {
                    let (x, y) = (masks[i], masks[j]);
                    let mut e = vec![rat(0); 16];
                    if x & y == 0 {
                        // sign of merging the sorted wedge x ∧ y
                        let mut swaps = 0;
                        for b in 0..4 {
                            if y >> b & 1 == 1 {
                                swaps += (x >> (b + 1)).count_ones();
                            }
                        }
                        e[pos(x | y)] = rat(if swaps % 2 == 0 { 1 } else { -1 });
                    }
                    e
                })
                .collect()
        })
        .collect();
    let mut trace = vec![rat(0); 16];
    trace[pos(15)] = rat(1);
    let mut unit = vec![rat(0); 16];
    unit[0] = rat(1);
    FrobeniusAlgebra::new("abelian-surface", labels, degrees, mult, trace, unit)
        .and_then(|a| a.with_euler_class(vec![rat(0); 16]))
        .and_then(|a| a.with_canonical_class(vec![rat(0); 16]))
        .expect("built-in model is a Frobenius algebra")
}

/// The affine plane: only the unit, and a vanishing (degenerate) trace.
pub fn affine_plane_model() -> FrobeniusAlgebra {
    from_rule("affine-plane", &["1"], &[0], |_, _| el(&[1]), &[0])
}

/// Looks up `point`, `p2`, `p1xp1`, `abelian` or `affine`.
pub fn builtin_model(name: &str) -> Result<FrobeniusAlgebra> {
    match name {
        "point" => Ok(point_model()),
        "p2" | "P2" => Ok(p2_model()),
        "p1xp1" | "P1xP1" => Ok(p1p1_model()),
        "abelian" | "abelian-surface" => Ok(abelian_surface_model()),
        "affine" | "affine-plane" => Ok(affine_plane_model()),
        _ => Err(Error::InvalidInput(format!("unknown model '{}'", name))),
    }
}
