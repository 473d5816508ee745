//! McKay quivers of finite subgroups of SL₂(ℂ): the weighted Cartan matrix
//! from `ξ = 2γ₀ − Q`, affine ADE detection, and the Koszul–Thom identity on
//! wreath products.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Budget, Error, Result};
use crate::exact::linalg::{det, Matrix};
use crate::exact::CycNum;
use crate::groups::{inner_product, ClassFunction, Group, Mat2};
use crate::report::VerificationReport;
use crate::wreath::{build_wreath, eta_n, weighted_form, WreathClassFunction, WreathElement, WreathFamily};

#[derive(Clone, Debug)]
pub struct McKayData {
    /// Trace of the defining 2-dimensional representation.
    pub q: ClassFunction,
    pub xi: ClassFunction,
    /// `C_ij = ⟨ξ γ_i, γ_j⟩`
    pub cartan: Vec<Vec<i64>>,
    /// `Q ⊗ γ_i = Σ_j a_ij γ_j`
    pub adjacency: Vec<Vec<i64>>,
    /// Degrees of the irreducibles.
    pub marks: Vec<u64>,
}

fn integral(x: &CycNum, what: &str) -> Result<i64> {
    x.to_integer().ok_or_else(|| Error::NonIntegralResult(format!("{what} = {x}")))
}

pub fn mckay_data(g: &Arc<Group>) -> Result<McKayData> {
    let q = ClassFunction::natural(g)?;
    let xi = ClassFunction::constant(g, CycNum::from_int(2)).sub(&q)?;
    let irr = ClassFunction::irreducibles(g)?;
    let r = irr.len();
    let mut cartan = vec![vec![0; r]; r];
    let mut adjacency = vec![vec![0; r]; r];
    for i in 0..r {
        let xi_i = xi.pointwise(&irr[i])?;
        let q_i = q.pointwise(&irr[i])?;
        for j in 0..r {
            cartan[i][j] = integral(&inner_product(&xi_i, &irr[j])?, "Cartan entry")?;
            adjacency[i][j] = integral(&inner_product(&q_i, &irr[j])?, "adjacency entry")?;
        }
    }
    let marks = g.character_table()?.degrees.clone();
    Ok(McKayData {
        q,
        xi,
        cartan,
        adjacency,
        marks,
    })
}

impl McKayData {
    /// `C · δ`
    pub fn null_check(&self) -> Vec<i64> {
        self.cartan
            .iter()
            .map(|row| row.iter().zip(&self.marks).map(|(c, &m)| c * m as i64).sum())
            .collect()
    }

    pub fn corank(&self) -> usize {
        let m: Matrix = self
            .cartan
            .iter()
            .map(|r| r.iter().map(|&x| CycNum::from_int(x)).collect())
            .collect();
        m.len() - crate::exact::linalg::rank(&m)
    }

    pub fn to_json(&self) -> Result<CartanJson> {
        Ok(CartanJson {
            matrix: self.cartan.clone(),
            marks: self.marks.clone(),
            kind: classify_affine_ade(&self.cartan)?.to_string(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CartanJson {
    pub matrix: Vec<Vec<i64>>,
    pub marks: Vec<u64>,
    #[serde(rename = "type")]
    pub kind: String,
}

/// Affine Dynkin diagrams; the index is the rank of the finite diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AffineType {
    A(usize),
    D(usize),
    E6,
    E7,
    E8,
}

impl fmt::Display for AffineType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffineType::A(k) => write!(f, "A{k}~"),
            AffineType::D(k) => write!(f, "D{k}~"),
            AffineType::E6 => write!(f, "E6~"),
            AffineType::E7 => write!(f, "E7~"),
            AffineType::E8 => write!(f, "E8~"),
        }
    }
}

/// Identifies `C = 2I − A` as an affine ADE diagram from its degree
/// sequence, cycle structure and arm lengths.
pub fn classify_affine_ade(c: &[Vec<i64>]) -> Result<AffineType> {
    let r = c.len();
    let bad = |why: &str| Err(Error::NotAffineADE(why.to_string()));
    if r == 0 || c.iter().any(|row| row.len() != r) {
        return bad("matrix is not square");
    }
    for i in 0..r {
        if c[i][i] != 2 {
            return bad("diagonal entries must be 2");
        }
        for j in 0..r {
            if c[i][j] != c[j][i] || (i != j && c[i][j] > 0) {
                return bad("off-diagonal part must be symmetric and non-positive");
            }
        }
    }
    let a = |i: usize, j: usize| if i == j { 0 } else { -c[i][j] };
    if r == 2 {
        return if a(0, 1) == 2 { Ok(AffineType::A(1)) } else { bad("two vertices without a double edge") };
    }
    if (0..r).any(|i| (0..r).any(|j| a(i, j) > 1)) {
        return bad("multiple edge");
    }
    let nbrs: Vec<Vec<usize>> = (0..r).map(|i| (0..r).filter(|&j| a(i, j) == 1).collect()).collect();
    // connectivity
    let mut seen = vec![false; r];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for &w in &nbrs[v] {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return bad("graph is disconnected");
    }
    let edges: usize = nbrs.iter().map(Vec::len).sum::<usize>() / 2;
    let deg: Vec<usize> = nbrs.iter().map(Vec::len).collect();
    if edges == r {
        return if deg.iter().all(|&d| d == 2) { Ok(AffineType::A(r - 1)) } else { bad("cycle with branches") };
    }
    if edges != r - 1 {
        return bad("more than one cycle");
    }
    let branch: Vec<usize> = (0..r).filter(|&i| deg[i] >= 3).collect();
    match branch.as_slice() {
        [v] if deg[*v] == 4 && r == 5 => Ok(AffineType::D(4)),
        [v] if deg[*v] == 3 => {
            let mut arms: Vec<usize> = nbrs[*v].iter().map(|&w| arm_length(&nbrs, *v, w)).collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [2, 2, 2] => Ok(AffineType::E6),
                [1, 3, 3] => Ok(AffineType::E7),
                [1, 2, 5] => Ok(AffineType::E8),
                [1, 1, _] => bad("finite type D"),
                _ => bad("tree with one branch point of unknown shape"),
            }
        }
        [u, v] if deg[*u] == 3 && deg[*v] == 3 => {
            let leaves = |b: usize| nbrs[b].iter().filter(|&&w| deg[w] == 1).count();
            if leaves(*u) == 2 && leaves(*v) == 2 {
                Ok(AffineType::D(r - 1))
            } else {
                bad("two branch points without forks")
            }
        }
        [] => bad("path graph (finite type A)"),
        _ => bad("too many branch points"),
    }
}

/// Number of vertices on the arm starting at `w` away from `center`.
fn arm_length(nbrs: &[Vec<usize>], center: usize, w: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, w, 1);
    loop {
        let next: Vec<usize> = nbrs[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [n] => {
                prev = cur;
                cur = *n;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// `M(g, s)` acting on `ℂ^{2n} = ⊕ ℂ²` by `(v_i) ↦ (g_i v_{s⁻¹(i)})`.
pub fn block_matrix(mats: &[Mat2], x: &WreathElement) -> Matrix {
    let n = x.n();
    let mut m = vec![vec![CycNum::zero(); 2 * n]; 2 * n];
    for i in 0..n {
        // output block i reads input block s⁻¹(i)
        let j = x.s.iter().position(|&t| t == i).expect("permutation");
        let g = &mats[x.g[i]];
        for a in 0..2 {
            for b in 0..2 {
                m[2 * i + a][2 * j + b] = g[a][b].clone();
            }
        }
    }
    m
}

/// `det(I − M(g, s))` against `η_n(ξ)` (the product of ξ over cycle-products)
/// on a representative of every class type of Γ_n.
pub fn koszul_thom_check(g: &Arc<Group>, n: usize, budget: Budget) -> Result<VerificationReport> {
    let mats = g.table().matrices().ok_or(Error::MissingMatrixModel)?;
    let data = mckay_data(g)?;
    let fam = WreathFamily::new(g, budget);
    fam.group(n)?; // budget check on Γ_n
    let lvl = fam.level(n);
    let eta = eta_n(&lvl, &data.xi)?;
    let mut report = VerificationReport::new("koszul-thom");
    for (i, t) in lvl.types().iter().enumerate() {
        let x = WreathElement::canonical(g, t);
        let m = block_matrix(mats, &x);
        let im: Matrix = (0..2 * n)
            .map(|a| {
                (0..2 * n)
                    .map(|b| {
                        let d = if a == b { CycNum::one() } else { CycNum::zero() };
                        &d - &m[a][b]
                    })
                    .collect()
            })
            .collect();
        let lhs = if n == 0 { CycNum::one() } else { det(&im) };
        report.check(format!("type {t}"), &lhs, eta.value(i));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuiverDimension {
    pub v: Vec<u64>,
    pub w: Vec<u64>,
    pub cv: Vec<i64>,
    pub dim: u64,
}

/// `v = n δ`, `w` the unit vector at the trivial vertex, `dim = 2 v·w`.
pub fn quiver_dimension(data: &McKayData, n: usize) -> QuiverDimension {
    let v: Vec<u64> = data.marks.iter().map(|&m| m * n as u64).collect();
    let mut w = vec![0; v.len()];
    w[0] = 1;
    let cv = data
        .cartan
        .iter()
        .map(|row| row.iter().zip(&v).map(|(c, &x)| c * x as i64).sum())
        .collect();
    let dim = 2 * v.iter().zip(&w).map(|(a, b)| a * b).sum::<u64>();
    QuiverDimension { v, w, cv, dim }
}

/// Gram matrix of `⟨−,−⟩_ξ` on the irreducible characters of Γ_n, in the
/// order of the character table of the explicit group.
pub fn weighted_gram_wreath(g: &Arc<Group>, n: usize, budget: Budget) -> Result<Vec<Vec<CycNum>>> {
    let xi = mckay_data(g)?.xi;
    let fam = WreathFamily::new(g, budget);
    let lvl = fam.level(n);
    let w = build_wreath(g, n, budget)?;
    let irr: Vec<WreathClassFunction> = ClassFunction::irreducibles(w.group())?
        .iter()
        .map(|chi| WreathClassFunction::from_class_function(&lvl, &w, chi))
        .collect::<Result<_>>()?;
    irr.iter()
        .map(|a| irr.iter().map(|b| weighted_form(a, b, &xi)).collect())
        .collect()
}
