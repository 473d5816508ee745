use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use super::closure::{build_from_generators, Mat2, DEFAULT_CLOSURE_BOUND};
use super::perm::PermLaw;
use super::table::FiniteGroup;
use crate::error::{Error, Result};
use crate::exact::{ratio, CycNum};

/// Built-in groups addressable from the command line, e.g. `cyclic:4`,
/// `binary-dihedral:3`, `binary-icosahedral`, `symmetric:3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Builtin {
    Trivial,
    Cyclic(u32),
    BinaryDihedral(u32),
    BinaryTetrahedral,
    BinaryOctahedral,
    BinaryIcosahedral,
    Symmetric(usize),
}

impl Builtin {
    pub fn build(self) -> Result<FiniteGroup> {
        match self {
            Builtin::Trivial => Ok(trivial()),
            Builtin::Cyclic(k) => cyclic(k),
            Builtin::BinaryDihedral(m) => binary_dihedral(m),
            Builtin::BinaryTetrahedral => binary_tetrahedral(),
            Builtin::BinaryOctahedral => binary_octahedral(),
            Builtin::BinaryIcosahedral => binary_icosahedral(),
            Builtin::Symmetric(n) => symmetric(n),
        }
    }

    /// Whether the group comes with its defining representation in SL₂(ℂ).
    pub fn is_sl2(self) -> bool {
        !matches!(self, Builtin::Symmetric(n) if n > 1)
    }
}

impl fmt::Display for Builtin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Builtin::Trivial => write!(f, "trivial"),
            Builtin::Cyclic(k) => write!(f, "cyclic:{}", k),
            Builtin::BinaryDihedral(m) => write!(f, "binary-dihedral:{}", m),
            Builtin::BinaryTetrahedral => write!(f, "binary-tetrahedral"),
            Builtin::BinaryOctahedral => write!(f, "binary-octahedral"),
            Builtin::BinaryIcosahedral => write!(f, "binary-icosahedral"),
            Builtin::Symmetric(n) => write!(f, "symmetric:{}", n),
        }
    }
}

impl FromStr for Builtin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let s = s.strip_prefix("builtin:").unwrap_or(s);
        let (name, arg) = match s.split_once(':') {
            Some((a, b)) => (a, Some(b)),
            None => (s, None),
        };
        let num = |what: &str| -> Result<u64> {
            arg.ok_or_else(|| Error::InvalidInput(format!("{} needs a parameter", what)))?
                .parse::<u64>()
                .map_err(|e| Error::InvalidInput(format!("bad parameter for {}: {}", what, e)))
        };
        let no_arg = |b: Builtin| -> Result<Builtin> {
            match arg {
                None => Ok(b),
                Some(_) => Err(Error::InvalidInput(format!("{} takes no parameter", name))),
            }
        };
        match name {
            "trivial" => no_arg(Builtin::Trivial),
            "cyclic" | "Z" => Ok(Builtin::Cyclic(num("cyclic")? as u32)),
            "binary-dihedral" | "dicyclic" => Ok(Builtin::BinaryDihedral(num("binary-dihedral")? as u32)),
            "quaternion" => no_arg(Builtin::BinaryDihedral(2)),
            "binary-tetrahedral" => no_arg(Builtin::BinaryTetrahedral),
            "binary-octahedral" => no_arg(Builtin::BinaryOctahedral),
            "binary-icosahedral" => no_arg(Builtin::BinaryIcosahedral),
            "symmetric" | "S" => Ok(Builtin::Symmetric(num("symmetric")? as usize)),
            _ => Err(Error::InvalidInput(format!("unknown built-in group '{}'", s))),
        }
    }
}

/// Parses a built-in group name and constructs it.
pub fn parse_group_spec(s: &str) -> Result<FiniteGroup> {
    s.parse::<Builtin>()?.build()
}

pub fn trivial() -> FiniteGroup {
    FiniteGroup::from_flat(1, vec![0], None, None, false).expect("trivial group")
}

fn c(x: i64) -> CycNum {
    CycNum::from_int(x)
}

fn half(x: CycNum) -> CycNum {
    x.scale(&ratio(1, 2))
}

fn diag_zeta(n: u32) -> Mat2 {
    [[CycNum::zeta(n, 1), c(0)], [c(0), CycNum::zeta(n, -1)]]
}

fn quat_j() -> Mat2 {
    [[c(0), c(1)], [c(-1), c(0)]]
}

fn quat_i() -> Mat2 {
    diag_zeta(4)
}

/// (1 + i + j + k)/2
fn quat_omega() -> Mat2 {
    let i = CycNum::zeta(4, 1);
    [
        [half(c(1) + &i), half(c(1) + &i)],
        [half(c(-1) + &i), half(c(1) - &i)],
    ]
}

/// ℤ/k as the diagonal subgroup diag(ζ_k, ζ_k⁻¹) of SL₂.
pub fn cyclic_sl2(k: u32) -> Result<Vec<Mat2>> {
    if k == 0 {
        return Err(Error::InvalidInput("cyclic group needs k ≥ 1".into()));
    }
    Ok(vec![diag_zeta(k)])
}

pub fn cyclic(k: u32) -> Result<FiniteGroup> {
    build_from_generators(&cyclic_sl2(k)?, DEFAULT_CLOSURE_BOUND.max(k as usize))
}

/// Binary dihedral group of order 4m (m ≥ 2; m = 2 is the quaternion group).
pub fn binary_dihedral(m: u32) -> Result<FiniteGroup> {
    if m < 2 {
        return Err(Error::InvalidInput("binary dihedral group needs m ≥ 2".into()));
    }
    build_from_generators(&[diag_zeta(2 * m), quat_j()], DEFAULT_CLOSURE_BOUND.max(4 * m as usize))
}

pub fn binary_tetrahedral() -> Result<FiniteGroup> {
    build_from_generators(&[quat_i(), quat_j(), quat_omega()], DEFAULT_CLOSURE_BOUND)
}

pub fn binary_octahedral() -> Result<FiniteGroup> {
    build_from_generators(
        &[quat_i(), quat_j(), quat_omega(), diag_zeta(8)],
        DEFAULT_CLOSURE_BOUND,
    )
}

pub fn binary_icosahedral() -> Result<FiniteGroup> {
    // φ⁻¹ = ζ₅ + ζ₅⁴, φ = 1 + φ⁻¹; generator (φ + φ⁻¹ i + j)/2
    let phi_inv = CycNum::zeta(5, 1) + CycNum::zeta(5, 4);
    let phi = c(1) + &phi_inv;
    let i = CycNum::zeta(4, 1);
    let g = [
        [half(&phi + &(&phi_inv * &i)), half(c(1))],
        [half(c(-1)), half(&phi - &(&phi_inv * &i))],
    ];
    build_from_generators(&[quat_i(), quat_j(), quat_omega(), g], DEFAULT_CLOSURE_BOUND)
}

/// Tables are materialised up to this order; larger groups use an implicit law.
const TABLE_LIMIT: usize = 2048;

/// Symmetric group S_n; permutations ranked lexicographically, identity first.
pub fn symmetric(n: usize) -> Result<FiniteGroup> {
    let law = PermLaw::new(n)?;
    let order = law.order_usize();
    let labels = Some((0..order).map(|r| law.label(r)).collect());
    if order <= TABLE_LIMIT {
        let mut flat = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                flat.push(law.mul_ranks(a, b) as u32);
            }
        }
        FiniteGroup::from_flat(order, flat, labels, None, false)
    } else {
        Ok(FiniteGroup::from_law(Arc::new(law), labels))
    }
}

/// G × H with element (g, h) at index g·|H| + h.
pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
    let (ng, nh) = (g.order(), h.order());
    let n = ng * nh;
    if n > TABLE_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "direct product table".into(),
            size: n,
            budget: TABLE_LIMIT,
        });
    }
    let mut flat = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            let x = g.mul(a / nh, b / nh);
            let y = h.mul(a % nh, b % nh);
            flat.push((x * nh + y) as u32);
        }
    }
    let labels = match (g.labels(), h.labels()) {
        (Some(lg), Some(lh)) => Some(
            (0..n)
                .map(|a| format!("({},{})", lg[a / nh], lh[a % nh]))
                .collect(),
        ),
        _ => None,
    };
    FiniteGroup::from_flat(n, flat, labels, None, false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::closure::det2;

    #[test]
    fn orders() {
        assert_eq!(cyclic(7).unwrap().order(), 7);
        assert_eq!(binary_dihedral(2).unwrap().order(), 8);
        assert_eq!(binary_dihedral(3).unwrap().order(), 12);
        assert_eq!(binary_tetrahedral().unwrap().order(), 24);
        assert_eq!(binary_octahedral().unwrap().order(), 48);
        assert_eq!(symmetric(4).unwrap().order(), 24);
        assert_eq!(direct_product(&cyclic(2).unwrap(), &cyclic(3).unwrap()).unwrap().order(), 6);
    }

    #[test]
    fn icosahedral() {
        let g = binary_icosahedral().unwrap();
        assert_eq!(g.order(), 120);
        assert_eq!(g.exponent(), 60);
        assert!(g.matrices().unwrap().iter().all(|m| det2(m) == CycNum::one()));
    }

    #[test]
    fn parse_names() {
        assert_eq!("builtin:cyclic:2".parse::<Builtin>().unwrap(), Builtin::Cyclic(2));
        assert_eq!("binary-dihedral:3".parse::<Builtin>().unwrap(), Builtin::BinaryDihedral(3));
        assert!("binary-icosahedral:2".parse::<Builtin>().is_err());
        assert!("nonsense".parse::<Builtin>().is_err());
        for b in [Builtin::Cyclic(5), Builtin::BinaryOctahedral, Builtin::Symmetric(3)] {
            assert_eq!(b.to_string().parse::<Builtin>().unwrap(), b);
        }
    }
}
