use std::fmt;
use std::sync::Arc;

use super::classes::ConjugacyData;
use super::closure::Mat2;
use super::table::FiniteGroup;
use super::Group;
use crate::error::{Error, Result};
use crate::exact::{rat, CycNum, Rational};

/// Largest group order accepted by [`convolution`].
pub const CONVOLUTION_BUDGET: usize = 100_000;

/// Class-sum structure constants: `K_a K_b = Σ_c n(a,b,c) K_c`.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    r: usize,
    data: Vec<u64>,
}

impl StructureConstants {
    /// `n(a,b,c) = #{(u,y) ∈ C_a × C_b : u y = x_c}` by one pass over the
    /// group for each class `c`.
    pub(crate) fn compute(g: &FiniteGroup, cls: &ConjugacyData) -> Self {
        let r = cls.len();
        let mut data = vec![0u64; r * r * r];
        for c in 0..r {
            let x = cls.class_reps[c];
            for y in 0..g.order() {
                let u = g.mul(x, g.inv(y));
                let (a, b) = (cls.class_of[u], cls.class_of[y]);
                data[(a * r + b) * r + c] += 1;
            }
        }
        StructureConstants { r, data }
    }

    #[inline]
    pub fn get(&self, a: usize, b: usize, c: usize) -> u64 {
        self.data[(a * self.r + b) * self.r + c]
    }
}

/// A function on conjugacy classes with exact values.
#[derive(Clone)]
pub struct ClassFunction {
    group: Arc<Group>,
    values: Vec<CycNum>,
}

impl fmt::Debug for ClassFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.values.iter().map(|v| v.to_string())).finish()
    }
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.group, &other.group) && self.values == other.values
    }
}

impl ClassFunction {
    pub fn new(group: &Arc<Group>, values: Vec<CycNum>) -> Result<Self> {
        if values.len() != group.num_classes() {
            return Err(Error::InvalidInput(format!(
                "class function needs {} values, got {}",
                group.num_classes(),
                values.len()
            )));
        }
        Ok(ClassFunction {
            group: group.clone(),
            values,
        })
    }

    pub fn from_fn(group: &Arc<Group>, f: impl FnMut(usize) -> CycNum) -> Self {
        ClassFunction {
            group: group.clone(),
            values: (0..group.num_classes()).map(f).collect(),
        }
    }

    pub fn zero(group: &Arc<Group>) -> Self {
        Self::from_fn(group, |_| CycNum::zero())
    }

    pub fn constant(group: &Arc<Group>, v: CycNum) -> Self {
        Self::from_fn(group, |_| v.clone())
    }

    /// Indicator of class `c`. Read as an element of the group algebra this
    /// is the class sum `K_c`, so the two bases have identical coordinates.
    pub fn indicator(group: &Arc<Group>, c: usize) -> Self {
        Self::from_fn(group, |k| if k == c { CycNum::one() } else { CycNum::zero() })
    }

    pub fn class_sum(group: &Arc<Group>, c: usize) -> Self {
        Self::indicator(group, c)
    }

    pub fn irreducible(group: &Arc<Group>, i: usize) -> Result<Self> {
        let t = group.character_table()?;
        let row = t
            .irreducibles
            .get(i)
            .ok_or_else(|| Error::IndexOutOfRange(format!("irreducible {}", i)))?;
        Self::new(group, row.clone())
    }

    pub fn irreducibles(group: &Arc<Group>) -> Result<Vec<Self>> {
        (0..group.character_table()?.len())
            .map(|i| Self::irreducible(group, i))
            .collect()
    }

    /// Character of the regular representation.
    pub fn regular(group: &Arc<Group>) -> Self {
        let n = group.order() as i64;
        Self::from_fn(group, |c| if c == 0 { CycNum::from_int(n) } else { CycNum::zero() })
    }

    /// Trace of the attached 2×2 matrix model.
    pub fn natural(group: &Arc<Group>) -> Result<Self> {
        let mats: &[Mat2] = group.table().matrices().ok_or(Error::MissingMatrixModel)?;
        let reps = &group.classes().class_reps;
        Ok(Self::from_fn(group, |c| {
            let m = &mats[reps[c]];
            &m[0][0] + &m[1][1]
        }))
    }

    pub fn group(&self) -> &Arc<Group> {
        &self.group
    }

    pub fn values(&self) -> &[CycNum] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &CycNum {
        &self.values[c]
    }

    pub fn at_element(&self, x: usize) -> &CycNum {
        &self.values[self.group.classes().class_of[x]]
    }

    pub fn into_values(self) -> Vec<CycNum> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(CycNum::is_zero)
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    fn zip(&self, other: &Self, f: impl Fn(&CycNum, &CycNum) -> CycNum) -> Result<Self> {
        self.same_group(other)?;
        Ok(ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a - b)
    }

    /// Pointwise product (tensor product of characters).
    pub fn pointwise(&self, other: &Self) -> Result<Self> {
        self.zip(other, |a, b| a * b)
    }

    pub fn scale(&self, s: &CycNum) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v * s).collect(),
        }
    }

    pub fn scale_rational(&self, s: &Rational) -> Self {
        ClassFunction {
            group: self.group.clone(),
            values: self.values.iter().map(|v| v.scale(s)).collect(),
        }
    }

    /// `x ↦ f(x⁻¹)`
    pub fn dual(&self) -> Self {
        let inv = &self.group.classes().inverse_class;
        Self::from_fn(&self.group, |c| self.values[inv[c]].clone())
    }

    /// Coefficients of `f` in the basis of irreducible characters.
    pub fn decompose(&self) -> Result<Vec<CycNum>> {
        Self::irreducibles(&self.group)?
            .iter()
            .map(|chi| inner_product(self, chi))
            .collect()
    }
}

/// `⟨f, g⟩ = (1/|G|) Σ_x f(x) g(x⁻¹)`
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<CycNum> {
    f.same_group(g)?;
    let cls = f.group.classes();
    let n = rat(f.group.order() as i64);
    let mut acc = CycNum::zero();
    for c in 0..cls.len() {
        let t = &f.values[c] * &g.values[cls.inverse_class[c]];
        acc += t.scale(&(rat(cls.class_sizes[c] as i64) / &n));
    }
    Ok(acc)
}

/// `(f * g)(x) = Σ_y f(x y⁻¹) g(y)`
pub fn convolution(f: &ClassFunction, g: &ClassFunction) -> Result<ClassFunction> {
    f.same_group(g)?;
    let grp = &f.group;
    if grp.order() > CONVOLUTION_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "convolution".into(),
            size: grp.order(),
            budget: CONVOLUTION_BUDGET,
        });
    }
    let sc = grp.structure_constants();
    let r = grp.num_classes();
    let nz: Vec<(usize, usize, CycNum)> = (0..r)
        .flat_map(|a| (0..r).map(move |b| (a, b)))
        .filter(|&(a, b)| !f.values[a].is_zero() && !g.values[b].is_zero())
        .map(|(a, b)| (a, b, &f.values[a] * &g.values[b]))
        .collect();
    Ok(ClassFunction::from_fn(grp, |c| {
        let mut acc = CycNum::zero();
        for (a, b, v) in &nz {
            let k = sc.get(*a, *b, c);
            if k != 0 {
                acc += v.scale(&rat(k as i64));
            }
        }
        acc
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{binary_dihedral, cyclic, symmetric};

    #[test]
    fn s3_class_sums() {
        let g = Group::new(symmetric(3).unwrap());
        let k2 = ClassFunction::class_sum(&g, 1);
        let prod = convolution(&k2, &k2).unwrap();
        let want = ClassFunction::class_sum(&g, 0)
            .scale_rational(&rat(3))
            .add(&ClassFunction::class_sum(&g, 2).scale_rational(&rat(3)))
            .unwrap();
        assert_eq!(prod, want);
        let delta = ClassFunction::indicator(&g, 0);
        assert_eq!(convolution(&k2, &delta).unwrap(), k2);
    }

    #[test]
    fn natural_rep_norms() {
        let q8 = Group::new(binary_dihedral(2).unwrap());
        let q = ClassFunction::natural(&q8).unwrap();
        assert_eq!(inner_product(&q, &q).unwrap(), CycNum::one());
        let z4 = Group::new(cyclic(4).unwrap());
        let q = ClassFunction::natural(&z4).unwrap();
        assert_eq!(inner_product(&q, &q).unwrap(), CycNum::from_int(2));
        let s3 = Group::new(symmetric(3).unwrap());
        assert!(matches!(ClassFunction::natural(&s3), Err(Error::MissingMatrixModel)));
    }

    #[test]
    fn mismatch() {
        let a = Group::new(cyclic(2).unwrap());
        let b = Group::new(cyclic(2).unwrap());
        let f = ClassFunction::regular(&a);
        let g = ClassFunction::regular(&b);
        assert!(matches!(inner_product(&f, &g), Err(Error::GroupMismatch)));
    }

    #[test]
    fn character_tables() {
        let z2 = Group::new(cyclic(2).unwrap());
        let t = z2.character_table().unwrap();
        assert_eq!(t.irreducibles[1], vec![CycNum::one(), CycNum::from_int(-1)]);
        let s3 = Group::new(symmetric(3).unwrap());
        let t = s3.character_table().unwrap();
        assert_eq!(t.degrees, vec![1, 1, 2]);
        assert!(t.irreducibles[2][1].is_zero());
        let q8 = Group::new(binary_dihedral(2).unwrap());
        assert_eq!(q8.character_table().unwrap().degrees, vec![1, 1, 1, 1, 2]);
        let z3 = Group::new(cyclic(3).unwrap());
        let irr = ClassFunction::irreducibles(&z3).unwrap();
        for (i, a) in irr.iter().enumerate() {
            for (j, b) in irr.iter().enumerate() {
                let want = if i == j { CycNum::one() } else { CycNum::zero() };
                assert_eq!(inner_product(a, b).unwrap(), want);
            }
        }
    }
}
