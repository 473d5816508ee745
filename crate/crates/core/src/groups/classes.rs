use super::table::FiniteGroup;

/// Conjugacy classes. Class 0 is always the identity class; the others are
/// numbered by their smallest element index.
#[derive(Clone, Debug)]
pub struct ConjugacyData {
    pub class_of: Vec<usize>,
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    /// ζ_c, the order of the centralizer of a representative.
    pub centralizer_orders: Vec<usize>,
    pub inverse_class: Vec<usize>,
    pub members: Vec<Vec<usize>>,
}

impl ConjugacyData {
    pub fn compute(g: &FiniteGroup) -> Self {
        let n = g.order();
        let gens = g.generators();
        let mut class_of = vec![usize::MAX; n];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let order = std::iter::once(g.identity()).chain((0..n).filter(|&x| x != g.identity()));
        for start in order {
            if class_of[start] != usize::MAX {
                continue;
            }
            let c = members.len();
            class_of[start] = c;
            let mut orbit = vec![start];
            let mut i = 0;
            while i < orbit.len() {
                let h = orbit[i];
                for &s in gens {
                    let k = g.conj(s, h);
                    if class_of[k] == usize::MAX {
                        class_of[k] = c;
                        orbit.push(k);
                    }
                }
                i += 1;
            }
            orbit.sort_unstable();
            members.push(orbit);
        }
        let class_reps: Vec<usize> = members.iter().map(|m| m[0]).collect();
        let class_sizes: Vec<usize> = members.iter().map(Vec::len).collect();
        let centralizer_orders = class_sizes.iter().map(|&s| n / s).collect();
        let inverse_class = class_reps.iter().map(|&r| class_of[g.inv(r)]).collect();
        ConjugacyData {
            class_of,
            class_reps,
            class_sizes,
            centralizer_orders,
            inverse_class,
            members,
        }
    }

    pub fn len(&self) -> usize {
        self.class_reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_reps.is_empty()
    }

    /// Class of `x^k` for `x` in class `c`.
    pub fn power_class(&self, g: &FiniteGroup, c: usize, k: usize) -> usize {
        self.class_of[g.pow(self.class_reps[c], k)]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::{binary_dihedral, cyclic, symmetric};

    #[test]
    fn small_groups() {
        let z3 = ConjugacyData::compute(&cyclic(3).unwrap());
        assert_eq!(z3.class_sizes, vec![1, 1, 1]);
        let s3 = ConjugacyData::compute(&symmetric(3).unwrap());
        assert_eq!(s3.class_sizes, vec![1, 3, 2]);
        let q8 = ConjugacyData::compute(&binary_dihedral(2).unwrap());
        assert_eq!(q8.len(), 5);
        for d in [z3, s3, q8] {
            let n: usize = d.class_sizes.iter().sum();
            for c in 0..d.len() {
                assert_eq!(d.class_sizes[c] * d.centralizer_orders[c], n);
                assert_eq!(d.inverse_class[d.inverse_class[c]], c);
            }
        }
    }
}
