use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::{CharacterTable, FiniteGroup, Group, Mat2};
use crate::error::{Error, Result};
use crate::exact::CycNum;

/// `{"order": n, "mult": [[...]], "labels": [...], "matrices": [...]}`
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupJson {
    pub order: usize,
    pub mult: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<[[CycNum; 2]; 2]>>,
}

impl GroupJson {
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson {
            order: g.order(),
            mult: g.mult_rows(),
            labels: g.labels().map(<[String]>::to_vec),
            matrices: g.matrices().map(<[Mat2]>::to_vec),
        }
    }

    /// Validates the table (and the matrix model, if present).
    pub fn into_group(self) -> Result<FiniteGroup> {
        if self.mult.len() != self.order {
            return Err(Error::InvalidInput("order disagrees with table size".into()));
        }
        let g = FiniteGroup::from_table(self.mult, self.labels)?;
        match self.matrices {
            None => Ok(g),
            Some(ms) => {
                if ms.len() != g.order() {
                    return Err(Error::InvalidInput("matrix count differs from order".into()));
                }
                for m in &ms {
                    if super::det2(m) != CycNum::one() {
                        return Err(Error::InvalidInput("matrix with determinant ≠ 1".into()));
                    }
                }
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        if super::mat_mul(&ms[a], &ms[b]) != ms[g.mul(a, b)] {
                            return Err(Error::InvalidInput(
                                "matrices disagree with the multiplication table".into(),
                            ));
                        }
                    }
                }
                Ok(g.with_matrices(ms))
            }
        }
    }
}

/// Character table with class data, for `--emit`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterTableJson {
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub centralizer_orders: Vec<usize>,
    pub degrees: Vec<u64>,
    pub characters: Vec<Vec<CycNum>>,
}

impl CharacterTableJson {
    pub fn new(group: &Arc<Group>, t: &CharacterTable) -> Self {
        let cls = group.classes();
        CharacterTableJson {
            class_reps: cls.class_reps.clone(),
            class_sizes: cls.class_sizes.clone(),
            centralizer_orders: cls.centralizer_orders.clone(),
            degrees: t.degrees.clone(),
            characters: t.irreducibles.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groups::binary_dihedral;

    #[test]
    fn roundtrip() {
        let g = binary_dihedral(3).unwrap();
        let js = serde_json::to_string(&GroupJson::from_group(&g)).unwrap();
        let back: GroupJson = serde_json::from_str(&js).unwrap();
        let h = back.into_group().unwrap();
        assert_eq!(h.mult_rows(), g.mult_rows());
        assert_eq!(h.matrices().unwrap().len(), 12);
    }
}
