//! Finite groups given by multiplication tables (or an implicit law),
//! their conjugacy classes, exact character tables, and class functions.

mod builtin;
mod chartab;
mod classes;
mod classfn;
mod closure;
mod json;
mod modp;
pub mod perm;
mod table;

pub use builtin::{
    binary_dihedral, binary_icosahedral, binary_octahedral, binary_tetrahedral, cyclic,
    cyclic_sl2, direct_product, parse_group_spec, symmetric, trivial, Builtin,
};
pub use chartab::CharacterTable;
pub use classes::ConjugacyData;
pub use classfn::{convolution, inner_product, ClassFunction, StructureConstants};
pub use closure::{build_from_generators, det2, mat_mul, Mat2, DEFAULT_CLOSURE_BOUND};
pub use json::{CharacterTableJson, GroupJson};
pub use table::{FiniteGroup, GroupLaw};

use std::sync::{Arc, OnceLock};

use crate::error::Result;

/// A finite group together with its conjugacy data, plus lazily computed
/// structure constants and character table.
#[derive(Debug)]
pub struct Group {
    table: FiniteGroup,
    classes: ConjugacyData,
    structure: OnceLock<StructureConstants>,
    chartab: OnceLock<std::result::Result<CharacterTable, crate::Error>>,
}

impl Group {
    /// Computes conjugacy classes and wraps the group for sharing.
    pub fn new(table: FiniteGroup) -> Arc<Group> {
        let classes = ConjugacyData::compute(&table);
        Arc::new(Group {
            table,
            classes,
            structure: OnceLock::new(),
            chartab: OnceLock::new(),
        })
    }

    pub fn table(&self) -> &FiniteGroup {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn classes(&self) -> &ConjugacyData {
        &self.classes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Class-sum structure constants `K_a K_b = Σ_c n[a][b][c] K_c`.
    pub fn structure_constants(&self) -> &StructureConstants {
        self.structure
            .get_or_init(|| StructureConstants::compute(&self.table, &self.classes))
    }

    pub fn character_table(&self) -> Result<&CharacterTable> {
        self.chartab
            .get_or_init(|| CharacterTable::compute(self))
            .as_ref()
            .map_err(Clone::clone)
    }
}
