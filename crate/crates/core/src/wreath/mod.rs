//! Wreath products Γ_n = Γⁿ ⋊ S_n: partitions and types, explicit group
//! elements, class functions indexed by type, brute-force induction and
//! restriction, and the Heisenberg operators p_{±k}(γ).

mod classfn;
mod element;
mod heisenberg;
mod partition;
mod types;

pub use classfn::{
    epsilon_n, eta_eps, eta_n, sigma_n, weighted_form, wreath_inner_product, WreathClassFunction,
};
pub use heisenberg::verify_heisenberg;
pub use element::{build_wreath, WreathElement, WreathGroup, WreathLaw};
pub use partition::{partitions, Partition};
pub use types::{enumerate_types, TypeFunction, TypeJson, WreathLevel};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Budget, Error, Result};
use crate::groups::Group;

/// All levels Γ_0, Γ_1, … over one base group, with cached type indices,
/// explicit groups and induction/restriction tallies.
#[derive(Debug)]
pub struct WreathFamily {
    base: Arc<Group>,
    budget: Budget,
    levels: Mutex<HashMap<usize, Arc<WreathLevel>>>,
    groups: Mutex<HashMap<usize, Arc<WreathGroup>>>,
    ind_cache: Mutex<HashMap<(usize, usize), Arc<heisenberg::InductionCounts>>>,
    res_cache: Mutex<HashMap<(usize, usize), Arc<heisenberg::RestrictionCounts>>>,
    sizes: Mutex<HashMap<usize, Arc<Vec<u64>>>>,
}

impl WreathFamily {
    pub fn new(base: &Arc<Group>, budget: Budget) -> Self {
        WreathFamily {
            base: base.clone(),
            budget,
            levels: Mutex::default(),
            groups: Mutex::default(),
            ind_cache: Mutex::default(),
            res_cache: Mutex::default(),
            sizes: Mutex::default(),
        }
    }

    pub fn base(&self) -> &Arc<Group> {
        &self.base
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn level(&self, n: usize) -> Arc<WreathLevel> {
        self.levels
            .lock()
            .unwrap()
            .entry(n)
            .or_insert_with(|| Arc::new(WreathLevel::new(&self.base, n)))
            .clone()
    }

    /// Γ_n as an explicit group (subject to the budget).
    pub fn group(&self, n: usize) -> Result<Arc<WreathGroup>> {
        if let Some(g) = self.groups.lock().unwrap().get(&n) {
            return Ok(g.clone());
        }
        let g = Arc::new(WreathGroup::new(&self.level(n), self.budget)?);
        self.groups.lock().unwrap().insert(n, g.clone());
        Ok(g)
    }

    /// The vacuum vector, the trivial class function on Γ_0.
    pub fn vacuum(&self) -> WreathClassFunction {
        WreathClassFunction::trivial(&self.level(0))
    }

    fn check(&self, f: &WreathClassFunction) -> Result<()> {
        if Arc::ptr_eq(f.level().base(), &self.base) {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }
}
