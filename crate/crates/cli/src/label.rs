//! Human-readable names for objects, built level by level from a named inventory.

use arq_core::algebra::Algebra;
use arq_core::decompose::{decompose, find_iso_indecomposable};
use arq_core::morphcat::MorObj;
use arq_core::rep::Rep;
use arq_core::Result;

/// Dimension vector as a short name: digits run together when all are below ten.
pub fn dims_name(r: &Rep) -> String {
    if r.dims.iter().all(|&d| d < 10) {
        r.dims.iter().map(|d| d.to_string()).collect()
    } else {
        format!("[{}]", r.dims.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(","))
    }
}

/// Names indecomposables by lookup in an inventory and sums by their sorted summand names.
pub struct Labeler {
    inventory: Vec<Rep>,
    names: Vec<String>,
}

impl Labeler {
    pub fn new(inventory: Vec<Rep>, names: Vec<String>) -> Labeler {
        Labeler { inventory, names }
    }

    pub fn name_of(&self, ind: &Rep) -> String {
        self.inventory
            .iter()
            .position(|y| y.dims == ind.dims && find_iso_indecomposable(y, ind).is_some())
            .map_or_else(|| format!("?{}", dims_name(ind)), |i| self.names[i].clone())
    }

    pub fn module(&self, m: &Rep) -> Result<String> {
        if m.is_zero() {
            return Ok("0".into());
        }
        let mut parts: Vec<String> = decompose(m)?.summands.iter().map(|s| self.name_of(&s.rep)).collect();
        parts.sort();
        Ok(parts.join("+"))
    }

    pub fn morobj(&self, f: &MorObj) -> Result<String> {
        Ok(format!("({}->{})", self.module(f.source())?, self.module(f.target())?))
    }

    /// Names for T₂-modules over `base`, read as maps between inventory objects.
    pub fn t2_names(&self, base: &Algebra, objects: &[Rep]) -> Result<Vec<String>> {
        objects.iter().map(|x| self.morobj(&MorObj::from_t2(base, x))).collect()
    }
}
