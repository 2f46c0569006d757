//! Definitional check of almost split sequences against a complete list of indecomposables.

use crate::decompose::{find_iso_indecomposable, is_isomorphic};
use crate::error::Result;
use crate::homological::{radical_endos, ShortExact};
use crate::rep::{direct_sum, hom_basis, maps_as_columns, ModMap, Rep};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
    Sporadic,
}

/// For one test object Y: the dimension of the radical maps checked and whether all factor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub object: usize,
    pub rad_dim: usize,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct Certificate {
    pub non_split: bool,
    pub right: Vec<Witness>,
    pub left: Vec<Witness>,
    pub method: Method,
    /// Set when the inventory is known to be incomplete (knitting stopped at a cap).
    pub incomplete_inventory: bool,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.non_split
            && !self.incomplete_inventory
            && self.right.iter().all(|w| w.ok)
            && self.left.iter().all(|w| w.ok)
    }
}

/// Radical maps X → Y between indecomposables: all maps, or φ ∘ rad End(X) when φ: X ≅ Y.
fn radical_maps(x: &Rep, y: &Rep) -> Result<Vec<ModMap>> {
    match find_iso_indecomposable(x, y) {
        Some(phi) => Ok(radical_endos(x)?.iter().map(|r| r.then(&phi)).collect()),
        None => Ok(hom_basis(x, y)),
    }
}

/// Whether span(`sub`) ⊆ span(`sup`), all maps of one shape with flattened length `len`.
fn span_contains(sup: &[ModMap], sub: &[ModMap], len: usize, field: crate::field::Field) -> bool {
    if sub.is_empty() {
        return true;
    }
    let a = maps_as_columns(sup, field, len);
    let b = maps_as_columns(sub, field, len);
    a.hstack(&b).rank() == a.rank()
}

fn flat_len(x: &Rep, y: &Rep) -> usize {
    x.dims.iter().zip(&y.dims).map(|(a, b)| a * b).sum()
}

/// Check non-splitness and the source/sink factorization property against every inventory object.
pub fn oracle_verify(seq: &ShortExact, inventory: &[Rep], method: Method) -> Result<Certificate> {
    let f = seq.mid.field();
    let sum = direct_sum(&seq.mid.alg, &[seq.left.clone(), seq.right.clone()]).rep;
    let non_split = seq.is_exact() && !is_isomorphic(&seq.mid, &sum)?;
    let mut right = Vec::new();
    let mut left = Vec::new();
    for (i, y) in inventory.iter().enumerate() {
        let rad = radical_maps(y, &seq.right)?;
        let through: Vec<ModMap> = hom_basis(y, &seq.mid).iter().map(|g| g.then(&seq.def)).collect();
        let ok = span_contains(&through, &rad, flat_len(y, &seq.right), f);
        right.push(Witness { object: i, rad_dim: rad.len(), ok });

        let rad = radical_maps(&seq.left, y)?;
        let through: Vec<ModMap> = hom_basis(&seq.mid, y).iter().map(|g| seq.inf.then(g)).collect();
        let ok = span_contains(&through, &rad, flat_len(&seq.left, y), f);
        left.push(Witness { object: i, rad_dim: rad.len(), ok });
    }
    Ok(Certificate { non_split, right, left, method, incomplete_inventory: false })
}

/// Brute-force left term of the almost split sequence ending at `inventory[z]`: the first
/// candidate whose Ext¹-socle class realizes a sequence with middle term in the category that
/// passes `oracle_verify`. Makes no use of any translate formula.
pub fn oracle_left(
    inventory: &[Rep],
    z: usize,
    contains: impl Fn(&Rep) -> Result<bool>,
) -> Result<Option<(usize, ShortExact)>> {
    for (x, cand) in inventory.iter().enumerate() {
        let Some((e, cls)) = crate::homological::ar_class(&inventory[z], cand)? else { continue };
        let seq = e.realize(&cls);
        if !contains(&seq.mid)? {
            continue;
        }
        if oracle_verify(&seq, inventory, Method::Oracle)?.passed() {
            return Ok(Some((x, seq)));
        }
    }
    Ok(None)
}
