//! The `d`-blow-up `P(x, d)` of a tree poset rooted at `x`.
//!
//! An element at Hasse distance `ρ` from the root is replaced by `d^ρ`
//! replicas. The replicas of a child `u` of `v` come in groups of `d`, one
//! group hanging from each replica of `v` with the orientation of the cover
//! `uv`. Replicas are addressed by the path of 1-based indices chosen on the
//! way down from the root, so `u[2.1]` is the first replica of `u` in the
//! group under the second replica of its parent.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poset::{Poset, RootedTree};

/// Largest blow-up materialized as a [`Poset`].
pub const BLOWUP_CAP: u64 = 8192;

/// Largest blow-up described by a [`BlowupShape`].
pub const SHAPE_CAP: u64 = 1 << 22;

/// Replica structure of `P(x, d)` without the derived order.
///
/// Replicas are listed breadth-first: originals in `O_P` order, and the
/// replicas of one original by parent replica, then index within the group.
/// Every replica therefore comes after its parent, and each group of `d` is
/// contiguous.
#[derive(Debug, Clone)]
pub struct BlowupShape {
    pub base: Poset,
    pub root: usize,
    pub d: usize,
    pub tree: RootedTree,
    /// Original element of each replica.
    pub origin: Vec<usize>,
    /// Index path of each replica (empty for the root).
    pub path: Vec<Vec<u32>>,
    /// Replica parent (`usize::MAX` for the root).
    pub parent: Vec<usize>,
}

impl BlowupShape {
    pub fn new(base: &Poset, root: usize, d: usize) -> Result<BlowupShape> {
        let tree = check_tree(base, root)?;
        if d == 0 {
            return Err(Error::InvalidParameter(String::from("blow-up factor must be at least 1")));
        }
        let size = blow_up_size_u64(base, root, d)?;
        if size > SHAPE_CAP {
            return Err(Error::capacity("blow-up size", size, SHAPE_CAP));
        }
        let mut origin = vec![root];
        let mut path: Vec<Vec<u32>> = vec![Vec::new()];
        let mut parent = vec![usize::MAX];
        let mut replicas: Vec<Vec<usize>> = vec![Vec::new(); base.len()];
        replicas[root].push(0);
        for &u in tree.order.iter().skip(1) {
            let pu = tree.parent[u];
            for pi in 0..replicas[pu].len() {
                let pr = replicas[pu][pi];
                for i in 1..=d as u32 {
                    let id = origin.len();
                    let mut p = path[pr].clone();
                    p.push(i);
                    origin.push(u);
                    path.push(p);
                    parent.push(pr);
                    replicas[u].push(id);
                }
            }
        }
        Ok(BlowupShape {
            base: base.clone(),
            root,
            d,
            tree,
            origin,
            path,
            parent,
        })
    }

    pub fn len(&self) -> usize {
        self.origin.len()
    }

    pub fn is_empty(&self) -> bool {
        self.origin.is_empty()
    }

    /// Replica `r` lies above its parent replica.
    pub fn upward(&self, r: usize) -> bool {
        self.tree.upward[self.origin[r]]
    }

    /// Replicas of `u` in blow-up order.
    pub fn replicas_of(&self, u: usize) -> Vec<usize> {
        (0..self.len()).filter(|&r| self.origin[r] == u).collect()
    }

    /// The group of `d` replicas of `child` hanging from replica `p`.
    pub fn group(&self, p: usize, child: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.parent[r] == p && self.origin[r] == child)
            .collect()
    }

    /// Replica choice whose restriction is a copy of the base: the first
    /// replica of every element in each group.
    pub fn first_replicas(&self) -> Vec<usize> {
        (0..self.len()).filter(|&r| self.path[r].iter().all(|&i| i == 1)).collect()
    }

    pub fn label(&self, r: usize) -> String {
        let name = self.base.label(self.origin[r]);
        if self.path[r].is_empty() {
            String::from(name)
        } else {
            let idx: Vec<String> = self.path[r].iter().map(|i| format!("{i}")).collect();
            format!("{name}[{}]", idx.join("."))
        }
    }

    /// Cover pairs `(lower, upper)` of the blow-up.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        (1..self.len())
            .map(|r| if self.upward(r) { (self.parent[r], r) } else { (r, self.parent[r]) })
            .collect()
    }
}

/// A materialized blow-up: its shape and the poset it spans.
#[derive(Debug, Clone)]
pub struct BlowupPoset {
    pub shape: BlowupShape,
    /// The blow-up itself; element `0` is the root replica.
    pub poset: Poset,
}

impl BlowupPoset {
    pub fn len(&self) -> usize {
        self.shape.len()
    }

    pub fn is_empty(&self) -> bool {
        self.shape.is_empty()
    }
}

fn check_tree(base: &Poset, root: usize) -> Result<RootedTree> {
    if root >= base.len() {
        return Err(Error::UnknownElement(format!("#{root}")));
    }
    base.rooted(root)
}

/// `Σ_u d^ρ(u)` computed exactly without building anything.
pub fn blow_up_size(base: &Poset, root: usize, d: usize) -> Result<BigUint> {
    let tree = check_tree(base, root)?;
    if d == 0 {
        return Ok(BigUint::one());
    }
    let mut total = BigUint::zero();
    let base_d = BigUint::from(d);
    for &dist in &tree.dist {
        total += base_d.pow(dist as u32);
    }
    Ok(total)
}

/// Saturating `u64` version of [`blow_up_size`].
pub fn blow_up_size_u64(base: &Poset, root: usize, d: usize) -> Result<u64> {
    let size = blow_up_size(base, root, d)?;
    Ok(u64::try_from(&size).unwrap_or(u64::MAX))
}

/// Materializes `P(x, d)`; `d = 1` yields a copy of the base.
pub fn blow_up(base: &Poset, root: usize, d: usize) -> Result<BlowupPoset> {
    check_tree(base, root)?;
    let size = blow_up_size_u64(base, root, d.max(1))?;
    if size > BLOWUP_CAP {
        return Err(Error::capacity("blow-up size", size, BLOWUP_CAP));
    }
    let shape = BlowupShape::new(base, root, d)?;
    let labels = (0..shape.len()).map(|r| shape.label(r)).collect();
    let poset = Poset::from_indices(labels, shape.covers())?;
    Ok(BlowupPoset { shape, poset })
}
