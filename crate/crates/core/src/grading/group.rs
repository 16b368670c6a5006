use std::fmt;

use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r x Z_{n1} x ... x Z_{nk}`.
///
/// Coordinates are ordered free part first, then the torsion factors in the
/// order given.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    free_rank: usize,
    torsion_orders: Vec<u64>,
}

/// An element of a [`GroupSpec`] in canonical form: torsion coordinates are
/// reduced to `[0, n)`.
///
/// The derived ordering is lexicographic on the coordinate vector, which is
/// the tie-break used for every "first counterexample" in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement(Vec<i64>);

impl GroupSpec {
    pub fn new(free_rank: usize, torsion_orders: Vec<u64>) -> Result<Self> {
        if let Some(bad) = torsion_orders.iter().find(|&&n| n < 2) {
            return Err(Error::Malformed(format!("torsion order {bad} is below 2")));
        }
        Ok(Self { free_rank, torsion_orders })
    }

    /// `Z_2^k`, the grading group of every finite example in the corpus.
    pub fn z2_power(k: usize) -> Self {
        Self { free_rank: 0, torsion_orders: vec![2; k] }
    }

    pub fn free(rank: usize) -> Self {
        Self { free_rank: rank, torsion_orders: Vec::new() }
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_orders(&self) -> &[u64] {
        &self.torsion_orders
    }

    /// Number of coordinates (equivalently, of generators).
    pub fn rank(&self) -> usize {
        self.free_rank + self.torsion_orders.len()
    }

    /// Order of generator `i`, `None` for free generators.
    pub fn order_of(&self, i: usize) -> Option<u64> {
        i.checked_sub(self.free_rank).map(|t| self.torsion_orders[t])
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Builds the canonical element with the given integer lift.
    pub fn element(&self, coords: impl Into<Vec<i64>>) -> Result<GroupElement> {
        let mut coords = coords.into();
        self.check_len(coords.len())?;
        for (i, c) in coords.iter_mut().enumerate() {
            if let Some(n) = self.order_of(i) {
                *c = c.rem_euclid(n as i64);
            }
        }
        Ok(GroupElement(coords))
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement(vec![0; self.rank()])
    }

    /// The `i`-th standard generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut coords = vec![0; self.rank()];
        coords[i] = 1;
        GroupElement(coords)
    }

    pub fn is_canonical(&self, a: &GroupElement) -> bool {
        a.0.len() == self.rank()
            && a.0.iter().enumerate().all(|(i, &c)| match self.order_of(i) {
                Some(n) => (0..n as i64).contains(&c),
                None => true,
            })
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
        self.check_len(a.0.len())?;
        self.check_len(b.0.len())?;
        let sum: Vec<i64> = a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect();
        self.element(sum)
    }

    pub fn neg(&self, a: &GroupElement) -> Result<GroupElement> {
        self.check_len(a.0.len())?;
        self.element(a.0.iter().map(|x| -x).collect::<Vec<_>>())
    }

    /// All elements in lexicographic order, when the group is finite.
    pub fn elements(&self) -> Option<Vec<GroupElement>> {
        if !self.is_finite() {
            return None;
        }
        let mut out = vec![Vec::new()];
        for &n in &self.torsion_orders {
            out = out
                .into_iter()
                .flat_map(|prefix: Vec<i64>| {
                    (0..n as i64).map(move |c| {
                        let mut v = prefix.clone();
                        v.push(c);
                        v
                    })
                })
                .collect();
        }
        Some(out.into_iter().map(GroupElement).collect())
    }

    fn check_len(&self, got: usize) -> Result<()> {
        if got == self.rank() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.rank(), got })
        }
    }
}

impl GroupElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Coordinatewise sum with torsion reduction.
pub fn group_add(spec: &GroupSpec, a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    spec.add(a, b)
}
