//! Every numerical semigroup of genus at most `g_max`, each exactly once.
//!
//! The tree has root `N`; the children of `H` are `H \ {x}` for the minimal
//! generators `x > F(H)`. Nodes are gap sets packed into a `u128`, which is
//! enough because `F + m <= 3g` for every semigroup of genus `g`.

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// Default hard cap on `g_max`.
pub const DEFAULT_GENUS_CAP: u32 = 25;
/// Largest cap the packed representation supports.
const REPRESENTABLE_GENUS: u32 = 42;

#[derive(Clone, Copy, Debug)]
struct Node {
    gaps: u128,
    genus: u32,
    conductor: u32,
    multiplicity: u32,
}

impl Node {
    fn root() -> Self {
        Node {
            gaps: 0,
            genus: 0,
            conductor: 0,
            multiplicity: 1,
        }
    }

    fn member(&self, x: u32) -> bool {
        x >= 128 || self.gaps >> x & 1 == 0
    }

    fn irreducible(&self, x: u32) -> bool {
        self.member(x) && !(1..=x / 2).any(|y| self.member(y) && self.member(x - y))
    }

    /// Minimal generators, all of which are at most `conductor + multiplicity`.
    fn generators(&self) -> Vec<i64> {
        (1..=self.conductor + self.multiplicity)
            .filter(|&x| self.irreducible(x))
            .map(i64::from)
            .collect()
    }

    /// Children in ascending order of the removed generator.
    fn children(&self) -> impl Iterator<Item = Node> + '_ {
        let lo = self.conductor.max(1);
        (lo..=self.conductor + self.multiplicity)
            .filter(|&x| self.irreducible(x))
            .map(move |x| Node {
                gaps: self.gaps | 1 << x,
                genus: self.genus + 1,
                conductor: x + 1,
                multiplicity: if x == self.multiplicity {
                    x + 1
                } else {
                    self.multiplicity
                },
            })
    }
}

/// Depth-first walk of the genus tree, children visited in ascending order.
#[derive(Clone, Debug)]
pub struct GenusTree {
    g_max: u32,
    stack: Vec<Node>,
}

impl Iterator for GenusTree {
    type Item = NumericalSemigroup;

    fn next(&mut self) -> Option<NumericalSemigroup> {
        let node = self.stack.pop()?;
        if node.genus < self.g_max {
            let children: Vec<Node> = node.children().collect();
            self.stack.extend(children.into_iter().rev());
        }
        let h = NumericalSemigroup::from_generators(&node.generators())
            .expect("tree nodes are numerical semigroups");
        debug_assert_eq!(h.genus(), i64::from(node.genus));
        Some(h)
    }
}

/// All semigroups of genus `<= g_max`, with `g_max` limited by
/// [`DEFAULT_GENUS_CAP`].
pub fn enumerate_by_genus(g_max: u32) -> Result<GenusTree> {
    enumerate_with_cap(g_max, DEFAULT_GENUS_CAP)
}

/// As [`enumerate_by_genus`] with an explicit cap.
pub fn enumerate_with_cap(g_max: u32, cap: u32) -> Result<GenusTree> {
    if g_max > cap || g_max > REPRESENTABLE_GENUS {
        return Err(Error::CapExceeded {
            requested: g_max,
            cap: cap.min(REPRESENTABLE_GENUS),
        });
    }
    Ok(GenusTree {
        g_max,
        stack: vec![Node::root()],
    })
}
