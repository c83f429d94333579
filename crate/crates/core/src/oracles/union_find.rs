//! Congruence generation by partition refinement, independent of relation
//! composition.

use crate::algebra::{FiniteAlgebra, Operations};
use crate::error::Result;
use crate::relation::BinRel;

/// A disjoint-set forest with path halving and union by size.
#[derive(Debug, Clone)]
pub struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl UnionFind {
    pub fn new(len: usize) -> Self {
        UnionFind {
            parent: (0..len).collect(),
            size: vec![1; len],
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; returns `true` if they were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (big, small) = if self.size[ra] >= self.size[rb] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small] = big;
        self.size[big] += self.size[small];
        true
    }
}

/// Smallest congruence containing `pairs`.
///
/// Starts from the partition generated by the pairs and keeps merging
/// `f(…, a, …)` with `f(…, rep(a), …)` over every argument tuple and position
/// until a full sweep merges nothing.
pub fn congruence_union_find<I>(a: &FiniteAlgebra, pairs: I) -> Result<BinRel>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    let n = a.size();
    let mut uf = UnionFind::new(n);
    for (x, y) in pairs {
        a.check_element(x)?;
        a.check_element(y)?;
        uf.union(x, y);
    }
    let mut args = Vec::new();
    let mut swapped = Vec::new();
    loop {
        let mut merged = false;
        for op in 0..a.op_count() {
            let k = a.arity(op);
            if k == 0 {
                continue;
            }
            args.clear();
            args.resize(k, 0);
            'tuples: loop {
                let value = a.apply(op, &args);
                for pos in 0..k {
                    let rep = uf.find(args[pos]);
                    if rep != args[pos] {
                        swapped.clone_from(&args);
                        swapped[pos] = rep;
                        merged |= uf.union(value, a.apply(op, &swapped));
                    }
                }
                let mut pos = k;
                loop {
                    if pos == 0 {
                        break 'tuples;
                    }
                    pos -= 1;
                    args[pos] += 1;
                    if args[pos] < n {
                        break;
                    }
                    args[pos] = 0;
                }
            }
        }
        if !merged {
            break;
        }
    }
    let mut rel = BinRel::empty(n);
    let reps: Vec<usize> = (0..n).map(|x| uf.find(x)).collect();
    for x in 0..n {
        for y in 0..n {
            if reps[x] == reps[y] {
                rel.insert(x, y);
            }
        }
    }
    Ok(rel)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z4_classes() {
        let z4 = FiniteAlgebra::from_fns(
            &[("add", 2), ("zero", 0)],
            4,
            &[&|a: &[usize]| (a[0] + a[1]) % 4, &|_: &[usize]| 0],
            Some(0),
        )
        .unwrap();
        let c = congruence_union_find(&z4, [(2, 0)]).unwrap();
        assert!(c.is_equivalence());
        assert_eq!(
            c.classes().iter().map(|s| s.to_string()).collect::<Vec<_>>(),
            ["{0,2}", "{1,3}"]
        );
        assert_eq!(congruence_union_find(&z4, [(1, 0)]).unwrap(), BinRel::full(4));
        assert_eq!(congruence_union_find(&z4, []).unwrap(), BinRel::diagonal(4));
    }

    #[test]
    fn union_find_basics() {
        let mut uf = UnionFind::new(5);
        assert!(uf.union(0, 3));
        assert!(!uf.union(3, 0));
        assert!(uf.union(4, 3));
        assert_eq!(uf.find(4), uf.find(0));
        assert_ne!(uf.find(1), uf.find(0));
    }
}
