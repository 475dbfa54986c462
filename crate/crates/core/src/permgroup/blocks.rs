//! Block systems of transitive groups.

use super::group::PermutationGroup;
use crate::error::GroupError;

struct UnionFind {
    parent: Vec<u32>,
    size: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
        }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let p = self.parent[x as usize];
            self.parent[x as usize] = self.parent[p as usize];
            x = p;
        }
        x
    }

    fn union(&mut self, a: u32, b: u32) -> Option<(u32, u32)> {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return None;
        }
        let (big, small) = if self.size[ra as usize] >= self.size[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[small as usize] = big;
        self.size[big as usize] += self.size[small as usize];
        Some((big, small))
    }
}

/// Finest block system in which `a` and `b` share a block, as a list of
/// blocks (each sorted, ordered by smallest point).
pub fn minimal_block_system(g: &PermutationGroup, a: u32, b: u32) -> Vec<Vec<u32>> {
    let n = g.degree();
    let mut uf = UnionFind::new(n);
    let mut queue: Vec<(u32, u32)> = Vec::new();
    if uf.union(a, b).is_some() {
        queue.push((a, b));
    }
    while let Some((x, y)) = queue.pop() {
        for s in g.generators() {
            let (xs, ys) = (s.image(x), s.image(y));
            if uf.union(xs, ys).is_some() {
                queue.push((xs, ys));
            }
        }
    }
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut index = vec![usize::MAX; n];
    for p in 0..n as u32 {
        let r = uf.find(p) as usize;
        if index[r] == usize::MAX {
            index[r] = blocks.len();
            blocks.push(Vec::new());
        }
        blocks[index[r]].push(p);
    }
    blocks
}

/// All minimal nontrivial block systems of a transitive group.
pub fn minimal_blocks(g: &PermutationGroup) -> Result<Vec<Vec<Vec<u32>>>, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::Intransitive);
    }
    let n = g.degree();
    let mut systems: Vec<Vec<Vec<u32>>> = Vec::new();
    for b in 1..n as u32 {
        let sys = minimal_block_system(g, 0, b);
        if sys.len() > 1 && !systems.contains(&sys) {
            systems.push(sys);
        }
    }
    // A system is minimal iff no other found block through 0 is strictly smaller.
    let minimal: Vec<Vec<Vec<u32>>> = systems
        .iter()
        .filter(|s| {
            let b0 = &s[0];
            !systems.iter().any(|t| {
                let c0 = &t[0];
                c0.len() < b0.len() && c0.iter().all(|p| b0.binary_search(p).is_ok())
            })
        })
        .cloned()
        .collect();
    Ok(minimal)
}

/// Primitivity test that tries every partner point; used where the
/// stabilizer of a point must not be computed.
pub(crate) fn is_primitive_exhaustive(g: &PermutationGroup) -> bool {
    g.is_transitive() && (1..g.degree() as u32).all(|b| minimal_block_system(g, 0, b).len() == 1)
}

pub fn is_primitive(g: &PermutationGroup) -> Result<bool, GroupError> {
    if !g.is_transitive() {
        return Err(GroupError::Intransitive);
    }
    let n = g.degree();
    if n <= 2 {
        return Ok(true);
    }
    for b in point_stabilizer_orbit_reps(g) {
        if minimal_block_system(g, 0, b).len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Representatives of the orbits of the stabilizer of 0 on the other points.
/// Falls back to every point when the stabilizer would be expensive.
fn point_stabilizer_orbit_reps(g: &PermutationGroup) -> Vec<u32> {
    let n = g.degree();
    if n <= 64 || g.giant().is_some() {
        return (1..n as u32).collect();
    }
    let stab = g.pointwise_stabilizer(&[0]);
    stab.orbits()
        .into_iter()
        .map(|o| o[0])
        .filter(|&p| p != 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn grp(n: usize, gens: &[&[&[u32]]]) -> PermutationGroup {
        let gens = gens
            .iter()
            .map(|c| Permutation::from_cycles(n, &c.iter().map(|x| x.to_vec()).collect::<Vec<_>>()).unwrap())
            .collect();
        PermutationGroup::new(n, gens).unwrap()
    }

    /// Exhaustive check over all set partitions of a small point set.
    fn partitions(n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = vec![0usize; n];
        fn rec(i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if i == cur.len() {
                out.push(cur.clone());
                return;
            }
            for c in 0..=max + 1 {
                cur[i] = c;
                rec(i + 1, max.max(c), cur, out);
            }
        }
        if n > 0 {
            rec(1, 0, &mut cur, &mut out);
        }
        out
    }

    fn brute_primitive(g: &PermutationGroup) -> bool {
        let n = g.degree();
        for part in partitions(n) {
            let k = part.iter().max().unwrap() + 1;
            if k == 1 || k == n {
                continue;
            }
            let invariant = g.generators().iter().all(|s| {
                (0..n).all(|x| {
                    (0..n).all(|y| {
                        part[x] != part[y]
                            || part[s.image(x as u32) as usize] == part[s.image(y as u32) as usize]
                    })
                })
            });
            if invariant {
                return false;
            }
        }
        true
    }

    #[test]
    fn four_cycle_is_imprimitive() {
        let g = grp(4, &[&[&[0, 1, 2, 3]]]);
        let sys = minimal_blocks(&g).unwrap();
        assert_eq!(sys, vec![vec![vec![0, 2], vec![1, 3]]]);
        assert!(!is_primitive(&g).unwrap());
        assert!(!brute_primitive(&g));
    }

    #[test]
    fn a4_is_primitive() {
        let g = grp(4, &[&[&[0, 1, 2]], &[&[1, 2, 3]]]);
        assert!(is_primitive(&g).unwrap());
        assert!(brute_primitive(&g));
    }

    #[test]
    fn degree_two_is_primitive() {
        let g = grp(2, &[&[&[0, 1]]]);
        assert!(is_primitive(&g).unwrap());
    }

    #[test]
    fn intransitive_is_rejected() {
        let g = grp(4, &[&[&[0, 1]]]);
        assert!(matches!(is_primitive(&g), Err(GroupError::Intransitive)));
    }

    #[test]
    fn agrees_with_partition_oracle() {
        let cases: Vec<PermutationGroup> = vec![
            grp(6, &[&[&[0, 1, 2, 3, 4, 5]]]),
            grp(6, &[&[&[0, 1, 2, 3, 4, 5]], &[&[1, 5], &[2, 4]]]),
            grp(5, &[&[&[0, 1, 2, 3, 4]], &[&[1, 4], &[2, 3]]]),
            grp(6, &[&[&[0, 1, 2]], &[&[0, 3], &[1, 4], &[2, 5]]]),
            grp(6, &[&[&[0, 1, 2, 3, 4]], &[&[0, 5], &[1, 2]]]),
            grp(8, &[&[&[0, 1, 2, 3, 4, 5, 6, 7]], &[&[0, 1]]]),
        ];
        for g in cases {
            assert_eq!(is_primitive(&g).unwrap(), brute_primitive(&g), "{:?}", g.generators());
        }
    }
}
