//! HLT coset enumeration with lookahead and Holt-style coincidence handling.

use num_bigint::BigUint;
use serde::Serialize;

use super::presentation::{inverse_letter, FpPresentation, Letter};
use crate::error::FpError;
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

pub const DEFAULT_COSET_LIMIT: usize = 1_000_000;

const NONE: u32 = u32::MAX;

/// Counters describing how an enumeration went.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct EnumerationLog {
    pub defined: u64,
    pub coincidences: u64,
    pub lookaheads: u64,
    pub compactions: u64,
    pub max_live: usize,
}

/// Complete coset table, standardized by order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetTable {
    /// `actions[g][c]` is the coset `c * g`.
    actions: Vec<Vec<u32>>,
    index: usize,
    log: EnumerationLog,
}

impl CosetTable {
    pub fn index(&self) -> usize {
        self.index
    }

    pub fn generator_action(&self, g: usize) -> &[u32] {
        &self.actions[g]
    }

    pub fn log(&self) -> &EnumerationLog {
        &self.log
    }

    /// Coset reached from `start` by reading the word.
    pub fn trace(&self, start: u32, word: &[Letter]) -> u32 {
        let mut c = start;
        for &x in word {
            c = if x % 2 == 0 {
                self.actions[(x / 2) as usize][c as usize]
            } else {
                self.inverse_image(x / 2, c)
            };
        }
        c
    }

    fn inverse_image(&self, g: u32, c: u32) -> u32 {
        // Only used by `trace` on small checks; the inverse table is rebuilt lazily.
        self.actions[g as usize]
            .iter()
            .position(|&d| d == c)
            .expect("coset table columns are permutations") as u32
    }

    /// Generator actions as permutations of the cosets.
    pub fn permutations(&self) -> Vec<Permutation> {
        self.actions
            .iter()
            .map(|a| Permutation::from_images(a.clone()).expect("complete coset table"))
            .collect()
    }

    /// Image of a word as a permutation of the cosets.
    pub fn word_permutation(&self, word: &[Letter]) -> Permutation {
        let perms = self.permutations();
        let mut acc = Permutation::identity(self.index);
        for &x in word {
            let p = &perms[(x / 2) as usize];
            acc = if x % 2 == 0 { &acc * p } else { &acc * &p.inverse() };
        }
        acc
    }

    /// The permutation group induced on the cosets.
    pub fn permutation_group(&self) -> PermutationGroup {
        PermutationGroup::new(self.index, self.permutations()).expect("coset permutations share a degree")
    }

    fn verify(&self, pres: &FpPresentation, subgroup: &[Vec<Letter>]) -> bool {
        let perms = self.permutations();
        let word_image = |w: &[Letter]| {
            let mut acc = Permutation::identity(self.index);
            for &x in w {
                let p = &perms[(x / 2) as usize];
                acc = if x % 2 == 0 { &acc * p } else { &acc * &p.inverse() };
            }
            acc
        };
        pres.relators().iter().all(|r| word_image(r).is_identity())
            && subgroup.iter().all(|w| word_image(w).image(0) == 0)
    }
}

struct Enumerator<'a> {
    cols: usize,
    relators: &'a [Vec<Letter>],
    table: Vec<u32>,
    parent: Vec<u32>,
    limit: usize,
    live: usize,
    queue: Vec<u32>,
    log: EnumerationLog,
}

#[derive(Debug)]
struct Full;

impl<'a> Enumerator<'a> {
    fn new(cols: usize, relators: &'a [Vec<Letter>], limit: usize) -> Self {
        Enumerator {
            cols,
            relators,
            table: vec![NONE; cols],
            parent: vec![0],
            limit,
            live: 1,
            queue: Vec::new(),
            log: EnumerationLog {
                max_live: 1,
                ..Default::default()
            },
        }
    }

    fn allocated(&self) -> usize {
        self.parent.len()
    }

    #[inline]
    fn get(&self, c: u32, x: Letter) -> u32 {
        self.table[c as usize * self.cols + x as usize]
    }

    #[inline]
    fn set(&mut self, c: u32, x: Letter, d: u32) {
        self.table[c as usize * self.cols + x as usize] = d;
    }

    #[inline]
    fn alive(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: Letter) -> Result<u32, Full> {
        if self.allocated() >= self.limit {
            return Err(Full);
        }
        let d = self.allocated() as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.cols));
        self.set(c, x, d);
        self.set(d, inverse_letter(x), c);
        self.live += 1;
        self.log.defined += 1;
        self.log.max_live = self.log.max_live.max(self.live);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let a = self.rep(a);
        let b = self.rep(b);
        if a == b {
            return;
        }
        let (keep, lose) = if a < b { (a, b) } else { (b, a) };
        self.parent[lose as usize] = keep;
        self.live -= 1;
        self.queue.push(lose);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.log.coincidences += 1;
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.cols as Letter {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                let ix = inverse_letter(x);
                if self.get(f, ix) == e {
                    self.set(f, ix, NONE);
                }
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let e1x = self.get(e1, x);
                if e1x != NONE {
                    self.merge(f1, e1x);
                } else {
                    let f1ix = self.get(f1, ix);
                    if f1ix != NONE {
                        self.merge(e1, f1ix);
                    } else {
                        self.set(e1, x, f1);
                        self.set(f1, ix, e1);
                    }
                }
            }
        }
        self.queue.clear();
    }

    /// Scans `w` from coset `c`; defines new cosets when `fill` is set.
    fn scan(&mut self, c: u32, w: &[Letter], fill: bool) -> Result<(), Full> {
        let mut f = c;
        let mut b = c;
        let mut i = 0isize;
        let mut j = w.len() as isize - 1;
        loop {
            while i <= j {
                let n = self.get(f, w[i as usize]);
                if n == NONE {
                    break;
                }
                f = n;
                i += 1;
            }
            if i > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i {
                let n = self.get(b, inverse_letter(w[j as usize]));
                if n == NONE {
                    break;
                }
                b = n;
                j -= 1;
            }
            if j < i {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            if i == j {
                let x = w[i as usize];
                self.set(f, x, b);
                self.set(b, inverse_letter(x), f);
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, w[i as usize])?;
        }
    }

    fn lookahead(&mut self) {
        self.log.lookaheads += 1;
        let relators = self.relators;
        let mut c = 0u32;
        while (c as usize) < self.allocated() {
            if self.alive(c) {
                for r in relators {
                    let _ = self.scan(c, r, false);
                    if !self.alive(c) {
                        break;
                    }
                }
            }
            c += 1;
        }
    }

    /// Drops dead cosets; returns the new number of the coset `keep`.
    fn compact(&mut self, keep: u32) -> u32 {
        self.log.compactions += 1;
        let n = self.allocated();
        let mut renum = vec![NONE; n];
        let mut next = 0u32;
        for c in 0..n {
            if self.parent[c] == c as u32 {
                renum[c] = next;
                next += 1;
            }
        }
        let mut table = Vec::with_capacity(next as usize * self.cols);
        for c in 0..n {
            if renum[c] == NONE {
                continue;
            }
            for x in 0..self.cols {
                let d = self.table[c * self.cols + x];
                table.push(if d == NONE { NONE } else { renum[d as usize] });
            }
        }
        self.table = table;
        self.parent = (0..next).collect();
        // First live coset at or after `keep`.
        (keep as usize..n)
            .find(|&c| renum[c] != NONE)
            .map(|c| renum[c])
            .unwrap_or(next)
    }

    fn make_room(&mut self, cursor: u32) -> Result<u32, FpError> {
        let mut cursor = cursor;
        if self.live < self.allocated() {
            cursor = self.compact(cursor);
            if self.allocated() < self.limit {
                return Ok(cursor);
            }
        }
        self.lookahead();
        cursor = self.compact(cursor);
        if self.allocated() < self.limit {
            Ok(cursor)
        } else {
            Err(FpError::CosetLimit(self.limit))
        }
    }
}

/// Enumerates the right cosets of the subgroup generated by `subgroup`.
pub fn todd_coxeter(
    pres: &FpPresentation,
    subgroup: &[Vec<Letter>],
    coset_limit: usize,
) -> Result<CosetTable, FpError> {
    if coset_limit == 0 {
        return Err(FpError::BadLimit);
    }
    let cols = 2 * pres.generator_count();
    let relators = pres.cyclically_reduced_relators();
    let mut en = Enumerator::new(cols, relators, coset_limit);
    let subgroup: Vec<Vec<Letter>> = subgroup.iter().map(|w| super::presentation::free_reduce(w)).collect();
    loop {
        let mut ok = true;
        for w in &subgroup {
            let root = en.rep(0);
            if en.scan(root, w, true).is_err() {
                ok = false;
                break;
            }
        }
        if ok {
            break;
        }
        en.make_room(0)?;
    }
    let mut c = 0u32;
    'outer: while (c as usize) < en.allocated() {
        if en.alive(c) {
            for r in relators {
                if en.scan(c, r, true).is_err() {
                    c = en.make_room(c)?;
                    continue 'outer;
                }
                if !en.alive(c) {
                    break;
                }
            }
            if en.alive(c) {
                for x in 0..cols as Letter {
                    if en.get(c, x) == NONE && en.define(c, x).is_err() {
                        c = en.make_room(c)?;
                        continue 'outer;
                    }
                }
            }
        }
        c += 1;
    }
    let table = standardize(&mut en, pres.generator_count());
    if !table.verify(pres, &subgroup) {
        return Err(FpError::Parse("coset enumeration produced an inconsistent table".into()));
    }
    Ok(table)
}

fn standardize(en: &mut Enumerator<'_>, gens: usize) -> CosetTable {
    let n = en.allocated();
    let mut renum = vec![NONE; n];
    let mut order = Vec::with_capacity(en.live);
    let start = en.rep(0);
    renum[start as usize] = 0;
    order.push(start);
    let mut head = 0;
    while head < order.len() {
        let c = order[head];
        head += 1;
        for x in 0..en.cols as Letter {
            let d = en.rep(en.get(c, x));
            if renum[d as usize] == NONE {
                renum[d as usize] = order.len() as u32;
                order.push(d);
            }
        }
    }
    let index = order.len();
    let mut actions = vec![vec![0u32; index]; gens];
    for (i, &c) in order.iter().enumerate() {
        for (g, action) in actions.iter_mut().enumerate() {
            let d = en.rep(en.get(c, 2 * g as u32));
            action[i] = renum[d as usize];
        }
    }
    CosetTable {
        actions,
        index,
        log: en.log.clone(),
    }
}

/// Order of the group via enumeration over the trivial subgroup.
pub fn group_order(pres: &FpPresentation, coset_limit: usize) -> Result<BigUint, FpError> {
    Ok(BigUint::from(todd_coxeter(pres, &[], coset_limit)?.index()))
}

/// Action on cosets together with whether it is faithful.
#[derive(Clone, Debug)]
pub struct PermutationImage {
    pub group: PermutationGroup,
    pub table: CosetTable,
    pub faithful: bool,
    /// `|L|` when it had to be computed to decide faithfulness.
    pub group_order: Option<BigUint>,
}

impl PermutationImage {
    /// Image of a word of the presentation.
    pub fn map_word(&self, word: &[Letter]) -> Permutation {
        let gens = self.table.permutations();
        let mut acc = Permutation::identity(self.table.index());
        for &x in word {
            let p = &gens[(x / 2) as usize];
            acc = if x % 2 == 0 { &acc * p } else { &acc * &p.inverse() };
        }
        acc
    }
}

pub fn permutation_image(
    pres: &FpPresentation,
    subgroup: &[Vec<Letter>],
    coset_limit: usize,
) -> Result<PermutationImage, FpError> {
    let table = todd_coxeter(pres, subgroup, coset_limit)?;
    let group = table.permutation_group();
    let trivial_subgroup = subgroup.iter().all(|w| w.is_empty());
    if trivial_subgroup {
        return Ok(PermutationImage {
            group,
            table,
            faithful: true,
            group_order: None,
        });
    }
    let order = group_order(pres, coset_limit)?;
    Ok(PermutationImage {
        faithful: group.order() == order,
        group,
        table,
        group_order: Some(order),
    })
}

/// Smallest faithful coset action among the cyclic subgroups of the
/// generators and the supplied candidate subgroups, falling back to the
/// regular representation.
pub fn faithful_representation(
    pres: &FpPresentation,
    candidates: &[Vec<Vec<Letter>>],
    coset_limit: usize,
) -> Result<PermutationImage, FpError> {
    let order = group_order(pres, coset_limit)?;
    let mut subs: Vec<Vec<Vec<Letter>>> = candidates.to_vec();
    for g in 0..pres.generator_count() {
        subs.push(vec![vec![2 * g as u32]]);
    }
    let mut best: Option<PermutationImage> = None;
    for s in subs {
        let table = todd_coxeter(pres, &s, coset_limit)?;
        if best.as_ref().is_some_and(|b| b.table.index() <= table.index()) {
            continue;
        }
        let group = table.permutation_group();
        if group.order() == order {
            best = Some(PermutationImage {
                group,
                table,
                faithful: true,
                group_order: Some(order.clone()),
            });
        }
    }
    match best {
        Some(b) => Ok(b),
        None => {
            let table = todd_coxeter(pres, &[], coset_limit)?;
            Ok(PermutationImage {
                group: table.permutation_group(),
                table,
                faithful: true,
                group_order: Some(order),
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(names: &[&str], rels: &[&str]) -> FpPresentation {
        FpPresentation::from_strings(names, rels).unwrap()
    }

    #[test]
    fn cyclic_group() {
        let p = pres(&["a"], &["a^5"]);
        let t = todd_coxeter(&p, &[], 100).unwrap();
        assert_eq!(t.index(), 5);
        assert_eq!(t.permutations()[0].cycle_type(), vec![5]);
    }

    #[test]
    fn symmetric_groups() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^2"]);
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 6);
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^4"]);
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 24);
        let b = p.parse_word("b").unwrap();
        assert_eq!(todd_coxeter(&p, &[b], 100).unwrap().index(), 8);
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^5"]);
        assert_eq!(todd_coxeter(&p, &[], 1000).unwrap().index(), 60);
    }

    #[test]
    fn collapse_to_trivial() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "a*b"]);
        assert_eq!(todd_coxeter(&p, &[], 100).unwrap().index(), 1);
    }

    #[test]
    fn limit_is_reported() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^5"]);
        assert!(matches!(todd_coxeter(&p, &[], 10), Err(FpError::CosetLimit(10))));
        assert!(matches!(todd_coxeter(&p, &[], 0), Err(FpError::BadLimit)));
    }

    #[test]
    fn tight_limit_uses_lookahead() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^7", "[a,b]^4"]);
        // PSL(2,7) has order 168.
        let t = todd_coxeter(&p, &[], 400).unwrap();
        assert_eq!(t.index(), 168);
    }

    #[test]
    fn table_is_standard() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^4"]);
        let t = todd_coxeter(&p, &[], 100).unwrap();
        // Cosets first appear in BFS order of (coset, column).
        let mut seen = 1u32;
        for c in 0..t.index() as u32 {
            for x in 0..4 {
                let d = t.trace(c, &[x]);
                assert!(d <= seen);
                if d == seen {
                    seen += 1;
                }
            }
        }
    }

    #[test]
    fn faithfulness() {
        let p = pres(&["a", "b"], &["a^2", "b^3", "(a*b)^4"]);
        let img = permutation_image(&p, &[p.parse_word("b").unwrap()], 100).unwrap();
        assert!(img.faithful);
        assert_eq!(img.group.degree(), 8);
        let img = permutation_image(&p, &[p.parse_word("b").unwrap(), p.parse_word("a*b*a").unwrap()], 100).unwrap();
        assert_eq!(img.table.index(), 2);
        assert!(!img.faithful);
        let best = faithful_representation(&p, &[], 100).unwrap();
        assert_eq!(best.table.index(), 8);
    }
}
