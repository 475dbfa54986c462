//! Automorphism groups, canonical forms, and isomorphism of vertex-coloured
//! graphs by individualization and equitable refinement.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::error::GraphError;
use crate::graphcore::Graph;
use crate::perm::Permutation;
use crate::permgroup::PermutationGroup;

const DEFAULT_NODE_BUDGET: u64 = 20_000_000;

/// Ordered partition of the vertex set. Cells are contiguous ranges of
/// `elems` and are identified by their start position.
#[derive(Clone, Debug)]
pub struct ColoredPartition {
    elems: Vec<u32>,
    pos: Vec<u32>,
    cell: Vec<u32>,
    len: Vec<u32>,
    cells: usize,
}

impl ColoredPartition {
    /// Cells ordered by colour value.
    pub fn from_colors(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut elems: Vec<u32> = (0..n as u32).collect();
        elems.sort_by_key(|&v| (colors[v as usize], v));
        let mut pos = vec![0u32; n];
        let mut cell = vec![0u32; n];
        let mut len = vec![0u32; n];
        let mut cells = 0;
        let mut start = 0usize;
        while start < n {
            let c = colors[elems[start] as usize];
            let mut end = start;
            while end < n && colors[elems[end] as usize] == c {
                end += 1;
            }
            for i in start..end {
                pos[elems[i] as usize] = i as u32;
                cell[elems[i] as usize] = start as u32;
            }
            len[start] = (end - start) as u32;
            cells += 1;
            start = end;
        }
        ColoredPartition {
            elems,
            pos,
            cell,
            len,
            cells,
        }
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.elems.len()
    }

    pub fn cell_starts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.cells);
        let mut s = 0usize;
        while s < self.elems.len() {
            out.push(s as u32);
            s += self.len[s] as usize;
        }
        out
    }

    pub fn cell_members(&self, start: u32) -> &[u32] {
        let s = start as usize;
        &self.elems[s..s + self.len[s] as usize]
    }

    /// Splits `v` off the front of its cell; returns the start of the new
    /// singleton cell.
    fn individualize(&mut self, v: u32) -> u32 {
        let c = self.cell[v as usize] as usize;
        let l = self.len[c] as usize;
        if l == 1 {
            return c as u32;
        }
        let pv = self.pos[v as usize] as usize;
        let first = self.elems[c];
        self.elems.swap(c, pv);
        self.pos[first as usize] = pv as u32;
        self.pos[v as usize] = c as u32;
        self.len[c] = 1;
        self.len[c + 1] = (l - 1) as u32;
        for i in c + 1..c + l {
            self.cell[self.elems[i] as usize] = (c + 1) as u32;
        }
        self.cells += 1;
        c as u32
    }

    /// Position of every vertex; a labeling once the partition is discrete.
    pub fn positions(&self) -> &[u32] {
        &self.pos
    }
}

/// Scratch space reused across refinements.
struct Refiner {
    count: Vec<u32>,
    in_queue: Vec<bool>,
    touched: Vec<u32>,
}

fn mix(h: u64, x: u64) -> u64 {
    let mut z = h ^ x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Refiner {
    fn new(n: usize) -> Self {
        Refiner {
            count: vec![0; n],
            in_queue: vec![false; n],
            touched: Vec::new(),
        }
    }

    /// Equitable refinement from the given splitter cells. Returns a trace
    /// hash that depends only on isomorphism-invariant data.
    fn refine(&mut self, adj: &[Vec<u32>], p: &mut ColoredPartition, splitters: &[u32]) -> u64 {
        let mut queue: VecDeque<u32> = VecDeque::new();
        for &s in splitters {
            if !self.in_queue[s as usize] {
                self.in_queue[s as usize] = true;
                queue.push_back(s);
            }
        }
        let mut trace: u64 = 0x1234_5678;
        while let Some(w) = queue.pop_front() {
            self.in_queue[w as usize] = false;
            if p.cells == p.elems.len() {
                continue;
            }
            let ws = w as usize;
            let wl = p.len[ws] as usize;
            self.touched.clear();
            for i in ws..ws + wl {
                let v = p.elems[i];
                for &u in &adj[v as usize] {
                    if self.count[u as usize] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u as usize] += 1;
                }
            }
            let mut touched = std::mem::take(&mut self.touched);
            touched.sort_unstable_by_key(|&u| (p.cell[u as usize], self.count[u as usize]));
            trace = mix(trace, w as u64);
            let mut gi = 0;
            while gi < touched.len() {
                let c = p.cell[touched[gi] as usize] as usize;
                let mut gj = gi;
                while gj < touched.len() && p.cell[touched[gj] as usize] as usize == c {
                    gj += 1;
                }
                let group = &touched[gi..gj];
                let l = p.len[c] as usize;
                let t = group.len();
                let uniform = self.count[group[0] as usize] == self.count[group[t - 1] as usize];
                if t == l && uniform {
                    trace = mix(trace, (c as u64) << 32 | self.count[group[0] as usize] as u64);
                    gi = gj;
                    continue;
                }
                // Move touched vertices to the tail of the cell, sorted by count.
                let tail = c + l - t;
                let mut head_touched: Vec<usize> = Vec::new();
                let mut tail_untouched: Vec<usize> = Vec::new();
                for &u in group {
                    let pu = p.pos[u as usize] as usize;
                    if pu < tail {
                        head_touched.push(pu);
                    }
                }
                for i in tail..c + l {
                    if self.count[p.elems[i] as usize] == 0 {
                        tail_untouched.push(i);
                    }
                }
                for (a, b) in head_touched.into_iter().zip(tail_untouched) {
                    let (x, y) = (p.elems[a], p.elems[b]);
                    p.elems[a] = y;
                    p.elems[b] = x;
                    p.pos[y as usize] = a as u32;
                    p.pos[x as usize] = b as u32;
                }
                for (k, &u) in group.iter().enumerate() {
                    p.elems[tail + k] = u;
                    p.pos[u as usize] = (tail + k) as u32;
                }
                // Fragment boundaries.
                let mut frags: Vec<(usize, usize)> = Vec::new();
                if t < l {
                    frags.push((c, l - t));
                }
                let mut k = 0;
                while k < t {
                    let cnt = self.count[group[k] as usize];
                    let mut e = k;
                    while e < t && self.count[group[e] as usize] == cnt {
                        e += 1;
                    }
                    frags.push((tail + k, e - k));
                    trace = mix(trace, (cnt as u64) << 40 | ((tail + k) as u64) << 20 | (e - k) as u64);
                    k = e;
                }
                trace = mix(trace, (c as u64) << 32 | frags.len() as u64);
                for &(s, sz) in &frags {
                    p.len[s] = sz as u32;
                    if s != c {
                        for i in s..s + sz {
                            p.cell[p.elems[i] as usize] = s as u32;
                        }
                    }
                }
                p.cells += frags.len() - 1;
                if self.in_queue[c] {
                    for &(s, _) in &frags {
                        if s != c && !self.in_queue[s] {
                            self.in_queue[s] = true;
                            queue.push_back(s as u32);
                        }
                    }
                } else {
                    let mut largest = 0;
                    for (i, &(_, sz)) in frags.iter().enumerate() {
                        if sz > frags[largest].1 {
                            largest = i;
                        }
                    }
                    for (i, &(s, _)) in frags.iter().enumerate() {
                        if i != largest && !self.in_queue[s] {
                            self.in_queue[s] = true;
                            queue.push_back(s as u32);
                        }
                    }
                }
                gi = gj;
            }
            for &u in &touched {
                self.count[u as usize] = 0;
            }
            self.touched = touched;
        }
        mix(trace, p.cells as u64)
    }
}

/// Options for the automorphism search.
#[derive(Clone, Debug, Default)]
pub struct AutOptions {
    /// Vertex colours; automorphisms preserve them.
    pub colors: Option<Vec<u32>>,
    /// Known automorphisms used to prune the search at the top level.
    pub seeds: Vec<Permutation>,
    /// Only vertices below this index are individualized and the returned
    /// group acts on them. Defaults to all vertices.
    pub primary: Option<usize>,
    /// Maximum number of search-tree nodes.
    pub node_budget: Option<u64>,
}

/// Automorphism group together with its certified base and strong generators.
#[derive(Clone, Debug)]
pub struct AutomorphismResult {
    /// The group, acting on the primary vertices.
    pub group: PermutationGroup,
    /// Generators acting on all vertices.
    pub generators: Vec<Permutation>,
    pub base: Vec<u32>,
    pub nodes: u64,
}

struct Engine<'a> {
    adj: &'a [Vec<u32>],
    primary: usize,
    refiner: Refiner,
    nodes: u64,
    budget: u64,
}

impl<'a> Engine<'a> {
    fn tick(&mut self) -> Result<(), GraphError> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(GraphError::Budget(format!("more than {} search nodes", self.budget)));
        }
        Ok(())
    }

    /// First smallest non-singleton cell among primary vertices, falling
    /// back to any non-singleton cell.
    fn target_cell(&self, p: &ColoredPartition) -> Option<u32> {
        let mut best: Option<(u32, u32)> = None;
        let mut fallback: Option<(u32, u32)> = None;
        let mut s = 0usize;
        let n = p.elems.len();
        while s < n {
            let l = p.len[s];
            if l > 1 {
                let primary = (p.elems[s] as usize) < self.primary;
                let slot = if primary { &mut best } else { &mut fallback };
                if slot.is_none_or(|(_, bl)| l < bl) {
                    *slot = Some((s as u32, l));
                }
            }
            s += l as usize;
        }
        best.or(fallback).map(|(s, _)| s)
    }

    fn child(&mut self, p: &ColoredPartition, v: u32) -> Result<(ColoredPartition, u64), GraphError> {
        self.tick()?;
        let mut q = p.clone();
        let c = q.individualize(v);
        let t = self.refiner.refine(self.adj, &mut q, &[c]);
        Ok((q, mix(t, c as u64)))
    }

    fn is_automorphism(&self, map: &[u32]) -> bool {
        let mut mark = vec![u32::MAX; self.adj.len()];
        for (u, list) in self.adj.iter().enumerate() {
            let pu = map[u] as usize;
            if self.adj[pu].len() != list.len() {
                return false;
            }
            for &w in &self.adj[pu] {
                mark[w as usize] = u as u32;
            }
            if list.iter().any(|&v| mark[map[v as usize] as usize] != u as u32) {
                return false;
            }
        }
        true
    }
}

struct FirstPath {
    nodes: Vec<ColoredPartition>,
    targets: Vec<u32>,
    base: Vec<u32>,
    traces: Vec<u64>,
    leaf: ColoredPartition,
}

fn leaf_map(first: &ColoredPartition, other: &ColoredPartition) -> Vec<u32> {
    first.pos.iter().map(|&i| other.elems[i as usize]).collect()
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }
    fn find(&mut self, mut x: u32) -> u32 {
        while self.0[x as usize] != x {
            let p = self.0[x as usize];
            self.0[x as usize] = self.0[p as usize];
            x = p;
        }
        x
    }
    fn union(&mut self, a: u32, b: u32) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            self.0[hi as usize] = lo;
        }
    }
    fn absorb(&mut self, p: &Permutation) {
        for v in 0..p.degree() as u32 {
            self.union(v, p.image(v));
        }
    }
}

fn initial_partition(engine: &mut Engine, colors: &[u32]) -> (ColoredPartition, u64) {
    let mut p = ColoredPartition::from_colors(colors);
    let starts = p.cell_starts();
    let t = engine.refiner.refine(engine.adj, &mut p, &starts);
    (p, t)
}

fn build_first_path(engine: &mut Engine, root: ColoredPartition) -> Result<FirstPath, GraphError> {
    let mut nodes = Vec::new();
    let mut targets = Vec::new();
    let mut base = Vec::new();
    let mut traces = Vec::new();
    let mut cur = root;
    while let Some(t) = engine.target_cell(&cur) {
        let v = cur.elems[t as usize];
        let (next, tr) = engine.child(&cur, v)?;
        nodes.push(cur);
        targets.push(t);
        base.push(v);
        traces.push(tr);
        cur = next;
    }
    Ok(FirstPath {
        nodes,
        targets,
        base,
        traces,
        leaf: cur,
    })
}

/// Depth-first search below `node` (at `level`) for a leaf equivalent to the
/// first-path leaf.
fn find_equivalent_leaf(
    engine: &mut Engine,
    fp: &FirstPath,
    node: &ColoredPartition,
    level: usize,
) -> Result<Option<Permutation>, GraphError> {
    if level == fp.base.len() {
        if !node.is_discrete() {
            return Ok(None);
        }
        let map = leaf_map(&fp.leaf, node);
        if engine.is_automorphism(&map) {
            return Ok(Some(Permutation::from_images_unchecked(map)));
        }
        return Ok(None);
    }
    let Some(t) = engine.target_cell(node) else {
        return Ok(None);
    };
    if t != fp.targets[level] || node.len[t as usize] != fp.nodes[level].len[t as usize] {
        return Ok(None);
    }
    let members: Vec<u32> = node.cell_members(t).to_vec();
    for x in members {
        let (child, tr) = engine.child(node, x)?;
        if tr != fp.traces[level] {
            continue;
        }
        if let Some(g) = find_equivalent_leaf(engine, fp, &child, level + 1)? {
            return Ok(Some(g));
        }
    }
    Ok(None)
}

/// Full automorphism group of a graph.
pub fn automorphism_group(g: &Graph) -> Result<PermutationGroup, GraphError> {
    Ok(automorphism_group_with(g, &AutOptions::default())?.group)
}

pub fn automorphism_group_with(g: &Graph, opts: &AutOptions) -> Result<AutomorphismResult, GraphError> {
    automorphisms_of_adjacency(g.adjacency(), opts)
}

pub(crate) fn automorphisms_of_adjacency(
    adj: &[Vec<u32>],
    opts: &AutOptions,
) -> Result<AutomorphismResult, GraphError> {
    let n = adj.len();
    let colors = opts.colors.clone().unwrap_or_else(|| vec![0; n]);
    if colors.len() != n {
        return Err(GraphError::Precondition("colour vector length differs from vertex count".into()));
    }
    let primary = opts.primary.unwrap_or(n).min(n);
    let mut engine = Engine {
        adj,
        primary,
        refiner: Refiner::new(n),
        nodes: 0,
        budget: opts.node_budget.unwrap_or(DEFAULT_NODE_BUDGET),
    };
    for s in &opts.seeds {
        if s.degree() != n
            || !engine.is_automorphism(s.images())
            || (0..n).any(|v| colors[v] != colors[s.image(v as u32) as usize])
        {
            return Err(GraphError::NotAnAutomorphism);
        }
    }
    let (root, _) = initial_partition(&mut engine, &colors);
    let fp = build_first_path(&mut engine, root)?;
    let k = fp.base.len();
    let mut found: Vec<(Permutation, usize)> = Vec::new();
    for i in (0..k).rev() {
        let mut uf = UnionFind::new(n);
        for (g, lvl) in &found {
            if *lvl >= i {
                uf.absorb(g);
            }
        }
        if i == 0 {
            for s in &opts.seeds {
                uf.absorb(s);
            }
        }
        let b = fp.base[i];
        let node = &fp.nodes[i];
        let mut cand: Vec<u32> = node.cell_members(fp.targets[i]).to_vec();
        cand.sort_unstable();
        let mut rejected_roots: Vec<u32> = Vec::new();
        for w in cand {
            let rw = uf.find(w);
            if rw == uf.find(b) || rejected_roots.contains(&rw) {
                continue;
            }
            let (child, tr) = engine.child(node, w)?;
            let hit = if tr == fp.traces[i] {
                find_equivalent_leaf(&mut engine, &fp, &child, i + 1)?
            } else {
                None
            };
            match hit {
                Some(gamma) => {
                    uf.absorb(&gamma);
                    rejected_roots = rejected_roots.iter().map(|&r| uf.find(r)).collect();
                    found.push((gamma, i));
                }
                None => rejected_roots.push(rw),
            }
        }
    }
    let mut generators: Vec<Permutation> = opts.seeds.clone();
    generators.extend(found.into_iter().map(|(g, _)| g));
    let points: Vec<u32> = (0..primary as u32).collect();
    let restricted: Vec<Permutation> = if primary == n {
        generators.clone()
    } else {
        generators
            .iter()
            .map(|g| {
                g.restrict_to(&points)
                    .ok_or_else(|| GraphError::Precondition("primary vertices are not invariant".into()))
            })
            .collect::<Result<_, _>>()?
    };
    if fp.base.iter().any(|&b| b as usize >= primary) {
        return Err(GraphError::Precondition(
            "individualizing primary vertices does not yield a discrete partition".into(),
        ));
    }
    let group = PermutationGroup::from_bsgs(primary, restricted.clone(), &fp.base, restricted);
    Ok(AutomorphismResult {
        group,
        generators,
        base: fp.base,
        nodes: engine.nodes,
    })
}

/// Canonical encoding: relabeled sorted edge list plus the refinement trace
/// and colour sequence.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub vertex_count: usize,
    pub colors: Vec<u32>,
    pub trace: Vec<u64>,
    pub edges: Vec<(u32, u32)>,
}

/// Canonical form and the labeling (vertex to canonical position) producing it.
pub fn canonical_labeling(g: &Graph, colors: Option<&[u32]>) -> Result<(CanonicalForm, Permutation), GraphError> {
    let n = g.vertex_count();
    let colors: Vec<u32> = colors.map(|c| c.to_vec()).unwrap_or_else(|| vec![0; n]);
    let aut = automorphism_group_with(
        g,
        &AutOptions {
            colors: Some(colors.clone()),
            ..Default::default()
        },
    )?;
    let mut engine = Engine {
        adj: g.adjacency(),
        primary: n,
        refiner: Refiner::new(n),
        nodes: 0,
        budget: DEFAULT_NODE_BUDGET,
    };
    let (root, t0) = initial_partition(&mut engine, &colors);
    let mut sorted_colors = colors.clone();
    sorted_colors.sort_unstable();
    let mut state = CanonState {
        best: None,
        gens: aut.generators.clone(),
        colors: sorted_colors,
    };
    let mut trace = vec![t0];
    let mut path = Vec::new();
    canon_search(&mut engine, g, &root, &mut trace, &mut path, &mut state)?;
    let (form, labeling) = state.best.expect("search visits at least one leaf");
    Ok((form, Permutation::from_images_unchecked(labeling)))
}

struct CanonState {
    best: Option<(CanonicalForm, Vec<u32>)>,
    gens: Vec<Permutation>,
    colors: Vec<u32>,
}

fn canon_search(
    engine: &mut Engine,
    g: &Graph,
    node: &ColoredPartition,
    trace: &mut Vec<u64>,
    path: &mut Vec<u32>,
    state: &mut CanonState,
) -> Result<(), GraphError> {
    if let Some((best, _)) = &state.best {
        let d = trace.len().min(best.trace.len());
        if trace.as_slice().cmp(&best.trace[..d]) == Ordering::Greater {
            return Ok(());
        }
    }
    let Some(t) = engine.target_cell(node) else {
        let labeling = node.pos.clone();
        let mut edges: Vec<(u32, u32)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (labeling[u as usize], labeling[v as usize]);
                (a.min(b), a.max(b))
            })
            .collect();
        edges.sort_unstable();
        let form = CanonicalForm {
            vertex_count: g.vertex_count(),
            colors: state.colors.clone(),
            trace: trace.clone(),
            edges,
        };
        if state.best.as_ref().is_none_or(|(b, _)| form < *b) {
            state.best = Some((form, labeling));
        }
        return Ok(());
    };
    // Children in one orbit of known automorphisms fixing the path give
    // isomorphic subtrees.
    let mut uf = UnionFind::new(g.vertex_count());
    for p in state.gens.iter().filter(|p| path.iter().all(|&v| p.image(v) == v)) {
        uf.absorb(p);
    }
    let mut seen_roots: Vec<u32> = Vec::new();
    let members: Vec<u32> = node.cell_members(t).to_vec();
    for x in members {
        let r = uf.find(x);
        if seen_roots.contains(&r) {
            continue;
        }
        seen_roots.push(r);
        let (child, tr) = engine.child(node, x)?;
        trace.push(tr);
        path.push(x);
        let res = canon_search(engine, g, &child, trace, path, state);
        trace.pop();
        path.pop();
        res?;
    }
    Ok(())
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm, GraphError> {
    Ok(canonical_labeling(g, None)?.0)
}

/// A vertex bijection `v -> f(v)` from `a` onto `b` preserving edges, if any.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Result<Option<Permutation>, GraphError> {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return Ok(None);
    }
    let mut da: Vec<usize> = a.adjacency().iter().map(|l| l.len()).collect();
    let mut db: Vec<usize> = b.adjacency().iter().map(|l| l.len()).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let (fa, la) = canonical_labeling(a, None)?;
    let (fb, lb) = canonical_labeling(b, None)?;
    if fa != fb {
        return Ok(None);
    }
    let f = la.compose(&lb.inverse());
    for (u, v) in a.edges() {
        if !b.has_edge(f.image(u), f.image(v)) {
            return Err(GraphError::Precondition("canonical labelings disagree".into()));
        }
    }
    Ok(Some(f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn cycle(n: u32) -> Graph {
        let edges: Vec<(u32, u32)> = (0..n).map(|i| (i.min((i + 1) % n), i.max((i + 1) % n))).collect();
        Graph::new(n as usize, &edges).unwrap()
    }

    #[test]
    fn cycle_automorphisms() {
        for n in 3..9 {
            let a = automorphism_group(&cycle(n)).unwrap();
            assert_eq!(a.order(), BigUint::from(2 * n));
        }
    }

    #[test]
    fn petersen_has_order_120() {
        let mut edges = Vec::new();
        for i in 0..5u32 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        let edges: Vec<(u32, u32)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        let g = Graph::new(10, &edges).unwrap();
        let a = automorphism_group(&g).unwrap();
        assert_eq!(a.order(), BigUint::from(120u32));
        for s in a.generators() {
            assert!(g.is_automorphism(s));
        }
    }

    #[test]
    fn isomorphism_of_relabeled_cycle() {
        let g = cycle(7);
        let p = Permutation::from_images(vec![3, 6, 0, 2, 5, 1, 4]).unwrap();
        let h = g.relabeled(&p);
        let f = is_isomorphic(&g, &h).unwrap().unwrap();
        for (u, v) in g.edges() {
            assert!(h.has_edge(f.image(u), f.image(v)));
        }
        assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
    }

    #[test]
    fn c6_is_not_k33() {
        let k33: Vec<(u32, u32)> = (0..3).flat_map(|i| (3..6).map(move |j| (i, j))).collect();
        let k33 = Graph::new(6, &k33).unwrap();
        assert!(is_isomorphic(&cycle(6), &k33).unwrap().is_none());
    }

    #[test]
    fn empty_and_complete_graphs() {
        let e = Graph::new(4, &[]).unwrap();
        assert_eq!(automorphism_group(&e).unwrap().order(), BigUint::from(24u32));
        let k: Vec<(u32, u32)> = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
        let k5 = Graph::new(5, &k).unwrap();
        assert_eq!(automorphism_group(&k5).unwrap().order(), BigUint::from(120u32));
    }
}
