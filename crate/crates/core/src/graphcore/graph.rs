use std::collections::VecDeque;
use std::fmt::Write as _;

use crate::error::GraphError;
use crate::perm::Permutation;

/// Simple undirected graph with sorted adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list, rejecting loops and repeated edges.
    pub fn new(n: usize, edges: &[(u32, u32)]) -> Result<Self, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(GraphError::Parse(format!("edge ({u}, {v}) out of range")));
            }
            if u == v {
                return Err(GraphError::Parse(format!("loop at {u}")));
            }
            adj[u as usize].push(v);
            adj[v as usize].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            let before = list.len();
            list.dedup();
            if list.len() != before {
                return Err(GraphError::Parse("repeated edge".into()));
            }
        }
        Ok(Graph {
            edge_count: edges.len(),
            adj,
        })
    }

    /// Builds a graph from possibly repeated edges, merging duplicates and
    /// dropping loops.
    pub fn from_edges_lossy(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            if u != v {
                adj[u as usize].push(v);
                adj[v as usize].push(u);
            }
        }
        let mut count = 0;
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
            count += list.len();
        }
        Graph {
            adj,
            edge_count: count / 2,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    pub fn adjacency(&self) -> &[Vec<u32>] {
        &self.adj
    }

    pub fn has_edge(&self, u: u32, v: u32) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Common valency, or `None` when the graph is not regular.
    pub fn valency(&self) -> Option<usize> {
        let d = self.adj.first().map(|l| l.len())?;
        self.adj.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if (u as u32) < v {
                    out.push((u as u32, v));
                }
            }
        }
        out
    }

    /// Arcs `(u, v)` in lexicographic order.
    pub fn arcs(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::with_capacity(2 * self.edge_count);
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                out.push((u as u32, v));
            }
        }
        out
    }

    pub fn components(&self) -> Vec<Vec<u32>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s as u32];
            let mut queue = VecDeque::from([s as u32]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u as usize] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.vertex_count() <= 1 || self.components().len() == 1
    }

    /// Two-colouring if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<u8>> {
        let n = self.vertex_count();
        let mut side = vec![u8::MAX; n];
        for s in 0..n {
            if side[s] != u8::MAX {
                continue;
            }
            side[s] = 0;
            let mut queue = VecDeque::from([s as u32]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u as usize] {
                    if side[v as usize] == u8::MAX {
                        side[v as usize] = 1 - side[u as usize];
                        queue.push_back(v);
                    } else if side[v as usize] == side[u as usize] {
                        return None;
                    }
                }
            }
        }
        Some(side)
    }

    /// True when `p` maps edges to edges.
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        if p.degree() != self.vertex_count() {
            return false;
        }
        self.adj.iter().enumerate().all(|(u, list)| {
            let pu = p.image(u as u32);
            self.adj[pu as usize].len() == list.len()
                && list.iter().all(|&v| self.has_edge(pu, p.image(v)))
        })
    }

    /// The graph with vertex `v` renamed to `p(v)`.
    pub fn relabeled(&self, p: &Permutation) -> Graph {
        let edges: Vec<(u32, u32)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (p.image(u), p.image(v)))
            .collect();
        Graph::new(self.vertex_count(), &edges).expect("relabeling preserves simplicity")
    }

    /// Text format: `n m` followed by `u v` lines with `u < v`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.vertex_count(), self.edge_count);
        for (u, v) in self.edges() {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty graph file".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m as usize);
        for line in lines {
            let (u, v) = parse_pair(line)?;
            edges.push((u.min(v), u.max(v)));
        }
        if edges.len() != m as usize {
            return Err(GraphError::Parse(format!(
                "header announces {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::new(n as usize, &edges)
    }
}

fn parse_pair(line: &str) -> Result<(u32, u32), GraphError> {
    let mut it = line.split_whitespace().map(|t| t.parse::<u32>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok((a, b)),
        _ => Err(GraphError::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// Directed graph with out- and in-adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    out: Vec<Vec<u32>>,
    inn: Vec<Vec<u32>>,
}

impl Digraph {
    pub fn new(n: usize, arcs: &[(u32, u32)]) -> Self {
        let mut out = vec![Vec::new(); n];
        let mut inn = vec![Vec::new(); n];
        for &(u, v) in arcs {
            out[u as usize].push(v);
            inn[v as usize].push(u);
        }
        for l in out.iter_mut().chain(inn.iter_mut()) {
            l.sort_unstable();
            l.dedup();
        }
        Digraph { out, inn }
    }

    pub fn vertex_count(&self) -> usize {
        self.out.len()
    }

    pub fn out_neighbors(&self, v: u32) -> &[u32] {
        &self.out[v as usize]
    }

    pub fn in_neighbors(&self, v: u32) -> &[u32] {
        &self.inn[v as usize]
    }

    pub fn has_arc(&self, u: u32, v: u32) -> bool {
        self.out[u as usize].binary_search(&v).is_ok()
    }

    pub fn arcs(&self) -> Vec<(u32, u32)> {
        let mut v = Vec::new();
        for (u, l) in self.out.iter().enumerate() {
            for &w in l {
                v.push((u as u32, w));
            }
        }
        v
    }

    pub fn to_text(&self) -> String {
        let arcs = self.arcs();
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.vertex_count(), arcs.len());
        for (u, v) in arcs {
            let _ = writeln!(s, "{u} {v}");
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self, GraphError> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| GraphError::Parse("empty digraph file".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut arcs = Vec::new();
        for line in lines {
            let (u, v) = parse_pair(line)?;
            if u >= n || v >= n {
                return Err(GraphError::Parse(format!("arc ({u}, {v}) out of range")));
            }
            arcs.push((u, v));
        }
        if arcs.len() != m as usize {
            return Err(GraphError::Parse(format!("header announces {m} arcs, found {}", arcs.len())));
        }
        Ok(Digraph::new(n as usize, &arcs))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let g = Graph::new(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let t = g.to_text();
        assert_eq!(Graph::parse(&t).unwrap(), g);
        assert_eq!(g.valency(), Some(2));
        assert!(g.is_connected());
        assert!(g.bipartition().is_some());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Graph::new(3, &[(0, 0)]).is_err());
        assert!(Graph::new(3, &[(0, 1), (1, 0)]).is_err());
        assert!(Graph::parse("3 2\n0 1\n").is_err());
    }

    #[test]
    fn digraph_lists_agree() {
        let d = Digraph::new(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(d.out_neighbors(0), &[1]);
        assert_eq!(d.in_neighbors(0), &[2]);
        assert_eq!(Digraph::parse(&d.to_text()).unwrap(), d);
    }
}
