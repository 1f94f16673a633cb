use super::Matroid;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Cycle matroid of a multigraph: element `i` is edge `edges[i]`, and a set
/// of edges is independent iff it contains no cycle.
///
/// Each query builds a fresh union-find over the queried edges only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphicMatroid {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
}

impl GraphicMatroid {
    pub fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        for &(a, b) in &edges {
            let bad = a.max(b);
            if bad >= vertex_count {
                return Err(Error::InvalidInstance(format!(
                    "edge endpoint {bad} outside {vertex_count} vertices"
                )));
            }
        }
        Ok(Self { vertex_count, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }
}

impl Matroid for GraphicMatroid {
    fn ground_size(&self) -> usize {
        self.edges.len()
    }

    fn is_independent(&self, set: &ElementSet) -> bool {
        let mut dsu = DisjointSets::new(self.vertex_count);
        set.iter().all(|e| {
            let (a, b) = self.edges[e.index()];
            dsu.union(a, b)
        })
    }
}

struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    fn new(n: usize) -> Self {
        Self {
            parent: (0..n).collect(),
            rank: vec![0; n],
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already joined.
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}
