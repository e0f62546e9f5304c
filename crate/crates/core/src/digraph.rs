//! A digraph on vertices 1..=v whose edges all point from smaller to
//! larger index. Used both for the transposition digraphs extracted from
//! circular sequences and for the extremal digraph of the bound
//! calculators.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardDigraph {
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    in_degrees: Vec<u64>,
    out_degrees: Vec<u64>,
}

impl ForwardDigraph {
    pub fn new(vertex_count: usize) -> Self {
        ForwardDigraph {
            vertex_count,
            edges: Vec::new(),
            in_degrees: vec![0; vertex_count + 1],
            out_degrees: vec![0; vertex_count + 1],
        }
    }

    /// Adds the edge i -> j; panics unless 1 <= i < j <= v.
    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i >= 1 && i < j && j <= self.vertex_count);
        self.edges.push((i, j));
        self.out_degrees[i] += 1;
        self.in_degrees[j] += 1;
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn in_degree(&self, vertex: usize) -> u64 {
        self.in_degrees[vertex]
    }

    pub fn out_degree(&self, vertex: usize) -> u64 {
        self.out_degrees[vertex]
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j))
    }
}
