use thiserror::Error;

pub type NodeId = usize;
pub type Port = usize;

/// One undirected edge with the port number used at each endpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: NodeId,
    pub port_at_u: Port,
    pub v: NodeId,
    pub port_at_v: Port,
}

impl Edge {
    pub fn new(u: NodeId, port_at_u: Port, v: NodeId, port_at_v: Port) -> Self {
        Edge { u, port_at_u, v, port_at_v }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("node {node} uses port {port} twice")]
    DuplicatePort { node: NodeId, port: Port },
    #[error("node {node} has degree {degree} but is missing port {missing}")]
    PortGap { node: NodeId, degree: usize, missing: Port },
    #[error("edge list does not describe a tree: {0}")]
    NotATree(String),
    #[error("port {port} at node {node} points to {neighbor}, which does not point back")]
    AsymmetricEdge { node: NodeId, port: Port, neighbor: NodeId },
    #[error("node id {node} is out of range for {count} nodes")]
    NodeOutOfRange { node: NodeId, count: usize },
}

/// An undirected tree whose node `v` numbers its incident edges `0..deg(v)`.
///
/// Node ids exist only for the simulator; electors never see them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PortLabeledTree {
    // adjacency[v][p] = (neighbor reached through port p, port at that neighbor)
    adjacency: Vec<Vec<(NodeId, Port)>>,
}

/// Builds a tree from its edge list; the node count is one more than the
/// largest id mentioned (a lone node needs [`PortLabeledTree::from_edges`]).
pub fn build_tree(edges: &[Edge]) -> Result<PortLabeledTree, TreeError> {
    let count = edges.iter().map(|e| e.u.max(e.v) + 1).max().unwrap_or(1);
    PortLabeledTree::from_edges(count, edges)
}

impl PortLabeledTree {
    pub fn single_node() -> Self {
        PortLabeledTree { adjacency: vec![Vec::new()] }
    }

    pub fn from_edges(count: usize, edges: &[Edge]) -> Result<Self, TreeError> {
        if count == 0 {
            return Err(TreeError::NotATree("a tree needs at least one node".into()));
        }
        let mut slots: Vec<Vec<Option<(NodeId, Port)>>> = vec![Vec::new(); count];
        for e in edges {
            for node in [e.u, e.v] {
                if node >= count {
                    return Err(TreeError::NodeOutOfRange { node, count });
                }
            }
            if e.u == e.v {
                return Err(TreeError::NotATree(format!("self-loop at node {}", e.u)));
            }
            for (node, port, other, other_port) in
                [(e.u, e.port_at_u, e.v, e.port_at_v), (e.v, e.port_at_v, e.u, e.port_at_u)]
            {
                let row = &mut slots[node];
                if row.len() <= port {
                    row.resize(port + 1, None);
                }
                if row[port].is_some() {
                    return Err(TreeError::DuplicatePort { node, port });
                }
                row[port] = Some((other, other_port));
            }
        }
        let mut adjacency = Vec::with_capacity(count);
        for (node, row) in slots.into_iter().enumerate() {
            let degree = row.iter().filter(|s| s.is_some()).count();
            if let Some(missing) = row.iter().position(|s| s.is_none()) {
                return Err(TreeError::PortGap { node, degree, missing });
            }
            adjacency.push(row.into_iter().map(|s| s.unwrap()).collect());
        }
        Self::from_adjacency(adjacency)
    }

    /// Accepts `adjacency[v][p] = (neighbor, port at neighbor)` after checking
    /// that every edge is recorded consistently from both sides.
    pub fn from_adjacency(adjacency: Vec<Vec<(NodeId, Port)>>) -> Result<Self, TreeError> {
        let count = adjacency.len();
        if count == 0 {
            return Err(TreeError::NotATree("a tree needs at least one node".into()));
        }
        let mut half_edges = 0usize;
        for (node, row) in adjacency.iter().enumerate() {
            for (port, &(other, other_port)) in row.iter().enumerate() {
                if other >= count {
                    return Err(TreeError::NodeOutOfRange { node: other, count });
                }
                if other == node {
                    return Err(TreeError::NotATree(format!("self-loop at node {node}")));
                }
                match adjacency[other].get(other_port) {
                    Some(&(back, back_port)) if back == node && back_port == port => {}
                    _ => return Err(TreeError::AsymmetricEdge { node, port, neighbor: other }),
                }
                half_edges += 1;
            }
        }
        if half_edges != 2 * (count - 1) {
            return Err(TreeError::NotATree(format!(
                "{} edges for {} nodes",
                half_edges / 2,
                count
            )));
        }
        let tree = PortLabeledTree { adjacency };
        let mut seen = vec![false; count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(x) = stack.pop() {
            for &(y, _) in &tree.adjacency[x] {
                if !seen[y] {
                    seen[y] = true;
                    reached += 1;
                    stack.push(y);
                }
            }
        }
        if reached != count {
            return Err(TreeError::NotATree("graph is disconnected".into()));
        }
        Ok(tree)
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v].len()
    }

    /// Neighbor reached through `port` at `v`, together with the port used at that neighbor.
    pub fn neighbor(&self, v: NodeId, port: Port) -> Option<(NodeId, Port)> {
        self.adjacency[v].get(port).copied()
    }

    pub fn neighbors(&self, v: NodeId) -> &[(NodeId, Port)] {
        &self.adjacency[v]
    }

    /// Port at `v` of the edge towards the adjacent node `w`.
    pub fn port_towards(&self, v: NodeId, w: NodeId) -> Option<Port> {
        self.adjacency[v].iter().position(|&(x, _)| x == w)
    }

    /// Each edge once, reported from its smaller endpoint.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.node_count().saturating_sub(1));
        for (u, row) in self.adjacency.iter().enumerate() {
            for (pu, &(v, pv)) in row.iter().enumerate() {
                if u < v {
                    out.push(Edge::new(u, pu, v, pv));
                }
            }
        }
        out
    }

    /// Exchanges the labels of ports `a` and `b` at `v`, keeping both edge ends consistent.
    pub fn swap_ports(&mut self, v: NodeId, a: Port, b: Port) {
        if a == b {
            return;
        }
        let (na, pa) = self.adjacency[v][a];
        let (nb, pb) = self.adjacency[v][b];
        self.adjacency[v].swap(a, b);
        self.adjacency[na][pa].1 = b;
        self.adjacency[nb][pb].1 = a;
    }

    /// Renames node `v` to `perm[v]`; ports are untouched.
    pub fn relabel(&self, perm: &[NodeId]) -> PortLabeledTree {
        let mut adjacency = vec![Vec::new(); self.node_count()];
        for (v, row) in self.adjacency.iter().enumerate() {
            adjacency[perm[v]] = row.iter().map(|&(w, p)| (perm[w], p)).collect();
        }
        PortLabeledTree { adjacency }
    }
}
