//! Two-tier interference graph, edge conflict predicates, vertex labeling,
//! and the decomposition of the communication graph into oriented forests.
//!
//! The graph has two disjoint directed edge sets derived purely from
//! distance: communication edges for pairs within the communication range,
//! and interference edges for pairs beyond it but within the interference
//! range. Both relations are symmetric, so every edge appears in both
//! directions.
//!
//! The decomposition repeatedly extracts a spanning forest of the remaining
//! undirected communication graph by BFS. Each extracted forest is emitted
//! twice: once out-oriented (edges directed away from the roots, every
//! vertex has at most one incoming edge) and once in-oriented (the same
//! edges reversed, every vertex has at most one outgoing edge). Together the
//! oriented forests partition the directed communication edge set exactly.

use rand::seq::SliceRandom;

use crate::model::{Link, Network, RadioParams, SimRng};
use crate::radio::{comm_range, interference_range};

/// Distance-derived conflict structure: directed communication and
/// interference edges over the nodes of one network.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoTierGraph {
    n: usize,
    comm: Vec<Link>,
    intf: Vec<Link>,
    comm_mat: Vec<bool>,
    any_mat: Vec<bool>,
}

/// Classifies every ordered node pair by distance: at most `comm_range`
/// makes a communication edge, beyond that but at most `interference_range`
/// makes an interference edge. Both boundaries are inclusive.
pub fn build_two_tier_graph(net: &Network, rp: &RadioParams) -> TwoTierGraph {
    let n = net.num_nodes();
    let r_c = comm_range(rp);
    let r_i = interference_range(rp);
    let mut comm = Vec::new();
    let mut intf = Vec::new();
    let mut comm_mat = vec![false; n * n];
    let mut any_mat = vec![false; n * n];
    for j in 1..=n {
        for k in 1..=n {
            if j == k {
                continue;
            }
            let d = net.distance(j, k);
            if d <= r_c {
                comm.push(Link::new(j, k));
                comm_mat[(j - 1) * n + (k - 1)] = true;
                any_mat[(j - 1) * n + (k - 1)] = true;
            } else if d <= r_i {
                intf.push(Link::new(j, k));
                any_mat[(j - 1) * n + (k - 1)] = true;
            }
        }
    }
    TwoTierGraph { n, comm, intf, comm_mat, any_mat }
}

impl TwoTierGraph {
    pub fn num_nodes(&self) -> usize {
        self.n
    }

    /// Directed communication edges, sorted by `(tx, rx)`.
    pub fn comm_edges(&self) -> &[Link] {
        &self.comm
    }

    /// Directed interference edges, sorted by `(tx, rx)`.
    pub fn intf_edges(&self) -> &[Link] {
        &self.intf
    }

    pub fn has_comm_edge(&self, j: usize, k: usize) -> bool {
        self.comm_mat[(j - 1) * self.n + (k - 1)]
    }

    /// True when `(j, k)` is a communication or an interference edge.
    pub fn has_any_edge(&self, j: usize, k: usize) -> bool {
        self.any_mat[(j - 1) * self.n + (k - 1)]
    }

    /// Edge-list dump, one directed edge per line: `tx rx kind`, where the
    /// kind is `C` for communication and `I` for interference edges.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for e in &self.comm {
            out.push_str(&format!("{} {} C\n", e.tx, e.rx));
        }
        for e in &self.intf {
            out.push_str(&format!("{} {} I\n", e.tx, e.rx));
        }
        out
    }
}

/// True when the two links cannot share a slot for purely structural
/// reasons: they touch a common node, so some node would have to transmit
/// and/or receive twice at once. A link conflicts with itself.
pub fn has_primary_conflict(a: Link, b: Link) -> bool {
    a.tx == b.tx || a.tx == b.rx || a.rx == b.tx || a.rx == b.rx
}

/// True when either transmitter lies within interference reach of the other
/// link's receiver, i.e. `(a.tx, b.rx)` or `(b.tx, a.rx)` is an edge of
/// either tier. Only meaningful for links without a primary conflict.
pub fn has_secondary_conflict(a: Link, b: Link, g: &TwoTierGraph) -> bool {
    debug_assert!(!has_primary_conflict(a, b));
    g.has_any_edge(a.tx, b.rx) || g.has_any_edge(b.tx, a.rx)
}

// --------------------------------------------------------------------------
// Vertex labeling
// --------------------------------------------------------------------------

/// A bijection between the vertices `1..=n` and the labels `1..=n`.
#[derive(Debug, Clone, PartialEq)]
pub struct Labeling {
    of_vertex: Vec<usize>,
    by_label: Vec<usize>,
}

impl Labeling {
    pub fn num_vertices(&self) -> usize {
        self.of_vertex.len() - 1
    }

    pub fn label_of(&self, vertex: usize) -> usize {
        self.of_vertex[vertex]
    }

    pub fn vertex_with_label(&self, label: usize) -> usize {
        self.by_label[label]
    }
}

/// Draws a uniformly random labeling via a Fisher-Yates shuffle of the
/// identity permutation.
pub fn random_labeling(num_vertices: usize, rng: &mut SimRng) -> Labeling {
    let mut labels: Vec<usize> = (1..=num_vertices).collect();
    labels.shuffle(rng);
    let mut of_vertex = vec![0; num_vertices + 1];
    let mut by_label = vec![0; num_vertices + 1];
    for (i, &label) in labels.iter().enumerate() {
        of_vertex[i + 1] = label;
        by_label[label] = i + 1;
    }
    Labeling { of_vertex, by_label }
}

// --------------------------------------------------------------------------
// Forest decomposition
// --------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Orientation {
    /// Edges point away from the roots; every vertex has at most one
    /// incoming edge.
    Out,
    /// Edges point toward the roots; every vertex has at most one outgoing
    /// edge.
    In,
}

/// One oriented forest produced by the decomposition: a set of directed
/// communication edges that is acyclic when read as undirected.
#[derive(Debug, Clone, PartialEq)]
pub struct OrientedForest {
    orientation: Orientation,
    edges: Vec<Link>,
}

impl OrientedForest {
    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn edges(&self) -> &[Link] {
        &self.edges
    }
}

/// Decomposes the undirected communication graph into spanning forests by
/// successive BFS and orients each forest both ways.
///
/// Every BFS round scans roots in ascending vertex id, visits neighbors in
/// ascending id, and collects the tree edges of the still-unclaimed
/// undirected graph; claimed edges are removed before the next round. Each
/// round yields two [`OrientedForest`]s, out-oriented first, and rounds
/// appear in extraction order. The number of undirected forests (half the
/// returned length) is the thickness estimate reported by the experiment
/// harness.
pub fn decompose_into_oriented_forests(g: &TwoTierGraph) -> Vec<OrientedForest> {
    let n = g.num_nodes();
    // Undirected adjacency of the communication graph; neighbor lists are
    // ascending because comm_edges is sorted.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for e in g.comm_edges() {
        if e.tx < e.rx {
            adj[e.tx].push(e.rx);
            adj[e.rx].push(e.tx);
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let mut remaining: Vec<bool> = vec![false; n * n];
    let mut remaining_count = 0usize;
    for e in g.comm_edges() {
        if e.tx < e.rx {
            remaining[(e.tx - 1) * n + (e.rx - 1)] = true;
            remaining_count += 1;
        }
    }
    let undirected = |a: usize, b: usize| {
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        (lo - 1) * n + (hi - 1)
    };

    let mut forests = Vec::new();
    while remaining_count > 0 {
        let mut visited = vec![false; n + 1];
        let mut tree_edges: Vec<Link> = Vec::new();
        let mut queue = std::collections::VecDeque::new();
        for root in 1..=n {
            if visited[root] {
                continue;
            }
            visited[root] = true;
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                for &v in &adj[u] {
                    if !visited[v] && remaining[undirected(u, v)] {
                        visited[v] = true;
                        remaining[undirected(u, v)] = false;
                        remaining_count -= 1;
                        tree_edges.push(Link::new(u, v)); // directed away from the root
                        queue.push_back(v);
                    }
                }
            }
        }
        debug_assert!(!tree_edges.is_empty(), "a BFS round over a non-empty graph claims an edge");
        let reversed: Vec<Link> = tree_edges.iter().map(|e| e.reversed()).collect();
        forests.push(OrientedForest { orientation: Orientation::Out, edges: tree_edges });
        forests.push(OrientedForest { orientation: Orientation::In, edges: reversed });
    }
    forests
}

/// The shared edge scan order of both schedulers: forests in decomposition
/// order; within a forest, labels `1..=n` ascending, taking the unique edge
/// whose head (out-oriented) or tail (in-oriented) carries the current
/// label, if any.
pub fn coloring_order(forests: &[OrientedForest], labeling: &Labeling) -> Vec<Link> {
    let n = labeling.num_vertices();
    let mut order = Vec::new();
    for forest in forests {
        let mut edge_at = vec![None; n + 1];
        for &e in forest.edges() {
            let key = match forest.orientation() {
                Orientation::Out => e.rx,
                Orientation::In => e.tx,
            };
            debug_assert!(edge_at[key].is_none(), "orientation degree bound");
            edge_at[key] = Some(e);
        }
        for label in 1..=n {
            if let Some(e) = edge_at[labeling.vertex_with_label(label)] {
                order.push(e);
            }
        }
    }
    order
}
