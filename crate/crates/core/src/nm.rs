//! Neighbourhood matrices and their power sequence.
//!
//! For a graph `G` the neighbourhood matrix has `-deg(i)` on the diagonal,
//! `|N(j) \ N(i)|` on edges and `-|N(i) ∩ N(j)|` on non-edges. It coincides
//! with the product `A(G) · L(G)`. Thresholding its nonzero off-diagonal
//! pattern gives the next graph of the sequence; the sequence stops once the
//! pattern is full or stops growing.

use crate::graph::{Graph, IntMatrix};
use crate::registry::{Named, Registry};

/// A neighbourhood matrix together with the sequence level it belongs to.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct NmMatrix {
    eta: IntMatrix,
    level: usize,
}

impl NmMatrix {
    pub fn new(eta: IntMatrix, level: usize) -> Self {
        assert_eq!(
            eta.rows(),
            eta.cols(),
            "neighbourhood matrix must be square"
        );
        NmMatrix { eta, level }
    }

    pub fn n(&self) -> usize {
        self.eta.rows()
    }

    pub fn level(&self) -> usize {
        self.level
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.eta.get(i, j)
    }

    /// `|η_ii|`, the degree of `i` in the thresholded graph of this level.
    #[inline]
    pub fn degree(&self, i: usize) -> usize {
        self.eta.get(i, i).unsigned_abs() as usize
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.eta
    }

    /// Columns of row `i` holding a positive entry.
    pub fn neighbour_set(&self, i: usize) -> Vec<usize> {
        (0..self.n()).filter(|&x| self.get(i, x) > 0).collect()
    }

    /// Off-diagonal columns of row `i` holding a negative entry.
    pub fn x_set(&self, i: usize) -> Vec<usize> {
        (0..self.n())
            .filter(|&y| y != i && self.get(i, y) < 0)
            .collect()
    }

    pub fn count_nonzero(&self) -> usize {
        self.eta.count_nonzero()
    }

    /// Whitespace-separated signed integers, one row per line.
    pub fn dump(&self) -> String {
        self.eta.dump()
    }
}

/// A way of building the neighbourhood matrix of a graph.
pub trait NmBuilder: Named + Send + Sync {
    fn build(&self, g: &Graph) -> IntMatrix;
}

/// Evaluates the three-case definition entry by entry.
pub struct DirectNm;

/// Multiplies the adjacency matrix by the Laplacian.
pub struct ProductNm;

impl Named for DirectNm {
    fn name(&self) -> &'static str {
        "direct"
    }

    fn description(&self) -> &'static str {
        "entrywise from neighbourhood set differences and intersections"
    }
}

impl NmBuilder for DirectNm {
    fn build(&self, g: &Graph) -> IntMatrix {
        let n = g.n();
        IntMatrix::from_fn(n, n, |i, j| {
            if i == j {
                -(g.degree(i) as i64)
            } else if g.has_edge(i, j) {
                g.neighbors(j)
                    .iter()
                    .filter(|&&x| !g.has_edge(i, x))
                    .count() as i64
            } else {
                -(g.neighbors(i).iter().filter(|&&x| g.has_edge(j, x)).count() as i64)
            }
        })
    }
}

impl Named for ProductNm {
    fn name(&self) -> &'static str {
        "product"
    }

    fn description(&self) -> &'static str {
        "adjacency matrix times Laplacian, exact integer arithmetic"
    }
}

impl NmBuilder for ProductNm {
    fn build(&self, g: &Graph) -> IntMatrix {
        g.adjacency_matrix().matmul(&g.laplacian())
    }
}

/// Registry of neighbourhood-matrix builders; `product` is the default.
pub fn builders() -> Registry<dyn NmBuilder> {
    Registry::<dyn NmBuilder>::new("neighbourhood-matrix builder")
        .with(Box::new(ProductNm))
        .with(Box::new(DirectNm))
}

pub fn nm_direct(g: &Graph) -> NmMatrix {
    NmMatrix::new(DirectNm.build(g), 1)
}

pub fn nm_product(g: &Graph) -> NmMatrix {
    NmMatrix::new(ProductNm.build(g), 1)
}

/// `NM^{1..k}` for a graph, with the iteration number `k`.
#[derive(Clone, Debug)]
pub struct NmSequence {
    matrices: Vec<NmMatrix>,
    nonzero_final: usize,
}

impl NmSequence {
    /// The iteration number.
    pub fn k(&self) -> usize {
        self.matrices.len()
    }

    pub fn n(&self) -> usize {
        self.matrices[0].n()
    }

    pub fn matrices(&self) -> &[NmMatrix] {
        &self.matrices
    }

    /// `NM^{level}`, 1-based.
    pub fn level(&self, level: usize) -> &NmMatrix {
        &self.matrices[level - 1]
    }

    /// Nonzero entries of the last matrix; equals `n²` exactly when the graph is connected.
    pub fn nonzero_count_final(&self) -> usize {
        self.nonzero_final
    }
}

pub fn power_sequence(g: &Graph) -> NmSequence {
    power_sequence_with(g, &ProductNm)
}

/// Builds the sequence with the given builder.
///
/// Stops at the first level whose matrix has no zero entry, or one level
/// after the nonzero count stops growing (that probe matrix is dropped). The
/// first matrix is always kept, so `k >= 1` even for edgeless graphs.
pub fn power_sequence_with(g: &Graph, builder: &dyn NmBuilder) -> NmSequence {
    let n = g.n();
    let full = n * n;
    let mut matrices: Vec<NmMatrix> = Vec::new();
    let mut current = g.clone();
    let mut previous_nonzero = None;
    loop {
        let level = matrices.len() + 1;
        let eta = NmMatrix::new(builder.build(&current), level);
        let nonzero = eta.count_nonzero();
        if nonzero == full {
            matrices.push(eta);
            break;
        }
        if previous_nonzero == Some(nonzero) {
            break;
        }
        if matrices.is_empty() && nonzero == 0 {
            // edgeless: the first level is all zeros and nothing can grow
            matrices.push(eta);
            break;
        }
        previous_nonzero = Some(nonzero);
        current = Graph::from_nonzero_pattern(eta.matrix());
        matrices.push(eta);
    }
    let nonzero_final = matrices.last().map_or(0, NmMatrix::count_nonzero);
    NmSequence {
        matrices,
        nonzero_final,
    }
}

/// `⌈log₂ x⌉` for `x >= 1`.
pub fn ceil_log2(x: usize) -> usize {
    assert!(x >= 1);
    (usize::BITS - (x - 1).leading_zeros()) as usize
}
