//! Dense matrix types backing the spectral computations.
//!
//! Matrices whose entries are combinatorial counts (incidence, degrees, clique
//! adjacency, the signless Laplacian itself) are built in exact integer
//! arithmetic. Floating point enters only once a matrix is handed to an
//! eigensolver via [`SymMatrix`].

/// Vertex-edge incidence matrix: `rows` vertices by `cols` edges, entry 1 iff
/// the vertex lies in the edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl IncidenceMatrix {
    pub(crate) fn from_edges(n: usize, edges: &[Vec<usize>]) -> Self {
        let m = edges.len();
        let mut data = vec![0u8; n * m];
        for (j, edge) in edges.iter().enumerate() {
            for &v in edge {
                data[v * m + j] = 1;
            }
        }
        IncidenceMatrix { rows: n, cols: m, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Entry b(v, e): true iff vertex `v` lies in edge `e`.
    pub fn get(&self, v: usize, e: usize) -> bool {
        self.data[v * self.cols + e] == 1
    }

    /// Number of ones in column `e` (the edge cardinality).
    pub fn column_sum(&self, e: usize) -> usize {
        (0..self.rows).filter(|&v| self.get(v, e)).count()
    }

    /// Number of ones in row `v` (the vertex degree).
    pub fn row_sum(&self, v: usize) -> usize {
        (0..self.cols).filter(|&e| self.get(v, e)).count()
    }

    /// The Gram matrix B·Bᵀ in exact integer arithmetic.
    pub fn gram(&self) -> IntMatrix {
        let n = self.rows;
        let mut out = IntMatrix::zero(n);
        for i in 0..n {
            for j in i..n {
                let mut acc = 0u64;
                for e in 0..self.cols {
                    acc += u64::from(self.data[i * self.cols + e] & self.data[j * self.cols + e]);
                }
                out.set_sym(i, j, acc);
            }
        }
        out
    }
}

/// Dense square matrix with exact nonnegative integer entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    order: usize,
    data: Vec<u64>,
}

impl IntMatrix {
    pub fn zero(order: usize) -> Self {
        IntMatrix { order, data: vec![0; order * order] }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.order + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.order + j] = value;
    }

    /// Sets both (i, j) and (j, i).
    pub fn set_sym(&mut self, i: usize, j: usize, value: u64) {
        self.set(i, j, value);
        self.set(j, i, value);
    }

    pub fn add_assign(&mut self, i: usize, j: usize, value: u64) {
        self.data[i * self.order + j] += value;
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.order).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Sum of all entries in row `i`.
    pub fn row_sum(&self, i: usize) -> u64 {
        (0..self.order).map(|j| self.get(i, j)).sum()
    }

    pub fn trace(&self) -> u64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    /// Exact widening conversion for the eigensolvers.
    pub fn to_sym(&self) -> SymMatrix {
        SymMatrix {
            order: self.order,
            data: self.data.iter().map(|&v| v as f64).collect(),
        }
    }
}

/// Dense symmetric real matrix.
///
/// Symmetry is an invariant of every constructor; entries are stored fully
/// (both triangles) so matrix-vector products stay branch-free.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymMatrix {
    /// Builds the matrix from an entry function, mirroring (i, j) onto (j, i).
    pub fn from_fn(order: usize, mut entry: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; order * order];
        for i in 0..order {
            for j in i..order {
                let v = entry(i, j);
                data[i * order + j] = v;
                data[j * order + i] = v;
            }
        }
        SymMatrix { order, data }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0f64, |acc, v| acc.max(v.abs()))
    }

    /// y = M·x.
    pub fn mul_vec(&self, x: &[f64]) -> Vec<f64> {
        debug_assert_eq!(x.len(), self.order);
        let n = self.order;
        let mut y = vec![0.0; n];
        for (i, yi) in y.iter_mut().enumerate() {
            let row = &self.data[i * n..(i + 1) * n];
            let mut acc = 0.0;
            for j in 0..n {
                acc += row[j] * x[j];
            }
            *yi = acc;
        }
        y
    }

    /// xᵀ·M·x.
    pub fn quadratic_form(&self, x: &[f64]) -> f64 {
        let y = self.mul_vec(x);
        dot(x, &y)
    }

    pub(crate) fn data(&self) -> &[f64] {
        &self.data
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}
