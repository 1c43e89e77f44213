use crate::{Error, Result};

/// Uniform grid on `[0, L]` with `N` cells. Interior nodes are `x_i = i h`,
/// `i = 1..N-1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid1D {
    length: f64,
    n_cells: usize,
}

impl Grid1D {
    pub fn new(length: f64, n_cells: usize) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::InvalidGrid(format!(
                "length must be positive, got {length}"
            )));
        }
        if n_cells < 2 {
            return Err(Error::InvalidGrid(format!(
                "need at least 2 cells, got {n_cells}"
            )));
        }
        Ok(Grid1D { length, n_cells })
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn n_cells(&self) -> usize {
        self.n_cells
    }

    pub fn spacing(&self) -> f64 {
        self.length / self.n_cells as f64
    }

    pub fn interior_count(&self) -> usize {
        self.n_cells - 1
    }

    /// Coordinate of node `i`, `0 <= i <= N`.
    pub fn node(&self, i: usize) -> f64 {
        if i == self.n_cells {
            self.length
        } else {
            i as f64 * self.spacing()
        }
    }

    pub fn interior_nodes(&self) -> Vec<f64> {
        (1..self.n_cells).map(|i| self.node(i)).collect()
    }
}

/// The box `[0, L]^dim`, `dim ∈ {1, 2}`, discretised by a [`Grid1D`] along
/// every axis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoxDomain {
    grid: Grid1D,
    dim: usize,
}

impl BoxDomain {
    pub fn new(grid: Grid1D, dim: usize) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(Error::InvalidGrid(format!(
                "dimension must be 1 or 2, got {dim}"
            )));
        }
        Ok(BoxDomain { grid, dim })
    }

    pub fn interval(grid: Grid1D) -> Self {
        BoxDomain { grid, dim: 1 }
    }

    pub fn grid(&self) -> Grid1D {
        self.grid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn spacing(&self) -> f64 {
        self.grid.spacing()
    }

    /// Number of interior nodes of `Ω_h`.
    pub fn sites(&self) -> usize {
        self.grid.interior_count().pow(self.dim as u32)
    }

    /// Number of nodes of the closed grid, boundary included.
    pub fn closed_sites(&self) -> usize {
        (self.grid.n_cells() + 1).pow(self.dim as u32)
    }

    /// Quadrature weight of one node of `Ω_h`.
    pub fn site_weight(&self) -> f64 {
        self.spacing().powi(self.dim as i32)
    }

    /// Quadrature weight `h^d` of one node of the product grid, `d = 2 dim`.
    pub fn product_weight(&self) -> f64 {
        self.spacing().powi(2 * self.dim as i32)
    }

    /// Per-axis node indices (1-based, into the closed grid) of site `s`.
    pub fn site_indices(&self, s: usize) -> Vec<usize> {
        let m = self.grid.interior_count();
        axis_digits(s, m, self.dim)
            .into_iter()
            .map(|d| d + 1)
            .collect()
    }

    pub fn site_point(&self, s: usize) -> Vec<f64> {
        self.site_indices(s)
            .into_iter()
            .map(|i| self.grid.node(i))
            .collect()
    }

    /// Per-axis node indices of closed node `c`.
    pub fn closed_indices(&self, c: usize) -> Vec<usize> {
        axis_digits(c, self.grid.n_cells() + 1, self.dim)
    }

    pub fn closed_point(&self, c: usize) -> Vec<f64> {
        self.closed_indices(c)
            .into_iter()
            .map(|i| self.grid.node(i))
            .collect()
    }

    pub fn closed_index(&self, indices: &[usize]) -> usize {
        let stride = self.grid.n_cells() + 1;
        indices.iter().fold(0, |acc, &i| acc * stride + i)
    }

    /// Closed-grid index of interior site `s`.
    pub fn closed_index_of_site(&self, s: usize) -> usize {
        self.closed_index(&self.site_indices(s))
    }

    pub fn is_boundary(&self, c: usize) -> bool {
        let n = self.grid.n_cells();
        self.closed_indices(c).iter().any(|&i| i == 0 || i == n)
    }
}

fn axis_digits(mut index: usize, base: usize, dim: usize) -> Vec<usize> {
    let mut digits = vec![0; dim];
    for d in digits.iter_mut().rev() {
        *d = index % base;
        index /= base;
    }
    digits
}
