//! Graded time meshes and the two-point collocation grid on top of them.
//!
//! Intervals are indexed from 1 as I_n = (t_{n-1}, t_n], n = 1..N, and
//! collocation points as t_{n,j}, j = 1, 2.

use crate::error::{Error, Result};

/// Two-point Gauss abscissae on (0, 1).
pub const GAUSS_XI: (f64, f64) = (
    0.211_324_865_405_187_1, // (3 - sqrt 3) / 6
    0.788_675_134_594_812_9, // (3 + sqrt 3) / 6
);

/// Nodes t_n = (n/N)^delta T, n = 0..N.
#[derive(Debug, Clone, PartialEq)]
pub struct GradedMesh {
    intervals: usize,
    delta: f64,
    horizon: f64,
    nodes: Vec<f64>,
}

impl GradedMesh {
    pub fn new(intervals: usize, delta: f64, horizon: f64) -> Result<Self> {
        if intervals == 0 {
            return Err(Error::domain("mesh needs N >= 1 intervals"));
        }
        if !(delta >= 1.0) || !delta.is_finite() {
            return Err(Error::domain(format!(
                "grading exponent delta = {delta} must be >= 1"
            )));
        }
        if !(horizon > 0.0) || !horizon.is_finite() {
            return Err(Error::domain(format!(
                "horizon T = {horizon} must be positive"
            )));
        }
        let nf = intervals as f64;
        let mut nodes: Vec<f64> = (0..=intervals)
            .map(|n| (n as f64 / nf).powf(delta) * horizon)
            .collect();
        nodes[intervals] = horizon;
        Ok(Self {
            intervals,
            delta,
            horizon,
            nodes,
        })
    }

    /// N.
    pub fn intervals(&self) -> usize {
        self.intervals
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn horizon(&self) -> f64 {
        self.horizon
    }

    /// t_0, ..., t_N.
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, n: usize) -> f64 {
        self.nodes[n]
    }

    /// Δt_n = t_n - t_{n-1}, n = 1..N.
    pub fn step(&self, n: usize) -> f64 {
        self.nodes[n] - self.nodes[n - 1]
    }

    /// (t_{n-1} + t_n) / 2.
    pub fn midpoint(&self, n: usize) -> f64 {
        0.5 * (self.nodes[n - 1] + self.nodes[n])
    }

    /// max_n Δt_n.
    pub fn max_step(&self) -> f64 {
        (1..=self.intervals)
            .map(|n| self.step(n))
            .fold(0.0, f64::max)
    }

    /// Index n of the interval (t_{n-1}, t_n] containing `t`, or `None`
    /// for t outside (0, T].
    pub fn locate(&self, t: f64) -> Option<usize> {
        if !(t > 0.0 && t <= self.horizon) {
            return None;
        }
        // first node >= t
        Some(self.nodes.partition_point(|&node| node < t))
    }
}

/// Shorthand for [`GradedMesh::new`].
pub fn build_graded(intervals: usize, delta: f64, horizon: f64) -> Result<GradedMesh> {
    GradedMesh::new(intervals, delta, horizon)
}

/// Collocation points t_{n,j} = t_{n-1} + xi_j Δt_n and the spacing
/// ζ_n = t_{n,2} - t_{n,1}.
#[derive(Debug, Clone, PartialEq)]
pub struct CollocationGrid {
    mesh: GradedMesh,
    xi: (f64, f64),
    points: Vec<[f64; 2]>,
    zeta: Vec<f64>,
}

impl CollocationGrid {
    pub fn new(mesh: GradedMesh, xi1: f64, xi2: f64) -> Result<Self> {
        if !(0.0 < xi1 && xi1 < xi2 && xi2 < 1.0) {
            return Err(Error::domain(format!(
                "collocation parameters need 0 < xi1 < xi2 < 1, got ({xi1}, {xi2})"
            )));
        }
        let mut points = Vec::with_capacity(mesh.intervals());
        let mut zeta = Vec::with_capacity(mesh.intervals());
        for n in 1..=mesh.intervals() {
            let lo = mesh.node(n - 1);
            let dt = mesh.step(n);
            let p = [lo + xi1 * dt, lo + xi2 * dt];
            zeta.push(p[1] - p[0]);
            points.push(p);
        }
        Ok(Self {
            mesh,
            xi: (xi1, xi2),
            points,
            zeta,
        })
    }

    /// Grid with the Gauss abscissae [`GAUSS_XI`].
    pub fn gauss(mesh: GradedMesh) -> Self {
        Self::new(mesh, GAUSS_XI.0, GAUSS_XI.1).expect("Gauss abscissae are valid")
    }

    pub fn mesh(&self) -> &GradedMesh {
        &self.mesh
    }

    pub fn xi(&self) -> (f64, f64) {
        self.xi
    }

    pub fn intervals(&self) -> usize {
        self.mesh.intervals()
    }

    /// t_{n,j} for n in 1..=N, j in {1, 2}.
    pub fn point(&self, n: usize, j: usize) -> f64 {
        self.points[n - 1][j - 1]
    }

    /// Both points of interval n.
    pub fn points(&self, n: usize) -> [f64; 2] {
        self.points[n - 1]
    }

    /// ζ_n.
    pub fn zeta(&self, n: usize) -> f64 {
        self.zeta[n - 1]
    }

    /// Local Lagrange basis on I_n: L_{n,1}(t) = (t_{n,2} - t)/ζ_n,
    /// L_{n,2}(t) = (t - t_{n,1})/ζ_n.
    pub fn lagrange(&self, n: usize, j: usize, t: f64) -> Result<f64> {
        if n == 0 || n > self.intervals() || !(j == 1 || j == 2) {
            return Err(Error::domain(format!("no basis function L_{{{n},{j}}}")));
        }
        Ok(self.basis(n, j).at(t))
    }

    /// L_{n,j} as a linear polynomial.
    pub fn basis(&self, n: usize, j: usize) -> Linear {
        let [p1, p2] = self.points(n);
        let z = self.zeta(n);
        match j {
            1 => Linear::through(p2, 0.0, -1.0 / z),
            _ => Linear::through(p1, 0.0, 1.0 / z),
        }
    }

    /// Collocation points, interval midpoints and nodes t_1..t_N, sorted
    /// and without duplicates.
    pub fn fine_grid(&self) -> Vec<f64> {
        let mut out = Vec::with_capacity(4 * self.intervals());
        for n in 1..=self.intervals() {
            out.extend_from_slice(&self.points(n));
            out.push(self.mesh.midpoint(n));
            out.push(self.mesh.node(n));
        }
        out.sort_by(f64::total_cmp);
        out.dedup();
        out
    }
}

/// A linear polynomial stored in point-slope form, L(t) = value + slope (t - anchor).
///
/// Anchoring at a nearby point keeps evaluation accurate on strongly graded
/// meshes, where the slope-intercept form cancels badly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Linear {
    anchor: f64,
    value: f64,
    slope: f64,
}

impl Linear {
    /// L(t) = slope t + intercept.
    pub fn new(slope: f64, intercept: f64) -> Self {
        Self {
            anchor: 0.0,
            value: intercept,
            slope,
        }
    }

    /// The line through (anchor, value) with the given slope.
    pub fn through(anchor: f64, value: f64, slope: f64) -> Self {
        Self {
            anchor,
            value,
            slope,
        }
    }

    pub fn slope(&self) -> f64 {
        self.slope
    }

    pub fn at(&self, t: f64) -> f64 {
        self.value + self.slope * (t - self.anchor)
    }
}
