use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};

/// A Bogoliubov coefficient matrix truncated to second order in `h`,
/// `X = X⁽⁰⁾ + h X⁽¹⁾ + h² X⁽²⁾`, over the mode window `-M..=M`.
///
/// The zeroth order is always diagonal with unit-modulus entries. The
/// higher orders are stored as coefficients of `h` and `h²`, so the same
/// matrix serves every numeric value of `h`.
#[derive(Debug, Clone, PartialEq)]
pub struct PerturbativeMatrix {
    window: usize,
    order0: Vec<Complex64>,
    order1: DMatrix<Complex64>,
    order2: DMatrix<Complex64>,
}

impl PerturbativeMatrix {
    pub fn identity(window: usize) -> Self {
        let dim = 2 * window + 1;
        Self {
            window,
            order0: vec![Complex64::new(1.0, 0.0); dim],
            order1: DMatrix::zeros(dim, dim),
            order2: DMatrix::zeros(dim, dim),
        }
    }

    pub(crate) fn from_parts(
        window: usize,
        order0: Vec<Complex64>,
        order1: DMatrix<Complex64>,
        order2: DMatrix<Complex64>,
    ) -> Self {
        let dim = 2 * window + 1;
        assert_eq!(order0.len(), dim);
        assert_eq!(order1.shape(), (dim, dim));
        assert_eq!(order2.shape(), (dim, dim));
        Self {
            window,
            order0,
            order1,
            order2,
        }
    }

    /// Half-width `M` of the mode window.
    pub fn window(&self) -> usize {
        self.window
    }

    pub fn dim(&self) -> usize {
        2 * self.window + 1
    }

    /// Storage index of mode `n`.
    pub fn index(&self, n: i64) -> Result<usize> {
        if n.unsigned_abs() as usize > self.window {
            return Err(Error::OutsideWindow {
                mode: n,
                window: self.window,
            });
        }
        Ok((n + self.window as i64) as usize)
    }

    pub fn mode(&self, index: usize) -> i64 {
        index as i64 - self.window as i64
    }

    pub fn modes(&self) -> impl Iterator<Item = i64> {
        let w = self.window as i64;
        -w..=w
    }

    pub fn order0(&self) -> &[Complex64] {
        &self.order0
    }

    pub fn order1(&self) -> &DMatrix<Complex64> {
        &self.order1
    }

    pub fn order2(&self) -> &DMatrix<Complex64> {
        &self.order2
    }

    pub fn order0_entry(&self, n: i64) -> Result<Complex64> {
        Ok(self.order0[self.index(n)?])
    }

    pub fn order1_entry(&self, m: i64, n: i64) -> Result<Complex64> {
        Ok(self.order1[(self.index(m)?, self.index(n)?)])
    }

    pub fn order2_entry(&self, m: i64, n: i64) -> Result<Complex64> {
        Ok(self.order2[(self.index(m)?, self.index(n)?)])
    }

    /// `X_mn` at a numeric `h`, truncated after `h²`.
    pub fn evaluate(&self, m: i64, n: i64, h: f64) -> Result<Complex64> {
        let (i, j) = (self.index(m)?, self.index(n)?);
        let diag = if i == j {
            self.order0[i]
        } else {
            Complex64::new(0.0, 0.0)
        };
        Ok(diag + self.order1[(i, j)] * h + self.order2[(i, j)] * (h * h))
    }

    /// The composite `later · self`, i.e. this transformation followed by
    /// `later`, truncated to order `h²`.
    pub fn then(&self, later: &PerturbativeMatrix) -> Result<PerturbativeMatrix> {
        if self.window != later.window {
            return Err(Error::WindowMismatch {
                left: self.window,
                right: later.window,
            });
        }
        let order0: Vec<Complex64> = later
            .order0
            .iter()
            .zip(&self.order0)
            .map(|(l, s)| l * s)
            .collect();

        let mut order1 = scale_rows(&self.order1, &later.order0);
        order1 += scale_columns(&later.order1, &self.order0);

        let mut order2 = scale_rows(&self.order2, &later.order0);
        order2 += scale_columns(&later.order2, &self.order0);
        order2 += complex_product(&later.order1, &self.order1);

        Ok(PerturbativeMatrix::from_parts(
            self.window,
            order0,
            order1,
            order2,
        ))
    }

    /// Order-by-order conjugate transpose. For a perturbatively unitary
    /// matrix this is its inverse to order `h²`.
    pub fn adjoint(&self) -> PerturbativeMatrix {
        PerturbativeMatrix::from_parts(
            self.window,
            self.order0.iter().map(|g| g.conj()).collect(),
            self.order1.adjoint(),
            self.order2.adjoint(),
        )
    }

    /// Largest entry of `G* X⁽¹⁾ + X⁽¹⁾† G` with `G = X⁽⁰⁾`.
    pub fn order1_unitarity_residual(&self) -> f64 {
        let dim = self.dim();
        let mut worst = 0.0f64;
        for m in 0..dim {
            for n in 0..dim {
                let r = self.order0[m].conj() * self.order1[(m, n)]
                    + self.order1[(n, m)].conj() * self.order0[n];
                worst = worst.max(r.norm());
            }
        }
        worst
    }

    /// Rounding-level threshold for [`order1_unitarity_residual`](Self::order1_unitarity_residual).
    pub fn order1_unitarity_tolerance(&self) -> f64 {
        let scale = self.order1.iter().fold(0.0f64, |acc, x| acc.max(x.norm()));
        64.0 * f64::EPSILON * scale.max(1.0)
    }

    /// Largest entry of `G* X⁽²⁾ + X⁽²⁾† G + X⁽¹⁾† X⁽¹⁾` over the inner block
    /// `|m|, |n| <= inner`. The product is summed over the whole window, so
    /// this measures truncation of the infinite mode sums.
    pub fn order2_unitarity_residual(&self, inner: usize) -> f64 {
        let inner = inner.min(self.window);
        let lo = self.window - inner;
        let hi = self.window + inner;
        let mut worst = 0.0f64;
        for m in lo..=hi {
            for n in lo..=hi {
                let product: Complex64 = self
                    .order1
                    .column(m)
                    .iter()
                    .zip(self.order1.column(n).iter())
                    .map(|(x, y)| x.conj() * y)
                    .sum();
                let r = self.order0[m].conj() * self.order2[(m, n)]
                    + self.order2[(n, m)].conj() * self.order0[n]
                    + product;
                worst = worst.max(r.norm());
            }
        }
        worst
    }

    /// `(Σ_{p>=0} |X⁽¹⁾_pk|², Σ_{p<0} |X⁽¹⁾_pk|²)` over the window: the
    /// order-`h²` weight leaking from mode `k` into particle and
    /// antiparticle modes.
    pub fn leakage(&self, k: i64) -> Result<(f64, f64)> {
        let col = self.order1.column(self.index(k)?);
        let mut plus = 0.0;
        let mut minus = 0.0;
        for (i, x) in col.iter().enumerate() {
            if self.mode(i) >= 0 {
                plus += x.norm_sqr();
            } else {
                minus += x.norm_sqr();
            }
        }
        Ok((plus, minus))
    }

    /// `Σ_p conj(X⁽¹⁾_pk) X⁽¹⁾_pl` restricted to particle (`positive`) or
    /// antiparticle rows.
    pub fn cross_leakage(&self, k: i64, l: i64, positive: bool) -> Result<Complex64> {
        let ck = self.order1.column(self.index(k)?);
        let cl = self.order1.column(self.index(l)?);
        Ok(ck
            .iter()
            .zip(cl.iter())
            .enumerate()
            .filter(|(i, _)| (self.mode(*i) >= 0) == positive)
            .map(|(_, (x, y))| x.conj() * y)
            .sum())
    }
}

fn scale_rows(m: &DMatrix<Complex64>, diag: &[Complex64]) -> DMatrix<Complex64> {
    let mut out = m.clone();
    for (i, d) in diag.iter().enumerate() {
        for x in out.row_mut(i).iter_mut() {
            *x *= d;
        }
    }
    out
}

fn scale_columns(m: &DMatrix<Complex64>, diag: &[Complex64]) -> DMatrix<Complex64> {
    let mut out = m.clone();
    for (j, d) in diag.iter().enumerate() {
        for x in out.column_mut(j).iter_mut() {
            *x *= d;
        }
    }
    out
}

/// Complex product through four real products, which run on the optimised
/// real gemm kernel.
pub(crate) fn complex_product(a: &DMatrix<Complex64>, b: &DMatrix<Complex64>) -> DMatrix<Complex64> {
    let (ar, ai) = split(a);
    let (br, bi) = split(b);
    let re = &ar * &br - &ai * &bi;
    let im = &ar * &bi + &ai * &br;
    DMatrix::from_fn(re.nrows(), re.ncols(), |i, j| {
        Complex64::new(re[(i, j)], im[(i, j)])
    })
}

fn split(m: &DMatrix<Complex64>) -> (DMatrix<f64>, DMatrix<f64>) {
    (m.map(|z| z.re), m.map(|z| z.im))
}
