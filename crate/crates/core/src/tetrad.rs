//! Constant orthonormal tetrads h_μ{}^a and the derived 1-forms h^a.

use crate::blade::{Metric, DIM};
use crate::error::{Error, Result};
use crate::multivector::Multivector;

/// Orthonormality tolerance accepted by [`Tetrad::new`].
pub const TETRAD_TOL: f64 = 1e-10;

/// Four constant orthonormal covectors h_μ{}^a (row μ tensorial, column a
/// tetrad) with h_μ{}^a h^{μb} = η^{ab}. Carries the derived 1-forms
/// h^a = h_μ{}^a e^μ and the time-like form E = h^0.
#[derive(Clone, Debug)]
pub struct Tetrad {
    matrix: [[f64; DIM]; DIM],
    one_forms: [Multivector; DIM],
}

impl Tetrad {
    /// The coordinate tetrad h^a = e^a.
    pub fn identity() -> Tetrad {
        let mut h = [[0.0; DIM]; DIM];
        for mu in 0..DIM {
            h[mu][mu] = 1.0;
        }
        Tetrad::new(h).expect("coordinate tetrad is orthonormal")
    }

    /// Validates orthonormality and derives the tetrad 1-forms.
    pub fn new(matrix: [[f64; DIM]; DIM]) -> Result<Tetrad> {
        let mut max_dev: f64 = 0.0;
        for a in 0..DIM {
            for b in 0..DIM {
                // h_μ{}^a h^{μb} with the μ index raised by η
                let mut sum = 0.0;
                for mu in 0..DIM {
                    sum += f64::from(Metric::DIAG[mu]) * matrix[mu][a] * matrix[mu][b];
                }
                max_dev = max_dev.max((sum - f64::from(Metric::eta(a, b))).abs());
            }
        }
        if max_dev > TETRAD_TOL {
            return Err(Error::InvalidTetrad(format!(
                "orthonormality violated by {max_dev:.3e} (allowed {TETRAD_TOL:.1e})"
            )));
        }
        let one_forms =
            std::array::from_fn(|a| Multivector::one_form(std::array::from_fn(|mu| matrix[mu][a])));
        Ok(Tetrad { matrix, one_forms })
    }

    pub fn matrix(&self) -> &[[f64; DIM]; DIM] {
        &self.matrix
    }

    /// The 1-form h^a.
    pub fn one_form(&self, a: usize) -> &Multivector {
        &self.one_forms[a]
    }

    pub fn one_forms(&self) -> &[Multivector; DIM] {
        &self.one_forms
    }

    /// E = h^0, the time-like form used for Hermitian conjugation.
    pub fn time_form(&self) -> &Multivector {
        &self.one_forms[0]
    }

    /// Hermitian conjugation U† = E U* E with this tetrad's E.
    pub fn hermitian_conj(&self, u: &Multivector) -> Multivector {
        u.hermitian_conj_unchecked(self.time_form())
    }

    /// Elementary boost mixing the time row with spatial row `axis`.
    pub fn boost(axis: usize, rapidity: f64) -> [[f64; DIM]; DIM] {
        assert!((1..DIM).contains(&axis), "boost axis must be 1, 2, or 3");
        let mut m = identity_matrix();
        let (ch, sh) = (rapidity.cosh(), rapidity.sinh());
        m[0][0] = ch;
        m[0][axis] = sh;
        m[axis][0] = sh;
        m[axis][axis] = ch;
        m
    }

    /// Elementary rotation in the spatial plane (i, j).
    pub fn rotation(i: usize, j: usize, angle: f64) -> [[f64; DIM]; DIM] {
        assert!((1..DIM).contains(&i) && (1..DIM).contains(&j) && i != j);
        let mut m = identity_matrix();
        let (c, s) = (angle.cos(), angle.sin());
        m[i][i] = c;
        m[j][j] = c;
        m[i][j] = -s;
        m[j][i] = s;
        m
    }

    /// Matrix product of a sequence of transformations, applied left to right.
    pub fn compose(factors: &[[[f64; DIM]; DIM]]) -> [[f64; DIM]; DIM] {
        let mut acc = identity_matrix();
        for f in factors {
            let mut next = [[0.0; DIM]; DIM];
            for (i, row) in next.iter_mut().enumerate() {
                for (j, cell) in row.iter_mut().enumerate() {
                    for k in 0..DIM {
                        *cell += acc[i][k] * f[k][j];
                    }
                }
            }
            acc = next;
        }
        acc
    }
}

fn identity_matrix() -> [[f64; DIM]; DIM] {
    let mut m = [[0.0; DIM]; DIM];
    for mu in 0..DIM {
        m[mu][mu] = 1.0;
    }
    m
}
