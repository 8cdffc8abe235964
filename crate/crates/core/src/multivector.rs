//! Multivectors: complex linear combinations of the 16 canonical blades.
//!
//! Values are immutable; every operation returns a fresh multivector, so all
//! algebraic identities are referentially transparent.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::blade::{self, BladeIndex, BLADE_COUNT, DIM};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

const CZERO: Complex64 = Complex64::new(0.0, 0.0);

/// Tolerance on `E·E = 1` when a time-like form is passed directly to
/// [`Multivector::hermitian_conj`]; tetrad-attached conjugation validates at
/// construction instead.
const TIME_FORM_TOL: f64 = 1e-12;

/// An element of the complexified exterior algebra of Minkowski space:
/// 16 complex coefficients over the canonical blade basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector {
    coeffs: [Complex64; BLADE_COUNT],
}

impl Multivector {
    pub fn zero() -> Multivector {
        Multivector {
            coeffs: [CZERO; BLADE_COUNT],
        }
    }

    /// The identity element `1`.
    pub fn one() -> Multivector {
        Multivector::scalar(Complex64::new(1.0, 0.0))
    }

    pub fn scalar(value: impl Into<Complex64>) -> Multivector {
        let mut coeffs = [CZERO; BLADE_COUNT];
        coeffs[0] = value.into();
        Multivector { coeffs }
    }

    /// Unit blade.
    pub fn blade(b: BladeIndex) -> Multivector {
        let mut coeffs = [CZERO; BLADE_COUNT];
        coeffs[b.index()] = Complex64::new(1.0, 0.0);
        Multivector { coeffs }
    }

    /// The basis covector `e^μ`.
    pub fn basis_one_form(mu: usize) -> Multivector {
        Multivector::blade(BladeIndex::one_form(mu))
    }

    /// Real 1-form `a_μ e^μ`.
    pub fn one_form(components: [f64; DIM]) -> Multivector {
        let mut coeffs = [CZERO; BLADE_COUNT];
        for (mu, &a) in components.iter().enumerate() {
            coeffs[1 << mu] = Complex64::new(a, 0.0);
        }
        Multivector { coeffs }
    }

    /// Complex 1-form `a_μ e^μ`.
    pub fn complex_one_form(components: [Complex64; DIM]) -> Multivector {
        let mut coeffs = [CZERO; BLADE_COUNT];
        for (mu, &a) in components.iter().enumerate() {
            coeffs[1 << mu] = a;
        }
        Multivector { coeffs }
    }

    pub fn from_coeffs(coeffs: [Complex64; BLADE_COUNT]) -> Multivector {
        Multivector { coeffs }
    }

    pub fn coeff(&self, b: BladeIndex) -> Complex64 {
        self.coeffs[b.index()]
    }

    /// All 16 coefficients in mask order.
    pub fn coeffs(&self) -> &[Complex64; BLADE_COUNT] {
        &self.coeffs
    }

    /// Coefficients as a column for linear-algebra work.
    pub fn to_vec(&self) -> Vec<Complex64> {
        self.coeffs.to_vec()
    }

    /// Exterior product. Bilinear; on blades it vanishes when the factors
    /// share a covector and otherwise yields the signed union blade.
    pub fn wedge(&self, other: &Multivector) -> Multivector {
        let mut out = [CZERO; BLADE_COUNT];
        for a in BladeIndex::all() {
            let ca = self.coeffs[a.index()];
            if ca == CZERO {
                continue;
            }
            for b in BladeIndex::all() {
                let cb = other.coeffs[b.index()];
                if cb == CZERO {
                    continue;
                }
                if let Some((target, sign)) = blade::wedge_blades(a, b) {
                    out[target.index()] += f64::from(sign) * ca * cb;
                }
            }
        }
        Multivector { coeffs: out }
    }

    /// Clifford product, the associative product generated by
    /// `e^μ e^ν = e^μ∧e^ν + η^{μν}`.
    pub fn clifford_mul(&self, other: &Multivector) -> Multivector {
        let mut out = [CZERO; BLADE_COUNT];
        for a in BladeIndex::all() {
            let ca = self.coeffs[a.index()];
            if ca == CZERO {
                continue;
            }
            for b in BladeIndex::all() {
                let cb = other.coeffs[b.index()];
                if cb == CZERO {
                    continue;
                }
                let (target, sign) = blade::clifford_blades(a, b);
                out[target.index()] += f64::from(sign) * ca * cb;
            }
        }
        Multivector { coeffs: out }
    }

    /// Restriction to the grade-`k` component.
    pub fn grade_project(&self, k: usize) -> Result<Multivector> {
        if k > 4 {
            return Err(Error::GradeOutOfRange(k));
        }
        let mut out = [CZERO; BLADE_COUNT];
        for b in BladeIndex::all() {
            if b.grade() == k {
                out[b.index()] = self.coeffs[b.index()];
            }
        }
        Ok(Multivector { coeffs: out })
    }

    /// The grade of a homogeneous multivector, or `None` when components of
    /// several grades exceed `tol`.
    pub fn pure_grade(&self, tol: f64) -> Option<usize> {
        let mut found = None;
        for b in BladeIndex::all() {
            if self.coeffs[b.index()].norm() > tol {
                match found {
                    None => found = Some(b.grade()),
                    Some(g) if g != b.grade() => return None,
                    _ => {}
                }
            }
        }
        found
    }

    /// Hodge dual with orientation ε_{0123} = 1; maps grade k to 4−k and
    /// satisfies ⋆⋆ = (−1)^{k+1} on grade k.
    pub fn hodge_star(&self) -> Multivector {
        let mut out = [CZERO; BLADE_COUNT];
        for b in BladeIndex::all() {
            let c = self.coeffs[b.index()];
            if c == CZERO {
                continue;
            }
            let (target, sign) = blade::hodge_blade(b);
            out[target.index()] += f64::from(sign) * c;
        }
        Multivector { coeffs: out }
    }

    /// Clifford conjugation: the grade-k part picks up (−1)^{k(k−1)/2} and
    /// coefficients are complex conjugated. An involution.
    pub fn clifford_conj(&self) -> Multivector {
        let mut out = [CZERO; BLADE_COUNT];
        for b in BladeIndex::all() {
            let k = b.grade();
            let sign = if (k * k.saturating_sub(1) / 2) % 2 == 0 {
                1.0
            } else {
                -1.0
            };
            out[b.index()] = sign * self.coeffs[b.index()].conj();
        }
        Multivector { coeffs: out }
    }

    /// Hermitian conjugation `U† = E U* E` with respect to a time-like form
    /// `E` satisfying `E·E = 1` under the Clifford product.
    pub fn hermitian_conj(&self, time_form: &Multivector) -> Result<Multivector> {
        let square = time_form.clifford_mul(time_form);
        if (&square - &Multivector::one()).max_abs() > TIME_FORM_TOL {
            return Err(Error::InvalidTetrad(format!(
                "time-like form does not square to 1 (deviation {:.3e})",
                (&square - &Multivector::one()).max_abs()
            )));
        }
        Ok(self.hermitian_conj_unchecked(time_form))
    }

    pub(crate) fn hermitian_conj_unchecked(&self, time_form: &Multivector) -> Multivector {
        time_form.clifford_mul(&self.clifford_conj().clifford_mul(time_form))
    }

    /// Matrix of left Clifford multiplication by `self` in the blade basis;
    /// column n holds `self · blade_n`. Satisfies R(UV) = R(U)R(V).
    pub fn regular_representation(&self) -> ComplexMatrix {
        let mut m = ComplexMatrix::zeros(BLADE_COUNT, BLADE_COUNT);
        for b in BladeIndex::all() {
            let col = self.clifford_mul(&Multivector::blade(b));
            for k in 0..BLADE_COUNT {
                m.set(k, b.index(), col.coeffs[k]);
            }
        }
        m
    }

    /// Euclidean norm of the 16 coefficients.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.max_abs() <= tol
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        (self - other).max_abs() <= tol
    }

    pub fn scale(&self, factor: Complex64) -> Multivector {
        let mut out = self.coeffs;
        for c in &mut out {
            *c *= factor;
        }
        Multivector { coeffs: out }
    }
}

impl Add for &Multivector {
    type Output = Multivector;
    fn add(self, rhs: &Multivector) -> Multivector {
        let mut out = self.coeffs;
        for (o, r) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o += r;
        }
        Multivector { coeffs: out }
    }
}

impl Sub for &Multivector {
    type Output = Multivector;
    fn sub(self, rhs: &Multivector) -> Multivector {
        let mut out = self.coeffs;
        for (o, r) in out.iter_mut().zip(rhs.coeffs.iter()) {
            *o -= r;
        }
        Multivector { coeffs: out }
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self.scale(Complex64::new(-1.0, 0.0))
    }
}

impl Add for Multivector {
    type Output = Multivector;
    fn add(self, rhs: Multivector) -> Multivector {
        &self + &rhs
    }
}

impl Sub for Multivector {
    type Output = Multivector;
    fn sub(self, rhs: Multivector) -> Multivector {
        &self - &rhs
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        -&self
    }
}

/// `*` is the Clifford product.
impl Mul for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        self.clifford_mul(rhs)
    }
}

impl Mul<Complex64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: Complex64) -> Multivector {
        self.scale(rhs)
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        self.scale(Complex64::new(rhs, 0.0))
    }
}

fn write_complex(f: &mut fmt::Formatter<'_>, c: Complex64) -> fmt::Result {
    if c.im >= 0.0 {
        write!(f, "{}+{}i", c.re, c.im)
    } else {
        write!(f, "{}-{}i", c.re, -c.im)
    }
}

/// Canonical text rendering: terms in ascending mask order, the scalar
/// coefficient bare, other coefficients parenthesized before their blade.
impl fmt::Display for Multivector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for b in BladeIndex::all() {
            let c = self.coeffs[b.index()];
            if c == CZERO {
                continue;
            }
            if wrote {
                write!(f, " + ")?;
            }
            if b == BladeIndex::SCALAR {
                write_complex(f, c)?;
            } else {
                write!(f, "(")?;
                write_complex(f, c)?;
                write!(f, ") {b}")?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Serialize for Multivector {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            coeffs: Vec<[f64; 2]>,
        }
        Repr {
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Multivector {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            coeffs: Vec<[f64; 2]>,
        }
        let repr = Repr::deserialize(deserializer)?;
        if repr.coeffs.len() != BLADE_COUNT {
            return Err(D::Error::custom(format!(
                "expected {} coefficients, got {}",
                BLADE_COUNT,
                repr.coeffs.len()
            )));
        }
        let mut coeffs = [CZERO; BLADE_COUNT];
        for (c, pair) in coeffs.iter_mut().zip(repr.coeffs.iter()) {
            *c = Complex64::new(pair[0], pair[1]);
        }
        Ok(Multivector { coeffs })
    }
}
