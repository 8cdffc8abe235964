//! Exterior-form fields as finite plane-wave superpositions.
//!
//! A field is Σ Φ₀·exp(−i p_μ x^μ) with multivector amplitudes and real
//! 4-momenta, so ∂_μ acts termwise as multiplication by −i p_μ and the
//! differential, codifferential, and Dirac operator are exact — no grid, no
//! discretization error.

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::blade::{Metric, DIM};
use crate::multivector::Multivector;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Componentwise threshold under which two momenta are considered equal and
/// their terms merged.
pub const MOMENTUM_MERGE_TOL: f64 = 1e-12;

/// Covariant components p_μ of a real 4-momentum.
pub type FourMomentum = [f64; DIM];

/// k_μ k^μ with indices raised by η.
pub fn minkowski_square(k: FourMomentum) -> f64 {
    (0..DIM)
        .map(|mu| f64::from(Metric::DIAG[mu]) * k[mu] * k[mu])
        .sum()
}

/// A constant real electromagnetic-type potential A = a_μ e^μ ∈ Λ₁.
#[derive(Clone, Debug)]
pub struct Potential {
    components: FourMomentum,
    one_form: Multivector,
}

impl Potential {
    pub fn new(components: FourMomentum) -> Potential {
        Potential {
            components,
            one_form: Multivector::one_form(components),
        }
    }

    pub fn zero() -> Potential {
        Potential::new([0.0; DIM])
    }

    pub fn components(&self) -> FourMomentum {
        self.components
    }

    pub fn one_form(&self) -> &Multivector {
        &self.one_form
    }
}

/// One plane-wave term: amplitude · exp(−i p·x).
#[derive(Clone, Debug)]
pub struct WaveTerm {
    pub momentum: FourMomentum,
    pub amplitude: Multivector,
}

/// A finite superposition of plane waves. Terms are kept sorted by momentum
/// (lexicographically) with near-equal momenta merged, so operator results
/// are deterministic.
#[derive(Clone, Debug)]
pub struct PlaneWaveField {
    terms: Vec<WaveTerm>,
}

impl PlaneWaveField {
    pub fn zero() -> PlaneWaveField {
        PlaneWaveField { terms: Vec::new() }
    }

    pub fn single(momentum: FourMomentum, amplitude: Multivector) -> PlaneWaveField {
        PlaneWaveField::from_terms(vec![WaveTerm {
            momentum,
            amplitude,
        }])
    }

    pub fn from_terms(terms: Vec<WaveTerm>) -> PlaneWaveField {
        let mut terms = terms;
        terms.sort_by(|a, b| {
            a.momentum
                .iter()
                .zip(b.momentum.iter())
                .find_map(|(x, y)| {
                    let ord = x.total_cmp(y);
                    (ord != std::cmp::Ordering::Equal).then_some(ord)
                })
                .unwrap_or(std::cmp::Ordering::Equal)
        });
        let mut merged: Vec<WaveTerm> = Vec::with_capacity(terms.len());
        for term in terms {
            match merged.last_mut() {
                Some(last) if momenta_close(last.momentum, term.momentum) => {
                    last.amplitude = &last.amplitude + &term.amplitude;
                }
                _ => merged.push(term),
            }
        }
        merged.retain(|t| t.amplitude.max_abs() != 0.0);
        PlaneWaveField { terms: merged }
    }

    pub fn terms(&self) -> &[WaveTerm] {
        &self.terms
    }

    /// Amplitude of the term at `p`, or zero when no term matches.
    pub fn amplitude_at(&self, p: FourMomentum) -> Multivector {
        self.terms
            .iter()
            .find(|t| momenta_close(t.momentum, p))
            .map(|t| t.amplitude.clone())
            .unwrap_or_else(Multivector::zero)
    }

    /// Field norm: the largest amplitude norm over all terms.
    pub fn norm(&self) -> f64 {
        self.terms
            .iter()
            .map(|t| t.amplitude.norm())
            .fold(0.0, f64::max)
    }

    pub fn is_zero(&self, tol: f64) -> bool {
        self.norm() <= tol
    }

    pub fn scale(&self, factor: Complex64) -> PlaneWaveField {
        self.map_amplitudes(|_, amp| amp.scale(factor))
    }

    pub fn add(&self, other: &PlaneWaveField) -> PlaneWaveField {
        let mut terms = self.terms.clone();
        terms.extend(other.terms.iter().cloned());
        PlaneWaveField::from_terms(terms)
    }

    pub fn sub(&self, other: &PlaneWaveField) -> PlaneWaveField {
        self.add(&other.scale(Complex64::new(-1.0, 0.0)))
    }

    fn map_amplitudes(
        &self,
        f: impl Fn(FourMomentum, &Multivector) -> Multivector,
    ) -> PlaneWaveField {
        PlaneWaveField::from_terms(
            self.terms
                .iter()
                .map(|t| WaveTerm {
                    momentum: t.momentum,
                    amplitude: f(t.momentum, &t.amplitude),
                })
                .collect(),
        )
    }

    /// The differential dΦ = e^μ∧∂_μΦ; on each term ∂_μ ↦ −i p_μ. Raises
    /// every pure grade by one and satisfies d² = 0.
    pub fn differential(&self) -> PlaneWaveField {
        self.map_amplitudes(differential_amplitude)
    }

    /// The codifferential δ = ⋆d⋆, evaluated literally as the composition of
    /// Hodge star, termwise differential, Hodge star. Lowers every pure
    /// grade by one and satisfies δ² = 0.
    pub fn codifferential(&self) -> PlaneWaveField {
        self.map_amplitudes(|p, amp| differential_amplitude(p, &amp.hodge_star()).hodge_star())
    }

    /// The operator e^μ∂_μ with the Clifford product; equals d − δ.
    pub fn dirac_operator(&self) -> PlaneWaveField {
        self.map_amplitudes(|p, amp| {
            let mut out = Multivector::zero();
            for mu in 0..DIM {
                let factor = -I * p[mu];
                out = &out
                    + &Multivector::basis_one_form(mu)
                        .clifford_mul(amp)
                        .scale(factor);
            }
            out
        })
    }

    /// Residual Ω = (d−δ)Φ + iAΦ + imΦ of the Dirac–Kähler equation on an
    /// unrestricted field Φ ∈ Λ; solutions give the zero field.
    pub fn dirac_kahler_residual(&self, potential: &Potential, mass: f64) -> PlaneWaveField {
        let d = self.differential();
        let delta = self.codifferential();
        let with_potential =
            self.map_amplitudes(|_, amp| potential.one_form().clifford_mul(amp).scale(I));
        let with_mass = self.scale(I * mass);
        d.sub(&delta).add(&with_potential).add(&with_mass)
    }

    /// Same residual for the ideal-valued tensor form of the Dirac equation,
    /// Ψ ∈ I(t); the formula is identical, only the admissible wave
    /// functions differ.
    pub fn ideal_dirac_residual(&self, potential: &Potential, mass: f64) -> PlaneWaveField {
        debug_assert!(mass >= 0.0);
        self.dirac_kahler_residual(potential, mass)
    }
}

fn momenta_close(a: FourMomentum, b: FourMomentum) -> bool {
    a.iter()
        .zip(b.iter())
        .all(|(x, y)| (x - y).abs() <= MOMENTUM_MERGE_TOL)
}

fn differential_amplitude(p: FourMomentum, amp: &Multivector) -> Multivector {
    let mut out = Multivector::zero();
    for mu in 0..DIM {
        let factor = -I * p[mu];
        out = &out + &Multivector::basis_one_form(mu).wedge(amp).scale(factor);
    }
    out
}

/// JSON form: `{"terms":[{"p":[...],"amplitude":{"coeffs":[...]}}]}`.
impl Serialize for PlaneWaveField {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct TermRepr<'a> {
            p: [f64; 4],
            amplitude: &'a Multivector,
        }
        let mut state = serializer.serialize_struct("PlaneWaveField", 1)?;
        let terms: Vec<TermRepr> = self
            .terms
            .iter()
            .map(|t| TermRepr {
                p: t.momentum,
                amplitude: &t.amplitude,
            })
            .collect();
        state.serialize_field("terms", &terms)?;
        state.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blade::BladeIndex;
    use crate::ideal::Idempotent;
    use crate::tetrad::Tetrad;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    const P: FourMomentum = [0.3, -0.7, 0.2, 1.1];

    #[test]
    fn constant_fields_are_annihilated_by_d_and_the_dirac_operator() {
        let constant = PlaneWaveField::single([0.0; 4], Multivector::scalar(c(2.0, -1.0)));
        assert!(constant.differential().is_zero(0.0));
        assert!(constant.dirac_operator().is_zero(0.0));
    }

    #[test]
    fn differential_of_scalar_wave() {
        let field = PlaneWaveField::single(P, Multivector::one());
        let d = field.differential();
        let expected = Multivector::complex_one_form([-I * P[0], -I * P[1], -I * P[2], -I * P[3]]);
        assert!(d.amplitude_at(P).approx_eq(&expected, 0.0));
        // no codifferential contribution on scalars
        assert!(field.codifferential().is_zero(0.0));
        assert!(d
            .amplitude_at(P)
            .approx_eq(&field.dirac_operator().amplitude_at(P), 1e-15));
    }

    #[test]
    fn codifferential_of_time_form_wave() {
        // δ(f e^0) = (i p_0 f)·1
        let field = PlaneWaveField::single(P, Multivector::basis_one_form(0));
        let delta = field.codifferential();
        let expected = Multivector::scalar(I * P[0]);
        assert!(delta.amplitude_at(P).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn d_and_delta_are_nilpotent() {
        let amp = Multivector::from_coeffs(std::array::from_fn(|k| {
            c(0.1 * k as f64 - 0.4, 0.05 * k as f64)
        }));
        let field = PlaneWaveField::single(P, amp);
        assert!(field.differential().differential().is_zero(1e-15));
        assert!(field.codifferential().codifferential().is_zero(1e-15));
    }

    #[test]
    fn dirac_operator_equals_d_minus_delta_on_every_grade() {
        for b in BladeIndex::all() {
            let field = PlaneWaveField::single(P, Multivector::blade(b).scale(c(0.8, -0.3)));
            let lhs = field.differential().sub(&field.codifferential());
            let rhs = field.dirac_operator();
            assert!(lhs.sub(&rhs).is_zero(1e-14), "grade {}", b.grade());
        }
    }

    #[test]
    fn grade_bookkeeping() {
        for b in BladeIndex::all() {
            let field = PlaneWaveField::single(P, Multivector::blade(b));
            let k = b.grade();
            let d = field.differential();
            if !d.is_zero(0.0) {
                assert_eq!(d.amplitude_at(P).pure_grade(1e-14), Some(k + 1));
            }
            let delta = field.codifferential();
            if k == 0 {
                assert!(delta.is_zero(0.0));
            } else if !delta.is_zero(0.0) {
                assert_eq!(delta.amplitude_at(P).pure_grade(1e-14), Some(k - 1));
            }
        }
    }

    #[test]
    fn residual_of_zero_field_is_zero() {
        let residual = PlaneWaveField::zero()
            .ideal_dirac_residual(&Potential::new([0.5, 0.0, -0.2, 0.0]), 1.3);
        assert!(residual.is_zero(0.0));
    }

    #[test]
    fn residual_of_constant_ideal_element_is_mass_term() {
        let basis =
            crate::ideal::IdealBasis::new(Idempotent::new(Tetrad::identity()).unwrap()).unwrap();
        let t2 = basis.elements()[1].clone();
        let field = PlaneWaveField::single([0.0; 4], t2.clone());
        let residual = field.dirac_kahler_residual(&Potential::zero(), 0.75);
        let expected = t2.scale(I * 0.75);
        assert!(residual.amplitude_at([0.0; 4]).approx_eq(&expected, 1e-15));
    }

    #[test]
    fn residual_agrees_with_termwise_clifford_form() {
        // (d−δ)Ψ + iAΨ + imΨ  ==  e^μ(∂_μ + i a_μ)Ψ + imΨ
        let amp = Multivector::from_coeffs(std::array::from_fn(|k| {
            c((k as f64).sin(), (k as f64 * 0.7).cos())
        }));
        let field = PlaneWaveField::single(P, amp);
        let potential = Potential::new([0.4, -0.1, 0.9, 0.3]);
        let mass = 1.7;

        let eq_two = field.dirac_kahler_residual(&potential, mass);

        let with_a = field.map_amplitudes(|_, amp| {
            let mut out = Multivector::zero();
            for mu in 0..DIM {
                let factor = I * potential.components()[mu];
                out = &out
                    + &Multivector::basis_one_form(mu)
                        .clifford_mul(amp)
                        .scale(factor);
            }
            out
        });
        let eq_three = field
            .dirac_operator()
            .add(&with_a)
            .add(&field.scale(I * mass));

        assert!(eq_two.sub(&eq_three).is_zero(1e-13));
    }

    #[test]
    fn residual_is_linear() {
        let f1 = PlaneWaveField::single(P, Multivector::basis_one_form(2));
        let f2 = PlaneWaveField::single([1.0, 0.0, 0.5, 0.0], Multivector::one());
        let pot = Potential::new([0.2, 0.0, 0.0, -0.6]);
        let (alpha, beta) = (c(1.3, -0.2), c(0.0, 0.8));

        let combined = f1.scale(alpha).add(&f2.scale(beta));
        let lhs = combined.ideal_dirac_residual(&pot, 0.9);
        let rhs = f1
            .ideal_dirac_residual(&pot, 0.9)
            .scale(alpha)
            .add(&f2.ideal_dirac_residual(&pot, 0.9).scale(beta));
        assert!(lhs.sub(&rhs).is_zero(1e-13));
    }

    #[test]
    fn both_residual_evaluators_agree_on_ideal_fields() {
        let basis =
            crate::ideal::IdealBasis::new(Idempotent::new(Tetrad::identity()).unwrap()).unwrap();
        let field = PlaneWaveField::single(P, basis.elements()[2].clone());
        let pot = Potential::new([0.1, 0.0, -0.4, 0.2]);
        let unrestricted = field.dirac_kahler_residual(&pot, 1.4);
        let restricted = field.ideal_dirac_residual(&pot, 1.4);
        assert!(unrestricted.sub(&restricted).is_zero(0.0));
    }

    #[test]
    fn equal_momenta_are_merged() {
        let field = PlaneWaveField::from_terms(vec![
            WaveTerm {
                momentum: P,
                amplitude: Multivector::one(),
            },
            WaveTerm {
                momentum: [P[0] + 1e-13, P[1], P[2], P[3]],
                amplitude: Multivector::one(),
            },
        ]);
        assert_eq!(field.terms().len(), 1);
        assert!(field
            .amplitude_at(P)
            .approx_eq(&Multivector::scalar(c(2.0, 0.0)), 0.0));
    }

    #[test]
    fn field_json_shape() {
        let field = PlaneWaveField::single([1.0, 0.0, 0.0, 0.0], Multivector::one());
        let text = serde_json::to_string(&field).unwrap();
        assert!(text.starts_with("{\"terms\":[{\"p\":[1.0,0.0,0.0,0.0],\"amplitude\":{\"coeffs\":"));
    }
}
