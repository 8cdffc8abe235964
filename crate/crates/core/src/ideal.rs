//! The idempotent t = ¼(1+h⁰)(1+ih¹h²), its minimal left ideal, and the
//! induced 4×4 matrix representation of the full algebra.
//!
//! The ideal I(t) = {Ut : U ∈ Λ} is four-dimensional; expanding U·t_N in the
//! basis t₁…t₄ column by column turns left Clifford multiplication into a
//! matrix γ(U), with |UΩ⟩ = γ(U)|Ω⟩ for every ideal element Ω. The four
//! γ(e^μ) then satisfy the Dirac anticommutation relations.

use num_complex::Complex64;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::blade::DIM;
use crate::error::{Error, Result};
use crate::linalg::{self, ComplexMatrix, KetVector};
use crate::multivector::Multivector;
use crate::tetrad::Tetrad;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// Construction-time tolerance on t² = t and t† = t.
const IDEMPOTENT_TOL: f64 = 1e-12;
/// Rank threshold for the 16×4 basis matrix.
const BASIS_RANK_TOL: f64 = 1e-10;
/// Relative residual above which a form is rejected as outside the ideal.
const MEMBERSHIP_TOL: f64 = 1e-9;
/// Construction-time tolerance on the γ^μ anticommutators.
const ANTICOMMUTATOR_TOL: f64 = 1e-12;

/// The primitive idempotent t built from a tetrad: t² = t and t† = t.
#[derive(Clone, Debug)]
pub struct Idempotent {
    form: Multivector,
    tetrad: Tetrad,
}

impl Idempotent {
    /// Computes t = ¼(1+h⁰)(1+ih¹h²) and checks both defining identities;
    /// a violation indicates a bug in the product kernel, not bad input.
    pub fn new(tetrad: Tetrad) -> Result<Idempotent> {
        let one = Multivector::one();
        let h = tetrad.one_forms();
        let left = &one + &h[0];
        let right = &one + &h[1].clifford_mul(&h[2]).scale(I);
        let form = left.clifford_mul(&right).scale(Complex64::new(0.25, 0.0));

        let square_dev = (&form.clifford_mul(&form) - &form).max_abs();
        if square_dev > IDEMPOTENT_TOL {
            return Err(Error::InternalConsistency(format!(
                "idempotent square deviates by {square_dev:.3e}"
            )));
        }
        let herm_dev = (&tetrad.hermitian_conj(&form) - &form).max_abs();
        if herm_dev > IDEMPOTENT_TOL {
            return Err(Error::InternalConsistency(format!(
                "idempotent fails self-adjointness by {herm_dev:.3e}"
            )));
        }
        Ok(Idempotent { form, tetrad })
    }

    pub fn form(&self) -> &Multivector {
        &self.form
    }

    pub fn tetrad(&self) -> &Tetrad {
        &self.tetrad
    }
}

/// The four forms t₁ = t, t₂ = −h¹h³t, t₃ = h⁰h³t, t₄ = h⁰h¹t spanning the
/// minimal left ideal, together with the 16×4 matrix of their blade
/// coefficients.
#[derive(Clone, Debug)]
pub struct IdealBasis {
    idempotent: Idempotent,
    elements: [Multivector; 4],
    matrix: ComplexMatrix,
}

impl IdealBasis {
    pub fn new(idempotent: Idempotent) -> Result<IdealBasis> {
        let t = idempotent.form().clone();
        let h = idempotent.tetrad().one_forms();
        let elements = [
            t.clone(),
            -&h[1].clifford_mul(&h[3].clifford_mul(&t)),
            h[0].clifford_mul(&h[3].clifford_mul(&t)),
            h[0].clifford_mul(&h[1].clifford_mul(&t)),
        ];

        let mut matrix = ComplexMatrix::zeros(16, 4);
        for (n, tn) in elements.iter().enumerate() {
            for (k, &c) in tn.coeffs().iter().enumerate() {
                matrix.set(k, n, c);
            }
        }
        let rank = matrix.rank(BASIS_RANK_TOL);
        if rank < 4 {
            return Err(Error::DegenerateBasis(format!(
                "ideal basis matrix has rank {rank}, expected 4"
            )));
        }
        Ok(IdealBasis {
            idempotent,
            elements,
            matrix,
        })
    }

    pub fn idempotent(&self) -> &Idempotent {
        &self.idempotent
    }

    pub fn tetrad(&self) -> &Tetrad {
        self.idempotent.tetrad()
    }

    pub fn elements(&self) -> &[Multivector; 4] {
        &self.elements
    }

    /// The 16×4 matrix whose columns are the blade coefficients of t₁…t₄.
    pub fn coefficient_matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Expands Ω = ω^K t_K and returns (ω¹,…,ω⁴); fails when the
    /// least-squares residual shows Ω is not an ideal member.
    pub fn expand(&self, omega: &Multivector) -> Result<KetVector> {
        let (x, residual) = linalg::solve_least_squares(&self.matrix, &omega.to_vec())?;
        let allowed = MEMBERSHIP_TOL * omega.norm().max(f64::MIN_POSITIVE);
        if residual > allowed {
            return Err(Error::NotInIdeal { residual, allowed });
        }
        KetVector::from_slice(&x)
    }

    /// The ket map |Ω⟩; identical to [`expand`](Self::expand) and satisfying
    /// |UΩ⟩ = γ(U)|Ω⟩.
    pub fn ket_of(&self, omega: &Multivector) -> Result<KetVector> {
        self.expand(omega)
    }

    /// Inverse of the ket map: Σ_K ω^K t_K.
    pub fn lift(&self, ket: &KetVector) -> Multivector {
        let mut out = Multivector::zero();
        for (k, tn) in self.elements.iter().enumerate() {
            out = &out + &tn.scale(ket.get(k));
        }
        out
    }

    /// The matrix γ(U) defined by U t_N = γ(U)^K_N t_K; column N expands
    /// U·t_N. Membership of U·t_N is guaranteed by ideal closure, so only a
    /// degenerate basis can fail here.
    pub fn gamma_of(&self, u: &Multivector) -> Result<ComplexMatrix> {
        let mut gamma = ComplexMatrix::zeros(4, 4);
        for (n, tn) in self.elements.iter().enumerate() {
            let product = u.clifford_mul(tn);
            let (x, _residual) = linalg::solve_least_squares(&self.matrix, &product.to_vec())?;
            for (k, &c) in x.iter().enumerate() {
                gamma.set(k, n, c);
            }
        }
        Ok(gamma)
    }
}

/// The four matrices γ^μ = γ(e^μ) with
/// γ^μγ^ν + γ^νγ^μ = 2η^{μν}·1 checked at construction.
#[derive(Clone, Debug)]
pub struct GammaRep {
    basis: IdealBasis,
    gamma: [ComplexMatrix; 4],
}

impl GammaRep {
    pub fn new(basis: IdealBasis) -> Result<GammaRep> {
        let gamma: [ComplexMatrix; 4] = [
            basis.gamma_of(&Multivector::basis_one_form(0))?,
            basis.gamma_of(&Multivector::basis_one_form(1))?,
            basis.gamma_of(&Multivector::basis_one_form(2))?,
            basis.gamma_of(&Multivector::basis_one_form(3))?,
        ];
        let rep = GammaRep { basis, gamma };
        let dev = rep.anticommutator_max_deviation();
        if dev > ANTICOMMUTATOR_TOL {
            return Err(Error::InternalConsistency(format!(
                "gamma anticommutators deviate by {dev:.3e}"
            )));
        }
        Ok(rep)
    }

    pub fn basis(&self) -> &IdealBasis {
        &self.basis
    }

    pub fn tetrad(&self) -> &Tetrad {
        self.basis.tetrad()
    }

    /// γ(e^μ).
    pub fn gamma(&self, mu: usize) -> &ComplexMatrix {
        &self.gamma[mu]
    }

    pub fn gammas(&self) -> &[ComplexMatrix; 4] {
        &self.gamma
    }

    /// Largest entrywise deviation of γ^μγ^ν + γ^νγ^μ from 2η^{μν}·1.
    pub fn anticommutator_max_deviation(&self) -> f64 {
        let mut max_dev: f64 = 0.0;
        for mu in 0..DIM {
            for nu in 0..DIM {
                let ab = self.gamma[mu].matmul(&self.gamma[nu]).unwrap();
                let ba = self.gamma[nu].matmul(&self.gamma[mu]).unwrap();
                let eta = 2.0 * f64::from(crate::blade::Metric::eta(mu, nu));
                let expected = ComplexMatrix::identity(4).scale(Complex64::new(eta, 0.0));
                max_dev = max_dev.max((&(&ab + &ba) - &expected).max_abs());
            }
        }
        max_dev
    }
}

/// JSON export: `{"tetrad": [[...]], "gamma": [M0, M1, M2, M3]}`.
impl Serialize for GammaRep {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut state = serializer.serialize_struct("GammaRep", 2)?;
        state.serialize_field("tetrad", self.basis.tetrad().matrix())?;
        state.serialize_field("gamma", &self.gamma)?;
        state.end()
    }
}

/// Convenience path from a tetrad matrix to the full representation.
pub fn gamma_rep_for(tetrad: Tetrad) -> Result<GammaRep> {
    GammaRep::new(IdealBasis::new(Idempotent::new(tetrad)?)?)
}
