//! Structure differentials: d, ∂, ∂̄, ∂∂̄ and the twisted operator d_ϑ = d − ϑ∧.
//!
//! A [`DifferentialSpec`] records dφ^i for each holomorphic generator; dφ̄^i is
//! its conjugate and d extends to arbitrary invariant forms as the degree-+1
//! graded derivation annihilating scalars. Validation enforces integrability
//! (no (0,2) component in any dφ^i) and d² = 0 on the generators, which is the
//! Jacobi identity of the underlying algebra.

use thiserror::Error;

use crate::form::{BiIndex, Form};
use crate::poly::Polynomial;
use crate::scalar::GaussianRational;
use crate::vars::VarRegistry;

#[derive(Debug, Error)]
pub enum DiffError {
    #[error("dφ^{index} has a (0,2) component: complex structure not integrable")]
    NotIntegrable { index: u8 },
    #[error("dφ^{index} has total degree ≠ 2")]
    WrongDegree { index: u8 },
    #[error("d² ≠ 0 on φ^{index}: Jacobi identity fails")]
    JacobiFails { index: u8 },
    #[error("dimension mismatch: spec is for n={spec}, form has n={form}")]
    DimensionMismatch { spec: u8, form: u8 },
}

/// The differential of each generator; everything else follows by the
/// Leibniz rule and conjugation.
#[derive(Clone, Debug)]
pub struct DifferentialSpec {
    dim: u8,
    /// d_phi[i] = dφ^{i+1}
    d_phi: Vec<Form>,
}

/// One factor of a decomposable invariant form.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Gen {
    Holo(u8),
    Anti(u8),
}

impl DifferentialSpec {
    /// Builds and validates a spec from the images dφ^1..dφ^n.
    pub fn new(dim: u8, d_phi: Vec<Form>, reg: &VarRegistry) -> Result<Self, DiffError> {
        assert_eq!(d_phi.len(), dim as usize);
        for (k, f) in d_phi.iter().enumerate() {
            let index = (k + 1) as u8;
            if f.dim() != dim {
                return Err(DiffError::DimensionMismatch {
                    spec: dim,
                    form: f.dim(),
                });
            }
            if !f.is_zero() && f.pure_degree() != Some(2) {
                return Err(DiffError::WrongDegree { index });
            }
            if !f.bidegree_component(0, 2).is_zero() {
                return Err(DiffError::NotIntegrable { index });
            }
        }
        let spec = Self { dim, d_phi };
        for i in 1..=dim {
            let dd = spec.d(&spec.d_phi[(i - 1) as usize].clone(), reg);
            if !dd.is_zero() {
                return Err(DiffError::JacobiFails { index: i });
            }
        }
        Ok(spec)
    }

    /// The abelian structure: every generator is closed.
    pub fn abelian(dim: u8) -> Self {
        Self {
            dim,
            d_phi: (0..dim).map(|_| Form::zero(dim)).collect(),
        }
    }

    pub fn dim(&self) -> u8 {
        self.dim
    }

    pub fn d_generator(&self, i: u8) -> &Form {
        &self.d_phi[(i - 1) as usize]
    }

    fn d_gen(&self, g: Gen, reg: &VarRegistry) -> Form {
        match g {
            Gen::Holo(i) => self.d_phi[(i - 1) as usize].clone(),
            Gen::Anti(i) => self.d_phi[(i - 1) as usize].conj(reg),
        }
    }

    /// The Chevalley–Eilenberg differential, extended as a graded derivation.
    pub fn d(&self, a: &Form, reg: &VarRegistry) -> Form {
        assert_eq!(a.dim(), self.dim, "dimension mismatch");
        let mut out = Form::zero(self.dim);
        for (idx, coeff) in a.terms() {
            let gens: Vec<Gen> = idx
                .holo
                .iter()
                .map(|&i| Gen::Holo(i))
                .chain(idx.anti.iter().map(|&j| Gen::Anti(j)))
                .collect();
            for (pos, &g) in gens.iter().enumerate() {
                // prefix ∧ d(gen) ∧ suffix, with the Koszul sign (-1)^pos
                let mut piece = Form::unit(self.dim);
                for &h in &gens[..pos] {
                    piece = piece.wedge(&gen_form(self.dim, h));
                }
                piece = piece.wedge(&self.d_gen(g, reg));
                for &h in &gens[pos + 1..] {
                    piece = piece.wedge(&gen_form(self.dim, h));
                }
                let mut c = coeff.clone();
                if pos % 2 == 1 {
                    c = -c;
                }
                out = out.add(&piece.scale_poly(&c));
            }
        }
        out
    }

    /// ∂: the (p+1,q)-component of d on each (p,q)-term.
    pub fn del(&self, a: &Form, reg: &VarRegistry) -> Form {
        let mut out = Form::zero(self.dim);
        for (p, q) in a.bidegrees() {
            let part = self.d(&a.bidegree_component(p, q), reg);
            out = out.add(&part.bidegree_component(p + 1, q));
        }
        out
    }

    /// ∂̄: the (p,q+1)-component of d on each (p,q)-term.
    pub fn delbar(&self, a: &Form, reg: &VarRegistry) -> Form {
        let mut out = Form::zero(self.dim);
        for (p, q) in a.bidegrees() {
            let part = self.d(&a.bidegree_component(p, q), reg);
            out = out.add(&part.bidegree_component(p, q + 1));
        }
        out
    }

    /// ∂∂̄ (composition, exact coefficients).
    pub fn del_delbar(&self, a: &Form, reg: &VarRegistry) -> Form {
        self.del(&self.delbar(a, reg), reg)
    }

    /// The twisted differential d_ϑ a = d a − ϑ∧a for a degree-1 twist ϑ.
    pub fn twisted(&self, theta: &Form, a: &Form, reg: &VarRegistry) -> Form {
        assert!(
            theta.is_zero() || theta.pure_degree() == Some(1),
            "twist must have pure degree 1"
        );
        self.d(a, reg).sub(&theta.wedge(a))
    }

    /// d_{kϑ} for a rational multiple k of the twist.
    pub fn twisted_scaled(
        &self,
        theta: &Form,
        k: &GaussianRational,
        a: &Form,
        reg: &VarRegistry,
    ) -> Form {
        self.twisted(&theta.scale(k), a, reg)
    }
}

fn gen_form(dim: u8, g: Gen) -> Form {
    match g {
        Gen::Holo(i) => Form::phi(dim, i),
        Gen::Anti(j) => Form::phibar(dim, j),
    }
}

/// The correction form φ of the expansion
/// `(ω̃ + d_ϑα)^k = ω̃^k + d_{kϑ}φ` with
/// `φ = Σ_{s+t=k, t≥1} C(k,s)·ω̃^s ∧ α ∧ (d_{(t-1)ϑ}α)^{t-1}`;
/// the empty product at t = 1 is the scalar unit.
pub fn omega_hat_correction(
    spec: &DifferentialSpec,
    theta: &Form,
    omega_tilde: &Form,
    alpha: &Form,
    k: usize,
    reg: &VarRegistry,
) -> Form {
    let dim = spec.dim();
    let mut phi = Form::zero(dim);
    for t in 1..=k {
        let s = k - t;
        let choose = binomial(k, s);
        let d_t1 = spec.twisted_scaled(
            theta,
            &GaussianRational::from_int((t - 1) as i64),
            alpha,
            reg,
        );
        let piece = omega_tilde
            .power(s)
            .wedge(alpha)
            .wedge(&d_t1.power(t - 1))
            .scale(&GaussianRational::from_int(choose));
        phi = phi.add(&piece);
    }
    phi
}

fn binomial(n: usize, k: usize) -> i64 {
    let mut r: i64 = 1;
    for j in 0..k.min(n - k) {
        r = r * (n - j) as i64 / (j + 1) as i64;
    }
    r
}

/// Convenience: a Form with a single unit-coefficient term.
pub fn basis_form(dim: u8, holo: Vec<u8>, anti: Vec<u8>) -> Form {
    Form::from_poly_term(dim, BiIndex::new(holo, anti), Polynomial::one())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as G;

    fn reg() -> VarRegistry {
        VarRegistry::new()
    }

    /// dφ³ = φ¹∧φ² (holomorphically parallelizable structure).
    fn iwasawa(reg: &VarRegistry) -> DifferentialSpec {
        let d3 = basis_form(3, vec![1, 2], vec![]);
        DifferentialSpec::new(3, vec![Form::zero(3), Form::zero(3), d3], reg).unwrap()
    }

    #[test]
    fn abelian_differential_vanishes() {
        let r = reg();
        let spec = DifferentialSpec::abelian(3);
        let a = basis_form(3, vec![1, 2], vec![3]).add(&Form::phibar(3, 1));
        assert!(spec.d(&a, &r).is_zero());
    }

    #[test]
    fn derivation_signs() {
        let r = reg();
        let spec = iwasawa(&r);
        // d(φ³∧φ̄³) = dφ³∧φ̄³ - φ³∧dφ̄³ = φ^{12 3̄} - φ³∧φ^{1̄2̄}
        let a = basis_form(3, vec![3], vec![3]);
        let da = spec.d(&a, &r);
        let expect = basis_form(3, vec![1, 2], vec![3])
            .sub(&Form::phi(3, 3).wedge(&basis_form(3, vec![], vec![1, 2])));
        assert_eq!(da, expect);
    }

    #[test]
    fn d_squared_zero_on_random_forms() {
        let r = reg();
        let spec = iwasawa(&r);
        // all bigraded basis forms of degree ≤ 3
        for holo in [vec![], vec![1], vec![2], vec![3], vec![1, 2], vec![1, 3], vec![2, 3]] {
            for anti in [vec![], vec![1u8], vec![2], vec![3], vec![1, 2]] {
                let f = basis_form(3, holo.clone(), anti.clone());
                assert!(
                    spec.d(&spec.d(&f, &r), &r).is_zero(),
                    "d² ≠ 0 on {holo:?}|{anti:?}"
                );
            }
        }
    }

    #[test]
    fn d_splits_as_del_plus_delbar() {
        let r = reg();
        let spec = iwasawa(&r);
        let f = basis_form(3, vec![3], vec![3]).add(&basis_form(3, vec![1], vec![2]));
        let d = spec.d(&f, &r);
        let split = spec.del(&f, &r).add(&spec.delbar(&f, &r));
        assert_eq!(d, split);
    }

    #[test]
    fn twist_zero_is_plain_differential() {
        let r = reg();
        let spec = iwasawa(&r);
        let f = basis_form(3, vec![3], vec![3]);
        assert_eq!(spec.twisted(&Form::zero(3), &f, &r), spec.d(&f, &r));
    }

    #[test]
    fn twisted_square_is_minus_dtheta_wedge() {
        let r = reg();
        let spec = iwasawa(&r);
        // ϑ = φ³ + φ̄³ is not closed here: dϑ = φ^{12} + φ^{1̄2̄}.
        let theta = Form::phi(3, 3).add(&Form::phibar(3, 3));
        let dtheta = spec.d(&theta, &r);
        for f in [
            basis_form(3, vec![1], vec![]),
            basis_form(3, vec![3], vec![3]),
            basis_form(3, vec![2], vec![1]).scale(&G::from_parts(1, 3, -2, 1)),
        ] {
            let twice = spec.twisted(&theta, &spec.twisted(&theta, &f, &r), &r);
            assert_eq!(twice, dtheta.wedge(&f).neg());
        }
    }

    #[test]
    fn rejects_non_integrable_spec() {
        let r = reg();
        // dφ² = φ̄¹∧φ̄² has a (0,2) part.
        let bad = basis_form(2, vec![], vec![1, 2]);
        let err = DifferentialSpec::new(2, vec![Form::zero(2), bad], &r).unwrap_err();
        assert!(matches!(err, DiffError::NotIntegrable { index: 2 }));
    }

    #[test]
    fn rejects_jacobi_failure() {
        let r = reg();
        // dφ² = φ¹∧φ³, dφ³ = φ¹∧φ²: then d²φ² = -φ¹∧dφ³ = -φ^{1}∧φ^{12} = 0,
        // but d²φ³ = -φ¹∧dφ² = -φ¹∧φ^{13} = 0 as well; need a genuine failure:
        // dφ³ = φ²∧φ̄² and dφ² = φ¹∧φ̄¹ gives d²φ³ = dφ²∧φ̄² - φ²∧dφ̄² ≠ 0.
        let d2 = basis_form(3, vec![1], vec![1]);
        let d3 = basis_form(3, vec![2], vec![2]);
        let err = DifferentialSpec::new(3, vec![Form::zero(3), d2, d3], &r).unwrap_err();
        assert!(matches!(err, DiffError::JacobiFails { index: 3 }));
    }
}
