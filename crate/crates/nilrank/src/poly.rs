//! Sparse multivariate polynomials over ℚ(i) with a conjugation anti-involution.
//!
//! Terms are kept in a canonical order (graded, then lexicographic in variable
//! indices) with no stored zero coefficients, so structural equality is
//! semantic equality.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::traits::Signed;
use thiserror::Error;

use crate::scalar::GaussianRational;
use crate::vars::{Reality, VarId, VarRegistry};

/// Exponent vector: sorted `(variable, exponent)` pairs, exponents > 0.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Monomial(Vec<(VarId, u32)>);

impl Monomial {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn var(v: VarId) -> Self {
        Self(vec![(v, 1)])
    }

    pub fn from_pairs(mut pairs: Vec<(VarId, u32)>) -> Self {
        pairs.retain(|&(_, e)| e > 0);
        pairs.sort_by_key(|&(v, _)| v);
        let mut out: Vec<(VarId, u32)> = Vec::with_capacity(pairs.len());
        for (v, e) in pairs {
            if let Some(last) = out.last_mut() {
                if last.0 == v {
                    last.1 += e;
                    continue;
                }
            }
            out.push((v, e));
        }
        Self(out)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn exponents(&self) -> &[(VarId, u32)] {
        &self.0
    }

    fn mul(&self, other: &Self) -> Self {
        let mut pairs = self.0.clone();
        pairs.extend_from_slice(&other.0);
        Self::from_pairs(pairs)
    }

    fn conj(&self, reg: &VarRegistry) -> Self {
        Self::from_pairs(self.0.iter().map(|&(v, e)| (reg.partner(v), e)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Error)]
pub enum PolyError {
    #[error("binding for {name} violates reality: expected {expected}, got {got}")]
    Reality {
        name: String,
        expected: &'static str,
        got: String,
    },
    #[error("bindings for {name} and its conjugate {conj_name} are not conjugate values")]
    ConjugateMismatch { name: String, conj_name: String },
}

/// What a variable may be substituted with.
#[derive(Clone, Debug)]
pub enum Binding {
    Scalar(GaussianRational),
    Poly(Polynomial),
}

impl From<GaussianRational> for Binding {
    fn from(v: GaussianRational) -> Self {
        Binding::Scalar(v)
    }
}

impl From<Polynomial> for Binding {
    fn from(v: Polynomial) -> Self {
        Binding::Poly(v)
    }
}

/// Sparse polynomial: canonical term map, no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, GaussianRational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::unit(), c);
        }
        Self { terms }
    }

    pub fn var(v: VarId) -> Self {
        Self::term(GaussianRational::one(), Monomial::var(v))
    }

    pub fn term(c: GaussianRational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &GaussianRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; zero polynomial reports 0.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// The constant coefficient (possibly zero).
    pub fn constant_part(&self) -> GaussianRational {
        self.terms
            .get(&Monomial::unit())
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    /// Some(c) iff the polynomial is the constant c.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.len() {
            0 => Some(GaussianRational::zero()),
            1 => self.terms.get(&Monomial::unit()).cloned(),
            _ => None,
        }
    }

    fn add_term(&mut self, m: Monomial, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.clone(), v * c))
                .collect(),
        }
    }

    /// Conjugation: conjugates scalars and swaps each indeterminate with its
    /// partner. A ring anti-involution (here the ring is commutative, so it is
    /// simply a ring involution).
    pub fn conj(&self, reg: &VarRegistry) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.conj(reg), c.conj());
        }
        out
    }

    /// Exact substitution. Unbound indeterminates survive.
    ///
    /// Binding a complex variable implicitly binds its partner to the
    /// conjugate value; an explicit partner binding must agree. Real and
    /// real-nonnegative variables only accept bindings of matching reality.
    pub fn substitute(
        &self,
        reg: &VarRegistry,
        bindings: &BTreeMap<VarId, Binding>,
    ) -> Result<Self, PolyError> {
        let full = close_bindings(reg, bindings)?;
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut acc = Self::constant(c.clone());
            for &(v, e) in m.exponents() {
                match full.get(&v) {
                    None => {
                        let pow = Self::term(GaussianRational::one(), Monomial::from_pairs(vec![(v, e)]));
                        acc = &acc * &pow;
                    }
                    Some(Binding::Scalar(s)) => {
                        let mut p = GaussianRational::one();
                        for _ in 0..e {
                            p *= s;
                        }
                        acc = acc.scale(&p);
                    }
                    Some(Binding::Poly(q)) => {
                        for _ in 0..e {
                            acc = &acc * q;
                        }
                    }
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }

    /// Substitution with all variables bound to scalars; the result must be constant.
    pub fn eval(
        &self,
        reg: &VarRegistry,
        bindings: &BTreeMap<VarId, Binding>,
    ) -> Result<GaussianRational, PolyError> {
        let r = self.substitute(reg, bindings)?;
        r.as_constant().ok_or_else(|| PolyError::Reality {
            name: "<eval>".into(),
            expected: "fully bound polynomial",
            got: format!("{r}"),
        })
    }

    fn fmt_with(&self, f: &mut fmt::Formatter<'_>, names: Option<&VarRegistry>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let lead = if k == 0 { "" } else { " + " };
            if m.is_unit() {
                write!(f, "{lead}({c})")?;
            } else {
                let mono: Vec<String> = m
                    .exponents()
                    .iter()
                    .map(|&(v, e)| {
                        let n = match names {
                            Some(reg) => reg.name(v).to_string(),
                            None => format!("x{}", v.0),
                        };
                        if e == 1 {
                            n
                        } else {
                            format!("{n}^{e}")
                        }
                    })
                    .collect();
                write!(f, "{lead}({c})·{}", mono.join("·"))?;
            }
        }
        Ok(())
    }

    pub fn display<'a>(&'a self, reg: &'a VarRegistry) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, reg }
    }
}

/// Completes a binding map under conjugation and validates reality constraints.
fn close_bindings(
    reg: &VarRegistry,
    bindings: &BTreeMap<VarId, Binding>,
) -> Result<BTreeMap<VarId, Binding>, PolyError> {
    let mut full: BTreeMap<VarId, Binding> = BTreeMap::new();
    for (&v, b) in bindings {
        match reg.reality(v) {
            Reality::RealNonneg => {
                if let Binding::Scalar(s) = b {
                    if !s.is_real() || s.re.is_negative() {
                        return Err(PolyError::Reality {
                            name: reg.name(v).to_string(),
                            expected: "nonnegative real",
                            got: format!("{s}"),
                        });
                    }
                }
                if let Binding::Poly(p) = b {
                    if p.conj(reg) != *p {
                        return Err(PolyError::Reality {
                            name: reg.name(v).to_string(),
                            expected: "self-conjugate polynomial",
                            got: format!("{p}"),
                        });
                    }
                }
            }
            Reality::Real => {
                if let Binding::Scalar(s) = b {
                    if !s.is_real() {
                        return Err(PolyError::Reality {
                            name: reg.name(v).to_string(),
                            expected: "real",
                            got: format!("{s}"),
                        });
                    }
                }
                if let Binding::Poly(p) = b {
                    if p.conj(reg) != *p {
                        return Err(PolyError::Reality {
                            name: reg.name(v).to_string(),
                            expected: "self-conjugate polynomial",
                            got: format!("{p}"),
                        });
                    }
                }
            }
            Reality::Complex => {}
        }
        full.insert(v, b.clone());
    }
    // Close under conjugation and check explicit pairs for consistency.
    for (&v, b) in bindings {
        let w = reg.partner(v);
        if w == v {
            continue;
        }
        let conj_b = match b {
            Binding::Scalar(s) => Binding::Scalar(s.conj()),
            Binding::Poly(p) => Binding::Poly(p.conj(reg)),
        };
        match full.get(&w) {
            None => {
                full.insert(w, conj_b);
            }
            Some(existing) => {
                let ok = match (existing, &conj_b) {
                    (Binding::Scalar(a), Binding::Scalar(b)) => a == b,
                    (Binding::Poly(a), Binding::Poly(b)) => a == b,
                    (Binding::Scalar(a), Binding::Poly(b)) => b.as_constant().as_ref() == Some(a),
                    (Binding::Poly(a), Binding::Scalar(b)) => a.as_constant().as_ref() == Some(b),
                };
                if !ok {
                    return Err(PolyError::ConjugateMismatch {
                        name: reg.name(v).to_string(),
                        conj_name: reg.name(w).to_string(),
                    });
                }
            }
        }
    }
    Ok(full)
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    reg: &'a VarRegistry,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.poly.fmt_with(f, Some(self.reg))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, None)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_with(f, None)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone().neg());
        }
        out
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .into_iter()
                .map(|(m, c)| (m, c.neg()))
                .collect(),
        }
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.clone().neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::GaussianRational as G;

    fn quartic_setup() -> (VarRegistry, VarId) {
        let mut reg = VarRegistry::new();
        let x = reg.real("x");
        (reg, x)
    }

    #[test]
    fn vieta_expansion_gives_defining_quadratic() {
        // (x-α)(x-β) with α+β = 1+i, αβ = 1 expands to x² - (1+i)x + 1.
        let (_reg, x) = quartic_setup();
        let xp = Polynomial::var(x);
        let sum = Polynomial::constant(G::from_parts(1, 1, 1, 1));
        let product = Polynomial::one();
        let expanded = &(&xp * &xp) - &(&sum * &xp) + product;
        let expected = &(&xp * &xp) - &(&Polynomial::constant(G::from_parts(1, 1, 1, 1)) * &xp)
            + Polynomial::one();
        assert_eq!(expanded, expected);
        assert_eq!(expanded.degree(), 2);
        assert_eq!(expanded.constant_part(), G::one());
    }

    #[test]
    fn additive_identity() {
        let mut reg = VarRegistry::new();
        let (u, _ubar) = reg.complex_pair("u", "ubar");
        let (_v, vbar) = reg.complex_pair("v", "vbar");
        let p = &Polynomial::var(u) * &Polynomial::var(vbar);
        assert_eq!(&p + &Polynomial::zero(), p);
    }

    #[test]
    fn conj_swaps_partners_and_fixes_reals() {
        let mut reg = VarRegistry::new();
        let t2 = reg.real_nonneg("t2");
        let (u, ubar) = reg.complex_pair("u", "ubar");
        let (v, vbar) = reg.complex_pair("v", "vbar");
        let (z, zbar) = reg.complex_pair("z", "zbar");

        // conj(i·t²) = -i·t²
        let it2 = Polynomial::term(G::i(), Monomial::var(t2));
        assert_eq!(it2.conj(&reg), it2.clone().neg());

        // conj(u·v̄·z) = ū·v·z̄
        let p = &(&Polynomial::var(u) * &Polynomial::var(vbar)) * &Polynomial::var(z);
        let q = &(&Polynomial::var(ubar) * &Polynomial::var(v)) * &Polynomial::var(zbar);
        assert_eq!(p.conj(&reg), q);
        assert_eq!(p.conj(&reg).conj(&reg), p);
    }

    #[test]
    fn substitute_respects_reality() {
        let mut reg = VarRegistry::new();
        let t2 = reg.real_nonneg("t2");
        let p = Polynomial::var(t2);
        let mut b = BTreeMap::new();
        b.insert(t2, Binding::Scalar(G::from_int(-1)));
        let err = p.substitute(&reg, &b).unwrap_err();
        assert!(err.to_string().contains("t2"), "error names the variable: {err}");
    }

    #[test]
    fn substitute_closes_conjugate_bindings() {
        let mut reg = VarRegistry::new();
        let (u, ubar) = reg.complex_pair("u", "ubar");
        let p = &Polynomial::var(u) * &Polynomial::var(ubar);
        let mut b = BTreeMap::new();
        b.insert(u, Binding::Scalar(G::from_parts(1, 1, 2, 1)));
        // |1+2i|² = 5, with ū bound automatically.
        assert_eq!(p.eval(&reg, &b).unwrap(), G::from_int(5));

        // An explicit inconsistent partner binding is rejected.
        b.insert(ubar, Binding::Scalar(G::from_int(7)));
        assert!(matches!(
            p.substitute(&reg, &b),
            Err(PolyError::ConjugateMismatch { .. })
        ));
    }

    #[test]
    fn unbound_indeterminates_survive() {
        let mut reg = VarRegistry::new();
        let a = reg.real("a");
        let b_ = reg.real("b");
        let p = &Polynomial::var(a) * &Polynomial::var(b_);
        let mut bind = BTreeMap::new();
        bind.insert(a, Binding::Scalar(G::from_int(3)));
        let q = p.substitute(&reg, &bind).unwrap();
        assert_eq!(q, Polynomial::var(b_).scale(&G::from_int(3)));
    }
}
