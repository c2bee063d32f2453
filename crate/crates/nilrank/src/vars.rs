//! Indeterminate universe with a conjugation involution.
//!
//! Indeterminates come in three reality classes. Real ones are their own
//! conjugate partner; complex ones are registered in pairs (`u`, `ū`). The
//! squared metric parameters `r²`, `s²`, `t²` are atomic indeterminates of the
//! real-nonnegative class, because only the squares ever occur.

use std::collections::HashMap;
use std::fmt;

/// Index of an indeterminate inside a [`VarRegistry`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VarId(pub u16);

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Reality {
    /// Real and constrained nonnegative (admits only nonnegative real bindings).
    RealNonneg,
    /// Real (admits only real bindings).
    Real,
    /// Complex, with a distinct conjugate partner.
    Complex,
}

#[derive(Clone, Debug)]
struct VarInfo {
    name: String,
    reality: Reality,
    partner: VarId,
}

/// A fixed universe of named indeterminates closed under conjugation.
#[derive(Clone, Debug, Default)]
pub struct VarRegistry {
    vars: Vec<VarInfo>,
    by_name: HashMap<String, VarId>,
}

impl VarRegistry {
    pub fn new() -> Self {
        Self::default()
    }

    fn insert(&mut self, name: &str, reality: Reality, partner: VarId) -> VarId {
        assert!(
            !self.by_name.contains_key(name),
            "indeterminate {name:?} registered twice"
        );
        let id = VarId(self.vars.len() as u16);
        self.vars.push(VarInfo {
            name: name.to_string(),
            reality,
            partner,
        });
        self.by_name.insert(name.to_string(), id);
        id
    }

    /// Registers a real-nonnegative indeterminate (its own conjugate).
    pub fn real_nonneg(&mut self, name: &str) -> VarId {
        let id = VarId(self.vars.len() as u16);
        self.insert(name, Reality::RealNonneg, id)
    }

    /// Registers a real indeterminate (its own conjugate).
    pub fn real(&mut self, name: &str) -> VarId {
        let id = VarId(self.vars.len() as u16);
        self.insert(name, Reality::Real, id)
    }

    /// Registers a complex pair; returns `(v, v̄)`.
    pub fn complex_pair(&mut self, name: &str, conj_name: &str) -> (VarId, VarId) {
        let a = VarId(self.vars.len() as u16);
        let b = VarId(self.vars.len() as u16 + 1);
        self.insert(name, Reality::Complex, b);
        self.insert(conj_name, Reality::Complex, a);
        (a, b)
    }

    pub fn name(&self, id: VarId) -> &str {
        &self.vars[id.0 as usize].name
    }

    pub fn reality(&self, id: VarId) -> Reality {
        self.vars[id.0 as usize].reality
    }

    pub fn partner(&self, id: VarId) -> VarId {
        self.vars[id.0 as usize].partner
    }

    pub fn lookup(&self, name: &str) -> Option<VarId> {
        self.by_name.get(name).copied()
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }
}

impl fmt::Display for VarRegistry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<&str> = self.vars.iter().map(|v| v.name.as_str()).collect();
        write!(f, "{{{}}}", names.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugation_is_involution_on_ids() {
        let mut reg = VarRegistry::new();
        let t2 = reg.real_nonneg("t2");
        let (u, ubar) = reg.complex_pair("u", "ubar");
        assert_eq!(reg.partner(t2), t2);
        assert_eq!(reg.partner(u), ubar);
        assert_eq!(reg.partner(ubar), u);
        assert_eq!(reg.partner(reg.partner(u)), u);
    }

    #[test]
    #[should_panic(expected = "registered twice")]
    fn duplicate_name_rejected() {
        let mut reg = VarRegistry::new();
        reg.real("x");
        reg.real("x");
    }
}
