//! Monomial ideals held as canonical minimal generating sets.
//!
//! Every constructor minimalizes, so two ideals are equal exactly when their
//! generator lists are identical.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, VariableUniverse};
use crate::varset::VarSet;

#[derive(Clone)]
pub struct MonomialIdeal {
    universe: Arc<VariableUniverse>,
    gens: Vec<Monomial>,
}

/// Drops duplicates and non-minimal elements, returning the antichain in
/// canonical order.
pub(crate) fn minimalize_raw(mut cands: Vec<Monomial>) -> Vec<Monomial> {
    cands.sort_unstable();
    cands.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(cands.len());
    for c in cands {
        // kept is degree-sorted and equal-degree distinct monomials never divide
        if !kept.iter().any(|k| k.divides_raw(&c)) {
            kept.push(c);
        }
    }
    kept
}

impl MonomialIdeal {
    /// The ideal generated by `gens`, minimalized.
    pub fn new(universe: Arc<VariableUniverse>, gens: Vec<Monomial>) -> Result<Self> {
        if gens
            .iter()
            .any(|g| g.universe() != universe.id() || g.exps.len() != universe.len())
        {
            return Err(Error::UniverseMismatch);
        }
        Ok(Self::from_raw(universe, gens))
    }

    pub(crate) fn from_raw(universe: Arc<VariableUniverse>, gens: Vec<Monomial>) -> Self {
        MonomialIdeal {
            universe,
            gens: minimalize_raw(gens),
        }
    }

    pub fn zero(universe: Arc<VariableUniverse>) -> Self {
        MonomialIdeal {
            universe,
            gens: Vec::new(),
        }
    }

    pub fn unit(universe: Arc<VariableUniverse>) -> Self {
        let one = universe.one();
        MonomialIdeal {
            universe,
            gens: vec![one],
        }
    }

    /// The prime `(x_i : i in vars)`.
    pub fn prime(universe: Arc<VariableUniverse>, vars: VarSet) -> Result<Self> {
        let gens = vars
            .iter()
            .map(|i| universe.var(i, 1))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(universe, gens))
    }

    pub fn universe(&self) -> &Arc<VariableUniverse> {
        &self.universe
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    /// True when the ideal contains 1, i.e. is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.gens.first().is_some_and(Monomial::is_one)
    }

    fn check_universe(&self, other: &MonomialIdeal) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || self.universe == other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    fn check_monomial(&self, m: &Monomial) -> Result<()> {
        if m.universe() == self.universe.id() && m.exps.len() == self.universe.len() {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    pub fn contains(&self, m: &Monomial) -> Result<bool> {
        self.check_monomial(m)?;
        Ok(self.contains_raw(m))
    }

    pub(crate) fn contains_raw(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides_raw(m))
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_universe(other)?;
        let mut cands = Vec::with_capacity(self.gens.len() + other.gens.len());
        // a generator already in the other ideal covers every lcm it forms
        let lhs_rest: Vec<&Monomial> = self
            .gens
            .iter()
            .filter(|f| {
                let inside = other.contains_raw(f);
                if inside {
                    cands.push((*f).clone());
                }
                !inside
            })
            .collect();
        let rhs_rest: Vec<&Monomial> = other
            .gens
            .iter()
            .filter(|g| {
                let inside = self.contains_raw(g);
                if inside {
                    cands.push((*g).clone());
                }
                !inside
            })
            .collect();
        let mut seen: HashSet<Monomial> = HashSet::new();
        for f in &lhs_rest {
            for g in &rhs_rest {
                let l = f.lcm_raw(g);
                if seen.insert(l.clone()) {
                    cands.push(l);
                }
            }
        }
        Ok(Self::from_raw(self.universe.clone(), cands))
    }

    /// Left fold of [`intersect`](Self::intersect); the empty intersection is the unit ideal.
    pub fn intersect_all<'a>(
        universe: Arc<VariableUniverse>,
        ideals: impl IntoIterator<Item = &'a MonomialIdeal>,
    ) -> Result<MonomialIdeal> {
        let mut acc = MonomialIdeal::unit(universe);
        for ideal in ideals {
            acc = acc.intersect(ideal)?;
        }
        Ok(acc)
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_universe(other)?;
        let mut cands = Vec::with_capacity(self.gens.len() * other.gens.len());
        let mut seen: HashSet<Monomial> = HashSet::new();
        for f in &self.gens {
            for g in &other.gens {
                let p = f.mul_raw(g)?;
                if seen.insert(p.clone()) {
                    cands.push(p);
                }
            }
        }
        Ok(Self::from_raw(self.universe.clone(), cands))
    }

    /// `I^s` by repeated multiplication, minimalizing after every step.
    pub fn power(&self, s: u32) -> Result<MonomialIdeal> {
        if s == 0 {
            return Err(Error::ZeroPower);
        }
        let mut acc = self.clone();
        for _ in 1..s {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_universe(other)?;
        let cands = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(Self::from_raw(self.universe.clone(), cands))
    }

    pub fn radical(&self) -> MonomialIdeal {
        let cands = self.gens.iter().map(Monomial::squarefree).collect();
        Self::from_raw(self.universe.clone(), cands)
    }

    /// `I R_(C) ∩ R` for the monomial prime `(C)`: set every variable outside
    /// `C` to 1 and minimalize. The result is the unit ideal when some
    /// generator has no support in `C`.
    pub fn localize_contract(&self, c: VarSet) -> Result<MonomialIdeal> {
        if !c.is_subset(self.universe.all()) {
            return Err(Error::UniverseMismatch);
        }
        let cands = self.gens.iter().map(|g| g.restrict_raw(c)).collect();
        Ok(Self::from_raw(self.universe.clone(), cands))
    }

    /// Image under `x_j -> x_j^{w_j}`, minimalized.
    pub fn phi_map(&self, weights: &[(usize, u32)]) -> Result<MonomialIdeal> {
        let cands = self
            .gens
            .iter()
            .map(|g| g.phi_map(weights))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(self.universe.clone(), cands))
    }

    pub fn ideal_equals(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.gens == other.gens)
    }

    /// `self ⊆ other`.
    pub fn is_subset(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_universe(other)?;
        Ok(self.gens.iter().all(|g| other.contains_raw(g)))
    }

    /// Canonically first generator of `self` not contained in `other`.
    pub fn first_generator_outside(&self, other: &MonomialIdeal) -> Result<Option<Monomial>> {
        self.check_universe(other)?;
        Ok(self.gens.iter().find(|g| !other.contains_raw(g)).cloned())
    }

    pub fn to_text(&self) -> String {
        if self.gens.is_empty() {
            return "(0)".to_string();
        }
        let parts: Vec<String> = self
            .gens
            .iter()
            .map(|g| self.universe.format_monomial(g))
            .collect();
        format!("({})", parts.join(", "))
    }

    pub fn generator_strings(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| self.universe.format_monomial(g))
            .collect()
    }

    pub fn parse(universe: Arc<VariableUniverse>, text: &str) -> Result<MonomialIdeal> {
        let trimmed = text.trim();
        let inner = trimmed
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::Parse {
                input: text.to_string(),
                reason: "ideal must be enclosed in parentheses".to_string(),
            })?
            .trim();
        if inner.is_empty() || inner == "0" {
            return Ok(Self::zero(universe));
        }
        let gens = inner
            .split(',')
            .map(|g| universe.parse_monomial(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(universe, gens))
    }

    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            variables: self.universe.names().to_vec(),
            generators: self.gens.iter().map(|g| g.exponents().to_vec()).collect(),
        }
    }

    pub fn from_json(json: &IdealJson) -> Result<MonomialIdeal> {
        let universe = VariableUniverse::new(json.variables.iter().cloned())?;
        let gens = json
            .generators
            .iter()
            .map(|e| universe.monomial(e))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_raw(universe, gens))
    }
}

/// Machine form of an ideal: variable names plus one exponent vector per
/// minimal generator, in canonical order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub variables: Vec<String>,
    pub generators: Vec<Vec<u32>>,
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.gens == other.gens
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonomialIdeal{}", self.to_text())
    }
}
