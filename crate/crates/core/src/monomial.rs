//! Exponent-vector monomials over a fixed, ordered variable universe.
//!
//! A [`VariableUniverse`] owns the variable names; a [`Monomial`] stores only
//! its exponents plus a fingerprint of the universe it was built in, so that
//! operations across universes are rejected.
//!
//! Monomials are totally ordered by the canonical order used for all output:
//! lower total degree first, and within one degree the lexicographically
//! larger exponent vector (compared from the first declared variable) first.

use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::varset::{VarSet, MAX_VARS};

/// Largest exponent any monomial may carry. Products and substitutions that
/// would exceed it fail with [`Error::ExponentOverflow`].
pub const EXPONENT_CAP: u32 = 1 << 16;

pub(crate) type Exps = SmallVec<[u32; 8]>;

/// Fingerprint of a universe's ordered name list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UniverseId(u64);

/// Ordered list of distinct variable names. Immutable once built.
#[derive(Debug, Clone)]
pub struct VariableUniverse {
    names: Vec<String>,
    index: HashMap<String, usize>,
    id: UniverseId,
}

impl PartialEq for VariableUniverse {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id && self.names == other.names
    }
}

impl Eq for VariableUniverse {}

pub(crate) fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl VariableUniverse {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.len() > MAX_VARS {
            return Err(Error::TooManyVariables(names.len()));
        }
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if !valid_name(name) {
                return Err(Error::InvalidVariableName(name.clone()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::DuplicateVariable(name.clone()));
            }
        }
        let mut hasher = DefaultHasher::new();
        names.hash(&mut hasher);
        let id = UniverseId(hasher.finish());
        Ok(Arc::new(VariableUniverse { names, index, id }))
    }

    /// Universe `x1, .., xn`.
    pub fn indexed(n: usize) -> Result<Arc<Self>> {
        Self::new((1..=n).map(|i| format!("x{i}")))
    }

    pub fn id(&self) -> UniverseId {
        self.id
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn lookup(&self, name: &str) -> Result<usize> {
        self.position(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }

    /// Set of positions for the given names.
    pub fn var_set<'a>(&self, names: impl IntoIterator<Item = &'a str>) -> Result<VarSet> {
        names.into_iter().map(|n| self.lookup(n)).collect()
    }

    pub fn all(&self) -> VarSet {
        VarSet::full(self.len())
    }

    pub fn one(&self) -> Monomial {
        Monomial::from_exps_unchecked(self.id, SmallVec::from_elem(0, self.len()))
    }

    /// The monomial `x_i^e`.
    pub fn var(&self, i: usize, e: u32) -> Result<Monomial> {
        let mut exps: Exps = SmallVec::from_elem(0, self.len());
        exps[i] = e;
        Monomial::new(self, &exps)
    }

    pub fn monomial(&self, exps: &[u32]) -> Result<Monomial> {
        Monomial::new(self, exps)
    }

    /// Text form: `x1^2*x2*x5^4`, or `1` for the constant monomial.
    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut out = String::new();
        for (i, &e) in m.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&self.names[i]);
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }

    pub fn parse_monomial(&self, text: &str) -> Result<Monomial> {
        let err = |reason: &str| Error::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        let trimmed = text.trim();
        if trimmed == "1" {
            return Ok(self.one());
        }
        if trimmed.is_empty() {
            return Err(err("empty monomial"));
        }
        let mut exps: Exps = SmallVec::from_elem(0, self.len());
        for factor in trimmed.split('*') {
            let factor = factor.trim();
            let (name, exp) = match factor.split_once('^') {
                Some((name, exp)) => {
                    let exp: u32 = exp
                        .trim()
                        .parse()
                        .map_err(|_| err(&format!("bad exponent in `{factor}`")))?;
                    (name.trim(), exp)
                }
                None => (factor, 1),
            };
            let i = self.lookup(name)?;
            exps[i] = exps[i]
                .checked_add(exp)
                .filter(|&e| e <= EXPONENT_CAP)
                .ok_or(Error::ExponentOverflow { cap: EXPONENT_CAP })?;
        }
        Monomial::new(self, &exps)
    }
}

/// A monomial `x^a` stored as its exponent vector.
#[derive(Clone)]
pub struct Monomial {
    universe: UniverseId,
    degree: u32,
    support: u64,
    pub(crate) exps: Exps,
}

impl Monomial {
    pub fn new(universe: &VariableUniverse, exps: &[u32]) -> Result<Self> {
        if exps.len() != universe.len() {
            return Err(Error::LengthMismatch {
                what: "exponents",
                expected: universe.len(),
                got: exps.len(),
            });
        }
        if exps.iter().any(|&e| e > EXPONENT_CAP) {
            return Err(Error::ExponentOverflow { cap: EXPONENT_CAP });
        }
        Ok(Self::from_exps_unchecked(universe.id(), exps.into()))
    }

    pub(crate) fn from_exps_unchecked(universe: UniverseId, exps: Exps) -> Self {
        let mut degree = 0u32;
        let mut support = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            degree += e;
            if e > 0 {
                support |= 1 << i;
            }
        }
        Monomial {
            universe,
            degree,
            support,
            exps,
        }
    }

    pub fn universe(&self) -> UniverseId {
        self.universe
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn exponent(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn support(&self) -> VarSet {
        VarSet::from_bits(self.support)
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn display<'a>(&'a self, universe: &'a VariableUniverse) -> impl fmt::Display + 'a {
        struct Shown<'a>(&'a VariableUniverse, &'a Monomial);
        impl fmt::Display for Shown<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&self.0.format_monomial(self.1))
            }
        }
        Shown(universe, self)
    }

    fn check_same(&self, other: &Monomial) -> Result<()> {
        if self.universe != other.universe || self.exps.len() != other.exps.len() {
            Err(Error::UniverseMismatch)
        } else {
            Ok(())
        }
    }

    /// `self | other`: every exponent of `self` is at most the matching one of `other`.
    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        self.check_same(other)?;
        Ok(self.divides_raw(other))
    }

    pub fn lcm(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        Ok(self.lcm_raw(other))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        self.check_same(other)?;
        self.mul_raw(other)
    }

    /// Sets the exponent of every variable outside `keep` to zero.
    pub fn subst_one(&self, keep: VarSet) -> Result<Monomial> {
        if !keep.is_subset(VarSet::full(self.exps.len())) {
            return Err(Error::UniverseMismatch);
        }
        Ok(self.restrict_raw(keep))
    }

    /// Raises `x_j` to `x_j^{w_j}` for each `(j, w_j)` in `weights`.
    pub fn phi_map(&self, weights: &[(usize, u32)]) -> Result<Monomial> {
        let mut exps = self.exps.clone();
        for &(j, w) in weights {
            let e = exps.get_mut(j).ok_or(Error::UniverseMismatch)?;
            *e = e
                .checked_mul(w)
                .filter(|&v| v <= EXPONENT_CAP)
                .ok_or(Error::ExponentOverflow { cap: EXPONENT_CAP })?;
        }
        Ok(Monomial::from_exps_unchecked(self.universe, exps))
    }

    /// Replaces every nonzero exponent by 1.
    pub fn squarefree(&self) -> Monomial {
        let exps = self.exps.iter().map(|&e| u32::from(e > 0)).collect();
        Monomial::from_exps_unchecked(self.universe, exps)
    }

    #[inline]
    pub(crate) fn divides_raw(&self, other: &Monomial) -> bool {
        self.degree <= other.degree
            && self.support & !other.support == 0
            && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub(crate) fn lcm_raw(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        Monomial::from_exps_unchecked(self.universe, exps)
    }

    pub(crate) fn mul_raw(&self, other: &Monomial) -> Result<Monomial> {
        let mut exps: Exps = SmallVec::with_capacity(self.exps.len());
        for (&a, &b) in self.exps.iter().zip(&other.exps) {
            let e = a + b;
            if e > EXPONENT_CAP {
                return Err(Error::ExponentOverflow { cap: EXPONENT_CAP });
            }
            exps.push(e);
        }
        Ok(Monomial::from_exps_unchecked(self.universe, exps))
    }

    pub(crate) fn restrict_raw(&self, keep: VarSet) -> Monomial {
        let exps = self
            .exps
            .iter()
            .enumerate()
            .map(|(i, &e)| if keep.contains(i) { e } else { 0 })
            .collect();
        Monomial::from_exps_unchecked(self.universe, exps)
    }
}

impl PartialEq for Monomial {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.exps == other.exps
    }
}

impl Eq for Monomial {}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.universe.hash(state);
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.universe.cmp(&other.universe))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Monomial{:?}", self.exps.as_slice())
    }
}
