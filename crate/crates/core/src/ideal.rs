//! Graded fractional ideals of `k[H]` in exponent form.
//!
//! Every homogeneous component of `k[H]` is at most one-dimensional, so a
//! graded (fractional) ideal is determined by the set `E ⊆ Z` of degrees it
//! occupies, and `E + H ⊆ E`. We store the minimal generators
//! `g_1 < ... < g_r` of `E`, i.e. `E = ⋃ (g_i + H)`, which is a canonical
//! form: two ideals are equal iff their generator lists are.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("an ideal needs at least one generator")]
    EmptyGenerators,
    #[error("ideals live over different semigroups")]
    MixedSemigroups,
    #[error("ideal {0} is not contained in the ring")]
    NotIntegral(String),
    #[error("the unit ideal has an empty quotient")]
    UnitIdeal,
}

/// A graded fractional ideal `(t^{g_1}, ..., t^{g_r})` of `k[H]`.
#[derive(Clone)]
pub struct FractionalIdeal {
    semigroup: NumericalSemigroup,
    generators: Vec<i64>,
}

/// Socle data of an Artinian quotient `R/I`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientProfile {
    /// Top nonzero degree of `R/I`.
    pub a_invariant: i64,
    pub socle_degrees: Vec<i64>,
    pub cm_type: usize,
    pub gorenstein: bool,
}

/// Minimal generators of the semigroup ideal `S` described by `member`.
///
/// `member` must describe a set closed under adding `H`, empty below `lo`
/// and containing every integer `>= hi`.
pub(crate) fn minimal_generators_of(
    h: &NumericalSemigroup,
    lo: i64,
    hi: i64,
    member: impl Fn(i64) -> bool,
) -> Vec<i64> {
    assert!((hi..hi + h.multiplicity()).all(&member), "window not cofinal");
    let gens = h.minimal_generators();
    // Anything >= hi + multiplicity has `e - multiplicity >= hi` inside S.
    (lo..hi + h.multiplicity())
        .filter(|&e| member(e) && gens.iter().all(|&a| !member(e - a)))
        .collect()
}

impl FractionalIdeal {
    /// Canonicalizes `generators`: sorts, deduplicates, and drops every `g_i`
    /// with `g_i - g_j ∈ H` for another generator `g_j`.
    pub fn new(h: &NumericalSemigroup, generators: &[i64]) -> Result<Self, IdealError> {
        if generators.is_empty() {
            return Err(IdealError::EmptyGenerators);
        }
        let mut sorted = generators.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut minimal: Vec<i64> = Vec::with_capacity(sorted.len());
        for g in sorted {
            // only smaller generators can divide g
            if !minimal.iter().any(|&m| h.contains(g - m)) {
                minimal.push(g);
            }
        }
        Ok(FractionalIdeal {
            semigroup: h.clone(),
            generators: minimal,
        })
    }

    /// The unit ideal `R`.
    pub fn unit(h: &NumericalSemigroup) -> Self {
        FractionalIdeal {
            semigroup: h.clone(),
            generators: vec![0],
        }
    }

    /// The graded maximal ideal `(t^{a_1}, ..., t^{a_ℓ})`.
    pub fn maximal(h: &NumericalSemigroup) -> Self {
        FractionalIdeal {
            semigroup: h.clone(),
            generators: h.minimal_generators().to_vec(),
        }
    }

    /// `R :_R t^m = {h ∈ H | h + m ∈ H}`.
    pub fn colon_into_ring(h: &NumericalSemigroup, m: i64) -> Self {
        // Every h >= c (and >= c - m) lies in the set.
        let hi = h.conductor().max(h.conductor() - m).max(0);
        let generators =
            minimal_generators_of(h, 0, hi, |z| h.contains(z) && h.contains(z + m));
        FractionalIdeal {
            semigroup: h.clone(),
            generators,
        }
    }

    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn generators(&self) -> &[i64] {
        &self.generators
    }

    /// Minimal number of generators `μ_R(I)`.
    pub fn mu(&self) -> usize {
        self.generators.len()
    }

    /// Smallest degree occupied by the ideal.
    pub fn min_exponent(&self) -> i64 {
        self.generators[0]
    }

    pub fn contains(&self, z: i64) -> bool {
        self.generators.iter().any(|&g| self.semigroup.contains(z - g))
    }

    /// Integer from which on every degree lies in the ideal.
    pub fn conductor(&self) -> i64 {
        self.min_exponent() + self.semigroup.conductor()
    }

    pub fn is_integral(&self) -> bool {
        self.generators.iter().all(|&g| self.semigroup.contains(g))
    }

    pub fn is_unit(&self) -> bool {
        self.generators == [0]
    }

    /// `t^m · I`.
    pub fn shift(&self, m: i64) -> Self {
        FractionalIdeal {
            semigroup: self.semigroup.clone(),
            generators: self.generators.iter().map(|&g| g + m).collect(),
        }
    }

    /// If `other = t^ℓ · self` for some integer `ℓ`, returns `ℓ`.
    pub fn shift_to(&self, other: &Self) -> Option<i64> {
        if !self.semigroup.same_as(&other.semigroup) || self.mu() != other.mu() {
            return None;
        }
        let l = other.min_exponent() - self.min_exponent();
        self.generators
            .iter()
            .zip(&other.generators)
            .all(|(&x, &y)| y - x == l)
            .then_some(l)
    }

    /// `self : other = {z | z + E_other ⊆ E_self}`.
    pub fn colon(&self, other: &Self) -> Result<Self, IdealError> {
        if !self.semigroup.same_as(&other.semigroup) {
            return Err(IdealError::MixedSemigroups);
        }
        let lo = self.min_exponent() - other.min_exponent();
        let hi = lo + self.semigroup.conductor();
        let generators = minimal_generators_of(&self.semigroup, lo, hi, |z| {
            other.generators.iter().all(|&y| self.contains(z + y))
        });
        Ok(FractionalIdeal {
            semigroup: self.semigroup.clone(),
            generators,
        })
    }

    /// `R : I`.
    pub fn dual(&self) -> Self {
        FractionalIdeal::unit(&self.semigroup)
            .colon(self)
            .expect("same semigroup")
    }

    /// Top degree and socle of `R/I`.
    pub fn quotient_profile(&self) -> Result<QuotientProfile, IdealError> {
        if !self.is_integral() {
            return Err(IdealError::NotIntegral(self.to_string()));
        }
        if self.is_unit() {
            return Err(IdealError::UnitIdeal);
        }
        let h = &self.semigroup;
        // H \ E is contained in [0, g_1 + c).
        let outside: Vec<i64> = h
            .members_up_to(self.conductor() - 1)
            .filter(|&n| !self.contains(n))
            .collect();
        let a_invariant = *outside.last().expect("proper ideal has a nonzero quotient");
        let socle_degrees: Vec<i64> = outside
            .iter()
            .copied()
            .filter(|&n| {
                h.minimal_generators()
                    .iter()
                    .all(|&a| self.contains(n + a))
            })
            .collect();
        let cm_type = socle_degrees.len();
        Ok(QuotientProfile {
            a_invariant,
            socle_degrees,
            cm_type,
            gorenstein: cm_type == 1,
        })
    }
}

impl PartialEq for FractionalIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.generators == other.generators && self.semigroup.same_as(&other.semigroup)
    }
}

impl Eq for FractionalIdeal {}

impl Hash for FractionalIdeal {
    fn hash<S: Hasher>(&self, state: &mut S) {
        self.generators.hash(state);
    }
}

impl PartialOrd for FractionalIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on generator lists; ideals over one semigroup only.
impl Ord for FractionalIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.generators.cmp(&other.generators).then_with(|| {
            self.semigroup
                .minimal_generators()
                .cmp(other.semigroup.minimal_generators())
        })
    }
}

impl fmt::Debug for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} in {}", self.semigroup)
    }
}

impl fmt::Display for FractionalIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            match g {
                0 => write!(f, "1")?,
                1 => write!(f, "t")?,
                _ => write!(f, "t^{g}")?,
            }
        }
        write!(f, ")")
    }
}
