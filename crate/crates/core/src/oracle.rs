//! Brute-force enumeration of graded ideals with Gorenstein quotient.
//!
//! A semigroup ideal `E ⊆ H` whose complement `T = H \ E` is finite is the
//! same thing as a finite order ideal `T` of `H` under divisibility
//! (`h ≼ h'` iff `h' - h ∈ H`). For a bound `B` we walk every order ideal of
//! the finite poset `P_B = H ∩ [0, B]` by depth-first search over its
//! elements in decreasing order, and keep the ones whose ideal needs at least
//! two generators and whose quotient has a one-dimensional socle.
//!
//! Nothing here uses the colon-ideal description of the catalog. The only
//! shared code is semigroup membership and the canonical form of
//! [`FractionalIdeal`].

use std::collections::BTreeSet;

use thiserror::Error;

use crate::catalog::{build_catalog, CatalogError};
use crate::ideal::FractionalIdeal;
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{0} is not symmetric")]
    NotSymmetric(NumericalSemigroup),
    #[error("internal error: oracle and ideal calculus disagree on {0}")]
    CrossCheck(String),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// Number of elements of `H ∩ [0, bound]`.
pub fn poset_size(h: &NumericalSemigroup, bound: i64) -> usize {
    h.members_up_to(bound).count()
}

/// One order ideal `T` of `P_B`, stored as a membership table over `[0, B]`.
struct Complement<'a> {
    h: &'a NumericalSemigroup,
    bound: i64,
    removed: &'a [bool],
}

impl Complement<'_> {
    /// Membership in `E = H \ T`.
    fn in_ideal(&self, z: i64) -> bool {
        self.h.contains(z) && (z > self.bound || !self.removed[z as usize])
    }

    /// Maximal elements of `T`: the socle degrees of `R/I`.
    fn socle_dimension(&self) -> usize {
        let gens = self.h.minimal_generators();
        (0..=self.bound)
            .filter(|&t| self.removed[t as usize])
            .filter(|&t| gens.iter().all(|&a| self.in_ideal(t + a)))
            .count()
    }

    fn minimal_generators(&self) -> Vec<i64> {
        let gens = self.h.minimal_generators();
        // Every e > max(B, c) + multiplicity has e - multiplicity in E.
        let top = self.bound.max(self.h.conductor()) + self.h.multiplicity();
        (0..=top)
            .filter(|&e| self.in_ideal(e) && gens.iter().all(|&a| !self.in_ideal(e - a)))
            .collect()
    }
}

/// Depth-first walk over order ideals of `P_B`.
struct Walk<'a> {
    h: &'a NumericalSemigroup,
    bound: i64,
    // poset elements, decreasing
    elements: Vec<i64>,
    removed: Vec<bool>,
    // cap on the number of maximal elements of T; None walks everything
    max_socle: Option<usize>,
    visit: &'a mut dyn FnMut(&Complement<'_>),
}

impl Walk<'_> {
    fn run(&mut self, idx: usize, maximal: usize) {
        let Some(&s) = self.elements.get(idx) else {
            let t = Complement {
                h: self.h,
                bound: self.bound,
                removed: &self.removed,
            };
            (self.visit)(&t);
            return;
        };
        // Larger elements are already decided. `s` is forced into T iff
        // some `s + a` with `a` a minimal generator is in T.
        let forced = self
            .h
            .minimal_generators()
            .iter()
            .any(|&a| s + a <= self.bound && self.removed[(s + a) as usize]);
        if forced {
            self.removed[s as usize] = true;
            self.run(idx + 1, maximal);
            self.removed[s as usize] = false;
            return;
        }
        self.run(idx + 1, maximal);
        // Taking `s` freely makes it maximal in T for good, since everything
        // decided later is smaller.
        if self.max_socle.is_none_or(|cap| maximal < cap) {
            self.removed[s as usize] = true;
            self.run(idx + 1, maximal + 1);
            self.removed[s as usize] = false;
        }
    }
}

fn walk(
    h: &NumericalSemigroup,
    bound: i64,
    max_socle: Option<usize>,
    visit: &mut dyn FnMut(&Complement<'_>),
) {
    let bound = bound.max(-1);
    let mut elements: Vec<i64> = h.members_up_to(bound).collect();
    elements.reverse();
    let mut w = Walk {
        h,
        bound,
        elements,
        removed: vec![false; (bound + 1) as usize],
        max_socle,
        visit,
    };
    w.run(0, 0);
}

/// Every semigroup ideal `E ⊆ H` with `H ∩ (B, ∞) ⊆ E`, sorted. Exponential
/// in `|P_B|`; meant for small cross-checks.
pub fn enumerate_ideals(h: &NumericalSemigroup, bound: i64) -> Vec<FractionalIdeal> {
    let mut out = Vec::new();
    walk(h, bound, None, &mut |t| {
        let gens = t.minimal_generators();
        out.push(FractionalIdeal::new(h, &gens).expect("nonempty"));
    });
    out.sort();
    out
}

/// Number of order ideals of `P_B`.
pub fn count_order_ideals(h: &NumericalSemigroup, bound: i64) -> u64 {
    let mut n = 0;
    walk(h, bound, None, &mut |_| n += 1);
    n
}

fn collect_gorenstein(
    h: &NumericalSemigroup,
    bound: i64,
    max_socle: Option<usize>,
) -> Vec<FractionalIdeal> {
    let mut found = BTreeSet::new();
    walk(h, bound, max_socle, &mut |t| {
        if t.socle_dimension() != 1 {
            return;
        }
        let gens = t.minimal_generators();
        if gens.len() >= 2 {
            found.insert(FractionalIdeal::new(h, &gens).expect("nonempty"));
        }
    });
    found.into_iter().collect()
}

/// All ideals `I ⊆ R` with `H ∩ (B, ∞) ⊆ I`, `μ(I) ≥ 2` and `R/I`
/// Gorenstein, sorted lexicographically by generators.
///
/// The search stops extending a branch once `T` has two maximal elements;
/// that count never decreases further down the branch.
pub fn enumerate_gorenstein_ideals(h: &NumericalSemigroup, bound: i64) -> Vec<FractionalIdeal> {
    collect_gorenstein(h, bound, Some(1))
}

/// Same answer as [`enumerate_gorenstein_ideals`] without pruning: visits
/// every order ideal.
pub fn enumerate_gorenstein_ideals_exhaustive(
    h: &NumericalSemigroup,
    bound: i64,
) -> Vec<FractionalIdeal> {
    collect_gorenstein(h, bound, None)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    OracleOnly,
    FormulaOnly,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub ideal: FractionalIdeal,
    pub source: Source,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Counts {
    pub oracle: usize,
    pub formula: usize,
    pub conductor: i64,
}

/// Outcome of comparing the oracle against the catalog.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub semigroup: NumericalSemigroup,
    pub bound: i64,
    pub oracle_ideals: Vec<FractionalIdeal>,
    pub formula_ideals: Vec<FractionalIdeal>,
    pub counts: Counts,
    pub verdict: Verdict,
    pub mismatches: Vec<Mismatch>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}

/// Runs the oracle with `B = 2a + slack` and compares its output with the
/// catalog as sets.
pub fn verify_theorem(h: &NumericalSemigroup, slack: i64) -> Result<VerificationReport, OracleError> {
    if !h.is_symmetric() {
        return Err(OracleError::NotSymmetric(h.clone()));
    }
    let bound = (2 * h.frobenius() + slack).max(0);
    let oracle_ideals = enumerate_gorenstein_ideals(h, bound);

    for ideal in &oracle_ideals {
        let profile = ideal
            .quotient_profile()
            .map_err(|e| OracleError::CrossCheck(format!("{ideal}: {e}")))?;
        if !profile.gorenstein || ideal.mu() < 2 {
            return Err(OracleError::CrossCheck(ideal.to_string()));
        }
    }

    let mut formula_ideals: Vec<FractionalIdeal> =
        build_catalog(h)?.ideals().cloned().collect();
    formula_ideals.sort();

    let oracle_set: BTreeSet<_> = oracle_ideals.iter().collect();
    let formula_set: BTreeSet<_> = formula_ideals.iter().collect();
    let mismatches: Vec<Mismatch> = oracle_set
        .difference(&formula_set)
        .map(|&i| Mismatch {
            ideal: i.clone(),
            source: Source::OracleOnly,
        })
        .chain(formula_set.difference(&oracle_set).map(|&i| Mismatch {
            ideal: i.clone(),
            source: Source::FormulaOnly,
        }))
        .collect();

    let counts = Counts {
        oracle: oracle_ideals.len(),
        formula: formula_ideals.len(),
        conductor: h.conductor(),
    };
    let verdict = if mismatches.is_empty()
        && counts.oracle as i64 == counts.conductor
        && counts.formula as i64 == counts.conductor
    {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(VerificationReport {
        semigroup: h.clone(),
        bound,
        oracle_ideals,
        formula_ideals,
        counts,
        verdict,
        mismatches,
    })
}
