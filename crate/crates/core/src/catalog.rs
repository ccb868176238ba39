//! The catalog of non-principal graded ideals with Gorenstein quotient.
//!
//! Over a symmetric `H` with `a = f(H)`, every such ideal is one of
//!
//! * `R :_R t^m` (below), with `a(R/I) = a - m`, or
//! * `t^m (R :_R t^m)` (above), with `a(R/I) = a + m`,
//!
//! for a gap `m`, and these `2 · #gaps = c(H)` ideals are pairwise distinct.
//! [`build_catalog`] materializes the list and checks every invariant it
//! relies on instead of assuming it.

use std::fmt;

use thiserror::Error;

use crate::ideal::{FractionalIdeal, IdealError};
use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("{0} is not symmetric")]
    NotSymmetric(NumericalSemigroup),
    #[error("internal error: catalog entries {first} and {second} coincide")]
    DuplicateIdeal { first: usize, second: usize },
    #[error("internal error: {0}")]
    InvariantViolated(String),
    #[error("{0} is not in the catalog")]
    NotInCatalog(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    /// `R :_R t^m`
    Below,
    /// `t^m (R :_R t^m)`
    Above,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Below => "below",
            Side::Above => "above",
        }
    }

    pub fn flip(self) -> Self {
        match self {
            Side::Below => Side::Above,
            Side::Above => Side::Below,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub gap: i64,
    pub side: Side,
    pub ideal: FractionalIdeal,
    /// `a(R/I)`
    pub a_quotient: i64,
    pub mu: usize,
}

#[derive(Debug, Clone)]
pub struct Catalog {
    semigroup: NumericalSemigroup,
    entries: Vec<CatalogEntry>,
}

/// Two catalog entries isomorphic as graded modules up to shift.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoClass {
    pub gap: i64,
    pub below: CatalogEntry,
    pub above: CatalogEntry,
}

impl IsoClass {
    pub fn members(&self) -> [&CatalogEntry; 2] {
        [&self.below, &self.above]
    }
}

fn invariant(ok: bool, msg: impl FnOnce() -> String) -> Result<(), CatalogError> {
    if ok {
        Ok(())
    } else {
        Err(CatalogError::InvariantViolated(msg()))
    }
}

fn make_entry(
    h: &NumericalSemigroup,
    gap: i64,
    side: Side,
    ideal: FractionalIdeal,
) -> Result<CatalogEntry, CatalogError> {
    let a = h.frobenius();
    let profile = ideal.quotient_profile()?;
    let expected = match side {
        Side::Below => a - gap,
        Side::Above => a + gap,
    };
    invariant(profile.a_invariant == expected, || {
        format!(
            "a(R/I) = {} for {ideal} ({side}, m = {gap}), expected {expected}",
            profile.a_invariant
        )
    })?;
    invariant(profile.gorenstein, || {
        format!("R/{ideal} has type {}", profile.cm_type)
    })?;
    invariant(ideal.mu() >= 2, || format!("{ideal} is principal"))?;
    let aq = profile.a_invariant;
    invariant(h.contains(aq) && aq != a && !h.contains((a - aq).abs()), || {
        format!("a(R/I) = {aq} breaks the gap conditions for {ideal}")
    })?;
    Ok(CatalogEntry {
        gap,
        side,
        mu: ideal.mu(),
        ideal,
        a_quotient: aq,
    })
}

/// Builds the catalog of `H`: for each gap `m` ascending, the below entry
/// then the above entry.
pub fn build_catalog(h: &NumericalSemigroup) -> Result<Catalog, CatalogError> {
    if !h.is_symmetric() {
        return Err(CatalogError::NotSymmetric(h.clone()));
    }
    let mut entries = Vec::with_capacity(2 * h.genus());
    for &m in h.gaps() {
        let below = FractionalIdeal::colon_into_ring(h, m);
        let above = below.shift(m);
        entries.push(make_entry(h, m, Side::Below, below)?);
        entries.push(make_entry(h, m, Side::Above, above)?);
    }

    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&i, &j| entries[i].ideal.cmp(&entries[j].ideal));
    for w in order.windows(2) {
        if entries[w[0]].ideal == entries[w[1]].ideal {
            return Err(CatalogError::DuplicateIdeal {
                first: w[0].min(w[1]),
                second: w[0].max(w[1]),
            });
        }
    }
    invariant(entries.len() as i64 == h.conductor(), || {
        format!("{} entries for conductor {}", entries.len(), h.conductor())
    })?;

    Ok(Catalog {
        semigroup: h.clone(),
        entries,
    })
}

/// Recovers the gap `m` with `R : I = (1, t^m)` for an ideal `I` from the
/// lower half of the catalog.
pub fn recover_gap(h: &NumericalSemigroup, ideal: &FractionalIdeal) -> Result<i64, CatalogError> {
    if !h.is_symmetric() {
        return Err(CatalogError::NotSymmetric(h.clone()));
    }
    if ideal.semigroup() != h {
        return Err(IdealError::MixedSemigroups.into());
    }
    let dual = ideal.dual();
    match *dual.generators() {
        [0, m] if h.gaps().binary_search(&m).is_ok() => Ok(m),
        _ => Err(CatalogError::PreconditionViolated(format!(
            "R : {ideal} = {dual} is not of the form (1, t^m) with m a gap"
        ))),
    }
}

impl Catalog {
    pub fn semigroup(&self) -> &NumericalSemigroup {
        &self.semigroup
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `a(R) = f(H)`.
    pub fn a_invariant(&self) -> i64 {
        self.semigroup.frobenius()
    }

    pub fn position(&self, ideal: &FractionalIdeal) -> Option<usize> {
        self.entries.iter().position(|e| &e.ideal == ideal)
    }

    pub fn find(&self, ideal: &FractionalIdeal) -> Option<&CatalogEntry> {
        self.position(ideal).map(|i| &self.entries[i])
    }

    pub fn ideals(&self) -> impl Iterator<Item = &FractionalIdeal> {
        self.entries.iter().map(|e| &e.ideal)
    }

    /// The entry `t^{a - a(R/I)} I`.
    pub fn partner(&self, entry: &CatalogEntry) -> Result<&CatalogEntry, CatalogError> {
        if self.find(&entry.ideal) != Some(entry) {
            return Err(CatalogError::NotInCatalog(entry.ideal.to_string()));
        }
        let shifted = entry.ideal.shift(self.a_invariant() - entry.a_quotient);
        let partner = self
            .find(&shifted)
            .ok_or_else(|| CatalogError::InvariantViolated(format!("{shifted} missing")))?;
        invariant(
            partner.a_quotient == 2 * self.a_invariant() - entry.a_quotient
                && partner.gap == entry.gap
                && partner.side == entry.side.flip(),
            || format!("{} and {} are not partners", entry.ideal, partner.ideal),
        )?;
        Ok(partner)
    }

    /// Groups the entries into classes of ideals equal up to a shift.
    pub fn iso_classes(&self) -> Result<Vec<IsoClass>, CatalogError> {
        let reach = 2 * self.a_invariant() + 1;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, entry) in self.entries.iter().enumerate() {
            let home = classes.iter_mut().find(|class| {
                let rep = &self.entries[class[0]].ideal;
                rep.shift_to(&entry.ideal).is_some_and(|l| {
                    assert!(l.abs() <= reach, "shift {l} outside ±{reach}");
                    true
                })
            });
            match home {
                Some(class) => class.push(i),
                None => classes.push(vec![i]),
            }
        }

        invariant(2 * classes.len() as i64 == self.semigroup.conductor(), || {
            format!("{} classes for conductor {}", classes.len(), self.semigroup.conductor())
        })?;
        classes
            .into_iter()
            .map(|class| {
                let [b, u] = class[..] else {
                    return Err(CatalogError::InvariantViolated(format!(
                        "class of size {}",
                        class.len()
                    )));
                };
                let (below, above) = (&self.entries[b], &self.entries[u]);
                invariant(
                    below.side == Side::Below && above.side == Side::Above && below.gap == above.gap,
                    || format!("{} and {} do not pair up", below.ideal, above.ideal),
                )?;
                Ok(IsoClass {
                    gap: below.gap,
                    below: below.clone(),
                    above: above.clone(),
                })
            })
            .collect()
    }
}
