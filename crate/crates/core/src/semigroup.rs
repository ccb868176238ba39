//! Numerical semigroups given by generators.
//!
//! A numerical semigroup `H` is an additive submonoid of the non-negative
//! integers with finite complement. Everything here is computed once, at
//! construction, from an additive sieve; afterwards the value is immutable
//! and cheap to clone (the tables live behind an `Arc`).

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Largest sieve window we are willing to allocate.
pub const MAX_SIEVE: i64 = 1 << 26;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("no generators given")]
    EmptyGenerators,
    #[error("generator {0} is not positive")]
    NonPositiveGenerator(i64),
    #[error("generators {0:?} have gcd {1}, expected 1")]
    GcdNotOne(Vec<i64>, i64),
    #[error("sieve bound for generators {0:?} exceeds {MAX_SIEVE}")]
    SieveOverflow(Vec<i64>),
    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),
}

#[derive(Debug)]
struct Inner {
    generators: Vec<i64>,
    minimal_generators: Vec<i64>,
    frobenius: i64,
    conductor: i64,
    gaps: Vec<i64>,
    symmetric: bool,
    // membership for 0..conductor
    below_conductor: Vec<bool>,
}

/// A numerical semigroup `H ⊆ N` together with its gap data.
///
/// Equality compares minimal generating systems, so `⟨3,4,6⟩ == ⟨3,4⟩`.
#[derive(Clone)]
pub struct NumericalSemigroup(Arc<Inner>);

pub(crate) fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl NumericalSemigroup {
    /// Builds `⟨generators⟩`. Duplicates and redundant generators are allowed
    /// and removed.
    pub fn new(generators: &[i64]) -> Result<Self, SemigroupError> {
        if generators.is_empty() {
            return Err(SemigroupError::EmptyGenerators);
        }
        if let Some(&g) = generators.iter().find(|&&g| g < 1) {
            return Err(SemigroupError::NonPositiveGenerator(g));
        }
        let mut gens = generators.to_vec();
        gens.sort_unstable();
        gens.dedup();

        let g = gens.iter().fold(0, |acc, &x| gcd(acc, x));
        if g != 1 {
            return Err(SemigroupError::GcdNotOne(gens, g));
        }

        let min_gen = gens[0];
        let max_gen = *gens.last().unwrap();
        let bound = min_gen
            .checked_mul(max_gen)
            .and_then(|p| p.checked_add(max_gen))
            .filter(|&b| b <= MAX_SIEVE)
            .ok_or_else(|| SemigroupError::SieveOverflow(gens.clone()))?;

        let minimal = minimal_subsystem(&gens);
        let sieve = additive_sieve(&minimal, bound as usize);

        let frobenius = sieve
            .iter()
            .rposition(|&m| !m)
            .map_or(-1, |i| i as i64);
        let conductor = frobenius + 1;
        // A run of `min_gen` consecutive members after the Frobenius number
        // means every larger integer is a member.
        assert!(
            bound - frobenius >= min_gen,
            "sieve window too small to certify the conductor"
        );

        let below_conductor = sieve[..conductor as usize].to_vec();
        let gaps: Vec<i64> = (0..conductor)
            .filter(|&n| !below_conductor[n as usize])
            .collect();
        let members_below = conductor as usize - gaps.len();
        let symmetric = members_below == gaps.len();

        let inner = Inner {
            generators: gens,
            minimal_generators: minimal,
            frobenius,
            conductor,
            gaps,
            symmetric,
            below_conductor,
        };
        let h = NumericalSemigroup(Arc::new(inner));
        assert_eq!(
            h.0.symmetric,
            h.is_symmetric_pointwise(),
            "counting and pointwise symmetry disagree for {h}"
        );
        Ok(h)
    }

    /// The semigroup `N` itself (`⟨1⟩`).
    pub fn naturals() -> Self {
        Self::new(&[1]).expect("⟨1⟩ is a numerical semigroup")
    }

    /// The sorted, deduplicated input system.
    pub fn generators(&self) -> &[i64] {
        &self.0.generators
    }

    pub fn minimal_generators(&self) -> &[i64] {
        &self.0.minimal_generators
    }

    /// Smallest positive member.
    pub fn multiplicity(&self) -> i64 {
        self.0.minimal_generators[0]
    }

    pub fn max_generator(&self) -> i64 {
        *self.0.minimal_generators.last().unwrap()
    }

    /// `max(Z \ H)`, which is `-1` for `H = N`.
    pub fn frobenius(&self) -> i64 {
        self.0.frobenius
    }

    pub fn conductor(&self) -> i64 {
        self.0.conductor
    }

    pub fn gaps(&self) -> &[i64] {
        &self.0.gaps
    }

    pub fn genus(&self) -> usize {
        self.0.gaps.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.0.conductor == 0
    }

    pub fn contains(&self, n: i64) -> bool {
        if n < 0 {
            false
        } else if n >= self.0.conductor {
            true
        } else {
            self.0.below_conductor[n as usize]
        }
    }

    /// Members of `H` in `[0, bound]`, ascending.
    pub fn members_up_to(&self, bound: i64) -> impl Iterator<Item = i64> + '_ {
        (0..=bound).filter(move |&n| self.contains(n))
    }

    /// The Apéry set of `n`: entry `r` is the least member congruent to `r`
    /// modulo `n`.
    pub fn apery_set(&self, n: i64) -> Result<Vec<i64>, SemigroupError> {
        if n <= 0 || !self.contains(n) {
            return Err(SemigroupError::NotAMember(n));
        }
        let mut apery = vec![-1; n as usize];
        let mut missing = n;
        let mut w = 0;
        while missing > 0 {
            let r = (w % n) as usize;
            if apery[r] < 0 && self.contains(w) {
                apery[r] = w;
                missing -= 1;
            }
            w += 1;
        }
        Ok(apery)
    }

    /// Symmetry in counting form: as many members below the conductor as
    /// there are gaps. Equivalent to `k[H]` being Gorenstein.
    pub fn is_symmetric(&self) -> bool {
        self.0.symmetric
    }

    /// Symmetry in pointwise form: `z ∈ H` xor `f - z ∈ H` for `0 ≤ z ≤ f`.
    pub fn is_symmetric_pointwise(&self) -> bool {
        let f = self.0.frobenius;
        (0..=f).all(|z| self.contains(z) != self.contains(f - z))
    }

    /// Integers `z ∉ H` with `z + h ∈ H` for every positive member `h`.
    /// For `H = N` this is `{-1}`.
    pub fn pseudo_frobenius(&self) -> Vec<i64> {
        if self.is_naturals() {
            return vec![-1];
        }
        self.0
            .gaps
            .iter()
            .copied()
            .filter(|&z| {
                self.0
                    .minimal_generators
                    .iter()
                    .all(|&g| self.contains(z + g))
            })
            .collect()
    }

    /// Cohen-Macaulay type of `k[H]`.
    pub fn cm_type(&self) -> usize {
        self.pseudo_frobenius().len()
    }

    pub(crate) fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || self.0.minimal_generators == other.0.minimal_generators
    }
}

impl PartialEq for NumericalSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

impl Eq for NumericalSemigroup {}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("NumericalSemigroup")
            .field("minimal_generators", &self.0.minimal_generators)
            .field("frobenius", &self.0.frobenius)
            .field("symmetric", &self.0.symmetric)
            .finish()
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨")?;
        for (i, g) in self.0.minimal_generators.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, "⟩")
    }
}

/// Drops every generator that is a sum of smaller ones. `gens` must be sorted
/// and deduplicated.
fn minimal_subsystem(gens: &[i64]) -> Vec<i64> {
    let max = *gens.last().unwrap() as usize;
    let mut reachable = vec![false; max + 1];
    reachable[0] = true;
    let mut minimal = Vec::new();
    for &g in gens {
        let g = g as usize;
        if reachable[g] {
            continue;
        }
        minimal.push(g as i64);
        for n in g..=max {
            if reachable[n - g] {
                reachable[n] = true;
            }
        }
    }
    minimal
}

fn additive_sieve(gens: &[i64], bound: usize) -> Vec<bool> {
    let mut member = vec![false; bound + 1];
    member[0] = true;
    for n in 1..=bound {
        member[n] = gens
            .iter()
            .any(|&g| g as usize <= n && member[n - g as usize]);
    }
    member
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(gens: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(gens).unwrap()
    }

    #[test]
    fn three_four() {
        let s = h(&[3, 4]);
        assert_eq!(s.minimal_generators(), &[3, 4]);
        assert_eq!(s.frobenius(), 5);
        assert_eq!(s.conductor(), 6);
        assert_eq!(s.gaps(), &[1, 2, 5]);
        assert!(s.is_symmetric());
    }

    #[test]
    fn naturals_has_no_gaps() {
        let s = h(&[1]);
        assert_eq!(s.minimal_generators(), &[1]);
        assert_eq!(s.frobenius(), -1);
        assert_eq!(s.conductor(), 0);
        assert!(s.gaps().is_empty());
        assert!(s.is_symmetric());
        assert!(s.is_naturals());
        assert_eq!(s, NumericalSemigroup::naturals());
    }

    #[test]
    fn four_six_seven() {
        let s = h(&[4, 6, 7]);
        assert_eq!(s.frobenius(), 9);
        assert_eq!(s.conductor(), 10);
        assert_eq!(s.gaps(), &[1, 2, 3, 5, 9]);
        assert!(s.is_symmetric());
    }

    #[test]
    fn redundant_and_duplicate_generators() {
        let s = h(&[6, 3, 4, 4, 8]);
        assert_eq!(s.generators(), &[3, 4, 6, 8]);
        assert_eq!(s.minimal_generators(), &[3, 4]);
        assert_eq!(s, h(&[3, 4]));
        assert_eq!(h(&[2, 3, 1]).minimal_generators(), &[1]);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            NumericalSemigroup::new(&[]).unwrap_err(),
            SemigroupError::EmptyGenerators
        );
        assert_eq!(
            NumericalSemigroup::new(&[3, 0]).unwrap_err(),
            SemigroupError::NonPositiveGenerator(0)
        );
        assert_eq!(
            NumericalSemigroup::new(&[4, -2]).unwrap_err(),
            SemigroupError::NonPositiveGenerator(-2)
        );
        assert_eq!(
            NumericalSemigroup::new(&[4, 6]).unwrap_err(),
            SemigroupError::GcdNotOne(vec![4, 6], 2)
        );
        assert!(matches!(
            NumericalSemigroup::new(&[1 << 20, (1 << 20) + 1]),
            Err(SemigroupError::SieveOverflow(_))
        ));
        assert!(matches!(
            NumericalSemigroup::new(&[i64::MAX - 1, i64::MAX]),
            Err(SemigroupError::SieveOverflow(_))
        ));
    }

    #[test]
    fn membership() {
        let s = h(&[3, 4]);
        assert!(!s.contains(5));
        assert!(s.contains(0));
        assert!(!s.contains(-3));
        assert!(s.contains(1000));
        assert!(!h(&[4, 6, 7]).contains(9));
    }

    #[test]
    fn apery() {
        assert_eq!(h(&[3, 4]).apery_set(3).unwrap(), vec![0, 4, 8]);
        assert_eq!(h(&[1]).apery_set(1).unwrap(), vec![0]);
        assert_eq!(h(&[2, 5]).apery_set(2).unwrap(), vec![0, 5]);
        assert_eq!(
            h(&[3, 4]).apery_set(5),
            Err(SemigroupError::NotAMember(5))
        );
        assert_eq!(h(&[3, 4]).apery_set(0), Err(SemigroupError::NotAMember(0)));
    }

    #[test]
    fn symmetry() {
        assert!(h(&[3, 4]).is_symmetric());
        assert!(h(&[1]).is_symmetric());
        let s = h(&[3, 4, 5]);
        assert_eq!(s.gaps(), &[1, 2]);
        assert!(!s.is_symmetric());
        assert!(!s.is_symmetric_pointwise());
    }

    #[test]
    fn pseudo_frobenius_numbers() {
        assert_eq!(h(&[3, 4]).pseudo_frobenius(), vec![5]);
        assert_eq!(h(&[3, 4, 5]).pseudo_frobenius(), vec![1, 2]);
        assert_eq!(h(&[1]).pseudo_frobenius(), vec![-1]);
        assert_eq!(h(&[1]).cm_type(), 1);
    }
}
