//! Gluings of numerical semigroups and the three-generated symmetric case.
//!
//! For `d1 ∈ H2` and `d2 ∈ H1`, neither a minimal generator, with
//! `gcd(d1, d2) = 1`, the gluing is `⟨d1·H1, d2·H2⟩`. Gluing a two-generated
//! `⟨a, b⟩` with `N` along `d` and `c` gives `⟨da, db, c⟩`, a complete
//! intersection `k[X,Y,Z]/(X^b - Y^a, Z^d - X^m Y^n)` with `c = am + bn`,
//! whose a-invariant is `d(ab - a - b) + (d - 1)c`.

use thiserror::Error;

use crate::catalog::{build_catalog, CatalogError};
use crate::semigroup::{gcd, NumericalSemigroup, SemigroupError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GluingError {
    #[error("d1 = {0} is not in H2")]
    D1NotInH2(i64),
    #[error("d2 = {0} is not in H1")]
    D2NotInH1(i64),
    #[error("{d} is a minimal generator of {factor}")]
    DIsMinimalGenerator { d: i64, factor: NumericalSemigroup },
    #[error("gcd({0}, {1}) != 1")]
    NotCoprime(i64, i64),
    #[error("a = {a} and b = {b} must be coprime integers >= 2")]
    BadPair { a: i64, b: i64 },
    #[error("c = {0} must be a positive member of ⟨a, b⟩ other than a and b")]
    BadC(i64),
    #[error("d = {0} must exceed 1")]
    DTooSmall(i64),
    #[error("internal error: {0}")]
    InvariantViolated(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluingSpec {
    pub h1: NumericalSemigroup,
    pub h2: NumericalSemigroup,
    pub d1: i64,
    pub d2: i64,
    pub glued: NumericalSemigroup,
}

/// Glues `h1` and `h2` into `⟨d1·h1, d2·h2⟩`.
pub fn glue(
    h1: &NumericalSemigroup,
    h2: &NumericalSemigroup,
    d1: i64,
    d2: i64,
) -> Result<GluingSpec, GluingError> {
    if d1 <= 0 || !h2.contains(d1) {
        return Err(GluingError::D1NotInH2(d1));
    }
    if d2 <= 0 || !h1.contains(d2) {
        return Err(GluingError::D2NotInH1(d2));
    }
    if h2.minimal_generators().contains(&d1) {
        return Err(GluingError::DIsMinimalGenerator {
            d: d1,
            factor: h2.clone(),
        });
    }
    if h1.minimal_generators().contains(&d2) {
        return Err(GluingError::DIsMinimalGenerator {
            d: d2,
            factor: h1.clone(),
        });
    }
    if gcd(d1, d2) != 1 {
        return Err(GluingError::NotCoprime(d1, d2));
    }
    let gens: Vec<i64> = h1
        .minimal_generators()
        .iter()
        .map(|&a| d1 * a)
        .chain(h2.minimal_generators().iter().map(|&b| d2 * b))
        .collect();
    let glued = NumericalSemigroup::new(&gens)?;
    Ok(GluingSpec {
        h1: h1.clone(),
        h2: h2.clone(),
        d1,
        d2,
        glued,
    })
}

/// The gluing `⟨d·⟨a,b⟩, c·N⟩ = ⟨da, db, c⟩`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThreeGenSymmetric {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
    /// `c = a·m + b·n` with `0 <= n < a`.
    pub presentation_m: i64,
    pub presentation_n: i64,
    pub a_invariant: i64,
    pub predicted_count: i64,
    pub semigroup: NumericalSemigroup,
}

/// Predicted against counted catalog size.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CountComparison {
    pub predicted: i64,
    pub actual: i64,
}

impl CountComparison {
    pub fn holds(&self) -> bool {
        self.predicted == self.actual
    }
}

pub fn three_gen_symmetric(a: i64, b: i64, c: i64, d: i64) -> Result<ThreeGenSymmetric, GluingError> {
    if a < 2 || b < 2 || a == b || gcd(a, b) != 1 {
        return Err(GluingError::BadPair { a, b });
    }
    let h1 = NumericalSemigroup::new(&[a, b])?;
    if c <= 0 || c == a || c == b || !h1.contains(c) {
        return Err(GluingError::BadC(c));
    }
    if d <= 1 {
        return Err(GluingError::DTooSmall(d));
    }
    if gcd(c, d) != 1 {
        return Err(GluingError::NotCoprime(c, d));
    }

    let n = (0..a)
        .find(|&n| c - b * n >= 0 && (c - b * n) % a == 0)
        .ok_or_else(|| GluingError::InvariantViolated(format!("no presentation of {c}")))?;
    let m = (c - b * n) / a;

    let spec = glue(&h1, &NumericalSemigroup::naturals(), d, c)?;
    let semigroup = spec.glued;
    let a_invariant = d * (a * b - a - b) + (d - 1) * c;
    let predicted_count = a_invariant + 1;
    if !semigroup.is_symmetric() {
        return Err(GluingError::InvariantViolated(format!("{semigroup} is not symmetric")));
    }
    if a_invariant != semigroup.frobenius() || predicted_count != semigroup.conductor() {
        return Err(GluingError::InvariantViolated(format!(
            "a-invariant {a_invariant} but f({semigroup}) = {}",
            semigroup.frobenius()
        )));
    }
    Ok(ThreeGenSymmetric {
        a,
        b,
        c,
        d,
        presentation_m: m,
        presentation_n: n,
        a_invariant,
        predicted_count,
        semigroup,
    })
}

impl ThreeGenSymmetric {
    /// `k[X,Y,Z]/(X^b - Y^a, Z^d - X^m Y^n)` with the numbers filled in.
    pub fn presentation(&self) -> String {
        format!(
            "k[X,Y,Z]/(X^{} - Y^{}, Z^{} - X^{} Y^{})",
            self.b, self.a, self.d, self.presentation_m, self.presentation_n
        )
    }

    /// Compares the closed-form count with the size of the built catalog.
    pub fn predicted_vs_actual(&self) -> Result<CountComparison, CatalogError> {
        let catalog = build_catalog(&self.semigroup)?;
        Ok(CountComparison {
            predicted: self.predicted_count,
            actual: catalog.len() as i64,
        })
    }
}
