#![allow(dead_code)]

use std::collections::BTreeMap;

use sgr_core::NumericalSemigroup;

/// Every distinct semigroup whose generators come from a subset of
/// `[2, max_gen]` with at most `max_len` elements, keyed by minimal generators.
pub fn semigroups(max_gen: i64, max_len: usize) -> Vec<NumericalSemigroup> {
    fn rec(
        start: i64,
        max_gen: i64,
        max_len: usize,
        cur: &mut Vec<i64>,
        out: &mut BTreeMap<Vec<i64>, NumericalSemigroup>,
    ) {
        if !cur.is_empty() {
            if let Ok(h) = NumericalSemigroup::new(cur) {
                out.entry(h.minimal_generators().to_vec()).or_insert(h);
            }
        }
        if cur.len() == max_len {
            return;
        }
        for g in start..=max_gen {
            cur.push(g);
            rec(g + 1, max_gen, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = BTreeMap::new();
    rec(2, max_gen, max_len, &mut Vec::new(), &mut out);
    out.into_values().collect()
}

pub fn symmetric_semigroups(max_gen: i64, max_len: usize) -> Vec<NumericalSemigroup> {
    semigroups(max_gen, max_len)
        .into_iter()
        .filter(|h| h.is_symmetric())
        .collect()
}

/// Membership by direct search for a representation `n = Σ x_i a_i`.
pub fn representable(gens: &[i64], n: i64) -> bool {
    if n == 0 {
        return true;
    }
    if n < 0 || gens.is_empty() {
        return false;
    }
    let (g, rest) = (gens[0], &gens[1..]);
    (0..=n / g).any(|k| representable(rest, n - k * g))
}
