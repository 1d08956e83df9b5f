//! Deterministic small-instance sweeps that compare every derived
//! criterion against its definition-level oracle: the quotient-based
//! prefix/suffix tests, the infix-family automaton constructions, and the
//! product-unambiguity criterion. Used by the `oracle-grid` CLI task and by
//! the acceptance suite.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::alphabet::{Alphabet, Word};
use crate::codes;
use crate::error::Result;
use crate::language::Language;
use crate::oracle;

#[derive(Debug, Clone, Default)]
pub struct GridOutcome {
    pub prefix_suffix_checked: usize,
    pub infix_family_checked: usize,
    pub unambiguity_checked: usize,
    pub disagreements: Vec<String>,
}

impl GridOutcome {
    pub fn total_checked(&self) -> usize {
        self.prefix_suffix_checked + self.infix_family_checked + self.unambiguity_checked
    }
}

/// All non-empty words over `alphabet` of length 1..=maxlen, sorted.
pub fn word_pool(alphabet: &Arc<Alphabet>, maxlen: usize) -> Vec<Word> {
    let k = alphabet.len() as u8;
    let mut all: Vec<Word> = Vec::new();
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for ids in &frontier {
            for sym in 0..k {
                let mut n = ids.clone();
                n.push(sym);
                next.push(n);
            }
        }
        all.extend(next.iter().map(|ids| Word::from_ids(alphabet, ids.clone())));
        frontier = next;
    }
    all.sort();
    all
}

/// Calls `visit` on every size-1..=max_size subset of `pool`, striding so
/// that roughly `target` subsets are visited. Returns the visit count.
fn walk_subsets(
    pool: &[Word],
    max_size: usize,
    target: usize,
    mut visit: impl FnMut(&BTreeSet<Word>) -> Result<()>,
) -> Result<usize> {
    let n = pool.len();
    let mut total: usize = 0;
    for s in 1..=max_size.min(n) {
        let mut c: usize = 1;
        for i in 0..s {
            c = c * (n - i) / (i + 1);
        }
        total += c;
    }
    let stride = (total / target.max(1)).max(1);
    let mut counter = 0usize;
    let mut visited = 0usize;
    let mut indices: Vec<usize> = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn rec(
        pool: &[Word],
        max_size: usize,
        start: usize,
        indices: &mut Vec<usize>,
        counter: &mut usize,
        stride: usize,
        visited: &mut usize,
        visit: &mut impl FnMut(&BTreeSet<Word>) -> Result<()>,
    ) -> Result<()> {
        if !indices.is_empty() {
            *counter += 1;
            if (*counter).is_multiple_of(stride) {
                let set: BTreeSet<Word> = indices.iter().map(|&i| pool[i].clone()).collect();
                visit(&set)?;
                *visited += 1;
            }
        }
        if indices.len() == max_size {
            return Ok(());
        }
        for i in start..pool.len() {
            indices.push(i);
            rec(pool, max_size, i + 1, indices, counter, stride, visited, visit)?;
            indices.pop();
        }
        Ok(())
    }
    rec(pool, max_size, 0, &mut indices, &mut counter, stride, &mut visited, &mut visit)?;
    Ok(visited)
}

/// Compares the quotient-based prefix/suffix tests and the infix-family
/// constructions against their definition-level oracles on ≥ `set_target`
/// subsets of the length-≤ `set_word_len` pool.
pub fn validate_set_criteria(
    alphabet: &Arc<Alphabet>,
    max_set_size: usize,
    set_word_len: usize,
    set_target: usize,
    outcome: &mut GridOutcome,
) -> Result<()> {
    let pool = word_pool(alphabet, set_word_len);
    walk_subsets(&pool, max_set_size, set_target, |set| {
        let lang = Language::from_words(alphabet, set.iter())?;
        let p = codes::is_prefix_code(&lang)?;
        let s = codes::is_suffix_code(&lang)?;
        if p != oracle::is_prefix_code_set(set) {
            outcome.disagreements.push(format!("prefix test disagrees on {lang}"));
        }
        if s != oracle::is_suffix_code_set(set) {
            outcome.disagreements.push(format!("suffix test disagrees on {lang}"));
        }
        outcome.prefix_suffix_checked += 2;

        let flags = codes::infix_family(&lang)?;
        let def = oracle::def_infix_family(set);
        let pairs = [
            ("p-infix", flags.p_infix, def.p_infix),
            ("s-infix", flags.s_infix, def.s_infix),
            ("infix", flags.infix, def.infix),
            ("p-subinfix", flags.p_subinfix, def.p_subinfix),
            ("s-subinfix", flags.s_subinfix, def.s_subinfix),
            ("subinfix", flags.subinfix, def.subinfix),
            ("hypercode", flags.hypercode, def.hypercode),
        ];
        for (name, got, want) in pairs {
            if got != want {
                outcome
                    .disagreements
                    .push(format!("{name} disagrees on {lang}: got {got}, oracle {want}"));
            }
        }
        outcome.infix_family_checked += 7;
        Ok(())
    })?;
    Ok(())
}

/// Compares the unambiguity criterion against brute-force pair enumeration
/// on ≥ `pair_target` pairs of subsets of the length-≤ `pair_word_len` pool.
pub fn validate_unambiguity(
    alphabet: &Arc<Alphabet>,
    max_set_size: usize,
    pair_word_len: usize,
    pair_target: usize,
    outcome: &mut GridOutcome,
) -> Result<()> {
    let pool = word_pool(alphabet, pair_word_len);
    // materialize the set list once (small), then stride over the pair square
    let mut sets: Vec<BTreeSet<Word>> = Vec::new();
    walk_subsets(&pool, max_set_size, usize::MAX, |s| {
        sets.push(s.clone());
        Ok(())
    })?;
    let total = sets.len() * sets.len();
    let stride = (total / pair_target.max(1)).max(1);
    let mut idx = 0usize;
    for xs in &sets {
        for ys in &sets {
            idx += 1;
            if !idx.is_multiple_of(stride) {
                continue;
            }
            let x = Language::from_words(alphabet, xs.iter())?;
            let y = Language::from_words(alphabet, ys.iter())?;
            let got = codes::unambiguous_product(&x, &y)?.is_unambiguous();
            let want = oracle::def_unambiguous_product(xs, ys);
            if got != want {
                outcome
                    .disagreements
                    .push(format!("unambiguity disagrees on X={x}, Y={y}"));
            }
            outcome.unambiguity_checked += 1;
        }
    }
    Ok(())
}

/// The default validation sweep: both families at the given targets.
pub fn run_validation_grid(
    alphabet: &Arc<Alphabet>,
    max_set_size: usize,
    set_word_len: usize,
    set_target: usize,
    pair_word_len: usize,
    pair_target: usize,
) -> Result<GridOutcome> {
    let mut outcome = GridOutcome::default();
    validate_set_criteria(alphabet, max_set_size, set_word_len, set_target, &mut outcome)?;
    validate_unambiguity(alphabet, max_set_size, pair_word_len, pair_target, &mut outcome)?;
    Ok(outcome)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_sweep_is_clean() {
        let ab = Alphabet::from_str_symbols("ab").unwrap();
        let outcome = run_validation_grid(&ab, 3, 3, 300, 2, 200).unwrap();
        assert!(outcome.disagreements.is_empty(), "{:?}", outcome.disagreements);
        assert!(outcome.prefix_suffix_checked >= 300);
        assert!(outcome.unambiguity_checked >= 150);
    }

    #[test]
    fn word_pool_is_length_lex_sorted() {
        let ab = Alphabet::from_str_symbols("ab").unwrap();
        let pool = word_pool(&ab, 3);
        assert_eq!(pool.len(), 2 + 4 + 8);
        for pair in pool.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }
}
