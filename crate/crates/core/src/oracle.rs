//! Independent brute-force oracles.
//!
//! Everything here works on explicit finite word sets with direct string
//! reasoning — no automata — so the oracles stay independent of the
//! implementation paths they validate. They are deliberately unoptimized;
//! exactness at desk scale is the only goal.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::language::Language;

/// All factorizations of `word` into words of X.
#[derive(Debug, Clone)]
pub struct FactorizationSet {
    pub word: Word,
    pub factorizations: Vec<Vec<Word>>,
}

fn finite_words(x: &Language) -> Result<Arc<BTreeSet<Word>>> {
    x.words().ok_or(Error::NotFinite)
}

/// Dynamic programming over positions: every way to split `w` into X-words.
pub fn brute_factorizations(x: &Language, w: &Word) -> Result<FactorizationSet> {
    let words = finite_words(x)?;
    let factorizations = factorize(&words, w);
    Ok(FactorizationSet { word: w.clone(), factorizations })
}

fn factorize(words: &BTreeSet<Word>, w: &Word) -> Vec<Vec<Word>> {
    let n = w.len();
    // starts[i] = factorizations of w[..i]
    let mut table: Vec<Vec<Vec<Word>>> = vec![Vec::new(); n + 1];
    table[0].push(Vec::new());
    for i in 1..=n {
        let mut here: Vec<Vec<Word>> = Vec::new();
        for x in words.iter() {
            let l = x.len();
            if l == 0 || l > i {
                continue;
            }
            if &w.slice(i - l, i) == x && !table[i - l].is_empty() {
                for f in &table[i - l] {
                    let mut g = f.clone();
                    g.push(x.clone());
                    here.push(g);
                }
            }
        }
        table[i] = here;
    }
    table.pop().unwrap()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BruteCodeVerdict {
    CodeUpToBound,
    NotCode { witness: Word },
}

/// Searches all words of length ≤ `maxlen` composable from X for a double
/// factorization. Only a falsifier (or a bounded certificate) — the exact
/// test lives in [`crate::codes`].
pub fn brute_is_code(x: &Language, maxlen: usize) -> Result<BruteCodeVerdict> {
    let words = finite_words(x)?;
    // breadth-first over X* up to maxlen, counting factorization multiplicity
    let mut frontier: BTreeSet<Word> = words.iter().filter(|w| !w.is_empty()).cloned().collect();
    let mut seen: BTreeSet<Word> = frontier.clone();
    while !frontier.is_empty() {
        let mut next: BTreeSet<Word> = BTreeSet::new();
        for w in &frontier {
            if factorize(&words, w).len() >= 2 {
                return Ok(BruteCodeVerdict::NotCode { witness: w.clone() });
            }
            for x_w in words.iter() {
                if x_w.is_empty() {
                    continue;
                }
                let cat = w.concat(x_w);
                if cat.len() <= maxlen && !seen.contains(&cat) {
                    seen.insert(cat.clone());
                    next.insert(cat);
                }
            }
        }
        frontier = next;
    }
    Ok(BruteCodeVerdict::CodeUpToBound)
}

/// One alternating factorization u₁…uₙ of a word on (X, Y): each uᵢ in X
/// implies uᵢ₊₁ in Y and vice versa (a part in X ∩ Y constrains its
/// successor to X ∩ Y).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AltFactorization {
    pub parts: Vec<Word>,
    /// Memberships of the first part: (in X, in Y).
    pub start_sets: (bool, bool),
    /// Memberships of the last part.
    pub end_sets: (bool, bool),
}

impl AltFactorization {
    /// (start ∈ X?, end ∈ X?) signatures this factorization admits.
    pub fn signatures(&self) -> Vec<(bool, bool)> {
        let mut sigs = Vec::new();
        for s in [true, false] {
            for e in [true, false] {
                let s_ok = if s { self.start_sets.0 } else { self.start_sets.1 };
                let e_ok = if e { self.end_sets.0 } else { self.end_sets.1 };
                if s_ok && e_ok {
                    sigs.push((s, e));
                }
            }
        }
        sigs
    }
}

#[derive(Debug, Clone)]
pub struct AltFactorizationReport {
    pub word: Word,
    pub factorizations: Vec<AltFactorization>,
    /// Two distinct factorizations sharing a (start, end) signature.
    pub similar_pair: Option<(usize, usize)>,
}

/// Enumerates every alternating factorization (length ≥ 2) of `w` on (X, Y)
/// and looks for two different similar ones.
pub fn brute_alt_factorizations(
    x: &Language,
    y: &Language,
    w: &Word,
) -> Result<AltFactorizationReport> {
    let xs = finite_words(x)?;
    let ys = finite_words(y)?;
    let pool: BTreeSet<Word> = xs.union(&ys).cloned().collect();
    let mut found: Vec<AltFactorization> = Vec::new();

    fn go(
        xs: &BTreeSet<Word>,
        ys: &BTreeSet<Word>,
        pool: &BTreeSet<Word>,
        w: &Word,
        pos: usize,
        parts: &mut Vec<Word>,
        out: &mut Vec<AltFactorization>,
    ) {
        if pos == w.len() {
            if parts.len() >= 2 {
                let first = &parts[0];
                let last = parts.last().unwrap();
                out.push(AltFactorization {
                    parts: parts.clone(),
                    start_sets: (xs.contains(first), ys.contains(first)),
                    end_sets: (xs.contains(last), ys.contains(last)),
                });
            }
            return;
        }
        let constraint = parts.last().map(|prev| (xs.contains(prev), ys.contains(prev)));
        for cand in pool.iter() {
            let l = cand.len();
            if l == 0 || pos + l > w.len() || &w.slice(pos, pos + l) != cand {
                continue;
            }
            if let Some((prev_x, prev_y)) = constraint {
                // u_i ∈ X ⇒ u_{i+1} ∈ Y, and u_i ∈ Y ⇒ u_{i+1} ∈ X
                if prev_x && !ys.contains(cand) {
                    continue;
                }
                if prev_y && !xs.contains(cand) {
                    continue;
                }
            }
            parts.push(cand.clone());
            go(xs, ys, pool, w, pos + l, parts, out);
            parts.pop();
        }
    }

    let mut parts = Vec::new();
    go(&xs, &ys, &pool, w, 0, &mut parts, &mut found);

    let mut similar_pair = None;
    'outer: for i in 0..found.len() {
        for j in i + 1..found.len() {
            let si = found[i].signatures();
            if found[j].signatures().iter().any(|s| si.contains(s)) {
                similar_pair = Some((i, j));
                break 'outer;
            }
        }
    }
    Ok(AltFactorizationReport { word: w.clone(), factorizations: found, similar_pair })
}

/// Exhaustive search for all decompositions Z = XY with X a prefix code and
/// Y a suffix code. Complete for finite Z: any such pair is recovered from
/// the (unique) split of each z into its X-part and Y-part.
pub fn brute_sai_decompositions(z: &Language) -> Result<Vec<(Language, Language)>> {
    let words = finite_words(z)?;
    if words.iter().any(|w| w.is_empty()) {
        return Err(Error::EpsilonInCode);
    }
    if words.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    if words.len() > 16 {
        return Err(Error::TooLarge(format!(
            "brute_sai_decompositions handles at most 16 words, got {}",
            words.len()
        )));
    }
    let zs: Vec<Word> = words.iter().cloned().collect();
    let mut results: BTreeSet<(Vec<Word>, Vec<Word>)> = BTreeSet::new();

    // Route 1: split-function enumeration with incremental pruning.
    fn compatible_prefix(set: &BTreeSet<Word>, w: &Word) -> bool {
        set.iter().all(|v| v == w || (!v.is_proper_prefix_of(w) && !w.is_proper_prefix_of(v)))
    }
    fn compatible_suffix(set: &BTreeSet<Word>, w: &Word) -> bool {
        set.iter().all(|v| v == w || (!v.is_proper_suffix_of(w) && !w.is_proper_suffix_of(v)))
    }
    fn go(
        zs: &[Word],
        all: &BTreeSet<Word>,
        i: usize,
        xs: &mut BTreeSet<Word>,
        ys: &mut BTreeSet<Word>,
        out: &mut BTreeSet<(Vec<Word>, Vec<Word>)>,
    ) {
        if i == zs.len() {
            // product must be exactly Z
            for x in xs.iter() {
                for y in ys.iter() {
                    if !all.contains(&x.concat(y)) {
                        return;
                    }
                }
            }
            out.insert((xs.iter().cloned().collect(), ys.iter().cloned().collect()));
            return;
        }
        let z = &zs[i];
        for cut in 1..z.len() {
            let x = z.prefix(cut);
            let y = z.suffix_from(cut);
            if !compatible_prefix(xs, &x) || !compatible_suffix(ys, &y) {
                continue;
            }
            let nx = xs.insert(x.clone());
            let ny = ys.insert(y.clone());
            go(zs, all, i + 1, xs, ys, out);
            if nx {
                xs.remove(&x);
            }
            if ny {
                ys.remove(&y);
            }
        }
    }
    let mut xs = BTreeSet::new();
    let mut ys = BTreeSet::new();
    go(&zs, &words, 0, &mut xs, &mut ys, &mut results);

    // Route 2 (independent cross-check shape): candidate Y from quotients by
    // prefixes of minimal-length words, X from quotient by a Y-word.
    let min_len = zs.iter().map(|w| w.len()).min().unwrap();
    for w in zs.iter().filter(|w| w.len() == min_len) {
        for cut in 1..w.len() {
            let u = w.prefix(cut);
            let ys2: BTreeSet<Word> = zs
                .iter()
                .filter(|z_w| u.is_prefix_of(z_w))
                .map(|z_w| z_w.suffix_from(cut))
                .collect();
            if ys2.is_empty() || !is_suffix_code_set(&ys2) {
                continue;
            }
            let y = ys2.iter().next().unwrap().clone(); // shortest by word order
            let xs2: BTreeSet<Word> = zs
                .iter()
                .filter(|z_w| y.is_proper_suffix_of(z_w))
                .map(|z_w| z_w.prefix(z_w.len() - y.len()))
                .collect();
            if xs2.is_empty() || !is_prefix_code_set(&xs2) {
                continue;
            }
            let prod: BTreeSet<Word> = xs2
                .iter()
                .flat_map(|x| ys2.iter().map(move |y2| x.concat(y2)))
                .collect();
            if prod == *words {
                results.insert((xs2.into_iter().collect(), ys2.into_iter().collect()));
            }
        }
    }

    let alphabet = z.alphabet();
    results
        .into_iter()
        .map(|(xs, ys)| {
            Ok((
                Language::from_words(alphabet, &xs)?,
                Language::from_words(alphabet, &ys)?,
            ))
        })
        .collect()
}

/// Definition-level prefix-code check on a finite set.
pub fn is_prefix_code_set(words: &BTreeSet<Word>) -> bool {
    words
        .iter()
        .all(|u| !u.is_empty() && words.iter().all(|v| !u.is_proper_prefix_of(v)))
}

/// Definition-level suffix-code check on a finite set.
pub fn is_suffix_code_set(words: &BTreeSet<Word>) -> bool {
    words
        .iter()
        .all(|u| !u.is_empty() && words.iter().all(|v| !u.is_proper_suffix_of(v)))
}

/// Definition-level infix-family flags on a finite set (pairwise checks).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DefInfixFlags {
    pub p_infix: bool,
    pub s_infix: bool,
    pub infix: bool,
    pub p_subinfix: bool,
    pub s_subinfix: bool,
    pub subinfix: bool,
    pub hypercode: bool,
}

pub fn def_infix_family(words: &BTreeSet<Word>) -> DefInfixFlags {
    let mut f = DefInfixFlags {
        p_infix: true,
        s_infix: true,
        infix: true,
        p_subinfix: true,
        s_subinfix: true,
        subinfix: true,
        hypercode: true,
    };
    for v in words {
        // proper prefixes / suffixes / infixes of v
        let mut proper_prefixes = Vec::new();
        let mut proper_suffixes = Vec::new();
        let mut proper_infixes = Vec::new();
        for i in 0..=v.len() {
            for j in i..=v.len() {
                if j - i < v.len() {
                    let part = v.slice(i, j);
                    if i == 0 {
                        proper_prefixes.push(part.clone());
                    }
                    if j == v.len() {
                        proper_suffixes.push(part.clone());
                    }
                    proper_infixes.push(part);
                }
            }
        }
        for u in words {
            if proper_prefixes.iter().any(|p| u.is_infix_of(p) && u.len() <= p.len()) {
                f.p_infix = false;
            }
            if proper_suffixes.iter().any(|p| u.is_infix_of(p) && u.len() <= p.len()) {
                f.s_infix = false;
            }
            if proper_infixes.iter().any(|p| u.is_infix_of(p) && u.len() <= p.len()) {
                f.infix = false;
            }
            if proper_prefixes.iter().any(|p| u.is_subword_of(p)) {
                f.p_subinfix = false;
            }
            if proper_suffixes.iter().any(|p| u.is_subword_of(p)) {
                f.s_subinfix = false;
            }
            if proper_infixes.iter().any(|p| u.is_subword_of(p)) {
                f.subinfix = false;
            }
            if u.is_proper_subword_of(v) {
                f.hypercode = false;
            }
        }
    }
    f
}

/// Definition-level product unambiguity: every z ∈ XY from exactly one pair.
pub fn def_unambiguous_product(xs: &BTreeSet<Word>, ys: &BTreeSet<Word>) -> bool {
    let mut seen: BTreeSet<Word> = BTreeSet::new();
    for x in xs {
        for y in ys {
            if !seen.insert(x.concat(y)) {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximalityClass {
    Prefix,
    Suffix,
    Bifix,
}

/// All words of length ≤ `maxlen` outside X whose addition keeps X in the
/// class. Empty output is necessary — not sufficient — for maximality.
pub fn brute_maximality(
    x: &Language,
    class: MaximalityClass,
    maxlen: usize,
) -> Result<Vec<Word>> {
    let words = finite_words(x)?;
    let alphabet = x.alphabet();
    let k = alphabet.len() as u8;
    let mut addable = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
    while let Some(ids) = stack.pop() {
        if ids.len() < maxlen {
            for sym in (0..k).rev() {
                let mut next = ids.clone();
                next.push(sym);
                stack.push(next);
            }
        }
        if ids.is_empty() {
            continue;
        }
        let w = Word::from_ids(alphabet, ids);
        if words.contains(&w) {
            continue;
        }
        let mut bigger = (*words).clone();
        bigger.insert(w.clone());
        let ok = match class {
            MaximalityClass::Prefix => is_prefix_code_set(&bigger),
            MaximalityClass::Suffix => is_suffix_code_set(&bigger),
            MaximalityClass::Bifix => is_prefix_code_set(&bigger) && is_suffix_code_set(&bigger),
        };
        if ok {
            addable.push(w);
        }
    }
    addable.sort();
    Ok(addable)
}
