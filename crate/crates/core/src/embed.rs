//! Maximality predicates and embedding constructions: maximal
//! prefix/suffix/bifix tests, finite and regular prefix/suffix completion,
//! the bifix indicator and interpretation machinery, bounded bifix
//! completion, and the embedding of prefix/suffix/bifix strong alt-induced
//! codes into maximal ones.

use std::collections::BTreeSet;

use crate::alphabet::Word;
use crate::alt;
use crate::codes;
use crate::error::{Error, Result};
use crate::language::Language;

/// A prefix code is maximal iff it is right-complete: Pref(X) ∪ XA* = A*.
pub fn is_maximal_prefix(x: &Language) -> Result<bool> {
    if !codes::is_prefix_code(x)? {
        return Err(Error::NotPrefixCode);
    }
    let universe = Language::universe(x.alphabet());
    let covered = x.proper_prefixes()?.union(&x.concat(&universe)?)?;
    Ok(covered == universe)
}

/// Dual of [`is_maximal_prefix`]: Suff(X) ∪ A*X = A*.
pub fn is_maximal_suffix(x: &Language) -> Result<bool> {
    if !codes::is_suffix_code(x)? {
        return Err(Error::NotSuffixCode);
    }
    let universe = Language::universe(x.alphabet());
    let covered = x.proper_suffixes()?.union(&universe.concat(x)?)?;
    Ok(covered == universe)
}

/// A thin bifix code is maximal bifix iff it is both a maximal prefix code
/// and a maximal suffix code. Regular codes are always thin.
pub fn is_maximal_bifix(x: &Language) -> Result<bool> {
    if !codes::is_bifix_code(x)? {
        return Err(Error::NotBifixCode);
    }
    if !codes::is_thin(x)? {
        return Err(Error::NotThin);
    }
    Ok(is_maximal_prefix(x)? && is_maximal_suffix(x)?)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CompletionClass {
    Prefix,
    Suffix,
    Bifix,
}

impl CompletionClass {
    pub fn name(&self) -> &'static str {
        match self {
            CompletionClass::Prefix => "prefix",
            CompletionClass::Suffix => "suffix",
            CompletionClass::Bifix => "bifix",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionMethod {
    /// Finite prefix/suffix completion by filling the word tree.
    TreeFill,
    /// Regular completion by the prefix-minimal words of the uncovered set.
    MinWords,
    /// Backtracking search for a finite maximal bifix container.
    BoundedSearch,
    /// A caller-supplied container that passed verification.
    VerifiedCandidate,
}

#[derive(Debug, Clone)]
pub struct CompletionResult {
    pub input: Language,
    pub class: CompletionClass,
    pub container: Language,
    /// Whether the container's maximal word length equals the input's
    /// (`None` when not applicable, e.g. infinite input).
    pub preserved_maxlen: Option<bool>,
    pub method: CompletionMethod,
}

/// Embeds a finite prefix code into a finite maximal one of the same
/// maximal word length, by adding every unused branch of its word tree:
/// container = X ∪ ((Pref(X)·A) \ (Pref(X) ∪ X)).
pub fn complete_prefix_finite(x: &Language) -> Result<CompletionResult> {
    if !codes::is_prefix_code(x)? {
        return Err(Error::NotPrefixCode);
    }
    let words = x.words().ok_or(Error::NotFinite)?;
    let alphabet = x.alphabet();
    let mut prefixes: BTreeSet<Word> = BTreeSet::new();
    for w in words.iter() {
        for cut in 0..w.len() {
            prefixes.insert(w.prefix(cut));
        }
    }
    let mut container: BTreeSet<Word> = (*words).clone();
    for p in &prefixes {
        for sym in 0..alphabet.len() as u8 {
            let mut ids = p.ids().to_vec();
            ids.push(sym);
            let w = Word::from_ids(alphabet, ids);
            if !prefixes.contains(&w) && !words.contains(&w) {
                container.insert(w);
            }
        }
    }
    let max_in = words.iter().next_back().map(|w| w.len()).unwrap_or(0);
    let max_out = container.iter().next_back().map(|w| w.len()).unwrap_or(0);
    let container = Language::from_words(alphabet, &container)?;
    debug_assert!(is_maximal_prefix(&container)?);
    Ok(CompletionResult {
        input: x.clone(),
        class: CompletionClass::Prefix,
        container,
        preserved_maxlen: Some(max_in == max_out),
        method: CompletionMethod::TreeFill,
    })
}

/// Embeds a regular prefix code into a regular maximal one: with
/// V = A* \ (Pref(X) ∪ XA*), the prefix-minimal words U = V \ VA⁺ complete
/// X to the maximal prefix code X ∪ U.
pub fn complete_prefix_regular(x: &Language) -> Result<CompletionResult> {
    if !codes::is_prefix_code(x)? {
        return Err(Error::NotPrefixCode);
    }
    let alphabet = x.alphabet();
    let universe = Language::universe(alphabet);
    let a_plus = Language::nonempty_universe(alphabet);
    let covered = x.proper_prefixes()?.union(&x.concat(&universe)?)?;
    let v = covered.complement()?;
    let u = v.difference(&v.concat(&a_plus)?)?;
    let container = x.union(&u)?;
    debug_assert!(is_maximal_prefix(&container)?);
    let preserved_maxlen = match (x.words(), container.words()) {
        (Some(xs), Some(cs)) => {
            let mx = xs.iter().next_back().map(|w| w.len());
            let mc = cs.iter().next_back().map(|w| w.len());
            Some(mx == mc)
        }
        _ => None,
    };
    Ok(CompletionResult {
        input: x.clone(),
        class: CompletionClass::Prefix,
        container,
        preserved_maxlen,
        method: CompletionMethod::MinWords,
    })
}

/// Suffix-side completions, by reversal of the prefix constructions.
pub fn complete_suffix_finite(x: &Language) -> Result<CompletionResult> {
    if !codes::is_suffix_code(x)? {
        return Err(Error::NotSuffixCode);
    }
    let r = complete_prefix_finite(&x.reverse()?)?;
    Ok(CompletionResult {
        input: x.clone(),
        class: CompletionClass::Suffix,
        container: r.container.reverse()?,
        preserved_maxlen: r.preserved_maxlen,
        method: CompletionMethod::TreeFill,
    })
}

pub fn complete_suffix_regular(x: &Language) -> Result<CompletionResult> {
    if !codes::is_suffix_code(x)? {
        return Err(Error::NotSuffixCode);
    }
    let r = complete_prefix_regular(&x.reverse()?)?;
    Ok(CompletionResult {
        input: x.clone(),
        class: CompletionClass::Suffix,
        container: r.container.reverse()?,
        preserved_maxlen: r.preserved_maxlen,
        method: CompletionMethod::MinWords,
    })
}

/// The indicator of a bifix code at one word: F counts occurrences of
/// X-words as infixes of `word` (all positions, with multiplicity), and
/// L = 1 + |word| − F.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndicatorValue {
    pub word: Word,
    pub occurrences: u64,
    pub value: i64,
}

pub fn indicator(x: &Language, w: &Word) -> Result<IndicatorValue> {
    if !codes::is_bifix_code(x)? {
        return Err(Error::NotBifixCode);
    }
    let n = w.len();
    let mut occurrences = 0u64;
    for i in 0..n {
        for j in i + 1..=n {
            if x.contains(&w.slice(i, j)) {
                occurrences += 1;
            }
        }
    }
    Ok(IndicatorValue {
        word: w.clone(),
        occurrences,
        value: 1 + n as i64 - occurrences as i64,
    })
}

/// An interpretation (s, x₁…x_k, p) of a word w = s·x₁…x_k·p, with s a
/// proper suffix of an X-word, each xᵢ ∈ X, and p a proper prefix of an
/// X-word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interpretation {
    pub head: Word,
    pub body: Vec<Word>,
    pub tail: Word,
}

impl Interpretation {
    /// The points of w this interpretation passes by: |s| and every
    /// boundary of the body factorization.
    pub fn boundaries(&self) -> Vec<usize> {
        let mut b = vec![self.head.len()];
        let mut acc = self.head.len();
        for part in &self.body {
            acc += part.len();
            b.push(acc);
        }
        b
    }

    /// Does this interpretation pass by the point (u, v), identified by |u|?
    pub fn passes_point(&self, split: usize) -> bool {
        self.boundaries().contains(&split)
    }
}

/// All interpretations of `w` with respect to the bifix code X. Because X
/// is a code, each (|s|, |p|) split admits at most one body factorization.
pub fn interpretations(x: &Language, w: &Word) -> Result<Vec<Interpretation>> {
    if !codes::is_bifix_code(x)? {
        return Err(Error::NotBifixCode);
    }
    let proper_suffixes = x.proper_suffixes()?;
    let proper_prefixes = x.proper_prefixes()?;
    let n = w.len();
    // in_star[i][j]: w[i..j] ∈ X*
    let star = x.star()?;
    let mut out = Vec::new();
    for s_len in 0..=n {
        if !proper_suffixes.contains(&w.prefix(s_len)) {
            continue;
        }
        for p_start in s_len..=n {
            if !proper_prefixes.contains(&w.suffix_from(p_start)) {
                continue;
            }
            let middle = w.slice(s_len, p_start);
            if !star.contains(&middle) {
                continue;
            }
            let body = unique_factorization(x, &star, &middle);
            out.push(Interpretation {
                head: w.prefix(s_len),
                body,
                tail: w.suffix_from(p_start),
            });
        }
    }
    Ok(out)
}

/// Factorizes a word of X* into X-words; unique because X is a code.
fn unique_factorization(x: &Language, star: &Language, w: &Word) -> Vec<Word> {
    let mut parts = Vec::new();
    let mut pos = 0usize;
    while pos < w.len() {
        let mut cut = pos + 1;
        loop {
            debug_assert!(cut <= w.len());
            if x.contains(&w.slice(pos, cut)) && star.contains(&w.suffix_from(cut)) {
                parts.push(w.slice(pos, cut));
                pos = cut;
                break;
            }
            cut += 1;
        }
    }
    parts
}

/// What the finite-word fullness probe observed.
#[derive(Debug, Clone)]
pub struct FullnessReport {
    pub maxlen: usize,
    /// Number of full words per length 0..=maxlen.
    pub full_counts_by_length: Vec<usize>,
    /// A few longest full words with their interpretation counts.
    pub longest_full: Vec<(Word, usize)>,
    /// A few shortest words that are not full.
    pub non_full_examples: Vec<Word>,
    /// Full words exist at the two longest probed lengths (evidence — not
    /// proof — that the set of full words is infinite).
    pub evidence_of_sufficiency: bool,
}

/// Classifies every word up to `maxlen` as full or not: a word is full when
/// an interpretation passes by each of its points.
pub fn fullness_probe(x: &Language, maxlen: usize) -> Result<FullnessReport> {
    if !codes::is_bifix_code(x)? {
        return Err(Error::NotBifixCode);
    }
    if x.words().is_none() {
        return Err(Error::NotFinite);
    }
    let alphabet = x.alphabet();
    let k = alphabet.len() as u8;
    if (alphabet.len() as f64).powi(maxlen as i32) > 2_000_000.0 {
        return Err(Error::TooLarge("fullness probe word space".into()));
    }
    let mut full_counts = vec![0usize; maxlen + 1];
    let mut longest_full: Vec<(Word, usize)> = Vec::new();
    let mut non_full: Vec<Word> = Vec::new();
    let mut stack: Vec<Vec<u8>> = vec![Vec::new()];
    let mut all_words: Vec<Word> = Vec::new();
    while let Some(ids) = stack.pop() {
        if ids.len() < maxlen {
            for sym in (0..k).rev() {
                let mut next = ids.clone();
                next.push(sym);
                stack.push(next);
            }
        }
        all_words.push(Word::from_ids(alphabet, ids));
    }
    all_words.sort();
    for w in all_words {
        let interps = interpretations(x, &w)?;
        let mut covered = vec![false; w.len() + 1];
        for i in &interps {
            for b in i.boundaries() {
                covered[b] = true;
            }
        }
        if covered.iter().all(|&c| c) {
            full_counts[w.len()] += 1;
            if w.len() + 1 >= maxlen {
                longest_full.push((w.clone(), interps.len()));
            }
        } else if non_full.len() < 8 {
            non_full.push(w);
        }
    }
    let evidence = maxlen >= 2 && full_counts[maxlen] > 0 && full_counts[maxlen - 1] > 0;
    Ok(FullnessReport {
        maxlen,
        full_counts_by_length: full_counts,
        longest_full,
        non_full_examples: non_full,
        evidence_of_sufficiency: evidence,
    })
}

#[derive(Debug, Clone)]
pub enum BifixCompletion {
    Found(CompletionResult),
    NotFoundWithinBound,
}

impl BifixCompletion {
    pub fn container(&self) -> Option<&Language> {
        match self {
            BifixCompletion::Found(r) => Some(&r.container),
            BifixCompletion::NotFoundWithinBound => None,
        }
    }
}

const SEARCH_NODE_BUDGET: u64 = 5_000_000;

/// Searches for a finite maximal bifix code containing X, adding candidate
/// words of length ≤ `maxlen` in length-lex order with backtracking. A leaf
/// is returned only when [`is_maximal_bifix`] certifies true maximality.
///
/// Finite maximal prefix codes satisfy Σ |A|^(−|w|) = 1, so subtrees whose
/// best-possible Kraft sum stays below 1 are pruned exactly.
pub fn complete_bifix_bounded(x: &Language, maxlen: usize) -> Result<BifixCompletion> {
    if !codes::is_bifix_code(x)? {
        return Err(Error::NotBifixCode);
    }
    let words = x.words().ok_or(Error::NotFinite)?;
    let alphabet = x.alphabet();
    let k = alphabet.len();

    if is_maximal_bifix(x)? {
        return Ok(BifixCompletion::Found(CompletionResult {
            input: x.clone(),
            class: CompletionClass::Bifix,
            container: x.clone(),
            preserved_maxlen: Some(true),
            method: CompletionMethod::BoundedSearch,
        }));
    }

    let max_input_len = words.iter().next_back().map(|w| w.len()).unwrap_or(0);
    let scale_len = maxlen.max(max_input_len) as u32;
    let full: u128 = (k as u128)
        .checked_pow(scale_len)
        .ok_or_else(|| Error::TooLarge("kraft scale overflow; reduce the bound".into()))?;
    let value = |w: &Word| -> u128 { full / (k as u128).pow(w.len() as u32) };
    if (k as f64).powi(maxlen as i32) > 2_000_000.0 {
        return Err(Error::TooLarge("candidate word space".into()));
    }

    let compatible = |set: &BTreeSet<Word>, w: &Word| -> bool {
        set.iter().all(|v| {
            v != w
                && !v.is_proper_prefix_of(w)
                && !w.is_proper_prefix_of(v)
                && !v.is_proper_suffix_of(w)
                && !w.is_proper_suffix_of(v)
        })
    };

    // candidate words: length-lex, not in X, bifix-compatible with X
    let mut candidates: Vec<Word> = Vec::new();
    let mut frontier: Vec<Vec<u8>> = vec![Vec::new()];
    for _ in 0..maxlen {
        let mut next = Vec::new();
        for ids in &frontier {
            for sym in 0..k as u8 {
                let mut n = ids.clone();
                n.push(sym);
                next.push(n);
            }
        }
        for ids in &next {
            let w = Word::from_ids(alphabet, ids.clone());
            if !words.contains(&w) && compatible(&words, &w) {
                candidates.push(w);
            }
        }
        frontier = next;
    }
    candidates.sort();

    let base_kraft: u128 = words.iter().map(&value).sum();

    struct Search {
        alphabet: std::sync::Arc<crate::alphabet::Alphabet>,
        full: u128,
        nodes: u64,
    }

    // best Kraft mass any prefix-antichain of `cands` (sorted) can reach
    fn max_prefix_packing(cands: &[&Word], depth: usize, value: &dyn Fn(&Word) -> u128) -> u128 {
        if cands.is_empty() {
            return 0;
        }
        let mut here = 0u128;
        let mut rest = cands;
        if cands[0].len() == depth {
            here = value(cands[0]);
            rest = &cands[1..];
        }
        let mut children = 0u128;
        let mut i = 0usize;
        while i < rest.len() {
            let sym = rest[i].ids()[depth];
            let mut j = i + 1;
            while j < rest.len() && rest[j].ids()[depth] == sym {
                j += 1;
            }
            children += max_prefix_packing(&rest[i..j], depth + 1, value);
            i = j;
        }
        here.max(children)
    }

    impl Search {
        fn run(
            &mut self,
            current: &mut BTreeSet<Word>,
            kraft: u128,
            remaining: &[Word],
            value: &dyn Fn(&Word) -> u128,
            compatible: &dyn Fn(&BTreeSet<Word>, &Word) -> bool,
        ) -> Result<Option<Language>> {
            self.nodes += 1;
            if self.nodes > SEARCH_NODE_BUDGET {
                return Err(Error::SearchBudgetExceeded { limit: SEARCH_NODE_BUDGET });
            }
            if remaining.is_empty() {
                if kraft == self.full {
                    let lang = Language::from_words(&self.alphabet, current.iter())?;
                    if is_maximal_bifix(&lang)? {
                        return Ok(Some(lang));
                    }
                }
                return Ok(None);
            }
            // the packing bound walks a trie, so re-sort in pure symbol
            // order to make prefix-related words adjacent
            let mut by_lex: Vec<&Word> = remaining.iter().collect();
            by_lex.sort_by(|a, b| a.ids().cmp(b.ids()));
            let best_extra = max_prefix_packing(&by_lex, 0, value);
            if kraft + best_extra < self.full {
                return Ok(None);
            }
            for (i, cand) in remaining.iter().enumerate() {
                current.insert(cand.clone());
                let filtered: Vec<Word> = remaining[i + 1..]
                    .iter()
                    .filter(|w| compatible(current, w))
                    .cloned()
                    .collect();
                let found =
                    self.run(current, kraft + value(cand), &filtered, value, compatible)?;
                current.remove(cand);
                if let Some(lang) = found {
                    return Ok(Some(lang));
                }
            }
            Ok(None)
        }
    }

    let mut search = Search { alphabet: std::sync::Arc::clone(alphabet), full, nodes: 0 };
    let mut current: BTreeSet<Word> = (*words).clone();
    let found = search.run(&mut current, base_kraft, &candidates, &value, &compatible)?;
    match found {
        Some(container) => Ok(BifixCompletion::Found(CompletionResult {
            input: x.clone(),
            class: CompletionClass::Bifix,
            container,
            preserved_maxlen: None,
            method: CompletionMethod::BoundedSearch,
        })),
        None => Ok(BifixCompletion::NotFoundWithinBound),
    }
}

/// Evidence that `candidate` is a maximal container of `x` in the class.
#[derive(Debug, Clone)]
pub struct ContainerCheck {
    pub class: CompletionClass,
    pub subset_ok: bool,
    pub class_ok: bool,
    pub maximal_ok: bool,
}

impl ContainerCheck {
    pub fn holds(&self) -> bool {
        self.subset_ok && self.class_ok && self.maximal_ok
    }

    pub fn reason(&self) -> Option<String> {
        if self.holds() {
            return None;
        }
        let mut parts = Vec::new();
        if !self.subset_ok {
            parts.push("input is not contained in the candidate");
        }
        if !self.class_ok {
            parts.push("candidate is not in the class");
        }
        if !self.maximal_ok {
            parts.push("candidate is not maximal in the class");
        }
        Some(parts.join("; "))
    }
}

/// Checks subset(x, candidate) plus the candidate's class membership and
/// maximality. Never errors on a failed conjunct — the report carries it.
pub fn verify_container(
    x: &Language,
    candidate: &Language,
    class: CompletionClass,
) -> Result<ContainerCheck> {
    if x.alphabet() != candidate.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let subset_ok = x.subset_of(candidate)?;
    let (class_ok, maximal_ok) = match class {
        CompletionClass::Prefix => {
            let c = codes::is_prefix_code(candidate).unwrap_or(false);
            (c, c && is_maximal_prefix(candidate)?)
        }
        CompletionClass::Suffix => {
            let c = codes::is_suffix_code(candidate).unwrap_or(false);
            (c, c && is_maximal_suffix(candidate)?)
        }
        CompletionClass::Bifix => {
            let c = codes::is_bifix_code(candidate).unwrap_or(false)
                && codes::is_thin(candidate)?;
            (c, c && is_maximal_bifix(candidate)?)
        }
    };
    Ok(ContainerCheck { class, subset_ok, class_ok, maximal_ok })
}

/// Specialization of [`verify_container`] for the bifix class.
pub fn verify_bifix_container(x: &Language, candidate: &Language) -> Result<ContainerCheck> {
    verify_container(x, candidate, CompletionClass::Bifix)
}

fn maximal_prefix_container(
    x: &Language,
    candidate: Option<&Language>,
) -> Result<(Language, CompletionMethod)> {
    if let Some(cand) = candidate {
        let check = verify_container(x, cand, CompletionClass::Prefix)?;
        if !check.holds() {
            return Err(Error::ClassViolation(format!(
                "prefix candidate rejected: {}",
                check.reason().unwrap_or_default()
            )));
        }
        return Ok((cand.clone(), CompletionMethod::VerifiedCandidate));
    }
    let done = if x.is_finite() {
        complete_prefix_finite(x)?
    } else {
        complete_prefix_regular(x)?
    };
    Ok((done.container, done.method))
}

fn maximal_suffix_container(
    x: &Language,
    candidate: Option<&Language>,
) -> Result<(Language, CompletionMethod)> {
    if let Some(cand) = candidate {
        let check = verify_container(x, cand, CompletionClass::Suffix)?;
        if !check.holds() {
            return Err(Error::ClassViolation(format!(
                "suffix candidate rejected: {}",
                check.reason().unwrap_or_default()
            )));
        }
        return Ok((cand.clone(), CompletionMethod::VerifiedCandidate));
    }
    let done = if x.is_finite() {
        complete_suffix_finite(x)?
    } else {
        complete_suffix_regular(x)?
    };
    Ok((done.container, done.method))
}

fn maximal_bifix_container(
    x: &Language,
    candidate: Option<&Language>,
    bound: usize,
) -> Result<(Language, CompletionMethod)> {
    if let Some(cand) = candidate {
        let check = verify_bifix_container(x, cand)?;
        if !check.holds() {
            return Err(Error::ClassViolation(format!(
                "bifix candidate rejected: {}",
                check.reason().unwrap_or_default()
            )));
        }
        return Ok((cand.clone(), CompletionMethod::VerifiedCandidate));
    }
    if is_maximal_bifix(x)? {
        return Ok((x.clone(), CompletionMethod::BoundedSearch));
    }
    if !x.is_finite() {
        return Err(Error::NotFoundWithinBound);
    }
    match complete_bifix_bounded(x, bound)? {
        BifixCompletion::Found(r) => Ok((r.container, CompletionMethod::BoundedSearch)),
        BifixCompletion::NotFoundWithinBound => Err(Error::NotFoundWithinBound),
    }
}

/// Embeds a prefix (suffix, bifix) strong alt-induced witness (X, Y) into a
/// pair (M_X, M_Y) whose product is a maximal prefix (suffix, bifix) strong
/// alt-induced code containing XY. Candidate containers may be supplied for
/// either side; the bifix side otherwise relies on the bounded search. The
/// output pair is re-verified before it is returned, never trusted from the
/// construction alone.
pub fn embed_strong(
    x: &Language,
    y: &Language,
    class: CompletionClass,
    mx_candidate: Option<&Language>,
    my_candidate: Option<&Language>,
    bound: usize,
) -> Result<(Language, Language)> {
    let subclass = alt::subclass_characterize(x, y)?;
    let in_class = match class {
        CompletionClass::Prefix => subclass.prefix_sai.holds(),
        CompletionClass::Suffix => subclass.suffix_sai.holds(),
        CompletionClass::Bifix => subclass.bifix_sai.holds(),
    };
    if !in_class {
        return Err(Error::ClassViolation(format!(
            "witness is not in the {} strong alt-induced class",
            class.name()
        )));
    }

    let (mx, my) = match class {
        CompletionClass::Prefix => (
            maximal_prefix_container(x, mx_candidate)?.0,
            maximal_bifix_container(y, my_candidate, bound)?.0,
        ),
        CompletionClass::Suffix => (
            maximal_bifix_container(x, mx_candidate, bound)?.0,
            maximal_suffix_container(y, my_candidate)?.0,
        ),
        CompletionClass::Bifix => (
            maximal_bifix_container(x, mx_candidate, bound)?.0,
            maximal_bifix_container(y, my_candidate, bound)?.0,
        ),
    };

    // re-verify the characterization of the maximal class on the output
    let ok = match class {
        CompletionClass::Prefix => is_maximal_prefix(&mx)? && is_maximal_bifix(&my)?,
        CompletionClass::Suffix => is_maximal_bifix(&mx)? && is_maximal_suffix(&my)?,
        CompletionClass::Bifix => is_maximal_bifix(&mx)? && is_maximal_bifix(&my)?,
    };
    let product = mx.concat(&my)?;
    let witness = alt::verify_witness(&mx, &my, &product)?;
    let contains_input = x.concat(y)?.subset_of(&product)?;
    if !(ok && witness.holds() && contains_input) {
        return Err(Error::ClassViolation(
            "constructed containers failed re-verification".into(),
        ));
    }
    Ok((mx, my))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::oracle;
    use std::sync::Arc;

    fn ab() -> Arc<Alphabet> {
        Alphabet::from_str_symbols("ab").unwrap()
    }

    fn lang(words: &[&str]) -> Language {
        Language::from_word_strs(&ab(), words).unwrap()
    }

    fn re(pattern: &str) -> Language {
        Language::from_regex(pattern, &ab()).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(&ab(), s).unwrap()
    }

    #[test]
    fn maximal_prefix_examples() {
        assert!(is_maximal_prefix(&re("a*b")).unwrap());
        assert!(is_maximal_prefix(&lang(&["a", "ba", "bb"])).unwrap());
        assert!(!is_maximal_prefix(&lang(&["aa"])).unwrap());
        assert!(matches!(is_maximal_prefix(&lang(&["a", "ab"])), Err(Error::NotPrefixCode)));
    }

    #[test]
    fn maximal_suffix_examples() {
        assert!(is_maximal_suffix(&lang(&["a", "ab", "bb"])).unwrap());
        assert!(!is_maximal_suffix(&lang(&["aa"])).unwrap());
        let abc = Alphabet::from_str_symbols("abc").unwrap();
        let m = Language::from_word_strs(&abc, ["aa", "ca", "aba", "bba", "cba", "b", "c"]).unwrap();
        assert!(is_maximal_suffix(&m).unwrap());
    }

    #[test]
    fn maximal_bifix_examples() {
        assert!(is_maximal_bifix(&re("b+ab*a")).unwrap());
        assert!(is_maximal_bifix(&re("ba+bb+ab*a(a+b)")).unwrap());
        assert!(!is_maximal_bifix(&lang(&["a", "bb"])).unwrap());
        assert!(is_maximal_bifix(&re("a+ba*ba*b")).unwrap());
        assert!(matches!(is_maximal_bifix(&lang(&["a", "ab"])), Err(Error::NotBifixCode)));
    }

    #[test]
    fn finite_prefix_completion() {
        let r = complete_prefix_finite(&lang(&["a", "ba"])).unwrap();
        assert_eq!(r.container, lang(&["a", "ba", "bb"]));
        assert_eq!(r.preserved_maxlen, Some(true));
        assert_eq!(r.method, CompletionMethod::TreeFill);

        let r = complete_prefix_finite(&lang(&["aa"])).unwrap();
        assert_eq!(r.container, lang(&["aa", "ab", "b"]));
        assert_eq!(r.preserved_maxlen, Some(true));

        let r = complete_prefix_finite(&lang(&["a", "b"])).unwrap();
        assert_eq!(r.container, lang(&["a", "b"]));
    }

    #[test]
    fn regular_prefix_completion() {
        let r = complete_prefix_regular(&re("(aa)*b")).unwrap();
        assert_eq!(r.container, re("a*b"));

        let r = complete_prefix_regular(&lang(&["aa"])).unwrap();
        assert_eq!(r.container, lang(&["aa", "ab", "b"]));

        let fixed = complete_prefix_regular(&re("a*b")).unwrap();
        assert_eq!(fixed.container, re("a*b"));
    }

    #[test]
    fn finite_and_regular_completions_agree() {
        for x in [lang(&["a", "ba"]), lang(&["aa"]), lang(&["aab", "ab", "b"])] {
            let fin = complete_prefix_finite(&x).unwrap().container;
            let reg = complete_prefix_regular(&x).unwrap().container;
            assert_eq!(fin, reg, "input {x}");
        }
    }

    #[test]
    fn suffix_completion_by_reversal() {
        let r = complete_suffix_finite(&lang(&["a", "ab"])).unwrap();
        assert!(is_maximal_suffix(&r.container).unwrap());
        assert!(lang(&["a", "ab"]).subset_of(&r.container).unwrap());

        let y = Language::from_regex("a+ab", &ab()).unwrap();
        let r = complete_suffix_regular(&y).unwrap();
        assert!(is_maximal_suffix(&r.container).unwrap());
    }

    #[test]
    fn completion_against_bounded_oracle() {
        for x in [lang(&["a", "ba"]), lang(&["aa"]), lang(&["aab", "b"])] {
            let fin = complete_prefix_finite(&x).unwrap().container;
            let addable =
                oracle::brute_maximality(&fin, oracle::MaximalityClass::Prefix, 5).unwrap();
            assert!(addable.is_empty(), "container {fin} has addable {addable:?}");
        }
    }

    #[test]
    fn indicator_values() {
        let x = lang(&["b", "aa"]);
        let iv = indicator(&x, &w("aab")).unwrap();
        assert_eq!(iv.occurrences, 2);
        assert_eq!(iv.value, 2);

        let iv = indicator(&x, &Word::epsilon(&ab())).unwrap();
        assert_eq!(iv.occurrences, 0);
        assert_eq!(iv.value, 1);

        // degree lower bound for {a, bb}: max L over the code words is 2
        let x = lang(&["a", "bb"]);
        let l_a = indicator(&x, &w("a")).unwrap().value;
        let l_bb = indicator(&x, &w("bb")).unwrap().value;
        assert_eq!(l_a, 1);
        assert_eq!(l_bb, 2);
    }

    #[test]
    fn interpretation_enumeration() {
        let x = lang(&["a", "b"]);
        let is = interpretations(&x, &w("ab")).unwrap();
        assert_eq!(is.len(), 1);
        assert!(is[0].head.is_empty() && is[0].tail.is_empty());
        assert_eq!(is[0].body, vec![w("a"), w("b")]);

        let x = lang(&["a", "bb"]);
        let is = interpretations(&x, &w("b")).unwrap();
        assert_eq!(is.len(), 2);

        let is = interpretations(&x, &w("ba")).unwrap();
        assert_eq!(is.len(), 1);
        assert_eq!(is[0].head, w("b"));
        assert_eq!(is[0].body, vec![w("a")]);
        assert!(is[0].tail.is_empty());
        assert!(is[0].passes_point(1) && is[0].passes_point(2) && !is[0].passes_point(0));
    }

    #[test]
    fn fullness_probe_reports() {
        // complete code: everything full with one interpretation
        let x = lang(&["a", "b"]);
        let rep = fullness_probe(&x, 4).unwrap();
        assert_eq!(rep.full_counts_by_length, vec![1, 2, 4, 8, 16]);
        assert!(rep.longest_full.iter().all(|(_, c)| *c == 1));
        assert!(rep.evidence_of_sufficiency);

        // {a, bb}: ba and its extensions in ba* are not full
        let x = lang(&["a", "bb"]);
        let rep = fullness_probe(&x, 5).unwrap();
        assert!(rep.non_full_examples.contains(&w("ba")));

        // unary {a}: every aⁿ full, one interpretation
        let a_only = Alphabet::from_str_symbols("a").unwrap();
        let xa = Language::from_word_strs(&a_only, ["a"]).unwrap();
        let rep = fullness_probe(&xa, 4).unwrap();
        assert_eq!(rep.full_counts_by_length, vec![1, 1, 1, 1, 1]);
        assert!(rep.longest_full.iter().all(|(_, c)| *c == 1));
    }

    #[test]
    fn bounded_bifix_completion() {
        let r = complete_bifix_bounded(&lang(&["a"]), 1).unwrap();
        assert_eq!(r.container().unwrap(), &lang(&["a", "b"]));

        let r = complete_bifix_bounded(&lang(&["a", "b"]), 3).unwrap();
        assert_eq!(r.container().unwrap(), &lang(&["a", "b"]));

        for bound in 1..=8 {
            let r = complete_bifix_bounded(&lang(&["a", "bb"]), bound).unwrap();
            assert!(r.container().is_none(), "bound {bound} unexpectedly found a container");
        }
    }

    #[test]
    fn maximal_bifix_cross_checked_against_bounded_oracle() {
        // when the conjunction says maximal, no word up to length 6 is addable
        for fixture in [lang(&["a", "b"]), lang(&["aa", "ab", "ba", "bb"])] {
            assert!(is_maximal_bifix(&fixture).unwrap());
            let addable =
                oracle::brute_maximality(&fixture, oracle::MaximalityClass::Bifix, 6).unwrap();
            assert!(addable.is_empty(), "{fixture} has addable {addable:?}");
        }
    }

    #[test]
    fn container_verification() {
        let check = verify_bifix_container(&lang(&["a", "bb"]), &re("a+ba*b")).unwrap();
        assert!(check.holds());

        let check = verify_bifix_container(&re("ab*ab"), &re("ba+bb+ab*a(a+b)")).unwrap();
        assert!(check.holds());

        let check = verify_bifix_container(&lang(&["a"]), &lang(&["a"])).unwrap();
        assert!(!check.holds());
        assert!(check.reason().unwrap().contains("maximal"));
    }

    #[test]
    fn embed_prefix_class_walkthrough() {
        // X = (aa)*b, Y = ab*ab with the bifix candidate container
        let my = re("ba+bb+ab*a(a+b)");
        let (mx, my_out) =
            embed_strong(&re("(aa)*b"), &re("ab*ab"), CompletionClass::Prefix, None, Some(&my), 6)
                .unwrap();
        assert_eq!(mx, re("a*b"));
        assert_eq!(my_out, my);
    }

    #[test]
    fn embed_suffix_class_walkthrough() {
        let mx = re("b+ab*a");
        let my = re("a+ab+bb");
        let (mx_out, my_out) = embed_strong(
            &re("b+a(bb)*a"),
            &re("a+ab"),
            CompletionClass::Suffix,
            Some(&mx),
            Some(&my),
            6,
        )
        .unwrap();
        assert_eq!(mx_out, mx);
        assert_eq!(my_out, my);
    }

    #[test]
    fn embed_bifix_class_walkthrough() {
        let abc = Alphabet::from_str_symbols("abc").unwrap();
        let x = Language::from_regex("a+c", &abc).unwrap();
        let y = Language::from_regex("c(a+b)*c", &abc).unwrap();
        let mx = Language::from_regex("a+b+c", &abc).unwrap();
        let my = Language::from_regex("a+b+c(a+b)*c", &abc).unwrap();
        let (mx_out, my_out) =
            embed_strong(&x, &y, CompletionClass::Bifix, Some(&mx), Some(&my), 6).unwrap();
        assert_eq!(mx_out, mx);
        assert_eq!(my_out, my);
    }

    #[test]
    fn embed_finite_witness_via_regular_container() {
        // ({a,ba}, {a,bb}): the bifix side has no finite maximal container,
        // but the regular candidate a+ba*b embeds it
        let x = lang(&["a", "ba"]);
        let y = lang(&["a", "bb"]);
        let cand = re("a+ba*b");
        let (mx, my) =
            embed_strong(&x, &y, CompletionClass::Prefix, None, Some(&cand), 6).unwrap();
        assert_eq!(mx, lang(&["a", "ba", "bb"]));
        assert_eq!(my, cand);

        // without a candidate the bounded search reports failure
        assert!(matches!(
            embed_strong(&x, &y, CompletionClass::Prefix, None, None, 6),
            Err(Error::NotFoundWithinBound)
        ));

        // ({a,ba}, {a}): fully finite embedding
        let (mx, my) =
            embed_strong(&x, &lang(&["a"]), CompletionClass::Prefix, None, None, 2).unwrap();
        assert_eq!(mx, lang(&["a", "ba", "bb"]));
        assert_eq!(my, lang(&["a", "b"]));
    }

    #[test]
    fn embed_rejects_wrong_class() {
        // (b+a(bb)*a, a+ab) is suffix-, not prefix-classed
        assert!(matches!(
            embed_strong(&re("b+a(bb)*a"), &re("a+ab"), CompletionClass::Prefix, None, None, 4),
            Err(Error::ClassViolation(_))
        ));
    }
}
