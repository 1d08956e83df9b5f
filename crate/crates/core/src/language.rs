//! Regular languages with canonical identity.
//!
//! A [`Language`] always carries the canonical minimal DFA of its word set;
//! two languages are equal exactly when those encodings coincide. Finite
//! languages additionally materialize their word set on demand (up to
//! [`MATERIALIZE_LIMIT`] words), which the brute-force oracles rely on.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::alphabet::{Alphabet, Word};
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::nfa::Nfa;
use crate::regex::{parse_regex, RegexAst};

/// Finite languages with at most this many words keep an explicit word set.
pub const MATERIALIZE_LIMIT: u64 = 1_000_000;

#[derive(Debug)]
struct LangInner {
    alphabet: Arc<Alphabet>,
    dfa: Dfa,
    /// `Some(n)` when finite with n words (counted with saturation), `None` when infinite.
    count: OnceLock<Option<u64>>,
    words: OnceLock<Option<Arc<BTreeSet<Word>>>>,
}

/// A regular language over a fixed alphabet. Cheap to clone; immutable.
#[derive(Debug, Clone)]
pub struct Language(Arc<LangInner>);

impl Language {
    pub(crate) fn from_canonical_dfa(dfa: Dfa) -> Language {
        Language(Arc::new(LangInner {
            alphabet: Arc::clone(dfa.alphabet()),
            dfa,
            count: OnceLock::new(),
            words: OnceLock::new(),
        }))
    }

    pub(crate) fn from_raw_dfa(dfa: Dfa) -> Language {
        Language::from_canonical_dfa(dfa.minimize_canonical())
    }

    pub(crate) fn from_nfa(nfa: &Nfa) -> Result<Language> {
        Ok(Language::from_canonical_dfa(nfa.determinize_min()?))
    }

    /// The empty language ∅.
    pub fn empty(alphabet: &Arc<Alphabet>) -> Language {
        Language::from_raw_dfa(Dfa::empty(alphabet))
    }

    /// The language {ε}.
    pub fn epsilon(alphabet: &Arc<Alphabet>) -> Language {
        let k = alphabet.len();
        let mut trans = vec![1u32; k]; // start -> dead on every symbol
        trans.extend(std::iter::repeat_n(1u32, k));
        Language::from_raw_dfa(Dfa::new(Arc::clone(alphabet), 0, vec![true, false], trans))
    }

    /// A*.
    pub fn universe(alphabet: &Arc<Alphabet>) -> Language {
        let k = alphabet.len();
        Language::from_raw_dfa(Dfa::new(Arc::clone(alphabet), 0, vec![true], vec![0; k]))
    }

    /// A⁺.
    pub fn nonempty_universe(alphabet: &Arc<Alphabet>) -> Language {
        let k = alphabet.len();
        let mut trans = vec![1u32; k];
        trans.extend(std::iter::repeat_n(1u32, k));
        Language::from_raw_dfa(Dfa::new(Arc::clone(alphabet), 0, vec![false, true], trans))
    }

    /// The finite language consisting exactly of `words`.
    pub fn from_words<'a>(
        alphabet: &Arc<Alphabet>,
        words: impl IntoIterator<Item = &'a Word>,
    ) -> Result<Language> {
        let mut nfa = Nfa::new(alphabet);
        let root = nfa.add_state(false);
        nfa.starts.push(root);
        for w in words {
            if w.alphabet() != alphabet {
                return Err(Error::AlphabetMismatch);
            }
            let mut cur = root;
            for (i, &sym) in w.ids().iter().enumerate() {
                let last = i + 1 == w.len();
                let next = nfa.add_state(last);
                nfa.add_edge(cur, sym, next);
                cur = next;
            }
            if w.is_empty() {
                nfa.accepting[root as usize] = true;
            }
        }
        Language::from_nfa(&nfa)
    }

    /// Parses words from plain strings and builds their finite language.
    pub fn from_word_strs(
        alphabet: &Arc<Alphabet>,
        words: impl IntoIterator<Item = impl AsRef<str>>,
    ) -> Result<Language> {
        let parsed: Vec<Word> = words
            .into_iter()
            .map(|s| Word::parse(alphabet, s.as_ref()))
            .collect::<Result<_>>()?;
        Language::from_words(alphabet, &parsed)
    }

    /// Compiles a regex AST (Thompson construction, then subset + minimize).
    pub fn compile(ast: &RegexAst, alphabet: &Arc<Alphabet>) -> Result<Language> {
        let mut nfa = Nfa::new(alphabet);
        let frag = build_thompson(&mut nfa, ast, alphabet)?;
        nfa.starts.push(frag.start);
        nfa.accepting[frag.accept as usize] = true;
        Language::from_nfa(&nfa)
    }

    /// Parses and compiles a regex of the input dialect.
    pub fn from_regex(text: &str, alphabet: &Arc<Alphabet>) -> Result<Language> {
        Language::compile(&parse_regex(text, alphabet)?, alphabet)
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.0.alphabet
    }

    pub fn dfa(&self) -> &Dfa {
        &self.0.dfa
    }

    pub fn state_count(&self) -> usize {
        self.0.dfa.state_count()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.0.dfa.accepts(w)
    }

    pub fn contains_epsilon(&self) -> bool {
        self.0.dfa.is_accepting(self.0.dfa.start())
    }

    pub fn is_empty(&self) -> bool {
        // canonical DFA of ∅ has no accepting state
        self.0.dfa.accepting_states().next().is_none()
    }

    /// Exactly {ε}?
    pub fn is_epsilon_only(&self) -> bool {
        self.contains_epsilon() && self.word_count() == Some(1)
    }

    /// Finite/infinite detection: a cycle through a useful state (reachable
    /// and co-reachable) pumps infinitely many words.
    pub fn is_finite(&self) -> bool {
        self.word_count().is_some()
    }

    /// Number of words when finite (saturating far above
    /// [`MATERIALIZE_LIMIT`]); `None` when infinite.
    pub fn word_count(&self) -> Option<u64> {
        *self.0.count.get_or_init(|| self.count_words())
    }

    fn count_words(&self) -> Option<u64> {
        let dfa = &self.0.dfa;
        let n = dfa.state_count();
        let k = self.0.alphabet.len();
        let useful = dfa.co_reachable(); // canonical DFA: all states reachable
        // DFS cycle check over useful states
        let mut color = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
        let mut stack: Vec<(u32, u8)> = Vec::new();
        let start = dfa.start();
        if useful[start as usize] {
            stack.push((start, 0));
            color[start as usize] = 1;
            while let Some(&mut (q, ref mut sym)) = stack.last_mut() {
                if *sym as usize >= k {
                    color[q as usize] = 2;
                    stack.pop();
                    continue;
                }
                let s = *sym;
                *sym += 1;
                let t = dfa.step(q, s);
                if !useful[t as usize] {
                    continue;
                }
                match color[t as usize] {
                    0 => {
                        color[t as usize] = 1;
                        stack.push((t, 0));
                    }
                    1 => return None, // cycle on an accepting path
                    _ => {}
                }
            }
        }
        // acyclic: count paths with memoized DFS (saturating)
        let mut memo: Vec<Option<u64>> = vec![None; n];
        fn count(dfa: &Dfa, useful: &[bool], memo: &mut Vec<Option<u64>>, q: u32, k: usize) -> u64 {
            if let Some(c) = memo[q as usize] {
                return c;
            }
            let mut total: u64 = if dfa.is_accepting(q) { 1 } else { 0 };
            for sym in 0..k as u8 {
                let t = dfa.step(q, sym);
                if useful[t as usize] {
                    total = total.saturating_add(count(dfa, useful, memo, t, k));
                }
            }
            memo[q as usize] = Some(total);
            total
        }
        if !useful[start as usize] {
            return Some(0);
        }
        Some(count(dfa, &useful, &mut memo, start, k))
    }

    /// The materialized word set: available when the language is finite
    /// with at most [`MATERIALIZE_LIMIT`] words.
    pub fn words(&self) -> Option<Arc<BTreeSet<Word>>> {
        self.0
            .words
            .get_or_init(|| match self.word_count() {
                Some(c) if c <= MATERIALIZE_LIMIT => {
                    let max_len = self.state_count(); // acyclic useful part bounds lengths
                    Some(Arc::new(self.enumerate(max_len).into_iter().collect()))
                }
                _ => None,
            })
            .clone()
    }

    /// All words of length ≤ `maxlen`, in length-then-lex order.
    pub fn enumerate(&self, maxlen: usize) -> Vec<Word> {
        let dfa = &self.0.dfa;
        let k = self.0.alphabet.len();
        let dist = dfa.distance_to_accepting();
        let mut out: Vec<Word> = Vec::new();
        let mut path: Vec<u8> = Vec::new();
        #[allow(clippy::too_many_arguments)]
        fn go(
            lang: &Language,
            dfa: &Dfa,
            dist: &[Option<usize>],
            k: usize,
            q: u32,
            maxlen: usize,
            path: &mut Vec<u8>,
            out: &mut Vec<Word>,
        ) {
            if dfa.is_accepting(q) {
                out.push(Word::from_ids(lang.alphabet(), path.clone()));
            }
            if path.len() == maxlen {
                return;
            }
            for sym in 0..k as u8 {
                let t = dfa.step(q, sym);
                match dist[t as usize] {
                    Some(d) if path.len() + 1 + d <= maxlen => {
                        path.push(sym);
                        go(lang, dfa, dist, k, t, maxlen, path, out);
                        path.pop();
                    }
                    _ => {}
                }
            }
        }
        go(self, dfa, &dist, k, dfa.start(), maxlen, &mut path, &mut out);
        out.sort();
        out
    }

    /// A shortest word, ties broken lexicographically by the alphabet order.
    pub fn shortest_word(&self) -> Result<Word> {
        let dfa = &self.0.dfa;
        let dist = dfa.distance_to_accepting();
        let start = dfa.start();
        let Some(mut remaining) = dist[start as usize] else {
            return Err(Error::EmptyLanguage);
        };
        let mut ids = Vec::with_capacity(remaining);
        let mut q = start;
        while remaining > 0 {
            for sym in 0..self.0.alphabet.len() as u8 {
                let t = dfa.step(q, sym);
                if dist[t as usize] == Some(remaining - 1) {
                    ids.push(sym);
                    q = t;
                    break;
                }
            }
            remaining -= 1;
        }
        debug_assert!(dfa.is_accepting(q));
        Ok(Word::from_ids(&self.0.alphabet, ids))
    }

    /// Minimal word length, `None` for the empty language.
    pub fn min_word_len(&self) -> Option<usize> {
        self.0.dfa.distance_to_accepting()[self.0.dfa.start() as usize]
    }

    /// Maximal word length of a finite language.
    pub fn max_word_len(&self) -> Result<usize> {
        let words = self.words().ok_or(Error::NotFinite)?;
        words.iter().next_back().map(|w| w.len()).ok_or(Error::EmptyLanguage)
    }
}

impl PartialEq for Language {
    fn eq(&self, other: &Self) -> bool {
        self.0.dfa == other.0.dfa
    }
}

impl Eq for Language {}

impl std::hash::Hash for Language {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.0.dfa.hash(state);
    }
}

impl fmt::Display for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.words() {
            Some(ws) if ws.len() <= 12 => {
                write!(f, "{{")?;
                for (i, w) in ws.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{w}")?;
                }
                write!(f, "}}")
            }
            _ => write!(f, "<regular language, {} states>", self.state_count()),
        }
    }
}

struct Frag {
    start: u32,
    accept: u32,
}

fn build_thompson(nfa: &mut Nfa, ast: &RegexAst, alphabet: &Arc<Alphabet>) -> Result<Frag> {
    match ast {
        RegexAst::Empty => {
            let s = nfa.add_state(false);
            let t = nfa.add_state(false);
            Ok(Frag { start: s, accept: t })
        }
        RegexAst::Epsilon => {
            let s = nfa.add_state(false);
            let t = nfa.add_state(false);
            nfa.add_eps(s, t);
            Ok(Frag { start: s, accept: t })
        }
        RegexAst::Symbol(c) => {
            let sym = alphabet.index_of(*c).ok_or(Error::UnknownSymbol { symbol: *c })?;
            let s = nfa.add_state(false);
            let t = nfa.add_state(false);
            nfa.add_edge(s, sym, t);
            Ok(Frag { start: s, accept: t })
        }
        RegexAst::Union(l, r) => {
            let fl = build_thompson(nfa, l, alphabet)?;
            let fr = build_thompson(nfa, r, alphabet)?;
            let s = nfa.add_state(false);
            let t = nfa.add_state(false);
            nfa.add_eps(s, fl.start);
            nfa.add_eps(s, fr.start);
            nfa.add_eps(fl.accept, t);
            nfa.add_eps(fr.accept, t);
            Ok(Frag { start: s, accept: t })
        }
        RegexAst::Concat(l, r) => {
            let fl = build_thompson(nfa, l, alphabet)?;
            let fr = build_thompson(nfa, r, alphabet)?;
            nfa.add_eps(fl.accept, fr.start);
            Ok(Frag { start: fl.start, accept: fr.accept })
        }
        RegexAst::Star(e) => {
            let fe = build_thompson(nfa, e, alphabet)?;
            let s = nfa.add_state(false);
            let t = nfa.add_state(false);
            nfa.add_eps(s, t);
            nfa.add_eps(s, fe.start);
            nfa.add_eps(fe.accept, t);
            nfa.add_eps(fe.accept, fe.start);
            Ok(Frag { start: s, accept: t })
        }
    }
}
