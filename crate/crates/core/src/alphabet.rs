use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Characters that the regex dialect and the word syntax reserve for themselves.
pub const RESERVED: [char; 4] = ['+', '*', '(', ')'];

/// A finite, totally ordered set of single-character symbols.
///
/// The declared order is fixed and is used for every lexicographic
/// tie-break in the toolkit (shortest-word selection, report ordering,
/// canonical automaton numbering).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from the given symbols, keeping their order.
    ///
    /// Rejects duplicates, empty or oversized (> 64) symbol sets, and the
    /// reserved characters `+ * ( )` and whitespace, which would make the
    /// regex dialect unparseable.
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Arc<Alphabet>> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::InvalidAlphabet("alphabet must be non-empty".into()));
        }
        if symbols.len() > 64 {
            return Err(Error::InvalidAlphabet(format!(
                "alphabet has {} symbols, at most 64 are supported",
                symbols.len()
            )));
        }
        for (i, &c) in symbols.iter().enumerate() {
            if RESERVED.contains(&c) || c.is_whitespace() {
                return Err(Error::InvalidAlphabet(format!(
                    "symbol '{c}' is reserved by the regex dialect"
                )));
            }
            if symbols[..i].contains(&c) {
                return Err(Error::InvalidAlphabet(format!("duplicate symbol '{c}'")));
            }
        }
        Ok(Arc::new(Alphabet { symbols }))
    }

    /// Convenience constructor from a string of symbols, e.g. `"ab"`.
    pub fn from_str_symbols(s: &str) -> Result<Arc<Alphabet>> {
        Alphabet::new(s.chars())
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: ≥ 1 symbol
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn symbol(&self, id: u8) -> char {
        self.symbols[id as usize]
    }

    pub fn index_of(&self, c: char) -> Option<u8> {
        self.symbols.iter().position(|&s| s == c).map(|i| i as u8)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, c) in self.symbols.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "}}")
    }
}

/// A finite word over a declared alphabet, stored as symbol indices.
///
/// Words order length-first, then lexicographically by the alphabet order.
#[derive(Debug, Clone)]
pub struct Word {
    alphabet: Arc<Alphabet>,
    ids: Vec<u8>,
}

impl Word {
    pub fn epsilon(alphabet: &Arc<Alphabet>) -> Word {
        Word { alphabet: Arc::clone(alphabet), ids: Vec::new() }
    }

    pub fn from_ids(alphabet: &Arc<Alphabet>, ids: Vec<u8>) -> Word {
        debug_assert!(ids.iter().all(|&i| (i as usize) < alphabet.len()));
        Word { alphabet: Arc::clone(alphabet), ids }
    }

    /// Parses a word from its symbol string, e.g. `"aab"`.
    pub fn parse(alphabet: &Arc<Alphabet>, text: &str) -> Result<Word> {
        let mut ids = Vec::with_capacity(text.len());
        for c in text.chars() {
            match alphabet.index_of(c) {
                Some(id) => ids.push(id),
                None => return Err(Error::UnknownSymbol { symbol: c }),
            }
        }
        Ok(Word { alphabet: Arc::clone(alphabet), ids })
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn ids(&self) -> &[u8] {
        &self.ids
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut ids = self.ids.clone();
        ids.extend_from_slice(&other.ids);
        Word { alphabet: Arc::clone(&self.alphabet), ids }
    }

    /// The prefix of the first `n` symbols.
    pub fn prefix(&self, n: usize) -> Word {
        Word { alphabet: Arc::clone(&self.alphabet), ids: self.ids[..n].to_vec() }
    }

    /// The suffix starting at symbol `n`.
    pub fn suffix_from(&self, n: usize) -> Word {
        Word { alphabet: Arc::clone(&self.alphabet), ids: self.ids[n..].to_vec() }
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word { alphabet: Arc::clone(&self.alphabet), ids: self.ids[from..to].to_vec() }
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.ids.starts_with(&self.ids)
    }

    pub fn is_proper_prefix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_prefix_of(other)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.ids.ends_with(&self.ids)
    }

    pub fn is_proper_suffix_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_suffix_of(other)
    }

    pub fn is_infix_of(&self, other: &Word) -> bool {
        if self.is_empty() {
            return true;
        }
        other.ids.windows(self.ids.len()).any(|w| w == self.ids.as_slice())
    }

    /// Scattered-subword test: every symbol of `self` appears in `other`
    /// in order (not necessarily contiguously).
    pub fn is_subword_of(&self, other: &Word) -> bool {
        let mut it = other.ids.iter();
        self.ids.iter().all(|c| it.any(|d| d == c))
    }

    pub fn is_proper_subword_of(&self, other: &Word) -> bool {
        self.len() < other.len() && self.is_subword_of(other)
    }

    /// Renders the word as its plain symbol string (empty string for ε).
    pub fn as_string(&self) -> String {
        self.ids.iter().map(|&i| self.alphabet.symbol(i)).collect()
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        self.alphabet == other.alphabet && self.ids == other.ids
    }
}

impl Eq for Word {}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.alphabet
            .symbols
            .cmp(&other.alphabet.symbols)
            .then(self.ids.len().cmp(&other.ids.len()))
            .then_with(|| self.ids.cmp(&other.ids))
    }
}

impl std::hash::Hash for Word {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.ids.hash(state);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            write!(f, "ε")
        } else {
            write!(f, "{}", self.as_string())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn alphabet_rejects_bad_inputs() {
        assert!(matches!(Alphabet::new([]), Err(Error::InvalidAlphabet(_))));
        assert!(matches!(Alphabet::new(['a', 'a']), Err(Error::InvalidAlphabet(_))));
        assert!(matches!(Alphabet::new(['a', '*']), Err(Error::InvalidAlphabet(_))));
        let sixty_five = (0..65u32).map(|i| char::from_u32('A' as u32 + i).unwrap());
        assert!(matches!(Alphabet::new(sixty_five), Err(Error::InvalidAlphabet(_))));
        assert!(Alphabet::from_str_symbols("abc").is_ok());
    }

    #[test]
    fn word_parsing_and_order() {
        let ab = Alphabet::from_str_symbols("ab").unwrap();
        let w = Word::parse(&ab, "aab").unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.to_string(), "aab");
        assert!(matches!(
            Word::parse(&ab, "abc"),
            Err(Error::UnknownSymbol { symbol: 'c' })
        ));
        // length-first, then lexicographic by the declared order
        let mut ws: Vec<Word> = ["b", "aa", "a", "ab"]
            .iter()
            .map(|s| Word::parse(&ab, s).unwrap())
            .collect();
        ws.sort();
        let rendered: Vec<String> = ws.iter().map(|w| w.as_string()).collect();
        assert_eq!(rendered, vec!["a", "b", "aa", "ab"]);
    }

    #[test]
    fn declared_order_drives_lex_comparison() {
        let ba = Alphabet::from_str_symbols("ba").unwrap();
        let a = Word::parse(&ba, "a").unwrap();
        let b = Word::parse(&ba, "b").unwrap();
        assert!(b < a); // b is declared first
    }

    #[test]
    fn subword_checks() {
        let ab = Alphabet::from_str_symbols("ab").unwrap();
        let w = |s: &str| Word::parse(&ab, s).unwrap();
        assert!(w("ab").is_subword_of(&w("aabb")));
        assert!(w("ab").is_proper_subword_of(&w("aabb")));
        assert!(!w("ab").is_proper_subword_of(&w("ab")));
        assert!(!w("ba").is_subword_of(&w("ab")));
        assert!(w("").is_subword_of(&w("ab")));
        assert!(w("ab").is_infix_of(&w("aabb")));
        assert!(!w("bb").is_infix_of(&w("bab")));
    }
}
