//! The regular-language algebra everything else is built from: boolean
//! operations, products, star, reversal, word- and language-quotients,
//! prefix/suffix/factor sets, scattered-subword closures, and the decision
//! predicates. Every result is re-minimized eagerly so language equality is
//! always a structural comparison of canonical automata.

use std::sync::Arc;

use crate::alphabet::Word;
use crate::dfa::Dfa;
use crate::error::{Error, Result};
use crate::language::Language;
use crate::nfa::Nfa;

fn check_alphabets(a: &Language, b: &Language) -> Result<()> {
    if a.alphabet() != b.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

fn check_word_alphabet(x: &Language, u: &Word) -> Result<()> {
    if x.alphabet() != u.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    Ok(())
}

impl Language {
    pub fn union(&self, other: &Language) -> Result<Language> {
        check_alphabets(self, other)?;
        Ok(Language::from_raw_dfa(self.dfa().product(other.dfa(), |a, b| a || b)?))
    }

    pub fn intersect(&self, other: &Language) -> Result<Language> {
        check_alphabets(self, other)?;
        Ok(Language::from_raw_dfa(self.dfa().product(other.dfa(), |a, b| a && b)?))
    }

    pub fn difference(&self, other: &Language) -> Result<Language> {
        check_alphabets(self, other)?;
        Ok(Language::from_raw_dfa(self.dfa().product(other.dfa(), |a, b| a && !b)?))
    }

    pub fn complement(&self) -> Result<Language> {
        let dfa = self.dfa();
        let n = dfa.state_count();
        let k = self.alphabet().len();
        let accepting: Vec<bool> = (0..n as u32).map(|q| !dfa.is_accepting(q)).collect();
        let trans: Vec<u32> = (0..n as u32)
            .flat_map(|q| (0..k as u8).map(move |s| dfa.step(q, s)))
            .collect();
        Ok(Language::from_raw_dfa(Dfa::new(
            Arc::clone(self.alphabet()),
            dfa.start(),
            accepting,
            trans,
        )))
    }

    /// The product language XY = {xy | x ∈ X, y ∈ Y}.
    pub fn concat(&self, other: &Language) -> Result<Language> {
        check_alphabets(self, other)?;
        let mut nfa = Nfa::from_dfa(self.dfa());
        let off = nfa.absorb(&Nfa::from_dfa(other.dfa()));
        let y_start = other.dfa().start() + off;
        for q in 0..self.dfa().state_count() as u32 {
            if self.dfa().is_accepting(q) {
                nfa.accepting[q as usize] = false;
                nfa.add_eps(q, y_start);
            }
        }
        Language::from_nfa(&nfa)
    }

    /// X* (Kleene closure, ε included).
    pub fn star(&self) -> Result<Language> {
        let mut nfa = Nfa::from_dfa(self.dfa());
        let old_start = self.dfa().start();
        let s = nfa.add_state(true);
        nfa.add_eps(s, old_start);
        for q in 0..self.dfa().state_count() as u32 {
            if self.dfa().is_accepting(q) {
                nfa.add_eps(q, old_start);
            }
        }
        nfa.starts = vec![s];
        Language::from_nfa(&nfa)
    }

    /// The mirror language { reverse(w) | w ∈ X }.
    pub fn reverse(&self) -> Result<Language> {
        let dfa = self.dfa();
        let k = self.alphabet().len();
        let mut nfa = Nfa::new(self.alphabet());
        for q in 0..dfa.state_count() as u32 {
            nfa.add_state(q == dfa.start());
        }
        for q in 0..dfa.state_count() as u32 {
            for sym in 0..k as u8 {
                nfa.add_edge(dfa.step(q, sym), sym, q);
            }
        }
        nfa.starts = dfa.accepting_states().collect();
        Language::from_nfa(&nfa)
    }

    /// u⁻¹X = { v | uv ∈ X }.
    pub fn left_quotient(&self, u: &Word) -> Result<Language> {
        check_word_alphabet(self, u)?;
        let dfa = self.dfa();
        let q = dfa.run_from(dfa.start(), u);
        let n = dfa.state_count();
        let k = self.alphabet().len();
        let accepting: Vec<bool> = (0..n as u32).map(|s| dfa.is_accepting(s)).collect();
        let trans: Vec<u32> = (0..n as u32)
            .flat_map(|s| (0..k as u8).map(move |c| dfa.step(s, c)))
            .collect();
        Ok(Language::from_raw_dfa(Dfa::new(Arc::clone(self.alphabet()), q, accepting, trans)))
    }

    /// Xu⁻¹ = { v | vu ∈ X }.
    pub fn right_quotient(&self, u: &Word) -> Result<Language> {
        check_word_alphabet(self, u)?;
        let dfa = self.dfa();
        let n = dfa.state_count();
        let k = self.alphabet().len();
        let accepting: Vec<bool> = (0..n as u32)
            .map(|q| dfa.is_accepting(dfa.run_from(q, u)))
            .collect();
        let trans: Vec<u32> = (0..n as u32)
            .flat_map(|q| (0..k as u8).map(move |c| dfa.step(q, c)))
            .collect();
        Ok(Language::from_raw_dfa(Dfa::new(
            Arc::clone(self.alphabet()),
            dfa.start(),
            accepting,
            trans,
        )))
    }

    /// K⁻¹X = ⋃_{u ∈ K} u⁻¹X, via the reachable-pair construction
    /// (K may be infinite).
    pub fn left_quotient_lang(&self, k_lang: &Language) -> Result<Language> {
        check_alphabets(self, k_lang)?;
        let xd = self.dfa();
        let kd = k_lang.dfa();
        let k = self.alphabet().len();
        // forward product reachability from (k_start, x_start)
        let mut seen = vec![false; kd.state_count() * xd.state_count()];
        let idx = |p: u32, q: u32| p as usize * xd.state_count() + q as usize;
        let mut stack = vec![(kd.start(), xd.start())];
        seen[idx(kd.start(), xd.start())] = true;
        let mut starts: Vec<u32> = Vec::new();
        while let Some((p, q)) = stack.pop() {
            if kd.is_accepting(p) {
                starts.push(q);
            }
            for sym in 0..k as u8 {
                let t = (kd.step(p, sym), xd.step(q, sym));
                if !seen[idx(t.0, t.1)] {
                    seen[idx(t.0, t.1)] = true;
                    stack.push(t);
                }
            }
        }
        let mut nfa = Nfa::from_dfa(xd);
        starts.sort_unstable();
        starts.dedup();
        nfa.starts = starts;
        if nfa.starts.is_empty() {
            return Ok(Language::empty(self.alphabet()));
        }
        Language::from_nfa(&nfa)
    }

    /// XK⁻¹ = ⋃_{u ∈ K} Xu⁻¹, via co-reachability in the full product.
    pub fn right_quotient_lang(&self, k_lang: &Language) -> Result<Language> {
        check_alphabets(self, k_lang)?;
        let xd = self.dfa();
        let kd = k_lang.dfa();
        let k = self.alphabet().len();
        let nx = xd.state_count();
        let nk = kd.state_count();
        let idx = |q: u32, p: u32| q as usize * nk + p as usize;
        // predecessors in the product graph
        let mut preds: Vec<Vec<u32>> = vec![Vec::new(); nx * nk];
        for q in 0..nx as u32 {
            for p in 0..nk as u32 {
                for sym in 0..k as u8 {
                    preds[idx(xd.step(q, sym), kd.step(p, sym))].push(idx(q, p) as u32);
                }
            }
        }
        let mut co = vec![false; nx * nk];
        let mut stack: Vec<u32> = Vec::new();
        for q in 0..nx as u32 {
            for p in 0..nk as u32 {
                if xd.is_accepting(q) && kd.is_accepting(p) {
                    co[idx(q, p)] = true;
                    stack.push(idx(q, p) as u32);
                }
            }
        }
        while let Some(i) = stack.pop() {
            for &pr in &preds[i as usize] {
                if !co[pr as usize] {
                    co[pr as usize] = true;
                    stack.push(pr);
                }
            }
        }
        let accepting: Vec<bool> = (0..nx as u32).map(|q| co[idx(q, kd.start())]).collect();
        let trans: Vec<u32> = (0..nx as u32)
            .flat_map(|q| (0..k as u8).map(move |s| xd.step(q, s)))
            .collect();
        Ok(Language::from_raw_dfa(Dfa::new(
            Arc::clone(self.alphabet()),
            xd.start(),
            accepting,
            trans,
        )))
    }

    /// Proper prefixes of words of X (ε included whenever X has a non-ε word).
    pub fn proper_prefixes(&self) -> Result<Language> {
        let dfa = self.dfa();
        let k = self.alphabet().len();
        let co = dfa.co_reachable();
        let n = dfa.state_count();
        // q accepts iff some accepting state is reachable in ≥ 1 steps
        let accepting: Vec<bool> = (0..n as u32)
            .map(|q| (0..k as u8).any(|s| co[dfa.step(q, s) as usize]))
            .collect();
        let trans: Vec<u32> = (0..n as u32)
            .flat_map(|q| (0..k as u8).map(move |s| dfa.step(q, s)))
            .collect();
        Ok(Language::from_raw_dfa(Dfa::new(
            Arc::clone(self.alphabet()),
            dfa.start(),
            accepting,
            trans,
        )))
    }

    /// Proper suffixes of words of X (ε included whenever X has a non-ε word).
    pub fn proper_suffixes(&self) -> Result<Language> {
        let dfa = self.dfa();
        let k = self.alphabet().len();
        // start set: states reachable from the start in ≥ 1 steps
        let one_step: Vec<u32> = (0..k as u8).map(|s| dfa.step(dfa.start(), s)).collect();
        let reach = dfa.reachable_from(&one_step);
        let mut nfa = Nfa::from_dfa(dfa);
        nfa.starts = (0..dfa.state_count() as u32).filter(|&q| reach[q as usize]).collect();
        Language::from_nfa(&nfa)
    }

    /// All infixes of words of X, including the words themselves and ε.
    pub fn factors(&self) -> Result<Language> {
        let dfa = self.dfa();
        let co = dfa.co_reachable();
        let mut nfa = Nfa::from_dfa(dfa);
        // accept in any co-reachable state, start anywhere
        nfa.accepting.copy_from_slice(&co);
        nfa.starts = (0..dfa.state_count() as u32).collect();
        Language::from_nfa(&nfa)
    }

    /// All words with some word of X as a scattered subword.
    pub fn upward_closure(&self) -> Result<Language> {
        let dfa = self.dfa();
        let k = self.alphabet().len();
        let mut nfa = Nfa::from_dfa(dfa);
        for q in 0..dfa.state_count() as u32 {
            for sym in 0..k as u8 {
                nfa.add_edge(q, sym, q);
            }
        }
        Language::from_nfa(&nfa)
    }

    /// All words with some word of X as a *proper* scattered subword
    /// (at least one symbol inserted).
    pub fn strict_upward_closure(&self) -> Result<Language> {
        let dfa = self.dfa();
        let k = self.alphabet().len();
        let n = dfa.state_count() as u32;
        // layer 0: nothing inserted yet; layer 1: ≥ 1 insertion
        let mut nfa = Nfa::new(self.alphabet());
        for layer in 0..2u32 {
            for q in 0..n {
                nfa.add_state(layer == 1 && dfa.is_accepting(q));
            }
        }
        for q in 0..n {
            for sym in 0..k as u8 {
                let t = dfa.step(q, sym);
                nfa.add_edge(q, sym, t); // follow, layer 0
                nfa.add_edge(q, sym, q + n); // insert, move to layer 1
                nfa.add_edge(q + n, sym, t + n); // follow, layer 1
                nfa.add_edge(q + n, sym, q + n); // insert again
            }
        }
        nfa.starts = vec![dfa.start()];
        Language::from_nfa(&nfa)
    }

    /// Exact language equality (canonical automata are identical encodings).
    pub fn equal(&self, other: &Language) -> Result<bool> {
        check_alphabets(self, other)?;
        Ok(self == other)
    }

    /// X ⊆ Y, decided by product emptiness without building the difference.
    pub fn subset_of(&self, other: &Language) -> Result<bool> {
        check_alphabets(self, other)?;
        let prod = self.dfa().product(other.dfa(), |a, b| a && !b)?;
        let disjoint = prod.accepting_states().next().is_none();
        Ok(disjoint)
    }
}

/// A symbolic description of one quotient application.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientKey {
    pub base: Language,
    pub side: QuotientSide,
    pub by: QuotientBy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientSide {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QuotientBy {
    Word(Word),
    Language(Language),
}

impl QuotientKey {
    pub fn evaluate(&self) -> Result<Language> {
        match (&self.side, &self.by) {
            (QuotientSide::Left, QuotientBy::Word(u)) => self.base.left_quotient(u),
            (QuotientSide::Right, QuotientBy::Word(u)) => self.base.right_quotient(u),
            (QuotientSide::Left, QuotientBy::Language(k)) => self.base.left_quotient_lang(k),
            (QuotientSide::Right, QuotientBy::Language(k)) => self.base.right_quotient_lang(k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ab() -> Arc<crate::alphabet::Alphabet> {
        Alphabet::from_str_symbols("ab").unwrap()
    }

    fn lang(words: &[&str]) -> Language {
        Language::from_word_strs(&ab(), words).unwrap()
    }

    fn w(s: &str) -> Word {
        Word::parse(&ab(), s).unwrap()
    }

    #[test]
    fn boolean_ops() {
        let a = lang(&["a"]);
        let b = lang(&["b"]);
        assert_eq!(a.union(&b).unwrap(), lang(&["a", "b"]));
        let univ = Language::universe(&ab());
        assert!(univ.complement().unwrap().is_empty());
        let x = lang(&["ab", "b"]);
        let astarb = Language::from_regex("a*b", &ab()).unwrap();
        assert_eq!(x.intersect(&astarb).unwrap(), lang(&["ab", "b"]));
    }

    #[test]
    fn concat_matches_paper_products() {
        let x = lang(&["aa", "baa"]);
        let y = lang(&["b", "ba"]);
        let z = x.concat(&y).unwrap();
        assert_eq!(z, lang(&["aab", "aaba", "baab", "baaba"]));

        let id = lang(&["aa"]).concat(&Language::epsilon(&ab())).unwrap();
        assert_eq!(id, lang(&["aa"]));

        // {bⁿa | n≥1}·{abᵐa | m≥1} = {bⁿa²bᵐa}
        let bx = Language::from_regex("bb*a", &ab()).unwrap();
        let by = Language::from_regex("abb*a", &ab()).unwrap();
        let z3 = Language::from_regex("bb*aabb*a", &ab()).unwrap();
        assert_eq!(bx.concat(&by).unwrap(), z3);
    }

    #[test]
    fn word_quotients_from_walkthrough() {
        let z = lang(&["aab", "aaba", "baab", "baaba"]);
        assert_eq!(z.left_quotient(&w("aa")).unwrap(), lang(&["b", "ba"]));
        assert_eq!(z.right_quotient(&w("b")).unwrap(), lang(&["aa", "baa"]));

        let z3 = Language::from_regex("bb*aabb*a", &ab()).unwrap();
        let y3 = Language::from_regex("abb*a", &ab()).unwrap();
        assert_eq!(z3.left_quotient(&w("ba")).unwrap(), y3);
    }

    #[test]
    fn language_quotients() {
        let x = lang(&["aa", "baa"]);
        assert!(x.left_quotient_lang(&x).unwrap().is_epsilon_only());

        // Y = a⁻¹{aⁿb², aⁿb²ab} has YY⁻¹ ≠ {ε}
        let z2 = Language::from_regex("aa*bb+aa*bbab", &ab()).unwrap();
        let y = z2.left_quotient(&w("a")).unwrap();
        let yy = y.right_quotient_lang(&y).unwrap();
        assert!(!yy.is_epsilon_only());

        let empty = Language::empty(&ab());
        assert!(lang(&["a"]).left_quotient_lang(&empty).unwrap().is_empty());
    }

    #[test]
    fn prefixes_suffixes_factors() {
        let z1 = lang(&["aab"]);
        let p = z1.proper_prefixes().unwrap();
        assert_eq!(p, lang(&["", "a", "aa"]));

        let z3w = lang(&["baaba"]);
        let p3 = z3w.proper_prefixes().unwrap();
        assert_eq!(p3, lang(&["", "b", "ba", "baa", "baab"]));

        let f = lang(&["ab"]).factors().unwrap();
        assert_eq!(f, lang(&["", "a", "b", "ab"]));
    }

    #[test]
    fn upward_closures() {
        let up = lang(&["ab"]).upward_closure().unwrap();
        let expect = Language::from_regex("(a+b)*a(a+b)*b(a+b)*", &ab()).unwrap();
        assert_eq!(up, expect);

        // strict: words of length ≥ 2 containing a
        let sup = lang(&["a"]).strict_upward_closure().unwrap();
        let contains_a = Language::from_regex("(a+b)*a(a+b)*", &ab()).unwrap();
        let expect = contains_a.difference(&lang(&["a"])).unwrap();
        assert_eq!(sup, expect);

        assert!(Language::empty(&ab()).upward_closure().unwrap().is_empty());
    }

    #[test]
    fn equality_and_subset() {
        let x = lang(&["aa", "baa"]);
        let y = lang(&["b", "ba"]);
        let z = lang(&["aab", "aaba", "baab", "baaba"]);
        assert!(x.concat(&y).unwrap().equal(&z).unwrap());
        assert!(Language::empty(&ab()).subset_of(&x).unwrap());
        let r1 = Language::from_regex("a*b", &ab()).unwrap();
        let r2 = Language::from_regex("b+aa*b", &ab()).unwrap();
        assert!(r1.equal(&r2).unwrap());
        assert!(matches!(
            lang(&["a"]).union(&Language::universe(&Alphabet::from_str_symbols("abc").unwrap())),
            Err(Error::AlphabetMismatch)
        ));
    }

    #[test]
    fn quotient_key_evaluates() {
        let z = lang(&["aab", "aaba", "baab", "baaba"]);
        let key = QuotientKey {
            base: z.clone(),
            side: QuotientSide::Left,
            by: QuotientBy::Word(w("aa")),
        };
        assert_eq!(key.evaluate().unwrap(), lang(&["b", "ba"]));
    }
}
