//! Code-class predicates for regular languages: the Sardinas–Patterson
//! test (with witness reconstruction), the quotient characterizations of
//! prefix/suffix/bifix codes, the infix and subinfix families, hypercodes,
//! product unambiguity, alternative and strong alternative pairs, thinness
//! and completeness.

use std::collections::HashMap;

use crate::alphabet::Word;
use crate::error::{Error, Result};
use crate::language::Language;

/// Rejects inputs that code predicates cannot accept.
fn check_code_input(x: &Language) -> Result<()> {
    if x.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    if x.contains_epsilon() {
        return Err(Error::EpsilonInCode);
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CodeVerdict {
    Code,
    NotCode,
}

/// A word with two distinct factorizations into code words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub left: Vec<Word>,
    pub right: Vec<Word>,
}

/// The round structure of a Sardinas–Patterson run.
///
/// U₁ = X⁻¹X \ {ε} and U_{n+1} = X⁻¹U_n ∪ U_n⁻¹X. The input is a code
/// exactly when no round contains ε; the rounds of a regular language range
/// over a finite family, so a repeated round with no ε seen terminates the
/// test positively.
#[derive(Debug, Clone)]
pub struct SardinasTrace {
    pub rounds: Vec<Language>,
    pub verdict: CodeVerdict,
    pub witness: Option<Ambiguity>,
}

impl SardinasTrace {
    pub fn is_code(&self) -> bool {
        self.verdict == CodeVerdict::Code
    }
}

/// The Sardinas–Patterson test, generalized to regular languages.
pub fn is_code(x: &Language) -> Result<SardinasTrace> {
    check_code_input(x)?;
    let alphabet = x.alphabet();
    let eps = Language::epsilon(alphabet);

    let mut rounds: Vec<Language> = Vec::new();
    // Language's Eq/Hash read only the immutable canonical DFA
    #[allow(clippy::mutable_key_type)]
    let mut seen: HashMap<Language, usize> = HashMap::new();
    let u1 = x.left_quotient_lang(x)?.difference(&eps)?;
    let mut current = u1;
    loop {
        if current.contains_epsilon() {
            rounds.push(current);
            let witness = reconstruct_witness(x, &rounds)?;
            return Ok(SardinasTrace {
                rounds,
                verdict: CodeVerdict::NotCode,
                witness: Some(witness),
            });
        }
        if seen.contains_key(&current) {
            return Ok(SardinasTrace { rounds, verdict: CodeVerdict::Code, witness: None });
        }
        seen.insert(current.clone(), rounds.len());
        rounds.push(current.clone());
        // U_{n+1} = X⁻¹U_n ∪ U_n⁻¹X
        let a = current.left_quotient_lang(x)?;
        let b = x.left_quotient_lang(&current)?;
        current = a.union(&b)?;
    }
}

/// Back-traces the round chain ε ∈ U_n … d₁ ∈ U₁ and replays it forward
/// into two distinct factorizations of one word.
fn reconstruct_witness(x: &Language, rounds: &[Language]) -> Result<Ambiguity> {
    let alphabet = x.alphabet();
    let n = rounds.len();
    // chain[i] ∈ U_{i+1}; chain[n-1] = ε
    let mut chain: Vec<Word> = vec![Word::epsilon(alphabet); n];
    // step taken to get from chain[i-1] to chain[i]:
    //   Quot(x_w): chain[i-1] = x_w · chain[i]   (case X⁻¹U_{i-1})
    //   Into(u):   u · chain[i] ∈ X, chain[i-1] = u  (case U_{i-1}⁻¹X)
    enum Step {
        Quot(Word),
        Into(Word),
    }
    let mut steps: Vec<Step> = Vec::with_capacity(n.saturating_sub(1));
    for i in (1..n).rev() {
        let d = chain[i].clone();
        let prev = &rounds[i - 1];
        // case (a): some x_w ∈ X with x_w·d ∈ U_{i-1}
        let ca = x.intersect(&prev.right_quotient(&d)?)?;
        if let Ok(x_w) = ca.shortest_word() {
            chain[i - 1] = x_w.concat(&d);
            steps.push(Step::Quot(x_w));
            continue;
        }
        // case (b): some u ∈ U_{i-1} with u·d ∈ X
        let cb = prev.intersect(&x.right_quotient(&d)?)?;
        let u = cb.shortest_word().map_err(|_| {
            Error::Spec("sardinas-patterson back-trace found no predecessor".into())
        })?;
        chain[i - 1] = u.clone();
        steps.push(Step::Into(u));
    }
    steps.reverse();

    // forward replay: d₁ ∈ U₁ means some x_w, x_w·d₁ ∈ X
    let d1 = chain[0].clone();
    let starters = x.intersect(&x.right_quotient(&d1)?)?;
    let x0 = starters.shortest_word()?;
    let mut left: Vec<Word> = vec![x0.clone()];
    let mut right: Vec<Word> = vec![x0.concat(&d1)];
    // invariant: concat(left) · chain[i] = concat(right)
    for (i, step) in steps.iter().enumerate() {
        match step {
            Step::Quot(x_w) => left.push(x_w.clone()),
            Step::Into(u) => {
                let d = &chain[i + 1];
                left.push(u.concat(d));
                std::mem::swap(&mut left, &mut right);
            }
        }
    }
    let word = right.iter().fold(Word::epsilon(alphabet), |acc, w| acc.concat(w));
    debug_assert_eq!(
        word,
        left.iter().fold(Word::epsilon(alphabet), |acc, w| acc.concat(w))
    );
    debug_assert_ne!(left, right);
    Ok(Ambiguity { word, left, right })
}

/// X is a prefix code iff X⁻¹X = {ε}.
pub fn is_prefix_code(x: &Language) -> Result<bool> {
    check_code_input(x)?;
    Ok(x.left_quotient_lang(x)?.is_epsilon_only())
}

/// X is a suffix code iff XX⁻¹ = {ε}.
pub fn is_suffix_code(x: &Language) -> Result<bool> {
    check_code_input(x)?;
    Ok(x.right_quotient_lang(x)?.is_epsilon_only())
}

pub fn is_bifix_code(x: &Language) -> Result<bool> {
    Ok(is_prefix_code(x)? && is_suffix_code(x)?)
}

/// The infix/subinfix family flags plus the hypercode flag.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InfixFlags {
    pub p_infix: bool,
    pub s_infix: bool,
    pub infix: bool,
    pub p_subinfix: bool,
    pub s_subinfix: bool,
    pub subinfix: bool,
    pub hypercode: bool,
}

/// Decides the whole family by automaton constructions. Properness is
/// expressed by an A⁺ padding on the appropriate side, never by
/// subtracting X.
pub fn infix_family(x: &Language) -> Result<InfixFlags> {
    check_code_input(x)?;
    let alphabet = x.alphabet();
    let a_star = Language::universe(alphabet);
    let a_plus = Language::nonempty_universe(alphabet);
    let up = x.upward_closure()?;

    // v = s·u·t with t ≠ ε  ⟺  v ∈ A*·X·A⁺, etc.
    let p_infix = x.intersect(&a_star.concat(x)?.concat(&a_plus)?)?.is_empty();
    let s_infix = x.intersect(&a_plus.concat(x)?.concat(&a_star)?)?.is_empty();
    let infix = p_infix && s_infix;
    let p_subinfix = x.intersect(&up.concat(&a_plus)?)?.is_empty();
    let s_subinfix = x.intersect(&a_plus.concat(&up)?)?.is_empty();
    let subinfix = {
        let left = a_plus.concat(&up)?.concat(&a_star)?;
        let right = a_star.concat(&up)?.concat(&a_plus)?;
        x.intersect(&left.union(&right)?)?.is_empty()
    };
    // every hypercode is finite (Higman), so infinite input decides negatively
    let hypercode = if x.is_finite() {
        x.intersect(&x.strict_upward_closure()?)?.is_empty()
    } else {
        false
    };
    Ok(InfixFlags { p_infix, s_infix, infix, p_subinfix, s_subinfix, subinfix, hypercode })
}

/// Outcome of the product-unambiguity test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProductAmbiguity {
    Unambiguous,
    /// `word = x·(s·y) = (x·s)·y` with both pairs in X × Y.
    Ambiguous { word: Word, pair_a: (Word, Word), pair_b: (Word, Word) },
}

impl ProductAmbiguity {
    pub fn is_unambiguous(&self) -> bool {
        matches!(self, ProductAmbiguity::Unambiguous)
    }
}

/// The product XY is ambiguous iff some s ≠ ε lies in X⁻¹X ∩ YY⁻¹
/// (then z = x(sy) = (xs)y). Validated against the brute-force pair
/// enumeration in the test suite.
pub fn unambiguous_product(x: &Language, y: &Language) -> Result<ProductAmbiguity> {
    check_code_input(x)?;
    check_code_input(y)?;
    if x.alphabet() != y.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let eps = Language::epsilon(x.alphabet());
    let overlaps = x
        .left_quotient_lang(x)?
        .intersect(&y.right_quotient_lang(y)?)?
        .difference(&eps)?;
    if overlaps.is_empty() {
        return Ok(ProductAmbiguity::Unambiguous);
    }
    let s = overlaps.shortest_word()?;
    let x_short = x.intersect(&x.right_quotient(&s)?)?.shortest_word()?;
    let y_short = y.intersect(&y.left_quotient(&s)?)?.shortest_word()?;
    let word = x_short.concat(&s).concat(&y_short);
    Ok(ProductAmbiguity::Ambiguous {
        word,
        pair_a: (x_short.clone(), s.concat(&y_short)),
        pair_b: (x_short.concat(&s), y_short),
    })
}

/// (X, Y) is an alternative code iff XY is a code and the product XY is
/// unambiguous.
pub fn is_alternative_code(x: &Language, y: &Language) -> Result<bool> {
    if !unambiguous_product(x, y)?.is_unambiguous() {
        return Ok(false);
    }
    Ok(is_code(&x.concat(y)?)?.is_code())
}

/// A strong alternative code additionally satisfies X⁻¹(XY) ⊆ Y and
/// (XY)Y⁻¹ ⊆ X.
pub fn is_strong_alternative_code(x: &Language, y: &Language) -> Result<bool> {
    if !is_alternative_code(x, y)? {
        return Ok(false);
    }
    let z = x.concat(y)?;
    Ok(z.left_quotient_lang(x)?.subset_of(y)? && z.right_quotient_lang(y)?.subset_of(x)?)
}

/// X is thin iff some word is not an infix of any word of X.
pub fn is_thin(x: &Language) -> Result<bool> {
    let factors = x.factors()?;
    Ok(factors != Language::universe(x.alphabet()))
}

/// A code X is complete iff every word is a factor of some word of X*.
/// For thin (in particular regular) codes this is equivalent to maximality.
pub fn is_complete_code(x: &Language) -> Result<bool> {
    let trace = is_code(x)?;
    if !trace.is_code() {
        return Err(Error::NotACode { witness: trace.witness.map(|a| a.word) });
    }
    let closure = x.star()?.factors()?;
    Ok(closure == Language::universe(x.alphabet()))
}

/// The full boolean vector of class memberships for one language.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CodeClassReport {
    pub code: bool,
    pub prefix: bool,
    pub suffix: bool,
    pub bifix: bool,
    pub p_infix: bool,
    pub s_infix: bool,
    pub infix: bool,
    pub p_subinfix: bool,
    pub s_subinfix: bool,
    pub subinfix: bool,
    pub hypercode: bool,
    pub thin: bool,
    pub complete: bool,
}

impl CodeClassReport {
    /// The implication lattice every report must satisfy.
    pub fn hierarchy_holds(&self) -> bool {
        let implies = |a: bool, b: bool| !a || b;
        self.bifix == (self.prefix && self.suffix)
            && self.infix == (self.p_infix && self.s_infix)
            && self.subinfix == (self.p_subinfix && self.s_subinfix)
            && implies(self.p_subinfix, self.p_infix)
            && implies(self.s_subinfix, self.s_infix)
            && implies(self.hypercode, self.subinfix)
            && implies(self.p_infix, self.prefix)
            && implies(self.s_infix, self.suffix)
            && implies(self.prefix || self.suffix, self.code)
            && implies(self.complete, self.code)
    }
}

/// Evaluates every class predicate on X.
pub fn classify(x: &Language) -> Result<CodeClassReport> {
    let trace = is_code(x)?;
    let code = trace.is_code();
    let prefix = is_prefix_code(x)?;
    let suffix = is_suffix_code(x)?;
    let flags = infix_family(x)?;
    let thin = is_thin(x)?;
    let complete = if code {
        x.star()?.factors()? == Language::universe(x.alphabet())
    } else {
        false
    };
    let report = CodeClassReport {
        code,
        prefix,
        suffix,
        bifix: prefix && suffix,
        p_infix: flags.p_infix,
        s_infix: flags.s_infix,
        infix: flags.infix,
        p_subinfix: flags.p_subinfix,
        s_subinfix: flags.s_subinfix,
        subinfix: flags.subinfix,
        hypercode: flags.hypercode,
        thin,
        complete,
    };
    debug_assert!(report.hierarchy_holds());
    Ok(report)
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

    fn w(s: &str) -> Word {
        Word::parse(&ab(), s).unwrap()
    }

    #[test]
    fn sardinas_patterson_verdicts() {
        assert!(is_code(&lang(&["aab", "aaba", "baab", "baaba"])).unwrap().is_code());
        assert!(is_code(&lang(&["a"])).unwrap().is_code());

        let trace = is_code(&lang(&["a", "ab", "ba"])).unwrap();
        assert!(!trace.is_code());
        let amb = trace.witness.unwrap();
        assert_eq!(amb.word, w("aba"));
        assert_ne!(amb.left, amb.right);
        for f in [&amb.left, &amb.right] {
            let cat = f.iter().fold(Word::epsilon(&ab()), |acc, p| acc.concat(p));
            assert_eq!(cat, amb.word);
        }
    }

    #[test]
    fn sardinas_patterson_on_infinite_language() {
        // a*b is a (maximal) prefix code
        let x = Language::from_regex("a*b", &ab()).unwrap();
        assert!(is_code(&x).unwrap().is_code());
        // a* ∪ b is not a code (aa = a·a)
        let y = Language::from_regex("aa*+b", &ab()).unwrap();
        let trace = is_code(&y).unwrap();
        assert!(!trace.is_code());
        let amb = trace.witness.unwrap();
        let cat = |f: &Vec<Word>| f.iter().fold(Word::epsilon(&ab()), |acc, p| acc.concat(p));
        assert_eq!(cat(&amb.left), amb.word);
        assert_eq!(cat(&amb.right), amb.word);
        assert_ne!(amb.left, amb.right);
    }

    #[test]
    fn code_input_contract() {
        assert!(matches!(is_code(&Language::empty(&ab())), Err(Error::EmptyLanguage)));
        assert!(matches!(
            is_code(&Language::epsilon(&ab())),
            Err(Error::EpsilonInCode)
        ));
    }

    #[test]
    fn edge_class_predicates() {
        assert!(is_prefix_code(&lang(&["aa", "baa"])).unwrap());
        assert!(is_suffix_code(&lang(&["b", "ba"])).unwrap());
        let x = lang(&["a", "ab"]);
        assert!(!is_prefix_code(&x).unwrap());
        assert!(is_suffix_code(&x).unwrap());
        assert!(is_bifix_code(&lang(&["ab", "ba"])).unwrap());
    }

    #[test]
    fn infix_family_examples() {
        let f = infix_family(&lang(&["ab", "ba"])).unwrap();
        assert!(f.hypercode && f.subinfix && f.infix && f.p_infix && f.s_infix);

        let f = infix_family(&lang(&["a", "ab"])).unwrap();
        assert!(!f.p_infix);

        let f = infix_family(&lang(&["aa", "bb"])).unwrap();
        assert!(f.infix);

        // infinite languages are never hypercodes
        let f = infix_family(&Language::from_regex("a*b", &ab()).unwrap()).unwrap();
        assert!(!f.hypercode);
    }

    #[test]
    fn product_unambiguity() {
        let x = lang(&["aa", "baa"]);
        let y = lang(&["b", "ba"]);
        assert!(unambiguous_product(&x, &y).unwrap().is_unambiguous());

        let x = lang(&["a", "ab"]);
        let y = lang(&["b", "bb"]);
        match unambiguous_product(&x, &y).unwrap() {
            ProductAmbiguity::Ambiguous { word, pair_a, pair_b } => {
                assert_eq!(word, w("abb"));
                assert_ne!(pair_a, pair_b);
                assert_eq!(pair_a.0.concat(&pair_a.1), word);
                assert_eq!(pair_b.0.concat(&pair_b.1), word);
            }
            _ => panic!("expected ambiguity"),
        }

        assert!(unambiguous_product(&lang(&["a"]), &lang(&["b"])).unwrap().is_unambiguous());
    }

    #[test]
    fn alternative_codes() {
        assert!(is_alternative_code(&lang(&["aa", "baa"]), &lang(&["b", "ba"])).unwrap());
        assert!(!is_alternative_code(&lang(&["a", "ab"]), &lang(&["b", "bb"])).unwrap());
        assert!(is_alternative_code(&lang(&["a"]), &lang(&["b"])).unwrap());

        // alternative but not strong: bb ∈ a⁻¹(XY) escapes Y
        let x = lang(&["a", "ab"]);
        let y = lang(&["b"]);
        assert!(is_alternative_code(&x, &y).unwrap());
        assert!(!is_strong_alternative_code(&x, &y).unwrap());

        assert!(is_strong_alternative_code(&lang(&["aa", "baa"]), &lang(&["b", "ba"])).unwrap());
        assert!(is_strong_alternative_code(&lang(&["a"]), &lang(&["b"])).unwrap());
        // the early witness for the four-word walkthrough set is also strong
        assert!(is_strong_alternative_code(&lang(&["a", "ba"]), &lang(&["ab", "aba"])).unwrap());
    }

    #[test]
    fn thin_and_complete() {
        assert!(is_thin(&lang(&["aab", "baaba"])).unwrap());
        assert!(!is_thin(&Language::universe(&ab())).unwrap());
        let astarb = Language::from_regex("a*b", &ab()).unwrap();
        assert!(is_thin(&astarb).unwrap());

        assert!(is_complete_code(&lang(&["a", "b"])).unwrap());
        assert!(!is_complete_code(&lang(&["aa"])).unwrap());
        assert!(is_complete_code(&astarb).unwrap());
        assert!(matches!(
            is_complete_code(&lang(&["a", "ab", "ba"])),
            Err(Error::NotACode { .. })
        ));
    }

    #[test]
    fn classify_report() {
        let r = classify(&lang(&["a", "ab"])).unwrap();
        assert!(r.code && !r.prefix && r.suffix && !r.bifix);
        assert!(r.hierarchy_holds());

        let r = classify(&Language::from_regex("a*b", &ab()).unwrap()).unwrap();
        assert!(r.code && r.prefix && !r.suffix && r.thin && r.complete);
        assert!(r.hierarchy_holds());
    }

    #[test]
    fn strong_alternative_matches_structural_characterization() {
        // (X,Y) strong alternative ⟺ X prefix ∧ Y suffix ∧ XY code,
        // cross-checked on a small deterministic grid
        let pool = ["a", "b", "aa", "ab", "ba", "bb", "aba"];
        let mut checked = 0usize;
        for i in 0..pool.len() {
            for j in 0..pool.len() {
                let x = lang(&[pool[i], pool[(i + 2) % pool.len()]]);
                let y = lang(&[pool[j], pool[(j + 3) % pool.len()]]);
                let lhs = is_strong_alternative_code(&x, &y).unwrap();
                let rhs = is_prefix_code(&x).unwrap()
                    && is_suffix_code(&y).unwrap()
                    && is_code(&x.concat(&y).unwrap()).unwrap().is_code();
                assert_eq!(lhs, rhs, "X={x} Y={y}");
                checked += 1;
            }
        }
        assert!(checked >= 40);
    }

    #[test]
    fn sardinas_agrees_with_brute_force_on_small_sets() {
        let pool = ["a", "b", "aa", "ab", "ba", "bb", "aab", "aba", "bab"];
        let mut idx = 0usize;
        for i in 0..pool.len() {
            for j in i + 1..pool.len() {
                for l in j + 1..pool.len() {
                    idx += 1;
                    if idx.is_multiple_of(2) {
                        continue;
                    }
                    let x = lang(&[pool[i], pool[j], pool[l]]);
                    let exact = is_code(&x).unwrap().is_code();
                    let brute = matches!(
                        oracle::brute_is_code(&x, 12).unwrap(),
                        oracle::BruteCodeVerdict::CodeUpToBound
                    );
                    assert_eq!(exact, brute, "set {x}");
                }
            }
        }
    }
}
