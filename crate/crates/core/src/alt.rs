//! Strong alternative pairs and the codes they induce.
//!
//! A language Z is a *strong alt-induced code* when Z = XY for a strong
//! alternative code (X, Y) — equivalently, when X is a prefix code, Y is a
//! suffix code, and XY is a code. [`rsic`] decides the property for regular
//! codes: every candidate Y arises as u⁻¹Z for a proper prefix u of a
//! shortest word of Z, because X = Zy⁻¹ and Y = x⁻¹Z hold for every x ∈ X,
//! y ∈ Y whenever Z = XY is strong alt-induced.

use crate::alphabet::Word;
use crate::codes::{self, CodeClassReport};
use crate::embed;
use crate::error::{Error, Result};
use crate::language::Language;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RsicVerdict {
    StrongAltInduced,
    NotStrongAltInduced,
}

/// Why a candidate prefix was rejected (or that it was accepted).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrefixOutcome {
    /// YY⁻¹ ≠ {ε}: the quotient u⁻¹Z is not a suffix code.
    RejectedNotSuffixCode,
    /// X⁻¹X ≠ {ε}: the right quotient Zy⁻¹ is not a prefix code.
    RejectedNotPrefixCode,
    /// XY ≠ Z.
    RejectedProductMismatch,
    Accepted,
}

#[derive(Debug, Clone)]
pub struct RsicStep {
    pub prefix: Word,
    /// Y = u⁻¹Z for this prefix.
    pub quotient: Language,
    pub outcome: PrefixOutcome,
}

#[derive(Debug, Clone)]
pub struct RsicResult {
    pub verdict: RsicVerdict,
    pub witness: Option<(Language, Language)>,
    pub trace: Vec<RsicStep>,
}

impl RsicResult {
    pub fn is_strong_alt_induced(&self) -> bool {
        self.verdict == RsicVerdict::StrongAltInduced
    }
}

/// Decides whether the regular code Z is a strong alt-induced code.
///
/// Scans the proper prefixes u of a shortest word of Z in increasing
/// length; for each, Y = u⁻¹Z, and if Y is a suffix code, X = Zy⁻¹ for the
/// shortest y ∈ Y. The first candidate with X a prefix code and XY = Z
/// proves the property. Exhausting the prefixes disproves it.
pub fn rsic(z: &Language) -> Result<RsicResult> {
    if z.is_empty() {
        return Err(Error::EmptyLanguage);
    }
    if z.contains_epsilon() {
        return Err(Error::EpsilonInCode);
    }
    let trace = codes::is_code(z)?;
    if !trace.is_code() {
        return Err(Error::NotACode { witness: trace.witness.map(|a| a.word) });
    }

    let w = z.shortest_word()?;
    let mut steps: Vec<RsicStep> = Vec::new();
    for cut in 1..w.len() {
        let u = w.prefix(cut);
        let (outcome, witness) = try_prefix(z, &u)?;
        let y = z.left_quotient(&u)?;
        steps.push(RsicStep { prefix: u, quotient: y, outcome });
        if let Some((x, y)) = witness {
            debug_assert!(verify_witness(&x, &y, z)?.holds());
            return Ok(RsicResult {
                verdict: RsicVerdict::StrongAltInduced,
                witness: Some((x, y)),
                trace: steps,
            });
        }
    }
    Ok(RsicResult { verdict: RsicVerdict::NotStrongAltInduced, witness: None, trace: steps })
}

/// One loop iteration of [`rsic`] at a caller-chosen prefix candidate.
/// Useful for inspecting decompositions the first-success scan skips.
pub fn rsic_witness_at(z: &Language, u: &Word) -> Result<(PrefixOutcome, Option<(Language, Language)>)> {
    try_prefix(z, u)
}

fn try_prefix(z: &Language, u: &Word) -> Result<(PrefixOutcome, Option<(Language, Language)>)> {
    let y = z.left_quotient(u)?;
    if !y.right_quotient_lang(&y)?.is_epsilon_only() {
        return Ok((PrefixOutcome::RejectedNotSuffixCode, None));
    }
    // Y is a non-empty suffix code here; take its shortest word
    let y_word = y.shortest_word()?;
    let x = z.right_quotient(&y_word)?;
    if !x.left_quotient_lang(&x)?.is_epsilon_only() {
        return Ok((PrefixOutcome::RejectedNotPrefixCode, None));
    }
    if x.concat(&y)? != *z {
        return Ok((PrefixOutcome::RejectedProductMismatch, None));
    }
    Ok((PrefixOutcome::Accepted, Some((x, y))))
}

/// Per-conjunct evidence that (X, Y) witnesses Z as a strong alt-induced code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessReport {
    pub x_is_prefix_code: bool,
    pub y_is_suffix_code: bool,
    pub z_is_code: bool,
    pub product_equals_z: bool,
    /// X⁻¹Z ⊆ Y (first inclusion of the strong-alternative definition).
    pub left_inclusion: bool,
    /// ZY⁻¹ ⊆ X (second inclusion).
    pub right_inclusion: bool,
}

impl WitnessReport {
    /// The characterization: X prefix, Y suffix, Z a code, XY = Z.
    pub fn holds(&self) -> bool {
        self.x_is_prefix_code && self.y_is_suffix_code && self.z_is_code && self.product_equals_z
    }

    /// The defining inclusions of strong alternative codes.
    pub fn strong_inclusions_hold(&self) -> bool {
        self.left_inclusion && self.right_inclusion
    }
}

pub fn verify_witness(x: &Language, y: &Language, z: &Language) -> Result<WitnessReport> {
    if x.alphabet() != y.alphabet() || x.alphabet() != z.alphabet() {
        return Err(Error::AlphabetMismatch);
    }
    let x_is_prefix_code = codes::is_prefix_code(x)?;
    let y_is_suffix_code = codes::is_suffix_code(y)?;
    let z_is_code = codes::is_code(z)?.is_code();
    let product_equals_z = x.concat(y)? == *z;
    let left_inclusion = z.left_quotient_lang(x)?.subset_of(y)?;
    let right_inclusion = z.right_quotient_lang(y)?.subset_of(x)?;
    Ok(WitnessReport {
        x_is_prefix_code,
        y_is_suffix_code,
        z_is_code,
        product_equals_z,
        left_inclusion,
        right_inclusion,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TriState {
    Holds,
    Fails,
    /// The maximality characterization needs thinness, which failed to verify.
    NeedsThinness,
}

impl TriState {
    fn from_bool(b: bool) -> TriState {
        if b {
            TriState::Holds
        } else {
            TriState::Fails
        }
    }

    pub fn holds(&self) -> bool {
        matches!(self, TriState::Holds)
    }
}

/// Which prefix/suffix/bifix subclasses the induced code XY belongs to,
/// read off the witness pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubclassReport {
    pub prefix_sai: TriState,
    pub maximal_prefix_sai: TriState,
    pub suffix_sai: TriState,
    pub maximal_suffix_sai: TriState,
    pub bifix_sai: TriState,
    pub maximal_bifix_sai: TriState,
}

/// Characterizes XY's subclass membership from the witness:
/// - XY is a prefix (maximal prefix) SAI code iff X is a prefix (maximal
///   prefix) code and Y is a bifix code (maximal prefix + bifix);
/// - dually for suffix;
/// - XY is a bifix (maximal bifix thin) SAI code iff X and Y are bifix
///   (maximal bifix thin) codes.
pub fn subclass_characterize(x: &Language, y: &Language) -> Result<SubclassReport> {
    let z = x.concat(y)?;
    let witness = verify_witness(x, y, &z)?;
    if !witness.holds() {
        return Err(Error::InvalidWitness(format!(
            "pair does not witness a strong alt-induced code: {witness:?}"
        )));
    }

    let x_prefix = witness.x_is_prefix_code;
    let y_suffix = witness.y_is_suffix_code;
    let x_suffix = codes::is_suffix_code(x)?;
    let y_prefix = codes::is_prefix_code(y)?;
    let x_bifix = x_prefix && x_suffix;
    let y_bifix = y_prefix && y_suffix;
    let x_thin = codes::is_thin(x)?;
    let y_thin = codes::is_thin(y)?;

    let prefix_sai = TriState::from_bool(x_prefix && y_bifix);
    let suffix_sai = TriState::from_bool(x_bifix && y_suffix);
    let bifix_sai = TriState::from_bool(x_bifix && y_bifix);

    let maximal_prefix_sai = if !(x_prefix && y_bifix && y_prefix) {
        TriState::Fails
    } else {
        TriState::from_bool(
            embed::is_maximal_prefix(x)? && embed::is_maximal_prefix(y)?,
        )
    };
    let maximal_suffix_sai = if !(x_bifix && x_suffix && y_suffix) {
        TriState::Fails
    } else {
        TriState::from_bool(
            embed::is_maximal_suffix(x)? && embed::is_maximal_suffix(y)?,
        )
    };
    let maximal_bifix_sai = if !(x_bifix && y_bifix) {
        TriState::Fails
    } else if !(x_thin && y_thin) {
        TriState::NeedsThinness
    } else {
        TriState::from_bool(embed::is_maximal_bifix(x)? && embed::is_maximal_bifix(y)?)
    };

    Ok(SubclassReport {
        prefix_sai,
        maximal_prefix_sai,
        suffix_sai,
        maximal_suffix_sai,
        bifix_sai,
        maximal_bifix_sai,
    })
}

/// The code classes closed under products of (strong) alt-induced codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CodeClass {
    Prefix,
    Suffix,
    Bifix,
    PInfix,
    SInfix,
    Infix,
    PSubinfix,
    SSubinfix,
    Subinfix,
    Hyper,
}

impl CodeClass {
    pub fn holds_in(&self, report: &CodeClassReport) -> bool {
        match self {
            CodeClass::Prefix => report.prefix,
            CodeClass::Suffix => report.suffix,
            CodeClass::Bifix => report.bifix,
            CodeClass::PInfix => report.p_infix,
            CodeClass::SInfix => report.s_infix,
            CodeClass::Infix => report.infix,
            CodeClass::PSubinfix => report.p_subinfix,
            CodeClass::SSubinfix => report.s_subinfix,
            CodeClass::Subinfix => report.subinfix,
            CodeClass::Hyper => report.hypercode,
        }
    }

    /// Classes whose codes are necessarily prefix codes. For the rest
    /// (suffix-sided classes) the dual composition is used.
    fn implies_prefix(&self) -> bool {
        !matches!(self, CodeClass::Suffix | CodeClass::SInfix | CodeClass::SSubinfix)
    }

    pub fn name(&self) -> &'static str {
        match self {
            CodeClass::Prefix => "prefix",
            CodeClass::Suffix => "suffix",
            CodeClass::Bifix => "bifix",
            CodeClass::PInfix => "p-infix",
            CodeClass::SInfix => "s-infix",
            CodeClass::Infix => "infix",
            CodeClass::PSubinfix => "p-subinfix",
            CodeClass::SSubinfix => "s-subinfix",
            CodeClass::Subinfix => "subinfix",
            CodeClass::Hyper => "hypercode",
        }
    }
}

/// Composes two class-restricted witnesses into one for the product code
/// ZZ′: for prefix-sided classes X″ = (XY)X′ and Y″ = Y′; for suffix-sided
/// classes X″ = X and Y″ = Y(X′Y′). The composed pair is re-verified and
/// the product's class membership re-checked before returning.
pub fn product_compose(
    w1: (&Language, &Language),
    w2: (&Language, &Language),
    class: CodeClass,
) -> Result<(Language, Language)> {
    let (x1, y1) = w1;
    let (x2, y2) = w2;
    let z1 = x1.concat(y1)?;
    let z2 = x2.concat(y2)?;
    for (x, y, z) in [(x1, y1, &z1), (x2, y2, &z2)] {
        if !verify_witness(x, y, z)?.holds() {
            return Err(Error::InvalidWitness("input pair does not verify".into()));
        }
        if !class.holds_in(&codes::classify(z)?) {
            return Err(Error::ClassViolation(format!(
                "input product is not a {} code",
                class.name()
            )));
        }
    }

    let (xc, yc) = if class.implies_prefix() {
        (z1.concat(x2)?, y2.clone())
    } else {
        (x1.clone(), y1.concat(&z2)?)
    };
    let zz = z1.concat(&z2)?;
    if !verify_witness(&xc, &yc, &zz)?.holds() {
        return Err(Error::ClassViolation(
            "composed pair fails witness verification".into(),
        ));
    }
    if !class.holds_in(&codes::classify(&zz)?) {
        return Err(Error::ClassViolation(format!(
            "composed product is not a {} code",
            class.name()
        )));
    }
    Ok((xc, yc))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
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
    fn rsic_four_word_walkthrough_set() {
        // Z = {a²b, a²ba, ba²b, ba²ba}. The scan already succeeds at u = a:
        // Y = a⁻¹Z = {ab, aba} is a suffix code and X = Z(ab)⁻¹ = {a, ba}
        // is a prefix code with XY = Z.
        let z = lang(&["aab", "aaba", "baab", "baaba"]);
        let r = rsic(&z).unwrap();
        assert!(r.is_strong_alt_induced());
        assert_eq!(r.trace.len(), 1);
        assert_eq!(r.trace[0].prefix, w("a"));
        assert_eq!(r.trace[0].outcome, PrefixOutcome::Accepted);
        let (x, y) = r.witness.unwrap();
        assert_eq!(x, lang(&["a", "ba"]));
        assert_eq!(y, lang(&["ab", "aba"]));

        // The longer prefix u = aa yields the other decomposition.
        let (outcome, alt) = rsic_witness_at(&z, &w("aa")).unwrap();
        assert_eq!(outcome, PrefixOutcome::Accepted);
        let (x2, y2) = alt.unwrap();
        assert_eq!(x2, lang(&["aa", "baa"]));
        assert_eq!(y2, lang(&["b", "ba"]));
        assert!(verify_witness(&x2, &y2, &z).unwrap().holds());
    }

    #[test]
    fn rsic_rejects_overlapping_quotients() {
        // Z = {aⁿb², aⁿb²ab | n ≥ 1}: both prefixes of w = ab² fail the
        // suffix-code test on u⁻¹Z.
        let z = re("aa*bb+aa*bbab");
        let r = rsic(&z).unwrap();
        assert!(!r.is_strong_alt_induced());
        assert_eq!(r.trace.len(), 2);
        assert_eq!(r.trace[0].prefix, w("a"));
        assert_eq!(r.trace[0].outcome, PrefixOutcome::RejectedNotSuffixCode);
        assert_eq!(r.trace[1].prefix, w("ab"));
        assert_eq!(r.trace[1].outcome, PrefixOutcome::RejectedNotSuffixCode);
        assert_eq!(r.trace[1].quotient, lang(&["b", "bab"]));
    }

    #[test]
    fn rsic_infinite_positive_instance() {
        // Z = {bⁿa²bᵐa | n,m ≥ 1}: u = b rejected, u = ba accepted with
        // X = {bⁿa}, Y = {abᵐa}.
        let z = re("bb*aabb*a");
        let r = rsic(&z).unwrap();
        assert!(r.is_strong_alt_induced());
        assert_eq!(r.trace.len(), 2);
        assert_eq!(r.trace[0].prefix, w("b"));
        assert_eq!(r.trace[0].outcome, PrefixOutcome::RejectedNotSuffixCode);
        assert_eq!(r.trace[1].prefix, w("ba"));
        assert_eq!(r.trace[1].outcome, PrefixOutcome::Accepted);
        let (x, y) = r.witness.unwrap();
        assert_eq!(x, re("bb*a"));
        assert_eq!(y, re("abb*a"));
    }

    #[test]
    fn rsic_trace_prefix_lengths_increase() {
        let z = re("bb*aabb*a");
        let r = rsic(&z).unwrap();
        for pair in r.trace.windows(2) {
            assert!(pair[0].prefix.len() < pair[1].prefix.len());
        }
    }

    #[test]
    fn rsic_input_contract() {
        assert!(matches!(rsic(&Language::empty(&ab())), Err(Error::EmptyLanguage)));
        assert!(matches!(rsic(&Language::epsilon(&ab())), Err(Error::EpsilonInCode)));
        assert!(matches!(
            rsic(&lang(&["a", "ab", "ba"])),
            Err(Error::NotACode { witness: Some(_) })
        ));
    }

    #[test]
    fn rsic_min_length_one_is_negative() {
        // a 1-letter word cannot be in any product of two ε-free sets
        let r = rsic(&lang(&["a", "ba"])).unwrap();
        assert!(!r.is_strong_alt_induced());
        assert!(r.trace.is_empty());
    }

    #[test]
    fn witness_verification() {
        let z = lang(&["aab", "aaba", "baab", "baaba"]);
        let rep = verify_witness(&lang(&["aa", "baa"]), &lang(&["b", "ba"]), &z).unwrap();
        assert!(rep.holds() && rep.strong_inclusions_hold());

        let bad = verify_witness(&lang(&["a", "ab"]), &lang(&["b"]), &lang(&["ab", "abb"])).unwrap();
        assert!(!bad.holds());
        assert!(!bad.x_is_prefix_code);

        let z3 = re("bb*aabb*a");
        let rep = verify_witness(&re("bb*a"), &re("abb*a"), &z3).unwrap();
        assert!(rep.holds() && rep.strong_inclusions_hold());
    }

    #[test]
    fn prop9_quotients_recover_the_witness() {
        // for a positive verdict: x⁻¹Z = Y for x ∈ X and Zy⁻¹ = X for y ∈ Y
        let z = re("bb*aabb*a");
        let (x, y) = rsic(&z).unwrap().witness.unwrap();
        for xw in x.enumerate(6) {
            assert_eq!(z.left_quotient(&xw).unwrap(), y);
        }
        for yw in y.enumerate(6) {
            assert_eq!(z.right_quotient(&yw).unwrap(), x);
        }
    }

    #[test]
    fn subclass_reports_match_embedding_examples() {
        // X = (aa)*b prefix, Y = ab*ab bifix → prefix-SAI
        let rep = subclass_characterize(&re("(aa)*b"), &re("ab*ab")).unwrap();
        assert!(rep.prefix_sai.holds());
        assert!(!rep.suffix_sai.holds());

        // X = b+a(bb)*a bifix, Y = a+ab suffix → suffix-SAI
        let rep = subclass_characterize(&re("b+a(bb)*a"), &re("a+ab")).unwrap();
        assert!(rep.suffix_sai.holds());
        assert!(!rep.prefix_sai.holds());

        // over {a,b,c}: X = a+c and Y = c(a+b)*c both bifix → bifix-SAI
        let abc = Alphabet::from_str_symbols("abc").unwrap();
        let x = Language::from_regex("a+c", &abc).unwrap();
        let y = Language::from_regex("c(a+b)*c", &abc).unwrap();
        let rep = subclass_characterize(&x, &y).unwrap();
        assert!(rep.bifix_sai.holds() && rep.prefix_sai.holds() && rep.suffix_sai.holds());
    }

    #[test]
    fn subclass_rejects_non_witnesses() {
        assert!(matches!(
            subclass_characterize(&lang(&["a", "ab"]), &lang(&["b"])),
            Err(Error::InvalidWitness(_))
        ));
    }

    #[test]
    fn compose_prefix_class() {
        // ({a,ba},{a,bb}) × ({a,ba},{a}) — finite prefix-SAI pairs
        let x1 = lang(&["a", "ba"]);
        let y1 = lang(&["a", "bb"]);
        let x2 = lang(&["a", "ba"]);
        let y2 = lang(&["a"]);
        let (xc, yc) = product_compose((&x1, &y1), (&x2, &y2), CodeClass::Prefix).unwrap();
        assert_eq!(xc, x1.concat(&y1).unwrap().concat(&x2).unwrap());
        assert_eq!(yc, y2);
        let zz = x1
            .concat(&y1)
            .unwrap()
            .concat(&x2.concat(&y2).unwrap())
            .unwrap();
        assert!(verify_witness(&xc, &yc, &zz).unwrap().holds());
        assert!(codes::is_prefix_code(&zz).unwrap());
    }

    #[test]
    fn compose_singletons() {
        let x = lang(&["a"]);
        let y = lang(&["b"]);
        let (xc, yc) = product_compose((&x, &y), (&x, &y), CodeClass::Prefix).unwrap();
        assert_eq!(xc, lang(&["aba"]));
        assert_eq!(yc, lang(&["b"]));
    }

    #[test]
    fn compose_bifix_class() {
        let abc = Alphabet::from_str_symbols("abc").unwrap();
        let x = Language::from_regex("a+c", &abc).unwrap();
        let y = Language::from_regex("c(a+b)*c", &abc).unwrap();
        let (xc, yc) = product_compose((&x, &y), (&x, &y), CodeClass::Bifix).unwrap();
        let zz = x.concat(&y).unwrap().concat(&x.concat(&y).unwrap()).unwrap();
        let rep = verify_witness(&xc, &yc, &zz).unwrap();
        assert!(rep.holds());
        assert!(codes::is_bifix_code(&zz).unwrap());
    }

    #[test]
    fn compose_suffix_class_uses_dual_composition() {
        let x = re("b+a(bb)*a"); // bifix
        let y = re("a+ab"); // suffix
        let (xc, yc) = product_compose((&x, &y), (&x, &y), CodeClass::Suffix).unwrap();
        // X″ = X, Y″ = Y(X′Y′)
        assert_eq!(xc, x);
        assert_eq!(yc, y.concat(&x.concat(&y).unwrap()).unwrap());
        let zz = x.concat(&y).unwrap();
        let zz = zz.concat(&zz).unwrap();
        assert!(verify_witness(&xc, &yc, &zz).unwrap().holds());
        assert!(codes::is_suffix_code(&zz).unwrap());
    }

    #[test]
    fn compose_rejects_class_violations() {
        // {a,ab} is not a prefix code, so its pair is no prefix-SAI witness
        let x = lang(&["a", "ab"]);
        let y = lang(&["b"]);
        assert!(matches!(
            product_compose((&x, &y), (&x, &y), CodeClass::Prefix),
            Err(Error::InvalidWitness(_)) | Err(Error::ClassViolation(_))
        ));
    }
}
