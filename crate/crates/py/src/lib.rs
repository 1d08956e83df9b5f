//! Python bindings for the altcodes toolkit: the `Language` type plus the
//! decision procedures and embedding constructions as module functions.

use std::collections::BTreeMap;
use std::sync::Arc;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::IntoPyObjectExt;
use pyo3::types::PyDict;

use altcodes::alphabet::{Alphabet, Word};
use altcodes::alt;
use altcodes::codes;
use altcodes::embed;
use altcodes::language::Language as CoreLanguage;
use altcodes::render::Rendered;

fn err(e: altcodes::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_alphabet(symbols: &str) -> PyResult<Arc<Alphabet>> {
    Alphabet::from_str_symbols(symbols).map_err(err)
}

fn parse_class(name: &str) -> PyResult<embed::CompletionClass> {
    match name {
        "prefix" => Ok(embed::CompletionClass::Prefix),
        "suffix" => Ok(embed::CompletionClass::Suffix),
        "bifix" => Ok(embed::CompletionClass::Bifix),
        other => Err(PyValueError::new_err(format!("unknown class '{other}'"))),
    }
}

/// A regular language over a fixed alphabet with canonical identity.
#[pyclass(frozen, name = "Language", skip_from_py_object)]
#[derive(Clone)]
struct PyLanguage {
    inner: CoreLanguage,
}

impl PyLanguage {
    fn wrap(inner: CoreLanguage) -> PyLanguage {
        PyLanguage { inner }
    }

    fn word(&self, text: &str) -> PyResult<Word> {
        Word::parse(self.inner.alphabet(), text).map_err(err)
    }
}

#[pymethods]
impl PyLanguage {
    /// Build a finite language from a word list.
    #[staticmethod]
    fn from_words(alphabet: &str, words: Vec<String>) -> PyResult<Self> {
        let al = parse_alphabet(alphabet)?;
        Ok(Self::wrap(CoreLanguage::from_word_strs(&al, words).map_err(err)?))
    }

    /// Compile a regex of the input dialect ('+' union, juxtaposition, '*').
    #[staticmethod]
    fn from_regex(alphabet: &str, pattern: &str) -> PyResult<Self> {
        let al = parse_alphabet(alphabet)?;
        Ok(Self::wrap(CoreLanguage::from_regex(pattern, &al).map_err(err)?))
    }

    fn alphabet(&self) -> String {
        self.inner.alphabet().symbols().iter().collect()
    }

    fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    fn is_finite(&self) -> bool {
        self.inner.is_finite()
    }

    fn word_count(&self) -> Option<u64> {
        self.inner.word_count()
    }

    fn state_count(&self) -> usize {
        self.inner.state_count()
    }

    fn contains(&self, word: &str) -> PyResult<bool> {
        Ok(self.inner.contains(&self.word(word)?))
    }

    fn shortest_word(&self) -> PyResult<String> {
        Ok(self.inner.shortest_word().map_err(err)?.as_string())
    }

    /// All words of length up to `maxlen`, in length-then-lex order.
    fn enumerate(&self, maxlen: usize) -> Vec<String> {
        self.inner.enumerate(maxlen).iter().map(|w| w.as_string()).collect()
    }

    /// `("words", [...], False)` for finite languages, otherwise
    /// `("regex", pattern, includes_epsilon)`.
    fn render(&self, py: Python<'_>) -> PyResult<(String, Py<PyAny>, bool)> {
        match self.inner.render().map_err(err)? {
            Rendered::Words(words) => {
                Ok(("words".to_string(), words.into_py_any(py)?, false))
            }
            Rendered::Regex { pattern, includes_epsilon } => {
                Ok(("regex".to_string(), pattern.into_py_any(py)?, includes_epsilon))
            }
        }
    }

    fn union(&self, other: &PyLanguage) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.union(&other.inner).map_err(err)?))
    }

    fn intersect(&self, other: &PyLanguage) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.intersect(&other.inner).map_err(err)?))
    }

    fn difference(&self, other: &PyLanguage) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.difference(&other.inner).map_err(err)?))
    }

    fn complement(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.complement().map_err(err)?))
    }

    fn concat(&self, other: &PyLanguage) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.concat(&other.inner).map_err(err)?))
    }

    fn star(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.star().map_err(err)?))
    }

    fn reverse(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.reverse().map_err(err)?))
    }

    /// u⁻¹X.
    fn left_quotient(&self, word: &str) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.left_quotient(&self.word(word)?).map_err(err)?))
    }

    /// Xu⁻¹.
    fn right_quotient(&self, word: &str) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.right_quotient(&self.word(word)?).map_err(err)?))
    }

    fn proper_prefixes(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.proper_prefixes().map_err(err)?))
    }

    fn proper_suffixes(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.proper_suffixes().map_err(err)?))
    }

    fn factors(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.factors().map_err(err)?))
    }

    fn upward_closure(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.upward_closure().map_err(err)?))
    }

    fn strict_upward_closure(&self) -> PyResult<Self> {
        Ok(Self::wrap(self.inner.strict_upward_closure().map_err(err)?))
    }

    fn subset_of(&self, other: &PyLanguage) -> PyResult<bool> {
        self.inner.subset_of(&other.inner).map_err(err)
    }

    fn __eq__(&self, other: &PyLanguage) -> bool {
        self.inner == other.inner
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{Hash, Hasher};
        let mut h = std::collections::hash_map::DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __repr__(&self) -> String {
        format!("Language({})", self.inner)
    }
}

/// Every code-class flag for one language, as a dict.
#[pyfunction]
fn classify(lang: &PyLanguage) -> PyResult<BTreeMap<String, bool>> {
    let r = codes::classify(&lang.inner).map_err(err)?;
    Ok(BTreeMap::from([
        ("code".into(), r.code),
        ("prefix".into(), r.prefix),
        ("suffix".into(), r.suffix),
        ("bifix".into(), r.bifix),
        ("p_infix".into(), r.p_infix),
        ("s_infix".into(), r.s_infix),
        ("infix".into(), r.infix),
        ("p_subinfix".into(), r.p_subinfix),
        ("s_subinfix".into(), r.s_subinfix),
        ("subinfix".into(), r.subinfix),
        ("hypercode".into(), r.hypercode),
        ("thin".into(), r.thin),
        ("complete".into(), r.complete),
    ]))
}

/// A double factorization: (word, factorization_a, factorization_b).
type CodeWitness = (String, Vec<String>, Vec<String>);

/// Sardinas–Patterson: returns (is_code, witness).
#[pyfunction]
fn is_code(lang: &PyLanguage) -> PyResult<(bool, Option<CodeWitness>)> {
    let trace = codes::is_code(&lang.inner).map_err(err)?;
    let witness = trace.witness.as_ref().map(|a| {
        (
            a.word.as_string(),
            a.left.iter().map(|w| w.as_string()).collect(),
            a.right.iter().map(|w| w.as_string()).collect(),
        )
    });
    Ok((trace.is_code(), witness))
}

#[pyfunction]
fn is_prefix_code(lang: &PyLanguage) -> PyResult<bool> {
    codes::is_prefix_code(&lang.inner).map_err(err)
}

#[pyfunction]
fn is_suffix_code(lang: &PyLanguage) -> PyResult<bool> {
    codes::is_suffix_code(&lang.inner).map_err(err)
}

#[pyfunction]
fn is_bifix_code(lang: &PyLanguage) -> PyResult<bool> {
    codes::is_bifix_code(&lang.inner).map_err(err)
}

#[pyfunction]
fn is_alternative_code(x: &PyLanguage, y: &PyLanguage) -> PyResult<bool> {
    codes::is_alternative_code(&x.inner, &y.inner).map_err(err)
}

#[pyfunction]
fn is_strong_alternative_code(x: &PyLanguage, y: &PyLanguage) -> PyResult<bool> {
    codes::is_strong_alternative_code(&x.inner, &y.inner).map_err(err)
}

/// Decide whether a regular code is strong alt-induced. Returns a dict with
/// the verdict, the witness pair (when positive), and the per-prefix trace.
#[pyfunction]
fn rsic(py: Python<'_>, lang: &PyLanguage) -> PyResult<Py<PyDict>> {
    let r = alt::rsic(&lang.inner).map_err(err)?;
    let out = PyDict::new(py);
    out.set_item("strong_alt_induced", r.is_strong_alt_induced())?;
    if let Some((x, y)) = &r.witness {
        out.set_item("x", PyLanguage::wrap(x.clone()).into_pyobject(py)?)?;
        out.set_item("y", PyLanguage::wrap(y.clone()).into_pyobject(py)?)?;
    }
    let trace: Vec<(String, String)> = r
        .trace
        .iter()
        .map(|s| {
            let outcome = match s.outcome {
                alt::PrefixOutcome::RejectedNotSuffixCode => "rejected-not-suffix-code",
                alt::PrefixOutcome::RejectedNotPrefixCode => "rejected-not-prefix-code",
                alt::PrefixOutcome::RejectedProductMismatch => "rejected-product-mismatch",
                alt::PrefixOutcome::Accepted => "accepted",
            };
            (s.prefix.as_string(), outcome.to_string())
        })
        .collect();
    out.set_item("trace", trace)?;
    Ok(out.into())
}

/// Check a witness pair against Z (Z defaults to XY when omitted).
#[pyfunction]
#[pyo3(signature = (x, y, z=None))]
fn verify_witness(
    x: &PyLanguage,
    y: &PyLanguage,
    z: Option<&PyLanguage>,
) -> PyResult<BTreeMap<String, bool>> {
    let z_lang = match z {
        Some(z) => z.inner.clone(),
        None => x.inner.concat(&y.inner).map_err(err)?,
    };
    let rep = alt::verify_witness(&x.inner, &y.inner, &z_lang).map_err(err)?;
    Ok(BTreeMap::from([
        ("witness_ok".into(), rep.holds()),
        ("x_prefix_code".into(), rep.x_is_prefix_code),
        ("y_suffix_code".into(), rep.y_is_suffix_code),
        ("z_code".into(), rep.z_is_code),
        ("product_equals_z".into(), rep.product_equals_z),
        ("left_inclusion_in_y".into(), rep.left_inclusion),
        ("right_inclusion_in_x".into(), rep.right_inclusion),
    ]))
}

/// Which prefix/suffix/bifix subclasses the induced code belongs to.
#[pyfunction]
fn subclass_characterize(x: &PyLanguage, y: &PyLanguage) -> PyResult<BTreeMap<String, String>> {
    let rep = alt::subclass_characterize(&x.inner, &y.inner).map_err(err)?;
    let name = |t: alt::TriState| {
        match t {
            alt::TriState::Holds => "holds",
            alt::TriState::Fails => "fails",
            alt::TriState::NeedsThinness => "needs-thinness",
        }
        .to_string()
    };
    Ok(BTreeMap::from([
        ("prefix_sai".into(), name(rep.prefix_sai)),
        ("maximal_prefix_sai".into(), name(rep.maximal_prefix_sai)),
        ("suffix_sai".into(), name(rep.suffix_sai)),
        ("maximal_suffix_sai".into(), name(rep.maximal_suffix_sai)),
        ("bifix_sai".into(), name(rep.bifix_sai)),
        ("maximal_bifix_sai".into(), name(rep.maximal_bifix_sai)),
    ]))
}

#[pyfunction]
fn is_maximal_prefix(lang: &PyLanguage) -> PyResult<bool> {
    embed::is_maximal_prefix(&lang.inner).map_err(err)
}

#[pyfunction]
fn is_maximal_suffix(lang: &PyLanguage) -> PyResult<bool> {
    embed::is_maximal_suffix(&lang.inner).map_err(err)
}

#[pyfunction]
fn is_maximal_bifix(lang: &PyLanguage) -> PyResult<bool> {
    embed::is_maximal_bifix(&lang.inner).map_err(err)
}

/// Embed a prefix code into a maximal one (finite inputs keep their
/// maximal word length).
#[pyfunction]
fn complete_prefix(lang: &PyLanguage) -> PyResult<PyLanguage> {
    let done = if lang.inner.is_finite() {
        embed::complete_prefix_finite(&lang.inner).map_err(err)?
    } else {
        embed::complete_prefix_regular(&lang.inner).map_err(err)?
    };
    Ok(PyLanguage::wrap(done.container))
}

#[pyfunction]
fn complete_suffix(lang: &PyLanguage) -> PyResult<PyLanguage> {
    let done = if lang.inner.is_finite() {
        embed::complete_suffix_finite(&lang.inner).map_err(err)?
    } else {
        embed::complete_suffix_regular(&lang.inner).map_err(err)?
    };
    Ok(PyLanguage::wrap(done.container))
}

/// Bounded search for a finite maximal bifix container; None when no
/// container exists within the bound.
#[pyfunction]
fn complete_bifix_bounded(lang: &PyLanguage, bound: usize) -> PyResult<Option<PyLanguage>> {
    match embed::complete_bifix_bounded(&lang.inner, bound).map_err(err)? {
        embed::BifixCompletion::Found(done) => Ok(Some(PyLanguage::wrap(done.container))),
        embed::BifixCompletion::NotFoundWithinBound => Ok(None),
    }
}

#[pyfunction]
fn verify_bifix_container(x: &PyLanguage, candidate: &PyLanguage) -> PyResult<bool> {
    Ok(embed::verify_bifix_container(&x.inner, &candidate.inner).map_err(err)?.holds())
}

/// Embed a strong alt-induced witness into a maximal-class pair.
#[pyfunction]
#[pyo3(signature = (x, y, class_name, mx=None, my=None, bound=6))]
fn embed_strong(
    x: &PyLanguage,
    y: &PyLanguage,
    class_name: &str,
    mx: Option<&PyLanguage>,
    my: Option<&PyLanguage>,
    bound: usize,
) -> PyResult<(PyLanguage, PyLanguage)> {
    let class = parse_class(class_name)?;
    let (mx_out, my_out) = embed::embed_strong(
        &x.inner,
        &y.inner,
        class,
        mx.map(|l| &l.inner),
        my.map(|l| &l.inner),
        bound,
    )
    .map_err(err)?;
    Ok((PyLanguage::wrap(mx_out), PyLanguage::wrap(my_out)))
}

/// The indicator (F, L) of a bifix code at one word.
#[pyfunction]
fn indicator(lang: &PyLanguage, word: &str) -> PyResult<(u64, i64)> {
    let w = lang.word(word)?;
    let iv = embed::indicator(&lang.inner, &w).map_err(err)?;
    Ok((iv.occurrences, iv.value))
}

/// All interpretations (s, body, p) of a word w = s·x₁…x_k·p.
#[pyfunction]
fn interpretations(
    lang: &PyLanguage,
    word: &str,
) -> PyResult<Vec<(String, Vec<String>, String)>> {
    let w = lang.word(word)?;
    let is = embed::interpretations(&lang.inner, &w).map_err(err)?;
    Ok(is
        .iter()
        .map(|i| {
            (
                i.head.as_string(),
                i.body.iter().map(|p| p.as_string()).collect(),
                i.tail.as_string(),
            )
        })
        .collect())
}

/// Compose two class-restricted witnesses into one for the product code.
#[pyfunction]
fn product_compose(
    x1: &PyLanguage,
    y1: &PyLanguage,
    x2: &PyLanguage,
    y2: &PyLanguage,
    class_name: &str,
) -> PyResult<(PyLanguage, PyLanguage)> {
    let class = match class_name {
        "prefix" => alt::CodeClass::Prefix,
        "suffix" => alt::CodeClass::Suffix,
        "bifix" => alt::CodeClass::Bifix,
        "p-infix" => alt::CodeClass::PInfix,
        "s-infix" => alt::CodeClass::SInfix,
        "infix" => alt::CodeClass::Infix,
        "p-subinfix" => alt::CodeClass::PSubinfix,
        "s-subinfix" => alt::CodeClass::SSubinfix,
        "subinfix" => alt::CodeClass::Subinfix,
        "hypercode" => alt::CodeClass::Hyper,
        other => return Err(PyValueError::new_err(format!("unknown class '{other}'"))),
    };
    let (xc, yc) =
        alt::product_compose((&x1.inner, &y1.inner), (&x2.inner, &y2.inner), class).map_err(err)?;
    Ok((PyLanguage::wrap(xc), PyLanguage::wrap(yc)))
}

#[pymodule]
fn altcodes_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLanguage>()?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(is_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_prefix_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_suffix_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_bifix_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_alternative_code, m)?)?;
    m.add_function(wrap_pyfunction!(is_strong_alternative_code, m)?)?;
    m.add_function(wrap_pyfunction!(rsic, m)?)?;
    m.add_function(wrap_pyfunction!(verify_witness, m)?)?;
    m.add_function(wrap_pyfunction!(subclass_characterize, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal_suffix, m)?)?;
    m.add_function(wrap_pyfunction!(is_maximal_bifix, m)?)?;
    m.add_function(wrap_pyfunction!(complete_prefix, m)?)?;
    m.add_function(wrap_pyfunction!(complete_suffix, m)?)?;
    m.add_function(wrap_pyfunction!(complete_bifix_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(verify_bifix_container, m)?)?;
    m.add_function(wrap_pyfunction!(embed_strong, m)?)?;
    m.add_function(wrap_pyfunction!(indicator, m)?)?;
    m.add_function(wrap_pyfunction!(interpretations, m)?)?;
    m.add_function(wrap_pyfunction!(product_compose, m)?)?;
    Ok(())
}
