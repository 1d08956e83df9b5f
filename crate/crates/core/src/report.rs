//! The batch front door: spec files in, machine-readable reports out.
//!
//! A spec file declares an alphabet, a map of named sets (finite word lists
//! or regex patterns), a task, and task parameters. Reports are JSON with a
//! stable schema: map keys are sorted, word lists are length-then-lex, and
//! languages render deterministically, so identical specs produce
//! byte-identical reports. Every language placed in a report is re-parsed
//! and re-compiled as a self-check before the report is returned.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::alphabet::Alphabet;
use crate::alt::{self, PrefixOutcome};
use crate::codes;
use crate::embed::{self, CompletionClass, CompletionMethod};
use crate::error::{Error, Result};
use crate::grid;
use crate::language::Language;
use crate::render::Rendered;

pub const SCHEMA: &str = "altcodes-report/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum SetDef {
    Finite { words: Vec<String> },
    Regex { pattern: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Task {
    Classify,
    IsCode,
    Rsic,
    Complete,
    Embed,
    Verify,
    OracleGrid,
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Classify => "classify",
            Task::IsCode => "is-code",
            Task::Rsic => "rsic",
            Task::Complete => "complete",
            Task::Embed => "embed",
            Task::Verify => "verify",
            Task::OracleGrid => "oracle-grid",
        }
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub set: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub y: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub z: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub candidate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mx: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub my: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_set_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_word_len: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instances: Option<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpecFile {
    pub alphabet: Vec<String>,
    #[serde(default)]
    pub sets: BTreeMap<String, SetDef>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub task: Option<Task>,
    #[serde(default)]
    pub params: Params,
}

#[derive(Debug, Clone, Serialize)]
#[serde(untagged)]
pub enum RenderedJson {
    Words { words: Vec<String> },
    Regex { regex: String, includes_epsilon: bool },
}

impl From<Rendered> for RenderedJson {
    fn from(r: Rendered) -> Self {
        match r {
            Rendered::Words(words) => RenderedJson::Words { words },
            Rendered::Regex { pattern, includes_epsilon } => {
                RenderedJson::Regex { regex: pattern, includes_epsilon }
            }
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub task: String,
    pub alphabet: Vec<String>,
    pub verdicts: BTreeMap<String, Value>,
    pub languages: BTreeMap<String, RenderedJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trace: Option<Vec<Value>>,
    pub automaton_states: BTreeMap<String, usize>,
}

impl Report {
    fn new(task: Task, alphabet: &Arc<Alphabet>) -> Report {
        Report {
            schema: SCHEMA,
            task: task.name().to_string(),
            alphabet: alphabet.symbols().iter().map(|c| c.to_string()).collect(),
            verdicts: BTreeMap::new(),
            languages: BTreeMap::new(),
            trace: None,
            automaton_states: BTreeMap::new(),
        }
    }

    fn verdict(&mut self, key: &str, value: impl Into<Value>) {
        self.verdicts.insert(key.to_string(), value.into());
    }

    /// Adds a language, asserting it round-trips through its rendering.
    fn language(&mut self, key: &str, lang: &Language) -> Result<()> {
        let rendered = lang.render()?;
        let back = Language::from_rendered(&rendered, lang.alphabet())?;
        if &back != lang {
            return Err(Error::Spec(format!(
                "internal rendering of '{key}' failed to round-trip"
            )));
        }
        self.languages.insert(key.to_string(), rendered.into());
        self.automaton_states.insert(key.to_string(), lang.state_count());
        Ok(())
    }

    fn trace_entry(&mut self, entry: Value) {
        self.trace.get_or_insert_with(Vec::new).push(entry);
    }
}

/// What the CLI's `--emit` flag selects.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Emit {
    #[default]
    Summary,
    Trace,
}

pub struct RunOptions {
    pub task: Task,
    pub emit: Emit,
    /// Fallback bound when the spec has none.
    pub default_bound: usize,
}

fn rendered_value(lang: &Language) -> Result<Value> {
    Ok(match lang.render()? {
        Rendered::Words(words) => json!({ "words": words }),
        Rendered::Regex { pattern, includes_epsilon } => {
            json!({ "regex": pattern, "includes_epsilon": includes_epsilon })
        }
    })
}

struct Compiled {
    alphabet: Arc<Alphabet>,
    sets: BTreeMap<String, Language>,
}

fn compile_spec(spec: &SpecFile) -> Result<Compiled> {
    let mut symbols = Vec::new();
    for s in &spec.alphabet {
        let mut chars = s.chars();
        let (Some(c), None) = (chars.next(), chars.next()) else {
            return Err(Error::Spec(format!("alphabet entry '{s}' is not a single symbol")));
        };
        symbols.push(c);
    }
    let alphabet = Alphabet::new(symbols)?;
    let mut sets = BTreeMap::new();
    for (name, def) in &spec.sets {
        let lang = match def {
            SetDef::Finite { words } => {
                for w in words {
                    if w.is_empty() {
                        return Err(Error::Spec(format!(
                            "set '{name}': the empty word is not allowed in input sets"
                        )));
                    }
                }
                Language::from_word_strs(&alphabet, words)?
            }
            SetDef::Regex { pattern } => Language::from_regex(pattern, &alphabet)?,
        };
        sets.insert(name.clone(), lang);
    }
    Ok(Compiled { alphabet, sets })
}

fn need_set<'a>(
    c: &'a Compiled,
    name: &'a Option<String>,
    what: &str,
) -> Result<(&'a str, &'a Language)> {
    let name = name
        .as_deref()
        .ok_or_else(|| Error::Spec(format!("missing param '{what}'")))?;
    let lang = c
        .sets
        .get(name)
        .ok_or_else(|| Error::Spec(format!("unknown set '{name}'")))?;
    Ok((name, lang))
}

fn parse_class(class: &Option<String>) -> Result<CompletionClass> {
    match class.as_deref() {
        Some("prefix") => Ok(CompletionClass::Prefix),
        Some("suffix") => Ok(CompletionClass::Suffix),
        Some("bifix") => Ok(CompletionClass::Bifix),
        Some(other) => Err(Error::Spec(format!("unknown class '{other}'"))),
        None => Err(Error::Spec("missing param 'class'".into())),
    }
}

fn method_name(m: CompletionMethod) -> &'static str {
    match m {
        CompletionMethod::TreeFill => "tree-fill",
        CompletionMethod::MinWords => "min-words",
        CompletionMethod::BoundedSearch => "bounded-search",
        CompletionMethod::VerifiedCandidate => "verified-candidate",
    }
}

fn outcome_name(o: PrefixOutcome) -> &'static str {
    match o {
        PrefixOutcome::RejectedNotSuffixCode => "rejected: quotient is not a suffix code",
        PrefixOutcome::RejectedNotPrefixCode => "rejected: left factor is not a prefix code",
        PrefixOutcome::RejectedProductMismatch => "rejected: product differs from the input",
        PrefixOutcome::Accepted => "accepted",
    }
}

/// Runs one spec. The spec's own `task` field, when present, must agree
/// with the requested task.
pub fn run(spec: &SpecFile, options: &RunOptions) -> Result<Report> {
    if let Some(declared) = spec.task {
        if declared != options.task {
            return Err(Error::Spec(format!(
                "spec declares task '{}' but '{}' was requested",
                declared.name(),
                options.task.name()
            )));
        }
    }
    let compiled = compile_spec(spec)?;
    let bound = spec.params.bound.unwrap_or(options.default_bound);
    let mut report = Report::new(options.task, &compiled.alphabet);

    match options.task {
        Task::Classify => {
            let (name, lang) = need_set(&compiled, &spec.params.set, "set")?;
            report.language(name, lang)?;
            let r = codes::classify(lang)?;
            for (key, v) in [
                ("code", r.code),
                ("prefix", r.prefix),
                ("suffix", r.suffix),
                ("bifix", r.bifix),
                ("p_infix", r.p_infix),
                ("s_infix", r.s_infix),
                ("infix", r.infix),
                ("p_subinfix", r.p_subinfix),
                ("s_subinfix", r.s_subinfix),
                ("subinfix", r.subinfix),
                ("hypercode", r.hypercode),
                ("thin", r.thin),
                ("complete", r.complete),
            ] {
                report.verdict(key, v);
            }
        }
        Task::IsCode => {
            let (name, lang) = need_set(&compiled, &spec.params.set, "set")?;
            report.language(name, lang)?;
            let trace = codes::is_code(lang)?;
            report.verdict("code", trace.is_code());
            if let Some(amb) = &trace.witness {
                report.verdict("witness_word", amb.word.as_string());
                report.verdict(
                    "factorization_a",
                    Value::Array(
                        amb.left.iter().map(|w| Value::String(w.as_string())).collect(),
                    ),
                );
                report.verdict(
                    "factorization_b",
                    Value::Array(
                        amb.right.iter().map(|w| Value::String(w.as_string())).collect(),
                    ),
                );
            }
            if options.emit == Emit::Trace {
                for (i, round) in trace.rounds.iter().enumerate() {
                    report.trace_entry(json!({
                        "round": i + 1,
                        "language": rendered_value(round)?,
                    }));
                }
            }
        }
        Task::Rsic => {
            let (name, lang) = need_set(&compiled, &spec.params.set, "set")?;
            report.language(name, lang)?;
            let r = alt::rsic(lang)?;
            report.verdict("strong_alt_induced", r.is_strong_alt_induced());
            if let Some((x, y)) = &r.witness {
                report.language("witness_x", x)?;
                report.language("witness_y", y)?;
            }
            if options.emit == Emit::Trace {
                for step in &r.trace {
                    report.trace_entry(json!({
                        "prefix": step.prefix.as_string(),
                        "quotient": rendered_value(&step.quotient)?,
                        "outcome": outcome_name(step.outcome),
                    }));
                }
            }
        }
        Task::Complete => {
            let (name, lang) = need_set(&compiled, &spec.params.set, "set")?;
            report.language(name, lang)?;
            let class = parse_class(&spec.params.class)?;
            match class {
                CompletionClass::Prefix | CompletionClass::Suffix => {
                    let done = match (class, lang.is_finite()) {
                        (CompletionClass::Prefix, true) => embed::complete_prefix_finite(lang)?,
                        (CompletionClass::Prefix, false) => embed::complete_prefix_regular(lang)?,
                        (CompletionClass::Suffix, true) => embed::complete_suffix_finite(lang)?,
                        (CompletionClass::Suffix, false) => embed::complete_suffix_regular(lang)?,
                        _ => unreachable!(),
                    };
                    report.verdict("completed", true);
                    report.verdict("class", class.name());
                    report.verdict("method", method_name(done.method));
                    if let Some(p) = done.preserved_maxlen {
                        report.verdict("preserved_maxlen", p);
                    }
                    report.language("container", &done.container)?;
                }
                CompletionClass::Bifix => match embed::complete_bifix_bounded(lang, bound)? {
                    embed::BifixCompletion::Found(done) => {
                        report.verdict("completed", true);
                        report.verdict("class", class.name());
                        report.verdict("method", method_name(done.method));
                        report.verdict("bound", bound);
                        report.language("container", &done.container)?;
                    }
                    embed::BifixCompletion::NotFoundWithinBound => {
                        report.verdict("completed", false);
                        report.verdict("class", class.name());
                        report.verdict("bound", bound);
                        report.verdict("reason", "not-found-within-bound");
                    }
                },
            }
        }
        Task::Embed => {
            let (xn, x) = need_set(&compiled, &spec.params.x, "x")?;
            let (yn, y) = need_set(&compiled, &spec.params.y, "y")?;
            report.language(xn, x)?;
            report.language(yn, y)?;
            let class = parse_class(&spec.params.class)?;
            let mx = spec
                .params
                .mx
                .as_ref()
                .map(|n| need_set(&compiled, &Some(n.clone()), "mx").map(|(_, l)| l.clone()))
                .transpose()?;
            let my = spec
                .params
                .my
                .as_ref()
                .map(|n| need_set(&compiled, &Some(n.clone()), "my").map(|(_, l)| l.clone()))
                .transpose()?;
            let (mx_out, my_out) =
                embed::embed_strong(x, y, class, mx.as_ref(), my.as_ref(), bound)?;
            report.verdict("embedded", true);
            report.verdict("class", class.name());
            report.language("container_x", &mx_out)?;
            report.language("container_y", &my_out)?;
            let product = mx_out.concat(&my_out)?;
            report.language("container_product", &product)?;
        }
        Task::Verify => {
            if spec.params.candidate.is_some() {
                // container mode
                let (name, lang) = need_set(&compiled, &spec.params.set, "set")?;
                let (cn, cand) = need_set(&compiled, &spec.params.candidate, "candidate")?;
                let class = parse_class(&spec.params.class)?;
                report.language(name, lang)?;
                report.language(cn, cand)?;
                let check = embed::verify_container(lang, cand, class)?;
                report.verdict("container_ok", check.holds());
                report.verdict("subset", check.subset_ok);
                report.verdict("class_code", check.class_ok);
                report.verdict("maximal", check.maximal_ok);
                if let Some(reason) = check.reason() {
                    report.verdict("reason", reason);
                }
            } else {
                // witness mode
                let (xn, x) = need_set(&compiled, &spec.params.x, "x")?;
                let (yn, y) = need_set(&compiled, &spec.params.y, "y")?;
                let z = match &spec.params.z {
                    Some(_) => need_set(&compiled, &spec.params.z, "z")?.1.clone(),
                    None => x.concat(y)?,
                };
                report.language(xn, x)?;
                report.language(yn, y)?;
                report.language("z", &z)?;
                let w = alt::verify_witness(x, y, &z)?;
                report.verdict("witness_ok", w.holds());
                report.verdict("x_prefix_code", w.x_is_prefix_code);
                report.verdict("y_suffix_code", w.y_is_suffix_code);
                report.verdict("z_code", w.z_is_code);
                report.verdict("product_equals_z", w.product_equals_z);
                report.verdict("left_inclusion_in_y", w.left_inclusion);
                report.verdict("right_inclusion_in_x", w.right_inclusion);
                if w.holds() {
                    let sub = alt::subclass_characterize(x, y)?;
                    for (key, v) in [
                        ("prefix_sai", sub.prefix_sai),
                        ("maximal_prefix_sai", sub.maximal_prefix_sai),
                        ("suffix_sai", sub.suffix_sai),
                        ("maximal_suffix_sai", sub.maximal_suffix_sai),
                        ("bifix_sai", sub.bifix_sai),
                        ("maximal_bifix_sai", sub.maximal_bifix_sai),
                    ] {
                        report.verdict(
                            key,
                            match v {
                                alt::TriState::Holds => "holds",
                                alt::TriState::Fails => "fails",
                                alt::TriState::NeedsThinness => "needs-thinness",
                            },
                        );
                    }
                }
            }
        }
        Task::OracleGrid => {
            let max_set_size = spec.params.max_set_size.unwrap_or(3);
            let max_word_len = spec.params.max_word_len.unwrap_or(3);
            let instances = spec.params.instances.unwrap_or(2000);
            let outcome = grid::run_validation_grid(
                &compiled.alphabet,
                max_set_size,
                max_word_len,
                instances,
                max_word_len.min(3),
                instances,
            )?;
            report.verdict("prefix_suffix_checked", outcome.prefix_suffix_checked);
            report.verdict("infix_family_checked", outcome.infix_family_checked);
            report.verdict("unambiguity_checked", outcome.unambiguity_checked);
            report.verdict("total_checked", outcome.total_checked());
            report.verdict("disagreements", outcome.disagreements.len());
            if !outcome.disagreements.is_empty() {
                report.verdict(
                    "disagreement_examples",
                    Value::Array(
                        outcome
                            .disagreements
                            .iter()
                            .take(5)
                            .map(|d| Value::String(d.clone()))
                            .collect(),
                    ),
                );
            }
        }
    }
    Ok(report)
}

/// Convenience wrapper: parse JSON, run, serialize.
pub fn run_json(input: &str, options: &RunOptions) -> Result<String> {
    let spec: SpecFile =
        serde_json::from_str(input).map_err(|e| Error::Spec(format!("invalid spec: {e}")))?;
    let report = run(&spec, options)?;
    serde_json::to_string_pretty(&report)
        .map_err(|e| Error::Spec(format!("serialization failed: {e}")))
}
