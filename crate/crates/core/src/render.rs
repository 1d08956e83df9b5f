//! Rendering languages back into the input dialect.
//!
//! Finite languages render as word lists; infinite ones as a regex produced
//! by state elimination. The dialect has no ε literal, so a language
//! containing ε renders as the pattern of L \ {ε} plus an explicit flag.
//! Every rendering round-trips: recompiling it yields the same language.

use crate::error::Result;
use crate::language::Language;
use crate::regex::{render, RegexAst};

/// A deterministic, re-parseable description of a language.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rendered {
    /// Finite language as its sorted word list (ε rendered as "").
    Words(Vec<String>),
    /// Infinite language as a dialect pattern for L \ {ε}.
    Regex { pattern: String, includes_epsilon: bool },
}

impl Language {
    /// Renders the language; prefers the word list for small finite sets.
    pub fn render(&self) -> Result<Rendered> {
        if let Some(words) = self.words() {
            if words.len() <= 64 {
                return Ok(Rendered::Words(words.iter().map(|w| w.as_string()).collect()));
            }
        }
        let includes_epsilon = self.contains_epsilon();
        let core = if includes_epsilon {
            self.difference(&Language::epsilon(self.alphabet()))?
        } else {
            self.clone()
        };
        let ast = eliminate_states(&core);
        let (eps, core_ast) = strip_epsilon(&ast);
        debug_assert!(!eps, "core language must be ε-free");
        let pattern = match core_ast {
            None => String::new(), // empty language: no pattern
            Some(ast) => render(&ast),
        };
        Ok(Rendered::Regex { pattern, includes_epsilon })
    }

    /// Recompiles a rendering; used to assert report round-trips.
    pub fn from_rendered(r: &Rendered, alphabet: &std::sync::Arc<crate::Alphabet>) -> Result<Language> {
        match r {
            Rendered::Words(words) => Language::from_word_strs(alphabet, words),
            Rendered::Regex { pattern, includes_epsilon } => {
                let core = if pattern.is_empty() {
                    Language::empty(alphabet)
                } else {
                    Language::from_regex(pattern, alphabet)?
                };
                if *includes_epsilon {
                    core.union(&Language::epsilon(alphabet))
                } else {
                    Ok(core)
                }
            }
        }
    }
}

/// Classic state elimination over a generalized NFA whose arcs carry ASTs.
fn eliminate_states(lang: &Language) -> RegexAst {
    let dfa = lang.dfa();
    let n = dfa.state_count();
    let k = lang.alphabet().len();
    // nodes: 0..n are DFA states, n is the fresh initial, n+1 the fresh final
    let init = n;
    let fin = n + 1;
    let total = n + 2;
    let mut arcs: Vec<Vec<Option<RegexAst>>> = vec![vec![None; total]; total];
    let add = |slot: &mut Option<RegexAst>, ast: RegexAst| {
        *slot = Some(match slot.take() {
            None => ast,
            Some(prev) => RegexAst::union(prev, ast),
        });
    };
    for (q, row) in arcs.iter_mut().enumerate().take(n) {
        for sym in 0..k as u8 {
            let t = dfa.step(q as u32, sym) as usize;
            add(&mut row[t], RegexAst::Symbol(lang.alphabet().symbol(sym)));
        }
    }
    add(&mut arcs[init][dfa.start() as usize], RegexAst::Epsilon);
    for q in dfa.accepting_states() {
        add(&mut arcs[q as usize][fin], RegexAst::Epsilon);
    }
    for s in 0..n {
        let self_loop = arcs[s][s].take();
        let star = self_loop.map(RegexAst::star);
        let incoming: Vec<(usize, RegexAst)> = (0..total)
            .filter(|&i| i != s)
            .filter_map(|i| arcs[i][s].take().map(|a| (i, a)))
            .collect();
        let outgoing: Vec<(usize, RegexAst)> = (0..total)
            .filter(|&j| j != s)
            .filter_map(|j| arcs[s][j].take().map(|a| (j, a)))
            .collect();
        for (i, a_in) in &incoming {
            for (j, a_out) in &outgoing {
                let mut path = a_in.clone();
                if let Some(st) = &star {
                    path = RegexAst::concat(path, st.clone());
                }
                path = RegexAst::concat(path, a_out.clone());
                add(&mut arcs[*i][*j], path);
            }
        }
    }
    arcs[init][fin].take().unwrap_or(RegexAst::Empty)
}

/// Rewrites an AST into (contains-ε, ε-free core): no `Epsilon` or `Empty`
/// node survives in the core, so it is printable in the dialect.
fn strip_epsilon(ast: &RegexAst) -> (bool, Option<RegexAst>) {
    match ast {
        RegexAst::Empty => (false, None),
        RegexAst::Epsilon => (true, None),
        RegexAst::Symbol(c) => (false, Some(RegexAst::Symbol(*c))),
        RegexAst::Union(l, r) => {
            let (el, cl) = strip_epsilon(l);
            let (er, cr) = strip_epsilon(r);
            let core = match (cl, cr) {
                (None, c) | (c, None) => c,
                (Some(a), Some(b)) => Some(RegexAst::union(a, b)),
            };
            (el || er, core)
        }
        RegexAst::Concat(l, r) => {
            let (el, cl) = strip_epsilon(l);
            let (er, cr) = strip_epsilon(r);
            // (ε? + L)(ε? + R) = LR + [er]L + [el]R + ε?
            let mut core: Option<RegexAst> = None;
            let mut push = |ast: RegexAst| {
                core = Some(match core.take() {
                    None => ast,
                    Some(prev) => RegexAst::union(prev, ast),
                });
            };
            if let (Some(a), Some(b)) = (&cl, &cr) {
                push(RegexAst::concat(a.clone(), b.clone()));
            }
            if er {
                if let Some(a) = &cl {
                    push(a.clone());
                }
            }
            if el {
                if let Some(b) = &cr {
                    push(b.clone());
                }
            }
            (el && er, core)
        }
        RegexAst::Star(e) => {
            let (_, ce) = strip_epsilon(e);
            // E* = ε + C·C* where C is the ε-free core of E
            let core = ce.map(|c| RegexAst::concat(c.clone(), RegexAst::star(c)));
            (true, core)
        }
    }
}
