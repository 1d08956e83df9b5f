//! Nondeterministic automata with ε-moves, used as the intermediate form
//! for Thompson construction and for the language operations that are most
//! natural with multiple start states or added transitions. Everything is
//! determinized and re-minimized before it becomes a [`crate::dfa::Dfa`].

use std::collections::HashMap;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::dfa::{Dfa, STATE_BUDGET};
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub(crate) struct Nfa {
    pub alphabet: Arc<Alphabet>,
    pub starts: Vec<u32>,
    pub accepting: Vec<bool>,
    /// `trans[state][symbol]` → target states.
    pub trans: Vec<Vec<Vec<u32>>>,
    pub eps: Vec<Vec<u32>>,
}

impl Nfa {
    pub fn new(alphabet: &Arc<Alphabet>) -> Nfa {
        Nfa {
            alphabet: Arc::clone(alphabet),
            starts: Vec::new(),
            accepting: Vec::new(),
            trans: Vec::new(),
            eps: Vec::new(),
        }
    }

    pub fn from_dfa(dfa: &Dfa) -> Nfa {
        let k = dfa.alphabet().len();
        let n = dfa.state_count();
        let mut nfa = Nfa::new(dfa.alphabet());
        for q in 0..n as u32 {
            nfa.add_state(dfa.is_accepting(q));
        }
        for q in 0..n as u32 {
            for sym in 0..k as u8 {
                nfa.add_edge(q, sym, dfa.step(q, sym));
            }
        }
        nfa.starts.push(dfa.start());
        nfa
    }

    pub fn add_state(&mut self, accepting: bool) -> u32 {
        let id = self.accepting.len() as u32;
        self.accepting.push(accepting);
        self.trans.push(vec![Vec::new(); self.alphabet.len()]);
        self.eps.push(Vec::new());
        id
    }

    pub fn add_edge(&mut self, from: u32, sym: u8, to: u32) {
        self.trans[from as usize][sym as usize].push(to);
    }

    pub fn add_eps(&mut self, from: u32, to: u32) {
        self.eps[from as usize].push(to);
    }

    /// Appends all states of `other`, returning the id offset.
    pub fn absorb(&mut self, other: &Nfa) -> u32 {
        let off = self.accepting.len() as u32;
        for q in 0..other.accepting.len() {
            self.accepting.push(other.accepting[q]);
            self.trans.push(
                other.trans[q]
                    .iter()
                    .map(|ts| ts.iter().map(|&t| t + off).collect())
                    .collect(),
            );
            self.eps.push(other.eps[q].iter().map(|&t| t + off).collect());
        }
        off
    }

    fn eps_closure(&self, set: &mut Vec<u32>) {
        let mut seen: Vec<bool> = vec![false; self.accepting.len()];
        for &q in set.iter() {
            seen[q as usize] = true;
        }
        let mut head = 0;
        while head < set.len() {
            let q = set[head];
            head += 1;
            for &t in &self.eps[q as usize] {
                if !seen[t as usize] {
                    seen[t as usize] = true;
                    set.push(t);
                }
            }
        }
        set.sort_unstable();
        set.dedup();
    }

    /// Subset construction into a complete DFA (the empty subset is the
    /// explicit dead state), followed by canonical minimization.
    pub fn determinize_min(&self) -> Result<Dfa> {
        let k = self.alphabet.len();
        let mut start = self.starts.clone();
        start.sort_unstable();
        start.dedup();
        self.eps_closure(&mut start);

        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut order: Vec<Vec<u32>> = Vec::new();
        ids.insert(start.clone(), 0);
        order.push(start);
        let mut trans: Vec<u32> = Vec::new();
        let mut accepting: Vec<bool> = Vec::new();
        let mut head = 0usize;
        while head < order.len() {
            let cur = std::mem::take(&mut order[head]);
            accepting.push(cur.iter().any(|&q| self.accepting[q as usize]));
            for sym in 0..k {
                let mut next: Vec<u32> = Vec::new();
                for &q in &cur {
                    next.extend_from_slice(&self.trans[q as usize][sym]);
                }
                next.sort_unstable();
                next.dedup();
                self.eps_closure(&mut next);
                let fresh = ids.len() as u32;
                let id = *ids.entry(next.clone()).or_insert_with(|| {
                    order.push(next);
                    fresh
                });
                trans.push(id);
            }
            order[head] = cur;
            head += 1;
            if order.len() > STATE_BUDGET {
                return Err(Error::StateBudgetExceeded { limit: STATE_BUDGET });
            }
        }
        let dfa = Dfa::new(Arc::clone(&self.alphabet), 0, accepting, trans);
        Ok(dfa.minimize_canonical())
    }
}
