//! Construction combinators: string primitives, rational operations and
//! TSV-driven string maps.

use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use crate::error::{FstError, Result};
use crate::fst::{Arc, Fst, FstBuilder, Label, StateId};
use crate::weight::TropicalWeight;

/// Linear acceptor over the UTF-8 bytes of `text`.
///
/// NUL bytes are not representable and become epsilon arcs; callers that
/// accept arbitrary text should reject NUL first.
pub fn accept(text: &str) -> Fst {
    accept_bytes(text.as_bytes())
}

pub fn accept_bytes(bytes: &[u8]) -> Fst {
    let mut b = FstBuilder::new();
    let mut cur = b.add_state();
    b.set_start(cur);
    for &byte in bytes {
        let next = b.add_state();
        let l = Label::from_byte(byte);
        b.add_arc(cur, Arc::new(l, l, TropicalWeight::ONE, next));
        cur = next;
    }
    b.set_final(cur, TropicalWeight::ONE);
    b.build()
}

/// The single-state machine mapping the empty string to itself.
pub fn epsilon() -> Fst {
    accept("")
}

/// Transducer mapping exactly `input` to exactly `output`. The shorter side
/// is padded with epsilons; the whole `weight` sits on the final state.
pub fn cross(input: &str, output: &str, weight: impl Into<TropicalWeight>) -> Fst {
    cross_bytes(input.as_bytes(), output.as_bytes(), weight.into())
}

fn cross_bytes(input: &[u8], output: &[u8], weight: TropicalWeight) -> Fst {
    let len = input.len().max(output.len());
    let mut b = FstBuilder::new();
    let mut cur = b.add_state();
    b.set_start(cur);
    for i in 0..len {
        let next = b.add_state();
        let il = input.get(i).map_or(Label::EPS, |&c| Label::from_byte(c));
        let ol = output.get(i).map_or(Label::EPS, |&c| Label::from_byte(c));
        b.add_arc(cur, Arc::new(il, ol, TropicalWeight::ONE, next));
        cur = next;
    }
    b.set_final(cur, weight);
    b.build()
}

pub fn insert_str(output: &str, weight: impl Into<TropicalWeight>) -> Fst {
    cross("", output, weight)
}

pub fn delete_str(input: &str, weight: impl Into<TropicalWeight>) -> Fst {
    cross(input, "", weight)
}

/// Identity acceptor of every single byte (other than NUL) satisfying `pred`.
pub fn byte_class(pred: impl Fn(u8) -> bool) -> Fst {
    let mut b = FstBuilder::new();
    let s = b.add_state();
    let t = b.add_state();
    b.set_start(s);
    b.set_final(t, TropicalWeight::ONE);
    for byte in 1..=255u8 {
        if pred(byte) {
            let l = Label::from_byte(byte);
            b.add_arc(s, Arc::new(l, l, TropicalWeight::ONE, t));
        }
    }
    b.build()
}

pub fn union(a: &Fst, b: &Fst) -> Fst {
    union_all([a, b])
}

/// Union of any number of machines through a fresh start state.
pub fn union_all<'a>(machines: impl IntoIterator<Item = &'a Fst>) -> Fst {
    let mut b = FstBuilder::new();
    let start = b.add_state();
    b.set_start(start);
    for m in machines {
        let Some(s) = m.start() else { continue };
        let offset = b.append(m);
        b.add_arc(
            start,
            Arc::new(Label::EPS, Label::EPS, TropicalWeight::ONE, s + offset),
        );
    }
    b.build()
}

pub fn concat(a: &Fst, b: &Fst) -> Fst {
    concat_all([a, b])
}

/// Sequential composition of any number of machines. An empty list yields
/// [`epsilon`].
pub fn concat_all<'a>(machines: impl IntoIterator<Item = &'a Fst>) -> Fst {
    let mut b = FstBuilder::new();
    let start = b.add_state();
    b.set_start(start);
    b.set_final(start, TropicalWeight::ONE);
    let mut tails: Vec<(StateId, TropicalWeight)> = vec![(start, TropicalWeight::ONE)];
    for m in machines {
        let Some(s) = m.start() else {
            return Fst::empty();
        };
        let offset = b.append(m);
        for (t, w) in tails.drain(..) {
            b.set_final(t, TropicalWeight::ZERO);
            b.add_arc(t, Arc::new(Label::EPS, Label::EPS, w, s + offset));
        }
        tails.extend(m.finals().map(|(f, w)| (f + offset, w)));
    }
    b.build()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Closure {
    /// Zero or more repetitions.
    Star,
    /// One or more repetitions.
    Plus,
    /// Between `lo` and `hi` repetitions, inclusive.
    Range(usize, usize),
}

pub fn closure(a: &Fst, mode: Closure) -> Fst {
    match mode {
        Closure::Star => {
            let mut b = FstBuilder::new();
            let start = b.add_state();
            b.set_start(start);
            b.set_final(start, TropicalWeight::ONE);
            if let Some(s) = a.start() {
                let offset = b.append(a);
                b.add_arc(
                    start,
                    Arc::new(Label::EPS, Label::EPS, TropicalWeight::ONE, s + offset),
                );
                loop_back(&mut b, a, offset, s + offset);
            }
            b.build()
        }
        Closure::Plus => {
            let Some(s) = a.start() else {
                return Fst::empty();
            };
            let mut b = FstBuilder::new();
            let offset = b.append(a);
            b.set_start(s + offset);
            loop_back(&mut b, a, offset, s + offset);
            b.build()
        }
        Closure::Range(lo, hi) => {
            assert!(lo <= hi, "closure range {lo}..={hi} is empty");
            let opt = optional(a);
            let parts: Vec<&Fst> = std::iter::repeat_n(a, lo)
                .chain(std::iter::repeat_n(&opt, hi - lo))
                .collect();
            concat_all(parts)
        }
    }
}

fn loop_back(b: &mut FstBuilder, a: &Fst, offset: StateId, target: StateId) {
    for (f, w) in a.finals() {
        b.add_arc(f + offset, Arc::new(Label::EPS, Label::EPS, w, target));
    }
}

/// Zero or one occurrence of `a`.
pub fn optional(a: &Fst) -> Fst {
    union(a, &epsilon())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProjectSide {
    Input,
    Output,
}

/// Copies one side's labels onto both sides.
pub fn project(a: &Fst, side: ProjectSide) -> Fst {
    let mut b = a.to_builder();
    for s in 0..b.num_states() {
        for arc in b.arcs_mut(s) {
            match side {
                ProjectSide::Input => arc.olabel = arc.ilabel,
                ProjectSide::Output => arc.ilabel = arc.olabel,
            }
        }
    }
    b.build()
}

/// Union of `cross(input, output)` over all pairs, compiled as a tree that
/// shares common prefixes of the padded label sequence.
pub fn string_map<I, S, T>(pairs: I) -> Fst
where
    I: IntoIterator<Item = (S, T)>,
    S: AsRef<str>,
    T: AsRef<str>,
{
    let mut b = FstBuilder::new();
    let root = b.add_state();
    b.set_start(root);
    let mut children: BTreeMap<(StateId, Label, Label), StateId> = BTreeMap::new();
    for (input, output) in pairs {
        let (input, output) = (input.as_ref().as_bytes(), output.as_ref().as_bytes());
        let mut cur = root;
        for i in 0..input.len().max(output.len()) {
            let il = input.get(i).map_or(Label::EPS, |&c| Label::from_byte(c));
            let ol = output.get(i).map_or(Label::EPS, |&c| Label::from_byte(c));
            cur = match children.get(&(cur, il, ol)) {
                Some(&next) => next,
                None => {
                    let next = b.add_state();
                    b.add_arc(cur, Arc::new(il, ol, TropicalWeight::ONE, next));
                    children.insert((cur, il, ol), next);
                    next
                }
            };
        }
        b.set_final(cur, TropicalWeight::ONE);
    }
    b.build()
}

/// Reads a one- or two-column TSV file. A one-column row maps the string to
/// itself. Blank lines and lines starting with `#` are skipped.
pub fn read_tsv(path: impl AsRef<Path>) -> Result<Vec<(String, String)>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| FstError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let mut rows = Vec::new();
    for (idx, line) in text.split('\n').enumerate() {
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cols: Vec<&str> = line.split('\t').collect();
        let err = |message: &str| FstError::Tsv {
            path: path.to_path_buf(),
            line: idx + 1,
            message: message.to_string(),
        };
        if line.contains('\0') {
            return Err(err("NUL byte"));
        }
        match cols.as_slice() {
            [one] => rows.push((one.to_string(), one.to_string())),
            [a, b] => rows.push((a.to_string(), b.to_string())),
            _ => {
                return Err(err(&format!(
                    "expected 1 or 2 columns, found {}",
                    cols.len()
                )))
            }
        }
    }
    Ok(rows)
}

pub fn string_map_file(path: impl AsRef<Path>) -> Result<Fst> {
    Ok(string_map(read_tsv(path)?))
}
