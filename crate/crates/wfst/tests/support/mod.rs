//! Brute-force oracles for the transducer algorithms. Everything here walks
//! raw arcs directly and never calls the algorithms under test.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap, VecDeque};

use rand::Rng;
use wfst::{Arc, Fst, FstBuilder, Label, TropicalWeight};

pub const ALPHABET: [u8; 3] = *b"abc";

#[derive(Clone, Copy, Debug)]
pub enum Shape {
    /// Any labels (epsilons included), cycles allowed.
    General,
    /// Arcs only go to higher-numbered states.
    Acyclic,
    /// Every arc consumes an input symbol; cycles allowed.
    InputConsuming,
}

/// Weights are multiples of 1/4 so every sum is exact in f64 and results can
/// be compared with `==`.
fn dyadic<R: Rng>(rng: &mut R) -> f64 {
    rng.gen_range(0..=12) as f64 / 4.0
}

fn label<R: Rng>(rng: &mut R, allow_eps: bool) -> Label {
    let k = rng.gen_range(if allow_eps { 0 } else { 1 }..=ALPHABET.len());
    if k == 0 {
        Label::EPS
    } else {
        Label::from_byte(ALPHABET[k - 1])
    }
}

pub fn random_fst<R: Rng>(rng: &mut R, shape: Shape) -> Fst {
    let n = rng.gen_range(1..=8);
    let mut b = FstBuilder::new();
    for _ in 0..n {
        b.add_state();
    }
    b.set_start(0);
    for s in 0..n {
        if rng.gen_bool(0.4) {
            b.set_final(s, TropicalWeight::new(dyadic(rng)));
        }
        for _ in 0..rng.gen_range(0..=3) {
            let next = match shape {
                Shape::Acyclic if s + 1 < n => rng.gen_range(s + 1..n),
                Shape::Acyclic => continue,
                _ => rng.gen_range(0..n),
            };
            let ilabel = label(rng, !matches!(shape, Shape::InputConsuming));
            let olabel = label(rng, true);
            b.add_arc(
                s,
                Arc::new(ilabel, olabel, TropicalWeight::new(dyadic(rng)), next),
            );
        }
    }
    b.build()
}

/// Minimum weight over all simple paths from the start state that end in a
/// final state (arc weights plus final weight, summed left to right). With
/// nonnegative weights some optimal path is simple.
pub fn brute_force_shortest(fst: &Fst) -> Option<f64> {
    fn dfs(
        fst: &Fst,
        s: usize,
        acc: f64,
        depth: usize,
        on_path: &mut Vec<bool>,
        best: &mut Option<f64>,
    ) {
        assert!(depth <= 32);
        if fst.is_final(s) {
            let total = acc + fst.final_weight(s).value();
            if best.is_none_or(|b| total < b) {
                *best = Some(total);
            }
        }
        for a in fst.arcs(s) {
            if !on_path[a.nextstate] {
                on_path[a.nextstate] = true;
                dfs(
                    fst,
                    a.nextstate,
                    acc + a.weight.value(),
                    depth + 1,
                    on_path,
                    best,
                );
                on_path[a.nextstate] = false;
            }
        }
    }
    let start = fst.start()?;
    let mut on_path = vec![false; fst.num_states()];
    on_path[start] = true;
    let mut best = None;
    dfs(fst, start, 0.0, 0, &mut on_path, &mut best);
    best
}

/// Every output (up to `max_out` bytes) the machine produces for exactly
/// `input`, with its minimum path weight.
pub fn transduce_all(fst: &Fst, input: &[u8], max_out: usize) -> BTreeMap<Vec<u8>, f64> {
    let mut out = BTreeMap::new();
    let Some(start) = fst.start() else {
        return out;
    };
    // Label-correcting search over configurations (state, input position, output so far).
    let mut best: HashMap<(usize, usize, Vec<u8>), f64> = HashMap::new();
    let mut queue = VecDeque::new();
    best.insert((start, 0, Vec::new()), 0.0);
    queue.push_back((start, 0usize, Vec::new()));
    while let Some((s, pos, produced)) = queue.pop_front() {
        let w = best[&(s, pos, produced.clone())];
        if pos == input.len() && fst.is_final(s) {
            let total = w + fst.final_weight(s).value();
            let e = out.entry(produced.clone()).or_insert(f64::INFINITY);
            if total < *e {
                *e = total;
            }
        }
        for a in fst.arcs(s) {
            let npos = match a.ilabel.byte() {
                None => pos,
                Some(c) if input.get(pos) == Some(&c) => pos + 1,
                Some(_) => continue,
            };
            let mut nout = produced.clone();
            if let Some(c) = a.olabel.byte() {
                if nout.len() == max_out {
                    continue;
                }
                nout.push(c);
            }
            let nw = w + a.weight.value();
            let key = (a.nextstate, npos, nout);
            if best.get(&key).is_none_or(|&old| nw < old) {
                best.insert(key.clone(), nw);
                queue.push_back(key);
            }
        }
    }
    out
}

/// All strings over [`ALPHABET`] of length `0..=max_len`.
pub fn all_strings(max_len: usize) -> Vec<Vec<u8>> {
    let mut all = vec![Vec::new()];
    let mut frontier = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for s in &frontier {
            for &c in &ALPHABET {
                let mut t: Vec<u8> = s.clone();
                t.push(c);
                next.push(t);
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all
}

/// The weighted relation restricted to inputs and outputs of at most
/// `max_len` bytes.
pub fn relation(fst: &Fst, max_len: usize) -> BTreeMap<(Vec<u8>, Vec<u8>), f64> {
    let mut rel = BTreeMap::new();
    for x in all_strings(max_len) {
        for (y, w) in transduce_all(fst, &x, max_len) {
            rel.insert((x.clone(), y), w);
        }
    }
    rel
}

/// Relational join of `a` then `b` on inputs and outputs up to `max_len`
/// bytes, allowing intermediate strings up to `max_mid` bytes.
pub fn joined_relation(
    a: &Fst,
    b: &Fst,
    max_len: usize,
    max_mid: usize,
) -> BTreeMap<(Vec<u8>, Vec<u8>), f64> {
    let mut rel = BTreeMap::new();
    let mut cache: HashMap<Vec<u8>, BTreeMap<Vec<u8>, f64>> = HashMap::new();
    for x in all_strings(max_len) {
        for (z, wa) in transduce_all(a, &x, max_mid) {
            let ys = cache
                .entry(z.clone())
                .or_insert_with(|| transduce_all(b, &z, max_len));
            for (y, wb) in ys.iter() {
                let e = rel.entry((x.clone(), y.clone())).or_insert(f64::INFINITY);
                if wa + wb < *e {
                    *e = wa + wb;
                }
            }
        }
    }
    rel
}
