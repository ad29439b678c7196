//! Epsilon removal, trimming and arc sorting.

use std::cmp::Ordering;
use std::collections::VecDeque;

use crate::fst::{Arc, Fst, FstBuilder, StateId};
use crate::weight::TropicalWeight;

/// Epsilon removal, trim and arc sort. Preserves the weighted relation
/// exactly (per input/output pair minimum weight); determinization and
/// minimization are not attempted.
pub fn optimize(fst: &Fst) -> Fst {
    let trimmed = connect(fst);
    let no_eps = rm_epsilon(&trimmed);
    arc_sort(&connect(&no_eps))
}

/// Keeps only states that lie on some path from the start state to a final
/// state. Surviving states keep their relative order.
pub fn connect(fst: &Fst) -> Fst {
    let Some(start) = fst.start() else {
        return Fst::empty();
    };
    let n = fst.num_states();

    let mut access = vec![false; n];
    let mut stack = vec![start];
    access[start] = true;
    while let Some(s) = stack.pop() {
        for a in fst.arcs(s) {
            if !access[a.nextstate] {
                access[a.nextstate] = true;
                stack.push(a.nextstate);
            }
        }
    }

    let mut reverse: Vec<Vec<StateId>> = vec![Vec::new(); n];
    for s in fst.state_ids() {
        for a in fst.arcs(s) {
            reverse[a.nextstate].push(s);
        }
    }
    let mut coaccess = vec![false; n];
    let mut stack: Vec<StateId> = fst.finals().map(|(s, _)| s).collect();
    for &s in &stack {
        coaccess[s] = true;
    }
    while let Some(s) = stack.pop() {
        for &p in &reverse[s] {
            if !coaccess[p] {
                coaccess[p] = true;
                stack.push(p);
            }
        }
    }

    if !(access[start] && coaccess[start]) {
        return Fst::empty();
    }
    let mut remap = vec![usize::MAX; n];
    let mut b = FstBuilder::new();
    for s in 0..n {
        if access[s] && coaccess[s] {
            remap[s] = b.add_state();
        }
    }
    for s in 0..n {
        let ns = remap[s];
        if ns == usize::MAX {
            continue;
        }
        b.set_final(ns, fst.final_weight(s));
        for a in fst.arcs(s) {
            let t = remap[a.nextstate];
            if t != usize::MAX {
                b.add_arc(ns, Arc { nextstate: t, ..*a });
            }
        }
    }
    b.set_start(remap[start]);
    b.build()
}

/// Removes arcs labelled epsilon on both sides. Arcs with a one-sided
/// epsilon are ordinary transitions and are kept.
///
/// Requires that no cycle of epsilon/epsilon arcs has negative total weight.
pub fn rm_epsilon(fst: &Fst) -> Fst {
    let Some(start) = fst.start() else {
        return Fst::empty();
    };
    let n = fst.num_states();
    let mut b = FstBuilder::new();
    for _ in 0..n {
        b.add_state();
    }
    b.set_start(start);

    let mut dist = vec![TropicalWeight::ZERO; n];
    let mut queued = vec![false; n];
    let mut touched: Vec<StateId> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if !fst.arcs(s).iter().any(Arc::is_epsilon) {
            b.set_final(s, fst.final_weight(s));
            for a in fst.arcs(s) {
                b.add_arc(s, *a);
            }
            continue;
        }

        // Single-source shortest distances over the epsilon subgraph.
        dist[s] = TropicalWeight::ONE;
        touched.push(s);
        queue.push_back(s);
        queued[s] = true;
        let mut relaxations = 0usize;
        let guard = n.saturating_mul(fst.num_arcs().max(1)).saturating_add(n);
        while let Some(p) = queue.pop_front() {
            queued[p] = false;
            for a in fst.arcs(p).iter().filter(|a| a.is_epsilon()) {
                let cand = dist[p].times(a.weight);
                if cand < dist[a.nextstate] {
                    relaxations += 1;
                    assert!(
                        relaxations <= guard,
                        "negative-weight epsilon cycle through state {s}"
                    );
                    if dist[a.nextstate].is_zero() {
                        touched.push(a.nextstate);
                    }
                    dist[a.nextstate] = cand;
                    if !queued[a.nextstate] {
                        queued[a.nextstate] = true;
                        queue.push_back(a.nextstate);
                    }
                }
            }
        }

        touched.sort_unstable();
        let mut final_weight = TropicalWeight::ZERO;
        for &p in &touched {
            let d = dist[p];
            final_weight = final_weight.plus(d.times(fst.final_weight(p)));
            for a in fst.arcs(p).iter().filter(|a| !a.is_epsilon()) {
                b.add_arc(
                    s,
                    Arc {
                        weight: d.times(a.weight),
                        ..*a
                    },
                );
            }
        }
        b.set_final(s, final_weight);
        for p in touched.drain(..) {
            dist[p] = TropicalWeight::ZERO;
        }
    }
    b.build()
}

fn arc_order(a: &Arc, b: &Arc) -> Ordering {
    (a.ilabel, a.olabel, a.nextstate)
        .cmp(&(b.ilabel, b.olabel, b.nextstate))
        .then_with(|| a.weight.partial_cmp(&b.weight).unwrap_or(Ordering::Equal))
}

/// Sorts every state's arcs by (ilabel, olabel, nextstate) and collapses
/// parallel arcs with identical labels and target into the cheapest one.
pub fn arc_sort(fst: &Fst) -> Fst {
    let mut b = fst.to_builder();
    for s in 0..b.num_states() {
        let arcs = b.arcs_mut(s);
        arcs.sort_by(arc_order);
        arcs.dedup_by(|later, earlier| {
            later.ilabel == earlier.ilabel
                && later.olabel == earlier.olabel
                && later.nextstate == earlier.nextstate
        });
    }
    b.build()
}
