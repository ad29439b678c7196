use std::collections::VecDeque;

use crate::error::{FstError, Result};
use crate::fst::{Arc, Fst, FstBuilder, StateId};
use crate::weight::TropicalWeight;

/// Read-only view of a machine's states, arcs and final weights. Lets the
/// search below run on lattices that were never turned into an [`Fst`].
pub(crate) trait Graph {
    fn num_states(&self) -> usize;
    fn arcs(&self, state: StateId) -> &[Arc];
    fn final_weight(&self, state: StateId) -> TropicalWeight;
}

impl Graph for Fst {
    fn num_states(&self) -> usize {
        Fst::num_states(self)
    }

    fn arcs(&self, state: StateId) -> &[Arc] {
        Fst::arcs(self, state)
    }

    fn final_weight(&self, state: StateId) -> TropicalWeight {
        Fst::final_weight(self, state)
    }
}

/// For every state, the minimum weight of reaching acceptance from it
/// (`ZERO` when no final state is reachable).
///
/// Acyclic machines are relaxed in reverse topological order. Cyclic ones use
/// label-correcting search over the reversed machine, failing with
/// [`FstError::NegativeCycle`] after `|V|·|E|` relaxations.
pub fn distance_to_final(fst: &Fst) -> Result<Vec<TropicalWeight>> {
    distances(fst)
}

fn distances<G: Graph>(g: &G) -> Result<Vec<TropicalWeight>> {
    let n = g.num_states();
    let mut dist: Vec<TropicalWeight> = (0..n).map(|s| g.final_weight(s)).collect();
    match topological_order(g) {
        Some(order) => {
            for &s in order.iter().rev() {
                let mut d = dist[s];
                for a in g.arcs(s) {
                    d = d.plus(a.weight.times(dist[a.nextstate]));
                }
                dist[s] = d;
            }
        }
        None => {
            let mut reverse: Vec<Vec<(StateId, TropicalWeight)>> = vec![Vec::new(); n];
            let mut num_arcs = 0usize;
            for s in 0..n {
                for a in g.arcs(s) {
                    reverse[a.nextstate].push((s, a.weight));
                    num_arcs += 1;
                }
            }
            let guard = n.saturating_mul(num_arcs.max(1));
            let mut relaxations = 0usize;
            let mut queued = vec![false; n];
            let mut queue: VecDeque<StateId> =
                (0..n).filter(|&s| !g.final_weight(s).is_zero()).collect();
            for &s in &queue {
                queued[s] = true;
            }
            while let Some(q) = queue.pop_front() {
                queued[q] = false;
                for &(p, w) in &reverse[q] {
                    let cand = w.times(dist[q]);
                    if cand < dist[p] {
                        relaxations += 1;
                        if relaxations > guard {
                            return Err(FstError::NegativeCycle);
                        }
                        dist[p] = cand;
                        if !queued[p] {
                            queued[p] = true;
                            queue.push_back(p);
                        }
                    }
                }
            }
            // Recompute each state's distance from its own arcs so the
            // equality test used when reading off the path is exact.
            for s in 0..n {
                let mut d = g.final_weight(s);
                for a in g.arcs(s) {
                    d = d.plus(a.weight.times(dist[a.nextstate]));
                }
                dist[s] = d;
            }
        }
    }
    Ok(dist)
}

/// Kahn's algorithm; `None` if the machine has a cycle.
fn topological_order<G: Graph>(g: &G) -> Option<Vec<StateId>> {
    let n = g.num_states();
    let mut indegree = vec![0usize; n];
    for s in 0..n {
        for a in g.arcs(s) {
            indegree[a.nextstate] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut ready: Vec<StateId> = (0..n).rev().filter(|&s| indegree[s] == 0).collect();
    while let Some(s) = ready.pop() {
        order.push(s);
        for a in g.arcs(s) {
            indegree[a.nextstate] -= 1;
            if indegree[a.nextstate] == 0 {
                ready.push(a.nextstate);
            }
        }
    }
    (order.len() == n).then_some(order)
}

/// A single-path machine realizing a minimum-weight accepting path.
///
/// Among equal-weight optima the result is deterministic: stopping at a
/// final state is preferred over continuing, and otherwise arcs are tried in
/// (ilabel, olabel, nextstate) order, depth first.
pub fn shortest_path(fst: &Fst) -> Result<Fst> {
    let start = fst.start().ok_or(FstError::NoPath)?;
    let (path, final_weight) = best_path(fst, start)?;
    let mut b = FstBuilder::new();
    let mut s = b.add_state();
    b.set_start(s);
    for a in &path {
        let t = b.add_state();
        b.add_arc(s, Arc { nextstate: t, ..*a });
        s = t;
    }
    b.set_final(s, final_weight);
    Ok(b.build())
}

/// The arcs of the path chosen by [`shortest_path`] and the final weight of
/// its last state.
pub(crate) fn best_path<G: Graph>(g: &G, start: StateId) -> Result<(Vec<Arc>, TropicalWeight)> {
    let dist = distances(g)?;
    if dist[start].is_zero() {
        return Err(FstError::NoPath);
    }

    let tight = |s: StateId| -> Vec<&Arc> {
        let mut arcs: Vec<&Arc> = g
            .arcs(s)
            .iter()
            .filter(|a| {
                !dist[a.nextstate].is_zero() && a.weight.times(dist[a.nextstate]) == dist[s]
            })
            .collect();
        arcs.sort_by_key(|a| (a.ilabel, a.olabel, a.nextstate));
        arcs
    };

    let mut visited = vec![false; g.num_states()];
    visited[start] = true;
    // Each frame: state, its tight arcs, index of the next arc to try.
    let mut stack: Vec<(StateId, Vec<&Arc>, usize)> = Vec::new();
    let mut path: Vec<Arc> = Vec::new();
    let mut cur = start;
    let end = loop {
        if g.final_weight(cur) == dist[cur] {
            break cur;
        }
        stack.push((cur, tight(cur), 0));
        let mut advanced = false;
        while let Some((_, arcs, idx)) = stack.last_mut() {
            if let Some(&a) = arcs.get(*idx) {
                *idx += 1;
                if !visited[a.nextstate] {
                    visited[a.nextstate] = true;
                    path.push(*a);
                    cur = a.nextstate;
                    advanced = true;
                    break;
                }
            } else {
                stack.pop();
                path.pop();
            }
        }
        if !advanced {
            return Err(FstError::NoPath);
        }
    };
    Ok((path, g.final_weight(end)))
}

/// Labels and total weight of a single-path machine such as the result of
/// [`shortest_path`].
#[derive(Clone, Debug, PartialEq)]
pub struct PathInfo {
    pub input: Vec<u8>,
    pub output: Vec<u8>,
    pub weight: TropicalWeight,
}

/// Walks the unique path of a linear machine, summing weights from the start.
/// Returns `None` if the machine is empty, branches, or never reaches a final
/// state.
pub fn read_path(fst: &Fst) -> Option<PathInfo> {
    let mut s = fst.start()?;
    let mut info = PathInfo {
        input: Vec::new(),
        output: Vec::new(),
        weight: TropicalWeight::ONE,
    };
    let mut steps = 0;
    loop {
        match fst.arcs(s) {
            [] => break,
            [a] => {
                info.input.extend(a.ilabel.byte());
                info.output.extend(a.olabel.byte());
                info.weight = info.weight.times(a.weight);
                s = a.nextstate;
            }
            _ => return None,
        }
        steps += 1;
        if steps > fst.num_states() {
            return None;
        }
    }
    if !fst.is_final(s) {
        return None;
    }
    info.weight = info.weight.times(fst.final_weight(s));
    Some(info)
}
