use std::collections::hash_map::Entry;
use std::collections::{HashMap, VecDeque};

use crate::fst::{Arc, Fst, FstBuilder, Label, StateId};
use crate::optimize::{arc_sort, connect};

/// Relation composition of `a` followed by `b`.
///
/// Epsilons are interleaved without a filter: an output-epsilon move in `a`
/// and an input-epsilon move in `b` may be taken in either order, which can
/// produce duplicate paths. Under min-plus those duplicates carry identical
/// weights and do not change the relation.
///
/// Only pairs reachable from the start pair are expanded and the result is
/// trimmed, so an empty relation yields [`Fst::empty`].
pub fn compose(a: &Fst, b: &Fst) -> Fst {
    let (Some(sa), Some(sb)) = (a.start(), b.start()) else {
        return Fst::empty();
    };
    let sorted;
    let b = if b.is_ilabel_sorted() {
        b
    } else {
        sorted = arc_sort(b);
        &sorted
    };

    let mut out = FstBuilder::new();
    let mut ids: HashMap<(StateId, StateId), StateId> = HashMap::new();
    let mut queue = VecDeque::new();

    let mut lookup =
        |out: &mut FstBuilder, pair: (StateId, StateId), queue: &mut VecDeque<_>| match ids
            .entry(pair)
        {
            Entry::Occupied(e) => *e.get(),
            Entry::Vacant(e) => {
                let id = out.add_state();
                e.insert(id);
                queue.push_back((pair, id));
                id
            }
        };

    let start = lookup(&mut out, (sa, sb), &mut queue);
    out.set_start(start);

    while let Some(((qa, qb), id)) = queue.pop_front() {
        let fw = a.final_weight(qa).times(b.final_weight(qb));
        if !fw.is_zero() {
            out.set_final(id, fw);
        }
        for arc_a in a.arcs(qa) {
            if arc_a.olabel.is_eps() {
                let next = lookup(&mut out, (arc_a.nextstate, qb), &mut queue);
                out.add_arc(id, Arc::new(arc_a.ilabel, Label::EPS, arc_a.weight, next));
            } else {
                for arc_b in b.arcs_with_ilabel(qb, arc_a.olabel) {
                    let next = lookup(&mut out, (arc_a.nextstate, arc_b.nextstate), &mut queue);
                    out.add_arc(
                        id,
                        Arc::new(
                            arc_a.ilabel,
                            arc_b.olabel,
                            arc_a.weight.times(arc_b.weight),
                            next,
                        ),
                    );
                }
            }
        }
        for arc_b in b.arcs_with_ilabel(qb, Label::EPS) {
            let next = lookup(&mut out, (qa, arc_b.nextstate), &mut queue);
            out.add_arc(id, Arc::new(Label::EPS, arc_b.olabel, arc_b.weight, next));
        }
    }
    connect(&out.build())
}
