use std::fmt;

use crate::weight::TropicalWeight;

pub type StateId = usize;

/// An arc label: a single byte of UTF-8 text, or epsilon.
///
/// Byte 0 never occurs in UTF-8 text, so id 0 is reserved for epsilon.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(u16);

impl Label {
    pub const EPS: Label = Label(0);
    pub const MAX_ID: u16 = 255;

    /// Byte 0 maps to epsilon.
    #[inline]
    pub const fn from_byte(b: u8) -> Label {
        Label(b as u16)
    }

    pub fn from_id(id: u16) -> Option<Label> {
        (id <= Self::MAX_ID).then_some(Label(id))
    }

    #[inline]
    pub fn id(self) -> u16 {
        self.0
    }

    #[inline]
    pub fn is_eps(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn byte(self) -> Option<u8> {
        (!self.is_eps()).then_some(self.0 as u8)
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            0 => f.write_str("<eps>"),
            b @ 0x21..=0x7e => write!(f, "{}", b as u8 as char),
            b => write!(f, "0x{b:02x}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub ilabel: Label,
    pub olabel: Label,
    pub weight: TropicalWeight,
    pub nextstate: StateId,
}

impl Arc {
    pub fn new(ilabel: Label, olabel: Label, weight: TropicalWeight, nextstate: StateId) -> Self {
        Arc {
            ilabel,
            olabel,
            weight,
            nextstate,
        }
    }

    #[inline]
    pub fn is_epsilon(&self) -> bool {
        self.ilabel.is_eps() && self.olabel.is_eps()
    }
}

#[derive(Clone, Debug, PartialEq)]
struct State {
    arcs: Vec<Arc>,
    final_weight: TropicalWeight,
}

impl State {
    fn new() -> Self {
        State {
            arcs: Vec::new(),
            final_weight: TropicalWeight::ZERO,
        }
    }
}

/// A compiled, immutable weighted transducer.
///
/// Every algorithm in this crate takes machines by reference and returns a
/// fresh machine; there is no way to mutate an `Fst` in place. Use
/// [`FstBuilder`] to construct one.
#[derive(Clone, PartialEq)]
pub struct Fst {
    states: Vec<State>,
    start: Option<StateId>,
    ilabel_sorted: bool,
}

impl Fst {
    /// The machine with no states, accepting nothing.
    pub fn empty() -> Fst {
        Fst {
            states: Vec::new(),
            start: None,
            ilabel_sorted: true,
        }
    }

    #[inline]
    pub fn start(&self) -> Option<StateId> {
        self.start
    }

    #[inline]
    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn num_arcs(&self) -> usize {
        self.states.iter().map(|s| s.arcs.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.start.is_none()
    }

    #[inline]
    pub fn arcs(&self, state: StateId) -> &[Arc] {
        &self.states[state].arcs
    }

    #[inline]
    pub fn final_weight(&self, state: StateId) -> TropicalWeight {
        self.states[state].final_weight
    }

    #[inline]
    pub fn is_final(&self, state: StateId) -> bool {
        !self.states[state].final_weight.is_zero()
    }

    pub fn state_ids(&self) -> std::ops::Range<StateId> {
        0..self.states.len()
    }

    /// Final states in ascending order, with their weights.
    pub fn finals(&self) -> impl Iterator<Item = (StateId, TropicalWeight)> + '_ {
        self.states
            .iter()
            .enumerate()
            .filter(|(_, s)| !s.final_weight.is_zero())
            .map(|(i, s)| (i, s.final_weight))
    }

    /// True when every state's arcs are in non-decreasing input-label order.
    pub fn is_ilabel_sorted(&self) -> bool {
        self.ilabel_sorted
    }

    /// The arcs leaving `state` whose input label is `label`. Requires
    /// [`Fst::is_ilabel_sorted`].
    pub(crate) fn arcs_with_ilabel(&self, state: StateId, label: Label) -> &[Arc] {
        debug_assert!(self.ilabel_sorted);
        let arcs = &self.states[state].arcs;
        let lo = arcs.partition_point(|a| a.ilabel < label);
        let hi = lo + arcs[lo..].partition_point(|a| a.ilabel == label);
        &arcs[lo..hi]
    }

    /// A builder pre-populated with a copy of this machine.
    pub fn to_builder(&self) -> FstBuilder {
        FstBuilder {
            states: self.states.clone(),
            start: self.start,
        }
    }
}

impl fmt::Debug for Fst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Fst(start={:?}, states={})",
            self.start,
            self.states.len()
        )?;
        for (i, s) in self.states.iter().enumerate() {
            for a in &s.arcs {
                writeln!(
                    f,
                    "  {i} -> {} {:?}:{:?} / {}",
                    a.nextstate, a.ilabel, a.olabel, a.weight
                )?;
            }
            if !s.final_weight.is_zero() {
                writeln!(f, "  {i} final {}", s.final_weight)?;
            }
        }
        Ok(())
    }
}

/// Mutable construction object for an [`Fst`].
#[derive(Clone, Debug, Default)]
pub struct FstBuilder {
    states: Vec<State>,
    start: Option<StateId>,
}

impl FstBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_state(&mut self) -> StateId {
        self.states.push(State::new());
        self.states.len() - 1
    }

    pub fn num_states(&self) -> usize {
        self.states.len()
    }

    pub fn set_start(&mut self, state: StateId) {
        self.start = Some(state);
    }

    pub fn start(&self) -> Option<StateId> {
        self.start
    }

    pub fn set_final(&mut self, state: StateId, weight: TropicalWeight) {
        self.states[state].final_weight = weight;
    }

    pub fn final_weight(&self, state: StateId) -> TropicalWeight {
        self.states[state].final_weight
    }

    pub fn add_arc(&mut self, state: StateId, arc: Arc) {
        self.states[state].arcs.push(arc);
    }

    pub fn arcs_mut(&mut self, state: StateId) -> &mut Vec<Arc> {
        &mut self.states[state].arcs
    }

    /// Copies every state and arc of `fst` into this builder and returns the
    /// offset added to its state ids. Start and final weights are copied too;
    /// the builder's own start is left untouched.
    pub fn append(&mut self, fst: &Fst) -> StateId {
        let offset = self.states.len();
        self.states.extend(fst.states.iter().map(|s| {
            State {
                arcs: s
                    .arcs
                    .iter()
                    .map(|a| Arc {
                        nextstate: a.nextstate + offset,
                        ..*a
                    })
                    .collect(),
                final_weight: s.final_weight,
            }
        }));
        offset
    }

    /// Freezes the builder.
    ///
    /// # Panics
    ///
    /// If an arc targets a nonexistent state or the start state is out of
    /// range.
    pub fn build(self) -> Fst {
        let n = self.states.len();
        if let Some(s) = self.start {
            assert!(s < n, "start state {s} out of range ({n} states)");
        }
        let mut ilabel_sorted = true;
        for (i, s) in self.states.iter().enumerate() {
            for a in &s.arcs {
                assert!(
                    a.nextstate < n,
                    "arc from state {i} targets state {} ({n} states)",
                    a.nextstate
                );
            }
            if ilabel_sorted && !s.arcs.windows(2).all(|w| w[0].ilabel <= w[1].ilabel) {
                ilabel_sorted = false;
            }
        }
        Fst {
            states: self.states,
            start: self.start,
            ilabel_sorted,
        }
    }
}
