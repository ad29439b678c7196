//! Binary grammar archive.
//!
//! Layout (all integers little-endian):
//!
//! ```text
//! "WFST"  u32 version=1  u32 grammar_count
//! per grammar:
//!   u32 name_len, name bytes (UTF-8)
//!   u64 state_count, u64 start (u64::MAX for the empty machine)
//!   per state: u64 arc_count, then arcs as (u16 ilabel, u16 olabel, f64 weight, u64 nextstate)
//!   u64 final_count, then (u64 state, f64 weight) pairs in ascending state order
//! ```
//!
//! Grammars are written in name order, so the same set always produces the
//! same bytes.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{FstError, Result};
use crate::fst::{Arc, Fst, FstBuilder, Label};
use crate::weight::TropicalWeight;

pub const MAGIC: &[u8; 4] = b"WFST";
pub const VERSION: u32 = 1;
const NO_START: u64 = u64::MAX;

/// A named set of compiled grammars.
pub type Archive = BTreeMap<String, Fst>;

pub fn write_archive<W: Write>(grammars: &Archive, mut w: W) -> io::Result<()> {
    w.write_all(MAGIC)?;
    w.write_all(&VERSION.to_le_bytes())?;
    w.write_all(&(grammars.len() as u32).to_le_bytes())?;
    for (name, fst) in grammars {
        w.write_all(&(name.len() as u32).to_le_bytes())?;
        w.write_all(name.as_bytes())?;
        w.write_all(&(fst.num_states() as u64).to_le_bytes())?;
        let start = fst.start().map_or(NO_START, |s| s as u64);
        w.write_all(&start.to_le_bytes())?;
        for s in fst.state_ids() {
            let arcs = fst.arcs(s);
            w.write_all(&(arcs.len() as u64).to_le_bytes())?;
            for a in arcs {
                w.write_all(&a.ilabel.id().to_le_bytes())?;
                w.write_all(&a.olabel.id().to_le_bytes())?;
                w.write_all(&a.weight.value().to_le_bytes())?;
                w.write_all(&(a.nextstate as u64).to_le_bytes())?;
            }
        }
        let finals: Vec<_> = fst.finals().collect();
        w.write_all(&(finals.len() as u64).to_le_bytes())?;
        for (s, weight) in finals {
            w.write_all(&(s as u64).to_le_bytes())?;
            w.write_all(&weight.value().to_le_bytes())?;
        }
    }
    w.flush()
}

pub fn save_archive(grammars: &Archive, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let io_err = |source| FstError::Io {
        path: path.to_path_buf(),
        source,
    };
    let mut buf = Vec::new();
    write_archive(grammars, &mut buf).map_err(io_err)?;
    fs::write(path, buf).map_err(io_err)
}

pub fn load_archive(path: impl AsRef<Path>) -> Result<Archive> {
    let path = path.as_ref();
    let bytes = fs::read(path).map_err(|source| FstError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_archive(&bytes)
}

struct Cursor<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn take(&mut self, n: usize) -> Result<&'a [u8]> {
        let end = self.pos.checked_add(n).ok_or(FstError::Truncated)?;
        let slice = self.bytes.get(self.pos..end).ok_or(FstError::Truncated)?;
        self.pos = end;
        Ok(slice)
    }

    fn array<const N: usize>(&mut self) -> Result<[u8; N]> {
        Ok(self.take(N)?.try_into().expect("slice length"))
    }

    fn u16(&mut self) -> Result<u16> {
        Ok(u16::from_le_bytes(self.array()?))
    }

    fn u32(&mut self) -> Result<u32> {
        Ok(u32::from_le_bytes(self.array()?))
    }

    fn u64(&mut self) -> Result<u64> {
        Ok(u64::from_le_bytes(self.array()?))
    }

    fn f64(&mut self) -> Result<f64> {
        Ok(f64::from_le_bytes(self.array()?))
    }

    fn remaining(&self) -> usize {
        self.bytes.len() - self.pos
    }
}

fn corrupt(msg: impl Into<String>) -> FstError {
    FstError::Corrupt(msg.into())
}

pub fn read_archive(bytes: &[u8]) -> Result<Archive> {
    let mut c = Cursor { bytes, pos: 0 };
    match c.take(4) {
        Ok(m) if m == MAGIC => {}
        Ok(_) => return Err(FstError::BadMagic),
        // Too short to even hold the magic: not one of ours.
        Err(_) => return Err(FstError::BadMagic),
    }
    let version = c.u32()?;
    if version != VERSION {
        return Err(FstError::UnsupportedVersion(version));
    }
    let count = c.u32()?;
    let mut grammars = Archive::new();
    for _ in 0..count {
        let name_len = c.u32()? as usize;
        let name = std::str::from_utf8(c.take(name_len)?)
            .map_err(|_| corrupt("grammar name is not UTF-8"))?
            .to_string();
        let fst = read_fst(&mut c).map_err(|e| match e {
            FstError::Corrupt(m) => corrupt(format!("{name}: {m}")),
            e => e,
        })?;
        if grammars.insert(name.clone(), fst).is_some() {
            return Err(corrupt(format!("duplicate grammar name {name:?}")));
        }
    }
    if c.remaining() != 0 {
        return Err(corrupt(format!("{} trailing bytes", c.remaining())));
    }
    Ok(grammars)
}

fn read_fst(c: &mut Cursor<'_>) -> Result<Fst> {
    let num_states = c.u64()?;
    // Each state needs at least its 8-byte arc count.
    if num_states > (c.remaining() / 8) as u64 {
        return Err(FstError::Truncated);
    }
    let num_states = num_states as usize;
    let start = c.u64()?;
    let mut b = FstBuilder::new();
    for _ in 0..num_states {
        b.add_state();
    }
    let label =
        |id: u16| Label::from_id(id).ok_or_else(|| corrupt(format!("label {id} out of range")));
    let target = |t: u64| {
        (t < num_states as u64)
            .then_some(t as usize)
            .ok_or_else(|| corrupt(format!("state {t} out of range")))
    };
    for s in 0..num_states {
        let num_arcs = c.u64()?;
        if num_arcs > (c.remaining() / 20) as u64 {
            return Err(FstError::Truncated);
        }
        for _ in 0..num_arcs {
            let ilabel = label(c.u16()?)?;
            let olabel = label(c.u16()?)?;
            let weight = c.f64()?;
            if weight.is_nan() {
                return Err(corrupt("NaN arc weight"));
            }
            let next = target(c.u64()?)?;
            b.add_arc(
                s,
                Arc::new(ilabel, olabel, TropicalWeight::new(weight), next),
            );
        }
    }
    let num_finals = c.u64()?;
    let mut prev: Option<usize> = None;
    for _ in 0..num_finals {
        let s = target(c.u64()?)?;
        let w = c.f64()?;
        if w.is_nan() || w == f64::INFINITY {
            return Err(corrupt(format!("invalid final weight {w}")));
        }
        if prev.is_some_and(|p| p >= s) {
            return Err(corrupt("final states not strictly ascending"));
        }
        prev = Some(s);
        b.set_final(s, TropicalWeight::new(w));
    }
    if start != NO_START {
        b.set_start(target(start)?);
    } else if num_states != 0 {
        return Err(corrupt("states present but no start state"));
    }
    Ok(b.build())
}
