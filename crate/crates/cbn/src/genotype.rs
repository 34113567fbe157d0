//! Fixed-width bit-vector genotypes.
//!
//! A genotype records which events have occurred: bit `e` is set iff event
//! `e` has happened. Events are 0-indexed internally; the I/O layer maps
//! them to names.

use std::cmp::Ordering;
use std::fmt;

use crate::config::HARD_MAX_N;
use crate::error::{CbnError, Result};

/// A subset of the event set `[n]`, stored as a fixed-width bit vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Genotype {
    bits: u64,
    width: u8,
}

impl Genotype {
    /// The empty genotype (wild type) on `width` events.
    pub fn empty(width: usize) -> Self {
        assert!(width <= HARD_MAX_N, "genotype width exceeds {HARD_MAX_N}");
        Genotype { bits: 0, width: width as u8 }
    }

    /// The genotype in which every event has occurred.
    pub fn full(width: usize) -> Self {
        assert!(width <= HARD_MAX_N, "genotype width exceeds {HARD_MAX_N}");
        Genotype { bits: mask(width), width: width as u8 }
    }

    /// Builds a genotype from a raw bit mask. Bits above `width` must be 0.
    pub fn from_bits(bits: u64, width: usize) -> Self {
        assert!(width <= HARD_MAX_N, "genotype width exceeds {HARD_MAX_N}");
        assert!(bits & !mask(width) == 0, "bits outside the genotype width");
        Genotype { bits, width: width as u8 }
    }

    /// Builds a genotype containing exactly the listed events.
    pub fn from_events(width: usize, events: &[usize]) -> Self {
        let mut g = Genotype::empty(width);
        for &e in events {
            assert!(e < width, "event {e} out of range for width {width}");
            g.bits |= 1 << e;
        }
        g
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, e: usize) -> bool {
        e < self.width() && self.bits & (1 << e) != 0
    }

    pub fn with_event(&self, e: usize) -> Self {
        assert!(e < self.width(), "event {e} out of range");
        Genotype { bits: self.bits | (1 << e), width: self.width }
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "genotype width mismatch");
        Genotype { bits: self.bits | other.bits, width: self.width }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.width, other.width, "genotype width mismatch");
        Genotype { bits: self.bits & other.bits, width: self.width }
    }

    /// Events that have not occurred (the complement `g^c`).
    pub fn complement(&self) -> Self {
        Genotype { bits: !self.bits & mask(self.width()), width: self.width }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.width, other.width, "genotype width mismatch");
        self.bits & !other.bits == 0
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn count_ones(&self) -> u32 {
        self.bits.count_ones()
    }

    /// Iterates over the events in the genotype in ascending order.
    pub fn events(&self) -> impl Iterator<Item = usize> + '_ {
        let bits = self.bits;
        (0..self.width()).filter(move |e| bits & (1 << e) != 0)
    }

    /// Parses a bit string such as `"0110"`; character `i` is event `i`.
    pub fn parse_bitstring(s: &str) -> Result<Self> {
        if s.len() > HARD_MAX_N {
            return Err(CbnError::Parse {
                line: 0,
                msg: format!("bit string longer than {HARD_MAX_N} events: {s:?}"),
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '1' => bits |= 1 << i,
                '0' => {}
                other => {
                    return Err(CbnError::Parse {
                        line: 0,
                        msg: format!("invalid bit character {other:?} in {s:?}"),
                    })
                }
            }
        }
        Ok(Genotype { bits, width: s.len() as u8 })
    }

    /// Renders the genotype as a bit string; character `i` is event `i`.
    pub fn to_bitstring(&self) -> String {
        (0..self.width())
            .map(|e| if self.contains(e) { '1' } else { '0' })
            .collect()
    }

    /// Renders the genotype as a set of event names, `{}` when empty.
    pub fn format_with_names(&self, names: &[String]) -> String {
        let parts: Vec<&str> = self.events().map(|e| names[e].as_str()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn mask(width: usize) -> u64 {
    if width == 0 {
        0
    } else {
        u64::MAX >> (64 - width)
    }
}

// Canonical order: cardinality first, then the bit pattern as an integer.
// This is the global lattice order every enumeration in the crate uses.
impl Ord for Genotype {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.width, self.count_ones(), self.bits).cmp(&(
            other.width,
            other.count_ones(),
            other.bits,
        ))
    }
}

impl PartialOrd for Genotype {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Genotype {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_bitstring())
    }
}
