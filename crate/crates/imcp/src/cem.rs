//! Compute-enabled memory: word-addressed 32-bit storage that executes
//! two-operand bitwise/arithmetic operations between stored words in
//! place. Words pack big-endian so that 128-bit blocks and SHA-256 word
//! semantics line up with the byte-level view.
//!
//! Memory is zero-initialized for deterministic simulation. The default
//! memory map used by generated programs (word addresses): state buffers
//! at 0x0000, round keys at 0x0100, SHA-256 round constants at 0x0200,
//! message schedule at 0x0300, hash registers at 0x0380, scratch from
//! 0x0400.

use crate::error::{Error, Result};
use std::io::{BufRead, Write};

/// 262,144 x 32-bit words = 1 MiB.
pub const DEFAULT_CAPACITY_WORDS: usize = 262_144;

/// Word address of a 128-bit block (4 consecutive words).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockAddress(pub u32);

/// In-place word operations. `Move` and `Not` are unary; the shift family
/// takes its amount from the word at `src1` modulo 32 and shifts the word
/// at `src2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WordOp {
    Move,
    Add,
    And,
    Or,
    Xor,
    Not,
    Csr,
    Sr,
    Csl,
    Sl,
}

impl WordOp {
    pub const ALL: [WordOp; 10] = [
        WordOp::Move,
        WordOp::Add,
        WordOp::And,
        WordOp::Or,
        WordOp::Xor,
        WordOp::Not,
        WordOp::Csr,
        WordOp::Sr,
        WordOp::Csl,
        WordOp::Sl,
    ];

    pub fn is_unary(&self) -> bool {
        matches!(self, WordOp::Move | WordOp::Not)
    }

    fn index(&self) -> usize {
        Self::ALL.iter().position(|op| op == self).unwrap()
    }
}

#[derive(Clone, Debug)]
pub struct CemMemory {
    words: Vec<u32>,
    op_counters: [u64; 10],
}

impl Default for CemMemory {
    fn default() -> Self {
        Self::new()
    }
}

impl CemMemory {
    pub fn new() -> Self {
        Self::with_capacity(DEFAULT_CAPACITY_WORDS)
    }

    pub fn with_capacity(words: usize) -> Self {
        CemMemory {
            words: vec![0; words],
            op_counters: [0; 10],
        }
    }

    pub fn capacity(&self) -> usize {
        self.words.len()
    }

    pub fn read_word(&self, addr: usize) -> Result<u32> {
        self.words.get(addr).copied().ok_or(Error::Address {
            addr,
            capacity: self.words.len(),
        })
    }

    pub fn write_word(&mut self, addr: usize, value: u32) -> Result<()> {
        let capacity = self.words.len();
        let w = self
            .words
            .get_mut(addr)
            .ok_or(Error::Address { addr, capacity })?;
        *w = value;
        Ok(())
    }

    fn check_block(&self, addr: BlockAddress) -> Result<usize> {
        let base = addr.0 as usize;
        if base.checked_add(3).is_none_or(|end| end >= self.words.len()) {
            return Err(Error::Address {
                addr: base,
                capacity: self.words.len(),
            });
        }
        Ok(base)
    }

    /// Store 16 bytes as 4 words: byte k goes to word k/4, big-endian
    /// within the word.
    pub fn store_block(&mut self, addr: BlockAddress, bytes: &[u8; 16]) -> Result<()> {
        let base = self.check_block(addr)?;
        for (k, chunk) in bytes.chunks_exact(4).enumerate() {
            self.words[base + k] = u32::from_be_bytes(chunk.try_into().unwrap());
        }
        Ok(())
    }

    /// Inverse of [`store_block`](Self::store_block).
    pub fn load_block(&self, addr: BlockAddress) -> Result<[u8; 16]> {
        let base = self.check_block(addr)?;
        let mut bytes = [0u8; 16];
        for (k, chunk) in bytes.chunks_exact_mut(4).enumerate() {
            chunk.copy_from_slice(&self.words[base + k].to_be_bytes());
        }
        Ok(bytes)
    }

    /// Execute one in-place word operation. `dst` may alias either source;
    /// the result is computed before writeback. ADD wraps modulo 2^32,
    /// SR/SL fill with zeros, CSR/CSL rotate.
    pub fn word_op(&mut self, op: WordOp, src1: usize, src2: usize, dst: usize) -> Result<()> {
        let a = self.read_word(src1)?;
        let result = if op.is_unary() {
            match op {
                WordOp::Move => a,
                WordOp::Not => !a,
                _ => unreachable!(),
            }
        } else {
            let b = self.read_word(src2)?;
            // shifts: amount from src1 (mod 32), operand from src2
            let amount = a % 32;
            match op {
                WordOp::Add => a.wrapping_add(b),
                WordOp::And => a & b,
                WordOp::Or => a | b,
                WordOp::Xor => a ^ b,
                WordOp::Csr => b.rotate_right(amount),
                WordOp::Sr => b >> amount,
                WordOp::Csl => b.rotate_left(amount),
                WordOp::Sl => b << amount,
                _ => unreachable!(),
            }
        };
        self.write_word(dst, result)?;
        self.op_counters[op.index()] += 1;
        Ok(())
    }

    /// 128-bit XOR as four word XORs; equals byte-wise XOR of the blocks.
    pub fn xor_block(
        &mut self,
        a: BlockAddress,
        b: BlockAddress,
        dst: BlockAddress,
    ) -> Result<()> {
        let a = self.check_block(a)?;
        let b = self.check_block(b)?;
        let d = self.check_block(dst)?;
        for k in 0..4 {
            self.word_op(WordOp::Xor, a + k, b + k, d + k)?;
        }
        Ok(())
    }

    pub fn op_count(&self, op: WordOp) -> u64 {
        self.op_counters[op.index()]
    }

    pub fn op_counter_total(&self) -> u64 {
        self.op_counters.iter().sum()
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    /// Memory-image dump: one 8-hex-digit word per line, line number =
    /// word address.
    pub fn dump_hex(&self, out: &mut impl Write) -> std::io::Result<()> {
        for w in &self.words {
            writeln!(out, "{w:08x}")?;
        }
        Ok(())
    }

    /// Load a hex image produced by [`dump_hex`](Self::dump_hex). Lines
    /// beyond the image leave the rest of memory zeroed; an image larger
    /// than `capacity` is an address error.
    pub fn load_hex(reader: impl BufRead, capacity: usize) -> Result<CemMemory> {
        let mut mem = CemMemory::with_capacity(capacity);
        for (addr, line) in reader.lines().enumerate() {
            let line = line?;
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let value = u32::from_str_radix(line, 16).map_err(|_| {
                Error::ProgramFormat(format!("line {}: bad hex word `{line}`", addr + 1))
            })?;
            mem.write_word(addr, value)?;
        }
        Ok(mem)
    }
}
