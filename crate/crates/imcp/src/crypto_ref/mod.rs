//! Ground-truth reference implementations used as differential-test
//! oracles for every fabric result: GF(2^8) arithmetic, the S-boxes, the
//! key schedule, plain AES, the block modes, and SHA-256.
//!
//! Everything in this module is pure and safe to call from any number of
//! threads. Nothing here touches the simulated hardware blocks.

mod aes;
mod gf;
mod modes;
mod sha256;

pub use aes::{
    add_round_key, aes_block_ref, aes_block_trace, inv_mix_column, inv_mix_columns,
    inv_shift_rows, inv_sub_bytes, key_expand, mix_column, mix_columns, shift_rows, sub_bytes,
    KeySchedule,
};
pub use gf::{gf_mul, sbox_tables, GfByte};
pub use modes::mode_ref;
pub use sha256::{
    big_sigma0, big_sigma1, choice, majority, pad_message, sha256_ref, small_sigma0, small_sigma1,
    SHA256_INITIAL_HASH, SHA256_K,
};

use crate::error::{Error, Result};

/// Encryption or decryption. Shared by the reference cipher, the shifter
/// block and the LUT fabric.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Encrypt,
    Decrypt,
}

/// Block cipher mode of operation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Ecb,
    Cbc,
    Ctr,
}

impl Mode {
    pub fn name(&self) -> &'static str {
        match self {
            Mode::Ecb => "ecb",
            Mode::Cbc => "cbc",
            Mode::Ctr => "ctr",
        }
    }
}

/// AES key size variant. `rounds()` is the round count N.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AesVariant {
    Aes128,
    Aes192,
    Aes256,
}

impl AesVariant {
    pub fn rounds(&self) -> usize {
        match self {
            AesVariant::Aes128 => 10,
            AesVariant::Aes192 => 12,
            AesVariant::Aes256 => 14,
        }
    }

    pub fn key_len(&self) -> usize {
        match self {
            AesVariant::Aes128 => 16,
            AesVariant::Aes192 => 24,
            AesVariant::Aes256 => 32,
        }
    }

    pub fn key_bits(&self) -> u32 {
        self.key_len() as u32 * 8
    }

    pub fn from_bits(bits: u32) -> Result<Self> {
        match bits {
            128 => Ok(AesVariant::Aes128),
            192 => Ok(AesVariant::Aes192),
            256 => Ok(AesVariant::Aes256),
            other => Err(Error::Config(format!("unsupported AES key size {other}"))),
        }
    }
}

/// A 128-bit AES state viewed as a 4x4 byte grid. Byte `k` of the flat
/// block lives at cell `(k % 4, k / 4)`, i.e. the grid is column-major and
/// column `j` is the contiguous slice `bytes[4j..4j+4]`.
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct StateBlock {
    bytes: [u8; 16],
}

impl StateBlock {
    pub fn new(bytes: [u8; 16]) -> Self {
        StateBlock { bytes }
    }

    pub fn zero() -> Self {
        StateBlock { bytes: [0; 16] }
    }

    pub fn from_slice(bytes: &[u8]) -> Result<Self> {
        let bytes: [u8; 16] = bytes
            .try_into()
            .map_err(|_| Error::BlockLength { len: bytes.len() })?;
        Ok(StateBlock { bytes })
    }

    pub fn bytes(&self) -> &[u8; 16] {
        &self.bytes
    }

    pub fn into_bytes(self) -> [u8; 16] {
        self.bytes
    }

    /// Byte at grid row `i`, column `j`.
    pub fn cell(&self, i: usize, j: usize) -> u8 {
        debug_assert!(i < 4 && j < 4);
        self.bytes[4 * j + i]
    }

    pub fn set_cell(&mut self, i: usize, j: usize, v: u8) {
        debug_assert!(i < 4 && j < 4);
        self.bytes[4 * j + i] = v;
    }

    pub fn column(&self, j: usize) -> [u8; 4] {
        debug_assert!(j < 4);
        self.bytes[4 * j..4 * j + 4].try_into().unwrap()
    }

    pub fn set_column(&mut self, j: usize, col: [u8; 4]) {
        debug_assert!(j < 4);
        self.bytes[4 * j..4 * j + 4].copy_from_slice(&col);
    }

    pub fn xor(&self, other: &StateBlock) -> StateBlock {
        let mut out = [0u8; 16];
        for (k, o) in out.iter_mut().enumerate() {
            *o = self.bytes[k] ^ other.bytes[k];
        }
        StateBlock { bytes: out }
    }
}

impl From<[u8; 16]> for StateBlock {
    fn from(bytes: [u8; 16]) -> Self {
        StateBlock { bytes }
    }
}

impl std::fmt::Debug for StateBlock {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}
