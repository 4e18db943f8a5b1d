//! Reference AES: round steps, key schedule, and the single-block cipher
//! in both directions. Decryption is the straight inverse cipher
//! (InvShiftRows -> InvSubBytes -> AddRoundKey -> InvMixColumns per
//! round), not the equivalent-inverse-cipher form with transformed keys.

use super::gf::{mul, INV_SBOX, SBOX};
use super::{AesVariant, Direction, StateBlock};
use crate::error::{Error, Result};

/// Expanded round keys: N + 1 blocks of 16 bytes.
#[derive(Clone, Debug)]
pub struct KeySchedule {
    variant: AesVariant,
    round_keys: Vec<[u8; 16]>,
}

impl KeySchedule {
    pub fn variant(&self) -> AesVariant {
        self.variant
    }

    pub fn round_keys(&self) -> &[[u8; 16]] {
        &self.round_keys
    }

    pub fn round_key(&self, round: usize) -> &[u8; 16] {
        &self.round_keys[round]
    }
}

/// Rijndael key expansion for the 16/24/32-byte key sizes.
pub fn key_expand(key: &[u8], variant: AesVariant) -> Result<KeySchedule> {
    if key.len() != variant.key_len() {
        return Err(Error::InvalidKey {
            got: key.len(),
            want: variant.key_len(),
        });
    }
    let nk = key.len() / 4;
    let total_words = 4 * (variant.rounds() + 1);

    let mut words: Vec<[u8; 4]> = Vec::with_capacity(total_words);
    for chunk in key.chunks_exact(4) {
        words.push(chunk.try_into().unwrap());
    }

    let mut rcon: u8 = 1;
    for i in nk..total_words {
        let mut t = words[i - 1];
        if i % nk == 0 {
            t.rotate_left(1);
            for b in &mut t {
                *b = SBOX[*b as usize];
            }
            t[0] ^= rcon;
            rcon = mul(rcon, 2);
        } else if nk > 6 && i % nk == 4 {
            for b in &mut t {
                *b = SBOX[*b as usize];
            }
        }
        let prev = words[i - nk];
        words.push([prev[0] ^ t[0], prev[1] ^ t[1], prev[2] ^ t[2], prev[3] ^ t[3]]);
    }

    let round_keys = words
        .chunks_exact(4)
        .map(|ws| {
            let mut rk = [0u8; 16];
            for (w, chunk) in ws.iter().zip(rk.chunks_exact_mut(4)) {
                chunk.copy_from_slice(w);
            }
            rk
        })
        .collect();

    Ok(KeySchedule {
        variant,
        round_keys,
    })
}

pub fn add_round_key(state: &mut StateBlock, rk: &[u8; 16]) {
    let mut bytes = *state.bytes();
    for (b, k) in bytes.iter_mut().zip(rk) {
        *b ^= k;
    }
    *state = StateBlock::new(bytes);
}

pub fn sub_bytes(state: &mut StateBlock) {
    let mut bytes = *state.bytes();
    for b in &mut bytes {
        *b = SBOX[*b as usize];
    }
    *state = StateBlock::new(bytes);
}

pub fn inv_sub_bytes(state: &mut StateBlock) {
    let mut bytes = *state.bytes();
    for b in &mut bytes {
        *b = INV_SBOX[*b as usize];
    }
    *state = StateBlock::new(bytes);
}

/// Row i rotates left by i cells; row 0 is untouched.
pub fn shift_rows(state: &mut StateBlock) {
    let src = *state;
    for i in 1..4 {
        for j in 0..4 {
            state.set_cell(i, j, src.cell(i, (j + i) % 4));
        }
    }
}

pub fn inv_shift_rows(state: &mut StateBlock) {
    let src = *state;
    for i in 1..4 {
        for j in 0..4 {
            state.set_cell(i, j, src.cell(i, (j + 4 - i) % 4));
        }
    }
}

/// MixColumns on a single column: the {2,3,1,1} circulant.
pub fn mix_column(col: [u8; 4]) -> [u8; 4] {
    let [a0, a1, a2, a3] = col;
    [
        mul(2, a0) ^ mul(3, a1) ^ a2 ^ a3,
        a0 ^ mul(2, a1) ^ mul(3, a2) ^ a3,
        a0 ^ a1 ^ mul(2, a2) ^ mul(3, a3),
        mul(3, a0) ^ a1 ^ a2 ^ mul(2, a3),
    ]
}

/// InvMixColumns on a single column: the {14,11,13,9} circulant.
pub fn inv_mix_column(col: [u8; 4]) -> [u8; 4] {
    let [a0, a1, a2, a3] = col;
    [
        mul(14, a0) ^ mul(11, a1) ^ mul(13, a2) ^ mul(9, a3),
        mul(9, a0) ^ mul(14, a1) ^ mul(11, a2) ^ mul(13, a3),
        mul(13, a0) ^ mul(9, a1) ^ mul(14, a2) ^ mul(11, a3),
        mul(11, a0) ^ mul(13, a1) ^ mul(9, a2) ^ mul(14, a3),
    ]
}

pub fn mix_columns(state: &mut StateBlock) {
    for j in 0..4 {
        state.set_column(j, mix_column(state.column(j)));
    }
}

pub fn inv_mix_columns(state: &mut StateBlock) {
    for j in 0..4 {
        state.set_column(j, inv_mix_column(state.column(j)));
    }
}

/// Single-block AES in either direction.
pub fn aes_block_ref(block: StateBlock, ks: &KeySchedule, dir: Direction) -> StateBlock {
    let (out, _) = cipher(block, ks, dir, false);
    out
}

/// Single-block AES that also returns the state after every
/// round-key-absorbing step, in execution order: the initial AddRoundKey,
/// then one entry per round. Used for round-by-round comparison against
/// the fabric.
pub fn aes_block_trace(
    block: StateBlock,
    ks: &KeySchedule,
    dir: Direction,
) -> (StateBlock, Vec<StateBlock>) {
    cipher(block, ks, dir, true)
}

fn cipher(
    block: StateBlock,
    ks: &KeySchedule,
    dir: Direction,
    trace: bool,
) -> (StateBlock, Vec<StateBlock>) {
    let n = ks.variant.rounds();
    let mut state = block;
    let mut states = Vec::new();
    let mut capture = |s: &StateBlock, states: &mut Vec<StateBlock>| {
        if trace {
            states.push(*s);
        }
    };

    match dir {
        Direction::Encrypt => {
            add_round_key(&mut state, ks.round_key(0));
            capture(&state, &mut states);
            for round in 1..n {
                sub_bytes(&mut state);
                shift_rows(&mut state);
                mix_columns(&mut state);
                add_round_key(&mut state, ks.round_key(round));
                capture(&state, &mut states);
            }
            sub_bytes(&mut state);
            shift_rows(&mut state);
            add_round_key(&mut state, ks.round_key(n));
            capture(&state, &mut states);
        }
        Direction::Decrypt => {
            add_round_key(&mut state, ks.round_key(n));
            capture(&state, &mut states);
            for round in (1..n).rev() {
                inv_shift_rows(&mut state);
                inv_sub_bytes(&mut state);
                add_round_key(&mut state, ks.round_key(round));
                inv_mix_columns(&mut state);
                capture(&state, &mut states);
            }
            inv_shift_rows(&mut state);
            inv_sub_bytes(&mut state);
            add_round_key(&mut state, ks.round_key(0));
            capture(&state, &mut states);
        }
    }
    (state, states)
}
