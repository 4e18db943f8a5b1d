//! Bi-directional shifter block: the ShiftRows / InvShiftRows byte
//! permutations on a full 128-bit state. The circuit is combinational, so
//! the model is a fixed permutation table of 16 source indices per
//! direction.

use crate::crypto_ref::{Direction, StateBlock};

// out[4j+i] = in[ENC_SRC[4j+i]]; row i rotates left by i for encryption,
// right for decryption, row 0 untouched.
const ENC_SRC: [usize; 16] = [0, 5, 10, 15, 4, 9, 14, 3, 8, 13, 2, 7, 12, 1, 6, 11];
const DEC_SRC: [usize; 16] = [0, 13, 10, 7, 4, 1, 14, 11, 8, 5, 2, 15, 12, 9, 6, 3];

/// Permute a state's rows. `Encrypt` rotates row i left by i positions,
/// `Decrypt` rotates right.
pub fn shift_rows(state: &StateBlock, dir: Direction) -> StateBlock {
    let table = match dir {
        Direction::Encrypt => &ENC_SRC,
        Direction::Decrypt => &DEC_SRC,
    };
    let src = state.bytes();
    let mut out = [0u8; 16];
    for (o, &s) in out.iter_mut().zip(table) {
        *o = src[s];
    }
    StateBlock::new(out)
}

/// The shifter as a fabric block; stateless.
#[derive(Clone, Copy, Debug, Default)]
pub struct Shifter;

impl Shifter {
    pub fn shift_rows(&self, state: &StateBlock, dir: Direction) -> StateBlock {
        shift_rows(state, dir)
    }
}
