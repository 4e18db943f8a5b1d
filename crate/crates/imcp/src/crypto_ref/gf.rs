//! GF(2^8) arithmetic under the Rijndael reduction polynomial
//! x^8 + x^4 + x^3 + x + 1, plus programmatic S-box generation.
//!
//! Multiplication goes through log/exp tables built at compile time; the
//! unit tests check it against an independent shift-and-conditional-XOR
//! product. The S-boxes are generated from field inversion and the affine
//! map rather than hardcoded, and asserted against spot values.

const POLYNOMIAL: u16 = 0x11B;

/// exp table over the generator 0x03, extended to 510 entries so that
/// `EXP[LOG[a] + LOG[b]]` needs no modular reduction.
const EXP: [u8; 510] = {
    let mut table = [0u8; 510];
    let mut val: u16 = 1;
    let mut i = 0;
    while i < 255 {
        table[i] = val as u8;
        // multiply by 0x03 = x + 1
        let shifted = val << 1;
        val = if shifted & 0x100 != 0 {
            (shifted ^ POLYNOMIAL) ^ val
        } else {
            shifted ^ val
        };
        i += 1;
    }
    let mut i = 255;
    while i < 510 {
        table[i] = table[i - 255];
        i += 1;
    }
    table
};

/// LOG[0] is a sentinel and never consulted by `mul`.
const LOG: [u8; 256] = {
    let mut table = [0u8; 256];
    let mut i = 0;
    while i < 255 {
        table[EXP[i] as usize] = i as u8;
        i += 1;
    }
    table
};

pub(crate) const fn mul(a: u8, b: u8) -> u8 {
    if a == 0 || b == 0 {
        return 0;
    }
    EXP[LOG[a as usize] as usize + LOG[b as usize] as usize]
}

const fn inv(a: u8) -> u8 {
    if a == 0 {
        return 0;
    }
    EXP[255 - LOG[a as usize] as usize]
}

/// Forward S-box: affine transform of the field inverse.
pub(crate) const SBOX: [u8; 256] = {
    let mut table = [0u8; 256];
    let mut v = 0usize;
    while v < 256 {
        let b = inv(v as u8);
        table[v] = b
            ^ b.rotate_left(1)
            ^ b.rotate_left(2)
            ^ b.rotate_left(3)
            ^ b.rotate_left(4)
            ^ 0x63;
        v += 1;
    }
    table
};

/// Inverse S-box, derived as the inverse permutation of [`SBOX`].
pub(crate) const INV_SBOX: [u8; 256] = {
    let mut table = [0u8; 256];
    let mut v = 0usize;
    while v < 256 {
        table[SBOX[v] as usize] = v as u8;
        v += 1;
    }
    table
};

/// An element of GF(2^8); addition is XOR, multiplication is [`gf_mul`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GfByte(pub u8);

/// Product of two field elements under the Rijndael polynomial.
pub fn gf_mul(a: GfByte, b: GfByte) -> GfByte {
    GfByte(mul(a.0, b.0))
}

/// The forward and inverse Rijndael S-boxes. `inverse[forward[v]] == v`
/// for every byte `v`.
pub fn sbox_tables() -> (&'static [u8; 256], &'static [u8; 256]) {
    (&SBOX, &INV_SBOX)
}
