//! ECB, CBC and CTR over the reference block cipher. ECB and CBC require
//! whole blocks; CTR accepts any length and truncates the final keystream
//! block. The CTR counter increments big-endian over the full 128-bit
//! block.

use super::aes::{aes_block_ref, KeySchedule};
use super::{Direction, Mode, StateBlock};
use crate::error::{Error, Result};

pub(crate) fn increment_counter(block: &mut [u8; 16]) {
    for b in block.iter_mut().rev() {
        *b = b.wrapping_add(1);
        if *b != 0 {
            break;
        }
    }
}

/// Reference mode-of-operation transform.
pub fn mode_ref(
    mode: Mode,
    ks: &KeySchedule,
    iv_or_counter: &[u8; 16],
    data: &[u8],
    dir: Direction,
) -> Result<Vec<u8>> {
    if mode != Mode::Ctr && data.len() % 16 != 0 {
        return Err(Error::BlockLength { len: data.len() });
    }
    let mut out = Vec::with_capacity(data.len());

    match mode {
        Mode::Ecb => {
            for chunk in data.chunks_exact(16) {
                let block = StateBlock::from_slice(chunk)?;
                out.extend_from_slice(aes_block_ref(block, ks, dir).bytes());
            }
        }
        Mode::Cbc => {
            let mut prev = *iv_or_counter;
            for chunk in data.chunks_exact(16) {
                let block: [u8; 16] = chunk.try_into().unwrap();
                match dir {
                    Direction::Encrypt => {
                        let x = StateBlock::new(block).xor(&StateBlock::new(prev));
                        let ct = aes_block_ref(x, ks, Direction::Encrypt);
                        out.extend_from_slice(ct.bytes());
                        prev = *ct.bytes();
                    }
                    Direction::Decrypt => {
                        let d = aes_block_ref(StateBlock::new(block), ks, Direction::Decrypt);
                        let pt = d.xor(&StateBlock::new(prev));
                        out.extend_from_slice(pt.bytes());
                        prev = block;
                    }
                }
            }
        }
        Mode::Ctr => {
            // same keystream both directions
            let mut counter = *iv_or_counter;
            for chunk in data.chunks(16) {
                let ks_block =
                    aes_block_ref(StateBlock::new(counter), ks, Direction::Encrypt);
                for (b, k) in chunk.iter().zip(ks_block.bytes()) {
                    out.push(b ^ k);
                }
                increment_counter(&mut counter);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::aes::key_expand;
    use super::*;
    use crate::crypto_ref::AesVariant;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn hex(s: &str) -> Vec<u8> {
        (0..s.len())
            .step_by(2)
            .map(|i| u8::from_str_radix(&s[i..i + 2], 16).unwrap())
            .collect()
    }

    #[test]
    fn ecb_is_stateless() {
        let ks = key_expand(&[7u8; 16], AesVariant::Aes128).unwrap();
        let data = [0xA5u8; 32];
        let ct = mode_ref(Mode::Ecb, &ks, &[0; 16], &data, Direction::Encrypt).unwrap();
        assert_eq!(&ct[..16], &ct[16..]);
    }

    #[test]
    fn ecb_rejects_partial_blocks() {
        let ks = key_expand(&[0u8; 16], AesVariant::Aes128).unwrap();
        let err = mode_ref(Mode::Ecb, &ks, &[0; 16], &[0u8; 17], Direction::Encrypt).unwrap_err();
        assert!(matches!(err, Error::BlockLength { len: 17 }));
    }

    #[test]
    fn published_cbc_and_ctr_vectors() {
        // SP 800-38A AES-128 vectors, gathered from an independent oracle
        let ks = key_expand(&hex("2b7e151628aed2a6abf7158809cf4f3c"), AesVariant::Aes128).unwrap();
        let pt = hex(
            "6bc1bee22e409f96e93d7e117393172a\
             ae2d8a571e03ac9c9eb76fac45af8e51\
             30c81c46a35ce411e5fbc1191a0a52ef\
             f69f2445df4f9b17ad2b417be66c3710",
        );

        let iv: [u8; 16] = hex("000102030405060708090a0b0c0d0e0f").try_into().unwrap();
        let cbc = mode_ref(Mode::Cbc, &ks, &iv, &pt, Direction::Encrypt).unwrap();
        assert_eq!(
            cbc,
            hex(
                "7649abac8119b246cee98e9b12e9197d\
                 5086cb9b507219ee95db113a917678b2\
                 73bed6b8e3c1743b7116e69e22229516\
                 3ff1caa1681fac09120eca307586e1a7"
            )
        );

        let ctr0: [u8; 16] = hex("f0f1f2f3f4f5f6f7f8f9fafbfcfdfeff").try_into().unwrap();
        let ctr = mode_ref(Mode::Ctr, &ks, &ctr0, &pt, Direction::Encrypt).unwrap();
        assert_eq!(
            ctr,
            hex(
                "874d6191b620e3261bef6864990db6ce\
                 9806f66b7970fdff8617187bb9fffdff\
                 5ae4df3edbd5d35e5b4f09020db03eab\
                 1e031dda2fbe03d1792170a0f3009cee"
            )
        );
    }

    #[test]
    fn every_mode_inverts() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
        for variant in [AesVariant::Aes128, AesVariant::Aes192, AesVariant::Aes256] {
            let mut key = vec![0u8; variant.key_len()];
            rng.fill(key.as_mut_slice());
            let ks = key_expand(&key, variant).unwrap();
            let mut iv = [0u8; 16];
            rng.fill(&mut iv);
            for mode in [Mode::Ecb, Mode::Cbc, Mode::Ctr] {
                let len = if mode == Mode::Ctr { 100 } else { 96 };
                let mut data = vec![0u8; len];
                rng.fill(data.as_mut_slice());
                let ct = mode_ref(mode, &ks, &iv, &data, Direction::Encrypt).unwrap();
                let pt = mode_ref(mode, &ks, &iv, &ct, Direction::Decrypt).unwrap();
                assert_eq!(pt, data, "{variant:?} {mode:?}");
            }
        }
    }

    #[test]
    fn ctr_encryption_is_an_involution() {
        let ks = key_expand(&[3u8; 16], AesVariant::Aes128).unwrap();
        let counter = [0xFFu8; 16]; // also exercises the full-block wrap
        let data: Vec<u8> = (0..77).map(|i| i as u8).collect();
        let once = mode_ref(Mode::Ctr, &ks, &counter, &data, Direction::Encrypt).unwrap();
        let twice = mode_ref(Mode::Ctr, &ks, &counter, &once, Direction::Encrypt).unwrap();
        assert_eq!(twice, data);
    }

    #[test]
    fn counter_increment_is_big_endian_with_carry() {
        let mut c = [0u8; 16];
        c[15] = 0xFF;
        increment_counter(&mut c);
        assert_eq!(c[15], 0x00);
        assert_eq!(c[14], 0x01);
        let mut all = [0xFFu8; 16];
        increment_counter(&mut all);
        assert_eq!(all, [0u8; 16]);
    }
}
