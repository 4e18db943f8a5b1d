//! The LUT fabric block: four parallel modules, one per state column.
//! Each module holds 4 RA/CAM arrays programmed with 1x sbox, 4 RAM
//! arrays with 2x sbox, 4 RAM arrays with 3x sbox, and 2 XOR trees.
//!
//! Encryption reads all twelve arrays in RAM mode and XORs the
//! pre-multiplied bytes, executing SubBytes and MixColumns as one pass
//! (each 1x value feeds two XOR-tree inputs since the coefficient 1
//! appears twice per matrix row). Decryption searches the RA/CAM arrays in
//! CAM mode -- the matching row index IS the inverse S-box value -- then
//! the customized encoder XORs a round-key byte and maps through
//! x9/x11/x13/x14 tables, executing InvSubBytes, AddRoundKey and
//! InvMixColumns as one pass. The RAM arrays are untouched during
//! decryption, so switching direction never reprograms anything.

use crate::crypto_ref::{gf_mul, Direction, GfByte};
use crate::error::{Error, Result};
use crate::ra_cam::{encode_single_match, RaCamArray, ROWS};

/// A plain 256x8 RAM array with a read counter.
#[derive(Clone, Debug)]
pub struct RamArray {
    data: [u8; ROWS],
    reads: u64,
}

impl RamArray {
    fn new() -> Self {
        RamArray {
            data: [0; ROWS],
            reads: 0,
        }
    }

    fn load(&mut self, table: [u8; ROWS]) {
        self.data = table;
    }

    fn read(&mut self, addr: u8) -> u8 {
        self.reads += 1;
        self.data[addr as usize]
    }

    pub fn reads(&self) -> u64 {
        self.reads
    }

    pub fn data(&self) -> &[u8; ROWS] {
        &self.data
    }
}

/// Stage-3 combinational mapping of the customized encoder: precomputed
/// x9/x11/x13/x14 products for every byte value.
#[derive(Clone, Debug)]
struct InvMixMaps {
    by9: [u8; ROWS],
    by11: [u8; ROWS],
    by13: [u8; ROWS],
    by14: [u8; ROWS],
}

impl InvMixMaps {
    fn new() -> Self {
        let mut maps = InvMixMaps {
            by9: [0; ROWS],
            by11: [0; ROWS],
            by13: [0; ROWS],
            by14: [0; ROWS],
        };
        for v in 0..ROWS {
            let b = GfByte(v as u8);
            maps.by9[v] = gf_mul(GfByte(9), b).0;
            maps.by11[v] = gf_mul(GfByte(11), b).0;
            maps.by13[v] = gf_mul(GfByte(13), b).0;
            maps.by14[v] = gf_mul(GfByte(14), b).0;
        }
        maps
    }
}

/// One LUT fabric module; processes one state column per operation.
#[derive(Clone, Debug)]
pub struct LutModule {
    racam: [RaCamArray; 4],
    ram2x: [RamArray; 4],
    ram3x: [RamArray; 4],
    encoder: InvMixMaps,
    loaded: bool,
}

impl LutModule {
    fn new() -> Self {
        LutModule {
            racam: std::array::from_fn(|_| RaCamArray::new()),
            ram2x: std::array::from_fn(|_| RamArray::new()),
            ram3x: std::array::from_fn(|_| RamArray::new()),
            encoder: InvMixMaps::new(),
            loaded: false,
        }
    }

    fn load_tables(&mut self, sbox: &[u8; ROWS]) {
        let mut t1 = [0u8; ROWS];
        let mut t2 = [0u8; ROWS];
        let mut t3 = [0u8; ROWS];
        for v in 0..ROWS {
            t1[v] = sbox[v];
            t2[v] = gf_mul(GfByte(2), GfByte(sbox[v])).0;
            t3[v] = gf_mul(GfByte(3), GfByte(sbox[v])).0;
        }
        for k in 0..4 {
            self.racam[k].load(&t1);
            self.ram2x[k].load(t2);
            self.ram3x[k].load(t3);
        }
        self.loaded = true;
    }

    fn check_loaded(&self) -> Result<()> {
        if self.loaded {
            Ok(())
        } else {
            Err(Error::TablesNotLoaded)
        }
    }

    /// Combined SubBytes + MixColumns on one column. All twelve arrays are
    /// read in RAM mode and the XOR trees combine the pre-multiplied
    /// bytes: with s_i = sbox(col_i), output k is the {2,3,1,1} circulant
    /// row over (s_0..s_3).
    pub fn encrypt_column(&mut self, col: [u8; 4]) -> Result<[u8; 4]> {
        self.check_loaded()?;
        let mut s1 = [0u8; 4];
        let mut s2 = [0u8; 4];
        let mut s3 = [0u8; 4];
        for i in 0..4 {
            s1[i] = self.racam[i].read_row(col[i] as usize)?;
            s2[i] = self.ram2x[i].read(col[i]);
            s3[i] = self.ram3x[i].read(col[i]);
        }
        let mut out = [0u8; 4];
        for k in 0..4 {
            // 2*s_k ^ 3*s_{k+1} ^ s_{k+2} ^ s_{k+3}; the single 1x read
            // fans out to both unit-coefficient tree inputs
            out[k] = s2[k] ^ s3[(k + 1) % 4] ^ s1[(k + 2) % 4] ^ s1[(k + 3) % 4];
        }
        Ok(out)
    }

    /// Combined InvSubBytes + AddRoundKey + InvMixColumns on one column.
    /// Stage 1: CAM search + match encode recovers invsbox(col_i).
    /// Stage 2: XOR with the round-key byte for that cell.
    /// Stage 3: the x9/x11/x13/x14 maps feed the XOR trees as the
    /// {14,11,13,9} circulant. The 2x/3x RAM arrays stay idle.
    pub fn decrypt_column(&mut self, col: [u8; 4], rk_col: [u8; 4]) -> Result<[u8; 4]> {
        self.check_loaded()?;
        let mut t = [0u8; 4];
        for i in 0..4 {
            let m = self.racam[i].search(col[i]);
            t[i] = encode_single_match(&m)? ^ rk_col[i];
        }
        let enc = &self.encoder;
        let mut out = [0u8; 4];
        for k in 0..4 {
            out[k] = enc.by14[t[k] as usize]
                ^ enc.by11[t[(k + 1) % 4] as usize]
                ^ enc.by13[t[(k + 2) % 4] as usize]
                ^ enc.by9[t[(k + 3) % 4] as usize];
        }
        Ok(out)
    }

    /// S-box-only path for final rounds: RAM-mode reads for encryption,
    /// CAM search plus stage-1 encode for decryption. Stages 2-3 and the
    /// XOR trees are bypassed.
    pub fn sub_bytes_column(&mut self, col: [u8; 4], dir: Direction) -> Result<[u8; 4]> {
        self.check_loaded()?;
        let mut out = [0u8; 4];
        match dir {
            Direction::Encrypt => {
                for i in 0..4 {
                    out[i] = self.racam[i].read_row(col[i] as usize)?;
                }
            }
            Direction::Decrypt => {
                for i in 0..4 {
                    out[i] = encode_single_match(&self.racam[i].search(col[i]))?;
                }
            }
        }
        Ok(out)
    }

    pub fn racam(&self, k: usize) -> &RaCamArray {
        &self.racam[k]
    }

    pub fn ram2x(&self, k: usize) -> &RamArray {
        &self.ram2x[k]
    }

    pub fn ram3x(&self, k: usize) -> &RamArray {
        &self.ram3x[k]
    }
}

/// Four identical modules operating independently, one per state column.
#[derive(Clone, Debug)]
pub struct LutFabric {
    pub modules: [LutModule; 4],
}

impl Default for LutFabric {
    fn default() -> Self {
        Self::new()
    }
}

impl LutFabric {
    pub fn new() -> Self {
        LutFabric {
            modules: std::array::from_fn(|_| LutModule::new()),
        }
    }

    /// Program every array in every module from one substitution table.
    /// The table must be a bijection on bytes; decryption reuses the same
    /// contents without reprogramming.
    pub fn load_tables(&mut self, sbox: &[u8; ROWS]) -> Result<()> {
        let mut seen = [false; ROWS];
        for &v in sbox {
            if seen[v as usize] {
                return Err(Error::TableNotBijective);
            }
            seen[v as usize] = true;
        }
        for module in &mut self.modules {
            module.load_tables(sbox);
        }
        Ok(())
    }

    pub fn is_loaded(&self) -> bool {
        self.modules.iter().all(|m| m.loaded)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::crypto_ref::{self, sbox_tables};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn loaded_fabric() -> LutFabric {
        let mut fabric = LutFabric::new();
        fabric.load_tables(sbox_tables().0).unwrap();
        fabric
    }

    #[test]
    fn load_programs_all_three_table_kinds() {
        let fabric = loaded_fabric();
        for module in &fabric.modules {
            for k in 0..4 {
                assert_eq!(module.racam(k).rows()[0x00], 0x63);
                assert_eq!(module.ram2x(k).data()[0x00], 0xC6); // 2 * 0x63
                assert_eq!(module.ram3x(k).data()[0x00], 0xA5); // 3 * 0x63
            }
        }
    }

    #[test]
    fn load_rejects_non_bijective_tables() {
        let mut fabric = LutFabric::new();
        let table = [0u8; 256];
        assert!(matches!(
            fabric.load_tables(&table),
            Err(Error::TableNotBijective)
        ));
        assert!(!fabric.is_loaded());
    }

    #[test]
    fn operations_require_loaded_tables() {
        let mut fabric = LutFabric::new();
        let m = &mut fabric.modules[0];
        assert!(matches!(
            m.encrypt_column([0; 4]),
            Err(Error::TablesNotLoaded)
        ));
        assert!(matches!(
            m.decrypt_column([0; 4], [0; 4]),
            Err(Error::TablesNotLoaded)
        ));
        assert!(matches!(
            m.sub_bytes_column([0; 4], Direction::Encrypt),
            Err(Error::TablesNotLoaded)
        ));
    }

    #[test]
    fn encrypt_column_of_zeros() {
        // circulant {2,3,1,1} XORs to 1, so every output is sbox(0)
        let mut fabric = loaded_fabric();
        let out = fabric.modules[0].encrypt_column([0, 0, 0, 0]).unwrap();
        assert_eq!(out, [0x63, 0x63, 0x63, 0x63]);
    }

    #[test]
    fn encrypt_column_frozen_sample() {
        // sbox-then-mixcolumn of [01 02 03 04], frozen from the GF oracle
        let mut fabric = loaded_fabric();
        let out = fabric.modules[0].encrypt_column([1, 2, 3, 4]).unwrap();
        assert_eq!(out, [0xE8, 0xED, 0xF0, 0x77]);
    }

    #[test]
    fn decrypt_column_of_zeros() {
        // invsbox(0) = 0x52 and circulant {14,11,13,9} XORs to 1
        let mut fabric = loaded_fabric();
        let out = fabric.modules[0]
            .decrypt_column([0, 0, 0, 0], [0, 0, 0, 0])
            .unwrap();
        assert_eq!(out, [0x52, 0x52, 0x52, 0x52]);
    }

    #[test]
    fn encrypt_column_equals_separate_steps() {
        let mut fabric = loaded_fabric();
        let (fwd, _) = sbox_tables();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0030);
        for _ in 0..100_000 {
            let col: [u8; 4] = rng.gen();
            let got = fabric.modules[0].encrypt_column(col).unwrap();
            let subbed = col.map(|b| fwd[b as usize]);
            assert_eq!(got, crypto_ref::mix_column(subbed), "col {col:02x?}");
        }
    }

    #[test]
    fn decrypt_column_equals_separate_steps() {
        let mut fabric = loaded_fabric();
        let (_, inv) = sbox_tables();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0031);
        for _ in 0..100_000 {
            let col: [u8; 4] = rng.gen();
            let rk: [u8; 4] = rng.gen();
            let got = fabric.modules[0].decrypt_column(col, rk).unwrap();
            let mut t = col.map(|b| inv[b as usize]);
            for (x, k) in t.iter_mut().zip(rk) {
                *x ^= k;
            }
            assert_eq!(got, crypto_ref::inv_mix_column(t), "col {col:02x?}");
        }
    }

    #[test]
    fn sub_bytes_column_both_directions() {
        let mut fabric = loaded_fabric();
        let enc = fabric.modules[0]
            .sub_bytes_column([0x00, 0x01, 0x02, 0x03], Direction::Encrypt)
            .unwrap();
        assert_eq!(enc, [0x63, 0x7C, 0x77, 0x7B]);

        let dec = fabric.modules[0]
            .sub_bytes_column([0x63; 4], Direction::Decrypt)
            .unwrap();
        assert_eq!(dec, [0, 0, 0, 0]);

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0032);
        for _ in 0..1000 {
            let col: [u8; 4] = rng.gen();
            let s = fabric.modules[1].sub_bytes_column(col, Direction::Encrypt).unwrap();
            let back = fabric.modules[1].sub_bytes_column(s, Direction::Decrypt).unwrap();
            assert_eq!(back, col);
        }
    }

    #[test]
    fn all_modules_agree_in_any_order() {
        let mut fabric = loaded_fabric();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0033);
        for _ in 0..200 {
            let col: [u8; 4] = rng.gen();
            let rk: [u8; 4] = rng.gen();
            let expected_enc = fabric.modules[0].encrypt_column(col).unwrap();
            let expected_dec = fabric.modules[0].decrypt_column(col, rk).unwrap();
            for j in [3, 1, 2] {
                assert_eq!(fabric.modules[j].encrypt_column(col).unwrap(), expected_enc);
                assert_eq!(
                    fabric.modules[j].decrypt_column(col, rk).unwrap(),
                    expected_dec
                );
            }
        }
    }

    #[test]
    fn decryption_never_reads_the_ram_arrays() {
        let mut fabric = loaded_fabric();
        let module = &mut fabric.modules[2];
        let before: Vec<u64> = (0..4)
            .flat_map(|k| [module.ram2x(k).reads(), module.ram3x(k).reads()])
            .collect();
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0034);
        for _ in 0..500 {
            module.decrypt_column(rng.gen(), rng.gen()).unwrap();
            module
                .sub_bytes_column(rng.gen(), Direction::Decrypt)
                .unwrap();
        }
        let after: Vec<u64> = (0..4)
            .flat_map(|k| [module.ram2x(k).reads(), module.ram3x(k).reads()])
            .collect();
        assert_eq!(before, after);
    }

    #[test]
    fn table_contents_are_immutable_under_operations() {
        let mut fabric = loaded_fabric();
        let module = &mut fabric.modules[0];
        let racam_before: Vec<[u8; 256]> = (0..4).map(|k| *module.racam(k).rows()).collect();
        let ram_before: Vec<[u8; 256]> = (0..4)
            .flat_map(|k| [*module.ram2x(k).data(), *module.ram3x(k).data()])
            .collect();

        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0035);
        for _ in 0..500 {
            module.encrypt_column(rng.gen()).unwrap();
            module.decrypt_column(rng.gen(), rng.gen()).unwrap();
            module.sub_bytes_column(rng.gen(), Direction::Encrypt).unwrap();
        }

        let racam_after: Vec<[u8; 256]> = (0..4).map(|k| *module.racam(k).rows()).collect();
        let ram_after: Vec<[u8; 256]> = (0..4)
            .flat_map(|k| [*module.ram2x(k).data(), *module.ram3x(k).data()])
            .collect();
        assert_eq!(racam_before, racam_after);
        assert_eq!(ram_before, ram_after);
    }
}
