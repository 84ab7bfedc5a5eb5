//! Seeded synthetic matrices.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::SymbolMatrix;

/// Two random matrices sharing one copied square block at the same coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlantedPair {
    pub a: SymbolMatrix,
    pub b: SymbolMatrix,
    pub block_side: usize,
    /// Bottom-right corner `(i, j)` of the block, 1-based, valid in both matrices.
    pub block_anchor: (usize, usize),
}

fn random_matrix<R: Rng>(rng: &mut R, n: usize, alphabet: u32) -> Result<SymbolMatrix> {
    if alphabet == 0 {
        return Err(Error::EmptyAlphabet);
    }
    let symbols = (0..n * n).map(|_| rng.random_range(0..alphabet)).collect();
    SymbolMatrix::new(n, n, alphabet, symbols)
}

/// Uniform `n×n` matrix over `alphabet` symbols.
pub fn gen_random(n: usize, alphabet: u32, seed: u64) -> Result<SymbolMatrix> {
    random_matrix(&mut ChaCha8Rng::seed_from_u64(seed), n, alphabet)
}

/// Random `n×n` A and `m×m` B; A's side-`k` block at a random anchor is copied into B.
pub fn gen_planted_pair(n: usize, m: usize, alphabet: u32, k: usize, seed: u64) -> Result<PlantedPair> {
    let min_side = n.min(m);
    if k == 0 || k > min_side {
        return Err(Error::BlockExceedsMatrix { k, min_side });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = random_matrix(&mut rng, n, alphabet)?;
    let b = random_matrix(&mut rng, m, alphabet)?;
    let i = rng.random_range(k..=min_side);
    let j = rng.random_range(k..=min_side);
    let mut symbols = b.symbols().to_vec();
    for r in i - k..i {
        for c in j - k..j {
            symbols[r * m + c] = a.symbols()[r * n + c];
        }
    }
    let b = SymbolMatrix::new(m, m, alphabet, symbols)?;
    Ok(PlantedPair {
        a,
        b,
        block_side: k,
        block_anchor: (i, j),
    })
}
