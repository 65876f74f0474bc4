//! Seeded cross-check of the symplectic Pauli algebra against dense
//! matrices built from Kronecker products.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::dense::DenseMatrix;
use crate::dyadic::DyadicGaussian;
use crate::error::Result;
use crate::exec::Exec;
use crate::pauli::{PauliLetter, PauliString};
use crate::statevector::StateVector;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestConfig {
    pub seed: u64,
    /// Random pairs on 1 to 3 qubits.
    pub pairs: usize,
    /// Random triples on 5 qubits.
    pub triples: usize,
}

impl Default for SelftestConfig {
    fn default() -> Self {
        Self { seed: 0, pairs: 1000, triples: 200 }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub config: SelftestConfig,
    pub multiplication_mismatches: usize,
    pub commutation_mismatches: usize,
    pub action_mismatches: usize,
    pub composition_mismatches: usize,
}

impl SelftestReport {
    pub fn passed(&self) -> bool {
        self.multiplication_mismatches == 0
            && self.commutation_mismatches == 0
            && self.action_mismatches == 0
            && self.composition_mismatches == 0
    }
}

pub fn random_pauli<R: Rng>(rng: &mut R, n: usize) -> PauliString {
    let letters: Vec<PauliLetter> = (0..n).map(|_| PauliLetter::ALL[rng.gen_range(0..4)]).collect();
    PauliString::from_letters(rng.gen_range(0..4), &letters).expect("n is in range")
}

pub fn random_state<R: Rng>(rng: &mut R, n: usize) -> StateVector {
    let amps = (0..1usize << n)
        .map(|_| DyadicGaussian::new(rng.gen_range(-3..=3), rng.gen_range(-3..=3), rng.gen_range(0..3)))
        .collect();
    StateVector::from_amps(n, amps).expect("n is in range")
}

struct PairSample {
    a: PauliString,
    b: PauliString,
    v: StateVector,
}

struct TripleSample {
    a: PauliString,
    b: PauliString,
    v: StateVector,
}

/// Run the comparison. Samples are drawn sequentially from the seed, then
/// checked with `exec`, so the report depends only on the configuration.
pub fn run(config: SelftestConfig, exec: Exec) -> Result<SelftestReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let pairs: Vec<PairSample> = (0..config.pairs)
        .map(|_| {
            let n = rng.gen_range(1..=3);
            PairSample { a: random_pauli(&mut rng, n), b: random_pauli(&mut rng, n), v: random_state(&mut rng, n) }
        })
        .collect();
    let triples: Vec<TripleSample> = (0..config.triples)
        .map(|_| TripleSample { a: random_pauli(&mut rng, 5), b: random_pauli(&mut rng, 5), v: random_state(&mut rng, 5) })
        .collect();

    let pair_results = exec.map_slice(&pairs, |s| -> Result<(bool, bool, bool)> {
        let (ma, mb) = (DenseMatrix::from_pauli(&s.a), DenseMatrix::from_pauli(&s.b));
        let ab = ma.mul(&mb)?;
        let ba = mb.mul(&ma)?;
        let mul_ok = DenseMatrix::from_pauli(&s.a.multiply(&s.b)?) == ab;
        let comm_ok = s.a.commutes(&s.b)? == (ab == ba);
        let act_ok = s.v.apply(&s.a)? == ma.apply(&s.v)?;
        Ok((mul_ok, comm_ok, act_ok))
    });
    let triple_results = exec.map_slice(&triples, |s| -> Result<bool> {
        Ok(s.v.apply(&s.b)?.apply(&s.a)? == s.v.apply(&s.a.multiply(&s.b)?)?)
    });

    let mut report = SelftestReport {
        config,
        multiplication_mismatches: 0,
        commutation_mismatches: 0,
        action_mismatches: 0,
        composition_mismatches: 0,
    };
    for r in pair_results {
        let (m, c, a) = r?;
        report.multiplication_mismatches += usize::from(!m);
        report.commutation_mismatches += usize::from(!c);
        report.action_mismatches += usize::from(!a);
    }
    for r in triple_results {
        report.composition_mismatches += usize::from(!r?);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_run_passes_and_is_reproducible() {
        let cfg = SelftestConfig { seed: 7, pairs: 50, triples: 10 };
        let a = run(cfg, Exec::Sequential).unwrap();
        assert!(a.passed());
        assert_eq!(a, run(cfg, Exec::Parallel).unwrap());
    }
}
