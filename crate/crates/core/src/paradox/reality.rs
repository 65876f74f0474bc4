//! Elements of reality: ways of predicting a single-qubit observable from
//! measurements on the other qubits only.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Sign};
use crate::stabilizer::{Codeword, StabilizerGroup};

/// A recipe fixing the value of `target` by measuring `witness`, which does
/// not touch the target qubit. `element = target · witness` is a group
/// element with eigenvalue `predicted_product`, so
/// `v(target) = predicted_product · v(witness)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Determination {
    /// 0-based site.
    pub site: usize,
    pub letter: PauliLetter,
    pub witness: PauliString,
    pub predicted_product: Sign,
    pub element: PauliString,
}

impl Determination {
    pub fn target(&self) -> PauliString {
        PauliString::single(self.witness.n(), self.site, self.letter).expect("site checked at construction")
    }
}

pub fn find_determinations(
    group: &StabilizerGroup,
    codeword: Codeword,
    site: usize,
    letter: PauliLetter,
) -> Result<Vec<Determination>> {
    let n = group.n();
    if site >= n {
        return Err(Error::SiteOutOfRange { site, n });
    }
    if letter == PauliLetter::I {
        return Ok(Vec::new());
    }
    let others: Vec<usize> = (0..n).filter(|&k| k != site).collect();
    Ok(group
        .elements()
        .iter()
        .filter(|e| e.op.letter(site) == letter)
        .map(|e| Determination {
            site,
            letter,
            witness: e.op.restrict(&others),
            predicted_product: e.sign(codeword),
            element: e.op,
        })
        .collect())
}

/// Two witnesses can be measured together qubit by qubit when, at every
/// site, their letters agree or one of them is the identity.
pub fn sitewise_compatible(a: &PauliString, b: &PauliString) -> bool {
    let both = (a.x_bits() | a.z_bits()) & (b.x_bits() | b.z_bits());
    (a.x_bits() ^ b.x_bits()) & both == 0 && (a.z_bits() ^ b.z_bits()) & both == 0
}

/// Index pairs `(i, j)`, `i < j`, of simultaneously testable determinations.
pub fn compatible_pairs(ds: &[Determination]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for j in 0..ds.len() {
        for i in 0..j {
            if sitewise_compatible(&ds[i].witness, &ds[j].witness) {
                out.push((i, j));
            }
        }
    }
    out.sort_unstable();
    out
}
