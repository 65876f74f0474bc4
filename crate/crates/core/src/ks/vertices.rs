//! The 104 projectors on five qubits: the computational basis, the two
//! codewords with their single-qubit mutations, and the rank-4 eigenspaces
//! attached to the five x-z-x rows of the operator array.

use serde::Serialize;

use crate::codes::five_qubit_codewords;
use crate::dyadic::DyadicGaussian;
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Sign};
use crate::stabilizer::Codeword;
use crate::statevector::{basis_label, AmplitudeTerm, Projector, StateVector};

pub const KS_QUBITS: usize = 5;
pub const KS_DIM: usize = 1 << KS_QUBITS;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Provenance {
    ClassicalBasis {
        ket: String,
    },
    /// `mutation · codeword`; the identity stands for the codeword itself.
    CodewordMutation {
        codeword: Codeword,
        mutation: PauliString,
    },
    /// Row `row` (2..=6) of the array, centred on qubit `row - 1`:
    /// `m` and `n` are the x eigenvalues on the left and right neighbours,
    /// `middle` the z eigenvalue on the centre.
    RowSubspace {
        row: usize,
        m: Sign,
        n: Sign,
        middle: Sign,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KsVertex {
    pub id: usize,
    pub projector: Projector,
    pub provenance: Provenance,
}

impl KsVertex {
    pub fn rank(&self) -> usize {
        self.projector.rank()
    }

    /// Human-readable tag such as `|01101⟩`, `σ3y|1_L⟩` or `row3(m=+,z=-,n=+)`.
    pub fn label(&self) -> String {
        match &self.provenance {
            Provenance::ClassicalBasis { ket } => format!("|{ket}⟩"),
            Provenance::CodewordMutation { codeword, mutation } if mutation.is_scalar() => codeword.label().into(),
            Provenance::CodewordMutation { codeword, mutation } => {
                format!("{}{}", mutation.sigma_label().replace(' ', ""), codeword.label())
            }
            Provenance::RowSubspace { row, m, n, middle } => {
                format!("row{row}(m={},z={},n={})", m.as_char(), middle.as_char(), n.as_char())
            }
        }
    }
}

/// Export record: id, rank, provenance and the spanning vectors in the
/// exact amplitude syntax.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexRecord {
    pub id: usize,
    pub label: String,
    pub rank: usize,
    pub provenance: Provenance,
    pub spanning_vectors: Vec<Vec<AmplitudeTerm>>,
}

impl From<&KsVertex> for VertexRecord {
    fn from(v: &KsVertex) -> Self {
        Self {
            id: v.id,
            label: v.label(),
            rank: v.rank(),
            provenance: v.provenance.clone(),
            spanning_vectors: v.projector.basis().iter().map(StateVector::to_terms).collect(),
        }
    }
}

/// The 16 vectors `σ_ka |c_L⟩` (and `|c_L⟩`) for one codeword, compared up
/// to global phase and stored in phase-canonical form.
pub fn codeword_mutations(codeword: &StateVector) -> Result<Vec<(PauliString, StateVector)>> {
    let n = codeword.n();
    let mut out: Vec<(PauliString, StateVector)> = vec![(PauliString::identity(n)?, codeword.phase_canonical())];
    for site in 0..n {
        for letter in PauliLetter::NONTRIVIAL {
            let op = PauliString::single(n, site, letter)?;
            let v = codeword.apply(&op)?;
            let mut duplicate = false;
            for (_, w) in &out {
                if w.equal_up_to_phase(&v)? {
                    duplicate = true;
                    break;
                }
            }
            if !duplicate {
                out.push((op, v.phase_canonical()));
            }
        }
    }
    Ok(out)
}

/// Spanning vectors `½(|0⟩+m|1⟩) ⊗ |z⟩ ⊗ (|0⟩+n|1⟩)` on (left, centre,
/// right), times each basis ket of the two remaining qubits.
pub fn row_spanning_vectors(row: usize, m: Sign, n: Sign, middle: Sign) -> Result<Vec<StateVector>> {
    if !(2..=6).contains(&row) {
        return Err(Error::Construction(format!("row {row} has no x-z-x pattern")));
    }
    let q = KS_QUBITS;
    let c = row - 2;
    let (left, right) = ((c + q - 1) % q, (c + 1) % q);
    let others: Vec<usize> = (0..q).filter(|s| ![left, c, right].contains(s)).collect();
    let bit = |site: usize| 1usize << (q - 1 - site);
    let half = DyadicGaussian::real(1, 1);
    let zbit = if middle.is_minus() { bit(c) } else { 0 };
    let mut out = Vec::with_capacity(4);
    for rest in 0..4usize {
        let mut base = zbit;
        if rest & 2 != 0 {
            base |= bit(others[0]);
        }
        if rest & 1 != 0 {
            base |= bit(others[1]);
        }
        let mut amps = vec![DyadicGaussian::ZERO; KS_DIM];
        for (lb, rb) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
            let mut idx = base;
            let mut s = Sign::Plus;
            if lb == 1 {
                idx |= bit(left);
                s = s * m;
            }
            if rb == 1 {
                idx |= bit(right);
                s = s * n;
            }
            amps[idx] = half * DyadicGaussian::from_int(s.to_i8() as i64);
        }
        out.push(StateVector::from_amps(q, amps)?);
    }
    Ok(out)
}

/// All 104 vertices: 32 basis kets, then the 16 + 16 codeword mutations,
/// then 40 rank-4 row subspaces (rows 2..=6, each over m, middle, n).
pub fn build_ks_set() -> Result<Vec<KsVertex>> {
    let mut vertices = Vec::with_capacity(104);
    let mut push = |projector: Projector, provenance: Provenance| {
        let id = vertices.len();
        vertices.push(KsVertex { id, projector, provenance });
    };
    for idx in 0..KS_DIM {
        push(
            Projector::rank1(StateVector::basis(KS_QUBITS, idx)?)?,
            Provenance::ClassicalBasis { ket: basis_label(KS_QUBITS, idx) },
        );
    }
    let (zero, one) = five_qubit_codewords()?;
    for (codeword, state) in [(Codeword::Zero, &zero), (Codeword::One, &one)] {
        let muts = codeword_mutations(state)?;
        if muts.len() != 16 {
            return Err(Error::Construction(format!(
                "{} distinct mutations of {}, expected 16",
                muts.len(),
                codeword.label()
            )));
        }
        for (mutation, v) in muts {
            push(Projector::rank1(v)?, Provenance::CodewordMutation { codeword, mutation });
        }
    }
    for row in 2..=6 {
        for m in [Sign::Plus, Sign::Minus] {
            for middle in [Sign::Plus, Sign::Minus] {
                for n in [Sign::Plus, Sign::Minus] {
                    let span = row_spanning_vectors(row, m, n, middle)?;
                    push(Projector::from_vectors(span)?, Provenance::RowSubspace { row, m, n, middle });
                }
            }
        }
    }
    Ok(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::statevector::{eigensign, resolves_identity, sums_to_identity};

    #[test]
    fn counts_and_ranks() {
        let vs = build_ks_set().unwrap();
        assert_eq!(vs.len(), 104);
        assert_eq!(vs.iter().filter(|v| v.rank() == 1).count(), 64);
        assert_eq!(vs.iter().filter(|v| v.rank() == 4).count(), 40);
        assert!(vs.iter().enumerate().all(|(i, v)| v.id == i));
    }

    #[test]
    fn row_three_first_projector_matches_the_displayed_span() {
        use Sign::Plus;
        let span = row_spanning_vectors(3, Plus, Plus, Plus).unwrap();
        let half = DyadicGaussian::real(1, 1);
        // qubits 4, 5 in |00⟩: ½(|000⟩ + |001⟩ + |100⟩ + |101⟩) on qubits 1-3
        let want =
            StateVector::from_terms(5, ["00000", "00100", "10000", "10100"].map(|k| (k, half))).unwrap();
        assert_eq!(span[0], want);
    }

    #[test]
    fn row_subspaces_are_eigenspaces() {
        for row in 2..=6usize {
            let c = row - 2;
            let (l, r) = ((c + 4) % 5, (c + 1) % 5);
            for m in [Sign::Plus, Sign::Minus] {
                for n in [Sign::Plus, Sign::Minus] {
                    for middle in [Sign::Plus, Sign::Minus] {
                        for v in row_spanning_vectors(row, m, n, middle).unwrap() {
                            let x = |s| PauliString::single(5, s, PauliLetter::X).unwrap();
                            let z = PauliString::single(5, c, PauliLetter::Z).unwrap();
                            assert_eq!(v.norm_sq(), DyadicGaussian::ONE);
                            assert_eq!(eigensign(&x(l), &v).unwrap(), Some(m));
                            assert_eq!(eigensign(&x(r), &v).unwrap(), Some(n));
                            assert_eq!(eigensign(&z, &v).unwrap(), Some(middle));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn each_row_resolves_the_identity() {
        let vs = build_ks_set().unwrap();
        for chunk in vs[64..].chunks(8) {
            let ps: Vec<Projector> = chunk.iter().map(|v| v.projector.clone()).collect();
            assert!(resolves_identity(&ps).unwrap());
            assert!(sums_to_identity(&ps).unwrap());
        }
    }

    #[test]
    fn mutations_are_phase_canonical_and_orthonormal() {
        let vs = build_ks_set().unwrap();
        let muts = &vs[32..64];
        for (i, a) in muts.iter().enumerate() {
            let u = &a.projector.basis()[0];
            assert_eq!(u.norm_sq(), DyadicGaussian::ONE);
            assert_eq!(u, &u.phase_canonical());
            for b in &muts[..i] {
                assert!(a.projector.orthogonal(&b.projector).unwrap());
            }
        }
    }

    #[test]
    fn duplicate_mutations_are_folded() {
        // on |000⟩ every Z acts trivially, so 1 + 3 X + 3 Y collapse to 4 rays
        let s = StateVector::ket("000").unwrap();
        assert_eq!(codeword_mutations(&s).unwrap().len(), 4);
    }
}
