//! Dense `2^n × 2^n` matrices over [`DyadicGaussian`].
//!
//! Built from Kronecker products of the 2×2 Pauli matrices, independently of
//! the symplectic multiplication rules, so they serve as the reference oracle
//! for the Pauli algebra and for projector identities. Only sensible for
//! small `n` (dimension 128 is the largest used).

use crate::dyadic::DyadicGaussian;
use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString};
use crate::statevector::StateVector;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<DyadicGaussian>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, data: vec![DyadicGaussian::ZERO; dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.data[i * dim + i] = DyadicGaussian::ONE;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> DyadicGaussian {
        self.data[row * self.dim + col]
    }

    fn letter_matrix(letter: PauliLetter) -> Self {
        use DyadicGaussian as D;
        let entries = match letter {
            PauliLetter::I => [D::ONE, D::ZERO, D::ZERO, D::ONE],
            PauliLetter::X => [D::ZERO, D::ONE, D::ONE, D::ZERO],
            PauliLetter::Y => [D::ZERO, -D::I, D::I, D::ZERO],
            PauliLetter::Z => [D::ONE, D::ZERO, D::ZERO, -D::ONE],
        };
        Self { dim: 2, data: entries.to_vec() }
    }

    /// `i^phase · σ_{letter_1} ⊗ … ⊗ σ_{letter_n}`, site 1 as the most
    /// significant tensor factor.
    pub fn from_pauli(p: &PauliString) -> Self {
        let mut m = Self::identity(1);
        for letter in p.letters() {
            m = m.kron(&Self::letter_matrix(letter));
        }
        m.scale(DyadicGaussian::i_pow(p.phase_exp() as i64))
    }

    pub fn kron(&self, other: &Self) -> Self {
        let dim = self.dim * other.dim;
        let mut out = Self::zeros(dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                let a = self.get(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..other.dim {
                    for l in 0..other.dim {
                        out.data[(i * other.dim + k) * dim + j * other.dim + l] = a * other.get(k, l);
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, c: DyadicGaussian) -> Self {
        Self { dim: self.dim, data: self.data.iter().map(|&v| v * c).collect() }
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.data[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = other.data[k * d + j];
                    if !b.is_zero() {
                        out.data[i * d + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        Ok(Self { dim: self.dim, data: self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect() })
    }

    pub fn adjoint(&self) -> Self {
        let d = self.dim;
        let mut out = Self::zeros(d);
        for i in 0..d {
            for j in 0..d {
                out.data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        out
    }

    pub fn trace(&self) -> DyadicGaussian {
        (0..self.dim).fold(DyadicGaussian::ZERO, |acc, i| acc + self.get(i, i))
    }

    /// `c` if the matrix equals `c · 1`.
    pub fn scalar_value(&self) -> Option<DyadicGaussian> {
        let c = self.get(0, 0);
        (*self == Self::identity(self.dim).scale(c)).then_some(c)
    }

    pub fn is_identity(&self) -> bool {
        self.scalar_value() == Some(DyadicGaussian::ONE)
    }

    /// `|u⟩⟨v|`.
    pub fn outer(u: &StateVector, v: &StateVector) -> Result<Self> {
        if u.n() != v.n() {
            return Err(Error::DimensionMismatch { left: u.n(), right: v.n() });
        }
        let d = u.dim();
        let mut out = Self::zeros(d);
        for (i, &a) in u.amps().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in v.amps().iter().enumerate() {
                out.data[i * d + j] = a * b.conj();
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        if v.dim() != self.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: v.dim() });
        }
        let amps = (0..self.dim)
            .map(|i| {
                (0..self.dim).fold(DyadicGaussian::ZERO, |acc, j| acc + self.get(i, j) * v.amps()[j])
            })
            .collect();
        StateVector::from_amps(v.n(), amps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_relations_from_kron() {
        let x = DenseMatrix::from_pauli(&"X".parse().unwrap());
        let y = DenseMatrix::from_pauli(&"Y".parse().unwrap());
        let z = DenseMatrix::from_pauli(&"Z".parse().unwrap());
        assert_eq!(x.mul(&y).unwrap(), z.scale(DyadicGaussian::I));
        assert!(x.mul(&x).unwrap().is_identity());
        assert_eq!(y.adjoint(), y);
    }

    #[test]
    fn site_one_is_most_significant() {
        // X on site 1 of 2 qubits maps |00⟩ to |10⟩ (index 2).
        let m = DenseMatrix::from_pauli(&"XI".parse().unwrap());
        assert_eq!(m.get(2, 0), DyadicGaussian::ONE);
        assert_eq!(m.trace(), DyadicGaussian::ZERO);
    }
}
