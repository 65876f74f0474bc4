//! Exact state vectors and projectors on `n` qubits.
//!
//! Basis index `b` is the ket whose label reads the bits of `b` from most to
//! least significant, so site 1 is the leftmost character of `|10010⟩`.

use serde::{Deserialize, Serialize};

use crate::dense::DenseMatrix;
use crate::dyadic::DyadicGaussian;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, Sign, MAX_QUBITS};

/// The largest register a dense state vector is built for.
pub const MAX_STATE_QUBITS: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct StateVector {
    n: usize,
    amps: Vec<DyadicGaussian>,
}

/// One `(basis label, amplitude)` row of the interchange format.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AmplitudeTerm {
    pub ket: String,
    pub amplitude: DyadicGaussian,
}

fn check_state_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_STATE_QUBITS.min(MAX_QUBITS) {
        return Err(Error::QubitCount(n));
    }
    Ok(())
}

/// Basis label of index `b` on `n` qubits, e.g. `10010`.
pub fn basis_label(n: usize, index: usize) -> String {
    (0..n).map(|k| if index >> (n - 1 - k) & 1 == 1 { '1' } else { '0' }).collect()
}

/// Parse a basis label (optionally wrapped as `|…⟩` or `|…>`) into an index.
pub fn parse_basis_label(label: &str) -> Result<(usize, usize)> {
    let inner = label.trim().trim_start_matches('|').trim_end_matches('⟩').trim_end_matches('>');
    if inner.is_empty() || inner.len() > MAX_STATE_QUBITS {
        return Err(Error::ParseLabel(label.to_string()));
    }
    let mut index = 0usize;
    for c in inner.chars() {
        index = index << 1
            | match c {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::ParseLabel(label.to_string())),
            };
    }
    Ok((inner.len(), index))
}

/// Basis-index masks for the X and Z parts of a Pauli string.
fn basis_masks(p: &PauliString) -> (usize, usize) {
    let n = p.n();
    let (mut bx, mut bz) = (0usize, 0usize);
    for k in 0..n {
        let bit = 1usize << (n - 1 - k);
        if p.x_bits() >> k & 1 == 1 {
            bx |= bit;
        }
        if p.z_bits() >> k & 1 == 1 {
            bz |= bit;
        }
    }
    (bx, bz)
}

impl StateVector {
    pub fn zero(n: usize) -> Result<Self> {
        check_state_n(n)?;
        Ok(Self { n, amps: vec![DyadicGaussian::ZERO; 1 << n] })
    }

    pub fn basis(n: usize, index: usize) -> Result<Self> {
        let mut v = Self::zero(n)?;
        if index >= v.dim() {
            return Err(Error::ParseLabel(format!("index {index} on {n} qubits")));
        }
        v.amps[index] = DyadicGaussian::ONE;
        Ok(v)
    }

    /// The basis ket with the given label, e.g. `"10010"`.
    pub fn ket(label: &str) -> Result<Self> {
        let (n, index) = parse_basis_label(label)?;
        Self::basis(n, index)
    }

    pub fn from_amps(n: usize, amps: Vec<DyadicGaussian>) -> Result<Self> {
        check_state_n(n)?;
        if amps.len() != 1 << n {
            return Err(Error::Construction(format!("{} amplitudes for {n} qubits", amps.len())));
        }
        Ok(Self { n, amps })
    }

    /// Sum of `amplitude · |label⟩`; repeated labels accumulate.
    pub fn from_terms<'a, I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, DyadicGaussian)>,
    {
        let mut v = Self::zero(n)?;
        for (label, amp) in terms {
            let (len, index) = parse_basis_label(label)?;
            if len != n {
                return Err(Error::DimensionMismatch { left: n, right: len });
            }
            v.amps[index] += amp;
        }
        Ok(v)
    }

    /// Nonzero amplitudes in basis order, in the interchange format.
    pub fn to_terms(&self) -> Vec<AmplitudeTerm> {
        self.amps
            .iter()
            .enumerate()
            .filter(|(_, a)| !a.is_zero())
            .map(|(i, &a)| AmplitudeTerm { ket: basis_label(self.n, i), amplitude: a })
            .collect()
    }

    pub fn from_term_list(n: usize, terms: &[AmplitudeTerm]) -> Result<Self> {
        Self::from_terms(n, terms.iter().map(|t| (t.ket.as_str(), t.amplitude)))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[DyadicGaussian] {
        &self.amps
    }

    pub fn amp(&self, label: &str) -> Result<DyadicGaussian> {
        let (len, index) = parse_basis_label(label)?;
        if len != self.n {
            return Err(Error::DimensionMismatch { left: self.n, right: len });
        }
        Ok(self.amps[index])
    }

    pub fn is_zero(&self) -> bool {
        self.amps.iter().all(|a| a.is_zero())
    }

    fn check_same_n(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch { left: n, right: self.n });
        }
        Ok(())
    }

    pub fn scale(&self, c: DyadicGaussian) -> Self {
        Self { n: self.n, amps: self.amps.iter().map(|&a| a * c).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        other.check_same_n(self.n)?;
        Ok(Self { n: self.n, amps: self.amps.iter().zip(&other.amps).map(|(&a, &b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(-DyadicGaussian::ONE))
    }

    /// `⟨self|other⟩`, conjugate-linear in `self`.
    pub fn inner(&self, other: &Self) -> Result<DyadicGaussian> {
        other.check_same_n(self.n)?;
        Ok(self.inner_unchecked(other))
    }

    fn inner_unchecked(&self, other: &Self) -> DyadicGaussian {
        self.amps
            .iter()
            .zip(&other.amps)
            .filter(|(a, b)| !a.is_zero() && !b.is_zero())
            .fold(DyadicGaussian::ZERO, |acc, (&a, &b)| acc + a.conj() * b)
    }

    pub fn norm_sq(&self) -> DyadicGaussian {
        self.inner_unchecked(self)
    }

    pub fn is_orthogonal(&self, other: &Self) -> Result<bool> {
        Ok(self.inner(other)?.is_zero())
    }

    /// Equal up to a global complex factor of modulus one, decided exactly
    /// through the equality case of Cauchy-Schwarz.
    pub fn equal_up_to_phase(&self, other: &Self) -> Result<bool> {
        let ip = self.inner(other)?;
        let (a, b) = (self.norm_sq(), other.norm_sq());
        Ok(a == b && ip.norm_sq() == a * b)
    }

    /// Rotate by a power of `i` so the first nonzero amplitude has positive
    /// real part and nonnegative imaginary part. For the axis-aligned
    /// amplitudes built here that makes it positive real.
    pub fn phase_canonical(&self) -> Self {
        let Some(first) = self.amps.iter().find(|a| !a.is_zero()) else {
            return self.clone();
        };
        let k = (0..4)
            .find(|&k| {
                let r = first.mul_i_pow(k);
                r.re_numerator() > 0 && r.im_numerator() >= 0
            })
            .unwrap_or(0);
        self.scale(DyadicGaussian::i_pow(k))
    }

    /// Exchange |0⟩ and |1⟩ on every site.
    pub fn bit_complement(&self) -> Self {
        let last = self.dim() - 1;
        Self { n: self.n, amps: (0..self.dim()).map(|b| self.amps[last ^ b]).collect() }
    }

    /// Relabel qubits so the content of site `j` moves to site `j + k mod n`.
    pub fn cyclic_shift_sites(&self, k: i64) -> Self {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as usize;
        let mut amps = vec![DyadicGaussian::ZERO; self.dim()];
        for (b, &a) in self.amps.iter().enumerate() {
            let mut target = 0usize;
            for site in 0..n {
                if b >> (n - 1 - site) & 1 == 1 {
                    target |= 1 << (n - 1 - (site + k) % n);
                }
            }
            amps[target] = a;
        }
        Self { n, amps }
    }

    /// Apply a Pauli string exactly.
    pub fn apply(&self, p: &PauliString) -> Result<Self> {
        apply(p, self)
    }
}

/// `p |v⟩`. With `ny` the number of Y letters, each Y = i·X·Z gives
/// `p|b⟩ = i^(phase + ny) · (-1)^{|b ∧ z|} |b ⊕ x⟩`.
pub fn apply(p: &PauliString, v: &StateVector) -> Result<StateVector> {
    v.check_same_n(p.n())?;
    let (bx, bz) = basis_masks(p);
    let ny = (p.x_bits() & p.z_bits()).count_ones() as i64;
    let global = p.phase_exp() as i64 + ny;
    let mut amps = vec![DyadicGaussian::ZERO; v.dim()];
    for (b, &a) in v.amps.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        let negate = (b & bz).count_ones() % 2 == 1;
        amps[b ^ bx] = a.mul_i_pow(global + if negate { 2 } else { 0 });
    }
    Ok(StateVector { n: v.n, amps })
}

/// `Some(s)` iff `p|v⟩ = s|v⟩` exactly, for Hermitian `p`.
pub fn eigensign(p: &PauliString, v: &StateVector) -> Result<Option<Sign>> {
    if !p.is_hermitian() {
        return Err(Error::NotHermitian(p.to_string()));
    }
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let w = apply(p, v)?;
    if w == *v {
        Ok(Some(Sign::Plus))
    } else if w == v.scale(-DyadicGaussian::ONE) {
        Ok(Some(Sign::Minus))
    } else {
        Ok(None)
    }
}

/// An orthogonal projector stored as a spanning set of mutually orthogonal,
/// not necessarily normalized, vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Projector {
    n: usize,
    basis: Vec<StateVector>,
}

impl Projector {
    pub fn from_vectors(vectors: Vec<StateVector>) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::Construction("projector needs at least one spanning vector".into()));
        };
        let n = first.n;
        for (i, v) in vectors.iter().enumerate() {
            v.check_same_n(n)?;
            if v.is_zero() {
                return Err(Error::ZeroVector);
            }
            for (j, w) in vectors.iter().enumerate().take(i) {
                if !w.inner_unchecked(v).is_zero() {
                    return Err(Error::NonOrthogonalSpan(j, i));
                }
            }
        }
        Ok(Self { n, basis: vectors })
    }

    pub fn rank1(v: StateVector) -> Result<Self> {
        Self::from_vectors(vec![v])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[StateVector] {
        &self.basis
    }

    /// `PQ = 0`, decided on spanning vectors.
    pub fn orthogonal(&self, other: &Self) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(self.orthogonal_unchecked(other))
    }

    pub(crate) fn orthogonal_unchecked(&self, other: &Self) -> bool {
        self.basis.iter().all(|u| other.basis.iter().all(|v| u.inner_unchecked(v).is_zero()))
    }

    /// True when `v` is orthogonal to the whole range.
    pub fn annihilates(&self, v: &StateVector) -> Result<bool> {
        v.check_same_n(self.n)?;
        Ok(self.basis.iter().all(|s| s.inner_unchecked(v).is_zero()))
    }

    fn inverse_norms(&self) -> Result<Vec<DyadicGaussian>> {
        self.basis
            .iter()
            .map(|s| {
                let ns = s.norm_sq();
                ns.recip().ok_or_else(|| Error::NonDyadicNorm(ns.to_string()))
            })
            .collect()
    }

    /// `Σ_s |s⟩⟨s|v⟩ / ⟨s|s⟩`. Needs every squared norm to be a power of two.
    pub fn apply(&self, v: &StateVector) -> Result<StateVector> {
        v.check_same_n(self.n)?;
        let mut out = StateVector::zero(self.n)?;
        for (s, inv) in self.basis.iter().zip(self.inverse_norms()?) {
            out = out.add(&s.scale(s.inner_unchecked(v) * inv))?;
        }
        Ok(out)
    }

    /// Dense matrix of the projector, under the same norm condition as
    /// [`Projector::apply`].
    pub fn matrix(&self) -> Result<DenseMatrix> {
        let mut m = DenseMatrix::zeros(1 << self.n);
        for (s, inv) in self.basis.iter().zip(self.inverse_norms()?) {
            m = m.add(&DenseMatrix::outer(s, s)?.scale(inv))?;
        }
        Ok(m)
    }
}

/// Ranks sum to `2^n` and every pair is orthogonal.
pub fn resolves_identity(projectors: &[Projector]) -> Result<bool> {
    let Some(first) = projectors.first() else {
        return Ok(false);
    };
    let n = first.n;
    let total: usize = projectors.iter().map(Projector::rank).sum();
    for (i, p) in projectors.iter().enumerate() {
        for q in &projectors[..i] {
            if !p.orthogonal(q)? {
                return Ok(false);
            }
        }
    }
    Ok(total == 1 << n)
}

/// Independent route: sum the dense projector matrices and compare with the
/// identity exactly.
pub fn sums_to_identity(projectors: &[Projector]) -> Result<bool> {
    let Some(first) = projectors.first() else {
        return Ok(false);
    };
    let mut sum = DenseMatrix::zeros(1 << first.n);
    for p in projectors {
        sum = sum.add(&p.matrix()?)?;
    }
    Ok(sum.is_identity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    #[test]
    fn labels_round_trip() {
        assert_eq!(basis_label(5, 0b10010), "10010");
        assert_eq!(parse_basis_label("|10010⟩").unwrap(), (5, 0b10010));
        assert!(parse_basis_label("10a").is_err());
    }

    #[test]
    fn pauli_action_on_kets() {
        let v = StateVector::ket("00").unwrap();
        assert_eq!(apply(&p("XI"), &v).unwrap(), StateVector::ket("10").unwrap());
        // Y|0⟩ = i|1⟩
        let y = apply(&p("Y"), &StateVector::ket("0").unwrap()).unwrap();
        assert_eq!(y, StateVector::ket("1").unwrap().scale(DyadicGaussian::I));
        let z = apply(&p("-Z"), &StateVector::ket("1").unwrap()).unwrap();
        assert_eq!(z, StateVector::ket("1").unwrap());
    }

    #[test]
    fn eigensign_rejects_non_hermitian_and_zero() {
        let v = StateVector::ket("0").unwrap();
        assert_eq!(eigensign(&p("iZ"), &v), Err(Error::NotHermitian("+iZ".into())));
        assert_eq!(eigensign(&p("Z"), &StateVector::zero(1).unwrap()), Err(Error::ZeroVector));
        assert_eq!(eigensign(&p("X"), &v).unwrap(), None);
        assert_eq!(eigensign(&p("-Z"), &v).unwrap(), Some(Sign::Minus));
    }

    #[test]
    fn projector_orthogonality_and_identity() {
        let a = Projector::rank1(StateVector::ket("00000").unwrap()).unwrap();
        let b = Projector::rank1(StateVector::ket("11111").unwrap()).unwrap();
        assert!(a.orthogonal(&b).unwrap());
        let all: Vec<_> = (0..32).map(|i| Projector::rank1(StateVector::basis(5, i).unwrap()).unwrap()).collect();
        assert!(resolves_identity(&all).unwrap());
        assert!(sums_to_identity(&all).unwrap());
        assert!(!resolves_identity(&all[..31]).unwrap());
    }

    #[test]
    fn non_orthogonal_span_rejected() {
        let plus = StateVector::from_terms(1, [("0", DyadicGaussian::ONE), ("1", DyadicGaussian::ONE)]).unwrap();
        let zero = StateVector::ket("0").unwrap();
        assert_eq!(Projector::from_vectors(vec![zero, plus]), Err(Error::NonOrthogonalSpan(0, 1)));
    }

    #[test]
    fn non_dyadic_norm_is_reported() {
        let v = StateVector::from_terms(2, [("00", DyadicGaussian::ONE), ("01", DyadicGaussian::ONE), ("10", DyadicGaussian::ONE)])
            .unwrap();
        let proj = Projector::rank1(v.clone()).unwrap();
        assert!(matches!(proj.apply(&v), Err(Error::NonDyadicNorm(_))));
    }

    #[test]
    fn terms_round_trip() {
        let v = StateVector::from_terms(2, [("01", DyadicGaussian::real(1, 1)), ("10", DyadicGaussian::new(0, -1, 1))]).unwrap();
        let terms = v.to_terms();
        assert_eq!(terms.len(), 2);
        assert_eq!(terms[1].amplitude.to_string(), "0/2^1 - 1/2^1 i");
        assert_eq!(StateVector::from_term_list(2, &terms).unwrap(), v);
    }

    fn arb_pauli(n: usize) -> impl Strategy<Value = PauliString> {
        let mask = (1u64 << n) - 1;
        (0u8..4, any::<u64>(), any::<u64>()).prop_map(move |(ph, x, z)| PauliString::from_bits(n, ph, x & mask, z & mask).unwrap())
    }

    fn arb_state(n: usize) -> impl Strategy<Value = StateVector> {
        proptest::collection::vec((-3i64..4, -3i64..4, 0u32..3), 1 << n).prop_map(move |raw| {
            StateVector::from_amps(n, raw.into_iter().map(|(a, b, k)| DyadicGaussian::new(a, b, k)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn apply_composes_like_multiply(
            (a, b, v) in prop_oneof![Just(1usize), Just(2), Just(3), Just(5)]
                .prop_flat_map(|n| (arb_pauli(n), arb_pauli(n), arb_state(n)))
        ) {
            let lhs = apply(&a, &apply(&b, &v).unwrap()).unwrap();
            let rhs = apply(&a.multiply(&b).unwrap(), &v).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn apply_matches_dense(a in arb_pauli(3), v in arb_state(3)) {
            let dense = DenseMatrix::from_pauli(&a).apply(&v).unwrap();
            prop_assert_eq!(apply(&a, &v).unwrap(), dense);
        }

        #[test]
        fn eigensign_ignores_global_phase(k in 0i64..4, x in any::<u8>()) {
            // |0⟩ ± |1⟩ style eigenvectors of X on site 1, tensored with a ket.
            let sign = if x % 2 == 0 { DyadicGaussian::ONE } else { -DyadicGaussian::ONE };
            let v = StateVector::from_terms(2, [("00", DyadicGaussian::ONE), ("10", sign)]).unwrap();
            let op = p("XI");
            let before = eigensign(&op, &v).unwrap();
            let after = eigensign(&op, &v.scale(DyadicGaussian::i_pow(k))).unwrap();
            prop_assert_eq!(before, after);
            prop_assert!(before.is_some());
        }

        #[test]
        fn projector_fixes_span_and_kills_complement(m in any::<bool>(), bits in 0usize..4) {
            // rank-2 projector spanned by (|0⟩ ± |1⟩)|0⟩ and (|0⟩ ± |1⟩)|1⟩ scaled by 1/2
            let s = |b: bool| if b { -DyadicGaussian::ONE } else { DyadicGaussian::ONE };
            let half = DyadicGaussian::real(1, 1);
            let u0 = StateVector::from_terms(2, [("00", half), ("10", half * s(m))]).unwrap();
            let u1 = StateVector::from_terms(2, [("01", half), ("11", half * s(m))]).unwrap();
            let proj = Projector::from_vectors(vec![u0.clone(), u1.clone()]).unwrap();
            prop_assert_eq!(proj.apply(&u0).unwrap(), u0);
            prop_assert_eq!(proj.apply(&u1).unwrap(), u1);
            let w = StateVector::from_terms(2, [(basis_label(2, bits & 1).as_str(), DyadicGaussian::ONE),
                (basis_label(2, 2 | (bits & 1)).as_str(), -s(m))]).unwrap();
            prop_assert!(proj.apply(&w).unwrap().is_zero());
            let mat = proj.matrix().unwrap();
            prop_assert_eq!(mat.mul(&mat).unwrap(), mat.clone());
            prop_assert_eq!(mat.adjoint(), mat);
        }
    }
}
