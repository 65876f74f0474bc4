//! Sign-decorated Abelian groups attached to a pair of codewords, and the
//! error-correction condition on those codewords.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::pauli::{PauliLetter, PauliString, Sign};
use crate::statevector::{apply, eigensign, StateVector};

/// Which of the two codewords a sign or search refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Codeword {
    #[serde(rename = "0")]
    Zero,
    #[serde(rename = "1")]
    One,
}

impl Codeword {
    pub const BOTH: [Codeword; 2] = [Codeword::Zero, Codeword::One];

    pub fn label(self) -> &'static str {
        match self {
            Codeword::Zero => "|0_L⟩",
            Codeword::One => "|1_L⟩",
        }
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Codeword::Zero => "0",
            Codeword::One => "1",
        })
    }
}

impl FromStr for Codeword {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "0" => Ok(Codeword::Zero),
            "1" => Ok(Codeword::One),
            other => Err(format!("codeword must be 0 or 1, got {other:?}")),
        }
    }
}

/// A Hermitian Pauli string with its eigenvalue on each codeword.
///
/// The operator is stored with phase 0; a `-` in the input is folded into
/// both signs.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct StabilizerElement {
    pub op: PauliString,
    pub sign0: Sign,
    pub sign1: Sign,
}

impl StabilizerElement {
    pub fn new(op: PauliString, sign0: Sign, sign1: Sign) -> Result<Self> {
        if !op.is_hermitian() {
            return Err(Error::NotHermitian(op.to_string()));
        }
        let flip = if op.phase_exp() == 2 { Sign::Minus } else { Sign::Plus };
        Ok(Self { op: op.bare(), sign0: sign0 * flip, sign1: sign1 * flip })
    }

    /// Convenience for transcribed tables: `parse("XZIZX", +, -)`.
    pub fn parse(text: &str, sign0: Sign, sign1: Sign) -> Result<Self> {
        Self::new(text.parse()?, sign0, sign1)
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(PauliString::identity(n)?, Sign::Plus, Sign::Plus)
    }

    pub fn sign(&self, codeword: Codeword) -> Sign {
        match codeword {
            Codeword::Zero => self.sign0,
            Codeword::One => self.sign1,
        }
    }

    /// Sign-stable: the same eigenvalue on both codewords.
    pub fn is_sign_stable(&self) -> bool {
        self.sign0 == self.sign1
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        if !self.op.commutes(&other.op)? {
            return Err(Error::NonCommuting(self.op.to_string(), other.op.to_string()));
        }
        Self::new(self.op.mul_unchecked(&other.op), self.sign0 * other.sign0, self.sign1 * other.sign1)
    }

    /// `sign0 sign1 PauliText`, e.g. `+1 -1 +ZZZZZ`.
    pub fn to_line(&self) -> String {
        format!("{} {} {}", self.sign0, self.sign1, self.op)
    }

    pub fn from_line(line: &str) -> Result<Self> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [s0, s1, op] = parts.as_slice() else {
            return Err(Error::ParsePauli { text: line.to_string(), reason: "expected `sign0 sign1 PauliText`".into() });
        };
        Self::new(op.parse()?, s0.parse()?, s1.parse()?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilizerGroup {
    n: usize,
    elements: Vec<StabilizerElement>,
}

impl StabilizerGroup {
    /// Smallest multiplicatively closed set containing `generators` and the
    /// identity. Fails on non-commuting generators and on any operator that
    /// turns up with two different sign pairs (which includes `-1`).
    pub fn close(n: usize, generators: &[StabilizerElement]) -> Result<Self> {
        for g in generators {
            if g.op.n() != n {
                return Err(Error::DimensionMismatch { left: n, right: g.op.n() });
            }
        }
        for (i, a) in generators.iter().enumerate() {
            for b in &generators[..i] {
                if !a.op.commutes_unchecked(&b.op) {
                    return Err(Error::NonCommuting(b.op.to_string(), a.op.to_string()));
                }
            }
        }

        let identity = StabilizerElement::identity(n)?;
        let mut seen: HashMap<(u64, u64), (Sign, Sign)> = HashMap::new();
        seen.insert((0, 0), (Sign::Plus, Sign::Plus));
        let mut elements = vec![identity];
        for g in generators {
            // Multiply every element found so far by the new generator; the
            // set stays closed because everything commutes.
            let snapshot = elements.clone();
            for e in snapshot {
                let prod = e.multiply(g)?;
                let key = (prod.op.x_bits(), prod.op.z_bits());
                match seen.get(&key) {
                    Some(&(s0, s1)) if (s0, s1) != (prod.sign0, prod.sign1) => {
                        return Err(Error::SignInconsistency {
                            op: prod.op.to_string(),
                            first: format!("{s0} {s1}"),
                            second: format!("{} {}", prod.sign0, prod.sign1),
                        });
                    }
                    Some(_) => {}
                    None => {
                        seen.insert(key, (prod.sign0, prod.sign1));
                        elements.push(prod);
                    }
                }
            }
        }
        elements.sort_by_key(|e| e.op);
        Ok(Self { n, elements })
    }

    /// Wrap an explicit element list after checking it is a closed,
    /// sign-consistent Abelian group.
    pub fn from_elements(n: usize, elements: Vec<StabilizerElement>) -> Result<Self> {
        let closed = Self::close(n, &elements)?;
        if closed.order() != elements.len() {
            return Err(Error::Construction(format!(
                "{} listed elements generate a group of order {}",
                elements.len(),
                closed.order()
            )));
        }
        Ok(closed)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[StabilizerElement] {
        &self.elements
    }

    /// The element with these letters, whatever the queried phase.
    pub fn get(&self, op: &PauliString) -> Option<&StabilizerElement> {
        self.elements.iter().find(|e| e.op.x_bits() == op.x_bits() && e.op.z_bits() == op.z_bits() && e.op.n() == op.n())
    }

    /// Signs of `op` as written (a leading `-` flips both).
    pub fn signs_of(&self, op: &PauliString) -> Option<(Sign, Sign)> {
        let e = self.get(op)?;
        let flip = if op.phase_exp() == 2 { Sign::Minus } else { Sign::Plus };
        op.is_hermitian().then_some((e.sign0 * flip, e.sign1 * flip))
    }

    pub fn is_abelian(&self) -> bool {
        self.elements
            .iter()
            .enumerate()
            .all(|(i, a)| self.elements[..i].iter().all(|b| a.op.commutes_unchecked(&b.op)))
    }

    pub fn is_closed(&self) -> bool {
        self.elements.iter().all(|a| {
            self.elements.iter().all(|b| match a.multiply(b) {
                Ok(p) => self.get(&p.op) == Some(&p),
                Err(_) => false,
            })
        })
    }

    /// Non-identity elements.
    pub fn nontrivial(&self) -> impl Iterator<Item = &StabilizerElement> {
        self.elements.iter().filter(|e| !e.op.is_scalar())
    }

    pub fn to_lines(&self) -> Vec<String> {
        self.elements.iter().map(StabilizerElement::to_line).collect()
    }

    pub fn from_lines<'a, I: IntoIterator<Item = &'a str>>(n: usize, lines: I) -> Result<Self> {
        let elements = lines
            .into_iter()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(StabilizerElement::from_line)
            .collect::<Result<Vec<_>>>()?;
        Self::from_elements(n, elements)
    }

    /// Check every element's eigenvalue on both codewords against the state.
    pub fn verify_stabilizes(&self, v0: &StateVector, v1: &StateVector) -> Result<StabilizesReport> {
        for v in [v0, v1] {
            if v.n() != self.n {
                return Err(Error::DimensionMismatch { left: self.n, right: v.n() });
            }
        }
        let mut violations = Vec::new();
        for e in &self.elements {
            for (codeword, v) in [(Codeword::Zero, v0), (Codeword::One, v1)] {
                let found = eigensign(&e.op, v)?;
                if found != Some(e.sign(codeword)) {
                    violations.push(SignViolation { op: e.op, codeword, expected: e.sign(codeword), found });
                }
            }
        }
        Ok(StabilizesReport { checked: self.elements.len(), violations })
    }

    /// The sign-stable elements; always a subgroup of index 1 or 2.
    pub fn invariant_subgroup(&self) -> Result<StabilizerGroup> {
        let stable: Vec<_> = self.elements.iter().copied().filter(StabilizerElement::is_sign_stable).collect();
        let sub = Self::from_elements(self.n, stable)?;
        let index = self.order() / sub.order();
        if !self.order().is_multiple_of(sub.order()) || !(1..=2).contains(&index) {
            return Err(Error::Construction(format!("sign-stable subgroup has index {index}")));
        }
        Ok(sub)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SignViolation {
    pub op: PauliString,
    pub codeword: Codeword,
    pub expected: Sign,
    /// `None` when the codeword is not an eigenvector at all.
    pub found: Option<Sign>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilizesReport {
    pub checked: usize,
    pub violations: Vec<SignViolation>,
}

impl StabilizesReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The identity plus X, Y, Z on every site.
pub fn single_qubit_errors(n: usize) -> Result<Vec<PauliString>> {
    let mut errors = vec![PauliString::identity(n)?];
    for site in 0..n {
        for letter in PauliLetter::NONTRIVIAL {
            errors.push(PauliString::single(n, site, letter)?);
        }
    }
    Ok(errors)
}

/// The identity plus X on every site.
pub fn bit_flip_errors(n: usize) -> Result<Vec<PauliString>> {
    let mut errors = vec![PauliString::identity(n)?];
    for site in 0..n {
        errors.push(PauliString::single(n, site, PauliLetter::X)?);
    }
    Ok(errors)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ErrorPairCheck {
    pub a: PauliString,
    pub b: PauliString,
    /// `⟨0_L|E_a† E_b|1_L⟩ = 0`
    pub off_diagonal_zero: bool,
    /// `⟨0_L|E_a† E_b|0_L⟩ ⟨1_L|1_L⟩ = ⟨1_L|E_a† E_b|1_L⟩ ⟨0_L|0_L⟩`
    pub diagonal_equal: bool,
}

impl ErrorPairCheck {
    pub fn passed(&self) -> bool {
        self.off_diagonal_zero && self.diagonal_equal
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct KnillLaflammeReport {
    pub errors: Vec<PauliString>,
    pub pairs: Vec<ErrorPairCheck>,
}

impl KnillLaflammeReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(ErrorPairCheck::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ErrorPairCheck> {
        self.pairs.iter().filter(|p| !p.passed())
    }
}

/// Exact Knill-Laflamme test over all ordered pairs of `errors`. The
/// diagonal comparison is cross-multiplied by the squared norms so that
/// unnormalized codewords give the same verdict as normalized ones.
pub fn knill_laflamme_check(
    v0: &StateVector,
    v1: &StateVector,
    errors: &[PauliString],
    exec: Exec,
) -> Result<KnillLaflammeReport> {
    if v0.n() != v1.n() {
        return Err(Error::DimensionMismatch { left: v0.n(), right: v1.n() });
    }
    for e in errors {
        if e.n() != v0.n() {
            return Err(Error::DimensionMismatch { left: v0.n(), right: e.n() });
        }
    }
    let (norm0, norm1) = (v0.norm_sq(), v1.norm_sq());
    let m = errors.len();
    let pairs = exec.map_range(m * m, |idx| {
        let (a, b) = (errors[idx / m], errors[idx % m]);
        let op = a.adjoint().mul_unchecked(&b);
        let on1 = apply(&op, v1).expect("dimensions checked");
        let on0 = apply(&op, v0).expect("dimensions checked");
        let off = v0.inner(&on1).expect("dimensions checked");
        let d0 = v0.inner(&on0).expect("dimensions checked");
        let d1 = v1.inner(&on1).expect("dimensions checked");
        ErrorPairCheck { a, b, off_diagonal_zero: off.is_zero(), diagonal_equal: d0 * norm1 == d1 * norm0 }
    });
    Ok(KnillLaflammeReport { errors: errors.to_vec(), pairs })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::DyadicGaussian;
    use Sign::{Minus, Plus};

    fn ghz(sign: Sign) -> StateVector {
        let s = if sign == Plus { DyadicGaussian::ONE } else { -DyadicGaussian::ONE };
        StateVector::from_terms(3, [("000", DyadicGaussian::ONE), ("111", s)]).unwrap()
    }

    fn el(text: &str, s0: Sign, s1: Sign) -> StabilizerElement {
        StabilizerElement::parse(text, s0, s1).unwrap()
    }

    #[test]
    fn minus_sign_folds_into_both_signs() {
        let e = el("-XYY", Plus, Minus);
        assert_eq!(e.op.to_string(), "+XYY");
        assert_eq!((e.sign0, e.sign1), (Minus, Plus));
        assert!(StabilizerElement::parse("iXYY", Plus, Plus).is_err());
    }

    #[test]
    fn identity_group() {
        let g = StabilizerGroup::close(3, &[StabilizerElement::identity(3).unwrap()]).unwrap();
        assert_eq!(g.order(), 1);
        let report = g.verify_stabilizes(&ghz(Plus), &ghz(Minus)).unwrap();
        assert!(report.passed());
    }

    #[test]
    fn non_commuting_generators_rejected() {
        let err = StabilizerGroup::close(1, &[el("X", Plus, Plus), el("Z", Plus, Plus)]).unwrap_err();
        assert!(matches!(err, Error::NonCommuting(..)));
    }

    #[test]
    fn sign_inconsistency_rejected() {
        let err = StabilizerGroup::close(2, &[el("ZZ", Plus, Plus), el("-ZZ", Plus, Plus)]).unwrap_err();
        assert!(matches!(err, Error::SignInconsistency { .. }));
    }

    #[test]
    fn line_format_round_trip() {
        let e = el("ZZZZZ", Plus, Minus);
        assert_eq!(e.to_line(), "+1 -1 +ZZZZZ");
        assert_eq!(StabilizerElement::from_line("+1 -1 +ZZZZZ").unwrap(), e);
        assert!(StabilizerElement::from_line("+1 +ZZZZZ").is_err());
    }

    #[test]
    fn invariant_subgroup_of_all_stable_group_is_whole() {
        let g = StabilizerGroup::close(3, &[el("ZZI", Plus, Plus), el("IZZ", Plus, Plus)]).unwrap();
        assert_eq!(g.invariant_subgroup().unwrap(), g);
    }

    #[test]
    fn wrong_claimed_sign_is_reported() {
        let g = StabilizerGroup::close(3, &[el("XXX", Plus, Plus)]).unwrap();
        let report = g.verify_stabilizes(&ghz(Plus), &ghz(Minus)).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert_eq!(report.violations[0].codeword, Codeword::One);
        assert_eq!(report.violations[0].found, Some(Minus));
    }

    #[test]
    fn bit_flip_code_conditions() {
        let (v0, v1) = (ghz(Plus), ghz(Minus));
        let flips = bit_flip_errors(3).unwrap();
        assert!(knill_laflamme_check(&v0, &v1, &flips, Exec::Sequential).unwrap().passed());
        let mut with_phase = flips.clone();
        with_phase.push("ZII".parse().unwrap());
        let report = knill_laflamme_check(&v0, &v1, &with_phase, Exec::Sequential).unwrap();
        assert!(!report.passed());
        assert!(report.failures().any(|p| p.b.to_string() == "+ZII" && !p.off_diagonal_zero));
    }
}
