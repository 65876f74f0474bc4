//! The concrete codes: the cyclic five-qubit code, the three-qubit Mermin
//! (GHZ) code and the seven-qubit Steane code.
//!
//! The five-qubit codewords are the ones equivalent, up to local basis
//! changes on each qubit, to the Laflamme et al. five-qubit code; that
//! equivalence is not computed here.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::dyadic::DyadicGaussian;
use crate::error::{Error, Result};
use crate::pauli::{PauliString, Sign};
use crate::stabilizer::{StabilizerElement, StabilizerGroup};
use crate::statevector::StateVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CodeName {
    Five,
    Mermin,
    Steane,
}

impl CodeName {
    pub const ALL: [CodeName; 3] = [CodeName::Five, CodeName::Mermin, CodeName::Steane];

    pub fn as_str(self) -> &'static str {
        match self {
            CodeName::Five => "five",
            CodeName::Mermin => "mermin",
            CodeName::Steane => "steane",
        }
    }

    pub fn build(self) -> Result<CodeDefinition> {
        match self {
            CodeName::Five => five_qubit_code(),
            CodeName::Mermin => mermin_code(),
            CodeName::Steane => steane_code(),
        }
    }
}

impl fmt::Display for CodeName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CodeName {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "five" => Ok(CodeName::Five),
            "mermin" => Ok(CodeName::Mermin),
            "steane" => Ok(CodeName::Steane),
            other => Err(format!("unknown code {other:?} (expected five, mermin or steane)")),
        }
    }
}

/// How the stored codewords relate to the physical, unit-norm states.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Normalization {
    /// Stored amplitudes are the physical ones.
    Unit,
    /// Physical state = stored vector / sqrt(norm_sq); amplitudes are kept
    /// dyadic by not dividing.
    Scaled { norm_sq: DyadicGaussian },
}

#[derive(Clone, Debug)]
pub struct CodeDefinition {
    pub name: CodeName,
    pub n: usize,
    pub codeword0: StateVector,
    pub codeword1: StateVector,
    pub generators: Vec<StabilizerElement>,
    pub expected_group_order: usize,
    pub normalization: Normalization,
}

impl CodeDefinition {
    /// Close the generators and check the order.
    pub fn group(&self) -> Result<StabilizerGroup> {
        let g = StabilizerGroup::close(self.n, &self.generators)?;
        if g.order() != self.expected_group_order {
            return Err(Error::Construction(format!(
                "{} code: group order {} instead of {}",
                self.name,
                g.order(),
                self.expected_group_order
            )));
        }
        Ok(g)
    }

    pub fn codeword(&self, which: crate::stabilizer::Codeword) -> &StateVector {
        match which {
            crate::stabilizer::Codeword::Zero => &self.codeword0,
            crate::stabilizer::Codeword::One => &self.codeword1,
        }
    }

    /// Both codewords have the same squared norm and are orthogonal.
    pub fn codewords_orthogonal(&self) -> Result<bool> {
        Ok(self.codeword0.inner(&self.codeword1)?.is_zero() && self.codeword0.norm_sq() == self.codeword1.norm_sq())
    }
}

fn el(text: &str, sign0: Sign, sign1: Sign) -> Result<StabilizerElement> {
    StabilizerElement::parse(text, sign0, sign1)
}

const FIVE_QUBIT_MINUS: [&str; 6] = ["00000", "11000", "01100", "00110", "00011", "10001"];
const FIVE_QUBIT_PLUS: [&str; 10] = [
    "10010", "10100", "01001", "01010", "00101", "11110", "11101", "11011", "10111", "01111",
];

/// `|0_L⟩` with its 16 signed kets of amplitude ±1/4, and `|1_L⟩` as its bit
/// complement.
pub fn five_qubit_codewords() -> Result<(StateVector, StateVector)> {
    let quarter = DyadicGaussian::real(1, 2);
    let terms = FIVE_QUBIT_MINUS
        .iter()
        .map(|k| (*k, -quarter))
        .chain(FIVE_QUBIT_PLUS.iter().map(|k| (*k, quarter)));
    let zero = StateVector::from_terms(5, terms)?;
    let one = zero.bit_complement();
    Ok((zero, one))
}

/// The 32 signed operators as tabulated for the five-qubit code: the
/// identity, `±ZZZZZ`, and the cyclic orbits of six base strings. Signs are
/// eigenvalues on `(|0_L⟩, |1_L⟩)`.
pub fn five_qubit_listing() -> Result<Vec<StabilizerElement>> {
    use Sign::{Minus, Plus};
    let bases = [
        ("XZIZX", Plus, Plus),
        ("YXIXY", Plus, Plus),
        ("ZYIYZ", Plus, Plus),
        ("IXZXI", Minus, Plus),
        ("YIZIY", Minus, Plus),
        ("XYZYX", Plus, Minus),
    ];
    let mut out = vec![StabilizerElement::identity(5)?, el("ZZZZZ", Plus, Minus)?];
    for (text, s0, s1) in bases {
        let op: PauliString = text.parse()?;
        for shifted in op.orbit() {
            out.push(StabilizerElement::new(shifted, s0, s1)?);
        }
    }
    Ok(out)
}

pub fn five_qubit_code() -> Result<CodeDefinition> {
    use Sign::{Minus, Plus};
    let (codeword0, codeword1) = five_qubit_codewords()?;
    let base: PauliString = "XZIZX".parse()?;
    let mut generators = base
        .orbit()
        .into_iter()
        .map(|op| StabilizerElement::new(op, Plus, Plus))
        .collect::<Result<Vec<_>>>()?;
    generators.push(el("ZZZZZ", Plus, Minus)?);
    Ok(CodeDefinition {
        name: CodeName::Five,
        n: 5,
        codeword0,
        codeword1,
        generators,
        expected_group_order: 32,
        normalization: Normalization::Unit,
    })
}

/// `|000⟩ ± |111⟩`, unnormalized (squared norm 2).
pub fn mermin_states() -> Result<(StateVector, StateVector)> {
    let one = DyadicGaussian::ONE;
    Ok((
        StateVector::from_terms(3, [("000", one), ("111", one)])?,
        StateVector::from_terms(3, [("000", one), ("111", -one)])?,
    ))
}

/// The eight-element group of the Mermin states, signs on `(+, -)` states.
pub fn mermin_listing() -> Result<Vec<StabilizerElement>> {
    use Sign::{Minus, Plus};
    [
        ("III", Plus, Plus),
        ("XYY", Minus, Plus),
        ("YXY", Minus, Plus),
        ("YYX", Minus, Plus),
        ("XXX", Plus, Minus),
        ("ZZI", Plus, Plus),
        ("ZIZ", Plus, Plus),
        ("IZZ", Plus, Plus),
    ]
    .into_iter()
    .map(|(t, a, b)| el(t, a, b))
    .collect()
}

pub fn mermin_code() -> Result<CodeDefinition> {
    use Sign::{Minus, Plus};
    let (codeword0, codeword1) = mermin_states()?;
    let generators = vec![el("XXX", Plus, Minus)?, el("ZZI", Plus, Plus)?, el("IZZ", Plus, Plus)?];
    Ok(CodeDefinition {
        name: CodeName::Mermin,
        n: 3,
        codeword0,
        codeword1,
        generators,
        expected_group_order: 8,
        normalization: Normalization::Scaled { norm_sq: DyadicGaussian::from_int(2) },
    })
}

/// Parity-check rows of the [7,4,3] Hamming code; column `j` is `j` in
/// binary.
pub const HAMMING_ROWS: [&str; 3] = ["0001111", "0110011", "1010101"];

fn hamming_row_bits(row: &str) -> Vec<bool> {
    row.chars().map(|c| c == '1').collect()
}

/// `|0_L⟩` as the uniform sum over the eight even-weight Hamming codewords
/// (the span of the parity-check rows), `|1_L⟩ = X^⊗7 |0_L⟩`. Both are
/// unnormalized with squared norm 8.
pub fn steane_codewords() -> Result<(StateVector, StateVector)> {
    let rows: Vec<usize> = HAMMING_ROWS.iter().map(|r| usize::from_str_radix(r, 2).expect("binary literal")).collect();
    let mut zero = StateVector::zero(7)?;
    for mask in 0..8usize {
        let word = (0..3).filter(|i| mask >> i & 1 == 1).fold(0usize, |acc, i| acc ^ rows[i]);
        zero = zero.add(&StateVector::basis(7, word)?)?;
    }
    let one = zero.bit_complement();
    Ok((zero, one))
}

pub fn steane_code() -> Result<CodeDefinition> {
    use Sign::{Minus, Plus};
    let (codeword0, codeword1) = steane_codewords()?;
    let mut generators = Vec::new();
    for letter in ['X', 'Z'] {
        for row in HAMMING_ROWS {
            let text: String = hamming_row_bits(row).iter().map(|&b| if b { letter } else { 'I' }).collect();
            generators.push(el(&text, Plus, Plus)?);
        }
    }
    generators.push(el("ZZZZZZZ", Plus, Minus)?);
    Ok(CodeDefinition {
        name: CodeName::Steane,
        n: 7,
        codeword0,
        codeword1,
        generators,
        expected_group_order: 128,
        normalization: Normalization::Scaled { norm_sq: DyadicGaussian::from_int(8) },
    })
}

/// Range of weights over the non-identity elements.
pub fn weight_range(group: &StabilizerGroup) -> Option<(usize, usize)> {
    let weights: Vec<usize> = group.nontrivial().map(|e| e.op.weight()).collect();
    Some((*weights.iter().min()?, *weights.iter().max()?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::stabilizer::Codeword;
    use crate::statevector::eigensign;

    #[test]
    fn five_qubit_amplitudes() {
        let code = five_qubit_code().unwrap();
        assert_eq!(code.codeword0.amp("10010").unwrap(), DyadicGaussian::real(1, 2));
        assert_eq!(code.codeword0.amp("11000").unwrap(), DyadicGaussian::real(-1, 2));
        assert_eq!(code.codeword0.amp("00000").unwrap(), DyadicGaussian::real(-1, 2));
        assert_eq!(code.codeword0.to_terms().len(), 16);
        assert_eq!(code.codeword0.norm_sq(), DyadicGaussian::ONE);
    }

    #[test]
    fn five_qubit_cyclic_invariance() {
        let code = five_qubit_code().unwrap();
        for k in 0..5 {
            assert_eq!(code.codeword0.cyclic_shift_sites(k), code.codeword0);
            assert_eq!(code.codeword1.cyclic_shift_sites(k), code.codeword1);
        }
    }

    #[test]
    fn codewords_are_orthonormal_pairs() {
        for name in CodeName::ALL {
            let code = name.build().unwrap();
            assert!(code.codewords_orthogonal().unwrap(), "{name}");
        }
    }

    #[test]
    fn mermin_signs() {
        let code = mermin_code().unwrap();
        let zzi: PauliString = "ZZI".parse().unwrap();
        let xxx: PauliString = "XXX".parse().unwrap();
        for v in [&code.codeword0, &code.codeword1] {
            assert_eq!(eigensign(&zzi, v).unwrap(), Some(Sign::Plus));
        }
        assert_eq!(eigensign(&xxx, code.codeword(Codeword::Zero)).unwrap(), Some(Sign::Plus));
        assert_eq!(eigensign(&xxx, code.codeword(Codeword::One)).unwrap(), Some(Sign::Minus));
        assert_eq!(code.group().unwrap().order(), 8);
    }

    #[test]
    fn steane_structure() {
        let code = steane_code().unwrap();
        let g = code.group().unwrap();
        assert_eq!(g.order(), 128);
        assert_eq!(weight_range(&g), Some((3, 7)));
        assert_eq!(code.codeword0.norm_sq(), DyadicGaussian::from_int(8));
        assert!(g.verify_stabilizes(&code.codeword0, &code.codeword1).unwrap().passed());
    }

    #[test]
    fn code_names_parse() {
        assert_eq!("steane".parse::<CodeName>(), Ok(CodeName::Steane));
        assert!("shor".parse::<CodeName>().is_err());
    }
}
