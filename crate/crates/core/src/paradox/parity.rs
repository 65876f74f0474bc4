//! GHZ/Mermin-type parity contradictions.
//!
//! A set of observables, each a bare Pauli string with a definite eigenvalue
//! on the state, is contradictory when every single-qubit symbol appears an
//! even number of times (so local values multiply to `+1`) while the
//! eigenvalues multiply to `-1`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::pauli::{PauliLetter, PauliString, Sign};
use crate::stabilizer::{Codeword, StabilizerElement, StabilizerGroup};
use crate::statevector::{eigensign, StateVector};

/// A measured observable (phase 0) and the value the state assigns to it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct SignedObservable {
    pub op: PauliString,
    pub eigenvalue: Sign,
}

impl SignedObservable {
    pub fn from_element(e: &StabilizerElement, codeword: Codeword) -> Self {
        Self { op: e.op, eigenvalue: e.sign(codeword) }
    }
}

/// One single-qubit symbol `σ_{site,letter}` (site 0-based internally).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Symbol {
    pub site: usize,
    pub letter: PauliLetter,
}

impl Symbol {
    pub fn label(&self) -> String {
        format!("σ{}{}", self.site + 1, self.letter.as_lower())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParityInstance {
    pub state: StateVector,
    pub operators: Vec<SignedObservable>,
}

impl ParityInstance {
    pub fn new(state: StateVector, operators: Vec<SignedObservable>) -> Self {
        Self { state, operators }
    }

    pub fn from_elements(state: StateVector, elements: &[StabilizerElement], codeword: Codeword) -> Self {
        let operators = elements.iter().map(|e| SignedObservable::from_element(e, codeword)).collect();
        Self { state, operators }
    }

    /// How often each single-qubit symbol occurs across the operators.
    pub fn factor_multiset(&self) -> BTreeMap<Symbol, usize> {
        let mut counts = BTreeMap::new();
        for o in &self.operators {
            for site in o.op.support() {
                *counts.entry(Symbol { site, letter: o.op.letter(site) }).or_insert(0) += 1;
            }
        }
        counts
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityEntry {
    pub symbol: String,
    pub count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub operators: Vec<SignedObservable>,
    pub multiplicities: Vec<MultiplicityEntry>,
    pub all_even: bool,
    pub eigenvalue_product: Sign,
    /// `Some(s)` when the ordered product of the observables is `s · 1`.
    pub operator_product: Option<Sign>,
    pub contradiction: bool,
    /// The operator product equals the eigenvalue product times the
    /// identity, as it must for commuting eigenoperators of one state.
    pub product_route_agrees: bool,
}

impl ParityReport {
    pub fn distinct_symbols(&self) -> usize {
        self.multiplicities.len()
    }
}

/// Verify every declared eigenvalue on the state and evaluate the parity
/// argument. The product of the observables is formed exactly (Pauli
/// multiplication with phase tracking) as an independent check of the
/// eigenvalue bookkeeping.
pub fn check_parity_contradiction(inst: &ParityInstance) -> Result<ParityReport> {
    let n = inst.state.n();
    for o in &inst.operators {
        if o.op.n() != n {
            return Err(Error::DimensionMismatch { left: n, right: o.op.n() });
        }
        match eigensign(&o.op, &inst.state)? {
            None => return Err(Error::NotEigenoperator { op: o.op.to_string() }),
            Some(s) if s != o.eigenvalue => {
                return Err(Error::EigenvalueMismatch {
                    op: o.op.to_string(),
                    declared: o.eigenvalue.to_string(),
                    actual: s.to_string(),
                })
            }
            Some(_) => {}
        }
    }

    let counts = inst.factor_multiset();
    let all_even = counts.values().all(|c| c % 2 == 0);
    let eigenvalue_product = Sign::product(inst.operators.iter().map(|o| o.eigenvalue));
    let mut product = PauliString::identity(n)?;
    for o in &inst.operators {
        product = product.multiply(&o.op)?;
    }
    let operator_product = match (product.is_scalar(), product.phase_exp()) {
        (true, 0) => Some(Sign::Plus),
        (true, 2) => Some(Sign::Minus),
        _ => None,
    };
    let product_route_agrees = !all_even || operator_product == Some(eigenvalue_product);
    Ok(ParityReport {
        operators: inst.operators.clone(),
        multiplicities: counts.iter().map(|(s, &count)| MultiplicityEntry { symbol: s.label(), count }).collect(),
        all_even,
        eigenvalue_product,
        operator_product,
        contradiction: all_even && eigenvalue_product == Sign::Minus,
        product_route_agrees,
    })
}

/// `σ_zzzzz` together with the five cyclic shifts of `σ1x σ2z σ3x`, with
/// the eigenvalues read from the group for the chosen codeword.
pub fn canonical_pentagon_instance(
    group: &StabilizerGroup,
    state: &StateVector,
    codeword: Codeword,
) -> Result<ParityInstance> {
    if group.n() != 5 {
        return Err(Error::DimensionMismatch { left: 5, right: group.n() });
    }
    let mut ops: Vec<PauliString> = vec!["ZZZZZ".parse()?];
    ops.extend("XZXII".parse::<PauliString>()?.orbit());
    let elements = ops
        .iter()
        .map(|op| group.get(op).copied().ok_or_else(|| Error::Construction(format!("{op} is not in the group"))))
        .collect::<Result<Vec<_>>>()?;
    Ok(ParityInstance::from_elements(state.clone(), &elements, codeword))
}

/// One side of the pentagon: `σ_kx σ_(k+1)z σ_(k+2)x` and its value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PentagonSide {
    pub from_vertex: String,
    pub middle: String,
    pub to_vertex: String,
    pub product: Sign,
}

/// The pentagon picture of the canonical instance: vertices are the σ_x
/// symbols, each side carries one σ_z in the middle, and the five σ_z
/// multiply to the `ZZZZZ` eigenvalue.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pentagon {
    pub sides: Vec<PentagonSide>,
    pub center_product: Sign,
    pub distinct_symbols: usize,
}

/// Arrange the three-qubit operators of the canonical instance so that
/// consecutive sides share an x-vertex.
pub fn pentagon(inst: &ParityInstance) -> Result<Pentagon> {
    let zzzzz = inst
        .operators
        .iter()
        .find(|o| o.op.weight() == 5)
        .ok_or_else(|| Error::Construction("pentagon needs the all-Z operator".into()))?;
    let mut sides = Vec::new();
    // side k: x on k, z on k+1, x on k+2; the cycle k = 0, 2, 4, 1, 3 closes
    for step in 0..5usize {
        let k = (2 * step) % 5;
        let op = PauliString::from_sites(
            5,
            &[(k, PauliLetter::X), ((k + 1) % 5, PauliLetter::Z), ((k + 2) % 5, PauliLetter::X)],
        )?;
        let o = inst
            .operators
            .iter()
            .find(|o| o.op == op)
            .ok_or_else(|| Error::Construction(format!("pentagon side {op} missing")))?;
        let sym = |site: usize, letter| Symbol { site, letter }.label();
        sides.push(PentagonSide {
            from_vertex: sym(k, PauliLetter::X),
            middle: sym((k + 1) % 5, PauliLetter::Z),
            to_vertex: sym((k + 2) % 5, PauliLetter::X),
            product: o.eigenvalue,
        });
    }
    Ok(Pentagon { sides, center_product: zzzzz.eigenvalue, distinct_symbols: inst.factor_multiset().len() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dyadic::DyadicGaussian;

    fn obs(text: &str, s: Sign) -> SignedObservable {
        SignedObservable { op: text.parse().unwrap(), eigenvalue: s }
    }

    fn ghz_plus() -> StateVector {
        StateVector::from_terms(3, [("000", DyadicGaussian::ONE), ("111", DyadicGaussian::ONE)]).unwrap()
    }

    #[test]
    fn ghz_contradiction() {
        use Sign::*;
        let inst = ParityInstance::new(
            ghz_plus(),
            vec![obs("XXX", Plus), obs("XYY", Minus), obs("YXY", Minus), obs("YYX", Minus)],
        );
        let r = check_parity_contradiction(&inst).unwrap();
        assert!(r.contradiction);
        assert!(r.all_even);
        assert_eq!(r.operator_product, Some(Minus));
        assert!(r.product_route_agrees);
        assert_eq!(r.distinct_symbols(), 6);
    }

    #[test]
    fn consistent_set_is_not_a_contradiction() {
        use Sign::*;
        let inst = ParityInstance::new(ghz_plus(), vec![obs("ZZI", Plus), obs("IZZ", Plus), obs("ZIZ", Plus)]);
        let r = check_parity_contradiction(&inst).unwrap();
        assert!(r.all_even);
        assert!(!r.contradiction);
        assert_eq!(r.operator_product, Some(Plus));
    }

    #[test]
    fn bad_inputs_are_errors() {
        use Sign::*;
        let wrong = ParityInstance::new(ghz_plus(), vec![obs("XXX", Minus)]);
        assert!(matches!(check_parity_contradiction(&wrong), Err(Error::EigenvalueMismatch { .. })));
        let not_eigen = ParityInstance::new(ghz_plus(), vec![obs("XII", Plus)]);
        assert!(matches!(check_parity_contradiction(&not_eigen), Err(Error::NotEigenoperator { .. })));
    }
}
