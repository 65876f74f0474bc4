//! n-qubit Pauli strings in symplectic form with exact `i^k` phase tracking.
//!
//! A [`PauliString`] is `i^phase · P_1 ⊗ … ⊗ P_n` where each `P_k` is one of
//! the Hermitian letters I, X, Y, Z. Site `k` (0-based) is bit `k` of the
//! `x`/`z` words: X = (1,0), Z = (0,1), Y = (1,1).
//!
//! Text form: optional sign, optional `i`, then one letter per site with
//! site 1 leftmost, e.g. `+XZIZX`, `-iXY`. Formatting always emits the sign.

use std::fmt;
use std::ops::{Mul, Neg};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_QUBITS: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PauliLetter {
    I,
    X,
    Y,
    Z,
}

impl PauliLetter {
    pub const ALL: [PauliLetter; 4] = [PauliLetter::I, PauliLetter::X, PauliLetter::Y, PauliLetter::Z];
    pub const NONTRIVIAL: [PauliLetter; 3] = [PauliLetter::X, PauliLetter::Y, PauliLetter::Z];

    pub fn from_bits(x: bool, z: bool) -> Self {
        match (x, z) {
            (false, false) => PauliLetter::I,
            (true, false) => PauliLetter::X,
            (true, true) => PauliLetter::Y,
            (false, true) => PauliLetter::Z,
        }
    }

    pub fn bits(self) -> (bool, bool) {
        match self {
            PauliLetter::I => (false, false),
            PauliLetter::X => (true, false),
            PauliLetter::Y => (true, true),
            PauliLetter::Z => (false, true),
        }
    }

    pub fn as_char(self) -> char {
        match self {
            PauliLetter::I => 'I',
            PauliLetter::X => 'X',
            PauliLetter::Y => 'Y',
            PauliLetter::Z => 'Z',
        }
    }

    /// Lower-case letter as used in site-indexed labels such as `σ1x`.
    pub fn as_lower(self) -> char {
        self.as_char().to_ascii_lowercase()
    }

    pub fn from_char(c: char) -> Option<Self> {
        match c {
            'I' => Some(PauliLetter::I),
            'X' => Some(PauliLetter::X),
            'Y' => Some(PauliLetter::Y),
            'Z' => Some(PauliLetter::Z),
            _ => None,
        }
    }

    /// Index among the non-identity letters (x = 0, y = 1, z = 2).
    pub fn nontrivial_index(self) -> Option<usize> {
        match self {
            PauliLetter::I => None,
            PauliLetter::X => Some(0),
            PauliLetter::Y => Some(1),
            PauliLetter::Z => Some(2),
        }
    }

    /// `self · other = i^k · letter`, returned as `(k mod 4, letter)`.
    pub fn product(self, other: PauliLetter) -> (u8, PauliLetter) {
        use PauliLetter::*;
        let (x1, z1) = self.bits();
        let (x2, z2) = other.bits();
        let letter = PauliLetter::from_bits(x1 ^ x2, z1 ^ z2);
        let k = match (self, other) {
            (X, Y) | (Y, Z) | (Z, X) => 1,
            (Y, X) | (Z, Y) | (X, Z) => 3,
            _ => 0,
        };
        (k, letter)
    }
}

impl fmt::Display for PauliLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

impl FromStr for PauliLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut chars = s.chars();
        match (chars.next(), chars.next()) {
            (Some(c), None) => PauliLetter::from_char(c.to_ascii_uppercase()),
            _ => None,
        }
        .ok_or_else(|| Error::ParsePauli { text: s.to_string(), reason: "expected one of I, X, Y, Z".into() })
    }
}

/// An eigenvalue or sign, `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_bool_negative(negative: bool) -> Self {
        if negative {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }

    pub fn to_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }

    pub fn product<I: IntoIterator<Item = Sign>>(signs: I) -> Sign {
        signs.into_iter().fold(Sign::Plus, |a, b| a * b)
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_bool_negative(self.is_minus() != rhs.is_minus())
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        Sign::from_bool_negative(!self.is_minus())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}1", self.as_char())
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "+" | "+1" | "1" => Ok(Sign::Plus),
            "-" | "-1" => Ok(Sign::Minus),
            other => Err(Error::ParsePauli { text: other.to_string(), reason: "expected a sign (+1 or -1)".into() }),
        }
    }
}

impl Serialize for Sign {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_i8(self.to_i8())
    }
}

impl<'de> Deserialize<'de> for Sign {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        match i8::deserialize(deserializer)? {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(serde::de::Error::custom(format!("sign must be 1 or -1, got {other}"))),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PauliString {
    n: usize,
    phase: u8,
    x: u64,
    z: u64,
}

fn site_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 || n > MAX_QUBITS {
        Err(Error::QubitCount(n))
    } else {
        Ok(())
    }
}

impl PauliString {
    pub fn identity(n: usize) -> Result<Self> {
        check_n(n)?;
        Ok(Self { n, phase: 0, x: 0, z: 0 })
    }

    /// Build from raw symplectic words. Bits at or above `n` are rejected.
    pub fn from_bits(n: usize, phase_exp: u8, x: u64, z: u64) -> Result<Self> {
        check_n(n)?;
        let mask = site_mask(n);
        if x & !mask != 0 || z & !mask != 0 {
            return Err(Error::Construction(format!("bits set beyond {n} qubits")));
        }
        Ok(Self { n, phase: phase_exp % 4, x, z })
    }

    pub fn from_letters(phase_exp: u8, letters: &[PauliLetter]) -> Result<Self> {
        check_n(letters.len())?;
        let (mut x, mut z) = (0u64, 0u64);
        for (k, letter) in letters.iter().enumerate() {
            let (xb, zb) = letter.bits();
            x |= (xb as u64) << k;
            z |= (zb as u64) << k;
        }
        Ok(Self { n: letters.len(), phase: phase_exp % 4, x, z })
    }

    /// A single non-identity letter at `site` (0-based), identity elsewhere.
    pub fn single(n: usize, site: usize, letter: PauliLetter) -> Result<Self> {
        Self::from_sites(n, &[(site, letter)])
    }

    /// Product of letters at distinct 0-based sites, phase 0.
    pub fn from_sites(n: usize, sites: &[(usize, PauliLetter)]) -> Result<Self> {
        let mut p = Self::identity(n)?;
        for &(site, letter) in sites {
            if site >= n {
                return Err(Error::SiteOutOfRange { site, n });
            }
            p.set_letter(site, letter);
        }
        Ok(p)
    }

    fn set_letter(&mut self, site: usize, letter: PauliLetter) {
        let (xb, zb) = letter.bits();
        let bit = 1u64 << site;
        self.x = (self.x & !bit) | if xb { bit } else { 0 };
        self.z = (self.z & !bit) | if zb { bit } else { 0 };
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn phase_exp(&self) -> u8 {
        self.phase
    }

    pub fn x_bits(&self) -> u64 {
        self.x
    }

    pub fn z_bits(&self) -> u64 {
        self.z
    }

    pub fn letter(&self, site: usize) -> PauliLetter {
        PauliLetter::from_bits((self.x >> site) & 1 == 1, (self.z >> site) & 1 == 1)
    }

    pub fn letters(&self) -> Vec<PauliLetter> {
        (0..self.n).map(|k| self.letter(k)).collect()
    }

    /// Letters only, e.g. `XZIZX`.
    pub fn letters_text(&self) -> String {
        (0..self.n).map(|k| self.letter(k).as_char()).collect()
    }

    /// Hermitian (and so ±1-valued) exactly when the phase is real.
    pub fn is_hermitian(&self) -> bool {
        self.phase.is_multiple_of(2)
    }

    /// True when every letter is I, whatever the phase.
    pub fn is_scalar(&self) -> bool {
        self.x == 0 && self.z == 0
    }

    pub fn weight(&self) -> usize {
        (self.x | self.z).count_ones() as usize
    }

    /// Same letters, phase reset to 0.
    pub fn bare(&self) -> Self {
        Self { phase: 0, ..*self }
    }

    pub fn with_phase(&self, phase_exp: u8) -> Self {
        Self { phase: phase_exp % 4, ..*self }
    }

    /// Multiply the global phase by `i^k`.
    pub fn times_i_pow(&self, k: u8) -> Self {
        Self { phase: (self.phase + k) % 4, ..*self }
    }

    pub fn adjoint(&self) -> Self {
        Self { phase: (4 - self.phase) % 4, ..*self }
    }

    /// 0-based sites carrying a non-identity letter, ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&k| (self.x | self.z) >> k & 1 == 1).collect()
    }

    /// Keep the letters at `sites` (0-based), identity elsewhere, phase 0.
    /// Sites outside `0..n` are ignored.
    pub fn restrict(&self, sites: &[usize]) -> Self {
        let keep = sites.iter().filter(|&&k| k < self.n).fold(0u64, |m, &k| m | 1 << k);
        Self { n: self.n, phase: 0, x: self.x & keep, z: self.z & keep }
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    /// Exact operator product `self · other`.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &Self) -> Self {
        let (x1, z1, x2, z2) = (self.x, self.z, other.x, other.z);
        let (xs1, ys1, zs1) = (x1 & !z1, x1 & z1, !x1 & z1);
        let (xs2, ys2, zs2) = (x2 & !z2, x2 & z2, !x2 & z2);
        // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
        let plus = (xs1 & ys2) | (ys1 & zs2) | (zs1 & xs2);
        let minus = (ys1 & xs2) | (zs1 & ys2) | (xs1 & zs2);
        let k = self.phase as i64 + other.phase as i64 + plus.count_ones() as i64 - minus.count_ones() as i64;
        Self { n: self.n, phase: k.rem_euclid(4) as u8, x: x1 ^ x2, z: z1 ^ z2 }
    }

    /// Symplectic form: `true` iff the strings commute.
    pub fn commutes(&self, other: &Self) -> Result<bool> {
        self.check_same_n(other)?;
        Ok(self.commutes_unchecked(other))
    }

    pub(crate) fn commutes_unchecked(&self, other: &Self) -> bool {
        ((self.x & other.z) ^ (self.z & other.x)).count_ones().is_multiple_of(2)
    }

    /// Rotate letters so the letter at site `j` moves to site `j + k mod n`.
    /// Negative `k` rotates the other way; the phase is unchanged.
    pub fn cyclic_shift(&self, k: i64) -> Self {
        let n = self.n;
        let k = k.rem_euclid(n as i64) as u32;
        let rot = |w: u64| {
            if k == 0 {
                w
            } else {
                ((w << k) | (w >> (n as u32 - k))) & site_mask(n)
            }
        };
        Self { n, phase: self.phase, x: rot(self.x), z: rot(self.z) }
    }

    /// The `n` cyclic shifts of `self`, starting with `self`.
    pub fn orbit(&self) -> Vec<Self> {
        (0..self.n as i64).map(|k| self.cyclic_shift(k)).collect()
    }

    /// Human-readable product of site operators with 1-based sites, e.g.
    /// `σ1x σ2z σ3x`; the identity prints as `1`.
    pub fn sigma_label(&self) -> String {
        let sites = self.support();
        if sites.is_empty() {
            return "1".to_string();
        }
        sites
            .iter()
            .map(|&k| format!("σ{}{}", k + 1, self.letter(k).as_lower()))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix = match self.phase {
            0 => "+",
            1 => "+i",
            2 => "-",
            _ => "-i",
        };
        write!(f, "{prefix}{}", self.letters_text())
    }
}

impl fmt::Debug for PauliString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for PauliString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |reason: &str| Error::ParsePauli { text: s.to_string(), reason: reason.to_string() };
        let mut rest = s.trim();
        let mut phase = 0u8;
        if let Some(r) = rest.strip_prefix('+') {
            rest = r;
        } else if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            phase = 2;
        }
        if let Some(r) = rest.strip_prefix('i') {
            rest = r;
            phase += 1;
        }
        if rest.is_empty() {
            return Err(err("no Pauli letters"));
        }
        let letters = rest
            .chars()
            .map(|c| PauliLetter::from_char(c).ok_or_else(|| err(&format!("invalid letter {c:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if letters.len() > MAX_QUBITS {
            return Err(err("too many qubits"));
        }
        PauliString::from_letters(phase, &letters)
    }
}

impl Serialize for PauliString {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PauliString {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(deserializer)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Ordering by letters (I < X < Y < Z, site 1 first), then phase.
impl Ord for PauliString {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.n
            .cmp(&other.n)
            .then_with(|| self.letters().cmp(&other.letters()))
            .then_with(|| self.phase.cmp(&other.phase))
    }
}

impl PartialOrd for PauliString {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::DenseMatrix;
    use proptest::prelude::*;

    fn p(s: &str) -> PauliString {
        s.parse().unwrap()
    }

    fn arb_pauli(n: usize) -> impl Strategy<Value = PauliString> {
        let mask = site_mask(n);
        (0u8..4, any::<u64>(), any::<u64>())
            .prop_map(move |(ph, x, z)| PauliString::from_bits(n, ph, x & mask, z & mask).unwrap())
    }

    #[test]
    fn single_qubit_relations() {
        assert_eq!(p("X").multiply(&p("Y")).unwrap(), p("iZ"));
        assert_eq!(p("Y").multiply(&p("X")).unwrap(), p("-iZ"));
        assert_eq!(p("Z").multiply(&p("X")).unwrap(), p("iY"));
        assert_eq!(p("Y").multiply(&p("Y")).unwrap(), p("I"));
    }

    #[test]
    fn identity_is_neutral() {
        let id = PauliString::identity(5).unwrap();
        for s in ["XZIZX", "-YXIXY", "iZZZZZ"] {
            assert_eq!(id.multiply(&p(s)).unwrap(), p(s));
            assert_eq!(p(s).multiply(&id).unwrap(), p(s));
        }
    }

    #[test]
    fn product_of_two_generators_matches_dense_product() {
        let a = p("XZIZX");
        let b = p("YXIXY");
        let c = a.multiply(&b).unwrap();
        assert_eq!(c.letters_text(), "ZYIYZ");
        let dense = DenseMatrix::from_pauli(&a).mul(&DenseMatrix::from_pauli(&b)).unwrap();
        assert_eq!(dense, DenseMatrix::from_pauli(&c));
        // XY = iZ, ZX = iY at four sites: i^4 = 1.
        assert_eq!(c.phase_exp(), 0);
    }

    #[test]
    fn length_mismatch_is_an_error() {
        assert_eq!(p("XX").multiply(&p("XXX")), Err(Error::DimensionMismatch { left: 2, right: 3 }));
        assert!(p("XX").commutes(&p("X")).is_err());
    }

    #[test]
    fn commutation_examples() {
        assert!(!p("X").commutes(&p("Z")).unwrap());
        // σ2z σ3x against σ4x σ5z
        assert!(p("IZXII").commutes(&p("IIIXZ")).unwrap());
    }

    #[test]
    fn cyclic_shift_examples() {
        assert_eq!(p("XZIZX").cyclic_shift(1), p("XXZIZ"));
        assert_eq!(p("-XZIZX").cyclic_shift(5), p("-XZIZX"));
        assert_eq!(p("XZIZX").cyclic_shift(-1), p("ZIZXX"));
        let orbit = p("IXZXI").orbit();
        assert_eq!(orbit.len(), 5);
        assert!(orbit.contains(&p("XZXII")));
    }

    #[test]
    fn parse_and_format() {
        let q = p("XZIZX");
        assert_eq!(q.phase_exp(), 0);
        assert_eq!(q.letters(), vec![PauliLetter::X, PauliLetter::Z, PauliLetter::I, PauliLetter::Z, PauliLetter::X]);
        assert_eq!(q.to_string(), "+XZIZX");
        let zz = p("-ZZZZZ");
        assert_eq!(zz.phase_exp(), 2);
        assert_eq!(zz.to_string(), "-ZZZZZ");
        assert_eq!(p("-iXY").to_string(), "-iXY");
        assert!(matches!("XQZ".parse::<PauliString>(), Err(Error::ParsePauli { .. })));
        assert!("".parse::<PauliString>().is_err());
        assert!("-i".parse::<PauliString>().is_err());
    }

    #[test]
    fn support_and_restrict() {
        assert_eq!(p("IXZXI").support(), vec![1, 2, 3]);
        assert_eq!(p("-XZIZX").restrict(&[1, 2, 3, 4]), p("IZIZX"));
        assert_eq!(p("IIIII").restrict(&[0, 3]), p("IIIII"));
        assert_eq!(p("XZIZX").sigma_label(), "σ1x σ2z σ4z σ5x");
    }

    #[test]
    fn hermiticity() {
        assert!(p("-XY").is_hermitian());
        assert!(!p("iXY").is_hermitian());
    }

    proptest! {
        #[test]
        fn associative(a in arb_pauli(5), b in arb_pauli(5), c in arb_pauli(5)) {
            let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
            let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn squares_are_scalar(a in arb_pauli(7)) {
            let sq = a.multiply(&a).unwrap();
            prop_assert!(sq.is_scalar());
            if a.is_hermitian() {
                prop_assert_eq!(sq.phase_exp(), 0);
            } else {
                prop_assert_eq!(sq.phase_exp(), 2);
            }
        }

        #[test]
        fn swap_sign_follows_symplectic_form(a in arb_pauli(6), b in arb_pauli(6)) {
            let ab = a.multiply(&b).unwrap();
            let ba = b.multiply(&a).unwrap();
            let expected = if a.commutes(&b).unwrap() { ba } else { ba.times_i_pow(2) };
            prop_assert_eq!(ab, expected);
        }

        #[test]
        fn shift_is_an_automorphism(a in arb_pauli(5), b in arb_pauli(5), k in -7i64..7) {
            let lhs = a.multiply(&b).unwrap().cyclic_shift(k);
            let rhs = a.cyclic_shift(k).multiply(&b.cyclic_shift(k)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn text_round_trip(a in arb_pauli(7)) {
            prop_assert_eq!(a.to_string().parse::<PauliString>().unwrap(), a);
        }

        #[test]
        fn agrees_with_dense_matrices(n in 1usize..=3, seed in any::<(u64, u64, u64, u64, u8, u8)>()) {
            let mask = site_mask(n);
            let a = PauliString::from_bits(n, seed.4, seed.0 & mask, seed.1 & mask).unwrap();
            let b = PauliString::from_bits(n, seed.5, seed.2 & mask, seed.3 & mask).unwrap();
            let (da, db) = (DenseMatrix::from_pauli(&a), DenseMatrix::from_pauli(&b));
            let dab = da.mul(&db).unwrap();
            prop_assert_eq!(&DenseMatrix::from_pauli(&a.multiply(&b).unwrap()), &dab);
            let dba = db.mul(&da).unwrap();
            prop_assert_eq!(a.commutes(&b).unwrap(), dab == dba);
        }
    }
}
