//! The affine side: canonical indecomposable labels of the Kazhdan-Lusztig
//! category at an admissible level, their composition series and Loewy
//! layers, contragredients, logarithmic flags, twist scalars, and tensor
//! product rules.
//!
//! Canonical labels are:
//!
//! * `Simple(r)` for every `r >= 1`;
//! * `Verma(r)` and `CoVerma(r)` only for `p ∤ r` (the generalized Verma
//!   module with `p | r` is already simple);
//! * `Proj(r)` only for `r > p` with `p ∤ r` (smaller projective covers
//!   alias generalized Vermas or simples).
//!
//! Tensor products are computed from closed forms where one exists (the
//! two-dimensional generator against anything, simples in the semisimple
//! ideal against simples) and by a greedy character subtraction on the
//! subcategory of projectives, where Krull-Schmidt plus the multiplicativity
//! of Verma-flag characters pins the decomposition uniquely.

use crate::cyclotomic::{cyc_conjugate, cyc_neg, cyc_root, CycNumber};
use crate::level::{BraidingVariant, Flavor, Level, Parity, TwistSign};
use num::{BigUint, One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum KLError {
    #[error("label index {0} is out of range: indices start at 1")]
    IndexOutOfRange(i64),
    #[error("objects live over different levels: {0} vs {1}")]
    MixedLevels(Level, Level),
    #[error("unsupported label {0} for this operation")]
    UnsupportedLabel(String),
    #[error("no closed-form tensor rule covers the pair ({0}, {1})")]
    UnsupportedPair(String, String),
    #[error("label {0} is not projective")]
    NonProjective(String),
    #[error("greedy decomposition produced a negative multiplicity at index {0}")]
    InternalNonNegativity(u64),
}

/// The four families of canonical indecomposables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum KLKind {
    Simple,
    Verma,
    CoVerma,
    Proj,
}

/// A canonical indecomposable label; construct through [`canonicalize`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KLLabel {
    r: u64,
    kind: KLKind,
    level: Level,
}

impl KLLabel {
    pub fn kind(&self) -> KLKind {
        self.kind
    }

    pub fn index(&self) -> u64 {
        self.r
    }

    pub fn level(&self) -> Level {
        self.level
    }

    /// True for the projective objects: generalized Vermas with `r <= p-1`,
    /// simples with `p | r`, and all `Proj` labels.
    pub fn is_projective(&self) -> bool {
        let p = self.level.p();
        match self.kind {
            KLKind::Verma => self.r <= p - 1,
            KLKind::Simple => self.r % p == 0,
            KLKind::Proj => true,
            KLKind::CoVerma => false,
        }
    }

    /// Index of the simple head of a projective label.
    pub fn head_index(&self) -> Option<u64> {
        self.is_projective().then_some(self.r)
    }
}

impl fmt::Display for KLLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            KLKind::Simple => write!(f, "L{}", self.r),
            KLKind::Verma => write!(f, "V{}", self.r),
            KLKind::CoVerma => write!(f, "Vco{}", self.r),
            KLKind::Proj => write!(f, "P{}", self.r),
        }
    }
}

/// Reduces `(kind, r)` to the canonical label naming the same isomorphism
/// class: `Verma(np) = CoVerma(np) = Simple(np)`, `Proj(r) = Verma(r)` for
/// `r <= p-1`, and `Proj(np) = Simple(np)`.
pub fn canonicalize(kind: KLKind, r: i64, lv: Level) -> Result<KLLabel, KLError> {
    if r < 1 {
        return Err(KLError::IndexOutOfRange(r));
    }
    let r = r as u64;
    let p = lv.p();
    let kind = match kind {
        KLKind::Simple => KLKind::Simple,
        KLKind::Verma | KLKind::CoVerma if r % p == 0 => KLKind::Simple,
        KLKind::Verma => KLKind::Verma,
        KLKind::CoVerma => KLKind::CoVerma,
        KLKind::Proj if r % p == 0 => KLKind::Simple,
        KLKind::Proj if r <= p - 1 => KLKind::Verma,
        KLKind::Proj => KLKind::Proj,
    };
    Ok(KLLabel { r, kind, level: lv })
}

/// The projective cover of the simple with index `r`, in canonical form.
pub fn projective_cover(r: i64, lv: Level) -> Result<KLLabel, KLError> {
    canonicalize(KLKind::Proj, r, lv)
}

/// The unit object (the generalized Verma module on the trivial sl2-module).
pub fn unit_label(lv: Level) -> KLLabel {
    canonicalize(KLKind::Verma, 1, lv).expect("index 1 is valid")
}

/// The two-dimensional rigid generator, `Verma(2)` canonically (which is
/// `Simple(2)` when `p = 2`).
pub fn generator_label(lv: Level) -> KLLabel {
    canonicalize(KLKind::Verma, 2, lv).expect("index 2 is valid")
}

/// Multiplicity vector of simple composition factors.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GrVector(pub BTreeMap<u64, BigUint>);

impl GrVector {
    pub fn zero() -> GrVector {
        GrVector(BTreeMap::new())
    }

    pub fn add(&mut self, index: u64, mult: &BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.0.entry(index).or_insert_with(BigUint::zero) += mult;
    }

    pub fn add_one(&mut self, index: u64) {
        self.add(index, &BigUint::one());
    }

    pub fn accumulate(&mut self, other: &GrVector, scale: &BigUint) {
        for (idx, m) in &other.0 {
            self.add(*idx, &(m * scale));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, index: u64) -> BigUint {
        self.0.get(&index).cloned().unwrap_or_else(BigUint::zero)
    }

    /// Total number of factors counted with multiplicity.
    pub fn length(&self) -> BigUint {
        self.0.values().fold(BigUint::zero(), |a, b| a + b)
    }
}

/// Radical layering of an indecomposable, head first, socle last; each layer
/// is a sorted multiset of simple indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoewyData {
    pub layers: Vec<Vec<u64>>,
}

/// A formal nonnegative-integer combination of canonical labels; the empty
/// combination is the zero object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLObject {
    level: Level,
    terms: BTreeMap<KLLabel, BigUint>,
}

impl KLObject {
    pub fn zero(lv: Level) -> KLObject {
        KLObject {
            level: lv,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_label(label: KLLabel) -> KLObject {
        let mut o = KLObject::zero(label.level);
        o.add_label(label, &BigUint::one());
        o
    }

    pub fn unit(lv: Level) -> KLObject {
        KLObject::from_label(unit_label(lv))
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn terms(&self) -> impl Iterator<Item = (&KLLabel, &BigUint)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiplicity(&self, label: &KLLabel) -> BigUint {
        self.terms.get(label).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn add_label(&mut self, label: KLLabel, mult: &BigUint) {
        assert_eq!(label.level, self.level, "label level must match object level");
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(label).or_insert_with(BigUint::zero) += mult;
    }

    pub fn add_object(&mut self, other: &KLObject, scale: &BigUint) {
        for (l, m) in &other.terms {
            self.add_label(*l, &(m * scale));
        }
    }

    /// True when the object is a single unit summand or zero, acting as the
    /// tensor identity.
    pub fn is_unit_label(label: &KLLabel) -> bool {
        label.kind == KLKind::Verma && label.r == 1
    }
}

/// Composition factors of a canonical label as a Grothendieck vector.
pub fn composition_factors(x: &KLLabel) -> GrVector {
    let p = x.level.p();
    let mut v = GrVector::zero();
    match x.kind {
        KLKind::Simple => v.add_one(x.r),
        KLKind::Verma | KLKind::CoVerma => {
            // 0 -> L_{(n+2)p-r} -> V_{np+r} -> L_{np+r} -> 0 with p ∤ r
            let (n, r) = x.level.split_index(x.r);
            v.add_one(x.r);
            v.add_one((n + 2) * p - r);
        }
        KLKind::Proj => {
            // length 4 with head and socle L_{np+r}
            let (n, r) = x.level.split_index(x.r);
            v.add(x.r, &BigUint::from(2u32));
            v.add_one(n * p - r);
            v.add_one((n + 2) * p - r);
        }
    }
    v
}

/// Loewy layers (head first) of a canonical label.
pub fn loewy(x: &KLLabel) -> LoewyData {
    let p = x.level.p();
    let layers = match x.kind {
        KLKind::Simple => vec![vec![x.r]],
        KLKind::Verma => {
            let (n, r) = x.level.split_index(x.r);
            vec![vec![x.r], vec![(n + 2) * p - r]]
        }
        KLKind::CoVerma => {
            let (n, r) = x.level.split_index(x.r);
            vec![vec![(n + 2) * p - r], vec![x.r]]
        }
        KLKind::Proj => {
            let (n, r) = x.level.split_index(x.r);
            let mut middle = vec![n * p - r, (n + 2) * p - r];
            middle.sort_unstable();
            vec![vec![x.r], middle, vec![x.r]]
        }
    };
    LoewyData { layers }
}

/// The contragredient, extended additively: it fixes simples and the
/// self-contragredient projectives `Proj(r)` with `r > p`, and swaps
/// `Verma(r)` with `CoVerma(r)`.
pub fn contragredient(x: &KLObject) -> KLObject {
    let mut out = KLObject::zero(x.level);
    for (l, m) in &x.terms {
        let kind = match l.kind {
            KLKind::Simple => KLKind::Simple,
            KLKind::Proj => KLKind::Proj,
            KLKind::Verma => KLKind::CoVerma,
            KLKind::CoVerma => KLKind::Verma,
        };
        let lab = canonicalize(kind, l.r as i64, x.level).expect("canonical index stays valid");
        out.add_label(lab, m);
    }
    out
}

/// True exactly for the logarithmic indecomposables: projective covers
/// `Proj(np + r)` with `n >= 1` and `p ∤ r`, on which the Virasoro zero mode
/// acts non-semisimply.
pub fn is_logarithmic(x: &KLLabel) -> bool {
    x.kind == KLKind::Proj
}

/// Scalar part of the ribbon twist on an indecomposable, together with the
/// logarithmic flag (the twist has a nilpotent part exactly on logarithmic
/// labels).
///
/// For the standard flavor with the plus twist the scalar is
/// `exp(2*pi*i*h_r) = zeta_{4p}^{q(r^2-1)}`; the minus twist multiplies by
/// `(-1)^{r-1}` (the parity sign), and the reverse flavors conjugate.
pub fn twist_scalar(x: &KLLabel, v: BraidingVariant) -> (CycNumber, bool) {
    let lv = x.level;
    let q = lv.q() as i64;
    let r = x.r as i64;
    let mut scalar = cyc_root(lv, q * (r * r - 1));
    if matches!(v.flavor, Flavor::Reverse | Flavor::TwistedReverse) {
        scalar = cyc_conjugate(&scalar);
    }
    if v.sign == TwistSign::Minus && Parity::from_weight(x.r - 1) == Parity::Odd {
        scalar = cyc_neg(&scalar);
    }
    (scalar, is_logarithmic(x))
}

fn simple(r: u64, lv: Level) -> KLLabel {
    canonicalize(KLKind::Simple, r as i64, lv).expect("positive index")
}

/// Tensor with the two-dimensional generator, label by label, using the
/// closed forms: Verma splitting off neighbours, simples shifting within
/// their block, the simple Verma at `p | r` generating a projective cover,
/// and the projective-cover ladder.
pub fn tensor_v2(x: &KLObject) -> Result<KLObject, KLError> {
    let lv = x.level;
    let mut out = KLObject::zero(lv);
    for (label, mult) in &x.terms {
        let pieces = tensor_v2_label(label)?;
        out.add_object(&pieces, mult);
    }
    Ok(out)
}

fn tensor_v2_label(label: &KLLabel) -> Result<KLObject, KLError> {
    let lv = label.level;
    let p = lv.p();
    let mut out = KLObject::zero(lv);
    let mut push = |kind: KLKind, idx: i64, mult: u32| {
        if idx >= 1 {
            let lab = canonicalize(kind, idx, lv).expect("positive index");
            out.add_label(lab, &BigUint::from(mult));
        }
    };
    match label.kind {
        KLKind::Verma => {
            // V2 x V_r = V_{r-1} + V_{r+1} for p ∤ r
            push(KLKind::Verma, label.r as i64 - 1, 1);
            push(KLKind::Verma, label.r as i64 + 1, 1);
        }
        KLKind::Simple if label.r % p == 0 => {
            // V2 x V_{np} is the projective cover of L_{np+1}
            push(KLKind::Proj, label.r as i64 + 1, 1);
        }
        KLKind::Simple => {
            let (n, r) = lv.split_index(label.r);
            if r == p - 1 {
                // top of the block reflects down
                push(KLKind::Simple, ((n + 1) * p) as i64 - 2, 1);
            } else {
                push(KLKind::Simple, label.r as i64 - 1, 1);
                push(KLKind::Simple, label.r as i64 + 1, 1);
            }
        }
        KLKind::Proj => {
            let (n, r) = lv.split_index(label.r);
            debug_assert!(n >= 1 && r >= 1);
            if p == 2 {
                // V2 x P_{2n+1} = P_{2(n-1)} + 2 P_{2n} + P_{2(n+1)}
                push(KLKind::Proj, 2 * (n as i64 - 1), 1);
                push(KLKind::Proj, 2 * n as i64, 2);
                push(KLKind::Proj, 2 * (n as i64 + 1), 1);
            } else if r == 1 {
                push(KLKind::Proj, (n * p) as i64, 2);
                push(KLKind::Proj, (n * p) as i64 + 2, 1);
            } else if r <= p - 2 {
                push(KLKind::Proj, label.r as i64 - 1, 1);
                push(KLKind::Proj, label.r as i64 + 1, 1);
            } else {
                // r = p - 1
                push(KLKind::Proj, ((n - 1) * p) as i64, 1);
                push(KLKind::Proj, ((n + 1) * p) as i64 - 2, 1);
                push(KLKind::Proj, ((n + 1) * p) as i64, 1);
            }
        }
        KLKind::CoVerma => {
            return Err(KLError::UnsupportedLabel(label.to_string()));
        }
    }
    Ok(out)
}

/// Fusion of two simples from the semisimple ideal range `1 <= r <= p-1`:
/// the Clebsch-Gordan sum truncated at `2p - r - r' - 1`, and zero against
/// any simple with `r' >= p`.
pub fn tensor_simple_small(r: i64, r_prime: i64, lv: Level) -> Result<KLObject, KLError> {
    let p = lv.p() as i64;
    if r < 1 || r > p - 1 {
        return Err(KLError::IndexOutOfRange(r));
    }
    if r_prime < 1 {
        return Err(KLError::IndexOutOfRange(r_prime));
    }
    let mut out = KLObject::zero(lv);
    if r_prime >= p {
        return Ok(out);
    }
    let top = (r + r_prime - 1).min(2 * p - r - r_prime - 1);
    let mut idx = (r - r_prime).abs() + 1;
    while idx <= top {
        out.add_label(simple(idx as u64, lv), &BigUint::one());
        idx += 2;
    }
    Ok(out)
}

/// The multiset of generalized-Verma indices filtering a projective label:
/// `{np-r, np+r}` for the length-4 covers and a singleton otherwise.
pub fn verma_flag(x: &KLLabel) -> Result<Vec<u64>, KLError> {
    if !x.is_projective() {
        return Err(KLError::NonProjective(x.to_string()));
    }
    match x.kind {
        KLKind::Proj => {
            let (n, r) = x.level.split_index(x.r);
            Ok(vec![n * x.level.p() - r, x.r])
        }
        _ => Ok(vec![x.r]),
    }
}

fn flag_of_cover(r: u64, lv: Level) -> Vec<u64> {
    let p = lv.p();
    let (n, s) = lv.split_index(r);
    if s == 0 || r <= p - 1 {
        vec![r]
    } else {
        vec![n * p - s, r]
    }
}

/// Tensor product of projective objects by Verma-flag characters: multiply
/// flags with the classical Clebsch-Gordan rule on dimensions, then strip
/// projective covers greedily from the highest index down. Krull-Schmidt
/// makes the result the unique decomposition into indecomposables.
pub fn tensor_projective(a: &KLObject, b: &KLObject) -> Result<KLObject, KLError> {
    if a.level != b.level {
        return Err(KLError::MixedLevels(a.level, b.level));
    }
    let lv = a.level;
    for (l, _) in a.terms().chain(b.terms()) {
        if !l.is_projective() {
            return Err(KLError::NonProjective(l.to_string()));
        }
    }
    // character of the product in the Verma basis
    let mut character: BTreeMap<u64, num::BigInt> = BTreeMap::new();
    for (la, ma) in a.terms() {
        let fa = verma_flag(la)?;
        for (lb, mb) in b.terms() {
            let fb = verma_flag(lb)?;
            let scale = num::BigInt::from(ma * mb);
            for &x in &fa {
                for &y in &fb {
                    // V_x . V_y = sum of V_c, c = |x-y|+1 .. x+y-1 step 2
                    let lo = x.abs_diff(y) + 1;
                    let hi = x + y - 1;
                    let mut c = lo;
                    while c <= hi {
                        *character.entry(c).or_default() += &scale;
                        c += 2;
                    }
                }
            }
        }
    }
    greedy_from_character(character, lv)
}

fn greedy_from_character(
    mut character: BTreeMap<u64, num::BigInt>,
    lv: Level,
) -> Result<KLObject, KLError> {
    let mut out = KLObject::zero(lv);
    while let Some((&top, coeff)) = character.iter().next_back() {
        if coeff.is_zero() {
            character.remove(&top);
            continue;
        }
        let coeff = coeff.clone();
        if coeff < num::BigInt::zero() {
            return Err(KLError::InternalNonNegativity(top));
        }
        let mult: BigUint = coeff.to_biguint().expect("checked nonnegative");
        let cover = projective_cover(top as i64, lv)?;
        out.add_label(cover, &mult);
        for f in flag_of_cover(top, lv) {
            let entry = character.entry(f).or_default();
            *entry -= &coeff;
            if entry.is_zero() {
                character.remove(&f);
            }
        }
    }
    Ok(out)
}

/// General tensor product dispatcher over the supported closed forms; pairs
/// outside them are reported as unsupported rather than guessed.
pub fn tensor(a: &KLObject, b: &KLObject) -> Result<KLObject, KLError> {
    if a.level != b.level {
        return Err(KLError::MixedLevels(a.level, b.level));
    }
    let lv = a.level;
    let mut out = KLObject::zero(lv);
    for (la, ma) in a.terms() {
        for (lb, mb) in b.terms() {
            let piece = tensor_pair(la, lb)
                .or_else(|_| tensor_pair(lb, la))
                .map_err(|_| KLError::UnsupportedPair(la.to_string(), lb.to_string()))?;
            out.add_object(&piece, &(ma * mb));
        }
    }
    Ok(out)
}

fn tensor_pair(la: &KLLabel, lb: &KLLabel) -> Result<KLObject, KLError> {
    let lv = la.level;
    if KLObject::is_unit_label(la) {
        return Ok(KLObject::from_label(*lb));
    }
    if *la == generator_label(lv) && lb.kind != KLKind::CoVerma {
        return tensor_v2(&KLObject::from_label(*lb));
    }
    if la.kind == KLKind::Simple && la.r <= lv.p() - 1 && lb.kind == KLKind::Simple {
        return tensor_simple_small(la.r as i64, lb.r as i64, lv);
    }
    if la.is_projective() && lb.is_projective() {
        return tensor_projective(&KLObject::from_label(*la), &KLObject::from_label(*lb));
    }
    Err(KLError::UnsupportedPair(la.to_string(), lb.to_string()))
}

/// Dimension of the morphism space out of an indecomposable projective:
/// the multiplicity of its simple head among the composition factors of the
/// target.
pub fn hom_dim_from_proj(a: &KLLabel, w: &KLObject) -> Result<BigUint, KLError> {
    let head = a
        .head_index()
        .ok_or_else(|| KLError::NonProjective(a.to_string()))?;
    let mut total = BigUint::zero();
    for (l, m) in w.terms() {
        total += composition_factors(l).get(head) * m;
    }
    Ok(total)
}

/// True when every summand lies in the semisimple ideal generated by the
/// simples `L_1, ..., L_{p-1}` (the modules for the simple quotient vertex
/// operator algebra).
pub fn in_tensor_ideal(x: &KLObject) -> bool {
    let p = x.level.p();
    x.terms()
        .all(|(l, _)| l.kind == KLKind::Simple && l.r >= 1 && l.r <= p - 1)
}

pub mod json {
    //! Serde-facing form of [`KLObject`]:
    //! `{"level":{"p":3,"q":1},"terms":[{"kind":"Proj","r":4,"mult":2}]}`.

    use super::*;

    #[derive(Serialize, Deserialize)]
    pub struct KLTermJson {
        pub kind: KLKind,
        pub r: u64,
        #[serde(with = "biguint_as_json")]
        pub mult: BigUint,
    }

    #[derive(Serialize, Deserialize)]
    pub struct KLObjectJson {
        pub level: Level,
        pub terms: Vec<KLTermJson>,
    }

    pub(crate) mod biguint_as_json {
        use num::BigUint;
        use serde::de::Error;
        use serde::{Deserialize, Deserializer, Serializer};

        pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
            match u64::try_from(v) {
                Ok(n) => s.serialize_u64(n),
                Err(_) => s.serialize_str(&v.to_string()),
            }
        }

        pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
            #[derive(Deserialize)]
            #[serde(untagged)]
            enum Raw {
                Num(u64),
                Str(String),
            }
            match Raw::deserialize(d)? {
                Raw::Num(n) => Ok(BigUint::from(n)),
                Raw::Str(s) => s.parse().map_err(D::Error::custom),
            }
        }
    }

    impl From<&KLObject> for KLObjectJson {
        fn from(o: &KLObject) -> Self {
            KLObjectJson {
                level: o.level,
                terms: o
                    .terms()
                    .map(|(l, m)| KLTermJson {
                        kind: l.kind(),
                        r: l.index(),
                        mult: m.clone(),
                    })
                    .collect(),
            }
        }
    }

    impl KLObjectJson {
        pub fn into_object(self) -> Result<KLObject, KLError> {
            let mut o = KLObject::zero(self.level);
            for t in self.terms {
                let lab = canonicalize(t.kind, t.r as i64, self.level)?;
                o.add_label(lab, &t.mult);
            }
            Ok(o)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::level::make_level;

    fn lv3() -> Level {
        make_level(3, 1).unwrap()
    }

    fn label(kind: KLKind, r: i64, lv: Level) -> KLLabel {
        canonicalize(kind, r, lv).unwrap()
    }

    fn obj(kind: KLKind, r: i64, lv: Level) -> KLObject {
        KLObject::from_label(label(kind, r, lv))
    }

    fn gr(pairs: &[(u64, u32)]) -> GrVector {
        let mut v = GrVector::zero();
        for &(i, m) in pairs {
            v.add(i, &BigUint::from(m));
        }
        v
    }

    #[test]
    fn canonicalization_aliases() {
        let lv = lv3();
        assert_eq!(label(KLKind::Proj, 2, lv), label(KLKind::Verma, 2, lv));
        assert_eq!(label(KLKind::Verma, 3, lv), label(KLKind::Simple, 3, lv));
        assert_eq!(label(KLKind::Proj, 4, lv).kind(), KLKind::Proj);
        assert_eq!(label(KLKind::CoVerma, 6, lv), label(KLKind::Simple, 6, lv));
        assert_eq!(label(KLKind::Proj, 3, lv), label(KLKind::Simple, 3, lv));
        assert!(canonicalize(KLKind::Simple, 0, lv).is_err());
    }

    #[test]
    fn composition_factor_tables() {
        let lv = lv3();
        assert_eq!(
            composition_factors(&label(KLKind::Verma, 4, lv)),
            gr(&[(4, 1), (8, 1)])
        );
        assert_eq!(
            composition_factors(&label(KLKind::Proj, 4, lv)),
            gr(&[(4, 2), (2, 1), (8, 1)])
        );
        assert_eq!(
            composition_factors(&label(KLKind::Simple, 9, lv)),
            gr(&[(9, 1)])
        );
    }

    #[test]
    fn loewy_layers() {
        let lv = lv3();
        assert_eq!(
            loewy(&label(KLKind::Proj, 5, lv)).layers,
            vec![vec![5], vec![1, 7], vec![5]]
        );
        assert_eq!(
            loewy(&label(KLKind::Verma, 2, lv)).layers,
            vec![vec![2], vec![4]]
        );
        assert_eq!(
            loewy(&label(KLKind::CoVerma, 2, lv)).layers,
            vec![vec![4], vec![2]]
        );
        assert_eq!(loewy(&label(KLKind::Simple, 6, lv)).layers, vec![vec![6]]);
    }

    #[test]
    fn loewy_concatenation_matches_factors() {
        for (p, q) in [(2i64, 1i64), (3, 1), (4, 1), (5, 2)] {
            let lv = make_level(p, q).unwrap();
            for r in 1..=40i64 {
                for kind in [KLKind::Simple, KLKind::Verma, KLKind::CoVerma, KLKind::Proj] {
                    let l = label(kind, r, lv);
                    let mut flat = GrVector::zero();
                    for layer in loewy(&l).layers {
                        for idx in layer {
                            flat.add_one(idx);
                        }
                    }
                    assert_eq!(flat, composition_factors(&l), "{l}");
                }
            }
        }
    }

    #[test]
    fn contragredient_behaviour() {
        let lv = lv3();
        assert_eq!(
            contragredient(&obj(KLKind::Proj, 4, lv)),
            obj(KLKind::Proj, 4, lv)
        );
        assert_eq!(
            contragredient(&obj(KLKind::Verma, 2, lv)),
            obj(KLKind::CoVerma, 2, lv)
        );
        assert_eq!(
            contragredient(&obj(KLKind::Simple, 5, lv)),
            obj(KLKind::Simple, 5, lv)
        );
        // involution, and factors are preserved
        for r in 1..=30i64 {
            for kind in [KLKind::Simple, KLKind::Verma, KLKind::CoVerma, KLKind::Proj] {
                let o = obj(kind, r, lv);
                assert_eq!(contragredient(&contragredient(&o)), o);
                let a: Vec<_> = o
                    .terms()
                    .map(|(l, _)| composition_factors(l))
                    .collect();
                let b: Vec<_> = contragredient(&o)
                    .terms()
                    .map(|(l, _)| composition_factors(l))
                    .collect();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn logarithmic_flags() {
        let lv = lv3();
        assert!(is_logarithmic(&label(KLKind::Proj, 4, lv)));
        assert!(!is_logarithmic(&label(KLKind::Verma, 2, lv)));
        assert!(!is_logarithmic(&label(KLKind::Simple, 6, lv)));
    }

    #[test]
    fn twist_scalars() {
        use crate::cyclotomic::{cyc_neg, cyc_root};
        let lv = lv3();
        let std_plus = BraidingVariant::STANDARD;
        let (one, log) = twist_scalar(&label(KLKind::Simple, 1, lv), std_plus);
        assert_eq!(one, CycNumber::one(lv));
        assert!(!log);
        // theta(V2) = exp(2 pi i h_2) = zeta_12^3 = i
        let (tv2, _) = twist_scalar(&label(KLKind::Verma, 2, lv), std_plus);
        assert_eq!(tv2, cyc_root(lv, 3));
        let std_minus = BraidingVariant::new(Flavor::Standard, TwistSign::Minus);
        let (tv2m, _) = twist_scalar(&label(KLKind::Verma, 2, lv), std_minus);
        assert_eq!(tv2m, cyc_neg(&cyc_root(lv, 3)));
        let rev = BraidingVariant::new(Flavor::Reverse, TwistSign::Plus);
        let (tv2r, _) = twist_scalar(&label(KLKind::Verma, 2, lv), rev);
        assert_eq!(tv2r, cyc_root(lv, -3));
        let (_, log4) = twist_scalar(&label(KLKind::Proj, 4, lv), std_plus);
        assert!(log4);
    }

    #[test]
    fn tensor_v2_examples() {
        let lv = lv3();
        // V2 x V2 = V1 + V3 (canonical: V1, L3)
        let mut expect = obj(KLKind::Verma, 1, lv);
        expect.add_object(&obj(KLKind::Simple, 3, lv), &BigUint::one());
        assert_eq!(tensor_v2(&obj(KLKind::Verma, 2, lv)).unwrap(), expect);
        // V2 x L3 = P4
        assert_eq!(
            tensor_v2(&obj(KLKind::Simple, 3, lv)).unwrap(),
            obj(KLKind::Proj, 4, lv)
        );
        // V2 x L2 = L1 at the block edge
        assert_eq!(
            tensor_v2(&obj(KLKind::Simple, 2, lv)).unwrap(),
            obj(KLKind::Simple, 1, lv)
        );
        // CoVerma rejected
        assert!(matches!(
            tensor_v2(&obj(KLKind::CoVerma, 2, lv)),
            Err(KLError::UnsupportedLabel(_))
        ));
    }

    #[test]
    fn tensor_simple_small_examples() {
        let lv5 = make_level(5, 1).unwrap();
        assert_eq!(
            tensor_simple_small(2, 4, lv5).unwrap(),
            obj(KLKind::Simple, 3, lv5)
        );
        let lv = lv3();
        assert!(tensor_simple_small(1, 7, lv).unwrap().is_zero());
        assert_eq!(
            tensor_simple_small(1, 2, lv).unwrap(),
            obj(KLKind::Simple, 2, lv)
        );
        assert!(tensor_simple_small(3, 1, lv).is_err());
    }

    #[test]
    fn verma_flag_examples() {
        let lv = lv3();
        assert_eq!(verma_flag(&label(KLKind::Proj, 4, lv)).unwrap(), vec![2, 4]);
        assert_eq!(verma_flag(&label(KLKind::Verma, 2, lv)).unwrap(), vec![2]);
        assert_eq!(verma_flag(&label(KLKind::Simple, 6, lv)).unwrap(), vec![6]);
        assert!(verma_flag(&label(KLKind::Simple, 5, lv)).is_err());
        assert!(verma_flag(&label(KLKind::Verma, 4, lv)).is_err());
    }

    #[test]
    fn tensor_projective_examples() {
        let lv = lv3();
        // unit acts trivially
        assert_eq!(
            tensor_projective(&obj(KLKind::Proj, 1, lv), &obj(KLKind::Proj, 4, lv)).unwrap(),
            obj(KLKind::Proj, 4, lv)
        );
        // V2 x L3 = P4 through the flag route as well
        assert_eq!(
            tensor_projective(&obj(KLKind::Verma, 2, lv), &obj(KLKind::Simple, 3, lv)).unwrap(),
            obj(KLKind::Proj, 4, lv)
        );
        // P4 x P4 = P7 + 2 P5 + 4 L3
        let mut expect = obj(KLKind::Proj, 7, lv);
        expect.add_object(&obj(KLKind::Proj, 5, lv), &BigUint::from(2u32));
        expect.add_object(&obj(KLKind::Simple, 3, lv), &BigUint::from(4u32));
        assert_eq!(
            tensor_projective(&obj(KLKind::Proj, 4, lv), &obj(KLKind::Proj, 4, lv)).unwrap(),
            expect
        );
    }

    #[test]
    fn tensor_dispatch() {
        let lv = lv3();
        // unit
        let p4 = obj(KLKind::Proj, 4, lv);
        assert_eq!(tensor(&KLObject::unit(lv), &p4).unwrap(), p4);
        // V2 x V5 = V4 + L6
        let mut expect = obj(KLKind::Verma, 4, lv);
        expect.add_object(&obj(KLKind::Simple, 6, lv), &BigUint::one());
        assert_eq!(
            tensor(&obj(KLKind::Verma, 2, lv), &obj(KLKind::Verma, 5, lv)).unwrap(),
            expect
        );
        // no closed form for L2 x V4
        assert!(matches!(
            tensor(&obj(KLKind::Simple, 2, lv), &obj(KLKind::Verma, 4, lv)),
            Err(KLError::UnsupportedPair(_, _))
        ));
    }

    #[test]
    fn tensor_commutes_on_supported_pairs() {
        let lv = lv3();
        let labels: Vec<KLObject> = vec![
            obj(KLKind::Verma, 1, lv),
            obj(KLKind::Verma, 2, lv),
            obj(KLKind::Simple, 1, lv),
            obj(KLKind::Simple, 2, lv),
            obj(KLKind::Simple, 3, lv),
            obj(KLKind::Proj, 4, lv),
            obj(KLKind::Proj, 5, lv),
            obj(KLKind::Simple, 6, lv),
        ];
        for a in &labels {
            for b in &labels {
                let ab = tensor(a, b);
                let ba = tensor(b, a);
                match (ab, ba) {
                    (Ok(x), Ok(y)) => assert_eq!(x, y),
                    (Err(_), Err(_)) => {}
                    (x, y) => panic!("asymmetric support: {x:?} vs {y:?}"),
                }
            }
        }
    }

    #[test]
    fn hom_dims_examples() {
        let lv = lv3();
        assert_eq!(
            hom_dim_from_proj(&label(KLKind::Proj, 4, lv), &obj(KLKind::Proj, 4, lv)).unwrap(),
            BigUint::from(2u32)
        );
        assert_eq!(
            hom_dim_from_proj(&label(KLKind::Verma, 1, lv), &obj(KLKind::Proj, 5, lv)).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            hom_dim_from_proj(&label(KLKind::Verma, 2, lv), &obj(KLKind::Simple, 6, lv)).unwrap(),
            BigUint::zero()
        );
        assert!(hom_dim_from_proj(&label(KLKind::Simple, 5, lv), &obj(KLKind::Proj, 4, lv)).is_err());
    }

    #[test]
    fn tensor_ideal_membership() {
        let lv = lv3();
        let mut o = obj(KLKind::Simple, 1, lv);
        o.add_object(&obj(KLKind::Simple, 2, lv), &BigUint::from(2u32));
        assert!(in_tensor_ideal(&o));
        assert!(!in_tensor_ideal(&obj(KLKind::Simple, 3, lv)));
        assert!(!in_tensor_ideal(&obj(KLKind::Verma, 2, lv)));
        assert!(in_tensor_ideal(&KLObject::zero(lv)));
    }

    #[test]
    fn json_round_trip() {
        let lv = lv3();
        let mut o = obj(KLKind::Proj, 4, lv);
        o.add_object(&obj(KLKind::Verma, 2, lv), &BigUint::from(3u32));
        let j = serde_json::to_string(&json::KLObjectJson::from(&o)).unwrap();
        let back: json::KLObjectJson = serde_json::from_str(&j).unwrap();
        assert_eq!(back.into_object().unwrap(), o);
    }
}
