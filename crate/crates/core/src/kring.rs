use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pvengine::{Base, GradedKGroup, WedgeSymbol};

/// Exterior generator 0 stands for T, generator i >= 1 for the i-th irreducible f_i.
pub type Word = Vec<u32>;

pub fn exterior_rank(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    (0..k as u128).fold(1, |acc, i| acc * (m as u128 - i) / (i + 1))
}

/// a ^ b as (sign, sorted word), or `None` when a generator repeats.
pub fn wedge(a: &[u32], b: &[u32]) -> Option<(i8, Word)> {
    let mut w: Word = a.iter().chain(b).copied().collect();
    // bubble sort counts transpositions
    let mut sign = 1i8;
    for i in 0..w.len() {
        for j in 0..w.len() - 1 - i {
            if w[j] > w[j + 1] {
                w.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    w.windows(2).all(|p| p[0] != p[1]).then_some((sign, w))
}

pub fn word_of(sym: &WedgeSymbol) -> (u32, Word) {
    match sym.base {
        Base::P(c) => (c, sym.indices.clone()),
        Base::W(c) => (c, std::iter::once(0).chain(sym.indices.iter().copied()).collect()),
    }
}

pub fn symbol_of(chi: u32, word: &[u32]) -> Option<WedgeSymbol> {
    match word.first() {
        Some(0) => WedgeSymbol::new(Base::W(chi), word[1..].to_vec(), 1),
        _ => WedgeSymbol::new(Base::P(chi), word.to_vec(), 1),
    }
}

/// Reduced K_0 of C*(F_q^x) tensor the exterior algebra on T, f_1, ..., f_m.
pub fn closed_form(q: u64, m: usize) -> Result<GradedKGroup> {
    if q < 2 {
        return Err(Error::InvalidParameter("q must be at least 2".into()));
    }
    if m >= 31 {
        return Err(Error::InvalidParameter(format!("m = {m} is too large to enumerate")));
    }
    let (mut k0, mut k1) = (Vec::new(), Vec::new());
    for chi in 1..(q - 1) as u32 {
        for mask in 0u64..(1 << (m + 1)) {
            let word: Word = (0..=m as u32).filter(|&i| mask >> i & 1 == 1).collect();
            let sym = symbol_of(chi, &word).expect("valid word");
            if word.len() % 2 == 0 { k0.push(sym) } else { k1.push(sym) }
        }
    }
    Ok(GradedKGroup::Free { q, level: m, k0, k1 })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareReport {
    pub success: bool,
    /// (tower rank, closed-form rank) in degrees 0 and 1
    pub ranks: [(usize, usize); 2],
    pub unmatched_tower: Vec<String>,
    pub unmatched_closed: Vec<String>,
}

/// Matches the labeled bases degree by degree, up to sign.
pub fn compare(tower: &GradedKGroup, closed: &GradedKGroup) -> CompareReport {
    let mut ranks = [(0, 0); 2];
    let (mut unmatched_tower, mut unmatched_closed) = (Vec::new(), Vec::new());
    for d in 0..2 {
        let (a, b) = (tower.ledger(d), closed.ledger(d));
        ranks[d] = (a.len(), b.len());
        let ka: BTreeSet<_> = a.iter().map(WedgeSymbol::key).collect();
        let kb: BTreeSet<_> = b.iter().map(WedgeSymbol::key).collect();
        unmatched_tower.extend(a.iter().filter(|s| !kb.contains(&s.key())).map(|s| format!("K{d} {s}")));
        unmatched_closed.extend(b.iter().filter(|s| !ka.contains(&s.key())).map(|s| format!("K{d} {s}")));
        if ka.len() != a.len() {
            unmatched_tower.push(format!("K{d} repeated label"));
        }
    }
    let success = tower.q() == closed.q()
        && tower.level() == closed.level()
        && unmatched_tower.is_empty()
        && unmatched_closed.is_empty()
        && ranks.iter().all(|(x, y)| x == y);
    CompareReport { success, ranks, unmatched_tower, unmatched_closed }
}

/// Element of the closed form: integer combination of (chi, word) basis classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KClass {
    terms: BTreeMap<(u32, Word), BigInt>,
}

impl KClass {
    pub fn zero() -> KClass {
        KClass { terms: BTreeMap::new() }
    }

    /// The class of (chi, w_1 ^ ... ^ w_k); the word need not be sorted.
    pub fn basis(chi: u32, word: &[u32]) -> KClass {
        let mut k = KClass::zero();
        if let Some((s, w)) = wedge(&[], word) {
            k.terms.insert((chi, w), BigInt::from(s));
        }
        k
    }

    pub fn of_symbol(s: &WedgeSymbol) -> KClass {
        let (chi, w) = word_of(s);
        KClass::basis(chi, &w).scale(&BigInt::from(s.sign))
    }

    pub fn terms(&self) -> &BTreeMap<(u32, Word), BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Parity of a homogeneous class; `None` for zero or mixed classes.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|(_, w)| w.len() % 2);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    fn add_term(&mut self, key: (u32, Word), c: BigInt) {
        let e = self.terms.entry(key.clone()).or_insert_with(BigInt::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&self, o: &KClass) -> KClass {
        let mut out = self.clone();
        for (k, c) in &o.terms {
            out.add_term(k.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &BigInt) -> KClass {
        if c.is_zero() {
            return KClass::zero();
        }
        KClass { terms: self.terms.iter().map(|(k, x)| (k.clone(), x * c)).collect() }
    }

    /// (r (x) a)(r' (x) b) = r r' (x) a ^ b, with r r' the coordinatewise product over characters.
    pub fn product(&self, o: &KClass) -> KClass {
        let mut out = KClass::zero();
        for ((chi, a), x) in &self.terms {
            for ((psi, b), y) in &o.terms {
                if chi != psi {
                    continue;
                }
                if let Some((s, w)) = wedge(a, b) {
                    out.add_term((*chi, w), x * y * BigInt::from(s));
                }
            }
        }
        out
    }

    pub fn is_basis_element(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(One::is_one)
    }
}

impl fmt::Display for KClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, ((chi, w), c)) in self.terms.iter().enumerate() {
            let sym = symbol_of(*chi, w).expect("stored words are valid");
            let neg = c < &BigInt::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !mag.is_one() {
                write!(f, "{mag}*")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

pub fn ring_product(x: &KClass, y: &KClass) -> KClass {
    x.product(y)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingTableEntry {
    pub left: String,
    pub right: String,
    pub product: String,
}

/// Products of all basis classes with words of length at most `max_len`.
pub fn ring_table(q: u64, m: usize, max_len: usize) -> Result<Vec<RingTableEntry>> {
    let GradedKGroup::Free { k0, k1, .. } = closed_form(q, m)? else { unreachable!() };
    let mut basis: Vec<WedgeSymbol> = k0.into_iter().chain(k1).filter(|s| word_of(s).1.len() <= max_len).collect();
    basis.sort_by_key(|s| {
        let (c, w) = word_of(s);
        (c, w.len(), w)
    });
    let mut out = Vec::new();
    for a in &basis {
        for b in &basis {
            let p = ring_product(&KClass::of_symbol(a), &KClass::of_symbol(b));
            out.push(RingTableEntry { left: a.to_string(), right: b.to_string(), product: p.to_string() });
        }
    }
    Ok(out)
}
