use std::fmt;

use serde::{Deserialize, Serialize};

/// Base class of a wedge word: the unitary w_chi (odd) or the projection 1.p_chi (even).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Base {
    W(u32),
    P(u32),
}

impl Base {
    pub fn chi(self) -> u32 {
        match self {
            Base::W(j) | Base::P(j) => j,
        }
    }

    pub fn parity(self) -> u8 {
        match self {
            Base::W(_) => 1,
            Base::P(_) => 0,
        }
    }
}

/// Class <base, t(i_1), ..., t(i_l)> with a tracked orientation.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WedgeSymbol {
    pub base: Base,
    pub indices: Vec<u32>,
    pub sign: i8,
}

impl WedgeSymbol {
    /// `None` if the indices are not strictly increasing and positive, or chi is trivial.
    pub fn new(base: Base, indices: Vec<u32>, sign: i8) -> Option<WedgeSymbol> {
        let sorted = indices.windows(2).all(|w| w[0] < w[1]);
        let positive = indices.first().map_or(true, |&i| i > 0);
        (sorted && positive && base.chi() != 0 && (sign == 1 || sign == -1)).then_some(WedgeSymbol { base, indices, sign })
    }

    pub fn plain(base: Base) -> WedgeSymbol {
        WedgeSymbol { base, indices: Vec::new(), sign: 1 }
    }

    pub fn parity(&self) -> u8 {
        (self.base.parity() + (self.indices.len() % 2) as u8) % 2
    }

    /// Label with the orientation forgotten.
    pub fn key(&self) -> (Base, Vec<u32>) {
        (self.base, self.indices.clone())
    }

    pub fn negated(&self) -> WedgeSymbol {
        WedgeSymbol { sign: -self.sign, ..self.clone() }
    }

    /// Appends t(m); m must exceed every index present.
    pub fn with_index(&self, m: u32) -> Option<WedgeSymbol> {
        let mut indices = self.indices.clone();
        indices.push(m);
        WedgeSymbol::new(self.base, indices, self.sign)
    }
}

/// Boundary of the level-m six-term sequence on a ledger symbol. Removing t(m)
/// costs (-1)^(number of indices after m); symbols without t(m) come from the
/// previous level and have zero boundary.
pub fn boundary(sym: &WedgeSymbol, m: u32) -> Option<WedgeSymbol> {
    let pos = sym.indices.iter().position(|&i| i == m)?;
    let mut indices = sym.indices.clone();
    indices.remove(pos);
    let after = sym.indices.len() - pos - 1;
    let sign = if after % 2 == 0 { sym.sign } else { -sym.sign };
    Some(WedgeSymbol { base: sym.base, indices, sign })
}

impl fmt::Display for WedgeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign < 0 {
            write!(f, "-")?;
        }
        match self.base {
            Base::W(j) => write!(f, "[w_chi{j}")?,
            Base::P(j) => write!(f, "[1.p_chi{j}")?,
        }
        for i in &self.indices {
            write!(f, ", t({i})")?;
        }
        write!(f, "]")
    }
}
