//! Dependency expressions: XOR sums of measurement result bits.

use std::collections::BTreeSet;
use std::fmt;

/// Label of the result bit produced by measuring `qubit`.
pub fn result_bit(qubit: &str) -> String {
    format!("s[{qubit}]")
}

/// Inverse of [`result_bit`].
pub fn bit_qubit(bit: &str) -> Option<&str> {
    bit.strip_prefix("s[").and_then(|b| b.strip_suffix(']'))
}

/// A sum over GF(2) of result bits; the empty set is the constant 0.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DepExpr {
    bits: BTreeSet<String>,
}

impl DepExpr {
    pub fn new() -> DepExpr {
        DepExpr::default()
    }

    /// Builds the XOR of the given bits; repeated bits cancel.
    pub fn from_bits<I, S>(bits: I) -> DepExpr
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut d = DepExpr::new();
        for b in bits {
            d.toggle(b.into());
        }
        d
    }

    /// The single result bit of `qubit`.
    pub fn of(qubit: &str) -> DepExpr {
        DepExpr::from_bits([result_bit(qubit)])
    }

    pub fn toggle(&mut self, bit: String) {
        if !self.bits.remove(&bit) {
            self.bits.insert(bit);
        }
    }

    pub fn xor(&self, other: &DepExpr) -> DepExpr {
        DepExpr {
            bits: self.bits.symmetric_difference(&other.bits).cloned().collect(),
        }
    }

    pub fn xor_assign(&mut self, other: &DepExpr) {
        for b in &other.bits {
            self.toggle(b.clone());
        }
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn contains(&self, bit: &str) -> bool {
        self.bits.contains(bit)
    }

    pub fn bits(&self) -> &BTreeSet<String> {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    /// Qubits whose results appear in this expression.
    pub fn qubits(&self) -> BTreeSet<String> {
        self.bits.iter().filter_map(|b| bit_qubit(b).map(str::to_owned)).collect()
    }

    pub fn eval(&self, value: impl Fn(&str) -> bool) -> bool {
        self.bits.iter().fold(false, |acc, b| acc ^ value(b))
    }
}

impl fmt::Display for DepExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bits.is_empty() {
            return write!(f, "0");
        }
        let v: Vec<&str> = self.bits.iter().map(String::as_str).collect();
        write!(f, "{}", v.join("+"))
    }
}
