//! Finite abelian groups as ordered products of cyclic factors.
//!
//! A group is specified as `G = Z_{m1} x ... x Z_{mk}` with every factor
//! `m_i >= 2`. Elements are encoded as dense indices in `[0, N)`,
//! `N = m1 * ... * mk`, in mixed radix with the **first factor most
//! significant**: the tuple `(x1, ..., xk)` has index
//! `x1 * (m2*...*mk) + x2 * (m3*...*mk) + ... + xk`.
//!
//! On groups where every factor equals 2 ("boolean" groups, `G = Z_2^n`)
//! the index is the n-bit string read as an integer with the first
//! coordinate as the most significant bit, and addition is bitwise XOR.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Default cap on the order of groups for which dense length-`N` vectors
/// may be allocated. Transforms and indicator vectors are dense, so memory
/// is `O(N)`; the cap fails fast instead of thrashing. Callers with more
/// memory can use the `*_with_cap` entry points.
pub const DEFAULT_DENSE_CAP: u64 = 1 << 26;

/// A group element, identified by its mixed-radix index in `[0, N)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element(pub u64);

/// A finite abelian group `Z_{m1} x ... x Z_{mk}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    factors: Vec<u64>,
    order: u64,
    boolean: bool,
}

/// Errors from group construction, parsing, and the element codec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    /// The spec string does not match the grammar `Z2^<n> | Z(<m>) | <part>x<part>...`.
    Malformed(String),
    /// A cyclic factor below 2 was requested.
    ModulusTooSmall(u64),
    /// The product of the factors does not fit in 64 bits.
    OrderOverflow,
    /// An element index at or beyond the group order.
    IndexOutOfRange { index: u64, order: u64 },
    /// A coordinate tuple of the wrong length.
    CoordinateCount { got: usize, expected: usize },
    /// A coordinate at or beyond its factor's modulus.
    CoordinateOutOfRange { position: usize, value: u64, modulus: u64 },
    /// The group order exceeds the dense-vector cap.
    DenseCapExceeded { order: u64, cap: u64 },
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::Malformed(text) => write!(f, "malformed group spec `{text}`"),
            GroupError::ModulusTooSmall(m) => write!(f, "cyclic modulus {m} is below 2"),
            GroupError::OrderOverflow => write!(f, "group order overflows 64 bits"),
            GroupError::IndexOutOfRange { index, order } => {
                write!(f, "element index {index} out of range for group of order {order}")
            }
            GroupError::CoordinateCount { got, expected } => {
                write!(f, "coordinate tuple has {got} entries, group has {expected} factors")
            }
            GroupError::CoordinateOutOfRange { position, value, modulus } => {
                write!(f, "coordinate {value} at position {position} exceeds modulus {modulus}")
            }
            GroupError::DenseCapExceeded { order, cap } => {
                write!(f, "group order {order} exceeds dense-vector cap {cap}")
            }
        }
    }
}

impl core::error::Error for GroupError {}

impl GroupSpec {
    /// Builds a group from its cyclic factors, in the given order.
    pub fn new(factors: Vec<u64>) -> Result<Self, GroupError> {
        if factors.is_empty() {
            return Err(GroupError::Malformed(String::from("empty factor list")));
        }
        let mut order: u64 = 1;
        for &m in &factors {
            if m < 2 {
                return Err(GroupError::ModulusTooSmall(m));
            }
            order = order.checked_mul(m).ok_or(GroupError::OrderOverflow)?;
        }
        let boolean = factors.iter().all(|&m| m == 2);
        Ok(GroupSpec { factors, order, boolean })
    }

    /// Parses a group spec string: `Z2^<n>` (n >= 1), `Z(<m>)`, or a
    /// product of such parts joined by `x`, e.g. `Z(2)xZ(4)`.
    pub fn parse(text: &str) -> Result<Self, GroupError> {
        let malformed = || GroupError::Malformed(String::from(text));
        let mut factors = Vec::new();
        for part in text.split('x') {
            if let Some(exp) = part.strip_prefix("Z2^") {
                let n: u32 = exp.parse().map_err(|_| malformed())?;
                if n == 0 || n > 63 {
                    return Err(malformed());
                }
                factors.extend(core::iter::repeat(2).take(n as usize));
            } else if let Some(inner) = part.strip_prefix("Z(").and_then(|p| p.strip_suffix(')')) {
                let m: u64 = inner.parse().map_err(|_| malformed())?;
                if m < 2 {
                    return Err(GroupError::ModulusTooSmall(m));
                }
                factors.push(m);
            } else {
                return Err(malformed());
            }
        }
        GroupSpec::new(factors)
    }

    /// The cyclic moduli, first factor most significant in the encoding.
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    /// The group order `N`.
    pub fn order(&self) -> u64 {
        self.order
    }

    /// True iff every factor equals 2 (`G = Z_2^n`).
    pub fn is_boolean(&self) -> bool {
        self.boolean
    }

    /// The identity element.
    pub const fn identity() -> Element {
        Element(0)
    }

    /// True iff `x` is a valid element of this group.
    pub fn contains(&self, x: Element) -> bool {
        x.0 < self.order
    }

    /// Boundary validation for indices arriving from files or flags.
    pub fn check_element(&self, index: u64) -> Result<Element, GroupError> {
        if index < self.order {
            Ok(Element(index))
        } else {
            Err(GroupError::IndexOutOfRange { index, order: self.order })
        }
    }

    /// The group order as a dense vector length, under the default cap.
    pub fn dense_len(&self) -> Result<usize, GroupError> {
        self.dense_len_with_cap(DEFAULT_DENSE_CAP)
    }

    /// The group order as a dense vector length, under a caller-chosen cap.
    pub fn dense_len_with_cap(&self, cap: u64) -> Result<usize, GroupError> {
        if self.order <= cap {
            Ok(self.order as usize)
        } else {
            Err(GroupError::DenseCapExceeded { order: self.order, cap })
        }
    }

    /// Iterates all elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        (0..self.order).map(Element)
    }

    /// Componentwise sum `x + y` (bitwise XOR on boolean groups).
    ///
    /// Panics if either index is out of range.
    pub fn add(&self, x: Element, y: Element) -> Element {
        self.assert_member(x);
        self.assert_member(y);
        if self.boolean {
            return Element(x.0 ^ y.0);
        }
        let mut out = 0;
        let mut xr = x.0;
        let mut yr = y.0;
        let mut place = 1;
        for &m in self.factors.iter().rev() {
            out += ((xr % m + yr % m) % m) * place;
            xr /= m;
            yr /= m;
            place *= m;
        }
        Element(out)
    }

    /// Componentwise negation `-x` (the identity map on boolean groups).
    ///
    /// Panics if the index is out of range.
    pub fn neg(&self, x: Element) -> Element {
        self.assert_member(x);
        if self.boolean {
            return x;
        }
        let mut out = 0;
        let mut xr = x.0;
        let mut place = 1;
        for &m in self.factors.iter().rev() {
            out += ((m - xr % m) % m) * place;
            xr /= m;
            place *= m;
        }
        Element(out)
    }

    /// `x - y`, i.e. `add(x, neg(y))`.
    pub fn sub(&self, x: Element, y: Element) -> Element {
        self.add(x, self.neg(y))
    }

    /// Decodes an index into its coordinate tuple `(x1, ..., xk)`.
    ///
    /// Panics if the index is out of range.
    pub fn decode(&self, x: Element) -> Vec<u64> {
        self.assert_member(x);
        let mut coords = alloc::vec![0; self.factors.len()];
        let mut rem = x.0;
        for (slot, &m) in coords.iter_mut().zip(&self.factors).rev() {
            *slot = rem % m;
            rem /= m;
        }
        coords
    }

    /// Encodes a coordinate tuple back into its index; inverse of [`decode`](Self::decode).
    pub fn encode(&self, coords: &[u64]) -> Result<Element, GroupError> {
        if coords.len() != self.factors.len() {
            return Err(GroupError::CoordinateCount {
                got: coords.len(),
                expected: self.factors.len(),
            });
        }
        let mut index = 0;
        for (position, (&c, &m)) in coords.iter().zip(&self.factors).enumerate() {
            if c >= m {
                return Err(GroupError::CoordinateOutOfRange { position, value: c, modulus: m });
            }
            index = index * m + c;
        }
        Ok(Element(index))
    }

    fn assert_member(&self, x: Element) {
        assert!(
            x.0 < self.order,
            "element index {} out of range for group of order {}",
            x.0,
            self.order
        );
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.boolean {
            return write!(f, "Z2^{}", self.factors.len());
        }
        for (i, m) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, "x")?;
            }
            write!(f, "Z({m})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_boolean_power() {
        let g = GroupSpec::parse("Z2^3").unwrap();
        assert_eq!(g.factors(), &[2, 2, 2]);
        assert_eq!(g.order(), 8);
        assert!(g.is_boolean());
    }

    #[test]
    fn parse_mixed_product() {
        let g = GroupSpec::parse("Z(2)xZ(4)").unwrap();
        assert_eq!(g.factors(), &[2, 4]);
        assert_eq!(g.order(), 8);
        assert!(!g.is_boolean());
    }

    #[test]
    fn parse_rejects_small_modulus() {
        assert_eq!(GroupSpec::parse("Z(0)"), Err(GroupError::ModulusTooSmall(0)));
        assert_eq!(GroupSpec::parse("Z(1)"), Err(GroupError::ModulusTooSmall(1)));
    }

    #[test]
    fn parse_rejects_garbage() {
        for bad in ["", "Z", "Z2^0", "Z2^", "Z()", "Z(4", "Z(2)y Z(4)", "z2^3", "Z(2)x"] {
            assert!(GroupSpec::parse(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn parse_rejects_order_overflow() {
        assert_eq!(
            GroupSpec::parse("Z(4294967296)xZ(4294967296)"),
            Err(GroupError::OrderOverflow)
        );
    }

    #[test]
    fn display_round_trips() {
        for text in ["Z2^3", "Z(2)xZ(4)", "Z(6)", "Z(3)xZ(5)xZ(7)"] {
            let g = GroupSpec::parse(text).unwrap();
            let shown = alloc::format!("{g}");
            assert_eq!(GroupSpec::parse(&shown).unwrap(), g);
        }
        // A lone Z(2) is boolean and canonicalizes to the power form.
        assert_eq!(alloc::format!("{}", GroupSpec::parse("Z(2)").unwrap()), "Z2^1");
    }

    #[test]
    fn add_is_xor_on_boolean_groups() {
        let g = GroupSpec::parse("Z2^3").unwrap();
        assert_eq!(g.add(Element(0b101), Element(0b011)), Element(0b110));
        let g = GroupSpec::parse("Z2^8").unwrap();
        for x in 0..256 {
            for y in 0..256 {
                assert_eq!(g.add(Element(x), Element(y)).0, x ^ y);
            }
        }
    }

    #[test]
    fn add_mixed_radix() {
        // 5 = (1,1), 7 = (1,3) in Z(2)xZ(4); sum = (0,0).
        let g = GroupSpec::parse("Z(2)xZ(4)").unwrap();
        assert_eq!(g.add(Element(5), Element(7)), Element(0));
    }

    #[test]
    fn neg_examples() {
        let g = GroupSpec::parse("Z2^3").unwrap();
        assert_eq!(g.neg(Element(5)), Element(5));
        let g = GroupSpec::parse("Z(2)xZ(4)").unwrap();
        assert_eq!(g.neg(Element(5)), Element(7));
    }

    #[test]
    fn decode_examples() {
        let g = GroupSpec::parse("Z(2)xZ(4)").unwrap();
        assert_eq!(g.decode(Element(7)), alloc::vec![1, 3]);
        let g = GroupSpec::parse("Z2^3").unwrap();
        assert_eq!(g.decode(Element(0b110)), alloc::vec![1, 1, 0]);
        assert_eq!(g.decode(Element(0)), alloc::vec![0, 0, 0]);
    }

    #[test]
    fn group_laws_exhaustive_small_orders() {
        for text in ["Z2^3", "Z(2)xZ(4)", "Z(6)", "Z(3)xZ(5)", "Z(60)", "Z2^6"] {
            let g = GroupSpec::parse(text).unwrap();
            assert!(g.order() <= 64);
            for x in g.elements() {
                assert_eq!(g.add(x, Element(0)), x, "{text}: identity");
                assert_eq!(g.add(x, g.neg(x)), Element(0), "{text}: inverse");
                for y in g.elements() {
                    assert_eq!(g.add(x, y), g.add(y, x), "{text}: commutativity");
                    for z in g.elements() {
                        assert_eq!(
                            g.add(g.add(x, y), z),
                            g.add(x, g.add(y, z)),
                            "{text}: associativity"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn codec_is_a_bijection() {
        for text in ["Z(2)xZ(4)", "Z(3)xZ(5)", "Z(12)", "Z2^5"] {
            let g = GroupSpec::parse(text).unwrap();
            for x in g.elements() {
                assert_eq!(g.encode(&g.decode(x)).unwrap(), x);
            }
        }
    }

    #[test]
    fn encode_validates() {
        let g = GroupSpec::parse("Z(2)xZ(4)").unwrap();
        assert!(matches!(g.encode(&[1]), Err(GroupError::CoordinateCount { .. })));
        assert!(matches!(
            g.encode(&[2, 0]),
            Err(GroupError::CoordinateOutOfRange { position: 0, .. })
        ));
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn add_panics_out_of_range() {
        let g = GroupSpec::parse("Z2^2").unwrap();
        g.add(Element(4), Element(0));
    }

    #[test]
    fn dense_cap_check() {
        let g = GroupSpec::parse("Z2^3").unwrap();
        assert_eq!(g.dense_len().unwrap(), 8);
        assert!(matches!(
            g.dense_len_with_cap(4),
            Err(GroupError::DenseCapExceeded { order: 8, cap: 4 })
        ));
    }
}
