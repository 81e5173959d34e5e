//! Finite groups stored as validated Cayley tables.

use std::collections::HashMap;

use crate::bitset::ElemSet;
use crate::error::{Error, Result};

/// Index of an element inside its group.
pub type Elem = usize;

pub const DEFAULT_ORDER_CAP: usize = 1024;

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<u32>,
    identity: Elem,
    inverse: Vec<u32>,
    names: Vec<String>,
    generators: Vec<Elem>,
    orders: Vec<u64>,
    exponent: u64,
}

impl FiniteGroup {
    /// Builds a group from an explicit Cayley table and checks every group axiom,
    /// including associativity over all triples.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidTable("empty table".into()));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidTable(format!("row {i} has length {}", row.len())));
            }
            let mut seen = vec![false; n];
            for &x in row {
                if x >= n || std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(format!("row {i} is not a permutation")));
                }
                flat.push(x as u32);
            }
        }
        for j in 0..n {
            let mut seen = vec![false; n];
            for i in 0..n {
                let x = flat[i * n + j] as usize;
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidTable(format!("column {j} is not a permutation")));
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| flat[e * n + x] as usize == x && flat[x * n + e] as usize == x))
            .ok_or_else(|| Error::InvalidTable("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                let ab = flat[a * n + b] as usize;
                for c in 0..n {
                    let lhs = flat[ab * n + c];
                    let rhs = flat[a * n + flat[b * n + c] as usize];
                    if lhs != rhs {
                        return Err(Error::InvalidTable(format!("associativity fails at ({a}, {b}, {c})")));
                    }
                }
            }
        }
        let names = match names {
            Some(v) if v.len() == n => v,
            Some(v) => return Err(Error::InvalidTable(format!("{} names for {} elements", v.len(), n))),
            None => (0..n).map(|i| if i == identity { "1".to_string() } else { format!("g{i}") }).collect(),
        };
        check_names(&names)?;
        Ok(Self::assemble(n, flat, identity, names, None))
    }

    /// Builds a group from a multiplication rule that is known to be a group law.
    /// Only the Latin-square property is checked.
    pub(crate) fn from_law(
        n: usize,
        names: Vec<String>,
        generators: Vec<Elem>,
        identity: Elem,
        law: impl Fn(Elem, Elem) -> Elem,
    ) -> Self {
        let mut flat = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                flat.push(law(a, b) as u32);
            }
        }
        debug_assert!(names.len() == n);
        Self::assemble(n, flat, identity, names, Some(generators))
    }

    fn assemble(n: usize, table: Vec<u32>, identity: Elem, names: Vec<String>, generators: Option<Vec<Elem>>) -> Self {
        let mut inverse = vec![0u32; n];
        for a in 0..n {
            let inv = (0..n).find(|&b| table[a * n + b] as usize == identity).expect("Latin square has inverses");
            inverse[a] = inv as u32;
        }
        let mut g = FiniteGroup {
            order: n,
            table,
            identity,
            inverse,
            names,
            generators: Vec::new(),
            orders: vec![0; n],
            exponent: 1,
        };
        for a in 0..n {
            let mut k = 1u64;
            let mut x = a;
            while x != identity {
                x = g.mul(x, a);
                k += 1;
            }
            g.orders[a] = k;
        }
        g.exponent = g.orders.iter().fold(1u64, |acc, &o| lcm(acc, o));
        g.generators = match generators {
            Some(gens) => gens,
            None => g.greedy_generators(),
        };
        g
    }

    fn greedy_generators(&self) -> Vec<Elem> {
        let mut gens = Vec::new();
        let mut span = ElemSet::from_iter(self.order, [self.identity]);
        let mut elems = vec![self.identity];
        // Prefer high-order elements so that cyclic groups get one generator.
        let mut candidates: Vec<Elem> = (0..self.order).collect();
        candidates.sort_by_key(|&a| std::cmp::Reverse(self.orders[a]));
        for a in candidates {
            if span.contains(a) {
                continue;
            }
            gens.push(a);
            close_under(self, &mut span, &mut elems, &gens);
        }
        gens
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn identity(&self) -> Elem {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        self.table[a * self.order + b] as Elem
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.inverse[a] as Elem
    }

    /// `a^k` for any integer `k`.
    pub fn pow(&self, a: Elem, k: i64) -> Elem {
        let o = self.orders[a] as i64;
        let mut e = k.rem_euclid(o);
        let mut base = a;
        let mut acc = self.identity;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `[a, b] = a b a^-1 b^-1`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(ab, self.inv(ba))
    }

    pub fn conjugate(&self, g: Elem, a: Elem) -> Elem {
        self.mul(self.mul(g, a), self.inv(g))
    }

    pub fn element_order(&self, a: Elem) -> u64 {
        self.orders[a]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, a: Elem) -> &str {
        &self.names[a]
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.order
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|&a| self.generators.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// The full Cayley table as nested rows.
    pub fn table(&self) -> Vec<Vec<usize>> {
        (0..self.order).map(|a| (0..self.order).map(|b| self.mul(a, b)).collect()).collect()
    }

    pub fn find_name(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name)
    }

    /// Resolves an element token: `#i` for an index, an exact element name, or a
    /// word `f1*f2*...` whose factors are names optionally raised to an integer power.
    pub fn parse_element(&self, token: &str) -> Result<Elem> {
        let token = token.trim();
        if let Some(idx) = token.strip_prefix('#') {
            let i: usize = idx.parse().map_err(|_| Error::Parse(format!("bad element index {token:?}")))?;
            if i >= self.order {
                return Err(Error::Parse(format!("element index {i} out of range")));
            }
            return Ok(i);
        }
        if let Some(e) = self.find_name(token) {
            return Ok(e);
        }
        let mut acc = self.identity;
        for factor in token.split('*') {
            let factor = factor.trim();
            let e = if let Some(e) = self.find_name(factor) {
                e
            } else if let Some((base, exp)) = factor.rsplit_once('^') {
                let b = self.find_name(base).ok_or_else(|| Error::Parse(format!("unknown element {base:?}")))?;
                let k: i64 = exp.parse().map_err(|_| Error::Parse(format!("bad exponent in {factor:?}")))?;
                self.pow(b, k)
            } else {
                return Err(Error::Parse(format!("unknown element {factor:?}")));
            };
            acc = self.mul(acc, e);
        }
        Ok(acc)
    }

    /// Parses a comma separated list of element tokens; the empty string is the empty list.
    pub fn parse_elements(&self, list: &str) -> Result<Vec<Elem>> {
        list.split(',').map(str::trim).filter(|t| !t.is_empty()).map(|t| self.parse_element(t)).collect()
    }
}

fn check_names(names: &[String]) -> Result<()> {
    let mut seen = HashMap::new();
    for (i, n) in names.iter().enumerate() {
        if n.is_empty() || n.contains(',') {
            return Err(Error::InvalidTable(format!("element name {n:?} is not usable")));
        }
        if let Some(j) = seen.insert(n.as_str(), i) {
            return Err(Error::InvalidTable(format!("elements {j} and {i} share name {n:?}")));
        }
    }
    Ok(())
}

/// Extends `span` (with element list `elems`) to the subgroup generated by it and `gens`.
pub(crate) fn close_under(g: &FiniteGroup, span: &mut ElemSet, elems: &mut Vec<Elem>, gens: &[Elem]) {
    let mut i = 0;
    while i < elems.len() {
        let x = elems[i];
        for &s in gens {
            let y = g.mul(x, s);
            if span.insert(y) {
                elems.push(y);
            }
        }
        i += 1;
    }
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c3_table() -> Vec<Vec<usize>> {
        (0..3).map(|a| (0..3).map(|b| (a + b) % 3).collect()).collect()
    }

    #[test]
    fn table_ingestion_validates() {
        let g = FiniteGroup::from_table(c3_table(), None).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.exponent(), 3);
        assert!(g.is_abelian());
        assert_eq!(g.generators().len(), 1);

        let mut bad = c3_table();
        bad[1][1] = 1;
        assert!(matches!(FiniteGroup::from_table(bad, None), Err(Error::InvalidTable(_))));
    }

    #[test]
    fn non_associative_latin_square_rejected() {
        // Loop of order 5 that is a Latin square with identity 0 but not associative.
        let t = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        let err = FiniteGroup::from_table(t, None).unwrap_err();
        assert!(err.to_string().contains("associativity"), "{err}");
    }

    #[test]
    fn element_words() {
        let names = vec!["1".to_string(), "x".to_string(), "x^2".to_string()];
        let g = FiniteGroup::from_table(c3_table(), Some(names)).unwrap();
        assert_eq!(g.parse_element("x*x").unwrap(), 2);
        assert_eq!(g.parse_element("x^-1").unwrap(), 2);
        assert_eq!(g.parse_element("#1").unwrap(), 1);
        assert!(g.parse_element("zzz").is_err());
        assert_eq!(g.parse_elements("").unwrap(), Vec::<Elem>::new());
        assert_eq!(g.parse_elements("x, x^2").unwrap(), vec![1, 2]);
    }
}
