//! Group specifications: built-in families, permutation generators, explicit tables
//! and direct products.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::{Elem, FiniteGroup, DEFAULT_ORDER_CAP};
use crate::subgroup::Subgroup;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GroupSpec {
    Table {
        order: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
    Perms {
        perm_gens: Vec<String>,
    },
    #[serde(with = "family_string")]
    Family(Family),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Family {
    Cyclic(u64),
    Dihedral(u64),
    Quaternion(u64),
    Class2 { p: u64, s: u32 },
    ElementaryAbelian { p: u64, k: u32 },
    Symmetric(u32),
    Alternating(u32),
    Product(Vec<Family>),
}

mod family_string {
    use super::Family;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(f: &Family, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&f.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Family, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "cyclic:{n}"),
            Family::Dihedral(n) => write!(f, "dihedral:{n}"),
            Family::Quaternion(n) => write!(f, "quaternion:{n}"),
            Family::Class2 { p, s } => write!(f, "class2:{p},{s}"),
            Family::ElementaryAbelian { p, k } => write!(f, "elementary-abelian:{p},{k}"),
            Family::Symmetric(n) => write!(f, "symmetric:{n}"),
            Family::Alternating(n) => write!(f, "alternating:{n}"),
            Family::Product(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(['x', '×']).map(str::trim).collect();
        if parts.len() > 1 {
            return parts.iter().map(|p| p.parse()).collect::<Result<Vec<_>>>().map(Family::Product);
        }
        let s = s.trim();
        let (tag, args) =
            s.split_once(':').ok_or_else(|| Error::Parse(format!("family {s:?} lacks ':' parameters")))?;
        let nums: Vec<u64> = args
            .split(',')
            .map(|a| a.trim().parse::<u64>().map_err(|_| Error::Parse(format!("bad parameter {a:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        let arity = |k: usize| {
            if nums.len() == k {
                Ok(())
            } else {
                Err(Error::Parse(format!("{tag} expects {k} parameter(s)")))
            }
        };
        let fam = match tag {
            "cyclic" | "C" => {
                arity(1)?;
                Family::Cyclic(nums[0])
            }
            "dihedral" | "D" => {
                arity(1)?;
                Family::Dihedral(nums[0])
            }
            "quaternion" | "Q" => {
                arity(1)?;
                Family::Quaternion(nums[0])
            }
            "class2" => {
                arity(2)?;
                Family::Class2 { p: nums[0], s: nums[1] as u32 }
            }
            "elementary-abelian" | "elem" => {
                arity(2)?;
                Family::ElementaryAbelian { p: nums[0], k: nums[1] as u32 }
            }
            "symmetric" | "S" => {
                arity(1)?;
                Family::Symmetric(nums[0] as u32)
            }
            "alternating" | "A" => {
                arity(1)?;
                Family::Alternating(nums[0] as u32)
            }
            _ => return Err(Error::Parse(format!("unknown group family {tag:?}"))),
        };
        Ok(fam)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(fam) => write!(f, "{fam}"),
            GroupSpec::Table { order, .. } => write!(f, "table:{order}"),
            GroupSpec::Perms { perm_gens } => write!(f, "perms:{}", perm_gens.join(";")),
        }
    }
}

impl std::str::FromStr for GroupSpec {
    type Err = Error;

    /// Accepts family strings or an inline JSON object.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.starts_with('{') {
            serde_json::from_str(t).map_err(|e| Error::Parse(format!("group JSON: {e}")))
        } else {
            t.parse().map(GroupSpec::Family)
        }
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Family {
    fn order(&self) -> Option<u128> {
        let o: u128 = match self {
            Family::Cyclic(n) => *n as u128,
            Family::Dihedral(n) => 2 * *n as u128,
            Family::Quaternion(n) => *n as u128,
            Family::Class2 { p, s } => (*p as u128).checked_pow(3 * (s + 1))?,
            Family::ElementaryAbelian { p, k } => (*p as u128).checked_pow(*k)?,
            Family::Symmetric(n) => (1..=*n as u128).product(),
            Family::Alternating(n) => ((1..=*n as u128).product::<u128>() / 2).max(1),
            Family::Product(parts) => {
                let mut acc: u128 = 1;
                for p in parts {
                    acc = acc.checked_mul(p.order()?)?;
                }
                acc
            }
        };
        Some(o)
    }

    fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::BadFamily(m));
        match self {
            Family::Cyclic(n) if *n == 0 => bad("cyclic:n needs n >= 1".into()),
            Family::Dihedral(n) if *n == 0 => bad("dihedral:n needs n >= 1".into()),
            Family::Quaternion(n) if *n < 8 || n % 4 != 0 => {
                bad(format!("quaternion:{n} needs a multiple of 4 that is at least 8"))
            }
            Family::Class2 { p, s } if !is_prime(*p) || *s == 0 => {
                bad(format!("class2:{p},{s} needs p prime and s >= 1"))
            }
            Family::ElementaryAbelian { p, k } if !is_prime(*p) || *k == 0 => {
                bad(format!("elementary-abelian:{p},{k} needs p prime and k >= 1"))
            }
            Family::Symmetric(n) | Family::Alternating(n) if *n == 0 => {
                bad("permutation degree must be positive".into())
            }
            Family::Product(parts) => parts.iter().try_for_each(Family::validate),
            _ => Ok(()),
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<FiniteGroup> {
    build_group_with_cap(spec, DEFAULT_ORDER_CAP)
}

pub fn build_group_with_cap(spec: &GroupSpec, cap: usize) -> Result<FiniteGroup> {
    match spec {
        GroupSpec::Family(f) => {
            f.validate()?;
            let order = f.order().unwrap_or(u128::MAX);
            if order > cap as u128 {
                return Err(Error::OrderCap { order: order.min(usize::MAX as u128) as usize, cap });
            }
            Ok(build_family(f))
        }
        GroupSpec::Table { order, table, names } => {
            if *order != table.len() {
                return Err(Error::InvalidTable(format!("declared order {order} but table has {} rows", table.len())));
            }
            if *order > cap {
                return Err(Error::OrderCap { order: *order, cap });
            }
            FiniteGroup::from_table(table.clone(), names.clone())
        }
        GroupSpec::Perms { perm_gens } => {
            let perms = perm_gens.iter().map(|s| parse_cycles(s)).collect::<Result<Vec<_>>>()?;
            perm_group(&perms, cap)
        }
    }
}

fn build_family(f: &Family) -> FiniteGroup {
    match f {
        Family::Cyclic(n) => cyclic(*n as usize),
        Family::Dihedral(n) => dihedral(*n as usize),
        Family::Quaternion(n) => dicyclic(*n as usize),
        Family::Class2 { p, s } => class2(*p as usize, *s),
        Family::ElementaryAbelian { p, k } => {
            let parts = vec![Family::Cyclic(*p); *k as usize];
            let mut g = product(&parts.iter().map(build_family).collect::<Vec<_>>());
            if *k > 1 {
                g = rename_elementary(&g, *p as usize, *k as usize);
            }
            g
        }
        Family::Symmetric(n) => {
            let n = *n as usize;
            let mut gens = Vec::new();
            if n >= 2 {
                gens.push(cycle_perm(n, &[0, 1]));
            }
            if n >= 3 {
                gens.push(cycle_perm(n, &(0..n).collect::<Vec<_>>()));
            }
            perm_group_degree(n, &gens, usize::MAX).expect("symmetric group within cap")
        }
        Family::Alternating(n) => {
            let n = *n as usize;
            let gens: Vec<_> = (2..n).map(|k| cycle_perm(n, &[0, 1, k])).collect();
            perm_group_degree(n.max(1), &gens, usize::MAX).expect("alternating group within cap")
        }
        Family::Product(parts) => product(&parts.iter().map(build_family).collect::<Vec<_>>()),
    }
}

fn power_name(base: &str, k: usize) -> Option<String> {
    match k {
        0 => None,
        1 => Some(base.to_string()),
        _ => Some(format!("{base}^{k}")),
    }
}

fn word_name(parts: impl IntoIterator<Item = Option<String>>) -> String {
    let w: Vec<String> = parts.into_iter().flatten().collect();
    if w.is_empty() {
        "1".to_string()
    } else {
        w.join("*")
    }
}

fn cyclic(n: usize) -> FiniteGroup {
    let names = (0..n).map(|i| word_name([power_name("x", i)])).collect();
    let gens = if n > 1 { vec![1] } else { vec![] };
    FiniteGroup::from_law(n, names, gens, 0, |a, b| (a + b) % n)
}

/// Symmetries of the regular n-gon, elements `r^i s^j` stored at `i + n j`.
fn dihedral(n: usize) -> FiniteGroup {
    let names = (0..2 * n).map(|e| word_name([power_name("r", e % n), power_name("s", e / n)])).collect();
    let mut gens = Vec::new();
    if n > 1 {
        gens.push(1);
    }
    gens.push(n);
    FiniteGroup::from_law(2 * n, names, gens, 0, |a, b| {
        let (i, j) = (a % n, a / n);
        let (i2, j2) = (b % n, b / n);
        let i_new = if j == 0 { (i + i2) % n } else { (i + n - i2) % n };
        i_new + n * ((j + j2) % 2)
    })
}

/// Dicyclic group of order `n = 4k`: `a^{2k} = 1`, `b^2 = a^k`, `b a b^-1 = a^-1`.
/// For `n` a power of two this is the generalized quaternion group.
fn dicyclic(n: usize) -> FiniteGroup {
    let h = n / 2;
    let k = n / 4;
    let names = (0..n).map(|e| word_name([power_name("a", e % h), power_name("b", e / h)])).collect();
    FiniteGroup::from_law(n, names, vec![1, h], 0, |x, y| {
        let (i, j) = (x % h, x / h);
        let (i2, j2) = (y % h, y / h);
        // a^i b^j a^i2 b^j2 = a^(i ± i2) b^(j + j2)
        let mut e = if j == 0 { (i + i2) % h } else { (i + h - i2) % h };
        let mut f = j + j2;
        if f == 2 {
            e = (e + k) % h;
            f = 0;
        }
        e + h * f
    })
}

/// The class-two group `<x, y | x^q = y^q = 1, [x, y] central>` with `q = p^(s+1)`.
/// Elements `x^i y^j c^k` (c = [x, y]) are stored at `i + q j + q^2 k` and multiply by
/// `(i, j, k)(i', j', k') = (i + i', j + j', k + k' - j i')`, using `y^j x^i' = x^i' y^j c^(-j i')`.
fn class2(p: usize, s: u32) -> FiniteGroup {
    let q = p.pow(s + 1);
    let n = q * q * q;
    let split = |e: usize| (e % q, (e / q) % q, e / (q * q));
    let names = (0..n)
        .map(|e| {
            let (i, j, k) = split(e);
            word_name([power_name("x", i), power_name("y", j), power_name("c", k)])
        })
        .collect();
    FiniteGroup::from_law(n, names, vec![1, q], 0, move |a, b| {
        let (i, j, k) = split(a);
        let (i2, j2, k2) = split(b);
        let i3 = (i + i2) % q;
        let j3 = (j + j2) % q;
        let k3 = (k + k2 + q * q - (j * i2) % q) % q;
        i3 + q * j3 + q * q * k3
    })
}

/// Direct product with component names joined by '.'.
pub fn product(parts: &[FiniteGroup]) -> FiniteGroup {
    let sizes: Vec<usize> = parts.iter().map(FiniteGroup::order).collect();
    let n: usize = sizes.iter().product();
    let decompose = |mut e: usize| {
        let mut out = Vec::with_capacity(sizes.len());
        for &s in &sizes {
            out.push(e % s);
            e /= s;
        }
        out
    };
    let compose = |coords: &[usize]| {
        let mut e = 0;
        for (c, s) in coords.iter().zip(&sizes).rev() {
            e = e * s + c;
        }
        e
    };
    let names = (0..n)
        .map(|e| {
            let c = decompose(e);
            if c.iter().zip(parts).all(|(&x, g)| x == g.identity()) {
                "1".to_string()
            } else {
                c.iter().zip(parts).map(|(&x, g)| g.name(x).to_string()).collect::<Vec<_>>().join(".")
            }
        })
        .collect();
    let mut gens = Vec::new();
    for (i, g) in parts.iter().enumerate() {
        for &s in g.generators() {
            let mut c: Vec<usize> = parts.iter().map(FiniteGroup::identity).collect();
            c[i] = s;
            gens.push(compose(&c));
        }
    }
    let identity = compose(&parts.iter().map(FiniteGroup::identity).collect::<Vec<_>>());
    FiniteGroup::from_law(n, names, gens, identity, |a, b| {
        let (ca, cb) = (decompose(a), decompose(b));
        let c: Vec<usize> = parts.iter().zip(ca.iter().zip(&cb)).map(|(g, (&x, &y))| g.mul(x, y)).collect();
        compose(&c)
    })
}

fn rename_elementary(g: &FiniteGroup, p: usize, k: usize) -> FiniteGroup {
    let names: Vec<String> = (0..g.order())
        .map(|mut e| {
            let mut parts = Vec::new();
            for i in 0..k {
                parts.push(power_name(&format!("e{}", i + 1), e % p));
                e /= p;
            }
            word_name(parts)
        })
        .collect();
    let gens = g.generators().to_vec();
    let h = g.clone();
    FiniteGroup::from_law(g.order(), names, gens, g.identity(), move |a, b| h.mul(a, b))
}

type Perm = Vec<u32>;

fn cycle_perm(n: usize, cycle: &[usize]) -> Perm {
    let mut p: Perm = (0..n as u32).collect();
    for w in 0..cycle.len() {
        p[cycle[w]] = cycle[(w + 1) % cycle.len()] as u32;
    }
    p
}

/// Parses cycle notation such as `(1 2 3)(4 5)` or `(1,2)`; returns (point image list).
fn parse_cycles(s: &str) -> Result<Vec<Vec<usize>>> {
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| Error::Parse(format!("bad cycle notation {s:?}")))?;
        let close = open.find(')').ok_or_else(|| Error::Parse(format!("unclosed cycle in {s:?}")))?;
        let cyc: Vec<usize> = open[..close]
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse().map_err(|_| Error::Parse(format!("bad point {t:?} in {s:?}"))))
            .collect::<Result<_>>()?;
        let mut seen = std::collections::HashSet::new();
        if !cyc.iter().all(|x| seen.insert(*x)) {
            return Err(Error::Parse(format!("repeated point in cycle of {s:?}")));
        }
        cycles.push(cyc);
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

fn perm_group(cycles: &[Vec<Vec<usize>>], cap: usize) -> Result<FiniteGroup> {
    let degree = cycles.iter().flatten().flatten().map(|&x| x + 1).max().unwrap_or(1);
    let mut gens = Vec::new();
    for gen in cycles {
        let mut p: Perm = (0..degree as u32).collect();
        let mut moved = vec![false; degree];
        for cyc in gen {
            for w in 0..cyc.len() {
                if std::mem::replace(&mut moved[cyc[w]], true) {
                    return Err(Error::Parse("cycles of one permutation must be disjoint".into()));
                }
                p[cyc[w]] = cyc[(w + 1) % cyc.len()] as u32;
            }
        }
        gens.push(p);
    }
    perm_group_degree(degree, &gens, cap)
}

fn perm_group_degree(degree: usize, gens: &[Perm], cap: usize) -> Result<FiniteGroup> {
    let id: Perm = (0..degree as u32).collect();
    // (a * b)(x) = a(b(x))
    let compose = |a: &Perm, b: &Perm| -> Perm { b.iter().map(|&x| a[x as usize]).collect() };
    let mut elems = vec![id.clone()];
    let mut index: HashMap<Perm, usize> = HashMap::from([(id, 0)]);
    let mut i = 0;
    while i < elems.len() {
        for g in gens {
            let y = compose(&elems[i], g);
            if !index.contains_key(&y) {
                if elems.len() >= cap {
                    return Err(Error::OrderCap { order: elems.len() + 1, cap });
                }
                index.insert(y.clone(), elems.len());
                elems.push(y);
            }
        }
        i += 1;
    }
    let n = elems.len();
    let gen_idx: Vec<Elem> = gens.iter().map(|g| index[g]).filter(|&e| e != 0).collect();
    let letters = "abcdefghijklmnopqrstuvw";
    let mut names: Vec<String> = (0..n).map(|e| format!("g{e}")).collect();
    names[0] = "1".into();
    let mut named = std::collections::HashSet::new();
    for (k, &e) in gen_idx.iter().enumerate() {
        if k < letters.len() && named.insert(e) {
            names[e] = letters[k..k + 1].to_string();
        }
    }
    let mut table = vec![0usize; n * n];
    for a in 0..n {
        for b in 0..n {
            table[a * n + b] = index[&compose(&elems[a], &elems[b])];
        }
    }
    let mut dedup = gen_idx.clone();
    dedup.dedup();
    Ok(FiniteGroup::from_law(n, names, dedup, 0, |a, b| table[a * n + b]))
}

/// The group, subgroup and element of the class-two counterexample family:
/// `G = class2:p,s`, `K = <x^(p^r), y^(p^s), [x, y]>`, `z = [x, y]^(p^s)`.
pub fn class2_counterexample(p: u64, r: u32, s: u32, cap: usize) -> Result<(FiniteGroup, Subgroup, Elem)> {
    if !is_prime(p) || r == 0 || r > s {
        return Err(Error::BadFamily(format!("need p prime and 0 < r <= s, got p={p} r={r} s={s}")));
    }
    let g = build_group_with_cap(&GroupSpec::Family(Family::Class2 { p, s }), cap)?;
    let x = g.find_name("x").expect("class2 names x");
    let y = g.find_name("y").expect("class2 names y");
    let c = g.commutator(x, y);
    let pr = p.pow(r) as i64;
    let ps = p.pow(s) as i64;
    let k = Subgroup::generated(&g, &[g.pow(x, pr), g.pow(y, ps), c]);
    let z = g.pow(c, ps);
    Ok((g, k, z))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fam(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    fn assert_group_axioms(g: &FiniteGroup) {
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), g.identity());
            assert_eq!(g.mul(g.identity(), a), a);
            for b in g.elements() {
                for c in g.elements() {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
        let closure = Subgroup::generated(g, g.generators());
        assert_eq!(closure.order(), g.order(), "generators must generate");
    }

    #[test]
    fn families_are_groups() {
        for s in [
            "cyclic:4",
            "cyclic:1",
            "dihedral:4",
            "dihedral:3",
            "quaternion:8",
            "quaternion:12",
            "elementary-abelian:2,3",
            "class2:2,1",
            "symmetric:3",
            "alternating:4",
            "cyclic:2xcyclic:2",
            "quaternion:8xcyclic:2",
        ] {
            let g = fam(s);
            assert_group_axioms(&g);
        }
    }

    #[test]
    fn family_orders() {
        assert_eq!(fam("cyclic:4").order(), 4);
        assert!(fam("cyclic:4").is_abelian());
        assert_eq!(fam("class2:2,1").order(), 64);
        let v4 = fam("cyclic:2xcyclic:2");
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.exponent(), 2);
        assert_eq!(fam("dihedral:4").order(), 8);
        assert!(!fam("dihedral:4").is_abelian());
        assert_eq!(fam("quaternion:16").order(), 16);
        assert_eq!(fam("symmetric:4").order(), 24);
        assert_eq!(fam("alternating:4").order(), 12);
    }

    #[test]
    fn quaternion_has_unique_involution() {
        let q = fam("quaternion:8");
        let involutions = q.elements().filter(|&a| q.element_order(a) == 2).count();
        assert_eq!(involutions, 1);
        assert_eq!(q.exponent(), 4);
    }

    #[test]
    fn class2_cocycle_matches_presentation() {
        let g = fam("class2:2,1");
        let x = g.find_name("x").unwrap();
        let y = g.find_name("y").unwrap();
        let c = g.find_name("c").unwrap();
        assert_eq!(g.commutator(x, y), c);
        assert_eq!(g.pow(x, 4), g.identity());
        assert_eq!(g.pow(y, 4), g.identity());
        assert_eq!(g.element_order(c), 4);
        assert_eq!(g.commutator(x, c), g.identity());
        assert_eq!(g.commutator(y, c), g.identity());
        // every element is x^i y^j c^k under its name
        for e in g.elements() {
            assert_eq!(g.parse_element(g.name(e)).unwrap(), e);
        }
        assert_eq!(g.parse_element("y*x").unwrap(), g.parse_element("x*y*c^3").unwrap());
    }

    #[test]
    fn order_cap_and_bad_parameters() {
        let big: GroupSpec = "class2:3,1".parse().unwrap();
        assert!(matches!(build_group_with_cap(&big, 256), Err(Error::OrderCap { order: 729, cap: 256 })));
        assert!(matches!(build_group(&"cyclic:0".parse().unwrap()), Err(Error::BadFamily(_))));
        assert!(matches!(build_group(&"class2:4,1".parse().unwrap()), Err(Error::BadFamily(_))));
        assert!("mystery:3".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn json_ingestion() {
        let t: GroupSpec = r#"{"order": 2, "table": [[0,1],[1,0]], "names": ["e","t"]}"#.parse().unwrap();
        let g = build_group(&t).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.identity(), 0);
        assert_eq!(g.name(1), "t");

        let p: GroupSpec = r#"{"perm_gens": ["(0 1 2)", "(0 1)"]}"#.parse().unwrap();
        let s3 = build_group(&p).unwrap();
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        assert_eq!(s3.parse_element("a^3").unwrap(), s3.identity());

        let bad: GroupSpec = r#"{"perm_gens": ["(0 1)(1 2)"]}"#.parse().unwrap();
        assert!(build_group(&bad).is_err());
    }

    #[test]
    fn class2_counterexample_data() {
        let (g, k, z) = class2_counterexample(2, 1, 1, DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), 64);
        assert_eq!(k.order(), 16);
        assert_ne!(z, g.identity());
        assert_eq!(z, g.parse_element("c^2").unwrap());
        let y = g.find_name("y").unwrap();
        let x = g.find_name("x").unwrap();
        assert_eq!(z, g.commutator(x, g.pow(y, 2)));
        assert!(class2_counterexample(2, 2, 1, DEFAULT_ORDER_CAP).is_err());
    }
}
