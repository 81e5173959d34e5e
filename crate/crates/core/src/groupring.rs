//! Linear algebra inside the group algebra `R(G)` for `R = Z` or `Z/m`.
//!
//! Elements are coefficient vectors indexed by group elements. A [`RModuleSpan`] is an
//! `R`-submodule kept in canonical echelon form, so two spans are equal exactly when
//! their canonical rows are. Integer work runs on machine words and is redone with big
//! integers when a coefficient overflows.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::bitset::ElemSet;
use crate::coeff::Coeff;
use crate::echelon::Lattice;
use crate::error::{Error, Result};
use crate::families::is_prime;
use crate::group::{Elem, FiniteGroup};
use crate::subgroup::{NSeries, Subgroup};
use crate::FgAb;

/// Default bound on `|G|` for brute-force computations in the group ring.
pub const BRUTE_ORDER_CAP: usize = 256;

/// Coefficient ring data: `n_R` and, for each prime `p ∈ σ(R)`, the smallest `e(p)` with
/// `p^e R = p^{e+1} R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CoeffRing {
    Integers,
    Mod(u64),
    /// Formula evaluation only.
    Abstract {
        characteristic: u64,
        /// Listed primes of `σ(R)` with their `e(p)`.
        sigma: BTreeMap<u64, u32>,
        /// Every unlisted prime also lies in `σ(R)`, with `e(p) = 0` (as for fields of
        /// characteristic zero).
        all_primes: bool,
    },
}

impl CoeffRing {
    pub fn modulo(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::Parse(format!("Z/{m} is not a valid coefficient ring; need m >= 2")));
        }
        if m > i32::MAX as u64 {
            return Err(Error::Unsupported(format!("modulus {m} exceeds 2^31")));
        }
        Ok(CoeffRing::Mod(m))
    }

    /// `Z` for `m = 0`, `Z/m` otherwise.
    pub fn from_modulus(m: u64) -> Result<Self> {
        if m == 0 {
            Ok(CoeffRing::Integers)
        } else {
            Self::modulo(m)
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            CoeffRing::Integers => 0,
            CoeffRing::Mod(m) => *m,
            CoeffRing::Abstract { characteristic, .. } => *characteristic,
        }
    }

    /// The modulus for linear algebra: 0 for Z. Abstract rings have none.
    pub fn modulus(&self) -> Result<i64> {
        match self {
            CoeffRing::Integers => Ok(0),
            CoeffRing::Mod(m) => Ok(*m as i64),
            CoeffRing::Abstract { .. } => Err(Error::AbstractRing),
        }
    }

    pub fn is_concrete(&self) -> bool {
        !matches!(self, CoeffRing::Abstract { .. })
    }

    pub fn in_sigma(&self, p: u64) -> bool {
        match self {
            CoeffRing::Integers => false,
            CoeffRing::Mod(_) => true,
            CoeffRing::Abstract { sigma, all_primes, .. } => *all_primes || sigma.contains_key(&p),
        }
    }

    /// `e(p)` for `p ∈ σ(R)`.
    pub fn e(&self, p: u64) -> Option<u32> {
        if !self.in_sigma(p) {
            return None;
        }
        Some(match self {
            CoeffRing::Integers => unreachable!(),
            CoeffRing::Mod(m) => {
                let (mut m, mut e) = (*m, 0);
                while m % p == 0 {
                    m /= p;
                    e += 1;
                }
                e
            }
            CoeffRing::Abstract { sigma, .. } => sigma.get(&p).copied().unwrap_or(0),
        })
    }

    /// Primes of `σ(R)` dividing `n`.
    pub fn sigma_primes_dividing(&self, n: u64) -> Vec<u64> {
        (2..=n).filter(|&p| n.is_multiple_of(p) && is_prime(p) && self.in_sigma(p)).collect()
    }
}

impl fmt::Display for CoeffRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoeffRing::Integers => write!(f, "Z"),
            CoeffRing::Mod(m) => write!(f, "Z/{m}"),
            CoeffRing::Abstract { characteristic, sigma, all_primes } => {
                let mut s: Vec<String> = sigma.iter().map(|(p, e)| format!("{p}^{e}")).collect();
                if *all_primes {
                    s.push("*".into());
                }
                write!(f, "abstract:n={characteristic};sigma={}", s.join(","))
            }
        }
    }
}

impl FromStr for CoeffRing {
    type Err = Error;

    /// `Z`, `Z/m`, a bare modulus (`0` meaning Z), or
    /// `abstract:n=<char>;sigma=<p>^<e>,...[,*]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "Z" {
            return Ok(CoeffRing::Integers);
        }
        if let Some(m) = s.strip_prefix("Z/") {
            return Self::modulo(m.parse().map_err(|_| Error::Parse(format!("bad modulus in {s:?}")))?);
        }
        if let Ok(m) = s.parse::<u64>() {
            return Self::from_modulus(m);
        }
        if let Some(rest) = s.strip_prefix("abstract:") {
            let mut characteristic = 0;
            let mut sigma = BTreeMap::new();
            let mut all_primes = false;
            for part in rest.split(';') {
                let bad = || Error::Parse(format!("bad abstract ring {s:?}"));
                let (k, v) = part.split_once('=').ok_or_else(bad)?;
                match k.trim() {
                    "n" => characteristic = v.trim().parse().map_err(|_| bad())?,
                    "sigma" => {
                        for item in v.split(',').map(str::trim).filter(|i| !i.is_empty()) {
                            if item == "*" {
                                all_primes = true;
                                continue;
                            }
                            let (p, e) = item.split_once('^').unwrap_or((item, "0"));
                            let p: u64 = p.parse().map_err(|_| bad())?;
                            if !is_prime(p) {
                                return Err(bad());
                            }
                            sigma.insert(p, e.parse().map_err(|_| bad())?);
                        }
                    }
                    _ => return Err(bad()),
                }
            }
            return Ok(CoeffRing::Abstract { characteristic, sigma, all_primes });
        }
        Err(Error::Parse(format!("unknown coefficient ring {s:?}")))
    }
}

/// An element of `R(G)` as a coefficient vector indexed by group elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    pub coeffs: Vec<BigInt>,
}

impl RingElem {
    pub fn zero(n: usize) -> Self {
        RingElem { coeffs: vec![BigInt::from(0); n] }
    }

    pub fn from_i64(v: &[i64]) -> Self {
        RingElem { coeffs: v.iter().map(|&x| BigInt::from(x)).collect() }
    }

    /// The group element `g` itself.
    pub fn group_elem(g: &FiniteGroup, a: Elem) -> Self {
        let mut r = Self::zero(g.order());
        r.coeffs[a] += 1;
        r
    }

    /// `a - 1`.
    pub fn minus_one(g: &FiniteGroup, a: Elem) -> Self {
        let mut r = Self::group_elem(g, a);
        r.coeffs[g.identity()] -= 1;
        r
    }

    pub fn augmentation(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &RingElem) -> RingElem {
        RingElem { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &RingElem) -> RingElem {
        RingElem { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, g: &FiniteGroup, other: &RingElem) -> RingElem {
        mul_rows(g, &self.coeffs, &other.coeffs, &BigInt::from(0)).expect("big integers do not overflow").into()
    }

    /// Image in `R(Q)` under `proj: G → Q`.
    pub fn push_forward(&self, q_order: usize, proj: &[Elem]) -> RingElem {
        let mut coeffs = vec![BigInt::zero(); q_order];
        for (a, c) in self.coeffs.iter().enumerate() {
            coeffs[proj[a]] += c;
        }
        RingElem { coeffs }
    }

    pub fn reduce(&mut self, m: i64) {
        if m > 0 {
            let m = BigInt::from(m);
            for x in &mut self.coeffs {
                *x = x.rem_euclid(&m);
            }
        }
    }
}

impl From<Vec<BigInt>> for RingElem {
    fn from(coeffs: Vec<BigInt>) -> Self {
        RingElem { coeffs }
    }
}

fn reduce_row<T: Coeff>(v: &mut [T], m: &T) {
    if !m.is_zero() {
        for x in v.iter_mut() {
            *x = x.rem_euclid(m);
        }
    }
}

/// Product in the group ring.
fn mul_rows<T: Coeff>(g: &FiniteGroup, x: &[T], y: &[T], m: &T) -> Option<Vec<T>> {
    let mut out = vec![T::zero(); x.len()];
    let ys: Vec<(usize, &T)> = y.iter().enumerate().filter(|(_, c)| !c.is_zero()).collect();
    for (a, ca) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        for &(b, cb) in &ys {
            let ab = g.mul(a, b);
            out[ab] = out[ab].add_mul(ca, cb)?;
            if !m.is_zero() {
                out[ab] = out[ab].rem_euclid(m);
            }
        }
    }
    Some(out)
}

/// `a y`.
fn translate<T: Coeff>(g: &FiniteGroup, a: Elem, y: &[T]) -> Vec<T> {
    let mut out = vec![T::zero(); y.len()];
    for (b, c) in y.iter().enumerate() {
        if !c.is_zero() {
            out[g.mul(a, b)] = c.clone();
        }
    }
    out
}

/// `(a - 1) y`.
fn aug_times<T: Coeff>(g: &FiniteGroup, a: Elem, y: &[T], m: &T) -> Option<Vec<T>> {
    let mut out = translate(g, a, y);
    for (o, c) in out.iter_mut().zip(y) {
        *o = o.sub(c)?;
    }
    reduce_row(&mut out, m);
    Some(out)
}

#[derive(Clone, Debug)]
enum Store {
    Small(Lattice<i64>),
    Big(Lattice<BigInt>),
}

/// An `R`-submodule of `R(G)` in canonical form.
#[derive(Clone, Debug)]
pub struct RModuleSpan {
    n: usize,
    modulus: i64,
    store: Store,
}

/// A recipe for the generators of a span, replayable over any coefficient type.
enum Gen<'a> {
    Rows(&'a [RingElem]),
    Sum(&'a [&'a RModuleSpan]),
    /// Pairwise products of canonical rows.
    Product(&'a FiniteGroup, &'a RModuleSpan, &'a RModuleSpan),
    /// `(a - 1) x` for the listed `a` and the canonical rows `x`.
    AugLeft(&'a FiniteGroup, &'a [Elem], &'a RModuleSpan),
    /// `a x` for all `a ∈ G`.
    Translates(&'a FiniteGroup, &'a RModuleSpan),
}

impl Gen<'_> {
    fn feed<T: Coeff>(&self, lat: &mut Lattice<T>, m: &T) -> Option<()> {
        match self {
            Gen::Rows(rows) => {
                for r in rows.iter() {
                    let v: Option<Vec<T>> = r.coeffs.iter().map(T::from_bigint).collect();
                    let mut v = v?;
                    reduce_row(&mut v, m);
                    lat.insert(v)?;
                }
            }
            Gen::Sum(parts) => {
                for p in parts.iter() {
                    lat.extend(p.rows_as::<T>()?)?;
                }
            }
            Gen::Product(g, a, b) => {
                let (ra, rb) = (a.rows_as::<T>()?, b.rows_as::<T>()?);
                for x in &ra {
                    for y in &rb {
                        lat.insert(mul_rows(g, x, y, m)?)?;
                    }
                }
            }
            Gen::AugLeft(g, elems, b) => {
                let rb = b.rows_as::<T>()?;
                for &a in elems.iter() {
                    for y in &rb {
                        lat.insert(aug_times(g, a, y, m)?)?;
                    }
                }
            }
            Gen::Translates(g, b) => {
                let rb = b.rows_as::<T>()?;
                for a in g.elements() {
                    for y in &rb {
                        lat.insert(translate(g, a, y))?;
                    }
                }
            }
        }
        lat.canonicalize()
    }
}

impl RModuleSpan {
    fn build(n: usize, modulus: i64, gen: Gen<'_>) -> Self {
        let mut small = Lattice::new(vec![modulus; n]);
        if gen.feed(&mut small, &modulus).is_some() {
            return RModuleSpan { n, modulus, store: Store::Small(small) };
        }
        let m = BigInt::from(modulus);
        let mut big = Lattice::new(vec![m.clone(); n]);
        gen.feed(&mut big, &m).expect("big integers do not overflow");
        RModuleSpan { n, modulus, store: Store::Big(big) }
    }

    fn rows_as<T: Coeff>(&self) -> Option<Vec<Vec<T>>> {
        match &self.store {
            Store::Small(l) => Some(l.rows().map(|r| r.iter().map(|&x| T::from_i64(x)).collect()).collect()),
            Store::Big(l) => l.rows().map(|r| r.iter().map(T::from_bigint).collect()).collect(),
        }
    }

    fn big(&self) -> Lattice<BigInt> {
        match &self.store {
            Store::Small(l) => l.map_coeffs(|&x| BigInt::from(x)),
            Store::Big(l) => l.clone(),
        }
    }

    fn check(&self, other: &RModuleSpan) -> Result<()> {
        if self.n != other.n || self.modulus != other.modulus {
            return Err(Error::Mismatch(format!(
                "spans over R(G) with |G| = {} / {} and modulus {} / {}",
                self.n, other.n, self.modulus, other.modulus
            )));
        }
        Ok(())
    }

    pub fn zero(n: usize, ring: &CoeffRing) -> Result<Self> {
        Ok(Self::build(n, ring.modulus()?, Gen::Rows(&[])))
    }

    pub fn from_elems(g: &FiniteGroup, ring: &CoeffRing, elems: &[RingElem]) -> Result<Self> {
        if elems.iter().any(|e| e.coeffs.len() != g.order()) {
            return Err(Error::Mismatch("ring element length differs from |G|".into()));
        }
        Ok(Self::build(g.order(), ring.modulus()?, Gen::Rows(elems)))
    }

    /// The whole ring `R(G)`.
    pub fn whole(g: &FiniteGroup, ring: &CoeffRing) -> Result<Self> {
        let elems: Vec<RingElem> = g.elements().map(|a| RingElem::group_elem(g, a)).collect();
        Self::from_elems(g, ring, &elems)
    }

    /// `I_R(S)`: the span of `s - 1` over `s ∈ S`.
    pub fn augmentation_ideal(g: &FiniteGroup, s: &Subgroup, ring: &CoeffRing) -> Result<Self> {
        let elems: Vec<RingElem> = s.elements().into_iter().map(|a| RingElem::minus_one(g, a)).collect();
        Self::from_elems(g, ring, &elems)
    }

    /// `I^n_{R,N}(G)`, the two-sided ideal spanned by products `(a_1 - 1)...(a_r - 1)`
    /// with `a_i ∈ N_{k_i}` and `k_1 + ... + k_r >= n`.
    ///
    /// Built as `J_0 = R(G)`, `J_j = Σ_{k=1..j} (N_k - 1) J_{j-k}`. Each `J_j` is a
    /// two-sided ideal, so the generators of `N_k` suffice on the left.
    pub fn nseries_ideal_power(g: &FiniteGroup, series: &NSeries, n: usize, ring: &CoeffRing) -> Result<Self> {
        let mut powers = vec![Self::whole(g, ring)?];
        for j in 1..=n {
            let parts: Vec<RModuleSpan> = (1..=j)
                .map(|k| {
                    let gens = series.term(k).generators().to_vec();
                    Self::build(g.order(), powers[j - k].modulus, Gen::AugLeft(g, &gens, &powers[j - k]))
                })
                .collect();
            let refs: Vec<&RModuleSpan> = parts.iter().collect();
            powers.push(Self::sum(&refs)?);
        }
        Ok(powers.pop().expect("at least J_0"))
    }

    /// `I^n_R(G)`, plain powers of the augmentation ideal.
    pub fn augmentation_power(g: &FiniteGroup, n: usize, ring: &CoeffRing) -> Result<Self> {
        let ig = Self::augmentation_ideal(g, &Subgroup::whole(g), ring)?;
        let mut p = Self::whole(g, ring)?;
        for _ in 0..n {
            p = p.product(g, &ig)?;
        }
        Ok(p)
    }

    /// `A · B`, spanned by products of canonical rows.
    pub fn product(&self, g: &FiniteGroup, other: &RModuleSpan) -> Result<Self> {
        self.check(other)?;
        Ok(Self::build(self.n, self.modulus, Gen::Product(g, self, other)))
    }

    /// `Σ (a - 1) x` over the listed `a` and `x` in this span. This is `I(S) · M` when
    /// `elems` is all of `S`, or when `elems` generates `S` and `M` is a left ideal.
    pub fn aug_left(&self, g: &FiniteGroup, elems: &[Elem]) -> Self {
        Self::build(self.n, self.modulus, Gen::AugLeft(g, elems, self))
    }

    /// `R(G) · M`.
    pub fn left_translates(&self, g: &FiniteGroup) -> Self {
        Self::build(self.n, self.modulus, Gen::Translates(g, self))
    }

    pub fn sum(parts: &[&RModuleSpan]) -> Result<Self> {
        let first = parts.first().ok_or_else(|| Error::Mismatch("empty sum of spans".into()))?;
        for p in parts {
            first.check(p)?;
        }
        Ok(Self::build(first.n, first.modulus, Gen::Sum(parts)))
    }

    pub fn contains(&self, v: &RingElem) -> bool {
        if v.coeffs.len() != self.n {
            return false;
        }
        match &self.store {
            Store::Small(l) => {
                let w: Option<Vec<i64>> = v.coeffs.iter().map(i64::from_bigint).collect();
                if let Some(w) = w {
                    if let Some(ans) = l.contains(&w) {
                        return ans;
                    }
                }
                self.big().contains(&v.coeffs).expect("big integers do not overflow")
            }
            Store::Big(l) => l.contains(&v.coeffs).expect("big integers do not overflow"),
        }
    }

    pub fn is_subspan_of(&self, other: &RModuleSpan) -> bool {
        self.canonical_rows().iter().all(|r| other.contains(r))
    }

    pub fn canonical_rows(&self) -> Vec<RingElem> {
        self.big().rows().map(|r| RingElem::from(r.clone())).collect()
    }

    /// Number of canonical rows.
    pub fn num_rows(&self) -> usize {
        match &self.store {
            Store::Small(l) => l.num_rows(),
            Store::Big(l) => l.num_rows(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.num_rows() == 0
    }

    pub fn group_order(&self) -> usize {
        self.n
    }

    pub fn modulus(&self) -> i64 {
        self.modulus
    }

    /// The image under the ring map `R(G) → R(Q)` induced by `proj: G → Q`.
    pub fn push_forward(&self, q: &FiniteGroup, proj: &[Elem]) -> Result<Self> {
        if proj.len() != self.n {
            return Err(Error::Mismatch("projection length differs from |G|".into()));
        }
        let rows: Vec<RingElem> = self.canonical_rows().iter().map(|r| r.push_forward(q.order(), proj)).collect();
        Ok(Self::build(q.order(), self.modulus, Gen::Rows(&rows)))
    }

    /// `{v ∈ self : π(v) ∈ target}` for the ring map induced by `proj: G → Q`.
    ///
    /// Echelonizes `[π(v) | v]` stacked on `[t | 0]`; the rows whose leading block
    /// vanishes span the preimage.
    pub fn preimage(&self, proj: &[Elem], target: &RModuleSpan) -> Result<Self> {
        if proj.len() != self.n || target.modulus != self.modulus {
            return Err(Error::Mismatch("preimage along an incompatible projection".into()));
        }
        let nq = target.n;
        let m = BigInt::from(self.modulus);
        let mut lat = Lattice::new(vec![m.clone(); nq + self.n]);
        for r in self.canonical_rows() {
            let mut row = r.push_forward(nq, proj).coeffs;
            row.extend(r.coeffs);
            reduce_row(&mut row, &m);
            lat.insert(row).expect("big integers do not overflow");
        }
        for t in target.canonical_rows() {
            let mut row = t.coeffs;
            row.resize(nq + self.n, BigInt::zero());
            lat.insert(row).expect("big integers do not overflow");
        }
        lat.canonicalize().expect("big integers do not overflow");
        let rows: Vec<RingElem> = lat
            .rows()
            .filter(|r| r[..nq].iter().all(|x| x.is_zero()))
            .map(|r| RingElem::from(r[nq..].to_vec()))
            .collect();
        Ok(Self::build(self.n, self.modulus, Gen::Rows(&rows)))
    }

    /// `{g ∈ G : g - 1 ∈ span}`, which must be a subgroup.
    pub fn group_slice(&self, g: &FiniteGroup) -> Result<Subgroup> {
        let members =
            ElemSet::from_iter(g.order(), g.elements().filter(|&a| self.contains(&RingElem::minus_one(g, a))));
        Subgroup::from_members(g, members)
    }
}

impl PartialEq for RModuleSpan {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.modulus == other.modulus && self.big() == other.big()
    }
}

impl Eq for RModuleSpan {}

fn check_brute(g: &FiniteGroup, ring: &CoeffRing, cap: usize) -> Result<()> {
    ring.modulus()?;
    if g.order() > cap {
        return Err(Error::OrderCap { order: g.order(), cap });
    }
    Ok(())
}

/// `I_R(K) I_R(G) + I^n_{R,N}(G)`.
pub fn dimension_module(
    g: &FiniteGroup,
    k: &Subgroup,
    series: &NSeries,
    n: usize,
    ring: &CoeffRing,
) -> Result<RModuleSpan> {
    let ig = RModuleSpan::augmentation_ideal(g, &Subgroup::whole(g), ring)?;
    let kg = ig.aug_left(g, k.generators());
    let pow = RModuleSpan::nseries_ideal_power(g, series, n, ring)?;
    RModuleSpan::sum(&[&kg, &pow])
}

/// `D^N_{n,R}(G, K) = G ∩ (1 + I_R(K) I_R(G) + I^n_{R,N}(G))`.
pub fn dim_subgroup_brute(
    g: &FiniteGroup,
    k: &Subgroup,
    series: &NSeries,
    n: usize,
    ring: &CoeffRing,
) -> Result<Subgroup> {
    dim_subgroup_brute_capped(g, k, series, n, ring, BRUTE_ORDER_CAP)
}

pub fn dim_subgroup_brute_capped(
    g: &FiniteGroup,
    k: &Subgroup,
    series: &NSeries,
    n: usize,
    ring: &CoeffRing,
    cap: usize,
) -> Result<Subgroup> {
    check_brute(g, ring, cap)?;
    dimension_module(g, k, series, n, ring)?.group_slice(g)
}

/// The module whose slice is the `n`-th relative Fox subgroup:
///
/// * `n = 0`: `R(G) I(H)`;
/// * `n = 1`: `I(G) I(H)`;
/// * `n = 2`: `I(K) I(H) + I²(G) I(H)`, or `R(G) I(K) I(H) + I²(G) I(H)` with `rg_prefix`.
pub fn fox_module(
    g: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    n: usize,
    ring: &CoeffRing,
    rg_prefix: bool,
) -> Result<RModuleSpan> {
    let all: Vec<Elem> = g.elements().collect();
    let ih = RModuleSpan::augmentation_ideal(g, h, ring)?;
    match n {
        0 => Ok(ih.left_translates(g)),
        1 => Ok(ih.aug_left(g, &all)),
        2 => {
            let gh = ih.aug_left(g, &all);
            let ggh = gh.aug_left(g, &all);
            let mut kh = ih.aug_left(g, &k.elements());
            if rg_prefix {
                kh = kh.left_translates(g);
            }
            RModuleSpan::sum(&[&kh, &ggh])
        }
        _ => Err(Error::Unsupported(format!("Fox subgroups are implemented for n <= 2, got {n}"))),
    }
}

pub fn fox_subgroup_brute(
    g: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    n: usize,
    ring: &CoeffRing,
    rg_prefix: bool,
) -> Result<Subgroup> {
    fox_subgroup_brute_capped(g, h, k, n, ring, rg_prefix, BRUTE_ORDER_CAP)
}

pub fn fox_subgroup_brute_capped(
    g: &FiniteGroup,
    h: &Subgroup,
    k: &Subgroup,
    n: usize,
    ring: &CoeffRing,
    rg_prefix: bool,
    cap: usize,
) -> Result<Subgroup> {
    check_brute(g, ring, cap)?;
    fox_module(g, h, k, n, ring, rg_prefix)?.group_slice(g)
}

/// Invariant factors of `sup / sub` as an abelian group (0 for a copy of Z).
pub fn quotient_invariants(sub: &RModuleSpan, sup: &RModuleSpan) -> Result<Vec<i64>> {
    sub.check(sup)?;
    let big_sub = sub.big();
    let big_sup = sup.big();
    let mut rels = Vec::new();
    for r in big_sub.basis() {
        let c = big_sup
            .coordinates(&r)
            .expect("big integers do not overflow")
            .ok_or_else(|| Error::Containment("sub is not contained in sup".into()))?;
        let c: Option<Vec<i64>> = c.iter().map(i64::from_bigint).collect();
        rels.push(c.ok_or_else(|| Error::Unsupported("relation coefficient exceeds 64 bits".into()))?);
    }
    let rank = big_sup.basis().len();
    Ok(FgAb::from_presentation(&rels, rank).group.factors().to_vec())
}
