//! Closed-form descriptions of the third relative dimension subgroup and of the low
//! relative Fox subgroups, evaluated as explicit subgroups of a finite group.

use std::collections::HashMap;

use crate::bitset::ElemSet;
use crate::echelon::Lattice;
use crate::error::{Error, Result};
use crate::group::{gcd, Elem, FiniteGroup};
use crate::groupring::CoeffRing;
use crate::subgroup::{
    abelian_quotient, abelian_quotient_of, center, commutator_subgroup, join, lower_central_series, normal_subgroups,
    p_torsion_mod, p_torsion_mod_within, power_subgroup, NSeries, Subgroup,
};
use crate::AbSubgroup;

/// Bound on the number of exponent tuples visited by [`FormulaContext::fox2`].
pub const FOX2_TUPLE_BUDGET: u64 = 1 << 22;

/// Default bound on `|H|` for [`FormulaContext::fox2_enumerate`].
pub const FOX2_ENUMERATE_CAP: usize = 8;

fn binom2(m: u64) -> i64 {
    (m as i64) * (m as i64 - 1).max(0) / 2
}

/// `{a ∈ within : a^e ∈ target}`; a subgroup whenever `target` contains the derived
/// subgroup of `within` and is normalized by it.
fn power_preimage(g: &FiniteGroup, within: &Subgroup, e: u64, target: &Subgroup) -> Result<Subgroup> {
    let members =
        ElemSet::from_iter(g.order(), within.members().iter().filter(|&a| target.contains(g.pow(a, e as i64))));
    Subgroup::from_members(g, members)
}

/// The data `(G, K, H, N, R)` shared by all formulas.
#[derive(Clone, Debug)]
pub struct FormulaContext<'a> {
    pub g: &'a FiniteGroup,
    pub k: Subgroup,
    pub h: Subgroup,
    pub series: NSeries,
    pub ring: CoeffRing,
}

/// Both evaluations of the third relative dimension subgroup.
#[derive(Clone, Debug)]
pub struct Dim3Formula {
    /// `U_0 N_3`, `U_m N_3 G^m` or `U_m N_3 G^{2m} V^m`; `None` for abstract rings.
    pub by_modulus: Option<Subgroup>,
    /// `U_0 N_3 Z_2 ∏_p (t_p(G mod U_0 N_3) ∩ U_{p^e} N_3 G^{p^e})`.
    pub by_sigma: Subgroup,
    /// As `by_sigma`, with the exponent condition in `Z_2` read as `g^{e(2)-1}`.
    pub by_sigma_literal: Subgroup,
}

impl<'a> FormulaContext<'a> {
    pub fn new(g: &'a FiniteGroup, k: Subgroup, h: Subgroup, series: NSeries, ring: CoeffRing) -> Self {
        FormulaContext { g, k, h, series, ring }
    }

    /// Lower central series and `H = G`.
    pub fn gamma(g: &'a FiniteGroup, k: Subgroup, ring: CoeffRing) -> Self {
        Self::new(g, k, Subgroup::whole(g), lower_central_series(g), ring)
    }

    fn whole(&self) -> Subgroup {
        Subgroup::whole(self.g)
    }

    fn power(&self, s: &Subgroup, m: u64) -> Subgroup {
        power_subgroup(self.g, s, m)
    }

    /// `m` with `R = Z/m` (0 for Z).
    pub fn modulus(&self) -> Result<u64> {
        Ok(self.ring.modulus()? as u64)
    }

    /// `K N_2 G^m`, with `G^0` trivial.
    pub fn kn2_gm(&self, m: u64) -> Subgroup {
        join(self.g, &[&self.k, self.series.term(2), &self.power(&self.whole(), m)])
    }

    /// `K G_2 G^m`.
    pub fn kg2_gm(&self, m: u64) -> Subgroup {
        let whole = self.whole();
        let g2 = commutator_subgroup(self.g, &whole, &whole);
        join(self.g, &[&self.k, &g2, &self.power(&whole, m)])
    }

    /// `U_m = sgp{[a, b^k] : a^k, b^k ∈ K N_2 G^m}`, `k` over one exponent period.
    pub fn u_subgroup(&self, m: u64) -> Subgroup {
        let g = self.g;
        let s = self.kn2_gm(m);
        let mut gens = ElemSet::new(g.order());
        for k in 1..g.exponent() as i64 {
            let admissible: Vec<Elem> = g.elements().filter(|&a| s.contains(g.pow(a, k))).collect();
            for &a in &admissible {
                for &b in &admissible {
                    gens.insert(g.commutator(a, g.pow(b, k)));
                }
            }
        }
        Subgroup::generated(g, &gens.to_vec())
    }

    /// `V = {a : a^{m/2} ∈ K N_2 G^m}` for even `m > 0`.
    pub fn v_subgroup(&self, m: u64) -> Result<Subgroup> {
        if m == 0 || m % 2 == 1 {
            return Err(Error::Unsupported(format!("V is defined for even positive m, got {m}")));
        }
        power_preimage(self.g, &self.whole(), m / 2, &self.kn2_gm(m))
    }

    fn u0n3(&self) -> Subgroup {
        join(self.g, &[&self.u_subgroup(0), self.series.term(3)])
    }

    fn z2_with(&self, literal: bool) -> Result<Subgroup> {
        let Some(e) = self.ring.e(2) else {
            return Ok(Subgroup::trivial(self.g));
        };
        let pe = 1u64 << e;
        let v = if e == 0 {
            self.whole()
        } else {
            let exp = if literal { e as u64 - 1 } else { pe / 2 };
            power_preimage(self.g, &self.whole(), exp, &self.kn2_gm(pe))?
        };
        let t2 = p_torsion_mod(self.g, &self.u0n3(), 2)?;
        let prod = join(
            self.g,
            &[&self.u_subgroup(pe), self.series.term(3), &self.power(&self.whole(), 2 * pe), &self.power(&v, pe)],
        );
        Ok(t2.intersect(self.g, &prod))
    }

    /// `Z_2`, reading its defining condition as `g^{2^{e(2)-1}} ∈ K N_2 G^{2^{e(2)}}`.
    pub fn z2_subgroup(&self) -> Result<Subgroup> {
        self.z2_with(false)
    }

    /// `Z_2` with the condition taken as printed, `g^{e(2)-1} ∈ K N_2 G^{2^{e(2)}}`.
    pub fn z2_subgroup_literal(&self) -> Result<Subgroup> {
        self.z2_with(true)
    }

    /// The modulus form of `D_3`, for `R = Z` or `Z/m`.
    pub fn dim3_by_modulus(&self) -> Result<Subgroup> {
        let m = self.modulus()?;
        let n3 = self.series.term(3);
        let um = self.u_subgroup(m);
        Ok(if m == 0 {
            join(self.g, &[&um, n3])
        } else if m % 2 == 1 {
            join(self.g, &[&um, n3, &self.power(&self.whole(), m)])
        } else {
            let v = self.v_subgroup(m)?;
            join(self.g, &[&um, n3, &self.power(&self.whole(), 2 * m), &self.power(&v, m)])
        })
    }

    /// The `σ(R)` form of `D_3`. Odd primes not dividing `|G|` contribute nothing beyond
    /// `U_0 N_3` and are skipped.
    fn dim3_by_sigma(&self, literal: bool) -> Result<Subgroup> {
        let base = self.u0n3();
        let mut parts = vec![base.clone(), self.z2_with(literal)?];
        for p in self.ring.sigma_primes_dividing(self.g.order() as u64) {
            if p == 2 {
                continue;
            }
            let pe = p.pow(self.ring.e(p).expect("p in sigma"));
            let tp = p_torsion_mod(self.g, &base, p)?;
            let rhs = join(self.g, &[&self.u_subgroup(pe), self.series.term(3), &self.power(&self.whole(), pe)]);
            parts.push(tp.intersect(self.g, &rhs));
        }
        let refs: Vec<&Subgroup> = parts.iter().collect();
        Ok(join(self.g, &refs))
    }

    pub fn dim3(&self) -> Result<Dim3Formula> {
        let by_modulus = if self.ring.is_concrete() { Some(self.dim3_by_modulus()?) } else { None };
        Ok(Dim3Formula {
            by_modulus,
            by_sigma: self.dim3_by_sigma(false)?,
            by_sigma_literal: self.dim3_by_sigma(true)?,
        })
    }

    /// `G ∩ (1 + R(G) I(H)) = H`.
    pub fn fox0(&self) -> Subgroup {
        self.h.clone()
    }

    fn h2(&self) -> Subgroup {
        commutator_subgroup(self.g, &self.h, &self.h)
    }

    /// `G ∩ (1 + I(G) I(H))`: `H_2 H^{n_R}` in positive characteristic, otherwise
    /// `H_2 ∏_{p ∈ σ(R)} t_p(H mod H_2)^{p^e}`.
    pub fn fox1(&self) -> Result<Subgroup> {
        let h2 = self.h2();
        let n = self.ring.characteristic();
        if n > 0 {
            return Ok(join(self.g, &[&h2, &self.power(&self.h, n)]));
        }
        let mut parts = vec![h2.clone()];
        for p in self.ring.sigma_primes_dividing(self.h.order() as u64) {
            let tp = p_torsion_mod_within(self.g, &self.h, &h2, p)?;
            parts.push(self.power(&tp, p.pow(self.ring.e(p).expect("p in sigma"))));
        }
        let refs: Vec<&Subgroup> = parts.iter().collect();
        Ok(join(self.g, &refs))
    }

    /// `G ∩ (1 + I(K) I(H) + I²(G) I(H)) = S_m^fg H_3 H^{m²}` from a basis of
    /// `H / H_2 H^m`, enumerating exponent tuples modulo `exp(H)`.
    pub fn fox2(&self) -> Result<Subgroup> {
        self.fox2_with_budget(FOX2_TUPLE_BUDGET)
    }

    pub fn fox2_with_budget(&self, budget: u64) -> Result<Subgroup> {
        let g = self.g;
        let m = self.modulus()?;
        let h2 = self.h2();
        let h3 = commutator_subgroup(g, &h2, &self.h);
        let tail = self.power(&self.h, m * m);
        if self.h.is_trivial() {
            return Ok(Subgroup::trivial(g));
        }
        let base = join(g, &[&h2, &self.power(&self.h, m)]);
        let aq = abelian_quotient_of(g, &self.h, &base)?;
        let hs = &aq.basis_reps;
        let ds = aq.group.factors();
        let r = hs.len();
        let exp =
            self.h.elements().iter().fold(1u64, |acc, &x| acc / gcd(acc, g.element_order(x)) * g.element_order(x));
        let npairs = r * (r.saturating_sub(1)) / 2;
        let count = (exp as f64).powi((npairs + r) as i32);
        if count > budget as f64 {
            return Err(Error::Cap(format!("{count} exponent tuples exceed the budget {budget}")));
        }

        let q = abelian_quotient(g, &self.kg2_gm(0))?;
        let qh: Vec<Vec<i64>> = hs.iter().map(|&x| q.coords(x).expect("in G").to_vec()).collect();
        let targets: Vec<AbSubgroup> = ds.iter().map(|&d| q.group.multiples(d)).collect();
        let c = binom2(m);
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
        let comms: Vec<Elem> = pairs.iter().map(|&(i, j)| g.commutator(hs[i], hs[j])).collect();
        let e = exp as i64;

        let mut gens = ElemSet::new(g.order());
        let mut b = vec![0i64; r];
        loop {
            let gb = b.iter().zip(hs).fold(g.identity(), |acc, (&bl, &hl)| g.mul(acc, g.pow(hl, bl)));
            let gbm = g.pow(gb, m as i64);
            let mut a = vec![0i64; npairs];
            loop {
                let ok = (0..r).all(|k| {
                    let mut x = q.group.zero();
                    let mut add = |i: usize, t: i64| {
                        x = q.group.add(&x, &q.group.scale(t.rem_euclid(e), &qh[i]));
                    };
                    add(k, c * b[k] * b[k]);
                    for (p, &(i, j)) in pairs.iter().enumerate() {
                        if j == k {
                            add(i, a[p] + c * b[i] * b[k]);
                        } else if i == k {
                            add(j, -a[p] + c * b[j] * b[k]);
                        }
                    }
                    targets[k].contains(&x)
                });
                if ok {
                    let v = a.iter().zip(&comms).fold(g.identity(), |acc, (&ap, &cp)| g.mul(acc, g.pow(cp, ap)));
                    gens.insert(g.mul(v, gbm));
                }
                if !odometer(&mut a, e) {
                    break;
                }
            }
            if !odometer(&mut b, e) {
                break;
            }
        }
        let sfg = Subgroup::generated(g, &gens.to_vec());
        Ok(join(g, &[&sfg, &h3, &tail]))
    }

    /// The same subgroup from the element-indexed generator family `S_m`.
    ///
    /// For fixed `b`, the admissible `a` form a coset of a lattice `A_0`, and the
    /// commutator part is additive in `a` because `H_2` is abelian. So `S_m` is generated
    /// by `c(A_0)` together with one value `c(a_0) g(b)^m` per `b` admitting a solution.
    /// `g(b) = ∏_l l^{b_l}` is taken in element-index order, or reversed.
    pub fn fox2_enumerate(&self, cap: usize, reversed: bool) -> Result<Subgroup> {
        let g = self.g;
        let m = self.modulus()?;
        if self.h.order() > cap {
            return Err(Error::Cap(format!("|H| = {} exceeds {cap}", self.h.order())));
        }
        if self.h.is_trivial() {
            return Ok(Subgroup::trivial(g));
        }
        let hel = self.h.elements();
        let nh = hel.len();
        let h2 = self.h2();
        let h2ab = abelian_quotient_of(g, &h2, &Subgroup::trivial(g))
            .map_err(|_| Error::Unsupported("the element-indexed family needs an abelian H_2".into()))?;
        let base = join(g, &[&h2, &self.power(&self.h, m)]);
        let q = abelian_quotient(g, &self.kg2_gm(0))?;
        let rq = q.group.rank();
        // o_k: order of k modulo H_2 H^m; the admissible d_k are its multiples and 0.
        let ord: Vec<u64> = hel
            .iter()
            .map(|&k| (1..=g.element_order(k)).find(|&d| base.contains(g.pow(k, d as i64))).expect("order bound"))
            .collect();
        let mut moduli = Vec::with_capacity(nh * rq + h2ab.group.rank());
        for &o in &ord {
            for &d in q.group.factors() {
                moduli.push(num_integer::gcd(o as i64, d));
            }
        }
        let nt = moduli.len();
        moduli.extend(h2ab.group.factors().iter().copied());
        let mut lat = Lattice::new(moduli);
        let qc = |x: Elem| q.coords(x).expect("in G").to_vec();
        for (xi, &x) in hel.iter().enumerate() {
            for (yi, &y) in hel.iter().enumerate() {
                let mut row = vec![0i64; lat.ncols()];
                // a_xy contributes [x] in block y and -[y] in block x.
                for (t, v) in qc(x).into_iter().enumerate() {
                    row[yi * rq + t] += v;
                }
                for (t, v) in qc(y).into_iter().enumerate() {
                    row[xi * rq + t] -= v;
                }
                for (t, &v) in h2ab.coords(g.commutator(x, y)).expect("in H_2").iter().enumerate() {
                    row[nt + t] = v;
                }
                crate::abelian::ovf(lat.insert(row))?;
            }
        }
        crate::abelian::ovf(lat.canonicalize())?;
        let h2_elem =
            |y: &[i64]| y.iter().zip(&h2ab.basis_reps).fold(g.identity(), |acc, (&c, &r)| g.mul(acc, g.pow(r, c)));
        let mut gens = ElemSet::new(g.order());
        for row in lat.rows().filter(|r| r[..nt].iter().all(|&v| v == 0)) {
            gens.insert(h2_elem(&row[nt..]));
        }

        let c = binom2(m);
        let order: Vec<usize> = if reversed { (0..nh).rev().collect() } else { (0..nh).collect() };
        let lens: Vec<i64> = hel.iter().map(|&l| g.element_order(l) as i64).collect();
        let mut solved: HashMap<Vec<i64>, Option<Elem>> = HashMap::new();
        let mut b = vec![0i64; nh];
        loop {
            let beta =
                b.iter().zip(&hel).fold(q.group.zero(), |acc, (&bl, &l)| q.group.add(&acc, &q.group.scale(bl, &qc(l))));
            let mut target = vec![0i64; lat.ncols()];
            for k in 0..nh {
                let v = q.group.scale(-c * b[k], &beta);
                target[k * rq..(k + 1) * rq].copy_from_slice(&v);
            }
            let value = solved.entry(target.clone()).or_insert_with(|| {
                let mut v = target.clone();
                lat.reduce(&mut v)?;
                if v[..nt].iter().any(|&x| x != 0) {
                    return None;
                }
                let y: Vec<i64> = v[nt..].iter().map(|x| -x).collect();
                Some(h2_elem(&y))
            });
            if let Some(c0) = *value {
                let gb = order.iter().fold(g.identity(), |acc, &l| g.mul(acc, g.pow(hel[l], b[l])));
                gens.insert(g.mul(c0, g.pow(gb, m as i64)));
            }
            if !odometer_mixed(&mut b, &lens) {
                break;
            }
        }
        Ok(Subgroup::generated(g, &gens.to_vec()))
    }

    /// The subgroup `H_3 V_H^(m) T_1 T_2`, always contained in the second Fox subgroup.
    pub fn fox2_lower_bound(&self) -> Result<Subgroup> {
        let g = self.g;
        let m = self.modulus()?;
        let s = self.kg2_gm(m);
        let h2 = self.h2();
        let h3 = commutator_subgroup(g, &h2, &self.h);
        let vh = if m % 2 == 1 {
            self.power(&self.h, m)
        } else if m == 0 {
            Subgroup::trivial(g)
        } else {
            let w = power_preimage(g, &self.h, m / 2, &s)?;
            join(g, &[&self.power(&self.h, 2 * m), &self.power(&w, m)])
        };
        let hel = self.h.elements();
        let h_in_s: Vec<Elem> = hel.iter().copied().filter(|&x| s.contains(x)).collect();
        let mut t1 = ElemSet::new(g.order());
        let mut t2 = ElemSet::new(g.order());
        for q in 0..g.exponent() as i64 {
            let adm: Vec<Elem> = hel.iter().copied().filter(|&x| s.contains(g.pow(x, q))).collect();
            for &h in &adm {
                for &k in &adm {
                    t1.insert(g.commutator(h, g.pow(k, q)));
                }
            }
            let sgq = join(g, &[&s, &self.power(&self.whole(), q as u64)]);
            let left: Vec<Elem> = h_in_s.iter().copied().filter(|&h| h2.contains(g.pow(h, q))).collect();
            let right: Vec<Elem> = hel.iter().copied().filter(|&k| sgq.contains(k)).collect();
            for &h in &left {
                for &k in &right {
                    t2.insert(g.commutator(h, k));
                }
            }
        }
        let t1 = Subgroup::generated(g, &t1.to_vec());
        let t2 = Subgroup::generated(g, &t2.to_vec());
        Ok(join(g, &[&h3, &vh, &t1, &t2]))
    }
}

/// Advances a base-`e` counter; returns false after wrapping to all zeros.
fn odometer(v: &mut [i64], e: i64) -> bool {
    for x in v.iter_mut() {
        *x += 1;
        if *x < e {
            return true;
        }
        *x = 0;
    }
    false
}

fn odometer_mixed(v: &mut [i64], lens: &[i64]) -> bool {
    for (x, &l) in v.iter_mut().zip(lens) {
        *x += 1;
        if *x < l {
            return true;
        }
        *x = 0;
    }
    false
}

/// Which of the five sufficient conditions for `K_2 G_3 = D_3(G, K)` over Z hold. For a
/// finite group the torsion-freeness and divisibility conditions reduce to triviality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct EqualityHypotheses {
    pub commutator_in_g3: bool,
    pub central_complement: bool,
    pub normal_cyclic_quotient: bool,
    pub torsion_free_quotient: bool,
    pub divisible_image: bool,
}

impl EqualityHypotheses {
    pub fn any(&self) -> bool {
        self.commutator_in_g3
            || self.central_complement
            || self.normal_cyclic_quotient
            || self.torsion_free_quotient
            || self.divisible_image
    }
}

pub fn equality_hypotheses(g: &FiniteGroup, k: &Subgroup) -> Result<EqualityHypotheses> {
    let whole = Subgroup::whole(g);
    let gamma = lower_central_series(g);
    let (g2, g3) = (gamma.term(2), gamma.term(3));
    let kg = commutator_subgroup(g, k, &whole);
    let k2 = commutator_subgroup(g, k, k);
    let k2g3 = join(g, &[&k2, g3]);
    let z = center(g);

    let central_complement = normal_subgroups(g, usize::MAX)?
        .iter()
        .any(|n| join(g, &[n, k]).is_whole(g) && n.intersect(g, k).is_subgroup_of(&z));
    let normal_cyclic_quotient = k.is_normal(g) && {
        let q = crate::subgroup::quotient_group(g, k)?;
        q.group.elements().any(|x| q.group.element_order(x) as usize == q.group.order())
    };
    Ok(EqualityHypotheses {
        commutator_in_g3: kg.is_subgroup_of(g3),
        central_complement,
        normal_cyclic_quotient,
        torsion_free_quotient: k2g3.is_whole(g)
            || join(g, &[&kg, g3]).is_subgroup_of(&k2g3)
            || join(g, &[k, g2]).is_whole(g),
        divisible_image: k.is_subgroup_of(g2),
    })
}
