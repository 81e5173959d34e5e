//! Subgroups as canonical bitsets, N-series, torsion sets, quotients and
//! subgroup enumeration.

use std::collections::{BTreeSet, HashSet};
use std::hash::{Hash, Hasher};

use crate::abelian::FgAb;
use crate::bitset::ElemSet;
use crate::error::{Error, Result};
use crate::group::{close_under, Elem, FiniteGroup};

/// A subgroup of a finite group. Equality and hashing use the member set only; the
/// recorded generators are a witness that the set is their closure.
#[derive(Clone, Debug)]
pub struct Subgroup {
    members: ElemSet,
    generators: Vec<Elem>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Self {
        Subgroup { members: ElemSet::from_iter(g.order(), [g.identity()]), generators: Vec::new() }
    }

    pub fn whole(g: &FiniteGroup) -> Self {
        Subgroup { members: ElemSet::full(g.order()), generators: g.generators().to_vec() }
    }

    /// The smallest subgroup containing `seeds`. Only seeds that enlarge the span are
    /// kept as generators.
    pub fn generated(g: &FiniteGroup, seeds: &[Elem]) -> Self {
        let mut s = Self::trivial(g);
        s.extend(g, seeds.iter().copied());
        s
    }

    fn extend(&mut self, g: &FiniteGroup, seeds: impl IntoIterator<Item = Elem>) {
        let mut elems: Option<Vec<Elem>> = None;
        for x in seeds {
            if self.members.contains(x) {
                continue;
            }
            self.generators.push(x);
            let list = elems.get_or_insert_with(|| self.members.to_vec());
            // Re-close from every known element with the enlarged generating set.
            close_under(g, &mut self.members, list, &self.generators);
        }
    }

    /// Wraps a set after checking that it is a subgroup.
    pub fn from_members(g: &FiniteGroup, members: ElemSet) -> Result<Self> {
        if !members.contains(g.identity()) {
            return Err(Error::NotClosed("set does not contain the identity".into()));
        }
        let elems = members.to_vec();
        for &a in &elems {
            for &b in &elems {
                let c = g.mul(a, b);
                if !members.contains(c) {
                    return Err(Error::NotClosed(format!(
                        "{} * {} = {} lies outside the set",
                        g.name(a),
                        g.name(b),
                        g.name(c)
                    )));
                }
            }
        }
        let generators = Self::generated(g, &elems).generators;
        Ok(Subgroup { members, generators })
    }

    pub fn order(&self) -> usize {
        self.members.count()
    }

    #[inline]
    pub fn contains(&self, a: Elem) -> bool {
        self.members.contains(a)
    }

    pub fn members(&self) -> &ElemSet {
        &self.members
    }

    pub fn elements(&self) -> Vec<Elem> {
        self.members.to_vec()
    }

    pub fn generators(&self) -> &[Elem] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_whole(&self, g: &FiniteGroup) -> bool {
        self.order() == g.order()
    }

    /// Normal in the subgroup `within` (which must contain `self`).
    pub fn is_normal_in(&self, g: &FiniteGroup, within: &Subgroup) -> bool {
        within.generators().iter().all(|&x| self.generators.iter().all(|&s| self.contains(g.conjugate(x, s))))
    }

    pub fn is_normal(&self, g: &FiniteGroup) -> bool {
        self.is_normal_in(g, &Subgroup::whole(g))
    }

    /// Sorted element names.
    pub fn names(&self, g: &FiniteGroup) -> Vec<String> {
        let mut v: Vec<String> = self.members.iter().map(|e| g.name(e).to_string()).collect();
        v.sort();
        v
    }

    pub fn intersect(&self, g: &FiniteGroup, other: &Subgroup) -> Subgroup {
        let members = self.members.intersection(&other.members);
        let generators = Self::generated(g, &members.to_vec()).generators;
        Subgroup { members, generators }
    }

    pub fn conjugate_by(&self, g: &FiniteGroup, x: Elem) -> Subgroup {
        let seeds: Vec<Elem> = self.generators.iter().map(|&s| g.conjugate(x, s)).collect();
        Subgroup::generated(g, &seeds)
    }
}

pub fn generated_subgroup(g: &FiniteGroup, seeds: &[Elem]) -> Subgroup {
    Subgroup::generated(g, seeds)
}

/// `sgp{[a, b] : a in A, b in B}`.
pub fn commutator_subgroup(g: &FiniteGroup, a: &Subgroup, b: &Subgroup) -> Subgroup {
    let mut s = Subgroup::trivial(g);
    let bs = b.elements();
    for x in a.members.iter() {
        s.extend(g, bs.iter().map(|&y| g.commutator(x, y)));
    }
    s
}

/// `sgp{a^m : a in A}`; `m = 0` gives the trivial subgroup.
pub fn power_subgroup(g: &FiniteGroup, a: &Subgroup, m: u64) -> Subgroup {
    if m == 0 {
        return Subgroup::trivial(g);
    }
    let seeds: Vec<Elem> = a.members.iter().map(|x| g.pow(x, (m % g.element_order(x)) as i64)).collect();
    Subgroup::generated(g, &seeds)
}

pub fn join(g: &FiniteGroup, parts: &[&Subgroup]) -> Subgroup {
    let mut s = Subgroup::trivial(g);
    for p in parts {
        if p.is_subgroup_of(&s) {
            continue;
        }
        if s.is_subgroup_of(p) {
            s = (*p).clone();
            continue;
        }
        s.extend(g, p.generators.iter().copied());
    }
    s
}

pub fn normal_closure(g: &FiniteGroup, a: &Subgroup) -> Subgroup {
    let mut s = a.clone();
    loop {
        let seeds: Vec<Elem> = g
            .generators()
            .iter()
            .flat_map(|&x| s.generators.iter().map(move |&y| (x, y)))
            .map(|(x, y)| g.conjugate(x, y))
            .filter(|&c| !s.contains(c))
            .collect();
        if seeds.is_empty() {
            return s;
        }
        s.extend(g, seeds);
    }
}

pub fn centralizer(g: &FiniteGroup, a: &Subgroup) -> Subgroup {
    let members = ElemSet::from_iter(
        g.order(),
        g.elements().filter(|&x| a.generators.iter().all(|&y| g.mul(x, y) == g.mul(y, x))),
    );
    Subgroup::from_members(g, members).expect("centralizers are subgroups")
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    centralizer(g, &Subgroup::whole(g))
}

/// A descending chain `N_1 = G ⊇ N_2 ⊇ ...` with `[N_i, N_j] ⊆ N_{i+j}`. Terms beyond
/// the stored length equal the last stored term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSeries {
    terms: Vec<Subgroup>,
}

impl NSeries {
    /// `N_k` for `k >= 1`, clamped to the last stored term.
    pub fn term(&self, k: usize) -> &Subgroup {
        assert!(k >= 1, "N-series terms are indexed from 1");
        &self.terms[(k - 1).min(self.terms.len() - 1)]
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Subgroup] {
        &self.terms
    }

    /// The image series in a quotient, `proj` mapping elements of `g` to `q`.
    pub fn image(&self, q: &FiniteGroup, proj: &[Elem]) -> NSeries {
        let terms = self
            .terms
            .iter()
            .map(|t| Subgroup::generated(q, &t.elements().iter().map(|&e| proj[e]).collect::<Vec<_>>()))
            .collect();
        NSeries { terms }
    }
}

pub fn lower_central_series(g: &FiniteGroup) -> NSeries {
    let whole = Subgroup::whole(g);
    let mut terms = vec![whole.clone()];
    loop {
        let next = commutator_subgroup(g, terms.last().unwrap(), &whole);
        if &next == terms.last().unwrap() {
            break;
        }
        let done = next.is_trivial();
        terms.push(next);
        if done {
            break;
        }
    }
    NSeries { terms }
}

/// Drops a constant tail, which the clamping in [`NSeries::term`] restores.
fn trimmed(mut terms: Vec<Subgroup>) -> NSeries {
    while terms.len() > 1 && terms[terms.len() - 1] == terms[terms.len() - 2] {
        terms.pop();
    }
    NSeries { terms }
}

/// The Jennings series `N_k = ∏_{i p^j >= k} γ_i^{p^j}` for the prime `p`.
pub fn jennings_series(g: &FiniteGroup, p: u64) -> NSeries {
    let gamma = lower_central_series(g);
    let c = gamma.len();
    // Past this index every factor has reached its stable value.
    let last = c * g.exponent() as usize + 1;
    let mut terms = Vec::new();
    for k in 1..=last {
        let parts: Vec<Subgroup> = (1..=k)
            .map(|i| {
                let mut q = 1u64;
                while (i as u64) * q < k as u64 {
                    q *= p;
                }
                power_subgroup(g, gamma.term(i), q)
            })
            .collect();
        let refs: Vec<&Subgroup> = parts.iter().collect();
        let term = join(g, &refs);
        let done = term.is_trivial();
        terms.push(term);
        if done {
            break;
        }
    }
    trimmed(terms)
}

/// `λ_1 = G`, `λ_{k+1} = [λ_k, G] λ_k^p`.
pub fn lower_exponent_p_series(g: &FiniteGroup, p: u64) -> NSeries {
    let whole = Subgroup::whole(g);
    let mut terms = vec![whole.clone()];
    loop {
        let last = terms.last().unwrap();
        let next = join(g, &[&commutator_subgroup(g, last, &whole), &power_subgroup(g, last, p)]);
        if &next == last {
            break;
        }
        terms.push(next);
    }
    trimmed(terms)
}

/// `N'_k = N_{⌈k/2⌉}`, an N-series whenever `N` is one.
pub fn stretched_series(series: &NSeries) -> NSeries {
    let terms = (1..=2 * series.len()).map(|k| series.term(k.div_ceil(2)).clone()).collect();
    trimmed(terms)
}

/// Checks the N-series axioms and reports the first violating pair `(i, j)`.
pub fn validate_nseries(g: &FiniteGroup, chain: Vec<Subgroup>) -> Result<NSeries> {
    if chain.is_empty() {
        return Err(Error::InvalidNSeries("empty chain".into()));
    }
    if !chain[0].is_whole(g) {
        return Err(Error::InvalidNSeries("the first term must be the whole group".into()));
    }
    for i in 1..chain.len() {
        if !chain[i].is_subgroup_of(&chain[i - 1]) {
            return Err(Error::InvalidNSeries(format!("not descending: N_{} is not contained in N_{}", i + 1, i)));
        }
    }
    let series = NSeries { terms: chain };
    let len = series.len();
    for i in 1..=len {
        for j in i..=len {
            let c = commutator_subgroup(g, series.term(i), series.term(j));
            if !c.is_subgroup_of(series.term(i + j)) {
                return Err(Error::InvalidNSeries(format!(
                    "commutator condition fails at ({i}, {j}): [N_{i}, N_{j}] has order {} and is not inside N_{}",
                    c.order(),
                    (i + j).min(len)
                )));
            }
        }
    }
    let g2 = commutator_subgroup(g, series.term(1), series.term(1));
    assert!(g2.is_subgroup_of(series.term(2)), "N_2 contains the derived subgroup");
    Ok(series)
}

/// `{x in within : x^(p^k) in S for some k >= 0}`, with `S` normal in `within`.
/// Fails with [`Error::NotClosed`] if the set is not a subgroup.
pub fn p_torsion_mod_within(g: &FiniteGroup, within: &Subgroup, s: &Subgroup, p: u64) -> Result<Subgroup> {
    if !s.is_subgroup_of(within) {
        return Err(Error::NotSubgroup("torsion base is not inside the ambient subgroup".into()));
    }
    if !s.is_normal_in(g, within) {
        return Err(Error::NotNormal("torsion base must be normal".into()));
    }
    let mut members = ElemSet::new(g.order());
    for x in within.members.iter() {
        // The p-power orbit of x is eventually periodic; at most |G| steps.
        let mut y = x;
        let mut seen = HashSet::new();
        loop {
            if s.contains(y) {
                members.insert(x);
                break;
            }
            if !seen.insert(y) {
                break;
            }
            y = g.pow(y, p as i64);
        }
    }
    Subgroup::from_members(g, members)
        .map_err(|e| Error::NotClosed(format!("{p}-torsion set modulo a subgroup of order {}: {e}", s.order())))
}

pub fn p_torsion_mod(g: &FiniteGroup, s: &Subgroup, p: u64) -> Result<Subgroup> {
    p_torsion_mod_within(g, &Subgroup::whole(g), s, p)
}

/// A quotient group with its projection and a transversal.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub group: FiniteGroup,
    /// Image of each element of the parent group.
    pub proj: Vec<Elem>,
    /// A representative for each coset.
    pub reps: Vec<Elem>,
}

pub fn quotient_group(g: &FiniteGroup, n: &Subgroup) -> Result<Quotient> {
    if !n.is_normal(g) {
        return Err(Error::NotNormal(format!("subgroup of order {} is not normal", n.order())));
    }
    let mut proj = vec![usize::MAX; g.order()];
    let mut reps = Vec::new();
    let ne = n.elements();
    for x in g.elements() {
        if proj[x] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(x);
        for &k in &ne {
            proj[g.mul(x, k)] = idx;
        }
    }
    let q = reps.len();
    let identity = proj[g.identity()];
    let names: Vec<String> =
        reps.iter().map(|&r| if proj[r] == identity { "1".to_string() } else { format!("[{}]", g.name(r)) }).collect();
    let mut gens: Vec<Elem> = g.generators().iter().map(|&x| proj[x]).filter(|&c| c != identity).collect();
    gens.dedup();
    let table: Vec<usize> = (0..q * q).map(|i| proj[g.mul(reps[i / q], reps[i % q])]).collect();
    let group = FiniteGroup::from_law(q, names, gens, identity, |a, b| table[a * q + b]);
    Ok(Quotient { group, proj, reps })
}

/// `H/S` for an abelian section, in invariant-factor form.
#[derive(Clone, Debug)]
pub struct AbelianQuotient {
    pub group: FgAb,
    /// Elements of `H` mapping onto the invariant-factor basis.
    pub basis_reps: Vec<Elem>,
    coords: Vec<Option<Vec<i64>>>,
}

impl AbelianQuotient {
    /// Coordinates of `x in H` in the invariant-factor basis.
    pub fn coords(&self, x: Elem) -> Option<&[i64]> {
        self.coords[x].as_deref()
    }
}

/// `H/S` where `S` is normal in `H` and contains `[H, H]`.
pub fn abelian_quotient_of(g: &FiniteGroup, h: &Subgroup, s: &Subgroup) -> Result<AbelianQuotient> {
    if !s.is_subgroup_of(h) {
        return Err(Error::NotSubgroup("quotient denominator is not inside the numerator".into()));
    }
    if !s.is_normal_in(g, h) {
        return Err(Error::NotNormal("quotient denominator must be normal".into()));
    }
    let h2 = commutator_subgroup(g, h, h);
    if !h2.is_subgroup_of(s) {
        return Err(Error::NotAbelian);
    }
    // Label cosets, then read off Schreier relations of a breadth-first spanning tree.
    let se = s.elements();
    let mut coset = vec![usize::MAX; g.order()];
    let mut coset_rep = Vec::new();
    for x in h.members.iter() {
        if coset[x] == usize::MAX {
            let c = coset_rep.len();
            coset_rep.push(x);
            for &k in &se {
                coset[g.mul(x, k)] = c;
            }
        }
    }
    let gens: Vec<Elem> = h.generators.clone();
    let t = gens.len();
    let nc = coset_rep.len();
    let mut word: Vec<Option<Vec<i64>>> = vec![None; nc];
    let start = coset[g.identity()];
    word[start] = Some(vec![0; t]);
    let mut queue = std::collections::VecDeque::from([start]);
    let mut relations: Vec<Vec<i64>> = Vec::new();
    while let Some(c) = queue.pop_front() {
        let wc = word[c].clone().unwrap();
        for (i, &x) in gens.iter().enumerate() {
            let d = coset[g.mul(coset_rep[c], x)];
            let mut w = wc.clone();
            w[i] += 1;
            match &word[d] {
                None => {
                    word[d] = Some(w);
                    queue.push_back(d);
                }
                Some(wd) => {
                    let rel: Vec<i64> = w.iter().zip(wd).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|&v| v != 0) {
                        relations.push(rel);
                    }
                }
            }
        }
    }
    let pres = FgAb::from_presentation(&relations, t);
    let group = pres.group.clone();
    let mut coords = vec![None; g.order()];
    for x in h.members.iter() {
        let w = word[coset[x]].as_ref().expect("all cosets reached");
        coords[x] = Some(pres.to_new(w));
    }
    let basis_reps = (0..group.rank())
        .map(|k| {
            let old = pres.from_new_row(k);
            let mut acc = g.identity();
            for (i, &e) in old.iter().enumerate() {
                acc = g.mul(acc, g.pow(gens[i], e));
            }
            acc
        })
        .collect();
    Ok(AbelianQuotient { group, basis_reps, coords })
}

pub fn abelian_quotient(g: &FiniteGroup, s: &Subgroup) -> Result<AbelianQuotient> {
    abelian_quotient_of(g, &Subgroup::whole(g), s)
}

/// All cyclic subgroups, sorted by order then member set.
pub fn cyclic_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for x in g.elements() {
        let s = Subgroup::generated(g, &[x]);
        if seen.insert(s.members.clone()) {
            out.push(s);
        }
    }
    sort_subgroups(&mut out);
    out
}

fn sort_subgroups(v: &mut [Subgroup]) {
    v.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.members.to_vec().cmp(&b.members.to_vec())));
}

/// Every subgroup, by joining cyclic subgroups until the set stabilizes. Fails when
/// more than `cap` subgroups turn up.
pub fn all_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    let cyclic = cyclic_subgroups(g);
    let mut seen: BTreeSet<ElemSet> = cyclic.iter().map(|s| s.members.clone()).collect();
    let mut all = cyclic.clone();
    let mut frontier = cyclic.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for c in &cyclic {
                if c.is_subgroup_of(s) {
                    continue;
                }
                let j = join(g, &[s, c]);
                if seen.insert(j.members.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Cap(format!("more than {cap} subgroups")));
                    }
                    next.push(j.clone());
                    all.push(j);
                }
            }
        }
        frontier = next;
    }
    sort_subgroups(&mut all);
    Ok(all)
}

pub fn normal_subgroups(g: &FiniteGroup, cap: usize) -> Result<Vec<Subgroup>> {
    Ok(all_subgroups(g, cap)?.into_iter().filter(|s| s.is_normal(g)).collect())
}

/// One subgroup from each conjugacy class, drawn from `subs`.
pub fn up_to_conjugacy(g: &FiniteGroup, subs: Vec<Subgroup>) -> Vec<Subgroup> {
    let mut seen: HashSet<ElemSet> = HashSet::new();
    let mut out = Vec::new();
    for s in subs {
        if seen.contains(&s.members) {
            continue;
        }
        for x in g.elements() {
            seen.insert(s.conjugate_by(g, x).members);
        }
        out.push(s);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::build_group;

    fn fam(s: &str) -> FiniteGroup {
        build_group(&s.parse().unwrap()).unwrap()
    }

    fn el(g: &FiniteGroup, s: &str) -> Elem {
        g.parse_element(s).unwrap()
    }

    #[test]
    fn generated_examples() {
        let c4 = fam("cyclic:4");
        assert!(Subgroup::generated(&c4, &[c4.identity()]).is_trivial());
        assert!(Subgroup::generated(&c4, &[el(&c4, "x")]).is_whole(&c4));
        let g = fam("class2:2,1");
        let seeds = [el(&g, "x^2"), el(&g, "y^2"), el(&g, "c")];
        assert_eq!(Subgroup::generated(&g, &seeds).order(), 16);
    }

    #[test]
    fn commutators_and_powers() {
        let c4 = fam("cyclic:4");
        let w = Subgroup::whole(&c4);
        assert!(commutator_subgroup(&c4, &w, &w).is_trivial());
        let g = fam("class2:2,1");
        let gw = Subgroup::whole(&g);
        let g2 = commutator_subgroup(&g, &gw, &gw);
        assert_eq!(g2, Subgroup::generated(&g, &[el(&g, "c")]));
        assert_eq!(g2.order(), 4);

        let c6 = fam("cyclic:6");
        let p4 = power_subgroup(&c6, &Subgroup::whole(&c6), 4);
        assert_eq!(p4.names(&c6), vec!["1", "x^2", "x^4"]);
        let d4 = fam("dihedral:4");
        let sq = power_subgroup(&d4, &Subgroup::whole(&d4), 2);
        assert_eq!(sq, Subgroup::generated(&d4, &[el(&d4, "r^2")]));
        assert_eq!(sq.order(), 2);
        assert_eq!(power_subgroup(&d4, &Subgroup::whole(&d4), 1), Subgroup::whole(&d4));
        assert!(power_subgroup(&d4, &Subgroup::whole(&d4), 0).is_trivial());
    }

    #[test]
    fn join_examples() {
        let g = fam("class2:2,1");
        let a = Subgroup::generated(&g, &[el(&g, "x^2")]);
        let b = Subgroup::generated(&g, &[el(&g, "y^2")]);
        let t = Subgroup::trivial(&g);
        assert_eq!(join(&g, &[&t, &a]), a);
        assert_eq!(join(&g, &[&a, &a]), a);
        assert_eq!(join(&g, &[&a, &b]).order(), 4);
        let x = Subgroup::generated(&g, &[el(&g, "x")]);
        let y = Subgroup::generated(&g, &[el(&g, "y")]);
        let xy = join(&g, &[&x, &y]);
        assert!(xy.is_whole(&g));
        assert!(xy.contains(g.commutator(el(&g, "x"), el(&g, "y"))));
    }

    #[test]
    fn lower_central_series_examples() {
        let c6 = fam("cyclic:6");
        let s = lower_central_series(&c6);
        assert_eq!(s.len(), 2);
        assert!(s.term(2).is_trivial());
        let g = fam("class2:2,1");
        let s = lower_central_series(&g);
        assert_eq!(s.len(), 3);
        assert_eq!(s.term(2), &Subgroup::generated(&g, &[el(&g, "c")]));
        assert!(s.term(3).is_trivial());
        assert!(s.term(7).is_trivial());
        let d4 = fam("dihedral:4");
        let s = lower_central_series(&d4);
        assert_eq!(s.term(2), &Subgroup::generated(&d4, &[el(&d4, "r^2")]));
        assert!(s.term(3).is_trivial());
        validate_nseries(&d4, s.terms().to_vec()).unwrap();
    }

    #[test]
    fn nseries_validation() {
        let c4 = fam("cyclic:4");
        let w = Subgroup::whole(&c4);
        validate_nseries(&c4, vec![w.clone(), w.clone(), Subgroup::trivial(&c4)]).unwrap();
        let d4 = fam("dihedral:4");
        let dw = Subgroup::whole(&d4);
        let err = validate_nseries(&d4, vec![dw.clone(), dw.clone(), Subgroup::trivial(&d4)]).unwrap_err();
        assert!(err.to_string().contains("(1, 2)"), "{err}");
        let err = validate_nseries(&d4, vec![dw.clone(), Subgroup::trivial(&d4), dw]).unwrap_err();
        assert!(err.to_string().contains("descending"), "{err}");
    }

    #[test]
    fn derived_series_constructions_are_valid() {
        for spec in ["cyclic:9", "dihedral:4", "quaternion:16", "symmetric:3", "alternating:4", "class2:2,1"] {
            let g = fam(spec);
            for p in [2, 3] {
                for s in [jennings_series(&g, p), lower_exponent_p_series(&g, p)] {
                    validate_nseries(&g, s.terms().to_vec()).unwrap();
                    validate_nseries(&g, stretched_series(&s).terms().to_vec()).unwrap();
                }
            }
        }
        // Z/9 at p = 3: G, G^3, G^3, 1.
        let c9 = fam("cyclic:9");
        let j = jennings_series(&c9, 3);
        assert_eq!(j.terms().iter().map(Subgroup::order).collect::<Vec<_>>(), vec![9, 3, 3, 1]);
        let l = lower_exponent_p_series(&c9, 3);
        assert_eq!(l.terms().iter().map(Subgroup::order).collect::<Vec<_>>(), vec![9, 3, 1]);
        let d4 = fam("dihedral:4");
        let st = stretched_series(&lower_central_series(&d4));
        assert_eq!(st.terms().iter().map(Subgroup::order).collect::<Vec<_>>(), vec![8, 8, 2, 2, 1]);
    }

    #[test]
    fn torsion_sets() {
        let c6 = fam("cyclic:6");
        let w = Subgroup::whole(&c6);
        let t = Subgroup::trivial(&c6);
        assert_eq!(p_torsion_mod(&c6, &w, 2).unwrap(), w);
        assert_eq!(p_torsion_mod(&c6, &t, 2).unwrap().names(&c6), vec!["1", "x^3"]);
        assert!(p_torsion_mod(&c6, &t, 5).unwrap().is_trivial());
        // S3 modulo the trivial group: the 2-torsion set has 4 elements and is not closed.
        let s3 = fam("symmetric:3");
        let err = p_torsion_mod(&s3, &Subgroup::trivial(&s3), 2).unwrap_err();
        assert!(matches!(err, Error::NotClosed(_)));
        let bad = Subgroup::generated(&s3, &[el(&s3, "a")]);
        assert!(matches!(p_torsion_mod(&s3, &bad, 2), Err(Error::NotNormal(_))));
    }

    #[test]
    fn abelian_quotients() {
        let g = fam("class2:2,1");
        let g2 = Subgroup::generated(&g, &[el(&g, "c")]);
        let q = abelian_quotient(&g, &g2).unwrap();
        assert_eq!(q.group.factors(), &[4, 4]);
        for (k, &h) in q.basis_reps.iter().enumerate() {
            let mut e = vec![0; 2];
            e[k] = 1;
            assert_eq!(q.coords(h).unwrap(), e.as_slice());
        }
        let c6 = fam("cyclic:6");
        let q = abelian_quotient(&c6, &Subgroup::trivial(&c6)).unwrap();
        assert_eq!(q.group.factors(), &[6]);
        let q = abelian_quotient(&c6, &Subgroup::whole(&c6)).unwrap();
        assert!(q.group.factors().is_empty());
        let d4 = fam("dihedral:4");
        assert!(matches!(abelian_quotient(&d4, &Subgroup::trivial(&d4)), Err(Error::NotAbelian)));
    }

    #[test]
    fn quotient_and_enumeration() {
        let d4 = fam("dihedral:4");
        let z = center(&d4);
        assert_eq!(z.order(), 2);
        let q = quotient_group(&d4, &z).unwrap();
        assert_eq!(q.group.order(), 4);
        assert_eq!(q.group.exponent(), 2);
        assert_eq!(all_subgroups(&d4, 100).unwrap().len(), 10);
        assert_eq!(normal_subgroups(&d4, 100).unwrap().len(), 6);
        assert_eq!(cyclic_subgroups(&d4).len(), 7);
        let classes = up_to_conjugacy(&d4, all_subgroups(&d4, 100).unwrap());
        assert_eq!(classes.len(), 8);
        let q8 = fam("quaternion:8");
        assert_eq!(all_subgroups(&q8, 100).unwrap().len(), 6);
        assert!(matches!(all_subgroups(&d4, 5), Err(Error::Cap(_))));
    }

    #[test]
    fn normal_closure_and_centralizer() {
        let d4 = fam("dihedral:4");
        let s = Subgroup::generated(&d4, &[el(&d4, "s")]);
        let nc = normal_closure(&d4, &s);
        assert_eq!(nc.order(), 4);
        assert!(nc.is_normal(&d4));
        assert_eq!(centralizer(&d4, &s).order(), 4);
    }
}
