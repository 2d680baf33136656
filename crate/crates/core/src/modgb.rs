//! Groebner machinery for submodules of free modules over a (quotient of a)
//! polynomial ring, with syzygy tracking.
//!
//! Vectors are flattened term lists ordered term-over-position: monomials by
//! the ring order, ties by component (lower component wins). Quotient-ring
//! arithmetic never materializes the lifted relation columns `g * e_c`;
//! instead reductions fall through to the ring's Groebner basis and each
//! basis element is paired against it, which is the classical treatment.
//!
//! Tracking expresses every basis element in the original generators, so a
//! reduction to zero yields a syzygy. All S-pairs are scheduled degree-first
//! and pruned with the lcm (chain) criteria, which keep the collected
//! syzygies generating; the product criterion is restricted to untracked
//! rank-one runs where it is sound.

use alloc::collections::{BTreeMap, BTreeSet, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::{Ordering, Reverse};

use crate::field::FieldElem;
use crate::monomial::Monomial;
use crate::poly::{PolyRing, Polynomial};

/// Borrowed ring context: the polynomial ambient plus the (monic, reduced)
/// Groebner basis of the defining ideal. An empty basis means the
/// polynomial ring itself.
#[derive(Clone, Copy)]
pub struct RingCtx<'a> {
    pub ring: &'a PolyRing,
    pub ring_gb: &'a [Polynomial],
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModTerm {
    pub comp: u32,
    pub mon: Monomial,
    pub coeff: FieldElem,
}

/// A vector in a free module, as a flattened sorted term list.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ModVec {
    pub terms: Vec<ModTerm>,
}

fn cmp_term(ring: &PolyRing, a: (&Monomial, u32), b: (&Monomial, u32)) -> Ordering {
    match ring.order.cmp(a.0, b.0) {
        Ordering::Equal => b.1.cmp(&a.1),
        ord => ord,
    }
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&ModTerm> {
        self.terms.first()
    }

    pub fn unit(comp: u32, ring: &PolyRing) -> ModVec {
        ModVec {
            terms: alloc::vec![ModTerm {
                comp,
                mon: Monomial::one(ring.nvars()),
                coeff: ring.field.one(),
            }],
        }
    }

    pub fn from_poly(comp: u32, p: &Polynomial) -> ModVec {
        ModVec {
            terms: p
                .terms
                .iter()
                .map(|(m, c)| ModTerm {
                    comp,
                    mon: m.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
    }

    /// Builds a vector from per-component polynomials.
    pub fn from_polys(ring: &PolyRing, polys: &[Polynomial]) -> ModVec {
        let mut terms = Vec::new();
        for (i, p) in polys.iter().enumerate() {
            for (m, c) in &p.terms {
                terms.push(ModTerm {
                    comp: i as u32,
                    mon: m.clone(),
                    coeff: c.clone(),
                });
            }
        }
        terms.sort_by(|a, b| cmp_term(ring, (&b.mon, b.comp), (&a.mon, a.comp)));
        ModVec { terms }
    }

    /// Extracts the polynomial sitting in one component.
    pub fn component(&self, comp: u32) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp == comp)
                .map(|t| (t.mon.clone(), t.coeff.clone()))
                .collect(),
        }
    }

    pub fn to_polys(&self, rank: usize) -> Vec<Polynomial> {
        let mut out = alloc::vec![Polynomial::zero(); rank];
        for t in self.terms.iter().rev() {
            out[t.comp as usize]
                .terms
                .insert(0, (t.mon.clone(), t.coeff.clone()));
        }
        out
    }

    /// Keeps components `< cut` (syzygy projection).
    pub fn truncate_components(&self, cut: u32) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .filter(|t| t.comp < cut)
                .cloned()
                .collect(),
        }
    }

    pub fn max_component(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    pub fn scale(&self, c: &FieldElem) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mon: t.mon.clone(),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    /// Multiplication by a monomial preserves the term order.
    pub fn mul_term(&self, mon: &Monomial, c: &FieldElem) -> ModVec {
        if c.is_zero() {
            return ModVec::zero();
        }
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mon: t.mon.mul(mon),
                    coeff: t.coeff.mul(c),
                })
                .collect(),
        }
    }

    pub fn add(&self, ring: &PolyRing, other: &ModVec) -> ModVec {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (a, b) = (&self.terms, &other.terms);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match cmp_term(ring, (&a[i].mon, a[i].comp), (&b[j].mon, b[j].comp)) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = a[i].coeff.add(&b[j].coeff);
                    if !c.is_zero() {
                        out.push(ModTerm {
                            comp: a[i].comp,
                            mon: a[i].mon.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        ModVec { terms: out }
    }

    /// `self - c * x^mon * other`.
    pub fn sub_scaled(
        &self,
        ring: &PolyRing,
        other: &ModVec,
        mon: &Monomial,
        c: &FieldElem,
    ) -> ModVec {
        self.add(ring, &other.mul_term(mon, &c.neg()))
    }

    /// The common weighted degree of all terms under shifts, if homogeneous.
    pub fn homogeneous_degree(&self, weights: &[i64], shifts: &[i64]) -> Option<i64> {
        let mut deg = None;
        for t in &self.terms {
            let d = t.mon.weighted_degree(weights) + shifts[t.comp as usize];
            match deg {
                None => deg = Some(d),
                Some(e) if e != d => return None,
                _ => {}
            }
        }
        deg
    }
}

/// A geobucket accumulator for cancellation-heavy vector reductions:
/// terms are spread over buckets of geometrically growing sizes, so each
/// reduction step costs the reducer's tail plus a merge carry instead of
/// a full-vector merge. Buckets are kept ascending; the true lead is the
/// maximum over bucket tails with equal terms combined.
struct Geobucket {
    buckets: Vec<Vec<ModTerm>>,
}

const GEO_FACTOR: usize = 4;

impl Geobucket {
    fn new(v: ModVec) -> Geobucket {
        let mut terms = v.terms;
        terms.reverse(); // ascending
        Geobucket {
            buckets: if terms.is_empty() {
                Vec::new()
            } else {
                alloc::vec![terms]
            },
        }
    }

    fn add(&mut self, ring: &PolyRing, v: ModVec) {
        if v.terms.is_empty() {
            return;
        }
        let mut terms = v.terms;
        terms.reverse();
        // merge into the first bucket with comparable or larger capacity
        let mut cap = GEO_FACTOR;
        let mut idx = 0;
        while idx < self.buckets.len() && cap < terms.len() {
            cap *= GEO_FACTOR;
            idx += 1;
        }
        loop {
            if idx == self.buckets.len() {
                self.buckets.push(terms);
                return;
            }
            let merged = merge_ascending(ring, core::mem::take(&mut self.buckets[idx]), terms);
            if merged.len() <= cap || idx + 1 == self.buckets.len() {
                self.buckets[idx] = merged;
                if self.buckets[idx].is_empty() {
                    self.buckets.remove(idx);
                }
                return;
            }
            terms = merged;
            cap *= GEO_FACTOR;
            idx += 1;
        }
    }

    /// Pops the leading term (combining equal leads across buckets).
    fn pop_lead(&mut self, ring: &PolyRing) -> Option<ModTerm> {
        loop {
            let mut best: Option<usize> = None;
            for (i, b) in self.buckets.iter().enumerate() {
                let Some(t) = b.last() else { continue };
                match best {
                    None => best = Some(i),
                    Some(j) => {
                        let bj = self.buckets[j].last().unwrap();
                        if cmp_term(ring, (&t.mon, t.comp), (&bj.mon, bj.comp))
                            == Ordering::Greater
                        {
                            best = Some(i);
                        }
                    }
                }
            }
            let first = best?;
            let mut lead = self.buckets[first].pop().unwrap();
            // combine equal leads from the other buckets
            let mut i = 0;
            while i < self.buckets.len() {
                if i != first {
                    if let Some(t) = self.buckets[i].last() {
                        if t.comp == lead.comp && t.mon == lead.mon {
                            let t = self.buckets[i].pop().unwrap();
                            lead.coeff = lead.coeff.add(&t.coeff);
                        }
                    }
                }
                i += 1;
            }
            self.buckets.retain(|b| !b.is_empty());
            if !lead.coeff.is_zero() {
                return Some(lead);
            }
        }
    }
}

fn merge_ascending(ring: &PolyRing, a: Vec<ModTerm>, b: Vec<ModTerm>) -> Vec<ModTerm> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match cmp_term(ring, (&a[i].mon, a[i].comp), (&b[j].mon, b[j].comp)) {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                let c = a[i].coeff.add(&b[j].coeff);
                if !c.is_zero() {
                    out.push(ModTerm {
                        comp: a[i].comp,
                        mon: a[i].mon.clone(),
                        coeff: c,
                    });
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

#[derive(Clone, Debug)]
pub struct GbEntry {
    pub vec: ModVec,
    /// Expression of `vec` in the original generators, when tracking.
    pub track: Option<ModVec>,
    lead_comp: u32,
    lead_mon: Monomial,
}

impl GbEntry {
    /// Everything below the leading term, scaled and shifted, negated.
    fn scaled_tail(&self, mon: &Monomial, coeff: &FieldElem) -> ModVec {
        let neg = coeff.neg();
        ModVec {
            terms: self.vec.terms[1..]
                .iter()
                .map(|t| ModTerm {
                    comp: t.comp,
                    mon: t.mon.mul(mon),
                    coeff: t.coeff.mul(&neg),
                })
                .collect(),
        }
    }
}

fn poly_scaled_tail(comp: u32, g: &Polynomial, mon: &Monomial, coeff: &FieldElem) -> ModVec {
    let neg = coeff.neg();
    ModVec {
        terms: g.terms[1..]
            .iter()
            .map(|(m, c)| ModTerm {
                comp,
                mon: m.mul(mon),
                coeff: c.mul(&neg),
            })
            .collect(),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum PairRight {
    Basis(usize),
    Ring(usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
struct PairKey {
    deg: u64,
    exps: Vec<u32>,
    comp: u32,
    left: usize,
    right: usize,
    ring_pair: bool,
}

impl Ord for PairKey {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.deg, &self.exps, self.comp, self.ring_pair, self.left, self.right).cmp(&(
            other.deg,
            &other.exps,
            other.comp,
            other.ring_pair,
            other.left,
            other.right,
        ))
    }
}

impl PartialOrd for PairKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq)]
struct Pair {
    key: PairKey,
    left: usize,
    right: PairRight,
    lcm: Monomial,
}

impl Ord for Pair {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Pair {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Options for a Groebner run.
#[derive(Clone, Copy, Default)]
pub struct GbOptions {
    pub tracked: bool,
    pub collect_syzygies: bool,
}

/// An incremental Buchberger engine over a fixed ring context.
pub struct GbBuilder<'a> {
    ctx: RingCtx<'a>,
    rank: u32,
    opts: GbOptions,
    entries: Vec<GbEntry>,
    alive: Vec<bool>,
    by_comp: BTreeMap<u32, Vec<usize>>,
    heap: BinaryHeap<Reverse<Pair>>,
    live_pairs: BTreeSet<(usize, usize)>,
    syzygies: Vec<ModVec>,
    ngens: u32,
}

impl<'a> GbBuilder<'a> {
    pub fn new(ctx: RingCtx<'a>, rank: u32, opts: GbOptions) -> Self {
        GbBuilder {
            ctx,
            rank,
            opts,
            entries: Vec::new(),
            alive: Vec::new(),
            by_comp: BTreeMap::new(),
            heap: BinaryHeap::new(),
            live_pairs: BTreeSet::new(),
            syzygies: Vec::new(),
            ngens: 0,
        }
    }

    pub fn rank(&self) -> u32 {
        self.rank
    }

    fn track_needed(&self) -> bool {
        self.opts.tracked || self.opts.collect_syzygies
    }

    /// Feeds one generator; returns false when it reduced to zero.
    pub fn add_generator(&mut self, v: ModVec) -> bool {
        let g = self.ngens;
        self.ngens += 1;
        let track = if self.track_needed() {
            Some(ModVec::unit(g, self.ctx.ring))
        } else {
            None
        };
        let (nf, track) = self.reduce(v, track);
        if nf.is_zero() {
            if self.opts.collect_syzygies {
                if let Some(t) = track {
                    if !t.is_zero() {
                        self.syzygies.push(t);
                    }
                }
            }
            return false;
        }
        self.insert(nf, track);
        true
    }

    /// Runs Buchberger to completion on the pending pairs.
    pub fn run(&mut self) {
        while let Some(Reverse(pair)) = self.heap.pop() {
            match pair.right {
                PairRight::Basis(j) => {
                    let i = pair.left;
                    if !self.live_pairs.remove(&(i, j)) {
                        continue; // cancelled by the chain criterion
                    }
                    if !self.alive[i] || !self.alive[j] {
                        continue;
                    }
                    let (s, t) = self.s_pair(i, j, &pair.lcm);
                    self.process(s, t);
                }
                PairRight::Ring(r) => {
                    let i = pair.left;
                    if !self.alive[i] {
                        continue;
                    }
                    let (s, t) = self.ring_pair(i, r, &pair.lcm);
                    self.process(s, t);
                }
            }
        }
    }

    fn process(&mut self, s: ModVec, track: Option<ModVec>) {
        let (nf, track) = self.reduce(s, track);
        if nf.is_zero() {
            if self.opts.collect_syzygies {
                if let Some(t) = track {
                    if !t.is_zero() {
                        self.syzygies.push(t);
                    }
                }
            }
        } else {
            self.insert(nf, track);
        }
    }

    fn s_pair(&self, i: usize, j: usize, lcm: &Monomial) -> (ModVec, Option<ModVec>) {
        let (ei, ej) = (&self.entries[i], &self.entries[j]);
        let ui = ei.lead_mon.quotient_of(lcm);
        let uj = ej.lead_mon.quotient_of(lcm);
        let one = self.ctx.ring.field.one();
        let s = ei
            .vec
            .mul_term(&ui, &one)
            .sub_scaled(self.ctx.ring, &ej.vec, &uj, &one);
        let t = match (&ei.track, &ej.track) {
            (Some(ti), Some(tj)) => Some(
                ti.mul_term(&ui, &one)
                    .sub_scaled(self.ctx.ring, tj, &uj, &one),
            ),
            _ => None,
        };
        (s, t)
    }

    fn ring_pair(&self, i: usize, r: usize, lcm: &Monomial) -> (ModVec, Option<ModVec>) {
        let ei = &self.entries[i];
        let g = &self.ctx.ring_gb[r];
        let ui = ei.lead_mon.quotient_of(lcm);
        let ug = g.lead_monomial().unwrap().quotient_of(lcm);
        let one = self.ctx.ring.field.one();
        let shifted = ModVec::from_poly(ei.lead_comp, g).mul_term(&ug, &one);
        let s = ei
            .vec
            .mul_term(&ui, &one)
            .add(self.ctx.ring, &shifted.scale(&one.neg()));
        let t = ei.track.as_ref().map(|ti| ti.mul_term(&ui, &one));
        (s, t)
    }

    fn insert(&mut self, nf: ModVec, track: Option<ModVec>) {
        let lead = nf.lead().expect("nonzero").clone();
        let inv = lead.coeff.inv().expect("nonzero lead");
        let vec = nf.scale(&inv);
        let track = track.map(|t| t.scale(&inv));
        let t_idx = self.entries.len();
        let lead_mon = lead.mon;
        let lead_comp = lead.comp;

        // Chain criterion on queued pairs: a new lead dividing an old lcm
        // strictly (on both sides) retires that pair.
        let peers: Vec<usize> = self
            .by_comp
            .get(&lead_comp)
            .map(|v| v.iter().copied().filter(|&i| self.alive[i]).collect())
            .unwrap_or_default();
        let mut cancelled: Vec<(usize, usize)> = Vec::new();
        for &(i, j) in self.live_pairs.iter() {
            if self.entries[i].lead_comp != lead_comp {
                continue;
            }
            let lcm_ij = self.entries[i].lead_mon.lcm(&self.entries[j].lead_mon);
            if lead_mon.divides(&lcm_ij)
                && self.entries[i].lead_mon.lcm(&lead_mon) != lcm_ij
                && self.entries[j].lead_mon.lcm(&lead_mon) != lcm_ij
            {
                cancelled.push((i, j));
            }
        }
        for key in cancelled {
            self.live_pairs.remove(&key);
        }

        // Candidate pairs with the new element, pruned by the lcm criteria.
        let mut cand: Vec<(usize, Monomial)> = peers
            .iter()
            .map(|&i| (i, self.entries[i].lead_mon.lcm(&lead_mon)))
            .collect();
        let product_ok = self.rank == 1 && !self.track_needed();
        cand.retain(|(i, _)| {
            !(product_ok && self.entries[*i].lead_mon.is_coprime_with(&lead_mon))
        });
        let mut keep = alloc::vec![true; cand.len()];
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in 0..cand.len() {
                if a == b || !keep[b] {
                    continue;
                }
                if cand[b].1 != cand[a].1 && cand[b].1.divides(&cand[a].1) {
                    keep[a] = false;
                    break;
                }
            }
        }
        // Among equal lcms keep the first.
        for a in 0..cand.len() {
            if !keep[a] {
                continue;
            }
            for b in (a + 1)..cand.len() {
                if keep[b] && cand[a].1 == cand[b].1 {
                    keep[b] = false;
                }
            }
        }

        for (k, (i, lcm)) in cand.into_iter().enumerate() {
            if !keep[k] {
                continue;
            }
            self.live_pairs.insert((i, t_idx));
            self.heap.push(Reverse(Pair {
                key: PairKey {
                    deg: lcm.total_degree(),
                    exps: lcm.exps().to_vec(),
                    comp: lead_comp,
                    left: i,
                    right: t_idx,
                    ring_pair: false,
                },
                left: i,
                right: PairRight::Basis(t_idx),
                lcm,
            }));
        }

        // Ring pairs, pruned by the same lcm criteria: a dropped pair's
        // chain runs through a kept ring pair and a ring-ring pair, and
        // the latter reduces to zero through the ring basis alone.
        let mut ring_cand: Vec<(usize, Monomial)> = self
            .ctx
            .ring_gb
            .iter()
            .enumerate()
            .map(|(r, g)| {
                let gm = g.lead_monomial().expect("ring basis has no zeros");
                (r, gm.lcm(&lead_mon))
            })
            .collect();
        let mut keep_ring = alloc::vec![true; ring_cand.len()];
        for a in 0..ring_cand.len() {
            if !keep_ring[a] {
                continue;
            }
            for b in 0..ring_cand.len() {
                if a == b || !keep_ring[b] {
                    continue;
                }
                if ring_cand[b].1 != ring_cand[a].1 && ring_cand[b].1.divides(&ring_cand[a].1) {
                    keep_ring[a] = false;
                    break;
                }
            }
        }
        for a in 0..ring_cand.len() {
            if !keep_ring[a] {
                continue;
            }
            for b in (a + 1)..ring_cand.len() {
                if keep_ring[b] && ring_cand[a].1 == ring_cand[b].1 {
                    keep_ring[b] = false;
                }
            }
        }
        for (k, (r, lcm)) in ring_cand.drain(..).enumerate() {
            if !keep_ring[k] {
                continue;
            }
            self.heap.push(Reverse(Pair {
                key: PairKey {
                    deg: lcm.total_degree(),
                    exps: lcm.exps().to_vec(),
                    comp: lead_comp,
                    left: t_idx,
                    right: r,
                    ring_pair: true,
                },
                left: t_idx,
                right: PairRight::Ring(r),
                lcm,
            }));
        }

        self.by_comp.entry(lead_comp).or_default().push(t_idx);
        self.entries.push(GbEntry {
            vec,
            track,
            lead_comp,
            lead_mon,
        });
        self.alive.push(true);
    }

    /// Full normal form against ring reducers and the live basis.
    /// The returned track satisfies `input = nf + combination(track)` for
    /// pair bookkeeping; see `Lifter` for the external-lift convention.
    fn reduce(&self, v: ModVec, track: Option<ModVec>) -> (ModVec, Option<ModVec>) {
        reduce_core(
            self.ctx,
            &self.entries,
            Some(&self.alive),
            &self.by_comp,
            v,
            track,
        )
    }

    /// Normal form of an external vector against the current basis.
    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        self.reduce(v.clone(), None).0
    }

    /// Finishes the run: minimalizes leads, tail-reduces, sorts canonically.
    pub fn finish(mut self) -> ModGb {
        self.run();
        // Minimalize: kill entries whose lead is divisible by another live lead.
        for i in 0..self.entries.len() {
            if !self.alive[i] {
                continue;
            }
            for j in 0..self.entries.len() {
                if i == j || !self.alive[j] {
                    continue;
                }
                let (ei, ej) = (&self.entries[i], &self.entries[j]);
                if ei.lead_comp == ej.lead_comp && ej.lead_mon.divides(&ei.lead_mon) {
                    self.alive[i] = false;
                    break;
                }
            }
        }
        // Tail-reduce survivors against each other.
        let live: Vec<usize> = (0..self.entries.len()).filter(|&i| self.alive[i]).collect();
        for &i in &live {
            self.alive[i] = false;
            let e = self.entries[i].clone();
            let (nf, track) = self.reduce(e.vec, e.track);
            self.alive[i] = true;
            debug_assert!(!nf.is_zero());
            let lead = nf.lead().unwrap().clone();
            let inv = lead.coeff.inv().unwrap();
            self.entries[i] = GbEntry {
                vec: nf.scale(&inv),
                track: track.map(|t| t.scale(&inv)),
                lead_comp: lead.comp,
                lead_mon: lead.mon,
            };
        }
        let ring = self.ctx.ring;
        let mut entries: Vec<GbEntry> = live.into_iter().map(|i| self.entries[i].clone()).collect();
        entries.sort_by(|a, b| {
            cmp_term(ring, (&b.lead_mon, b.lead_comp), (&a.lead_mon, a.lead_comp))
        });
        let mut by_comp: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (i, e) in entries.iter().enumerate() {
            by_comp.entry(e.lead_comp).or_default().push(i);
        }
        ModGb {
            rank: self.rank,
            ngens: self.ngens,
            entries,
            syzygies: self.syzygies,
            by_comp,
        }
    }
}

/// A finished (reduced, monic, canonically sorted) module Groebner basis.
#[derive(Clone, Debug)]
pub struct ModGb {
    pub rank: u32,
    pub ngens: u32,
    pub entries: Vec<GbEntry>,
    /// Syzygies of the original generators collected during the run
    /// (only populated when `collect_syzygies` was set).
    pub syzygies: Vec<ModVec>,
    by_comp: BTreeMap<u32, Vec<usize>>,
}

impl ModGb {
    pub fn normal_form(&self, ctx: RingCtx<'_>, v: &ModVec) -> ModVec {
        self.nf_inner(ctx, v.clone(), None).0
    }

    pub fn contains(&self, ctx: RingCtx<'_>, v: &ModVec) -> bool {
        self.normal_form(ctx, v).is_zero()
    }

    /// Leading module terms `(component, monomial)` of the basis.
    pub fn lead_terms(&self) -> impl Iterator<Item = (u32, &Monomial)> {
        self.entries.iter().map(|e| (e.lead_comp, &e.lead_mon))
    }

    fn nf_inner(
        &self,
        ctx: RingCtx<'_>,
        v: ModVec,
        track: Option<ModVec>,
    ) -> (ModVec, Option<ModVec>) {
        reduce_core(ctx, &self.entries, None, &self.by_comp, v, track)
    }
}

/// Shared reduction loop: full normal form through a geobucket, reducing
/// by the ring basis first and the module basis second (first match in
/// index order).
fn reduce_core(
    ctx: RingCtx<'_>,
    entries: &[GbEntry],
    alive: Option<&[bool]>,
    by_comp: &BTreeMap<u32, Vec<usize>>,
    v: ModVec,
    mut track: Option<ModVec>,
) -> (ModVec, Option<ModVec>) {
    let ring = ctx.ring;
    let mut work = Geobucket::new(v);
    let mut done: Vec<ModTerm> = Vec::new();
    'outer: while let Some(lead) = work.pop_lead(ring) {
        for g in ctx.ring_gb {
            let gm = g.lead_monomial().unwrap();
            if gm.divides(&lead.mon) {
                let shift = gm.quotient_of(&lead.mon);
                work.add(ring, poly_scaled_tail(lead.comp, g, &shift, &lead.coeff));
                continue 'outer;
            }
        }
        if let Some(idxs) = by_comp.get(&lead.comp) {
            for &i in idxs {
                if alive.map(|a| a[i]).unwrap_or(true) {
                    let e = &entries[i];
                    if e.lead_mon.divides(&lead.mon) {
                        let shift = e.lead_mon.quotient_of(&lead.mon);
                        work.add(ring, e.scaled_tail(&shift, &lead.coeff));
                        if let (Some(t), Some(et)) = (track.as_mut(), e.track.as_ref()) {
                            *t = t.sub_scaled(ring, et, &shift, &lead.coeff);
                        }
                        continue 'outer;
                    }
                }
            }
        }
        done.push(lead);
    }
    (ModVec { terms: done }, track)
}

/// Computes the reduced Groebner basis of the submodule generated by `gens`.
pub fn module_gb(ctx: RingCtx<'_>, rank: u32, gens: &[ModVec]) -> ModGb {
    let mut b = GbBuilder::new(ctx, rank, GbOptions::default());
    for g in gens {
        b.add_generator(g.clone());
        b.run();
    }
    b.finish()
}

/// Groebner basis plus a generating set for the syzygies of `gens`
/// (as vectors over the generator indices).
pub fn gb_with_syzygies(ctx: RingCtx<'_>, rank: u32, gens: &[ModVec]) -> ModGb {
    let mut b = GbBuilder::new(
        ctx,
        rank,
        GbOptions {
            tracked: true,
            collect_syzygies: true,
        },
    );
    for g in gens {
        b.add_generator(g.clone());
        b.run();
    }
    b.finish()
}

/// Expresses vectors as combinations of a fixed generating set.
pub struct Lifter {
    gb: ModGb,
}

impl Lifter {
    pub fn new(ctx: RingCtx<'_>, rank: u32, gens: &[ModVec]) -> Lifter {
        let mut b = GbBuilder::new(
            ctx,
            rank,
            GbOptions {
                tracked: true,
                collect_syzygies: false,
            },
        );
        for g in gens {
            b.add_generator(g.clone());
            b.run();
        }
        Lifter { gb: b.finish() }
    }

    /// Coefficients `c` with `v = sum c_k gen_k` in the quotient, if `v`
    /// lies in the submodule.
    pub fn lift(&self, ctx: RingCtx<'_>, v: &ModVec) -> Option<Vec<Polynomial>> {
        let track = Some(ModVec::zero());
        let (nf, track) = self.gb.nf_inner(ctx, v.clone(), track);
        if !nf.is_zero() {
            return None;
        }
        // nf_inner keeps `v - combination(track)` invariant, so v = -track.
        let track = track.unwrap();
        let coeffs = track.scale(&ctx.ring.field.one().neg());
        Some(coeffs.to_polys(self.gb.ngens as usize))
    }

    pub fn gb(&self) -> &ModGb {
        &self.gb
    }
}

/// Greedily drops generators lying in the span of the ones kept so far.
///
/// `order` gives the processing sequence (ascending degree for graded
/// inputs makes the result a minimal generating set over graded-local
/// rings). Returns the kept indices in processing order.
pub fn prune_generators(
    ctx: RingCtx<'_>,
    rank: u32,
    gens: &[ModVec],
    order: &[usize],
) -> Vec<usize> {
    let mut b = GbBuilder::new(ctx, rank, GbOptions::default());
    let mut kept = Vec::new();
    for &i in order {
        if b.add_generator(gens[i].clone()) {
            b.run();
            kept.push(i);
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;
    use crate::monomial::MonomialOrder;
    use crate::text::parse_poly;
    use alloc::string::ToString;

    fn ring_xy() -> PolyRing {
        PolyRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string(), "y".to_string()],
            MonomialOrder::grevlex(2),
        )
        .unwrap()
    }

    #[test]
    fn koszul_syzygies_of_monomials() {
        let ring = ring_xy();
        let ctx = RingCtx {
            ring: &ring,
            ring_gb: &[],
        };
        let gens: Vec<ModVec> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| ModVec::from_poly(0, &parse_poly(&ring, s).unwrap()))
            .collect();
        let out = gb_with_syzygies(ctx, 1, &gens);
        assert_eq!(out.entries.len(), 3);
        // Syzygies generate the rank-2 module spanned by (y,-x,0),(0,y,-x).
        let expect = [
            ModVec::from_polys(
                &ring,
                &[
                    parse_poly(&ring, "y").unwrap(),
                    ring.neg(&parse_poly(&ring, "x").unwrap()),
                    Polynomial::zero(),
                ],
            ),
            ModVec::from_polys(
                &ring,
                &[
                    Polynomial::zero(),
                    parse_poly(&ring, "y").unwrap(),
                    ring.neg(&parse_poly(&ring, "x").unwrap()),
                ],
            ),
        ];
        let syz_gb = module_gb(ctx, 3, &out.syzygies);
        for e in &expect {
            assert!(syz_gb.contains(ctx, e));
        }
        let expect_gb = module_gb(ctx, 3, &expect);
        for s in &out.syzygies {
            assert!(expect_gb.contains(ctx, s));
        }
    }

    #[test]
    fn quotient_ring_syzygy_of_x() {
        // Over Q[x]/(x^3), the annihilator of x is (x^2).
        let ring = PolyRing::new(
            Field::Rationals,
            alloc::vec!["x".to_string()],
            MonomialOrder::grevlex(1),
        )
        .unwrap();
        let x3 = parse_poly(&ring, "x^3").unwrap();
        let gb = alloc::vec![x3];
        let ctx = RingCtx {
            ring: &ring,
            ring_gb: &gb,
        };
        let gens = alloc::vec![ModVec::from_poly(0, &parse_poly(&ring, "x").unwrap())];
        let out = gb_with_syzygies(ctx, 1, &gens);
        let x2 = ModVec::from_poly(0, &parse_poly(&ring, "x^2").unwrap());
        let syz_gb = module_gb(ctx, 1, &out.syzygies);
        assert!(syz_gb.contains(ctx, &x2));
        for s in &out.syzygies {
            // every syzygy times x is divisible by x^3
            let prod = s.component(0);
            let times_x = ring.mul(&prod, &parse_poly(&ring, "x").unwrap());
            let nf = crate::groebner::normal_form(&ring, &times_x, ctx.ring_gb);
            assert!(nf.is_zero());
        }
    }

    #[test]
    fn lifter_expresses_members() {
        let ring = ring_xy();
        let ctx = RingCtx {
            ring: &ring,
            ring_gb: &[],
        };
        let gens: Vec<ModVec> = ["x^2", "x*y", "y^2"]
            .iter()
            .map(|s| ModVec::from_poly(0, &parse_poly(&ring, s).unwrap()))
            .collect();
        let lifter = Lifter::new(ctx, 1, &gens);
        let f = parse_poly(&ring, "x^3+2*x*y^2").unwrap();
        let coeffs = lifter.lift(ctx, &ModVec::from_poly(0, &f)).unwrap();
        let mut acc = Polynomial::zero();
        for (c, g) in coeffs.iter().zip(["x^2", "x*y", "y^2"]) {
            acc = ring.add(&acc, &ring.mul(c, &parse_poly(&ring, g).unwrap()));
        }
        assert_eq!(acc, f);
        assert!(lifter
            .lift(ctx, &ModVec::from_poly(0, &parse_poly(&ring, "x").unwrap()))
            .is_none());
    }

    #[test]
    fn prune_drops_redundant_generators() {
        let ring = ring_xy();
        let ctx = RingCtx {
            ring: &ring,
            ring_gb: &[],
        };
        let gens: Vec<ModVec> = ["x", "y", "x+y", "x^2"]
            .iter()
            .map(|s| ModVec::from_poly(0, &parse_poly(&ring, s).unwrap()))
            .collect();
        let kept = prune_generators(ctx, 1, &gens, &[0, 1, 2, 3]);
        assert_eq!(kept, alloc::vec![0, 1]);
    }
}
