use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::cache::SupportCache;
use super::lr::{tensor_expand, tensor_expand_within, weyl_dimension};
use super::partition::{cauchy_summands, Partition};
use crate::error::{Error, Result};
use crate::invariants::Block;
use crate::kl::kac_coefficient_in_block;
use crate::weights::Weight;

/// One `{"mult": …, "weight": …}` entry of the JSON form of a character.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Term {
    pub mult: i64,
    pub weight: Weight,
}

/// A virtual g₀-character `Σ m_α ch L₀(α)` over dominant `α`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Term>", into = "Vec<Term>")]
pub struct G0Character {
    mults: BTreeMap<Weight, i64>,
}

impl TryFrom<Vec<Term>> for G0Character {
    type Error = Error;

    fn try_from(terms: Vec<Term>) -> Result<Self> {
        G0Character::from_terms(terms.into_iter().map(|t| (t.weight, t.mult)))
    }
}

impl From<G0Character> for Vec<Term> {
    fn from(c: G0Character) -> Self {
        c.mults
            .into_iter()
            .map(|(weight, mult)| Term { weight, mult })
            .collect()
    }
}

/// Sort key for "largest weight": level, then `coeff_L`, then `coeff_R`.
fn leading_key(w: &Weight) -> (i64, Vec<i64>, Vec<i64>) {
    (w.level(), w.coeff_l(), w.coeff_r())
}

impl G0Character {
    pub fn new() -> Self {
        Self::default()
    }

    /// Sums repeated weights; every weight must be dominant and of one shape.
    pub fn from_terms(terms: impl IntoIterator<Item = (Weight, i64)>) -> Result<Self> {
        let mut c = G0Character::new();
        for (w, k) in terms {
            c.add_term(w, k)?;
        }
        Ok(c)
    }

    pub fn add_term(&mut self, w: Weight, k: i64) -> Result<()> {
        w.require_dominant()?;
        if let Some((first, _)) = self.mults.first_key_value() {
            if first.shape() != w.shape() {
                return Err(Error::Dimension(format!(
                    "{} and {} belong to different algebras",
                    first.to_canonical_string(),
                    w.to_canonical_string()
                )));
            }
        }
        self.add_unchecked(w, k);
        Ok(())
    }

    fn add_unchecked(&mut self, w: Weight, k: i64) {
        if k == 0 {
            return;
        }
        match self.mults.entry(w) {
            Entry::Vacant(e) => {
                e.insert(k);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += k;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn get(&self, w: &Weight) -> i64 {
        self.mults.get(w).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.mults.iter().map(|(w, &k)| (w, k))
    }

    pub fn len(&self) -> usize {
        self.mults.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mults.is_empty()
    }

    /// `(m, n)` of the weights, if any.
    pub fn shape(&self) -> Option<(usize, usize)> {
        self.mults.keys().next().map(Weight::shape)
    }

    /// `self += k · other`.
    pub fn add_scaled(&mut self, other: &G0Character, k: i64) -> Result<()> {
        if let (Some(a), Some(b)) = (self.shape(), other.shape()) {
            if a != b {
                return Err(Error::Dimension("characters of different algebras".into()));
            }
        }
        for (w, v) in other.iter() {
            self.add_unchecked(w.clone(), k * v);
        }
        Ok(())
    }

    /// The largest weight: maximal level, ties broken lexicographically on
    /// `(coeff_L, coeff_R)`.
    pub fn leading(&self) -> Option<(&Weight, i64)> {
        self.iter()
            .max_by(|a, b| leading_key(a.0).cmp(&leading_key(b.0)))
    }

    /// `Σ m_α dim L₀(α)`.
    pub fn dimension(&self) -> Result<i128> {
        self.iter()
            .map(|(w, k)| Ok(k as i128 * g0_dimension(w)? as i128))
            .sum()
    }
}

/// `dim L₀(λ)` for gl(m) ⊕ gl(n).
pub fn g0_dimension(w: &Weight) -> Result<u128> {
    Ok(weyl_dimension(w.l())? * weyl_dimension(&w.coeff_r())?)
}

fn odd_weight(even: Vec<i64>, coeff_r: &[i64]) -> Weight {
    Weight::new(even, coeff_r.iter().map(|x| -x).collect()).expect("shape comes from a weight")
}

fn collect_terms(parts: Vec<Vec<(Weight, i64)>>) -> G0Character {
    let mut c = G0Character::new();
    for part in parts {
        for (w, k) in part {
            c.add_unchecked(w, k);
        }
    }
    c
}

/// `ch K(μ) = Σ_α c_{μ,α} ch L₀(α)`: each Cauchy summand `γ` contributes
/// `L₀(μ) ⊗ S_γ(V₀)* ⊗ S_{γ′}(V₁)`.
pub fn kac_g0_character(mu: &Weight) -> Result<G0Character> {
    mu.require_dominant()?;
    let (m, n) = mu.shape();
    let (l, r) = (mu.coeff_l(), mu.coeff_r());
    let parts = cauchy_summands(m, n)
        .par_iter()
        .map(|(g, gc)| {
            let even = tensor_expand(&l, g, true)?;
            let odd = tensor_expand(&r, gc, false)?;
            let mut out = Vec::with_capacity(even.len() * odd.len());
            for (a, ca) in &even {
                for (b, cb) in &odd {
                    out.push((odd_weight(a.clone(), b), (ca * cb) as i64));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect_terms(parts))
}

/// `μ ↦ c_{μ,α}`: every dominant `μ` whose Kac module contains `L₀(α)`.
pub fn kac_support(alpha: &Weight) -> Result<G0Character> {
    alpha.require_dominant()?;
    let (m, n) = alpha.shape();
    let (l, r) = (alpha.coeff_l(), alpha.coeff_r());
    let parts = cauchy_summands(m, n)
        .par_iter()
        .map(|(g, gc)| {
            let even = tensor_expand(&l, g, false)?;
            let odd = tensor_expand(&r, gc, true)?;
            let mut out = Vec::with_capacity(even.len() * odd.len());
            for (a, ca) in &even {
                for (b, cb) in &odd {
                    out.push((odd_weight(a.clone(), b), (ca * cb) as i64));
                }
            }
            Ok(out)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(collect_terms(parts))
}

fn kac_cached(mu: &Weight, cache: Option<&SupportCache>) -> Result<G0Character> {
    if let Some(c) = cache.and_then(|c| c.get_kac(mu)) {
        return Ok(c);
    }
    let ch = kac_g0_character(mu)?;
    if let Some(c) = cache {
        c.insert_kac(mu, ch.clone());
    }
    Ok(ch)
}

/// Restricts candidate weights to one block below a fixed top: one side of a
/// weight determines its atypical tuple.
struct BlockFilter<'a> {
    block: &'a Block,
    top: &'a [i64],
}

impl BlockFilter<'_> {
    fn key(&self, vals: Vec<i64>, own: &[i64], other: &[i64]) -> Option<Vec<i64>> {
        let mut own_seen = 0;
        let mut rest = Vec::with_capacity(self.top.len());
        for v in vals {
            if own.contains(&v) {
                own_seen += 1;
            } else if other.contains(&v) {
                return None;
            } else {
                rest.push(v);
            }
        }
        if own_seen != own.len() || rest.len() != self.top.len() {
            return None;
        }
        rest.sort_unstable();
        rest.iter()
            .zip(self.top)
            .all(|(a, t)| a <= t)
            .then_some(rest)
    }

    fn even_key(&self, even: &[i64]) -> Option<Vec<i64>> {
        let m = even.len() as i64;
        let vals = even
            .iter()
            .enumerate()
            .map(|(i, x)| x + m - i as i64)
            .collect();
        self.key(vals, self.block.typ0(), self.block.typ1())
    }

    fn odd_key(&self, coeff_r: &[i64]) -> Option<Vec<i64>> {
        let vals = coeff_r
            .iter()
            .enumerate()
            .map(|(j, x)| j as i64 + 1 - x)
            .collect();
        self.key(vals, self.block.typ1(), self.block.typ0())
    }
}

/// For one side of `β` and every summand index, the atypical tuples of the
/// block weights reached by tensoring upwards, with multiplicities.
type SideTable = Vec<(usize, HashMap<Vec<i64>, u64>)>;

type Expand<'a> = dyn Fn(&[i64], &Partition) -> Result<Vec<(Vec<i64>, u64)>> + Sync + 'a;

/// `expand(hw, p)` lists the side weights of `μ` over which summand `p`
/// carries `hw`; `key` reads off the atypical tuple.
fn side_tables(
    sides: Vec<Vec<i64>>,
    parts: &[Partition],
    expand: &Expand<'_>,
    key: &(dyn Fn(&[i64]) -> Option<Vec<i64>> + Sync),
) -> Result<HashMap<Vec<i64>, SideTable>> {
    sides
        .into_par_iter()
        .map(|hw| {
            let mut table = Vec::new();
            for (idx, p) in parts.iter().enumerate() {
                let mut map = HashMap::new();
                for (v, c) in expand(&hw, p)? {
                    if let Some(k) = key(&v) {
                        *map.entry(k).or_insert(0) += c;
                    }
                }
                if !map.is_empty() {
                    table.push((idx, map));
                }
            }
            Ok((hw, table))
        })
        .collect()
}

fn neg_rev(v: &[i64]) -> Vec<i64> {
    v.iter().rev().map(|x| -x).collect()
}

/// `ch L(λ)` as a g₀-character.
///
/// The support lies in that of `K(λ)`. For every `β` there, the coefficient
/// is `Σ_μ K_{λ,μ}(−1) c_{μ,β}` over `μ ⪯ λ` with `c_{μ,β} ≠ 0`.
pub fn irr_g0_character(lam: &Weight, cache: Option<&SupportCache>) -> Result<G0Character> {
    lam.require_dominant()?;
    if let Some(c) = cache.and_then(|c| c.get_irreducible(lam)) {
        return Ok(c);
    }
    let kac = kac_cached(lam, cache)?;
    let (block, top) = Block::of(lam)?;
    let ch = if top.is_empty() {
        kac
    } else {
        irr_from_kac(lam, &kac, &block, &top)?
    };
    if let Some(c) = cache {
        c.insert_irreducible(lam, ch.clone());
    }
    Ok(ch)
}

fn irr_from_kac(
    lam: &Weight,
    kac: &G0Character,
    block: &Block,
    top: &[i64],
) -> Result<G0Character> {
    let (m, n) = lam.shape();
    let (gammas, conjugates): (Vec<Partition>, Vec<Partition>) =
        cauchy_summands(m, n).into_iter().unzip();
    let filter = BlockFilter { block, top };
    let mut evens: Vec<Vec<i64>> = kac.iter().map(|(w, _)| w.coeff_l()).collect();
    let mut odds: Vec<Vec<i64>> = kac.iter().map(|(w, _)| w.coeff_r()).collect();
    evens.sort_unstable();
    evens.dedup();
    odds.sort_unstable();
    odds.dedup();
    log::debug!(
        "irreducible {}: {} Kac constituents, {}+{} distinct sides",
        lam.to_canonical_string(),
        kac.len(),
        evens.len(),
        odds.len()
    );
    // every μ ⪯ λ has μ⁰ ≤ λ⁰ and coeff_R(μ) ≥ coeff_R(λ) entrywise
    let even_cap = lam.coeff_l();
    let odd_cap = neg_rev(&lam.coeff_r());
    let even_tables = side_tables(
        evens,
        &gammas,
        &|hw, p| {
            Ok(tensor_expand_within(hw, p, &even_cap)?
                .into_iter()
                .collect())
        },
        &|v| filter.even_key(v),
    )?;
    let odd_tables = side_tables(
        odds,
        &conjugates,
        &|hw, p| {
            let up = tensor_expand_within(&neg_rev(hw), p, &odd_cap)?;
            Ok(up.into_iter().map(|(v, c)| (neg_rev(&v), c)).collect())
        },
        &|v| filter.odd_key(v),
    )?;

    let b_memo: RwLock<HashMap<Vec<i64>, i64>> = RwLock::new(HashMap::new());
    let b = |atyp: &Vec<i64>| -> Result<i64> {
        if let Some(&v) = b_memo.read().expect("memo lock").get(atyp) {
            return Ok(v);
        }
        let v = kac_coefficient_in_block(block, top, atyp)?;
        b_memo.write().expect("memo lock").insert(atyp.clone(), v);
        Ok(v)
    };

    let terms: Vec<(Weight, i64)> = kac
        .iter()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|(beta, _)| {
            let left = &even_tables[&beta.coeff_l()];
            let right = &odd_tables[&beta.coeff_r()];
            let mut c: HashMap<&Vec<i64>, i64> = HashMap::new();
            let (mut i, mut j) = (0, 0);
            while i < left.len() && j < right.len() {
                match left[i].0.cmp(&right[j].0) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        let (a, z) = (&left[i].1, &right[j].1);
                        let (small, large) = if a.len() <= z.len() { (a, z) } else { (z, a) };
                        for (k, x) in small {
                            if let Some(y) = large.get(k) {
                                *c.entry(k).or_insert(0) += (x * y) as i64;
                            }
                        }
                        i += 1;
                        j += 1;
                    }
                }
            }
            let mut total = 0;
            for (atyp, cm) in c {
                total += b(atyp)? * cm;
            }
            Ok((beta.clone(), total))
        })
        .collect::<Result<_>>()?;
    let mut ch = G0Character::new();
    for (w, k) in terms {
        ch.add_unchecked(w, k);
    }
    Ok(ch)
}

/// `Σ n_λ [L(λ)]`, stored and serialized like a [`G0Character`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Decomposition {
    terms: G0Character,
}

impl Decomposition {
    pub fn get(&self, w: &Weight) -> i64 {
        self.terms.get(w)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Weight, i64)> + '_ {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The terms as a plain character-shaped map.
    pub fn as_character(&self) -> &G0Character {
        &self.terms
    }

    /// `Σ n_λ ch L(λ)` as a g₀-character.
    pub fn reconstruct(&self, cache: Option<&SupportCache>) -> Result<G0Character> {
        let mut out = G0Character::new();
        for (w, k) in self.iter() {
            out.add_scaled(&irr_g0_character(w, cache)?, k)?;
        }
        Ok(out)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecomposeOptions {
    /// Greedy steps before the input is declared outside the span.
    pub max_iterations: usize,
}

impl Default for DecomposeOptions {
    fn default() -> Self {
        DecomposeOptions {
            max_iterations: 10_000,
        }
    }
}

pub fn decompose(module: &G0Character, cache: Option<&SupportCache>) -> Result<Decomposition> {
    decompose_with(module, cache, &DecomposeOptions::default())
}

/// Repeatedly removes `m_α ch L(α)` for the largest weight `α` left.
pub fn decompose_with(
    module: &G0Character,
    cache: Option<&SupportCache>,
    opts: &DecomposeOptions,
) -> Result<Decomposition> {
    let mut rest = module.clone();
    let mut out = G0Character::new();
    let mut steps = 0;
    while let Some((alpha, k)) = rest.leading() {
        if steps == opts.max_iterations {
            return Err(Error::NotInSpan(steps));
        }
        steps += 1;
        let alpha = alpha.clone();
        log::debug!("step {steps}: {} x {}", k, alpha.to_canonical_string());
        let irr = irr_g0_character(&alpha, cache)?;
        rest.add_scaled(&irr, -k)?;
        out.add_unchecked(alpha, k);
    }
    Ok(Decomposition { terms: out })
}
