//! Composition factors of Kac modules.
//!
//! The multiplicities `a_{λμ} = [K(λ) : L(μ)]` and the Kazhdan–Lusztig values
//! `b_{λμ} = K_{λ,μ}(−1)` are mutually inverse unitriangular matrices over the
//! block order. Every interval of that order is finite, so `a` is obtained by
//! back substitution,
//!
//! ```text
//! a_{λμ} = δ_{λμ} − Σ_{μ ≺ ν ⪯ λ} a_{λν} b_{νμ},
//! ```
//!
//! visiting `ν` from the top of the interval downwards.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::invariants::{leq, Block};
use crate::kl::kac_coefficient_in_block;
use crate::weights::Weight;

/// All `ν` with `μ ⪯ ν ⪯ λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInterval {
    pub lam: Weight,
    pub mu: Weight,
    pub members: Vec<Weight>,
}

/// Strictly increasing tuples `t` with `lower ≤ t ≤ upper` componentwise that
/// avoid the typical values of `block`.
fn box_tuples(block: &Block, lower: &[i64], upper: &[i64]) -> Vec<Vec<i64>> {
    fn rec(
        block: &Block,
        lower: &[i64],
        upper: &[i64],
        cur: &mut Vec<i64>,
        out: &mut Vec<Vec<i64>>,
    ) {
        let s = cur.len();
        if s == upper.len() {
            out.push(cur.clone());
            return;
        }
        let start = match cur.last() {
            Some(&p) => lower[s].max(p + 1),
            None => lower[s],
        };
        for v in start..=upper[s] {
            if block.is_typical_value(v) {
                continue;
            }
            cur.push(v);
            rec(block, lower, upper, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(
        block,
        lower,
        upper,
        &mut Vec::with_capacity(upper.len()),
        &mut out,
    );
    out
}

pub fn interval(mu: &Weight, lam: &Weight) -> Result<BlockInterval> {
    if !leq(mu, lam)? {
        return Err(Error::Incomparable(
            mu.to_canonical_string(),
            lam.to_canonical_string(),
        ));
    }
    let (block, top) = Block::of(lam)?;
    let (_, bottom) = Block::of(mu)?;
    let members = box_tuples(&block, &bottom, &top)
        .iter()
        .map(|t| block.weight(t))
        .collect::<Result<_>>()?;
    Ok(BlockInterval {
        lam: lam.clone(),
        mu: mu.clone(),
        members,
    })
}

/// Memo of `b` values for one block, keyed by pairs of atypical tuples.
#[derive(Default)]
struct KacCoefficients {
    memo: HashMap<(Vec<i64>, Vec<i64>), i64>,
}

impl KacCoefficients {
    fn get(&mut self, block: &Block, upper: &[i64], lower: &[i64]) -> Result<i64> {
        let key = (upper.to_vec(), lower.to_vec());
        if let Some(&b) = self.memo.get(&key) {
            return Ok(b);
        }
        let b = kac_coefficient_in_block(block, upper, lower)?;
        self.memo.insert(key, b);
        Ok(b)
    }
}

fn dominates(a: &[i64], b: &[i64]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

/// Computes `a_{top,ν}` for every tuple in `members`, which must be closed
/// upwards below `top`. Returns the nonzero values with their tuples, in
/// processing order.
fn multiplicities(
    block: &Block,
    top: &[i64],
    mut members: Vec<Vec<i64>>,
    b: &mut KacCoefficients,
) -> Result<Vec<(Vec<i64>, i64)>> {
    // a larger tuple in the order always has a larger sum
    members.sort_by_key(|t| std::cmp::Reverse(t.iter().sum::<i64>()));
    let mut found: Vec<(Vec<i64>, i64)> = Vec::new();
    for nu in members {
        let mut a = if nu == top { 1 } else { 0 };
        for (phi, a_phi) in &found {
            if dominates(phi, &nu) {
                a -= a_phi * b.get(block, phi, &nu)?;
            }
        }
        if a != 0 {
            found.push((nu, a));
        }
    }
    Ok(found)
}

/// `a_{λμ} = [K(λ) : L(μ)]`.
pub fn kac_irr_mult(lam: &Weight, mu: &Weight) -> Result<i64> {
    if lam.shape() != mu.shape() {
        return Err(Error::Dimension("weights of different shape".into()));
    }
    if !leq(mu, lam)? {
        return Ok(0);
    }
    let (block, top) = Block::of(lam)?;
    let (_, bottom) = Block::of(mu)?;
    let members = box_tuples(&block, &bottom, &top);
    let found = multiplicities(&block, &top, members, &mut KacCoefficients::default())?;
    Ok(found
        .iter()
        .find(|(t, _)| *t == bottom)
        .map_or(0, |(_, a)| *a))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorOptions {
    /// Extra room below `atyp(λ)_1 − r`; defaults to `r`.
    pub slack: Option<i64>,
    /// Number of widening rounds before giving up.
    pub max_rounds: usize,
}

impl Default for FactorOptions {
    fn default() -> Self {
        FactorOptions {
            slack: None,
            max_rounds: 32,
        }
    }
}

/// Composition factors of `K(λ)`, ordered by decreasing ρ-translate.
pub fn kac_composition_factors(lam: &Weight) -> Result<Vec<Weight>> {
    kac_composition_factors_with(lam, &FactorOptions::default())
}

pub fn kac_composition_factors_with(lam: &Weight, opts: &FactorOptions) -> Result<Vec<Weight>> {
    let (block, top) = Block::of(lam)?;
    let r = top.len() as i64;
    if r == 0 {
        return Ok(vec![lam.clone()]);
    }
    let slack = opts.slack.unwrap_or(r).max(0);
    let step = r.max(1);
    let mut b = KacCoefficients::default();
    let mut lower_bound = top[0] - r - slack;
    let mut previous: Option<Vec<(Vec<i64>, i64)>> = None;
    for _ in 0..opts.max_rounds {
        let lower = vec![lower_bound; top.len()];
        let found = multiplicities(&block, &top, box_tuples(&block, &lower, &top), &mut b)?;
        if previous.as_ref().is_some_and(|p| p.len() == found.len()) {
            return finish(&block, found);
        }
        previous = Some(found);
        lower_bound -= step;
    }
    Err(Error::ResourceCap(format!(
        "composition factors of {} did not stabilise after {} widening rounds",
        lam.to_canonical_string(),
        opts.max_rounds
    )))
}

fn finish(block: &Block, found: Vec<(Vec<i64>, i64)>) -> Result<Vec<Weight>> {
    let mut out = Vec::with_capacity(found.len());
    for (t, a) in found {
        let w = block.weight(&t)?;
        if a != 1 {
            return Err(Error::NotMultiplicityFree {
                factor: w.to_canonical_string(),
                mult: a,
            });
        }
        out.push(w);
    }
    out.sort_by(|x, y| {
        let (x, y) = (x.rho_translate(), y.rho_translate());
        (y.l(), y.r()).cmp(&(x.l(), x.r()))
    });
    Ok(out)
}
