//! Generalized Kazhdan–Lusztig polynomials `K_{λ,μ}(q)` of gl(m|n).
//!
//! For dominant `μ ⪯ λ` of atypicality `r`,
//!
//! ```text
//! K_{λ,μ}(q) = q^{|h(λ)| − |h(μ)|} Σ_{σ ∈ S^{λ,μ}} q^{−2 l(σ)}
//! ```
//!
//! where `S^{λ,μ}` holds the permutations σ of the atypical roots with
//! `atyp(μ) ≤ σ·atyp(λ)` componentwise that keep every strongly c-related pair
//! of roots in order, and `l` is the inversion count. `K_{λ,μ}(−1)` is the
//! coefficient of `ch K(μ)` in `ch L(λ)`.
//!
//! Roots `γ_s, γ_t` (`s < t`) are c-related when `d_{s,t}(λ) < t − s`, and
//! strongly c-related when `γ_s` is c-related to every `γ_i` with
//! `s < i ≤ t`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariants::{leq, Block};
use crate::weights::Weight;

/// Largest atypicality for which permutations are enumerated.
pub const MAX_ATYPICALITY: usize = 12;

/// Integer Laurent polynomial in `q`; zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LaurentPolynomial {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    pub fn monomial(exp: i64, coeff: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn add_term(&mut self, exp: i64, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let c = self.coeffs.entry(exp).or_insert(0);
        *c += coeff;
        if *c == 0 {
            self.coeffs.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    /// Evaluate at `q = ±1`. Other values are computed exactly for
    /// non-negative exponents and panic otherwise.
    pub fn eval(&self, q: i64) -> i64 {
        self.terms()
            .map(|(e, c)| {
                let v = match q {
                    1 => 1,
                    -1 => {
                        if e.rem_euclid(2) == 0 {
                            1
                        } else {
                            -1
                        }
                    }
                    _ => {
                        assert!(e >= 0, "q = {q} is not invertible over the integers");
                        q.pow(e as u32)
                    }
                };
                c * v
            })
            .sum()
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if k == 0 {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
            }
            match (e, mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, 1) => write!(f, "q")?,
                (1, _) => write!(f, "{mag}*q")?,
                (_, 1) => write!(f, "q^{e}")?,
                _ => write!(f, "{mag}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = self.clone();
        for (e, c) in rhs.terms() {
            p.add_term(e, c);
        }
        p
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(self.terms().map(|(e, c)| (e, -c)))
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (e1, c1) in self.terms() {
            for (e2, c2) in rhs.terms() {
                p.add_term(e1 + e2, c1 * c2);
            }
        }
        p
    }
}

/// A permutation of `{1, …, r}`, stored by its images.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(r: usize) -> Self {
        Permutation {
            images: (1..=r).collect(),
        }
    }

    /// `images[s - 1] = σ(s)`, 1-based.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let r = images.len();
        let mut seen = vec![false; r];
        for &i in &images {
            if i == 0 || i > r || seen[i - 1] {
                return Err(Error::Parse(format!(
                    "{images:?} is not a permutation of 1..={r}"
                )));
            }
            seen[i - 1] = true;
        }
        Ok(Permutation { images })
    }

    /// The transposition `(a b)` in `𝔖_r`.
    pub fn transposition(r: usize, a: usize, b: usize) -> Result<Self> {
        if a == 0 || b == 0 || a > r || b > r {
            return Err(Error::Index {
                index: a.max(b),
                len: r,
            });
        }
        let mut images: Vec<usize> = (1..=r).collect();
        images.swap(a - 1, b - 1);
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn apply(&self, s: usize) -> usize {
        self.images[s - 1]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.len()];
        for (s, &t) in self.images.iter().enumerate() {
            inv[t - 1] = s + 1;
        }
        Permutation { images: inv }
    }

    /// Bruhat length, i.e. the number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        (0..v.len())
            .map(|i| (i + 1..v.len()).filter(|&j| v[i] > v[j]).count())
            .sum()
    }
}

fn root_pair(r: usize, s: usize, t: usize) -> Result<()> {
    if s == 0 || t > r || s >= t {
        return Err(Error::Index {
            index: if s == 0 { s } else { t },
            len: r,
        });
    }
    Ok(())
}

/// `d_{s,t}(λ)`: the number of `∅` positions in `[a_s, a_t]`.
pub fn distance(w: &Weight, s: usize, t: usize) -> Result<i64> {
    let (block, atyp) = Block::of(w)?;
    root_pair(atyp.len(), s, t)?;
    Ok(block.empty_count(&atyp, atyp[s - 1], atyp[t - 1]))
}

pub fn c_related(w: &Weight, s: usize, t: usize) -> Result<bool> {
    Ok(distance(w, s, t)? < (t - s) as i64)
}

pub fn strongly_c_related(w: &Weight, s: usize, t: usize) -> Result<bool> {
    let (block, atyp) = Block::of(w)?;
    root_pair(atyp.len(), s, t)?;
    Ok(predecessors(&block, &atyp)[t - 1] >> (s - 1) & 1 == 1)
}

fn related(block: &Block, atyp: &[i64], s0: usize, t0: usize) -> bool {
    block.empty_count(atyp, atyp[s0], atyp[t0]) < (t0 - s0) as i64
}

/// `pred[t]` has bit `s` set when roots `s < t` (0-based) are strongly
/// c-related, so σ must keep `s` before `t`.
fn predecessors(block: &Block, atyp: &[i64]) -> Vec<u32> {
    let r = atyp.len();
    let mut pred = vec![0u32; r];
    for s in 0..r {
        for (t, bits) in pred.iter_mut().enumerate().skip(s + 1) {
            if !related(block, atyp, s, t) {
                break;
            }
            *bits |= 1 << s;
        }
    }
    pred
}

/// All c-related pairs `(s, t)`, `s < t`.
pub fn cr_map(w: &Weight) -> Result<BTreeSet<(usize, usize)>> {
    let (block, atyp) = Block::of(w)?;
    let r = atyp.len();
    let mut out = BTreeSet::new();
    for s in 0..r {
        for t in s + 1..r {
            if related(&block, &atyp, s, t) {
                out.insert((s + 1, t + 1));
            }
        }
    }
    Ok(out)
}

/// All strongly c-related pairs `(s, t)`, `s < t`.
pub fn scr_map(w: &Weight) -> Result<BTreeSet<(usize, usize)>> {
    let (block, atyp) = Block::of(w)?;
    let pred = predecessors(&block, &atyp);
    let mut out = BTreeSet::new();
    for (t, mask) in pred.iter().enumerate() {
        for s in 0..t {
            if mask >> s & 1 == 1 {
                out.insert((s + 1, t + 1));
            }
        }
    }
    Ok(out)
}

fn check_len(r: usize, sigma: &Permutation) -> Result<()> {
    if sigma.len() != r {
        return Err(Error::Dimension(format!(
            "permutation of length {} acting on {r} atypical roots",
            sigma.len()
        )));
    }
    Ok(())
}

/// Atypical tuple of `σ • λ`: entry `s` is `a_{σ⁻¹(s)}`.
pub fn atyp_dot_action(w: &Weight, sigma: &Permutation) -> Result<Vec<i64>> {
    let (_, atyp) = Block::of(w)?;
    check_len(atyp.len(), sigma)?;
    Ok(permute(&atyp, sigma))
}

fn permute(atyp: &[i64], sigma: &Permutation) -> Vec<i64> {
    let inv = sigma.inverse();
    (1..=atyp.len()).map(|s| atyp[inv.apply(s) - 1]).collect()
}

pub fn respects_scr(w: &Weight, sigma: &Permutation) -> Result<bool> {
    let pairs = scr_map(w)?;
    check_len(degree(w)?, sigma)?;
    Ok(pairs.iter().all(|&(s, t)| sigma.apply(s) < sigma.apply(t)))
}

fn degree(w: &Weight) -> Result<usize> {
    Ok(Block::of(w)?.1.len())
}

/// Enumerates `S^{λ,μ}` for atypical tuples in a common block. Each callback
/// receives the inverse permutation as 0-based indices (`inv[s] = σ⁻¹(s+1) − 1`)
/// together with its inversion count.
fn for_each_admissible(lam: &[i64], mu: &[i64], pred: &[u32], mut f: impl FnMut(&[usize], usize)) {
    let r = lam.len();
    let mut inv = Vec::with_capacity(r);
    fn rec(
        lam: &[i64],
        mu: &[i64],
        pred: &[u32],
        inv: &mut Vec<usize>,
        used: u32,
        inversions: usize,
        f: &mut dyn FnMut(&[usize], usize),
    ) {
        let pos = inv.len();
        if pos == lam.len() {
            f(inv, inversions);
            return;
        }
        for src in 0..lam.len() {
            let bit = 1u32 << src;
            if used & bit != 0 || lam[src] < mu[pos] || pred[src] & !used != 0 {
                continue;
            }
            // roots already placed with a larger index each form an inversion
            let new_inv = (used >> (src + 1)).count_ones() as usize;
            inv.push(src);
            rec(lam, mu, pred, inv, used | bit, inversions + new_inv, f);
            inv.pop();
        }
    }
    rec(lam, mu, pred, &mut inv, 0, 0, &mut f);
}

fn guard(r: usize) -> Result<()> {
    if r > MAX_ATYPICALITY {
        return Err(Error::ResourceCap(format!(
            "atypicality {r} exceeds the permutation enumeration limit {MAX_ATYPICALITY}"
        )));
    }
    Ok(())
}

/// The shared block and both atypical tuples.
type BlockPair = (Block, Vec<i64>, Vec<i64>);

fn same_block(lam: &Weight, mu: &Weight) -> Result<Option<BlockPair>> {
    if lam.shape() != mu.shape() {
        return Err(Error::Dimension("weights of different shape".into()));
    }
    let (bl, al) = Block::of(lam)?;
    let (bm, am) = Block::of(mu)?;
    if bl != bm || al.len() != am.len() {
        return Ok(None);
    }
    Ok(Some((bl, al, am)))
}

pub fn s_set(lam: &Weight, mu: &Weight) -> Result<Vec<Permutation>> {
    let Some((block, al, am)) = same_block(lam, mu)? else {
        return Ok(Vec::new());
    };
    guard(al.len())?;
    if !al.iter().zip(&am).all(|(x, y)| y <= x) {
        return Ok(Vec::new());
    }
    let pred = predecessors(&block, &al);
    let mut out = Vec::new();
    for_each_admissible(&al, &am, &pred, |inv, _| {
        let inv = Permutation {
            images: inv.iter().map(|i| i + 1).collect(),
        };
        out.push(inv.inverse());
    });
    out.sort();
    Ok(out)
}

/// `K_{λ,μ}(q)` for atypical tuples `lam`, `mu` of one block.
pub fn kl_in_block(block: &Block, lam: &[i64], mu: &[i64]) -> Result<LaurentPolynomial> {
    if lam.len() != mu.len() || !lam.iter().zip(mu).all(|(x, y)| y <= x) {
        return Ok(LaurentPolynomial::zero());
    }
    guard(lam.len())?;
    let shift = block.heights(lam).total() - block.heights(mu).total();
    let pred = predecessors(block, lam);
    let mut p = LaurentPolynomial::zero();
    for_each_admissible(lam, mu, &pred, |_, len| {
        p.add_term(shift - 2 * len as i64, 1)
    });
    Ok(p)
}

/// `K_{λ,μ}(−1)` without building the polynomial.
pub fn kac_coefficient_in_block(block: &Block, lam: &[i64], mu: &[i64]) -> Result<i64> {
    if lam.len() != mu.len() || !lam.iter().zip(mu).all(|(x, y)| y <= x) {
        return Ok(0);
    }
    guard(lam.len())?;
    let shift = block.heights(lam).total() - block.heights(mu).total();
    let pred = predecessors(block, lam);
    let mut count = 0i64;
    for_each_admissible(lam, mu, &pred, |_, _| count += 1);
    Ok(if shift.rem_euclid(2) == 0 {
        count
    } else {
        -count
    })
}

pub fn gen_kl(lam: &Weight, mu: &Weight) -> Result<LaurentPolynomial> {
    match same_block(lam, mu)? {
        Some((block, al, am)) => kl_in_block(&block, &al, &am),
        None => Ok(LaurentPolynomial::zero()),
    }
}

/// `b_{λμ} = K_{λ,μ}(−1)`, the coefficient of `ch K(μ)` in `ch L(λ)`.
pub fn mult_kac_in_irrd(lam: &Weight, mu: &Weight) -> Result<i64> {
    match same_block(lam, mu)? {
        Some((block, al, am)) => kac_coefficient_in_block(&block, &al, &am),
        None => Ok(0),
    }
}

/// Sanity hook used by tests: `gen_kl(λ, μ) ≠ 0 ⟺ μ ⪯ λ`.
pub fn support_matches_order(lam: &Weight, mu: &Weight) -> Result<bool> {
    Ok(!gen_kl(lam, mu)?.is_zero() == leq(mu, lam)?)
}
