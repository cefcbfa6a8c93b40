//! Atypicality data of weights: atypical roots, typical and atypical tuples,
//! height vectors and the block order.
//!
//! For a dominant weight the ρ-translate has a strictly decreasing even part
//! and a strictly increasing odd part, so the pairs of equal entries between
//! the two sides form a unique matching. Those pairs are the atypical roots.
//! Everything block-level in this module therefore requires dominance; the
//! atypicality matrix is the one exception and accepts any integral weight.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weights::Weight;

/// The `s`-th atypical root `ε_i − δ_k`, reported with the global odd index
/// `j = m + k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtypicalRoot {
    pub s: usize,
    pub i: usize,
    pub j: usize,
    pub value: i64,
}

impl AtypicalRoot {
    /// Local odd position `n_s = j − m`.
    pub fn odd_position(&self, m: usize) -> usize {
        self.j - m
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockCoordinates {
    pub typ0: Vec<i64>,
    pub typ1: Vec<i64>,
    pub atyp: Vec<i64>,
}

impl BlockCoordinates {
    pub fn degree(&self) -> usize {
        self.atyp.len()
    }

    pub fn to_weight(&self) -> Result<Weight> {
        typ_atyp_to_weight(&self.typ0, &self.typ1, &self.atyp)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HeightVector(pub Vec<i64>);

impl HeightVector {
    /// `|h(λ)|`
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// The form `(ε_i, ε_j) = (−1)^[i] δ_ij` on ε-coefficients.
pub fn bilinear_form(x: &Weight, y: &Weight) -> Result<i64> {
    if x.shape() != y.shape() {
        return Err(Error::Dimension(
            "bilinear form needs weights of equal shape".into(),
        ));
    }
    let m = x.m();
    Ok(x.epsilon_coeffs()
        .iter()
        .zip(y.epsilon_coeffs())
        .enumerate()
        .map(|(i, (a, b))| if i < m { a * b } else { -a * b })
        .sum())
}

pub fn atypical_roots(w: &Weight) -> Result<Vec<AtypicalRoot>> {
    w.require_dominant()?;
    let t = w.rho_translate();
    let m = w.m();
    let mut pairs = Vec::new();
    // rho-translate: even part strictly decreasing, odd part strictly increasing
    let (mut i, mut k) = (m, 0);
    while i > 0 && k < w.n() {
        let (a, b) = (t.l()[i - 1], t.r()[k]);
        if a == b {
            pairs.push((i, m + k + 1, a));
            i -= 1;
            k += 1;
        } else if a < b {
            i -= 1;
        } else {
            k += 1;
        }
    }
    Ok(pairs
        .into_iter()
        .enumerate()
        .map(|(s, (i, j, value))| AtypicalRoot {
            s: s + 1,
            i,
            j,
            value,
        })
        .collect())
}

pub fn degree_of_atypicality(w: &Weight) -> Result<usize> {
    Ok(atypical_roots(w)?.len())
}

pub fn is_typical(w: &Weight) -> Result<bool> {
    Ok(degree_of_atypicality(w)? == 0)
}

/// `A_jk = (λ^ρ, ε_j − δ_k)`, an m×n matrix, defined for any integral weight.
pub fn atypicality_matrix(w: &Weight) -> Vec<Vec<i64>> {
    let t = w.rho_translate();
    t.l()
        .iter()
        .map(|a| t.r().iter().map(|b| a - b).collect())
        .collect()
}

pub fn block_coordinates(w: &Weight) -> Result<BlockCoordinates> {
    let roots = atypical_roots(w)?;
    let t = w.rho_translate();
    let m = w.m();
    let typ0 = t
        .l()
        .iter()
        .enumerate()
        .filter(|(i, _)| roots.iter().all(|g| g.i != i + 1))
        .map(|(_, &v)| v)
        .collect();
    let typ1 = t
        .r()
        .iter()
        .enumerate()
        .filter(|(k, _)| roots.iter().all(|g| g.j != m + k + 1))
        .map(|(_, &v)| v)
        .collect();
    Ok(BlockCoordinates {
        typ0,
        typ1,
        atyp: roots.iter().map(|g| g.value).collect(),
    })
}

/// `h_s(λ) = λ_{m_s} − n_s + s`.
pub fn height_vector(w: &Weight) -> Result<HeightVector> {
    let roots = atypical_roots(w)?;
    let m = w.m();
    Ok(HeightVector(
        roots
            .iter()
            .map(|g| w.l()[g.i - 1] - g.odd_position(m) as i64 + g.s as i64)
            .collect(),
    ))
}

/// The block order `μ ⪯ λ`: same atypicality and typical tuple, and
/// `atyp(μ) ≤ atyp(λ)` componentwise.
pub fn leq(mu: &Weight, lam: &Weight) -> Result<bool> {
    if mu.shape() != lam.shape() {
        return Err(Error::Dimension(
            "block order needs weights of equal shape".into(),
        ));
    }
    let a = block_coordinates(mu)?;
    let b = block_coordinates(lam)?;
    Ok(a.typ0 == b.typ0
        && a.typ1 == b.typ1
        && a.atyp.len() == b.atyp.len()
        && a.atyp.iter().zip(&b.atyp).all(|(x, y)| x <= y))
}

pub fn typ_atyp_to_weight(typ0: &[i64], typ1: &[i64], atyp: &[i64]) -> Result<Weight> {
    Block::new(typ0.to_vec(), typ1.to_vec())?.weight(atyp)
}

/// Default number of candidate values scanned per root by [`height_to_atyp`].
pub fn default_scan_radius(m: usize, n: usize) -> i64 {
    4 * (m + n) as i64
}

pub fn height_to_atyp(h: &[i64], typ0: &[i64], typ1: &[i64]) -> Result<Vec<i64>> {
    let r = h.len();
    let radius = default_scan_radius(typ0.len() + r, typ1.len() + r);
    height_to_atyp_with_radius(h, typ0, typ1, radius)
}

/// Places `a_1 < … < a_r` one at a time, scanning upward through values not in
/// the typical tuple until the forward height formula hits `h_s`.
pub fn height_to_atyp_with_radius(
    h: &[i64],
    typ0: &[i64],
    typ1: &[i64],
    radius: i64,
) -> Result<Vec<i64>> {
    let r = h.len();
    let block = Block::new(typ0.to_vec(), typ1.to_vec())?;
    if block.m(r) == 0 || block.n(r) == 0 {
        return Err(Error::Dimension(format!(
            "no gl(m|n) with atypicality {r} and this typical tuple"
        )));
    }
    let mut atyp: Vec<i64> = Vec::with_capacity(r);
    for (s0, &target) in h.iter().enumerate() {
        // height_s(a) <= a + offset + |typ0|, so nothing below this can match
        let floor = target - block.height_offset(s0, r) - typ0.len() as i64;
        let mut a = match atyp.last() {
            Some(&prev) => floor.max(prev + 1),
            None => floor,
        };
        let mut scanned = 0;
        loop {
            if !block.is_typical_value(a) {
                if block.height_at(s0, r, a) == target {
                    break;
                }
                scanned += 1;
                if scanned >= radius {
                    return Err(Error::InconsistentHeight {
                        root: s0 + 1,
                        height: target,
                        radius,
                    });
                }
            }
            a += 1;
        }
        atyp.push(a);
    }
    Ok(atyp)
}

/// Positive odd roots `ε_i − δ_k` as global index pairs `(i, m + k)`.
pub fn positive_odd_roots(m: usize, n: usize) -> Vec<(usize, usize)> {
    (1..=m)
        .flat_map(|i| (1..=n).map(move |k| (i, m + k)))
        .collect()
}

/// A block fixed by its typical tuple. Members are addressed by their strictly
/// increasing atypical tuples; this is the working representation for the
/// Kazhdan–Lusztig and composition-factor code.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Block {
    typ0: Vec<i64>,
    typ1: Vec<i64>,
    // ascending copies for counting
    typ0_sorted: Vec<i64>,
    typ1_sorted: Vec<i64>,
}

impl Block {
    pub fn new(typ0: Vec<i64>, typ1: Vec<i64>) -> Result<Self> {
        if !typ0.windows(2).all(|p| p[0] > p[1]) {
            return Err(Error::InvalidBlock(format!(
                "typ0 {typ0:?} is not strictly decreasing"
            )));
        }
        if !typ1.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidBlock(format!(
                "typ1 {typ1:?} is not strictly increasing"
            )));
        }
        if let Some(v) = typ0.iter().find(|v| typ1.contains(v)) {
            return Err(Error::InvalidBlock(format!(
                "value {v} is in both typical tuples"
            )));
        }
        let mut typ0_sorted = typ0.clone();
        typ0_sorted.sort_unstable();
        let typ1_sorted = typ1.clone();
        Ok(Block {
            typ0,
            typ1,
            typ0_sorted,
            typ1_sorted,
        })
    }

    /// Block of a dominant weight together with its atypical tuple.
    pub fn of(w: &Weight) -> Result<(Block, Vec<i64>)> {
        let c = block_coordinates(w)?;
        Ok((Block::new(c.typ0, c.typ1)?, c.atyp))
    }

    pub fn typ0(&self) -> &[i64] {
        &self.typ0
    }

    pub fn typ1(&self) -> &[i64] {
        &self.typ1
    }

    pub fn m(&self, r: usize) -> usize {
        self.typ0.len() + r
    }

    pub fn n(&self, r: usize) -> usize {
        self.typ1.len() + r
    }

    pub fn is_typical_value(&self, v: i64) -> bool {
        self.typ0_sorted.binary_search(&v).is_ok() || self.typ1_sorted.binary_search(&v).is_ok()
    }

    pub fn is_admissible(&self, atyp: &[i64]) -> bool {
        atyp.windows(2).all(|p| p[0] < p[1]) && atyp.iter().all(|&v| !self.is_typical_value(v))
    }

    pub fn weight(&self, atyp: &[i64]) -> Result<Weight> {
        if !atyp.windows(2).all(|p| p[0] < p[1]) {
            return Err(Error::InvalidBlock(format!(
                "atyp {atyp:?} is not strictly increasing"
            )));
        }
        if let Some(v) = atyp.iter().find(|&&v| self.is_typical_value(v)) {
            return Err(Error::InvalidBlock(format!(
                "atypical value {v} collides with the typical tuple"
            )));
        }
        let r = atyp.len();
        let (m, n) = (self.m(r), self.n(r));
        if m == 0 || n == 0 {
            return Err(Error::Dimension(format!(
                "block coordinates give gl({m}|{n})"
            )));
        }
        let mut even: Vec<i64> = self.typ0.iter().chain(atyp).copied().collect();
        even.sort_unstable_by(|a, b| b.cmp(a));
        let mut odd: Vec<i64> = self.typ1.iter().chain(atyp).copied().collect();
        odd.sort_unstable();
        let l = even
            .iter()
            .enumerate()
            .map(|(i, v)| v - (m - i) as i64)
            .collect();
        let rr = odd
            .iter()
            .enumerate()
            .map(|(k, v)| v - (k as i64 + 1))
            .collect();
        Weight::new(l, rr)
    }

    fn count_typ0_above(&self, a: i64) -> i64 {
        (self.typ0_sorted.len() - self.typ0_sorted.partition_point(|&x| x <= a)) as i64
    }

    fn count_typ1_below(&self, a: i64) -> i64 {
        self.typ1_sorted.partition_point(|&x| x < a) as i64
    }

    fn height_offset(&self, s0: usize, r: usize) -> i64 {
        // h_s = a_s - m + r - s + #{typ0 > a_s} - #{typ1 < a_s}, s 1-based
        -(self.m(r) as i64) + r as i64 - (s0 as i64 + 1)
    }

    /// Height of the root at 0-based position `s0` if it carries value `a`,
    /// in a block member of atypicality `r`.
    pub fn height_at(&self, s0: usize, r: usize, a: i64) -> i64 {
        a + self.height_offset(s0, r) + self.count_typ0_above(a) - self.count_typ1_below(a)
    }

    pub fn heights(&self, atyp: &[i64]) -> HeightVector {
        let r = atyp.len();
        HeightVector(
            atyp.iter()
                .enumerate()
                .map(|(s0, &a)| self.height_at(s0, r, a))
                .collect(),
        )
    }

    /// Number of `∅` positions of the weight diagram in the closed interval `[lo, hi]`.
    pub fn empty_count(&self, atyp: &[i64], lo: i64, hi: i64) -> i64 {
        if hi < lo {
            return 0;
        }
        let count =
            |v: &[i64]| (v.partition_point(|&x| x <= hi) - v.partition_point(|&x| x < lo)) as i64;
        (hi - lo + 1) - count(&self.typ0_sorted) - count(&self.typ1_sorted) - count(atyp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::rho;
    use proptest::prelude::*;

    fn example() -> Weight {
        Weight::new(
            vec![7, 6, 5, 5, 3, 3, 2, 2, 0],
            vec![1, 2, 3, 4, 4, 5, 7, 7],
        )
        .unwrap()
    }

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn unit(m: usize, n: usize, slot: usize, value: i64) -> Weight {
        let mut l = vec![0; m];
        let mut r = vec![0; n];
        if slot < m {
            l[slot] = value;
        } else {
            r[slot - m] = value;
        }
        Weight::new(l, r).unwrap()
    }

    #[test]
    fn form_values() {
        let e1 = unit(2, 2, 0, 1);
        assert_eq!(bilinear_form(&e1, &e1).unwrap(), 1);
        let d1 = unit(2, 2, 2, 1);
        assert_eq!(bilinear_form(&d1, &d1).unwrap(), -1);
        let r = rho(1, 1).unwrap();
        assert_eq!(bilinear_form(&r, &r).unwrap(), 0);
        assert!(bilinear_form(&r, &e1).is_err());
    }

    #[test]
    fn example_roots() {
        let roots = atypical_roots(&example()).unwrap();
        let pairs: Vec<_> = roots.iter().map(|g| (g.i, g.j)).collect();
        assert_eq!(pairs, vec![(8, 11), (5, 13), (4, 15), (2, 16)]);
        assert_eq!(degree_of_atypicality(&example()).unwrap(), 4);
        assert!(atypical_roots(&w("1,1|0")).unwrap().is_empty());
        let z = atypical_roots(&w("0|0")).unwrap();
        assert_eq!(
            z,
            vec![AtypicalRoot {
                s: 1,
                i: 1,
                j: 2,
                value: 1
            }]
        );
        for r in 1..6 {
            assert_eq!(
                degree_of_atypicality(&Weight::zero(r, r).unwrap()).unwrap(),
                r
            );
        }
        assert!(matches!(
            atypical_roots(&w("0,1|0")),
            Err(Error::NotDominant(_))
        ));
    }

    #[test]
    fn example_matrix() {
        let a = atypicality_matrix(&example());
        assert_eq!(a.len(), 9);
        assert_eq!(a[0], vec![14, 12, 10, 8, 7, 5, 2, 1]);
        assert_eq!(a[8][7], -14);
        assert_eq!(atypicality_matrix(&w("0|0")), vec![vec![0]]);
        // defined off the dominant chamber too
        assert_eq!(atypicality_matrix(&w("0,1|0")), vec![vec![1], vec![1]]);
    }

    #[test]
    fn example_coordinates() {
        let c = block_coordinates(&example()).unwrap();
        assert_eq!(c.typ0, vec![16, 12, 7, 5, 1]);
        assert_eq!(c.typ1, vec![2, 6, 9, 15]);
        assert_eq!(c.atyp, vec![4, 8, 11, 14]);
        let t = block_coordinates(&w("1,1|0")).unwrap();
        assert_eq!((t.typ0, t.typ1, t.atyp), (vec![3, 2], vec![1], vec![]));
        let z = block_coordinates(&Weight::zero(2, 2).unwrap()).unwrap();
        assert_eq!((z.typ0.len(), z.typ1.len(), z.atyp), (0, 0, vec![1, 2]));
    }

    #[test]
    fn example_heights() {
        assert_eq!(height_vector(&example()).unwrap().0, vec![1, 1, 2, 3]);
        assert_eq!(
            height_vector(&Weight::zero(2, 2).unwrap()).unwrap().0,
            vec![0, 0]
        );
        assert!(height_vector(&w("1,1|0")).unwrap().is_empty());
    }

    #[test]
    fn order_examples() {
        let lam = example();
        let mu = w("7,4,4,4,2,1,1,1,0|1,1,1,2,4,4,4,7");
        assert!(leq(&mu, &lam).unwrap());
        assert!(!leq(&lam, &mu).unwrap());
        assert!(leq(&lam, &lam).unwrap());
        assert!(leq(&w("-1,-1|-1,-1"), &w("0,0|0,0")).unwrap());
        assert!(leq(&mu, &w("0|0")).is_err());
    }

    #[test]
    fn block_reconstruction() {
        let t0 = [16, 12, 7, 5, 1];
        let t1 = [2, 6, 9, 15];
        let atyp = height_to_atyp(&[1, 1, 2, 3], &t0, &t1).unwrap();
        assert_eq!(atyp, vec![4, 8, 11, 14]);
        assert_eq!(typ_atyp_to_weight(&t0, &t1, &atyp).unwrap(), example());
        assert_eq!(
            typ_atyp_to_weight(&[], &[], &[1, 2]).unwrap(),
            Weight::zero(2, 2).unwrap()
        );
        assert_eq!(height_to_atyp(&[0, 0], &[], &[]).unwrap(), vec![1, 2]);
        assert!(matches!(
            typ_atyp_to_weight(&t0, &t1, &[4, 5]),
            Err(Error::InvalidBlock(_))
        ));
        assert!(matches!(
            typ_atyp_to_weight(&[3, 3], &[], &[1]),
            Err(Error::InvalidBlock(_))
        ));
        assert!(matches!(
            typ_atyp_to_weight(&[], &[], &[2, 1]),
            Err(Error::InvalidBlock(_))
        ));
        assert!(matches!(
            typ_atyp_to_weight(&[1], &[1], &[]),
            Err(Error::InvalidBlock(_))
        ));
    }

    #[test]
    fn inconsistent_heights_are_rejected() {
        // second root can never sit below the first
        assert!(matches!(
            height_to_atyp_with_radius(&[5, -5], &[], &[], 8),
            Err(Error::InconsistentHeight { root: 2, .. })
        ));
    }

    #[test]
    fn odd_roots() {
        assert_eq!(positive_odd_roots(1, 1), vec![(1, 2)]);
        assert_eq!(positive_odd_roots(2, 1), vec![(1, 3), (2, 3)]);
        assert_eq!(positive_odd_roots(4, 3).len(), 12);
    }

    pub(crate) fn dominant_weight() -> impl Strategy<Value = Weight> {
        (1usize..=5, 1usize..=5).prop_flat_map(|(m, n)| {
            (
                proptest::collection::vec(-5i64..=5, m),
                proptest::collection::vec(-5i64..=5, n),
            )
                .prop_map(|(mut l, mut r)| {
                    l.sort_unstable_by(|a, b| b.cmp(a));
                    r.sort_unstable();
                    Weight::new(l, r).unwrap()
                })
        })
    }

    proptest! {
        #[test]
        fn zeros_of_matrix_count_atypicality(w in dominant_weight()) {
            let zeros = atypicality_matrix(&w).iter().flatten().filter(|&&x| x == 0).count();
            prop_assert_eq!(zeros, degree_of_atypicality(&w).unwrap());
        }

        #[test]
        fn roots_are_ordered_and_orthogonal(w in dominant_weight()) {
            let roots = atypical_roots(&w).unwrap();
            for p in roots.windows(2) {
                prop_assert!(p[0].i > p[1].i && p[0].j < p[1].j && p[0].value < p[1].value);
            }
            let t = w.rho_translate();
            for g in &roots {
                prop_assert_eq!(t.entry(g.i).unwrap(), t.entry(g.j).unwrap());
                let gamma = {
                    let mut l = vec![0; w.m()];
                    let mut r = vec![0; w.n()];
                    l[g.i - 1] = 1;
                    // −δ_k is stored as λ¹_k = 1
                    r[g.j - w.m() - 1] = 1;
                    Weight::new(l, r).unwrap()
                };
                prop_assert_eq!(bilinear_form(&t, &gamma).unwrap(), 0);
            }
        }

        #[test]
        fn block_roundtrips(w in dominant_weight()) {
            let c = block_coordinates(&w).unwrap();
            prop_assert_eq!(c.to_weight().unwrap(), w.clone());
            let h = height_vector(&w).unwrap();
            prop_assert_eq!(height_to_atyp(&h.0, &c.typ0, &c.typ1).unwrap(), c.atyp.clone());
            let (block, atyp) = Block::of(&w).unwrap();
            prop_assert_eq!(block.heights(&atyp), h);
        }
    }
}
