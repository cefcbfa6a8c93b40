//! Integral weights of gl(m|n).
//!
//! A weight `(λ⁰ | λ¹)` is stored as its two integer tuples. The even part
//! `λ⁰` gives the coefficients of `ε_1, …, ε_m`; the odd part `λ¹` enters the
//! ε/δ expansion with a minus sign, `λ = Σ λ⁰_i ε_i − Σ λ¹_j δ_j`. All public
//! indexing is 1-based.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integral weight of gl(m|n).
///
/// Ordering is lexicographic on the even part, then the odd part. It exists so
/// weights can key ordered maps; it is not the block order (see
/// [`crate::invariants::leq`]).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "WeightJson", into = "WeightJson")]
pub struct Weight {
    even: Vec<i64>,
    odd: Vec<i64>,
}

/// Interchange form `{"L": [...], "R": [...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightJson {
    #[serde(rename = "L")]
    pub l: Vec<i64>,
    #[serde(rename = "R")]
    pub r: Vec<i64>,
}

impl TryFrom<WeightJson> for Weight {
    type Error = Error;

    fn try_from(j: WeightJson) -> Result<Self> {
        Weight::new(j.l, j.r)
    }
}

impl From<Weight> for WeightJson {
    fn from(w: Weight) -> Self {
        WeightJson {
            l: w.even,
            r: w.odd,
        }
    }
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m == 0 || n == 0 {
        return Err(Error::Dimension(format!("gl({m}|{n}) needs m, n >= 1")));
    }
    Ok(())
}

impl Weight {
    pub fn new(l: Vec<i64>, r: Vec<i64>) -> Result<Self> {
        check_dims(l.len(), r.len())?;
        Ok(Weight { even: l, odd: r })
    }

    pub fn zero(m: usize, n: usize) -> Result<Self> {
        check_dims(m, n)?;
        Ok(Weight {
            even: vec![0; m],
            odd: vec![0; n],
        })
    }

    pub fn m(&self) -> usize {
        self.even.len()
    }

    pub fn n(&self) -> usize {
        self.odd.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.m(), self.n())
    }

    /// `λ⁰`
    pub fn l(&self) -> &[i64] {
        &self.even
    }

    /// `λ¹`
    pub fn r(&self) -> &[i64] {
        &self.odd
    }

    /// `λ_j` for the global index `j ∈ 1..=m+n`.
    pub fn entry(&self, j: usize) -> Result<i64> {
        let len = self.m() + self.n();
        if j == 0 || j > len {
            return Err(Error::Index { index: j, len });
        }
        Ok(if j <= self.m() {
            self.even[j - 1]
        } else {
            self.odd[j - 1 - self.m()]
        })
    }

    /// `λ^p_i` with `p ∈ {0, 1}`.
    pub fn entry_part(&self, p: u8, i: usize) -> Result<i64> {
        let part = match p {
            0 => &self.even,
            1 => &self.odd,
            _ => {
                return Err(Error::Index {
                    index: p as usize,
                    len: 1,
                })
            }
        };
        if i == 0 || i > part.len() {
            return Err(Error::Index {
                index: i,
                len: part.len(),
            });
        }
        Ok(part[i - 1])
    }

    /// Coefficients of `ε_i`.
    pub fn coeff_l(&self) -> Vec<i64> {
        self.even.clone()
    }

    /// Coefficients of `δ_j`, i.e. `−λ¹_j`.
    pub fn coeff_r(&self) -> Vec<i64> {
        self.odd.iter().map(|x| -x).collect()
    }

    /// Coefficients in the full ε-basis `ε_1, …, ε_{m+n}`.
    pub fn epsilon_coeffs(&self) -> Vec<i64> {
        let mut c = self.coeff_l();
        c.extend(self.coeff_r());
        c
    }

    /// Sum of the even coefficients.
    pub fn level(&self) -> i64 {
        self.even.iter().sum()
    }

    pub fn is_dominant(&self) -> bool {
        self.even.windows(2).all(|p| p[0] >= p[1]) && self.odd.windows(2).all(|p| p[0] <= p[1])
    }

    pub(crate) fn require_dominant(&self) -> Result<()> {
        if self.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant(self.to_canonical_string()))
        }
    }

    /// `λ^ρ = λ + ρ`.
    pub fn rho_translate(&self) -> Weight {
        let m = self.m() as i64;
        Weight {
            even: self
                .even
                .iter()
                .enumerate()
                .map(|(i, x)| x + m - i as i64)
                .collect(),
            odd: self
                .odd
                .iter()
                .enumerate()
                .map(|(j, x)| x + j as i64 + 1)
                .collect(),
        }
    }

    pub fn try_add(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &Weight) -> Result<Weight> {
        self.zip_with(other, |a, b| a - b)
    }

    fn zip_with(&self, other: &Weight, f: impl Fn(i64, i64) -> i64) -> Result<Weight> {
        if self.shape() != other.shape() {
            return Err(Error::Dimension(format!(
                "gl({}|{}) and gl({}|{}) weights cannot be combined",
                self.m(),
                self.n(),
                other.m(),
                other.n()
            )));
        }
        Ok(Weight {
            even: self
                .even
                .iter()
                .zip(&other.even)
                .map(|(&a, &b)| f(a, b))
                .collect(),
            odd: self
                .odd
                .iter()
                .zip(&other.odd)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        })
    }

    pub fn to_latex(&self) -> String {
        format!(
            "\\left({} \\mid {}\\right)",
            join(&self.even, ", "),
            join(&self.odd, ", ")
        )
    }

    pub fn to_json(&self) -> WeightJson {
        self.clone().into()
    }

    pub fn from_json(j: WeightJson) -> Result<Weight> {
        Weight::try_from(j)
    }

    /// `a1,…,am|b1,…,bn`, no whitespace.
    pub fn to_canonical_string(&self) -> String {
        format!("{}|{}", join(&self.even, ","), join(&self.odd, ","))
    }
}

fn join(xs: &[i64], sep: &str) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

/// `ρ = (m, …, 2, 1 | 1, 2, …, n)`.
pub fn rho(m: usize, n: usize) -> Result<Weight> {
    check_dims(m, n)?;
    Ok(Weight {
        even: (1..=m as i64).rev().collect(),
        odd: (1..=n as i64).collect(),
    })
}

/// `(1, …, 1 | 1, …, 1)`.
pub fn one(m: usize, n: usize) -> Result<Weight> {
    check_dims(m, n)?;
    Ok(Weight {
        even: vec![1; m],
        odd: vec![1; n],
    })
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (l, r) = s
            .split_once('|')
            .ok_or_else(|| Error::Parse(format!("expected `L|R`, got {s:?}")))?;
        let parse_side = |side: &str| -> Result<Vec<i64>> {
            let side = side.trim();
            if side.is_empty() {
                return Ok(Vec::new());
            }
            side.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|e| Error::Parse(format!("bad entry {t:?}: {e}")))
                })
                .collect()
        };
        Weight::new(parse_side(l)?, parse_side(r)?)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({} | {})",
            join(&self.even, ", "),
            join(&self.odd, ", ")
        )
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "gl({}|{}) weight {}", self.m(), self.n(), self)
    }
}

// Operators panic on shape mismatch; use `try_add`/`try_sub` to get an error instead.

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        self.try_add(rhs).expect("weight shapes must agree")
    }
}

impl Add for Weight {
    type Output = Weight;

    fn add(self, rhs: Weight) -> Weight {
        &self + &rhs
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        self.try_sub(rhs).expect("weight shapes must agree")
    }
}

impl Sub for Weight {
    type Output = Weight;

    fn sub(self, rhs: Weight) -> Weight {
        &self - &rhs
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        Weight {
            even: self.even.iter().map(|x| -x).collect(),
            odd: self.odd.iter().map(|x| -x).collect(),
        }
    }
}

impl Neg for Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn example() -> Weight {
        Weight::new(
            vec![7, 6, 5, 5, 3, 3, 2, 2, 0],
            vec![1, 2, 3, 4, 4, 5, 7, 7],
        )
        .unwrap()
    }

    #[test]
    fn construct_and_display() {
        let w = example();
        assert_eq!(w.shape(), (9, 8));
        assert_eq!(
            format!("{w:?}"),
            "gl(9|8) weight (7, 6, 5, 5, 3, 3, 2, 2, 0 | 1, 2, 3, 4, 4, 5, 7, 7)"
        );
        let z = Weight::new(vec![0], vec![0]).unwrap();
        assert_eq!(z, Weight::zero(1, 1).unwrap());
        assert!(matches!(
            Weight::new(vec![], vec![1]),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn rho_and_one() {
        assert_eq!(
            rho(9, 8).unwrap().to_canonical_string(),
            "9,8,7,6,5,4,3,2,1|1,2,3,4,5,6,7,8"
        );
        assert_eq!(rho(1, 1).unwrap(), one(1, 1).unwrap());
        assert_ne!(rho(5, 4).unwrap(), one(5, 4).unwrap());
        assert_eq!(
            one(5, 4).unwrap().to_canonical_string(),
            "1,1,1,1,1|1,1,1,1"
        );
        assert!(rho(0, 3).is_err());
    }

    #[test]
    fn arithmetic_matches_session() {
        let w = example();
        let r = rho(9, 8).unwrap();
        assert_eq!(&w + &r, w.rho_translate());
        assert_eq!(&w.rho_translate() - &w, r);
        assert_eq!(&w + &(-&w), Weight::zero(9, 8).unwrap());
        assert!(w.try_add(&one(1, 1).unwrap()).is_err());
    }

    #[test]
    fn indexing() {
        let w = example();
        assert_eq!(w.entry(2).unwrap(), 6);
        assert_eq!(w.entry(10).unwrap(), 1);
        assert_eq!(w.entry_part(1, 2).unwrap(), 2);
        assert_eq!(w.entry_part(0, 9).unwrap(), 0);
        assert!(w.entry(0).is_err());
        assert!(w.entry(18).is_err());
        assert!(w.entry_part(1, 9).is_err());
        assert!(w.entry_part(2, 1).is_err());
    }

    #[test]
    fn coefficients() {
        let w = example();
        assert_eq!(w.coeff_l(), vec![7, 6, 5, 5, 3, 3, 2, 2, 0]);
        assert_eq!(w.coeff_r(), vec![-1, -2, -3, -4, -4, -5, -7, -7]);
        assert_eq!(one(1, 1).unwrap().coeff_r(), vec![-1]);
    }

    #[test]
    fn dominance() {
        assert!(example().is_dominant());
        for m in 1..5 {
            for n in 1..5 {
                assert!(rho(m, n).unwrap().is_dominant());
            }
        }
        assert!(!Weight::new(vec![0, 1], vec![0]).unwrap().is_dominant());
    }

    #[test]
    fn rho_translate_values() {
        assert_eq!(
            example().rho_translate().to_canonical_string(),
            "16,14,12,11,8,7,5,4,1|2,4,6,8,9,11,14,15"
        );
        assert_eq!(
            Weight::zero(1, 1).unwrap().rho_translate(),
            one(1, 1).unwrap()
        );
    }

    #[test]
    fn latex_and_strings() {
        assert_eq!(
            rho(5, 4).unwrap().to_latex(),
            "\\left(5, 4, 3, 2, 1 \\mid 1, 2, 3, 4\\right)"
        );
        assert_eq!(one(2, 1).unwrap().to_canonical_string(), "1,1|1");
        assert_eq!(
            serde_json::to_string(&one(2, 1).unwrap()).unwrap(),
            r#"{"L":[1,1],"R":[1]}"#
        );
        assert!(serde_json::from_str::<Weight>(r#"{"L":[],"R":[1]}"#).is_err());
        assert!(serde_json::from_str::<Weight>(r#"{"L":[1,"#).is_err());
        assert!("1,2".parse::<Weight>().is_err());
        assert!("1,x|2".parse::<Weight>().is_err());
        assert_eq!(
            " 1, 2 | 3 "
                .parse::<Weight>()
                .unwrap()
                .to_canonical_string(),
            "1,2|3"
        );
    }

    fn any_weight() -> impl Strategy<Value = Weight> {
        (1usize..6, 1usize..6).prop_flat_map(|(m, n)| {
            (
                proptest::collection::vec(-20i64..20, m),
                proptest::collection::vec(-20i64..20, n),
            )
                .prop_map(|(l, r)| Weight::new(l, r).unwrap())
        })
    }

    proptest! {
        #[test]
        fn serialization_roundtrips(w in any_weight()) {
            let json = serde_json::to_string(&w).unwrap();
            prop_assert_eq!(serde_json::from_str::<Weight>(&json).unwrap(), w.clone());
            prop_assert_eq!(Weight::from_json(w.to_json()).unwrap(), w.clone());
            prop_assert_eq!(w.to_canonical_string().parse::<Weight>().unwrap(), w);
        }

        #[test]
        fn group_laws((a, b) in (1usize..5, 1usize..5).prop_flat_map(|(m, n)| {
            let side = |k| proptest::collection::vec(-20i64..20, k);
            ((side(m), side(n)), (side(m), side(n)))
        })) {
            let a = Weight::new(a.0, a.1).unwrap();
            let b = Weight::new(b.0, b.1).unwrap();
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            prop_assert_eq!(&a + &b, &b + &a);
        }

        #[test]
        fn dominance_iff_strict_rho_translate(w in any_weight()) {
            let t = w.rho_translate();
            let strict = t.l().windows(2).all(|p| p[0] > p[1]) && t.r().windows(2).all(|p| p[0] < p[1]);
            prop_assert_eq!(w.is_dominant(), strict);
        }

        #[test]
        fn entry_agrees_with_entry_part(w in any_weight()) {
            for j in 1..=w.m() + w.n() {
                let expected = if j <= w.m() { w.entry_part(0, j) } else { w.entry_part(1, j - w.m()) };
                prop_assert_eq!(w.entry(j).unwrap(), expected.unwrap());
            }
        }
    }
}
