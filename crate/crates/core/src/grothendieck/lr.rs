use std::collections::{BTreeMap, HashMap};

use super::partition::Partition;
use crate::error::{Error, Result};

type State = (Vec<i64>, Vec<i64>);

/// Appends the letters of `content` one value at a time, keeping skew
/// tableaux whose reverse reading word is a lattice word. `bound[i]` caps
/// row `i`; its length is the number of rows available.
fn lr_fill(inner: &[i64], content: &Partition, bound: &[i64]) -> HashMap<Vec<i64>, u64> {
    let rows = bound.len();
    let mut states: HashMap<State, u64> = HashMap::new();
    states.insert((inner.to_vec(), Vec::new()), 1);
    for (j, &count) in content.parts().iter().enumerate() {
        let mut next: HashMap<State, u64> = HashMap::new();
        for ((shape, prev), ways) in states {
            let mut x = vec![0i64; rows];
            strips(
                &shape,
                &prev,
                j == 0,
                bound,
                count,
                0,
                0,
                0,
                &mut x,
                &mut |x| {
                    let grown: Vec<i64> = shape.iter().zip(x).map(|(s, d)| s + d).collect();
                    *next.entry((grown, x.to_vec())).or_insert(0) += ways;
                },
            );
        }
        states = next;
    }
    let mut out = HashMap::new();
    for ((shape, _), ways) in states {
        *out.entry(shape).or_insert(0) += ways;
    }
    out
}

/// Horizontal strips of `left` boxes added from row `i` on. `placed` counts
/// boxes already added in rows `< i`, `prev_sum` the previous letter's boxes
/// in rows `< i`.
#[allow(clippy::too_many_arguments)]
fn strips(
    shape: &[i64],
    prev: &[i64],
    first: bool,
    bound: &[i64],
    left: i64,
    i: usize,
    placed: i64,
    prev_sum: i64,
    x: &mut [i64],
    emit: &mut dyn FnMut(&[i64]),
) {
    if left == 0 {
        emit(x);
        return;
    }
    if i == shape.len() {
        return;
    }
    let mut cap = bound[i] - shape[i];
    if i > 0 {
        cap = cap.min(shape[i - 1] - shape[i]);
    }
    if !first {
        cap = cap.min(prev_sum - placed);
    }
    let cap = cap.min(left).max(0);
    let prev_here = prev.get(i).copied().unwrap_or(0);
    for d in (0..=cap).rev() {
        x[i] = d;
        strips(
            shape,
            prev,
            first,
            bound,
            left - d,
            i + 1,
            placed + d,
            prev_sum + prev_here,
            x,
            emit,
        );
    }
    x[i] = 0;
}

/// `s_a · s_b` as a map from partitions to Littlewood–Richardson
/// coefficients, keeping only shapes with at most `max_rows` rows.
pub fn lr_product(
    a: &Partition,
    b: &Partition,
    max_rows: Option<usize>,
) -> BTreeMap<Partition, u64> {
    let rows = max_rows.unwrap_or(a.len() + b.len());
    if a.len() > rows || b.len() > rows {
        return BTreeMap::new();
    }
    let width = a.part(0) + b.size();
    let inner = a.padded(rows).expect("row count checked");
    lr_fill(&inner, b, &vec![width; rows])
        .into_iter()
        .map(|(s, c)| (Partition::new(s).expect("filling keeps partitions"), c))
        .collect()
}

/// The coefficient `c^{outer}_{inner, other}`.
pub fn lr_coefficient(outer: &Partition, inner: &Partition, other: &Partition) -> u64 {
    if outer.size() != inner.size() + other.size()
        || !outer.contains(inner)
        || !outer.contains(other)
    {
        return 0;
    }
    let rows = outer.len();
    let start = inner.padded(rows).expect("contained in outer");
    let bound = outer.padded(rows).expect("own length");
    lr_fill(&start, other, &bound)
        .get(&bound)
        .copied()
        .unwrap_or(0)
}

fn check_highest(hw: &[i64]) -> Result<()> {
    if hw.is_empty() {
        return Err(Error::Dimension("gl(0) has no weights".into()));
    }
    if hw.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::NotDominant(format!(
            "{hw:?} is not weakly decreasing"
        )));
    }
    Ok(())
}

/// Multiplicities of the irreducible gl(k)-modules in `L(hw) ⊗ S_p(ℂ^k)`,
/// or in `L(hw) ⊗ S_p(ℂ^k)*` when `dual` is set.
pub fn tensor_expand(hw: &[i64], p: &Partition, dual: bool) -> Result<BTreeMap<Vec<i64>, u64>> {
    check_highest(hw)?;
    let k = hw.len();
    if p.len() > k {
        return Err(Error::Dimension(format!(
            "S_{p} vanishes on a space of dimension {k}"
        )));
    }
    if dual {
        let star: Vec<i64> = hw.iter().rev().map(|v| -v).collect();
        return Ok(tensor_expand(&star, p, false)?
            .into_iter()
            .map(|(v, c)| (v.iter().rev().map(|x| -x).collect(), c))
            .collect());
    }
    let shift = hw[k - 1];
    let a = Partition::new(hw.iter().map(|v| v - shift).collect())?;
    Ok(lr_product(&a, p, Some(k))
        .into_iter()
        .map(|(nu, c)| {
            (
                nu.padded(k)
                    .expect("row cap")
                    .iter()
                    .map(|v| v + shift)
                    .collect(),
                c,
            )
        })
        .collect())
}

/// The part of `L(hw) ⊗ S_p(ℂ^k)` with highest weights `≤ cap` entrywise.
pub fn tensor_expand_within(
    hw: &[i64],
    p: &Partition,
    cap: &[i64],
) -> Result<BTreeMap<Vec<i64>, u64>> {
    check_highest(hw)?;
    let k = hw.len();
    if cap.len() != k {
        return Err(Error::Dimension(format!(
            "cap {cap:?} has the wrong length for gl({k})"
        )));
    }
    if p.len() > k {
        return Err(Error::Dimension(format!(
            "S_{p} vanishes on a space of dimension {k}"
        )));
    }
    let room: i64 = hw.iter().zip(cap).map(|(h, c)| c - h).sum();
    if hw.iter().zip(cap).any(|(h, c)| c < h) || room < p.size() {
        return Ok(BTreeMap::new());
    }
    let shift = hw[k - 1];
    let inner: Vec<i64> = hw.iter().map(|v| v - shift).collect();
    let bound: Vec<i64> = cap.iter().map(|v| v - shift).collect();
    Ok(lr_fill(&inner, p, &bound)
        .into_iter()
        .map(|(nu, c)| (nu.iter().map(|v| v + shift).collect(), c))
        .collect())
}

/// Weyl dimension of the irreducible gl(k)-module of highest weight `hw`.
pub fn weyl_dimension(hw: &[i64]) -> Result<u128> {
    check_highest(hw)?;
    let k = hw.len();
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k {
        for j in i + 1..k {
            num *= (hw[i] - hw[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    Ok(num / den)
}
