#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use superalg::grothendieck::Partition;
use superalg::Weight;

/// Polynomial in `k` variables: exponent vector to coefficient.
pub type Poly = BTreeMap<Vec<u32>, i64>;

/// `s_λ(x_1, …, x_k)` summed over semistandard tableaux.
pub fn schur(shape: &[i64], k: usize) -> Poly {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    let mut out = Poly::new();
    fn fill(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        k: usize,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut e = vec![0u32; k];
            for row in grid.iter() {
                for &v in row {
                    e[v - 1] += 1;
                }
            }
            *out.entry(e).or_insert(0) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=k {
            grid[r][c] = v;
            fill(idx + 1, cells, grid, k, out);
        }
        grid[r][c] = 0;
    }
    fill(0, &cells, &mut grid, k, &mut out);
    out
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Writes a symmetric polynomial in the Schur basis by peeling off the
/// lexicographically largest monomial.
pub fn schur_expand(mut p: Poly, k: usize) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    while let Some((e, &c)) = p.iter().next_back() {
        let shape: Vec<i64> = e.iter().map(|&x| x as i64).collect();
        let s = schur(&shape, k);
        for (m, v) in s {
            let entry = p.entry(m.clone()).or_insert(0);
            *entry -= c * v;
            if *entry == 0 {
                p.remove(&m);
            }
        }
        out.insert(
            Partition::new(shape).expect("leading exponent is dominant"),
            c,
        );
    }
    out
}

/// Every partition of size at most `max_size` with at most `rows` parts.
pub fn small_partitions(max_size: i64, rows: usize) -> Vec<Partition> {
    superalg::grothendieck::partitions_in_box(rows, max_size)
        .into_iter()
        .filter(|p| p.size() <= max_size)
        .collect()
}

pub fn random_dominant(rng: &mut impl Rng, m: usize, n: usize, lo: i64, hi: i64) -> Weight {
    let mut l: Vec<i64> = (0..m).map(|_| rng.gen_range(lo..=hi)).collect();
    let mut r: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
    l.sort_unstable_by(|a, b| b.cmp(a));
    r.sort_unstable();
    Weight::new(l, r).unwrap()
}
