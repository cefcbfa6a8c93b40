//! Weight diagrams and cup diagrams on the integer line.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariants::block_coordinates;
use crate::weights::Weight;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Symbol {
    Empty,
    Dot,
    Cross,
    Down,
    Up,
}

impl Symbol {
    pub fn glyph(self) -> char {
        match self {
            Symbol::Empty => '∅',
            Symbol::Dot => '•',
            Symbol::Cross => '×',
            Symbol::Down => '▼',
            Symbol::Up => '▲',
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightDiagram {
    symbols: BTreeMap<i64, Symbol>,
}

impl WeightDiagram {
    pub fn get(&self, pos: i64) -> Symbol {
        self.symbols.get(&pos).copied().unwrap_or(Symbol::Empty)
    }

    /// Non-empty positions in increasing order.
    pub fn support(&self) -> impl Iterator<Item = (i64, Symbol)> + '_ {
        self.symbols.iter().map(|(&p, &s)| (p, s))
    }

    /// Smallest interval holding every non-empty position.
    pub fn window(&self) -> Option<(i64, i64)> {
        let lo = *self.symbols.keys().next()?;
        let hi = *self.symbols.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn positions_of(&self, sym: Symbol) -> Vec<i64> {
        self.support()
            .filter(|&(_, s)| s == sym)
            .map(|(p, _)| p)
            .collect()
    }

    pub fn render_text(&self, window: Option<(i64, i64)>) -> String {
        render(self, &[], window)
    }
}

/// A cup connecting a `▼` at `left` with the `▲` it is matched to at `right`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cup {
    pub left: i64,
    pub right: i64,
}

impl Cup {
    pub fn contains(&self, other: &Cup) -> bool {
        self.left < other.left && other.right < self.right
    }

    pub fn crosses(&self, other: &Cup) -> bool {
        let (a, b) = if self.left < other.left {
            (self, other)
        } else {
            (other, self)
        };
        a.left < b.left && b.left < a.right && a.right < b.right
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CupDiagram {
    base: WeightDiagram,
    cups: Vec<Cup>,
}

impl CupDiagram {
    pub fn base(&self) -> &WeightDiagram {
        &self.base
    }

    /// Cups in the order they are closed while scanning left to right.
    pub fn cups(&self) -> &[Cup] {
        &self.cups
    }

    /// Symbol at `pos`, with matched empty slots shown as `▲`.
    pub fn get(&self, pos: i64) -> Symbol {
        if self.cups.iter().any(|c| c.right == pos) {
            Symbol::Up
        } else {
            self.base.get(pos)
        }
    }

    pub fn window(&self) -> Option<(i64, i64)> {
        let (lo, hi) = self.base.window()?;
        let hi = self.cups.iter().map(|c| c.right).fold(hi, i64::max);
        Some((lo, hi))
    }

    pub fn render_text(&self, window: Option<(i64, i64)>) -> String {
        render(&self.base, &self.cups, window)
    }

    pub fn render_svg(&self, style: &SvgStyle) -> String {
        svg(self, style)
    }
}

pub fn weight_diagram(w: &Weight) -> Result<WeightDiagram> {
    let c = block_coordinates(w)?;
    let mut symbols = BTreeMap::new();
    for &p in &c.typ0 {
        symbols.insert(p, Symbol::Dot);
    }
    for &p in &c.typ1 {
        symbols.insert(p, Symbol::Cross);
    }
    for &p in &c.atyp {
        symbols.insert(p, Symbol::Down);
    }
    Ok(WeightDiagram { symbols })
}

/// Matches each `▼` with the first free `∅` to its right, treating `▼` as an
/// opening bracket; `•` and `×` are transparent.
pub fn cup_diagram(w: &Weight) -> Result<CupDiagram> {
    let base = weight_diagram(w)?;
    let downs = base.positions_of(Symbol::Down);
    let mut cups = Vec::with_capacity(downs.len());
    let Some(&first) = downs.first() else {
        return Ok(CupDiagram { base, cups });
    };
    let mut open: Vec<i64> = Vec::new();
    let mut pos = first;
    let mut next_down = 0;
    while next_down < downs.len() || !open.is_empty() {
        match base.get(pos) {
            Symbol::Down => {
                open.push(pos);
                next_down += 1;
            }
            Symbol::Empty => {
                if let Some(left) = open.pop() {
                    cups.push(Cup { left, right: pos });
                }
            }
            _ => {}
        }
        pos += 1;
    }
    Ok(CupDiagram { base, cups })
}

fn default_window(base: &WeightDiagram, cups: &[Cup]) -> Option<(i64, i64)> {
    let (lo, hi) = base.window()?;
    let hi = cups.iter().map(|c| c.right).fold(hi, i64::max);
    Some((lo - 1, hi + 1))
}

/// Nesting height: 1 for a cup with nothing inside, else one more than the
/// tallest cup it contains.
fn cup_heights(cups: &[Cup]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..cups.len()).collect();
    order.sort_by_key(|&i| cups[i].right - cups[i].left);
    let mut height = vec![0; cups.len()];
    for &i in &order {
        height[i] = 1 + order
            .iter()
            .filter(|&&j| cups[i].contains(&cups[j]))
            .map(|&j| height[j])
            .max()
            .unwrap_or(0);
    }
    height
}

fn render(base: &WeightDiagram, cups: &[Cup], window: Option<(i64, i64)>) -> String {
    let Some((lo, hi)) = window.or_else(|| default_window(base, cups)) else {
        return String::new();
    };
    if hi < lo {
        return String::new();
    }
    let width = (hi - lo + 1) as usize;
    let sym = |p: i64| {
        if cups.iter().any(|c| c.right == p) {
            Symbol::Up
        } else {
            base.get(p)
        }
    };
    let mut lines = vec![(lo..=hi)
        .map(|p| sym(p).glyph().to_string())
        .collect::<Vec<_>>()
        .join(" ")];

    let heights = cup_heights(cups);
    let rows = heights.iter().copied().max().unwrap_or(0);
    for row in 1..=rows {
        // two cells per position: the glyph column and the gap after it
        let mut cells = vec![' '; 2 * width - 1];
        let col =
            |p: i64| -> Option<usize> { (lo..=hi).contains(&p).then(|| 2 * (p - lo) as usize) };
        for (cup, &h) in cups.iter().zip(&heights) {
            if h > row {
                for p in [cup.left, cup.right] {
                    if let Some(c) = col(p) {
                        cells[c] = '│';
                    }
                }
            } else if h == row {
                let a = col(cup.left.max(lo)).unwrap_or(0);
                let b = col(cup.right.min(hi)).unwrap_or(2 * width - 2);
                for cell in &mut cells[a..=b] {
                    *cell = '─';
                }
                if cup.left >= lo {
                    cells[a] = '╰';
                }
                if cup.right <= hi {
                    cells[b] = '╯';
                }
            }
        }
        lines.push(cells.into_iter().collect::<String>().trim_end().to_string());
    }
    let mut out = lines.join("\n");
    out.push('\n');
    out
}

/// Layout parameters for [`CupDiagram::render_svg`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SvgStyle {
    pub spacing: f64,
    pub margin: f64,
    pub font_size: f64,
    pub stroke: String,
    pub stroke_width: f64,
    pub window: Option<(i64, i64)>,
}

impl Default for SvgStyle {
    fn default() -> Self {
        SvgStyle {
            spacing: 24.0,
            margin: 24.0,
            font_size: 16.0,
            stroke: "black".into(),
            stroke_width: 1.5,
            window: None,
        }
    }
}

fn svg(d: &CupDiagram, style: &SvgStyle) -> String {
    let (lo, hi) = style
        .window
        .or_else(|| default_window(&d.base, &d.cups))
        .unwrap_or((0, 0));
    let hi = hi.max(lo);
    let s = style.spacing;
    let tallest = d
        .cups
        .iter()
        .map(|c| (c.right - c.left) as f64)
        .fold(0.0, f64::max);
    let baseline = style.margin + style.font_size;
    let width = 2.0 * style.margin + (hi - lo) as f64 * s;
    let height = baseline + tallest * s / 2.0 + 2.0 * style.margin;
    let x = |p: i64| style.margin + (p - lo) as f64 * s;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(
        out,
        r#"  <line x1="{}" y1="{baseline}" x2="{}" y2="{baseline}" stroke="{}" stroke-width="0.5"/>"#,
        style.margin - s / 2.0,
        x(hi) + s / 2.0,
        style.stroke
    );
    for p in lo..=hi {
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" text-anchor="middle">{}</text>"#,
            x(p),
            baseline - 4.0,
            style.font_size,
            d.get(p).glyph()
        );
        let _ = writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="{}" text-anchor="middle" fill="gray">{p}</text>"#,
            x(p),
            style.margin - 4.0,
            style.font_size * 0.5
        );
    }
    for c in &d.cups {
        let (x1, x2) = (x(c.left), x(c.right));
        let rx = (x2 - x1) / 2.0;
        let _ = writeln!(
            out,
            r#"  <path d="M {x1} {baseline} A {rx} {rx} 0 0 0 {x2} {baseline}" fill="none" stroke="{}" stroke-width="{}"/>"#,
            style.stroke, style.stroke_width
        );
    }
    out.push_str("</svg>\n");
    out
}
