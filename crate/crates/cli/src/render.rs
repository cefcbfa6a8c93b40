use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use superalg::diagrams::{cup_diagram, Cup, SvgStyle};
use superalg::grothendieck::{
    decompose_with, DecomposeOptions, G0Character, SupportCache, CACHE_VERSION,
};
use superalg::kacfactors::{kac_composition_factors_with, kac_irr_mult, FactorOptions};
use superalg::kl::{gen_kl, mult_kac_in_irrd, LaurentPolynomial};
use superalg::{invariants, Weight, WeightJson};

use crate::args::Format;
use crate::Failure;

type Out = Result<String, Failure>;

fn pick(
    format: Option<Format>,
    default: Format,
    allowed: &[Format],
    what: &str,
) -> Result<Format, Failure> {
    let f = format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(Failure::Usage(
            format!("{what} does not support --format {f:?}").to_lowercase(),
        ))
    }
}

fn json<T: Serialize>(v: &T) -> Out {
    let mut s = serde_json::to_string(v).map_err(superalg::Error::from)?;
    s.push('\n');
    Ok(s)
}

fn list(xs: &[i64]) -> String {
    xs.iter().map(i64::to_string).collect::<Vec<_>>().join(", ")
}

/// Entries right-aligned to a common width, as in `( 2,  1 | -1,  0)`.
fn aligned(w: &Weight, width: usize) -> String {
    let side = |xs: &[i64]| {
        xs.iter()
            .map(|x| format!("{x:>width$}"))
            .collect::<Vec<_>>()
            .join(", ")
    };
    format!("({} | {})", side(w.l()), side(w.r()))
}

fn entry_width<'a>(ws: impl IntoIterator<Item = &'a Weight>) -> usize {
    ws.into_iter()
        .flat_map(|w| w.l().iter().chain(w.r()))
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1)
}

#[derive(Serialize)]
struct Invariants {
    adeg: usize,
    atyp: Vec<i64>,
    atypical_roots: Vec<[usize; 2]>,
    atypicality_matrix: Vec<Vec<i64>>,
    height: Vec<i64>,
    rho_translate: WeightJson,
    shape: [usize; 2],
    typ: [Vec<i64>; 2],
    weight: WeightJson,
}

pub fn invariants(w: &Weight, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Json,
        &[Format::Json, Format::Pretty, Format::Latex],
        "invariants",
    )?;
    let roots = invariants::atypical_roots(w)?;
    let coords = invariants::block_coordinates(w)?;
    let height = invariants::height_vector(w)?.0;
    let matrix = invariants::atypicality_matrix(w);
    let (m, n) = w.shape();
    match format {
        Format::Json => json(&Invariants {
            adeg: roots.len(),
            atyp: coords.atyp,
            atypical_roots: roots.iter().map(|r| [r.i, r.j]).collect(),
            atypicality_matrix: matrix,
            height,
            rho_translate: w.rho_translate().to_json(),
            shape: [m, n],
            typ: [coords.typ0, coords.typ1],
            weight: w.to_json(),
        }),
        Format::Pretty => {
            let mut s = String::new();
            writeln!(s, "{w:?}").unwrap();
            writeln!(s, "rho: {:?}", w.rho_translate()).unwrap();
            let roots: Vec<String> = roots
                .iter()
                .map(|r| format!("({}, {})", r.i, r.j))
                .collect();
            writeln!(s, "atypical roots: [{}]", roots.join(", ")).unwrap();
            writeln!(s, "adeg: {}", roots.len()).unwrap();
            writeln!(s, "atypicality matrix:").unwrap();
            let width = matrix
                .iter()
                .flatten()
                .map(|x| x.to_string().len())
                .max()
                .unwrap_or(1);
            for row in &matrix {
                let cells: Vec<String> = row.iter().map(|x| format!("{x:>width$}")).collect();
                writeln!(s, "[{}]", cells.join(" ")).unwrap();
            }
            writeln!(
                s,
                "typ: [[{}], [{}]]",
                list(&coords.typ0),
                list(&coords.typ1)
            )
            .unwrap();
            writeln!(s, "atyp: [{}]", list(&coords.atyp)).unwrap();
            writeln!(s, "height: [{}]", list(&height)).unwrap();
            Ok(s)
        }
        _ => {
            let mut s = String::new();
            writeln!(s, "\\lambda = {}", w.to_latex()).unwrap();
            writeln!(s, "\\lambda^\\rho = {}", w.rho_translate().to_latex()).unwrap();
            writeln!(s, "\\begin{{pmatrix}}").unwrap();
            for row in &matrix {
                let cells: Vec<String> = row.iter().map(i64::to_string).collect();
                writeln!(s, "{} \\\\", cells.join(" & ")).unwrap();
            }
            writeln!(s, "\\end{{pmatrix}}").unwrap();
            writeln!(
                s,
                "\\operatorname{{typ}}(\\lambda) = (({}), ({}))",
                list(&coords.typ0),
                list(&coords.typ1)
            )
            .unwrap();
            writeln!(
                s,
                "\\operatorname{{atyp}}(\\lambda) = ({})",
                list(&coords.atyp)
            )
            .unwrap();
            writeln!(s, "h(\\lambda) = ({})", list(&height)).unwrap();
            Ok(s)
        }
    }
}

#[derive(Serialize)]
struct Position {
    position: i64,
    symbol: char,
}

#[derive(Serialize)]
struct Diagram {
    cups: Vec<Cup>,
    symbols: Vec<Position>,
    window: Option<[i64; 2]>,
}

pub fn diagram(w: &Weight, window: Option<(i64, i64)>, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Pretty,
        &[Format::Pretty, Format::Json, Format::Svg],
        "diagram",
    )?;
    let d = cup_diagram(w)?;
    match format {
        Format::Svg => Ok(d.render_svg(&SvgStyle {
            window,
            ..SvgStyle::default()
        })),
        Format::Json => {
            let shown = window.or_else(|| d.window());
            let symbols = shown
                .map(|(lo, hi)| {
                    (lo..=hi)
                        .map(|p| Position {
                            position: p,
                            symbol: d.get(p).glyph(),
                        })
                        .collect()
                })
                .unwrap_or_default();
            json(&Diagram {
                cups: d.cups().to_vec(),
                symbols,
                window: shown.map(|(a, b)| [a, b]),
            })
        }
        _ => {
            let mut s = d.render_text(window);
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn latex_poly(p: &LaurentPolynomial) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut s = String::new();
    for (k, (e, c)) in p.terms().enumerate() {
        if k == 0 {
            if c < 0 {
                s.push('-');
            }
        } else {
            s.push_str(if c < 0 { " - " } else { " + " });
        }
        let mag = c.abs();
        match (e, mag) {
            (0, _) => write!(s, "{mag}"),
            (1, 1) => write!(s, "q"),
            (1, _) => write!(s, "{mag}q"),
            (_, 1) => write!(s, "q^{{{e}}}"),
            _ => write!(s, "{mag}q^{{{e}}}"),
        }
        .unwrap();
    }
    s
}

#[derive(Serialize)]
struct Monomial {
    coeff: i64,
    exp: i64,
}

#[derive(Serialize)]
struct Kl {
    at_minus_one: i64,
    polynomial: String,
    terms: Vec<Monomial>,
}

pub fn kl(lam: &Weight, mu: &Weight, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Pretty,
        &[Format::Pretty, Format::Json, Format::Latex],
        "kl",
    )?;
    let p = gen_kl(lam, mu)?;
    let v = p.eval(-1);
    Ok(match format {
        Format::Json => json(&Kl {
            at_minus_one: v,
            polynomial: p.to_string(),
            terms: p
                .terms()
                .map(|(exp, coeff)| Monomial { coeff, exp })
                .collect(),
        })?,
        Format::Latex => format!("K_{{\\lambda,\\mu}}(q) = {}\n", latex_poly(&p)),
        _ => format!("{p}\nK(-1) = {v}\n"),
    })
}

#[derive(Serialize)]
struct Mult {
    irr_in_kac: i64,
    kac_in_irr: i64,
}

pub fn mult(lam: &Weight, mu: &Weight, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Pretty,
        &[Format::Pretty, Format::Json, Format::Latex],
        "mult",
    )?;
    let a = kac_irr_mult(lam, mu)?;
    let b = mult_kac_in_irrd(lam, mu)?;
    Ok(match format {
        Format::Json => json(&Mult { irr_in_kac: a, kac_in_irr: b })?,
        Format::Latex => format!(
            "[K(\\lambda) : L(\\mu)] = {a}\n[\\operatorname{{ch}} L(\\lambda) : \\operatorname{{ch}} K(\\mu)] = {b}\n"
        ),
        _ => format!("[K(λ) : L(μ)] = {a}\n[ch L(λ) : ch K(μ)] = {b}\n"),
    })
}

pub fn factors(w: &Weight, slack: Option<i64>, rho: bool, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Json,
        &[Format::Json, Format::Pretty, Format::Latex],
        "factors",
    )?;
    let opts = FactorOptions {
        slack,
        ..FactorOptions::default()
    };
    let mut fs = kac_composition_factors_with(w, &opts)?;
    if rho {
        fs = fs.iter().map(Weight::rho_translate).collect();
    }
    Ok(match format {
        Format::Json => json(&fs.iter().map(Weight::to_json).collect::<Vec<_>>())?,
        Format::Latex => fs.iter().map(|f| f.to_latex() + "\n").collect(),
        _ => {
            let width = entry_width(&fs);
            let num = fs.len().to_string().len();
            fs.iter()
                .enumerate()
                .map(|(i, f)| format!("{:>num$}: {}\n", i + 1, aligned(f, width)))
                .collect()
        }
    })
}

pub fn decompose(
    module: &G0Character,
    cache: Option<&Path>,
    max_iterations: usize,
    format: Option<Format>,
) -> Out {
    let format = pick(
        format,
        Format::Json,
        &[Format::Json, Format::Pretty, Format::Latex],
        "decompose",
    )?;
    let store = cache.map(SupportCache::open).transpose()?;
    let d = decompose_with(module, store.as_ref(), &DecomposeOptions { max_iterations })?;
    if let (Some(c), Some(path)) = (&store, cache) {
        c.store(path)?;
    }
    Ok(match format {
        Format::Json => json(&d)?,
        Format::Latex => {
            if d.is_empty() {
                return Ok("0\n".into());
            }
            let terms: Vec<String> = d
                .iter()
                .map(|(w, k)| {
                    let coeff = if k == 1 {
                        String::new()
                    } else {
                        format!("{k} \\cdot ")
                    };
                    format!("{coeff}\\operatorname{{ch}} L{}", w.to_latex())
                })
                .collect();
            terms.join(" + ") + "\n"
        }
        _ => {
            let width = entry_width(d.iter().map(|(w, _)| w));
            let terms: Vec<String> = d
                .iter()
                .map(|(w, k)| {
                    let (m, n) = w.shape();
                    format!("gl({m}|{n}) weight {}: {k}", aligned(w, width))
                })
                .collect();
            format!("{{{}}}\n", terms.join(", "))
        }
    })
}

#[derive(Serialize)]
struct CacheInfo<'a> {
    exists: bool,
    irreducible: usize,
    kac: usize,
    path: &'a Path,
    version: u64,
}

pub fn cache_info(cache: Option<&Path>, format: Option<Format>) -> Out {
    let format = pick(
        format,
        Format::Pretty,
        &[Format::Pretty, Format::Json],
        "cache-info",
    )?;
    let path =
        cache.ok_or_else(|| Failure::Usage("cache-info needs --cache or SUPERALG_CACHE".into()))?;
    let store = SupportCache::open(path)?;
    let (kac, irreducible) = store.len();
    let info = CacheInfo {
        exists: path.exists(),
        irreducible,
        kac,
        path,
        version: CACHE_VERSION,
    };
    match format {
        Format::Json => json(&info),
        _ => Ok(format!(
            "path: {}\nexists: {}\nversion: {}\nkac entries: {}\nirreducible entries: {}\n",
            path.display(),
            info.exists,
            info.version,
            info.kac,
            info.irreducible
        )),
    }
}
