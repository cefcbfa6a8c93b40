use std::fs;
use std::io::Read;

use superalg::grothendieck::{G0Character, Term};
use superalg::{Error, Weight, WeightJson};

use crate::Failure;

/// The text behind an argument: `-` is standard input, `@path` a file,
/// anything else is taken literally.
fn source(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(Error::from)?;
        Ok(s)
    } else if let Some(path) = arg.strip_prefix('@') {
        Ok(fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?)
    } else {
        Ok(arg.to_string())
    }
}

pub fn weight(arg: &str) -> Result<Weight, Failure> {
    let text = source(arg)?;
    let text = text.trim();
    if text.starts_with('{') {
        let j: WeightJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        return Ok(Weight::from_json(j)?);
    }
    Ok(text.parse()?)
}

pub fn module(arg: &str) -> Result<G0Character, Failure> {
    let text = source(arg)?;
    let terms: Vec<Term> = serde_json::from_str(&text).map_err(Error::from)?;
    Ok(G0Character::try_from(terms)?)
}
