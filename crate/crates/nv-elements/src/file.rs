use cantor_core::{Brick, ParseError, Pattern};

use crate::{Element, ElementError};

/// Serializes an element in the `.el` format:
///
/// ```text
/// nV dim=<n> k=<count>
/// <domain brick> => <range brick>     (one line per pair, in number order)
/// ```
pub fn write_element(f: &Element) -> String {
    let mut out = format!("nV dim={} k={}\n", f.dim(), f.size());
    for i in 0..f.size() {
        out.push_str(&format!("{} => {}\n", f.domain().brick(i), f.range().brick(i)));
    }
    out
}

/// Parses the `.el` format produced by [`write_element`]; the round trip is
/// bit-exact.
pub fn read_element(text: &str) -> Result<Element, ParseError> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let header = lines.next().ok_or_else(|| ParseError::new("empty element file"))?;
    let rest = header
        .strip_prefix("nV dim=")
        .ok_or_else(|| ParseError::new("element file must start with \"nV dim=<n> k=<count>\""))?;
    let (dim_s, k_s) = rest
        .split_once(" k=")
        .ok_or_else(|| ParseError::new("header missing \" k=<count>\""))?;
    let dim: usize = dim_s
        .trim()
        .parse()
        .map_err(|_| ParseError::new("bad dimension in header"))?;
    let k: usize = k_s
        .trim()
        .parse()
        .map_err(|_| ParseError::new("bad pair count in header"))?;

    let mut dom: Vec<Brick> = Vec::with_capacity(k);
    let mut ran: Vec<Brick> = Vec::with_capacity(k);
    for line in lines {
        let (d, r) = line
            .split_once("=>")
            .ok_or_else(|| ParseError::new(format!("pair line without \"=>\": {line:?}")))?;
        dom.push(d.trim().parse()?);
        ran.push(r.trim().parse()?);
    }
    if dom.len() != k {
        return Err(ParseError::new(format!("header says k={k} but found {} pairs", dom.len())));
    }
    if dom.iter().chain(&ran).any(|b| b.dim() != dim) {
        return Err(ParseError::new("brick dimension disagrees with header"));
    }
    let element = Element::new(
        Pattern::new(dom).map_err(|e| ParseError::new(format!("invalid domain: {e}")))?,
        Pattern::new(ran).map_err(|e| ParseError::new(format!("invalid range: {e}")))?,
    );
    element.map_err(|e: ElementError| ParseError::new(e.to_string()))
}
