//! Subsets on the command line: comma-separated indices or labels.

use anyhow::{bail, Result};
use truss_core::Subset;

/// Splits on commas outside parentheses and brackets, so labels such as
/// `(0,1)` survive.
fn tokens(spec: &str) -> Vec<String> {
    let spec = spec.trim();
    let spec = spec.strip_prefix('{').and_then(|s| s.strip_suffix('}')).unwrap_or(spec);
    let mut out = Vec::new();
    let (mut depth, mut cur) = (0i32, String::new());
    for ch in spec.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur));
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur);
    out.into_iter()
        .map(|t| t.trim().to_string())
        .filter(|t| !t.is_empty())
        .collect()
}

/// Resolves one element: an exact label wins, otherwise a decimal index.
pub fn element(token: &str, n: usize, label: &dyn Fn(usize) -> String) -> Result<usize> {
    let token = token.trim();
    if let Some(i) = (0..n).find(|&i| label(i) == token) {
        return Ok(i);
    }
    match token.parse::<usize>() {
        Ok(i) if i < n => Ok(i),
        Ok(i) => bail!("index {i} out of range for order {n}"),
        Err(_) => bail!("{token:?} is neither a label nor an index"),
    }
}

pub fn parse(spec: &str, n: usize, label: &dyn Fn(usize) -> String) -> Result<Subset> {
    if spec.trim() == "all" {
        return Ok(Subset::full(n));
    }
    let items = tokens(spec)
        .iter()
        .map(|t| element(t, n, label))
        .collect::<Result<Vec<_>>>()?;
    if items.is_empty() {
        bail!("empty subset");
    }
    Ok(Subset::new(n, items).expect("indices checked"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indices_and_labels() {
        let labels = ["(0,0)", "(0,1)", "(1,0)", "(1,1)"];
        let l = |i: usize| labels[i].to_string();
        assert_eq!(parse("(0,1),(1,1)", 4, &l).unwrap().members(), &[1, 3]);
        assert_eq!(parse("0, 2", 4, &l).unwrap().members(), &[0, 2]);
        assert_eq!(parse("{3}", 4, &l).unwrap().members(), &[3]);
        assert_eq!(parse("all", 4, &l).unwrap().len(), 4);
        assert!(parse("7", 4, &l).is_err());
        assert!(parse("", 4, &l).is_err());
    }
}
