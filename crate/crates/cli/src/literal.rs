//! Inline matroid literals: `d=2 n=6 nonbases=12,34,56` or the `bases=`
//! form. Subset tokens are digit strings for elements up to 9, or
//! dot-separated numbers like `1.2.10` for larger ground sets.

use splitmat::{Error, Matroid, Result, Subset};

pub fn parse_subset_token(tok: &str) -> Result<Subset> {
    if tok.is_empty() {
        return Err(Error::InvalidParams("empty subset token".into()));
    }
    let elems: Vec<usize> = if tok.contains('.') {
        tok.split('.')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::InvalidParams(format!("bad element `{p}` in `{tok}`")))
            })
            .collect::<Result<_>>()?
    } else {
        tok.chars()
            .map(|ch| match ch.to_digit(10) {
                Some(d) if d >= 1 => Ok(d as usize),
                _ => Err(Error::InvalidParams(format!(
                    "bad element `{ch}` in `{tok}`; use digits 1-9 or the dotted form"
                ))),
            })
            .collect::<Result<_>>()?
    };
    Ok(Subset::from_elems(elems))
}

fn parse_subset_list(value: &str) -> Result<Vec<Subset>> {
    if value.is_empty() {
        return Ok(Vec::new());
    }
    value.split(',').map(parse_subset_token).collect()
}

pub fn parse_matroid_literal(text: &str) -> Result<Matroid> {
    let mut d = None;
    let mut n = None;
    let mut bases = None;
    let mut nonbases = None;
    for tok in text.split_whitespace() {
        let Some((key, value)) = tok.split_once('=') else {
            return Err(Error::InvalidParams(format!("expected key=value, got `{tok}`")));
        };
        match key {
            "d" => {
                d = Some(value.parse::<usize>().map_err(|_| {
                    Error::InvalidParams(format!("bad rank `{value}`"))
                })?)
            }
            "n" => {
                n = Some(value.parse::<usize>().map_err(|_| {
                    Error::InvalidParams(format!("bad size `{value}`"))
                })?)
            }
            "bases" => bases = Some(parse_subset_list(value)?),
            "nonbases" => nonbases = Some(parse_subset_list(value)?),
            other => return Err(Error::InvalidParams(format!("unknown key `{other}`"))),
        }
    }
    let d = d.ok_or_else(|| Error::InvalidParams("literal needs d=".into()))?;
    let n = n.ok_or_else(|| Error::InvalidParams("literal needs n=".into()))?;
    match (bases, nonbases) {
        (Some(b), None) => Matroid::from_bases(n, d, b),
        (None, Some(nb)) => Matroid::from_nonbases(n, d, nb),
        _ => Err(Error::InvalidParams("literal needs exactly one of bases= or nonbases=".into())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_nonbases_form() {
        let m = parse_matroid_literal("d=2 n=6 nonbases=12,34,56").unwrap();
        assert_eq!((m.rank(), m.n(), m.num_bases()), (2, 6, 12));
    }

    #[test]
    fn parses_bases_and_dotted_form() {
        let m = parse_matroid_literal("d=1 n=2 bases=1,2").unwrap();
        assert_eq!(m, Matroid::uniform(1, 2).unwrap());
        let m = parse_matroid_literal("d=2 n=10 nonbases=9.10").unwrap();
        assert_eq!((m.rank(), m.n(), m.num_bases()), (2, 10, 44));
    }

    #[test]
    fn rejects_bad_literals() {
        assert!(parse_matroid_literal("d=2 nonbases=12").is_err());
        assert!(parse_matroid_literal("d=2 n=4 bases=12 nonbases=34").is_err());
        assert!(parse_matroid_literal("d=2 n=4 bases=1x").is_err());
    }
}
