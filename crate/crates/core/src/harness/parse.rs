//! Parsers for CLI literals: complex numbers as `a+bi` and the key=value
//! specs accepted by `eval`.

use crate::binom::{Family, Numerator, SumSpec, Weighting};
use crate::closedform::IdentityId;
use crate::gpl::{GplWord, MplSpec};
use crate::{C64, Error, Result};

/// Parse a complex literal: `0.5`, `1.5i`, `-0.3+0.2i`, `i`, `2-i`.
/// A Unicode minus sign is accepted alongside the ASCII one.
pub fn parse_complex(s: &str) -> Result<C64> {
    let norm: String = s
        .trim()
        .chars()
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    if norm.is_empty() {
        return Err(Error::Parse("empty complex literal".into()));
    }
    let bad = || Error::Parse(format!("malformed complex literal {s:?}"));

    // pure real fast path
    if !norm.contains('i') {
        return norm.parse::<f64>().map(|re| C64::new(re, 0.0)).map_err(|_| bad());
    }
    // strip the trailing i, then split an optional real part from the
    // imaginary coefficient at the last +/- that is not an exponent sign
    let body = norm.strip_suffix('i').ok_or_else(bad)?;
    let bytes = body.as_bytes();
    let mut split = None;
    for idx in (1..bytes.len()).rev() {
        let c = bytes[idx] as char;
        if (c == '+' || c == '-') && !matches!(bytes[idx - 1] as char, 'e' | 'E') {
            split = Some(idx);
            break;
        }
    }
    let (re_str, im_str) = match split {
        Some(idx) => (&body[..idx], &body[idx..]),
        None => ("", body),
    };
    let re = if re_str.is_empty() { 0.0 } else { re_str.parse::<f64>().map_err(|_| bad())? };
    let im = match im_str {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    Ok(C64::new(re, im))
}

fn parse_complex_list(s: &str) -> Result<Vec<C64>> {
    s.split(',').map(parse_complex).collect()
}

/// One evaluation request, parsed from `eval <kind> key=value ...`.
#[derive(Debug, Clone)]
pub enum EvalRequest {
    Series { spec: SumSpec, tol: f64 },
    Gpl { word: GplWord, tol: f64 },
    Mpl { spec: MplSpec, tol: f64, oracle: bool },
    Closed { id: IdentityId, param: C64 },
}

fn kv_map(args: &[String]) -> Result<std::collections::BTreeMap<String, String>> {
    let mut map = std::collections::BTreeMap::new();
    for a in args {
        let (k, v) = a
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("expected key=value, got {a:?}")))?;
        map.insert(k.to_ascii_lowercase(), v.to_string());
    }
    Ok(map)
}

fn parse_family(s: &str) -> Result<Family> {
    match s.to_ascii_uppercase().as_str() {
        "C2" => Ok(Family::C2),
        "C3" => Ok(Family::C3),
        "C4" => Ok(Family::C4),
        other => Err(Error::Parse(format!("unknown family {other:?}"))),
    }
}

fn parse_numerator(s: &str) -> Result<Numerator> {
    let ls = s.to_ascii_lowercase();
    if let Some(rest) = ls.strip_prefix("hprod:") {
        let powers: std::result::Result<Vec<u32>, _> =
            rest.split(',').map(|p| p.parse::<u32>()).collect();
        return powers
            .map(Numerator::HProd)
            .map_err(|_| Error::Parse(format!("bad hprod powers {rest:?}")));
    }
    match ls.as_str() {
        "one" | "one_over_k" | "one_over_nothing" => Ok(Numerator::One),
        "hk" => Ok(Numerator::Hk),
        "hk_minus_h2k" => Ok(Numerator::HkMinusH2k),
        "hk_minus_h3kp1" => Ok(Numerator::HkMinusH3kPlus1),
        "hk_minus_h2km2" => Ok(Numerator::HkMinusH2kMinus2),
        "hk_minus_h3km1" => Ok(Numerator::HkMinusH3kMinus1),
        "hk_minus_h3k" => Ok(Numerator::HkMinusH3k),
        "h2k_minus_h3k" => Ok(Numerator::H2kMinusH3k),
        "hkm1_minus_h2k" => Ok(Numerator::Hkm1MinusH2k),
        other => Err(Error::Parse(format!("unknown numerator sequence {other:?}"))),
    }
}

fn parse_weighting(s: &str) -> Result<Weighting> {
    match s.to_ascii_lowercase().as_str() {
        "plain" | "plain_k_power" => Ok(Weighting::PlainKPower),
        "k_plus_1" => Ok(Weighting::KPlus1),
        "k_plus_2" => Ok(Weighting::KPlus2),
        "3k_plus_1" | "three_k_plus_1" => Ok(Weighting::ThreeKPlus1),
        "3k_plus_2" | "three_k_plus_2" => Ok(Weighting::ThreeKPlus2),
        "2k_minus_1" | "two_k_minus_1" => Ok(Weighting::TwoKMinus1),
        "4k_plus_1" | "four_k_plus_1" => Ok(Weighting::FourKPlus1),
        "4k_plus_3" | "four_k_plus_3" => Ok(Weighting::FourKPlus3),
        other => Err(Error::Parse(format!("unknown weighting {other:?}"))),
    }
}

/// Parse an eval request: kind is one of `series | gpl | mpl | closed`.
pub fn parse_eval(kind: &str, args: &[String]) -> Result<EvalRequest> {
    let kv = kv_map(args)?;
    let tol = match kv.get("tol") {
        Some(t) => t
            .parse::<f64>()
            .map_err(|_| Error::Parse(format!("bad tol {t:?}")))?,
        None => 1e-10,
    };
    let need = |key: &str| -> Result<&String> {
        kv.get(key)
            .ok_or_else(|| Error::Parse(format!("missing required key {key:?}")))
    };
    match kind.to_ascii_lowercase().as_str() {
        "series" => {
            let family = parse_family(need("family")?)?;
            let r = match kv.get("r") {
                Some(r) => r.parse::<i32>().map_err(|_| Error::Parse(format!("bad r {r:?}")))?,
                None => 1,
            };
            if r < -1 {
                return Err(Error::Parse(format!("r must be >= -1, got {r}")));
            }
            let numerator = match kv.get("seq") {
                Some(s) => parse_numerator(s)?,
                None => Numerator::One,
            };
            let weighting = match kv.get("weight") {
                Some(w) => parse_weighting(w)?,
                None => Weighting::PlainKPower,
            };
            let z = parse_complex(need("z")?)?;
            Ok(EvalRequest::Series {
                spec: SumSpec { family, r, numerator, weighting, z },
                tol,
            })
        }
        "gpl" => {
            let letters = parse_complex_list(need("letters")?)?;
            let z = parse_complex(need("z")?)?;
            Ok(EvalRequest::Gpl { word: GplWord::new(letters, z), tol })
        }
        "mpl" => {
            let depths: std::result::Result<Vec<u32>, _> =
                need("a")?.split(',').map(|p| p.trim().parse::<u32>()).collect();
            let depths = depths.map_err(|_| Error::Parse("bad depth list".into()))?;
            let args_list = parse_complex_list(need("z")?)?;
            let oracle = matches!(kv.get("oracle").map(|s| s.as_str()), Some("true" | "1"));
            Ok(EvalRequest::Mpl { spec: MplSpec::new(depths, args_list), tol, oracle })
        }
        "closed" => {
            let id_str = need("id")?;
            let id = IdentityId::from_tag(&id_str.to_ascii_uppercase())
                .ok_or_else(|| Error::Parse(format!("unknown identity {id_str:?}")))?;
            let param = ["x", "param", "z", "tau"]
                .iter()
                .find_map(|k| kv.get(*k))
                .map(|s| parse_complex(s))
                .transpose()?
                .unwrap_or(C64::new(0.0, 0.0));
            Ok(EvalRequest::Closed { id, param })
        }
        other => Err(Error::Parse(format!(
            "unknown eval kind {other:?} (expected series|gpl|mpl|closed)"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("0.5").unwrap(), C64::new(0.5, 0.0));
        assert_eq!(parse_complex("1.5i").unwrap(), C64::new(0.0, 1.5));
        assert_eq!(parse_complex("-0.3+0.2i").unwrap(), C64::new(-0.3, 0.2));
        assert_eq!(parse_complex("\u{2212}0.3+0.2i").unwrap(), C64::new(-0.3, 0.2));
        assert_eq!(parse_complex("i").unwrap(), C64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("2-i").unwrap(), C64::new(2.0, -1.0));
        assert_eq!(parse_complex("1e-3").unwrap(), C64::new(1e-3, 0.0));
        assert_eq!(parse_complex("1e-3-2e-4i").unwrap(), C64::new(1e-3, -2e-4));
        assert!(parse_complex("nonsense+2x").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn eval_series_keys() {
        let args: Vec<String> = ["family=C3", "r=1", "seq=one_over_k", "z=0.5"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        match parse_eval("series", &args).unwrap() {
            EvalRequest::Series { spec, .. } => {
                assert_eq!(spec.family, Family::C3);
                assert_eq!(spec.r, 1);
                assert_eq!(spec.numerator, Numerator::One);
                assert_eq!(spec.weighting, Weighting::PlainKPower);
            }
            _ => panic!("wrong kind"),
        }
    }

    #[test]
    fn eval_rejects_malformed() {
        let args: Vec<String> = ["letters=0,oops", "z=1"].iter().map(|s| s.to_string()).collect();
        assert!(matches!(parse_eval("gpl", &args), Err(Error::Parse(_))));
        assert!(parse_eval("bogus", &[]).is_err());
        let args: Vec<String> = ["id=NOT_AN_ID", "x=1"].iter().map(|s| s.to_string()).collect();
        assert!(parse_eval("closed", &args).is_err());
    }
}
