//! Packing files: JSON (or TOML) with either an explicit rod list or the
//! name of a builtin packing.

use serde_json::Value;

use crate::builtin::{builtin_packing, PackingName};
use crate::geometry::{Rod, RodPacking};
use crate::rational::Rational;
use crate::vector::{IntVec3, RatVec3};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{field}: {message}")]
pub struct InputError {
    pub field: String,
    pub message: String,
}

fn err(field: impl Into<String>, message: impl Into<String>) -> InputError {
    InputError {
        field: field.into(),
        message: message.into(),
    }
}

/// Parses text as JSON, falling back to TOML when `toml_hint` is set or the
/// text is not JSON.
pub fn parse_packing(text: &str, toml_hint: bool) -> Result<RodPacking, InputError> {
    let value: Value = if toml_hint {
        from_toml(text)?
    } else {
        match serde_json::from_str(text) {
            Ok(v) => v,
            Err(json_err) => from_toml(text).map_err(|_| err("<file>", format!("not valid JSON: {json_err}")))?,
        }
    };
    packing_from_value(&value)
}

fn from_toml(text: &str) -> Result<Value, InputError> {
    let t: toml::Value = toml::from_str(text).map_err(|e| err("<file>", format!("not valid TOML: {}", e.message())))?;
    serde_json::to_value(t).map_err(|e| err("<file>", e.to_string()))
}

pub fn packing_from_value(v: &Value) -> Result<RodPacking, InputError> {
    let obj = v.as_object().ok_or_else(|| err("<root>", "expected an object"))?;
    match (obj.get("rods"), obj.get("builtin")) {
        (Some(_), Some(_)) => Err(err("<root>", "give either rods or builtin, not both")),
        (None, None) => Err(err("<root>", "missing rods or builtin")),
        (None, Some(b)) => {
            let name = b.as_str().ok_or_else(|| err("builtin", "expected a string"))?;
            let name: PackingName = name.parse().map_err(|e: String| err("builtin", e))?;
            Ok(builtin_packing(name))
        }
        (Some(rods), None) => {
            let rods = rods.as_array().ok_or_else(|| err("rods", "expected an array"))?;
            let mut out = Vec::with_capacity(rods.len());
            let mut labels = Vec::with_capacity(rods.len());
            for (i, r) in rods.iter().enumerate() {
                let (rod, label) = rod_from_value(r, i)?;
                out.push(rod);
                labels.push(label);
            }
            Ok(RodPacking::new(out, labels))
        }
    }
}

fn rod_from_value(v: &Value, i: usize) -> Result<(Rod, String), InputError> {
    let at = |f: &str| format!("rods[{i}].{f}");
    let obj = v
        .as_object()
        .ok_or_else(|| err(format!("rods[{i}]"), "expected an object"))?;
    let label = match obj.get("label") {
        None => format!("R{}", i + 1),
        Some(Value::String(s)) if !s.is_empty() => s.clone(),
        Some(_) => return Err(err(at("label"), "expected a non-empty string")),
    };
    let dir = obj
        .get("direction")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 3)
        .ok_or_else(|| err(at("direction"), "expected three integers"))?;
    let mut d = [0i64; 3];
    for (k, c) in dir.iter().enumerate() {
        d[k] = c
            .as_i64()
            .ok_or_else(|| err(format!("{}[{k}]", at("direction")), "expected an integer"))?;
    }
    let base = obj
        .get("basepoint")
        .and_then(Value::as_array)
        .filter(|a| a.len() == 3)
        .ok_or_else(|| err(at("basepoint"), "expected three rationals"))?;
    let mut p: Vec<Rational> = Vec::with_capacity(3);
    for (k, c) in base.iter().enumerate() {
        let field = format!("{}[{k}]", at("basepoint"));
        let r = match c {
            Value::String(s) => s
                .parse()
                .map_err(|_| err(&field, format!("{s:?} is not a rational like \"1/3\"")))?,
            Value::Number(n) if n.is_i64() => Rational::int(n.as_i64().unwrap_or_default()),
            _ => return Err(err(&field, "expected a rational string like \"1/3\"")),
        };
        p.push(r);
    }
    let [x, y, z]: [Rational; 3] = p.try_into().expect("three coordinates");
    Ok((Rod::new(IntVec3::from_coords(d), RatVec3::new(x, y, z)), label))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::q;

    #[test]
    fn json_rods() {
        let p = parse_packing(
            r#"{"rods":[{"label":"a","direction":[1,1,1],"basepoint":["1/3","2/3","0"]}]}"#,
            false,
        )
        .unwrap();
        assert_eq!(p.labels, vec!["a"]);
        assert_eq!(p.rods[0].basepoint.y, q(2, 3));
    }

    #[test]
    fn toml_builtin() {
        let p = parse_packing("builtin = \"PiStar\"\n", true).unwrap();
        assert_eq!(p.len(), 3);
        let p = parse_packing("builtin = \"PlusOmega\"\n", false).unwrap();
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn errors_name_the_field() {
        let e = parse_packing(r#"{"rods":[{"direction":[1,0],"basepoint":["0","0","0"]}]}"#, false).unwrap_err();
        assert_eq!(e.field, "rods[0].direction");
        let e = parse_packing(r#"{"rods":[{"direction":[1,0,0],"basepoint":["0",0.5,"0"]}]}"#, false).unwrap_err();
        assert_eq!(e.field, "rods[0].basepoint[1]");
        let e = parse_packing(r#"{"builtin":"SigmaStar"}"#, false).unwrap_err();
        assert_eq!(e.field, "builtin");
    }
}
