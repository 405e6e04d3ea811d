//! The descriptor file format.
//!
//! One `key = value` pair per line. `#` starts a comment that runs to the end
//! of the line; blank lines are ignored. Keys:
//!
//! | key                    | value                   |
//! |------------------------|-------------------------|
//! | `kind`                 | `group` or `homspace`   |
//! | `label`                | free text               |
//! | `char`                 | 0 or a prime            |
//! | `g`, `r`, `u`          | non-negative integers   |
//! | `rho`                  | non-negative integer    |
//! | `commutative`          | `true` or `false`       |
//! | `g_H`, `r_H`           | non-negative integers   |
//! | `stabilizer_connected` | `true` or `false`       |
//!
//! Unknown and repeated keys are errors.

use std::fmt::Write as _;
use std::str::FromStr;

use thiserror::Error;

use crate::descriptors::{Descriptor, DescriptorFields, DescriptorKind};

pub const KEYS: [&str; 11] = [
    "kind",
    "label",
    "char",
    "g",
    "r",
    "u",
    "rho",
    "commutative",
    "g_H",
    "r_H",
    "stabilizer_connected",
];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn number<T: FromStr>(key: &str, value: &str) -> Result<T, String> {
    value
        .parse()
        .map_err(|_| format!("`{key}` expects a non-negative integer, got `{value}`"))
}

fn flag(key: &str, value: &str) -> Result<bool, String> {
    match value {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(format!("`{key}` expects `true` or `false`, got `{value}`")),
    }
}

/// Reads descriptor fields without validating them.
pub fn parse_fields(text: &str) -> Result<DescriptorFields, ParseError> {
    let mut f = DescriptorFields::default();
    let mut seen: Vec<&str> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let err = |message: String| ParseError { line, message };
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let (key, value) = content
            .split_once('=')
            .ok_or_else(|| err(format!("expected `key = value`, got `{content}`")))?;
        let (key, value) = (key.trim(), value.trim());
        let Some(&key) = KEYS.iter().find(|&&k| k == key) else {
            return Err(err(format!("unknown key `{key}`")));
        };
        if seen.contains(&key) {
            return Err(err(format!("duplicate key `{key}`")));
        }
        seen.push(key);
        if value.is_empty() {
            return Err(err(format!("`{key}` has no value")));
        }
        match key {
            "kind" => {
                f.kind = Some(match value {
                    "group" => DescriptorKind::Group,
                    "homspace" => DescriptorKind::HomSpace,
                    _ => {
                        return Err(err(format!(
                            "`kind` expects `group` or `homspace`, got `{value}`"
                        )))
                    }
                })
            }
            "label" => f.label = Some(value.to_string()),
            "char" => f.char_p = Some(number(key, value).map_err(err)?),
            "g" => f.g = Some(number(key, value).map_err(err)?),
            "r" => f.r = Some(number(key, value).map_err(err)?),
            "u" => f.u = Some(number(key, value).map_err(err)?),
            "rho" => f.rho = Some(number(key, value).map_err(err)?),
            "commutative" => f.commutative = Some(flag(key, value).map_err(err)?),
            "g_H" => f.g_h = Some(number(key, value).map_err(err)?),
            "r_H" => f.r_h = Some(number(key, value).map_err(err)?),
            "stabilizer_connected" => f.stabilizer_connected = Some(flag(key, value).map_err(err)?),
            _ => unreachable!("key list and match agree"),
        }
    }
    Ok(f)
}

/// Writes every field of a descriptor in the file format. Parsing the output
/// gives the same descriptor back.
pub fn to_text(d: &Descriptor) -> String {
    let f = d.to_fields();
    let mut s = String::new();
    let kind = match f.kind {
        Some(DescriptorKind::HomSpace) => "homspace",
        _ => "group",
    };
    let _ = writeln!(s, "kind = {kind}");
    if let Some(label) = &f.label {
        let _ = writeln!(s, "label = {label}");
    }
    let mut put = |key: &str, v: Option<String>| {
        if let Some(v) = v {
            let _ = writeln!(s, "{key} = {v}");
        }
    };
    put("char", f.char_p.map(|x| x.to_string()));
    put("g", f.g.map(|x| x.to_string()));
    put("r", f.r.map(|x| x.to_string()));
    put("u", f.u.map(|x| x.to_string()));
    put("rho", f.rho.map(|x| x.to_string()));
    put("commutative", f.commutative.map(|x| x.to_string()));
    put("g_H", f.g_h.map(|x| x.to_string()));
    put("r_H", f.r_h.map(|x| x.to_string()));
    put(
        "stabilizer_connected",
        f.stabilizer_connected.map(|x| x.to_string()),
    );
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descriptors::{GroupDescriptor, Strictness};

    #[test]
    fn reads_comments_and_blanks() {
        let f = parse_fields("# header\n\nchar = 0   # field\ng=1\nr = 0\nrho = 1\n").unwrap();
        assert_eq!(f.char_p, Some(0));
        assert_eq!(f.g, Some(1));
        assert_eq!(f.kind, None);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_fields("char = 0\n\ngh = 1\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(e.message.contains("unknown key `gh`"));
        let e = parse_fields("g = 1\ng = 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(e.message.contains("duplicate"));
        assert_eq!(parse_fields("g 1").unwrap_err().line, 1);
        assert_eq!(parse_fields("g = -1").unwrap_err().line, 1);
        assert_eq!(parse_fields("commutative = yes").unwrap_err().line, 1);
        assert_eq!(parse_fields("x\nkind = ring").unwrap_err().line, 1);
        assert_eq!(parse_fields("label =").unwrap_err().line, 1);
    }

    #[test]
    fn keys_are_case_sensitive() {
        assert!(parse_fields("G = 1").is_err());
        assert!(parse_fields("g_h = 1").is_err());
    }

    #[test]
    fn text_round_trip() {
        let d = Descriptor::Group(GroupDescriptor::new(5, 2, 1, 3, true).with_label("x"));
        let back = parse_fields(&to_text(&d))
            .unwrap()
            .validate(Strictness::Lenient)
            .unwrap();
        assert_eq!(back, d);
    }
}
