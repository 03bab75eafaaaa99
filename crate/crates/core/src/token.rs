//! Opaque, totally ordered identifiers for indices, elements and vertices.

use std::fmt;
use std::str::FromStr;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Bound shared by everything used as an index, element or vertex.
///
/// The library never inspects a label beyond comparing it; `Display` is only
/// used to name offending values in errors.
pub trait Label: Ord + Clone + fmt::Debug + fmt::Display {}

impl<T: Ord + Clone + fmt::Debug + fmt::Display> Label for T {}

/// The concrete label used by the JSON formats and the CLI.
///
/// Canonical decimal strings (`"0"`, `"17"`, but not `"007"`) become
/// [`Token::Int`] so that numeric ids sort numerically; everything else is
/// kept verbatim. Integers sort before strings. Tokens always serialize as
/// strings, so a token read from JSON is written back unchanged.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Token {
    Int(u64),
    Str(String),
}

impl Token {
    pub fn int(value: u64) -> Self {
        Token::Int(value)
    }

    pub fn as_int(&self) -> Option<u64> {
        match self {
            Token::Int(v) => Some(*v),
            Token::Str(_) => None,
        }
    }
}

fn is_canonical_decimal(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) && (s == "0" || !s.starts_with('0'))
}

impl From<&str> for Token {
    fn from(s: &str) -> Self {
        if is_canonical_decimal(s) {
            if let Ok(v) = s.parse() {
                return Token::Int(v);
            }
        }
        Token::Str(s.to_owned())
    }
}

impl From<String> for Token {
    fn from(s: String) -> Self {
        if is_canonical_decimal(&s) {
            if let Ok(v) = s.parse() {
                return Token::Int(v);
            }
        }
        Token::Str(s)
    }
}

impl From<u64> for Token {
    fn from(v: u64) -> Self {
        Token::Int(v)
    }
}

impl From<usize> for Token {
    fn from(v: usize) -> Self {
        Token::Int(v as u64)
    }
}

impl FromStr for Token {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Token::from(s))
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(v) => write!(f, "{v}"),
            Token::Str(s) => f.write_str(s),
        }
    }
}

impl Serialize for Token {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

struct TokenVisitor;

impl Visitor<'_> for TokenVisitor {
    type Value = Token;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a string or a non-negative integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> Result<Token, E> {
        Ok(Token::from(v))
    }

    fn visit_string<E: de::Error>(self, v: String) -> Result<Token, E> {
        Ok(Token::from(v))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> Result<Token, E> {
        Ok(Token::Int(v))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> Result<Token, E> {
        u64::try_from(v)
            .map(Token::Int)
            .map_err(|_| E::invalid_value(de::Unexpected::Signed(v), &self))
    }
}

impl<'de> Deserialize<'de> for Token {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        deserializer.deserialize_any(TokenVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_strings_become_integers() {
        assert_eq!(Token::from("0"), Token::Int(0));
        assert_eq!(Token::from("42"), Token::Int(42));
        assert_eq!(Token::from("007"), Token::Str("007".into()));
        assert_eq!(Token::from("a"), Token::Str("a".into()));
        assert_eq!(Token::from(""), Token::Str(String::new()));
    }

    #[test]
    fn integers_sort_numerically_and_before_strings() {
        let mut v: Vec<Token> = ["b", "10", "2", "a", "007"].into_iter().map(Token::from).collect();
        v.sort();
        let shown: Vec<String> = v.iter().map(ToString::to_string).collect();
        assert_eq!(shown, ["2", "10", "007", "a", "b"]);
    }

    #[test]
    fn json_round_trip_keeps_spelling() {
        let tokens: Vec<Token> = serde_json::from_str(r#"["0", 3, "007", "x"]"#).unwrap();
        assert_eq!(tokens[1], Token::Int(3));
        assert_eq!(serde_json::to_string(&tokens).unwrap(), r#"["0","3","007","x"]"#);
    }

    #[test]
    fn negative_numbers_are_rejected() {
        assert!(serde_json::from_str::<Token>("-1").is_err());
    }
}
