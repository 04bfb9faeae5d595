//! One-line text forms for triple systems.
//!
//! * hex form: `n=<n>;edges=<hex>` where the edge mask is written as
//!   `ceil(C(n,3)/64)` words, each word as 8 little-endian bytes, each byte as
//!   two lowercase hex digits (16 hex digits per word, word 0 first).
//! * list form: `n=<n>;triples=a-b-c,a-b-c,...` with sorted triples in colex
//!   order; the empty system is `n=<n>;triples=`.
//!
//! T5 = {012, 013, 014, 234} has ranks {0, 1, 4, 9}, mask `0x213`, and hex
//! form `n=5;edges=1302000000000000`.

use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{binom3, TripleSystem};
use crate::error::{Error, Result};

fn parse_err<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse(msg.into()))
}

impl TripleSystem {
    pub fn to_hex_form(&self) -> String {
        let mut bytes = Vec::with_capacity(self.mask().words().len() * 8);
        for w in self.mask().words() {
            bytes.extend_from_slice(&w.to_le_bytes());
        }
        format!("n={};edges={}", self.n(), hex::encode(bytes))
    }

    pub fn to_list_form(&self) -> String {
        let triples: Vec<String> = self.edges().map(|[a, b, c]| format!("{a}-{b}-{c}")).collect();
        format!("n={};triples={}", self.n(), triples.join(","))
    }

    /// Parses either text form.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let Some((n_part, body)) = s.split_once(';') else {
            return parse_err(format!("missing ';' in {s:?}"));
        };
        let Some(n_str) = n_part.strip_prefix("n=") else {
            return parse_err(format!("expected 'n=<count>', got {n_part:?}"));
        };
        let n: usize = n_str.parse().map_err(|_| Error::Parse(format!("bad vertex count {n_str:?}")))?;
        super::check_vertex_count(n)?;
        if let Some(hex_str) = body.strip_prefix("edges=") {
            parse_hex(n, hex_str)
        } else if let Some(list) = body.strip_prefix("triples=") {
            parse_list(n, list)
        } else {
            parse_err(format!("expected 'edges=' or 'triples=', got {body:?}"))
        }
    }
}

fn parse_hex(n: usize, hex_str: &str) -> Result<TripleSystem> {
    let words = binom3(n).div_ceil(64);
    if hex_str.len() != words * 16 {
        return parse_err(format!(
            "edge mask for n={n} needs {} hex digits, got {}",
            words * 16,
            hex_str.len()
        ));
    }
    let bytes = hex::decode(hex_str).map_err(|e| Error::Parse(format!("bad hex: {e}")))?;
    let words: Vec<u64> = bytes
        .chunks_exact(8)
        .map(|c| u64::from_le_bytes(c.try_into().expect("chunk of 8")))
        .collect();
    TripleSystem::from_words(n, words).map_err(|_| Error::Parse(format!("edge mask has bits beyond C({n},3)")))
}

fn parse_list(n: usize, list: &str) -> Result<TripleSystem> {
    let mut h = TripleSystem::empty(n)?;
    if list.is_empty() {
        return Ok(h);
    }
    for item in list.split(',') {
        let vs: Vec<&str> = item.split('-').collect();
        let [a, b, c] = vs.as_slice() else {
            return parse_err(format!("triple {item:?} is not of the form a-b-c"));
        };
        let parse_v = |t: &str| -> Result<usize> {
            t.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {t:?} in {item:?}")))
        };
        let (a, b, c) = (parse_v(a)?, parse_v(b)?, parse_v(c)?);
        if !h.insert(a, b, c)? {
            return parse_err(format!("duplicate triple {item:?}"));
        }
    }
    Ok(h)
}

impl FromStr for TripleSystem {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TripleSystem::parse(s)
    }
}

impl std::fmt::Display for TripleSystem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.to_list_form())
    }
}

impl Serialize for TripleSystem {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_list_form())
    }
}

impl<'de> Deserialize<'de> for TripleSystem {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        TripleSystem::parse(&s).map_err(serde::de::Error::custom)
    }
}
