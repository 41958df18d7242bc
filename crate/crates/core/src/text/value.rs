//! A relaxed JSON-like value tree: objects with bare or quoted keys, arrays,
//! quoted strings, and bare scalars (which may contain parentheses).

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Object(Vec<(String, Value)>),
    Array(Vec<Value>),
    Str(String),
    Bare(String),
}

impl Value {
    pub fn get(&self, key: &str) -> Option<&Value> {
        match self {
            Value::Object(kv) => kv.iter().find(|(k, _)| k == key).map(|(_, v)| v),
            _ => None,
        }
    }

    pub fn field(&self, key: &str) -> Result<&Value> {
        self.get(key).ok_or_else(|| Error::Parse(format!("missing key `{key}`")))
    }

    pub fn as_array(&self) -> Result<&[Value]> {
        match self {
            Value::Array(v) => Ok(v),
            _ => Err(Error::Parse(format!("expected a list, found {}", self.describe()))),
        }
    }

    /// The text of a string or bare scalar.
    pub fn as_text(&self) -> Result<&str> {
        match self {
            Value::Str(s) | Value::Bare(s) => Ok(s),
            _ => Err(Error::Parse(format!("expected a scalar, found {}", self.describe()))),
        }
    }

    pub fn as_int(&self) -> Result<i64> {
        let s = self.as_text()?;
        s.trim().parse().map_err(|_| Error::Parse(format!("expected an integer, found `{s}`")))
    }

    pub fn as_usize(&self) -> Result<usize> {
        let s = self.as_text()?;
        s.trim().parse().map_err(|_| Error::Parse(format!("expected a nonnegative integer, found `{s}`")))
    }

    fn describe(&self) -> &'static str {
        match self {
            Value::Object(_) => "an object",
            Value::Array(_) => "a list",
            Value::Str(_) => "a string",
            Value::Bare(_) => "a scalar",
        }
    }
}

pub fn parse_value(s: &str) -> Result<Value> {
    let mut p = Parser { s: s.as_bytes(), i: 0 };
    let v = p.value()?;
    p.ws();
    if p.i != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(v)
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> Error {
        let ctx: String = String::from_utf8_lossy(&self.s[self.i..]).chars().take(24).collect();
        Error::Parse(format!("{msg} at byte {} near `{ctx}`", self.i))
    }

    fn ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        self.ws();
        if self.peek() == Some(c) {
            self.i += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{}`", c as char)))
        }
    }

    fn value(&mut self) -> Result<Value> {
        self.ws();
        match self.peek() {
            Some(b'{') => self.object(),
            Some(b'[') => self.array(),
            Some(b'"') => Ok(Value::Str(self.string()?)),
            Some(_) => self.bare(),
            None => Err(self.err("unexpected end of input")),
        }
    }

    fn object(&mut self) -> Result<Value> {
        self.expect(b'{')?;
        let mut kv = Vec::new();
        self.ws();
        if self.peek() == Some(b'}') {
            self.i += 1;
            return Ok(Value::Object(kv));
        }
        loop {
            self.ws();
            let key = if self.peek() == Some(b'"') {
                self.string()?
            } else {
                let start = self.i;
                while self.i < self.s.len()
                    && (self.s[self.i].is_ascii_alphanumeric() || b"_-".contains(&self.s[self.i]))
                {
                    self.i += 1;
                }
                if start == self.i {
                    return Err(self.err("expected a key"));
                }
                String::from_utf8_lossy(&self.s[start..self.i]).into_owned()
            };
            self.expect(b':')?;
            let v = self.value()?;
            kv.push((key, v));
            self.ws();
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(b'}') => {
                    self.i += 1;
                    return Ok(Value::Object(kv));
                }
                _ => return Err(self.err("expected `,` or `}`")),
            }
        }
    }

    fn array(&mut self) -> Result<Value> {
        self.expect(b'[')?;
        let mut out = Vec::new();
        self.ws();
        if self.peek() == Some(b']') {
            self.i += 1;
            return Ok(Value::Array(out));
        }
        loop {
            out.push(self.value()?);
            self.ws();
            match self.peek() {
                Some(b',') => self.i += 1,
                Some(b']') => {
                    self.i += 1;
                    return Ok(Value::Array(out));
                }
                _ => return Err(self.err("expected `,` or `]`")),
            }
        }
    }

    fn string(&mut self) -> Result<String> {
        self.expect(b'"')?;
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i] != b'"' {
            self.i += 1;
        }
        if self.i == self.s.len() {
            return Err(self.err("unterminated string"));
        }
        let out = String::from_utf8_lossy(&self.s[start..self.i]).into_owned();
        self.i += 1;
        Ok(out)
    }

    fn bare(&mut self) -> Result<Value> {
        let start = self.i;
        let mut depth = 0i32;
        while let Some(c) = self.peek() {
            match c {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b',' | b']' | b'}' if depth == 0 => break,
                b'{' | b'[' | b'"' => return Err(self.err("unexpected bracket in scalar")),
                _ => {}
            }
            if depth < 0 {
                return Err(self.err("unbalanced `)`"));
            }
            self.i += 1;
        }
        let text = String::from_utf8_lossy(&self.s[start..self.i]).trim().to_string();
        if text.is_empty() {
            return Err(self.err("empty value"));
        }
        Ok(Value::Bare(text))
    }
}

/// Length of the balanced bracketed prefix of `s` (which starts with `[`,
/// `{` or `"`).
pub(crate) fn balanced_prefix(s: &str) -> Result<usize> {
    let b = s.as_bytes();
    let mut depth = 0i32;
    let mut in_str = false;
    for (i, &c) in b.iter().enumerate() {
        if in_str {
            if c == b'"' {
                in_str = false;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            continue;
        }
        match c {
            b'"' => in_str = true,
            b'[' | b'{' => depth += 1,
            b']' | b'}' => {
                depth -= 1;
                if depth == 0 {
                    return Ok(i + 1);
                }
            }
            _ => {}
        }
    }
    Err(Error::Parse("unbalanced brackets".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested() {
        let v = parse_value(r#"{field:"Q", d:1, mats:[[[0,1],[-12, t+3]]], "k":(1-t)*2}"#).unwrap();
        assert_eq!(v.field("d").unwrap().as_int().unwrap(), 1);
        let m = v.field("mats").unwrap().as_array().unwrap();
        assert_eq!(m[0].as_array().unwrap()[1].as_array().unwrap()[1], Value::Bare("t+3".into()));
        assert_eq!(v.field("k").unwrap().as_text().unwrap(), "(1-t)*2");
        assert!(parse_value("[1,2").is_err());
    }
}
