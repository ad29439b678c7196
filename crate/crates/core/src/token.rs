//! The tagged-token serialization shared by the classify and verbalize
//! stages.
//!
//! ```text
//! tagged := token (" " token)*
//! token  := "tokens" "{" class "{" field+ ["preserve_order:" bool] "}" "}"
//! field  := key ":" '"' value '"'  |  key "{" field+ "}"
//! ```
//!
//! Values are double-quoted and may not contain `"`. Serialization always
//! uses one space after `{`, before `}`, and between fields.

use std::fmt::{self, Write};

use crate::error::{ItnError, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FieldValue {
    Text(String),
    /// A nested block such as the `cardinal { integer: "2" }` inside a
    /// measure token.
    Block(Vec<Field>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Field {
    pub key: String,
    pub value: FieldValue,
}

impl Field {
    pub fn text(key: &str, value: &str) -> Self {
        Field {
            key: key.to_string(),
            value: FieldValue::Text(value.to_string()),
        }
    }

    pub fn block(key: &str, fields: Vec<Field>) -> Self {
        Field {
            key: key.to_string(),
            value: FieldValue::Block(fields),
        }
    }
}

/// One classified token: its class, its fields in order, and whether the
/// verbalizer must see the fields in exactly this order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Token {
    pub class_name: String,
    pub fields: Vec<Field>,
    pub preserve_order: bool,
}

impl Token {
    pub fn new(class_name: &str, fields: Vec<Field>) -> Self {
        Token {
            class_name: class_name.to_string(),
            fields,
            preserve_order: false,
        }
    }

    pub fn field(&self, key: &str) -> Option<&FieldValue> {
        self.fields.iter().find(|f| f.key == key).map(|f| &f.value)
    }

    /// Serializes the token with its top-level fields visited in `order`
    /// (a permutation of field indices).
    pub fn write_ordered(&self, order: &[usize], out: &mut String) {
        debug_assert_eq!(order.len(), self.fields.len());
        let _ = write!(out, "tokens {{ {} {{", self.class_name);
        for &i in order {
            out.push(' ');
            write_field(&self.fields[i], out);
        }
        if self.preserve_order {
            out.push_str(" preserve_order: true");
        }
        out.push_str(" } }");
    }
}

fn write_field(field: &Field, out: &mut String) {
    match &field.value {
        FieldValue::Text(v) => {
            let _ = write!(out, "{}: \"{}\"", field.key, v);
        }
        FieldValue::Block(inner) => {
            let _ = write!(out, "{} {{", field.key);
            for f in inner {
                out.push(' ');
                write_field(f, out);
            }
            out.push_str(" }");
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        let order: Vec<usize> = (0..self.fields.len()).collect();
        self.write_ordered(&order, &mut s);
        f.write_str(&s)
    }
}

/// Serializes tokens in their stored field order, separated by one space.
pub fn serialize(tokens: &[Token]) -> String {
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        let order: Vec<usize> = (0..t.fields.len()).collect();
        t.write_ordered(&order, &mut out);
    }
    out
}

/// Parses a tagged string into tokens, keeping field order as written.
pub fn parse(tagged: &str) -> Result<Vec<Token>> {
    let mut p = Parser {
        src: tagged.as_bytes(),
        pos: 0,
    };
    let mut tokens = Vec::new();
    p.skip_ws();
    while !p.at_end() {
        tokens.push(p.token()?);
        p.skip_ws();
    }
    Ok(tokens)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn at_end(&self) -> bool {
        self.pos >= self.src.len()
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek() == Some(b' ') {
            self.pos += 1;
        }
    }

    fn error<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(ItnError::Parse {
            offset: self.pos,
            message: message.into(),
        })
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        self.skip_ws();
        if self.peek() == Some(byte) {
            self.pos += 1;
            Ok(())
        } else {
            self.error(format!("expected '{}'", byte as char))
        }
    }

    fn ident(&mut self) -> Result<&str> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(b'a'..=b'z' | b'0'..=b'9' | b'_')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.error("expected identifier");
        }
        Ok(std::str::from_utf8(&self.src[start..self.pos]).expect("ASCII identifier"))
    }

    fn quoted(&mut self) -> Result<String> {
        self.expect(b'"')?;
        let start = self.pos;
        while let Some(b) = self.peek() {
            if b == b'"' {
                let value = std::str::from_utf8(&self.src[start..self.pos])
                    .map_err(|_| ItnError::Parse {
                        offset: start,
                        message: "value is not UTF-8".into(),
                    })?
                    .to_string();
                self.pos += 1;
                return Ok(value);
            }
            self.pos += 1;
        }
        self.pos = start - 1;
        self.error("unterminated value")
    }

    fn token(&mut self) -> Result<Token> {
        let start = self.pos;
        if self.ident()? != "tokens" {
            self.pos = start;
            return self.error("expected 'tokens'");
        }
        self.expect(b'{')?;
        let class_name = self.ident()?.to_string();
        self.expect(b'{')?;
        let mut token = Token::new(&class_name, Vec::new());
        loop {
            self.skip_ws();
            if self.peek() == Some(b'}') {
                break;
            }
            let key_start = self.pos;
            let key = self.ident()?.to_string();
            if key == "preserve_order" {
                self.expect(b':')?;
                self.skip_ws();
                let value_start = self.pos;
                token.preserve_order = match self.ident()? {
                    "true" => true,
                    "false" => false,
                    _ => {
                        self.pos = value_start;
                        return self.error("expected true or false");
                    }
                };
                continue;
            }
            if token.field(&key).is_some() {
                self.pos = key_start;
                return self.error(format!("duplicate field {key:?}"));
            }
            token.fields.push(self.field_rest(key, true)?);
        }
        if token.fields.is_empty() {
            return self.error("token has no fields");
        }
        self.expect(b'}')?;
        self.expect(b'}')?;
        Ok(token)
    }

    /// Parses what follows a field key: `: "value"` or, if `nested` is
    /// allowed, `{ field+ }`.
    fn field_rest(&mut self, key: String, nested: bool) -> Result<Field> {
        self.skip_ws();
        match self.peek() {
            Some(b':') => {
                self.pos += 1;
                let value = self.quoted()?;
                Ok(Field {
                    key,
                    value: FieldValue::Text(value),
                })
            }
            Some(b'{') if nested => {
                self.pos += 1;
                let mut inner = Vec::new();
                loop {
                    self.skip_ws();
                    if self.peek() == Some(b'}') {
                        self.pos += 1;
                        break;
                    }
                    let k = self.ident()?.to_string();
                    inner.push(self.field_rest(k, false)?);
                }
                if inner.is_empty() {
                    return self.error("empty nested block");
                }
                Ok(Field {
                    key,
                    value: FieldValue::Block(inner),
                })
            }
            _ => self.error("expected ':' or '{'"),
        }
    }
}
