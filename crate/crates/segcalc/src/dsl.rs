//! The session file format.
//!
//! ```text
//! # declarations, then an optional context, then the multisegment
//! line A k=1 l=2 dual=A omega=+1
//! set d=2 eta=-1
//! A[0,1] + A[-1,0]
//! ```
//!
//! `line` declares a cuspidal line (omega defaults to +1), `set` fixes context
//! parameters, and every remaining non-comment line contributes segments to
//! the (single) multisegment. Dual references may point forward. Errors carry
//! 1-based line/column positions.

use crate::error::{Error, Result};
use crate::segment::{LineSet, LineSpec, Multisegment, Segment};
use crate::sign::Sign;

/// A parsed and validated session: declared lines, the multisegment, and the
/// optional context parameters (command-line flags take precedence).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Session {
    pub lines: LineSet,
    pub multisegment: Multisegment,
    pub d: Option<u32>,
    pub eta: Option<Sign>,
}

impl Session {
    pub fn parse(text: &str) -> Result<Session> {
        parse_session(text)
    }

    /// Canonical text form; parsing it back yields an identical session.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (_, line) in self.lines.iter() {
            let dual = self.lines.line(line.dual).label.clone();
            out.push_str(&format!(
                "line {} k={} l={} dual={} omega={}\n",
                line.label, line.k, line.l, dual, line.omega
            ));
        }
        match (self.d, self.eta) {
            (Some(d), Some(eta)) => out.push_str(&format!("set d={d} eta={eta}\n")),
            (Some(d), None) => out.push_str(&format!("set d={d}\n")),
            (None, Some(eta)) => out.push_str(&format!("set eta={eta}\n")),
            (None, None) => {}
        }
        if !self.multisegment.is_empty() {
            out.push_str(&self.multisegment.render(&self.lines));
            out.push('\n');
        }
        out
    }
}

struct Cursor<'a> {
    line_no: u32,
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(line_no: u32, text: &'a str) -> Cursor<'a> {
        Cursor {
            line_no,
            text,
            pos: 0,
        }
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse {
            line: self.line_no,
            col: self.pos as u32 + 1,
            message: message.into(),
        }
    }

    fn peek(&self) -> Option<u8> {
        self.text.as_bytes().get(self.pos).copied()
    }

    fn bump(&mut self) {
        self.pos += 1;
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(b' ') | Some(b'\t')) {
            self.bump();
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.peek().is_none()
    }

    fn expect(&mut self, byte: u8) -> Result<()> {
        if self.peek() == Some(byte) {
            self.bump();
            Ok(())
        } else {
            Err(self.error(format!("expected `{}`", byte as char)))
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => self.bump(),
            _ => return Err(self.error("expected an identifier")),
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == b'_') {
            self.bump();
        }
        Ok(&self.text[start..self.pos])
    }

    fn int(&mut self) -> Result<i64> {
        let start = self.pos;
        if matches!(self.peek(), Some(b'-') | Some(b'+')) {
            self.bump();
        }
        let digits = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.bump();
        }
        if self.pos == digits {
            self.pos = start;
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn positive_u32(&mut self, what: &str) -> Result<u32> {
        let start = self.pos;
        let v = self.int()?;
        if v < 1 || v > u32::MAX as i64 {
            self.pos = start;
            return Err(self.error(format!("{what} must be a positive integer")));
        }
        Ok(v as u32)
    }

    fn sign(&mut self) -> Result<Sign> {
        let start = self.pos;
        let v = self.int()?;
        Sign::from_value(v).ok_or_else(|| {
            self.pos = start;
            self.error("expected +1 or -1")
        })
    }

    fn keyed<T>(&mut self, key: &str, parse: impl FnOnce(&mut Self) -> Result<T>) -> Result<T> {
        self.skip_ws();
        let ident = self.ident()?;
        if ident != key {
            return Err(self.error(format!("expected `{key}=`")));
        }
        self.expect(b'=')?;
        parse(self)
    }
}

struct SegmentToken {
    label: String,
    a: i64,
    b: i64,
    line: u32,
    col: u32,
}

pub fn parse_session(text: &str) -> Result<Session> {
    let mut specs: Vec<LineSpec> = Vec::new();
    let mut segment_tokens: Vec<SegmentToken> = Vec::new();
    let mut d: Option<u32> = None;
    let mut eta: Option<Sign> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx as u32 + 1;
        let content = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if content.trim().is_empty() {
            continue;
        }
        let mut cur = Cursor::new(line_no, content);
        cur.skip_ws();
        let checkpoint = cur.pos;
        let head = cur.ident().unwrap_or("");
        match head {
            "line" => {
                cur.skip_ws();
                let label = cur.ident()?.to_string();
                let k = cur.keyed("k", |c| c.positive_u32("k"))?;
                let l = cur.keyed("l", |c| c.positive_u32("l"))?;
                let dual_label = cur.keyed("dual", |c| c.ident().map(str::to_string))?;
                cur.skip_ws();
                let omega = if cur.peek().is_some() {
                    cur.keyed("omega", Cursor::sign)?
                } else {
                    Sign::Plus
                };
                if !cur.at_end() {
                    return Err(cur.error("unexpected trailing input"));
                }
                specs.push(LineSpec {
                    label,
                    k,
                    l,
                    dual_label,
                    omega,
                });
            }
            "set" => {
                loop {
                    cur.skip_ws();
                    if cur.peek().is_none() {
                        break;
                    }
                    let key_pos = cur.pos;
                    let key = cur.ident()?.to_string();
                    cur.expect(b'=')?;
                    match key.as_str() {
                        "d" => {
                            if d.replace(cur.positive_u32("d")?).is_some() {
                                cur.pos = key_pos;
                                return Err(cur.error("d is set twice"));
                            }
                        }
                        "eta" => {
                            if eta.replace(cur.sign()?).is_some() {
                                cur.pos = key_pos;
                                return Err(cur.error("eta is set twice"));
                            }
                        }
                        other => {
                            cur.pos = key_pos;
                            return Err(cur.error(format!("unknown setting `{other}`")));
                        }
                    }
                }
            }
            _ => {
                // a multisegment expression: ID[a,b] joined by `+`
                cur.pos = checkpoint;
                loop {
                    cur.skip_ws();
                    let col = cur.pos as u32 + 1;
                    let label = cur.ident()?.to_string();
                    cur.expect(b'[')?;
                    cur.skip_ws();
                    let a = cur.int()?;
                    cur.skip_ws();
                    cur.expect(b',')?;
                    cur.skip_ws();
                    let b = cur.int()?;
                    cur.skip_ws();
                    cur.expect(b']')?;
                    segment_tokens.push(SegmentToken {
                        label,
                        a,
                        b,
                        line: line_no,
                        col,
                    });
                    if cur.at_end() {
                        break;
                    }
                    cur.expect(b'+')?;
                }
            }
        }
    }

    let lines = LineSet::from_specs(&specs)?;
    let mut segments = Vec::with_capacity(segment_tokens.len());
    for tok in segment_tokens {
        let id = lines.lookup(&tok.label).ok_or(Error::Parse {
            line: tok.line,
            col: tok.col,
            message: format!("undeclared line {}", tok.label),
        })?;
        let seg = Segment::new(id, tok.a, tok.b).map_err(|_| Error::Parse {
            line: tok.line,
            col: tok.col,
            message: "segment requires a <= b".into(),
        })?;
        segments.push(seg);
    }
    Ok(Session {
        lines,
        multisegment: Multisegment::new(segments),
        d,
        eta,
    })
}
