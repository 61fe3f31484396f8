//! A small notation for ψ-products acting on `z_λ`.
//!
//! A product is a sequence of factors followed by `z`:
//!
//! * `P(x)` is `ψ_x`, `Y(x)` is `y_x`;
//! * `D(x,y)` is `ψ_xψ_{x−1}⋯ψ_y` (empty when `x < y`);
//! * `U(x,y)` is `ψ_xψ_{x+1}⋯ψ_y` (empty when `x > y`);
//! * `C(x,y;x',y')` is `D(x,y)D(x+1,y+1)⋯D(x',y')` (empty when `x' < x`);
//! * `CU(x,y;x',y')` is `U(x,y)U(x−1,y−1)⋯U(x',y')` (empty when `x' > x`).
//!
//! Arguments are integer expressions in `+`, `-`, `*`, parentheses and single-letter variables.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::klr::{Letter, ModuleElement};
use crate::specht::SpechtModule;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordsError {
    #[error("parse error in `{text}` at {pos}: {msg}")]
    Parse { text: String, pos: usize, msg: String },
    #[error("unbound variable `{0}`")]
    Unbound(char),
    #[error("chain ({0},{1})..({2},{3}) has unequal steps")]
    Chain(i64, i64, i64, i64),
    #[error("generator index {index} out of range for n = {n}")]
    Range { index: i64, n: usize },
}

pub type Env = BTreeMap<char, i64>;

struct Parser<'a> {
    text: &'a str,
    chars: Vec<char>,
    pos: usize,
    env: &'a Env,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> WordsError {
        WordsError::Parse {
            text: self.text.to_string(),
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> Result<(), WordsError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn expr(&mut self) -> Result<i64, WordsError> {
        let mut acc = self.product()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc += self.product()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc -= self.product()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn product(&mut self) -> Result<i64, WordsError> {
        let mut acc = self.atom()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc *= self.atom()?;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<i64, WordsError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.expr()?;
                self.eat(')')?;
                Ok(v)
            }
            Some('-') => {
                self.pos += 1;
                Ok(-self.atom()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
                    self.pos += 1;
                }
                let s: String = self.chars[start..self.pos].iter().collect();
                let v: i64 = s.parse().map_err(|_| self.err("bad integer"))?;
                // Implicit multiplication: `2e`.
                if self.chars.get(self.pos).is_some_and(|c| c.is_ascii_lowercase()) {
                    return Ok(v * self.atom()?);
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_lowercase() => {
                self.pos += 1;
                self.env.get(&c).copied().ok_or(WordsError::Unbound(c))
            }
            _ => Err(self.err("expected an expression")),
        }
    }

    fn args(&mut self, count: usize) -> Result<Vec<i64>, WordsError> {
        self.eat('(')?;
        let mut out = Vec::new();
        for k in 0..count {
            if k > 0 {
                let sep = if count == 4 && k == 2 { ';' } else { ',' };
                self.eat(sep)?;
            }
            out.push(self.expr()?);
        }
        self.eat(')')?;
        Ok(out)
    }

    fn ident(&mut self) -> String {
        self.skip_ws();
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_uppercase()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }
}

/// A parsed product: letters in left-to-right order, ψ-letters as `(index, is_psi)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Product {
    pub letters: Vec<(i64, bool)>,
}

fn down(x: i64, y: i64) -> impl Iterator<Item = i64> {
    (y..=x).rev()
}

fn up(x: i64, y: i64) -> impl Iterator<Item = i64> {
    x..=y
}

/// Parses `text` with the variables of `env` bound.
pub fn parse_product(text: &str, env: &Env) -> Result<Product, WordsError> {
    let mut p = Parser {
        text,
        chars: text.chars().collect(),
        pos: 0,
        env,
    };
    let mut letters = Vec::new();
    loop {
        match p.peek() {
            Some('z') => {
                p.pos += 1;
                if p.peek().is_some() {
                    return Err(p.err("trailing input after `z`"));
                }
                return Ok(Product { letters });
            }
            Some(c) if c.is_ascii_uppercase() => {
                let name = p.ident();
                match name.as_str() {
                    "P" => letters.push((p.args(1)?[0], true)),
                    "Y" => letters.push((p.args(1)?[0], false)),
                    "D" => {
                        let a = p.args(2)?;
                        letters.extend(down(a[0], a[1]).map(|i| (i, true)));
                    }
                    "U" => {
                        let a = p.args(2)?;
                        letters.extend(up(a[0], a[1]).map(|i| (i, true)));
                    }
                    "C" | "CU" => {
                        let a = p.args(4)?;
                        let (x, y, x2, y2) = (a[0], a[1], a[2], a[3]);
                        if x2 - x != y2 - y {
                            return Err(WordsError::Chain(x, y, x2, y2));
                        }
                        if name == "C" {
                            for m in 0..=(x2 - x) {
                                letters.extend(down(x + m, y + m).map(|i| (i, true)));
                            }
                        } else {
                            for m in 0..=(x - x2) {
                                letters.extend(up(x - m, y - m).map(|i| (i, true)));
                            }
                        }
                    }
                    _ => return Err(p.err(&format!("unknown factor `{name}`"))),
                }
            }
            _ => return Err(p.err("expected a factor or `z`")),
        }
    }
}

impl Product {
    pub fn to_letters(&self, n: usize) -> Result<Vec<Letter>, WordsError> {
        self.letters
            .iter()
            .map(|&(i, psi)| {
                let max = if psi { n as i64 - 1 } else { n as i64 };
                if i < 1 || i > max {
                    return Err(WordsError::Range { index: i, n });
                }
                Ok(if psi { Letter::Psi(i as u8) } else { Letter::Y(i as u8) })
            })
            .collect()
    }

    pub fn psi_len(&self) -> usize {
        self.letters.iter().filter(|l| l.1).count()
    }
}

/// Evaluates `text` on `z_λ`.
pub fn eval_on_z(module: &mut SpechtModule, text: &str, env: &Env) -> Result<ModuleElement, WordsError> {
    let letters = parse_product(text, env)?.to_letters(module.n())?;
    let z = module.engine.z();
    Ok(module.engine.act(&letters, &z))
}

/// The tableau of `((ke),(je))` whose second component holds `a` (increasing), in `t_λ` order.
pub fn v_tableau(a: &[u8], n: usize) -> Vec<u8> {
    let mut w: Vec<u8> = a.to_vec();
    w.extend((1..=n as u8).filter(|x| !a.contains(x)));
    w
}

/// `v(a_1,…,a_m)` as a module element.
pub fn v(module: &mut SpechtModule, a: &[u8]) -> ModuleElement {
    let w = v_tableau(a, module.n());
    let id = module.engine.id_of(&w);
    module.engine.basis(id)
}

/// All increasing sequences of length `m` drawn from `1..=n`.
pub fn subsets(n: usize, m: usize) -> Vec<Vec<u8>> {
    fn go(start: u8, n: u8, m: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            if (n - x + 1) as usize + cur.len() < m {
                break;
            }
            cur.push(x);
            go(x + 1, n, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n as u8, m, &mut Vec::new(), &mut out);
    out
}

pub fn env(pairs: &[(char, i64)]) -> Env {
    pairs.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(text: &str, env: &Env) -> Vec<i64> {
        parse_product(text, env)
            .unwrap()
            .letters
            .into_iter()
            .map(|l| l.0)
            .collect()
    }

    #[test]
    fn factors_expand() {
        let e = env(&[('e', 3), ('b', 0)]);
        assert_eq!(idx("D(3,1) z", &e), vec![3, 2, 1]);
        assert_eq!(idx("U(2,4) z", &e), vec![2, 3, 4]);
        assert_eq!(idx("D(1,2) U(3,2) z", &e), Vec::<i64>::new());
        assert_eq!(idx("C(e,1; 2e-1,e) z", &e), vec![3, 2, 1, 4, 3, 2, 5, 4, 3]);
        assert_eq!(idx("CU(3,4; 2,3) z", &e), vec![3, 4, 2, 3]);
        assert_eq!(idx("C(2,2; 1,1) P(b+2) z", &e), vec![2]);
        assert_eq!(idx("P(2*(e-1)) z", &e), vec![4]);
    }

    #[test]
    fn errors_are_reported() {
        let e = env(&[('e', 3)]);
        assert_eq!(parse_product("D(q,1) z", &e), Err(WordsError::Unbound('q')));
        assert!(matches!(parse_product("C(1,1; 3,2) z", &e), Err(WordsError::Chain(..))));
        assert!(matches!(parse_product("D(2,1)", &e), Err(WordsError::Parse { .. })));
        let p = parse_product("P(9) z", &e).unwrap();
        assert!(matches!(p.to_letters(6), Err(WordsError::Range { .. })));
    }

    #[test]
    fn subsets_enumerate() {
        assert_eq!(subsets(4, 2).len(), 6);
        assert_eq!(subsets(3, 0), vec![Vec::<u8>::new()]);
        assert_eq!(v_tableau(&[1, 3], 4), vec![1, 3, 2, 4]);
    }
}
