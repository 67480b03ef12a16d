//! Presentation DSL: `<a,b | aba^-1b^-1, a^3>`.
//!
//! Relators are products of factors separated by optional whitespace or `*`.
//! A factor is a generator name (longest match), `1`, or a parenthesised
//! product, optionally followed by `^n` with `n` a nonzero integer.

use super::{Presentation, Word, WordsError};

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    names: Vec<String>,
}

pub fn parse_presentation(text: &str) -> Result<Presentation, WordsError> {
    let mut p = Parser {
        src: text,
        pos: 0,
        names: Vec::new(),
    };
    p.skip_ws();
    p.expect('<')?;
    p.skip_ws();
    if p.peek() != Some('|') {
        loop {
            p.skip_ws();
            let start = p.pos;
            let name = p
                .ident()
                .ok_or_else(|| p.syntax("expected generator name"))?;
            if p.names.contains(&name) {
                p.pos = start;
                return Err(WordsError::DuplicateGenerator(name));
            }
            p.names.push(name);
            p.skip_ws();
            match p.peek() {
                Some(',') => p.bump(),
                _ => break,
            }
        }
    }
    p.skip_ws();
    p.expect('|')?;
    let mut relators = Vec::new();
    p.skip_ws();
    if p.peek() != Some('>') {
        loop {
            relators.push(p.product()?);
            p.skip_ws();
            match p.peek() {
                Some(',') => p.bump(),
                _ => break,
            }
        }
    }
    p.skip_ws();
    p.expect('>')?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.syntax("trailing input after `>`"));
    }
    Presentation::new(p.names, relators)
}

impl Parser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<char> {
        self.rest().chars().next()
    }

    fn bump(&mut self) {
        if let Some(c) = self.peek() {
            self.pos += c.len_utf8();
        }
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.bump();
        }
    }

    fn syntax(&self, msg: &str) -> WordsError {
        WordsError::Syntax {
            pos: self.pos,
            msg: msg.to_string(),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), WordsError> {
        if self.peek() == Some(c) {
            self.bump();
            Ok(())
        } else {
            Err(self.syntax(&format!("expected `{c}`")))
        }
    }

    fn ident(&mut self) -> Option<String> {
        let rest = self.rest();
        let mut chars = rest.char_indices();
        match chars.next() {
            Some((_, c)) if c.is_alphabetic() || c == '_' => {}
            _ => return None,
        }
        let end = chars
            .find(|&(_, c)| !(c.is_alphanumeric() || c == '_'))
            .map_or(rest.len(), |(i, _)| i);
        let s = rest[..end].to_string();
        self.pos += end;
        Some(s)
    }

    fn product(&mut self) -> Result<Word, WordsError> {
        let mut w = Word::identity();
        let mut any = false;
        loop {
            self.skip_ws();
            if any && self.peek() == Some('*') {
                self.bump();
                self.skip_ws();
            }
            match self.peek() {
                Some(',') | Some('>') | Some(')') | None => break,
                _ => {}
            }
            let f = self.factor()?;
            w = &w * &f;
            any = true;
        }
        if !any {
            return Err(self.syntax("empty relator"));
        }
        Ok(w)
    }

    fn factor(&mut self) -> Result<Word, WordsError> {
        let base = match self.peek() {
            Some('(') => {
                self.bump();
                let w = self.product()?;
                self.skip_ws();
                self.expect(')')?;
                w
            }
            Some('1') => {
                self.bump();
                Word::identity()
            }
            Some(c) if c.is_alphabetic() || c == '_' => self.generator()?,
            _ => return Err(self.syntax("expected generator, `1` or `(`")),
        };
        if self.peek() == Some('^') {
            self.bump();
            let start = self.pos;
            let exp = self.integer()?;
            if exp == 0 {
                return Err(WordsError::ZeroExponent { pos: start });
            }
            Ok(base.pow(exp))
        } else {
            Ok(base)
        }
    }

    fn generator(&mut self) -> Result<Word, WordsError> {
        let rest = self.rest();
        let best = self
            .names
            .iter()
            .enumerate()
            .filter(|(_, n)| rest.starts_with(n.as_str()))
            .max_by_key(|(_, n)| n.len());
        match best {
            Some((i, n)) => {
                self.pos += n.len();
                Ok(Word::generator(i))
            }
            None => {
                let pos = self.pos;
                let name = self.ident().unwrap_or_default();
                Err(WordsError::UnknownGenerator { name, pos })
            }
        }
    }

    fn integer(&mut self) -> Result<i64, WordsError> {
        let start = self.pos;
        if self.peek() == Some('-') {
            self.bump();
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.bump();
        }
        self.src[start..self.pos]
            .parse()
            .map_err(|_| WordsError::Syntax {
                pos: start,
                msg: "expected integer exponent".into(),
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_group() {
        let p = parse_presentation("<a,b|>").unwrap();
        assert_eq!(p.generator_count(), 2);
        assert!(p.relators().is_empty());
    }

    #[test]
    fn cyclic_group() {
        let p = parse_presentation("<a|a^3>").unwrap();
        assert_eq!(p.relators(), &[Word::power_of(0, 3)]);
    }

    #[test]
    fn commutator_relator() {
        let p = parse_presentation("<a,b|aba^-1b^-1>").unwrap();
        assert_eq!(p.relators()[0].len(), 4);
        assert_eq!(p.relators()[0].runs().len(), 4);
    }

    #[test]
    fn reduces_relators() {
        let p = parse_presentation("< a , b | a b b^-1 a , (ab)^2 >").unwrap();
        assert_eq!(p.relators()[0], Word::power_of(0, 2));
        assert_eq!(p.relators()[1].len(), 4);
    }

    #[test]
    fn multi_char_names() {
        let p = parse_presentation("<x1,x12|x12*x1^2>").unwrap();
        assert_eq!(p.relators()[0], Word::from_runs([(1, 1), (0, 2)]));
    }

    #[test]
    fn trivial_group() {
        let p = parse_presentation("<|>").unwrap();
        assert_eq!(p.generator_count(), 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_presentation("<a|b>"),
            Err(WordsError::UnknownGenerator { pos: 3, .. })
        ));
        assert_eq!(
            parse_presentation("<a|a^0>"),
            Err(WordsError::ZeroExponent { pos: 5 })
        );
        assert!(matches!(
            parse_presentation("<a|a"),
            Err(WordsError::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_presentation("a|a>"),
            Err(WordsError::Syntax { pos: 0, .. })
        ));
        assert!(matches!(
            parse_presentation("<a,a|>"),
            Err(WordsError::DuplicateGenerator(_))
        ));
    }
}
