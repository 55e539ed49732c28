use std::fmt;

use super::FreeGroupError;

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: char,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(generator: char, inverse: bool) -> Self {
        Letter { generator, inverse }
    }

    pub const fn pos(generator: char) -> Self {
        Letter::new(generator, false)
    }

    pub const fn neg(generator: char) -> Self {
        Letter::new(generator, true)
    }

    #[must_use]
    pub const fn inv(self) -> Self {
        Letter::new(self.generator, !self.inverse)
    }

    /// True when `self` followed by `other` freely cancels.
    pub fn cancels(self, other: Letter) -> bool {
        self.generator == other.generator && self.inverse != other.inverse
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inverse {
            write!(f, "{}'", self.generator)
        } else {
            write!(f, "{}", self.generator)
        }
    }
}

/// The set of generator symbols a word may use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, FreeGroupError> {
        let mut out: Vec<char> = Vec::new();
        for s in symbols {
            if !s.is_alphabetic() {
                return Err(FreeGroupError::BadAlphabet(s));
            }
            if out.contains(&s) {
                return Err(FreeGroupError::DuplicateSymbol(s));
            }
            out.push(s);
        }
        Ok(Alphabet { symbols: out })
    }

    /// The three-generator alphabet `{x, y, z}`.
    pub fn xyz() -> Self {
        Alphabet {
            symbols: vec!['x', 'y', 'z'],
        }
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }

    /// All letters, positive then negative, in declaration order.
    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.symbols
            .iter()
            .map(|&g| Letter::pos(g))
            .chain(self.symbols.iter().map(|&g| Letter::neg(g)))
    }
}

/// A freely reduced word. Every constructor reduces, so no value of this
/// type ever holds an adjacent cancelling pair.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: char) -> Self {
        Word {
            letters: vec![Letter::pos(g)],
        }
    }

    /// Freely reduce a raw letter sequence, rejecting symbols outside `alphabet`.
    pub fn reduce(alphabet: &Alphabet, raw: impl IntoIterator<Item = Letter>) -> Result<Self, FreeGroupError> {
        let mut stack: Vec<Letter> = Vec::new();
        for l in raw {
            if !alphabet.contains(l.generator) {
                return Err(FreeGroupError::UnknownGenerator(l.generator));
            }
            push_reduced(&mut stack, l);
        }
        Ok(Word { letters: stack })
    }

    /// Reduce letters already known to come from a valid alphabet.
    pub(crate) fn from_letters(raw: impl IntoIterator<Item = Letter>) -> Self {
        let mut stack = Vec::new();
        for l in raw {
            push_reduced(&mut stack, l);
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    #[must_use]
    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Product `self * other`, reduced at the interface.
    #[must_use]
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut letters, l);
        }
        Word { letters }
    }

    #[must_use]
    pub fn pow(&self, n: i64) -> Word {
        let base = if n < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..n.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `c * self * c^-1`.
    #[must_use]
    pub fn conjugate_by(&self, c: &Word) -> Word {
        c.concat(self).concat(&c.inverse())
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&a), Some(&b)) => self.letters.len() == 1 || !b.cancels(a),
            _ => true,
        }
    }

    /// Strip matching first/last letters until the word is cyclically reduced.
    #[must_use]
    pub fn cyclic_reduce(&self) -> Word {
        let (mut lo, mut hi) = (0usize, self.letters.len());
        while hi - lo >= 2 && self.letters[hi - 1].cancels(self.letters[lo]) {
            lo += 1;
            hi -= 1;
        }
        Word {
            letters: self.letters[lo..hi].to_vec(),
        }
    }

    /// Cyclic rotation starting at letter `k`. Only meaningful as a reduced
    /// word when `self` is cyclically reduced.
    #[must_use]
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return Word::identity();
        }
        let k = k % self.letters.len();
        Word::from_letters(self.letters[k..].iter().chain(&self.letters[..k]).copied())
    }

    /// Conjugacy in the free group: the cyclic reductions must be rotations
    /// of each other. Rotation matching searches `v` inside `u u`.
    pub fn is_conjugate_to(&self, other: &Word) -> bool {
        let u = self.cyclic_reduce();
        let v = other.cyclic_reduce();
        if u.len() != v.len() {
            return false;
        }
        if u.is_empty() {
            return true;
        }
        let n = u.len();
        let doubled: Vec<Letter> = u.letters.iter().chain(&u.letters).copied().collect();
        doubled.windows(n).take(n).any(|w| w == v.letters.as_slice())
    }

    /// Parse the text syntax: single-letter generators, inverse by `'` or
    /// `^-1`, optional `*` between factors, whitespace ignored. Brackets
    /// `( )` / `[ ]` group, and groups or letters accept integer exponents
    /// (`^2`, `^{-1}`, `^-3`).
    pub fn parse(alphabet: &Alphabet, text: &str) -> Result<Word, FreeGroupError> {
        let mut p = WordParser {
            chars: text.char_indices().peekable(),
            alphabet,
            text,
        };
        let raw = p.expr(None)?;
        if let Some(&(pos, c)) = p.chars.peek() {
            return Err(FreeGroupError::Syntax {
                pos,
                msg: format!("unexpected '{c}'"),
            });
        }
        Ok(Word::from_letters(raw))
    }
}

fn push_reduced(stack: &mut Vec<Letter>, l: Letter) {
    if stack.last().is_some_and(|&t| t.cancels(l)) {
        stack.pop();
    } else {
        stack.push(l);
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for l in &self.letters {
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Number of letters in the raw (unreduced) expansion of `text`. Used to
/// detect whether a printed word reduces further.
pub fn raw_length(alphabet: &Alphabet, text: &str) -> Result<usize, FreeGroupError> {
    let mut p = WordParser {
        chars: text.char_indices().peekable(),
        alphabet,
        text,
    };
    Ok(p.expr(None)?.len())
}

struct WordParser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    alphabet: &'a Alphabet,
    text: &'a str,
}

impl WordParser<'_> {
    fn skip_ws(&mut self) {
        while self.chars.peek().is_some_and(|&(_, c)| c.is_whitespace() || c == '*') {
            self.chars.next();
        }
    }

    fn expr(&mut self, close: Option<char>) -> Result<Vec<Letter>, FreeGroupError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let Some(&(pos, c)) = self.chars.peek() else {
                return match close {
                    Some(cl) => Err(FreeGroupError::Syntax {
                        pos: self.text.len(),
                        msg: format!("missing '{cl}'"),
                    }),
                    None => Ok(out),
                };
            };
            if Some(c) == close {
                self.chars.next();
                return Ok(out);
            }
            let factor = match c {
                '(' | '[' => {
                    self.chars.next();
                    self.expr(Some(if c == '(' { ')' } else { ']' }))?
                }
                g if g.is_alphabetic() => {
                    if !self.alphabet.contains(g) {
                        return Err(FreeGroupError::UnknownGenerator(g));
                    }
                    self.chars.next();
                    vec![Letter::pos(g)]
                }
                _ => {
                    return Err(FreeGroupError::Syntax {
                        pos,
                        msg: format!("unexpected '{c}'"),
                    })
                }
            };
            let exp = self.exponent()?;
            let piece: Vec<Letter> = if exp < 0 {
                factor.iter().rev().map(|l| l.inv()).collect()
            } else {
                factor
            };
            for _ in 0..exp.unsigned_abs() {
                out.extend_from_slice(&piece);
            }
        }
    }

    fn exponent(&mut self) -> Result<i64, FreeGroupError> {
        let mut exp = 1i64;
        loop {
            match self.chars.peek() {
                Some(&(_, '\'')) => {
                    self.chars.next();
                    exp = -exp;
                }
                Some(&(pos, '^')) => {
                    self.chars.next();
                    let braced = self.chars.peek().is_some_and(|&(_, c)| c == '{');
                    if braced {
                        self.chars.next();
                    }
                    let mut digits = String::new();
                    while let Some(&(_, c)) = self.chars.peek() {
                        if c.is_ascii_digit() || (c == '-' && digits.is_empty()) {
                            digits.push(c);
                            self.chars.next();
                        } else {
                            break;
                        }
                    }
                    if braced {
                        match self.chars.next() {
                            Some((_, '}')) => {}
                            _ => {
                                return Err(FreeGroupError::Syntax {
                                    pos,
                                    msg: "unterminated '^{'".into(),
                                })
                            }
                        }
                    }
                    let e: i64 = digits.parse().map_err(|_| FreeGroupError::Syntax {
                        pos,
                        msg: format!("bad exponent '{digits}'"),
                    })?;
                    exp *= e;
                }
                _ => return Ok(exp),
            }
        }
    }
}
