//! Boolean formulas, canonical truth tables, and structure signatures.
//!
//! Concrete syntax (ASCII): variables `z0`, `z1`, ...; constants `0` and `1`;
//! `~` for negation (binds tightest); `&`, `|`, `^`, `->`, `<->` as binary
//! connectives, all left-associative, with precedence `~ > & > | > ^ > ->
//! > <->`; parentheses for grouping.
//!
//! Only `|` and `~` are primitive. The derived connectives expand as
//! `a & b = ~(~a | ~b)`, `a -> b = ~a | b`, `a <-> b = (a -> b) & (b -> a)`,
//! and `a ^ b = (a & ~b) | (~a & b)`; [`Formula::expand`] performs the
//! rewrite. Formulas are never simplified: two formulas are interchangeable
//! exactly when they lower to the same [`FunctionTable`].

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::ARITY_CAP;

/// Abstract syntax of a boolean formula over variables `z0, z1, ...`.
///
/// The derive order doubles as the tie-break ordering used when selecting
/// representative terms: constants < variables < negation < disjunction,
/// then derived connectives, each compared lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Formula {
    /// Constant `0` or `1`.
    Const(bool),
    /// Variable `z<index>`.
    Var(usize),
    /// `~f`
    Not(Box<Formula>),
    /// `f | g`
    Or(Box<Formula>, Box<Formula>),
    /// `f & g`
    And(Box<Formula>, Box<Formula>),
    /// `f -> g`
    Implies(Box<Formula>, Box<Formula>),
    /// `f <-> g`
    Equiv(Box<Formula>, Box<Formula>),
    /// `f ^ g`
    Xor(Box<Formula>, Box<Formula>),
}

impl Formula {
    pub fn var(i: usize) -> Self {
        Formula::Var(i)
    }

    pub fn constant(v: bool) -> Self {
        Formula::Const(v)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn or(f: Formula, g: Formula) -> Self {
        Formula::Or(Box::new(f), Box::new(g))
    }

    pub fn and(f: Formula, g: Formula) -> Self {
        Formula::And(Box::new(f), Box::new(g))
    }

    pub fn implies(f: Formula, g: Formula) -> Self {
        Formula::Implies(Box::new(f), Box::new(g))
    }

    pub fn equiv(f: Formula, g: Formula) -> Self {
        Formula::Equiv(Box::new(f), Box::new(g))
    }

    pub fn xor(f: Formula, g: Formula) -> Self {
        Formula::Xor(Box::new(f), Box::new(g))
    }

    /// Number of variables: one past the highest index mentioned, zero for
    /// variable-free formulas.
    pub fn arity(&self) -> usize {
        match self {
            Formula::Const(_) => 0,
            Formula::Var(i) => i + 1,
            Formula::Not(f) => f.arity(),
            Formula::Or(f, g)
            | Formula::And(f, g)
            | Formula::Implies(f, g)
            | Formula::Equiv(f, g)
            | Formula::Xor(f, g) => f.arity().max(g.arity()),
        }
    }

    /// Node count, the size measure for representative selection.
    pub fn size(&self) -> usize {
        match self {
            Formula::Const(_) | Formula::Var(_) => 1,
            Formula::Not(f) => 1 + f.size(),
            Formula::Or(f, g)
            | Formula::And(f, g)
            | Formula::Implies(f, g)
            | Formula::Equiv(f, g)
            | Formula::Xor(f, g) => 1 + f.size() + g.size(),
        }
    }

    /// Rewrites derived connectives into `|`/`~` form.
    pub fn expand(&self) -> Formula {
        match self {
            Formula::Const(v) => Formula::Const(*v),
            Formula::Var(i) => Formula::Var(*i),
            Formula::Not(f) => Formula::not(f.expand()),
            Formula::Or(f, g) => Formula::or(f.expand(), g.expand()),
            // a & b = ~(~a | ~b)
            Formula::And(f, g) => Formula::not(Formula::or(
                Formula::not(f.expand()),
                Formula::not(g.expand()),
            )),
            // a -> b = ~a | b
            Formula::Implies(f, g) => Formula::or(Formula::not(f.expand()), g.expand()),
            // a <-> b = (a -> b) & (b -> a)
            Formula::Equiv(f, g) => {
                let (f, g) = (f.expand(), g.expand());
                Formula::and(
                    Formula::implies(f.clone(), g.clone()),
                    Formula::implies(g, f),
                )
                .expand()
            }
            // a ^ b = (a & ~b) | (~a & b)
            Formula::Xor(f, g) => {
                let (f, g) = (f.expand(), g.expand());
                Formula::or(
                    Formula::and(f.clone(), Formula::not(g.clone())),
                    Formula::and(Formula::not(f), g),
                )
                .expand()
            }
        }
    }

    /// Classical valuation under an assignment of the variables.
    ///
    /// The assignment may be longer than the formula needs; extra positions
    /// are ignored.
    pub fn evaluate(&self, env: &[bool]) -> Result<bool, EvalError> {
        let needed = self.arity();
        if env.len() < needed {
            return Err(EvalError {
                arity: needed,
                len: env.len(),
            });
        }
        Ok(self.eval_unchecked(env))
    }

    fn eval_unchecked(&self, env: &[bool]) -> bool {
        match self {
            Formula::Const(v) => *v,
            Formula::Var(i) => env[*i],
            Formula::Not(f) => !f.eval_unchecked(env),
            Formula::Or(f, g) => f.eval_unchecked(env) | g.eval_unchecked(env),
            Formula::And(f, g) => f.eval_unchecked(env) & g.eval_unchecked(env),
            Formula::Implies(f, g) => !f.eval_unchecked(env) | g.eval_unchecked(env),
            Formula::Equiv(f, g) => f.eval_unchecked(env) == g.eval_unchecked(env),
            Formula::Xor(f, g) => f.eval_unchecked(env) != g.eval_unchecked(env),
        }
    }

    /// Canonicalizes the formula to its truth table at arity `n`.
    ///
    /// Padding variables are allowed: `n` may exceed the formula's own arity,
    /// and the extra variables simply do not influence the table.
    pub fn lower(&self, n: u8) -> Result<FunctionTable, ArityError> {
        check_arity(n)?;
        let needed = self.arity();
        if usize::from(n) < needed {
            return Err(ArityError::BelowFormula { n, needed });
        }
        let mut bits = 0u32;
        let mut env = [false; ARITY_CAP as usize];
        for index in 0..(1u32 << n) {
            for (i, slot) in env.iter_mut().enumerate().take(n as usize) {
                *slot = index >> i & 1 == 1;
            }
            if self.eval_unchecked(&env[..n as usize]) {
                bits |= 1 << index;
            }
        }
        Ok(FunctionTable { arity: n, bits })
    }

    /// Whether the formula only mentions constants and connectives available
    /// in `s` (derived connectives count as uses of both `or` and `neg`).
    pub fn admissible_in(&self, s: &StructureSpec) -> bool {
        match self {
            Formula::Const(v) => s.has_const(*v),
            Formula::Var(_) => true,
            Formula::Not(f) => s.has_neg() && f.admissible_in(s),
            Formula::Or(f, g) => s.has_or() && f.admissible_in(s) && g.admissible_in(s),
            Formula::And(f, g)
            | Formula::Implies(f, g)
            | Formula::Equiv(f, g)
            | Formula::Xor(f, g) => {
                s.has_or() && s.has_neg() && f.admissible_in(s) && g.admissible_in(s)
            }
        }
    }
}

/// Parses the ASCII grammar documented at module level.
pub fn parse_formula(text: &str) -> Result<Formula, ParseError> {
    parser::parse(text)
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_formula(s)
    }
}

// Precedence levels for printing; higher binds tighter.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Const(_) | Formula::Var(_) => 7,
        Formula::Not(_) => 6,
        Formula::And(..) => 5,
        Formula::Or(..) => 4,
        Formula::Xor(..) => 3,
        Formula::Implies(..) => 2,
        Formula::Equiv(..) => 1,
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn child(out: &mut fmt::Formatter<'_>, f: &Formula, min: u8) -> fmt::Result {
            if precedence(f) < min {
                write!(out, "({f})")
            } else {
                write!(out, "{f}")
            }
        }
        let p = precedence(self);
        match self {
            Formula::Const(v) => write!(out, "{}", u8::from(*v)),
            Formula::Var(i) => write!(out, "z{i}"),
            Formula::Not(f) => {
                write!(out, "~")?;
                child(out, f, p)
            }
            Formula::Or(f, g) => binary(out, f, g, "|", p),
            Formula::And(f, g) => binary(out, f, g, "&", p),
            Formula::Implies(f, g) => binary(out, f, g, "->", p),
            Formula::Equiv(f, g) => binary(out, f, g, "<->", p),
            Formula::Xor(f, g) => binary(out, f, g, "^", p),
        }
    }
}

// Left-associative: the left child may share the precedence level, the
// right child must bind strictly tighter to round-trip.
fn binary(out: &mut fmt::Formatter<'_>, f: &Formula, g: &Formula, op: &str, p: u8) -> fmt::Result {
    if precedence(f) < p {
        write!(out, "({f})")?;
    } else {
        write!(out, "{f}")?;
    }
    write!(out, " {op} ")?;
    if precedence(g) <= p {
        write!(out, "({g})")
    } else {
        write!(out, "{g}")
    }
}

/// Assignment shorter than the formula's arity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("assignment of length {len} is shorter than the formula arity {arity}")]
pub struct EvalError {
    pub arity: usize,
    pub len: usize,
}

/// Arity outside the supported range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArityError {
    #[error("arity {n} is outside the supported range 1..={cap}")]
    OutOfRange { n: u8, cap: u8 },
    #[error("arity {n} is below the formula arity {needed}")]
    BelowFormula { n: u8, needed: usize },
    #[error("arity range {lo}..={hi} is empty")]
    BadRange { lo: u8, hi: u8 },
}

pub(crate) fn check_arity(n: u8) -> Result<(), ArityError> {
    if n == 0 || n > ARITY_CAP {
        Err(ArityError::OutOfRange { n, cap: ARITY_CAP })
    } else {
        Ok(())
    }
}

/// Truth table of an `n`-ary boolean function.
///
/// Entry `i` is the value under the assignment whose bits spell `i`
/// little-endian by variable index (`z0` is bit 0). Logically equivalent
/// formulas of the same arity lower to equal tables, so a `FunctionTable`
/// doubles as the canonical form of a formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FunctionTable {
    arity: u8,
    bits: u32,
}

impl FunctionTable {
    /// Builds a table from explicit values; `values.len()` must be a power of
    /// two matching a supported arity.
    pub fn from_values(values: &[bool]) -> Result<Self, ArityError> {
        let n = match values.len() {
            2 => 1,
            4 => 2,
            8 => 3,
            other => {
                let implied = other.checked_ilog2().unwrap_or(0).min(u8::MAX.into()) as u8;
                return Err(ArityError::OutOfRange {
                    n: implied,
                    cap: ARITY_CAP,
                });
            }
        };
        let mut bits = 0u32;
        for (i, v) in values.iter().enumerate() {
            if *v {
                bits |= 1 << i;
            }
        }
        Ok(FunctionTable { arity: n, bits })
    }

    /// The constant-`v` function at arity `n`.
    pub fn constant(n: u8, v: bool) -> Result<Self, ArityError> {
        check_arity(n)?;
        let mask = table_mask(n);
        Ok(FunctionTable {
            arity: n,
            bits: if v { mask } else { 0 },
        })
    }

    /// The projection onto variable `var` at arity `n`.
    pub fn projection(n: u8, var: u8) -> Result<Self, ArityError> {
        check_arity(n)?;
        if var >= n {
            return Err(ArityError::BelowFormula {
                n,
                needed: usize::from(var) + 1,
            });
        }
        let mut bits = 0u32;
        for index in 0..(1u32 << n) {
            if index >> var & 1 == 1 {
                bits |= 1 << index;
            }
        }
        Ok(FunctionTable { arity: n, bits })
    }

    pub fn arity(&self) -> u8 {
        self.arity
    }

    /// Value under the assignment with the given little-endian index.
    pub fn value_at(&self, index: usize) -> bool {
        debug_assert!(index < self.len());
        self.bits >> index & 1 == 1
    }

    /// Number of table entries, `2^arity`.
    pub fn len(&self) -> usize {
        1 << self.arity
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// All `2^arity` values in assignment order.
    pub fn values(&self) -> Vec<bool> {
        (0..self.len()).map(|i| self.value_at(i)).collect()
    }

    /// Whether some assignment attains `v`.
    pub fn attains(&self, v: bool) -> bool {
        let mask = table_mask(self.arity);
        if v {
            self.bits & mask != 0
        } else {
            self.bits & mask != mask
        }
    }

    /// Pointwise negation.
    pub fn negate(&self) -> Self {
        FunctionTable {
            arity: self.arity,
            bits: !self.bits & table_mask(self.arity),
        }
    }

    /// Pointwise disjunction; both tables must share an arity.
    pub fn join(&self, other: &Self) -> Self {
        debug_assert_eq!(self.arity, other.arity);
        FunctionTable {
            arity: self.arity,
            bits: self.bits | other.bits,
        }
    }

    /// The table of the same function with variables permuted: entry for an
    /// assignment `e` is the original value at `e ∘ perm`.
    pub fn permute_vars(&self, perm: &[u8]) -> Self {
        debug_assert_eq!(perm.len(), self.arity as usize);
        let mut bits = 0u32;
        for index in 0..(1u32 << self.arity) {
            let mut source = 0u32;
            for (target_var, original_var) in perm.iter().enumerate() {
                if index >> target_var & 1 == 1 {
                    source |= 1 << original_var;
                }
            }
            if self.value_at(source as usize) {
                bits |= 1 << index;
            }
        }
        FunctionTable {
            arity: self.arity,
            bits,
        }
    }
}

fn table_mask(n: u8) -> u32 {
    (1u32 << (1 << n)) - 1
}

impl fmt::Display for FunctionTable {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "[")?;
        for i in 0..self.len() {
            if i > 0 {
                write!(out, ",")?;
            }
            write!(out, "{}", u8::from(self.value_at(i)))?;
        }
        write!(out, "]")
    }
}

/// A boolean structure: the universe `{0, 1}` with chosen function symbols
/// among `{or, neg}` and constants among `{0, 1}`.
///
/// Text form: comma-separated tokens with mandatory leading `B`, e.g. `B`,
/// `B,0`, `B,neg`, `B,or,neg,0,1`. Duplicate tokens are rejected; display is
/// always in the canonical token order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StructureSpec {
    or_: bool,
    neg: bool,
    zero: bool,
    one: bool,
}

impl StructureSpec {
    pub fn new(or_: bool, neg: bool, zero: bool, one: bool) -> Self {
        StructureSpec {
            or_,
            neg,
            zero,
            one,
        }
    }

    /// The bare universe with no functions and no constants.
    pub fn bare() -> Self {
        StructureSpec::new(false, false, false, false)
    }

    pub fn has_or(&self) -> bool {
        self.or_
    }

    pub fn has_neg(&self) -> bool {
        self.neg
    }

    pub fn has_const(&self, v: bool) -> bool {
        if v {
            self.one
        } else {
            self.zero
        }
    }

    /// Constants of the structure, in `0 < 1` order.
    pub fn consts(&self) -> Vec<bool> {
        let mut out = Vec::new();
        if self.zero {
            out.push(false);
        }
        if self.one {
            out.push(true);
        }
        out
    }

    /// Signature inclusion: fewer-or-equal functions and constants.
    pub fn is_substructure_of(&self, other: &StructureSpec) -> bool {
        (!self.or_ || other.or_)
            && (!self.neg || other.neg)
            && (!self.zero || other.zero)
            && (!self.one || other.one)
    }

    /// All sixteen expressible structures, in a fixed order: function subsets
    /// `{}, {or}, {neg}, {or,neg}` crossed with constant subsets
    /// `{}, {0}, {1}, {0,1}`.
    pub fn all() -> Vec<StructureSpec> {
        let mut out = Vec::with_capacity(16);
        for (or_, neg) in [(false, false), (true, false), (false, true), (true, true)] {
            for (zero, one) in [(false, false), (true, false), (false, true), (true, true)] {
                out.push(StructureSpec::new(or_, neg, zero, one));
            }
        }
        out
    }
}

impl fmt::Display for StructureSpec {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(out, "B")?;
        if self.or_ {
            write!(out, ",or")?;
        }
        if self.neg {
            write!(out, ",neg")?;
        }
        if self.zero {
            write!(out, ",0")?;
        }
        if self.one {
            write!(out, ",1")?;
        }
        Ok(())
    }
}

/// Malformed structure text.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureParseError {
    #[error("structure spec is empty")]
    Empty,
    #[error("structure spec must start with the token `B`")]
    MissingUniverse,
    #[error("unknown token `{0}` in structure spec (expected or, neg, 0, 1)")]
    UnknownToken(String),
    #[error("duplicate token `{0}` in structure spec")]
    Duplicate(String),
}

impl FromStr for StructureSpec {
    type Err = StructureParseError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let mut tokens = text.split(',').map(str::trim);
        let first = tokens.next().filter(|t| !t.is_empty());
        match first {
            None => return Err(StructureParseError::Empty),
            Some("B") => {}
            Some(_) => return Err(StructureParseError::MissingUniverse),
        }
        let mut spec = StructureSpec::bare();
        for tok in tokens {
            let slot = match tok {
                "or" => &mut spec.or_,
                "neg" => &mut spec.neg,
                "0" => &mut spec.zero,
                "1" => &mut spec.one,
                "B" => return Err(StructureParseError::Duplicate("B".into())),
                other => return Err(StructureParseError::UnknownToken(other.into())),
            };
            if *slot {
                return Err(StructureParseError::Duplicate(tok.into()));
            }
            *slot = true;
        }
        Ok(spec)
    }
}

/// Formula syntax error, with a byte position into the input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unknown symbol `{ch}` at position {pos}")]
    UnknownSymbol { pos: usize, ch: char },
    #[error("expected {expected} at position {pos}, found `{found}`")]
    Unexpected {
        pos: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unexpected end of input, expected {expected}")]
    UnexpectedEnd { expected: &'static str },
}

mod parser {
    use super::{Formula, ParseError};

    #[derive(Debug, Clone, PartialEq)]
    enum Token {
        Const(bool),
        Var(usize),
        Not,
        And,
        Or,
        Xor,
        Implies,
        Equiv,
        LParen,
        RParen,
    }

    impl std::fmt::Display for Token {
        fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
            match self {
                Token::Const(v) => write!(out, "{}", u8::from(*v)),
                Token::Var(i) => write!(out, "z{i}"),
                Token::Not => write!(out, "~"),
                Token::And => write!(out, "&"),
                Token::Or => write!(out, "|"),
                Token::Xor => write!(out, "^"),
                Token::Implies => write!(out, "->"),
                Token::Equiv => write!(out, "<->"),
                Token::LParen => write!(out, "("),
                Token::RParen => write!(out, ")"),
            }
        }
    }

    fn lex(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
        let bytes = text.as_bytes();
        let mut tokens = Vec::new();
        let mut i = 0;
        while i < bytes.len() {
            let pos = i;
            match bytes[i] {
                b' ' | b'\t' | b'\n' | b'\r' => i += 1,
                b'0' => {
                    tokens.push((pos, Token::Const(false)));
                    i += 1;
                }
                b'1' => {
                    tokens.push((pos, Token::Const(true)));
                    i += 1;
                }
                b'~' => {
                    tokens.push((pos, Token::Not));
                    i += 1;
                }
                b'&' => {
                    tokens.push((pos, Token::And));
                    i += 1;
                }
                b'|' => {
                    tokens.push((pos, Token::Or));
                    i += 1;
                }
                b'^' => {
                    tokens.push((pos, Token::Xor));
                    i += 1;
                }
                b'(' => {
                    tokens.push((pos, Token::LParen));
                    i += 1;
                }
                b')' => {
                    tokens.push((pos, Token::RParen));
                    i += 1;
                }
                b'-' => {
                    if bytes.get(i + 1) == Some(&b'>') {
                        tokens.push((pos, Token::Implies));
                        i += 2;
                    } else {
                        return Err(ParseError::UnknownSymbol { pos, ch: '-' });
                    }
                }
                b'<' => {
                    if bytes.get(i + 1) == Some(&b'-') && bytes.get(i + 2) == Some(&b'>') {
                        tokens.push((pos, Token::Equiv));
                        i += 3;
                    } else {
                        return Err(ParseError::UnknownSymbol { pos, ch: '<' });
                    }
                }
                b'z' => {
                    let start = i + 1;
                    let mut end = start;
                    while end < bytes.len() && bytes[end].is_ascii_digit() {
                        end += 1;
                    }
                    if end == start {
                        return Err(ParseError::Unexpected {
                            pos,
                            expected: "digits after `z`",
                            found: text[pos..(pos + 1)].to_string(),
                        });
                    }
                    let index: usize =
                        text[start..end]
                            .parse()
                            .map_err(|_| ParseError::Unexpected {
                                pos,
                                expected: "a variable index",
                                found: text[start..end].to_string(),
                            })?;
                    tokens.push((pos, Token::Var(index)));
                    i = end;
                }
                other => {
                    return Err(ParseError::UnknownSymbol {
                        pos,
                        ch: char::from(other),
                    })
                }
            }
        }
        Ok(tokens)
    }

    struct Parser {
        tokens: Vec<(usize, Token)>,
        at: usize,
    }

    impl Parser {
        fn peek(&self) -> Option<&Token> {
            self.tokens.get(self.at).map(|(_, t)| t)
        }

        fn bump(&mut self) -> Option<(usize, Token)> {
            let t = self.tokens.get(self.at).cloned();
            self.at += 1;
            t
        }

        // Each binary level is left-associative.
        fn equiv(&mut self) -> Result<Formula, ParseError> {
            let mut lhs = self.implies()?;
            while self.peek() == Some(&Token::Equiv) {
                self.bump();
                lhs = Formula::equiv(lhs, self.implies()?);
            }
            Ok(lhs)
        }

        fn implies(&mut self) -> Result<Formula, ParseError> {
            let mut lhs = self.xor()?;
            while self.peek() == Some(&Token::Implies) {
                self.bump();
                lhs = Formula::implies(lhs, self.xor()?);
            }
            Ok(lhs)
        }

        fn xor(&mut self) -> Result<Formula, ParseError> {
            let mut lhs = self.or()?;
            while self.peek() == Some(&Token::Xor) {
                self.bump();
                lhs = Formula::xor(lhs, self.or()?);
            }
            Ok(lhs)
        }

        fn or(&mut self) -> Result<Formula, ParseError> {
            let mut lhs = self.and()?;
            while self.peek() == Some(&Token::Or) {
                self.bump();
                lhs = Formula::or(lhs, self.and()?);
            }
            Ok(lhs)
        }

        fn and(&mut self) -> Result<Formula, ParseError> {
            let mut lhs = self.unary()?;
            while self.peek() == Some(&Token::And) {
                self.bump();
                lhs = Formula::and(lhs, self.unary()?);
            }
            Ok(lhs)
        }

        fn unary(&mut self) -> Result<Formula, ParseError> {
            if self.peek() == Some(&Token::Not) {
                self.bump();
                return Ok(Formula::not(self.unary()?));
            }
            self.atom()
        }

        fn atom(&mut self) -> Result<Formula, ParseError> {
            match self.bump() {
                Some((_, Token::Const(v))) => Ok(Formula::Const(v)),
                Some((_, Token::Var(i))) => Ok(Formula::Var(i)),
                Some((_, Token::LParen)) => {
                    let inner = self.equiv()?;
                    match self.bump() {
                        Some((_, Token::RParen)) => Ok(inner),
                        Some((pos, other)) => Err(ParseError::Unexpected {
                            pos,
                            expected: "`)`",
                            found: other.to_string(),
                        }),
                        None => Err(ParseError::UnexpectedEnd { expected: "`)`" }),
                    }
                }
                Some((pos, other)) => Err(ParseError::Unexpected {
                    pos,
                    expected: "a variable, constant, `~`, or `(`",
                    found: other.to_string(),
                }),
                None => Err(ParseError::UnexpectedEnd {
                    expected: "a variable, constant, `~`, or `(`",
                }),
            }
        }
    }

    pub(super) fn parse(text: &str) -> Result<Formula, ParseError> {
        let mut parser = Parser {
            tokens: lex(text)?,
            at: 0,
        };
        let formula = parser.equiv()?;
        match parser.bump() {
            None => Ok(formula),
            Some((pos, other)) => Err(ParseError::Unexpected {
                pos,
                expected: "end of input",
                found: other.to_string(),
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn parse(text: &str) -> Formula {
        parse_formula(text).unwrap()
    }

    #[test]
    fn parses_negated_variable() {
        assert_eq!(parse("~z0"), Formula::not(Formula::var(0)));
    }

    #[test]
    fn parses_parenthesized_disjunction() {
        assert_eq!(
            parse("(z0 | ~z0)"),
            Formula::or(Formula::var(0), Formula::not(Formula::var(0)))
        );
    }

    #[test]
    fn parses_xor_and_expands_it() {
        let f = parse("z0 ^ z1");
        assert_eq!(f, Formula::xor(Formula::var(0), Formula::var(1)));
        // (z0 & ~z1) | (~z0 & z1), with & itself expanded away
        let expanded = f.expand();
        for index in 0..4u32 {
            let env = [index & 1 == 1, index >> 1 & 1 == 1];
            assert_eq!(
                expanded.evaluate(&env).unwrap(),
                env[0] != env[1],
                "at {env:?}"
            );
        }
    }

    #[test]
    fn precedence_and_associativity() {
        // ~ > & > | > ^ > -> > <->, all binary levels left-associative
        assert_eq!(
            parse("~z0 & z1 | z2"),
            Formula::or(
                Formula::and(Formula::not(Formula::var(0)), Formula::var(1)),
                Formula::var(2)
            )
        );
        assert_eq!(
            parse("z0 -> z1 -> z2"),
            Formula::implies(
                Formula::implies(Formula::var(0), Formula::var(1)),
                Formula::var(2)
            )
        );
        assert_eq!(
            parse("z0 | z1 ^ z2 -> z0 <-> z1"),
            Formula::equiv(
                Formula::implies(
                    Formula::xor(
                        Formula::or(Formula::var(0), Formula::var(1)),
                        Formula::var(2)
                    ),
                    Formula::var(0)
                ),
                Formula::var(1)
            )
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match parse_formula("z0 @ z1") {
            Err(ParseError::UnknownSymbol { pos: 3, ch: '@' }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_formula("z0 |") {
            Err(ParseError::UnexpectedEnd { .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        match parse_formula("z0 z1") {
            Err(ParseError::Unexpected { pos: 3, .. }) => {}
            other => panic!("unexpected: {other:?}"),
        }
        assert!(parse_formula("z").is_err());
    }

    #[test]
    fn evaluates_truth_clauses() {
        assert!(parse("~0").evaluate(&[]).unwrap());
        assert!(!parse("z0 | z1").evaluate(&[false, false]).unwrap());
        assert!(parse("z0 <-> z1").evaluate(&[true, true]).unwrap());
        assert_eq!(
            parse("z0 | z1").evaluate(&[true]),
            Err(EvalError { arity: 2, len: 1 })
        );
    }

    #[test]
    fn lowers_to_expected_tables() {
        let id = parse("z0").lower(1).unwrap();
        assert_eq!(id.values(), vec![false, true]);
        let neg = parse("~z0").lower(1).unwrap();
        assert_eq!(neg.values(), vec![true, false]);
        // constant 1 is definable from | and ~ alone
        let top = parse("z0 | ~z0").lower(1).unwrap();
        assert_eq!(top.values(), vec![true, true]);
    }

    #[test]
    fn lower_rejects_bad_arities() {
        assert_eq!(
            parse("z2").lower(1),
            Err(ArityError::BelowFormula { n: 1, needed: 3 })
        );
        // huge variable indices parse fine and are rejected cleanly
        assert_eq!(parse("z300").arity(), 301);
        assert_eq!(
            parse("z300").lower(3),
            Err(ArityError::BelowFormula { n: 3, needed: 301 })
        );
        assert_eq!(
            parse("z0").lower(4),
            Err(ArityError::OutOfRange {
                n: 4,
                cap: ARITY_CAP
            })
        );
        assert_eq!(
            parse("z0").lower(0),
            Err(ArityError::OutOfRange {
                n: 0,
                cap: ARITY_CAP
            })
        );
    }

    #[test]
    fn derived_connectives_match_pointwise_tables() {
        // a & b lowers to pointwise min, a <-> b to pointwise equality;
        // exhaustive over both variables orders at arity <= 3.
        for n in 2..=3u8 {
            let a = Formula::var(0);
            let b = Formula::var(n as usize - 1);
            let and = Formula::and(a.clone(), b.clone()).lower(n).unwrap();
            let equiv = Formula::equiv(a.clone(), b.clone()).lower(n).unwrap();
            let ta = a.lower(n).unwrap();
            let tb = b.lower(n).unwrap();
            for i in 0..and.len() {
                assert_eq!(and.value_at(i), ta.value_at(i) & tb.value_at(i));
                assert_eq!(equiv.value_at(i), ta.value_at(i) == tb.value_at(i));
            }
        }
    }

    #[test]
    fn projection_and_constant_tables() {
        assert_eq!(
            FunctionTable::projection(2, 1).unwrap().values(),
            vec![false, false, true, true]
        );
        assert_eq!(
            FunctionTable::constant(1, true).unwrap().values(),
            vec![true, true]
        );
        let t = FunctionTable::from_values(&[false, true, true, false]).unwrap();
        assert_eq!(t.arity(), 2);
        assert!(t.attains(true) && t.attains(false));
        assert!(!FunctionTable::constant(2, false).unwrap().attains(true));
    }

    #[test]
    fn permute_vars_swaps_projections() {
        let p0 = FunctionTable::projection(2, 0).unwrap();
        let p1 = FunctionTable::projection(2, 1).unwrap();
        assert_eq!(p0.permute_vars(&[1, 0]), p1);
        assert_eq!(p1.permute_vars(&[1, 0]), p0);
    }

    #[test]
    fn structure_spec_round_trips() {
        for text in ["B", "B,0", "B,1", "B,neg", "B,or,neg,0,1", "B,neg,0"] {
            let s: StructureSpec = text.parse().unwrap();
            assert_eq!(s.to_string(), text);
        }
        // canonical ordering on display, any order on input
        let s: StructureSpec = "B,1,neg".parse().unwrap();
        assert_eq!(s.to_string(), "B,neg,1");
    }

    #[test]
    fn structure_spec_rejects_bad_text() {
        assert_eq!("".parse::<StructureSpec>(), Err(StructureParseError::Empty));
        assert_eq!(
            "neg".parse::<StructureSpec>(),
            Err(StructureParseError::MissingUniverse)
        );
        assert_eq!(
            "B,nor".parse::<StructureSpec>(),
            Err(StructureParseError::UnknownToken("nor".into()))
        );
        assert_eq!(
            "B,0,0".parse::<StructureSpec>(),
            Err(StructureParseError::Duplicate("0".into()))
        );
    }

    #[test]
    fn substructure_ordering() {
        let all = StructureSpec::all();
        assert_eq!(all.len(), 16);
        let bare = StructureSpec::bare();
        let full: StructureSpec = "B,or,neg,0,1".parse().unwrap();
        for s in &all {
            assert!(bare.is_substructure_of(s));
            assert!(s.is_substructure_of(&full));
        }
        let b0: StructureSpec = "B,0".parse().unwrap();
        let b1: StructureSpec = "B,1".parse().unwrap();
        assert!(!b0.is_substructure_of(&b1));
    }

    #[test]
    fn admissibility_tracks_signature() {
        let bare = StructureSpec::bare();
        let bneg: StructureSpec = "B,neg".parse().unwrap();
        let full: StructureSpec = "B,or,neg,0,1".parse().unwrap();
        assert!(parse("z0").admissible_in(&bare));
        assert!(!parse("~z0").admissible_in(&bare));
        assert!(parse("~z0").admissible_in(&bneg));
        assert!(!parse("z0 | z1").admissible_in(&bneg));
        assert!(!parse("0").admissible_in(&bneg));
        // derived connectives need both or and neg
        assert!(!parse("z0 & z1").admissible_in(&bneg));
        assert!(parse("z0 & z1 ^ 0 <-> 1").admissible_in(&full));
    }

    fn arb_formula() -> impl Strategy<Value = Formula> {
        let leaf = prop_oneof![
            any::<bool>().prop_map(Formula::Const),
            (0usize..3).prop_map(Formula::Var),
        ];
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner.clone().prop_map(Formula::not),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::or(f, g)),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::and(f, g)),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::implies(f, g)),
                (inner.clone(), inner.clone()).prop_map(|(f, g)| Formula::equiv(f, g)),
                (inner.clone(), inner).prop_map(|(f, g)| Formula::xor(f, g)),
            ]
        })
    }

    proptest! {
        // evaluate agrees with the lowered table on every assignment
        #[test]
        fn lowering_round_trips(f in arb_formula()) {
            let lo = f.arity().max(1) as u8;
            for n in lo..=ARITY_CAP {
                let table = f.lower(n).unwrap();
                for index in 0..table.len() {
                    let env: Vec<bool> = (0..n as usize).map(|i| index >> i & 1 == 1).collect();
                    prop_assert_eq!(f.evaluate(&env).unwrap(), table.value_at(index));
                }
            }
        }

        // expansion never changes the denoted function
        #[test]
        fn expansion_is_sound(f in arb_formula()) {
            let n = f.arity().max(1) as u8;
            let expanded = f.expand();
            prop_assert_eq!(f.lower(n).unwrap(), expanded.lower(n).unwrap());
        }

        // printing then parsing is the identity
        #[test]
        fn display_round_trips(f in arb_formula()) {
            let printed = f.to_string();
            prop_assert_eq!(parse_formula(&printed).unwrap(), f, "printed as {}", printed);
        }
    }
}
