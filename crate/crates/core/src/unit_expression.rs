//! Rendering dimension vectors as unit strings, and parsing unit
//! expressions back.
//!
//! Rendered form: numerator terms joined by `" * "`, then, when any
//! exponent is negative, `" / "` followed by the denominator terms joined by
//! `" * "`. Everything after the slash is one denominator, so
//! `kg / m * (s**2)` reads kg/(m·s²). Exponent 1 renders as the bare symbol,
//! larger exponents as `(sym**k)`, and the dimensionless vector as `1`.
//! Terms appear in the order mass, length, time, current, temperature,
//! amount of substance, luminous intensity.
//!
//! Accepted grammar (a superset of the rendered form):
//!
//! ```text
//! expr    := product ( "/" product )?
//! product := factor ( "*" factor )*
//! factor  := atom ( "**" int )?
//! atom    := symbol | "1" | "(" expr ")"
//! ```

use std::fmt;

use crate::catalog::Prefix;
use crate::dimension::{Dimension, DimensionVector};
use crate::error::{Error, Result};

/// Rendering order of dimensions within numerator and denominator.
pub const VIEW_ORDER: [Dimension; Dimension::COUNT] = [
    Dimension::Mass,
    Dimension::Length,
    Dimension::Time,
    Dimension::Current,
    Dimension::Temperature,
    Dimension::AmountOfSubstance,
    Dimension::LuminousIntensity,
];

/// Display symbol for every dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionNames([String; Dimension::COUNT]);

impl DimensionNames {
    /// Symbols must be distinct identifiers (a letter or `_`, then letters,
    /// digits or `_`).
    pub fn new<F>(mut symbol: F) -> Result<Self>
    where
        F: FnMut(Dimension) -> String,
    {
        let names = Dimension::ALL.map(&mut symbol);
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(Error::InvalidNames(format!("`{n}` is not a symbol")));
            }
            if names[..i].contains(n) {
                return Err(Error::InvalidNames(format!("`{n}` used twice")));
            }
        }
        Ok(DimensionNames(names))
    }

    pub fn si() -> Self {
        DimensionNames(Dimension::ALL.map(|d| d.si_unit().to_string()))
    }

    /// Imperial view: yards, pounds and degrees Rankine.
    pub fn bis() -> Self {
        DimensionNames::new(|d| {
            match d {
                Dimension::Length => "yd",
                Dimension::Mass => "lb",
                Dimension::Temperature => "degR",
                other => other.si_unit(),
            }
            .to_string()
        })
        .expect("distinct symbols")
    }

    pub fn symbol(&self, dim: Dimension) -> &str {
        &self.0[dim.index()]
    }

    pub fn dimension_of(&self, symbol: &str) -> Option<Dimension> {
        Dimension::ALL.into_iter().find(|d| self.symbol(*d) == symbol)
    }
}

impl Default for DimensionNames {
    fn default() -> Self {
        DimensionNames::si()
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

fn render_terms(names: &DimensionNames, terms: &[(Dimension, i32)]) -> String {
    terms
        .iter()
        .map(|&(d, k)| {
            if k == 1 {
                names.symbol(d).to_string()
            } else {
                format!("({}**{})", names.symbol(d), k)
            }
        })
        .collect::<Vec<_>>()
        .join(" * ")
}

/// Renders `dv` with the given symbols.
pub fn dim_view(names: &DimensionNames, dv: &DimensionVector) -> String {
    let numerator: Vec<_> = VIEW_ORDER
        .iter()
        .map(|&d| (d, dv.get(d)))
        .filter(|&(_, k)| k > 0)
        .collect();
    let denominator: Vec<_> = VIEW_ORDER
        .iter()
        .map(|&d| (d, -dv.get(d)))
        .filter(|&(_, k)| k > 0)
        .collect();
    let top = if numerator.is_empty() {
        "1".to_string()
    } else {
        render_terms(names, &numerator)
    };
    if denominator.is_empty() {
        top
    } else {
        format!("{top} / {}", render_terms(names, &denominator))
    }
}

/// [`dim_view`] with SI symbols, for a quantity or measurement system.
pub fn si_dim_view(p: &Prefix) -> Result<String> {
    Ok(dim_view(&DimensionNames::si(), &p.quantity()?.dim()))
}

/// Parsed unit expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnitExpr {
    /// The literal `1`.
    One,
    Symbol { name: String, offset: usize },
    Pow(Box<UnitExpr>, i32),
    Product(Vec<UnitExpr>),
    Quotient(Box<UnitExpr>, Box<UnitExpr>),
}

/// A symbol with its net exponent, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub symbol: String,
    pub exponent: i32,
    pub offset: usize,
}

impl UnitExpr {
    /// Flattens into symbol terms; denominator exponents are negated and
    /// powers distributed. Source order is kept.
    pub fn terms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        self.collect_terms(1, &mut out);
        out
    }

    fn collect_terms(&self, k: i32, out: &mut Vec<Term>) {
        match self {
            UnitExpr::One => {}
            UnitExpr::Symbol { name, offset } => out.push(Term {
                symbol: name.clone(),
                exponent: k,
                offset: *offset,
            }),
            UnitExpr::Pow(inner, n) => inner.collect_terms(k * n, out),
            UnitExpr::Product(factors) => {
                for f in factors {
                    f.collect_terms(k, out);
                }
            }
            UnitExpr::Quotient(num, den) => {
                num.collect_terms(k, out);
                den.collect_terms(-k, out);
            }
        }
    }
}

impl fmt::Display for UnitExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnitExpr::One => f.write_str("1"),
            UnitExpr::Symbol { name, .. } => f.write_str(name),
            UnitExpr::Pow(inner, n) => match inner.as_ref() {
                UnitExpr::Symbol { name, .. } => write!(f, "({name}**{n})"),
                other => write!(f, "({other})**{n}"),
            },
            UnitExpr::Product(factors) => {
                for (i, x) in factors.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" * ")?;
                    }
                    match x {
                        UnitExpr::Quotient(..) | UnitExpr::Product(_) => write!(f, "({x})")?,
                        _ => write!(f, "{x}")?,
                    }
                }
                Ok(())
            }
            UnitExpr::Quotient(num, den) => {
                match num.as_ref() {
                    UnitExpr::Quotient(..) => write!(f, "({num})")?,
                    _ => write!(f, "{num}")?,
                }
                f.write_str(" / ")?;
                match den.as_ref() {
                    UnitExpr::Quotient(..) => write!(f, "({den})"),
                    _ => write!(f, "{den}"),
                }
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String),
    Int(i64),
    Star,
    Pow,
    Slash,
    Open,
    Close,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Ident(s) => write!(f, "symbol `{s}`"),
            Token::Int(n) => write!(f, "integer `{n}`"),
            Token::Star => f.write_str("`*`"),
            Token::Pow => f.write_str("`**`"),
            Token::Slash => f.write_str("`/`"),
            Token::Open => f.write_str("`(`"),
            Token::Close => f.write_str("`)`"),
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        offset,
        message: message.into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Token, usize)>> {
    let mut tokens = Vec::new();
    let mut iter = text.char_indices().peekable();
    while let Some(&(at, c)) = iter.peek() {
        if c.is_whitespace() {
            iter.next();
        } else if c == '*' {
            iter.next();
            if matches!(iter.peek(), Some((_, '*'))) {
                iter.next();
                tokens.push((Token::Pow, at));
            } else {
                tokens.push((Token::Star, at));
            }
        } else if c == '/' || c == '(' || c == ')' {
            iter.next();
            let tok = match c {
                '/' => Token::Slash,
                '(' => Token::Open,
                _ => Token::Close,
            };
            tokens.push((tok, at));
        } else if c.is_ascii_digit() || c == '-' {
            iter.next();
            let mut end = at + c.len_utf8();
            while let Some(&(i, d)) = iter.peek() {
                if !d.is_ascii_digit() {
                    break;
                }
                end = i + d.len_utf8();
                iter.next();
            }
            let digits = &text[at..end];
            let n = digits
                .parse::<i64>()
                .map_err(|_| syntax(at, format!("invalid integer `{digits}`")))?;
            tokens.push((Token::Int(n), at));
        } else if c.is_alphabetic() || c == '_' {
            iter.next();
            let mut end = at + c.len_utf8();
            while let Some(&(i, d)) = iter.peek() {
                if !(d.is_alphanumeric() || d == '_') {
                    break;
                }
                end = i + d.len_utf8();
                iter.next();
            }
            tokens.push((Token::Ident(text[at..end].to_string()), at));
        } else {
            return Err(syntax(at, format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(Token, usize)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(t, _)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |&(_, o)| o)
    }

    fn bump(&mut self) -> Option<(Token, usize)> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<UnitExpr> {
        let num = self.product()?;
        if self.peek() == Some(&Token::Slash) {
            self.bump();
            let den = self.product()?;
            if self.peek() == Some(&Token::Slash) {
                return Err(syntax(
                    self.offset(),
                    "a second `/` needs parentheses; everything after `/` is already the denominator",
                ));
            }
            Ok(UnitExpr::Quotient(Box::new(num), Box::new(den)))
        } else {
            Ok(num)
        }
    }

    fn product(&mut self) -> Result<UnitExpr> {
        let mut factors = vec![self.factor()?];
        while self.peek() == Some(&Token::Star) {
            self.bump();
            factors.push(self.factor()?);
        }
        Ok(if factors.len() == 1 {
            factors.pop().expect("one factor")
        } else {
            UnitExpr::Product(factors)
        })
    }

    fn factor(&mut self) -> Result<UnitExpr> {
        let atom = self.atom()?;
        if self.peek() != Some(&Token::Pow) {
            return Ok(atom);
        }
        self.bump();
        let at = self.offset();
        match self.bump() {
            Some((Token::Int(n), _)) => {
                let n = i32::try_from(n).map_err(|_| syntax(at, "exponent out of range"))?;
                if n == 0 {
                    return Err(syntax(at, "exponent must be non-zero"));
                }
                Ok(UnitExpr::Pow(Box::new(atom), n))
            }
            Some((t, _)) => Err(syntax(at, format!("expected an integer exponent, found {t}"))),
            None => Err(syntax(at, "expected an integer exponent, found end of input")),
        }
    }

    fn atom(&mut self) -> Result<UnitExpr> {
        let at = self.offset();
        match self.bump() {
            Some((Token::Ident(name), offset)) => Ok(UnitExpr::Symbol { name, offset }),
            Some((Token::Int(1), _)) => Ok(UnitExpr::One),
            Some((Token::Open, _)) => {
                let inner = self.expr()?;
                let close = self.offset();
                match self.bump() {
                    Some((Token::Close, _)) => Ok(inner),
                    Some((t, _)) => Err(syntax(close, format!("expected `)`, found {t}"))),
                    None => Err(syntax(close, "unclosed `(`")),
                }
            }
            Some((t, _)) => Err(syntax(at, format!("expected a unit symbol, found {t}"))),
            None => Err(syntax(at, "expected a unit symbol, found end of input")),
        }
    }
}

/// Parses a unit expression such as `kg * (m**2) / (s**2)` or `mile/hour`.
pub fn parse_unit(text: &str) -> Result<UnitExpr> {
    let tokens = lex(text)?;
    if tokens.is_empty() {
        return Err(syntax(0, "empty unit expression"));
    }
    let mut parser = Parser {
        tokens,
        pos: 0,
        end: text.len(),
    };
    let expr = parser.expr()?;
    if let Some((t, at)) = parser.tokens.get(parser.pos) {
        return Err(syntax(*at, format!("unexpected {t}")));
    }
    Ok(expr)
}

/// Dimension vector of `e`, reading its symbols through `names`.
pub fn expr_to_dv(e: &UnitExpr, names: &DimensionNames) -> Result<DimensionVector> {
    let mut exponents = [0i32; Dimension::COUNT];
    for term in e.terms() {
        let dim = names.dimension_of(&term.symbol).ok_or_else(|| Error::UnknownSymbol {
            symbol: term.symbol.clone(),
            offset: term.offset,
            known: Dimension::ALL.iter().map(|d| names.symbol(*d).to_string()).collect(),
        })?;
        exponents[dim.index()] += term.exponent;
    }
    Ok(DimensionVector::from_exponents(exponents))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::*;
    use crate::dimension::*;
    use crate::quantity::Quantity;
    use proptest::prelude::*;

    #[test]
    fn printed_views() {
        let si = DimensionNames::si();
        assert_eq!(dim_view(&si, &ENERGY), "kg * (m**2) / (s**2)");
        assert_eq!(dim_view(&si, &PRESSURE), "kg / m * (s**2)");
        let mass_over_acc = DimensionVector::from_exponents([-1, 1, 2, 0, 0, 0, 0]);
        assert_eq!(dim_view(&si, &mass_over_acc), "kg * (s**2) / m");
    }

    #[test]
    fn edge_views() {
        let si = DimensionNames::si();
        assert_eq!(dim_view(&si, &DimensionVector::ZERO), "1");
        assert_eq!(dim_view(&si, &FREQUENCY), "1 / s");
        assert_eq!(dim_view(&si, &VELOCITY), "m / s");
        assert_eq!(dim_view(&si, &CAPACITANCE), "(s**4) * (A**2) / kg * (m**2)");
        assert_eq!(dim_view(&DimensionNames::bis(), &VELOCITY), "yd / s");
    }

    #[test]
    fn si_dim_view_accepts_quantities_and_systems() {
        assert_eq!(si_dim_view(&Prefix::from(si_pascal())).unwrap(), "kg / m * (s**2)");
        assert_eq!(si_dim_view(&Prefix::from(Quantity::unit(DimensionVector::ZERO))).unwrap(), "1");
        assert_eq!(si_dim_view(&Prefix::from(si_velocity().quantity)).unwrap(), "m / s");
        assert_eq!(si_dim_view(&Prefix::from(2.0)), Err(Error::BareMagnitude));
    }

    #[test]
    fn parse_examples() {
        let si = DimensionNames::si();
        let e = parse_unit("kg * (m**2) / (s**2)").unwrap();
        assert_eq!(expr_to_dv(&e, &si).unwrap(), ENERGY);
        assert_eq!(expr_to_dv(&parse_unit("1").unwrap(), &si).unwrap(), DimensionVector::ZERO);
        assert_eq!(expr_to_dv(&parse_unit("m / s").unwrap(), &si).unwrap(), VELOCITY);
        assert_eq!(expr_to_dv(&parse_unit("m/s").unwrap(), &si).unwrap(), VELOCITY);
        assert_eq!(expr_to_dv(&parse_unit("kg/(m*(s**2))").unwrap(), &si).unwrap(), PRESSURE);
        assert_eq!(expr_to_dv(&parse_unit("kg / m * (s**2)").unwrap(), &si).unwrap(), PRESSURE);
        assert_eq!(expr_to_dv(&parse_unit("s**-1").unwrap(), &si).unwrap(), FREQUENCY);
        assert_eq!(expr_to_dv(&parse_unit("(m / s)**2").unwrap(), &si).unwrap(), VELOCITY.pow(2));
        assert_eq!(expr_to_dv(&parse_unit("m * m / m").unwrap(), &si).unwrap(), LENGTH);
    }

    #[test]
    fn syntax_errors_have_offsets() {
        let err = |s: &str| match parse_unit(s) {
            Err(Error::Syntax { offset, .. }) => offset,
            other => panic!("{s}: {other:?}"),
        };
        assert_eq!(err(""), 0);
        assert_eq!(err("   "), 0);
        assert_eq!(err("m /"), 3);
        assert_eq!(err("m / s / kg"), 6);
        assert_eq!(err("(m * s"), 6);
        assert_eq!(err("m ** x"), 5);
        assert_eq!(err("m ** 0"), 5);
        assert_eq!(err("m + s"), 2);
        assert_eq!(err("m s"), 2);
        assert_eq!(err("2"), 0);
    }

    #[test]
    fn unknown_symbols_list_known_ones() {
        let e = parse_unit("kg * ft").unwrap();
        match expr_to_dv(&e, &DimensionNames::si()) {
            Err(Error::UnknownSymbol { symbol, offset, known }) => {
                assert_eq!(symbol, "ft");
                assert_eq!(offset, 5);
                assert_eq!(known, ["m", "kg", "s", "A", "K", "mol", "cd"]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn names_validation() {
        assert!(DimensionNames::new(|_| "x".to_string()).is_err());
        assert!(DimensionNames::new(|d| if d == Dimension::Mass { String::new() } else { d.si_unit().into() }).is_err());
        assert!(DimensionNames::new(|d| d.name().to_string()).is_ok());
    }

    #[test]
    fn display_reparses() {
        for s in ["kg * (m**2) / (s**2)", "(m / s)**2", "kg / (m * (s**2))", "1 / s", "a * (b / c)"] {
            let e = parse_unit(s).unwrap();
            assert_eq!(parse_unit(&e.to_string()).unwrap().terms().len(), e.terms().len(), "{s}");
        }
        assert_eq!(parse_unit("kg*(m**2)/(s**2)").unwrap().to_string(), "kg * (m**2) / (s**2)");
    }

    fn any_dv() -> impl Strategy<Value = DimensionVector> {
        prop::array::uniform7(-4i32..=4).prop_map(DimensionVector::from_exponents)
    }

    proptest! {
        #[test]
        fn view_round_trips(dv in any_dv()) {
            for names in [DimensionNames::si(), DimensionNames::bis()] {
                let text = dim_view(&names, &dv);
                let parsed = parse_unit(&text).unwrap();
                prop_assert_eq!(expr_to_dv(&parsed, &names).unwrap(), dv);
            }
        }

        #[test]
        fn view_is_injective(a in any_dv(), b in any_dv()) {
            let names = DimensionNames::si();
            prop_assert_eq!(dim_view(&names, &a) == dim_view(&names, &b), a == b);
        }
    }
}
