use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::series::Variable;

/// Expression tree. Integer literals are non-negative; signs come from
/// `Neg` or `Sub`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExprNode {
    Constant(BigInt),
    Variable(Variable),
    Neg(Box<ExprNode>),
    Add(Box<ExprNode>, Box<ExprNode>),
    Sub(Box<ExprNode>, Box<ExprNode>),
    Mul(Box<ExprNode>, Box<ExprNode>),
    Div(Box<ExprNode>, Box<ExprNode>),
    /// Integer exponent literal; negative exponents mean reciprocals.
    Pow(Box<ExprNode>, i64),
    Call {
        name: String,
        args: Vec<i64>,
    },
    /// `O(x^k)`: everything from degree `k` on is unknown.
    BigO(Variable, i64),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("syntax error at offset {offset}: expected {expected}, found {found}")]
pub struct ParseError {
    pub offset: usize,
    pub expected: String,
    pub found: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::Int(n) => write!(f, "'{n}'"),
            Token::Ident(s) => write!(f, "'{s}'"),
            Token::Sym(c) => write!(f, "'{c}'"),
            Token::End => write!(f, "end of input"),
        }
    }
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, ParseError> {
    let bytes = text.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n = text[start..i].parse().expect("ascii digits");
            tokens.push((start, Token::Int(n)));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            tokens.push((start, Token::Ident(text[start..i].to_string())));
        } else if "+-*/^(),".contains(c) {
            tokens.push((i, Token::Sym(c)));
            i += 1;
        } else {
            let found = text[i..].chars().next().unwrap_or(c);
            return Err(ParseError {
                offset: i,
                expected: "an expression".into(),
                found: format!("'{found}'"),
            });
        }
    }
    tokens.push((text.len(), Token::End));
    Ok(tokens)
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.tokens[self.pos].1
    }

    fn offset(&self) -> usize {
        self.tokens[self.pos].0
    }

    fn bump(&mut self) -> Token {
        let t = self.tokens[self.pos].1.clone();
        if self.pos + 1 < self.tokens.len() {
            self.pos += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> ParseError {
        ParseError {
            offset: self.offset(),
            expected: expected.to_string(),
            found: self.peek().to_string(),
        }
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Token::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("'{c}'")))
        }
    }

    fn expr(&mut self) -> Result<ExprNode, ParseError> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = ExprNode::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = ExprNode::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<ExprNode, ParseError> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('*') {
                lhs = ExprNode::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('/') {
                lhs = ExprNode::Div(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<ExprNode, ParseError> {
        if self.eat('-') {
            Ok(ExprNode::Neg(Box::new(self.unary()?)))
        } else {
            self.power()
        }
    }

    fn power(&mut self) -> Result<ExprNode, ParseError> {
        let mut base = self.primary()?;
        while self.eat('^') {
            base = ExprNode::Pow(Box::new(base), self.signed_int()?);
        }
        Ok(base)
    }

    fn signed_int(&mut self) -> Result<i64, ParseError> {
        let negative = self.eat('-');
        let offset = self.offset();
        match self.peek() {
            Token::Int(n) => {
                let value: i64 = n.try_into().map_err(|_| ParseError {
                    offset,
                    expected: "an integer that fits in 64 bits".into(),
                    found: format!("'{n}'"),
                })?;
                self.bump();
                Ok(if negative { -value } else { value })
            }
            _ => Err(self.error("an integer literal")),
        }
    }

    fn primary(&mut self) -> Result<ExprNode, ParseError> {
        match self.peek().clone() {
            Token::Int(n) => {
                self.bump();
                Ok(ExprNode::Constant(n))
            }
            Token::Sym('(') => {
                self.bump();
                let inner = self.expr()?;
                self.expect(')')?;
                Ok(inner)
            }
            Token::Ident(name) => {
                let mut chars = name.chars();
                if let (Some(c), None) = (chars.next(), chars.next()) {
                    if let Some(var) = Variable::from_char(c) {
                        self.bump();
                        return Ok(ExprNode::Variable(var));
                    }
                }
                self.bump();
                if *self.peek() != Token::Sym('(') {
                    self.pos -= 1;
                    return Err(self.error("the variable x or y, or a function call"));
                }
                self.bump();
                if name == "O" {
                    return self.big_o();
                }
                let mut args = Vec::new();
                if !self.eat(')') {
                    loop {
                        args.push(self.signed_int()?);
                        if self.eat(')') {
                            break;
                        }
                        self.expect(',')?;
                    }
                }
                Ok(ExprNode::Call { name, args })
            }
            _ => Err(self.error("an expression")),
        }
    }

    /// After `O(`: either `1)` or `var)` or `var^k)`.
    fn big_o(&mut self) -> Result<ExprNode, ParseError> {
        let node = match self.peek().clone() {
            Token::Int(n) if n == BigInt::from(1) => {
                self.bump();
                ExprNode::BigO(Variable::default(), 0)
            }
            Token::Ident(name) if name.len() == 1 => {
                let var = Variable::from_char(name.chars().next().unwrap_or(' '))
                    .ok_or_else(|| self.error("the variable x or y"))?;
                self.bump();
                let k = if self.eat('^') { self.signed_int()? } else { 1 };
                ExprNode::BigO(var, k)
            }
            _ => return Err(self.error("'1' or a power of the variable")),
        };
        self.expect(')')?;
        Ok(node)
    }
}

pub fn parse(text: &str) -> Result<ExprNode, ParseError> {
    let mut parser = Parser {
        tokens: tokenize(text)?,
        pos: 0,
    };
    let e = parser.expr()?;
    if *parser.peek() != Token::End {
        return Err(parser.error("an operator or end of input"));
    }
    Ok(e)
}

/// Fully parenthesised rendering; parsing it gives back the same tree.
impl fmt::Display for ExprNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprNode::Constant(n) => write!(f, "{n}"),
            ExprNode::Variable(v) => write!(f, "{v}"),
            ExprNode::Neg(e) => write!(f, "(-{e})"),
            ExprNode::Add(a, b) => write!(f, "({a} + {b})"),
            ExprNode::Sub(a, b) => write!(f, "({a} - {b})"),
            ExprNode::Mul(a, b) => write!(f, "({a} * {b})"),
            ExprNode::Div(a, b) => write!(f, "({a} / {b})"),
            ExprNode::Pow(a, k) => write!(f, "({a}^{k})"),
            ExprNode::Call { name, args } => {
                let args: Vec<String> = args.iter().map(i64::to_string).collect();
                write!(f, "{name}({})", args.join(", "))
            }
            ExprNode::BigO(_, 0) => write!(f, "O(1)"),
            ExprNode::BigO(v, k) => write!(f, "O({v}^{k})"),
        }
    }
}
