//! CNF formulas with clauses of width 1 to 3, and a DIMACS reader.

use std::fmt;

/// A literal: a 1-based variable index, possibly negated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Literal {
    var: usize,
    negated: bool,
}

impl Literal {
    pub fn positive(var: usize) -> Self {
        Literal {
            var,
            negated: false,
        }
    }

    pub fn negative(var: usize) -> Self {
        Literal { var, negated: true }
    }

    /// From DIMACS convention: `3` is x3, `-3` is ¬x3. Zero is a terminator,
    /// not a literal.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        if lit == 0 {
            return None;
        }
        Some(Literal {
            var: lit.unsigned_abs() as usize,
            negated: lit < 0,
        })
    }

    pub fn var(&self) -> usize {
        self.var
    }

    pub fn negated(&self) -> bool {
        self.negated
    }

    /// Truth value under an assignment given as a bitmask (bit `var-1` is
    /// the value of the variable).
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        let value = (assignment >> (self.var - 1)) & 1 == 1;
        value != self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "-{}", self.var)
        } else {
            write!(f, "{}", self.var)
        }
    }
}

pub type Clause = Vec<Literal>;

pub const MAX_CLAUSE_WIDTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CnfError {
    #[error("a formula needs at least one variable")]
    ZeroVariables,
    #[error("variable {var} is out of range 1..={num_vars}")]
    VariableOutOfRange { var: usize, num_vars: usize },
    #[error("clause {index} is empty")]
    EmptyClause { index: usize },
    #[error("clause {index} has width {width}; at most {MAX_CLAUSE_WIDTH} literals are supported")]
    ClauseTooWide { index: usize, width: usize },
}

/// A CNF formula: a positive variable count and clauses of 1..=3 literals.
/// Duplicate literals and tautological clauses are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Clause>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Clause>) -> Result<Self, CnfError> {
        if num_vars == 0 {
            return Err(CnfError::ZeroVariables);
        }
        for (index, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(CnfError::EmptyClause { index });
            }
            if clause.len() > MAX_CLAUSE_WIDTH {
                return Err(CnfError::ClauseTooWide {
                    index,
                    width: clause.len(),
                });
            }
            for lit in clause {
                if lit.var == 0 || lit.var > num_vars {
                    return Err(CnfError::VariableOutOfRange {
                        var: lit.var,
                        num_vars,
                    });
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    /// Convenience constructor from DIMACS-style signed integers.
    pub fn from_ints(num_vars: usize, clauses: &[&[i64]]) -> Result<Self, CnfError> {
        let clauses = clauses
            .iter()
            .map(|c| c.iter().filter_map(|&l| Literal::from_dimacs(l)).collect())
            .collect();
        Cnf::new(num_vars, clauses)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Clause] {
        &self.clauses
    }

    /// Whether the assignment (bit `var-1` = value of the variable) satisfies
    /// every clause.
    pub fn is_satisfied_by(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|clause| clause.iter().any(|lit| lit.satisfied_by(assignment)))
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&lit.to_string());
                out.push(' ');
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("missing 'p cnf <vars> <clauses>' header")]
    MissingHeader,
    #[error("line {line}: malformed header")]
    MalformedHeader { line: usize },
    #[error("line {line}: variable count must be positive")]
    ZeroVariables { line: usize },
    #[error("line {line}: token {token:?} is not an integer literal")]
    MalformedLiteral { line: usize, token: String },
    #[error("line {line}: literal {literal} is out of range (formula has {num_vars} variables)")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error(
        "line {line}: clause has width {width}; at most {MAX_CLAUSE_WIDTH} literals are supported"
    )]
    ClauseTooWide { line: usize, width: usize },
    #[error("unexpected end of input inside a clause")]
    UnterminatedClause,
    #[error("header declares {declared} clauses but the file contains {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
}

/// Parses DIMACS CNF text: comment lines start with `c`, the header is
/// `p cnf <vars> <clauses>`, and clauses are zero-terminated lists of signed
/// integers (which may span lines). The clause count must match the header.
pub fn parse_dimacs(text: &str) -> Result<Cnf, ParseError> {
    let mut num_vars: Option<usize> = None;
    let mut declared_clauses = 0usize;
    let mut header_seen = false;
    let mut clauses: Vec<Clause> = Vec::new();
    let mut current: Clause = Vec::new();
    let mut current_width = 0usize;
    // (line of first overflowing literal, running width); the error is raised
    // once the clause closes so the true width is known
    let mut width_overflow: Option<(usize, usize)> = None;

    for (idx, raw_line) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw_line.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if !header_seen {
            let tokens: Vec<&str> = trimmed.split_whitespace().collect();
            if tokens.len() != 4 || tokens[0] != "p" || tokens[1] != "cnf" {
                return Err(ParseError::MalformedHeader { line });
            }
            let vars: usize = tokens[2]
                .parse()
                .map_err(|_| ParseError::MalformedHeader { line })?;
            declared_clauses = tokens[3]
                .parse()
                .map_err(|_| ParseError::MalformedHeader { line })?;
            if vars == 0 {
                return Err(ParseError::ZeroVariables { line });
            }
            num_vars = Some(vars);
            header_seen = true;
            continue;
        }
        let vars = num_vars.expect("header seen");
        for token in trimmed.split_whitespace() {
            let value: i64 = token.parse().map_err(|_| ParseError::MalformedLiteral {
                line,
                token: token.to_string(),
            })?;
            if value == 0 {
                if let Some((overflow_line, width)) = width_overflow.take() {
                    return Err(ParseError::ClauseTooWide {
                        line: overflow_line,
                        width,
                    });
                }
                if current.is_empty() {
                    return Err(ParseError::EmptyClause { line });
                }
                clauses.push(std::mem::take(&mut current));
                current_width = 0;
                continue;
            }
            let var = value.unsigned_abs() as usize;
            if var > vars {
                return Err(ParseError::LiteralOutOfRange {
                    line,
                    literal: value,
                    num_vars: vars,
                });
            }
            current_width += 1;
            if current_width > MAX_CLAUSE_WIDTH {
                let entry = width_overflow.get_or_insert((line, current_width));
                entry.1 = current_width;
                continue;
            }
            current.push(Literal::from_dimacs(value).expect("nonzero"));
        }
    }

    if !header_seen {
        return Err(ParseError::MissingHeader);
    }
    if let Some((line, width)) = width_overflow {
        return Err(ParseError::ClauseTooWide { line, width });
    }
    if !current.is_empty() {
        return Err(ParseError::UnterminatedClause);
    }
    if clauses.len() != declared_clauses {
        return Err(ParseError::ClauseCountMismatch {
            declared: declared_clauses,
            found: clauses.len(),
        });
    }
    let vars = num_vars.expect("header seen");
    Ok(Cnf::new(vars, clauses).expect("parser enforces the construction invariants"))
}
