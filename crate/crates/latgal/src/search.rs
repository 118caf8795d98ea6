//! Exhaustive enumeration of small bounded lattices and of all adjoint
//! pairs between them, boolean property queries with witness search, and
//! the sweep driver that checks every verified statement over every
//! enumerated instance.
//!
//! Enumeration is deterministic: two runs produce identical streams, and
//! lattices are deduplicated up to isomorphism via
//! [`Lattice::canonical_form`]. Adjoint pairs are enumerated upper-adjoint
//! first (a candidate table for `β` determines `α(a)` as the least `b` with
//! `a ≤ β(b)` when it exists); every emitted pair is re-verified by the
//! exhaustive construction check.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::essentiality::{
    self, closed_elements, closures_of, essential_via_cyclic, is_essential_in, is_extending,
    is_join_independent, is_uc, is_uniform, join_independent_incremental, unique_closure,
    uniform_dimension,
};
use crate::galois::{ClauseStatus, CorrespondenceMode, GaloisConnection, GaloisError};
use crate::lattice::{Elem, Lattice};
use crate::textio::{print_lattice, print_map, MapFile};

/// Smallest enumerable lattice size.
pub const MIN_ENUM_SIZE: usize = 2;
/// Largest enumerable lattice size (counts explode beyond this).
pub const MAX_ENUM_SIZE: usize = 8;
/// Largest allowed `|A|·|B|` when enumerating adjoint pairs.
pub const MAX_PAIR_PRODUCT: usize = 100;
/// Largest per-lattice size for connection witness search.
pub const MAX_CONNECTION_SEARCH_SIZE: usize = 7;
/// Largest per-lattice size for the theorem sweep.
pub const MAX_SUITE_SIZE: usize = 6;

/// Errors raised by enumeration and query parsing.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    /// A requested size is outside the supported range.
    #[error("size {n} is outside the supported range {lo}..={hi}")]
    BoundExceeded { n: usize, lo: usize, hi: usize },
    /// A lattice pair is too large to enumerate connections over.
    #[error("lattice pair too large: |A|·|B| = {product} exceeds {max}")]
    BudgetExceeded { product: usize, max: usize },
    /// A property query failed to parse; `at` is a character offset.
    #[error("query error at offset {at}: {message}")]
    BadQuery { at: usize, message: String },
}

/// All bounded lattices on `n` elements up to isomorphism, in a
/// deterministic order.
///
/// Candidates are generated as naturally labeled orders (the strict order
/// only ever points from a smaller to a larger index) on the `n − 2` middle
/// elements, extended by a bottom and a top; non-lattices are discarded and
/// isomorphic duplicates removed by canonical form. Every isomorphism class
/// admits a natural labeling (take any linear extension), so the stream is
/// complete.
pub fn enumerate_lattices(n: usize) -> Result<Vec<Lattice>, SearchError> {
    if !(MIN_ENUM_SIZE..=MAX_ENUM_SIZE).contains(&n) {
        return Err(SearchError::BoundExceeded { n, lo: MIN_ENUM_SIZE, hi: MAX_ENUM_SIZE });
    }
    let m = n - 2;
    let pairs: Vec<(usize, usize)> =
        (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j))).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut rel = vec![false; m * m];
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                rel[i * m + j] = true;
            }
        }
        let transitive = (0..m).all(|i| {
            (i + 1..m).all(|j| {
                !rel[i * m + j] || (j + 1..m).all(|k| !rel[j * m + k] || rel[i * m + k])
            })
        });
        if !transitive {
            continue;
        }
        let mut leq = vec![false; n * n];
        for x in 0..n {
            leq[x * n + x] = true;
            leq[x] = true; // bottom row: 0 ≤ x
            leq[x * n + (n - 1)] = true; // top column: x ≤ top
        }
        for i in 0..m {
            for j in 0..m {
                if rel[i * m + j] {
                    leq[(i + 1) * n + (j + 1)] = true;
                }
            }
        }
        let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
        let Ok(l) = Lattice::from_leq("candidate", labels, leq) else {
            continue;
        };
        if seen.insert(l.canonical_form()) {
            let name = format!("n{}_{}", n, out.len());
            out.push(l.with_name(&name));
        }
    }
    Ok(out)
}

/// All Galois connections `A → B` up to map equality, in a deterministic
/// order (lexicographic in the upper adjoint's table).
///
/// Candidate tables for `β: B → A` are all monotone top-preserving maps;
/// for each, `α(a)` is derived as the least element of `{b : a ≤ β(b)}`
/// when that set has a least element, and the resulting pair is kept only
/// if the full construction check succeeds.
pub fn enumerate_connections(
    a: &Lattice,
    b: &Lattice,
) -> Result<Vec<GaloisConnection>, SearchError> {
    let product = a.n() * b.n();
    if product > MAX_PAIR_PRODUCT {
        return Err(SearchError::BudgetExceeded { product, max: MAX_PAIR_PRODUCT });
    }
    let mut out = Vec::new();
    let mut table = vec![0 as Elem; b.n()];
    enumerate_beta_tables(a, b, &mut table, 0, &mut |beta| {
        if let Some(alpha) = derive_alpha(a, b, beta) {
            let name = format!("conn({},{})#{}", a.name(), b.name(), out.len());
            if let Ok(conn) =
                GaloisConnection::new(&name, a.clone(), b.clone(), alpha, beta.to_vec())
            {
                out.push(conn);
            }
        }
    });
    Ok(out)
}

/// Depth-first enumeration of monotone top-preserving tables `B → A`,
/// assigning positions in index order and pruning on monotonicity.
fn enumerate_beta_tables(
    a: &Lattice,
    b: &Lattice,
    table: &mut Vec<Elem>,
    pos: usize,
    emit: &mut impl FnMut(&[Elem]),
) {
    if pos == b.n() {
        emit(table);
        return;
    }
    for value in a.elements() {
        if pos == b.top() && value != a.top() {
            continue;
        }
        let consistent = (0..pos).all(|prev| {
            (!b.leq(prev, pos) || a.leq(table[prev], value))
                && (!b.leq(pos, prev) || a.leq(value, table[prev]))
        });
        if consistent {
            table[pos] = value;
            enumerate_beta_tables(a, b, table, pos + 1, emit);
        }
    }
}

/// The least element of `{b : a ≤ β(b)}` for every `a`, when it exists.
fn derive_alpha(a: &Lattice, b: &Lattice, beta: &[Elem]) -> Option<Vec<Elem>> {
    a.elements()
        .map(|x| {
            let lower = b.meet_all(b.elements().filter(|&y| a.leq(x, beta[y])));
            a.leq(x, beta[lower]).then_some(lower)
        })
        .collect()
}

/// What a property query quantifies over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryTarget {
    /// A single lattice.
    Lattice,
    /// A Galois connection (lattice predicates take an `a.`/`b.` prefix).
    Connection,
}

/// Which side of a connection a lattice predicate applies to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Domain,
    Codomain,
}

/// A structural predicate on one lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LatticePred {
    Modular,
    Distributive,
    /// Every element has a unique closure.
    UniqueClosure,
    Uniform,
    /// Modular and every closed element complemented; evaluates to false on
    /// non-modular lattices.
    Extending,
    CyclicallyGenerated,
}

impl LatticePred {
    fn name(self) -> &'static str {
        match self {
            LatticePred::Modular => "modular",
            LatticePred::Distributive => "distributive",
            LatticePred::UniqueClosure => "uc",
            LatticePred::Uniform => "uniform",
            LatticePred::Extending => "extending",
            LatticePred::CyclicallyGenerated => "cyclically_generated",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "modular" => LatticePred::Modular,
            "distributive" => LatticePred::Distributive,
            "uc" => LatticePred::UniqueClosure,
            "uniform" => LatticePred::Uniform,
            "extending" => LatticePred::Extending,
            "cyclically_generated" => LatticePred::CyclicallyGenerated,
            _ => return None,
        })
    }

    fn eval(self, l: &Lattice) -> bool {
        match self {
            LatticePred::Modular => l.is_modular(),
            LatticePred::Distributive => l.is_distributive(),
            LatticePred::UniqueClosure => is_uc(l),
            LatticePred::Uniform => is_uniform(l),
            LatticePred::Extending => {
                l.is_modular() && is_extending(l).expect("modularity was checked")
            }
            LatticePred::CyclicallyGenerated => l.is_cyclically_generated(),
        }
    }
}

/// A classification flag of a connection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConnectionFlag {
    Essential,
    CyclicallyEssential,
    Retractable,
    UniqueClosure,
    Coessential,
    Coretractable,
    UniqueCoclosure,
    BetaAdditive,
    AlphaTop,
    BetaBottom,
}

impl ConnectionFlag {
    fn name(self) -> &'static str {
        match self {
            ConnectionFlag::Essential => "essential",
            ConnectionFlag::CyclicallyEssential => "cyclically_essential",
            ConnectionFlag::Retractable => "retractable",
            ConnectionFlag::UniqueClosure => "uc",
            ConnectionFlag::Coessential => "coessential",
            ConnectionFlag::Coretractable => "coretractable",
            ConnectionFlag::UniqueCoclosure => "ucc",
            ConnectionFlag::BetaAdditive => "beta_additive",
            ConnectionFlag::AlphaTop => "alpha_top",
            ConnectionFlag::BetaBottom => "beta_bottom",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "essential" => ConnectionFlag::Essential,
            "cyclically_essential" => ConnectionFlag::CyclicallyEssential,
            "retractable" => ConnectionFlag::Retractable,
            "uc" => ConnectionFlag::UniqueClosure,
            "coessential" => ConnectionFlag::Coessential,
            "coretractable" => ConnectionFlag::Coretractable,
            "ucc" => ConnectionFlag::UniqueCoclosure,
            "beta_additive" => ConnectionFlag::BetaAdditive,
            "alpha_top" => ConnectionFlag::AlphaTop,
            "beta_bottom" => ConnectionFlag::BetaBottom,
            _ => return None,
        })
    }

    fn eval(self, g: &GaloisConnection) -> bool {
        match self {
            ConnectionFlag::Essential => g.is_essential(),
            ConnectionFlag::CyclicallyEssential => g.is_cyclically_essential(),
            ConnectionFlag::Retractable => g.is_retractable(),
            ConnectionFlag::UniqueClosure => g.is_uc_connection(),
            ConnectionFlag::Coessential => g.is_coessential(),
            ConnectionFlag::Coretractable => g.is_coretractable(),
            ConnectionFlag::UniqueCoclosure => g.is_ucc(),
            ConnectionFlag::BetaAdditive => g.is_beta_additive(),
            ConnectionFlag::AlphaTop => g.alpha_preserves_top(),
            ConnectionFlag::BetaBottom => g.beta_preserves_bottom(),
        }
    }
}

/// An atomic query predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QueryAtom {
    /// A connection flag (connection queries only).
    Flag(ConnectionFlag),
    /// A lattice predicate; the side is present exactly in connection
    /// queries.
    Lattice(Option<Side>, LatticePred),
}

impl fmt::Display for QueryAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryAtom::Flag(flag) => write!(f, "{}", flag.name()),
            QueryAtom::Lattice(None, p) => write!(f, "{}", p.name()),
            QueryAtom::Lattice(Some(Side::Domain), p) => write!(f, "a.{}", p.name()),
            QueryAtom::Lattice(Some(Side::Codomain), p) => write!(f, "b.{}", p.name()),
        }
    }
}

/// A boolean combination of atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryExpr {
    Atom(QueryAtom),
    Not(Box<QueryExpr>),
    And(Box<QueryExpr>, Box<QueryExpr>),
    Or(Box<QueryExpr>, Box<QueryExpr>),
}

impl fmt::Display for QueryExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryExpr::Atom(a) => write!(f, "{a}"),
            QueryExpr::Not(e) => match **e {
                QueryExpr::Atom(_) | QueryExpr::Not(_) => write!(f, "!{e}"),
                _ => write!(f, "!({e})"),
            },
            QueryExpr::And(l, r) => write!(f, "({l} & {r})"),
            QueryExpr::Or(l, r) => write!(f, "({l} | {r})"),
        }
    }
}

/// A parsed boolean property query over one target kind. Printing and
/// re-parsing reproduces the query exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PropertyQuery {
    target: QueryTarget,
    expr: QueryExpr,
}

impl fmt::Display for PropertyQuery {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.expr)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Ident(String),
    Not,
    And,
    Or,
    Open,
    Close,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Token)>, SearchError> {
    let mut out = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' | '\n' | '\r' => i += 1,
            '!' => {
                out.push((i, Token::Not));
                i += 1;
            }
            '&' => {
                out.push((i, Token::And));
                i += if bytes.get(i + 1) == Some(&b'&') { 2 } else { 1 };
            }
            '|' => {
                out.push((i, Token::Or));
                i += if bytes.get(i + 1) == Some(&b'|') { 2 } else { 1 };
            }
            '(' => {
                out.push((i, Token::Open));
                i += 1;
            }
            ')' => {
                out.push((i, Token::Close));
                i += 1;
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let start = i;
                while i < bytes.len() {
                    let c = bytes[i] as char;
                    if c.is_ascii_alphanumeric() || c == '_' || c == '.' {
                        i += 1;
                    } else {
                        break;
                    }
                }
                let word = &text[start..i];
                out.push((
                    start,
                    match word {
                        "not" => Token::Not,
                        "and" => Token::And,
                        "or" => Token::Or,
                        _ => Token::Ident(word.to_owned()),
                    },
                ));
            }
            other => {
                return Err(SearchError::BadQuery {
                    at: i,
                    message: format!("unexpected character `{other}`"),
                })
            }
        }
    }
    Ok(out)
}

struct Parser<'a> {
    tokens: &'a [(usize, Token)],
    pos: usize,
    target: QueryTarget,
    end: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn offset(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(at, _)| *at)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.tokens.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn err(&self, message: impl Into<String>) -> SearchError {
        SearchError::BadQuery { at: self.offset(), message: message.into() }
    }

    fn or_expr(&mut self) -> Result<QueryExpr, SearchError> {
        let mut lhs = self.and_expr()?;
        while self.peek() == Some(&Token::Or) {
            self.bump();
            let rhs = self.and_expr()?;
            lhs = QueryExpr::Or(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn and_expr(&mut self) -> Result<QueryExpr, SearchError> {
        let mut lhs = self.not_expr()?;
        while self.peek() == Some(&Token::And) {
            self.bump();
            let rhs = self.not_expr()?;
            lhs = QueryExpr::And(Box::new(lhs), Box::new(rhs));
        }
        Ok(lhs)
    }

    fn not_expr(&mut self) -> Result<QueryExpr, SearchError> {
        match self.peek() {
            Some(Token::Not) => {
                self.bump();
                Ok(QueryExpr::Not(Box::new(self.not_expr()?)))
            }
            Some(Token::Open) => {
                self.bump();
                let inner = self.or_expr()?;
                if self.peek() == Some(&Token::Close) {
                    self.bump();
                    Ok(inner)
                } else {
                    Err(self.err("expected `)`"))
                }
            }
            Some(Token::Ident(_)) => {
                let at = self.offset();
                let Some(Token::Ident(name)) = self.bump() else { unreachable!() };
                let atom = self
                    .atom(&name)
                    .map_err(|message| SearchError::BadQuery { at, message })?;
                Ok(QueryExpr::Atom(atom))
            }
            _ => Err(self.err("expected a predicate, `!`, or `(`")),
        }
    }

    fn atom(&self, name: &str) -> Result<QueryAtom, String> {
        let sided = name
            .strip_prefix("a.")
            .map(|rest| (Side::Domain, rest))
            .or_else(|| name.strip_prefix("b.").map(|rest| (Side::Codomain, rest)));
        match (self.target, sided) {
            (QueryTarget::Lattice, Some(_)) => {
                Err(format!("`{name}`: side prefixes only apply to connection queries"))
            }
            (QueryTarget::Connection, Some((side, rest))) => LatticePred::from_name(rest)
                .map(|p| QueryAtom::Lattice(Some(side), p))
                .ok_or_else(|| format!("unknown lattice predicate `{rest}`")),
            (QueryTarget::Lattice, None) => LatticePred::from_name(name)
                .map(|p| QueryAtom::Lattice(None, p))
                .ok_or_else(|| format!("unknown lattice predicate `{name}`")),
            (QueryTarget::Connection, None) => {
                ConnectionFlag::from_name(name).map(QueryAtom::Flag).ok_or_else(|| {
                    if LatticePred::from_name(name).is_some() {
                        format!("lattice predicate `{name}` needs an `a.` or `b.` prefix here")
                    } else {
                        format!("unknown connection property `{name}`")
                    }
                })
            }
        }
    }
}

impl PropertyQuery {
    /// Parses a boolean query. Operators: `!`/`not`, `&`/`&&`/`and`,
    /// `|`/`||`/`or`, parentheses; `!` binds tightest, then `&`, then `|`.
    pub fn parse(text: &str, target: QueryTarget) -> Result<Self, SearchError> {
        let tokens = tokenize(text)?;
        let mut parser = Parser { tokens: &tokens, pos: 0, target, end: text.len() };
        let expr = parser.or_expr()?;
        if parser.pos != tokens.len() {
            return Err(parser.err("trailing input after the query"));
        }
        Ok(PropertyQuery { target, expr })
    }

    /// The target kind this query quantifies over.
    pub fn target(&self) -> QueryTarget {
        self.target
    }

    /// The parsed expression.
    pub fn expr(&self) -> &QueryExpr {
        &self.expr
    }

    /// Distinct atoms in first-occurrence order.
    pub fn atoms(&self) -> Vec<QueryAtom> {
        fn walk(e: &QueryExpr, out: &mut Vec<QueryAtom>) {
            match e {
                QueryExpr::Atom(a) => {
                    if !out.contains(a) {
                        out.push(*a);
                    }
                }
                QueryExpr::Not(e) => walk(e, out),
                QueryExpr::And(l, r) | QueryExpr::Or(l, r) => {
                    walk(l, out);
                    walk(r, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(&self.expr, &mut out);
        out
    }

    /// Evaluates a lattice query.
    pub fn eval_lattice(&self, l: &Lattice) -> bool {
        assert_eq!(self.target, QueryTarget::Lattice, "query targets a connection");
        eval_expr(&self.expr, &mut |atom| eval_atom_lattice(atom, l))
    }

    /// Evaluates a connection query.
    pub fn eval_connection(&self, g: &GaloisConnection) -> bool {
        assert_eq!(self.target, QueryTarget::Connection, "query targets a lattice");
        eval_expr(&self.expr, &mut |atom| eval_atom_connection(atom, g))
    }
}

fn eval_expr(e: &QueryExpr, atom: &mut impl FnMut(QueryAtom) -> bool) -> bool {
    match e {
        QueryExpr::Atom(a) => atom(*a),
        QueryExpr::Not(e) => !eval_expr(e, atom),
        QueryExpr::And(l, r) => eval_expr(l, atom) && eval_expr(r, atom),
        QueryExpr::Or(l, r) => eval_expr(l, atom) || eval_expr(r, atom),
    }
}

fn eval_atom_lattice(atom: QueryAtom, l: &Lattice) -> bool {
    match atom {
        QueryAtom::Lattice(None, p) => p.eval(l),
        other => unreachable!("connection atom `{other}` in a lattice query"),
    }
}

fn eval_atom_connection(atom: QueryAtom, g: &GaloisConnection) -> bool {
    match atom {
        QueryAtom::Flag(flag) => flag.eval(g),
        QueryAtom::Lattice(Some(Side::Domain), p) => p.eval(g.a()),
        QueryAtom::Lattice(Some(Side::Codomain), p) => p.eval(g.b()),
        QueryAtom::Lattice(None, _) => unreachable!("unsided lattice atom in connection query"),
    }
}

/// A found query witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WitnessInstance {
    Lattice(Lattice),
    Connection(Box<GaloisConnection>),
}

/// A witness together with the per-atom evaluation that certifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FoundWitness {
    pub instance: WitnessInstance,
    /// Each distinct atom of the query with its value on the instance.
    pub certificate: Vec<(String, bool)>,
}

/// Result of a witness search: the smallest satisfying instance, or the
/// exhausted bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessSearch {
    pub witness: Option<FoundWitness>,
    /// The per-lattice size bound that was fully searched.
    pub searched_max_size: usize,
}

/// Finds the smallest instance satisfying `query`: lattices ordered by
/// (size, enumeration index); connections by (size sum, domain size,
/// domain index, codomain index, enumeration index).
pub fn find_witness(
    query: &PropertyQuery,
    max_n: usize,
) -> Result<WitnessSearch, SearchError> {
    match query.target() {
        QueryTarget::Lattice => {
            if !(MIN_ENUM_SIZE..=MAX_ENUM_SIZE).contains(&max_n) {
                return Err(SearchError::BoundExceeded {
                    n: max_n,
                    lo: MIN_ENUM_SIZE,
                    hi: MAX_ENUM_SIZE,
                });
            }
            for n in MIN_ENUM_SIZE..=max_n {
                for l in enumerate_lattices(n)? {
                    if query.eval_lattice(&l) {
                        let certificate = query
                            .atoms()
                            .iter()
                            .map(|&a| (a.to_string(), eval_atom_lattice(a, &l)))
                            .collect();
                        return Ok(WitnessSearch {
                            witness: Some(FoundWitness {
                                instance: WitnessInstance::Lattice(l),
                                certificate,
                            }),
                            searched_max_size: max_n,
                        });
                    }
                }
            }
            Ok(WitnessSearch { witness: None, searched_max_size: max_n })
        }
        QueryTarget::Connection => {
            if !(MIN_ENUM_SIZE..=MAX_CONNECTION_SEARCH_SIZE).contains(&max_n) {
                return Err(SearchError::BoundExceeded {
                    n: max_n,
                    lo: MIN_ENUM_SIZE,
                    hi: MAX_CONNECTION_SEARCH_SIZE,
                });
            }
            let by_size: Vec<Vec<Lattice>> = (MIN_ENUM_SIZE..=max_n)
                .map(enumerate_lattices)
                .collect::<Result<_, _>>()?;
            let lattices_of = |n: usize| &by_size[n - MIN_ENUM_SIZE];
            for total in 2 * MIN_ENUM_SIZE..=2 * max_n {
                for na in MIN_ENUM_SIZE..=max_n {
                    let Some(nb) = total.checked_sub(na) else { continue };
                    if !(MIN_ENUM_SIZE..=max_n).contains(&nb) {
                        continue;
                    }
                    for la in lattices_of(na) {
                        for lb in lattices_of(nb) {
                            for conn in enumerate_connections(la, lb)? {
                                if query.eval_connection(&conn) {
                                    let certificate = query
                                        .atoms()
                                        .iter()
                                        .map(|&a| {
                                            (a.to_string(), eval_atom_connection(a, &conn))
                                        })
                                        .collect();
                                    return Ok(WitnessSearch {
                                        witness: Some(FoundWitness {
                                            instance: WitnessInstance::Connection(Box::new(conn)),
                                            certificate,
                                        }),
                                        searched_max_size: max_n,
                                    });
                                }
                            }
                        }
                    }
                }
            }
            Ok(WitnessSearch { witness: None, searched_max_size: max_n })
        }
    }
}

/// A single conclusion failure found by the sweep, with a reproducer in the
/// text formats.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteFailure {
    pub description: String,
    pub reproducer: String,
}

/// Outcome of one swept clause.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseOutcome {
    pub name: String,
    /// Number of enumerated objects on which the clause's hypotheses held
    /// (and its conclusion was therefore checked).
    pub instances: usize,
    pub failures: Vec<SuiteFailure>,
}

/// Full sweep report.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub max_size: usize,
    pub lattices_tested: usize,
    pub connections_tested: usize,
    /// Clause outcomes sorted by name.
    pub clauses: Vec<ClauseOutcome>,
}

impl SuiteReport {
    /// Total conclusion failures across all clauses.
    pub fn total_failures(&self) -> usize {
        self.clauses.iter().map(|c| c.failures.len()).sum()
    }

    /// Looks up a clause by name.
    pub fn clause(&self, name: &str) -> Option<&ClauseOutcome> {
        self.clauses.iter().find(|c| c.name == name)
    }

    /// Whether every clause was exercised at least once.
    pub fn all_clauses_exercised(&self) -> bool {
        self.clauses.iter().all(|c| c.instances > 0)
    }
}

struct Tally {
    clauses: BTreeMap<&'static str, (usize, Vec<SuiteFailure>)>,
}

impl Tally {
    fn new(names: &[&'static str]) -> Self {
        Tally { clauses: names.iter().map(|&n| (n, (0, Vec::new()))).collect() }
    }

    fn hit(&mut self, name: &'static str) {
        self.clauses.get_mut(name).expect("clause registered").0 += 1;
    }

    fn fail(&mut self, name: &'static str, description: String, reproducer: String) {
        self.clauses
            .get_mut(name)
            .expect("clause registered")
            .1
            .push(SuiteFailure { description, reproducer });
    }

    fn check(&mut self, name: &'static str, ok: bool, description: &str, reproducer: &str) {
        if !ok {
            self.fail(name, description.to_owned(), reproducer.to_owned());
        }
    }

    fn into_clauses(self) -> Vec<ClauseOutcome> {
        self.clauses
            .into_iter()
            .map(|(name, (instances, failures))| ClauseOutcome {
                name: name.to_owned(),
                instances,
                failures,
            })
            .collect()
    }
}

const LATTICE_CLAUSES: &[&str] = &[
    "essential-interval-splitting",
    "essential-meet-restriction",
    "cyclic-essentiality-criterion",
    "complements-closed-in-modular",
    "closure-existence",
    "closure-monotone-in-modular-uc",
    "uniform-dimension-witness",
    "extending-forms-agree",
    "join-independence-incremental-on-modular",
];

const CONNECTION_CLAUSES: &[&str] = &[
    "galois-fixed-point-bijection",
    "dual-definitions-agree",
    "essential-implies-cyclically-essential",
    "retractable-kernel-criterion",
    "closed-in-galois-when-essential",
    "disjointness-transport",
    "disjointness-transport-cyclic",
    "complement-transport",
    "essentiality-transport-i",
    "essentiality-transport-ii",
    "essentiality-transport-iii",
    "essentiality-transport-iii-cyclic",
    "essentiality-transport-iv",
    "essentiality-transport-iv-cyclic",
    "uniform-domain-gives-essential",
    "uniform-codomain-gives-retractable",
    "unique-closure-codomain-gives-uc",
    "additive-complement-preservation",
    "dimension-comparison",
    "dimension-equality-essential",
    "dimension-equality-cyclic",
    "closed-correspondence-general",
    "closed-correspondence-modular",
    "closed-fixed-point-equivalence",
    "extending-transfer",
    "extending-transfer-to-domain",
    "extending-transfer-to-codomain",
    "coclosed-correspondence",
];

/// A self-contained reproducer for a connection: both lattice files and both
/// map files concatenated with section markers, each section round-trippable
/// through the text parsers.
pub fn connection_reproducer(g: &GaloisConnection) -> String {
    let entries = |src: &Lattice, dst: &Lattice, table: &[Elem]| {
        table
            .iter()
            .enumerate()
            .map(|(i, &v)| (src.label(i).to_owned(), dst.label(v).to_owned()))
            .collect()
    };
    let alpha = MapFile {
        name: g.name().to_owned(),
        from_path: "a.lat".into(),
        from_lattice: g.a().name().to_owned(),
        to_path: "b.lat".into(),
        to_lattice: g.b().name().to_owned(),
        entries: entries(g.a(), g.b(), g.alpha_map().table()),
    };
    let beta = MapFile {
        name: g.name().to_owned(),
        from_path: "b.lat".into(),
        from_lattice: g.b().name().to_owned(),
        to_path: "a.lat".into(),
        to_lattice: g.a().name().to_owned(),
        entries: entries(g.b(), g.a(), g.beta_map().table()),
    };
    format!(
        "# --- a.lat\n{}# --- b.lat\n{}# --- alpha map\n{}# --- beta map\n{}",
        print_lattice(g.a()),
        print_lattice(g.b()),
        print_map(&alpha),
        print_map(&beta),
    )
}

fn sweep_lattice_clauses(t: &mut Tally, l: &Lattice) {
    let repro = print_lattice(l);
    let desc = |what: &str| format!("{} on {}", what, l.name());
    let ess = |a: Elem, c: Elem| is_essential_in(l, a, c).expect("bounds checked");

    t.hit("essential-interval-splitting");
    for a in l.elements() {
        for b in l.elements() {
            for c in l.elements() {
                if l.leq(a, b) && l.leq(b, c) {
                    let whole = ess(a, c);
                    let split = ess(a, b) && ess(b, c);
                    t.check(
                        "essential-interval-splitting",
                        whole == split,
                        &desc("splitting an essential interval changed the verdict"),
                        &repro,
                    );
                }
            }
        }
    }

    t.hit("essential-meet-restriction");
    for a in l.elements() {
        for c in l.elements() {
            if l.leq(a, c) && ess(a, c) {
                for b in l.elements() {
                    if l.leq(b, c) {
                        t.check(
                            "essential-meet-restriction",
                            ess(l.meet(a, b), b),
                            &desc("meet of an essential element stopped being essential"),
                            &repro,
                        );
                    }
                }
            }
        }
    }

    if l.is_cyclically_generated() {
        t.hit("cyclic-essentiality-criterion");
        for a in l.elements() {
            let via_cyclic =
                essential_via_cyclic(l, a).expect("lattice is cyclically generated");
            t.check(
                "cyclic-essentiality-criterion",
                via_cyclic == ess(a, l.top()),
                &desc("cyclic criterion disagrees with the definition"),
                &repro,
            );
        }
    }

    if l.is_modular() {
        t.hit("complements-closed-in-modular");
        for x in l.elements() {
            for c in l.complements_of(x) {
                t.check(
                    "complements-closed-in-modular",
                    essentiality::is_closed(l, c),
                    &desc("a complement is not closed in a modular lattice"),
                    &repro,
                );
            }
        }
    }

    t.hit("closure-existence");
    for a in l.elements() {
        t.check(
            "closure-existence",
            !closures_of(l, a).closures.is_empty(),
            &desc("an element has no closure"),
            &repro,
        );
    }

    if l.is_modular() && is_uc(l) {
        t.hit("closure-monotone-in-modular-uc");
        for a in l.elements() {
            for b in l.elements() {
                if l.leq(a, b) {
                    let ca = unique_closure(l, a).expect("unique closures exist");
                    let cb = unique_closure(l, b).expect("unique closures exist");
                    t.check(
                        "closure-monotone-in-modular-uc",
                        l.leq(ca, cb),
                        &desc("closure is not monotone on a modular unique-closure lattice"),
                        &repro,
                    );
                }
            }
        }
    }

    t.hit("uniform-dimension-witness");
    {
        let dim = uniform_dimension(l);
        assert!(l.n() <= 16, "exhaustive witness check needs a small lattice");
        let mut ok = dim.witness.len() == dim.value && is_join_independent(l, &dim.witness);
        let mut larger_exists = false;
        for mask in 0u32..(1u32 << l.n()) {
            if mask.count_ones() as usize == dim.value + 1 {
                let set: Vec<Elem> = l.elements().filter(|&e| mask >> e & 1 == 1).collect();
                if is_join_independent(l, &set) {
                    larger_exists = true;
                    break;
                }
            }
        }
        ok = ok && !larger_exists;
        t.check(
            "uniform-dimension-witness",
            ok,
            &desc("uniform dimension witness is wrong or not maximal"),
            &repro,
        );
    }

    if l.is_modular() {
        t.hit("extending-forms-agree");
        // Computes both forms and asserts their agreement internally.
        let _ = is_extending(l).expect("modularity was checked");

        t.hit("join-independence-incremental-on-modular");
        let nonzero: Vec<Elem> = l.elements().filter(|&e| e != l.bottom()).collect();
        for subset in subsets_up_to(&nonzero, 3) {
            let full = is_join_independent(l, &subset);
            for perm in permutations(&subset) {
                t.check(
                    "join-independence-incremental-on-modular",
                    join_independent_incremental(l, &perm) == full,
                    &desc("incremental and full join-independence disagree"),
                    &repro,
                );
            }
        }
    }
}

fn sweep_connection_clauses(t: &mut Tally, conn: &GaloisConnection) {
    let repro = connection_reproducer(conn);
    let desc = |what: &str| format!("{} on {}", what, conn.name());
    let (a, b) = (conn.a(), conn.b());
    // classify() cross-asserts the dual-route definitions internally.
    let report = conn.classify();
    t.hit("dual-definitions-agree");
    let (fixed_a, _fixed_b) = conn.galois_elements();
    t.hit("galois-fixed-point-bijection");

    let kernel_trivial =
        b.elements().all(|y| conn.beta(y) != a.bottom() || y == b.bottom());
    let ess_a = |x: Elem, x2: Elem| is_essential_in(a, x, x2).expect("bounds checked");
    let ess_b = |y: Elem, y2: Elem| is_essential_in(b, y, y2).expect("bounds checked");

    t.hit("essential-implies-cyclically-essential");
    t.check(
        "essential-implies-cyclically-essential",
        !report.essential.holds || report.cyclically_essential.holds,
        &desc("essential connection is not cyclically essential"),
        &repro,
    );

    t.hit("retractable-kernel-criterion");
    t.check(
        "retractable-kernel-criterion",
        (!report.retractable.holds || kernel_trivial)
            && (!report.beta_bottom || report.retractable.holds == kernel_trivial),
        &desc("kernel criterion disagrees with retractability"),
        &repro,
    );

    if report.essential.holds {
        t.hit("closed-in-galois-when-essential");
        let ok = closed_elements(a).iter().all(|c| fixed_a.contains(c))
            && report.beta_bottom;
        t.check(
            "closed-in-galois-when-essential",
            ok,
            &desc("essential connection with a closed non-fixed element or β(0) ≠ 0"),
            &repro,
        );
    }

    let disjoint_transport = |t: &mut Tally, name: &'static str, pool: &[Elem]| {
        let mut ok = true;
        for &x in pool {
            for &x2 in pool {
                if a.meet(x, x2) == a.bottom()
                    && b.meet(conn.alpha(x), conn.alpha(x2)) != b.bottom()
                {
                    ok = false;
                }
            }
        }
        t.check(name, ok, &desc("disjointness was not transported"), &repro);
    };
    if report.essential.holds && report.retractable.holds {
        t.hit("disjointness-transport");
        let all: Vec<Elem> = a.elements().collect();
        disjoint_transport(t, "disjointness-transport", &all);
    }
    if report.cyclically_essential.holds && report.retractable.holds {
        t.hit("disjointness-transport-cyclic");
        disjoint_transport(t, "disjointness-transport-cyclic", &a.cyclic_elements());
    }

    if report.essential.holds && report.retractable.holds && report.alpha_top {
        t.hit("complement-transport");
        let mut ok = true;
        for x in a.elements() {
            for c in a.complements_of(x) {
                if !b.complements_of(conn.alpha(x)).contains(&conn.alpha(c)) {
                    ok = false;
                }
            }
        }
        t.check(
            "complement-transport",
            ok,
            &desc("a complement was not carried to a complement"),
            &repro,
        );
    }

    if report.retractable.holds && report.beta_bottom {
        t.hit("essentiality-transport-i");
        let mut ok = true;
        for y in b.elements() {
            for y2 in b.elements() {
                if a.leq(conn.beta(y), conn.beta(y2))
                    && ess_a(conn.beta(y), conn.beta(y2))
                    && !ess_b(b.meet(y, y2), y2)
                {
                    ok = false;
                }
            }
        }
        t.check(
            "essentiality-transport-i",
            ok,
            &desc("essential β-images without an essential meet"),
            &repro,
        );

        t.hit("essentiality-transport-ii");
        let mut ok = true;
        for x in a.elements() {
            for &x2 in &fixed_a {
                if a.leq(x, x2) && ess_a(x, x2) && !ess_b(conn.alpha(x), conn.alpha(x2)) {
                    ok = false;
                }
            }
        }
        t.check(
            "essentiality-transport-ii",
            ok,
            &desc("α dropped essentiality below a fixed point"),
            &repro,
        );

        let transport_iii = |t: &mut Tally, name: &'static str| {
            let mut ok = true;
            for y in b.elements() {
                for y2 in b.elements() {
                    if b.leq(y, y2)
                        && ess_b(y, y2)
                        && !ess_a(conn.beta(y), conn.beta(y2))
                    {
                        ok = false;
                    }
                }
            }
            t.check(name, ok, &desc("β dropped essentiality"), &repro);
        };
        let transport_iv = |t: &mut Tally, name: &'static str, pool: &[Elem]| {
            let mut ok = true;
            for &x in pool {
                for x2 in a.elements() {
                    if b.leq(conn.alpha(x), conn.alpha(x2))
                        && ess_b(conn.alpha(x), conn.alpha(x2))
                        && !ess_a(a.meet(x, x2), x2)
                    {
                        ok = false;
                    }
                }
            }
            t.check(name, ok, &desc("essential α-images without an essential meet"), &repro);
        };
        if report.essential.holds {
            t.hit("essentiality-transport-iii");
            transport_iii(t, "essentiality-transport-iii");
            t.hit("essentiality-transport-iv");
            let all: Vec<Elem> = a.elements().collect();
            transport_iv(t, "essentiality-transport-iv", &all);
        }
        if report.cyclically_essential.holds && a.is_cyclically_generated() {
            t.hit("essentiality-transport-iii-cyclic");
            transport_iii(t, "essentiality-transport-iii-cyclic");
            t.hit("essentiality-transport-iv-cyclic");
            transport_iv(t, "essentiality-transport-iv-cyclic", &a.cyclic_elements());
        }
    }

    if is_uniform(a) && report.beta_bottom {
        t.hit("uniform-domain-gives-essential");
        t.check(
            "uniform-domain-gives-essential",
            report.essential.holds,
            &desc("uniform domain with bottom-preserving β but not essential"),
            &repro,
        );
    }
    if is_uniform(b) && report.beta_bottom && kernel_trivial {
        t.hit("uniform-codomain-gives-retractable");
        t.check(
            "uniform-codomain-gives-retractable",
            report.retractable.holds,
            &desc("uniform codomain with trivial kernel but not retractable"),
            &repro,
        );
    }
    if is_uc(b) && report.retractable.holds {
        t.hit("unique-closure-codomain-gives-uc");
        t.check(
            "unique-closure-codomain-gives-uc",
            report.uc.holds,
            &desc("unique-closure codomain lattice with retractable but non-UC connection"),
            &repro,
        );
    }

    if report.beta_additive.holds && report.beta_bottom {
        t.hit("additive-complement-preservation");
        let mut ok = true;
        for y in b.elements() {
            for c in b.complements_of(y) {
                let (py, pc) = (conn.beta(y), conn.beta(c));
                if a.meet(py, pc) != a.bottom() || a.join(py, pc) != a.top() {
                    ok = false;
                }
            }
        }
        t.check(
            "additive-complement-preservation",
            ok,
            &desc("an additive bottom-preserving β broke a complement"),
            &repro,
        );
    }

    match conn.verify_udim_theorem() {
        Ok(r) => {
            t.hit("dimension-comparison");
            if r.essential_equality == ClauseStatus::Passed {
                t.hit("dimension-equality-essential");
            }
            if r.cyclic_equality == ClauseStatus::Passed {
                t.hit("dimension-equality-cyclic");
            }
        }
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("dimension-comparison");
            t.fail("dimension-comparison", desc(&e.to_string()), repro.clone());
        }
    }

    match conn.closed_correspondence(CorrespondenceMode::General) {
        Ok(_) => t.hit("closed-correspondence-general"),
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("closed-correspondence-general");
            t.fail("closed-correspondence-general", desc(&e.to_string()), repro.clone());
        }
    }
    match conn.closed_correspondence(CorrespondenceMode::Modular) {
        Ok(_) => t.hit("closed-correspondence-modular"),
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("closed-correspondence-modular");
            t.fail("closed-correspondence-modular", desc(&e.to_string()), repro.clone());
        }
    }
    match conn.closed_galois_equivalence() {
        Ok(_) => t.hit("closed-fixed-point-equivalence"),
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("closed-fixed-point-equivalence");
            t.fail("closed-fixed-point-equivalence", desc(&e.to_string()), repro.clone());
        }
    }
    match conn.verify_extending_transfer() {
        Ok(r) => {
            t.hit("extending-transfer");
            if r.to_domain == ClauseStatus::Passed {
                t.hit("extending-transfer-to-domain");
            }
            if r.to_codomain == ClauseStatus::Passed {
                t.hit("extending-transfer-to-codomain");
            }
        }
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("extending-transfer");
            t.fail("extending-transfer", desc(&e.to_string()), repro.clone());
        }
    }
    match conn.verify_dual_correspondence() {
        Ok(_) => t.hit("coclosed-correspondence"),
        Err(GaloisError::HypothesisNotMet { .. }) => {}
        Err(e) => {
            t.hit("coclosed-correspondence");
            t.fail("coclosed-correspondence", desc(&e.to_string()), repro.clone());
        }
    }
}

/// Runs every verified statement over every enumerated lattice and every
/// adjoint pair between enumerated lattices of size at most `max_n`.
///
/// Hypotheses gate what gets checked; `instances` counts the objects whose
/// hypotheses held. Conclusion failures are collected (with text-format
/// reproducers), never panicked over — the expectation is zero.
pub fn run_theorem_suite(max_n: usize) -> Result<SuiteReport, SearchError> {
    if !(MIN_ENUM_SIZE..=MAX_SUITE_SIZE).contains(&max_n) {
        return Err(SearchError::BoundExceeded {
            n: max_n,
            lo: MIN_ENUM_SIZE,
            hi: MAX_SUITE_SIZE,
        });
    }
    let names: Vec<&'static str> =
        LATTICE_CLAUSES.iter().chain(CONNECTION_CLAUSES).copied().collect();
    let mut tally = Tally::new(&names);

    let by_size: Vec<Vec<Lattice>> = (MIN_ENUM_SIZE..=max_n)
        .map(enumerate_lattices)
        .collect::<Result<_, _>>()?;
    let all: Vec<&Lattice> = by_size.iter().flatten().collect();

    for l in &all {
        sweep_lattice_clauses(&mut tally, l);
    }

    let mut connections_tested = 0;
    for la in &all {
        for lb in &all {
            for conn in enumerate_connections(la, lb)? {
                connections_tested += 1;
                sweep_connection_clauses(&mut tally, &conn);
            }
        }
    }

    Ok(SuiteReport {
        max_size: max_n,
        lattices_tested: all.len(),
        connections_tested,
        clauses: tally.into_clauses(),
    })
}

/// All subsets of `pool` with between 1 and `max_len` elements, in
/// lexicographic index order.
fn subsets_up_to(pool: &[Elem], max_len: usize) -> Vec<Vec<Elem>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(
        pool: &[Elem],
        start: usize,
        max_len: usize,
        current: &mut Vec<Elem>,
        out: &mut Vec<Vec<Elem>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_len {
            return;
        }
        for i in start..pool.len() {
            current.push(pool[i]);
            rec(pool, i + 1, max_len, current, out);
            current.pop();
        }
    }
    rec(pool, 0, max_len, &mut current, &mut out);
    out
}

/// All orderings of a small set.
fn permutations(set: &[Elem]) -> Vec<Vec<Elem>> {
    if set.len() <= 1 {
        return vec![set.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in set.iter().enumerate() {
        let mut rest = set.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn lattice_counts_match_known_values() {
        let expected = [(2, 1), (3, 1), (4, 2), (5, 5), (6, 15), (7, 53)];
        for (n, count) in expected {
            assert_eq!(enumerate_lattices(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn lattice_count_at_eight() {
        assert_eq!(enumerate_lattices(8).unwrap().len(), 222);
    }

    #[test]
    fn enumeration_bounds_are_enforced() {
        assert!(matches!(enumerate_lattices(1), Err(SearchError::BoundExceeded { .. })));
        assert!(matches!(enumerate_lattices(9), Err(SearchError::BoundExceeded { .. })));
    }

    #[test]
    fn enumeration_is_deterministic() {
        let first = enumerate_lattices(6).unwrap();
        let second = enumerate_lattices(6).unwrap();
        assert_eq!(first, second);
    }

    /// Brute-force isomorphism test fixing bottom and top: tries every
    /// assignment of middle elements to middle elements.
    fn isomorphic_oracle(p: &Lattice, q: &Lattice) -> bool {
        if p.n() != q.n() {
            return false;
        }
        let p_middle: Vec<Elem> =
            p.elements().filter(|&e| e != p.bottom() && e != p.top()).collect();
        let q_middle: Vec<Elem> =
            q.elements().filter(|&e| e != q.bottom() && e != q.top()).collect();
        let positions: Vec<usize> = (0..p_middle.len()).collect();
        for perm in permutations(&positions) {
            let mut map = vec![0; p.n()];
            map[p.bottom()] = q.bottom();
            map[p.top()] = q.top();
            for (i, &j) in perm.iter().enumerate() {
                map[p_middle[i]] = q_middle[j];
            }
            if p
                .elements()
                .all(|x| p.elements().all(|y| p.leq(x, y) == q.leq(map[x], map[y])))
            {
                return true;
            }
        }
        false
    }

    /// Independent 5-element oracle: enumerate all labeled orders on the
    /// three middle elements (both directions allowed), filter lattices,
    /// and deduplicate by permutation search instead of canonical forms.
    #[test]
    fn independent_oracle_confirms_five_lattices_on_five_elements() {
        let n = 5;
        let m = 3;
        let mut found: Vec<Lattice> = Vec::new();
        let arcs: Vec<(usize, usize)> = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect();
        'mask: for mask in 0u32..(1 << arcs.len()) {
            let mut rel = vec![false; m * m];
            for (k, &(i, j)) in arcs.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    rel[i * m + j] = true;
                }
            }
            for i in 0..m {
                for j in 0..m {
                    if rel[i * m + j] {
                        if rel[j * m + i] {
                            continue 'mask; // antisymmetry
                        }
                        for k in 0..m {
                            if rel[j * m + k] && !rel[i * m + k] {
                                continue 'mask; // transitivity
                            }
                        }
                    }
                }
            }
            let mut leq = vec![false; n * n];
            for x in 0..n {
                leq[x * n + x] = true;
                leq[x] = true;
                leq[x * n + (n - 1)] = true;
            }
            for i in 0..m {
                for j in 0..m {
                    if rel[i * m + j] {
                        leq[(i + 1) * n + (j + 1)] = true;
                    }
                }
            }
            let labels: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
            let Ok(l) = Lattice::from_leq("oracle", labels, leq) else {
                continue;
            };
            if !found.iter().any(|seen| isomorphic_oracle(seen, &l)) {
                found.push(l);
            }
        }
        assert_eq!(found.len(), 5);
        let enumerated = enumerate_lattices(5).unwrap();
        for l in &enumerated {
            assert!(found.iter().any(|f| isomorphic_oracle(f, l)));
        }
    }

    #[test]
    fn enumerated_lattices_are_pairwise_nonisomorphic() {
        for n in 2..=6 {
            let lattices = enumerate_lattices(n).unwrap();
            for (i, p) in lattices.iter().enumerate() {
                for q in &lattices[i + 1..] {
                    assert!(!isomorphic_oracle(p, q), "n = {n}");
                }
            }
        }
    }

    #[test]
    fn two_chain_has_exactly_two_connections() {
        let two = enumerate_lattices(2).unwrap().pop().unwrap();
        let conns = enumerate_connections(&two, &two).unwrap();
        assert_eq!(conns.len(), 2);
        let tables: Vec<(Vec<Elem>, Vec<Elem>)> = conns
            .iter()
            .map(|c| (c.alpha_map().table().to_vec(), c.beta_map().table().to_vec()))
            .collect();
        assert!(tables.contains(&(vec![0, 1], vec![0, 1])), "identity pair");
        assert!(tables.contains(&(vec![0, 0], vec![1, 1])), "constant pair");
    }

    #[test]
    fn constant_pair_is_always_enumerated() {
        let a = fixtures::chain4();
        let b = fixtures::diamond_m4();
        let conns = enumerate_connections(&a, &b).unwrap();
        assert!(conns.iter().any(|c| {
            c.alpha_map().table().iter().all(|&v| v == b.bottom())
                && c.beta_map().table().iter().all(|&v| v == a.top())
        }));
    }

    #[test]
    fn grid_enumeration_contains_the_grid_pair() {
        let g = fixtures::grid3x3();
        let expected = fixtures::grid_pair();
        let conns = enumerate_connections(&g, &g).unwrap();
        assert!(conns.iter().any(|c| {
            c.alpha_map().table() == expected.alpha_map().table()
                && c.beta_map().table() == expected.beta_map().table()
        }));
    }

    #[test]
    fn pair_budget_is_enforced() {
        let names: Vec<String> = (0..16).map(|i| format!("p{i}")).collect();
        let mut leq = vec![false; 16 * 16];
        for x in 0..16 {
            for y in 0..16 {
                if x / 4 <= y / 4 && x % 4 <= y % 4 {
                    leq[x * 16 + y] = true;
                }
            }
        }
        let big = Lattice::from_leq("grid4x4", names, leq).unwrap();
        let g = fixtures::grid3x3();
        assert_eq!(
            enumerate_connections(&big, &g).unwrap_err(),
            SearchError::BudgetExceeded { product: 144, max: MAX_PAIR_PRODUCT }
        );
    }

    #[test]
    fn query_parse_print_round_trip() {
        let samples = [
            ("essential", QueryTarget::Connection),
            ("!(essential & (retractable | !uc))", QueryTarget::Connection),
            ("a.modular & b.uc & beta_additive", QueryTarget::Connection),
            ("modular & !distributive", QueryTarget::Lattice),
            ("uniform | (extending & cyclically_generated)", QueryTarget::Lattice),
        ];
        for (text, target) in samples {
            let q = PropertyQuery::parse(text, target).unwrap();
            let printed = q.to_string();
            let reparsed = PropertyQuery::parse(&printed, target).unwrap();
            assert_eq!(reparsed, q, "{text} -> {printed}");
            assert_eq!(reparsed.to_string(), printed);
        }
    }

    #[test]
    fn query_accepts_word_operators() {
        let a = PropertyQuery::parse("not essential and retractable", QueryTarget::Connection)
            .unwrap();
        let b = PropertyQuery::parse("!essential && retractable", QueryTarget::Connection)
            .unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn query_rejects_bad_atoms() {
        assert!(matches!(
            PropertyQuery::parse("frobnicating", QueryTarget::Lattice),
            Err(SearchError::BadQuery { .. })
        ));
        // Lattice predicates need a side prefix in connection queries.
        assert!(matches!(
            PropertyQuery::parse("modular", QueryTarget::Connection),
            Err(SearchError::BadQuery { .. })
        ));
        // Side prefixes are meaningless for lattice queries.
        assert!(matches!(
            PropertyQuery::parse("a.modular", QueryTarget::Lattice),
            Err(SearchError::BadQuery { .. })
        ));
        // Connection flags are meaningless for lattice queries.
        assert!(matches!(
            PropertyQuery::parse("retractable", QueryTarget::Lattice),
            Err(SearchError::BadQuery { .. })
        ));
        assert!(matches!(
            PropertyQuery::parse("essential &", QueryTarget::Connection),
            Err(SearchError::BadQuery { .. })
        ));
        assert!(matches!(
            PropertyQuery::parse("essential extra", QueryTarget::Connection),
            Err(SearchError::BadQuery { .. })
        ));
    }

    #[test]
    fn bare_uc_means_the_flag_on_connections_and_the_predicate_on_lattices() {
        let conn_q = PropertyQuery::parse("uc", QueryTarget::Connection).unwrap();
        assert_eq!(
            conn_q.expr(),
            &QueryExpr::Atom(QueryAtom::Flag(ConnectionFlag::UniqueClosure))
        );
        let lat_q = PropertyQuery::parse("uc", QueryTarget::Lattice).unwrap();
        assert_eq!(
            lat_q.expr(),
            &QueryExpr::Atom(QueryAtom::Lattice(None, LatticePred::UniqueClosure))
        );
    }

    #[test]
    fn smallest_nonmodular_lattice_is_the_pentagon() {
        let q = PropertyQuery::parse("!modular", QueryTarget::Lattice).unwrap();
        let result = find_witness(&q, 6).unwrap();
        let found = result.witness.expect("a non-modular lattice exists by size 6");
        let WitnessInstance::Lattice(l) = found.instance else {
            panic!("expected a lattice witness");
        };
        assert_eq!(l.n(), 5);
        let pentagon = Lattice::from_covers(
            "pentagon",
            &["0", "a", "c", "b", "1"],
            "0",
            "1",
            &[("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")],
        )
        .unwrap();
        assert_eq!(l.canonical_form(), pentagon.canonical_form());
        assert_eq!(found.certificate, vec![("modular".to_owned(), false)]);
    }

    #[test]
    fn witness_for_retractable_but_not_essential() {
        let q =
            PropertyQuery::parse("retractable & !essential", QueryTarget::Connection).unwrap();
        let result = find_witness(&q, 4).unwrap();
        let found = result.witness.expect("exists within size 4");
        let WitnessInstance::Connection(conn) = found.instance else {
            panic!("expected a connection witness");
        };
        assert_eq!((conn.a().n(), conn.b().n()), (3, 2));
        assert!(conn.is_retractable() && !conn.is_essential());
    }

    #[test]
    fn contradictory_query_finds_nothing() {
        let q =
            PropertyQuery::parse("essential & !essential", QueryTarget::Connection).unwrap();
        let result = find_witness(&q, 3).unwrap();
        assert_eq!(result.witness, None);
        assert_eq!(result.searched_max_size, 3);
    }

    #[test]
    fn witness_search_bounds_are_enforced() {
        let q = PropertyQuery::parse("essential", QueryTarget::Connection).unwrap();
        assert!(matches!(find_witness(&q, 8), Err(SearchError::BoundExceeded { .. })));
        let ql = PropertyQuery::parse("modular", QueryTarget::Lattice).unwrap();
        assert!(matches!(find_witness(&ql, 9), Err(SearchError::BoundExceeded { .. })));
    }

    #[test]
    fn theorem_suite_at_four_passes_and_exercises_every_clause() {
        let report = run_theorem_suite(4).unwrap();
        assert_eq!(report.total_failures(), 0, "{:#?}", report.clauses);
        assert!(
            report.all_clauses_exercised(),
            "unexercised: {:?}",
            report
                .clauses
                .iter()
                .filter(|c| c.instances == 0)
                .map(|c| &c.name)
                .collect::<Vec<_>>()
        );
        assert_eq!(report.lattices_tested, 4);
        assert!(report.connections_tested > 0);
    }

    #[test]
    fn suite_bounds_are_enforced() {
        assert!(matches!(run_theorem_suite(7), Err(SearchError::BoundExceeded { .. })));
    }

    #[test]
    fn suite_is_deterministic() {
        assert_eq!(run_theorem_suite(4).unwrap(), run_theorem_suite(4).unwrap());
    }

    #[test]
    fn theorem_suite_at_six_passes_and_exercises_cyclic_dimension_equality() {
        let report = run_theorem_suite(6).unwrap();
        assert_eq!(report.total_failures(), 0);
        assert!(report.all_clauses_exercised());
        let cyclic = report.clause("dimension-equality-cyclic").unwrap();
        assert!(cyclic.instances > 0);
    }

    #[test]
    fn subset_and_permutation_helpers() {
        let subsets = subsets_up_to(&[1, 2, 3], 2);
        assert_eq!(subsets, vec![vec![1], vec![1, 2], vec![1, 3], vec![2], vec![2, 3], vec![3]]);
        assert_eq!(permutations(&[1, 2, 3]).len(), 6);
        assert_eq!(permutations(&[]).len(), 1);
    }
}
