//! Standard-graded quotients `k[x_1..x_n]/I` of a polynomial ring by a monomial ideal.
//!
//! Elements are kept in normal form: a sparse sum of standard monomials (monomials
//! outside `I`). Because `I` is monomial, reduction is deletion of the monomials that
//! some relation divides, so no Gröbner machinery is needed.
//!
//! The degree-`d` piece of the algebra has the standard monomials of degree `d` as a
//! basis. Pieces are computed lazily and cached; every degree-wise linear algebra
//! routine in the crate indexes vectors through them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::field::PrimeField;

/// An exponent vector. The derived ordering is lexicographic with `x_1` most
/// significant; bases are listed in *descending* order, so `x^2, xy, y^2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(num_vars: usize) -> Self {
        Monomial(vec![0; num_vars])
    }

    pub fn var(num_vars: usize, i: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> i32 {
        self.0.iter().sum::<u32>() as i32
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Multiply by a single variable in place.
    pub fn times_var(&self, i: usize) -> Monomial {
        let mut m = self.clone();
        m.0[i] += 1;
        m
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Standard monomials of one degree, in basis order.
#[derive(Debug, Default)]
pub struct Piece {
    monomials: Vec<Monomial>,
    index: HashMap<Monomial, u32>,
}

impl Piece {
    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn dim(&self) -> usize {
        self.monomials.len()
    }

    pub fn index_of(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).map(|&i| i as usize)
    }
}

/// A homogeneous-or-not element in normal form.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct RingElement {
    terms: BTreeMap<Monomial, u32>,
}

impl RingElement {
    pub fn zero() -> Self {
        RingElement::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The common degree of all terms, `None` for zero or inhomogeneous elements.
    pub fn degree(&self) -> Option<i32> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    /// Coefficient of the unit monomial.
    pub fn constant_term(&self) -> u32 {
        self.terms
            .iter()
            .find(|(m, _)| m.is_one())
            .map(|(_, &c)| c)
            .unwrap_or(0)
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }
}

/// The ambient ring of every computation.
pub struct GradedAlgebra {
    field: PrimeField,
    var_names: Vec<String>,
    relations: Vec<Monomial>,
    top_degree: Option<i32>,
    pieces: Mutex<Vec<Arc<Piece>>>,
}

pub type Algebra = Arc<GradedAlgebra>;

impl fmt::Debug for GradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})[{}]", self.field.characteristic(), self.var_names.join(","))?;
        if !self.relations.is_empty() {
            let rels: Vec<String> = self.relations.iter().map(|m| self.format_monomial(m)).collect();
            write!(f, "/({})", rels.join(","))?;
        }
        Ok(())
    }
}

impl PartialEq for GradedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.var_names == other.var_names
            && self.relations == other.relations
    }
}

fn valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Drop duplicates and every monomial divisible by another one.
pub fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| (m.degree(), std::cmp::Reverse(m.clone())));
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out.sort_by(|a, b| b.cmp(a));
    out
}

fn enumerate_degree(num_vars: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<Monomial>) {
    if prefix.len() + 1 == num_vars {
        prefix.push(d);
        out.push(Monomial(prefix.clone()));
        prefix.pop();
        return;
    }
    for e in (0..=d).rev() {
        prefix.push(e);
        enumerate_degree(num_vars, d - e, prefix, out);
        prefix.pop();
    }
}

impl GradedAlgebra {
    /// Build `field[vars]/(relations)`. The relations are minimalized.
    pub fn new(field: PrimeField, var_names: Vec<String>, relations: Vec<Monomial>) -> Result<Algebra> {
        if var_names.is_empty() {
            return Err(Error::Shape("at least one variable is required".into()));
        }
        for (i, v) in var_names.iter().enumerate() {
            if !valid_identifier(v) {
                return Err(Error::Parse { offset: 0, message: format!("invalid variable name `{v}`") });
            }
            if var_names[..i].contains(v) {
                return Err(Error::Parse { offset: 0, message: format!("duplicate variable `{v}`") });
            }
        }
        for r in &relations {
            if r.num_vars() != var_names.len() {
                return Err(Error::DimensionMismatch { expected: var_names.len(), found: r.num_vars() });
            }
            if r.is_one() {
                return Err(Error::ConstantMonomial);
            }
        }
        let relations = minimalize(relations);
        let n = var_names.len();
        let artinian = (0..n).all(|i| {
            relations.iter().any(|r| r.support() == vec![i])
        });
        let mut alg = GradedAlgebra {
            field,
            var_names,
            relations,
            top_degree: None,
            pieces: Mutex::new(Vec::new()),
        };
        if artinian {
            let mut d = 0;
            while alg.piece(d).dim() > 0 {
                d += 1;
            }
            alg.top_degree = Some(d - 1);
        }
        Ok(Arc::new(alg))
    }

    /// The polynomial ring with no relations.
    pub fn polynomial(field: PrimeField, vars: &[&str]) -> Result<Algebra> {
        GradedAlgebra::new(field, vars.iter().map(|s| s.to_string()).collect(), Vec::new())
    }

    /// Convenience constructor from variable names and relation strings like `"s*t"`.
    pub fn parse(field: PrimeField, vars: &[&str], relations: &[&str]) -> Result<Algebra> {
        let names: Vec<String> = vars.iter().map(|s| s.to_string()).collect();
        let rels = relations
            .iter()
            .map(|r| parse_monomial_with(&names, r))
            .collect::<Result<Vec<_>>>()?;
        GradedAlgebra::new(field, names, rels)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn num_vars(&self) -> usize {
        self.var_names.len()
    }

    pub fn var_names(&self) -> &[String] {
        &self.var_names
    }

    pub fn relations(&self) -> &[Monomial] {
        &self.relations
    }

    /// Largest degree with a nonzero piece, when the algebra is Artinian.
    pub fn top_degree(&self) -> Option<i32> {
        self.top_degree
    }

    pub fn is_artinian(&self) -> bool {
        self.top_degree.is_some()
    }

    pub fn in_ideal(&self, m: &Monomial) -> bool {
        self.relations.iter().any(|r| r.divides(m))
    }

    /// The degree-`d` piece; empty for negative `d`.
    pub fn piece(&self, d: i32) -> Arc<Piece> {
        if d < 0 || self.top_degree.is_some_and(|t| d > t) {
            return Arc::new(Piece::default());
        }
        let d = d as usize;
        let mut pieces = self.pieces.lock().expect("piece cache poisoned");
        while pieces.len() <= d {
            let deg = pieces.len() as u32;
            let mut all = Vec::new();
            enumerate_degree(self.num_vars(), deg, &mut Vec::new(), &mut all);
            let monomials: Vec<Monomial> = all.into_iter().filter(|m| !self.in_ideal(m)).collect();
            let index = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i as u32)).collect();
            pieces.push(Arc::new(Piece { monomials, index }));
        }
        Arc::clone(&pieces[d])
    }

    /// Standard monomials of degree `d` in the fixed (descending lex) order.
    pub fn graded_piece_basis(&self, d: i32) -> Vec<Monomial> {
        self.piece(d).monomials().to_vec()
    }

    pub fn hilbert_function(&self, d: i32) -> usize {
        self.piece(d).dim()
    }

    fn check_len(&self, m: &Monomial) -> Result<()> {
        if m.num_vars() != self.num_vars() {
            return Err(Error::DimensionMismatch { expected: self.num_vars(), found: m.num_vars() });
        }
        Ok(())
    }

    /// Reduce a formal sum of coefficient–monomial pairs.
    pub fn normal_form(&self, raw: &[(i64, Monomial)]) -> Result<RingElement> {
        let mut out = RingElement::zero();
        for (c, m) in raw {
            self.check_len(m)?;
            self.add_term(&mut out, self.field.from_i64(*c), m.clone());
        }
        Ok(out)
    }

    fn add_term(&self, e: &mut RingElement, c: u32, m: Monomial) {
        if c == 0 || self.in_ideal(&m) {
            return;
        }
        let f = self.field;
        match e.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = f.add(*o.get(), c);
                if s == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn one(&self) -> RingElement {
        self.constant(1)
    }

    pub fn constant(&self, c: i64) -> RingElement {
        let mut e = RingElement::zero();
        self.add_term(&mut e, self.field.from_i64(c), Monomial::one(self.num_vars()));
        e
    }

    pub fn var(&self, i: usize) -> RingElement {
        self.monomial(1, Monomial::var(self.num_vars(), i))
    }

    pub fn monomial(&self, c: u32, m: Monomial) -> RingElement {
        let mut e = RingElement::zero();
        self.add_term(&mut e, c, m);
        e
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = a.clone();
        for (m, &c) in &b.terms {
            self.add_term(&mut out, c, m.clone());
        }
        out
    }

    pub fn add_assign(&self, a: &mut RingElement, b: &RingElement) {
        for (m, &c) in &b.terms {
            self.add_term(a, c, m.clone());
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        self.scale(a, self.field.neg(1))
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, a: &RingElement, c: u32) -> RingElement {
        if c == 0 {
            return RingElement::zero();
        }
        RingElement {
            terms: a.terms.iter().map(|(m, &v)| (m.clone(), self.field.mul(v, c))).collect(),
        }
    }

    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let mut out = RingElement::zero();
        for (ma, &ca) in &a.terms {
            for (mb, &cb) in &b.terms {
                self.add_term(&mut out, self.field.mul(ca, cb), ma.mul(mb));
            }
        }
        out
    }

    /// Multiply by `c * m`.
    pub fn mul_term(&self, a: &RingElement, c: u32, m: &Monomial) -> RingElement {
        let mut out = RingElement::zero();
        for (ma, &ca) in &a.terms {
            self.add_term(&mut out, self.field.mul(ca, c), ma.mul(m));
        }
        out
    }

    pub fn parse_monomial(&self, s: &str) -> Result<Monomial> {
        parse_monomial_with(&self.var_names, s)
    }

    pub fn parse_element(&self, s: &str) -> Result<RingElement> {
        let raw = parse_sum(&self.var_names, s)?;
        self.normal_form(&raw)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        format_monomial_with(&self.var_names, m)
    }

    pub fn format_element(&self, e: &RingElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, c)) in e.terms().enumerate() {
            let c = self.field.to_signed(c);
            let neg = c < 0;
            let a = c.abs();
            if i == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if m.is_one() {
                s.push_str(&a.to_string());
            } else if a == 1 {
                s.push_str(&self.format_monomial(m));
            } else {
                s.push_str(&format!("{a}*{}", self.format_monomial(m)));
            }
        }
        s
    }

    /// True iff the minimal monomial relations have pairwise disjoint supports.
    pub fn is_complete_intersection(&self) -> bool {
        disjoint_supports(&self.relations)
    }
}

fn disjoint_supports(ms: &[Monomial]) -> bool {
    let mut seen = std::collections::HashSet::new();
    for m in ms {
        for v in m.support() {
            if !seen.insert(v) {
                return false;
            }
        }
    }
    true
}

/// Whether `seq` is a regular sequence in the polynomial ring on `ambient_num_vars`
/// variables. For monomials this holds exactly when supports are pairwise disjoint.
pub fn is_monomial_regular_sequence(ambient_num_vars: usize, seq: &[Monomial]) -> Result<bool> {
    for m in seq {
        if m.num_vars() != ambient_num_vars {
            return Err(Error::DimensionMismatch { expected: ambient_num_vars, found: m.num_vars() });
        }
        if m.is_one() {
            return Err(Error::ConstantMonomial);
        }
    }
    Ok(disjoint_supports(seq))
}

/// Regularity of a monomial sequence on a monomial quotient `k[x]/J`: in addition to
/// disjointness, no member may share a variable with a minimal generator of `J`.
pub fn is_monomial_regular_sequence_mod(relations: &[Monomial], seq: &[Monomial]) -> Result<bool> {
    let n = seq.first().map(Monomial::num_vars).unwrap_or(0);
    if !is_monomial_regular_sequence(n, seq)? {
        return Ok(false);
    }
    let rel_support: std::collections::HashSet<usize> =
        minimalize(relations.to_vec()).iter().flat_map(|r| r.support()).collect();
    Ok(seq.iter().all(|m| m.support().iter().all(|v| !rel_support.contains(v))))
}

fn format_monomial_with(names: &[String], m: &Monomial) -> String {
    if m.is_one() {
        return "1".to_string();
    }
    let parts: Vec<String> = m
        .exponents()
        .iter()
        .enumerate()
        .filter(|(_, &e)| e > 0)
        .map(|(i, &e)| if e == 1 { names[i].clone() } else { format!("{}^{e}", names[i]) })
        .collect();
    parts.join("*")
}

struct Lexer<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn new(s: &'a str) -> Self {
        Lexer { s: s.as_bytes(), pos: 0 }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::Parse { offset: self.pos, message: message.into() }
    }

    fn number(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| Error::Parse { offset: start, message: "number too large".into() })
    }

    fn ident(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len()
            && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_')
        {
            self.pos += 1;
        }
        (start != self.pos).then(|| std::str::from_utf8(&self.s[start..self.pos]).unwrap())
    }
}

/// Parse one product of factors `c`, `v`, `v^e` separated by `*`.
fn parse_product(names: &[String], lx: &mut Lexer) -> Result<(i64, Monomial)> {
    let mut coeff: i64 = 1;
    let mut exps = vec![0u32; names.len()];
    loop {
        match lx.peek() {
            Some(c) if c.is_ascii_digit() => {
                let n = lx.number()? as i64;
                coeff = coeff.checked_mul(n).ok_or_else(|| lx.err("coefficient overflow"))?;
            }
            Some(c) if c.is_ascii_alphabetic() || c == b'_' => {
                let at = lx.pos;
                let name = lx.ident().unwrap();
                let i = names
                    .iter()
                    .position(|v| v == name)
                    .ok_or(Error::Parse { offset: at, message: format!("unknown variable `{name}`") })?;
                let mut e = 1u32;
                if lx.peek() == Some(b'^') {
                    lx.pos += 1;
                    e = u32::try_from(lx.number()?).map_err(|_| lx.err("exponent too large"))?;
                }
                exps[i] += e;
            }
            _ => return Err(lx.err("expected a variable or a number")),
        }
        if lx.peek() == Some(b'*') {
            lx.pos += 1;
        } else {
            break;
        }
    }
    Ok((coeff, Monomial(exps)))
}

fn parse_sum(names: &[String], s: &str) -> Result<Vec<(i64, Monomial)>> {
    let mut lx = Lexer::new(s);
    let mut out = Vec::new();
    let mut sign = 1i64;
    if lx.peek() == Some(b'-') {
        lx.pos += 1;
        sign = -1;
    } else if lx.peek() == Some(b'+') {
        lx.pos += 1;
    }
    loop {
        let (c, m) = parse_product(names, &mut lx)?;
        out.push((sign * c, m));
        match lx.peek() {
            None => break,
            Some(b'+') => {
                lx.pos += 1;
                sign = 1;
            }
            Some(b'-') => {
                lx.pos += 1;
                sign = -1;
            }
            Some(_) => return Err(lx.err("expected `+`, `-` or end of input")),
        }
    }
    Ok(out)
}

fn parse_monomial_with(names: &[String], s: &str) -> Result<Monomial> {
    let mut lx = Lexer::new(s);
    let (c, m) = parse_product(names, &mut lx)?;
    if lx.peek().is_some() {
        return Err(lx.err("trailing input after monomial"));
    }
    if c != 1 {
        return Err(Error::Parse { offset: 0, message: "monomials carry no coefficient".into() });
    }
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> PrimeField {
        PrimeField::default()
    }

    fn example_ring() -> Algebra {
        GradedAlgebra::parse(f(), &["s", "t"], &["s^2", "s*t", "t^2"]).unwrap()
    }

    #[test]
    fn relation_dies_in_normal_form() {
        let r = example_ring();
        let e = r.parse_element("s^2 + 3*t").unwrap();
        assert_eq!(r.format_element(&e), "3*t");
    }

    #[test]
    fn square_in_dual_numbers() {
        let r = GradedAlgebra::parse(f(), &["x"], &["x^2"]).unwrap();
        let a = r.parse_element("x + 1").unwrap();
        assert_eq!(r.format_element(&r.mul(&a, &a)), "2*x + 1");
    }

    #[test]
    fn commutativity_combines_terms() {
        let r = GradedAlgebra::polynomial(f(), &["x", "y"]).unwrap();
        let e = r.parse_element("x*y + y*x").unwrap();
        assert_eq!(r.format_element(&e), "2*x*y");
    }

    #[test]
    fn exponent_length_mismatch() {
        let r = example_ring();
        let err = r.normal_form(&[(1, Monomial::new(vec![1]))]).unwrap_err();
        assert_eq!(err, Error::DimensionMismatch { expected: 2, found: 1 });
    }

    #[test]
    fn graded_pieces() {
        let r = example_ring();
        let names = |d| -> Vec<String> {
            r.graded_piece_basis(d).iter().map(|m| r.format_monomial(m)).collect()
        };
        assert_eq!(names(1), vec!["s", "t"]);
        assert!(names(2).is_empty());
        assert_eq!((0..4).map(|d| r.hilbert_function(d)).collect::<Vec<_>>(), vec![1, 2, 0, 0]);
        assert_eq!(r.top_degree(), Some(1));
        let p = GradedAlgebra::polynomial(f(), &["x", "y"]).unwrap();
        let b: Vec<String> = p.graded_piece_basis(2).iter().map(|m| p.format_monomial(m)).collect();
        assert_eq!(b, vec!["x^2", "x*y", "y^2"]);
        assert!(p.graded_piece_basis(-1).is_empty());
        assert_eq!(p.top_degree(), None);
    }

    #[test]
    fn regular_sequences() {
        let m = |v: Vec<u32>| Monomial::new(v);
        assert!(is_monomial_regular_sequence(1, &[m(vec![2])]).unwrap());
        assert!(is_monomial_regular_sequence(2, &[m(vec![2, 0]), m(vec![0, 3])]).unwrap());
        assert!(!is_monomial_regular_sequence(2, &[m(vec![2, 0]), m(vec![1, 1])]).unwrap());
        assert_eq!(
            is_monomial_regular_sequence(2, &[m(vec![0, 0])]),
            Err(Error::ConstantMonomial)
        );
        assert!(!is_monomial_regular_sequence_mod(&[m(vec![2, 1])], &[m(vec![1, 0])]).unwrap());
        assert!(is_monomial_regular_sequence_mod(&[m(vec![0, 2])], &[m(vec![1, 0])]).unwrap());
    }

    #[test]
    fn complete_intersections() {
        assert!(GradedAlgebra::parse(f(), &["x"], &["x^2"]).unwrap().is_complete_intersection());
        assert!(!example_ring().is_complete_intersection());
        assert!(GradedAlgebra::polynomial(f(), &["x", "y"]).unwrap().is_complete_intersection());
        assert!(GradedAlgebra::parse(f(), &["x", "y"], &["x^2", "y^3"]).unwrap().is_complete_intersection());
    }

    #[test]
    fn relations_are_minimalized() {
        let r = GradedAlgebra::parse(f(), &["x", "y"], &["x^2", "x^3*y", "x^2"]).unwrap();
        assert_eq!(r.relations().len(), 1);
    }

    #[test]
    fn parse_errors_carry_offsets() {
        let r = example_ring();
        match r.parse_element("3*s + q") {
            Err(Error::Parse { offset, .. }) => assert_eq!(offset, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(r.parse_element("s +").is_err());
        assert!(r.parse_monomial("2*s").is_err());
    }

    #[test]
    fn printing_round_trips() {
        let r = example_ring();
        for s in ["-s + 4*t", "1", "0", "50*s - t"] {
            let e = r.parse_element(s).unwrap();
            assert_eq!(r.parse_element(&r.format_element(&e)).unwrap(), e);
        }
    }
}
