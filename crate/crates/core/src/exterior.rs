//! Exterior algebra over an `n`-dimensional rational vector space.
//!
//! Forms are sparse maps from blades (bitmask-encoded index sets) to exact
//! rational coefficients. Every operation prunes zero coefficients, so two
//! `Form`s compare equal exactly when they are equal as forms.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::ser::{SerializeSeq, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{parse_rational, rational_sqrt, render, Rational};

/// Largest supported dimension of the underlying vector space.
pub const MAX_DIM: usize = 16;

/// A set of coframe indices `{i_1 < ... < i_k}`, stored as a bitmask
/// (bit `i - 1` set for index `i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Blade(u32);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    pub fn from_mask(mask: u32) -> Self {
        Blade(mask)
    }

    /// From 1-based indices. Returns the blade together with the sign of the
    /// permutation that sorts them, or `None` if an index repeats.
    pub fn from_indices(indices: &[usize]) -> Option<(Blade, i8)> {
        let mut blade = Blade::SCALAR;
        let mut sign = 1i8;
        for &i in indices {
            assert!((1..=MAX_DIM).contains(&i), "index {i} out of range");
            let s = merge_sign(blade, Blade(1 << (i - 1)))?;
            sign *= s;
            blade = Blade(blade.0 | (1 << (i - 1)));
        }
        Some((blade, sign))
    }

    pub fn mask(self) -> u32 {
        self.0
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// 1-based indices in increasing order.
    pub fn indices(self) -> Vec<usize> {
        (0..32).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    pub fn contains(self, index: usize) -> bool {
        self.0 & (1 << (index - 1)) != 0
    }

    /// Complement inside `{1..dim}`.
    pub fn complement(self, dim: usize) -> Blade {
        Blade(!self.0 & full_mask(dim))
    }

    /// Largest index, or 0 for the scalar blade.
    pub fn max_index(self) -> usize {
        32 - self.0.leading_zeros() as usize
    }
}

fn full_mask(dim: usize) -> u32 {
    if dim == 0 {
        0
    } else {
        u32::MAX >> (32 - dim)
    }
}

/// Sign of `e_a ∧ e_b` relative to the sorted blade, or `None` when the
/// blades share an index.
pub fn merge_sign(a: Blade, b: Blade) -> Option<i8> {
    if a.0 & b.0 != 0 {
        return None;
    }
    // count pairs (i in a, j in b) with i > j
    let mut swaps = 0u32;
    let mut rest = b.0;
    while rest != 0 {
        let j = rest.trailing_zeros();
        rest &= rest - 1;
        let above = if j >= 31 { 0 } else { u32::MAX << (j + 1) };
        swaps += (a.0 & above).count_ones();
    }
    Some(if swaps.is_multiple_of(2) { 1 } else { -1 })
}

/// A (possibly inhomogeneous) form with rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Form {
    dim: usize,
    terms: BTreeMap<Blade, Rational>,
}

impl Form {
    pub fn zero(dim: usize) -> Self {
        assert!(dim <= MAX_DIM, "dimension {dim} exceeds {MAX_DIM}");
        Form { dim, terms: BTreeMap::new() }
    }

    pub fn scalar(dim: usize, c: Rational) -> Self {
        let mut f = Form::zero(dim);
        f.add_term(Blade::SCALAR, c);
        f
    }

    /// The coframe generator `dx^i` (1-based).
    pub fn generator(dim: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= dim, "generator index {i} out of range for dim {dim}");
        Form::blade(dim, &[i], Rational::one())
    }

    /// `c · dx^{i_1} ∧ ... ∧ dx^{i_k}` for arbitrary (unsorted) indices.
    pub fn blade(dim: usize, indices: &[usize], c: Rational) -> Self {
        let mut f = Form::zero(dim);
        assert!(indices.iter().all(|&i| i >= 1 && i <= dim), "index out of range");
        if let Some((b, s)) = Blade::from_indices(indices) {
            f.add_term(b, if s > 0 { c } else { -c });
        }
        f
    }

    /// Volume blade `dx^{1...n}`.
    pub fn volume(dim: usize) -> Self {
        let mut f = Form::zero(dim);
        f.add_term(Blade(full_mask(dim)), Rational::one());
        f
    }

    pub fn from_terms<I: IntoIterator<Item = (Blade, Rational)>>(dim: usize, terms: I) -> Self {
        let mut f = Form::zero(dim);
        for (b, c) in terms {
            assert!(b.max_index() <= dim, "blade exceeds dimension");
            f.add_term(b, c);
        }
        f
    }

    /// Parses the canonical text form at the given dimension.
    pub fn parse(dim: usize, s: &str) -> Result<Self> {
        parse_form(dim, s)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Blade, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, indices: &[usize]) -> Rational {
        match Blade::from_indices(indices) {
            None => Rational::zero(),
            Some((b, s)) => {
                let c = self.terms.get(&b).cloned().unwrap_or_else(Rational::zero);
                if s > 0 {
                    c
                } else {
                    -c
                }
            }
        }
    }

    pub fn coefficient_of(&self, b: Blade) -> Rational {
        self.terms.get(&b).cloned().unwrap_or_else(Rational::zero)
    }

    /// The grade if all terms share one, `None` for zero or mixed forms.
    pub fn grade(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|b| b.grade());
        let first = it.next()?;
        it.all(|g| g == first).then_some(first)
    }

    pub fn grade_part(&self, k: usize) -> Form {
        Form::from_terms(self.dim, self.terms.iter().filter(|(b, _)| b.grade() == k).map(|(b, c)| (*b, c.clone())))
    }

    /// Adds `c · blade`, pruning a resulting zero.
    pub fn add_term(&mut self, b: Blade, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&b) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&b);
                }
            }
            None => {
                self.terms.insert(b, c);
            }
        }
    }

    pub fn scale(&self, s: &Rational) -> Form {
        if s.is_zero() {
            return Form::zero(self.dim);
        }
        Form { dim: self.dim, terms: self.terms.iter().map(|(b, c)| (*b, c * s)).collect() }
    }

    fn check_dim(&self, other: &Form) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch { left: self.dim, right: other.dim });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Form) -> Result<Form> {
        self.check_dim(other)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        Ok(out)
    }

    pub fn try_sub(&self, other: &Form) -> Result<Form> {
        self.try_add(&-other)
    }

    /// Wedge product.
    pub fn wedge(&self, other: &Form) -> Result<Form> {
        self.check_dim(other)?;
        let mut out = Form::zero(self.dim);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(s) = merge_sign(*a, *b) {
                    let c = ca * cb;
                    out.add_term(Blade(a.0 | b.0), if s > 0 { c } else { -c });
                }
            }
        }
        Ok(out)
    }

    /// Interior product `v ⌟ self`.
    pub fn contract(&self, v: &[Rational]) -> Result<Form> {
        if v.len() != self.dim {
            return Err(Error::DimensionMismatch { left: v.len(), right: self.dim });
        }
        let mut out = Form::zero(self.dim);
        for (b, c) in &self.terms {
            for (pos, i) in b.indices().into_iter().enumerate() {
                let vi = &v[i - 1];
                if vi.is_zero() {
                    continue;
                }
                let term = c * vi;
                let rest = Blade(b.0 & !(1 << (i - 1)));
                out.add_term(rest, if pos % 2 == 0 { term } else { -term });
            }
        }
        Ok(out)
    }

    /// Re-expresses the form after substituting every coframe generator:
    /// `dx^i ↦ Σ_j M[i][j] dx^j`. The matrix must be invertible.
    pub fn change_coframe(&self, m: &QMatrix) -> Result<Form> {
        if m.rows() != self.dim || m.cols() != self.dim {
            return Err(Error::DimensionMismatch { left: m.rows(), right: self.dim });
        }
        if m.determinant()?.is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(self.substitute(|i| row_form(m, i - 1)))
    }

    /// Substitutes each generator `dx^i` by an arbitrary 1-form and re-expands.
    pub fn substitute<F: Fn(usize) -> Form>(&self, image: F) -> Form {
        let images: Vec<Form> = (1..=self.dim).map(image).collect();
        let mut out = Form::zero(images.first().map_or(self.dim, Form::dim));
        for (b, c) in &self.terms {
            let mut acc = Form::scalar(out.dim, c.clone());
            for i in b.indices() {
                acc = acc.wedge(&images[i - 1]).expect("images share a dimension");
                if acc.is_zero() {
                    break;
                }
            }
            out = out.try_add(&acc).expect("same dimension");
        }
        out
    }

    /// Action of an endomorphism `A` of the vector space on forms, extended
    /// as a derivation: `dx^i ↦ -Σ_j A[i][j] dx^j`. A form is `A`-invariant
    /// iff the result vanishes.
    pub fn derivation_action(&self, a: &QMatrix) -> Result<Form> {
        if a.rows() != self.dim || a.cols() != self.dim {
            return Err(Error::DimensionMismatch { left: a.rows(), right: self.dim });
        }
        let images: Vec<Form> = (0..self.dim).map(|i| -&row_form(a, i)).collect();
        Ok(self.apply_derivation(&images))
    }

    /// Extends a degree-`p` map on generators, `dx^i ↦ images[i]`, to a
    /// graded derivation with sign `(-1)^{p · position}`.
    pub(crate) fn apply_graded_derivation(&self, images: &[Form], odd: bool) -> Form {
        let mut out = Form::zero(images.first().map_or(self.dim, Form::dim));
        for (b, c) in &self.terms {
            let idx = b.indices();
            for (pos, &i) in idx.iter().enumerate() {
                if images[i - 1].is_zero() {
                    continue;
                }
                let before = Form::blade(out.dim, &idx[..pos], Rational::one());
                let after = Form::blade(out.dim, &idx[pos + 1..], Rational::one());
                let mut term =
                    before.wedge(&images[i - 1]).and_then(|t| t.wedge(&after)).expect("same dimension").scale(c);
                if odd && pos % 2 == 1 {
                    term = -&term;
                }
                out = out.try_add(&term).expect("same dimension");
            }
        }
        out
    }

    fn apply_derivation(&self, images: &[Form]) -> Form {
        self.apply_graded_derivation(images, false)
    }

    /// Formal exterior derivative of a form with constant coefficients,
    /// given the differentials of the coframe generators (`de[i]` for `dx^{i+1}`).
    pub fn exterior_derivative(&self, de: &[Form]) -> Result<Form> {
        if de.len() != self.dim {
            return Err(Error::DimensionMismatch { left: de.len(), right: self.dim });
        }
        if let Some(bad) = de.iter().find(|f| f.dim != self.dim) {
            return Err(Error::DimensionMismatch { left: bad.dim, right: self.dim });
        }
        Ok(self.apply_graded_derivation(de, true))
    }

    /// Re-embeds into a space of dimension `new_dim`, sending index `i` to
    /// `map[i - 1]` (1-based targets).
    pub fn relabel(&self, new_dim: usize, map: &[usize]) -> Form {
        assert_eq!(map.len(), self.dim);
        let mut out = Form::zero(new_dim);
        for (b, c) in &self.terms {
            let idx: Vec<usize> = b.indices().iter().map(|&i| map[i - 1]).collect();
            if let Some((nb, s)) = Blade::from_indices(&idx) {
                out.add_term(nb, if s > 0 { c.clone() } else { -c.clone() });
            }
        }
        out
    }

    /// True if no blade contains any of the given (1-based) indices.
    pub fn avoids(&self, indices: &[usize]) -> bool {
        let mask: u32 = indices.iter().map(|&i| 1u32 << (i - 1)).sum();
        self.terms.keys().all(|b| b.0 & mask == 0)
    }

    /// Text rendering, e.g. `-2*e1245 + 4*e4567`.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

fn row_form(m: &QMatrix, i: usize) -> Form {
    let n = m.cols();
    let mut f = Form::zero(n);
    for j in 0..n {
        f.add_term(Blade(1 << j), m[(i, j)].clone());
    }
    f
}

impl Neg for &Form {
    type Output = Form;
    fn neg(self) -> Form {
        Form { dim: self.dim, terms: self.terms.iter().map(|(b, c)| (*b, -c)).collect() }
    }
}

impl Add for &Form {
    type Output = Form;
    fn add(self, rhs: &Form) -> Form {
        self.try_add(rhs).expect("form dimension mismatch")
    }
}

impl Sub for &Form {
    type Output = Form;
    fn sub(self, rhs: &Form) -> Form {
        self.try_sub(rhs).expect("form dimension mismatch")
    }
}

/// `a ^ b` is the wedge product.
impl std::ops::BitXor for &Form {
    type Output = Form;
    fn bitxor(self, rhs: &Form) -> Form {
        self.wedge(rhs).expect("form dimension mismatch")
    }
}

impl Mul<&Form> for &Rational {
    type Output = Form;
    fn mul(self, rhs: &Form) -> Form {
        rhs.scale(self)
    }
}

fn blade_label(b: Blade, dim: usize) -> String {
    let idx = b.indices();
    if dim <= 9 {
        format!("e{}", idx.iter().map(|i| i.to_string()).collect::<String>())
    } else {
        format!("e({})", idx.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(","))
    }
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            if *b == Blade::SCALAR {
                write!(f, "{}", render(&mag))?;
            } else if mag.is_one() {
                write!(f, "{}", blade_label(*b, self.dim))?;
            } else {
                write!(f, "{}*{}", render(&mag), blade_label(*b, self.dim))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Form[{}]({})", self.dim, self)
    }
}

fn parse_indices(s: &str, dim: usize) -> Result<Vec<usize>> {
    let body = s.strip_prefix('e').ok_or_else(|| Error::Parse(format!("expected blade, got `{s}`")))?;
    let idx: Vec<usize> = if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
        inner
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad index in `{s}`"))))
            .collect::<Result<_>>()?
    } else {
        body.chars()
            .map(|ch| ch.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::Parse(format!("bad blade `{s}`"))))
            .collect::<Result<_>>()?
    };
    if idx.iter().any(|&i| i == 0 || i > dim) {
        return Err(Error::Parse(format!("index out of range in `{s}` (dim {dim})")));
    }
    Ok(idx)
}

fn parse_form(dim: usize, s: &str) -> Result<Form> {
    let mut out = Form::zero(dim);
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact == "0" {
        return Ok(out);
    }
    // split into signed terms at top-level '+'/'-' (never inside parentheses)
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0;
    for ch in compact.chars() {
        match ch {
            '(' => {
                depth += 1;
                cur.push(ch);
            }
            ')' => {
                depth -= 1;
                cur.push(ch);
            }
            '+' | '-' if depth == 0 && !cur.ends_with('*') => {
                if !cur.is_empty() {
                    terms.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            }
            _ => cur.push(ch),
        }
    }
    if cur.is_empty() {
        return Err(Error::Parse(format!("dangling sign in `{s}`")));
    }
    terms.push((neg, cur));
    for (neg, t) in terms {
        let (coef, blade) = match t.split_once('*') {
            Some((c, b)) => (parse_rational(c)?, Some(b)),
            None if t.starts_with('e') => (Rational::one(), Some(t.as_str())),
            None => (parse_rational(&t)?, None),
        };
        let coef = if neg { -coef } else { coef };
        match blade {
            None => out.add_term(Blade::SCALAR, coef),
            Some(b) => {
                let idx = parse_indices(b, dim)?;
                let f = Form::blade(dim, &idx, coef);
                out = out.try_add(&f)?;
            }
        }
    }
    Ok(out)
}

impl FromStr for Form {
    type Err = Error;

    /// Parses at dimension 7, the default for G2 computations.
    fn from_str(s: &str) -> Result<Form> {
        parse_form(7, s)
    }
}

struct TermJson<'a>(Blade, &'a Rational);

impl Serialize for TermJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Term", 2)?;
        st.serialize_field("indices", &self.0.indices())?;
        st.serialize_field("coeff", &render(self.1))?;
        st.end()
    }
}

/// Serialized as a list of `{indices, coeff}` sorted by blade bitmask.
impl Serialize for Form {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (b, c) in &self.terms {
            seq.serialize_element(&TermJson(*b, c))?;
        }
        seq.end()
    }
}

/// Orientation relative to the canonical basis order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn from_sign(s: i64) -> Result<Self> {
        match s {
            1 => Ok(Orientation::Positive),
            -1 => Ok(Orientation::Negative),
            _ => Err(Error::InvalidInput(format!("orientation must be +1 or -1, got {s}"))),
        }
    }

    pub fn sign(self) -> i64 {
        match self {
            Orientation::Positive => 1,
            Orientation::Negative => -1,
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

/// A positive-definite symmetric bilinear form on vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Metric {
    matrix: QMatrix,
}

impl Metric {
    pub fn new(matrix: QMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { left: matrix.rows(), right: matrix.cols() });
        }
        if !matrix.is_positive_definite() {
            return Err(Error::NotPositiveDefinite);
        }
        Ok(Metric { matrix })
    }

    pub fn euclidean(dim: usize) -> Self {
        Metric { matrix: QMatrix::identity(dim) }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.matrix
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == QMatrix::identity(self.dim())
    }
}

/// All blades of grade `k` in dimension `n`, ordered by bitmask.
pub fn blades_of_grade(n: usize, k: usize) -> Vec<Blade> {
    (0u32..(1u32 << n)).filter(|m| m.count_ones() as usize == k).map(Blade).collect()
}

/// Hodge star `∗` for a positive-definite metric and orientation, defined by
/// `α ∧ ∗β = g(α, β) vol` with `vol = ±sqrt(det g) dx^{1...n}`.
///
/// Requires `det g` to be the square of a rational.
pub fn hodge(a: &Form, g: &Metric, o: Orientation) -> Result<Form> {
    if a.dim() != g.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: g.dim() });
    }
    let n = a.dim();
    if g.is_identity() {
        let mut out = Form::zero(n);
        for (b, c) in a.terms() {
            let comp = b.complement(n);
            let s = merge_sign(*b, comp).expect("complementary blades") as i64 * o.sign();
            out.add_term(comp, if s > 0 { c.clone() } else { -c.clone() });
        }
        return Ok(out);
    }
    let root = rational_sqrt(&g.matrix().determinant()?)?;
    let scale = if o == Orientation::Positive { root } else { -root };
    Ok(hodge_up_to_scale(a, g)?.scale(&scale))
}

/// `∗a / sqrt(det g)` for the positive orientation: exact over Q for any
/// rational metric, and a positive multiple of the true Hodge dual.
pub fn hodge_up_to_scale(a: &Form, g: &Metric) -> Result<Form> {
    if a.dim() != g.dim() {
        return Err(Error::DimensionMismatch { left: a.dim(), right: g.dim() });
    }
    let n = a.dim();
    let ginv = g.matrix().inverse()?;
    let mut out = Form::zero(n);
    for k in 0..=n {
        let part = a.grade_part(k);
        if part.is_zero() {
            continue;
        }
        for target in blades_of_grade(n, k) {
            let ti = target.indices();
            let mut inner = Rational::zero();
            for (b, c) in part.terms() {
                let bi = b.indices();
                let mut sub = QMatrix::zeros(k, k);
                for (r, &x) in ti.iter().enumerate() {
                    for (s, &y) in bi.iter().enumerate() {
                        sub[(r, s)] = ginv[(x - 1, y - 1)].clone();
                    }
                }
                inner += c * sub.determinant()?;
            }
            if inner.is_zero() {
                continue;
            }
            let comp = target.complement(n);
            let s = merge_sign(target, comp).expect("complementary blades");
            out.add_term(comp, if s > 0 { inner } else { -inner });
        }
    }
    Ok(out)
}
