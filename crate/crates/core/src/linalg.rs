//! Homogeneous linear systems over the rationals and exact elimination.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Exact rational scalar, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// One homogeneous equation `Σ coeff·x_var = 0`, stored sparsely with
/// strictly increasing variable indices and no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    terms: Vec<(usize, Rational)>,
    pub tag: String,
}

impl Equation {
    pub fn from_terms(
        terms: impl IntoIterator<Item = (usize, Rational)>,
        tag: impl Into<String>,
    ) -> Self {
        let mut merged: BTreeMap<usize, Rational> = BTreeMap::new();
        for (var, c) in terms {
            *merged.entry(var).or_insert_with(Rational::zero) += c;
        }
        Equation {
            terms: merged.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
            tag: tag.into(),
        }
    }

    pub fn from_dense(row: &[Rational], tag: impl Into<String>) -> Self {
        Equation::from_terms(row.iter().cloned().enumerate(), tag)
    }

    /// `Σ_{v∈a} x_v − Σ_{v∈b} x_v = 0`.
    pub fn set_difference(a: &VertexSet, b: &VertexSet, tag: impl Into<String>) -> Self {
        let plus = a.iter().map(|v| (v, Rational::one()));
        let minus = b.iter().map(|v| (v, -Rational::one()));
        Equation::from_terms(plus.chain(minus), tag)
    }

    pub fn terms(&self) -> &[(usize, Rational)] {
        &self.terms
    }

    pub fn coeff(&self, var: usize) -> Rational {
        match self.terms.binary_search_by_key(&var, |(v, _)| *v) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_var(&self) -> Option<usize> {
        self.terms.last().map(|(v, _)| *v)
    }

    pub fn to_dense(&self, num_vars: usize) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); num_vars];
        for (v, c) in &self.terms {
            row[*v] = c.clone();
        }
        row
    }

    pub fn dot(&self, w: &[Rational]) -> Rational {
        self.terms.iter().map(|(v, c)| c * &w[*v]).sum()
    }

    /// Moves coefficient of variable `i` to `map[i]`.
    pub fn remapped(&self, map: &[usize]) -> Equation {
        Equation::from_terms(
            self.terms.iter().map(|(v, c)| (map[*v], c.clone())),
            self.tag.clone(),
        )
    }

    pub fn with_tag(mut self, tag: impl Into<String>) -> Self {
        self.tag = tag.into();
        self
    }
}

impl fmt::Display for Equation {
    /// Renders like `-x_3 + x_4 - x_5 = 0`, variables 1-indexed.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0 = 0");
        }
        for (i, (v, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if !magnitude.is_one() {
                write!(f, "{magnitude}·")?;
            }
            write!(f, "x_{}", v + 1)?;
        }
        write!(f, " = 0")
    }
}

/// A homogeneous system `A x = 0` with one variable per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<Equation>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            rows: Vec::new(),
        }
    }

    pub fn from_rows(num_vars: usize, rows: Vec<Equation>) -> Result<Self> {
        let mut s = LinearSystem::new(num_vars);
        for row in rows {
            s.push(row)?;
        }
        Ok(s)
    }

    pub fn from_dense(num_vars: usize, rows: &[Vec<Rational>]) -> Result<Self> {
        let mut s = LinearSystem::new(num_vars);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != num_vars {
                return Err(Error::DimensionMismatch {
                    expected: num_vars,
                    found: row.len(),
                });
            }
            s.push(Equation::from_dense(row, format!("row {i}")))?;
        }
        Ok(s)
    }

    pub fn from_integers(num_vars: usize, rows: &[&[i64]]) -> Result<Self> {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&c| int(c)).collect())
            .collect();
        LinearSystem::from_dense(num_vars, &dense)
    }

    pub fn push(&mut self, row: Equation) -> Result<()> {
        if let Some(v) = row.max_var().filter(|&v| v >= self.num_vars) {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: v + 1,
            });
        }
        self.rows.push(row);
        Ok(())
    }

    /// Appends rows of another system over the same variables.
    pub fn extend(&mut self, other: LinearSystem) -> Result<()> {
        if other.num_vars != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: other.num_vars,
            });
        }
        self.rows.extend(other.rows);
        Ok(())
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn rows(&self) -> &[Equation] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Equation> {
        self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        self.rows
            .iter()
            .map(|r| r.to_dense(self.num_vars))
            .collect()
    }

    /// Every coefficient in {-1, 0, 1}.
    pub fn is_unit(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| r.terms.iter())
            .all(|(_, c)| c.is_integer() && c.numer().magnitude().is_one())
    }

    pub fn is_integer(&self) -> bool {
        self.rows
            .iter()
            .flat_map(|r| r.terms.iter())
            .all(|(_, c)| c.is_integer())
    }

    pub fn rank(&self) -> usize {
        Echelon::build(self).pivots.len()
    }

    pub fn extract_independent(&self) -> LinearSystem {
        let echelon = Echelon::build(self);
        let rows = echelon
            .accepted
            .iter()
            .map(|&i| self.rows[i].clone())
            .collect();
        LinearSystem {
            num_vars: self.num_vars,
            rows,
        }
    }

    pub fn null_space(&self) -> Basis {
        Echelon::build(self).null_space(self.num_vars)
    }

    pub fn satisfied_by(&self, w: &WeightVector) -> Result<bool> {
        if w.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                found: w.len(),
            });
        }
        Ok(self.rows.iter().all(|r| r.dot(&w.0).is_zero()))
    }
}

impl fmt::Display for LinearSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            writeln!(f, "{row}")?;
        }
        Ok(())
    }
}

/// Vertex-indexed weighting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(pub Vec<Rational>);

impl WeightVector {
    pub fn from_integers(values: &[i64]) -> Self {
        WeightVector(values.iter().map(|&v| int(v)).collect())
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![Rational::one(); n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Total weight of a vertex set.
    pub fn weight_of(&self, s: &VertexSet) -> Rational {
        s.iter().map(|v| &self.0[v]).sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Linearly independent weightings spanning a solution space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub vectors: Vec<WeightVector>,
}

impl Basis {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

/// Incremental Gauss–Jordan elimination over the rationals.
///
/// Rows are reduced in input order against the pivot rows found so far; a row
/// that does not vanish is accepted and its first nonzero column becomes a new
/// pivot. Pivot rows are kept normalised (pivot entry 1) and cleared in every
/// other pivot column, so the final set is in reduced row echelon form.
/// Columns absent from every row are never touched: elimination runs over the
/// compacted list of used columns.
struct Echelon {
    columns: Vec<usize>,
    /// (pivot position in `columns`, reduced row over `columns`)
    pivots: Vec<(usize, Vec<Rational>)>,
    accepted: Vec<usize>,
}

impl Echelon {
    fn build(s: &LinearSystem) -> Echelon {
        let mut columns: Vec<usize> = s
            .rows
            .iter()
            .flat_map(|r| r.terms.iter().map(|(v, _)| *v))
            .collect();
        columns.sort_unstable();
        columns.dedup();

        let mut e = Echelon {
            columns,
            pivots: Vec::new(),
            accepted: Vec::new(),
        };
        let width = e.columns.len();
        for (i, row) in s.rows.iter().enumerate() {
            if e.pivots.len() == width {
                break;
            }
            let mut dense = vec![Rational::zero(); width];
            for (v, c) in &row.terms {
                let pos = e.columns.binary_search(v).expect("column collected above");
                dense[pos] = c.clone();
            }
            if e.insert(dense) {
                e.accepted.push(i);
            }
        }
        e
    }

    fn insert(&mut self, mut row: Vec<Rational>) -> bool {
        for (p, pivot_row) in &self.pivots {
            if row[*p].is_zero() {
                continue;
            }
            let factor = row[*p].clone();
            for (target, source) in row.iter_mut().zip(pivot_row) {
                if !source.is_zero() {
                    *target -= &factor * source;
                }
            }
        }
        let Some(p) = row.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let lead = row[p].clone();
        for c in row.iter_mut().filter(|c| !c.is_zero()) {
            *c /= &lead;
        }
        for (_, pivot_row) in self.pivots.iter_mut() {
            if pivot_row[p].is_zero() {
                continue;
            }
            let factor = pivot_row[p].clone();
            for (target, source) in pivot_row.iter_mut().zip(&row) {
                if !source.is_zero() {
                    *target -= &factor * source;
                }
            }
        }
        self.pivots.push((p, row));
        true
    }

    /// One vector per free variable: that variable 1, other free variables 0.
    fn null_space(&self, num_vars: usize) -> Basis {
        let mut pivot_of_var: BTreeMap<usize, &Vec<Rational>> = BTreeMap::new();
        for (p, row) in &self.pivots {
            pivot_of_var.insert(self.columns[*p], row);
        }
        let mut vectors = Vec::new();
        for free in (0..num_vars).filter(|v| !pivot_of_var.contains_key(v)) {
            let mut w = vec![Rational::zero(); num_vars];
            w[free] = Rational::one();
            if let Ok(pos) = self.columns.binary_search(&free) {
                for (&pivot_var, row) in &pivot_of_var {
                    if !row[pos].is_zero() {
                        w[pivot_var] = -row[pos].clone();
                    }
                }
            }
            vectors.push(WeightVector(w));
        }
        Basis { vectors }
    }
}

pub fn rank(s: &LinearSystem) -> usize {
    s.rank()
}

/// Rows of `s` (tags kept, original order) forming a basis of its row space.
pub fn extract_independent_subsystem(s: &LinearSystem) -> LinearSystem {
    s.extract_independent()
}

pub fn null_space_basis(s: &LinearSystem) -> Basis {
    s.null_space()
}

pub fn same_solution_space(a: &LinearSystem, b: &LinearSystem) -> Result<bool> {
    if a.num_vars != b.num_vars {
        return Err(Error::DimensionMismatch {
            expected: a.num_vars,
            found: b.num_vars,
        });
    }
    let ra = a.rank();
    if ra != b.rank() {
        return Ok(false);
    }
    let mut both = a.clone();
    both.rows.extend(b.rows.iter().cloned());
    Ok(both.rank() == ra)
}

pub fn evaluate(s: &LinearSystem, w: &WeightVector) -> Result<bool> {
    s.satisfied_by(w)
}
