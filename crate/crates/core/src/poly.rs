//! Integer polynomials and matrices of polynomials in `n` variables.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::monomial::ExponentVector;

/// `sign * z^exp`, with `sign == 0` the zero entry.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedMonomial {
    pub sign: i8,
    pub exp: ExponentVector,
}

impl SignedMonomial {
    pub fn zero(n: usize) -> Self {
        SignedMonomial {
            sign: 0,
            exp: ExponentVector::zero(n),
        }
    }

    pub fn new(sign: i8, exp: ExponentVector) -> Self {
        if sign == 0 {
            return Self::zero(exp.len());
        }
        SignedMonomial { sign, exp }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn to_poly(&self) -> Poly {
        if self.is_zero() {
            Poly::zero()
        } else {
            Poly::monomial(BigInt::from(self.sign), self.exp.clone())
        }
    }
}

#[derive(Clone, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<ExponentVector, BigInt>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*{}", e.to_monomial_string()))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(coeff: BigInt, exp: ExponentVector) -> Self {
        let mut p = Poly::zero();
        p.add_term(exp, coeff);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exp: &ExponentVector) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add_term(&mut self, exp: ExponentVector, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp.clone()).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                out.add_term(e1.checked_add(e2)?, c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn one(n: usize) -> Poly {
        Poly::monomial(BigInt::one(), ExponentVector::zero(n))
    }
}

/// Dense matrix of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Poly>>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            entries: vec![vec![Poly::zero(); cols]; rows],
        }
    }

    pub fn from_monomials(m: &[Vec<SignedMonomial>], rows: usize, cols: usize) -> Self {
        let mut out = Self::zeros(rows, cols);
        for (i, row) in m.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                out.entries[i][j] = e.to_poly();
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.entries[i][j] = p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Poly::is_zero)
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::MatrixShape(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.entries[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other.entries[k][j];
                    if !b.is_zero() {
                        out.entries[i][j] = out.entries[i][j].add(&a.mul(b)?);
                    }
                }
            }
        }
        Ok(out)
    }

    /// First column (in order) where the two matrices differ.
    pub fn first_difference(&self, other: &PolyMatrix) -> Option<(usize, usize)> {
        if self.rows != other.rows || self.cols != other.cols {
            return Some((0, 0));
        }
        (0..self.cols)
            .flat_map(|j| (0..self.rows).map(move |i| (i, j)))
            .find(|&(i, j)| self.entries[i][j] != other.entries[i][j])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(c: i64, e: &[u32]) -> Poly {
        Poly::monomial(BigInt::from(c), ExponentVector::from(e.to_vec()))
    }

    #[test]
    fn arithmetic_cancels() {
        let p = mono(2, &[1, 0]).add(&mono(-1, &[0, 1]));
        let q = mono(1, &[0, 1]).add(&mono(2, &[1, 0]).neg());
        assert!(p.add(&q).add(&mono(1, &[0, 1])).add(&mono(-1, &[0, 1])).is_zero());
        // (z - w)(z + w) = z^2 - w^2
        let s = mono(1, &[1, 0]).add(&mono(-1, &[0, 1]));
        let t = mono(1, &[1, 0]).add(&mono(1, &[0, 1]));
        let prod = s.mul(&t).unwrap();
        assert_eq!(prod, mono(1, &[2, 0]).add(&mono(-1, &[0, 2])));
    }

    #[test]
    fn koszul_square_is_zero() {
        // [z, w] * [-w; z] = 0
        let row = PolyMatrix {
            rows: 1,
            cols: 2,
            entries: vec![vec![mono(1, &[1, 0]), mono(1, &[0, 1])]],
        };
        let col = PolyMatrix {
            rows: 2,
            cols: 1,
            entries: vec![vec![mono(-1, &[0, 1])], vec![mono(1, &[1, 0])]],
        };
        assert!(row.mul(&col).unwrap().is_zero());
        assert!(col.mul(&col).is_err());
    }
}
