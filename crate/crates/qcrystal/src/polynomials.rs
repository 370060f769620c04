//! Exact multivariate polynomials over the integers, Schur and Schur P
//! generating functions read off crystal vertex weights, and expansions
//! between the two bases.

use crate::error::{Error, Result};
use crate::graph::ColoredDigraph;
use crate::tableaux::{partitions_of, strict_partitions_of, Partition, StrictPartition};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;
use std::fmt;

/// A polynomial in `nvars` variables with integer coefficients, stored as
/// exponent vector -> coefficient. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPolynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPolynomial {
    pub fn zero(nvars: usize) -> Self {
        SymPolynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        assert_eq!(exp.len(), self.nvars, "exponent arity mismatch");
        if coef.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coef;
        if entry.is_zero() {
            // re-borrow to remove: find the key we just zeroed
            let key = self
                .terms
                .iter()
                .find(|(_, v)| v.is_zero())
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &BigInt) -> SymPolynomial {
        if k.is_zero() {
            return SymPolynomial::zero(self.nvars);
        }
        SymPolynomial {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    pub fn sub(&self, other: &SymPolynomial) -> SymPolynomial {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn mul(&self, other: &SymPolynomial) -> SymPolynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SymPolynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Widens or narrows the variable count. Narrowing requires every term
    /// to have zero exponents in the dropped variables.
    pub fn with_nvars(&self, nvars: usize) -> Result<SymPolynomial> {
        let mut out = SymPolynomial::zero(nvars);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            if nvars >= self.nvars {
                exp.resize(nvars, 0);
            } else {
                if e[nvars..].iter().any(|&x| x != 0) {
                    return Err(Error::Verification(format!(
                        "cannot restrict to {nvars} variables: a term uses more"
                    )));
                }
                exp.truncate(nvars);
            }
            out.add_term(exp, c.clone());
        }
        Ok(out)
    }

    /// Exact evaluation at integer points.
    pub fn eval(&self, point: &[BigInt]) -> BigInt {
        assert_eq!(point.len(), self.nvars);
        let mut total = BigInt::zero();
        for (e, c) in &self.terms {
            let mut term = c.clone();
            for (x, &k) in point.iter().zip(e) {
                term *= x.pow(k);
            }
            total += term;
        }
        total
    }

    /// True when invariant under every adjacent variable transposition.
    pub fn is_symmetric(&self) -> bool {
        for k in 0..self.nvars.saturating_sub(1) {
            for (e, c) in &self.terms {
                let mut swapped = e.clone();
                swapped.swap(k, k + 1);
                if self.coefficient(&swapped) != *c {
                    return false;
                }
            }
        }
        true
    }

    /// The lexicographically greatest exponent vector, with its coefficient.
    pub fn leading_term(&self) -> Option<(&Vec<u32>, &BigInt)> {
        self.terms.iter().next_back()
    }
}

impl fmt::Display for SymPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // descending lex, matching hand-written displays
        let mut first = true;
        for (e, c) in self.terms.iter().rev() {
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let mag = c.abs();
            let monomial: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|&(_, &k)| k > 0)
                .map(|(i, &k)| {
                    if k == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, k)
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", monomial.join("*"))?;
            } else {
                write!(f, "{}*{}", mag, monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exp: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

pub fn poly_to_json(p: &SymPolynomial) -> serde_json::Value {
    let doc = PolyJson {
        nvars: p.nvars,
        terms: p
            .terms
            .iter()
            .map(|(e, c)| TermJson {
                exp: e.clone(),
                coef: c.to_string(),
            })
            .collect(),
    };
    serde_json::to_value(doc).expect("polynomial serialization cannot fail")
}

pub fn poly_from_json(value: &serde_json::Value) -> Result<SymPolynomial> {
    let doc: PolyJson = serde_json::from_value(value.clone())?;
    let mut out = SymPolynomial::zero(doc.nvars);
    for t in doc.terms {
        if t.exp.len() != doc.nvars {
            return Err(Error::Parse(format!(
                "exponent vector of length {} in a {}-variable polynomial",
                t.exp.len(),
                doc.nvars
            )));
        }
        let coef: BigInt = t
            .coef
            .parse()
            .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coef)))?;
        out.add_term(t.exp, coef);
    }
    Ok(out)
}

/// Sums x^wt(v) over the vertices of a crystal graph.
pub fn generating_poly(g: &ColoredDigraph, nvars: usize) -> Result<SymPolynomial> {
    let mut out = SymPolynomial::zero(nvars);
    for v in g.vertices() {
        let w = v
            .weight
            .as_ref()
            .ok_or_else(|| Error::Verification(format!("vertex {} carries no weight", v.id)))?;
        if w.0.len() != nvars {
            return Err(Error::Verification(format!(
                "weight arity {} != {nvars} at vertex {}",
                w.0.len(),
                v.id
            )));
        }
        out.add_term(w.0.iter().map(|&x| x as u32).collect(), BigInt::one());
    }
    Ok(out)
}

/// The Schur polynomial s_lambda(x_1..x_n), by direct tableau enumeration.
pub fn schur(shape: &Partition, n: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(n);
    for t in crate::tableaux::enumerate_ssyt(shape, n) {
        let w = crate::tableaux::weight_young(&t, n).expect("enumerated tableaux are valid");
        out.add_term(w.0.iter().map(|&x| x as u32).collect(), BigInt::one());
    }
    out
}

/// The Schur P polynomial P_gamma(x_1..x_n), by shifted tableau enumeration.
pub fn schur_p(shape: &StrictPartition, n: usize) -> SymPolynomial {
    let mut out = SymPolynomial::zero(n);
    for t in crate::tableaux::enumerate_ssht(shape, n) {
        let w = crate::tableaux::weight_shifted(&t, n).expect("enumerated tableaux are valid");
        out.add_term(w.0.iter().map(|&x| x as u32).collect(), BigInt::one());
    }
    out
}

/// One term of a basis expansion.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Expansion {
    pub shape: Vec<usize>,
    pub coef: String,
}

/// Expands P_gamma into Schur polynomials by reading the sources of the
/// Stembridge-regular part of the shifted crystal: each source of weight mu
/// contributes s_mu. The identity sum(s) = P_gamma is verified exactly.
pub fn expand_p_in_schur(shape: &StrictPartition, n: usize) -> Result<Vec<Expansion>> {
    let g = crate::graph::shifted_crystal(shape, n, false)?;
    let mut counts: BTreeMap<Vec<usize>, BigInt> = BTreeMap::new();
    for &v in &g.sources(&(1..n).collect::<Vec<_>>()) {
        let mut w = g.vertices()[v]
            .weight
            .as_ref()
            .expect("crystal vertices carry weights")
            .0
            .clone();
        while w.last() == Some(&0) {
            w.pop();
        }
        *counts.entry(w).or_insert_with(BigInt::zero) += 1;
    }
    // every source weight must itself be a partition
    let mut total = SymPolynomial::zero(n);
    let mut out = Vec::new();
    for (w, c) in counts.iter().rev() {
        let lambda = Partition::new(w.clone())?;
        total = total.add(&schur(&lambda, n).scale(c));
        out.push(Expansion {
            shape: w.clone(),
            coef: c.to_string(),
        });
    }
    let p = schur_p(shape, n);
    if total != p {
        return Err(Error::Verification(format!(
            "Schur expansion of P_{:?} does not reproduce the polynomial",
            shape.parts()
        )));
    }
    Ok(out)
}

/// Expands P_gamma * P_delta in the Schur P basis by leading-monomial
/// elimination at n = |gamma| + |delta| variables, where P polynomials
/// indexed by strict partitions of each degree are triangular. Verifies
/// that every coefficient is a nonnegative integer.
pub fn expand_product_in_p(
    gamma: &StrictPartition,
    delta: &StrictPartition,
    check_positive: bool,
) -> Result<Vec<Expansion>> {
    let d = gamma.size() + delta.size();
    let n = d.max(1);
    let mut rem = schur_p(gamma, n).mul(&schur_p(delta, n));
    let mut out = Vec::new();
    while let Some((lead, coef)) = rem.leading_term() {
        let coef = coef.clone();
        // the leading exponent of a homogeneous degree-d product of P's is
        // a strict partition of d
        let parts: Vec<usize> = lead
            .iter()
            .take_while(|&&x| x > 0)
            .map(|&x| x as usize)
            .collect();
        if lead[parts.len()..].iter().any(|&x| x != 0) {
            return Err(Error::Verification(
                "leading monomial is not a partition".into(),
            ));
        }
        let mu = StrictPartition::new(parts.clone()).map_err(|_| {
            Error::Verification(format!("leading monomial {parts:?} is not strict"))
        })?;
        if check_positive && coef.is_negative() {
            return Err(Error::Verification(format!(
                "negative structure constant {coef} at {parts:?}"
            )));
        }
        rem = rem.sub(&schur_p(&mu, n).scale(&coef));
        out.push(Expansion {
            shape: parts,
            coef: coef.to_string(),
        });
    }
    Ok(out)
}

/// All strict partitions mu of |gamma| + |delta| not appearing in an
/// expansion get coefficient 0; callers wanting a dense table use this.
pub fn dense_expansion(size: usize, sparse: &[Expansion]) -> Vec<Expansion> {
    let lookup: BTreeMap<&[usize], &str> = sparse
        .iter()
        .map(|e| (e.shape.as_slice(), e.coef.as_str()))
        .collect();
    strict_partitions_of(size)
        .into_iter()
        .map(|mu| Expansion {
            coef: lookup.get(mu.parts()).unwrap_or(&"0").to_string(),
            shape: mu.parts().to_vec(),
        })
        .collect()
}

/// Checks that a polynomial equals the indicated combination of Schur
/// polynomials (exact, all partitions of `size` considered).
pub fn schur_support(p: &SymPolynomial, size: usize) -> Result<Vec<Expansion>> {
    let n = p.nvars();
    let mut rem = p.clone();
    let mut out = Vec::new();
    for lambda in partitions_of(size).into_iter().rev() {
        if lambda.len() > n {
            continue;
        }
        let mut exp: Vec<u32> = lambda.parts().iter().map(|&x| x as u32).collect();
        exp.resize(n, 0);
        let c = rem.coefficient(&exp);
        if c.is_zero() {
            continue;
        }
        rem = rem.sub(&schur(&lambda, n).scale(&c));
        out.push(Expansion {
            shape: lambda.parts().to_vec(),
            coef: c.to_string(),
        });
    }
    if !rem.is_zero() {
        return Err(Error::Verification(
            "polynomial is not a combination of Schur polynomials of this degree".into(),
        ));
    }
    Ok(out)
}
