//! Exhaustive desk-scale verification suites over all shapes up to a size
//! bound. Each function either returns a statistics line for reporting or
//! the first failure found. Shapes are processed in parallel via rayon.

use crate::axioms::{check_queer_regular, check_regular};
use crate::error::{Error, Result};
use crate::graph::{shifted_crystal, young_crystal};
use crate::operators::{e_queer, e_shifted, f_queer, f_shifted, f_young};
use crate::polynomials::{
    expand_p_in_schur, expand_product_in_p, generating_poly, schur, schur_p, SymPolynomial,
};
use crate::rectification::{from_symmetric, rect, to_symmetric};
use crate::tableaux::{
    enumerate_ssht, enumerate_ssyt, partitions_of, strict_partitions_of, weight_shifted,
    weight_young, Partition, StrictPartition,
};
use num_bigint::BigInt;
use rayon::prelude::*;
use std::collections::{BTreeMap, HashMap};

fn all_partitions(max_size: usize) -> Vec<Partition> {
    (0..=max_size).flat_map(partitions_of).collect()
}

fn all_strict(max_size: usize) -> Vec<StrictPartition> {
    (0..=max_size).flat_map(strict_partitions_of).collect()
}

/// Young crystals are Stembridge-regular and generate Schur polynomials.
pub fn verify_young_crystals(max_size: usize, max_n: usize) -> Result<String> {
    let cases: Vec<(Partition, usize)> = all_partitions(max_size)
        .into_iter()
        .flat_map(|p| (1..=max_n).map(move |n| (p.clone(), n)))
        .collect();
    let count = cases.len();
    cases.par_iter().try_for_each(|(shape, n)| {
        let g = young_crystal(shape, *n)?;
        let report = check_regular(&g);
        if !report.passed {
            return Err(Error::Verification(format!(
                "Stembridge axioms fail on SSYT{}({}): {report}",
                n,
                shape
            )));
        }
        if generating_poly(&g, *n)? != schur(shape, *n) {
            return Err(Error::Verification(format!(
                "generating polynomial of SSYT{}({}) is not the Schur polynomial",
                n, shape
            )));
        }
        Ok(())
    })?;
    Ok(format!("{count} Young crystals regular"))
}

/// Shifted crystals are Stembridge-regular; with the queer edges they are
/// queer regular; sources give the Schur expansion of the Schur P
/// polynomial.
pub fn verify_shifted_crystals(max_size: usize, ns: &[usize]) -> Result<String> {
    let cases: Vec<(StrictPartition, usize)> = all_strict(max_size)
        .into_iter()
        .flat_map(|p| ns.iter().map(move |&n| (p.clone(), n)))
        .collect();
    let count = cases.len();
    cases.par_iter().try_for_each(|(shape, n)| {
        let plain = shifted_crystal(shape, *n, false)?;
        let report = check_regular(&plain);
        if !report.passed {
            return Err(Error::Verification(format!(
                "Stembridge axioms fail on SSHT{}({}): {report}",
                n, shape
            )));
        }
        let queer = shifted_crystal(shape, *n, true)?;
        let report = check_queer_regular(&queer);
        if !report.passed {
            return Err(Error::Verification(format!(
                "queer axioms fail on SSHT{}({}): {report}",
                n, shape
            )));
        }
        // Schur expansion identity; expand_p_in_schur verifies the sum
        // reconstructs P exactly
        expand_p_in_schur(shape, *n)?;
        Ok(())
    })?;
    Ok(format!("{count} shifted crystals regular and queer regular"))
}

/// f operators are injective on their nonzero support and pair with e as
/// mutual inverses, including the queer pair.
pub fn verify_operator_pairing(max_size: usize, ns: &[usize]) -> Result<String> {
    let cases: Vec<(StrictPartition, usize)> = all_strict(max_size)
        .into_iter()
        .flat_map(|p| ns.iter().map(move |&n| (p.clone(), n)))
        .collect();
    let checked: usize = cases
        .par_iter()
        .map(|(shape, n)| -> Result<usize> {
            let all = enumerate_ssht(shape, *n);
            let mut moves = 0usize;
            for i in 1..*n {
                let mut images: HashMap<String, String> = HashMap::new();
                for t in &all {
                    if let Some(ft) = f_shifted(t, i) {
                        moves += 1;
                        if let Some(prev) = images.insert(ft.id(), t.id()) {
                            return Err(Error::Verification(format!(
                                "f_{i} not injective: {} and {} both map to {}",
                                prev,
                                t.id(),
                                ft.id()
                            )));
                        }
                        let back = e_shifted(&ft, i, *n)?;
                        if back.as_ref() != Some(t) {
                            return Err(Error::Verification(format!(
                                "e_{i}(f_{i}({})) != id",
                                t.id()
                            )));
                        }
                    }
                    if let Some(et) = e_shifted(t, i, *n)? {
                        if f_shifted(&et, i).as_ref() != Some(t) {
                            return Err(Error::Verification(format!(
                                "f_{i}(e_{i}({})) != id",
                                t.id()
                            )));
                        }
                    }
                }
            }
            let mut images: HashMap<String, String> = HashMap::new();
            for t in &all {
                if let Some(ft) = f_queer(t) {
                    moves += 1;
                    if let Some(prev) = images.insert(ft.id(), t.id()) {
                        return Err(Error::Verification(format!(
                            "f_0 not injective: {} and {} both map to {}",
                            prev,
                            t.id(),
                            ft.id()
                        )));
                    }
                    let back = e_queer(&ft, *n)?;
                    if back.as_ref() != Some(t) {
                        return Err(Error::Verification(format!(
                            "e_0(f_0({})) != id",
                            t.id()
                        )));
                    }
                }
            }
            Ok(moves)
        })
        .try_reduce(|| 0, |a, b| Ok(a + b))?;
    Ok(format!("{checked} operator applications paired with inverses"))
}

/// Rectification: reflection round-trips, rect is a weight-preserving
/// bijection onto the union of SSYT over the source weights, and rect
/// commutes with the lowering operators.
pub fn verify_rectification(max_size: usize, ns: &[usize]) -> Result<String> {
    let cases: Vec<(StrictPartition, usize)> = all_strict(max_size)
        .into_iter()
        .flat_map(|p| ns.iter().map(move |&n| (p.clone(), n)))
        .collect();
    let count = cases.len();
    cases.par_iter().try_for_each(|(shape, n)| {
        let all = enumerate_ssht(shape, *n);
        let mut fibers: BTreeMap<String, usize> = BTreeMap::new();
        let mut image_shape: BTreeMap<String, Vec<usize>> = BTreeMap::new();
        for t in &all {
            let s = to_symmetric(t);
            let back = from_symmetric(s.filling())?;
            if back != *t {
                return Err(Error::Verification(format!(
                    "symmetric round-trip fails at {}",
                    t.id()
                )));
            }
            let y = rect(t)?;
            if weight_young(&y, *n)? != weight_shifted(t, *n)? {
                return Err(Error::Verification(format!(
                    "rect changed the weight of {}",
                    t.id()
                )));
            }
            *fibers.entry(y.id()).or_insert(0) += 1;
            image_shape.insert(y.id(), y.shape().parts().to_vec());
            for i in 1..*n {
                let lhs = match f_shifted(t, i) {
                    Some(ft) => Some(rect(&ft)?),
                    None => None,
                };
                let rhs = f_young(&y, i);
                if lhs != rhs {
                    return Err(Error::Verification(format!(
                        "rect does not commute with f_{i} at {}",
                        t.id()
                    )));
                }
            }
        }
        // the multiset of images is exactly the disjoint union of SSYT over
        // source weights: each tableau of shape mu occurs once per source of
        // weight mu (so fibers have size = the Schur coefficient of s_mu)
        let g = shifted_crystal(shape, *n, false)?;
        let colors: Vec<usize> = (1..*n).collect();
        let mut mult: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for &v in &g.sources(&colors) {
            let mut w = g.vertices()[v].weight.as_ref().unwrap().0.clone();
            while w.last() == Some(&0) {
                w.pop();
            }
            *mult.entry(w).or_insert(0) += 1;
        }
        let mut expected: BTreeMap<String, usize> = BTreeMap::new();
        for (w, m) in &mult {
            let lambda = Partition::new(w.clone())?;
            for y in enumerate_ssyt(&lambda, *n) {
                expected.insert(y.id(), *m);
            }
        }
        if fibers != expected {
            return Err(Error::Verification(format!(
                "rect image multiset differs from source prediction on SSHT{n}({shape})"
            )));
        }
        for (id, mu) in &image_shape {
            if mult.get(mu).copied().unwrap_or(0) != fibers[id] {
                return Err(Error::Verification(format!(
                    "fiber of {id} has size {} but {:?} occurs as a source weight {} times",
                    fibers[id],
                    mu,
                    mult.get(mu).copied().unwrap_or(0)
                )));
            }
        }
        Ok(())
    })?;
    Ok(format!("{count} rectification suites passed"))
}

/// Products of Schur P polynomials expand with nonnegative integer
/// coefficients, and the expansion reconstructs the product exactly.
pub fn verify_products(max_total: usize) -> Result<String> {
    let mut pairs = Vec::new();
    for a in 0..=max_total {
        for gamma in strict_partitions_of(a) {
            for b in 0..=max_total - a {
                for delta in strict_partitions_of(b) {
                    pairs.push((gamma.clone(), delta));
                }
            }
        }
    }
    let count = pairs.len();
    pairs.par_iter().try_for_each(|(gamma, delta)| {
        let expansion = expand_product_in_p(gamma, delta, true)?;
        let n = (gamma.size() + delta.size()).max(1);
        let mut total = SymPolynomial::zero(n);
        for e in &expansion {
            let mu = StrictPartition::new(e.shape.clone())?;
            let coef: BigInt = e
                .coef
                .parse()
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", e.coef)))?;
            total = total.add(&schur_p(&mu, n).scale(&coef));
        }
        if total != schur_p(gamma, n).mul(&schur_p(delta, n)) {
            return Err(Error::Verification(format!(
                "P-expansion does not reconstruct P{} * P{}",
                gamma, delta
            )));
        }
        Ok(())
    })?;
    Ok(format!("{count} Schur P products positive and exact"))
}

/// The full suite: every line is (description, outcome).
pub fn selftest(max_size: usize, max_n: usize) -> Vec<(String, Result<String>)> {
    let ns: Vec<usize> = (2..=max_n).collect();
    vec![
        (
            "Young crystals satisfy A1-A6 and generate Schur polynomials".into(),
            verify_young_crystals(max_size, max_n),
        ),
        (
            "shifted crystals satisfy A1-A6 and B0-B6; sources give the Schur expansion".into(),
            verify_shifted_crystals(max_size, &ns),
        ),
        (
            "lowering operators are injective and invert against raising".into(),
            verify_operator_pairing(max_size, &ns),
        ),
        (
            "rectification round-trips, is a weight-preserving bijection, and commutes".into(),
            verify_rectification(max_size, &ns),
        ),
        (
            "Schur P products are Schur P positive".into(),
            verify_products(max_size),
        ),
    ]
}
