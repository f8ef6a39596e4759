use alloc::vec::Vec;

use super::FpPoly;
use crate::{Error, Result};

/// Degrees of the irreducible factors of a quartic over `F_p`, ascending.
///
/// Linear factors are peeled off by exhaustive root search; what is left
/// (degree ≤ 4, root-free) is split by trial division by every monic
/// quadratic.
pub fn quartic_factor_pattern(poly: &FpPoly) -> Result<Vec<u32>> {
    if poly.degree() != Some(4) {
        return Err(Error::DegreeMismatch {
            expected: 4,
            found: poly.signed_degree(),
        });
    }
    let mut pattern: Vec<u32> = factor_small(poly)
        .into_iter()
        .flat_map(|(f, e)| core::iter::repeat(f.degree().unwrap() as u32).take(e as usize))
        .collect();
    pattern.sort_unstable();
    Ok(pattern)
}

/// Factorization into monic factors with multiplicities, complete whenever
/// every irreducible factor has degree ≤ 3 or the root-free part has degree
/// ≤ 5. A leftover factor is returned as-is.
pub fn factor_small(poly: &FpPoly) -> Vec<(FpPoly, u32)> {
    let field = *poly.field();
    let mut out: Vec<(FpPoly, u32)> = Vec::new();
    let mut rest = poly.monic();

    let peel = |rest: &mut FpPoly, factor: FpPoly, out: &mut Vec<(FpPoly, u32)>| {
        let mut e = 0;
        loop {
            let (q, r) = rest.div_rem(&factor);
            if !r.is_zero() {
                break;
            }
            *rest = q;
            e += 1;
        }
        if e > 0 {
            out.push((factor, e));
        }
    };

    for r in field.elements() {
        if rest.degree().unwrap_or(0) == 0 {
            break;
        }
        if rest.eval(r) == 0 {
            peel(&mut rest, FpPoly::linear(field, r), &mut out);
        }
    }
    if rest.degree().unwrap_or(0) >= 4 {
        'outer: for c1 in field.elements() {
            for c0 in field.elements() {
                let q = FpPoly::new(field, [c0, c1, 1]);
                if q.has_root() {
                    continue;
                }
                peel(&mut rest, q, &mut out);
                if rest.degree().unwrap_or(0) < 4 {
                    break 'outer;
                }
            }
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        out.push((rest, 1));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finitefield::PrimeField;
    use alloc::collections::BTreeMap;

    fn pattern(p: u64, c: &[i64]) -> Vec<u32> {
        quartic_factor_pattern(&FpPoly::from_i64(PrimeField::new(p).unwrap(), c)).unwrap()
    }

    #[test]
    fn examples() {
        // X^4 + 2X^3 + 26X^2 + 38X + 361 reduced mod 5
        assert_eq!(pattern(5, &[1, 3, 1, 2, 1]), [4]);
        assert_eq!(pattern(5, &[361, 38, 26, 2, 1]), [4]);
        // (X^2 + 1)^2 over F_3
        assert_eq!(pattern(3, &[1, 0, 2, 0, 1]), [2, 2]);
        assert_eq!(pattern(7, &[0, 0, 0, 0, 1]), [1, 1, 1, 1]);
        assert!(matches!(
            quartic_factor_pattern(&FpPoly::from_i64(PrimeField::new(7).unwrap(), &[1, 1])),
            Err(Error::DegreeMismatch { expected: 4, found: 1 })
        ));
    }

    /// All monic polynomials of degree `d` over F_p.
    fn monics(field: PrimeField, d: usize) -> Vec<FpPoly> {
        let p = field.modulus();
        let total = p.pow(d as u32);
        (0..total)
            .map(|mut k| {
                let mut c = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    c.push(k % p);
                    k /= p;
                }
                c.push(1);
                FpPoly::new(field, c)
            })
            .collect()
    }

    /// Oracle: multiply out every multiset of irreducibles with total degree 4.
    fn brute_force_patterns(p: u64) -> BTreeMap<Vec<u64>, Vec<u32>> {
        let field = PrimeField::new(p).unwrap();
        let mut irreducible: Vec<Vec<FpPoly>> = alloc::vec![Vec::new(); 5];
        for d in 1..=4 {
            let mut products = alloc::collections::BTreeSet::new();
            // products of two lower-degree monics cover every reducible one
            for d1 in 1..d {
                for a in monics(field, d1) {
                    for b in monics(field, d - d1) {
                        products.insert(a.mul(&b).coeffs().to_vec());
                    }
                }
            }
            irreducible[d] = monics(field, d)
                .into_iter()
                .filter(|f| !products.contains(f.coeffs()))
                .collect();
        }
        let mut table = BTreeMap::new();
        let shapes: [&[usize]; 5] = [&[4], &[1, 3], &[2, 2], &[1, 1, 2], &[1, 1, 1, 1]];
        for shape in shapes {
            let mut stack: Vec<(FpPoly, usize, usize)> = alloc::vec![(FpPoly::one(field), 0, 0)];
            while let Some((acc, pos, min_idx)) = stack.pop() {
                if pos == shape.len() {
                    let pat = shape.iter().map(|&d| d as u32).collect();
                    table.insert(acc.coeffs().to_vec(), pat);
                    continue;
                }
                let d = shape[pos];
                // nondecreasing index among equal degrees avoids duplicates
                let start = if pos > 0 && shape[pos - 1] == d { min_idx } else { 0 };
                for (i, g) in irreducible[d].iter().enumerate().skip(start) {
                    stack.push((acc.mul(g), pos + 1, i));
                }
            }
        }
        table
    }

    #[test]
    fn exhaustive_against_oracle() {
        for p in [3u64, 5] {
            let field = PrimeField::new(p).unwrap();
            let table = brute_force_patterns(p);
            let all = monics(field, 4);
            assert_eq!(table.len(), all.len(), "oracle covers every monic quartic");
            for f in all {
                assert_eq!(
                    quartic_factor_pattern(&f).unwrap(),
                    table[f.coeffs()],
                    "p = {p}, f = {f}"
                );
            }
        }
    }
}
