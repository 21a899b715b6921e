//! Lattice curves of words and their winding numbers.
//!
//! The curve of a word starts at the origin and takes one unit step per
//! letter: right/left for `x^±1`, up/down for `y^±1`. For a word in `F2'` the
//! curve is closed, and the coefficient of `X^i Y^j` in the winding invariant
//! is its winding number around `(i + 1/2, j + 1/2)`, counterclockwise
//! positive.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;
use crate::word::{Generator, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticePath {
    vertices: Vec<(i64, i64)>,
}

impl LatticePath {
    pub fn vertices(&self) -> &[(i64, i64)] {
        &self.vertices
    }

    pub fn is_closed(&self) -> bool {
        self.vertices.first() == self.vertices.last()
    }

    /// `(min_x, min_y, max_x, max_y)` over all vertices.
    pub fn bounding_box(&self) -> (i64, i64, i64, i64) {
        self.vertices
            .iter()
            .fold((0, 0, 0, 0), |(a, b, c, d), &(x, y)| {
                (a.min(x), b.min(y), c.max(x), d.max(y))
            })
    }
}

pub fn curve_points(w: &Word) -> LatticePath {
    let mut vertices = Vec::with_capacity(w.len() + 1);
    let mut at = (0i64, 0i64);
    vertices.push(at);
    for l in w.letters() {
        let (dx, dy) = l.step();
        at = (at.0 + dx, at.1 + dy);
        vertices.push(at);
    }
    LatticePath { vertices }
}

fn require_closed(w: &Word) -> Result<()> {
    let (exp_x, exp_y) = w.exponents();
    if (exp_x, exp_y) != (0, 0) {
        return Err(Error::NotInDerivedSubgroup { exp_x, exp_y });
    }
    Ok(())
}

/// Winding invariant `P_w`.
///
/// Every vertical unit edge of the curve is recorded as `(column, row, sign)`:
/// an up-step from `(a, b)` gives `(a, b, +1)` and a down-step from `(a, b)`
/// gives `(a, b - 1, -1)`. The coefficient of square `(i, j)` counts the
/// signed edges `(a, j, s)` with `a > i`, i.e. the crossings of a rightward
/// ray from the square's center. Each row is summed from the right.
pub fn winding_invariant(w: &Word) -> Result<LaurentPoly> {
    require_closed(w)?;
    let mut rows: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
    let (mut a, mut b) = (0i64, 0i64);
    for l in w.letters() {
        match l.gen() {
            Generator::X => a += l.sign(),
            Generator::Y => {
                if l.sign() > 0 {
                    rows.entry(b).or_default().push((a, 1));
                    b += 1;
                } else {
                    rows.entry(b - 1).or_default().push((a, -1));
                    b -= 1;
                }
            }
        }
    }
    let mut out = LaurentPoly::zero();
    for (row, mut edges) in rows {
        edges.sort_unstable();
        // Merge edges sharing a column, right to left.
        let mut merged: Vec<(i64, i64)> = Vec::new();
        for (col, s) in edges.into_iter().rev() {
            match merged.last_mut() {
                Some((c, acc)) if *c == col => *acc += s,
                _ => merged.push((col, s)),
            }
        }
        let mut running = 0i64;
        for (k, &(col, s)) in merged.iter().enumerate() {
            running += s;
            // Squares i with next_col <= i < col see exactly the edges
            // at columns >= col.
            let lo = merged.get(k + 1).map_or(col, |&(c, _)| c);
            if running != 0 {
                for i in lo..col {
                    out.add_term(i, row, BigInt::from(running));
                }
            }
        }
        debug_assert_eq!(running, 0, "closed curve must balance in every row");
    }
    Ok(out)
}

/// Brute-force winding numbers, independent of [`winding_invariant`].
///
/// For every square in the bounding box padded by one, a ray is cast to the
/// right from the square's center and every vertical edge of the curve is
/// tested for a crossing. Coordinates are doubled so the test is exact.
pub fn winding_oracle(w: &Word) -> Result<LaurentPoly> {
    require_closed(w)?;
    let path = curve_points(w);
    let edges: Vec<((i64, i64), (i64, i64))> = path
        .vertices()
        .windows(2)
        .map(|p| (p[0], p[1]))
        .filter(|(p, q)| p.0 == q.0)
        .collect();
    let (x0, y0, x1, y1) = path.bounding_box();
    let mut out = LaurentPoly::zero();
    for j in (y0 - 1)..=y1 {
        for i in (x0 - 1)..=x1 {
            let (cx, cy) = (2 * i + 1, 2 * j + 1);
            let mut wn = 0i64;
            for &((ex, ey0), (_, ey1)) in &edges {
                let (lo, hi) = (2 * ey0.min(ey1), 2 * ey0.max(ey1));
                if 2 * ex > cx && lo < cy && cy < hi {
                    wn += if ey1 > ey0 { 1 } else { -1 };
                }
            }
            let on_ring = i == x0 - 1 || i == x1 || j == y0 - 1 || j == y1;
            if on_ring {
                assert_eq!(wn, 0, "winding must vanish outside the curve's box");
            }
            out.add_term(i, j, BigInt::from(wn));
        }
    }
    Ok(out)
}

/// Winding invariant of `[u, z]` from that of `z`, where `shift` is the pair
/// of exponent sums of `u`: `P_[u,z] = (X^a Y^b - 1) P_z`.
pub fn commutator_winding(shift: (i64, i64), pz: &LaurentPoly) -> LaurentPoly {
    &pz.translate(shift) - pz
}

/// Winding invariant of the Engel word `e_m`, built by iterating
/// [`commutator_winding`] from `P_{e_1} = -1` instead of tracing the
/// exponentially long word.
pub fn engel_winding(m: usize) -> LaurentPoly {
    assert!(m >= 1);
    (1..m).fold(LaurentPoly::constant(-1), |p, _| {
        commutator_winding((0, 1), &p)
    })
}

/// Winding invariant of the basic commutator `e_{i,j}`: `i` commutators
/// with `x` applied to [`engel_winding`]`(j)`.
pub fn basic_commutator_winding(i: usize, j: usize) -> LaurentPoly {
    (0..i).fold(engel_winding(j), |p, _| commutator_winding((1, 0), &p))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{basic_commutator, engel_word, parse_word};

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn curve_examples() {
        assert_eq!(
            curve_points(&w("[x,y]")).vertices(),
            &[(0, 0), (1, 0), (1, 1), (0, 1), (0, 0)]
        );
        assert_eq!(curve_points(&Word::empty()).vertices(), &[(0, 0)]);
        let p = curve_points(&w("x^3"));
        assert_eq!(p.vertices(), &[(0, 0), (1, 0), (2, 0), (3, 0)]);
        assert!(!p.is_closed());
    }

    #[test]
    fn unit_square() {
        assert_eq!(winding_invariant(&w("[x,y]")).unwrap(), LaurentPoly::one());
        assert_eq!(winding_oracle(&w("[x,y]")).unwrap(), LaurentPoly::one());
        assert_eq!(
            winding_invariant(&w("[y,x]")).unwrap(),
            LaurentPoly::constant(-1)
        );
    }

    #[test]
    fn open_paths_rejected() {
        assert_eq!(
            winding_invariant(&w("x^2y")),
            Err(Error::NotInDerivedSubgroup { exp_x: 2, exp_y: 1 })
        );
        assert!(winding_oracle(&w("y")).is_err());
    }

    #[test]
    fn trivial_loops() {
        let u = w("xyx^2y^-3");
        let z = u.concat(&u.inverse());
        assert!(z.is_empty());
        assert!(winding_oracle(&z).unwrap().is_zero());
        // A retraced loop that is not freely trivial as written.
        let back = w("x y x^-1 y^-1 y x y^-1 x^-1");
        assert!(winding_oracle(&back).unwrap().is_zero());
    }

    #[test]
    fn engel_recursion_matches_words() {
        for m in 1..=12 {
            assert_eq!(
                winding_invariant(&engel_word(m).unwrap()).unwrap(),
                engel_winding(m),
                "m = {m}"
            );
        }
    }

    #[test]
    fn basic_commutator_recursion_matches_words() {
        for i in 0..=7 {
            for j in 1..=8 - i {
                let word = basic_commutator(i, j).unwrap();
                assert_eq!(
                    winding_invariant(&word).unwrap(),
                    basic_commutator_winding(i, j),
                    "i = {i}, j = {j}"
                );
            }
        }
    }
}
