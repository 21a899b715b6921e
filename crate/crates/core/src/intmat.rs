//! Hermite and Smith normal forms over `Z`.
//!
//! Lattices are given by generating row vectors. [`HermiteBasis`] keeps an
//! echelon basis with positive pivots, updated one vector at a time, so that
//! thousands of generators never need to be stored at once. Quotients
//! `Z^d / L` are read off with [`smith_divisors`].

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Row-echelon basis of a sublattice of `Z^dim`, one row per pivot column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteBasis {
    dim: usize,
    rows: Vec<Option<Vec<BigInt>>>,
}

impl HermiteBasis {
    pub fn new(dim: usize) -> HermiteBasis {
        HermiteBasis {
            dim,
            rows: vec![None; dim],
        }
    }

    /// Basis of `m Z^dim`.
    pub fn scaled_identity(dim: usize, m: &BigInt) -> HermiteBasis {
        let mut h = HermiteBasis::new(dim);
        for c in 0..dim {
            let mut row = vec![BigInt::zero(); dim];
            row[c] = m.abs();
            h.rows[c] = Some(row);
        }
        h
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.iter().flatten().count()
    }

    /// `(column, pivot)` for every basis row.
    pub fn pivots(&self) -> impl Iterator<Item = (usize, &BigInt)> {
        self.rows
            .iter()
            .enumerate()
            .filter_map(|(c, r)| r.as_ref().map(|r| (c, &r[c])))
    }

    /// Basis rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &[BigInt]> {
        self.rows.iter().flatten().map(Vec::as_slice)
    }

    /// Adds `v` to the generating set. Returns whether the lattice grew.
    pub fn insert(&mut self, mut v: Vec<BigInt>) -> bool {
        assert_eq!(
            v.len(),
            self.dim,
            "vector length must match the lattice dimension"
        );
        let mut changed = false;
        for c in 0..self.dim {
            if v[c].is_zero() {
                continue;
            }
            let Some(row) = self.rows[c].take() else {
                if v[c].is_negative() {
                    v.iter_mut().for_each(|e| *e = -&*e);
                }
                self.rows[c] = Some(v);
                self.reduce_tail(c);
                return true;
            };
            let q = v[c].div_floor(&row[c]);
            if !q.is_zero() {
                axpy(&mut v, &-q, &row, c);
            }
            if v[c].is_zero() {
                self.rows[c] = Some(row);
                continue;
            }
            // Unimodular 2x2 step: the new pivot is gcd(row[c], v[c]).
            let e = row[c].extended_gcd(&v[c]);
            let (a, b) = (&row[c] / &e.gcd, &v[c] / &e.gcd);
            let mut merged: Vec<BigInt> = row[c..]
                .iter()
                .zip(&v[c..])
                .map(|(r, w)| &e.x * r + &e.y * w)
                .collect();
            let mut rest: Vec<BigInt> = row[c..]
                .iter()
                .zip(&v[c..])
                .map(|(r, w)| &a * w - &b * r)
                .collect();
            let mut pad = vec![BigInt::zero(); c];
            pad.append(&mut merged);
            let mut pad2 = vec![BigInt::zero(); c];
            pad2.append(&mut rest);
            if pad[c].is_negative() {
                pad.iter_mut().for_each(|e| *e = -&*e);
            }
            self.rows[c] = Some(pad);
            self.reduce_tail(c);
            v = pad2;
            changed = true;
        }
        changed
    }

    /// Reduces the entries of row `c` right of its pivot against later rows.
    fn reduce_tail(&mut self, c: usize) {
        let mut row = self.rows[c].take().expect("row present");
        for k in c + 1..self.dim {
            if let Some(other) = &self.rows[k] {
                let q = row[k].div_floor(&other[k]);
                if !q.is_zero() {
                    axpy(&mut row, &-q, other, k);
                }
            }
        }
        self.rows[c] = Some(row);
    }

    /// Puts the basis in Hermite normal form: every entry above a pivot is
    /// reduced into `[0, pivot)`. The result depends only on the lattice.
    pub fn canonicalize(&mut self) {
        for c in (0..self.dim).rev() {
            if self.rows[c].is_some() {
                self.reduce_tail(c);
            }
        }
    }

    /// Canonical representative of `v + L`: each pivot coordinate is reduced
    /// into `[0, pivot)`, top-down.
    pub fn reduce(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        for c in 0..self.dim {
            if let Some(row) = &self.rows[c] {
                let q = v[c].div_floor(&row[c]);
                if !q.is_zero() {
                    axpy(&mut v, &-q, row, c);
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// `[Z^dim : L]`, or `None` when `L` has lower rank.
    pub fn index(&self) -> Option<BigInt> {
        (self.rank() == self.dim).then(|| self.pivots().map(|(_, p)| p.clone()).product())
    }
}

/// `v += k * row`, touching only columns `from..`.
fn axpy(v: &mut [BigInt], k: &BigInt, row: &[BigInt], from: usize) {
    for (a, b) in v[from..].iter_mut().zip(&row[from..]) {
        if !b.is_zero() {
            *a += k * b;
        }
    }
}

/// Invariant factors of `Z^dim / L` for `L` spanned by `basis`.
///
/// Divisors equal to one are dropped; the rest form a divisibility chain,
/// followed by one zero per missing rank.
pub fn smith_divisors(basis: &HermiteBasis) -> Vec<BigInt> {
    let dim = basis.dim();
    let rank = basis.rank();
    let mut m: Vec<Vec<BigInt>> = basis.rows().map(<[BigInt]>::to_vec).collect();
    // For full rank, det(L) Z^dim lies in L, so entries may be taken mod det.
    let modulus = basis.index();
    let mut diag = Vec::with_capacity(rank);
    for t in 0..rank {
        // Pivot with least absolute value in the trailing block.
        while let Some((pi, pj)) = min_entry(&m, t) {
            m.swap(t, pi);
            for row in m.iter_mut() {
                row.swap(t, pj);
            }
            let p = m[t][t].clone();
            let mut clean = true;
            for i in t + 1..m.len() {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_floor(&p);
                let (head, tail) = m.split_at_mut(i);
                axpy(&mut tail[0], &-q, &head[t], t);
                clean &= tail[0][t].is_zero();
            }
            for j in t + 1..dim {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_floor(&p);
                for row in m.iter_mut() {
                    let d = &q * &row[t];
                    row[j] -= d;
                }
                clean &= m[t][j].is_zero();
            }
            if let Some(d) = &modulus {
                for row in m.iter_mut() {
                    for e in row.iter_mut() {
                        *e = e.mod_floor(d);
                    }
                }
            }
            if clean {
                break;
            }
        }
        let p = m[t][t].abs();
        diag.push(match &modulus {
            Some(d) if p.is_zero() => d.clone(),
            Some(d) => p.gcd(d),
            None => p,
        });
    }
    let mut divs = invariant_chain(diag);
    divs.retain(|d| !d.is_one());
    divs.extend(std::iter::repeat_n(BigInt::zero(), dim - rank));
    divs
}

fn min_entry(m: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, &BigInt)> = None;
    for (i, row) in m.iter().enumerate().skip(t) {
        for (j, e) in row.iter().enumerate().skip(t) {
            if !e.is_zero() && best.is_none_or(|(_, _, b)| e.abs() < b.abs()) {
                best = Some((i, j, e));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

/// Turns a diagonal into a divisibility chain with the same product.
fn invariant_chain(mut d: Vec<BigInt>) -> Vec<BigInt> {
    for i in 0..d.len() {
        for j in i + 1..d.len() {
            let g = d[i].gcd(&d[j]);
            let l = d[i].lcm(&d[j]);
            d[i] = g;
            d[j] = l;
        }
    }
    d
}

/// Prime factorization as text, e.g. `2^17` or `2^3*3`. Zero prints as
/// `infinite`.
pub fn factored(x: &BigUint) -> String {
    if x.is_zero() {
        return "infinite".into();
    }
    if x.is_one() {
        return "1".into();
    }
    let mut x = x.clone();
    let mut parts = Vec::new();
    let mut p = BigUint::from(2u32);
    let bound = BigUint::from(1u32 << 20);
    while &p * &p <= x && p < bound {
        let mut e = 0;
        while (&x % &p).is_zero() {
            x /= &p;
            e += 1;
        }
        if e > 0 {
            parts.push(if e == 1 {
                p.to_string()
            } else {
                format!("{p}^{e}")
            });
        }
        p += 1u32;
    }
    if !x.is_one() {
        parts.push(x.to_string());
    }
    parts.join("*")
}

/// Serializes a big integer as a decimal string.
pub fn decimal<S: serde::Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// Exponent `e` with `x = 2^e`.
pub fn log2_exact(x: &BigUint) -> Option<u64> {
    let bits = x.bits();
    (bits > 0 && x.count_ones() == 1).then(|| bits - 1)
}
