//! Coloring invariants `Λ` and the families built from them.
//!
//! An [`InvariantSpec`] colors the unit square `(i, j)` with
//! `c(φ(i - i0, j - j0))` where `φ(i, j) = i·phi_x + j·phi_y mod n`. For a
//! two-coloring, `Λ(P)` is the sum of the coefficients of `P` on black
//! squares minus the sum on white squares; for a p-good coloring each
//! coefficient is weighted by the color itself. Both are reduced mod `n`.
//!
//! The translation is stored as `(i0, j0)` and subtracted, so a spec with
//! `translate = t` evaluated on `P` equals the untranslated spec evaluated on
//! `X^-i0 Y^-j0 P`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::coloring::{standard_coloring, two_power_exponent, PGoodColoring, TwoColoring};
use crate::error::{Error, Result};
use crate::laurent::{binomial, LaurentPoly};
use crate::winding::{basic_commutator_winding, engel_winding, winding_invariant};
use crate::word::{morse_identity, Symmetry, Word};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Coloring {
    Two(TwoColoring),
    PGood(PGoodColoring),
}

impl Coloring {
    pub fn n(&self) -> u64 {
        match self {
            Coloring::Two(c) => c.n(),
            Coloring::PGood(c) => c.n(),
        }
    }
}

impl From<TwoColoring> for Coloring {
    fn from(c: TwoColoring) -> Coloring {
        Coloring::Two(c)
    }
}

impl From<PGoodColoring> for Coloring {
    fn from(c: PGoodColoring) -> Coloring {
        Coloring::PGood(c)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantSpec {
    n: u64,
    phi_x: u64,
    phi_y: u64,
    translate: (i64, i64),
    coloring: Coloring,
}

impl InvariantSpec {
    pub fn new(
        n: u64,
        (phi_x, phi_y): (i64, i64),
        translate: (i64, i64),
        coloring: impl Into<Coloring>,
    ) -> Result<InvariantSpec> {
        let coloring = coloring.into();
        if n == 0 {
            return Err(Error::InvalidModulus {
                n,
                reason: "modulus must be positive",
            });
        }
        if coloring.n() != n {
            return Err(Error::ModulusMismatch {
                coloring: coloring.n(),
                expected: n,
            });
        }
        let m = n as i64;
        Ok(InvariantSpec {
            n,
            phi_x: phi_x.rem_euclid(m) as u64,
            phi_y: phi_y.rem_euclid(m) as u64,
            translate,
            coloring,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn phi(&self) -> (u64, u64) {
        (self.phi_x, self.phi_y)
    }

    pub fn translate(&self) -> (i64, i64) {
        self.translate
    }

    pub fn coloring(&self) -> &Coloring {
        &self.coloring
    }

    pub fn with_translate(&self, translate: (i64, i64)) -> InvariantSpec {
        InvariantSpec {
            translate,
            ..self.clone()
        }
    }

    /// `φ(i - i0, j - j0)` in `[0, n)`.
    pub fn residue(&self, i: i64, j: i64) -> u64 {
        let n = self.n as i128;
        let (i0, j0) = self.translate;
        let a = (i as i128 - i0 as i128) * self.phi_x as i128
            + (j as i128 - j0 as i128) * self.phi_y as i128;
        a.rem_euclid(n) as u64
    }

    /// Weight of the square `(i, j)`: `±1` for two-colorings, the color for
    /// p-good colorings.
    pub fn weight(&self, i: i64, j: i64) -> i64 {
        let a = self.residue(i, j) as i64;
        match &self.coloring {
            Coloring::Two(c) => c.color(a).weight(),
            Coloring::PGood(c) => c.color(a) as i64,
        }
    }
}

/// `Λ(P) ∈ Z_n`.
pub fn lambda_value(spec: &InvariantSpec, p: &LaurentPoly) -> u64 {
    let total: BigInt = p.terms().map(|((i, j), c)| c * spec.weight(i, j)).sum();
    reduce(&total, spec.n)
}

/// Coefficient sums of `P` over the classes of `φ(i - i0, j - j0) mod n`.
/// Every spec sharing `n`, `φ` and the translation evaluates through
/// [`lambda_from_profile`] on the same profile.
pub fn residue_profile(spec: &InvariantSpec, p: &LaurentPoly) -> Vec<BigInt> {
    let mut sums = vec![BigInt::from(0); spec.n as usize];
    for ((i, j), c) in p.terms() {
        sums[spec.residue(i, j) as usize] += c;
    }
    sums
}

pub fn lambda_from_profile(spec: &InvariantSpec, profile: &[BigInt]) -> u64 {
    assert_eq!(profile.len() as u64, spec.n);
    let total: BigInt = profile
        .iter()
        .enumerate()
        .map(|(a, s)| {
            let w = match &spec.coloring {
                Coloring::Two(c) => c.color(a as i64).weight(),
                Coloring::PGood(c) => c.color(a as i64) as i64,
            };
            s * w
        })
        .sum();
    reduce(&total, spec.n)
}

/// `Λ` of the winding invariant of `w`.
pub fn lambda_of_word(spec: &InvariantSpec, w: &Word) -> Result<u64> {
    Ok(lambda_value(spec, &winding_invariant(w)?))
}

fn reduce(x: &BigInt, n: u64) -> u64 {
    x.mod_floor(&BigInt::from(n))
        .to_u64()
        .expect("residue fits")
}

fn check_half_index(i: u64, n: u64) -> Result<()> {
    if n < 2 || !n.is_multiple_of(2) {
        return Err(Error::InvalidModulus {
            n,
            reason: "horizontal and vertical invariants need an even modulus",
        });
    }
    if i >= n / 2 {
        return Err(Error::OutOfRange {
            what: "coloring index",
            value: i as i64,
            expected: format!("0 <= i < {}", n / 2),
        });
    }
    Ok(())
}

/// `h^i`: rows colored by `c_i`.
pub fn horizontal_spec(i: u64, n: u64) -> Result<InvariantSpec> {
    check_half_index(i, n)?;
    InvariantSpec::new(n, (0, 1), (0, 0), standard_coloring(i, n)?)
}

/// `v^i`: columns colored by `c_i`.
pub fn vertical_spec(i: u64, n: u64) -> Result<InvariantSpec> {
    check_half_index(i, n)?;
    InvariantSpec::new(n, (1, 0), (0, 0), standard_coloring(i, n)?)
}

/// The diagonal invariant: `φ = (1, 1)` with coloring `c_0`.
pub fn diagonal_spec(n: u64) -> Result<InvariantSpec> {
    InvariantSpec::new(n, (1, 1), (0, 0), standard_coloring(0, n)?)
}

/// Area `A(w) = P_w(1, 1)`.
pub fn area(w: &Word) -> Result<BigInt> {
    Ok(winding_invariant(w)?.eval_at_ones())
}

/// Modulus of the reduced area: `n/2` for even `n`, `n` for odd `n`.
pub fn area_modulus(n: u64) -> u64 {
    if n.is_multiple_of(2) {
        n / 2
    } else {
        n
    }
}

pub fn area_bar(w: &Word, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidModulus {
            n,
            reason: "modulus must be positive",
        });
    }
    Ok(reduce(&area(w)?, area_modulus(n)))
}

/// `(h^0, ..., h^{n/2-1}, v^0, ..., v^{n/2-1})`, serialized as one array.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaVector {
    n: u64,
    h: Vec<u64>,
    v: Vec<u64>,
}

impl OmegaVector {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn h(&self) -> &[u64] {
        &self.h
    }

    pub fn v(&self) -> &[u64] {
        &self.v
    }

    pub fn to_vec(&self) -> Vec<u64> {
        self.h.iter().chain(&self.v).copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.h.iter().chain(&self.v).all(|&a| a == 0)
    }
}

impl Serialize for OmegaVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.h.len() + self.v.len()))?;
        for a in self.h.iter().chain(&self.v) {
            seq.serialize_element(a)?;
        }
        seq.end()
    }
}

impl fmt::Display for OmegaVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.to_vec().iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `Ω` of a polynomial; `n` must be `2^k` with `k >= 2`.
pub fn omega_of_poly(p: &LaurentPoly, n: u64) -> Result<OmegaVector> {
    two_power_exponent(n, 2)?;
    let h = (0..n / 2)
        .map(|i| Ok(lambda_value(&horizontal_spec(i, n)?, p)))
        .collect::<Result<Vec<u64>>>()?;
    let v = (0..n / 2)
        .map(|i| Ok(lambda_value(&vertical_spec(i, n)?, p)))
        .collect::<Result<Vec<u64>>>()?;
    Ok(OmegaVector { n, h, v })
}

pub fn omega(w: &Word, n: u64) -> Result<OmegaVector> {
    omega_of_poly(&winding_invariant(w)?, n)
}

/// `(A mod n/2, Ω)`.
pub fn omega_bar_of_poly(p: &LaurentPoly, n: u64) -> Result<(u64, OmegaVector)> {
    let o = omega_of_poly(p, n)?;
    Ok((reduce(&p.eval_at_ones(), n / 2), o))
}

pub fn omega_bar(w: &Word, n: u64) -> Result<(u64, OmegaVector)> {
    omega_bar_of_poly(&winding_invariant(w)?, n)
}

/// `(Ω, Λ_diag)` at `n = 4`.
pub fn omega_tilde_of_poly(p: &LaurentPoly) -> [u64; 5] {
    let o = omega_of_poly(p, 4).expect("n = 4 is valid");
    let d = lambda_value(&diagonal_spec(4).expect("n = 4 is valid"), p);
    [o.h[0], o.h[1], o.v[0], o.v[1], d]
}

pub fn omega_tilde(w: &Word) -> Result<[u64; 5]> {
    Ok(omega_tilde_of_poly(&winding_invariant(w)?))
}

/// `x^-a y^-b u` where `(a, b)` are the exponent sums of `u`, provided both
/// are multiples of `n`.
pub fn derived_part(u: &Word, n: u64) -> Option<Word> {
    let (a, b) = u.exponents();
    let n = n as i64;
    (a % n == 0 && b % n == 0).then(|| Word::monomial(-a, -b).concat(u))
}

/// Word problem in `M(2, 4)` through `Ω̃`.
pub fn m24_is_trivial(u: &Word) -> bool {
    match derived_part(u, 4) {
        None => false,
        Some(v) => omega_tilde(&v).expect("derived part lies in F2'") == [0; 5],
    }
}

/// Word problem in `N(2, n)`, the free nilpotent group of class 2 and
/// exponent `n`, through the reduced area.
pub fn n2n_is_trivial(u: &Word, n: u64) -> Result<bool> {
    if n == 0 {
        return Err(Error::InvalidModulus {
            n,
            reason: "modulus must be positive",
        });
    }
    Ok(match derived_part(u, n) {
        None => false,
        Some(v) => area_bar(&v, n)? == 0,
    })
}

/// Orbits of `Z_8 x Z_2` on `Z_n x Z_n`, generated by
/// `(i, j) -> (i - n/8, j + n/8)` and `(i, j) -> (i + n/2, j)`. Each orbit is
/// sorted and the list is ordered by smallest element.
pub fn gamma_orbits(n: u64) -> Result<Vec<Vec<(u64, u64)>>> {
    two_power_exponent(n, 3)?;
    let (e, h) = (n / 8, n / 2);
    let mut seen = vec![false; (n * n) as usize];
    let mut orbits = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if seen[(i * n + j) as usize] {
                continue;
            }
            let mut orbit = Vec::with_capacity(16);
            for s in 0..8 {
                for t in 0..2 {
                    let a = (i + n * 8 - s * e + t * h) % n;
                    let b = (j + s * e) % n;
                    if !seen[(a * n + b) as usize] {
                        seen[(a * n + b) as usize] = true;
                        orbit.push((a, b));
                    }
                }
            }
            orbit.sort_unstable();
            orbits.push(orbit);
        }
    }
    Ok(orbits)
}

/// The residues `b ≡ 1 mod 8` in `[0, n)`.
pub fn cotainf_slopes(n: u64) -> Vec<u64> {
    (1..n).step_by(8).collect()
}

/// The colorings `c_0` and `c_0` with the colors of `0` and `n/2` swapped.
pub fn cotainf_colorings(n: u64) -> Result<[TwoColoring; 2]> {
    let c0 = standard_coloring(0, n)?;
    let mut colors = c0.colors().to_vec();
    colors.swap(0, (n / 2) as usize);
    Ok([c0, TwoColoring::new(colors)])
}

/// Specs `Λ_{φ_{1,b} t_{-(i0,j0)}, c}` for `b` in the slopes, `c` in the two
/// colorings and `(i0, j0)` in `reps`, in that nesting order.
pub fn cotainf_family_with(n: u64, reps: &[(u64, u64)]) -> Result<Vec<InvariantSpec>> {
    two_power_exponent(n, 3)?;
    let colorings = cotainf_colorings(n)?;
    let mut specs = Vec::new();
    for b in cotainf_slopes(n) {
        for c in &colorings {
            for &(i0, j0) in reps {
                specs.push(InvariantSpec::new(
                    n,
                    (1, b as i64),
                    (i0 as i64, j0 as i64),
                    c.clone(),
                )?);
            }
        }
    }
    Ok(specs)
}

/// [`cotainf_family_with`] using the smallest element of every orbit.
pub fn cotainf_family(n: u64) -> Result<Vec<InvariantSpec>> {
    let reps: Vec<(u64, u64)> = gamma_orbits(n)?.iter().map(|o| o[0]).collect();
    cotainf_family_with(n, &reps)
}

pub const ENGEL_SEARCH_BOUND: usize = 40;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EngelGammaReport {
    pub n: u64,
    /// Smallest `j` with `Ω(e_j) = 0`.
    pub first_vanishing: usize,
    /// `Ω` is trivial on `γ_{first_vanishing + 1}(F2)`.
    pub trivial_on_gamma: usize,
    /// `h^0(e_j)` for `j < first_vanishing`.
    pub h0_before: Vec<u64>,
}

/// Scans `j = 1, 2, ...` for the first Engel word on which `Ω` vanishes.
/// Windings come from [`engel_winding`], so no long words are built.
pub fn engel_gamma_report(n: u64, bound: usize) -> Result<EngelGammaReport> {
    two_power_exponent(n, 2)?;
    let mut h0_before = Vec::new();
    for j in 1..=bound {
        let o = omega_of_poly(&engel_winding(j), n)?;
        if o.is_zero() {
            return Ok(EngelGammaReport {
                n,
                first_vanishing: j,
                trivial_on_gamma: j + 1,
                h0_before,
            });
        }
        h0_before.push(o.h[0]);
    }
    Err(Error::SearchBoundExceeded { bound })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorseReport {
    pub k: u32,
    pub n: u64,
    /// Level `k + 3`, where the identity holds.
    pub satisfied_at: usize,
    /// `1 - (XY)^n` divides the winding of `u_{k+3} v_{k+3}^-1`.
    pub divisible: bool,
    /// Level `k + 1`, where the identity fails.
    pub violated_at: usize,
    pub omega_at_violation: OmegaVector,
    /// `h^0 - h^1` of `u_{k+1} v_{k+1}^-1`, mod `n`.
    pub h0_minus_h1: u64,
}

pub fn morse_report(k: u32) -> Result<MorseReport> {
    if !(2..=12).contains(&k) {
        return Err(Error::OutOfRange {
            what: "morse exponent k",
            value: k as i64,
            expected: "2 <= k <= 12".into(),
        });
    }
    let n = 1u64 << k;
    let m = n as i64;
    let high = winding_invariant(&morse_identity(k as usize + 3)?)?;
    let divisible = high.divisible_by_one_minus_monomial((m, m))?;
    let o = omega(&morse_identity(k as usize + 1)?, n)?;
    let diff = (o.h[0] + n - o.h[1]) % n;
    Ok(MorseReport {
        k,
        n,
        satisfied_at: k as usize + 3,
        divisible,
        violated_at: k as usize + 1,
        omega_at_violation: o,
        h0_minus_h1: diff,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BasiccomReport {
    pub n: u64,
    /// `C(n, n/2) - 2 mod n`.
    pub expected: u64,
    /// `(i, Λ_diag(e_{i, n-i+1}))` for `0 <= i <= n`.
    pub entries: Vec<(usize, u64)>,
}

impl BasiccomReport {
    pub fn holds(&self) -> bool {
        self.entries
            .iter()
            .all(|&(_, v)| v == self.expected && v % 8 != 0)
    }
}

/// Diagonal invariant of the basic commutators of weight `n + 2`.
pub fn basiccom_report(n: u64) -> Result<BasiccomReport> {
    two_power_exponent(n, 3)?;
    let spec = diagonal_spec(n)?;
    let expected = reduce(&(binomial(n, n / 2) - 2), n);
    let entries = (0..=n as usize)
        .map(|i| {
            let p = basic_commutator_winding(i, n as usize - i + 1);
            (i, lambda_value(&spec, &p))
        })
        .collect();
    Ok(BasiccomReport {
        n,
        expected,
        entries,
    })
}

/// JSON record `{spec, value, modulus}`.
pub fn lambda_report(spec: &InvariantSpec, value: u64) -> serde_json::Value {
    serde_json::json!({ "spec": spec, "value": value, "modulus": spec.n() })
}

/// `P(Y, X)`, for comparing `v^i` with `h^i`.
pub fn swapped(p: &LaurentPoly) -> LaurentPoly {
    p.apply_symmetry(Symmetry::SwapXY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{enumerate_good_colorings, random_good_coloring};
    use crate::word::{engel_word, parse_word, random_nth_power_product};
    use num_traits::Zero;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    const EJEMPLITO: &str = "x^2yx^-1y^-1xy^3x^-3yxy^-4";

    #[test]
    fn ejemplito_lambda() {
        let spec = horizontal_spec(0, 4).unwrap();
        assert_eq!(lambda_of_word(&spec, &w(EJEMPLITO)).unwrap(), 0);
        assert_eq!(lambda_value(&spec, &LaurentPoly::zero()), 0);
    }

    #[test]
    fn p_good_closing_example() {
        let c = PGoodColoring::new(2, vec![0, 1, 0, 3]).unwrap();
        let spec = InvariantSpec::new(4, (1, 1), (0, 0), c).unwrap();
        assert_eq!(lambda_of_word(&spec, &w("x^4(x^-1y)^4y^-4")).unwrap(), 2);
    }

    #[test]
    fn spec_validation() {
        let c = standard_coloring(0, 8).unwrap();
        assert!(matches!(
            InvariantSpec::new(4, (0, 1), (0, 0), c),
            Err(Error::ModulusMismatch {
                coloring: 8,
                expected: 4
            })
        ));
        assert!(horizontal_spec(2, 4).is_err());
        assert!(omega(&w("[x,y]"), 6).is_err());
    }

    #[test]
    fn vertical_is_swapped_horizontal() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let p = LaurentPoly::from_terms((0..6).map(|_| {
                (
                    (rng.random_range(-9..9), rng.random_range(-9..9)),
                    rng.random_range(-5..5),
                )
            }));
            for i in 0..4 {
                assert_eq!(
                    lambda_value(&vertical_spec(i, 8).unwrap(), &p),
                    lambda_value(&horizontal_spec(i, 8).unwrap(), &swapped(&p))
                );
            }
        }
    }

    #[test]
    fn omega_examples() {
        for n in [4u64, 8, 16] {
            let p = LaurentPoly::one_minus_monomial(0, -1);
            let o = omega_of_poly(&p, n).unwrap();
            let mut want = vec![0; n as usize];
            want[0] = 2;
            assert_eq!(o.to_vec(), want);

            let h = (n / 2) as i64;
            let q = &LaurentPoly::one() + &LaurentPoly::monomial(h, h, 1);
            let (a, o) = omega_bar_of_poly(&q, n).unwrap();
            assert_eq!(a, 2 % (n / 2));
            assert!(o.is_zero());
        }
        let q = &LaurentPoly::one() + &LaurentPoly::monomial(2, 2, 1);
        assert_eq!(omega_tilde_of_poly(&q), [0, 0, 0, 0, 2]);
        assert_eq!(
            omega(&w("xyx^-1y^-1"), 4).unwrap().to_vec(),
            vec![1, 3, 1, 3]
        );
    }

    #[test]
    fn half_commutator_power() {
        for n in [4u64, 8, 16] {
            let z = w("[x,y]").pow(n as i64 / 2);
            assert_eq!(
                lambda_of_word(&horizontal_spec(0, n).unwrap(), &z).unwrap(),
                n / 2
            );
        }
        assert!(!m24_is_trivial(&w("[x,y]^2")));
        assert!(m24_is_trivial(&w("x^4")));
        assert!(m24_is_trivial(&Word::empty()));
        assert!(!m24_is_trivial(&w("x^2")));
    }

    #[test]
    fn engel_values() {
        for n in [8u64, 16] {
            let want = reduce(&(binomial(n, n / 2) - 2), n);
            let got = lambda_value(
                &horizontal_spec(0, n).unwrap(),
                &engel_winding(n as usize + 1),
            );
            assert_eq!(got, want);
            assert_eq!(got, 4);
        }
        assert_eq!(
            lambda_value(&horizontal_spec(0, 16).unwrap(), &engel_winding(25)),
            8
        );
        // Small cases through actual words.
        for m in 1..=8 {
            let e = engel_word(m).unwrap();
            assert_eq!(
                omega(&e, 8).unwrap(),
                omega_of_poly(&engel_winding(m), 8).unwrap()
            );
        }
    }

    #[test]
    fn engel_gamma() {
        let r8 = engel_gamma_report(8, ENGEL_SEARCH_BOUND).unwrap();
        assert_eq!(r8.first_vanishing, 10);
        let r16 = engel_gamma_report(16, ENGEL_SEARCH_BOUND).unwrap();
        assert_eq!(r16.first_vanishing, 26);
        assert!(!omega_of_poly(&engel_winding(25), 16).unwrap().is_zero());
        assert!(matches!(
            engel_gamma_report(16, 5),
            Err(Error::SearchBoundExceeded { bound: 5 })
        ));
    }

    #[test]
    fn morse_certificates() {
        for k in 2..=4 {
            let r = morse_report(k).unwrap();
            assert!(r.divisible, "k = {k}");
            assert_eq!(r.h0_minus_h1, 2, "k = {k}");
            assert!(!r.omega_at_violation.is_zero());
        }
    }

    #[test]
    fn basiccom_tables() {
        for n in [8u64, 16] {
            let r = basiccom_report(n).unwrap();
            assert!(r.holds(), "{r:?}");
            assert_eq!(
                r.entries[0].1,
                lambda_value(
                    &horizontal_spec(0, n).unwrap(),
                    &engel_winding(n as usize + 1)
                )
            );
        }
    }

    #[test]
    fn area_examples() {
        for n in [4i64, 6, 8] {
            assert_eq!(area(&w("[x,y]").pow(n)).unwrap(), BigInt::from(n));
            let t = Word::x()
                .pow(n)
                .concat(&w("x^-1y").pow(n))
                .concat(&Word::y().pow(-n));
            assert_eq!(area(&t).unwrap(), BigInt::from(n * (n - 1) / 2));
            let half = w("[x,y]").pow(n / 2);
            assert_eq!(area_bar(&half, n as u64).unwrap(), 0);
            assert!(n2n_is_trivial(&half, n as u64).unwrap());
            assert!(!n2n_is_trivial(&w("[x,y]"), n as u64).unwrap());
        }
        assert_eq!(area(&Word::empty()).unwrap(), BigInt::zero());
        assert!(n2n_is_trivial(&w("[[x,y],x] x^5 y^5 x^-5 y^-5"), 5).unwrap());
    }

    #[test]
    fn gamma_orbit_structure() {
        for n in [8u64, 16, 32] {
            let orbits = gamma_orbits(n).unwrap();
            assert_eq!(orbits.len() as u64, n * n / 16);
            assert!(orbits.iter().all(|o| o.len() == 16));
        }
        assert_eq!(cotainf_family(8).unwrap().len(), 8);
        assert_eq!(cotainf_family(16).unwrap().len(), 64);
        assert!(cotainf_family(4).is_err());
    }

    #[test]
    fn translation_covariance() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let c = random_good_coloring(&mut rng, 8);
            let t = (rng.random_range(-8..=8), rng.random_range(-8..=8));
            let phi = (rng.random_range(0..8), rng.random_range(0..8));
            let base = InvariantSpec::new(8, phi, (0, 0), c).unwrap();
            let moved = base.with_translate(t);
            let p = LaurentPoly::from_terms((0..5).map(|_| {
                (
                    (rng.random_range(-6..6), rng.random_range(-6..6)),
                    rng.random_range(-4..4),
                )
            }));
            assert_eq!(
                lambda_value(&moved, &p),
                lambda_value(&base, &p.translate((-t.0, -t.1)))
            );
        }
    }

    #[test]
    fn profile_agrees_with_direct_sum() {
        let p = winding_invariant(&w(EJEMPLITO)).unwrap();
        for c in enumerate_good_colorings(8).unwrap() {
            let spec = InvariantSpec::new(8, (3, 5), (1, -2), c).unwrap();
            assert_eq!(
                lambda_from_profile(&spec, &residue_profile(&spec, &p)),
                lambda_value(&spec, &p)
            );
        }
    }

    #[test]
    fn omega_theorem_small() {
        for n in [4u64, 8] {
            let colorings = enumerate_good_colorings(n).unwrap();
            for seed in 0..30 {
                let z = random_nth_power_product(n, 3, 6, seed);
                let p = winding_invariant(&z).unwrap();
                for c in &colorings {
                    let spec = InvariantSpec::new(n, (0, 1), (0, 0), c.clone()).unwrap();
                    assert_eq!(lambda_value(&spec, &p), 0);
                }
            }
        }
    }
}
