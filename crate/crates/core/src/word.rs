//! Words in the free group `F2 = F(x, y)`.
//!
//! A [`Word`] is always stored freely reduced. Commutators follow the
//! convention `[a, b] = a b a^-1 b^-1`.

use std::fmt;
use std::ops::Mul;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    X,
    Y,
}

impl Generator {
    fn symbol(self) -> char {
        match self {
            Generator::X => 'x',
            Generator::Y => 'y',
        }
    }
}

/// A generator raised to `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    gen: Generator,
    inverse: bool,
}

impl Letter {
    pub const X: Letter = Letter::new(Generator::X, false);
    pub const X_INV: Letter = Letter::new(Generator::X, true);
    pub const Y: Letter = Letter::new(Generator::Y, false);
    pub const Y_INV: Letter = Letter::new(Generator::Y, true);

    pub const fn new(gen: Generator, inverse: bool) -> Letter {
        Letter { gen, inverse }
    }

    pub fn gen(self) -> Generator {
        self.gen
    }

    /// `+1` or `-1`.
    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    pub fn inverse(self) -> Letter {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Unit step of the lattice curve.
    pub fn step(self) -> (i64, i64) {
        match self.gen {
            Generator::X => (self.sign(), 0),
            Generator::Y => (0, self.sign()),
        }
    }

    fn cancels(self, other: Letter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// Letter substitutions that extend to automorphisms of `F2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Symmetry {
    /// `x <-> y`
    SwapXY,
    /// `x -> x^-1`
    InvX,
    /// `y -> y^-1`
    InvY,
}

impl Symmetry {
    pub const ALL: [Symmetry; 3] = [Symmetry::SwapXY, Symmetry::InvX, Symmetry::InvY];

    pub fn apply_letter(self, l: Letter) -> Letter {
        match (self, l.gen) {
            (Symmetry::SwapXY, Generator::X) => Letter::new(Generator::Y, l.inverse),
            (Symmetry::SwapXY, Generator::Y) => Letter::new(Generator::X, l.inverse),
            (Symmetry::InvX, Generator::X) | (Symmetry::InvY, Generator::Y) => l.inverse(),
            _ => l,
        }
    }
}

/// Freely reduces a letter sequence with a single stack pass.
pub fn free_reduce<I: IntoIterator<Item = Letter>>(letters: I) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::new();
    for l in letters {
        match out.last() {
            Some(&top) if top.cancels(l) => {
                out.pop();
            }
            _ => out.push(l),
        }
    }
    out
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Word {
        Word::default()
    }

    pub fn x() -> Word {
        Word {
            letters: vec![Letter::X],
        }
    }

    pub fn y() -> Word {
        Word {
            letters: vec![Letter::Y],
        }
    }

    pub fn from_letters<I: IntoIterator<Item = Letter>>(letters: I) -> Word {
        Word {
            letters: free_reduce(letters),
        }
    }

    /// `x^a y^b`
    pub fn monomial(a: i64, b: i64) -> Word {
        Word::x().pow(a).concat(&Word::y().pow(b))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        let mut rest = other.letters.iter().copied().peekable();
        // Both sides are reduced, so cancellation only happens at the seam.
        while let (Some(&last), Some(&next)) = (letters.last(), rest.peek()) {
            if !last.cancels(next) {
                break;
            }
            letters.pop();
            rest.next();
        }
        letters.extend(rest);
        Word { letters }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inverse()).collect(),
        }
    }

    /// `u z u^-1`
    pub fn conjugate(u: &Word, z: &Word) -> Word {
        u.concat(z).concat(&u.inverse())
    }

    /// `[a, b] = a b a^-1 b^-1`
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.concat(b).concat(&a.inverse()).concat(&b.inverse())
    }

    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::empty();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    pub fn exponent_sum(&self, g: Generator) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == g)
            .map(|l| l.sign())
            .sum()
    }

    /// `(exp_x, exp_y)`
    pub fn exponents(&self) -> (i64, i64) {
        self.letters.iter().fold((0, 0), |(a, b), l| {
            let (dx, dy) = l.step();
            (a + dx, b + dy)
        })
    }

    pub fn in_derived_subgroup(&self) -> bool {
        self.exponents() == (0, 0)
    }

    pub fn apply_symmetry(&self, sym: Symmetry) -> Word {
        Word::from_letters(self.letters.iter().map(|&l| sym.apply_letter(l)))
    }

    /// Printed form with runs of equal letters folded into powers.
    pub fn to_folded_string(&self) -> String {
        if self.is_empty() {
            return "1".to_string();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let run = self.letters[i..].iter().take_while(|&&m| m == l).count();
            let e = run as i64 * l.sign();
            out.push(l.gen.symbol());
            if e != 1 {
                out.push_str(&format!("^{e}"));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("1");
        }
        for l in &self.letters {
            write!(f, "{}", l.gen.symbol())?;
            if l.inverse {
                f.write_str("^-1")?;
            }
        }
        Ok(())
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl Mul for Word {
    type Output = Word;
    fn mul(self, rhs: Word) -> Word {
        self.concat(&rhs)
    }
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

/// Parses a word.
///
/// ```text
/// word := term*
/// term := atom ['^' signed-integer]
/// atom := 'x' | 'y' | '1' | '(' word ')' | '[' word ',' word ']'
/// ```
///
/// Whitespace is ignored. `1` denotes the empty word so that printed output
/// always parses back.
pub fn parse_word(text: &str) -> Result<Word> {
    let mut p = Parser {
        toks: text
            .char_indices()
            .filter(|(_, c)| !c.is_whitespace())
            .collect(),
        pos: 0,
        end: text.len(),
    };
    let w = p.word()?;
    match p.peek() {
        None => Ok(w),
        Some((at, c)) => Err(Error::Syntax {
            pos: at,
            msg: format!("unexpected '{c}'"),
        }),
    }
}

struct Parser {
    toks: Vec<(usize, char)>,
    pos: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<(usize, char)> {
        self.toks.get(self.pos).copied()
    }

    fn here(&self) -> usize {
        self.peek().map_or(self.end, |(at, _)| at)
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some((_, c)) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some((at, c)) => Err(Error::Syntax {
                pos: at,
                msg: format!("expected '{want}', found '{c}'"),
            }),
            None => Err(Error::Syntax {
                pos: self.end,
                msg: format!("expected '{want}', found end of input"),
            }),
        }
    }

    fn word(&mut self) -> Result<Word> {
        let mut acc = Word::empty();
        while let Some((_, c)) = self.peek() {
            if matches!(c, ')' | ']' | ',') {
                break;
            }
            let t = self.term()?;
            acc = acc.concat(&t);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        let base = self.atom()?;
        if let Some((_, '^')) = self.peek() {
            self.pos += 1;
            let k = self.integer()?;
            Ok(base.pow(k))
        } else {
            Ok(base)
        }
    }

    fn atom(&mut self) -> Result<Word> {
        let Some((at, c)) = self.peek() else {
            return Err(Error::Syntax {
                pos: self.end,
                msg: "unexpected end of input".into(),
            });
        };
        self.pos += 1;
        match c {
            'x' => Ok(Word::x()),
            'y' => Ok(Word::y()),
            '1' => Ok(Word::empty()),
            '(' => {
                let w = self.word()?;
                self.expect(')')?;
                Ok(w)
            }
            '[' => {
                let a = self.word()?;
                self.expect(',')?;
                let b = self.word()?;
                self.expect(']')?;
                Ok(Word::commutator(&a, &b))
            }
            _ => Err(Error::Syntax {
                pos: at,
                msg: format!("unexpected '{c}'"),
            }),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        let start = self.here();
        let negative = match self.peek() {
            Some((_, '-')) => {
                self.pos += 1;
                true
            }
            Some((_, '+')) => {
                self.pos += 1;
                false
            }
            _ => false,
        };
        let mut digits = String::new();
        while let Some((_, c)) = self.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.pos += 1;
        }
        if digits.is_empty() {
            return Err(Error::Syntax {
                pos: self.here(),
                msg: "expected an integer exponent".into(),
            });
        }
        if negative {
            digits.insert(0, '-');
        }
        digits
            .parse::<i64>()
            .map_err(|_| Error::ExponentOverflow { pos: start })
    }
}

impl std::str::FromStr for Word {
    type Err = Error;
    fn from_str(s: &str) -> Result<Word> {
        parse_word(s)
    }
}

// ---------------------------------------------------------------------------
// Word families
// ---------------------------------------------------------------------------

/// Engel word: `e_1 = [y, x]`, `e_m = [y, e_{m-1}]`.
pub fn engel_word(m: usize) -> Result<Word> {
    if m == 0 {
        return Err(Error::OutOfRange {
            what: "engel index",
            value: 0,
            expected: ">= 1".into(),
        });
    }
    let y = Word::y();
    let mut e = Word::commutator(&y, &Word::x());
    for _ in 1..m {
        e = Word::commutator(&y, &e);
    }
    Ok(e)
}

/// Left-nested basic commutator `[x, ..., x, y, ..., y, x]` with `i` leading
/// x's and `j >= 1` y's, i.e. `[x, [x, ..., [y, [y, ..., [y, x]]]]]`.
pub fn basic_commutator(i: usize, j: usize) -> Result<Word> {
    let mut w = engel_word(j).map_err(|_| Error::OutOfRange {
        what: "basic commutator y-count",
        value: j as i64,
        expected: ">= 1".into(),
    })?;
    let x = Word::x();
    for _ in 0..i {
        w = Word::commutator(&x, &w);
    }
    Ok(w)
}

/// Thue-Morse pair `(u_m, v_m)`: `u_1 = x`, `v_1 = y`,
/// `u_{i+1} = u_i v_i`, `v_{i+1} = v_i u_i`.
pub fn morse_words(m: usize) -> Result<(Word, Word)> {
    if m == 0 {
        return Err(Error::OutOfRange {
            what: "morse index",
            value: 0,
            expected: ">= 1".into(),
        });
    }
    let (mut u, mut v) = (Word::x(), Word::y());
    for _ in 1..m {
        let nu = u.concat(&v);
        let nv = v.concat(&u);
        u = nu;
        v = nv;
    }
    Ok((u, v))
}

/// The Morse identity word `u_m v_m^-1`.
pub fn morse_identity(m: usize) -> Result<Word> {
    let (u, v) = morse_words(m)?;
    Ok(u.concat(&v.inverse()))
}

/// The five generic relators for exponent `n`, each a product of `n`th powers
/// lying in `F2'`, with a short name.
pub fn base_relators(n: u64) -> Result<Vec<(String, Word)>> {
    if n < 2 {
        return Err(Error::InvalidModulus {
            n,
            reason: "relator family needs n >= 2",
        });
    }
    let k = n as i64;
    let x = Word::x();
    let y = Word::y();
    let xy = Word::commutator(&x, &y);
    let yx = Word::commutator(&y, &x);
    let y_neg = y.pow(-k);
    let w = xy.pow(k);
    let u = xy.concat(&y).concat(&yx).pow(k).concat(&y_neg);
    let v = Word::conjugate(&x, &y).pow(k).concat(&y_neg);
    let t = x
        .pow(k)
        .concat(&x.inverse().concat(&y).pow(k))
        .concat(&y_neg);
    let t2 = x
        .pow(2 * k)
        .concat(&x.pow(-2).concat(&y).pow(k))
        .concat(&y_neg);
    Ok(vec![
        ("w".into(), w),
        ("u".into(), u),
        ("v".into(), v),
        ("t".into(), t),
        ("t'".into(), t2),
    ])
}

/// Closes a list of named words under the group generated by [`Symmetry`]
/// (the eight symmetries of the square). Duplicates are dropped; the first
/// occurrence keeps its name, so images are named by a shortest sequence of
/// generators.
pub fn symmetric_closure(words: Vec<(String, Word)>) -> Vec<(String, Word)> {
    let mut out: Vec<(String, Word)> = Vec::new();
    for (name, w) in words {
        let mut frontier = std::collections::VecDeque::from([(name, w)]);
        while let Some((name, w)) = frontier.pop_front() {
            if out.iter().any(|(_, o)| *o == w) {
                continue;
            }
            for sym in Symmetry::ALL {
                let tag = match sym {
                    Symmetry::SwapXY => "s",
                    Symmetry::InvX => "ix",
                    Symmetry::InvY => "iy",
                };
                frontier.push_back((format!("{name}.{tag}"), w.apply_symmetry(sym)));
            }
            out.push((name, w));
        }
    }
    out
}

/// Relators for `M(2, n)`: the five generic ones and their symmetric images.
pub fn named_relator_family(n: u64) -> Result<Vec<(String, Word)>> {
    let family = symmetric_closure(base_relators(n)?);
    for (name, w) in &family {
        assert!(
            w.in_derived_subgroup(),
            "relator {name} is not in the derived subgroup"
        );
    }
    Ok(family)
}

pub fn relator_family(n: u64) -> Result<Vec<Word>> {
    Ok(named_relator_family(n)?
        .into_iter()
        .map(|(_, w)| w)
        .collect())
}

/// [`named_relator_family`] plus two generic kinds of products of `n`-th
/// powers, for `0 <= a, b < n`:
///
/// * `q(a,b)`: `(x^a y^b [x,y])^n (x^a y^b)^-n`, whose winding is a translate
///   of `1 + m + ... + m^(n-1)` with `m = X^a Y^b`;
/// * `p(a,b;c,d)` for `c, d` in `{0, 1}`:
///   `(x^a y^b)^n (x^c y^d)^n (x^(-a-c) y^(-b-d))^n`.
///
/// For `n = 4` and `n = 8` the resulting quotient has order `|M(2, n)'|`.
pub fn completed_relator_family(n: u64) -> Result<Vec<(String, Word)>> {
    let mut family = named_relator_family(n)?;
    let k = n as i64;
    let c = Word::commutator(&Word::x(), &Word::y());
    let power = |a: i64, b: i64| Word::monomial(a, b).pow(k);
    for a in 0..k {
        for b in 0..k {
            let m = Word::monomial(a, b);
            family.push((
                format!("q({a},{b})"),
                m.concat(&c).pow(k).concat(&m.pow(-k)),
            ));
            for (c, d) in [(0, 0), (0, 1), (1, 0), (1, 1)] {
                let z = power(a, b)
                    .concat(&power(c, d))
                    .concat(&power(-a - c, -b - d));
                family.push((format!("p({a},{b};{c},{d})"), z));
            }
        }
    }
    debug_assert!(family.iter().all(|(_, w)| w.in_derived_subgroup()));
    Ok(family)
}

const ALPHABET: [Letter; 4] = [Letter::X, Letter::X_INV, Letter::Y, Letter::Y_INV];

/// A freely reduced random word of length at most `max_len`.
pub fn random_word<R: Rng>(rng: &mut R, max_len: usize) -> Word {
    let len = rng.random_range(0..=max_len);
    Word::from_letters((0..len).map(|_| ALPHABET[rng.random_range(0..4)]))
}

/// Random element `u_1^n u_2^n ... u_r^n` of `F2' ∩ F2^n`.
///
/// Each `u_i` is random of length at most `max_len`; the last base is
/// right-multiplied by `x^-A y^-B` so that the exponent sums of
/// `u_1 ... u_r` vanish. Deterministic in `seed`.
pub fn random_nth_power_product(n: u64, r: usize, max_len: usize, seed: u64) -> Word {
    assert!(r >= 1, "need at least one power");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let bases = random_balanced_bases(&mut rng, r, max_len);
    bases
        .iter()
        .fold(Word::empty(), |acc, u| acc.concat(&u.pow(n as i64)))
}

/// Random words `u_1, ..., u_r` whose exponent sums add up to zero.
pub fn random_balanced_bases<R: Rng>(rng: &mut R, r: usize, max_len: usize) -> Vec<Word> {
    let mut bases: Vec<Word> = (0..r).map(|_| random_word(rng, max_len)).collect();
    let (a, b) = bases.iter().fold((0, 0), |(a, b), u| {
        let (ea, eb) = u.exponents();
        (a + ea, b + eb)
    });
    let last = bases.last_mut().expect("r >= 1");
    *last = last.concat(&Word::monomial(-a, -b));
    bases
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn parses_commutator() {
        assert_eq!(
            w("[x,y]").letters(),
            &[Letter::X, Letter::Y, Letter::X_INV, Letter::Y_INV]
        );
        assert_eq!(w("[x,y]").to_string(), "xyx^-1y^-1");
    }

    #[test]
    fn parses_cancellation_and_powers() {
        assert!(w("x^-1 x").is_empty());
        assert_eq!(w("(xy)^2").to_string(), "xyxy");
        assert_eq!(w("(xy)^-1"), w("y^-1x^-1"));
        assert_eq!(w("x^+3"), w("xxx"));
        assert_eq!(w(" [ x , y ] ^ 2 "), w("[x,y][x,y]"));
        assert!(w("").is_empty());
        assert!(w("1").is_empty());
        assert_eq!(w("[x,[y,x]]"), Word::commutator(&Word::x(), &w("[y,x]")));
    }

    #[test]
    fn syntax_errors_report_position() {
        assert_eq!(
            parse_word("x^"),
            Err(Error::Syntax {
                pos: 2,
                msg: "expected an integer exponent".into()
            })
        );
        assert!(matches!(
            parse_word("(xy"),
            Err(Error::Syntax { pos: 3, .. })
        ));
        assert!(matches!(
            parse_word("[x y]"),
            Err(Error::Syntax { pos: 4, .. })
        ));
        assert!(matches!(
            parse_word("xz"),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert!(matches!(
            parse_word("x)"),
            Err(Error::Syntax { pos: 1, .. })
        ));
        assert_eq!(
            parse_word("x^99999999999999999999"),
            Err(Error::ExponentOverflow { pos: 2 })
        );
    }

    #[test]
    fn reduction_examples() {
        let l = |s: &str| w(s).letters().to_vec();
        assert_eq!(
            free_reduce([Letter::X, Letter::Y, Letter::Y_INV, Letter::X]),
            l("xx")
        );
        assert!(free_reduce(Vec::new()).is_empty());
        assert_eq!(
            free_reduce([
                Letter::X,
                Letter::Y,
                Letter::X_INV,
                Letter::X,
                Letter::Y_INV
            ]),
            l("x")
        );
    }

    #[test]
    fn group_operation_examples() {
        assert_eq!(w("xy").inverse(), w("y^-1x^-1"));
        assert_eq!(w("[x,y]").pow(2).to_string(), "xyx^-1y^-1xyx^-1y^-1");
        assert_eq!(Word::conjugate(&Word::x(), &w("[x,y]")), w("x[x,y]x^-1"));
        assert_eq!(Word::conjugate(&Word::empty(), &w("[x,y]")), w("[x,y]"));
        assert!(w("xyx").pow(0).is_empty());
    }

    #[test]
    fn exponent_sums() {
        assert_eq!(w("[x,y]").exponent_sum(Generator::X), 0);
        assert_eq!(w("x^2y^-1").exponent_sum(Generator::X), 2);
        let (u4, v4) = morse_words(4).unwrap();
        assert_eq!(u4.exponent_sum(Generator::X), 4);
        assert_eq!(v4.exponent_sum(Generator::Y), 4);
    }

    #[test]
    fn engel_words() {
        assert_eq!(engel_word(1).unwrap(), w("yxy^-1x^-1"));
        assert!(engel_word(0).is_err());
        for m in 1..=16 {
            let e = engel_word(m).unwrap();
            assert!(e.in_derived_subgroup());
            let want = (1usize << (m + 1)) + 2 * m - 2;
            assert_eq!(e.len(), want, "m = {m}");
        }
        assert_eq!(engel_word(2).unwrap(), w("[y,[y,x]]"));
    }

    #[test]
    fn basic_commutators_extend_engel_words() {
        for j in 1..=6 {
            assert_eq!(basic_commutator(0, j).unwrap(), engel_word(j).unwrap());
        }
        assert_eq!(basic_commutator(1, 1).unwrap(), w("[x,[y,x]]"));
        assert!(basic_commutator(2, 0).is_err());
        for i in 0..5 {
            for j in 1..5 {
                assert!(basic_commutator(i, j).unwrap().in_derived_subgroup());
            }
        }
    }

    #[test]
    fn morse_words_shape() {
        assert_eq!(morse_words(2).unwrap(), (w("xy"), w("yx")));
        for m in 1..=10 {
            let (u, v) = morse_words(m).unwrap();
            assert_eq!(u.len(), 1 << (m - 1));
            assert_eq!(v.len(), 1 << (m - 1));
            if m >= 2 {
                let half = 1i64 << (m - 2);
                assert_eq!(u.exponents(), (half, half));
                assert_eq!(v.exponents(), (half, half));
            }
            assert!(morse_identity(m).unwrap().in_derived_subgroup() || m == 1);
        }
    }

    #[test]
    fn relator_family_is_symmetric_and_derived() {
        for n in [2u64, 3, 4, 8] {
            let fam = named_relator_family(n).unwrap();
            assert_eq!(&fam[0].0, "w");
            assert_eq!(fam[0].1, w("[x,y]").pow(n as i64));
            for (_, r) in &fam {
                assert!(r.in_derived_subgroup());
                for sym in Symmetry::ALL {
                    let img = r.apply_symmetry(sym);
                    assert!(fam.iter().any(|(_, o)| *o == img));
                }
            }
        }
        assert!(base_relators(1).is_err());
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(w("xy").apply_symmetry(Symmetry::SwapXY), w("yx"));
        assert_eq!(Word::x().apply_symmetry(Symmetry::InvX), w("x^-1"));
        assert_eq!(w("xy").apply_symmetry(Symmetry::InvY), w("xy^-1"));
    }

    #[test]
    fn random_products_are_balanced() {
        for seed in 0..50 {
            let z = random_nth_power_product(4, 3, 8, seed);
            assert!(z.in_derived_subgroup());
            assert_eq!(z, random_nth_power_product(4, 3, 8, seed));
        }
        assert!(random_nth_power_product(4, 1, 0, 7).is_empty());
    }

    #[test]
    fn folded_printing() {
        assert_eq!(w("xxxy^-1y^-1x").to_folded_string(), "x^3y^-2x");
        assert_eq!(Word::empty().to_folded_string(), "1");
    }

    fn arb_word() -> impl Strategy<Value = Word> {
        prop::collection::vec(0usize..4, 0..40)
            .prop_map(|v| Word::from_letters(v.into_iter().map(|i| ALPHABET[i])))
    }

    fn arb_letters() -> impl Strategy<Value = Vec<Letter>> {
        prop::collection::vec(0usize..4, 0..60)
            .prop_map(|v| v.into_iter().map(|i| ALPHABET[i]).collect())
    }

    proptest! {
        #[test]
        fn print_parse_round_trip(a in arb_word()) {
            prop_assert_eq!(parse_word(&a.to_string()).unwrap(), a.clone());
            prop_assert_eq!(parse_word(&a.to_folded_string()).unwrap(), a);
        }

        #[test]
        fn reduction_is_idempotent(ls in arb_letters()) {
            let once = free_reduce(ls.clone());
            prop_assert!(once.len() <= ls.len());
            prop_assert_eq!(free_reduce(once.clone()), once);
        }

        #[test]
        fn group_laws(a in arb_word(), b in arb_word(), c in arb_word()) {
            prop_assert!(a.concat(&a.inverse()).is_empty());
            prop_assert_eq!(a.concat(&b).concat(&c), a.concat(&b.concat(&c)));
            prop_assert_eq!(
                Word::from_letters(a.letters().iter().chain(b.letters()).copied()),
                a.concat(&b)
            );
            for g in [Generator::X, Generator::Y] {
                prop_assert_eq!(
                    a.concat(&b).exponent_sum(g),
                    a.exponent_sum(g) + b.exponent_sum(g)
                );
            }
        }

        #[test]
        fn symmetries_are_involutions(a in arb_word()) {
            for sym in Symmetry::ALL {
                prop_assert_eq!(a.apply_symmetry(sym).apply_symmetry(sym), a.clone());
            }
        }
    }
}
