//! Unital quantales and their star.
//!
//! In a unital quantale the star of `a` is the least fixed point of
//! `S ↦ 1 ∨ a·S`, reached by ascending iteration from `⊥`. Two finite
//! instances are provided: binary relations under composition, where star
//! is reflexive-transitive closure, and languages truncated at a maximum
//! word length, where star is the Kleene star restricted to short words.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, RngCore, SeedableRng};

use crate::error::{Error, Result};
use crate::par::{self, Exec};
use crate::relation::{Relation, Universe};

/// A complete lattice with an associative multiplication that distributes
/// over joins on both sides and has a two-sided unit.
pub trait Quantale: Sync {
    type Elem: Clone + Eq + fmt::Debug + Send + Sync;

    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn multiply(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn unit(&self) -> Self::Elem;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.join(a, b) == *b
    }

    /// Length of the longest strict chain minus one; ascending iterations
    /// stabilise within `height() + 1` steps.
    fn height(&self) -> usize;

    /// The whole carrier, if it has at most `limit` elements.
    fn elements(&self, limit: usize) -> Option<Vec<Self::Elem>>;

    fn random_element(&self, rng: &mut dyn RngCore) -> Self::Elem;
}

/// Carrier size up to which law checks may enumerate.
pub const ENUMERATION_LIMIT: usize = 1 << 16;

/// `f(S) = 1 ∨ a·S`.
pub fn star_step<Q: Quantale>(q: &Q, a: &Q::Elem, s: &Q::Elem) -> Q::Elem {
    q.join(&q.unit(), &q.multiply(a, s))
}

/// Least fixed point of [`star_step`], iterating from `⊥`. The loop exits
/// only once `f(s) = s`.
pub fn star<Q: Quantale>(q: &Q, a: &Q::Elem) -> Result<Q::Elem> {
    let cap = q.height() + 1;
    let mut s = q.bottom();
    for _ in 0..=cap {
        let next = star_step(q, a, &s);
        if next == s {
            return Ok(s);
        }
        s = next;
    }
    Err(Error::StarDiverged { steps: cap })
}

/// `1 ≤ a*`, `a ≤ a*` and `a*·a* ≤ a*`.
pub fn check_monoid_object<Q: Quantale>(q: &Q, a: &Q::Elem) -> Result<bool> {
    let s = star(q, a)?;
    Ok(q.leq(&q.unit(), &s) && q.leq(a, &s) && q.leq(&q.multiply(&s, &s), &s))
}

/// `1 ∨ a ∨ b·b ≤ b`.
pub fn freeness_premise<Q: Quantale>(q: &Q, a: &Q::Elem, b: &Q::Elem) -> bool {
    let lhs = q.join(&q.join(&q.unit(), a), &q.multiply(b, b));
    q.leq(&lhs, b)
}

/// The implication `1 ∨ a ∨ b·b ≤ b ⇒ a* ≤ b`. Vacuously true when the
/// premise fails.
pub fn check_freeness<Q: Quantale>(q: &Q, a: &Q::Elem, b: &Q::Elem) -> Result<bool> {
    let s = star(q, a)?;
    Ok(!freeness_premise(q, a, b) || q.leq(&s, b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawResult {
    pub law: &'static str,
    /// Offending triple, `None` when the law held on every case.
    pub witness: Option<String>,
}

impl LawResult {
    pub fn passed(&self) -> bool {
        self.witness.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawReport {
    pub exhaustive: bool,
    pub cases: usize,
    pub results: Vec<LawResult>,
}

impl LawReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(LawResult::passed)
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mode = if self.exhaustive { "exhaustive" } else { "sampled" };
        for r in &self.results {
            match &r.witness {
                None => writeln!(f, "PASS {} ({} {mode} cases)", r.law, self.cases)?,
                Some(w) => writeln!(f, "FAIL {}: {w}", r.law)?,
            }
        }
        Ok(())
    }
}

type Law<Q> = (&'static str, fn(&Q, &<Q as Quantale>::Elem, &<Q as Quantale>::Elem, &<Q as Quantale>::Elem) -> bool);

fn laws<Q: Quantale>() -> Vec<Law<Q>> {
    vec![
        ("join associative", |q, a, b, c| {
            q.join(&q.join(a, b), c) == q.join(a, &q.join(b, c))
        }),
        ("join commutative", |q, a, b, _| q.join(a, b) == q.join(b, a)),
        ("join idempotent", |q, a, _, _| q.join(a, a) == *a),
        ("bottom is least", |q, a, _, _| q.join(&q.bottom(), a) == *a),
        ("top is greatest", |q, a, _, _| q.leq(a, &q.top())),
        ("multiply associative", |q, a, b, c| {
            q.multiply(&q.multiply(a, b), c) == q.multiply(a, &q.multiply(b, c))
        }),
        ("left unit", |q, a, _, _| q.multiply(&q.unit(), a) == *a),
        ("right unit", |q, a, _, _| q.multiply(a, &q.unit()) == *a),
        ("left distributive", |q, a, b, c| {
            q.multiply(a, &q.join(b, c)) == q.join(&q.multiply(a, b), &q.multiply(a, c))
        }),
        ("right distributive", |q, a, b, c| {
            q.multiply(&q.join(a, b), c) == q.join(&q.multiply(a, c), &q.multiply(b, c))
        }),
        ("bottom annihilates", |q, a, _, _| {
            q.multiply(a, &q.bottom()) == q.bottom() && q.multiply(&q.bottom(), a) == q.bottom()
        }),
    ]
}

/// Checks the quantale laws on every triple of the carrier when it is
/// enumerable and has at most `sample_budget` triples, and on
/// `sample_budget` seeded random triples otherwise. Distributivity over
/// finite joins follows from the binary and empty cases checked here.
pub fn check_laws<Q: Quantale>(q: &Q, sample_budget: usize) -> LawReport {
    let carrier = q
        .elements(ENUMERATION_LIMIT)
        .filter(|c| c.len().checked_pow(3).is_some_and(|t| t <= sample_budget));
    let (exhaustive, triples) = match carrier {
        Some(c) => {
            let mut triples = Vec::with_capacity(c.len().pow(3));
            for a in &c {
                for b in &c {
                    for d in &c {
                        triples.push((a.clone(), b.clone(), d.clone()));
                    }
                }
            }
            (true, triples)
        }
        None => {
            let mut rng = StdRng::seed_from_u64(0x5eed_c0de);
            let samples: Vec<_> = (0..sample_budget)
                .map(|_| (q.random_element(&mut rng), q.random_element(&mut rng), q.random_element(&mut rng)))
                .collect();
            (false, samples)
        }
    };
    let cases = triples.len();
    let results = laws::<Q>()
        .into_iter()
        .map(|(law, holds)| {
            let witness = par::find_first(Exec::default(), 0..cases as u64, |t| {
                let (a, b, c) = &triples[t as usize];
                (!holds(q, a, b, c)).then(|| format!("a = {a:?}, b = {b:?}, c = {c:?}"))
            });
            LawResult { law, witness }
        })
        .collect();
    LawReport {
        exhaustive,
        cases,
        results,
    }
}

/// Relations on a fixed universe: join is union, multiplication is
/// composition, the unit is the identity relation.
#[derive(Debug, Clone)]
pub struct RelationQuantale {
    universe: Universe,
}

impl RelationQuantale {
    pub fn new(universe: &Universe) -> Self {
        RelationQuantale {
            universe: universe.clone(),
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }
}

impl Quantale for RelationQuantale {
    type Elem = Relation;

    fn bottom(&self) -> Relation {
        Relation::empty(&self.universe)
    }

    fn top(&self) -> Relation {
        Relation::full(&self.universe)
    }

    fn join(&self, a: &Relation, b: &Relation) -> Relation {
        a.union(b).expect("elements share the quantale universe")
    }

    fn multiply(&self, a: &Relation, b: &Relation) -> Relation {
        a.compose(b).expect("elements share the quantale universe")
    }

    fn unit(&self) -> Relation {
        Relation::identity(&self.universe)
    }

    fn leq(&self, a: &Relation, b: &Relation) -> bool {
        a.is_subset(b).expect("elements share the quantale universe")
    }

    fn height(&self) -> usize {
        self.universe.len().pow(2)
    }

    fn elements(&self, limit: usize) -> Option<Vec<Relation>> {
        let bits = self.height();
        if bits >= 63 || 1usize << bits > limit {
            return None;
        }
        Some((0..1u64 << bits).map(|c| Relation::from_code(&self.universe, c)).collect())
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Relation {
        let n = self.universe.len();
        let density: f64 = rng.gen_range(0.0..=1.0);
        Relation::from_index_pairs(
            &self.universe,
            (0..n * n).filter(|_| rng.gen_bool(density)).map(|k| (k / n, k % n)),
        )
    }
}

/// An ordered set of distinct symbols.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: &str) -> Result<Self> {
        let symbols: Vec<char> = symbols.chars().collect();
        for (i, c) in symbols.iter().enumerate() {
            if symbols[..i].contains(c) {
                return Err(Error::InvalidAlphabet(format!("symbol `{c}` repeated")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }

    fn base(&self) -> u64 {
        self.symbols.len() as u64
    }

    fn position(&self, c: char) -> Option<u64> {
        self.symbols.iter().position(|&s| s == c).map(|p| p as u64)
    }
}

/// A word as its length and its digits in base `|A|`. The derived order is
/// shortlex: by length, then lexicographic in alphabet order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    len: u32,
    code: u64,
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, code: 0 };

    pub fn len(self) -> usize {
        self.len as usize
    }

    pub fn is_empty(self) -> bool {
        self.len == 0
    }
}

/// The quantale of languages over `alphabet` restricted to words of length
/// at most `max_len`. Products drop words longer than the bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LanguageQuantale {
    alphabet: Arc<Alphabet>,
    max_len: usize,
    word_count: usize,
}

impl LanguageQuantale {
    pub fn new(alphabet: &str, max_len: usize) -> Result<Self> {
        Self::from_alphabet(Arc::new(Alphabet::new(alphabet)?), max_len)
    }

    fn from_alphabet(alphabet: Arc<Alphabet>, max_len: usize) -> Result<Self> {
        let base = alphabet.base();
        let too_large = || Error::InvalidAlphabet(format!("{base}^{max_len} words do not fit in 64 bits"));
        let exp = u32::try_from(max_len).map_err(|_| too_large())?;
        base.checked_pow(exp).ok_or_else(too_large)?;
        let word_count = (0..=exp)
            .try_fold(0usize, |acc, l| acc.checked_add(usize::try_from(base.pow(l)).ok()?))
            .ok_or_else(too_large)?;
        Ok(LanguageQuantale {
            alphabet,
            max_len,
            word_count,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    /// `|A^{≤k}|`.
    pub fn word_count(&self) -> usize {
        self.word_count
    }

    /// Every word of length at most `max_len`, in shortlex order.
    pub fn all_words(&self) -> Vec<Word> {
        let base = self.alphabet.base();
        (0..=self.max_len as u32)
            .flat_map(|len| (0..base.pow(len)).map(move |code| Word { len, code }))
            .collect()
    }

    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let invalid = || Error::InvalidWord {
            word: text.to_owned(),
            max_len: self.max_len,
        };
        let mut w = Word::EMPTY;
        for c in text.chars() {
            let digit = self.alphabet.position(c).ok_or_else(invalid)?;
            if w.len() >= self.max_len {
                return Err(invalid());
            }
            w = Word {
                len: w.len + 1,
                code: w.code * self.alphabet.base() + digit,
            };
        }
        Ok(w)
    }

    pub fn render(&self, w: Word) -> String {
        let base = self.alphabet.base();
        let mut digits = Vec::with_capacity(w.len());
        let mut code = w.code;
        for _ in 0..w.len {
            digits.push(self.alphabet.symbols[(code % base) as usize]);
            code /= base;
        }
        digits.iter().rev().collect()
    }

    /// `uv`, or `None` when it exceeds the length bound.
    pub fn concat_words(&self, u: Word, v: Word) -> Option<Word> {
        let len = u.len + v.len;
        (len as usize <= self.max_len).then(|| Word {
            len,
            code: u.code * self.alphabet.base().pow(v.len) + v.code,
        })
    }

    pub fn language<'a, I>(&self, words: I) -> Result<Language>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let words = words.into_iter().map(|w| self.parse_word(w)).collect::<Result<_>>()?;
        Ok(self.wrap(words))
    }

    fn wrap(&self, words: BTreeSet<Word>) -> Language {
        Language {
            alphabet: self.alphabet.clone(),
            max_len: self.max_len,
            words,
        }
    }

    fn ensure_member(&self, l: &Language) -> Result<()> {
        if *l.alphabet == *self.alphabet && l.max_len == self.max_len {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch)
        }
    }
}

/// A finite language whose words respect an alphabet and length bound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Language {
    alphabet: Arc<Alphabet>,
    max_len: usize,
    words: BTreeSet<Word>,
}

impl Language {
    pub fn new<'a, I>(alphabet: &str, max_len: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        LanguageQuantale::new(alphabet, max_len)?.language(words)
    }

    /// The quantale this language lives in.
    pub fn quantale(&self) -> LanguageQuantale {
        LanguageQuantale::from_alphabet(self.alphabet.clone(), self.max_len)
            .expect("bound was validated when the language was built")
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn max_len(&self) -> usize {
        self.max_len
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn raw_words(&self) -> impl Iterator<Item = Word> + '_ {
        self.words.iter().copied()
    }

    /// Words in shortlex order.
    pub fn words(&self) -> Vec<String> {
        let q = self.quantale();
        self.words.iter().map(|&w| q.render(w)).collect()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.quantale().parse_word(word).is_ok_and(|w| self.words.contains(&w))
    }

    /// The same words viewed under a different length bound; words longer
    /// than `max_len` are dropped.
    pub fn with_max_len(&self, max_len: usize) -> Result<Language> {
        let q = LanguageQuantale::from_alphabet(self.alphabet.clone(), max_len)?;
        Ok(q.wrap(self.words.iter().copied().filter(|w| w.len() <= max_len).collect()))
    }
}

impl fmt::Debug for Language {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words = self.words();
        f.debug_set()
            .entries(words.iter().map(|w| if w.is_empty() { "ε" } else { w.as_str() }))
            .finish()
    }
}

/// `LM = {uv | u ∈ L, v ∈ M, |uv| ≤ k}`.
pub fn lang_concat(l: &Language, m: &Language) -> Result<Language> {
    let q = l.quantale();
    q.ensure_member(m)?;
    Ok(q.multiply(l, m))
}

/// Star in the truncated language quantale: every concatenation of zero
/// or more words of `l` with length at most the bound.
pub fn lang_star(l: &Language) -> Language {
    star(&l.quantale(), l).expect("ascending chains are bounded by the word count")
}

impl Quantale for LanguageQuantale {
    type Elem = Language;

    fn bottom(&self) -> Language {
        self.wrap(BTreeSet::new())
    }

    fn top(&self) -> Language {
        self.wrap(self.all_words().into_iter().collect())
    }

    fn join(&self, a: &Language, b: &Language) -> Language {
        self.wrap(a.words.union(&b.words).copied().collect())
    }

    fn multiply(&self, a: &Language, b: &Language) -> Language {
        let mut out = BTreeSet::new();
        for &u in &a.words {
            for &v in &b.words {
                if let Some(w) = self.concat_words(u, v) {
                    out.insert(w);
                }
            }
        }
        self.wrap(out)
    }

    fn unit(&self) -> Language {
        self.wrap(BTreeSet::from([Word::EMPTY]))
    }

    fn leq(&self, a: &Language, b: &Language) -> bool {
        a.words.is_subset(&b.words)
    }

    fn height(&self) -> usize {
        self.word_count
    }

    fn elements(&self, limit: usize) -> Option<Vec<Language>> {
        if self.word_count >= 63 || 1usize << self.word_count > limit {
            return None;
        }
        let words = self.all_words();
        Some(
            (0..1u64 << self.word_count)
                .map(|mask| self.wrap((0..words.len()).filter(|i| mask >> i & 1 == 1).map(|i| words[i]).collect()))
                .collect(),
        )
    }

    fn random_element(&self, rng: &mut dyn RngCore) -> Language {
        let words = self.all_words();
        let p = (3.0 / words.len() as f64).min(0.5);
        self.wrap(words.into_iter().filter(|_| rng.gen_bool(p)).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn words(l: &Language) -> Vec<String> {
        l.words()
    }

    #[test]
    fn relation_star_is_closure() {
        let u = Universe::new(["a", "b", "c"]).unwrap();
        let q = RelationQuantale::new(&u);
        let r = Relation::from_pairs(&u, [("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(star(&q, &r).unwrap(), r.closure_by_powers());
        assert_eq!(star(&q, &q.bottom()).unwrap(), q.unit());
        assert_eq!(star(&q, &q.unit()).unwrap(), q.unit());
    }

    #[test]
    fn relation_star_matches_powers_exhaustively() {
        for n in 0..=3 {
            let q = RelationQuantale::new(&Universe::numbered(n));
            for r in q.elements(ENUMERATION_LIMIT).unwrap() {
                let s = star(&q, &r).unwrap();
                assert_eq!(s, r.closure_by_powers());
                assert_eq!(star_step(&q, &r, &s), s);
            }
        }
    }

    #[test]
    fn language_star_examples() {
        let l = Language::new("ab", 5, ["ab"]).unwrap();
        assert_eq!(words(&lang_star(&l)), ["", "ab", "abab"]);
        let empty = Language::new("ab", 3, []).unwrap();
        assert_eq!(words(&lang_star(&empty)), [""]);
        let a = Language::new("a", 3, ["a"]).unwrap();
        assert_eq!(words(&lang_star(&a)), ["", "a", "aa", "aaa"]);
        let ab4 = Language::new("ab", 4, ["ab"]).unwrap();
        assert_eq!(words(&lang_star(&ab4)), ["", "ab", "abab"]);
    }

    #[test]
    fn concat_examples() {
        let q = LanguageQuantale::new("ab", 3).unwrap();
        let l = q.language(["a", "ab", "b"]).unwrap();
        assert_eq!(lang_concat(&q.unit(), &l).unwrap(), l);
        let ab = lang_concat(&q.language(["a"]).unwrap(), &q.language(["b"]).unwrap()).unwrap();
        assert_eq!(words(&ab), ["ab"]);
        let long = q.language(["ab"]).unwrap();
        assert!(lang_concat(&long, &long).unwrap().is_empty());
        let other = Language::new("ab", 4, ["a"]).unwrap();
        assert_eq!(lang_concat(&l, &other), Err(Error::AlphabetMismatch));
    }

    #[test]
    fn word_validation() {
        assert!(matches!(Language::new("ab", 2, ["abc"]), Err(Error::InvalidWord { .. })));
        assert!(matches!(Language::new("ab", 2, ["aaa"]), Err(Error::InvalidWord { .. })));
        assert!(matches!(Language::new("aa", 2, []), Err(Error::InvalidAlphabet(_))));
        assert!(LanguageQuantale::new("ab", 64).is_err());
    }

    #[test]
    fn shortlex_follows_alphabet_order() {
        let q = LanguageQuantale::new("ba", 2).unwrap();
        let rendered: Vec<String> = q.all_words().into_iter().map(|w| q.render(w)).collect();
        assert_eq!(rendered, ["", "b", "a", "bb", "ba", "ab", "aa"]);
    }

    #[test]
    fn law_checks_pass_on_small_carriers() {
        let rel = check_laws(&RelationQuantale::new(&Universe::numbered(2)), 1 << 13);
        assert!(rel.exhaustive && rel.cases == 4096, "{rel}");
        assert!(rel.all_passed(), "{rel}");

        let lang = check_laws(&LanguageQuantale::new("a", 3).unwrap(), 1 << 13);
        assert!(lang.exhaustive && lang.cases == 4096, "{lang}");
        assert!(lang.all_passed(), "{lang}");

        let sampled = check_laws(&LanguageQuantale::new("ab", 4).unwrap(), 300);
        assert!(!sampled.exhaustive);
        assert!(sampled.all_passed(), "{sampled}");
    }

    /// Powerset of two points with a non-associative product.
    struct Broken;

    impl Quantale for Broken {
        type Elem = u8;
        fn bottom(&self) -> u8 {
            0
        }
        fn top(&self) -> u8 {
            3
        }
        fn join(&self, a: &u8, b: &u8) -> u8 {
            a | b
        }
        fn multiply(&self, a: &u8, b: &u8) -> u8 {
            a & !b
        }
        fn unit(&self) -> u8 {
            0
        }
        fn height(&self) -> usize {
            2
        }
        fn elements(&self, _: usize) -> Option<Vec<u8>> {
            Some(vec![0, 1, 2, 3])
        }
        fn random_element(&self, rng: &mut dyn RngCore) -> u8 {
            rng.gen_range(0..4)
        }
    }

    #[test]
    fn broken_multiply_reports_witness() {
        let report = check_laws(&Broken, 1000);
        let assoc = report.results.iter().find(|r| r.law == "multiply associative").unwrap();
        assert!(assoc.witness.is_some());
        assert!(!report.all_passed());
        assert!(report.to_string().contains("FAIL multiply associative"));
    }

    #[test]
    fn monoid_object_and_freeness() {
        let u = Universe::numbered(3);
        let q = RelationQuantale::new(&u);
        let a = Relation::from_index_pairs(&u, [(0, 1), (2, 0)]);
        assert!(check_monoid_object(&q, &a).unwrap());
        assert!(check_monoid_object(&q, &q.unit()).unwrap());
        assert!(check_freeness(&q, &a, &q.top()).unwrap());
        let s = star(&q, &a).unwrap();
        assert!(freeness_premise(&q, &a, &s));
        assert!(check_freeness(&q, &a, &s).unwrap());

        let lq = LanguageQuantale::new("ab", 4).unwrap();
        let l = lq.language(["a", "ba"]).unwrap();
        assert!(check_monoid_object(&lq, &l).unwrap());
        assert!(check_freeness(&lq, &l, &lq.top()).unwrap());
    }

    #[test]
    fn truncation_coherence() {
        let l = Language::new("ab", 8, ["ab", "b", "aab"]).unwrap();
        let full = lang_star(&l);
        for k in [3, 4, 6] {
            let lk = l.with_max_len(k).unwrap();
            assert_eq!(lang_star(&lk), full.with_max_len(k).unwrap());
        }
    }
}
