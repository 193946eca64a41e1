//! Configuration words, the particle and state actions on them, and orbit bases.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// Largest group degree accepted when generating an orbit (orbit size ≤ 8!).
pub const MAX_DEGREE: usize = 8;

/// Ordered set of state names; a label's position is its state index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateAlphabet {
    labels: Vec<String>,
}

impl StateAlphabet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(|c| c.is_whitespace() || "(),+;".contains(c)) {
                return Err(Error::Parse(format!("invalid state label '{l}'")));
            }
            if labels[..i].contains(l) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        if labels.is_empty() {
            return Err(Error::Parse("empty alphabet".into()));
        }
        Ok(Self { labels })
    }

    /// Parses `"abc"` (one character per label) or `"alpha,beta"`.
    pub fn from_text(text: &str) -> Result<Self> {
        Self::new(split_word(text))
    }

    /// The distinct labels of a configuration word, sorted.
    pub fn inferred_from(word: &str) -> Result<Self> {
        let mut labels = split_word(word);
        labels.sort();
        labels.dedup();
        Self::new(labels)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::UnknownLabel(label.to_owned()))
    }

    fn single_char(&self) -> bool {
        self.labels.iter().all(|l| l.chars().count() == 1)
    }

    /// Renders a word: bare when every label is one character, comma-joined
    /// otherwise.
    pub fn render(&self, config: &Configuration) -> String {
        let parts = config.word.iter().map(|&s| self.labels[s].as_str());
        if self.single_char() {
            parts.collect()
        } else {
            parts.collect::<Vec<_>>().join(",")
        }
    }
}

fn split_word(text: &str) -> Vec<String> {
    let text = text.trim();
    if text.contains(',') {
        text.split(',').map(|s| s.trim().to_owned()).collect()
    } else {
        text.chars().map(String::from).collect()
    }
}

/// One ket: `word[i]` is the state index occupied by particle `i + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Configuration {
    word: Vec<usize>,
}

impl Configuration {
    pub fn new(word: Vec<usize>, alphabet: &StateAlphabet) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidDegree(0));
        }
        if let Some(&bad) = word.iter().find(|&&s| s >= alphabet.len()) {
            return Err(Error::UnknownLabel(format!("#{bad}")));
        }
        Ok(Self { word })
    }

    pub fn parse(text: &str, alphabet: &StateAlphabet) -> Result<Self> {
        let word = split_word(text)
            .iter()
            .map(|l| alphabet.index_of(l))
            .collect::<Result<Vec<_>>>()?;
        Self::new(word, alphabet)
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Particle action: the state of particle `i` moves to particle `p(i)`.
    /// This is a left action, `p·(q·w) = (p∘q)·w`.
    pub fn act_particle(&self, p: &Permutation) -> Result<Self> {
        if p.degree() != self.degree() {
            return Err(Error::DegreeMismatch {
                expected: self.degree(),
                found: p.degree(),
            });
        }
        let mut word = vec![0; self.word.len()];
        for (i, &s) in self.word.iter().enumerate() {
            word[p.image0(i)] = s;
        }
        Ok(Self { word })
    }

    /// State action: relabels every occupied state `s` as `perm(s)`, where
    /// `perm` permutes alphabet indices (point `s + 1` ↔ index `s`).
    pub fn act_state(&self, perm: &Permutation) -> Result<Self> {
        if let Some(&max) = self.word.iter().max() {
            if max >= perm.degree() {
                return Err(Error::DegreeMismatch {
                    expected: max + 1,
                    found: perm.degree(),
                });
            }
        }
        Ok(Self {
            word: self.word.iter().map(|&s| perm.image0(s)).collect(),
        })
    }

    /// Occupation count of each alphabet index.
    pub fn multiplicities(&self, alphabet_len: usize) -> Vec<usize> {
        let mut counts = vec![0; alphabet_len];
        for &s in &self.word {
            counts[s] += 1;
        }
        counts
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "|{:?}⟩", self.word)
    }
}

/// The ordered orbit of a configuration under particle permutations.
#[derive(Debug, Clone)]
pub struct OrbitBasis {
    alphabet: StateAlphabet,
    configs: Vec<Configuration>,
    index_of: HashMap<Configuration, usize>,
}

impl OrbitBasis {
    /// Orbit of `config`, sorted lexicographically by state-index word.
    pub fn orbit(alphabet: &StateAlphabet, config: &Configuration) -> Result<Self> {
        let n = config.degree();
        if n > MAX_DEGREE {
            return Err(Error::DegreeTooLarge(n));
        }
        if config.word.iter().any(|&s| s >= alphabet.len()) {
            return Err(Error::UnknownLabel(format!("{config:?}")));
        }
        // Breadth-first closure under adjacent transpositions.
        let generators = (1..n)
            .map(|i| Permutation::transposition(i, i + 1, n))
            .collect::<Result<Vec<_>>>()?;
        let mut seen: HashMap<Configuration, ()> = HashMap::new();
        let mut queue = VecDeque::from([config.clone()]);
        seen.insert(config.clone(), ());
        while let Some(w) = queue.pop_front() {
            for g in &generators {
                let next = w.act_particle(g)?;
                if seen.insert(next.clone(), ()).is_none() {
                    queue.push_back(next);
                }
            }
        }
        let mut configs: Vec<Configuration> = seen.into_keys().collect();
        configs.sort();
        Ok(Self::from_sorted(alphabet.clone(), configs))
    }

    fn from_sorted(alphabet: StateAlphabet, configs: Vec<Configuration>) -> Self {
        let index_of = configs.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        Self {
            alphabet,
            configs,
            index_of,
        }
    }

    /// Reorders the basis. `order` must list every orbit element exactly once.
    pub fn with_ordering(&self, order: Vec<Configuration>) -> Result<Self> {
        if order.len() != self.len() {
            return Err(Error::OrderingMismatch(format!(
                "{} entries given, orbit has {}",
                order.len(),
                self.len()
            )));
        }
        let mut hit = vec![false; self.len()];
        for c in &order {
            let Some(&i) = self.index_of.get(c) else {
                return Err(Error::OrderingMismatch(format!(
                    "'{}' is not in the orbit",
                    self.alphabet.render(c)
                )));
            };
            if std::mem::replace(&mut hit[i], true) {
                return Err(Error::OrderingMismatch(format!(
                    "'{}' listed twice",
                    self.alphabet.render(c)
                )));
            }
        }
        Ok(Self::from_sorted(self.alphabet.clone(), order))
    }

    /// Parses an ordering file (one word per line; blank lines ignored) and
    /// applies it.
    pub fn with_ordering_text(&self, text: &str) -> Result<Self> {
        let order = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| Configuration::parse(l, &self.alphabet))
            .collect::<Result<Vec<_>>>()?;
        self.with_ordering(order)
    }

    pub fn alphabet(&self) -> &StateAlphabet {
        &self.alphabet
    }

    pub fn configs(&self) -> &[Configuration] {
        &self.configs
    }

    pub fn len(&self) -> usize {
        self.configs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.configs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.configs[0].degree()
    }

    pub fn get(&self, index: usize) -> &Configuration {
        &self.configs[index]
    }

    pub fn index_of(&self, config: &Configuration) -> Option<usize> {
        self.index_of.get(config).copied()
    }

    /// State multiplicities shared by every orbit element.
    pub fn multiplicities(&self) -> Vec<usize> {
        self.configs[0].multiplicities(self.alphabet.len())
    }

    /// Rendered words in basis order.
    pub fn words(&self) -> Vec<String> {
        self.configs.iter().map(|c| self.alphabet.render(c)).collect()
    }

    /// Permutation of basis indices induced by a particle permutation:
    /// `result[j]` is the index of `g·φ_j`.
    pub fn particle_image(&self, g: &Permutation) -> Result<Vec<usize>> {
        self.configs
            .iter()
            .map(|c| {
                let img = c.act_particle(g)?;
                self.index_of(&img)
                    .ok_or_else(|| Error::Internal("orbit not closed under particle action".into()))
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> StateAlphabet {
        StateAlphabet::from_text("abc").unwrap()
    }

    fn cfg(text: &str) -> Configuration {
        Configuration::parse(text, &abc()).unwrap()
    }

    fn t(i: usize, j: usize, n: usize) -> Permutation {
        Permutation::transposition(i, j, n).unwrap()
    }

    #[test]
    fn particle_action_examples() {
        assert_eq!(cfg("abc").act_particle(&t(1, 2, 3)).unwrap(), cfg("bac"));
        assert_eq!(cfg("aab").act_particle(&t(1, 2, 3)).unwrap(), cfg("aab"));
        assert_eq!(cfg("acb").act_particle(&t(1, 2, 3)).unwrap(), cfg("cab"));
        assert!(cfg("ab").act_particle(&t(1, 2, 3)).is_err());
    }

    #[test]
    fn particle_action_on_three_cycle() {
        // p = 1→2→3→1 sends the state of particle 1 to particle 2.
        let p = Permutation::from_images(&[2, 3, 1]).unwrap();
        assert_eq!(cfg("abc").act_particle(&p).unwrap(), cfg("cab"));
    }

    #[test]
    fn state_action_examples() {
        let ab = t(1, 2, 3);
        assert_eq!(cfg("abc").act_state(&ab).unwrap(), cfg("bac"));
        assert_eq!(cfg("cba").act_state(&ab).unwrap(), cfg("cab"));
        let id = Permutation::identity(3).unwrap();
        assert_eq!(cfg("cba").act_state(&id).unwrap(), cfg("cba"));
        assert!(cfg("cba").act_state(&t(1, 2, 2)).is_err());
    }

    #[test]
    fn orbit_examples() {
        let b = OrbitBasis::orbit(&abc(), &cfg("aab")).unwrap();
        assert_eq!(b.words(), vec!["aab", "aba", "baa"]);
        assert_eq!(OrbitBasis::orbit(&abc(), &cfg("abc")).unwrap().len(), 6);
        assert_eq!(OrbitBasis::orbit(&abc(), &cfg("aaa")).unwrap().len(), 1);
    }

    #[test]
    fn degree_cap() {
        let long = Configuration::new(vec![0; 9], &abc()).unwrap();
        assert_eq!(OrbitBasis::orbit(&abc(), &long).unwrap_err(), Error::DegreeTooLarge(9));
    }

    #[test]
    fn ordering_override() {
        let b = OrbitBasis::orbit(&abc(), &cfg("abc")).unwrap();
        let reordered = b.with_ordering_text("abc\nbac\ncba\nacb\ncab\nbca\n").unwrap();
        assert_eq!(reordered.words(), ["abc", "bac", "cba", "acb", "cab", "bca"]);
        assert_eq!(reordered.index_of(&cfg("cab")), Some(4));
        assert!(matches!(
            b.with_ordering_text("abc\nbac\ncba\nacb\ncab\n"),
            Err(Error::OrderingMismatch(_))
        ));
        assert!(matches!(
            b.with_ordering_text("abc\nbac\ncba\nacb\ncab\ncab\n"),
            Err(Error::OrderingMismatch(_))
        ));
        assert!(matches!(
            b.with_ordering_text("abc\nbac\ncba\nacb\ncab\naab\n"),
            Err(Error::OrderingMismatch(_))
        ));
    }

    #[test]
    fn multi_character_labels() {
        let alpha = StateAlphabet::from_text("alpha,beta").unwrap();
        let c = Configuration::parse("alpha,alpha,beta", &alpha).unwrap();
        assert_eq!(c.word(), &[0, 0, 1]);
        assert_eq!(alpha.render(&c), "alpha,alpha,beta");
        assert!(Configuration::parse("alpha,gamma", &alpha).is_err());
        assert!(StateAlphabet::from_text("a,a").is_err());
        assert_eq!(StateAlphabet::inferred_from("cab").unwrap().labels(), ["a", "b", "c"]);
    }

    fn arb_word() -> impl Strategy<Value = Vec<usize>> {
        (1usize..=6).prop_flat_map(|n| prop::collection::vec(0usize..3, n))
    }

    fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
        Just((1..=n).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(|v| Permutation::from_images(&v).unwrap())
    }

    fn factorial(n: usize) -> usize {
        (1..=n).product()
    }

    proptest! {
        #[test]
        fn particle_action_is_left_action(
            (w, p, q) in arb_word().prop_flat_map(|w| {
                let n = w.len();
                (Just(w), arb_perm(n), arb_perm(n))
            })
        ) {
            let w = Configuration::new(w, &abc()).unwrap();
            let lhs = w.act_particle(&q).unwrap().act_particle(&p).unwrap();
            let rhs = w.act_particle(&p.compose(&q).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn state_and_particle_actions_commute(
            (w, p, s) in arb_word().prop_flat_map(|w| {
                let n = w.len();
                (Just(w), arb_perm(n), arb_perm(3))
            })
        ) {
            let w = Configuration::new(w, &abc()).unwrap();
            let lhs = w.act_particle(&p).unwrap().act_state(&s).unwrap();
            let rhs = w.act_state(&s).unwrap().act_particle(&p).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn orbit_size_formula(w in arb_word()) {
            let w = Configuration::new(w, &abc()).unwrap();
            let b = OrbitBasis::orbit(&abc(), &w).unwrap();
            let denom: usize = w.multiplicities(3).into_iter().map(factorial).product();
            prop_assert_eq!(b.len() * denom, factorial(w.degree()));
        }

        #[test]
        fn orbit_contains_and_is_stable(
            (w, g) in arb_word().prop_flat_map(|w| {
                let n = w.len();
                (Just(w), arb_perm(n))
            })
        ) {
            let w = Configuration::new(w, &abc()).unwrap();
            let b = OrbitBasis::orbit(&abc(), &w).unwrap();
            prop_assert!(b.index_of(&w).is_some());
            let moved = OrbitBasis::orbit(&abc(), &w.act_particle(&g).unwrap()).unwrap();
            prop_assert_eq!(b.configs(), moved.configs());
            for (i, c) in b.configs().iter().enumerate() {
                prop_assert_eq!(b.index_of(c), Some(i));
            }
        }
    }
}
