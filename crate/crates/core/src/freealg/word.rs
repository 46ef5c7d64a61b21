use std::cmp::Ordering;
use std::fmt;

/// Variable index; `X1` is letter 1.
pub type Letter = u32;

/// A monomial in the free monoid on `X1, X2, ...`. The empty word is `1`.
///
/// Words order degree-lexicographically: shorter words first, ties broken
/// by comparing letters left to right.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn one() -> Self {
        Word(Vec::new())
    }

    /// # Panics
    /// If any letter is 0; variables are 1-based.
    pub fn new(letters: Vec<Letter>) -> Self {
        assert!(
            letters.iter().all(|&l| l >= 1),
            "variable indices are 1-based"
        );
        Word(letters)
    }

    pub fn letter(index: Letter) -> Self {
        Word::new(vec![index])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, rhs: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.0.len() + rhs.0.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&rhs.0);
        Word(letters)
    }

    /// Largest letter, 0 for the unit word.
    pub fn max_letter(&self) -> Letter {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Every word over `1..=n` of degree at most `k`, in deglex order.
    pub fn all_up_to(n: Letter, k: usize) -> Vec<Word> {
        let mut out = vec![Word::one()];
        let mut layer = vec![Word::one()];
        for _ in 0..k {
            let mut next = Vec::with_capacity(layer.len() * n as usize);
            for w in &layer {
                for l in 1..=n {
                    let mut letters = w.0.clone();
                    letters.push(l);
                    next.push(Word(letters));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    /// `X1^2*X2`; the unit word prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let run = self.0[i..].iter().take_while(|&&x| x == l).count();
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if run == 1 {
                write!(f, "X{l}")?;
            } else {
                write!(f, "X{l}^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
