use std::fmt::Write;

/// A generator or its inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    /// Column index in a coset table: `2g` for `g`, `2g + 1` for `g^-1`.
    pub fn column(self) -> usize {
        2 * self.gen as usize + self.inverse as usize
    }
}

/// A freely reduced word over numbered generators.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: u32) -> Self {
        Word {
            letters: vec![Letter::new(g, false)],
        }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut w = Word::identity();
        for l in letters {
            w.push(l);
        }
        w
    }

    /// Appends a letter, cancelling against the last one if they are inverse.
    pub fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inv()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
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

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn mul(&self, other: &Word) -> Self {
        let mut w = self.clone();
        for &l in &other.letters {
            w.push(l);
        }
        w
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut w = Word::identity();
        for _ in 0..e.unsigned_abs() {
            w = w.mul(&base);
        }
        w
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(a: &Word, b: &Word) -> Self {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    pub fn max_gen(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Renders the word in the presentation language, grouping runs of a
    /// repeated letter into powers. The empty word renders as `1`.
    pub fn display(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut j = i;
            while j < self.letters.len() && self.letters[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let e = if l.inverse { -run } else { run };
            if !out.is_empty() {
                out.push('*');
            }
            out.push_str(&names[l.gen as usize]);
            if e != 1 {
                write!(out, "^{e}").unwrap();
            }
            i = j;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_reduction() {
        let a = Word::gen(0);
        let w = a.mul(&a.inverse());
        assert!(w.is_empty());
        assert_eq!(a.pow(0), Word::identity());
        assert_eq!(a.pow(-2).len(), 2);
    }

    #[test]
    fn display_groups_runs() {
        let names = vec!["a".to_string(), "b".to_string()];
        let w = Word::gen(0).pow(3).mul(&Word::gen(1).pow(-2));
        assert_eq!(w.display(&names), "a^3*b^-2");
        assert_eq!(Word::identity().display(&names), "1");
    }
}
