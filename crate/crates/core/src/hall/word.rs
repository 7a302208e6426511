//! Words `(i, c)`: sequences of vertex orbits with positive multiplicities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word(pub Vec<(usize, u32)>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(i: usize, c: u32) -> Self {
        Word(vec![(i, c)])
    }

    pub fn new(blocks: Vec<(usize, u32)>) -> Result<Self> {
        if blocks.iter().any(|&(_, c)| c == 0) {
            return Err(Error::InvalidInput("word multiplicities must be positive".into()));
        }
        Ok(Word(blocks))
    }

    pub fn blocks(&self) -> &[(usize, u32)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `sum_k c_k i_k`.
    pub fn content(&self, rank: usize) -> Vec<usize> {
        let mut nu = vec![0; rank];
        for &(i, c) in &self.0 {
            nu[i] += c as usize;
        }
        nu
    }

    pub fn concat(&self, other: &Word) -> Word {
        Word(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn scale(&self, ell: u32) -> Word {
        Word(self.0.iter().map(|&(i, c)| (i, c * ell)).collect())
    }

    /// `b` with `c = l b`, if every multiplicity is divisible.
    pub fn divide(&self, ell: u32) -> Option<Word> {
        self.0
            .iter()
            .map(|&(i, c)| (c % ell == 0).then_some((i, c / ell)))
            .collect::<Option<Vec<_>>>()
            .map(Word)
    }

    /// All `(prefix, suffix)` splits at block boundaries.
    pub fn splits(&self) -> Vec<(Word, Word)> {
        (0..=self.0.len())
            .map(|k| (Word(self.0[..k].to_vec()), Word(self.0[k..].to_vec())))
            .collect()
    }

    /// Parse `"i:c,i:c,..."` (or `"i"` for `c = 1`) with orbit labels
    /// resolved by `lookup`; the empty string is the empty word.
    pub fn parse(s: &str, lookup: impl Fn(&str) -> Result<usize>) -> Result<Word> {
        let s = s.trim();
        if s.is_empty() || s == "()" {
            return Ok(Word::empty());
        }
        let mut blocks = Vec::new();
        for part in s.split(',') {
            let part = part.trim();
            let (name, c) = match part.split_once(':') {
                Some((n, c)) => (
                    n.trim(),
                    c.trim()
                        .parse::<u32>()
                        .map_err(|_| Error::InvalidInput(format!("bad multiplicity in {part:?}")))?,
                ),
                None => (part, 1),
            };
            blocks.push((lookup(name)?, c));
        }
        Word::new(blocks)
    }

    pub fn display(&self, name: impl Fn(usize) -> String) -> String {
        if self.0.is_empty() {
            return "()".into();
        }
        self.0
            .iter()
            .map(|&(i, c)| format!("{}:{c}", name(i)))
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Every word of content exactly `nu`, in lexicographic order of blocks.
pub fn words_with_content(nu: &[usize]) -> Vec<Word> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    let mut rest = nu.to_vec();
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<(usize, u32)>, out: &mut Vec<Word>) {
        if rest.iter().all(|&r| r == 0) {
            out.push(Word(cur.clone()));
            return;
        }
        for i in 0..rest.len() {
            for c in 1..=rest[i] {
                rest[i] -= c;
                cur.push((i, c as u32));
                go(rest, cur, out);
                cur.pop();
                rest[i] += c;
            }
        }
    }
    go(&mut rest, &mut cur, &mut out);
    out
}

/// Every dimension vector `0 <= mu <= bound`.
pub fn contents_up_to(bound: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &b in bound {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=b).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counting_words() {
        assert_eq!(words_with_content(&[0]), vec![Word::empty()]);
        // compositions of 3
        assert_eq!(words_with_content(&[3]).len(), 4);
        // 1:1,2:1 / 2:1,1:1
        assert_eq!(words_with_content(&[1, 1]).len(), 2);
        assert_eq!(contents_up_to(&[1, 2]).len(), 6);
    }

    #[test]
    fn parse_and_split() {
        let lookup = |s: &str| s.parse::<usize>().map(|k| k - 1).map_err(|_| Error::InvalidInput(s.into()));
        let w = Word::parse("1:2, 2", lookup).unwrap();
        assert_eq!(w, Word(vec![(0, 2), (1, 1)]));
        assert_eq!(w.display(|i| (i + 1).to_string()), "1:2,2:1");
        assert_eq!(w.splits().len(), 3);
        assert_eq!(w.divide(2), None);
        assert_eq!(w.scale(2).divide(2), Some(w.clone()));
        assert!(Word::parse("1:0", lookup).is_err());
    }
}
