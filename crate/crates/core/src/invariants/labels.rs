//! Free-homotopy labels of boundary curves.
//!
//! A ribbon graph surface retracts onto its underlying graph, whose
//! fundamental group is free on the edges of a spanning forest's complement.
//! Working directly with words in all edges, a closed walk is determined up to
//! free homotopy by its cyclically reduced word up to rotation.

use std::fmt;

use crate::ribbon::{EdgeId, RibbonGraph, Walk};

/// One traversal of an edge: forwards (tail dart to head dart) or backwards.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub edge: EdgeId,
    pub inverse: bool,
}

impl Letter {
    pub fn inv(self) -> Letter {
        Letter {
            edge: self.edge,
            inverse: !self.inverse,
        }
    }
}

/// A conjugacy class of the free group on the edges: a cyclically reduced
/// word in its lexicographically least rotation. The empty word is the
/// trivial class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CyclicWord {
    letters: Vec<Letter>,
}

impl CyclicWord {
    /// Canonical form of the cyclic word read around a closed walk.
    pub fn new(letters: impl IntoIterator<Item = Letter>) -> CyclicWord {
        let mut stack: Vec<Letter> = Vec::new();
        for l in letters {
            if stack.last() == Some(&l.inv()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        let (mut lo, mut hi) = (0, stack.len());
        while hi - lo >= 2 && stack[lo] == stack[hi - 1].inv() {
            lo += 1;
            hi -= 1;
        }
        let reduced = &stack[lo..hi];
        let n = reduced.len();
        let best = (0..n)
            .min_by(|&a, &b| {
                let ra = reduced[a..].iter().chain(&reduced[..a]);
                let rb = reduced[b..].iter().chain(&reduced[..b]);
                ra.cmp(rb)
            })
            .unwrap_or(0);
        let mut letters = reduced[best..].to_vec();
        letters.extend_from_slice(&reduced[..best]);
        CyclicWord { letters }
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

    /// Whether this is the class of the identity.
    pub fn is_trivial(&self) -> bool {
        self.is_empty()
    }

    /// The word with edges named by `names`, letters joined by `.`, inverse
    /// letters primed; `1` for the trivial class.
    pub fn display<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        WordDisplay { word: self, names }
    }
}

struct WordDisplay<'a> {
    word: &'a CyclicWord,
    names: &'a [String],
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_trivial() {
            return f.write_str("1");
        }
        for (i, l) in self.word.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(".")?;
            }
            f.write_str(&self.names[l.edge])?;
            if l.inverse {
                f.write_str("'")?;
            }
        }
        Ok(())
    }
}

/// Label of a boundary walk: the edge traversals along it, reduced.
pub fn boundary_label(g: &RibbonGraph, walk: &Walk) -> CyclicWord {
    CyclicWord::new(walk.darts.iter().map(|&d| {
        let edge = g.dart_edge(d);
        Letter {
            edge,
            inverse: g.edge(edge).darts[1] == d,
        }
    }))
}
