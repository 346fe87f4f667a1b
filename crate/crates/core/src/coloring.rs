use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::VertexSet;

/// Assignment of colors `0..palette` to vertices.
///
/// A palette of size 0 is the empty palette: no vertex carries a color, so
/// the only rainbow vertex sets are empty ones. Its color vector is empty.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexColoring {
    colors: Vec<u8>,
    palette: usize,
}

impl VertexColoring {
    pub fn new(colors: Vec<u8>, palette: usize) -> Result<VertexColoring> {
        if palette == 0 && !colors.is_empty() {
            return Err(Error::InvalidParameter(
                "the empty palette carries no colors".into(),
            ));
        }
        if palette > 64 {
            return Err(Error::InvalidParameter(format!("palette {palette} exceeds 64 colors")));
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c as usize >= palette) {
            return Err(Error::ColorOutOfPalette { vertex, color, palette });
        }
        Ok(VertexColoring { colors, palette })
    }

    /// Palette size is taken as one more than the largest color.
    pub fn from_colors(colors: Vec<u8>) -> Result<VertexColoring> {
        let palette = colors.iter().map(|&c| c as usize + 1).max().unwrap_or(0);
        VertexColoring::new(colors, palette)
    }

    pub fn empty_palette() -> VertexColoring {
        VertexColoring { colors: Vec::new(), palette: 0 }
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn palette(&self) -> usize {
        self.palette
    }

    /// Number of distinct colors actually present.
    pub fn colors_used(&self) -> usize {
        self.colors.iter().fold(0u64, |m, &c| m | 1 << c).count_ones() as usize
    }

    /// Checks the coloring fits a graph of order `n`.
    pub fn check_order(&self, n: usize) -> Result<()> {
        if self.palette > 0 && self.colors.len() != n {
            return Err(Error::ColoringLength { got: self.colors.len(), n });
        }
        Ok(())
    }

    /// Whether the vertices of `set` carry pairwise distinct colors.
    pub fn is_rainbow(&self, set: VertexSet) -> bool {
        is_rainbow(&self.colors, self.palette, set)
    }
}

/// Rainbow test on a raw color slice; an empty palette admits only `{}`.
pub(crate) fn is_rainbow(colors: &[u8], palette: usize, set: VertexSet) -> bool {
    if palette == 0 {
        return set.is_empty();
    }
    let mut seen = 0u64;
    for v in set {
        let bit = 1u64 << colors[v];
        if seen & bit != 0 {
            return false;
        }
        seen |= bit;
    }
    true
}

impl fmt::Debug for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VertexColoring[{}]({self})", self.palette)
    }
}

/// Comma-separated colors indexed by vertex, e.g. `0,1,0,2`. The empty
/// palette renders as the empty string.
impl fmt::Display for VertexColoring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl FromStr for VertexColoring {
    type Err = Error;

    fn from_str(s: &str) -> Result<VertexColoring> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(VertexColoring::empty_palette());
        }
        let colors = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<u8>()
                    .map_err(|_| Error::InvalidParameter(format!("unparsable color {tok:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        VertexColoring::from_colors(colors)
    }
}

/// Restricted-growth strings of length `n` using exactly `blocks` symbols, in
/// lexicographic order. Each string is a coloring up to renaming of colors:
/// `s[0] = 0` and `s[i] <= 1 + max(s[..i])`.
///
/// Iteration is in place: call [`advance`](Self::advance) and then read
/// [`current`](Self::current).
pub struct RestrictedGrowth {
    s: Vec<u8>,
    // prefix maxima: max_prefix[i] = max(s[..=i])
    max_prefix: Vec<u8>,
    blocks: usize,
    started: bool,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize, blocks: usize) -> RestrictedGrowth {
        let done = n == 0 || blocks == 0 || blocks > n;
        RestrictedGrowth {
            s: vec![0; n],
            max_prefix: vec![0; n],
            blocks,
            started: false,
            done,
        }
    }

    pub fn current(&self) -> &[u8] {
        &self.s
    }

    /// Moves to the next string; returns `false` once exhausted.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if !self.started {
            self.started = true;
            self.fill_from(1);
            return true;
        }
        let n = self.s.len();
        let top = self.blocks as u8 - 1;
        // rightmost position that can still grow
        for i in (1..n).rev() {
            let limit = (self.max_prefix[i - 1] + 1).min(top);
            while self.s[i] < limit {
                self.s[i] += 1;
                self.max_prefix[i] = self.max_prefix[i - 1].max(self.s[i]);
                let needed = top.saturating_sub(self.max_prefix[i]) as usize;
                if needed <= n - 1 - i {
                    self.fill_from(i + 1);
                    return true;
                }
            }
        }
        self.done = true;
        false
    }

    // Lexicographically least completion of s[..start] that still reaches
    // `blocks` symbols.
    fn fill_from(&mut self, start: usize) {
        let n = self.s.len();
        let top = self.blocks as u8 - 1;
        for i in start..n {
            let prev = self.max_prefix[i - 1];
            let remaining = n - i;
            let missing = (top - prev) as usize;
            self.s[i] = if missing >= remaining { prev + 1 } else { 0 };
            self.max_prefix[i] = prev.max(self.s[i]);
        }
    }
}
