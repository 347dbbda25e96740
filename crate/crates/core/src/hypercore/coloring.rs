use serde::{Deserialize, Serialize};

use super::{Hypergraph, HypergraphError};

/// Total map from a domain `1..=len` to colors `1..=num_colors`, every color
/// used at least once.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawColoring")]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

#[derive(Deserialize)]
struct RawColoring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl TryFrom<RawColoring> for Coloring {
    type Error = HypergraphError;

    fn try_from(raw: RawColoring) -> Result<Self, Self::Error> {
        let c = Coloring::new(raw.colors)?;
        if c.num_colors != raw.num_colors {
            return Err(HypergraphError::Coloring(format!(
                "declared {} colors, {} used",
                raw.num_colors, c.num_colors
            )));
        }
        Ok(c)
    }
}

impl Coloring {
    /// `colors[i]` is the color of element `i + 1`. Colors must cover
    /// `1..=max` with no gaps.
    pub fn new(colors: Vec<usize>) -> Result<Self, HypergraphError> {
        let t = colors.iter().copied().max().unwrap_or(0);
        if colors.contains(&0) {
            return Err(HypergraphError::Coloring("color 0 is not allowed".into()));
        }
        let mut used = vec![false; t + 1];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(missing) = (1..=t).find(|&c| !used[c]) {
            return Err(HypergraphError::Coloring(format!("color {missing} unused")));
        }
        Ok(Coloring {
            colors,
            num_colors: t,
        })
    }

    /// Builds a coloring from 0-based labels, renumbering in order of first
    /// appearance.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map = std::collections::HashMap::new();
        let colors = labels
            .iter()
            .map(|l| {
                let next = map.len() + 1;
                *map.entry(*l).or_insert(next)
            })
            .collect();
        Coloring {
            colors,
            num_colors: map.len(),
        }
    }

    pub fn domain_size(&self) -> usize {
        self.colors.len()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Color of element `v` (1-indexed).
    pub fn color(&self, v: usize) -> usize {
        self.colors[v - 1]
    }

    /// Color classes, each increasing.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_colors];
        for (i, &c) in self.colors.iter().enumerate() {
            out[c - 1].push(i + 1);
        }
        out
    }

    /// No edge of `h` is monochromatic and the domain is exactly `[1, n]`.
    pub fn is_proper_for(&self, h: &Hypergraph) -> bool {
        self.colors.len() == h.n()
            && h.edges().iter().all(|e| {
                let c = self.color(e[0]);
                e.iter().any(|&v| self.color(v) != c)
            })
    }
}
