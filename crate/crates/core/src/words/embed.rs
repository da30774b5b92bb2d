use crate::error::Result;
use crate::logic::alphabet::{FiniteWord, Letter};
use crate::words::expr::{Coord, FlatWord, WordExpr};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Embedding {
    Indices(Vec<usize>),
    Coords(Vec<Coord>),
}

/// Greedy-leftmost subset-subsequence matching. Anchored matching pins the first letter to position 0.
pub fn embed_indices(u: &[Letter], t: &[Letter], anchored: bool) -> Option<Vec<usize>> {
    let mut out = Vec::with_capacity(u.len());
    let mut j = 0;
    for (i, &a) in u.iter().enumerate() {
        if anchored && i == 0 {
            if t.is_empty() || !a.is_subset(t[0]) {
                return None;
            }
            out.push(0);
            j = 1;
            continue;
        }
        while j < t.len() && !a.is_subset(t[j]) {
            j += 1;
        }
        if j == t.len() {
            return None;
        }
        out.push(j);
        j += 1;
    }
    Some(out)
}

/// Allocation-free verdict of [`embed_indices`].
pub fn embeds_in(u: &[Letter], t: &[Letter], anchored: bool) -> bool {
    let mut rest = u;
    let mut j = 0;
    if anchored {
        match (u.first(), t.first()) {
            (None, _) => return true,
            (Some(a), Some(b)) if a.is_subset(*b) => {
                rest = &u[1..];
                j = 1;
            }
            _ => return false,
        }
    }
    for &a in rest {
        while j < t.len() && !a.is_subset(t[j]) {
            j += 1;
        }
        if j == t.len() {
            return false;
        }
        j += 1;
    }
    true
}

pub fn embeds_word(u: &FiniteWord, t: &FiniteWord, anchored: bool) -> bool {
    embeds_in(u.letters(), t.letters(), anchored)
}

/// Embedding into a flat word, decided on its unfolding with `|u|` copies per ω-block.
pub fn embeds_flat(u: &FiniteWord, t: &FlatWord, anchored: bool) -> Option<Vec<Coord>> {
    let (word, coords) = t.unfold_coords(u.len().max(1));
    embed_indices(u.letters(), word.letters(), anchored).map(|ix| ix.into_iter().map(|i| coords[i]).collect())
}

pub fn embeds(u: &FiniteWord, target: &WordExpr, anchored: bool) -> Result<Option<Embedding>> {
    let flat = target.to_flat()?;
    Ok(embeds_flat(u, &flat, anchored).map(Embedding::Coords))
}
