//! Enumeration of all schemes with a given number of ovals.
//!
//! A forest on `r` ovals is a rooted tree on `r + 1` nodes with the root
//! removed, so we walk the canonical level sequences of rooted trees
//! (Beyer–Hedetniemi successor rule). Each isomorphism class appears exactly
//! once and the iterator holds only the current sequence.

use crate::error::{Error, Result};
use crate::scheme::{OvalNode, RealScheme};

/// Harnack number of degree 8.
pub const DEFAULT_ENUMERATION_CAP: usize = 22;

pub fn enumerate_schemes(ovals: usize) -> Result<SchemeIter> {
    enumerate_schemes_capped(ovals, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_schemes_capped(ovals: usize, cap: usize) -> Result<SchemeIter> {
    if ovals == 0 {
        return Err(Error::EmptyEnumeration);
    }
    if ovals > cap {
        return Err(Error::EnumerationCap { requested: ovals, cap });
    }
    Ok(SchemeIter { levels: Some((1..=ovals + 1).collect()) })
}

/// Stream of schemes in canonical form, one per isomorphism class.
#[derive(Debug, Clone)]
pub struct SchemeIter {
    // level sequence of the current tree, root at level 1
    levels: Option<Vec<usize>>,
}

impl SchemeIter {
    fn advance(levels: &[usize]) -> Option<Vec<usize>> {
        let p = levels.iter().rposition(|&l| l != 2)?;
        if p == 0 {
            return None;
        }
        let q = levels[..p].iter().rposition(|&l| l == levels[p] - 1)?;
        let shift = p - q;
        let mut next = levels.to_vec();
        for i in p..next.len() {
            next[i] = next[i - shift];
        }
        Some(next)
    }
}

impl Iterator for SchemeIter {
    type Item = RealScheme;

    fn next(&mut self) -> Option<RealScheme> {
        let levels = self.levels.take()?;
        self.levels = Self::advance(&levels);
        let mut idx = 0;
        let roots = build(&levels[1..], &mut idx, 2);
        Some(RealScheme::from_roots(roots))
    }
}

fn build(levels: &[usize], idx: &mut usize, level: usize) -> Vec<OvalNode> {
    let mut nodes = Vec::new();
    while *idx < levels.len() && levels[*idx] == level {
        *idx += 1;
        nodes.push(OvalNode::new(build(levels, idx, level + 1)));
    }
    nodes
}
