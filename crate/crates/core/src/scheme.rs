//! Nesting schemes of ovals.
//!
//! A scheme is an unordered rooted forest: every oval is a node whose
//! children are the ovals it immediately encloses. Schemes are always kept
//! in canonical form, so structural equality is isomorphism of forests.
//!
//! The text notation is
//!
//! ```text
//! scheme := ε | group ("+" group)*
//! group  := COUNT | COUNT "<" scheme ">"
//! ```
//!
//! where `COUNT` is a positive decimal integer and whitespace is ignored.
//! `c` alone stands for `c` empty ovals and `c<s>` for `c` disjoint ovals
//! each enclosing a copy of `s`, so `1<5>+5` is the Gudkov scheme.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Upper bound on the number of ovals a parsed scheme may expand to.
pub const MAX_PARSED_OVALS: usize = 100_000;

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct OvalNode {
    children: Vec<OvalNode>,
}

impl OvalNode {
    pub fn leaf() -> Self {
        OvalNode::default()
    }

    /// An oval enclosing `children`, which are put in canonical order.
    pub fn new(mut children: Vec<OvalNode>) -> Self {
        canonical_sort(&mut children);
        OvalNode { children }
    }

    pub fn children(&self) -> &[OvalNode] {
        &self.children
    }

    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    /// Number of ovals in this subtree, this one included.
    pub fn size(&self) -> usize {
        1 + self.children.iter().map(OvalNode::size).sum::<usize>()
    }

    /// Canonical notation of this oval alone, e.g. `1` or `1<3>`.
    pub fn code(&self) -> String {
        let mut out = String::new();
        write_forest(std::slice::from_ref(self), &mut out);
        out
    }
}

/// Sibling order is by the code of the single oval.
impl Ord for OvalNode {
    fn cmp(&self, other: &Self) -> Ordering {
        self.code().cmp(&other.code())
    }
}

impl PartialOrd for OvalNode {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Descending code order; equal siblings end up adjacent.
fn canonical_sort(nodes: &mut [OvalNode]) {
    nodes.sort_by_cached_key(|n| std::cmp::Reverse(n.code()));
}

fn write_forest(nodes: &[OvalNode], out: &mut String) {
    let mut first = true;
    for run in nodes.chunk_by(|a, b| a == b) {
        if !first {
            out.push('+');
        }
        first = false;
        out.push_str(&run.len().to_string());
        let node = &run[0];
        if !node.is_leaf() {
            out.push('<');
            write_forest(&node.children, out);
            out.push('>');
        }
    }
}

/// A nesting scheme in canonical form.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct RealScheme {
    roots: Vec<OvalNode>,
}

impl RealScheme {
    pub fn empty() -> Self {
        RealScheme::default()
    }

    pub fn from_roots(mut roots: Vec<OvalNode>) -> Self {
        canonical_sort(&mut roots);
        RealScheme { roots }
    }

    /// `count` unnested ovals.
    pub fn unnested(count: usize) -> Self {
        RealScheme { roots: vec![OvalNode::leaf(); count] }
    }

    pub fn roots(&self) -> &[OvalNode] {
        &self.roots
    }

    pub fn oval_count(&self) -> usize {
        self.roots.iter().map(OvalNode::size).sum()
    }

    /// Depth of every oval in preorder; outermost ovals have depth 0.
    pub fn depths(&self) -> Vec<usize> {
        fn walk(node: &OvalNode, depth: usize, out: &mut Vec<usize>) {
            out.push(depth);
            for child in &node.children {
                walk(child, depth + 1, out);
            }
        }
        let mut out = Vec::with_capacity(self.oval_count());
        for root in &self.roots {
            walk(root, 0, &mut out);
        }
        out
    }

    pub fn stats(&self) -> SchemeStats {
        SchemeStats::from_depths(&self.depths())
    }
}

impl fmt::Display for RealScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        write_forest(&self.roots, &mut out);
        f.write_str(&out)
    }
}

/// Schemes are ordered by their canonical notation.
impl Ord for RealScheme {
    fn cmp(&self, other: &Self) -> Ordering {
        self.to_string().cmp(&other.to_string())
    }
}

impl PartialOrd for RealScheme {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for RealScheme {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_scheme(s)
    }
}

impl Serialize for RealScheme {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RealScheme {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(de)?;
        parse_scheme(&text).map_err(serde::de::Error::custom)
    }
}

pub fn format_scheme(scheme: &RealScheme) -> String {
    scheme.to_string()
}

pub fn parse_scheme(text: &str) -> Result<RealScheme> {
    let mut parser = Parser { src: text.as_bytes(), pos: 0 };
    let (roots, _) = parser.scheme()?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.unexpected(c, "expected '+' or end of input"));
    }
    Ok(RealScheme::from_roots(roots))
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn unexpected(&self, c: u8, expected: &str) -> Error {
        let found = if c.is_ascii() { format!("{:?}", c as char) } else { "non-ASCII character".to_string() };
        Error::Syntax { pos: self.pos, msg: format!("unexpected {found}, {expected}") }
    }

    fn eof(&self, expected: &str) -> Error {
        Error::Syntax { pos: self.pos, msg: format!("unexpected end of input, {expected}") }
    }

    /// Returns the ovals together with their total count.
    fn scheme(&mut self) -> Result<(Vec<OvalNode>, usize)> {
        let mut nodes = Vec::new();
        let mut total = 0usize;
        self.skip_ws();
        if matches!(self.peek(), None | Some(b'>')) {
            return Ok((nodes, 0));
        }
        loop {
            total = self.group(&mut nodes, total)?;
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                self.skip_ws();
            } else {
                return Ok((nodes, total));
            }
        }
    }

    fn group(&mut self, nodes: &mut Vec<OvalNode>, total: usize) -> Result<usize> {
        let start = self.pos;
        let count = self.count()?;
        self.skip_ws();
        let (node, size) = if self.peek() == Some(b'<') {
            self.pos += 1;
            let (children, inner) = self.scheme()?;
            self.skip_ws();
            match self.peek() {
                Some(b'>') => self.pos += 1,
                Some(c) => return Err(self.unexpected(c, "expected '+' or '>'")),
                None => return Err(self.eof("expected '>'")),
            }
            (OvalNode { children }, inner + 1)
        } else {
            (OvalNode::leaf(), 1)
        };
        let total = count
            .checked_mul(size)
            .and_then(|added| added.checked_add(total))
            .filter(|&t| t <= MAX_PARSED_OVALS)
            .ok_or(Error::SchemeTooLarge { pos: start, limit: MAX_PARSED_OVALS })?;
        nodes.extend(std::iter::repeat_n(node, count));
        Ok(total)
    }

    fn count(&mut self) -> Result<usize> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(match self.peek() {
                Some(c) => self.unexpected(c, "expected a count"),
                None => self.eof("expected a count"),
            });
        }
        let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
        let count = digits
            .parse::<usize>()
            .ok()
            .filter(|&c| c <= MAX_PARSED_OVALS)
            .ok_or(Error::SchemeTooLarge { pos: start, limit: MAX_PARSED_OVALS })?;
        if count == 0 {
            return Err(Error::ZeroCount { pos: start });
        }
        Ok(count)
    }
}

/// Counting invariants of a scheme.
///
/// `p` and `n` count ovals at even and odd depth. `chi_r = p - n` is the
/// Euler characteristic of the orientable region bounded by the ovals from
/// inside, and `chi_n = 1 - chi_r` that of its complement in the projective
/// plane. `nested_pairs` counts ordered pairs of ovals where one encloses
/// the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SchemeStats {
    pub r: usize,
    pub p: usize,
    pub n: usize,
    #[serde(rename = "chi_R")]
    pub chi_r: i64,
    #[serde(rename = "chi_N")]
    pub chi_n: i64,
    #[serde(rename = "P")]
    pub nested_pairs: u64,
    pub depth_max: usize,
}

impl SchemeStats {
    pub fn from_depths(depths: &[usize]) -> Self {
        let r = depths.len();
        let n = depths.iter().filter(|&&d| d % 2 == 1).count();
        let p = r - n;
        let chi_r = p as i64 - n as i64;
        SchemeStats {
            r,
            p,
            n,
            chi_r,
            chi_n: 1 - chi_r,
            // each oval lies inside exactly `depth` others
            nested_pairs: depths.iter().map(|&d| d as u64).sum(),
            depth_max: depths.iter().copied().max().unwrap_or(0),
        }
    }
}
