use crate::error::{Error, Result};

pub const MAX_ORACLE_WALK_LENGTH: usize = 24;

/// A `+-1` walk confined to the strip `0..=m-1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StripWalk {
    m: usize,
    heights: Vec<usize>,
}

impl StripWalk {
    pub fn new(m: usize, heights: Vec<usize>) -> Result<Self> {
        if m == 0 {
            return Err(Error::LevelTooSmall { m, min: 1 });
        }
        if heights.is_empty() {
            return Err(Error::InvalidWalk("a walk visits at least one vertex".into()));
        }
        if let Some(&h) = heights.iter().find(|&&h| h >= m) {
            return Err(Error::InvalidWalk(format!("height {h} leaves the strip 0..={}", m - 1)));
        }
        if let Some(w) = heights.windows(2).find(|w| w[0].abs_diff(w[1]) != 1) {
            return Err(Error::InvalidWalk(format!("step {} -> {} is not +-1", w[0], w[1])));
        }
        Ok(Self { m, heights })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn start(&self) -> usize {
        self.heights[0]
    }

    pub fn end(&self) -> usize {
        *self.heights.last().expect("nonempty")
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.heights.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// `(L - |b - a|) / 2`. For `a > b` this is the excess of the reversed walk.
    pub fn excess(&self) -> usize {
        (self.len() - self.start().abs_diff(self.end())) / 2
    }
}

/// Every walk of length `len` from `a` to `b` in the strip of height `m-1`,
/// by depth-first search in lexicographic order of the height word.
pub fn enumerate_strip_walks(m: usize, a: usize, b: usize, len: usize) -> Result<Vec<StripWalk>> {
    if len > MAX_ORACLE_WALK_LENGTH {
        return Err(Error::OracleLimit {
            what: "L",
            value: len,
            limit: MAX_ORACLE_WALK_LENGTH,
        });
    }
    if m == 0 {
        return Err(Error::LevelTooSmall { m, min: 1 });
    }
    for v in [a, b] {
        if v >= m {
            return Err(Error::VertexOutOfStrip { vertex: v, max: m - 1 });
        }
    }
    let mut out = Vec::new();
    let mut path = vec![a];
    dfs(m, b, len, &mut path, &mut out);
    Ok(out)
}

fn dfs(m: usize, target: usize, len: usize, path: &mut Vec<usize>, out: &mut Vec<StripWalk>) {
    let here = *path.last().expect("nonempty");
    let remaining = len + 1 - path.len();
    if remaining == 0 {
        if here == target {
            out.push(StripWalk { m, heights: path.clone() });
        }
        return;
    }
    if here.abs_diff(target) > remaining {
        return;
    }
    let mut next = Vec::with_capacity(2);
    if here > 0 {
        next.push(here - 1);
    }
    if here + 1 < m {
        next.push(here + 1);
    }
    for h in next {
        path.push(h);
        dfs(m, target, len, path, out);
        path.pop();
    }
}
