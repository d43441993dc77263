use std::fmt;

use num_bigint::BigInt;

use super::transfer::{strip_walk_count, walk_counts};
use super::walks::StripWalk;
use crate::error::{Error, Result};

pub const MAX_ORACLE_SEMILENGTH: usize = 12;

/// Ordered so that `Down < Up`, matching the letters `D < U`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Down,
    Up,
}

/// A path of up and down steps that returns to the axis and never dips below it.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath {
    steps: Vec<Step>,
}

impl DyckPath {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut level: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            level += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if level < 0 {
                return Err(Error::InvalidDyckPath(format!("falls below the axis at step {i}")));
            }
        }
        if level != 0 {
            return Err(Error::InvalidDyckPath(format!("ends at height {level}")));
        }
        Ok(Self { steps })
    }

    /// Parses a word over `U`/`D`.
    pub fn parse(word: &str) -> Result<Self> {
        let steps = word
            .chars()
            .map(|c| match c {
                'U' => Ok(Step::Up),
                'D' => Ok(Step::Down),
                other => Err(Error::InvalidDyckPath(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn height(&self) -> usize {
        let mut level = 0usize;
        let mut max = 0;
        for s in &self.steps {
            match s {
                Step::Up => level += 1,
                Step::Down => level -= 1,
            }
            max = max.max(level);
        }
        max
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

/// Selects `D_m(a, b; u)`: Dyck paths of height at most `m-1` and semilength
/// `m-1-b+u` that open with `a` up-steps and close with `m-1-b` down-steps.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DyckConstraint {
    pub m: usize,
    pub a: usize,
    pub b: usize,
    pub u: usize,
}

impl DyckConstraint {
    pub fn new(m: usize, a: usize, b: usize, u: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::LevelTooSmall { m, min: 1 });
        }
        if a + b > m - 1 {
            return Err(Error::InvalidConstraint(format!(
                "need a + b <= m - 1, got a={a}, b={b}, m={m}"
            )));
        }
        Ok(Self { m, a, b, u })
    }

    pub fn semilength(&self) -> usize {
        self.m - 1 - self.b + self.u
    }

    /// Height at which the middle walk ends.
    pub fn walk_end(&self) -> usize {
        self.m - 1 - self.b
    }

    /// Length of the middle walk, `m-1-a-b+2u`.
    pub fn walk_len(&self) -> usize {
        self.m - 1 - self.a - self.b + 2 * self.u
    }

    fn contains(&self, path: &DyckPath) -> bool {
        let steps = path.steps();
        let tail = self.m - 1 - self.b;
        path.semilength() == self.semilength()
            && path.height() < self.m
            && steps.len() >= self.a + tail
            && steps[..self.a].iter().all(|&s| s == Step::Up)
            && steps[steps.len() - tail..].iter().all(|&s| s == Step::Down)
    }
}

/// `D_m(a, b; u)`, counted as strip walks from `a` to `m-1-b` of length `m-1-a-b+2u`.
pub fn dyck_count(c: &DyckConstraint) -> Result<BigInt> {
    strip_walk_count(c.m, c.a, c.walk_end(), c.walk_len())
}

/// `D_m(a, b; u)` for `u = 0..=max_u`, in one transfer-matrix pass.
pub fn dyck_counts(m: usize, a: usize, b: usize, max_u: usize) -> Result<Vec<BigInt>> {
    let c = DyckConstraint::new(m, a, b, 0)?;
    let all = walk_counts(m, a, c.walk_end(), c.walk_len() + 2 * max_u)?;
    Ok(all.into_iter().skip(c.walk_len()).step_by(2).collect())
}

/// Every path of `D_m(a, b; u)` in lexicographic order of the step word, by
/// generating all Dyck paths of the right semilength and height and
/// filtering on the forced prefix and suffix.
pub fn enumerate_dyck(c: &DyckConstraint) -> Result<Vec<DyckPath>> {
    let n = c.semilength();
    if n > MAX_ORACLE_SEMILENGTH {
        return Err(Error::OracleLimit {
            what: "semilength",
            value: n,
            limit: MAX_ORACLE_SEMILENGTH,
        });
    }
    let mut all = Vec::new();
    let mut word = Vec::with_capacity(2 * n);
    generate(n, c.m - 1, 0, 0, &mut word, &mut all);
    Ok(all.into_iter().filter(|p| c.contains(p)).collect())
}

fn generate(
    n: usize,
    max_height: usize,
    ups: usize,
    level: usize,
    word: &mut Vec<Step>,
    out: &mut Vec<DyckPath>,
) {
    if word.len() == 2 * n {
        out.push(DyckPath { steps: word.clone() });
        return;
    }
    if level > 0 {
        word.push(Step::Down);
        generate(n, max_height, ups, level - 1, word, out);
        word.pop();
    }
    if ups < n && level < max_height {
        word.push(Step::Up);
        generate(n, max_height, ups + 1, level + 1, word, out);
        word.pop();
    }
}

/// `U^a w(gamma) D^{m-1-b}` for a walk from `a` to `m-1-b` of length `m-1-a-b+2u`.
pub fn walk_to_dyck(walk: &StripWalk, c: &DyckConstraint) -> Result<DyckPath> {
    if walk.m() != c.m || walk.start() != c.a || walk.end() != c.walk_end() || walk.len() != c.walk_len() {
        return Err(Error::InvalidWalk(format!(
            "walk {:?} (m={}) is not in W_{}({}, {}; {})",
            walk.heights(),
            walk.m(),
            c.m,
            c.a,
            c.b,
            c.u
        )));
    }
    let mut steps = vec![Step::Up; c.a];
    steps.extend(walk.heights().windows(2).map(|w| if w[1] > w[0] { Step::Up } else { Step::Down }));
    steps.extend(std::iter::repeat_n(Step::Down, c.walk_end()));
    Ok(DyckPath { steps })
}

/// Strips the forced blocks from a path of `D_m(a, b; u)` and reads the
/// middle segment as a strip walk starting at height `a`.
pub fn dyck_to_walk(path: &DyckPath, c: &DyckConstraint) -> Result<StripWalk> {
    if !c.contains(path) {
        return Err(Error::InvalidDyckPath(format!(
            "{path} is not in D_{}({}, {}; {})",
            c.m, c.a, c.b, c.u
        )));
    }
    let steps = path.steps();
    let middle = &steps[c.a..steps.len() - c.walk_end()];
    let mut heights = Vec::with_capacity(middle.len() + 1);
    let mut h = c.a;
    heights.push(h);
    for s in middle {
        match s {
            Step::Up => h += 1,
            Step::Down => h -= 1,
        }
        heights.push(h);
    }
    StripWalk::new(c.m, heights)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pathcomb::enumerate_strip_walks;

    fn words(paths: &[DyckPath]) -> Vec<String> {
        paths.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn count_examples() {
        for m in 1..6 {
            for a in 0..m {
                for b in 0..m - a {
                    let c = DyckConstraint::new(m, a, b, 0).unwrap();
                    assert_eq!(dyck_count(&c).unwrap(), BigInt::from(1), "m={m} a={a} b={b}");
                }
            }
        }
        let c = DyckConstraint::new(3, 0, 0, 1).unwrap();
        assert_eq!(dyck_count(&c).unwrap(), BigInt::from(2));
        for u in 0..=8 {
            let c = DyckConstraint::new(2, 0, 0, u).unwrap();
            assert_eq!(dyck_count(&c).unwrap(), BigInt::from(1));
        }
    }

    #[test]
    fn enumeration_examples() {
        let c = DyckConstraint::new(3, 0, 0, 1).unwrap();
        assert_eq!(words(&enumerate_dyck(&c).unwrap()), ["UDUUDD", "UUDUDD"]);
        let c = DyckConstraint::new(2, 0, 0, 1).unwrap();
        assert_eq!(words(&enumerate_dyck(&c).unwrap()), ["UDUD"]);
        let c = DyckConstraint::new(3, 1, 0, 0).unwrap();
        assert_eq!(words(&enumerate_dyck(&c).unwrap()), ["UUDD"]);
        let c = DyckConstraint::new(3, 0, 2, 0).unwrap();
        assert_eq!(words(&enumerate_dyck(&c).unwrap()), [""]);
    }

    #[test]
    fn constraint_and_guard_errors() {
        assert!(DyckConstraint::new(3, 2, 1, 0).is_err());
        assert!(DyckConstraint::new(0, 0, 0, 0).is_err());
        let c = DyckConstraint::new(3, 0, 0, 11).unwrap();
        assert!(matches!(enumerate_dyck(&c), Err(Error::OracleLimit { .. })));
        let c = DyckConstraint::new(3, 0, 0, 10).unwrap();
        assert!(enumerate_dyck(&c).is_ok());
    }

    #[test]
    fn path_validation() {
        assert!(DyckPath::parse("UDDU").is_err());
        assert!(DyckPath::parse("UUD").is_err());
        assert!(DyckPath::parse("UXD").is_err());
        let p = DyckPath::parse("UUDUDD").unwrap();
        assert_eq!((p.semilength(), p.height()), (3, 2));
    }

    #[test]
    fn bijection_examples() {
        let c = DyckConstraint::new(2, 0, 1, 0).unwrap();
        let w = StripWalk::new(2, vec![0]).unwrap();
        assert_eq!(walk_to_dyck(&w, &c).unwrap().to_string(), "");

        let c = DyckConstraint::new(2, 0, 0, 0).unwrap();
        let w = StripWalk::new(2, vec![0, 1]).unwrap();
        let p = walk_to_dyck(&w, &c).unwrap();
        assert_eq!(p.to_string(), "UD");
        assert_eq!(dyck_to_walk(&p, &c).unwrap(), w);

        // W_3(0, 0; 1): walks 0 -> 2 of length 4
        let c = DyckConstraint::new(3, 0, 0, 1).unwrap();
        for w in enumerate_strip_walks(3, 0, 2, 4).unwrap() {
            let p = walk_to_dyck(&w, &c).unwrap();
            assert_eq!(dyck_to_walk(&p, &c).unwrap(), w);
        }
    }

    #[test]
    fn bijection_rejects_foreign_inputs() {
        let c = DyckConstraint::new(3, 0, 0, 1).unwrap();
        let short = StripWalk::new(3, vec![0, 1, 2]).unwrap();
        assert!(walk_to_dyck(&short, &c).is_err());
        let other_strip = StripWalk::new(4, vec![0, 1, 0, 1, 2]).unwrap();
        assert!(walk_to_dyck(&other_strip, &c).is_err());
        // right semilength but tall
        let tall = DyckPath::parse("UUUDDD").unwrap();
        assert!(dyck_to_walk(&tall, &c).is_err());
        // right shape but missing the closing block
        let open = DyckPath::parse("UUDDUD").unwrap();
        assert!(dyck_to_walk(&open, &c).is_err());
    }

    #[test]
    fn batch_counts_match_single_counts() {
        for m in 1..6 {
            for a in 0..m {
                for b in 0..m - a {
                    let batch = dyck_counts(m, a, b, 6).unwrap();
                    for (u, v) in batch.iter().enumerate() {
                        let c = DyckConstraint::new(m, a, b, u).unwrap();
                        assert_eq!(v, &dyck_count(&c).unwrap());
                    }
                }
            }
        }
    }
}
