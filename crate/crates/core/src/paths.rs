//! Monotone lattice paths, diagonal constraints and the two counting oracles
//! (rectangle dynamic programming and literal enumeration), plus the prefix
//! reflection used to pair boundary-violating paths with free ones.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numeric::ExactInt;

/// Enumeration refuses instances longer than this unless told otherwise.
pub const DEFAULT_STEP_CAP: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Point {
    pub x: i64,
    pub y: i64,
}

impl Point {
    pub const fn new(x: i64, y: i64) -> Self {
        Point { x, y }
    }

    /// Mirror image across the line `y = x + c`.
    pub fn mirror(self, c: i64) -> Point {
        Point::new(self.y - c, self.x + c)
    }

    pub fn on_line(self, c: i64) -> bool {
        self.y == self.x + c
    }

    fn advance(self, step: Step) -> Point {
        match step {
            Step::Right => Point::new(self.x + 1, self.y),
            Step::Up => Point::new(self.x, self.y + 1),
        }
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// Unit step. `Right < Up` fixes the enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Right,
    Up,
}

impl Step {
    pub fn swapped(self) -> Step {
        match self {
            Step::Right => Step::Up,
            Step::Up => Step::Right,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    start: Point,
    steps: Vec<Step>,
}

impl LatticePath {
    pub fn new(start: Point, steps: Vec<Step>) -> Self {
        LatticePath { start, steps }
    }

    /// Parse a step word such as `"RRUU"`.
    pub fn from_word(start: Point, word: &str) -> Option<Self> {
        let steps = word
            .chars()
            .map(|ch| match ch {
                'R' | 'r' => Some(Step::Right),
                'U' | 'u' => Some(Step::Up),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LatticePath::new(start, steps))
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> Point {
        self.vertices().last().unwrap_or(self.start)
    }

    /// All `len() + 1` vertices in path order, starting with `start()`.
    pub fn vertices(&self) -> impl Iterator<Item = Point> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().scan(self.start, |p, &s| {
            *p = p.advance(s);
            Some(*p)
        }))
    }

    pub fn satisfies(&self, constraint: Constraint) -> bool {
        let end = self.end();
        self.vertices().all(|v| constraint.admits(v, end))
    }

    pub fn word(&self) -> String {
        self.steps
            .iter()
            .map(|s| match s {
                Step::Right => 'R',
                Step::Up => 'U',
            })
            .collect()
    }
}

impl fmt::Display for LatticePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.start, self.word())
    }
}

/// Diagonal constraint relative to the line `y = x + c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Constraint {
    None,
    /// Every vertex satisfies `y <= x + c`.
    NoCross(i64),
    /// Every vertex except the terminal one satisfies `y < x + c`.
    StrictlyBelowUntilEnd(i64),
}

impl Constraint {
    pub fn admits(self, v: Point, end: Point) -> bool {
        match self {
            Constraint::None => true,
            Constraint::NoCross(c) => v.y <= v.x + c,
            Constraint::StrictlyBelowUntilEnd(c) => v == end || v.y < v.x + c,
        }
    }
}

/// Number of monotone paths from `start` to `end` satisfying `constraint`.
///
/// Dynamic programming over the bounding rectangle, with inadmissible cells
/// held at zero. Unreachable endpoints give zero.
pub fn count_paths(start: Point, end: Point, constraint: Constraint) -> ExactInt {
    if end.x < start.x || end.y < start.y {
        return ExactInt::zero();
    }
    let width = (end.x - start.x + 1) as usize;
    let height = (end.y - start.y + 1) as usize;

    // One row per y, swept upward; row[i] holds the count at x = start.x + i.
    let mut row = vec![ExactInt::zero(); width];
    for j in 0..height {
        let y = start.y + j as i64;
        for i in 0..width {
            let p = Point::new(start.x + i as i64, y);
            if !constraint.admits(p, end) {
                row[i] = ExactInt::zero();
                continue;
            }
            if i == 0 && j == 0 {
                row[i] = ExactInt::one();
            } else if i > 0 {
                let left = row[i - 1].clone();
                row[i] += left;
            }
        }
    }
    row.pop().unwrap_or_default()
}

/// Every admissible path from `start` to `end`, once each, in lexicographic
/// step order with `Right < Up`.
pub fn enumerate_paths(
    start: Point,
    end: Point,
    constraint: Constraint,
    step_cap: usize,
) -> Result<Vec<LatticePath>> {
    let dx = end.x - start.x;
    let dy = end.y - start.y;
    if dx + dy > step_cap as i64 {
        return Err(Error::CapExceeded {
            steps: dx + dy,
            cap: step_cap,
        });
    }
    let mut out = Vec::new();
    if dx < 0 || dy < 0 || !constraint.admits(start, end) {
        return Ok(out);
    }
    let mut steps = Vec::with_capacity((dx + dy) as usize);
    walk(start, start, end, constraint, &mut steps, &mut out);
    Ok(out)
}

fn walk(
    origin: Point,
    at: Point,
    end: Point,
    constraint: Constraint,
    steps: &mut Vec<Step>,
    out: &mut Vec<LatticePath>,
) {
    if at == end {
        out.push(LatticePath::new(origin, steps.clone()));
        return;
    }
    for step in [Step::Right, Step::Up] {
        let next = at.advance(step);
        if next.x > end.x || next.y > end.y || !constraint.admits(next, end) {
            continue;
        }
        steps.push(step);
        walk(origin, next, end, constraint, steps, out);
        steps.pop();
    }
}

/// First vertex of `path` on the line `y = x + c`.
pub fn first_touch(path: &LatticePath, c: i64) -> Option<Point> {
    path.vertices().find(|v| v.on_line(c))
}

/// Mirror the prefix of `path` up to its first vertex on `y = x + c` across
/// that line. The suffix and the terminal point are unchanged.
pub fn reflect_prefix(path: &LatticePath, c: i64) -> Result<LatticePath> {
    let idx = path
        .vertices()
        .position(|v| v.on_line(c))
        .ok_or(Error::NoTouch(c))?;
    let steps = path
        .steps
        .iter()
        .enumerate()
        .map(|(i, s)| if i < idx { s.swapped() } else { *s })
        .collect();
    Ok(LatticePath::new(path.start.mirror(c), steps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{binomial, int};
    use proptest::prelude::*;

    fn p(x: i64, y: i64) -> Point {
        Point::new(x, y)
    }

    fn path(x: i64, y: i64, word: &str) -> LatticePath {
        LatticePath::from_word(p(x, y), word).unwrap()
    }

    #[test]
    fn count_examples() {
        assert_eq!(count_paths(p(0, 0), p(2, 2), Constraint::None), int(6));
        assert_eq!(count_paths(p(0, 0), p(2, 2), Constraint::NoCross(0)), int(2));
        assert_eq!(count_paths(p(0, -2), p(1, 1), Constraint::NoCross(0)), int(3));
        assert_eq!(count_paths(p(0, 0), p(-1, 2), Constraint::None), int(0));
        assert_eq!(count_paths(p(3, 3), p(3, 3), Constraint::NoCross(0)), int(1));
        // inadmissible start
        assert_eq!(count_paths(p(0, 1), p(3, 3), Constraint::NoCross(0)), int(0));
    }

    #[test]
    fn count_matches_brute_force_over_all_words() {
        // (0,-2) -> (1,1): all 2^4 words, keep monotone ones ending right.
        let mut hits = 0;
        for mask in 0u32..16 {
            let steps: Vec<Step> = (0..4)
                .map(|b| if mask >> b & 1 == 0 { Step::Right } else { Step::Up })
                .collect();
            let lp = LatticePath::new(p(0, -2), steps);
            if lp.end() == p(1, 1) && lp.satisfies(Constraint::NoCross(0)) {
                hits += 1;
            }
        }
        assert_eq!(hits, 3);
    }

    #[test]
    fn enumerate_examples() {
        let all = enumerate_paths(p(0, 0), p(1, 1), Constraint::None, DEFAULT_STEP_CAP).unwrap();
        let words: Vec<_> = all.iter().map(LatticePath::word).collect();
        assert_eq!(words, ["RU", "UR"]);

        let below = enumerate_paths(p(0, 0), p(1, 1), Constraint::NoCross(0), DEFAULT_STEP_CAP).unwrap();
        let words: Vec<_> = below.iter().map(LatticePath::word).collect();
        assert_eq!(words, ["RU"]);

        let empty = enumerate_paths(p(0, -2), p(0, -2), Constraint::NoCross(0), DEFAULT_STEP_CAP).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].is_empty());
    }

    #[test]
    fn enumerate_cap() {
        let err = enumerate_paths(p(0, 0), p(13, 12), Constraint::None, DEFAULT_STEP_CAP);
        assert_eq!(err, Err(Error::CapExceeded { steps: 25, cap: 24 }));
        assert!(enumerate_paths(p(0, 0), p(12, 12), Constraint::NoCross(0), DEFAULT_STEP_CAP).is_ok());
    }

    #[test]
    fn strict_constraint_exempts_terminal_only() {
        let end = p(1, 1);
        let c = Constraint::StrictlyBelowUntilEnd(0);
        assert!(c.admits(end, end));
        assert!(!c.admits(p(0, 0), end));
        assert!(c.admits(p(1, 0), end));
        assert_eq!(count_paths(p(0, 0), p(0, 0), c), int(1));
        assert_eq!(count_paths(p(0, 0), p(2, 2), c), int(0));
        assert_eq!(count_paths(p(0, -1), p(1, 1), c), int(1));
    }

    #[test]
    fn first_touch_examples() {
        assert_eq!(first_touch(&path(0, -2, "RRUU"), 0), None);
        assert_eq!(first_touch(&path(0, 0, "RU"), 0), Some(p(0, 0)));
        assert_eq!(first_touch(&path(0, -2, "RRUUUU"), 0), Some(p(2, 2)));
    }

    #[test]
    fn reflect_examples() {
        // (0,-1) -> UU touches y = x + 1 at (0,1); the mirrored prefix is RR
        // from (-2,1).
        let q = reflect_prefix(&path(0, -1, "UU"), 1).unwrap();
        assert_eq!(q.start(), p(-2, 1));
        assert_eq!(q.word(), "RR");
        assert_eq!(q.end(), p(0, 1));
        for (v, w) in path(0, -1, "UU").vertices().zip(q.vertices()) {
            assert_eq!(v.mirror(1), w);
        }

        // (0,-1) -> RU never meets y = x + 1.
        assert_eq!(reflect_prefix(&path(0, -1, "RU"), 1), Err(Error::NoTouch(1)));

        // Starting on the line is a fixed point.
        let on = path(0, 1, "RURU");
        assert_eq!(reflect_prefix(&on, 1).unwrap(), on);
    }

    #[test]
    fn oracle_agreement_small() {
        for n in 0..=9i64 {
            for m in 0..=n {
                let (s, e) = (p(0, -2 * m), p(n - m, n - m));
                let listed = enumerate_paths(s, e, Constraint::NoCross(0), DEFAULT_STEP_CAP).unwrap();
                assert_eq!(int(listed.len() as i64), count_paths(s, e, Constraint::NoCross(0)));
                assert!(listed.windows(2).all(|w| w[0].steps() < w[1].steps()));
            }
        }
    }

    #[test]
    fn monotone_count_is_binomial() {
        for dx in 0..=12i64 {
            for dy in 0..=12i64 {
                assert_eq!(
                    count_paths(p(3, -5), p(3 + dx, -5 + dy), Constraint::None),
                    binomial(dx + dy, dx)
                );
            }
        }
    }

    proptest! {
        #[test]
        fn reflection_is_an_involution(x in -5i64..5, y in -5i64..5, word in "[RU]{0,12}", c in -4i64..4) {
            let lp = LatticePath::from_word(Point::new(x, y), &word).unwrap();
            match reflect_prefix(&lp, c) {
                Ok(q) => {
                    prop_assert_eq!(q.end(), lp.end());
                    prop_assert_eq!(reflect_prefix(&q, c).unwrap(), lp);
                }
                Err(e) => {
                    prop_assert_eq!(e, Error::NoTouch(c));
                    prop_assert!(first_touch(&lp, c).is_none());
                }
            }
        }
    }
}
