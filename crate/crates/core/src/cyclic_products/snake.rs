//! Snake matrices: zigzag derived matrices whose two trees alternate large
//! corollas of arities `n` and `m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::su_diagonal::{DerivedWitness, Shift, SparseIntMatrix};
use crate::trees::{tonks, PlanarTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Variant {
    /// `k` vertical and `k` horizontal runs.
    Full,
    /// `k` vertical and `k - 1` horizontal runs, ending vertically.
    DropRight,
    /// `k` horizontal and `k - 1` vertical runs, starting horizontally.
    DropDown,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Full => "full",
            Variant::DropRight => "drop-right",
            Variant::DropDown => "drop-down",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "full" => Ok(Variant::Full),
            "drop-right" => Ok(Variant::DropRight),
            "drop-down" => Ok(Variant::DropDown),
            _ => Err(Error::Parse {
                token: s.to_string(),
                reason: "expected full, drop-right or drop-down".into(),
            }),
        }
    }
}

/// A snake: vertical runs of `n - 1` entries (columns, corollas of arity
/// `n` in the left tree) and horizontal runs of `m - 1` entries (rows,
/// corollas of arity `m` in the right tree), consecutive runs sharing
/// their corner entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SnakeSpec {
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub variant: Variant,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Run {
    Down,
    Right,
}

impl SnakeSpec {
    pub fn new(n: usize, m: usize, k: usize, variant: Variant) -> Result<Self> {
        let spec = Self { n, m, k, variant };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.m <= 3 || self.n < self.m {
            return Err(Error::Contract(format!(
                "snakes need n ≥ m > 3, got n = {}, m = {}",
                self.n, self.m
            )));
        }
        if self.k == 0 && self.variant != Variant::Full {
            return Err(Error::Contract("the dropped variants need k ≥ 1".into()));
        }
        Ok(())
    }

    fn runs(&self) -> Vec<Run> {
        let (first, second, count_first, count_second) = match self.variant {
            Variant::Full => (Run::Down, Run::Right, self.k, self.k),
            Variant::DropRight => (Run::Down, Run::Right, self.k, self.k.saturating_sub(1)),
            Variant::DropDown => (Run::Right, Run::Down, self.k, self.k.saturating_sub(1)),
        };
        let mut out = Vec::new();
        for i in 0..count_first {
            out.push(first);
            if i < count_second {
                out.push(second);
            }
        }
        out
    }

    /// `k(n-2) + k(m-2) + 2` for the full snake, one run fewer otherwise.
    pub fn arity(&self) -> usize {
        self.runs()
            .iter()
            .map(|r| match r {
                Run::Down => self.n - 2,
                Run::Right => self.m - 2,
            })
            .sum::<usize>()
            + 2
    }

    /// For each value `1..=arity-1`, its cell in the snake and whether it
    /// was reached by a downward step (`None` for the starting corner).
    fn path(&self) -> Vec<((usize, usize), Option<Run>)> {
        let mut out = vec![((0, 0), None)];
        let (mut r, mut c) = (0, 0);
        for run in self.runs() {
            let len = match run {
                Run::Down => self.n - 2,
                Run::Right => self.m - 2,
            };
            for _ in 0..len {
                match run {
                    Run::Down => r += 1,
                    Run::Right => c += 1,
                }
                out.push(((r, c), Some(run)));
            }
        }
        out
    }
}

impl fmt::Display for SnakeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(n={}, m={}, k={}, {})", self.n, self.m, self.k, self.variant)
    }
}

fn shape(cells: &[(usize, usize)]) -> (usize, usize) {
    let rows = cells.iter().map(|c| c.0).max().unwrap_or(0) + 1;
    let cols = cells.iter().map(|c| c.1).max().unwrap_or(0) + 1;
    (rows, cols)
}

/// The zigzag matrix; its largest entry is `arity - 1`.
pub fn snake_matrix(spec: &SnakeSpec) -> Result<SparseIntMatrix> {
    spec.validate()?;
    let cells: Vec<(usize, usize)> = spec.path().into_iter().map(|(c, _)| c).collect();
    let (rows, cols) = shape(&cells);
    SparseIntMatrix::from_positions(rows, cols, &cells)
}

/// The L-shaped step matrix in the snake's bounding box: `1` in the
/// corner, values reached by a downward step down the first column and
/// values reached by a rightward step along the first row, both increasing.
pub fn l_step_matrix(spec: &SnakeSpec) -> Result<SparseIntMatrix> {
    spec.validate()?;
    let path = spec.path();
    let snake_cells: Vec<(usize, usize)> = path.iter().map(|(c, _)| *c).collect();
    let (rows, cols) = shape(&snake_cells);
    let mut down = 0;
    let mut right = 0;
    let cells: Vec<(usize, usize)> = path
        .iter()
        .map(|(_, step)| match step {
            None => (0, 0),
            Some(Run::Down) => {
                down += 1;
                (down, 0)
            }
            Some(Run::Right) => {
                right += 1;
                (0, right)
            }
        })
        .collect();
    SparseIntMatrix::from_positions(rows, cols, &cells)
}

/// Moves each entry of the L-shaped step matrix to its place in the snake:
/// columns left to right, pushing along every entry whose snake column is
/// further right, then rows top to bottom likewise. Every move is checked
/// for admissibility.
pub fn verify_snake_derived(spec: &SnakeSpec) -> Result<DerivedWitness> {
    let target = snake_matrix(spec)?;
    let seed = l_step_matrix(spec)?;
    if !seed.is_step_matrix() {
        return Err(Error::SnakeReplay(format!("{spec}: the L-shaped seed is not a step matrix")));
    }
    let mut current = seed.clone();
    let mut moves = Vec::new();
    for j in 0..current.cols().saturating_sub(1) {
        let subset: Vec<u32> = current.column(j).into_iter().filter(|&v| target.col_of(v) > j).collect();
        if subset.is_empty() {
            continue;
        }
        if !current.right_shift_admissible(j, &subset)? {
            return Err(Error::SnakeReplay(format!("{spec}: right shift of {subset:?} from column {j} is blocked")));
        }
        current = current.right_shift(j, &subset)?;
        moves.push(Shift::Right { index: j, subset });
    }
    for i in 0..current.rows().saturating_sub(1) {
        let subset: Vec<u32> = current.row(i).into_iter().filter(|&v| target.row_of(v) > i).collect();
        if subset.is_empty() {
            continue;
        }
        if !current.down_shift_admissible(i, &subset)? {
            return Err(Error::SnakeReplay(format!("{spec}: down shift of {subset:?} from row {i} is blocked")));
        }
        current = current.down_shift(i, &subset)?;
        moves.push(Shift::Down { index: i, subset });
    }
    if current != target {
        return Err(Error::SnakeReplay(format!("{spec}: replay ended at\n{current}")));
    }
    Ok(DerivedWitness { seed, moves })
}

/// The tree pair the snake matrix contributes to `Δ_K`.
pub fn snake_trees(spec: &SnakeSpec) -> Result<(PlanarTree, PlanarTree)> {
    let (a, b) = snake_matrix(spec)?.complementary_pairing();
    match (tonks(&a), tonks(&b)) {
        (Some(l), Some(r)) => Ok((l, r)),
        _ => Err(Error::SnakeReplay(format!("{spec}: the snake projects to a degenerate face"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::is_nondegenerate_matrix;

    fn spec(n: usize, m: usize, k: usize, v: Variant) -> SnakeSpec {
        SnakeSpec::new(n, m, k, v).unwrap()
    }

    #[test]
    fn arities() {
        assert_eq!(spec(4, 4, 0, Variant::Full).arity(), 2);
        assert_eq!(spec(4, 4, 1, Variant::Full).arity(), 6);
        assert_eq!(spec(4, 4, 1, Variant::DropRight).arity(), 4);
        assert_eq!(spec(6, 5, 2, Variant::Full).arity(), 16);
        assert_eq!(spec(6, 5, 2, Variant::DropRight).arity(), 13);
        assert_eq!(spec(6, 5, 2, Variant::DropDown).arity(), 12);
    }

    #[test]
    fn shapes() {
        assert_eq!(snake_matrix(&spec(4, 4, 0, Variant::Full)).unwrap().to_string(), "1");
        assert_eq!(snake_matrix(&spec(4, 4, 1, Variant::Full)).unwrap().to_string(), "1 0 0\n2 0 0\n3 4 5");
        assert_eq!(snake_matrix(&spec(4, 4, 1, Variant::DropRight)).unwrap().to_string(), "1\n2\n3");
        let s = snake_matrix(&spec(4, 4, 2, Variant::Full)).unwrap();
        assert_eq!(s.column(2), vec![5, 6, 7]);
        assert_eq!(s.row(4), vec![7, 8, 9]);
    }

    #[test]
    fn l_seed_for_the_smallest_snake() {
        let l = l_step_matrix(&spec(4, 4, 1, Variant::Full)).unwrap();
        assert_eq!(l.to_string(), "1 4 5\n2 0 0\n3 0 0");
        assert!(l.is_step_matrix());
    }

    #[test]
    fn replay_reaches_the_snake() {
        for v in [Variant::Full, Variant::DropRight, Variant::DropDown] {
            for k in 1..=3 {
                let s = spec(5, 4, k, v);
                let w = verify_snake_derived(&s).unwrap();
                assert_eq!(w.replay().unwrap(), snake_matrix(&s).unwrap());
            }
        }
    }

    #[test]
    fn snakes_are_nondegenerate() {
        let s = spec(5, 4, 2, Variant::Full);
        assert!(is_nondegenerate_matrix(&snake_matrix(&s).unwrap()));
        let (l, r) = snake_trees(&s).unwrap();
        assert_eq!(l.leaves(), s.arity());
        assert_eq!(r.leaves(), s.arity());
    }

    #[test]
    fn invalid_specs() {
        assert!(SnakeSpec::new(3, 3, 1, Variant::Full).is_err());
        assert!(SnakeSpec::new(4, 5, 1, Variant::Full).is_err());
        assert!(SnakeSpec::new(4, 4, 0, Variant::DropDown).is_err());
        assert!("sideways".parse::<Variant>().is_err());
    }
}
