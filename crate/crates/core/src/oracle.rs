//! Brute-force ground truth.
//!
//! Tilings are perfect matchings of the adjacency graph of a region's
//! triangles. The search always covers the smallest uncovered triangle next,
//! trying its partners in increasing order, so each tiling is produced exactly
//! once and the output order is canonical. Nonintersecting lattice-path
//! families are enumerated the same way, one path at a time.

use crate::error::{Error, Result};
use crate::exact_math::pow2;
use crate::hexagon::{
    axis_positions, axis_rhombus, build_region, hexagon_cells, normalize, rhombus_kind, Cell,
    HexagonSpec, Parity, PathFamilySpec, RegionDescriptor, RegionKind, RhombusKind,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

pub const DEFAULT_CELL_LIMIT: usize = 120;

/// A tiling as the list of its rhombi, each a pair of adjacent triangles with
/// the smaller triangle first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tiling {
    pairs: Vec<(Cell, Cell)>,
}

impl Tiling {
    pub fn pairs(&self) -> &[(Cell, Cell)] {
        &self.pairs
    }

    pub fn contains(&self, a: Cell, b: Cell) -> bool {
        let key = if a <= b { (a, b) } else { (b, a) };
        self.pairs.contains(&key)
    }

    /// One `row col row col` line per rhombus.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (a, b) in &self.pairs {
            let _ = writeln!(out, "{} {} {} {}", a.row, a.col, b.row, b.col);
        }
        out
    }
}

/// Weighted number of tilings; an integer when no weights apply.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedCount {
    pub value: BigRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HalfWeightRule {
    /// Every horizontal rhombus in the topmost row of the region weighs 1/2.
    TopHorizontal,
    Unweighted,
}

struct MatchingGraph {
    cells: Vec<Cell>,
    // partners with a larger index only
    later: Vec<Vec<usize>>,
}

impl MatchingGraph {
    fn new(cells: &BTreeSet<Cell>) -> Self {
        let cells: Vec<Cell> = cells.iter().copied().collect();
        let later = cells
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let mut next: Vec<usize> = c
                    .neighbours()
                    .iter()
                    .filter_map(|nb| cells.binary_search(nb).ok())
                    .filter(|&j| j > i)
                    .collect();
                next.sort_unstable();
                next
            })
            .collect();
        MatchingGraph { cells, later }
    }

    fn search<F: FnMut(&[(usize, usize)])>(
        &self,
        covered: &mut [bool],
        from: usize,
        stack: &mut Vec<(usize, usize)>,
        visit: &mut F,
    ) {
        let Some(i) = (from..self.cells.len()).find(|&i| !covered[i]) else {
            visit(stack);
            return;
        };
        covered[i] = true;
        for &j in &self.later[i] {
            if !covered[j] {
                covered[j] = true;
                stack.push((i, j));
                self.search(covered, i + 1, stack, visit);
                stack.pop();
                covered[j] = false;
            }
        }
        covered[i] = false;
    }
}

/// Exhaustive tiling enumerator with a hard cell limit.
#[derive(Clone, Copy, Debug)]
pub struct Enumerator {
    limit: usize,
}

impl Default for Enumerator {
    fn default() -> Self {
        Enumerator {
            limit: DEFAULT_CELL_LIMIT,
        }
    }
}

impl Enumerator {
    pub fn with_limit(limit: usize) -> Self {
        Enumerator { limit }
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Call `visit` once per tiling with the rhombi of that tiling.
    pub fn for_each_tiling<F: FnMut(&[(Cell, Cell)])>(
        &self,
        cells: &BTreeSet<Cell>,
        mut visit: F,
    ) -> Result<()> {
        if cells.len() > self.limit {
            return Err(Error::RegionTooLarge {
                cells: cells.len(),
                limit: self.limit,
            });
        }
        if cells.len() % 2 == 1 {
            return Ok(());
        }
        let graph = MatchingGraph::new(cells);
        let mut covered = vec![false; graph.cells.len()];
        let mut stack = Vec::with_capacity(graph.cells.len() / 2);
        let mut pairs = Vec::with_capacity(graph.cells.len() / 2);
        graph.search(&mut covered, 0, &mut stack, &mut |matching| {
            pairs.clear();
            pairs.extend(
                matching
                    .iter()
                    .map(|&(i, j)| (graph.cells[i], graph.cells[j])),
            );
            visit(&pairs);
        });
        Ok(())
    }

    pub fn enumerate_tilings(&self, region: &RegionDescriptor) -> Result<Vec<Tiling>> {
        let mut out = Vec::new();
        self.for_each_tiling(&region.cells, |pairs| {
            out.push(Tiling {
                pairs: pairs.to_vec(),
            })
        })?;
        Ok(out)
    }

    pub fn count_tilings(&self, cells: &BTreeSet<Cell>) -> Result<BigInt> {
        let mut count = 0u64;
        self.for_each_tiling(cells, |_| count += 1)?;
        Ok(BigInt::from(count))
    }

    /// Tilings of the full hexagon that use the `l`-th axis rhombus.
    pub fn count_with_fixed_rhombus(&self, spec: &HexagonSpec, l: u32) -> Result<BigInt> {
        let (a, b) = axis_rhombus(spec, l)?;
        let mut count = 0u64;
        self.for_each_tiling(&hexagon_cells(spec), |pairs| {
            if pairs.contains(&(a, b)) {
                count += 1;
            }
        })?;
        Ok(BigInt::from(count))
    }

    /// Sum over tilings of `(1/2)^k`, `k` the number of weighted rhombi.
    pub fn weighted_count(
        &self,
        region: &RegionDescriptor,
        rule: HalfWeightRule,
    ) -> Result<WeightedCount> {
        let top = region.cells.iter().map(|c| c.row).max();
        // histogram of tilings by number of half-weight rhombi
        let mut by_weight: Vec<u64> = Vec::new();
        self.for_each_tiling(&region.cells, |pairs| {
            let k = match rule {
                HalfWeightRule::Unweighted => 0,
                HalfWeightRule::TopHorizontal => pairs
                    .iter()
                    .filter(|(a, b)| {
                        Some(a.row) == top && rhombus_kind(*a, *b) == Some(RhombusKind::Horizontal)
                    })
                    .count(),
            };
            if by_weight.len() <= k {
                by_weight.resize(k + 1, 0);
            }
            by_weight[k] += 1;
        })?;
        let value = by_weight
            .iter()
            .enumerate()
            .fold(BigRational::zero(), |acc, (k, &n)| {
                acc + BigRational::from_integer(BigInt::from(n)) * pow2(-(k as i64))
            });
        Ok(WeightedCount { value })
    }

    /// Number of tilings containing the rhombus at each axis position, and
    /// the total number of axis rhombi over all tilings.
    pub fn axis_occupancy(&self, spec: &HexagonSpec) -> Result<(Vec<BigInt>, BigInt)> {
        let n = axis_positions(&normalize(*spec));
        let rhombi = (1..=n)
            .map(|l| axis_rhombus(spec, l))
            .collect::<Result<Vec<_>>>()?;
        let mut per_position = vec![0u64; n as usize];
        let mut total = 0u64;
        self.for_each_tiling(&hexagon_cells(spec), |pairs| {
            for (pos, r) in rhombi.iter().enumerate() {
                if pairs.contains(r) {
                    per_position[pos] += 1;
                    total += 1;
                }
            }
        })?;
        Ok((
            per_position.into_iter().map(BigInt::from).collect(),
            BigInt::from(total),
        ))
    }

    /// Compare the fixed-rhombus count with `2^w R(upper) R~(lower)` where
    /// `w` is half the number of axis triangles left after removing the
    /// fixed rhombus.
    pub fn factorization_check(&self, spec: &HexagonSpec, l: u32) -> Result<FactorizationReport> {
        let params = normalize(*spec);
        let axis = params.axis(l)?;
        let fixed = self.count_with_fixed_rhombus(spec, l)?;
        let upper = build_region(params, RegionKind::UpperTrimmed, None)?;
        let lower = build_region(params, RegionKind::Lower, Some(axis))?;
        let upper_count = self.count_tilings(&upper.cells)?;
        let lower_weighted = self
            .weighted_count(&lower, HalfWeightRule::TopHorizontal)?
            .value;
        let power = match params.parity() {
            Parity::Even => params.n() - 1,
            Parity::Odd => params.n(),
        };
        Ok(FactorizationReport {
            fixed,
            power,
            upper_count,
            lower_weighted,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationReport {
    pub fixed: BigInt,
    pub power: u32,
    pub upper_count: BigInt,
    pub lower_weighted: BigRational,
}

impl FactorizationReport {
    pub fn product(&self) -> BigRational {
        pow2(self.power as i64)
            * BigRational::from_integer(self.upper_count.clone())
            * &self.lower_weighted
    }

    pub fn holds(&self) -> bool {
        BigRational::from_integer(self.fixed.clone()) == self.product()
    }
}

/// Weighted number of vertex-disjoint path families, path `i` going from
/// `starts[i]` to `ends[i]` with steps `(+1, 0)` and `(0, -1)`.
pub fn count_path_families(family: &PathFamilySpec) -> BigRational {
    type Path = Vec<(i64, i64)>;

    fn paths(to: (i64, i64), current: &mut Path, out: &mut Vec<Path>) {
        let here = *current.last().expect("path has a start");
        if here == to {
            out.push(current.clone());
            return;
        }
        if here.0 < to.0 {
            current.push((here.0 + 1, here.1));
            paths(to, current, out);
            current.pop();
        }
        if here.1 > to.1 {
            current.push((here.0, here.1 - 1));
            paths(to, current, out);
            current.pop();
        }
    }

    let candidates: Vec<Vec<(Path, BigRational)>> = (0..family.len())
        .map(|i| {
            let mut out = Vec::new();
            let mut current = vec![family.starts[i]];
            let end = family.ends[i];
            if end.0 >= family.starts[i].0 && end.1 <= family.starts[i].1 {
                paths(end, &mut current, &mut out);
            }
            out.into_iter()
                .map(|p| {
                    let last_vertical = p.len() >= 2 && p[p.len() - 2].0 == end.0;
                    let w = if family.half_weight_final_vertical[i] && last_vertical {
                        BigRational::new(BigInt::one(), BigInt::from(2))
                    } else {
                        BigRational::one()
                    };
                    (p, w)
                })
                .collect()
        })
        .collect();

    fn extend(
        candidates: &[Vec<(Path, BigRational)>],
        i: usize,
        used: &mut HashSet<(i64, i64)>,
        weight: &BigRational,
        total: &mut BigRational,
    ) {
        if i == candidates.len() {
            *total += weight;
            return;
        }
        for (path, w) in &candidates[i] {
            if path.iter().any(|v| used.contains(v)) {
                continue;
            }
            used.extend(path.iter().copied());
            extend(candidates, i + 1, used, &(weight * w), total);
            for v in path {
                used.remove(v);
            }
        }
    }

    let mut total = BigRational::zero();
    extend(
        &candidates,
        0,
        &mut HashSet::new(),
        &BigRational::one(),
        &mut total,
    );
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_math::{int, rat_int};
    use crate::hexagon::{lower_region, path_family, trimmed_upper, PathRegion, TheoremParams};

    fn hex(a: u32, m: u32) -> HexagonSpec {
        HexagonSpec::new(a, m).unwrap()
    }

    fn full(a: u32, m: u32) -> RegionDescriptor {
        build_region(normalize(hex(a, m)), RegionKind::FullHexagon, None).unwrap()
    }

    #[test]
    fn small_hexagon_counts() {
        let e = Enumerator::default();
        assert_eq!(e.enumerate_tilings(&full(1, 1)).unwrap().len(), 2);
        assert_eq!(e.enumerate_tilings(&full(2, 2)).unwrap().len(), 20);
        assert_eq!(e.count_tilings(&full(3, 4).cells).unwrap(), int(4116));
        assert_eq!(e.count_tilings(&full(3, 3).cells).unwrap(), int(980));
    }

    #[test]
    fn empty_region_has_one_tiling() {
        let tilings = Enumerator::default()
            .enumerate_tilings(&trimmed_upper(0, 2))
            .unwrap();
        assert_eq!(tilings.len(), 1);
        assert!(tilings[0].pairs().is_empty());
    }

    #[test]
    fn odd_region_has_no_tiling() {
        let cells: BTreeSet<Cell> = [Cell::new(0, 0)].into_iter().collect();
        assert_eq!(Enumerator::default().count_tilings(&cells).unwrap(), int(0));
    }

    #[test]
    fn limit_is_a_hard_abort() {
        let e = Enumerator::with_limit(10);
        assert!(matches!(
            e.count_tilings(&full(2, 2).cells),
            Err(Error::RegionTooLarge {
                cells: 24,
                limit: 10
            })
        ));
    }

    #[test]
    fn tilings_are_distinct_and_valid() {
        let region = full(2, 3);
        let tilings = Enumerator::default().enumerate_tilings(&region).unwrap();
        let unique: HashSet<&Tiling> = tilings.iter().collect();
        assert_eq!(unique.len(), tilings.len());
        for t in &tilings {
            let mut seen = BTreeSet::new();
            for &(a, b) in t.pairs() {
                assert!(rhombus_kind(a, b).is_some());
                assert!(seen.insert(a) && seen.insert(b));
            }
            assert_eq!(seen, region.cells);
        }
    }

    #[test]
    fn rhombus_type_counts_are_fixed() {
        // every tiling of the (a, m) hexagon has a*a horizontal rhombi and a*m of each slant
        let (a, m) = (2, 3);
        for t in Enumerator::default()
            .enumerate_tilings(&full(a, m))
            .unwrap()
        {
            let count = |k| {
                t.pairs()
                    .iter()
                    .filter(|(x, y)| rhombus_kind(*x, *y) == Some(k))
                    .count()
            };
            assert_eq!(count(RhombusKind::Horizontal), (a * a) as usize);
            assert_eq!(count(RhombusKind::Rising), (a * m) as usize);
            assert_eq!(count(RhombusKind::Falling), (a * m) as usize);
        }
    }

    #[test]
    fn fixed_rhombus_examples() {
        let e = Enumerator::default();
        assert_eq!(e.count_with_fixed_rhombus(&hex(2, 2), 1).unwrap(), int(8));
        assert_eq!(e.count_with_fixed_rhombus(&hex(1, 2), 1).unwrap(), int(1));
        assert_eq!(e.count_with_fixed_rhombus(&hex(3, 3), 1).unwrap(), int(252));
        assert_eq!(e.count_with_fixed_rhombus(&hex(3, 3), 2).unwrap(), int(252));
    }

    #[test]
    fn weighted_counts_of_lower_regions() {
        let e = Enumerator::default();
        for m in 1..4 {
            let c = lower_region(1, m, 1).unwrap();
            assert_eq!(
                e.weighted_count(&c, HalfWeightRule::TopHorizontal)
                    .unwrap()
                    .value,
                rat_int(1)
            );
        }
    }

    #[test]
    fn factorization_examples() {
        let e = Enumerator::default();
        for (a, m, l) in [(3, 2, 1), (3, 3, 2), (2, 2, 1), (2, 2, 2)] {
            let report = e.factorization_check(&hex(a, m), l).unwrap();
            assert!(report.holds(), "({a},{m}) l={l}: {report:?}");
        }
    }

    #[test]
    fn occupancy_tally_matches_filters() {
        let e = Enumerator::default();
        let spec = hex(3, 2);
        let (per, total) = e.axis_occupancy(&spec).unwrap();
        let mut sum = BigInt::zero();
        for (i, c) in per.iter().enumerate() {
            assert_eq!(*c, e.count_with_fixed_rhombus(&spec, i as u32 + 1).unwrap());
            sum += c;
        }
        assert_eq!(sum, total);
    }

    #[test]
    fn path_families_count_tilings() {
        let e = Enumerator::default();
        for n in 1..=3 {
            for m in 0..=2 {
                let tilings = e.count_tilings(&trimmed_upper(n, m).cells).unwrap();
                let families =
                    count_path_families(&path_family(PathRegion::Trimmed { n, m }).unwrap());
                assert_eq!(BigRational::from_integer(tilings), families, "S({n},{m})");
                if m == 0 {
                    continue;
                }
                for l in 1..=n {
                    let c = lower_region(n, m, l).unwrap();
                    let weighted = e
                        .weighted_count(&c, HalfWeightRule::TopHorizontal)
                        .unwrap()
                        .value;
                    let families =
                        count_path_families(&path_family(PathRegion::Lower { n, m, l }).unwrap());
                    assert_eq!(weighted, families, "C({n},{m},{l})");
                }
            }
        }
    }

    #[test]
    fn tiling_text_lists_rhombi() {
        let region = build_region(
            TheoremParams::even(1, 1).unwrap(),
            RegionKind::FullHexagon,
            None,
        )
        .unwrap();
        let tilings = Enumerator::default().enumerate_tilings(&region).unwrap();
        assert_eq!(tilings.len(), 3);
        assert_eq!(tilings[0].to_text().lines().count(), 5);
    }
}
