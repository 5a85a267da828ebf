//! Hexagon geometry on the triangular lattice.
//!
//! The lattice is drawn with vertical edges, so every unit triangle points
//! either left or right. A lattice vertex is an integer pair `(x, y)` with
//! `x + y` even, where one unit of `x` is `sqrt(3)/2` and one unit of `y` is
//! `1/2`. The triangles between the vertical lines `x = col` and
//! `x = col + 1` are stacked along `row`; the triangle `(col, row)` covers
//! `y` in `[row - 1, row + 1]` and points left when `col + row` is even.
//!
//! The hexagon with sides `A, M, A, A, M, A` (clockwise from the top right)
//! has vertical sides of length `M` on the left and right and is symmetric
//! about the horizontal line `y = 0`. Triangles bisected by that line are
//! exactly the triangles of row 0; a left triangle `(s, 0)` together with the
//! right triangle `(s + 1, 0)` is an axis rhombus. Axis rhombi are numbered
//! `l = 1, 2, ...` from left to right.

use crate::error::{Error, Result};
use std::collections::BTreeSet;
use std::fmt::Write as _;

/// Side data of a hexagon with sides `side_a, side_m, side_a, side_a, side_m, side_a`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct HexagonSpec {
    side_a: u32,
    side_m: u32,
}

impl HexagonSpec {
    /// `side_m = 0` is accepted: the hexagon then degenerates to a rhombus.
    pub fn new(side_a: u32, side_m: u32) -> Result<Self> {
        if side_a == 0 {
            return Err(Error::InvalidHexagon("side_a must be positive".into()));
        }
        Ok(HexagonSpec { side_a, side_m })
    }

    pub fn side_a(&self) -> u32 {
        self.side_a
    }

    pub fn side_m(&self) -> u32 {
        self.side_m
    }

    /// The box `(a, b, c)` whose plane partitions biject with the tilings.
    pub fn box_dims(&self) -> (u32, u32, u32) {
        (self.side_a, self.side_a, self.side_m)
    }

    /// Column of the leftmost strip; chosen so that the corners are lattice vertices.
    fn first_col(&self) -> i32 {
        (self.side_m % 2) as i32
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

/// Hexagon parameters in the form used by the counting formulas.
///
/// `Even(N, m)` stands for the hexagon `(N, 2m)` and `Odd(N, m)` for the
/// hexagon `(N + 1, 2m - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TheoremParams {
    parity: Parity,
    n: u32,
    m: u32,
}

impl TheoremParams {
    pub fn even(n: u32, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidHexagon("even parameters need N >= 1".into()));
        }
        Ok(TheoremParams {
            parity: Parity::Even,
            n,
            m,
        })
    }

    pub fn odd(n: u32, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidHexagon("odd parameters need m >= 1".into()));
        }
        Ok(TheoremParams {
            parity: Parity::Odd,
            n,
            m,
        })
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn hexagon(&self) -> HexagonSpec {
        match self.parity {
            Parity::Even => HexagonSpec {
                side_a: self.n,
                side_m: 2 * self.m,
            },
            Parity::Odd => HexagonSpec {
                side_a: self.n + 1,
                side_m: 2 * self.m - 1,
            },
        }
    }

    pub fn axis(&self, l: u32) -> Result<AxisIndex> {
        AxisIndex::new(l, self)
    }
}

/// Position `l` of a rhombus on the symmetry axis, `1 <= l <= N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AxisIndex(u32);

impl AxisIndex {
    pub fn new(l: u32, params: &TheoremParams) -> Result<Self> {
        Self::within(l, axis_positions(params))
    }

    /// `1 <= l <= n` without reference to a hexagon.
    pub fn within(l: u32, n: u32) -> Result<Self> {
        if l == 0 || l > n {
            return Err(Error::AxisOutOfRange { l, max: n });
        }
        Ok(AxisIndex(l))
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// The mirror position `N + 1 - l`.
    pub fn mirrored(self, n: u32) -> AxisIndex {
        AxisIndex(n + 1 - self.0)
    }
}

/// Split the hexagon by the parity of `side_m`.
pub fn normalize(spec: HexagonSpec) -> TheoremParams {
    if spec.side_m.is_multiple_of(2) {
        TheoremParams {
            parity: Parity::Even,
            n: spec.side_a,
            m: spec.side_m / 2,
        }
    } else {
        TheoremParams {
            parity: Parity::Odd,
            n: spec.side_a - 1,
            m: spec.side_m.div_ceil(2),
        }
    }
}

/// Number of rhombi on the symmetry axis, which is `N` in both parities.
pub fn axis_positions(params: &TheoremParams) -> u32 {
    params.n
}

/// Direction of the vertex opposite a triangle's vertical edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Orientation {
    Left,
    Right,
}

impl Orientation {
    fn as_str(self) -> &'static str {
        match self {
            Orientation::Left => "left",
            Orientation::Right => "right",
        }
    }
}

/// A unit triangle. Ordering is by column, then row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub col: i32,
    pub row: i32,
}

impl Cell {
    pub fn new(col: i32, row: i32) -> Self {
        Cell { col, row }
    }

    pub fn orientation(&self) -> Orientation {
        if (self.col + self.row).rem_euclid(2) == 0 {
            Orientation::Left
        } else {
            Orientation::Right
        }
    }

    /// The three edge-adjacent triangles.
    pub fn neighbours(&self) -> [Cell; 3] {
        let across = match self.orientation() {
            Orientation::Left => Cell::new(self.col + 1, self.row),
            Orientation::Right => Cell::new(self.col - 1, self.row),
        };
        [
            Cell::new(self.col, self.row - 1),
            Cell::new(self.col, self.row + 1),
            across,
        ]
    }

    pub fn translate(&self, dcol: i32, drow: i32) -> Cell {
        debug_assert!(
            (dcol + drow) % 2 == 0,
            "translation must preserve orientation"
        );
        Cell::new(self.col + dcol, self.row + drow)
    }
}

/// The kind of rhombus formed by two adjacent triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RhombusKind {
    /// Left and right triangle sharing a vertical edge; long diagonal horizontal.
    Horizontal,
    /// Lower triangle points left.
    Rising,
    /// Lower triangle points right.
    Falling,
}

/// Classify the rhombus `{a, b}`; `None` if the triangles are not adjacent.
pub fn rhombus_kind(a: Cell, b: Cell) -> Option<RhombusKind> {
    let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
    if lo.col == hi.col && hi.row == lo.row + 1 {
        Some(match lo.orientation() {
            Orientation::Left => RhombusKind::Rising,
            Orientation::Right => RhombusKind::Falling,
        })
    } else if lo.row == hi.row && hi.col == lo.col + 1 && lo.orientation() == Orientation::Left {
        Some(RhombusKind::Horizontal)
    } else {
        None
    }
}

fn hexagon_contains(spec: &HexagonSpec, cell: Cell) -> bool {
    let x0 = spec.first_col() as i64;
    let a = spec.side_a as i64;
    let m = spec.side_m as i64;
    let col = cell.col as i64;
    if col < x0 || col >= x0 + 2 * a {
        return false;
    }
    // centroid abscissa times three
    let cx3 = 3 * col
        + match cell.orientation() {
            Orientation::Left => 2,
            Orientation::Right => 1,
        };
    let slack = (cx3 - 3 * x0).min(3 * (x0 + 2 * a) - cx3);
    3 * (cell.row as i64).abs() < 3 * m + slack
}

/// All unit triangles of the hexagon; `2 (A^2 + 2 A M)` of them.
pub fn hexagon_cells(spec: &HexagonSpec) -> BTreeSet<Cell> {
    let x0 = spec.first_col();
    let a = spec.side_a as i32;
    let reach = (spec.side_m + spec.side_a) as i32;
    let mut cells = BTreeSet::new();
    for col in x0..x0 + 2 * a {
        for row in -reach..=reach {
            let cell = Cell::new(col, row);
            if hexagon_contains(spec, cell) {
                cells.insert(cell);
            }
        }
    }
    cells
}

/// All unit triangles of the general hexagon with sides `a, b, c, a, b, c`,
/// drawn with the two sides of length `c` vertical: `a` is the top-left side
/// and `b` the top-right side. For `a = b` this is [`hexagon_cells`] of
/// `(a, c)`.
pub fn box_hexagon_cells(a: u32, b: u32, c: u32) -> BTreeSet<Cell> {
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let x0 = c % 2;
    let mut cells = BTreeSet::new();
    for col in x0..x0 + a + b {
        for row in -(b + c)..=(a + c) {
            let cell = Cell::new(col as i32, row as i32);
            let cx3 = 3 * col
                + match cell.orientation() {
                    Orientation::Left => 2,
                    Orientation::Right => 1,
                };
            let x3 = cx3 - 3 * x0;
            let y3 = 3 * row;
            let inside = y3 < 3 * c + x3
                && y3 < 3 * c + 6 * a - x3
                && y3 > -3 * c - x3
                && y3 > -3 * c - 6 * b + x3;
            if inside {
                cells.insert(cell);
            }
        }
    }
    cells
}

/// The two triangles of the `l`-th axis rhombus, left triangle first.
pub fn axis_rhombus(spec: &HexagonSpec, l: u32) -> Result<(Cell, Cell)> {
    let params = normalize(*spec);
    let l = AxisIndex::new(l, &params)?.get() as i32;
    let start = spec.first_col() + 2 * (l - 1) + (spec.side_m % 2) as i32;
    Ok((Cell::new(start, 0), Cell::new(start + 1, 0)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionKind {
    FullHexagon,
    /// Everything strictly above the axis.
    UpperPrime,
    /// The upper part with forced boundary strips removed.
    UpperTrimmed,
    /// Axis row and everything below, minus the fixed rhombus and forced strips.
    Lower,
}

/// Which named region a descriptor holds, in the parameters of that region.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    Hexagon {
        side_a: u32,
        side_m: u32,
    },
    /// `S'(n, m)`.
    UpperPrime {
        n: u32,
        m: u32,
    },
    /// `S(n, m)`.
    Trimmed {
        n: u32,
        m: u32,
    },
    /// `C(n, m, l)`.
    Lower {
        n: u32,
        m: u32,
        l: u32,
    },
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            RegionLabel::Hexagon { side_a, side_m } => write!(f, "hexagon({side_a},{side_m})"),
            RegionLabel::UpperPrime { n, m } => write!(f, "S'({n},{m})"),
            RegionLabel::Trimmed { n, m } => write!(f, "S({n},{m})"),
            RegionLabel::Lower { n, m, l } => write!(f, "C({n},{m},{l})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegionDescriptor {
    pub kind: RegionKind,
    pub params: TheoremParams,
    pub axis: Option<AxisIndex>,
    pub label: RegionLabel,
    pub cells: BTreeSet<Cell>,
    /// Fixed rhombus of a full hexagon, when one was requested.
    pub marked: Option<(Cell, Cell)>,
    /// Row whose horizontal rhombi count with weight 1/2.
    pub weighted_row: Option<i32>,
}

impl RegionDescriptor {
    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    /// Plain-text cell list, one `row col orientation` triple per line.
    pub fn to_cell_list(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} cells={}", self.label, self.cells.len());
        if let Some((a, b)) = self.marked {
            let _ = writeln!(out, "# marked {} {} {} {}", a.row, a.col, b.row, b.col);
        }
        for cell in &self.cells {
            let _ = writeln!(
                out,
                "{} {} {}",
                cell.row,
                cell.col,
                cell.orientation().as_str()
            );
        }
        out
    }

    /// Translate so the cells are compared up to an orientation-preserving shift.
    pub fn normalized_cells(&self) -> BTreeSet<Cell> {
        normalize_cells(&self.cells)
    }
}

/// Shift a cell set so its minimum column is 0 or 1 and the shift keeps orientations.
pub fn normalize_cells(cells: &BTreeSet<Cell>) -> BTreeSet<Cell> {
    let Some(min_col) = cells.iter().map(|c| c.col).min() else {
        return BTreeSet::new();
    };
    let min_row = cells.iter().map(|c| c.row).min().unwrap_or(0);
    let dcol = -min_col;
    let mut drow = -min_row;
    if (dcol + drow) % 2 != 0 {
        drow += 1;
    }
    cells.iter().map(|c| c.translate(dcol, drow)).collect()
}

/// Parse the output of [`RegionDescriptor::to_cell_list`] back into cells.
pub fn parse_cell_list(text: &str) -> Result<BTreeSet<Cell>> {
    let mut cells = BTreeSet::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || Error::Parse(format!("line {}: {line:?}", lineno + 1));
        let fields: Vec<&str> = line.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(bad());
        }
        let row: i32 = fields[0].parse().map_err(|_| bad())?;
        let col: i32 = fields[1].parse().map_err(|_| bad())?;
        let cell = Cell::new(col, row);
        if cell.orientation().as_str() != fields[2] {
            return Err(bad());
        }
        cells.insert(cell);
    }
    Ok(cells)
}

fn strip(cells: &mut BTreeSet<Cell>, col: i32) {
    cells.retain(|c| c.col != col);
}

/// Build one of the regions obtained by cutting the hexagon of `params`
/// along its symmetry axis.
///
/// For `Even(N, m)` the upper trimmed part is `S(N-1, m)` and the lower part
/// is `C(N, m, l)`. For `Odd(N, m)` the forced strips sit in the lower half:
/// the upper part is `S(N+1, m-1)` and the trimmed lower part is `C(N, m, l)`.
/// Cells stay in the coordinates of the hexagon.
pub fn build_region(
    params: TheoremParams,
    kind: RegionKind,
    axis: Option<AxisIndex>,
) -> Result<RegionDescriptor> {
    let spec = params.hexagon();
    let all = hexagon_cells(&spec);
    let first = spec.first_col();
    let last = first + 2 * spec.side_a as i32 - 1;
    let n = params.n;
    let m = params.m;
    if let Some(l) = axis {
        AxisIndex::new(l.get(), &params)?;
    }
    let upper: BTreeSet<Cell> = all.iter().copied().filter(|c| c.row > 0).collect();

    let region = match kind {
        RegionKind::FullHexagon => {
            let marked = axis.map(|l| axis_rhombus(&spec, l.get())).transpose()?;
            RegionDescriptor {
                kind,
                params,
                axis,
                label: RegionLabel::Hexagon {
                    side_a: spec.side_a,
                    side_m: spec.side_m,
                },
                cells: all,
                marked,
                weighted_row: None,
            }
        }
        RegionKind::UpperPrime | RegionKind::UpperTrimmed => {
            if axis.is_some() {
                return Err(Error::OutOfRange("upper regions take no axis index".into()));
            }
            let (cells, label) = match (params.parity, kind) {
                (Parity::Even, RegionKind::UpperPrime) => (upper, RegionLabel::UpperPrime { n, m }),
                (Parity::Even, _) => {
                    let mut cells = upper;
                    strip(&mut cells, first);
                    strip(&mut cells, last);
                    (cells, RegionLabel::Trimmed { n: n - 1, m })
                }
                // nothing is forced above the axis in the odd case
                (Parity::Odd, _) => (upper, RegionLabel::Trimmed { n: n + 1, m: m - 1 }),
            };
            RegionDescriptor {
                kind,
                params,
                axis: None,
                label,
                cells,
                marked: None,
                weighted_row: None,
            }
        }
        RegionKind::Lower => {
            let l =
                axis.ok_or_else(|| Error::OutOfRange("lower region needs an axis index".into()))?;
            let (left, right) = axis_rhombus(&spec, l.get())?;
            let mut cells: BTreeSet<Cell> = all.iter().copied().filter(|c| c.row <= 0).collect();
            cells.remove(&left);
            cells.remove(&right);
            if params.parity == Parity::Odd {
                strip(&mut cells, first);
                strip(&mut cells, last);
            }
            RegionDescriptor {
                kind,
                params,
                axis: Some(l),
                label: RegionLabel::Lower { n, m, l: l.get() },
                cells,
                marked: None,
                weighted_row: Some(0),
            }
        }
    };
    Ok(region)
}

/// The region `S(n, m)`, cut from the hexagon `(n + 1, 2m)`.
pub fn trimmed_upper(n: u32, m: u32) -> RegionDescriptor {
    let params = TheoremParams::even(n + 1, m).expect("n + 1 >= 1");
    build_region(params, RegionKind::UpperTrimmed, None).expect("upper region is total")
}

/// The region `C(n, m, l)`, cut from the hexagon `(n, 2m)`.
pub fn lower_region(n: u32, m: u32, l: u32) -> Result<RegionDescriptor> {
    let params = TheoremParams::even(n, m)?;
    let axis = AxisIndex::new(l, &params)?;
    build_region(params, RegionKind::Lower, Some(axis))
}

/// Start and end points of a family of lattice paths with unit steps
/// `(+1, 0)` and `(0, -1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathFamilySpec {
    pub starts: Vec<(i64, i64)>,
    pub ends: Vec<(i64, i64)>,
    /// Paths marked here weigh 1/2 when their last step is vertical.
    pub half_weight_final_vertical: Vec<bool>,
}

impl PathFamilySpec {
    pub fn len(&self) -> usize {
        self.starts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.starts.is_empty()
    }
}

/// Regions with a lattice-path description.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathRegion {
    Trimmed { n: u32, m: u32 },
    Lower { n: u32, m: u32, l: u32 },
}

/// Path `i` runs from `(i, i)` to `(i + m, 2i - n - 1)`; in the lower region
/// path `l` instead ends at `(l + m, 2l - n)` and every other path carries the
/// half weight on a final vertical step.
pub fn path_family(region: PathRegion) -> Result<PathFamilySpec> {
    let (n, m, special) = match region {
        PathRegion::Trimmed { n, m } => (n, m, None),
        PathRegion::Lower { n, m, l } => {
            AxisIndex::within(l, n)?;
            (n, m, Some(l))
        }
    };
    let (n, m) = (n as i64, m as i64);
    let mut family = PathFamilySpec {
        starts: vec![],
        ends: vec![],
        half_weight_final_vertical: vec![],
    };
    for i in 1..=n {
        family.starts.push((i, i));
        let is_special = special == Some(i as u32);
        family.ends.push(if is_special {
            (i + m, 2 * i - n)
        } else {
            (i + m, 2 * i - n - 1)
        });
        family
            .half_weight_final_vertical
            .push(special.is_some() && !is_special);
    }
    Ok(family)
}
