//! Independent brute-force enumerator for self-avoiding polygons on the
//! square lattice, classified by bounding box, convexity defect and corner
//! contacts.
//!
//! Every polygon (counted once per translation class) is enumerated as a
//! closed self-avoiding walk anchored at its lexicographically least vertex
//! (least y, then least x): all vertices satisfy y > 0 or (y == 0 and
//! x >= 0), the first step is East and the closing step is forced. Counts
//! are aggregated by (width, height, defect, corner mask), where the defect
//! m is (perimeter - 2 width - 2 height) / 2 and the corner mask records
//! which corners of the minimal bounding rectangle are polygon vertices.

use rayon::prelude::*;
use std::collections::BTreeMap;

/// Corner-contact bits: the named corner of the bounding box is a vertex of
/// the polygon boundary.
pub const BL: u8 = 1;
pub const BR: u8 = 2;
pub const TL: u8 = 4;
pub const TR: u8 = 8;

/// Hard safety cap on the enumeration perimeter (runtime grows by ~x5 per
/// step of 2); raise only deliberately.
pub const MAX_PERIMETER: u16 = 26;

/// Classification key: (width, height, defect m, corner mask).
pub type Key = (u16, u16, u16, u8);

/// Aggregated polygon counts up to a perimeter bound.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CountTable {
    pub max_perimeter: u16,
    pub counts: BTreeMap<Key, u64>,
}

impl CountTable {
    fn absorb(&mut self, other: CountTable) {
        for (k, v) in other.counts {
            *self.counts.entry(k).or_insert(0) += v;
        }
    }

    /// Sum counts by (width, height) over keys accepted by `filter`.
    pub fn by_box(&self, mut filter: impl FnMut(u16, u8) -> bool) -> BTreeMap<(u16, u16), u64> {
        let mut out = BTreeMap::new();
        for (&(w, h, m, mask), &c) in &self.counts {
            if filter(m, mask) {
                *out.entry((w, h)).or_insert(0) += c;
            }
        }
        out
    }

    /// Total count of polygons with the given perimeter.
    pub fn total_by_perimeter(&self, p: u16) -> u64 {
        self.counts
            .iter()
            .filter(|(&(w, h, m, _), _)| 2 * (w + h) + 2 * m == p)
            .map(|(_, &c)| c)
            .sum()
    }

    /// Canonical text form: `w h m mask<TAB>count` per line.
    pub fn canonical_text(&self) -> String {
        let mut out = String::new();
        for (&(w, h, m, mask), &c) in &self.counts {
            out.push_str(&format!("{w} {h} {m} {mask}\t{c}\n"));
        }
        out
    }
}

struct Grid {
    half: i32,
    width: i32,
    seen: Vec<bool>,
}

impl Grid {
    fn new(half: i32) -> Grid {
        let width = 2 * half + 1;
        Grid {
            half,
            width,
            seen: vec![false; (width * (half + 1)) as usize],
        }
    }

    #[inline]
    fn idx(&self, x: i32, y: i32) -> usize {
        (y * self.width + (x + self.half)) as usize
    }
}

const STEPS: [(i32, i32); 4] = [(1, 0), (0, 1), (-1, 0), (0, -1)];

struct Dfs {
    max_p: u16,
    grid: Grid,
    minx: i32,
    maxx: i32,
    maxy: i32,
    table: CountTable,
    /// When set, stop extending prefixes at this depth and emit them instead.
    split_depth: Option<u16>,
    prefixes: Vec<Vec<(i32, i32)>>,
    path: Vec<(i32, i32)>,
}

impl Dfs {
    fn new(max_p: u16, split_depth: Option<u16>) -> Dfs {
        Dfs {
            max_p,
            grid: Grid::new(max_p as i32 / 2),
            minx: 0,
            maxx: 0,
            maxy: 0,
            table: CountTable {
                max_perimeter: max_p,
                counts: BTreeMap::new(),
            },
            split_depth,
            prefixes: Vec::new(),
            path: Vec::new(),
        }
    }

    fn record(&mut self, len: u16) {
        let w = (self.maxx - self.minx) as u16;
        let h = self.maxy as u16;
        let m = (len - 2 * (w + h)) / 2;
        let mut mask = 0u8;
        for (bit, cx, cy) in [
            (BL, self.minx, 0),
            (BR, self.maxx, 0),
            (TL, self.minx, self.maxy),
            (TR, self.maxx, self.maxy),
        ] {
            if self.grid.seen[self.grid.idx(cx, cy)] {
                mask |= bit;
            }
        }
        *self.table.counts.entry((w, h, m, mask)).or_insert(0) += 1;
    }

    /// Extend the walk from (x, y) after `len` steps.
    fn go(&mut self, x: i32, y: i32, len: u16) {
        if let Some(d) = self.split_depth {
            if len == d {
                self.prefixes.push(self.path.clone());
                return;
            }
        }
        let remaining = self.max_p - len;
        for (dx, dy) in STEPS {
            let (nx, ny) = (x + dx, y + dy);
            if nx == 0 && ny == 0 {
                if len + 1 >= 4 {
                    self.record(len + 1);
                }
                continue;
            }
            if ny < 0 || (ny == 0 && nx < 0) {
                continue;
            }
            // Distance home must be coverable by the remaining budget.
            if (nx.abs() + ny) as u16 + 1 > remaining {
                continue;
            }
            let idx = self.grid.idx(nx, ny);
            if self.grid.seen[idx] {
                continue;
            }
            self.grid.seen[idx] = true;
            self.path.push((nx, ny));
            let (sminx, smaxx, smaxy) = (self.minx, self.maxx, self.maxy);
            self.minx = self.minx.min(nx);
            self.maxx = self.maxx.max(nx);
            self.maxy = self.maxy.max(ny);
            self.go(nx, ny, len + 1);
            self.minx = sminx;
            self.maxx = smaxx;
            self.maxy = smaxy;
            self.path.pop();
            self.grid.seen[idx] = false;
        }
    }

    fn seed(&mut self) {
        // Anchor: origin visited, first step East.
        let o = self.grid.idx(0, 0);
        self.grid.seen[o] = true;
        let e = self.grid.idx(1, 0);
        self.grid.seen[e] = true;
        self.path.push((0, 0));
        self.path.push((1, 0));
        self.maxx = 1;
        self.go(1, 0, 1);
    }

    /// Rebuild state from a prefix and continue.
    fn resume(&mut self, prefix: &[(i32, i32)]) {
        for &(x, y) in prefix {
            let idx = self.grid.idx(x, y);
            self.grid.seen[idx] = true;
            self.minx = self.minx.min(x);
            self.maxx = self.maxx.max(x);
            self.maxy = self.maxy.max(y);
        }
        self.path = prefix.to_vec();
        let (x, y) = *prefix.last().unwrap();
        self.go(x, y, (prefix.len() - 1) as u16);
    }
}

/// Enumerate all polygons of perimeter at most `max_perimeter`, optionally in
/// parallel. Sequential and parallel runs produce identical tables: work is
/// split over deterministic walk prefixes and merged in prefix order.
pub fn enumerate(max_perimeter: u16, parallel: bool) -> CountTable {
    assert!(max_perimeter >= 4, "perimeter bound below the smallest polygon");
    assert!(
        max_perimeter <= MAX_PERIMETER,
        "perimeter bound {max_perimeter} above the safety cap {MAX_PERIMETER}"
    );
    let max_p = max_perimeter & !1; // odd perimeters are impossible
    if !parallel || max_p <= 10 {
        let mut dfs = Dfs::new(max_p, None);
        dfs.seed();
        return dfs.table;
    }
    let split = 7u16.min(max_p / 2);
    let mut splitter = Dfs::new(max_p, Some(split));
    splitter.seed();
    // Polygons closing before the split depth are in the splitter's table.
    let mut table = splitter.table.clone();
    let parts: Vec<CountTable> = splitter
        .prefixes
        .par_iter()
        .map(|prefix| {
            let mut dfs = Dfs::new(max_p, None);
            dfs.resume(prefix);
            dfs.table
        })
        .collect();
    for part in parts {
        table.absorb(part);
    }
    table
}
