//! Axis-parallel boxes in the plane and their directed intersection graphs.
//!
//! Coordinates are exact rationals. Containment between intervals is strict
//! at both endpoints: `[a, b]` nests in `[c, d]` iff `c < a` and `b < d`.
//! Boxes are closed, so two boxes touching along an edge intersect.

use std::collections::HashSet;

use rand::Rng;

use crate::dag::Dag;
use crate::error::{Error, Result};
use crate::generators::ExtremalSpec;

pub type Coord = num_rational::Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Coord,
    hi: Coord,
}

impl Interval {
    pub fn new(lo: Coord, hi: Coord) -> Result<Interval> {
        if lo >= hi {
            return Err(Error::DegenerateInterval { lo: lo.to_string(), hi: hi.to_string() });
        }
        Ok(Interval { lo, hi })
    }

    pub fn from_ints(lo: i64, hi: i64) -> Result<Interval> {
        Interval::new(Coord::from_integer(lo), Coord::from_integer(hi))
    }

    pub fn lo(&self) -> Coord {
        self.lo
    }

    pub fn hi(&self) -> Coord {
        self.hi
    }

    pub fn width(&self) -> Coord {
        self.hi - self.lo
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }
}

/// `inner` lies inside `outer` with both endpoints strictly inside.
pub fn intervals_strictly_nested(inner: &Interval, outer: &Interval) -> bool {
    outer.lo < inner.lo && inner.hi < outer.hi
}

/// The rectangle `h × v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AxisBox {
    pub h: Interval,
    pub v: Interval,
}

impl AxisBox {
    pub fn new(h: Interval, v: Interval) -> AxisBox {
        AxisBox { h, v }
    }
}

pub fn boxes_intersect(a: &AxisBox, b: &AxisBox) -> bool {
    a.h.intersects(&b.h) && a.v.intersects(&b.v)
}

/// Whether `a -> b` is an edge of the directed intersection graph:
/// `a` is narrower horizontally and taller vertically, both strictly.
pub fn points_to(a: &AxisBox, b: &AxisBox) -> bool {
    intervals_strictly_nested(&a.h, &b.h) && intervals_strictly_nested(&b.v, &a.v)
}

/// The two boxes cross like a plus sign, in either direction.
pub fn is_transverse_pair(a: &AxisBox, b: &AxisBox) -> bool {
    points_to(a, b) || points_to(b, a)
}

/// A labelled list of boxes with unique ids.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoxFamily {
    boxes: Vec<(String, AxisBox)>,
}

impl BoxFamily {
    pub fn new(boxes: Vec<(String, AxisBox)>) -> Result<BoxFamily> {
        let mut ids = HashSet::new();
        for (id, _) in &boxes {
            if !ids.insert(id.as_str()) {
                return Err(Error::InvalidParams(format!("duplicate box id {id:?}")));
            }
        }
        Ok(BoxFamily { boxes })
    }

    /// Labels boxes `b0, b1, ...`.
    pub fn unlabeled(boxes: Vec<AxisBox>) -> BoxFamily {
        BoxFamily {
            boxes: boxes
                .into_iter()
                .enumerate()
                .map(|(i, b)| (format!("b{i}"), b))
                .collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.boxes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.boxes.is_empty()
    }

    pub fn entries(&self) -> &[(String, AxisBox)] {
        &self.boxes
    }

    pub fn get(&self, i: usize) -> &AxisBox {
        &self.boxes[i].1
    }

    pub fn id(&self, i: usize) -> &str {
        &self.boxes[i].0
    }
}

/// Index pairs `(i, j)`, `i < j`, that intersect without crossing transversally.
pub fn transverse_violations(family: &BoxFamily) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for i in 0..family.len() {
        for j in i + 1..family.len() {
            let (a, b) = (family.get(i), family.get(j));
            if boxes_intersect(a, b) && !is_transverse_pair(a, b) {
                bad.push((i, j));
            }
        }
    }
    bad
}

pub fn is_transverse_family(family: &BoxFamily) -> bool {
    transverse_violations(family).is_empty()
}

/// One vertex per box, in family order; edge `i -> j` iff [`points_to`].
///
/// Every edge strictly widens the horizontal interval, so the result is acyclic.
pub fn directed_intersection_graph(family: &BoxFamily) -> Dag {
    let n = family.len();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && points_to(family.get(i), family.get(j)) {
                edges.push((i, j));
            }
        }
    }
    Dag::from_trusted(n, edges)
}

/// A transverse family whose directed intersection graph is `G[r, l, s]`
/// under the same vertex order as [`crate::generators::extremal_dag`].
///
/// With `m = l - 1`, `H = m + 2` and `W = 2r + 2`:
/// * `x_i = [2i, 2i+1] × [-H, H]`: tall, thin, pairwise disjoint;
/// * `y_j = [-(W+j), W+j] × [-(H-j), H-j]`: widening and flattening along the chain;
/// * `z_k = [-(W+m+1), W+m+1] × [k/(s+1), k/(s+1) + 1/(2(s+1))]`: widest,
///   flat, stacked inside `(0, 1)` and pairwise disjoint.
pub fn extremal_box_family(spec: ExtremalSpec) -> BoxFamily {
    let m = spec.middle() as i64;
    let height = m + 2;
    let width = 2 * spec.r as i64 + 2;
    let ival = |lo: Coord, hi: Coord| Interval::new(lo, hi).expect("construction is nondegenerate");
    let int = Coord::from_integer;
    let mut boxes = Vec::with_capacity(spec.vertex_count());
    for i in 1..=spec.r as i64 {
        boxes.push((
            format!("x{i}"),
            AxisBox::new(ival(int(2 * i), int(2 * i + 1)), ival(int(-height), int(height))),
        ));
    }
    for j in 1..=m {
        boxes.push((
            format!("y{j}"),
            AxisBox::new(
                ival(int(-(width + j)), int(width + j)),
                ival(int(-(height - j)), int(height - j)),
            ),
        ));
    }
    let slots = spec.s as i64 + 1;
    let outer = width + m + 1;
    for k in 1..=spec.s as i64 {
        let lo = Coord::new(k, slots);
        boxes.push((
            format!("z{k}"),
            AxisBox::new(ival(int(-outer), int(outer)), ival(lo, lo + Coord::new(1, 2 * slots))),
        ));
    }
    BoxFamily { boxes }
}

fn random_interval<R: Rng>(rng: &mut R, grid: i64, max_len: i64) -> Interval {
    let len = rng.gen_range(1..=max_len.min(2 * grid));
    let lo = rng.gen_range(0..=2 * grid - len);
    Interval::new(Coord::new(lo, 2), Coord::new(lo + len, 2)).expect("len >= 1")
}

/// `count` boxes with half-integer corners. Each box is centred near one
/// of up to three random cluster centres in `[0, grid]²` with independent
/// random half-width and half-height, so nested and crossing pairs are common
/// and so are pairs in general position.
pub fn random_box_family<R: Rng>(rng: &mut R, count: usize, grid: i64) -> BoxFamily {
    let clusters: Vec<(i64, i64)> = (0..rng.gen_range(1..=3))
        .map(|_| (rng.gen_range(0..=2 * grid), rng.gen_range(0..=2 * grid)))
        .collect();
    let boxes = (0..count)
        .map(|_| {
            let (cx, cy) = clusters[rng.gen_range(0..clusters.len())];
            let (cx, cy) = (cx + rng.gen_range(-1..=1), cy + rng.gen_range(-1..=1));
            let (hw, hh) = (rng.gen_range(1..=2 * grid), rng.gen_range(1..=2 * grid));
            let half = |lo: i64, hi: i64| {
                Interval::new(Coord::new(lo, 2), Coord::new(hi, 2)).expect("half-size >= 1")
            };
            AxisBox::new(half(cx - hw, cx + hw), half(cy - hh, cy + hh))
        })
        .collect();
    BoxFamily::unlabeled(boxes)
}

/// [`extremal_box_family`] with every coordinate moved by less than a
/// quarter of the smallest gap in the construction, so the directed
/// intersection graph is unchanged.
pub fn jittered_extremal_family<R: Rng>(rng: &mut R, spec: ExtremalSpec) -> BoxFamily {
    let unit = 16 * (spec.s as i64 + 1);
    let mut jitter = |c: Coord| c + Coord::new(rng.gen_range(-3..=3), unit);
    let boxes = extremal_box_family(spec)
        .boxes
        .into_iter()
        .map(|(id, b)| {
            let h = Interval::new(jitter(b.h.lo), jitter(b.h.hi)).expect("jitter keeps width");
            let v = Interval::new(jitter(b.v.lo), jitter(b.v.hi)).expect("jitter keeps width");
            (id, AxisBox::new(h, v))
        })
        .collect();
    BoxFamily { boxes }
}

/// Grows `start` by up to `extra` boxes, one at a time. Each candidate is
/// either tall and thin or wide and flat; it is kept only if it is disjoint
/// from or crosses every box already placed. Gives up on a slot after
/// `retries` rejections.
pub fn random_transverse_family<R: Rng>(
    rng: &mut R,
    start: Vec<AxisBox>,
    extra: usize,
    grid: i64,
    retries: usize,
) -> BoxFamily {
    let mut boxes = start;
    for _ in 0..extra {
        for _ in 0..retries {
            let short = random_interval(rng, grid, grid / 2 + 1);
            let long = random_interval(rng, grid, 2 * grid);
            let candidate = if rng.gen_bool(0.5) {
                AxisBox::new(short, long)
            } else {
                AxisBox::new(long, short)
            };
            let compatible = boxes
                .iter()
                .all(|b| !boxes_intersect(b, &candidate) || is_transverse_pair(b, &candidate));
            if compatible {
                boxes.push(candidate);
                break;
            }
        }
    }
    BoxFamily::unlabeled(boxes)
}
