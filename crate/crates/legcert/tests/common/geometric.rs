//! Trefoil realized by explicit plane coordinates: face areas from the planar
//! arrangement and chord actions from the integrated z-lift must satisfy the
//! combinatorial action relations.

use std::collections::BTreeMap;

use legcert::action::corner_relations;
use legcert::braid::BraidWord;
use legcert::diagram::{LagrangianDiagram, rainbow_closure_diagram};

type P = (f64, f64);

/// Rainbow closure of σ1³: two braid strands, two nested closing arcs, each
/// with a curl producing the α crossings. `h` is tuned so the z-lift closes.
fn trefoil_polyline(w: f64, h: f64) -> Vec<P> {
    let s1 = [(0.5, 0.0), (1.5, -1.0), (2.5, 0.0), (3.5, -1.0)];
    let s2 = [(0.5, -1.0), (1.5, 0.0), (2.5, -1.0), (3.5, 0.0)];
    let c1 = [
        (3.5, 0.0),
        (5.0, 1.0),
        (5.0 + w, 1.0),
        (5.0 + w, -0.5),
        (5.0, -0.5),
        (4.0, 1.0),
        (4.0, 2.0),
        (-0.5, 2.0),
        (-0.5, 0.0),
    ];
    let x2 = 6.0 + w;
    let c2 = [
        (3.5, -1.0),
        (x2, -1.0),
        (x2 + 2.0, 1.0),
        (x2 + 2.0 + h, 1.0),
        (x2 + 2.0 + h, -2.0),
        (x2 + 2.0, -2.0),
        (x2, 1.0),
        (x2, 3.0),
        (-1.5, 3.0),
        (-1.5, -1.0),
    ];
    s1.iter().chain(&c2[1..]).chain(&s2).chain(&c1[1..]).copied().collect()
}

fn seg_intersection(p: P, q: P, r: P, s: P) -> Option<(f64, f64)> {
    let d = (q.0 - p.0) * (s.1 - r.1) - (q.1 - p.1) * (s.0 - r.0);
    if d.abs() < 1e-14 {
        return None;
    }
    let t = ((r.0 - p.0) * (s.1 - r.1) - (r.1 - p.1) * (s.0 - r.0)) / d;
    let u = ((r.0 - p.0) * (q.1 - p.1) - (r.1 - p.1) * (q.0 - p.0)) / d;
    (t > 0.0 && t < 1.0 && u > 0.0 && u < 1.0).then_some((t, u))
}

struct Visit {
    crossing: usize,
    seg: usize,
    t: f64,
    z: f64,
}

struct Geometry {
    pts: Vec<P>,
    visits: Vec<Visit>,
    /// Total ∮ y dx.
    closure: f64,
}

fn lerp(a: P, b: P, t: f64) -> P {
    (a.0 + t * (b.0 - a.0), a.1 + t * (b.1 - a.1))
}

fn analyze(pts: Vec<P>) -> Geometry {
    let n = pts.len();
    let seg = |i: usize| (pts[i], pts[(i + 1) % n]);
    let ydx = |a: P, b: P| (a.1 + b.1) / 2.0 * (b.0 - a.0);
    let mut z0 = vec![0.0];
    for i in 0..n {
        let (a, b) = seg(i);
        z0.push(z0[i] + ydx(a, b));
    }
    let mut visits = Vec::new();
    let mut id = 0;
    for i in 0..n {
        for j in i + 1..n {
            let ((p, q), (r, s)) = (seg(i), seg(j));
            if let Some((t, u)) = seg_intersection(p, q, r, s) {
                let z = |k: usize, t: f64| {
                    let (a, b) = seg(k);
                    z0[k] + ydx(a, lerp(a, b, t))
                };
                visits.push(Visit {
                    crossing: id,
                    seg: i,
                    t,
                    z: z(i, t),
                });
                visits.push(Visit {
                    crossing: id,
                    seg: j,
                    t: u,
                    z: z(j, u),
                });
                id += 1;
            }
        }
    }
    visits.sort_by(|a, b| (a.seg, a.t).partial_cmp(&(b.seg, b.t)).unwrap());
    Geometry {
        closure: z0[n],
        pts,
        visits,
    }
}

impl Geometry {
    fn crossings(&self) -> usize {
        self.visits.len() / 2
    }

    fn is_over(&self, k: usize) -> bool {
        let c = self.visits[k].crossing;
        let other = self
            .visits
            .iter()
            .enumerate()
            .find(|(j, v)| *j != k && v.crossing == c)
            .unwrap()
            .1;
        self.visits[k].z > other.z
    }

    fn action(&self, c: usize) -> f64 {
        let zs: Vec<f64> = self.visits.iter().filter(|v| v.crossing == c).map(|v| v.z).collect();
        (zs[0] - zs[1]).abs()
    }

    /// Polyline of the curve piece from visit k to visit k+1.
    fn piece(&self, k: usize) -> Vec<P> {
        let n = self.pts.len();
        let m = self.visits.len();
        let (a, b) = (&self.visits[k], &self.visits[(k + 1) % m]);
        let at = |v: &Visit| lerp(self.pts[v.seg], self.pts[(v.seg + 1) % n], v.t);
        let mut out = vec![at(a)];
        let mut s = a.seg;
        if !(b.seg == a.seg && b.t > a.t) {
            loop {
                s = (s + 1) % n;
                out.push(self.pts[s]);
                if s == b.seg {
                    break;
                }
            }
        }
        out.push(at(b));
        out
    }

    /// Bounded faces as (signed area, corner crossing ids).
    fn faces(&self) -> Vec<(f64, Vec<usize>)> {
        let m = self.visits.len();
        // Half-edge 2k runs along piece k, 2k+1 against it.
        let poly = |h: usize| {
            let mut p = self.piece(h / 2);
            if h % 2 == 1 {
                p.reverse();
            }
            p
        };
        let origin = |h: usize| {
            if h.is_multiple_of(2) {
                self.visits[h / 2].crossing
            } else {
                self.visits[(h / 2 + 1) % m].crossing
            }
        };
        let angle = |h: usize| {
            let p = poly(h);
            (p[1].1 - p[0].1).atan2(p[1].0 - p[0].0)
        };
        let mut out_at: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for h in 0..2 * m {
            out_at.entry(origin(h)).or_default().push(h);
        }
        for hs in out_at.values_mut() {
            hs.sort_by(|&a, &b| angle(a).partial_cmp(&angle(b)).unwrap());
        }
        let next = |h: usize| {
            let twin = h ^ 1;
            let hs = &out_at[&origin(twin)];
            let i = hs.iter().position(|&x| x == twin).unwrap();
            hs[(i + hs.len() - 1) % hs.len()]
        };
        let mut seen = vec![false; 2 * m];
        let mut faces = Vec::new();
        for start in 0..2 * m {
            if seen[start] {
                continue;
            }
            let (mut h, mut ring, mut corners) = (start, Vec::new(), Vec::new());
            loop {
                seen[h] = true;
                corners.push(origin(h));
                let p = poly(h);
                ring.extend_from_slice(&p[..p.len() - 1]);
                h = next(h);
                if h == start {
                    break;
                }
            }
            let k = ring.len();
            let area: f64 = (0..k)
                .map(|i| ring[i].0 * ring[(i + 1) % k].1 - ring[(i + 1) % k].0 * ring[i].1)
                .sum::<f64>()
                / 2.0;
            corners.sort();
            faces.push((area, corners));
        }
        faces.retain(|(a, _)| *a > 0.0);
        faces
    }
}

/// Maps geometric crossing ids to diagram crossings by aligning the
/// over/under passage sequences of the two traversals.
fn align(g: &Geometry, d: &LagrangianDiagram) -> Vec<usize> {
    let comb: Vec<(usize, bool)> = d
        .knot_order()
        .iter()
        .map(|&e| {
            let h = d.edges()[e].head;
            (h.crossing, d.ends_over(e))
        })
        .collect();
    let m = g.visits.len();
    assert_eq!(comb.len(), m);
    for shift in 0..m {
        let mut map = vec![usize::MAX; g.crossings()];
        let ok = (0..m).all(|k| {
            let (c, over) = comb[(k + shift) % m];
            let v = &g.visits[k];
            if g.is_over(k) != over {
                return false;
            }
            if map[v.crossing] == usize::MAX {
                map[v.crossing] = c;
            }
            map[v.crossing] == c
        });
        let mut sorted = map.clone();
        sorted.sort();
        sorted.dedup();
        if ok && sorted.len() == g.crossings() {
            return map;
        }
    }
    let geo: Vec<(usize, bool)> = (0..m).map(|k| (g.visits[k].crossing, g.is_over(k))).collect();
    panic!("polyline does not match the diagram: {geo:?} vs {comb:?}");
}

/// Realizes the trefoil by coordinates and checks every corner relation
/// against the measured face areas; returns the largest deviation.
pub fn trefoil_relation_check() -> Result<f64, String> {
    // Width chosen so the braid-crossing z-gaps alternate (1/4, -1/4, 1/4);
    // the closure is affine in h.
    let w = 20.0 / 3.0;
    let (c0, c1) = (
        analyze(trefoil_polyline(w, 0.0)).closure,
        analyze(trefoil_polyline(w, 1.0)).closure,
    );
    let g = analyze(trefoil_polyline(w, -c0 / (c1 - c0)));
    if g.closure.abs() >= 1e-9 {
        return Err(format!("z-lift does not close: {}", g.closure));
    }
    let d = rainbow_closure_diagram(&BraidWord::torus(2, 3).unwrap()).unwrap();
    if g.crossings() != d.crossings().len() {
        return Err(format!(
            "{} geometric crossings, {} combinatorial",
            g.crossings(),
            d.crossings().len()
        ));
    }
    let map = align(&g, &d);
    let mut actions = vec![0.0; d.crossings().len()];
    for (gc, &c) in map.iter().enumerate() {
        actions[c] = g.action(gc);
        if actions[c] <= 0.0 {
            return Err(format!("chord {} has action {}", d.crossings()[c].label, actions[c]));
        }
    }
    let mut geo: Vec<(f64, Vec<usize>)> = g
        .faces()
        .into_iter()
        .map(|(a, cs)| {
            let mut cs: Vec<usize> = cs.iter().map(|&c| map[c]).collect();
            cs.sort();
            (a, cs)
        })
        .collect();
    let sys = corner_relations(&d);
    if geo.len() != sys.relations.len() {
        return Err(format!(
            "{} geometric faces, {} relations",
            geo.len(),
            sys.relations.len()
        ));
    }
    let mut worst = 0.0f64;
    for r in &sys.relations {
        let predicted: f64 = r.coeffs.iter().map(|(&c, &k)| k as f64 * actions[c]).sum();
        let mut corners: Vec<usize> = d.faces()[r.face].corners.iter().map(|s| s.crossing).collect();
        corners.sort();
        let i = geo
            .iter()
            .position(|(a, cs)| *cs == corners && (a - predicted).abs() < 1e-9)
            .ok_or_else(|| {
                format!(
                    "face {} predicted area {predicted} has no geometric match",
                    d.faces()[r.face].label
                )
            })?;
        worst = worst.max((geo[i].0 - predicted).abs());
        geo.remove(i);
    }
    Ok(worst)
}
