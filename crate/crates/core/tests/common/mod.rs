//! Helpers shared by the integration tests.
#![allow(dead_code)]

use knot_mosaic::LaurentPoly;

/// Bracket by recursion on the first crossing: each smoothing merges arc labels,
/// and a pair whose ends already coincide closes a loop.
pub fn recursive_bracket(code: &[[u32; 4]]) -> LaurentPoly {
    fn go(code: &[[u32; 4]], loops: u32) -> LaurentPoly {
        let Some((&[a, b, c, d], rest)) = code.split_first() else {
            let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
            return delta.pow(loops - 1);
        };
        let mut total = LaurentPoly::zero();
        for (pairs, exp) in [([(a, b), (c, d)], 1), ([(a, d), (b, c)], -1)] {
            let mut rest: Vec<[u32; 4]> = rest.to_vec();
            let mut pending = pairs.to_vec();
            let mut closed = 0;
            while let Some((x, y)) = pending.pop() {
                if x == y {
                    closed += 1;
                    continue;
                }
                for cr in rest.iter_mut() {
                    for l in cr.iter_mut() {
                        if *l == y {
                            *l = x;
                        }
                    }
                }
                for p in pending.iter_mut() {
                    if p.0 == y {
                        p.0 = x;
                    }
                    if p.1 == y {
                        p.1 = x;
                    }
                }
            }
            total = &total + &(&LaurentPoly::monomial(1, exp) * &go(&rest, loops + closed));
        }
        total
    }
    if code.is_empty() {
        return LaurentPoly::one();
    }
    go(code, 0)
}

use knot_mosaic::tile::ALL_TILES;
use knot_mosaic::{Edge, InnerBoard, Mosaic, Tile};
use rand::Rng;

/// Every full board extending `inner`, found by trying all eleven tiles in each
/// boundary cell.
pub fn brute_force_completions(inner: &InnerBoard) -> Vec<Mosaic> {
    let n = inner.parent_size();
    let ring: Vec<(usize, usize)> =
        (0..n * n).map(|i| (i / n, i % n)).filter(|&(r, c)| r == 0 || c == 0 || r == n - 1 || c == n - 1).collect();
    let mut out = Vec::new();
    fill(&inner.on_blank_board(), &ring, 0, &mut out);
    out.sort_by_key(|m| m.codes());
    out
}

fn fill(m: &Mosaic, ring: &[(usize, usize)], i: usize, out: &mut Vec<Mosaic>) {
    if i == ring.len() {
        if m.is_suitably_connected() {
            out.push(m.clone());
        }
        return;
    }
    let (r, c) = ring[i];
    for t in ALL_TILES {
        let cand = m.with_tile(r, c, t);
        // Prune on edges toward cells that are already final: inner cells and earlier ring cells.
        let ok = Edge::ALL.iter().all(|&e| {
            let here = t.connections().contains(e);
            match cand.neighbor(r, c, e) {
                None => !here,
                Some((nr, nc)) => {
                    let settled = !ring[i..].contains(&(nr, nc));
                    !settled || here == cand.get(nr, nc).connections().contains(e.opposite())
                }
            }
        });
        if ok {
            fill(&cand, ring, i + 1, out);
        }
    }
}

/// A random inner board whose tiles agree along every shared edge.
pub fn random_inner(n: usize, rng: &mut impl Rng) -> InnerBoard {
    let k = n - 2;
    let mut cells: Vec<Tile> = Vec::with_capacity(k * k);
    for r in 0..k {
        for c in 0..k {
            let west = c > 0 && cells[r * k + c - 1].connections().contains(Edge::E);
            let north = r > 0 && cells[(r - 1) * k + c].connections().contains(Edge::S);
            let fits: Vec<Tile> = ALL_TILES
                .into_iter()
                .filter(|t| {
                    (c == 0 || t.connections().contains(Edge::W) == west) && (r == 0 || t.connections().contains(Edge::N) == north)
                })
                .collect();
            cells.push(fits[rng.gen_range(0..fits.len())]);
        }
    }
    InnerBoard::new(n, cells)
}

/// Alexander polynomial of a one-component PD code evaluated at `t`, from the
/// Fox-calculus matrix of the Wirtinger presentation with one row and one
/// column deleted. Defined up to a factor `±t^k`.
pub fn alexander_at(code: &[[u32; 4]], t: i128) -> i128 {
    let n = code.len();
    if n == 0 {
        return 1;
    }
    let edges = 2 * n as u32;
    let succ = |x: u32| x % edges + 1;
    // Edges on one over-arc share a Wirtinger generator.
    let mut parent: Vec<usize> = (0..=edges as usize).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut x = x;
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for &[_, b, _, d] in code {
        let (rb, rd) = (find(&mut parent, b as usize), find(&mut parent, d as usize));
        parent[rb] = rd;
    }
    let mut arc_of = vec![usize::MAX; edges as usize + 1];
    let mut arcs = 0;
    for e in 1..=edges as usize {
        let r = find(&mut parent, e);
        if arc_of[r] == usize::MAX {
            arc_of[r] = arcs;
            arcs += 1;
        }
        arc_of[e] = arc_of[r];
    }
    assert_eq!(arcs, n, "every crossing starts one arc");
    let mut m = vec![vec![0i128; n]; n];
    for (row, &[a, b, c, d]) in m.iter_mut().zip(code) {
        let positive = b == succ(d);
        let (over, inc, out) = (arc_of[b as usize], arc_of[a as usize], arc_of[c as usize]);
        row[over] += 1 - t;
        if positive {
            row[inc] += t;
            row[out] -= 1;
        } else {
            row[out] += t;
            row[inc] -= 1;
        }
    }
    let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(minor)
}

/// Integer determinant by fraction-free elimination.
pub fn bareiss(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| m[i][k] != 0) else { return 0 };
            m.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// `v` with every factor of `p` removed, made positive.
pub fn strip_units(v: i128, p: i128) -> i128 {
    let mut v = v.abs();
    while v != 0 && v % p == 0 {
        v /= p;
    }
    v
}
