//! Kauffman bracket state sum, normalized Jones polynomial and determinant.
//!
//! At a crossing `(a, b, c, d)` the A-smoothing joins arcs `a–b` and `c–d`; the
//! B-smoothing joins `a–d` and `b–c`. With `δ = -A² - A⁻²`,
//!
//! ```text
//! <D> = Σ_states A^(#A - #B) δ^(loops - 1)
//! f(D) = (-A³)^(-writhe) <D>
//! ```
//!
//! and the Jones polynomial is `f` under `A = t^(-1/4)`.

use crate::diagram::PlanarDiagram;
use crate::error::DiagramError;
use crate::mosaic::Mosaic;
use crate::poly::LaurentPoly;

/// Largest diagram the state sum accepts.
pub const MAX_STATE_SUM_CROSSINGS: usize = 20;

/// Diagrams at least this large split the state space across worker threads.
#[cfg(feature = "parallel")]
const PARALLEL_THRESHOLD: usize = 14;

/// Histogram of states by number of B-smoothings and number of loops.
#[derive(Clone, Debug, PartialEq, Eq)]
struct StateCounts {
    crossings: usize,
    /// counts[b * (crossings + 2) + loops]
    counts: Vec<u64>,
}

impl StateCounts {
    fn new(crossings: usize) -> Self {
        StateCounts { crossings, counts: vec![0; (crossings + 1) * (crossings + 2)] }
    }

    fn merge(mut self, other: StateCounts) -> StateCounts {
        for (a, b) in self.counts.iter_mut().zip(other.counts) {
            *a += b;
        }
        self
    }

    fn to_poly(&self) -> LaurentPoly {
        let c = self.crossings;
        let width = c + 2;
        let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
        let mut delta_pows = vec![LaurentPoly::one()];
        for _ in 1..width {
            let next = delta_pows.last().unwrap() * &delta;
            delta_pows.push(next);
        }
        let mut total = LaurentPoly::zero();
        for b in 0..=c {
            for loops in 1..width {
                let n = self.counts[b * width + loops];
                if n == 0 {
                    continue;
                }
                let weight = LaurentPoly::monomial(n as i64, c as i32 - 2 * b as i32);
                total = &total + &(&weight * &delta_pows[loops - 1]);
            }
        }
        total
    }
}

/// Smoothing pairs for each crossing: `[A-smoothing, B-smoothing]`, 0-based arc ids.
fn smoothing_table(pd: &PlanarDiagram) -> Vec<[[(u8, u8); 2]; 2]> {
    pd.crossings()
        .iter()
        .map(|x| {
            let [a, b, c, d] = x.labels.map(|l| (l - 1) as u8);
            [[(a, b), (c, d)], [(a, d), (b, c)]]
        })
        .collect()
}

fn count_states(table: &[[[(u8, u8); 2]; 2]], masks: std::ops::Range<u64>) -> StateCounts {
    let c = table.len();
    let arcs = 2 * c;
    let width = c + 2;
    let mut out = StateCounts::new(c);
    let mut parent = [0u8; 2 * MAX_STATE_SUM_CROSSINGS];
    for mask in masks {
        for (i, p) in parent[..arcs].iter_mut().enumerate() {
            *p = i as u8;
        }
        let mut loops = arcs;
        for (i, pairs) in table.iter().enumerate() {
            for &(x, y) in &pairs[((mask >> i) & 1) as usize] {
                let rx = find(&mut parent, x);
                let ry = find(&mut parent, y);
                if rx != ry {
                    parent[rx as usize] = ry;
                    loops -= 1;
                }
            }
        }
        let b = mask.count_ones() as usize;
        out.counts[b * width + loops] += 1;
    }
    out
}

fn find(parent: &mut [u8], mut x: u8) -> u8 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

fn check_size(pd: &PlanarDiagram) -> Result<(), DiagramError> {
    if pd.crossing_count() > MAX_STATE_SUM_CROSSINGS {
        return Err(DiagramError::TooManyCrossings { found: pd.crossing_count(), max: MAX_STATE_SUM_CROSSINGS });
    }
    Ok(())
}

/// Kauffman bracket `<D>` by summing over all `2^c` smoothings.
pub fn kauffman_bracket(pd: &PlanarDiagram) -> Result<LaurentPoly, DiagramError> {
    check_size(pd)?;
    let c = pd.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let table = smoothing_table(pd);
    let total = 1u64 << c;

    #[cfg(feature = "parallel")]
    if c >= PARALLEL_THRESHOLD {
        use rayon::prelude::*;
        let chunk = 1u64 << (c - 6);
        let counts = (0..64u64)
            .into_par_iter()
            .map(|i| count_states(&table, i * chunk..(i + 1) * chunk))
            .reduce(|| StateCounts::new(c), StateCounts::merge);
        return Ok(counts.to_poly());
    }

    Ok(count_states(&table, 0..total).to_poly())
}

/// State sum with the mask space cut into `parts` contiguous ranges evaluated
/// independently and merged. The result does not depend on `parts`.
pub fn kauffman_bracket_partitioned(pd: &PlanarDiagram, parts: u64) -> Result<LaurentPoly, DiagramError> {
    check_size(pd)?;
    let c = pd.crossing_count();
    if c == 0 {
        return Ok(LaurentPoly::one());
    }
    let table = smoothing_table(pd);
    let total = 1u64 << c;
    let parts = parts.clamp(1, total);
    let counts = (0..parts)
        .map(|i| count_states(&table, i * total / parts..(i + 1) * total / parts))
        .fold(StateCounts::new(c), StateCounts::merge);
    Ok(counts.to_poly())
}

/// `(-A³)^(-writhe) <D>`, a knot invariant in the variable `A`.
pub fn normalized_bracket(pd: &PlanarDiagram) -> Result<LaurentPoly, DiagramError> {
    let bracket = kauffman_bracket(pd)?;
    let w = pd.writhe();
    let sign = if w.rem_euclid(2) == 0 { 1 } else { -1 };
    Ok(&LaurentPoly::monomial(sign, -3 * w) * &bracket)
}

/// Normalized Jones polynomial (in `A`) of a one-component mosaic.
pub fn normalized_jones(m: &Mosaic) -> Result<LaurentPoly, DiagramError> {
    normalized_bracket(&PlanarDiagram::from_mosaic(m)?)
}

/// Converts a normalized bracket in `A` to the Jones polynomial in `t = A⁻⁴`.
///
/// Returns `None` when some exponent is not a multiple of 4, which happens
/// only for links with an even number of components.
pub fn to_t_form(f: &LaurentPoly) -> Option<LaurentPoly> {
    f.divide_exponents(4).map(|p| p.mirror())
}

/// `|V(-1)|` for a Jones polynomial given in `A`.
pub fn determinant_of(f: &LaurentPoly) -> Option<u64> {
    to_t_form(f).map(|v| v.eval_at_minus_one().unsigned_abs())
}

pub fn determinant(m: &Mosaic) -> Result<u64, DiagramError> {
    let f = normalized_jones(m)?;
    Ok(determinant_of(&f).expect("knot Jones exponents are multiples of 4"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::PdCrossing;

    fn delta() -> LaurentPoly {
        LaurentPoly::from_terms([(2, -1), (-2, -1)])
    }

    /// One-crossing kink: the strand leaves the crossing and returns to it.
    fn kink(sign: i8) -> PlanarDiagram {
        let labels = if sign > 0 { [1, 1, 2, 2] } else { [1, 2, 2, 1] };
        PlanarDiagram::new(vec![PdCrossing { labels, sign }]).unwrap()
    }

    #[test]
    fn unknot_bracket_is_one() {
        assert_eq!(kauffman_bracket(&PlanarDiagram::unknot()).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn kink_brackets() {
        // Positive kink: A-smoothing leaves two loops, B-smoothing one.
        // A·δ + A⁻¹ = -A³ - A⁻¹ + A⁻¹ = -A³.
        assert_eq!(kauffman_bracket(&kink(1)).unwrap(), LaurentPoly::monomial(-1, 3));
        assert_eq!(kauffman_bracket(&kink(-1)).unwrap(), LaurentPoly::monomial(-1, -3));
        assert_eq!(normalized_bracket(&kink(1)).unwrap(), LaurentPoly::one());
        assert_eq!(normalized_bracket(&kink(-1)).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn trefoil_jones() {
        let pd = PlanarDiagram::from_code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let v = to_t_form(&normalized_bracket(&pd).unwrap()).unwrap();
        assert_eq!(v, LaurentPoly::from_terms([(-4, -1), (-3, 1), (-1, 1)]));
        assert_eq!(determinant_of(&normalized_bracket(&pd).unwrap()), Some(3));
        let mirror = to_t_form(&normalized_bracket(&pd.mirrored()).unwrap()).unwrap();
        assert_eq!(mirror, v.mirror());
    }

    #[test]
    fn partitioning_does_not_change_the_sum() {
        let pd = PlanarDiagram::from_code(&[[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]]).unwrap();
        let whole = kauffman_bracket(&pd).unwrap();
        for parts in [1, 2, 3, 5, 8] {
            assert_eq!(kauffman_bracket_partitioned(&pd, parts).unwrap(), whole);
        }
    }

    #[test]
    fn delta_powers_in_counts() {
        // One A-state with two loops and one B-state with one loop.
        let mut counts = StateCounts::new(1);
        counts.counts[2] = 1;
        counts.counts[3 + 1] = 1;
        let want = &(&LaurentPoly::monomial(1, 1) * &delta()) + &LaurentPoly::monomial(1, -1);
        assert_eq!(counts.to_poly(), want);
        assert_eq!(want, LaurentPoly::monomial(-1, 3));
    }

    #[test]
    fn oversized_diagrams_are_rejected() {
        let n = MAX_STATE_SUM_CROSSINGS as u32 + 1;
        let crossings = (0..n)
            .map(|i| {
                let a = 2 * i + 1;
                PdCrossing { labels: [a, a, a + 1, a + 1], sign: 1 }
            })
            .collect();
        let pd = PlanarDiagram::new(crossings).unwrap();
        assert!(matches!(kauffman_bracket(&pd), Err(DiagramError::TooManyCrossings { .. })));
    }
}
