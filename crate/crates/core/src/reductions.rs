//! Encodings of rectangle stabbing and orthogonal range reporting in the
//! unit box as Fréchet queries at radius 1.
//!
//! A rectangle `[l_1, r_1] x .. x [l_d, r_d]` becomes the series with
//! `s_{2i-1} = (r_i + 1) + 6i` and `s_{2i} = (l_i - 1) + 6i`; a point `p`
//! becomes `q_{2i-1} = (p_i + 2) + 6i` and `q_{2i} = (p_i - 2) + 6i`. Then
//! `p` lies in the rectangle iff the two series are within distance 1.
//!
//! The sums are rounded like any float arithmetic, so the equivalence is
//! exact only when they are representable, e.g. for coordinates on a dyadic
//! grid such as multiples of `2^-10`.

use serde::{Deserialize, Serialize};

use crate::cells::DEFAULT_SEQUENCE_CAP;
use crate::engine::FrechetIndex;
use crate::error::{Error, Result};
use crate::geom::{Backend, Interval, Rect};
use crate::series::{Radius, TimeSeries};

/// Rectangles and query points inside `[0, 1]^dim`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StabInstance {
    pub dim: usize,
    pub rects: Vec<Rect>,
    pub points: Vec<Vec<f64>>,
}

impl StabInstance {
    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidComplexity(0));
        }
        for r in &self.rects {
            check_rect(r)?;
            if r.dim() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: r.dim(),
                });
            }
        }
        for p in &self.points {
            check_point(p)?;
            if p.len() != self.dim {
                return Err(Error::DimensionMismatch {
                    expected: self.dim,
                    found: p.len(),
                });
            }
        }
        Ok(())
    }
}

fn check_unit(x: f64) -> Result<()> {
    if (0.0..=1.0).contains(&x) {
        Ok(())
    } else {
        Err(Error::OutOfUnitBox(x))
    }
}

fn check_rect(r: &Rect) -> Result<()> {
    for iv in r.intervals() {
        check_unit(iv.lo)?;
        check_unit(iv.hi)?;
        if iv.lo > iv.hi {
            return Err(Error::EmptyRectangle(0));
        }
    }
    Ok(())
}

fn check_point(p: &[f64]) -> Result<()> {
    p.iter().try_for_each(|&x| check_unit(x))
}

/// Series of complexity `2d` encoding a rectangle in the unit box.
pub fn rect_to_series(id: impl Into<String>, rect: &Rect) -> Result<TimeSeries> {
    check_rect(rect)?;
    let mut values = Vec::with_capacity(2 * rect.dim());
    for (k, iv) in rect.intervals().iter().enumerate() {
        let shift = 6.0 * (k + 1) as f64;
        values.push((iv.hi + 1.0) + shift);
        values.push((iv.lo - 1.0) + shift);
    }
    TimeSeries::new(id, values)
}

/// Series of complexity `2d` encoding a point in the unit box.
pub fn point_to_series(id: impl Into<String>, p: &[f64]) -> Result<TimeSeries> {
    check_point(p)?;
    let mut values = Vec::with_capacity(2 * p.len());
    for (k, &x) in p.iter().enumerate() {
        let shift = 6.0 * (k + 1) as f64;
        values.push((x + 2.0) + shift);
        values.push((x - 2.0) + shift);
    }
    TimeSeries::new(id, values)
}

fn parse_ids(ids: Vec<&str>) -> Vec<usize> {
    let mut out: Vec<usize> = ids.into_iter().map(|s| s.parse().expect("numeric id")).collect();
    out.sort_unstable();
    out
}

/// For each query point, the indices of the rectangles containing it,
/// answered by a stabbing-engine index over the rectangle encodings.
pub fn solve_stabbing_via_frechet(inst: &StabInstance, backend: Backend) -> Result<Vec<Vec<usize>>> {
    inst.validate()?;
    let series = inst
        .rects
        .iter()
        .enumerate()
        .map(|(k, r)| rect_to_series(k.to_string(), r))
        .collect::<Result<Vec<_>>>()?;
    let index = FrechetIndex::build(&series, Radius::new(1.0)?, 2 * inst.dim, backend, DEFAULT_SEQUENCE_CAP)?;
    inst.points
        .iter()
        .map(|p| Ok(parse_ids(index.query(&point_to_series("p", p)?)?)))
        .collect()
}

/// For each query rectangle, the indices of the points inside it, with
/// points stored as series and rectangles encoded as queries.
pub fn solve_range_via_frechet(points: &[Vec<f64>], rects: &[Rect], backend: Backend) -> Result<Vec<Vec<usize>>> {
    let dim = points.first().map(Vec::len).or_else(|| rects.first().map(Rect::dim)).unwrap_or(1);
    StabInstance {
        dim,
        rects: rects.to_vec(),
        points: points.to_vec(),
    }
    .validate()?;
    let series = points
        .iter()
        .enumerate()
        .map(|(k, p)| point_to_series(k.to_string(), p))
        .collect::<Result<Vec<_>>>()?;
    let index = FrechetIndex::build(&series, Radius::new(1.0)?, 2 * dim, backend, DEFAULT_SEQUENCE_CAP)?;
    rects
        .iter()
        .map(|r| Ok(parse_ids(index.query(&rect_to_series("r", r)?)?)))
        .collect()
}

/// Affinely maps every coordinate into `[0, 1]`, per dimension, using the
/// joint extent of `rects` and `points`. Containment is preserved up to
/// coordinates that round together; a dimension of zero extent maps to 0.
/// Rectangles must be bounded.
pub fn scale_to_unit_box(dim: usize, rects: &[Rect], points: &[Vec<f64>]) -> Result<(Vec<Rect>, Vec<Vec<f64>>)> {
    let mut lo = vec![f64::INFINITY; dim];
    let mut hi = vec![f64::NEG_INFINITY; dim];
    let mut see = |d: usize, x: f64| -> Result<()> {
        if !x.is_finite() {
            return Err(Error::OutOfUnitBox(x));
        }
        lo[d] = lo[d].min(x);
        hi[d] = hi[d].max(x);
        Ok(())
    };
    for r in rects {
        if r.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: r.dim(),
            });
        }
        for (d, iv) in r.intervals().iter().enumerate() {
            see(d, iv.lo)?;
            see(d, iv.hi)?;
        }
    }
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        for (d, &x) in p.iter().enumerate() {
            see(d, x)?;
        }
    }
    let map = |d: usize, x: f64| {
        let w = hi[d] - lo[d];
        if w > 0.0 {
            ((x - lo[d]) / w).clamp(0.0, 1.0)
        } else {
            0.0
        }
    };
    let rects = rects
        .iter()
        .map(|r| {
            Rect::new(
                r.intervals()
                    .iter()
                    .enumerate()
                    .map(|(d, iv)| Interval::new(map(d, iv.lo), map(d, iv.hi)))
                    .collect(),
            )
        })
        .collect();
    let points = points
        .iter()
        .map(|p| p.iter().enumerate().map(|(d, &x)| map(d, x)).collect())
        .collect();
    Ok((rects, points))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freespace::decide_frechet;

    fn rect(b: &[(f64, f64)]) -> Rect {
        Rect::new(b.iter().map(|&(l, h)| Interval::new(l, h)).collect())
    }

    #[test]
    fn fixture_vectors_are_bit_exact() {
        let s = rect_to_series("R", &rect(&[(0.2, 0.6), (0.4, 1.0), (0.4, 0.6)])).unwrap();
        assert_eq!(s.values(), &[7.6, 5.2, 14.0, 11.4, 19.6, 17.4]);
        let s = rect_to_series("R_hat", &rect(&[(0.0, 0.4), (0.2, 0.6), (0.8, 1.0)])).unwrap();
        assert_eq!(s.values(), &[7.4, 5.0, 13.6, 11.2, 20.0, 17.8]);
        let q = point_to_series("p", &[0.3, 0.8, 0.5]).unwrap();
        assert_eq!(q.values(), &[8.3, 4.3, 14.8, 10.8, 20.5, 16.5]);
    }

    #[test]
    fn one_dimensional_substitution() {
        assert_eq!(rect_to_series("r", &rect(&[(0.0, 1.0)])).unwrap().values(), &[8.0, 5.0]);
        assert_eq!(point_to_series("p", &[0.0]).unwrap().values(), &[8.0, 4.0]);
    }

    #[test]
    fn outside_the_box_is_rejected() {
        assert!(matches!(point_to_series("p", &[1.5]), Err(Error::OutOfUnitBox(x)) if x == 1.5));
        assert!(matches!(rect_to_series("r", &rect(&[(-0.1, 0.5)])), Err(Error::OutOfUnitBox(_))));
    }

    #[test]
    fn fixture_instance() {
        let inst = StabInstance {
            dim: 3,
            rects: vec![
                rect(&[(0.2, 0.6), (0.4, 1.0), (0.4, 0.6)]),
                rect(&[(0.0, 0.4), (0.2, 0.6), (0.8, 1.0)]),
            ],
            points: vec![vec![0.3, 0.8, 0.5]],
        };
        for b in [Backend::Naive, Backend::Tree] {
            assert_eq!(solve_stabbing_via_frechet(&inst, b).unwrap(), vec![vec![0]]);
        }
        let q = point_to_series("p", &inst.points[0]).unwrap();
        let r1 = Radius::new(1.0).unwrap();
        assert!(decide_frechet(
            q.values(),
            rect_to_series("a", &inst.rects[0]).unwrap().values(),
            r1
        ));
        assert!(!decide_frechet(
            q.values(),
            rect_to_series("b", &inst.rects[1]).unwrap().values(),
            r1
        ));
    }

    #[test]
    fn empty_and_single() {
        let inst = StabInstance {
            dim: 2,
            rects: vec![],
            points: vec![vec![0.5, 0.5], vec![0.0, 1.0]],
        };
        assert_eq!(
            solve_stabbing_via_frechet(&inst, Backend::Tree).unwrap(),
            vec![Vec::<usize>::new(); 2]
        );
        let got = solve_range_via_frechet(&[vec![0.5, 0.5]], &[rect(&[(0.0, 1.0), (0.0, 1.0)])], Backend::Tree).unwrap();
        assert_eq!(got, vec![vec![0]]);
    }

    #[test]
    fn scaling_lands_in_the_box() {
        let (r, p) = scale_to_unit_box(1, &[rect(&[(10.0, 20.0)])], &[vec![15.0], vec![30.0]]).unwrap();
        assert_eq!(r[0].intervals()[0], Interval::new(0.0, 0.5));
        assert_eq!(p, vec![vec![0.25], vec![1.0]]);
    }
}
