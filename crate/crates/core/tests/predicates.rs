mod common;

use common::{backward_number, forward_number, frechet, int_series, int_shaped, mirror, Scaled};
use frechet_range::predicates::{bundle_check, eval_predicate, fb_profile, pair_intervals, simple_intervals, PredicateId};
use frechet_range::{Radius, Shape};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const S2: Scaled = Scaled { scale: 2.0 };

fn r(x: f64) -> Radius {
    Radius::new(x).unwrap()
}

#[test]
fn point_examples() {
    let p1 = eval_predicate(PredicateId::P1, &[0.5, 3.0], &[0.0, 3.0], r(1.0)).unwrap();
    assert!(p1);
    let p4 = eval_predicate(PredicateId::P4 { i: 1, j: 1 }, &[12.0, 3.0], &[0.0, 10.0], r(1.0)).unwrap();
    assert!(!p4);
    assert!(eval_predicate(PredicateId::P3 { i: 3, j: 1 }, &[0.0, 1.0], &[0.0, 1.0], r(1.0)).is_err());
}

#[test]
fn fb_examples() {
    let p = fb_profile(&[4.0; 5], r(0.0));
    assert_eq!(p.forward, vec![5; 5]);
    assert_eq!(p.backward, vec![5; 5]);
    let p = fb_profile(&[0.0, 10.0], r(1.0));
    assert_eq!((p.forward[0], p.backward[0]), (2, 1));
    // Both readings come straight from the definition.
    assert!(frechet(&[0, 10], &[-1, 11], 1));
    assert!(!frechet(&[0, 10], &[1, -1], 1));
    assert_eq!((forward_number(&[0, 10], 1, 1), backward_number(&[0, 10], 1, 1)), (2, 1));
}

fn conditions(q: &[i64], s: &[i64], rr: i64, p: PredicateId) -> bool {
    match p {
        PredicateId::P1 => common::p1(q, s, rr),
        PredicateId::P2 => common::p2(q, s, rr),
        PredicateId::P3 { i, j } => common::p3(q, s, i, j, rr),
        PredicateId::P4 { i, j } => common::p4(q, s, i, j, rr),
        PredicateId::P5 { i, j, k } => common::p5(q, s, i, j, k, rr),
        PredicateId::P6 { i, l, j } => common::p6(q, s, i, l, j, rr),
    }
}

fn random_predicate(rng: &mut impl Rng, tq: usize, ts: usize) -> PredicateId {
    let qv = |rng: &mut dyn rand::RngCore| rng.random_range(1..=tq);
    let qe = |rng: &mut dyn rand::RngCore| rng.random_range(1..tq);
    let sv = |rng: &mut dyn rand::RngCore| rng.random_range(1..=ts);
    let se = |rng: &mut dyn rand::RngCore| rng.random_range(1..ts);
    match rng.random_range(0..6) {
        0 => PredicateId::P1,
        1 => PredicateId::P2,
        2 => PredicateId::P3 { i: qe(rng), j: sv(rng) },
        3 => PredicateId::P4 { i: qv(rng), j: se(rng) },
        4 => PredicateId::P5 {
            i: qe(rng),
            j: sv(rng),
            k: sv(rng),
        },
        _ => PredicateId::P6 {
            i: qv(rng),
            l: qv(rng),
            j: se(rng),
        },
    }
}

#[test]
fn direct_evaluation_matches_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(201);
    for _ in 0..20_000 {
        let q = int_series(&mut rng, 2..=6, -20, 20);
        let s = int_series(&mut rng, 2..=6, -20, 20);
        let rr = rng.random_range(0..=12);
        let p = random_predicate(&mut rng, q.len(), s.len());
        assert_eq!(
            eval_predicate(p, &S2.values(&q), &S2.values(&s), S2.radius(rr)).unwrap(),
            conditions(&q, &s, rr, p),
            "{p} q={q:?} s={s:?} r={rr}"
        );
    }
}

fn satisfies(cs: &[frechet_range::predicates::IntervalConstraint], q: &[f64]) -> bool {
    cs.iter().all(|c| c.contains(q[c.vertex - 1]))
}

#[test]
fn interval_forms_match_oracle_for_shaped_queries() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    for _ in 0..20_000 {
        let shape = if rng.random_bool(0.5) { Shape::M } else { Shape::W };
        let tq = rng.random_range(2..=6);
        let q = int_shaped(&mut rng, tq, -20, 20, shape == Shape::M);
        let s = int_series(&mut rng, 2..=6, -20, 20);
        let rr = rng.random_range(0..=12);
        let (qf, sf, rf) = (S2.values(&q), S2.values(&s), S2.radius(rr));
        let p = loop {
            let p = random_predicate(&mut rng, tq, s.len());
            if !matches!(p, PredicateId::P6 { .. }) {
                break p;
            }
        };
        let cs = match p {
            PredicateId::P5 { i, j, k } => pair_intervals(i, j, k, &sf, tq, rf, shape).unwrap(),
            other => simple_intervals(other, &sf, tq, rf, shape).unwrap(),
        };
        assert_eq!(
            satisfies(&cs, &qf),
            conditions(&q, &s, rr, p),
            "{p} {shape:?} q={q:?} s={s:?} r={rr}"
        );
    }
}

#[test]
fn ordered_pair_decomposition_on_any_first_curve() {
    // A flat or single-edge first curve fits both shapes; check that the
    // decomposition holds whichever shape the edge orientation picks.
    let mut rng = ChaCha8Rng::seed_from_u64(203);
    for _ in 0..5000 {
        let q = int_series(&mut rng, 2..=2, -20, 20);
        let s = int_series(&mut rng, 2..=5, -20, 20);
        let rr = rng.random_range(0..=12);
        let shape = if q[0] <= q[1] { Shape::M } else { Shape::W };
        let (j, k) = (rng.random_range(1..=s.len()), rng.random_range(1..=s.len()));
        let cs = pair_intervals(1, j, k, &S2.values(&s), 2, S2.radius(rr), shape).unwrap();
        assert_eq!(satisfies(&cs, &S2.values(&q)), common::p5(&q, &s, 1, j, k, rr));
    }
}

#[test]
fn bundle_matches_all_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(204);
    let mut hits = 0;
    for _ in 0..20_000 {
        let q = int_series(&mut rng, 2..=6, -10, 10);
        let s = int_series(&mut rng, 2..=4, -10, 10);
        let rr = rng.random_range(0..=8);
        let i = rng.random_range(1..q.len());
        let l = rng.random_range(i + 1..=q.len());
        let j = rng.random_range(1..s.len());
        let all = (i..l).all(|x| (x + 1..=l).all(|y| common::p6(&q, &s, x, y, j, rr)));
        hits += all as usize;
        assert_eq!(
            bundle_check(i, l, j, &S2.values(&q), &S2.values(&s), S2.radius(rr)).unwrap(),
            all,
            "i={i} l={l} j={j} q={q:?} s={s:?} r={rr}"
        );
    }
    assert!(hits > 1000, "too few positive cases: {hits}");
}

#[test]
fn profile_matches_definition() {
    let mut rng = ChaCha8Rng::seed_from_u64(205);
    for _ in 0..5000 {
        let q = int_series(&mut rng, 2..=7, -20, 20);
        let rr = rng.random_range(0..=12);
        let p = fb_profile(&S2.values(&q), S2.radius(rr));
        for i in 1..=q.len() {
            assert_eq!(p.forward[i - 1], forward_number(&q, i, rr), "f_{i} q={q:?} r={rr}");
            assert_eq!(p.backward[i - 1], backward_number(&q, i, rr), "b_{i} q={q:?} r={rr}");
        }
    }
}

/// The defining condition holds at every `x` up to `f_i` and `b_i`.
#[test]
fn prefix_property() {
    let mut rng = ChaCha8Rng::seed_from_u64(206);
    for _ in 0..5000 {
        let q = int_series(&mut rng, 2..=7, -20, 20);
        let rr = rng.random_range(0..=12);
        let p = fb_profile(&S2.values(&q), S2.radius(rr));
        for i in 1..=q.len() {
            for x in i + 1..=p.forward[i - 1] {
                let (a, b) = (q[i - 1] - rr, q[x - 1] + rr);
                assert!(a <= b && frechet(&q[i - 1..x], &[a, b], rr));
            }
            for x in i + 1..=p.backward[i - 1] {
                let (a, b) = (q[i - 1] + rr, q[x - 1] - rr);
                assert!(a >= b && frechet(&q[i - 1..x], &[a, b], rr));
            }
        }
    }
}

proptest! {
    #[test]
    fn profile_bounds(q in prop::collection::vec(-1e3f64..1e3, 2..10), rho in 0f64..300.0) {
        let p = fb_profile(&q, r(rho));
        for i in 1..=q.len() {
            prop_assert!(p.forward[i - 1] >= i && p.forward[i - 1] <= q.len());
            prop_assert!(p.backward[i - 1] >= i && p.backward[i - 1] <= q.len());
        }
    }

    #[test]
    fn mirroring_swaps_forward_and_backward(q in prop::collection::vec(-40i64..=40, 2..10), rr in 0i64..=30) {
        let p = fb_profile(&S2.values(&q), S2.radius(rr));
        let m = fb_profile(&S2.values(&mirror(&q)), S2.radius(rr));
        prop_assert_eq!(&m.forward, &p.backward);
        prop_assert_eq!(&m.backward, &p.forward);
    }

    #[test]
    fn profile_on_arbitrary_floats_is_mirror_consistent(q in prop::collection::vec(-1e3f64..1e3, 2..10), rho in 0f64..300.0) {
        let m: Vec<f64> = q.iter().map(|x| -x).collect();
        let p = fb_profile(&q, r(rho));
        let pm = fb_profile(&m, r(rho));
        prop_assert_eq!(pm.forward, p.backward);
    }
}
