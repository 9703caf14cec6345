use frechet_range::{Backend, Interval, RangeIndex, Rect, StabIndex};
use proptest::prelude::*;

/// Coordinates on a coarse grid so endpoints and queries collide often.
fn coord() -> impl Strategy<Value = f64> {
    prop_oneof![
        8 => (0i32..=32).prop_map(|k| k as f64 / 32.0),
        1 => Just(f64::NEG_INFINITY),
        1 => Just(f64::INFINITY),
    ]
}

fn interval() -> impl Strategy<Value = Interval> {
    (coord(), coord()).prop_filter_map("empty", |(a, b)| {
        let iv = Interval::new(a.min(b), a.max(b));
        (!iv.is_empty() && !(a.is_infinite() && a == b)).then_some(iv)
    })
}

fn rects(d: usize) -> impl Strategy<Value = Vec<Rect>> {
    prop::collection::vec(prop::collection::vec(interval(), d).prop_map(Rect::new), 0..150)
}

fn point(d: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec((0i32..=32).prop_map(|k| k as f64 / 32.0), d)
}

fn brute_stab(rs: &[Rect], p: &[f64]) -> Vec<u32> {
    (0..rs.len() as u32).filter(|&k| rs[k as usize].contains(p)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn stabbing_backends_agree(
        (d, rs, ps) in (1usize..=4).prop_flat_map(|d| (Just(d), rects(d), prop::collection::vec(point(d), 1..30)))
    ) {
        let items: Vec<(Rect, u32)> = rs.iter().cloned().zip(0..).collect();
        let naive = StabIndex::build(d, items.clone(), Backend::Naive).unwrap();
        let tree = StabIndex::build(d, items, Backend::Tree).unwrap();
        for p in &ps {
            let want = brute_stab(&rs, p);
            prop_assert_eq!(naive.stab(p).unwrap(), want.clone());
            let mut raw = Vec::new();
            tree.stab_each(p, |id| raw.push(id)).unwrap();
            raw.sort_unstable();
            prop_assert_eq!(raw, want, "tree reports each rectangle once");
        }
    }

    #[test]
    fn range_backends_agree(
        (d, pts, qs) in (1usize..=6).prop_flat_map(|d| (
            Just(d),
            prop::collection::vec(point(d), 0..200),
            prop::collection::vec(prop::collection::vec(interval(), d).prop_map(Rect::new), 1..30),
        ))
    ) {
        let items: Vec<(Vec<f64>, u32)> = pts.iter().cloned().zip(0..).collect();
        let naive = RangeIndex::build(d, items.clone(), Backend::Naive).unwrap();
        let tree = RangeIndex::build(d, items, Backend::Tree).unwrap();
        for r in &qs {
            let want: Vec<u32> = (0..pts.len() as u32).filter(|&k| r.contains(&pts[k as usize])).collect();
            prop_assert_eq!(naive.query(r).unwrap(), want.clone());
            let mut raw = Vec::new();
            tree.query_each(r, |id| raw.push(id)).unwrap();
            raw.sort_unstable();
            prop_assert_eq!(raw, want, "tree reports each point once");
        }
    }
}

#[test]
fn large_random_agreement() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(501);
    for d in 1..=4 {
        let rs: Vec<(Rect, u32)> = (0..1000)
            .map(|k| {
                let ivs = (0..d)
                    .map(|_| {
                        let (a, b): (f64, f64) = (rng.random(), rng.random());
                        Interval::new(a.min(b), a.max(b))
                    })
                    .collect();
                (Rect::new(ivs), k)
            })
            .collect();
        let naive = StabIndex::build(d, rs.clone(), Backend::Naive).unwrap();
        let tree = StabIndex::build(d, rs, Backend::Tree).unwrap();
        for _ in 0..100 {
            let p: Vec<f64> = (0..d).map(|_| rng.random()).collect();
            assert_eq!(naive.stab(&p).unwrap(), tree.stab(&p).unwrap());
        }
    }
}
