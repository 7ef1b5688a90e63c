use std::collections::HashSet;

use iwasawa_core::{
    CartanType, GroupElement, GroupModel, IwasawaModel, LazardCoordinates, PAdic, RootSystem,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn sys(name: &str) -> RootSystem {
    RootSystem::new(name.parse::<CartanType>().unwrap())
}

/// Leading principal minor of size `k` by the Leibniz formula.
fn minor(g: &GroupElement, k: usize) -> PAdic {
    let mut perm: Vec<usize> = (0..k).collect();
    let mut total = g.get(0, 0).lift_int(0);
    loop {
        let inversions = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| perm[i] > perm[j]);
        let sign = if inversions.count() % 2 == 0 { 1 } else { -1 };
        let term = (0..k).fold(g.get(0, 0).lift_int(sign), |acc, i| acc * g.get(i, perm[i]));
        total = total + term;
        if !next_permutation(&mut perm) {
            return total;
        }
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

#[test]
fn torus_parameters_are_leading_minors() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for name in ["A1", "A2", "A3"] {
        let group = GroupModel::new(sys(name), 5, 5).unwrap();
        for _ in 0..50 {
            let g = group.random_element(&mut rng, 8);
            let params = group.triangular_decompose(&g).unwrap();
            for (j, v) in params.v.iter().enumerate() {
                assert_eq!(
                    group.scalar(1) + *v,
                    minor(&g, j + 1),
                    "{name} minor {}",
                    j + 1
                );
            }
        }
    }
}

#[test]
fn product_of_ten_generators_decomposes() {
    let group = GroupModel::new(sys("A2"), 3, 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..100 {
        let g = group.random_element(&mut rng, 10);
        let params = group.triangular_decompose(&g).unwrap();
        assert_eq!(group.recompose(&params).unwrap(), g);
        assert_eq!(group.omega(&g).unwrap(), params.min_valuation());
    }
}

#[test]
fn chart_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for (name, p) in [("A1", 3), ("A2", 5), ("A3", 3)] {
        let group = GroupModel::new(sys(name), p, 5).unwrap();
        for _ in 0..40 {
            let c = group.random_coordinates(&mut rng);
            let g = group.from_coordinates(&c).unwrap();
            assert_eq!(group.lazard_coordinates(&g).unwrap(), c);
            let h = group.random_element(&mut rng, 6);
            assert_eq!(
                group
                    .from_coordinates(&group.lazard_coordinates(&h).unwrap())
                    .unwrap(),
                h
            );
        }
    }
}

#[test]
fn level_one_representatives_span_degree_one() {
    let model = IwasawaModel::new(sys("A1"), 3, 1, 2).unwrap();
    let group = model.group();
    let d = group.generators().len();
    let prec = group.precision() - 1;
    let mut seen = HashSet::new();
    for idx in 0..27usize {
        let e = (0..d)
            .map(|i| PAdic::new(3, prec, ((idx / 3usize.pow(i as u32)) % 3) as i64).unwrap())
            .collect();
        let g = group.from_coordinates(&LazardCoordinates { e }).unwrap();
        let image = model.dirac(&g).unwrap();
        let linear: Vec<_> = image
            .terms()
            .map(|(k, c)| (k.clone(), c.residue()))
            .collect();
        seen.insert(linear);
    }
    assert_eq!(seen.len(), 27);
}

#[test]
fn rejects_matrices_outside_the_kernel() {
    let group = GroupModel::new(sys("A1"), 3, 3).unwrap();
    let s = |v| group.scalar(v);
    let g = GroupElement::from_rows(vec![vec![s(2), s(3)], vec![s(3), s(5)]]).unwrap();
    assert!(group.triangular_decompose(&g).is_err());
    assert!(GroupElement::from_rows(vec![vec![s(1), s(3)], vec![s(3), s(1)]]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn root_subgroups_are_additive(p in prop::sample::select(vec![3u64, 5, 7]), s in any::<i64>(), t in any::<i64>(), k in 0usize..6) {
        let rs = sys("A2");
        let group = GroupModel::new(rs.clone(), p, 4).unwrap();
        let g = rs.roots()[k].clone();
        let (s, t) = (group.scalar(s), group.scalar(t));
        let lhs = group.x_elem(&g, &s).unwrap().mul(&group.x_elem(&g, &t).unwrap());
        prop_assert_eq!(lhs, group.x_elem(&g, &(s + t)).unwrap());
    }

    #[test]
    fn torus_elements_are_multiplicative(p in prop::sample::select(vec![3u64, 5, 7]), a in any::<i64>(), b in any::<i64>(), k in 0usize..2) {
        let rs = sys("A2");
        let group = GroupModel::new(rs.clone(), p, 4).unwrap();
        let pp = group.scalar(p as i64);
        let (l, m) = (group.scalar(1) + pp * group.scalar(a), group.scalar(1) + pp * group.scalar(b));
        let delta = rs.simple_root(k);
        let lhs = group.h_elem(&delta, &l).unwrap().mul(&group.h_elem(&delta, &m).unwrap());
        prop_assert_eq!(lhs, group.h_elem(&delta, &(l * m)).unwrap());
    }

    #[test]
    fn omega_is_ultrametric(seed in any::<u64>()) {
        let group = GroupModel::new(sys("A2"), 3, 5).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = group.random_element(&mut rng, 4);
        let y = group.random_element(&mut rng, 4).pow(3);
        let w = group.omega(&x.mul(&y)).unwrap().bound();
        prop_assert!(w >= group.omega(&x).unwrap().bound().min(group.omega(&y).unwrap().bound()));
    }
}
