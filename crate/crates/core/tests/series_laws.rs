use iwasawa_core::{CartanType, IwasawaModel, Monomial, OrderedSeries, RootSystem, Valuation};
use proptest::prelude::*;

fn model() -> IwasawaModel {
    IwasawaModel::new(
        RootSystem::new("A1".parse::<CartanType>().unwrap()),
        3,
        4,
        4,
    )
    .unwrap()
}

fn series(model: &IwasawaModel, coeffs: &[i64]) -> OrderedSeries {
    let mut s = model.zero();
    let monomials =
        (0..model.degree_bound()).flat_map(|n| Monomial::of_degree(model.num_vars(), n));
    for (k, c) in monomials.zip(coeffs) {
        s.add_term(k, s.scalar(*c));
    }
    s
}

fn coeffs() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(
        prop_oneof![Just(0i64), -500i64..500, (1i64..30).prop_map(|c| 9 * c)],
        20,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn filtration_axioms(a in coeffs(), b in coeffs()) {
        let m = model();
        let (a, b) = (series(&m, &a), series(&m, &b));
        let (wa, wb) = (a.omega_tilde(), b.omega_tilde());
        prop_assert!(a.add(&b).unwrap().omega_tilde().bound() >= wa.bound().min(wb.bound()));
        let top = m.degree_bound().min(m.precision());
        let prod = m.convolve(&a, &b).unwrap().omega_tilde();
        prop_assert!(prod.bound() >= (wa.bound() + wb.bound()).min(top));
        prop_assert_eq!(m.one().omega_tilde(), Valuation::Exact(0));
    }

    #[test]
    fn convolution_is_bilinear(a in coeffs(), b in coeffs(), c in coeffs()) {
        let m = model();
        let (a, b, c) = (series(&m, &a), series(&m, &b), series(&m, &c));
        let lhs = m.convolve(&a, &b.add(&c).unwrap()).unwrap();
        let rhs = m.convolve(&a, &b).unwrap().add(&m.convolve(&a, &c).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_round_trip(a in coeffs()) {
        let m = model();
        let a = series(&m, &a);
        let names: Vec<String> = ["b1", "b2", "b3"].map(String::from).to_vec();
        let text = a.to_text("A1", &names);
        let (back, _, _) = OrderedSeries::parse_text(&text).unwrap();
        prop_assert_eq!(back, a);
    }
}

#[test]
fn augmentation_is_multiplicative() {
    let m = model();
    let a = series(&m, &[4, 3, 0, 9, 1]);
    let b = series(&m, &[7, 0, 6, 2]);
    let prod = m.convolve(&a, &b).unwrap();
    assert_eq!(prod.augmentation(), a.augmentation() * b.augmentation());
}
