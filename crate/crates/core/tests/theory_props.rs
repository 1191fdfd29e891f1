mod common;

use common::{Raw, Rep};
use hlya::cohomology::{
    check_cocycle23, coboundary_of, cochain_space, cohomology23, decompose, delta, delta_raw, is_cochain,
};
use hlya::deformation::{check_lambda, deform, deformation_split};
use hlya::extension::{build_extension, classify};
use hlya::io;
use hlya::random;
use hlya::representation::check_representation;
use hlya::samples;
use proptest::prelude::*;

fn config() -> ProptestConfig {
    ProptestConfig {
        cases: 24,
        ..ProptestConfig::default()
    }
}

proptest! {
    #![proptest_config(config())]

    /// At the lowest level δ is the negated (CC3, CC4) defect, evaluated here
    /// by the naive oracle.
    #[test]
    fn delta_one_is_minus_cc3_cc4(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let p = random::cochain_pair(&mut rng, &r);
        let (d1, d2) = delta(&r, 1, &p.nu, &p.omega).unwrap();
        let oracle = Rep::of(&r);
        let (nu, om) = (Raw::of(&p.nu), Raw::of(&p.omega));
        for t in common::tuples(2, 4) {
            let want: Vec<_> = common::cc_defect(&oracle, &nu, &om, "CC3", &t).iter().map(|x| -x).collect();
            prop_assert_eq!(d1.value(&t).to_vec(), want);
        }
        for t in common::tuples(2, 5) {
            let want: Vec<_> = common::cc_defect(&oracle, &nu, &om, "CC4", &t).iter().map(|x| -x).collect();
            prop_assert_eq!(d2.value(&t).to_vec(), want);
        }
    }

    #[test]
    fn delta_preserves_cochains(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let mut pick = |arity| {
            let space = cochain_space(&r, arity).unwrap();
            let coeffs: Vec<_> = (0..space.dim()).map(|_| random::small(&mut rng)).collect();
            space.combine(&coeffs)
        };
        let (f, g) = (pick(4), pick(5));
        let (a, b) = delta_raw(&r, 2, &f, &g).unwrap();
        prop_assert!(is_cochain(&r, &a) && is_cochain(&r, &b));
    }

    #[test]
    fn coboundaries_decompose(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let f = random::equivariant_map(&mut rng, &r);
        let p = coboundary_of(&r, &f).unwrap();
        prop_assert!(check_cocycle23(&r, &p).unwrap().passed());
        let g = decompose(&r, &p).unwrap().expect("a coboundary decomposes");
        prop_assert_eq!(coboundary_of(&r, &g).unwrap(), p);
    }

    #[test]
    fn cohomology_is_basis_independent(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let p = random::invertible(&mut rng, 2);
        let s = random::invertible(&mut rng, m);
        let moved = samples::transport(&r, &p, &s).unwrap();
        prop_assert!(check_representation(&moved).passed());
        let (h1, h2) = (cohomology23(&r).unwrap(), cohomology23(&moved).unwrap());
        prop_assert_eq!(
            (h1.c2dim, h1.c3dim, h1.zdim, h1.bdim, h1.hdim2, h1.hdim3),
            (h2.c2dim, h2.c3dim, h2.zdim, h2.bdim, h2.hdim2, h2.hdim3)
        );
    }

    #[test]
    fn classification_is_linear(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let (p1, p2) = (random::cocycle(&mut rng, &r), random::cocycle(&mut rng, &r));
        let class = |p| classify(&build_extension(&r.algebra, &r, p).unwrap()).unwrap();
        let sum: Vec<_> = class(&p1).iter().zip(class(&p2)).map(|(a, b)| a + &b).collect();
        prop_assert_eq!(class(&p1.add(&p2)), sum);
    }

    #[test]
    fn deformation_check_matches_split(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let a = random::dim2_algebra(&mut rng);
        let r = hlya::representation::adjoint(&a).unwrap();
        let p = random::cochain_pair(&mut rng, &r);
        let lam = check_lambda(&deform(&a, &p).unwrap()).passed();
        prop_assert_eq!(lam, deformation_split(&a, &p).unwrap().passed());
    }

    #[test]
    fn representation_documents_round_trip(seed in any::<u64>(), m in 1usize..=2) {
        let mut rng = random::rng(seed);
        let r = random::dim2_rep(&mut rng, m);
        let text = io::render(&io::rep_to_value(&r));
        let back = io::rep_from_value(&io::parse(&text).unwrap(), "$", &|_| unreachable!()).unwrap();
        prop_assert_eq!(back, r);
    }
}
