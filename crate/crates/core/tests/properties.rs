//! Randomized laws for the Hecke monoid, Bruhat order, degrees and curve
//! neighborhoods on systems too large for the exhaustive suites.

use std::sync::OnceLock;

use proptest::prelude::*;

use qdeg_core::degree::minimal_elements;
use qdeg_core::{Degree, Distance, Options, Parabolic, RootSystem, TypeLetter, WeylElement};

const SYSTEMS: &[(TypeLetter, usize)] = &[
    (TypeLetter::A, 4),
    (TypeLetter::B, 3),
    (TypeLetter::C, 4),
    (TypeLetter::D, 4),
    (TypeLetter::F, 4),
    (TypeLetter::G, 2),
    (TypeLetter::E, 6),
];

fn systems() -> &'static [RootSystem] {
    static CELL: OnceLock<Vec<RootSystem>> = OnceLock::new();
    CELL.get_or_init(|| SYSTEMS.iter().map(|&(l, n)| RootSystem::new(l, n).unwrap()).collect())
}

fn element(rs: &RootSystem, word: &[usize]) -> WeylElement {
    let w: Vec<usize> = word.iter().map(|i| i % rs.rank()).collect();
    rs.from_word(&w)
}

fn word() -> impl Strategy<Value = Vec<usize>> {
    prop::collection::vec(0usize..8, 0..14)
}

fn parabolic(rs: &RootSystem, mask: u32) -> Parabolic {
    Parabolic::from_mask(rs.rank(), mask & rs.full_mask())
}

fn degree(p: &Parabolic, raw: &[i32]) -> Degree {
    let comp = p.complement();
    Degree::from_outside(p, &raw[..comp.len()]).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn hecke_is_associative(s in 0..SYSTEMS.len(), a in word(), b in word(), c in word()) {
        let rs = &systems()[s];
        let (u, v, w) = (element(rs, &a), element(rs, &b), element(rs, &c));
        prop_assert_eq!(rs.hecke(&rs.hecke(&u, &v), &w), rs.hecke(&u, &rs.hecke(&v, &w)));
    }

    #[test]
    fn hecke_inverse_and_bounds(s in 0..SYSTEMS.len(), a in word(), b in word()) {
        let rs = &systems()[s];
        let (u, v) = (element(rs, &a), element(rs, &b));
        let uv = rs.hecke(&u, &v);
        prop_assert_eq!(rs.inverse(&uv), rs.hecke(&rs.inverse(&v), &rs.inverse(&u)));
        prop_assert!(rs.bruhat_leq(&u.mul(&v), &uv));
        prop_assert!(rs.bruhat_leq(&u, &uv) && rs.bruhat_leq(&v, &uv));
        prop_assert!(rs.length(&uv) <= rs.length(&u) + rs.length(&v));
    }

    #[test]
    fn hecke_word_of_reduced_word_is_the_element(s in 0..SYSTEMS.len(), a in word()) {
        let rs = &systems()[s];
        let w = element(rs, &a);
        let red = rs.reduced_word(&w);
        prop_assert_eq!(red.len(), rs.length(&w));
        prop_assert_eq!(rs.from_word(&red), w.clone());
        prop_assert_eq!(rs.hecke_word(&rs.identity(), &red), w);
    }

    #[test]
    fn cosets_of_random_elements(s in 0..SYSTEMS.len(), a in word(), mask in 0u32..256) {
        let rs = &systems()[s];
        let p = parabolic(rs, mask);
        let w = element(rs, &a);
        let (lo, hi) = (rs.coset_min(&w, &p), rs.coset_max(&w, &p));
        prop_assert!(rs.is_min_rep(&lo, &p));
        prop_assert_eq!(lo.mul(&rs.longest_element(&p)), hi.clone());
        prop_assert_eq!(rs.hecke(&w, &rs.longest_element(&p)), hi);
        prop_assert!(rs.bruhat_leq(&lo, &w));
    }

    #[test]
    fn greedy_and_induction(s in 0..SYSTEMS.len(), mask in 0u32..256, qmask in 0u32..256,
                            raw in prop::collection::vec(0i32..4, 8)) {
        let rs = &systems()[s];
        let p = parabolic(rs, mask);
        let q = parabolic(rs, mask | qmask);
        let e = degree(&q, &raw);
        let g = rs.greedy_decomposition(&e);
        prop_assert_eq!(rs.degree_of_roots(&g, &q), e.clone());
        let up = rs.induce(&e, &p).unwrap();
        prop_assert_eq!(rs.restrict(&up, &q).unwrap(), e);
    }

    #[test]
    fn curve_neighborhoods_are_monotone(s in 0..SYSTEMS.len(), mask in 0u32..256,
                                        raw in prop::collection::vec(0i32..3, 8), bump in 0usize..8) {
        let rs = &systems()[s];
        let p = parabolic(rs, mask);
        let comp = p.complement();
        prop_assume!(!comp.is_empty());
        let d = degree(&p, &raw);
        let d2 = d.add(&Degree::unit(&p, comp[bump % comp.len()]));
        let (z, z2) = (rs.z(&d), rs.z(&d2));
        prop_assert!(rs.is_min_rep(&z.z_min, &p));
        prop_assert!(rs.bruhat_leq(&z.z_max, &z2.z_max));
        prop_assert_eq!(rs.coset_max(&z.z_min, &p), z.z_max);
    }

    #[test]
    fn minimal_elements_form_a_dominating_antichain(raw in prop::collection::vec(prop::collection::vec(0i32..4, 3), 0..20)) {
        let p = Parabolic::borel(3);
        let ds: Vec<Degree> = raw.iter().map(|v| degree(&p, v)).collect();
        let m = minimal_elements(&ds);
        for a in &m {
            prop_assert!(m.iter().all(|b| a == b || !b.leq(a)));
        }
        for d in &ds {
            prop_assert!(m.iter().any(|a| a.leq(d)));
        }
    }
}

fn distances() -> &'static [Distance] {
    static CELL: OnceLock<Vec<Distance>> = OnceLock::new();
    CELL.get_or_init(|| {
        let d4 = RootSystem::new(TypeLetter::D, 4).unwrap();
        let f4 = RootSystem::new(TypeLetter::F, 4).unwrap();
        let b4 = RootSystem::new(TypeLetter::B, 4).unwrap();
        vec![
            Distance::new(&d4, &Parabolic::from_indices(4, &[0, 2]).unwrap(), &Options::default()).unwrap(),
            Distance::new(&f4, &Parabolic::from_indices(4, &[1, 2]).unwrap(), &Options::default()).unwrap(),
            Distance::new(&b4, &Parabolic::borel(4), &Options::default()).unwrap(),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn delta_is_invariant_and_self_consistent(k in 0usize..3, a in word(), side in 0usize..8) {
        let dist = &distances()[k];
        let rs = dist.rs();
        let p = *dist.parabolic();
        let w = element(rs, &a);
        let f = dist.delta_w(&w).unwrap();
        prop_assert!(f.is_antichain() && !f.degrees.is_empty());
        prop_assert_eq!(&dist.delta_w(&rs.inverse(&w)).unwrap(), &f);
        if let Some(&b) = p.indices().get(side % p.indices().len().max(1)) {
            let s = rs.simple_reflection(b);
            prop_assert_eq!(&dist.delta_w(&s.mul(&w)).unwrap(), &f);
            prop_assert_eq!(&dist.delta_w(&w.mul(&s)).unwrap(), &f);
        }
        for d in &f.degrees {
            prop_assert!(d.leq(dist.d_x()));
            prop_assert!(dist.in_own_front(d).unwrap());
            prop_assert!(dist.reaches(dist.coset_of(&w), d));
        }
    }
}
