use std::cmp::Ordering;

use proptest::prelude::*;

use invcomp_core::polynomial::rat;
use invcomp_core::{
    axioms_check, buchberger_nf, inv_bas, inv_comp, is_groebner, is_involutive, nf_full, parse_system,
    thomas_completion, DivisionSpec, Monomial, OrderKind, OrderingSpec, Partition, Polynomial, SystemFile, Term,
    VarSet,
};

fn vars(n: usize) -> VarSet {
    let names: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    VarSet::new(&names).unwrap()
}

fn ord(n: usize, kind: OrderKind) -> OrderingSpec {
    OrderingSpec::new(kind, vars(n))
}

fn mono(n: usize, max_deg: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_deg, n)
        .prop_filter("degree bound", move |e| e.iter().sum::<u32>() <= max_deg)
        .prop_map(Monomial::new)
}

fn mono_set(n: usize, max_deg: u32, max_len: usize) -> impl Strategy<Value = Vec<Monomial>> {
    prop::collection::vec(mono(n, max_deg), 1..=max_len).prop_map(|mut v| {
        v.sort();
        v.dedup();
        v
    })
}

fn poly(n: usize, max_deg: u32, kind: OrderKind) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((-5i64..=5, 1i64..=3, mono(n, max_deg)), 1..=3)
        .prop_map(move |terms| {
            let o = ord(n, kind);
            Polynomial::from_terms(
                terms.into_iter().map(|(a, b, m)| Term {
                    coeff: rat(a, b),
                    mono: m,
                }),
                &o,
            )
        })
        .prop_filter("nonzero", |p| !p.is_zero())
}

fn kinds() -> impl Strategy<Value = OrderKind> {
    prop_oneof![Just(OrderKind::Lex), Just(OrderKind::DegRevLex)]
}

fn divisions(n: usize) -> Vec<DivisionSpec> {
    vec![
        DivisionSpec::janet(&vars(n)),
        DivisionSpec::thomas(),
        DivisionSpec::alex(&vars(n)),
    ]
}

fn lm_set(basis: &[Polynomial]) -> Vec<Monomial> {
    let mut v: Vec<Monomial> = basis.iter().map(|g| g.lm().unwrap().clone()).collect();
    v.sort();
    v
}

fn random_member(basis: &[Polynomial], mults: &[(i64, Monomial)], o: &OrderingSpec) -> Polynomial {
    let mut f = Polynomial::zero();
    for (g, (c, m)) in basis.iter().zip(mults.iter().cycle()) {
        f = f.add(&g.mul_term(&rat(*c, 1), m, o), o);
    }
    f
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn orderings_are_total_and_compatible(
        kind in prop_oneof![Just(OrderKind::Lex), Just(OrderKind::DegRevLex), Just(OrderKind::Alex)],
        a in mono(3, 5), b in mono(3, 5), c in mono(3, 5),
    ) {
        let o = ord(3, kind);
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if o.cmp(&a, &b) != Ordering::Less && o.cmp(&b, &c) != Ordering::Less {
            prop_assert_ne!(o.cmp(&a, &c), Ordering::Less);
        }
        if kind.is_admissible() {
            prop_assert_eq!(o.cmp(&a.mul(&c), &b.mul(&c)), ab);
            prop_assert_ne!(o.cmp(&a, &Monomial::one(3)), Ordering::Less);
        }
    }

    #[test]
    fn division_axioms_hold(set in (1usize..=3).prop_flat_map(|n| mono_set(n, 4, 5))) {
        let n = set[0].nvars();
        for div in divisions(n) {
            let report = axioms_check(&div, &set).unwrap();
            prop_assert!(report.passed(), "{:?} on {:?}: {:?}", div, set, report.violation);
        }
    }

    #[test]
    fn janet_completion_within_thomas_completion(set in (1usize..=3).prop_flat_map(|n| mono_set(n, 4, 4))) {
        let n = set[0].nvars();
        let o = ord(n, OrderKind::Lex);
        let polys: Vec<Polynomial> = set.iter().map(|m| Polynomial::monomial(rat(1, 1), m.clone())).collect();
        let (basis, _) = inv_comp(&polys, &DivisionSpec::janet(&vars(n)), &o).unwrap();
        let thomas = thomas_completion(&set).unwrap();
        for m in lm_set(&basis) {
            prop_assert!(thomas.contains(&m), "{:?} not in Thomas completion of {:?}", m, set);
        }
    }

    #[test]
    fn parse_render_is_idempotent(kind in kinds(), ps in prop::collection::vec(poly(3, 4, OrderKind::Lex), 1..4)) {
        let o = ord(3, kind);
        let polynomials = ps.iter().map(|p| Polynomial::from_terms(p.terms().to_vec(), &o)).collect();
        let s = SystemFile { ordering: o, polynomials };
        let text = s.render();
        let back = parse_system(&text).unwrap();
        prop_assert_eq!(&back.polynomials, &s.polynomials);
        prop_assert_eq!(back.render(), text);
    }

    #[test]
    fn rescaling_preserves_groebner_verdict(
        kind in kinds(),
        ps in prop::collection::vec(poly(2, 3, OrderKind::Lex), 1..4),
        scales in prop::collection::vec((1i64..=7, 1i64..=7, any::<bool>()), 3),
    ) {
        let o = ord(2, kind);
        let g: Vec<Polynomial> = ps.iter().map(|p| Polynomial::from_terms(p.terms().to_vec(), &o)).collect();
        let scaled: Vec<Polynomial> = g
            .iter()
            .zip(&scales)
            .map(|(p, &(a, b, neg))| p.scale(&rat(if neg { -a } else { a }, b)))
            .collect();
        let monic: Vec<Polynomial> = g.iter().map(Polynomial::monic).collect();
        let verdict = is_groebner(&g, &o);
        prop_assert_eq!(is_groebner(&scaled, &o), verdict);
        prop_assert_eq!(is_groebner(&monic, &o), verdict);
    }

    #[test]
    fn involutive_implies_groebner(
        kind in kinds(),
        ps in prop::collection::vec(poly(2, 3, OrderKind::Lex), 1..4),
    ) {
        let o = ord(2, kind);
        let g: Vec<Polynomial> = ps.iter().map(|p| Polynomial::from_terms(p.terms().to_vec(), &o)).collect();
        let mut heads = lm_set(&g);
        heads.dedup();
        prop_assume!(heads.len() == g.len());
        let lms: Vec<Monomial> = g.iter().map(|p| p.lm().unwrap().clone()).collect();
        for div in divisions(2) {
            let part = Partition::new(&div, &lms);
            let autoreduced = (0..lms.len()).all(|i| (0..lms.len()).all(|j| i == j || !part.divides(&lms, j, &lms[i])));
            if autoreduced && is_involutive(&g, &div, &o) {
                prop_assert!(is_groebner(&g, &o));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_systems_complete_to_the_unique_minimal_basis(
        kind in kinds(),
        ps in prop::collection::vec(poly(3, 2, OrderKind::Lex), 1..4),
        mults in prop::collection::vec((-3i64..=3, mono(3, 2)), 1..4),
    ) {
        let o = ord(3, kind);
        let f: Vec<Polynomial> = ps.iter().map(|p| Polynomial::from_terms(p.terms().to_vec(), &o)).collect();
        for div in divisions(3) {
            let (basis, _) = inv_comp(&f, &div, &o).unwrap();
            prop_assert!(is_involutive(&basis, &div, &o));
            prop_assert!(is_groebner(&basis, &o));
            prop_assert_eq!(lm_set(&basis), lm_set(&inv_bas(&f, &div, &o).unwrap()));
            for g in &f {
                prop_assert!(nf_full(g, &basis, &div, &o).is_zero());
            }
            let member = random_member(&f, &mults, &o);
            prop_assert!(nf_full(&member, &basis, &div, &o).is_zero());
            prop_assert!(buchberger_nf(&member, &basis, &o).is_zero());
        }
    }

    #[test]
    fn input_order_does_not_matter(
        which in 0usize..3,
        perm in Just((0..4).collect::<Vec<usize>>()).prop_shuffle(),
    ) {
        let text = [
            "vars: x y\norder: lex\np: x^2 - 3/2*y^2\np: 2*x*y + 3*y^2\n",
            "vars: x y z\np: x + y + z\np: x*y + y*z + z*x\np: x*y*z - 1\n",
            "vars: u0 u1 u2\np: u0^2 + 2*u1^2 + 2*u2^2 - u0\np: 2*u0*u1 + 2*u1*u2 - u1\np: u0 + 2*u1 + 2*u2 - 1\n",
        ][which];
        let s = parse_system(text).unwrap();
        let div = DivisionSpec::janet(s.vars());
        let shuffled: Vec<Polynomial> =
            perm.iter().filter(|&&i| i < s.polynomials.len()).map(|&i| s.polynomials[i].clone()).collect();
        let (a, _) = inv_comp(&s.polynomials, &div, &s.ordering).unwrap();
        let (b, _) = inv_comp(&shuffled, &div, &s.ordering).unwrap();
        let sorted = |mut v: Vec<Polynomial>| {
            v.sort_by(|p, q| p.lm().cmp(&q.lm()));
            v
        };
        prop_assert_eq!(sorted(a), sorted(b));
    }
}
