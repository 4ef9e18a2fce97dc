use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use star_eigen::graph::{jm_isomorphism, verify_eigenfunction, Transport, VerifyOptions};
use star_eigen::io::{sparse_from_json, sparse_to_json};
use star_eigen::rational::int;
use star_eigen::reconstruction::{random_coefficients, reconstruct, restrict, F2Combination};
use star_eigen::specht::{jm_on_perm_sum, jm_on_tabloid_sum, phi, Partition, TabloidSum, Tableau, Tabloid};
use star_eigen::{GraphVariant, Permutation, PiSpec, SparseFunction, StarKind};

fn perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((1..=n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(|w| Permutation::from_word(&w).unwrap())
}

fn sized_perm() -> impl Strategy<Value = Permutation> {
    (3usize..=7).prop_flat_map(perm)
}

fn variant() -> impl Strategy<Value = StarKind> {
    prop_oneof![Just(StarKind::StarS), Just(StarKind::StarJM)]
}

fn closure_opts() -> VerifyOptions {
    VerifyOptions {
        support_closure: true,
        ..VerifyOptions::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pi_specs_are_eigenfunctions(n in 3usize..=7, m_seed in 0usize..8, kind in variant(), seed in any::<u64>()) {
        let m = 1 + m_seed % ((n - 1) / 2);
        let spec = PiSpec::random(n, m, kind, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let g = GraphVariant::new(kind, n).unwrap();
        let sparse = spec.as_sparse(7).unwrap();
        let r = verify_eigenfunction(&g, &sparse, &int(spec.eigenvalue()), &closure_opts()).unwrap();
        prop_assert!(r.is_eigenfunction(), "{:?}", r.witnesses.first());
        prop_assert_eq!(spec.eigenvalue(), n as i64 - m as i64 - 1);
    }

    #[test]
    fn end_swap_transports_eigenfunctions(n in 3usize..=6, seed in any::<u64>()) {
        let spec = PiSpec::random(n, 1, StarKind::StarS, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        let f = spec.as_sparse(6).unwrap();
        let h = jm_isomorphism(&f, Transport::StarToJm).unwrap();
        let g = GraphVariant::star_jm(n).unwrap();
        let r = verify_eigenfunction(&g, &h, &int(n as i64 - 2), &closure_opts()).unwrap();
        prop_assert!(r.is_eigenfunction());
        prop_assert_eq!(jm_isomorphism(&h, Transport::JmToStar).unwrap(), f);
    }

    #[test]
    fn tau_of_moved_tableau(sigma in (4usize..=7).prop_flat_map(perm), pick in any::<prop::sample::Index>()) {
        let n = sigma.len();
        let shapes = Partition::all(n);
        let shape = &shapes[pick.index(shapes.len())];
        let t = Tableau::identity(shape);
        let moved = t.apply(&sigma).unwrap();
        prop_assert_eq!(moved.tau(), t.tau().compose(&sigma.inverse()).unwrap());
        prop_assert_eq!(Tabloid::of(&moved), Tabloid::of(&t).apply(&sigma));
    }

    #[test]
    fn phi_intertwines_jucys_murphy(
        terms in (4usize..=6).prop_flat_map(|n| prop::collection::vec((perm(n), -3i64..=3), 1..4)),
        pick in any::<prop::sample::Index>(),
    ) {
        let n = terms[0].0.len();
        let shapes = Partition::all(n);
        let shape = &shapes[pick.index(shapes.len())];
        let t = Tableau::identity(shape);
        let mut x = TabloidSum::zero();
        for (sigma, c) in &terms {
            x.add_term(Tabloid::of(&t.apply(sigma).unwrap()), *c);
        }
        let lhs = phi(&jm_on_tabloid_sum(&x), n, 1_000_000).unwrap();
        let rhs = jm_on_perm_sum(&phi(&x, n, 1_000_000).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn reconstruction_from_any_base(base in (4usize..=5).prop_flat_map(perm), seed in any::<u64>()) {
        let n = base.len();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut f = F2Combination::new(n, random_coefficients((n - 1) * (n - 2), &mut rng)).unwrap();
        f.base = base.clone();
        let boundary = restrict(&f, &base).unwrap();
        let g = reconstruct(n, &boundary, &base).unwrap();
        prop_assert_eq!(&g.coefficients, &f.coefficients);
        prop_assert_eq!(g.to_sparse(6).unwrap(), f.to_sparse(6).unwrap());
    }

    #[test]
    fn sparse_json_round_trip(entries in prop::collection::vec((sized_perm(), -50i64..=50, 1i64..=9), 0..12)) {
        let n = entries.first().map_or(3, |e| e.0.len());
        let mut f = SparseFunction::new(n, StarKind::StarJM);
        for (pi, p, q) in entries.into_iter().filter(|e| e.0.len() == n) {
            f.set(pi, star_eigen::Rational::new(p.into(), q.into())).unwrap();
        }
        let s = sparse_to_json(&f).unwrap();
        let back = sparse_from_json(&s).unwrap();
        prop_assert_eq!(&back, &f);
        prop_assert_eq!(sparse_to_json(&back).unwrap(), s);
    }
}
