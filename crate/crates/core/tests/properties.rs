use proptest::prelude::*;

use simplicial_bialgebra::chain::{homology, induced_map_on_homology, ChainComplex};
use simplicial_bialgebra::delta::{canonical_factorization, compose, epi_mono, DeltaMorphism, Generator};
use simplicial_bialgebra::dold_kan::{build_adjunction, counit, DoldKanObject};
use simplicial_bialgebra::linalg::{inverse, kernel_basis, smith_normal_form, solve_many, Matrix};
use simplicial_bialgebra::verify::parse_object;

fn matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Matrix> {
    (1..=max_rows, 1..=max_cols).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, c), r).prop_map(|rows| Matrix::from_rows(&rows))
    })
}

fn morphism(max: usize) -> impl Strategy<Value = DeltaMorphism> {
    (0..=max, 0..=max).prop_flat_map(|(q, p)| {
        let all = DeltaMorphism::all(q, p);
        (0..all.len()).prop_map(move |i| all[i].clone())
    })
}

/// Two composable morphisms `[a] -> [b] -> [c]`.
fn composable(max: usize) -> impl Strategy<Value = (DeltaMorphism, DeltaMorphism)> {
    (0..=max, 0..=max, 0..=max).prop_flat_map(|(a, b, c)| {
        let f = DeltaMorphism::all(b, c);
        let g = DeltaMorphism::all(a, b);
        (0..f.len(), 0..g.len()).prop_map(move |(i, j)| (f[i].clone(), g[j].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn smith_decomposition_verifies(m in matrix(4, 4)) {
        let snf = smith_normal_form(&m);
        prop_assert!(snf.verify(&m).is_ok());
        for w in snf.invariant_factors.windows(2) {
            prop_assert!((&w[1] % &w[0]) == 0.into());
        }
    }

    #[test]
    fn kernel_is_annihilated_and_has_full_size(m in matrix(4, 5)) {
        let k = kernel_basis(&m);
        prop_assert!(m.mul(&k).unwrap().is_zero());
        let rank = smith_normal_form(&m).rank();
        prop_assert_eq!(k.cols(), m.cols() - rank);
    }

    #[test]
    fn solve_recovers_images(m in matrix(4, 3), x in prop::collection::vec(-3i64..=3, 3)) {
        let col = Matrix::from_rows(&x[..m.cols()].iter().map(|v| vec![*v]).collect::<Vec<_>>());
        let b = m.mul(&col).unwrap();
        let sol = solve_many(&m, &b).unwrap().expect("b is in the image");
        prop_assert_eq!(m.mul(&sol).unwrap(), b);
    }

    #[test]
    fn unimodular_products_invert(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3) {
        // upper and lower unitriangular factors
        let u = Matrix::from_rows(&[vec![1, a, b], vec![0, 1, c], vec![0, 0, 1]]);
        let l = Matrix::from_rows(&[vec![1, 0, 0], vec![c, 1, 0], vec![a, b, 1]]);
        let m = u.mul(&l).unwrap();
        let inv = inverse(&m).unwrap();
        prop_assert!(m.mul(&inv).unwrap().is_identity());
    }

    #[test]
    fn canonical_word_evaluates_back(f in morphism(5)) {
        let w = canonical_factorization(&f);
        prop_assert!(w.is_canonical());
        prop_assert_eq!(w.evaluate(), f.clone());
        let faces = w.generators().iter().filter(|g| matches!(g, Generator::Face(_))).count();
        let degens = w.generators().len() - faces;
        prop_assert_eq!(f.source_rank() + faces, f.target_rank() + degens);
        let (s, i) = epi_mono(&f);
        prop_assert!(s.is_surjective() && i.is_injective());
        prop_assert_eq!(compose(&i, &s).unwrap(), f);
    }

    #[test]
    fn composition_matches_set_maps((f, g) in composable(4)) {
        let h = compose(&f, &g).unwrap();
        for x in 0..=g.source_rank() {
            prop_assert_eq!(h.apply(x), f.apply(g.apply(x)));
        }
    }

    #[test]
    fn dold_kan_on_two_term_complexes(r0 in 0usize..=2, r1 in 0usize..=2, entries in prop::collection::vec(-3i64..=3, 4)) {
        let rows: Vec<Vec<i64>> = (0..r0).map(|i| (0..r1).map(|j| entries[i * 2 + j]).collect()).collect();
        let d1 = if r0 == 0 || r1 == 0 { Matrix::zeros(r0, r1) } else { Matrix::from_rows(&rows) };
        let c = ChainComplex::new("C", vec![r0, r1], vec![d1]).unwrap();
        let data = build_adjunction(&DoldKanObject::Chain(c.clone().into()), 3).unwrap();
        prop_assert!(data.report.passed(), "{}", data.report.to_text(false));
        // NΓ(C) -> C induces isomorphisms on homology
        let e = counit(&c, 3).unwrap();
        for n in 0..=1 {
            let h = induced_map_on_homology(&e.map, n).unwrap();
            let hc = homology(&c.resized(3), n).unwrap();
            prop_assert_eq!(h.source.describe(), hc.describe());
            prop_assert!(inverse(&h.matrix).is_ok() || h.matrix.shape() == (0, 0));
        }
    }

    #[test]
    fn complex_literals_round_trip(r0 in 1usize..=3, r1 in 1usize..=3, entries in prop::collection::vec(-9i64..=9, 9)) {
        let rows: Vec<Vec<i64>> = (0..r0).map(|i| (0..r1).map(|j| entries[i * 3 + j]).collect()).collect();
        let text = rows
            .iter()
            .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect::<Vec<_>>()
            .join("/");
        let spec = parse_object(&format!("complex:[{r0},{r1};{text}]")).unwrap();
        let c = spec.complex(1).unwrap();
        prop_assert_eq!(c.differential(1), &Matrix::from_rows(&rows));
    }
}
