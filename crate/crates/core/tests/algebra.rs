use hirota_core::matrix::PolyMatrix;
use hirota_core::rational::{int, to_f64};
use hirota_core::{MultiPoly, Rational, RationalFunction};
use num_traits::Signed;
use proptest::prelude::*;

const NVARS: usize = 3;

fn poly_strategy(nvars: usize, max_terms: usize, max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(
        (prop::collection::vec(0..=max_exp, nvars), -5i64..=5),
        0..=max_terms,
    )
    .prop_map(move |terms| {
        MultiPoly::from_terms(nvars, terms.into_iter().map(|(e, c)| (e, int(c)))).unwrap()
    })
}

fn matrix_strategy(size: usize) -> impl Strategy<Value = Vec<Vec<MultiPoly>>> {
    prop::collection::vec(prop::collection::vec(poly_strategy(2, 2, 1), size), size)
}

/// Laplace expansion along the first row, written independently of the
/// library's determinant code.
fn laplace(rows: &[Vec<MultiPoly>]) -> MultiPoly {
    let size = rows.len();
    if size == 1 {
        return rows[0][0].clone();
    }
    let nvars = rows[0][0].nvars();
    let mut acc = MultiPoly::zero(nvars);
    for col in 0..size {
        let minor: Vec<Vec<MultiPoly>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != col)
                    .map(|(_, p)| p.clone())
                    .collect()
            })
            .collect();
        let term = &rows[0][col] * &laplace(&minor);
        acc = if col % 2 == 0 {
            &acc + &term
        } else {
            &acc - &term
        };
    }
    acc
}

fn det(rows: &[Vec<MultiPoly>]) -> MultiPoly {
    PolyMatrix::from_rows(rows.to_vec())
        .unwrap()
        .determinant()
        .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn determinant_matches_laplace(size in 1usize..=5, seed in any::<u64>()) {
        let rows = matrix_from_seed(size, seed);
        prop_assert_eq!(det(&rows), laplace(&rows));
    }

    #[test]
    fn bareiss_matches_cofactor(rows in matrix_strategy(4)) {
        let m = PolyMatrix::from_rows(rows).unwrap();
        prop_assert_eq!(m.determinant_bareiss().unwrap(), m.determinant_cofactor().unwrap());
    }

    #[test]
    fn determinant_is_alternating(rows in matrix_strategy(4), a in 0usize..4, b in 0usize..4) {
        prop_assume!(a != b);
        let mut swapped = rows.clone();
        swapped.swap(a, b);
        prop_assert_eq!(det(&swapped), -det(&rows));
        let mut repeated = rows.clone();
        repeated[b] = rows[a].clone();
        prop_assert!(det(&repeated).is_zero());
    }

    #[test]
    fn determinant_is_multilinear(
        rows in matrix_strategy(3),
        r1 in prop::collection::vec(poly_strategy(2, 2, 1), 3),
        r2 in prop::collection::vec(poly_strategy(2, 2, 1), 3),
        a in -4i64..=4,
        row in 0usize..3,
    ) {
        let with = |r: Vec<MultiPoly>| {
            let mut m = rows.clone();
            m[row] = r;
            det(&m)
        };
        let combined: Vec<MultiPoly> = r1.iter().zip(&r2).map(|(p, q)| &p.scale(&int(a)) + q).collect();
        prop_assert_eq!(with(combined), &with(r1).scale(&int(a)) + &with(r2));
    }

    #[test]
    fn mixed_partials_commute(p in poly_strategy(NVARS, 6, 3), i in 0usize..NVARS, j in 0usize..NVARS) {
        let ij = p.derivative(i).unwrap().derivative(j).unwrap();
        let ji = p.derivative(j).unwrap().derivative(i).unwrap();
        prop_assert_eq!(ij, ji);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        p in poly_strategy(NVARS, 5, 2),
        q in poly_strategy(NVARS, 5, 2),
        images in prop::collection::vec(poly_strategy(NVARS, 3, 1), NVARS),
    ) {
        let sigma: Vec<(usize, MultiPoly)> = images.into_iter().enumerate().collect();
        let lhs = (&p * &q).substitute(&sigma).unwrap();
        let rhs = &p.substitute(&sigma).unwrap() * &q.substitute(&sigma).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn euler_scaling(coeffs in prop::collection::vec(-5i64..=5, 10), degree in 0u32..=3) {
        // a homogeneous polynomial of the chosen degree in x1..x3, plus t
        let monomials: Vec<Vec<u32>> = (0..=degree)
            .flat_map(|a| (0..=degree - a).map(move |b| vec![a, b, degree - a - b, 0]))
            .collect();
        let p = MultiPoly::from_terms(4, monomials.into_iter().zip(&coeffs).map(|(e, &c)| (e, int(c)))).unwrap();
        let vars = [0, 1, 2];
        prop_assume!(!p.is_zero());
        prop_assert_eq!(p.homogeneity(&vars), Some(degree));
        let t = MultiPoly::var(4, 3);
        let sigma: Vec<(usize, MultiPoly)> = vars.iter().map(|&v| (v, &t * &MultiPoly::var(4, v))).collect();
        prop_assert_eq!(p.substitute(&sigma).unwrap(), &t.pow(degree) * &p);
    }

    #[test]
    fn derivative_matches_central_differences(
        num in poly_strategy(NVARS, 4, 2),
        den in poly_strategy(NVARS, 3, 2),
        point in prop::collection::vec(-6i64..=6, NVARS),
        var in 0usize..NVARS,
    ) {
        let den = &den + &MultiPoly::constant(NVARS, int(7));
        let f = RationalFunction::new(num, den.clone()).unwrap();
        let xi: Vec<Rational> = point.iter().map(|&v| int(v)).collect();
        let h = Rational::new(1.into(), 1_000_000.into());
        let shifted = |sign: i64| {
            let mut p = xi.clone();
            p[var] += &h * int(sign);
            p
        };
        prop_assume!(den.eval(&xi).unwrap().abs() >= int(1));
        let (Ok(up), Ok(down)) = (f.eval(&shifted(1)), f.eval(&shifted(-1))) else {
            return Err(TestCaseError::reject("pole next to the sample point"));
        };
        let difference = to_f64(&((up - down) / (&h * int(2))));
        let exact = to_f64(&f.derivative(var).unwrap().eval(&xi).unwrap());
        prop_assert!((difference - exact).abs() <= 1e-8 * exact.abs().max(1.0), "{difference} vs {exact}");
    }

    #[test]
    fn equality_is_consistent_with_arithmetic(
        num in poly_strategy(NVARS, 4, 2),
        den in poly_strategy(NVARS, 3, 2),
        factor in poly_strategy(NVARS, 3, 1),
        other in poly_strategy(NVARS, 3, 2),
    ) {
        prop_assume!(!den.is_zero() && !factor.is_zero());
        let a = RationalFunction::new(num.clone(), den.clone()).unwrap();
        let b = RationalFunction::new(&num * &factor, &den * &factor).unwrap();
        let c = RationalFunction::new(other, den).unwrap();
        prop_assert!(a == a.clone());
        prop_assert!(a == b && b == a);
        prop_assert!(&a + &c == &b + &c);
        prop_assert!(&a * &c == &b * &c);
    }
}

/// Dense random matrices with integer-linear entries in two variables.
fn matrix_from_seed(size: usize, seed: u64) -> Vec<Vec<MultiPoly>> {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    (0..size)
        .map(|_| {
            (0..size)
                .map(|_| {
                    let terms =
                        [[0u32, 0], [1, 0], [0, 1]].map(|e| (e, int(rng.gen_range(-3..=3))));
                    MultiPoly::from_terms(2, terms).unwrap()
                })
                .collect()
        })
        .collect()
}

#[test]
fn large_determinants_use_fraction_free_elimination() {
    for seed in 0..3 {
        let rows = matrix_from_seed(7, seed);
        let m = PolyMatrix::from_rows(rows.clone()).unwrap();
        assert_eq!(
            m.determinant_bareiss().unwrap(),
            m.determinant_cofactor().unwrap()
        );
    }
}

#[test]
fn zero_polynomial_reports_degree_zero() {
    assert_eq!(MultiPoly::zero(2).homogeneity(&[0, 1]), Some(0));
}
