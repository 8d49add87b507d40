mod common;

use common::catalog_structures;
use poisson_core::poly::{monomials_of_weight, Rational};
use poisson_core::structure::StructureError;
use poisson_core::{parse_poly, rat, Monomial, OneForm, PoissonStructure, Polynomial, VarTable};
use proptest::prelude::*;

fn arb_poly(nvars: usize) -> impl Strategy<Value = Polynomial> {
    proptest::collection::vec(
        (
            proptest::collection::vec(0u32..3, nvars),
            -5i64..=5,
            1i64..=2,
        ),
        0..4,
    )
    .prop_map(move |terms| {
        let mut p = Polynomial::zero(nvars);
        for (e, num, den) in terms {
            p.add_term(Monomial(e), rat(num, den));
        }
        p
    })
}

fn arb_form(nvars: usize) -> impl Strategy<Value = OneForm> {
    proptest::collection::vec(arb_poly(nvars), nvars).prop_map(|coeffs| OneForm { coeffs })
}

fn three_var_structures() -> Vec<PoissonStructure> {
    catalog_structures()
        .into_iter()
        .map(|(_, s)| s)
        .filter(|s| s.nvars() == 3)
        .collect()
}

fn arb_structure() -> impl Strategy<Value = PoissonStructure> {
    let all = three_var_structures();
    (0..all.len()).prop_map(move |k| all[k].clone())
}

fn arb_antisymmetric(max: usize) -> impl Strategy<Value = Vec<Vec<Rational>>> {
    (2..=max).prop_flat_map(|n| {
        proptest::collection::vec((-4i64..=4, 1i64..=3), n * (n - 1) / 2).prop_map(move |upper| {
            let mut a = vec![vec![rat(0, 1); n]; n];
            let mut k = 0;
            for i in 0..n {
                for j in i + 1..n {
                    a[i][j] = rat(upper[k].0, upper[k].1);
                    a[j][i] = -a[i][j].clone();
                    k += 1;
                }
            }
            a
        })
    })
}

fn names(n: usize) -> VarTable {
    let v: Vec<String> = (1..=n).map(|i| format!("X{i}")).collect();
    VarTable::new(&v).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn bracket_is_antisymmetric_and_leibniz(s in arb_structure(), f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
        prop_assert_eq!(s.bracket(&f, &g).unwrap(), -s.bracket(&g, &f).unwrap());
        let lhs = s.bracket(&f, &(&g * &h)).unwrap();
        let rhs = &s.bracket(&f, &g).unwrap() * &h + &g * &s.bracket(&f, &h).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jacobi_on_random_elements(s in arb_structure(), f in arb_poly(3), g in arb_poly(3), h in arb_poly(3)) {
        let b = |u: &Polynomial, v: &Polynomial| s.bracket(u, v).unwrap();
        let sum = b(&f, &b(&g, &h)) + b(&g, &b(&h, &f)) + b(&h, &b(&f, &g));
        prop_assert!(sum.is_zero());
    }

    #[test]
    fn lie_rinehart_axioms(s in arb_structure(), a in arb_form(3), b in arb_form(3), f in arb_poly(3)) {
        // [α, fβ] = f[α, β] + ρ(α)(f)β
        let lhs = s.lr_bracket(&a, &b.scale_poly(&f)).unwrap();
        let rhs = s
            .lr_bracket(&a, &b)
            .unwrap()
            .scale_poly(&f)
            .add(&b.scale_poly(&s.anchor_apply(&a, &f).unwrap()));
        prop_assert_eq!(lhs, rhs);
        // ρ is a Lie algebra map
        let ab = s.lr_bracket(&a, &b).unwrap();
        let rho = |x: &OneForm, g: &Polynomial| s.anchor_apply(x, g).unwrap();
        prop_assert_eq!(rho(&ab, &f), rho(&a, &rho(&b, &f)) - rho(&b, &rho(&a, &f)));
        // antisymmetry
        prop_assert_eq!(ab, s.lr_bracket(&b, &a).unwrap().scale_poly(&Polynomial::constant(3, rat(-1, 1))));
    }

    #[test]
    fn lr_bracket_of_exact_forms(s in arb_structure(), f in arb_poly(3), g in arb_poly(3)) {
        let lhs = s.lr_bracket(&OneForm::exact(&f), &OneForm::exact(&g)).unwrap();
        prop_assert_eq!(lhs, OneForm::exact(&s.bracket(&f, &g).unwrap()));
    }

    #[test]
    fn trace_is_trace_of_adjoint(s in arb_structure(), y in arb_poly(3), z in arb_poly(3)) {
        let n = s.nvars();
        let mut adjoint_trace = Polynomial::zero(n);
        for i in 0..n {
            adjoint_trace += &s.lr_bracket(&OneForm::exact(&y), &OneForm::basis(n, i)).unwrap().coeffs[i];
        }
        prop_assert_eq!(s.trace(&y).unwrap(), adjoint_trace);
        prop_assert_eq!(s.trace(&(&y + &z)).unwrap(), s.trace(&y).unwrap() + s.trace(&z).unwrap());
    }

    #[test]
    fn log_canonical_matrices_validate(a in arb_antisymmetric(5)) {
        let n = a.len();
        let s = PoissonStructure::log_canonical(names(n), &a).unwrap();
        prop_assert_eq!(s.log_canonical_matrix().unwrap(), a.clone());
        for i in 0..n {
            let row: Rational = a[i].iter().sum();
            prop_assert_eq!(s.generator_trace(i), Polynomial::var(n, i).scale(&row));
        }
    }
}

#[test]
fn quad3_lie_rinehart_values() {
    let vars = VarTable::new(&["x", "y", "z"]).unwrap();
    let s = PoissonStructure::from_text(vars.clone(), &[("z", "y", "2*x*z"), ("y", "x", "x^2")])
        .unwrap();
    let d = |i| OneForm::basis(3, i);
    let p = |t: &str| parse_poly(t, &vars).unwrap();
    let zy = s.lr_bracket(&d(2), &d(1)).unwrap();
    assert_eq!(zy.coeffs, vec![p("2*z"), p("0"), p("2*x")]);
    let yx = s.lr_bracket(&d(1), &d(0)).unwrap();
    assert_eq!(yx.coeffs, vec![p("2*x"), p("0"), p("0")]);
    assert!(s.modular_data().unimodular);
}

#[test]
fn jacobi_violation_is_reported() {
    let vars = VarTable::new(&["x", "y", "z"]).unwrap();
    let err = PoissonStructure::from_text(
        vars.clone(),
        &[("x", "y", "y"), ("y", "z", "z"), ("z", "x", "x")],
    )
    .unwrap_err();
    let StructureError::JacobiViolation { witnesses } = err else {
        panic!("expected a Jacobi violation, got {err:?}");
    };
    assert_eq!(witnesses.len(), 1);
    assert_eq!(witnesses[0].triple, (0, 1, 2));
    assert_eq!(
        witnesses[0].jacobiator,
        parse_poly("-x - y - z", &vars).unwrap()
    );
}

#[test]
fn weighted_grading_is_respected() {
    for (id, s) in catalog_structures() {
        let d = s.weight_shift().unwrap();
        let weights = s.vars().weights().to_vec();
        for w in 0..5u64 {
            for m in monomials_of_weight(&weights, w) {
                let f = Polynomial::term(m, rat(1, 1));
                for i in 0..s.nvars() {
                    let g = s.ham(i, &f);
                    let expected = w as i64 + i64::from(weights[i]) + d;
                    if let Some(got) = g.homogeneous_weight(s.vars()) {
                        assert_eq!(got as i64, expected, "{id}");
                    } else {
                        assert!(g.is_zero(), "{id}");
                    }
                }
            }
        }
    }
}
