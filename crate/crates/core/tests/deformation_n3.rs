use leibniz_core::catalogue::n3;
use leibniz_core::cohomology::cohomology;
use leibniz_core::deformation::{DeformationEngine, PolyBracket};
use leibniz_core::linalg::Vector;
use leibniz_core::poly::{pair_index, pairs, quadratic_vector, relation_span, QuadraticRelation};
use leibniz_core::render::render_poly_vector;
use leibniz_core::{Cochain, Scalar, SubspaceBasis, Theory};

fn relations(m: usize, gens: &[&[(usize, usize, i64)]]) -> SubspaceBasis {
    let rels: Vec<QuadraticRelation> = gens.iter().map(|g| QuadraticRelation::from_terms(m, g).unwrap()).collect();
    relation_span(m, &rels).unwrap()
}

fn lie_ground_truth() -> SubspaceBasis {
    relations(5, &[&[(1, 2, 1), (3, 4, -1)], &[(1, 5, 1), (2, 4, 1)]])
}

fn leibniz_ground_truth() -> SubspaceBasis {
    let mut gens: Vec<Vec<(usize, usize, i64)>> = vec![vec![(1, 2, 1), (3, 4, -1)], vec![(1, 5, 1), (2, 4, 1)]];
    for i in [2, 3, 5] {
        for j in [6, 7, 8] {
            gens.push(vec![(i, j, 1)]);
        }
    }
    let refs: Vec<&[(usize, usize, i64)]> = gens.iter().map(|g| &g[..]).collect();
    relations(8, &refs)
}

/// Relation span read off the `t_i t_j` coefficients of the Leibniz defect
/// of `μ0 + Σ t_i φ_i`, expanded literally and projected to `H^3`.
fn literal_relation_span(theory: Theory) -> SubspaceBasis {
    let e = DeformationEngine::new(&n3(), theory).unwrap();
    let m = e.param_count();
    let defect = e.infinitesimal().bracket().leibniz_defect(2);
    let mut forms: Vec<Vector> = vec![vec![Scalar::zero(); m * (m + 1) / 2]; e.h3().dim_h];
    for (i, j) in pairs(m) {
        let mut values = Vec::new();
        for ((a, b, c), d) in &defect {
            for (k, p) in d.iter().enumerate() {
                let coeff = p.coefficient(&[i, j]);
                if !coeff.is_zero() {
                    values.push((vec![*a, *b, *c], k + 1, coeff));
                }
            }
        }
        let refs: Vec<(&[usize], usize, Scalar)> = values.iter().map(|(t, o, c)| (&t[..], *o, c.clone())).collect();
        let cochain = Cochain::from_values(Theory::Leibniz, 3, 3, &refs).unwrap().in_theory(theory).unwrap();
        let red = e.h3().class_reduce(&cochain).unwrap();
        for (d, c) in red.coordinates.iter().enumerate() {
            forms[d][pair_index(i, j, m)] = c.clone();
        }
    }
    let nonzero: Vec<Vector> = forms.into_iter().filter(|f| f.iter().any(|x| !x.is_zero())).collect();
    SubspaceBasis::span(m * (m + 1) / 2, &nonzero).unwrap()
}

#[test]
fn lie_relations() {
    let e = DeformationEngine::new(&n3(), Theory::Lie).unwrap();
    let rels = e.base_relations().unwrap();
    let span = relation_span(5, &rels).unwrap();
    assert!(span.same_span(&lie_ground_truth()));
    assert!(span.same_span(&literal_relation_span(Theory::Lie)));
    let text: Vec<String> = rels.iter().map(QuadraticRelation::render).collect();
    assert_eq!(text, vec!["t1*t2 - t3*t4", "t1*t5 + t2*t4"]);
}

#[test]
fn leibniz_relations() {
    let e = DeformationEngine::new(&n3(), Theory::Leibniz).unwrap();
    let span = relation_span(8, &e.base_relations().unwrap()).unwrap();
    assert_eq!(span.dim(), 11);
    assert!(span.same_span(&leibniz_ground_truth()));
    assert!(span.same_span(&literal_relation_span(Theory::Leibniz)));
}

#[test]
fn obstructed_pairs() {
    let lie = DeformationEngine::new(&n3(), Theory::Lie).unwrap();
    let v = lie.versal_output().unwrap();
    assert_eq!(v.obstructed_pairs, vec![(1, 2), (1, 5), (2, 4), (3, 4)]);

    let leib = DeformationEngine::new(&n3(), Theory::Leibniz).unwrap();
    let v = leib.versal_output().unwrap();
    let expected = vec![
        (1, 2), (1, 5), (2, 4), (2, 6), (2, 7), (2, 8), (3, 4), (3, 6), (3, 7), (3, 8), (5, 6), (5, 7), (5, 8),
    ];
    assert_eq!(v.obstructed_pairs, expected);
    for sq in leib.all_massey_squares().unwrap() {
        if sq.i == sq.j || (sq.i >= 6 && sq.j >= 6) {
            assert!(sq.cochain.is_zero(), "({},{})", sq.i, sq.j);
        }
    }
}

#[test]
fn massey_squares_are_symmetric() {
    for theory in [Theory::Lie, Theory::Leibniz] {
        let e = DeformationEngine::new(&n3(), theory).unwrap();
        let m = e.param_count();
        for i in 1..=m {
            for j in 1..=m {
                assert_eq!(e.massey_square(i, j).unwrap(), e.massey_square(j, i).unwrap());
            }
        }
    }
}

#[test]
fn lie_relations_embed_in_leibniz_relations() {
    let lie = DeformationEngine::new(&n3(), Theory::Lie).unwrap().base_relations().unwrap();
    let leib = relation_span(8, &DeformationEngine::new(&n3(), Theory::Leibniz).unwrap().base_relations().unwrap()).unwrap();
    for r in lie {
        let padded = QuadraticRelation::new(8, r.coefficients().iter().map(|(&k, c)| (k, c.clone()))).unwrap();
        assert!(leib.contains(&padded.to_vector()).unwrap());
    }
}

fn assert_consistent(bracket: &PolyBracket, in_span: impl Fn(&leibniz_core::poly::Poly) -> bool) {
    for (_, d) in bracket.leibniz_defect(2) {
        for p in d {
            assert!(p.homogeneous(0).is_zero());
            assert!(p.homogeneous(1).is_zero());
            assert!(in_span(&p.homogeneous(2)), "{}", p.render());
        }
    }
}

#[test]
fn versal_brackets_satisfy_the_identity_modulo_relations() {
    for theory in [Theory::Lie, Theory::Leibniz] {
        let v = DeformationEngine::new(&n3(), theory).unwrap().versal_output().unwrap();
        let m = v.param_count();
        let span = relation_span(m, &v.relations).unwrap();
        assert_consistent(&v.bracket(), |p| span.contains(&quadratic_vector(p, m)).unwrap());
        // without the corrections the coboundary pairs such as (1,4) break it
        let bare = v.first_order_bracket();
        let broken = bare
            .leibniz_defect(2)
            .into_iter()
            .flat_map(|(_, d)| d)
            .any(|p| !span.contains(&quadratic_vector(&p.homogeneous(2), m)).unwrap());
        assert!(broken);
        assert!(v.corrections.contains_key(&(1, 4)));
    }
}

#[test]
fn corrections_solve_the_half_obstruction() {
    let e = DeformationEngine::new(&n3(), Theory::Leibniz).unwrap();
    let h2 = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    let psi = e.second_order_correction(1, 4).unwrap().unwrap();
    let d = h2.differential_matrix().mul_vec(&psi.vectorize()).unwrap();
    let omega = e.obstruction_cochain(1, 4).unwrap();
    let half: Vec<Scalar> = omega.coefficients().iter().map(|x| x * &Scalar::new(1, 2)).collect();
    assert_eq!(d, half);
    assert!(e.second_order_correction(2, 6).unwrap().is_none());
}

#[test]
fn first_order_tables() {
    let lie = DeformationEngine::new(&n3(), Theory::Lie).unwrap().infinitesimal().bracket();
    let row = |b: &PolyBracket, i: usize, j: usize| render_poly_vector(b.entry(i - 1, j - 1));
    assert_eq!(row(&lie, 1, 2), "t2 e2 + t3 e3");
    assert_eq!(row(&lie, 1, 3), "t4 e1 + t5 e2 - t2 e3");
    assert_eq!(row(&lie, 2, 3), "e1 + t1 e3");

    let leib = DeformationEngine::new(&n3(), Theory::Leibniz).unwrap().infinitesimal().bracket();
    let expected = [
        (1, 1, "0"),
        (1, 2, "t2 e2 + t3 e3"),
        (1, 3, "t4 e1 + t5 e2 - t2 e3"),
        (2, 1, "-t2 e2 - t3 e3"),
        (2, 2, "t6 e1"),
        (2, 3, "e1 + t1 e3"),
        (3, 1, "-t4 e1 - t5 e2 + t2 e3"),
        (3, 2, "(t7 - 1) e1 - t1 e3"),
        (3, 3, "t8 e1"),
    ];
    for (i, j, text) in expected {
        assert_eq!(row(&leib, i, j), text);
    }
}
