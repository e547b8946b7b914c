//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILING` are reported as FAIL without failing the
//! run; any other failure, or an unexpected pass of a known failure, exits 1.

use std::collections::BTreeMap;

use leibniz_cli::run;
use leibniz_core::catalogue::{builtin, lie_table_catalogue, n3, BUILTIN_NAMES};
use leibniz_core::classify::{classify_lie3, fingerprint_leibniz3, LieLabel};
use leibniz_core::cochain::{algebra_from_cochain, circle_product, graded_bracket, structure_cochain};
use leibniz_core::cohomology::{cohomology, default_lie_table};
use leibniz_core::deformation::{base_relations, PolyBracket};
use leibniz_core::differential::{apply_differential, differential};
use leibniz_core::fixtures::n3_lie_cocycles;
use leibniz_core::linalg::{axpy, zero_vector};
use leibniz_core::poly::{relation_span, QuadraticRelation};
use leibniz_core::{AlgebraSpec, Cochain, MatrixQ, Scalar, SubspaceBasis, Theory};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const KNOWN_FAILING: &[usize] = &[3];

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_lie_table() -> Outcome {
    let expected = [
        ("n3", [4, 5, 2]),
        ("r31", [3, 3, 0]),
        ("d(1:1)", [1, 1, 0]),
        ("d(2:3)", [1, 1, 0]),
        ("d(1:0)", [2, 1, 0]),
        ("d(1:-1)", [1, 2, 1]),
        ("sl2", [0, 0, 0]),
    ];
    let rows = default_lie_table().map_err(|e| e.to_string())?;
    ensure(rows.len() == expected.len(), || format!("{} rows", rows.len()))?;
    for (row, (name, dims)) in rows.iter().zip(expected) {
        let got = [row.h1, row.h2, row.h3];
        ensure(row.algebra == name && got == dims, || format!("{}: got {got:?}, want {name} {dims:?}", row.algebra))?;
    }
    Ok(())
}

/// Degree-2 cocycle with value `sign * x_slot` in the general cocycle pattern
/// of n3 (columns e1⊗e1..e3⊗e3, rows e1..e3).
fn pattern_cycle(slot: usize) -> Cochain {
    const M: [[(i64, usize); 9]; 3] = [
        [(0, 0), (1, 9), (1, 4), (-1, 9), (1, 6), (1, 7), (-1, 4), (1, 10), (1, 11)],
        [(0, 0), (1, 2), (1, 5), (-1, 2), (0, 0), (1, 8), (-1, 5), (-1, 8), (0, 0)],
        [(0, 0), (1, 3), (-1, 2), (-1, 3), (0, 0), (1, 1), (1, 2), (-1, 1), (0, 0)],
    ];
    let mut v = zero_vector(27);
    for (row, cols) in M.iter().enumerate() {
        for (col, &(sign, x)) in cols.iter().enumerate() {
            if x == slot {
                v[col * 3 + row] = Scalar::from_int(sign);
            }
        }
    }
    Cochain::devectorize(Theory::Leibniz, 2, 3, v).unwrap()
}

fn c2_leibniz_n3() -> Outcome {
    let h = cohomology(&n3(), Theory::Leibniz, 2).map_err(|e| e.to_string())?;
    ensure((h.dim_z, h.dim_b, h.dim_h) == (11, 3, 8), || format!("Z={} B={} H={}", h.dim_z, h.dim_b, h.dim_h))?;
    let span = |cs: &[Cochain]| {
        let vs: Vec<_> = cs.iter().map(Cochain::vectorize).collect();
        SubspaceBasis::span(27, &vs).unwrap().join(&h.coboundary_basis).unwrap()
    };
    let chosen: Vec<Cochain> = [1, 2, 3, 4, 5, 6, 10, 11].into_iter().map(pattern_cycle).collect();
    let ours = span(&h.representatives);
    let theirs = span(&chosen);
    ensure(ours.dim() == 11 && ours.same_span(&theirs), || format!("spans of dims {} and {} differ", ours.dim(), theirs.dim()))
}

fn relation_space(m: usize, gens: &[&[(usize, usize, i64)]]) -> SubspaceBasis {
    let rels: Vec<QuadraticRelation> = gens.iter().map(|g| QuadraticRelation::from_terms(m, g).unwrap()).collect();
    relation_span(m, &rels).unwrap()
}

fn compare_relations(theory: Theory, m: usize, reference: &[&[(usize, usize, i64)]]) -> Outcome {
    let computed = base_relations(&n3(), theory).map_err(|e| e.to_string())?;
    let ours = relation_span(m, &computed).unwrap();
    let theirs = relation_space(m, reference);
    if ours.same_span(&theirs) {
        return Ok(());
    }
    let text: Vec<String> = computed.iter().map(|r| r.render()).collect();
    let missing: Vec<String> = reference
        .iter()
        .map(|g| QuadraticRelation::from_terms(m, g).unwrap())
        .filter(|r| !ours.contains(&r.to_vector()).unwrap())
        .map(|r| r.render())
        .collect();
    let extra: Vec<String> = computed
        .iter()
        .filter(|r| !theirs.contains(&r.to_vector()).unwrap())
        .map(|r| r.render())
        .collect();
    Err(format!(
        "{theory}: computed span dim {} = <{}>, reference dim {}; reference not in computed: [{}]; computed not in reference: [{}]",
        ours.dim(),
        text.join(", "),
        theirs.dim(),
        missing.join(", "),
        extra.join(", ")
    ))
}

fn c3_relation_ideals() -> Outcome {
    let lie: &[&[(usize, usize, i64)]] = &[&[(1, 5, 1)], &[(1, 2, 1), (3, 4, 1)]];
    let leibniz: &[&[(usize, usize, i64)]] = &[
        &[(1, 5, 1)],
        &[(1, 2, 1), (3, 4, 1)],
        &[(2, 6, 1)],
        &[(3, 6, 1)],
        &[(5, 6, 1)],
        &[(3, 7, 1)],
        &[(5, 7, 1)],
        &[(2, 8, 1)],
        &[(3, 8, 1)],
        &[(5, 8, 1)],
    ];
    let a = compare_relations(Theory::Lie, 5, lie);
    let b = compare_relations(Theory::Leibniz, 8, leibniz);
    match (a, b) {
        (Ok(()), Ok(())) => Ok(()),
        (a, b) => Err([a.err(), b.err()].into_iter().flatten().collect::<Vec<_>>().join("; ")),
    }
}

fn c4_versal_tables() -> Outcome {
    let order_one = |theory: &str| -> Result<Vec<String>, String> {
        let out = run(["leibniz", "versal", "--algebra", "n3", "--theory", theory]);
        ensure(out.code == 0, || out.stderr.clone())?;
        Ok(out
            .stdout
            .lines()
            .skip_while(|l| *l != "order 1:")
            .skip(1)
            .take_while(|l| l.starts_with("  "))
            .map(|l| l.trim().to_string())
            .collect())
    };
    let lie = ["[e1,e2] = t2 e2 + t3 e3", "[e1,e3] = t4 e1 + t5 e2 - t2 e3", "[e2,e3] = e1 + t1 e3"];
    let leibniz = [
        "[e1,e1] = 0",
        "[e1,e2] = t2 e2 + t3 e3",
        "[e1,e3] = t4 e1 + t5 e2 - t2 e3",
        "[e2,e1] = -t2 e2 - t3 e3",
        "[e2,e2] = t6 e1",
        "[e2,e3] = e1 + t1 e3",
        "[e3,e1] = -t4 e1 - t5 e2 + t2 e3",
        "[e3,e2] = (t7 - 1) e1 - t1 e3",
        "[e3,e3] = t8 e1",
    ];
    let got = order_one("lie")?;
    ensure(got == lie, || format!("lie table {got:?}"))?;
    let got = order_one("leibniz")?;
    ensure(got == leibniz, || format!("leibniz table {got:?}"))
}

fn c5_rays() -> Outcome {
    let expected = [LieLabel::R2PlusC, LieLabel::Sl2, LieLabel::R3Minus1, LieLabel::R2PlusC, LieLabel::R3Minus1];
    for (i, (f, want)) in n3_lie_cocycles().iter().zip(expected).enumerate() {
        let mu = structure_cochain(&n3()).try_add(&f.to_leibniz()).unwrap();
        let got = classify_lie3(&algebra_from_cochain(&mu).unwrap()).map_err(|e| e.to_string())?.label;
        ensure(got == want, || format!("f{}: got {got}, want {want}", i + 1))?;
    }
    Ok(())
}

fn builtins() -> Vec<AlgebraSpec> {
    BUILTIN_NAMES
        .iter()
        .map(|&(name, k)| {
            let params: Vec<Scalar> = (0..k).map(|i| Scalar::from_int(i as i64 + 2)).collect();
            builtin(name, &params).unwrap()
        })
        .collect()
}

fn random_scalar(rng: &mut ChaCha8Rng) -> Scalar {
    Scalar::new(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

fn random_cochain(rng: &mut ChaCha8Rng, degree: usize) -> Cochain {
    let len = 3usize.pow(degree as u32 + 1);
    Cochain::devectorize(Theory::Leibniz, degree, 3, (0..len).map(|_| random_scalar(rng)).collect()).unwrap()
}

fn random_invertible(rng: &mut ChaCha8Rng) -> MatrixQ {
    loop {
        let m = MatrixQ::from_rows((0..3).map(|_| (0..3).map(|_| random_scalar(rng)).collect()).collect()).unwrap();
        if m.rank() == 3 {
            return m;
        }
    }
}

fn c6_properties() -> Outcome {
    for a in builtins() {
        let theories: &[Theory] = if a.is_lie() { &[Theory::Lie, Theory::Leibniz] } else { &[Theory::Leibniz] };
        for &t in theories {
            for q in 0..=2 {
                let dd = differential(&a, t, q + 1).unwrap().mul(&differential(&a, t, q).unwrap()).unwrap();
                ensure(dd.is_zero(), || format!("{} {t}: d∘d != 0 at q={q}", a.label()))?;
            }
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..100 {
        let (p1, q1) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
        let (alpha, beta) = (random_cochain(&mut rng, p1), random_cochain(&mut rng, q1));
        let sign = if ((p1 - 1) * (q1 - 1)) % 2 == 0 { -Scalar::one() } else { Scalar::one() };
        let lhs = graded_bracket(&alpha, &beta).unwrap();
        let rhs = graded_bracket(&beta, &alpha).unwrap().scaled(&sign);
        ensure(lhs == rhs, || format!("graded antisymmetry fails in degrees ({p1},{q1})"))?;
    }

    let z = cohomology(&n3(), Theory::Leibniz, 2).unwrap().cocycle_basis.vectors().to_vec();
    let mut cocycles_seen = 0;
    for round in 0..50 {
        let phi = if round % 2 == 0 {
            random_cochain(&mut rng, 2)
        } else {
            let mut v = zero_vector(27);
            for b in &z {
                axpy(&mut v, &random_scalar(&mut rng), b);
            }
            Cochain::devectorize(Theory::Leibniz, 2, 3, v).unwrap()
        };
        let bracket = PolyBracket::assemble(&n3(), std::slice::from_ref(&phi), &BTreeMap::new());
        let first_order_ok = bracket.leibniz_defect(1).iter().all(|(_, d)| d.iter().all(|p| p.homogeneous(1).is_zero()));
        let cocycle = apply_differential(&n3(), &phi).unwrap().is_zero();
        cocycles_seen += cocycle as usize;
        ensure(first_order_ok == cocycle, || "first-order criterion disagrees with δφ = 0".into())?;
    }
    ensure(cocycles_seen > 0 && cocycles_seen < 50, || "first-order sample did not cover both cases".into())?;

    for a in builtins() {
        let lie = a.is_lie().then(|| classify_lie3(&a).unwrap());
        let fp = a.is_nilpotent().then(|| fingerprint_leibniz3(&a).unwrap());
        for _ in 0..10 {
            let b = a.change_basis(&random_invertible(&mut rng)).unwrap();
            if let Some(l) = &lie {
                ensure(&classify_lie3(&b).unwrap() == l, || format!("{}: Lie class changed", a.label()))?;
            }
            if let Some(f) = &fp {
                ensure(&fingerprint_leibniz3(&b).unwrap() == f, || format!("{}: fingerprint changed", a.label()))?;
            }
        }
    }
    Ok(())
}

fn c7_circle_oracle() -> Outcome {
    let e = |i: usize| {
        let mut v = zero_vector(3);
        v[i] = Scalar::one();
        v
    };
    let mut checks = 0;
    for ia in 0..27 {
        let alpha = Cochain::basis(Theory::Leibniz, 2, 3, ia);
        for ib in 0..27 {
            let beta = Cochain::basis(Theory::Leibniz, 2, 3, ib);
            let prod = circle_product(&alpha, &beta).unwrap();
            for x in 0..27 {
                let (a, b, c) = (e(x / 9), e((x / 3) % 3), e(x % 3));
                let mut want = alpha.eval(&[&beta.eval(&[&a, &b]), &c]);
                axpy(&mut want, &-Scalar::one(), &alpha.eval(&[&beta.eval(&[&a, &c]), &b]));
                axpy(&mut want, &-Scalar::one(), &alpha.eval(&[&a, &beta.eval(&[&b, &c])]));
                ensure(prod.value_at(&[x / 9, (x / 3) % 3, x % 3]) == want, || format!("pair ({ia},{ib}) input {x}"))?;
                checks += 1;
            }
        }
    }
    ensure(checks == 27 * 27 * 27, || format!("{checks} checks"))
}

fn c8_abelian() -> Outcome {
    let a = AlgebraSpec::abelian(3);
    let leib = cohomology(&a, Theory::Leibniz, 2).unwrap().dim_h;
    let lie = cohomology(&a, Theory::Lie, 2).unwrap().dim_h;
    ensure((leib, lie) == (27, 9), || format!("HL2 = {leib}, H2 = {lie}"))
}

fn main() {
    let lie_names: Vec<String> = lie_table_catalogue().iter().map(|a| a.label()).collect();
    let criteria: [Criterion; 8] = [
        ("Lie cohomology table", c1_lie_table),
        ("Leibniz H2 of n3 and representative span", c2_leibniz_n3),
        ("base relation ideals of n3", c3_relation_ideals),
        ("versal bracket tables of n3", c4_versal_tables),
        ("classification of the five Lie rays", c5_rays),
        ("property suite", c6_properties),
        ("circle product oracle", c7_circle_oracle),
        ("abelian sanity", c8_abelian),
    ];
    println!("acceptance: {} criteria (table rows: {})", criteria.len(), lie_names.join(", "));
    let mut unexpected = 0;
    for (idx, (name, check)) in criteria.iter().enumerate() {
        let n = idx + 1;
        let known = KNOWN_FAILING.contains(&n);
        match check() {
            Ok(()) => {
                println!("PASS criterion {n}: {name}");
                if known {
                    println!("  listed as known failing but passed");
                    unexpected += 1;
                }
            }
            Err(why) => {
                println!("FAIL criterion {n}: {name}{}", if known { " (known)" } else { "" });
                println!("  {why}");
                if !known {
                    unexpected += 1;
                }
            }
        }
    }
    if unexpected > 0 {
        println!("acceptance: {unexpected} unexpected result(s)");
        std::process::exit(1);
    }
}
