mod common;

use common::{coboundary_pattern, cycle_from_pattern};
use leibniz_core::catalogue::n3;
use leibniz_core::cohomology::cohomology;
use leibniz_core::differential::leibniz_differential;
use leibniz_core::fixtures::{n3_leibniz_cocycles, n3_lie_cocycles};
use leibniz_core::linalg::{image_basis, kernel_basis};
use leibniz_core::{Cochain, Scalar, SubspaceBasis, Theory};

fn span(cochains: &[Cochain]) -> SubspaceBasis {
    let vs: Vec<_> = cochains.iter().map(Cochain::vectorize).collect();
    SubspaceBasis::span(27, &vs).unwrap()
}

#[test]
fn pattern_cycles_form_a_basis_of_z2() {
    let h = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    let phis: Vec<Cochain> = (1..=11).map(cycle_from_pattern).collect();
    for phi in &phis {
        assert!(h.is_cocycle(phi).unwrap());
    }
    let s = span(&phis);
    assert_eq!(s.dim(), 11);
    assert!(s.same_span(&kernel_basis(&leibniz_differential(&n3(), 2).unwrap())));
}

#[test]
fn coboundaries_follow_the_three_parameter_pattern() {
    let b = image_basis(&leibniz_differential(&n3(), 1).unwrap());
    assert_eq!(b.dim(), 3);
    let pattern = span(&[coboundary_pattern(1, 0, 0), coboundary_pattern(0, 1, 0), coboundary_pattern(0, 0, 1)]);
    assert!(b.same_span(&pattern));

    let h = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    let r = h.class_reduce(&coboundary_pattern(1, 0, 0)).unwrap();
    assert!(r.is_coboundary);
    assert!(r.canonical.is_zero());
}

#[test]
fn selected_classes_span_h2() {
    let h = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    assert_eq!((h.dim_z, h.dim_b, h.dim_h), (11, 3, 8));
    let chosen: Vec<Cochain> = [1, 2, 3, 4, 5, 6, 10, 11].into_iter().map(cycle_from_pattern).collect();
    assert!(h.independent_mod_coboundaries(&chosen).unwrap());
    let ours = span(&h.representatives).join(&h.coboundary_basis).unwrap();
    let theirs = span(&chosen).join(&h.coboundary_basis).unwrap();
    assert_eq!(ours.dim(), 11);
    assert!(ours.same_span(&theirs));
}

#[test]
fn phi7_reduces_to_the_selected_classes() {
    let h = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    let chosen: Vec<Cochain> = [1, 2, 3, 4, 5, 6, 10, 11].into_iter().map(cycle_from_pattern).collect();
    let phi7 = cycle_from_pattern(7);
    let r = h.class_reduce(&phi7).unwrap();
    assert!(!r.is_coboundary);
    // phi7 - phi10 is the x7 coboundary
    assert!(h.is_coboundary(&phi7.try_sub(&cycle_from_pattern(10)).unwrap()).unwrap());
    let target = phi7.vectorize();
    let mut rows: Vec<_> = chosen.iter().map(Cochain::vectorize).collect();
    rows.extend(h.coboundary_basis.vectors().iter().cloned());
    assert!(SubspaceBasis::span(27, &rows).unwrap().contains(&target).unwrap());
    for phi in &chosen {
        let red = h.class_reduce(phi).unwrap();
        assert!(!red.is_coboundary);
    }
}

#[test]
fn pinned_leibniz_basis_matches_pattern_slots() {
    let pinned = n3_leibniz_cocycles();
    for (p, slot) in pinned.iter().zip([1, 2, 3, 4, 5, 6, 10, 11]) {
        assert_eq!(p, &cycle_from_pattern(slot));
    }
}

#[test]
fn lie_cocycles_extend_to_leibniz_cocycles() {
    let lie = cohomology(&n3(), Theory::Lie, 2).unwrap();
    let leib = cohomology(&n3(), Theory::Leibniz, 2).unwrap();
    assert!(leib.dim_h >= lie.dim_h);
    for (f, phi) in n3_lie_cocycles().iter().zip(n3_leibniz_cocycles()) {
        assert!(lie.is_cocycle(f).unwrap());
        assert!(leib.is_cocycle(&f.to_leibniz()).unwrap());
        assert_eq!(f.to_leibniz(), phi);
    }
}

#[test]
fn phi6_vectorizes_to_a_single_slot() {
    let phi6 = cycle_from_pattern(6);
    let v = phi6.vectorize();
    let nonzero: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    // tuple (e2,e2) is row 4, output e1 is component 0
    assert_eq!(nonzero, vec![4 * 3]);
    assert_eq!(v[12], Scalar::one());
}
