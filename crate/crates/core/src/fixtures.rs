//! Pinned second-cohomology bases for the Heisenberg algebra `n3`
//! (`[e2,e3] = e1`).
//!
//! With these bases the deformation parameters `t1…t5` (Lie) and `t1…t8`
//! (Leibniz) follow the customary numbering of the five Lie cocycles and the
//! three extra Leibniz cocycles.

use crate::algebra::AlgebraSpec;
use crate::catalogue::n3;
use crate::cochain::{Cochain, Theory};

/// Whether `a` has exactly the structure constants of the built-in `n3`.
pub fn is_n3(a: &AlgebraSpec) -> bool {
    a.same_constants(&n3())
}

/// Lie 2-cocycles `f1…f5` of `n3` (values on increasing pairs):
///
/// | | nonzero values |
/// |---|---|
/// | f1 | `(e2,e3) ↦ e3` |
/// | f2 | `(e1,e2) ↦ e2`, `(e1,e3) ↦ -e3` |
/// | f3 | `(e1,e2) ↦ e3` |
/// | f4 | `(e1,e3) ↦ e1` |
/// | f5 | `(e1,e3) ↦ e2` |
pub fn n3_lie_cocycles() -> Vec<Cochain> {
    let t = Theory::Lie;
    let build = |v: &[(&[usize], usize, i64)]| Cochain::from_int_values(t, 3, 2, v).expect("fixture");
    vec![
        build(&[(&[2, 3], 3, 1)]),
        build(&[(&[1, 2], 2, 1), (&[1, 3], 3, -1)]),
        build(&[(&[1, 2], 3, 1)]),
        build(&[(&[1, 3], 1, 1)]),
        build(&[(&[1, 3], 2, 1)]),
    ]
}

/// Leibniz 2-cocycles of `n3`: the antisymmetric extensions of `f1…f5`
/// followed by `(e2,e2) ↦ e1`, `(e3,e2) ↦ e1` and `(e3,e3) ↦ e1`.
pub fn n3_leibniz_cocycles() -> Vec<Cochain> {
    let mut out: Vec<Cochain> = n3_lie_cocycles().iter().map(Cochain::to_leibniz).collect();
    for (inputs, out_idx) in [([2, 2], 1), ([3, 2], 1), ([3, 3], 1)] {
        out.push(Cochain::from_int_values(Theory::Leibniz, 3, 2, &[(&inputs, out_idx, 1)]).expect("fixture"));
    }
    out
}

/// The pinned basis for `theory`.
pub fn n3_cocycles(theory: Theory) -> Vec<Cochain> {
    match theory {
        Theory::Lie => n3_lie_cocycles(),
        Theory::Leibniz => n3_leibniz_cocycles(),
    }
}
