//! Sanity locks on the defect-2 closed forms: integrality, nonnegativity,
//! smallest polygons, x<->y symmetry, and the containment chain
//! staircase subset unimodal subset convex on a marker coefficient.

use mconvex::families::closed;
use mconvex::vars::{X, Y};
use mconvex::{rat, Series};

fn assert_nonneg_integers(f: &Series, what: &str) {
    for (e, c) in f.terms() {
        assert!(c.is_integer(), "{what}: non-integer at {e:?}: {c}");
        assert!(c >= &rat(0), "{what}: negative at {e:?}: {c}");
    }
}

fn assert_xy_symmetric(f: &Series, what: &str) {
    for (e, c) in f.terms() {
        assert_eq!(
            &f.coeff(&[e[Y], e[X]]),
            c,
            "{what}: asymmetric at {e:?}"
        );
    }
}

#[test]
fn defect_two_closed_forms_small_polygons() {
    let n = 10;
    let stair = closed::two_staircase(n);
    let uni = closed::two_unimodal(n);
    let conv = closed::two_convex(n);

    for (f, name) in [(&stair, "two_staircase"), (&uni, "two_unimodal"), (&conv, "two_convex")] {
        assert_nonneg_integers(f, name);
        assert_xy_symmetric(f, name);
        // nothing below half-perimeter 6; the smallest polygons are the six
        // placements of two unit indents on a 3x3 block
        assert!(f.terms().all(|(e, _)| e[X] + e[Y] >= 6), "{name}: too-small term");
        assert_eq!(f.coeff(&[3, 3]), rat(6), "{name}: 3x3 count");
        // 2x5 box: two indents in a 2-wide column
        assert_eq!(f.coeff(&[2, 5]), rat(4), "{name}: 2x5 count");
    }

    // the classes are nested, and differ already at the 3x4 box
    assert_eq!(stair.coeff(&[3, 4]), rat(61));
    assert_eq!(uni.coeff(&[3, 4]), rat(82));
    assert_eq!(conv.coeff(&[3, 4]), rat(104));
    for (e, c) in stair.terms() {
        assert!(&uni.coeff(&[e[X], e[Y]]) >= c, "staircase not within unimodal at {e:?}");
    }
    for (e, c) in uni.terms() {
        assert!(&conv.coeff(&[e[X], e[Y]]) >= c, "unimodal not within convex at {e:?}");
    }
}

#[test]
fn bimodal_defect_two_requires_the_coefficient_repair() {
    let n = 10;
    let raw = closed::bimodal_closed_2(n, false);
    assert!(
        raw.terms().any(|(_, c)| c < &rat(0)),
        "verbatim numerator unexpectedly yields a counting series"
    );

    let fixed = closed::bimodal_closed_2(n, true);
    assert_nonneg_integers(&fixed, "bimodal_closed_2(corrected)");
    // smallest member: 2-wide, height 3, both indents on the same side
    assert!(fixed.terms().all(|(e, _)| e[X] + e[Y] >= 5));
    assert_eq!(fixed.coeff(&[2, 3]), rat(80));
    // indents are vertical on facing sides only, so no x<->y symmetry
    assert!(fixed.terms().any(|(e, c)| &fixed.coeff(&[e[Y], e[X]]) != c));
}
