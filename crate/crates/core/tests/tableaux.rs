use skewchar::partition::{part, SkewShape};
use skewchar::tableaux::*;
use skewchar::verify::{cases, partitions_up_to};
use skewchar::{CharacterFamily, Error, LaurentPoly};
use num_bigint::BigInt;
use CharacterFamily::*;

fn dim(family: CharacterFamily, lam: &[usize], n: usize) -> BigInt {
    character_by_tableaux(family, &SkewShape::straight(part(lam)), n, 0).unwrap().coefficient_sum()
}

#[test]
fn dimensions_of_small_representations() {
    // GL3 sym², Sp4 vector, Sp4 sym², Sp4 reduced Λ², SO5, O4
    let table: [(CharacterFamily, &[usize], usize, i64); 12] = [
        (Gl, &[2], 3, 6),
        (Gl, &[2, 1], 3, 8),
        (Sp, &[1], 2, 4),
        (Sp, &[2], 2, 10),
        (Sp, &[1, 1], 2, 5),
        (SoOdd, &[1], 1, 3),
        (SoOdd, &[1], 2, 5),
        (SoOdd, &[2], 2, 14),
        (SoOdd, &[1, 1], 2, 10),
        (OEven, &[1], 2, 4),
        (OEven, &[2], 2, 9),
        (OEven, &[1, 1], 2, 6),
    ];
    for (f, lam, n, d) in table {
        assert_eq!(dim(f, lam, n), BigInt::from(d), "{f:?} {lam:?} n={n}");
    }
}

#[test]
fn example_tableaux_are_valid() {
    let ok = [
        (Gl, ". . . 1 / . 1 2 2 / 3 3 4 5 / 5 6 / 6", 6, 0),
        (Sp, ". 1b 2 / 1b 2b / 1 2 / 2b / 3", 3, 2),
        (SoOdd, ". . 1b / 1h 1b 1 / 2 2 3b / 3 3 / 4h 4", 4, 1),
        (OEven, ". . 1b 1 / 1b 1b 1 2b / 3c 3b 3 4 / 3h 4b / 4b 4", 4, 1),
    ];
    for (f, s, n, m) in ok {
        let t = Tableau::parse(s).unwrap();
        assert!(is_valid_tableau(f, &t, n, m), "{s}");
        assert!(enumerate_tableaux(f, &t.shape, n, m).unwrap().any(|u| u == t), "{s}");
    }
}

#[test]
fn rule_violations_are_rejected() {
    let bad = [
        // rows must weakly increase
        (Sp, "2 1", 2, 0),
        // columns must strictly increase
        (Sp, "1 / 1", 2, 0),
        // row m+i starts at least at i-bar
        (Sp, "1b / 1b", 2, 0),
        // hats only in the first column, on their own row
        (SoOdd, "1 1h", 2, 0),
        (SoOdd, "1c", 2, 0),
        // a circle needs its hat below
        (OEven, "1c / 2", 2, 0),
        // too many rows
        (Gl, "1 / 2 / 3", 2, 0),
    ];
    for (f, s, n, m) in bad {
        let t = Tableau::parse(s).unwrap();
        assert!(!is_valid_tableau(f, &t, n, m), "{f:?} {s}");
    }
}

#[test]
fn parse_errors() {
    assert!(Tableau::parse("1 x").is_err());
    assert!(Tableau::parse("1 2 / 1 2 3").is_err());
    assert!(Tableau::parse(". 1 / 1 .").is_err());
}

#[test]
fn shape_preconditions() {
    let shape = SkewShape::new(part(&[2, 1]), part(&[1])).unwrap();
    assert!(matches!(check_shape(Sp, &shape, 2, 0), Err(Error::Precondition(_))));
    assert!(check_shape(Sp, &shape, 1, 1).is_ok());
    assert!(matches!(enumerate_tableaux(OEven, &shape, 1, 0), Err(Error::Precondition(_))));
    assert!(SkewShape::new(part(&[1]), part(&[2])).is_err());
}

#[test]
fn streaming_matches_collected() {
    for c in cases(&CharacterFamily::ALL, &partitions_up_to(5), 1..=2, 0..=2) {
        assert_eq!(
            character_by_streaming(c.family, &c.shape, c.n, c.m).unwrap(),
            character_by_tableaux(c.family, &c.shape, c.n, c.m).unwrap(),
            "{c}"
        );
    }
}

#[test]
fn classical_characters_are_bar_invariant() {
    for c in cases(&CharacterFamily::CLASSICAL, &partitions_up_to(6), 1..=2, 0..=2) {
        let ch = character_by_tableaux(c.family, &c.shape, c.n, c.m).unwrap();
        assert_eq!(ch.bar(), ch, "{c}");
    }
}

#[test]
fn every_enumerated_tableau_is_valid_and_distinct() {
    for c in cases(&CharacterFamily::ALL, &partitions_up_to(4), 1..=2, 0..=2) {
        let all: Vec<Tableau> = enumerate_tableaux(c.family, &c.shape, c.n, c.m).unwrap().collect();
        let total = all.iter().fold(LaurentPoly::zero(c.n), |s, t| s + tableau_weight(c.family, t, c.n));
        assert_eq!(total, character_by_tableaux(c.family, &c.shape, c.n, c.m).unwrap());
        for (k, t) in all.iter().enumerate() {
            assert!(is_valid_tableau(c.family, t, c.n, c.m), "{c}\n{t}");
            assert!(!all[..k].contains(t), "{c}\n{t}");
        }
    }
}

#[test]
fn empty_shape_has_character_one() {
    for f in CharacterFamily::ALL {
        let shape = SkewShape::new(part(&[2, 1]), part(&[2, 1])).unwrap();
        assert!(character_by_tableaux(f, &shape, 2, 2).unwrap().is_one());
    }
}
