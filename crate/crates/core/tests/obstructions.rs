use spinweave::charclass::{self, grassmann_g52_data, projective_space_data};
use spinweave::{Catalog, Error};

/// Coefficients of `(1 + a)^n` mod 2 by repeated multiplication.
fn binomial_row_mod2(n: usize) -> Vec<bool> {
    let mut row = vec![true];
    for _ in 0..n {
        let mut next = vec![false; row.len() + 1];
        for (i, c) in row.iter().enumerate() {
            next[i] ^= c;
            next[i + 1] ^= c;
        }
        row = next;
    }
    row
}

#[test]
fn projective_spaces_match_binomial_expansion() {
    for m in 1..=16 {
        let row = binomial_row_mod2(m + 1);
        let r = projective_space_data(m).obstructions();
        assert_eq!(r.orientable, !row[1], "RP{m}");
        let w2 = m >= 2 && row[2];
        assert_eq!(r.spin, !row[1] && !w2, "RP{m}");
        assert_eq!(r.pin_plus, !w2, "RP{m}");
        assert!(r.implications_hold());
    }
}

#[test]
fn real_projective_spin_pattern() {
    let spin: Vec<usize> = (1..=16).filter(|m| projective_space_data(*m).obstructions().spin).collect();
    assert_eq!(spin, vec![1, 3, 7, 11, 15]);
    for m in [5, 9, 13] {
        assert!(!projective_space_data(m).obstructions().spin);
    }
}

#[test]
fn grassmannian_row() {
    let r = grassmann_g52_data().obstructions();
    assert!(!r.orientable && !r.spin && !r.pin_plus && !r.pin_minus && !r.spin_c && !r.pin_c);
    let cat = Catalog::builtin();
    for name in ["G52xS1", "G52xR"] {
        let r = cat.find(name).unwrap().obstructions();
        assert!(r.lpin && !r.pin_c, "{name}");
        assert_eq!(r.lpin_witness.as_deref(), Some("gamma"));
    }
}

#[test]
fn three_sphere_admits_everything() {
    let r = Catalog::builtin().find("S3").unwrap().obstructions();
    assert!(r.orientable && r.spin && r.pin_plus && r.pin_minus && r.spin_c && r.pin_c && r.lpin);
}

#[test]
fn shipped_catalog_matches_builtin() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../data/catalog.json")).unwrap();
    let cat = Catalog::from_json(&text).unwrap();
    assert_eq!(cat, Catalog::builtin());
    for md in &cat.manifolds {
        assert!(md.obstructions().implications_hold(), "{}", md.name);
    }
}

#[test]
fn malformed_records_are_named() {
    let mut cat = Catalog::builtin();
    let md = cat.manifolds.iter_mut().find(|m| m.name == "RP2").unwrap();
    md.liftable2.clear();
    let err = Catalog::from_json(&cat.to_json()).unwrap_err();
    assert!(matches!(err, Error::Catalog { ref record, .. } if record == "RP2"), "{err:?}");
    assert!(Catalog::from_json("{").is_err());
}

#[test]
fn products_with_the_circle_keep_obstructions() {
    for m in [2, 3, 4, 5] {
        let base = projective_space_data(m);
        let prod = charclass::product_with_parallelizable(&base, charclass::Parallelizable::Circle);
        prod.validate().unwrap();
        let (a, b) = (base.obstructions(), prod.obstructions());
        assert_eq!((a.spin, a.pin_plus, a.pin_minus, a.pin_c), (b.spin, b.pin_plus, b.pin_minus, b.pin_c));
    }
}
