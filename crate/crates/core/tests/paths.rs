use skewchar::partition::{part, SkewShape};
use skewchar::paths::*;
use skewchar::tableaux::{character_by_tableaux, enumerate_tableaux, tableau_weight, Tableau};
use skewchar::verify::{cases, partitions_up_to, unit_paths};
use skewchar::{CharacterFamily, Error, LaurentPoly, PolyMatrix};
use CharacterFamily::*;

fn pt(x: i64, y: i64) -> LatticePoint {
    LatticePoint::new(x, y)
}

/// Path through the given vertices, steps read off the differences.
fn through(vs: &[(i64, i64)]) -> Path {
    let steps = vs
        .windows(2)
        .map(|w| match (w[1].0 - w[0].0, w[1].1 - w[0].1) {
            (1, 0) => Step::Right,
            (0, 1) => Step::Up,
            (0, -1) => Step::Down,
            (1, 1) => Step::Diag,
            (2, 0) => Step::OHoriz,
            d => panic!("no step {d:?}"),
        })
        .collect();
    Path::new(pt(vs[0].0, vs[0].1), steps)
}

fn family(model: PathModel, paths: Vec<Path>, sigma: Vec<usize>) -> PathFamily {
    let mut ends = vec![pt(0, 0); paths.len()];
    for (i, p) in paths.iter().enumerate() {
        ends[sigma[i]] = p.end();
    }
    PathFamily { model, paths, ends, sigma }
}

fn poly(s: &str, n: usize) -> LaurentPoly {
    LaurentPoly::parse(s, n).unwrap()
}

#[test]
fn schur_example_family() {
    let t = Tableau::parse(". . . 1 / . 1 2 2 / 3 3 4 5 / 5 6 / 6").unwrap();
    let pf = tableau_to_paths(Gl, &t, 6, 0, 4).unwrap();
    assert_eq!(pf.paths[0].start, pt(2, 2));
    assert_eq!(pf.paths[0].end(), pt(5, 5));
    assert_eq!(pf.weight_exps().unwrap(), vec![2, 2, 2, 1, 2, 2]);
    assert!(is_strongly_non_intersecting(&pf));
    assert_eq!(paths_to_tableau(&pf).unwrap(), t);
}

#[test]
fn symplectic_example_family_stays_above_the_boundary() {
    let t = Tableau::parse(". 1b 2 / 1b 2b / 1 2 / 2b / 3").unwrap();
    let pf = tableau_to_paths(Sp, &t, 3, 2, 3).unwrap();
    for p in &pf.paths {
        assert!(p.points().iter().all(|v| v.y >= v.x - 1));
    }
    assert_eq!(pf.signed_weight().unwrap(), poly("x1^-1*x3", 3));
}

#[test]
fn odd_orthogonal_hats_become_diagonal_steps() {
    let t = Tableau::parse(". . 1b / 1h 1b 1 / 2 2 3b / 3 3 / 4h 4").unwrap();
    let pf = tableau_to_paths(SoOdd, &t, 4, 1, 3).unwrap();
    assert_eq!(pf.paths[0].start, pt(1, 1));
    assert_eq!(pf.paths[0].steps[0], Step::Diag);
    assert_eq!(pf.paths[0].special_steps(), 2);
    assert_eq!(pf.signed_weight().unwrap(), tableau_weight(SoOdd, &t, 4));
    assert_eq!(pf.signed_weight().unwrap(), poly("x1^-1*x2^2*x3*x4", 4));
    assert_eq!(paths_to_tableau(&pf).unwrap(), t);
}

#[test]
fn even_orthogonal_circle_and_hat_become_an_arc() {
    let t = Tableau::parse(". . 1b 1 / 1b 1b 1 2b / 3c 3b 3 4 / 3h 4b / 4b 4").unwrap();
    let pf = tableau_to_paths(OEven, &t, 4, 1, 4).unwrap();
    let want = through(&[(1, 1), (2, 1), (2, 2), (2, 3), (2, 4), (4, 4), (5, 4), (5, 5)]);
    assert_eq!(pf.paths[0], want);
    assert!(find_trapped_positions(&pf).is_empty());
    assert_eq!(paths_to_tableau(&pf).unwrap(), t);
}

#[test]
fn empty_tableau_gives_empty_family() {
    let t = Tableau::new(SkewShape::straight(part(&[])), vec![]).unwrap();
    let pf = tableau_to_paths(Sp, &t, 2, 0, 0).unwrap();
    assert!(pf.paths.is_empty());
    assert!(paths_to_tableau(&pf).unwrap().entries().is_empty());
}

#[test]
fn shared_vertex_is_rejected() {
    let model = PathModel::columnwise(Sp, 1, 1);
    let a = through(&[(1, 1), (1, 2), (2, 2), (2, 3)]);
    let b = through(&[(0, 2), (1, 2), (1, 3), (1, 4)]);
    let pf = family(model, vec![a, b], vec![0, 1]);
    assert!(matches!(paths_to_tableau(&pf), Err(Error::InvalidFamily(_))));
}

#[test]
fn roundtrip_on_every_small_tableau() {
    for c in cases(&CharacterFamily::ALL, &partitions_up_to(5), 1..=3, 0..=2) {
        let big_n = c.shape.outer.first_part();
        for t in enumerate_tableaux(c.family, &c.shape, c.n, c.m).unwrap() {
            let pf = tableau_to_paths(c.family, &t, c.n, c.m, big_n).unwrap();
            assert_eq!(pf.signed_weight().unwrap(), tableau_weight(c.family, &t, c.n), "{c}\n{t}");
            assert!(is_strongly_non_intersecting(&pf), "{c}\n{t}");
            assert!(find_sites(&pf).is_empty(), "{c}\n{t}");
            assert_eq!(paths_to_tableau(&pf).unwrap(), t, "{c}");
        }
    }
}

#[test]
fn path_gf_examples() {
    let model = PathModel::columnwise(Sp, 1, 1);
    assert_eq!(path_gf(&model, pt(0, 2), pt(1, 3)), poly("x1 + x1^-1", 1));
    assert!(path_gf(&model, pt(0, 2), pt(0, 2)).is_one());
    assert!(path_gf(&model, pt(2, 2), pt(0, 5)).is_zero());
    let so = PathModel::columnwise(SoOdd, 2, 0);
    assert!(path_gf_by_diag_count(&so, pt(0, 0), pt(2, 2), 5).is_zero());
}

#[test]
fn diagonal_counts_telescope() {
    for n in 1..=3usize {
        for fam in [SoOdd, OEven] {
            for (a, b) in [(0, 0), (0, 2), (-1, 1), (1, 3)] {
                let model = PathModel::columnwise(fam, n, (a + b) / 2);
                for c in -3..=6 {
                    let to = pt(c, 2 * n as i64 + a + b - c);
                    let parts = path_gf_by_special_count(&model, pt(a, b), to);
                    let sum = (0..parts.len().max(1))
                        .map(|k| path_gf_by_diag_count(&model, pt(a, b), to, k))
                        .fold(LaurentPoly::zero(n), |s, g| s + g);
                    assert_eq!(sum, path_gf(&model, pt(a, b), to));
                }
            }
        }
    }
}

#[test]
fn enumeration_agrees_with_dp() {
    let model = PathModel::columnwise(OEven, 2, 1);
    let (from, to) = (pt(0, 2), pt(3, 5));
    let total = enumerate_paths(&model, from, to)
        .iter()
        .fold(LaurentPoly::zero(2), |s, p| s + p.weight(&model).unwrap());
    assert_eq!(total, path_gf(&model, from, to));
}

#[test]
fn reflection_of_a_path_touching_the_diagonal() {
    let p = through(&[(1, 3), (1, 4), (2, 4), (2, 5), (2, 6), (3, 6), (3, 7), (4, 7), (5, 7), (6, 7), (6, 8), (7, 8), (8, 8)]);
    let img = reflect_initial_segment(&p, 0).unwrap();
    let want = through(&[(3, 1), (3, 2), (4, 2), (5, 2), (6, 2), (7, 2), (7, 3), (7, 4), (7, 5), (8, 5), (8, 6), (8, 7), (8, 8)]);
    assert_eq!(img, want);
    assert_eq!(modified_weight(&img, 8).unwrap(), modified_weight(&p, 8).unwrap());
    assert_eq!(reflect_initial_segment(&img, 0).unwrap(), p);
}

#[test]
fn reflection_preconditions() {
    let vertical = through(&[(0, 2), (0, 3), (0, 4), (0, 5)]);
    assert!(matches!(reflect_initial_segment(&vertical, -2), Err(Error::Precondition(_))));
    let p = through(&[(0, 2), (1, 2), (2, 2), (3, 2), (4, 2)]);
    assert!(reflect_initial_segment(&p, -1).is_err());
    assert!(reflect_initial_segment(&p, -2).is_ok());
}

#[test]
fn reflection_bijection_to_a_fixed_endpoint() {
    let to = pt(6, 5);
    let touching = |from| unit_paths(from, to).into_iter().filter(|q: &Path| q.points().iter().any(|v| v.y == v.x - 2));
    let mut images: Vec<Path> = touching(pt(0, 2)).map(|q| reflect_initial_segment(&q, -2).unwrap()).collect();
    let mut direct: Vec<Path> = touching(pt(4, -2)).collect();
    images.sort_by_key(|q| format!("{:?}", q.steps));
    direct.sort_by_key(|q| format!("{:?}", q.steps));
    assert!(!direct.is_empty());
    assert_eq!(images, direct);
}

fn gf_matrix(model: &PathModel, starts: &[LatticePoint], ends: &[LatticePoint]) -> LaurentPoly {
    let rows = starts.iter().map(|&s| ends.iter().map(|&e| path_gf(model, s, e)).collect()).collect();
    PolyMatrix::from_rows(model.n, rows).unwrap().determinant()
}

#[test]
fn lgv_sum_is_the_determinant() {
    for c in cases(&CharacterFamily::ALL, &partitions_up_to(6), 1..=2, 0..=2) {
        let big_n = c.shape.outer.first_part();
        if !(2..=3).contains(&big_n) {
            continue;
        }
        let ep = columnwise_endpoints(c.family, &c.shape, c.n, c.m, big_n).unwrap();
        assert_eq!(
            lgv_signed_sum(&ep.model, &ep.starts, &ep.ends),
            gf_matrix(&ep.model, &ep.starts, &ep.ends),
            "{c}"
        );
    }
}

#[test]
fn lgv_small_configurations() {
    let model = PathModel::columnwise(Sp, 2, 0);
    let (s, e) = (pt(0, 0), pt(2, 2));
    assert_eq!(lgv_signed_sum(&model, &[s], &[e]), path_gf(&model, s, e));
    // far apart, so the only families are products
    let (s2, e2) = (pt(-6, 6), pt(-5, 9));
    assert_eq!(
        lgv_signed_sum(&model, &[s, s2], &[e, e2]),
        path_gf(&model, s, e) * path_gf(&model, s2, e2)
    );
}

#[test]
fn lgv_on_the_schur_example_setup() {
    let shape = SkewShape::new(part(&[4, 4, 4, 2, 1]), part(&[3, 1])).unwrap();
    let ep = columnwise_endpoints(Gl, &shape, 6, 2, 4).unwrap();
    assert_eq!(ep.starts[0], pt(2, 2));
    assert_eq!(ep.ends[0], pt(5, 5));
    assert_eq!(lgv_signed_sum(&ep.model, &ep.starts, &ep.ends), character_by_tableaux(Gl, &shape, 6, 0).unwrap());
}

fn oeven(n: usize, m: i64) -> PathModel {
    PathModel::columnwise(OEven, n, m)
}

#[test]
fn local_change_between_crossing_and_trap() {
    let model = oeven(3, 0);
    let crossing = family(
        model,
        vec![
            through(&[(1, 3), (3, 3)]),
            through(&[(2, 2), (2, 3), (2, 4)]),
            through(&[(0, 4), (1, 4), (1, 5)]),
            through(&[(-1, 5), (0, 5), (0, 6)]),
        ],
        vec![0, 1, 2, 3],
    );
    let trapped = PathFamily {
        model,
        paths: vec![
            through(&[(1, 3), (2, 3), (2, 4)]),
            through(&[(2, 2), (3, 2), (3, 3)]),
            through(&[(0, 4), (1, 4), (1, 5)]),
            through(&[(-1, 5), (-1, 6), (0, 6)]),
        ],
        ends: crossing.ends.clone(),
        sigma: vec![1, 0, 2, 3],
    };
    assert_eq!(find_sites(&crossing), vec![Site::Crossing { d: 2, over: 0, under: 1 }]);
    assert_eq!(find_trapped_positions(&trapped), vec![pt(0, 5)]);
    assert_eq!(involution_step(&crossing).unwrap(), trapped);
    assert_eq!(involution_step(&trapped).unwrap(), crossing);
    assert_eq!(crossing.signed_weight().unwrap(), -trapped.signed_weight().unwrap());
}

#[test]
fn weakly_intersecting_family_with_two_crossings() {
    let model = oeven(8, 2);
    let paths = vec![
        through(&[(2, 2), (3, 2), (3, 3), (3, 4), (4, 4), (4, 5), (4, 6), (5, 6), (5, 7), (7, 7), (8, 7), (8, 8), (8, 9), (8, 10), (8, 11), (8, 12)]),
        through(&[(0, 4), (1, 4), (2, 4), (2, 5), (3, 5), (5, 5), (6, 5), (6, 6), (6, 7), (6, 8), (7, 8), (7, 9), (7, 10), (7, 11), (7, 12)]),
        through(&[(-1, 5), (-1, 6), (0, 6), (1, 6), (2, 6), (3, 6), (3, 7), (3, 8), (4, 8), (5, 8), (5, 9), (5, 10), (5, 11), (5, 12)]),
        through(&[(-3, 7), (-2, 7), (-1, 7), (0, 7), (1, 7), (2, 7), (2, 8), (2, 9), (3, 9), (3, 10), (4, 10), (4, 11), (4, 12)]),
    ];
    let pf = family(model, paths, vec![0, 1, 2, 3]);
    assert!(pf.paths.iter().all(|p| p.is_legal(&model)));
    assert!(!is_strongly_non_intersecting(&pf));
    let sites = find_sites(&pf);
    assert_eq!(sites[0], Site::Crossing { d: 4, over: 1, under: 0 });
    assert!(sites.contains(&Site::Crossing { d: 6, over: 0, under: 1 }));
    let image = involution_step(&pf).unwrap();
    assert_eq!(image.sign(), -pf.sign());
    assert_eq!(image.weight_exps(), pf.weight_exps());
    assert_eq!(involution_step(&image).unwrap(), pf);
}

#[test]
fn clean_family_has_no_site() {
    let t = Tableau::parse("1 2 / 2").unwrap();
    let pf = tableau_to_paths(OEven, &t, 2, 0, 2).unwrap();
    assert_eq!(involution_step(&pf), Err(Error::NoSite));
}

#[test]
fn hookwise_reading_of_an_even_orthogonal_tableau() {
    let t = Tableau::parse(
        ". . . . 1b / . . 1 1 2 / 2c 2b 2 3b 4b / 2h 3b 3b 3 / 3b 3 4b 4 / 5b 5 / 5",
    )
    .unwrap();
    assert_eq!(t.shape.outer, part(&[5, 5, 5, 4, 4, 2, 1]));
    assert_eq!(t.shape.inner, part(&[4, 2]));
    let pf = tableau_to_paths_hookwise(OEven, &t, 5, 2).unwrap();
    let want = [
        through(&[(-4, 13), (-4, 12), (-4, 11), (-4, 10), (-4, 9), (-4, 8), (-4, 7), (-4, 6), (-4, 5), (-4, 4), (-3, 4)]),
        through(&[(-3, 13), (-3, 12), (-3, 11), (-3, 10), (-3, 9), (-3, 8), (-3, 7), (-2, 7), (-2, 6), (-2, 5), (-1, 5), (0, 5), (0, 4)]),
        through(&[(-2, 13), (-2, 12), (-2, 11), (-2, 10), (-1, 10), (-1, 9), (-1, 8), (0, 8), (0, 7), (1, 7), (2, 7), (2, 8), (3, 8), (3, 9), (3, 10), (3, 11)]),
        through(&[(0, 13), (0, 12), (0, 11), (0, 10), (0, 9), (1, 9), (1, 10), (2, 10), (2, 11), (2, 12)]),
        through(&[(2, 2), (2, 3), (2, 4), (4, 4), (5, 4), (5, 5), (5, 6), (5, 7), (6, 7), (7, 7)]),
        through(&[(1, 3), (1, 4), (1, 5), (2, 5), (2, 6), (3, 6), (4, 6), (4, 7), (4, 8), (4, 9), (5, 9)]),
    ];
    assert_eq!(pf.paths, want);
    assert!(is_strongly_non_intersecting(&pf));
    assert!(find_sites(&pf).is_empty());
    assert_eq!(pf.weight_exps().map(|w| LaurentPoly::monomial(5, w, 1)).unwrap(), tableau_weight(OEven, &t, 5));
}

#[test]
fn hookwise_bijection_lands_in_the_lgv_expansion() {
    for c in cases(&CharacterFamily::CLASSICAL, &partitions_up_to(5), 1..=2, 0..=2) {
        let ep = hookwise_endpoints(c.family, &c.shape, c.n, c.m).unwrap();
        let fams = lgv_families(&ep.model, &ep.starts, &ep.ends);
        for t in enumerate_tableaux(c.family, &c.shape, c.n, c.m).unwrap() {
            let pf = tableau_to_paths_hookwise(c.family, &t, c.n, c.m).unwrap();
            assert!(fams.contains(&pf), "{c}\n{t}");
            assert!(is_strongly_non_intersecting(&pf) && find_sites(&pf).is_empty(), "{c}\n{t}");
            assert_eq!(pf.sign() * ep.sign, 1);
            assert_eq!(pf.weight_exps().map(|w| LaurentPoly::monomial(c.n, w, 1)).unwrap(), tableau_weight(c.family, &t, c.n));
        }
    }
}

/// The hookwise determinant reproduces the character except for even
/// orthogonal shapes with `m = 0`, where a single hook path already admits
/// fillings the tableau rule forbids and nothing cancels them.
#[test]
fn hookwise_lgv_sums() {
    let mut gaps = Vec::new();
    for c in cases(&CharacterFamily::CLASSICAL, &partitions_up_to(5), 1..=2, 0..=2) {
        let ep = hookwise_endpoints(c.family, &c.shape, c.n, c.m).unwrap();
        let s = lgv_signed_sum(&ep.model, &ep.starts, &ep.ends);
        let s = if ep.sign < 0 { -s } else { s };
        if s != character_by_tableaux(c.family, &c.shape, c.n, c.m).unwrap() {
            gaps.push(c);
        }
    }
    assert!(!gaps.is_empty());
    assert!(gaps.iter().all(|c| c.family == OEven && c.m == 0), "{:?}", gaps.iter().map(|c| c.to_string()).collect::<Vec<_>>());
    let first = SkewShape::straight(part(&[2]));
    assert!(gaps.iter().any(|c| c.shape == first && c.n == 1));
}

#[test]
fn hookwise_involution_pairs_dirty_families() {
    let mut dirty = 0;
    for c in cases(&[OEven], &partitions_up_to(5), 1..=2, 0..=2) {
        let ep = hookwise_endpoints(c.family, &c.shape, c.n, c.m).unwrap();
        let fams = lgv_families(&ep.model, &ep.starts, &ep.ends);
        for pf in &fams {
            if find_sites(pf).is_empty() {
                continue;
            }
            dirty += 1;
            let g = involution_step(pf).unwrap_or_else(|e| panic!("{c}: {e}\n{}", render_ascii(pf)));
            assert!(fams.contains(&g), "{c}");
            assert_eq!(g.signed_weight().unwrap(), -pf.signed_weight().unwrap());
            assert_eq!(&involution_step(&g).unwrap(), pf);
        }
    }
    assert!(dirty > 0);
}

#[test]
fn renderers_mark_every_path() {
    let t = Tableau::parse(". . 1b 1 / 1b 1b 1 2b / 3c 3b 3 4 / 3h 4b / 4b 4").unwrap();
    let pf = tableau_to_paths(OEven, &t, 4, 1, 4).unwrap();
    let ascii = render_ascii(&pf);
    for mark in ['0', '1', '2', '3', '='] {
        assert!(ascii.contains(mark), "{ascii}");
    }
    let svg = render_svg(&pf);
    assert!(svg.starts_with("<svg") && svg.trim_end().ends_with("</svg>"));
    assert_eq!(svg.matches("<path").count(), 4);
    assert!(svg.contains(" A "));
}
