//! End-to-end acceptance checks. Every comparison is exact; each criterion
//! prints one PASS or FAIL line and must finish within a minute.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use chirahedra::analysis::{
    classify, covering_quotient, face_translation_classes, star_planarity, verify_named_regular, vertex_star_catalog,
    Verdict,
};
use chirahedra::export::{patch_from_json, patch_to_json};
use chirahedra::geometry::{Isometry, Lattice, Rat, SignedPerm, Vec3};
use chirahedra::group::{build_group, finite_fixed_point, verify_translation_lattice, FamilyId, DEFAULT_WORD_BOUND};
use chirahedra::mixing::{apply_eta, apply_phi2, verify_eta};
use chirahedra::wythoff::{base_face, construct_patch, OrbitData};

const LIMIT: Duration = Duration::from_secs(60);

type Check = Result<String, String>;

fn r(n: i64) -> Rat {
    Rat::int(n)
}

fn grid(lo: i64, hi: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for p in lo..=hi {
        for q in lo..=hi {
            if (p, q) != (0, 0) {
                out.push((p, q));
            }
        }
    }
    out
}

fn params(p: i64, q: i64) -> (Rat, Rat) {
    (r(p), r(q))
}

fn iso(images: [i8; 3], t: (i64, i64, i64)) -> Isometry {
    Isometry::new(SignedPerm::from_images(images), Vec3::ints(t.0, t.1, t.2))
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn set(v: &[(i64, i64, i64)]) -> Vec<Vec3> {
    let s: BTreeSet<Vec3> = v.iter().map(|&(x, y, z)| Vec3::ints(x, y, z)).collect();
    s.into_iter().collect()
}

fn criterion_1() -> Check {
    let mut checked = 0;
    for (family, order) in [(FamilyId::P1, 12), (FamilyId::P2, 24), (FamilyId::P3, 24)] {
        for (p, q) in grid(-3, 3) {
            let expected = match family {
                FamilyId::P1 => Lattice::bcc(r(q - p)),
                FamilyId::P2 => Lattice::z3(r(4 * p)),
                _ => Lattice::bcc(r(q)),
            };
            let rep = verify_translation_lattice(family, params(p, q), DEFAULT_WORD_BOUND)
                .map_err(|e| format!("{family}({p},{q}): {e}"))?;
            ensure(
                rep.verified && rep.discovered.as_ref() == Some(&expected) && rep.quotient_order == Some(order),
                || {
                    format!(
                        "{family}({p},{q}): found {:?}, {:?} cosets",
                        rep.discovered, rep.quotient_order
                    )
                },
            )?;
            checked += 1;
        }
    }
    Ok(format!("{checked} points, 0 refuted"))
}

fn vertex_class_count(family: FamilyId, p: i64, q: i64) -> Result<usize, String> {
    use chirahedra::geometry::CosetCanon;
    let g = build_group(family, params(p, q)).map_err(|e| e.to_string())?;
    let orbit = OrbitData::new(&g, DEFAULT_WORD_BOUND).map_err(|e| e.to_string())?;
    let o = g.base_vertex();
    let classes: BTreeSet<Vec3> = orbit
        .quotient
        .elements
        .iter()
        .map(|c| orbit.translations.canon(&(&c.linear.apply(&o) + &c.trans)))
        .collect();
    Ok(classes.len())
}

fn criterion_2() -> Check {
    for (p, q) in grid(-3, 3) {
        let n = vertex_class_count(FamilyId::P1, p, q)?;
        ensure(n == 4, || format!("P1({p},{q}): {n} classes"))?;
    }
    for ((c, d), want) in [
        ((1, 2), 4),
        ((1, 6), 4),
        ((3, 2), 8),
        ((1, 4), 8),
        ((2, 3), 8),
        ((1, -2), 4),
        ((2, 4), 4),
        ((2, 6), 8),
    ] {
        // d = kc with k ≡ 2 (mod 4) halves the count.
        let k: Option<i64> = (d % c == 0).then(|| d / c);
        let oracle = if k.is_some_and(|k| k.rem_euclid(4) == 2) { 4 } else { 8 };
        ensure(oracle == want, || format!("P2 oracle disagrees at ({c},{d})"))?;
        let n = vertex_class_count(FamilyId::P2, c, d)?;
        ensure(n == want, || format!("P2({c},{d}): {n} classes, expected {want}"))?;
    }
    for ((c, d), want) in [
        ((1, 2), 6),
        ((2, 1), 3),
        ((1, 1), 1),
        ((3, 1), 1),
        ((-2, 1), 3),
        ((2, 3), 6),
    ] {
        let n = vertex_class_count(FamilyId::P3, c, d)?;
        ensure(n == want, || format!("P3({c},{d}): {n} classes, expected {want}"))?;
    }
    Ok("P1 4 everywhere; P2 and P3 counts match at every test point".into())
}

fn p1_stars(a: i64, b: i64) -> Vec<Vec<Vec3>> {
    vec![
        set(&[(a, 0, b), (0, b, a), (b, a, 0)]),
        set(&[(a, 0, -b), (0, -b, -a), (b, -a, 0)]),
        set(&[(-a, 0, -b), (0, b, -a), (-b, a, 0)]),
        set(&[(-a, 0, b), (0, -b, a), (-b, -a, 0)]),
    ]
}

fn p2_stars(c: i64, d: i64) -> Vec<Vec<Vec3>> {
    vec![
        set(&[(c, -c, d), (-c, d, c), (d, c, -c)]),
        set(&[(-c, -c, -d), (c, d, -c), (-d, c, c)]),
        set(&[(-c, c, d), (c, -d, c), (-d, -c, -c)]),
        set(&[(c, c, -d), (-c, -d, -c), (d, -c, c)]),
        set(&[(-c, -c, d), (c, -d, -c), (d, c, c)]),
        set(&[(c, -c, -d), (-c, -d, c), (-d, c, -c)]),
        set(&[(-c, c, -d), (c, d, c), (d, -c, -c)]),
        set(&[(c, c, d), (-c, d, -c), (-d, -c, c)]),
    ]
}

fn p3_stars(c: i64, d: i64) -> Vec<Vec<Vec3>> {
    vec![
        set(&[(c, -c, d), (d, -c, -c), (-c, -c, -d), (-d, -c, c)]),
        set(&[(-c, c, -d), (-c, d, c), (-c, -c, d), (-c, -d, -c)]),
        set(&[(c, c, d), (c, d, -c), (c, -c, -d), (c, -d, c)]),
        set(&[(d, c, c), (-c, c, d), (-d, c, -c), (c, c, -d)]),
        set(&[(d, c, -c), (-c, d, -c), (-d, -c, -c), (c, -d, -c)]),
        set(&[(-d, c, c), (c, d, c), (d, -c, c), (-c, -d, c)]),
    ]
}

fn coincidences(stars: &[Vec<Vec3>]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..stars.len() {
        for j in i + 1..stars.len() {
            if stars[i] == stars[j] {
                out.push((i, j));
            }
        }
    }
    out
}

fn criterion_3() -> Check {
    let points = [(1, 3), (2, -1), (1, 0), (0, 2), (3, 2), (1, 1), (-2, 3)];
    let mut compared = 0;
    for family in [FamilyId::P1, FamilyId::P2, FamilyId::P3] {
        for &(p, q) in &points {
            let expected = match family {
                FamilyId::P1 => p1_stars(p, q),
                FamilyId::P2 => p2_stars(p, q),
                _ => p3_stars(p, q),
            };
            let catalog = vertex_star_catalog(family, params(p, q)).map_err(|e| e.to_string())?;
            let found: Vec<Vec<Vec3>> = catalog.entries.iter().map(|e| e.star.clone()).collect();
            ensure(found == expected, || format!("{family}({p},{q}): catalog differs"))?;
            ensure(catalog.coincidences == coincidences(&expected), || {
                format!("{family}({p},{q}): coincidences")
            })?;
            compared += 1;
        }
    }
    for d in [1, 2, -3] {
        let c = vertex_star_catalog(FamilyId::P3, params(0, d)).map_err(|e| e.to_string())?;
        ensure(c.coincidences == vec![(0, 3), (1, 2), (4, 5)], || {
            format!("P3(0,{d}): {:?}", c.coincidences)
        })?;
    }
    for c in [1, 2, -3] {
        let k = vertex_star_catalog(FamilyId::P2, params(c, 0)).map_err(|e| e.to_string())?;
        ensure(k.coincidences == vec![(0, 5), (1, 4), (2, 6), (3, 7)], || {
            format!("P2({c},0): {:?}", k.coincidences)
        })?;
    }
    Ok(format!("{compared} catalogs equal; coincidence patterns reproduced"))
}

enum Expect {
    Regular,
    Degenerate,
    Chiral,
}

fn expected_class(family: FamilyId, p: i64, q: i64) -> Expect {
    match family {
        FamilyId::P1 if q == p || q == -p => Expect::Regular,
        FamilyId::P1 => Expect::Chiral,
        _ if p == 0 || q == 0 => Expect::Regular,
        FamilyId::P2 if q % p == 0 && (q / p).rem_euclid(4) == 2 => Expect::Degenerate,
        FamilyId::P3 if p % q == 0 => Expect::Degenerate,
        _ => Expect::Chiral,
    }
}

fn criterion_4() -> Check {
    let mut counts = [0; 3];
    for family in [FamilyId::P1, FamilyId::P2, FamilyId::P3] {
        for (p, q) in grid(-3, 3) {
            let c = classify(family, params(p, q)).map_err(|e| format!("{family}({p},{q}): {e}"))?;
            let ok = match (expected_class(family, p, q), &c.verdict) {
                (Expect::Regular, Verdict::Regular(_) | Verdict::FiniteRegular(_)) => c.witness.is_some(),
                (Expect::Degenerate, Verdict::DegenerateNonFaithful(m)) => *m > 1,
                (Expect::Chiral, Verdict::Chiral) => c.witness.is_none() && !c.certificate.is_empty(),
                _ => false,
            };
            ensure(ok, || format!("{family}({p},{q}): {}", c.verdict))?;
            counts[match c.verdict {
                Verdict::Chiral => 0,
                Verdict::DegenerateNonFaithful(_) => 2,
                _ => 1,
            }] += 1;
        }
    }
    let named = [
        (FamilyId::P1, (1, -1), "regular {∞,3}^(a)"),
        (FamilyId::P1, (1, 1), "finite regular {3,3}"),
        (FamilyId::P2, (1, 0), "regular {∞,3}^(b)"),
        (FamilyId::P2, (0, 1), "finite regular {4,3}"),
        (FamilyId::P3, (0, 1), "regular {∞,4}_{·,*3}"),
    ];
    for (family, (p, q), name) in named {
        let v = classify(family, params(p, q))
            .map_err(|e| e.to_string())?
            .verdict
            .to_string();
        ensure(v == name, || format!("{family}({p},{q}) is {v}, expected {name}"))?;
    }
    Ok(format!(
        "{} chiral, {} regular, {} degenerate; named regulars match",
        counts[0], counts[1], counts[2]
    ))
}

fn criterion_5() -> Check {
    let mut n = 0;
    for (p, q) in grid(-2, 2) {
        let cases = [
            (
                FamilyId::P66,
                iso([-2, 3, 1], (0, -q, -p)),
                iso([-3, -1, -2], (0, 0, 0)),
                FamilyId::P1,
            ),
            (
                FamilyId::Q46,
                iso([-1, 3, -2], (p, -q, -p)),
                iso([-3, -1, -2], (0, 0, 0)),
                FamilyId::P2,
            ),
        ];
        for (family, s1, s2, target) in cases {
            let (t1, t2) = match target {
                FamilyId::P1 => (iso([-3, -1, 2], (q, p, 0)), iso([2, 3, 1], (0, 0, 0))),
                _ => (iso([-3, 2, 1], (q, p, -p)), iso([2, 3, 1], (0, 0, 0))),
            };
            ensure(s1.then(&s2.inverse()) == t1 && s2.then(&s2) == t2, || {
                format!("{family}({p},{q}) by hand")
            })?;
            let g = build_group(family, params(p, q)).map_err(|e| e.to_string())?;
            let pair = apply_phi2(&g).map_err(|e| e.to_string())?;
            ensure(pair.s1 == t1 && pair.s2 == t2, || {
                format!("{family}({p},{q}): phi2 differs")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} exact generator equalities"))
}

fn criterion_6() -> Check {
    let (mut direct, mut mirrored) = (0, 0);
    for (c, d) in grid(-2, 2) {
        let check = verify_eta(params(c, d)).map_err(|e| e.to_string())?;
        let x = check
            .conjugator
            .clone()
            .ok_or_else(|| format!("Q46({c},{d}): no conjugator"))?;
        let g = build_group(FamilyId::Q46, params(c, d)).map_err(|e| e.to_string())?;
        let eta = apply_eta(&g).map_err(|e| e.to_string())?;
        ensure(
            eta.s1 == g.s1.then(&g.s1).then(&g.s2) && eta.s2 == g.s2.inverse(),
            || "eta words".into(),
        )?;
        let h = build_group(FamilyId::P66, params(c - d, c + d)).map_err(|e| e.to_string())?;
        let (a1, a2) = (eta.s1.conjugate_by(&x), eta.s2.conjugate_by(&x));
        // Either generating pair of the target group is accepted.
        if a1 == h.s1 && a2 == h.s2 {
            direct += 1;
        } else if a1 == h.s1.then(&h.s2).then(&h.s2) && a2 == h.s2.inverse() {
            mirrored += 1;
        } else {
            return Err(format!(
                "Q46({c},{d}): conjugate is not a generating pair of P66({},{})",
                c - d,
                c + d
            ));
        }
    }
    Ok(format!("{direct} onto (S1,S2), {mirrored} onto (S1S2^2,S2^-1)"))
}

fn criterion_7() -> Check {
    let cases = [
        (FamilyId::P1, (4, 6, 4), 3, 3, [(1, 3), (2, 5), (0, 1)]),
        (FamilyId::P2, (8, 12, 6), 4, 3, [(1, 4), (2, 3), (1, 0)]),
        (FamilyId::P3, (6, 12, 8), 3, 4, [(1, 2), (2, 3), (0, 1)]),
    ];
    for (family, census, size, degree, points) in cases {
        for (p, q) in points {
            let c = covering_quotient(family, params(p, q)).map_err(|e| format!("{family}({p},{q}): {e}"))?;
            let (v, e, f) = c.census();
            ensure(
                c.census() == census
                    && c.face_sizes == BTreeSet::from([size])
                    && c.vertex_degrees == BTreeSet::from([degree])
                    && v as i64 - e as i64 + f as i64 == 2
                    && c.euler_characteristic == 2,
                || format!("{family}({p},{q}): {:?}", c),
            )?;
        }
    }
    Ok("censuses (4,6,4), (8,12,6), (6,12,8); Euler characteristic 2".into())
}

fn criterion_8() -> Check {
    let mut n = 0;
    for family in [FamilyId::P1, FamilyId::P2, FamilyId::P3] {
        for (p, q) in grid(-2, 2) {
            let g = build_group(family, params(p, q)).map_err(|e| e.to_string())?;
            if finite_fixed_point(&g).is_some() {
                continue;
            }
            let want = match family {
                FamilyId::P1 => 4,
                FamilyId::P2 => 6,
                _ if p == 0 || p.abs() == q.abs() => 4,
                _ => 8,
            };
            let rep = face_translation_classes(family, params(p, q)).map_err(|e| e.to_string())?;
            ensure(rep.count == want && rep.exhaustive, || {
                format!(
                    "{family}({p},{q}): {} classes (exhaustive {}), expected {want}",
                    rep.count, rep.exhaustive
                )
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} infinite members, counts match and exhaust the faces"))
}

fn criterion_9() -> Check {
    let cases = [
        (FamilyId::TWI_33STAR, (-1, -1, 1), [3, 2, 1], Some(2)),
        (FamilyId::TWI_34, (-4, 0, 0), [2, 1, 3], Some(3)),
        (FamilyId::TWI_33, (-2, -2, -2), [1, 2, -3], None),
    ];
    for (case, twist, witness, period) in cases {
        for a in [1, 2, -3] {
            let rep = verify_named_regular(case, &r(a)).map_err(|e| e.to_string())?;
            let t = Vec3::ints(twist.0, twist.1, twist.2).scale(&r(a));
            ensure(
                rep.passed
                    && rep.twist_translation == t
                    && rep.witness == Some(SignedPerm::from_images(witness))
                    && (period.is_none() || rep.petrie_period == period),
                || format!("{case}({a}): {rep:?}"),
            )?;
        }
    }
    for a in [1, 2, -3] {
        let g = build_group(FamilyId::SONEROT_33STAR, params(a, 0)).map_err(|e| e.to_string())?;
        let half = Rat::new(a, 2);
        ensure(
            finite_fixed_point(&g) == Some(Vec3::new(half.clone(), half.clone(), -half)),
            || "1/2(a,a,-a)".into(),
        )?;
        let g = build_group(FamilyId::SONEROT_34, params(a, 0)).map_err(|e| e.to_string())?;
        ensure(finite_fixed_point(&g) == Some(Vec3::new(r(a), r(0), r(0))), || {
            "(a,0,0)".into()
        })?;
    }
    Ok("three twist cases regular with the stated witnesses; fixed points found".into())
}

fn face_sign(g: &chirahedra::group::GroupPresentation) -> i32 {
    let f = base_face(g);
    let (x, y, z) = (&f.strip[0], &f.strip[1], &f.strip[2]);
    Vec3::det(&(y - x), &(z - y), &f.translation).signum()
}

fn criterion_10() -> Check {
    let points = [(1, 3), (2, 5), (1, 4), (2, 3), (3, 1)];
    let radius = r(6);
    for family in [FamilyId::P1, FamilyId::P2, FamilyId::P3] {
        for (p, q) in points {
            let (mirror, m) = match family {
                FamilyId::P1 => ((q, p), SignedPerm::from_images([3, 2, 1])),
                FamilyId::P2 => ((-p, q), SignedPerm::from_images([2, 1, 3])),
                _ => ((p, -q), SignedPerm::from_images([1, 2, -3])),
            };
            let (found, iso) = chirahedra::analysis::enantiomorph(family, &params(p, q)).map_err(|e| e.to_string())?;
            ensure(
                found == params(mirror.0, mirror.1) && iso == Isometry::linear(m),
                || format!("{family}({p},{q}): mirror {found:?}"),
            )?;
            let (back, _) = chirahedra::analysis::enantiomorph(family, &found).map_err(|e| e.to_string())?;
            ensure(back == params(p, q), || format!("{family}({p},{q}): not an involution"))?;
            let g = build_group(family, params(p, q)).map_err(|e| e.to_string())?;
            let h = build_group(family, found).map_err(|e| e.to_string())?;
            let a = construct_patch(&g, &radius).map_err(|e| e.to_string())?.positions();
            let b = construct_patch(&h, &radius).map_err(|e| e.to_string())?.positions();
            let image: BTreeSet<Vec3> = a.iter().map(|x| m.apply(x)).collect();
            ensure(image.len() == a.len() && image == b, || {
                format!("{family}({p},{q}): vertex sets differ")
            })?;
            let (s, t) = (face_sign(&g), face_sign(&h));
            ensure(s != 0 && s == -t, || format!("{family}({p},{q}): handedness {s} / {t}"))?;
        }
    }
    Ok("15 mirror pairs at radius 6, handedness flips".into())
}

fn criterion_11() -> Check {
    for (p, q) in grid(-3, 3) {
        let (a, b) = (r(p), r(q));
        let p1 = star_planarity(FamilyId::P1, params(p, q)).map_err(|e| e.to_string())?;
        let det = -(&(&(&a * &a) * &a) + &(&(&b * &b) * &b));
        ensure(p1.determinant.as_ref() == Some(&det), || {
            format!("P1({p},{q}) determinant")
        })?;
        ensure(p1.determinant.unwrap().is_zero() == (q == -p), || {
            format!("P1({p},{q}) planarity")
        })?;
        let p2 = star_planarity(FamilyId::P2, params(p, q)).map_err(|e| e.to_string())?;
        ensure(p2.determinant.unwrap().is_zero() == (q == 0), || {
            format!("P2({p},{q}) planarity")
        })?;
        let p3 = star_planarity(FamilyId::P3, params(p, q)).map_err(|e| e.to_string())?;
        ensure(p3.determinant.is_none() && p3.planar == (p == 0), || {
            format!("P3({p},{q}) planarity")
        })?;
    }
    Ok("zero sets b=-a, d=0 and c=0 exactly".into())
}

fn cli(args: &[&str]) -> Result<Vec<u8>, String> {
    let o = Command::new(env!("CARGO_BIN_EXE_chirahedra"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(o.status.success(), || format!("{args:?} exited {:?}", o.status.code()))?;
    Ok(o.stdout)
}

fn criterion_12() -> Check {
    let members = [
        (FamilyId::P1, (1, 3)),
        (FamilyId::P1, (1, 1)),
        (FamilyId::P1, (1, -1)),
        (FamilyId::P2, (1, 4)),
        (FamilyId::P2, (1, 2)),
        (FamilyId::P2, (0, 1)),
        (FamilyId::P3, (1, 2)),
        (FamilyId::P3, (1, 1)),
        (FamilyId::P66, (1, 3)),
        (FamilyId::Q46, (1, 2)),
    ];
    for (family, (p, q)) in members {
        let g = build_group(family, params(p, q)).map_err(|e| e.to_string())?;
        let patch = construct_patch(&g, &r(3)).map_err(|e| e.to_string())?;
        let text = patch_to_json(&patch).map_err(|e| e.to_string())?;
        let back = patch_from_json(&text).map_err(|e| e.to_string())?;
        ensure(back == patch, || format!("{family}({p},{q}): round trip differs"))?;
    }
    let runs: [&[&str]; 3] = [
        &["build", "--family", "p3", "--params", "1,2", "--radius", "4"],
        &["survey", "--family", "p2", "--grid", "-2..2/1"],
        &["verify", "--lemma", "stars", "--family", "p1", "--grid", "-2..2/2"],
    ];
    for args in runs {
        ensure(cli(args)? == cli(args)?, || {
            format!("{args:?} output differs between runs")
        })?;
    }
    Ok("10 patches round-trip; repeated CLI runs byte-identical".into())
}

fn main() -> ExitCode {
    let criteria: [fn() -> Check; 12] = [
        criterion_1,
        criterion_2,
        criterion_3,
        criterion_4,
        criterion_5,
        criterion_6,
        criterion_7,
        criterion_8,
        criterion_9,
        criterion_10,
        criterion_11,
        criterion_12,
    ];
    let mut failed = 0;
    for (i, check) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let result = match result {
            Ok(_) if took > LIMIT => Err(format!("took {took:.1?}")),
            r => r,
        };
        match result {
            Ok(detail) => println!("PASS criterion {} ({took:.1?}): {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {} ({took:.1?}): {detail}", i + 1);
            }
        }
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
