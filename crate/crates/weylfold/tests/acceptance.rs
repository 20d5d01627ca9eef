//! Acceptance suite: one test per shipped guarantee. Each test prints a
//! single PASS line with the measured facts (visible with `--nocapture`).

use std::collections::BTreeSet;
use std::time::Instant;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylfold::dynkin::SimplyLacedDiagram;
use weylfold::folding::{coroot_pairing_closed_form, fold, FoldedRootSystem};
use weylfold::galois::{
    compute_galois, realize_on_ambient, root_union, ComponentEmbedding, ComponentSpec,
    ContractionSpec,
};
use weylfold::lattice::{
    coroot_covector, direct_sum_split, flag_identity_check, scaled_reflection_coefficient,
    verify_galois_form, BilinearLattice, IsometryCandidate, SublatticeEmbedding,
};
use weylfold::linalg::{IMat, QMat, ZMat};
use weylfold::perm::Perm;
use weylfold::rootsys::RootLattice;
use weylfold::types::{TypeKind, TypeLabel};

fn label(s: &str) -> TypeLabel {
    TypeLabel::parse(s).unwrap()
}

fn perm(images: Vec<usize>) -> Perm {
    Perm::from_images(images).unwrap()
}

fn zmat(rows: Vec<Vec<i64>>) -> ZMat {
    ZMat::from_rows(
        rows.into_iter()
            .map(|r| r.into_iter().map(BigInt::from).collect())
            .collect(),
    )
}

fn lattice(rows: Vec<Vec<i64>>) -> BilinearLattice {
    BilinearLattice::new(zmat(rows)).unwrap()
}

fn ade_labels_up_to(max_rank: usize) -> Vec<TypeLabel> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push(TypeLabel::new(TypeKind::A, r).unwrap());
    }
    for r in 4..=max_rank {
        out.push(TypeLabel::new(TypeKind::D, r).unwrap());
    }
    for r in 6..=max_rank.min(8) {
        out.push(TypeLabel::new(TypeKind::E, r).unwrap());
    }
    out
}

fn every_fold_up_to_rank_8() -> Vec<(TypeLabel, usize, FoldedRootSystem)> {
    let mut out = Vec::new();
    for source in ade_labels_up_to(8) {
        let diagram = SimplyLacedDiagram::from_label(source);
        for subgroup in diagram.automorphism_group().subgroups() {
            let folded = fold(&diagram, &subgroup).unwrap();
            out.push((source, subgroup.len(), folded));
        }
    }
    out
}

/// Sym3 on the three outer nodes of the rank-4 branch diagram.
fn triality_generators() -> Vec<Perm> {
    vec![perm(vec![2, 1, 0, 3]), perm(vec![0, 1, 3, 2])]
}

fn reversal(rank: usize) -> Perm {
    perm((0..rank).rev().collect())
}

/// The geometric rank-24 ambient: the scaled hexagonal block, three
/// hyperbolic planes, and two negated E8 blocks. Determinant 3.
fn ogrady_ambient() -> BilinearLattice {
    let block = zmat(vec![vec![-2, 3], vec![3, -6]]);
    let u = zmat(vec![vec![0, 1], vec![1, 0]]);
    let e8_neg = label("E8").cartan().to_z().map(|v| -v);
    let gram = ZMat::block_diag(&[&block, &u, &u, &u, &e8_neg, &e8_neg]);
    BilinearLattice::new(gram).unwrap()
}

fn ogrady_spec() -> ContractionSpec {
    let classes = IMat::from_fn(2, 24, |i, j| i64::from(i == j));
    let component = ComponentSpec::new(String::from("OG"), label("D4"), triality_generators())
        .unwrap()
        .with_embedding(ComponentEmbedding::new(classes));
    ContractionSpec::with_ambient(vec![component], ogrady_ambient())
}

fn closure(n: usize, gens: &[IMat]) -> Vec<IMat> {
    let mut seen = BTreeSet::new();
    seen.insert(IMat::identity(n));
    let mut frontier = vec![IMat::identity(n)];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for g in &frontier {
            for s in gens {
                let p = s.mul(g);
                if seen.insert(p.clone()) {
                    next.push(p);
                }
            }
        }
        frontier = next;
    }
    seen.into_iter().collect()
}

#[test]
fn criterion_01_folding_table() {
    let started = Instant::now();
    let folds = every_fold_up_to_rank_8();
    let mut checked = 0usize;
    for (source, gamma_order, folded) in &folds {
        let got = folded.folded_type();
        let bc = folded.has_adjacent_orbit();
        match (source.kind, source.rank, gamma_order) {
            (_, _, 1) => {
                assert_eq!(
                    got, *source,
                    "trivial fold of {source} must be the identity"
                );
                assert!(!bc);
            }
            (TypeKind::A, r, 2) if r % 2 == 0 => {
                let expected = if r == 2 {
                    label("A1")
                } else {
                    TypeLabel::new(TypeKind::B, r / 2).unwrap()
                };
                assert_eq!(got, expected, "even chain {source} folded wrong");
                assert!(bc, "even chain {source} must flag the non-reduced case");
            }
            (TypeKind::A, r, 2) => {
                let expected = TypeLabel::new(TypeKind::C, r.div_ceil(2)).unwrap();
                assert_eq!(got, expected, "odd chain {source} folded wrong");
                assert!(!bc);
            }
            (TypeKind::D, 4, 2) => {
                // dual labels name the same Weyl group; either reading of the
                // rank-3 fold is accepted for this one entry
                assert!(got.is_weyl_equal(label("C3")), "leaf swap of D4 gave {got}");
                assert!(!bc);
            }
            (TypeKind::D, 4, 3) | (TypeKind::D, 4, 6) => {
                assert_eq!(got, label("G2"));
                assert!(!bc);
            }
            (TypeKind::D, r, 2) => {
                let expected = TypeLabel::new(TypeKind::B, r - 1).unwrap();
                assert_eq!(got, expected, "leaf swap of {source} folded wrong");
                assert!(!bc);
            }
            (TypeKind::E, 6, 2) => {
                assert_eq!(got, label("F4"));
                assert!(!bc);
            }
            (kind, rank, order) => {
                panic!(
                    "unexpected subgroup of order {order} on {}{rank}",
                    kind.letter()
                )
            }
        }
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "folding table took {elapsed:?}"
    );
    println!(
        "ACCEPTANCE  1: PASS: {checked} subgroup folds across rank <= 8 match the table ({elapsed:?})"
    );
}

#[test]
fn criterion_02_triality_fold_exact_matrices() {
    let d4 = SimplyLacedDiagram::from_label(label("D4"));
    let third = BigRational::new(BigInt::from(2), BigInt::from(3));
    let expected_gram = QMat::from_fn(2, 2, |i, j| match (i, j) {
        (0, 0) => third.clone(),
        (1, 1) => BigRational::from_integer(2.into()),
        _ => BigRational::from_integer((-1).into()),
    });
    let expected_cartan = IMat::from_rows(vec![vec![2, -1], vec![-3, 2]]);
    let order_three = vec![perm(vec![2, 1, 3, 0])];
    for gens in [order_three, triality_generators()] {
        let folded = fold(&d4, &gens).unwrap();
        assert_eq!(folded.gram(), &expected_gram);
        assert_eq!(folded.cartan(), &expected_cartan);
        assert_eq!(folded.folded_type(), label("G2"));
    }
    println!(
        "ACCEPTANCE  2: PASS: both rank-4 branch folds give Gram [[2/3,-1],[-1,2]] and Cartan [[2,-1],[-3,2]]"
    );
}

#[test]
fn criterion_03_closed_form_integrality() {
    let mut entries = 0usize;
    let mut reflections = 0usize;
    for (source, _, folded) in every_fold_up_to_rank_8() {
        let diagram = SimplyLacedDiagram::from_label(source);
        let r = folded.rank();
        for i in 0..r {
            for j in 0..r {
                let closed = coroot_pairing_closed_form(&diagram, folded.orbits(), i, j);
                assert_eq!(
                    folded.cartan()[(i, j)],
                    closed,
                    "projection Cartan disagrees with the orbit-sum form at ({i},{j}) for {source}"
                );
                entries += 1;
            }
        }
        let datum = RootLattice::from_folded(&folded);
        let gram = datum.gram();
        for j in 0..r {
            let s = datum.simple_reflection(j);
            assert_eq!(
                s.mul(&s),
                IMat::identity(r),
                "reflection {j} of {source} fold not an involution"
            );
            let sq = s.to_q();
            assert_eq!(
                &sq.transpose().mul(gram).mul(&sq),
                gram,
                "reflection {j} of {source} fold moves the form"
            );
            reflections += 1;
        }
    }
    println!(
        "ACCEPTANCE  3: PASS: {entries} Cartan entries equal the orbit-sum form; {reflections} simple reflections are exact integral involutions"
    );
}

#[test]
fn criterion_04_weyl_closure_orders() {
    fn factorial(n: u128) -> u128 {
        (1..=n).product()
    }
    fn formula(l: TypeLabel) -> u128 {
        let r = l.rank as u128;
        match l.kind {
            TypeKind::A => factorial(r + 1),
            TypeKind::B | TypeKind::C => (1u128 << r) * factorial(r),
            TypeKind::D => (1u128 << (r - 1)) * factorial(r),
            TypeKind::E => match l.rank {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            TypeKind::F => 1_152,
            TypeKind::G => 12,
        }
    }

    let started = Instant::now();
    let mut checked = 0usize;
    for l in weylfold::types::all_labels_up_to(6) {
        let group = RootLattice::from_type(l).generate_weyl(10_000_000).unwrap();
        let elements = group.elements().expect("rank <= 6 closures fit the cap");
        assert_eq!(group.order(), formula(l), "closure order of {l}");
        assert_eq!(elements.len() as u128, formula(l), "element count of {l}");
        checked += 1;
    }
    for (name, expected) in [("E7", 2_903_040u128), ("E8", 696_729_600u128)] {
        let group = RootLattice::from_type(label(name))
            .generate_weyl(1_000)
            .unwrap();
        assert!(
            group.elements().is_none(),
            "{name} must skip enumeration under a small cap"
        );
        assert_eq!(group.order(), expected, "orbit-recursion order of {name}");
    }
    let elapsed = started.elapsed();
    assert!(elapsed.as_secs_f64() < 60.0, "closures took {elapsed:?}");
    println!(
        "ACCEPTANCE  4: PASS: {checked} closures at rank <= 6 match the classical orders; E7/E8 orders via orbit recursion ({elapsed:?})"
    );
}

#[test]
fn criterion_05_fundamental_group_table() {
    fn expected(l: TypeLabel) -> Vec<u64> {
        match l.kind {
            TypeKind::A => vec![l.rank as u64 + 1],
            TypeKind::B | TypeKind::C => vec![2],
            TypeKind::D if l.rank % 2 == 1 => vec![4],
            TypeKind::D => vec![2, 2],
            TypeKind::E => match l.rank {
                6 => vec![3],
                7 => vec![2],
                _ => vec![],
            },
            TypeKind::F | TypeKind::G => vec![],
        }
    }

    let mut checked = 0usize;
    for l in weylfold::types::all_labels_up_to(8) {
        let want: Vec<BigInt> = expected(l)
            .into_iter()
            .filter(|&f| f != 1)
            .map(BigInt::from)
            .collect();
        let got = RootLattice::from_type(l).fundamental_group_of();
        assert_eq!(got, want, "fundamental group of {l}");
        checked += 1;
    }
    println!("ACCEPTANCE  5: PASS: weight/coroot quotients of all {checked} types of rank <= 8 match the table");
}

#[test]
fn criterion_06_flag_identity_three_ways() {
    let two = BigInt::from(2);

    // imprimitive class over one generator
    let half_diag = lattice(vec![vec![-2]]);
    let classes = SublatticeEmbedding::from_rows(half_diag.clone(), vec![vec![2]]).unwrap();
    let cov = ZMat::from_rows(vec![coroot_covector(&half_diag, &[2]).unwrap()]);
    let a = flag_identity_check(&classes, &cov, &two).unwrap();
    assert!(a.holds);
    assert_eq!(a.triple(), (BigInt::one(), two.clone(), BigInt::one()));

    // primitive curve class in a hyperbolic plane
    let u = lattice(vec![vec![0, 1], vec![1, 0]]);
    let classes = SublatticeEmbedding::from_rows(u.clone(), vec![vec![1, -1]]).unwrap();
    let cov = ZMat::from_rows(vec![coroot_covector(&u, &[1, -1]).unwrap()]);
    let b = flag_identity_check(&classes, &cov, &two).unwrap();
    assert!(b.holds);
    assert_eq!(b.triple(), (BigInt::one(), BigInt::one(), two.clone()));

    // brute-force search: primitive e with every pairing even
    let mut hits = Vec::new();
    for a in [-2i64, -4, -6, -8] {
        for b in (-8i64..=8).filter(|b| b % 2 == 0) {
            for c in -8i64..=-1 {
                if a * c - b * b <= 0 {
                    continue;
                }
                let amb = lattice(vec![vec![a, b], vec![b, c]]);
                let Ok(cov_row) = coroot_covector(&amb, &[1, 0]) else {
                    continue;
                };
                let classes =
                    SublatticeEmbedding::from_rows(amb.clone(), vec![vec![1, 0]]).unwrap();
                let report =
                    flag_identity_check(&classes, &ZMat::from_rows(vec![cov_row]), &two).unwrap();
                if report.holds && report.triple() == (two.clone(), BigInt::one(), BigInt::one()) {
                    hits.push((a, b, c));
                }
            }
        }
    }
    assert!(!hits.is_empty(), "no synthetic (2,1,1) configuration found");
    assert!(
        hits.contains(&(-2, -2, -4)),
        "the hand-checked witness [[-2,-2],[-2,-4]] must be among the search hits"
    );
    println!(
        "ACCEPTANCE  6: PASS: quotient orders (1,2,1), (1,1,2), and (2,1,1) all multiply to 2; search found {} synthetic witnesses",
        hits.len()
    );
}

#[test]
fn criterion_07_braid_flop_identity() {
    // abstract hexagonal-free rank-2 chain
    let a2 = RootLattice::from_type(label("A2"));
    let s1 = a2.simple_reflection(0);
    let s2 = a2.simple_reflection(1);
    let highest = a2.reflection_in_root(&[1, 1]).unwrap();
    assert_eq!(s1.mul(&s2).mul(&s1), highest);
    assert_eq!(s2.mul(&s1).mul(&s2), highest);

    // the same identity on a negative-definite geometric realization
    let amb = lattice(vec![vec![-2, 1], vec![1, -2]]);
    let r1 = amb.bb_reflection(&[1, 0]).unwrap();
    let r2 = amb.bb_reflection(&[0, 1]).unwrap();
    let r12 = amb.bb_reflection(&[1, 1]).unwrap();
    assert_eq!(r1.mul(&r2).mul(&r1), r12);
    assert_eq!(r2.mul(&r1).mul(&r2), r12);
    println!("ACCEPTANCE  7: PASS: s1 s2 s1 = s_{{1+2}} = s2 s1 s2 abstractly and on the ambient realization");
}

#[test]
fn criterion_08_ogrady_pipeline() {
    let spec = ogrady_spec();
    let ambient = spec.ambient().unwrap().clone();
    assert_eq!(ambient.rank(), 24);
    assert_eq!(ambient.det(), BigInt::from(3) * BigInt::from(-1i8).pow(21));

    let report = compute_galois(&spec).unwrap();
    assert_eq!(report.components().len(), 1);
    assert_eq!(report.components()[0].folded, label("G2"));
    assert_eq!(report.total_order(), &BigUint::from(12u32));

    let realization = realize_on_ambient(&spec, 1_000).unwrap();
    assert_eq!(realization.verified_order(), Some(12));

    let classes = vec![
        {
            let mut v = vec![0i64; 24];
            v[0] = 1;
            v
        },
        {
            let mut v = vec![0i64; 24];
            v[1] = 1;
            v
        },
    ];
    let sub = SublatticeEmbedding::from_rows(ambient.clone(), classes.clone()).unwrap();
    let split = direct_sum_split(&sub).unwrap();
    assert!(split.splits);
    assert_eq!(split.glue_order, BigInt::one());
    assert_eq!(split.complement.rank(), 22);
    assert!(
        split.complement_discriminant.is_empty(),
        "complement must be unimodular"
    );

    let cov = ZMat::from_rows(vec![
        coroot_covector(&ambient, &classes[0]).unwrap(),
        coroot_covector(&ambient, &classes[1]).unwrap(),
    ]);
    let elements = closure(24, &realization.generators());
    assert_eq!(elements.len(), 12);
    for m in &elements {
        let screen =
            verify_galois_form(&sub, &cov, &IsometryCandidate { matrix: m.clone() }).unwrap();
        assert!(
            screen.passes(),
            "a realized group element failed the screen"
        );
    }
    println!(
        "ACCEPTANCE  8: PASS: branch fold realizes order 12 on the rank-24 ambient; complement of rank 22 is unimodular; all 12 elements screened"
    );
}

#[test]
fn criterion_09_hilbert_pipeline() {
    let forward = ContractionSpec::new(vec![
        ComponentSpec::new(String::from("B0"), label("A1"), vec![]).unwrap(),
        ComponentSpec::new(String::from("B1"), label("A2"), vec![]).unwrap(),
    ]);
    let report = compute_galois(&forward).unwrap();
    assert_eq!(report.total_order(), &BigUint::from(12u32));
    assert_eq!(
        report.factor_labels(),
        vec![String::from("W(A1)"), String::from("W(A2)")]
    );

    let swapped = ContractionSpec::new(vec![
        ComponentSpec::new(String::from("B1"), label("A2"), vec![]).unwrap(),
        ComponentSpec::new(String::from("B0"), label("A1"), vec![]).unwrap(),
    ]);
    let swapped_report = compute_galois(&swapped).unwrap();
    assert_eq!(swapped_report.total_order(), report.total_order());
    assert_eq!(
        swapped_report.factor_labels(),
        vec![String::from("W(A2)"), String::from("W(A1)")]
    );
    println!("ACCEPTANCE  9: PASS: two trivial-monodromy components give order 12 independent of listing order");
}

#[test]
fn criterion_10_bc_case() {
    // orders of the folded groups
    let p = ComponentSpec::new(String::from("P"), label("A2"), vec![reversal(2)]).unwrap();
    let q = ComponentSpec::new(String::from("Q"), label("A4"), vec![reversal(4)]).unwrap();
    let report = compute_galois(&ContractionSpec::new(vec![p.clone(), q.clone()])).unwrap();
    assert_eq!(report.components()[0].weyl_order, 2);
    assert_eq!(report.components()[1].weyl_order, 8);
    assert!(report.components().iter().all(|c| c.bc));

    // the union of the two rescalings is non-reduced
    for c in [&p, &q] {
        let (folded, bc) = c.fold_component().unwrap();
        assert!(bc);
        assert!(!root_union(&folded).unwrap().is_reduced());
    }

    // reflecting in the doubled class gives the same matrix
    let amb = lattice(vec![vec![-2]]);
    assert_eq!(
        amb.bb_reflection(&[2]).unwrap(),
        amb.bb_reflection(&[1]).unwrap()
    );
    let halved = scaled_reflection_coefficient(&amb, &[1], &[1], true).unwrap();
    let plain = scaled_reflection_coefficient(&amb, &[1], &[1], false).unwrap();
    assert_eq!(plain, halved * BigRational::from_integer(2.into()));

    // realizations exercise the doubled-class path end to end
    let rank_one = ContractionSpec::with_ambient(
        vec![p.with_embedding(ComponentEmbedding::new(IMat::from_rows(vec![vec![1]])))],
        lattice(vec![vec![-2]]),
    );
    assert_eq!(
        realize_on_ambient(&rank_one, 100).unwrap().verified_order(),
        Some(2)
    );

    let rank_two = ContractionSpec::with_ambient(
        vec![
            q.with_embedding(ComponentEmbedding::new(IMat::from_rows(vec![
                vec![1, 0],
                vec![0, 1],
            ]))),
        ],
        lattice(vec![vec![-4, 2], vec![2, -2]]),
    );
    assert_eq!(
        realize_on_ambient(&rank_two, 100).unwrap().verified_order(),
        Some(8)
    );
    println!(
        "ACCEPTANCE 10: PASS: even-chain folds give orders 2 and 8, non-reduced unions, and scale-independent reflections"
    );
}

#[test]
fn criterion_11_verify_soundness_seeded() {
    let spec = ogrady_spec();
    let ambient = spec.ambient().unwrap().clone();
    let realization = realize_on_ambient(&spec, 1_000).unwrap();
    let gens = realization.generators();

    let mut e1 = vec![0i64; 24];
    e1[0] = 1;
    let mut e2 = vec![0i64; 24];
    e2[1] = 1;
    let sub =
        SublatticeEmbedding::from_rows(ambient.clone(), vec![e1.clone(), e2.clone()]).unwrap();
    let cov = ZMat::from_rows(vec![
        coroot_covector(&ambient, &e1).unwrap(),
        coroot_covector(&ambient, &e2).unwrap(),
    ]);

    let mut rng = ChaCha8Rng::seed_from_u64(20260816);

    let mut accepted = 0usize;
    for _ in 0..200 {
        let len = rng.gen_range(1..=10);
        let mut word = IMat::identity(24);
        for _ in 0..len {
            word = word.mul(&gens[rng.gen_range(0..gens.len())]);
        }
        let screen = verify_galois_form(&sub, &cov, &IsometryCandidate { matrix: word }).unwrap();
        assert!(screen.passes(), "a reflection word was wrongly rejected");
        accepted += 1;
    }

    // isometries supported away from the class span: reflections in
    // norm -2 vectors of the complement blocks
    let mut pool = Vec::new();
    for offset in [2usize, 4, 6] {
        let mut v = vec![0i64; 24];
        v[offset] = 1;
        v[offset + 1] = -1;
        pool.push(ambient.bb_reflection(&v).unwrap());
    }
    for k in 8..24 {
        let mut v = vec![0i64; 24];
        v[k] = 1;
        pool.push(ambient.bb_reflection(&v).unwrap());
    }

    let mut rejected = 0usize;
    while rejected < 200 {
        let len = rng.gen_range(1..=6);
        let mut word = IMat::identity(24);
        for _ in 0..len {
            word = word.mul(&pool[rng.gen_range(0..pool.len())]);
        }
        if word == IMat::identity(24) {
            continue;
        }
        let screen = verify_galois_form(&sub, &cov, &IsometryCandidate { matrix: word }).unwrap();
        assert!(
            screen.gram_preserved,
            "complement words must preserve the form"
        );
        assert!(
            !screen.fixes_complement,
            "a complement-mover slipped past check (iv)"
        );
        assert!(!screen.passes());
        rejected += 1;
    }
    assert_eq!((accepted, rejected), (200, 200));
    println!(
        "ACCEPTANCE 11: PASS: 200 seeded reflection words accepted, 200 seeded complement-movers rejected at check (iv), zero misclassifications"
    );
}
