use num_complex::Complex64;
use proptest::prelude::*;

use super::*;
use crate::matcore::pauli::{identity2, max_entangled_projector, sigma_x, sigma_y, sigma_z};
use crate::matcore::{ComplexMatrix, DEFAULT_HERM_TOL, DEFAULT_SINGULAR_TOL};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `ρ ↦ p·ρ + (1−p)·Tr(ρ)·I/2`, written without any map machinery.
fn depolarize(p: f64) -> impl Fn(&ComplexMatrix) -> ComplexMatrix {
    move |rho| &rho.scale_real(p) + &identity2().scale(rho.trace() * (1.0 - p) / 2.0)
}

/// Keeps populations, multiplies coherences by `r`.
fn dephase(r: f64) -> impl Fn(&ComplexMatrix) -> ComplexMatrix {
    move |rho| {
        ComplexMatrix::from_fn(
            2,
            2,
            |i, j| if i == j { rho[(i, j)] } else { rho[(i, j)] * r },
        )
    }
}

/// A-map assembled column by column from an action on matrix units.
fn amap_from_action(d: usize, f: impl Fn(&ComplexMatrix) -> ComplexMatrix) -> AMap {
    let mut m = ComplexMatrix::zeros(d * d, d * d);
    for j in 0..d {
        for k in 0..d {
            let img = f(&ComplexMatrix::unit(d, j, k));
            for a1 in 0..d {
                for a2 in 0..d {
                    m[(a1 * d + a2, j * d + k)] = img[(a1, a2)];
                }
            }
        }
    }
    AMap::new(d, m).unwrap()
}

fn werner_a(p: f64) -> AMap {
    amap_from_action(2, depolarize(p))
}

fn plus_state() -> ComplexMatrix {
    &sigma_x().scale_real(0.5) + &identity2().scale_real(0.5)
}

fn matrix_units(d: usize) -> impl Iterator<Item = ComplexMatrix> {
    (0..d * d).map(move |idx| ComplexMatrix::unit(d, idx / d, idx % d))
}

fn sorted_eigs(b: &BMap) -> Vec<f64> {
    b.matrix()
        .hermitian_eigs(DEFAULT_HERM_TOL)
        .unwrap()
        .eigenvalues
}

fn assert_close_slice(got: &[f64], want: &[f64], tol: f64) {
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(want) {
        assert!((g - w).abs() <= tol, "got {got:?}, want {want:?}");
    }
}

#[test]
fn identity_map_examples() {
    let id = identity_amap(2);
    assert_eq!(id.apply(&plus_state()).unwrap(), plus_state());
    assert!(
        a_to_b(&id)
            .matrix()
            .distance(&max_entangled_projector(2).scale_real(2.0))
            < 1e-15
    );

    let diag = diagnose(&id, DEFAULT_CP_TOL, 2000, DEFAULT_SEED);
    assert_eq!(diag.tp_defect, 0.0);
    assert_eq!(diag.herm_defect, 0.0);
    assert!(diag.min_choi_eig.abs() < 1e-12);
    assert!(diag.block_pos_min >= 0.0);
    assert!(diag.is_cp && diag.is_tp);
}

#[test]
fn identity_map_higher_dimension() {
    let id = identity_amap(3);
    let rho = ComplexMatrix::from_fn(3, 3, |i, j| c((i + j) as f64, i as f64 - j as f64));
    assert_eq!(id.apply(&rho).unwrap(), rho);
    let b = a_to_b(&id);
    assert!((b.trace() - c(3.0, 0.0)).norm() < 1e-15);
}

#[test]
fn apply_examples() {
    assert!(
        werner_a(1.0)
            .apply(&plus_state())
            .unwrap()
            .distance(&plus_state())
            < 1e-15
    );
    let out = werner_a(0.0).apply(&plus_state()).unwrap();
    assert!(out.distance(&identity2().scale_real(0.5)) < 1e-15);
}

#[test]
fn apply_rejects_wrong_state_shape() {
    let err = identity_amap(2)
        .apply(&ComplexMatrix::identity(3))
        .unwrap_err();
    assert!(matches!(err, DynMapError::StateShape { d: 2, .. }));
}

#[test]
fn map_constructor_checks_shape() {
    assert!(matches!(
        AMap::new(2, ComplexMatrix::identity(3)),
        Err(DynMapError::ShapeMismatch { .. })
    ));
    assert!(BMap::from_matrix(ComplexMatrix::identity(5)).is_err());
    assert_eq!(
        BMap::from_matrix(ComplexMatrix::identity(9)).unwrap().dim(),
        3
    );
    assert!(matches!(
        AMap::new(0, ComplexMatrix::identity(1)),
        Err(DynMapError::InvalidDimension(0))
    ));
}

#[test]
fn conversion_examples() {
    let b = a_to_b(&identity_amap(2));
    assert_eq!(b.trace(), c(2.0, 0.0));

    let w = werner_a(0.37);
    let b = a_to_b(&w);
    assert_eq!(a_to_b(&b_to_a(&b)), b);
    assert_eq!(b_to_a(&a_to_b(&w)), w);
}

#[test]
fn compose_examples() {
    let x = werner_a(0.42);
    assert_eq!(compose(&identity_amap(2), &x).unwrap(), x);

    let composed = compose(&werner_a(0.6), &werner_a(0.5)).unwrap();
    let target = werner_a(0.3);
    for e in matrix_units(2) {
        let got = composed.apply(&e).unwrap();
        assert!(got.distance(&target.apply(&e).unwrap()) < 1e-15);
    }

    let a = werner_a(0.8);
    let inv = a.inverse(DEFAULT_SINGULAR_TOL).unwrap();
    assert!(compose(&a, &inv).unwrap().distance(&identity_amap(2)) < 1e-10);

    assert!(matches!(
        compose(&identity_amap(2), &identity_amap(3)),
        Err(DynMapError::DimensionMismatch { left: 2, right: 3 })
    ));
}

#[test]
fn werner_inverse_residual_at_p_inv_e() {
    let a = werner_a((-1.0f64).exp());
    let inv = a.matrix().inverse(DEFAULT_SINGULAR_TOL).unwrap();
    assert!(
        a.matrix()
            .matmul(&inv)
            .unwrap()
            .distance(&ComplexMatrix::identity(4))
            < 1e-12
    );
}

#[test]
fn intermediate_examples() {
    let a = werner_a(0.7);
    let same = intermediate_amap(&a, &a, DEFAULT_SINGULAR_TOL).unwrap();
    assert!(same.distance(&identity_amap(2)) < 1e-12);

    // p(t) = e^{-t}: (t1, t2) = (1, 2) has effective parameter e^{-1}
    let p = |t: f64| (-t).exp();
    let inter =
        intermediate_amap(&werner_a(p(2.0)), &werner_a(p(1.0)), DEFAULT_SINGULAR_TOL).unwrap();
    let target = werner_a((-1.0f64).exp());
    for e in matrix_units(2) {
        assert!(
            inter
                .apply(&e)
                .unwrap()
                .distance(&target.apply(&e).unwrap())
                < 1e-12
        );
    }
    assert!(
        compose(&inter, &werner_a(p(1.0)))
            .unwrap()
            .distance(&werner_a(p(2.0)))
            < 1e-9
    );

    // p(t) = cos²t at (2π/3, π): p1 = 1/4, p2 = 1
    let pc = |t: f64| t.cos().powi(2);
    let t1 = 2.0 * std::f64::consts::PI / 3.0;
    let t2 = std::f64::consts::PI;
    let inter =
        intermediate_amap(&werner_a(pc(t2)), &werner_a(pc(t1)), DEFAULT_SINGULAR_TOL).unwrap();
    assert_close_slice(
        &sorted_eigs(&a_to_b(&inter)),
        &[-1.5, -1.5, -1.5, 6.5],
        1e-9,
    );
}

#[test]
fn intermediate_singular_is_error() {
    let err = intermediate_amap(&werner_a(0.5), &werner_a(0.0), DEFAULT_SINGULAR_TOL).unwrap_err();
    assert!(matches!(err, DynMapError::SingularIntermediateMap { .. }));
    let err = intermediate_amap(
        &amap_from_action(2, dephase(0.3)),
        &amap_from_action(2, dephase(0.0)),
        1e-12,
    );
    assert!(matches!(
        err,
        Err(DynMapError::SingularIntermediateMap { .. })
    ));
}

#[test]
fn choi_from_action_examples() {
    let b = choi_from_action(|r: &ComplexMatrix| r.clone(), 2).unwrap();
    assert!(
        b.matrix()
            .distance(&max_entangled_projector(2).scale_real(2.0))
            < 1e-15
    );

    let b = choi_from_action(depolarize(0.0), 2).unwrap();
    assert!(
        b.matrix()
            .distance(&ComplexMatrix::identity(4).scale_real(0.5))
            < 1e-15
    );
    assert!((b.trace() - c(2.0, 0.0)).norm() < 1e-15);

    let w = werner_a(0.3);
    let b = choi_from_action(|r: &ComplexMatrix| w.apply(r).unwrap(), 2).unwrap();
    assert!(b.distance(&a_to_b(&w)) < 1e-12);
}

#[test]
fn choi_from_action_matches_unitary_conjugation() {
    // ρ ↦ UρU† with a non-symmetric U checks the (output, input) index order
    let u = ComplexMatrix::new(
        2,
        2,
        vec![c(0.6, 0.0), c(0.0, 0.8), c(0.0, 0.8), c(0.6, 0.0)],
    )
    .unwrap();
    let action = |r: &ComplexMatrix| u.matmul(r).unwrap().matmul(&u.dagger()).unwrap();
    let b = choi_from_action(action, 2).unwrap();
    let a = b.to_amap();
    let rho = plus_state();
    assert!(a.apply(&rho).unwrap().distance(&action(&rho)) < 1e-15);
    // vec(UρU†) = (U ⊗ conj U)·vec(ρ) in row-major vectorization
    assert!(a.matrix().distance(&u.kron(&u.conj())) < 1e-15);
}

#[test]
fn choi_from_action_rejects_affine_and_misshaped() {
    let constant = |_: &ComplexMatrix| identity2().scale_real(0.5);
    assert!(matches!(
        choi_from_action(constant, 2),
        Err(DynMapError::NonLinearAction { .. })
    ));
    let wrong = |_: &ComplexMatrix| ComplexMatrix::identity(3);
    assert!(matches!(
        choi_from_action(wrong, 2),
        Err(DynMapError::StateShape { .. })
    ));
}

#[test]
fn diagnose_werner_half() {
    let diag = diagnose(&werner_a(0.5), DEFAULT_CP_TOL, 1000, 1);
    assert!((diag.min_choi_eig - 0.25).abs() < 1e-12);
    assert!(diag.tp_defect < 1e-15);
    assert!(diag.is_cp && diag.is_tp);
    assert!(diag.block_pos_min >= 0.25 - 1e-12);
}

#[test]
fn diagnose_ncp_dephasing_separates_witnesses() {
    // coherence ratio r = cos(2.4)/cos(1.5), far outside [-1, 1]
    let r = 2.4f64.cos() / 1.5f64.cos();
    let diag = diagnose(&amap_from_action(2, dephase(r)), DEFAULT_CP_TOL, 2000, 3);
    assert!((diag.min_choi_eig - (1.0 - r.abs())).abs() < 1e-10);
    assert!(!diag.is_cp);
    assert!(diag.is_tp);
    // |r| > 1 dephasing is not even positive, so some product vector goes negative
    assert!(diag.block_pos_min < 0.0);

    // the transpose map is positive but not CP: block positivity survives
    let transpose = amap_from_action(2, |r: &ComplexMatrix| r.transpose());
    let diag = diagnose(&transpose, DEFAULT_CP_TOL, 2000, 5);
    assert!((diag.min_choi_eig + 1.0).abs() < 1e-12);
    assert!(!diag.is_cp);
    assert!(diag.block_pos_min >= -1e-9);
}

#[test]
fn diagnose_reports_non_tp_and_non_hermitian() {
    let half = identity_amap(2).scale(0.5);
    let diag = diagnose(&half, DEFAULT_CP_TOL, 10, 0);
    assert!((diag.tp_defect - 0.5).abs() < 1e-15);
    assert!(!diag.is_tp && diag.is_cp);

    let mut m = ComplexMatrix::identity(4);
    m[(0, 1)] = c(0.3, 0.0);
    let diag = diagnose(&AMap::new(2, m).unwrap(), DEFAULT_CP_TOL, 10, 0);
    assert!(diag.herm_defect > 0.29);
    assert!(diag.min_choi_eig.is_nan());
    assert!(!diag.is_cp);
}

#[test]
fn diagnose_is_deterministic_per_seed() {
    let a = werner_a(0.2);
    assert_eq!(diagnose(&a, 1e-10, 500, 9), diagnose(&a, 1e-10, 500, 9));
    assert_eq!(diagnose(&a, 1e-10, 0, 9).block_pos_min, f64::INFINITY);
}

#[test]
fn kraus_identity_single_operator() {
    let ops = kraus_from_bmap(&a_to_b(&identity_amap(2)), DEFAULT_CP_TOL).unwrap();
    assert_eq!(ops.len(), 1);
    assert!(ops[0].distance(&identity2()) < 1e-12);
}

#[test]
fn kraus_full_depolarizer() {
    let ops = kraus_from_bmap(&a_to_b(&werner_a(0.0)), DEFAULT_CP_TOL).unwrap();
    assert_eq!(ops.len(), 4);
    let completeness = kraus_completeness(&ops).unwrap();
    assert!(completeness.distance(&identity2()) < 1e-10);
    // degenerate spectrum: any orthonormal basis works, but each operator has weight 1/2
    for k in &ops {
        assert!((k.frobenius_norm() - 0.5f64.sqrt()).abs() < 1e-12);
    }
    // the Kraus set reproduces the channel
    let rho = plus_state();
    let mut out = ComplexMatrix::zeros(2, 2);
    for k in &ops {
        out = &out + &k.matmul(&rho).unwrap().matmul(&k.dagger()).unwrap();
    }
    assert!(out.distance(&identity2().scale_real(0.5)) < 1e-12);
}

#[test]
fn kraus_phase_convention() {
    let ops = kraus_from_bmap(&a_to_b(&werner_a(0.4)), DEFAULT_CP_TOL).unwrap();
    for k in &ops {
        let pivot = k
            .as_slice()
            .iter()
            .copied()
            .reduce(|b, z| if z.norm() > b.norm() { z } else { b })
            .unwrap();
        assert!(pivot.im == 0.0 && pivot.re > 0.0, "{pivot}");
    }
}

#[test]
fn kraus_rejects_ncp() {
    let r = 2.4f64.cos() / 1.5f64.cos();
    let err =
        kraus_from_bmap(&a_to_b(&amap_from_action(2, dephase(r))), DEFAULT_CP_TOL).unwrap_err();
    assert!(matches!(err, DynMapError::NotCP { min_eigenvalue } if min_eigenvalue < -9.0));
}

#[test]
fn tp_map_choi_has_maximally_mixed_marginal() {
    let a = amap_from_action(2, dephase(0.3));
    let rho_ab = a_to_b(&a).choi_state();
    let marginal = rho_ab
        .partial_trace(2, 2, crate::matcore::Subsystem::First)
        .unwrap();
    assert!(marginal.distance(&identity2().scale_real(0.5)) < 1e-15);
}

#[test]
fn pauli_channel_b_form() {
    // ρ ↦ σ_k ρ σ_k for each Pauli has a rank-one B-form
    for s in [sigma_x(), sigma_y(), sigma_z()] {
        let a = amap_from_action(2, |r: &ComplexMatrix| {
            s.matmul(r).unwrap().matmul(&s).unwrap()
        });
        let eigs = sorted_eigs(&a_to_b(&a));
        assert_close_slice(&eigs, &[0.0, 0.0, 0.0, 2.0], 1e-12);
    }
}

mod file_format {
    use super::*;

    #[test]
    fn parse_identity() {
        let text = r#"{"d": 2, "kind": "A",
            "re": [[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]],
            "im": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]}"#;
        let f = MapFile::parse(text).unwrap();
        assert_eq!(f.kind, MapKind::A);
        assert_eq!(f.to_amap(), identity_amap(2));
    }

    #[test]
    fn b_kind_converts_to_a_form() {
        let b = a_to_b(&werner_a(0.5));
        let f: MapFile = MapFile::from_bmap(&b).to_json_string().parse().unwrap();
        assert_eq!(f.kind, MapKind::B);
        assert_eq!(f.to_amap(), werner_a(0.5));
    }

    #[test]
    fn syntax_error_reports_line() {
        let text = "{\n  \"d\": 2,\n  \"kind\": \"A\",\n  \"re\": [[1, 2,]]\n}";
        match MapFile::parse(text).unwrap_err() {
            MapFileError::Syntax { line, .. } => assert_eq!(line, 4),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn field_errors_name_the_field() {
        let cases = [
            (r#"{"d":0,"kind":"A","re":[],"im":[]}"#, "d"),
            (r#"{"d":100000,"kind":"A","re":[],"im":[]}"#, "d"),
            (r#"{"d":1,"kind":"A","re":[[1],[2]],"im":[[0]]}"#, "re"),
            (r#"{"d":1,"kind":"A","re":[[1]],"im":[[0,1]]}"#, "im[0]"),
        ];
        for (text, field) in cases {
            match MapFile::parse(text).unwrap_err() {
                MapFileError::Field { field: f, .. } => assert_eq!(f, field, "{text}"),
                other => panic!("{text}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn rejects_unknown_kind_and_fields() {
        assert!(matches!(
            MapFile::parse(r#"{"d":1,"kind":"C","re":[[1]],"im":[[0]]}"#),
            Err(MapFileError::Syntax { .. })
        ));
        assert!(matches!(
            MapFile::parse(r#"{"d":1,"kind":"A","re":[[1]],"im":[[0]],"x":1}"#),
            Err(MapFileError::Syntax { .. })
        ));
        assert!(matches!(
            MapFile::parse(r#"{"d":1,"kind":"A","re":[[1e999]],"im":[[0]]}"#),
            Err(MapFileError::Syntax { .. })
        ));
    }

    proptest! {
        #[test]
        fn roundtrip_preserves_values(
            entries in prop::collection::vec((-1e6f64..1e6, -1e-6f64..1e-6), 16),
            kind_b in any::<bool>(),
        ) {
            let m = ComplexMatrix::new(4, 4, entries.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap();
            let f = MapFile {
                kind: if kind_b { MapKind::B } else { MapKind::A },
                d: 2,
                matrix: m,
            };
            let back = MapFile::parse(&f.to_json_string()).unwrap();
            prop_assert_eq!(back.kind, f.kind);
            for (x, y) in back.matrix.as_slice().iter().zip(f.matrix.as_slice()) {
                prop_assert!((x - y).norm() <= 1e-15 * y.norm());
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conversion_roundtrip_is_exact(entries in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 81)) {
        let m = ComplexMatrix::new(9, 9, entries.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap();
        let a = AMap::new(3, m).unwrap();
        prop_assert_eq!(b_to_a(&a_to_b(&a)), a);
    }

    #[test]
    fn compose_is_associative(p in 0.0f64..1.0, q in 0.0f64..1.0, r in -1.0f64..1.0) {
        let (x, y, z) = (werner_a(p), amap_from_action(2, dephase(r)), werner_a(q));
        let left = compose(&compose(&x, &y).unwrap(), &z).unwrap();
        let right = compose(&x, &compose(&y, &z).unwrap()).unwrap();
        prop_assert!(left.distance(&right) <= 1e-10);
    }

    #[test]
    fn compose_matches_sequential_application(p in 0.0f64..1.0, r in -1.0f64..1.0) {
        let (first, second) = (werner_a(p), amap_from_action(2, dephase(r)));
        let composed = compose(&second, &first).unwrap();
        let rho = plus_state();
        let seq = second.apply(&first.apply(&rho).unwrap()).unwrap();
        prop_assert!(composed.apply(&rho).unwrap().distance(&seq) <= 1e-14);
    }
}
