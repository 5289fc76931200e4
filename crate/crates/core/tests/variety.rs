mod common;

use common::{f2, f2_pool, f3, module, Q};
use quiver_ext::ext2::{ext2_via_omega, proj_presentation};
use quiver_ext::homext::{
    arrow_shapes, direct_sum, ext1, hom_dim, iso_test, middle_term, z_space, ArrowCochain,
};
use quiver_ext::quiver::a_of_d;
use quiver_ext::sample::{random_coefficients, random_group_element, random_module};
use quiver_ext::variety::{
    degeneration_witness_search, dual_module, dual_number_oracle, ext_tangent_pairs, gl_action,
    hom_tangent_pairs, id_le1, left_comp_surjectivity, orbit_dim, pd_le1, psi_map, regularity_certificate,
    scaling_element, scaling_family, tangent_block_decomposition, tangent_module_variety, verify_witness,
    Verdict,
};
use quiver_ext::{Matrix, Representation, Scalar};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn s1_and_s2p3() -> (Representation, Representation, Representation) {
    let ws = f2();
    (module(&ws, "M"), module(&ws, "S1"), module(&ws, "S2_P3"))
}

#[test]
fn group_action_axioms() {
    let ws = f2();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for m in f2_pool(&ws) {
        let id: Vec<Matrix> = m.dims().iter().map(|&d| Matrix::identity(Q, d)).collect();
        assert_eq!(gl_action(&id, &m).unwrap(), m);
        let g = random_group_element(Q, &mut rng, m.dims(), 4);
        let h = random_group_element(Q, &mut rng, m.dims(), 4);
        let gh: Vec<Matrix> = g.iter().zip(&h).map(|(a, b)| a.try_mul(b).unwrap()).collect();
        let lhs = gl_action(&gh, &m).unwrap();
        let rhs = gl_action(&g, &gl_action(&h, &m).unwrap()).unwrap();
        assert_eq!(lhs, rhs);
        assert!(iso_test(&lhs, &m, 2).is_yes());
    }
}

#[test]
fn scaling_a_projective() {
    let ws = f2();
    let p2 = module(&ws, "P2");
    let g = vec![Matrix::identity(Q, 1), Matrix::from_i64(Q, 1, 1, &[2]), Matrix::identity(Q, 0)];
    let moved = gl_action(&g, &p2).unwrap();
    let half = Q.from_ratio(&1.into(), &2.into()).unwrap();
    assert_eq!(moved.map(0).get(0, 0), &half);
    assert!(iso_test(&moved, &p2, 1).is_yes());
}

#[test]
fn orbit_dimensions() {
    let ws = f2();
    assert_eq!(orbit_dim(&module(&ws, "M")).orbit_dim, 3);
    assert_eq!(orbit_dim(&module(&ws, "N")).orbit_dim, 2);
    let ss = Representation::semisimple(ws.algebra.clone(), vec![1, 1, 1]);
    assert_eq!(orbit_dim(&ss).orbit_dim, 0);
}

#[test]
fn tangent_dimensions() {
    let ws = f2();
    let n = module(&ws, "N");
    assert_eq!(tangent_module_variety(&n).dim(), 3);
    let m = module(&ws, "M");
    let bound = ws.algebra.bound();
    assert_eq!(tangent_module_variety(&m).dim() as i64, a_of_d(bound, m.dims()));
    // at the zero point the derivative of ab vanishes, so ℤ is all of 𝔸
    let ss = Representation::semisimple(ws.algebra.clone(), vec![1, 1, 1]);
    assert_eq!(tangent_module_variety(&ss).dim(), 2);
}

#[test]
fn tangent_blocks_at_the_degeneration() {
    let (_, u, v) = s1_and_s2p3();
    let blocks = tangent_block_decomposition(&u, &v);
    assert_eq!((blocks.uu, blocks.vv, blocks.uv, blocks.vu), (0, 2, 0, 1));
    assert_eq!(blocks.sum(), 3);
    assert_eq!(blocks.total, 3);

    let zero = Representation::zero(u.algebra().clone());
    let b = tangent_block_decomposition(&zero, &v);
    assert_eq!((b.uu, b.vv, b.uv, b.vu), (0, z_space(&v, &v).dim(), 0, 0));
}

#[test]
fn tangent_blocks_sum_on_random_pairs() {
    let ws = f2();
    let pool = f2_pool(&ws);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..25 {
        let u = random_module(&pool, &mut rng);
        let v = random_module(&pool, &mut rng);
        let b = tangent_block_decomposition(&u, &v);
        assert_eq!(b.sum(), b.total);
    }
}

#[test]
fn tangent_pairs_at_the_degeneration() {
    let (_, u, v) = s1_and_s2p3();
    let hom = hom_tangent_pairs(&u, &v);
    assert_eq!(hom.dim(), 2);
    assert_eq!(hom.domain_dim(), 2);
    let ext = ext_tangent_pairs(&u, &v).unwrap();
    assert_eq!(ext.dim(), 2);
    assert!(ext.contains(&vec![Q.zero(); ext.domain_dim()]));
}

#[test]
fn hom_tangent_pairs_on_equal_modules() {
    let ws = f2();
    for name in ["N", "M", "S2_P3"] {
        let n = module(&ws, name);
        let pairs = hom_tangent_pairs(&n, &n);
        let bnn = quiver_ext::homext::b_space(&n, &n);
        // f = id is a morphism, so every pair has Z′ − Z″ ∈ 𝔹^{N,N}
        for c in pairs.pairs.vectors() {
            let (a, b) = pairs.split(c);
            let diff = a.add(&b.scale(&Q.from_i64(-1)));
            assert!(bnn.contains(&diff.to_vector()));
        }
        let k = pairs.zuu.dim();
        assert!(pairs.contains(&vec![Q.zero(); 2 * k]));
    }
}

#[test]
fn psi_at_the_f2_degeneration() {
    let (_, u, v) = s1_and_s2p3();
    let zxi = ext1(&v, &u).z_basis()[0].clone();
    let psi = psi_map(&zxi, &u, &v).unwrap();
    assert_eq!(psi.target_dim, 0);
    assert!(psi.surjective());
    assert_eq!(psi.kernel_dim(), 2);
    let vu2 = ext2_via_omega(&v, &u).unwrap().dim();
    assert_eq!(psi.kernel_dim(), z_space(&u, &u).dim() + z_space(&v, &v).dim() - vu2);
}

#[test]
fn psi_on_the_f3_sequence() {
    let ws = f3();
    let (u, m, v) = (module(&ws, "radP4"), module(&ws, "P4"), module(&ws, "S4"));
    let e = ext1(&v, &u);
    assert_eq!(e.z().dim(), 1);
    let zxi = e.z_basis()[0].clone();
    assert!(iso_test(&middle_term(&v, &u, &zxi).unwrap().w, &m, 1).is_yes());
    let vu2 = ext2_via_omega(&v, &u).unwrap().dim();
    assert_eq!(vu2, 0);
    let psi = psi_map(&zxi, &u, &v).unwrap();
    assert!(psi.surjective());
    let expected = z_space(&u, &u).dim() + z_space(&v, &v).dim() - vu2;
    assert_eq!(psi.kernel_dim(), expected);
    assert_eq!(psi.kernel_dim(), 2);
    assert_eq!(ext_tangent_pairs(&u, &v).unwrap().dim(), psi.kernel_dim());
    assert!(left_comp_surjectivity(&zxi, &u, &v).unwrap().surjective());
}

#[test]
fn psi_with_split_class_and_nonzero_target() {
    let ws = f2();
    let (s1, s3) = (module(&ws, "S1"), module(&ws, "S3"));
    let zero = ArrowCochain::zero(Q, &arrow_shapes(&s3, &s1));
    let psi = psi_map(&zero, &s1, &s3).unwrap();
    assert_eq!(psi.target_dim, 1);
    assert_eq!(psi.rank, 0);
    assert!(!psi.surjective());
    let s = left_comp_surjectivity(&zero, &s1, &s3).unwrap();
    assert_eq!(s.domain_dim, 0);
    assert!(!s.surjective());
}

#[test]
fn projective_and_injective_dimension_tests() {
    let ws = f2();
    assert!(pd_le1(&module(&ws, "P3")));
    assert!(pd_le1(&module(&ws, "M")));
    assert!(!pd_le1(&module(&ws, "S3")));
    let simples: Vec<_> = ["S1", "S2", "S3"].iter().map(|n| module(&ws, n)).collect();
    for m in f2_pool(&ws) {
        let pd = simples.iter().all(|s| ext2_via_omega(&m, s).unwrap().dim() == 0);
        let id = simples.iter().all(|s| ext2_via_omega(s, &m).unwrap().dim() == 0);
        assert_eq!(pd_le1(&m), pd);
        assert_eq!(id_le1(&m).unwrap(), id);
    }
    assert!(!id_le1(&module(&ws, "S1")).unwrap());
    let d = dual_module(&module(&ws, "P2")).unwrap();
    assert_eq!(d.dims(), &[1, 1, 0]);
}

#[test]
fn scaling_conjugates_middle_terms() {
    let (_, u, v) = s1_and_s2p3();
    let z = ext1(&v, &u).z_basis()[0].clone();
    let t = Q.from_i64(5);
    let fam = scaling_family(&v, &u, &z, &Q.one()).unwrap();
    let g = scaling_element(&u, &v, &t);
    let moved = gl_action(&g, &fam.w).unwrap();
    let fifth = t.inv().unwrap();
    assert_eq!(moved, middle_term(&v, &u, &z.scale(&fifth)).unwrap().w);
    let at_zero = scaling_family(&v, &u, &z, &Q.zero()).unwrap();
    assert!(at_zero.g.is_none());
    assert_eq!(at_zero.w, direct_sum(&u, &v));
}

#[test]
fn scaling_on_random_cocycles() {
    let ws = f2();
    let pool = f2_pool(&ws);
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    let mut done = 0;
    while done < 20 {
        let u = random_module(&pool, &mut rng);
        let v = random_module(&pool, &mut rng);
        let zs = z_space(&v, &u);
        let c: Vec<Scalar> = random_coefficients(Q, &mut rng, zs.dim(), 6);
        let z = ArrowCochain::from_vector(Q, &arrow_shapes(&v, &u), &zs.combine(&c));
        let t = Q.from_i64(rand::Rng::gen_range(&mut rng, 1..=9));
        let w = middle_term(&v, &u, &z).unwrap().w;
        let moved = gl_action(&scaling_element(&u, &v, &t), &w).unwrap();
        assert_eq!(moved, middle_term(&v, &u, &z.scale(&t.inv().unwrap())).unwrap().w);
        done += 1;
    }
}

#[test]
fn witness_search_on_f2() {
    let (m, u, v) = s1_and_s2p3();
    let found = degeneration_witness_search(&m, &u, &v, 7).unwrap();
    let w = found.witness.expect("witness");
    assert!(verify_witness(&m, &u, &v, &w));

    let ws = f2();
    let (s2, s1p3) = (module(&ws, "S2"), module(&ws, "S1_P3"));
    let decoy = degeneration_witness_search(&m, &s2, &s1p3, 7).unwrap();
    assert!(decoy.witness.is_none());

    let split = degeneration_witness_search(&direct_sum(&u, &v), &u, &v, 7).unwrap();
    assert!(split.witness.is_some());

    assert!(degeneration_witness_search(&m, &u, &u, 7).is_err());
}

#[test]
fn regularity_certificate_at_the_degeneration() {
    let (m, u, v) = s1_and_s2p3();
    let w = degeneration_witness_search(&m, &u, &v, 7).unwrap().witness.unwrap();
    let r = regularity_certificate(&m, &u, &v, &w).unwrap();
    assert_eq!(r.ext_tangent_dim, Some(2));
    assert_eq!((r.z_uv, r.z_vu), (0, 1));
    assert_eq!(r.bound, Some(3));
    assert_eq!(r.a_d, 3);
    assert_eq!(r.z_nn, 3);
    assert_eq!(r.orbit_dim_n, 2);
    assert!(r.flags.all());
    assert_eq!(r.verdict, Some(Verdict::RegularTangent));
}

#[test]
fn regularity_certificate_trivial_sequence() {
    let ws = f2();
    let m = module(&ws, "M");
    let zero = Representation::zero(ws.algebra.clone());
    let w = degeneration_witness_search(&m, &zero, &m, 1).unwrap().witness.unwrap();
    let r = regularity_certificate(&m, &zero, &m, &w).unwrap();
    assert_eq!(r.bound, Some(z_space(&m, &m).dim()));
    assert_eq!(r.bound.unwrap() as i64, r.a_d);
}

#[test]
fn regularity_gate_withholds_verdict() {
    let ws = f2();
    let (u, v) = (module(&ws, "S2"), module(&ws, "S1"));
    assert_eq!(ext1(&u, &v).dim(), 1);
    let m = direct_sum(&u, &v);
    let w = degeneration_witness_search(&m, &u, &v, 3).unwrap().witness.unwrap();
    let r = regularity_certificate(&m, &u, &v, &w).unwrap();
    assert!(!r.flags.uv_ext1_zero);
    assert_eq!(r.verdict, None);
}

#[test]
fn dual_number_oracle_matches_ext_tangent_pairs() {
    let ws = f2();
    let ws3 = f3();
    let cases = [
        (module(&ws, "S1"), module(&ws, "S2_P3")),
        (module(&ws3, "radP4"), module(&ws3, "S4")),
    ];
    for (u, v) in &cases {
        let pairs = ext_tangent_pairs(u, v).unwrap();
        let zero = ArrowCochain::zero(Q, &arrow_shapes(u, u));
        let zero_v = ArrowCochain::zero(Q, &arrow_shapes(v, v));
        let base = dual_number_oracle(u, &zero, v, &zero_v).unwrap();
        assert_eq!(base.hom_dim, 2 * hom_dim(v, u));
        let n = pairs.domain_dim();
        for i in 0..n {
            let mut c = vec![Q.zero(); n];
            c[i] = Q.one();
            let (mbar, nbar) = pairs.split(&c);
            let r = dual_number_oracle(u, &mbar, v, &nbar).unwrap();
            assert_eq!(r.member(), pairs.contains(&c));
        }
    }
}

#[test]
fn dual_number_oracle_on_random_pairs() {
    let ws = f2();
    let (u, v) = (module(&ws, "S2"), module(&ws, "P2"));
    let pairs = ext_tangent_pairs(&u, &v).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..10 {
        let c = random_coefficients(Q, &mut rng, pairs.domain_dim(), 4);
        let (mbar, nbar) = pairs.split(&c);
        let r = dual_number_oracle(&u, &mbar, &v, &nbar).unwrap();
        assert_eq!(r.member(), pairs.contains(&c));
    }
}

#[test]
fn presentation_of_degeneration_module() {
    let (m, _, _) = s1_and_s2p3();
    let pres = proj_presentation(&m).unwrap();
    assert_eq!(pres.omega.total_dim() + m.total_dim(), pres.p.total_dim());
}
