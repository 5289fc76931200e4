mod common;

use common::{f2, f2_pool, f3, f3_pool, module, Q};
use proptest::prelude::*;
use quiver_ext::dsl::{parse_workspace, print_workspace, same_workspace};
use quiver_ext::ext2::proj_presentation;
use quiver_ext::homext::{
    arrow_shapes, ext1, hom_dim, middle_term, z_path, z_space, ArrowCochain,
};
use quiver_ext::quiver::Path;
use quiver_ext::sample::{random_coefficients, random_module};
use quiver_ext::{Error, Representation};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// `[V,U]¹` from the long exact sequence of `0 → Ω^V → P^V → V → 0`:
/// `[V,U]¹ = [Ω^V,U] − [P^V,U] + [V,U]`, using only Hom dimensions.
fn ext1_dim_from_presentation(v: &Representation, u: &Representation) -> usize {
    let pres = proj_presentation(v).unwrap();
    hom_dim(&pres.omega, u) + hom_dim(v, u) - hom_dim(&pres.p, u)
}

fn sum_of_products(v: &Representation, u: &Representation) -> usize {
    v.dims().iter().zip(u.dims()).map(|(a, b)| a * b).sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn z_dimension_formula_on_random_pairs(seed in any::<u64>()) {
        let ws = f2();
        let pool = f2_pool(&ws);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_module(&pool, &mut rng);
        let v = random_module(&pool, &mut rng);
        let lhs = z_space(&v, &u).dim() as i64;
        let rhs = ext1_dim_from_presentation(&v, &u) as i64 - hom_dim(&v, &u) as i64
            + sum_of_products(&v, &u) as i64;
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(ext1(&v, &u).dim(), ext1_dim_from_presentation(&v, &u));
    }

    #[test]
    fn derivation_law_on_f3_paths(seed in any::<u64>()) {
        let ws = f3();
        let pool = f3_pool(&ws);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_module(&pool, &mut rng);
        let v = random_module(&pool, &mut rng);
        let shapes = arrow_shapes(&v, &u);
        let n: usize = shapes.iter().map(|(r, c)| r * c).sum();
        let z = ArrowCochain::from_vector(Q, &shapes, &random_coefficients(Q, &mut rng, n, 4));
        let q = ws.algebra.quiver();
        for (p1, p2) in [(vec![0], vec![1]), (vec![2], vec![3])] {
            let (r1, r2) = (Path::new(q, p1.clone()).unwrap(), Path::new(q, p2.clone()).unwrap());
            let whole = Path::new(q, [p1, p2].concat()).unwrap();
            let expected = z_path(&z.0, &v, &u, &r1)
                .try_mul(&v.eval_path(&r2))
                .unwrap()
                .try_add(&u.eval_path(&r1).try_mul(&z_path(&z.0, &v, &u, &r2)).unwrap())
                .unwrap();
            prop_assert_eq!(z_path(&z.0, &v, &u, &whole), expected);
        }
    }

    #[test]
    fn middle_terms_are_exact(seed in any::<u64>()) {
        let ws = f2();
        let pool = f2_pool(&ws);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let u = random_module(&pool, &mut rng);
        let v = random_module(&pool, &mut rng);
        let zs = z_space(&v, &u);
        let c = random_coefficients(Q, &mut rng, zs.dim(), 5);
        let z = ArrowCochain::from_vector(Q, &arrow_shapes(&v, &u), &zs.combine(&c));
        let mt = middle_term(&v, &u, &z).unwrap();
        prop_assert!(mt.w.violated_relation().is_none());
        prop_assert!(quiver_ext::homext::is_morphism(&u, &mt.w, &mt.f));
        prop_assert!(quiver_ext::homext::is_morphism(&mt.w, &v, &mt.g));
        for x in 0..u.dims().len() {
            prop_assert!(mt.g.0[x].try_mul(&mt.f.0[x]).unwrap().is_zero());
            prop_assert_eq!(mt.f.0[x].rank(), u.dim(x));
            prop_assert_eq!(mt.g.0[x].rank(), v.dim(x));
        }
    }

    #[test]
    fn printed_workspaces_reparse(seed in any::<u64>()) {
        let mut ws = f2();
        let pool = f2_pool(&ws);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for i in 0..3 {
            let m = random_module(&pool, &mut rng);
            ws.insert_module(&format!("R{i}"), m).unwrap();
        }
        let text = print_workspace(&ws);
        let back = parse_workspace(&text).unwrap();
        prop_assert!(same_workspace(&ws, &back));
        prop_assert_eq!(print_workspace(&back), text);
    }

    /// Changing one matrix entry of P4 in F3 either keeps `ab = cd` or is
    /// rejected with the relation and module named.
    #[test]
    fn mutated_modules_are_checked(which in 0usize..4, value in -3i64..=3) {
        let ws = f3();
        let p4 = module(&ws, "P4");
        let mut entries = [1i64; 4];
        entries[which] = value;
        let src = format!(
            "vertex 1 2 3 4\narrow a : 2 -> 1\narrow b : 4 -> 2\narrow c : 3 -> 1\narrow d : 4 -> 3\n\
             relation r : a*b - c*d\nmodule X : dim 1 1 1 1\n  a = [{}]\n  b = [{}]\n  c = [{}]\n  d = [{}]\n",
            entries[0], entries[1], entries[2], entries[3]
        );
        let holds = entries[0] * entries[1] == entries[2] * entries[3];
        match parse_workspace(&src) {
            Ok(parsed) => {
                prop_assert!(holds);
                if value == 1 {
                    prop_assert_eq!(parsed.module("X").unwrap().maps(), p4.maps());
                }
            }
            Err(Error::RelationViolated { relation, module }) => {
                prop_assert!(!holds);
                prop_assert_eq!(relation, "r");
                prop_assert_eq!(module, "X");
            }
            Err(other) => prop_assert!(false, "unexpected error {}", other),
        }
    }
}
