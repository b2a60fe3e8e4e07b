use aode::algebra::{buchberger, solve_system, MPoly, Monomial};
use aode::arith::{rat, Rat};
use aode::Error;
use proptest::prelude::*;

const NVARS: usize = 3;

fn mpoly() -> impl Strategy<Value = MPoly> {
    let term = (prop::collection::vec(0u32..=1, NVARS), -4i64..=4);
    prop::collection::vec(term, 1..=3).prop_map(|terms| {
        MPoly::from_terms(
            NVARS,
            terms
                .into_iter()
                .map(|(e, c)| (Monomial::from_exponents(e), rat(c))),
        )
    })
}

fn point() -> impl Strategy<Value = Vec<Rat>> {
    prop::collection::vec(-3i64..=3, NVARS).prop_map(|v| v.into_iter().map(rat).collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn basis_contains_its_ideal(gens in prop::collection::vec(mpoly(), 1..=3), h in mpoly()) {
        let basis = match buchberger(&gens) {
            Err(Error::Cap(_)) => return Ok(()),
            r => r.unwrap(),
        };
        for g in &gens {
            prop_assert!(basis.contains(g));
            prop_assert!(basis.contains(&(g * &h)));
        }
        for b in basis.polys() {
            prop_assert!(basis.normal_form(b).is_zero());
        }
    }

    #[test]
    fn solutions_satisfy_the_system(raw in prop::collection::vec(mpoly(), 1..=3), a in point(), t in point()) {
        // shift each generator so that `a` is a common zero
        let gens: Vec<MPoly> = raw.iter().map(|g| g - &MPoly::constant(NVARS, g.eval(&a))).collect();
        let out = match solve_system(&gens, &[0, 1, 2]) {
            Err(Error::Cap(_)) => return Ok(()),
            r => r.unwrap(),
        };
        prop_assert!(!out.inconsistent);
        for fam in &out.families {
            let at: Vec<Rat> = fam.values.iter().map(|v| v.eval(&t)).collect();
            for g in &gens {
                prop_assert!(g.eval(&at) == rat(0), "{:?} at {:?}", g, at);
            }
        }
    }
}
