use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use padic_res::limits::{binomial_cyclic_resultant, predicted_sign, univariate_cyclic_resultant, MaskKind};
use padic_res::link::{h1_order, whitehead_delta, whitehead_link, CoveringSpec};
use padic_res::padic::{padic_log, teichmuller, PadicApprox};
use padic_res::poly::{cyclotomic, parse_poly, IntPoly, MultiPoly};
use padic_res::resultant::{
    cyclic_resultant, resultant_prs, root_product_oracle, sylvester_resultant, CycloInt, CyclicRequest,
};

fn int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    prop::collection::vec(-9i64..=9, 1..=max_deg + 1).prop_map(|c| IntPoly::from_i64(&c))
}

fn nonzero_int_poly(max_deg: usize) -> impl Strategy<Value = IntPoly> {
    int_poly(max_deg).prop_filter("nonzero", |f| !f.is_zero())
}

fn multi_poly(nvars: usize, max_exp: u32, max_terms: usize) -> impl Strategy<Value = MultiPoly> {
    let term = (prop::collection::vec(0..=max_exp, nvars), -9i64..=9);
    prop::collection::vec(term, 1..=max_terms)
        .prop_map(move |ts| MultiPoly::from_terms(nvars, ts.into_iter().map(|(e, c)| (BigInt::from(c), e))))
        .prop_filter("nonzero", |f| !f.is_zero())
}

fn degree(f: &IntPoly) -> usize {
    f.degree().unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn swapping_arguments_gives_parity_sign(f in nonzero_int_poly(4), g in nonzero_int_poly(4)) {
        let a = sylvester_resultant(&f, &g);
        let b = sylvester_resultant(&g, &f);
        let sign = if (degree(&f) * degree(&g)) % 2 == 1 { -BigInt::one() } else { BigInt::one() };
        prop_assert_eq!(a, sign * b);
    }

    #[test]
    fn resultant_is_multiplicative(f in nonzero_int_poly(3), g in nonzero_int_poly(3), h in nonzero_int_poly(3)) {
        let gh = g.mul(&h);
        prop_assert_eq!(resultant_prs(&f, &gh), resultant_prs(&f, &g) * resultant_prs(&f, &h));
    }

    #[test]
    fn prs_matches_sylvester(f in nonzero_int_poly(6), g in nonzero_int_poly(6)) {
        prop_assert_eq!(resultant_prs(&f, &g), sylvester_resultant(&f, &g));
    }

    #[test]
    fn norm_is_resultant_with_cyclotomic(p in prop::sample::select(vec![2u64, 3, 5]), level in 1u32..=2, c in prop::collection::vec(-5i64..=5, 1..6)) {
        let x = CycloInt::from_coeffs(p, level, c.iter().map(|&v| BigInt::from(v)).collect());
        let phi = cyclotomic(p, level).unwrap();
        prop_assert_eq!(x.norm(), resultant_prs(&phi, &IntPoly::from_i64(&c)));
    }

    #[test]
    fn permuting_variables_with_levels_keeps_r(f in multi_poly(2, 3, 4), n1 in 1u32..=2, n2 in 1u32..=2, p in prop::sample::select(vec![2u64, 3])) {
        let a = cyclic_resultant(&CyclicRequest::full(f.clone(), p, vec![n1, n2]).unwrap()).unwrap();
        let b = cyclic_resultant(&CyclicRequest::full(f.permute_vars(&[1, 0]), p, vec![n2, n1]).unwrap()).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn fast_path_matches_root_product(f in multi_poly(2, 2, 4), n1 in 1u32..=2, n2 in 1u32..=2, p in prop::sample::select(vec![2u64, 3]), prime in any::<bool>()) {
        let req = if prime {
            CyclicRequest::rprime(f, p, vec![n1, n2]).unwrap()
        } else {
            CyclicRequest::full(f, p, vec![n1, n2]).unwrap()
        };
        prop_assert_eq!(cyclic_resultant(&req).unwrap(), root_product_oracle(&req).unwrap());
    }

    #[test]
    fn sign_prediction_holds(f in multi_poly(2, 2, 4), n1 in 1u32..=2, n2 in 1u32..=2, p in prop::sample::select(vec![2u64, 3, 5]), prime in any::<bool>()) {
        let kind = if prime { MaskKind::RPrime } else { MaskKind::R };
        let r = cyclic_resultant(&kind.request(&f, p, vec![n1, n2]).unwrap()).unwrap();
        prop_assume!(!r.is_zero());
        let s = predicted_sign(&f, p, kind).unwrap();
        prop_assert_eq!(s, if r.is_negative() { -1 } else { 1 });
    }

    #[test]
    fn diagonal_congruence(f in multi_poly(2, 2, 3), p in prop::sample::select(vec![2u64, 3]), k in 1u32..=2) {
        let lo = cyclic_resultant(&CyclicRequest::full(f.clone(), p, vec![k, k]).unwrap()).unwrap();
        let hi = cyclic_resultant(&CyclicRequest::full(f, p, vec![k + 1, k + 1]).unwrap()).unwrap();
        let m = BigInt::from(p).pow(k);
        prop_assert_eq!(lo.mod_floor(&m), hi.mod_floor(&m));
    }

    #[test]
    fn divisibility_is_level_independent(f in nonzero_int_poly(4), p in prop::sample::select(vec![2u64, 3, 5])) {
        let pb = BigInt::from(p);
        let at_one = f.eval_int(&BigInt::one()).mod_floor(&pb).is_zero();
        for n in 1..=3 {
            let r = univariate_cyclic_resultant(&f, p, n);
            prop_assert_eq!(r.mod_floor(&pb).is_zero(), at_one);
        }
    }

    #[test]
    fn binomial_factorization(a in -6i64..=6, b in -6i64..=6, n in 1u64..=12, p in prop::sample::select(vec![2u64, 3, 5]), big_n in 0u32..=2) {
        prop_assume!(a != 0);
        let mut c = vec![0i64; n as usize + 1];
        c[0] = b;
        c[n as usize] = a;
        let direct = univariate_cyclic_resultant(&IntPoly::from_i64(&c), p, big_n);
        prop_assert_eq!(direct, binomial_cyclic_resultant(&BigInt::from(a), n, &BigInt::from(b), p, big_n));
    }

    #[test]
    fn parse_display_round_trip(f in multi_poly(3, 4, 5)) {
        let text = f.to_canonical_string();
        prop_assert_eq!(parse_poly(&text, 3).unwrap(), f);
    }

    #[test]
    fn teichmuller_is_root_of_unity(x in 1i64..1000, p in prop::sample::select(vec![3u64, 5, 7, 11])) {
        prop_assume!(x % p as i64 != 0);
        let w = teichmuller(&BigInt::from(x), p, 6).unwrap();
        prop_assert_eq!(w.pow((p - 1) as u32), PadicApprox::from_i64(1, p, 6));
        prop_assert_eq!(w.residue().mod_floor(&BigInt::from(p)), BigInt::from(x % p as i64));
    }

    #[test]
    fn log_is_additive(a in 0i64..200, b in 0i64..200, p in prop::sample::select(vec![3u64, 5])) {
        let k = 8;
        let x = PadicApprox::from_i64(1 + p as i64 * a, p, k);
        let y = PadicApprox::from_i64(1 + p as i64 * b, p, k);
        prop_assert_eq!(padic_log(&x.mul(&y)).unwrap(), padic_log(&x).unwrap().add(&padic_log(&y).unwrap()));
    }

    #[test]
    fn padic_division_inverts_multiplication(a in 1i64..10_000, b in 1i64..10_000, p in prop::sample::select(vec![2u64, 3, 5])) {
        let x = PadicApprox::from_i64(a, p, 10);
        let y = PadicApprox::from_i64(b * p as i64 + 1, p, 10);
        prop_assert!(x.mul(&y).div(&y).unwrap().eq_mod(&x, 10));
    }
}

/// The odd Whitehead resultant reduces to one variable.
#[test]
fn odd_whitehead_reduction() {
    for p in [2u64, 3] {
        for m in 0..=2i64 {
            let delta = whitehead_delta(2 * m + 1).unwrap();
            for n1 in 1..=2u32 {
                for n2 in 1..=2u32 {
                    let lhs = cyclic_resultant(&CyclicRequest::rprime(delta.clone(), p, vec![n1, n2]).unwrap()).unwrap();
                    let q = p.pow(n2) as u32;
                    let a = IntPoly::from_i64(&[1 + m, -m]).pow(q);
                    let b = IntPoly::from_i64(&[-m, 1 + m]).pow(q);
                    let num = if p % 2 == 1 { a.add(&b) } else { a.sub(&b) };
                    let (quot, rem) = num.div_rem_monic(&IntPoly::from_i64(&[1, 1]));
                    assert!(rem.is_zero());
                    let reduced = IntPoly::from_big(vec![BigInt::one(); p.pow(n1) as usize]);
                    let rhs = resultant_prs(&reduced, &quot);
                    assert_eq!(lhs, rhs, "p={p} m={m} n=({n1},{n2})");
                }
            }
        }
    }
}

/// `prod (1 - zeta)` over `zeta^(2^n) = 1`, `zeta != +-1`, is `2^(n-1)`.
#[test]
fn product_of_one_minus_zeta() {
    for n in 1..=8u32 {
        let len = 1usize << n;
        // (t^(2^n) - 1) / (t^2 - 1) = 1 + t^2 + ... + t^(2^n - 2)
        let mut c = vec![BigInt::zero(); len - 1];
        for i in (0..len - 1).step_by(2) {
            c[i] = BigInt::one();
        }
        let r = resultant_prs(&IntPoly::from_big(c), &IntPoly::from_i64(&[1, -1]));
        assert_eq!(r, BigInt::from(2).pow(n - 1), "n={n}");
    }
}

/// `|H_1|` of a knot cover is `|Res((t^(p^n) - 1)/(t - 1), Delta)|`.
#[test]
fn knot_covers_match_reduced_resultant() {
    let delta = IntPoly::from_i64(&[1, -1, 1]);
    let link = padic_res::link::trefoil();
    for p in [2u64, 3, 5] {
        for n in 1..=3u32 {
            let h = h1_order(&link, &CoveringSpec::new(p, vec![n]).unwrap()).unwrap();
            let reduced = IntPoly::from_big(vec![BigInt::one(); p.pow(n) as usize]);
            assert_eq!(h.order, resultant_prs(&reduced, &delta).abs(), "p={p} n={n}");
        }
    }
    let _ = whitehead_link(1).unwrap();
}
