mod common;

use common::*;
use rug::ops::Pow;
use rug::{Complex, Float, Rational};
use zetalab::dirichlet::{enumerate_characters, gen_bernoulli, DirichletCharacter};
use zetalab::engine::{
    beta_eval, beta_special_negative, cosine_sum_closed_form, dirichlet_l, eta_asymptotic, eta_direct,
    eta_special_negative, evaluate, gamma, hurwitz_special_negative, hurwitz_zeta, phi_minus1, phi_special_negative,
    riemann_zeta, zeta_even_exact, CosineSum, EvalRequest, Function,
};
use zetalab::{Error, PrecisionContext, SeriesResult, Termination};

fn within(r: &SeriesResult, expected: &Complex, extra: &Float) -> bool {
    absdiff(&r.value, expected) <= Float::with_val(r.value.prec().0, &r.error_estimate + extra)
}

fn eval(f: Function, req: EvalRequest, c: &PrecisionContext) -> SeriesResult {
    evaluate(f, &req, c).unwrap()
}

fn s_of(c: &PrecisionContext, v: f64) -> Complex {
    c.complex(v)
}

/// L(s,χ) = q^{−s} Σ_b χ(b) ζ(s, b/q) from the Euler–Maclaurin oracle.
fn l_oracle(chi: &DirichletCharacter, s: f64, c: &PrecisionContext) -> Complex {
    let q = chi.modulus();
    let p = c.prec();
    let mut acc = c.zero();
    for b in 1..=q {
        let v = chi.value(b);
        if v.is_zero() {
            continue;
        }
        acc += v.to_complex(c) * hurwitz_oracle(p, s, &Rational::from((b, q)));
    }
    acc * Float::with_val(p, q).pow(-s)
}

/// −q^n/(n+1) Σ_b χ(b) B_{n+1}(b/q).
fn l_negative_oracle(chi: &DirichletCharacter, n: usize, c: &PrecisionContext) -> Complex {
    let q = chi.modulus();
    let mut acc = c.zero();
    for b in 1..=q {
        let bp = bernoulli_poly_oracle(n + 1, &Rational::from((b, q)));
        acc += chi.value(b).to_complex(c) * Float::with_val(c.prec(), &bp);
    }
    let f = Rational::from((rug::Integer::from(q).pow(n as u32), n as u64 + 1));
    -(acc * Float::with_val(c.prec(), &f))
}

#[test]
fn eta_direct_examples() {
    let c = ctx(30);
    let p = c.prec();
    let r = eta_direct(&s_of(&c, 1.0), 100_000, &c).unwrap();
    assert!(within(&r, &c_of(p, &ln2(p)), &Float::new(p)));
    let r = eta_direct(&s_of(&c, 2.0), 1000, &c).unwrap();
    assert!(within(&r, &c_of(p, &(pi(p).square() / 12u32)), &Float::new(p)));
    let r = eta_direct(&s_of(&c, 4.0), 1000, &c).unwrap();
    let v = Float::with_val(p, pi(p).pow(4u32)) * 7u32 / 720u32;
    assert!(within(&r, &c_of(p, &v), &Float::new(p)));
    assert!(matches!(eta_direct(&s_of(&c, 0.0), 10, &c), Err(Error::Domain(_))));
    assert!(matches!(eta_direct(&s_of(&c, -1.5), 10, &c), Err(Error::Domain(_))));
}

#[test]
fn eta_asymptotic_negative_integers() {
    let c = ctx(40);
    let r = eta_asymptotic(&s_of(&c, -3.0), 2, 10, &c).unwrap();
    assert_eq!(r.termination, Termination::ExactTerminating);
    assert_eq!(r.value, c_rat(c.prec(), &rat(-1, 8)));
    assert!(r.error_estimate.is_zero());
    let r = eta_asymptotic(&s_of(&c, -2.0), 3, 10, &c).unwrap();
    assert!(absdiff(&r.value, &c.zero()) <= c.epsilon());
    assert_eq!(r.termination, Termination::ExactTerminating);
}

#[test]
fn eta_asymptotic_matches_direct_sum() {
    let c = ctx(40);
    let s = s_of(&c, 3.0);
    let asym = eta_asymptotic(&s, 20, 30, &c).unwrap();
    let direct = eta_direct(&s, 1_000_000, &c).unwrap();
    assert!(absdiff(&asym.value, &direct.value) <= Float::with_val(c.prec(), &asym.error_estimate + &direct.error_estimate));
    assert!(within(&asym, &c_of(c.prec(), &eta_oracle(c.prec(), 3.0)), &c.epsilon()));
}

#[test]
fn special_negative_values() {
    assert_eq!(eta_special_negative(0), rat(1, 2));
    assert_eq!(eta_special_negative(2), 0);
    assert_eq!(eta_special_negative(1), rat(1, 4));
    assert_eq!(eta_special_negative(3), rat(-1, 8));
    assert_eq!(beta_special_negative(0), rat(1, 2));
    assert_eq!(beta_special_negative(2), rat(-1, 2));
    for n in 0..=8 {
        for a in [rat(1, 2), rat(1, 1), rat(5, 4)] {
            assert_eq!(phi_special_negative(n, &a), euler_poly_oracle(n, &a) / 2);
        }
        let a = rat(1, 3);
        let b = bernoulli_poly_oracle(n + 1, &a) / rat(n as i64 + 1, 1);
        assert_eq!(hurwitz_special_negative(n, &a), -b);
    }
}

#[test]
fn phi_examples() {
    let c = ctx(40);
    let p = c.prec();
    let s = s_of(&c, 2.5);
    let phi = phi_minus1(&s, &c.real(1), 20, 60, &c).unwrap();
    let eta = eta_asymptotic(&s, 20, 60, &c).unwrap();
    let tol = Float::with_val(p, &phi.error_estimate + &eta.error_estimate) + c.epsilon();
    assert!(absdiff(&phi.value, &eta.value) <= tol);

    for n in 0..=8u32 {
        for a in [rat(1, 2), rat(1, 1), rat(5, 4)] {
            let r = phi_minus1(&s_of(&c, -(n as f64)), &Float::with_val(p, &a), 4, 20, &c).unwrap();
            assert_eq!(r.termination, Termination::ExactTerminating);
            let e = euler_poly_oracle(n as usize, &a) / 2;
            assert!(absdiff(&r.value, &c_rat(p, &e)) <= c.epsilon() * 100u32, "n = {n}, a = {a}");
        }
    }

    // Φ(−1,2,1/2) = 2²β(2)
    let r = phi_minus1(&s_of(&c, 2.0), &c.real(0.5), 20, 60, &c).unwrap();
    let b = beta_oracle(p, 2.0) * 4u32;
    assert!(within(&r, &c_of(p, &b), &c.epsilon()));

    assert!(matches!(phi_minus1(&s, &c.real(0), 10, 10, &c), Err(Error::Domain(_))));
    assert!(matches!(phi_minus1(&s, &c.real(-0.5), 10, 10, &c), Err(Error::Domain(_))));
}

#[test]
fn beta_examples() {
    let c = ctx(40);
    let p = c.prec();
    let r = beta_eval(&s_of(&c, 1.0), 20, 60, &c).unwrap();
    assert!(within(&r, &c_of(p, &(pi(p) / 4u32)), &c.epsilon()));
    let r = beta_eval(&s_of(&c, 0.0), 5, 60, &c).unwrap();
    assert!(absdiff(&r.value, &c_f64(p, 0.5)) <= c.epsilon());
    let r = beta_eval(&s_of(&c, 2.0), 20, 60, &c).unwrap();
    assert!(within(&r, &c_of(p, &beta_oracle(p, 2.0)), &c.epsilon()));
    let r = eval(Function::Beta, EvalRequest::new(s_of(&c, 2.0)), &c);
    let catalan = c.real(Float::parse("0.9159655941772190150546035149323841107741").unwrap());
    assert!(absdiff_re(&r.value, &catalan) <= tol(p, 38));
}

#[test]
fn hurwitz_examples() {
    let c = ctx(40);
    let p = c.prec();
    let r = hurwitz_zeta(&s_of(&c, 2.0), &c.real(1), 15, 60, &c).unwrap();
    assert!(within(&r, &c_of(p, &(pi(p).square() / 6u32)), &c.epsilon()));

    let third = rat(1, 3);
    for n in 0..=6u32 {
        let r = hurwitz_zeta(&s_of(&c, -(n as f64)), &Float::with_val(p, &third), 3, 20, &c).unwrap();
        assert_eq!(r.termination, Termination::ExactTerminating);
        let e = -bernoulli_poly_oracle(n as usize + 1, &third) / rat(n as i64 + 1, 1);
        assert!(absdiff(&r.value, &c_rat(p, &e)) <= c.epsilon() * 100u32, "n = {n}");
    }

    // ζ(3,1/2) = 7ζ(3)
    let r = hurwitz_zeta(&s_of(&c, 3.0), &c.real(0.5), 15, 60, &c).unwrap();
    let z3 = zeta_oracle(p, 3.0) * 7u32;
    assert!(within(&r, &c_of(p, &z3), &c.epsilon()));
    assert!(within(&r, &c_of(p, &hurwitz_oracle(p, 3.0, &rat(1, 2))), &c.epsilon()));
}

#[test]
fn poles_carry_residues() {
    let c = ctx(30);
    let one = s_of(&c, 1.0);
    match hurwitz_zeta(&one, &c.real(0.5), 10, 10, &c) {
        Err(Error::Pole { residue, .. }) => assert_eq!(residue, "1"),
        other => panic!("expected a pole, got {other:?}"),
    }
    match riemann_zeta(&one, 10, 10, &c) {
        Err(Error::Pole { residue, .. }) => assert_eq!(residue, "1"),
        other => panic!("expected a pole, got {other:?}"),
    }
    let principal = &enumerate_characters(4).unwrap()[0];
    match dirichlet_l(&one, principal, 5, 10, &c) {
        Err(Error::Pole { residue, .. }) => assert_eq!(residue, "1/2"),
        other => panic!("expected a pole, got {other:?}"),
    }
    assert!(matches!(hurwitz_zeta(&s_of(&c, 2.0), &c.real(0), 10, 10, &c), Err(Error::Domain(_))));
    // non-principal characters are regular at s = 1: L(1,χ4) = π/4
    let chi4 = &enumerate_characters(4).unwrap()[1];
    let r = dirichlet_l(&one, chi4, 10, 120, &c).unwrap();
    assert!(within(&r, &c_of(c.prec(), &(pi(c.prec()) / 4u32)), &c.epsilon()));
}

#[test]
fn riemann_zeta_examples() {
    let c = ctx(40);
    let p = c.prec();
    let r = riemann_zeta(&s_of(&c, 2.0), 15, 60, &c).unwrap();
    assert!(within(&r, &c_of(p, &(pi(p).square() / 6u32)), &c.epsilon()));
    let r = riemann_zeta(&s_of(&c, -1.0), 2, 10, &c).unwrap();
    assert_eq!(r.value, c_rat(p, &rat(-1, 12)));
    let oracle = c_of(p, &zeta_oracle(p, 3.0));
    let published = c.real(Float::parse("1.20205690315959428539973816151144999076").unwrap());
    assert!(absdiff_re(&oracle, &published) <= tol(p, 37));
    for m in [10, 20, 40] {
        let r = riemann_zeta(&s_of(&c, 3.0), m, 80, &c).unwrap();
        assert!(within(&r, &oracle, &c.epsilon()), "m = {m}");
    }
    for k in 1..=6 {
        let z = zeta_even_exact(k, &c);
        assert!(absdiff_re(&c_of(p, &zeta_oracle(p, 2.0 * k as f64)), &z) <= tol(p, 38));
    }
}

#[test]
fn zeta_vanishes_at_first_nontrivial_zero() {
    let c = ctx(40);
    let t = c.real(Float::parse("14.134725141734693790457251983562470270784257115699").unwrap());
    let s = Complex::with_val(c.prec(), (0.5, t));
    let r = eval(Function::Zeta, EvalRequest::new(s), &c);
    assert!(Float::with_val(c.prec(), r.value.abs_ref()) <= tol(c.prec(), 35));
}

#[test]
fn dirichlet_l_examples() {
    let c = ctx(40);
    let p = c.prec();
    let one = &enumerate_characters(1).unwrap()[0];
    for s in [2.0, 3.5] {
        let l = dirichlet_l(&s_of(&c, s), one, 15, 80, &c).unwrap();
        assert!(within(&l, &c_of(p, &zeta_oracle(p, s)), &c.epsilon()), "s = {s}");
    }
    let chi4 = &enumerate_characters(4).unwrap()[1];
    let l = dirichlet_l(&s_of(&c, 2.0), chi4, 10, 120, &c).unwrap();
    let b = beta_eval(&s_of(&c, 2.0), 20, 60, &c).unwrap();
    let t = Float::with_val(p, &l.error_estimate + &b.error_estimate) + c.epsilon();
    assert!(absdiff(&l.value, &b.value) <= t);
    let l = dirichlet_l(&s_of(&c, 0.0), chi4, 2, 10, &c).unwrap();
    assert!(absdiff(&l.value, &c_f64(p, 0.5)) <= c.epsilon());
}

#[test]
fn dirichlet_l_all_characters_against_hurwitz_oracle() {
    let c = ctx(40);
    for q in [3u64, 5, 7, 8, 12] {
        for chi in enumerate_characters(q).unwrap() {
            for s in [2.0, 3.5] {
                let r = evaluate(Function::L, &EvalRequest::new(s_of(&c, s)).with_chi(chi.clone()), &c).unwrap();
                let o = l_oracle(&chi, s, &c);
                assert!(within(&r, &o, &(c.report_epsilon() * 10u32)), "q = {q}, even = {}, s = {s}", chi.is_even());
            }
        }
    }
}

#[test]
fn negative_integers_terminate_at_exact_values() {
    let c = ctx(40);
    let p = c.prec();
    let floor = |v: &Complex| c.epsilon() * 1000u32 * Float::with_val(p, v.abs_ref()).max(&Float::with_val(p, 1));
    // the terminating series themselves, with guard digits against the
    // cancellation among head terms of size m^n
    let g = PrecisionContext::with_guard(40, 40).unwrap();
    let run = |f: Function, req: EvalRequest| {
        let (m, k) = (3, 20);
        let r = match f {
            Function::Eta => eta_asymptotic(&req.s, m, k, &g),
            Function::Hurwitz => hurwitz_zeta(&req.s, req.a.as_ref().unwrap(), m, k, &g),
            Function::Phi => phi_minus1(&req.s, req.a.as_ref().unwrap(), m, k, &g),
            Function::Beta => beta_eval(&req.s, m, k, &g),
            Function::L => dirichlet_l(&req.s, req.chi.as_ref().unwrap(), m, k, &g),
            Function::Zeta => riemann_zeta(&req.s, m, k, &g),
        }
        .unwrap();
        assert_eq!(r.termination, Termination::ExactTerminating);
        // the public entry point gives the same values
        let e = eval(f, req, &c);
        assert!(absdiff(&e.value, &c.complex(&r.value)) <= c.epsilon() * 1000u32 * (Float::with_val(p, e.value.abs_ref()) + 1u32));
        c.complex(&r.value)
    };
    for n in 0..=8usize {
        let s = s_of(&c, -(n as f64));
        let v = run(Function::Eta, EvalRequest::new(s.clone()));
        let e = c_rat(p, &(euler_poly_oracle(n, &rat(1, 1)) / 2));
        assert!(absdiff(&v, &e) <= floor(&e), "eta n = {n}");

        for a in [rat(1, 2), rat(1, 1), rat(5, 4)] {
            let af = Float::with_val(p, &a);
            let v = run(Function::Hurwitz, EvalRequest::new(s.clone()).with_a(af.clone()));
            let e = c_rat(p, &(-bernoulli_poly_oracle(n + 1, &a) / rat(n as i64 + 1, 1)));
            assert!(absdiff(&v, &e) <= floor(&e), "hurwitz n = {n} a = {a}");
            let v = run(Function::Phi, EvalRequest::new(s.clone()).with_a(af));
            let e = c_rat(p, &(euler_poly_oracle(n, &a) / 2));
            assert!(absdiff(&v, &e) <= floor(&e), "phi n = {n} a = {a}");
        }

        let v = run(Function::Beta, EvalRequest::new(s.clone()));
        let e = c_rat(p, &(euler_table(n) / 2));
        assert!(absdiff(&v, &e) <= floor(&e), "beta n = {n}");

        for q in [3u64, 4, 5, 8] {
            for chi in enumerate_characters(q).unwrap() {
                let v = run(Function::L, EvalRequest::new(s.clone()).with_chi(chi.clone()));
                let e = l_negative_oracle(&chi, n, &c);
                assert!(absdiff(&v, &e) <= floor(&e), "L q = {q} n = {n}");
                // B_{n+1,χ} is built from terms of size q^{n+1}
                let g = -gen_bernoulli(&chi, n + 1, &c) / (n as u64 + 1);
                assert!(absdiff(&g, &e) <= floor(&e) * q.pow(n as u32 + 1));
            }
        }
    }
}

#[test]
fn hurwitz_multiplication_theorem() {
    let c = ctx(40);
    let p = c.prec();
    for m in [2u32, 3] {
        for s in [2.5, 3.0, 4.0] {
            for a in [rat(1, 3), rat(1, 2), rat(1, 1)] {
                let mut lhs = c.zero();
                let mut err = c.real(0);
                for k in 0..m {
                    let ak = Float::with_val(p, &a + rat(k as i64, m as i64));
                    let r = eval(Function::Hurwitz, EvalRequest::new(s_of(&c, s)).with_a(ak), &c);
                    lhs += r.value;
                    err += r.error_estimate;
                }
                let ma = Float::with_val(p, Rational::from(&a * m));
                let r = eval(Function::Hurwitz, EvalRequest::new(s_of(&c, s)).with_a(ma), &c);
                let scale = Float::with_val(p, m).pow(s);
                let rhs = Complex::with_val(p, &r.value * &scale);
                err += r.error_estimate * scale;
                assert!(absdiff(&lhs, &rhs) <= err + c.report_epsilon(), "m={m} s={s} a={a}");
            }
        }
    }
}

#[test]
fn split_identity() {
    // ζ(s,a) + Φ(−1,s,a) = 2^{1−s} ζ(s,a/2)
    let c = ctx(40);
    let p = c.prec();
    for s in [2.0, 3.5] {
        for a in [rat(1, 2), rat(1, 1)] {
            let af = Float::with_val(p, &a);
            let z = eval(Function::Hurwitz, EvalRequest::new(s_of(&c, s)).with_a(af.clone()), &c);
            let f = eval(Function::Phi, EvalRequest::new(s_of(&c, s)).with_a(af.clone()), &c);
            let h = eval(Function::Hurwitz, EvalRequest::new(s_of(&c, s)).with_a(af / 2u32), &c);
            let scale = Float::with_val(p, 2).pow(1.0 - s);
            let lhs = Complex::with_val(p, &z.value + &f.value);
            let rhs = Complex::with_val(p, &h.value * &scale);
            let err = z.error_estimate + f.error_estimate + h.error_estimate * scale + c.report_epsilon();
            assert!(absdiff(&lhs, &rhs) <= err, "s={s} a={a}");
        }
    }
}

#[test]
fn eta_zeta_bridge() {
    let c = ctx(40);
    let p = c.prec();
    for s in [2.0, 3.0, 4.5] {
        let e = eval(Function::Eta, EvalRequest::new(s_of(&c, s)), &c);
        let z = eval(Function::Zeta, EvalRequest::new(s_of(&c, s)), &c);
        let f = Float::with_val(p, 1) - Float::with_val(p, 2).pow(1.0 - s);
        let rhs = Complex::with_val(p, &z.value * &f);
        let err = e.error_estimate + z.error_estimate * f + c.report_epsilon();
        assert!(absdiff(&e.value, &rhs) <= err, "s = {s}");
    }
}

#[test]
fn optimal_truncation_contract() {
    let c = ctx(40);
    let p = c.prec();
    let mut total = 0;
    let mut bounded = 0;
    for s in [1.6, 2.0, 2.5, 3.7, 5.0] {
        for m in [2u64, 3, 5, 8, 12] {
            let sc = s_of(&c, s);
            let cases = [
                (eta_asymptotic(&sc, m, 60, &c).unwrap(), eta_oracle(p, s)),
                (riemann_zeta(&sc, m, 60, &c).unwrap(), zeta_oracle(p, s)),
                (beta_eval(&sc, m, 60, &c).unwrap(), beta_oracle(p, s)),
                (phi_minus1(&sc, &c.real(0.5), m, 60, &c).unwrap(), phi_oracle(p, s, &rat(1, 2))),
                (hurwitz_zeta(&sc, &c.real(1.25), m, 60, &c).unwrap(), hurwitz_oracle(p, s, &rat(5, 4))),
            ];
            for (r, o) in cases {
                let err = absdiff_re(&r.value, &o);
                let est = Float::with_val(p, &r.error_estimate + c.epsilon());
                total += 1;
                if err <= est {
                    bounded += 1;
                } else {
                    assert!(err <= est * 10u32, "s={s} m={m}: error beyond 10× estimate");
                }
            }
        }
    }
    assert!(bounded * 100 >= total * 95, "{bounded}/{total} bounded");
}

#[test]
fn cosine_sum_closed_forms() {
    let c = ctx(30);
    let p = c.prec();
    // −π²/18 against a 10^5-term brute sum; summation by parts bounds the
    // tail by 2 N^{−s}/sin(φ/2)
    let v = cosine_sum_closed_form(&s_of(&c, 2.0), CosineSum::Third, &c).unwrap();
    assert!(absdiff_re(&v, &(-(pi(p).square()) / 18u32)) <= c.epsilon());
    let phi = Float::with_val(p, pi(p) * 2u32 / 3u32);
    let n = 100_000u64;
    let brute = brute_sum(p, n, 2.0, |k| Float::with_val(p, &phi * k).cos());
    let bound = Float::with_val(p, 2) / Float::with_val(p, &phi / 2u32).sin() / (n as f64 * n as f64);
    assert!(absdiff_re(&v, &brute) <= bound);

    let v = cosine_sum_closed_form(&s_of(&c, 3.0), CosineSum::AltQuarter, &c).unwrap();
    assert!(absdiff_re(&v, &(eta_oracle(p, 3.0) / 8u32)) <= c.epsilon());

    let v = cosine_sum_closed_form(&s_of(&c, 2.0), CosineSum::Sixth, &c).unwrap();
    assert!(absdiff_re(&v, &(pi(p).square() / 36u32)) <= c.epsilon());

    assert!(cosine_sum_closed_form(&s_of(&c, 1.0), CosineSum::Quarter, &c).is_err());
}

#[test]
fn cosine_sum_cases_match_brute_sums() {
    let c = ctx(30);
    let p = c.prec();
    let n = 20_000u64;
    for case in CosineSum::ALL {
        let (num, den, alt) = match case {
            CosineSum::Third => (2, 3, false),
            CosineSum::Quarter => (1, 2, false),
            CosineSum::Sixth => (1, 3, false),
            CosineSum::AltThird => (2, 3, true),
            CosineSum::AltQuarter => (1, 2, true),
            CosineSum::AltSixth => (1, 3, true),
        };
        for s in [2.0, 3.0, 4.5] {
            let v = cosine_sum_closed_form(&s_of(&c, s), case, &c).unwrap();
            let phi = Float::with_val(p, pi(p) * num) / den;
            let brute = brute_sum(p, n, s, |k| {
                let t = Float::with_val(p, &phi * k).cos();
                if alt && k % 2 == 0 {
                    -t
                } else {
                    t
                }
            });
            // effective angle is φ or φ+π; sin of half of either is ≥ 1/2
            let bound = Float::with_val(p, 4) * Float::with_val(p, n).pow(-s);
            assert!(absdiff_re(&v, &brute) <= bound, "{case:?} s={s}");
        }
    }
}

#[test]
fn gamma_values() {
    let c = ctx(30);
    let p = c.prec();
    let g = gamma(&c_f64(p, 5.0), &c).unwrap();
    assert!(absdiff(&g, &c_f64(p, 24.0)) <= c.report_epsilon() * 24u32);
    let g = gamma(&c_f64(p, 0.5), &c).unwrap();
    assert!(absdiff_re(&g, &pi(p).sqrt()) <= c.report_epsilon());
}

#[test]
fn evaluation_is_deterministic() {
    let c = ctx(50);
    let req = EvalRequest::new(Complex::with_val(c.prec(), (2.5, 1.0)));
    let a = eval(Function::Zeta, req.clone(), &c);
    let b = eval(Function::Zeta, req, &c);
    assert_eq!(a.value, b.value);
    assert_eq!(a.terms_used, b.terms_used);
}
