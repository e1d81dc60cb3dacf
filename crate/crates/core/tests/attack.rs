use ccsg_core::algebra::primitive_polynomials;
use ccsg_core::attack::{
    phase1_reconstruct, phase2_search, render_trace, run_attack, Candidate, Provenance, Verdict,
};
use ccsg_core::generators::{generate, PublicParams};
use ccsg_core::linearizer::linearize_generator;
use ccsg_core::{full_attack, AttackError, BitSeq, FieldTable, Gf2Poly};

fn p(exps: &[usize]) -> Gf2Poly {
    Gf2Poly::from_exponents(exps.iter().copied())
}

fn bits(s: &str) -> Vec<bool> {
    s.chars().map(|c| c == '1').collect()
}

fn worked() -> PublicParams {
    PublicParams::new(4, 5, p(&[0, 3, 4]), p(&[0, 1, 3, 4, 5]), vec![]).unwrap()
}

const INTERCEPT: &str = "101000011001110011010011";

fn truth_stream() -> BitSeq {
    generate(&worked().with_seeds(bits("1001"), bits("10101")).unwrap(), 248)
}

/// All nonzero seeds of length `n`, optionally with the first bit set.
fn seeds(n: usize, lead: bool) -> Vec<Vec<bool>> {
    (1u32..1 << n)
        .map(|m| (0..n).map(|i| m >> i & 1 == 1).collect::<Vec<bool>>())
        .filter(|s| !lead || s[0])
        .collect()
}

#[test]
fn worked_instance_end_to_end() {
    let z = BitSeq::parse(INTERCEPT).unwrap();
    let rec = full_attack(&z, &worked()).unwrap();
    assert_eq!(rec.is1, bits("1001"));
    assert_eq!(rec.is2, bits("10101"));
    assert_eq!(rec.keystream, truth_stream());
    assert_eq!(rec.reconstructed_positions.len(), 32);
    assert_eq!(rec.stats.nodes_checked, 7);
}

#[test]
fn reconstruction_count_matches_binomial_sum() {
    // three intercepted bits per column give C(3,2) + C(3,3) = 4 new bits each
    let z = BitSeq::parse(INTERCEPT).unwrap();
    let run = run_attack(&z, &worked()).unwrap();
    let per_column: Vec<usize> = (0..8)
        .map(|m| {
            run.phase1.known.iter().filter(|&(pos, _, pr)| pos % 8 == m && pr == Provenance::Intercepted).count()
        })
        .collect();
    let binomial = |n: usize, k: usize| (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1));
    let expected: usize = per_column.iter().map(|&n| (2..=n).map(|k| binomial(n, k)).sum::<usize>()).sum();
    assert_eq!(expected, 32);
    assert_eq!(run.phase1.reconstructed_positions().len(), expected);
}

#[test]
fn trace_rendering_names_contradictions() {
    let z = BitSeq::parse(INTERCEPT).unwrap();
    let run = run_attack(&z, &worked()).unwrap();
    let text = render_trace(&run.search);
    let line = |prefix: &str| text.lines().find(|l| l.split_whitespace().next() == Some(prefix)).unwrap();
    assert!(line("101").ends_with("rejected: C2 contradicts at row 23"), "{text}");
    assert!(line("1000").ends_with("rejected: C2 contradicts at row 0"), "{text}");
    assert!(line("1001").contains("survivor (1 candidate)"), "{text}");
    let grid = run.phase1.known.render(false);
    assert!(grid.lines().any(|l| l.split_whitespace().collect::<Vec<_>>() == ["23", "1", "1", "1", "0", "1", "1", "1", "0"]));
}

#[test]
fn full_period_intercept_round_trips() {
    let truth = truth_stream();
    let rec = full_attack(&truth, &worked()).unwrap();
    assert_eq!(rec.keystream, truth);
    assert_eq!((rec.is1, rec.is2), (bits("1001"), bits("10101")));
}

#[test]
fn intercept_away_from_the_origin() {
    let truth = truth_stream();
    for origin in [1, 37, 100, 230] {
        let window: Vec<bool> = (0..24).map(|i| truth.bits()[(origin + i) % 248]).collect();
        let z = BitSeq::with_origin(window, origin);
        let run = run_attack(&z, &worked()).unwrap();
        let target = Candidate { is1: bits("1001"), is2: bits("10101") };
        assert!(run.search.candidates.contains(&target), "origin {origin}");
        for (pos, bit, _) in run.phase1.known.iter() {
            assert_eq!(bit, truth.bits()[pos], "origin {origin}, position {pos}");
        }
        if let Verdict::Unique { keystream, .. } = run.verdict {
            assert_eq!(keystream, truth);
        }
    }
}

#[test]
fn tampered_intercept_is_refused() {
    let z = bits(INTERCEPT);
    for i in 0..z.len() {
        let mut t = z.clone();
        t[i] ^= true;
        match full_attack(&BitSeq::new(t), &worked()) {
            Err(AttackError::Exhausted)
            | Err(AttackError::ConflictingReconstruction { .. })
            | Err(AttackError::RegenerationMismatch { .. }) => {}
            other => panic!("flip at {i}: {other:?}"),
        }
    }
}

#[test]
fn short_intercept_is_an_error() {
    let z = BitSeq::parse("1010100").unwrap();
    assert!(matches!(full_attack(&z, &worked()), Err(AttackError::InterceptTooShort { got: 7, need: 8 })));
}

#[test]
fn ccsg_states_are_recovered() {
    let public = PublicParams::new(3, 5, p(&[0, 1, 3]), p(&[0, 1, 2, 4, 5]), vec![0, 1, 2]).unwrap();
    let mut unique = 0;
    for is1 in seeds(3, true) {
        for is2 in seeds(5, false).into_iter().step_by(3) {
            let spec = public.with_seeds(is1.clone(), is2.clone()).unwrap();
            let truth = generate(&spec, public.period());
            let run = run_attack(&truth.prefix(12), &public).unwrap();
            let target = Candidate { is1: is1.clone(), is2: is2.clone() };
            assert!(run.search.candidates.contains(&target), "{is1:?} {is2:?}");
            if let Verdict::Unique { keystream, .. } = run.verdict {
                assert_eq!(keystream, truth);
                unique += 1;
            }
        }
    }
    assert!(unique > 0);
}

/// Small specs run over every seed pair.
fn small_specs() -> Vec<PublicParams> {
    let mut out = vec![];
    for (l1, l2) in [(2, 3), (3, 4), (2, 5), (3, 5)] {
        for c2 in primitive_polynomials(l2) {
            out.push(PublicParams::new(l1, l2, primitive_polynomials(l1).remove(0), c2, vec![]).unwrap());
        }
    }
    out
}

#[test]
fn phase1_is_sound_exhaustively() {
    for public in small_specs() {
        let d = public.columns();
        let t = public.period();
        let lin = linearize_generator(public.l1(), public.c2(), 0).unwrap();
        let ft = FieldTable::new(&lin.p).unwrap();
        for is1 in seeds(public.l1(), false) {
            for is2 in seeds(public.l2(), false) {
                let truth = generate(&public.with_seeds(is1.clone(), is2.clone()).unwrap(), t);
                for (r, origin) in [(d, 0), (2 * d, 0), (3 * d, 0), (5 * d, 0), (3 * d, 11), (4 * d, t - 3)] {
                    let window: Vec<bool> = (0..r).map(|i| truth.bits()[(origin + i) % t]).collect();
                    let z = BitSeq::with_origin(window, origin);
                    let report = phase1_reconstruct(&z, lin.pair(), &ft, public.l1()).unwrap();
                    for (pos, bit, _) in report.known.iter() {
                        assert_eq!(bit, truth.bits()[pos], "({}, {}) r={r} origin={origin}", public.l1(), public.l2());
                    }
                }
            }
        }
    }
}

#[test]
fn true_branch_is_never_pruned() {
    for public in small_specs() {
        let d = public.columns();
        let lin = linearize_generator(public.l1(), public.c2(), 0).unwrap();
        let ft = FieldTable::new(&lin.p).unwrap();
        for is1 in seeds(public.l1(), true) {
            for is2 in seeds(public.l2(), false) {
                let spec = public.with_seeds(is1.clone(), is2.clone()).unwrap();
                let z = generate(&spec, 3 * d);
                let report = phase1_reconstruct(&z, lin.pair(), &ft, public.l1()).unwrap();
                let search = phase2_search(&report.known, &public, &ft).unwrap();
                let target = Candidate { is1: is1.clone(), is2: is2.clone() };
                assert!(
                    search.stats.truncated || search.candidates.contains(&target),
                    "({}, {}) {is1:?} {is2:?}",
                    public.l1(),
                    public.l2()
                );
                assert!(search.stats.nodes_expanded <= d);
            }
        }
    }
}

#[test]
fn attack_is_deterministic() {
    let public = PublicParams::new(3, 5, p(&[0, 2, 3]), p(&[0, 2, 5]), vec![]).unwrap();
    let spec = public.with_seeds(bits("110"), bits("01101")).unwrap();
    let z = generate(&spec, 12);
    let a = run_attack(&z, &public).unwrap();
    let b = run_attack(&z, &public).unwrap();
    assert_eq!(a.search.candidates, b.search.candidates);
    assert_eq!(a.search.trace, b.search.trace);
    assert_eq!(a.verdict, b.verdict);
}
