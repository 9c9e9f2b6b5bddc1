//! One PASS/FAIL line per acceptance criterion. Exits non-zero if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wrep::suites::{certificates_suite, direct_sum_suite, golden};
use wrep_core::freegroup::{ideal_coordinates, reconstruct_from_coordinates, FreeWord, GroupRingElem};
use wrep_core::longmoody::{
    lm_apply, lm_dimension_guard, lm_dual_input_report, lm_iteration_report, lm_onedim_survey, LMConfig,
};
use wrep_core::reps::{
    burau, dual_burau, dual_reduced_burau, dual_rep, dual_tym, make_catalog_rep, permutation, reduced_burau,
    twist, tym, verify_rep, CatalogName, DualVariant, MatrixRep, RepReport,
};
use wrep_core::ring::{LaurentPoly, Vars};
use wrep_core::welded::{
    check_cond1, defining_relations, wada_extends, words_equal, ActionKind, ActionSpec, WeldedGen, WeldedWord,
    XiKind, XiSpec,
};
use wrep_core::Result;

const RELATION_SUITE_BUDGET: Duration = Duration::from_secs(10);
const RECBUR_BUDGET: Duration = Duration::from_secs(5);
const RANDOM_WORDS: usize = 1000;
const RANDOM_RANK: usize = 4;
const RANDOM_MAX_LEN: usize = 12;
const RANDOM_SEED: u64 = 0x5eed_0009;

type Criterion = fn() -> Result<Outcome>;

struct Outcome {
    ok: bool,
    summary: String,
    details: Vec<String>,
}

impl Outcome {
    fn new(ok: bool, summary: impl Into<String>) -> Self {
        Outcome { ok, summary: summary.into(), details: Vec::new() }
    }

    fn with(mut self, lines: impl IntoIterator<Item = String>) -> Self {
        self.details.extend(lines);
        self
    }
}

fn t() -> (Vars, LaurentPoly) {
    let v = Vars::new(&["t"]);
    let t = LaurentPoly::var(&v, "t").unwrap();
    (v, t)
}

fn failing_lines(r: &RepReport) -> Vec<String> {
    r.details.iter().filter(|d| !d.starts_with("[ok]")).cloned().collect()
}

fn relation_suite() -> Result<Outcome> {
    let (v, t) = t();
    let start = Instant::now();
    let mut bad = Vec::new();
    let mut checked = 0;
    for n in 2..=6 {
        let mut reps: Vec<MatrixRep> = vec![
            burau(n, &t)?,
            dual_burau(n, &t)?,
            dual_rep(&burau(n, &t)?, DualVariant::TransposeInverse)?.with_name("burau transpose-inverse"),
            tym(n, &t)?,
            dual_tym(n, &t)?,
            permutation(n, &v)?,
        ];
        if n >= 3 {
            reps.push(reduced_burau(n, &t)?);
            reps.push(dual_reduced_burau(n, &t)?);
            reps.push(
                dual_rep(&reduced_burau(n, &t)?, DualVariant::TransposeInverse)?
                    .with_name("reduced_burau transpose-inverse"),
            );
        }
        for rep in reps {
            checked += 1;
            let v = verify_rep(&rep)?;
            if !v.is_empty() {
                bad.push(format!("{} n={n}: {} violated", rep.name, v.len()));
            }
        }
    }
    let took = start.elapsed();
    let ok = bad.is_empty() && took < RELATION_SUITE_BUDGET;
    Ok(Outcome::new(ok, format!("{checked} representations verified, {:.2?} (budget {RELATION_SUITE_BUDGET:?})", took))
        .with(bad))
}

fn wada_table() -> Result<Outcome> {
    let expected: Vec<(ActionKind, bool)> = vec![
        (ActionKind::Wada1, false),
        (ActionKind::Wada2, true),
        (ActionKind::Wada3, true),
        (ActionKind::Wada4(1), true),
        (ActionKind::Wada4(2), true),
        (ActionKind::Wada4(3), true),
        (ActionKind::Wada5, true),
        (ActionKind::Wada6, false),
        (ActionKind::Wada7, false),
    ];
    let mut bad = Vec::new();
    for n in [3, 4] {
        for &(kind, want) in &expected {
            let got = wada_extends(kind, n)?.extends;
            if got != want {
                bad.push(format!("{kind} n={n}: extends={got}, expected {want}"));
            }
        }
    }
    Ok(Outcome::new(bad.is_empty(), "types 2, 3, 4 (h = 1, 2, 3), 5 extend; 1, 6, 7 do not; n = 3, 4").with(bad))
}

fn word_identities() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut count = 0;
    for n in 2..=6 {
        for rel in defining_relations(n)? {
            count += 1;
            if !words_equal(&rel.lhs, &rel.rhs)? {
                bad.push(format!("n={n}: {rel}"));
            }
        }
    }
    // ξ(a(σ_i)(x_j)) = σ_{i+1} ξ(x_j) σ_{i+1}^{-1} for j = i, i+1
    let artin = ActionSpec::artin();
    for n in 2..=5 {
        let xi = XiSpec::new(XiKind::Xi1, n);
        for i in 1..n {
            let endo = artin.generator_endo(n, WeldedGen::Sigma(i))?;
            for j in [i, i + 1] {
                count += 1;
                let lhs = xi.image(endo.image(j))?;
                let s = WeldedWord::from_gen(n + 1, WeldedGen::Sigma(i + 1))?;
                let rhs = s.mul(&xi.image(&FreeWord::generator(n, j)?)?)?.mul(&s.inverse())?;
                if !words_equal(&lhs, &rhs)? {
                    bad.push(format!("xi identity n={n} i={i} j={j}"));
                }
            }
        }
    }
    let st = WeldedWord::parse(2, "s1 t1")?;
    let ts = WeldedWord::parse(2, "t1 s1")?;
    let separated = !words_equal(&st, &ts)?;
    if !separated {
        bad.push(String::from("s1 t1 = t1 s1 in wB_2"));
    }
    Ok(Outcome::new(bad.is_empty(), format!("{count} identities hold; s1 t1 != t1 s1 in wB_2: {separated}")).with(bad))
}

fn recover_burau() -> Result<Outcome> {
    let (_, t) = t();
    let ti = t.unit_inverse()?;
    let start = Instant::now();
    let mut bad = Vec::new();
    for n in 2..=5 {
        let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, n)?;
        let out = twist(&ti, &lm_apply(&cfg, &make_catalog_rep(CatalogName::OneDim, n + 1, &t)?)?)?;
        if !out.same_images(&burau(n, &t)?) {
            bad.push(format!("n={n}: t^-1 LM(t) differs from burau"));
        }
    }
    let took = start.elapsed();
    Ok(Outcome::new(
        bad.is_empty() && took < RECBUR_BUDGET,
        format!("exact equality for n = 2..5, {took:.2?} (budget {RECBUR_BUDGET:?})"),
    )
    .with(bad))
}

fn golden_matrices() -> Result<Outcome> {
    let g = golden().expect("built-in fixtures parse");
    let r = lm_iteration_report(3, Some(&g))?;
    let entry_lines: Vec<String> = r.details.iter().filter(|d| d.contains("computed")).cloned().collect();
    let tau_ok = r.details.iter().filter(|d| d.contains("at t=q=1")).all(|d| d.starts_with("[ok]"));
    let sigma_ok = r
        .details
        .iter()
        .filter(|d| d.starts_with('[') && d.contains("(12x12)"))
        .all(|d| d.starts_with("[ok]"));
    Ok(Outcome::new(
        sigma_ok && tau_ok,
        format!(
            "12x12 s1, s2 entrywise: {}; t1, t2 at t=q=1: {}; {} fixtures compared, {} mismatching entries",
            if sigma_ok { "match" } else { "mismatch" },
            if tau_ok { "match" } else { "mismatch" },
            r.fixtures_compared,
            entry_lines.len()
        ),
    )
    .with(entry_lines))
}

fn iteration() -> Result<Outcome> {
    let g = golden().expect("built-in fixtures parse");
    let r3 = lm_iteration_report(3, Some(&g))?;
    let r4 = lm_iteration_report(4, None)?;
    let structural = |r: &RepReport| {
        r.details
            .iter()
            .filter(|d| d.starts_with('[') && !d.contains("(12x12)") && !d.contains("at t=q=1"))
            .all(|d| d.starts_with("[ok]"))
    };
    let same = r3.matched_candidate.is_some() && r3.matched_candidate == r4.matched_candidate;
    let ok = structural(&r3) && structural(&r4) && same;
    Ok(Outcome::new(
        ok,
        format!(
            "closure, sub = burau(qt), quotient n=3 {:?}, n=4 {:?}, 9x9 fixtures",
            r3.matched_candidate.as_deref().unwrap_or("none"),
            r4.matched_candidate.as_deref().unwrap_or("none")
        ),
    )
    .with(r3.details.iter().chain(&r4.details).filter(|d| d.starts_with("[FAIL]") && !d.contains("(12x12)")).cloned()))
}

fn dual_input() -> Result<Outcome> {
    let mut ok = true;
    let mut lines = Vec::new();
    for n in [3, 4] {
        let r = lm_dual_input_report(n)?;
        ok &= r.passed();
        lines.push(format!("n={n}: {}", r.matched_candidate.as_deref().unwrap_or("")));
        lines.extend(failing_lines(&r).into_iter().map(|l| format!("n={n}: {l}")));
    }
    Ok(Outcome::new(ok, "complementary closure and quotient = dual_burau(qt), n = 3, 4").with(lines))
}

fn cond1_matrix() -> Result<Outcome> {
    let artin = ActionSpec::artin();
    let mut bad = Vec::new();
    for n in 2..=5 {
        for xi in [XiKind::Xi1, XiKind::Trivial] {
            if !check_cond1(&artin, &XiSpec::new(xi, n), n)?.pass {
                bad.push(format!("artin + {xi} n={n} fails"));
            }
        }
    }
    let w2 = check_cond1(&ActionSpec::new(ActionKind::Wada2)?, &XiSpec::new(XiKind::Xi1, 3), 3)?;
    if w2.pass || w2.counterexample.is_none() {
        bad.push(String::from("wada2 + xi1 passes or has no counterexample"));
    }
    let w2_line = w2.counterexample.map(|(g, k)| format!("wada2 + xi1 counterexample ({g}, x{k})"));
    for n in 2..=5 {
        if !lm_dimension_guard(n, n) || lm_dimension_guard(n + 1, n) {
            bad.push(format!("dimension guard wrong at n={n}"));
        }
    }
    let (survey, _) = lm_onedim_survey(3)?;
    let mut lines: Vec<String> = w2_line.into_iter().collect();
    lines.extend(bad.iter().cloned());
    lines.extend(failing_lines(&survey).into_iter().filter(|l| l.starts_with("[FAIL]")));
    let ok = bad.is_empty() && survey.passed();
    Ok(Outcome::new(ok, "cond1 gate, dimension guard, and t^-1 LM(t) in {burau, permutation} for all valid pairs")
        .with(lines))
}

fn random_free(rng: &mut impl Rng, rank: usize, max_len: usize) -> Result<FreeWord> {
    let len = rng.gen_range(0..=max_len);
    let letters: Vec<(usize, i32)> =
        (0..len).map(|_| (rng.gen_range(1..=rank), if rng.gen() { 1 } else { -1 })).collect();
    FreeWord::from_signed(rank, &letters)
}

fn property_suites() -> Result<Outcome> {
    let mut bad = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(RANDOM_SEED);
    for _ in 0..RANDOM_WORDS {
        let w = random_free(&mut rng, RANDOM_RANK, RANDOM_MAX_LEN)?;
        let back = reconstruct_from_coordinates(RANDOM_RANK, &ideal_coordinates(&w))?;
        let want = GroupRingElem::from_word(&w).sub(&GroupRingElem::one(RANDOM_RANK))?;
        if back != want {
            bad.push(format!("reconstruction fails for {w}"));
        }
    }
    let (_, t) = t();
    let mut lm_checked = 0;
    for n in 2..=4 {
        let cfg = LMConfig::new(ActionSpec::artin(), XiKind::Xi1, n)?;
        for name in CatalogName::ALL {
            let rep = make_catalog_rep(name, n + 1, &t)?;
            lm_checked += 1;
            if !verify_rep(&lm_apply(&cfg, &rep)?)?.is_empty() {
                bad.push(format!("LM({name}) n={n} violates a relation"));
            }
        }
    }
    for n in [2, 3] {
        let r = direct_sum_suite(n).expect("direct sum suite runs");
        if !r.passed() {
            bad.push(format!("direct sums n={n}: {}", r.counterexample.unwrap_or_default()));
        }
    }
    Ok(Outcome::new(
        bad.is_empty(),
        format!(
            "{RANDOM_WORDS} random words (rank {RANDOM_RANK}, length <= {RANDOM_MAX_LEN}, seed {RANDOM_SEED:#x}); {lm_checked} LM outputs; 3 direct-sum instances"
        ),
    )
    .with(bad))
}

fn certificates() -> Result<Outcome> {
    let r = certificates_suite(4).expect("certificate suite runs");
    let lines = r.certificates.iter().map(|c| format!("certificate {c}")).collect::<Vec<_>>();
    Ok(Outcome::new(r.passed(), "trace separates burau/tym, det separates tym/dual_tym").with(lines))
}

fn main() {
    let criteria: [(&str, Criterion); 10] = [
        ("relation suite", relation_suite),
        ("wada table", wada_table),
        ("word identities", word_identities),
        ("burau recovery", recover_burau),
        ("golden 12x12 matrices", golden_matrices),
        ("iteration sequence", iteration),
        ("dual-input sequence", dual_input),
        ("cond1 matrix and survey", cond1_matrix),
        ("property suites", property_suites),
        ("non-equivalence certificates", certificates),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        if !o.ok {
            failed += 1;
        }
        println!("{} {:>2} {name}: {}", if o.ok { "PASS" } else { "FAIL" }, i + 1, o.summary);
        for d in &o.details {
            println!("        {d}");
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
