//! Acceptance criteria 1-8. Each criterion prints one PASS or FAIL line;
//! the test fails if any criterion fails.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinweave::bundles;
use spinweave::charclass::{self, Catalog};
use spinweave::groups::{self, FrameGroup};
use spinweave::suite;
use spinweave::{CheckReport, CliffordElement, Scalar, Signature, SpinSpace};

const SEED: u64 = 20240611;
const FUZZ_TRIPLES: usize = 1000;
const FUZZ_MAX_M: usize = 8;
const KAPPA_PAIRS: usize = 100;
const LPIN_SAMPLES: usize = 100;
const SPHERE_SAMPLES: usize = 100;
const QUADRIC_SAMPLES: usize = 50;
const LIMIT_ALGEBRA: Duration = Duration::from_secs(60);
const LIMIT_OBSTRUCTIONS: Duration = Duration::from_secs(1);
const LIMIT_BUNDLES: Duration = Duration::from_secs(120);

struct Outcome {
    ok: bool,
    detail: String,
}

fn collect(reports: impl IntoIterator<Item = CheckReport>) -> Outcome {
    let mut n = 0;
    let mut failed = Vec::new();
    for r in reports {
        n += 1;
        if !r.passed() {
            failed.push(format!("{}[{}]", r.check_name, r.signature.unwrap_or_default()));
        }
    }
    Outcome {
        ok: failed.is_empty(),
        detail: if failed.is_empty() { format!("{n} checks") } else { format!("failed: {}", failed.join(", ")) },
    }
}

fn timed(limit: Option<Duration>, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    o.detail = format!("{} in {:.2?}", o.detail, el);
    if let Some(l) = limit {
        if el > l {
            o.ok = false;
            o.detail = format!("{} (limit {:?})", o.detail, l);
        }
    }
    o
}

fn random_element(sig: Signature, rng: &mut ChaCha8Rng) -> CliffordElement {
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let blade = rng.gen_range(0..1u32 << sig.dim());
        (blade, Scalar::gauss(rng.gen_range(-3..=3), rng.gen_range(-2..=2)))
    });
    CliffordElement::from_terms(sig, terms)
}

fn criterion1() -> Outcome {
    timed(Some(LIMIT_ALGEBRA), || {
        let mut reports = Vec::new();
        for sig in Signature::all_up_to(7) {
            reports.extend(suite::algebra_checks(sig).unwrap());
        }
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        let sigs = Signature::all_up_to(FUZZ_MAX_M);
        let mut bad = None;
        for t in 0..FUZZ_TRIPLES {
            let sig = sigs[rng.gen_range(0..sigs.len())];
            let (a, b, c) =
                (random_element(sig, &mut rng), random_element(sig, &mut rng), random_element(sig, &mut rng));
            let assoc = &(&a * &b) * &c == &a * &(&b * &c);
            if !assoc {
                bad.get_or_insert(serde_json::json!({"triple": t, "sig": sig.to_string()}));
            }
        }
        reports.push(CheckReport::from_counterexample("associativity-fuzz", None, bad));
        for sig in sigs {
            let blades: std::collections::BTreeSet<_> =
                CliffordElement::basis(sig).flat_map(|x| x.terms().keys().copied().collect::<Vec<_>>()).collect();
            reports.push(CheckReport::new("algebra-dimension", Some(sig), blades.len() == 1 << sig.dim()));
        }
        collect(reports)
    })
}

fn criterion2() -> Outcome {
    timed(None, || collect(Signature::all_up_to(7).into_iter().flat_map(|s| suite::commutant_checks(s).unwrap())))
}

fn criterion3() -> Outcome {
    timed(None, || collect(Signature::all_up_to(6).into_iter().flat_map(|s| suite::volume_checks(s).unwrap())))
}

fn criterion4() -> Outcome {
    timed(None, || collect(Signature::all_up_to(6).into_iter().flat_map(|s| suite::group_checks(s).unwrap())))
}

fn criterion5() -> Outcome {
    timed(None, || {
        let mut reports = Vec::new();
        for sig in Signature::all_up_to(5) {
            let n = if sig.is_even() { LPIN_SAMPLES } else { KAPPA_PAIRS };
            reports.extend(suite::lipschitz_checks(sig, n, SEED).unwrap());
            let ss = SpinSpace::standard(sig).unwrap();
            let g = FrameGroup::generate(&ss).unwrap();
            reports.push(groups::parity_check(&ss, &g, "adjoint-parity"));
        }
        collect(reports)
    })
}

fn criterion6() -> Outcome {
    timed(None, || {
        collect(
            Signature::all_up_to(5).into_iter().filter(|s| !s.is_even()).flat_map(|s| suite::cartan_checks(s).unwrap()),
        )
    })
}

fn criterion7() -> Outcome {
    timed(Some(LIMIT_OBSTRUCTIONS), || {
        let cat = Catalog::builtin();
        let mut reports = Vec::new();
        let g = cat.find("G52").unwrap().obstructions();
        reports.push(CheckReport::new(
            "g52-row",
            None,
            !g.orientable && !g.spin && !g.pin_plus && !g.pin_minus && !g.spin_c && !g.pin_c,
        ));
        for name in ["G52xS1", "G52xR"] {
            let r = cat.find(name).unwrap().obstructions();
            reports.push(CheckReport::new(
                format!("{name}-lpin"),
                None,
                r.lpin && r.lpin_witness.as_deref() == Some("gamma"),
            ));
        }
        for m in 1..=16 {
            let r = charclass::projective_space_data(m).obstructions();
            let expect = m % 4 == 3 || m == 1;
            reports.push(CheckReport::new(format!("RP{m}-spin"), None, r.spin == expect));
            if m % 4 == 1 && m > 1 {
                reports.push(CheckReport::new(format!("RP{m}-not-spin"), None, !r.spin));
            }
        }
        for md in &cat.manifolds {
            reports.push(CheckReport::new(
                format!("{}-implications", md.name),
                None,
                md.obstructions().implications_hold(),
            ));
        }
        collect(reports)
    })
}

fn criterion8() -> Outcome {
    timed(Some(LIMIT_BUNDLES), || {
        let mut reports = Vec::new();
        for m in 1..=6 {
            reports.extend(bundles::sphere_checks(m, SPHERE_SAMPLES, SEED).unwrap());
            reports.extend(bundles::projective_checks(m, SPHERE_SAMPLES, SEED).unwrap());
        }
        reports.extend(bundles::quadric_checks(QUADRIC_SAMPLES, SEED).unwrap());
        for sig in Signature::all_up_to(6) {
            reports.push(bundles::exterior_check(sig));
        }
        for sig in Signature::all_up_to(4) {
            let ss = SpinSpace::standard(sig).unwrap();
            let g = FrameGroup::generate(&ss).unwrap();
            reports.extend(bundles::associated_tau_welldefined(&ss, &g).unwrap());
        }
        collect(reports)
    })
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() {
    let criteria: [Criterion; 8] = [
        ("algebra suite", criterion1),
        ("commutant and anticommutant", criterion2),
        ("volume element and Gamma", criterion3),
        ("group suite", criterion4),
        ("Lipschitz structure", criterion5),
        ("Cartan decomposition", criterion6),
        ("obstruction table", criterion7),
        ("bundle examples", criterion8),
    ];
    let mut all = true;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let o = f();
        all &= o.ok;
        println!("criterion {} {}: {} ({})", i + 1, name, if o.ok { "PASS" } else { "FAIL" }, o.detail);
    }
    if !all {
        eprintln!("some acceptance criteria failed");
        std::process::exit(1);
    }
}
