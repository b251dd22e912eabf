//! Acceptance suite: one pass/fail line per criterion, nonzero exit if any
//! criterion fails. Run with `cargo test -p z4lcd-cli --test acceptance`.

use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use z4lcd::lcdenum::{count_nsrf, enumerate_lcd};
use z4lcd::oracle::{dual_bruteforce, expand_code, hull_bruteforce, DEFAULT_BOUND};
use z4lcd::{CodeSpec, F2Poly, FactorKind, FactorTable, PairKind, Z4Poly};
use z4lcd_cli::wire::{CatalogWire, CountWire, FactorTableWire};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run_cli(args: &[&str]) -> Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_z4lcd"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), || {
        format!("{args:?} exited {:?}: {}", out.status.code(), String::from_utf8_lossy(&out.stderr))
    })?;
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn within(limit: Duration, start: Instant) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:?}, limit {limit:?}"))
}

fn golden_factorization() -> Outcome {
    let start = Instant::now();
    let text = run_cli(&["factor", "7"])?;
    let json = run_cli(&["--json", "factor", "7"])?;
    within(Duration::from_secs(1), start)?;

    let first = text.lines().next().unwrap_or_default();
    ensure(first == "X^7-1 = (X-1)(X^3+2X^2+X-1)(X^3-X^2+2X-1)", || format!("got {first:?}"))?;
    let table: FactorTableWire = serde_json::from_str(&json).map_err(|e| e.to_string())?;
    let got: Vec<(&str, &str)> = table.records.iter().map(|r| (r.label.as_str(), r.poly.as_str())).collect();
    let want = [("g[1,1]", "3,1"), ("f[1,7]", "3,1,2,1"), ("f*[1,7]", "3,2,3,1")];
    ensure(got == want, || format!("records {got:?}"))?;
    Ok("X^7-1 = g[1,1] f[1,7] f*[1,7] with exact coefficients".into())
}

fn golden_lcd_list() -> Outcome {
    let start = Instant::now();
    let cat: CatalogWire = serde_json::from_str(&run_cli(&["--json", "enumerate-lcd", "7"])?)
        .map_err(|e| e.to_string())?;
    let count: CountWire = serde_json::from_str(&run_cli(&["--json", "count-lcd", "7"])?)
        .map_err(|e| e.to_string())?;
    within(Duration::from_secs(1), start)?;

    let labels: Vec<&str> = cat.entries.iter().map(|e| e.label.as_str()).collect();
    ensure(labels == ["(1)", "(g[1,1])", "(f[1,7]f*[1,7])", "(0)"], || format!("labels {labels:?}"))?;
    let gens: Vec<&str> = cat.entries.iter().map(|e| e.generator.as_str()).collect();
    ensure(gens == ["1", "3,1", "1,1,1,1,1,1,1", "3,0,0,0,0,0,0,1"], || format!("generators {gens:?}"))?;
    ensure(count.count == 4 && count.nsrf == 2 && cat.nsrf == 2, || format!("count {count:?}"))?;
    Ok("(1), (g[1,1]), (f[1,7]f*[1,7]), (0); count 4 = 2^2".into())
}

/// Criteria 3 and 4 share one sweep over every partition at N = 1..9.
fn sweep() -> (Outcome, Outcome) {
    let start = Instant::now();
    let mut checked = 0u64;
    let mut hull_bad = Vec::new();
    let mut lcd_bad = Vec::new();
    for n in [1u64, 3, 5, 7, 9] {
        let table = FactorTable::build(n).expect("odd length");
        for spec in CodeSpec::all(&table) {
            checked += 1;
            let brute = hull_bruteforce(&spec, DEFAULT_BOUND).expect("within bound");
            let report = spec.hull_report();
            if report.hull_size() != Some(brute) {
                hull_bad.push(format!("N={n} {spec:?}: formula {:?} brute {brute}", report.hull_size()));
            }
            let criterion = spec.g().is_empty()
                && table
                    .divisor_poly(spec.f())
                    .and_then(|f| f.is_self_reciprocal())
                    .unwrap_or(false);
            if spec.is_lcd() != criterion || (brute == 1) != criterion {
                lcd_bad.push(format!("N={n} f={:?} g={:?}", spec.f(), spec.g()));
            }
        }
    }
    let time = within(Duration::from_secs(60), start);
    let hull = match (hull_bad.is_empty(), &time) {
        (true, Ok(())) => Ok(format!("{checked} partitions, formula = brute force")),
        (false, _) => Err(format!("{} mismatches, first {}", hull_bad.len(), hull_bad[0])),
        (true, Err(e)) => Err(e.clone()),
    };
    let lcd = if lcd_bad.is_empty() {
        Ok(format!("{checked} partitions, LCD <=> g = 1 and f self-reciprocal"))
    } else {
        Err(format!("{} exceptions, first {}", lcd_bad.len(), lcd_bad[0]))
    };
    (hull, lcd)
}

fn corollary_consistency() -> Outcome {
    for n in (1..=31u64).step_by(2) {
        let listed = enumerate_lcd(n).map_err(|e| e.to_string())?.entries.len() as u64;
        let nsrf = count_nsrf(n).map_err(|e| e.to_string())?;
        ensure(listed == 1 << nsrf, || format!("N={n}: {listed} listed, nsrf {nsrf}"))?;
        if n <= 9 {
            let table = FactorTable::build(n).unwrap();
            let swept = CodeSpec::all(&table)
                .filter(|c| hull_bruteforce(c, DEFAULT_BOUND) == Ok(1))
                .count() as u64;
            ensure(swept == listed, || format!("N={n}: swept {swept}, listed {listed}"))?;
        }
    }
    for (n, want) in [(1u64, 2usize), (7, 4), (9, 8), (15, 16)] {
        let got = enumerate_lcd(n).unwrap().entries.len();
        ensure(got == want, || format!("N={n}: {got} != {want}"))?;
    }
    Ok("odd N <= 31 agree; N=1,7,9,15 -> 2,4,8,16".into())
}

/// Trial division by every polynomial of degree 1..=deg/2.
fn irreducible_f2(p: &F2Poly) -> bool {
    let d = p.degree().unwrap_or(0);
    d >= 1
        && (2u64..1 << (d / 2 + 1)).all(|bits| {
            let c: Vec<u8> = (0..64).map(|k| (bits >> k & 1) as u8).collect();
            !p.divmod(&F2Poly::new(&c)).unwrap().1.is_zero()
        })
}

fn factorization_structure() -> Outcome {
    let start = Instant::now();
    for n in (1..=31u64).step_by(2) {
        let t = FactorTable::build(n).map_err(|e| e.to_string())?;
        let product: Z4Poly = t.records().iter().map(|r| r.poly.clone()).product();
        ensure(product == Z4Poly::x_n_minus_one(n as usize), || format!("N={n}: product {product:?}"))?;
        for r in t.records() {
            let rec = r.poly.reciprocal().map_err(|e| e.to_string())?;
            let partner = &t.records()[r.partner];
            ensure(rec == partner.poly && partner.partner == r.id, || format!("N={n}: partner of {}", r.label()))?;
            ensure((r.kind == FactorKind::SelfReciprocal) == (rec == r.poly), || format!("N={n}: kind of {}", r.label()))?;
            ensure(irreducible_f2(&r.poly.reduce_mod2()), || format!("N={n}: {} not basic irreducible", r.label()))?;
        }
        for class in t.pair_classes() {
            let block = t.records().iter().filter(|r| r.n == class.n);
            let selfrec = block.clone().filter(|r| r.kind == FactorKind::SelfReciprocal).count() as u64;
            let pairs = block.filter(|r| r.kind == FactorKind::PairFirst).count() as u64;
            let ok = match class.kind {
                PairKind::Good => (selfrec, pairs) == (class.gamma().unwrap(), 0),
                PairKind::Bad => (selfrec, pairs) == (0, class.beta().unwrap()),
            };
            ensure(ok, || format!("N={n}, n={}: {selfrec} self-reciprocal, {pairs} pairs", class.n))?;
        }
    }
    within(Duration::from_secs(10), start)?;
    Ok("odd N <= 31: products, blocks, partners, irreducibility".into())
}

fn random_unit_monic(rng: &mut ChaCha8Rng) -> Z4Poly {
    let deg = rng.random_range(1..=10);
    let mut c: Vec<i64> = (0..deg).map(|_| rng.random_range(0..4)).collect();
    c[0] = if rng.random_bool(0.5) { 1 } else { 3 };
    c.push(1);
    Z4Poly::new(&c)
}

fn property_suites() -> Outcome {
    const SAMPLES: usize = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2404);
    for k in 0..SAMPLES {
        let f = random_unit_monic(&mut rng);
        let g = random_unit_monic(&mut rng);
        let fr = f.reciprocal().map_err(|e| e.to_string())?;
        ensure(fr.reciprocal().as_ref() == Ok(&f), || format!("sample {k}: involution fails for {f:?}"))?;
        let lhs = (&f * &g).reciprocal().map_err(|e| e.to_string())?;
        ensure(lhs == &fr * &g.reciprocal().unwrap(), || format!("sample {k}: multiplicativity fails"))?;

        let a: Vec<i64> = (0..rng.random_range(0..16)).map(|_| rng.random_range(0..4)).collect();
        let a = Z4Poly::new(&a);
        let (q, r) = a.divmod_monic(&g).map_err(|e| e.to_string())?;
        ensure(&(&q * &g) + &r == a && r.degree() < g.degree(), || format!("sample {k}: divmod fails"))?;
    }
    let mut codes = 0;
    for n in [1u64, 3, 5, 7] {
        let t = FactorTable::build(n).unwrap();
        for c in CodeSpec::all(&t) {
            let code = expand_code(&c, DEFAULT_BOUND).map_err(|e| e.to_string())?;
            let dual = dual_bruteforce(&code, DEFAULT_BOUND).map_err(|e| e.to_string())?;
            ensure((code.len() * dual.len()) as u64 == 1 << (2 * n), || format!("N={n} {c:?}: |C||C^perp| wrong"))?;
            codes += 1;
        }
    }
    Ok(format!("{SAMPLES} random samples; |C||C^perp| = 4^N on {codes} codes"))
}

fn main() {
    let (hull, lcd) = sweep();
    let results: Vec<(&str, Outcome)> = vec![
        ("1 golden factorization", golden_factorization()),
        ("2 golden LCD list", golden_lcd_list()),
        ("3 hull formula = brute force", hull),
        ("4 LCD characterization", lcd),
        ("5 LCD count consistency", corollary_consistency()),
        ("6 factorization structure", factorization_structure()),
        ("7 property suites", property_suites()),
    ];
    let mut failed = 0;
    for (name, outcome) in &results {
        match outcome {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("{} of {} acceptance criteria passed", results.len() - failed, results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
