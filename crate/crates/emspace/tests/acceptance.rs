//! Acceptance criteria, one PASS/FAIL line each. All comparisons are exact;
//! the only tolerances are the wall-clock limits listed per criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use emspace::json::check_certificate_schema;
use emspace_core::delta::binomial;
use emspace_core::horn::{
    brute_force_filler, for_each_compatible_horn, horn_of, is_filler, moore_filler, nat_two_counterexample, sample_compatible_horn, solve_em,
    sweep, sweep_kan, sweep_quasicategory, HornKind, SweepConfig, SweepOutcome,
};
use emspace_core::sset::{boundary, horn, sphere, standard_simplex};
use emspace_core::{Elem, EmSimplex, EmSpace, HornProblem, Monoid};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e(v: i64) -> Elem {
    Elem::from(v)
}

fn random_elem(m: &Monoid, rng: &mut ChaCha8Rng) -> Elem {
    match m.elements() {
        Some(all) => all[rng.gen_range(0..all.len())].clone(),
        None if m.is_group() => e(rng.gen_range(-1_000_000..=1_000_000)),
        None => e(rng.gen_range(0..=1_000_000)),
    }
}

fn random_simplex(space: &EmSpace, k: usize, rng: &mut ChaCha8Rng) -> EmSimplex {
    let coords = (0..space.generators(k).len()).map(|_| random_elem(space.monoid(), rng)).collect();
    space.simplex(k, coords).unwrap()
}

fn sphere_and_level_three() -> Check {
    let dump = sphere(2, 3).to_string();
    ensure(dump == "0: *\n1: *\n2: * 012\n3: * 0012 0112 0122\n", || format!("sphere(2,3) dump was {dump:?}"))?;
    let k = EmSpace::new(Monoid::nat(), 2, 3);
    let names = |l: usize| k.generators(l).iter().map(|g| g.to_string()).collect::<Vec<_>>();
    ensure(names(2) == ["012"] && names(3) == ["0012", "0112", "0122"], || format!("Gen(2) = {:?}, Gen(3) = {:?}", names(2), names(3)))?;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..100 {
        let [a, b, c] = [0; 3].map(|_| rng.gen_range(0..=1_000_000i64));
        let x = k.simplex(3, vec![e(a), e(b), e(c)]).unwrap();
        let got: Vec<Elem> = (0..=3).map(|i| k.face(3, i, &x).unwrap().coords[0].clone()).collect();
        ensure(got == [e(a), e(a + b), e(b + c), e(c)], || format!("faces of ({a},{b},{c}) were {got:?}"))?;
    }
    Ok("levels, Gen(2), Gen(3) and 100 random face quadruples".into())
}

fn nat_two_counterexample_holds() -> Check {
    let k = EmSpace::new(Monoid::nat(), 2, 3);
    for f0 in 0..=20 {
        let faces = [(0, f0), (2, 1), (3, 3)].map(|(i, v)| (i, k.simplex(2, vec![e(v)]).unwrap()));
        let r = solve_em(&k, &HornProblem::new(3, 1, faces)).unwrap();
        let cert = r.certificate().ok_or_else(|| format!("f0 = {f0}: a filler was found"))?;
        ensure(cert.final_equation() == Some("b+3=1"), || format!("f0 = {f0}: final equation {:?}", cert.final_equation()))?;
        let report = nat_two_counterexample(e(f0)).map_err(|err| err.to_string())?;
        ensure(report.certificate == *cert, || format!("f0 = {f0}: report certificate differs"))?;
    }
    Ok("f0 = 0..20 all NoFiller ending in b+3=1".into())
}

fn group_kan() -> Check {
    let mut checked = 0;
    for m in [2, 3] {
        let space = EmSpace::new(Monoid::cyclic(m).unwrap(), 2, 3);
        let report = sweep_kan(&space, 3, None).map_err(|err| err.to_string())?;
        ensure(report.outcome == SweepOutcome::Passed { bounded_evidence: false }, || format!("K(ℤ/{m},2): {:?}", report.outcome))?;
        checked += report.horns_checked;
    }
    let z = EmSpace::new(Monoid::int_group(), 2, 4);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for t in 0..500 {
        let n = 3 + t % 2;
        let k = rng.gen_range(0..=n);
        let y = random_simplex(&z, n, &mut rng);
        let p = horn_of(&z, n, k, &y).unwrap();
        let w = moore_filler(&z, &p).map_err(|err| err.to_string())?;
        let w = w.filler().ok_or("Moore returned no filler")?;
        ensure(is_filler(&z, &p, w).unwrap(), || format!("Moore output {w:?} does not fill {p:?}"))?;
    }
    Ok(format!("{checked} horns over ℤ/2, ℤ/3 exhaustive; 500 Moore fillers over ℤ"))
}

fn nerves() -> Check {
    let mut checked = 0;
    for (m, bound) in [(Monoid::cyclic(4).unwrap(), None), (Monoid::boolean(), None), (Monoid::nat(), Some(5))] {
        let nerve = EmSpace::new(m.clone(), 1, 4);
        let cfg = SweepConfig { kind: HornKind::Inner, max_dim: 4, bound, check_uniqueness: true };
        let report = sweep(&nerve, cfg).map_err(|err| err.to_string())?;
        ensure(report.passed(), || format!("nerve of {}: {:?}", m.name(), report.outcome))?;
        checked += report.horns_checked;
    }
    Ok(format!("{checked} inner horns, n ≤ 4, each with exactly one filler"))
}

fn oracle() -> Check {
    let mut exhaustive = 0;
    let mut random = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for m in [Monoid::cyclic(2).unwrap(), Monoid::boolean(), Monoid::trivial()] {
        for degree in 1..=3 {
            let space = EmSpace::new(m.clone(), degree, 4);
            for k in 0..=3 {
                let mut mismatch = None;
                for_each_compatible_horn(&space, 3, k, None, |p| {
                    exhaustive += 1;
                    if solve_em(&space, &p)?.is_filler() != brute_force_filler(&space, &p, None)?.is_filler() {
                        mismatch = Some(p);
                        return Ok(std::ops::ControlFlow::Break(()));
                    }
                    Ok(std::ops::ControlFlow::Continue(()))
                })
                .map_err(|err| err.to_string())?;
                if let Some(p) = mismatch {
                    return Err(format!("K({},{degree}): disagreement on {p:?}", m.name()));
                }
            }
        }
        let mut done = 0;
        while done < 500 {
            let degree = rng.gen_range(1..=3);
            let space = EmSpace::new(m.clone(), degree, 4);
            let k = rng.gen_range(0..=4);
            let Some(p) = sample_compatible_horn(&space, 4, k, None, &mut |len| rng.gen_range(0..len)).unwrap() else { continue };
            let fast = solve_em(&space, &p).map_err(|err| err.to_string())?;
            let slow = brute_force_filler(&space, &p, None).map_err(|err| err.to_string())?;
            ensure(fast.is_filler() == slow.is_filler(), || format!("K({},{degree}): disagreement on {p:?}", m.name()))?;
            done += 1;
        }
        random += done;
    }
    Ok(format!("{exhaustive} exhaustive n = 3 horns, {random} random n = 4 horns"))
}

fn structure() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let monoids = [Monoid::nat(), Monoid::int_group(), Monoid::cyclic(4).unwrap(), Monoid::boolean(), Monoid::trivial()];
    let mut simplices = 0;
    for m in &monoids {
        for n in 0..=3 {
            for d in [n.max(1), 6] {
                let space = EmSpace::new(m.clone(), n, d);
                for k in 0..=d {
                    for _ in 0..200 {
                        let x = random_simplex(&space, k, &mut rng);
                        let y = random_simplex(&space, k, &mut rng);
                        if let Some(v) = space.identity_violation(k, &x).unwrap() {
                            return Err(format!("K({},{n}), D={d}: {v}", m.name()));
                        }
                        if let Some((op, i)) = space.homomorphism_violation(k, &x, &y).unwrap() {
                            return Err(format!("K({},{n}), D={d}: {op} {i} is not a homomorphism at level {k}", m.name()));
                        }
                        simplices += 1;
                    }
                }
            }
        }
    }
    for n in 0..=3 {
        let space = EmSpace::new(Monoid::nat(), n, 8);
        for k in 0..=8 {
            let got = space.generators(k).len() as u64;
            ensure(got == binomial(k, n), || format!("|Gen({k})| = {got} for n = {n}"))?;
        }
    }
    for n in 0..=3 {
        let mut sets = vec![standard_simplex(n, 5), boundary(n, 5), sphere(n, 5)];
        sets.extend((0..=n).filter(|_| n > 0).map(|k| horn(n, k, 5)));
        for x in sets {
            x.check_identities().map_err(|v| v.to_string())?;
        }
    }
    Ok(format!("{simplices} random simplices; C(k,n) counts for n ≤ 3, k ≤ 8; finite sets for n ≤ 3"))
}

fn discreteness() -> Check {
    for m in [Monoid::nat(), Monoid::int_group(), Monoid::cyclic(4).unwrap(), Monoid::boolean(), Monoid::trivial()] {
        let space = EmSpace::new(m.clone(), 0, 4);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 0..=4 {
            for _ in 0..50 {
                let x = random_simplex(&space, k, &mut rng);
                for i in 0..=k {
                    if k >= 1 {
                        ensure(space.face(k, i, &x).unwrap().coords == x.coords, || format!("K({},0): d{i} moves {x:?}", m.name()))?;
                    }
                    if k < 4 {
                        ensure(space.degeneracy(k, i, &x).unwrap().coords == x.coords, || format!("K({},0): s{i} moves {x:?}", m.name()))?;
                    }
                }
            }
        }
        let bound = (!m.is_finite()).then_some(3);
        let report = sweep_quasicategory(&space, 4, bound).map_err(|err| err.to_string())?;
        ensure(report.passed(), || format!("K({},0): {:?}", m.name(), report.outcome))?;
    }
    let point = EmSpace::new(Monoid::trivial(), 2, 4);
    for k in 0..=4 {
        let n = point.level_elements(k, None).map_or(0, |l| l.len());
        ensure(n == 1, || format!("K(1,2)[{k}] has {n} simplices"))?;
    }
    let report = sweep_quasicategory(&point, 4, None).map_err(|err| err.to_string())?;
    ensure(report.passed(), || format!("K(1,2): {:?}", report.outcome))?;
    Ok("K(M,0) operators are identities; K(1,2) is a point; both pass the inner sweep".into())
}

fn cli_determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_emspace"))
            .args(["paper-counterexample", "--format", "json"])
            .output()
            .map_err(|err| err.to_string())
    };
    let first = run()?;
    let second = run()?;
    ensure(first.status.success(), || format!("exit status {:?}", first.status.code()))?;
    ensure(first.stdout == second.stdout, || "outputs differ between runs".into())?;
    let v: serde_json::Value = serde_json::from_slice(&first.stdout).map_err(|err| err.to_string())?;
    check_certificate_schema(&v)?;
    ensure(v["result"] == "no_filler", || format!("result {}", v["result"]))?;
    Ok(format!("{} identical bytes, schema valid", first.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("1 S² and K(ℕ,2) up to level 3", sphere_and_level_three, Duration::from_secs(1)),
        ("2 K(ℕ,2) inner horn has no filler", nat_two_counterexample_holds, Duration::from_secs(1)),
        ("3 group Kan evidence", group_kan, Duration::from_secs(10)),
        ("4 nerve quasi-category evidence", nerves, Duration::from_secs(10)),
        ("5 oracle equivalence", oracle, Duration::from_secs(30)),
        ("6 structural suites", structure, Duration::from_secs(10)),
        ("7 discreteness and degeneracy", discreteness, Duration::from_secs(1)),
        ("8 CLI determinism", cli_determinism, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (name, check, limit) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let verdict = match result {
            Ok(detail) if took <= limit => format!("PASS  {name}: {detail} ({took:.2?}, limit {limit:?})"),
            Ok(_) => format!("FAIL  {name}: took {took:.2?}, limit {limit:?}"),
            Err(why) => format!("FAIL  {name}: {why} ({took:.2?})"),
        };
        if verdict.starts_with("FAIL") {
            failed += 1;
        }
        println!("{verdict}");
    }
    println!("acceptance: {} of 8 criteria passed", 8 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
