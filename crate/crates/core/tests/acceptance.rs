//! Acceptance suite: one PASS/FAIL line per criterion.

mod common;

use std::collections::BTreeSet;
use std::process::Command;
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use common::Oracle;
use wfspace::battery::finite_battery;
use wfspace::catalog::chain::{chain_is_omega_scott_open, chain_is_scott_open, chain_not_dspace_certificate, ChainRay};
use wfspace::catalog::cofinite::cofinite_checks;
use wfspace::catalog::fan::{
    fan_diagonal_refuter, fan_generic_point, fan_is_scott_open, fan_sober_check, fan_split, validate_fan_split, FanOpen,
};
use wfspace::catalog::stream::{extract_chain, verify_chain, FanColumnStream, FiniteStream, PermutedNatStream};
use wfspace::catalog::{
    chain_base_battery, chain_rejects_omega1_claims, chain_select_battery, fan_candidate_battery,
    sample_two_column_closed,
};
use wfspace::certificate::Certificate;
use wfspace::classify::{smyth_transfer_conditions, FilterMode};
use wfspace::enumerate::{all_posets, all_t0_spaces, random_poset, random_rudin_problem, random_space, random_spaces};
use wfspace::powerspace::{
    check_intersection_closure, check_sup_is_intersection, compact_saturated, smyth_space, union_map_check,
    xi_irreducibility,
};
use wfspace::product::product_sweep;
use wfspace::reflection::{all_extensions, extend_map, functor_map, product_reflection_check, reflect_omega};
use wfspace::report::mask_timing;
use wfspace::rudin::{product_rudin_checks, rudin_search};
use wfspace::{ContinuousMap, FiniteSpace, PointSet, ProductSpace, SetFamily};

type Outcome = Result<String, String>;

fn ensure(cond: bool, why: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(why())
    }
}

fn name(x: &FiniteSpace) -> String {
    format!("{} points, opens {:?}", x.len(), x.opens())
}

fn criterion_1() -> Outcome {
    let mut spaces: Vec<FiniteSpace> = Vec::new();
    for n in 1..=4 {
        spaces.extend(all_posets(n).map_err(|e| e.to_string())?.iter().map(FiniteSpace::alexandroff));
    }
    let posets = spaces.len();
    for n in 1..=3 {
        spaces.extend(all_t0_spaces(n).map_err(|e| e.to_string())?);
    }
    let generated = spaces.len() - posets;
    spaces.extend(random_spaces(20_231, 4, 5000));
    let failures: Vec<String> = spaces
        .par_iter()
        .filter_map(|x| {
            let o = Oracle::of(x);
            let x = Arc::new(x.clone());
            let battery = match finite_battery(&x) {
                Ok(b) => b,
                Err(e) => return Some(format!("{}: {e}", name(&x))),
            };
            let bad: Vec<&str> = battery.iter().filter(|(_, ok)| !ok).map(|(n, _)| *n).collect();
            let oracle_ok = o.is_sober() && o.irreducible_closed() == o.point_closures();
            (!bad.is_empty() || !oracle_ok).then(|| format!("{}: {bad:?} oracle={oracle_ok}", name(&x)))
        })
        .collect();
    ensure(failures.is_empty(), || format!("{} failures, first {}", failures.len(), failures[0]))?;
    Ok(format!("{} spaces ({posets} poset, {generated} generated, 5000 random)", spaces.len()))
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    let problems: Vec<_> = (0..1000).map(|i| random_rudin_problem(&mut rng, 1 + i % 6)).collect();
    for (i, p) in problems.iter().enumerate() {
        let o = Oracle::of(&p.base);
        let family: Vec<u64> = p.family.iter().map(|k| k.bits()).collect();
        let sol = rudin_search(p).map_err(|e| format!("case {i}: {e}"))?;
        let mut got: Vec<u64> = sol.minimal_members.iter().map(|a| a.bits()).collect();
        got.sort_unstable();
        let want = o.rudin_minimal(&family, p.closed.bits());
        ensure(got == want, || format!("case {i}: search {got:?} oracle {want:?}"))?;
        let irreducible = sol.minimal_members.iter().any(|a| o.is_irreducible(a.bits()));
        ensure(irreducible, || format!("case {i}: no irreducible minimal member"))?;
    }
    Ok("1000 problems, n ≤ 6".into())
}

fn power_checks(x: &Arc<FiniteSpace>, exhaustive_families: bool) -> Result<(), String> {
    let err = |e: wfspace::Error| format!("{}: {e}", name(x));
    let ps = smyth_space(x).map_err(err)?;
    for a in x.full().subsets().skip(1) {
        let (l, r) = xi_irreducibility(x, &ps, a).map_err(err)?;
        ensure(l == r, || format!("{}: ξ irreducibility differs on {a:?}", name(x)))?;
    }
    let ks = compact_saturated(x);
    let m = ks.len();
    let families: Vec<Vec<PointSet>> = if exhaustive_families && m <= 12 {
        (1u32..1 << m).map(|f| (0..m).filter(|i| f >> i & 1 == 1).map(|i| ks.members()[i]).collect()).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(x.opens().len() as u64);
        (0..200)
            .map(|_| {
                let size = rng.gen_range(1..=m.min(5));
                (0..size).map(|_| ks.members()[rng.gen_range(0..m)]).collect()
            })
            .collect()
    };
    for f in families {
        let fam = SetFamily::new(x.len(), f);
        ensure(check_intersection_closure(x, &fam).map_err(err)?, || format!("{}: ⋂𝒜 ≠ ⋂cl(𝒜) for {fam:?}", name(x)))?;
        ensure(check_sup_is_intersection(x, &fam).map_err(err)?.agrees, || {
            format!("{}: sup ≠ ⋂ for {fam:?}", name(x))
        })?;
    }
    if x.len() <= 3 {
        let u = union_map_check(x).map_err(err)?;
        ensure(u.unions_compact_saturated && u.continuous, || format!("{}: union map {u:?}", name(x)))?;
    }
    let t = smyth_transfer_conditions(x, FilterMode::Exhaustive).map_err(err)?;
    ensure(t.agree(), || format!("{}: Smyth transfer {t:?}", name(x)))
}

fn criterion_3() -> Outcome {
    let mut small: Vec<Arc<FiniteSpace>> = Vec::new();
    for n in 1..=3 {
        small.extend(all_t0_spaces(n).map_err(|e| e.to_string())?.into_iter().map(Arc::new));
    }
    small.par_iter().try_for_each(|x| power_checks(x, true))?;
    let sampled: Vec<Arc<FiniteSpace>> = random_spaces(33, 4, 300).into_iter().map(Arc::new).collect();
    sampled.par_iter().try_for_each(|x| power_checks(x, false))?;
    Ok(format!("{} spaces exhaustive (n ≤ 3), {} sampled (n = 4)", small.len(), sampled.len()))
}

fn named_pool() -> Vec<(&'static str, Arc<FiniteSpace>)> {
    let g = |n, sub: &[&[usize]]| {
        let sub: Vec<PointSet> = sub.iter().map(|s| PointSet::from_indices(s.iter().copied())).collect();
        Arc::new(FiniteSpace::generate(n, &sub).expect("pool spaces are T0"))
    };
    vec![
        ("point", Arc::new(FiniteSpace::point())),
        ("sierpinski", Arc::new(FiniteSpace::sierpinski())),
        ("discrete-2", Arc::new(FiniteSpace::discrete(2))),
        ("v", Arc::new(FiniteSpace::v_space())),
        ("lambda", g(3, &[&[2], &[0, 2], &[1, 2]])),
        ("chain-3", g(3, &[&[1, 2], &[2]])),
        ("discrete-3", Arc::new(FiniteSpace::discrete(3))),
        ("sierpinski+point", g(3, &[&[1], &[0, 1], &[2]])),
    ]
}

fn product_pair(a: &Arc<FiniteSpace>, b: &Arc<FiniteSpace>) -> Result<(), String> {
    let label = || format!("[{}] × [{}]", name(a), name(b));
    let err = |e: wfspace::Error| format!("{}: {e}", label());
    let p = ProductSpace::new(vec![a.clone(), b.clone()]).map_err(err)?;
    let sweep = product_sweep(&p).map_err(err)?;
    ensure(sweep.all_pass(), || format!("{}: closure/box failures {:?}", label(), sweep.failures))?;
    let rudin = product_rudin_checks(&[a.clone(), b.clone()]).map_err(err)?;
    ensure(rudin.all_pass(), || format!("{}: {rudin:?}", label()))?;
    let refl = product_reflection_check(&[a.clone(), b.clone()]).map_err(err)?;
    ensure(refl.all_pass(), || format!("{}: {refl:?}", label()))
}

fn criterion_4() -> Outcome {
    let pool = named_pool();
    let pairs: Vec<(Arc<FiniteSpace>, Arc<FiniteSpace>)> =
        pool.iter().flat_map(|(_, a)| pool.iter().map(move |(_, b)| (a.clone(), b.clone()))).collect();
    pairs.par_iter().try_for_each(|(a, b)| product_pair(a, b))?;
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    let seeded: Vec<(Arc<FiniteSpace>, Arc<FiniteSpace>)> = (0..200)
        .map(|_| {
            let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=3));
            (Arc::new(random_space(&mut rng, n)), Arc::new(random_space(&mut rng, m)))
        })
        .collect();
    seeded.par_iter().try_for_each(|(a, b)| product_pair(a, b))?;
    Ok(format!("{} pool pairs, {} seeded pairs", pairs.len(), seeded.len()))
}

fn random_map(rng: &mut ChaCha8Rng, x: &Arc<FiniteSpace>, y: &Arc<FiniteSpace>) -> ContinuousMap {
    let mut maps = Oracle::of(x).continuous_maps(&Oracle::of(y));
    let t = maps.swap_remove(rng.gen_range(0..maps.len()));
    ContinuousMap::new(x.clone(), y.clone(), t).expect("oracle maps are continuous")
}

fn criterion_5() -> Outcome {
    let mut spaces: Vec<Arc<FiniteSpace>> = Vec::new();
    for n in 1..=3 {
        spaces.extend(all_t0_spaces(n).map_err(|e| e.to_string())?.into_iter().map(Arc::new));
    }
    let refls = spaces.iter().map(reflect_omega).collect::<Result<Vec<_>, _>>().map_err(|e| e.to_string())?;
    let counts: Vec<usize> = spaces
        .par_iter()
        .zip(&refls)
        .map(|(x, rx)| {
            let mut maps = 0;
            for y in &spaces {
                for t in Oracle::of(x).continuous_maps(&Oracle::of(y)) {
                    let f = ContinuousMap::new(x.clone(), y.clone(), t).map_err(|e| e.to_string())?;
                    let ext = extend_map(&f, rx).map_err(|e| format!("{}: {e}", name(x)))?;
                    ensure(rx.eta.then(&ext).map_err(|e| e.to_string())?.table() == f.table(), || {
                        format!("f*∘η ≠ f for {:?}", f.table())
                    })?;
                    let all = all_extensions(&f, rx).map_err(|e| e.to_string())?;
                    ensure(all == vec![ext], || {
                        format!("{} extensions of {:?} from {}", all.len(), f.table(), name(x))
                    })?;
                    maps += 1;
                }
            }
            Ok(maps)
        })
        .collect::<Result<Vec<_>, String>>()?;
    let maps: usize = counts.iter().sum();

    let mut rng = ChaCha8Rng::seed_from_u64(55);
    for case in 0..200 {
        let dims: Vec<usize> = (0..3).map(|_| rng.gen_range(1..=3)).collect();
        let [x, y, z] = [0, 1, 2].map(|i| Arc::new(random_space(&mut rng, dims[i])));
        let f = random_map(&mut rng, &x, &y);
        let g = random_map(&mut rng, &y, &z);
        let err = |e: wfspace::Error| format!("case {case}: {e}");
        let (rx, ry, rz) =
            (reflect_omega(&x).map_err(err)?, reflect_omega(&y).map_err(err)?, reflect_omega(&z).map_err(err)?);
        let id = functor_map(&ContinuousMap::identity(x.clone()), &rx, &rx).map_err(err)?;
        ensure(id.table().iter().enumerate().all(|(i, &j)| i == j), || format!("case {case}: identity law"))?;
        let gf = functor_map(&f.then(&g).map_err(err)?, &rx, &rz).map_err(err)?;
        let composed =
            functor_map(&f, &rx, &ry).map_err(err)?.then(&functor_map(&g, &ry, &rz).map_err(err)?).map_err(err)?;
        ensure(gf.table() == composed.table(), || format!("case {case}: composition law"))?;
    }
    Ok(format!("{maps} maps over {} spaces, 200 composable pairs", spaces.len()))
}

fn criterion_6() -> Outcome {
    // (a) chain
    let top = ChainRay::top();
    ensure(chain_is_omega_scott_open(&top) && !chain_is_scott_open(&top), || "{ω₁} openness".into())?;
    chain_not_dspace_certificate().check().map_err(|e| e.to_string())?;
    let sel = chain_select_battery(61, 500);
    ensure(sel.is_empty(), || format!("selection failures: {sel:?}"))?;
    ensure(chain_rejects_omega1_claims(500), || "a family claiming sup ω₁ was accepted".into())?;
    let base = chain_base_battery(62, 50);
    ensure(base.is_empty(), || format!("base failures at {base:?}"))?;

    // (b) fan
    for (i, cand) in fan_candidate_battery().into_iter().enumerate() {
        let cert = fan_diagonal_refuter(cand, 64).map_err(|e| format!("candidate {i}: {e}"))?;
        cert.check().map_err(|e| format!("candidate {i}: {e}"))?;
        let Certificate::FanNotFirstCountable { witnesses, .. } = &cert else {
            return Err(format!("candidate {i}: wrong certificate kind"));
        };
        ensure(witnesses.len() == 65, || format!("candidate {i}: {} witnesses", witnesses.len()))?;
    }
    ensure(fan_sober_check().sober, || "fan not sober".into())?;
    for c in sample_two_column_closed(200) {
        ensure(fan_generic_point(&c).is_none(), || format!("{c:?} has a generic point"))?;
        let (f1, f2) = fan_split(&c).ok_or_else(|| format!("{c:?} does not split"))?;
        ensure(validate_fan_split(&c, &f1, &f2), || format!("bad split of {c:?}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(63);
    let thr = |rng: &mut ChaCha8Rng| if rng.gen_bool(0.2) { None } else { Some(rng.gen_range(0..=5)) };
    for i in 0..1000 {
        let mut u = FanOpen {
            has_bottom: rng.gen_bool(0.1),
            has_top: rng.gen_bool(0.7),
            default: thr(&mut rng),
            exceptions: Default::default(),
        };
        for _ in 0..rng.gen_range(0..4) {
            let col = rng.gen_range(0..=5);
            u.exceptions.insert(col, thr(&mut rng));
        }
        ensure(fan_is_scott_open(&u) == common::fan_sublattice_open(&u), || format!("open {i}: {u:?}"))?;
    }

    // (c) cofinite
    let r = cofinite_checks();
    r.not_sober.check().map_err(|e| e.to_string())?;
    r.not_omega_wf.check().map_err(|e| e.to_string())?;
    ensure(r.whole_in_m_family && r.whole_minimal && r.family_filtered, || format!("minimality: {r:?}"))?;
    ensure(r.whole_not_directed_closure && r.d_space, || format!("RD_ω/D_c separation: {r:?}"))?;
    Ok("chain, fan and cofinite certificates re-check".into())
}

fn criterion_7() -> Outcome {
    let k = 32;
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for case in 0..100 {
        let seed = rng.gen();
        let ok = match case % 3 {
            0 => {
                let n = rng.gen_range(1..=8);
                let p = random_poset(&mut rng, n);
                let top = rng.gen_range(0..n);
                let below = p.down(top);
                let members: PointSet = below.iter().filter(|&i| i == top || rng.gen_bool(0.5)).collect();
                let mut s = FiniteStream::new(p, members, seed).map_err(|e| e.to_string())?;
                let c = extract_chain(&mut s, k).map_err(|e| e.to_string())?;
                verify_chain(&s, &c) && c.chain[k - 1] == top
            }
            1 => {
                let mut s = FanColumnStream::new(rng.gen_range(0..20), rng.gen_range(0..20));
                let c = extract_chain(&mut s, k).map_err(|e| e.to_string())?;
                verify_chain(&s, &c)
            }
            _ => {
                let mut s = PermutedNatStream::new(seed, rng.gen_range(1..12));
                let c = extract_chain(&mut s, k).map_err(|e| e.to_string())?;
                verify_chain(&s, &c)
            }
        };
        ensure(ok, || format!("stream {case}"))?;
    }
    Ok("100 streams, k = 32".into())
}

fn criterion_8() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_workbench"))
            .args(["fuzz", "--n", "4", "--cases", "1000", "--seed", "7"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.success(), || format!("exit {:?}", out.status.code()))?;
        let text = String::from_utf8(out.stdout).map_err(|e| e.to_string())?;
        mask_timing(&text).map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    ensure(a == b, || "reports differ".into())?;
    let distinct: BTreeSet<&str> = [a.as_str(), b.as_str()].into();
    Ok(format!("{} bytes, {} distinct report", a.len(), distinct.len()))
}

type Criterion = (&'static str, fn() -> Outcome, Duration);

fn main() {
    let criteria: [Criterion; 8] = [
        ("1 exhaustive finite suite", criterion_1, Duration::from_secs(120)),
        ("2 rudin oracle equivalence", criterion_2, Duration::from_secs(60)),
        ("3 power-space theorems", criterion_3, Duration::MAX),
        ("4 product theorems", criterion_4, Duration::MAX),
        ("5 universal property", criterion_5, Duration::MAX),
        ("6 catalog certificates", criterion_6, Duration::from_secs(60)),
        ("7 extract_chain", criterion_7, Duration::MAX),
        ("8 determinism", criterion_8, Duration::MAX),
    ];
    let mut failed = 0;
    for (label, run, budget) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > budget => Err(format!("{msg}; took {elapsed:.1?}, budget {budget:?}")),
            other => other,
        };
        match outcome {
            Ok(msg) => println!("PASS criterion {label}: {msg} ({elapsed:.2?})"),
            Err(msg) => {
                failed += 1;
                println!("FAIL criterion {label}: {msg} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
