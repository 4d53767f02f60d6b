//! Acceptance gate: one line per criterion, nonzero exit on any failure.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{naturals, perturb, pointwise_le, principal_rings, ring, with_bottoms};
use euclid_core::arith::{is_prime, valuation};
use euclid_core::corpus::{product, PRODUCTS};
use euclid_core::euclidean::{
    bottom_euclidean, collapse_pair_table, is_isotone_euclidean, is_weakly_isotone_euclidean, isotone_minimization,
    nagata_product, order_type, quotient_euclidean, residual_euclidean, EuclideanError, EuclideanTable, Side,
};
use euclid_core::models::{
    check_not_l_euclidean_integers, check_not_l_euclidean_polys, order_type_of_spec, realize_ordinal, windowed_bottom,
    WindowConfig, WindowedDomain,
};
use euclid_core::ordinal::Ordinal;
use euclid_core::poset::brookfield_sum_finite;
use euclid_core::ring::square_zero_plane;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn local_artinian_order_types() -> Outcome {
    let start = Instant::now();
    let mut count = 0;
    for p in (2..=512u64).filter(|&p| is_prime(p)) {
        let mut pk = p;
        let mut k = 1;
        while pk <= 512 {
            let r = ring(&format!("Z/{pk}"));
            let t = bottom_euclidean(&r).map_err(|e| format!("Z/{pk}: {e}"))?;
            for (i, v) in naturals(&t).into_iter().enumerate() {
                let x = i as u64 + 1;
                ensure(v == valuation(x, p) as u64, || format!("Z/{pk}: value of {x} is {v}"))?;
            }
            let e = order_type(&t).map_err(|e| e.to_string())?;
            ensure(e == Ordinal::from(k), || format!("Z/{pk}: e = {e}, expected {k}"))?;
            count += 1;
            pk *= p;
            k += 1;
        }
    }
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    Ok(format!(
        "{count} prime powers up to 512, value = p-adic valuation, e = k, {secs:.2}s"
    ))
}

fn product_order_types() -> Outcome {
    let mut count = 0;
    for pair in PRODUCTS {
        let r = ring(&product(pair));
        ensure(r.size() <= 512, || format!("{} too large", r))?;
        let e1 = order_type(&bottom_euclidean(&ring(pair.0)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let e2 = order_type(&bottom_euclidean(&ring(pair.1)).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        let e = order_type(&bottom_euclidean(&r).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(e == e1.add(&e2) && e == e1.natural_sum(&e2), || {
            format!("{r}: e = {e}, e1 + e2 = {}", e1.add(&e2))
        })?;
        count += 1;
    }
    ensure(count >= 20, || format!("only {count} products"))?;
    Ok(format!("{count} products, e(R1 x R2) = e1 + e2 = e1 # e2"))
}

fn quotient_identity() -> Outcome {
    let mut checked = 0;
    let rings = principal_rings(512);
    for r in &rings {
        let t = bottom_euclidean(r).map_err(|e| e.to_string())?;
        let tables = r.tables().map_err(|e| e.to_string())?;
        for b in 1..r.size() as u32 {
            if tables.is_unit(b) {
                continue;
            }
            let q = quotient_euclidean(&t, &r.element(b)).map_err(|e| e.to_string())?;
            ensure(q.value_at_zero() == t.value(b), || {
                format!("{r}, b = {}: {} vs {}", r.fmt_index(b), q.value_at_zero(), t.value(b))
            })?;
            checked += 1;
        }
    }
    Ok(format!("{} rings, {checked} nonzero nonunits b", rings.len()))
}

fn random_below_omega_omega(rng: &mut ChaCha8Rng) -> Ordinal {
    let terms = rng.gen_range(1..=4);
    (0..terms).fold(Ordinal::zero(), |acc, _| {
        acc.add(&Ordinal::term(
            Ordinal::from(rng.gen_range(0..5u64)),
            rng.gen_range(1..6),
        ))
    })
}

fn brookfield_hessenberg() -> Outcome {
    for m in 0..=30usize {
        for n in 0..=30usize {
            let b = brookfield_sum_finite(m, n);
            let h = Ordinal::from(m as u64).natural_sum(&Ordinal::from(n as u64));
            ensure(Ordinal::from(b) == h, || {
                format!("len({}x{}) = {b}, natural sum {h}", m + 1, n + 1)
            })?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_601);
    for _ in 0..10_000 {
        let a = random_below_omega_omega(&mut rng);
        let b = random_below_omega_omega(&mut rng);
        let hs = a.natural_sum(&b);
        let lo = std::cmp::max(a.add(&b), b.add(&a));
        let hi = a.mul(&b).add(&b.mul(&a));
        ensure(lo <= hs && hs <= hi, || {
            format!("a = {a}, b = {b}: {lo} <= {hs} <= {hi} fails")
        })?;
    }
    Ok("961 chain products match; 10000 seeded nonzero pairs below w^w satisfy both bounds".to_string())
}

fn windowed_integers() -> Outcome {
    let start = Instant::now();
    let out = windowed_bottom(&WindowedDomain::Integers, &WindowConfig::integers(1024)).map_err(|e| e.to_string())?;
    for e in &out.entries {
        let n = e.size;
        let expected = 63 - n.leading_zeros() as u64;
        ensure(e.value == expected, || {
            format!("phi({}) = {}, expected {expected}", e.element, e.value)
        })?;
    }
    ensure(out.entries.len() == 2048, || format!("{} entries", out.entries.len()))?;
    let secs = start.elapsed().as_secs_f64();
    ensure(secs < 60.0, || format!("took {secs:.1}s"))?;
    let digits = out.value_of("1024").unwrap_or(0) + 1;
    Ok(format!(
        "phi(n) = floor(log2|n|) for 1 <= |n| <= 1024 (binary digits = phi + 1, e.g. 1024 -> {digits}); windows {:?}, {secs:.2}s",
        out.certificate.windows
    ))
}

fn windowed_polynomials() -> Outcome {
    let out = windowed_bottom(&WindowedDomain::Polynomials { q: 2 }, &WindowConfig::polynomials(2, 10))
        .map_err(|e| e.to_string())?;
    for e in &out.entries {
        ensure(e.value == e.size, || {
            format!("phi({}) = {}, degree {}", e.element, e.value, e.size)
        })?;
    }
    ensure(out.entries.len() == (1 << 11) - 1, || {
        format!("{} entries", out.entries.len())
    })?;
    Ok(format!(
        "phi(P) = deg P for all {} nonzero P with deg P <= 10 (1 + deg P reported alongside); windows {:?}",
        out.entries.len(),
        out.certificate.windows
    ))
}

fn negative_findings() -> Outcome {
    let fixture = square_zero_plane(2).map_err(|e| e.to_string())?;
    let stalled = matches!(bottom_euclidean(&fixture), Err(EuclideanError::NotEuclidean(_)));
    ensure(stalled, || "fixture did not stall".to_string())?;
    ensure(!fixture.is_principal().map_err(|e| e.to_string())?, || {
        "fixture reported principal".to_string()
    })?;
    let z = check_not_l_euclidean_integers();
    ensure(z.verified && z.divisor == "5" && z.dividend == "2", || format!("{z:?}"))?;
    // independent residue check: 2 - r is not divisible by 5 for r in {0, 1, -1}
    ensure([0i64, 1, -1].iter().all(|r| (2 - r) % 5 != 0), || {
        "residue check".to_string()
    })?;
    let p = check_not_l_euclidean_polys(2).map_err(|e| e.to_string())?;
    ensure(p.verified && p.divisor == "t^2+t+1" && p.dividend == "t", || {
        format!("{p:?}")
    })?;
    Ok(format!(
        "{} stalls and is not principal; Z witness (5, 2); GF(2)[t] witness ({}, {})",
        fixture, p.divisor, p.dividend
    ))
}

fn samuel_minimization() -> Outcome {
    let corpus = with_bottoms(principal_rings(128));
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let check_agree = |t: &EuclideanTable| -> Result<(), String> {
        let a = is_isotone_euclidean(t).map_err(|e| e.to_string())?;
        let b = is_weakly_isotone_euclidean(t).map_err(|e| e.to_string())?;
        ensure(a == b, || format!("isotone {a} vs weakly isotone {b} on {}", t.ring()))
    };
    for (r, bottom) in &corpus {
        let m = isotone_minimization(bottom).map_err(|e| e.to_string())?;
        ensure(&m == bottom, || format!("{r}: bottom not fixed"))?;
        check_agree(bottom)?;
    }
    for _ in 0..100 {
        let (r, bottom) = &corpus[rng.gen_range(0..corpus.len())];
        let t = perturb(bottom, &mut rng);
        let m = isotone_minimization(&t).map_err(|e| e.to_string())?;
        ensure(m.is_validated(), || format!("{r}: output unvalidated"))?;
        ensure(is_isotone_euclidean(&m).map_err(|e| e.to_string())?, || {
            format!("{r}: output not isotone")
        })?;
        ensure(pointwise_le(&m, &t), || format!("{r}: output above input"))?;
        ensure(isotone_minimization(&m).map_err(|e| e.to_string())? == m, || {
            format!("{r}: not idempotent")
        })?;
        check_agree(&t)?;
        check_agree(&m)?;
    }
    Ok(format!(
        "100 seeded perturbed tables over {} rings of at most 128 elements",
        corpus.len()
    ))
}

fn nagata_construction() -> Outcome {
    let mut lines = Vec::new();
    for pair in [("Z/4", "Z/9"), ("Z/8", "GF(2)[t]/(t^2)")] {
        let t1 = bottom_euclidean(&ring(pair.0)).map_err(|e| e.to_string())?;
        let t2 = bottom_euclidean(&ring(pair.1)).map_err(|e| e.to_string())?;
        let pt = nagata_product(&t1, &t2).map_err(|e| e.to_string())?;
        let report = pt.verify_all().map_err(|e| e.to_string())?;
        ensure(report.failures.is_empty(), || {
            format!("{}: failures {:?}", report.ring, report.failures)
        })?;
        let c = collapse_pair_table(&pt).map_err(|e| e.to_string())?;
        ensure(c.is_validated(), || "collapse unvalidated".to_string())?;
        lines.push(format!(
            "{}: {} pairs ({} exact, {} componentwise, {} + {} shifted), collapse e <= {}",
            report.ring,
            report.pairs,
            report.divides,
            report.componentwise,
            report.shift_first,
            report.shift_second,
            c.value_at_zero()
        ));
    }
    Ok(lines.join("; "))
}

fn length_bounds() -> Outcome {
    let rings = principal_rings(512);
    for r in &rings {
        let t = bottom_euclidean(r).map_err(|e| e.to_string())?;
        for (i, v) in naturals(&t).into_iter().enumerate() {
            let l = r.element_length_index(i as u32 + 1).map_err(|e| e.to_string())?;
            ensure(l <= v, || {
                format!("{r}: length {l} > value {v} at {}", r.fmt_index(i as u32 + 1))
            })?;
        }
    }
    for pair in PRODUCTS {
        let r = ring(&product(pair));
        let split = ring(pair.0).factors().len();
        let t = bottom_euclidean(&r).map_err(|e| e.to_string())?;
        for side in [Side::First, Side::Second] {
            let psi = residual_euclidean(&t, split, side).map_err(|e| format!("{r}: {e}"))?;
            ensure(psi.is_validated(), || format!("{r}: residual unvalidated"))?;
            let b = bottom_euclidean(psi.ring()).map_err(|e| e.to_string())?;
            ensure(pointwise_le(&b, &psi), || format!("{r}: residual below bottom"))?;
        }
    }
    Ok(format!(
        "{} principal rings; residuals on both factors of {} products",
        rings.len(),
        PRODUCTS.len()
    ))
}

fn realization() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(314);
    let mut finite = 0;
    for _ in 0..50 {
        let r = rng.gen_range(0..=5u64);
        let n = rng.gen_range(if r == 0 { 1 } else { 0 }..=9u64);
        let a = Ordinal::term(Ordinal::one(), r).add(&Ordinal::from(n));
        let spec = realize_ordinal(&a).map_err(|e| e.to_string())?;
        let e = order_type_of_spec(&spec);
        ensure(e == a, || format!("{a}: spec {spec} has order type {e}"))?;
        if spec.pid_count() == 0 {
            let concrete = spec.artinian_ring().map_err(|e| e.to_string())?.expect("Artinian part");
            let fixed =
                order_type(&bottom_euclidean(&concrete).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            ensure(fixed == e, || format!("{spec}: fixed point gives {fixed}, claimed {e}"))?;
            finite += 1;
        }
    }
    Ok(format!(
        "50 seeded ordinals below w^2 round trip; {finite} Artinian specs match the fixed point"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("local Artinian order types", local_artinian_order_types),
        ("product order types", product_order_types),
        ("quotient identity", quotient_identity),
        ("Brookfield sum equals natural sum", brookfield_hessenberg),
        ("windowed bottom on Z", windowed_integers),
        ("windowed bottom on GF(2)[t]", windowed_polynomials),
        ("negative findings", negative_findings),
        ("isotone minimization", samuel_minimization),
        ("product division witnesses", nagata_construction),
        ("length bounds and residual functions", length_bounds),
        ("realization below w^2", realization),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        match run() {
            Ok(detail) => println!("PASS  {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
