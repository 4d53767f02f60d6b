use std::collections::BTreeMap;

use euclid_core::euclidean::{
    bottom_euclidean, check_l_euclidean, collapse_pair_table, is_isotone_euclidean, is_weakly_isotone_euclidean,
    isotone_minimization, nagata_product, order_type, quotient_euclidean, residual_euclidean, EuclideanError,
    EuclideanTable, Side,
};
use euclid_core::models::{
    check_localization_euclidean, check_not_l_euclidean_integers, check_not_l_euclidean_polys, order_type_of_spec,
    product_bounds, realize_ordinal, windowed_bottom, Localization, PidFactor, WindowConfig, WindowedDomain,
};
use euclid_core::ordinal::Ordinal;
use euclid_core::poset::parse_edge_list;
use euclid_core::ring::FiniteRing;
use euclid_core::syntax::{parse_finite_ring, parse_ordinal, parse_ring_spec_with_limit, ParsedRing};
use serde_json::{json, Value};

use crate::report::{CliError, Report, Status};

pub struct Options {
    pub seed: u64,
    pub samples: u64,
    pub window: Option<u64>,
    pub max_size: usize,
}

type Outcome = Result<Report, CliError>;

fn ordinal(src: &str) -> Result<Ordinal, CliError> {
    if src.trim().is_empty() {
        return Err(CliError::syntax("empty ordinal expression"));
    }
    Ok(parse_ordinal(src)?)
}

fn finite_ring(src: &str, opts: &Options) -> Result<FiniteRing, CliError> {
    let r = parse_finite_ring(src, opts.max_size)?;
    r.tables()?;
    Ok(r)
}

fn pointwise_le(a: &EuclideanTable, b: &EuclideanTable) -> bool {
    a.nonzero_values().iter().zip(b.nonzero_values()).all(|(x, y)| x <= y)
}

fn table_lines(t: &EuclideanTable) -> Vec<String> {
    let r = t.ring();
    let mut lines: Vec<String> = (1..r.size() as u32)
        .map(|i| format!("  {} -> {}", r.fmt_index(i), t.value(i)))
        .collect();
    lines.push(format!("  0 -> {}", t.value_at_zero()));
    lines
}

/// Records a stalled bottom construction as a finding and returns it.
fn not_euclidean(report: &mut Report, r: &FiniteRing, e: EuclideanError) -> Result<(), CliError> {
    match e {
        EuclideanError::NotEuclidean(rep) => {
            report.status = Status::NotEuclidean;
            report.line(rep.to_string());
            let principal = r.is_principal()?;
            report.check("ring is not principal", !principal, "a Euclidean ring is principal");
            report.result =
                json!({ "ring": r.to_string(), "euclidean": false, "principal": principal, "not_euclidean": *rep });
            Ok(())
        }
        other => Err(other.into()),
    }
}

pub fn ordinal_eval(expr: &str) -> Outcome {
    let a = ordinal(expr)?;
    let printed = a.to_string();
    let mut report = Report::new("ordinal-eval", json!({ "expr": expr }));
    let terms: Vec<Value> = a
        .terms()
        .iter()
        .map(|t| json!({ "exponent": t.exponent(), "coefficient": t.coefficient() }))
        .collect();
    report.result = json!({
        "ordinal": printed,
        "finite": a.as_finite(),
        "limit": a.is_limit(),
        "terms": terms,
    });
    report.line(printed.clone());
    report.check(
        "canonical form reparses",
        parse_ordinal(&printed)? == a,
        "printing and parsing are inverse on Cantor normal forms",
    );
    Ok(report)
}

pub fn ring_analyze(src: &str, opts: &Options) -> Outcome {
    let mut report = Report::new("ring-analyze", json!({ "ring": src }));
    match parse_ring_spec_with_limit(src, opts.max_size)? {
        ParsedRing::Symbolic(spec) => {
            let e = order_type_of_spec(&spec);
            let pids: Vec<String> = spec.pid_factors().iter().map(|p| p.to_string()).collect();
            report.result = json!({
                "kind": "symbolic",
                "spec": spec.to_string(),
                "pid_factors": pids,
                "artinian_lengths": spec.artinian_lengths(),
                "order_type": e,
            });
            report.line(format!("spec: {spec}"));
            report.line(format!("domain factors: {}", spec.pid_count()));
            report.line(format!("Artinian local lengths: {:?}", spec.artinian_lengths()));
            report.line(format!("e = {e}"));
            let again = realize_ordinal(&e).map(|s| order_type_of_spec(&s) == e).unwrap_or(true);
            report.check(
                "order type is realized by a small ring",
                again,
                "w*r + n is the order type of GF(2)[t]^r x GF(2)[t]/(t^n)",
            );
        }
        ParsedRing::Finite(r) => {
            let tables = r.tables()?;
            let factors: Vec<String> = r.factors().iter().map(|f| f.to_string()).collect();
            let principal = r.is_principal()?;
            let units = r.units()?.len();
            let ideals = r.all_ideals()?.len();
            report.line(format!("ring: {r}"));
            report.line(format!("elements: {}, units: {units}, ideals: {ideals}", tables.size()));
            report.line(format!("local: {}, principal: {principal}", r.is_local()?));
            let mut result = json!({
                "kind": "finite",
                "ring": r.to_string(),
                "size": tables.size(),
                "factors": factors,
                "units": units,
                "ideals": ideals,
                "local": r.is_local()?,
                "principal": principal,
            });
            if principal {
                let d = r.crt_decompose()?;
                let local: Vec<String> = d.factors().iter().map(|f| f.to_string()).collect();
                let lengths = d.local_lengths()?;
                let length = r.length()?;
                let e = order_type(&bottom_euclidean(&r)?)?;
                report.line(format!("local factors: {}", local.join(" x ")));
                report.line(format!(
                    "length: {length} = {}",
                    lengths.iter().map(u64::to_string).collect::<Vec<_>>().join(" + ")
                ));
                report.line(format!("e = {e}"));
                result["local_factors"] = json!(local);
                result["local_lengths"] = json!(lengths);
                result["length"] = json!(length);
                result["order_type"] = json!(e);
                report.check(
                    "length is the sum of local lengths",
                    lengths.iter().sum::<u64>() == length,
                    "a finite principal ring is a product of local principal rings",
                );
                report.check(
                    "order type equals length",
                    e == Ordinal::from(length),
                    "e(R) is the length of a finite principal ring",
                );
            }
            report.result = result;
        }
    }
    Ok(report)
}

pub fn euclid_bottom(src: &str, opts: &Options) -> Outcome {
    let r = finite_ring(src, opts)?;
    let mut report = Report::new("euclid-bottom", json!({ "ring": src }));
    let t = match bottom_euclidean(&r) {
        Ok(t) => t,
        Err(e) => {
            not_euclidean(&mut report, &r, e)?;
            return Ok(report);
        }
    };
    let e = order_type(&t)?;
    let tables = r.tables()?;
    let values = t.finite_values().unwrap_or_default();
    let units_at_zero = values
        .iter()
        .enumerate()
        .all(|(i, &v)| (v == 0) == tables.is_unit(i as u32 + 1));
    let top = e.as_finite().unwrap_or(0);
    let segment = (0..top).all(|k| values.contains(&k));
    report.line(format!("ring: {r}"));
    report.line(format!("e = {e}"));
    report.text.extend(table_lines(&t));
    report.check(
        "table is Euclidean",
        t.is_validated(),
        "the bottom function satisfies the division property",
    );
    report.check(
        "value 0 exactly on units",
        units_at_zero,
        "the bottom function vanishes precisely at the units",
    );
    report.check(
        "values form an initial segment",
        segment,
        "the image of the bottom function is an ordinal",
    );
    report.check(
        "table is isotone",
        is_isotone_euclidean(&t)?,
        "the bottom Euclidean function is isotone",
    );
    report.check(
        "order type equals length",
        e == Ordinal::from(r.length()?),
        "e(R) is the length of a finite principal ring",
    );
    report.result = json!({ "table": t.report(), "order_type": e });
    Ok(report)
}

pub fn euclid_verify(src: &str, values: &str, opts: &Options) -> Outcome {
    let r = finite_ring(src, opts)?;
    let vals = values.split(',').map(ordinal).collect::<Result<Vec<_>, _>>()?;
    let expected = r.size() as usize - 1;
    if vals.len() != expected {
        return Err(CliError::domain(format!(
            "{r} has {expected} nonzero elements but {} values were given",
            vals.len()
        )));
    }
    let mut report = Report::new("euclid-verify", json!({ "ring": src, "values": values }));
    let raw = EuclideanTable::unvalidated(&r, vals.clone())?;
    if let Some(c) = raw.counterexample()? {
        let (a, b) = (r.fmt_index(c.a), r.fmt_index(c.b));
        report.status = Status::NotEuclidean;
        report.line(format!("not Euclidean: no remainder for a = {a}, b = {b}"));
        report.result = json!({ "table": raw.report(), "euclidean": false, "counterexample": { "a": a, "b": b } });
        return Ok(report);
    }
    let t = EuclideanTable::validated(&r, vals)?;
    let isotone = is_isotone_euclidean(&t)?;
    let weak = is_weakly_isotone_euclidean(&t)?;
    let m = isotone_minimization(&t)?;
    report.line(format!("ring: {r}"));
    report.line("table is Euclidean");
    report.line(format!("isotone: {isotone}"));
    report.line("isotone minimization:");
    report.text.extend(table_lines(&m));
    report.check(
        "isotone and weakly isotone agree",
        isotone == weak,
        "a Euclidean function is weakly isotone iff it is isotone",
    );
    report.check(
        "minimization is isotone",
        is_isotone_euclidean(&m)?,
        "x -> min of the values on (x) is an isotone Euclidean function",
    );
    report.check(
        "minimization lies below the table",
        pointwise_le(&m, &t),
        "x -> min of the values on (x) is an isotone Euclidean function",
    );
    let bottom = bottom_euclidean(&r)?;
    report.check(
        "table lies above the bottom function",
        pointwise_le(&bottom, &t),
        "the bottom function is the pointwise least Euclidean function",
    );
    report.result = json!({
        "table": t.report(),
        "euclidean": true,
        "isotone": isotone,
        "weakly_isotone": weak,
        "minimization": m.report(),
    });
    Ok(report)
}

pub fn euclid_quotient(src: &str, element: &str, opts: &Options) -> Outcome {
    let r = finite_ring(src, opts)?;
    let b = r.parse_element(element)?;
    let mut report = Report::new("euclid-quotient", json!({ "ring": src, "element": element }));
    let t = match bottom_euclidean(&r) {
        Ok(t) => t,
        Err(e) => {
            not_euclidean(&mut report, &r, e)?;
            return Ok(report);
        }
    };
    let q = quotient_euclidean(&t, &b)?;
    let phi_b = t.value_of(&b)?.clone();
    let eq = order_type(&bottom_euclidean(q.ring())?)?;
    let e = t.value_at_zero().clone();
    report.line(format!("R = {r}, b = {}, phi(b) = {phi_b}", r.fmt_element(&b)));
    report.line(format!(
        "R/(b) = {}, induced value at zero = {}, e(R/(b)) = {eq}",
        q.ring(),
        q.value_at_zero()
    ));
    report.text.extend(table_lines(&q));
    report.check(
        "induced table is Euclidean",
        q.is_validated(),
        "the induced function on R/(b) is Euclidean",
    );
    report.check(
        "value at zero equals phi(b)",
        q.value_at_zero() == &phi_b,
        "phi_R'(x) + 1 = phi_R(b) for the bottom function",
    );
    report.check(
        "e(R/(b)) <= e(R)",
        eq <= e,
        "the order type does not grow under quotients",
    );
    report.result = json!({
        "ring": r.to_string(),
        "element": r.fmt_element(&b),
        "phi_b": phi_b,
        "quotient": q.report(),
        "quotient_order_type": eq,
        "order_type": e,
    });
    Ok(report)
}

pub fn euclid_product(first: &str, second: &str, opts: &Options) -> Outcome {
    let r1 = finite_ring(first, opts)?;
    let r2 = finite_ring(second, opts)?;
    let r = finite_ring(&format!("{r1} x {r2}"), opts)?;
    let mut report = Report::new("euclid-product", json!({ "first": first, "second": second }));
    let mut bottoms = Vec::new();
    for x in [&r1, &r2, &r] {
        match bottom_euclidean(x) {
            Ok(t) => bottoms.push(t),
            Err(e) => {
                not_euclidean(&mut report, x, e)?;
                return Ok(report);
            }
        }
    }
    let (t1, t2, t) = (&bottoms[0], &bottoms[1], &bottoms[2]);
    let (e1, e2, e) = (order_type(t1)?, order_type(t2)?, order_type(t)?);
    let (lower, upper) = product_bounds(&[e1.clone(), e2.clone()]);
    let pt = nagata_product(t1, t2)?;
    let nagata = pt.verify_all()?;
    let collapse = collapse_pair_table(&pt)?;
    let split = r1.factors().len();
    let mut residuals = Vec::new();
    for side in [Side::First, Side::Second] {
        let psi = residual_euclidean(t, split, side)?;
        let b = bottom_euclidean(psi.ring())?;
        residuals.push((psi.is_validated() && pointwise_le(&b, &psi), psi));
    }
    report.line(format!("R = {r}"));
    report.line(format!("e1 = {e1}, e2 = {e2}, e = {e}"));
    report.line(format!("bounds: {lower} <= e <= {upper}"));
    report.line(format!(
        "pair division: {} pairs, {} exact, {} componentwise, {} + {} shifted, {} failures",
        nagata.pairs,
        nagata.divides,
        nagata.componentwise,
        nagata.shift_first,
        nagata.shift_second,
        nagata.failures.len()
    ));
    report.line(format!("collapsed table: value at zero {}", collapse.value_at_zero()));
    report.check(
        "pair division witnesses hold",
        nagata.failures.is_empty(),
        "the pair-valued function on a product is a generalized Euclidean function",
    );
    report.check(
        "collapsed table is Euclidean",
        collapse.is_validated(),
        "composing with the length function of the value poset gives a Euclidean function",
    );
    report.check(
        "e lies between the bounds",
        lower <= e && e <= upper,
        "e1 + e2 <= e(R1 x R2) <= e1 # e2",
    );
    report.check(
        "e = e1 + e2",
        e == e1.add(&e2),
        "e(R1 x R2) = e1 + e2 when e2 is finite",
    );
    report.check(
        "residual on the first factor is Euclidean",
        residuals[0].0,
        "psi(y) = -phi((0,1)) + phi((0,y)) is Euclidean",
    );
    report.check(
        "residual on the second factor is Euclidean",
        residuals[1].0,
        "psi(y) = -phi((0,1)) + phi((0,y)) is Euclidean",
    );
    report.result = json!({
        "ring": r.to_string(),
        "e1": e1,
        "e2": e2,
        "order_type": e,
        "lower_bound": lower,
        "upper_bound": upper,
        "pair_division": nagata,
        "collapse": collapse.report(),
        "residual_first": residuals[0].1.report(),
        "residual_second": residuals[1].1.report(),
    });
    Ok(report)
}

pub fn product_bounds_cmd(exprs: &[String]) -> Outcome {
    let es = exprs.iter().map(|s| ordinal(s)).collect::<Result<Vec<_>, _>>()?;
    let (lower, upper) = product_bounds(&es);
    let mut report = Report::new("product-bounds", json!({ "order_types": exprs }));
    report.line(format!("lower (ordinal sum): {lower}"));
    report.line(format!("upper (natural sum): {upper}"));
    report.check(
        "lower <= upper",
        lower <= upper,
        "the ordinal sum is at most the natural sum",
    );
    report.result = json!({
        "order_types": es,
        "lower": lower,
        "upper": upper,
        "collapse": lower == upper,
    });
    Ok(report)
}

pub fn realize(expr: &str, opts: &Options) -> Outcome {
    let a = ordinal(expr)?;
    let spec = realize_ordinal(&a)?;
    let e = order_type_of_spec(&spec);
    let mut report = Report::new("realize", json!({ "ordinal": expr }));
    report.line(spec.to_string());
    report.check(
        "order type of the realized ring",
        e == a,
        "e(GF(2)[t]^r x GF(2)[t]/(t^n)) = w*r + n",
    );
    let mut result = json!({
        "ordinal": a,
        "spec": spec.to_string(),
        "pid_count": spec.pid_count(),
        "artinian_length": spec.artinian_length(),
        "order_type": e,
    });
    if spec.pid_count() == 0 {
        if let Some(ring) = spec.artinian_ring()? {
            let ring = ring.with_max_size(opts.max_size);
            let fixed = order_type(&bottom_euclidean(&ring)?)?;
            report.check(
                "fixed point agrees",
                fixed == a,
                "e(R) is the length of a finite principal ring",
            );
            result["fixed_point_order_type"] = json!(fixed);
        }
    }
    report.result = result;
    Ok(report)
}

pub fn model_z(opts: &Options) -> Outcome {
    let range = opts.window.unwrap_or(1024);
    let out = windowed_bottom(&WindowedDomain::Integers, &WindowConfig::integers(range))?;
    let mut report = Report::new("model-z", json!({ "window": range }));
    let log2 = out
        .entries
        .iter()
        .all(|e| e.value == 63 - e.size.leading_zeros() as u64);
    let mut thresholds: BTreeMap<u64, u64> = BTreeMap::new();
    for e in &out.entries {
        let t = thresholds.entry(e.value).or_insert(e.size);
        *t = (*t).min(e.size);
    }
    report.line(format!("windowed bottom function on Z for 1 <= |n| <= {range}"));
    report.line(format!(
        "windows tried: {:?}, agreeing: {:?}",
        out.certificate.windows, out.certificate.agreeing
    ));
    for (v, n) in &thresholds {
        report.line(format!("  phi = {v} from |n| = {n} (binary digits {})", v + 1));
    }
    report.check(
        "phi(n) = floor(log2 |n|)",
        log2,
        "the bottom function of Z counts binary digits",
    );
    report.result = json!({ "windowed": out });
    Ok(report)
}

pub fn model_poly(q: u64, opts: &Options) -> Outcome {
    let range = opts.window.unwrap_or(6);
    let out = windowed_bottom(&WindowedDomain::Polynomials { q }, &WindowConfig::polynomials(q, range))?;
    let mut report = Report::new("model-poly", json!({ "q": q, "window": range }));
    let degree = out.entries.iter().all(|e| e.value == e.size);
    report.line(format!("windowed bottom function on GF({q})[t] for degree <= {range}"));
    report.line(format!(
        "windows tried: {:?}, agreeing: {:?}",
        out.certificate.windows, out.certificate.agreeing
    ));
    report.line(format!(
        "{} nonzero polynomials, phi = degree: {degree}",
        out.entries.len()
    ));
    report.check("phi(P) = deg P", degree, "the bottom function of k[t] is the degree");
    report.result = json!({ "windowed": out });
    Ok(report)
}

pub fn model_localize(primes: &str, pair: &[String], opts: &Options) -> Outcome {
    let ps = primes
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<u64>()
                .map_err(|_| CliError::syntax(format!("expected a prime, got {p:?}")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let loc = Localization::new(ps)?;
    let check = check_localization_euclidean(&loc, opts.samples, opts.seed);
    let mut report = Report::new(
        "model-localize",
        json!({ "primes": primes, "seed": opts.seed, "samples": opts.samples, "pair": pair }),
    );
    report.line(format!(
        "primes {:?}: {}/{} sampled divisions verified ({} exact), seed {}",
        check.primes, check.passed, check.samples, check.exact, check.seed
    ));
    let mut result = json!({ "check": check });
    if let [a, b] = pair {
        let (a, b) = (loc.parse(a)?, loc.parse(b)?);
        if b.is_zero() {
            return Err(CliError::domain("division by zero"));
        }
        let w = loc.divide(&a, &b);
        let ok = loc.verify(&a, &b, &w);
        report.line(format!("{a} = ({}) * ({b}) + {}", w.quotient, w.remainder));
        report.check(
            "division witness verified",
            ok,
            "the exponent sum is a Euclidean function on the localization",
        );
        result["division"] = json!({
            "a": a.to_string(),
            "b": b.to_string(),
            "quotient": w.quotient.to_string(),
            "remainder": w.remainder.to_string(),
            "value_b": loc.value(&b)?,
            "value_remainder": if w.remainder.is_zero() { Value::Null } else { json!(loc.value(&w.remainder)?) },
        });
    }
    report.check(
        "all sampled divisions verified",
        check.all_passed(),
        "the exponent sum is a Euclidean function on the localization",
    );
    report.result = result;
    Ok(report)
}

pub fn l_euclidean(src: &str, opts: &Options) -> Outcome {
    let mut report = Report::new("l-euclidean", json!({ "ring": src }));
    match parse_ring_spec_with_limit(src, opts.max_size)? {
        ParsedRing::Finite(r) => {
            r.tables()?;
            let c = check_l_euclidean(&r)?;
            match &c.counterexample {
                None => report.line(format!("{r} is l-Euclidean")),
                Some((a, b)) => report.line(format!("{r} is not l-Euclidean: no remainder for a = {a}, b = {b}")),
            }
            let bottom = bottom_euclidean(&r)?;
            let below = (1..r.size() as u32)
                .map(|i| r.element_length_index(i).map(|l| Ordinal::from(l) <= *bottom.value(i)))
                .collect::<Result<Vec<_>, _>>()?;
            report.check(
                "length <= bottom function",
                below.iter().all(|&b| b),
                "l(x) <= phi(x) for every Euclidean function",
            );
            report.result = json!(c);
        }
        ParsedRing::Symbolic(spec) => {
            let w = match (spec.pid_factors(), spec.artinian_lengths()) {
                ([PidFactor::Integers], []) => check_not_l_euclidean_integers(),
                ([PidFactor::Polynomials { q }], []) => check_not_l_euclidean_polys(*q)?,
                _ => return Err(CliError::domain("l-euclidean takes a finite ring, Z, or GF(q)[t]")),
            };
            report.line(format!(
                "{} is not l-Euclidean: b = {} has length {}, a = {} is not congruent to any of {{{}}}",
                w.domain,
                w.divisor,
                w.divisor_length,
                w.dividend,
                w.remainder_candidates.join(", ")
            ));
            report.check(
                "witness verified",
                w.verified,
                "Z and k[t] over a non-closed field are not l-Euclidean",
            );
            report.result = json!(w);
        }
    }
    Ok(report)
}

pub fn poset_length(path: &str) -> Outcome {
    let src = if path == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| CliError::domain(e.to_string()))?
    } else {
        std::fs::read_to_string(path).map_err(|e| CliError::domain(format!("{path}: {e}")))?
    };
    let p = parse_edge_list(&src)?;
    let f = p.length_function()?;
    let mut report = Report::new("poset-length", json!({ "file": path }));
    let maximal: Vec<&String> = p.maximal().into_iter().map(|i| &p.labels()[i]).collect();
    let length = p.top().map(|t| f.value(t));
    for (label, v) in p.labels().iter().zip(f.values()) {
        report.line(format!("  {label} -> {v}"));
    }
    match length {
        Some(l) => report.line(format!("length: {l}")),
        None => report.line(format!("no top element; maximal: {}", maximal.len())),
    }
    let values: BTreeMap<&String, u64> = p.labels().iter().zip(f.values().iter().copied()).collect();
    report.check(
        "length function is isotone",
        p.is_isotone_values(f.values())?,
        "the length function is the least isotone map",
    );
    report.result = json!({ "values": values, "maximal": maximal, "length": length });
    Ok(report)
}
