use std::f64::consts::PI;

use polybergman::disc_poly::norm_const;
use polybergman::kernels::{bergman_kernel, true_kernel_closed, true_kernel_series};
use polybergman::spaces::{
    expand, inner_product, membership_test, norm_sq, random_polyanalytic, Membership,
};
use polybergman::{
    CoeffTable, Complex64, Error as CoreError, KernelSpec, Orders, QuadRule, SampledFunction,
};
use serde::Serialize;
use serde_json::json;

use crate::args::{EvalArgs, GlobalOpts, GramArgs, KernelArgs, ProjectArgs};
use crate::expr;
use crate::report::{num, Report, Table};
use crate::CliError;

fn pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

/// Parses `re,im` pairs; each argument may hold several separated by ';'.
pub fn parse_points(args: &[String]) -> Result<Vec<Complex64>, CliError> {
    let mut out = Vec::new();
    for chunk in args
        .iter()
        .flat_map(|a| a.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty())
    {
        let bad = || CliError::Config(format!("bad point '{chunk}', expected re,im"));
        let (re, im) = chunk.split_once(',').ok_or_else(bad)?;
        let re: f64 = re.trim().parse().map_err(|_| bad())?;
        let im: f64 = im.trim().parse().map_err(|_| bad())?;
        if !re.is_finite() || !im.is_finite() {
            return Err(bad());
        }
        out.push(Complex64::new(re, im));
    }
    Ok(out)
}

fn polar_grid(nr: usize, nt: usize, radius: impl Fn(usize) -> f64) -> Vec<Complex64> {
    let mut pts = vec![Complex64::new(0.0, 0.0)];
    for k in 1..=nr {
        for l in 0..nt {
            pts.push(Complex64::from_polar(
                radius(k),
                2.0 * PI * l as f64 / nt as f64,
            ));
        }
    }
    pts
}

fn quad_rule(g: &GlobalOpts) -> Result<QuadRule, CliError> {
    Ok(QuadRule::new(g.gamma, g.radial_nodes, g.angular_nodes)?)
}

pub fn eval(g: &GlobalOpts, a: &EvalArgs) -> Result<Report, CliError> {
    let mut points = parse_points(&a.points)?;
    if let Some((nr, nt)) = a.grid {
        if nt == 0 {
            return Err(CliError::Config("grid needs at least one angle".into()));
        }
        points.extend(polar_grid(nr, nt, |k| k as f64 / (nr + 1) as f64));
    }
    if points.is_empty() {
        return Err(CliError::Config(
            "no points given; use --points or --grid".into(),
        ));
    }
    let mut reps = a.rep.clone();
    reps.dedup();
    let interior_only = reps.iter().any(|r| !r.allows_boundary());
    for z in &points {
        let r = z.norm();
        if r > 1.0 || (interior_only && r >= 1.0) {
            let region = if interior_only { "open" } else { "closed" };
            return Err(CoreError::OutsideDisc {
                re: z.re,
                im: z.im,
                region,
            }
            .into());
        }
    }
    let o = Orders::new(a.m, a.n);
    let mut header = vec!["re".to_string(), "im".to_string()];
    for r in &reps {
        header.push(format!("{r}_re"));
        header.push(format!("{r}_im"));
    }
    header.push("deviation".into());
    let mut table = Table {
        header,
        rows: Vec::new(),
    };
    let mut rows = Vec::new();
    let mut max_dev = 0.0f64;
    for &z in &points {
        let vals: Vec<Complex64> = reps.iter().map(|r| r.eval(g.gamma, o, z)).collect();
        let dev = vals
            .iter()
            .map(|v| (v - vals[0]).norm())
            .fold(0.0, f64::max);
        max_dev = max_dev.max(dev);
        let mut row = vec![num(z.re), num(z.im)];
        for v in &vals {
            row.push(num(v.re));
            row.push(num(v.im));
        }
        row.push(num(dev));
        table.push(row);
        rows.push(json!({
            "z": pair(z),
            "values": reps.iter().zip(&vals).map(|(r, v)| (r.to_string(), json!(pair(*v)))).collect::<serde_json::Map<_, _>>(),
            "deviation": dev,
        }));
    }
    let body = json!({
        "m": a.m,
        "n": a.n,
        "representations": reps,
        "points": rows,
        "max_deviation": if reps.len() > 1 { Some(max_dev) } else { None },
    });
    Ok(Report {
        command: "eval",
        passed: true,
        tol: g.tol.unwrap_or(1e-11),
        body,
        table,
    })
}

pub fn gram(g: &GlobalOpts, a: &GramArgs) -> Result<Report, CliError> {
    let tol = g.tol.unwrap_or(1e-10);
    let q = quad_rule(g)?;
    let orders: Vec<Orders> = (0..=a.max_m)
        .flat_map(|m| (0..=a.max_n).map(move |n| Orders::new(m, n)))
        .collect();
    let fs: Vec<SampledFunction> = orders
        .iter()
        .map(|&o| SampledFunction::disc_polynomial(g.gamma, o))
        .collect();
    let d: Vec<f64> = orders.iter().map(|&o| norm_const(g.gamma, o)).collect();
    let mut table = Table::new(&["m", "n", "j", "k", "re", "im", "expected"]);
    let mut entries = Vec::with_capacity(orders.len());
    let (mut off, mut diag) = (0.0f64, 0.0f64);
    for (i, oi) in orders.iter().enumerate() {
        let mut row = Vec::with_capacity(orders.len());
        for (j, oj) in orders.iter().enumerate() {
            let v = inner_product(&fs[i], &fs[j], &q);
            if i == j {
                diag = diag.max((v - d[i]).norm() / d[i]);
            } else {
                off = off.max(v.norm() / (d[i] * d[j]).sqrt());
            }
            let expected = if i == j { d[i] } else { 0.0 };
            table.push(vec![
                oi.m.to_string(),
                oi.n.to_string(),
                oj.m.to_string(),
                oj.n.to_string(),
                num(v.re),
                num(v.im),
                num(expected),
            ]);
            row.push(pair(v));
        }
        entries.push(row);
    }
    let body = json!({
        "orders": orders,
        "gram": entries,
        "norm_constants": d,
        "max_offdiag": off,
        "max_diag_rel_err": diag,
    });
    Ok(Report {
        command: "gram",
        passed: off <= tol && diag <= tol,
        tol,
        body,
        table,
    })
}

#[derive(Serialize)]
struct KernelRow {
    z: [f64; 2],
    w: [f64; 2],
    closed: [f64; 2],
    series: Option<[f64; 2]>,
    series_est_error: Option<f64>,
    series_error: Option<String>,
    rel_deviation: Option<f64>,
    bergman_rel_deviation: Option<f64>,
}

pub fn kernel(g: &GlobalOpts, a: &KernelArgs) -> Result<Report, CliError> {
    let tol = g.tol.unwrap_or(1e-8);
    let mut points = parse_points(&a.points)?;
    if points.is_empty() {
        let (nr, nt) = a.grid;
        if nt == 0 || !(0.0..1.0).contains(&a.rmax) {
            return Err(CliError::Config(
                "grid needs ntheta >= 1 and 0 <= rmax < 1".into(),
            ));
        }
        points = polar_grid(nr, nt, |k| a.rmax * k as f64 / nr as f64);
    }
    if let Some(z) = points.iter().find(|z| z.norm() >= 1.0) {
        return Err(CoreError::OutsideDisc {
            re: z.re,
            im: z.im,
            region: "open",
        }
        .into());
    }
    let series_spec = KernelSpec::new(g.gamma, a.n, g.trunc, tol)?;
    let closed_spec = KernelSpec::new(g.gamma, a.n, g.trunc, 1e-13)?;
    let mut table = Table::new(&[
        "z_re",
        "z_im",
        "w_re",
        "w_im",
        "closed_re",
        "closed_im",
        "series_re",
        "series_im",
        "rel_deviation",
    ]);
    let mut rows = Vec::new();
    let mut passed = true;
    let mut max_dev = 0.0f64;
    let mut max_bergman = None::<f64>;
    for &z in &points {
        for &w in &points {
            let closed = true_kernel_closed(closed_spec, z, w)?.value;
            let series = true_kernel_series(series_spec, z, w);
            let (sv, est, err, dev) = match &series {
                Ok(v) => {
                    let dev = (v.value - closed).norm() / closed.norm();
                    max_dev = max_dev.max(dev);
                    (Some(pair(v.value)), Some(v.est_error), None, Some(dev))
                }
                Err(e) => {
                    passed = false;
                    (None, None, Some(e.to_string()), None)
                }
            };
            passed &= dev.is_none_or(|d| d <= tol);
            let bergman_dev = (a.n == 0).then(|| {
                let b = bergman_kernel(g.gamma, z, w);
                (closed - b).norm() / b.norm()
            });
            if let Some(b) = bergman_dev {
                max_bergman = Some(max_bergman.unwrap_or(0.0).max(b));
            }
            let blank = String::new;
            table.push(vec![
                num(z.re),
                num(z.im),
                num(w.re),
                num(w.im),
                num(closed.re),
                num(closed.im),
                sv.map_or_else(blank, |v| num(v[0])),
                sv.map_or_else(blank, |v| num(v[1])),
                dev.map_or_else(blank, num),
            ]);
            rows.push(KernelRow {
                z: pair(z),
                w: pair(w),
                closed: pair(closed),
                series: sv,
                series_est_error: est,
                series_error: err,
                rel_deviation: dev,
                bergman_rel_deviation: bergman_dev,
            });
        }
    }
    let zero = Complex64::new(0.0, 0.0);
    let origin = true_kernel_closed(closed_spec, zero, zero)?.value;
    let expected = (g.gamma.gamma() + 2.0 * a.n as f64 + 1.0) / PI;
    let origin_err = (origin - expected).norm() / expected;
    passed &= origin_err <= tol && max_bergman.is_none_or(|b| b <= tol);
    let body = json!({
        "n": a.n,
        "pairs": rows,
        "max_rel_deviation": max_dev,
        "max_bergman_rel_deviation": max_bergman,
        "origin": { "closed": pair(origin), "expected": expected, "rel_error": origin_err },
    });
    Ok(Report {
        command: "kernel",
        passed,
        tol,
        body,
        table,
    })
}

#[derive(Serialize)]
struct Component {
    k: usize,
    norm_sq: f64,
    coefficients: CoeffTable,
}

#[derive(Serialize)]
struct Verdict {
    n: usize,
    #[serde(flatten)]
    membership: Membership,
}

pub fn project(g: &GlobalOpts, a: &ProjectArgs) -> Result<Report, CliError> {
    let tol = g.tol.unwrap_or(1e-9);
    let gamma = g.gamma;
    let (f, source, zbar_degree) = if let Some(src) = &a.expr {
        let e = expr::parse(src)?;
        let (_, nb) = e.degrees();
        (
            SampledFunction::new(move |z| e.eval(gamma, z)),
            json!({ "expr": src }),
            nb,
        )
    } else if let Some(path) = &a.coeff_file {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        let t = CoeffTable::from_json(&text)?;
        if t.gamma() != gamma {
            return Err(CliError::Config(format!(
                "coefficient file has gamma {} but --gamma is {}",
                t.gamma().gamma(),
                gamma.gamma()
            )));
        }
        let j = t.max_j();
        (
            t.to_function(),
            json!({ "coeff_file": path.display().to_string() }),
            j,
        )
    } else if let Some((order, degree)) = a.random {
        let (f, _) = random_polyanalytic(gamma, order, degree, g.seed);
        (
            f,
            json!({ "random": { "order": order, "degree": degree, "seed": g.seed } }),
            order,
        )
    } else {
        return Err(CliError::Config(
            "project needs one of --expr, --coeff-file, --random".into(),
        ));
    };

    let n = a.n.unwrap_or(zbar_degree);
    let max_j = n.max(a.expect_member.unwrap_or(0)).max(zbar_degree) + 1;
    let max_m = g.trunc;
    let q = quad_rule(g)?;
    let t = expand(&f, max_m, max_j, &q);
    let full = norm_sq(&f, &q);

    let parts: Vec<CoeffTable> = (0..=n).map(|k| t.true_component(k)).collect();
    let funcs: Vec<SampledFunction> = parts.iter().map(CoeffTable::to_function).collect();
    let norms: Vec<f64> = funcs.iter().map(|p| norm_sq(p, &q)).collect();
    let mut ortho = 0.0f64;
    for i in 0..funcs.len() {
        for j in 0..i {
            let v = inner_product(&funcs[i], &funcs[j], &q).norm()
                / (norms[i] * norms[j]).sqrt().max(f64::MIN_POSITIVE);
            ortho = ortho.max(v);
        }
    }
    let captured: f64 = norms.iter().sum();
    let pythagoras = if full > 0.0 {
        (full - captured - t.tail_energy(n)).abs() / full
    } else {
        0.0
    };

    let verdicts: Vec<Verdict> = (0..max_j)
        .map(|k| {
            Ok(Verdict {
                n: k,
                membership: membership_test(&f, k, max_m, max_j, &q, tol)?,
            })
        })
        .collect::<Result<_, CliError>>()?;
    let passed = match a.expect_member {
        Some(k) => verdicts[k].membership.member,
        None => true,
    };

    let mut table = Table::new(&["component", "m", "j", "re", "im"]);
    for (k, p) in parts.iter().enumerate() {
        for (o, c) in p.iter().filter(|(o, _)| o.n == k) {
            table.push(vec![
                k.to_string(),
                o.m.to_string(),
                o.n.to_string(),
                num(c.re),
                num(c.im),
            ]);
        }
    }
    let components: Vec<Component> = parts
        .into_iter()
        .zip(&norms)
        .enumerate()
        .map(|(k, (coefficients, &norm_sq))| Component {
            k,
            norm_sq,
            coefficients,
        })
        .collect();
    let body = json!({
        "input": source,
        "n": n,
        "norm_sq": full,
        "coefficients": t,
        "components": components,
        "residual": t.tail_energy(n),
        "component_max_rel_inner_product": ortho,
        "pythagoras_rel_error": pythagoras,
        "membership": verdicts,
        "expect_member": a.expect_member,
    });
    Ok(Report {
        command: "project",
        passed,
        tol,
        body,
        table,
    })
}

pub fn ledger_table(l: &polybergman::ledger::Ledger) -> Table {
    let mut t = Table::new(&[
        "id",
        "stated_consistent",
        "resolved_consistent",
        "sample",
        "oracle",
        "stated",
        "resolved",
    ]);
    let opt = |v: Option<f64>| v.map_or_else(String::new, num);
    for e in l.entries() {
        for s in &e.samples {
            t.push(vec![
                e.id.clone(),
                e.stated_consistent.to_string(),
                e.resolved_consistent.to_string(),
                s.label.clone(),
                num(s.oracle),
                opt(s.stated),
                opt(s.resolved),
            ]);
        }
    }
    t
}
