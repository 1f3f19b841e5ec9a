use std::fmt::Write as _;

use anyhow::Context;
use serde::Serialize;
use serde_json::{json, Value};

use unitary_core::characters::{
    census_semisimple, fs_bruteforce, fs_semisimple_regular, fs_unipotent, is_real, is_regular,
    is_semisimple, is_unipotent, CharInfo,
};
use unitary_core::finite_field::GaloisField;
use unitary_core::multipartition::{enumerate_multipartitions, MultiPartition};
use unitary_core::selfdual::{enumerate_self_dual, self_dual_factorization, ConstantTerm};
use unitary_core::symfunc::table::char_table;
use unitary_core::tori::{Side, TorusContext};
use unitary_core::verify::{run_suite, Status};
use unitary_core::{Cyclotomic, Rational};

use crate::{Common, Constant, Failure, Family, Format, GroupArgs, Output};

/// Largest self-dual enumeration the CLI will print.
const MAX_POLYNOMIALS: u64 = 10_000_000;

fn context(g: &GroupArgs) -> Result<TorusContext, Failure> {
    Ok(TorusContext::new(g.q, g.n)?)
}

fn to_json<T: Serialize>(v: &T) -> Result<String, Failure> {
    let mut s = serde_json::to_string_pretty(v).context("serializing output")?;
    s.push('\n');
    Ok(s)
}

fn approx_text(c: &Cyclotomic) -> String {
    let (re, im) = c.approx();
    // avoid printing -0.000000
    let clean = |x: f64| if x.abs() < 5e-10 { 0.0 } else { x };
    format!("{:.9}{:+.9}i", clean(re), clean(im))
}

fn in_family(ctx: &TorusContext, family: Family, l: &MultiPartition) -> bool {
    match family {
        Family::All => true,
        Family::Semisimple => is_semisimple(l),
        Family::Regular => is_regular(l),
        Family::Unipotent => is_unipotent(ctx, l),
    }
}

fn family_name(f: Family) -> &'static str {
    match f {
        Family::All => "all",
        Family::Semisimple => "semisimple",
        Family::Regular => "regular",
        Family::Unipotent => "unipotent",
    }
}

pub fn census(common: &Common, g: &GroupArgs) -> Result<Output, Failure> {
    let ctx = context(g)?;
    if !ctx.q_is_odd() {
        return Err(Failure::Usage("census needs odd q".into()));
    }
    let k = census_semisimple(&ctx, g.n)?;
    let text = match common.format {
        Format::Json => to_json(&k)?,
        Format::Tsv => format!(
            "q\tn\tsymplectic\torthogonal\treal_total\troute_agreement\n{}\t{}\t{}\t{}\t{}\t{}\n",
            k.q, k.n, k.symplectic, k.orthogonal, k.real_total, k.route_agreement
        ),
    };
    Ok(Output {
        text,
        failed: (!k.route_agreement).then(|| "central character routes disagree".to_string()),
    })
}

pub fn degrees(common: &Common, g: &GroupArgs, family: Family) -> Result<Output, Failure> {
    let ctx = context(g)?;
    let infos = enumerate_multipartitions(&ctx, g.n, Side::Character)?
        .into_iter()
        .filter(|l| in_family(&ctx, family, l))
        .map(|l| CharInfo::new(&ctx, l))
        .collect::<Result<Vec<_>, _>>()?;
    let text = match common.format {
        Format::Json => to_json(&json!({
            "q": g.q,
            "n": g.n,
            "family": family_name(family),
            "count": infos.len(),
            "characters": infos,
        }))?,
        Format::Tsv => {
            let mut s =
                String::from("label\tdegree\treal\tsemisimple\tregular\tunipotent\tomega\n");
            for i in &infos {
                let _ = writeln!(
                    s,
                    "{}\t{}\t{}\t{}\t{}\t{}\t{}",
                    i.label, i.degree, i.real, i.semisimple, i.regular, i.unipotent, i.omega
                );
            }
            s
        }
    };
    Ok(text.into())
}

pub fn chartable(common: &Common, g: &GroupArgs, bound: u128) -> Result<Output, Failure> {
    let ctx = context(g)?;
    let t = char_table::<Rational>(&ctx, g.n, bound)?;
    let text = match common.format {
        Format::Json => {
            let mut v = t.to_json();
            if common.approx {
                v["approx_note"] = Value::from("decimal values are non-authoritative");
                let rows = v["rows"].as_array_mut().expect("rows are a list");
                for (i, row) in rows.iter_mut().enumerate() {
                    row["approx"] = t.row(i).iter().map(approx_text).collect::<Vec<_>>().into();
                }
            }
            to_json(&v)?
        }
        Format::Tsv => {
            let mut s = String::from("label");
            for c in t.columns() {
                let _ = write!(s, "\t{}", c.label);
            }
            s.push_str("\nclass_size");
            for c in t.columns() {
                let _ = write!(s, "\t{}", c.size);
            }
            s.push('\n');
            for (i, l) in t.rows().iter().enumerate() {
                let _ = write!(s, "{l}");
                for v in t.row(i) {
                    let _ = write!(s, "\t{v}");
                }
                s.push('\n');
                if common.approx {
                    let _ = write!(s, "~{l}");
                    for v in t.row(i) {
                        let _ = write!(s, "\t{}", approx_text(v));
                    }
                    s.push('\n');
                }
            }
            s
        }
    };
    Ok(text.into())
}

#[derive(Serialize)]
struct Indicator {
    label: MultiPartition,
    indicator: i8,
    method: &'static str,
}

pub fn fs(
    common: &Common,
    g: &GroupArgs,
    family: Family,
    brute: bool,
    max_n: u32,
) -> Result<Output, Failure> {
    let ctx = context(g)?;
    let labels: Vec<MultiPartition> = enumerate_multipartitions(&ctx, g.n, Side::Character)?
        .into_iter()
        .filter(|l| in_family(&ctx, family, l))
        .collect();
    let table = if brute || family == Family::All {
        Some(fs_bruteforce(&ctx, g.n, max_n)?)
    } else {
        None
    };
    let mut out = Vec::with_capacity(labels.len());
    let mut mismatch = None;
    for l in labels {
        let direct = if !is_real(&ctx, &l) {
            Some((0, "nonreal"))
        } else if is_semisimple(&l) || is_regular(&l) {
            Some((fs_semisimple_regular(&ctx, &l)?, "central"))
        } else if is_unipotent(&ctx, &l) {
            let p = l.iter().next().map(|(_, p)| p.clone()).unwrap_or_default();
            Some((fs_unipotent(&p), "unipotent"))
        } else {
            None
        };
        let from_table = table.as_ref().map(|t| {
            t.iter()
                .find(|(m, _)| *m == l)
                .map(|(_, e)| *e)
                .expect("table covers every label")
        });
        let (indicator, method) = match (direct, from_table) {
            (Some((d, m)), Some(b)) => {
                if d != b && mismatch.is_none() {
                    mismatch = Some(format!("{l}: {m} gives {d}, the table gives {b}"));
                }
                (d, m)
            }
            (Some(dm), None) => dm,
            (None, Some(b)) => (b, "table"),
            (None, None) => unreachable!("the table is built whenever a label has no direct route"),
        };
        out.push(Indicator {
            label: l,
            indicator,
            method,
        });
    }
    let text = match common.format {
        Format::Json => to_json(&json!({
            "q": g.q,
            "n": g.n,
            "family": family_name(family),
            "indicators": out,
        }))?,
        Format::Tsv => {
            let mut s = String::from("label\tindicator\tmethod\n");
            for i in &out {
                let _ = writeln!(s, "{}\t{}\t{}", i.label, i.indicator, i.method);
            }
            s
        }
    };
    Ok(Output {
        text,
        failed: mismatch,
    })
}

fn constant_name(c: Constant) -> &'static str {
    match c {
        Constant::MinusOne => "-1",
        Constant::PlusOne => "1",
        Constant::Any => "any",
    }
}

pub fn selfdual(
    common: &Common,
    g: &GroupArgs,
    constant: Constant,
    factor: bool,
) -> Result<Output, Failure> {
    let field = GaloisField::new(g.q)?;
    let free = (g.n as u64).div_ceil(2);
    let estimate = g.q.checked_pow(free as u32).unwrap_or(u64::MAX);
    if estimate > MAX_POLYNOMIALS {
        return Err(Failure::Usage(format!(
            "about {estimate} polynomials; the limit is {MAX_POLYNOMIALS}"
        )));
    }
    let c = match constant {
        Constant::MinusOne => ConstantTerm::MinusOne,
        Constant::PlusOne => ConstantTerm::PlusOne,
        Constant::Any => ConstantTerm::Any,
    };
    let polys = enumerate_self_dual(&field, g.n, c)?;
    let sign = |p: &unitary_core::finite_field::FqPoly| if p.constant_term() == 1 { 1 } else { -1 };
    let text = match common.format {
        Format::Json => {
            let entries: Vec<Value> = if factor {
                polys
                    .iter()
                    .map(|p| {
                        let f = self_dual_factorization(p)?;
                        Ok(json!({
                            "polynomial": p.to_string(),
                            "constant_term": sign(p),
                            "s": f.s,
                            "t": f.t,
                            "pairs": f.pairs.iter().map(|(v, w, n)| json!([v.to_string(), w.to_string(), n])).collect::<Vec<_>>(),
                            "selfduals": f.selfduals.iter().map(|(r, m)| json!([r.to_string(), m])).collect::<Vec<_>>(),
                        }))
                    })
                    .collect::<Result<_, unitary_core::Error>>()?
            } else {
                polys.iter().map(|p| Value::from(p.to_string())).collect()
            };
            to_json(&json!({
                "q": g.q,
                "n": g.n,
                "field": field.to_string(),
                "constant": constant_name(constant),
                "count": polys.len(),
                "polynomials": entries,
            }))?
        }
        Format::Tsv => {
            let mut s = String::from(if factor {
                "polynomial\tconstant_term\tfactorization\n"
            } else {
                "polynomial\tconstant_term\n"
            });
            for p in &polys {
                let _ = write!(s, "{p}\t{}", sign(p));
                if factor {
                    let f = self_dual_factorization(p)?;
                    let mut parts = Vec::new();
                    if f.s > 0 {
                        parts.push(format!("(x + {})^{}", field.from_int(-1), f.s));
                    }
                    if f.t > 0 {
                        parts.push(format!("(x + 1)^{}", f.t));
                    }
                    for (v, w, n) in &f.pairs {
                        parts.push(format!("[({v})({w})]^{n}"));
                    }
                    for (r, m) in &f.selfduals {
                        parts.push(format!("({r})^{m}"));
                    }
                    let _ = write!(s, "\t{}", parts.join(" "));
                }
                s.push('\n');
            }
            s
        }
    };
    Ok(text.into())
}

pub fn verify(common: &Common, q: u64, max_n: u32, bound: u128) -> Result<Output, Failure> {
    let checks = run_suite(q, max_n, bound)?;
    let failures = checks.iter().filter(|c| c.status == Status::Fail).count();
    let text = match common.format {
        Format::Json => to_json(&json!({
            "q": q,
            "max_n": max_n,
            "passed": failures == 0,
            "checks": checks,
        }))?,
        Format::Tsv => {
            let mut s = String::from("status\tcheck\tdetail\n");
            for c in &checks {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skip => "skip",
                };
                let _ = writeln!(s, "{status}\t{}\t{}", c.name, c.detail);
            }
            s
        }
    };
    Ok(Output {
        text,
        failed: (failures > 0).then(|| format!("{failures} checks failed")),
    })
}
