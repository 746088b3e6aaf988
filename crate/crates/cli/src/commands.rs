use std::fs;
use std::io::Read;

use cellres::cycle::{
    all_permutation_checks, fundamental_cycle_check, permutation_cycle_check, staircase_partition_2d,
    PartitionOrder, PermutationReport,
};
use cellres::hull::{embed_in_simplex, hull_complex_with, scarf_complex, taylor_complex, HullParameters};
use cellres::json::{
    chain_map_to_json, complex_summary, complex_to_json, envelope, free_complex_to_json, ideal_to_json,
    parse_complex, parse_ideal, residue_to_json,
};
use cellres::monomial::{equals_ideal, irreducible_intersection_contains, minimize};
use cellres::residue::{
    commutation_defect, comparison_maps, duality_check, residue_from_theorem, residue_via_comparison,
};
use cellres::resolution::{cellular_complex, check_exact, check_minimal};
use cellres::samples::{random_reorientation, rng};
use cellres::{ExponentVector, LabeledCellComplex, MonomialIdeal};
use serde_json::{json, Value};

use crate::{Command, Common, ComplexSource, Order};

type Outcome = Result<(Value, bool), String>;

fn read_input(common: &Common) -> Result<String, String> {
    match &common.input {
        Some(path) => fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display())),
        None => {
            let mut s = String::new();
            std::io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read stdin: {e}"))?;
            Ok(s)
        }
    }
}

fn read_complex_file(common: &Common) -> Result<Option<LabeledCellComplex>, String> {
    match &common.complex {
        ComplexSource::File(path) => {
            let text = fs::read_to_string(path).map_err(|e| format!("cannot read {}: {e}", path.display()))?;
            parse_complex(&text).map(Some).map_err(|e| format!("{}: {e}", path.display()))
        }
        _ => Ok(None),
    }
}

fn vertex_ideal(x: &LabeledCellComplex) -> Result<MonomialIdeal, String> {
    minimize(x.vertices().map(|v| v.label.clone()).collect()).map_err(|e| e.to_string())
}

/// The ideal and, for file sources, the complex read alongside it. A file
/// complex without `--input` resolves the ideal generated by its labels.
fn load(common: &Common) -> Result<(MonomialIdeal, Option<LabeledCellComplex>), String> {
    let file = read_complex_file(common)?;
    let m = match (&file, &common.input) {
        (Some(x), None) => vertex_ideal(x)?,
        _ => parse_ideal(&read_input(common)?).map_err(|e| e.to_string())?,
    };
    if let Some(x) = &file {
        if vertex_ideal(x)? != m {
            return Err("precondition violated: vertex labels of the complex do not generate the ideal".into());
        }
    }
    Ok((m, file))
}

fn hull_parameters(common: &Common, m: &MonomialIdeal) -> Result<HullParameters, String> {
    let params = match common.t {
        Some(t) => HullParameters { t },
        None => HullParameters::for_dimension(m.n()).map_err(|e| e.to_string())?,
    };
    params.validate(m.n()).map_err(|e| e.to_string())?;
    Ok(params)
}

/// The complex selected by `--complex`, with hull complexes projected onto
/// the simplex of pure powers, then reoriented when `--seed` is given.
fn complex(common: &Common, m: &MonomialIdeal, file: Option<LabeledCellComplex>) -> Result<LabeledCellComplex, String> {
    let mut x = match (&common.complex, file) {
        (_, Some(x)) => x,
        (ComplexSource::Hull, None) => {
            let h = hull_complex_with(m, hull_parameters(common, m)?).map_err(|e| e.to_string())?;
            let b = m.pure_power_exponents().map_err(|e| e.to_string())?;
            embed_in_simplex(&h, &b).map_err(|e| e.to_string())?
        }
        (ComplexSource::Scarf, None) => scarf_complex(m).map_err(|e| e.to_string())?,
        (ComplexSource::Taylor, None) => taylor_complex(m).map_err(|e| e.to_string())?,
        (ComplexSource::File(_), None) => unreachable!("file complexes are loaded up front"),
    };
    if let Some(seed) = common.seed {
        random_reorientation(&mut x, &mut rng(seed));
    }
    Ok(x)
}

fn ev_json(e: &ExponentVector) -> Value {
    json!(e.as_slice())
}

fn to_exponents(v: &[u32], n: usize, what: &str) -> Result<ExponentVector, String> {
    if v.len() != n {
        return Err(format!("{what} has {} entries, expected {n}", v.len()));
    }
    Ok(ExponentVector::from(v.to_vec()))
}

fn parse_perm(spec: &str, n: usize) -> Result<Vec<usize>, String> {
    let perm: Vec<usize> = spec
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| format!("invalid permutation entry {p:?}")))
        .collect::<Result<_, _>>()?;
    perm.iter()
        .map(|&p| {
            if (1..=n).contains(&p) {
                Ok(p - 1)
            } else {
                Err(format!("permutation entry {p} outside 1..={n}"))
            }
        })
        .collect()
}

/// The report with the variable order shown one-based, as it was given.
fn permutation_json(p: &PermutationReport) -> Value {
    let mut v = serde_json::to_value(p).expect("report serializes");
    v["permutation"] = json!(p.permutation.iter().map(|i| i + 1).collect::<Vec<_>>());
    v
}

pub fn run(common: &Common, command: &Command) -> Outcome {
    let name = command_name(command);
    let (payload, verdict) = dispatch(common, command)?;
    Ok((envelope(name, payload), verdict))
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Generators => "generators",
        Command::Hull { .. } => "hull",
        Command::Scarf => "scarf",
        Command::Resolve => "resolve",
        Command::CheckExact => "check-exact",
        Command::CheckMinimal => "check-minimal",
        Command::Residue => "residue",
        Command::Compare => "compare",
        Command::Annihilator { .. } => "annihilator",
        Command::DualityCheck { .. } => "duality-check",
        Command::Multiplicity => "multiplicity",
        Command::FundamentalCycle { .. } => "fundamental-cycle",
        Command::Partition { .. } => "partition",
    }
}

fn dispatch(common: &Common, command: &Command) -> Outcome {
    let (m, file) = load(common)?;
    let err = |e: cellres::Error| e.to_string();
    match command {
        Command::Generators => {
            let pure = m.pure_power_exponents().ok();
            let mut v = ideal_to_json(&m);
            v["artinian"] = json!(m.is_artinian());
            v["generic"] = json!(m.is_generic());
            v["pure_powers"] = pure.as_ref().map(ev_json).unwrap_or(Value::Null);
            Ok((v, true))
        }
        Command::Hull { embedded } => {
            let params = hull_parameters(common, &m)?;
            let h = hull_complex_with(&m, params).map_err(err)?;
            let h = if *embedded {
                embed_in_simplex(&h, &m.pure_power_exponents().map_err(err)?).map_err(err)?
            } else {
                h
            };
            Ok((json!({"t": params.t, "summary": complex_summary(&h), "complex": complex_to_json(&h)}), true))
        }
        Command::Scarf => {
            let s = scarf_complex(&m).map_err(err)?;
            Ok((json!({"summary": complex_summary(&s), "complex": complex_to_json(&s)}), true))
        }
        Command::Resolve => {
            let x = complex(common, &m, file)?;
            let f = cellular_complex(&x).map_err(err)?;
            Ok((free_complex_to_json(&f), true))
        }
        Command::CheckExact => {
            let x = complex(common, &m, file)?;
            let r = check_exact(&x, &m).map_err(err)?;
            Ok((json!({"ok": r.ok, "witness": r.witness.as_ref().map(ev_json)}), r.ok))
        }
        Command::CheckMinimal => {
            let x = complex(common, &m, file)?;
            let r = check_minimal(&cellular_complex(&x).map_err(err)?);
            let witness = r.witness.as_ref().map(|(tau, sigma)| json!({"tau": tau, "sigma": sigma}));
            Ok((json!({"ok": r.ok, "witness": witness}), r.ok))
        }
        Command::Residue => {
            let x = complex(common, &m, file)?;
            let b = m.pure_power_exponents().map_err(err)?;
            let r = residue_from_theorem(&x, &b).map_err(err)?;
            Ok((json!({"b": ev_json(&b), "entries": residue_to_json(&r)}), true))
        }
        Command::Compare => {
            let x = complex(common, &m, file)?;
            let b = m.pure_power_exponents().map_err(err)?;
            let c = comparison_maps(&x, &b).map_err(err)?;
            let defect = commutation_defect(&c.maps, &c.psi, &c.phi).map_err(err)?;
            let routes_agree = match defect {
                None => residue_via_comparison(&x, &b).map_err(err)? == residue_from_theorem(&x, &b).map_err(err)?,
                Some(_) => false,
            };
            let witness = defect.as_ref().map(|(k, face)| json!({"k": k, "face": face}));
            Ok((
                json!({
                    "commutes": defect.is_none(),
                    "witness": witness,
                    "routes_agree": routes_agree,
                    "maps": chain_map_to_json(&c.maps, &c.psi, &c.phi),
                }),
                defect.is_none() && routes_agree,
            ))
        }
        Command::Annihilator { beta } => {
            let x = complex(common, &m, file)?;
            let b = m.pure_power_exponents().map_err(err)?;
            let r = residue_from_theorem(&x, &b).map_err(err)?;
            let components = r.annihilator_components();
            let equals = equals_ideal(&components, &m, None).map_err(err)?;
            let mut v = json!({
                "components": components.iter().map(|c| ev_json(&c.alpha)).collect::<Vec<_>>(),
                "equals_ideal": equals,
            });
            let mut verdict = equals;
            if let Some(beta) = beta {
                let beta = to_exponents(beta, m.n(), "--beta")?;
                let contains = irreducible_intersection_contains(&components, &beta).map_err(err)?;
                v["beta"] = ev_json(&beta);
                v["contains"] = json!(contains);
                verdict &= contains;
            }
            Ok((v, verdict))
        }
        Command::DualityCheck { upper } => {
            let x = complex(common, &m, file)?;
            let b = m.pure_power_exponents().map_err(err)?;
            let r = residue_from_theorem(&x, &b).map_err(err)?;
            let upper = upper.as_deref().map(|u| to_exponents(u, m.n(), "--box")).transpose()?;
            let d = duality_check(&r, &m, upper.as_ref()).map_err(err)?;
            Ok((
                json!({"ok": d.ok, "counterexample": d.counterexample.as_ref().map(ev_json), "points": d.points}),
                d.ok,
            ))
        }
        Command::Multiplicity => {
            let mult = m.multiplicity().map_err(err)?;
            Ok((json!({"multiplicity": mult}), true))
        }
        Command::FundamentalCycle { perm } => {
            let x = complex(common, &m, file)?;
            match perm.as_deref() {
                None => {
                    let c = fundamental_cycle_check(&x, &m).map_err(err)?;
                    let ok = c.ok;
                    Ok((serde_json::to_value(c).expect("report serializes"), ok))
                }
                Some("all") => {
                    let (full, perms) = all_permutation_checks(&x, &m).map_err(err)?;
                    let ok = full.ok && perms.iter().all(|p| p.ok || !p.claimed);
                    Ok((
                        json!({
                            "full": serde_json::to_value(full).expect("report serializes"),
                            "permutations": perms.iter().map(permutation_json).collect::<Vec<_>>(),
                        }),
                        ok,
                    ))
                }
                Some(spec) => {
                    let p = permutation_cycle_check(&x, &m, &parse_perm(spec, m.n())?).map_err(err)?;
                    Ok((permutation_json(&p), p.ok))
                }
            }
        }
        Command::Partition { order } => {
            let order = match order {
                Order::P => PartitionOrder::P,
                Order::Q => PartitionOrder::Q,
            };
            let rects = staircase_partition_2d(&m, order).map_err(err)?;
            let total: u64 = rects.iter().map(|r| r.area()).sum();
            let mult = m.multiplicity().map_err(err)?;
            let rects: Vec<Value> = rects
                .iter()
                .map(|r| json!({"x": [r.x_lo, r.x_hi], "y": [r.y_lo, r.y_hi], "area": r.area()}))
                .collect();
            Ok((
                json!({"order": format!("{order:?}"), "rectangles": rects, "total_area": total, "multiplicity": mult}),
                total == mult,
            ))
        }
    }
}
