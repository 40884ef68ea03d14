use serde::Serialize;
use serde_json::json;

use ekr_core::dual_pairs::{
    canonical_form, check_crosspolytope_conjecture, classify_1d, enumerate_dual_pairs, reduce_base_edge,
    Classification, DualPairJson, EnumerationCaps, DEFAULT_PERMUTATION_CAP,
};
use ekr_core::ekr::{is_pure_ekr_with, is_strict_pure_ekr_with, SearchOptions};
use ekr_core::generators::*;
use ekr_core::json::{complex_to_string, parse_complex};
use ekr_core::{Block, EkrReport, Face, FacetFamily, SimplicialComplex};

use crate::manifest::Manifest;
use crate::{read_input, Command, Failure, Generator, InputArg, Output, SweepFamily};

type Complex<B> = SimplicialComplex<B>;

fn load<B: Block>(input: &InputArg) -> Result<Complex<B>, Failure> {
    let text = read_input(input.input.as_ref())?;
    Ok(parse_complex(&text)?)
}

fn load_path<B: Block>(path: &std::path::Path) -> Result<Complex<B>, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::input(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse_complex(&text)?)
}

fn report<R: Serialize>(command: &str, params: serde_json::Value, input: Option<&str>, r: R, code: u8) -> Output {
    Output {
        text: Manifest::new(command, params, input, r).to_text(),
        code,
    }
}

pub fn run<B: Block>(command: &Command) -> Result<Output, Failure> {
    match command {
        Command::Generate { kind } => {
            let c = generate::<B>(kind)?;
            let mut text = complex_to_string(&c);
            text.push('\n');
            Ok(Output { text, code: 0 })
        }
        Command::Check(input) => {
            let c = load::<B>(input)?;
            let canon = complex_to_string(&c);
            Ok(report("check", json!({}), Some(&canon), check(&c)?, 0))
        }
        Command::Verify { input, t, strict, cap } => {
            let c = load::<B>(input)?;
            let canon = complex_to_string(&c);
            let r = verify(&c, *t, *strict, *cap)?;
            let code = if r.is_ekr { 0 } else { 1 };
            let params = json!({"t": t, "strict": strict, "cap": cap});
            Ok(report("verify", params, Some(&canon), r, code))
        }
        Command::Sweep {
            family,
            max_nm,
            deep,
            min_dim,
            max_dim,
            t,
        } => sweep::<B>(*family, *max_nm, *deep, *min_dim, *max_dim, t),
        Command::Dualpairs {
            input,
            mode,
            max_generator_size,
            max_antichain,
            max_faces,
        } => {
            let c = load::<B>(input)?;
            let canon = complex_to_string(&c);
            let caps = EnumerationCaps {
                max_generator_size: *max_generator_size,
                max_antichain: *max_antichain,
                max_faces: *max_faces,
                permutation_cap: DEFAULT_PERMUTATION_CAP,
            };
            let mut params = json!({
                "max_generator_size": max_generator_size,
                "max_antichain": max_antichain,
                "max_faces": max_faces,
            });
            if mode.enumerate {
                params["mode"] = json!("enumerate");
                Ok(report("dualpairs", params, Some(&canon), enumerate(&c, &caps)?, 0))
            } else {
                params["mode"] = json!("check-crosspolytope-conjecture");
                let r = check_crosspolytope_conjecture(&c, &caps)?;
                let code = if r.holds { 0 } else { 1 };
                let body = ConjectureReport {
                    holds: r.holds,
                    complete: r.complete,
                    classes: r.classes,
                    crosspolytope_classes: r.crosspolytope_classes,
                    violating: r.violating.map(|p| p.to_json()),
                };
                Ok(report("dualpairs", params, Some(&canon), body, code))
            }
        }
        Command::Reduce { input, a, b, family } => {
            let c = load::<B>(input)?;
            let canon = complex_to_string(&c);
            let lists: Vec<Vec<usize>> = serde_json::from_str(family)
                .map_err(|e| Failure::input(format!("--family must be a JSON list of vertex lists: {e}")))?;
            let faces = lists
                .iter()
                .map(|l| Face::<B>::new(l.iter().copied()))
                .collect::<ekr_core::Result<Vec<_>>>()?;
            let fam = FacetFamily::from_faces(&c, faces)?;
            let r = reduce_base_edge(&fam, *a, *b)?;
            let body = ReduceReport {
                input_size: fam.len(),
                result_size: r.family.len(),
                base_vertex: r.base_vertex,
                flips: r.flips,
                result: r.family.faces().map(|f| f.to_vec()).collect(),
            };
            let params = json!({"a": a, "b": b, "family": fam.faces().map(|f| f.to_vec()).collect::<Vec<_>>()});
            Ok(report("reduce", params, Some(&canon), body, 0))
        }
    }
}

fn generate<B: Block>(kind: &Generator) -> Result<Complex<B>, Failure> {
    Ok(match kind {
        Generator::Complete { n, r } => complete_complex(*n, *r)?,
        Generator::Crosspolytope { dim } => crosspolytope_boundary(*dim)?,
        Generator::Cycle { n } => cycle(*n)?,
        Generator::Dissection { n, m } => dissection_complex(*n, *m)?,
        Generator::Kpartite { parts } => kpartite_clique_complex(parts)?,
        Generator::SimplexNeighbors { dim } => simplex_with_neighbors(*dim)?,
        Generator::Bipyramid { dim, k } => fattened_bipyramid(*dim, *k)?,
        Generator::Suspension(input) => suspension(&load::<B>(input)?)?,
        Generator::DoubleSuspension(input) => double_suspension(&load::<B>(input)?)?,
        Generator::Icosahedron => icosahedron_boundary()?,
        Generator::Join { left, right } => load_path::<B>(left)?.join(&load_path::<B>(right)?)?,
    })
}

/// Properties that need a pure complex are `null` otherwise.
#[derive(Serialize)]
struct CheckReport {
    pure: bool,
    dim: isize,
    flag: bool,
    without_boundary: Option<bool>,
    pseudo_manifold: Option<bool>,
    meep: Option<bool>,
}

fn check<B: Block>(c: &Complex<B>) -> Result<CheckReport, Failure> {
    let pure = c.is_pure();
    let if_pure = |f: &dyn Fn() -> ekr_core::Result<bool>| -> Result<Option<bool>, Failure> {
        if pure {
            Ok(Some(f()?))
        } else {
            Ok(None)
        }
    };
    Ok(CheckReport {
        pure,
        dim: c.dim(),
        flag: c.is_flag(),
        without_boundary: if_pure(&|| c.is_without_boundary())?,
        pseudo_manifold: if_pure(&|| c.is_pseudo_manifold())?,
        meep: if_pure(&|| c.has_missing_edge_exchange())?,
    })
}

fn verify<B: Block>(c: &Complex<B>, t: usize, strict: bool, cap: usize) -> Result<EkrReport, Failure> {
    let opts = SearchOptions {
        parallel: true,
        strict_cap: cap,
    };
    Ok(if strict {
        is_strict_pure_ekr_with(c, t, &opts)?
    } else {
        is_pure_ekr_with(c, t, &opts)?
    })
}

fn parse_t(t: &str, dim: isize) -> Result<Option<usize>, Failure> {
    let value = match t.trim() {
        "d-1" => dim - 1,
        s => s
            .parse::<isize>()
            .map_err(|_| Failure::input(format!("--t must be a number or d-1, got {s:?}")))?,
    };
    Ok((value >= 1 && value <= dim + 1).then_some(value as usize))
}

#[derive(Serialize)]
struct SweepPoint {
    parameters: serde_json::Value,
    facets: usize,
    /// `None` when t is out of range for this complex.
    report: Option<EkrReport>,
}

#[derive(Serialize)]
struct SweepReport {
    points: Vec<SweepPoint>,
    all_ekr: bool,
}

fn sweep<B: Block>(
    family: SweepFamily,
    max_nm: usize,
    deep: bool,
    min_dim: usize,
    max_dim: usize,
    t: &str,
) -> Result<Output, Failure> {
    let mut points = Vec::new();
    let mut push = |params: serde_json::Value, c: Complex<B>| -> Result<(), Failure> {
        let report = match parse_t(t, c.dim())? {
            Some(t) => Some(verify(&c, t, false, 0)?),
            None => None,
        };
        points.push(SweepPoint {
            parameters: params,
            facets: c.num_facets(),
            report,
        });
        Ok(())
    };
    let params = match family {
        SweepFamily::Dissection => {
            if max_nm >= 8 && !deep {
                return Err(Failure::input("n+m >= 8 needs --deep"));
            }
            for n in 2..max_nm {
                for m in 1..=max_nm - n {
                    push(json!({"n": n, "m": m}), dissection_complex(n, m)?)?;
                }
            }
            json!({"family": "dissection", "max_nm": max_nm, "t": t})
        }
        SweepFamily::Crosspolytope => {
            if min_dim > max_dim {
                return Err(Failure::input("--min-dim exceeds --max-dim"));
            }
            for d in min_dim..=max_dim {
                push(json!({"dim": d}), crosspolytope_boundary(d + 1)?)?;
            }
            json!({"family": "crosspolytope", "min_dim": min_dim, "max_dim": max_dim, "t": t})
        }
    };
    let all_ekr = points.iter().all(|p| p.report.as_ref().is_none_or(|r| r.is_ekr));
    let code = if all_ekr { 0 } else { 1 };
    Ok(report("sweep", params, None, SweepReport { points, all_ekr }, code))
}

#[derive(Serialize)]
struct ClassReport {
    canonical: ekr_core::dual_pairs::CanonicalForm,
    representative: DualPairJson,
    /// Only for flag hosts of dimension at most one.
    #[serde(skip_serializing_if = "Option::is_none")]
    classification: Option<Classification>,
}

#[derive(Serialize)]
struct EnumerationReport {
    classes: usize,
    complete: bool,
    antichains: usize,
    representatives: Vec<ClassReport>,
}

fn enumerate<B: Block>(c: &Complex<B>, caps: &EnumerationCaps) -> Result<EnumerationReport, Failure> {
    let found = enumerate_dual_pairs(c, caps)?;
    let one_dim = c.dim() <= 1 && c.is_flag();
    let mut representatives = Vec::with_capacity(found.len());
    for (form, pair) in &found.classes {
        debug_assert_eq!(canonical_form(pair, caps.permutation_cap).as_ref(), Ok(form));
        representatives.push(ClassReport {
            canonical: form.clone(),
            representative: pair.to_json(),
            classification: if one_dim { Some(classify_1d(pair)?) } else { None },
        });
    }
    Ok(EnumerationReport {
        classes: found.len(),
        complete: found.complete,
        antichains: found.antichains,
        representatives,
    })
}

#[derive(Serialize)]
struct ConjectureReport {
    holds: bool,
    complete: bool,
    classes: usize,
    crosspolytope_classes: usize,
    violating: Option<DualPairJson>,
}

#[derive(Serialize)]
struct ReduceReport {
    input_size: usize,
    result_size: usize,
    base_vertex: usize,
    flips: usize,
    result: Vec<Vec<usize>>,
}
