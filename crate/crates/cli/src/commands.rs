//! Subcommand bodies. Each returns a [`Status`] for a completed run, or
//! an error message for bad input (exit 2).

use std::path::{Path, PathBuf};

use framekit::construct::{
    equal_norm_with_operator, frame_with_spectrum_and_norms, random_parseval, scale_to_parseval, simplex_frame,
    spectral_tetris, tight_completion, NormSpec, SpectrumSpec,
};
use framekit::frames::{
    canonical_dual, canonical_parseval, frame_bounds, is_dual_pair, is_frame, naimark_complete, parseval_deviation,
    synthesis_matrix,
};
use framekit::fusion::{fusion_bounds, fusion_operator, is_fusion_frame, local_global_check, tight_redundancy};
use framekit::numerics::{inner, operator_norm};
use framekit::verify::{
    complement_property_witness, constants_audit, does_phase_retrieval_real, frame_report, welch_bound,
    welch_equality_check, FrameReport, SUBSET_SEARCH_LIMIT,
};
use framekit::{DenseMatrix, Field, Frame, FrameError, ToleranceConfig};
use serde_json::{json, Map, Value};

use crate::document::{matrix_json, matrix_text, FrameDocument};
use crate::fusion_doc::read_fusion;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Kind {
    Tetris,
    Simplex,
    RandomParseval,
    SpectrumNorms,
    EqualNormOp,
    TightComplete,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Check {
    Frame,
    Parseval,
    Tight,
    EqualNorm,
    Equiangular,
    Exact,
    WelchEquality,
    ComplementProperty,
    PhaseRetrieval,
    DualOf,
    Scaling,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum FusionOp {
    Bounds,
    Operator,
    Redundancy,
    LocalGlobal,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum DualKind {
    Canonical,
    Parseval,
}

fn lib<T>(r: framekit::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

pub fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("{}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub struct ConstructArgs {
    pub kind: Kind,
    pub dim: Option<usize>,
    pub count: Option<usize>,
    pub seed: Option<u64>,
    pub spectrum: Vec<f64>,
    pub norms_squared: Vec<f64>,
    pub input: Option<PathBuf>,
    pub name: Option<String>,
    pub out: Option<PathBuf>,
}

fn need<T>(v: Option<T>, flag: &str, kind: &str) -> Result<T, String> {
    v.ok_or_else(|| format!("{kind} needs {flag}"))
}

pub fn construct(a: ConstructArgs, tol: &ToleranceConfig) -> Result<Status, String> {
    let mut meta = Map::new();
    let frame = match a.kind {
        Kind::Tetris => {
            let dim = need(a.dim, "--dim", "tetris")?;
            let count = need(a.count, "--count", "tetris")?;
            meta.insert("construction".into(), json!("tetris"));
            meta.insert("dim".into(), json!(dim));
            meta.insert("count".into(), json!(count));
            lib(spectral_tetris(dim, count))?
        }
        Kind::Simplex => {
            let dim = need(a.dim, "--dim", "simplex")?;
            meta.insert("construction".into(), json!("simplex"));
            meta.insert("dim".into(), json!(dim));
            lib(simplex_frame(dim, tol))?
        }
        Kind::RandomParseval => {
            let dim = need(a.dim, "--dim", "random-parseval")?;
            let count = need(a.count, "--count", "random-parseval")?;
            let seed = need(a.seed, "--seed or FRAMEKIT_SEED", "random-parseval")?;
            meta.insert("construction".into(), json!("random-parseval"));
            meta.insert("dim".into(), json!(dim));
            meta.insert("count".into(), json!(count));
            meta.insert("seed".into(), json!(seed));
            lib(random_parseval(dim, count, seed, tol))?
        }
        Kind::SpectrumNorms => {
            if a.spectrum.is_empty() || a.norms_squared.is_empty() {
                return Err("spectrum-norms needs --spectrum and --norms-squared".into());
            }
            let spec = lib(SpectrumSpec::new(a.spectrum.clone()))?;
            let norms = lib(NormSpec::from_squared(a.norms_squared.clone()))?;
            meta.insert("construction".into(), json!("spectrum-norms"));
            meta.insert("spectrum".into(), json!(a.spectrum));
            meta.insert("norms_squared".into(), json!(a.norms_squared));
            lib(frame_with_spectrum_and_norms(&spec, &norms, tol))?
        }
        Kind::EqualNormOp => {
            if a.spectrum.is_empty() {
                return Err("equal-norm-op needs --spectrum".into());
            }
            let count = need(a.count, "--count", "equal-norm-op")?;
            let spec = lib(SpectrumSpec::new(a.spectrum.clone()))?;
            meta.insert("construction".into(), json!("equal-norm-op"));
            meta.insert("spectrum".into(), json!(a.spectrum));
            meta.insert("count".into(), json!(count));
            lib(equal_norm_with_operator(&spec, count, tol))?
        }
        Kind::TightComplete => {
            let input = need(a.input.as_ref(), "--input FILE", "tight-complete")?;
            let src = FrameDocument::read(input)?;
            meta.insert("construction".into(), json!("tight-complete"));
            meta.insert("source_count".into(), json!(src.frame.len()));
            lib(tight_completion(&src.frame, tol))?
        }
    };
    if let Some(name) = a.name {
        meta.insert("name".into(), json!(name));
    }
    emit(&FrameDocument::new(frame, meta).to_json()?, a.out.as_deref())?;
    Ok(Status::Pass)
}

/// `(i, j, |<φ_i, φ_j>| / (‖φ_i‖ ‖φ_j‖))` with `i > j`.
type Overlap = (usize, usize, f64);

fn overlaps(f: &Frame) -> Vec<Overlap> {
    let norms = f.norms();
    let mut out = Vec::new();
    for i in 0..f.len() {
        for j in 0..i {
            if norms[i] > 0.0 && norms[j] > 0.0 {
                out.push((i, j, inner(f.vector(i), f.vector(j)).norm() / (norms[i] * norms[j])));
            }
        }
    }
    out
}

fn overlap_range(f: &Frame) -> Option<(Overlap, Overlap)> {
    let o = overlaps(f);
    let lo = o.iter().copied().min_by(|a, b| a.2.total_cmp(&b.2))?;
    let hi = o.iter().copied().max_by(|a, b| a.2.total_cmp(&b.2))?;
    Some((lo, hi))
}

fn norm_range(norms: &[f64]) -> ((usize, f64), (usize, f64)) {
    let by = |a: &(usize, f64), b: &(usize, f64)| a.1.total_cmp(&b.1);
    let it = norms.iter().copied().enumerate();
    (it.clone().min_by(by).unwrap(), it.max_by(by).unwrap())
}

/// First index whose removal still leaves a frame.
fn removable_index(f: &Frame, tol: &ToleranceConfig) -> Result<Option<(usize, f64)>, String> {
    for i in 0..f.len() {
        if let Some(g) = f.without(i) {
            if lib(is_frame(&g, tol))? {
                return Ok(Some((i, lib(frame_bounds(&g, tol))?.lower)));
            }
        }
    }
    Ok(None)
}

fn flag(value: bool, witness: Value) -> Value {
    json!({ "value": value, "witness": witness })
}

pub fn tolerances_json(tol: &ToleranceConfig) -> Value {
    json!({ "eq_tol": tol.eq_tol, "eig_offdiag_tol": tol.eig_offdiag_tol, "rank_tol": tol.rank_tol })
}

fn report_json(f: &Frame, r: &FrameReport, tol: &ToleranceConfig) -> Result<Value, String> {
    let (lo_norm, hi_norm) = norm_range(&r.norms);
    let range = overlap_range(f);
    let overlap_witness = match range {
        Some((lo, hi)) => json!({
            "min_overlap": lo.2, "min_pair": [lo.0, lo.1],
            "max_overlap": hi.2, "max_pair": [hi.0, hi.1],
        }),
        None => json!({ "min_overlap": null, "max_overlap": null }),
    };
    let exact = if r.is_frame {
        match removable_index(f, tol)? {
            Some((i, lower)) => flag(false, json!({ "removable_index": i, "lower_bound_without": lower })),
            None => flag(true, json!({ "removable_index": null })),
        }
    } else {
        flag(false, json!({ "not_a_frame": true, "lower_bound": r.bounds.lower }))
    };
    let welch = if r.count >= 2 && r.count >= r.dim { welch_bound(r.count, r.dim).ok() } else { None };
    let parseval_dev = lib(parseval_deviation(f, tol))?;
    Ok(json!({
        "field": match r.field { Field::Real => "real", Field::Complex => "complex" },
        "dim": r.dim,
        "count": r.count,
        "redundancy": r.redundancy,
        "eigenvalues": r.eigenvalues,
        "norms": r.norms,
        "bounds": { "lower": r.bounds.lower, "upper": r.bounds.upper },
        "coherence": r.coherence,
        "welch_bound": welch,
        "flags": {
            "frame": flag(r.is_frame, json!({
                "lower_bound": r.bounds.lower,
                "upper_bound": r.bounds.upper,
                "rank_threshold": tol.rank_tol * r.bounds.upper,
            })),
            "tight": flag(r.is_tight, json!({ "lower_bound": r.bounds.lower, "upper_bound": r.bounds.upper })),
            "parseval": flag(r.is_parseval, json!({ "max_eigenvalue_deviation_from_one": parseval_dev })),
            "equal_norm": flag(r.is_equal_norm, json!({ "min_norm": lo_norm.1, "max_norm": hi_norm.1 })),
            "unit_norm": flag(r.is_unit_norm, json!({ "min_norm": lo_norm.1, "max_norm": hi_norm.1 })),
            "equiangular": flag(r.is_equiangular, overlap_witness.clone()),
            "equiangular_lines": flag(r.equiangular_lines, overlap_witness),
            "exact": exact,
        },
    }))
}

pub fn analyze(file: &Path, out: Option<&Path>, tol: &ToleranceConfig) -> Result<Status, String> {
    let doc = FrameDocument::read(file)?;
    let f = &doc.frame;
    let r = lib(frame_report(f, tol))?;
    let audit: Vec<Value> = lib(constants_audit(f, tol))?
        .into_iter()
        .map(|a| json!({ "name": a.name, "lhs": a.lhs, "rhs": a.rhs, "passed": a.passed }))
        .collect();
    let duals = if r.is_frame {
        let g = lib(canonical_dual(f, tol))?;
        let gb = lib(frame_bounds(&g, tol))?;
        let p = lib(canonical_parseval(f, tol))?;
        json!({
            "canonical_dual": {
                "bounds": { "lower": gb.lower, "upper": gb.upper },
                "norms": g.norms(),
                "reconstruction_defect": dual_defect(f, &g).0,
            },
            "canonical_parseval": { "deviation": lib(parseval_deviation(&p, tol))? },
        })
    } else {
        Value::Null
    };
    let doc = json!({
        "report": report_json(f, &r, tol)?,
        "audit": audit,
        "duals": duals,
        "tolerances": tolerances_json(tol),
    });
    emit(&pretty(&doc), out)?;
    Ok(Status::Pass)
}

/// `(‖T_f* T_g - Id‖_F, allowed)`, matching the library's dual-pair test.
fn dual_defect(f: &Frame, g: &Frame) -> (f64, f64) {
    let tf = synthesis_matrix(f);
    let tg = synthesis_matrix(g);
    let product = &tf * &tg.adjoint();
    let defect = product.distance(&DenseMatrix::identity(f.dim(), product.field()));
    (defect, (operator_norm(&tf) * operator_norm(&tg)).max(1.0))
}

/// Shortest decimal that reads back to `x`.
fn n(x: f64) -> String {
    serde_json::to_string(&x).unwrap_or_else(|_| x.to_string())
}

fn verdict(name: &str, pass: bool, witness: String) -> Status {
    println!("{} {name}: {witness}", if pass { "PASS" } else { "FAIL" });
    if pass {
        Status::Pass
    } else {
        Status::Fail
    }
}

fn fmt_indices(v: &[usize]) -> String {
    format!("[{}]", v.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
}

fn complement_verdict(name: &str, f: &Frame, tol: &ToleranceConfig) -> Result<Status, String> {
    match lib(complement_property_witness(f, SUBSET_SEARCH_LIMIT, tol))? {
        None => Ok(verdict(
            name,
            true,
            format!(
                "every split of the {} vectors has a spanning side ({} subsets checked)",
                f.len(),
                1u64 << (f.len() - 1)
            ),
        )),
        Some(subset) => {
            let rest: Vec<usize> = (0..f.len()).filter(|i| !subset.contains(i)).collect();
            Ok(verdict(
                name,
                false,
                format!(
                    "neither I = {} nor its complement {} spans R^{} (0-based indices)",
                    fmt_indices(&subset),
                    fmt_indices(&rest),
                    f.dim()
                ),
            ))
        }
    }
}

pub fn verify(file: &Path, check: Check, other: Option<&Path>, tol: &ToleranceConfig) -> Result<Status, String> {
    let doc = FrameDocument::read(file)?;
    let f = &doc.frame;
    if check != Check::DualOf && other.is_some() {
        return Err("--other is only used with --check dual-of".into());
    }
    let r = lib(frame_report(f, tol))?;
    let b = r.bounds;
    let bounds = format!("bounds ({}, {})", n(b.lower), n(b.upper));
    let status = match check {
        Check::Frame => verdict(
            "frame",
            r.is_frame,
            format!("smallest eigenvalue {} vs rank threshold {} ({bounds})", n(b.lower), n(tol.rank_tol * b.upper)),
        ),
        Check::Tight => verdict("tight", r.is_tight, format!("{bounds}, gap {}", n(b.upper - b.lower))),
        Check::Parseval => verdict(
            "parseval",
            r.is_parseval,
            format!("{bounds}, max |eigenvalue - 1| = {}", n(lib(parseval_deviation(f, tol))?)),
        ),
        Check::EqualNorm => {
            let ((i, lo), (j, hi)) = norm_range(&r.norms);
            verdict(
                "equal-norm",
                r.is_equal_norm,
                format!("min norm {} (vector {i}), max norm {} (vector {j})", n(lo), n(hi)),
            )
        }
        Check::Equiangular => {
            let ((i, lo), (j, hi)) = norm_range(&r.norms);
            let norms = format!("norms in [{}, {}] (vectors {i}, {j})", n(lo), n(hi));
            match overlap_range(f) {
                Some((a, z)) => verdict(
                    "equiangular",
                    r.is_equiangular,
                    format!(
                        "normalized overlaps in [{}, {}] (pairs ({}, {}) and ({}, {})), {norms}",
                        n(a.2),
                        n(z.2),
                        a.0,
                        a.1,
                        z.0,
                        z.1
                    ),
                ),
                None => verdict("equiangular", false, format!("no pair of nonzero vectors, {norms}")),
            }
        }
        Check::Exact => {
            if !r.is_frame {
                verdict("exact", false, format!("not a frame: {bounds}"))
            } else {
                match removable_index(f, tol)? {
                    Some((i, lower)) => verdict(
                        "exact",
                        false,
                        format!("removing vector {i} leaves a frame with lower bound {}", n(lower)),
                    ),
                    None => verdict("exact", true, format!("removing any single vector breaks spanning ({bounds})")),
                }
            }
        }
        Check::WelchEquality => match welch_equality_check(f, tol) {
            Ok(pass) => {
                let w = lib(welch_bound(f.len(), f.dim()))?;
                verdict("welch-equality", pass, format!("coherence {} vs Welch bound {}", n(r.coherence), n(w)))
            }
            Err(FrameError::NotUnitNorm { index, norm }) => {
                verdict("welch-equality", false, format!("vector {index} has norm {}, not 1", n(norm)))
            }
            Err(e) => return Err(e.to_string()),
        },
        Check::ComplementProperty => complement_verdict("complement-property", f, tol)?,
        Check::PhaseRetrieval => {
            lib(does_phase_retrieval_real(f, tol).map(|_| ()).or_else(|e| match e {
                FrameError::ComplexUnsupported => Err(e),
                _ => Ok(()),
            }))?;
            complement_verdict("phase-retrieval", f, tol)?
        }
        Check::DualOf => {
            let other = other.ok_or("--check dual-of needs --other FILE")?;
            let g = FrameDocument::read(other)?.frame;
            let pass = lib(is_dual_pair(f, &g, tol))?;
            let (defect, scale) = dual_defect(f, &g);
            verdict("dual-of", pass, format!("|T_f* T_g - Id|_F = {}, allowed {}", n(defect), n(tol.eq_tol * scale)))
        }
        Check::Scaling => {
            let s = lib(scale_to_parseval(f, tol))?;
            let scales = s.scales.iter().map(|&a| n(a)).collect::<Vec<_>>().join(", ");
            verdict("scaling", s.feasible, format!("residual {}, scales [{scales}]", n(s.residual)))
        }
    };
    Ok(status)
}

pub fn fusion(file: &Path, op: FusionOp, tol: &ToleranceConfig) -> Result<Status, String> {
    let ff = read_fusion(file, tol)?;
    let b = lib(fusion_bounds(&ff, tol))?;
    let bounds = json!({ "lower": b.lower, "upper": b.upper });
    let (doc, status) = match op {
        FusionOp::Bounds => {
            (json!({ "bounds": bounds, "is_fusion_frame": lib(is_fusion_frame(&ff, tol))? }), Status::Pass)
        }
        FusionOp::Operator => {
            (json!({ "operator": matrix_json(&fusion_operator(&ff)), "bounds": bounds }), Status::Pass)
        }
        FusionOp::Redundancy => match tight_redundancy(&ff, tol) {
            Ok(c) => (json!({ "tight": true, "redundancy": c, "bounds": bounds }), Status::Pass),
            Err(FrameError::NotTight { .. }) => {
                (json!({ "tight": false, "redundancy": null, "bounds": bounds }), Status::Fail)
            }
            Err(e) => return Err(e.to_string()),
        },
        FusionOp::LocalGlobal => {
            if !ff.has_local_frames() {
                return Err("local-global needs a local_frame on every subspace".into());
            }
            let r = lib(local_global_check(&ff, tol))?;
            let status = if r.all_hold() { Status::Pass } else { Status::Fail };
            (
                json!({
                    "local_bounds": { "lower": r.local_lower, "upper": r.local_upper },
                    "fusion_bounds": { "lower": r.fusion.lower, "upper": r.fusion.upper },
                    "flattened_bounds": { "lower": r.flattened.lower, "upper": r.flattened.upper },
                    "inequalities": {
                        "local_lower_times_fusion_lower_le_flattened_lower": r.lower_from_fusion,
                        "flattened_upper_le_local_upper_times_fusion_upper": r.upper_from_fusion,
                        "flattened_lower_over_local_upper_le_fusion_lower": r.lower_from_flattened,
                        "fusion_upper_le_flattened_upper_over_local_lower": r.upper_from_flattened,
                    },
                    "all_hold": r.all_hold(),
                }),
                status,
            )
        }
    };
    let mut doc = doc;
    doc["tolerances"] = tolerances_json(tol);
    emit(&pretty(&doc), None)?;
    Ok(status)
}

pub fn dual(file: &Path, kind: DualKind, out: Option<&Path>, tol: &ToleranceConfig) -> Result<Status, String> {
    let doc = FrameDocument::read(file)?;
    let (g, name) = match kind {
        DualKind::Canonical => (lib(canonical_dual(&doc.frame, tol))?, "canonical-dual"),
        DualKind::Parseval => (lib(canonical_parseval(&doc.frame, tol))?, "canonical-parseval"),
    };
    let mut meta = Map::new();
    meta.insert("construction".into(), json!(name));
    emit(&FrameDocument::new(g, meta).to_json()?, out)?;
    Ok(Status::Pass)
}

/// Prints the scaling report; with `--out`, also writes the scaled frame
/// when one exists. Exit 1 when no Parseval scaling exists.
pub fn scale(file: &Path, out: Option<&Path>, tol: &ToleranceConfig) -> Result<Status, String> {
    let doc = FrameDocument::read(file)?;
    let s = lib(scale_to_parseval(&doc.frame, tol))?;
    if let (Some(out), true) = (out, s.feasible) {
        let vectors =
            doc.frame.vectors().iter().zip(&s.scales).map(|(v, a)| v.iter().map(|z| z * a).collect()).collect();
        let scaled = lib(Frame::new(doc.frame.dim(), vectors, doc.frame.field()))?;
        let mut meta = Map::new();
        meta.insert("construction".into(), json!("scaled-to-parseval"));
        emit(&FrameDocument::new(scaled, meta).to_json()?, Some(out))?;
    }
    let report = json!({
        "feasible": s.feasible,
        "scales": s.scales,
        "residual": s.residual,
        "tolerances": tolerances_json(tol),
    });
    emit(&pretty(&report), None)?;
    Ok(if s.feasible { Status::Pass } else { Status::Fail })
}

pub fn naimark(file: &Path, out: Option<&Path>, tol: &ToleranceConfig) -> Result<Status, String> {
    let doc = FrameDocument::read(file)?;
    let u = lib(naimark_complete(&doc.frame, tol))?;
    emit(&matrix_text(&u)?, out)?;
    Ok(Status::Pass)
}
