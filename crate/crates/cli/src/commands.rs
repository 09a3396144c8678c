use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use adinkra::adinkra::{cayley_graph, is_generic, one_cube, prism, signature_classes};
use adinkra::analysis::{
    catalog_codes, check_cayley_correspondence, compute_table, format_table, profiles, reproduce_table, run_suite,
    standard_form, Suite, SuiteOptions,
};
use adinkra::codes::{standard_code, BinaryCode, BitVector};
use adinkra::exactmat::{
    adjacency_matrix, block_x, colored_adjacency, det_fp, det_int, det_laplacian_hat, det_zpoly, laplacian_hat,
    laplacian_matrix, reduce_int_mod_p, reduce_poly_mod_p, specialize_first, x_hat, AnyMatrix, FpPoly, FpPolyMatrix,
    FpX, IntMatrix, ZPolyMatrix,
};
use adinkra::limits;
use adinkra::snf::{p_corank, snf_fpx, snf_int, x_minus_one_multiplicity, FactorProfile};
use adinkra::{Adinkra, Error, Result};
use rayon::prelude::*;
use serde_json::json;

use crate::{
    AdinkraSource, BuildArgs, CayleyArgs, ClassesArgs, Cli, CodeSource, Command, DetArgs, MatrixKind, RingChoice,
    SignatureSource, SnfArgs, TableArgs, VerifyArgs,
};

/// Runs the command, appending what it prints to `out`.
pub fn run(cli: &Cli, out: &mut String) -> Result<u8> {
    match &cli.command {
        Command::Build(a) => build(a, out),
        Command::Snf(a) => snf(cli, a, out),
        Command::Det(a) => det(cli, a, out),
        Command::Table(a) => table(cli, a, out),
        Command::Verify(a) => verify(cli, a, out),
        Command::Classes(a) => classes(cli, a, out),
        Command::Cayley(a) => cayley(cli, a, out),
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Io(std::io::Error::new(e.kind(), format!("{}: {e}", path.display()))))
}

fn load_code(src: &CodeSource) -> Result<Option<BinaryCode>> {
    match (&src.code, &src.code_file) {
        (Some(name), _) => standard_code(name).map(Some),
        (None, Some(path)) => BinaryCode::parse_generator_text(&read(path)?).map(Some),
        (None, None) => Ok(None),
    }
}

fn require_code(src: &CodeSource) -> Result<BinaryCode> {
    load_code(src)?.ok_or_else(|| Error::InvalidParameter("give --code or --code-file".into()))
}

/// Drops the last coordinate when every generator vanishes there.
fn strip_last_column(code: &BinaryCode) -> Result<Option<BinaryCode>> {
    let n = code.length();
    if n < 2 || code.generators().iter().any(|g| g.get(n - 1)) {
        return Ok(None);
    }
    let gens = code.generators().iter().map(|g| BitVector::from_bits(g.bits().take(n - 1))).collect();
    BinaryCode::new(n - 1, gens).map(Some)
}

fn prism_adinkra(code: &BinaryCode) -> Result<Adinkra> {
    if code.length() == 1 && code.dimension() == 0 {
        return Ok(one_cube());
    }
    match strip_last_column(code)? {
        Some(base) => Ok(prism(&prism_adinkra(&base).or_else(|_| Adinkra::from_code(&base))?)),
        None => Err(Error::InvalidParameter(format!(
            "{} is not a prism: its last coordinate is not zero on every codeword",
            code.name()
        ))),
    }
}

fn load_adinkra(src: &AdinkraSource) -> Result<Adinkra> {
    if let Some(path) = &src.adinkra_file {
        if !matches!(src.signature, SignatureSource::File | SignatureSource::Solve) {
            return Err(Error::InvalidParameter("--adinkra-file supplies its own signature".into()));
        }
        return Adinkra::from_json(&read(path)?);
    }
    let code = require_code(&src.code)?;
    let a = match src.signature {
        SignatureSource::Solve => Adinkra::from_code(&code)?,
        SignatureSource::Prism => prism_adinkra(&code)?,
        SignatureSource::File => return Err(Error::InvalidParameter("--signature file needs --adinkra-file".into())),
        SignatureSource::ClassIndex => {
            let classes = signature_classes(&Adinkra::from_code(&code)?)?;
            let count = classes.len();
            classes.into_iter().nth(src.class_index).ok_or_else(|| {
                Error::InvalidParameter(format!("class index {} out of range: {} has {count} classes", src.class_index, code.name()))
            })?
        }
    };
    let report = a.validate();
    if !report.is_clean() {
        return Err(Error::Invalid(report));
    }
    Ok(a)
}

fn build(args: &BuildArgs, out: &mut String) -> Result<u8> {
    let a = load_adinkra(&args.source)?;
    let text = a.to_json();
    match &args.output {
        Some(path) => fs::write(path, text + "\n")?,
        None => {
            let _ = writeln!(out, "{text}");
        }
    }
    Ok(0)
}

fn int_matrix(a: &Adinkra, kind: MatrixKind) -> Result<IntMatrix> {
    match kind {
        MatrixKind::Laplacian => Ok(laplacian_matrix(a)),
        MatrixKind::Adjacency => Ok(adjacency_matrix(a)),
        MatrixKind::X => block_x(a),
    }
}

fn lifted_matrix(a: &Adinkra, kind: MatrixKind) -> Result<ZPolyMatrix> {
    match kind {
        MatrixKind::Laplacian => Ok(laplacian_hat(a)),
        MatrixKind::Adjacency => Ok(specialize_first(&colored_adjacency(a), a.n_colors())),
        MatrixKind::X => x_hat(a),
    }
}

fn poly_profile_text(p: &FactorProfile<FpPoly>) -> String {
    let parts: Vec<String> = p
        .entries()
        .iter()
        .map(|(f, k)| {
            let f = if f.degree().unwrap_or(0) > 0 { format!("[{f}]") } else { f.to_string() };
            if *k == 1 {
                f
            } else {
                format!("{f}^{k}")
            }
        })
        .collect();
    format!("({})", parts.join(","))
}

fn snf(cli: &Cli, args: &SnfArgs, out: &mut String) -> Result<u8> {
    let file = args.matrix_file.as_deref().map(read).transpose()?.map(|t| AnyMatrix::from_json(&t)).transpose()?;
    match args.ring {
        RingChoice::Z => {
            let m = match file {
                Some(AnyMatrix::Int(m)) => m,
                Some(other) => {
                    return Err(Error::InvalidParameter(format!("ring Z needs an integer matrix, not {}", other.to_doc().ring)))
                }
                None => int_matrix(&load_adinkra(&args.source)?, args.kind)?,
            };
            let corank = args.p.map(|p| p_corank(&m, p)).transpose()?;
            let r = snf_int(&m)?;
            if cli.json {
                let mut doc = r.to_json(args.p, args.witnesses);
                if let Some(c) = corank {
                    doc["p_corank"] = json!(c);
                }
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc)?);
            } else {
                let _ = writeln!(out, "{}", r.profile());
                if let (Some(p), Some(c)) = (args.p, corank) {
                    let _ = writeln!(out, "{p}-corank: {c}");
                }
            }
        }
        RingChoice::Fpx => {
            let p = args.p.ok_or_else(|| Error::InvalidParameter("--ring Fpx needs --p".into()))?;
            let ring = FpX::new(p)?;
            let m: FpPolyMatrix = match file {
                Some(AnyMatrix::Int(m)) => reduce_poly_mod_p(&ZPolyMatrix::from_int(&m), p)?,
                Some(AnyMatrix::ZX(m)) => reduce_poly_mod_p(&m, p)?,
                Some(AnyMatrix::Multi { nvars, m }) => reduce_poly_mod_p(&specialize_first(&m, nvars), p)?,
                Some(AnyMatrix::Fp { p: q, m }) if q == ring.p() => FpPolyMatrix::from_fp(&m),
                Some(AnyMatrix::FpX { p: q, m }) if q == ring.p() => m,
                Some(_) => return Err(Error::InvalidParameter(format!("matrix file is over a different prime than {p}"))),
                None => reduce_poly_mod_p(&lifted_matrix(&load_adinkra(&args.source)?, args.kind)?, p)?,
            };
            let r = snf_fpx(&m, p)?;
            let mult = x_minus_one_multiplicity(&r, p)?;
            if cli.json {
                let mut doc = r.to_json(Some(p), args.witnesses);
                doc["x_minus_1_multiplicity"] = json!(mult);
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc)?);
            } else {
                let _ = writeln!(out, "{}", poly_profile_text(&r.profile()));
                let _ = writeln!(out, "(x-1)-multiplicity: {mult}");
            }
        }
    }
    Ok(0)
}

fn det(cli: &Cli, args: &DetArgs, out: &mut String) -> Result<u8> {
    let a = load_adinkra(&args.source)?;
    let value = if args.lifted {
        match args.kind {
            MatrixKind::Laplacian => det_laplacian_hat(&a)?,
            kind => det_zpoly(&lifted_matrix(&a, kind)?)?,
        }
        .to_string()
    } else {
        let m = int_matrix(&a, args.kind)?;
        match args.p {
            Some(p) => det_fp(&reduce_int_mod_p(&m, p)?, p)?.to_string(),
            None => det_int(&m)?.to_string(),
        }
    };
    if cli.json {
        let _ = writeln!(out, "{}", json!({ "det": value, "p": args.p, "lifted": args.lifted }));
    } else {
        let _ = writeln!(out, "{value}");
    }
    Ok(0)
}

fn table(cli: &Cli, args: &TableArgs, out: &mut String) -> Result<u8> {
    limits::check(args.max_n as u128, limits::MAX_TABLE_N as u128, "table max-n")?;
    let entries = if args.check { reproduce_table(args.max_n, args.max_k)? } else { compute_table(args.max_n, args.max_k)? };
    if cli.json {
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&entries)?);
    } else {
        let _ = write!(out, "{}", format_table(&entries));
        if args.check {
            let _ = writeln!(out, "all {} entries match the published table", entries.len());
        }
    }
    Ok(0)
}

fn verify(cli: &Cli, args: &VerifyArgs, out: &mut String) -> Result<u8> {
    let suite: Suite = args.suite.parse()?;
    let codes = match load_code(&args.code)? {
        Some(c) => vec![c],
        None => catalog_codes(8)?,
    };
    let reports = run_suite(suite, &codes, SuiteOptions { trials: args.trials, seed: cli.seed })?;
    let passed = reports.iter().filter(|r| r.pass).count();
    if cli.json {
        let docs: Vec<_> = reports.iter().map(|r| r.to_json()).collect();
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&docs)?);
    } else {
        for r in &reports {
            let _ = write!(out, "{r}");
        }
        let _ = writeln!(out, "{passed}/{} passed", reports.len());
    }
    Ok(if passed == reports.len() { 0 } else { 1 })
}

fn classes(cli: &Cli, args: &ClassesArgs, out: &mut String) -> Result<u8> {
    let code = require_code(&args.code)?;
    let reps = signature_classes(&Adinkra::from_code(&code)?)?;
    let profs = reps.par_iter().map(profiles).collect::<Result<Vec<_>>>()?;
    let agree = profs.iter().all(|p| p.0 == profs[0].0);
    if cli.json {
        let rows: Vec<_> = profs
            .iter()
            .enumerate()
            .map(|(i, (l, x))| json!({ "class": i, "profile": l.to_string(), "x_profile": x.to_string() }))
            .collect();
        let doc = json!({ "code": code.name(), "classes": rows, "agree": agree });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc)?);
    } else {
        let _ = writeln!(out, "{}: {} classes", code.name(), reps.len());
        for (i, (l, x)) in profs.iter().enumerate() {
            let _ = writeln!(out, "  class {i}: L {l}  X {x}");
        }
        if agree {
            let _ = writeln!(out, "all classes share one Laplacian profile");
        }
    }
    if !agree {
        eprintln!("WARNING: switching classes of {} have different Laplacian profiles", code.name());
    }
    Ok(0)
}

fn cayley(cli: &Cli, args: &CayleyArgs, out: &mut String) -> Result<u8> {
    let code = require_code(&args.code)?;
    let (m, order) = standard_form(&code);
    let generic = is_generic(&m);
    let g = cayley_graph(&m)?;
    let report = check_cayley_correspondence(&code)?;
    if cli.json {
        let rows: Vec<String> = m.rows().iter().map(ToString::to_string).collect();
        let doc = json!({
            "code": code.name(),
            "M": rows,
            "column_order": order,
            "generic": generic,
            "vertices": g.num_vertices(),
            "report": report.to_json(),
        });
        let _ = writeln!(out, "{}", serde_json::to_string_pretty(&doc)?);
    } else {
        let _ = writeln!(out, "M (kernel {}):", code.name());
        for row in m.rows() {
            let _ = writeln!(out, "  {row}");
        }
        let _ = writeln!(out, "column order for [I | A]: {order:?}");
        let _ = writeln!(out, "generic: {}", if generic { "yes" } else { "no" });
        let _ = writeln!(out, "Cayley graph: {} vertices", g.num_vertices());
        let _ = write!(out, "{report}");
    }
    Ok(if report.pass { 0 } else { 1 })
}
