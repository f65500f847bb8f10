mod exit;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use padic_res::limits::{
    example36_poly, example36_verify, iwasawa_fit, lambda_mu_structural, limit_estimate_with, predicted_sign,
    Certified, LimitEstimate, MaskKind,
};
use padic_res::link::{
    character_oracle, h1_nonp_limit_with, h1_order_with, load_link_spec, trefoil, whitehead_closed_form,
    whitehead_link, CoveringSpec, LinkSpec, DEFAULT_TRUNCATION,
};
use padic_res::padic::PadicApprox;
use padic_res::poly::{max_variable_index, parse_poly, MultiPoly};
use padic_res::resultant::{
    cyclic_resultant_baseline, cyclic_resultant_with, root_product_oracle, Budget, CyclicRequest, FactorMask,
};

use exit::CliError;
use report::{Format, Report};

#[derive(Parser)]
#[command(name = "padic-res", version, about = "Iterated cyclic resultants, their p-adic limits and link homology")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Shorten integers longer than 2N digits to their first and last N digits.
    #[arg(long, value_name = "N", global = true)]
    truncate: Option<usize>,
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, value_name = "N", global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact iterated cyclic resultant r_{n1..nd}(f).
    Res(ResArgs),
    /// p-adic limit of r or r' along the diagonal, with certificates.
    Climit(ClimitArgs),
    /// Iwasawa invariants of a univariate polynomial, fitted and structural.
    Iwasawa(IwasawaArgs),
    /// Closed form for a t1^n + g(t2, ..., td) against the diagonal estimate.
    Example36(Example36Args),
    /// Homology order of a branched covering of a link and its p-adic limit.
    Linkh1(Linkh1Args),
    /// Closed-form limit for the k-twisted Whitehead link with an empirical check.
    Whitehead(WhiteheadArgs),
}

#[derive(Args)]
struct ResArgs {
    #[arg(short)]
    p: u64,
    /// Levels n1,...,nd; their count fixes the number of variables.
    #[arg(short, value_delimiter = ',', required = true)]
    n: Vec<u32>,
    /// `r`, `rprime`, or per-variable index sets such as `0,1;2`.
    #[arg(long, default_value = "r")]
    mask: String,
    /// Recompute with the Sylvester baseline and the complex root-product oracle.
    #[arg(long)]
    verify: bool,
    poly: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum Kind {
    R,
    Rprime,
}

impl From<Kind> for MaskKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::R => MaskKind::R,
            Kind::Rprime => MaskKind::RPrime,
        }
    }
}

#[derive(Args)]
struct ClimitArgs {
    #[arg(short)]
    p: u64,
    /// Target p-adic digits.
    #[arg(short = 'K', default_value_t = 3)]
    k: u32,
    #[arg(long, value_enum, default_value_t = Kind::R)]
    mask: Kind,
    /// Number of variables (default: highest index used).
    #[arg(short)]
    d: Option<usize>,
    poly: String,
}

#[derive(Args)]
struct IwasawaArgs {
    #[arg(short)]
    p: u64,
    #[arg(long, default_value_t = 5)]
    n_max: u32,
    poly: String,
}

#[derive(Args)]
struct Example36Args {
    #[arg(short, allow_hyphen_values = true)]
    a: i64,
    #[arg(short)]
    n: u32,
    /// Polynomial in t2, ..., td.
    #[arg(short, allow_hyphen_values = true)]
    g: String,
    /// Number of variables d of f (default: highest index in g, at least 1).
    #[arg(short)]
    d: Option<usize>,
    #[arg(short)]
    p: u64,
    #[arg(short = 'K', default_value_t = 3)]
    k: u32,
}

#[derive(Args)]
struct Linkh1Args {
    /// Link description in JSON.
    #[arg(long, conflicts_with = "builtin")]
    spec: Option<PathBuf>,
    /// `trefoil` or `whitehead:K`.
    #[arg(long)]
    builtin: Option<String>,
    #[arg(short)]
    p: u64,
    /// One level per component, or a single level for the diagonal covering.
    #[arg(short, value_delimiter = ',', required = true)]
    n: Vec<u32>,
    /// Also estimate the limit h(M, L) to this many digits.
    #[arg(short = 'K')]
    k: Option<u32>,
    /// Recompute the order by the literal character sum.
    #[arg(long)]
    verify: bool,
}

#[derive(Args)]
struct WhiteheadArgs {
    #[arg(short, allow_hyphen_values = true)]
    k: i64,
    #[arg(short)]
    p: u64,
    #[arg(short = 'K', default_value_t = 3)]
    digits: u32,
    /// Truncation level of the product for p = 2.
    #[arg(long, default_value_t = DEFAULT_TRUNCATION)]
    l_max: u32,
}

fn parse_mask(text: &str, levels: &[u32]) -> Result<FactorMask, CliError> {
    match text {
        "r" => Ok(FactorMask::full(levels)),
        "rprime" => Ok(FactorMask::rprime(levels)),
        custom => {
            let mut sets = Vec::new();
            for part in custom.split(';') {
                let mut set = Vec::new();
                for j in part.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    set.push(j.parse::<u32>().map_err(|_| CliError::user(format!("bad mask index {j:?}")))?);
                }
                sets.push(set);
            }
            if sets.len() != levels.len() {
                return Err(CliError::user(format!("mask has {} sets for {} variables", sets.len(), levels.len())));
            }
            Ok(FactorMask::custom(sets))
        }
    }
}

fn parse(text: &str, nvars: usize) -> Result<MultiPoly, CliError> {
    parse_poly(text, nvars).map_err(|e| CliError::user(format!("parse error: {e}")))
}

fn padic_fields(r: &mut Report, key: &str, x: &PadicApprox) {
    let residue = x.residue();
    r.put_int(key, &residue);
    r.put(&format!("{key}_modulus"), format!("{}^{}", x.p(), x.precision()));
}

fn estimate_fields(r: &mut Report, e: &LimitEstimate) {
    r.put("zero_limit", e.zero_limit);
    match e.raw_certified {
        Certified::Exact => {
            r.put("limit", "0");
            r.put("limit_certified", "exact");
        }
        Certified::Digits(k) => {
            padic_fields(r, "limit", &e.raw);
            r.put("limit_certified", k);
        }
    }
    padic_fields(r, "nonp_limit", &e.nonp);
    r.put("nonp_certified", e.nonp_certified);
    r.put("levels_used", e.levels_used.clone());
    r.put("valuations", e.valuations.clone());
    r.put("stabilized", e.stabilized);
}

fn cmd_res(a: &ResArgs, budget: &Budget, out: &mut Report) -> Result<(), CliError> {
    let f = parse(&a.poly, a.n.len())?;
    let mask = parse_mask(&a.mask, &a.n)?;
    let req = CyclicRequest::new(f, a.p, a.n.clone(), mask)?;
    let value = cyclic_resultant_with(&req, budget)?;
    out.put_int("value", &value);
    if a.verify {
        let baseline = cyclic_resultant_baseline(&req, budget.baseline_dimension)?;
        let oracle = root_product_oracle(&req)?;
        out.put("baseline_agrees", baseline == value);
        out.put("oracle_agrees", oracle == value);
        if baseline != value || oracle != value {
            return Err(CliError::mismatch(format!(
                "fast path {value}, baseline {baseline}, root-product oracle {oracle}"
            )));
        }
    }
    Ok(())
}

fn cmd_climit(a: &ClimitArgs, budget: &Budget, out: &mut Report) -> Result<(), CliError> {
    let d = a.d.unwrap_or_else(|| max_variable_index(&a.poly).max(1));
    let f = parse(&a.poly, d)?;
    let kind = MaskKind::from(a.mask);
    let e = limit_estimate_with(&f, a.p, a.k, kind, budget)?;
    out.put("p", a.p).put("polynomial", f.to_canonical_string());
    out.put("mask", if kind == MaskKind::R { "r" } else { "rprime" });
    match predicted_sign(&f, a.p, kind) {
        Ok(s) => out.put("sign", s),
        Err(_) => out.put("sign", serde_json::Value::Null),
    };
    estimate_fields(out, &e);
    Ok(())
}

fn cmd_iwasawa(a: &IwasawaArgs, out: &mut Report) -> Result<(), CliError> {
    let f = parse(&a.poly, 1)?;
    let u = f.to_int_univariate(0).expect("univariate");
    let fit = iwasawa_fit(&u, a.p, a.n_max)?;
    let (lambda, mu) = lambda_mu_structural(&u, a.p)?;
    out.put("p", a.p).put("polynomial", f.to_canonical_string());
    out.put("lambda", fit.lambda).put("mu", fit.mu).put("nu", fit.nu);
    out.put("window", vec![fit.window.0, fit.window.1]);
    out.put("exponents", fit.exponents.clone());
    out.put("structural_lambda", lambda).put("structural_mu", mu);
    let agree = (lambda, mu) == (fit.lambda, fit.mu);
    out.put("routes_agree", agree);
    if !agree {
        return Err(CliError::mismatch(format!(
            "fitted (lambda, mu) = ({}, {}) but structural = ({lambda}, {mu})",
            fit.lambda, fit.mu
        )));
    }
    Ok(())
}

fn cmd_example36(a: &Example36Args, budget: &Budget, out: &mut Report) -> Result<(), CliError> {
    let d = a.d.unwrap_or_else(|| max_variable_index(&a.g).max(1));
    if d == 0 {
        return Err(CliError::user("d must be at least 1"));
    }
    let full = parse(&a.g, d)?;
    if full.degree_in(0).unwrap_or(0) > 0 {
        return Err(CliError::user("g must not involve t1"));
    }
    let g = MultiPoly::from_terms(d - 1, full.terms().map(|(m, c)| (c.clone(), m.0[1..].to_vec())));
    let chk = example36_verify(a.a, a.n, &g, a.p, a.k, budget)?;
    out.put("p", a.p).put("polynomial", example36_poly(a.a, a.n, &g).to_canonical_string());
    padic_fields(out, "closed_form", &chk.closed);
    estimate_fields(out, &chk.estimate);
    out.put("agrees", chk.agrees);
    if !chk.agrees {
        return Err(CliError::mismatch("closed form and diagonal estimate disagree"));
    }
    Ok(())
}

fn load_link(a: &Linkh1Args) -> Result<LinkSpec, CliError> {
    if let Some(path) = &a.spec {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::user(format!("cannot read {}: {e}", path.display())))?;
        return Ok(load_link_spec(&text)?);
    }
    match a.builtin.as_deref() {
        Some("trefoil") => Ok(trefoil()),
        Some(b) if b.starts_with("whitehead:") => {
            let k: i64 = b["whitehead:".len()..].parse().map_err(|_| CliError::user(format!("bad builtin {b:?}")))?;
            Ok(whitehead_link(k)?)
        }
        Some(b) => Err(CliError::user(format!("unknown builtin {b:?}"))),
        None => Err(CliError::user("one of --spec or --builtin is required")),
    }
}

fn cmd_linkh1(a: &Linkh1Args, budget: &Budget, out: &mut Report) -> Result<(), CliError> {
    let link = load_link(a)?;
    let levels = if a.n.len() == 1 { vec![a.n[0]; link.d] } else { a.n.clone() };
    let cov = CoveringSpec::new(a.p, levels.clone())?;
    let h = h1_order_with(&link, &cov, budget)?;
    out.put("link", link.name.clone()).put("p", a.p).put("levels", levels);
    out.put_int("order", &h.order);
    out.put_int("nonp", &h.nonp_part);
    out.put("p_exponent", h.p_exponent);
    out.put("rational_homology_sphere", h.is_rational_homology_sphere());
    if a.verify {
        let o = character_oracle(&link, &cov)?;
        out.put("oracle_agrees", o == h);
        if o != h {
            return Err(CliError::mismatch(format!("product formula gives {} but character sum {}", h.order, o.order)));
        }
    }
    if let Some(k) = a.k {
        let e = h1_nonp_limit_with(&link, a.p, k, budget)?;
        estimate_fields(out, &e);
    }
    Ok(())
}

fn cmd_whitehead(a: &WhiteheadArgs, budget: &Budget, out: &mut Report) -> Result<(), CliError> {
    let c = whitehead_closed_form(a.k, a.p, a.digits, a.l_max)?;
    out.put("k", a.k).put("p", a.p);
    padic_fields(out, "closed_form", &c.value);
    out.put("closed_form_digits", c.achieved.min(a.digits));
    if let Some(l) = c.l_max {
        out.put("truncation_level", l);
    }
    let e = h1_nonp_limit_with(&whitehead_link(a.k)?, a.p, a.digits, budget)?;
    padic_fields(out, "empirical", &e.nonp);
    out.put("empirical_certified", e.nonp_certified);
    let digits = e.nonp_certified.min(c.achieved).min(a.digits);
    let agree = c.value.eq_mod(&e.nonp, digits);
    out.put("compared_digits", digits).put("agrees", agree);
    if !agree {
        return Err(CliError::mismatch("closed form and empirical limit disagree"));
    }
    Ok(())
}

fn run(cli: &Cli, out: &mut Report) -> Result<(), CliError> {
    let budget = Budget::from_env();
    match &cli.command {
        Command::Res(a) => cmd_res(a, &budget, out),
        Command::Climit(a) => cmd_climit(a, &budget, out),
        Command::Iwasawa(a) => cmd_iwasawa(a, out),
        Command::Example36(a) => cmd_example36(a, &budget, out),
        Command::Linkh1(a) => cmd_linkh1(a, &budget, out),
        Command::Whitehead(a) => cmd_whitehead(a, &budget, out),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(exit::USER_ERROR as u8);
        }
    }
    let mut out = Report::new(cli.truncate);
    let result = run(&cli, &mut out);
    let bare_value = matches!(cli.command, Command::Res(_)) && cli.format == Format::Table;
    let text = if bare_value { out.render_bare_first() } else { out.render(cli.format) };
    match result {
        Ok(()) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            if e.code == exit::ORACLE_MISMATCH {
                print!("{text}");
            }
            eprintln!("error: {e}");
            ExitCode::from(e.code as u8)
        }
    }
}
