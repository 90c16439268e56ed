use std::io::Read;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use klrw_bimodules::{bar_boundary, transfer, transfer_unit, BarElement, BarTensor, Bimodule, RecursiveTransfer};
use klrw_braiding::{composable_chains, NegativeBraiding, TwMorphism};
use klrw_core::{NormalMorphism, QuiverConfig, Q};
use klrw_hochschild::hh_table;
use klrw_nattrans::{NatTransformation, Target};
use klrw_resolution::{boundary, boundary_generator, check_exactness, enumerate_s, multiply, RecursiveResolution};
use num_traits::One;
use serde_json::{json, Value};

use crate::error::CliError;
use crate::expr::{parse_basis_chain, print_basis_chain};
use crate::params::{params_json, parse_params};
use crate::report::Report;

const MAX_PUNCTURES: usize = 12;
const MAX_DEGREE: usize = 12;

#[derive(Parser, Debug)]
#[command(
    name = "klrw",
    version,
    about = "Resolutions, Hochschild cohomology, braiding and natural transformations for the KLRW category"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Output format on stdout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also write the JSON report to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModuleKind {
    Delta,
    Braid,
    Coker,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct Quiver {
    /// Number of punctures N; objects are T_0..T_N.
    #[arg(long, default_value_t = 4)]
    pub punctures: usize,
}

impl Quiver {
    fn config(&self) -> Result<QuiverConfig, CliError> {
        if self.punctures == 0 || self.punctures > MAX_PUNCTURES {
            return Err(CliError::Usage(format!("--punctures must lie in 1..={MAX_PUNCTURES}")));
        }
        Ok(QuiverConfig::new(self.punctures)?)
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hochschild cohomology dimensions by degree and internal degree.
    Hh {
        #[arg(long, value_enum)]
        module: ModuleKind,
        #[command(flatten)]
        quiver: Quiver,
        #[arg(long, default_value_t = 4)]
        max_degree: usize,
        /// Required for the braid and coker modules.
        #[arg(long)]
        braid_index: Option<usize>,
        #[arg(long, default_value_t = -10, allow_negative_numbers = true)]
        min_internal: i64,
        #[arg(long, default_value_t = 10, allow_negative_numbers = true)]
        max_internal: i64,
    },
    /// Sizes of the ambiguity sets S_n.
    Counts {
        #[command(flatten)]
        quiver: Quiver,
        #[arg(long, default_value_t = 8)]
        max_degree: usize,
    },
    /// Checks ∂² = 0, closed against recursive differential, and optionally exactness.
    VerifyResolution {
        #[command(flatten)]
        quiver: Quiver,
        #[arg(long, default_value_t = 5)]
        max_degree: usize,
        /// Check exactness on every slice with 𝔮 up to this bound.
        #[arg(long)]
        max_qdeg: Option<usize>,
    },
    /// Checks the A∞-functor equations of the negative braiding.
    VerifyFunctor {
        #[command(flatten)]
        quiver: Quiver,
        /// Defaults to every braid index.
        #[arg(long)]
        braid_index: Option<usize>,
        #[arg(long, default_value_t = 2)]
        max_dots: usize,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
    },
    /// Evaluates one component of a natural transformation.
    NatEval {
        /// JSON parameter file.
        #[arg(long)]
        params: PathBuf,
        #[command(flatten)]
        quiver: Quiver,
        /// Chain `[a_d | ... | a_1]`; read from stdin when neither this nor --object is given.
        #[arg(long)]
        input: Option<String>,
        /// Evaluate the arity zero component at this object.
        #[arg(long, conflicts_with = "input")]
        object: Option<usize>,
    },
    /// Checks the cocycle equation of a natural transformation.
    NatVerify {
        /// JSON parameter file.
        #[arg(long)]
        params: PathBuf,
        #[command(flatten)]
        quiver: Quiver,
        /// A single chain to check; otherwise every chain up to --max-length.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, default_value_t = 3)]
        max_length: usize,
        #[arg(long, default_value_t = 2)]
        max_dots: usize,
    },
    /// Applies the comparison map from the bar complex to 1 ⊗ [y_n|...|y_1] ⊗ 1.
    Transfer {
        #[command(flatten)]
        quiver: Quiver,
        /// Expected length of the chain.
        #[arg(long)]
        degree: Option<usize>,
        /// Chain `[y_n | ... | y_1]`; read from stdin when absent.
        #[arg(long)]
        input: Option<String>,
    },
}

fn check_range(name: &str, value: usize, max: usize) -> Result<(), CliError> {
    if value > max {
        return Err(CliError::Usage(format!("--{name} must be at most {max}")));
    }
    Ok(())
}

fn read_input(input: &Option<String>, stdin: &mut dyn Read) -> Result<String, CliError> {
    match input {
        Some(s) => Ok(s.clone()),
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

fn check_objects(cfg: &QuiverConfig, chain: &[NormalMorphism]) -> Result<(), CliError> {
    for m in chain {
        m.validate(cfg)?;
    }
    Ok(())
}

fn module(cfg: &QuiverConfig, kind: ModuleKind, braid_index: Option<usize>) -> Result<Bimodule, CliError> {
    let index = || braid_index.ok_or_else(|| CliError::Usage("--braid-index is required for this module".into()));
    let m = match kind {
        ModuleKind::Delta => Bimodule::Diagonal,
        ModuleKind::Braid => Bimodule::Braid(index()?),
        ModuleKind::Coker => Bimodule::Coker(index()?),
    };
    m.validate(cfg).map_err(|e| CliError::Usage(e.to_string()))?;
    Ok(m)
}

/// Runs a command; `stdin` supplies chains not given on the command line.
pub fn run(command: &Command, stdin: &mut dyn Read) -> Result<Report, CliError> {
    match command {
        Command::Hh {
            module: kind,
            quiver,
            max_degree,
            braid_index,
            min_internal,
            max_internal,
        } => {
            let cfg = quiver.config()?;
            check_range("max-degree", *max_degree, MAX_DEGREE)?;
            if min_internal > max_internal {
                return Err(CliError::Usage("--min-internal exceeds --max-internal".into()));
            }
            let m = module(&cfg, *kind, *braid_index)?;
            hh(&cfg, m, *max_degree, *min_internal..=*max_internal)
        }
        Command::Counts { quiver, max_degree } => {
            let cfg = quiver.config()?;
            check_range("max-degree", *max_degree, MAX_DEGREE)?;
            Ok(counts(&cfg, *max_degree))
        }
        Command::VerifyResolution {
            quiver,
            max_degree,
            max_qdeg,
        } => {
            let cfg = quiver.config()?;
            check_range("max-degree", *max_degree, MAX_DEGREE)?;
            if let Some(q) = max_qdeg {
                check_range("max-qdeg", *q, 24)?;
            }
            verify_resolution(&cfg, *max_degree, *max_qdeg)
        }
        Command::VerifyFunctor {
            quiver,
            braid_index,
            max_dots,
            max_length,
        } => {
            let cfg = quiver.config()?;
            check_range("max-dots", *max_dots, 6)?;
            if !(1..=3).contains(max_length) {
                return Err(CliError::Usage("--max-length must lie in 1..=3".into()));
            }
            let indices: Vec<usize> = match braid_index {
                Some(i) => vec![*i],
                None => cfg.braid_indices().collect(),
            };
            verify_functor(&cfg, &indices, *max_dots, *max_length)
        }
        Command::NatEval {
            params,
            quiver,
            input,
            object,
        } => {
            let cfg = quiver.config()?;
            let nat = load_nat(&cfg, params)?;
            let (source, chain) = match object {
                Some(j) => {
                    cfg.check_object(*j)?;
                    (*j, Vec::new())
                }
                None => {
                    let chain = parse_basis_chain(&read_input(input, stdin)?)?;
                    check_objects(&cfg, &chain)?;
                    let Some(last) = chain.last() else {
                        return Err(CliError::Usage("an empty chain needs --object".into()));
                    };
                    (last.source, chain)
                }
            };
            nat_eval(&nat, source, &chain)
        }
        Command::NatVerify {
            params,
            quiver,
            input,
            max_length,
            max_dots,
        } => {
            let cfg = quiver.config()?;
            check_range("max-length", *max_length, 4)?;
            check_range("max-dots", *max_dots, 6)?;
            let nat = load_nat(&cfg, params)?;
            let chains = match input {
                Some(text) => {
                    let chain = parse_basis_chain(text)?;
                    check_objects(&cfg, &chain)?;
                    if chain.is_empty() {
                        return Err(CliError::Usage("--input needs at least one morphism".into()));
                    }
                    vec![chain]
                }
                None => (1..=*max_length)
                    .flat_map(|len| composable_chains(&cfg, len, *max_dots))
                    .collect(),
            };
            nat_verify(&cfg, &nat, &chains, input.is_none())
        }
        Command::Transfer { quiver, degree, input } => {
            let cfg = quiver.config()?;
            let chain = parse_basis_chain(&read_input(input, stdin)?)?;
            check_objects(&cfg, &chain)?;
            if let Some(d) = degree {
                if *d != chain.len() {
                    return Err(CliError::Usage(format!(
                        "--degree {d} but the chain has {} entries",
                        chain.len()
                    )));
                }
            }
            transfer_report(&chain)
        }
    }
}

fn hh(
    cfg: &QuiverConfig,
    m: Bimodule,
    max_n: usize,
    window: std::ops::RangeInclusive<i64>,
) -> Result<Report, CliError> {
    let entries = hh_table(cfg, m, max_n, window.clone());
    let totals: Vec<(usize, usize)> = (0..=max_n)
        .map(|n| (n, entries.iter().filter(|e| e.n == n).map(|e| e.dim).sum()))
        .collect();
    let mut text = format!(
        "HH of {m}, N = {}, internal degrees {}..={}\n",
        cfg.punctures(),
        window.start(),
        window.end()
    );
    for (n, total) in &totals {
        let parts: Vec<String> = entries
            .iter()
            .filter(|e| e.n == *n)
            .map(|e| format!("D={}:{}", e.d, e.dim))
            .collect();
        text += &format!("HH^{n}: total {total}  {}\n", parts.join(" "));
    }
    let value = json!({
        "command": "hh",
        "module": m.to_string(),
        "punctures": cfg.punctures(),
        "max_degree": max_n,
        "internal_degrees": [window.start(), window.end()],
        "entries": entries.iter().map(|e| json!({"n": e.n, "d": e.d, "dim": e.dim})).collect::<Vec<_>>(),
        "totals": totals.iter().map(|(n, t)| json!({"n": n, "total": t})).collect::<Vec<_>>(),
    });
    Ok(Report::new(value, text, true))
}

fn counts(cfg: &QuiverConfig, max_n: usize) -> Report {
    let sizes: Vec<usize> = (0..=max_n).map(|n| enumerate_s(n, cfg).len()).collect();
    let note = "S_0 lists the N+1 vertex idempotents";
    let mut text = format!("N = {}\n", cfg.punctures());
    for (n, s) in sizes.iter().enumerate() {
        text += &format!("|S_{n}| = {s}\n");
    }
    text += &format!("note: {note}\n");
    let value = json!({
        "command": "counts",
        "punctures": cfg.punctures(),
        "sizes": sizes,
        "note": note,
    });
    Report::new(value, text, true)
}

struct Check {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Self {
            name,
            checked: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        } else if !ok {
            self.failures.push(String::new());
        }
    }

    fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn json(&self) -> Value {
        let shown: Vec<&String> = self.failures.iter().filter(|f| !f.is_empty()).collect();
        json!({
            "name": self.name,
            "checked": self.checked,
            "failed": self.failures.len(),
            "failures": shown,
            "passed": self.passed(),
        })
    }

    fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} {} ({} checked, {} failed)\n",
            self.name,
            self.checked,
            self.failures.len()
        );
        for f in self.failures.iter().filter(|f| !f.is_empty()) {
            s += &format!("  {f}\n");
        }
        s
    }
}

fn checks_report(command: &str, cfg: &QuiverConfig, checks: &[Check], extra: Value) -> Report {
    let passed = checks.iter().all(Check::passed);
    let text: String = checks.iter().map(Check::line).collect();
    let mut value = json!({
        "command": command,
        "punctures": cfg.punctures(),
        "checks": checks.iter().map(Check::json).collect::<Vec<_>>(),
        "passed": passed,
    });
    if let (Value::Object(v), Value::Object(e)) = (&mut value, extra) {
        v.extend(e);
    }
    Report::new(value, text, passed)
}

fn verify_resolution(cfg: &QuiverConfig, max_n: usize, max_q: Option<usize>) -> Result<Report, CliError> {
    let mut square = Check::new("boundary_squared_zero");
    let mut agree = Check::new("closed_equals_recursive");
    let mut rec = RecursiveResolution::new();
    for n in 1..=max_n {
        for gen in enumerate_s(n, cfg) {
            let d = boundary_generator(&gen);
            let dd_zero = if n == 1 {
                multiply(&d)?.is_zero()
            } else {
                boundary(&d)?.is_zero()
            };
            square.record(dd_zero, || format!("{gen}"));
            let r = rec.boundary_generator(&gen)?;
            agree.record(r == d, || format!("{gen}"));
        }
    }
    let mut checks = vec![square, agree];
    if let Some(q) = max_q {
        let mut exact = Check::new("exactness");
        for r in check_exactness(cfg, max_n, q) {
            exact.record(r.exact, || {
                format!(
                    "n={} T{}->T{} q={}: kernel {} image {}",
                    r.degree, r.slice.source, r.slice.target, r.slice.qdeg, r.rank_kernel, r.rank_image
                )
            });
        }
        checks.push(exact);
    }
    Ok(checks_report(
        "verify-resolution",
        cfg,
        &checks,
        json!({"max_degree": max_n, "max_qdeg": max_q}),
    ))
}

fn verify_functor(cfg: &QuiverConfig, indices: &[usize], max_dots: usize, max_len: usize) -> Result<Report, CliError> {
    let mut check = Check::new("functor_equations");
    for &i in indices {
        let beta = NegativeBraiding::new(cfg, i).map_err(|e| CliError::Usage(e.to_string()))?;
        for len in 1..=max_len {
            for chain in composable_chains(cfg, len, max_dots) {
                let r = beta.functor_residual(&chain)?;
                check.record(r.is_zero(), || format!("i={i} {}: {r}", print_basis_chain(&chain)));
            }
        }
    }
    let extra = json!({"braid_indices": indices, "max_dots": max_dots, "max_length": max_len});
    Ok(checks_report("verify-functor", cfg, &[check], extra))
}

fn load_nat(cfg: &QuiverConfig, path: &PathBuf) -> Result<NatTransformation, CliError> {
    let text = std::fs::read_to_string(path)?;
    let params = parse_params(&text)?;
    NatTransformation::new(cfg, params).map_err(|e| CliError::Params(e.to_string()))
}

fn blocks_json(f: &TwMorphism) -> Value {
    Value::Array(
        f.blocks()
            .map(|((t, s), a)| json!({"to": t, "from": s, "value": a.to_string()}))
            .collect(),
    )
}

fn nat_eval(nat: &NatTransformation, source: usize, chain: &[NormalMorphism]) -> Result<Report, CliError> {
    let f = nat.component(source, chain)?;
    let input = print_basis_chain(chain);
    let value = match nat.params().target {
        Target::Identity => f.block(0, 0).to_string(),
        Target::Beta(_) => f.to_string(),
    };
    let text = format!("eta^{}({input}) at T{source} = {value}\n", chain.len());
    let report = json!({
        "command": "nat-eval",
        "params": params_json(nat.params()),
        "source": source,
        "input": input,
        "arity": chain.len(),
        "degree": f.degree(),
        "value": value,
        "blocks": blocks_json(&f),
    });
    Ok(Report::new(report, text, true))
}

fn nat_verify(
    cfg: &QuiverConfig,
    nat: &NatTransformation,
    chains: &[Vec<NormalMorphism>],
    objects: bool,
) -> Result<Report, CliError> {
    let mut check = Check::new("cocycle");
    if objects {
        for j in cfg.objects() {
            let r = nat.residual(j, &[])?;
            check.record(r.is_zero(), || format!("T{j}: {r}"));
        }
    }
    for chain in chains {
        let source = chain.last().map_or(0, |a| a.source);
        let r = nat.residual(source, chain)?;
        check.record(r.is_zero(), || format!("{}: {r}", print_basis_chain(chain)));
    }
    Ok(checks_report(
        "nat-verify",
        cfg,
        &[check],
        json!({"params": params_json(nat.params())}),
    ))
}

fn transfer_report(chain: &[NormalMorphism]) -> Result<Report, CliError> {
    let result = transfer_unit(chain);
    let recursive = RecursiveTransfer::new().unit(chain)?;
    let mut agree = Check::new("closed_equals_recursive");
    agree.record(recursive == result, || format!("recursive gives {recursive}"));
    let mut chain_map = Check::new("chain_map");
    let x = BarElement::from_tensor(BarTensor::unit(chain.to_vec())?, Q::one());
    let lhs = boundary(&transfer(&x))?;
    let rhs = transfer(&bar_boundary(&x)?);
    chain_map.record(lhs == rhs, || format!("∂G = {lhs}, G∂̄ = {rhs}"));
    let terms: Vec<Value> = result
        .terms()
        .map(|(t, c)| {
            json!({
                "coeff": c.to_string(),
                "left": t.left.to_string(),
                "generator": t.gen.to_string(),
                "right": t.right.to_string(),
            })
        })
        .collect();
    let mut text = format!(
        "G_{}({}) has {} terms\n",
        chain.len(),
        print_basis_chain(chain),
        terms.len()
    );
    for (t, c) in result.terms() {
        text += &format!("  {c} * {t}\n");
    }
    let checks = [agree, chain_map];
    let passed = checks.iter().all(Check::passed);
    text += &checks.iter().map(Check::line).collect::<String>();
    let value = json!({
        "command": "transfer",
        "input": print_basis_chain(chain),
        "degree": chain.len(),
        "count": terms.len(),
        "terms": terms,
        "checks": checks.iter().map(Check::json).collect::<Vec<_>>(),
        "passed": passed,
    });
    Ok(Report::new(value, text, passed))
}
