use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use ltl_teach::characterization::{
    characterize_finite_fragment, characterize_monotone, characterize_monotone_G, characterize_x_omega,
    classify_operator_set, size_report, DualVariant, FiniteOptions, MonotoneOptions, PositivePruning, Sample,
};
use ltl_teach::logic::{parse_formula, Alphabet, FragmentSignature, Formula, Op};
use ltl_teach::schematic::characterize_schematic;
use ltl_teach::verification::{
    adversary, gold_learn, gold_teach_with, oracle_upward_closure, verify_unique_with, CompiledFormula, EnumerationOrder,
    Family, FitOptions, OracleVerdict, SchemaMode, SearchBound, UniqueOptions, UniquenessStatus,
};
use ltl_teach::words::WordExpr;
use ltl_teach::Error;

const SIZE_WARNING: &str =
    "characterization size grows doubly exponentially in the formula size; pass a larger --budget to proceed";

#[derive(Parser)]
#[command(name = "ltl-teach", version, about = "Finite characterizations of LTL formulas by labeled examples")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct FormulaArgs {
    /// Comma-separated atomic propositions, e.g. `p,q,r`.
    #[arg(long)]
    ap: String,
    #[arg(long)]
    formula: String,
}

impl FormulaArgs {
    fn parse(&self) -> Result<(Alphabet, Formula)> {
        let ap = Alphabet::parse(&self.ap).context("--ap")?;
        let f = parse_formula(&self.formula, &ap).context("--formula")?;
        Ok((ap, f))
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Corrected,
    Paper,
}

#[derive(Clone, Copy, ValueEnum)]
enum PruningArg {
    None,
    Prefix,
    Minimal,
}

#[derive(Args, Clone)]
struct MonotoneArgs {
    #[arg(long, value_enum, default_value = "corrected")]
    dual_variant: VariantArg,
    /// Reduction of the canonical positives.
    #[arg(long, value_enum, default_value = "prefix")]
    pruning: PruningArg,
}

impl MonotoneArgs {
    fn options(&self, budget: Option<u64>) -> MonotoneOptions {
        MonotoneOptions {
            variant: match self.dual_variant {
                VariantArg::Corrected => DualVariant::Corrected,
                VariantArg::Paper => DualVariant::Paper,
            },
            pruning: match self.pruning {
                PruningArg::None => PositivePruning::None,
                PruningArg::Prefix => PositivePruning::Prefix,
                PruningArg::Minimal => PositivePruning::Minimal,
            },
            budget,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Fragment {
    Monotone,
    MonotoneG,
    XOmega,
    Finite(FragmentSignature),
}

fn parse_fragment(s: &str) -> Result<Fragment, String> {
    match s {
        "monotone" => Ok(Fragment::Monotone),
        "monotone-g" => Ok(Fragment::MonotoneG),
        "x-omega" => Ok(Fragment::XOmega),
        _ => match s.strip_prefix("finite:") {
            Some(ops) => FragmentSignature::parse(ops).map(Fragment::Finite).map_err(|e| e.to_string()),
            None => Err("expected monotone, monotone-g, x-omega or finite:<OPS>".into()),
        },
    }
}

fn parse_ops(s: &str) -> Result<FragmentSignature, String> {
    FragmentSignature::parse(s).map_err(|e| e.to_string())
}

impl Fragment {
    /// Operator set quantified over by uniqueness checks, and whether candidates are dualized.
    fn operators(self) -> (FragmentSignature, bool) {
        let base = [Op::StrictEventually, Op::And, Op::Or, Op::True, Op::False];
        match self {
            Fragment::Monotone => (FragmentSignature::monotone(), false),
            Fragment::MonotoneG => (FragmentSignature::of(&base), true),
            Fragment::XOmega => (FragmentSignature::of(&[Op::Next, Op::And, Op::Or, Op::True, Op::False]), false),
            Fragment::Finite(ops) => (ops, false),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Emit a characterizing sample.
    Characterize {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, default_value = "monotone", value_parser = parse_fragment)]
        fragment: Fragment,
        #[command(flatten)]
        monotone: MonotoneArgs,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit a sample of simple schematic examples.
    CharacterizeSchematic {
        #[command(flatten)]
        formula: FormulaArgs,
        #[command(flatten)]
        monotone: MonotoneArgs,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a formula on a finite word or a flat word expression.
    Eval {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, conflicts_with = "expr", required_unless_present = "expr")]
        word: Option<String>,
        #[arg(long)]
        expr: Option<String>,
    },
    /// Check whether a formula fits a sample file.
    Fits {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        sample: PathBuf,
        /// Judge schemas by their instances up to this length.
        #[arg(long)]
        max_len: Option<usize>,
    },
    /// Check that no inequivalent formula of bounded size fits the sample.
    VerifyUnique {
        #[arg(long)]
        formula: String,
        #[arg(long)]
        sample: PathBuf,
        #[arg(long, value_parser = parse_fragment)]
        fragment: Fragment,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        /// Word length for the exhaustive equivalence search.
        #[arg(long)]
        max_len: Option<usize>,
        /// Word-count cap for the exhaustive equivalence search.
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Decide whether an operator set admits finite characterizations.
    Classify {
        #[arg(long, value_parser = parse_ops)]
        ops: FragmentSignature,
    },
    /// Produce a competitor that fits the sample but differs from the family target.
    Adversary {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        sample: PathBuf,
    },
    /// Emit the teacher's characteristic sample.
    Teach {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, value_parser = parse_ops)]
        ops: FragmentSignature,
        /// Enumeration bound; defaults to the larger of 4 and the formula size.
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the enumeration-least formula fitting a sample.
    Learn {
        #[arg(long)]
        sample: PathBuf,
        #[arg(long, value_parser = parse_ops)]
        ops: FragmentSignature,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
    },
    /// Compare a monotone formula with the upward closure of its canonical set.
    Oracle {
        #[command(flatten)]
        formula: FormulaArgs,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Check the length bound of a monotone characterization and report its sizes.
    SizeReport {
        #[command(flatten)]
        formula: FormulaArgs,
        #[command(flatten)]
        monotone: MonotoneArgs,
        #[arg(long)]
        budget: Option<u64>,
    },
}

const MONOTONE_BUDGET: u64 = 100_000;
const X_OMEGA_BUDGET: u64 = 1 << 20;

fn write_output(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        None => {
            print!("{text}");
            Ok(())
        }
        Some(path) => {
            let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
            let name = path.file_name().ok_or_else(|| anyhow!("{} is not a file path", path.display()))?;
            let tmp = dir.join(format!(".{}.{}.tmp", name.to_string_lossy(), std::process::id()));
            let mut file = fs::File::create(&tmp).with_context(|| format!("creating {}", tmp.display()))?;
            file.write_all(text.as_bytes())?;
            file.sync_all()?;
            drop(file);
            fs::rename(&tmp, path).with_context(|| format!("writing {}", path.display()))?;
            Ok(())
        }
    }
}

fn read_sample(path: &Path) -> Result<Sample> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(Sample::parse(&text).with_context(|| format!("parsing {}", path.display()))?)
}

fn verdict(b: bool) -> ExitCode {
    if b {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Characterize { formula, fragment, monotone, max_size, budget, out } => {
            let (ap, f) = formula.parse()?;
            let report = match fragment {
                Fragment::Monotone => {
                    characterize_monotone(&f, &ap, &monotone.options(Some(budget.unwrap_or(MONOTONE_BUDGET))))?
                }
                Fragment::MonotoneG => {
                    characterize_monotone_G(&f, &ap, &monotone.options(Some(budget.unwrap_or(MONOTONE_BUDGET))))?
                }
                Fragment::XOmega => characterize_x_omega(&f, &ap, budget.unwrap_or(X_OMEGA_BUDGET))?,
                Fragment::Finite(ops) => {
                    let mut opts = FiniteOptions { max_size, ..FiniteOptions::default() };
                    if let Some(b) = budget {
                        opts.budget = b;
                    }
                    characterize_finite_fragment(&f, ops, &ap, &opts)?
                }
            };
            write_output(out.as_deref(), &report.sample.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::CharacterizeSchematic { formula, monotone, budget, out } => {
            let (ap, f) = formula.parse()?;
            let s = characterize_schematic(&f, &ap, &monotone.options(Some(budget.unwrap_or(MONOTONE_BUDGET))))?;
            write_output(out.as_deref(), &s.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Eval { formula, word, expr } => {
            let (ap, f) = formula.parse()?;
            let c = CompiledFormula::new(&f, &ap);
            let value = match (word, expr) {
                (Some(w), _) => c.eval_word(&ap.parse_word(&w).context("--word")?)?,
                (None, Some(e)) => c.eval_expr(&WordExpr::parse(&e, &ap).context("--expr")?)?,
                (None, None) => unreachable!("clap requires one of --word and --expr"),
            };
            println!("{value}");
            Ok(verdict(value))
        }
        Command::Fits { formula, sample, max_len } => {
            let s = read_sample(&sample)?;
            let f = parse_formula(&formula, &s.ap).context("--formula")?;
            let mut opts = FitOptions::default();
            if let Some(len) = max_len {
                opts.schema = SchemaMode::Instances(len);
            }
            let report = CompiledFormula::new(&f, &s.ap).fits(&s, &opts)?;
            match report.first_failure {
                None => println!("fits"),
                Some(i) => {
                    let ex = &s.examples()[i];
                    println!("does not fit example {}: {} {} {}", i + 1, ex.label.sign(), ex.payload.kind(), ex.payload.display(&s.ap));
                }
            }
            Ok(verdict(report.fits()))
        }
        Command::VerifyUnique { formula, sample, fragment, max_size, max_len, budget } => {
            let s = read_sample(&sample)?;
            let f = parse_formula(&formula, &s.ap).context("--formula")?;
            let (ops, strict_globally) = fragment.operators();
            let mut opts = UniqueOptions::new(max_size);
            opts.strict_globally = strict_globally;
            opts.search = SearchBound { max_len, max_words: budget.unwrap_or(SearchBound::default().max_words) };
            let v = verify_unique_with(&f, &s, ops, &opts)?;
            match &v.status {
                UniquenessStatus::Confirmed => {
                    println!("confirmed ({} formulas examined, {} fit)", v.examined, v.fitting);
                    Ok(ExitCode::SUCCESS)
                }
                UniquenessStatus::Refuted { competitor, disagreement } => {
                    println!("refuted by {} on {}", competitor.display(&s.ap), s.ap.fmt_word(disagreement));
                    Ok(ExitCode::from(1))
                }
                UniquenessStatus::BoundExhausted { undecided } => {
                    println!("bound exhausted: {} undecided", undecided.display(&s.ap));
                    Ok(ExitCode::from(3))
                }
            }
        }
        Command::Classify { ops } => {
            let c = classify_operator_set(ops)?;
            println!("{c}");
            Ok(verdict(c.admits))
        }
        Command::Adversary { family, sample } => {
            let s = read_sample(&sample)?;
            let target = family.target(&s.ap)?;
            let out = adversary(family, &s, &target)?;
            println!("psi: {}", out.psi.display(&s.ap));
            println!("parameter: {}", out.parameter);
            println!("witness: {} {}", out.witness.kind(), out.witness.display(&s.ap));
            println!("target on witness: {}", out.target_value);
            Ok(ExitCode::SUCCESS)
        }
        Command::Teach { formula, ops, max_size, max_len, out } => {
            let (ap, f) = formula.parse()?;
            let order = EnumerationOrder::new(ap, ops, max_size.unwrap_or(f.size().max(4)));
            let search = SearchBound { max_len, ..SearchBound::default() };
            let s = gold_teach_with(&f, &order, &search)?;
            write_output(out.as_deref(), &s.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Learn { sample, ops, max_size } => {
            let s = read_sample(&sample)?;
            let f = gold_learn(&s, &EnumerationOrder::new(s.ap.clone(), ops, max_size))?;
            println!("{}", f.display(&s.ap));
            Ok(ExitCode::SUCCESS)
        }
        Command::Oracle { formula, max_len } => {
            let (ap, f) = formula.parse()?;
            match oracle_upward_closure(&f, &ap, max_len)? {
                OracleVerdict::Confirmed { checked } => {
                    println!("confirmed ({checked} words)");
                    Ok(ExitCode::SUCCESS)
                }
                OracleVerdict::Discrepancy(w) => {
                    println!("discrepancy on {}", ap.fmt_word(&w));
                    Ok(ExitCode::from(1))
                }
            }
        }
        Command::SizeReport { formula, monotone, budget } => {
            let (ap, f) = formula.parse()?;
            let r = characterize_monotone(&f, &ap, &monotone.options(Some(budget.unwrap_or(MONOTONE_BUDGET))))?;
            let report = size_report(&r, &f);
            print!("{report}");
            Ok(verdict(report.ok()))
        }
    }
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.chain().find_map(|e| e.downcast_ref::<Error>()) {
        Some(Error::Budget(_) | Error::Undecided(_) | Error::Unevaluable { .. }) => 3,
        Some(Error::TargetDoesNotFit { .. } | Error::Adversary(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            let code = exit_code_for(&err);
            eprintln!("error: {err:#}");
            if matches!(err.chain().find_map(|e| e.downcast_ref::<Error>()), Some(Error::Budget(_))) {
                eprintln!("note: {SIZE_WARNING}");
            }
            ExitCode::from(code)
        }
    }
}
