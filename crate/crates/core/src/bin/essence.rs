use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use essence::cli::{self, exit_code, Pipeline, DEFAULT_MAX_STEPS};
use essence::harness::{GenConfig, SuiteConfig};
use essence::syntax::{parse_annotated, parse_context};
use essence::{Calculus, Error, Rule};

#[derive(Parser)]
#[command(name = "essence", version, about = "Parse, typecheck, normalize and translate call-by-value calculi")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Args)]
struct Input {
    /// Source file; `-` or omitted reads stdin.
    file: Option<String>,
    /// Term given inline instead of a file.
    #[arg(short = 'e', long = "expr", conflicts_with = "file")]
    expr: Option<String>,
    /// lc, anf, ves, ces, q, lnf, ljq, ljq-orig, vfs, rcps, cps, cps-small, ga, cnf
    #[arg(long, default_value = "lc")]
    calculus: String,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a term and print it back.
    Parse(Input),
    /// Synthesize a type, or check the ascription `M : A`.
    Typecheck {
        #[command(flatten)]
        input: Input,
        /// Free variable types, as `x : a, f : a -> a`.
        #[arg(long, default_value = "")]
        context: String,
    },
    /// Reduce to normal form, leftmost-outermost.
    Normalize {
        #[command(flatten)]
        input: Input,
        /// Comma-separated rule subset, e.g. `let_1,let_2,assoc`.
        #[arg(long)]
        rules: Option<String>,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Print every step with its rule and path.
        #[arg(long)]
        trace: bool,
    },
    /// Apply translation stages in order, printing each intermediate term.
    Translate {
        #[command(flatten)]
        input: Input,
        /// Comma-separated stages, e.g. `vfs_translate,negative`.
        #[arg(long, default_value = "")]
        pipeline: String,
    },
    /// Run a property suite, or `all`.
    Check {
        suite: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cases per property, overriding each default.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn read_input(i: &Input) -> Result<String, Error> {
    if let Some(e) = &i.expr {
        return Ok(e.clone());
    }
    let mut s = String::new();
    let res = match i.file.as_deref() {
        None | Some("-") => std::io::stdin().read_to_string(&mut s).map(|_| ()),
        Some(path) => std::fs::read_to_string(path).map(|t| s = t),
    };
    res.map_err(|e| Error::Syntax { line: 0, col: 0, msg: format!("cannot read input: {e}") })?;
    Ok(s)
}

fn record(fields: &[(&str, String)]) -> String {
    let v: Vec<String> = fields.iter().map(|(k, v)| format!("{k}:{}", v.replace(['\t', '\n'], " "))).collect();
    v.join("\t")
}

fn run(cli: Cli) -> Result<i32, Error> {
    match cli.cmd {
        Cmd::Parse(i) => {
            let calc: Calculus = i.calculus.parse()?;
            let (t, ty) = parse_annotated(calc, &read_input(&i)?)?;
            match (i.format, ty) {
                (Format::Text, None) => println!("{t}"),
                (Format::Text, Some(a)) => println!("{t} : {a}"),
                (Format::Structured, ty) => {
                    let mut f = vec![("record", "term".into()), ("calculus", calc.to_string()), ("term", t.to_string())];
                    if let Some(a) = ty {
                        f.push(("type", a.to_string()));
                    }
                    println!("{}", record(&f));
                }
            }
        }
        Cmd::Typecheck { input, context } => {
            let calc: Calculus = input.calculus.parse()?;
            let ctx = parse_context(&context)?;
            let (t, ty) = parse_annotated(calc, &read_input(&input)?)?;
            let a = cli::typecheck(&t, calc, &ctx, ty.as_ref())?;
            match input.format {
                Format::Text => println!("{t} : {a}"),
                Format::Structured => println!("{}", record(&[("record", "type".into()), ("term", t.to_string()), ("type", a.to_string())])),
            }
        }
        Cmd::Normalize { input, rules, max_steps, trace } => {
            let calc: Calculus = input.calculus.parse()?;
            let (t, _) = parse_annotated(calc, &read_input(&input)?)?;
            let rules: Option<Vec<Rule>> = rules
                .map(|r| r.split(',').map(str::trim).filter(|s| !s.is_empty()).map(str::parse).collect())
                .transpose()?;
            let r = cli::normalize(&t, calc, rules.as_deref(), max_steps)?;
            match input.format {
                Format::Text => {
                    if trace {
                        print!("{}", r.trace);
                    } else {
                        println!("{}", r.term);
                    }
                }
                Format::Structured => {
                    if trace {
                        for line in r.trace.lines() {
                            println!("{}", record(&[("record", "step".into()), ("line", line.trim().to_string())]));
                        }
                    }
                    println!("{}", record(&[("record", "normal".into()), ("steps", r.steps.to_string()), ("term", r.term.to_string())]));
                }
            }
        }
        Cmd::Translate { input, pipeline } => {
            let calc: Calculus = input.calculus.parse()?;
            let p: Pipeline = pipeline.parse()?;
            p.validate(calc)?;
            let (t, _) = parse_annotated(calc, &read_input(&input)?)?;
            let out = cli::translate(&t, calc, &p)?;
            match input.format {
                Format::Text => {
                    println!("{calc:>10}  {t}");
                    for s in &out {
                        println!("{:>10}  {}   [{}]", s.calculus, s.term, s.stage);
                    }
                }
                Format::Structured => {
                    println!("{}", record(&[("record", "input".into()), ("calculus", calc.to_string()), ("term", t.to_string())]));
                    for s in &out {
                        println!(
                            "{}",
                            record(&[
                                ("record", "stage".into()),
                                ("stage", s.stage.to_string()),
                                ("calculus", s.calculus.to_string()),
                                ("term", s.term.to_string()),
                            ])
                        );
                    }
                }
            }
        }
        Cmd::Check { suite, seed, samples, format } => {
            let cfg = SuiteConfig { gen: GenConfig { seed, ..GenConfig::default() }, samples, ..SuiteConfig::default() };
            let reports = cli::check(&suite, &cfg)?;
            let mut ok = true;
            for r in &reports {
                ok &= r.passed();
                match format {
                    Format::Text => print!("{}", r.render_text()),
                    Format::Structured => print!("{}", r.render_structured()),
                }
            }
            return Ok(if ok { 0 } else { 1 });
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}
