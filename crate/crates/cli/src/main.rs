use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use trivext_cli::report::{Harness, Property, Side};
use trivext_cli::{corpus, run, Command, Flags, Workspace};

#[derive(Parser)]
#[command(name = "trivext", version, about = "Gorenstein modules over trivial ring extensions")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Load a workspace and report what it defines.
    Validate(Common),
    /// Decide a Gorenstein property of modules and instances.
    Check {
        property: PropertyArg,
        #[command(flatten)]
        common: Common,
    },
    /// Compare a verdict over the total ring with its local conditions.
    Verify {
        harness: HarnessArg,
        #[command(flatten)]
        common: Common,
        /// Random modules drawn per extension or context.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Largest dimension of a random module.
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
    /// Build the lifted complete resolution of an instance.
    Resolve {
        side: SideArg,
        #[command(flatten)]
        common: Common,
    },
    /// Built-in example workspace.
    Examples {
        #[command(subcommand)]
        action: ExamplesCmd,
    },
}

#[derive(Subcommand)]
enum ExamplesCmd {
    /// Write the example workspace.
    Emit {
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct Common {
    /// Workspace file.
    input: PathBuf,
    /// Names to process; all applicable entities when omitted.
    targets: Vec<String>,
    /// Ext / dimension search bound; defaults to max(10, 2 dim).
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Window of complete resolutions; defaults to the bound.
    #[arg(long)]
    window: Option<usize>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum PropertyArg {
    Gp,
    Gi,
    Gf,
}

#[derive(Clone, Copy, ValueEnum)]
enum HarnessArg {
    PairGp,
    CopairGi,
    RightPairGf,
    TupleGp,
    CotupleGi,
    RightTupleGf,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Pair,
    Copair,
}

fn write(out: &Option<PathBuf>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn execute(command: Command, common: Common, samples: usize, max_dim: usize) -> Result<(), String> {
    let ws = Workspace::load(&common.input).map_err(|e| e.to_string())?;
    let flags = Flags {
        bound: common.bound,
        seed: common.seed,
        window: common.window,
        samples,
        max_dim,
    };
    let input = common.input.display().to_string();
    let report = run(&command, &ws, &input, &common.targets, &flags).map_err(|e| e.to_string())?;
    write(&common.out, &report.to_json())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Cmd::Validate(common) => execute(Command::Validate, common, 0, 0),
        Cmd::Check { property, common } => {
            let p = match property {
                PropertyArg::Gp => Property::Gp,
                PropertyArg::Gi => Property::Gi,
                PropertyArg::Gf => Property::Gf,
            };
            execute(Command::Check(p), common, 0, 0)
        }
        Cmd::Verify {
            harness,
            common,
            samples,
            max_dim,
        } => {
            let h = match harness {
                HarnessArg::PairGp => Harness::PairGp,
                HarnessArg::CopairGi => Harness::CopairGi,
                HarnessArg::RightPairGf => Harness::RightPairGf,
                HarnessArg::TupleGp => Harness::TupleGp,
                HarnessArg::CotupleGi => Harness::CotupleGi,
                HarnessArg::RightTupleGf => Harness::RightTupleGf,
            };
            execute(Command::Verify(h), common, samples, max_dim)
        }
        Cmd::Resolve { side, common } => {
            let s = match side {
                SideArg::Pair => Side::Pair,
                SideArg::Copair => Side::Copair,
            };
            execute(Command::Resolve(s), common, 0, 0)
        }
        Cmd::Examples {
            action: ExamplesCmd::Emit { out },
        } => write(&out, &corpus::builtin().to_toml()),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
