use clap::{Parser, Subcommand};

use kerov::cli::{
    parse_formula_list, run_bench, run_check, run_cumulants, run_sigma, FormulaArg, OutputFormat,
};

#[derive(Parser)]
#[command(
    name = "kerov",
    version,
    about = "Kerov polynomials, free cumulants of Young diagrams, and character cross-checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the Kerov polynomial Sigma_k
    Sigma {
        /// Cycle length k >= 1
        k: u32,
        /// Which formula to use; "all" computes all three and requires agreement
        #[arg(long, value_enum, default_value_t = FormulaArg::All)]
        formula: FormulaArg,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Free cumulants R_2..R_kmax of a partition ("4,3,1"; "" is the empty diagram)
    Cumulants {
        partition: String,
        #[arg(long, default_value_t = 6)]
        kmax: u32,
    },
    /// Verify formula agreement, cumulant recovery, structural invariants,
    /// and the character identity against the Murnaghan-Nakayama oracle
    Check {
        /// Check the character identity for all diagrams with up to nmax boxes
        #[arg(long, default_value_t = 6)]
        nmax: u64,
        /// Check the polynomial identities for k up to kmax
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        #[arg(long, hide = true)]
        corrupt: bool,
    },
    /// Time the formulas for k = 1..=kmax and print a CSV report
    Bench {
        #[arg(long, default_value_t = 8)]
        kmax: u32,
        /// Comma-separated subset of formulas, e.g. "1,3"
        #[arg(long, default_value = "1,2,3")]
        formulas: String,
    },
}

fn main() {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Sigma { k, formula, format } => match run_sigma(k, formula, format) {
            Ok(out) => {
                println!("{}", out.stdout);
                if let Some(note) = out.note {
                    eprintln!("{note}");
                }
                0
            }
            Err(e) => {
                eprintln!("{}", e.message);
                e.code
            }
        },
        Command::Cumulants { partition, kmax } => match run_cumulants(&partition, kmax) {
            Ok(out) => {
                print!("{out}");
                0
            }
            Err(e) => {
                eprintln!("{}", e.message);
                e.code
            }
        },
        Command::Check { nmax, kmax, corrupt } => {
            if kmax < 1 {
                eprintln!("kmax must be at least 1");
                2
            } else {
                let (report, ok) = run_check(nmax, kmax, corrupt);
                print!("{report}");
                if ok {
                    0
                } else {
                    1
                }
            }
        }
        Command::Bench { kmax, formulas } => {
            if kmax < 1 {
                eprintln!("kmax must be at least 1");
                2
            } else {
                match parse_formula_list(&formulas) {
                    Ok(list) => {
                        print!("{}", run_bench(kmax, &list));
                        0
                    }
                    Err(e) => {
                        eprintln!("{}", e.message);
                        e.code
                    }
                }
            }
        }
    };
    std::process::exit(code);
}
