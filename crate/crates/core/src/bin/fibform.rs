use clap::Parser;
use fibform::cli::{execute, Cli, EXIT_INTERNAL, EXIT_USAGE};

fn main() {
    let cli = Cli::try_parse().unwrap_or_else(|e| {
        let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
        let _ = e.print();
        std::process::exit(code);
    });
    let Ok(report) = std::panic::catch_unwind(|| execute(&cli.command)) else {
        std::process::exit(EXIT_INTERNAL);
    };
    let out = report.render(cli.json);
    if report.error.is_some() && !cli.json {
        eprintln!("{out}");
    } else {
        println!("{out}");
    }
    std::process::exit(report.exit_code);
}
