use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use fourspace_cli::{emit_report, invoke, UsageError};

fn main() -> ExitCode {
    let inv = match invoke(std::env::args_os().skip(1)) {
        Ok(inv) => inv,
        Err(UsageError::Clap(e)) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(e.exit_code() as u8);
        }
    };

    let mut sink: Box<dyn Write> = match &inv.out {
        Some(path) => match File::create(path) {
            Ok(f) => Box::new(BufWriter::new(f)),
            Err(e) => {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        },
        None => Box::new(io::stdout().lock()),
    };
    if let Err(e) = emit_report(&inv.report, inv.json, &mut sink) {
        eprintln!("error: {e}");
        return ExitCode::from(1);
    }
    ExitCode::from(inv.report.exit_code() as u8)
}
