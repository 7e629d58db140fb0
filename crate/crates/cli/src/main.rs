use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let q = match symchar_cli::parse(std::env::args_os()) {
        Ok(q) => q,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    let out = symchar_cli::run(&q);
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status.code())
}
