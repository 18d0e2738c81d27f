use std::io::Write;
use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, out, err) = knotbraid::cli::run(std::env::args_os());
    print!("{}", out);
    eprint!("{}", err);
    let _ = std::io::stdout().flush();
    ExitCode::from(code as u8)
}
