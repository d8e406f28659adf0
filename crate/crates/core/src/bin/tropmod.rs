use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    if let Err(e) = tropmod::cli::configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(tropmod::cli::EXIT_USAGE as u8);
    }
    let code = tropmod::cli::run(std::env::args_os(), &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
