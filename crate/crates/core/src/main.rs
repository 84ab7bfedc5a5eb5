use std::io::{self, Write};
use std::panic;

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = panic::catch_unwind(|| {
        let mut out = stdout.lock();
        let mut err = stderr.lock();
        let code = acsm::cli::run(std::env::args_os(), &mut out, &mut err);
        let _ = out.flush();
        code
    })
    .unwrap_or(acsm::cli::EXIT_INTERNAL);
    std::process::exit(code);
}
