use std::io::Write;
use std::process::ExitCode;

use z2z4_cli::{run, CAP_ENV};

fn main() -> ExitCode {
    let env_cap = std::env::var(CAP_ENV).ok();
    let out = run(std::env::args_os(), env_cap.as_deref());
    let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    ExitCode::from(out.status as u8)
}
