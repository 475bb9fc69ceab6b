use std::process::ExitCode;

fn main() -> ExitCode {
    ExitCode::from(noma_secrecy::cli::dispatch(std::env::args_os()) as u8)
}
