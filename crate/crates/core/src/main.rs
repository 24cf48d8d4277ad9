use std::io::Write;

fn main() {
    let (code, out) = gosper::cli::run_command(std::env::args_os().skip(1));
    let stream = if code == gosper::cli::EXIT_USAGE { 2 } else { 1 };
    if stream == 2 {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    std::process::exit(code);
}
