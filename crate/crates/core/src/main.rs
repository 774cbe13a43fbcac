use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let out = chowstab::cli::run(&args);
    if !out.stdout.is_empty() {
        let _ = std::io::stdout().write_all(out.stdout.as_bytes());
    }
    if !out.stderr.is_empty() {
        let _ = std::io::stderr().write_all(out.stderr.as_bytes());
    }
    std::process::exit(out.code);
}
