use std::io::Write;

fn main() {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let result = chern_bounds_cli::execute(&argv);
    if !result.payload.is_empty() {
        print!("{}", result.payload);
    }
    if !result.diagnostics.is_empty() {
        let _ = write!(std::io::stderr(), "{}", result.diagnostics);
    }
    std::process::exit(result.exit_code);
}
