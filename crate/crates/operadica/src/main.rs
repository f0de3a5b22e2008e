fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = operadica::cli::run(&argv, &mut std::io::stdout());
    std::process::exit(code);
}
