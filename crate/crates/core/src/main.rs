fn main() {
    std::process::exit(alpha_curvelets::cli::run(std::env::args_os()));
}
