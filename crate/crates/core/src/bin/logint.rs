fn main() {
    std::process::exit(logint::cli::main_with_args(std::env::args_os()));
}
