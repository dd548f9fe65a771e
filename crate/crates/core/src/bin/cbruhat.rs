fn main() {
    std::process::exit(cbruhat::cli::main_with_args(std::env::args_os()));
}
