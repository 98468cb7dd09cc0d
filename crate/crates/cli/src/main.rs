fn main() {
    std::process::exit(edr_cli::main_with_args(std::env::args_os()));
}
