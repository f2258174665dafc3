fn main() {
    std::process::exit(logcost::cli::main_with_args(std::env::args_os()));
}
