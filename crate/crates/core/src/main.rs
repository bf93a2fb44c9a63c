fn main() {
    std::process::exit(toric_forms::cli::run(std::env::args_os()));
}
