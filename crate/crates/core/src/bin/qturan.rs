fn main() {
    std::process::exit(qturan::cli::run(std::env::args_os()));
}
