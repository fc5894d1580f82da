fn main() {
    std::process::exit(theta_core::cli::run(std::env::args_os()));
}
