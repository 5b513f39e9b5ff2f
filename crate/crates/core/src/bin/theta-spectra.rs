fn main() {
    std::process::exit(theta_spectra::cli::run(std::env::args_os()));
}
