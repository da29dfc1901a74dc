fn main() {
    std::process::exit(wavepair::cli::run(std::env::args_os()));
}
