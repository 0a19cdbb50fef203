fn main() {
    std::process::exit(megagreedoid::cli::run(std::env::args_os()));
}
