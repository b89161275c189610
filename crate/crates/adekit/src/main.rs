fn main() {
    std::process::exit(adekit::cli::run(std::env::args_os()));
}
