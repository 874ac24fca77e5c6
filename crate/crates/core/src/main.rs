fn main() {
    std::process::exit(orientkit::cli::run(std::env::args_os()));
}
