fn main() {
    std::process::exit(uqplus::cli::run(std::env::args_os()));
}
