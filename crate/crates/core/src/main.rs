fn main() {
    std::process::exit(bbx::cli::run(std::env::args_os()));
}
