fn main() {
    std::process::exit(noether_forge::cli::run(std::env::args_os()));
}
