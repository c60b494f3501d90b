fn main() {
    std::process::exit(surftutte::cli::run());
}
