fn main() {
    std::process::exit(verlinde::cli::run());
}
