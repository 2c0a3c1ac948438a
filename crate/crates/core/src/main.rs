fn main() {
    std::process::exit(powersub::cli::run());
}
