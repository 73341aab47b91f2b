fn main() {
    std::process::exit(stinv::cli::run());
}
