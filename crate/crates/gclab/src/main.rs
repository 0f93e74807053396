fn main() {
    std::process::exit(gclab::cli::run());
}
