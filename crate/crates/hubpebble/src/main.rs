fn main() {
    std::process::exit(hubpebble::cli::run());
}
