fn main() {
    std::process::exit(cyclic_lrc::cli::run());
}
