fn main() {
    std::process::exit(hopfx::cli::main());
}
