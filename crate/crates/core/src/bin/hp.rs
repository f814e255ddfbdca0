fn main() {
    std::process::exit(hp_core::cli::main_from_env());
}
