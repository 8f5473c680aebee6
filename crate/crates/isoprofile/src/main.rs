fn main() {
    std::process::exit(isoprofile::cli::run_from_env());
}
