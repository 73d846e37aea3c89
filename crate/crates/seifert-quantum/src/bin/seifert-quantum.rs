fn main() {
    std::process::exit(seifert_quantum::cli::run(std::env::args_os()));
}
