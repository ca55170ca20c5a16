fn main() { std::process::exit(f4codes::cli::run()); }
