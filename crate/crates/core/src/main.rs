fn main() {
    std::process::exit(hypersmith::cli::main());
}
