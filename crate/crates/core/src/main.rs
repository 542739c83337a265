fn main() {
    std::process::exit(orbihom::cli::main_entry());
}
