fn main() {
    std::process::exit(mackey::cli::main());
}
