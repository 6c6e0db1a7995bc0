fn main() {
    std::process::exit(artin_workbench::cli::main(std::env::args_os()));
}
