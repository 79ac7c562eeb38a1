fn main() {
    std::process::exit(relprime_cli::main_exit_code());
}
