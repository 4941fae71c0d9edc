fn main() -> std::process::ExitCode {
    paramodular::cli::main()
}
