fn main() -> std::process::ExitCode {
    ringcodes::cli::main_with_args(std::env::args_os())
}
