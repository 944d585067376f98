fn main() -> std::process::ExitCode {
    symdisc::cli::run()
}
