fn main() {
    std::process::exit(logmaj_cli::run(std::env::args_os()));
}
