fn main() {
    std::process::exit(redisc_cli::run(std::env::args_os()));
}
