fn main() {
    std::process::exit(kdefect_cli::run(std::env::args_os()));
}
