fn main() {
    std::process::exit(metaplectic_cli::app::run(std::env::args_os()));
}
