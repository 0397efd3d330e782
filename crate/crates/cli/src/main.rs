fn main() {
    std::process::exit(chevlab_cli::run(std::env::args_os()));
}
