fn main() {
    std::process::exit(hallfrob::cli::run(std::env::args_os()));
}
