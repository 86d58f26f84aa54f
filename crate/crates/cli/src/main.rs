fn main() {
    std::process::exit(convex_dispersion_cli::app::run(std::env::args_os()));
}
