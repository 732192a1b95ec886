fn main() {
    std::process::exit(contour_mover::replay_cli::run(std::env::args_os()));
}
