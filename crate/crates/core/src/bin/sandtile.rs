fn main() {
    std::process::exit(sandpile_tiling::cli::main_with(std::env::args_os()));
}
