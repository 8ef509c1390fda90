fn main() {
    std::process::exit(fusionkl::cli::run(std::env::args()));
}
