fn main() {
    std::process::exit(fragmentability::cli::main());
}
