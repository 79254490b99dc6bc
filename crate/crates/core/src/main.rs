fn main() {
    std::process::exit(poisson_poincare::cli::run(std::env::args()));
}
