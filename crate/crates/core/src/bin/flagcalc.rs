fn main() {
    std::process::exit(flagcalc::cli::main());
}
