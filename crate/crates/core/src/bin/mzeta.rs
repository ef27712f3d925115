fn main() {
    mzeta::cli::main()
}
