fn main() {
    powcolor::cli::main()
}
