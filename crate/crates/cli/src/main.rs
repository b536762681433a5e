fn main() {
    std::process::exit(po_cli::run(std::env::args_os()));
}
