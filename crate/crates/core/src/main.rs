fn main() {
    let (code, out) = gradalg::cli::run(std::env::args_os());
    print!("{out}");
    std::process::exit(code);
}
