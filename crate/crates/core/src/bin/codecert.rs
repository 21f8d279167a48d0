fn main() {
    let (report, code) = codecert::cli::dispatch(std::env::args_os());
    let text = report.render();
    if code == codecert::cli::EXIT_USAGE {
        eprint!("{text}");
    } else {
        print!("{text}");
    }
    std::process::exit(code);
}
