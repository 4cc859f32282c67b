use std::io;

fn main() {
    let code = metric_graphs::cli::run(std::env::args_os(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
