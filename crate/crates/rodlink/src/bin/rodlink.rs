use std::io;
use std::process;

use rodlink::cli::{run, PROJECTION_ENV};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let env = std::env::var(PROJECTION_ENV).ok();
    let code = run(&argv, env, &mut io::stdout().lock(), &mut io::stderr().lock());
    process::exit(code);
}
