use std::process::ExitCode;

fn main() -> ExitCode {
    let args = std::env::args().collect();
    let code = hconvex::app::run(args, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    ExitCode::from(code)
}
