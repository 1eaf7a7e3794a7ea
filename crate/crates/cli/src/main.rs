use std::io;
use std::process::ExitCode;

fn main() -> ExitCode {
    let catalog = std::env::var_os(unitc::CATALOG_ENV).map(Into::into);
    let code = unitc::run(std::env::args_os(), catalog, &mut io::stdout().lock(), &mut io::stderr().lock());
    ExitCode::from(code as u8)
}
