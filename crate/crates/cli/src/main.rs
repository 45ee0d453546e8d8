use std::process::ExitCode;

use macaulay_cli::{parse_request, run, Format};

fn main() -> ExitCode {
    let result = parse_request(std::env::args_os().skip(1)).and_then(|req| {
        let format = req.format;
        run(&req).map(|r| (r, format))
    });
    match result {
        Ok((report, Format::Json)) => {
            println!("{}", report.to_json());
            ExitCode::SUCCESS
        }
        Ok((report, Format::Text)) => {
            print!("{}", report.to_text());
            ExitCode::SUCCESS
        }
        Err(macaulay_cli::CliError::Help(text)) => {
            print!("{}", text);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e);
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
