use std::io::Write;

fn main() {
    match bcf_cli::run(std::env::args_os(), &mut std::io::stdin()) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                std::process::exit(1);
            }
        }
        Err(err) => {
            eprintln!("bcf: {err}");
            std::process::exit(err.exit_code());
        }
    }
}
