//! Driving the command line from code, in text and JSON form.

use gengraph::cli::run;

pub fn run_example() -> gengraph::Result<()> {
    let commands: [&[&str]; 4] = [
        &["gengraph", "adjacent", "lattice", "1,0", "0,1"],
        &["gengraph", "path", "torsion", "--n", "2", "1,0", "3,0"],
        &["gengraph", "--json", "fib-pair", "2"],
        &["gengraph", "adjacent", "free", "x1 x1", "x2"],
    ];
    for argv in commands {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(argv.iter().copied(), &mut out, &mut err);
        println!("$ {}  (exit {code})", argv[1..].join(" "));
        print!("{}", String::from_utf8_lossy(&out));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("cli example failed");
}
