//! Drives the command line front end in-process: a grid scan with JSON and
//! CSV output, then a summary of the saved report.

fn main() {
    let dir = std::env::temp_dir().join("qturan-example");
    std::fs::create_dir_all(&dir).expect("temp dir");
    let json = dir.join("scan.json");
    let csv = dir.join("scan.csv");
    let code = qturan::cli::run([
        "qturan", "scan", "--family", "g", "--a", "2,3", "--b", "1,2", "--q", "1/2", "--mu-grid", "0.5:3:0.5",
        "--alpha", "1", "--beta", "2", "--out", json.to_str().unwrap(), "--csv", csv.to_str().unwrap(),
    ]);
    println!("scan exited with {code}");
    print!("{}", std::fs::read_to_string(&csv).expect("csv written").lines().take(3).map(|l| {
        let mut l = l.to_string();
        l.truncate(100);
        l + "\n"
    }).collect::<String>());
    let code = qturan::cli::run(["qturan", "report", json.to_str().unwrap()]);
    std::process::exit(code);
}
