//! Regenerates the shipped canonical suite config on stdout.

fn main() {
    let config = cartan_cli::suite::canonical_isometry_suite(1000);
    println!("{}", serde_json::to_string_pretty(&config).unwrap());
}
