//! Regenerate `data/sample_journal.csv`.

fn main() -> std::io::Result<()> {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "data/sample_journal.csv".to_string());
    std::fs::write(&path, wordstream_core::synth::journal_csv())?;
    println!("wrote {path}");
    Ok(())
}
