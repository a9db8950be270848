//! The canonical text formats and the command surface: write structures,
//! verify them, build derived objects, all with byte-stable reports.

use homalg::cli::{digest, run, Command, Verb};
use homalg::hom::samples;
use homalg::io::{parse_structure, render_structure, StructureFile};

fn main() {
    let dir = std::env::temp_dir().join("homalg-example-files");
    std::fs::create_dir_all(&dir).unwrap();

    // canonical serialization round-trips byte for byte
    let twisted = samples::twisted_sweedler().unwrap();
    let text = render_structure(&StructureFile::from_hopf(&twisted));
    let parsed = parse_structure("twisted.struct", &text).unwrap();
    assert_eq!(render_structure(&parsed), text);
    println!(
        "canonical round trip: byte-identical ({})",
        digest(text.as_bytes())
    );

    let path = dir.join("twisted.struct");
    std::fs::write(&path, &text).unwrap();

    // the same operations the binary exposes, in process
    let verify = run(&Command::new(Verb::Verify, "hopf").input("in", &path));
    println!("verify hopf exit status: {}", verify.exit);
    print!("{}", verify.rendered);

    let mut construct = Command::new(Verb::Construct, "drinfeld-codouble").input("hopf", &path);
    construct.out = Some(dir.join("codouble.struct"));
    construct.degrees.m = 1;
    let outcome = run(&construct);
    println!("construct drinfeld-codouble exit status: {}", outcome.exit);

    let verify =
        run(&Command::new(Verb::Verify, "bialgebra").input("in", dir.join("codouble.struct")));
    println!("verify codouble exit status: {}", verify.exit);
}
