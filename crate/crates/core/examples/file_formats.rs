//! Round trip through the text formats read by the command line tool.

use braidcheck::exact::CycloScalar;
use braidcheck::format::{parse_hopf, parse_input, write_hopf};
use braidcheck::hopf::sweedler;

fn main() {
    let (p, r) = sweedler(&CycloScalar::from_int(1));
    let text = write_hopf(&p, Some(&r));
    print!("{text}");
    let back = parse_hopf(&text).expect("written files parse");
    println!("# round trip preserved the presentation: {}", back.presentation == p);

    let broken = text.replace("mult: (0,0,0)", "mult: (0,0,9)");
    match parse_input(&broken) {
        Err(e) => println!("# {e}"),
        Ok(_) => println!("# unexpectedly accepted"),
    }
}
