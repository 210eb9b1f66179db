//! Parse a string diagram, evaluate it on modules, and confirm that the
//! Drinfeld diagram reproduces the closed-form Drinfeld map.

use std::collections::HashMap;
use std::sync::Arc;

use braidcheck::coend::build_coend;
use braidcheck::diagrams::{evaluate, named_diagram, parse_diagram, typecheck, DiagramName};
use braidcheck::group::FiniteGroup;
use braidcheck::hopf::{drinfeld_double, drinfeld_map_closed, group_algebra};
use braidcheck::rep::{regular_module, trivial_module};

fn main() {
    let (d, r) = drinfeld_double(&group_algebra(&FiniteGroup::cyclic(2)));
    let d = Arc::new(d);

    // The double braiding of the regular module with itself.
    let src = "braid(x, y)\nbraid(y, x)\n";
    let diagram = parse_diagram(src).expect("valid diagram");
    println!("typed boundaries: {}", typecheck(&diagram).expect("well typed").len());
    let mut binding = HashMap::new();
    binding.insert("x".to_string(), regular_module(&d));
    binding.insert("y".to_string(), regular_module(&d));
    let m = evaluate(&diagram, &binding, &HashMap::new(), &r).expect("evaluates");
    println!("monodromy on H⊗H is the identity: {}", m.is_identity());

    binding.insert("y".to_string(), trivial_module(&d));
    let m = evaluate(&diagram, &binding, &HashMap::new(), &r).expect("evaluates");
    println!("monodromy with the unit object is the identity: {}", m.is_identity());

    println!("\nDrinfeld diagram:\n{}", named_diagram(DiagramName::Drinfeld));
    let coend = build_coend(&d, &r).expect("coend descends");
    let dr = coend.drinfeld_map_diagrammatic().expect("Drinfeld map descends");
    println!("diagram = closed form: {}", dr == drinfeld_map_closed(&d, &r));
    println!("rank {} of {}", dr.rank(), coend.dim());
}
