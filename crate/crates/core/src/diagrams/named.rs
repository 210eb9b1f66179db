//! The diagrams defining the structure on the canonical coend, the pairing,
//! `τ_V`, the Drinfeld map and the action map.
//!
//! A crossing whose over-strand runs from lower left to upper right is
//! `braid`; the mirror crossing is `braid_inverse`. The assignment is pinned
//! by requiring the Drinfeld diagram to reproduce `(f⊗id)(R₂₁R)`.

use super::{wires, Atom, Diagram, Generator};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum DiagramName {
    CoendMult,
    CoendComult,
    CoendCounit,
    CoendAntipode,
    PairingOmega,
    TauV,
    Drinfeld,
    CoendAction,
}

impl DiagramName {
    pub const ALL: [DiagramName; 8] = [
        DiagramName::CoendMult,
        DiagramName::CoendComult,
        DiagramName::CoendCounit,
        DiagramName::CoendAntipode,
        DiagramName::PairingOmega,
        DiagramName::TauV,
        DiagramName::Drinfeld,
        DiagramName::CoendAction,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            DiagramName::CoendMult => "coend_mult",
            DiagramName::CoendComult => "coend_comult",
            DiagramName::CoendCounit => "coend_counit",
            DiagramName::CoendAntipode => "coend_antipode",
            DiagramName::PairingOmega => "pairing_omega",
            DiagramName::TauV => "tau_V",
            DiagramName::Drinfeld => "drinfeld",
            DiagramName::CoendAction => "coend_action",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|n| n.as_str() == s)
    }
}

fn id(w: &str) -> Generator {
    Generator::Id(wires(w))
}

fn braid(a: &str, b: &str) -> Generator {
    Generator::Braid(wires(a), wires(b))
}

fn binv(a: &str, b: &str) -> Generator {
    Generator::BraidInverse(wires(a), wires(b))
}

fn ev(a: &str) -> Generator {
    Generator::Ev(atom(a))
}

fn coev(a: &str) -> Generator {
    Generator::Coev(atom(a))
}

fn atom(a: &str) -> Atom {
    wires(a).pop().expect("one atom")
}

/// Symbols: `x` and `y` for the strands entering the coend, `v` for `τ_V`.
pub fn named_diagram(name: DiagramName) -> Diagram {
    let slices = match name {
        // y^∨ passes under x^∨⊗x; output is (x⊗y)^∨ ⊗ (x⊗y)
        DiagramName::CoendMult => vec![vec![braid("x~ x", "y~"), id("y")]],
        DiagramName::CoendComult => vec![vec![id("x~"), coev("x"), id("x")]],
        DiagramName::CoendCounit => vec![vec![ev("x")]],
        // output is x^∨∨ ⊗ x^∨, the pair indexed by x^∨
        DiagramName::CoendAntipode => vec![
            vec![coev("x~"), id("x~ x")],
            vec![id("x~"), braid("x~~ x~", "x")],
            vec![ev("x"), id("x~~ x~")],
        ],
        DiagramName::PairingOmega => vec![
            vec![id("x~"), braid("x", "y~"), id("y")],
            vec![id("x~"), braid("y~", "x"), id("y")],
            vec![ev("x"), ev("y")],
        ],
        DiagramName::TauV => vec![vec![id("x~"), braid("x", "v")], vec![binv("x~", "v"), id("x")]],
        DiagramName::Drinfeld => vec![
            vec![id("x~"), coev("y"), id("x")],
            vec![binv("x~", "y"), binv("y~", "x")],
            vec![id("y"), ev("x"), id("y~")],
        ],
        DiagramName::CoendAction => vec![
            vec![id("x~"), braid("x", "y")],
            vec![binv("x~", "y"), id("x")],
            vec![id("y"), ev("x")],
        ],
    };
    Diagram::from_slices(slices)
}
