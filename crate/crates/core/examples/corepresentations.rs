//! Irreducible corepresentations, their characters, intertwiners and the
//! decomposition of a character into irreducibles.

use qdtorus::algebra::AlgebraId;
use qdtorus::cli::parse_element;
use qdtorus::hopf::{
    decompose_character, intertwiner_space, verify_characters, verify_corep, CorepMatrix,
    IrrepLabel,
};

fn main() -> qdtorus::Result<()> {
    for label in ["chi(2)", "chiz(-1)", "w(0,1)", "w(1,2)"] {
        let l: IrrepLabel = label.parse()?;
        let verdict = verify_corep(&l.corep(), true)?;
        println!(
            "{l}: character {}, corepresentation and unitary: {}",
            l.character(),
            verdict.passed()
        );
    }

    let w = IrrepLabel::W(0, 1).corep();
    println!(
        "dim End(w(0,1)) = {}",
        intertwiner_space(&w, &w, None)?.len()
    );
    let sum = w.direct_sum(&CorepMatrix::chi(1));
    println!(
        "dim End(w(0,1) ⊕ chi(1)) = {}",
        intertwiner_space(&sum, &sum, None)?.len()
    );

    let labels = IrrepLabel::window(2, 3);
    for text in [
        "(a + d)*(a + d)",
        "(a + d)*(a + d)*(a + d)",
        "D*(2*z - 1)*(a + d)",
    ] {
        let chi = parse_element(text, AlgebraId::ADTq)?;
        let parts = decompose_character(&chi, &labels)?;
        let s: Vec<String> = parts.iter().map(|(l, c)| format!("{c}·{l}")).collect();
        println!("{text} = {}", s.join(" + "));
    }

    for c in verify_characters(2, 3)? {
        println!("{:?} {} {}", c.status, c.name, c.detail.unwrap_or_default());
    }
    Ok(())
}
