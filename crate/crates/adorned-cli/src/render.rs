//! Pretty-printers: the parseable ASCII form and a unicode display form.

use adorned::games::{GameId, GameStore, Side};

/// Renders a game; the ASCII form re-parses to the same id.
pub fn render(store: &GameStore, g: GameId, unicode: bool) -> String {
    if !unicode {
        return store.notation(g);
    }
    let node = store.node(g);
    let side = |s: &Side| match s {
        Side::Atom(a) => format!("∅^{a}"),
        Side::Options(ids) => ids
            .iter()
            .map(|&o| render(store, o, true))
            .collect::<Vec<_>>()
            .join(","),
    };
    format!("⟨{}|{}⟩", side(&node.left), side(&node.right))
}
