//! Every built-in poset with its basic statistics and a JSON round trip.

use sposet::corpus::{corpus, names};
use sposet::io::{emit_poset, parse, Document};

fn main() {
    for name in names() {
        let s = corpus(&name).unwrap();
        let st = s.validate_stats();
        let text = emit_poset(Some(&name), &s).to_string();
        let round_trip = matches!(parse(&text), Ok(Document::Poset(p)) if p.poset == s);
        println!(
            "{name:<20} dim {:>2}  pure {:<5}  connected {:<5}  f {:?}  round trip {round_trip}",
            st.dim, st.pure, st.connected, st.f
        );
    }
}
