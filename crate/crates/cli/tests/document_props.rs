use blockmat_cli::{parse_document, write_document};
use blockmat_testkit::{EntryDist, GenConfig, MatrixGen};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn documents_round_trip(seed in any::<u64>(), r in 1usize..=9, c in 1usize..=9, d in 0usize..=3) {
        let mut g = MatrixGen::new(seed, GenConfig::mixed(EntryDist::rational100().with_complex(0.3)));
        let (rt, ct) = (g.tree(r, d), g.tree(c, d));
        let m = g.matrix(&rt, &ct);
        let text = write_document(&m);
        prop_assert!(!text.contains('\n'));
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(&back, &m);
        prop_assert_eq!(write_document(&back), text);
    }

    #[test]
    fn whitespace_and_integer_literals_are_accepted(seed in any::<u64>(), n in 1usize..=6) {
        let mut g = MatrixGen::new(seed, GenConfig::two_way(EntryDist::sparse_small()));
        let m = g.square(n, 1);
        let pretty = write_document(&m).replace(',', ",\n  ").replace(':', ": ");
        // Small integers may also be written as JSON numbers.
        let numeric = unquote_small_ints(&pretty);
        prop_assert_eq!(parse_document(&pretty).unwrap(), m.clone());
        prop_assert_eq!(parse_document(&numeric).unwrap(), m);
    }
}

fn unquote_small_ints(text: &str) -> String {
    let mut out = text.to_string();
    for v in ["-2", "-1", "0", "1", "2"] {
        out = out.replace(&format!("[\"{v}\""), &format!("[{v}"));
        out = out.replace(&format!(" \"{v}\""), &format!(" {v}"));
    }
    out
}

#[test]
fn worked_example_document_round_trips() {
    let text = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/worked_example.json")).unwrap();
    let m = parse_document(&text).unwrap();
    assert_eq!(m, blockmat_cli::fixtures::worked_example());
    assert_eq!(parse_document(&write_document(&m)).unwrap(), m);
}
