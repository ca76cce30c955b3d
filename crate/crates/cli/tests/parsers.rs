use lpp_cli::{parse_args, RunManifest};
use proptest::prelude::*;

const WORDS: &[&str] = &[
    "sample",
    "exact",
    "limits",
    "tw",
    "fuinf",
    "fuv",
    "figure4",
    "selftest",
    "replay",
    "--shape",
    "lt",
    "square",
    "staircase",
    "--n",
    "--m",
    "--q",
    "--samples",
    "--seed",
    "--path",
    "corner",
    "antidiag",
    "--out",
    "--kmin",
    "--kmax",
    "--smin",
    "--smax",
    "--ds",
    "--u",
    "--v",
    "-1",
    "0",
    "0.5",
    "1e300",
    "NaN",
    "inf",
    "-",
    "--",
    "--help",
];

fn manifest_text() -> String {
    let cli =
        parse_args(["lpp", "limits", "fuinf", "--u", "1", "--smin", "0", "--smax", "1", "--ds", "0.5", "--out", "o"])
            .unwrap();
    let mut m = RunManifest::new(&cli.command, None, serde_json::json!({"tol": 1e-8}));
    m.outputs.insert("fuinf.csv".into(), "ab".repeat(32));
    m.to_json()
}

proptest! {
    #[test]
    fn args_parser_never_panics(words in proptest::collection::vec(prop_oneof![
        proptest::sample::select(WORDS).prop_map(String::from),
        "\\PC{0,12}",
    ], 0..14)) {
        let argv = std::iter::once("lpp".to_string()).chain(words);
        let _ = parse_args(argv);
    }

    #[test]
    fn manifest_parser_never_panics(text in "\\PC{0,300}") {
        let _ = RunManifest::from_json(&text);
    }

    #[test]
    fn mutated_manifests_never_panic(cut in 0usize..2000, insert in "\\PC{0,8}") {
        let mut text = manifest_text();
        let at = text.char_indices().map(|(i, _)| i).nth(cut % text.chars().count()).unwrap();
        text.insert_str(at, &insert);
        if let Ok(m) = RunManifest::from_json(&text) {
            prop_assert!(m.validate().is_ok());
        }
    }
}

#[test]
fn valid_manifest_parses() {
    assert!(RunManifest::from_json(&manifest_text()).is_ok());
}
