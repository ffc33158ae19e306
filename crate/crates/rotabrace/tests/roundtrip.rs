use proptest::prelude::*;

use rotabrace::catalog::{parse_carrier, Provenance};
use rotabrace::formats::{CarrierFile, SolutionFile, SpecFile};
use rotabrace::{builtins, enumerate_parallel};
use rotabrace_core::clifford::decompose_to_strong_semilattice;
use rotabrace_core::rota_baxter::enumerate_rota_baxter;
use rotabrace_core::ybe::SolutionMap;

fn entry_index() -> impl Strategy<Value = usize> {
    0..builtins().len()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 32, ..ProptestConfig::default() })]

    #[test]
    fn carrier_and_spec_files_round_trip(i in entry_index()) {
        let e = &builtins()[i];
        let text = serde_json::to_string(&CarrierFile::from_semigroup(Some(e.name.clone()), &e.carrier)).unwrap();
        let back = parse_carrier("mem", &text, Provenance::Builtin, String::new()).unwrap();
        prop_assert_eq!(&back.carrier, &e.carrier);
        prop_assert_eq!(&back.name, &e.name);

        let d = decompose_to_strong_semilattice(&e.carrier);
        let text = serde_json::to_string(&SpecFile::from_spec(None, &d.spec)).unwrap();
        let back = parse_carrier("mem", &text, Provenance::Builtin, "x".into()).unwrap();
        prop_assert_eq!(back.spec.as_ref(), Some(&d.spec));
    }

    #[test]
    fn enumeration_ignores_worker_count(i in entry_index(), workers in 1usize..9) {
        let s = &builtins()[i].carrier;
        prop_assert_eq!(enumerate_parallel(s, 8, workers).unwrap(), enumerate_rota_baxter(s, 8).unwrap());
    }

    #[test]
    fn solution_files_round_trip(n in 1usize..5, seed in any::<u64>()) {
        let r = rotabrace::random::random_map(n, seed);
        let file = SolutionFile::from_solution(&r);
        let text = serde_json::to_string(&file).unwrap();
        let back: SolutionFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(SolutionMap::from_table(n, back.pairs().unwrap()).unwrap(), r);
    }
}
