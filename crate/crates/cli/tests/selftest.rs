use starcolor_cli::selftest::{run_check, CheckId, Config, Status};

#[test]
fn small_oracle_sizes_pass() {
    let config = Config { max_n: 8, seed: 1, ..Config::default() };
    for id in [CheckId::OracleEquivalence, CheckId::CaterpillarOracle] {
        let report = run_check(id, &config);
        assert_eq!(report.status, Status::Pass, "{}: {}", id.name(), report.detail);
    }
}

#[test]
fn oracle_checks_refuse_large_sizes() {
    let config = Config { max_n: 11, seed: 1, ..Config::default() };
    assert_eq!(run_check(CheckId::OracleEquivalence, &config).status, Status::TooLarge);
    assert_eq!(run_check(CheckId::NearStar, &config).status, Status::Pass);
}

#[test]
fn colorings_of_random_trees_validate() {
    let report = run_check(CheckId::RandomValidation, &Config::default());
    assert_eq!(report.status, Status::Pass, "{}", report.detail);
}
