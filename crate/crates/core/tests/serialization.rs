use regma::exact::{rat, Rat};
use regma::graph::catalog;
use regma::optimize::{cogirth, systole, CogirthResult, SystoleResult};
use regma::surface::{embeds_in, EmbeddingCertificate};

#[test]
fn rationals_are_strings() {
    assert_eq!(serde_json::to_string(&rat(6, 8)).unwrap(), "\"3/4\"");
    assert_eq!(serde_json::to_string(&rat(2, 1)).unwrap(), "\"2\"");
    let back: Rat = serde_json::from_str("\"-5/10\"").unwrap();
    assert_eq!(back, rat(-1, 2));
    assert!(serde_json::from_str::<Rat>("\"1/0\"").is_err());
}

#[test]
fn certificates_round_trip() {
    let g = catalog("petersen").unwrap();
    let s = systole(&g).unwrap();
    let back: SystoleResult = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
    assert_eq!(back, s);
    back.verify(&g).unwrap();

    let k33 = catalog("k33").unwrap();
    let cert = embeds_in(&k33, 1, false).unwrap().unwrap();
    let back: EmbeddingCertificate = serde_json::from_str(&serde_json::to_string(&cert).unwrap()).unwrap();
    assert_eq!(back, cert);
    back.verify(&k33).unwrap();

    let c = cogirth(&regma::matroid::r10()).unwrap();
    let back: CogirthResult = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(back, c);
}
