//! Mirrors the usage example in the top-level README so the documented
//! snippet keeps compiling and behaving as shown.

use unirow::{certificate_from_json, parse_ring, unimodular::euclid::euclid_complete};

#[test]
fn readme_example_runs_as_documented() {
    let ctx = parse_ring("Z").unwrap();
    let cert = euclid_complete(&ctx, &ctx.parse("3").unwrap(), &ctx.parse("2").unwrap()).unwrap();
    assert!(cert.matrix().determinant().unwrap().is_one());

    // Certificates survive serialization and re-verify from the JSON alone.
    let json = cert.to_json();
    let parsed = certificate_from_json(&json).unwrap();
    parsed.verify().unwrap();
    assert_eq!(parsed.to_json(), json);
}
