//! The code shown in the README, kept compiling and honest.

use qmobius::fps::{prod_pow, ExponentSequence};
use qmobius::identities::verify_theorem1;
use qmobius::partitions::Oracle;

#[test]
fn readme_library_example() {
    let euler = prod_pow(&ExponentSequence::constant(1), 12);
    assert_eq!(euler.to_string(), "1 - q - q^2 + q^5 + q^7 - q^12");

    let report = verify_theorem1(100, &Oracle::default());
    assert!(report.passed());
}
