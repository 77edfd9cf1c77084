use boostent_web::{curve, measure_point, surface, CURVE_FIELDS, MEASURE_FIELDS};

#[test]
fn measure_point_matches_known_values() {
    let v = measure_point(0.6, 0.5).unwrap();
    assert_eq!(v.len(), MEASURE_FIELDS);
    assert!((v[1] + 0.1125).abs() < 1e-12);
    assert!((v[5] - 0.29278).abs() < 1e-5);
    assert!((v[8] - 0.96).abs() < 1e-12);
    assert!(measure_point(1.2, 0.5).is_err());
    assert!(measure_point(0.5, -0.1).is_err());
}

#[test]
fn surface_is_row_major_and_zero_at_rest_polarization() {
    let s = surface(5, 11).unwrap();
    assert_eq!(s.len(), 55);
    // n = 0 column
    assert!(s.iter().step_by(11).all(|&x| x == 0.0));
    // α = 0.5 row is non-decreasing in n
    assert!(s[22..33].windows(2).all(|w| w[1] >= w[0]));
    assert!(surface(1, 10).is_err());
}

#[test]
fn curve_starts_at_rest() {
    let c = curve(0.1, 1.0, 4.0, 9).unwrap();
    assert_eq!(c.len(), 9 * CURVE_FIELDS);
    assert_eq!(&c[..4], &[0.0, 0.0, 1.0, 1.0]);
    for pt in c.chunks(CURVE_FIELDS) {
        assert!(pt[1] >= 0.0 && pt[1] < std::f64::consts::FRAC_PI_2);
        assert!(pt[2] <= 1.0 && pt[3] <= 1.0);
    }
    // small packets lose three times the leading-order deficit
    let c = curve(0.01, 1.0, 4.0, 3).unwrap();
    let last = &c[c.len() - CURVE_FIELDS..];
    let ratio = (1.0 - last[2]) / (1.0 - last[3]);
    assert!((ratio - 3.0).abs() < 0.01, "{ratio}");
    assert!(curve(0.1, 1.0, -1.0, 9).is_err());
}
