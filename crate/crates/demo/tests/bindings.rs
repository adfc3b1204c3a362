use pl_persistence_demo::{diagram_of, image_of, sample};

#[test]
fn flattened_line_diagram() {
    assert_eq!(
        diagram_of(&[0.0, 2.0, 1.0, 3.0], false).unwrap(),
        vec![1.0, 2.0, 2.0, 1.0, 0.0, f64::INFINITY, 0.0, -1.0]
    );
}

#[test]
fn circle_flag_switches_topology() {
    let values = [0.0, 3.0, 1.0, 2.0];
    assert_eq!(
        diagram_of(&values, true).unwrap(),
        vec![1.0, 2.0, 2.0, 3.0, 0.0, f64::INFINITY, 0.0, -1.0]
    );
    assert_ne!(diagram_of(&values, true), diagram_of(&values, false));
}

#[test]
fn image_diagram_and_errors() {
    let f = [0.0, 3.0, 1.0, 2.0, 0.0];
    let g = [0.0, 5.0, 1.0, 4.0, 2.0];
    assert_eq!(
        image_of(&f, &g).unwrap(),
        vec![1.0, 3.0, 2.0, 1.0, 0.0, f64::INFINITY, 0.0, -1.0]
    );
    assert!(image_of(&g, &f).unwrap_err().contains("dominance violated"));
    assert!(diagram_of(&[], false).unwrap_err().contains("empty sample"));
}

#[test]
fn samples() {
    assert_eq!(sample("narrowing", 4, 0).unwrap(), vec![0.0, 4.0, 1.0, 3.0]);
    assert_eq!(
        sample("walk", 100, 3).unwrap(),
        sample("walk", 100, 3).unwrap()
    );
    assert!(sample("sawtooth", 4, 0).is_err());
    let walk = sample("walk", 1000, 1).unwrap();
    assert!(walk.windows(2).all(|w| (w[1] - w[0]).abs() <= 0.5));
}
