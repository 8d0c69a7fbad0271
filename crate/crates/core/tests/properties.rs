mod common;

use common::props;

#[test]
fn word_laws() {
    props::word_laws(10_000).unwrap();
}

#[test]
fn smith_divisibility_and_minors() {
    props::smith_chain(300).unwrap();
}

#[test]
fn smith_square_determinant() {
    props::smith_determinant(300).unwrap();
}

#[test]
fn abelian_orders_agree() {
    props::abelian_orders(64).unwrap();
}

#[test]
fn todd_coxeter_matches_multiplication_tables() {
    let corpus = props::corpus();
    assert!(corpus.len() >= 5);
    let orders: Vec<usize> = corpus.iter().map(|c| props::todd_coxeter_case(c).unwrap()).collect();
    assert_eq!(orders, [1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 4, 6, 6, 8, 12]);
}
