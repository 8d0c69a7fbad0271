use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Diagonal of the Smith normal form of `m`, length `min(rows, cols)`,
/// nonnegative, with `d[i] | d[i+1]` (zeros last).
///
/// Pivots on the smallest nonzero absolute value remaining; arithmetic is
/// arbitrary precision.
pub fn smith_normal_form(m: &[Vec<i64>]) -> Vec<BigInt> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut a: Vec<Vec<BigInt>> = m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let n = rows.min(cols);

    for t in 0..n {
        loop {
            let Some((pi, pj)) = smallest_nonzero(&a, t) else {
                return diagonal(&a, n);
            };
            a.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                if !a[i][t].is_zero() {
                    let q = a[i][t].div_floor(&a[t][t]);
                    let (head, tail) = a.split_at_mut(i);
                    for (x, p) in tail[0].iter_mut().zip(head[t].iter()).skip(t) {
                        *x -= &q * p;
                    }
                    clean &= a[i][t].is_zero();
                }
            }
            for j in t + 1..cols {
                if !a[t][j].is_zero() {
                    let q = a[t][j].div_floor(&a[t][t]);
                    for row in a.iter_mut().skip(t) {
                        let p = row[t].clone();
                        row[j] -= &q * p;
                    }
                    clean &= a[t][j].is_zero();
                }
            }
            if !clean {
                continue;
            }

            // divisibility: fold an offending row into the pivot row
            let pivot = a[t][t].clone();
            let offending = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !a[i][j].is_multiple_of(&pivot)));
            match offending {
                Some(i) => {
                    let (head, tail) = a.split_at_mut(i);
                    for (x, y) in head[t].iter_mut().zip(tail[0].iter()) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a[t][t].is_negative() {
            a[t][t] = -a[t][t].clone();
        }
    }
    diagonal(&a, n)
}

fn smallest_nonzero(a: &[Vec<BigInt>], t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for (i, row) in a.iter().enumerate().skip(t) {
        for (j, x) in row.iter().enumerate().skip(t) {
            if x.is_zero() {
                continue;
            }
            let v = x.abs();
            if best.as_ref().is_none_or(|(_, _, b)| v < *b) {
                best = Some((i, j, v));
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn diagonal(a: &[Vec<BigInt>], n: usize) -> Vec<BigInt> {
    (0..n).map(|i| a[i][i].abs()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(m: &[&[i64]]) -> Vec<i64> {
        let m: Vec<Vec<i64>> = m.iter().map(|r| r.to_vec()).collect();
        smith_normal_form(&m).iter().map(|d| i64::try_from(d).unwrap()).collect()
    }

    #[test]
    fn small_examples() {
        assert_eq!(snf(&[&[1, 0], &[0, 1]]), vec![1, 1]);
        assert_eq!(snf(&[&[2, 4], &[6, 8]]), vec![2, 4]);
        assert_eq!(snf(&[&[3]]), vec![3]);
        assert_eq!(snf(&[&[2, 0], &[0, 3]]), vec![1, 6]);
        assert_eq!(snf(&[&[0, 0], &[0, 0]]), vec![0, 0]);
        assert!(snf(&[]).is_empty());
    }

    #[test]
    fn rectangular_with_zero_columns() {
        let m: &[&[i64]] = &[&[0, 0, 0, 0], &[-1, 0, 0, 0], &[0, 0, -1, 0]];
        assert_eq!(snf(m), vec![1, 1, 0]);
    }

    #[test]
    fn large_entries_do_not_overflow() {
        let big = i64::MAX;
        let d = smith_normal_form(&[vec![big, big - 1], vec![big - 1, big]]);
        // det = big^2 - (big-1)^2 = 2 big - 1
        let det = BigInt::from(big) * 2 - 1;
        assert_eq!(&d[0] * &d[1], det);
    }
}
