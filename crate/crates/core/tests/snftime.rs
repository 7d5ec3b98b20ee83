use mfdcalc_core::matrix::{smith_normal_form, DenseMatrix};
use mfdcalc_core::Int;
use std::time::Instant;

#[test]
#[ignore]
fn time_40x40() {
    let mut seed = 42u64;
    let mut next = || {
        seed = seed.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = seed;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    };
    for case in 0..6 {
        let mut a = DenseMatrix::<Int>::zero(40, 40);
        for i in 0..40 {
            for j in 0..40 {
                a.set(i, j, Int::from((next() % 101) as i64 - 50));
            }
        }
        let t0 = Instant::now();
        let snf = smith_normal_form(&a);
        let t1 = t0.elapsed();
        let t2 = Instant::now();
        let ok = snf.u.mul(&a).mul(&snf.v) == snf.d;
        let t3 = t2.elapsed();
        let digits = (0..40)
            .flat_map(|i| (0..40).map(move |j| (i, j)))
            .map(|(i, j)| snf.u.get(i, j).to_string().len())
            .max()
            .unwrap();
        eprintln!("case {case}: snf {t1:?}, verify {t3:?}, ok={ok}, max U digits {digits}");
    }
}
