//! Exact arithmetic in cyclotomic fields: the Fourier matrix of Z/5 has full rank
//! over Q(zeta_5), while its real part collapses.

use braidcheck::exact::{CycloScalar, ExactMatrix};

fn main() {
    let n = 5;
    let f = ExactMatrix::from_fn(n, n, |i, j| CycloScalar::zeta_pow(n as u32, (i * j) as i64));
    println!("Fourier matrix of Z/{n}: rank {}", f.rank());

    let half = CycloScalar::frac(1, 2);
    let real = f.map(|x| &(x + &x.conj()) * &half);
    println!("its real part: rank {}", real.rank());

    let inv = f.inverse().expect("Fourier matrix is invertible");
    println!("F * F^-1 is the identity: {}", (&f * &inv).is_identity());
    println!("F[1][1] = {}", f.get(1, 1));
}
