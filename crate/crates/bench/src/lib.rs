//! Fixtures shared by the benchmarks.

use sectoria_core::rng::Stream;
use sectoria_core::{CMatrix, Complex};

/// Matrix with independent standard complex Gaussian entries.
pub fn gaussian(n: usize, seed: u64) -> CMatrix {
    let mut s = Stream::new(seed);
    let data: Vec<Complex> = (0..n * n).map(|_| s.complex_normal()).collect();
    CMatrix::from_row_major(n, data).expect("square data")
}

/// Hermitian part of [`gaussian`].
pub fn hermitian(n: usize, seed: u64) -> CMatrix {
    let g = gaussian(n, seed);
    (&g + &g.adjoint()).scale_real(0.5)
}
