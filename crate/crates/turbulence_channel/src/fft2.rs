use num_complex::Complex64;
use rustfft::Fft;

fn transpose(data: &mut [Complex64], n: usize) {
    for i in 0..n {
        for j in (i + 1)..n {
            data.swap(i * n + j, j * n + i);
        }
    }
}

/// Unnormalized 2-D transform of a row-major `n × n` array.
pub(crate) fn fft2(data: &mut [Complex64], n: usize, fft: &dyn Fft<f64>, scratch: &mut Vec<Complex64>) {
    scratch.resize(fft.get_inplace_scratch_len(), Complex64::new(0.0, 0.0));
    fft.process_with_scratch(data, scratch);
    transpose(data, n);
    fft.process_with_scratch(data, scratch);
    transpose(data, n);
}

/// Frequency of FFT bin `i` for `n` samples at pitch `dx`.
pub(crate) fn freq(i: usize, n: usize, dx: f64) -> f64 {
    let k = if i < n / 2 { i as f64 } else { i as f64 - n as f64 };
    k / (n as f64 * dx)
}
