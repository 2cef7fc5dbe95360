// Scratch micro-benchmark used while sizing grids; not part of the library API.
use faer::complex_native::c64;
use faer::Mat;
use num_complex::Complex64;
use rustfft::FftPlanner;
use std::time::Instant;

fn main() {
    faer::set_global_parallelism(faer::Parallelism::Rayon(0));

    // FFT throughput
    for n in [512usize, 2048, 4096, 8192] {
        let mut planner = FftPlanner::<f64>::new();
        let fft = planner.plan_fft_forward(n);
        let mut buf: Vec<Complex64> = (0..n)
            .map(|i| Complex64::new((i as f64).sin(), 0.1))
            .collect();
        let mut scratch = vec![Complex64::default(); fft.get_inplace_scratch_len()];
        let reps = 200_000_000 / (n * 20) + 1;
        let t = Instant::now();
        for _ in 0..reps {
            fft.process_with_scratch(&mut buf, &mut scratch);
        }
        let dt = t.elapsed().as_secs_f64() / reps as f64;
        println!("fft n={n}: {:.2} us/transform", dt * 1e6);
    }

    // couple-step throughput (2x2 unitary rotation over rows)
    {
        let n = 4096usize;
        let mut r: Vec<Complex64> = (0..n).map(|i| Complex64::new((i as f64 * 0.01).cos(), 0.1)).collect();
        let mut s = r.clone();
        let mut alpha = Vec::with_capacity(n);
        let mut beta = Vec::with_capacity(n);
        for i in 0..n {
            let ang = 0.3 * (i as f64 * 0.002).sin();
            let ph = Complex64::from_polar(1.0, 0.1 * (i as f64 * 0.004).cos());
            alpha.push(ph * ang.cos());
            beta.push(ph * Complex64::new(0.0, ang.sin()));
        }
        let reps = 20000;
        let t = Instant::now();
        for _ in 0..reps {
            for i in 0..n {
                let a = alpha[i];
                let b = beta[i];
                let rv = r[i];
                let sv = s[i];
                r[i] = a * rv + b * sv;
                s[i] = b.conj() * rv + a.conj() * sv;
            }
        }
        let dt = t.elapsed().as_secs_f64() / reps as f64;
        println!("couple n={n}: {:.2} us/step-col ({:.2} Gflop/s)", dt * 1e6, (n * 28) as f64 / dt / 1e9);
        println!("  checksum {:?}", r[7] + s[9]);
    }

    // gemm
    for n in [1024usize, 2048] {
        let a = Mat::<c64>::from_fn(n, n, |i, j| c64::new((i * j % 13) as f64, (i + j) as f64 * 1e-3));
        let b = a.clone();
        let t = Instant::now();
        let c = &a * &b;
        let dt = t.elapsed().as_secs_f64();
        println!("gemm n={n}: {:.2} s ({:.2} Gflop/s), c[0,0]={:?}", dt, 8.0 * (n as f64).powi(3) / dt / 1e9, c.read(0, 0));
    }

    // svd
    for n in [512usize, 1024, 2048] {
        let a = Mat::<c64>::from_fn(n, n, |i, j| {
            c64::new(((i * 7 + j * 3) % 17) as f64 - 8.0, ((i + 2 * j) % 11) as f64 - 5.0)
        });
        let t = Instant::now();
        let sv = a.singular_values();
        println!("svd-values n={n}: {:.2} s (s0={:.3})", t.elapsed().as_secs_f64(), sv[0]);
        let t = Instant::now();
        let svd = a.svd();
        println!("svd-full   n={n}: {:.2} s (u00={:?})", t.elapsed().as_secs_f64(), svd.u().read(0, 0));
    }
}
