use sprs::{CsMat, TriMat};
use sprs_ldl::Ldl;
use std::time::Instant;

fn main() {
    for &nx in &[101usize, 201] {
        let ny = nx;
        let n = nx * ny;
        let mut tri = TriMat::new((n, n));
        let idx = |i: usize, j: usize| j * nx + i;
        for j in 0..ny {
            for i in 0..nx {
                let k = idx(i, j);
                let mut diag = 0.01;
                if i > 0 { tri.add_triplet(k, idx(i-1,j), -1.0); diag += 1.0; }
                if i < nx-1 { tri.add_triplet(k, idx(i+1,j), -1.0); diag += 1.0; }
                if j > 0 { tri.add_triplet(k, idx(i,j-1), -1.0); diag += 1.0; }
                if j < ny-1 { tri.add_triplet(k, idx(i,j+1), -1.0); diag += 1.0; }
                tri.add_triplet(k, k, diag);
            }
        }
        let a: CsMat<f64> = tri.to_csc();
        let t0 = Instant::now();
        let ldl = Ldl::new().numeric(a.view()).unwrap();
        let t_factor = t0.elapsed();
        let b = vec![1.0; n];
        let t1 = Instant::now();
        let mut x = vec![0.0; n];
        for _ in 0..64 {
            x = ldl.solve(&b);
        }
        let t_solve = t1.elapsed();
        println!("nx={} n={} factor={:?} 64 solves={:?} x0={:.3e}", nx, n, t_factor, t_solve, x[0]);
    }
}
