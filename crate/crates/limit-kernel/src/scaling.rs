/// Kernel parameter `u` for a staircase with `m = n - u_lattice n^{2/3}`
/// rows and columns at weight parameter `q`:
/// `u_lattice * q^{1/6} / (2 (1 + sqrt q)^{2/3})`.
///
/// The lattice offset and the kernel's `u` live on different scales; this
/// factor comes from matching the edge scaling of the finite kernel.
pub fn lattice_to_kernel_u(u_lattice: f64, q: f64) -> f64 {
    u_lattice * q.powf(1.0 / 6.0) / (2.0 * (1.0 + q.sqrt()).powf(2.0 / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter() {
        assert!((lattice_to_kernel_u(1.0, 0.25) - 0.302_853_6).abs() < 1e-6);
        assert_eq!(lattice_to_kernel_u(0.0, 0.5), 0.0);
    }
}
