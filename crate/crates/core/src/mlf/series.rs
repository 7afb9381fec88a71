use super::gamma::rgamma;

/// Taylor series of E^rho_{alpha,beta}(z), intended for |z| <= 1.
///
/// For rho in {1, 2} the Pochhammer weight (rho)_k / k! is 1 or k+1.
pub(crate) fn eval(alpha: f64, beta: f64, rho: u32, z: f64) -> f64 {
    // Neumaier-compensated running sum
    let mut sum = 0.0_f64;
    let mut comp = 0.0_f64;
    let mut zk = 1.0_f64;
    let mut below = 0;
    for k in 0..400 {
        let weight = match rho {
            1 => 1.0,
            _ => (k + 1) as f64,
        };
        let term = weight * zk * rgamma(alpha * k as f64 + beta);
        let t = sum + term;
        if sum.abs() >= term.abs() {
            comp += (sum - t) + term;
        } else {
            comp += (term - t) + sum;
        }
        sum = t;
        // 1/Γ grows again only while its argument is below ~1.46
        let past_min = alpha * k as f64 + beta > 2.0;
        if past_min && term.abs() <= 1e-18 * (sum + comp).abs() {
            below += 1;
            if below >= 2 {
                break;
            }
        } else {
            below = 0;
        }
        zk *= z;
        if zk == 0.0 {
            break;
        }
    }
    sum + comp
}
