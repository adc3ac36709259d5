use super::GammaError;

/// `diam Γₙ`: 2 for n = 2, 4 for n = 3, n + 1 for even n ≥ 4, n for odd n ≥ 5.
pub fn diameter_closed(n: usize) -> Result<u32, GammaError> {
    let n32 = n as u32;
    match n {
        0 | 1 => Err(GammaError::DimensionTooSmall { n }),
        2 => Ok(2),
        3 => Ok(4),
        _ if n % 2 == 0 => Ok(n32 + 1),
        _ => Ok(n32),
    }
}
