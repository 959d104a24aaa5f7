use super::DegreeError;
use crate::chord::{ChordDiagram, PlanarLoop};

/// A real divisor on the planar loops plus a number of conjugate point pairs.
#[derive(Clone, Debug)]
pub struct MarkedDivisor {
    pub base: ChordDiagram,
    pub loops: Vec<PlanarLoop>,
    /// (loop index, multiplicity)
    pub real_points: Vec<(usize, u32)>,
    pub conjugate_pairs: u32,
}

impl MarkedDivisor {
    /// Real points given per loop index.
    pub fn new(base: &ChordDiagram, real_points: Vec<(usize, u32)>, conjugate_pairs: u32) -> Result<Self, DegreeError> {
        let loops = base.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
        Ok(MarkedDivisor { base: base.clone(), loops, real_points, conjugate_pairs })
    }

    /// Real points given as named marked points of the base diagram.
    pub fn from_points(base: &ChordDiagram, points: &[(&str, u32)], conjugate_pairs: u32) -> Result<Self, DegreeError> {
        let loops = base.planar_loops().map_err(|_| DegreeError::NonPlanarBase)?;
        let mut real = Vec::new();
        for &(name, m) in points {
            let p = base.point(name).ok_or_else(|| DegreeError::UnknownLoop(name.to_string()))?;
            if base.is_endpoint(p) {
                return Err(DegreeError::SupportOnChordEndpoint(name.to_string()));
            }
            let i = base.find_loop(&loops, name).unwrap();
            real.push((i, m));
        }
        Ok(MarkedDivisor { base: base.clone(), loops, real_points: real, conjugate_pairs })
    }

    pub fn total_degree(&self) -> u32 {
        self.real_points.iter().map(|&(_, m)| m).sum::<u32>() + 2 * self.conjugate_pairs
    }

    pub fn per_loop(&self) -> Vec<u32> {
        let mut v = vec![0; self.loops.len()];
        for &(i, m) in &self.real_points {
            v[i] += m;
        }
        v
    }
}

pub fn hopf_divisor_valid(md: &MarkedDivisor) -> Result<bool, DegreeError> {
    if !md.base.is_planar() {
        return Err(DegreeError::NonPlanarBase);
    }
    let l = md.base.l() as u32;
    let delta = md.base.delta() as u32;
    Ok(md.total_degree() == l + delta + 2 && md.per_loop().iter().all(|m| m % 2 == 1))
}

pub fn non_special_certificate(md: &MarkedDivisor) -> Result<bool, DegreeError> {
    if !md.base.is_planar() {
        return Err(DegreeError::NonPlanarBase);
    }
    let g = md.base.l() - 1;
    let delta = md.base.delta();
    let met = md.per_loop().iter().filter(|&&m| m > 0).count();
    Ok(met >= g + delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::RawDiagram;

    fn two_circles_one_chord() -> ChordDiagram {
        ChordDiagram::validate(&RawDiagram {
            circles: vec![
                vec!["a".into(), "x".into(), "b".into(), "y".into()],
                vec!["z".into(), "w".into()],
            ],
            chords: vec![["a".into(), "b".into()]],
        })
        .unwrap()
    }

    #[test]
    fn hopf_divisors() {
        let cd = two_circles_one_chord();
        let md = MarkedDivisor::from_points(&cd, &[("x", 1), ("y", 1), ("z", 1)], 1).unwrap();
        assert_eq!(md.total_degree(), 5);
        assert!(hopf_divisor_valid(&md).unwrap());
        let md = MarkedDivisor::from_points(&cd, &[("x", 1), ("y", 1)], 1).unwrap();
        assert!(!hopf_divisor_valid(&md).unwrap());
        let md = MarkedDivisor::from_points(&cd, &[("x", 3), ("y", 1), ("z", 1)], 0).unwrap();
        assert!(hopf_divisor_valid(&md).unwrap());
        assert!(matches!(
            MarkedDivisor::from_points(&cd, &[("a", 1)], 0),
            Err(DegreeError::SupportOnChordEndpoint(_))
        ));
    }

    #[test]
    fn certificates() {
        let cd = ChordDiagram::validate(&RawDiagram {
            circles: vec![vec!["x".into()], vec!["y".into()]],
            chords: vec![],
        })
        .unwrap();
        let md = MarkedDivisor::from_points(&cd, &[("x", 2)], 0).unwrap();
        assert!(non_special_certificate(&md).unwrap());
    }
}
