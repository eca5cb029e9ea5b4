//! Open subsets of R^d with membership tests and deterministic samplers.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::fmt;

#[derive(Clone, Debug, PartialEq)]
enum Kind {
    /// All of R^d (points are sampled from a desk-scale box).
    Full { d: usize },
    OpenBox { lo: Vec<f64>, hi: Vec<f64> },
    OpenBall { center: Vec<f64>, radius: f64 },
    /// Non-convex but arcwise connected: radii strictly between the bounds.
    Annulus { center: Vec<f64>, inner: f64, outer: f64 },
    /// Treated as possibly disconnected.
    Union(Box<DomainSpec>, Box<DomainSpec>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct DomainSpec {
    kind: Kind,
}

impl DomainSpec {
    pub fn full(d: usize) -> Self {
        assert!(d >= 1);
        DomainSpec { kind: Kind::Full { d } }
    }

    pub fn open_box(lo: Vec<f64>, hi: Vec<f64>) -> Self {
        assert_eq!(lo.len(), hi.len());
        assert!(!lo.is_empty());
        assert!(lo.iter().zip(&hi).all(|(a, b)| a < b), "box sides must be nonempty");
        DomainSpec { kind: Kind::OpenBox { lo, hi } }
    }

    /// The open interval `(lo, hi)` as a 1-d box.
    pub fn interval(lo: f64, hi: f64) -> Self {
        Self::open_box(vec![lo], vec![hi])
    }

    pub fn open_ball(center: Vec<f64>, radius: f64) -> Self {
        assert!(radius > 0.0);
        assert!(!center.is_empty());
        DomainSpec { kind: Kind::OpenBall { center, radius } }
    }

    pub fn annulus(center: Vec<f64>, inner: f64, outer: f64) -> Self {
        assert!(0.0 < inner && inner < outer);
        assert!(!center.is_empty());
        DomainSpec { kind: Kind::Annulus { center, inner, outer } }
    }

    pub fn union(a: DomainSpec, b: DomainSpec) -> Self {
        assert_eq!(a.dim(), b.dim());
        DomainSpec { kind: Kind::Union(Box::new(a), Box::new(b)) }
    }

    pub fn dim(&self) -> usize {
        match &self.kind {
            Kind::Full { d } => *d,
            Kind::OpenBox { lo, .. } => lo.len(),
            Kind::OpenBall { center, .. } | Kind::Annulus { center, .. } => center.len(),
            Kind::Union(a, _) => a.dim(),
        }
    }

    pub fn contains(&self, x: &[f64]) -> bool {
        if x.len() != self.dim() {
            return false;
        }
        match &self.kind {
            Kind::Full { .. } => true,
            Kind::OpenBox { lo, hi } => {
                x.iter().zip(lo).zip(hi).all(|((v, a), b)| a < v && v < b)
            }
            Kind::OpenBall { center, radius } => dist(x, center) < *radius,
            Kind::Annulus { center, inner, outer } => {
                let r = dist(x, center);
                *inner < r && r < *outer
            }
            Kind::Union(a, b) => a.contains(x) || b.contains(x),
        }
    }

    /// Hypothesis flag for the fundamental-theorem checks; unions are
    /// conservatively reported as not connected.
    pub fn arcwise_connected(&self) -> bool {
        !matches!(self.kind, Kind::Union(..))
    }

    /// A distinguished interior point: the origin/center where the domain
    /// has one, the mid-radius point for an annulus.
    pub fn canonical_point(&self) -> Vec<f64> {
        match &self.kind {
            Kind::Full { d } => vec![0.0; *d],
            Kind::OpenBox { lo, hi } => {
                lo.iter().zip(hi).map(|(a, b)| 0.5 * (a + b)).collect()
            }
            Kind::OpenBall { center, .. } => center.clone(),
            Kind::Annulus { center, inner, outer } => {
                let mut p = center.clone();
                p[0] += 0.5 * (inner + outer);
                p
            }
            Kind::Union(a, _) => a.canonical_point(),
        }
    }

    /// Deterministic interior points; identical seeds give identical points.
    /// The first point is always the canonical one, so sampled tests probe
    /// the distinguished center of the domain.
    pub fn sample(&self, seed: u64, count: usize) -> Vec<Vec<f64>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::with_capacity(count);
        if count >= 1 {
            out.push(self.canonical_point());
        }
        while out.len() < count {
            out.push(self.sample_one(&mut rng));
        }
        out
    }

    fn sample_one(&self, rng: &mut ChaCha8Rng) -> Vec<f64> {
        match &self.kind {
            Kind::Full { d } => (0..*d).map(|_| rng.gen_range(-2.0..2.0)).collect(),
            Kind::OpenBox { lo, hi } => lo
                .iter()
                .zip(hi)
                .map(|(a, b)| {
                    let margin = 1e-6 * (b - a);
                    rng.gen_range(a + margin..b - margin)
                })
                .collect(),
            Kind::OpenBall { center, radius } => loop {
                let x: Vec<f64> = center
                    .iter()
                    .map(|c| rng.gen_range(c - 0.999 * radius..c + 0.999 * radius))
                    .collect();
                if dist(&x, center) < 0.999 * radius {
                    return x;
                }
            },
            Kind::Annulus { center, inner, outer } => {
                let width = outer - inner;
                let r = rng.gen_range(inner + 0.025 * width..outer - 0.025 * width);
                // random direction from normals, scaled to radius r
                loop {
                    let dir: Vec<f64> = center
                        .iter()
                        .map(|_| rng.gen_range(-1.0..1.0f64))
                        .collect();
                    let len = dir.iter().map(|v| v * v).sum::<f64>().sqrt();
                    if len > 1e-3 {
                        return center
                            .iter()
                            .zip(&dir)
                            .map(|(c, d)| c + d / len * r)
                            .collect();
                    }
                }
            }
            Kind::Union(a, b) => {
                if rng.gen_bool(0.5) {
                    a.sample_one(rng)
                } else {
                    b.sample_one(rng)
                }
            }
        }
    }

    /// Whether the straight segment between two standard points stays inside,
    /// probed at `checks` evenly spaced parameters.
    pub fn segment_inside(&self, a: &[f64], b: &[f64], checks: usize) -> bool {
        (0..=checks).all(|i| {
            let t = i as f64 / checks as f64;
            let x: Vec<f64> = a.iter().zip(b).map(|(p, q)| p + t * (q - p)).collect();
            self.contains(&x)
        })
    }
}

fn dist(x: &[f64], y: &[f64]) -> f64 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

impl fmt::Display for DomainSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            Kind::Full { d } => write!(f, "full({d})"),
            Kind::OpenBox { lo, hi } => {
                write!(f, "box(")?;
                for (i, (a, b)) in lo.iter().zip(hi).enumerate() {
                    if i > 0 {
                        write!(f, ";")?;
                    }
                    write!(f, "{a},{b}")?;
                }
                write!(f, ")")
            }
            Kind::OpenBall { center, radius } => {
                write!(f, "ball(")?;
                for c in center {
                    write!(f, "{c},")?;
                }
                write!(f, ";{radius})")
            }
            Kind::Annulus { center, inner, outer } => {
                write!(f, "annulus({},{};{},{})", center[0], center[1], inner, outer)
            }
            Kind::Union(a, b) => write!(f, "union({a}|{b})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_satisfy_membership() {
        let domains = [
            DomainSpec::full(2),
            DomainSpec::open_box(vec![-2.0, 0.0], vec![2.0, 1.0]),
            DomainSpec::open_ball(vec![1.0, 1.0], 0.5),
            DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0),
            DomainSpec::union(DomainSpec::interval(0.0, 1.0), DomainSpec::interval(2.0, 3.0)),
        ];
        for dom in &domains {
            for p in dom.sample(42, 50) {
                assert!(dom.contains(&p), "{dom}: {p:?}");
            }
        }
    }

    #[test]
    fn sampling_is_deterministic() {
        let dom = DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0);
        assert_eq!(dom.sample(7, 20), dom.sample(7, 20));
        assert_ne!(dom.sample(7, 20), dom.sample(8, 20));
    }

    #[test]
    fn connectivity_flags() {
        assert!(DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0).arcwise_connected());
        let u = DomainSpec::union(DomainSpec::interval(0.0, 1.0), DomainSpec::interval(2.0, 3.0));
        assert!(!u.arcwise_connected());
    }

    #[test]
    fn segment_probing() {
        let dom = DomainSpec::annulus(vec![0.0, 0.0], 1.0, 2.0);
        assert!(dom.segment_inside(&[1.5, 0.0], &[1.2, 0.5], 32));
        assert!(!dom.segment_inside(&[1.5, 0.0], &[-1.5, 0.0], 32));
    }
}
