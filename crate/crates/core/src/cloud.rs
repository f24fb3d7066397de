//! Named, seeded generators for initial sets.
//!
//! `sphere:<dim>:<n>[:<sep>]`, `ball:<dim>:<n>[:<sep>]`, `face:<n>`,
//! `asymptote:<n>`, `file:<path>` (see [`read_cloud`]) and `empty`. Random clouds keep a minimum
//! pairwise distance `sep` (default [`DEFAULT_SEPARATION`]) and may come out
//! smaller than `n` when the ball is too crowded for it.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::region::Region;
use crate::space::{NormSpec, Vector};

pub const DEFAULT_SEPARATION: f64 = 0.15;
/// Declared supremum of the asymptote cloud.
pub const ASYMPTOTE_HINT: f64 = 1.0;
/// Draws per requested point before a separated cloud gives up.
const ATTEMPTS_PER_POINT: usize = 1_000;

#[derive(Clone, Debug, PartialEq)]
pub enum InitSpec {
    Sphere { dim: usize, n: usize, sep: f64 },
    Ball { dim: usize, n: usize, sep: f64 },
    Face { n: usize },
    Asymptote { n: usize },
    File(PathBuf),
    Empty,
}

impl InitSpec {
    pub fn generate(&self, spec: NormSpec, rng_seed: u64) -> Result<Region> {
        let mut rng = ChaCha8Rng::seed_from_u64(rng_seed ^ 0x5EED_C10D);
        match self {
            InitSpec::Sphere { dim, n, sep } => Ok(Region::new(separated(*n, *sep, spec, || {
                unit_sphere_point(*dim, spec, &mut rng)
            }))),
            InitSpec::Ball { dim, n, sep } => Ok(Region::new(separated(*n, *sep, spec, || {
                let u: f64 = rng.gen();
                let x = unit_sphere_point(*dim, spec, &mut rng);
                into_ball(x.scale(u.powf(1.0 / *dim as f64)), spec)
            }))),
            InitSpec::Face { n } => Ok(face_cloud(*n)),
            InitSpec::Asymptote { n } => asymptote_cloud(*n, spec),
            InitSpec::File(path) => read_cloud(path, spec),
            InitSpec::Empty => Ok(Region::empty()),
        }
    }
}

/// Rescales `x` so that its computed norm is at most 1.
pub fn into_ball(mut x: Vector, spec: NormSpec) -> Vector {
    while spec.norm(&x) > 1.0 {
        x = x.scale(1.0 - f64::EPSILON);
    }
    x
}

pub fn unit_sphere_point<R: Rng>(dim: usize, spec: NormSpec, rng: &mut R) -> Vector {
    loop {
        let g: Vec<f64> = (0..dim).map(|_| rng.sample(StandardNormal)).collect();
        let x = Vector::from_dense(&g);
        let r = spec.norm(&x);
        if r > 1e-9 {
            return into_ball(x.scale(1.0 / r), spec);
        }
    }
}

fn separated<F: FnMut() -> Vector>(n: usize, sep: f64, spec: NormSpec, mut draw: F) -> Vec<Vector> {
    let mut points: Vec<Vector> = Vec::with_capacity(n);
    let mut attempts = 0;
    while points.len() < n && attempts < ATTEMPTS_PER_POINT * n.max(1) {
        attempts += 1;
        let x = draw();
        if points.iter().all(|p| spec.distance(p, &x) >= sep) {
            points.push(x);
        }
    }
    points
}

/// `(1, t)` for n values of t evenly spaced over [−1, 1]: a segment on the
/// ℓ∞ unit sphere.
pub fn face_cloud(n: usize) -> Region {
    match n {
        0 => Region::empty(),
        1 => Region::singleton(Vector::from_dense(&[1.0, 0.0])),
        _ => Region::new(
            (0..n)
                .map(|i| Vector::from_dense(&[1.0, -1.0 + 2.0 * i as f64 / (n - 1) as f64]))
                .collect(),
        ),
    }
}

/// Points (1 − 0.1/j)·e_{j−1}, j = 1..=n, with the unattained supremum 1
/// declared.
pub fn asymptote_cloud(n: usize, spec: NormSpec) -> Result<Region> {
    let points = (1..=n)
        .map(|j| Vector::basis(j - 1).scale(1.0 - 0.1 / j as f64))
        .collect();
    Region::with_hint(points, ASYMPTOTE_HINT, spec)
}

/// One vector per line, as a JSON array of `[index, value]` pairs or as
/// comma-separated dense coordinates. Blank lines and `#` comments are
/// skipped; a `sup_hint = <value>` line declares an unattained supremum.
pub fn read_cloud(path: &std::path::Path, spec: NormSpec) -> Result<Region> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidParameter(format!("cannot read {}: {e}", path.display())))?;
    let mut hint = None;
    let mut points = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        match line.split_once('=') {
            Some((key, value)) if key.trim() == "sup_hint" => {
                let h = value.trim().parse::<f64>().map_err(|e| {
                    Error::InvalidParameter(format!("bad sup_hint '{}': {e}", value.trim()))
                })?;
                hint = Some(h);
            }
            _ => points.push(parse_vector(line)?),
        }
    }
    match hint {
        Some(h) => Region::with_hint(points, h, spec),
        None => Ok(Region::new(points)),
    }
}

/// Parses `[[i, v], ...]` or `v0,v1,...`.
pub fn parse_vector(s: &str) -> Result<Vector> {
    let s = s.trim();
    if s.starts_with('[') {
        return serde_json::from_str(s).map_err(|e| Error::InvalidParameter(format!("bad vector '{s}': {e}")));
    }
    if s.is_empty() {
        return Ok(Vector::zero());
    }
    let values = s
        .split(',')
        .map(|t| t.trim().parse::<f64>())
        .collect::<std::result::Result<Vec<_>, _>>()
        .map_err(|e| Error::InvalidParameter(format!("bad vector '{s}': {e}")))?;
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::InvalidParameter(format!("bad vector '{s}': non-finite entry")));
    }
    Ok(Vector::from_dense(&values))
}

impl fmt::Display for InitSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InitSpec::Sphere { dim, n, sep } => write!(f, "sphere:{dim}:{n}:{sep}"),
            InitSpec::Ball { dim, n, sep } => write!(f, "ball:{dim}:{n}:{sep}"),
            InitSpec::Face { n } => write!(f, "face:{n}"),
            InitSpec::Asymptote { n } => write!(f, "asymptote:{n}"),
            InitSpec::File(path) => write!(f, "file:{}", path.display()),
            InitSpec::Empty => write!(f, "empty"),
        }
    }
}

impl FromStr for InitSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("unknown initial set '{s}'"));
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(InitSpec::File(PathBuf::from(path)));
        }
        let parts: Vec<&str> = s.trim().split(':').collect();
        let int = |t: &str| t.parse::<usize>().map_err(|_| bad());
        let sep = |t: Option<&&str>| -> Result<f64> {
            match t {
                None => Ok(DEFAULT_SEPARATION),
                Some(t) => t.parse::<f64>().ok().filter(|v| *v >= 0.0).ok_or_else(bad),
            }
        };
        match parts.as_slice() {
            ["empty"] => Ok(InitSpec::Empty),
            ["face", n] => Ok(InitSpec::Face { n: int(n)? }),
            ["asymptote", n] => Ok(InitSpec::Asymptote { n: int(n)? }),
            ["sphere", dim, n, rest @ ..] if rest.len() <= 1 => Ok(InitSpec::Sphere {
                dim: int(dim)?.max(1),
                n: int(n)?,
                sep: sep(rest.first())?,
            }),
            ["ball", dim, n, rest @ ..] if rest.len() <= 1 => Ok(InitSpec::Ball {
                dim: int(dim)?.max(1),
                n: int(n)?,
                sep: sep(rest.first())?,
            }),
            _ => Err(bad()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn face_cloud_is_on_the_sup_sphere() {
        let a = face_cloud(41);
        assert_eq!(a.len(), 41);
        assert_eq!(a.points()[0], Vector::from_dense(&[1.0, -1.0]));
        assert_eq!(a.points()[20], Vector::from_dense(&[1.0, 0.0]));
        assert_eq!(a.points()[40], Vector::from_dense(&[1.0, 1.0]));
        assert!(a.points().iter().all(|x| NormSpec::sup().norm(x) == 1.0));
        assert_eq!(a.diameter(NormSpec::sup()).unwrap(), 2.0);
    }

    #[test]
    fn random_clouds_stay_in_ball_and_apart() {
        for p in [1.0, 2.0, 3.5, f64::INFINITY] {
            let spec = NormSpec::new(p).unwrap();
            for init in ["sphere:3:20", "ball:5:40", "ball:2:64"] {
                let a: InitSpec = init.parse().unwrap();
                let r = a.generate(spec, 9).unwrap();
                assert!(!r.is_empty());
                assert!(r.points().iter().all(|x| spec.norm(x) <= 1.0));
                for (i, x) in r.points().iter().enumerate() {
                    for y in &r.points()[i + 1..] {
                        assert!(spec.distance(x, y) >= DEFAULT_SEPARATION);
                    }
                }
            }
        }
    }

    #[test]
    fn generators_are_seeded() {
        let a: InitSpec = "ball:4:30".parse().unwrap();
        let spec = NormSpec::euclidean();
        assert_eq!(a.generate(spec, 1).unwrap(), a.generate(spec, 1).unwrap());
        assert_ne!(a.generate(spec, 1).unwrap(), a.generate(spec, 2).unwrap());
    }

    #[test]
    fn asymptote_cloud_declares_hint() {
        let a = asymptote_cloud(2, NormSpec::euclidean()).unwrap();
        assert_eq!(a.sup_hint(), Some(1.0));
        assert_eq!(a.points()[0], Vector::from_dense(&[0.9]));
        assert_eq!(a.points()[1], Vector::from_pairs([(1, 0.95)]));
    }

    #[test]
    fn init_names() {
        assert_eq!("sphere:8:32".parse::<InitSpec>().unwrap(), InitSpec::Sphere { dim: 8, n: 32, sep: 0.15 });
        assert_eq!("ball:2:10:0".parse::<InitSpec>().unwrap(), InitSpec::Ball { dim: 2, n: 10, sep: 0.0 });
        assert_eq!("file:/tmp/x".parse::<InitSpec>().unwrap(), InitSpec::File("/tmp/x".into()));
        assert!("cube:3".parse::<InitSpec>().is_err());
        assert!("ball:2:10:-1".parse::<InitSpec>().is_err());
        for s in ["sphere:8:32:0.15", "face:41", "asymptote:3", "empty"] {
            assert_eq!(s.parse::<InitSpec>().unwrap().to_string(), s);
        }
    }

    #[test]
    fn point_files() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("pts.txt");
        let spec = NormSpec::euclidean();
        std::fs::write(&path, "# cloud\n0.5,0\n\n[[3, -0.25]]\nsup_hint = 0.9\n").unwrap();
        let a = read_cloud(&path, spec).unwrap();
        assert_eq!(a.points(), &[Vector::from_dense(&[0.5]), Vector::from_pairs([(3, -0.25)])]);
        assert_eq!(a.sup_hint(), Some(0.9));
        std::fs::write(&path, "0.5\nsup_hint = 0.4\n").unwrap();
        assert!(matches!(read_cloud(&path, spec), Err(Error::HintBelowAttained { .. })));
        std::fs::write(&path, "0.5\nsup_hint = high\n").unwrap();
        assert!(read_cloud(&path, spec).is_err());
    }

    #[test]
    fn vector_literals() {
        assert_eq!(parse_vector("1, 0").unwrap(), Vector::basis(0));
        assert_eq!(parse_vector("[[7, 1.0]]").unwrap(), Vector::basis(7));
        assert_eq!(parse_vector("0,0").unwrap(), Vector::zero());
        assert!(parse_vector("1,x").is_err());
        assert!(parse_vector("inf,0").is_err());
    }
}
