//! Exact coordinate geometry for the 120° triangle, its bisector and its
//! circumcircle, entirely inside ℚ(√3).
//!
//! # Frame
//!
//! The 120° vertex `C` sits at the origin, `A = (b, 0)` so that `CA = b`,
//! and `B = (−a/2, (a/2)√3)` so that `CB = a`. The bisector of the angle at
//! `C` runs along the unit direction `(1/2, √3/2)`; it meets `AB` at `D` and
//! the circumcircle again at `E`.
//!
//! In the classical figure the 120° angle is at `A` with bisector `AD`; its
//! vertices map onto this frame as `A → C`, `B → A`, `C → B`, with `D` and
//! `E` unchanged. The identities checked here therefore read:
//!
//! - bisector: `1/CD = 1/CA + 1/CB`
//! - equilateral far triangle: `AE = EB = AB`
//! - sum of sides: `CE = CA + CB`
//! - similarity ratio: `CA·CB = CD·CE`
//! - Ptolemy on the cyclic quadrilateral `C, A, E, B`:
//!   `CE·AB = CA·EB + AE·BC`
//!
//! No square root of a field element is ever taken. Equalities of lengths
//! are checked on squares; sums of lengths use the double-squaring criterion
//! `X = Y + Z ⇔ (X² − Y² − Z²)² = 4Y²Z² ∧ X² − Y² − Z² >= 0` for
//! non-negative `X, Y, Z`.

use crate::exactnum::{QSqrt3, Rational};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: QSqrt3,
    pub y: QSqrt3,
}

impl Point {
    pub fn new(x: QSqrt3, y: QSqrt3) -> Self {
        Point { x, y }
    }

    pub fn rational(x: Rational, y: Rational) -> Self {
        Point { x: x.into(), y: y.into() }
    }

    pub fn origin() -> Self {
        Point { x: QSqrt3::zero(), y: QSqrt3::zero() }
    }

    fn minus(&self, other: &Point) -> Point {
        Point { x: &self.x - &other.x, y: &self.y - &other.y }
    }

    fn plus_scaled(&self, dir: &Point, lambda: &QSqrt3) -> Point {
        Point { x: &self.x + &(&dir.x * lambda), y: &self.y + &(&dir.y * lambda) }
    }

    fn dot(&self, other: &Point) -> QSqrt3 {
        &(&self.x * &other.x) + &(&self.y * &other.y)
    }

    fn cross(&self, other: &Point) -> QSqrt3 {
        &(&self.x * &other.y) - &(&self.y * &other.x)
    }

    pub fn dist2(&self, other: &Point) -> QSqrt3 {
        let d = self.minus(other);
        d.dot(&d)
    }
}

/// Sign of the turn `p → q → r`.
fn orientation(p: &Point, q: &Point, r: &Point) -> i8 {
    q.minus(p).cross(&r.minus(p)).sign()
}

/// The 120° triangle with `CB = a`, `CA = b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TriangleConfig {
    pub a: Rational,
    pub b: Rational,
    pub vertex_a: Point,
    pub vertex_b: Point,
    pub vertex_c: Point,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Circle {
    pub center: Point,
    pub radius_squared: QSqrt3,
}

impl Circle {
    /// The circle through three non-collinear points.
    pub fn through(p1: &Point, p2: &Point, p3: &Point) -> Result<Circle> {
        // 2(p2 − p1)·O = |p2|² − |p1|², 2(p3 − p1)·O = |p3|² − |p1|²
        let two = QSqrt3::from(2);
        let (u, v) = (p2.minus(p1), p3.minus(p1));
        let (a11, a12) = (&two * &u.x, &two * &u.y);
        let (a21, a22) = (&two * &v.x, &two * &v.y);
        let n1 = p1.dot(p1);
        let b1 = &p2.dot(p2) - &n1;
        let b2 = &p3.dot(p3) - &n1;
        let det = &(&a11 * &a22) - &(&a12 * &a21);
        if det.is_zero() {
            return Err(Error::Domain("circle through collinear points".into()));
        }
        let cx = (&(&b1 * &a22) - &(&a12 * &b2)).checked_div(&det)?;
        let cy = (&(&a11 * &b2) - &(&b1 * &a21)).checked_div(&det)?;
        let center = Point::new(cx, cy);
        let radius_squared = center.dist2(p1);
        Ok(Circle { center, radius_squared })
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.center.dist2(p) == self.radius_squared
    }
}

fn half() -> Rational {
    Rational::new(1, 2).expect("nonzero")
}

/// Unit direction of the 120° bisector, `(1/2, √3/2)`.
pub fn bisector_direction() -> Point {
    Point::new(QSqrt3::from_rational(half()), QSqrt3::new(Rational::zero(), half()))
}

pub fn build_triangle(a: Rational, b: Rational) -> Result<TriangleConfig> {
    if a.signum() <= 0 || b.signum() <= 0 {
        return Err(Error::Domain(format!("sides must be positive, got a={a}, b={b}")));
    }
    let half_a = &a * &half();
    let vertex_b = Point::new(QSqrt3::from_rational(-&half_a), QSqrt3::new(Rational::zero(), half_a));
    let vertex_a = Point::rational(b.clone(), Rational::zero());
    Ok(TriangleConfig { a, b, vertex_a, vertex_b, vertex_c: Point::origin() })
}

impl TriangleConfig {
    /// `|AB|²`, which equals `a² + ab + b²`.
    pub fn ab_squared(&self) -> QSqrt3 {
        self.vertex_a.dist2(&self.vertex_b)
    }
}

/// Intersection of the bisector ray from `C` with the segment `AB`.
pub fn bisector_foot(cfg: &TriangleConfig) -> Point {
    // C + λ·u = A + μ·(B − A)  ⇔  λ·u − μ·w = A − C
    let u = bisector_direction();
    let w = cfg.vertex_b.minus(&cfg.vertex_a);
    let rhs = cfg.vertex_a.minus(&cfg.vertex_c);
    // u × w ≠ 0 because B − A is never parallel to the bisector
    let det = w.cross(&u);
    let lambda = w.cross(&rhs).checked_div(&det).expect("bisector crosses AB");
    cfg.vertex_c.plus_scaled(&u, &lambda)
}

/// `CD² · (a + b)² = (ab)²` with `CD²` rational, and `D` lies on segment `AB`.
pub fn verify_prop1(a: Rational, b: Rational) -> Result<bool> {
    let cfg = build_triangle(a, b)?;
    let foot = bisector_foot(&cfg);
    let Some(cd2) = foot.dist2(&cfg.vertex_c).as_rational().cloned() else {
        return Ok(false);
    };
    let sum = &cfg.a + &cfg.b;
    let prod = &cfg.a * &cfg.b;
    // D on the segment AB
    let on_segment = orientation(&cfg.vertex_a, &foot, &cfg.vertex_b) == 0
        && foot.minus(&cfg.vertex_a).dot(&foot.minus(&cfg.vertex_b)).sign() <= 0;
    Ok(on_segment && cd2 * sum.square() == prod.square())
}

pub fn circumcircle(cfg: &TriangleConfig) -> Circle {
    Circle::through(&cfg.vertex_c, &cfg.vertex_a, &cfg.vertex_b).expect("triangle vertices are not collinear")
}

/// The point `E ≠ C` where the bisector line meets the circumcircle again.
pub fn second_intersection(cfg: &TriangleConfig) -> Point {
    second_intersection_on(&circumcircle(cfg), &cfg.vertex_c, &bisector_direction())
}

/// On the line `p + λ·dir` the circle equation is a quadratic in λ with the
/// root λ = 0, so the other root is `−2·dir·(p − O)/(dir·dir)`.
fn second_intersection_on(circle: &Circle, p: &Point, dir: &Point) -> Point {
    let num = dir.dot(&p.minus(&circle.center));
    let lambda = (&QSqrt3::from(-2) * &num).checked_div(&dir.dot(dir)).expect("nonzero direction");
    p.plus_scaled(dir, &lambda)
}

/// A triangle with its bisector foot, circumcircle and far point `E`, each
/// computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Figure {
    pub cfg: TriangleConfig,
    pub foot: Point,
    pub circle: Circle,
    pub far_point: Point,
}

impl Figure {
    pub fn new(cfg: TriangleConfig) -> Figure {
        let foot = bisector_foot(&cfg);
        let circle = circumcircle(&cfg);
        let far_point = second_intersection_on(&circle, &cfg.vertex_c, &bisector_direction());
        Figure { cfg, foot, circle, far_point }
    }

    /// Far triangle `ABE` equilateral and `CE = CA + CB`.
    pub fn verify_eq2_eq4(&self) -> bool {
        let (cfg, e) = (&self.cfg, &self.far_point);
        let ab2 = cfg.ab_squared();
        let equilateral = e.dist2(&cfg.vertex_a) == ab2 && e.dist2(&cfg.vertex_b) == ab2;
        let on_ray = e.minus(&cfg.vertex_c).dot(&bisector_direction()).sign() > 0;
        let sum = &cfg.a + &cfg.b;
        let ce_is_sum = e.dist2(&cfg.vertex_c).as_rational() == Some(&sum.square());
        equilateral && on_ray && ce_is_sum
    }

    /// `CA·CB = CD·CE`, checked as `CA²·CB² = CD²·CE²`.
    pub fn verify_similarity_ratio(&self) -> bool {
        let c = &self.cfg.vertex_c;
        &self.cfg.vertex_a.dist2(c) * &self.cfg.vertex_b.dist2(c) == &self.foot.dist2(c) * &self.far_point.dist2(c)
    }

    /// `C, A, E, B` in cyclic order around the circumcircle.
    pub fn quadrilateral(&self) -> [&Point; 4] {
        [&self.cfg.vertex_c, &self.cfg.vertex_a, &self.far_point, &self.cfg.vertex_b]
    }

    pub fn verify_ptolemy(&self) -> Result<bool> {
        verify_ptolemy(&self.circle, self.quadrilateral())
    }
}

pub fn verify_eq2_eq4(cfg: &TriangleConfig) -> bool {
    Figure::new(cfg.clone()).verify_eq2_eq4()
}

pub fn verify_similarity_ratio(cfg: &TriangleConfig) -> bool {
    Figure::new(cfg.clone()).verify_similarity_ratio()
}

/// `C, A, E, B` in cyclic order around the circumcircle.
pub fn cyclic_quadrilateral(cfg: &TriangleConfig) -> [Point; 4] {
    let fig = Figure::new(cfg.clone());
    fig.quadrilateral().map(Clone::clone)
}

/// Ptolemy's identity `p1p3·p2p4 = p1p2·p3p4 + p2p3·p4p1` for four points
/// on `circle` listed in cyclic order.
pub fn verify_ptolemy(circle: &Circle, points: [&Point; 4]) -> Result<bool> {
    for (i, p) in points.iter().enumerate() {
        if !circle.contains(p) {
            return Err(Error::NotConcyclic(i));
        }
    }
    let turn = |i: usize| orientation(points[i % 4], points[(i + 1) % 4], points[(i + 2) % 4]);
    let first = turn(0);
    if first == 0 || (1..4).any(|i| turn(i) != first) {
        return Err(Error::Order);
    }
    let d2 = |i: usize, j: usize| points[i].dist2(points[j]);
    let x2 = &d2(0, 2) * &d2(1, 3);
    let y2 = &d2(0, 1) * &d2(2, 3);
    let z2 = &d2(1, 2) * &d2(3, 0);
    let diff = &(&x2 - &y2) - &z2;
    let four_y2z2 = &QSqrt3::from(4) * &(&y2 * &z2);
    Ok(diff.square() == four_y2z2 && diff.sign() >= 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    fn cfg(a: i64, b: i64) -> TriangleConfig {
        build_triangle(q(a, 1), q(b, 1)).unwrap()
    }

    #[test]
    fn ab_squared_examples() {
        assert_eq!(cfg(1, 1).ab_squared(), QSqrt3::from(3));
        assert_eq!(cfg(3, 5).ab_squared(), QSqrt3::from(49));
        assert_eq!(cfg(24, 40).ab_squared(), QSqrt3::from(3136));
        assert!(build_triangle(q(0, 1), q(1, 1)).is_err());
        assert!(build_triangle(q(1, 1), q(-1, 2)).is_err());
    }

    #[test]
    fn foot_examples() {
        let c = cfg(1, 1);
        let d = bisector_foot(&c);
        assert_eq!(d, Point::new(QSqrt3::from_rational(q(1, 4)), QSqrt3::new(Rational::zero(), q(1, 4))));
        assert_eq!(d.dist2(&c.vertex_c), QSqrt3::from_rational(q(1, 4)));
        assert_eq!(bisector_foot(&cfg(3, 5)).dist2(&Point::origin()), QSqrt3::from_rational(q(225, 64)));
        assert_eq!(bisector_foot(&cfg(24, 40)).dist2(&Point::origin()), QSqrt3::from(225));
    }

    #[test]
    fn prop1_examples() {
        assert_eq!(verify_prop1(q(1, 1), q(1, 1)), Ok(true));
        assert_eq!(verify_prop1(q(3, 1), q(5, 1)), Ok(true));
        assert_eq!(verify_prop1(q(7, 1), q(8, 1)), Ok(true));
        assert_eq!(verify_prop1(q(2, 3), q(17, 5)), Ok(true));
        assert!(verify_prop1(q(0, 1), q(8, 1)).is_err());
    }

    #[test]
    fn circumcircle_passes_through_vertices() {
        for (a, b) in [(1, 1), (3, 5), (24, 40)] {
            let c = cfg(a, b);
            let circle = circumcircle(&c);
            for v in [&c.vertex_a, &c.vertex_b, &c.vertex_c] {
                assert_eq!(circle.center.dist2(v), circle.radius_squared);
            }
            assert!(circle.radius_squared.sign() > 0);
        }
    }

    #[test]
    fn second_intersection_examples() {
        let c = cfg(1, 1);
        let e = second_intersection(&c);
        // CE = a + b = 2 along (1/2, √3/2)
        assert_eq!(e, Point::new(QSqrt3::from(1), QSqrt3::sqrt3()));
        for (a, b) in [(3, 5), (24, 40)] {
            let c = cfg(a, b);
            let e = second_intersection(&c);
            assert!(circumcircle(&c).contains(&e));
            assert_ne!(e, c.vertex_c);
            assert_eq!(orientation(&c.vertex_c, &bisector_foot(&c), &e), 0);
        }
    }

    #[test]
    fn eq2_eq4_examples() {
        for (a, b, ce2) in [(1, 1, 4), (3, 5, 64), (105, 120, 50625)] {
            let c = cfg(a, b);
            assert!(verify_eq2_eq4(&c));
            assert_eq!(second_intersection(&c).dist2(&c.vertex_c), QSqrt3::from(ce2));
            assert!(verify_similarity_ratio(&c));
        }
    }

    #[test]
    fn ptolemy_on_triangle_quadrilaterals() {
        for (a, b) in [(1, 1), (3, 5), (7, 8)] {
            let c = cfg(a, b);
            let circle = circumcircle(&c);
            let [p1, p2, p3, p4] = cyclic_quadrilateral(&c);
            assert_eq!(verify_ptolemy(&circle, [&p1, &p2, &p3, &p4]), Ok(true));
            // any rotation or reversal is still a cyclic order
            assert_eq!(verify_ptolemy(&circle, [&p2, &p3, &p4, &p1]), Ok(true));
            assert_eq!(verify_ptolemy(&circle, [&p4, &p3, &p2, &p1]), Ok(true));
        }
    }

    #[test]
    fn ptolemy_inscribed_square() {
        let pts = [(1, 0), (0, 1), (-1, 0), (0, -1)].map(|(x, y)| Point::rational(q(x, 1), q(y, 1)));
        let circle = Circle::through(&pts[0], &pts[1], &pts[2]).unwrap();
        assert_eq!(circle.radius_squared, QSqrt3::from(1));
        assert_eq!(verify_ptolemy(&circle, [&pts[0], &pts[1], &pts[2], &pts[3]]), Ok(true));
    }

    #[test]
    fn ptolemy_negative_controls() {
        let c = cfg(3, 5);
        let circle = circumcircle(&c);
        let [p1, p2, p3, p4] = cyclic_quadrilateral(&c);
        let mut off = p3.clone();
        off.x = &off.x + &QSqrt3::one();
        assert_eq!(verify_ptolemy(&circle, [&p1, &p2, &off, &p4]), Err(Error::NotConcyclic(2)));
        assert_eq!(verify_ptolemy(&circle, [&p1, &p3, &p2, &p4]), Err(Error::Order));
        assert_eq!(verify_ptolemy(&circle, [&p1, &p1, &p2, &p4]), Err(Error::Order));
    }

    #[test]
    fn collinear_circle_rejected() {
        let pts = [(0, 0), (1, 1), (2, 2)].map(|(x, y)| Point::rational(q(x, 1), q(y, 1)));
        assert!(Circle::through(&pts[0], &pts[1], &pts[2]).is_err());
    }
}
