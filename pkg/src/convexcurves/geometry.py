"""Planar primitives and the collinearity predicates shared by every solver.

Collinearity of point triples is decided on the signed area with an absolute
residual tolerance; parallelism of direction pairs is decided on the
normalized cross product with an angle tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import DegenerateInput, ZeroVector


class Orientation(Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


@dataclass(frozen=True)
class Vector:
    dx: float
    dy: float

    def __post_init__(self):
        if not (math.isfinite(self.dx) and math.isfinite(self.dy)):
            raise ValueError(f"non-finite vector ({self.dx}, {self.dy})")

    def __iter__(self):
        yield self.dx
        yield self.dy

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(self.dx + other.dx, self.dy + other.dy)

    def __sub__(self, other: "Vector") -> "Vector":
        return Vector(self.dx - other.dx, self.dy - other.dy)

    def __neg__(self) -> "Vector":
        return Vector(-self.dx, -self.dy)

    def __mul__(self, s: float) -> "Vector":
        return Vector(self.dx * s, self.dy * s)

    __rmul__ = __mul__

    def cross(self, other: "Vector") -> float:
        return self.dx * other.dy - self.dy * other.dx

    def dot(self, other: "Vector") -> float:
        return self.dx * other.dx + self.dy * other.dy

    def norm(self) -> float:
        return math.hypot(self.dx, self.dy)


@dataclass(frozen=True)
class Point:
    x: float
    y: float

    def __post_init__(self):
        if not (math.isfinite(self.x) and math.isfinite(self.y)):
            raise ValueError(f"non-finite point ({self.x}, {self.y})")

    def __iter__(self):
        yield self.x
        yield self.y

    def __add__(self, v: Vector) -> "Point":
        return Point(self.x + v.dx, self.y + v.dy)

    def __sub__(self, other):
        if isinstance(other, Vector):
            return Point(self.x - other.dx, self.y - other.dy)
        return Vector(self.x - other.x, self.y - other.y)


def dist(p: Point, q: Point) -> float:
    return math.hypot(p.x - q.x, p.y - q.y)


@dataclass(frozen=True)
class TolerancePolicy:
    """Numeric knobs used uniformly across the kernel.

    residual_tol  boundary-membership residual
    cluster_tol   deduplication radius for solutions (kept ~3 orders above
                  residual_tol so solver noise never splits one solution)
    angle_tol     normalized cross-product threshold for parallelism
    max_iter      iteration budget for 1D refinements
    """

    residual_tol: float = 1e-9
    cluster_tol: float = 1e-6
    angle_tol: float = 1e-9
    max_iter: int = 128

    def __post_init__(self):
        if min(self.residual_tol, self.cluster_tol, self.angle_tol) <= 0.0:
            raise ValueError("tolerances must be strictly positive")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")


DEFAULT_TOL = TolerancePolicy()


def orientation(p: Point, q: Point, r: Point, tol: TolerancePolicy = DEFAULT_TOL) -> Orientation:
    """Sign of the signed area of triangle pqr (Left = counterclockwise)."""
    area2 = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if abs(area2) <= tol.residual_tol:
        return Orientation.COLLINEAR
    return Orientation.LEFT if area2 > 0.0 else Orientation.RIGHT


def parallel(u: Vector, w: Vector, tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """True iff |u x w| <= angle_tol * |u| * |w|."""
    nu, nw = u.norm(), w.norm()
    if nu <= tol.residual_tol or nw <= tol.residual_tol:
        raise ZeroVector("parallel() requires nonzero vectors")
    return abs(u.cross(w)) <= tol.angle_tol * nu * nw


def translate_collinearity(x: Point, y: Point, z: Point, v: Vector,
                           tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Necessary condition for x, y, z, x+v, y+v, z+v to lie on one convex curve.

    Holds iff some pair among the four vectors (x-y), (x-z), (y-z), v is
    parallel. All six pairs are checked.
    """
    if min(dist(x, y), dist(x, z), dist(y, z)) <= tol.cluster_tol:
        raise DegenerateInput("points must be pairwise distinct")
    if v.norm() <= tol.residual_tol:
        raise ZeroVector("translation vector is numerically zero")
    vecs = [x - y, x - z, y - z, v]
    for i in range(4):
        for j in range(i + 1, 4):
            if parallel(vecs[i], vecs[j], tol):
                return True
    return False


def homothety_collinearity(x: Point, y: Point, z: Point,
                           tol: TolerancePolicy = DEFAULT_TOL) -> bool:
    """Necessary condition for x, y, z, t*x, t*y, t*z (t != 1) on one convex curve.

    The homothety center must already be translated to the origin by the
    caller. Holds iff one of the triples (x, y, 0), (x, z, 0), (y, z, 0),
    (x, y, z) is collinear.
    """
    if min(dist(x, y), dist(x, z), dist(y, z)) <= tol.cluster_tol:
        raise DegenerateInput("points must be pairwise distinct")
    o = Point(0.0, 0.0)
    triples = [(x, y, o), (x, z, o), (y, z, o), (x, y, z)]
    return any(orientation(a, b, c, tol) is Orientation.COLLINEAR for a, b, c in triples)
