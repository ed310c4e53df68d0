"""Line-quadric intersection with the line's contribution factored out.

The discriminant of the intersection quadratic factors as

    b^2 - a*c = s^T Q^T R Q x_A,      R = x_A (x) s - s (x) x_A,

where (x) is the outer product, so R is an antisymmetric 4x4 matrix that
depends only on the line.  Building R (and a few derived quantities) once
per ray moves work out of the per-surface loop; for spheres the per-surface
cost collapses further to a cross product and two dot products.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .classical import (
    TANGENT_EPS,
    IntersectionResult,
    Miss,
    _a_scale,
    coefficients,
    solve,
)
from .geometry import HomogeneousDirection, HomogeneousPoint, Mat4, Vec3, cross
from .quadric import QuadricMatrix, apply

__all__ = [
    "RMatrix",
    "RayCache",
    "EndpointMatrix",
    "make_ray_cache",
    "r_from_point_dir",
    "r_from_two_points",
    "r_from_subdeterminants",
    "discriminant_separated",
    "sphere_discriminant",
    "sphere_discriminant_projective",
    "detect_separated",
    "intersect_separated",
]


@dataclass(frozen=True, slots=True)
class RMatrix:
    """Six independent entries of an antisymmetric 4x4 line matrix.

    Materialized form has a null diagonal and R = -R^T exactly, because the
    mirrored entries are the same stored floats negated.
    """

    r12: float
    r13: float
    r14: float
    r23: float
    r24: float
    r34: float

    def entries(self) -> tuple[float, float, float, float, float, float]:
        return (self.r12, self.r13, self.r14, self.r23, self.r24, self.r34)

    def to_mat4(self) -> Mat4:
        return Mat4(
            (0.0, self.r12, self.r13, self.r14,
             -self.r12, 0.0, self.r23, self.r24,
             -self.r13, -self.r23, 0.0, self.r34,
             -self.r14, -self.r24, -self.r34, 0.0)
        )


@dataclass(frozen=True, slots=True)
class EndpointMatrix:
    """2x4 matrix whose rows are two homogeneous points spanning a line."""

    row_a: tuple[float, float, float, float]
    row_b: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        for row in (self.row_a, self.row_b):
            if len(row) != 4:
                raise ValueError("EndpointMatrix rows must have 4 entries")
            for v in row:
                if not math.isfinite(v):
                    raise ValueError(f"EndpointMatrix: non-finite entry {v!r}")


def r_from_point_dir(point: HomogeneousPoint, direction: HomogeneousDirection) -> RMatrix:
    """R = x_A (x) s - s (x) x_A, i.e. r_ij = x_i*s_j - s_i*x_j."""
    x, y, z, w = point.as_tuple()
    sx, sy, sz, sw = direction.as_tuple()
    return RMatrix(
        r12=x * sy - sx * y,
        r13=x * sz - sx * z,
        r14=x * sw - sx * w,
        r23=y * sz - sy * z,
        r24=y * sw - sy * w,
        r34=z * sw - sz * w,
    )


def r_from_two_points(point_a: HomogeneousPoint, point_b: HomogeneousPoint) -> RMatrix:
    """Line matrix from two homogeneous points, with s = x_B - x_A componentwise.

    Shares the arithmetic of r_from_point_dir, so the two constructions agree
    entry for entry, exactly.
    """
    sx = point_b.x - point_a.x
    sy = point_b.y - point_a.y
    sz = point_b.z - point_a.z
    sw = point_b.w - point_a.w
    r = RMatrix(
        r12=point_a.x * sy - sx * point_a.y,
        r13=point_a.x * sz - sx * point_a.z,
        r14=point_a.x * sw - sx * point_a.w,
        r23=point_a.y * sz - sy * point_a.z,
        r24=point_a.y * sw - sy * point_a.w,
        r34=point_a.z * sw - sz * point_a.w,
    )
    if all(e == 0.0 for e in r.entries()):
        raise ValueError("degenerate line: points are projectively equal")
    return r


def r_from_subdeterminants(m: EndpointMatrix) -> RMatrix:
    """Line matrix from the 2x2 column sub-determinants of the endpoint matrix.

    det[col_i | col_j] = x_Ai*x_Bj - x_Bi*x_Aj equals the r_ij of
    r_from_two_points; the entries are produced through the identical
    expressions so the agreement is exact.
    """
    a, b = m.row_a, m.row_b
    entries = []
    for i, j in ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)):
        sj = b[j] - a[j]
        si = b[i] - a[i]
        entries.append(a[i] * sj - si * a[j])
    r = RMatrix(*entries)
    if all(e == 0.0 for e in r.entries()):
        raise ValueError("degenerate line: endpoint matrix is rank deficient")
    return r


@dataclass(frozen=True, slots=True)
class RayCache:
    """Everything about one line that the per-surface tests reuse.

    `moment` is dir3 x origin3, the line's moment vector: it is the
    cross-product vector behind the 3x3 block of R, and the sphere fast path
    turns it into dir3 x (origin3 - center) with a single subtraction.
    """

    point: HomogeneousPoint
    direction: HomogeneousDirection
    origin3: Vec3
    dir3: Vec3
    point_w: float
    dir_w: float
    moment: Vec3
    dir_norm_sq: float
    r: RMatrix


def make_ray_cache(point: HomogeneousPoint, direction: HomogeneousDirection) -> RayCache:
    """Precompute the per-line quantities; rejects directions with no spatial part."""
    dir3 = direction.xyz()
    if dir3.x == 0.0 and dir3.y == 0.0 and dir3.z == 0.0:
        raise ValueError("degenerate direction: spatial part is zero")
    origin3 = point.xyz()
    return RayCache(
        point=point,
        direction=direction,
        origin3=origin3,
        dir3=dir3,
        point_w=point.w,
        dir_w=direction.sw,
        moment=cross(dir3, origin3),
        dir_norm_sq=dir3.norm_sq(),
        r=r_from_point_dir(point, direction),
    )


def discriminant_separated(q: QuadricMatrix, cache: RayCache) -> float:
    """D = s^T Q^T R Q x_A as two matrix-vector products and a bilinear form.

    Q is symmetric, so Q^T s = Q s.  Equals b^2 - a*c of the classical route
    up to floating-point rounding.
    """
    u = apply(q, cache.direction.as_tuple())
    v = apply(q, cache.point.as_tuple())
    r = cache.r
    return (
        r.r12 * (u[0] * v[1] - u[1] * v[0])
        + r.r13 * (u[0] * v[2] - u[2] * v[0])
        + r.r14 * (u[0] * v[3] - u[3] * v[0])
        + r.r23 * (u[1] * v[2] - u[2] * v[1])
        + r.r24 * (u[1] * v[3] - u[3] * v[1])
        + r.r34 * (u[2] * v[3] - u[3] * v[2])
    )


def sphere_discriminant(center: Vec3, radius: float, cache: RayCache) -> float:
    """Discriminant against a sphere, reusing the cached per-line moment.

    With delta = origin3 - center, computes r^2*|dir|^2 - |dir x delta|^2,
    where dir x delta = moment - dir x center costs one cross product and a
    subtraction per sphere.  The Lagrange form is used instead of the
    equivalent triple-product chain dir . [(dir x delta) x delta + r^2*dir];
    both equal the classical b^2 - a*c for the translated sphere.
    """
    if not radius > 0.0:
        raise ValueError(f"sphere_discriminant: non-positive radius {radius!r}")
    if cache.point_w != 1.0 or cache.dir_w != 0.0:
        raise ValueError("sphere_discriminant needs a Euclidean ray (w_A = 1, s_w = 0)")
    m = cache.moment - cross(cache.dir3, center)
    return radius * radius * cache.dir_norm_sq - m.norm_sq()


def sphere_discriminant_projective(
    center: Vec3, radius: float, point: HomogeneousPoint, direction: HomogeneousDirection
) -> float:
    """Sphere discriminant straight from projective coordinates.

    Division-free by contract: no component is normalized by w anywhere in
    this path (audited in the tests).  Substituting the projective line into
    the sphere equation scaled by (w_A + s_w*t)^2 gives a quadratic with

        a' = |sig'|^2 - r^2*s_w^2      sig' = dir3 - s_w*center
        b' = sig'.delta - r^2*s_w*w_A  delta = origin3 - w_A*center
        c' = |delta|^2 - r^2*w_A^2

    and D' = b'^2 - a'*c', whose sign matches the Euclidean classification
    (for s_w = 0, D' = w_A^2 * D).
    """
    if not radius > 0.0:
        raise ValueError(f"sphere_discriminant_projective: non-positive radius {radius!r}")
    r_sq = radius * radius
    w_a = point.w
    s_w = direction.sw
    sig_x = direction.sx - s_w * center.x
    sig_y = direction.sy - s_w * center.y
    sig_z = direction.sz - s_w * center.z
    dx = point.x - w_a * center.x
    dy = point.y - w_a * center.y
    dz = point.z - w_a * center.z
    a = sig_x * sig_x + sig_y * sig_y + sig_z * sig_z - r_sq * (s_w * s_w)
    b = sig_x * dx + sig_y * dy + sig_z * dz - r_sq * (s_w * w_a)
    c = dx * dx + dy * dy + dz * dz - r_sq * (w_a * w_a)
    return b * b - a * c


def detect_separated(q: QuadricMatrix, cache: RayCache) -> bool:
    """Detection only: does the line meet the surface (sign of D)?"""
    return discriminant_separated(q, cache) >= 0.0


def intersect_separated(q: QuadricMatrix, cache: RayCache) -> IntersectionResult:
    """Full intersection driven by the separated discriminant.

    A clearly negative D rejects the pair before any coefficient work; only
    surviving pairs pay for a, b, c and root extraction.  The reported
    discriminant is the separated one.
    """
    d = discriminant_separated(q, cache)
    if d < -TANGENT_EPS:
        return Miss(d=d)
    coeffs = coefficients(q, cache.point, cache.direction)
    return solve(coeffs, a_scale=_a_scale(q, cache.direction), discriminant=d)
