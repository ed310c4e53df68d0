"""Symmetric 4x4 quadric-surface matrices.

A quadric surface is the zero set of x^T Q x for a symmetric 4x4 matrix Q.
Only the 10 independent coefficients are stored, so every materialized
matrix is symmetric by construction.  Includes the catalog of surfaces in
fundamental (centered, axis-aligned) position and the rigid-transform
pipeline Q = T^T Q0 T that places them in the world frame.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, Union

from .geometry import HomogeneousPoint, Mat4, compose, transpose

__all__ = [
    "QuadricMatrix",
    "COEFFICIENT_ORDER",
    "sphere",
    "ellipsoid",
    "one_sheet_hyperboloid",
    "hyperbolic_paraboloid",
    "evaluate",
    "quadratic_form",
    "bilinear_form",
    "apply",
    "transform",
    "to_text",
    "from_text",
    "Sphere",
    "Ellipsoid",
    "OneSheetHyperboloid",
    "HyperbolicParaboloid",
    "General",
    "QuadricKind",
]

# Serialization order for the 10 coefficients (used by the scene format).
COEFFICIENT_ORDER = ("a11", "a22", "a33", "a44", "a12", "a13", "a23", "a14", "a24", "a34")


@dataclass(frozen=True, slots=True)
class QuadricMatrix:
    """The 10 independent coefficients of a symmetric 4x4 matrix.

    a11..a44 are the diagonal (a44 carries squared-length units, e.g. -r^2),
    a12/a13/a23 the quadratic cross terms, a14/a24/a34 the linear terms.
    """

    a11: float
    a22: float
    a33: float
    a44: float
    a12: float = 0.0
    a13: float = 0.0
    a23: float = 0.0
    a14: float = 0.0
    a24: float = 0.0
    a34: float = 0.0

    def __post_init__(self) -> None:
        cs = self.coefficients()
        for c in cs:
            if not math.isfinite(c):
                raise ValueError(f"QuadricMatrix: non-finite coefficient {c!r}")
        if all(c == 0.0 for c in cs):
            raise ValueError("QuadricMatrix: all coefficients zero")

    def coefficients(self) -> tuple[float, ...]:
        """Coefficients in the documented serialization order."""
        return (self.a11, self.a22, self.a33, self.a44,
                self.a12, self.a13, self.a23,
                self.a14, self.a24, self.a34)

    def max_abs_coefficient(self) -> float:
        return max(abs(c) for c in self.coefficients())

    def to_mat4(self) -> Mat4:
        return Mat4(
            (self.a11, self.a12, self.a13, self.a14,
             self.a12, self.a22, self.a23, self.a24,
             self.a13, self.a23, self.a33, self.a34,
             self.a14, self.a24, self.a34, self.a44)
        )


def quadratic_form(q: QuadricMatrix, v: Sequence[float]) -> float:
    """v^T Q v through the 10-coefficient expansion with factor-2 cross terms."""
    x, y, z, w = v
    return (
        q.a11 * x * x + q.a22 * y * y + q.a33 * z * z + q.a44 * w * w
        + 2.0 * (q.a12 * x * y + q.a13 * x * z + q.a23 * y * z
                 + q.a14 * x * w + q.a24 * y * w + q.a34 * z * w)
    )


def bilinear_form(q: QuadricMatrix, u: Sequence[float], v: Sequence[float]) -> float:
    """u^T Q v (symmetric in u, v)."""
    ux, uy, uz, uw = u
    vx, vy, vz, vw = v
    return (
        q.a11 * ux * vx + q.a22 * uy * vy + q.a33 * uz * vz + q.a44 * uw * vw
        + q.a12 * (ux * vy + uy * vx)
        + q.a13 * (ux * vz + uz * vx)
        + q.a23 * (uy * vz + uz * vy)
        + q.a14 * (ux * vw + uw * vx)
        + q.a24 * (uy * vw + uw * vy)
        + q.a34 * (uz * vw + uw * vz)
    )


def apply(q: QuadricMatrix, v: Sequence[float]) -> tuple[float, float, float, float]:
    """Q . v for a length-4 vector."""
    x, y, z, w = v
    return (
        q.a11 * x + q.a12 * y + q.a13 * z + q.a14 * w,
        q.a12 * x + q.a22 * y + q.a23 * z + q.a24 * w,
        q.a13 * x + q.a23 * y + q.a33 * z + q.a34 * w,
        q.a14 * x + q.a24 * y + q.a34 * z + q.a44 * w,
    )


def evaluate(q: QuadricMatrix, x: HomogeneousPoint) -> float:
    """x^T Q x; zero (within tolerance) exactly when x lies on the surface."""
    return quadratic_form(q, x.as_tuple())


def sphere(radius: float) -> QuadricMatrix:
    """Sphere of the given radius in fundamental position: diag(1, 1, 1, -r^2)."""
    if not radius > 0.0:
        raise ValueError(f"sphere: non-positive radius {radius!r}")
    return QuadricMatrix(1.0, 1.0, 1.0, -(radius * radius))


def ellipsoid(a: float, b: float, c: float) -> QuadricMatrix:
    """Axis-aligned ellipsoid x^2/a^2 + y^2/b^2 + z^2/c^2 - 1 = 0."""
    if not (a > 0.0 and b > 0.0 and c > 0.0):
        raise ValueError(f"ellipsoid: non-positive semi-axis in {(a, b, c)!r}")
    return QuadricMatrix(1.0 / (a * a), 1.0 / (b * b), 1.0 / (c * c), -1.0)


def one_sheet_hyperboloid(a: float, b: float, c: float) -> QuadricMatrix:
    """One-sheet hyperboloid x^2/a^2 + y^2/b^2 - z^2/c^2 - 1 = 0."""
    if not (a > 0.0 and b > 0.0 and c > 0.0):
        raise ValueError(f"one_sheet_hyperboloid: non-positive semi-axis in {(a, b, c)!r}")
    return QuadricMatrix(1.0 / (a * a), 1.0 / (b * b), -1.0 / (c * c), -1.0)


def hyperbolic_paraboloid(a: float, b: float) -> QuadricMatrix:
    """Hyperbolic paraboloid x^2/a^2 - y^2/b^2 - 2z = 0; not diagonal (a34 = -1)."""
    if not (a > 0.0 and b > 0.0):
        raise ValueError(f"hyperbolic_paraboloid: non-positive semi-axis in {(a, b)!r}")
    return QuadricMatrix(1.0 / (a * a), -1.0 / (b * b), 0.0, 0.0, a34=-1.0)


def transform(q0: QuadricMatrix, t: Mat4) -> QuadricMatrix:
    """T^T Q0 T for a rigid transform T, re-symmetrized into coefficient form.

    The floating-point product can be asymmetric in the last ulp; averaging
    the (i, j)/(j, i) entries absorbs that so downstream algebra can keep
    relying on exact symmetry.
    """
    p = compose(transpose(t), compose(q0.to_mat4(), t))

    def avg(i: int, j: int) -> float:
        return 0.5 * (p.at(i, j) + p.at(j, i))

    return QuadricMatrix(
        a11=p.at(0, 0), a22=p.at(1, 1), a33=p.at(2, 2), a44=p.at(3, 3),
        a12=avg(0, 1), a13=avg(0, 2), a23=avg(1, 2),
        a14=avg(0, 3), a24=avg(1, 3), a34=avg(2, 3),
    )


def to_text(q: QuadricMatrix) -> str:
    """10 whitespace-separated decimals in the documented coefficient order."""
    return " ".join(repr(float(c)) for c in q.coefficients())


def from_text(text: str) -> QuadricMatrix:
    parts = text.split()
    if len(parts) != 10:
        raise ValueError(f"quadric text needs 10 numbers, got {len(parts)}")
    values = [float(p) for p in parts]
    return QuadricMatrix(*values)


# Catalog tags for scene objects.  Shape parameters are validated here so a
# malformed scene fails at parse time, not in the kernels.

@dataclass(frozen=True, slots=True)
class Sphere:
    r: float

    def __post_init__(self) -> None:
        if not self.r > 0.0:
            raise ValueError(f"sphere: non-positive radius {self.r!r}")

    def matrix(self) -> QuadricMatrix:
        return sphere(self.r)


@dataclass(frozen=True, slots=True)
class Ellipsoid:
    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.b > 0.0 and self.c > 0.0):
            raise ValueError(f"ellipsoid: non-positive semi-axis in {(self.a, self.b, self.c)!r}")

    def matrix(self) -> QuadricMatrix:
        return ellipsoid(self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class OneSheetHyperboloid:
    a: float
    b: float
    c: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.b > 0.0 and self.c > 0.0):
            raise ValueError(
                f"one_sheet_hyperboloid: non-positive semi-axis in {(self.a, self.b, self.c)!r}"
            )

    def matrix(self) -> QuadricMatrix:
        return one_sheet_hyperboloid(self.a, self.b, self.c)


@dataclass(frozen=True, slots=True)
class HyperbolicParaboloid:
    a: float
    b: float

    def __post_init__(self) -> None:
        if not (self.a > 0.0 and self.b > 0.0):
            raise ValueError(f"hyperbolic_paraboloid: non-positive semi-axis in {(self.a, self.b)!r}")

    def matrix(self) -> QuadricMatrix:
        return hyperbolic_paraboloid(self.a, self.b)


@dataclass(frozen=True, slots=True)
class General:
    """Raw 10-coefficient quadric; never classified back into a named kind."""

    q: QuadricMatrix

    def matrix(self) -> QuadricMatrix:
        return self.q


QuadricKind = Union[Sphere, Ellipsoid, OneSheetHyperboloid, HyperbolicParaboloid, General]
