"""Scene description: plain-text format, parsing, and seeded generation.

The format is line oriented (directive followed by numbers), so golden
files stay diff-able and any language can parse it:

    camera ox oy oz  lx ly lz  ux uy uz  vfov width height
    sphere cx cy cz r
    ellipsoid cx cy cz a b c
    hyperboloid1 cx cy cz a b c
    hparaboloid cx cy cz a b
    quadric a11 a22 a33 a44 a12 a13 a23 a14 a24 a34
    xform r11 r12 r13 r21 r22 r23 r31 r32 r33

`xform` is an optional continuation line giving the row-major object-to-world
rotation of the preceding object; `quadric` coefficients are world frame
unless an xform follows.  Blank lines and lines starting with '#' are
ignored.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .geometry import Mat3, Vec3, compose, rotation, translation
from .quadric import (
    Ellipsoid,
    General,
    HyperbolicParaboloid,
    OneSheetHyperboloid,
    QuadricKind,
    QuadricMatrix,
    Sphere,
    transform,
)
from .rng import Xorshift64Star

__all__ = [
    "Camera",
    "SceneObject",
    "Scene",
    "SceneParseError",
    "parse_scene",
    "serialize_scene",
    "generate_scene",
    "ROTATION_TOL",
    "DEFAULT_KIND_MIX",
]

ROTATION_TOL = 1e-8
DEFAULT_KIND_MIX = ("sphere", "ellipsoid")

_GENERATED_CAMERA_TAIL = (60.0, 256, 256)  # vfov, width, height
_GENERATED_CAMERA_ORIGIN = Vec3(0.0, 0.0, 30.0)


class SceneParseError(ValueError):
    """Malformed scene text; carries the 1-based source line number."""

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Camera:
    origin: Vec3
    look_at: Vec3
    up: Vec3
    vfov_deg: float
    width: int
    height: int

    def __post_init__(self) -> None:
        if self.width < 1 or self.height < 1:
            raise ValueError("camera: width and height must be >= 1")
        if not (0.0 < self.vfov_deg < 180.0):
            raise ValueError("camera: vertical fov must be in (0, 180) degrees")
        if self.origin == self.look_at:
            raise ValueError("camera: origin equals look-at point")


@dataclass(frozen=True)
class SceneObject:
    """A quadric placed in the world: catalog kind or raw coefficients.

    For catalog kinds the world matrix is T^T Q0 T with T mapping world
    coordinates into the fundamental frame: x0 = R^T (x - center).
    """

    kind: QuadricKind
    center: Vec3 = field(default_factory=lambda: Vec3(0.0, 0.0, 0.0))
    rot: Mat3 | None = None

    def world_matrix(self) -> QuadricMatrix:
        t = translation(self.center)
        if self.rot is not None:
            t = compose(rotation(self.rot.transposed()), t)
        return transform(self.kind.matrix(), t)


@dataclass(frozen=True)
class Scene:
    camera: Camera
    objects: tuple[SceneObject, ...]

    def __post_init__(self) -> None:
        if not self.objects:
            raise ValueError("scene: needs at least one object")


_OBJECT_ARITY = {"sphere": 4, "ellipsoid": 6, "hyperboloid1": 6, "hparaboloid": 5, "quadric": 10}


def _floats(parts: list[str], line: int) -> list[float]:
    out = []
    for p in parts:
        try:
            out.append(float(p))
        except ValueError:
            raise SceneParseError(line, f"malformed number {p!r}") from None
    return out


def _check_rotation(m: Mat3, line: int) -> None:
    # R^T R must be the identity within ROTATION_TOL, det within it of +1.
    rt = m.transposed()
    for i in range(3):
        for j in range(3):
            got = sum(rt.at(i, k) * m.at(k, j) for k in range(3))
            want = 1.0 if i == j else 0.0
            if abs(got - want) > ROTATION_TOL:
                raise SceneParseError(line, "xform rotation is not orthonormal")
    a = m.m
    det = (a[0] * (a[4] * a[8] - a[5] * a[7])
           - a[1] * (a[3] * a[8] - a[5] * a[6])
           + a[2] * (a[3] * a[7] - a[4] * a[6]))
    if abs(det - 1.0) > ROTATION_TOL:
        raise SceneParseError(line, "xform rotation determinant is not +1")


def _make_kind(directive: str, values: list[float], line: int) -> tuple[QuadricKind, Vec3]:
    try:
        if directive == "sphere":
            return Sphere(values[3]), Vec3(*values[:3])
        if directive == "ellipsoid":
            return Ellipsoid(*values[3:]), Vec3(*values[:3])
        if directive == "hyperboloid1":
            return OneSheetHyperboloid(*values[3:]), Vec3(*values[:3])
        if directive == "hparaboloid":
            return HyperbolicParaboloid(*values[3:]), Vec3(*values[:3])
        if directive == "quadric":
            return General(QuadricMatrix(*values)), Vec3(0.0, 0.0, 0.0)
    except ValueError as exc:
        raise SceneParseError(line, _describe_value_error(directive, exc)) from None
    raise SceneParseError(line, f"unknown directive {directive!r}")


def _describe_value_error(directive: str, exc: ValueError) -> str:
    msg = str(exc)
    if "non-positive" in msg:
        if directive == "sphere":
            return "non-positive radius"
        return "non-positive shape parameter"
    return msg


def parse_scene(text: str) -> Scene:
    """Parse and validate; any defect raises SceneParseError with a line number."""
    camera: Camera | None = None
    objects: list[SceneObject] = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        directive, args = parts[0], parts[1:]

        if directive == "camera":
            if camera is not None:
                raise SceneParseError(line_no, "duplicate camera")
            if len(args) != 12:
                raise SceneParseError(line_no, f"camera needs 12 numbers, got {len(args)}")
            vals = _floats(args[:10], line_no)
            for dim in args[10:]:
                if not dim.lstrip("+-").isdigit():
                    raise SceneParseError(line_no, f"malformed integer {dim!r}")
            width, height = int(args[10]), int(args[11])
            try:
                camera = Camera(
                    origin=Vec3(*vals[0:3]),
                    look_at=Vec3(*vals[3:6]),
                    up=Vec3(*vals[6:9]),
                    vfov_deg=vals[9],
                    width=width,
                    height=height,
                )
            except ValueError as exc:
                raise SceneParseError(line_no, str(exc)) from None
        elif directive == "xform":
            if not objects:
                raise SceneParseError(line_no, "xform with no preceding object")
            if objects[-1].rot is not None:
                raise SceneParseError(line_no, "object already has an xform")
            if len(args) != 9:
                raise SceneParseError(line_no, f"xform needs 9 numbers, got {len(args)}")
            rot = Mat3(tuple(_floats(args, line_no)))
            _check_rotation(rot, line_no)
            prev = objects[-1]
            objects[-1] = SceneObject(kind=prev.kind, center=prev.center, rot=rot)
        elif directive in _OBJECT_ARITY:
            arity = _OBJECT_ARITY[directive]
            if len(args) != arity:
                raise SceneParseError(
                    line_no, f"{directive} needs {arity} numbers, got {len(args)}"
                )
            values = _floats(args, line_no)
            kind, center = _make_kind(directive, values, line_no)
            objects.append(SceneObject(kind=kind, center=center))
        else:
            raise SceneParseError(line_no, f"unknown directive {directive!r}")

    if camera is None:
        raise SceneParseError(max(1, text.count("\n") + 1), "missing camera")
    if not objects:
        raise SceneParseError(max(1, text.count("\n") + 1), "scene has no objects")
    return Scene(camera=camera, objects=tuple(objects))


def _fmt(values: tuple[float, ...] | list[float]) -> str:
    return " ".join(repr(float(v)) for v in values)


def serialize_scene(scene: Scene) -> str:
    """Canonical text form; floats use shortest round-trip representation."""
    cam = scene.camera
    lines = [
        "camera "
        + _fmt(cam.origin.as_tuple() + cam.look_at.as_tuple() + cam.up.as_tuple() + (cam.vfov_deg,))
        + f" {cam.width} {cam.height}"
    ]
    for obj in scene.objects:
        k = obj.kind
        c = obj.center.as_tuple()
        if isinstance(k, Sphere):
            lines.append("sphere " + _fmt(c + (k.r,)))
        elif isinstance(k, Ellipsoid):
            lines.append("ellipsoid " + _fmt(c + (k.a, k.b, k.c)))
        elif isinstance(k, OneSheetHyperboloid):
            lines.append("hyperboloid1 " + _fmt(c + (k.a, k.b, k.c)))
        elif isinstance(k, HyperbolicParaboloid):
            lines.append("hparaboloid " + _fmt(c + (k.a, k.b)))
        elif isinstance(k, General):
            lines.append("quadric " + _fmt(k.q.coefficients()))
        else:  # pragma: no cover - union is closed
            raise TypeError(f"unserializable kind {k!r}")
        if obj.rot is not None:
            lines.append("xform " + _fmt(obj.rot.m))
    return "\n".join(lines) + "\n"


def generate_scene(
    seed: int, n_objects: int, kind_mix: tuple[str, ...] = DEFAULT_KIND_MIX
) -> Scene:
    """Deterministic random scene from the documented xorshift64* stream.

    Draw order per object: one kind selector (only when the mix has more
    than one entry), then center x, y, z uniform in [-10, 10], then the
    shape parameters uniform in [0.1, 2] in directive order.  The camera is
    fixed at (0, 0, 30) looking at the origin, up +y, vfov 60, 256x256.
    """
    if n_objects < 1:
        raise ValueError("generate_scene: need at least one object")
    for kind in kind_mix:
        if kind not in ("sphere", "ellipsoid", "hyperboloid1", "hparaboloid"):
            raise ValueError(f"generate_scene: unknown kind {kind!r} in mix")
    if not kind_mix:
        raise ValueError("generate_scene: empty kind mix")

    rng = Xorshift64Star(seed)
    objects: list[SceneObject] = []
    for _ in range(n_objects):
        name = kind_mix[rng.int_below(len(kind_mix))] if len(kind_mix) > 1 else kind_mix[0]
        center = Vec3(rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0))
        if name == "sphere":
            kind: QuadricKind = Sphere(rng.uniform(0.1, 2.0))
        elif name == "ellipsoid":
            kind = Ellipsoid(rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0))
        elif name == "hyperboloid1":
            kind = OneSheetHyperboloid(
                rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0)
            )
        else:
            kind = HyperbolicParaboloid(rng.uniform(0.1, 2.0), rng.uniform(0.1, 2.0))
        objects.append(SceneObject(kind=kind, center=center))

    vfov, width, height = _GENERATED_CAMERA_TAIL
    camera = Camera(
        origin=_GENERATED_CAMERA_ORIGIN,
        look_at=Vec3(0.0, 0.0, 0.0),
        up=Vec3(0.0, 1.0, 0.0),
        vfov_deg=vfov,
        width=width,
        height=height,
    )
    return Scene(camera=camera, objects=tuple(objects))
