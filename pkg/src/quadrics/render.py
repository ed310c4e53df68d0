"""Detection-image rendering: one primary ray per pixel, binary PGM output.

A pixel is lit when some object is crossed at a positive line parameter.
Ray directions are left unnormalized as forward + u*right + v*up, so t = 1
is the image plane; the shade of a hit at parameter t is

    value = max(1, round(255 / max(t, 1)))

which keeps every hit nonzero and darkens with distance.  Misses are 0.
Pixels are computed independently, so output bytes are identical for any
worker count.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import BinaryIO

from .classical import Miss, hit_parameters, intersect_classical
from .geometry import HomogeneousDirection, HomogeneousPoint, Vec3, cross
from .quadric import QuadricMatrix
from .scene import Scene
from .separated import intersect_separated, make_ray_cache

__all__ = ["Image", "render_detection", "write_pgm", "pgm_bytes"]

METHODS = ("classical", "separated")


@dataclass(frozen=True)
class Image:
    width: int
    height: int
    pixels: bytes  # row-major, one byte per pixel

    def at(self, col: int, row: int) -> int:
        return self.pixels[row * self.width + col]


@dataclass(frozen=True)
class _CameraFrame:
    origin: Vec3
    forward: Vec3
    right: Vec3
    up: Vec3
    half_w: float
    half_h: float
    width: int
    height: int

    def ray_direction(self, col: int, row: int) -> Vec3:
        u = ((col + 0.5) / self.width * 2.0 - 1.0) * self.half_w
        v = (1.0 - (row + 0.5) / self.height * 2.0) * self.half_h
        return self.forward + u * self.right + v * self.up


def _camera_frame(scene: Scene) -> _CameraFrame:
    cam = scene.camera
    forward = (cam.look_at - cam.origin).normalized()
    side = cross(forward, cam.up)
    if side.norm_sq() == 0.0:
        raise ValueError("camera: up vector is parallel to the view direction")
    right = side.normalized()
    up = cross(right, forward)
    half_h = math.tan(math.radians(cam.vfov_deg) * 0.5)
    half_w = half_h * (cam.width / cam.height)
    return _CameraFrame(
        origin=cam.origin,
        forward=forward,
        right=right,
        up=up,
        half_w=half_w,
        half_h=half_h,
        width=cam.width,
        height=cam.height,
    )


def _pixel_value(t_nearest: float | None) -> int:
    if t_nearest is None:
        return 0
    return max(1, min(255, int(255.0 / max(t_nearest, 1.0) + 0.5)))


def _render_rows(
    scene: Scene, method: str, matrices: list[QuadricMatrix], row_start: int, row_end: int
) -> bytes:
    frame = _camera_frame(scene)
    origin = HomogeneousPoint.from_euclidean(frame.origin)
    out = bytearray()
    for row in range(row_start, row_end):
        for col in range(frame.width):
            d = frame.ray_direction(col, row)
            direction = HomogeneousDirection.from_euclidean(d)
            cache = make_ray_cache(origin, direction) if method == "separated" else None
            t_nearest: float | None = None
            for q in matrices:
                if cache is not None:
                    result = intersect_separated(q, cache)
                else:
                    result = intersect_classical(q, origin, direction)
                if isinstance(result, Miss):
                    continue
                for t in hit_parameters(result):
                    if t > 0.0 and (t_nearest is None or t < t_nearest):
                        t_nearest = t
            out.append(_pixel_value(t_nearest))
    return bytes(out)


def _render_chunk(args: tuple[Scene, str, list[QuadricMatrix], int, int]) -> bytes:
    return _render_rows(*args)


def render_detection(scene: Scene, method: str = "separated", workers: int = 1) -> Image:
    """Trace one primary ray per pixel against every object."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    matrices = [obj.world_matrix() for obj in scene.objects]
    height, width = scene.camera.height, scene.camera.width

    if workers == 1:
        pixels = _render_rows(scene, method, matrices, 0, height)
        return Image(width=width, height=height, pixels=pixels)

    rows_per_chunk = max(1, -(-height // workers))
    chunks = []
    start = 0
    while start < height:
        end = min(start + rows_per_chunk, height)
        chunks.append((scene, method, matrices, start, end))
        start = end
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_render_chunk, chunks))
    return Image(width=width, height=height, pixels=b"".join(parts))


def pgm_bytes(image: Image) -> bytes:
    """Binary PGM (P5, maxval 255)."""
    header = f"P5\n{image.width} {image.height}\n255\n".encode("ascii")
    return header + image.pixels


def write_pgm(image: Image, fp: BinaryIO) -> None:
    fp.write(pgm_bytes(image))
