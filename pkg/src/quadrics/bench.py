"""Deterministic detection benchmark: classical vs separated kernels.

Both methods answer the same question per (ray, object) pair: is the
discriminant nonnegative?  The classical kernel computes a, b, c from the
world-frame quadric every time; the separated kernel builds the per-ray
quantities once, then spends per object either the sphere fast path (one
cross product, a subtraction, two dot products and a multiply-add) or the
generic two matrix-vector products.  Detection loops run vectorized across
the objects of each ray, which is the data layout the separated form is
designed for.

The loop body feeds an order-independent checksum (XOR of a mix of per-ray
hit counts), which is printed in the CSV; identical checksums across
methods, runs, and worker counts are the determinism contract.  Timing
columns are wall-clock and naturally vary run to run; every other column is
byte-stable for a fixed seed.
"""
from __future__ import annotations

import statistics
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .quadric import Sphere
from .rng import Xorshift64Star, mix64
from .scene import Scene

__all__ = [
    "BenchStats",
    "CSV_HEADER",
    "RAY_SEED_SALT",
    "generate_rays",
    "run_benchmark",
    "to_csv",
]

CSV_HEADER = (
    "method,objects,rays,detections,hits,"
    "precompute_ns_total,detect_ns_total,detect_ns_per_test,checksum"
)

# XORed into the scene seed so the ray stream is decoupled from object draws.
RAY_SEED_SALT = 0x9E3779B97F4A7C15
_CHECKSUM_STRIDE = 0x9E3779B97F4A7C15

BENCH_METHODS = ("classical", "separated")


@dataclass(frozen=True)
class BenchStats:
    method: str
    objects: int
    rays: int
    detections: int
    hits: int
    precompute_ns_total: int
    detect_ns_total: int
    detect_ns_per_test: float
    checksum: int

    def __post_init__(self) -> None:
        if self.hits > self.detections:
            raise ValueError("hits cannot exceed detections")
        if min(self.precompute_ns_total, self.detect_ns_total) < 0:
            raise ValueError("times must be nonnegative")


def generate_rays(seed: int, count: int) -> tuple[np.ndarray, np.ndarray]:
    """Seeded ray batch: origins in [-10, 10]^3, directions in [-1, 1]^3.

    Stream seed is `seed XOR RAY_SEED_SALT`.  Per ray: three origin draws,
    then three direction draws, redrawing all three while the direction's
    squared length is below 1e-12.
    """
    if count < 1:
        raise ValueError("need at least one ray")
    rng = Xorshift64Star(seed ^ RAY_SEED_SALT)
    origins = np.empty((count, 3), dtype=np.float64)
    dirs = np.empty((count, 3), dtype=np.float64)
    for i in range(count):
        origins[i, 0] = rng.uniform(-10.0, 10.0)
        origins[i, 1] = rng.uniform(-10.0, 10.0)
        origins[i, 2] = rng.uniform(-10.0, 10.0)
        while True:
            dx = rng.uniform(-1.0, 1.0)
            dy = rng.uniform(-1.0, 1.0)
            dz = rng.uniform(-1.0, 1.0)
            if dx * dx + dy * dy + dz * dz >= 1e-12:
                break
        dirs[i, 0] = dx
        dirs[i, 1] = dy
        dirs[i, 2] = dz
    return origins, dirs


def _world_matrices(scene: Scene) -> np.ndarray:
    mats = np.empty((len(scene.objects), 4, 4), dtype=np.float64)
    for i, obj in enumerate(scene.objects):
        mats[i] = np.array(obj.world_matrix().to_mat4().m, dtype=np.float64).reshape(4, 4)
    return mats


def _sphere_split(scene: Scene) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(centers, r_squared, generic-object index array) for the separated path."""
    centers, r2, other = [], [], []
    for i, obj in enumerate(scene.objects):
        if isinstance(obj.kind, Sphere) and obj.rot is None:
            centers.append(obj.center.as_tuple())
            r2.append(obj.kind.r * obj.kind.r)
        else:
            other.append(i)
    return (
        np.array(centers, dtype=np.float64).reshape(-1, 3),
        np.array(r2, dtype=np.float64),
        np.array(other, dtype=np.intp),
    )


def _classical_hits(mats: np.ndarray, origin: np.ndarray, direction: np.ndarray) -> int:
    s4 = np.array([direction[0], direction[1], direction[2], 0.0])
    x4 = np.array([origin[0], origin[1], origin[2], 1.0])
    qs = mats @ s4
    qx = mats @ x4
    a = qs @ s4
    b = qs @ x4
    c = qx @ x4
    d = b * b - a * c
    return int(np.count_nonzero(d >= 0.0))


def _separated_hits(
    sphere_centers: np.ndarray,
    sphere_r2: np.ndarray,
    generic_mats: np.ndarray,
    origin: np.ndarray,
    direction: np.ndarray,
    moment: np.ndarray,
    dir_norm_sq: float,
) -> int:
    hits = 0
    if sphere_centers.shape[0]:
        m = moment - np.cross(direction, sphere_centers)
        d = sphere_r2 * dir_norm_sq - (m * m).sum(axis=1)
        hits += int(np.count_nonzero(d >= 0.0))
    if generic_mats.shape[0]:
        s4 = np.array([direction[0], direction[1], direction[2], 0.0])
        x4 = np.array([origin[0], origin[1], origin[2], 1.0])
        u = generic_mats @ s4
        v = generic_mats @ x4
        # R entries come straight from the precomputed per-ray moment.
        r12 = -moment[2]
        r13 = moment[1]
        r14 = -direction[0]
        r23 = -moment[0]
        r24 = -direction[1]
        r34 = -direction[2]
        d = (
            r12 * (u[:, 0] * v[:, 1] - u[:, 1] * v[:, 0])
            + r13 * (u[:, 0] * v[:, 2] - u[:, 2] * v[:, 0])
            + r14 * (u[:, 0] * v[:, 3] - u[:, 3] * v[:, 0])
            + r23 * (u[:, 1] * v[:, 2] - u[:, 2] * v[:, 1])
            + r24 * (u[:, 1] * v[:, 3] - u[:, 3] * v[:, 1])
            + r34 * (u[:, 2] * v[:, 3] - u[:, 3] * v[:, 2])
        )
        hits += int(np.count_nonzero(d >= 0.0))
    return hits


def _checksum_update(checksum: int, ray_index: int, ray_hits: int) -> int:
    return checksum ^ mix64(((ray_index + 1) * _CHECKSUM_STRIDE) ^ ray_hits)


def _bench_chunk(
    args: tuple[Scene, str, np.ndarray, np.ndarray, int, int]
) -> tuple[int, int, list[int], list[int]]:
    scene, method, origins, dirs, offset, reps = args
    n = origins.shape[0]
    mats = _world_matrices(scene)
    if method == "separated":
        sphere_centers, sphere_r2, other_idx = _sphere_split(scene)
        generic_mats = mats[other_idx]

    hits_total = 0
    checksum = 0
    precompute_ns: list[int] = []
    detect_ns: list[int] = []
    for rep in range(reps):
        t0 = time.perf_counter_ns()
        if method == "separated":
            moments = np.cross(dirs, origins)
            dir_norm_sq = (dirs * dirs).sum(axis=1)
        t1 = time.perf_counter_ns()
        precompute_ns.append(t1 - t0 if method == "separated" else 0)

        rep_hits = 0
        rep_checksum = 0
        t2 = time.perf_counter_ns()
        if method == "classical":
            for i in range(n):
                h = _classical_hits(mats, origins[i], dirs[i])
                rep_hits += h
                rep_checksum = _checksum_update(rep_checksum, offset + i, h)
        else:
            for i in range(n):
                h = _separated_hits(
                    sphere_centers, sphere_r2, generic_mats,
                    origins[i], dirs[i], moments[i], dir_norm_sq[i],
                )
                rep_hits += h
                rep_checksum = _checksum_update(rep_checksum, offset + i, h)
        t3 = time.perf_counter_ns()
        detect_ns.append(t3 - t2)

        if rep == 0:
            hits_total, checksum = rep_hits, rep_checksum
        elif (rep_hits, rep_checksum) != (hits_total, checksum):
            raise AssertionError("nondeterministic detection results across repetitions")
    return hits_total, checksum, precompute_ns, detect_ns


def _run_one_method(
    scene: Scene,
    method: str,
    origins: np.ndarray,
    dirs: np.ndarray,
    reps: int,
    workers: int,
) -> BenchStats:
    rays = origins.shape[0]
    objects = len(scene.objects)
    if workers == 1:
        chunk_results = [_bench_chunk((scene, method, origins, dirs, 0, reps))]
    else:
        per = max(1, -(-rays // workers))
        chunks = []
        start = 0
        while start < rays:
            end = min(start + per, rays)
            chunks.append((scene, method, origins[start:end], dirs[start:end], start, reps))
            start = end
        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunk_results = list(pool.map(_bench_chunk, chunks))

    hits = sum(r[0] for r in chunk_results)
    checksum = 0
    for r in chunk_results:
        checksum ^= r[1]
    pre_by_rep = [sum(r[2][rep] for r in chunk_results) for rep in range(reps)]
    det_by_rep = [sum(r[3][rep] for r in chunk_results) for rep in range(reps)]
    precompute_ns = int(statistics.median(pre_by_rep))
    detect_ns = int(statistics.median(det_by_rep))
    detections = rays * objects
    return BenchStats(
        method=method,
        objects=objects,
        rays=rays,
        detections=detections,
        hits=hits,
        precompute_ns_total=precompute_ns,
        detect_ns_total=detect_ns,
        detect_ns_per_test=detect_ns / detections,
        checksum=checksum,
    )


def run_benchmark(
    scene: Scene,
    rays: int,
    method: str = "both",
    reps: int = 1,
    seed: int = 1,
    workers: int = 1,
) -> list[BenchStats]:
    """Fire `rays` seeded rays against every object, detection only.

    Returns one BenchStats per method; timings are medians over `reps`
    repetitions of the same work.
    """
    if method not in BENCH_METHODS and method != "both":
        raise ValueError(f"unknown method {method!r}")
    if reps < 1:
        raise ValueError("reps must be >= 1")
    if workers < 1:
        raise ValueError("workers must be >= 1")
    origins, dirs = generate_rays(seed, rays)
    methods = list(BENCH_METHODS) if method == "both" else [method]
    return [_run_one_method(scene, m, origins, dirs, reps, workers) for m in methods]


def to_csv(stats: list[BenchStats]) -> str:
    lines = [CSV_HEADER]
    for s in stats:
        lines.append(
            f"{s.method},{s.objects},{s.rays},{s.detections},{s.hits},"
            f"{s.precompute_ns_total},{s.detect_ns_total},"
            f"{s.detect_ns_per_test:.3f},{s.checksum}"
        )
    return "\n".join(lines) + "\n"
