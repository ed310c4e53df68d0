import math

import pytest

from quadrics.render import Image, pgm_bytes, render_detection
from quadrics.scene import generate_scene, parse_scene, serialize_scene

DISC_SCENE = "camera 0 0 5 0 0 0 0 1 0 60 101 101\nsphere 0 0 0 1\n"


def _lit_columns(image: Image, row: int) -> list[int]:
    return [col for col in range(image.width) if image.at(col, row) > 0]


def projected_disc_radius_px(distance: float, radius: float, vfov_deg: float, height: int) -> float:
    """Pixel radius of a sphere silhouette: tangent-cone half angle over fov."""
    tan_alpha = radius / math.sqrt(distance * distance - radius * radius)
    return height * tan_alpha / (2.0 * math.tan(math.radians(vfov_deg) / 2.0))


class TestDiscGolden:
    @pytest.mark.parametrize("method", ["classical", "separated"])
    def test_disc_radius(self, method):
        image = render_detection(parse_scene(DISC_SCENE), method=method)
        expected = projected_disc_radius_px(5.0, 1.0, 60.0, 101)
        center = 50
        lit = _lit_columns(image, center)
        assert lit, "disc missing"
        measured = max(abs(col - center) for col in lit)
        assert abs(measured - expected) <= 1.0
        # filled and centered
        assert lit == list(range(min(lit), max(lit) + 1))
        assert image.at(center, center) > 0
        # column direction is symmetric for a square image
        lit_rows = [row for row in range(image.height) if image.at(center, row) > 0]
        assert abs(max(abs(r - center) for r in lit_rows) - expected) <= 1.0

    def test_center_pixel_shade(self):
        # center ray hits at t = 4 (camera at distance 5, unit sphere)
        image = render_detection(parse_scene(DISC_SCENE), method="separated")
        assert image.at(50, 50) == 64  # round(255 / 4)

    def test_corners_empty(self):
        image = render_detection(parse_scene(DISC_SCENE), method="separated")
        assert image.at(0, 0) == 0
        assert image.at(100, 100) == 0

    def test_methods_identical(self):
        a = render_detection(parse_scene(DISC_SCENE), method="classical")
        b = render_detection(parse_scene(DISC_SCENE), method="separated")
        assert a.pixels == b.pixels


class TestCoverage:
    def test_camera_looking_away_is_black(self):
        text = "camera 0 0 5 0 0 10 0 1 0 60 33 33\nsphere 0 0 -5 1\n"
        image = render_detection(parse_scene(text), method="separated")
        assert set(image.pixels) == {0}

    def test_generated_scene_methods_agree(self):
        # reparse at a smaller resolution to keep the double render cheap
        lines = serialize_scene(generate_scene(11, 12)).splitlines()
        lines[0] = "camera 0 0 30 0 0 0 0 1 0 60 48 48"
        small = parse_scene("\n".join(lines) + "\n")
        a = render_detection(small, method="classical")
        b = render_detection(small, method="separated")
        assert a.pixels == b.pixels


class TestWorkers:
    def test_worker_count_does_not_change_bytes(self):
        sc = parse_scene("camera 0 0 5 0 0 0 0 1 0 60 33 27\nsphere 0 0 0 1\nsphere 2 0 0 0.5\n")
        one = render_detection(sc, method="separated", workers=1)
        two = render_detection(sc, method="separated", workers=2)
        three = render_detection(sc, method="separated", workers=3)
        assert one.pixels == two.pixels == three.pixels

    def test_bad_workers(self):
        with pytest.raises(ValueError):
            render_detection(parse_scene(DISC_SCENE), workers=0)


class TestPgm:
    def test_header_and_payload(self):
        img = Image(width=3, height=2, pixels=bytes([0, 128, 255, 1, 2, 3]))
        data = pgm_bytes(img)
        assert data == b"P5\n3 2\n255\n" + bytes([0, 128, 255, 1, 2, 3])

    def test_unknown_method_rejected(self):
        with pytest.raises(ValueError):
            render_detection(parse_scene(DISC_SCENE), method="fancy")
