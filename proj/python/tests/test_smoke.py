"""End-to-end checks that the python module drives the core library."""

import math
import tempfile
from pathlib import Path

import numpy as np

import papa


def test_point_cloud_round_trip():
    points = np.arange(12.0).reshape(4, 3)
    cloud = papa.PointCloud(points)
    assert cloud.size == 4
    assert cloud.dimension == 3
    assert len(cloud) == 4
    np.testing.assert_array_equal(cloud.points, points)
    np.testing.assert_array_equal(cloud.point(2), points[2])


def test_validation_maps_to_value_error():
    bad = np.zeros((2, 2))
    bad[1, 1] = float("nan")
    try:
        papa.PointCloud(bad)
    except ValueError as e:
        assert "row 1" in str(e)
    else:
        raise AssertionError("non-finite cloud was accepted")


def test_missing_file_maps_to_os_error():
    try:
        papa.load_delimited("/nonexistent/table.csv")
    except OSError:
        pass
    else:
        raise AssertionError("missing file was accepted")


def test_radius_query_matches_numpy():
    rng = np.random.default_rng(5)
    points = rng.normal(size=(200, 3))
    index = papa.SpatialIndex(papa.PointCloud(points))
    center = points[17]
    hits = index.radius_query(center, 0.8)
    expected = np.flatnonzero(np.linalg.norm(points - center, axis=1) <= 0.8)
    assert sorted(h.index for h in hits) == sorted(expected.tolist())
    assert all(h.distance <= 0.8 for h in hits)


def test_generators_are_deterministic():
    a = papa.gen_swiss_roll(150, 0.02, seed=9)
    b = papa.gen_swiss_roll(150, 0.02, seed=9)
    np.testing.assert_array_equal(a.cloud.points, b.cloud.points)
    np.testing.assert_array_equal(a.params, b.params)
    assert a.cloud.dimension == 3
    assert a.params.shape == (150, 2)


def test_trace_on_circle():
    angles = 2.0 * math.pi * np.arange(2000) / 2000
    points = np.column_stack([np.cos(angles), np.sin(angles)])
    index = papa.SpatialIndex(papa.PointCloud(points))

    config = papa.TraceConfig()
    config.step = 0.01
    config.max_steps_each_way = 100
    config.spec = papa.NeighborhoodSpec(radius=0.2)

    trace = papa.trace_autoparallel(index, points[0], config, seed_index=0)
    positions = trace.positions
    assert positions.shape == (201, 2)
    steps = np.linalg.norm(np.diff(positions, axis=0), axis=1)
    np.testing.assert_allclose(steps, 0.01, atol=1e-9)
    radii = np.linalg.norm(positions, axis=1)
    assert np.max(np.abs(radii - 1.0)) <= 0.01
    assert trace.forward_termination == "max_steps"

    image = papa.nonholonomic_map(trace)
    assert len(image) == 201
    np.testing.assert_allclose(
        np.linalg.norm(image[-1] - image[0]), 2.0, atol=1e-9
    )


def test_pipeline_recovers_line_parameter():
    rng = np.random.default_rng(11)
    t = rng.uniform(0.0, 2.0, size=400)
    points = np.column_stack([t, 0.02 * rng.normal(size=400)])

    config = papa.PapaConfig()
    config.trace.step = 0.01
    config.trace.max_steps_each_way = 250
    config.radius = 0.1
    config.levels = 1
    model = papa.run_papa(papa.PointCloud(points), config)

    assert model.stop_reason == "requested_levels_reached"
    assert len(model.levels) == 1
    level = model.levels[0]
    assert len(level.point_indices) > 380
    order = t[np.array(level.point_indices)]
    rho = np.corrcoef(
        np.argsort(np.argsort(level.coordinates)), np.argsort(np.argsort(order))
    )[0, 1]
    assert abs(rho) > 0.999


def test_model_save(tmp_path=None):
    data = papa.gen_zigzag(300, 0.01, seed=3)
    config = papa.PapaConfig()
    config.trace.step = 0.01
    config.trace.max_steps_each_way = 150
    config.radius = 0.1
    config.levels = 1
    model = papa.run_papa(data.cloud, config)

    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "model"
        papa.save_model(out, model, '{"command": "smoke"}')
        assert (out / "manifest.json").is_file()
        assert (out / "level_0" / "coordinates.csv").is_file()
        assert (out / "level_0" / "base.json").is_file()


def main():
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for test in tests:
        test()
        print(f"{test.__name__} ok")
    print(f"{len(tests)} smoke tests passed")


if __name__ == "__main__":
    main()
