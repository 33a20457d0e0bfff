import numpy as np
import pytest

from extkit.catalog.registry import ENTRIES
from extkit.catalog.services.catalog_service import service as catalog_service
from extkit.settings import settings
from extkit.shared.exceptions import SamplingError
from extkit.verify.schemas.sample_schema import SampleSpec
from extkit.verify.services.sampling_service import service
from extkit.verify.tests.factories import SampleSpecFactory


def test_sample_points_ok__deterministic():
    spec = SampleSpecFactory(seed=42)

    first = service.sample_points(spec=spec)
    second = service.sample_points(spec=spec)

    assert len(first) == 100
    for a, b in zip(first, second):
        np.testing.assert_array_equal(a, b)


def test_sample_points_ok__seed_changes_stream():
    first = service.sample_points(spec=SampleSpecFactory(seed=1))
    second = service.sample_points(spec=SampleSpecFactory(seed=2))

    assert not np.array_equal(first.points[0], second.points[0])


def test_sample_points_ok__inside_intervals():
    spec = SampleSpecFactory(intervals=[(0.0, 0.5), (2.0, 3.0), (-4.0, -3.5)], count=200)

    points = np.array(service.sample_points(spec=spec).points)

    assert points.shape == (200, 3)
    assert np.all(points[:, 0] >= 0.0) and np.all(points[:, 0] <= 0.5)
    assert np.all(points[:, 1] >= 2.0) and np.all(points[:, 1] <= 3.0)
    assert np.all(points[:, 2] >= -4.0) and np.all(points[:, 2] <= -3.5)


def test_sample_points_ok__no_rejection_without_singular_set():
    batch = service.sample_points(spec=SampleSpecFactory(margin=0.0))

    assert batch.rejected == 0


def test_sample_points_ok__rejections_are_counted():
    batch = service.sample_points(
        spec=SampleSpecFactory(intervals=[(-1.0, 1.0)], margin=0.5),
        singular=lambda x, margin=0.0: abs(x[0]) <= margin,
    )

    assert len(batch) == 100
    assert batch.rejected > 0
    assert all(abs(x[0]) > 0.5 for x in batch)


def test_sample_points_ok__vortex_opposite_margin():
    system, _ = catalog_service.instantiate(entry_id="vortex_opposite", verify=False)
    entry = ENTRIES["vortex_opposite"]
    spec = SampleSpec(
        intervals=entry.intervals(entry.params_schema()), count=100, margin=entry.margin
    )

    batch = service.sample_points(spec=spec, singular=system.is_singular)

    assert all(abs(x[3]) >= 0.1 for x in batch)


def test_sample_points_failure__everything_rejected():
    with pytest.raises(SamplingError) as ctx:
        service.sample_points(
            spec=SampleSpecFactory(count=5), singular=lambda x, margin=0.0: True
        )

    assert ctx.value.args[0] == "More than 99% of the sampled points were rejected"


def test_sample_points_failure__message_follows_rejection_setting(monkeypatch):
    monkeypatch.setattr(settings, "MAX_REJECTION_RATE", 0.5)

    with pytest.raises(SamplingError) as ctx:
        service.sample_points(
            spec=SampleSpecFactory(count=5), singular=lambda x, margin=0.0: True
        )

    assert ctx.value.args[0] == "More than 50% of the sampled points were rejected"
