import pytest

from stablegroth.workers import ENV_VAR, parallel_map, worker_count


def square(x):
    return x * x


def test_worker_count_from_environment(monkeypatch):
    monkeypatch.setenv(ENV_VAR, "3")
    assert worker_count() == 3
    monkeypatch.delenv(ENV_VAR)
    assert worker_count() >= 1
    for bad in ("0", "many"):
        monkeypatch.setenv(ENV_VAR, bad)
        with pytest.raises(ValueError):
            worker_count()


def test_parallel_map_keeps_order():
    items = list(range(20))
    assert parallel_map(square, items, workers=1) == [x * x for x in items]
    assert parallel_map(square, items, workers=2) == [x * x for x in items]
    assert parallel_map(square, [], workers=2) == []
