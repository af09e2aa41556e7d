from fflab.work import chunked, map_reduce


def _square_all(items):
    return [x * x for x in items]


def test_chunked_covers_in_order():
    runs = chunked(list(range(10)), 3)
    assert len(runs) == 3
    assert sum(runs, []) == list(range(10))
    assert max(len(r) for r in runs) - min(len(r) for r in runs) <= 1


def test_chunked_more_parts_than_items():
    assert sum(chunked([1, 2], 5), []) == [1, 2]


def test_chunked_empty():
    assert chunked([], 4) == [[]]


def test_map_reduce_preserves_order():
    items = list(range(97))
    assert map_reduce(_square_all, items) == [x * x for x in items]


def test_worker_count_never_changes_output():
    items = list(range(40))
    sequential = map_reduce(_square_all, items, workers=1)
    parallel = map_reduce(_square_all, items, workers=3)
    assert sequential == parallel
