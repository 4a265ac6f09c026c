import pytest

from barblocks.abacus import (
    BarAbacus,
    FencedRunner,
    TwistedBarAbacus,
    reference_runner,
    render,
)
from barblocks.partitions import BarPartition, Partition, enumerate_partitions


def test_bar_abacus_example_t3():
    ab = BarAbacus.from_partition(BarPartition([5, 3, 2, 1]), 3)
    assert ab.runners == (frozenset({1}), frozenset({0}), frozenset({0, 1}))
    assert ab.to_partition() == BarPartition([5, 3, 2, 1])


def test_bar_abacus_example_t5():
    ab = BarAbacus.from_partition(BarPartition([14, 12, 8, 6, 3, 2]), 5)
    assert ab.runners == (
        frozenset(),
        frozenset({1}),
        frozenset({0, 2}),
        frozenset({0, 1}),
        frozenset({2}),
    )


def test_bar_abacus_empty():
    ab = BarAbacus.from_partition(BarPartition(), 5)
    assert all(not r for r in ab.runners)
    assert ab.to_partition() == BarPartition()


@pytest.mark.parametrize("t", [2, 4, 1, 0, -3])
def test_bar_abacus_rejects_bad_t(t):
    with pytest.raises(ValueError):
        BarAbacus.from_partition(BarPartition([2, 1]), t)


def test_twist_example():
    twisted = BarAbacus.from_partition(BarPartition([5, 3, 2, 1]), 3).twist()
    assert twisted.runner0 == frozenset({1})
    assert twisted.shifted == (FencedRunner({0}, {0, 1}),)
    assert twisted.untwist().to_partition() == BarPartition([5, 3, 2, 1])


def test_untwist_printed_t5_example():
    twisted = TwistedBarAbacus(
        5,
        frozenset({1}),
        (FencedRunner({1}, {0}), FencedRunner(frozenset(), {1})),
    )
    assert twisted.to_partition() == BarPartition([8, 6, 5, 4])


def test_twist_empty_is_default():
    twisted = BarAbacus.from_partition(BarPartition(), 3).twist()
    assert not twisted.runner0
    assert all(fr.is_default for fr in twisted.shifted)


def test_twist_round_trip():
    for n in range(22):
        for lam in enumerate_partitions(n, "strict"):
            for t in (3, 5, 7):
                ab = BarAbacus.from_partition(lam, t)
                assert ab.twist().untwist() == ab
                assert ab.to_partition() == lam


def test_reference_runner():
    assert reference_runner(1) == FencedRunner({0}, frozenset())
    assert reference_runner(-1) == FencedRunner(frozenset(), {0})
    assert reference_runner(0).is_default
    assert reference_runner(3) == FencedRunner({0, 1, 2}, frozenset())


def test_reference_runner_normalizes_to_default():
    for m in range(-5, 6):
        pointed, c = reference_runner(m).normalize()
        assert pointed.is_default
        assert c == m


def test_normalize_shifted_runner_of_4321():
    runner = FencedRunner({0, 1}, {0})
    pointed, c = runner.normalize()
    assert c == 1
    assert pointed == FencedRunner({0}, {1})
    assert pointed.shift(c) == runner


def test_normalize_core_one_runner():
    pointed, c = FencedRunner({0}, frozenset()).normalize()
    assert (pointed, c) == (FencedRunner(), 1)


def test_normalize_idempotent_and_pointed():
    samples = [
        FencedRunner({0, 3}, {1}),
        FencedRunner(frozenset(), {0, 2, 5}),
        FencedRunner({1, 2}, {0, 4}),
        FencedRunner(),
    ]
    for runner in samples:
        pointed, c = runner.normalize()
        assert pointed.is_pointed
        assert c == runner.charnum
        again, c2 = pointed.normalize()
        assert (again, c2) == (pointed, 0)


def test_push_pull_are_inverse():
    samples = [
        FencedRunner({0, 2}, {1, 3}),
        FencedRunner({5}, frozenset()),
        FencedRunner(),
        FencedRunner(frozenset(), {0}),
    ]
    for runner in samples:
        assert runner.push_down().pull_up() == runner
        assert runner.pull_up().push_down() == runner
        assert runner.shift(3).shift(-3) == runner


def test_pointed_runner_partition_round_trip():
    for n in range(12):
        for lam in enumerate_partitions(n):
            runner = FencedRunner.from_partition(lam)
            assert runner.is_pointed
            assert runner.to_partition() == lam


def test_to_partition_requires_pointed():
    with pytest.raises(ValueError):
        FencedRunner({0}, frozenset()).to_partition()


def test_runner0_slot0_excluded():
    with pytest.raises(ValueError):
        BarAbacus(3, (frozenset({0}), frozenset(), frozenset()))
    with pytest.raises(ValueError):
        TwistedBarAbacus(3, frozenset({0}), (FencedRunner(),))


def test_json_round_trip():
    ab = BarAbacus.from_partition(BarPartition([14, 12, 8, 6, 3, 2]), 5)
    assert BarAbacus.from_json(ab.to_json()) == ab
    assert ab.to_json() == {"t": 5, "runners": [[], [1], [0, 2], [0, 1], [2]]}
    tw = ab.twist()
    assert TwistedBarAbacus.from_json(tw.to_json()) == tw
    assert tw.to_json() == {
        "t": 5,
        "runner0": [],
        "shifted": [{"above": [1], "below": [2]}, {"above": [0, 2], "below": [0, 1]}],
    }


GOLDEN_EMPTY_T3 = "○ ○ ○\n0 1 2"

GOLDEN_5321_T3 = "● ○ ●\n○ ● ●\n0 1 2"

GOLDEN_5321_T3_TWISTED = (
    "● ○\n○ ●\n  -\n  ○\n  ○\n0 1"
)

GOLDEN_BIG_T5 = (
    "○ ○ ● ○ ●\n"
    "○ ● ○ ● ○\n"
    "○ ○ ● ● ○\n"
    "0 1 2 3 4"
)

GOLDEN_BIG_T5_TWISTED = (
    "○ ○ ●\n"
    "○ ● ○\n"
    "○ ○ ●\n"
    "  - -\n"
    "  ● ○\n"
    "  ● ○\n"
    "  ○ ●\n"
    "0 1 2"
)


def test_render_goldens():
    assert render(BarAbacus.from_partition(BarPartition(), 3)) == GOLDEN_EMPTY_T3
    ab = BarAbacus.from_partition(BarPartition([5, 3, 2, 1]), 3)
    assert render(ab) == GOLDEN_5321_T3
    assert render(ab.twist()) == GOLDEN_5321_T3_TWISTED
    big = BarAbacus.from_partition(BarPartition([14, 12, 8, 6, 3, 2]), 5)
    assert render(big) == GOLDEN_BIG_T5
    assert render(big.twist()) == GOLDEN_BIG_T5_TWISTED


def test_render_rejects_other_types():
    with pytest.raises(TypeError):
        render(Partition([2, 1]))
