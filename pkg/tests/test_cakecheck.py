from fractions import Fraction

import pytest

from balmat.cakecheck import (DivisionInstance, Partition, grid_max,
                              grid_partitions, instance_2n2_nn,
                              instance_nn_2n2, nu_D)

HALF = Fraction(1, 2)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition([[HALF, HALF], [1, 1]])
    with pytest.raises(ValueError):
        Partition([[Fraction(3, 2), Fraction(-1, 2)]])


def test_2n2_nn_even_split_lists():
    inst = instance_2n2_nn(2)
    p = Partition([[HALF, HALF], [HALF, HALF]])
    # threshold is 1/(n-1) = 1, so B is empty; only max-sum system pairs remain
    assert inst.accepted(1, p) == {(1, 1), (2, 2)}
    assert inst.accepted(2, p) == {(1, 2), (2, 1)}


def test_2n2_nn_degenerate_partition():
    inst = instance_2n2_nn(2)
    p = Partition([[1, 0], [1, 0]])
    assert (1, 1) in inst.accepted(1, p)


def test_2n2_nn_nu_D_at_even_split():
    inst = instance_2n2_nn(2)
    p = Partition([[HALF, HALF], [HALF, HALF]])
    assert nu_D(inst, p) == 1


def test_nn_2n2_systems():
    inst = instance_nn_2n2(2)
    assert inst.slice_counts == (2, 2)
    p = Partition([[HALF, HALF], [1, 0]])
    # agent 1's system is {(1,1),(2,2)}; with w = (1,0) the max-sum pair is (1,1)
    acc = inst.accepted(1, p)
    assert (1, 1) in acc


def test_nn_2n2_b_pairs_pick_joint_max():
    inst = instance_nn_2n2(3)
    p = Partition([[HALF, HALF, 0], [HALF, HALF, 0, 0]])
    for i in (1, 2, 3):
        acc = inst.accepted(i, p)
        assert acc  # hungriness at this grid point
        for j, k in acc:
            assert 1 <= j <= 3 and 1 <= k <= 4


def test_nu_D_trivial_cases():
    always = DivisionInstance(1, (1, 1), lambda i, p: {(1, 1)})
    p = Partition([[1], [1]])
    assert nu_D(always, p) == 1
    disjoint = DivisionInstance(
        2, (2, 2), lambda i, p: {(i, i)})
    p2 = Partition([[HALF, HALF], [HALF, HALF]])
    assert nu_D(disjoint, p2) == 2


def test_nu_D_respects_componentwise_disjointness():
    clash = DivisionInstance(2, (2, 2), lambda i, p: {(1, i)})
    p = Partition([[HALF, HALF], [HALF, HALF]])
    assert nu_D(clash, p) == 1  # both agents need slice 1 of cake 1


def test_grid_partitions_count():
    # compositions of q into a parts per cake
    parts = list(grid_partitions((2, 2), 2))
    assert len(parts) == 9  # 3 compositions of 2 into 2, squared


def test_oracle_idempotent_on_grid():
    inst = instance_2n2_nn(2)
    for p in grid_partitions(inst.slice_counts, 4):
        for i in (1, 2):
            assert inst.accepted(i, p) == inst.accepted(i, p)


@pytest.mark.parametrize("builder", [instance_2n2_nn, instance_nn_2n2])
def test_hungriness_on_grid(builder):
    """Every agent accepts some pair of strictly positive slices."""
    inst = builder(2)
    for p in grid_partitions(inst.slice_counts, 4):
        for i in range(1, inst.agent_count + 1):
            assert any(all(p.cakes[t][vec[t] - 1] > 0 for t in range(2))
                       for vec in inst.accepted(i, p))


def test_grid_max_trivial_instance():
    n = 2
    everything = {(j, k) for j in (1, 2) for k in (1, 2)}
    inst = DivisionInstance(n, (2, 2), lambda i, p: everything)
    best, arg = grid_max(inst, 2)
    assert best == n
    assert arg is not None


@pytest.mark.parametrize("builder", [instance_2n2_nn, instance_nn_2n2])
def test_counterexample_grid_q4(builder):
    inst = builder(2)
    best, _ = grid_max(inst, 4)
    assert best <= 1


def test_nu_D_never_exceeds_min_side():
    inst = instance_nn_2n2(2)
    for p in grid_partitions(inst.slice_counts, 3):
        assert nu_D(inst, p) <= min(inst.agent_count, min(inst.slice_counts))
