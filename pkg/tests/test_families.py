import warnings
from math import comb

import networkx as nx
import pytest

from remoteness.connectivity import edge_connectivity, is_bipartite
from remoteness.families import (
    BpkParams,
    FamilyError,
    KappaPcParams,
    LambdaFamily,
    LambdaPcParams,
    SizeTieWarning,
    bpk,
    bpk_params,
    bpk_valid_sizes,
    enumerate_kappa_pc,
    enumerate_lambda_pc,
    kappa_pc_graph,
    kappa_pc_size_range,
    lambda_pc_graph,
    min_kappa_order,
    pk_kappa,
    pk_kappa_params,
    pk_lambda,
    pk_lambda_params,
)
from remoteness.graphcore import C, E, from_block_sequence, path, rho, transmissions

from conftest import to_nx


def test_kappa_member_sizes():
    assert kappa_pc_graph(KappaPcParams(2, 1, 2, 1)).m == 10
    g = kappa_pc_graph(KappaPcParams(2, 1, 2, 2))
    assert (g.n, g.m) == (7, 13)
    assert kappa_pc_graph(KappaPcParams(1, 5, 1, 1)) == path(8)


def test_kappa_params_validation():
    with pytest.raises(FamilyError):
        KappaPcParams(2, 1, 1, 1)
    with pytest.raises(FamilyError):
        KappaPcParams(1, 0, 1, 1)


def test_enumerated_kappa_sizes():
    assert [s for _, s in enumerate_kappa_pc(7, 2)] == [13, 15]
    assert [s for _, s in enumerate_kappa_pc(6, 2)] == [10]
    assert kappa_pc_size_range(7, 2) == (13, 15, 1)
    assert kappa_pc_size_range(6, 2) == (10, 10, 0)
    for n in range(4, 15):
        assert kappa_pc_size_range(n, 1) == (n - 1, comb(n - 1, 2), 0)


def test_smallest_kappa_order():
    for kappa in range(1, 6):
        n0 = min_kappa_order(kappa)
        assert len(enumerate_kappa_pc(n0, kappa)) == 1
        with pytest.raises(FamilyError):
            enumerate_kappa_pc(n0 - 1, kappa)


def test_pk_kappa_selection():
    assert pk_kappa(6, 10, 2) == from_block_sequence([C(1), C(2), C(2), C(1)])
    assert pk_kappa_params(7, 12, 2) == KappaPcParams(2, 1, 2, 2)
    assert pk_kappa(6, 5, 1) == path(6)
    with pytest.raises(FamilyError):
        pk_kappa(6, 11, 1)


@pytest.mark.parametrize("kappa", [1, 2, 3])
def test_kappa_members_have_exact_connectivity(kappa):
    for n in range(min_kappa_order(kappa), 12):
        for p, size in enumerate_kappa_pc(n, kappa):
            h = to_nx(kappa_pc_graph(p))
            assert nx.node_connectivity(h) == kappa
            assert h.number_of_edges() == size


def test_lambda_member_sizes():
    assert lambda_pc_graph(LambdaPcParams(LambdaFamily.F1, 2, 2, 1, 2)).m == 13
    assert lambda_pc_graph(LambdaPcParams(LambdaFamily.F2, 3, 1, 3, 2)).m == 22
    g = lambda_pc_graph(LambdaPcParams(LambdaFamily.F3, 3, 1, 3))
    assert (g.n, g.m) == (10, 25)
    assert edge_connectivity(g) == 3


def test_lambda_params_validation():
    with pytest.raises(FamilyError):
        LambdaPcParams(LambdaFamily.F1, 2, 0, 2, 1)
    with pytest.raises(FamilyError):
        LambdaPcParams(LambdaFamily.F2, 3, 0, 2, 1)
    with pytest.raises(FamilyError):
        LambdaPcParams(LambdaFamily.F3, 2, 1, 3)
    with pytest.raises(FamilyError):
        LambdaPcParams(LambdaFamily.F1, 4, 1, 2, 2)


def test_lambda_extremes():
    first, size = enumerate_lambda_pc(7, 2)[0]
    assert (first, size) == (LambdaPcParams(LambdaFamily.F2, 2, 1, 2, 1), 10)
    for lam in (2, 3):
        for n in range(lam + 2, 16):
            last, size = enumerate_lambda_pc(n, lam)[-1]
            assert size == comb(n, 2) - 1
            assert last == LambdaPcParams(LambdaFamily.F2, lam, 0, n - 2, 1)


def test_pk_lambda_selection():
    assert pk_lambda_params(10, 22, 3) == LambdaPcParams(LambdaFamily.F2, 3, 1, 3, 2)
    assert pk_lambda_params(9, 13, 2) == LambdaPcParams(LambdaFamily.F1, 2, 2, 1, 2)
    with pytest.raises(FamilyError):
        pk_lambda(6, 15, 2)


@pytest.mark.parametrize("lam", [2, 3])
def test_lambda_members_are_lambda_edge_connected(lam):
    for n in range(lam + 2, 13):
        for p, size in enumerate_lambda_pc(n, lam):
            h = to_nx(lambda_pc_graph(p))
            assert nx.edge_connectivity(h) >= lam
            assert h.number_of_edges() == size


def test_size_ties_warn():
    from remoteness.families import _select_distinct

    with pytest.warns(SizeTieWarning):
        _select_distinct([("x", 3), ("y", 3)], key=lambda p: p)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        enumerate_lambda_pc(20, 3)
        enumerate_kappa_pc(20, 2)


def test_bpk_reference_case():
    p, g = bpk(8, 10)
    assert p == BpkParams(8, 10, 6, 1, 2, 2, 1)
    assert p.blocks() == [C(1)] * 3 + [E(2), E(2), E(1)]
    assert (g.n, g.m) == (8, 10) and is_bipartite(g)
    assert transmissions(g)[0] == 22
    assert rho(g) == pytest.approx(22 / 7) and str(rho(g)) == "22/7"


def test_bpk_tree_case_is_path():
    p, g = bpk(10, 9)
    assert (p.t, p.f) == (4, 1)
    assert g == path(10)


def test_bpk_window_errors_name_the_inequality():
    with pytest.raises(FamilyError, match="floor"):
        bpk_params(8, 17)
    with pytest.raises(FamilyError, match=r"n - t \+ 1"):
        bpk_params(8, 16)
    assert 16 not in bpk_valid_sizes(8)
    assert bpk_valid_sizes(8)[0] == 7
