import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zxcf.graphform import (
    H,
    IDENTITY,
    LEGAL_SIX,
    NORMALIZE_TABLE,
    PAULI_X,
    PAULI_Z,
    S,
    GraphForm,
    LocalClifford,
    all_locals,
    enforce_hadamard_rule,
    from_tableau,
    graph_tableau,
    hadamard_violations,
    legal,
    local_complement,
    normalize_local,
    pivot_phi,
    push_paulis,
    split_local,
)
from zxcf.oracle import HAD, PHASE, X, Z, graph_state, local_matrix, states_equal, tableau_projector
from zxcf.selftest import random_graph, rewrite_failures
from zxcf.sampling import random_tableau
from zxcf.tableau import StabilizerTableau, groups_equal



def T(*rows):
    return StabilizerTableau.from_strings(rows)


def state_of(t):
    proj = tableau_projector(t)
    return proj[:, np.argmax(np.linalg.norm(proj, axis=0))]


def graphs_st(max_m=5, locals_=LEGAL_SIX):
    return st.builds(
        lambda m, seed: random_graph(m, random.Random(seed), locals_),
        st.integers(1, max_m),
        st.integers(0, 2**32 - 1),
    )


def test_local_group():
    locs = all_locals()
    assert len(locs) == 24 and len(set(locs)) == 24
    assert len(LEGAL_SIX) == 6
    assert {legal(h, p) for h, p in [(0, 0), (0, 1), (0, 2), (0, 3), (1, 0), (1, 2)]} == set(LEGAL_SIX)
    assert H @ H == IDENTITY and S @ S == PAULI_Z
    for a, b in itertools.product(locs, repeat=2):
        assert np.allclose(
            abs(np.trace(local_matrix(a @ b).conj().T @ local_matrix(a) @ local_matrix(b))), 2
        )


def test_local_matrices_are_the_named_gates():
    for c, u in [(H, HAD), (S, PHASE), (PAULI_X, X), (PAULI_Z, Z)]:
        assert abs(abs(np.trace(local_matrix(c).conj().T @ u)) - 2) < 1e-9


def test_split_local():
    assert split_local(S @ PAULI_X) == (S, True)
    assert split_local(H) == (H, False)
    assert split_local(H @ S) is None
    assert len(NORMALIZE_TABLE) == 24


def test_graph_form_rejects_bad_adjacency():
    with pytest.raises(ValueError):
        GraphForm(2, (0b10, 0), (IDENTITY, IDENTITY))
    with pytest.raises(ValueError):
        GraphForm(1, (0b1,), (IDENTITY,))


def test_from_tableau_examples():
    g = from_tableau(T("X"))
    assert g.adj == (0,) and g.locals == (IDENTITY,)
    g = from_tableau(T("Z"))
    assert g.locals == (H,)
    g = from_tableau(T("XXX", "ZZI", "ZIZ"))
    assert g.edges() == [(0, 2), (1, 2)]
    assert g.locals == (H, H, IDENTITY)


@settings(max_examples=100)
@given(st.integers(1, 6), st.integers(0, 2**32 - 1))
def test_from_tableau_state_and_rules(n, seed):
    t = random_tableau(n, n, random.Random(seed))
    g = from_tableau(t)
    assert g.is_legal
    assert hadamard_violations(g) == []
    assert groups_equal(graph_tableau(g), t)
    assert states_equal(graph_state(g), state_of(t))


@settings(max_examples=100)
@given(graphs_st(6))
def test_graph_tableau_round_trip(g):
    h = from_tableau(graph_tableau(g))
    assert states_equal(graph_state(g), graph_state(h))


def test_push_paulis_examples():
    g = GraphForm.from_edges(1, [], [PAULI_X])
    assert push_paulis(g).locals == (IDENTITY,)
    g = GraphForm.from_edges(2, [(0, 1)], [IDENTITY, PAULI_X])
    assert push_paulis(g).locals == (PAULI_Z, IDENTITY)
    g = GraphForm.from_edges(1, [], [PAULI_Z])
    assert push_paulis(g).locals[0].phase == 2


def test_local_complement_examples():
    tri = GraphForm.from_edges(3, [(0, 1), (1, 2), (0, 2)])
    g = local_complement(tri, 0)
    assert g.edges() == [(0, 1), (0, 2)]
    assert g.locals[1] == S and g.locals[2] == S
    lone = GraphForm.from_edges(2, [], [IDENTITY, IDENTITY])
    assert local_complement(lone, 0).adj == lone.adj
    path = GraphForm.from_edges(3, [(0, 1), (1, 2)])
    assert (0, 2) in local_complement(path, 1).edges()
    for g0, v in [(tri, 0), (lone, 0), (path, 1)]:
        assert states_equal(graph_state(g0), graph_state(local_complement(g0, v)))


def test_pivot_requires_an_edge():
    g = GraphForm.from_edges(2, [])
    with pytest.raises(ValueError):
        pivot_phi(g, 0, 1)
    with pytest.raises(ValueError):
        pivot_phi(g, 0, 0)


def test_pivot_swaps_neighbourhoods():
    # inputs 0,1 joined; 0 sees 2, 1 sees 3, pivots 2 and 3 joined
    g = GraphForm.from_edges(4, [(0, 1), (0, 2), (1, 3), (2, 3)])
    h = pivot_phi(g, 0, 1)
    assert states_equal(graph_state(g), graph_state(h))
    assert (h.adj[0] >> 3) & 1 and (h.adj[1] >> 2) & 1
    assert not (h.adj[2] >> 3) & 1


def test_pivot_twice_is_identity_on_graph():
    g = random_graph(5, random.Random(9))
    u, v = g.edges()[0]
    assert pivot_phi(pivot_phi(g, u, v), u, v).adj == g.adj


def test_normalize_local_examples():
    g = GraphForm.from_edges(2, [(0, 1)], [S, IDENTITY])
    assert normalize_local(g, 0) == g
    g = GraphForm.from_edges(2, [(0, 1)], [H @ PAULI_Z @ H, IDENTITY])
    h = normalize_local(g, 0)
    assert h.locals[0] == IDENTITY
    assert states_equal(graph_state(g), graph_state(h))


def test_normalize_every_local_small_graphs():
    for m in (1, 2, 3):
        pairs = [(u, v) for u in range(m) for v in range(u + 1, m)]
        for mask in range(1 << len(pairs)):
            edges = [e for b, e in enumerate(pairs) if (mask >> b) & 1]
            for c in all_locals():
                g = GraphForm.from_edges(m, edges, [c] + [IDENTITY] * (m - 1))
                h = normalize_local(g, 0)
                assert h.locals[0].is_legal
                assert states_equal(graph_state(g), graph_state(h))


def test_enforce_examples():
    bell = GraphForm.from_edges(2, [(0, 1)], [IDENTITY, H])
    g = enforce_hadamard_rule(bell)
    assert g.locals[0].had and not g.locals[1].had
    assert g.edges() == [(0, 1)]
    assert states_equal(graph_state(bell), graph_state(g))
    ok = GraphForm.from_edges(2, [(0, 1)], [H, IDENTITY])
    assert enforce_hadamard_rule(ok) == ok
    with pytest.raises(ValueError):
        enforce_hadamard_rule(GraphForm.from_edges(1, [], [H @ S]))


def test_enforce_moves_hadamard_onto_input():
    g = GraphForm.from_edges(3, [(0, 2), (1, 2)], [IDENTITY, IDENTITY, H], num_inputs=1)
    h = enforce_hadamard_rule(g)
    assert hadamard_violations(h) == []
    assert states_equal(graph_state(g), graph_state(h))


@settings(max_examples=200)
@given(graphs_st(6))
def test_enforce_is_idempotent(g):
    h = enforce_hadamard_rule(g)
    assert hadamard_violations(h) == [] and h.is_legal
    assert enforce_hadamard_rule(h) == h


@settings(max_examples=150)
@given(graphs_st(5, all_locals()))
def test_rewrites_preserve_state_any_locals(g):
    assert rewrite_failures(g) == []
