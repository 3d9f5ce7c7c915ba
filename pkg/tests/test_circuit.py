import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zxcf.circuit import (
    CircuitError,
    CliffordCircuit,
    EncoderCircuit,
    Gate,
    choi_tableau,
    conjugate,
    encoder_tableau,
    format_circuit,
    parse_circuit,
    reduce_to_z1,
    synthesize_encoder,
)
from zxcf.oracle import circuit_to_isometry, image_rank, images_equal, pauli_matrix, tableau_projector
from zxcf.pauli import PauliString, parse_pauli
from zxcf.sampling import random_circuit, random_encoder
from zxcf.tableau import StabilizerTableau, groups_equal, validate_tableau

from conftest import paulis, tableaus


def unitary(c: CliffordCircuit) -> np.ndarray:
    return circuit_to_isometry(EncoderCircuit(c, tuple(range(c.wires))))


def C(wires, *gates):
    return CliffordCircuit(wires, tuple(Gate(g[0], tuple(g[1:])) for g in gates))


def T(*rows):
    return StabilizerTableau.from_strings(rows)


def test_conjugate_examples():
    assert conjugate(C(1, ("H", 0)), parse_pauli("X")) == parse_pauli("Z")
    assert conjugate(C(2, ("CX", 0, 1)), parse_pauli("IZ")) == parse_pauli("ZZ")
    p = parse_pauli("-XYZ")
    assert conjugate(CliffordCircuit(3), p) == p


def test_every_generator_matches_dense():
    gates = [(g, q) for g in "HSXZ" for q in range(3)]
    gates += [(g, a, b) for g in ("CX", "CZ") for a, b in itertools.permutations(range(3), 2)]
    for g in gates:
        c = C(3, g)
        u = unitary(c)
        for w in itertools.product("IXYZ", repeat=3):
            p = parse_pauli("".join(w))
            assert np.allclose(u @ pauli_matrix(p) @ u.conj().T, pauli_matrix(conjugate(c, p))), g


@settings(max_examples=50)
@given(st.integers(0, 2**32 - 1), paulis(3))
def test_random_circuit_conjugation_matches_dense(seed, p):
    c = random_circuit(3, 20, random.Random(seed))
    u = unitary(c)
    assert np.allclose(u @ pauli_matrix(p) @ u.conj().T, pauli_matrix(conjugate(c, p)))


@given(st.integers(0, 2**32 - 1))
def test_inverse_undoes(seed):
    c = random_circuit(4, 30, random.Random(seed))
    assert np.allclose(unitary(c + c.inverse()), np.eye(16))


def test_circuit_validation():
    for bad in [("CX", 0, 0), ("H", 3), ("CZ", 0), ("T", 0)]:
        with pytest.raises(CircuitError):
            C(2, bad)
    with pytest.raises(CircuitError):
        EncoderCircuit(CliffordCircuit(2), (0, 0))
    with pytest.raises(CircuitError):
        EncoderCircuit(CliffordCircuit(2), (2,))


def test_reduce_to_z1_examples():
    assert reduce_to_z1(parse_pauli("Z")).gates == ()
    assert reduce_to_z1(parse_pauli("XI")).gates == (Gate("H", (0,)),)
    for text in ("ZZ", "-ZZ", "XYZ", "-IY", "IIX"):
        p = parse_pauli(text)
        assert conjugate(reduce_to_z1(p), p) == PauliString.single(p.n, 0, "Z")
    with pytest.raises(ValueError):
        reduce_to_z1(parse_pauli("-II"))


@given(paulis(hermitian=True), st.data())
def test_reduce_to_z1_any_target(p, data):
    if p.is_identity:
        return
    q = data.draw(st.integers(0, p.n - 1))
    assert conjugate(reduce_to_z1(p, q), p) == PauliString.single(p.n, q, "Z")


def test_synthesis_examples():
    e = synthesize_encoder(T("Z"))
    assert e.inputs == () and e.circuit.gates == ()
    v = circuit_to_isometry(synthesize_encoder(T("-Z")))
    assert images_equal(v, np.array([[0], [1]]))
    bell = circuit_to_isometry(synthesize_encoder(T("XX", "ZZ")))
    assert bell.shape == (4, 1)
    assert images_equal(bell, np.array([[1], [0], [0], [1]]))
    ident = synthesize_encoder(StabilizerTableau(3, ()))
    assert ident.k == 0 and np.allclose(circuit_to_isometry(ident), np.eye(8))


@settings(max_examples=150)
@given(tableaus(max_n=5))
def test_synthesized_image_is_code_space(t):
    e = synthesize_encoder(t)
    assert (e.n, e.k) == (t.n, t.k)
    v = circuit_to_isometry(e)
    assert image_rank(v) == 2 ** (t.n - t.k)
    assert images_equal(v, tableau_projector(t))


@settings(max_examples=100)
@given(tableaus(max_n=8))
def test_synthesized_group_by_conjugation(t):
    assert groups_equal(encoder_tableau(synthesize_encoder(t)), t)


def test_choi_examples():
    assert groups_equal(choi_tableau(EncoderCircuit.identity(1)), T("XX", "ZZ"))
    bell = synthesize_encoder(T("XX", "ZZ"))
    assert groups_equal(choi_tableau(bell), T("XX", "ZZ"))
    rep = synthesize_encoder(T("ZZ"))
    assert groups_equal(choi_tableau(rep), T("XXX", "ZZI", "ZIZ"))


@settings(max_examples=100)
@given(st.integers(1, 6), st.data())
def test_choi_is_full_rank_state(n, data):
    k = data.draw(st.integers(0, n))
    e = random_encoder(n, k, random.Random(data.draw(st.integers(0, 2**32 - 1))))
    c = choi_tableau(e)
    assert (c.n, c.k) == (2 * n - k, 2 * n - k)
    assert validate_tableau(c) == []


@settings(max_examples=40)
@given(st.integers(1, 4), st.data())
def test_choi_matches_vectorised_isometry(n, data):
    k = data.draw(st.integers(0, n))
    e = random_encoder(n, k, random.Random(data.draw(st.integers(0, 2**32 - 1))))
    v = circuit_to_isometry(e)
    # inputs are the most significant qubits of the Choi vector
    choi = v.T.reshape(-1)
    assert images_equal(choi[:, None], tableau_projector(choi_tableau(e)))


def test_circuit_text_round_trip():
    e = random_encoder(5, 2, random.Random(7), depth=40)
    assert parse_circuit(format_circuit(e)) == e
    text = "# comment\nwires=3\ninputs=2\ncx 2 0\nH 1\n"
    e = parse_circuit(text)
    assert e.inputs == (2,) and e.circuit.gates == (Gate("CX", (2, 0)), Gate("H", (1,)))
    with pytest.raises(CircuitError):
        parse_circuit("H 0\n")
    with pytest.raises(CircuitError):
        parse_circuit("wires=2\nH x\n")
    with pytest.raises(CircuitError):
        parse_circuit("wires=2\nH 5\n")
