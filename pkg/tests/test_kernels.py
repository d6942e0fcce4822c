"""Parity between the pure and compiled residue-table kernels."""
import random

import pytest

from semigroup_forge import _backend, _kernel_py

compiled = pytest.importorskip(
    "semigroup_forge._kernel", reason="compiled kernel not built"
)


def test_backend_selected_a_kernel():
    assert _backend.backend_name in ("pure", "compiled")
    assert callable(_backend.residue_table)


def test_modulus_one():
    assert _kernel_py.residue_table(1, [1]) == [0]
    assert compiled.residue_table(1, [1]) == [0]


def test_unreachable_classes():
    # Multiples of 3 only: residues 1, 2, 4, 5 mod 6 hold no element.
    expected = [0, -1, -1, 1, -1, -1]
    assert _kernel_py.residue_table(6, [6, 9]) == expected
    assert compiled.residue_table(6, [6, 9]) == expected


def test_known_table():
    # Monoid of 4, 5, 7: least elements 0, 5, 10, 7 per residue class.
    assert _kernel_py.residue_table(4, [4, 5, 7]) == [0, 1, 2, 1]
    assert compiled.residue_table(4, [4, 5, 7]) == [0, 1, 2, 1]
    assert _kernel_py.minimal_residues(4, [0, 1, 2, 1]) == [1, 3]
    assert compiled.minimal_residues(4, [0, 1, 2, 1]) == [1, 3]


def test_random_parity():
    rng = random.Random(7)
    for _ in range(200):
        m = rng.randint(1, 70)
        gens = sorted(set(rng.sample(range(1, 500), rng.randint(1, 6)) + [m]))
        a = compiled.residue_table(m, gens)
        b = _kernel_py.residue_table(m, gens)
        assert a == b, (m, gens)
        if -1 not in a:
            assert compiled.minimal_residues(m, a) == _kernel_py.minimal_residues(m, a)


def test_compiled_rejects_oversized_generator():
    with pytest.raises(OverflowError):
        compiled.residue_table(3, [3, 1 << 62])


def test_bad_modulus():
    with pytest.raises(ValueError):
        _kernel_py.residue_table(0, [2, 3])
    with pytest.raises(ValueError):
        compiled.residue_table(0, [2, 3])
