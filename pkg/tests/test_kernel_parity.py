"""The compiled and pure word kernels must agree letter for letter."""

import os
import random
import subprocess
import sys

import pytest

from mcgcalc import _wordops_py

compiled = pytest.importorskip(
    "mcgcalc._wordops_c", reason="compiled kernel not built"
)


def random_reduced(rng, alphabet, length):
    out = []
    for _ in range(length):
        while True:
            c = rng.choice(alphabet) * rng.choice((1, -1))
            if not out or out[-1] != -c:
                break
        out.append(c)
    return tuple(out)


def test_reduce_letters_parity():
    rng = random.Random(0)
    alphabet = list(range(1, 9))
    for _ in range(300):
        seq = [rng.choice(alphabet) * rng.choice((1, -1)) for _ in range(rng.randrange(40))]
        assert compiled.reduce_letters(seq) == _wordops_py.reduce_letters(seq)


def test_concat_and_invert_parity():
    rng = random.Random(1)
    alphabet = list(range(1, 9))
    for _ in range(300):
        u = random_reduced(rng, alphabet, rng.randrange(30))
        v = random_reduced(rng, alphabet, rng.randrange(30))
        assert compiled.concat_reduced(u, v) == _wordops_py.concat_reduced(u, v)
        assert compiled.invert_reduced(u) == _wordops_py.invert_reduced(u)


def test_substitute_parity():
    rng = random.Random(2)
    alphabet = list(range(1, 7))
    for _ in range(200):
        images = [()] + [
            random_reduced(rng, alphabet, rng.randrange(6)) for _ in alphabet
        ]
        word = random_reduced(rng, alphabet, rng.randrange(25))
        assert compiled.substitute(word, images) == _wordops_py.substitute(
            word, images
        )


def test_results_are_reduced_tuples():
    seq = [1, -1, 2, 3, -3, -2, 4]
    out = compiled.reduce_letters(seq)
    assert isinstance(out, tuple)
    assert out == (4,)


@pytest.mark.parametrize("backend", ["py", "c"])
def test_env_var_selects_backend(backend):
    env = dict(os.environ, MCGCALC_KERNEL=backend)
    result = subprocess.run(
        [sys.executable, "-c", "import mcgcalc; print(mcgcalc.kernel_backend())"],
        capture_output=True,
        text=True,
        env=env,
    )
    assert result.returncode == 0, result.stderr
    assert result.stdout.strip() == backend
