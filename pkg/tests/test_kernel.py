import random

import pytest

from jparity import _fallback, _kernel


def reference_clmul(a, b):
    out = 0
    i = 0
    while b >> i:
        if (b >> i) & 1:
            out ^= a << i
        i += 1
    return out


KERNEL_NAMES = sorted(_kernel.KERNELS)


@pytest.mark.parametrize("name", KERNEL_NAMES)
@pytest.mark.parametrize("a,b", [(0, 5), (5, 0), (1, 1), (3, 3), (2**64 - 1, 2**64 - 1),
                                 (2**64, 2**63 + 1), (0b1011, 0b111)])
def test_small_cases(name, a, b):
    assert _kernel.KERNELS[name](a, b) == reference_clmul(a, b)


@pytest.mark.parametrize("name", KERNEL_NAMES)
def test_random_unbalanced(name):
    rng = random.Random(7)
    kernel = _kernel.KERNELS[name]
    for _ in range(60):
        a = rng.getrandbits(rng.randint(1, 20000))
        b = rng.getrandbits(rng.randint(1, 3000))
        assert kernel(a, b) == reference_clmul(a, b)


def test_backends_agree_large():
    rng = random.Random(11)
    a, b = rng.getrandbits(200_003), rng.getrandbits(150_001)
    results = {name: k(a, b) for name, k in _kernel.KERNELS.items()}
    assert len(set(results.values())) == 1


def test_dispatch_sparse_path_matches_dense():
    rng = random.Random(5)
    dense = rng.getrandbits(5000)
    sparse = sum(1 << rng.randrange(4000) for _ in range(10))
    assert _kernel.clmul(dense, sparse) == _fallback.clmul(dense, sparse)
    assert _kernel.clmul(sparse, dense) == _fallback.clmul(dense, sparse)


@pytest.mark.skipif("compiled" not in _kernel.KERNELS, reason="extension not built")
@pytest.mark.parametrize("cutoff", [1, 2, 3, 7, 16, 100])
def test_karatsuba_cutoffs(cutoff):
    from jparity import _clmul

    rng = random.Random(cutoff)
    saved = _clmul.get_cutoff()
    try:
        _clmul.set_cutoff(cutoff)
        for nbits in (64, 65, 640, 6401, 64 * 37 + 5):
            a, b = rng.getrandbits(nbits), rng.getrandbits(nbits)
            assert _kernel.KERNELS["compiled"](a, b) == reference_clmul(a, b)
    finally:
        _clmul.set_cutoff(saved)


@pytest.mark.skipif("compiled" not in _kernel.KERNELS, reason="extension not built")
def test_cutoff_rejects_zero():
    from jparity import _clmul

    with pytest.raises(ValueError):
        _clmul.set_cutoff(0)


def test_use_backend_restores():
    before = _kernel._dense
    with _kernel.use_backend("python"):
        assert _kernel._dense is _fallback.clmul
    assert _kernel._dense is before
    with pytest.raises(KeyError):
        with _kernel.use_backend("nope"):
            pass


def test_fallback_selected_without_extension():
    import subprocess
    import sys

    code = (
        "import sys; sys.modules['jparity._clmul'] = None\n"
        "import jparity\n"
        "from jparity.census import run_identity_suite\n"
        "assert jparity.BACKEND == 'python', jparity.BACKEND\n"
        "assert all(r.passed for r in run_identity_suite(3000))\n"
    )
    subprocess.run([sys.executable, "-c", code], check=True)


def test_identity_suite_under_python_backend():
    from jparity.census import run_identity_suite

    with _kernel.use_backend("python"):
        assert all(r.passed for r in run_identity_suite(20000))
