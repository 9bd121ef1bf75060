"""The compiled and pure search kernels must be interchangeable."""

import random

import pytest

from simdom._kernels import (
    COMPILED_AVAILABLE,
    COMPILED_MAX_VERTICES,
    DEFAULT_BACKEND,
    kernel_for,
    pure,
)
from simdom.generators import random_graph

needs_compiled = pytest.mark.skipif(
    not COMPILED_AVAILABLE, reason="compiled kernel not built"
)


def test_pure_kernel_small_cases():
    # single edge: the degree-1 rule takes the neighbour of vertex 0
    mask, nodes = pure.vc_search(2, [0b10, 0b01])
    assert mask == 0b10
    assert nodes >= 1
    # triangle: two vertices
    mask, _ = pure.vc_search(3, [0b110, 0b101, 0b011])
    assert bin(mask).count("1") == 2
    # empty graph
    mask, _ = pure.vc_search(3, [0, 0, 0])
    assert mask == 0


def test_pure_kernel_node_budget():
    masks = [0b111111 & ~(1 << i) for i in range(6)]  # K6
    with pytest.raises(RuntimeError):
        pure.vc_search(6, masks, 1)


@needs_compiled
def test_default_backend_prefers_compiled():
    assert DEFAULT_BACKEND == "compiled"


@needs_compiled
def test_kernels_agree_exactly():
    rng = random.Random(123)
    for _ in range(60):
        n = rng.randint(0, 14)
        m = rng.randint(0, n * (n - 1) // 2) if n > 1 else 0
        g = random_graph(n, m, seed=rng.randint(0, 10**6)) if n else None
        masks = g.adjacency_masks() if g else []
        want = pure.vc_search(n, masks)
        got = kernel_for(n, prefer="compiled")(n, masks)
        assert got == want, f"kernel divergence on n={n} masks={masks}"


@needs_compiled
def test_compiled_kernel_budget_matches_pure():
    g = random_graph(10, 30, seed=5)
    masks = g.adjacency_masks()
    with pytest.raises(RuntimeError):
        kernel_for(10, prefer="compiled")(10, masks, 1)


def test_kernel_for_validation():
    assert kernel_for(5, prefer="pure") is pure.vc_search
    with pytest.raises(ValueError):
        kernel_for(5, prefer="nope")
    if COMPILED_AVAILABLE:
        with pytest.raises(ValueError):
            kernel_for(COMPILED_MAX_VERTICES + 1, prefer="compiled")
        # auto falls back to pure above the word size
        assert kernel_for(COMPILED_MAX_VERTICES + 1) is pure.vc_search


@needs_compiled
def test_compiled_rejects_oversized_instances():
    with pytest.raises(ValueError):
        kernel_for(64, prefer="compiled")(65, [0] * 65)
