"""Acceptance criteria, one check per criterion.

Each ``criterion_N`` returns ``(passed, detail)``. Under pytest the verdict
lines are collected in ``RESULTS`` and printed in the terminal summary; run
this file directly to print them without pytest.
"""
import math
import time

import numpy as np
import pytest

from bicomplex import (
    E1, BicomplexMatrix, BicomplexScalar, NotCP, NotProduct, cholesky, euclidean_norm,
    is_completely_positive, is_hyperbolic_positive, is_state, kraus_decomposition,
    map_from_kraus, mat_inverse, quadratic_form, random_gram, random_state, rank_one_decomposition,
    recover_factors, tensor_idempotent, tensor_maps, trace,
)
from bicomplex.choi import choi_matrix, random_kraus, transpose_map
from bicomplex.jsonio import load_matrix
from bicomplex.dsp import OpCounter, apply_direct, apply_factored
from bicomplex.positivity import METHODS
from bicomplex.tensor import tensor_cartesian

from conftest import (
    DATA, hermitian_with_negative, random_bc_matrix, random_bc_vector, random_complex,
    well_conditioned,
)

RESULTS: dict[int, str] = {}
SEED = 7


def _report(number, title, passed, detail):
    line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
    RESULTS[number] = line
    print(line)
    return passed


def _bell_pattern():
    c = np.zeros((4, 4))
    c[np.ix_([0, 3], [0, 3])] = 0.5
    return BicomplexMatrix(c, c)


def _units_diff(phi, psi):
    return max(float(np.max(np.abs(f - g))) for f, g in zip(phi.components, psi.components))


def criterion_1():
    start = time.perf_counter()
    a, b = load_matrix(DATA / "example_A.json"), load_matrix(DATA / "example_B.json")
    golden = load_matrix(DATA / "example_tensor.json")
    golden_idem = load_matrix(DATA / "example_tensor_idempotent.json")
    diffs = []
    for route in (tensor_cartesian, tensor_idempotent):
        out = route(a, b)
        x1, x2 = out.cartesian
        # The printed entries are Gaussian integers.
        rounded = BicomplexMatrix.from_cartesian(np.round(x1.real) + 1j * np.round(x1.imag),
                                                 np.round(x2.real) + 1j * np.round(x2.imag))
        diffs += [out.max_component_diff(rounded), out.max_component_diff(golden),
                  out.max_component_diff(golden_idem)]
    elapsed = time.perf_counter() - start
    worst = max(diffs)
    return worst <= 1e-12 and elapsed < 1.0, f"max diff {worst:.1e}, {elapsed * 1e3:.1f} ms"


def criterion_2():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(200):
        n1, m1, n2, m2 = (int(v) for v in rng.integers(1, 5, 4))
        a, b = random_bc_matrix(rng, n1, m1), random_bc_matrix(rng, n2, m2)
        worst = max(worst, tensor_cartesian(a, b).max_component_diff(tensor_idempotent(a, b)))
    return worst <= 1e-12, f"200 pairs, max diff {worst:.1e}"


def criterion_3():
    rng = np.random.default_rng(SEED)
    disagreements = witnesses_bad = 0
    for _ in range(100):
        n = int(rng.integers(1, 6))
        g = random_gram(n, int(rng.integers(1, n + 1)), seed=int(rng.integers(1 << 31)))
        if not all(is_hyperbolic_positive(g, method=m) for m in METHODS):
            disagreements += 1
        for _ in range(50):
            q = quadratic_form(g, random_bc_vector(rng, n))
            ok = abs(q.l1.imag) <= 1e-10 * (1 + abs(q.l1)) and abs(q.l2.imag) <= 1e-10 * (1 + abs(q.l2))
            if not (ok and q.l1.real >= -1e-10 and q.l2.real >= -1e-10):
                witnesses_bad += 1
    for _ in range(100):
        h = hermitian_with_negative(rng, int(rng.integers(1, 6)))
        if any(is_hyperbolic_positive(h, method=m) for m in METHODS):
            disagreements += 1
    passed = disagreements == 0 and witnesses_bad == 0
    return passed, f"{disagreements} disagreements, {witnesses_bad} witnesses outside D+"


def criterion_4():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        n = int(rng.integers(1, 6))
        g = random_gram(n, int(rng.integers(1, n + 1)), seed=int(rng.integers(1 << 31)))
        for lower in (False, True):
            t = cholesky(g, lower=lower)
            worst = max(worst, _frob_diff(t.star_transpose() @ t, g))
        total = BicomplexMatrix.zeros(n)
        for v in rank_one_decomposition(g):
            total = total + v.outer_star()
        worst = max(worst, _frob_diff(total, g))
    return worst <= 1e-10, f"max Frobenius residual {worst:.1e}"


def _frob_diff(a, b):
    return float(max(np.linalg.norm(a.c1 - b.c1), np.linalg.norm(a.c2 - b.c2)))


def criterion_5():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        n, m = (int(v) for v in rng.integers(1, 4, 2))
        a, a2, c = (well_conditioned(rng, n) for _ in range(3))
        b, d = well_conditioned(rng, m), well_conditioned(rng, m)
        z = BicomplexScalar(*random_complex(rng, 2))
        checks = [
            tensor_idempotent(a + a2, b).max_component_diff(
                tensor_idempotent(a, b) + tensor_idempotent(a2, b)),
            tensor_idempotent(a * z, b).max_component_diff(tensor_idempotent(a, b * z)),
            tensor_idempotent(a @ c, b @ d).max_component_diff(
                tensor_idempotent(a, b) @ tensor_idempotent(c, d)),
            mat_inverse(tensor_idempotent(a, b)).max_component_diff(
                tensor_idempotent(mat_inverse(a), mat_inverse(b))),
            mat_inverse(a, "componentwise").max_component_diff(mat_inverse(a, "cartesian")),
        ]
        worst = max(worst, *checks)
    return worst <= 1e-9, f"100 instances, max violation {worst:.1e}"


def criterion_6():
    rng = np.random.default_rng(SEED)
    failures, worst = 0, 0.0
    for _ in range(50):
        n, m = (int(v) for v in rng.integers(1, 5, 2))
        a = random_state(n, seed=int(rng.integers(1 << 31)))
        b = random_state(m, seed=int(rng.integers(1 << 31)))
        p = tensor_idempotent(a, b)
        tr = trace(p)
        worst = max(worst, abs(tr.l1 - 1), abs(tr.l2 - 1))
        failures += not is_state(p, tol=1e-12)
    return failures == 0 and worst <= 1e-12, f"{failures} failures, max |trace - 1| {worst:.1e}"


def criterion_7():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(50):
        a = random_state(2, seed=int(rng.integers(1 << 31)))
        b = random_state(3, seed=int(rng.integers(1 << 31)))
        ra, rb = recover_factors(tensor_idempotent(a, b), 2, 3)
        # States already satisfy the trace-1 gauge on B.
        worst = max(worst, ra.max_component_diff(a), rb.max_component_diff(b))
    try:
        recover_factors(_bell_pattern(), 2, 2)
        residual = 0.0
    except NotProduct as exc:
        residual = exc.residual
    passed = worst <= 1e-8 and residual > 1e-3
    return passed, f"max factor error {worst:.1e}, Bell residual {residual:.3f}"


def criterion_8():
    rng = np.random.default_rng(SEED)
    worst, not_cp = 0.0, 0
    for _ in range(50):
        n, m, r = (int(v) for v in rng.integers(1, 4, 3))
        phi = map_from_kraus(random_kraus(n, m, r, seed=int(rng.integers(1 << 31))))
        not_cp += not is_completely_positive(phi)
        worst = max(worst, _units_diff(map_from_kraus(kraus_decomposition(phi)), phi))
    t = transpose_map(2)
    eig_min = min(np.linalg.eigvalsh(c)[0] for c in choi_matrix(t).components)
    try:
        kraus_decomposition(t)
        rejected = False
    except NotCP:
        rejected = not is_completely_positive(t)
    tensor_ok = all(
        is_completely_positive(tensor_maps(map_from_kraus(random_kraus(2, 2, 2, seed=s)),
                                           map_from_kraus(random_kraus(3, 2, 2, seed=s + 1))))
        for s in range(5))
    passed = not_cp == 0 and worst <= 1e-8 and rejected and abs(eig_min + 1) <= 1e-10 and tensor_ok
    return passed, (f"{not_cp} false rejections, Kraus error {worst:.1e}, "
                    f"transpose min eigenvalue {eig_min:.12f}, tensor CP {tensor_ok}")


def criterion_9():
    lhs = euclidean_norm(E1 * E1)
    rhs = math.sqrt(2) * euclidean_norm(E1) ** 2
    target = 1 / math.sqrt(2)
    sharp = abs(lhs - target) <= 1e-15 and abs(rhs - target) <= 1e-15
    rng = np.random.default_rng(SEED)
    violations = 0
    for _ in range(1000):
        z, w = (BicomplexScalar(*random_complex(rng, 2)) for _ in range(2))
        bound = math.sqrt(2) * euclidean_norm(z) * euclidean_norm(w)
        violations += euclidean_norm(z * w) > bound * (1 + 1e-12)
    return sharp and violations == 0, f"|e1 e1| = {lhs!r}, {violations}/1000 violations"


def criterion_10():
    rng = np.random.default_rng(SEED)
    worst = 0.0
    for _ in range(100):
        s, r = (int(v) for v in rng.integers(1, 7, 2))
        a, b = random_bc_matrix(rng, s), random_bc_matrix(rng, r)
        x = random_bc_vector(rng, s * r)
        worst = max(worst, apply_factored(a, b, x).max_component_diff(apply_direct(a, b, x)))
    fast, slow = OpCounter(), OpCounter()
    a, b, x = random_bc_matrix(rng, 8), random_bc_matrix(rng, 8), random_bc_vector(rng, 64)
    apply_factored(a, b, x, fast)
    apply_direct(a, b, x, slow)
    counts_ok = fast.complex_mults == [1024, 1024] and slow.complex_mults == [4096, 4096]
    return worst <= 1e-10 and counts_ok, (f"max diff {worst:.1e}, n=64 mults "
                                          f"{fast.complex_mults[0]} factored vs {slow.complex_mults[0]} direct")


CRITERIA = {
    1: ("golden tensor example", criterion_1),
    2: ("tensor route equivalence", criterion_2),
    3: ("positivity equivalence", criterion_3),
    4: ("factorizations", criterion_4),
    5: ("algebraic laws", criterion_5),
    6: ("state preservation", criterion_6),
    7: ("factor recovery", criterion_7),
    8: ("Choi and Kraus", criterion_8),
    9: ("norm sharpness", criterion_9),
    10: ("factored DSP product", criterion_10),
}


@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    title, check = CRITERIA[number]
    passed, detail = check()
    assert _report(number, title, passed, detail), detail


if __name__ == "__main__":
    for number, (title, check) in CRITERIA.items():
        _report(number, title, *check())
