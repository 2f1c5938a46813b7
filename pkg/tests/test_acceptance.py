"""Acceptance criteria, one check per criterion.

Each check returns (ok, detail).  Under pytest every criterion prints one
``criterion N: PASS|FAIL`` line to the terminal; ``python
tests/test_acceptance.py`` prints the same lines without pytest.
"""

import json
import sys
import time
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from vknot import (  # noqa: E402
    apply_move,
    canonical_key,
    classicality_certificate,
    compare_homology,
    enumerate_moves,
    homology_class,
    linking_matrix,
    parse,
    pseudo_hopf_decomposition,
    search_equivalent,
    serialize,
    surface_report,
)
from vknot.cli import main  # noqa: E402
from vknot.fixtures import load_fixtures  # noqa: E402
from vknot.generate import random_diagram, random_planar_diagram  # noqa: E402
from vknot.moves import R1_ADD, R1_REMOVE  # noqa: E402

from conftest import FIGURE_EIGHT, HOPF, KINK, PSEUDO_HOPF, TREFOIL, VIRTUAL_TREFOIL  # noqa: E402
from oracles import faces_by_positions  # noqa: E402

SEED = 20240517


def _report_json(code):
    import contextlib
    import io

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        rc = main(["report", "--json", code])
    return rc, json.loads(buf.getvalue())


def criterion_1():
    d = parse(PSEUDO_HOPF)
    linking_matrix(d)  # warm imports
    t0 = time.perf_counter()
    rc, rep = _report_json(PSEUDO_HOPF)
    elapsed = time.perf_counter() - t0
    m = rep["linking_matrix"]
    ok = rc == 0 and m[0][1] == 1 and m[1][0] == 0 and elapsed < 0.010
    return ok, f"Link(1,2)={m[0][1]} Link(2,1)={m[1][0]} in {elapsed * 1e3:.2f} ms"


def criterion_2():
    ph = classicality_certificate(parse(PSEUDO_HOPF))
    hopf = classicality_certificate(parse(HOPF))
    ok = ph.verdict == "non_classical" and ph.witness == (1, 2) and hopf.verdict == "inconclusive"
    return ok, f"pseudo-Hopf {ph.verdict} {ph.witness}; Hopf {hopf.verdict}"


def _random_move(rng, d):
    ms = enumerate_moves(d)
    return ms[int(rng.integers(len(ms)))]


def criterion_3():
    rng = np.random.default_rng(SEED)
    t0 = time.perf_counter()
    bad = 0
    n = 1200
    for _ in range(n):
        d = random_diagram(rng, int(rng.integers(0, 9)), int(rng.integers(1, 4)))
        m = _random_move(rng, d)
        r = apply_move(d, m)
        before, after = linking_matrix(d), linking_matrix(r)
        off = ~np.eye(d.n_components, dtype=bool)
        delta = np.diag(after - before)
        if (before[off] != after[off]).any():
            bad += 1
        elif m.kind in (R1_ADD, R1_REMOVE):
            bad += sorted(np.abs(delta).tolist()) != [0] * (len(delta) - 1) + [1]
        else:
            bad += bool(delta.any())
    elapsed = time.perf_counter() - t0
    return bad == 0 and elapsed < 30, f"{n} pairs, {bad} failures, {elapsed:.1f} s"


def _walk(rng, d, steps, cap):
    for _ in range(steps):
        ms = [m for m in enumerate_moves(d) if apply_move(d, m).n_crossings <= cap]
        if not ms:
            break
        d = apply_move(d, ms[int(rng.integers(len(ms)))])
    return d


def criterion_4():
    rng = np.random.default_rng(SEED + 4)
    n, agree, positives = 300, 0, 0
    for i in range(n):
        k = int(rng.integers(2, 4))
        a = random_diagram(rng, int(rng.integers(0, 7)), k)
        if i % 2:
            # a nearby diagram keeps the class; walk with moves while staying small
            b = _walk(rng, a, int(rng.integers(1, 4)), 6)
        else:
            b = random_diagram(rng, int(rng.integers(0, 7)), k)
        verdict = compare_homology(a, b) == "homologous"
        positives += verdict
        same = pseudo_hopf_decomposition(a).net_counts() == pseudo_hopf_decomposition(b).net_counts()
        agree += verdict == same
    return agree == n and 0 < positives < n, f"{agree}/{n} agree, {positives} homologous"


def _oracle_genus(d):
    # connected diagrams: one disk per crossing, two bands per crossing
    return (2 + d.n_crossings - faces_by_positions(d)) // 2


def criterion_5():
    fixtures = load_fixtures()
    expect = {
        TREFOIL: 0,
        fixtures["trefoil_right"].code: 0,
        FIGURE_EIGHT: 0,
        HOPF: 0,
        VIRTUAL_TREFOIL: 1,
        PSEUDO_HOPF: 1,
    }
    t0 = time.perf_counter()
    got = {code: surface_report(parse(code)).canonical_genus for code in expect}
    elapsed = time.perf_counter() - t0
    oracle = {code: _oracle_genus(parse(code)) for code in expect}
    ok = got == expect == oracle and elapsed < 1.0
    return ok, f"{sum(got[c] == expect[c] for c in expect)}/{len(expect)} genera, {elapsed * 1e3:.1f} ms"


def criterion_6():
    t0 = time.perf_counter()
    kink = search_equivalent(parse(KINK), parse("@"), 2, 3)
    ok_kink = kink.found and len(kink.sequence) == 1
    rng = np.random.default_rng(SEED + 6)
    found = replayed = 0
    pairs = 50
    for _ in range(pairs):
        a = random_diagram(rng, int(rng.integers(0, 4)), int(rng.integers(1, 3)))
        cap = a.n_crossings + 2
        b = _walk(rng, a, int(rng.integers(1, 4)), cap)
        res = search_equivalent(a, b, cap, 6)
        if res.found:
            found += 1
            end = res.sequence.replay()
            replayed += canonical_key(end) == canonical_key(b)
    elapsed = time.perf_counter() - t0
    ok = ok_kink and found == replayed == pairs and elapsed < 60
    return ok, f"kink steps={len(kink.sequence) if kink.found else None}; {found}/{pairs} found, {replayed} replayed, {elapsed:.1f} s"


def criterion_7():
    rng = np.random.default_rng(SEED + 7)
    n, bad = 1500, 0
    for i in range(n):
        if i % 3 == 0:
            d = random_planar_diagram(rng, int(rng.integers(1, 3)), 5)
        else:
            d = random_diagram(rng, int(rng.integers(0, 10)), int(rng.integers(1, 4)))
        text = serialize(d)
        bad += parse(text) != d or serialize(parse(text)) != text
    return bad == 0, f"{n} diagrams, {bad} mismatches"


def criterion_8():
    # Kauffman's knot is not classical only by an external slice criterion, which is
    # out of reach here; a single component never gives a linking-number witness.
    fixtures = load_fixtures()
    pending = all(fixtures[n].pending for n in ("kauffman_example", "carter_curve"))
    rng = np.random.default_rng(SEED + 8)
    singles = [parse(c) for c in (KINK, TREFOIL, VIRTUAL_TREFOIL, FIGURE_EIGHT, "@")]
    singles += [random_diagram(rng, int(rng.integers(0, 8)), 1) for _ in range(200)]
    verdicts = {classicality_certificate(d).verdict for d in singles}
    ok = pending and verdicts == {"inconclusive"}
    return ok, f"headline result not reproduced; {len(singles)} knots all {sorted(verdicts)}"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


def _line(i, ok, detail):
    return f"criterion {i}: {'PASS' if ok else 'FAIL'} ({detail})"


@pytest.mark.parametrize("index", range(1, len(CRITERIA) + 1))
def test_criterion(index, capsys):
    ok, detail = CRITERIA[index - 1]()
    with capsys.disabled():
        print("\n" + _line(index, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(i, *fn()) for i, fn in enumerate(CRITERIA, 1)]
    for r in results:
        print(_line(*r))
    sys.exit(0 if all(ok for _, ok, _ in results) else 1)
