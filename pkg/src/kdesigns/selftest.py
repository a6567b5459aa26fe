"""Built-in checks tying the fixtures, constructions, and verifier together.

Each check rebuilds or reloads a design and verifies it from scratch, so a
passing selftest means the closed-form parameters, the enumerators, and
the brute-force verifier all agree on every bundled example.
"""

from __future__ import annotations

import sys
from typing import Callable, IO

from .constructions import (
    build_k5_special,
    build_kc,
    build_kp,
    imbalance_witness,
    kc_parameters,
    kp_parameters,
)
from .design import (
    BALANCED,
    COMPLETE,
    TParams,
    is_symmetric,
    verify_bibd,
    verify_t_design,
)
from .exploded import check_kp_equals_exploded_kc
from .fixtures import FIXTURES, load_fixture

__all__ = ["run_selftest"]


def _check_fixture(name: str) -> None:
    expect = FIXTURES[name]
    design = load_fixture(name)
    report = verify_bibd(design)
    assert report.verdict == BALANCED, f"{name}: {report.verdict} ({report.witness})"
    assert report.params == expect.params, f"{name}: {report.params} != {expect.params}"
    assert is_symmetric(report.params) == expect.symmetric
    if expect.t is not None:
        result = verify_t_design(design, expect.t)
        assert result == TParams(expect.t, expect.lambda_t), f"{name}: {result}"


def _check_k5() -> None:
    design = build_k5_special()
    assert design.num_blocks == 30, design.num_blocks
    result = verify_t_design(design, 3)
    assert result == TParams(3, 1), result


def _check_kp(khat: int) -> None:
    report = verify_bibd(build_kp(khat))
    assert report.verdict == BALANCED, report
    assert report.params == kp_parameters(khat), (report.params, kp_parameters(khat))


def _check_kc(khat: int) -> None:
    report = verify_bibd(build_kc(khat))
    expected_verdict = COMPLETE if khat == 3 else BALANCED
    assert report.verdict == expected_verdict, report
    assert report.params == kc_parameters(khat), (report.params, kc_parameters(khat))


def _check_explosion(khat: int) -> None:
    assert check_kp_equals_exploded_kc(khat)


def _check_witness_sign_law() -> None:
    for khat in (3, 4, 5):
        for n in range(max(khat + 1, 4), 9):
            w = imbalance_witness(n, khat)
            diff = w.lambda_adj - w.lambda_non
            ref = n - (2 * khat - 1)
            assert (diff > 0) == (ref > 0) and (diff < 0) == (ref < 0), w


def _checks() -> list[tuple[str, Callable[[], None]]]:
    checks: list[tuple[str, Callable[[], None]]] = []
    for name in FIXTURES:
        checks.append((f"fixture {name}", lambda name=name: _check_fixture(name)))
    checks.append(("k5 special 3-design", _check_k5))
    for khat in (2, 3, 4):
        checks.append((f"path design khat={khat}", lambda khat=khat: _check_kp(khat)))
    for khat in (3, 4, 5):
        checks.append((f"cycle design khat={khat}", lambda khat=khat: _check_kc(khat)))
    for khat in (2, 3, 4):
        checks.append(
            (f"exploded cycle design equals path design khat={khat}",
             lambda khat=khat: _check_explosion(khat))
        )
    checks.append(("imbalance witness sign law n=4..8", _check_witness_sign_law))
    return checks


def run_selftest(out: IO[str] = sys.stdout) -> bool:
    """Run every bundled check, print one line per check, return overall success."""
    ok = True
    for name, check in _checks():
        try:
            check()
        except Exception as exc:  # noqa: BLE001 - report and keep going
            ok = False
            out.write(f"FAIL {name}: {exc}\n")
        else:
            out.write(f"ok   {name}\n")
    out.write("selftest passed\n" if ok else "selftest FAILED\n")
    return ok
