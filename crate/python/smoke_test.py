"""Smoke test for the compiled extension.

Build and run from the repository root:

    cargo build --release -p bumpless-py --features extension-module
    cp target/release/libbumpless.so python/bumpless.so
    python3 python/smoke_test.py
"""

import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import bumpless  # noqa: E402

WORKED = "...r--/..rjr-/.rxr+-/r+-+jr/||r+-+/||||r+"


def main():
    d = bumpless.Mbpd(WORKED)
    assert d.n == 6
    assert d.weight() == [3, 2, 2, 0, 0, 0]

    b, labels = bumpless.phi_trace(d)
    assert str(b) == "(3,4),(3,5),(2,2),(2,5),(1,1),(1,3),(1,5)"
    assert labels[0] == ["DC", "TC"]
    assert b.crossings() == sorted([(3, 2), (3, 3), (2, 1), (2, 4), (1, 1), (1, 3), (1, 5)])
    assert bumpless.psi(b) == d

    (i, a), rest = bumpless.row_pop(d)
    assert (i, a) == (3, 4)
    assert bumpless.row_push(rest, 3, 4) == d

    e, label = bumpless.e_move(bumpless.Mbpd.identity(2), 1)
    assert e.compact() == ".r/r+" and label == "IS"
    back, label = bumpless.f_move(e, 1)
    assert back == bumpless.Mbpd.identity(2) and label == "TB"

    grids = bumpless.all_mbpds(4)
    assert len(grids) == 64
    assert {bumpless.phi(g) for g in grids} == set(bumpless.all_rcps(4))

    assert bumpless.grothendieck([1, 3, 2]) == "x1 + x2 + b*x1*x2"
    for method in ("pd", "rcp", "mbpd"):
        assert bumpless.grothendieck([1, 4, 3, 2], method) == bumpless.grothendieck([1, 4, 3, 2])
    assert bumpless.grothendieck_terms([2, 1]) == [(0, [1, 0], 1)]

    try:
        bumpless.Mbpd("r|/|r")
    except ValueError as exc:
        assert "edge" in str(exc)
    else:
        raise AssertionError("invalid grid accepted")

    print("python smoke test passed")


if __name__ == "__main__":
    main()
