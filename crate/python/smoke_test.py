#!/usr/bin/env python3
"""Smoke test for the pyclutters extension module.

Builds nothing itself: run `cargo build -p pyclutters --release` (or debug)
first. The script locates the compiled cdylib, exposes it as an importable
module, and replays a few known facts end to end.
"""

import shutil
import sys
import tempfile
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def import_pyclutters():
    candidates = [
        REPO / "target" / "release" / "libpyclutters.so",
        REPO / "target" / "debug" / "libpyclutters.so",
        REPO / "target" / "release" / "libpyclutters.dylib",
        REPO / "target" / "debug" / "libpyclutters.dylib",
    ]
    built = next((p for p in candidates if p.exists()), None)
    if built is None:
        sys.exit("build the extension first: cargo build -p pyclutters --release")
    stage = Path(tempfile.mkdtemp(prefix="pyclutters-"))
    shutil.copy2(built, stage / "pyclutters.so")
    sys.path.insert(0, str(stage))
    import pyclutters

    return pyclutters


def main():
    pc = import_pyclutters()

    # construction and set algebra
    fig1 = pc.figure_one()
    assert fig1.n == 7 and fig1.d == 3 and len(fig1) == 9
    assert fig1.closed_neighborhood([5, 6]) == [2, 5, 6, 7]
    assert fig1.is_clique([1, 2, 3, 4])
    assert fig1.complement().complement() == fig1

    # exactly {2,3} and {2,6} fail simpliciality
    non_simplicial = [
        e for e in fig1.submaximal_circuits() if not fig1.is_simplicial(e)
    ]
    assert non_simplicial == [[2, 3], [2, 6]], non_simplicial

    # chordality with a replayable certificate
    verdict, cert = pc.figure_two_c().chordality()
    assert verdict == "chordal"
    assert pc.figure_two_c().verify_certificate(cert)
    verdict, cert = pc.figure_two_d().chordality()
    assert verdict == "not-chordal" and cert is None

    # variant recognizers on the separating example
    separator = pc.Clutter(5, [[1, 2, 3], [1, 3, 4], [2, 3, 5], [3, 4, 5]])
    assert separator.chordality()[0] == "chordal"
    assert not separator.is_w_chordal()

    # Betti tables: the non-chordal example has regularity 4, index 1
    reg, index, projdim = pc.figure_two_d().betti_summary(characteristic=2)
    assert (reg, index, projdim) == (4, 1, 2)
    table = pc.figure_two_d().betti((3), engine="hochster")
    assert table[(0, 3)] == 4 and table[(1, 4)] == 1
    assert table == pc.figure_two_d().betti(3, engine="taylor")

    # the dunce hat: 39 circuits, linear resolution, no linear quotients
    dunce = pc.dunce_hat()
    assert len(dunce) == 39
    reg, index, _ = dunce.betti_summary(characteristic=2)
    assert reg == 5 and index is None

    # stability under deleting one circuit through the simplicial pair {5,6}
    report = fig1.stability_report([5, 6], [[2, 5, 6]], [2, 3])
    assert '"nonlinear_strands_equal": true' in report

    # seeded generation is reproducible
    a = pc.Clutter.random(6, 3, 0.5, 11)
    b = pc.Clutter.random(6, 3, 0.5, 11)
    assert a == b

    # text format round trip
    assert pc.Clutter.parse(fig1.serialize()) == fig1

    print("pyclutters smoke test: all checks passed")


if __name__ == "__main__":
    main()
