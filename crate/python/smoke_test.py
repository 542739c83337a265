#!/usr/bin/env python3
"""End-to-end smoke test for the orbihom_py extension module.

Expects the extension to have been built first:

    cargo build -p orbihom-py --release

The compiled cdylib is copied next to this file as `orbihom_py.so` (refreshed
whenever the build output is newer), then imported and exercised against a
handful of known values.
"""

import pathlib
import shutil
import sys

HERE = pathlib.Path(__file__).resolve().parent
ROOT = HERE.parent


def ensure_module():
    built = ROOT / "target" / "release" / "liborbihom_py.so"
    local = HERE / "orbihom_py.so"
    if built.exists() and (
        not local.exists() or built.stat().st_mtime > local.stat().st_mtime
    ):
        shutil.copy2(built, local)
    if not local.exists():
        sys.exit("orbihom_py.so not found; run: cargo build -p orbihom-py --release")
    sys.path.insert(0, str(HERE))


def dims_of(table):
    return {(e["q"], e["d"]): e["dim"] for e in table["entries"]}


def main():
    ensure_module()
    import orbihom_py as oh

    # Group construction and bookkeeping.
    swap_torus = oh.Group.torus([([2, 1], [0, 0])])
    assert swap_torus.order() == 2 and swap_torus.class_count() == 2

    # Periodic theory of the reflection action on the 2-torus: each class
    # contributes one even and one odd dimension.
    hp = oh.hp(swap_torus)
    assert hp["totals"]["hp"] == [2, 2], hp["totals"]
    assert [c["hp"] for c in hp["per_class"]] == [[1, 1], [1, 1]]
    assert hp["per_class"][0]["fixed_set"]["kind"] == "torus"

    # A shifted involution has no fixed points, so only the identity class
    # survives.
    shifted = oh.Group.torus([([1], ["1/2"])])
    hp2 = oh.hp(shifted)
    assert hp2["totals"]["hp"] == [1, 1], hp2["totals"]
    assert hp2["per_class"][1]["fixed_set"]["kind"] == "empty"

    # Closed form for the affine Weyl family, cross-checked against the
    # general machinery at n = 4.
    w = oh.weyl(4, check=True)
    assert w["totals"] == [7, 7] and w["cross_check"] is True, w
    assert len(w["per_partition"]) == 5
    assert w["per_partition"][0]["partition"] == [4]
    assert [oh.weyl(n)["totals"] for n in range(1, 6)] == [
        [1, 1], [2, 2], [4, 4], [7, 7], [12, 12],
    ]

    # Graded Hochschild homology of the swap action on the plane, with the
    # bar-complex oracle turned on.
    swap = oh.Group.linear([[[0, 1], [1, 0]]])
    hh = oh.hh(swap, q_max=2, d_max=3, oracle=True)
    assert all(c["oracle_checked"] for c in hh["per_class"])
    ident = dims_of(hh["per_class"][0]["hh"])
    refl = dims_of(hh["per_class"][1]["hh"])
    assert ident[(0, 2)] == 2 and ident[(1, 1)] == 1, ident
    # The twist fixes a line on which the centralizer acts trivially, so the
    # reflection class carries one form in every admissible bidegree.
    assert all(refl[(q, d)] == 1 for q in (0, 1) for d in range(q, 4)), refl
    assert (2, 2) not in refl or refl[(2, 2)] == 0, refl

    # Twisted Hochschild homology straight from the bar complex.
    line = dims_of(oh.twisted_hh([[1]], q_max=2, d_max=2))
    assert line[(0, 0)] == 1 and line[(1, 1)] == 1 and line.get((2, 2), 0) == 0
    sign = dims_of(oh.twisted_hh([["-1"]], q_max=2, d_max=2))
    assert sign[(0, 0)] == 1 and sum(sign.values()) == 1, sign

    # Cyclic homology is only defined here for linear actions; the torus
    # route must raise a usable error.
    try:
        oh.hc(swap_torus)
    except ValueError:
        pass
    else:
        raise AssertionError("hc on a torus action should raise ValueError")

    # Full invariant suite through the bindings.
    lines = oh.run_selftest()
    assert sum(1 for l in lines if l.startswith("[PASS]")) >= 14, lines

    print("smoke test passed")


if __name__ == "__main__":
    main()
