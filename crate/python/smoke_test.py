"""Smoke test for the depthlab_py extension.

Build it first, for example:
    cargo build --release -p depthlab-py --features extension-module
    cp target/release/libdepthlab_py.so python/depthlab_py.so
or install it with `pip install ./crates/py`.
"""

import json
import os
import sys

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import depthlab_py as dl  # noqa: E402


def main() -> None:
    a5 = dl.Group(5, [[1, 2, 0, 3, 4], [1, 2, 3, 4, 0]])
    assert a5.order == 60, a5.order
    c5 = dl.Subgroup(a5, [[1, 2, 3, 4, 0]])
    inc = dl.Inclusion(a5, c5)
    assert not inc.is_normal()
    assert inc.combinatorial_depth() == 3
    assert inc.ordinary_depth() == 3
    assert inc.core_bound()["disjoint_conjugate"] is True

    table = a5.character_table()
    assert table.degrees == [1, 3, 3, 4, 5], table.degrees
    again = dl.CharacterTable.from_json(table.to_json())
    assert again.num_classes == 5
    bad = json.loads(table.to_json())
    bad["irreducibles"][1][1]["coeffs"][0] = "7"
    try:
        dl.CharacterTable.from_json(json.dumps(bad))
    except RuntimeError:
        pass
    else:
        raise AssertionError("a corrupted table was accepted")

    p = dl.SylowModel(0)
    assert p.mul((1, 0, 0), (1, 0, 0)) == (2, 1, 2)
    assert p.verify(exhaustive=True)["passed"] is True

    assert dl.ngp_orthogonality(1)["classes"] == 34
    cert = dl.ngp_depth(1)
    assert cert["d"] == 5, cert
    assert dl.certificate("b1", 27)["holds"] is True
    assert dl.certificate("b1", 3)["verdict"] == "out-of-domain"
    assert all(c["holds"] for c in dl.r3_props()["clauses"])

    try:
        dl.Group(3, [[0, 0, 1]])
    except ValueError:
        pass
    else:
        raise AssertionError("a non-bijection was accepted")

    print("depthlab_py smoke test passed")


if __name__ == "__main__":
    main()
