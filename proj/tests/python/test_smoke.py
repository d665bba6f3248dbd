"""Smoke test of the python bindings: every exposed entry point runs and the
reports come back clean with exact p/q scalars."""

import sys

import _torvex


def main():
    names = _torvex.builtin_algebras()
    assert set(names) >= {"sl2", "sl3", "osp12"}, names

    for name in names:
        rep = _torvex.verify_algebra(name)
        assert rep["passed"], rep
        assert rep["checked"] > 0, rep
        assert rep["violations"] == [], rep

    inst = _torvex.Instance(algebra="sl2", n=2, level="1/2", weight=["1"], depth=3)
    assert inst.level == "1/2"

    for rep in (
        inst.verify_affine(window=1, sample_depth=2),
        inst.verify_fock(depth=2, window=1),
        inst.verify_toroidal(window=1, jacobi_window=1),
        inst.verify_action(window=1, sample_depth=1),
        inst.verify_sector([1], window=1, sample_depth=1),
    ):
        assert rep["passed"], rep
        assert rep["checked"] > 0, rep

    rows = inst.weight_table(sample_depth=2)
    assert rows, "weight table is empty"
    for row in rows:
        assert row["dim"] == row["counted_dim"], row
        assert row["certified"], row
        assert row["k_eigs"][-1] == "1/2", row  # exact rational level

    print("python smoke: ok")


if __name__ == "__main__":
    sys.exit(main())
