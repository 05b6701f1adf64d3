"""Smoke test for the pytrimtor extension module.

Build and install it first:
    pip install --no-build-isolation ./crates/python
"""

import pytrimtor as tt

EXAMPLE = [
    ["0", "0", "0", "x", "z"],
    ["0", "0", "x", "z", "y"],
    ["0", "x", "0", "y", "0"],
    ["x", "z", "y", "0", "0"],
    ["z", "y", "0", "0", "0"],
]


def main():
    t = tt.SkewMatrix(EXAMPLE, p=2)
    assert t.generators() == ["y^2", "y*z", "x*y + z^2", "x*z", "x^2"]
    assert all(ok for _, _, ok in t.check_identities())
    assert tt.SkewMatrix.from_json(t.to_json()).generators() == t.generators()

    res = tt.TrimmedResolution(t, 1)
    assert res.ranks() == [1, 7, 8, 2]
    assert res.basis(3) == ["g", "w1"]
    assert res.q2() == [["0"], ["x"], ["0"]]
    assert res.is_complex() and res.diagrams_commute()
    assert res.minimal_ranks() == [1, 5, 6, 2]
    assert res.product("e2", "e3") == [("f4", "z"), ("f5", "x"), ("v1_13", "1")]
    pairs, violations = res.verify_leibniz()
    assert pairs > 0 and violations == 0

    rep = tt.classify_trimming(t, 1)
    assert rep.format == (1, 5, 6, 2) and rep.tor_class == "NotG" and not rep.is_g

    odd, trim = tt.family("odd", 1)
    rep = tt.classify_trimming(odd, trim)
    assert (rep.format, rep.tor_class, rep.r) == ((1, 8, 11, 4), "G(2)", 2)
    assert tt.TrimmedResolution(odd, trim).tor_g_rank() == 2

    records = tt.scan(3, 7, 5, seed=1)
    assert len(records) == 35
    for rec in records:
        if rec["r"] is not None:
            gap = rec["l"] - rec["r"]
            assert 2 * rec["t"] <= gap <= 3 * rec["t"] and gap != 3 * rec["t"] - 1

    assert tt.sigma3(1, 2, 3) in (-1, 1) and tt.sigma5(1, 1, 2, 3, 4) == 0

    try:
        tt.SkewMatrix.from_json('{"field": {"kind": "prime", "p": 3}, "size": 5, "upper": [[2, 4, "1 + x"]]}')
    except ValueError as e:
        assert "(2, 4)" in str(e)
    else:
        raise AssertionError("constant entry accepted")

    print("pytrimtor smoke test: ok")


if __name__ == "__main__":
    main()
