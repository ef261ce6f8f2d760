"""Smoke test for the preproj_py extension module.

Build it first:  pip install --no-build-isolation -e crates/python
"""

import preproj_py


def main():
    a = preproj_py.Algebra("e6")
    assert a.dim == 156 and a.h == 12 and a.top_degree == 10, a

    x = a.parse("a3* a3")
    y = a.parse("a2* a2")
    assert (x * y).degree() == 4
    assert str(a.parse("e3") * x) == str(x)
    assert x.star().star() == x
    assert x.eta().eta() == x
    assert a.multiply("a1", "a2") == str(a.parse("a1 a2"))

    names = [n for n, _, _ in a.center()]
    assert names[:3] == ["z0", "z6", "z8"], names
    assert all(a.parse(text).is_central() for _, _, text in a.center())

    assert a.hh_dims(2) == [(-2, 2)]
    assert a.m_alpha() == [["-8", "-4"], ["-4", "-8"]]
    assert a.m_beta() == [["0", "-6"], ["6", "0"]]

    table = {(l, r): (res, prov) for l, r, res, prov in a.product_table()}
    res, prov = table[("theta0", "f1")]
    assert res == [("h1", "-8/1"), ("h2", "-4/1")] and prov == "chain-formula", res

    d5 = preproj_py.Algebra("d5")
    assert d5.m_alpha() == [["-4"]]
    failed = [c for c in d5.verify() if not c[2]]
    assert not failed, failed

    try:
        preproj_py.Algebra("a5")
    except ValueError:
        pass
    else:
        raise AssertionError("a5 accepted")
    print("python smoke test passed")


if __name__ == "__main__":
    main()
