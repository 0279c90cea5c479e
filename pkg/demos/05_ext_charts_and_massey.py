"""Minimal resolutions, Ext charts, the cobar oracle, Yoneda products,
and triple Massey products for the classical Steenrod algebra.
"""

from isoadams import charts, cobar, homological as H
from isoadams.homological import ChartClass


def main():
    print("== minimal resolution of the ground field, classical algebra ==")
    res = H.resolve(H.algebra_for("classical", 16), smax=8, pmax=14)
    for s in range(5):
        degs = sorted(d[0] for d in res.gens[s])
        print(f"  F_{s}: generators at t = {degs}")

    chart = H.ext_chart_field(res)
    print("\n== the Adams chart (x = stem, y = filtration) ==")
    print(charts.to_ascii(chart))

    print("== the independent cobar oracle agrees ==")
    oracle = cobar.cobar_ext(cobar.dual_coalgebra("classical"), smax=8, pmax=12)
    bad = [
        (s, t)
        for s in range(9)
        for t in range(13)
        if chart.dim(s, (t,)) != oracle.dim(s, (t,))
    ]
    print(f"  mismatches in s<=8, t<=12: {bad}")

    print("\n== Yoneda products among the h classes ==")
    hs = {i: ChartClass(1, (2**i,), 1) for i in range(4)}
    for i in range(3):
        for j in range(i, 4):
            if 2**i + 2**j > 12:
                continue
            p = H.yoneda_product(res, hs[i], hs[j])
            print(f"  h{i} h{j} = {'0' if p.is_zero() else f'nonzero at (s={p.s}, t={p.deg[0]})'}")

    print("\n== the Massey product <h0, h1, h0> ==")
    got = H.massey_triple(res, hs[0], hs[1], hs[0])
    h1sq = H.yoneda_product(res, hs[1], hs[1])
    print(f"  representative cell (s={got.s}, t={got.deg[0]}), equals h1^2: {got.bits == h1sq.bits}")
    print(f"  indeterminacy basis: {got.indeterminacy}")


if __name__ == "__main__":
    main()
