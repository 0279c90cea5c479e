"""Admissible words, Adem rewriting, and the doubling isomorphism
between the classical Steenrod algebra and the even subalgebra.
"""

from isoadams import adem, milnor
from isoadams.adem import CLASSICAL, EVEN, GENERALIZED
from isoadams.milnor import Bidegree


def main():
    print("== Adem rewriting ==")
    for word, flavor in [((1, 1), CLASSICAL), ((2, 2), CLASSICAL), ((2, 2), EVEN), ((2, 4, 2), CLASSICAL)]:
        print(f"  {adem.format_word(word):12s} [{flavor}] -> {adem.adem_reduce(word, flavor)}")

    print("\n== the doubling map Sq^r -> Sq^2r is a ring map ==")
    u, v = (2, 1), (3,)
    lhs = adem.double(adem.adem_reduce(u + v, CLASSICAL))
    rhs = adem.multiply_words(
        adem.double(adem.adem_reduce(u, CLASSICAL)), adem.double(adem.adem_reduce(v, CLASSICAL))
    )
    print(f"  double({adem.format_word(u)} * {adem.format_word(v)}) = {lhs}")
    print(f"  double * double                = {rhs}")

    print("\n== the binomial identity behind it ==")
    for r, s, t in [(1, 1, 0), (2, 2, 1), (3, 5, 1)]:
        print(f"  (r,s,t)={r,s,t}: binom(2s-2t-1, 2r-4t) = binom(s-t-1, r-2t) mod 2 ->", adem.verify_lucas(r, s, t))

    print("\n== squares in the Milnor basis ==")
    for r in range(0, 8):
        print(f"  Sq{r} = {adem.sq_to_milnor(r)}")

    print("\n== Milnor operations from the square recursion ==")
    for i in range(4):
        print(f"  Q{i} via Sq-recursion: {adem.q_from_squares(i)}  (matches Q{i}: {adem.q_from_squares(i) == milnor.Q(i)})")

    print("\n== admissible word counts match Milnor dimensions ==")
    print("  p:  generalized-admissible vs Milnor basis, per bidegree")
    for p in range(0, 11):
        row = []
        for q in range(p + 1):
            w = len(adem.admissible_words(GENERALIZED, Bidegree(p, q)))
            m = len(milnor.basis(p, q))
            if w or m:
                row.append(f"(q={q}: {w}={m})")
        print(f"  {p:2d}: " + " ".join(row))


if __name__ == "__main__":
    main()
