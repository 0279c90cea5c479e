"""The dual Hopf algebra: exterior taus times polynomial xis.

Shows generator coproducts, their multiplicative extension, degree
balance, and how the pairing recovers algebra products.
"""

from isoadams import milnor


def show(mono):
    e, r = mono
    taus = " ".join(f"tau{i}" for i in e)
    xis = " ".join(f"xi{j}^{x}" if x > 1 else f"xi{j}" for j, x in enumerate(r, 1) if x)
    return (taus + " " + xis).strip() or "1"


def main():
    print("== generator coproducts ==")
    for mono in [((), (1,)), ((0,), ()), ((), (0, 1)), ((1,), ())]:
        print(f"  psi({show(mono)}):")
        for left, right in sorted(milnor.dual_coproduct(mono)):
            print(f"      {show(left)} (x) {show(right)}")

    print("\n== degree balance on a bigger monomial ==")
    mono = ((0,), (2, 1))
    d = milnor.mono_degree(mono)
    print(f"  {show(mono)} has bidegree {d}")
    for left, right in sorted(milnor.dual_coproduct(mono)):
        dl, dr = milnor.mono_degree(left), milnor.mono_degree(right)
        assert dl + dr == d
        print(f"    {show(left):16s} (x) {show(right):16s}  {dl} + {dr}")

    print("\n== dimensions agree with the algebra side ==")
    for p in range(0, 9):
        dims = [len(milnor.dual_basis(p, q)) for q in range(p + 1)]
        print(f"  p={p}: dual dims by weight {dims}")


if __name__ == "__main__":
    main()
