"""Milnor-basis arithmetic for the mod-2 generalized Steenrod algebra.

The algebra is presented directly off its dual: an exterior algebra on
generators tau_0, tau_1, ... tensored with a polynomial algebra on
xi_1, xi_2, ....  Monomials Q^E P^R (duals of tau^E xi^R) form the
canonical basis; elements are GF(2) sums, i.e. sets of monomials.

Bidegrees are written (q)[p] with p the topological degree and q the
weight:

    Q_i  : p = 2^(i+1) - 1,  q = 2^i - 1
    xi_j : p = 2^(j+1) - 2,  q = 2^j - 1   (per unit exponent, j >= 1)

Two independent multiplication routes are provided: `multiply` (matrix
product formula for the P-parts plus commutator shuffles for the Q's)
and `multiply_via_duality` (pairing against the dual coproduct), which
must agree everywhere.
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, NamedTuple


class Bidegree(NamedTuple):
    """(q)[p] bookkeeping; p = topological degree, q = weight."""

    p: int
    q: int

    def __add__(self, other):  # type: ignore[override]
        return Bidegree(self.p + other.p, self.q + other.q)

    def __sub__(self, other):
        return Bidegree(self.p - other.p, self.q - other.q)

    @property
    def offset(self) -> int:
        """Distance p - 2q from the slope-2 line."""
        return self.p - 2 * self.q

    def __str__(self) -> str:
        return f"({self.q})[{self.p}]"


# A monomial is (E, R): E a strictly increasing tuple of Q-indices,
# R the P-exponent tuple indexed from slot 1, trailing zeros trimmed.
Mono = tuple[tuple[int, ...], tuple[int, ...]]

UNIT_MONO: Mono = ((), ())


def trim(r: Iterable[int]) -> tuple[int, ...]:
    t = tuple(r)
    while t and t[-1] == 0:
        t = t[:-1]
    return t


def q_degree(i: int) -> Bidegree:
    return Bidegree(2 ** (i + 1) - 1, 2**i - 1)


def xi_degree(j: int) -> Bidegree:
    return Bidegree(2 ** (j + 1) - 2, 2**j - 1)


def mono_degree(m: Mono) -> Bidegree:
    e, r = m
    p = sum(2 ** (i + 1) - 1 for i in e) + sum(rj * (2 ** (j + 1) - 2) for j, rj in enumerate(r, start=1))
    q = sum(2**i - 1 for i in e) + sum(rj * (2**j - 1) for j, rj in enumerate(r, start=1))
    return Bidegree(p, q)


def mono_key(m: Mono):
    """Canonical order: lexicographic on (bidegree, E, R)."""
    return (mono_degree(m), m[0], m[1])


def bidegree(x) -> Bidegree:
    """Bidegree of a monomial or of a homogeneous element."""
    if isinstance(x, Element):
        return x.degree()
    return mono_degree(x)


class Element:
    """GF(2) linear combination of Milnor basis monomials Q^E P^R."""

    __slots__ = ("terms",)

    def __init__(self, terms: Iterable[Mono] = ()):
        self.terms: frozenset[Mono] = frozenset(terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, Element) and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __add__(self, other: "Element") -> "Element":
        return Element(self.terms ^ other.terms)

    def __mul__(self, other: "Element") -> "Element":
        return multiply(self, other)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_homogeneous(self) -> bool:
        return len({mono_degree(m) for m in self.terms}) <= 1

    def degree(self) -> Bidegree:
        degs = {mono_degree(m) for m in self.terms}
        if len(degs) != 1:
            raise ValueError("element is zero or inhomogeneous")
        return degs.pop()

    def sorted_terms(self) -> list[Mono]:
        return sorted(self.terms, key=mono_key)

    def __str__(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"Element({format_element(self)!r})"


ZERO = Element()
ONE = Element([UNIT_MONO])


def Q(*indices: int) -> Element:
    """Product of Milnor operations Q_i, zero on a repeated index."""
    out = ONE
    for i in indices:
        out = multiply(out, Element([((i,), ())]))
    return out


def P(*r: int) -> Element:
    """The operation dual to xi_1^{r_1} xi_2^{r_2} ...."""
    return Element([((), trim(r))])


def element(monos: Iterable[Mono]) -> Element:
    return Element(monos)


# ---------------------------------------------------------------------------
# basis enumeration


@lru_cache(maxsize=None)
def p_exponents_of_weight(w: int) -> tuple[tuple[int, ...], ...]:
    """All trimmed R with sum r_j (2^j - 1) = w, deterministic order."""
    if w < 0:
        return ()
    if w == 0:
        return ((),)

    def rec(weight: int, max_slot: int) -> list[tuple[int, ...]]:
        # R supported on slots 1..max_slot
        if weight == 0:
            return [()]
        out = []
        for j in range(max_slot, 0, -1):
            unit = 2**j - 1
            if unit > weight:
                continue
            for mult in range(weight // unit, 0, -1):
                for rest in rec(weight - mult * unit, j - 1):
                    r = list(rest) + [0] * (j - len(rest))
                    r[j - 1] = mult
                    out.append(tuple(r))
        return out

    max_slot = 1
    while 2 ** (max_slot + 1) - 1 <= w:
        max_slot += 1
    return tuple(sorted(rec(w, max_slot)))


@lru_cache(maxsize=None)
def exterior_supports(count: int, max_p: int) -> tuple[tuple[int, ...], ...]:
    """Strictly increasing index tuples E, |E| = count, with sum of
    topological degrees of the Q_i at most max_p."""
    if count == 0:
        return ((),)
    out = []

    def rec(start: int, left: int, budget: int, acc: tuple[int, ...]):
        if left == 0:
            out.append(acc)
            return
        i = start
        while 2 ** (i + 1) - 1 <= budget:
            rec(i + 1, left - 1, budget - (2 ** (i + 1) - 1), acc + (i,))
            i += 1

    rec(0, count, max_p, ())
    return tuple(sorted(out))


@lru_cache(maxsize=None)
def basis(p: int, q: int) -> tuple[Mono, ...]:
    """All Milnor monomials Q^E P^R of bidegree (q)[p].

    The offset p - 2q forces |E|; the residual weight is carried by the
    P-part, which sits on the slope-2 line.
    """
    k = p - 2 * q
    if k < 0 or p < 0:
        return ()
    out = []
    for e in exterior_supports(k, p):
        pe = sum(2 ** (i + 1) - 1 for i in e)
        qe = sum(2**i - 1 for i in e)
        wr = q - qe
        if wr < 0 or p - pe != 2 * wr:
            continue
        for r in p_exponents_of_weight(wr):
            out.append((e, r))
    return tuple(sorted(out, key=mono_key))


def dim(p: int, q: int) -> int:
    return len(basis(p, q))


# the dual Hopf algebra has the same monomial shapes, so tau^E xi^R is
# represented by the same (E, R) tuples
DualMono = Mono

dual_basis = basis


def dual_product(x: DualMono, y: DualMono) -> frozenset[DualMono]:
    """Free graded-commutative product: zero on overlapping tau's."""
    ex, rx = x
    ey, ry = y
    if set(ex) & set(ey):
        return frozenset()
    n = max(len(rx), len(ry))
    r = tuple((rx[j] if j < len(rx) else 0) + (ry[j] if j < len(ry) else 0) for j in range(n))
    return frozenset([(tuple(sorted(ex + ey)), trim(r))])


def _xi_mono(j: int, e: int) -> DualMono:
    if j == 0 or e == 0:
        return UNIT_MONO
    r = [0] * j
    r[j - 1] = e
    return ((), tuple(r))


@lru_cache(maxsize=None)
def _gen_coproduct(kind: str, k: int, e: int) -> frozenset[tuple[DualMono, DualMono]]:
    """Coproduct of tau_k (kind 'tau', e ignored) or xi_k^e with e a
    2-power.  The exponent base is xi_{k-i}; the 2-power climbs on the
    left tensor factor (Frobenius in char 2)."""
    if kind == "tau":
        terms = [(((k,), ()), UNIT_MONO)]
        terms += [(_xi_mono(k - i, 2**i), ((i,), ())) for i in range(k + 1)]
        return frozenset(terms)
    return frozenset((_xi_mono(k - i, (2**i) * e), _xi_mono(i, e)) for i in range(k + 1))


def _tensor_mul(
    a: frozenset[tuple[DualMono, DualMono]], b: frozenset[tuple[DualMono, DualMono]]
) -> frozenset[tuple[DualMono, DualMono]]:
    out: set[tuple[DualMono, DualMono]] = set()
    for l1, r1 in a:
        for l2, r2 in b:
            for left in dual_product(l1, l2):
                for right in dual_product(r1, r2):
                    pair = (left, right)
                    out ^= {pair}
    return frozenset(out)


@lru_cache(maxsize=None)
def dual_coproduct(x: DualMono) -> frozenset[tuple[DualMono, DualMono]]:
    """Multiplicative extension of the generator coproducts."""
    e, r = x
    out = frozenset([(UNIT_MONO, UNIT_MONO)])
    for i in e:
        out = _tensor_mul(out, _gen_coproduct("tau", i, 0))
    for j, rj in enumerate(r, start=1):
        c = 0
        while rj:
            if rj & 1:
                out = _tensor_mul(out, _gen_coproduct("xi", j, 2**c))
            rj >>= 1
            c += 1
    return out


# ---------------------------------------------------------------------------
# the product formula


@lru_cache(maxsize=None)
def _matrices(r: tuple[int, ...], s: tuple[int, ...]) -> tuple[tuple[tuple[tuple[int, ...], ...], tuple[int, ...]], ...]:
    """All matrices X with row condition R(X) = r and column condition
    S(X) = s, as (inner rows, derived first column); the derived first
    row is reconstructed from the column deficits.

    inner[i-1][j-1] = x_ij for i, j >= 1; first_col[i-1] = x_i0.
    """
    nr, nc = len(r), len(s)
    results = []
    inner_rows: list[tuple[int, ...]] = []
    first_col: list[int] = []

    def rec_row(i: int, col_used: list[int]):
        if i > nr:
            results.append((tuple(inner_rows), tuple(first_col)))
            return
        budget = r[i - 1]

        def rec_entry(j: int, left: int, row_acc: list[int]):
            if j > nc:
                inner_rows.append(tuple(row_acc))
                first_col.append(left)
                rec_row(i + 1, col_used)
                first_col.pop()
                inner_rows.pop()
                return
            cap = min(left >> j, s[j - 1] - col_used[j - 1])
            for x in range(cap + 1):
                col_used[j - 1] += x
                row_acc.append(x)
                rec_entry(j + 1, left - (x << j), row_acc)
                row_acc.pop()
                col_used[j - 1] -= x

        rec_entry(1, budget, [])

    rec_row(1, [0] * nc)
    return tuple(results)


def _matrix_product_terms(r: tuple[int, ...], s: tuple[int, ...]):
    """Yield T(X) for each matrix whose coefficient b(X) is odd."""
    nc = len(s)
    for inner, first_col in _matrices(r, s):
        col_sums = [sum(row[j] for row in inner) for j in range(nc)]
        first_row = [s[j] - col_sums[j] for j in range(nc)]
        # diagonal multinomial coefficients via Lucas: odd iff the
        # binary digits of the entries on each antidiagonal are disjoint
        nr = len(inner)
        nmax = nr + nc
        ok = True
        tvec = [0] * nmax
        for n in range(1, nmax + 1):
            acc = 0
            total = 0
            for i in range(0, n + 1):
                j = n - i
                if i == 0:
                    x = first_row[j - 1] if 1 <= j <= nc else 0
                elif j == 0:
                    x = first_col[i - 1] if 1 <= i <= nr else 0
                elif i <= nr and j <= nc:
                    x = inner[i - 1][j - 1]
                else:
                    x = 0
                if x:
                    if acc & x:
                        ok = False
                        break
                    acc |= x
                    total += x
            if not ok:
                break
            tvec[n - 1] = total
        if ok:
            yield trim(tvec)


@lru_cache(maxsize=None)
def p_product(r: tuple[int, ...], s: tuple[int, ...]) -> frozenset[tuple[int, ...]]:
    """P^r * P^s as a set of P-exponent tuples (coefficients mod 2)."""
    out: set[tuple[int, ...]] = set()
    for t in _matrix_product_terms(r, s):
        out ^= {t}
    return frozenset(out)


@lru_cache(maxsize=None)
def _q_past_p(k: int, r: tuple[int, ...]) -> frozenset[tuple[tuple[int, ...], int]]:
    """Q_k P^r rewritten as a sum of P^{r'} Q_m, each with a single Q.

    Iterates the commutator rule Q_k P^r = P^r Q_k + sum_j Q_{k+j}
    P^{r - 2^k e_j}; the correction terms recurse on strictly smaller r.
    """
    out: set[tuple[tuple[int, ...], int]] = {(r, k)}
    step = 2**k
    for j in range(1, len(r) + 1):
        if r[j - 1] >= step:
            lowered = list(r)
            lowered[j - 1] -= step
            out ^= _q_past_p(k + j, trim(lowered))
    return frozenset(out)


@lru_cache(maxsize=None)
def _p_past_qs(r: tuple[int, ...], f: tuple[int, ...]) -> frozenset[Mono]:
    """P^r Q^f expanded in the Q^E P^R basis (f strictly increasing)."""
    if not f:
        return frozenset([((), r)])
    k, rest = f[0], f[1:]
    # P^r Q_k = Q_k P^r + sum_j Q_{k+j} P^{r - 2^k e_j}
    first: list[tuple[int, tuple[int, ...]]] = [(k, r)]
    step = 2**k
    for j in range(1, len(r) + 1):
        if r[j - 1] >= step:
            lowered = list(r)
            lowered[j - 1] -= step
            first.append((k + j, trim(lowered)))
    out: set[Mono] = set()
    for m, r1 in first:
        for e2, r2 in _p_past_qs(r1, rest):
            if m in e2:
                continue
            out ^= {(tuple(sorted((m,) + e2)), r2)}
    return frozenset(out)


@lru_cache(maxsize=None)
def multiply_mono(a: Mono, b: Mono) -> frozenset[Mono]:
    """(Q^E P^R)(Q^F P^S) in the Milnor basis."""
    e, r = a
    f, s = b
    eset = set(e)
    out: set[Mono] = set()
    for g, r1 in _p_past_qs(r, f):
        if eset & set(g):
            continue
        eg = tuple(sorted(e + g))
        for t in p_product(r1, s):
            out ^= {(eg, t)}
    return frozenset(out)


def multiply(a: Element, b: Element) -> Element:
    """Bilinear extension of the monomial product."""
    out: set[Mono] = set()
    for ma in a.terms:
        for mb in b.terms:
            out ^= multiply_mono(ma, mb)
    return Element(out)


def multiply_via_duality(a: Element, b: Element) -> Element:
    """Product determined by <xy, w> = <x (x) y, psi(w)> over dual
    monomials w; independent oracle for `multiply`."""
    by_deg_a: dict[Bidegree, set[Mono]] = {}
    for m in a.terms:
        by_deg_a.setdefault(mono_degree(m), set()).add(m)
    by_deg_b: dict[Bidegree, set[Mono]] = {}
    for m in b.terms:
        by_deg_b.setdefault(mono_degree(m), set()).add(m)
    out: set[Mono] = set()
    for da, ta in by_deg_a.items():
        for db, tb in by_deg_b.items():
            d = da + db
            for w in dual_basis(d.p, d.q):
                c = 0
                for left, right in dual_coproduct(w):
                    if left in ta and right in tb:
                        c ^= 1
                if c:
                    out ^= {w}
    return Element(out)


# ---------------------------------------------------------------------------
# coproduct on the algebra side and basis conversions


@lru_cache(maxsize=None)
def coproduct(m: Mono) -> frozenset[tuple[Mono, Mono]]:
    """psi(Q^E P^R) = sum over E splits and componentwise R splits.

    Dual to `dual_product`: the coefficient at (m1, m2) is the pairing
    of m against the product of the corresponding dual monomials.
    """
    e, r = m
    e_splits: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for i in e:
        e_splits = [(a + (i,), b) for a, b in e_splits] + [(a, b + (i,)) for a, b in e_splits]
    r_splits: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), ())]
    for rj in r:
        r_splits = [(s1 + (x,), s2 + (rj - x,)) for s1, s2 in r_splits for x in range(rj + 1)]
    out = set()
    for e1, e2 in e_splits:
        for r1, r2 in r_splits:
            out.add(((e1, trim(r1)), (e2, trim(r2))))
    return frozenset(out)


class PrqeElement:
    """An element written in the P^R Q^E presentation."""

    __slots__ = ("pairs",)

    def __init__(self, pairs: Iterable[Mono] = ()):
        # a pair (E, R) stands for P^R Q^E
        self.pairs: frozenset[Mono] = frozenset(pairs)

    def __eq__(self, other) -> bool:
        return isinstance(other, PrqeElement) and self.pairs == other.pairs

    def __hash__(self) -> int:
        return hash(("prqe", self.pairs))

    def __add__(self, other: "PrqeElement") -> "PrqeElement":
        return PrqeElement(self.pairs ^ other.pairs)

    def __bool__(self) -> bool:
        return bool(self.pairs)

    def sorted_pairs(self) -> list[Mono]:
        return sorted(self.pairs, key=mono_key)

    def __str__(self) -> str:
        return format_prqe(self)

    def __repr__(self) -> str:
        return f"PrqeElement({format_prqe(self)!r})"


@lru_cache(maxsize=None)
def _qepr_mono_to_prqe(e: tuple[int, ...], r: tuple[int, ...]) -> frozenset[Mono]:
    """Q^E P^R in the P^R Q^E basis, by the double induction on R and |E|."""
    if not e:
        return frozenset([((), r)])
    last, front = e[-1], e[:-1]
    out: set[Mono] = set()
    for r1, m in _q_past_p(last, r):
        for e2, r2 in _qepr_mono_to_prqe(front, r1):
            if m in e2:
                continue
            out ^= {(tuple(sorted(e2 + (m,))), r2)}
    return frozenset(out)


def qepr_to_prqe(a: Element) -> PrqeElement:
    """Rewrite from the Q^E P^R basis to the P^R Q^E basis."""
    out: set[Mono] = set()
    for e, r in a.terms:
        out ^= _qepr_mono_to_prqe(e, r)
    return PrqeElement(out)


def prqe_to_qepr(a: PrqeElement) -> Element:
    """Inverse conversion; round-trips with `qepr_to_prqe`."""
    out: set[Mono] = set()
    for e, r in a.pairs:
        out ^= _p_past_qs(r, e)
    return Element(out)


# ---------------------------------------------------------------------------
# text syntax: monomials like `Q0 Q2 P(1,0,3)` joined by `+`


_TOKEN = re.compile(r"Q(\d+)|P\(([\d,\s]*)\)|(1)|(\S+)")


def format_mono(m: Mono) -> str:
    e, r = m
    parts = [f"Q{i}" for i in e]
    if r:
        parts.append("P(" + ",".join(str(x) for x in r) + ")")
    return " ".join(parts) if parts else "1"


def format_element(a: Element) -> str:
    if not a.terms:
        return "0"
    return " + ".join(format_mono(m) for m in a.sorted_terms())


def format_prqe_pair(m: Mono) -> str:
    e, r = m
    parts = []
    if r:
        parts.append("P(" + ",".join(str(x) for x in r) + ")")
    parts.extend(f"Q{i}" for i in e)
    return " ".join(parts) if parts else "1"


def format_prqe(a: PrqeElement) -> str:
    if not a.pairs:
        return "0"
    return " + ".join(format_prqe_pair(m) for m in a.sorted_pairs())


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_element(text: str) -> Element:
    """Parse the `Q0 Q2 P(1,0,3)` syntax.

    Factors inside a monomial are multiplied left to right, so mixed
    presentations such as `P(1) Q0` parse to the correct element.
    """
    text = text.strip()
    if text == "0":
        return ZERO
    if not text:
        raise ParseError("empty element", 0)
    out = ZERO
    pos = 0
    for chunk in text.split("+"):
        factor_acc = ONE
        for match in _TOKEN.finditer(chunk):
            qi, pr, one, junk = match.groups()
            where = pos + match.start()
            if junk is not None:
                raise ParseError(f"unexpected token {junk!r}", where)
            if qi is not None:
                factor_acc = multiply(factor_acc, Element([((int(qi),), ())]))
            elif pr is not None:
                try:
                    r = trim(int(x) for x in pr.split(",") if x.strip() != "")
                except ValueError:
                    raise ParseError("bad P exponents", where) from None
                if any(x < 0 for x in r):
                    raise ParseError("negative P exponent", where)
                factor_acc = multiply(factor_acc, Element([((), r)]))
            # bare `1` leaves the accumulator alone
        if chunk.strip() == "":
            raise ParseError("empty monomial", pos)
        out = out + factor_acc
        pos += len(chunk) + 1
    return out


# ---------------------------------------------------------------------------
# the matrix data made explicit, for inspection and tests


class MilnorMatrix(NamedTuple):
    """A finitely supported matrix (x_ij), (i,j) != (0,0), driving the
    product formula; entries stored sparsely as (i, j, x) with x > 0."""

    entries: tuple[tuple[int, int, int], ...]

    def entry(self, i: int, j: int) -> int:
        for a, b, x in self.entries:
            if (a, b) == (i, j):
                return x
        return 0

    def row_condition(self) -> tuple[int, ...]:
        """R(X): r_i = sum_j 2^j x_ij."""
        n = max((i for i, _, _ in self.entries), default=0)
        return trim(sum(x << j for a, j, x in self.entries if a == i) for i in range(1, n + 1))

    def column_condition(self) -> tuple[int, ...]:
        """S(X): s_j = sum_i x_ij."""
        n = max((j for _, j, _ in self.entries), default=0)
        return trim(sum(x for i, b, x in self.entries if b == j) for j in range(1, n + 1))

    def diagonal(self) -> tuple[int, ...]:
        """T(X): t_n = sum_{i+j=n} x_ij."""
        n = max((i + j for i, j, _ in self.entries), default=0)
        return trim(sum(x for i, j, x in self.entries if i + j == d) for d in range(1, n + 1))


def enumerate_matrices(r: Iterable[int], s: Iterable[int]) -> list[MilnorMatrix]:
    """Exactly the matrices X with R(X)=r and S(X)=s, each once."""
    rt, st = trim(r), trim(s)
    out = []
    for inner, first_col in _matrices(rt, st):
        entries = []
        nc = len(st)
        col_sums = [sum(row[j] for row in inner) for j in range(nc)]
        for j in range(1, nc + 1):
            x = st[j - 1] - col_sums[j - 1]
            if x:
                entries.append((0, j, x))
        for i, row in enumerate(inner, start=1):
            if first_col[i - 1]:
                entries.append((i, 0, first_col[i - 1]))
            for j, x in enumerate(row, start=1):
                if x:
                    entries.append((i, j, x))
        out.append(MilnorMatrix(tuple(sorted(entries))))
    return sorted(out, key=lambda m: m.entries)


def b_mod2(x: MilnorMatrix) -> int:
    """prod t_n! / prod x_ij! reduced mod 2, via Lucas: odd iff on each
    antidiagonal the binary digits of the entries are disjoint."""
    diagonals: dict[int, list[int]] = {}
    for i, j, v in x.entries:
        diagonals.setdefault(i + j, []).append(v)
    for vals in diagonals.values():
        acc = 0
        for v in vals:
            if acc & v:
                return 0
            acc |= v
    return 1
