"""Exact complex character theory for enumerated groups.

Character tables are computed by simultaneous eigenspace splitting of
the class matrices over a finite field F_q with q = 1 mod exp(G), then
lifted to exact cyclotomic integers by multiplicity counting over the
powers of each class representative.  All downstream operations
(induction, restriction, inner products, kernels) stay exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .cyclotomic import Cyc
from .grouptable import CapExceeded, ElementSet, GroupTable, subgroup_table
from .structure import ConjClassPartition, conjugacy_classes, exponent, prime_factors

DEFAULT_CHARTAB_ORDER_CAP = 2_000
DEFAULT_CLASS_CAP = 60


@dataclass(frozen=True)
class ClassFunction:
    """A function constant on conjugacy classes, one Cyc value per class id."""

    group: GroupTable
    values: tuple[Cyc, ...]

    def degree(self) -> int:
        return self.values[0].as_int()

    def value_at(self, element: int) -> Cyc:
        return self.values[conjugacy_classes(self.group).class_of[element]]

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ClassFunction)
            and self.group is other.group
            and all(a == b for a, b in zip(self.values, other.values))
            and len(self.values) == len(other.values)
        )


@dataclass(frozen=True)
class CycFraction:
    """An exact rational multiple num/den of a cyclotomic integer."""

    num: Cyc
    den: int

    @classmethod
    def reduced(cls, num: Cyc, den: int) -> CycFraction:
        g = math.gcd(den, math.gcd(*(abs(c) for c in num.coeffs)) if any(num.coeffs) else den)
        return cls(Cyc(num.e, tuple(c // g for c in num.coeffs)), den // g)


@dataclass(frozen=True)
class CharacterTable:
    group: GroupTable
    irreducibles: tuple[ClassFunction, ...]
    degree_sequence: tuple[int, ...]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def dixon_prime(e: int, order: int) -> int:
    """Smallest prime q = 1 (mod e) with q > 2 * ceil(sqrt(order))."""
    root = math.isqrt(order)
    if root * root < order:
        root += 1
    bound = 2 * root
    q = 1
    while True:
        q += e
        if q > bound and is_prime(q):
            return q


def class_matrices(G: GroupTable, classes: ConjClassPartition | None = None) -> list[list[list[int]]]:
    """For each class i, the matrix M_i with M_i[j][k] = a_ijk, the number of
    ways a fixed element of class k factors as (class i element)*(class j element)."""
    classes = classes or conjugacy_classes(G)
    r = classes.count
    mats = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = classes.reps[k]
        for i in range(r):
            row = mats[i]
            for x in classes.members(i):
                row[classes.class_of[G.mul(G.inv(x), z)]][k] += 1
    return mats


# --- linear algebra over F_q ---------------------------------------------


def _rref(rows: list[list[int]], q: int) -> list[list[int]]:
    """Reduced row echelon form mod q; zero rows dropped."""
    rows = [r[:] for r in rows]
    pivots = []
    pr = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        pivot = next((i for i in range(pr, len(rows)) if rows[i][c] % q), None)
        if pivot is None:
            continue
        rows[pr], rows[pivot] = rows[pivot], rows[pr]
        inv = pow(rows[pr][c], -1, q)
        rows[pr] = [(v * inv) % q for v in rows[pr]]
        for i in range(len(rows)):
            if i != pr and rows[i][c] % q:
                f = rows[i][c]
                rows[i] = [(a - f * b) % q for a, b in zip(rows[i], rows[pr])]
        pivots.append(c)
        pr += 1
        if pr == len(rows):
            break
    return rows[:pr]


def _kernel(rows: list[list[int]], ncols: int, q: int) -> list[list[int]]:
    """Basis of the null space {v : rows * v = 0}, one vector per free column."""
    rr = _rref(rows, q)
    pivot_cols = []
    for r in rr:
        pivot_cols.append(next(i for i, v in enumerate(r) if v))
    free_cols = [c for c in range(ncols) if c not in pivot_cols]
    basis = []
    for fc in free_cols:
        v = [0] * ncols
        v[fc] = 1
        for r, pc in zip(rr, pivot_cols):
            v[pc] = (-r[fc]) % q
        basis.append(v)
    return basis


def _charpoly(A: list[list[int]], q: int) -> list[int]:
    """Characteristic polynomial mod q (ascending coefficients), via
    Hessenberg reduction and the standard minor recurrence."""
    n = len(A)
    H = [[v % q for v in row] for row in A]
    for j in range(n - 2):
        pivot = next((i for i in range(j + 1, n) if H[i][j]), None)
        if pivot is None:
            continue
        if pivot != j + 1:
            H[j + 1], H[pivot] = H[pivot], H[j + 1]
            for row in H:
                row[j + 1], row[pivot] = row[pivot], row[j + 1]
        inv = pow(H[j + 1][j], -1, q)
        for i in range(j + 2, n):
            if H[i][j]:
                f = (H[i][j] * inv) % q
                H[i] = [(a - f * b) % q for a, b in zip(H[i], H[j + 1])]
                for row in H:
                    row[j + 1] = (row[j + 1] + f * row[i]) % q
    # p_m = (x - H[m][m]) p_{m-1} - sum_i H[i][m] (prod subdiagonals) p_{i-1}
    polys = [[1]]
    for m in range(n):
        prev = polys[m]
        pm = [0] + prev
        for i, c in enumerate(prev):
            pm[i] = (pm[i] - H[m][m] * c) % q
        pm = [v % q for v in pm]
        prod = 1
        for i in range(m - 1, -1, -1):
            prod = (prod * H[i + 1][i]) % q
            f = (H[i][m] * prod) % q
            if f:
                pi = polys[i]
                for t, c in enumerate(pi):
                    pm[t] = (pm[t] - f * c) % q
        polys.append(pm)
    return polys[n]


def _roots_mod(poly: list[int], q: int) -> list[int]:
    roots = []
    for lam in range(q):
        acc = 0
        for c in reversed(poly):
            acc = (acc * lam + c) % q
        if acc == 0:
            roots.append(lam)
    return roots


def _mat_vec(M: list[list[int]], v: list[int], q: int) -> list[int]:
    return [sum(a * b for a, b in zip(row, v)) % q for row in M]


def _simultaneous_eigenvectors(mats: list[list[list[int]]], q: int) -> list[list[int]]:
    """Common eigenvectors of the commuting class matrices over F_q,
    normalized so the identity-class coordinate is 1."""
    r = len(mats)
    spaces: list[list[list[int]]] = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    for idx in range(1, r):
        if all(len(B) == 1 for B in spaces):
            break
        M = mats[idx]
        lams = _roots_mod(_charpoly(M, q), q)
        new_spaces: list[list[list[int]]] = []
        for B in spaces:
            if len(B) == 1:
                new_spaces.append(B)
                continue
            images = [_mat_vec(M, b, q) for b in B]
            split_total = 0
            for lam in lams:
                cols = []
                for b, mb in zip(B, images):
                    cols.append([(x - lam * y) % q for x, y in zip(mb, b)])
                rows = [[cols[j][i] for j in range(len(B))] for i in range(r)]
                coeffs = _kernel(rows, len(B), q)
                if not coeffs:
                    continue
                vectors = []
                for c in coeffs:
                    v = [0] * r
                    for cj, b in zip(c, B):
                        if cj:
                            for i in range(r):
                                v[i] = (v[i] + cj * b[i]) % q
                    vectors.append(v)
                vectors = _rref(vectors, q)
                split_total += len(vectors)
                new_spaces.append(vectors)
            if split_total != len(B):
                raise RuntimeError("eigenspace splitting lost dimensions")
        spaces = new_spaces
    if not all(len(B) == 1 for B in spaces):
        raise RuntimeError("class matrices did not split to one-dimensional spaces")
    out = []
    for B in spaces:
        v = B[0]
        if v[0] == 0:
            raise RuntimeError("central character has zero identity coordinate")
        inv = pow(v[0], -1, q)
        out.append([(x * inv) % q for x in v])
    return sorted(out)


def _primitive_root(q: int) -> int:
    factors = prime_factors(q - 1)
    for g in range(2, q):
        if all(pow(g, (q - 1) // p, q) != 1 for p in factors):
            return g
    raise RuntimeError(f"no primitive root mod {q}")


def character_table(
    G: GroupTable,
    order_cap: int = DEFAULT_CHARTAB_ORDER_CAP,
    class_cap: int = DEFAULT_CLASS_CAP,
    prime: int | None = None,
) -> CharacterTable:
    """The exact table of irreducible characters, rows ordered by
    (degree, lexicographic value order).  Cached on the table unless an
    explicit prime is supplied."""
    if G.order > order_cap:
        raise CapExceeded("character table order cap exceeded", G.order)
    classes = conjugacy_classes(G)
    r = classes.count
    if r > class_cap:
        raise CapExceeded("character table class cap exceeded", r)
    if prime is None:
        hit = G._cache.get("chartab")
        if hit is not None:
            return hit
    e = exponent(G)
    n = G.order
    if prime is None:
        q = dixon_prime(e, n)
    else:
        q = prime
        bound = 2 * (math.isqrt(n - 1) + 1) if n > 1 else 2
        if not is_prime(q) or q % e != 1 or q <= bound:
            raise ValueError(f"{q} is not a valid splitting prime for this group")

    mats = class_matrices(G, classes)
    omegas = _simultaneous_eigenvectors(mats, q)

    inv_sizes = [pow(s, -1, q) for s in classes.sizes]
    degrees = []
    for w in omegas:
        s = 0
        for k in range(r):
            s = (s + w[k] * w[classes.inverse_class[k]] * inv_sizes[k]) % q
        t = (n * pow(s, -1, q)) % q
        d = next((d for d in range(1, math.isqrt(n) + 1) if (d * d) % q == t), None)
        if d is None:
            raise RuntimeError("no integer degree matches the orthogonality relation")
        degrees.append(d)

    z = pow(_primitive_root(q), (q - 1) // e, q)
    zpow = [1] * e
    for i in range(1, e):
        zpow[i] = (zpow[i - 1] * z) % q

    power_classes = []
    for k in range(r):
        rep = classes.reps[k]
        m = G.element_order(rep)
        cur = 0
        pcls = []
        for _ in range(m):
            pcls.append(classes.class_of[cur])
            cur = G.mul(cur, rep)
        power_classes.append(pcls)

    rows = []
    for w, d in zip(omegas, degrees):
        chi_mod = [(d * w[k] * inv_sizes[k]) % q for k in range(r)]
        values = []
        for k in range(r):
            pcls = power_classes[k]
            m = len(pcls)
            step = e // m
            inv_m = pow(m, -1, q)
            counts = {}
            total = 0
            for l in range(m):
                acc = 0
                for t in range(m):
                    acc += chi_mod[pcls[t]] * zpow[(-step * l * t) % e]
                c = (acc * inv_m) % q
                total += c
                if c:
                    counts[step * l] = c
            if total != d:
                raise RuntimeError("eigenvalue multiplicities do not sum to the degree")
            values.append(Cyc.from_root_multiset(e, counts))
        rows.append(ClassFunction(G, tuple(values)))

    if sum(d * d for d in degrees) != n:
        raise RuntimeError("degree squares do not sum to the group order")
    for i, chi in enumerate(rows):
        for j in range(i, len(rows)):
            expect = 1 if i == j else 0
            got = inner_product(chi, rows[j])
            if not (isinstance(got, Cyc) and got == expect):
                raise RuntimeError("character rows are not orthonormal")

    rows.sort(key=lambda cf: (cf.values[0].as_int(), tuple(v.coeffs for v in cf.values)))
    table = CharacterTable(G, tuple(rows), tuple(sorted(cf.values[0].as_int() for cf in rows)))
    if prime is None:
        G._cache["chartab"] = table
    return table


# --- class function operations -------------------------------------------


def trivial_character(G: GroupTable) -> ClassFunction:
    r = conjugacy_classes(G).count
    return ClassFunction(G, tuple(Cyc.integer(1) for _ in range(r)))


def regular_character(G: GroupTable) -> ClassFunction:
    r = conjugacy_classes(G).count
    return ClassFunction(G, tuple(Cyc.integer(G.order if k == 0 else 0) for k in range(r)))


def inner_product(f: ClassFunction, g: ClassFunction) -> Cyc | CycFraction:
    """(1/|G|) sum over G of f * conj(g), computed classwise and exactly.

    Returns a Cyc when the division by |G| is exact (always, for
    characters) and a reduced CycFraction otherwise."""
    if f.group is not g.group:
        raise ValueError("class functions live on different groups")
    classes = conjugacy_classes(f.group)
    total = Cyc.zero(1)
    for size, a, b in zip(classes.sizes, f.values, g.values):
        total = total + (a * b.conjugate()) * size
    try:
        return total.divide_exact(f.group.order)
    except ArithmeticError:
        return CycFraction.reduced(total, f.group.order)


def inner_product_int(f: ClassFunction, g: ClassFunction) -> int:
    got = inner_product(f, g)
    if not isinstance(got, Cyc) or not got.is_rational_integer():
        raise ValueError("inner product is not a rational integer")
    return got.as_int()


def induce(G: GroupTable, H: ElementSet, theta: ClassFunction) -> ClassFunction:
    """The induced class function theta^G, evaluated by the direct sum
    over conjugating elements; exact division by |H| is asserted."""
    table, _to_parent, from_parent = subgroup_table(G, H)
    if theta.group is not table:
        raise ValueError("theta is not a class function on this subgroup")
    h_classes = conjugacy_classes(table)
    g_classes = conjugacy_classes(G)
    e = exponent(G)
    theta_up = [v.rebase(e) if v.e != e else v for v in theta.values]
    values = []
    for rep in g_classes.reps:
        counts = [0] * h_classes.count
        for t in range(G.order):
            c = G.conj(rep, t)
            hidx = from_parent.get(c)
            if hidx is not None:
                counts[h_classes.class_of[hidx]] += 1
        acc = Cyc.zero(e)
        for cnt, val in zip(counts, theta_up):
            if cnt:
                acc = acc + val * cnt
        values.append(acc.divide_exact(len(H)))
    return ClassFunction(G, tuple(values))


def restrict(G: GroupTable, chi: ClassFunction, H: ElementSet) -> ClassFunction:
    """chi read off on the classes of the subgroup H."""
    if chi.group is not G:
        raise ValueError("chi is not a class function on G")
    table, to_parent, _ = subgroup_table(G, H)
    h_classes = conjugacy_classes(table)
    g_classes = conjugacy_classes(G)
    values = tuple(chi.values[g_classes.class_of[to_parent[rep]]] for rep in h_classes.reps)
    return ClassFunction(table, values)


def decompose(f: ClassFunction, table: CharacterTable | None = None) -> list[tuple[int, int]]:
    """Multiplicities [f, chi_i] for every irreducible, with the exact
    reconstruction sum m_i chi_i = f verified."""
    table = table or character_table(f.group)
    mults = []
    for i, chi in enumerate(table.irreducibles):
        m = inner_product(f, chi)
        if not isinstance(m, Cyc) or not m.is_rational_integer() or m.as_int() < 0:
            raise ValueError("not a character")
        mults.append((i, m.as_int()))
    r = len(f.values)
    for k in range(r):
        acc = Cyc.zero(1)
        for (i, m) in mults:
            if m:
                acc = acc + table.irreducibles[i].values[k] * m
        if not acc == f.values[k]:
            raise ValueError("not a character")
    return mults


def is_homogeneous_induction(
    G: GroupTable, H: ElementSet, theta: ClassFunction
) -> tuple[bool, int | None, int]:
    """Whether theta^G = a * xi for a single irreducible xi; returns
    (verdict, index of xi or None, multiplicity a)."""
    norm = inner_product(theta, theta)
    if not (isinstance(norm, Cyc) and norm == 1):
        raise ValueError("theta is not irreducible")
    induced = induce(G, H, theta)
    mults = decompose(induced)
    nonzero = [(i, m) for i, m in mults if m]
    if len(nonzero) == 1:
        return True, nonzero[0][0], nonzero[0][1]
    return False, None, 0


def kernel_of(chi: ClassFunction) -> ElementSet:
    """{x : chi(x) = chi(1)}, a normal subgroup."""
    classes = conjugacy_classes(chi.group)
    top = chi.values[0]
    members = [
        i for i in range(chi.group.order) if chi.values[classes.class_of[i]] == top
    ]
    return ElementSet(chi.group, members)


def in_irr_given_N(chi: ClassFunction, N: ElementSet) -> bool:
    """True iff chi lies in Irr(G|N), i.e. N is not inside ker(chi)."""
    if not N.is_subgroup or not N.is_normal():
        raise ValueError("N must be a normal subgroup")
    ker = kernel_of(chi)
    return not all(n in ker for n in N.members)
