"""Built-in group catalog and the group file format.

Labels: Cn, Dn (dihedral of order 2n, n >= 3), Sn, An, Q8/Q16/Q32,
SL23, Frob(p:q) with q | p-1 (affine action on p points), Heis(p)
(extraspecial of order p^3 and exponent p, regular representation),
and direct products AxB of supported labels.

Group files: line 1 is ``degree N``; each following non-comment line is
one generator in 1-based disjoint-cycle notation, e.g. ``(1,2)(3,4,5)``;
``#`` starts a comment, blank lines are ignored.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from pathlib import Path
from typing import Callable, Sequence

from .grouptable import GroupTable, generate
from .perm import Permutation


@dataclass(frozen=True)
class CatalogEntry:
    label: str
    degree: int
    generators: tuple[Permutation, ...]
    provenance: str  # "builtin" | "file"

    def group(self, cap: int = 20_000) -> GroupTable:
        return generate(self.degree, self.generators, cap=cap)


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UnknownLabel(ValueError):
    pass


# --- cycle notation (1-based externally, 0-based internally) ---------------

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, degree: int) -> Permutation:
    """Parse ``(1,2)(3,4,5)`` into a permutation of the given degree."""
    stripped = text.replace(" ", "")
    if not stripped:
        raise ValueError("empty permutation")
    consumed = 0
    cycles: list[list[int]] = []
    for m in _CYCLE_RE.finditer(stripped):
        if m.start() != consumed:
            raise ValueError(f"malformed cycle text {text!r}")
        consumed = m.end()
        body = m.group(1)
        if not body:
            continue
        try:
            points = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise ValueError(f"malformed cycle {m.group(0)!r}") from None
        for p in points:
            if not 1 <= p <= degree:
                raise ValueError(f"point {p} out of range 1..{degree}")
        cycles.append([p - 1 for p in points])
    if consumed != len(stripped):
        raise ValueError(f"malformed cycle text {text!r}")
    try:
        return Permutation.from_cycles(degree, cycles)
    except ValueError as exc:
        raise ValueError(str(exc).replace("point ", "point (1-based) ")) from None


def format_cycles(perm: Permutation) -> str:
    """1-based disjoint-cycle notation; the identity prints as ``()``."""
    cyc = perm.cycles()
    if not cyc:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cyc)


def parse_group_file(path: str | Path) -> CatalogEntry:
    path = Path(path)
    degree = None
    gens: list[Permutation] = []
    for lineno, raw in enumerate(path.read_text().splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            m = re.fullmatch(r"degree\s+(\d+)", line)
            if not m:
                raise ParseError("expected 'degree N' on the first content line", lineno)
            degree = int(m.group(1))
            if degree < 1:
                raise ParseError("degree must be positive", lineno)
            continue
        try:
            gens.append(parse_cycles(line, degree))
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if degree is None:
        raise ParseError("file contains no 'degree N' line", 1)
    return CatalogEntry(f"file:{path.name}", degree, tuple(gens), "file")


# --- builtin families -------------------------------------------------------


def _cyclic(n: int) -> tuple[int, list[Permutation]]:
    if n == 1:
        return 1, []
    return n, [Permutation(tuple((i + 1) % n for i in range(n)))]


def _dihedral(n: int) -> tuple[int, list[Permutation]]:
    if n < 3:
        raise UnknownLabel(f"dihedral parameter must be >= 3, got {n}")
    rot = Permutation(tuple((i + 1) % n for i in range(n)))
    flip = Permutation(tuple((-i) % n for i in range(n)))
    return n, [rot, flip]


def _symmetric(n: int) -> tuple[int, list[Permutation]]:
    if n < 2:
        raise UnknownLabel(f"symmetric parameter must be >= 2, got {n}")
    swap = Permutation((1, 0) + tuple(range(2, n)))
    if n == 2:
        return n, [swap]
    cycle = Permutation(tuple((i + 1) % n for i in range(n)))
    return n, [swap, cycle]


def _alternating(n: int) -> tuple[int, list[Permutation]]:
    if n < 3:
        raise UnknownLabel(f"alternating parameter must be >= 3, got {n}")
    three = Permutation.from_cycles(n, [(0, 1, 2)])
    if n == 3:
        return n, [three]
    if n % 2 == 1:
        big = Permutation(tuple((i + 1) % n for i in range(n)))
    else:
        big = Permutation.from_cycles(n, [tuple(range(1, n))])
    return n, [three, big]


def _regular_representation(
    elements: Sequence, mult: Callable, generators: Sequence
) -> tuple[int, list[Permutation]]:
    index = {e: i for i, e in enumerate(elements)}
    degree = len(elements)
    gens = [
        Permutation(tuple(index[mult(e, g)] for e in elements)) for g in generators
    ]
    return degree, gens


def _quaternion(order: int) -> tuple[int, list[Permutation]]:
    # <a, b | a^(2m) = 1, b^2 = a^m, b a b^-1 = a^-1> with order = 4m.
    m = order // 4
    n = 2 * m
    elements = [(i, j) for j in range(2) for i in range(n)]

    def mult(x, y):
        i, j = x
        s, t = y
        if j == 0:
            return ((i + s) % n, t)
        if t == 0:
            return ((i - s) % n, 1)
        return ((i - s + m) % n, 0)

    return _regular_representation(elements, mult, [(1, 0), (0, 1)])


def _heisenberg(p: int) -> tuple[int, list[Permutation]]:
    if p == 2 or not _is_prime(p):
        raise UnknownLabel(f"Heis parameter must be an odd prime, got {p}")
    elements = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]

    def mult(x, y):
        a, b, c = x
        d, e, f = y
        return ((a + d) % p, (b + e) % p, (c + f + a * e) % p)

    return _regular_representation(elements, mult, [(1, 0, 0), (0, 1, 0)])


def _sl23() -> tuple[int, list[Permutation]]:
    vectors = [(x, y) for x in range(3) for y in range(3) if (x, y) != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    def action(mat):
        (a, b), (c, d) = mat
        images = []
        for (x, y) in vectors:
            images.append(index[((a * x + b * y) % 3, (c * x + d * y) % 3)])
        return Permutation(tuple(images))

    return 8, [action(((1, 1), (0, 1))), action(((1, 0), (1, 1)))]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _frobenius(p: int, q: int) -> tuple[int, list[Permutation]]:
    if not _is_prime(p):
        raise UnknownLabel(f"Frob parameter {p} is not prime")
    if q <= 1 or (p - 1) % q != 0:
        raise UnknownLabel(f"Frob requires q | p-1, got Frob({p}:{q})")
    gamma = next(
        g
        for g in range(2, p)
        if all(pow(g, (p - 1) // r, p) != 1 for r in _prime_divisors(p - 1))
    )
    c = pow(gamma, (p - 1) // q, p)
    shift = Permutation(tuple((i + 1) % p for i in range(p)))
    mult = Permutation(tuple((c * i) % p for i in range(p)))
    return p, [shift, mult]


def _prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _direct_product(parts: list[CatalogEntry]) -> tuple[int, list[Permutation]]:
    degree = sum(p.degree for p in parts)
    gens = []
    offset = 0
    for part in parts:
        for g in part.generators:
            images = list(range(degree))
            for i, v in enumerate(g.images):
                images[offset + i] = offset + v
            gens.append(Permutation(tuple(images)))
        offset += part.degree
    return degree, gens


_FROB_RE = re.compile(r"Frob\((\d+):(\d+)\)")
_HEIS_RE = re.compile(r"Heis\((\d+)\)")


def _split_product(label: str) -> list[str]:
    parts = []
    depth = 0
    current = []
    for ch in label:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "x" and depth == 0:
            parts.append("".join(current))
            current = []
        else:
            current.append(ch)
    parts.append("".join(current))
    return parts


def builtin(label: str) -> CatalogEntry:
    """Resolve a builtin label to a catalog entry; raises UnknownLabel."""
    label = label.strip()
    parts = _split_product(label)
    if len(parts) > 1:
        entries = [builtin(p) for p in parts]
        degree, gens = _direct_product(entries)
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = re.fullmatch(r"C(\d+)", label)
    if m:
        degree, gens = _cyclic(int(m.group(1)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = re.fullmatch(r"D(\d+)", label)
    if m:
        degree, gens = _dihedral(int(m.group(1)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = re.fullmatch(r"S(\d+)", label)
    if m:
        degree, gens = _symmetric(int(m.group(1)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = re.fullmatch(r"A(\d+)", label)
    if m:
        degree, gens = _alternating(int(m.group(1)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    if label in ("Q8", "Q16", "Q32"):
        degree, gens = _quaternion(int(label[1:]))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    if label == "SL23":
        degree, gens = _sl23()
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = _FROB_RE.fullmatch(label)
    if m:
        degree, gens = _frobenius(int(m.group(1)), int(m.group(2)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    m = _HEIS_RE.fullmatch(label)
    if m:
        degree, gens = _heisenberg(int(m.group(1)))
        return CatalogEntry(label, degree, tuple(gens), "builtin")
    raise UnknownLabel(f"unknown builtin label {label!r}")


BUILTIN_LABELS = (
    [f"C{n}" for n in range(2, 17)]
    + [f"D{n}" for n in range(3, 13)]
    + ["S3", "S4", "A4", "A5", "Q8", "Q16", "Q32", "SL23"]
    + ["Frob(7:3)", "Frob(5:4)", "Frob(13:6)", "Heis(3)"]
    + [
        "C2xC2",
        "C2xC4",
        "C2xC6",
        "C2xC2xC2",
        "C3xC3",
        "C4xC4",
        "C2xS3",
        "C2xQ8",
        "C3xS3",
        "C2xA4",
        "S3xS3",
        "C2xA5",
    ]
    + ["Frob(11:10)"]
)


def builtin_catalog() -> list[CatalogEntry]:
    """The default catalog, ordered by (group order, label)."""
    entries = [builtin(label) for label in BUILTIN_LABELS]
    orders = {e.label: e.group().order for e in entries}
    return sorted(entries, key=lambda e: (orders[e.label], e.label))
