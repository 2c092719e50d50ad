"""Finite basis carriers: loops, groupoids, groups, and semigroups.

A carrier is a finite magma given by an element list and a full Cayley
table of indices. Builders cover the parametric loops L_n(m) on n+1
elements, the parametric groupoids Z_n(t, u), and the standard stock of
groups/semigroups used as semiring bases. ``check_laws`` evaluates the
identity laws exhaustively and returns one profile with falsifying
witnesses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations, permutations, product
from typing import Optional

from .errors import SpecError

_MAX_TABLE_ENTRIES = 1_000_000

# carriers whose elements are residues mod n (formal-sum tokens use "<r>b")
RESIDUE_KINDS = ("groupoid", "mult-semigroup", "additive-group", "mult-group")
# carriers whose identity prints as the bare token "e"
E_KINDS = ("loop", "cyclic", "dihedral", "symmetric-group")


@dataclass(frozen=True)
class CarrierMeta:
    kind: str
    params: tuple[int, ...] = ()


@dataclass(frozen=True)
class Magma:
    """Element labels plus a full index Cayley table.

    ``table[i][j]`` is the index of elements[i] * elements[j]; the row
    element is always the left factor. ``identity`` is the index of the
    two-sided identity, or None.
    """

    elements: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    meta: CarrierMeta
    interval_labeled: bool = False
    identity: Optional[int] = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def op(self, i: int, j: int) -> int:
        return self.table[i][j]

    def index_of(self, label: str) -> int:
        try:
            return self.elements.index(label)
        except ValueError:
            raise SpecError(f"no carrier element labeled {label!r}") from None

    def absorbing_index(self) -> Optional[int]:
        """Index of the element z with z*x = x*z = z for all x, if any."""
        cached = self.__dict__.get("_absorbing")
        if cached is None:
            cached = -1
            for z in range(self.order):
                row = self.table[z]
                if all(
                    row[x] == z and self.table[x][z] == z
                    for x in range(self.order)
                ):
                    cached = z
                    break
            object.__setattr__(self, "_absorbing", cached)
        return None if cached == -1 else cached


def _find_identity(table) -> Optional[int]:
    k = len(table)
    for e in range(k):
        if all(table[e][x] == x and table[x][e] == x for x in range(k)):
            return e
    return None


def _finish(labels, table, meta: CarrierMeta) -> Magma:
    labels = tuple(labels)
    table = tuple(tuple(row) for row in table)
    if meta.kind != "symmetric-semigroup" and len(labels) ** 2 > _MAX_TABLE_ENTRIES:
        raise SpecError(
            f"carrier table would exceed {_MAX_TABLE_ENTRIES} entries"
        )
    return Magma(
        elements=labels,
        table=table,
        meta=meta,
        identity=_find_identity(table),
    )


def with_interval_labels(g: Magma) -> Magma:
    """Relabel every element x as [0,x]; the table is untouched."""
    if g.interval_labeled:
        return g
    return Magma(
        elements=tuple(f"[0,{lbl}]" for lbl in g.elements),
        table=g.table,
        meta=g.meta,
        interval_labeled=True,
        identity=g.identity,
    )


def build_loop(n: int, m: int, interval: bool = False) -> Magma:
    """The loop L_n(m) on {e, 1, ..., n}.

    e is the identity, i*i = e, and for distinct nonidentity i, j the
    product is (m*j - (m-1)*i) mod n written with representative in
    1..n (residue 0 stands for n). Requires n odd, n > 3, and both m
    and m-1 coprime to n with 1 < m < n.
    """
    if n <= 3 or n % 2 == 0:
        raise SpecError("n must be odd and > 3")
    if not 1 < m < n:
        raise SpecError("m must satisfy 1 < m < n")
    if math.gcd(m, n) != 1:
        raise SpecError("m must be coprime to n")
    if math.gcd(m - 1, n) != 1:
        raise SpecError("m-1 must be coprime to n")
    k = n + 1
    table = [[0] * k for _ in range(k)]
    for j in range(k):
        table[0][j] = j
        table[j][0] = j
    for i in range(1, k):
        for j in range(1, k):
            if i == j:
                table[i][j] = 0
            else:
                r = (m * j - (m - 1) * i) % n
                table[i][j] = r if r else n
    labels = ["e"] + [str(i) for i in range(1, k)]
    g = _finish(labels, table, CarrierMeta("loop", (n, m)))
    return with_interval_labels(g) if interval else g


def loop_parameters(n: int) -> list[int]:
    """All m making L_n(m) well defined, in increasing order."""
    if n <= 3 or n % 2 == 0:
        return []
    return [
        m
        for m in range(2, n)
        if math.gcd(m, n) == 1 and math.gcd(m - 1, n) == 1
    ]


def build_groupoid(n: int, t: int, u: int, interval: bool = False) -> Magma:
    """The groupoid Z_n(t, u): a * b = (t*a + u*b) mod n."""
    if n < 2:
        raise SpecError("groupoid modulus n must be >= 2")
    t %= n
    u %= n
    if t == 0 and u == 0:
        raise SpecError("t and u may not both be 0 mod n")
    table = [[(t * a + u * b) % n for b in range(n)] for a in range(n)]
    labels = [str(a) for a in range(n)]
    g = _finish(labels, table, CarrierMeta("groupoid", (n, t, u)))
    return with_interval_labels(g) if interval else g


def cyclic_group(k: int, interval: bool = False) -> Magma:
    if k < 1:
        raise SpecError("cyclic group order must be >= 1")
    table = [[(a + b) % k for b in range(k)] for a in range(k)]
    labels = ["e"] + [f"g{i}" for i in range(1, k)]
    g = _finish(labels, table, CarrierMeta("cyclic", (k,)))
    return with_interval_labels(g) if interval else g


def dihedral_group(m: int, interval: bool = False) -> Magma:
    """Dihedral group of order 2m: rotations r^i and reflections s r^i.

    Relations: s*s = e, r^m = e, r*s*r = s.
    """
    if m < 2:
        raise SpecError("dihedral parameter m must be >= 2")
    elems = [(f, i) for f in (0, 1) for i in range(m)]
    index = {p: ix for ix, p in enumerate(elems)}

    def mul(p, q):
        f1, i1 = p
        f2, i2 = q
        return ((f1 + f2) % 2, ((i1 if f2 == 0 else -i1) + i2) % m)

    table = [[index[mul(p, q)] for q in elems] for p in elems]
    labels = []
    for f, i in elems:
        if f == 0:
            labels.append("e" if i == 0 else f"r{i}")
        else:
            labels.append("s" if i == 0 else f"sr{i}")
    g = _finish(labels, table, CarrierMeta("dihedral", (m,)))
    return with_interval_labels(g) if interval else g


def symmetric_group(k: int, interval: bool = False) -> Magma:
    """All permutations of k points; (p*q)(x) = q(p(x))."""
    if not 1 <= k <= 6:
        raise SpecError("symmetric-group requires 1 <= k <= 6")
    perms = sorted(permutations(range(k)))
    index = {p: ix for ix, p in enumerate(perms)}
    table = [
        [index[tuple(q[p[x]] for x in range(k))] for q in perms] for p in perms
    ]
    labels = ["e"] + [f"p{i}" for i in range(1, len(perms))]
    g = _finish(labels, table, CarrierMeta("symmetric-group", (k,)))
    return with_interval_labels(g) if interval else g


def symmetric_semigroup(k: int, interval: bool = False) -> Magma:
    """All k^k self-maps of k points; (f*g)(x) = g(f(x)).

    The identity map is listed first, the remaining maps in
    lexicographic order.
    """
    if not 1 <= k <= 5:
        raise SpecError("symmetric-semigroup requires 1 <= k <= 5")
    ident = tuple(range(k))
    maps = [ident] + [
        f for f in sorted(product(range(k), repeat=k)) if f != ident
    ]
    index = {f: ix for ix, f in enumerate(maps)}
    table = [
        [index[tuple(h[f[x]] for x in range(k))] for h in maps] for f in maps
    ]
    labels = ["e"] + [f"f{i}" for i in range(1, len(maps))]
    g = _finish(labels, table, CarrierMeta("symmetric-semigroup", (k,)))
    return with_interval_labels(g) if interval else g


def mult_semigroup_zn(n: int, interval: bool = False) -> Magma:
    """Residues 0..n-1 under multiplication mod n, in residue order."""
    if n < 2:
        raise SpecError("mult-semigroup modulus n must be >= 2")
    table = [[(a * b) % n for b in range(n)] for a in range(n)]
    labels = [str(a) for a in range(n)]
    g = _finish(labels, table, CarrierMeta("mult-semigroup", (n,)))
    return with_interval_labels(g) if interval else g


def additive_group_zn(n: int, interval: bool = False) -> Magma:
    if n < 1:
        raise SpecError("additive-group modulus n must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    labels = [str(a) for a in range(n)]
    g = _finish(labels, table, CarrierMeta("additive-group", (n,)))
    return with_interval_labels(g) if interval else g


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mult_group_zp(p: int, interval: bool = False) -> Magma:
    """Nonzero residues 1..p-1 under multiplication mod p (p prime)."""
    if not _is_prime(p):
        raise SpecError("p must be prime")
    res = list(range(1, p))
    table = [[(a * b) % p - 1 for b in res] for a in res]
    labels = [str(a) for a in res]
    g = _finish(labels, table, CarrierMeta("mult-group", (p,)))
    return with_interval_labels(g) if interval else g


_STANDARD_BUILDERS = {
    "loop": (build_loop, ("n", "m")),
    "groupoid": (build_groupoid, ("n", "t", "u")),
    "cyclic": (cyclic_group, ("k",)),
    "dihedral": (dihedral_group, ("m",)),
    "symmetric-group": (symmetric_group, ("k",)),
    "symmetric-semigroup": (symmetric_semigroup, ("k",)),
    "mult-semigroup": (mult_semigroup_zn, ("n",)),
    "additive-group": (additive_group_zn, ("n",)),
    "mult-group": (mult_group_zp, ("p",)),
}


def carrier_kinds() -> list[str]:
    return sorted(_STANDARD_BUILDERS)


def build_carrier(kind: str, interval: bool = False, **params) -> Magma:
    """Build any carrier by kind name; used by the CLI and spec files."""
    if kind not in _STANDARD_BUILDERS:
        raise SpecError(
            f"unknown carrier kind {kind!r}; known: {carrier_kinds()}"
        )
    fn, names = _STANDARD_BUILDERS[kind]
    missing = [p for p in names if p not in params]
    if missing:
        raise SpecError(f"carrier kind {kind!r} requires parameters {list(names)}")
    unknown = set(params) - set(names)
    if unknown:
        raise SpecError(
            f"unknown parameters for carrier kind {kind!r}: {sorted(unknown)}"
        )
    for p in names:
        if not isinstance(params[p], int):
            raise SpecError(f"carrier parameter {p!r} must be an integer")
    args = [params[p] for p in names]
    return fn(*args, interval=interval)


def carrier_to_json(g: Magma) -> dict:
    return {
        "elements": list(g.elements),
        "table": [list(row) for row in g.table],
    }


def render_table(g: Magma) -> str:
    """Text grid: corner '*', header labels, one row per left factor."""
    rows = [["*"] + list(g.elements)]
    for i in range(g.order):
        rows.append([g.elements[i]] + [g.elements[g.table[i][j]] for j in range(g.order)])
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    lines = [
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    ]
    return "\n".join(lines)


# law checking

@dataclass(frozen=True)
class LawProfile:
    """Exhaustively evaluated identity laws for one finite magma.

    Exact identities tested (x, y, z range over all elements):

    - commutative: x*y = y*x
    - associative: (x*y)*z = x*(y*z)
    - latin_square: every row and every column is a permutation
    - has_identity: some e with e*x = x*e = x
    - moufang: (x*y)*(z*x) = (x*(y*z))*x
    - left_bol: x*(y*(x*z)) = (x*(y*x))*z
    - right_bol: ((x*y)*z)*y = x*((y*z)*y)
    - wip: (x*y)*z = e exactly when x*(y*z) = e (False without identity)
    - left_alternative: (x*y)*y = x*(y*y)
    - right_alternative: x*(x*y) = (x*x)*y
    - p_groupoid: (x*y)*x = x*(y*x)
    - idempotent_law: x*x = x
    - smarandache: the magma contains a proper closed subset of at least
      two elements on which * is associative (trivial singletons do not
      count); decided exactly by scanning closures of all singles and
      pairs

    ``witnesses`` holds, for each False law, the first violating index
    tuple in lexicographic scan order; for smarandache it instead holds
    the certifying subset when the flag is True.
    """

    commutative: bool
    associative: bool
    latin_square: bool
    has_identity: bool
    moufang: bool
    left_bol: bool
    right_bol: bool
    wip: bool
    left_alternative: bool
    right_alternative: bool
    p_groupoid: bool
    idempotent_law: bool
    smarandache: bool
    witnesses: dict = field(compare=True, default_factory=dict)


def _w_commutative(t, k):
    for x in range(k):
        for y in range(x + 1, k):
            if t[x][y] != t[y][x]:
                return (x, y)
    return None


def _w_associative(t, k):
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    return (x, y, z)
    return None


def _w_latin(t, k):
    for x in range(k):
        seen = {}
        for y in range(k):
            v = t[x][y]
            if v in seen:
                return (0, x, seen[v], y)
            seen[v] = y
    for y in range(k):
        seen = {}
        for x in range(k):
            v = t[x][y]
            if v in seen:
                return (1, seen[v], x, y)
            seen[v] = x
    return None


def _w_moufang(t, k):
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if t[t[x][y]][t[z][x]] != t[t[x][t[y][z]]][x]:
                    return (x, y, z)
    return None


def _w_left_bol(t, k):
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if t[x][t[y][t[x][z]]] != t[t[x][t[y][x]]][z]:
                    return (x, y, z)
    return None


def _w_right_bol(t, k):
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if t[t[t[x][y]][z]][y] != t[x][t[t[y][z]][y]]:
                    return (x, y, z)
    return None


def _w_wip(t, k, e):
    if e is None:
        return ()
    for x in range(k):
        for y in range(k):
            for z in range(k):
                if (t[t[x][y]][z] == e) != (t[x][t[y][z]] == e):
                    return (x, y, z)
    return None


def _w_left_alternative(t, k):
    # (x*y)*y = x*(y*y)
    for x in range(k):
        for y in range(k):
            if t[t[x][y]][y] != t[x][t[y][y]]:
                return (x, y)
    return None


def _w_right_alternative(t, k):
    # x*(x*y) = (x*x)*y
    for x in range(k):
        for y in range(k):
            if t[x][t[x][y]] != t[t[x][x]][y]:
                return (x, y)
    return None


def _w_p_law(t, k):
    for x in range(k):
        for y in range(k):
            if t[t[x][y]][x] != t[x][t[y][x]]:
                return (x, y)
    return None


def _w_idempotent(t, k):
    for x in range(k):
        if t[x][x] != x:
            return (x,)
    return None


def closure_of(g: Magma, seed) -> frozenset:
    """Smallest subset containing seed and closed under the operation."""
    t = g.table
    current = set(seed)
    frontier = list(current)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(current):
                for v in (t[x][y], t[y][x]):
                    if v not in current:
                        current.add(v)
                        nxt.append(v)
        frontier = nxt
    return frozenset(current)


def _associative_within(t, subset) -> bool:
    sub = sorted(subset)
    for x in sub:
        for y in sub:
            for z in sub:
                if t[t[x][y]][z] != t[x][t[y][z]]:
                    return False
    return True


def _smarandache_certificate(g: Magma) -> Optional[tuple[int, ...]]:
    # Any associative closed proper subset P with at least two elements
    # contains closure({x, y}) for each pair x, y in P, and that closure is
    # itself closed, associative, proper, and of size >= 2; so scanning the
    # closures of all pairs (plus singles, whose closures may grow) decides
    # the flag exactly.
    k = g.order
    best = None
    seeds = [(x,) for x in range(k)] + list(combinations(range(k), 2))
    for seed in seeds:
        c = closure_of(g, seed)
        if 2 <= len(c) < k and _associative_within(g.table, c):
            cert = tuple(sorted(c))
            if best is None or (len(cert), cert) < (len(best), best):
                best = cert
    return best


def check_laws(g: Magma) -> LawProfile:
    """Evaluate every law exhaustively; relabeling never changes the result."""
    t = g.table
    k = g.order
    witnesses = {}

    def record(name, w):
        if w is not None:
            witnesses[name] = w
        return w is None

    commutative = record("commutative", _w_commutative(t, k))
    associative = record("associative", _w_associative(t, k))
    latin = record("latin_square", _w_latin(t, k))
    has_identity = g.identity is not None
    if not has_identity:
        witnesses["has_identity"] = ()
    moufang = record("moufang", _w_moufang(t, k))
    left_bol = record("left_bol", _w_left_bol(t, k))
    right_bol = record("right_bol", _w_right_bol(t, k))
    wip = record("wip", _w_wip(t, k, g.identity))
    left_alt = record("left_alternative", _w_left_alternative(t, k))
    right_alt = record("right_alternative", _w_right_alternative(t, k))
    p_groupoid = record("p_groupoid", _w_p_law(t, k))
    idempotent = record("idempotent_law", _w_idempotent(t, k))
    cert = _smarandache_certificate(g)
    if cert is not None:
        witnesses["smarandache"] = cert
    return LawProfile(
        commutative=commutative,
        associative=associative,
        latin_square=latin,
        has_identity=has_identity,
        moufang=moufang,
        left_bol=left_bol,
        right_bol=right_bol,
        wip=wip,
        left_alternative=left_alt,
        right_alternative=right_alt,
        p_groupoid=p_groupoid,
        idempotent_law=idempotent,
        smarandache=cert is not None,
        witnesses=witnesses,
    )


def loop_law_summary(g: Magma) -> dict:
    """The cheap law subset used by the loop sweep: quadratic checks only,
    plus WIP (cubic, but early-exiting)."""
    t = g.table
    k = g.order
    return {
        "latin_square": _w_latin(t, k) is None,
        "has_identity": g.identity is not None,
        "commutative": _w_commutative(t, k) is None,
        "left_alternative": _w_left_alternative(t, k) is None,
        "right_alternative": _w_right_alternative(t, k) is None,
        "wip": _w_wip(t, k, g.identity) is None,
    }


def validate_witness(g: Magma, law: str, witness: tuple) -> bool:
    """Re-evaluate a recorded witness: True when it still violates the law."""
    t = g.table
    if law == "commutative":
        x, y = witness
        return t[x][y] != t[y][x]
    if law == "associative":
        x, y, z = witness
        return t[t[x][y]][z] != t[x][t[y][z]]
    if law == "latin_square":
        kind, a, b, c = witness
        if kind == 0:
            return t[a][b] == t[a][c] and b != c
        return t[a][c] == t[b][c] and a != b
    if law == "moufang":
        x, y, z = witness
        return t[t[x][y]][t[z][x]] != t[t[x][t[y][z]]][x]
    if law == "left_bol":
        x, y, z = witness
        return t[x][t[y][t[x][z]]] != t[t[x][t[y][x]]][z]
    if law == "right_bol":
        x, y, z = witness
        return t[t[t[x][y]][z]][y] != t[x][t[t[y][z]][y]]
    if law == "wip":
        if witness == ():
            return g.identity is None
        x, y, z = witness
        e = g.identity
        return (t[t[x][y]][z] == e) != (t[x][t[y][z]] == e)
    if law == "left_alternative":
        x, y = witness
        return t[t[x][y]][y] != t[x][t[y][y]]
    if law == "right_alternative":
        x, y = witness
        return t[x][t[x][y]] != t[t[x][x]][y]
    if law == "p_groupoid":
        x, y = witness
        return t[t[x][y]][x] != t[x][t[y][x]]
    if law == "idempotent_law":
        (x,) = witness
        return t[x][x] != x
    if law == "smarandache":
        subset = frozenset(witness)
        return (
            2 <= len(subset) < g.order
            and closure_of(g, subset) == subset
            and _associative_within(g.table, subset)
        )
    raise SpecError(f"unknown law {law!r}")


def associator_closure(g: Magma) -> tuple[int, ...]:
    """Subloop generated by all associators a with (xy)z = (x(yz)) * a."""
    if g.identity is None or _w_latin(g.table, g.order) is not None:
        raise SpecError("associator closure requires a loop")
    t = g.table
    k = g.order
    # pos[w][v] = a with w * a = v (rows are permutations)
    pos = [[0] * k for _ in range(k)]
    for w in range(k):
        for a in range(k):
            pos[w][t[w][a]] = a
    assoc = set()
    for x in range(k):
        for y in range(k):
            xy = t[x][y]
            for z in range(k):
                v = t[xy][z]
                w = t[x][t[y][z]]
                assoc.add(pos[w][v])
    assoc.add(g.identity)
    return tuple(sorted(closure_of(g, assoc)))


def _is_closed(t, subset) -> bool:
    s = set(subset)
    return all(t[x][y] in s for x in subset for y in subset)


def _is_subgroup(t, subset) -> bool:
    if not _is_closed(t, subset) or not _associative_within(t, subset):
        return False
    ident = None
    for e in subset:
        if all(t[e][x] == x and t[x][e] == x for x in subset):
            ident = e
            break
    if ident is None:
        return False
    for x in subset:
        if not any(t[x][y] == ident and t[y][x] == ident for y in subset):
            return False
    return True


def enumerate_substructures(
    g: Magma,
    kind: str,
    max_size: Optional[int] = None,
    mode: Optional[str] = None,
) -> list[tuple[int, ...]]:
    """Subsets of g closed under * of the requested kind.

    kind: "subloop" (closed, contains the identity; g must be a loop),
    "subgroup", or "subsemigroup". Exhaustive search enumerates all
    subsets up to max_size and is guarded to |g| <= 24; generated mode
    closes every single element and unordered pair instead.
    """
    if kind not in ("subloop", "subgroup", "subsemigroup"):
        raise SpecError(f"unknown substructure kind {kind!r}")
    if kind == "subloop" and (
        g.identity is None or _w_latin(g.table, g.order) is not None
    ):
        raise SpecError("subloop enumeration requires a loop")
    k = g.order
    if max_size is None:
        max_size = k
    if mode is None:
        mode = "exhaustive" if k <= 24 else "generated"
    if mode not in ("exhaustive", "generated"):
        raise SpecError(f"unknown search mode {mode!r}")
    t = g.table

    def admits(subset) -> bool:
        if kind == "subloop":
            return g.identity in subset and _is_closed(t, subset)
        if kind == "subgroup":
            return _is_subgroup(t, subset)
        return _is_closed(t, subset) and _associative_within(t, subset)

    found = set()
    if mode == "exhaustive":
        if k > 24:
            raise SpecError("exhaustive substructure search is limited to 24 elements")
        pool = list(range(k))
        for size in range(1, min(max_size, k) + 1):
            for subset in combinations(pool, size):
                if admits(subset):
                    found.add(subset)
    else:
        seeds = [(x,) for x in range(k)] + list(combinations(range(k), 2))
        for seed in seeds:
            c = tuple(sorted(closure_of(g, seed)))
            if len(c) <= max_size and admits(c):
                found.add(c)
    return sorted(found, key=lambda s: (len(s), s))


def normalizers(g: Magma, h) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """First and second normalizers of the subloop h inside the loop g.

    n1 = { a : a*H = H*a as sets },  n2 = { a : a*(H*a) = H as sets }.
    """
    if g.identity is None or _w_latin(g.table, g.order) is not None:
        raise SpecError("normalizers require a loop")
    hset = frozenset(h)
    if not hset or any(not 0 <= x < g.order for x in hset):
        raise SpecError("h must be a nonempty subset of g")
    if g.identity not in hset or not _is_closed(g.table, hset):
        raise SpecError("h must be a subloop (closed and containing the identity)")
    t = g.table
    n1 = tuple(
        a
        for a in range(g.order)
        if {t[a][x] for x in hset} == {t[x][a] for x in hset}
    )
    n2 = tuple(
        a
        for a in range(g.order)
        if {t[a][t[x][a]] for x in hset} == hset
    )
    return (n1, n2)
