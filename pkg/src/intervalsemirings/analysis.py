"""Semiring-level analysis: special elements, classification, searches, sweeps.

Every query runs against a :class:`SemiringHandle`, a uniform facade over the
three semiring constructions in this package (interval domains, formal sums,
matrices).  Finite handles within the enumeration guard are scanned
exhaustively; infinite or oversized handles fall back to structural arguments
(reported with ``exhaustive=True`` only when the argument actually decides the
query) or to pattern instantiations (reported with ``exhaustive=False``).
"""

from dataclasses import dataclass
from fractions import Fraction
import itertools
import json

import numpy as np

from .carriers import Magma, build_loop, loop_law_summary, loop_parameters
from .domains import (
    CHAIN,
    NAT,
    NEUTRO_MIXED,
    NEUTRO_PURE,
    RAT,
    TABLE,
    ZN,
    DomainSpec,
    IntervalElem,
    dom_units,
    domain_elements,
    domain_size,
    domain_zero,
    element,
    element_key,
    format_element,
    is_finite_domain,
    is_strict_domain,
    neutro_pure,
    zn_interval,
)
from .errors import SpecError
from .formalsums import (
    FormalSum,
    PolyBasis,
    SemiringSpec,
    basis_is_finite,
    basis_keys,
    basis_token,
    enumerate_elements,
    fs_one,
    fs_term,
    fs_zero,
    semiring_size,
)
from .matrices import (
    ROW,
    SQUARE,
    IntervalMatrix,
    identity_matrix,
    render_matrix,
    zero_matrix,
)

_ENUM_GUARD = 1 << 20
_GENERATED_GUARD = 1 << 14
_EXHAUSTIVE_SUBSET_LIMIT = 20
_CLOSURE_CAP = 4096


def _describe_domain_short(d):
    if d.kind == ZN:
        return f"zn({d.n})"
    if d.kind == NAT:
        return "nat" if d.multiple == 1 else f"nat(multiple={d.multiple})"
    if d.kind == RAT:
        return "rat"
    if d.kind == CHAIN:
        return f"chain({d.k})"
    if d.kind == TABLE:
        return f"table({d.k})"
    if d.kind == NEUTRO_PURE:
        return f"neutro-pure({_describe_domain_short(d.base)})"
    return f"neutro-mixed({_describe_domain_short(d.base)})"


def _describe_basis(spec):
    b = spec.basis
    if isinstance(b, PolyBasis):
        return "poly" if b.cyclic is None else f"poly-cyclic-{b.cyclic}"
    params = ",".join(str(v) for v in b.meta.params)
    return f"{b.meta.kind}({params})"


class SemiringHandle:
    """Uniform facade over a domain, formal-sum, or matrix semiring."""

    def __init__(self, kind, *, domain=None, spec=None, shape=None):
        if kind not in ("domain", "formal-sum", "matrix"):
            raise SpecError(f"unknown handle kind {kind!r}")
        if kind == "domain" and domain is None:
            raise SpecError("domain handle requires a domain")
        if kind == "formal-sum" and spec is None:
            raise SpecError("formal-sum handle requires a semiring spec")
        if kind == "matrix":
            if domain is None or shape is None:
                raise SpecError("matrix handle requires a domain and a shape")
            mk, n = shape
            if mk not in (ROW, SQUARE) or not isinstance(n, int) or n < 1:
                raise SpecError(f"invalid matrix shape {shape!r}")
        self.kind = kind
        self.domain = domain
        self.spec = spec
        self.shape = shape
        self._elements = None
        if kind == "domain":
            self.zero = domain_zero(domain)
            self.one = dom_units(domain).one
        elif kind == "formal-sum":
            self.zero = fs_zero(spec)
            self.one = fs_one(spec)
        else:
            self.zero = zero_matrix(domain, shape)
            if dom_units(domain).one is None:
                self.one = None
            else:
                self.one = identity_matrix(domain, shape)

    @classmethod
    def for_domain(cls, domain):
        return cls("domain", domain=domain)

    @classmethod
    def for_formal_sums(cls, spec):
        return cls("formal-sum", spec=spec)

    @classmethod
    def for_matrices(cls, domain, shape):
        return cls("matrix", domain=domain, shape=shape)

    def describe(self):
        if self.kind == "domain":
            return _describe_domain_short(self.domain)
        if self.kind == "formal-sum":
            return (f"formal-sum[{_describe_domain_short(self.spec.coefficients)};"
                    f" {_describe_basis(self.spec)}]")
        mk, n = self.shape
        return f"matrix[{mk},{n}; {_describe_domain_short(self.domain)}]"

    def add(self, x, y):
        return x + y

    def mul(self, x, y):
        return x * y

    def is_finite(self):
        if self.kind == "domain":
            return is_finite_domain(self.domain)
        if self.kind == "formal-sum":
            return (is_finite_domain(self.spec.coefficients)
                    and basis_is_finite(self.spec.basis))
        return is_finite_domain(self.domain)

    def _slot_count(self):
        mk, n = self.shape
        return n if mk == ROW else n * n

    def size(self):
        if not self.is_finite():
            raise SpecError("handle is infinite")
        if self.kind == "domain":
            return domain_size(self.domain)
        if self.kind == "formal-sum":
            return semiring_size(self.spec)
        return domain_size(self.domain) ** self._slot_count()

    def is_enumerable(self):
        return self.is_finite() and self.size() <= _ENUM_GUARD

    def elements(self):
        """All elements in canonical order (guarded)."""
        if self._elements is not None:
            return self._elements
        if not self.is_finite():
            raise SpecError("cannot enumerate an infinite handle")
        if self.size() > _ENUM_GUARD:
            raise SpecError(f"enumeration guard exceeded ({self.size()} elements)")
        if self.kind == "domain":
            out = domain_elements(self.domain)
        elif self.kind == "formal-sum":
            out = enumerate_elements(self.spec)
        else:
            slots = self._slot_count()
            dom = domain_elements(self.domain)
            mk, n = self.shape
            out = []
            for combo in itertools.product(dom, repeat=slots):
                out.append(IntervalMatrix(self.domain, self.shape, tuple(combo)))
        self._elements = out
        return out

    def render(self, x):
        if self.kind == "domain":
            return format_element(x)
        if self.kind == "formal-sum":
            return str(x)
        return render_matrix(x)

    def key(self, x):
        """Sortable canonical key; ordering matches elements()."""
        if self.kind == "domain":
            return element_key(x)
        if self.kind == "formal-sum":
            d = self.spec.coefficients
            if basis_is_finite(self.spec.basis):
                return tuple(element_key(x.coeff(k)) for k in basis_keys(self.spec))
            return tuple((k, element_key(c)) for k, c in x.terms.items())
        d = x.domain
        return tuple(element_key(e) for e in x.entries)

    def pair(self, x, y):
        """Canonical unordered presentation: larger key first."""
        if self.key(x) >= self.key(y):
            return (x, y)
        return (y, x)


@dataclass(frozen=True)
class Finding:
    """One analysis result: a kind tag, rendered witness, raw payload."""

    kind: str
    witness: tuple
    elements: tuple = ()

    def to_json(self):
        return {"kind": self.kind, "witness": list(self.witness)}


@dataclass(frozen=True)
class AnalysisReport:
    query: str
    findings: tuple
    exhaustive: bool
    budget_spent: dict

    def to_json(self):
        return {
            "query": self.query,
            "exhaustive": self.exhaustive,
            "findings": [f.to_json() for f in self.findings],
            "budget": dict(self.budget_spent),
        }

    def to_json_str(self):
        return json.dumps(self.to_json())

    def kinds(self):
        return [f.kind for f in self.findings]


def _report(query, findings, exhaustive, scanned):
    return AnalysisReport(query=query, findings=tuple(findings),
                          exhaustive=exhaustive,
                          budget_spent={"pairs_scanned": scanned})


def _wit(h, *items):
    return tuple(it if isinstance(it, str) else h.render(it) for it in items)


def _sorted_elements(h):
    return sorted(h.elements(), key=h.key)


def _first_nonzero_scalar(d):
    """Smallest nonzero coefficient whose square is nonzero, if one exists."""
    if d.kind == NAT:
        return element(d, d.multiple)
    if d.kind == RAT:
        return element(d, Fraction(1))
    zero = domain_zero(d)
    for c in domain_elements(d):
        if c != zero and c * c != zero:
            return c
    return None


# ---------------------------------------------------------------------------
# special-element searches


def find_zero_divisors(h, budget=None):
    """All unordered zero-divisor pairs; one-sided pairs reported separately.

    Pairs (x, y) of nonzero elements with x*y = y*x = 0 yield kind
    "zero-divisor" (witness printed larger key first); when only one
    orientation vanishes the kind is "one-sided-zero-divisor" and the witness
    order is the vanishing one.
    """
    query = f"zero-divisors on {h.describe()}"
    if not h.is_enumerable():
        return _zero_divisor_patterns(h, query)
    elems = _sorted_elements(h)
    zero = h.zero
    nz = [x for x in elems if x != zero]
    findings = []
    scanned = 0
    exhaustive = True
    for i, x in enumerate(nz):
        for y in nz[i:]:
            if budget is not None and scanned >= budget:
                exhaustive = False
                break
            scanned += 1
            xy = h.mul(x, y)
            yx = xy if x == y else h.mul(y, x)
            if xy == zero and yx == zero:
                a, b = h.pair(x, y)
                findings.append(Finding("zero-divisor", _wit(h, a, b), (a, b)))
            elif xy == zero:
                findings.append(Finding("one-sided-zero-divisor",
                                        _wit(h, x, y), (x, y)))
            elif yx == zero:
                findings.append(Finding("one-sided-zero-divisor",
                                        _wit(h, y, x), (y, x)))
        if not exhaustive:
            break
    return _report(query, findings, exhaustive, scanned)


def _domain_zero_divisor_pair(d):
    """Minimal nonzero pair with zero product in a finite domain, or None."""
    zero = domain_zero(d)
    elems = [x for x in domain_elements(d) if x != zero]
    for x, y in itertools.combinations_with_replacement(elems, 2):
        if x * y == zero and y * x == zero:
            return (y, x) if element_key(y) > element_key(x) else (x, y)
    return None


def _zero_divisor_patterns(h, query):
    if h.kind == "domain":
        # nat, rat, and neutrosophic domains over them have no zero divisors:
        # products and the I-coefficient combination ad+bc+bd are sums of
        # products of nonnegatives, zero only when a factor is zero.
        return _report(query, [], True, 0)
    if h.kind == "formal-sum":
        return _formal_sum_zero_divisor_patterns(h, query)
    return _matrix_zero_divisor_patterns(h, query)


def _formal_sum_zero_divisor_patterns(h, query):
    spec = h.spec
    d = spec.coefficients
    findings = []
    keys = None
    if basis_is_finite(spec.basis):
        keys = basis_keys(spec)
    k0 = keys[0] if keys else 0
    if is_finite_domain(d):
        pair = _domain_zero_divisor_pair(d)
        if pair is not None:
            a, b = pair
            x = fs_term(spec, k0, a)
            y = fs_term(spec, k0, b)
            findings.append(Finding("zero-divisor", _wit(h, x, y), (x, y)))
    if spec.absorb_zero_basis and keys is not None:
        g = spec.basis
        z = g.absorbing_index()
        c = _first_nonzero_scalar(d)
        if c is not None:
            done = False
            for gi in keys:
                for hj in keys:
                    if g.op(gi, hj) == z:
                        x = fs_term(spec, gi, c)
                        y = fs_term(spec, hj, c)
                        pr = h.mul(x, y)
                        if pr == h.zero and h.mul(y, x) == h.zero:
                            a, b = h.pair(x, y)
                            findings.append(
                                Finding("zero-divisor", _wit(h, a, b), (a, b)))
                            done = True
                            break
                if done:
                    break
    if findings:
        return _report(query, findings, False, 0)
    # No findings: structurally complete only over a strict, zero-divisor-free
    # coefficient domain (coefficients of a product are sums of nonzero
    # products, hence nonzero).
    strict, _ = is_strict_domain(d)
    if strict:
        if is_finite_domain(d):
            zdfree = _domain_zero_divisor_pair(d) is None
        else:
            zdfree = True
        if zdfree:
            return _report(query, [], True, 0)
    return _report(query, [], False, 0)


def _matrix_zero_divisor_patterns(h, query):
    mk, n = h.shape
    d = h.domain
    if n == 1:
        inner = find_zero_divisors(SemiringHandle.for_domain(d))
        findings = []
        for f in inner.findings:
            mats = tuple(IntervalMatrix(d, h.shape, (e,)) for e in f.elements)
            findings.append(Finding(f.kind, _wit(h, *mats), mats))
        return _report(query, findings, inner.exhaustive,
                       inner.budget_spent["pairs_scanned"])
    c = _first_nonzero_scalar(d)
    if c is None:
        return _report(query, [], False, 0)
    zero = domain_zero(d)
    slots = h._slot_count()
    ex = [zero] * slots
    ey = [zero] * slots
    if mk == ROW:
        ex[0] = c
        ey[1] = c
    else:
        ex[0] = c        # entry (0, 0)
        ey[n + 1] = c    # entry (1, 1)
    x = IntervalMatrix(d, h.shape, tuple(ex))
    y = IntervalMatrix(d, h.shape, tuple(ey))
    findings = []
    if h.mul(x, y) == h.zero and h.mul(y, x) == h.zero:
        a, b = h.pair(x, y)
        findings.append(Finding("zero-divisor", _wit(h, a, b), (a, b)))
    return _report(query, findings, False, 0)


def find_idempotents(h):
    """All x with x*x = x (exhaustive when enumerable)."""
    query = f"idempotents on {h.describe()}"
    if not h.is_enumerable():
        return _idempotent_patterns(h, query)
    findings = []
    scanned = 0
    for x in _sorted_elements(h):
        scanned += 1
        if h.mul(x, x) == x:
            findings.append(Finding("idempotent", _wit(h, x), (x,)))
    return _report(query, findings, True, scanned)


def _domain_idempotents_structural(d):
    """(elements, complete) for an infinite domain."""
    zero = domain_zero(d)
    one = dom_units(d).one
    if d.kind in (NAT, RAT):
        # a*a = a over nonnegative integers or rationals forces a in {0, 1}.
        out = [zero]
        if one is not None:
            out.append(one)
        return out, True
    if d.kind in (NEUTRO_PURE, NEUTRO_MIXED) and d.base.kind in (NAT, RAT):
        # (a+bI)^2 = a+bI forces a in {0,1}; then b(b+2a-1) = 0 over
        # nonnegatives leaves [0,0], [0,I], [0,1] (pure: [0,0], [0,I]).
        out = [zero]
        if d.kind == NEUTRO_PURE:
            if d.base.multiple == 1:
                out.append(element(d, 0, 1))
        else:
            if d.base.multiple == 1:
                out.append(element(d, 0, 1))
                out.append(element(d, 1, 0))
        return out, True
    return [zero], False


def _idempotent_patterns(h, query):
    findings = []
    if h.kind == "domain":
        elems, complete = _domain_idempotents_structural(h.domain)
        for x in sorted(elems, key=element_key):
            findings.append(Finding("idempotent", _wit(h, x), (x,)))
        return _report(query, findings, complete, 0)
    if h.kind == "formal-sum":
        spec = h.spec
        d = spec.coefficients
        if is_finite_domain(d):
            zero = domain_zero(d)
            dom_idem = [c for c in domain_elements(d) if c * c == c and c != zero]
        else:
            dom_idem, _ = _domain_idempotents_structural(d)
            dom_idem = [c for c in dom_idem if c != domain_zero(d)]
        findings.append(Finding("idempotent", _wit(h, h.zero), (h.zero,)))
        if basis_is_finite(spec.basis):
            for k in basis_keys(spec):
                if _basis_product(spec, k, k) == k:
                    for c in dom_idem:
                        x = fs_term(spec, k, c)
                        if h.mul(x, x) == x:
                            findings.append(
                                Finding("idempotent", _wit(h, x), (x,)))
        return _report(query, findings, False, 0)
    # matrices: diagonal 0/1 patterns when the domain has a one
    d = h.domain
    one = dom_units(d).one
    zero = domain_zero(d)
    choices = [zero] if one is None else [zero, one]
    mk, n = h.shape
    count = len(choices) ** n
    if count <= 256:
        for combo in itertools.product(choices, repeat=n):
            if mk == ROW:
                x = IntervalMatrix(d, h.shape, tuple(combo))
            else:
                entries = [zero] * (n * n)
                for i, c in enumerate(combo):
                    entries[i * n + i] = c
                x = IntervalMatrix(d, h.shape, tuple(entries))
            if h.mul(x, x) == x:
                findings.append(Finding("idempotent", _wit(h, x), (x,)))
    complete = mk == ROW and d.kind in (NAT, RAT) and count <= 256
    # row matrices over nat/rat are idempotent exactly when every entry is,
    # and entrywise idempotents are only 0 and 1
    return _report(query, findings, complete, 0)


def _basis_product(spec, g, h):
    b = spec.basis
    if isinstance(b, PolyBasis):
        s = g + h
        return s if b.cyclic is None else s % b.cyclic
    return b.op(g, h)


def find_units(h):
    """All x with a two-sided inverse; requires one and a finite handle."""
    query = f"units on {h.describe()}"
    if h.one is None:
        raise SpecError("units are undefined without a multiplicative identity")
    if not h.is_enumerable():
        raise SpecError("unit enumeration requires a finite handle")
    elems = _sorted_elements(h)
    one = h.one
    findings = []
    scanned = 0
    for x in elems:
        for y in elems:
            scanned += 1
            if h.mul(x, y) == one and h.mul(y, x) == one:
                findings.append(Finding("unit", _wit(h, x, y), (x, y)))
                break
    return _report(query, findings, True, scanned)


def find_nilpotents(h, max_index=8):
    """All nonzero x with some left-nested power zero, up to max_index.

    Powers are accumulated left-nested (((x*x)*x)*x)...; for nonassociative
    handles indices above 2 depend on that bracketing by definition.
    """
    query = f"nilpotents on {h.describe()}"
    if not isinstance(max_index, int) or not 2 <= max_index <= 8:
        raise SpecError("max_index must be an integer between 2 and 8")
    if not h.is_enumerable():
        raise SpecError("nilpotent enumeration requires a finite handle")
    zero = h.zero
    findings = []
    scanned = 0
    for x in _sorted_elements(h):
        if x == zero:
            continue
        p = x
        for idx in range(2, max_index + 1):
            scanned += 1
            p = h.mul(p, x)
            if p == zero:
                findings.append(Finding(f"nilpotent-index-{idx}",
                                        _wit(h, x), (x,)))
                break
    return _report(query, findings, True, scanned)


# ---------------------------------------------------------------------------
# Smarandache special elements

_S_KINDS = ("s-zero-divisor", "s-anti-zero-divisor", "s-idempotent", "s-unit")


def find_s_special(h, kind, budget=None):
    """Certificate search for the four auxiliary-witness special elements.

    - s-zero-divisor: anchor pair (a, b), a*b = 0, with x, y outside
      {a, b, 0}, x != y, a*x or x*a zero, b*y or y*b zero, x*y or y*x nonzero.
    - s-anti-zero-divisor: anchor x with y, x*y != 0, and a, b outside
      {0, x, y} where a*x or x*a nonzero, b*y or y*b nonzero, a*b or b*a zero.
    - s-idempotent: a*a = a nontrivial, with b != a, b*b = a, and exactly one
      of (a*b = b or b*a = b) / (b*a = a or a*b = a).
    - s-unit: x != 1 with x*y = y*x = 1 and a, b outside {x, y, 1} where
      a sends x to y, b sends y back to x, and a*b = 1.

    Witnesses carry the full certificate tuple.  The budget caps scanned
    anchors.
    """
    if kind not in _S_KINDS:
        raise SpecError(f"unknown special-element kind {kind!r} "
                        f"(available: {', '.join(_S_KINDS)})")
    query = f"{kind} on {h.describe()}"
    if not h.is_enumerable():
        return _s_special_patterns(h, kind, query)
    if kind == "s-unit" and h.one is None:
        raise SpecError("s-units are undefined without a multiplicative identity")
    elems = _sorted_elements(h)
    zero = h.zero
    nz = [x for x in elems if x != zero]
    if kind == "s-zero-divisor":
        return _scan_s_zero_divisors(h, query, nz, zero, budget)
    if kind == "s-anti-zero-divisor":
        return _scan_s_anti_zero_divisors(h, query, nz, zero, budget)
    if kind == "s-idempotent":
        return _scan_s_idempotents(h, query, nz, zero, budget)
    return _scan_s_units(h, query, elems, budget)


def _scan_s_zero_divisors(h, query, nz, zero, budget):
    findings = []
    scanned = 0
    exhaustive = True
    for i, a in enumerate(nz):
        stop = False
        for b in nz[i:]:
            if budget is not None and scanned >= budget:
                exhaustive = False
                stop = True
                break
            scanned += 1
            if h.mul(a, b) != zero and h.mul(b, a) != zero:
                continue
            aa, bb = (a, b) if h.mul(a, b) == zero else (b, a)
            cert = _s_zd_certificate(h, aa, bb, nz, zero)
            if cert is not None:
                x, y = cert
                findings.append(Finding("s-zero-divisor",
                                        _wit(h, aa, bb, x, y), (aa, bb, x, y)))
        if stop:
            break
    return _report(query, findings, exhaustive, scanned)


def _s_zd_certificate(h, a, b, nz, zero):
    for x in nz:
        if x == a or x == b:
            continue
        if h.mul(a, x) != zero and h.mul(x, a) != zero:
            continue
        for y in nz:
            if y == a or y == b or y == x:
                continue
            if h.mul(b, y) != zero and h.mul(y, b) != zero:
                continue
            if h.mul(x, y) != zero or h.mul(y, x) != zero:
                return (x, y)
    return None


def _scan_s_anti_zero_divisors(h, query, nz, zero, budget):
    findings = []
    scanned = 0
    exhaustive = True
    for x in nz:
        if budget is not None and scanned >= budget:
            exhaustive = False
            break
        scanned += 1
        cert = None
        for y in nz:
            if y == x:
                continue
            if h.mul(x, y) == zero:
                continue
            for a in nz:
                if a == x or a == y:
                    continue
                if h.mul(a, x) == zero and h.mul(x, a) == zero:
                    continue
                for b in nz:
                    if b == x or b == y:
                        continue
                    if h.mul(b, y) == zero and h.mul(y, b) == zero:
                        continue
                    if h.mul(a, b) == zero or h.mul(b, a) == zero:
                        cert = (y, a, b)
                        break
                if cert:
                    break
            if cert:
                break
        if cert:
            y, a, b = cert
            findings.append(Finding("s-anti-zero-divisor",
                                    _wit(h, x, y, a, b), (x, y, a, b)))
    return _report(query, findings, exhaustive, scanned)


def _scan_s_idempotents(h, query, nz, zero, budget):
    findings = []
    scanned = 0
    exhaustive = True
    one = h.one
    for a in nz:
        if budget is not None and scanned >= budget:
            exhaustive = False
            break
        scanned += 1
        if h.mul(a, a) != a or (one is not None and a == one):
            continue
        for b in nz + [zero]:
            if b == a:
                continue
            if h.mul(b, b) != a:
                continue
            sends_b = h.mul(a, b) == b or h.mul(b, a) == b
            sends_a = h.mul(b, a) == a or h.mul(a, b) == a
            if sends_b != sends_a:
                findings.append(Finding("s-idempotent",
                                        _wit(h, a, b), (a, b)))
                break
    return _report(query, findings, exhaustive, scanned)


def _scan_s_units(h, query, elems, budget):
    findings = []
    scanned = 0
    exhaustive = True
    one = h.one
    for x in elems:
        if x == one:
            continue
        if budget is not None and scanned >= budget:
            exhaustive = False
            break
        scanned += 1
        inv = None
        for y in elems:
            if h.mul(x, y) == one and h.mul(y, x) == one:
                inv = y
                break
        if inv is None:
            continue
        cert = None
        for a in elems:
            if a == x or a == inv or a == one:
                continue
            if h.mul(x, a) != inv and h.mul(a, x) != inv:
                continue
            for b in elems:
                if b == x or b == inv or b == one:
                    continue
                if h.mul(inv, b) != x and h.mul(b, inv) != x:
                    continue
                if h.mul(a, b) == one or h.mul(b, a) == one:
                    cert = (a, b)
                    break
            if cert:
                break
        if cert:
            a, b = cert
            findings.append(Finding("s-unit", _wit(h, x, inv, a, b),
                                    (x, inv, a, b)))
    return _report(query, findings, exhaustive, scanned)


def _support_matrix(h, positions, c):
    d = h.domain
    zero = domain_zero(d)
    entries = [zero] * h._slot_count()
    for p in positions:
        entries[p] = c
    return IntervalMatrix(d, h.shape, tuple(entries))


def _s_special_patterns(h, kind, query):
    if h.kind == "domain" and h.domain.kind in (NAT, RAT):
        d = h.domain
        if kind in ("s-zero-divisor", "s-anti-zero-divisor"):
            # both certificates need a vanishing product of nonzero elements
            return _report(query, [], True, 0)
        if kind == "s-idempotent":
            # idempotents are only 0 and 1, both excluded as anchors
            return _report(query, [], True, 0)
        if d.kind == NAT:
            # the only unit is 1, excluded as an anchor
            return _report(query, [], True, 0)
        x = element(d, Fraction(2))
        y = element(d, Fraction(1, 2))
        a = element(d, Fraction(1, 4))
        b = element(d, Fraction(4))
        return _report(query, [Finding("s-unit", _wit(h, x, y, a, b),
                                       (x, y, a, b))], False, 0)
    if h.kind == "matrix" and h.shape[0] == ROW:
        n = h.shape[1]
        c = _first_nonzero_scalar(h.domain)
        if c is not None and kind == "s-zero-divisor" and n >= 6:
            a = _support_matrix(h, (0, 1), c)
            b = _support_matrix(h, (2, 3), c)
            x = _support_matrix(h, (4, 5), c)
            y = _support_matrix(h, (0, 1, 5), c)
            if _valid_s_zd(h, a, b, x, y):
                return _report(query, [Finding("s-zero-divisor",
                                               _wit(h, a, b, x, y),
                                               (a, b, x, y))], False, 0)
        if c is not None and kind == "s-anti-zero-divisor" and n >= 4:
            x = _support_matrix(h, (0, 1, 2), c)
            y = _support_matrix(h, (1, 2, 3), c)
            a = _support_matrix(h, (0,), c)
            b = _support_matrix(h, (3,), c)
            if _valid_s_anti(h, x, y, a, b):
                return _report(query, [Finding("s-anti-zero-divisor",
                                               _wit(h, x, y, a, b),
                                               (x, y, a, b))], False, 0)
    return _report(query, [], False, 0)


def _valid_s_zd(h, a, b, x, y):
    zero = h.zero
    return (h.mul(a, b) == zero
            and x not in (a, b, zero) and y not in (a, b, zero) and x != y
            and (h.mul(a, x) == zero or h.mul(x, a) == zero)
            and (h.mul(b, y) == zero or h.mul(y, b) == zero)
            and (h.mul(x, y) != zero or h.mul(y, x) != zero))


def _valid_s_anti(h, x, y, a, b):
    zero = h.zero
    return (h.mul(x, y) != zero
            and a not in (zero, x, y) and b not in (zero, x, y)
            and (h.mul(a, x) != zero or h.mul(x, a) != zero)
            and (h.mul(b, y) != zero or h.mul(y, b) != zero)
            and (h.mul(a, b) == zero or h.mul(b, a) == zero))


def validate_s_certificate(h, kind, elements):
    """Recheck a stored certificate tuple against its defining conditions."""
    zero = h.zero
    if kind == "s-zero-divisor":
        a, b, x, y = elements
        return _valid_s_zd(h, a, b, x, y) and (h.mul(a, b) == zero
                                               or h.mul(b, a) == zero)
    if kind == "s-anti-zero-divisor":
        x, y, a, b = elements
        return _valid_s_anti(h, x, y, a, b)
    if kind == "s-idempotent":
        a, b = elements
        if h.mul(a, a) != a or a == zero or (h.one is not None and a == h.one):
            return False
        if b == a or h.mul(b, b) != a:
            return False
        sends_b = h.mul(a, b) == b or h.mul(b, a) == b
        sends_a = h.mul(b, a) == a or h.mul(a, b) == a
        return sends_b != sends_a
    if kind == "s-unit":
        x, y, a, b = elements
        one = h.one
        if one is None or x == one:
            return False
        if h.mul(x, y) != one or h.mul(y, x) != one:
            return False
        if a in (x, y, one) or b in (x, y, one):
            return False
        if h.mul(x, a) != y and h.mul(a, x) != y:
            return False
        if h.mul(y, b) != x and h.mul(b, y) != x:
            return False
        return h.mul(a, b) == one or h.mul(b, a) == one
    raise SpecError(f"unknown special-element kind {kind!r}")


# ---------------------------------------------------------------------------
# substructures


def _materialize_pattern(h, pattern):
    if not isinstance(pattern, str):
        return list(pattern), None
    if pattern.startswith("multiples-of-"):
        try:
            k = int(pattern[len("multiples-of-"):])
        except ValueError:
            raise SpecError(f"bad structural pattern {pattern!r}")
        if k < 1:
            raise SpecError(f"bad structural pattern {pattern!r}")
        if h.kind == "domain" and h.domain.kind == ZN:
            d = h.domain
            return [element(d, v) for v in range(0, d.n, k) if v % k == 0], None
        if h.kind == "domain" and h.domain.kind == NAT:
            return None, k
        raise SpecError("structural patterns apply to zn or nat domain handles")
    raise SpecError(f"unknown structural pattern {pattern!r}")


_SUB_KINDS = ("subsemiring", "ideal", "left-ideal", "right-ideal")


def check_substructure(h, subset, kind="subsemiring"):
    """Verify a subset is a subsemiring or (one/two-sided) ideal.

    Returns (ok, witness); the witness names the failing law and the
    offending elements.  Ideal kinds require a finite handle unless the
    subset is the structural pattern "multiples-of-k" on a nat domain.
    """
    if kind not in _SUB_KINDS:
        raise SpecError(f"unknown substructure kind {kind!r} "
                        f"(available: {', '.join(_SUB_KINDS)})")
    members, nat_multiple = _materialize_pattern(h, subset)
    if members is None:
        # multiples of k in the nat domain: k*s + k*t and s*(k*t) are again
        # multiples of k, so every kind holds structurally
        return (True, None)
    mset = set(members)
    if h.zero not in mset:
        return (False, ("missing-zero",))
    ordered = sorted(mset, key=h.key)
    for x in ordered:
        for y in ordered:
            if h.add(x, y) not in mset:
                return (False, ("not-closed-under-addition", x, y))
            if h.mul(x, y) not in mset:
                return (False, ("not-closed-under-multiplication", x, y))
    if kind == "subsemiring":
        return (True, None)
    if not h.is_enumerable():
        raise SpecError("ideal absorption checks require a finite handle")
    for s in _sorted_elements(h):
        for p in ordered:
            if kind in ("ideal", "left-ideal") and h.mul(s, p) not in mset:
                return (False, ("not-absorbing-left", s, p))
            if kind in ("ideal", "right-ideal") and h.mul(p, s) not in mset:
                return (False, ("not-absorbing-right", p, s))
    return (True, None)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class Classification:
    strict: bool
    commutative: bool
    has_one: bool
    zero_divisor_free: bool
    semifield: bool
    witnesses: dict
    exhaustive: bool

    def to_json(self):
        return {
            "strict": self.strict,
            "commutative": self.commutative,
            "has_one": self.has_one,
            "zero_divisor_free": self.zero_divisor_free,
            "semifield": self.semifield,
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "exhaustive": self.exhaustive,
        }


def classify_semiring(h):
    """Flags strict / commutative / has_one / zero_divisor_free / semifield.

    Every False flag carries a witness.  Enumerable handles are scanned
    exhaustively; infinite handles are classified structurally.
    """
    if h.is_enumerable():
        return _classify_scan(h)
    return _classify_structural(h)


def _classify_scan(h):
    elems = _sorted_elements(h)
    zero = h.zero
    witnesses = {}
    best = None
    for i, x in enumerate(elems):
        for y in elems[i:]:
            if h.add(x, y) == zero and not (x == zero and y == zero):
                a, b = h.pair(x, y)
                k = (h.key(a), h.key(b))
                if best is None or k < best[0]:
                    best = (k, (a, b))
    strict = best is None
    if not strict:
        witnesses["strict"] = _wit(h, *best[1])
    commutative = True
    for i, x in enumerate(elems):
        for y in elems[i + 1:]:
            if h.mul(x, y) != h.mul(y, x):
                witnesses["commutative"] = _wit(h, x, y)
                commutative = False
                break
        if not commutative:
            break
    identity = None
    for u in elems:
        if all(h.mul(u, x) == x and h.mul(x, u) == x for x in elems):
            identity = u
            break
    has_one = identity is not None
    if not has_one:
        witnesses["has_one"] = ("no element acts as a two-sided identity",)
    nz = [x for x in elems if x != zero]
    best = None
    for i, x in enumerate(nz):
        for y in nz[i:]:
            if h.mul(x, y) == zero and h.mul(y, x) == zero:
                a, b = h.pair(x, y)
                k = (h.key(a), h.key(b))
                if best is None or k < best[0]:
                    best = (k, (a, b))
    zdfree = best is None
    if not zdfree:
        witnesses["zero_divisor_free"] = _wit(h, *best[1])
    semifield = strict and commutative and has_one and zdfree
    if not semifield:
        failed = [n for n, v in (("strict", strict), ("commutative", commutative),
                                 ("has_one", has_one),
                                 ("zero_divisor_free", zdfree)) if not v]
        witnesses["semifield"] = tuple(failed)
    return Classification(strict, commutative, has_one, zdfree, semifield,
                          witnesses, True)


def _classify_structural(h):
    if h.kind == "domain":
        return _classify_domain_structural(h)
    if h.kind == "formal-sum":
        return _classify_formal_sum_structural(h)
    return _classify_matrix_structural(h)


def _finish_classification(h, strict, commutative, has_one, zdfree, witnesses):
    semifield = strict and commutative and has_one and zdfree
    if not semifield:
        failed = [n for n, v in (("strict", strict), ("commutative", commutative),
                                 ("has_one", has_one),
                                 ("zero_divisor_free", zdfree)) if not v]
        witnesses["semifield"] = tuple(failed)
    return Classification(strict, commutative, has_one, zdfree, semifield,
                          witnesses, True)


def _classify_domain_structural(h):
    d = h.domain
    witnesses = {}
    # nat/rat (and neutrosophic over them): sums and products of nonnegative
    # values vanish only when the inputs do
    has_one = h.one is not None
    if not has_one:
        witnesses["has_one"] = ("no multiplicative identity in this domain",)
    return _finish_classification(h, True, True, has_one, True, witnesses)


def _classify_formal_sum_structural(h):
    spec = h.spec
    d = spec.coefficients
    witnesses = {}
    strict, sw = is_strict_domain(d)
    if not strict:
        a, b = sw
        x = fs_term(spec, _first_key(spec), a)
        y = fs_term(spec, _first_key(spec), b)
        witnesses["strict"] = _wit(h, x, y)
    commutative = True
    if isinstance(spec.basis, Magma):
        g = spec.basis
        w = None
        for i in range(g.order):
            for j in range(i + 1, g.order):
                if g.op(i, j) != g.op(j, i):
                    w = (i, j)
                    break
            if w:
                break
        if w is not None:
            c = _first_nonzero_scalar(d)
            if c is not None:
                x = fs_term(spec, w[0], c)
                y = fs_term(spec, w[1], c)
                if h.mul(x, y) != h.mul(y, x):
                    commutative = False
                    witnesses["commutative"] = _wit(h, x, y)
    has_one = h.one is not None
    if not has_one:
        witnesses["has_one"] = (
            "no identity: needs both a coefficient 1 and a basis identity",)
    zd = find_zero_divisors(h)
    if zd.findings:
        zdfree = False
        witnesses["zero_divisor_free"] = zd.findings[0].witness
    elif zd.exhaustive:
        zdfree = True
    else:
        raise SpecError("classification undecided for this handle")
    return _finish_classification(h, strict, commutative, has_one, zdfree,
                                  witnesses)


def _first_key(spec):
    keys = basis_keys(spec) if basis_is_finite(spec.basis) else None
    return keys[0] if keys else 0


def _classify_matrix_structural(h):
    d = h.domain
    mk, n = h.shape
    witnesses = {}
    strict, sw = is_strict_domain(d)
    if not strict:
        a, b = sw
        slots = h._slot_count()
        zero = domain_zero(d)
        ea = [zero] * slots
        eb = [zero] * slots
        ea[0] = a
        eb[0] = b
        witnesses["strict"] = _wit(h, IntervalMatrix(d, h.shape, tuple(ea)),
                                   IntervalMatrix(d, h.shape, tuple(eb)))
    commutative = True
    if mk == SQUARE and n >= 2:
        c = _first_nonzero_scalar(d)
        if c is not None:
            zero = domain_zero(d)
            ex = [zero] * (n * n)
            ey = [zero] * (n * n)
            ex[0] = c
            ey[1] = c
            x = IntervalMatrix(d, h.shape, tuple(ex))
            y = IntervalMatrix(d, h.shape, tuple(ey))
            if h.mul(x, y) != h.mul(y, x):
                commutative = False
                witnesses["commutative"] = _wit(h, x, y)
    has_one = h.one is not None
    if not has_one:
        witnesses["has_one"] = ("no multiplicative identity in this domain",)
    if n >= 2:
        zd = _matrix_zero_divisor_patterns(h, "")
        zdfree = not zd.findings
        if zd.findings:
            witnesses["zero_divisor_free"] = zd.findings[0].witness
    else:
        inner = classify_semiring(SemiringHandle.for_domain(d))
        zdfree = inner.zero_divisor_free
        if not zdfree:
            witnesses["zero_divisor_free"] = inner.witnesses["zero_divisor_free"]
    return _finish_classification(h, strict, commutative, has_one, zdfree,
                                  witnesses)


# ---------------------------------------------------------------------------
# Smarandache semiring search


def _closure_under_ops(h, seed, cap=_CLOSURE_CAP):
    """Closure of seed under + and * (None if it exceeds the cap)."""
    out = set(seed)
    frontier = list(seed)
    while frontier:
        nxt = []
        for x in frontier:
            for y in list(out):
                for z in (h.add(x, y), h.add(y, x), h.mul(x, y), h.mul(y, x)):
                    if z not in out:
                        out.add(z)
                        nxt.append(z)
                        if len(out) > cap:
                            return None
        frontier = nxt
    return frozenset(out)


def semifield_within(h, subset):
    """Check a subset is a semifield under the handle's operations.

    Returns (ok, reason).  Requires the handle zero inside, closure, strict
    addition, commutativity, an internal identity, and no zero divisors.
    """
    members = sorted(set(subset), key=h.key)
    mset = set(members)
    zero = h.zero
    if zero not in mset:
        return (False, ("missing-zero",))
    if len(members) < 2:
        return (False, ("trivial",))
    for x in members:
        for y in members:
            if h.add(x, y) not in mset:
                return (False, ("not-closed-under-addition", x, y))
            if h.mul(x, y) not in mset:
                return (False, ("not-closed-under-multiplication", x, y))
    for i, x in enumerate(members):
        for y in members[i:]:
            if h.add(x, y) == zero and not (x == zero and y == zero):
                return (False, ("not-strict", x, y))
    for i, x in enumerate(members):
        for y in members[i + 1:]:
            if h.mul(x, y) != h.mul(y, x):
                return (False, ("not-commutative", x, y))
    if not any(all(h.mul(u, x) == x and h.mul(x, u) == x for x in members)
               for u in members):
        return (False, ("no-internal-identity",))
    nzm = [x for x in members if x != zero]
    for i, x in enumerate(nzm):
        for y in nzm[i:]:
            if h.mul(x, y) == zero and h.mul(y, x) == zero:
                return (False, ("zero-divisor", x, y))
    return (True, None)


def _is_s_subsemiring(h, members, total_size):
    """P closed with zero, containing a proper semifield T; returns T or None."""
    mset = set(members)
    if h.zero not in mset:
        return None
    for x in members:
        for y in members:
            if h.add(x, y) not in mset or h.mul(x, y) not in mset:
                return None
    for t in _semifield_candidates_within(h, members):
        if len(t) < len(mset):
            return t
    return None


def _semifield_candidates_within(h, members):
    """Generated semifield subsets of the member set, smallest first."""
    mset = set(members)
    seen = set()
    out = []
    singles = [frozenset((h.zero, x)) for x in members]
    pairs = [frozenset((h.zero, x, y))
             for x, y in itertools.combinations(members, 2)]
    for seed in singles + pairs:
        c = _closure_under_ops(h, seed, cap=len(mset))
        if c is None or not c <= mset or c in seen:
            continue
        seen.add(c)
        ok, _ = semifield_within(h, c)
        if ok:
            out.append(c)
    out.sort(key=lambda c: (len(c), tuple(sorted(h.key(x) for x in c))))
    return out


def smarandache_search(h, mode="generated", *, seed_size=2, max_subset=None,
                       candidate=None, candidate_kind=None, budget=None):
    """Search for proper semifield subsets, or evaluate a candidate subset.

    Without a candidate the finding kind is "semifield-subset" and each
    witness lists the subset.  Generated mode closes singles and pairs (with
    zero adjoined) under both operations; exhaustive mode enumerates all
    subsets of handles with at most 20 elements.  With a candidate, the
    candidate_kind selects the certificate: semifield-subset, s-subsemiring,
    s-ideal, s-pseudo-subsemiring, or s-pseudo-ideal.
    """
    if candidate is not None:
        return _evaluate_candidate(h, list(candidate),
                                   candidate_kind or "semifield-subset")
    query = f"smarandache on {h.describe()}"
    if not h.is_finite() or h.size() > _GENERATED_GUARD:
        return _report(query, [], False, 0)
    if mode == "exhaustive":
        if h.size() > _EXHAUSTIVE_SUBSET_LIMIT:
            raise SpecError("exhaustive subset search is limited to handles "
                            f"with at most {_EXHAUSTIVE_SUBSET_LIMIT} elements")
        return _smarandache_exhaustive(h, query, max_subset)
    if mode != "generated":
        raise SpecError(f"unknown search mode {mode!r}")
    return _smarandache_generated(h, query, seed_size)


def _qualifies(h, c, total):
    if not 2 <= len(c) < total:
        return False
    ok, _ = semifield_within(h, c)
    return ok


def _subset_findings(h, subsets):
    out = []
    for c in sorted(subsets, key=lambda c: (len(c),
                                            tuple(sorted(h.key(x) for x in c)))):
        ordered = sorted(c, key=h.key)
        out.append(Finding("semifield-subset", _wit(h, *ordered),
                           tuple(ordered)))
    return out


def _smarandache_generated(h, query, seed_size):
    total = h.size()
    elems = _sorted_elements(h)
    zero = h.zero
    seen = set()
    hits = set()
    scanned = 0
    seeds = [frozenset((zero, x)) for x in elems]
    if seed_size >= 2:
        seeds += [frozenset((zero, x, y))
                  for x, y in itertools.combinations(elems, 2)]
    for seed in seeds:
        c = _closure_under_ops(h, seed, cap=total)
        scanned += 1
        if c is None or c in seen:
            continue
        seen.add(c)
        if _qualifies(h, c, total):
            hits.add(c)
    return _report(query, _subset_findings(h, hits), False, scanned)


def _smarandache_exhaustive(h, query, max_subset):
    elems = _sorted_elements(h)
    zero = h.zero
    rest = [x for x in elems if x != zero]
    total = len(elems)
    cap = max_subset if max_subset is not None else total - 1
    hits = []
    scanned = 0
    for r in range(1, min(cap, total - 1)):
        for combo in itertools.combinations(rest, r):
            s = frozenset((zero,) + combo)
            scanned += 1
            if _qualifies(h, s, total):
                hits.append(s)
    return _report(query, _subset_findings(h, hits), True, scanned)


def _evaluate_candidate(h, members, kind):
    query = f"{kind} candidate on {h.describe()}"
    mset = set(members)
    ordered = sorted(mset, key=h.key)
    if kind == "semifield-subset":
        ok, reason = semifield_within(h, ordered)
        proper = (not h.is_finite()) or len(mset) < h.size()
        if ok and proper:
            return _report(query, [Finding("semifield-subset",
                                           _wit(h, *ordered),
                                           tuple(ordered))], True, 0)
        return _report(query, [], True, 0)
    if kind == "s-subsemiring":
        t = _is_s_subsemiring(h, ordered, len(mset))
        if t is not None:
            ts = sorted(t, key=h.key)
            return _report(query, [Finding("s-subsemiring", _wit(h, *ts),
                                           tuple(ts))], True, 0)
        return _report(query, [], True, 0)
    if kind == "s-ideal":
        t = _is_s_subsemiring(h, ordered, len(mset))
        if t is None:
            return _report(query, [], True, 0)
        for a_set in _semifield_candidates_within(h, ordered):
            if all(h.mul(p, a) in a_set and h.mul(a, p) in a_set
                   for p in ordered for a in a_set):
                aord = sorted(a_set, key=h.key)
                return _report(query, [Finding("s-ideal", _wit(h, *aord),
                                               tuple(aord))], True, 0)
        return _report(query, [], True, 0)
    if kind == "s-pseudo-subsemiring":
        p = _pseudo_superset(h, mset)
        if p is not None:
            pord = sorted(p, key=h.key)
            return _report(query, [Finding("s-pseudo-subsemiring",
                                           _wit(h, *pord), tuple(pord))],
                           True, 0)
        return _report(query, [], True, 0)
    if kind == "s-pseudo-ideal":
        if _pseudo_superset(h, mset) is None:
            return _report(query, [], True, 0)
        for a_set in _semifield_candidates_within(h, ordered):
            if all(h.mul(p, a) in mset and h.mul(a, p) in mset
                   for p in ordered for a in a_set):
                aord = sorted(a_set, key=h.key)
                return _report(query, [Finding("s-pseudo-ideal",
                                               _wit(h, *aord), tuple(aord))],
                               True, 0)
        return _report(query, [], True, 0)
    raise SpecError(f"unknown candidate kind {kind!r}")


def _pseudo_superset(h, mset):
    """A closed superset of mset that is a semifield or an S-subsemiring."""
    seed = frozenset(mset | {h.zero})
    c = _closure_under_ops(h, seed)
    if c is None:
        return None
    total = h.size() if h.is_finite() else None
    ok, _ = semifield_within(h, c)
    if ok and (total is None or len(c) < total):
        return c
    ordered = sorted(c, key=h.key)
    if _is_s_subsemiring(h, ordered, len(c)) is not None:
        if total is None or len(c) < total:
            return c
    return None


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True)
class HomReport:
    ok: bool
    witness: tuple
    kernel: tuple
    exhaustive: bool


def _default_sample(h):
    d = h.domain if h.kind == "domain" else None
    if d is not None and d.kind == NAT:
        return [element(d, i * d.multiple) for i in range(8)]
    if d is not None and d.kind == RAT:
        vals = [Fraction(0), Fraction(1), Fraction(1, 2), Fraction(2),
                Fraction(1, 3), Fraction(3), Fraction(2, 3), Fraction(3, 2)]
        return [element(d, v) for v in vals]
    raise SpecError("a sample is required for this infinite source")


def check_homomorphism(f, src, dst, sample=None):
    """Verify f preserves +, *, and 0 on the source (or a sample of it).

    f is a dict keyed by source elements or a callable.  Finite sources are
    checked on every pair (exhaustive); infinite sources on the sample.
    The kernel lists checked elements mapping to zero.
    """
    if src.is_enumerable():
        elems = _sorted_elements(src)
        exhaustive = True
    else:
        elems = list(sample) if sample is not None else _default_sample(src)
        exhaustive = False
    if callable(f):
        fmap = f
    else:
        table = dict(f)

        def fmap(x):
            if x not in table:
                raise SpecError("map is not total on the checked elements")
            return table[x]

    if fmap(src.zero) != dst.zero:
        return HomReport(False, ("zero", src.zero), (), exhaustive)
    witness = None
    for x in elems:
        for y in elems:
            if fmap(src.add(x, y)) != dst.add(fmap(x), fmap(y)):
                witness = ("add", x, y)
                break
            if fmap(src.mul(x, y)) != dst.mul(fmap(x), fmap(y)):
                witness = ("mul", x, y)
                break
        if witness:
            break
    if witness is not None:
        return HomReport(False, witness, (), exhaustive)
    kernel = tuple(x for x in elems if fmap(x) == dst.zero)
    return HomReport(True, None, kernel, exhaustive)


# ---------------------------------------------------------------------------
# axiom verification (vectorized over index tables)


def verify_axioms(h):
    """Exhaustively check additive commutativity/associativity, the zero
    identity, and both distributive laws on a finite handle.

    Returns (ok, witness); the witness names the law and the elements.
    """
    elems = h.elements()
    k = len(elems)
    idx = {x: i for i, x in enumerate(elems)}
    add = np.empty((k, k), dtype=np.int32)
    mul = np.empty((k, k), dtype=np.int32)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            add[i, j] = idx[h.add(x, y)]
            mul[i, j] = idx[h.mul(x, y)]
    z = idx[h.zero]
    rng = np.arange(k)
    if not np.array_equal(add[z], rng) or not np.array_equal(add[:, z], rng):
        bad = int(np.argmax(add[z] != rng)) if not np.array_equal(add[z], rng) \
            else int(np.argmax(add[:, z] != rng))
        return (False, ("zero-identity", elems[bad]))
    if not np.array_equal(add, add.T):
        i, j = map(int, np.argwhere(add != add.T)[0])
        return (False, ("addition-not-commutative", elems[i], elems[j]))
    # associativity: (x+y)+z vs x+(y+z)
    lhs = add[add]                    # lhs[i,j,k] = add[add[i,j], k]
    rhs = add[:, add]                 # rhs[i,j,k] = add[i, add[j,k]]
    if not np.array_equal(lhs, rhs):
        i, j, kk = map(int, np.argwhere(lhs != rhs)[0])
        return (False, ("addition-not-associative",
                        elems[i], elems[j], elems[kk]))
    # left distributivity: x*(y+z) vs x*y + x*z
    lhs = mul[:, add]                 # lhs[i,j,k] = mul[i, add[j,k]]
    rhs = add[mul[:, :, None], mul[:, None, :]]
    if not np.array_equal(lhs, rhs):
        i, j, kk = map(int, np.argwhere(lhs != rhs)[0])
        return (False, ("not-left-distributive",
                        elems[i], elems[j], elems[kk]))
    # right distributivity: (y+z)*x vs y*x + z*x, indexed (y, z, x)
    lhs = mul[add]                    # lhs[j,k,i] = mul[add[j,k], i]
    rhs = add[mul[:, None, :], mul[None, :, :]]
    # rhs[j,k,i] = add[mul[j,i], mul[k,i]]
    if not np.array_equal(lhs, rhs):
        j, kk, i = map(int, np.argwhere(lhs != rhs)[0])
        return (False, ("not-right-distributive",
                        elems[i], elems[j], elems[kk]))
    return (True, None)


# ---------------------------------------------------------------------------
# theorem sweeps


def _primes_upto(n):
    sieve = [True] * (n + 1)
    out = []
    for p in range(2, n + 1):
        if sieve[p]:
            out.append(p)
            for q in range(p * p, n + 1, p):
                sieve[q] = False
    return out


def _sweep_zn_prime_clean(pmax=97):
    findings = []
    scanned = 0
    for p in _primes_upto(pmax):
        h = SemiringHandle.for_domain(zn_interval(p))
        zd = find_zero_divisors(h)
        scanned += zd.budget_spent["pairs_scanned"]
        if zd.findings or not zd.exhaustive:
            w = zd.findings[0].witness if zd.findings else ()
            return ([Finding("counterexample",
                             (f"p={p}", "zero divisor found") + w)],
                    scanned, False)
        idem = find_idempotents(h)
        scanned += idem.budget_spent["pairs_scanned"]
        idset = {f.witness[0] for f in idem.findings}
        if idset != {"[0,0]", "[0,1]"}:
            return ([Finding("counterexample",
                             (f"p={p}", "unexpected idempotents")
                             + tuple(sorted(idset)))], scanned, False)
        units = find_units(h)
        scanned += units.budget_spent["pairs_scanned"]
        if len(units.findings) != p - 1:
            return ([Finding("counterexample",
                             (f"p={p}",
                              f"unit count {len(units.findings)} != {p - 1}"))],
                    scanned, False)
        findings.append(Finding("instance", (f"p={p}", "pass")))
    return findings, scanned, True


def _sweep_loop_laws(nmin=5, nmax=25):
    findings = []
    scanned = 0
    for n in range(nmin, nmax + 1, 2):
        for m in loop_parameters(n):
            g = build_loop(n, m)
            s = loop_law_summary(g)
            scanned += 1
            checks = [
                ("order", g.order == n + 1),
                ("latin-square", s["latin_square"]),
                ("identity", s["has_identity"]),
                ("commutative", s["commutative"] == (m == (n + 1) // 2)),
                ("left-alternative", s["left_alternative"] == (m == 2)),
                ("right-alternative", s["right_alternative"] == (m == n - 1)),
                ("wip", s["wip"] == ((m * m - m + 1) % n == 0)),
                ("not-both-alternatives",
                 not (s["left_alternative"] and s["right_alternative"])),
            ]
            bad = [name for name, ok in checks if not ok]
            if bad:
                return ([Finding("counterexample",
                                 (f"n={n}", f"m={m}") + tuple(bad))],
                        scanned, False)
            findings.append(Finding("instance", (f"n={n}", f"m={m}", "pass")))
    return findings, scanned, True


def _sweep_zn_composite_zd(nmax=100):
    findings = []
    scanned = 0
    primes = set(_primes_upto(nmax))
    for n in range(4, nmax + 1):
        if n in primes:
            continue
        d = zn_interval(n)
        p = next(q for q in _primes_upto(n) if n % q == 0)
        x = element(d, p)
        y = element(d, n // p)
        scanned += 1
        zero = domain_zero(d)
        if x == zero or y == zero or x * y != zero:
            return ([Finding("counterexample",
                             (f"n={n}", format_element(x),
                              format_element(y)))], scanned, False)
        findings.append(Finding("instance",
                                (f"n={n}", format_element(x),
                                 format_element(y), "pass"),
                                (x, y)))
    return findings, scanned, True


def _sweep_neutro_prime(primes=(3, 5, 7, 11, 13)):
    findings = []
    scanned = 0
    for p in primes:
        d = neutro_pure(zn_interval(p))
        elems = domain_elements(d)
        zero = domain_zero(d)
        rest = [x for x in elems if x != zero]
        closed_subset = None
        for r in range(1, len(rest)):
            for combo in itertools.combinations(rest, r):
                s = set(combo)
                s.add(zero)
                scanned += 1
                ok = True
                for x in combo:
                    for y in combo:
                        if x + y not in s or x * y not in s:
                            ok = False
                            break
                    if not ok:
                        break
                if ok:
                    closed_subset = s
                    break
            if closed_subset:
                break
        if closed_subset:
            w = tuple(format_element(x)
                      for x in sorted(closed_subset,
                                      key=element_key))
            return ([Finding("counterexample", (f"p={p}",) + w)],
                    scanned, False)
        findings.append(Finding("instance", (f"p={p}", "pass")))
    return findings, scanned, True


_SWEEPS = {
    "zn-prime-clean": _sweep_zn_prime_clean,
    "loop-laws": _sweep_loop_laws,
    "zn-composite-zd": _sweep_zn_composite_zd,
    "neutro-prime-no-subsemiring": _sweep_neutro_prime,
}


def theorem_sweep(name, **params):
    """Run a named instance sweep; a counterexample halts it immediately.

    Reports one "instance" finding per verified case; a failure produces a
    single "counterexample" finding with the certificate and marks the
    report non-exhaustive.
    """
    if name not in _SWEEPS:
        raise SpecError(f"unknown sweep {name!r} "
                        f"(available: {', '.join(sorted(_SWEEPS))})")
    findings, scanned, complete = _SWEEPS[name](**params)
    return _report(f"sweep {name}", findings, complete, scanned)


def sweep_passed(report):
    return report.exhaustive and all(f.kind != "counterexample"
                                     for f in report.findings)


# ---------------------------------------------------------------------------
# matrix zero divisors vs S-zero divisors


def matrix_zd_comparison(h, budget=None):
    """Report plain and S- zero-divisor anchors side by side.

    Findings: every "zero-divisor" pair, every "s-zero-divisor" certificate,
    and one "zd-not-s" entry per plain pair whose anchors admit no
    certificate.  No containment in either direction is asserted.
    """
    if h.kind != "matrix":
        raise SpecError("comparison applies to matrix handles")
    plain = find_zero_divisors(h, budget=budget)
    special = find_s_special(h, "s-zero-divisor", budget=budget)
    findings = list(plain.findings) + list(special.findings)
    anchored = {frozenset((f.elements[0], f.elements[1]))
                for f in special.findings}
    for f in plain.findings:
        if f.kind != "zero-divisor":
            continue
        if frozenset((f.elements[0], f.elements[1])) not in anchored:
            findings.append(Finding("zd-not-s", f.witness, f.elements))
    scanned = (plain.budget_spent["pairs_scanned"]
               + special.budget_spent["pairs_scanned"])
    return _report(f"zero-divisor comparison on {h.describe()}", findings,
                   plain.exhaustive and special.exhaustive, scanned)
