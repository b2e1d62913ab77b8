"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence

# Each primal variable is listed with its dual partner.  Canonical term order
# puts primal-heavy monomials first, so dual polynomials print as mirror images.
DUAL_PAIRS = {"X": "Y", "A": "B", "A+": "B+", "A-": "B-"}
_WEIGHT = {**{k: 1 for k in DUAL_PAIRS}, **{v: -1 for v in DUAL_PAIRS.values()}}


class MultiPoly:
    """Polynomial over a fixed variable tuple: ``{exponent tuple: int}``."""

    __slots__ = ("vars", "terms")

    def __init__(self, vars: Sequence[str], terms: Mapping | Iterable = ()):
        self.vars = tuple(vars)
        store: dict = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        nv = len(self.vars)
        for exp, c in items:
            exp = tuple(int(e) for e in exp)
            if len(exp) != nv or any(e < 0 for e in exp):
                raise ValueError(f"bad exponent {exp} for variables {self.vars}")
            c = int(c)
            if c:
                store[exp] = store.get(exp, 0) + c
                if not store[exp]:
                    del store[exp]
        self.terms = store

    @classmethod
    def from_counts(cls, vars: Sequence[str], counts: Mapping) -> "MultiPoly":
        return cls(vars, counts)

    @classmethod
    def constant(cls, vars: Sequence[str], c: int) -> "MultiPoly":
        return cls(vars, {(0,) * len(vars): c})

    @classmethod
    def variable(cls, vars: Sequence[str], name: str) -> "MultiPoly":
        exp = [0] * len(vars)
        exp[list(vars).index(name)] = 1
        return cls(vars, {tuple(exp): 1})

    def _check(self, other: "MultiPoly"):
        if other.vars != self.vars:
            raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            return MultiPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def permute(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Rename variables by ``mapping`` (a permutation of ``vars``); e.g. swap X and Y."""
        full = {v: mapping.get(v, v) for v in self.vars}
        if sorted(full.values()) != sorted(self.vars):
            raise ValueError("mapping must permute the variable tuple")
        pos = [self.vars.index(full[v]) for v in self.vars]
        out = {}
        for e, c in self.terms.items():
            ne = [0] * len(e)
            for i, p in enumerate(pos):
                ne[p] = e[i]
            out[tuple(ne)] = c
        return MultiPoly(self.vars, out)

    def substitute(self, new_vars: Sequence[str], images: Mapping[str, "MultiPoly"]) -> "MultiPoly":
        """Replace each variable by a polynomial in ``new_vars``."""
        out = MultiPoly(new_vars)
        powers: dict = {}
        for e, c in self.terms.items():
            term = MultiPoly.constant(new_vars, c)
            for v, k in zip(self.vars, e):
                if k:
                    key = (v, k)
                    if key not in powers:
                        p = MultiPoly.constant(new_vars, 1)
                        for _ in range(k):
                            p = p * images[v]
                        powers[key] = p
                    term = term * powers[key]
            out = out + term
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self.vars}, {canonical_string(self)!r})"

    def __str__(self) -> str:
        return canonical_string(self)


def evaluate(p: MultiPoly, point: Sequence) -> Fraction:
    """Exact value at ``point``; a zero exponent contributes 1 even at argument 0."""
    if len(point) != len(p.vars):
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {len(p.vars)} variables")
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for e, c in p.terms.items():
        t = Fraction(c)
        for x, k in zip(pt, e):
            if k:
                t *= x ** k
        total += t
    return total


def _order_key(vars, exp):
    weight = sum(_WEIGHT.get(v, 0) * k for v, k in zip(vars, exp))
    return (-weight, -sum(exp), tuple(-k for k in exp))


def sorted_terms(p: MultiPoly) -> list:
    return sorted(p.terms.items(), key=lambda t: _order_key(p.vars, t[0]))


def _monomial(vars, exp) -> str:
    parts = []
    for v, k in zip(vars, exp):
        if k == 1:
            parts.append(v)
        elif k:
            parts.append(f"{v}^{k}")
    return "".join(parts)


def canonical_string(p: MultiPoly) -> str:
    """Deterministic rendering, e.g. ``"X^2 + 3X + 3 + Y"`` or ``"A^2 + 2 + B^2"``.

    Terms are ordered by decreasing duality weight (primal variables X, A, A+,
    A- count +1, their partners Y, B, B+, B- count -1), then decreasing total
    degree, then decreasing exponents.
    """
    if not p.terms:
        return "0"
    out = []
    for i, (e, c) in enumerate(sorted_terms(p)):
        mono = _monomial(p.vars, e)
        mag = abs(c)
        body = mono if (mono and mag == 1) else f"{mag}{mono}"
        if i == 0:
            out.append(body if c > 0 else f"-{body}")
        else:
            out.append(("+ " if c > 0 else "- ") + body)
    return " ".join(out)


def poly_to_json(p: MultiPoly) -> dict:
    return {"vars": list(p.vars),
            "terms": [{"exp": list(e), "coef": str(c)} for e, c in sorted_terms(p)],
            "string": canonical_string(p)}


def poly_from_json(obj) -> MultiPoly:
    return MultiPoly(obj["vars"], {tuple(t["exp"]): int(t["coef"]) for t in obj["terms"]})
