"""Fock-space vectors and the divided-power operators E_i^(k), F_i^(k)."""

from __future__ import annotations

from bisect import bisect_left
from functools import lru_cache
from itertools import combinations

from .abacus import Abacus, abacus_of, partition_of
from .laurent import LaurentPoly
from .partitions import Partition


class FockVector:
    """Finite formal sum of partitions with Laurent-polynomial coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        d = {}
        if terms:
            for lam, c in (terms.items() if isinstance(terms, dict) else terms):
                c = LaurentPoly.of(c)
                if c:
                    d[lam] = d.get(lam, LaurentPoly.zero()) + c
                    if not d[lam]:
                        del d[lam]
        object.__setattr__(self, "terms", d)

    def __setattr__(self, name, value):
        raise AttributeError("FockVector is immutable")

    @staticmethod
    def basis(lam):
        return FockVector({lam: LaurentPoly.one()})

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        return isinstance(other, FockVector) and self.terms == other.terms

    def __add__(self, other):
        d = dict(self.terms)
        for lam, c in other.terms.items():
            s = d.get(lam, LaurentPoly.zero()) + c
            if s:
                d[lam] = s
            elif lam in d:
                del d[lam]
        return FockVector(d)

    def __sub__(self, other):
        return self + other.scale(LaurentPoly.of(-1))

    def scale(self, c):
        c = LaurentPoly.of(c)
        if not c:
            return FockVector()
        return FockVector({lam: coef * c for lam, coef in self.terms.items()})

    def coeff(self, lam):
        return self.terms.get(lam, LaurentPoly.zero())

    def bar(self):
        return FockVector({lam: c.bar() for lam, c in self.terms.items()})

    def support(self):
        return sorted(self.terms, key=lambda p: p.parts, reverse=True)

    def map_terms(self, f):
        """Linear extension of a partition-level map f(lam) -> FockVector."""
        out = FockVector()
        for lam, c in self.terms.items():
            out = out + f(lam).scale(c)
        return out

    def to_json(self):
        return [
            {"partition": list(lam.parts), "coeff": c.to_pairs()}
            for lam, c in sorted(self.terms.items(), key=lambda kv: kv[0].parts, reverse=True)
        ]

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for lam in self.support():
            bits.append("(%s)*%s" % (self.terms[lam], lam))
        return " + ".join(bits)


def pairing(v, lam):
    """Coefficient extraction <v, lam> for the orthonormal partition basis."""
    return v.coeff(lam)


@lru_cache(maxsize=None)
def _beads_data(parts, e):
    """(addable positions per runner, removable positions per runner)."""
    a = abacus_of(Partition(parts), e)
    add = [[] for _ in range(e)]
    rem = [[] for _ in range(e)]
    lo = a.base - 1
    hi = a.max_occupied() + 1
    for x in range(lo, hi + 1):
        occ = a.occupied(x)
        if occ and not a.occupied(x + 1):
            add[x % e].append(x)
        if occ and not a.occupied(x - 1):
            rem[x % e].append(x)
    return tuple(tuple(v) for v in add), tuple(tuple(v) for v in rem)


def addable_beads(lam, r, e):
    """Beads x in beta(lam) on runner r with x+1 unoccupied, ascending."""
    return _beads_data(lam.parts, e)[0][r % e]


def removable_beads(lam, r, e):
    """Beads x in beta(lam) on runner r with x-1 unoccupied, ascending."""
    return _beads_data(lam.parts, e)[1][r % e]


def _count_less(sorted_list, x):
    return bisect_left(sorted_list, x)


def _apply_F_term(lam, i, k, e):
    """F_i^(k) on a single basis partition."""
    r_add = (i - 1) % e
    cand = addable_beads(lam, r_add, e)
    if len(cand) < k:
        return FockVector()
    a = abacus_of(lam, e)
    rem_i = removable_beads(lam, i % e, e)
    low = a.base - 2
    base_occ = set(a.window) | {a.base - 1, low}
    out = {}
    for C in combinations(cand, k):
        Cp = tuple(c + 1 for c in C)
        occ = (base_occ - set(C)) | set(Cp)
        mu = partition_of(Abacus.from_occupied(e, occ, low))
        add_mu = addable_beads(mu, r_add, e)
        n = 0
        for x in add_mu:
            n += _count_less(C, x)
        for y in rem_i:
            n -= _count_less(Cp, y)
        out[mu] = out.get(mu, LaurentPoly.zero()) + LaurentPoly.monomial(n)
    return FockVector(out)


def _apply_E_term(mu, i, k, e):
    """E_i^(k) on a single basis partition."""
    r_add = (i - 1) % e
    cand = removable_beads(mu, i % e, e)
    if len(cand) < k:
        return FockVector()
    a = abacus_of(mu, e)
    add_mu = addable_beads(mu, r_add, e)
    low = a.base - 2
    base_occ = set(a.window) | {a.base - 1, low}
    out = {}
    for Cp in combinations(cand, k):
        C = tuple(c - 1 for c in Cp)
        lam = partition_of(Abacus.from_occupied(e, (base_occ - set(Cp)) | set(C), low))
        rem_lam = removable_beads(lam, i % e, e)
        n = 0
        for y in rem_lam:
            n += len(Cp) - bisect_left(Cp, y + 1)
        for x in add_mu:
            n -= len(C) - bisect_left(C, x + 1)
        out[lam] = out.get(lam, LaurentPoly.zero()) + LaurentPoly.monomial(n)
    return FockVector(out)


def apply_F(v, i, k, e):
    """Divided power F_i^(k) applied to a Fock vector (k >= 1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if isinstance(v, Partition):
        v = FockVector.basis(v)
    return v.map_terms(lambda lam: _apply_F_term(lam, i, k, e))


def apply_E(v, i, k, e):
    """Divided power E_i^(k) applied to a Fock vector (k >= 1)."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if isinstance(v, Partition):
        v = FockVector.basis(v)
    return v.map_terms(lambda mu: _apply_E_term(mu, i, k, e))
