"""Bead movements, armlength labels z and zhat, modified basis vectors."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .abacus import abacus_of, enumerate_block, quotient_of
from .partitions import Partition


@dataclass(frozen=True)
class BeadMovement:
    """One e-step slide of the bead originally at b, starting at q."""

    b: int
    q: int
    index: int  # 1-based rank in the total order (q first, then b)


@lru_cache(maxsize=None)
def _movements_cached(parts, e):
    a = abacus_of(Partition(parts), e)
    raw = []
    for x in a.window:
        for i in range(a.weight_of(x)):
            raw.append((x - i * e, x))
    raw.sort()
    return tuple(BeadMovement(b=b, q=q, index=r + 1) for r, (q, b) in enumerate(raw))


def movements(lam, e):
    """The bead movements of lam, in the total order (by q, then b)."""
    return _movements_cached(lam.parts, e)


def z_of(a, x):
    """Armlength of a movement starting at x: unoccupied count in (x-e, x]."""
    return sum(1 for t in range(x - a.e + 1, x + 1) if not a.occupied(t))


@lru_cache(maxsize=None)
def _z_cached(parts, e):
    a = abacus_of(Partition(parts), e)
    return tuple(z_of(a, mv.q) for mv in _movements_cached(parts, e))


def z_label(lam, e):
    """z(lam): armlengths of all bead movements, in movement order."""
    return _z_cached(lam.parts, e)


def is_m_increasing(z, m):
    """Gap test: consecutive entries differ by at least m."""
    return all(z[i + 1] - z[i] >= m for i in range(len(z) - 1))


def is_hook_quotient(lam, e):
    """True iff every e-quotient component is a hook (x, 1^y)."""
    return all(q.part(2) <= 1 for q in quotient_of(lam, e))


def z_inverse(b, target, ctx=None):
    """The unique 0-increasing partition in block b with the given z-label."""
    target = tuple(target)
    if len(target) != b.weight:
        raise ValueError("label length must equal the block weight")
    if not is_m_increasing(target, 0) or any(t < 0 or t > b.e - 1 for t in target):
        raise ValueError("label must be 0-increasing with entries in [0, e-1]")
    ctx = ctx or BlockContext(b)
    lam = ctx.z_inv().get(target)
    if lam is None:
        raise AssertionError("no partition with label %r in %r" % (target, b))
    return lam


# -- modified basis vectors -------------------------------------------------


def _unit(w, i):
    return tuple(1 if k == i - 1 else 0 for k in range(w))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


@dataclass(frozen=True)
class HatVec:
    """Element of the rank w(w+1)/2 lattice spanned by e_i and e_ij (i<j)."""

    diag: tuple
    upper: tuple = ()  # sorted tuple of ((i, j), coeff) with i < j, coeff != 0

    @staticmethod
    def make(diag, upper_map=None):
        upper = tuple(sorted((k, v) for k, v in (upper_map or {}).items() if v))
        return HatVec(tuple(diag), upper)

    def upper_map(self):
        return dict(self.upper)

    def __add__(self, other):
        um = self.upper_map()
        for k, v in other.upper:
            um[k] = um.get(k, 0) + v
        return HatVec.make(vec_add(self.diag, other.diag), um)

    def __sub__(self, other):
        um = self.upper_map()
        for k, v in other.upper:
            um[k] = um.get(k, 0) - v
        return HatVec.make(vec_sub(self.diag, other.diag), um)

    def __neg__(self):
        return HatVec.make(tuple(-x for x in self.diag), {k: -v for k, v in self.upper})

    def norm(self):
        """Box norm: sum of absolute coordinates."""
        return sum(abs(x) for x in self.diag) + sum(abs(v) for _, v in self.upper)

    def project(self):
        """p: e_i -> e_i, e_ij -> e_i - e_j."""
        out = list(self.diag)
        for (i, j), v in self.upper:
            out[i - 1] += v
            out[j - 1] -= v
        return tuple(out)

    def to_json(self):
        return {"diag": list(self.diag), "upper": [[i, j, v] for (i, j), v in self.upper]}

    @staticmethod
    def from_json(obj):
        return HatVec.make(tuple(obj["diag"]), {(i, j): v for i, j, v in obj["upper"]})


def lift_unit(w, i, j=None):
    """ehat for e_i (j None) or for e_i - e_j."""
    if j is None:
        return HatVec.make(_unit(w, i))
    if i < j:
        return HatVec.make((0,) * w, {(i, j): 1})
    return HatVec.make((0,) * w, {(j, i): -1})


@dataclass(frozen=True)
class ModifiedBasis:
    """Per-movement basis vectors eps_i and their lifts."""

    plain: tuple  # w vectors in Z^w
    lifted: tuple  # w HatVec


@lru_cache(maxsize=None)
def _modified_cached(parts, e):
    lam = Partition(parts)
    if not is_hook_quotient(lam, e):
        raise ValueError("modified basis needs a hook-quotient partition")
    mvs = _movements_cached(parts, e)
    w = len(mvs)
    plain = [None] * w
    lifted = [None] * w
    for runner in range(e):
        idx = [mv.index for mv in mvs if mv.q % e == runner]
        if not idx:
            continue
        bottom = mvs[idx[-1] - 1].b
        l = min(s for s in range(len(idx)) if mvs[idx[s] - 1].b == bottom)
        for g, i in enumerate(idx):
            if g < l:
                j = idx[g + 1]
                plain[i - 1] = vec_sub(_unit(w, i), _unit(w, j))
                lifted[i - 1] = lift_unit(w, i, j)
            elif g == l:
                plain[i - 1] = _unit(w, i)
                lifted[i - 1] = lift_unit(w, i)
            else:
                j = idx[g - 1]
                plain[i - 1] = vec_sub(_unit(w, i), _unit(w, j))
                lifted[i - 1] = lift_unit(w, i, j)
    return ModifiedBasis(plain=tuple(plain), lifted=tuple(lifted))


def modified_basis(lam, e):
    return _modified_cached(lam.parts, e)


def succ_geq(lam, e, i, j):
    """The partial order on movement indices: i >= j along a runner chain."""
    mvs = movements(lam, e)
    w = len(mvs)
    if not (1 <= i <= w and 1 <= j <= w):
        raise IndexError("movement index out of range")
    if not is_hook_quotient(lam, e):
        raise ValueError("the order is defined for hook-quotient partitions")
    if mvs[i - 1].b % e != mvs[j - 1].b % e:
        return False
    runner = mvs[i - 1].q % e
    idx = [mv.index for mv in mvs if mv.q % e == runner]
    bottom = mvs[idx[-1] - 1].b
    m = idx[min(s for s in range(len(idx)) if mvs[idx[s] - 1].b == bottom)]
    return (i >= j >= m) or (i <= j <= m)


def succ_maximal(lam, e, subset):
    """Elements of subset maximal with respect to the partial order."""
    out = []
    for i in subset:
        if not any(j != i and succ_geq(lam, e, j, i) for j in subset):
            out.append(i)
    return out


# -- lifted labels ----------------------------------------------------------


@lru_cache(maxsize=None)
def _hat_z_cached(parts, e):
    lam = Partition(parts)
    mvs = _movements_cached(parts, e)
    w = len(mvs)
    diag = list(_z_cached(parts, e))
    upper = {}
    for i in range(1, w + 1):
        for j in range(i + 1, w + 1):
            qi, qj = mvs[i - 1].q, mvs[j - 1].q
            bi, bj = mvs[i - 1].b, mvs[j - 1].b
            if qi > qj - e or (qi == qj - e and bi == bj):
                diag[i - 1] -= 1
                diag[j - 1] += 1
                upper[(i, j)] = upper.get((i, j), 0) + 1
    return HatVec.make(tuple(diag), upper)


def hat_z(lam, e):
    """The lifted label zhat(lam); p(zhat) = z."""
    return _hat_z_cached(lam.parts, e)


# -- per-block context ------------------------------------------------------


class BlockContext:
    """Memo tables for one block: members, labels, canonical-basis columns.

    All caches are confined to the context object; nothing global mutates.
    """

    def __init__(self, block):
        self.block = block
        self._members = None
        self._zmap = None
        self._zinv = None
        self.caches = {}

    def members(self):
        if self._members is None:
            self._members = enumerate_block(self.block)
        return self._members

    def z_map(self):
        if self._zmap is None:
            self._zmap = {lam: z_label(lam, self.block.e) for lam in self.members()}
        return self._zmap

    def z_inv(self):
        if self._zinv is None:
            inv = {}
            for lam, z in self.z_map().items():
                if is_m_increasing(z, 0):
                    if z in inv:
                        raise AssertionError("z not injective on 0-increasing set")
                    inv[z] = lam
            self._zinv = inv
        return self._zinv

    def cache(self, name):
        return self.caches.setdefault(name, {})
