"""Three canonical-basis engines: LLT, Rouquier closed formula, induction.

Every engine produces columns of the q-decomposition matrix d_{lambda,mu}(q)
= <G(mu), lambda>; they are independent of each other and of the closed
parallelotope formula, which is what makes the cross-checks meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .abacus import (
    BlockId,
    abacus_of,
    block_of,
    core_levels,
    core_quotient_weight,
    enumerate_block,
    is_rouquier,
    partition_of,
    rouquier_charge,
    scopes_chain_blocks,
    weyl_s,
)
from .fock import FockVector, addable_beads, apply_E, apply_F, removable_beads
from .labels import (
    BlockContext,
    HatVec,
    is_m_increasing,
    lift_unit,
    modified_basis,
    movements,
    vec_sub,
    z_label,
)
from .laurent import LaurentPoly, bar_symmetric_split, quantum_int
from .partitions import EMPTY, Partition, all_partitions, conjugate, dominance_leq, is_e_regular


# -- LLT algorithm ----------------------------------------------------------


def ladder_sequence(mu, e):
    """Residue and multiplicity of each nonempty ladder of [mu], bottom first.

    The ladder with index k holds the nodes (i, j) with i + (e-1)(j-1) = k;
    all its nodes share the residue (1 - k) mod e.
    """
    if not is_e_regular(mu, e):
        raise ValueError("ladder sequence requires an e-regular partition")
    counts = {}
    for i, j in mu.cells():
        k = i + (e - 1) * (j - 1)
        counts[k] = counts.get(k, 0) + 1
    return [((1 - k) % e, counts[k]) for k in sorted(counts)]


def _fits_profile(lam, profile):
    parts = lam.parts
    if len(parts) > len(profile):
        return False
    return all(p <= profile[i] for i, p in enumerate(parts))


def ladder_monomial(mu, e, profile=None):
    """A(mu): the ordered product of divided powers F^(m) applied to empty.

    An optional row profile (componentwise maximum over the partitions that
    can still absorb the remaining cells) prunes intermediate terms exactly:
    F only ever adds cells, so a term outside the profile can never reach a
    partition inside it.
    """
    v = FockVector.basis(EMPTY)
    for res, mult in ladder_sequence(mu, e):
        v = apply_F(v, res, mult, e)
        if profile is not None:
            v = FockVector(
                {lam: c for lam, c in v.terms.items() if _fits_profile(lam, profile)}
            )
    return v


def _dominance_max(cands):
    """A dominance-maximal element, ties broken by descending part tuples."""
    best = None
    for x in sorted(cands, key=lambda p: p.parts, reverse=True):
        if all(y == x or not dominance_leq(x, y) for y in cands):
            best = x
            break
    if best is None:
        raise AssertionError("no dominance-maximal candidate")
    return best


def llt_G(mu, e, ctx=None):
    """Canonical basis vector G(mu) for e-regular mu via the LLT algorithm."""
    if not is_e_regular(mu, e):
        raise ValueError("llt_G requires an e-regular partition")
    ctx = ctx or BlockContext(block_of(mu, e))
    return _llt_column(mu, e, ctx)


def _block_profile(ctx):
    prof = ctx.caches.get("profile")
    if prof is None:
        rows = max(len(lam.parts) for lam in ctx.members())
        prof = tuple(
            max(lam.part(i + 1) for lam in ctx.members()) for i in range(rows)
        )
        ctx.caches["profile"] = prof
    return prof


def _monomial(mu, e, ctx):
    """A(mu), via the shared bitmask engine on blocks with large cores."""
    mono = ctx.cache("monomial")
    if mu in mono:
        return mono[mu]
    if ctx.block.core.size > 40:
        from ._ladders import block_ladder_monomials

        regs = [m for m in ctx.members() if is_e_regular(m, e)]
        seqs = {m: tuple(ladder_sequence(m, e)) for m in regs}
        mono.update(block_ladder_monomials(seqs, e, ctx.members()))
    else:
        mono[mu] = ladder_monomial(mu, e, profile=_block_profile(ctx))
    return mono[mu]


def _llt_column(mu, e, ctx):
    cache = ctx.cache("llt")
    if mu in cache:
        return cache[mu]
    v = _monomial(mu, e, ctx)
    if v.coeff(mu) != LaurentPoly.one():
        raise AssertionError("ladder monomial is not unitriangular at its label")
    guard = 0
    while True:
        offenders = [nu for nu, c in v.terms.items() if nu != mu and not c.in_qZq()]
        if not offenders:
            break
        guard += 1
        if guard > 10000:
            raise AssertionError("LLT elimination failed to terminate")
        nu = _dominance_max(offenders)
        if not is_e_regular(nu, e):
            raise AssertionError("LLT correction hit an e-singular label")
        alpha, _ = bar_symmetric_split(v.coeff(nu))
        v = v - _llt_column(nu, e, ctx).scale(alpha)
    cache[mu] = v
    return v


# -- Littlewood-Richardson coefficients -------------------------------------


def lr_coefficient(rho, sigma, tau):
    """Number of LR skew semistandard tableaux of shape rho/sigma, content tau.

    Counts fillings of [rho] minus [sigma] that weakly increase along rows,
    strictly increase down columns, and whose reverse reading word is a
    lattice word.
    """
    if rho.size != sigma.size + tau.size:
        raise ValueError("sizes must satisfy |rho| = |sigma| + |tau|")
    if not rho.contains(sigma):
        return 0
    if not tau.parts:
        return 1 if rho == sigma else 0
    nrows = len(rho.parts)
    t = len(tau.parts)
    cells = []  # reading order: rows top to bottom, right to left
    for i in range(1, nrows + 1):
        lo = sigma.part(i)
        for j in range(rho.part(i), lo, -1):
            cells.append((i, j))
    total = 0
    filling = {}
    counts = [0] * (t + 1)

    def rec(pos):
        nonlocal total
        if pos == len(cells):
            if list(tau.parts) == counts[1 : len(tau.parts) + 1]:
                total += 1
            return
        i, j = cells[pos]
        above = filling.get((i - 1, j))
        right = filling.get((i, j + 1))
        lo = (above + 1) if above is not None else 1
        hi = right if right is not None else t
        for val in range(lo, hi + 1):
            if counts[val] >= tau.part(val):
                continue
            if val > 1 and counts[val] + 1 > counts[val - 1]:
                continue
            counts[val] += 1
            filling[(i, j)] = val
            rec(pos + 1)
            del filling[(i, j)]
            counts[val] -= 1

    rec(0)
    return total


# -- Rouquier-block closed formulas ------------------------------------------


def shifted_quotient(lam, e, c):
    """The e-quotient read off the abacus display shifted by charge c."""
    return core_quotient_weight(abacus_of(lam, e).shift(c))[1]


def rouquier_d(lam, mu, b):
    """q-decomposition number in a Rouquier block, by the LR-product formula.

    For 0-increasing mu the reduced hook formula is evaluated as well and
    both routes must agree.
    """
    c = rouquier_charge(b)
    if c is None:
        raise ValueError("%r is not a Rouquier block" % (b,))
    if block_of(lam, b.e) != b or block_of(mu, b.e) != b:
        raise ValueError("both partitions must lie in the block")
    e = b.e
    ql = shifted_quotient(lam, e, c)
    qm = shifted_quotient(mu, e, c)
    sl = [q.size for q in ql]
    sm = [q.size for q in qm]
    delta = sum((e - 1 - j) * (sl[j] - sm[j]) for j in range(e - 1))
    a_sizes = [0] * (e + 1)
    for i in range(1, e + 1):
        a_sizes[i] = a_sizes[i - 1] + sl[i - 1] - sm[i - 1]
    b_sizes = [0] * e
    acc = 0
    for i in range(e):
        b_sizes[i] = sm[i] + acc
        acc += sm[i] - sl[i]
    if any(x < 0 for x in a_sizes) or any(x < 0 for x in b_sizes):
        total = 0
    else:
        states = {EMPTY: 1}
        for j in range(e):
            betas = all_partitions(b_sizes[j])
            nxt = {}
            for alpha_next in all_partitions(a_sizes[j + 1]):
                alpha_next_conj = conjugate(alpha_next)
                tot = 0
                for alpha, val in states.items():
                    inner = 0
                    for beta in betas:
                        c1 = lr_coefficient(qm[j], alpha, beta)
                        if not c1:
                            continue
                        inner += c1 * lr_coefficient(ql[j], beta, alpha_next_conj)
                    tot += val * inner
                if tot:
                    nxt[alpha_next] = tot
            states = nxt
            if not states:
                break
        total = states.get(EMPTY, 0)
    value = LaurentPoly.monomial(delta) * LaurentPoly.of(total)
    if all(q.parts == (1,) * len(q.parts) for q in qm):
        reduced = _rouquier_d_reduced(ql, qm, e)
        if reduced != value:
            raise AssertionError(
                "Rouquier LR formula and hook reduction disagree: %s vs %s"
                % (value, reduced)
            )
    return value


def _rouquier_d_reduced(ql, qm, e):
    """Reduced hook form, valid when the mu quotient is all columns."""
    xs, ys = [], []
    for q in ql:
        if q.part(2) > 1:
            return LaurentPoly.zero()
        xs.append(q.part(1))
        ys.append(max(len(q.parts) - 1, 0))
    ws = [len(q.parts) for q in qm]
    cs = []
    acc = 0  # a_{i+1}
    for i in range(e):
        acc += (xs[i] + ys[i]) - ws[i]
        cs.append(xs[i] - acc)
    if any(c < 0 or c > min(1, xs[i]) for i, c in enumerate(cs)):
        return LaurentPoly.zero()
    return LaurentPoly.monomial(sum(xs[i] - cs[i] for i in range(e)))


def rouquier_column(mu, b, ctx=None):
    """The full column of d_{lambda,mu} over a Rouquier block."""
    ctx = ctx or BlockContext(b)
    out = {}
    for lam in ctx.members():
        v = rouquier_d(lam, mu, b)
        if v:
            out[lam] = v
    return FockVector(out)


# -- exceptional families ----------------------------------------------------


@dataclass(frozen=True)
class ScopesPair:
    """Blocks B and s_a(B) forming a [w:k]-pair for the runner a."""

    block: BlockId  # B
    tilde: BlockId  # s_a(B)
    a: int
    k: int


def scopes_pair(btilde, a):
    """The pair (B, btilde) with btilde = s_a(B); requires addable beads on
    runner a-1 of btilde's core."""
    e = btilde.e
    lv = list(core_levels(btilde.core, e))
    if a % e == 0:
        k = lv[e - 1] - lv[0] + 1
        lv[0], lv[e - 1] = lv[e - 1] + 1, lv[0] - 1
    else:
        a %= e
        k = lv[a - 1] - lv[a]
        lv[a - 1], lv[a] = lv[a], lv[a - 1]
    if k < 1:
        raise ValueError("core has no addable beads on runner %d-1" % a)
    from .abacus import core_from_levels

    return ScopesPair(
        block=BlockId(e, core_from_levels(tuple(lv), e), btilde.weight),
        tilde=btilde,
        a=a % e,
        k=k,
    )


@dataclass(frozen=True)
class ExceptionalFamily:
    """The 2(k+2) partitions F-generated from a generator with E = 0."""

    pair: ScopesPair
    generator: Partition  # in the weight w-k-1 block
    k: int
    hat: Partition
    lower: tuple  # lambda^0 .. lambda^{k+1} in B
    upper: tuple  # lambdatilde^0 .. lambdatilde^{k+1} in s_a(B)
    internal: tuple  # i_0 < ... < i_k
    external: tuple
    eta: tuple  # k+2 vectors in Z^w
    eta_hat: tuple  # their lifts
    ext_eps: dict  # x in external -> eps vector (common to all members)
    z0: tuple  # z(lambda^0) = z(lambdatilde^0)

    def members(self):
        return (self.generator, self.hat) + self.lower + self.upper

    def separation(self, z_mu):
        """Solve z_mu = z0 + eta_J + eps_X; None when no such (J, X) exists.

        Returns a dict with n = k+2-|J| (the number of member parallelotopes
        containing the label), s = |X|, and the witness sets.
        """
        w = len(z_mu)
        diff = vec_sub(tuple(z_mu), self.z0)
        cols = [self.eta[g] for g in range(1, self.k + 2)] + [
            self.ext_eps[x] for x in self.external
        ]
        sol = _solve_integer(cols, diff)
        if sol is None:
            return None
        t = sol[: self.k + 1]
        u = sol[self.k + 1 :]
        if any(x not in (0, 1) for x in u):
            return None
        if all(x in (0, 1) for x in t):
            J = frozenset(g + 1 for g, x in enumerate(t) if x == 1)
        elif all(x in (-1, 0) for x in t):
            J = frozenset({0} | {g + 1 for g, x in enumerate(t) if x == 0})
        else:
            return None
        X = frozenset(x for x, val in zip(self.external, u) if val)
        return {"n": self.k + 2 - len(J), "s": len(X), "J": J, "X": X}


def _solve_integer(cols, target):
    """Solve sum x_i cols[i] = target exactly over the integers, or None."""
    w = len(target)
    n = len(cols)
    mat = [[Fraction(cols[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(w)]
    piv_rows = []
    r = 0
    for c in range(n):
        sel = None
        for rr in range(r, w):
            if mat[rr][c]:
                sel = rr
                break
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = 1 / mat[r][c]
        mat[r] = [v * inv for v in mat[r]]
        for rr in range(w):
            if rr != r and mat[rr][c]:
                f = mat[rr][c]
                mat[rr] = [a - f * b for a, b in zip(mat[rr], mat[r])]
        piv_rows.append((r, c))
        r += 1
    # consistency
    for rr in range(r, w):
        if mat[rr][n]:
            return None
    sol = [Fraction(0)] * n
    for row, col in piv_rows:
        sol[col] = mat[row][n]
    if any(v.denominator != 1 for v in sol):
        return None
    # verify (guards the non-pivot columns)
    for i in range(w):
        if sum(int(sol[j]) * cols[j][i] for j in range(n)) != target[i]:
            return None
    return [int(v) for v in sol]


def check_block(lam, b):
    return block_of(lam, b.e) == b


def exceptional_family(gen, pair):
    """Build the family generated by gen across the pair, or None when it is
    not a hook-quotient family.

    Requires E_a(gen) = 0 and gen in the weight w-k-1 block of the pair.
    """
    e = pair.block.e
    a = pair.a
    k = pair.k
    if removable_beads(gen, a, e):
        raise ValueError("the generator must satisfy E_a = 0")
    C = addable_beads(gen, (a - 1) % e, e)
    if len(C) != k + 2:
        raise ValueError(
            "generator has %d addable beads on runner a-1, expected %d"
            % (len(C), k + 2)
        )
    quot = core_quotient_weight(abacus_of(gen, e))[1]
    if any(q.part(2) > 1 for q in quot):
        return None
    if len(quot[(a - 1) % e].parts) > 1:
        return None
    if quot[a % e].part(1) > 1:
        return None
    aba = abacus_of(gen, e)
    hat_ab = aba
    for c in C:
        hat_ab = hat_ab.move_bead(c, c + 1)
    hat = partition_of(hat_ab)
    lower = tuple(
        partition_of(hat_ab.move_bead(C[j] + 1, C[j])) for j in range(k + 2)
    )
    upper = tuple(
        partition_of(aba.move_bead(C[k + 1 - j], C[k + 1 - j] + 1))
        for j in range(k + 2)
    )
    # internal coordinates, read off the leading member in s_a(B)
    kap_t = abacus_of(pair.tilde.core, e)
    y0 = kap_t.runner_max(a % e) + e
    mvs = movements(upper[0], e)
    internal = []
    for g in range(k + 1):
        hits = [mv.index for mv in mvs if mv.q in (y0 + g * e, y0 - 1 + g * e)]
        if len(hits) != 1:
            raise AssertionError("internal coordinate not unique at gamma=%d" % g)
        internal.append(hits[0])
    if internal != sorted(internal):
        raise AssertionError("internal coordinates out of order")
    w = pair.block.weight
    external = tuple(i for i in range(1, w + 1) if i not in internal)
    i = internal
    unit = lambda r: tuple(1 if t == r - 1 else 0 for t in range(w))
    eta = [tuple(-x for x in unit(i[0]))]
    for g in range(1, k + 1):
        eta.append(vec_sub(unit(i[g - 1]), unit(i[g])))
    eta.append(unit(i[k]))
    eta_hat = [-lift_unit(w, i[0])]
    for g in range(1, k + 1):
        eta_hat.append(HatVec.make((0,) * w, {(i[g - 1], i[g]): 1}))
    eta_hat.append(lift_unit(w, i[k]))
    mb_u = modified_basis(upper[0], e)
    mb_l = modified_basis(lower[0], e)
    ext_eps = {}
    for x in external:
        if mb_u.plain[x - 1] != mb_l.plain[x - 1]:
            raise AssertionError("external eps is not constant on the family")
        ext_eps[x] = mb_u.plain[x - 1]
    z0 = z_label(lower[0], e)
    if z0 != z_label(upper[0], e):
        raise AssertionError("z(lambda^0) != z(lambdatilde^0)")
    return ExceptionalFamily(
        pair=pair,
        generator=gen,
        k=k,
        hat=hat,
        lower=lower,
        upper=upper,
        internal=tuple(internal),
        external=external,
        eta=tuple(eta),
        eta_hat=tuple(eta_hat),
        ext_eps=ext_eps,
        z0=z0,
    )


def check_family_block(pair):
    """The weight w-k-1 block holding the family generators."""
    e = pair.block.e
    a = pair.a
    wcheck = pair.block.weight - pair.k - 1
    if wcheck < 0:
        return None
    kt = abacus_of(pair.tilde.core, e)
    bottom = kt.runner_max(a % e)
    target = kt.runner_max((a - 1) % e) + e
    core = partition_of(kt.move_bead(bottom, target))
    return BlockId(e, core, wcheck)


def hook_quotient_families(pair, ctx=None):
    """All hook-quotient exceptional families across the pair."""
    bcheck = check_family_block(pair)
    if bcheck is None:
        return []
    e = pair.block.e
    out = []
    for gen in enumerate_block(bcheck):
        if removable_beads(gen, pair.a, e):
            continue
        fam = exceptional_family(gen, pair)
        if fam is not None:
            out.append(fam)
    return out


# -- inductive construction ---------------------------------------------------


class InductiveEngine:
    """Scopes-chain construction of canonical-basis columns.

    Columns are cached per block; chains are seeded so that every prefix
    block reuses the same route back to its Rouquier base.
    """

    def __init__(self, e):
        self.e = e
        self.cols = {}
        self.ctxs = {}
        self.chains = {}
        self.fams = {}

    def ctx(self, b):
        if b not in self.ctxs:
            self.ctxs[b] = BlockContext(b)
        return self.ctxs[b]

    def chain(self, b):
        if b not in self.chains:
            blocks, chain = scopes_chain_blocks(b)
            for j in range(len(blocks)):
                self.chains.setdefault(blocks[j], (blocks[: j + 1], chain[:j]))
        return self.chains[b]

    def families(self, pair):
        key = (pair.tilde, pair.a, pair.k)
        if key not in self.fams:
            self.fams[key] = hook_quotient_families(pair)
        return self.fams[key]

    def column(self, mu):
        e = self.e
        b = block_of(mu, e)
        key = (b, mu)
        if key in self.cols:
            return self.cols[key]
        if b.weight == 0:
            col = FockVector.basis(mu)
            self.cols[key] = col
            return col
        z = z_label(mu, e)
        if not is_m_increasing(z, 4):
            raise ValueError("inductive_G requires a 4-increasing partition")
        if is_rouquier(b):
            col = self._store(b, mu, rouquier_column(mu, b, self.ctx(b)))
            return col
        # walk back along the Scopes chain to the Rouquier base, then build
        # the z-matched columns forward iteratively (chains can be long)
        blocks, chain = self.chain(b)
        reps = [mu]
        for a, k in reversed(chain):
            prev = partition_of(weyl_s(abacus_of(reps[-1], e), a))
            reps.append(prev)
        reps.reverse()
        for i, rep in enumerate(reps):
            if block_of(rep, e) != blocks[i] or z_label(rep, e) != z:
                raise AssertionError("Weyl transport left the expected block or label")
        if (blocks[0], reps[0]) not in self.cols:
            self._store(blocks[0], reps[0], rouquier_column(reps[0], blocks[0], self.ctx(blocks[0])))
        for i in range(1, len(blocks)):
            tkey = (blocks[i], reps[i])
            if tkey in self.cols:
                continue
            a, k = chain[i - 1]
            pair = ScopesPair(block=blocks[i - 1], tilde=blocks[i], a=a, k=k)
            self._store(blocks[i], reps[i], self._step(reps[i], reps[i - 1], pair))
        return self.cols[key]

    def _store(self, b, mu, col):
        if col.coeff(mu) != LaurentPoly.one():
            raise AssertionError("inductive column is not unitriangular at mu")
        for lam, c in col.terms.items():
            if lam != mu and not c.in_qZq():
                raise AssertionError("inductive column violates triangularity")
        self.cols[(b, mu)] = col
        return col

    def _step(self, mu, prev, pair):
        """One Scopes step: columns of s_a(B) from columns of B."""
        e = self.e
        a, k = pair.a, pair.k
        rem = removable_beads(mu, a, e)
        if rem:
            if len(rem) != 1:
                raise AssertionError(
                    "4-increasing exceptional partition with several removable beads"
                )
            gen = partition_of(abacus_of(mu, e).move_bead(rem[0], rem[0] - 1))
            fam = exceptional_family(gen, pair)
            if fam is None:
                raise AssertionError("1-increasing exceptional family must be hook-quotient")
            if mu == fam.upper[0]:
                return apply_F(self.column(gen), a, 1, e)
        col = apply_E(self.cols[(pair.block, prev)], a, k, e)
        z_prev = z_label(prev, e)
        for fam in self.families(pair):
            sep = fam.separation(z_prev)
            if sep and sep["s"] == 0 and sep["n"] >= 2:
                corr = apply_F(self.column(fam.generator), a, 1, e)
                col = col - corr.scale(quantum_int(sep["n"] - 1))
        return col


def inductive_G(mu, e, engine=None):
    """Canonical basis column via the Scopes-chain induction."""
    engine = engine or InductiveEngine(e)
    return engine.column(mu)
