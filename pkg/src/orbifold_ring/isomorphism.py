"""The isomorphism from the orbifold Chow ring to the graded group algebra,
together with an exhaustive verification harness.

``Xi(eta(g, d)) = xi**(k_min(g^-1) + d)``.  The harness checks, for one weight
vector at a time, that ``Xi`` is a bijection on bases, preserves degrees,
products and pairings, that both rings are graded Frobenius algebras, and
that the root-of-unity identities the construction rests on hold for every
applicable argument.  Nothing is sampled: products are tabulated once and
every pair and triple of basis elements is compared with numpy.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

import numpy as np

from .chow import ChowBasisIndex, ChowElement, ChowRing
from .combinatorics import (
    PARTITION_DEFECT, Weights, age, fixed_set, gamma_inv, gamma_mul,
    in_sectors, j_set, k_max, k_min, make_weights, sector_enumeration,
    sector_partition, twisted_sectors,
)
from .model import ModelElement, ModelRing, is_gorenstein
from .report import VerificationReport

DEFAULT_MAX_TOTAL = 200


def default_max_total() -> int:
    return int(os.environ.get("ORBIFOLD_RING_MAX_TOTAL", DEFAULT_MAX_TOTAL))


def xi_exponent(w: Weights, b: ChowBasisIndex) -> int:
    return k_min(gamma_inv(b.g), w) + b.d


def xi_preimage(w: Weights, j: int) -> ChowBasisIndex:
    """Basis index ``eta(g, d)`` with ``Xi(eta(g, d)) = xi**j``."""
    h = sector_enumeration(w)[j].arg
    return ChowBasisIndex(gamma_inv(h), j - k_min(h, w))


def xi_map(w, x: ChowElement) -> ModelElement:
    w = make_weights(w)
    return ModelElement((xi_exponent(w, b), c) for b, c in x.items())


def xi_inverse(w, z: ModelElement) -> ChowElement:
    w = make_weights(w)
    return ChowElement((xi_preimage(w, j), c) for j, c in z.items())


# -- tabulation -------------------------------------------------------------

def _int_array(values) -> np.ndarray:
    values = list(values)
    if all(-2**62 < v < 2**62 for v in values):
        return np.array(values, dtype=np.int64)
    return np.array(values, dtype=object)


@dataclass
class StructureTables:
    """Products, degrees and Gram matrix of a :class:`BasisRing`.

    ``mult[a, b]`` is the position of ``basis[a] * basis[b]`` or ``N`` when the
    product vanishes; row and column ``N`` are the zero element, so lookups
    compose without branching.  Degrees and the Gram matrix are integers over
    the common denominators ``deg_den`` and ``gram_den``.
    """

    ring: object
    mult: np.ndarray
    degrees: list[Fraction]
    deg_num: np.ndarray
    deg_den: int
    gram: list[list[Fraction]]
    gram_num: np.ndarray
    gram_den: int

    @property
    def size(self) -> int:
        return len(self.degrees)

    def label(self, pos: int) -> str:
        if pos == self.size:
            return "0"
        return self.ring.label(self.ring.basis[pos])


def structure_tables(ring) -> StructureTables:
    basis = ring.basis
    N = len(basis)
    pos = {b: i for i, b in enumerate(basis)}
    mult = np.full((N + 1, N + 1), N, dtype=np.int64)
    for i, a in enumerate(basis):
        for j, b in enumerate(basis):
            c = ring.basis_cup(a, b)
            mult[i, j] = N if c is None else pos[c]
    degrees = [Fraction(ring.degree(b)) for b in basis]
    deg_den = math.lcm(*(d.denominator for d in degrees))
    deg_num = _int_array(int(d * deg_den) for d in degrees)
    gram = [[Fraction(ring.basis_pairing(a, b)) for b in basis] for a in basis]
    gram_den = math.lcm(*(v.denominator for row in gram for v in row))
    gram_num = np.zeros((N + 1, N + 1), dtype=np.int64)
    flat = _int_array(int(v * gram_den) for row in gram for v in row)
    if flat.dtype == object:
        gram_num = gram_num.astype(object)
    gram_num[:N, :N] = flat.reshape(N, N)
    return StructureTables(ring, mult, degrees, deg_num, deg_den,
                           gram, gram_num, gram_den)


def exact_rank(rows: list[list[Fraction]]) -> int:
    """Rank over the rationals by Gaussian elimination."""
    m = [list(r) for r in rows]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        p = m[rank][col]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                f = m[r][col] / p
                m[r] = [x - f * y for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def _first(mask: np.ndarray):
    bad = np.argwhere(~mask)
    return None if len(bad) == 0 else tuple(int(x) for x in bad[0])


# -- Frobenius algebra axioms -------------------------------------------------

def verify_frobenius(ring, tables: StructureTables | None = None) -> VerificationReport:
    """Unit, commutativity, associativity, grading, Frobenius identity and
    perfectness of the pairing, each over every basis pair or triple."""
    t = tables or structure_tables(ring)
    w, N, M, G = ring.w.entries, t.size, t.mult, t.gram_num
    rep = VerificationReport()
    tag = ring.name
    lab = t.label
    idx = np.arange(N)

    u = ring.basis.index(ring.unit)
    ok = (M[u, :N] == idx) & (M[:N, u] == idx)
    bad = _first(ok)
    rep.add(f"{tag}.unit", w, N, None if bad is None else {
        "a": lab(bad[0]), "1*a": lab(M[u, bad[0]]), "a*1": lab(M[bad[0], u])})

    bad = _first(M[:N, :N] == M[:N, :N].T)
    rep.add(f"{tag}.commutative", w, N * N, None if bad is None else {
        "a": lab(bad[0]), "b": lab(bad[1]),
        "ab": lab(M[bad]), "ba": lab(M[bad[1], bad[0]])})

    assoc_bad = frob_bad = None
    for a in range(N):
        ab = M[a, :N]                        # (b,)
        left = M[ab[:, None], idx[None, :]]  # (ab)c over (b, c)
        right = M[a, M[:N, :N]]              # a(bc)
        if assoc_bad is None:
            bad = _first(left == right)
            if bad is not None:
                b, c = bad
                assoc_bad = {"a": lab(a), "b": lab(b), "c": lab(c),
                             "(ab)c": lab(left[b, c]), "a(bc)": lab(right[b, c])}
        lhs = G[ab[:, None], idx[None, :]]   # <ab, c>
        rhs = G[a, M[:N, :N]]                # <a, bc>
        if frob_bad is None:
            bad = _first(lhs == rhs)
            if bad is not None:
                b, c = bad
                frob_bad = {"a": lab(a), "b": lab(b), "c": lab(c),
                            "<ab,c>": str(Fraction(lhs[b, c], t.gram_den)),
                            "<a,bc>": str(Fraction(rhs[b, c], t.gram_den))}
    rep.add(f"{tag}.associative", w, N ** 3, assoc_bad)

    prod = M[:N, :N]
    nonzero = prod != N
    D = np.append(t.deg_num, 0)
    graded_ok = ~nonzero | (D[:N, None] + D[None, :N] == D[prod])
    bad = _first(graded_ok)
    rep.add(f"{tag}.graded", w, int(nonzero.sum()), None if bad is None else {
        "a": lab(bad[0]), "b": lab(bad[1]), "ab": lab(prod[bad]),
        "deg a + deg b": str(t.degrees[bad[0]] + t.degrees[bad[1]]),
        "deg ab": str(t.degrees[prod[bad]])})

    rep.add(f"{tag}.frobenius", w, N ** 3, frob_bad)

    rank = exact_rank(t.gram)
    rep.add(f"{tag}.perfect_pairing", w, N, None if rank == N else {
        "rank": rank, "dimension": N})

    degrees_ok = all(0 <= d <= ring.w.n for d in t.degrees)
    rep.add(f"{tag}.degree_bounds", w, N, None if degrees_ok else {
        "degrees": [str(d) for d in t.degrees]})
    return rep


# -- the isomorphism ----------------------------------------------------------

def verify_isomorphism(w, chow_tables: StructureTables | None = None,
                       model_tables: StructureTables | None = None) -> VerificationReport:
    """The four properties of ``Xi``: bijective on bases, graded,
    multiplicative, compatible with pairings."""
    w = make_weights(w)
    ct = chow_tables or structure_tables(ChowRing(w))
    mt = model_tables or structure_tables(ModelRing(w))
    chow, model = ct.ring, mt.ring
    N = ct.size
    rep = VerificationReport()
    we = w.entries

    images = [xi_exponent(w, b) for b in chow.basis]
    bijective = sorted(images) == list(range(w.total)) and N == w.total
    rep.add("xi.step1_bijection", we, N, None if bijective else {
        "images": images})

    bad = next((b for b in chow.basis if xi_preimage(w, xi_exponent(w, b)) != b), None)
    if bad is None:
        badj = next((j for j in range(w.total)
                     if xi_exponent(w, xi_preimage(w, j)) != j), None)
        cex = None if badj is None else {"j": badj, "preimage": str(xi_preimage(w, badj))}
    else:
        cex = {"eta": chow.label(bad)}
    rep.add("xi.step1_inverse", we, 2 * N, cex)
    if not bijective:
        return rep

    mpos = {j: i for i, j in enumerate(model.basis)}
    perm = np.array([mpos[j] for j in images] + [mt.size], dtype=np.int64)

    bad = next((i for i, b in enumerate(chow.basis)
                if mt.degrees[perm[i]] != ct.degrees[i]), None)
    rep.add("xi.step2_graded", we, N, None if bad is None else {
        "eta": ct.label(bad), "deg eta": str(ct.degrees[bad]),
        "deg Xi(eta)": str(mt.degrees[perm[bad]])})

    left = perm[ct.mult[:N, :N]]                       # Xi(a*b)
    right = mt.mult[perm[:N, None], perm[None, :N]]    # Xi(a)*Xi(b)
    bad = _first(left == right)
    rep.add("xi.step3_ring_morphism", we, N * N, None if bad is None else {
        "a": ct.label(bad[0]), "b": ct.label(bad[1]),
        "Xi(ab)": mt.label(left[bad]), "Xi(a)Xi(b)": mt.label(right[bad])})

    lg = ct.gram_num[:N, :N] * mt.gram_den
    rg = mt.gram_num[perm[:N, None], perm[None, :N]] * ct.gram_den
    bad = _first(lg == rg)
    rep.add("xi.step4_pairing", we, N * N, None if bad is None else {
        "a": ct.label(bad[0]), "b": ct.label(bad[1]),
        "<a,b>": str(ct.gram[bad[0]][bad[1]]),
        "<Xi a,Xi b>": str(mt.gram[perm[bad[0]]][perm[bad[1]]])})

    unit_ok = xi_exponent(w, chow.unit) == model.unit
    rep.add("xi.units", we, 1, None if unit_ok else {
        "Xi(1)": xi_exponent(w, chow.unit)})

    bad = next((b for b in chow.basis
                if xi_exponent(w, chow.dual(b)) != model.dual(xi_exponent(w, b))), None)
    rep.add("xi.duals", we, N, None if bad is None else {
        "eta": chow.label(bad), "Xi(dual)": xi_exponent(w, chow.dual(bad)),
        "dual(Xi)": model.dual(xi_exponent(w, bad))})
    return rep


# -- combinatorial identities -------------------------------------------------

def _sample_args(w: Weights) -> list[Fraction]:
    """Arguments used for identities valid on every root of unity: all
    multiples of ``1/(2 lcm(w))`` and of ``1/|w|``."""
    L = 2 * w.lcm
    return sorted({Fraction(p, L) for p in range(L)}
                  | {Fraction(p, w.total) for p in range(w.total)})


class _Checker:
    """Collects the first counterexample of a named identity."""

    def __init__(self, rep, name, w):
        self.rep, self.name, self.w = rep, name, w
        self.count = 0
        self.cex = None

    def __call__(self, ok, **detail):
        self.count += 1
        if not ok and self.cex is None:
            self.cex = {k: str(v) for k, v in detail.items()}

    def __enter__(self):
        return self

    def __exit__(self, *exc):
        if exc[0] is None:
            self.rep.add(self.name, self.w.entries, self.count, self.cex)


def verify_combinatorics(w) -> VerificationReport:
    """Identities between fixed sets, ages, the enumeration and ``J``.

    Window ends are compared against brute-force scans of the enumeration
    table, never against the closed forms they are computed with.
    """
    w = make_weights(w)
    rep = VerificationReport()
    table = sector_enumeration(w)
    args = table.args
    sectors = twisted_sectors(w)
    samples = _sample_args(w)
    n = w.n

    with _Checker(rep, "comb.enumeration_bijection", w) as check:
        expected = sorted((Fraction(k, wi), i) for i, wi in enumerate(w) for k in range(wi))
        check(sorted(table) == expected and len(table) == w.total,
              table=list(table))
        check(all(args[k] <= args[k + 1] for k in range(len(args) - 1)),
              args=args)
        for g in sectors:
            check(args.count(g) == len(fixed_set(g, w)), g=g)

    with _Checker(rep, "comb.fixed_set_inverse", w) as check:
        for g in samples:
            check(fixed_set(g, w) == fixed_set(gamma_inv(g), w), g=g)

    # Arguments below are multiples of 1/scale; fractional parts of their
    # multiples are then residues mod scale.
    scale = math.lcm(2 * w.lcm, w.total)

    def num(g):
        return int(g * scale)

    with _Checker(rep, "comb.eq1_fractional_parts", w) as check:
        for g in samples:
            fixed = fixed_set(g, w)
            p, pinv = num(g), num(gamma_inv(g))
            for i, wi in enumerate(w):
                want = 0 if i in fixed else scale - pinv * wi % scale
                check(p * wi % scale == want, g=g, i=i)

    with _Checker(rep, "comb.eq2_age_sum", w) as check:
        for g in samples:
            lhs = age(g, w) + age(gamma_inv(g), w)
            check(lhs == n + 1 - len(fixed_set(g, w)), g=g, lhs=lhs)

    with _Checker(rep, "comb.eq3_count", w) as check:
        for g in sectors:
            count = sum(1 for a in args if a <= g)
            want = n + 1 + sum(math.floor(g * wi) for wi in w)
            check(count == want, g=g, count=count, formula=want)

    with _Checker(rep, "comb.eq4_window", w) as check:
        for g in sectors:
            km = k_min(g, w)
            for d in range(len(fixed_set(g, w))):
                check(args[km + d] == g, g=g, d=d, k=km + d)

    with _Checker(rep, "comb.eq5_kmin_kmax", w) as check:
        for g in sectors:
            hits = [k for k, a in enumerate(args) if a == g]
            check(k_min(g, w) == min(hits), g=g, closed=k_min(g, w), brute=min(hits))
            check(k_max(g, w) == max(hits), g=g, closed=k_max(g, w), brute=max(hits))
            check(k_max(g, w) == k_min(g, w) + len(fixed_set(g, w)) - 1, g=g)

    iargs = np.array([int(a * scale) for a in args], dtype=np.int64)
    ks = np.arange(w.total)
    with _Checker(rep, "comb.eq6_extended_kmin", w) as check:
        for g in samples:
            km = k_min(g, w)
            ig = int(g * scale)
            check(km == int((iargs < ig).sum()), g=g, k_min=km)
            rhs = iargs > ig if not in_sectors(g, w) else iargs >= ig
            bad = _first((ks >= km) == rhs)
            check(bad is None, g=g, k=None if bad is None else bad[0])
            check.count += w.total - 1

    with _Checker(rep, "comb.eq9_partition", w) as check, \
            _Checker(rep, "comb.eq10_age_defect", w) as check10:
        for g, h in itertools.product(sectors, repeat=2):
            gh = gamma_mul(g, h)
            parts = sector_partition(g, h, w)
            seen = sorted(i for p in parts for i in p)
            check(seen == list(range(n + 1)), g=g, h=h, parts=parts)
            pg, ph, pgh = num(g), num(h), num(gh)
            for part, defect in zip(parts, PARTITION_DEFECT):
                for i in part:
                    wi = w[i]
                    value = pg * wi % scale + ph * wi % scale - pgh * wi % scale
                    check(value == defect * scale, g=g, h=h, i=i,
                          value=Fraction(value, scale))
            ig, ih, igh = fixed_set(g, w), fixed_set(h, w), fixed_set(gh, w)
            lhs = age(g, w) + age(h, w) - age(gh, w)
            rhs = len(igh - (ig & ih)) + len(j_set(g, h, w))
            check10(lhs == rhs, g=g, h=h, lhs=lhs, rhs=rhs)
    return rep


def verify_degree_lemma(model: ModelRing) -> VerificationReport:
    """Bounds and subadditivity of the model degree, and its consequences."""
    w = model.w
    rep = VerificationReport()
    N = w.total
    table = sector_enumeration(w)
    deg = [model.degree(j) for j in range(N)]

    with _Checker(rep, "model.degree_chain", w) as check:
        for j in range(N):
            g = table[j].arg
            lo, hi = age(gamma_inv(g), w), w.n - age(g, w)
            check(0 <= lo <= deg[j] <= hi <= w.n, j=j, deg=deg[j], lo=lo, hi=hi)

    den = math.lcm(*(d.denominator for d in deg))
    D = np.array([int(d * den) for d in deg], dtype=np.int64)
    J = np.arange(N)
    ok = D[(J[:, None] + J[None, :]) % N] <= D[:, None] + D[None, :]
    bad = _first(ok)
    rep.add("model.subadditive", w.entries, N * N, None if bad is None else {
        "j": bad[0], "k": bad[1]})

    with _Checker(rep, "model.kmin_decomposition", w) as check:
        for j in range(N):
            g = table[j].arg
            d = j - k_min(g, w)
            check(0 <= d < len(fixed_set(g, w)) and deg[j] == age(gamma_inv(g), w) + d,
                  j=j, d=d)

    with _Checker(rep, "model.top_untwisted", w) as check:
        top = [j for j in range(N) if table[j].arg == 0 and deg[j] == w.n]
        check(top == [w.n], top=top)

    with _Checker(rep, "model.poincare_symmetry", w) as check:
        for u in set(deg):
            check(deg.count(u) == deg.count(w.n - u), u=u)

    if is_gorenstein(w):
        with _Checker(rep, "model.gorenstein_integral", w) as check:
            for j in range(N):
                check(deg[j].denominator == 1, j=j, deg=deg[j])
    return rep


def verify_weights(w, max_total: int | None = None,
                   chow: ChowRing | None = None,
                   model: ModelRing | None = None) -> VerificationReport:
    """Every check for one weight vector."""
    w = make_weights(w)
    cap = default_max_total() if max_total is None else max_total
    if w.total > cap:
        raise ValueError(f"|w| = {w.total} exceeds the verification cap {cap}")
    chow = chow or ChowRing(w)
    model = model or ModelRing(w)
    ct, mt = structure_tables(chow), structure_tables(model)
    rep = VerificationReport()
    rep.add("chow.basis_count", w.entries, 1,
            None if len(chow.basis) == w.total else {"count": len(chow.basis)})
    rep.extend(verify_combinatorics(w))
    rep.extend(verify_degree_lemma(model))
    rep.extend(verify_frobenius(chow, ct))
    rep.extend(verify_frobenius(model, mt))
    rep.extend(verify_isomorphism(w, ct, mt))
    rep.records.sort(key=lambda r: r.name)
    return rep


def sweep_weights(max_n: int, max_weight: int) -> Iterator[Weights]:
    """All weight vectors with at most ``max_n + 1`` entries, each at most
    ``max_weight``, in length-then-lexicographic order."""
    for length in range(1, max_n + 2):
        for entries in itertools.product(range(1, max_weight + 1), repeat=length):
            yield Weights(entries)


def verify_sweep(max_n: int, max_weight: int, max_total: int | None = None,
                 workers: int = 1) -> VerificationReport:
    vectors = list(sweep_weights(max_n, max_weight))
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor
        with ProcessPoolExecutor(workers) as pool:
            reports = list(pool.map(verify_weights, vectors,
                                    itertools.repeat(max_total), chunksize=16))
    else:
        reports = [verify_weights(w, max_total) for w in vectors]
    return VerificationReport.merge(reports)
