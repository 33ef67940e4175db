"""Independent jet-scheme oracle for minimal log discrepancies.

The truncated arc equations of f at level m live in the polynomial ring on
x^(j), y^(j), z^(j) for j <= m.  The Krull height of the ideal they generate
together with the three order-zero variables, minus the level, bounds the
minimal log discrepancy from above at every level and attains it at a level
governed by the order of a computing divisor.  Heights come from a Groebner
basis (graded reverse lexicographic) via a maximal-independent-set search on
the leading monomials.

The Buchberger engine is generic over the exact coefficient fields and also
serves the cubic-cone classifier (lex order for elimination).  It never
truncates: if a basis exceeds the configured budget the computation aborts
with OracleOverflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from .fields import FieldContext, FieldElement
from .poly import TriPoly

NMonomial = Tuple[int, ...]
NPoly = Dict[NMonomial, FieldElement]


class OracleOverflow(RuntimeError):
    """The Groebner basis exceeded the configured size budget."""


@dataclass(frozen=True)
class GroebnerBudget:
    max_basis: int = 20000


# ---------------------------------------------------------------------------
# sparse n-variable polynomials as dicts


def np_zero() -> NPoly:
    return {}


def np_add(a: NPoly, b: NPoly) -> NPoly:
    out = dict(a)
    for m, c in b.items():
        if m in out:
            s = out[m] + c
            if s.is_zero():
                del out[m]
            else:
                out[m] = s
        else:
            out[m] = c
    return out


def np_scale(a: NPoly, c: FieldElement) -> NPoly:
    if c.is_zero():
        return {}
    return {m: v * c for m, v in a.items()}


def np_mul_term(a: NPoly, m: NMonomial, c: FieldElement) -> NPoly:
    return {tuple(x + y for x, y in zip(mm, m)): v * c for mm, v in a.items()}


def np_mul(a: NPoly, b: NPoly) -> NPoly:
    out: NPoly = {}
    for m1, c1 in a.items():
        for m2, c2 in b.items():
            m = tuple(x + y for x, y in zip(m1, m2))
            c = c1 * c2
            if m in out:
                c = out[m] + c
            if c.is_zero():
                out.pop(m, None)
            else:
                out[m] = c
    return out


def grevlex_key(m: NMonomial):
    return (sum(m), tuple(-e for e in reversed(m)))


def lex_key(m: NMonomial):
    return m


ORDERS = {"grevlex": grevlex_key, "lex": lex_key}


def leading(a: NPoly, key) -> Tuple[NMonomial, FieldElement]:
    m = max(a, key=key)
    return m, a[m]


def _divides(m: NMonomial, n: NMonomial) -> bool:
    return all(x <= y for x, y in zip(m, n))


def np_reduce(p: NPoly, basis: List[NPoly], key) -> NPoly:
    """Full normal form of p modulo the basis."""
    remainder: NPoly = {}
    work = dict(p)
    lts = [leading(g, key) for g in basis]
    while work:
        m, c = leading(work, key)
        hit = None
        for g, (lm, lc) in zip(basis, lts):
            if _divides(lm, m):
                hit = (g, lm, lc)
                break
        if hit is None:
            remainder[m] = c
            del work[m]
            continue
        g, lm, lc = hit
        shift = tuple(x - y for x, y in zip(m, lm))
        work = np_add(work, np_mul_term(g, shift, -(c / lc)))
    return remainder


def groebner_basis(
    gens: Sequence[NPoly],
    order: str = "grevlex",
    budget: GroebnerBudget = GroebnerBudget(),
) -> List[NPoly]:
    """Reduced Groebner basis by Buchberger's algorithm with the normal
    selection strategy and the coprimality criterion."""
    key = ORDERS[order]
    basis: List[NPoly] = []
    for g in gens:
        if g:
            r = np_reduce(g, basis, key) if basis else dict(g)
            if r:
                _, lc = leading(r, key)
                basis.append(np_scale(r, lc.inverse()))
                if len(basis) > budget.max_basis:
                    raise OracleOverflow(
                        f"basis exceeded {budget.max_basis} elements"
                    )
    pairs = {(i, j) for i in range(len(basis)) for j in range(i)}
    while pairs:
        # normal strategy: smallest lcm of the leading monomials
        def pair_key(ij):
            i, j = ij
            mi, _ = leading(basis[i], key)
            mj, _ = leading(basis[j], key)
            return key(tuple(max(a, b) for a, b in zip(mi, mj)))

        i, j = min(pairs, key=pair_key)
        pairs.discard((i, j))
        mi, ci = leading(basis[i], key)
        mj, cj = leading(basis[j], key)
        lcm = tuple(max(a, b) for a, b in zip(mi, mj))
        if all(a + b == l for a, b, l in zip(mi, mj, lcm)):
            continue  # coprime leading monomials reduce to zero
        si = np_mul_term(basis[i], tuple(l - a for l, a in zip(lcm, mi)), ci.inverse())
        sj = np_mul_term(basis[j], tuple(l - a for l, a in zip(lcm, mj)), cj.inverse())
        s = np_add(si, np_scale(sj, _minus_one(sj)))
        r = np_reduce(s, basis, key)
        if r:
            _, lc = leading(r, key)
            basis.append(np_scale(r, lc.inverse()))
            if len(basis) > budget.max_basis:
                raise OracleOverflow(
                    f"basis exceeded {budget.max_basis} elements"
                )
            k = len(basis) - 1
            pairs.update((k, t) for t in range(k))
    # inter-reduce for a canonical (reduced) basis
    reduced: List[NPoly] = []
    lts = [leading(g, key)[0] for g in basis]
    for idx, g in enumerate(basis):
        lm = lts[idx]
        if any(
            o != idx and _divides(lts[o], lm) and (lts[o] != lm or o < idx)
            for o in range(len(basis))
        ):
            continue
        r = np_reduce(g, [b for b in basis if b is not g], key)
        if r:
            _, lc = leading(r, key)
            reduced.append(np_scale(r, lc.inverse()))
    reduced.sort(key=lambda g: key(leading(g, key)[0]))
    return reduced


def _minus_one(p: NPoly) -> FieldElement:
    c = next(iter(p.values()))
    return -c.context.one()


def quotient_dimension(leading_monomials: Sequence[NMonomial], nvars: int) -> int:
    """Krull dimension of k[x_1..x_n]/I from the leading-monomial ideal:
    the largest set of variables meeting no leading monomial's support."""
    supports = [frozenset(i for i, e in enumerate(m) if e) for m in leading_monomials]
    if any(not s for s in supports):
        return -1  # ideal contains a unit: empty spectrum
    for size in range(nvars, -1, -1):
        for subset in combinations(range(nvars), size):
            sset = set(subset)
            if all(not s <= sset for s in supports):
                return size
    return 0


def ideal_height_of(gens: Sequence[NPoly], nvars: int,
                    budget: GroebnerBudget = GroebnerBudget()) -> int:
    basis = groebner_basis(gens, "grevlex", budget)
    if not basis:
        return 0
    key = ORDERS["grevlex"]
    lts = [leading(g, key)[0] for g in basis]
    dim = quotient_dimension(lts, nvars)
    if dim < 0:
        return nvars  # unit ideal; height of the whole ring by convention
    return nvars - dim


# ---------------------------------------------------------------------------
# truncated arc equations


@dataclass
class JetSystem:
    m: int
    nvars: int
    context: FieldContext
    generators: List[NPoly]  # x^(0), y^(0), z^(0), f^(0), ..., f^(m)


def _series_mul(a: List[NPoly], b: List[NPoly], m: int) -> List[NPoly]:
    out = [np_zero() for _ in range(m + 1)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if i + j > m:
                break
            if bj:
                out[i + j] = np_add(out[i + j], np_mul(ai, bj))
    return out


def build_jets(f: TriPoly, m: int) -> JetSystem:
    """Arc-equation generators of f through level m, over a prime field or Q.

    Variable layout: index 3*j + i is the level-j coordinate of variable i.
    """
    ctx = f.context
    if not ctx.is_rational and ctx.extension_degree != 1:
        raise ValueError("the jet oracle is restricted to prime fields and Q")
    if m < 0:
        raise ValueError("level must be >= 0")
    nvars = 3 * (m + 1)

    def var(i: int, j: int) -> NPoly:
        mono = [0] * nvars
        mono[3 * j + i] = 1
        return {tuple(mono): ctx.one()}

    series = []
    for i in range(3):
        series.append([var(i, j) for j in range(m + 1)])
    one_series = [np_zero() for _ in range(m + 1)]
    one_series[0] = {tuple([0] * nvars): ctx.one()}

    levels = [np_zero() for _ in range(m + 1)]
    for mono, coeff in f.terms.items():
        term = one_series
        for i in range(3):
            for _ in range(mono[i]):
                term = _series_mul(term, series[i], m)
        for j in range(m + 1):
            levels[j] = np_add(levels[j], np_scale(term[j], coeff))

    gens = [var(0, 0), var(1, 0), var(2, 0)] + levels
    return JetSystem(m, nvars, ctx, gens)


def ideal_height(system: JetSystem,
                 budget: GroebnerBudget = GroebnerBudget()) -> int:
    """Height of (x^(0), y^(0), z^(0), f^(0), ..., f^(m))."""
    return ideal_height_of(system.generators, system.nvars, budget)


def s_m(f: TriPoly, m: int, budget: GroebnerBudget = GroebnerBudget()) -> int:
    """2(m+1) minus the dimension of the level-m jet scheme of V(f) over the
    origin (equivalently, the ideal height minus m+1)."""
    system = build_jets(f, m)
    return ideal_height(system, budget) - (m + 1)


@dataclass
class SmProfile:
    entries: List[Tuple[int, int, int]]  # (m, height, s_m)

    def contact_entries(self) -> List[Tuple[int, int]]:
        """(level, height - level) pairs of the contact-locus formula; the
        level-m entry uses the generators through f^(m-1), i.e. s_{m-1}."""
        return [(m + 1, sm) for (m, _h, sm) in self.entries]

    def to_json(self):
        return {
            "sm": [[m, h, sm] for (m, h, sm) in self.entries],
            "contact": [[lv, v] for lv, v in self.contact_entries()],
        }


@dataclass
class ProfileSummary:
    profile: SmProfile
    min_value: int
    expected_mld: Optional[int]
    matches_expected: Optional[bool]
    consistent_lower_bound: Optional[bool]

    def to_json(self):
        data = self.profile.to_json()
        data.update(
            {
                "min_value": self.min_value,
                "expected_mld": self.expected_mld,
                "matches_expected": self.matches_expected,
                "every_level_at_least_expected": self.consistent_lower_bound,
            }
        )
        return data


def mld_profile(
    f: TriPoly,
    m_max: int,
    expected_mld: Optional[int] = None,
    budget: GroebnerBudget = GroebnerBudget(),
) -> ProfileSummary:
    """Contact-formula table at levels 1..m_max.

    The infimum over all levels computes the mld, so a finite table only
    certifies an upper bound; when a known nonnegative mld is supplied the
    summary also checks that every level stays at or above it.
    """
    if m_max < 1:
        raise ValueError("m_max must be >= 1")
    entries = []
    for m in range(m_max):
        system = build_jets(f, m)
        h = ideal_height(system, budget)
        entries.append((m, h, h - (m + 1)))
    profile = SmProfile(entries)
    values = [v for _, v in profile.contact_entries()]
    min_value = min(values)
    matches = None
    consistent = None
    if expected_mld is not None:
        matches = min_value == expected_mld
        consistent = all(v >= expected_mld for v in values)
    return ProfileSummary(profile, min_value, expected_mld, matches, consistent)
