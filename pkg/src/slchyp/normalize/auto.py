"""Composable coordinate automorphisms of k[[x,y,z]] and the step engine.

An Automorphism is an ordered list of elementary moves: invertible linear
substitutions, shifts of one variable by a polynomial in the others, unit
scalings of one variable, and unit rescalings of the whole polynomial (the
last is bookkeeping, not a coordinate change, but it never changes a
verdict).  Replaying the steps on the recorded input must reproduce the
recorded output; tests rely on that round trip.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple, Union

from ..fields import (
    FieldContext,
    FieldElement,
    FieldEmbedding,
    NeedsAlgebraicExtension,
)
from ..poly import TriPoly, VARIABLE_NAMES
from ..unipoly import UniPoly, find_roots, nth_root

Matrix = Tuple[Tuple[FieldElement, ...], ...]


def mat_det(m: Matrix) -> FieldElement:
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def mat_mul(m: Matrix, n: Matrix) -> Matrix:
    out = []
    for i in range(3):
        row = []
        for j in range(3):
            acc = m[i][0] * n[0][j]
            for k in range(1, 3):
                acc = acc + m[i][k] * n[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_inverse(m: Matrix) -> Matrix:
    det = mat_det(m)
    if det.is_zero():
        raise ValueError("matrix is singular")
    inv_det = det.inverse()
    a, b, c = m[0]
    d, e, f = m[1]
    g, h, i = m[2]
    cof = (
        (e * i - f * h, c * h - b * i, b * f - c * e),
        (f * g - d * i, a * i - c * g, c * d - a * f),
        (d * h - e * g, b * g - a * h, a * e - b * d),
    )
    return tuple(tuple(x * inv_det for x in row) for row in cof)


def identity_matrix(ctx: FieldContext) -> Matrix:
    one, zero = ctx.one(), ctx.zero()
    return (
        (one, zero, zero),
        (zero, one, zero),
        (zero, zero, one),
    )


@dataclass(frozen=True)
class LinearStep:
    """x_i -> sum_j matrix[i][j] * x_j (an invertible linear substitution)."""

    matrix: Matrix

    def __post_init__(self):
        if mat_det(self.matrix).is_zero():
            raise ValueError("linear step must be invertible")

    def apply(self, f: TriPoly) -> TriPoly:
        ctx = f.context
        images = []
        for i in range(3):
            img = TriPoly.zero(ctx)
            for j in range(3):
                c = self.matrix[i][j]
                if not c.is_zero():
                    img = img + TriPoly.variable(ctx, j).scale(c)
            images.append(img)
        return f.substitute(images)

    def map_context(self, emb: FieldEmbedding) -> "LinearStep":
        return LinearStep(tuple(tuple(emb(c) for c in row) for row in self.matrix))

    def inverse_matrix(self) -> Matrix:
        return mat_inverse(self.matrix)

    def to_json(self):
        return {
            "kind": "linear",
            "matrix": [[c.to_json() for c in row] for row in self.matrix],
        }


@dataclass(frozen=True)
class ShiftStep:
    """variable -> variable + addend, the addend free of that variable and of
    constant term."""

    var: int
    addend: TriPoly

    def __post_init__(self):
        if not self.addend.coefficient((0, 0, 0)).is_zero():
            raise ValueError("shift addend must vanish at the origin")
        if any(m[self.var] for m in self.addend.terms):
            raise ValueError("shift addend must omit the target variable")

    def apply(self, f: TriPoly) -> TriPoly:
        ctx = f.context
        images = [TriPoly.variable(ctx, i) for i in range(3)]
        images[self.var] = images[self.var] + self.addend
        return f.substitute(images)

    def map_context(self, emb: FieldEmbedding) -> "ShiftStep":
        return ShiftStep(self.var, self.addend.map_coefficients(emb, emb.target))

    def to_json(self):
        return {
            "kind": "shift",
            "variable": VARIABLE_NAMES[self.var],
            "addend": self.addend.to_json(),
        }


@dataclass(frozen=True)
class ScaleStep:
    """variable -> unit * variable."""

    var: int
    unit: FieldElement

    def __post_init__(self):
        if self.unit.is_zero():
            raise ValueError("scale unit must be nonzero")

    def apply(self, f: TriPoly) -> TriPoly:
        powers = {0: f.context.one()}
        top = 0
        terms = {}
        for m, c in f.terms.items():
            e = m[self.var]
            while top < e:
                top += 1
                powers[top] = powers[top - 1] * self.unit
            terms[m] = c * powers[e] if e else c
        return TriPoly(f.context, terms)

    def map_context(self, emb: FieldEmbedding) -> "ScaleStep":
        return ScaleStep(self.var, emb(self.unit))

    def to_json(self):
        return {
            "kind": "scale",
            "variable": VARIABLE_NAMES[self.var],
            "unit": self.unit.to_json(),
        }


@dataclass(frozen=True)
class UnitRescaleStep:
    """f -> unit * f; not a coordinate change, recorded for replay."""

    unit: FieldElement

    def __post_init__(self):
        if self.unit.is_zero():
            raise ValueError("rescale unit must be nonzero")

    def apply(self, f: TriPoly) -> TriPoly:
        return f.scale(self.unit)

    def map_context(self, emb: FieldEmbedding) -> "UnitRescaleStep":
        return UnitRescaleStep(emb(self.unit))

    def to_json(self):
        return {"kind": "unit_rescale", "unit": self.unit.to_json()}


Step = Union[LinearStep, ShiftStep, ScaleStep, UnitRescaleStep]


@dataclass(frozen=True)
class Automorphism:
    steps: Tuple[Step, ...]

    def apply(self, f: TriPoly) -> TriPoly:
        for s in self.steps:
            f = s.apply(f)
        return f

    def map_context(self, emb: FieldEmbedding) -> "Automorphism":
        return Automorphism(tuple(s.map_context(emb) for s in self.steps))

    def compose(self, later: "Automorphism") -> "Automorphism":
        return Automorphism(self.steps + later.steps)

    def to_json(self):
        return [s.to_json() for s in self.steps]


def automorphism_from_json(data, context: FieldContext) -> Automorphism:
    from ..poly import tripoly_from_json

    var_index = {name: i for i, name in enumerate(VARIABLE_NAMES)}

    def element(c):
        if context.is_rational:
            text = str(c)
            if "/" in text:
                num, den = text.split("/")
                return context.from_fraction(int(num), int(den))
            return context.from_int(int(text))
        return context.from_vector(tuple(c))

    steps: List[Step] = []
    for entry in data:
        kind = entry["kind"]
        if kind == "linear":
            m = tuple(tuple(element(c) for c in row) for row in entry["matrix"])
            steps.append(LinearStep(m))
        elif kind == "shift":
            steps.append(
                ShiftStep(var_index[entry["variable"]],
                          tripoly_from_json(context, entry["addend"]))
            )
        elif kind == "scale":
            steps.append(ScaleStep(var_index[entry["variable"]], element(entry["unit"])))
        elif kind == "unit_rescale":
            steps.append(UnitRescaleStep(element(entry["unit"])))
        else:
            raise ValueError(f"unknown automorphism step kind {kind!r}")
    return Automorphism(tuple(steps))


@dataclass
class NormalizationOutcome:
    poly: TriPoly
    auto: Automorphism
    branch_label: str
    parameters: Dict[str, object] = field(default_factory=dict)
    embeddings: Tuple[FieldEmbedding, ...] = ()

    @property
    def context(self) -> FieldContext:
        return self.poly.context

    def replay(self, original: TriPoly) -> TriPoly:
        """Apply the recorded field extensions and steps to `original`."""
        for emb in self.embeddings:
            original = original.map_coefficients(emb, emb.target)
        return self.auto.apply(original)

    def replay_matches(self, original: TriPoly) -> bool:
        return self.replay(original) == self.poly


class Normalizer:
    """Mutable driver used while walking the case tree: holds the current
    polynomial, the accumulated automorphism, and the active field."""

    def __init__(self, f: TriPoly):
        self.f = f
        self.base_context = f.context
        self.steps: List[Step] = []
        self._base_f = f
        self._embs: List[FieldEmbedding] = []

    @property
    def context(self) -> FieldContext:
        return self.f.context

    @property
    def extension_degree_over_base(self) -> int:
        if self.context.is_rational:
            return 1
        return self.context.extension_degree // max(self.base_context.extension_degree, 1)

    # -- step application --------------------------------------------------

    def _push(self, step: Step) -> None:
        self.f = step.apply(self.f)
        self.steps.append(step)

    def linear(self, matrix: Matrix) -> None:
        if all(
            (matrix[i][j].is_one() if i == j else matrix[i][j].is_zero())
            for i in range(3)
            for j in range(3)
        ):
            return
        self._push(LinearStep(matrix))

    def shift(self, var: int, addend: TriPoly) -> None:
        if addend.is_zero():
            return
        self._push(ShiftStep(var, addend))

    def scale(self, var: int, unit: FieldElement) -> None:
        if unit.is_one():
            return
        self._push(ScaleStep(var, unit))

    def rescale(self, unit: FieldElement) -> None:
        if unit.is_one():
            return
        self._push(UnitRescaleStep(unit))

    def swap(self, i: int, j: int) -> None:
        ctx = self.context
        m = [[ctx.one() if a == b else ctx.zero() for b in range(3)] for a in range(3)]
        m[i][i] = ctx.zero()
        m[j][j] = ctx.zero()
        m[i][j] = ctx.one()
        m[j][i] = ctx.one()
        self.linear(tuple(tuple(row) for row in m))

    def yz_linear(self, m11, m12, m21, m22) -> None:
        """y -> m11*y + m12*z, z -> m21*y + m22*z."""
        ctx = self.context
        one, zero = ctx.one(), ctx.zero()
        self.linear(((one, zero, zero), (zero, m11, m12), (zero, m21, m22)))

    # -- field enlargement --------------------------------------------------

    def extend(self, emb: FieldEmbedding) -> None:
        if emb.source != self.context:
            raise ValueError("embedding does not start at the current context")
        if emb.target == self.context:
            return
        self.f = self.f.map_coefficients(emb, emb.target)
        self._base_f = self._base_f.map_coefficients(emb, emb.target)
        self.steps = [s.map_context(emb) for s in self.steps]
        self._embs.append(emb)

    # rollback support for trying alternative normalizations over Q (no
    # extensions ever happen there, so restoring is a plain state reset)

    def checkpoint(self):
        return (self.f, tuple(self.steps), len(self._embs), self._base_f)

    def restore(self, cp) -> None:
        f, steps, n_embs, base_f = cp
        if len(self._embs) != n_embs:
            raise RuntimeError("cannot roll back across a field extension")
        self.f = f
        self.steps = list(steps)
        self._base_f = base_f

    # local values captured before a root call can be carried across any
    # extensions that the call triggered

    def mark(self) -> int:
        return len(self._embs)

    def embed_elt(self, c: FieldElement, mark: int) -> FieldElement:
        for emb in self._embs[mark:]:
            c = emb(c)
        return c

    def embed_poly(self, f: TriPoly, mark: int) -> TriPoly:
        for emb in self._embs[mark:]:
            f = f.map_coefficients(emb, emb.target)
        return f

    # -- deterministic root access ------------------------------------------

    def root_of(self, g: UniPoly) -> FieldElement:
        """Canonical root of g, enlarging a finite field as needed; raises
        NeedsAlgebraicExtension over the rationals when no rational root."""
        if g.context != self.context:
            raise ValueError("polynomial context mismatch")
        if self.context.is_rational:
            res = find_roots(g, allow_extension=False)
            if not res.roots:
                raise NeedsAlgebraicExtension(
                    f"required a root of '{g}' over the rationals", polynomial=g
                )
            return res.first()
        res = find_roots(g, allow_extension=True)
        if res.context != self.context:
            self.extend(res.embedding)
        return res.first()

    def all_roots(self, g: UniPoly):
        """Full multiset of roots (enlarging finite fields; strict over Q)."""
        if g.context != self.context:
            raise ValueError("polynomial context mismatch")
        res = find_roots(g, allow_extension=True)
        if res.context != self.context:
            self.extend(res.embedding)
        return res.roots

    def nth_root_of(self, a: FieldElement, n: int) -> FieldElement:
        root, emb = nth_root(a, n, allow_extension=not self.context.is_rational)
        if emb.target != self.context:
            self.extend(emb)
        return root

    # -- outcome -------------------------------------------------------------

    def outcome(self, label: str, parameters: Optional[Dict[str, object]] = None) -> NormalizationOutcome:
        out = NormalizationOutcome(
            self.f,
            Automorphism(tuple(self.steps)),
            label,
            parameters or {},
            tuple(self._embs),
        )
        # replay integrity: the recorded steps reproduce the recorded output
        if out.auto.apply(self._base_f) != self.f:
            raise AssertionError("automorphism replay mismatch")
        return out

    def replay_outcome(self, out: NormalizationOutcome) -> None:
        """Re-apply a sub-normalization (its extensions and its steps) to the
        polynomial carried here."""
        for emb in out.embeddings:
            self.extend(emb)
        for step in out.auto.steps:
            self._push(step)


def try_assignments(nz: "Normalizer", assignments, attempt):
    """Run `attempt` on each assignment until one completes.

    Over the rationals an assignment that demands an irrational root is
    rolled back and the next is tried (different choices of which factor goes
    where can need different roots); over a finite field the first assignment
    succeeds because extensions are silent.
    """
    rational = nz.context.is_rational
    last = None
    for assign in assignments:
        cp = nz.checkpoint() if rational else None
        try:
            return attempt(assign)
        except NeedsAlgebraicExtension as exc:
            if not rational:
                raise
            last = exc
            nz.restore(cp)
    if last is None:
        raise ValueError("no assignments supplied")
    raise last


def matrix_mapping_form_to_var(coeffs: Sequence[FieldElement], var: int,
                               ctx: FieldContext) -> Matrix:
    """Invertible substitution M with L(M x) = x_var for the linear form L
    given by `coeffs`: complete L to a basis with standard vectors and invert."""
    one, zero = ctx.one(), ctx.zero()
    others = [i for i in range(3) if i != var]
    for a in range(3):
        for b in range(3):
            if a == b:
                continue
            rows = [[zero, zero, zero] for _ in range(3)]
            rows[var] = list(coeffs)
            rows[others[0]][a] = one
            rows[others[1]][b] = one
            m = tuple(tuple(r) for r in rows)
            if not mat_det(m).is_zero():
                return mat_inverse(m)
    raise ValueError("form is zero; cannot complete basis")
