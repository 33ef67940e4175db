"""Projective classification of cubic cones in k[[x,y,z]].

For order-3 polynomials the minimal log discrepancy equals that of the
degree-3 initial form, so everything reduces to the projective type of the
plane cubic it cuts out: smooth, irreducible nodal or cuspidal, conic plus a
transverse or tangent line, triangle, three concurrent lines, or a repeated
line.  Non log canonical types are normalized far enough that an explicit
origin-centered toric witness certifies the verdict at runtime; log canonical
types carry a Frobenius-splitting certificate where one exists and a cited
table verdict otherwise.

Linear factors are located through the restrictions to the three coordinate
lines: a line on the cubic meets each coordinate line in a zero of the
corresponding binary form, so the finitely many candidate lines through
pairs of restriction zeros are tested by exact division.  Over a finite
field the field is enlarged until the restrictions split, which makes the
search complete; over the rationals only rational lines are found and the
conjugate configurations are told apart by rank and singular-point data.
"""

from __future__ import annotations

from typing import List, Optional, Tuple

from ..fields import FieldElement
from ..jets import GroebnerBudget, ORDERS, groebner_basis, ideal_height_of, leading
from ..poly import (
    TriPoly,
    divide_exact,
    frobenius_descent,
    is_squarefree,
    squarefree_excess,
)
from ..unipoly import UniPoly, find_roots
from .auto import (
    Normalizer,
    NormalizationOutcome,
    mat_det,
    matrix_mapping_form_to_var,
)
from .binary import pair_change, single_change

Line = Tuple[FieldElement, FieldElement, FieldElement]


def classify_cubic_cone(g: TriPoly) -> NormalizationOutcome:
    """Determine the projective type of {g = 0} and normalize as far as the
    field allows.  Branch labels: cone:{repeated-line, concurrent-lines,
    triangle, conic-tangent, conic-transverse, nodal, cuspidal, smooth}."""
    if g.is_zero() or not g.is_homogeneous(3):
        raise ValueError("input must be a nonzero homogeneous cubic")
    nz = Normalizer(g)
    if not is_squarefree(g):
        return _repeated_line(nz)
    quotient, lines = _linear_factors(nz, nz.f)
    if len(lines) == 3:
        return _three_lines(nz, lines)
    if len(lines) == 1:
        return _conic_and_line(nz, lines[0], quotient)
    if len(lines) != 0:
        raise AssertionError("impossible linear factor count for a cubic")
    return _no_rational_lines(nz)


# ---------------------------------------------------------------------------
# helpers


def _line_poly(nz: Normalizer, L: Line) -> TriPoly:
    ctx = nz.context
    out = TriPoly.zero(ctx)
    for i, c in enumerate(L):
        if not c.is_zero():
            out = out + TriPoly.variable(ctx, i).scale(c)
    return out


def _normalize_line(L: Line) -> Line:
    for c in L:
        if not c.is_zero():
            inv = c.inverse()
            return tuple(x * inv for x in L)
    raise ValueError("zero line")


def _cross(p: Line, q: Line) -> Line:
    return (
        p[1] * q[2] - p[2] * q[1],
        p[2] * q[0] - p[0] * q[2],
        p[0] * q[1] - p[1] * q[0],
    )


def _try_divide(h: TriPoly, L: TriPoly) -> Optional[TriPoly]:
    try:
        return divide_exact(h, L)
    except ArithmeticError:
        return None


def _binary_restriction_points(nz: Normalizer, h: TriPoly, drop: int):
    """Distinct projective zeros of h restricted to {x_drop = 0}, as point
    triples.  Finite fields are enlarged until the restriction splits; over
    the rationals only rational zeros are returned."""
    keep = [i for i in range(3) if i != drop]
    rest = h.restrict_to_pair(tuple(keep))
    if rest.is_zero():
        raise AssertionError("coordinate-line factor should be handled earlier")
    deg = rest.total_degree()
    coeffs = []
    ctx = nz.context
    for k in range(deg + 1):
        m = [0, 0, 0]
        m[keep[0]] = deg - k
        m[keep[1]] = k
        coeffs.append(rest.coefficient(tuple(m)))
    points = []
    one, zero = ctx.one(), ctx.zero()
    if coeffs[0].is_zero():
        points.append((one, zero))  # zero in the keep[0]-axis direction
    # remaining zeros parametrized as [t : 1]: rest(t, 1) = sum c_k t^(deg-k)
    p = UniPoly.make(ctx, list(reversed(coeffs)))
    if p.degree() >= 1:
        if nz.context.is_rational:
            roots = find_roots(p, allow_extension=False).roots
        else:
            mark = nz.mark()
            roots = nz.all_roots(p)
            points = [
                (nz.embed_elt(a, mark), nz.embed_elt(b, mark)) for a, b in points
            ]
        one = nz.context.one()
        for r, _mult in roots:
            points.append((r, one))
    out = []
    zero = nz.context.zero()
    for a, b in points:
        triple = [zero, zero, zero]
        triple[keep[0]] = a
        triple[keep[1]] = b
        out.append(tuple(triple))
    return out


def _find_linear_factor(nz: Normalizer, h: TriPoly) -> Optional[Tuple[TriPoly, Line]]:
    ctx = nz.context
    for v in range(3):
        if all(m[v] > 0 for m in h.terms):
            L = [ctx.zero()] * 3
            L[v] = ctx.one()
            return _try_divide(h, TriPoly.variable(ctx, v)), tuple(L)
    if h.total_degree() == 1:
        L = tuple(
            h.coefficient(tuple(1 if i == j else 0 for j in range(3)))
            for i in range(3)
        )
        return TriPoly.constant(ctx.one()), _normalize_line(L)
    mark = nz.mark()
    pts_z = _binary_restriction_points(nz, h, 2)
    h = nz.embed_poly(h, mark)
    mark = nz.mark()
    pts_y = _binary_restriction_points(nz, h, 1)
    h = nz.embed_poly(h, mark)
    pts_z = [tuple(nz.embed_elt(c, mark) for c in p) for p in pts_z]
    mark = nz.mark()
    pts_x = _binary_restriction_points(nz, h, 0)
    h = nz.embed_poly(h, mark)
    pts_z = [tuple(nz.embed_elt(c, mark) for c in p) for p in pts_z]
    pts_y = [tuple(nz.embed_elt(c, mark) for c in p) for p in pts_y]
    ctx = nz.context
    e0 = (ctx.one(), ctx.zero(), ctx.zero())
    candidates = []
    for p in pts_z:
        for q in pts_y:
            if _proj_equal(p, q):
                continue
            candidates.append(_cross(p, q))
    for p in pts_x:
        candidates.append(_cross(p, e0))
    seen = set()
    uniq = []
    for c in candidates:
        if all(x.is_zero() for x in c):
            continue
        norm = _normalize_line(c)
        key = tuple(x.sort_key() for x in norm)
        if key in seen:
            continue
        seen.add(key)
        uniq.append(norm)
    uniq.sort(key=lambda L: tuple(x.sort_key() for x in L))
    for L in uniq:
        quo = _try_divide(h, _line_poly(nz, L))
        if quo is not None:
            return quo, L
    return None


def _proj_equal(p, q) -> bool:
    return all(
        (p[i] * q[j] - p[j] * q[i]).is_zero()
        for i in range(3)
        for j in range(i + 1, 3)
    )


def _linear_factors(nz: Normalizer, h: TriPoly):
    lines: List[Line] = []
    while h.total_degree() >= 1:
        mark = nz.mark()
        found = _find_linear_factor(nz, h)
        # the search may have enlarged the field even when it found nothing
        h = nz.embed_poly(h, mark)
        lines = [tuple(nz.embed_elt(c, mark) for c in L) for L in lines]
        if found is None:
            break
        h, L = found
        lines.append(L)
    return h, lines


def _move_point_to_z(nz: Normalizer, P: Line) -> None:
    """Linear change taking the projective point P to [0:0:1]."""
    ctx = nz.context
    one, zero = ctx.one(), ctx.zero()
    std = [(one, zero, zero), (zero, one, zero), (zero, zero, one)]
    for a in range(3):
        for b in range(a + 1, 3):
            cols = (std[a], std[b], P)
            m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
            if not mat_det(m).is_zero():
                nz.linear(m)
                return
    raise ValueError("point is zero")


# ---------------------------------------------------------------------------
# branches


def _repeated_line(nz: Normalizer) -> NormalizationOutcome:
    g = nz.f
    p = nz.context.characteristic
    partials = [g.derivative(i) for i in range(3)]
    if all(d.is_zero() for d in partials):
        # p = 3 and g is a cube of a linear form
        L = frobenius_descent(g)
    else:
        G = squarefree_excess(g)
        if G.total_degree() == 1:
            L = G
        elif G.total_degree() == 2:
            if all(G.derivative(i).is_zero() for i in range(3)):
                L = frobenius_descent(G)
            else:
                L = squarefree_excess(G)
        else:
            raise AssertionError("unexpected repeated-part degree")
    if L.total_degree() != 1:
        raise AssertionError("repeated factor is not a line")
    coeffs = tuple(L.coefficient(tuple(1 if i == j else 0 for j in range(3))) for i in range(3))
    if _try_divide(nz.f, _line_poly(nz, coeffs) * _line_poly(nz, coeffs)) is None:
        raise AssertionError("square of the repeated line does not divide")
    nz.linear(matrix_mapping_form_to_var(coeffs, 0, nz.context))
    if any(m[0] < 2 for m in nz.f.terms):
        raise AssertionError("repeated-line normalization failed")
    return nz.outcome("cone:repeated-line")


def _three_lines(nz: Normalizer, lines: List[Line]) -> NormalizationOutcome:
    m = tuple(tuple(L) for L in lines)
    if mat_det(m).is_zero():
        P = _cross(lines[0], lines[1])
        _move_point_to_z(nz, P)
        if any(mm[2] for mm in nz.f.terms):
            raise AssertionError("concurrent normalization left z-terms")
        return nz.outcome("cone:concurrent-lines")
    from .auto import mat_inverse

    nz.linear(mat_inverse(m))
    if set(nz.f.terms) != {(1, 1, 1)}:
        raise AssertionError("triangle normalization failed")
    return nz.outcome("cone:triangle", {"unit": nz.f.coefficient((1, 1, 1))})


def _conic_and_line(nz: Normalizer, L: Line, conic: TriPoly) -> NormalizationOutcome:
    ctx = nz.context
    p = ctx.characteristic
    if p == 0:
        # the conic may still split into a conjugate pair of lines: rank test
        rank = _conic_rank(conic)
        if rank <= 2:
            P = _conic_radical_point(conic)
            val = sum((c * v for c, v in zip(L, P)), ctx.zero())
            if val.is_zero():
                _move_point_to_z(nz, P)
                if any(mm[2] for mm in nz.f.terms):
                    raise AssertionError("concurrent normalization left z-terms")
                return nz.outcome("cone:concurrent-lines")
            return nz.outcome("cone:triangle", {"split": "conjugate pair"})
    # move the line to {x = 0} and look at the restriction of the conic
    nz.linear(matrix_mapping_form_to_var(L, 0, ctx))
    conic_now = divide_exact(nz.f, TriPoly.variable(nz.context, 0))
    b0 = conic_now.coefficient((0, 2, 0))
    b1 = conic_now.coefficient((0, 1, 1))
    b2 = conic_now.coefficient((0, 0, 2))
    ctx = nz.context
    if p == 2:
        tangent = b1.is_zero()
    else:
        four = ctx.from_int(4)
        tangent = (b1 * b1 - four * b0 * b2).is_zero()
    if tangent:
        return _conic_tangent(nz, b0, b1, b2)
    return _conic_transverse(nz, b0, b1, b2)


def _conic_tangent(nz: Normalizer, b0, b1, b2) -> NormalizationOutcome:
    ctx = nz.context
    p = ctx.characteristic
    one, zero = ctx.one(), ctx.zero()
    # double zero direction of b0 y^2 + b1 yz + b2 z^2
    if p == 2:
        d = (b2.pth_root(), b0.pth_root())
    elif not b0.is_zero():
        two = ctx.from_int(2)
        d = (-(b1 / (two * b0)), one)
    else:
        d = (one, zero)
    # send the tangency point [0 : d0 : d1] to [0:0:1] fixing the line x=0
    if not d[0].is_zero():
        nz.yz_linear(zero, d[0], one, d[1])
    else:
        nz.yz_linear(one, d[0], zero, d[1])
    conic_now = divide_exact(nz.f, TriPoly.variable(nz.context, 0))
    if not (
        conic_now.coefficient((0, 0, 2)).is_zero()
        and conic_now.coefficient((0, 1, 1)).is_zero()
    ):
        raise AssertionError("tangency point normalization failed")
    alpha = conic_now.coefficient((1, 0, 1))
    if alpha.is_zero():
        raise AssertionError("tangent line is not the computed one")
    beta = conic_now.coefficient((2, 0, 0))
    gammac = conic_now.coefficient((1, 1, 0))
    ai = alpha.inverse()
    addend = (
        TriPoly.variable(nz.context, 0).scale(-(beta * ai))
        + TriPoly.variable(nz.context, 1).scale(-(gammac * ai))
    )
    nz.shift(2, addend)
    expected_keys = {(2, 0, 1), (1, 2, 0)}
    if set(nz.f.terms) != expected_keys:
        raise AssertionError("conic-tangent normal form failed")
    return nz.outcome("cone:conic-tangent")


def _conic_transverse(nz: Normalizer, b0, b1, b2) -> NormalizationOutcome:
    ctx = nz.context
    # intersection points of the line {x=0} with the conic: zeros of the
    # restriction; over Q an irrational pair only skips the cosmetic part
    quad = UniPoly.make(ctx, [b2, b1, b0])  # roots r give points [0 : 1 : r]...
    # direction convention: zero of b0 t^2 + b1 t u + b2 u^2 at [t : u]
    if ctx.is_rational:
        res = find_roots(quad, allow_extension=False)
        if sum(m for _, m in res.roots) < 2 and not (
            b0.is_zero() and len(res.roots) >= 1
        ):
            if not b0.is_zero() or not res.roots:
                return nz.outcome(
                    "cone:conic-transverse", {"normalized": "partial"}
                )
        roots = [r for r, _ in res.roots]
    else:
        roots = [r for r, _ in nz.all_roots(quad)]
    ctx = nz.context
    one, zero = ctx.one(), ctx.zero()
    dirs = []
    if b0.is_zero():
        dirs.append((one, zero))
    for r in roots:
        dirs.append((r, one))
    if len(dirs) < 2:
        return nz.outcome("cone:conic-transverse", {"normalized": "partial"})
    p1 = (zero, dirs[0][0], dirs[0][1])
    p2 = (zero, dirs[1][0], dirs[1][1])
    std = (one, zero, zero)
    cols = (p1, std, p2)
    m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    if mat_det(m).is_zero():
        raise AssertionError("transverse points do not span with x-axis")
    nz.linear(m)
    rest = divide_exact(nz.f, TriPoly.variable(nz.context, 1))
    alpha = rest.coefficient((1, 0, 1))
    if alpha.is_zero():
        raise AssertionError("transverse normalization lost the conic")
    ai = alpha.inverse()
    gam = rest.coefficient((0, 1, 1))
    nz.shift(0, TriPoly.variable(nz.context, 1).scale(-(gam * ai)))
    rest = divide_exact(nz.f, TriPoly.variable(nz.context, 1))
    beta = rest.coefficient((1, 1, 0))
    nz.shift(2, TriPoly.variable(nz.context, 1).scale(-(beta * ai)))
    if set(nz.f.terms) != {(1, 1, 1), (0, 3, 0)}:
        raise AssertionError("conic-transverse normal form failed")
    return nz.outcome("cone:conic-transverse", {"normalized": "full"})


def _conic_rank(conic: TriPoly) -> int:
    """Rank of a ternary quadratic in characteristic 0."""
    ctx = conic.context
    half = ctx.from_int(2).inverse()

    def coeff(i, j):
        m = [0, 0, 0]
        m[i] += 1
        m[j] += 1
        c = conic.coefficient(tuple(m))
        return c if i == j else c * half

    rows = [[coeff(i, j) for j in range(3)] for i in range(3)]
    # Gaussian elimination rank
    rank = 0
    for col in range(3):
        piv = next((r for r in range(rank, 3) if not rows[r][col].is_zero()), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = rows[rank][col].inverse()
        rows[rank] = [c * inv for c in rows[rank]]
        for r in range(3):
            if r != rank and not rows[r][col].is_zero():
                f = rows[r][col]
                rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _conic_radical_point(conic: TriPoly) -> Line:
    """Singular point of a rank-2 conic in characteristic 0 (the common point
    of the two lines it splits into over the closure)."""
    ctx = conic.context
    half = ctx.from_int(2).inverse()

    def coeff(i, j):
        m = [0, 0, 0]
        m[i] += 1
        m[j] += 1
        c = conic.coefficient(tuple(m))
        return c if i == j else c * half

    rows = [[coeff(i, j) for j in range(3)] for i in range(3)]
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for col in range(3):
        piv = next((i for i in range(r, 3) if not mat[i][col].is_zero()), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [c * inv for c in mat[r]]
        for i in range(3):
            if i != r and not mat[i][col].is_zero():
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(3) if c not in pivots]
    if not free:
        raise ValueError("conic has full rank")
    fc = free[0]
    vec = [ctx.zero()] * 3
    vec[fc] = ctx.one()
    for row_i, pc in enumerate(pivots):
        vec[pc] = -mat[row_i][fc]
    return tuple(vec)


# ---------------------------------------------------------------------------
# irreducible cubics


def _sing_system(g: TriPoly):
    gens = [g] + [g.derivative(i) for i in range(3)]
    out = []
    for h in gens:
        if not h.is_zero():
            out.append({m: c for m, c in h.terms.items()})
    return out


def _is_smooth(nz: Normalizer) -> bool:
    gens = _sing_system(nz.f)
    return ideal_height_of(gens, 3, GroebnerBudget(max_basis=5000)) == 3


def _no_rational_lines(nz: Normalizer) -> NormalizationOutcome:
    if _is_smooth(nz):
        return nz.outcome("cone:smooth")
    points = _rational_singular_points(nz)
    if not points:
        # only conjugate triple-node configurations lack a rational singular
        # point once rational lines and smoothness are excluded
        return nz.outcome("cone:triangle", {"split": "conjugate lines"})
    P = points[0]
    _move_point_to_z(nz, P)
    c2 = [
        nz.f.coefficient((2, 0, 1)),
        nz.f.coefficient((1, 1, 1)),
        nz.f.coefficient((0, 2, 1)),
    ]
    if not (
        nz.f.coefficient((0, 0, 3)).is_zero()
        and nz.f.coefficient((1, 0, 2)).is_zero()
        and nz.f.coefficient((0, 1, 2)).is_zero()
    ):
        raise AssertionError("moved point is not singular")
    if all(c.is_zero() for c in c2):
        # multiplicity three: concurrent (conjugate) lines, already z-free
        if any(m[2] for m in nz.f.terms):
            raise AssertionError("triple point normalization left z-terms")
        return nz.outcome("cone:concurrent-lines", {"split": "conjugate lines"})
    return _double_point(nz, c2)


def _double_point(nz: Normalizer, c2) -> NormalizationOutcome:
    """Node or cusp of an irreducible cubic placed at [0:0:1]."""
    ctx = nz.context
    p = ctx.characteristic
    q0, q1, q2 = c2  # tangent cone q0 x^2 + q1 xy + q2 y^2 (times z)
    if p == 2:
        double = q1.is_zero()
    else:
        four = ctx.from_int(4)
        double = (q1 * q1 - four * q0 * q2).is_zero()
    if double:
        return _cusp(nz, q0, q1, q2)
    return _node(nz, q0, q1, q2)


def _cusp(nz: Normalizer, q0, q1, q2) -> NormalizationOutcome:
    ctx = nz.context
    p = ctx.characteristic
    one = ctx.one()
    # tangent cone is c (a x + b y)^2; send a x + b y to y
    if p == 2:
        a, b = q0.pth_root(), q2.pth_root()
    elif not q0.is_zero():
        two = ctx.from_int(2)
        a, b = one, q1 / (two * q0)
    else:
        a, b = ctx.zero(), one
    # map the double line to the y-axis: form written on (y, x) slots
    single_change(nz, (b, a), 1, 0)
    c = nz.f.coefficient((0, 2, 1))
    if c.is_zero():
        raise AssertionError("cusp tangent cone normalization failed")
    ci = c.inverse()
    h = nz.f.coefficient((1, 2, 0))
    i_ = nz.f.coefficient((0, 3, 0))
    addend = (
        TriPoly.variable(nz.context, 0).scale(-(h * ci))
        + TriPoly.variable(nz.context, 1).scale(-(i_ * ci))
    )
    nz.shift(2, addend)
    keys = set(nz.f.terms)
    if not keys <= {(0, 2, 1), (3, 0, 0), (2, 1, 0)}:
        raise AssertionError("cusp normal form failed")
    if nz.f.coefficient((3, 0, 0)).is_zero():
        raise AssertionError("cusp form lost its cube term")
    return nz.outcome("cone:cuspidal")


def _node(nz: Normalizer, q0, q1, q2) -> NormalizationOutcome:
    ctx = nz.context
    # tangent cone has two distinct directions; over Q they may be conjugate,
    # in which case the normalization stops here (the verdict is type-level)
    quad = UniPoly.make(ctx, [q2, q1, q0])
    if ctx.is_rational:
        res = find_roots(quad, allow_extension=False)
        roots = [r for r, _ in res.roots]
        if q0.is_zero():
            pass
        if sum(m for _, m in res.roots) + (1 if q0.is_zero() else 0) < 2:
            return nz.outcome("cone:nodal", {"normalized": "partial"})
    else:
        roots = [r for r, _ in nz.all_roots(quad)]
    ctx = nz.context
    one, zero = ctx.one(), ctx.zero()
    dirs = []
    if q0.is_zero():
        dirs.append((one, zero))
    for r in roots:
        dirs.append((r, one))
    # tangent lines: q0 x^2 + q1 xy + q2 y^2 = q0 (x - t1 y)(x - t2 y)-style;
    # direction (t, 1) corresponds to the line x - t y, i.e. form (1, -t)
    L1 = (one, -dirs[0][0]) if not dirs[0][1].is_zero() else (zero, one)
    L2 = (one, -dirs[1][0]) if not dirs[1][1].is_zero() else (zero, one)
    pair_change(nz, L1, L2, 0, 1)
    c = nz.f.coefficient((1, 1, 1))
    if c.is_zero():
        raise AssertionError("node tangent cone normalization failed")
    ci = c.inverse()
    d = nz.f.coefficient((2, 1, 0))
    h = nz.f.coefficient((1, 2, 0))
    addend = (
        TriPoly.variable(nz.context, 0).scale(-(d * ci))
        + TriPoly.variable(nz.context, 1).scale(-(h * ci))
    )
    nz.shift(2, addend)
    keys = set(nz.f.terms)
    if keys != {(1, 1, 1), (3, 0, 0), (0, 3, 0)}:
        raise AssertionError("node normal form failed")
    return nz.outcome("cone:nodal", {"normalized": "full"})


def _rational_singular_points(nz: Normalizer) -> List[Line]:
    """Common zeros of (g, g_x, g_y, g_z) in P^2 over the current field,
    via patchwise lex Groebner elimination.  Over the rationals only
    rational points are produced; finite fields are enlarged as needed."""
    while True:
        mark = nz.mark()
        points = _solve_patches(nz)
        if nz.mark() == mark:
            break
        # the field grew while splitting an elimination polynomial; rerun so
        # every patch is solved over the final field
    seen = set()
    out = []
    for P in points:
        norm = _normalize_line(P)
        key = tuple(c.sort_key() for c in norm)
        if key not in seen:
            seen.add(key)
            out.append(norm)
    out.sort(key=lambda P: tuple(c.sort_key() for c in P))
    return out


def _solve_patches(nz: Normalizer) -> List[Line]:
    ctx = nz.context
    g = nz.f
    gens_tri = [g] + [g.derivative(i) for i in range(3)]
    points: List[Line] = []
    one, zero = ctx.one(), ctx.zero()
    for patch in (2, 1, 0):
        keep = [i for i in range(3) if i != patch]
        gens = []
        for h in gens_tri:
            if h.is_zero():
                continue
            d = {}
            for m, c in h.terms.items():
                key = (m[keep[0]], m[keep[1]])
                d[key] = d[key] + c if key in d else c
            d = {k: v for k, v in d.items() if not v.is_zero()}
            if d:
                gens.append(d)
            else:
                gens = None  # a generator vanishes identically on the patch
                break
        if gens is None:
            raise AssertionError("cubic cone generator vanished on a patch")
        sols = _solve_bivariate(nz, gens)
        ctx = nz.context
        one, zero = ctx.one(), ctx.zero()
        for (a, b) in sols:
            P = [zero, zero, zero]
            P[keep[0]] = a
            P[keep[1]] = b
            P[patch] = one
            # restrict later patches to the locus missed by earlier ones
            if patch == 1 and not P[2].is_zero():
                continue
            if patch == 0 and not (P[1].is_zero() and P[2].is_zero()):
                continue
            points.append(tuple(P))
    return points


def _np_to_unipoly(d, var: int, ctx) -> UniPoly:
    deg = max(m[var] for m in d)
    coeffs = [ctx.zero()] * (deg + 1)
    for m, c in d.items():
        coeffs[m[var]] = coeffs[m[var]] + c
    return UniPoly.make(ctx, coeffs)


def _solve_bivariate(nz: Normalizer, gens) -> List[Tuple[FieldElement, FieldElement]]:
    """All common zeros of a zero-dimensional bivariate system (rational
    zeros only over Q)."""
    ctx = nz.context
    basis = groebner_basis(gens, order="lex", budget=GroebnerBudget(max_basis=2000))
    if not basis:
        return []
    key = ORDERS["lex"]
    if any(leading(b, key)[0] == (0, 0) for b in basis):
        return []
    # elimination: the basis elements free of the first variable
    elim = [b for b in basis if all(m[0] == 0 for m in b)]
    if not elim:
        # not zero-dimensional; cannot happen for the singular locus of a
        # reduced cubic, but fail loudly rather than guess
        raise AssertionError("singular locus is not zero-dimensional on a patch")
    u = None
    for b in elim:
        up = _np_to_unipoly(b, 1, ctx)
        u = up if u is None else u.gcd(up)
    if u.degree() < 1:
        return []
    if ctx.is_rational:
        roots_b = [r for r, _ in find_roots(u, allow_extension=False).roots]
    else:
        mark = nz.mark()
        roots_b = [r for r, _ in nz.all_roots(u)]
        if nz.mark() != mark:
            return []  # field grew; caller reruns all patches
    out = []
    for rb in roots_b:
        ctx2 = nz.context
        uni = None
        consts_ok = True
        for b in basis:
            # substitute the second variable
            coll = {}
            for m, c in b.items():
                val = c * (rb ** m[1])
                kk = m[0]
                coll[kk] = coll[kk] + val if kk in coll else val
            coeffs = [coll.get(i, ctx2.zero()) for i in range(max(coll) + 1)]
            up = UniPoly.make(ctx2, coeffs)
            if up.is_zero():
                continue
            if up.degree() == 0:
                consts_ok = False
                break
            uni = up if uni is None else uni.gcd(up)
        if not consts_ok:
            continue
        if uni is None:
            raise AssertionError("unconstrained first variable at a root")
        if uni.degree() < 1:
            continue
        if ctx2.is_rational:
            roots_a = [r for r, _ in find_roots(uni, allow_extension=False).roots]
        else:
            mark = nz.mark()
            roots_a = [r for r, _ in nz.all_roots(uni)]
            if nz.mark() != mark:
                return []
        for ra in roots_a:
            out.append((ra, rb))
    return out
