"""Normal forms of nonzero quadratic forms in x, y, z.

Away from characteristic 2 the form is diagonalized by congruence and the
diagonal entries scaled to 1 where the needed square roots exist (always over
a finite field, via a silent extension; over Q an unscalable entry is kept,
the rank labels are unaffected).  The rank-1 case is normalized to exactly
x^2 using a unit rescale of the whole polynomial, so the continuation of the
case tree never needs a root here.

In characteristic 2 the target forms are x^2, x^2 + x*y and x^2 + y*z,
reached through the radical of the alternating part.
"""

from __future__ import annotations

from typing import Optional

from ..fields import NeedsAlgebraicExtension
from ..poly import TriPoly
from .auto import Normalizer, NormalizationOutcome


def _coeff(f: TriPoly, i: int, j: int):
    m = [0, 0, 0]
    m[i] += 1
    m[j] += 1
    return f.coefficient(tuple(m))


def normalize_quadric(q: TriPoly, char: Optional[int] = None) -> NormalizationOutcome:
    """Bring a nonzero homogeneous quadratic to its normal form.

    Returns the outcome with branch label "quadric:rank{1,2,3}".
    """
    if q.is_zero() or not q.is_homogeneous(2):
        raise ValueError("input must be a nonzero homogeneous quadratic")
    p = q.context.characteristic
    if char is not None and char != p:
        raise ValueError("char argument disagrees with the coefficient field")
    nz = Normalizer(q)
    if p == 2:
        _normalize_char2(nz)
    else:
        _normalize_diagonal(nz)
    rank = _rank_label(nz)
    return nz.outcome(f"quadric:rank{rank}")


def _rank_label(nz: Normalizer) -> int:
    f = nz.f
    if f == TriPoly.monomial(nz.context, (2, 0, 0)):
        return 1
    p = nz.context.characteristic
    if p == 2:
        # x^2 + x*y has rank 2, x^2 + y*z rank 3 (rank of the bilinear part
        # plus the square part it does not absorb)
        if (1, 1, 0) in f.terms:
            return 2
        if (0, 1, 1) in f.terms:
            return 3
        return 1
    diag = [not _coeff(f, i, i).is_zero() for i in range(3)]
    return sum(diag)


# -- characteristic != 2 ----------------------------------------------------


def _normalize_diagonal(nz: Normalizer) -> None:
    ctx = nz.context
    half = ctx.from_int(2).inverse()
    for i in range(3):
        # ensure a pivot at position i if anything survives in the tail block
        if _coeff(nz.f, i, i).is_zero():
            j = next(
                (j for j in range(i + 1, 3) if not _coeff(nz.f, j, j).is_zero()),
                None,
            )
            if j is not None:
                nz.swap(i, j)
            else:
                pair = next(
                    (
                        (a, b)
                        for a in range(i, 3)
                        for b in range(a + 1, 3)
                        if not _coeff(nz.f, a, b).is_zero()
                    ),
                    None,
                )
                if pair is None:
                    break
                a, b = pair
                # x_b -> x_b + x_a creates a square at position a
                nz.shift(b, TriPoly.variable(ctx, a))
                if a != i:
                    nz.swap(i, a)
        pivot = _coeff(nz.f, i, i)
        if pivot.is_zero():
            break
        for j in range(3):
            if j == i:
                continue
            c = _coeff(nz.f, i, j)
            if c.is_zero():
                continue
            s = -(c * half * pivot.inverse())
            nz.shift(i, TriPoly.variable(ctx, j).scale(s))
    # move nonzero diagonal entries to the front
    for i in range(3):
        if _coeff(nz.f, i, i).is_zero():
            j = next(
                (j for j in range(i + 1, 3) if not _coeff(nz.f, j, j).is_zero()),
                None,
            )
            if j is not None:
                nz.swap(i, j)
    diag = [_coeff(nz.f, i, i) for i in range(3)]
    rank = sum(1 for d in diag if not d.is_zero())
    if rank == 1:
        # exact: rescale the whole polynomial instead of extracting a root
        nz.rescale(diag[0].inverse())
        return
    for i in range(3):
        d = _coeff(nz.f, i, i)
        if d.is_zero() or d.is_one():
            continue
        try:
            r = nz.nth_root_of(d.inverse(), 2)
        except NeedsAlgebraicExtension:
            continue  # rationals: keep the diagonal unit, rank still decides
        nz.scale(i, r)


# -- characteristic 2 --------------------------------------------------------


def _sqrt2(c):
    return c.pth_root()


def _normalize_char2(nz: Normalizer) -> None:
    ctx = nz.context
    one, zero = ctx.one(), ctx.zero()
    bil = [_coeff(nz.f, 0, 1), _coeff(nz.f, 0, 2), _coeff(nz.f, 1, 2)]
    if all(c.is_zero() for c in bil):
        # pure square: q = (sqrt(a) x + sqrt(b) y + sqrt(c) z)^2
        L = [_sqrt2(_coeff(nz.f, i, i)) for i in range(3)]
        from .auto import matrix_mapping_form_to_var

        nz.linear(matrix_mapping_form_to_var(L, 0, ctx))
        assert nz.f == TriPoly.monomial(ctx, (2, 0, 0))
        return
    # radical of the alternating part: kernel vector of the Gram matrix
    d, e, z_ = bil  # coefficients on xy, xz, yz
    # Gram rows: (0 d e), (d 0 z), (e z 0); kernel is 1-dimensional
    v = _bilinear_kernel(nz)
    basis = _complete_basis(nz, v)
    # substitution with columns (e1, e2, v)
    e1, e2 = basis
    cols = (e1, e2, v)
    m = tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))
    nz.linear(m)
    # now the bilinear part is c*xy and the square part is (rx+sy+tz)^2
    c = _coeff(nz.f, 0, 1)
    assert not c.is_zero() and _coeff(nz.f, 0, 2).is_zero() and _coeff(nz.f, 1, 2).is_zero()
    r = _sqrt2(_coeff(nz.f, 0, 0))
    s = _sqrt2(_coeff(nz.f, 1, 1))
    t = _sqrt2(_coeff(nz.f, 2, 2))
    if not t.is_zero():
        ti = t.inverse()
        nz.linear((
            (one, zero, zero),
            (zero, one, zero),
            (r * ti, s * ti, ti),
        ))
        # q = c*xy + z^2: swap to put the square on x, then unit-scale
        nz.swap(0, 2)
        c = _coeff(nz.f, 1, 2)
        nz.scale(1, c.inverse())
        assert nz.f == TriPoly.from_int_terms(ctx, [((2, 0, 0), 1), ((0, 1, 1), 1)])
        return
    if r.is_zero() and s.is_zero():
        nz.scale(0, c.inverse())
        # q = xy; y -> x + y turns it into x^2 + x*y
        nz.linear(((one, zero, zero), (one, one, zero), (zero, zero, one)))
        assert nz.f == TriPoly.from_int_terms(ctx, [((2, 0, 0), 1), ((1, 1, 0), 1)])
        return
    if r.is_zero():
        nz.swap(0, 1)
        r, s = s, r
        c = _coeff(nz.f, 0, 1)
    # q = c*xy + (rx+sy)^2 with r != 0: send rx+sy -> x
    ri = r.inverse()
    nz.linear(((ri, s * ri, zero), (zero, one, zero), (zero, zero, one)))
    # q = x^2 + (c/r) xy + (cs/r) y^2; scale y to make the xy coefficient 1
    cxy = _coeff(nz.f, 0, 1)
    nz.scale(1, cxy.inverse())
    v2 = _coeff(nz.f, 1, 1)
    if not v2.is_zero():
        # kill the y^2 term with x -> x + w y, w^2 + w + v2 = 0
        from ..unipoly import UniPoly

        w = nz.root_of(UniPoly.make(nz.context, [v2, nz.context.one(), nz.context.one()]))
        nz.shift(0, TriPoly.variable(nz.context, 1).scale(w))
    assert nz.f == TriPoly.from_int_terms(nz.context, [((2, 0, 0), 1), ((1, 1, 0), 1)])


def _bilinear_kernel(nz: Normalizer):
    """Kernel vector of the (rank-2) alternating Gram matrix in char 2."""
    ctx = nz.context
    d = _coeff(nz.f, 0, 1)
    e = _coeff(nz.f, 0, 2)
    z = _coeff(nz.f, 1, 2)
    zero = ctx.zero()
    rows = [(zero, d, e), (d, zero, z), (e, z, zero)]
    # Gaussian elimination for the kernel of a 3x3 matrix
    mat = [list(r) for r in rows]
    pivots = []
    col = 0
    r = 0
    for col in range(3):
        pr = next((i for i in range(r, 3) if not mat[i][col].is_zero()), None)
        if pr is None:
            continue
        mat[r], mat[pr] = mat[pr], mat[r]
        inv = mat[r][col].inverse()
        mat[r] = [c * inv for c in mat[r]]
        for i in range(3):
            if i != r and not mat[i][col].is_zero():
                fac = mat[i][col]
                mat[i] = [a - fac * b for a, b in zip(mat[i], mat[r])]
        pivots.append(col)
        r += 1
    free = [c for c in range(3) if c not in pivots]
    if not free:
        raise AssertionError("alternating 3x3 matrix cannot have full rank")
    fc = free[0]
    vec = [zero, zero, zero]
    vec[fc] = ctx.one()
    for row_i, pc in enumerate(pivots):
        vec[pc] = -mat[row_i][fc]
    return tuple(vec)


def _complete_basis(nz: Normalizer, v):
    """Two standard basis vectors completing v to a basis, in scan order."""
    ctx = nz.context
    from .auto import mat_det

    one, zero = ctx.one(), ctx.zero()
    std = [
        (one, zero, zero),
        (zero, one, zero),
        (zero, zero, one),
    ]
    for a in range(3):
        for b in range(a + 1, 3):
            m = (std[a], std[b], v)
            if not mat_det(m).is_zero():
                return std[a], std[b]
    raise AssertionError("kernel vector is zero")
