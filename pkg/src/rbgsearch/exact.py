"""Exact integer/rational linear algebra helpers.

Everything here is small-matrix work on exact numbers: fraction-free
determinants, inertia of symmetric forms, Lagrange interpolation for
polynomial determinants, and Smith normal form for homology checks.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentPoly


def int_det(M):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(map(int, row)) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def sym_signature(M, already_symmetric=False):
    """Signature of a symmetric integer/rational matrix, exact.

    Uses symmetric Gaussian elimination over rationals with the standard
    hyperbolic-pair handling for zero diagonals.
    """
    n = len(M)
    if n == 0:
        return 0
    S = [[Fraction(M[i][j]) for j in range(n)] for i in range(n)]
    if not already_symmetric:
        for i in range(n):
            for j in range(n):
                if S[i][j] != S[j][i]:
                    raise ValueError("matrix is not symmetric")
    sig = 0
    live = list(range(n))
    while live:
        piv = next((i for i in live if S[i][i] != 0), None)
        if piv is None:
            off = next(((i, j) for i in live for j in live
                        if i < j and S[i][j] != 0), None)
            if off is None:
                break  # remaining block is zero: contributes nothing
            i, j = off
            # symmetric basis change x_i -> x_i + x_j makes S[i][i] = 2*S[i][j]
            for r in range(n):
                S[i][r] += S[j][r]
            for r in range(n):
                S[r][i] += S[r][j]
            continue
        d = S[piv][piv]
        sig += 1 if d > 0 else -1
        live.remove(piv)
        for r in live:
            if S[r][piv] != 0:
                f = S[r][piv] / d
                for c in live:
                    S[r][c] -= f * S[piv][c]
                S[r][piv] = Fraction(0)
        for r in live:
            S[piv][r] = Fraction(0)
    return sig


def poly_det_pair(A, B):
    """det(t*A - B) for integer matrices, as a LaurentPoly in t.

    Computed by evaluation at n+1 integers and Lagrange interpolation.
    """
    n = len(A)
    if n == 0:
        return LaurentPoly.one()
    pts = []
    vals = []
    t0 = -(n // 2)
    for k in range(n + 1):
        t = t0 + k
        M = [[t * A[i][j] - B[i][j] for j in range(n)] for i in range(n)]
        pts.append(t)
        vals.append(int_det(M))
    # Lagrange interpolation with exact rationals
    coeffs = [Fraction(0)] * (n + 1)
    for i, (xi, yi) in enumerate(zip(pts, vals)):
        # basis poly prod_{j!=i} (t - xj)/(xi - xj)
        denom = 1
        for j, xj in enumerate(pts):
            if j != i:
                denom *= (xi - xj)
        basis = [Fraction(1)]
        for j, xj in enumerate(pts):
            if j == i:
                continue
            new = [Fraction(0)] * (len(basis) + 1)
            for k, c in enumerate(basis):
                new[k + 1] += c
                new[k] -= c * xj
            basis = new
        w = Fraction(yi, denom)
        for k, c in enumerate(basis):
            coeffs[k] += c * w
    out = {}
    for k, c in enumerate(coeffs):
        if c != 0:
            if c.denominator != 1:
                raise ArithmeticError("non-integer coefficient in det interpolation")
            out[k] = int(c)
    return LaurentPoly(out)


def smith_normal_form(M):
    """Diagonal of the Smith normal form of an integer matrix."""
    A = [list(map(int, row)) for row in M]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    r = c = 0
    while r < rows and c < cols:
        # find pivot with smallest nonzero absolute value
        piv = None
        for i in range(r, rows):
            for j in range(c, cols):
                if A[i][j] != 0 and (piv is None
                                     or abs(A[i][j]) < abs(A[piv[0]][piv[1]])):
                    piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        A[r], A[i0] = A[i0], A[r]
        for row in A:
            row[c], row[j0] = row[j0], row[c]
        # clear row and column
        dirty = False
        for i in range(rows):
            if i != r and A[i][c] != 0:
                q = A[i][c] // A[r][c]
                for j in range(cols):
                    A[i][j] -= q * A[r][j]
                if A[i][c] != 0:
                    dirty = True
        for j in range(cols):
            if j != c and A[r][j] != 0:
                q = A[r][j] // A[r][c]
                for i in range(rows):
                    A[i][j] -= q * A[i][c]
                if A[r][j] != 0:
                    dirty = True
        if dirty:
            continue
        # ensure divisibility of the remaining block
        g = abs(A[r][c])
        bad = None
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                if A[i][j] % g != 0:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            for j in range(cols):
                A[r][j] += A[bad][j]
            continue
        diag.append(g)
        r += 1
        c += 1
    return diag
