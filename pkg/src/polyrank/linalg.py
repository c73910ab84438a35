"""Exact integer and rational linear algebra.

Everything here runs on plain Python ints or fractions.Fraction; no floats
anywhere.  Matrices are lists (or tuples) of row sequences.  These routines
back the polytope code, so correctness beats speed, but the sizes involved
are small (dimension <= 12 or so) and pure Python is fine.
"""

from fractions import Fraction
from math import gcd


def content(vec):
    """gcd of the entries, always >= 0."""
    g = 0
    for x in vec:
        g = gcd(g, x)
    return g


def primitive(vec):
    """Divide an integer vector by its content.  Zero vectors pass through."""
    g = content(vec)
    if g <= 1:
        return tuple(vec)
    return tuple(x // g for x in vec)


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def mat_mul(a, b):
    n, k = len(a), len(b)
    m = len(b[0]) if k else 0
    out = [[0] * m for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for t in range(k):
            x = ai[t]
            if x:
                bt = b[t]
                for j in range(m):
                    oi[j] += x * bt[j]
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_dot(u, v):
    return sum(x * y for x, y in zip(u, v))


def vec_sub(u, v):
    return tuple(x - y for x, y in zip(u, v))


def vec_add(u, v):
    return tuple(x + y for x, y in zip(u, v))


def matrix_rank(rows):
    """Rank over the rationals, by fraction-free Gaussian elimination."""
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    cols = len(m[0])
    rank = 0
    row = 0
    for col in range(cols):
        piv = None
        for i in range(row, len(m)):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        pv = m[row][col]
        for i in range(row + 1, len(m)):
            if m[i][col]:
                f = m[i][col]
                m[i] = [pv * a - f * b for a, b in zip(m[i], m[row])]
        rank += 1
        row += 1
        if row == len(m):
            break
    return rank


def det(matrix):
    """Determinant of a square integer matrix (Bareiss algorithm)."""
    n = len(matrix)
    if n == 0:
        return 1
    m = [list(r) for r in matrix]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = None
            for i in range(k + 1, n):
                if m[i][k]:
                    swap = i
                    break
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def solve_square(a, b):
    """Solve a square rational system exactly.

    Returns a list of Fractions, or None when the matrix is singular.
    """
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [m[i][n] for i in range(n)]


def solve_rectangular(a, b):
    """One exact solution of a (possibly non-square) consistent system.

    Returns a list of Fractions or None when the system is inconsistent.
    Free variables are set to zero.
    """
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    pivots = []
    r = 0
    for col in range(cols):
        piv = None
        for i in range(r, rows):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        pv = m[r][col]
        m[r] = [x / pv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
        if r == rows:
            break
    for i in range(r, rows):
        if m[i][cols]:
            return None
    sol = [Fraction(0)] * cols
    for i, col in enumerate(pivots):
        sol[col] = m[i][cols]
    return sol


def invert_fraction(a):
    """Exact inverse of a square matrix, as Fractions.  None when singular."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for col in range(n):
        piv = None
        for i in range(col, n):
            if m[i][col]:
                piv = i
                break
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        pv = m[col][col]
        m[col] = [x / pv for x in m[col]]
        for i in range(n):
            if i != col and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[col])]
    return [row[n:] for row in m]


def invert_unimodular(u):
    """Integer inverse of a unimodular integer matrix."""
    inv = invert_fraction(u)
    if inv is None:
        raise ValueError("matrix is singular")
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return out


def _row_op_subtract(m, u, i, j, q):
    # row_i -= q * row_j in both the working matrix and the transform
    if q:
        m[i] = [a - q * b for a, b in zip(m[i], m[j])]
        u[i] = [a - q * b for a, b in zip(u[i], u[j])]


def hnf_row(matrix):
    """Row-style Hermite normal form.

    Returns (H, U) with H = U @ matrix, U unimodular.  H is in row echelon
    shape with strictly increasing pivot columns, positive pivots, and the
    entries above each pivot reduced into [0, pivot).
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    h = [list(r) for r in matrix]
    u = identity_matrix(rows)
    r = 0
    for col in range(cols):
        if r == rows:
            break
        while True:
            nz = [i for i in range(r, rows) if h[i][col]]
            if not nz:
                break
            i0 = min(nz, key=lambda i: (abs(h[i][col]), i))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            clean = True
            for i in range(r + 1, rows):
                if h[i][col]:
                    q = h[i][col] // h[r][col]
                    _row_op_subtract(h, u, i, r, q)
                    if h[i][col]:
                        clean = False
            if clean:
                break
        if h[r][col]:
            if h[r][col] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            for i in range(r):
                q = h[i][col] // h[r][col]
                _row_op_subtract(h, u, i, r, q)
            r += 1
    return h, u


def snf(matrix):
    """Smith normal form with transforms.

    Returns (s, u, v) with u @ matrix @ v = s, u and v unimodular and s
    diagonal with each diagonal entry dividing the next.
    """
    rows = len(matrix)
    cols = len(matrix[0]) if rows else 0
    s = [list(r) for r in matrix]
    u = identity_matrix(rows)
    v = identity_matrix(cols)

    def col_op_subtract(j, k, q):
        if q:
            for i in range(rows):
                s[i][j] -= q * s[i][k]
            for i in range(cols):
                v[i][j] -= q * v[i][k]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for row in s:
            row[i], row[j] = row[j], row[i]
        for row in v:
            row[i], row[j] = row[j], row[i]

    t = 0
    while t < min(rows, cols):
        piv = None
        for i in range(t, rows):
            for j in range(t, cols):
                if s[i][j]:
                    if piv is None or abs(s[i][j]) < abs(s[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        swap_rows(t, piv[0])
        swap_cols(t, piv[1])
        while True:
            again = False
            for i in range(t + 1, rows):
                if s[i][t]:
                    q = s[i][t] // s[t][t]
                    _row_op_subtract(s, u, i, t, q)
                    if s[i][t]:
                        swap_rows(t, i)
                        again = True
            if again:
                continue
            for j in range(t + 1, cols):
                if s[t][j]:
                    q = s[t][j] // s[t][t]
                    col_op_subtract(j, t, q)
                    if s[t][j]:
                        swap_cols(t, j)
                        again = True
            if not again:
                break
        # pivot must divide every entry in the remaining block, else fold
        # the offending row in and reduce again
        a = s[t][t]
        offender = None
        for i in range(t + 1, rows):
            for j in range(t + 1, cols):
                if s[i][j] % a != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            _row_op_subtract(s, u, t, offender, -1)
            continue
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def saturated_row_basis(rows):
    """Basis of (Q-span of the rows) intersected with Z^n.

    The result is the row-HNF basis of the saturation, so it is canonical.
    Returns a list of integer row tuples (possibly empty).
    """
    rows = [r for r in rows if any(r)]
    if not rows:
        return []
    cols = len(rows[0])
    s, u, v = snf(rows)
    r = sum(1 for i in range(min(len(rows), cols)) if s[i][i])
    vinv = invert_unimodular(v)
    basis = [vinv[i] for i in range(r)]
    h, _ = hnf_row(basis)
    return [tuple(row) for row in h[:r]]


def extend_to_unimodular(basis, dim):
    """Extend a saturated lattice basis to a basis of Z^dim.

    `basis` must consist of r independent rows spanning a saturated sublattice
    (i.e. the Q-span meets Z^dim exactly in their Z-span).  Returns a dim x dim
    unimodular matrix whose first r rows are `basis`.
    """
    r = len(basis)
    if r == 0:
        return identity_matrix(dim)
    s, u, v = snf([list(b) for b in basis])
    for i in range(r):
        if abs(s[i][i]) != 1:
            raise ValueError("basis does not span a saturated sublattice")
    vinv = invert_unimodular(v)
    full = [list(b) for b in basis] + [vinv[i] for i in range(r, dim)]
    if abs(det(full)) != 1:
        raise ValueError("failed to extend basis to a unimodular matrix")
    return full
