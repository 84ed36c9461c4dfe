"""Small exact linear algebra helpers.

Row reduction and null spaces work over any of our field-like scalars
(CycloScalar entries, all in one field).  Determinants and adjugates
are also provided over the Laurent ring, where division is not
available, via minor expansion.
"""

from __future__ import annotations

from .errors import DomainError


def rref(rows, zero):
    """Reduced row echelon form.

    ``rows`` is a list of equal-length lists of field scalars; ``zero``
    the field's zero (used to pad and to test emptiness).  Returns
    (reduced rows with zero rows dropped, pivot column list).
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if not rows[i][col].is_zero()),
                     None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][col].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and not rows[i][col].is_zero():
                f = rows[i][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(rows, zero):
    return len(rref(rows, zero)[0])


def null_space(rows, ncols, one, zero):
    """Basis of the right null space of the matrix given by ``rows``.

    Rows may be empty, in which case the identity basis is returned.
    """
    reduced, pivots = rref(rows, zero)
    pivot_set = set(pivots)
    free_cols = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for free in free_cols:
        vec = [zero] * ncols
        vec[free] = one
        for r, pc in enumerate(pivots):
            vec[pc] = -reduced[r][free]
        basis.append(vec)
    return basis


def solve(rows, rhs, ncols, zero):
    """One solution of A x = b over a field, or None if inconsistent.

    Free variables are set to zero.
    """
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    reduced, pivots = rref(aug, zero)
    sol = [zero] * ncols
    for r, pc in enumerate(pivots):
        if pc == ncols:  # pivot in the constant column: inconsistent
            return None
        sol[pc] = reduced[r][ncols]
    # verify (cheap, and catches free-variable interactions)
    for row, b in zip(rows, rhs):
        acc = zero
        for a, x in zip(row, sol):
            acc = acc + a * x
        if not (acc - b).is_zero():
            return None
    return sol


def det(matrix, one):
    """Determinant over a commutative ring by memoized minor expansion."""
    n = len(matrix)
    if n == 0:
        return one
    memo = {}

    def minor(row, mask):
        if mask == 0:
            return one
        key = mask
        got = memo.get(key)
        if got is not None:
            return got
        acc = None
        sign = 1
        for col in range(n):
            bit = 1 << col
            if not mask & bit:
                continue
            entry = matrix[row][col]
            if not entry.is_zero():
                piece = entry * minor(row + 1, mask & ~bit)
                if sign < 0:
                    piece = -piece
                acc = piece if acc is None else acc + piece
            sign = -sign
        if acc is None:
            acc = one - one
        memo[key] = acc
        return acc

    return minor(0, (1 << n) - 1)


def adjugate(matrix, one):
    """Adjugate over a commutative ring: adj(A) A = det(A) I."""
    n = len(matrix)
    adj = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[matrix[r][c] for c in range(n) if c != j]
                   for r in range(n) if r != i]
            cof = det(sub, one)
            if (i + j) % 2:
                cof = -cof
            adj[j][i] = cof
    return adj


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = []
    for i in range(n):
        row = []
        for j in range(m):
            acc = a[i][0] * b[0][j]
            for s in range(1, k):
                acc = acc + a[i][s] * b[s][j]
            row.append(acc)
        out.append(row)
    return out


def mat_inverse_laurent(matrix, one):
    """Inverse of a Laurent-entry matrix whose determinant is a unit."""
    d = det(matrix, one)
    if not d.is_unit():
        raise DomainError("matrix determinant %s is not a unit" % d)
    dinv = d.inverse()
    adj = adjugate(matrix, one)
    return [[entry * dinv for entry in row] for row in adj]
