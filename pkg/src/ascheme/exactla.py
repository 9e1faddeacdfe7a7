"""Exact linear algebra over the rationals.

Everything here works on small dense systems (dimensions bounded by the
square of the class count), so plain Fraction Gaussian elimination is fast
enough and keeps every decision tolerance-free.  Matrix powers are taken
with Python integers, which never overflow.
"""

from fractions import Fraction


def _echelon_insert(basis, vec):
    """Reduce vec against an echelon basis; insert if independent.

    basis is a dict pivot_index -> row (list of Fraction, normalized so the
    pivot entry is 1).  Returns True when vec was independent and inserted.
    """
    v = [Fraction(x) for x in vec]
    for piv, row in basis.items():
        c = v[piv]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    for i, a in enumerate(v):
        if a:
            inv = Fraction(1) / a
            basis[i] = [x * inv for x in v]
            return True
    return False


def rank(vectors):
    """Rank of a list of equal-length rational vectors."""
    basis = {}
    r = 0
    for vec in vectors:
        if _echelon_insert(basis, vec):
            r += 1
    return r


def int_matmul(A, B):
    """Product of two square matrices given as lists of lists of ints."""
    n = len(A)
    Bt = list(zip(*B))
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def matrix_powers(B, tmax):
    """[B^0, B^1, ..., B^tmax] with exact integer arithmetic."""
    n = len(B)
    powers = [[[1 if i == j else 0 for j in range(n)] for i in range(n)]]
    for _ in range(tmax):
        powers.append(int_matmul(powers[-1], B))
    return powers


def minpoly_degree(B):
    """Degree of the minimal polynomial of an integer matrix over Q.

    Adds flattened powers I, B, B^2, ... to an echelon basis until one
    becomes dependent.  For a diagonalizable matrix this equals the number
    of distinct eigenvalues.
    """
    n = len(B)
    basis = {}
    cur = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    deg = 0
    while True:
        flat = [x for row in cur for x in row]
        if not _echelon_insert(basis, flat):
            return deg
        deg += 1
        if deg > n:  # cannot happen: minpoly degree <= n
            raise AssertionError("minimal polynomial degree exceeded dimension")
        cur = int_matmul(cur, B)


def solve_exact(A, b):
    """One rational solution of A x = b, or None when inconsistent.

    A is a list of rows.  Free variables, if any, are set to zero; for the
    systems in this package the solution is unique whenever it exists.
    """
    m = len(A)
    if m == 0:
        return []
    k = len(A[0])
    aug = [[Fraction(x) for x in row] + [Fraction(bv)] for row, bv in zip(A, b)]
    pivots = []
    r = 0
    for c in range(k):
        sel = None
        for i in range(r, m):
            if aug[i][c]:
                sel = i
                break
        if sel is None:
            continue
        aug[r], aug[sel] = aug[sel], aug[r]
        inv = Fraction(1) / aug[r][c]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if aug[i][k]:
            return None
    x = [Fraction(0)] * k
    for row_idx, c in enumerate(pivots):
        x[c] = aug[row_idx][k]
    return x
