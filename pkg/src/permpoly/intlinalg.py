"""Integer lattice computations: Hermite and Smith normal forms.

Row style throughout: the rows of a matrix generate a sublattice of
Z^n, and hermite_form returns the canonical basis of that lattice
(positive pivots, entries above each pivot reduced into [0, pivot)).
Smith divisors d_1 | d_2 | ... are the elementary divisors; their
product is the index of the row lattice inside its saturation.
"""

from __future__ import annotations


def _check_int_rows(rows):
    return [[int(x) for x in row] for row in rows]


def hermite_form(rows):
    """Canonical row-style Hermite normal form; zero rows are dropped."""
    m = _check_int_rows(rows)
    if not m:
        return []
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        # chain gcd row operations to leave a single nonzero entry in
        # column c at row r
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, len(m)):
            while m[i][c]:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return [row for row in m[:r] if any(row)]


def hnf_snf(rows):
    """(hermite_form, smith_divisors) of an integer matrix."""
    return hermite_form(rows), smith_divisors(rows)


def integer_kernel(rows):
    """Basis of {x in Z^ncols : rows @ x = 0}; the kernel lattice is saturated.

    Found by row-reducing [rows^T | I]: rows whose left block vanishes
    carry kernel vectors in their right block.
    """
    m = _check_int_rows(rows)
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    aug = [[m[i][j] for i in range(nrows)] + [1 if k == j else 0 for k in range(ncols)]
           for j in range(ncols)]
    reduced = _hermite_left_block(aug, nrows)
    out = []
    for row in reduced:
        if any(row[:nrows]):
            continue
        vec = row[nrows:]
        if any(vec):
            out.append(vec)
    return hermite_form(out)


def _hermite_left_block(m, ncols):
    r = 0
    for c in range(ncols):
        pivot_row = None
        for i in range(r, len(m)):
            if m[i][c]:
                pivot_row = i
                break
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        for i in range(r + 1, len(m)):
            while m[i][c]:
                q = m[r][c] // m[i][c]
                m[r] = [a - q * b for a, b in zip(m[r], m[i])]
                m[r], m[i] = m[i], m[r]
        if m[r][c] < 0:
            m[r] = [-a for a in m[r]]
        for i in range(r):
            q = m[i][c] // m[r][c]
            if q:
                m[i] = [a - q * b for a, b in zip(m[i], m[r])]
        r += 1
        if r == len(m):
            break
    return m


def saturation(rows):
    """Basis of span_Q(rows) intersected with Z^ncols, via the double orthogonal complement."""
    m = _check_int_rows(rows)
    if not m or not any(any(row) for row in m):
        return []
    ncols = len(m[0])
    k = integer_kernel(m)
    if not k:
        # full rank: the saturation is all of Z^ncols restricted to the
        # row space, i.e. Z^ncols itself
        return [[1 if j == i else 0 for j in range(ncols)] for i in range(ncols)]
    return integer_kernel(k)


def smith_divisors(rows):
    """Elementary divisors d_1 | d_2 | ... | d_r (positive, rank many)."""
    m = [row[:] for row in _check_int_rows(rows)]
    m = [row for row in m if any(row)]
    if not m:
        return []
    nrows, ncols = len(m), len(m[0])
    divisors = []
    top = 0
    left = 0
    while top < nrows and left < ncols:
        pr = pc = None
        best = None
        for i in range(top, nrows):
            for j in range(left, ncols):
                a = abs(m[i][j])
                if a and (best is None or a < best):
                    best, pr, pc = a, i, j
        if best is None:
            break
        m[top], m[pr] = m[pr], m[top]
        for row in m:
            row[left], row[pc] = row[pc], row[left]
        while True:
            # clear column `left`
            dirty = False
            for i in range(top + 1, nrows):
                if m[i][left]:
                    q = m[i][left] // m[top][left]
                    if q:
                        m[i] = [a - q * b for a, b in zip(m[i], m[top])]
                    if m[i][left]:
                        m[top], m[i] = m[i], m[top]
                        dirty = True
            # clear row `top`
            for j in range(left + 1, ncols):
                if m[top][j]:
                    q = m[top][j] // m[top][left]
                    if q:
                        for row in m:
                            row[j] -= q * row[left]
                    if m[top][j]:
                        for row in m:
                            row[left], row[j] = row[j], row[left]
                        dirty = True
            if not dirty:
                break
        pivot = abs(m[top][left])
        # enforce divisibility: fold any non-multiple into the working row
        offender = None
        for i in range(top + 1, nrows):
            for j in range(left + 1, ncols):
                if m[i][j] % pivot:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            m[top] = [a + b for a, b in zip(m[top], m[offender])]
            continue
        divisors.append(pivot)
        top += 1
        left += 1
    return divisors


def solve_in_lattice(hermite_rows, target):
    """Integer coefficients c with c @ hermite_rows == target, else None.

    hermite_rows must be a Hermite basis (echelon, positive pivots).
    """
    if not hermite_rows:
        return [] if not any(target) else None
    ncols = len(hermite_rows[0])
    pivots = []
    for row in hermite_rows:
        for j in range(ncols):
            if row[j]:
                pivots.append(j)
                break
    residue = [int(x) for x in target]
    coeffs = []
    for row, p in zip(hermite_rows, pivots):
        if residue[p] % row[p]:
            return None
        q = residue[p] // row[p]
        coeffs.append(q)
        if q:
            residue = [a - q * b for a, b in zip(residue, row)]
    if any(residue):
        return None
    return coeffs


def determinant(rows):
    """Exact determinant of a square integer matrix (fraction-free Bareiss)."""
    m = [row[:] for row in _check_int_rows(rows)]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant needs a square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if not m[k][k]:
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
