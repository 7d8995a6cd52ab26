"""Exact linear programming over the rationals (tableau simplex, Bland's rule).

Two entry points:

* strict_separation_lp decides whether a functional can vanish on a set
  of equality rows while staying strictly positive on every strict row;
  it maximizes a slack under box bounds so feasibility is witnessed by a
  positive optimum.
* maximize is a generic two-phase solver used for membership
  certificates.

Bland's anti-cycling pivot (lowest eligible index on entry and exit)
keeps every run finite and deterministic.
"""

from __future__ import annotations

from fractions import Fraction

from .linalg import F0, F1, dot


class LPError(Exception):
    pass


def _pivot(tab, z, basis, r, c):
    row = tab[r]
    inv = F1 / row[c]
    if inv != 1:
        tab[r] = row = [x * inv for x in row]
    width = len(row)
    for i, other in enumerate(tab):
        if i != r and other[c]:
            f = other[c]
            tab[i] = [a - f * b if b else a for a, b in zip(other, row)]
    if z[c]:
        f = z[c]
        for j in range(width):
            if row[j]:
                z[j] -= f * row[j]
    basis[r] = c


def _bland_max(tab, z, basis):
    """Maximize with reduced-cost row z (last entry = -objective value)."""
    width = len(z) - 1
    while True:
        enter = None
        for j in range(width):
            if z[j] > 0:
                enter = j
                break
        if enter is None:
            return
        leave = None
        best = None
        for i, row in enumerate(tab):
            a = row[enter]
            if a > 0:
                ratio = row[-1] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            raise LPError("unbounded objective")
        _pivot(tab, z, basis, leave, enter)


def _reduced_costs(tab, basis, obj, width):
    z = list(obj) + [F0] * (width - len(obj)) + [F0]
    for i, b in enumerate(basis):
        if z[b]:
            f = z[b]
            row = tab[i]
            for j in range(width + 1):
                if row[j]:
                    z[j] -= f * row[j]
    return z


def _drive_out_artificials(tab, basis, n_real):
    """Pivot zero-valued artificial basics onto real columns; drop dead rows."""
    i = 0
    while i < len(tab):
        if basis[i] >= n_real:
            col = None
            for j in range(n_real):
                if tab[i][j]:
                    col = j
                    break
            if col is None:
                if tab[i][-1]:
                    raise LPError("inconsistent artificial row")
                del tab[i]
                del basis[i]
                continue
            zdummy = [F0] * (len(tab[i]))
            _pivot(tab, zdummy, basis, i, col)
        i += 1
    for i in range(len(tab)):
        tab[i] = tab[i][:n_real] + [tab[i][-1]]


def maximize(eq_rows, rhs, obj):
    """max obj . x subject to eq_rows @ x = rhs, x >= 0.

    Returns (value, x) or None when infeasible.  Raises LPError when the
    objective is unbounded.
    """
    m = len(eq_rows)
    n = len(obj)
    tab = []
    basis = []
    for i in range(m):
        row = [Fraction(v) for v in eq_rows[i]]
        b = Fraction(rhs[i])
        if b < 0:
            row = [-v for v in row]
            b = -b
        art = [F1 if k == i else F0 for k in range(m)]
        tab.append(row + art + [b])
        basis.append(n + i)
    width = n + m
    phase1 = [F0] * n + [Fraction(-1)] * m
    z = _reduced_costs(tab, basis, phase1, width)
    _bland_max(tab, z, basis)
    if z[-1] != 0:
        return None
    _drive_out_artificials(tab, basis, n)
    z = _reduced_costs(tab, basis, [Fraction(v) for v in obj], n)
    _bland_max(tab, z, basis)
    x = [F0] * n
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    return -z[-1], x


def strict_separation_lp(equalities, strict_rows, ncols=None):
    """Decide existence of y with E @ y = 0 and S @ y > 0 componentwise.

    y = (c_1..c_d, beta) is a functional plus offset; the solver
    maximizes a shared slack eps subject to S @ y >= eps, box bounds
    -1 <= c_i <= 1 and eps <= 1.  Separation exists iff the optimum is
    positive; the witness y is returned alongside.

    Returns (feasible, witness, eps).
    """
    if ncols is None:
        if equalities:
            ncols = len(equalities[0])
        elif strict_rows:
            ncols = len(strict_rows[0])
        else:
            raise LPError("cannot infer column count")
    d = ncols - 1  # functional coordinates; last column is the offset
    E = [[Fraction(v) for v in row] for row in equalities]
    S = [[Fraction(v) for v in row] for row in strict_rows]
    for row in E + S:
        if len(row) != ncols:
            raise LPError("ragged constraint rows")

    # columns: a_i, b_i (c_i = a_i - b_i), p, q (beta = p - q), eps,
    # then slacks: t_r (strict), w_i (a_i <= 1), u_i (b_i <= 1), v (eps <= 1)
    na, nb = d, d
    ip, iq = 2 * d, 2 * d + 1
    ie = 2 * d + 2
    it0 = ie + 1
    iw0 = it0 + len(S)
    iu0 = iw0 + d
    iv = iu0 + d
    n_real = iv + 1
    n_art = len(E)
    width = n_real + n_art

    tab = []
    basis = []

    def blank():
        return [F0] * (width + 1)

    for k, row in enumerate(E):
        t = blank()
        for i in range(d):
            t[i] = row[i]
            t[nb + i] = -row[i]
        t[ip] = row[d]
        t[iq] = -row[d]
        t[n_real + k] = F1
        tab.append(t)
        basis.append(n_real + k)
    for r, row in enumerate(S):
        t = blank()
        for i in range(d):
            t[i] = -row[i]
            t[nb + i] = row[i]
        t[ip] = -row[d]
        t[iq] = row[d]
        t[ie] = F1
        t[it0 + r] = F1
        tab.append(t)
        basis.append(it0 + r)
    for i in range(d):
        t = blank()
        t[i] = F1
        t[iw0 + i] = F1
        t[-1] = F1
        tab.append(t)
        basis.append(iw0 + i)
    for i in range(d):
        t = blank()
        t[nb + i] = F1
        t[iu0 + i] = F1
        t[-1] = F1
        tab.append(t)
        basis.append(iu0 + i)
    t = blank()
    t[ie] = F1
    t[iv] = F1
    t[-1] = F1
    tab.append(t)
    basis.append(iv)

    _drive_out_artificials(tab, basis, n_real)
    obj = [F0] * n_real
    obj[ie] = F1
    z = _reduced_costs(tab, basis, obj, n_real)
    _bland_max(tab, z, basis)

    x = [F0] * n_real
    for i, b in enumerate(basis):
        x[b] = tab[i][-1]
    witness = tuple(x[i] - x[nb + i] for i in range(d)) + (x[ip] - x[iq],)
    eps = x[ie]
    feasible = eps > 0
    # exactness guard: the witness must satisfy what the tableau claims
    for row in E:
        if dot(row, witness) != 0:
            raise LPError("witness violates an equality row")
    if feasible:
        for row in S:
            if dot(row, witness) < eps:
                raise LPError("witness violates a strict row")
    return feasible, witness, eps
