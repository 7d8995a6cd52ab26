"""Exact complex character tables of finite permutation groups.

Two construction routes share one verified table format.  Abelian
groups get the cyclic-chain construction: characters of a subgroup
chain are extended one generator at a time, tracked as discrete logs of
root-of-unity values.  Everything else goes through class matrices: the
common eigenvectors of the class-constant matrices over a suitable
prime field determine the central characters, degrees are recovered
from the second orthogonality residue, and actual character values are
lifted by exact discrete Fourier inversion over the eigenvalue lattice.

All values are elements of the cyclotomic field whose conductor is the
group exponent.  Tables are canonically ordered (trivial character
first, the rest by degree then value key) and checked against the
orthogonality relations before use, so downstream equivalence tests do
not depend on which route produced the table.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, isqrt

from .cyclotomic import Cyclotomic, cyclo, cyclo_rational, root_log, root_order
from .groups import FiniteGroup, SizeCapError
from .intlinalg import smith_divisors
from .reps import PermRep, difference_space, u_action_trace, _same_group

DEFAULT_CLASS_CAP = 30


class CharacterTable:
    """Irreducible complex characters as rows over conjugacy classes."""

    def __init__(self, group: FiniteGroup, values, route: str):
        self.group = group
        self.route = route
        self.classes = tuple(group.conjugacy_classes())
        self.class_of = tuple(group.class_of())
        self.reps = tuple(c[0] for c in self.classes)
        self.sizes = tuple(len(c) for c in self.classes)
        self.conductor = group.exponent()
        self.inverse_class = tuple(
            self.class_of[group.inverse[r]] for r in self.reps)

        rows = [tuple(row) for row in values]
        trivial = [i for i, row in enumerate(rows)
                   if all(v == 1 for v in row)]
        if len(trivial) != 1:
            raise RuntimeError("expected exactly one trivial character")
        first = rows.pop(trivial[0])
        rows.sort(key=lambda row: (self._row_degree(row),
                                   tuple(v.key() for v in row)))
        self.values = tuple([first] + rows)
        self.degrees = tuple(self._row_degree(row) for row in self.values)
        self._indicators = None

    @staticmethod
    def _row_degree(row) -> int:
        d = row[0].is_rational()
        if d is None or d.denominator != 1 or d <= 0:
            raise RuntimeError("character degree is not a positive integer")
        return int(d)

    @property
    def count(self) -> int:
        return len(self.values)

    def power_class(self, j: int, s: int) -> int:
        """Index of the class containing the s-th powers of class j."""
        return self.class_of[self.group.power_index(self.reps[j], s)]

    def indicator(self, i: int) -> int:
        """Frobenius-Schur indicator: +1 real, 0 complex, -1 quaternionic."""
        if self._indicators is None:
            n = self.group.order
            sq = [self.power_class(j, 2) for j in range(len(self.classes))]
            out = []
            for row in self.values:
                total = cyclo_rational(self.conductor, 0)
                for j, size in enumerate(self.sizes):
                    total = total + size * row[sq[j]]
                val = total.is_rational()
                if val is None or val.denominator != 1 or int(val) % n:
                    raise RuntimeError("indicator sum is not divisible by |G|")
                ind = int(val) // n
                if ind not in (-1, 0, 1):
                    raise RuntimeError("indicator outside {-1, 0, 1}")
                out.append(ind)
            self._indicators = tuple(out)
        return self._indicators[i]

    def char_order(self, i: int):
        """Multiplicative order of a degree-1 character; None otherwise."""
        if self.degrees[i] != 1:
            return None
        m = self.conductor
        out = 1
        for v in self.values[i]:
            k = root_log(v)
            if k is None:
                raise RuntimeError("degree-1 character value is not a root of unity")
            o = root_order(m, k)
            out = out * o // gcd(out, o)
        return out

    def __repr__(self):
        return "<CharacterTable: %d classes, conductor %d, %s route>" % (
            len(self.classes), self.conductor, self.route)


def character_table(group: FiniteGroup, class_cap=DEFAULT_CLASS_CAP) -> CharacterTable:
    """The (cached) character table of the group."""
    cached = getattr(group, "_character_table", None)
    if cached is not None:
        return cached
    if group.is_abelian():
        table = CharacterTable(group, _abelian_characters(group), "cyclic-chain")
    else:
        table = CharacterTable(group, _class_matrix_characters(group, class_cap),
                               "class-matrix")
    group._character_table = table
    return table


# ---------------------------------------------------------------------------
# abelian route: chain extension tracked by discrete logs


def _abelian_characters(group: FiniteGroup):
    """All |G| linear characters as cyclotomic value rows (class j is the
    singleton {j} for abelian groups)."""
    if not group.is_abelian():
        raise ValueError("cyclic-chain construction needs an abelian group")
    n = group.order
    m = group.exponent()
    table = group.table
    in_sub = bytearray(n)
    in_sub[0] = 1
    covered = [0]
    chars = [[None] * n for _ in range(1)]
    chars[0][0] = 0  # log vectors: chi(g) = zeta_m ** logs[g]

    for a in group.gens:
        if in_sub[a]:
            continue
        # order of a modulo the current subgroup
        d = 1
        x = a
        while not in_sub[x]:
            x = table[x][a]
            d += 1
        # x == a^d lies in the subgroup; each character extends in d ways
        step = m // d
        new_chars = []
        for logs in chars:
            t = logs[x]
            if t % d:
                raise RuntimeError("extension log is not divisible by the index")
            for i in range(d):
                s = (t // d + step * i) % m
                ext = logs[:]
                for h in covered:
                    z = h
                    base = logs[h]
                    for j in range(1, d):
                        z = table[z][a]
                        ext[z] = (base + j * s) % m
                new_chars.append(ext)
        chars = new_chars
        fresh = []
        for h in covered:
            z = h
            for j in range(1, d):
                z = table[z][a]
                in_sub[z] = 1
                fresh.append(z)
        covered.extend(fresh)

    if len(covered) != n or len(chars) != n:
        raise RuntimeError("chain construction did not cover the group")
    # verification: rows are pairwise distinct homomorphisms
    if len({tuple(c) for c in chars}) != n:
        raise RuntimeError("chain construction produced repeated characters")
    for logs in chars:
        for a in group.gens:
            la = logs[a]
            for x in range(n):
                if logs[table[x][a]] != (logs[x] + la) % m:
                    raise RuntimeError("character row is not multiplicative")
    return [[cyclo(m, logs[j]) for j in range(n)] for logs in chars]


def invariant_factors(group: FiniteGroup):
    """Invariant factor decomposition Z/d1 x ... x Z/dk (d1 | d2 | ...)
    of an abelian group, via the relation lattice of its generators."""
    if not group.is_abelian():
        raise ValueError("invariant factors need an abelian group")
    gens = group.gens
    k = len(gens)
    table = group.table
    labels = [None] * group.order
    labels[0] = (0,) * k
    relations = []
    frontier = [0]
    while frontier:
        nxt = []
        for x in frontier:
            vx = labels[x]
            for idx, a in enumerate(gens):
                y = table[x][a]
                vy = tuple(c + (1 if t == idx else 0)
                           for t, c in enumerate(vx))
                if labels[y] is None:
                    labels[y] = vy
                    nxt.append(y)
                else:
                    rel = [p - q for p, q in zip(vy, labels[y])]
                    if any(rel):
                        relations.append(rel)
        frontier = nxt
    divisors = smith_divisors(relations)
    if len(divisors) != k:
        raise RuntimeError("relation lattice does not have full rank")
    return tuple(d for d in divisors if d != 1)


# ---------------------------------------------------------------------------
# general route: class matrices over F_p, eigenvector split, exact lift


class _SplitFailure(Exception):
    pass


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def _primitive_root(p: int) -> int:
    phi = p - 1
    factors = []
    t = phi
    d = 2
    while d * d <= t:
        if t % d == 0:
            factors.append(d)
            while t % d == 0:
                t //= d
        d += 1
    if t > 1:
        factors.append(t)
    for w in range(2, p):
        if all(pow(w, phi // q, p) != 1 for q in factors):
            return w
    raise RuntimeError("no primitive root found")


def _rref_mod(rows, p):
    mat = [list(r) for r in rows]
    pivots = []
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    r = 0
    for c in range(ncols):
        sel = next((i for i in range(r, nrows) if mat[i][c] % p), None)
        if sel is None:
            continue
        mat[r], mat[sel] = mat[sel], mat[r]
        inv = pow(mat[r][c], p - 2, p)
        mat[r] = [(v * inv) % p for v in mat[r]]
        for i in range(nrows):
            if i != r and mat[i][c] % p:
                f = mat[i][c]
                mat[i] = [(a - f * b) % p for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return mat[:r], pivots


def _kernel_mod(rows, p):
    """Canonical kernel basis of a matrix over F_p (one vector per free
    column, 1 at the free column)."""
    red, pivots = _rref_mod(rows, p)
    ncols = len(rows[0])
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for f in free:
        v = [0] * ncols
        v[f] = 1
        for i, pc in enumerate(pivots):
            v[pc] = (-red[i][f]) % p
        out.append(v)
    return out


def _charpoly_mod(mat, p):
    """Coefficients [1, c1, ..., cs] of the characteristic polynomial,
    highest degree first (Faddeev-LeVerrier; needs p > s)."""
    s = len(mat)
    coeffs = [1]
    B = [[1 if i == j else 0 for j in range(s)] for i in range(s)]
    for k in range(1, s + 1):
        AB = [[sum(mat[i][t] * B[t][j] for t in range(s)) % p
               for j in range(s)] for i in range(s)]
        tr = sum(AB[i][i] for i in range(s)) % p
        ck = (-tr * pow(k, p - 2, p)) % p
        coeffs.append(ck)
        B = [[(AB[i][j] + (ck if i == j else 0)) % p for j in range(s)]
             for i in range(s)]
    return coeffs


def _poly_eval_mod(coeffs, x, p):
    acc = 0
    for c in coeffs:
        acc = (acc * x + c) % p
    return acc


def _class_constants(group: FiniteGroup):
    classes = group.conjugacy_classes()
    cls = group.class_of()
    r = len(classes)
    sizes = [len(c) for c in classes]
    counts = [[[0] * r for _ in range(r)] for _ in range(r)]
    table = group.table
    for x in range(group.order):
        cx = counts[cls[x]]
        row = table[x]
        for y in range(group.order):
            cx[cls[y]][cls[row[y]]] += 1
    for i in range(r):
        for j in range(r):
            for l in range(r):
                q, rem = divmod(counts[i][j][l], sizes[l])
                if rem:
                    raise RuntimeError("class constant is not integral")
                counts[i][j][l] = q
    return counts


def _split_eigenvectors(constants, r, p):
    """Common eigenvectors (normalized to first coordinate 1) of the
    class matrices over F_p."""
    spaces = [([[1 if i == j else 0 for j in range(r)]
                for i in range(r)], list(range(r)))]
    for i in range(1, r):
        mat = [[constants[i][j][l] % p for l in range(r)] for j in range(r)]
        refined = []
        for rows, pivots in spaces:
            s = len(rows)
            if s == 1:
                refined.append((rows, pivots))
                continue
            images = []
            for vec in rows:
                w = [sum(mat[j][l] * vec[l] for l in range(r)) % p
                     for j in range(r)]
                images.append(w)
            # restriction matrix in the space's own basis
            C = []
            for w in images:
                coeff = [w[pc] for pc in pivots]
                resid = list(w)
                for cval, brow in zip(coeff, rows):
                    if cval:
                        resid = [(a - cval * b) % p
                                 for a, b in zip(resid, brow)]
                if any(resid):
                    raise _SplitFailure("subspace is not invariant")
                C.append(coeff)
            poly = _charpoly_mod(C, p)
            found = 0
            for lam in range(p):
                if _poly_eval_mod(poly, lam, p):
                    continue
                # C[a][b] expands B.v_a over the basis, so x = sum t_a v_a
                # is an eigenvector iff C^T t = lam t
                shifted = [[(C[b][a] - (lam if a == b else 0)) % p
                            for b in range(s)] for a in range(s)]
                kvs = _kernel_mod(shifted, p)
                if not kvs:
                    continue
                # one refined space per eigenvalue: a lone basis vector of
                # a fatter eigenspace is not yet a joint eigenvector
                vecs = [[sum(kv[a] * rows[a][l] for a in range(s)) % p
                         for l in range(r)] for kv in kvs]
                red, piv = _rref_mod(vecs, p)
                if len(red) != len(kvs):
                    raise _SplitFailure("eigenspace basis degenerated")
                refined.append((red, piv))
                found += len(kvs)
            if found != s:
                raise _SplitFailure("eigenspace dimensions do not add up")
        spaces = refined
    out = []
    for rows, _ in spaces:
        if len(rows) != 1:
            raise _SplitFailure("joint eigenspace has dimension > 1")
        u = rows[0]
        if u[0] % p == 0:
            raise _SplitFailure("eigenvector vanishes at the identity class")
        inv = pow(u[0], p - 2, p)
        out.append([(v * inv) % p for v in u])
    return out


def _class_matrix_characters(group: FiniteGroup, class_cap=DEFAULT_CLASS_CAP):
    classes = group.conjugacy_classes()
    r = len(classes)
    if r > class_cap:
        raise SizeCapError(
            "class-matrix construction capped at %d classes; group has %d"
            % (class_cap, r))
    n = group.order
    m = group.exponent()
    sizes = [len(c) for c in classes]
    reps = [c[0] for c in classes]
    cls = group.class_of()
    jstar = [cls[group.inverse[rep]] for rep in reps]
    constants = _class_constants(group)

    # strictly above twice any degree, so lifted multiplicities in
    # [0, sqrt(n)] sit strictly below p/2 and degrees are recovered uniquely
    lower = max(2 * isqrt(n) + 2, r + 1, 3)
    primes = []
    k = 1
    while len(primes) < 8:
        p = m * k + 1
        if p >= lower and _is_prime(p):
            primes.append(p)
        k += 1

    last = None
    for p in primes:
        try:
            return _characters_mod_p(group, constants, sizes, reps, jstar,
                                     n, m, r, p)
        except _SplitFailure as exc:
            last = exc
    raise RuntimeError("character construction failed for primes %s: %s"
                       % (primes, last))


def _characters_mod_p(group, constants, sizes, reps, jstar, n, m, r, p):
    omegas = _split_eigenvectors(constants, r, p)
    if len(omegas) != r:
        raise _SplitFailure("wrong number of joint eigenvectors")
    inv_sizes = [pow(s % p, p - 2, p) for s in sizes]
    n_mod = n % p

    degrees = []
    fmod = []
    for u in omegas:
        tt = sum(u[j] * u[jstar[j]] * inv_sizes[j] for j in range(r)) % p
        if tt == 0:
            raise _SplitFailure("norm residue vanished")
        target = (n_mod * pow(tt, p - 2, p)) % p
        d = next((d for d in range(1, isqrt(n) + 1)
                  if d * d % p == target), None)
        if d is None:
            raise _SplitFailure("no degree matches the norm residue")
        degrees.append(d)
        fmod.append([(d * u[j] * inv_sizes[j]) % p for j in range(r)])
    if sum(d * d for d in degrees) != n:
        raise _SplitFailure("degree squares do not sum to the group order")

    w = _primitive_root(p)
    cls = group.class_of()
    values = []
    for i in range(r):
        row = []
        for j in range(r):
            o = group.orders[reps[j]]
            z = pow(w, (p - 1) // o, p)
            f = [fmod[i][cls[group.power_index(reps[j], s)]]
                 for s in range(o)]
            inv_o = pow(o, p - 2, p)
            val = cyclo_rational(m, 0)
            total = 0
            for t in range(o):
                nt = sum(f[s] * pow(z, (-s * t) % (p - 1), p)
                         for s in range(o)) * inv_o % p
                if nt >= p // 2:
                    raise _SplitFailure("eigenvalue multiplicity too large")
                total += nt
                if nt:
                    val = val + nt * cyclo(m, (m // o) * t)
            if total != degrees[i]:
                raise _SplitFailure("multiplicities do not sum to the degree")
            row.append(val)
        values.append(row)

    # exact orthogonality before the table is trusted
    for i in range(r):
        for k2 in range(i, r):
            s = cyclo_rational(m, 0)
            for j in range(r):
                s = s + sizes[j] * (values[i][j] * values[k2][jstar[j]])
            if s != (n if i == k2 else 0):
                raise _SplitFailure("orthogonality failed after lifting")
    return values


# ---------------------------------------------------------------------------
# real irreducibles and permutation characters


class RealIrreducible:
    """A real irreducible character: a type-R complex character, a
    conjugate pair summed, or a quaternionic character doubled.

    schur_fraction is 1, 1/2 or 1/4: the squared real degree times this
    fraction is the dimension of the matrix block the character spans
    inside the group algebra image.
    """

    def __init__(self, complex_indices, values, degree, indicator):
        self.complex_indices = tuple(complex_indices)
        self.values = tuple(values)
        self.degree = degree
        self.indicator = indicator
        self.schur_fraction = {1: Fraction(1), 0: Fraction(1, 2),
                               -1: Fraction(1, 4)}[indicator]

    @property
    def is_trivial(self) -> bool:
        return all(v == 1 for v in self.values)

    def __repr__(self):
        kind = {1: "R", 0: "C", -1: "H"}[self.indicator]
        return "<RealIrreducible: degree %d, type %s>" % (self.degree, kind)


def real_irreducibles(table: CharacterTable):
    """Real irreducible characters, canonically ordered (trivial first)."""
    r = table.count
    used = [False] * r
    items = []
    for i in range(r):
        if used[i]:
            continue
        used[i] = True
        ind = table.indicator(i)
        row = table.values[i]
        if ind == 1:
            items.append(RealIrreducible((i,), row, table.degrees[i], 1))
            continue
        if ind == -1:
            vals = [2 * v for v in row]
            items.append(RealIrreducible((i,), vals, 2 * table.degrees[i], -1))
            continue
        conj_row = tuple(row[table.inverse_class[j]] for j in range(len(row)))
        partner = next((k for k in range(i + 1, r)
                        if not used[k] and table.values[k] == conj_row), None)
        if partner is None:
            raise RuntimeError("complex character is missing its conjugate")
        used[partner] = True
        vals = [a + b for a, b in zip(row, table.values[partner])]
        items.append(RealIrreducible((i, partner), vals,
                                     2 * table.degrees[i], 0))
    trivial = next(k for k, it in enumerate(items) if it.is_trivial)
    first = items.pop(trivial)
    items.sort(key=lambda it: (it.degree, tuple(v.key() for v in it.values)))
    return tuple([first] + items)


class Constituents:
    """Multiplicities of the complex irreducibles in a permutation character."""

    def __init__(self, multiplicities, character):
        self.multiplicities = tuple(multiplicities)
        self.character = tuple(character)
        self.nontrivial = frozenset(
            i for i, mv in enumerate(self.multiplicities) if mv and i != 0)
        self.trivial_multiplicity = self.multiplicities[0]


def permutation_character(rep: PermRep, table: CharacterTable):
    """Fixed-point counts on class representatives."""
    out = []
    for rp in table.reps:
        imgs = rep.action[rp].images
        out.append(sum(1 for a, b in enumerate(imgs) if a == b))
    return out


def constituents(rep: PermRep, table: CharacterTable | None = None) -> Constituents:
    if table is None:
        table = character_table(rep.group)
    if table.group is not rep.group and table.group.elements != rep.group.elements:
        raise ValueError("table belongs to a different group")
    pi = permutation_character(rep, table)
    n = rep.group.order
    m = table.conductor
    mults = []
    for row in table.values:
        s = cyclo_rational(m, 0)
        for j, size in enumerate(table.sizes):
            if pi[j]:
                s = s + (size * pi[j]) * row[table.inverse_class[j]]
        val = s.is_rational()
        if val is None:
            raise RuntimeError("inner product is not rational")
        mult = val / n
        if mult.denominator != 1 or mult < 0:
            raise RuntimeError("multiplicity %s is not a nonnegative integer" % mult)
        mults.append(int(mult))
    cons = Constituents(mults, pi)
    if sum(mv * d for mv, d in zip(mults, table.degrees)) != rep.degree:
        raise RuntimeError("constituent degrees do not sum to the action degree")
    if cons.trivial_multiplicity != rep.orbit_count():
        raise RuntimeError("trivial multiplicity differs from the orbit count")
    return cons


def stably_equivalent_by_characters(repA: PermRep, repB: PermRep,
                                    table: CharacterTable | None = None) -> bool:
    """Equality of the sets of nontrivial irreducible constituents."""
    if not _same_group(repA, repB):
        raise ValueError("stable equivalence needs representations of one group")
    if table is None:
        table = character_table(repA.group)
    return (constituents(repA, table).nontrivial
            == constituents(repB, table).nontrivial)


class IsotypeReport:
    def __init__(self, dim_expected, dim_actual, real_degrees, residuals_ok):
        self.dim_expected = dim_expected
        self.dim_actual = dim_actual
        self.real_degrees = tuple(real_degrees)
        self.residuals_ok = residuals_ok

    @property
    def ok(self) -> bool:
        return self.dim_expected == self.dim_actual and self.residuals_ok


def verify_isotype(rep: PermRep, table: CharacterTable | None = None) -> IsotypeReport:
    """Check the vertex-span dimension and trace identities predicted by
    the occurring real irreducible constituents.

    dim span{M_g - M_e} must equal the sum of schur_fraction * degree^2
    over the nontrivial real irreducibles meeting the permutation
    character, and for every g the trace of left multiplication on that
    span must equal sum of schur_fraction * degree * value(g).  Raises
    on any exact mismatch.
    """
    if table is None:
        table = character_table(rep.group)
    cons = constituents(rep, table)
    occurring = []
    for real in real_irreducibles(table):
        if real.is_trivial:
            continue
        present = [i in cons.nontrivial for i in real.complex_indices]
        if any(present) != all(present):
            raise RuntimeError("conjugate constituents occur asymmetrically")
        if all(present):
            occurring.append(real)
    dim_pred = sum((real.schur_fraction * real.degree * real.degree
                    for real in occurring), Fraction(0))
    if dim_pred.denominator != 1:
        raise RuntimeError("predicted dimension is not an integer")
    dim_pred = int(dim_pred)
    space = difference_space(rep)
    if space.dim != dim_pred:
        raise RuntimeError("span dimension %d differs from predicted %d"
                           % (space.dim, dim_pred))

    m = table.conductor
    cls = table.class_of
    ok = True
    for g in range(rep.group.order):
        rhs = cyclo_rational(m, 0)
        for real in occurring:
            rhs = rhs + (real.schur_fraction * real.degree) * real.values[cls[g]]
        val = rhs.is_rational()
        if val is None or val != u_action_trace(rep, g):
            raise RuntimeError("trace identity failed at element %d" % g)
    return IsotypeReport(dim_pred, space.dim,
                         [real.degree for real in occurring], ok)


def order_profile(table: CharacterTable):
    """Sorted multiset of the multiplicative orders of the degree-1
    characters (an isomorphism invariant separating abelian groups)."""
    out = []
    for i in range(table.count):
        o = table.char_order(i)
        if o is not None:
            out.append(o)
    return tuple(sorted(out))
