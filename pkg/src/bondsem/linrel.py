"""Exact linear relations over the rationals and Lagrangian checks.

Subspaces are kept as reduced row-echelon bases of ``Fraction`` rows, so two
subspaces are equal exactly when their stored bases are identical.  A linear
relation ``k^a -> k^b`` is a subspace of ``k^(a+b)`` whose first ``a``
coordinates are the domain.

Symplectic coordinates are interleaved pairs ``(q1, p1, q2, p2, ...)`` and each
pair carries the form ``w((u, v), (u', v')) = u'v - uv'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Row = tuple[Fraction, ...]


class LinRelError(ValueError):
    pass


def rref(rows: Iterable[Sequence], ncols: int) -> tuple[Row, ...]:
    """Reduced row-echelon form with zero rows dropped."""
    m = []
    for row in rows:
        if len(row) != ncols:
            raise LinRelError(f"row has length {len(row)}, expected {ncols}")
        m.append([Fraction(x) for x in row])
    lead = 0
    r = 0
    nrows = len(m)
    while r < nrows and lead < ncols:
        pivot = next((i for i in range(r, nrows) if m[i][lead] != 0), None)
        if pivot is None:
            lead += 1
            continue
        m[r], m[pivot] = m[pivot], m[r]
        p = m[r][lead]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        row_r = m[r]
        for i in range(nrows):
            if i != r:
                factor = m[i][lead]
                if factor:
                    m[i] = [x - factor * y for x, y in zip(m[i], row_r)]
        r += 1
        lead += 1
    return tuple(tuple(row) for row in m[:r])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """A basis of ``{x : M x = 0}`` for the matrix with the given rows."""
    reduced = rref(rows, ncols)
    pivots = [next(j for j, x in enumerate(row) if x != 0) for row in reduced]
    free = [j for j in range(ncols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    return basis


@dataclass(frozen=True)
class Subspace:
    ambient_dim: int
    basis: tuple[Row, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v: Sequence) -> bool:
        return canonicalize(self.ambient_dim, self.basis + (tuple(v),)).dim == self.dim

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.basis)
        return f"Subspace({self.ambient_dim}: [{rows}])"


def canonicalize(ambient_dim: int, rows: Iterable[Sequence]) -> Subspace:
    return Subspace(ambient_dim, rref(rows, ambient_dim))


def subspace_equal(a: Subspace, b: Subspace) -> bool:
    return a.ambient_dim == b.ambient_dim and a.basis == b.basis


def span_sum(a: Subspace, b: Subspace) -> Subspace:
    return canonicalize(a.ambient_dim, a.basis + b.basis)


@dataclass(frozen=True)
class LinearRelation:
    dom_dim: int
    cod_dim: int
    space: Subspace

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> tuple[Row, ...]:
        return self.space.basis

    def to_json(self) -> dict:
        return {
            "dom_dim": self.dom_dim,
            "cod_dim": self.cod_dim,
            "basis": [[str(x) for x in row] for row in self.basis],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinearRelation":
        rows = [[Fraction(x) for x in row] for row in data["basis"]]
        return relation(data["dom_dim"], data["cod_dim"], rows)

    def __repr__(self) -> str:
        rows = "; ".join(" ".join(str(x) for x in row) for row in self.basis)
        return f"LinearRelation({self.dom_dim}->{self.cod_dim}: [{rows}])"

    def __rshift__(self, other: "LinearRelation") -> "LinearRelation":
        return rel_compose(other, self)

    def __matmul__(self, other: "LinearRelation") -> "LinearRelation":
        return rel_tensor(self, other)


def relation(dom_dim: int, cod_dim: int, rows: Iterable[Sequence]) -> LinearRelation:
    """Relation spanned by the given ``(domain, codomain)`` rows."""
    return LinearRelation(dom_dim, cod_dim, canonicalize(dom_dim + cod_dim, rows))


def from_constraints(dom_dim: int, cod_dim: int, constraints: Iterable[Sequence]) -> LinearRelation:
    """Relation cut out by linear equations ``c . (x, y) = 0``."""
    n = dom_dim + cod_dim
    return relation(dom_dim, cod_dim, nullspace(list(constraints), n))


def graph(matrix: Sequence[Sequence], dom_dim: int, cod_dim: int) -> LinearRelation:
    """Graph of the linear map ``y = A x`` given ``A`` as ``cod_dim`` rows."""
    rows = []
    for j in range(dom_dim):
        rows.append([1 if i == j else 0 for i in range(dom_dim)] + [matrix[k][j] for k in range(cod_dim)])
    return relation(dom_dim, cod_dim, rows)


def constraints_of(r: LinearRelation) -> list[list[Fraction]]:
    """Equations whose common solution set is ``r`` (the annihilator basis)."""
    return nullspace(r.basis, r.dom_dim + r.cod_dim)


def rel_identity(dim: int) -> LinearRelation:
    return graph([[1 if i == j else 0 for j in range(dim)] for i in range(dim)], dim, dim)


def rel_compose(s: LinearRelation, r: LinearRelation) -> LinearRelation:
    """``s`` after ``r``: pairs (x, z) with some y such that (x, y) in r and (y, z) in s."""
    if r.cod_dim != s.dom_dim:
        raise LinRelError(f"cannot compose: r has codomain {r.cod_dim}, s has domain {s.dom_dim}")
    a, b, c = r.dom_dim, r.cod_dim, s.cod_dim
    rb, sb = r.basis, s.basis
    p, q = len(rb), len(sb)
    # unknowns (lambda, mu): sum lambda_i y(r_i) - sum mu_j y(s_j) = 0
    system = [[rb[i][a + k] for i in range(p)] + [-sb[j][k] for j in range(q)] for k in range(b)]
    rows = []
    for sol in nullspace(system, p + q):
        lam, mu = sol[:p], sol[p:]
        x = [sum((lam[i] * rb[i][t] for i in range(p)), Fraction(0)) for t in range(a)]
        z = [sum((mu[j] * sb[j][b + t] for j in range(q)), Fraction(0)) for t in range(c)]
        rows.append(x + z)
    return relation(a, c, rows)


def permute(r: LinearRelation, order: Sequence[int], dom_dim: int, cod_dim: int) -> LinearRelation:
    """Reorder coordinates: new coordinate ``k`` is old coordinate ``order[k]``."""
    return relation(dom_dim, cod_dim, ([row[i] for i in order] for row in r.basis))


def rel_tensor(r: LinearRelation, s: LinearRelation) -> LinearRelation:
    a, b, c, d = r.dom_dim, r.cod_dim, s.dom_dim, s.cod_dim
    zero_s = [Fraction(0)] * (c + d)
    zero_r = [Fraction(0)] * (a + b)
    rows = []
    for row in r.basis:
        rows.append(list(row[:a]) + zero_s[:c] + list(row[a:]) + zero_s[c:])
    for row in s.basis:
        rows.append(zero_r[:a] + list(row[:c]) + zero_r[a:] + list(row[c:]))
    return relation(a + c, b + d, rows)


def rel_dagger(r: LinearRelation) -> LinearRelation:
    a, b = r.dom_dim, r.cod_dim
    order = list(range(a, a + b)) + list(range(a))
    return permute(r, order, b, a)


def rel_tensor_all(*rs: LinearRelation) -> LinearRelation:
    out = rel_identity(0)
    for r in rs:
        out = rel_tensor(out, r)
    return out


def rel_compose_all(*rs: LinearRelation) -> LinearRelation:
    """Diagrammatic order: ``rel_compose_all(r, s)`` is s after r."""
    out = rs[0]
    for r in rs[1:]:
        out = rel_compose(r, out)
    return out


def block_swap(a: int, b: int) -> LinearRelation:
    """Graph of ``(u, v) -> (v, u)`` with ``u`` in k^a and ``v`` in k^b."""
    n = a + b
    matrix = [[0] * n for _ in range(n)]
    for j in range(b):
        matrix[j][a + j] = 1
    for i in range(a):
        matrix[b + i][i] = 1
    return graph(matrix, n, n)


# -- symplectic structure ---------------------------------------------------


def form_matrix(signs: Sequence[int]) -> list[list[int]]:
    """Gram matrix of the pairwise form, one sign (+1 or -1) per coordinate pair."""
    n = 2 * len(signs)
    w = [[0] * n for _ in range(n)]
    for k, s in enumerate(signs):
        q, p = 2 * k, 2 * k + 1
        # w(x, x') = x'_q x_p - x_q x'_p
        w[p][q] = s
        w[q][p] = -s
    return w


def symplectic_eval(u: Sequence, v: Sequence, signs: Sequence[int] | None = None) -> Fraction:
    if len(u) != len(v) or len(u) % 2:
        raise LinRelError(f"vectors of lengths {len(u)} and {len(v)} do not fit a pair layout")
    if signs is None:
        signs = [1] * (len(u) // 2)
    if len(signs) * 2 != len(u):
        raise LinRelError("one sign per coordinate pair is required")
    total = Fraction(0)
    for k, s in enumerate(signs):
        q, p = 2 * k, 2 * k + 1
        total += s * (Fraction(v[q]) * Fraction(u[p]) - Fraction(u[q]) * Fraction(v[p]))
    return total


def relation_signs(r: LinearRelation) -> list[int]:
    if r.dom_dim % 2 or r.cod_dim % 2:
        raise LinRelError(f"relation {r.dom_dim}->{r.cod_dim} has an odd side; no pair layout")
    return [-1] * (r.dom_dim // 2) + [1] * (r.cod_dim // 2)


def orthogonal(w: Subspace, signs: Sequence[int] | None = None) -> Subspace:
    """The form-orthogonal complement of ``w``."""
    n = w.ambient_dim
    if n % 2:
        raise LinRelError("odd ambient dimension has no pair layout")
    if signs is None:
        signs = [1] * (n // 2)
    gram = form_matrix(signs)
    # v is orthogonal to b iff b^T W v = 0
    rows = [[sum(b[i] * gram[i][j] for i in range(n)) for j in range(n)] for b in w.basis]
    return canonicalize(n, nullspace(rows, n))


def is_isotropic(space: Subspace, signs: Sequence[int]) -> bool:
    basis = space.basis
    return all(symplectic_eval(u, v, signs) == 0 for i, u in enumerate(basis) for v in basis[i + 1:])


def is_lagrangian(r: LinearRelation) -> bool:
    signs = relation_signs(r)
    if 2 * r.dim != r.dom_dim + r.cod_dim:
        return False
    return is_isotropic(r.space, signs)


# -- generators ---------------------------------------------------------------


def _scalar_table() -> dict[str, LinearRelation]:
    dup = graph([[1], [1]], 1, 2)
    add = graph([[1, 1]], 2, 1)
    table = {
        "dup": dup,
        "del": relation(1, 0, [[1]]),
        "zero": relation(0, 1, []),
        "add": add,
    }
    table["codup"] = rel_dagger(dup)
    table["codel"] = rel_dagger(table["del"])
    table["coadd"] = rel_dagger(add)
    table["cozero"] = rel_dagger(table["zero"])
    return table


SCALAR_GENERATORS = _scalar_table()


def scalar_generator(name: str) -> LinearRelation:
    try:
        return SCALAR_GENERATORS[name]
    except KeyError:
        raise LinRelError(f"unknown scalar generator {name!r}") from None


def pair_tensor(first: LinearRelation, second: LinearRelation) -> LinearRelation:
    """Run ``first`` on the first coordinate of every pair and ``second`` on the second.

    This is the direct sum ``first (+) second`` written in the interleaved
    layout ``(q1, p1, q2, p2, ...)``.
    """
    if (first.dom_dim, first.cod_dim) != (second.dom_dim, second.cod_dim):
        raise LinRelError("pair_tensor needs relations of the same shape")
    a, b = first.dom_dim, first.cod_dim
    both = rel_tensor(first, second)
    # rel_tensor layout: q_dom (a), p_dom (a), q_cod (b), p_cod (b)
    order = []
    for k in range(a):
        order += [k, a + k]
    for k in range(b):
        order += [2 * a + k, 2 * a + b + k]
    return permute(both, order, 2 * a, 2 * b)


_PAIR_RECIPES = {
    "M": ("add", "codup"),
    "I": ("zero", "codel"),
    "D": ("coadd", "dup"),
    "E": ("cozero", "del"),
    "Mp": ("codup", "add"),
    "Ip": ("codel", "zero"),
    "Dp": ("dup", "coadd"),
    "Ep": ("del", "cozero"),
}

PAIR_GENERATORS = {
    name: pair_tensor(scalar_generator(q), scalar_generator(p)) for name, (q, p) in _PAIR_RECIPES.items()
}
PAIR_GENERATORS["braid"] = block_swap(2, 2)


def pair_generator(name: str) -> LinearRelation:
    try:
        return PAIR_GENERATORS[name]
    except KeyError:
        raise LinRelError(f"unknown pair generator {name!r}") from None
