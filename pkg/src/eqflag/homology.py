"""Relative simplicial homology over the rationals, with equivariant traces.

The chain complex of a relative family depends only on its face set Phi: the
i-chain basis is the set of i-dimensional Phi-faces, and boundary terms that
land outside Phi are dropped.  The empty face spans degree -1; a void family
(no faces at all) has zero chain groups everywhere.
"""
from __future__ import annotations

from fractions import Fraction

from .groups import ClassFunction
from .linalg import nullspace, rank_exact, rank_mod_p, rref, solve_columns


class HomologyError(Exception):
    pass


class ChainComplex:
    """Chain groups and boundary matrices of a relative face family.

    faces: iterable of frozensets of integer vertices.  Dimension i runs from
    -1 (the empty face) to the top face dimension.
    """

    def __init__(self, faces):
        faces = [frozenset(f) for f in faces]
        self.by_dim = {}
        for f in faces:
            self.by_dim.setdefault(len(f) - 1, []).append(f)
        for dim in self.by_dim:
            self.by_dim[dim].sort(key=sorted)
        self.index = {dim: {f: i for i, f in enumerate(fs)}
                      for dim, fs in self.by_dim.items()}
        self.dims = sorted(self.by_dim)
        self.top = self.dims[-1] if self.dims else -2

    def basis(self, dim):
        return self.by_dim.get(dim, [])

    def boundary(self, dim):
        """Boundary matrix from dim-chains to (dim-1)-chains, integer entries.

        Rows are indexed by (dim-1)-faces, columns by dim-faces; faces missing
        from the family contribute nothing.
        """
        cols = self.basis(dim)
        rows_basis = self.basis(dim - 1)
        row_index = self.index.get(dim - 1, {})
        mat = [[0] * len(cols) for _ in rows_basis]
        for j, f in enumerate(cols):
            vs = sorted(f)
            for pos, v in enumerate(vs):
                sub = f - {v}
                i = row_index.get(sub)
                if i is not None:
                    mat[i][j] = (-1) ** pos
        return mat

    def check_d_squared(self):
        for dim in self.dims:
            a = self.boundary(dim)       # dim -> dim-1
            b = self.boundary(dim + 1)   # dim+1 -> dim
            if not a or not b or not b[0]:
                continue
            for i in range(len(a)):
                for j in range(len(b[0])):
                    s = sum(a[i][k] * b[k][j] for k in range(len(b)))
                    if s != 0:
                        raise HomologyError("boundary squared is nonzero")

    def betti(self, max_dim=None, exact=True):
        """Betti numbers as a dict dim -> rank of homology.

        With exact=False a single modular rank pass is used, which can only
        overestimate betti; a zero result is therefore still a certificate of
        vanishing.
        """
        rank = rank_exact if exact else rank_mod_p
        out = {}
        boundary_rank = {}
        for dim in self.dims:
            if max_dim is not None and dim > max_dim:
                break
            ncols = len(self.basis(dim))
            if dim not in boundary_rank:
                boundary_rank[dim] = rank(self.boundary(dim))
            up = self.boundary(dim + 1)
            boundary_rank[dim + 1] = rank(up)
            out[dim] = ncols - boundary_rank[dim] - boundary_rank[dim + 1]
        return out

    def induced_matrix(self, g, dim):
        """Signed permutation matrix of g on dim-chains (columns = images)."""
        basis = self.basis(dim)
        idx = self.index.get(dim, {})
        n = len(basis)
        mat = [[0] * n for _ in range(n)]
        for j, f in enumerate(basis):
            img = g.apply_set(f)
            i = idx.get(img)
            if i is None:
                raise HomologyError(f"face {sorted(f)} not preserved by the action")
            src = sorted(f)
            sign = _sort_sign([g(v) for v in src])
            mat[i][j] = sign
        return mat


def _sort_sign(seq):
    """Parity of the permutation sorting seq (distinct entries)."""
    seq = list(seq)
    sign = 1
    for i in range(len(seq)):
        m = min(range(i, len(seq)), key=seq.__getitem__)
        if m != i:
            seq[i], seq[m] = seq[m], seq[i]
            sign = -sign
    return sign


def betti(faces, max_dim=None, exact=True):
    """Betti numbers of a relative face family, dict dim -> rank."""
    cc = ChainComplex(faces)
    return cc.betti(max_dim=max_dim, exact=exact)


def homology_vanishes_up_to(faces, max_dim):
    """True iff H_i = 0 for all i <= max_dim.  Fast path: modular ranks can
    only overestimate betti, so all-zero modular betti certifies vanishing;
    nonzero values are confirmed exactly."""
    cc = ChainComplex(faces)
    fast = cc.betti(max_dim=max_dim, exact=False)
    hit = [dim for dim, b in fast.items() if b != 0]
    if not hit:
        return True, None
    slow = cc.betti(max_dim=max_dim, exact=True)
    for dim in sorted(slow):
        if slow[dim] != 0:
            return False, dim
    return True, None


def _trace_on_invariant_subspace(basis_cols, matrix):
    """Trace of a linear map restricted to an invariant subspace.

    basis_cols: independent Fraction column vectors spanning the subspace;
    matrix: the map on the ambient space (list of rows).  Solves B X = M B.
    """
    if not basis_cols:
        return Fraction(0)
    n = len(basis_cols[0])
    mapped = []
    for col in basis_cols:
        mapped.append([sum(Fraction(matrix[i][j]) * col[j] for j in range(n))
                       for i in range(n)])
    coords = solve_columns(basis_cols, mapped)
    return sum(coords[k][k] for k in range(len(basis_cols)))


def equivariant_homology_traces(faces, group, max_dim=None):
    """For each dimension, the trace of every class representative on H_dim.

    Returns dict dim -> ClassFunction.  The trace on homology is computed as
    trace on cycles minus trace on boundaries (both are invariant subspaces,
    and H = Z/B).
    """
    cc = ChainComplex(faces)
    cc.check_d_squared()
    out = {}
    for dim in cc.dims:
        if max_dim is not None and dim > max_dim:
            break
        down = cc.boundary(dim)
        ncols = len(cc.basis(dim))
        cycles = nullspace(down, ncols=ncols) if down else \
            [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
        up = cc.boundary(dim + 1)
        boundaries = _column_space_basis(up) if up and up[0] else []
        values = []
        for g in group.class_reps:
            m = cc.induced_matrix(g, dim)
            tz = _trace_on_invariant_subspace(cycles, m)
            tb = _trace_on_invariant_subspace(boundaries, m)
            values.append(tz - tb)
        out[dim] = ClassFunction(group, values)
    return out


def _column_space_basis(mat):
    """Independent columns of an integer matrix, as Fraction column vectors."""
    _, pivots = rref(mat)
    return [[Fraction(mat[i][j]) for i in range(len(mat))] for j in pivots]


def equivariant_homology_characters(faces, group, max_dim=None):
    """Alias with the full ChainComplex dimension range as keys; dims with no
    faces simply do not appear (their homology is zero)."""
    return equivariant_homology_traces(faces, group, max_dim=max_dim)


def hopf_trace_check(faces, group):
    """Alternating chain-level traces vs alternating homology traces, per class.

    The chain-level trace of g in dimension i equals its number of fixed
    i-faces: a setwise-fixed face is vertexwise fixed here (color-preserving
    action, distinct colors on a face), so the sign is +1.

    Returns (ok, report) with both sides per class representative.
    """
    cc = ChainComplex(faces)
    homo = equivariant_homology_traces(faces, group)
    lhs, rhs = [], []
    for g in group.class_reps:
        chain_side = Fraction(0)
        for dim in cc.dims:
            fixed = sum(1 for f in cc.basis(dim) if g.apply_set(f) == f)
            chain_side += (-1) ** dim * fixed
        homo_side = sum((-1) ** dim * Fraction(cf.value_at(g))
                        for dim, cf in homo.items())
        lhs.append(chain_side)
        rhs.append(homo_side)
    ok = lhs == rhs
    return ok, {"chain": lhs, "homology": rhs}
