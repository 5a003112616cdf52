"""Set partitions of a finite vertex set and the connectivity-matrix inverse.

A partition's blocks are kept in canonical form (each block sorted, blocks
ordered by smallest element) so equality and hashing behave like equality of
set partitions.  ``connectivity_matrix`` builds the 0/1 matrix alpha with
alpha[i][j] = 1 exactly when the common coarsening of partitions i and j is a
single block, and inverts it exactly over the rationals.  The inverse beta is
the weight table of the splitting formula for networks glued along shared
vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError, QrelnetError

# Bell(8) = 4140 partitions: enumeration stays desk-scale.
MAX_GROUND_SET = 8
# Bell(7) = 877: exact inversion of a 877 x 877 integer matrix is the
# largest.  Beyond that the cubic cost is no longer interactive.
MAX_MATRIX_GROUND_SET = 7


@dataclass(frozen=True)
class Partition:
    """Set partition of a finite set of vertex names, in canonical form.

    The constructor canonicalizes: blocks are sorted internally and then by
    their smallest element.  Blocks must be non-empty and pairwise disjoint.
    """

    blocks: tuple[tuple[str, ...], ...]

    def __post_init__(self):
        canon = []
        seen = set()
        for block in self.blocks:
            members = sorted(block)
            if not members:
                raise QrelnetError("partition blocks must be non-empty", code="invalid_partition")
            for v in members:
                if v in seen:
                    raise QrelnetError(f"element {v!r} appears in two blocks", code="invalid_partition")
                seen.add(v)
            canon.append(tuple(members))
        canon.sort(key=lambda b: b[0])
        object.__setattr__(self, "blocks", tuple(canon))

    def ground_set(self) -> frozenset[str]:
        return frozenset(v for block in self.blocks for v in block)

    @property
    def num_blocks(self) -> int:
        return len(self.blocks)


def singletons(u) -> Partition:
    """Finest partition of ``u``: every element alone."""
    return Partition(tuple((v,) for v in set(u)))


def single_block(u) -> Partition:
    """Coarsest partition of ``u``: one block holding everything."""
    elems = set(u)
    if not elems:
        return Partition(())
    return Partition((tuple(elems),))


def is_single_block(p: Partition) -> bool:
    return len(p.blocks) == 1


def enumerate_partitions(u) -> list[Partition]:
    """All partitions of ``u`` in restricted-growth-string lexicographic order.

    Elements are sorted first, so the order is canonical: the single-block
    partition comes first and the all-singletons partition last.
    """
    elems = sorted(set(u))
    m = len(elems)
    if m == 0:
        raise QrelnetError("cannot enumerate partitions of an empty set", code="invalid_partition")
    if m > MAX_GROUND_SET:
        raise CapacityError(f"partition enumeration capped at {MAX_GROUND_SET} elements, got {m}")

    out: list[Partition] = []
    labels = [0] * m

    def extend(i: int, used: int) -> None:
        if i == m:
            blocks: list[list[str]] = [[] for _ in range(used)]
            for pos, lab in enumerate(labels):
                blocks[lab].append(elems[pos])
            out.append(Partition(tuple(tuple(b) for b in blocks)))
            return
        for lab in range(used + 1):
            labels[i] = lab
            extend(i + 1, max(used, lab + 1))

    extend(1, 1)
    return out


def merge(p: Partition, q: Partition) -> Partition:
    """Finest common coarsening of two partitions of the same ground set."""
    gp, gq = p.ground_set(), q.ground_set()
    if gp != gq:
        raise QrelnetError("cannot merge partitions of different ground sets", code="ground_set_mismatch")
    elems = sorted(gp)
    index = {v: i for i, v in enumerate(elems)}
    parent = list(range(len(elems)))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for part in (p, q):
        for block in part.blocks:
            root = find(index[block[0]])
            for v in block[1:]:
                r = find(index[v])
                if r != root:
                    parent[r] = root
    groups: dict[int, list[str]] = {}
    for v in elems:
        groups.setdefault(find(index[v]), []).append(v)
    return Partition(tuple(tuple(g) for g in groups.values()))


def _labels(p: Partition, index: dict[str, int]) -> list[int]:
    lab = [0] * len(index)
    for b, block in enumerate(p.blocks):
        for v in block:
            lab[index[v]] = b
    return lab


def _merge_is_single_block(lab_p: list[int], lab_q: list[int], m: int) -> bool:
    # Union-find over element indices, driven by both label vectors.
    parent = list(range(m))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for labels in (lab_p, lab_q):
        first: dict[int, int] = {}
        for i, lab in enumerate(labels):
            if lab in first:
                ra, rb = find(first[lab]), find(i)
                if ra != rb:
                    parent[rb] = ra
            else:
                first[lab] = i
    root = find(0)
    return all(find(i) == root for i in range(1, m))


@dataclass(frozen=True)
class ConnectivityMatrix:
    """Partition order, 0/1 connectivity matrix alpha, and its exact inverse beta."""

    order: tuple[Partition, ...]
    alpha: tuple[tuple[int, ...], ...]
    beta: tuple[tuple[Fraction, ...], ...]

    def index_of(self, p: Partition) -> int:
        return self.order.index(p)


def bell_number(m: int) -> int:
    """Number of partitions of an m-element set."""
    if m < 0:
        raise QrelnetError("bell_number needs a non-negative argument", code="invalid_input")
    row = [1]
    for _ in range(m):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def _invert_exact(alpha: list[list[int]]) -> list[list[Fraction]]:
    """Exact inverse of an integer matrix by one-step fraction-free elimination.

    Works on the augmented matrix [alpha | I] keeping every entry an integer;
    each elimination step divides by the previous pivot, which the one-step
    recurrence guarantees to be exact.  The inverse entry is then the
    right-half entry over the row's diagonal entry.
    """
    n = len(alpha)
    m = [[*row, *(int(i == j) for j in range(n))] for i, row in enumerate(alpha)]
    prev = 1
    for k in range(n):
        piv = next((r for r in range(k, n) if m[r][k] != 0), None)
        if piv is None:
            raise QrelnetError("connectivity matrix is singular", code="singular_matrix")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        pivot = m[k][k]
        row_k = m[k]
        for i in range(n):
            if i == k:
                continue
            row_i = m[i]
            f = row_i[k]
            m[i] = [(pivot * x - f * y) // prev for x, y in zip(row_i, row_k)]
            m[i][k] = 0
        prev = pivot
    return [[Fraction(m[i][n + j], m[i][i]) for j in range(n)] for i in range(n)]


def matrix_for_order(parts) -> ConnectivityMatrix:
    """Connectivity matrix and exact inverse for an explicit partition order.

    ``parts`` must list every partition of one ground set exactly once; any
    ordering is accepted, so reference orderings can be reproduced verbatim.
    """
    parts = tuple(parts)
    if not parts:
        raise QrelnetError("empty partition order", code="invalid_partition")
    ground = parts[0].ground_set()
    m = len(ground)
    if m > MAX_MATRIX_GROUND_SET:
        raise CapacityError(f"connectivity matrix capped at {MAX_MATRIX_GROUND_SET} elements, got {m}")
    for p in parts:
        if p.ground_set() != ground:
            raise QrelnetError("partition order mixes ground sets", code="ground_set_mismatch")
    if len(set(parts)) != len(parts) or len(parts) != bell_number(m):
        raise QrelnetError("partition order must list every partition exactly once", code="invalid_partition")

    elems = sorted(ground)
    index = {v: i for i, v in enumerate(elems)}
    labels = [_labels(p, index) for p in parts]
    n = len(parts)
    alpha = [[1 if _merge_is_single_block(labels[i], labels[j], m) else 0 for j in range(n)] for i in range(n)]
    beta = _invert_exact(alpha)

    # Cheap exactness probe: alpha @ (beta @ x) must reproduce x.
    x = list(range(1, n + 1))
    bx = [sum(beta[i][j] * x[j] for j in range(n)) for i in range(n)]
    abx = [sum(bx[j] for j in range(n) if alpha[i][j]) for i in range(n)]
    if abx != x:
        raise QrelnetError("inverse verification failed", code="singular_matrix")

    return ConnectivityMatrix(
        parts,
        tuple(tuple(row) for row in alpha),
        tuple(tuple(row) for row in beta),
    )


def connectivity_matrix(u) -> ConnectivityMatrix:
    """Connectivity matrix over all partitions of ``u`` in canonical order."""
    elems = set(u)
    if not 1 <= len(elems) <= MAX_MATRIX_GROUND_SET:
        raise CapacityError(
            f"connectivity matrix needs between 1 and {MAX_MATRIX_GROUND_SET} elements, got {len(elems)}"
        )
    return matrix_for_order(enumerate_partitions(elems))


def beta_identities_check(cm: ConnectivityMatrix) -> bool:
    """Check the two exact identities satisfied by the inverse weights.

    The row of the single-block partition is the indicator of the
    all-singletons partition, and every row sums to zero except that same
    single-block row, which sums to one.
    """
    ground = cm.order[0].ground_set()
    t = single_block(ground)
    f = singletons(ground)
    ti = cm.index_of(t)
    fi = cm.index_of(f)
    n = len(cm.order)
    row_ok = all(cm.beta[ti][j] == (1 if j == fi else 0) for j in range(n))
    sums_ok = all(sum(cm.beta[i]) == (1 if i == ti else 0) for i in range(n))
    return row_ok and sums_ok
