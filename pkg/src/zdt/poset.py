"""Finite posets, carrier subsets as bitmasks, and the basic order operators.

Conventions used throughout the package:

* a poset element is its carrier index ``0..n-1``;
* a subset of the carrier is an int mask with bit ``i`` for element ``i``;
* ``P.up[i]`` is the mask of ``{j : i <= j}``, ``P.down[i]`` of ``{j : j <= i}``.

Everything is immutable after construction and safe to share.
"""

from __future__ import annotations

import re
import string
from functools import lru_cache

from zdt import kernels
from zdt.errors import (
    AntisymmetryError,
    DuplicateLabelError,
    EmptyInputError,
    NotASubsetError,
    NotMonotoneError,
    SizeCapError,
    UnknownElementError,
    UnknownLabelError,
)

LABEL_RE = re.compile(r"[A-Za-z0-9_]+\Z")

ENUM_CAP = 6
CANONICAL_CAP = 7
FINP_CAP = 12


def default_labels(n):
    if n <= 26:
        return tuple(string.ascii_lowercase[:n])
    return tuple(f"x{i}" for i in range(n))


class FinitePoset:
    """An immutable finite poset over labeled elements.

    ``leq_rows[i]`` has bit ``j`` set when element ``i <= j``.  The relation is
    validated to be reflexive, antisymmetric and transitive unless the caller
    vouches for it with ``_trusted``.
    """

    __slots__ = ("n", "labels", "up", "down", "_hash", "_index")

    def __init__(self, labels, leq_rows, *, _trusted=False):
        labels = tuple(labels)
        up = tuple(leq_rows)
        n = len(labels)
        if len(up) != n:
            raise ValueError("labels and relation rows disagree in length")
        if len(set(labels)) != n:
            raise DuplicateLabelError(f"duplicate labels in {labels}")
        for lbl in labels:
            if not LABEL_RE.match(lbl):
                raise UnknownLabelError(f"bad label {lbl!r}")
        if not _trusted and not kernels.is_partial_order(n, up):
            raise AntisymmetryError("relation is not a partial order")
        down = [0] * n
        for i in range(n):
            row = up[i]
            while row:
                lsb = row & -row
                row ^= lsb
                down[lsb.bit_length() - 1] |= 1 << i
        self.n = n
        self.labels = labels
        self.up = up
        self.down = tuple(down)
        self._hash = hash((labels, up))
        self._index = {lbl: i for i, lbl in enumerate(labels)}

    # -- basics --------------------------------------------------------

    @property
    def full(self):
        return (1 << self.n) - 1

    def leq(self, i, j):
        return bool((self.up[i] >> j) & 1)

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown label {label!r}") from None

    def mask_of(self, names):
        m = 0
        for name in names:
            m |= 1 << self.index(name)
        return m

    def names(self, mask):
        return tuple(self.labels[i] for i in bits(mask))

    def __eq__(self, other):
        return (
            isinstance(other, FinitePoset)
            and self.labels == other.labels
            and self.up == other.up
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rels = [
            f"{self.labels[i]}<{self.labels[j]}"
            for i in range(self.n)
            for j in bits(self.up[i] & ~(1 << i))
        ]
        return f"FinitePoset({list(self.labels)}, [{', '.join(rels)}])"


class Subposet:
    """A carrier subset with the restricted order and its embedding."""

    __slots__ = ("parent", "carrier", "poset", "embed")

    def __init__(self, parent, carrier_mask):
        if carrier_mask & ~parent.full:
            raise NotASubsetError("carrier not a subset of the parent")
        embed = tuple(bits(carrier_mask))
        rows = []
        for k, i in enumerate(embed):
            row = 0
            for l, j in enumerate(embed):
                if parent.leq(i, j):
                    row |= 1 << l
            rows.append(row)
        self.parent = parent
        self.carrier = carrier_mask
        self.embed = embed
        self.poset = FinitePoset(
            tuple(parent.labels[i] for i in embed), rows, _trusted=True
        )

    def to_parent(self, mask):
        out = 0
        for k in bits(mask):
            out |= 1 << self.embed[k]
        return out

    def to_sub(self, parent_mask):
        out = 0
        for k, i in enumerate(self.embed):
            if (parent_mask >> i) & 1:
                out |= 1 << k
        return out


class FinP:
    """All nonempty upper sets ``↑F`` of a poset, ordered by reverse inclusion."""

    __slots__ = ("base", "sets", "poset", "index")

    def __init__(self, base, cap=FINP_CAP):
        if base.n == 0:
            raise EmptyInputError("Fin P needs a nonempty poset")
        if base.n > cap:
            raise SizeCapError("fin_poset", base.n, cap)
        filters = [m for m in kernels.order_ideals(base.n, base.down, base.up) if m]
        rows = []
        for u in filters:
            row = 0
            for j, v in enumerate(filters):
                if v & ~u == 0:  # ↑G <= ↑F iff ↑F ⊆ ↑G
                    row |= 1 << j
            rows.append(row)
        labels = tuple(
            "u_" + "_".join(base.names(min_of_upset(base, u))) for u in filters
        )
        self.base = base
        self.sets = tuple(filters)
        self.poset = FinitePoset(labels, rows, _trusted=True)
        self.index = {m: i for i, m in enumerate(filters)}


class MonotoneMap:
    """A total order-preserving function table between two finite posets."""

    __slots__ = ("dom", "cod", "table", "_hash")

    def __init__(self, dom, cod, table, *, _trusted=False):
        table = tuple(table)
        if len(table) != dom.n:
            raise NotMonotoneError("table length disagrees with the domain")
        if not _trusted:
            for v in table:
                if not 0 <= v < cod.n:
                    raise UnknownElementError(f"table value {v} outside codomain")
            for i in range(dom.n):
                for j in bits(dom.up[i]):
                    if not cod.leq(table[i], table[j]):
                        raise NotMonotoneError(
                            f"{dom.labels[i]}<={dom.labels[j]} broken by the table"
                        )
        self.dom = dom
        self.cod = cod
        self.table = table
        self._hash = hash((dom, cod, table))

    def __call__(self, i):
        return self.table[i]

    def image(self, mask):
        out = 0
        for i in bits(mask):
            out |= 1 << self.table[i]
        return out

    def preimage(self, mask):
        out = 0
        for i, v in enumerate(self.table):
            if (mask >> v) & 1:
                out |= 1 << i
        return out

    def compose(self, other):
        """self ∘ other (apply ``other`` first)."""
        if other.cod is not self.dom and other.cod != self.dom:
            raise NotMonotoneError("composition domains disagree")
        return MonotoneMap(
            other.dom, self.cod, tuple(self.table[v] for v in other.table),
            _trusted=True,
        )

    @classmethod
    def identity(cls, P):
        return cls(P, P, tuple(range(P.n)), _trusted=True)

    def __eq__(self, other):
        return (
            isinstance(other, MonotoneMap)
            and self.dom == other.dom
            and self.cod == other.cod
            and self.table == other.table
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        pairs = ", ".join(
            f"{self.dom.labels[i]}↦{self.cod.labels[v]}"
            for i, v in enumerate(self.table)
        )
        return f"MonotoneMap({pairs})"


# -- constructors ------------------------------------------------------


def from_order_pairs(labels, pairs):
    """Build a poset from asserted ``x <= y`` pairs, closing transitively.

    Cycles surface as AntisymmetryError; unknown or duplicate labels are hard
    errors as well.
    """
    labels = tuple(labels)
    if len(set(labels)) != len(labels):
        raise DuplicateLabelError(f"duplicate labels in {labels}")
    idx = {lbl: i for i, lbl in enumerate(labels)}
    rows = [1 << i for i in range(len(labels))]
    for a, b in pairs:
        if a not in idx:
            raise UnknownLabelError(f"unknown label {a!r} in order pair")
        if b not in idx:
            raise UnknownLabelError(f"unknown label {b!r} in order pair")
        rows[idx[a]] |= 1 << idx[b]
    closed = kernels.transitive_closure(len(labels), rows)
    for i in range(len(labels)):
        for j in bits(closed[i] & ~(1 << i)):
            if (closed[j] >> i) & 1:
                raise AntisymmetryError(
                    f"asserted pairs force a cycle through {labels[i]} and {labels[j]}"
                )
    return FinitePoset(labels, closed, _trusted=True)


def dual(P):
    """The opposite poset on the same labels."""
    return FinitePoset(P.labels, P.down, _trusted=True)


def restrict(P, mask):
    return Subposet(P, mask)


def principal_down_subposet(P, x):
    if not 0 <= x < P.n:
        raise UnknownElementError(f"element index {x} out of range")
    return Subposet(P, P.down[x])


def fin_poset(P, cap=FINP_CAP):
    return FinP(P, cap=cap)


# -- subset operators --------------------------------------------------


def bits(mask):
    while mask:
        lsb = mask & -mask
        mask ^= lsb
        yield lsb.bit_length() - 1


def _check_subset(P, mask):
    if mask & ~P.full:
        raise NotASubsetError(f"mask {bin(mask)} outside carrier of size {P.n}")


def up_set(P, mask):
    _check_subset(P, mask)
    out = 0
    for i in bits(mask):
        out |= P.up[i]
    return out


def down_set(P, mask):
    _check_subset(P, mask)
    out = 0
    for i in bits(mask):
        out |= P.down[i]
    return out


def upper_bounds(P, mask):
    _check_subset(P, mask)
    out = P.full
    for i in bits(mask):
        out &= P.up[i]
    return out


def lower_bounds(P, mask):
    _check_subset(P, mask)
    out = P.full
    for i in bits(mask):
        out &= P.down[i]
    return out


def cut(P, mask):
    """E^ul: lower bounds of the upper bounds (equals ↓sup E when sup exists)."""
    return lower_bounds(P, upper_bounds(P, mask))


def relative_cut(P, e_mask, a_mask):
    """Cut of E relative to an ambient subset A containing it."""
    _check_subset(P, a_mask)
    if e_mask & ~a_mask:
        raise NotASubsetError("E must be a subset of A")
    bound = upper_bounds(P, e_mask) & a_mask
    out = a_mask
    for m in bits(bound):
        out &= P.down[m]
    return out


def least_of(P, mask):
    """The least element of a subset, or None."""
    for i in bits(mask):
        if mask & ~P.up[i] == 0:
            return i
    return None


def greatest_of(P, mask):
    for i in bits(mask):
        if mask & ~P.down[i] == 0:
            return i
    return None


def sup_of(P, mask):
    """Least upper bound if it exists, else None (sup ∅ is the bottom, if any)."""
    return least_of(P, upper_bounds(P, mask))


def inf_of(P, mask):
    return greatest_of(P, lower_bounds(P, mask))


def min_of_upset(P, mask):
    """Minimal elements of a nonempty set F; generates the same ↑F."""
    if mask == 0:
        raise EmptyInputError("min(↑F) needs a nonempty F")
    _check_subset(P, mask)
    out = 0
    for i in bits(mask):
        if P.down[i] & mask & ~(1 << i) == 0:
            out |= 1 << i
    return out


def max_of(P, mask):
    out = 0
    for i in bits(mask):
        if P.up[i] & mask & ~(1 << i) == 0:
            out |= 1 << i
    return out


def is_lower_set(P, mask):
    return down_set(P, mask) == mask if mask else True


def is_upper_set(P, mask):
    return up_set(P, mask) == mask if mask else True


def is_filtered(P, mask):
    """Nonempty and every pair has a lower bound inside the subset."""
    if mask == 0:
        return False
    _check_subset(P, mask)
    elems = list(bits(mask))
    for a in range(len(elems)):
        da = P.down[elems[a]]
        for b in range(a, len(elems)):
            if not (da & P.down[elems[b]] & mask):
                return False
    return True


def covers(P):
    """Cover pairs (i, j) of the transitive reduction, lexicographic order."""
    out = []
    for i in range(P.n):
        strictly_up = P.up[i] & ~(1 << i)
        for j in bits(strictly_up):
            between = strictly_up & P.down[j] & ~(1 << j)
            if between == 0:
                out.append((i, j))
    return out


# -- enumeration -------------------------------------------------------


def canonical_form(P):
    """Representative poset of P's isomorphism class, canonically labeled."""
    if P.n > CANONICAL_CAP:
        raise SizeCapError("canonical_form", P.n, CANONICAL_CAP)
    key = kernels.canonical_key(P.n, P.up)
    return FinitePoset(default_labels(P.n), key, _trusted=True)


def are_isomorphic(P, Q):
    if P.n != Q.n:
        return False
    if P.n > CANONICAL_CAP:
        raise SizeCapError("are_isomorphic", P.n, CANONICAL_CAP)
    return kernels.canonical_key(P.n, P.up) == kernels.canonical_key(Q.n, Q.up)


def enumerate_posets(n, mode="up_to_iso", cap=ENUM_CAP):
    """Yield the labeled posets on n points, or one poset per iso class."""
    if not 1 <= n <= cap:
        raise SizeCapError("enumerate_posets", n, cap)
    if mode not in ("labeled", "up_to_iso"):
        raise ValueError(f"unknown mode {mode!r}")
    labels = default_labels(n)
    rows_list = _labeled_orders(n)
    if mode == "labeled":
        for rows in rows_list:
            yield FinitePoset(labels, rows, _trusted=True)
        return
    for rows in _iso_representatives(n):
        yield FinitePoset(labels, rows, _trusted=True)


@lru_cache(maxsize=8)
def _labeled_orders(n):
    return kernels.enumerate_labeled_orders(n)


@lru_cache(maxsize=8)
def _iso_representatives(n):
    return sorted({kernels.canonical_key(n, rows) for rows in _labeled_orders(n)})


def count_posets(n, mode="up_to_iso", cap=ENUM_CAP):
    if not 1 <= n <= cap:
        raise SizeCapError("count_posets", n, cap)
    return len(_labeled_orders(n) if mode == "labeled" else _iso_representatives(n))


def enumerate_monotone_maps(P, Q, cap=ENUM_CAP + 2):
    """All monotone tables P -> Q, in lexicographic table order."""
    if P.n > cap or Q.n > cap:
        raise SizeCapError("enumerate_monotone_maps", max(P.n, Q.n), cap)
    if P.n == 0:
        yield MonotoneMap(P, Q, (), _trusted=True)
        return
    table = [0] * P.n

    def fits(i, v):
        for j in range(i):
            if P.leq(j, i) and not Q.leq(table[j], v):
                return False
            if P.leq(i, j) and not Q.leq(v, table[j]):
                return False
        return True

    def rec(i):
        if i == P.n:
            yield MonotoneMap(P, Q, tuple(table), _trusted=True)
            return
        for v in range(Q.n):
            if fits(i, v):
                table[i] = v
                yield from rec(i + 1)

    yield from rec(0)


def enumerate_order_embeddings(P, Q, cap=ENUM_CAP + 2):
    """All maps P -> Q with x <= y iff f(x) <= f(y)."""
    if P.n > cap or Q.n > cap:
        raise SizeCapError("enumerate_order_embeddings", max(P.n, Q.n), cap)
    table = [0] * P.n

    def fits(i, v):
        for j in range(i):
            w = table[j]
            if w == v:
                return False
            if P.leq(j, i) != Q.leq(w, v) or P.leq(i, j) != Q.leq(v, w):
                return False
        return True

    def rec(i):
        if i == P.n:
            yield MonotoneMap(P, Q, tuple(table), _trusted=True)
            return
        for v in range(Q.n):
            if fits(i, v):
                table[i] = v
                yield from rec(i + 1)

    yield from rec(0)
