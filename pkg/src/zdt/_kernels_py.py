"""Pure-Python bitset kernels.

All hot inner loops of the workbench live behind this small surface so the
compiled twin (`zdt._ckernels`) can replace them wholesale.  A poset is passed
around as ``(n, up, down)`` where ``up[i]`` is the bitmask of ``{j : i <= j}``
and ``down[i]`` the bitmask of ``{j : j <= i}``.  Subsets of the carrier are
plain ints with bit ``i`` standing for element ``i``.

Both kernel twins must produce identical values (ordering included); the test
suite enforces parity.
"""

from itertools import permutations

BACKEND = "python"

SYS_SINGLETONS = 0
SYS_CHAINS = 1
SYS_DIRECTED = 2
SYS_FINITE = 3
SYS_CONNECTED = 4


def transitive_closure(n, rows):
    """Reflexive-transitive closure of an arbitrary relation given as row masks."""
    out = [rows[i] | (1 << i) for i in range(n)]
    for k in range(n):
        bit = 1 << k
        rk = out[k]
        for i in range(n):
            if out[i] & bit:
                out[i] |= rk
    return tuple(out)


def is_partial_order(n, rows):
    """Reflexivity, antisymmetry and transitivity of row-mask relation."""
    for i in range(n):
        if not (rows[i] >> i) & 1:
            return False
    for i in range(n):
        ri = rows[i]
        t = ri & ~(1 << i)
        while t:
            lsb = t & -t
            t ^= lsb
            j = lsb.bit_length() - 1
            if (rows[j] >> i) & 1:
                return False
            if rows[j] & ~ri:
                return False
    return True


def canonical_key(n, rows):
    """Lexicographically minimal relabeling of the order matrix.

    Minimizes the tuple of row masks over all permutations; the result is a
    complete isomorphism invariant for labeled posets.
    """
    best = None
    for perm in permutations(range(n)):
        new = [0] * n
        for i in range(n):
            acc = 0
            t = rows[i]
            while t:
                lsb = t & -t
                t ^= lsb
                acc |= 1 << perm[lsb.bit_length() - 1]
            new[perm[i]] = acc
        key = tuple(new)
        if best is None or key < best:
            best = key
    return best


def enumerate_labeled_orders(n):
    """All partial orders on n labeled points, as sorted tuples of row masks.

    Every poset admits a linear extension, so each one arises from some
    transitively closed upper-triangular matrix under some relabeling; the
    set below therefore covers every labeled order exactly once.
    """
    if n == 0:
        return [()]
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    m = len(pairs)
    seen = set()
    for sel in range(1 << m):
        rows = [1 << i for i in range(n)]
        for k in range(m):
            if (sel >> k) & 1:
                i, j = pairs[k]
                rows[i] |= 1 << j
        ok = True
        for i in range(n):
            t = rows[i] & ~(1 << i)
            while t:
                lsb = t & -t
                t ^= lsb
                if rows[lsb.bit_length() - 1] & ~rows[i]:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            continue
        for perm in permutations(range(n)):
            new = [0] * n
            for i in range(n):
                acc = 0
                t = rows[i]
                while t:
                    lsb = t & -t
                    t ^= lsb
                    acc |= 1 << perm[lsb.bit_length() - 1]
                new[perm[i]] = acc
            seen.add(tuple(new))
    return sorted(seen)


def _bits(mask):
    while mask:
        lsb = mask & -mask
        mask ^= lsb
        yield lsb.bit_length() - 1


def z_contains(sys_id, n, up, down, mask):
    """Membership of a nonempty carrier subset in the given subset system."""
    if mask == 0:
        return False
    if sys_id == SYS_FINITE:
        return True
    if sys_id == SYS_SINGLETONS:
        return mask & (mask - 1) == 0
    if sys_id == SYS_CHAINS:
        for i in _bits(mask):
            if mask & ~(up[i] | down[i]):
                return False
        return True
    if sys_id == SYS_DIRECTED:
        elems = list(_bits(mask))
        for a in range(len(elems)):
            ua = up[elems[a]]
            for b in range(a, len(elems)):
                if not (ua & up[elems[b]] & mask):
                    return False
        return True
    if sys_id == SYS_CONNECTED:
        start = mask & -mask
        comp = start
        frontier = start
        while frontier:
            nxt = 0
            for i in _bits(frontier):
                nxt |= (up[i] | down[i]) & mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp == mask
    raise ValueError(f"unknown system id {sys_id}")


def z_member_masks(sys_id, n, up, down):
    """All members of Z(P), ascending by mask value."""
    full = (1 << n) - 1
    if sys_id == SYS_FINITE:
        return list(range(1, full + 1))
    if sys_id == SYS_SINGLETONS:
        return [1 << i for i in range(n)]
    if sys_id == SYS_DIRECTED:
        # a finite subset is directed iff it contains a maximum, which is unique
        out = []
        for m in range(n):
            base = down[m] & ~(1 << m)
            top = 1 << m
            sub = base
            while True:
                out.append(sub | top)
                if sub == 0:
                    break
                sub = (sub - 1) & base
        out.sort()
        return out
    if sys_id == SYS_CHAINS:
        # grow each chain along its unique increasing enumeration
        out = []
        stack = [(1 << i, i) for i in range(n - 1, -1, -1)]
        while stack:
            mask, last = stack.pop()
            out.append(mask)
            t = up[last] & ~(1 << last)
            for j in _bits(t):
                stack.append((mask | (1 << j), j))
        out.sort()
        return out
    if sys_id == SYS_CONNECTED:
        return [m for m in range(1, full + 1) if z_contains(sys_id, n, up, down, m)]
    raise ValueError(f"unknown system id {sys_id}")


def order_ideals(n, up, down):
    """All lower sets of the poset, ascending by mask value."""
    ideals = [0]
    for x in _topo_order(n, up):
        need = down[x] & ~(1 << x)
        bit = 1 << x
        ideals.extend([i | bit for i in ideals if need & ~i == 0])
    ideals.sort()
    return ideals


def _topo_order(n, up):
    # ascending by number of elements above; ties by index
    return sorted(range(n), key=lambda i: (-bin(up[i]).count("1"), i))


def absorbing_ideals(ideals, constraints):
    """Filter lower sets A by: for every (s, c), s ⊆ A implies c ⊆ A."""
    out = []
    for a in ideals:
        ok = True
        for s, c in constraints:
            if s & ~a == 0 and c & ~a:
                ok = False
                break
        if ok:
            out.append(a)
    return out

