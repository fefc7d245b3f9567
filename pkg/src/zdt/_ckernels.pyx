# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled twin of the pure bitset kernels.

Same contracts and identical outputs as ``zdt._kernels_py`` (the test suite
enforces parity); carriers are limited to 63 elements here, which the
dispatcher in ``zdt.kernels`` guarantees.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc, qsort, realloc

BACKEND = "cython"

SYS_SINGLETONS = 0
SYS_CHAINS = 1
SYS_DIRECTED = 2
SYS_FINITE = 3
SYS_CONNECTED = 4

cdef enum:
    MAXN = 64


cdef int _load_rows(object rows, uint64_t *buf, int n) except -1:
    cdef int i
    for i in range(n):
        buf[i] = <uint64_t> rows[i]
    return 0


def transitive_closure(int n, rows):
    cdef uint64_t out[MAXN]
    cdef uint64_t rk
    cdef int i, k
    _load_rows(rows, out, n)
    for i in range(n):
        out[i] |= <uint64_t> 1 << i
    for k in range(n):
        rk = out[k]
        for i in range(n):
            if out[i] & (<uint64_t> 1 << k):
                out[i] |= rk
    return tuple(out[i] for i in range(n))


def is_partial_order(int n, rows):
    cdef uint64_t r[MAXN]
    cdef uint64_t t, lsb
    cdef int i, j
    _load_rows(rows, r, n)
    for i in range(n):
        if not (r[i] >> i) & 1:
            return False
    for i in range(n):
        t = r[i] & ~(<uint64_t> 1 << i)
        while t:
            lsb = t & (~t + 1)
            t ^= lsb
            j = _bit_index(lsb)
            if (r[j] >> i) & 1:
                return False
            if r[j] & ~r[i]:
                return False
    return True


cdef inline int _bit_index(uint64_t lsb):
    cdef int k = 0
    while lsb > 1:
        lsb >>= 1
        k += 1
    return k


cdef void _relabel(int n, uint64_t *rows, int *perm, uint64_t *out):
    cdef int i, j
    cdef uint64_t acc, t, lsb
    for i in range(n):
        acc = 0
        t = rows[i]
        while t:
            lsb = t & (~t + 1)
            t ^= lsb
            acc |= <uint64_t> 1 << perm[_bit_index(lsb)]
        out[perm[i]] = acc


cdef bint _key_less(int n, uint64_t *a, uint64_t *b):
    cdef int i
    for i in range(n):
        if a[i] != b[i]:
            return a[i] < b[i]
    return False


def canonical_key(int n, rows):
    """Minimal row-mask tuple over all relabelings (Heap's algorithm)."""
    cdef uint64_t base[MAXN]
    cdef uint64_t best[MAXN]
    cdef uint64_t cand[MAXN]
    cdef int perm[MAXN]
    cdef int ctr[MAXN]
    cdef int i, k, tmp
    _load_rows(rows, base, n)
    for i in range(n):
        perm[i] = i
        ctr[i] = 0
    _relabel(n, base, perm, best)
    i = 0
    while i < n:
        if ctr[i] < i:
            if i % 2 == 0:
                tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
            else:
                tmp = perm[ctr[i]]; perm[ctr[i]] = perm[i]; perm[i] = tmp
            _relabel(n, base, perm, cand)
            if _key_less(n, cand, best):
                for k in range(n):
                    best[k] = cand[k]
            ctr[i] += 1
            i = 0
        else:
            ctr[i] = 0
            i += 1
    return tuple(best[i] for i in range(n))


def enumerate_labeled_orders(int n):
    """All partial orders on n labeled points, as sorted tuples of row masks."""
    cdef uint64_t rows[MAXN]
    cdef uint64_t relab[MAXN]
    cdef int pi[MAXN]
    cdef int pj[MAXN]
    cdef int perm[MAXN]
    cdef int ctr[MAXN]
    cdef uint64_t sel, t, lsb
    cdef unsigned long long nsel
    cdef int i, j, k, m, tmp
    cdef bint ok
    if n == 0:
        return [()]
    m = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[m] = i
            pj[m] = j
            m += 1
    seen = set()
    nsel = <unsigned long long> 1 << m
    for sel in range(nsel):
        for i in range(n):
            rows[i] = <uint64_t> 1 << i
        for k in range(m):
            if (sel >> k) & 1:
                rows[pi[k]] |= <uint64_t> 1 << pj[k]
        ok = True
        for i in range(n):
            if not ok:
                break
            t = rows[i] & ~(<uint64_t> 1 << i)
            while t:
                lsb = t & (~t + 1)
                t ^= lsb
                if rows[_bit_index(lsb)] & ~rows[i]:
                    ok = False
                    break
        if not ok:
            continue
        for i in range(n):
            perm[i] = i
            ctr[i] = 0
        _relabel(n, rows, perm, relab)
        seen.add(tuple(relab[i] for i in range(n)))
        i = 0
        while i < n:
            if ctr[i] < i:
                if i % 2 == 0:
                    tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
                else:
                    tmp = perm[ctr[i]]; perm[ctr[i]] = perm[i]; perm[i] = tmp
                _relabel(n, rows, perm, relab)
                seen.add(tuple(relab[i] for i in range(n)))
                ctr[i] += 1
                i = 0
            else:
                ctr[i] = 0
                i += 1
    return sorted(seen)


cdef bint _contains(int sys_id, int n, uint64_t *up, uint64_t *down, uint64_t mask):
    cdef uint64_t t, lsb, comp, frontier, nxt, ua
    cdef int i, j, a, b, ne
    cdef int elems[MAXN]
    if mask == 0:
        return False
    if sys_id == SYS_FINITE:
        return True
    if sys_id == SYS_SINGLETONS:
        return (mask & (mask - 1)) == 0
    if sys_id == SYS_CHAINS:
        t = mask
        while t:
            lsb = t & (~t + 1)
            t ^= lsb
            i = _bit_index(lsb)
            if mask & ~(up[i] | down[i]):
                return False
        return True
    if sys_id == SYS_DIRECTED:
        ne = 0
        t = mask
        while t:
            lsb = t & (~t + 1)
            t ^= lsb
            elems[ne] = _bit_index(lsb)
            ne += 1
        for a in range(ne):
            ua = up[elems[a]]
            for b in range(a, ne):
                if not (ua & up[elems[b]] & mask):
                    return False
        return True
    if sys_id == SYS_CONNECTED:
        frontier = mask & (~mask + 1)
        comp = frontier
        while frontier:
            nxt = 0
            t = frontier
            while t:
                lsb = t & (~t + 1)
                t ^= lsb
                i = _bit_index(lsb)
                nxt |= (up[i] | down[i]) & mask & ~comp
            comp |= nxt
            frontier = nxt
        return comp == mask
    raise ValueError(f"unknown system id {sys_id}")


def z_contains(int sys_id, int n, up, down, mask):
    cdef uint64_t u[MAXN]
    cdef uint64_t d[MAXN]
    _load_rows(up, u, n)
    _load_rows(down, d, n)
    return bool(_contains(sys_id, n, u, d, <uint64_t> mask))


cdef int _cmp_u64(const void *a, const void *b) noexcept nogil:
    cdef uint64_t x = (<const uint64_t *> a)[0]
    cdef uint64_t y = (<const uint64_t *> b)[0]
    if x < y:
        return -1
    if x > y:
        return 1
    return 0


cdef class _Buf:
    cdef uint64_t *data
    cdef size_t size, cap

    def __cinit__(self):
        self.cap = 1024
        self.size = 0
        self.data = <uint64_t *> malloc(self.cap * sizeof(uint64_t))
        if self.data == NULL:
            raise MemoryError

    cdef int push(self, uint64_t v) except -1:
        if self.size == self.cap:
            self.cap *= 2
            self.data = <uint64_t *> realloc(self.data, self.cap * sizeof(uint64_t))
            if self.data == NULL:
                raise MemoryError
        self.data[self.size] = v
        self.size += 1
        return 0

    cdef list tolist_sorted(self):
        qsort(self.data, self.size, sizeof(uint64_t), _cmp_u64)
        cdef size_t i
        return [self.data[i] for i in range(self.size)]

    cdef list tolist(self):
        cdef size_t i
        return [self.data[i] for i in range(self.size)]

    def __dealloc__(self):
        if self.data != NULL:
            free(self.data)


def z_member_masks(int sys_id, int n, up, down):
    cdef uint64_t u[MAXN]
    cdef uint64_t d[MAXN]
    cdef uint64_t full, base, sub, top, mask
    cdef uint64_t stack_mask[4096]
    cdef int stack_last[4096]
    cdef int sp, m, j, last
    cdef uint64_t t, lsb
    cdef _Buf buf = _Buf()
    _load_rows(up, u, n)
    _load_rows(down, d, n)
    full = (<uint64_t> 1 << n) - 1
    if sys_id == SYS_FINITE:
        return list(range(1, <unsigned long long> full + 1))
    if sys_id == SYS_SINGLETONS:
        return [<unsigned long long> 1 << i for i in range(n)]
    if sys_id == SYS_DIRECTED:
        for m in range(n):
            top = <uint64_t> 1 << m
            base = d[m] & ~top
            sub = base
            while True:
                buf.push(sub | top)
                if sub == 0:
                    break
                sub = (sub - 1) & base
        return buf.tolist_sorted()
    if sys_id == SYS_CHAINS:
        sp = 0
        for m in range(n - 1, -1, -1):
            stack_mask[sp] = <uint64_t> 1 << m
            stack_last[sp] = m
            sp += 1
        while sp:
            sp -= 1
            mask = stack_mask[sp]
            last = stack_last[sp]
            buf.push(mask)
            t = u[last] & ~(<uint64_t> 1 << last)
            while t:
                lsb = t & (~t + 1)
                t ^= lsb
                j = _bit_index(lsb)
                stack_mask[sp] = mask | lsb
                stack_last[sp] = j
                sp += 1
        return buf.tolist_sorted()
    if sys_id == SYS_CONNECTED:
        for mask in range(1, <unsigned long long> full + 1):
            if _contains(SYS_CONNECTED, n, u, d, mask):
                buf.push(mask)
        return buf.tolist()
    raise ValueError(f"unknown system id {sys_id}")


def order_ideals(int n, up, down):
    cdef uint64_t u[MAXN]
    cdef uint64_t d[MAXN]
    cdef int order[MAXN]
    cdef int cnt[MAXN]
    cdef int i, j, x, best, tmp
    cdef uint64_t need, bit
    cdef size_t k, old
    cdef _Buf buf = _Buf()
    _load_rows(up, u, n)
    _load_rows(down, d, n)
    # descending number of elements above, ties by index (matches the pure twin)
    for i in range(n):
        order[i] = i
        cnt[i] = 0
        bit = u[i]
        while bit:
            bit &= bit - 1
            cnt[i] += 1
    for i in range(n):
        best = i
        for j in range(i + 1, n):
            if (cnt[order[j]] > cnt[order[best]]) or (
                cnt[order[j]] == cnt[order[best]] and order[j] < order[best]
            ):
                best = j
        tmp = order[i]; order[i] = order[best]; order[best] = tmp
    buf.push(0)
    for i in range(n):
        x = order[i]
        need = d[x] & ~(<uint64_t> 1 << x)
        bit = <uint64_t> 1 << x
        old = buf.size
        for k in range(old):
            if need & ~buf.data[k] == 0:
                buf.push(buf.data[k] | bit)
    return buf.tolist_sorted()


def absorbing_ideals(ideals, constraints):
    cdef size_t ni = len(ideals)
    cdef size_t nc = len(constraints)
    cdef uint64_t *ide = <uint64_t *> malloc(max(ni, 1) * sizeof(uint64_t))
    cdef uint64_t *cs = <uint64_t *> malloc(max(nc, 1) * sizeof(uint64_t))
    cdef uint64_t *cc = <uint64_t *> malloc(max(nc, 1) * sizeof(uint64_t))
    cdef size_t i, j
    cdef uint64_t a
    cdef bint ok
    if ide == NULL or cs == NULL or cc == NULL:
        free(ide); free(cs); free(cc)
        raise MemoryError
    out = []
    try:
        for i in range(ni):
            ide[i] = <uint64_t> ideals[i]
        for j in range(nc):
            cs[j] = <uint64_t> constraints[j][0]
            cc[j] = <uint64_t> constraints[j][1]
        for i in range(ni):
            a = ide[i]
            ok = True
            for j in range(nc):
                if cs[j] & ~a == 0 and cc[j] & ~a:
                    ok = False
                    break
            if ok:
                out.append(a)
    finally:
        free(ide); free(cs); free(cc)
    return out
