# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled model enumeration kernels. Same contract as ``_kernels_py``."""

DEF MAX_TERMS = 16
DEF MAX_ROWS = 64
DEF N_CODES = 10

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil


cdef inline int truth_mask(long long c, long long n, long long fn, long long fd) nogil:
    cdef long long lo = (fd - fn) * n
    cdef long long hi = fn * n
    cdef long long cf = c * fd
    cdef int mask = 0
    if c == n:
        mask |= 1
    if cf > hi:
        mask |= 1 << 1
    if 2 * c > n:
        mask |= 1 << 2
    if cf >= lo:
        mask |= 1 << 3
    if c > 0:
        mask |= 1 << 4
    if c == 0:
        mask |= 1 << 5
    if cf < lo:
        mask |= 1 << 6
    if 2 * c <= n:
        mask |= 1 << 7
    if cf <= hi:
        mask |= 1 << 8
    if c < n:
        mask |= 1 << 9
    return mask


cdef inline bint holds(int code, int s, int p, bint negated,
                       unsigned long long *masks, long long fn, long long fd) nogil:
    cdef unsigned long long x = masks[s]
    cdef long long c = __builtin_popcountll(x & masks[p])
    cdef long long n = __builtin_popcountll(x)
    cdef bint value = (truth_mask(c, n, fn, fd) >> code) & 1
    return value != negated


def truth_mask_py(c, n, fn, fd):
    return truth_mask(c, n, fn, fd)


def first_countermodel(int n_terms, premises, conclusion, int max_universe, long long fn, long long fd):
    cdef int rows[MAX_ROWS][4]
    cdef int crow[4]
    cdef unsigned long long masks[MAX_TERMS]
    cdef int n_rows = len(premises)
    cdef int i, j, m
    cdef unsigned long long full
    cdef bint ok

    if n_terms < 1 or n_terms > MAX_TERMS:
        raise ValueError(f"n_terms must be in 1..{MAX_TERMS}")
    if n_rows > MAX_ROWS:
        raise ValueError(f"at most {MAX_ROWS} premises")
    if max_universe > 62:
        raise ValueError("max_universe must be <= 62")
    for i in range(n_rows):
        r = premises[i]
        for j in range(4):
            rows[i][j] = int(r[j])
    for j in range(4):
        crow[j] = int(conclusion[j])

    with nogil:
        for m in range(1, max_universe + 1):
            full = (1ULL << m) - 1
            for i in range(n_terms):
                masks[i] = 1
            while True:
                ok = True
                for i in range(n_rows):
                    if not holds(rows[i][0], rows[i][1], rows[i][2], rows[i][3], masks, fn, fd):
                        ok = False
                        break
                if ok and not holds(crow[0], crow[1], crow[2], crow[3], masks, fn, fd):
                    with gil:
                        return m, tuple([masks[i] for i in range(n_terms)])
                # odometer, last term fastest
                i = n_terms - 1
                while i >= 0:
                    if masks[i] < full:
                        masks[i] += 1
                        break
                    masks[i] = 1
                    i -= 1
                if i < 0:
                    break
    return None


def mood_table(pairs, int max_universe, long long fn, long long fd):
    cdef int s1 = pairs[0][0], p1 = pairs[0][1]
    cdef int s2 = pairs[1][0], p2 = pairs[1][1]
    cdef int sc = pairs[2][0], pc = pairs[2][1]
    cdef int valid[N_CODES * N_CODES]
    cdef int seen[N_CODES * N_CODES]
    cdef unsigned long long masks[3]
    cdef unsigned long long full
    cdef int m, i, q1, q2, t1, t2, tc

    if max_universe > 62:
        raise ValueError("max_universe must be <= 62")
    for i in range(N_CODES * N_CODES):
        valid[i] = (1 << N_CODES) - 1
        seen[i] = 0

    with nogil:
        for m in range(1, max_universe + 1):
            full = (1ULL << m) - 1
            masks[0] = 1
            masks[1] = 1
            masks[2] = 1
            while True:
                t1 = truth_mask(__builtin_popcountll(masks[s1] & masks[p1]),
                                __builtin_popcountll(masks[s1]), fn, fd)
                t2 = truth_mask(__builtin_popcountll(masks[s2] & masks[p2]),
                                __builtin_popcountll(masks[s2]), fn, fd)
                tc = truth_mask(__builtin_popcountll(masks[sc] & masks[pc]),
                                __builtin_popcountll(masks[sc]), fn, fd)
                for q1 in range(N_CODES):
                    if (t1 >> q1) & 1:
                        for q2 in range(N_CODES):
                            if (t2 >> q2) & 1:
                                valid[q1 * N_CODES + q2] &= tc
                                seen[q1 * N_CODES + q2] = 1
                i = 2
                while i >= 0:
                    if masks[i] < full:
                        masks[i] += 1
                        break
                    masks[i] = 1
                    i -= 1
                if i < 0:
                    break

    return [valid[i] for i in range(N_CODES * N_CODES)], \
        [bool(seen[i]) for i in range(N_CODES * N_CODES)]
