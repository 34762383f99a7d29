"""Pure-Python model enumeration kernels (fallback for ``_kernels``).

Quantifier codes: A P T K I E B D G O -> 0..9. A statement row is
``(code, subject_index, predicate_index, negated)``. A model over k terms is
a tuple of k nonempty bitmasks over a universe of m elements.

Enumeration order: m = 1, 2, ...; then masks in increasing numeric order,
the first term being the most significant digit.
"""

from itertools import product

N_CODES = 10
ALL_CODES = (1 << N_CODES) - 1


def truth_mask(c, n, fn, fd):
    """Bitmask of the codes true when |X & Y| = c and |X| = n > 0, f = fn/fd."""
    lo = (fd - fn) * n  # (1 - f) * n * fd
    hi = fn * n         # f * n * fd
    cf = c * fd
    mask = 0
    if c == n:
        mask |= 1 << 0
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


def holds(row, masks, fn, fd):
    code, s, p, negated = row
    x = masks[s]
    c = (x & masks[p]).bit_count()
    n = x.bit_count()
    value = bool(truth_mask(c, n, fn, fd) >> code & 1)
    return value != bool(negated)


def first_countermodel(n_terms, premises, conclusion, max_universe, fn, fd):
    """First model where every premise holds and the conclusion fails.

    Returns ``(m, masks)`` or None.
    """
    premises = [tuple(r) for r in premises]
    conclusion = tuple(conclusion)
    for m in range(1, max_universe + 1):
        full = (1 << m) - 1
        for masks in product(range(1, full + 1), repeat=n_terms):
            if all(holds(r, masks, fn, fd) for r in premises) \
                    and not holds(conclusion, masks, fn, fd):
                return m, masks
    return None


def mood_table(pairs, max_universe, fn, fd):
    """Valid conclusions for every premise-quantifier pair over three terms.

    ``pairs`` gives the (subject, predicate) term indices of the first
    premise, the second premise and the conclusion. Returns ``(valid, seen)``
    as flat lists of length 100 indexed ``q1 * 10 + q2``: ``valid`` holds the
    mask of conclusion codes true in every model satisfying both premises,
    ``seen`` whether any model satisfies them.
    """
    (s1, p1), (s2, p2), (sc, pc) = pairs
    valid = [ALL_CODES] * (N_CODES * N_CODES)
    seen = [False] * (N_CODES * N_CODES)
    bits = [[q for q in range(N_CODES) if mask >> q & 1] for mask in range(1 << N_CODES)]
    for m in range(1, max_universe + 1):
        full = (1 << m) - 1
        for masks in product(range(1, full + 1), repeat=3):
            t1 = truth_mask((masks[s1] & masks[p1]).bit_count(), masks[s1].bit_count(), fn, fd)
            t2 = truth_mask((masks[s2] & masks[p2]).bit_count(), masks[s2].bit_count(), fn, fd)
            tc = truth_mask((masks[sc] & masks[pc]).bit_count(), masks[sc].bit_count(), fn, fd)
            for q1 in bits[t1]:
                base = q1 * N_CODES
                for q2 in bits[t2]:
                    valid[base + q2] &= tc
                    seen[base + q2] = True
    return valid, seen
