# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels: bit-packed stabilizer tableau and decode sweep.

Line-for-line translation of ``_kernels_py``; the two must stay
bit-identical (same lowering, same phase rule, same RNG, same enumeration
order).  ``tests/test_kernels.py`` pins them against each other.
"""

from libc.stdint cimport uint64_t, uint8_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil

BACKEND_NAME = "compiled"
MAX_TABLEAU_QUBITS = 64

OP_H, OP_X, OP_Z, OP_CNOT, OP_CZ = 0, 1, 2, 3, 4

cdef uint64_t MASK64_C = <uint64_t>0xFFFFFFFFFFFFFFFF
cdef uint64_t GAMMA = <uint64_t>0x9E3779B97F4A7C15

MASK64 = 0xFFFFFFFFFFFFFFFF


# -- counter-based RNG (SplitMix64) --------------------------------------

cdef inline uint64_t c_mix64(uint64_t v) nogil:
    v = (v ^ (v >> 30)) * <uint64_t>0xBF58476D1CE4E5B9
    v = (v ^ (v >> 27)) * <uint64_t>0x94D049BB133111EB
    return v ^ (v >> 31)


cdef inline uint64_t c_shot_state(uint64_t seed, uint64_t shot) nogil:
    return c_mix64(c_mix64(seed) ^ (shot + GAMMA))


cdef struct Stream:
    uint64_t state
    uint64_t word
    int bits_left


cdef inline void stream_init(Stream* s, uint64_t seed, uint64_t shot) nogil:
    s.state = c_shot_state(seed, shot)
    s.word = 0
    s.bits_left = 0


cdef inline uint64_t stream_word(Stream* s) nogil:
    s.state += GAMMA
    return c_mix64(s.state)


cdef inline int stream_bit(Stream* s) nogil:
    cdef int bit
    if s.bits_left == 0:
        s.word = stream_word(s)
        s.bits_left = 64
    bit = <int>(s.word & 1)
    s.word >>= 1
    s.bits_left -= 1
    return bit


def mix64(v):
    """Python-visible twin of the C finalizer (test hook)."""
    return int(c_mix64(<uint64_t>(v & MASK64)))


def rng_words(seed, shot_index, count):
    """Test hook: the first `count` raw words of one shot stream."""
    cdef Stream s
    stream_init(&s, <uint64_t>(seed & MASK64), <uint64_t>(shot_index & MASK64))
    return [int(stream_word(&s)) for _ in range(count)]


# -- tableau core ---------------------------------------------------------

cdef inline int phase_sum(uint64_t x1, uint64_t z1, int r1,
                          uint64_t x2, uint64_t z2, int r2,
                          uint64_t full) nogil:
    cdef uint64_t y1 = x1 & z1
    cdef uint64_t xonly = x1 & ~z1
    cdef uint64_t zonly = (~x1) & z1 & full
    cdef int pos = (
        __builtin_popcountll(y1 & z2 & ~x2 & full)
        + __builtin_popcountll(xonly & x2 & z2)
        + __builtin_popcountll(zonly & x2 & ~z2 & full)
    )
    cdef int neg = (
        __builtin_popcountll(y1 & x2 & ~z2 & full)
        + __builtin_popcountll(xonly & z2 & ~x2 & full)
        + __builtin_popcountll(zonly & x2 & z2)
    )
    cdef int s = (2 * r1 + 2 * r2 + pos - neg) % 4
    if s < 0:
        s += 4
    return s


cdef struct Tab:
    int n
    uint64_t mask
    uint64_t* xs
    uint64_t* zs
    uint8_t* rs


cdef int tab_alloc(Tab* t, int n) except -1:
    t.n = n
    t.mask = MASK64_C if n == 64 else ((<uint64_t>1 << n) - 1)
    t.xs = <uint64_t*>malloc(2 * n * sizeof(uint64_t))
    t.zs = <uint64_t*>malloc(2 * n * sizeof(uint64_t))
    t.rs = <uint8_t*>malloc(2 * n * sizeof(uint8_t))
    if t.xs == NULL or t.zs == NULL or t.rs == NULL:
        raise MemoryError()
    return 0


cdef void tab_free(Tab* t) nogil:
    free(t.xs)
    free(t.zs)
    free(t.rs)


cdef void tab_reset(Tab* t) nogil:
    cdef int i
    for i in range(2 * t.n):
        t.xs[i] = 0
        t.zs[i] = 0
        t.rs[i] = 0
    for i in range(t.n):
        t.xs[i] = <uint64_t>1 << i
        t.zs[t.n + i] = <uint64_t>1 << i


cdef void tab_copy(Tab* dst, Tab* src) nogil:
    dst.n = src.n
    dst.mask = src.mask
    memcpy(dst.xs, src.xs, 2 * src.n * sizeof(uint64_t))
    memcpy(dst.zs, src.zs, 2 * src.n * sizeof(uint64_t))
    memcpy(dst.rs, src.rs, 2 * src.n * sizeof(uint8_t))


cdef void tab_h(Tab* t, int q) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef uint64_t xq, zq
    cdef int i
    for i in range(2 * t.n):
        xq = t.xs[i] & bit
        zq = t.zs[i] & bit
        if xq and zq:
            t.rs[i] ^= 1
        if (xq != 0) != (zq != 0):
            t.xs[i] ^= bit
            t.zs[i] ^= bit


cdef void tab_x(Tab* t, int q) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef int i
    for i in range(2 * t.n):
        if t.zs[i] & bit:
            t.rs[i] ^= 1


cdef void tab_z(Tab* t, int q) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef int i
    for i in range(2 * t.n):
        if t.xs[i] & bit:
            t.rs[i] ^= 1


cdef void tab_cnot(Tab* t, int c, int tq) nogil:
    cdef uint64_t bc = <uint64_t>1 << c
    cdef uint64_t bt = <uint64_t>1 << tq
    cdef uint64_t xc, zt
    cdef int i
    for i in range(2 * t.n):
        xc = t.xs[i] & bc
        zt = t.zs[i] & bt
        if xc and zt and ((t.xs[i] & bt) != 0) == ((t.zs[i] & bc) != 0):
            t.rs[i] ^= 1
        if xc:
            t.xs[i] ^= bt
        if zt:
            t.zs[i] ^= bc


cdef void tab_apply_op(Tab* t, int code, int a, int b) nogil:
    if code == 0:
        tab_h(t, a)
    elif code == 1:
        tab_x(t, a)
    elif code == 2:
        tab_z(t, a)
    elif code == 3:
        tab_cnot(t, a, b)
    elif code == 4:
        tab_h(t, b)
        tab_cnot(t, a, b)
        tab_h(t, b)


cdef void tab_rowsum(Tab* t, int h, int i) nogil:
    # destabilizer targets may hit an odd sum; s >> 1 is the shared
    # don't-care rule (see _kernels_py)
    cdef int s = phase_sum(t.xs[i], t.zs[i], t.rs[i], t.xs[h], t.zs[h], t.rs[h], t.mask)
    t.rs[h] = <uint8_t>(s >> 1)
    t.xs[h] ^= t.xs[i]
    t.zs[h] ^= t.zs[i]


cdef int tab_is_random(Tab* t, int q) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef int i
    for i in range(t.n, 2 * t.n):
        if t.xs[i] & bit:
            return 1
    return 0


cdef void tab_project(Tab* t, int q, int outcome) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef int n = t.n
    cdef int p = -1
    cdef int i
    for i in range(n, 2 * n):
        if t.xs[i] & bit:
            p = i
            break
    for i in range(2 * n):
        if i != p and (t.xs[i] & bit):
            tab_rowsum(t, i, p)
    t.xs[p - n] = t.xs[p]
    t.zs[p - n] = t.zs[p]
    t.rs[p - n] = t.rs[p]
    t.xs[p] = 0
    t.zs[p] = bit
    t.rs[p] = <uint8_t>outcome


cdef int tab_deterministic(Tab* t, int q) nogil:
    cdef uint64_t bit = <uint64_t>1 << q
    cdef uint64_t sx = 0, sz = 0
    cdef int sr = 0
    cdef int i, j, s
    for i in range(t.n):
        if t.xs[i] & bit:
            j = i + t.n
            s = phase_sum(t.xs[j], t.zs[j], t.rs[j], sx, sz, sr, t.mask)
            sr = s >> 1
            sx ^= t.xs[j]
            sz ^= t.zs[j]
    return sr


cdef uint64_t tab_measure_all(Tab* t, Stream* stream) nogil:
    cdef uint64_t out = 0
    cdef int q, b
    for q in range(t.n):
        if tab_is_random(t, q):
            b = stream_bit(stream)
            tab_project(t, q, b)
        else:
            b = tab_deterministic(t, q)
        out |= (<uint64_t>b) << q
    return out


cdef class TableauEngine:
    """Python-visible wrapper over the C tableau (same surface as pure)."""

    cdef Tab tab
    cdef bint owned

    def __cinit__(self, n):
        cdef int nn = int(n)
        if nn < 1 or nn > 64:
            raise ValueError("tableau supports 1..64 qubits")
        tab_alloc(&self.tab, nn)
        tab_reset(&self.tab)
        self.owned = True

    def __dealloc__(self):
        if self.owned:
            tab_free(&self.tab)

    @property
    def n(self):
        return self.tab.n

    def copy(self):
        cdef TableauEngine other = TableauEngine(self.tab.n)
        tab_copy(&other.tab, &self.tab)
        return other

    def apply(self, ops):
        for code, a, b in ops:
            if code < 0 or code > 4:
                raise ValueError(f"unknown opcode {code}")
            tab_apply_op(&self.tab, code, a, b)

    def is_random(self, q):
        return bool(tab_is_random(&self.tab, q))

    def project(self, q, outcome):
        tab_project(&self.tab, q, outcome)

    def deterministic_outcome(self, q):
        return tab_deterministic(&self.tab, q)

    def measure_all(self, stream):
        """Python-stream variant used by the distribution enumerator."""
        cdef uint64_t out = 0
        cdef int q, b
        for q in range(self.tab.n):
            if tab_is_random(&self.tab, q):
                b = stream.next_bit()
                tab_project(&self.tab, q, b)
            else:
                b = tab_deterministic(&self.tab, q)
            out |= (<uint64_t>b) << q
        return int(out)


def sample_shots(num_qubits, ops, shots, seed):
    """Simulate once, then measure `shots` independent copies."""
    cdef int n = int(num_qubits)
    cdef int nshots = int(shots)
    cdef uint64_t cseed = <uint64_t>(int(seed) & MASK64)
    if n < 1 or n > 64:
        raise ValueError("tableau supports 1..64 qubits")

    cdef int nops = len(ops)
    cdef int* opc = <int*>malloc(3 * nops * sizeof(int)) if nops else NULL
    cdef int k
    if nops and opc == NULL:
        raise MemoryError()
    try:
        for k, (code, a, b) in enumerate(ops):
            if code < 0 or code > 4:
                raise ValueError(f"unknown opcode {code}")
            opc[3 * k] = code
            opc[3 * k + 1] = a
            opc[3 * k + 2] = b

        out = [0] * nshots
        _sample_into(out, n, opc, nops, nshots, cseed)
        return out
    finally:
        if opc != NULL:
            free(opc)


cdef int _sample_into(list out, int n, int* opc, int nops, int nshots, uint64_t seed) except -1:
    cdef Tab base, work
    cdef Stream stream
    cdef uint64_t* results = <uint64_t*>malloc(nshots * sizeof(uint64_t)) if nshots else NULL
    cdef int k, shot
    if nshots and results == NULL:
        raise MemoryError()
    tab_alloc(&base, n)
    tab_alloc(&work, n)
    try:
        with nogil:
            tab_reset(&base)
            for k in range(nops):
                tab_apply_op(&base, opc[3 * k], opc[3 * k + 1], opc[3 * k + 2])
            for shot in range(nshots):
                tab_copy(&work, &base)
                stream_init(&stream, seed, <uint64_t>shot)
                results[shot] = tab_measure_all(&work, &stream)
        for shot in range(nshots):
            out[shot] = int(results[shot])
        return 0
    finally:
        tab_free(&base)
        tab_free(&work)
        if results != NULL:
            free(results)


# -- exhaustive decode sweep ----------------------------------------------

def sweep_weight(m, codewords, weight):
    """(cases, corrected) over all weight-`weight` patterns x codewords."""
    cdef int mm = int(m)
    cdef int w = int(weight)
    if w < 1 or w > mm:
        return 0, 0
    cdef int k = len(codewords)
    cdef uint64_t* cws = <uint64_t*>malloc(k * sizeof(uint64_t))
    if cws == NULL:
        raise MemoryError()
    cdef int i
    for i in range(k):
        cws[i] = <uint64_t>(int(codewords[i]) & MASK64)
    cdef int64_t cases = 0, corrected = 0
    try:
        with nogil:
            _sweep_weight_c(mm, cws, k, w, &cases, &corrected)
    finally:
        free(cws)
    return int(cases), int(corrected)


cdef void _sweep_weight_c(int m, uint64_t* cws, int k, int w,
                          int64_t* cases, int64_t* corrected) nogil:
    cdef uint64_t limit = <uint64_t>1 << m
    cdef uint64_t pattern = (<uint64_t>1 << w) - 1
    cdef uint64_t u, v, received
    cdef int l, j, best_l, best_d, dist
    cdef int64_t n_cases = 0, n_ok = 0
    while pattern < limit:
        for l in range(k):
            received = cws[l] ^ pattern
            best_l = 0
            best_d = m + 1
            for j in range(k):
                dist = __builtin_popcountll(received ^ cws[j])
                if dist < best_d:
                    best_l = j
                    best_d = dist
            n_cases += 1
            if best_l == l:
                n_ok += 1
        u = pattern & (~pattern + 1)
        v = pattern + u
        pattern = v | (((v ^ pattern) // u) >> 2)
    cases[0] = n_cases
    corrected[0] = n_ok
