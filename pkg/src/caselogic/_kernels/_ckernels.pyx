# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; same contracts as pykernels.py."""

from cpython.bytearray cimport PyByteArray_AS_STRING
from libc.stdlib cimport free, malloc

DEC_0 = 0
DEC_1 = 1
DEC_UNK = 2
DEC_ABSENT = 3
DEC_CONFLICT = 4

cdef int _DEC_UNK = 2
cdef int _DEC_ABSENT = 3
cdef int _DEC_CONFLICT = 4


def canonical_decisions(int n_atoms, reason_masks, con_caps, con_sides, out_codes):
    cdef Py_ssize_t size = 1 << n_atoms
    cdef Py_ssize_t n_cases = len(reason_masks)
    cdef bytearray out = bytearray(size)
    cdef unsigned char *dec = <unsigned char *> PyByteArray_AS_STRING(out)
    cdef unsigned long long *req = <unsigned long long *> malloc(n_cases * sizeof(unsigned long long))
    cdef unsigned long long *cap = <unsigned long long *> malloc(n_cases * sizeof(unsigned long long))
    cdef unsigned long long *side = <unsigned long long *> malloc(n_cases * sizeof(unsigned long long))
    cdef int *xs = <int *> malloc(n_cases * sizeof(int))
    if req == NULL or cap == NULL or side == NULL or xs == NULL:
        free(req); free(cap); free(side); free(xs)
        raise MemoryError()
    cdef Py_ssize_t i, s
    cdef int forced, x
    try:
        for i in range(n_cases):
            req[i] = reason_masks[i]
            cap[i] = con_caps[i]
            side[i] = con_sides[i]
            xs[i] = out_codes[i]
        for s in range(size):
            forced = -1
            for i in range(n_cases):
                if req[i] & ~(<unsigned long long> s):
                    continue
                if (<unsigned long long> s) & side[i] & ~cap[i]:
                    continue
                x = xs[i]
                if forced < 0:
                    forced = x
                elif forced != x:
                    forced = _DEC_CONFLICT
                    break
            dec[s] = forced if forced >= 0 else _DEC_UNK
    finally:
        free(req); free(cap); free(side); free(xs)
    return out


cdef bint _implicant_holds(const unsigned char *dec, unsigned long long full,
                           unsigned long long pos, unsigned long long neg,
                           int target) nogil:
    cdef unsigned long long free_mask = full & ~pos & ~neg
    cdef unsigned long long sub = 0
    cdef int d
    while True:
        d = dec[pos | sub]
        if d != _DEC_ABSENT and d != target:
            return False
        if sub == free_mask:
            return True
        sub = (sub - free_mask) & free_mask


def implicant_holds(dec, int n_atoms, unsigned long long pos,
                    unsigned long long neg, int target):
    cdef bytearray buf = dec if isinstance(dec, bytearray) else bytearray(dec)
    cdef const unsigned char *p = <const unsigned char *> PyByteArray_AS_STRING(buf)
    cdef unsigned long long full = (<unsigned long long> 1 << n_atoms) - 1
    return bool(_implicant_holds(p, full, pos, neg, target))


cdef list _atom_sets_by_size(unsigned long long full, int n_atoms):
    cdef list sets = [[] for _ in range(n_atoms + 1)]
    cdef unsigned long long a
    for a in range(full + 1):
        (<list> sets[bin(a).count("1")]).append(a)
    return sets


def prime_implicants(dec, int n_atoms, int target):
    cdef bytearray buf = dec if isinstance(dec, bytearray) else bytearray(dec)
    cdef const unsigned char *p = <const unsigned char *> PyByteArray_AS_STRING(buf)
    cdef unsigned long long full = (<unsigned long long> 1 << n_atoms) - 1
    cdef list primes = []
    cdef unsigned long long atom_set, pos, neg, fp, fn
    cdef bint covered
    cdef Py_ssize_t j
    cdef tuple pr
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set_obj in size_group:
            atom_set = atom_set_obj
            pos = 0
            while True:
                neg = atom_set ^ pos
                covered = False
                for j in range(len(primes)):
                    pr = <tuple> primes[j]
                    fp = pr[0]
                    fn = pr[1]
                    if not (fp & ~pos) and not (fn & ~neg):
                        covered = True
                        break
                if not covered and _implicant_holds(p, full, pos, neg, target):
                    primes.append((pos, neg))
                if pos == atom_set:
                    break
                pos = (pos - atom_set) & atom_set
    return primes


def minimal_implicants_at(dec, int n_atoms, unsigned long long state, int target):
    cdef bytearray buf = dec if isinstance(dec, bytearray) else bytearray(dec)
    cdef const unsigned char *p = <const unsigned char *> PyByteArray_AS_STRING(buf)
    cdef unsigned long long full = (<unsigned long long> 1 << n_atoms) - 1
    cdef list found = []
    cdef list found_sets = []
    cdef unsigned long long atom_set, a
    cdef bint covered
    cdef Py_ssize_t j
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set_obj in size_group:
            atom_set = atom_set_obj
            covered = False
            for j in range(len(found_sets)):
                a = found_sets[j]
                if not (a & ~atom_set):
                    covered = True
                    break
            if covered:
                continue
            if _implicant_holds(p, full, state & atom_set, atom_set & ~state, target):
                found.append((state & atom_set, atom_set & ~state))
                found_sets.append(atom_set)
    return found


cdef bint _varies_from(const unsigned char *dec, unsigned long long full,
                       unsigned long long state, unsigned long long atom_set,
                       int target) nogil:
    cdef unsigned long long base = state & full & ~atom_set
    cdef unsigned long long sub = 0
    cdef int d
    while True:
        d = dec[base | sub]
        if d != _DEC_ABSENT and d != target:
            return True
        if sub == atom_set:
            return False
        sub = (sub - atom_set) & atom_set


def varies_from(dec, int n_atoms, unsigned long long state,
                unsigned long long atom_set, int target):
    cdef bytearray buf = dec if isinstance(dec, bytearray) else bytearray(dec)
    cdef const unsigned char *p = <const unsigned char *> PyByteArray_AS_STRING(buf)
    cdef unsigned long long full = (<unsigned long long> 1 << n_atoms) - 1
    return bool(_varies_from(p, full, state, atom_set, target))


def minimal_contrastive_sets(dec, int n_atoms, unsigned long long state, int target):
    cdef bytearray buf = dec if isinstance(dec, bytearray) else bytearray(dec)
    cdef const unsigned char *p = <const unsigned char *> PyByteArray_AS_STRING(buf)
    cdef unsigned long long full = (<unsigned long long> 1 << n_atoms) - 1
    cdef list found = []
    cdef unsigned long long atom_set, a
    cdef bint covered
    cdef Py_ssize_t j
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set_obj in size_group:
            atom_set = atom_set_obj
            covered = False
            for j in range(len(found)):
                a = found[j]
                if not (a & ~atom_set):
                    covered = True
                    break
            if covered:
                continue
            if _varies_from(p, full, state, atom_set, target):
                found.append(atom_set)
    return found
