"""Pure-Python reference kernels.

All kernels work on a decision array of length ``2**n_atoms`` indexed by
state mask, with one byte per state:

    0 -> decided for the defendant
    1 -> decided for the plaintiff
    2 -> undecided ('?')
    3 -> the valuation is not a state of the model
    4 -> conflict (double-forced; only produced by canonical_decisions)

The compiled twin in ``_ckernels.pyx`` implements the same signatures.
"""

from __future__ import annotations

DEC_0 = 0
DEC_1 = 1
DEC_UNK = 2
DEC_ABSENT = 3
DEC_CONFLICT = 4


def canonical_decisions(n_atoms, reason_masks, con_caps, con_sides, out_codes):
    """Decision array of the model induced by forcing precedents.

    A precedent with reason mask R, con-side cap C (its facts restricted to
    the opposing side), opposing-side mask M and outcome code x forces x on
    every state s with R subset-of s and (s & M) subset-of C.
    """
    size = 1 << n_atoms
    dec = bytearray([DEC_UNK]) * size
    n_cases = len(reason_masks)
    for s in range(size):
        forced = -1
        for i in range(n_cases):
            if reason_masks[i] & ~s:
                continue
            if s & con_sides[i] & ~con_caps[i]:
                continue
            x = out_codes[i]
            if forced < 0:
                forced = x
            elif forced != x:
                forced = DEC_CONFLICT
                break
        if forced >= 0:
            dec[s] = forced
    return dec


def implicant_holds(dec, n_atoms, pos, neg, target):
    """True iff every present state satisfying the term has the target code.

    Vacuously true when no present state satisfies the term.
    """
    free = ((1 << n_atoms) - 1) & ~pos & ~neg
    sub = 0
    while True:
        s = pos | sub
        d = dec[s]
        if d != DEC_ABSENT and d != target:
            return False
        if sub == free:
            return True
        sub = (sub - free) & free


def _atom_sets_by_size(full_mask, n_atoms):
    sets = [[] for _ in range(n_atoms + 1)]
    for a in range(full_mask + 1):
        sets[bin(a).count("1")].append(a)
    return sets


def prime_implicants(dec, n_atoms, target):
    """All subset-minimal implicant terms for the target, as (pos, neg) pairs.

    Discovery order: by number of mentioned atoms, then numeric atom-set
    mask, then numeric positive-part mask.
    """
    full = (1 << n_atoms) - 1
    primes = []
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set in size_group:
            pos = 0
            while True:
                neg = atom_set ^ pos
                if not any(p & ~pos == 0 and ng & ~neg == 0 for p, ng in primes):
                    if implicant_holds(dec, n_atoms, pos, neg, target):
                        primes.append((pos, neg))
                if pos == atom_set:
                    break
                pos = (pos - atom_set) & atom_set
    return primes


def minimal_implicants_at(dec, n_atoms, state, target):
    """Subset-minimal implicants among the terms true at ``state``.

    Candidate terms pick an atom subset A and take each atom's literal as it
    holds at the state; minimality over the term-part order then coincides
    with global primality.
    """
    full = (1 << n_atoms) - 1
    found = []
    found_sets = []
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set in size_group:
            if any(a & ~atom_set == 0 for a in found_sets):
                continue
            pos = state & atom_set
            neg = atom_set & ~state
            if implicant_holds(dec, n_atoms, pos, neg, target):
                found.append((pos, neg))
                found_sets.append(atom_set)
    return found


def varies_from(dec, n_atoms, state, atom_set, target):
    """True iff some present state agreeing with ``state`` outside
    ``atom_set`` has a decision other than the target."""
    keep = ((1 << n_atoms) - 1) & ~atom_set
    base = state & keep
    sub = 0
    while True:
        d = dec[base | sub]
        if d != DEC_ABSENT and d != target:
            return True
        if sub == atom_set:
            return False
        sub = (sub - atom_set) & atom_set


def minimal_contrastive_sets(dec, n_atoms, state, target):
    """Subset-minimal atom sets whose variation can change the decision."""
    full = (1 << n_atoms) - 1
    found = []
    for size_group in _atom_sets_by_size(full, n_atoms):
        for atom_set in size_group:
            if any(a & ~atom_set == 0 for a in found):
                continue
            if varies_from(dec, n_atoms, state, atom_set, target):
                found.append(atom_set)
    return found
