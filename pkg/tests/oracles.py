"""Independent brute-force oracles used only by the tests.

These deliberately avoid the package's kernel layer: everything here works
on frozensets of factor names and scans model states directly, so agreement
with the library is evidence, not circularity.
"""

from caselogic.formulas import Term
from caselogic.signature import iter_submasks


def all_terms(sig):
    """Every consistent term over the signature."""
    for atom_mask in iter_submasks(sig.full_mask):
        for pos_mask in iter_submasks(atom_mask):
            yield Term(sig.name_set(pos_mask), sig.name_set(atom_mask ^ pos_mask))


def naive_is_implicant(model, term, x):
    """Direct scan of the model's states, no bit tricks."""
    sig = model.signature
    for s, value in model.decisions:
        names = sig.name_set(s)
        if term.positive <= names and not (term.negative & names):
            if value != x:
                return False
    return True


def term_lattice_prime_implicants(model, x):
    """All subset-minimal implicants by filtering the full term lattice."""
    sig = model.signature
    implicants = [t for t in all_terms(sig) if naive_is_implicant(model, t, x)]
    return sorted(
        (
            t
            for t in implicants
            if not any(o != t and o.part_of(t) for o in implicants)
        ),
        key=lambda t: t.sort_key(sig),
    )


def naive_axps(model, state_names, x):
    """Prime implicants whose literals all hold at the state."""
    return [
        t for t in term_lattice_prime_implicants(model, x) if t.holds(state_names)
    ]


def naive_varies(model, state_names, atoms, x):
    """Some state agreeing with the given one outside ``atoms`` is not x."""
    sig = model.signature
    fixed = frozenset(sig.atoms) - frozenset(atoms)
    for s, value in model.decisions:
        names = sig.name_set(s)
        if names & fixed == state_names & fixed and value != x:
            return True
    return False


def naive_cxps(model, state_names, x):
    """Subset-minimal atom sets whose variation can flip the decision,
    rendered as terms of the state's literals."""
    sig = model.signature
    varying = [
        frozenset(sig.name_set(m))
        for m in iter_submasks(sig.full_mask)
        if naive_varies(model, state_names, sig.name_set(m), x)
    ]
    minimal = [a for a in varying if not any(b < a for b in varying)]
    return sorted(
        (Term(a & state_names, a - state_names) for a in minimal),
        key=lambda t: t.sort_key(sig),
    )
