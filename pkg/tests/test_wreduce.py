from math import gcd

import pytest

from goeritz.exactmat import IntMatrix, a_block, block_assemble, cyclic_shift, identity, power
from goeritz.smith import normalize_invariant, smith_normal_form
from goeritz.torus import ODD_ODD, canonicalize, goeritz_irreducible
from goeritz.wreduce import (
    OP1,
    OP2,
    WState,
    descend,
    ell,
    initial_state,
    initial_state_odd_even,
    initial_state_odd_odd,
    realize,
    step,
    terminal_closed_form,
    terminal_invariant,
    trace_for,
)


def W(*args):
    return WState(*args)


def odd_starts(limit):
    seen = set()
    for p in range(2, limit + 1):
        for q in range(2, limit + 1):
            t = canonicalize(p, q)
            if t.p % 2 == 0 or (t.p == t.q) or (t.p, t.q) in seen:
                continue
            seen.add((t.p, t.q))
            yield t


def test_state_validation():
    for bad in ((0, 2, 1, 1, 0, 0), (2, 2, 1, 1, 0, 0), (1, 2, 0, 1, 0, 0), (1, 2, 1, 2, 0, 0)):
        with pytest.raises(ValueError):
            W(*bad)
    assert str(W(1, 2, 1, 1, 1, -2)) == "W(1,2,1,1,1,-2)"


def test_realize_examples():
    assert realize(W(3, 4, 1, 1, 1, 0)) == identity(4) + a_block(3, 4) + power(cyclic_shift(4), 3)
    assert normalize_invariant(smith_normal_form(realize(W(1, 2, 1, 1, 1, -2)))) == (3,)
    e, a = identity(3), a_block(3, 3)
    expected = block_assemble([[e, e], [e + 0 * a, e + 2 * a]])
    assert realize(W(3, 6, 1, 1, 0, 2)) == expected


@pytest.mark.parametrize("p", [3, 5, 7, 9, 11])
def test_realize_matches_reduced_form(p):
    for q in range(p + 2, 16, 2):
        t = canonicalize(p, q)
        assert realize(initial_state_odd_odd(t)) == identity(q) + a_block(p, q) + power(cyclic_shift(q), p)


def test_step_examples():
    assert step(W(3, 5, 1, 1, 1, 0)) == (W(1, 3, -1, 1, 1, -1), OP2)
    assert step(W(1, 3, -1, 1, 1, -1)) == (W(1, 2, -1, 1, 0, 1), OP1)
    assert step(W(3, 4, 1, 1, 1, 0)) == (W(2, 3, -1, 1, -1, -1), OP2)
    with pytest.raises(ValueError):
        step(W(1, 2, 1, 1, 1, -2))


def test_descend_examples():
    tr = descend(W(3, 5, 1, 1, 1, 0))
    assert tr.terminal == W(1, 2, -1, 1, 0, 1)
    assert tr.ops == [OP2, OP1]
    tr = descend(W(3, 4, 1, 1, 1, 0))
    assert tr.terminal == W(1, 2, 1, 1, 1, -2)
    assert abs(tr.terminal.k - tr.terminal.h) == 3
    assert len(tr.states) == 3
    tr = descend(W(3, 6, 1, 1, 1, 0))
    assert len(tr.states) == 1 and tr.ops == []


def test_ell_examples():
    assert ell(W(3, 4, 1, 1, 1, 0)) == 3
    assert ell(W(2, 3, -1, 1, -1, -1)) == 3
    assert ell(W(1, 2, 1, 1, 3, -2)) == 5


def test_initial_states():
    assert initial_state_odd_odd(canonicalize(3, 5)) == W(3, 5, 1, 1, 1, 0)
    assert initial_state_odd_odd(canonicalize(3, 9)) == W(3, 9, 1, 1, 1, 0)
    with pytest.raises(ValueError):
        initial_state_odd_odd(canonicalize(5, 5))
    assert initial_state_odd_even(canonicalize(3, 4)) == W(3, 4, 1, 1, 1, 0)
    assert initial_state_odd_even(canonicalize(5, 2)) == W(1, 2, 1, 1, 3, -2)
    assert initial_state_odd_even(canonicalize(3, 6)) == W(3, 6, 1, 1, 1, 0)
    with pytest.raises(ValueError):
        initial_state(canonicalize(4, 6))


def test_terminal_invariant_examples():
    assert terminal_invariant(W(3, 6, 1, -1, -1, 0)).normalized == (2, 2)
    assert terminal_invariant(W(1, 2, 1, 1, 1, -2)).normalized == (3,)
    assert terminal_invariant(W(3, 6, 1, 1, 0, 1)).normalized == (0, 0)
    assert terminal_closed_form(W(1, 2, -1, 1, 0, 1)) == (1,)
    assert terminal_closed_form(W(2, 4, -1, -1, 0, 0)) is None
    with pytest.raises(ValueError):
        terminal_closed_form(W(3, 5, 1, 1, 1, 0))


@pytest.mark.parametrize("t", list(odd_starts(15)), ids=lambda t: f"{t.p}-{t.q}")
def test_trace_structure(t):
    tr = trace_for(t.p, t.q)
    r = t.r
    assert {gcd(s.m, s.n) for s in tr.states} == {r}
    for a, b in zip(tr.states, tr.states[1:]):
        assert b.m + b.n < a.m + a.n
    end = tr.terminal
    assert (end.m, end.n) == (r, 2 * r)
    if t.parity_class == ODD_ODD:
        assert end in (W(r, 2 * r, 1, -1, -1, 0), W(r, 2 * r, -1, 1, 0, 1))
    else:
        assert (end.e1, end.e2) == (1, 1)
        assert abs(end.k - end.h) == t.p_prime


@pytest.mark.parametrize("t", [t for t in odd_starts(15) if t.parity_class != ODD_ODD],
                         ids=lambda t: f"{t.p}-{t.q}")
def test_ell_conserved_odd_even(t):
    tr = trace_for(t.p, t.q)
    assert {ell(s) for s in tr.states} == {t.p}


@pytest.mark.parametrize("t", list(odd_starts(9)), ids=lambda t: f"{t.p}-{t.q}")
def test_snf_constant_along_trace(t):
    tr = trace_for(t.p, t.q)
    invs = {normalize_invariant(smith_normal_form(realize(s))) for s in tr.states}
    assert invs == {normalize_invariant(smith_normal_form(goeritz_irreducible(t)))}
