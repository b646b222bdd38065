import pytest

from sptab.errors import ShapeError, TableauError
from sptab.tableaux import Tableau, tableau_to_json
from sptab.taquin_sp import (
    SpSkewColumn,
    SpSkewTableau,
    is_semistandard_skew_sp,
    phi,
    phi_passes,
    psi,
    shed,
    sigma_sp,
    sjdt_step,
    sjdt_to_rest,
    slide_pass_sp,
    state_from_tableau,
    state_to_json,
    trace_to_json,
)

F = frozenset


def skew(n, *cols):
    return SpSkewTableau(n, tuple(SpSkewColumn(n, *c) for c in cols))


# ---------------------------------------------------------------------------
# the two rank-4 slide chains


def run_chain(state):
    states = [state]
    while True:
        nxt = sjdt_step(states[-1])
        if nxt is None:
            return states
        states.append(nxt)


def test_slide_chain_one_golden():
    start = skew(
        4,
        (2, F(), F({1, 2, 3}), 3),
        (0, F({1, 3}), F({1, 3})),
        (0, F({2, 4}), F({2})),
    )
    states = run_chain(start)
    assert [s.star for s in states] == [(3, 1), (3, 2), (3, 3)]
    assert states[1] == skew(
        4, (2, F(), F({1, 2, 3, 4})), (0, F({1, 4}), F({1}), 3), (0, F({2, 4}), F({2}))
    )
    assert states[2] == skew(
        4, (2, F(), F({1, 2, 3, 4})), (0, F({1, 4}), F({1, 3})), (0, F({3, 4}), F(), 3)
    )
    assert not any(s.zero_present for s in states)
    assert all(is_semistandard_skew_sp(s) for s in states)
    final = shed(states[-1])
    assert final == skew(
        4, (2, F(), F({1, 2, 3, 4})), (0, F({1, 4}), F({1, 3})), (0, F({3, 4}), F())
    )


def test_slide_chain_two_golden_with_zero():
    start = skew(
        4,
        (1, F(), F({1, 2, 3, 4}), 2),
        (0, F({1, 4}), F({1, 3})),
        (0, F({3, 4}), F()),
    )
    states = run_chain(start)
    assert [s.star for s in states] == [(2, 1), (2, 2), (2, 3)]
    assert states[1] == skew(
        4, (1, F({0}), F({0, 1, 2, 3})), (0, F({1}), F({1, 3}), 2), (0, F({3, 4}), F())
    )
    assert states[2] == skew(
        4, (1, F({0}), F({0, 1, 2, 3})), (0, F({1, 4}), F({1, 3})), (0, F({3}), F(), 2)
    )
    # the extended letter appears, in the first column only, 0 and 0' together
    assert [s.zero_present for s in states] == [False, True, True]
    for s in states[1:]:
        assert s.columns[0].has_zero
        assert not any(c.has_zero for c in s.columns[1:])
        assert 0 in s.columns[0].A and 0 in s.columns[0].D
    assert all(is_semistandard_skew_sp(s) for s in states)


def test_lone_star_sheds():
    state = skew(3, (0, F(), F(), 1))
    rest, path = sjdt_to_rest(state)
    assert path == [(1, 1)]
    assert shed(rest).heights == (0,)


# ---------------------------------------------------------------------------
# reversal


def test_sigma_sp_swaps_content_and_rotates():
    t = Tableau.sp(4, [(3,)])
    out = sigma_sp(state_from_tableau(t))
    assert out == skew(4, (0, F(), F({3})))
    assert sigma_sp(out) == state_from_tableau(t)


def test_sigma_sp_involution_on_chain_states():
    start = skew(
        4,
        (2, F(), F({1, 2, 3}), 3),
        (0, F({1, 3}), F({1, 3})),
        (0, F({2, 4}), F({2})),
    )
    for s in run_chain(start):
        assert sigma_sp(sigma_sp(s)) == s


# ---------------------------------------------------------------------------
# reduction passes (the rank-4 worked reduction)

T_EX4 = Tableau.sp(4, [(1, 2, 3, 6), (1, 3, 6), (3, 6)])


def test_reduction_passes_golden():
    expected = [
        (3, Tableau.sp(4, [(1, 2, 5, 6), (1, 4), (3, 6)])),
        (2, Tableau.sp(4, [(1, 2, 6, 7), (1, 5), (4,)])),
        (2, Tableau.sp(4, [(1, 5, 6, 7), (1,), (4,)])),
        (1, Tableau.sp(4, [(1, 5, 6, 7), (4,)])),
        (1, Tableau.sp(4, [(1, 6, 7, 8)])),
    ]
    assert list(phi_passes(T_EX4)) == expected


def test_phi_golden():
    mu, q = phi(T_EX4)
    assert mu == (4,)
    assert q.form() == (0, 0, 0, 1)
    assert tableau_to_json(q)["columns"] == [[1, -3, -2, -1]]


def test_phi_fixes_quasistandard():
    q = Tableau.sp(4, [(1, 6, 7, 8)])
    assert phi(q) == ((4,), q)


def test_phi_trivial_column_to_empty():
    for n, k in ((2, 2), (3, 3), (4, 4), (4, 2)):
        t = Tableau.sp(n, [tuple(range(1, k + 1))])
        mu, q = phi(t)
        assert mu == () and q.columns == ()


def test_psi_golden_inverse_trace():
    record = []
    out = psi((4, 3, 2), (4,), Tableau.sp(4, [(1, 6, 7, 8)]), record)
    assert out == T_EX4
    # the reversed start: the five numbered stars are the vacated cells of
    # the first two columns; the reversal swaps each column's parts
    assert record[0] == skew(
        4,
        (4, F(), F()),
        (4, F(), F()),
        (0, F({1, 2, 3}), F({1})),
        (0, F(), F({1, 2, 3, 4})),
        (0, F(), F({1, 2, 3, 4})),
    )
    # after the first star exits, the rightmost column has shed one cell
    assert record[5].heights == (4, 4, 4, 4, 3)


def test_psi_star_paths_golden():
    # the stars slide in decreasing index, each strictly along its row,
    # exiting at the reversed skew cells, matching the displayed panels
    record = []
    psi((4, 3, 2), (4,), Tableau.sp(4, [(1, 6, 7, 8)]), record)
    stars = [s.star for s in record if s.star is not None]
    assert stars == [
        (4, 2), (4, 3), (4, 4), (4, 5),
        (4, 1), (4, 2), (4, 3), (4, 4),
        (3, 2), (3, 3), (3, 4), (3, 5),
        (3, 1), (3, 2), (3, 3), (3, 4),
        (2, 2), (2, 3), (2, 4), (2, 5),
    ]
    assert record[-1].star is None
    # final reversal carries the to-be-completed trivial tops up front
    assert record[-1].inners == (3, 2, 0, 0, 0)


def test_psi_identity_when_shapes_equal():
    q = Tableau.sp(4, [(1, 6, 7, 8)])
    assert psi((4,), (4,), q) == q


def test_psi_empty_target():
    for n, k in ((2, 2), (3, 2), (4, 3)):
        t = psi((k,), (), Tableau.sp(n, []))
        assert t == Tableau.sp(n, [tuple(range(1, k + 1))])


def test_psi_rejects_bad_inputs():
    q = Tableau.sp(2, [(2,)])
    with pytest.raises(ShapeError):
        psi((1,), (2,), q)  # wrong mu
    with pytest.raises(ShapeError):
        psi((3, 1), (1,), Tableau.sp(2, [(2,)]))  # heights above the rank
    # contained but not below in the weight order: rejected
    with pytest.raises(ShapeError):
        psi((2, 1), (1, 1), Tableau.sp(2, [(2,), (2,)]))


def test_slide_pass_requires_nqs():
    q = Tableau.sp(4, [(1, 6, 7, 8)])
    with pytest.raises(TableauError):
        slide_pass_sp(q, 1)


def test_slide_pass_shape_bookkeeping():
    from sptab.enumeration import enum_ss_sp, shapes_up_to
    from sptab.tableaux import pushable_rows, shape_to_multiplicities

    n = 2
    for lam in shapes_up_to(n, 4):
        for t in enum_ss_sp(n, lam):
            rows = pushable_rows(t)
            if not rows:
                continue
            s = max(rows)
            out = slide_pass_sp(t, s)
            before = list(shape_to_multiplicities(t.shape, n))
            before[s - 1] -= 1
            if s >= 2:
                before[s - 2] += 1
            assert list(shape_to_multiplicities(out.shape, n)) == before


# ---------------------------------------------------------------------------
# serialization


def test_trace_json_compact_and_extended():
    start = skew(4, (1, F(), F({1, 2, 3, 4}), 2), (0, F({1, 4}), F({1, 3})), (0, F({3, 4}), F()))
    record = []
    sjdt_to_rest(start, record)
    js = trace_to_json(record)
    assert js[0]["star"] == [2, 1]
    assert js[0]["zero_present"] is False and js[1]["zero_present"] is True
    # extended letters force the two-field object form throughout the trace
    assert js[0]["columns"][1][0] == {"m": 1, "b": False}
    assert {"m": 0, "b": True} in js[1]["columns"][0]

    plain = state_to_json(shed(sjdt_to_rest(skew(2, (0, F({1}), F(), 1)))[0]))
    assert plain == {"columns": [[1]], "inner": [0], "star": None, "zero_present": False}


def test_skew_double_golden_display():
    # the displayed double of the skew start: vacated cells double to
    # vacated pairs, the star to a star pair, filled bottoms through the
    # column doubles
    from sptab.taquin_sp import _double_rows

    start = skew(
        4,
        (2, F(), F({1, 2, 3}), 3),
        (0, F({1, 3}), F({1, 3})),
        (0, F({2, 4}), F({2})),
    )
    doubled = []
    for c in start.columns:
        left, right = _double_rows(c)
        doubled.extend([left, right])
    X = None
    assert doubled == [
        [X, X, X, 6, 7, 8],  # 3' 2' 1' under two vacated cells and the star pair
        [X, X, X, 6, 7, 8],
        [1, 3, 5, 7],  # 1 3 4' 2'
        [2, 4, 6, 8],  # 2 4 3' 1'
        [2, 4, 6],  # 2 4 3'
        [3, 4, 7],  # 3 4 2'
    ]
