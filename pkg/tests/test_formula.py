import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from paracon import (
    And,
    CapExceededError,
    FormulaSet,
    Implies,
    Not,
    Or,
    ParseError,
    Var,
    build_universe,
    format_formula_set,
    parse,
    parse_formula_set,
    render,
    subformulas,
    variables,
)

P, Q, R = Var("p"), Var("q"), Var("r")


# -- parsing ----------------------------------------------------------------


def test_parse_precedence_implies_or():
    assert parse("p -> q | r") == Implies(P, Or(Q, R))


def test_parse_negation_binds_tightest():
    assert parse("~p & p") == And(Not(P), P)


def test_parse_implies_right_associative():
    assert parse("p -> q -> r") == Implies(P, Implies(Q, R))


def test_parse_and_or_left_associative():
    assert parse("p & q & r") == And(And(P, Q), R)
    assert parse("p | q | r") == Or(Or(P, Q), R)


def test_parse_and_binds_tighter_than_or():
    assert parse("p & q | r") == Or(And(P, Q), R)


def test_parse_parentheses_override():
    assert parse("p & (q | r)") == And(P, Or(Q, R))
    assert parse("(p -> q) -> r") == Implies(Implies(P, Q), R)


def test_parse_unicode_aliases():
    assert parse("¬p ∧ q") == And(Not(P), Q)
    assert parse("p ∨ q → r") == Implies(Or(P, Q), R)
    assert parse("!p") == Not(P)


def test_parse_long_identifiers():
    assert parse("_x1 -> Foo_bar") == Implies(Var("_x1"), Var("Foo_bar"))


@pytest.mark.parametrize(
    "text,position",
    [
        ("", 0),
        ("   ", 0),
        ("p &", 3),
        ("& p", 0),
        ("p # q", 2),
        ("(p | q", 6),
        ("p - q", 2),
        ("p q", 2),
        ("p -> (q))", 8),
    ],
)
def test_parse_errors_carry_positions(text, position):
    with pytest.raises(ParseError) as excinfo:
        parse(text)
    assert excinfo.value.position == position


def test_var_rejects_bad_names():
    with pytest.raises(ValueError):
        Var("")
    with pytest.raises(ValueError):
        Var("1p")
    with pytest.raises(ValueError):
        Var("p q")


# -- rendering --------------------------------------------------------------


def test_render_examples():
    assert render(And(Not(P), P)) == "~p & p"
    assert render(Implies(P, Or(Q, R))) == "p -> q | r"
    assert render(Or(And(P, Q), R)) == "p & q | r"


def test_render_inserts_needed_parens_only():
    assert render(And(Or(P, Q), R)) == "(p | q) & r"
    assert render(Implies(Implies(P, Q), R)) == "(p -> q) -> r"
    assert render(Implies(P, Implies(Q, R))) == "p -> q -> r"
    assert render(Not(And(P, Q))) == "~(p & q)"
    assert render(Not(Not(P))) == "~~p"
    assert render(And(P, And(Q, R))) == "p & (q & r)"


def _random_formula(rng, depth):
    kind = rng.choice("vnaoi") if depth else "v"
    if kind == "v":
        return Var(rng.choice(["p", "q", "r", "x_1", "Long_name9"]))
    if kind == "n":
        return Not(_random_formula(rng, depth - 1))
    left = _random_formula(rng, depth - 1)
    right = _random_formula(rng, depth - 1)
    return {"a": And, "o": Or, "i": Implies}[kind](left, right)


def test_round_trip_seeded_fuzz():
    rng = random.Random(99)
    for _ in range(2000):
        f = _random_formula(rng, rng.randint(0, 6))
        assert parse(render(f)) == f


formula_strategy = st.recursive(
    st.sampled_from(["p", "q", "r"]).map(Var),
    lambda inner: st.one_of(
        inner.map(Not),
        st.tuples(inner, inner).map(lambda t: And(*t)),
        st.tuples(inner, inner).map(lambda t: Or(*t)),
        st.tuples(inner, inner).map(lambda t: Implies(*t)),
    ),
    max_leaves=20,
)


@given(formula_strategy)
def test_round_trip_property(f):
    assert parse(render(f)) == f


@given(st.text(max_size=30))
def test_parser_total_on_arbitrary_text(text):
    try:
        parse(text)
    except ParseError:
        pass  # the only acceptable failure mode


@given(st.lists(st.sampled_from(["p", "q", "~", "&", "|", "->", "(", ")", " "]), max_size=12))
def test_parser_total_on_token_soup(pieces):
    try:
        parse("".join(pieces))
    except ParseError:
        pass


def test_parser_caps_hostile_nesting():
    deep = parse("~" * 100 + "p")
    assert parse(render(deep)) == deep
    for text in ("~" * 5000 + "p", "(" * 3000 + "p" + ")" * 3000, "p" + " -> p" * 4000):
        with pytest.raises(ParseError) as excinfo:
            parse(text)
        assert "nesting" in str(excinfo.value)


# -- variables / subformulas -------------------------------------------------


def test_variables():
    assert variables(And(P, Not(P))) == {"p"}
    assert variables(Implies(P, Or(Q, R))) == {"p", "q", "r"}
    assert variables(P) == {"p"}


def test_subformulas_preorder():
    f = Implies(P, Or(Q, R))
    assert list(subformulas(f)) == [f, P, Or(Q, R), Q, R]


# -- formula sets -------------------------------------------------------------


def test_formula_set_dedups_preserving_order():
    fs = FormulaSet([P, Q, P, Not(P), Q])
    assert fs.items == (P, Q, Not(P))
    assert P in fs and Not(Q) not in fs
    assert fs.render() == "{p, q, ~p}"


def test_formula_set_file_format():
    text = "# premises\np\n\n~p  \n# trailing comment\np | q\n"
    fs = parse_formula_set(text)
    assert fs.items == (P, Not(P), Or(P, Q))
    assert format_formula_set(fs) == "p\n~p\np | q\n"


def test_formula_set_file_reports_line():
    with pytest.raises(ParseError) as excinfo:
        parse_formula_set("p\nq &\n")
    assert "line 2" in str(excinfo.value)


# -- universes ----------------------------------------------------------------


def test_universe_no_flags():
    u = build_universe([P])
    assert u.items == (P,)
    assert u.falsum is None


def test_universe_negations_falsum_example():
    # Independently derived closure of {p, ~p} under subformulas, negations
    # and the falsum member.
    u = build_universe([P, Not(P)], ("subformulas", "negations", "with_falsum"))
    expected = {"p", "~p", "~~p", "p & ~p", "~(p & ~p)"}
    assert {render(f) for f in u} == expected
    assert u.falsum == And(P, Not(P))


def test_universe_conjunctions_example():
    u = build_universe([P, Q], ("conjunctions",))
    assert {render(f) for f in u} == {"p", "q", "p & q"}


def test_universe_falsum_uses_least_seed_variable():
    u = build_universe([Var("z"), Var("m")], ("with_falsum",))
    assert render(u.falsum) == "m & ~m"


def test_universe_closure_postconditions():
    # With the subformula flag, the whole universe is subformula-closed;
    # negation/conjunction additions only ever stack on closed members.
    rng = random.Random(5)
    for _ in range(25):
        seed = [_random_formula(rng, rng.randint(0, 3)) for _ in range(rng.randint(1, 4))]
        u = build_universe(seed, ("subformulas", "negations", "conjunctions", "with_falsum"))
        members = set(u.items)
        assert set(seed) <= members
        core = set()
        for f in [*seed, u.falsum]:
            core.update(subformulas(f))
        assert core <= members
        for f in core:
            assert Not(f) in members
        for f in core:
            for g in core:
                if f != g:
                    assert And(f, g) in members or And(g, f) in members


@pytest.mark.parametrize(
    "flags",
    [(), ("subformulas",), ("with_falsum",), ("subformulas", "with_falsum")],
)
def test_universe_idempotent_for_stable_flags(flags):
    rng = random.Random(17)
    for _ in range(20):
        seed = [_random_formula(rng, rng.randint(0, 3)) for _ in range(rng.randint(1, 4))]
        once = build_universe(seed, flags)
        twice = build_universe(once.items, flags)
        assert set(twice.items) == set(once.items)


def test_universe_rejects_unknown_flag_and_empty_seed():
    with pytest.raises(ValueError):
        build_universe([P], ("negation",))
    with pytest.raises(ValueError):
        build_universe([])


def test_universe_size_cap():
    seed = [Var(f"v{i}") for i in range(10)]
    with pytest.raises(CapExceededError):
        build_universe(seed, ("conjunctions",), max_size=20)
