import itertools

from hypothesis import given, strategies as st

from barlang.barstring import (BarLetter, alpha_equivalent, apply_transposition_string, canonical_form,
                               clean_form, format_bar_string, free_names, is_clean, is_closed, parse_bar_string,
                               unbind)
from barlang.nominal import Transposition
from support import POOL, all_bar_strings, bs, closure_partition

letters = st.builds(BarLetter, st.sampled_from(POOL), st.booleans())
bar_strings = st.lists(letters, max_size=7).map(tuple)


def test_parse_and_format_round_trip():
    w = bs("a b |c a b")
    assert w == (BarLetter("a"), BarLetter("b"), BarLetter("c", True), BarLetter("a"), BarLetter("b"))
    assert format_bar_string(w) == "a b |c a b"
    assert parse_bar_string(["a", "|b a"]) == bs("a |b a")
    assert bs("") == ()


def test_free_names():
    assert free_names(bs("a b |c a b")) == {"a", "b"}
    assert free_names(()) == frozenset()
    assert free_names(bs("|b a")) == {"a"}
    assert free_names(bs("|a a")) == frozenset()
    assert free_names(bs("a |a a")) == {"a"}


def test_is_clean():
    assert is_clean(bs("a b |c c b"))
    assert not is_clean(bs("a b |a a b"))
    assert is_clean(())
    assert not is_clean(bs("|a |a"))


def test_unbind():
    assert unbind(bs("a b |c a b")) == ("a", "b", "c", "a", "b")
    assert unbind(bs("|a |b")) == ("a", "b")
    assert unbind(()) == ()


def test_transposition_on_strings():
    assert apply_transposition_string(Transposition("a", "b"), bs("a |b a")) == bs("b |a b")
    assert apply_transposition_string(Transposition("a", "c"), ()) == ()
    assert apply_transposition_string(Transposition("a", "b"), bs("c c")) == bs("c c")


def test_canonical_form_examples():
    assert canonical_form(bs("a b |c c b")) == bs("a b |a a b")
    assert canonical_form(bs("|a |b")) == bs("|a |a")
    assert canonical_form(bs("a b |c a b")) == bs("a b |c a b")


def test_alpha_equivalence_examples():
    assert alpha_equivalent(bs("a b |a a b"), bs("a b |c c b"))
    assert not alpha_equivalent(bs("a b |c a b"), bs("a b |a a b"))
    assert not alpha_equivalent(bs("a b |c c b"), bs("a p |c c p"))
    assert alpha_equivalent(bs("|a |b"), bs("|a |a"))
    # the relation is not a congruence: prefixes cannot be renamed independently
    assert alpha_equivalent(bs("|a"), bs("|b"))
    assert not alpha_equivalent(bs("|a a"), bs("|b a"))


def test_clean_form_examples():
    for text in ("a b |a a b", "|a |a", "a b c"):
        w = bs(text)
        c = clean_form(w)
        assert is_clean(c) and alpha_equivalent(c, w)
    assert clean_form(bs("a b c")) == bs("a b c")
    assert clean_form(bs("|a"), avoid={"a", "b"}) == bs("|c")


@given(bar_strings)
def test_canonical_form_is_idempotent_and_equivalent(w):
    c = canonical_form(w)
    assert canonical_form(c) == c
    assert alpha_equivalent(c, w)
    assert free_names(c) == free_names(w)


@given(bar_strings, st.sampled_from(POOL + ("d",)), st.sampled_from(POOL + ("d",)))
def test_alpha_equivalence_is_equivariant(w, a, b):
    t = Transposition(a, b)
    c = canonical_form(w)
    assert alpha_equivalent(apply_transposition_string(t, w), apply_transposition_string(t, c))


@given(bar_strings, st.frozensets(st.sampled_from(("a", "b", "d", "e"))))
def test_clean_form_properties(w, avoid):
    c = clean_form(w, avoid)
    assert is_clean(c)
    assert alpha_equivalent(c, w)
    assert not ({x.name for x in c if x.bound} & avoid)


def test_free_names_are_alpha_invariant():
    class_of, classes = closure_partition(4)
    for cls in classes:
        assert len({free_names(u) for u in cls}) == 1


def test_unbind_is_injective_on_closed_clean_strings():
    seen = {}
    for w in all_bar_strings(5):
        if is_closed(w) and is_clean(w):
            u = unbind(w)
            assert seen.setdefault(u, w) == w


def test_canonical_form_matches_closure_up_to_length_4():
    class_of, classes = closure_partition(4)
    for cls in classes:
        forms = {canonical_form(u) for u in cls}
        assert len(forms) == 1
    by_form = {}
    for w, k in class_of.items():
        assert by_form.setdefault(canonical_form(w), k) == k


def test_equivalent_strings_share_the_letter_kinds():
    for w1, w2 in itertools.product(all_bar_strings(2), repeat=2):
        if alpha_equivalent(w1, w2):
            assert [x.bound for x in w1] == [x.bound for x in w2]
