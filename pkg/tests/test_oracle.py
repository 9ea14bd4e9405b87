import itertools
import random

import pytest

from barlang.barnfa import compile_rbe, enumerate_literal
from barlang.barstring import alpha_equivalent, canonical_form, is_closed, unbind
from barlang.oracle import (NamePool, alpha_closure, alpha_equal_recursive, alpha_representatives, bar_member,
                            bar_refines, brute_inclusion, d_member, d_operator, n_operator, random_rbe)
from support import all_bar_strings, bs, closure_partition, nfa


def test_alpha_closure_examples():
    assert alpha_closure(bs("|a"), "ab") == {bs("|a"), bs("|b")}
    assert bs("a b |c c b") in alpha_closure(bs("a b |a a b"), "abc")
    assert alpha_closure(bs("a b c"), "abc") == {bs("a b c")}


def test_alpha_closure_needs_a_scratch_name():
    # these two are only connected through a third name
    w1, w2 = bs("|a |b b a"), bs("|b |a a b")
    assert w2 not in alpha_closure(w1, "ab", scratch=0)
    assert w2 in alpha_closure(w1, "ab")


def test_alpha_closure_requires_pool_names():
    with pytest.raises(ValueError):
        alpha_closure(bs("d"), "abc")
    with pytest.raises(ValueError):
        NamePool(())


def test_n_operator_examples():
    pool = "abc"
    assert n_operator([bs("|a |b")], pool) == {(x, y) for x in pool for y in pool if x != y}
    assert n_operator([bs("a b")], pool) == {("a", "b")}
    assert n_operator([], pool) == set()


def test_d_operator_examples():
    assert d_operator([bs("|a |b")], "ab") == {tuple(p) for p in ("aa", "ab", "ba", "bb")}
    assert d_operator([bs("|a |b a")], "ab") == {("a", "b", "a"), ("b", "a", "b")}
    assert d_operator([bs("a b")], "ab") == {("a", "b")}


def test_d_operator_on_larger_pools():
    pool = "abcd"
    assert d_operator([bs("|a |b")], pool) == set(itertools.product(pool, repeat=2))
    assert d_operator([bs("|a |b a")], pool) == {(x, y, x) for x in pool for y in pool if x != y}


def test_bar_refines():
    assert bar_refines(bs("a b"), bs("a |b"))
    assert not bar_refines(bs("a |b"), bs("a b"))
    w = bs("a |b c")
    assert bar_refines(w, w)
    assert not bar_refines(bs("a b"), bs("a |c"))


def test_refinement_is_monotone_for_d():
    pool = "abcd"
    for w in all_bar_strings(3, "abc"):
        for i, x in enumerate(w):
            if not x.bound:
                w2 = w[:i] + (x._replace(bound=True),) + w[i + 1:]
                assert bar_refines(w, w2)
                assert d_operator([w], pool) <= d_operator([w2], pool)


def test_closure_agrees_with_canonical_form_on_length_4():
    class_of, classes = closure_partition(4)
    for w, k in class_of.items():
        assert alpha_closure(w, "abc") == classes[k]
    for w1, w2 in itertools.product(list(all_bar_strings(2)), repeat=2):
        assert (class_of[w1] == class_of[w2]) == alpha_equivalent(w1, w2)


def test_recursive_alpha_check_agrees_with_closure():
    class_of, _ = closure_partition(3)
    words = list(class_of)
    for w1 in words:
        for w2 in words:
            if len(w1) == len(w2):
                assert alpha_equal_recursive(w1, w2) == (class_of[w1] == class_of[w2])


def test_representatives_are_the_closure():
    for w in all_bar_strings(3):
        assert alpha_representatives(w, "abcd") == alpha_closure(w, "abcd")


def test_representatives_up_to_renaming():
    reps = alpha_representatives(bs("|a |b a"), "abcdef", fixed=set())
    # one orbit per equality pattern: c d c with c != d
    assert {unbind(r) for r in reps} == {("a", "b", "a")}
    with pytest.raises(ValueError):
        alpha_representatives(bs("x"), "abx", fixed={"a"})


def test_membership_helpers():
    words = [bs("|a |b a")]
    assert d_member(("c", "d", "c"), words)
    assert not d_member(("c", "c", "c"), words)
    assert bar_member(bs("|x |y x"), words)
    assert not bar_member(bs("|x |x x"), words)


def test_brute_inclusion_examples():
    A1, A2 = nfa("(a + |a)*"), nfa("|a*")
    assert brute_inclusion(A1, A2, "bar", 3) == bs("a")
    assert brute_inclusion(A1, A2, "local", 4) is None
    assert brute_inclusion(A2, A2, "bar", 4) is None
    assert brute_inclusion(nfa("|a |b"), nfa("|a |b a"), "local", 3) is not None
    with pytest.raises(ValueError):
        brute_inclusion(A1, A2, "global", 2)


def test_local_inclusion_matches_refinement_on_small_languages():
    """D(L1) <= D(L2) iff every w in L1 refines into some w' alpha-in L2."""
    rng = random.Random(9)
    for _ in range(15):
        A1 = compile_rbe(random_rbe(rng, 2))
        A2 = compile_rbe(random_rbe(rng, 2))
        L1, L2 = enumerate_literal(A1, 3), enumerate_literal(A2, 3)
        names = set(A1.names) | set(A2.names)
        pool = sorted(names) + ["x", "y", "z", "zz"][: 4]
        lhs = d_operator(L1, pool) <= d_operator(L2, pool)
        canon2 = {canonical_form(v) for v in L2}

        def refinements(w):
            for flips in itertools.product((False, True), repeat=len(w)):
                yield tuple(x._replace(bound=x.bound or f) for x, f in zip(w, flips))

        rhs = all(any(canonical_form(v) in canon2 for v in refinements(w)) for w in L1)
        assert lhs == rhs, (str(A1), str(A2))


def test_n_is_injective_on_closed_languages():
    classes = {}
    for w in all_bar_strings(3, "ab"):
        if is_closed(w):
            classes.setdefault(canonical_form(w), w)
    reps = list(classes.values())
    pool = "abcd"
    images = [n_operator([w], pool) for w in reps]
    # nonempty and pairwise disjoint images make N injective on every union of classes
    assert all(images)
    for i, j in itertools.combinations(range(len(images)), 2):
        assert not images[i] & images[j], (reps[i], reps[j])
