import pytest
from hypothesis import given, strategies as st

from mealygroup.expr import WordSyntaxError
from mealygroup.group import commutator, conjugate, reduce_word


def test_commutator_convention(pi):
    a, c = pi.word("a"), pi.word("c")
    assert pi.parse("[a,c^-2]") == reduce_word(pi.parse("a^-1 c^2 a c^-2"))
    assert pi.parse("[a,c^-2]") == commutator(a, pi.word("c^-2"))


def test_powers_cancel(pi):
    assert pi.parse("a^3 a^-3") == ()
    assert pi.parse("1") == () and pi.parse("e") == ()


def test_conjugation(pi):
    assert pi.parse("d^a") == pi.parse("a^-1 d a")
    assert pi.parse("d^(a^-1)") == conjugate(pi.word("d"), pi.word("a^-1"))
    assert pi.parse("d^a^-1") == pi.parse("a^-1 d^-1 a")  # (d^a)^-1


def test_nested(pi):
    w = pi.parse("[d^(a^-1), bd^-1c^-1]")
    x, y = pi.parse("a d a^-1"), pi.parse("b d^-1 c^-1")
    assert w == commutator(x, y)
    assert pi.parse("(ab)^2") == pi.parse("abab")


@pytest.mark.parametrize("text", ["", "a^", "[a,b", "(ab", "x", "a²", "a^-", "[a]", "a)"])
def test_syntax_errors(pi, text):
    with pytest.raises(WordSyntaxError):
        pi.parse(text)


def test_error_position(pi):
    with pytest.raises(WordSyntaxError) as err:
        pi.parse("ab q")
    assert err.value.position == 3


@given(st.lists(st.sampled_from([2, -2, 3, -3, 4, -4, 5, -5]), max_size=12).map(reduce_word))
def test_render_parse(pi, w):
    assert pi.parse(pi.render(w)) == w
