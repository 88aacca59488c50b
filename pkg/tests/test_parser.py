import pytest

from fixedfield.parser import ParseError, expression_variables, format_ratfunc, parse_expr
from fixedfield.poly import VarTable, ratfunc_eq
from fixedfield.scalars import F2, F4, QQ, QZ3

X = VarTable(["x1", "x2", "x3"])


def test_basic_expressions():
    r = parse_expr("x1 + x2", X, QQ)
    assert ratfunc_eq(r, parse_expr("x2 + x1", X, QQ))
    r = parse_expr("(x1*x2^2 - 3*x1*x2*x3)/(x1^2 + x2^2)", X, QQ)
    assert str(r.den) == "x1^2+x2^2"
    assert ratfunc_eq(
        parse_expr("zeta3^2 + zeta3 + 1", X, QZ3), parse_expr("0", X, QZ3)
    )


def test_precedence_and_unary_minus():
    # '-' lives in base, so it binds before '^': -x1^2 == (-x1)^2
    assert ratfunc_eq(parse_expr("-x1^2", X, QQ), parse_expr("(-x1)^2", X, QQ))
    assert ratfunc_eq(parse_expr("0 - x1^2", X, QQ), -parse_expr("x1^2", X, QQ))
    assert ratfunc_eq(parse_expr("2*x1 + 3*x2*x3", X, QQ),
                      parse_expr("(2*x1) + ((3*x2)*x3)", X, QQ))
    assert ratfunc_eq(parse_expr("x1/x2/x3", X, QQ), parse_expr("x1/(x2*x3)", X, QQ))
    assert ratfunc_eq(parse_expr("--x1", X, QQ), parse_expr("x1", X, QQ))


def test_char2_minus_is_plus():
    assert ratfunc_eq(parse_expr("x1 - x2", X, F2), parse_expr("x1 + x2", X, F2))


def test_errors_carry_position():
    with pytest.raises(ParseError) as e:
        parse_expr("x1 + ", X, QQ)
    assert "position" in str(e.value)
    with pytest.raises(ParseError):
        parse_expr("x1 + x9", X, QQ)
    with pytest.raises(ParseError):
        parse_expr("x1 @ x2", X, QQ)
    with pytest.raises(ParseError):
        parse_expr("(x1 + x2", X, QQ)
    with pytest.raises(ParseError):
        parse_expr("x1 x2", X, QQ)


@pytest.mark.parametrize("field", [QQ, F2])
def test_zeta3_rejected_without_cube_root(field):
    with pytest.raises(ParseError):
        parse_expr("zeta3 + x1", X, field)


def test_zeta3_allowed_in_f4():
    r = parse_expr("zeta3*zeta3", X, F4)
    assert ratfunc_eq(r, parse_expr("zeta3 + 1", X, F4))


@pytest.mark.parametrize(
    "text,field",
    [
        ("x1 + x2", QQ),
        ("(x1*x2^2 - 3*x1*x2*x3)/(x1^2 + x2^2)", QQ),
        ("1/x1 + x2/x3 - 5/7", QQ),
        ("x1^4 - x2^4", F2),
        ("zeta3*x1 + (1 + zeta3)*x2", F4),
        ("(zeta3 - 1)*x1/(x2 - zeta3*x3)", QZ3),
        ("-x1 - (-x2)", QQ),
    ],
)
def test_round_trip(text, field):
    r = parse_expr(text, X, field)
    again = parse_expr(format_ratfunc(r), X, field)
    assert ratfunc_eq(r, again)


def test_expression_variables():
    assert expression_variables("x1*zeta3 + foo^2/(bar - 1)") == {"x1", "foo", "bar"}
