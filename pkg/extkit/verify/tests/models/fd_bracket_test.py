from extkit.verify.models.fd_bracket import FdBracket


def test_fd_bracket_ok__normalized():
    assert FdBracket(value=-2.0, scale=4.0).normalized == 0.5
    assert FdBracket(value=3j, scale=6.0).normalized == 0.5


def test_fd_bracket_ok__zero_scale():
    assert FdBracket(value=0.0, scale=0.0).normalized == 0.0
