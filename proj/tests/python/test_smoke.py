import _carthom


def test_import():
    assert _carthom.__doc__
