import random

import pytest

from fanramsey.certificates import (decode_coloring, encode_coloring, read_certificate,
                                    verify_certificate, write_certificate)
from fanramsey.coloring import BLUE, RED, Coloring, new_complete
from fanramsey.constructions import fan_fan_extremal, pentagon, star_fan_extremal
from fanramsey.detectors import contains_mono
from fanramsey.errors import BadChar, BadMagic, BadN, BadRowLength
from fanramsey.patterns import clique, fan, star
from fanramsey.search.rules import ForbidRule


def test_encode_red_triangle():
    assert encode_coloring(new_complete(3, RED)) == "ramsey-coloring v1\nn=3\nR\nRR\n"


def test_encode_pentagon():
    body = encode_coloring(pentagon()).splitlines()[2:]
    assert [len(line) for line in body] == [1, 2, 3, 4]
    text = "".join(body)
    assert text.count("R") == 5 and text.count("B") == 5


def test_encode_orientation():
    # row i, column j is edge (j, i)
    c = Coloring.from_red_edges(4, [(1, 3)])
    assert encode_coloring(c).splitlines()[2:] == ["B", "BB", "BRB"]


def test_roundtrip_fan_fan_extremal():
    c = fan_fan_extremal(3)
    assert decode_coloring(encode_coloring(c)) == c


def test_roundtrip_random():
    rng = random.Random(1)
    for _ in range(500):
        c = Coloring.random(rng.randint(2, 21), rng)
        assert decode_coloring(encode_coloring(c, ["note"])) == c


def test_single_vertex_roundtrip():
    c = new_complete(1)
    assert decode_coloring(encode_coloring(c)) == c


def test_decode_tolerates_comments_and_trailing_space():
    text = "ramsey-coloring v1\nn=3\n# hello\nR  \n# mid\nBR\t\n"
    c = decode_coloring(text)
    assert c.color(0, 1) is RED and c.color(0, 2) is BLUE and c.color(1, 2) is RED


def test_decode_valid_file_invariants():
    c = decode_coloring("ramsey-coloring v1\nn=3\nB\nRB\n")
    for v in range(3):
        assert c.degree(v, RED) + c.degree(v, BLUE) == 2


def test_bad_magic():
    with pytest.raises(BadMagic) as info:
        decode_coloring("ramsey v1\nn=3\nR\nRR\n")
    assert info.value.line == 1


@pytest.mark.parametrize("head", ["n = 3", "n=", "n=x", "N=3", "n=0", "n=65"])
def test_bad_n(head):
    with pytest.raises(BadN):
        decode_coloring(f"ramsey-coloring v1\n{head}\nR\nRR\n")


def test_bad_row_length_names_line():
    with pytest.raises(BadRowLength) as info:
        decode_coloring("ramsey-coloring v1\nn=4\n# c\nR\nRRR\nRRR\n")
    assert info.value.line == 5


def test_missing_rows():
    with pytest.raises(BadRowLength):
        decode_coloring("ramsey-coloring v1\nn=4\nR\nRR\n")


def test_extra_rows():
    with pytest.raises(BadRowLength):
        decode_coloring("ramsey-coloring v1\nn=2\nR\nRR\n")


def test_bad_char_location():
    with pytest.raises(BadChar) as info:
        decode_coloring("ramsey-coloring v1\nn=3\nR\nRX\n")
    assert (info.value.line, info.value.col) == (4, 2)


def test_file_roundtrip(tmp_path):
    path = tmp_path / "c.txt"
    write_certificate(path, star_fan_extremal(4), ["star-fan n=4"])
    assert read_certificate(path) == star_fan_extremal(4)
    assert path.read_text().endswith("\n")


def test_verify_star_fan_extremal():
    rules = [ForbidRule(RED, star(3)), ForbidRule(BLUE, fan(3))]
    assert verify_certificate(encode_coloring(star_fan_extremal(3)), rules).passed


def test_verify_fan_fan_extremal():
    rules = [ForbidRule(RED, fan(3)), ForbidRule(BLUE, fan(3))]
    assert verify_certificate(fan_fan_extremal(3), rules).passed


def test_verify_fail_reports_witness():
    rep = verify_certificate(new_complete(3, RED), [ForbidRule(RED, clique(3))])
    assert not rep.passed
    assert rep.witness.vertices == (0, 1, 2)
    assert rep.violated == ForbidRule(RED, clique(3))
    assert "FAIL" in rep.summary()


def test_verify_path(tmp_path):
    path = tmp_path / "c.txt"
    write_certificate(path, pentagon())
    assert verify_certificate(path, [ForbidRule(RED, clique(3))]).passed


def test_verify_oversized_pattern_passes():
    assert verify_certificate(star_fan_extremal(1), [ForbidRule(BLUE, fan(1))]).passed


def test_verifier_agrees_with_detectors():
    rng = random.Random(4)
    rules = [ForbidRule(RED, fan(2)), ForbidRule(BLUE, clique(3))]
    for _ in range(200):
        c = Coloring.random(7, rng)
        some = any(contains_mono(c, r.color, r.pattern) for r in rules)
        assert verify_certificate(c, rules).passed == (not some)


def test_decode_error_propagates():
    with pytest.raises(BadMagic):
        verify_certificate("garbage\n", [ForbidRule(RED, fan(2))])
