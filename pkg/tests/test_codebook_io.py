import json
from importlib import resources
from itertools import combinations

import pytest

from ecgcode import codebook_io
from ecgcode.candidates import ConstraintSpec
from ecgcode.generator import GenerationConfig, grow_codebook

from helpers import error_ball

GOLDEN = resources.files("ecgcode") / "data" / "golden_1sub1del_m16.json"


@pytest.fixture(scope="module")
def book():
    return grow_codebook(GenerationConfig(6, "sub,ins,del", (1, 0, 1),
                                          constraint=ConstraintSpec(3, 0.6, 6, 2), seed=4))


def test_roundtrip(book, tmp_path):
    path = tmp_path / "c.json"
    codebook_io.save(book, path)
    back = codebook_io.load(path, verify=True)
    assert back.sequences == book.sequences
    assert back.profile == book.profile
    assert (back.eoi, back.targets, back.constraint, back.seed, back.steps) == \
           (book.eoi, book.targets, book.constraint, book.seed, book.steps)
    assert codebook_io.dumps(back) == codebook_io.dumps(book)


def _doc(book):
    return json.loads(codebook_io.dumps(book))


def test_duplicate_is_rejected(book):
    doc = _doc(book)
    doc["sequences"][1] = doc["sequences"][0]
    with pytest.raises(codebook_io.InvariantViolationError):
        codebook_io.from_document(doc)


def test_distinct_error_classes(book):
    with pytest.raises(codebook_io.MalformedFileError):
        codebook_io.loads("{not json")
    doc = _doc(book)
    doc["format_version"] = 99
    with pytest.raises(codebook_io.VersionMismatchError):
        codebook_io.from_document(doc)
    doc = _doc(book)
    del doc["check"]
    with pytest.raises(codebook_io.MalformedFileError):
        codebook_io.from_document(doc)
    doc = _doc(book)
    doc["sequences"][0] = doc["sequences"][0][:-1] + "N"
    with pytest.raises(codebook_io.InvariantViolationError):
        codebook_io.from_document(doc)


def test_verify_catches_close_pair(book):
    doc = _doc(book)
    w = doc["sequences"][0]
    doc["sequences"][1] = w[:-1] + ("A" if w[-1] != "A" else "C")
    codebook_io.from_document(doc)
    with pytest.raises(codebook_io.InvariantViolationError):
        codebook_io.from_document(doc, verify=True)


def test_golden_file_verifies_independently():
    golden = codebook_io.load(GOLDEN, verify=True)
    assert golden.m == 16
    assert tuple(golden.profile.eq) == (2, 1, 1)
    balls = [error_ball(w, n_sub=1, n_del=1) for w in golden.sequences]
    assert not any(balls[i] & balls[j] for i, j in combinations(range(16), 2))


def test_time_only_when_requested(book):
    assert "seconds" not in _doc(book)["timing"]
    assert "seconds" in json.loads(codebook_io.dumps(book, record_time=True))["timing"]


def test_report_rows():
    row = codebook_io.report_row(16, 13)
    assert row["redundancy"] == 22
    assert row["baseline"] == pytest.approx(54.0044, abs=1e-3)
    assert row["gap"] == pytest.approx(32.0044, abs=1e-3)
    row = codebook_io.report_row(2, 5)
    assert (row["redundancy"], round(row["gap"], 1)) == (9, 31.2)
    row = codebook_io.report_row(1, 7)
    assert row["redundancy"] == 14 and row["gap"] == row["baseline"] - 14
    text = codebook_io.write_report([codebook_io.report_row(16, 13), codebook_io.report_row(2, 5)])
    lines = text.splitlines()
    assert lines[0] == "m,n,redundancy,baseline,gap"
    assert lines[1] == "16,13,22,54.0044,32.0044"
    assert all(len(line.split(",")) == 5 for line in lines)
