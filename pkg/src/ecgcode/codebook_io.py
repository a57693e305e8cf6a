"""JSON codebook files and CSV redundancy reports."""
from __future__ import annotations

import csv
import io
import json
import math
import os
from typing import IO, Iterable, Optional, Union

from .candidates import ConstraintSpec
from .ecg import AlphabetError, check_alphabet
from .edit_model import (ALPHABET, ProfileError, build_profile, format_eoi, format_quotas,
                         parse_eoi, parse_quotas)
from .generator import Codebook, baseline_redundancy, find_violation, redundancy

FORMAT_VERSION = 1
REPORT_HEADER = ("m", "n", "redundancy", "baseline", "gap")

PathLike = Union[str, "os.PathLike[str]"]


class CodebookFileError(ValueError):
    """Base class for unreadable or invalid codebook files."""


class MalformedFileError(CodebookFileError):
    pass


class VersionMismatchError(CodebookFileError):
    pass


class InvariantViolationError(CodebookFileError):
    pass


def to_document(book: Codebook, record_time: bool = False) -> dict:
    """Plain-dict form of ``book``; wall time is omitted unless asked for so
    that equal runs give equal files."""
    spec = book.constraint
    timing = {"steps": book.steps}
    if record_time:
        timing["seconds"] = round(book.elapsed, 6)
    return {
        "format_version": FORMAT_VERSION,
        "alphabet": ALPHABET,
        "correction": {
            "eoi": format_eoi(book.eoi),
            "targets": format_quotas(book.targets),
            "raw_check": book.raw_check,
        },
        "check": {"eoi": format_eoi(book.profile.eoi), "eq": format_quotas(book.profile.eq)},
        "constraint": None if spec is None else {
            "run": spec.run, "bal": spec.bal, "ctx_len": spec.ctx_len, "aug_len": spec.aug_len,
        },
        "n": book.n,
        "m": book.m,
        "redundancy": book.redundancy(),
        "baseline": baseline_redundancy(book.n) if book.n else None,
        "seed": book.seed,
        "timing": timing,
        "sequences": list(book.sequences),
    }


def dumps(book: Codebook, record_time: bool = False) -> str:
    return json.dumps(to_document(book, record_time), indent=2) + "\n"


def save(book: Codebook, path: PathLike, record_time: bool = False):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(book, record_time))


def from_document(doc: dict, verify: bool = False) -> Codebook:
    if not isinstance(doc, dict):
        raise MalformedFileError("codebook document must be a JSON object")
    version = doc.get("format_version")
    if version != FORMAT_VERSION:
        raise VersionMismatchError(f"format_version {version!r}, expected {FORMAT_VERSION}")
    try:
        if doc["alphabet"] != ALPHABET:
            raise MalformedFileError(f"unsupported alphabet {doc['alphabet']!r}")
        check = doc["check"]
        profile = build_profile(parse_eoi(check["eoi"]), parse_quotas(check["eq"]))
        corr = doc["correction"]
        eoi = parse_eoi(corr["eoi"]) if corr["eoi"] else ()
        targets = parse_quotas(corr["targets"]) if corr["targets"] else ()
        cons = doc.get("constraint")
        spec = None if cons is None else ConstraintSpec(
            int(cons["run"]), float(cons["bal"]), int(cons["ctx_len"]), int(cons["aug_len"]))
        sequences = doc["sequences"]
        n, m = int(doc["n"]), int(doc["m"])
        timing = doc.get("timing") or {}
    except (KeyError, TypeError, ProfileError) as exc:
        raise MalformedFileError(f"bad codebook document: {exc}") from exc
    except ValueError as exc:
        raise MalformedFileError(f"bad codebook document: {exc}") from exc
    if not isinstance(sequences, list) or not all(isinstance(s, str) for s in sequences):
        raise MalformedFileError("sequences must be a list of strings")
    if len(sequences) != m:
        raise InvariantViolationError(f"m={m} but {len(sequences)} sequences stored")
    for k, s in enumerate(sequences):
        try:
            check_alphabet(s, f"sequence {k}")
        except AlphabetError as exc:
            raise InvariantViolationError(str(exc)) from None
        if len(s) != n:
            raise InvariantViolationError(f"sequence {k} has length {len(s)}, expected n={n}")
    if len(set(sequences)) != len(sequences):
        raise InvariantViolationError("codebook contains duplicated sequences")
    book = Codebook(list(sequences), profile, eoi, targets, bool(corr.get("raw_check", False)), spec,
                    doc.get("seed"), int(timing.get("steps", 0)), float(timing.get("seconds", 0.0)))
    if verify:
        hit = find_violation(book.sequences, profile)
        if hit is not None:
            i, j, value = hit
            raise InvariantViolationError(
                f"sequence {i} can be edited into sequence {j} within quota (loss {value})")
    return book


def loads(text: str, verify: bool = False) -> Codebook:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedFileError(f"not JSON: {exc}") from exc
    return from_document(doc, verify)


def load(path: PathLike, verify: bool = False) -> Codebook:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), verify)


def report_row(book_or_m, n: Optional[int] = None) -> dict:
    """One comparison row: our redundancy against the closed-form baseline."""
    if isinstance(book_or_m, Codebook):
        m, n = book_or_m.m, book_or_m.n
    else:
        m = int(book_or_m)
    r = redundancy(n, m)
    base = baseline_redundancy(n)
    return {"m": m, "n": n, "redundancy": r, "baseline": base, "gap": base - r}


def write_report(rows: Iterable[dict], out: Optional[IO[str]] = None) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=REPORT_HEADER, lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow({k: _fmt(row[k]) for k in REPORT_HEADER})
    text = buf.getvalue()
    if out is not None:
        out.write(text)
    return text


def _fmt(value):
    if isinstance(value, float):
        return "nan" if math.isnan(value) else f"{value:.6g}"
    return value
