"""TAUCACHE file format: round-trips, atomicity, strict parse errors."""

import os

import pytest

from tauprimes.cache import default_cache_path, read_cache, write_cache
from tauprimes.errors import (
    CacheMalformedError,
    CacheTruncatedError,
    CacheVersionError,
)
from tauprimes.series import delta_series

GOOD = "TAUCACHE 1\n3\n1 1\n2 -24\n3 252\n"


def write_text(path, text):
    with open(path, "w", newline="") as fh:
        fh.write(text)


def test_round_trip(tmp_path):
    table = delta_series(300)
    path = tmp_path / "t.cache"
    write_cache(table, path)
    assert read_cache(path).coeffs == table.coeffs


def test_round_trip_large_is_byte_identical(table100k, cache_file_100k, tmp_path):
    again = read_cache(cache_file_100k)
    assert again.coeffs == table100k.coeffs
    second = tmp_path / "second.cache"
    write_cache(again, second)
    assert second.read_bytes() == cache_file_100k.read_bytes()


def test_exact_layout(tmp_path):
    path = tmp_path / "t.cache"
    write_cache(delta_series(3), path)
    assert path.read_bytes() == GOOD.encode()


def test_no_temp_files_left(tmp_path):
    path = tmp_path / "t.cache"
    write_cache(delta_series(10), path)
    assert sorted(p.name for p in tmp_path.iterdir()) == ["t.cache"]


def test_read_good(tmp_path):
    path = tmp_path / "t.cache"
    write_text(path, GOOD)
    table = read_cache(path)
    assert table.limit == 3 and table[2] == -24


def test_missing_final_newline_accepted(tmp_path):
    path = tmp_path / "t.cache"
    write_text(path, GOOD[:-1])
    assert read_cache(path).limit == 3


@pytest.mark.parametrize(
    "text,exc,line",
    [
        ("", CacheMalformedError, 1),
        ("TAUCACHE\n1\n1 1\n", CacheMalformedError, 1),
        ("NOPE 1\n1\n1 1\n", CacheMalformedError, 1),
        ("TAUCACHE 2\n1\n1 1\n", CacheVersionError, 1),
        ("TAUCACHE 1\n", CacheTruncatedError, 2),
        ("TAUCACHE 1\nx\n1 1\n", CacheMalformedError, 2),
        ("TAUCACHE 1\n0\n", CacheMalformedError, 2),
        ("TAUCACHE 1\n3\n1 1\n2 -24\n", CacheTruncatedError, 5),
        ("TAUCACHE 1\n1\n1 1\n2 -24\n", CacheMalformedError, 4),
        ("TAUCACHE 1\n1\n1 1\n\n", CacheMalformedError, 4),
        ("TAUCACHE 1\n2\n1 1\n2 -24 9\n", CacheMalformedError, 4),
        ("TAUCACHE 1\n2\n1 1\n2 x\n", CacheMalformedError, 4),
        ("TAUCACHE 1\n2\n1 1\n3 252\n", CacheMalformedError, 4),
        ("TAUCACHE 1\n2\n1 1\r\n2 -24\n", CacheMalformedError, 3),
        ("TAUCACHE 1\n1\n1 7\n", CacheMalformedError, 3),
    ],
)
def test_read_errors(tmp_path, text, exc, line):
    path = tmp_path / "bad.cache"
    write_text(path, text)
    with pytest.raises(exc) as einfo:
        read_cache(path)
    assert einfo.value.line == line
    assert f"line {line}" in str(einfo.value)


def test_missing_file(tmp_path):
    with pytest.raises(OSError):
        read_cache(tmp_path / "absent.cache")


def test_default_cache_path(monkeypatch, tmp_path):
    monkeypatch.delenv("TAUPRIMES_CACHE_DIR", raising=False)
    assert default_cache_path() is None
    monkeypatch.setenv("TAUPRIMES_CACHE_DIR", str(tmp_path))
    assert default_cache_path() == tmp_path / "taucache.txt"
