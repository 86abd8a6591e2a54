"""Round-trip and malformed-input tests for eigenvalue files."""
import numpy as np
import pytest

from spikelr.eigio import (MAGIC, read_eig_file, read_eigs_csv, read_spk1,
                           write_spk1)
from spikelr.errors import DataFormatError


def test_spk1_round_trip(tmp_path):
    path = tmp_path / "cache.spk1"
    vecs = [np.array([3.0, 2.0, 1.0]), np.array([5.5]), np.arange(10.0)]
    assert write_spk1(path, vecs) == 3
    back = read_spk1(path)
    assert len(back) == 3
    for a, b in zip(vecs, back):
        np.testing.assert_array_equal(a, b)


def test_spk1_empty_container(tmp_path):
    path = tmp_path / "empty.spk1"
    assert write_spk1(path, []) == 0
    assert read_spk1(path) == []


def test_spk1_rejects_wrong_magic(tmp_path):
    path = tmp_path / "bogus.bin"
    path.write_bytes(b"NOPE" + b"\x00" * 12)
    with pytest.raises(DataFormatError):
        read_spk1(path)


def test_spk1_rejects_truncated_record(tmp_path):
    path = tmp_path / "cut.spk1"
    write_spk1(path, [np.arange(4.0)])
    data = path.read_bytes()
    path.write_bytes(data[:-8])  # drop one trailing value
    with pytest.raises(DataFormatError):
        read_spk1(path)


def test_csv_parse_and_error_location(tmp_path):
    path = tmp_path / "eigs.csv"
    path.write_text("# spectrum\n2.5\n\n1.25\n0.0\n")
    np.testing.assert_array_equal(read_eigs_csv(path),
                                  np.array([2.5, 1.25, 0.0]))
    bad = tmp_path / "bad.csv"
    bad.write_text("1.0\noops\n")
    with pytest.raises(DataFormatError, match=":2:"):
        read_eigs_csv(bad)
    empty = tmp_path / "none.csv"
    empty.write_text("# nothing here\n")
    with pytest.raises(DataFormatError):
        read_eigs_csv(empty)


def test_read_eig_file_sniffs_format(tmp_path):
    binary = tmp_path / "a.spk1"
    write_spk1(binary, [np.array([1.0, 0.5])])
    assert read_eig_file(binary)[0].tolist() == [1.0, 0.5]
    text = tmp_path / "a.csv"
    text.write_text("1.0\n0.5\n")
    assert read_eig_file(text)[0].tolist() == [1.0, 0.5]
    assert MAGIC == b"SPK1"
