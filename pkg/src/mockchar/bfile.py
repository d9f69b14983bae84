"""OEIS-style b-files and signed sequence files.

A b-file is a text file of "n value" lines with '#' comments and blank
lines ignored, indices strictly increasing and nonnegative.  Sequence
files use the same layout but may carry negative indices with explicit
signs.  Regression fixtures for a few Kronecker sequences ship with the
package under data/bfiles/.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path


class BFileFormatError(ValueError):
    pass


@dataclass(frozen=True)
class BFile:
    """Parsed (index, value) rows, strictly increasing in the index."""

    entries: tuple[tuple[int, int], ...]

    @property
    def offset(self) -> int:
        return self.entries[0][0] if self.entries else 0

    def __len__(self) -> int:
        return len(self.entries)

    def as_dict(self) -> dict[int, int]:
        return dict(self.entries)


def parse_bfile(text: str, allow_negative_indices: bool = False) -> BFile:
    entries: list[tuple[int, int]] = []
    last = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileFormatError(f"line {lineno}: expected 'n value', got {raw!r}")
        try:
            n, value = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise BFileFormatError(f"line {lineno}: {exc}") from None
        if n < 0 and not allow_negative_indices:
            raise BFileFormatError(f"line {lineno}: negative index {n} in a b-file")
        if last is not None and n <= last:
            raise BFileFormatError(f"line {lineno}: index {n} not increasing")
        last = n
        entries.append((n, value))
    return BFile(tuple(entries))


def serialize_bfile(bfile: BFile) -> str:
    return "".join(f"{n} {v}\n" for n, v in bfile.entries)


def load_bfile(path: str | Path, allow_negative_indices: bool = False) -> BFile:
    return parse_bfile(
        Path(path).read_text(encoding="utf-8"),
        allow_negative_indices=allow_negative_indices,
    )


def fixture_names() -> tuple[str, ...]:
    """Vendored regression b-files (paperfolding and small Kronecker rows)."""
    return ("b034947.txt", "b091338.txt", "b089509.txt", "b226162.txt")


def load_fixture(name: str) -> BFile:
    data = (
        resources.files("mockchar")
        .joinpath("data")
        .joinpath("bfiles")
        .joinpath(name)
        .read_text("utf-8")
    )
    return parse_bfile(data)


def fetch_bfile(sequence_id: str, timeout: float = 30.0) -> str:
    """Download a fresh b-file text from the OEIS.  Network access is only
    attempted when explicitly requested; tests never call this."""
    from urllib.request import urlopen

    seq = sequence_id.upper().lstrip("A")
    url = f"https://oeis.org/A{seq}/b{seq}.txt"
    with urlopen(url, timeout=timeout) as resp:  # noqa: S310 - explicit opt-in
        return resp.read().decode("utf-8")
