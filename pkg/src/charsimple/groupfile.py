"""Plain-text group files.

Line one is ``degree N``; every following non-comment line is one generator
given as ``N`` space-separated 0-based images.  ``#`` starts a comment.
"""

from __future__ import annotations

from pathlib import Path

from .perm import GeneratedGroup, Permutation


class GroupFileError(ValueError):
    pass


def parse_group(text: str, name: str | None = None) -> GeneratedGroup:
    degree = None
    gens = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if degree is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "degree":
                raise GroupFileError(f"line {lineno}: expected 'degree N', got {raw!r}")
            try:
                degree = int(parts[1])
            except ValueError:
                raise GroupFileError(f"line {lineno}: bad degree {parts[1]!r}") from None
            if degree < 1:
                raise GroupFileError(f"line {lineno}: degree must be positive")
            continue
        try:
            images = [int(x) for x in line.split()]
        except ValueError:
            raise GroupFileError(f"line {lineno}: non-integer image") from None
        if len(images) != degree:
            raise GroupFileError(f"line {lineno}: expected {degree} images, got {len(images)}")
        try:
            gens.append(Permutation(images))
        except ValueError as exc:
            raise GroupFileError(f"line {lineno}: {exc}") from None
    if degree is None:
        raise GroupFileError("missing 'degree N' header")
    return GeneratedGroup(degree, gens, name=name)


def format_group(group: GeneratedGroup, comment: str | None = None) -> str:
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"degree {group.degree}")
    lines.extend(" ".join(map(str, g.images)) for g in group.generators)
    return "\n".join(lines) + "\n"


def read_group(path, name: str | None = None) -> GeneratedGroup:
    path = Path(path)
    return parse_group(path.read_text(encoding="utf-8"), name=name or path.stem)


def write_group(path, group: GeneratedGroup, comment: str | None = None) -> None:
    Path(path).write_text(format_group(group, comment), encoding="utf-8")
