"""Developing base cycles under a translation group.

Base cycles are written over display labels: plain integers "7", coordinate
pairs "(3,2)", and fixed points "inf", "inf1", ...  A GroupAction translates
labels; develop() pushes each base through every group element and keeps the
distinct canonical images, so short orbits (bases with nontrivial stabilizer,
including reflection coincidences) come out at their true size.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .core import canonical_cycle


def parse_label(label: str):
    if label.startswith("inf"):
        return ("inf",)
    if label.startswith("("):
        x, j = label[1:-1].split(",")
        return ("pair", int(x), int(j))
    return ("int", int(label))


def pair_label(x: int, j: int) -> str:
    return f"({x},{j})"


@dataclass(frozen=True)
class GroupAction:
    """Translation action on labels.

    cyclic(n, step): integer labels move by multiples of step mod n.
    pair_first(m): "(x,j)" labels move x mod m, j untouched.
    pair_both(m, t): "(x,j)" labels move both coordinates, x mod m, j mod t.
    "inf*" labels are fixed by every action.
    """

    kind: str
    modulus: tuple[int, ...]
    step: int = 1

    def __post_init__(self):
        if self.kind not in ("cyclic", "pair_first", "pair_both"):
            raise ValueError(f"unknown action kind {self.kind!r}")
        if self.kind == "pair_both" and len(self.modulus) != 2:
            raise ValueError("pair_both needs two moduli")

    def elements(self) -> list:
        if self.kind == "pair_both":
            m, t = self.modulus
            return [(a, b) for a in range(m) for b in range(t)]
        (n,) = self.modulus
        g = gcd(n, self.step) or n
        return list(range(0, n, g))

    def translate(self, label: str, g) -> str:
        atom = parse_label(label)
        if atom[0] == "inf":
            return label
        if self.kind == "cyclic":
            if atom[0] != "int":
                raise ValueError(f"cyclic action cannot move label {label!r}")
            (n,) = self.modulus
            return str((atom[1] + g) % n)
        if atom[0] != "pair":
            raise ValueError(f"{self.kind} action cannot move label {label!r}")
        _, x, j = atom
        if self.kind == "pair_first":
            (m,) = self.modulus
            return pair_label((x + g) % m, j)
        m, t = self.modulus
        return pair_label((x + g[0]) % m, (j + g[1]) % t)


def cyclic(n: int, step: int = 1) -> GroupAction:
    return GroupAction("cyclic", (n,), step)


def pair_first(m: int) -> GroupAction:
    return GroupAction("pair_first", (m,))


def pair_both(m: int, t: int) -> GroupAction:
    return GroupAction("pair_both", (m, t))


def orbit(base, action: GroupAction) -> list[tuple[str, ...]]:
    """Distinct canonical images of one base cycle under the whole action."""
    seen = dict()
    for g in action.elements():
        img = canonical_cycle(tuple(action.translate(lab, g) for lab in base))
        seen.setdefault(img, None)
    return list(seen)


def orbit_size(base, action: GroupAction) -> int:
    return len(orbit(base, action))


def develop(bases, action: GroupAction, expected_orbits=None) -> list[tuple[str, ...]]:
    """Concatenated orbits of every base.

    expected_orbits, when given, pins each orbit size; a mismatch means the
    base was transcribed wrong, so fail loudly rather than return garbage.
    """
    out: list[tuple[str, ...]] = []
    for i, base in enumerate(bases):
        images = orbit(base, action)
        if expected_orbits is not None and len(images) != expected_orbits[i]:
            raise ValueError(
                f"base {i} develops into {len(images)} cycles, expected {expected_orbits[i]}"
            )
        out.extend(images)
    return out


def action_from_dict(d: dict) -> GroupAction:
    return GroupAction(d["kind"], tuple(d["modulus"]), d.get("step", 1))


def action_to_dict(a: GroupAction) -> dict:
    d = {"kind": a.kind, "modulus": list(a.modulus)}
    if a.step != 1:
        d["step"] = a.step
    return d
