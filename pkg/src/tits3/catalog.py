"""Named constructions reachable from the command line.

A target string selects an algebra:

    cayley, quaternion, binarion, k     composition algebras
    s                                   (C^0, [., .]) of the split Cayley algebra
    h3:<inner>                          H3 over a composition algebra
    tits:<C>:<C'>                       T(C, H3(C'))
    b12                                 B(1,2)
    gamma:<N>, bgamma:<N>               O(1;N) and B(O(1;N), D, 0)
    bj, Bj:<N>                          (s (x) A) + d_{A,A} for A = B(1,2), B(O(1;N), D, 0)
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from .algebra import Superalgebra
from .altsuper import build_b12, build_b_gamma, build_divided_powers
from .char3 import assign_bj_grading, build_char3_superalgebra
from .composition import KIND_ALIASES, bracket_algebra, build_composition, restricted_norm
from .jordan import build_h3, tits_construction
from .scalars import GF3, GF7, Field, FieldError


class TargetError(ValueError):
    """Unknown or malformed target string."""


CHAR3_TARGETS = {"s", "b12", "gamma", "bgamma", "bj", "Bj"}


@dataclass
class Built:
    kind: str                # family name, e.g. "tits" or "Bj"
    algebra: Superalgebra
    extra: dict = dc_field(default_factory=dict)


def parse_target(target: str, n: int | None = None) -> tuple[str, list[str]]:
    parts = target.split(":")
    head = parts[0]
    if head.lower() in ("cayley", "quaternion", "binarion", "k", "s", "b12", "bj", "h3",
                        "tits", "gamma", "bgamma") and head != "Bj":
        head = head.lower()
    args = parts[1:]
    if head in ("gamma", "bgamma", "Bj"):
        if not args:
            if n is None:
                raise TargetError(f"{head} needs N (as {head}:<N> or --n)")
            args = [str(n)]
        if len(args) != 1 or not args[0].isdigit() or int(args[0]) < 1:
            raise TargetError(f"bad N in {target!r}")
    elif head == "h3":
        if len(args) != 1 or args[0] not in KIND_ALIASES:
            raise TargetError(f"h3 needs a composition algebra, e.g. h3:cayley (got {target!r})")
    elif head == "tits":
        if len(args) != 2 or any(a not in KIND_ALIASES for a in args):
            raise TargetError(f"tits needs two composition algebras, e.g. tits:cayley:k (got {target!r})")
    elif head in ("cayley", "quaternion", "binarion", "k", "s", "b12", "bj"):
        if args:
            raise TargetError(f"{head} takes no arguments")
    else:
        raise TargetError(f"unknown target {target!r}")
    return head, args


def default_field(target: str) -> Field:
    head = target.split(":")[0]
    return GF3 if (head in CHAR3_TARGETS or head.lower() in CHAR3_TARGETS) else GF7


def build_target(target: str, field: Field, n: int | None = None) -> Built:
    head, args = parse_target(target, n)
    if head in ("cayley", "quaternion", "binarion", "k"):
        C = build_composition(head, field)
        return Built("composition", C.algebra, {"composition": C})
    if head == "s":
        C = build_composition("cayley", field)
        return Built("s", bracket_algebra(C), {"composition": C, "norm": restricted_norm(C)})
    if head == "h3":
        J = build_h3(build_composition(args[0], field))
        return Built("jordan", J.algebra, {"jordan": J})
    if head == "tits":
        C = build_composition(args[0], field)
        J = build_h3(build_composition(args[1], field))
        tc = tits_construction(C, J)
        return Built("tits", tc.algebra, {"tits": tc})
    if head == "b12":
        return Built("b12", build_b12(field))
    if head == "gamma":
        G = build_divided_powers(int(args[0]), field)
        return Built("gamma", G.algebra, {"gamma": G})
    if head == "bgamma":
        B = build_b_gamma(build_divided_powers(int(args[0]), field))
        return Built("bgamma", B.algebra, {"bgamma": B})
    if field.char != 3:
        raise FieldError(f"{head} needs characteristic 3")
    C = build_composition("cayley", field)
    s, norm = bracket_algebra(C), restricted_norm(C)
    if head == "bj":
        c = build_char3_superalgebra(s, norm, build_b12(field), name="bj")
        return Built("bj", c.g, {"char3": c})
    N = int(args[0])
    B = build_b_gamma(build_divided_powers(N, field))
    c = build_char3_superalgebra(s, norm, B.algebra, name=f"Bj(1;{N}|7)")
    grading = assign_bj_grading(c)
    return Built("Bj", c.g, {"char3": c, "bgamma": B, "grading": grading, "N": N})
