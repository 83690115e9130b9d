"""Line-oriented text formats for posets and automorphisms.

Poset files:
    elem <label>              one element (ranks inferred for the file)
    elem <label> rank <k>     one element with an explicit rank
    cover <lower> <upper>     one cover pair
    # ...                     comment to end of line; blank lines ignored

Either every element carries a rank or none does.  Labels are single
whitespace-free tokens and may not contain '#'.

Automorphism files hold lines `map <from> <to>`; elements that never
appear as a source are fixed.
"""

from __future__ import annotations

from .errors import InputError
from .poset import (
    Poset,
    PosetAutomorphism,
    RankAssignment,
    automorphism,
    classify_ranks,
    closure_from_covers,
    infer_ranks,
)


def _tokens(text: str):
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield ln, line.split()


def parse_poset_text(text: str):
    """Parse a poset file into (Poset, RankAssignment).

    Rank axioms are not enforced here (validate() reports them); structural
    problems such as cycles or unknown labels are rejected.
    """
    labels: list = []
    ranks: dict = {}
    bare: list = []
    covers: list = []
    for ln, toks in _tokens(text):
        if toks[0] == "elem":
            if len(toks) == 2:
                labels.append(toks[1])
                bare.append(toks[1])
            elif len(toks) == 4 and toks[2] == "rank":
                try:
                    k = int(toks[3])
                except ValueError:
                    raise InputError(f"line {ln}: rank {toks[3]!r} is not an integer") from None
                if k < 0:
                    raise InputError(f"line {ln}: rank must be nonnegative")
                labels.append(toks[1])
                ranks[toks[1]] = k
            else:
                raise InputError(
                    f"line {ln}: expected 'elem <label>' or 'elem <label> rank <k>'"
                )
        elif toks[0] == "cover":
            if len(toks) != 3:
                raise InputError(f"line {ln}: expected 'cover <lower> <upper>'")
            covers.append((toks[1], toks[2]))
        else:
            raise InputError(f"line {ln}: unknown directive {toks[0]!r}")
    if ranks and bare:
        raise InputError(
            f"either all elements carry ranks or none: {bare[0]!r} has no rank"
        )
    poset = closure_from_covers(labels, covers)
    if ranks:
        return poset, classify_ranks(poset, ranks)
    return poset, infer_ranks(poset)


def format_poset_text(poset: Poset, ranks: RankAssignment) -> str:
    lines = [f"elem {lab} rank {ranks.rank(lab)}" for lab in poset.labels]
    lines += [f"cover {a} {b}" for a, b in poset.covers_labels()]
    return "\n".join(lines) + "\n"


def parse_aut_text(text: str, poset: Poset, ranks: RankAssignment) -> PosetAutomorphism:
    """Parse an automorphism file against its companion poset."""
    image: dict = {}
    targets: set = set()
    for ln, toks in _tokens(text):
        if toks[0] != "map" or len(toks) != 3:
            raise InputError(f"line {ln}: expected 'map <from> <to>'")
        src, dst = toks[1], toks[2]
        for lab in (src, dst):
            if lab not in poset.index:
                raise InputError(f"line {ln}: unknown element {lab!r}")
        if src in image:
            raise InputError(f"line {ln}: duplicate source {src!r}")
        if dst in targets:
            raise InputError(f"line {ln}: duplicate target {dst!r}")
        image[src] = dst
        targets.add(dst)
    for lab in poset.labels:
        image.setdefault(lab, lab)
    return automorphism(poset, ranks, image)
