"""Braid words, the Artin representation, and the braid-to-mapping-class map.

The Artin generator beta_i acts on the rank-n free group by

    beta_i: al_i -> al_{i+1}
            al_{i+1} -> al_{i+1}^-1 al_i al_{i+1}

(all other generators fixed). The representation is faithful, which
makes ``is_trivial_braid`` a decision procedure for the braid word
problem: a braid word is trivial iff its Artin action is the identity.

``psi_action`` sends beta_i to the pillar switching sigma_i of the
genus-n surface. On the z generators of the {y, z} basis every sigma_i
(i >= 1) acts by exactly the Artin substitution, so psi inherits
injectivity from the Artin map; ``verify_artin_restriction`` certifies
that diagram generator by generator.

Braid text grammar: whitespace-separated tokens ``b<k>`` with optional
``^-1``, rightmost letter acting first, plus a strand count. Far
commutation is taken for |i-j| >= 2, the index gap at which the twist
regions of beta_i and beta_j are disjoint.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from random import Random
from typing import Optional

from .endos import FreeEndomorphism
from .errors import BasisMismatchError, NotZStableError, WordSyntaxError
from .pillars import (
    conjugate_to_yz,
    pillar_switching_action,
    pillar_switching_inverse,
    pillar_switching_yz,
)
from .reports import CheckCase, Mismatch, VerificationReport, case_from_endos
from .words import Basis, BasisKind, Family, Symbol, Word


@dataclass(frozen=True)
class BraidWord:
    """A word in the braid generators: signed indices, |k| < strands."""

    strands: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.strands < 1:
            raise ValueError(f"strand count must be >= 1, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) > self.strands - 1:
                raise ValueError(
                    f"braid letter {k} out of range for {self.strands} strands "
                    f"(indices run 1..{self.strands - 1})"
                )

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def __mul__(self, other: "BraidWord") -> "BraidWord":
        if not isinstance(other, BraidWord):
            return NotImplemented
        if other.strands != self.strands:
            raise ValueError("cannot multiply braid words on different strand counts")
        return BraidWord(self.strands, self.letters + other.letters)

    def free_reduce(self) -> "BraidWord":
        """Cancel adjacent inverse pairs (a correct move in the braid group)."""
        out: list[int] = []
        for k in self.letters:
            if out and out[-1] == -k:
                out.pop()
            else:
                out.append(k)
        return BraidWord(self.strands, tuple(out))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return format_braid_word(self)


_BRAID_TOKEN_RE = re.compile(r"b([0-9]+)(\^-1)?")


def parse_braid_word(text: str, strands: int) -> BraidWord:
    """Parse braid text; ``1`` denotes the empty braid."""
    if text.strip() == "1":
        return BraidWord(strands, ())
    letters = []
    for m in re.finditer(r"\S+", text):
        token, pos = m.group(0), m.start()
        tm = _BRAID_TOKEN_RE.fullmatch(token)
        if tm is None:
            raise WordSyntaxError(f"bad braid token {token!r}", pos)
        index = int(tm.group(1))
        if not 1 <= index <= strands - 1:
            raise WordSyntaxError(
                f"braid index {index} out of range for {strands} strands", pos
            )
        letters.append(-index if tm.group(2) else index)
    if not letters:
        raise WordSyntaxError('empty braid text (use "1" for the identity)', 0)
    return BraidWord(strands, tuple(letters))


def format_braid_word(b: BraidWord) -> str:
    if not b.letters:
        return "1"
    return " ".join(f"b{k}" if k > 0 else f"b{-k}^-1" for k in b.letters)


@lru_cache(maxsize=None)
def _artin_generator(index: int, strands: int, sign: int) -> FreeEndomorphism:
    basis = Basis.abstract(strands)
    a = basis.generator(f"al{index}")
    b = basis.generator(f"al{index + 1}")
    if sign > 0:
        images = {f"al{index}": b, f"al{index + 1}": b.inverse() * a * b}
    else:
        images = {f"al{index}": a * b * a.inverse(), f"al{index + 1}": a}
    return FreeEndomorphism.from_images(basis, images, fix_unlisted=True)


def artin_action(b: BraidWord, *, budget: Optional[int] = None) -> FreeEndomorphism:
    """The Artin automorphism of the rank-n free group, rightmost letter first."""
    result = FreeEndomorphism.identity(Basis.abstract(b.strands))
    for k in b.letters:
        result = result.compose(
            _artin_generator(abs(k), b.strands, 1 if k > 0 else -1), budget=budget
        )
    return result


def is_trivial_braid(b: BraidWord) -> bool:
    """Word problem: true iff the braid word represents the identity braid."""
    return artin_action(b).is_identity()


def psi_action(
    b: BraidWord, genus: Optional[int] = None, *, budget: Optional[int] = None
) -> FreeEndomorphism:
    """Image of a braid word under beta_i -> sigma_i, over the xy basis.

    Requires genus equal to the strand count (no implicit stabilization)
    and at least 2. Inverse letters use the certified switching inverses.
    """
    g = b.strands if genus is None else genus
    if g != b.strands:
        raise ValueError(
            f"psi needs genus equal to the strand count: got genus {g} "
            f"for {b.strands} strands"
        )
    if g < 2:
        raise ValueError(f"psi needs genus >= 2, got {g}")
    result = FreeEndomorphism.identity(Basis.xy(g))
    for k in b.letters:
        factor = (
            pillar_switching_action(k, g)
            if k > 0
            else pillar_switching_inverse(-k, g)
        )
        result = result.compose(factor, budget=budget)
    return result


def restrict_to_z(f: FreeEndomorphism) -> FreeEndomorphism:
    """Restrict a yz endomorphism to the subgroup on z_1..z_g, as al_1..al_g.

    Every z generator must map to a word in z letters only; otherwise a
    ``NotZStableError`` names the first offending generator and image.
    """
    if f.basis.kind is not BasisKind.YZ:
        raise BasisMismatchError(
            f"restrict_to_z expects a yz endomorphism, got one over {f.basis}"
        )
    g = f.basis.genus_or_rank
    abstract = Basis.abstract(g)
    images = []
    for i in range(1, g + 1):
        image = f.image_of(f"z{i}")
        codes = []
        for code in image.data:
            sym = Symbol.from_code(abs(code))
            if sym.family is not Family.Z:
                raise NotZStableError(f"z{i}", image)
            target = Symbol(Family.ALPHA, sym.index).code
            codes.append(target if code > 0 else -target)
        images.append(Word._reduced(abstract, tuple(codes)))
    return FreeEndomorphism(abstract, tuple(images))


def verify_psi_relations(genus: int) -> VerificationReport:
    """Braid relations among all switchings sigma_0 .. sigma_{g-1}.

    Checks sigma_i sigma_{i+1} sigma_i = sigma_{i+1} sigma_i sigma_{i+1}
    for 0 <= i <= g-2 and sigma_i sigma_j = sigma_j sigma_i for
    |i-j| >= 2, as exact endomorphism equalities over the xy basis.
    """
    if genus < 2:
        raise ValueError(f"pillar switchings need genus >= 2, got {genus}")
    sigma = [pillar_switching_action(i, genus) for i in range(genus)]
    cases = []
    for i in range(genus - 1):
        lhs = sigma[i].compose(sigma[i + 1]).compose(sigma[i])
        rhs = sigma[i + 1].compose(sigma[i]).compose(sigma[i + 1])
        cases.append(
            case_from_endos(f"braid-relation-sigma{i}-sigma{i + 1}", lhs, rhs)
        )
    for i in range(genus):
        for j in range(i + 2, genus):
            cases.append(
                case_from_endos(
                    f"commutation-sigma{i}-sigma{j}",
                    sigma[i].compose(sigma[j]),
                    sigma[j].compose(sigma[i]),
                )
            )
    return VerificationReport(genus, tuple(cases))


def verify_artin_restriction(genus: int) -> VerificationReport:
    """The injectivity diagram: psi restricted to the z subgroup is Artin.

    For each i, carries sigma_i to the yz basis, checks the substitution
    form against ``pillar_switching_yz``, then checks that the
    z-restriction equals the Artin action of beta_i.
    """
    if genus < 2:
        raise ValueError(f"the restriction diagram needs genus >= 2, got {genus}")
    cases = []
    for i in range(1, genus):
        yz_form = conjugate_to_yz(pillar_switching_action(i, genus))
        cases.append(
            case_from_endos(
                f"cor-2.1-yz-action-sigma{i}", yz_form, pillar_switching_yz(i, genus)
            )
        )
        name = f"thm-4.1-artin-restriction-beta{i}"
        try:
            restricted = restrict_to_z(yz_form)
        except NotZStableError as exc:
            cases.append(CheckCase(name, (Mismatch(exc.generator, exc.image, None),)))
            continue
        cases.append(
            case_from_endos(
                name, restricted, artin_action(BraidWord(genus, (i,)))
            )
        )
    return VerificationReport(genus, tuple(cases))


def random_braid_word(strands: int, length: int, rng: Random) -> BraidWord:
    """A uniformly random braid word (letters independent, both signs)."""
    if strands < 2 and length > 0:
        raise ValueError("a braid on fewer than 2 strands has no letters")
    letters = tuple(
        rng.randint(1, strands - 1) * rng.choice((1, -1)) for _ in range(length)
    )
    return BraidWord(strands, letters)


def insert_relations(b: BraidWord, moves: int, rng: Random) -> BraidWord:
    """An equivalent braid word: apply random identity-preserving moves.

    Moves insert canceling pairs, braid-relation relators
    (b_i b_{i+1} b_i b_{i+1}^-1 b_i^-1 b_{i+1}^-1) and far-commutation
    relators, or remove an adjacent canceling pair. The result represents
    the same braid group element as ``b``.
    """
    n = b.strands
    letters = list(b.letters)
    for _ in range(moves):
        move = rng.choice(("pair", "braid-rel", "far-comm", "remove"))
        pos = rng.randrange(len(letters) + 1)
        if move == "pair" and n >= 2:
            k = rng.randint(1, n - 1) * rng.choice((1, -1))
            letters[pos:pos] = [k, -k]
        elif move == "braid-rel" and n >= 3:
            i = rng.randint(1, n - 2)
            relator = [i, i + 1, i, -(i + 1), -i, -(i + 1)]
            if rng.random() < 0.5:
                relator = [-k for k in reversed(relator)]
            letters[pos:pos] = relator
        elif move == "far-comm" and n >= 4:
            i = rng.randint(1, n - 3)
            j = rng.randint(i + 2, n - 1)
            relator = [i, j, -i, -j]
            if rng.random() < 0.5:
                relator = [-k for k in reversed(relator)]
            letters[pos:pos] = relator
        elif move == "remove":
            for k in range(len(letters) - 1):
                if letters[k] == -letters[k + 1]:
                    del letters[k : k + 2]
                    break
    return BraidWord(n, tuple(letters))
