"""Interpretations of words inside morphism images, and synchronization tests.

An interpretation of u is a triple (s, w, t) with w in the language and
image(w) = s·u·t; it is minimal when s is shorter than the image of w's
first letter and t shorter than the image of its last letter.  Checking
pairs against minimal interpretations suffices for admissibility and for
weak/strong synchronization, because any witnessing split survives trimming
w down to its minimal core.
"""

from dataclasses import dataclass
from functools import lru_cache

from .errors import PreconditionError
from .language import _language_at_least, require_member
from .system import DF0LSystem
from .words import Word, occurrences


@dataclass(frozen=True)
class Interpretation:
    s: Word
    w: Word
    t: Word


@dataclass(frozen=True)
class PairSplit:
    left: Word
    right: Word


@dataclass(frozen=True)
class WordSyncReport:
    synchronized: bool
    split_at: int | None
    vacuous: bool


def interpretation_length_bounds(system: DF0LSystem, u) -> tuple[int, int]:
    """Possible lengths of w in a minimal interpretation of u: the image of w
    must cover u, and the interior letters of w map strictly inside u."""
    system.require_pdf0l()
    if not u:
        raise PreconditionError("interpretations are defined for non-empty words")
    phi = system.morphism
    lo = -(-len(u) // phi.max_image_len)
    hi = max(1, 2 + (len(u) - 2) // phi.min_image_len)
    return lo, hi


@lru_cache(maxsize=1 << 17)
def _minimal_interpretations(system: DF0LSystem, u: Word) -> tuple[Interpretation, ...]:
    phi = system.morphism
    lo, hi = interpretation_length_bounds(system, u)
    fs = _language_at_least(system, hi)
    found = []
    for n in range(max(1, lo), hi + 1):
        for w in fs.words_of_length(n):
            image = phi.apply(w)
            if len(image) < len(u):
                continue
            first_len = len(phi.image(w[0]))
            last_len = len(phi.image(w[-1]))
            for pos in occurrences(u, image):
                t_len = len(image) - pos - len(u)
                if pos < first_len and t_len < last_len:
                    found.append(Interpretation(image[:pos], w, image[pos + len(u):]))
    key = system.alphabet.word_key
    found.sort(key=lambda i: (key(i.s), key(i.w), key(i.t)))
    return tuple(dict.fromkeys(found))


def minimal_interpretations(system: DF0LSystem, u) -> list[Interpretation]:
    """All minimal interpretations of u, deduplicated, in canonical order."""
    u = require_member(system, u)
    if not u:
        raise PreconditionError("interpretations are defined for non-empty words")
    return list(_minimal_interpretations(system, u))


@lru_cache(maxsize=1 << 17)
def _prefix_offsets(system: DF0LSystem, w: Word) -> dict:
    """Map |image(prefix)| -> prefix length, for every prefix of w.

    Image lengths are strictly increasing along prefixes of a non-erasing
    morphism, so the map is injective and a compatible split is unique.
    """
    phi = system.morphism
    out = {0: 0}
    acc = 0
    for i, letter in enumerate(w, 1):
        acc += len(phi.image(letter))
        out[acc] = i
    return out


def compatible_split(system: DF0LSystem, interp: Interpretation,
                     left, right) -> PairSplit | None:
    """The unique split (w', w'') of interp.w with image(w') = s·left and
    image(w'') = right·t, if it exists."""
    system.require_pdf0l()
    left = system.alphabet.check_word(left)
    right = system.alphabet.check_word(right)
    phi = system.morphism
    image = phi.apply(interp.w)
    u = image[len(interp.s):len(image) - len(interp.t)]
    if left + right != u:
        raise PreconditionError("left·right must equal the interpreted word")
    index = _prefix_offsets(system, interp.w).get(len(interp.s) + len(left))
    if index is None:
        return None
    return PairSplit(interp.w[:index], interp.w[index:])


def is_admissible(system: DF0LSystem, left, right) -> bool:
    """True iff some minimal interpretation of left·right admits a compatible split."""
    left, right = tuple(left), tuple(right)
    u = require_member(system, left + right)
    if not u:
        raise PreconditionError("the pair must concatenate to a non-empty word")
    interps = _minimal_interpretations(system, u)
    return any(len(i.s) + len(left) in _prefix_offsets(system, i.w) for i in interps)


def is_weakly_synchronizing(system: DF0LSystem, left, right) -> bool:
    """True iff every minimal interpretation of left·right admits a compatible split."""
    left, right = tuple(left), tuple(right)
    u = require_member(system, left + right)
    if not u:
        raise PreconditionError("the pair must concatenate to a non-empty word")
    interps = _minimal_interpretations(system, u)
    return all(len(i.s) + len(left) in _prefix_offsets(system, i.w) for i in interps)


def is_weakly_synchronized(system: DF0LSystem, u) -> WordSyncReport:
    """Whether some split position of u is weakly synchronizing.

    A word with no interpretation at all is vacuously synchronized; the
    report's vacuous flag lets callers tell the two cases apart.
    """
    u = require_member(system, u)
    if not u:
        raise PreconditionError("the empty word has no synchronization status")
    interps = _minimal_interpretations(system, u)
    if not interps:
        return WordSyncReport(True, 0, True)
    offsets = [(len(i.s), _prefix_offsets(system, i.w)) for i in interps]
    for k in range(len(u) + 1):
        if all(s_len + k in table for s_len, table in offsets):
            return WordSyncReport(True, k, False)
    return WordSyncReport(False, None, False)


def strong_sync_letter(system: DF0LSystem, left, right) -> str | None:
    """The letter certifying strong synchronization of (left, right), if any.

    Every minimal interpretation must admit a compatible split whose left
    part is non-empty and ends with one common letter.  With zero
    interpretations the pair is vacuously synchronizing; the first alphabet
    letter is reported.
    """
    left, right = tuple(left), tuple(right)
    if not left:
        raise PreconditionError("the left part of a strong pair must be non-empty")
    u = require_member(system, left + right)
    interps = _minimal_interpretations(system, u)
    if not interps:
        return system.alphabet.letters[0]
    letters = set()
    for i in interps:
        index = _prefix_offsets(system, i.w).get(len(i.s) + len(left))
        if not index:
            return None
        letters.add(i.w[index - 1])
        if len(letters) > 1:
            return None
    return letters.pop()


def is_strongly_synchronizing(system: DF0LSystem, left, right) -> bool:
    return strong_sync_letter(system, left, right) is not None


def clear_interpretation_cache():
    _minimal_interpretations.cache_clear()
    _prefix_offsets.cache_clear()
