"""Alphabets, morphisms, DF0L systems, and letter-growth analysis.

All objects here are immutable after construction and safe to share between
threads; every analysis is a pure function of its arguments.
"""

from dataclasses import dataclass

from .errors import ErasingMorphismError, InvalidSystemError, PreconditionError
from .words import Word


def _check_token(token):
    if not isinstance(token, str) or not token or any(c.isspace() for c in token):
        raise InvalidSystemError(f"bad letter token {token!r}")


class Alphabet:
    """Ordered set of letter tokens; declaration order is the canonical order."""

    __slots__ = ("letters", "_index")

    def __init__(self, letters):
        letters = tuple(letters)
        if not letters:
            raise InvalidSystemError("alphabet is empty")
        index = {}
        for token in letters:
            _check_token(token)
            if token in index:
                raise InvalidSystemError(f"duplicate letter {token!r}")
            index[token] = len(index)
        self.letters = letters
        self._index = index

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __contains__(self, token):
        return token in self._index

    def __eq__(self, other):
        return isinstance(other, Alphabet) and self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __repr__(self):
        return f"Alphabet({' '.join(self.letters)})"

    def index(self, token: str) -> int:
        try:
            return self._index[token]
        except KeyError:
            raise InvalidSystemError(f"unknown letter {token!r}") from None

    def check_word(self, word: Word) -> Word:
        word = tuple(word)
        for token in word:
            if token not in self._index:
                raise InvalidSystemError(f"unknown letter {token!r}")
        return word

    def word_key(self, word: Word):
        """Canonical order: length first, then lexicographic by declaration order."""
        return len(word), tuple(self._index[t] for t in word)

    def sort_words(self, words) -> list[Word]:
        return sorted(words, key=self.word_key)


class LetterMap:
    """Letter-to-word map applied homomorphically; source and target may differ."""

    __slots__ = ("images",)

    def __init__(self, images):
        out = {}
        for letter, image in images.items():
            _check_token(letter)
            image = tuple(image)
            for token in image:
                _check_token(token)
            out[letter] = image
        self.images = out

    def image(self, letter: str) -> Word:
        try:
            return self.images[letter]
        except KeyError:
            raise InvalidSystemError(f"no image for letter {letter!r}") from None

    def apply(self, word: Word) -> Word:
        out = []
        for letter in word:
            out.extend(self.image(letter))
        return tuple(out)

    @property
    def max_image_len(self) -> int:
        return max(len(w) for w in self.images.values())

    @property
    def min_image_len(self) -> int:
        return min(len(w) for w in self.images.values())

    def _key(self):
        return tuple(sorted(self.images.items()))

    def __eq__(self, other):
        return isinstance(other, LetterMap) and self._key() == other._key()

    def __hash__(self):
        return hash(self._key())


class Morphism(LetterMap):
    """Endomorphism of a fixed alphabet; images may be empty (erasing)."""

    __slots__ = ("alphabet", "_hash")

    def __init__(self, alphabet, images):
        if not isinstance(alphabet, Alphabet):
            alphabet = Alphabet(alphabet)
        missing = [letter for letter in alphabet if letter not in images]
        if missing:
            raise InvalidSystemError(f"no image for letter {missing[0]!r}")
        extra = set(images) - set(alphabet.letters)
        if extra:
            raise InvalidSystemError(f"image given for unknown letter {sorted(extra)[0]!r}")
        super().__init__({letter: images[letter] for letter in alphabet})
        for letter in alphabet:
            alphabet.check_word(self.images[letter])
        self.alphabet = alphabet
        self._hash = hash((alphabet.letters, tuple(self.images[a] for a in alphabet)))

    @property
    def is_nonerasing(self) -> bool:
        return all(self.images[a] for a in self.alphabet)

    def erasing_letters(self) -> tuple[str, ...]:
        return tuple(a for a in self.alphabet if not self.images[a])

    def require_nonerasing(self):
        if not self.is_nonerasing:
            bad = ", ".join(self.erasing_letters())
            raise ErasingMorphismError(f"morphism erases letters: {bad}")

    def apply_power(self, word: Word, k: int) -> Word:
        if k < 0:
            raise PreconditionError("power must be >= 0")
        word = tuple(word)
        for _ in range(k):
            word = self.apply(word)
        return word

    def power(self, k: int) -> "Morphism":
        if k < 1:
            raise PreconditionError("power must be >= 1")
        images = {a: self.images[a] for a in self.alphabet}
        for _ in range(k - 1):
            images = {a: self.apply(w) for a, w in images.items()}
        return Morphism(self.alphabet, images)

    def __eq__(self, other):
        return (isinstance(other, Morphism)
                and self.alphabet == other.alphabet
                and self.images == other.images)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        rules = ", ".join(f"{a}->{' '.join(self.images[a]) or 'ε'}" for a in self.alphabet)
        return f"Morphism({rules})"


class DF0LSystem:
    """A morphism together with a non-empty finite set of non-empty axiom words."""

    __slots__ = ("morphism", "axioms", "_hash")

    def __init__(self, morphism: Morphism, axioms):
        if not isinstance(morphism, Morphism):
            raise InvalidSystemError("morphism must be a Morphism")
        seen = set()
        canonical = []
        for axiom in axioms:
            axiom = morphism.alphabet.check_word(axiom)
            if not axiom:
                raise InvalidSystemError("axioms must be non-empty words")
            if axiom not in seen:
                seen.add(axiom)
                canonical.append(axiom)
        if not canonical:
            raise InvalidSystemError("axiom set is empty")
        self.morphism = morphism
        self.axioms = tuple(morphism.alphabet.sort_words(canonical))
        self._hash = hash((morphism, self.axioms))

    @property
    def alphabet(self) -> Alphabet:
        return self.morphism.alphabet

    @property
    def is_pdf0l(self) -> bool:
        return self.morphism.is_nonerasing

    def require_pdf0l(self):
        self.morphism.require_nonerasing()

    def power(self, k: int) -> "DF0LSystem":
        return power_system(self, k)

    def __eq__(self, other):
        return (isinstance(other, DF0LSystem)
                and self.morphism == other.morphism
                and self.axioms == other.axioms)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        axioms = ", ".join(" ".join(w) for w in self.axioms)
        return f"DF0LSystem({self.morphism!r}; axioms: {axioms})"


def power_system(system: DF0LSystem, k: int) -> DF0LSystem:
    """The k-th power: morphism taken to the k-th power, axioms closed under
    the first k-1 images so the factor language is preserved."""
    if k < 1:
        raise PreconditionError("power must be >= 1")
    phi = system.morphism
    axioms = [phi.apply_power(w, i) for w in system.axioms for i in range(k)]
    return DF0LSystem(phi.power(k), axioms)


@dataclass(frozen=True)
class ValidationReport:
    is_pdf0l: bool
    erasing_letters: tuple[str, ...]
    min_image_len: int
    max_image_len: int
    letter_count: int
    axiom_count: int


def validate(system: DF0LSystem) -> ValidationReport:
    """Report structural facts about an already-constructed system.

    Structural defects (duplicate letters, unknown letters, empty axioms)
    are rejected at construction time; this reports the semantic flags that
    gate the analyses, chiefly whether the morphism is non-erasing.
    """
    phi = system.morphism
    return ValidationReport(
        is_pdf0l=phi.is_nonerasing,
        erasing_letters=phi.erasing_letters(),
        min_image_len=phi.min_image_len,
        max_image_len=phi.max_image_len,
        letter_count=len(system.alphabet),
        axiom_count=len(system.axioms),
    )


def _reachability(morphism):
    # reach[a] = letters reachable from a in >= 1 step of the occurrence graph
    succ = {a: set(morphism.image(a)) for a in morphism.alphabet}
    reach = {a: set(s) for a, s in succ.items()}
    changed = True
    while changed:
        changed = False
        for a in reach:
            extra = set()
            for b in reach[a]:
                extra |= succ[b]
            if not extra <= reach[a]:
                reach[a] |= extra
                changed = True
    return reach


def unbounded_letters(morphism: Morphism) -> frozenset[str]:
    """Letters whose iterated image lengths are unbounded.

    A letter is unbounded iff it reaches (reflexively) a letter c that lies
    on a cycle of the occurrence graph and has |image(c)| >= 2: such a c
    re-occurs in its own iterated images, so lengths grow past any bound;
    conversely, when every reachable cyclic letter has a one-letter image,
    every long walk is trapped in a deterministic loop and lengths stall.
    Valid for non-erasing morphisms only.
    """
    morphism.require_nonerasing()
    reach = _reachability(morphism)
    heavy = {c for c in morphism.alphabet
             if c in reach[c] and len(morphism.image(c)) >= 2}
    return frozenset(a for a in morphism.alphabet
                     if a in heavy or reach[a] & heavy)


def invariant_exponent(morphism: Morphism) -> int:
    """Smallest multiple p of the alph-vector period with p >= the preperiod,
    so that alph(phi^p(a)) = alph(phi^(pk)(a)) for every letter a and k >= 1."""
    morphism.require_nonerasing()
    letters = morphism.alphabet.letters
    image_alph = {a: frozenset(morphism.image(a)) for a in letters}

    def step(vec):
        return tuple(frozenset().union(*(image_alph[b] for b in vec[i]))
                     for i, _ in enumerate(letters))

    vec = tuple(frozenset((a,)) for a in letters)
    seen = {vec: 0}
    k = 0
    while True:
        vec = step(vec)
        k += 1
        if vec in seen:
            preperiod = seen[vec]
            period = k - preperiod
            break
        seen[vec] = k
    p = period
    while p < max(preperiod, 1):
        p += period
    return p


def minimal_invariant_subalphabets(morphism: Morphism, p: int) -> list[frozenset[str]]:
    """Inclusion-minimal sets alph(phi^p(g)) over unbounded letters g."""
    morphism.require_nonerasing()
    if p < 1:
        raise PreconditionError("p must be >= 1")
    unbounded = unbounded_letters(morphism)
    if not unbounded:
        return []
    power = morphism.power(p)
    candidates = {frozenset(power.image(g)) for g in unbounded}
    minimal = [b for b in candidates if not any(c < b for c in candidates)]
    alphabet = morphism.alphabet
    minimal.sort(key=lambda b: (len(b), sorted(alphabet.index(t) for t in b)))
    return minimal


@dataclass(frozen=True)
class GrowthReport:
    bounded: tuple[str, ...]
    unbounded: tuple[str, ...]
    invariant_exponent: int
    minimal_invariant_subalphabets: tuple[tuple[str, ...], ...]


def classify_letters(morphism: Morphism) -> GrowthReport:
    """Bounded/unbounded split plus the invariant exponent and its minimal
    invariant subalphabets, in canonical order."""
    unbounded = unbounded_letters(morphism)
    p = invariant_exponent(morphism)
    subalphabets = minimal_invariant_subalphabets(morphism, p)
    letters = morphism.alphabet.letters
    return GrowthReport(
        bounded=tuple(a for a in letters if a not in unbounded),
        unbounded=tuple(a for a in letters if a in unbounded),
        invariant_exponent=p,
        minimal_invariant_subalphabets=tuple(
            tuple(a for a in letters if a in b) for b in subalphabets),
    )
