#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
Words, cyclic words and presentations

A letter is stored as a signed integer code: generator id ``g`` with sign
``s`` becomes ``s * (g + 1)``. Inversion is negation, which keeps free
reduction and rotation arithmetic cheap.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Sequence, Tuple, Union

from ..errors import EmptyRelatorError, PresentationError


def letter_code(generator: int, sign: int = 1) -> int:
    """Encode generator id and sign as a signed code"""
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    return sign * (generator + 1)


def code_generator(code: int) -> int:
    return abs(code) - 1


def code_sign(code: int) -> int:
    return 1 if code > 0 else -1


@dataclass(frozen=True)
class Generator:
    """A named generator"""
    id: int
    name: str

    def to_dict(self) -> Dict[str, Any]:
        return {'id': self.id, 'name': self.name}


@dataclass(frozen=True)
class Letter:
    """A generator occurrence with a sign"""
    generator: int
    sign: int = 1

    def __post_init__(self):
        if self.generator < 0:
            raise ValueError(f"generator id must be non-negative, got {self.generator}")
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    @property
    def code(self) -> int:
        return letter_code(self.generator, self.sign)

    @classmethod
    def from_code(cls, code: int) -> "Letter":
        return cls(code_generator(code), code_sign(code))

    def inverse(self) -> "Letter":
        return Letter(self.generator, -self.sign)


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters, not necessarily reduced"""
    codes: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(code == 0 for code in self.codes):
            raise ValueError("letter code 0 is not valid")

    @classmethod
    def from_letters(cls, letters: Iterable[Letter]) -> "Word":
        return cls(tuple(letter.code for letter in letters))

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> "Word":
        return cls(tuple(codes))

    @property
    def letters(self) -> List[Letter]:
        return [Letter.from_code(code) for code in self.codes]

    def __len__(self) -> int:
        return len(self.codes)

    def __iter__(self) -> Iterator[int]:
        return iter(self.codes)

    def __getitem__(self, item: Union[int, slice]) -> Union[int, "Word"]:
        if isinstance(item, slice):
            return Word(self.codes[item])
        return self.codes[item]

    def __add__(self, other: "Word") -> "Word":
        return Word(self.codes + other.codes)

    def __pow__(self, n: int) -> "Word":
        if n >= 0:
            return Word(self.codes * n)
        return Word(self.inverse().codes * (-n))

    def inverse(self) -> "Word":
        return Word(tuple(-code for code in reversed(self.codes)))

    def is_empty(self) -> bool:
        return not self.codes

    def is_freely_reduced(self) -> bool:
        return all(a != -b for a, b in zip(self.codes, self.codes[1:]))

    def is_cyclically_reduced(self) -> bool:
        if not self.is_freely_reduced():
            return False
        return len(self.codes) < 2 or self.codes[0] != -self.codes[-1]

    def generators_used(self) -> List[int]:
        return sorted({code_generator(code) for code in self.codes})

    def exponent_sums(self, rank: int) -> List[int]:
        """Signed letter count per generator"""
        sums = [0] * rank
        for code in self.codes:
            sums[code_generator(code)] += code_sign(code)
        return sums

    def rotate(self, offset: int) -> "Word":
        if not self.codes:
            return self
        offset %= len(self.codes)
        return Word(self.codes[offset:] + self.codes[:offset])


def minimal_rotation(codes: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically least rotation of a code sequence"""
    if not codes:
        return ()
    codes = tuple(codes)
    return min(codes[i:] + codes[:i] for i in range(len(codes)))


@dataclass(frozen=True, eq=False)
class CyclicWord:
    """A word read cyclically; equality is up to rotation only"""
    representative: Word

    @classmethod
    def from_codes(cls, codes: Iterable[int]) -> "CyclicWord":
        return cls(Word(tuple(codes)))

    @property
    def codes(self) -> Tuple[int, ...]:
        return self.representative.codes

    @property
    def freely_reduced(self) -> bool:
        return self.representative.is_freely_reduced()

    @property
    def cyclically_reduced(self) -> bool:
        return self.representative.is_cyclically_reduced()

    def __len__(self) -> int:
        return len(self.representative)

    def canonical(self) -> Tuple[int, ...]:
        return minimal_rotation(self.representative.codes)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CyclicWord):
            return NotImplemented
        return len(self) == len(other) and self.canonical() == other.canonical()

    def __hash__(self) -> int:
        return hash(self.canonical())

    def inverse(self) -> "CyclicWord":
        return CyclicWord(self.representative.inverse())

    def equal_up_to_inversion(self, other: "CyclicWord") -> bool:
        """Rotation-equal to other or to its inverse"""
        return self == other or self == other.inverse()

    def rotations(self) -> List[Word]:
        return [self.representative.rotate(i) for i in range(len(self))]

    def letter_at(self, position: int) -> int:
        return self.codes[position % len(self.codes)]


@dataclass(frozen=True)
class Presentation:
    """Generators plus relators read as cyclic words"""
    generators: Tuple[Generator, ...]
    relators: Tuple[CyclicWord, ...] = ()
    _names: Dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        names: Dict[str, int] = {}
        for index, generator in enumerate(self.generators):
            if generator.id != index:
                raise PresentationError(
                    f"generator ids must be dense 0..k-1, found {generator.id} at {index}")
            if not generator.name:
                raise PresentationError("generator names must be nonempty")
            if generator.name in names:
                raise PresentationError(f"duplicate generator name '{generator.name}'")
            names[generator.name] = index
        for index, relator in enumerate(self.relators):
            if len(relator) == 0:
                raise EmptyRelatorError(f"relator {index} is empty")
            for code in relator.codes:
                if code_generator(code) >= len(self.generators):
                    raise PresentationError(
                        f"relator {index} uses generator id {code_generator(code)} out of range")
        object.__setattr__(self, '_names', names)

    @classmethod
    def build(cls, names: Sequence[str], relators: Iterable[Sequence[int]] = ()) -> "Presentation":
        """Build from generator names and relator code sequences"""
        generators = tuple(Generator(i, name) for i, name in enumerate(names))
        return cls(generators, tuple(CyclicWord.from_codes(r) for r in relators))

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def names(self) -> List[str]:
        return [g.name for g in self.generators]

    @property
    def immersed(self) -> Tuple[bool, ...]:
        """Per-relator cyclic-reducedness flag"""
        return tuple(r.cyclically_reduced for r in self.relators)

    def generator_id(self, name: str) -> int:
        return self._names[name]

    def has_generator(self, name: str) -> bool:
        return name in self._names

    def relator_lengths(self) -> List[int]:
        return [len(r) for r in self.relators]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary"""
        return {
            'generators': [g.to_dict() for g in self.generators],
            'relators': [
                {
                    'letters': [[code_generator(c), code_sign(c)] for c in r.codes],
                    'freely_reduced': r.freely_reduced,
                    'immersed': r.cyclically_reduced,
                }
                for r in self.relators
            ],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "Presentation":
        """Create from dictionary"""
        generators = tuple(Generator(int(g['id']), str(g['name'])) for g in data['generators'])
        relators = tuple(
            CyclicWord(Word.from_letters(Letter(int(g), int(s)) for g, s in r['letters']))
            for r in data.get('relators', [])
        )
        return cls(generators, relators)
