from dataclasses import dataclass
from itertools import permutations
from typing import List, Tuple

from algebra_models.errors import DomainError, check_index


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Элемент S_kappa в однострочной записи: images[j-1] = sigma(j).
    Печатается как "[2 1]".
    """

    images: Tuple[int, ...]

    def __post_init__(self):
        images = tuple(int(v) for v in self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise DomainError(f"{list(images)} is not a permutation of 1..{len(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, kappa: int) -> "Permutation":
        return cls(tuple(range(1, kappa + 1)))

    @classmethod
    def all(cls, kappa: int) -> List["Permutation"]:
        """Все kappa! перестановок в лексикографическом порядке"""
        return [cls(p) for p in permutations(range(1, kappa + 1))]

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        return cls(tuple(int(v) for v in text.strip().strip("[]").replace(",", " ").split()))

    @property
    def kappa(self) -> int:
        return len(self.images)

    def __call__(self, j: int) -> int:
        return self.images[j - 1]

    def compose_right(self, i: int) -> "Permutation":
        """sigma o tau_i: образы в позициях i и i+1 меняются местами"""
        check_index("transposition", i, 1, self.kappa - 1)
        images = list(self.images)
        images[i - 1], images[i] = images[i], images[i - 1]
        return Permutation(tuple(images))

    def ascent(self, i: int) -> bool:
        """sigma(i) < sigma(i+1)"""
        return self.images[i - 1] < self.images[i]

    def shift(self) -> "Permutation":
        """tau_kappa sigma = sigma o tau_1 o ... o tau_{kappa-1}"""
        result = self
        for j in range(1, self.kappa):
            result = result.compose_right(j)
        return result

    def unshift(self) -> "Permutation":
        result = self
        for j in range(self.kappa - 1, 0, -1):
            result = result.compose_right(j)
        return result

    def __str__(self) -> str:
        return "[" + " ".join(str(v) for v in self.images) + "]"
