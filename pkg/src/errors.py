"""
Hata Sınıfları

Tüm modüllerin fırlattığı isimli hatalar. Doğrulama hataları ihlal eden
eleman ya da üçlüyü hem mesajda hem de öznitelik olarak taşır.
"""

from typing import Optional, Tuple


class AutocommError(Exception):
    """Paketin temel hata sınıfı"""


# --- Cayley tablosu doğrulama ---

class NotClosed(AutocommError):
    def __init__(self, message: str, cell: Optional[Tuple[int, int]] = None):
        super().__init__(message)
        self.cell = cell


class NotAssociative(AutocommError):
    def __init__(self, triple: Tuple[int, int, int]):
        a, b, c = triple
        super().__init__(f"table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")
        self.triple = triple


class NoIdentity(AutocommError):
    pass


class NoInverse(AutocommError):
    def __init__(self, element: int, label: Optional[str] = None):
        shown = label if label is not None else str(element)
        super().__init__(f"element {shown} has no two-sided inverse")
        self.element = element


class NotASubgroup(AutocommError):
    pass


class SizeLimitExceeded(AutocommError):
    pass


class SearchBudgetExceeded(SizeLimitExceeded):
    pass


class UnknownSpec(AutocommError):
    pass


class NotNormal(AutocommError):
    pass


class NotContained(AutocommError):
    pass


# --- Olasılık ve doğrulama ---

class HypothesisViolated(AutocommError):
    def __init__(self, message: str, element: Optional[int] = None):
        super().__init__(message)
        self.element = element


class TrivialAutGroup(AutocommError):
    pass


class DegenerateInstance(AutocommError):
    pass


class NotAChain(AutocommError):
    pass


class IllDefinedMap(AutocommError):
    pass


# --- Komut satırı ---

class ParseError(AutocommError):
    def __init__(self, message: str, position: Optional[int] = None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class UnknownLabel(AutocommError):
    pass


class NotASubgroupSpec(AutocommError):
    pass
