"""
Yardımcı Fonksiyonlar Modülü

Asal sayı yardımcıları (deneme bölmesi), kesir biçimlendirme ve dizin
işlemleri.
"""

from fractions import Fraction
from pathlib import Path
from typing import Optional

from config.settings import settings


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def smallest_prime_divisor(n: int) -> Optional[int]:
    """
    n'yi bölen en küçük asal (deneme bölmesi).

    Returns:
        Asal bölen; n = 1 ise None
    """
    if n < 2:
        return None
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def format_rational(value: Fraction, with_decimal: bool = False) -> str:
    """
    Kesri "pay/payda" olarak yazar.

    Example:
        >>> format_rational(Fraction(1, 4))
        '1/4'
        >>> format_rational(Fraction(1, 4), with_decimal=True)
        '1/4 (0.250000)'
    """
    text = f"{value.numerator}/{value.denominator}"
    if with_decimal:
        # Sadece gösterim amaçlı
        text += f" ({float(value):.{settings.output.decimal_places}f})"
    return text


def ensure_directory_exists(directory: str) -> None:
    """Dizinin var olduğundan emin olur, yoksa oluşturur."""
    Path(directory).mkdir(parents=True, exist_ok=True)
