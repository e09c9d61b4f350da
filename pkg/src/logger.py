"""
Log Yönetimi Modülü

Uygulama loglarının kurulumu ve hesaplanan değerlerin sonuç dosyasına
eklenmesi.
"""

import logging
import sys
from datetime import datetime
from fractions import Fraction
from pathlib import Path
from typing import Optional

from config.settings import settings
from src.utils import format_rational


def setup_logging(level: int = logging.INFO) -> None:
    """
    Kök logger'ı dosya ve stderr handler'ları ile kurar.

    stdout yalnızca komut çıktısı içindir.
    """
    log_dir = Path(settings.output.log_dir)
    log_dir.mkdir(parents=True, exist_ok=True)
    logging.basicConfig(
        level=level,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=[
            logging.FileHandler(log_dir / settings.output.log_file, encoding='utf-8'),
            logging.StreamHandler(sys.stderr),
        ],
    )


class LogManager:
    """Sonuç log dosyası yönetim sınıfı"""

    def __init__(self, log_file: Optional[str] = None):
        """
        Args:
            log_file: Log dosyası yolu (varsayılan: settings.output.results_log)
        """
        self.log_path = Path(log_file or settings.output.results_log)
        self.log_path.parent.mkdir(parents=True, exist_ok=True)

    def log(self, message: str) -> None:
        """Mesajı zaman damgasıyla log dosyasına ekler."""
        timestamp = datetime.now().strftime("%Y-%m-%d %H:%M:%S")
        with open(self.log_path, 'a', encoding='utf-8') as f:
            f.write(f"[{timestamp}] {message}\n")

    def log_result(self, group: str, subgroup: str, g_label: str, value: Fraction) -> None:
        """
        Hesaplanan değeri loglar.

        Format: Pr_g(H, Aut(K)) = pay/payda
        """
        self.log(f"Pr_{g_label}({subgroup}, Aut({group})) = {format_rational(value)}")

    def log_summary(self, total_checks: int, counterexamples: int) -> None:
        """Doğrulama çalıştırmasının özetini ekler."""
        self.log('=' * 50)
        self.log(f"SUMMARY: {total_checks} checks, {counterexamples} counterexamples")
        self.log('=' * 50)
