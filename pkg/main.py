#!/usr/bin/env python3
"""
Genelleştirilmiş Otokomütasyon Olasılığı Araç Seti

Kullanım:
    python main.py compute --group D4 --subgroup r --g r^2
    python main.py distribution --group C3
    python main.py verify --max-order 24
    python main.py aut --group Q8 --list
    python main.py autoiso --group C3 --pair2-group C3
    python main.py catalog
"""

import sys
from pathlib import Path

PROJECT_ROOT = Path(__file__).parent
sys.path.insert(0, str(PROJECT_ROOT))

from src.cli import main


if __name__ == "__main__":
    sys.exit(main())
