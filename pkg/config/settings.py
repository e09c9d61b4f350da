"""
Uygulama Konfigürasyon Ayarları

Grup inşası, katalog doğrulaması, otoizoklinizm araması ve çıktı ayarları.
"""

import os
from dataclasses import dataclass, field


def _threads_from_env() -> int:
    """AUTOCOMM_THREADS ortam değişkeninden iş parçacığı sayısını okur."""
    raw = os.environ.get('AUTOCOMM_THREADS', '1')
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


@dataclass
class GroupSettings:
    """Cayley tablosu tabanlı grup ayarları"""
    # Grup inşası için güvenlik sınırı
    size_limit: int = 10080
    # all_subgroups ve Aut(K) sayımı için katalog ölçeği
    subgroup_order_cap: int = 48
    aut_order_cap: int = 48
    # Minimal üreteç kümesi aramasında denenecek en büyük küme
    max_generators: int = 3
    # Aut(K) çapraz kontrolü: tüm bijeksiyonlar bu mertebeye kadar taranır
    bijection_scan_limit: int = 8
    # Bu mertebeye kadar birleşme özelliği tüm üçlülerde kontrol edilir
    exhaustive_associativity_limit: int = 24


@dataclass
class CatalogSettings:
    """Doğrulama kataloğu ayarları"""
    default_max_order: int = 24
    hard_max_order: int = 48
    default_catalog: tuple = (
        'C1', 'C2', 'C3', 'C4', 'C5', 'C6', 'C7', 'C8',
        'C9', 'C10', 'C11', 'C12', 'C13', 'C14', 'C15', 'C16',
        'D4', 'D6', 'Q8', 'S3', 'S4', 'A4',
        'C2xC2', 'C2xC4', 'C3xC3', 'C2xC2xC2', 'C3xC4',
    )
    # gcd(|K1|, |K2|) = 1 çarpım kontrolleri; çarpım mertebesi hard_max_order ile sınırlı
    coprime_pairs: tuple = (('C3', 'C4'), ('S3', 'C5'))


@dataclass
class AutoisoclinismSettings:
    """Otoizoklinizm arama bütçesi"""
    max_quotient_order: int = 16
    max_aut_order: int = 48


@dataclass
class OutputSettings:
    """Log ve rapor ayarları"""
    log_dir: str = 'logs'
    log_file: str = 'autocomm.log'
    results_log: str = 'logs/autocomm_results.log'
    default_report_path: str = 'reports/verification.json'
    report_version: str = '1.0.0'
    # Ondalık gösterim sadece ekran içindir
    decimal_places: int = 6


@dataclass
class RuntimeSettings:
    """Paralellik ayarları"""
    threads: int = field(default_factory=_threads_from_env)


@dataclass
class Settings:
    """Ana konfigürasyon sınıfı"""
    group: GroupSettings = field(default_factory=GroupSettings)
    catalog: CatalogSettings = field(default_factory=CatalogSettings)
    autoiso: AutoisoclinismSettings = field(default_factory=AutoisoclinismSettings)
    output: OutputSettings = field(default_factory=OutputSettings)
    runtime: RuntimeSettings = field(default_factory=RuntimeSettings)


# Global konfigürasyon instance'ı
settings = Settings()
