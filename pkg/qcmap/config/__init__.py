"""Run configuration loading"""

from qcmap.config.loader import build_run_config, load_run_config

__all__ = ['build_run_config', 'load_run_config']
