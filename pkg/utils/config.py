"""
Configuration utility for environment-based settings
Handles development vs production mode and the engine's numeric limits
"""

import logging
import os
from dotenv import load_dotenv

load_dotenv()


def _env_int(name, default):
    try:
        return int(os.getenv(name, str(default)))
    except ValueError:
        return default


class Config:
    """Central configuration manager"""

    @staticmethod
    def get_environment():
        """Get current environment (development or production)"""
        env = os.getenv("CF_ENVIRONMENT", "development").lower()
        return env if env in ["development", "production"] else "development"

    @staticmethod
    def is_development():
        return Config.get_environment() == "development"

    @staticmethod
    def is_debug():
        return Config.is_development() and os.getenv("CF_DEBUG", "false").lower() == "true"

    @staticmethod
    def get_log_level():
        """Logging level; DEBUG_MODE-style override in development"""
        if Config.is_debug():
            return logging.DEBUG
        name = os.getenv("CF_LOG_LEVEL", "WARNING").upper()
        level = logging.getLevelName(name)
        return level if isinstance(level, int) else logging.WARNING

    @staticmethod
    def get_max_steps():
        """Iteration cap for Hurwitz expansions"""
        return max(1, _env_int("CF_MAX_STEPS", 10000))

    @staticmethod
    def get_max_householder_order():
        return max(1, _env_int("CF_MAX_HOUSEHOLDER_ORDER", 64))

    @staticmethod
    def get_seed():
        return _env_int("CF_SEED", 0)

    @staticmethod
    def get_identity_trials():
        return max(1, _env_int("CF_IDENTITY_TRIALS", 50))

    @staticmethod
    def get_identity_max_k():
        return max(0, _env_int("CF_IDENTITY_MAX_K", 32))

    @staticmethod
    def get_bench_repeats():
        return max(1, _env_int("CF_BENCH_REPEATS", 3))

    @staticmethod
    def get_bench_workers():
        return max(1, _env_int("CF_BENCH_WORKERS", 1))

    @staticmethod
    def get_bench_ordering_min_m():
        """Largest-m threshold above which bench asserts fast < naive"""
        return _env_int("CF_BENCH_ORDERING_MIN_M", 10000)

    @staticmethod
    def record_timings():
        return os.getenv("CF_RECORD_TIMINGS", "false").lower() == "true"

    @staticmethod
    def get_config_summary():
        """Get configuration summary for logging"""
        return {
            "environment": Config.get_environment(),
            "max_steps": Config.get_max_steps(),
            "max_householder_order": Config.get_max_householder_order(),
            "seed": Config.get_seed(),
            "identity_trials": Config.get_identity_trials(),
            "bench_workers": Config.get_bench_workers(),
            "record_timings": Config.record_timings(),
        }
